//! The coefficient matrix `W` and its order-`n` minors.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::groebner::{divide_with_quotients, GroebnerBasis};
use crate::par::{self, Exec};
use crate::poly::Polynomial;

/// `n × r` matrix with `Σᵢ aᵢⱼ·gᵢ = fⱼ` for every column `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyMatrix {
    /// `entries[i][j] = aᵢⱼ`.
    pub entries: Vec<Vec<Polynomial>>,
    /// The `gᵢ`.
    pub row_labels: Vec<Polynomial>,
    /// The `fⱼ`.
    pub col_labels: Vec<Polynomial>,
}

impl SyzygyMatrix {
    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    pub fn column(&self, j: usize) -> Vec<&Polynomial> {
        self.entries.iter().map(|row| &row[j]).collect()
    }

    /// Checks `Σᵢ aᵢⱼ·gᵢ = fⱼ` for all `j`.
    pub fn reconstructs(&self) -> bool {
        (0..self.cols()).all(|j| {
            let ring = self.col_labels[j].ring();
            let mut acc = ring.zero();
            for (a, g) in self.column(j).into_iter().zip(&self.row_labels) {
                acc = acc.add(&a.to_ring(ring).mul(&g.to_ring(ring)));
            }
            acc == self.col_labels[j]
        })
    }
}

/// Writes each `fⱼ` over `g` by [`divide_with_quotients`] in the ring (and
/// term ordering) of `g`. The quotients are returned in the ring of `fⱼ`.
pub fn build_w_matrix(f: &[Polynomial], g: &[Polynomial]) -> Result<SyzygyMatrix> {
    let ring = g.first().ok_or(Error::ZeroPolynomial)?.ring().clone();
    let mut entries = vec![Vec::with_capacity(f.len()); g.len()];
    for (j, fj) in f.iter().enumerate() {
        let (q, r) = divide_with_quotients(&fj.to_ring(&ring), g);
        if !r.is_zero() {
            return Err(Error::NotInIdeal(j));
        }
        for (row, a) in entries.iter_mut().zip(q) {
            row.push(a.to_ring(fj.ring()));
        }
    }
    Ok(SyzygyMatrix { entries, row_labels: g.to_vec(), col_labels: f.to_vec() })
}

/// `W` for homogeneous forms over `g = (x₁,…,x_n)`, via
/// [`Polynomial::split_by_variables`]. Column labels are `labels`, the
/// polynomials whose degree forms are `forms`.
pub fn w_from_degree_forms(forms: &[Polynomial], labels: &[Polynomial]) -> Result<SyzygyMatrix> {
    let ring = forms.first().ok_or(Error::ZeroPolynomial)?.ring().clone();
    let n = ring.nvars();
    let mut entries = vec![Vec::with_capacity(forms.len()); n];
    for h in forms {
        for (row, a) in entries.iter_mut().zip(h.split_by_variables()?) {
            row.push(a);
        }
    }
    Ok(SyzygyMatrix { entries, row_labels: (0..n).map(|i| ring.var(i)).collect(), col_labels: labels.to_vec() })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorReport {
    /// Increasing 0-based column indices.
    pub column_subset: Vec<usize>,
    pub minor: Polynomial,
    /// Normal form of `minor` modulo the target ideal.
    pub residue: Polynomial,
    pub nonzero: bool,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct MinorOptions {
    /// Stop after the first nonzero residue.
    pub short_circuit: bool,
    pub exec: Exec,
}

const CHUNK: usize = 32;

/// All order-`n` minors of `W` in lexicographic column-subset order, each
/// reduced modulo `modulus`. Minors are expanded along the top row; the
/// sub-determinants of the bottom `k` rows are computed once per column
/// subset, level by level. With `short_circuit` the list ends at the first
/// nonzero residue.
pub fn fitting_minor_residues(w: &SyzygyMatrix, modulus: &GroebnerBasis, opts: MinorOptions) -> Vec<MinorReport> {
    minor_residues_by(w, |m| modulus.normal_form(&m.to_ring(modulus.ring())), opts)
}

/// As [`fitting_minor_residues`] with a caller-supplied residue map, which
/// must send `f` to a fixed representative of `f + I`.
pub fn minor_residues_by<F>(w: &SyzygyMatrix, reduce: F, opts: MinorOptions) -> Vec<MinorReport>
where
    F: Fn(&Polynomial) -> Polynomial + Sync,
{
    let n = w.rows();
    let r = w.cols();
    if n == 0 || n > r {
        return Vec::new();
    }
    let ring = w.entries[0][0].ring().clone();
    let mut below: HashMap<Vec<usize>, Polynomial> = HashMap::new();
    below.insert(Vec::new(), ring.one());
    for k in 1..n {
        let subsets: Vec<Vec<usize>> = (0..r).combinations(k).collect();
        let dets = par::map(opts.exec, &subsets, |s| expand(w, n - k, s, &below));
        below = subsets.into_iter().zip(dets).collect();
    }
    let subsets: Vec<Vec<usize>> = (0..r).combinations(n).collect();
    let report = |s: &Vec<usize>| {
        let minor = expand(w, 0, s, &below);
        let residue = reduce(&minor);
        MinorReport { column_subset: s.clone(), nonzero: !residue.is_zero(), minor, residue }
    };
    if !opts.short_circuit {
        return par::map(opts.exec, &subsets, report);
    }
    let mut out = Vec::new();
    for chunk in subsets.chunks(CHUNK) {
        for m in par::map(opts.exec, chunk, report) {
            let hit = m.nonzero;
            out.push(m);
            if hit {
                return out;
            }
        }
    }
    out
}

/// Laplace expansion of rows `row..n` restricted to columns `s` along `row`.
fn expand(w: &SyzygyMatrix, row: usize, s: &[usize], below: &HashMap<Vec<usize>, Polynomial>) -> Polynomial {
    let ring = w.entries[row][s[0]].ring();
    let mut acc = ring.zero();
    for (idx, &c) in s.iter().enumerate() {
        let a = &w.entries[row][c];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = s.iter().copied().filter(|&d| d != c).collect();
        let sub = &below[&rest];
        if sub.is_zero() {
            continue;
        }
        let t = a.mul(sub);
        acc = if idx % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
    }
    acc
}

/// Determinant of a square polynomial matrix by the same expansion.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n), "square matrix");
    let w = SyzygyMatrix {
        entries: m.to_vec(),
        row_labels: m.iter().map(|row| row[0].clone()).collect(),
        col_labels: m[0].clone(),
    };
    let mut below: HashMap<Vec<usize>, Polynomial> = HashMap::new();
    below.insert(Vec::new(), m[0][0].ring().one());
    for k in 1..n {
        let next = (0..n).combinations(k).map(|s| {
            let d = expand(&w, n - k, &s, &below);
            (s, d)
        });
        below = next.collect();
    }
    expand(&w, 0, &(0..n).collect::<Vec<_>>(), &below)
}

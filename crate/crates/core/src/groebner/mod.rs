//! Buchberger's algorithm with cofactor tracking, and the ideal-theoretic
//! utilities built on reduced Gröbner bases.

mod hilbert;
mod ideal;
mod reduce;

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::poly::{Polynomial, PowerProduct, Ring};

pub use hilbert::{hilbert_data, HilbertData};
pub use ideal::{
    degree_form_ideal, ideal_contains, ideal_equal, ideal_intersect, is_zero_dimensional,
    DegreeFormIdeal,
};
pub use reduce::{divide_with_quotients, normal_form_by};
pub(crate) use reduce::reduce_by;

/// Reduced Gröbner basis of the ideal generated by `generators`.
///
/// When built by [`buchberger`], `lift[i][j]` are cofactors with
/// `elements[i] = Σⱼ lift[i][j]·generators[j]`.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
    elements: Vec<Polynomial>,
    lift: Option<Vec<Vec<Polynomial>>>,
}

/// Reduced Gröbner basis with lift data, under the generators' ring ordering.
pub fn buchberger(generators: &[Polynomial]) -> GroebnerBasis {
    compute(generators, true)
}

/// Reduced Gröbner basis without cofactor tracking.
pub fn groebner_basis(generators: &[Polynomial]) -> GroebnerBasis {
    compute(generators, false)
}

struct Work {
    ring: Ring,
    polys: Vec<Polynomial>,
    lifts: Option<Vec<Vec<Polynomial>>>,
}

impl Work {
    fn lt(&self, i: usize) -> &PowerProduct {
        self.polys[i].leading_term().unwrap()
    }

    /// Reduces `f` (with cofactors `lf`) by the current basis.
    fn reduce(&self, f: &Polynomial, lf: Option<Vec<Polynomial>>) -> (Polynomial, Option<Vec<Polynomial>>) {
        let refs: Vec<&Polynomial> = self.polys.iter().collect();
        match (lf, &self.lifts) {
            (Some(mut lf), Some(lifts)) => {
                let r = reduce_by(f, &refs, |k, c, t| {
                    for (a, b) in lf.iter_mut().zip(&lifts[k]) {
                        if !b.is_zero() {
                            *a = a.sub_mul_term(c, t, b);
                        }
                    }
                });
                (r, Some(lf))
            }
            _ => (reduce_by(f, &refs, |_, _, _| {}), None),
        }
    }

    fn spoly(&self, i: usize, j: usize) -> (Polynomial, Option<Vec<Polynomial>>) {
        let (fi, fj) = (&self.polys[i], &self.polys[j]);
        let l = self.lt(i).lcm(self.lt(j));
        let si = self.lt(i).quotient_of(&l).unwrap();
        let sj = self.lt(j).quotient_of(&l).unwrap();
        let ci = fi.leading_coeff().unwrap().inv().unwrap();
        let cj = fj.leading_coeff().unwrap().inv().unwrap();
        let s = fi.mul_term(&si, &ci).sub(&fj.mul_term(&sj, &cj));
        let lift = self.lifts.as_ref().map(|lifts| {
            lifts[i]
                .iter()
                .zip(&lifts[j])
                .map(|(a, b)| a.mul_term(&si, &ci).sub(&b.mul_term(&sj, &cj)))
                .collect()
        });
        (s, lift)
    }
}

fn monic_with_lift(f: Polynomial, lf: Option<Vec<Polynomial>>) -> (Polynomial, Option<Vec<Polynomial>>) {
    let c = f.leading_coeff().unwrap().clone();
    if c.is_one() {
        return (f, lf);
    }
    let inv = c.inv().unwrap();
    let lf = lf.map(|v| v.iter().map(|p| p.scale(&inv)).collect());
    (f.scale(&inv), lf)
}

fn compute(generators: &[Polynomial], track: bool) -> GroebnerBasis {
    assert!(!generators.is_empty(), "Gröbner basis of an empty generator list");
    let ring = generators[0].ring().clone();
    for g in generators {
        assert!(*g.ring() == ring, "generators from different rings");
    }
    let r = generators.len();
    let mut work = Work { ring: ring.clone(), polys: Vec::new(), lifts: track.then(Vec::new) };
    // pairs (i, j) with i < j, selected by least lcm degree, then creation order
    let mut pending: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending_set: HashSet<(usize, usize)> = HashSet::new();

    let add = |work: &mut Work,
               pending: &mut BTreeSet<(u32, usize, usize)>,
               pending_set: &mut HashSet<(usize, usize)>,
               f: Polynomial,
               lf: Option<Vec<Polynomial>>| {
        let (f, lf) = monic_with_lift(f, lf);
        let m = work.polys.len();
        for i in 0..m {
            let d = work.lt(i).lcm(f.leading_term().unwrap()).degree();
            pending.insert((d, m, i));
            pending_set.insert((i, m));
        }
        work.polys.push(f);
        if let (Some(lifts), Some(lf)) = (work.lifts.as_mut(), lf) {
            lifts.push(lf);
        }
    };

    for (j, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let lf = track.then(|| {
            (0..r).map(|k| if k == j { ring.one() } else { ring.zero() }).collect::<Vec<_>>()
        });
        let (h, lh) = work.reduce(g, lf);
        if !h.is_zero() {
            add(&mut work, &mut pending, &mut pending_set, h, lh);
        }
    }

    while let Some(&key) = pending.iter().next() {
        pending.remove(&key);
        let (_, j, i) = key;
        pending_set.remove(&(i, j));
        let (lti, ltj) = (work.lt(i), work.lt(j));
        if lti.is_coprime(ltj) {
            continue;
        }
        let l = lti.lcm(ltj);
        let chain = (0..work.polys.len()).any(|k| {
            k != i
                && k != j
                && work.lt(k).divides(&l)
                && !pending_set.contains(&(i.min(k), i.max(k)))
                && !pending_set.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let (s, ls) = work.spoly(i, j);
        let (h, lh) = work.reduce(&s, ls);
        if !h.is_zero() {
            add(&mut work, &mut pending, &mut pending_set, h, lh);
        }
    }

    finish(work, generators.to_vec())
}

/// Minimalizes and inter-reduces, keeping insertion order.
fn finish(work: Work, generators: Vec<Polynomial>) -> GroebnerBasis {
    let Work { ring, polys, lifts } = work;
    let n = polys.len();
    let keep: Vec<usize> = (0..n)
        .filter(|&i| {
            let lti = polys[i].leading_term().unwrap();
            !(0..n).any(|k| {
                let ltk = polys[k].leading_term().unwrap();
                k != i && ltk.divides(lti) && (ltk != lti || k < i)
            })
        })
        .collect();
    let mut elems: Vec<Polynomial> = keep.iter().map(|&i| polys[i].clone()).collect();
    let mut elifts: Option<Vec<Vec<Polynomial>>> =
        lifts.map(|l| keep.iter().map(|&i| l[i].clone()).collect());
    for i in 0..elems.len() {
        let others: Vec<&Polynomial> =
            elems.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, p)| p).collect();
        let idx: Vec<usize> = (0..elems.len()).filter(|&k| k != i).collect();
        // the leading term is irreducible, so reduce only the tail
        let f = &elems[i];
        let mut terms = f.terms().to_vec();
        let head = terms.remove(0);
        let tail = Polynomial::from_sorted(&ring, terms);
        let mut lf = elifts.as_ref().map(|l| l[i].clone());
        let rem = reduce_by(&tail, &others, |k, c, t| {
            if let (Some(lf), Some(l)) = (lf.as_mut(), elifts.as_ref()) {
                for (a, b) in lf.iter_mut().zip(&l[idx[k]]) {
                    if !b.is_zero() {
                        *a = a.sub_mul_term(c, t, b);
                    }
                }
            }
        });
        let reduced = Polynomial::monomial(&ring, head.0, head.1).add(&rem);
        let (reduced, lf) = monic_with_lift(reduced, lf);
        elems[i] = reduced;
        if let (Some(l), Some(lf)) = (elifts.as_mut(), lf) {
            l[i] = lf;
        }
    }
    if elems.is_empty() {
        // zero ideal: empty basis
        elifts = elifts.map(|_| Vec::new());
    }
    GroebnerBasis { ring, generators, elements: elems, lift: elifts }
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn lift(&self) -> Option<&[Vec<Polynomial>]> {
        self.lift.as_deref()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    pub fn leading_terms(&self) -> Vec<&PowerProduct> {
        self.elements.iter().map(|g| g.leading_term().unwrap()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form_by(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Finiteness criterion: every variable has a pure power among the
    /// leading terms.
    pub fn is_zero_dimensional(&self) -> bool {
        let n = self.ring.nvars();
        let mut seen = vec![false; n];
        for t in self.leading_terms() {
            if t.is_one() {
                return true;
            }
            if let Some(i) = t.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_standard(&self, t: &PowerProduct) -> bool {
        !self.leading_terms().iter().any(|l| l.divides(t))
    }

    /// Terms outside the leading-term ideal, ascending by degree and then by
    /// the term ordering.
    pub fn standard_monomials(&self) -> Result<Vec<PowerProduct>> {
        if !self.is_zero_dimensional() {
            return Err(Error::NotZeroDimensional);
        }
        let n = self.ring.nvars();
        let mut out = Vec::new();
        let mut level: Vec<PowerProduct> = vec![PowerProduct::one(n)];
        level.retain(|t| self.is_standard(t));
        while !level.is_empty() {
            level.sort_by(|a, b| self.ring.cmp(a, b));
            out.extend(level.iter().cloned());
            let mut next: BTreeSet<PowerProduct> = BTreeSet::new();
            for t in &level {
                for i in 0..n {
                    let s = t.mul(&PowerProduct::var(n, i));
                    if self.is_standard(&s) {
                        next.insert(s);
                    }
                }
            }
            level = next.into_iter().collect();
        }
        Ok(out)
    }

    /// `dim_K(P/I)`.
    pub fn quotient_dimension(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    /// Checks that every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.elements;
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let (a, b) = (g[i].leading_term().unwrap(), g[j].leading_term().unwrap());
                let l = a.lcm(b);
                let s = g[i]
                    .mul_term(&a.quotient_of(&l).unwrap(), &g[i].leading_coeff().unwrap().inv().unwrap())
                    .sub(&g[j].mul_term(&b.quotient_of(&l).unwrap(), &g[j].leading_coeff().unwrap().inv().unwrap()));
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks monic elements and that no term is divisible by another
    /// element's leading term.
    pub fn is_reduced(&self) -> bool {
        let lts = self.leading_terms();
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_coeff().is_some_and(FieldElement::is_one)
                && g.terms().iter().all(|(t, _)| {
                    lts.iter().enumerate().all(|(k, l)| k == i || !l.divides(t))
                })
        })
    }

    /// Checks `elements[i] = Σ lift[i][j]·generators[j]` term by term.
    pub fn lift_is_exact(&self) -> bool {
        let Some(lift) = &self.lift else { return false };
        lift.len() == self.elements.len()
            && lift.iter().zip(&self.elements).all(|(row, g)| {
                let mut acc = self.ring.zero();
                for (a, f) in row.iter().zip(&self.generators) {
                    acc = acc.add(&a.mul(f));
                }
                acc == *g
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::TermOrdering;

    fn parse_all(r: &Ring, fs: &[&str]) -> Vec<Polynomial> {
        fs.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn single_variable() {
        let r = Ring::new(Field::Rational, ["x"], TermOrdering::DegRevLex).unwrap();
        let gb = buchberger(&parse_all(&r, &["x*(x - 1)", "x*(x - 2)"]));
        assert_eq!(gb.elements(), &parse_all(&r, &["x"])[..]);
        assert!(gb.lift_is_exact());
        assert_eq!(gb.normal_form(&r.parse("x - 1").unwrap()), r.parse("-1").unwrap());
    }

    #[test]
    fn unit_ideal() {
        let r = Ring::new(Field::Rational, ["x", "y"], TermOrdering::DegRevLex).unwrap();
        let gb = buchberger(&parse_all(&r, &["x*y - 1", "x", "y^3 + x"]));
        assert!(gb.is_unit_ideal());
        assert!(gb.lift_is_exact());
    }

    #[test]
    fn reduced_basis_properties() {
        let r = Ring::new(Field::Rational, ["x", "y", "z"], TermOrdering::DegRevLex).unwrap();
        let gb = buchberger(&parse_all(&r, &["z^2 - y", "x^2 - 2*x*z + y", "y*z - z - 1", "y^2 - y - z"]));
        assert!(gb.satisfies_buchberger_criterion());
        assert!(gb.is_reduced());
        assert!(gb.lift_is_exact());
        assert_eq!(gb.quotient_dimension().unwrap(), 6);
    }
}

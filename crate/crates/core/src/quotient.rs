//! Linear algebra in 0-dimensional quotient rings `P/I`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::linalg::{Echelon, Insert, Matrix};
use crate::poly::{Polynomial, PowerProduct, Ring};
use crate::upoly::UPoly;

/// Default bound on `dim_K(P/I)`.
pub const DEFAULT_DIMENSION_CAP: usize = 512;

/// `P/I` with its standard-monomial basis `O = (t₁,…,t_μ)`, sorted by degree
/// and then by the term ordering (so `t₁ = 1`).
#[derive(Debug)]
pub struct QuotientRing {
    gb: GroebnerBasis,
    basis: Vec<PowerProduct>,
    index: HashMap<PowerProduct, usize>,
    mult: Vec<OnceLock<Matrix>>,
}

impl QuotientRing {
    pub fn new(generators: &[Polynomial]) -> Result<Self> {
        Self::from_basis(groebner_basis(generators), DEFAULT_DIMENSION_CAP)
    }

    pub fn from_basis(gb: GroebnerBasis, cap: usize) -> Result<Self> {
        let basis = gb.standard_monomials()?;
        if basis.len() > cap {
            return Err(Error::DimensionCap(basis.len(), cap));
        }
        let index = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let mult = (0..gb.ring().nvars()).map(|_| OnceLock::new()).collect();
        Ok(QuotientRing { gb, basis, index, mult })
    }

    pub fn ring(&self) -> &Ring {
        self.gb.ring()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn basis(&self) -> &[PowerProduct] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb.normal_form(f)
    }

    /// Coordinates of `NF(f)` in the basis `O`.
    pub fn residue_vector(&self, f: &Polynomial) -> Vec<FieldElement> {
        self.coordinates(&self.normal_form(f))
    }

    fn coordinates(&self, nf: &Polynomial) -> Vec<FieldElement> {
        let mut v = vec![self.ring().field().zero(); self.dim()];
        for (t, c) in nf.terms() {
            v[self.index[t]] = c.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[FieldElement]) -> Polynomial {
        let terms = self
            .basis
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (t.clone(), c.clone()))
            .collect();
        Polynomial::from_terms(self.ring(), terms)
    }

    /// Matrix of multiplication by `x_i`; column `j` holds the residue of
    /// `x_i·t_j`. Built on first use.
    pub fn multiplication_matrix(&self, i: usize) -> &Matrix {
        self.mult[i].get_or_init(|| self.matrix_of(&self.ring().var(i)))
    }

    /// Matrix of multiplication by `f`.
    pub fn matrix_of(&self, f: &Polynomial) -> Matrix {
        let ring = self.ring();
        let columns: Vec<Vec<FieldElement>> = self
            .basis
            .iter()
            .map(|t| self.residue_vector(&f.mul_term(t, &ring.field().one())))
            .collect();
        Matrix::from_columns(ring.field(), self.dim(), &columns)
    }

    /// Monic generator of `{q : q(f) ∈ I}`, by Krylov iteration on residues.
    pub fn minimal_polynomial(&self, f: &Polynomial) -> UPoly {
        let field = self.ring().field();
        let mut e = Echelon::new(field);
        let mut g = self.normal_form(&self.ring().one());
        let mut k = 0;
        loop {
            match e.insert(&self.coordinates(&g)) {
                Insert::Independent => {
                    g = self.normal_form(&f.mul(&g));
                    k += 1;
                }
                Insert::Dependent(a) => {
                    let mut c: Vec<FieldElement> = a.iter().map(|x| -x).collect();
                    c.resize(k, field.zero());
                    c.push(field.one());
                    return UPoly::new(field, c);
                }
            }
        }
    }
}

/// `Rad(I) = I + ⟨sqfree(m₁)(x₁), …, sqfree(m_n)(x_n)⟩` where `mᵢ` is the
/// minimal polynomial of `xᵢ`. Returns the reduced Gröbner basis.
pub fn radical_zero_dim(generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ring = generators.first().ok_or(Error::NotZeroDimensional)?.ring().clone();
    ring.field().require_factorization()?;
    let q = QuotientRing::new(generators)?;
    let mut gens = q.groebner_basis().elements().to_vec();
    for i in 0..ring.nvars() {
        let m = q.minimal_polynomial(&ring.var(i));
        let s = m.squarefree_part()?;
        if s != m {
            gens.push(s.to_polynomial(&ring, i));
        }
    }
    Ok(groebner_basis(&gens).elements().to_vec())
}

/// Reduced Gröbner basis of the polynomials vanishing at `points`, by the
/// Buchberger–Möller algorithm. Elements come in increasing order of their
/// leading terms.
pub fn vanishing_ideal_of_points(ring: &Ring, points: &[Vec<FieldElement>]) -> Result<Vec<Polynomial>> {
    let n = ring.nvars();
    let field = ring.field();
    for (i, p) in points.iter().enumerate() {
        if p.len() != n {
            return Err(Error::PointArity { expected: n, got: p.len() });
        }
        if p.iter().any(|c| !field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        if points[..i].contains(p) {
            return Err(Error::DuplicatePoint);
        }
    }
    let eval = |t: &PowerProduct| -> Vec<FieldElement> {
        points
            .iter()
            .map(|p| {
                let mut v = field.one();
                for (x, &e) in p.iter().zip(t.exps()) {
                    if e > 0 {
                        v *= &x.pow(e as u64);
                    }
                }
                v
            })
            .collect()
    };
    let mut echelon = Echelon::new(field);
    let mut order_ideal: Vec<PowerProduct> = Vec::new();
    let mut leading: Vec<PowerProduct> = Vec::new();
    let mut out = Vec::new();
    let mut candidates: Vec<PowerProduct> = vec![PowerProduct::one(n)];
    while !candidates.is_empty() {
        let (k, _) = candidates
            .iter()
            .enumerate()
            .min_by(|a, b| ring.cmp(a.1, b.1))
            .unwrap();
        let t = candidates.swap_remove(k);
        if leading.iter().any(|l| l.divides(&t)) || order_ideal.contains(&t) {
            continue;
        }
        match echelon.insert(&eval(&t)) {
            Insert::Independent => {
                for i in 0..n {
                    let s = t.mul(&PowerProduct::var(n, i));
                    if !candidates.contains(&s) {
                        candidates.push(s);
                    }
                }
                order_ideal.push(t);
            }
            Insert::Dependent(a) => {
                let mut terms = vec![(t.clone(), field.one())];
                for (o, c) in order_ideal.iter().zip(a) {
                    if !c.is_zero() {
                        terms.push((o.clone(), -c));
                    }
                }
                out.push(Polynomial::from_terms(ring, terms));
                leading.push(t);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::TermOrdering;

    #[test]
    fn minimal_polynomial_of_variable() {
        let r = Ring::new(Field::Rational, ["x"], TermOrdering::DegRevLex).unwrap();
        let q = QuotientRing::new(&[r.var(0)]).unwrap();
        assert_eq!(q.minimal_polynomial(&r.var(0)), UPoly::from_i64(&Field::Rational, &[0, 1]));
        assert_eq!(q.residue_vector(&r.one()), vec![Field::Rational.one()]);
    }

    #[test]
    fn two_points_on_a_line() {
        let r = Ring::new(Field::Rational, ["x"], TermOrdering::DegRevLex).unwrap();
        let f = Field::Rational;
        let gb = vanishing_ideal_of_points(&r, &[vec![f.zero()], vec![f.one()]]).unwrap();
        assert_eq!(gb, vec![r.parse("x^2 - x").unwrap()]);
        assert_eq!(
            vanishing_ideal_of_points(&r, &[vec![f.zero()], vec![f.zero()]]),
            Err(Error::DuplicatePoint)
        );
    }

    #[test]
    fn radical_of_fat_point() {
        let r = Ring::new(Field::Rational, ["x"], TermOrdering::DegRevLex).unwrap();
        let rad = radical_zero_dim(&[r.parse("x*(x - 1)").unwrap(), r.parse("x*(x - 2)").unwrap()]).unwrap();
        assert_eq!(rad, vec![r.var(0)]);
        let r2 = Ring::new(Field::prime(3).unwrap(), ["x", "y"], TermOrdering::DegRevLex).unwrap();
        let rad = radical_zero_dim(&[r2.parse("x^3").unwrap(), r2.parse("y^2 - y").unwrap()]).unwrap();
        let expected = vec![r2.parse("x").unwrap(), r2.parse("y^2 - y").unwrap()];
        assert!(crate::groebner::ideal_equal(&rad, &expected));
    }
}

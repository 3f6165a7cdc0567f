use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use super::{PowerProduct, Ring};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};

/// Polynomial stored as `(power product, coefficient)` pairs, strictly
/// decreasing in the ring's term ordering, with no zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(PowerProduct, FieldElement)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Self {
        Self::monomial(ring, PowerProduct::one(ring.nvars()), c)
    }

    pub fn monomial(ring: &Ring, t: PowerProduct, c: FieldElement) -> Self {
        assert_eq!(t.nvars(), ring.nvars(), "power product arity");
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial { ring: ring.clone(), terms: vec![(t, c)] }
    }

    /// Builds a polynomial from terms in any order; like terms are combined.
    pub fn from_terms(ring: &Ring, mut terms: Vec<(PowerProduct, FieldElement)>) -> Self {
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        let mut out: Vec<(PowerProduct, FieldElement)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc += &c,
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((t, c));
                }
            }
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
        let p = Polynomial { ring: ring.clone(), terms: out };
        debug_assert!(p.is_valid());
        p
    }

    /// Terms must already be strictly decreasing and nonzero.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(PowerProduct, FieldElement)>) -> Self {
        let p = Polynomial { ring: ring.clone(), terms };
        debug_assert!(p.is_valid());
        p
    }

    /// Checks the storage invariants: strictly decreasing, no zero coefficients.
    pub fn is_valid(&self) -> bool {
        self.terms.iter().all(|(t, c)| !c.is_zero() && t.nvars() == self.ring.nvars())
            && self.terms.windows(2).all(|w| self.ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(PowerProduct, FieldElement)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(PowerProduct, FieldElement)> {
        self.terms
    }

    #[allow(clippy::len_without_is_empty)] // is_zero plays that role
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(t, _)| t.is_one())
    }

    /// Constant coefficient of a constant polynomial.
    pub fn as_constant(&self) -> Option<FieldElement> {
        match self.terms.as_slice() {
            [] => Some(self.ring.field().zero()),
            [(t, c)] if t.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&PowerProduct> {
        self.terms.first().map(|(t, _)| t)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn coeff_of(&self, t: &PowerProduct) -> FieldElement {
        self.terms
            .iter()
            .find(|(s, _)| s == t)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(|| self.ring.field().zero())
    }

    /// Maximal total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(t, _)| t.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((t0, _)) => self.terms.iter().all(|(t, _)| t.degree() == t0.degree()),
        }
    }

    fn check_ring(&self, other: &Self) {
        assert!(self.ring == other.ring, "polynomials from different rings");
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        self.check_ring(other);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match self.ring.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (t, c) in &b[j..] {
            out.push((t.clone(), if negate { -c } else { c.clone() }));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect(),
        }
    }

    /// `c · t · self`; multiplication by a term preserves the order.
    pub fn mul_term(&self, t: &PowerProduct, k: &FieldElement) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(s, c)| (s.mul(t), c * k)).collect(),
        }
    }

    /// `self - c · t · g`, computed by a single merge.
    pub fn sub_mul_term(&self, k: &FieldElement, t: &PowerProduct, g: &Self) -> Self {
        self.sub(&g.mul_term(t, k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if self.terms.len() == 1 {
            let (t, c) = &self.terms[0];
            return other.mul_term(t, c);
        }
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (s, a) in &self.terms {
            for (t, b) in &other.terms {
                terms.push((s.mul(t), a * b));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().unwrap()),
        }
    }

    /// Sum of the terms of top total degree.
    pub fn degree_form(&self) -> Result<Self> {
        let d = self.total_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(t, _)| t.degree() == d).cloned().collect(),
        })
    }

    /// Homogenization by a new variable appended after the existing ones.
    pub fn homogenize(&self, new_var: &str) -> Result<Self> {
        let d = self.total_degree().ok_or(Error::ZeroPolynomial)?;
        let ring = self.ring.append_var(new_var)?;
        let n = self.ring.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| (t.insert_var(n, (d - t.degree()) as u16), c.clone()))
            .collect();
        Ok(Polynomial::from_terms(&ring, terms))
    }

    /// Sets the variable at `index` to 1 and drops it from the ring.
    pub fn dehomogenize(&self, index: usize, ring: &Ring) -> Self {
        let terms = self.terms.iter().map(|(t, c)| (t.remove_var(index), c.clone())).collect();
        Polynomial::from_terms(ring, terms)
    }

    pub fn partial_derivative(&self, i: usize) -> Self {
        let field = self.ring.field();
        let mut terms = Vec::new();
        for (t, c) in &self.terms {
            let e = t.exp(i);
            if e == 0 {
                continue;
            }
            let k = c * &field.from_i64(e as i64);
            if k.is_zero() {
                continue;
            }
            let mut s = t.clone();
            s.set_exp(i, e - 1);
            terms.push((s, k));
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Writes a homogeneous `h` of positive degree as `Σ hᵢ·xᵢ`. Each term
    /// goes to the smallest index of a variable dividing it.
    pub fn split_by_variables(&self) -> Result<Vec<Self>> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if self.is_zero() || self.total_degree() == Some(0) {
            return Err(Error::ConstantPolynomial);
        }
        let n = self.ring.nvars();
        let mut parts: Vec<Vec<(PowerProduct, FieldElement)>> = vec![Vec::new(); n];
        for (t, c) in &self.terms {
            let i = (0..n).find(|&i| t.exp(i) > 0).unwrap();
            let mut s = t.clone();
            s.set_exp(i, t.exp(i) - 1);
            parts[i].push((s, c.clone()));
        }
        Ok(parts.into_iter().map(|p| Polynomial::from_terms(&self.ring, p)).collect())
    }

    /// The same polynomial in a ring with the same variables and field,
    /// re-sorted under that ring's ordering.
    pub fn to_ring(&self, ring: &Ring) -> Self {
        if *ring == self.ring {
            return self.clone();
        }
        assert_eq!(ring.nvars(), self.ring.nvars(), "ring arity");
        assert!(ring.field() == self.ring.field(), "ring field");
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Embeds into a ring whose variables are `offset` new ones followed by
    /// this ring's variables.
    pub fn shift_into(&self, ring: &Ring, offset: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                let mut e = vec![0u16; offset];
                e.extend_from_slice(t.exps());
                (PowerProduct::from_exps(&e), c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Drops the first `offset` variables, which must not occur.
    pub fn unshift_into(&self, ring: &Ring, offset: usize) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            if t.exps()[..offset].iter().any(|&e| e > 0) {
                return None;
            }
            terms.push((PowerProduct::from_exps(&t.exps()[offset..]), c.clone()));
        }
        Some(Polynomial::from_terms(ring, terms))
    }

    pub fn evaluate(&self, point: &[FieldElement]) -> FieldElement {
        assert_eq!(point.len(), self.ring.nvars());
        let mut acc = self.ring.field().zero();
        for (t, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(t.exps()) {
                if e > 0 {
                    v *= &x.pow(e as u64);
                }
            }
            acc += &v;
        }
        acc
    }

    /// Substitutes rational values for the parameters of a rational-function
    /// coefficient field; `ring` must be the same ring over ℚ.
    pub fn specialize(&self, ring: &Ring, point: &[BigRational]) -> Result<Self> {
        if *ring.field() != Field::Rational {
            return Err(Error::FieldMismatch);
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((t.clone(), c.specialize(point)?));
        }
        Ok(Polynomial::from_terms(ring, terms))
    }

    /// Largest index of a variable occurring in the polynomial.
    pub fn max_var(&self) -> Option<usize> {
        (0..self.ring.nvars()).rev().find(|&i| self.terms.iter().any(|(t, _)| t.exp(i) > 0))
    }

    /// Degree in the variable `i`.
    pub fn degree_in(&self, i: usize) -> u16 {
        self.terms.iter().map(|(t, _)| t.exp(i)).max().unwrap_or(0)
    }

    /// Dense coefficient list (constant first) of a polynomial in `x_i` only.
    pub fn univariate_coeffs(&self, i: usize) -> Option<Vec<FieldElement>> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![self.ring.field().zero(); d + 1];
        for (t, c) in &self.terms {
            if t.exps().iter().enumerate().any(|(j, &e)| j != i && e > 0) {
                return None;
            }
            out[t.exp(i) as usize] = c.clone();
        }
        Some(out)
    }

    /// Polynomial in `x_i` with the given dense coefficients.
    pub fn from_univariate(ring: &Ring, i: usize, coeffs: &[FieldElement]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let mut t = PowerProduct::one(ring.nvars());
                t.set_exp(i, e as u16);
                (t, c.clone())
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    /// Normalizes rational-function coefficients to lowest terms.
    pub fn normalize_coefficients(&self) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.clone(), c.normalize_fraction())).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        let names = self.ring.vars();
        for (k, (t, c)) in self.terms.iter().enumerate() {
            let (neg, mag, unit) = c.coefficient_parts(field);
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if t.is_one() {
                f.write_str(&mag)?;
            } else {
                if !unit {
                    f.write_str(&mag)?;
                    f.write_str("*")?;
                }
                t.write_with(f, names)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::TermOrdering;
    use super::*;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(Field::Rational, vars.iter().copied(), TermOrdering::DegRevLex).unwrap()
    }

    #[test]
    fn degree_form_keeps_top_component() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(r.parse("z^2 - y").unwrap().degree_form().unwrap(), r.parse("z^2").unwrap());
        let f = r.parse("x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1").unwrap();
        assert_eq!(f.degree_form().unwrap(), r.parse("-2*y^5").unwrap());
        assert_eq!(r.zero().degree_form(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn homogenize_round_trip() {
        let r = ring(&["x", "y", "z"]);
        let f = r.parse("y^2 - y - z").unwrap();
        let h = f.homogenize("x0").unwrap();
        assert_eq!(h, h.ring().parse("y^2 - x0*y - x0*z").unwrap());
        assert_eq!(h.dehomogenize(3, &r), f);
        let g = r.parse("x*y - z").unwrap().homogenize("x0").unwrap();
        assert_eq!(g, g.ring().parse("x*y - x0*z").unwrap());
    }

    #[test]
    fn derivatives() {
        let r = ring(&["x", "y", "z"]);
        assert_eq!(r.parse("y^2 - x*z").unwrap().partial_derivative(0), r.parse("-z").unwrap());
        let r2 = ring(&["x", "y"]);
        assert_eq!(
            r2.parse("x^2*y - y^3").unwrap().partial_derivative(1),
            r2.parse("x^2 - 3*y^2").unwrap()
        );
        let f5 = Ring::new(Field::prime(5).unwrap(), ["x"], TermOrdering::DegRevLex).unwrap();
        assert!(f5.parse("x^5").unwrap().partial_derivative(0).is_zero());
    }

    #[test]
    fn split_by_smallest_variable() {
        let r = ring(&["x", "y"]);
        let h = r.parse("x^2*y - y^3").unwrap();
        let parts = h.split_by_variables().unwrap();
        assert_eq!(parts, vec![r.parse("x*y").unwrap(), r.parse("-y^2").unwrap()]);
        assert_eq!(r.parse("x + 1").unwrap().split_by_variables(), Err(Error::NotHomogeneous));
        assert_eq!(r.parse("3").unwrap().split_by_variables(), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn parametric_split() {
        let k = Field::function(["c41", "c42"]);
        let r = Ring::new(k, ["x", "y"], TermOrdering::DegRevLex).unwrap();
        let h = r.parse("y^2 - (c41)*x*y").unwrap();
        let parts = h.split_by_variables().unwrap();
        assert_eq!(parts, vec![r.parse("-(c41)*y").unwrap(), r.parse("y").unwrap()]);
    }

    #[test]
    fn printing() {
        let r = ring(&["x", "y", "z"]);
        let f = r.parse("x^2*y - 3/2*z + 1 - x^2*y*1").unwrap();
        assert_eq!(f.to_string(), "-3/2*z + 1");
        let k = Field::function(["c41", "c42"]);
        let r = Ring::new(k, ["x", "y"], TermOrdering::DegRevLex).unwrap();
        let g = r.parse("(1 - c41*c42)*x*y - (c41)*x + y/(c42+1)").unwrap();
        assert_eq!(g.to_string(), "(1 - c41*c42)*x*y - (c41)*x + (1)/(1 + c42)*y");
        assert_eq!(r.parse(&g.to_string()).unwrap(), g);
    }
}

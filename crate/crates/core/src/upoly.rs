//! Dense univariate polynomials over a [`Field`].

use std::fmt;

use crate::field::{Field, FieldElement};
use crate::poly::{Polynomial, Ring};

/// Univariate polynomial, coefficients stored constant term first with no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    c: Vec<FieldElement>,
}

impl UPoly {
    pub fn new(field: &Field, mut c: Vec<FieldElement>) -> Self {
        while c.last().is_some_and(FieldElement::is_zero) {
            c.pop();
        }
        UPoly { field: field.clone(), c }
    }

    pub fn zero(field: &Field) -> Self {
        UPoly { field: field.clone(), c: Vec::new() }
    }

    pub fn one(field: &Field) -> Self {
        UPoly { field: field.clone(), c: vec![field.one()] }
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: &FieldElement) -> Self {
        UPoly::new(field, vec![-a, field.one()])
    }

    pub fn from_i64(field: &Field, c: &[i64]) -> Self {
        UPoly::new(field, c.iter().map(|&k| field.from_i64(k)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&FieldElement> {
        self.c.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let z = self.field.zero();
        UPoly::new(
            &self.field,
            (0..n).map(|i| self.c.get(i).unwrap_or(&z) + o.c.get(i).unwrap_or(&z)).collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UPoly { field: self.field.clone(), c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero(&self.field);
        }
        let mut c = vec![self.field.zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] += &(a * b);
                }
            }
        }
        UPoly::new(&self.field, c)
    }

    pub fn scale(&self, k: &FieldElement) -> Self {
        UPoly::new(&self.field, self.c.iter().map(|x| x * k).collect())
    }

    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().unwrap()),
        }
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let inv = d.lc().unwrap().inv().unwrap();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(&self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let k = &r[i + dd] * &inv;
            if k.is_zero() {
                continue;
            }
            for (j, b) in d.c.iter().enumerate() {
                if !b.is_zero() {
                    r[i + j] -= &(&k * b);
                }
            }
            q[i] = k;
        }
        r.truncate(dd);
        (UPoly::new(&self.field, q), UPoly::new(&self.field, r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; panics when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero when both are zero).
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        UPoly::new(
            &self.field,
            self.c.iter().enumerate().skip(1).map(|(i, a)| a * &self.field.from_i64(i as i64)).collect(),
        )
    }

    pub fn evaluate(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.field.zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// `q(f)` computed in `ring`.
    pub fn compose(&self, f: &Polynomial) -> Polynomial {
        let ring = f.ring();
        let mut acc = ring.zero();
        for a in self.c.iter().rev() {
            acc = acc.mul(f).add(&ring.constant(a.clone()));
        }
        acc
    }

    /// The polynomial in the variable `x_i` of `ring`.
    pub fn to_polynomial(&self, ring: &Ring, i: usize) -> Polynomial {
        Polynomial::from_univariate(ring, i, &self.c)
    }

    pub fn from_polynomial(f: &Polynomial, i: usize) -> Option<Self> {
        f.univariate_coeffs(i).map(|c| UPoly::new(f.ring().field(), c))
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self) -> crate::Result<Self> {
        match &self.field {
            Field::Rational => Ok(self.div_exact(&self.gcd(&self.derivative())).monic()),
            Field::Prime(p) => {
                let p = *p as u64;
                let v: Vec<u64> = self.c.iter().map(|x| x.as_prime_value().unwrap() as u64).collect();
                let mut out = UPoly::one(&self.field);
                for (g, _) in crate::factor::zp::squarefree(&crate::factor::zp::monic(&v, p), p) {
                    let g = UPoly::new(&self.field, g.iter().map(|&x| self.field.from_i64(x as i64)).collect());
                    out = out.mul(&g);
                }
                Ok(out)
            }
            Field::Function(_) => Err(crate::Error::UnsupportedField(format!(
                "squarefree parts over {}",
                self.field
            ))),
        }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = Ring::new(self.field.clone(), ["t"], crate::poly::TermOrdering::Lex).unwrap();
        write!(f, "{}", self.to_polynomial(&r, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn euclid() {
        let f = Field::Rational;
        let a = UPoly::from_i64(&f, &[-1, 0, 1]);
        let b = UPoly::from_i64(&f, &[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UPoly::from_i64(&f, &[1, 1]));
        assert!(r.is_zero());
        assert_eq!(a.derivative(), UPoly::from_i64(&f, &[0, 2]));
    }
}

//! Integer-coefficient polynomials in the parameters of a rational-function
//! field, with exact division and a recursive subresultant gcd.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

pub type Exps = SmallVec<[u16; 8]>;

/// Sparse polynomial over ℤ. Terms are kept strictly descending in lex order
/// (first parameter most significant) with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    nvars: usize,
    terms: Vec<(Exps, BigInt)>,
}

fn zero_exps(n: usize) -> Exps {
    SmallVec::from_elem(0, n)
}

fn add_exps(a: &Exps, b: &Exps) -> Exps {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| x.checked_add(*y).expect("parameter exponent overflow"))
        .collect()
}

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b.iter()).all(|(x, y)| x <= y)
}

fn graded_cmp(a: &Exps, b: &Exps) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl ParamPoly {
    pub fn zero(nvars: usize) -> Self {
        ParamPoly { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(nvars);
        }
        ParamPoly { nvars, terms: vec![(zero_exps(nvars), c)] }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, BigInt::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = zero_exps(nvars);
        e[i] = 1;
        ParamPoly { nvars, terms: vec![(e, BigInt::one())] }
    }

    /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
    pub fn from_terms(nvars: usize, mut raw: Vec<(Exps, BigInt)>) -> Self {
        raw.sort_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<(Exps, BigInt)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match terms.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => terms.push((e, c)),
            }
        }
        terms.retain(|(_, c)| !c.is_zero());
        ParamPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Exps, BigInt)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && !self.is_zero() && self.terms[0].1.is_one()
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    /// Leading coefficient in lex order.
    pub fn lc(&self) -> Option<&BigInt> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, v: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(0)
    }

    pub fn neg(&self) -> Self {
        ParamPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        debug_assert_eq!(self.nvars, other.nvars);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (e, c) = &other.terms[j];
                    terms.push((e.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend(self.terms[i..].iter().cloned());
        for (e, c) in &other.terms[j..] {
            terms.push((e.clone(), if negate { -c } else { c.clone() }));
        }
        ParamPoly { nvars: self.nvars, terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars);
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                raw.push((add_exps(ea, eb), ca * cb));
            }
        }
        Self::from_terms(self.nvars, raw)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        ParamPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_integer(&self, c: &BigInt) -> Self {
        ParamPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x / c)).collect(),
        }
    }

    /// Non-negative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits off integer content and lex sign: `self = s * p` with `p`
    /// primitive and lex-leading coefficient positive.
    pub fn primitive_split(&self) -> (BigInt, ParamPoly) {
        if self.is_zero() {
            return (BigInt::zero(), Self::one(self.nvars));
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        (c.clone(), self.div_integer(&c))
    }

    fn sub_mul_term(&self, d: &ParamPoly, m: &Exps, c: &BigInt) -> ParamPoly {
        let shifted = ParamPoly {
            nvars: self.nvars,
            terms: d.terms.iter().map(|(e, x)| (add_exps(e, m), x * c)).collect(),
        };
        self.sub(&shifted)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &ParamPoly) -> Option<ParamPoly> {
        assert!(!d.is_zero(), "division by zero parameter polynomial");
        if d.is_one() {
            return Some(self.clone());
        }
        let (dm, dc) = &d.terms[0];
        let mut rem = self.clone();
        let mut q = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            if !divides(dm, m) {
                return None;
            }
            let (quot, r) = c.div_rem(dc);
            if !r.is_zero() {
                return None;
            }
            let qm: Exps = m.iter().zip(dm.iter()).map(|(a, b)| a - b).collect();
            rem = rem.sub_mul_term(d, &qm, &quot);
            q.push((qm, quot));
        }
        Some(ParamPoly { nvars: self.nvars, terms: q })
    }

    /// Coefficients of `self` viewed as a polynomial in parameter `v`.
    fn to_univariate(&self, v: usize) -> Vec<ParamPoly> {
        let deg = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Exps, BigInt)>> = vec![Vec::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[v] as usize;
            e2[v] = 0;
            buckets[k].push((e2, c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| ParamPoly::from_terms(self.nvars, t))
            .collect()
    }

    fn from_univariate(nvars: usize, v: usize, coeffs: &[ParamPoly]) -> ParamPoly {
        let mut raw = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut e2 = e.clone();
                e2[v] = k as u16;
                raw.push((e2, x.clone()));
            }
        }
        ParamPoly::from_terms(nvars, raw)
    }

    fn lowest_var(&self) -> Option<usize> {
        (0..self.nvars).find(|&v| self.terms.iter().any(|(e, _)| e[v] > 0))
    }

    /// Greatest common divisor over ℤ, normalized to a positive lex-leading
    /// coefficient.
    pub fn gcd(&self, other: &ParamPoly) -> ParamPoly {
        if self.is_zero() {
            return other.primitive_sign_keep_content();
        }
        if other.is_zero() {
            return self.primitive_sign_keep_content();
        }
        if self.is_constant() || other.is_constant() {
            return ParamPoly::constant(self.nvars, self.content().gcd(&other.content()));
        }
        let v = match (self.lowest_var(), other.lowest_var()) {
            (Some(a), Some(b)) => a.min(b),
            _ => unreachable!(),
        };
        let ua = self.to_univariate(v);
        let ub = other.to_univariate(v);
        let ca = univariate_content(&ua);
        let cb = univariate_content(&ub);
        let c = ca.gcd(&cb);
        if ua.len() == 1 || ub.len() == 1 {
            // one side is free of v: the gcd lives in the content
            return c;
        }
        let pa: Vec<ParamPoly> = ua.iter().map(|x| x.div_exact(&ca).unwrap()).collect();
        let pb: Vec<ParamPoly> = ub.iter().map(|x| x.div_exact(&cb).unwrap()).collect();
        let g = subresultant_gcd(pa, pb);
        let gc = univariate_content(&g);
        let g: Vec<ParamPoly> = g.iter().map(|x| x.div_exact(&gc).unwrap()).collect();
        let g = ParamPoly::from_univariate(self.nvars, v, &g);
        g.mul(&c).primitive_sign_keep_content()
    }

    fn primitive_sign_keep_content(&self) -> ParamPoly {
        if self.lc().is_some_and(|c| c.is_negative()) {
            self.neg()
        } else {
            self.clone()
        }
    }

    /// The term that is printed first (lowest in graded order).
    pub fn lowest_graded_term(&self) -> Option<&(Exps, BigInt)> {
        self.terms.iter().min_by(|a, b| graded_cmp(&a.0, &b.0))
    }

    /// Terms in ascending graded order, the printing order.
    pub fn ascending_terms(&self) -> Vec<&(Exps, BigInt)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| graded_cmp(&a.0, &b.0));
        t
    }

    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (x, &k) in point.iter().zip(e.iter()) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            acc += t;
        }
        acc
    }

    /// Writes the polynomial with the given parameter names, ascending
    /// graded order, integer coefficients multiplied by `scale`.
    pub fn write_scaled(
        &self,
        f: &mut impl fmt::Write,
        names: &[String],
        scale: &BigRational,
    ) -> fmt::Result {
        if self.is_zero() || scale.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.ascending_terms() {
            let coeff = BigRational::from_integer(c.clone()) * scale;
            let neg = coeff.is_negative();
            let abs = coeff.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let is_const = e.iter().all(|&k| k == 0);
            let mono = write_exps(e, names);
            if is_const {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", fmt_rational(&abs), mono)?;
            }
        }
        Ok(())
    }
}

fn write_exps(e: &Exps, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], k)),
        }
    }
    parts.join("*")
}

pub(crate) fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn univariate_content(u: &[ParamPoly]) -> ParamPoly {
    let mut g = ParamPoly::zero(u[0].nvars);
    for c in u {
        if c.is_zero() {
            continue;
        }
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn trim(u: &mut Vec<ParamPoly>) {
    while u.len() > 1 && u.last().is_some_and(|c| c.is_zero()) {
        u.pop();
    }
}

fn uni_is_zero(u: &[ParamPoly]) -> bool {
    u.iter().all(|c| c.is_zero())
}

/// Pseudo-remainder of `a` by `b` as polynomials in the main parameter.
fn prem(a: &[ParamPoly], b: &[ParamPoly]) -> Vec<ParamPoly> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<ParamPoly> = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return r;
    }
    let mut e = (r.len() - b.len() + 1) as u32;
    while !uni_is_zero(&r) && r.len() > db {
        let top = r.len() - 1;
        let lr = r[top].clone();
        let shift = top - db;
        for c in r.iter_mut() {
            *c = c.mul(lb);
        }
        for (k, bc) in b.iter().enumerate() {
            r[k + shift] = r[k + shift].sub(&bc.mul(&lr));
        }
        debug_assert!(r[top].is_zero());
        r.pop();
        trim(&mut r);
        e -= 1;
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    if e > 0 {
        let f = lb.pow(e);
        for c in r.iter_mut() {
            *c = c.mul(&f);
        }
    }
    r
}

/// Last nonzero element of the subresultant remainder sequence.
fn subresultant_gcd(mut a: Vec<ParamPoly>, mut b: Vec<ParamPoly>) -> Vec<ParamPoly> {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let nvars = a[0].nvars;
    let mut g = ParamPoly::one(nvars);
    let mut h = ParamPoly::one(nvars);
    loop {
        let d = (a.len() - b.len()) as u32;
        let r = prem(&a, &b);
        if uni_is_zero(&r) {
            return b;
        }
        if r.len() == 1 {
            return vec![ParamPoly::one(nvars)];
        }
        let divisor = g.mul(&h.pow(d));
        let r: Vec<ParamPoly> = r
            .iter()
            .map(|c| c.div_exact(&divisor).expect("subresultant division is exact"))
            .collect();
        a = b;
        b = r;
        g = a.last().unwrap().clone();
        h = match d {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(d)
                .div_exact(&h.pow(d - 1))
                .expect("subresultant division is exact"),
        };
    }
}

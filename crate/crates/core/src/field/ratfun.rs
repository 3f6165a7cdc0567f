use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::param::ParamPoly;

/// Combined term count above which a fraction is gcd-normalized eagerly.
pub const NORMALIZE_THRESHOLD: usize = 64;

/// Element of ℚ(c₁,…,c_m), stored as `scalar · num / den` with `num` and
/// `den` primitive integer polynomials whose lex-leading coefficients are
/// positive. Zero is `0 · 1 / 1`.
///
/// Fractions are normalized lazily: `num` and `den` may share a factor until
/// their size crosses [`NORMALIZE_THRESHOLD`] or [`RatFun::normalized`] runs.
#[derive(Clone, Debug)]
pub struct RatFun {
    scalar: BigRational,
    num: ParamPoly,
    den: ParamPoly,
}

impl RatFun {
    pub fn zero(nvars: usize) -> Self {
        RatFun {
            scalar: BigRational::zero(),
            num: ParamPoly::one(nvars),
            den: ParamPoly::one(nvars),
        }
    }

    pub fn from_rational(nvars: usize, q: BigRational) -> Self {
        RatFun { scalar: q, num: ParamPoly::one(nvars), den: ParamPoly::one(nvars) }
    }

    pub fn from_poly(p: &ParamPoly) -> Self {
        Self::from_parts(BigRational::one(), p.clone(), ParamPoly::one(p.nvars()))
    }

    /// Builds `scalar · num / den`, restoring the storage invariants.
    pub fn from_parts(scalar: BigRational, num: ParamPoly, den: ParamPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        let nvars = num.nvars();
        if scalar.is_zero() || num.is_zero() {
            return Self::zero(nvars);
        }
        let (cn, pn) = num.primitive_split();
        let (cd, pd) = den.primitive_split();
        let scalar = scalar * BigRational::new(cn, cd);
        let mut r = RatFun { scalar, num: pn, den: pd };
        if r.num == r.den {
            r.num = ParamPoly::one(nvars);
            r.den = ParamPoly::one(nvars);
        } else if r.num.len() + r.den.len() > NORMALIZE_THRESHOLD {
            r = r.normalized();
        }
        r
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn numerator(&self) -> &ParamPoly {
        &self.num
    }

    pub fn denominator(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.scalar.is_one() && self.num == self.den
    }

    /// A plain rational number, when the fraction has no parameter part.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let n = self.normalized();
        (n.num.is_constant() && n.den.is_constant()).then(|| n.scalar.clone())
    }

    /// Cancels the gcd of numerator and denominator.
    pub fn normalized(&self) -> Self {
        if self.is_zero() || (self.den.is_one()) {
            return self.clone();
        }
        let g = self.num.gcd(&self.den);
        if g.is_one() {
            return self.clone();
        }
        let num = self.num.div_exact(&g).expect("gcd divides numerator");
        let den = self.den.div_exact(&g).expect("gcd divides denominator");
        let (cn, pn) = num.primitive_split();
        let (cd, pd) = den.primitive_split();
        RatFun { scalar: &self.scalar * BigRational::new(cn, cd), num: pn, den: pd }
    }

    fn split_scalar(q: &BigRational) -> (BigInt, BigInt) {
        (q.numer().clone(), q.denom().clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a1, b1) = Self::split_scalar(&self.scalar);
        let (a2, b2) = Self::split_scalar(&other.scalar);
        let scalar = BigRational::new(BigInt::one(), &b1 * &b2);
        let k1 = &a1 * &b2;
        let k2 = &a2 * &b1;
        if self.den == other.den {
            let num = self.num.scale(&k1).add(&other.num.scale(&k2));
            return Self::from_parts(scalar, num, self.den.clone());
        }
        let num = self
            .num
            .mul(&other.den)
            .scale(&k1)
            .add(&other.num.mul(&self.den).scale(&k2));
        Self::from_parts(scalar, num, self.den.mul(&other.den))
    }

    pub fn neg(&self) -> Self {
        RatFun { scalar: -&self.scalar, num: self.num.clone(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.nvars());
        }
        let scalar = &self.scalar * &other.scalar;
        // cross-cancel the cheap cases before multiplying out
        if self.num == other.den && other.num == self.den {
            return Self::from_rational(self.nvars(), scalar);
        }
        if self.num == other.den {
            return Self::from_parts(scalar, other.num.clone(), self.den.clone());
        }
        if other.num == self.den {
            return Self::from_parts(scalar, self.num.clone(), other.den.clone());
        }
        Self::from_parts(scalar, self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFun {
            scalar: self.scalar.recip(),
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return None;
        }
        Some(&self.scalar * self.num.evaluate(point) / d)
    }

    /// Sign-flipped copy used for display: the lowest graded term of the
    /// numerator and the denominator come out positive.
    pub(crate) fn display_parts(&self) -> (BigRational, ParamPoly, ParamPoly) {
        let n = self.normalized();
        let mut scalar = n.scalar.clone();
        let mut num = n.num.clone();
        let mut den = n.den.clone();
        if num.lowest_graded_term().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            scalar = -scalar;
        }
        if den.lowest_graded_term().is_some_and(|(_, c)| c.is_negative()) {
            den = den.neg();
            scalar = -scalar;
        }
        (scalar, num, den)
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        // num·den' and num'·den are primitive with positive lead, so the
        // scalars must agree exactly
        self.scalar == other.scalar
            && (self.is_zero() || self.num.mul(&other.den) == other.num.mul(&self.den))
    }
}

impl Eq for RatFun {}

#[cfg(test)]
mod tests {
    use super::*;
    use smallvec::SmallVec;

    fn poly(n: usize, terms: &[(&[u16], i64)]) -> ParamPoly {
        ParamPoly::from_terms(
            n,
            terms.iter().map(|(e, k)| (SmallVec::from_slice(e), BigInt::from(*k))).collect(),
        )
    }

    #[test]
    fn cancellation_by_gcd() {
        // (c^2 - 1) / (c - 1) = c + 1
        let num = poly(1, &[(&[2], 1), (&[0], -1)]);
        let den = poly(1, &[(&[1], 1), (&[0], -1)]);
        let f = RatFun::from_parts(BigRational::one(), num, den).normalized();
        assert_eq!(f.numerator(), &poly(1, &[(&[1], 1), (&[0], 1)]));
        assert!(f.denominator().is_one());
    }

    #[test]
    fn zero_numerator_is_zero() {
        let c = ParamPoly::var(1, 0);
        let z = RatFun::from_parts(BigRational::one(), c.sub(&c), c.add(&ParamPoly::one(1)));
        assert!(z.is_zero());
        assert!(z.denominator().is_one());
    }

    #[test]
    fn equality_by_cross_multiplication() {
        let c = ParamPoly::var(2, 0);
        let d = ParamPoly::var(2, 1);
        let a = RatFun::from_parts(BigRational::one(), c.mul(&d), d.mul(&d));
        let b = RatFun::from_parts(BigRational::one(), c.clone(), d.clone());
        assert_eq!(a, b);
        assert_ne!(a, RatFun::from_poly(&c));
    }
}

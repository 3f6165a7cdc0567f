//! Exact coefficient fields: ℚ, 𝔽_p with p < 2³¹, and ℚ(c₁,…,c_m).

pub mod param;
pub mod ratfun;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
pub use param::ParamPoly;
pub use ratfun::RatFun;

/// Coefficient field descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u32),
    Function(Arc<Vec<String>>),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p >= (1 << 31) || !is_prime(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Field::Prime(p as u32))
    }

    pub fn function<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Field {
        Field::Function(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p as u64,
            _ => 0,
        }
    }

    pub fn is_function_field(&self) -> bool {
        matches!(self, Field::Function(_))
    }

    pub fn param_names(&self) -> &[String] {
        match self {
            Field::Function(n) => n,
            _ => &[],
        }
    }

    pub fn zero(&self) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::zero()),
            Field::Prime(p) => FieldElement::Prime { value: 0, modulus: *p },
            Field::Function(n) => FieldElement::Function(RatFun::zero(n.len())),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, k: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(k))
    }

    pub fn from_bigint(&self, k: &BigInt) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(BigRational::from_integer(k.clone())),
            Field::Prime(p) => {
                let v = k.mod_floor(&BigInt::from(*p)).to_u32().unwrap();
                FieldElement::Prime { value: v, modulus: *p }
            }
            Field::Function(n) => FieldElement::Function(RatFun::from_rational(
                n.len(),
                BigRational::from_integer(k.clone()),
            )),
        }
    }

    /// Image of a rational number; fails in 𝔽_p when p divides the denominator.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        let num = self.from_bigint(q.numer());
        let den = self.from_bigint(q.denom());
        num.checked_div(&den)
    }

    /// The i-th parameter of a rational-function field.
    pub fn param(&self, i: usize) -> Result<FieldElement> {
        match self {
            Field::Function(n) if i < n.len() => {
                Ok(FieldElement::Function(RatFun::from_poly(&ParamPoly::var(n.len(), i))))
            }
            _ => Err(Error::UnsupportedField("no such parameter".into())),
        }
    }

    pub fn contains(&self, a: &FieldElement) -> bool {
        match (self, a) {
            (Field::Rational, FieldElement::Rational(_)) => true,
            (Field::Prime(p), FieldElement::Prime { modulus, .. }) => p == modulus,
            (Field::Function(n), FieldElement::Function(f)) => f.nvars() == n.len(),
            _ => false,
        }
    }

    /// Perfect fields on which squarefree parts and factorization are supported.
    pub fn supports_factorization(&self) -> bool {
        !self.is_function_field()
    }

    pub fn require_factorization(&self) -> Result<()> {
        if self.supports_factorization() {
            Ok(())
        } else {
            Err(Error::UnsupportedField(format!(
                "{} is a rational-function field",
                self
            )))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Prime(p) => write!(f, "Fp({})", p),
            Field::Function(n) => write!(f, "Q({})", n.join(",")),
        }
    }
}

/// Exact scalar of one of the supported fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldElement {
    Rational(BigRational),
    Prime { value: u32, modulus: u32 },
    Function(RatFun),
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i64) as u32
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_zero(),
            FieldElement::Prime { value, .. } => *value == 0,
            FieldElement::Function(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(q) => q.is_one(),
            FieldElement::Prime { value, .. } => *value == 1,
            FieldElement::Function(f) => f.is_one(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Prime { modulus, .. } => Field::Prime(*modulus),
            FieldElement::Function(f) => {
                Field::function((0..f.nvars()).map(|i| format!("c{}", i + 1)))
            }
        }
    }

    pub fn checked_add(&self, b: &FieldElement) -> Result<FieldElement> {
        Ok(match (self, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(x + y),
            (
                FieldElement::Prime { value: x, modulus: p },
                FieldElement::Prime { value: y, modulus: q },
            ) if p == q => FieldElement::Prime {
                value: ((*x as u64 + *y as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (FieldElement::Function(x), FieldElement::Function(y)) if x.nvars() == y.nvars() => {
                FieldElement::Function(x.add(y))
            }
            _ => return Err(Error::FieldMismatch),
        })
    }

    pub fn checked_sub(&self, b: &FieldElement) -> Result<FieldElement> {
        self.checked_add(&b.neg_ref())
    }

    pub fn checked_mul(&self, b: &FieldElement) -> Result<FieldElement> {
        Ok(match (self, b) {
            (FieldElement::Rational(x), FieldElement::Rational(y)) => FieldElement::Rational(x * y),
            (
                FieldElement::Prime { value: x, modulus: p },
                FieldElement::Prime { value: y, modulus: q },
            ) if p == q => FieldElement::Prime {
                value: ((*x as u64 * *y as u64) % *p as u64) as u32,
                modulus: *p,
            },
            (FieldElement::Function(x), FieldElement::Function(y)) if x.nvars() == y.nvars() => {
                FieldElement::Function(x.mul(y))
            }
            _ => return Err(Error::FieldMismatch),
        })
    }

    pub fn checked_div(&self, b: &FieldElement) -> Result<FieldElement> {
        self.checked_mul(&b.inv()?)
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            FieldElement::Rational(q) => FieldElement::Rational(q.recip()),
            FieldElement::Prime { value, modulus } => {
                FieldElement::Prime { value: inv_mod(*value, *modulus), modulus: *modulus }
            }
            FieldElement::Function(f) => FieldElement::Function(f.inv().unwrap()),
        })
    }

    pub fn neg_ref(&self) -> FieldElement {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Prime { value, modulus } => FieldElement::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            FieldElement::Function(f) => FieldElement::Function(f.neg()),
        }
    }

    pub fn pow(&self, mut k: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = match self {
            FieldElement::Rational(_) => FieldElement::Rational(BigRational::one()),
            FieldElement::Prime { modulus, .. } => FieldElement::Prime { value: 1, modulus: *modulus },
            FieldElement::Function(f) => {
                FieldElement::Function(RatFun::from_rational(f.nvars(), BigRational::one()))
            }
        };
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    /// Canonical form: gcd-normalizes rational-function fractions.
    pub fn normalize_fraction(&self) -> FieldElement {
        match self {
            FieldElement::Function(f) => FieldElement::Function(f.normalized()),
            other => other.clone(),
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            FieldElement::Rational(q) => Some(q.clone()),
            FieldElement::Function(f) => f.as_rational(),
            FieldElement::Prime { .. } => None,
        }
    }

    /// Integer representative in `0..p` of an 𝔽_p element.
    pub fn as_prime_value(&self) -> Option<u32> {
        match self {
            FieldElement::Prime { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// Evaluates the parameters of a rational-function coefficient.
    pub fn specialize(&self, point: &[BigRational]) -> Result<FieldElement> {
        match self {
            FieldElement::Function(f) => {
                f.evaluate(point).map(FieldElement::Rational).ok_or(Error::DivisionByZero)
            }
            other => Ok(other.clone()),
        }
    }

    /// Writes the element as a standalone scalar in the text grammar. The
    /// result is either a signed rational, an integer mod p, or a
    /// parenthesized parameter fraction.
    pub fn write_scalar(&self, out: &mut impl fmt::Write, field: &Field) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => out.write_str(&param::fmt_rational(q)),
            FieldElement::Prime { value, .. } => write!(out, "{}", value),
            FieldElement::Function(f) => {
                if let Some(q) = f.as_rational() {
                    return out.write_str(&param::fmt_rational(&q));
                }
                let (s, n, d) = f.display_parts();
                let names = field.param_names();
                if s.is_negative() {
                    out.write_str("-")?;
                }
                out.write_str("(")?;
                n.write_scaled(out, names, &s.abs())?;
                out.write_str(")")?;
                if !d.is_one() {
                    out.write_str("/(")?;
                    d.write_scaled(out, names, &BigRational::one())?;
                    out.write_str(")")?;
                }
                Ok(())
            }
        }
    }

    /// `(negative, magnitude text, is_unit)` for writing the element as a
    /// polynomial coefficient.
    pub(crate) fn coefficient_parts(&self, field: &Field) -> (bool, String, bool) {
        let mut s = String::new();
        match self {
            FieldElement::Rational(q) => {
                s.push_str(&param::fmt_rational(&q.abs()));
                (q.is_negative(), s, q.abs().is_one())
            }
            FieldElement::Prime { value, .. } => (false, value.to_string(), *value == 1),
            FieldElement::Function(f) => {
                if let Some(q) = f.as_rational() {
                    return FieldElement::Rational(q).coefficient_parts(field);
                }
                let (sc, n, d) = f.display_parts();
                let names = field.param_names();
                s.push('(');
                n.write_scaled(&mut s, names, &sc.abs()).unwrap();
                s.push(')');
                if !d.is_one() {
                    s.push_str("/(");
                    d.write_scaled(&mut s, names, &BigRational::one()).unwrap();
                    s.push(')');
                }
                (sc.is_negative(), s, false)
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field operation on mismatched operands")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

use std::fmt;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// A power product `x₁^a₁ ⋯ x_n^a_n` with 16-bit exponents.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct PowerProduct(SmallVec<[u16; 8]>);

impl PowerProduct {
    pub fn one(nvars: usize) -> Self {
        PowerProduct(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = Self::one(nvars);
        e.0[i] = 1;
        e
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        PowerProduct(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        debug_assert_eq!(self.nvars(), other.nvars());
        let mut out = self.0.clone();
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        Ok(PowerProduct(out))
    }

    /// Product; panics on exponent overflow.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("exponent exceeds the 16-bit limit")
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        if !self.divides(other) {
            return None;
        }
        Some(PowerProduct(other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect()))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        PowerProduct(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Some `i` with `self = x_i^k`, `k ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub(crate) fn set_exp(&mut self, i: usize, e: u16) {
        self.0[i] = e;
    }

    pub(crate) fn insert_var(&self, index: usize, e: u16) -> Self {
        let mut v = self.0.clone();
        v.insert(index, e);
        PowerProduct(v)
    }

    pub(crate) fn remove_var(&self, index: usize) -> Self {
        let mut v = self.0.clone();
        v.remove(index);
        PowerProduct(v)
    }

    /// Writes `x^2*y`, or `1` for the empty product.
    pub fn write_with(&self, out: &mut impl fmt::Write, names: &[String]) -> fmt::Result {
        let mut first = true;
        for (name, &e) in names.iter().zip(self.0.iter()) {
            if e == 0 {
                continue;
            }
            if !first {
                out.write_char('*')?;
            }
            first = false;
            out.write_str(name)?;
            if e > 1 {
                write!(out, "^{e}")?;
            }
        }
        if first {
            out.write_char('1')?;
        }
        Ok(())
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let mut s = String::new();
        self.write_with(&mut s, names).unwrap();
        s
    }
}

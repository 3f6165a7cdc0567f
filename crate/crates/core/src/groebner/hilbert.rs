use crate::error::{Error, Result};
use crate::poly::{Polynomial, TermOrdering};

use super::{groebner_basis, GroebnerBasis};

/// Affine Hilbert function data of a 0-dimensional ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    /// `dim_K(P/I)`.
    pub mu: usize,
    /// `HF^a(0), …, HF^a(ri)`.
    pub hf: Vec<usize>,
    /// First differences `ΔHF^a(0), …, ΔHF^a(ri)`.
    pub castelnuovo: Vec<usize>,
    /// Regularity index.
    pub ri: usize,
    /// `ΔHF^a(ri)`.
    pub last_difference: usize,
}

impl HilbertData {
    /// Reads the data off a Gröbner basis for a degree-compatible ordering:
    /// `ΔHF^a(i)` counts the standard monomials of degree `i`.
    pub fn from_basis(gb: &GroebnerBasis) -> Result<HilbertData> {
        if !gb.ring().ordering().is_degree_compatible() {
            return Err(Error::NotDegreeCompatible);
        }
        Ok(Self::from_degrees(gb.standard_monomials()?.iter().map(|t| t.degree() as usize)))
    }

    /// Builds the data from the degrees of a degree-filtered basis.
    pub fn from_degrees(degrees: impl IntoIterator<Item = usize>) -> HilbertData {
        let mut castelnuovo: Vec<usize> = Vec::new();
        for d in degrees {
            if castelnuovo.len() <= d {
                castelnuovo.resize(d + 1, 0);
            }
            castelnuovo[d] += 1;
        }
        let mut hf = Vec::with_capacity(castelnuovo.len());
        let mut acc = 0;
        for &c in &castelnuovo {
            acc += c;
            hf.push(acc);
        }
        let ri = castelnuovo.len().saturating_sub(1);
        HilbertData {
            mu: acc,
            last_difference: castelnuovo.last().copied().unwrap_or(0),
            hf,
            castelnuovo,
            ri,
        }
    }

    /// `ΔHF^a(ri − i) = ΔHF^a(i)` for all `i`.
    pub fn is_symmetric(&self) -> bool {
        let c = &self.castelnuovo;
        c.iter().eq(c.iter().rev())
    }
}

/// Hilbert data of the ideal generated by `generators`, computed with the
/// ring's ordering when it is degree compatible and DegRevLex otherwise.
pub fn hilbert_data(generators: &[Polynomial]) -> Result<HilbertData> {
    let ring = generators.first().ok_or(Error::NotZeroDimensional)?.ring();
    let gb = if ring.ordering().is_degree_compatible() {
        groebner_basis(generators)
    } else {
        let r = ring.with_ordering(TermOrdering::DegRevLex);
        groebner_basis(&generators.iter().map(|f| f.to_ring(&r)).collect::<Vec<_>>())
    };
    HilbertData::from_basis(&gb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::Ring;

    #[test]
    fn maximal_ideal_at_origin() {
        let r = Ring::new(Field::Rational, ["x", "y", "z"], TermOrdering::Lex).unwrap();
        let h = hilbert_data(&[r.var(0), r.var(1), r.var(2)]).unwrap();
        assert_eq!(h.castelnuovo, vec![1]);
        assert_eq!(h.mu, 1);
        assert_eq!(h.ri, 0);
    }

    #[test]
    fn positive_dimensional_is_rejected() {
        let r = Ring::new(Field::Rational, ["x", "y"], TermOrdering::DegRevLex).unwrap();
        assert_eq!(hilbert_data(&[r.var(0)]), Err(Error::NotZeroDimensional));
    }
}

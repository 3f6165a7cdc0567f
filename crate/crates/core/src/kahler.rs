//! Kähler differents: maximal minors of the Jacobian matrix. They decide
//! the complete intersection properties only when `char K ∤ μ`.

use crate::ci::{degree_compatible, minor_residues_by, CheckOptions, MinorOptions, SyzygyMatrix};
use crate::error::{Error, Result};
use crate::groebner::{degree_form_ideal, groebner_basis, GroebnerBasis};
use crate::poly::Polynomial;
use crate::primdec::primary_decomposition_seeded;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KahlerTarget {
    /// `θ` of `P/I`, from the given generators.
    Ideal,
    /// `θ` of `P/DF(I)`, from the degree forms of a Macaulay basis.
    DegreeForm,
}

#[derive(Clone, Debug)]
pub struct KahlerReport {
    /// `r × n`, entry `(i, j) = ∂fᵢ/∂xⱼ`.
    pub jacobian: Vec<Vec<Polynomial>>,
    /// Nonzero residues of the order-`n` minors with their (0-based,
    /// increasing) row subsets, in lexicographic subset order.
    pub theta_generators: Vec<(Vec<usize>, Polynomial)>,
    pub mu: usize,
    /// `char K = 0` or `char K ∤ μ`.
    pub char_ok: bool,
    /// Present only when `char_ok`.
    pub verdict: Option<bool>,
}

pub fn jacobian(f: &[Polynomial]) -> Vec<Vec<Polynomial>> {
    f.iter()
        .map(|fi| (0..fi.ring().nvars()).map(|j| fi.partial_derivative(j)).collect())
        .collect()
}

/// The transpose of the Jacobian as an `n × r` matrix, so that its
/// order-`n` minors are the maximal minors of the Jacobian.
fn transposed(jac: &[Vec<Polynomial>], f: &[Polynomial]) -> SyzygyMatrix {
    let ring = f[0].ring();
    let n = ring.nvars();
    SyzygyMatrix {
        entries: (0..n).map(|j| jac.iter().map(|row| row[j].clone()).collect()).collect(),
        row_labels: (0..n).map(|j| ring.var(j)).collect(),
        col_labels: f.to_vec(),
    }
}

fn char_divides(ch: u64, mu: usize) -> bool {
    ch != 0 && (mu as u64).is_multiple_of(ch)
}

/// Jacobian and the nonzero maximal minors (column subset, residue).
type Theta = (Vec<Vec<Polynomial>>, Vec<(Vec<usize>, Polynomial)>);

fn theta(f: &[Polynomial], modulus: &GroebnerBasis, opts: &CheckOptions) -> Theta {
    let jac = jacobian(f);
    let w = transposed(&jac, f);
    let minors = minor_residues_by(
        &w,
        |m| modulus.normal_form(&m.to_ring(modulus.ring())),
        MinorOptions { short_circuit: false, exec: opts.exec },
    );
    let gens = minors.into_iter().filter(|m| m.nonzero).map(|m| (m.column_subset, m.residue)).collect();
    (jac, gens)
}

pub fn kahler_different(generators: &[Polynomial], target: KahlerTarget, opts: &CheckOptions) -> Result<KahlerReport> {
    let generators = degree_compatible(generators)?;
    let gb = groebner_basis(&generators);
    if gb.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    let mu = gb.quotient_dimension()?;
    let (f, modulus) = match target {
        KahlerTarget::Ideal => (generators.clone(), gb),
        KahlerTarget::DegreeForm => {
            let df = degree_form_ideal(&generators)?;
            let modulus = groebner_basis(&df.forms);
            (df.forms, modulus)
        }
    };
    let (jacobian, theta_generators) = theta(&f, &modulus, opts);
    let char_ok = !char_divides(modulus.ring().field().characteristic(), mu);
    let verdict = char_ok.then_some(!theta_generators.is_empty());
    Ok(KahlerReport { jacobian, theta_generators, mu, char_ok, verdict })
}

#[derive(Clone, Debug)]
pub struct LocalKahlerReport {
    pub verdict: bool,
    /// Per primary component (reduced basis): whether `θ` survives there.
    pub components: Vec<(Vec<Polynomial>, bool)>,
}

/// Locally-CI test through `θ` of `P/I`, one primary component at a time.
/// Refuses when the characteristic divides `μ` or a local multiplicity.
pub fn kahler_local_ci_check(generators: &[Polynomial], opts: &CheckOptions) -> Result<LocalKahlerReport> {
    let comps = primary_decomposition_seeded(generators, opts.seed)?;
    if comps.is_empty() {
        return Err(Error::UnitIdeal);
    }
    let ch = generators[0].ring().field().characteristic();
    let mu: usize = comps.iter().map(|c| c.multiplicity).sum();
    if char_divides(ch, mu) {
        return Err(Error::CharacteristicObstruction { char: ch, mu });
    }
    if let Some(c) = comps.iter().find(|c| char_divides(ch, c.multiplicity)) {
        return Err(Error::CharacteristicObstruction { char: ch, mu: c.multiplicity });
    }
    let mut components = Vec::with_capacity(comps.len());
    for c in comps {
        let (_, gens) = theta(generators, &groebner_basis(&c.component), opts);
        components.push((c.component, !gens.is_empty()));
    }
    Ok(LocalKahlerReport { verdict: components.iter().all(|(_, v)| *v), components })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::{Ring, TermOrdering};

    #[test]
    fn monomial_complete_intersection() {
        let r = Ring::new(Field::Rational, ["x", "y"], TermOrdering::DegRevLex).unwrap();
        let f = [r.parse("x^2").unwrap(), r.parse("y^2").unwrap()];
        let rep = kahler_different(&f, KahlerTarget::Ideal, &CheckOptions::default()).unwrap();
        assert_eq!(rep.theta_generators[0].1.to_string(), "4*x*y");
        assert_eq!(rep.verdict, Some(true));
    }

    #[test]
    fn characteristic_dividing_length() {
        let r = Ring::new(Field::prime(5).unwrap(), ["x"], TermOrdering::DegRevLex).unwrap();
        let f = [r.parse("x^5").unwrap()];
        let rep = kahler_different(&f, KahlerTarget::DegreeForm, &CheckOptions::default()).unwrap();
        assert_eq!(rep.jacobian[0][0].to_string(), "0");
        assert!(rep.theta_generators.is_empty());
        assert!(!rep.char_ok);
        assert_eq!(rep.verdict, None);
        assert!(matches!(
            kahler_local_ci_check(&f, &CheckOptions::default()),
            Err(Error::CharacteristicObstruction { char: 5, mu: 5 })
        ));
    }

    #[test]
    fn local_multiplicity_obstruction() {
        // μ = 6 is prime to 5, the component at 0 has length 5
        let r = Ring::new(Field::prime(5).unwrap(), ["x"], TermOrdering::DegRevLex).unwrap();
        let f = [r.parse("x^5*(x - 1)").unwrap()];
        assert!(matches!(
            kahler_local_ci_check(&f, &CheckOptions::default()),
            Err(Error::CharacteristicObstruction { char: 5, mu: 5 })
        ));
    }
}

//! Primary decomposition of 0-dimensional ideals over ℚ and 𝔽_p.
//!
//! Splitting works on minimal polynomials: if `m_f = Π qₖ^{aₖ}` in `P/J`
//! then `J = ∩ₖ (J + ⟨qₖ(f)^{aₖ}⟩)` with pairwise comaximal pieces. Each
//! piece is split by every variable first and then certified with a
//! randomized maximality test of its radical.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::factor::factor_univariate;
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::poly::{Polynomial, Ring, TermOrdering};
use crate::quotient::{radical_zero_dim, QuotientRing, DEFAULT_DIMENSION_CAP};
use crate::upoly::UPoly;

/// Seed for the primitive-element search.
pub const DEFAULT_SEED: u64 = 0xC0FFEE;

/// Attempts made by [`check_maximal`] before giving up.
pub const MAX_RETRIES: usize = 20;

#[derive(Clone, Debug)]
pub struct PrimaryComponent {
    /// Reduced Gröbner basis of the `M`-primary component `Q`.
    pub component: Vec<Polynomial>,
    /// Reduced Gröbner basis of `M = Rad(Q)`.
    pub radical: Vec<Polynomial>,
    /// `(g₁,…,g_n)` generating `M`, `LT(gᵢ)` a pure power of `xᵢ` under Lex.
    pub triangular_generators: Vec<Polynomial>,
    /// `dim_K(P/Q)`.
    pub multiplicity: usize,
    pub certificate: MaximalityCertificate,
}

/// Outcome of [`check_maximal`]. When `maximal` is true, `element` is a
/// primitive element of `P/M` and `minimal_polynomial` is irreducible of
/// degree `dim_K(P/M)`; otherwise `minimal_polynomial` is reducible or not
/// squarefree, which rules out a field.
#[derive(Clone, Debug)]
pub struct MaximalityCertificate {
    pub maximal: bool,
    pub element: Polynomial,
    pub minimal_polynomial: UPoly,
    pub dimension: usize,
}

pub fn check_maximal(generators: &[Polynomial]) -> Result<MaximalityCertificate> {
    check_maximal_seeded(generators, DEFAULT_SEED)
}

pub fn check_maximal_seeded(generators: &[Polynomial], seed: u64) -> Result<MaximalityCertificate> {
    let ring = ring_of(generators)?;
    ring.field().require_factorization()?;
    let q = quotient(groebner_basis(generators))?;
    certify(&q, seed)
}

fn ring_of(generators: &[Polynomial]) -> Result<Ring> {
    Ok(generators.first().ok_or(Error::NotZeroDimensional)?.ring().clone())
}

fn quotient(gb: GroebnerBasis) -> Result<QuotientRing> {
    QuotientRing::from_basis(gb, DEFAULT_DIMENSION_CAP)
}

/// The `k`-th candidate element. Variables come first, then random linear
/// forms with growing coefficient ranges; over small prime fields, where
/// linear forms may never separate conjugate points, random elements of the
/// span of `O` are used as well.
fn candidate(q: &QuotientRing, k: usize, rng: &mut ChaCha8Rng) -> Polynomial {
    let ring = q.ring();
    let n = ring.nvars();
    let field = ring.field();
    if k < n {
        return ring.var(n - 1 - k);
    }
    let bound = (k + 1) as i64;
    let small = field.characteristic() != 0 && (field.characteristic() as usize) <= 2 * MAX_RETRIES;
    if small && k % 2 == 1 {
        let v: Vec<_> = (0..q.dim()).map(|_| field.from_i64(rng.gen_range(-bound..=bound))).collect();
        return q.from_vector(&v);
    }
    let mut f = ring.zero();
    for i in 0..n {
        let c = field.from_i64(rng.gen_range(-bound..=bound));
        if !c.is_zero() {
            f = f.add(&ring.var(i).scale(&c));
        }
    }
    f
}

fn certify(q: &QuotientRing, seed: u64) -> Result<MaximalityCertificate> {
    let ring = q.ring();
    let dim = q.dim();
    if dim == 0 {
        return Ok(MaximalityCertificate {
            maximal: false,
            element: ring.one(),
            minimal_polynomial: UPoly::one(ring.field()),
            dimension: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..MAX_RETRIES + ring.nvars() {
        let f = candidate(q, k, &mut rng);
        let m = q.minimal_polynomial(&f);
        let factors = factor_univariate(&m)?;
        let irreducible = factors.len() == 1 && factors[0].1 == 1;
        if !irreducible {
            return Ok(MaximalityCertificate { maximal: false, element: f, minimal_polynomial: m, dimension: dim });
        }
        if m.degree() == Some(dim) {
            return Ok(MaximalityCertificate { maximal: true, element: f, minimal_polynomial: m, dimension: dim });
        }
    }
    Err(Error::PrimitiveElementNotFound(MAX_RETRIES))
}

/// Splits `J` along the factorization of the minimal polynomial of `f`.
/// Returns `None` when that polynomial is a power of one irreducible.
fn split_by(q: &QuotientRing, f: &Polynomial) -> Result<Option<Vec<Vec<Polynomial>>>> {
    let m = q.minimal_polynomial(f);
    let factors = factor_univariate(&m)?;
    if factors.len() <= 1 {
        return Ok(None);
    }
    let base = q.groebner_basis().elements();
    let mut out = Vec::with_capacity(factors.len());
    for (g, a) in factors {
        let mut p = UPoly::one(g.field());
        for _ in 0..a {
            p = p.mul(&g);
        }
        let mut gens = base.to_vec();
        gens.push(q.normal_form(&p.compose(f)));
        out.push(groebner_basis(&gens).elements().to_vec());
    }
    Ok(Some(out))
}

pub fn primary_decomposition(generators: &[Polynomial]) -> Result<Vec<PrimaryComponent>> {
    primary_decomposition_seeded(generators, DEFAULT_SEED)
}

pub fn primary_decomposition_seeded(generators: &[Polynomial], seed: u64) -> Result<Vec<PrimaryComponent>> {
    let ring = ring_of(generators)?;
    ring.field().require_factorization()?;
    let gb = groebner_basis(generators);
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let mut todo = vec![gb.elements().to_vec()];
    let mut done = Vec::new();
    'work: while let Some(j) = todo.pop() {
        let q = quotient(groebner_basis(&j))?;
        if q.dim() == 0 {
            continue;
        }
        for i in 0..ring.nvars() {
            if let Some(parts) = split_by(&q, &ring.var(i))? {
                todo.extend(parts);
                continue 'work;
            }
        }
        let radical = radical_zero_dim(&j)?;
        let cert = certify(&quotient(groebner_basis(&radical))?, seed)?;
        if !cert.maximal {
            match split_by(&q, &cert.element)? {
                Some(parts) => {
                    todo.extend(parts);
                    continue 'work;
                }
                None => return Err(Error::NotPrimary),
            }
        }
        let triangular = triangular_generators(&radical)?;
        done.push(PrimaryComponent {
            multiplicity: q.dim(),
            component: canonical(j),
            radical: canonical(radical),
            triangular_generators: triangular,
            certificate: cert,
        });
    }
    done.sort_by_cached_key(|c| component_key(&c.component));
    Ok(done)
}

/// Orders a reduced basis by ascending leading term.
fn canonical(mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    gens.sort_by(|a, b| a.ring().cmp(a.leading_term().unwrap(), b.leading_term().unwrap()));
    gens
}

fn component_key(gens: &[Polynomial]) -> String {
    gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")
}

/// Reduced Lex basis of a maximal ideal, `gᵢ` having a pure power of `xᵢ` as
/// leading term. Polynomials live in the Lex variant of the input ring.
pub fn triangular_generators(maximal: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ring = ring_of(maximal)?;
    let lex = ring.with_ordering(TermOrdering::Lex);
    let gens: Vec<Polynomial> = maximal.iter().map(|f| f.to_ring(&lex)).collect();
    let gb = groebner_basis(&gens);
    let n = ring.nvars();
    if gb.len() != n {
        return Err(Error::NotMaximal);
    }
    let mut slots: Vec<Option<Polynomial>> = vec![None; n];
    for g in gb.elements() {
        match g.leading_term().and_then(|t| t.pure_power_var()) {
            Some(i) if slots[i].is_none() => slots[i] = Some(g.clone()),
            _ => return Err(Error::NotMaximal),
        }
    }
    Ok(slots.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::groebner::{ideal_equal, ideal_intersect};

    fn ring(field: Field, vars: &[&str]) -> Ring {
        Ring::new(field, vars.iter().copied(), TermOrdering::DegRevLex).unwrap()
    }

    fn parse(r: &Ring, fs: &[&str]) -> Vec<Polynomial> {
        fs.iter().map(|f| r.parse(f).unwrap()).collect()
    }

    #[test]
    fn two_reduced_points() {
        let r = ring(Field::Rational, &["x", "y"]);
        let comps = primary_decomposition(&parse(&r, &["x^2 - x", "y"])).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].component, parse(&r, &["y", "x"]));
        assert_eq!(comps[1].component, parse(&r, &["y", "x - 1"]));
        assert!(comps.iter().all(|c| c.multiplicity == 1 && c.certificate.maximal));
    }

    #[test]
    fn conjugate_points_need_a_linear_form() {
        let r = ring(Field::Rational, &["x", "y"]);
        let i = parse(&r, &["x^2 - 2", "y^2 - 2"]);
        assert!(!check_maximal(&i).unwrap().maximal);
        let comps = primary_decomposition(&i).unwrap();
        assert_eq!(comps.len(), 2);
        let inter = ideal_intersect(&comps[0].component, &comps[1].component);
        assert!(ideal_equal(&inter, &i));
    }

    #[test]
    fn small_field_without_primitive_linear_form() {
        // four points over 𝔽_4 ⊃ 𝔽_2, two Galois orbits
        let r = ring(Field::prime(2).unwrap(), &["x", "y"]);
        let i = parse(&r, &["x^2 + x + 1", "y^2 + y + 1"]);
        let comps = primary_decomposition(&i).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps.iter().map(|c| c.multiplicity).sum::<usize>(), 4);
    }

    #[test]
    fn triangular_shape() {
        let r = ring(Field::Rational, &["x", "y", "z"]);
        let m = parse(&r, &["x - z", "y - z^2", "z^3 - z - 1"]);
        assert!(check_maximal(&m).unwrap().maximal);
        let g = triangular_generators(&m).unwrap();
        let shown: Vec<String> = g.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["x - z", "y - z^2", "z^3 - z - 1"]);
        assert!(!check_maximal(&parse(&r, &["x^2", "y", "z"])).unwrap().maximal);
    }
}

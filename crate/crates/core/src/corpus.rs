//! Seeded generator of random 0-dimensional ideals for cross-checking the
//! decision procedures against each other.
//!
//! An ideal is an intersection of one to three local pieces. A piece is
//! either a monomial ideal with random staircase, moved to a random point by
//! a random unitriangular change of coordinates, or a triangular set
//! `xᵢ^{dᵢ} + (lower terms)` whose points need not be rational.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::border::check_sci_border;
use crate::ci::{check_locally_ci, check_sci_macaulay, CheckOptions};
use crate::error::Error;
use crate::field::Field;
use crate::groebner::{groebner_basis, ideal_equal, ideal_intersect};
use crate::kahler::{kahler_different, kahler_local_ci_check, KahlerTarget};
use crate::poly::{Polynomial, PowerProduct, Ring, TermOrdering};
use crate::primdec::primary_decomposition_seeded;

#[derive(Clone, Debug)]
pub struct CorpusIdeal {
    pub generators: Vec<Polynomial>,
    pub mu: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct CorpusConfig {
    pub max_vars: usize,
    pub max_mu: usize,
    pub max_pieces: usize,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig { max_vars: 3, max_mu: 12, max_pieces: 3 }
    }
}

const PRIMES: [u64; 5] = [2, 3, 5, 7, 101];
const VAR_NAMES: [&str; 3] = ["x", "y", "z"];

/// `count` ideals, half over ℚ and half over small prime fields.
pub fn random_corpus(seed: u64, count: usize, cfg: CorpusConfig) -> Vec<CorpusIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let field = if out.len() % 2 == 0 {
            Field::Rational
        } else {
            Field::prime(*PRIMES.choose(&mut rng).unwrap()).unwrap()
        };
        let n = rng.gen_range(1..=cfg.max_vars.min(VAR_NAMES.len()));
        let ring = Ring::new(field, VAR_NAMES[..n].iter().copied(), TermOrdering::DegRevLex).unwrap();
        if let Some(ideal) = random_ideal(&mut rng, &ring, cfg) {
            out.push(ideal);
        }
    }
    out
}

/// One candidate ideal; `None` when it came out too long (or as the unit
/// ideal, which cannot happen for nonempty pieces but is checked anyway).
pub fn random_ideal(rng: &mut ChaCha8Rng, ring: &Ring, cfg: CorpusConfig) -> Option<CorpusIdeal> {
    let pieces = rng.gen_range(1..=cfg.max_pieces);
    let mut budget = cfg.max_mu;
    let mut ideal: Option<Vec<Polynomial>> = None;
    for _ in 0..pieces {
        if budget == 0 {
            break;
        }
        let piece = if rng.gen_bool(0.6) {
            fat_point(rng, ring, budget.min(6))
        } else {
            triangular(rng, ring, budget.min(6))
        };
        budget = budget.saturating_sub(piece.1);
        ideal = Some(match ideal {
            None => piece.0,
            Some(acc) => ideal_intersect(&acc, &piece.0),
        });
    }
    let gens = ideal?;
    let gb = groebner_basis(&gens);
    let mu = gb.quotient_dimension().ok()?;
    (mu > 0 && mu <= cfg.max_mu).then(|| CorpusIdeal { generators: gb.elements().to_vec(), mu })
}

fn coeff(rng: &mut ChaCha8Rng, ring: &Ring, bound: i64) -> crate::field::FieldElement {
    ring.field().from_i64(rng.gen_range(-bound..=bound))
}

/// A monomial ideal of colength at most `max_len` at a random point, with
/// its planned colength.
fn fat_point(rng: &mut ChaCha8Rng, ring: &Ring, max_len: usize) -> (Vec<Polynomial>, usize) {
    let n = ring.nvars();
    let len = rng.gen_range(1..=max_len);
    let mut staircase = vec![PowerProduct::one(n)];
    while staircase.len() < len {
        let corners = outer_corners(&staircase, n);
        staircase.push(corners.choose(rng).unwrap().clone());
    }
    let monomials: Vec<Polynomial> = outer_corners(&staircase, n)
        .into_iter()
        .map(|t| Polynomial::monomial(ring, t, ring.field().one()))
        .collect();
    // xᵢ ↦ (xᵢ - aᵢ) + Σ_{j>i} c_ij (x_j - a_j)
    let shifted: Vec<Polynomial> = (0..n).map(|i| ring.var(i).sub(&ring.constant(coeff(rng, ring, 2)))).collect();
    let images: Vec<Polynomial> = (0..n)
        .map(|i| {
            let mut img = shifted[i].clone();
            for s in &shifted[i + 1..] {
                let c = coeff(rng, ring, 1);
                if !c.is_zero() {
                    img = img.add(&s.scale(&c));
                }
            }
            img
        })
        .collect();
    (monomials.iter().map(|m| substitute(m, &images)).collect(), len)
}

/// Monomials outside the staircase all of whose divisors `t/xᵢ` are in it.
fn outer_corners(staircase: &[PowerProduct], n: usize) -> Vec<PowerProduct> {
    let mut out: Vec<PowerProduct> = Vec::new();
    for t in staircase {
        for i in 0..n {
            let u = t.mul(&PowerProduct::var(n, i));
            if staircase.contains(&u) || out.contains(&u) {
                continue;
            }
            let closed = (0..n).all(|j| {
                PowerProduct::var(n, j).quotient_of(&u).is_none_or(|d| staircase.contains(&d))
            });
            if closed {
                out.push(u);
            }
        }
    }
    out
}

/// `{xᵢ^{dᵢ} + tailᵢ}` with each tail in `xᵢ^{<dᵢ}` and `x_j^{<d_j}`, j > i.
/// These leading terms are coprime, so the colength is `Π dᵢ`.
fn triangular(rng: &mut ChaCha8Rng, ring: &Ring, max_len: usize) -> (Vec<Polynomial>, usize) {
    let n = ring.nvars();
    let mut degrees = vec![1u16; n];
    let mut len = 1usize;
    for _ in 0..3 {
        let i = rng.gen_range(0..n);
        let grown = len / degrees[i] as usize * (degrees[i] as usize + 1);
        if grown <= max_len {
            len = grown;
            degrees[i] += 1;
        }
    }
    let mut gens = Vec::with_capacity(n);
    for i in 0..n {
        let mut exps = vec![0u16; n];
        exps[i] = degrees[i];
        let mut g = Polynomial::monomial(ring, PowerProduct::from_exps(&exps), ring.field().one());
        for _ in 0..rng.gen_range(1..=3) {
            let mut e = vec![0u16; n];
            for j in i..n {
                e[j] = rng.gen_range(0..degrees[j]);
            }
            let c = coeff(rng, ring, 3);
            g = g.add(&Polynomial::monomial(ring, PowerProduct::from_exps(&e), c));
        }
        gens.push(g);
    }
    (gens, len)
}

/// `f(images₀, …, images_{n-1})`.
pub fn substitute(f: &Polynomial, images: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let mut out = ring.zero();
    for (t, c) in f.terms() {
        let mut term = ring.constant(c.clone());
        for (i, &e) in t.exps().iter().enumerate() {
            if e > 0 {
                term = term.mul(&images[i].pow(e as u32));
            }
        }
        out = out.add(&term);
    }
    out
}

/// Runs every decision route on one ideal and lists the disagreements:
/// Macaulay vs border SCI, Kähler vs Wiebe (SCI and locally CI, only when
/// `char ∤ μ`), and the primary decomposition against `μ` and `I`.
pub fn cross_check(ideal: &CorpusIdeal, opts: &CheckOptions) -> Vec<String> {
    let mut bad = Vec::new();
    let mut fail = |what: &str, detail: String| bad.push(format!("{what}: {detail}"));
    let f = &ideal.generators;
    let sci = match (check_sci_macaulay(f, opts), check_sci_border(f, opts)) {
        (Ok(a), Ok(b)) => {
            if a.verdict != b.verdict {
                fail("macaulay vs border", format!("{} vs {}", a.verdict, b.verdict));
            }
            Some(a.verdict)
        }
        (a, b) => {
            fail("sci", format!("{:?} / {:?}", a.err(), b.err()));
            None
        }
    };
    let ch = f[0].ring().field().characteristic();
    let char_ok = ch == 0 || !(ideal.mu as u64).is_multiple_of(ch);
    match kahler_different(f, KahlerTarget::DegreeForm, opts) {
        Ok(k) if k.char_ok != char_ok => fail("kahler char_ok", format!("{}", k.char_ok)),
        Ok(k) => {
            if let (Some(kv), Some(wv)) = (k.verdict, sci) {
                if kv != wv {
                    fail("kahler vs wiebe sci", format!("{kv} vs {wv}"));
                }
            }
        }
        Err(e) => fail("kahler", e.to_string()),
    }
    let lci = check_locally_ci(f, opts);
    match (&lci, kahler_local_ci_check(f, opts)) {
        (Ok(w), Ok(k)) if w.verdict != k.verdict => {
            fail("kahler vs wiebe lci", format!("{} vs {}", k.verdict, w.verdict))
        }
        (Ok(_), Ok(_)) | (Ok(_), Err(Error::CharacteristicObstruction { .. })) => {}
        (w, k) => fail("lci", format!("{:?} / {:?}", w.as_ref().err(), k.err())),
    }
    match primary_decomposition_seeded(f, opts.seed) {
        Ok(comps) => {
            let total: usize = comps.iter().map(|c| c.multiplicity).sum();
            if total != ideal.mu {
                fail("multiplicities", format!("{total} != {}", ideal.mu));
            }
            let mut inter = comps[0].component.clone();
            for c in &comps[1..] {
                inter = ideal_intersect(&inter, &c.component);
            }
            if !ideal_equal(&inter, f) {
                fail("intersection", "components do not intersect to I".into());
            }
        }
        Err(e) => fail("primdec", e.to_string()),
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_reproducible_and_bounded() {
        let a = random_corpus(7, 12, CorpusConfig::default());
        let b = random_corpus(7, 12, CorpusConfig::default());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.generators, y.generators);
            assert!(x.mu >= 1 && x.mu <= 12);
        }
    }

    #[test]
    fn staircase_corners() {
        let one = PowerProduct::one(2);
        let x = PowerProduct::var(2, 0);
        let c = outer_corners(&[one, x], 2);
        assert_eq!(c, [PowerProduct::from_exps(&[0, 1]), PowerProduct::from_exps(&[2, 0])]);
    }
}

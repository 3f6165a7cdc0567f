//! Property checks shared by the core test suite and the acceptance run.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zdci::ci::{build_w_matrix, check_sci_macaulay, determinant, fitting_minor_residues, CheckOptions, FailureReason};
use zdci::corpus::{random_ideal, CorpusConfig, CorpusIdeal};
use zdci::field::{Field, FieldElement};
use zdci::groebner::{buchberger, divide_with_quotients, groebner_basis, hilbert_data, ideal_equal};
use zdci::poly::{Polynomial, PowerProduct, Ring, TermOrdering};
use zdci::primdec::primary_decomposition;

fn field_of(k: u8) -> Field {
    match k % 3 {
        0 => Field::Rational,
        1 => Field::prime(7).unwrap(),
        _ => Field::prime(101).unwrap(),
    }
}

fn ring(field: Field, n: usize, ordering: TermOrdering) -> Ring {
    Ring::new(field, ["x", "y", "z"][..n].iter().copied(), ordering).unwrap()
}

fn ordering_of(k: u8) -> TermOrdering {
    [TermOrdering::Lex, TermOrdering::DegLex, TermOrdering::DegRevLex][k as usize % 3].clone()
}

type Terms = Vec<(Vec<u16>, i64)>;

fn terms(n: usize, max_deg: u16, max_len: usize) -> impl Strategy<Value = Terms> {
    prop::collection::vec((prop::collection::vec(0..=max_deg, n), -4i64..=4), 1..=max_len)
}

fn build(r: &Ring, t: &Terms) -> Polynomial {
    let mut f = r.zero();
    for (e, c) in t {
        f = f.add(&Polynomial::monomial(r, PowerProduct::from_exps(e), r.field().from_i64(*c)));
    }
    f
}

/// Up to three generators in two or three variables.
fn generator_sets() -> impl Strategy<Value = (Ring, Vec<Polynomial>)> {
    (any::<u8>(), any::<u8>(), 2usize..=3)
        .prop_flat_map(|(fk, ok, n)| {
            let r = ring(field_of(fk), n, ordering_of(ok));
            (Just(r), prop::collection::vec(terms(n, 2, 3), 1..=3))
        })
        .prop_map(|(r, ts)| {
            let gens = ts.iter().map(|t| build(&r, t)).filter(|f| !f.is_zero()).collect::<Vec<_>>();
            let gens = if gens.is_empty() { vec![r.var(0)] } else { gens };
            (r, gens)
        })
}

fn corpus_ideal(seed: u64) -> CorpusIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let field = field_of((seed % 3) as u8);
        let n = 1 + (seed / 3 % 3) as usize;
        let r = ring(field, n, TermOrdering::DegRevLex);
        if let Some(i) = random_ideal(&mut rng, &r, CorpusConfig { max_mu: 8, ..CorpusConfig::default() }) {
            return i;
        }
    }
}

/// Fraction-free elimination with row pivoting; each division is exact.
fn bareiss(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    let r = m[0][0].ring().clone();
    let mut a = m.to_vec();
    let mut prev = r.one();
    let mut sign = r.one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = sign.neg();
                }
                None => return r.zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                let (q, rem) = divide_with_quotients(&num, std::slice::from_ref(&prev));
                assert!(rem.is_zero(), "Bareiss division must be exact");
                a[i][j] = q.into_iter().next().unwrap();
            }
        }
        prev = a[k][k].clone();
    }
    sign.mul(&a[n - 1][n - 1])
}

fn field_elements() -> impl Strategy<Value = (Field, [FieldElement; 3])> {
    let small = || (-6i64..=6, -6i64..=6, 1i64..=6, -6i64..=6);
    (any::<u8>(), small(), small(), small()).prop_map(|(k, a, b, c)| {
        let field = match k % 3 {
            0 => Field::Rational,
            1 => Field::prime(7).unwrap(),
            _ => Field::function(["c"]),
        };
        let mk = |(p, q, s, t): (i64, i64, i64, i64)| {
            // (p + q·c) / (s + t·c²) for the function field, p/s (+q) otherwise
            if field.is_function_field() {
                let cc = field.param(0).unwrap();
                let num = field.from_i64(p).checked_add(&field.from_i64(q).checked_mul(&cc).unwrap()).unwrap();
                let den = field.from_i64(s).checked_add(&field.from_i64(t).checked_mul(&cc.pow(2)).unwrap()).unwrap();
                num.checked_div(&den).unwrap()
            } else {
                let v = field.from_i64(p).checked_add(&field.from_i64(q)).unwrap();
                v.checked_div(&field.from_i64(s)).unwrap_or(v)
            }
        };
        let elems = [mk(a), mk(b), mk(c)];
        (field, elems)
    })
}

/// Fixed RNG, no regression files: every run sees the same cases.
fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

pub fn s_polynomials_reduce_to_zero(cases: u32) -> Result<(), String> {
    runner(cases).run(&generator_sets(), |(_r, gens)| {
    let gb = groebner_basis(&gens);
    prop_assert!(gb.satisfies_buchberger_criterion());
    prop_assert!(gb.is_reduced());
    for f in &gens {
        prop_assert!(gb.contains(f));
    }
        Ok(())
    }).map_err(|e| e.to_string())
}

pub fn normal_form_is_idempotent(cases: u32) -> Result<(), String> {
    runner(cases).run(&(generator_sets(), terms(3, 3, 5)), |((r, gens), t)| {
    let gb = groebner_basis(&gens);
    let t: Terms = t.into_iter().map(|(e, c)| (e[..r.nvars()].to_vec(), c)).collect();
    let f = build(&r, &t);
    let nf = gb.normal_form(&f);
    prop_assert_eq!(gb.normal_form(&nf), nf.clone());
    prop_assert!(nf.terms().iter().all(|(t, _)| gb.is_standard(t)));
    prop_assert!(gb.contains(&f.sub(&nf)));
        Ok(())
    }).map_err(|e| e.to_string())
}

pub fn lift_is_exact(cases: u32) -> Result<(), String> {
    runner(cases).run(&generator_sets(), |(_r, gens)| {
    let gb = buchberger(&gens);
    prop_assert!(gb.lift().is_some());
    prop_assert!(gb.lift_is_exact());
        Ok(())
    }).map_err(|e| e.to_string())
}

pub fn w_columns_reconstruct(cases: u32) -> Result<(), String> {
    runner(cases).run(&any::<u64>(), |seed| {
    let ideal = corpus_ideal(seed);
    for c in primary_decomposition(&ideal.generators).unwrap() {
        let w = build_w_matrix(&c.component, &c.triangular_generators).unwrap();
        prop_assert!(w.reconstructs());
        prop_assert_eq!(w.rows(), c.triangular_generators.len());
        prop_assert_eq!(w.cols(), c.component.len());
    }
        Ok(())
    }).map_err(|e| e.to_string())
}

pub fn minors_do_not_depend_on_divisor_order(cases: u32) -> Result<(), String> {
    runner(cases).run(&(any::<u64>(), 1usize..3), |(seed, rot)| {
    let ideal = corpus_ideal(seed);
    let opts = CheckOptions::default();
    for c in primary_decomposition(&ideal.generators).unwrap() {
        let g = &c.triangular_generators;
        let mut h = g.clone();
        let k = rot % h.len();
        h.rotate_left(k);
        h.reverse();
        let modulus = groebner_basis(&c.component);
        let residues = |gs: &[Polynomial]| -> Vec<Polynomial> {
            let w = build_w_matrix(&c.component, gs).unwrap();
            fitting_minor_residues(&w, &modulus, zdci::ci::MinorOptions { short_circuit: false, exec: opts.exec })
                .into_iter()
                .map(|m| m.residue)
                .collect()
        };
        let (a, b) = (residues(g), residues(&h));
        let nonzero = |v: &[Polynomial]| v.iter().any(|p| !p.is_zero());
        prop_assert_eq!(nonzero(&a), nonzero(&b));
        let with = |v: Vec<Polynomial>| c.component.iter().cloned().chain(v).collect::<Vec<_>>();
        prop_assert!(ideal_equal(&with(a), &with(b)));
    }
        Ok(())
    }).map_err(|e| e.to_string())
}

pub fn asymmetric_castelnuovo_rules_out_strictness(cases: u32) -> Result<(), String> {
    runner(cases).run(&any::<u64>(), |seed| {
    let ideal = corpus_ideal(seed);
    let h = hilbert_data(&ideal.generators).unwrap();
    let rep = check_sci_macaulay(&ideal.generators, &CheckOptions::default()).unwrap();
    if !h.is_symmetric() {
        prop_assert!(!rep.verdict);
        prop_assert_eq!(rep.failure_reason, Some(FailureReason::CastelnuovoAsymmetric));
        prop_assert!(rep.matrix.is_none());
    }
    if rep.verdict {
        prop_assert!(h.is_symmetric());
    }
        Ok(())
    }).map_err(|e| e.to_string())
}

pub fn determinant_matches_bareiss(cases: u32) -> Result<(), String> {
    runner(cases).run(&(1usize..=4, prop::collection::vec(terms(2, 2, 3), 16)), |(n, entries)| {
    let r = ring(Field::Rational, 2, TermOrdering::DegRevLex);
    let m: Vec<Vec<Polynomial>> = (0..n).map(|i| (0..n).map(|j| build(&r, &entries[i * 4 + j])).collect()).collect();
    prop_assert_eq!(determinant(&m), bareiss(&m));
        Ok(())
    }).map_err(|e| e.to_string())
}

pub fn field_axioms(cases: u32) -> Result<(), String> {
    runner(cases).run(&field_elements(), |(field, [a, b, c])| {
    let add = |x: &FieldElement, y: &FieldElement| x.checked_add(y).unwrap();
    let mul = |x: &FieldElement, y: &FieldElement| x.checked_mul(y).unwrap();
    prop_assert_eq!(add(&a, &b), add(&b, &a));
    prop_assert_eq!(mul(&a, &b), mul(&b, &a));
    prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
    prop_assert_eq!(mul(&mul(&a, &b), &c), mul(&a, &mul(&b, &c)));
    prop_assert_eq!(mul(&a, &add(&b, &c)), add(&mul(&a, &b), &mul(&a, &c)));
    prop_assert!(add(&a, &a.neg_ref()).is_zero());
    prop_assert_eq!(mul(&a, &field.one()), a.clone());
    if !a.is_zero() {
        prop_assert!(mul(&a, &a.inv().unwrap()).is_one());
    }
        Ok(())
    }).map_err(|e| e.to_string())
}

pub type Property = (&'static str, fn(u32) -> Result<(), String>);

pub const PROPERTIES: [Property; 8] = [
    ("s_polynomials_reduce_to_zero", s_polynomials_reduce_to_zero),
    ("normal_form_is_idempotent", normal_form_is_idempotent),
    ("lift_is_exact", lift_is_exact),
    ("w_columns_reconstruct", w_columns_reconstruct),
    ("minors_do_not_depend_on_divisor_order", minors_do_not_depend_on_divisor_order),
    ("asymmetric_castelnuovo_rules_out_strictness", asymmetric_castelnuovo_rules_out_strictness),
    ("determinant_matches_bareiss", determinant_matches_bareiss),
    ("field_axioms", field_axioms),
];

use zdci::ci::{check_ci_at_maximal, check_locally_ci, check_sci_macaulay, CheckOptions, FailureReason};
use zdci::field::Field;
use zdci::groebner::{degree_form_ideal, hilbert_data, ideal_equal, ideal_intersect};
use zdci::poly::{Polynomial, Ring, TermOrdering};
use zdci::primdec::primary_decomposition;
use zdci::quotient::vanishing_ideal_of_points;

fn ring(vars: &[&str]) -> Ring {
    Ring::new(Field::Rational, vars.iter().copied(), TermOrdering::DegRevLex).unwrap()
}

fn parse_all(r: &Ring, fs: &[&str]) -> Vec<Polynomial> {
    fs.iter().map(|s| r.parse(s).unwrap()).collect()
}

fn shown(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

#[test]
fn univariate_pair_at_origin() {
    let r = ring(&["x"]);
    let q = parse_all(&r, &["x*(x - 1)", "x*(x - 2)"]);
    let rep = check_ci_at_maximal(&q, &parse_all(&r, &["x"]), &CheckOptions::default()).unwrap();
    assert!(rep.verdict);
    let res: Vec<String> = rep.minors.iter().map(|m| m.residue.to_string()).collect();
    assert_eq!(res, ["-1", "-2"]);
    assert_eq!(rep.witnesses, vec![vec![0], vec![1]]);
    assert_eq!(rep.full_generation, vec![Some(false), Some(false)]);
}

#[test]
fn cubic_extension_scheme() {
    let r = ring(&["x", "y", "z"]);
    let f = parse_all(&r, &["z^2 - y", "x^2 - 2*x*z + y", "y*z - z - 1", "y^2 - y - z"]);
    let comps = primary_decomposition(&f).unwrap();
    assert_eq!(comps.len(), 1);
    assert_eq!(shown(&comps[0].triangular_generators), ["x - z", "y - z^2", "z^3 - z - 1"]);
    let rep = check_ci_at_maximal(&f, &comps[0].radical, &CheckOptions::default()).unwrap();
    let w = rep.matrix.as_ref().unwrap();
    let rows: Vec<Vec<String>> = w.entries.iter().map(|row| shown(row)).collect();
    assert_eq!(rows, [["0", "x - z", "0", "0"], ["-1", "1", "z", "z^2 + y - 1"], ["0", "0", "1", "z"]]);
    assert!(w.reconstructs());
    let res: Vec<String> = rep.minors.iter().map(|m| m.residue.to_string()).collect();
    assert_eq!(res, ["x - z", "x*z - y", "0", "-x*y + x + 1"]);
    assert_eq!(rep.witnesses, vec![vec![0, 1, 2], vec![0, 1, 3], vec![1, 2, 3]]);
    assert_eq!(rep.full_generation, vec![Some(true), Some(false), Some(true)]);
    let lci = check_locally_ci(&f, &CheckOptions::default()).unwrap();
    assert!(lci.verdict);
}

#[test]
fn cusp_pair() {
    let r = ring(&["x", "y"]);
    let q = parse_all(&r, &["y^3 - x^2", "x^3 - x^2*y", "x^2*y^2"]);
    let rep = check_ci_at_maximal(&q, &parse_all(&r, &["x", "y"]), &CheckOptions::default()).unwrap();
    let res: Vec<String> = rep.minors.iter().map(|m| m.residue.to_string()).collect();
    assert_eq!(res, ["x^2*y", "0", "0"]);
    assert_eq!(rep.witnesses, vec![vec![0, 1]]);
    assert_eq!(rep.full_generation, vec![Some(false)]);
    let pair = rep.witness_generators(0);
    let pair: Vec<Polynomial> = pair.iter().map(|p| p.to_ring(&r)).collect();
    assert!(ideal_equal(&pair, &ideal_intersect(&q, &parse_all(&r, &["x - 1", "y - 1"]))));
}

fn twisted_cubic_points(r: &Ring) -> Vec<Polynomial> {
    let f = r.field();
    let pts: Vec<Vec<_>> = [0i64, 1, -1, 2, -2, 3, -3, 4]
        .iter()
        .map(|&t| vec![f.from_i64(t), f.from_i64(t * t), f.from_i64(t * t * t)])
        .collect();
    vanishing_ideal_of_points(r, &pts).unwrap()
}

#[test]
fn eight_points_on_twisted_cubic() {
    let r = ring(&["x", "y", "z"]);
    let i = twisted_cubic_points(&r);
    let h = hilbert_data(&i).unwrap();
    assert_eq!(h.mu, 8);
    assert_eq!(h.castelnuovo, vec![1, 3, 3, 1]);
    let df = degree_form_ideal(&i).unwrap();
    let expected = parse_all(&r, &["y^2 - x*z", "x*y", "x^2", "y*z^2 - 2/15*z^3", "x*z^2 - 1/30*z^3", "z^4"]);
    assert!(ideal_equal(&df.forms, &expected));
    let rep = check_sci_macaulay(&i, &CheckOptions::default()).unwrap();
    assert!(!rep.verdict);
    assert_eq!(rep.failure_reason, Some(FailureReason::AllMinorsZero));
    assert_eq!(rep.minors.len(), 20);
    assert!(rep.minors.iter().all(|m| m.residue.is_zero()));
}

#[test]
fn plane_curve_is_strict() {
    let r = ring(&["x", "y"]);
    let f = parse_all(
        &r,
        &[
            "x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1",
            "x*y - y^5 + 2*y^4 - y^3 + 2*y^2",
            "y^7 - 4*y^6 + 5*y^5 - 4*y^4 + 4*y^3 - y",
        ],
    );
    let rep = check_sci_macaulay(&f, &CheckOptions::default()).unwrap();
    let res: Vec<String> = rep.minors.iter().map(|m| m.residue.to_string()).collect();
    assert_eq!(res, ["0", "0", "0", "0", "-y^4", "0"]);
    assert_eq!(rep.witnesses, vec![vec![1, 3]]);
    assert_eq!(shown(&rep.witness_generators(0)), ["x^3 - 2*x*y - x - 1", "x^2*y - y^3 - y"]);
}

#[test]
fn twisted_cubic_basis_matches_display() {
    let r = ring(&["x", "y", "z"]);
    let i = twisted_cubic_points(&r);
    let gb = [
        "y^2 - x*z",
        "x*y - z",
        "x^2 - y",
        "y*z^2 - 2/15*z^3 + 49*x*z + 98/5*y*z - 14*z^2 + 336/5*x - 36*y - 260/3*z",
        "x*z^2 - 1/30*z^3 - 91/10*y*z - 96/5*x + 82/3*z",
        "z^4 - 418/5*z^3 + 6699*x*z + 61446/5*y*z - 1408*z^2 + 210672/5*x - 5292*y - 54340*z",
    ];
    assert_eq!(shown(&i), gb);
    let df = degree_form_ideal(&i).unwrap();
    assert_eq!(shown(df.macaulay.elements()), gb);
    assert_eq!(shown(&df.forms), ["y^2 - x*z", "x*y", "x^2", "y*z^2 - 2/15*z^3", "x*z^2 - 1/30*z^3", "z^4"]);
}

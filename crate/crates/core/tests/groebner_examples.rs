use zdci::field::Field;
use zdci::groebner::{buchberger, degree_form_ideal, hilbert_data, ideal_equal, ideal_intersect};
use zdci::poly::{Polynomial, Ring, TermOrdering};

fn ring(vars: &[&str]) -> Ring {
    Ring::new(Field::Rational, vars.iter().copied(), TermOrdering::DegRevLex).unwrap()
}

fn parse_all(r: &Ring, fs: &[&str]) -> Vec<Polynomial> {
    fs.iter().map(|s| r.parse(s).unwrap()).collect()
}

#[test]
fn plane_curve_basis_and_degree_forms() {
    let r = ring(&["x", "y"]);
    let f = parse_all(
        &r,
        &[
            "x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1",
            "x*y - y^5 + 2*y^4 - y^3 + 2*y^2",
            "y^7 - 4*y^6 + 5*y^5 - 4*y^4 + 4*y^3 - y",
        ],
    );
    let gb = buchberger(&f);
    let expected = parse_all(
        &r,
        &["y^5 - 2*y^4 + y^3 - x*y - 2*y^2", "x^3 - 2*x*y - x - 1", "x*y^3 - 2*x*y^2 - y", "x^2*y - y^3 - y"],
    );
    assert_eq!(gb.elements(), &expected[..]);
    assert!(gb.lift_is_exact());
    let df = degree_form_ideal(&f).unwrap();
    assert_eq!(df.forms, parse_all(&r, &["y^5", "x^3", "x*y^3", "x^2*y - y^3"]));
    let h = hilbert_data(&f).unwrap();
    assert_eq!(h.castelnuovo, vec![1, 2, 3, 2, 1]);
    assert_eq!(h.mu, 9);
    assert!(h.is_symmetric());
}

#[test]
fn cusp_pair_is_component_intersection() {
    let r = ring(&["x", "y"]);
    let q = parse_all(&r, &["y^3 - x^2", "x^3 - x^2*y", "x^2*y^2"]);
    let pair = parse_all(&r, &["y^3 - x^2", "x^3 - x^2*y"]);
    let other = parse_all(&r, &["x - 1", "y - 1"]);
    assert!(ideal_equal(&pair, &ideal_intersect(&q, &other)));
    assert!(!ideal_equal(&pair, &q));
}

#[test]
fn cubic_extension_triple_intersection() {
    let r = ring(&["x", "y", "z"]);
    let i = parse_all(&r, &["z^2 - y", "x^2 - 2*x*z + y", "y*z - z - 1", "y^2 - y - z"]);
    let triple = vec![i[0].clone(), i[1].clone(), i[3].clone()];
    let other = parse_all(&r, &["z", "y", "x^2"]);
    assert!(ideal_equal(&triple, &ideal_intersect(&i, &other)));
}

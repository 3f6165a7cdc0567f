use zdci::ci::{check_locally_ci, check_sci_macaulay, CheckOptions};
use zdci::field::Field;
use zdci::kahler::{kahler_different, kahler_local_ci_check, KahlerTarget};
use zdci::poly::{Polynomial, Ring, TermOrdering};

fn parse_all(vars: &[&str], fs: &[&str]) -> Vec<Polynomial> {
    let r = Ring::new(Field::Rational, vars.iter().copied(), TermOrdering::DegRevLex).unwrap();
    fs.iter().map(|s| r.parse(s).unwrap()).collect()
}

#[test]
fn plane_curve_degree_forms() {
    let f = parse_all(
        &["x", "y"],
        &[
            "x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1",
            "x*y - y^5 + 2*y^4 - y^3 + 2*y^2",
            "y^7 - 4*y^6 + 5*y^5 - 4*y^4 + 4*y^3 - y",
        ],
    );
    let opts = CheckOptions::default();
    let rep = kahler_different(&f, KahlerTarget::DegreeForm, &opts).unwrap();
    assert_eq!(rep.mu, 9);
    assert!(rep.char_ok);
    assert_eq!(rep.verdict, Some(true));
    assert_eq!(rep.verdict, Some(check_sci_macaulay(&f, &opts).unwrap().verdict));
    // 4 degree forms in 2 variables
    assert_eq!(rep.jacobian.len(), 4);
    assert!(rep.jacobian.iter().all(|row| row.len() == 2));
}

#[test]
fn local_checks_agree_with_wiebe() {
    let opts = CheckOptions::default();
    let cases: [(&[&str], &[&str], bool); 3] = [
        (&["x", "y", "z"], &["z^2 - y", "x^2 - 2*x*z + y", "y*z - z - 1", "y^2 - y - z"], true),
        (&["x", "y"], &["x^2", "x*y", "y^2"], false),
        (&["x", "y"], &["x^2 - x", "y"], true),
    ];
    for (vars, gens, expected) in cases {
        let f = parse_all(vars, gens);
        let k = kahler_local_ci_check(&f, &opts).unwrap();
        assert_eq!(k.verdict, expected, "{gens:?}");
        assert_eq!(check_locally_ci(&f, &opts).unwrap().verdict, expected, "{gens:?}");
    }
}

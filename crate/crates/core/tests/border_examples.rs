use zdci::border::{border_basis, check_sci_border, family_sci_locus};
use zdci::ci::{check_sci_macaulay, CheckOptions};
use zdci::field::Field;
use zdci::poly::{Polynomial, PowerProduct, Ring, TermOrdering};

const PARAMS: [&str; 8] = ["c21", "c23", "c32", "c34", "c41", "c42", "c43", "c44"];

const FAMILY: [&str; 4] = [
    "y^2 - (-c23*c41*c42 + c21*c42*c43 - c21*c44 + c23) - c21*x - (-c21*c42 - c41*c44 + c43)*y - c41*x*y",
    "x^2 - (-c34*c41*c42 + c32*c41*c44 - c32*c43 + c34) - (-c32*c41 - c42*c43 + c44)*x - c32*y - c42*x*y",
    "x*y^2 - (c23*c32*c41 - c21*c32*c43 + c21*c34) - c23*x - (c21*c32 + c34*c41)*y - c43*x*y",
    "x^2*y - (c21*c34*c42 - c21*c32*c44 + c23*c32) - (c21*c32 + c23*c42)*x - c34*y - c44*x*y",
];

fn family_ring() -> Ring {
    Ring::new(Field::function(PARAMS), ["x", "y"], TermOrdering::DegRevLex).unwrap()
}

fn order_ideal(r: &Ring) -> Vec<PowerProduct> {
    ["1", "y", "x", "x*y"].iter().map(|t| r.parse(t).unwrap().leading_term().unwrap().clone()).collect()
}

#[test]
fn universal_family_locus() {
    let r = family_ring();
    let f: Vec<Polynomial> = FAMILY.iter().map(|s| r.parse(s).unwrap()).collect();
    let locus = family_sci_locus(&f, Some(order_ideal(&r)), &CheckOptions::default()).unwrap();
    assert!(locus.generic_only);
    assert_eq!(locus.minors.len(), 1);
    assert_eq!(locus.minors[0].column_subset, vec![0, 1]);
    assert_eq!(locus.minors[0].residue.to_string(), "-(1 - c41*c42)*x*y");
    assert_eq!(locus.describe(), "1 - c41*c42 != 0");
}

#[test]
fn plane_curve_methods_agree() {
    let r = Ring::new(Field::Rational, ["x", "y"], TermOrdering::DegRevLex).unwrap();
    let f: Vec<Polynomial> = [
        "x^3 - x - 2*y^5 + 4*y^4 - 2*y^3 + 4*y^2 - 1",
        "x*y - y^5 + 2*y^4 - y^3 + 2*y^2",
        "y^7 - 4*y^6 + 5*y^5 - 4*y^4 + 4*y^3 - y",
    ]
    .iter()
    .map(|s| r.parse(s).unwrap())
    .collect();
    let b = border_basis(&f).unwrap();
    assert!(b.degree_filtered);
    let opts = CheckOptions::default();
    assert!(check_sci_border(&f, &opts).unwrap().verdict);
    assert!(check_sci_macaulay(&f, &opts).unwrap().verdict);
}

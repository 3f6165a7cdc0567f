use crate::error::{Error, Result};
use crate::poly::{Polynomial, Ring, TermOrdering};

use super::{groebner_basis, GroebnerBasis};

/// A Macaulay basis of `I` (its reduced degree-compatible Gröbner basis)
/// together with the degree forms generating `DF(I)`.
#[derive(Clone, Debug)]
pub struct DegreeFormIdeal {
    pub macaulay: GroebnerBasis,
    pub forms: Vec<Polynomial>,
}

pub fn degree_form_ideal(generators: &[Polynomial]) -> Result<DegreeFormIdeal> {
    let ring = generators.first().ok_or(Error::ZeroPolynomial)?.ring();
    if !ring.ordering().is_degree_compatible() {
        return Err(Error::NotDegreeCompatible);
    }
    let macaulay = groebner_basis(generators);
    let forms = macaulay.elements().iter().map(|g| g.degree_form().unwrap()).collect();
    Ok(DegreeFormIdeal { macaulay, forms })
}

fn basis_in(ring: &Ring, gens: &[Polynomial]) -> GroebnerBasis {
    let fs: Vec<Polynomial> = gens.iter().map(|f| f.to_ring(ring)).collect();
    if fs.is_empty() {
        return groebner_basis(&[ring.zero()]);
    }
    groebner_basis(&fs)
}

fn comparison_ring(r: &Ring) -> Ring {
    r.with_ordering(TermOrdering::DegRevLex)
}

/// Equality of ideals via their reduced DegRevLex bases.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let Some(f) = a.first().or(b.first()) else { return true };
    let ring = comparison_ring(f.ring());
    let mut ga = basis_in(&ring, a).elements().to_vec();
    let mut gb = basis_in(&ring, b).elements().to_vec();
    let key = |p: &Polynomial, q: &Polynomial| ring.cmp(p.leading_term().unwrap(), q.leading_term().unwrap());
    ga.sort_by(key);
    gb.sort_by(key);
    ga == gb
}

pub fn ideal_contains(ideal: &[Polynomial], f: &Polynomial) -> bool {
    let ring = comparison_ring(f.ring());
    basis_in(&ring, ideal).contains(&f.to_ring(&ring))
}

/// `I ∩ J` via `(t·I + (1−t)·J) ∩ P`, eliminating the tag `t`. The result is
/// the reduced Gröbner basis in the ring of the inputs.
pub fn ideal_intersect(a: &[Polynomial], b: &[Polynomial]) -> Vec<Polynomial> {
    let ring = a.first().or(b.first()).expect("intersection of empty generator lists").ring().clone();
    let mut names = vec![fresh_name(&ring)];
    names.extend(ring.vars().iter().cloned());
    let tagged = Ring::new(
        ring.field().clone(),
        names,
        TermOrdering::Elimination { block: 1, rest: Box::new(ring.ordering().clone()) },
    )
    .unwrap();
    let t = tagged.var(0);
    let one_minus_t = tagged.one().sub(&t);
    let mut gens = Vec::new();
    for f in a {
        gens.push(t.mul(&f.shift_into(&tagged, 1)));
    }
    for f in b {
        gens.push(one_minus_t.mul(&f.shift_into(&tagged, 1)));
    }
    let gb = groebner_basis(&gens);
    let kept: Vec<Polynomial> =
        gb.elements().iter().filter_map(|g| g.unshift_into(&ring, 1)).collect();
    if kept.is_empty() {
        return Vec::new();
    }
    groebner_basis(&kept).elements().to_vec()
}

fn fresh_name(ring: &Ring) -> String {
    let mut name = "t_".to_string();
    while ring.var_index(&name).is_some() || ring.field().param_names().contains(&name) {
        name.push('_');
    }
    name
}

pub fn is_zero_dimensional(generators: &[Polynomial]) -> bool {
    !generators.is_empty() && groebner_basis(generators).is_zero_dimensional()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn parse_all(r: &Ring, fs: &[&str]) -> Vec<Polynomial> {
        fs.iter().map(|s| r.parse(s).unwrap()).collect()
    }

    #[test]
    fn intersection_of_points() {
        let r = Ring::new(Field::Rational, ["x", "y"], TermOrdering::DegRevLex).unwrap();
        let i = parse_all(&r, &["x", "y"]);
        let j = parse_all(&r, &["x - 1", "y"]);
        let k = ideal_intersect(&i, &j);
        assert!(ideal_equal(&k, &parse_all(&r, &["x^2 - x", "y"])));
        assert!(ideal_equal(&ideal_intersect(&i, &i), &i));
    }

    #[test]
    fn degree_form_ideal_needs_graded_ordering() {
        let r = Ring::new(Field::Rational, ["x"], TermOrdering::Lex).unwrap();
        assert!(matches!(degree_form_ideal(&[r.var(0)]), Err(Error::NotDegreeCompatible)));
    }
}

//! Order ideals, border bases and the border-basis route to the strict
//! complete intersection test, including parametric families.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::ci::{degree_compatible, sci_from_forms, CIReport, CheckOptions};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::groebner::{groebner_basis, hilbert_data, GroebnerBasis, HilbertData};
use crate::linalg::solve;
use crate::poly::{Polynomial, PowerProduct, Ring};
use crate::quotient::{QuotientRing, DEFAULT_DIMENSION_CAP};

/// Finite set of terms closed under division, with its border.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderIdeal {
    ring: Ring,
    terms: Vec<PowerProduct>,
    border: Vec<PowerProduct>,
}

fn by_degree(ring: &Ring) -> impl Fn(&PowerProduct, &PowerProduct) -> Ordering + '_ {
    move |a, b| a.degree().cmp(&b.degree()).then_with(|| ring.cmp(a, b))
}

impl OrderIdeal {
    /// Validates and sorts `terms` by degree, then by the term ordering.
    pub fn new(ring: &Ring, terms: Vec<PowerProduct>) -> Result<Self> {
        let n = ring.nvars();
        let set: BTreeSet<PowerProduct> = terms.iter().cloned().collect();
        if set.len() != terms.len() {
            return Err(Error::InvalidOrderIdeal("repeated term".into()));
        }
        if terms.iter().any(|t| t.nvars() != n) {
            return Err(Error::InvalidOrderIdeal("term arity does not match the ring".into()));
        }
        if !set.contains(&PowerProduct::one(n)) {
            return Err(Error::InvalidOrderIdeal("1 is missing".into()));
        }
        for t in &terms {
            for i in 0..n {
                if t.exp(i) > 0 {
                    let mut s = t.clone();
                    s.set_exp(i, t.exp(i) - 1);
                    if !set.contains(&s) {
                        return Err(Error::InvalidOrderIdeal(format!(
                            "{} is missing a divisor",
                            t.to_string_with(ring.vars())
                        )));
                    }
                }
            }
        }
        let mut terms = terms;
        terms.sort_by(by_degree(ring));
        let mut border: Vec<PowerProduct> = terms
            .iter()
            .flat_map(|t| (0..n).map(move |i| t.mul(&PowerProduct::var(n, i))))
            .filter(|b| !set.contains(b))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        border.sort_by(by_degree(ring));
        Ok(OrderIdeal { ring: ring.clone(), terms, border })
    }

    /// The standard monomials of a 0-dimensional Gröbner basis.
    pub fn from_groebner(gb: &GroebnerBasis) -> Result<Self> {
        Self::new(gb.ring(), gb.standard_monomials()?)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[PowerProduct] {
        &self.terms
    }

    pub fn border(&self) -> &[PowerProduct] {
        &self.border
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `hᵢ = #{j : deg tⱼ = i}`.
    pub fn degree_counts(&self) -> HilbertData {
        HilbertData::from_degrees(self.terms.iter().map(|t| t.degree() as usize))
    }
}

/// `gⱼ = bⱼ − Σᵢ γᵢⱼ tᵢ`, one per border term.
#[derive(Clone, Debug)]
pub struct BorderBasis {
    pub order_ideal: OrderIdeal,
    pub polynomials: Vec<Polynomial>,
    pub degree_filtered: bool,
}

/// Diagnostics for the degree-filtered characterization. `hf` holds the
/// affine Hilbert function of the ideal.
#[derive(Clone, Debug)]
pub struct DegreeFilteredCheck {
    /// `HF^a(i) = #{j : deg tⱼ ≤ i}` for all `i`.
    pub hilbert_counts: bool,
    /// `bⱼ` lies in the support of `DF(gⱼ)` for all `j`.
    pub border_in_degree_forms: bool,
    pub hf: Vec<usize>,
    /// `DF(g₁),…,DF(g_ν)`, generators of `DF(I)` when both conditions hold.
    pub degree_forms: Vec<Polynomial>,
}

impl DegreeFilteredCheck {
    pub fn holds(&self) -> bool {
        self.hilbert_counts && self.border_in_degree_forms
    }

    /// The first failing condition.
    pub fn failure(&self) -> Option<&'static str> {
        if !self.hilbert_counts {
            Some("Hilbert function differs from the degree counts of O")
        } else if !self.border_in_degree_forms {
            Some("a border term is missing from the degree form of its polynomial")
        } else {
            None
        }
    }
}

fn ideal_ring(generators: &[Polynomial]) -> Result<Ring> {
    Ok(generators.first().ok_or(Error::NotZeroDimensional)?.ring().clone())
}

/// Border basis for `O` = complement of the leading-term ideal of a
/// degree-compatible Gröbner basis; `gⱼ = bⱼ − NF(bⱼ)`.
pub fn border_basis(generators: &[Polynomial]) -> Result<BorderBasis> {
    let generators = degree_compatible(generators)?;
    let gb = groebner_basis(&generators);
    if gb.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    let o = OrderIdeal::from_groebner(&gb)?;
    let polynomials = o
        .border()
        .iter()
        .map(|b| {
            let t = Polynomial::monomial(gb.ring(), b.clone(), gb.ring().field().one());
            t.sub(&gb.normal_form(&t))
        })
        .collect();
    finish(o, polynomials)
}

/// Border basis for a prescribed order ideal, which must map to a basis of
/// `P/I`. Coefficients come from linear algebra on residue vectors.
pub fn border_basis_with_order_ideal(generators: &[Polynomial], terms: Vec<PowerProduct>) -> Result<BorderBasis> {
    let ring = ideal_ring(generators)?;
    let o = OrderIdeal::new(&ring, terms)?;
    let q = QuotientRing::from_basis(groebner_basis(generators), DEFAULT_DIMENSION_CAP)?;
    if q.dim() == 0 {
        return Err(Error::UnitIdeal);
    }
    if q.dim() != o.len() {
        return Err(Error::InvalidOrderIdeal(format!("|O| = {} but dim P/I = {}", o.len(), q.dim())));
    }
    let one = ring.field().one();
    let residue = |t: &PowerProduct| q.residue_vector(&Polynomial::monomial(&ring, t.clone(), one.clone()));
    let columns: Vec<Vec<FieldElement>> = o.terms().iter().map(residue).collect();
    if crate::linalg::rank(ring.field(), &columns) != o.len() {
        return Err(Error::InvalidOrderIdeal("terms are linearly dependent modulo I".into()));
    }
    let mut polynomials = Vec::with_capacity(o.border().len());
    for b in o.border() {
        let gamma = solve(ring.field(), &columns, &residue(b)).expect("O spans P/I");
        let mut terms = vec![(b.clone(), one.clone())];
        for (t, c) in o.terms().iter().zip(gamma) {
            if !c.is_zero() {
                terms.push((t.clone(), -&c));
            }
        }
        polynomials.push(Polynomial::from_terms(&ring, terms));
    }
    finish(o, polynomials)
}

fn finish(order_ideal: OrderIdeal, polynomials: Vec<Polynomial>) -> Result<BorderBasis> {
    let mut b = BorderBasis { order_ideal, polynomials, degree_filtered: false };
    b.degree_filtered = check_degree_filtered(&b)?.holds();
    Ok(b)
}

/// Evaluates the two degree-filtered conditions for a border basis.
pub fn check_degree_filtered(b: &BorderBasis) -> Result<DegreeFilteredCheck> {
    let hf = hilbert_data(&b.polynomials)?.hf;
    let counts = b.order_ideal.degree_counts().hf;
    let len = hf.len().max(counts.len());
    let at = |v: &[usize], i: usize| v.get(i).or(v.last()).copied().unwrap_or(0);
    let hilbert_counts = (0..len).all(|i| at(&hf, i) == at(&counts, i));
    let degree_forms: Vec<Polynomial> = b.polynomials.iter().map(|g| g.degree_form()).collect::<Result<_>>()?;
    let border_in_degree_forms = degree_forms
        .iter()
        .zip(b.order_ideal.border())
        .all(|(df, t)| !df.coeff_of(t).is_zero());
    Ok(DegreeFilteredCheck { hilbert_counts, border_in_degree_forms, hf, degree_forms })
}

/// Strict complete intersection test from a degree filtered border basis.
pub fn check_sci_border(generators: &[Polynomial], opts: &CheckOptions) -> Result<CIReport> {
    sci_from_border(&border_basis(generators)?, opts)
}

/// As [`check_sci_border`] for a prescribed order ideal.
pub fn check_sci_border_with_order_ideal(
    generators: &[Polynomial],
    terms: Vec<PowerProduct>,
    opts: &CheckOptions,
) -> Result<CIReport> {
    sci_from_border(&border_basis_with_order_ideal(generators, terms)?, opts)
}

fn sci_from_border(b: &BorderBasis, opts: &CheckOptions) -> Result<CIReport> {
    let check = check_degree_filtered(b)?;
    if !check.holds() {
        return Err(Error::NotDegreeFiltered);
    }
    let o = &b.order_ideal;
    let gr = QuotientRing::from_basis(groebner_basis(&check.degree_forms), DEFAULT_DIMENSION_CAP)?;
    let ring = o.ring().clone();
    let one = ring.field().one();
    let columns: Vec<Vec<FieldElement>> = o
        .terms()
        .iter()
        .map(|t| gr.residue_vector(&Polynomial::monomial(&ring, t.clone(), one.clone())))
        .collect();
    // residues are written in the basis O of P/DF(I)
    let reduce = |m: &Polynomial| {
        let v = gr.residue_vector(&m.to_ring(&ring));
        let coords = solve(ring.field(), &columns, &v).expect("O is a basis of P/DF(I)");
        let terms = o.terms().iter().cloned().zip(coords).filter(|(_, c)| !c.is_zero()).collect();
        Polynomial::from_terms(&ring, terms)
    };
    sci_from_forms(&check.degree_forms, &b.polynomials, reduce, o.degree_counts(), opts)
}

/// Non-vanishing conditions attached to one nonzero minor: its residue is
/// nonzero exactly where one of `conditions` is.
#[derive(Clone, Debug)]
pub struct MinorCondition {
    pub column_subset: Vec<usize>,
    pub residue: Polynomial,
    /// Normalized numerators of the residue's coefficients, printed.
    pub conditions: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct FamilyLocus {
    pub report: CIReport,
    pub minors: Vec<MinorCondition>,
    /// Union of all conditions, deduplicated and sorted.
    pub locus: Vec<String>,
    /// Gröbner and border computations are done over ℚ(c…), so the result
    /// describes the generic fiber only.
    pub generic_only: bool,
}

impl FamilyLocus {
    /// `"p != 0 or q != 0"`, or `"0 != 0"` when no minor survives.
    pub fn describe(&self) -> String {
        if self.locus.is_empty() {
            return "0 != 0".into();
        }
        self.locus.iter().map(|c| format!("{c} != 0")).collect::<Vec<_>>().join(" or ")
    }
}

/// Numerator of a coefficient, primitive, sign fixed so that the lowest
/// graded term is positive; nonzero constants become `1`.
fn condition_of(c: &FieldElement, names: &[String]) -> String {
    let FieldElement::Function(r) = c.normalize_fraction() else {
        return "1".into();
    };
    let num = r.numerator();
    if num.is_constant() {
        return "1".into();
    }
    let (_, num) = num.primitive_split();
    let num = if num.lowest_graded_term().is_some_and(|(_, k)| k < &num_bigint::BigInt::from(0)) {
        num.neg()
    } else {
        num
    };
    let mut s = String::new();
    num.write_scaled(&mut s, names, &num_rational::BigRational::from_integer(1.into())).unwrap();
    s
}

/// SCI locus of a family over ℚ(c₁,…,c_m): the border route over the
/// rational-function field, with one set of coefficient conditions per
/// nonzero minor residue.
pub fn family_sci_locus(
    generators: &[Polynomial],
    terms: Option<Vec<PowerProduct>>,
    opts: &CheckOptions,
) -> Result<FamilyLocus> {
    let ring = ideal_ring(generators)?;
    if !ring.field().is_function_field() {
        return Err(Error::UnsupportedField(format!("family mode needs parameters, got {}", ring.field())));
    }
    let report = match terms {
        Some(t) => check_sci_border_with_order_ideal(generators, t, opts)?,
        None => check_sci_border(generators, opts)?,
    };
    let names = ring.field().param_names().to_vec();
    let mut minors = Vec::new();
    let mut locus = BTreeSet::new();
    for m in report.minors.iter().filter(|m| m.nonzero) {
        let mut conditions: Vec<String> =
            m.residue.terms().iter().map(|(_, c)| condition_of(c, &names)).collect::<BTreeSet<_>>().into_iter().collect();
        conditions.sort();
        locus.extend(conditions.iter().cloned());
        minors.push(MinorCondition { column_subset: m.column_subset.clone(), residue: m.residue.clone(), conditions });
    }
    Ok(FamilyLocus { report, minors, locus: locus.into_iter().collect(), generic_only: true })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::poly::TermOrdering;

    fn ring(vars: &[&str]) -> Ring {
        Ring::new(Field::Rational, vars.iter().copied(), TermOrdering::DegRevLex).unwrap()
    }

    fn terms(r: &Ring, ts: &[&str]) -> Vec<PowerProduct> {
        ts.iter().map(|t| r.parse(t).unwrap().leading_term().unwrap().clone()).collect()
    }

    #[test]
    fn monomial_border() {
        let r = ring(&["x", "y"]);
        let b = border_basis(&[r.parse("x^2").unwrap(), r.parse("y^2").unwrap()]).unwrap();
        let o: Vec<String> = b.order_ideal.terms().iter().map(|t| t.to_string_with(r.vars())).collect();
        assert_eq!(o, ["1", "y", "x", "x*y"]);
        let shown: Vec<String> = b.polynomials.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["y^2", "x^2", "x*y^2", "x^2*y"]);
        assert!(b.degree_filtered);
    }

    #[test]
    fn rejects_non_order_ideals() {
        let r = ring(&["x", "y"]);
        assert!(OrderIdeal::new(&r, terms(&r, &["1", "x^2"])).is_err());
        assert!(OrderIdeal::new(&r, terms(&r, &["x"])).is_err());
    }

    #[test]
    fn non_degree_filtered_prebasis() {
        let r = ring(&["x", "y"]);
        let i = [r.parse("x - y^2").unwrap(), r.parse("y^3").unwrap()];
        let b = border_basis_with_order_ideal(&i, terms(&r, &["1", "y", "y^2"])).unwrap();
        assert!(!b.degree_filtered);
        let c = check_degree_filtered(&b).unwrap();
        assert!(!c.hilbert_counts);
        assert!(!c.border_in_degree_forms);
        assert_eq!(c.failure(), Some("Hilbert function differs from the degree counts of O"));
    }

    #[test]
    fn prime_power_in_one_variable() {
        let r = Ring::new(Field::prime(5).unwrap(), ["x"], TermOrdering::DegRevLex).unwrap();
        let rep = check_sci_border(&[r.parse("x^5").unwrap()], &CheckOptions::default()).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.matrix.unwrap().entries[0][0].to_string(), "x^4");
    }
}

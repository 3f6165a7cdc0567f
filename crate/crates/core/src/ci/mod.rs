//! Complete-intersection checks through Wiebe's criterion: `R` is a complete
//! intersection iff the order-`n` minors of `W` do not all vanish in `R`.

mod minors;

pub use minors::{
    build_w_matrix, determinant, fitting_minor_residues, minor_residues_by, w_from_degree_forms, MinorOptions,
    MinorReport, SyzygyMatrix,
};

use std::fmt;

use crate::error::{Error, Result};
use crate::groebner::{degree_form_ideal, groebner_basis, ideal_equal, HilbertData};
use crate::par::Exec;
use crate::poly::{Polynomial, TermOrdering};
use crate::primdec::{
    check_maximal_seeded, primary_decomposition_seeded, triangular_generators, PrimaryComponent, DEFAULT_SEED,
};
use crate::quotient::radical_zero_dim;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureReason {
    CastelnuovoAsymmetric,
    AllMinorsZero,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::CastelnuovoAsymmetric => "CastelnuovoAsymmetric",
            FailureReason::AllMinorsZero => "AllMinorsZero",
        })
    }
}

#[derive(Clone, Debug)]
pub struct CIReport {
    pub verdict: bool,
    /// `None` when the symmetry gate stopped the computation.
    pub matrix: Option<SyzygyMatrix>,
    pub minors: Vec<MinorReport>,
    /// Column subsets whose minor residue is nonzero.
    pub witnesses: Vec<Vec<usize>>,
    /// Per witness: whether those generators give the whole ideal. `None`
    /// when this cannot be decided over the coefficient field.
    pub full_generation: Vec<Option<bool>>,
    pub hilbert: Option<HilbertData>,
    pub failure_reason: Option<FailureReason>,
}

impl CIReport {
    fn from_minors(matrix: SyzygyMatrix, minors: Vec<MinorReport>, hilbert: Option<HilbertData>) -> Self {
        let witnesses: Vec<Vec<usize>> =
            minors.iter().filter(|m| m.nonzero).map(|m| m.column_subset.clone()).collect();
        let verdict = !witnesses.is_empty();
        CIReport {
            verdict,
            matrix: Some(matrix),
            minors,
            full_generation: vec![None; witnesses.len()],
            witnesses,
            hilbert,
            failure_reason: (!verdict).then_some(FailureReason::AllMinorsZero),
        }
    }

    /// The generators selected by witness `k`.
    pub fn witness_generators(&self, k: usize) -> Vec<Polynomial> {
        let m = self.matrix.as_ref().expect("witnesses need the matrix");
        self.witnesses[k].iter().map(|&j| m.col_labels[j].clone()).collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub short_circuit: bool,
    pub exec: Exec,
    /// Seed for the maximality certificate of primary decomposition.
    pub seed: u64,
    /// Skip the check that `Q` is `M`-primary.
    pub assume_primary: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { short_circuit: false, exec: Exec::default(), seed: DEFAULT_SEED, assume_primary: false }
    }
}

impl CheckOptions {
    fn minors(&self) -> MinorOptions {
        MinorOptions { short_circuit: self.short_circuit, exec: self.exec }
    }
}

fn nonempty(generators: &[Polynomial]) -> Result<&Polynomial> {
    generators.first().ok_or(Error::NotZeroDimensional)
}

/// Whether `Rad(⟨f⟩) = M`, in which case `⟨f⟩ = Q`.
fn radical_is(f: &[Polynomial], maximal: &[Polynomial]) -> Result<bool> {
    if !crate::groebner::is_zero_dimensional(f) {
        return Ok(false);
    }
    Ok(ideal_equal(&radical_zero_dim(f)?, maximal))
}

/// Decides whether `Q·P_M` is generated by a regular sequence, for an
/// `M`-primary `Q`. `W` is built by Lex division of the generators of `Q`
/// by the triangular generators of `M`; minors are reduced modulo `Q` in
/// the ring of `Q`.
pub fn check_ci_at_maximal(q: &[Polynomial], m: &[Polynomial], opts: &CheckOptions) -> Result<CIReport> {
    let ring = nonempty(q)?.ring().clone();
    nonempty(m)?;
    let m: Vec<Polynomial> = m.iter().map(|f| f.to_ring(&ring)).collect();
    let decidable = ring.field().supports_factorization();
    if !opts.assume_primary {
        ring.field().require_factorization()?;
        if !check_maximal_seeded(&m, opts.seed)?.maximal {
            return Err(Error::NotMaximal);
        }
        if !radical_is(q, &m)? {
            return Err(Error::NotPrimary);
        }
    }
    let g = triangular_generators(&m)?;
    let w = build_w_matrix(q, &g)?;
    let modulus = groebner_basis(q);
    if modulus.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    let minors = fitting_minor_residues(&w, &modulus, opts.minors());
    let mut report = CIReport::from_minors(w, minors, None);
    if decidable {
        let gens: Vec<Vec<Polynomial>> = (0..report.witnesses.len()).map(|k| report.witness_generators(k)).collect();
        let mut full = Vec::with_capacity(gens.len());
        for f in &gens {
            let f: Vec<Polynomial> = f.iter().map(|p| p.to_ring(&ring)).collect();
            full.push(Some(radical_is(&f, &m)?));
        }
        report.full_generation = full;
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub component: PrimaryComponent,
    pub report: CIReport,
}

#[derive(Clone, Debug)]
pub struct LocalCIReport {
    pub verdict: bool,
    pub components: Vec<ComponentReport>,
}

/// Primary decomposition followed by [`check_ci_at_maximal`] per component.
pub fn check_locally_ci(generators: &[Polynomial], opts: &CheckOptions) -> Result<LocalCIReport> {
    let comps = primary_decomposition_seeded(generators, opts.seed)?;
    if comps.is_empty() {
        return Err(Error::UnitIdeal);
    }
    let inner = CheckOptions { assume_primary: true, ..*opts };
    let mut components = Vec::with_capacity(comps.len());
    for c in comps {
        let report = check_ci_at_maximal(&c.component, &c.radical, &inner)?;
        components.push(ComponentReport { component: c, report });
    }
    Ok(LocalCIReport { verdict: components.iter().all(|c| c.report.verdict), components })
}

/// The ring of `generators` with DegRevLex substituted for an ordering that
/// is not degree compatible.
pub fn degree_compatible(generators: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ring = nonempty(generators)?.ring();
    if ring.ordering().is_degree_compatible() {
        return Ok(generators.to_vec());
    }
    let r = ring.with_ordering(TermOrdering::DegRevLex);
    Ok(generators.iter().map(|f| f.to_ring(&r)).collect())
}

/// Strict complete intersection test on `P/DF(I)` using a Macaulay basis
/// (the reduced degree-compatible Gröbner basis).
pub fn check_sci_macaulay(generators: &[Polynomial], opts: &CheckOptions) -> Result<CIReport> {
    let generators = degree_compatible(generators)?;
    let df = degree_form_ideal(&generators)?;
    if df.macaulay.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    if !df.macaulay.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let hilbert = HilbertData::from_basis(&df.macaulay)?;
    let modulus = groebner_basis(&df.forms);
    sci_from_forms(&df.forms, df.macaulay.elements(), |m| modulus.normal_form(m), hilbert, opts)
}

/// Shared tail of both strict-CI algorithms: symmetry gate, `W` from the
/// degree forms, minors modulo `DF(I)` through `reduce`.
pub(crate) fn sci_from_forms<F>(
    forms: &[Polynomial],
    labels: &[Polynomial],
    reduce: F,
    hilbert: HilbertData,
    opts: &CheckOptions,
) -> Result<CIReport>
where
    F: Fn(&Polynomial) -> Polynomial + Sync,
{
    if !hilbert.is_symmetric() {
        return Ok(CIReport {
            verdict: false,
            matrix: None,
            minors: Vec::new(),
            witnesses: Vec::new(),
            full_generation: Vec::new(),
            hilbert: Some(hilbert),
            failure_reason: Some(FailureReason::CastelnuovoAsymmetric),
        });
    }
    let w = w_from_degree_forms(forms, labels)?;
    let minors = minor_residues_by(&w, reduce, opts.minors());
    let mut report = CIReport::from_minors(w, minors, Some(hilbert));
    // the selected generators form a strict regular sequence generating I
    report.full_generation = vec![Some(true); report.witnesses.len()];
    Ok(report)
}

//! Command-line frontend: problem files in, verdicts and reports out.
//!
//! Exit codes: 0 the property holds (or the computation succeeded), 1 the
//! property fails, 2 input or usage error, 3 unsupported input.

pub mod problem;
pub mod report;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use sha2::{Digest, Sha256};

use zdci::border::{check_sci_border, check_sci_border_with_order_ideal, family_sci_locus};
use zdci::ci::{check_ci_at_maximal, check_locally_ci, check_sci_macaulay, degree_compatible, CheckOptions, CIReport};
use zdci::groebner::{groebner_basis, hilbert_data};
use zdci::kahler::{kahler_different, kahler_local_ci_check, KahlerTarget};
use zdci::par::{with_threads, Exec};
use zdci::poly::Polynomial;
use zdci::primdec::{primary_decomposition_seeded, PrimaryComponent};
use zdci::quotient::vanishing_ideal_of_points;
use zdci::Error;

pub use problem::{parse_problem, ProblemFile};
use report::{strings, subset_label, ComponentJson, LocusJson, Report, TimingJson};

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "zdci", version, about = "Complete-intersection checks for zero-dimensional ideals")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the machine-readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Seed of the primitive-element search (decimal or 0x-hex).
    #[arg(long, global = true, value_parser = parse_seed, default_value = "0xC0FFEE")]
    seed: u64,
    /// Skip the primariness check of `check ci-at`.
    #[arg(long, global = true)]
    assume_primary: bool,
    /// Stop the minor enumeration at the first nonzero residue.
    #[arg(long, global = true)]
    short_circuit: bool,
    /// Ideal to work on (default: the first one in the file).
    #[arg(long, global = true)]
    ideal: Option<String>,
    /// Use the vanishing ideal of this point set instead.
    #[arg(long, global = true)]
    points: Option<String>,
    /// Worker threads for the minor maps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Evaluate the minors sequentially.
    #[arg(long, global = true)]
    sequential: bool,
    /// Report wall-clock time; this makes the output run-dependent.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reduced Gröbner basis in the declared ordering.
    Gb { file: PathBuf },
    /// Affine Hilbert function, Castelnuovo function and regularity index.
    Hilbert { file: PathBuf },
    /// Primary decomposition with maximality certificates.
    Primdec { file: PathBuf },
    /// Complete-intersection checks.
    Check {
        #[command(subcommand)]
        check: CheckCommand,
    },
    /// Generator subsets forming (strict) regular sequences.
    Witnesses {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Macaulay)]
        method: Method,
        /// Witnesses at this maximal ideal instead of strict ones.
        #[arg(long)]
        maximal: Option<String>,
    },
    /// Kähler different from the Jacobian minors.
    Kahler {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Df)]
        target: Target,
        /// Test every primary component (locally complete intersection).
        #[arg(long)]
        local: bool,
    },
    /// Strict complete intersection locus of a family over Q(c...).
    FamilySci { file: PathBuf },
}

#[derive(Subcommand, Debug)]
enum CheckCommand {
    /// Locally complete intersection.
    Lci { file: PathBuf },
    /// Complete intersection at a maximal ideal.
    CiAt {
        file: PathBuf,
        /// Name of the maximal ideal in the file.
        #[arg(long)]
        maximal: String,
    },
    /// Strict complete intersection.
    Sci {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Macaulay)]
        method: Method,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Macaulay,
    Border,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Target {
    #[value(name = "self")]
    Ideal,
    Df,
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed `{s}`: {e}"))
}

/// What a run produced: exit code and the two output streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Entry point shared by the binary and the tests.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_HOLDS };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    let start = Instant::now();
    match with_threads(cli.threads, || execute(&cli)) {
        Ok(mut rep) => {
            if cli.timing {
                rep.timing = Some(TimingJson { total_ms: start.elapsed().as_secs_f64() * 1e3 });
            }
            let code = if rep.verdict == Some(false) { EXIT_FAILS } else { EXIT_HOLDS };
            let stdout = if cli.json {
                serde_json::to_string_pretty(&rep).expect("report serializes") + "\n"
            } else {
                report::render_text(&rep)
            };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure(code, msg)) => Outcome { code, stdout: String::new(), stderr: format!("error: {msg}\n") },
    }
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegreeCapExceeded(..)
            | Error::UnsupportedField(_)
            | Error::PrimitiveElementNotFound(_)
            | Error::DimensionCap(..)
            | Error::CharacteristicObstruction { .. }
            | Error::ExponentOverflow => EXIT_UNSUPPORTED,
            _ => EXIT_INPUT,
        };
        Failure(code, e.to_string())
    }
}

fn input_error(msg: impl Into<String>) -> Failure {
    Failure(EXIT_INPUT, msg.into())
}

struct Input {
    problem: ProblemFile,
    digest: String,
}

fn load(file: &PathBuf) -> Result<Input, Failure> {
    let bytes = std::fs::read(file).map_err(|e| input_error(format!("{}: {e}", file.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| input_error(format!("{}: not UTF-8", file.display())))?;
    let problem = parse_problem(&text).map_err(|e| input_error(format!("{}: {e}", file.display())))?;
    Ok(Input { problem, digest: format!("sha256:{:x}", Sha256::digest(&bytes)) })
}

impl Cli {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            short_circuit: self.short_circuit,
            exec: if self.sequential { Exec::Sequential } else { Exec::Parallel },
            seed: self.seed,
            assume_primary: self.assume_primary,
        }
    }

    /// The ideal to work on and its display name. `skip` names an ideal that
    /// plays another role (the maximal ideal of `ci-at`).
    fn select(&self, p: &ProblemFile, skip: Option<&str>) -> Result<(String, Vec<Polynomial>), Failure> {
        if let Some(name) = &self.points {
            let pts = p.point_set(name).ok_or_else(|| input_error(format!("no point set `{name}`")))?;
            return Ok((format!("points {name}"), vanishing_ideal_of_points(&p.ring, pts)?));
        }
        if let Some(name) = &self.ideal {
            let g = p.ideal(name).ok_or_else(|| input_error(format!("no ideal `{name}`")))?;
            return Ok((name.clone(), g.to_vec()));
        }
        if let Some((name, g)) = p.ideals.iter().find(|(n, _)| Some(n.as_str()) != skip) {
            return Ok((name.clone(), g.clone()));
        }
        if let Some((name, pts)) = p.points.first() {
            return Ok((format!("points {name}"), vanishing_ideal_of_points(&p.ring, pts)?));
        }
        Err(input_error("the file defines no ideal"))
    }
}

fn execute(cli: &Cli) -> Result<Report, Failure> {
    let opts = cli.options();
    match &cli.command {
        Command::Gb { file } => {
            let (input, name, gens) = prepare(cli, file, None)?;
            let gb = groebner_basis(&gens);
            let mut rep = new_report(cli, "gb", &input, name);
            rep.details = Some(details([("basis", Value::from(strings(gb.elements())))]));
            Ok(rep)
        }
        Command::Hilbert { file } => {
            let (input, name, gens) = prepare(cli, file, None)?;
            let h = hilbert_data(&degree_compatible(&gens)?)?;
            let mut rep = new_report(cli, "hilbert", &input, name);
            rep.hilbert = Some((&h).into());
            Ok(rep)
        }
        Command::Primdec { file } => {
            let (input, name, gens) = prepare(cli, file, None)?;
            let comps = primary_decomposition_seeded(&gens, opts.seed)?;
            let mut rep = new_report(cli, "primdec", &input, name);
            rep.components = Some(comps.iter().map(|c| component_json(c, None)).collect());
            Ok(rep)
        }
        Command::Check { check: CheckCommand::Lci { file } } => {
            let (input, name, gens) = prepare(cli, file, None)?;
            let lci = check_locally_ci(&gens, &opts)?;
            let mut rep = new_report(cli, "check lci", &input, name);
            rep.verdict = Some(lci.verdict);
            rep.components = Some(lci.components.iter().map(|c| component_json(&c.component, Some(&c.report))).collect());
            Ok(rep)
        }
        Command::Check { check: CheckCommand::CiAt { file, maximal } } => ci_at(cli, file, maximal, "check ci-at"),
        Command::Check { check: CheckCommand::Sci { file, method } } => sci(cli, file, *method, "check sci"),
        Command::Witnesses { file, maximal: Some(m), .. } => ci_at(cli, file, m, "witnesses"),
        Command::Witnesses { file, method, maximal: None } => sci(cli, file, *method, "witnesses"),
        Command::Kahler { file, target, local } => {
            let (input, name, gens) = prepare(cli, file, None)?;
            if *local {
                let k = kahler_local_ci_check(&gens, &opts)?;
                let mut rep = new_report(cli, "kahler --local", &input, name);
                rep.verdict = Some(k.verdict);
                let comps: Vec<Value> = k
                    .components
                    .iter()
                    .map(|(q, v)| details([("component", Value::from(strings(q))), ("theta_nonzero", Value::from(*v))]))
                    .collect();
                rep.details = Some(details([("components", Value::from(comps))]));
                return Ok(rep);
            }
            let t = match target {
                Target::Ideal => KahlerTarget::Ideal,
                Target::Df => KahlerTarget::DegreeForm,
            };
            let k = kahler_different(&gens, t, &opts)?;
            let command = match target {
                Target::Ideal => "kahler --target self",
                Target::Df => "kahler --target df",
            };
            let mut rep = new_report(cli, command, &input, name);
            rep.verdict = k.verdict;
            let theta: Vec<Value> = k
                .theta_generators
                .iter()
                .map(|(s, r)| details([("subset", Value::from(subset_label(s))), ("residue", Value::from(r.to_string()))]))
                .collect();
            rep.details = Some(details([
                ("char_ok", Value::from(k.char_ok)),
                ("jacobian", Value::from(k.jacobian.iter().map(|r| strings(r)).collect::<Vec<_>>())),
                ("mu", Value::from(k.mu)),
                ("theta", Value::from(theta)),
                ("theta_is_zero", Value::from(k.theta_generators.is_empty())),
            ]));
            Ok(rep)
        }
        Command::FamilySci { file } => {
            let (input, name, gens) = prepare(cli, file, None)?;
            let order = input.problem.orders.first().map(|(_, t)| t.clone());
            let fam = family_sci_locus(&gens, order, &opts)?;
            let mut rep = new_report(cli, "family-sci", &input, name).with_ci(&fam.report, &gens);
            rep.verdict = Some(!fam.locus.is_empty());
            rep.locus = Some(LocusJson {
                conditions: fam.locus.clone(),
                description: fam.describe(),
                generic_only: fam.generic_only,
            });
            Ok(rep)
        }
    }
}

fn prepare(cli: &Cli, file: &PathBuf, skip: Option<&str>) -> Result<(Input, String, Vec<Polynomial>), Failure> {
    let input = load(file)?;
    let (name, gens) = cli.select(&input.problem, skip)?;
    Ok((input, name, gens))
}

fn new_report(cli: &Cli, command: &str, input: &Input, ideal: String) -> Report {
    Report::new(command, input.digest.clone(), input.problem.ring.to_string(), ideal, cli.seed)
}

fn details<const N: usize>(entries: [(&str, Value); N]) -> Value {
    Value::Object(entries.into_iter().map(|(k, v)| (k.to_string(), v)).collect())
}

fn component_json(c: &PrimaryComponent, report: Option<&CIReport>) -> ComponentJson {
    ComponentJson {
        component: strings(&c.component),
        radical: strings(&c.radical),
        multiplicity: c.multiplicity,
        triangular_generators: strings(&c.triangular_generators),
        primitive_element: c.certificate.element.to_string(),
        minimal_polynomial: c.certificate.minimal_polynomial.to_string(),
        verdict: report.map(|r| r.verdict),
        witnesses: report.map(|r| r.witnesses.iter().map(|w| subset_label(w)).collect()),
    }
}

fn ci_at(cli: &Cli, file: &PathBuf, maximal: &str, command: &str) -> Result<Report, Failure> {
    let (input, name, q) = prepare(cli, file, Some(maximal))?;
    let m = input.problem.ideal(maximal).ok_or_else(|| input_error(format!("no ideal `{maximal}`")))?.to_vec();
    let rep = check_ci_at_maximal(&q, &m, &cli.options())?;
    Ok(new_report(cli, command, &input, format!("{name} at {maximal}")).with_ci(&rep, &q))
}

fn sci(cli: &Cli, file: &PathBuf, method: Method, command: &str) -> Result<Report, Failure> {
    let (input, name, gens) = prepare(cli, file, None)?;
    let opts = cli.options();
    let (rep, label) = match method {
        Method::Macaulay => (check_sci_macaulay(&gens, &opts)?, "macaulay"),
        Method::Border => {
            let rep = match input.problem.orders.first() {
                Some((_, terms)) => check_sci_border_with_order_ideal(&gens, terms.clone(), &opts)?,
                None => check_sci_border(&gens, &opts)?,
            };
            (rep, "border")
        }
    };
    // witnesses of the strict test index the degree forms behind W
    let labels = rep.matrix.as_ref().map(|w| w.col_labels.clone()).unwrap_or_default();
    let mut out = new_report(cli, &format!("{command} --method {label}"), &input, name).with_ci(&rep, &labels);
    if command == "witnesses" {
        out.minors = None;
        out.details = None;
    }
    Ok(out)
}

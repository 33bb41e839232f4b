//! Command-line front end: `verify`, `rmatrix`, `ybe` and `sweep`.
//!
//! Exit codes: 0 pass, 1 verification or domain failure, 2 usage error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coefficients::{Colour, ParamPoint, ParamSampler, C64, DEFAULT_GUARD};
use crate::colour::check_group_laws;
use crate::error::AlgebraError;
use crate::hopf::{
    default_pairs, default_probes, odd_pair_bialgebra_discrepancy, verify_antipode_axiom,
    verify_bialgebra, verify_coassociativity, verify_colour_transformations, verify_counit_axiom,
    verify_reduction, verify_relations, ColourTuple, ColouredMapContext,
};
use crate::pbw::{AlgebraElement, Home, TwistConvention};
use crate::representation::{
    check_coloured_graded_ybe, check_cross_validation, check_hexagons, check_intertwiner,
    check_inverse, check_perturbed_ybe, check_relations, coloured_r_closed_form,
};

pub const DEFAULT_TOLERANCE: f64 = 1e-10;

/// Whether a check passes when its residual stays below the tolerance, or
/// (for negative controls) when it exceeds it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    AtMost,
    Exceeds,
}

/// Name, identity checked, default tolerance and direction of each check.
pub const CHECKS: &[(&str, &str, f64, Direction)] = [
    (
        "group_laws",
        "σ^{ν′}∘σ^ν = σ^{ν′ν} (up to γ), σ^1 = id, σ^{1/ν}∘σ^ν = id (up to γ), σ_ν∘σ^ν = id",
        1e-11,
        Direction::AtMost,
    ),
    ("grading_compatibility", "σ^ν∘γ = γ∘σ^ν", 1e-11, Direction::AtMost),
    (
        "colour_transformations",
        "(σ^λ_α⊗σ^μ_β)∘Δ^{α,β}_ν = Δ^{λ,μ}_ν = Δ^{λ,μ}_γ∘σ^γ_ν; ε_α∘σ^α_ν = ε_ν; σ^μ_α∘S^α_ν = S^μ_ν = S^μ_β∘σ^β_ν",
        DEFAULT_TOLERANCE,
        Direction::AtMost,
    ),
    (
        "coassociativity",
        "(Δ^{α,β}_λ⊗σ^γ_μ)∘Δ^{λ,μ}_ν = (σ^α_{λ′}⊗Δ^{β,γ}_{μ′})∘Δ^{λ′,μ′}_ν",
        DEFAULT_TOLERANCE,
        Direction::AtMost,
    ),
    (
        "counit",
        "(ε_λ⊗σ^α_μ)∘Δ^{λ,μ}_ν = (σ^α_{λ′}⊗ε_{μ′})∘Δ^{λ′,μ′}_ν = σ^α_ν",
        DEFAULT_TOLERANCE,
        Direction::AtMost,
    ),
    (
        "antipode",
        "m∘(S^α_λ⊗σ^α_μ)∘Δ^{λ,μ}_ν = m∘(σ^α_{λ′}⊗S^α_{μ′})∘Δ^{λ′,μ′}_ν = ι∘ε_ν",
        DEFAULT_TOLERANCE,
        Direction::AtMost,
    ),
    (
        "bialgebra",
        "Δ∘m = (m⊗m)∘(id⊗τ⊗id)∘(Δ⊗Δ), Δ∘ι = ι⊗ι, ε∘m = ε⊗ε, ε∘ι = 1",
        DEFAULT_TOLERANCE,
        Direction::AtMost,
    ),
    (
        "bialgebra_sign_sensitivity",
        "Δ(ψ⁺ψ⁻) with twist sign (−1)^{deg a·deg a} must fail (termwise relative discrepancy)",
        1e-3,
        Direction::Exceeds,
    ),
    (
        "relations",
        "Δ and D preserve [H,ψ±] = ±2ψ±, [Z,·] = 0, (ψ±)² = 0, {ψ⁺,ψ⁻} = (q^{2Z}−1)/(q²−1)",
        1e-11,
        Direction::AtMost,
    ),
    (
        "reduction",
        "λ = μ = ν = 1: coloured Δ, ε, S equal the uncoloured maps; ordinary graded YBE",
        1e-11,
        Direction::AtMost,
    ),
    (
        "inverse",
        "(R^{λ,μ})⁻¹ = (I + c·A⊗B)·diag⁻¹",
        1e-12,
        Direction::AtMost,
    ),
    (
        "intertwiner",
        "τ∘Δ^{μ,λ}_ν(a) = R^{λ,μ} Δ^{λ,μ}_ν(a) (R^{λ,μ})⁻¹ on H, Z, ψ⁺, ψ⁻",
        DEFAULT_TOLERANCE,
        Direction::AtMost,
    ),
    (
        "hexagons",
        "(Δ^{α,β}_λ⊗σ^γ_μ)(R^{λ,μ}) = R^{α,γ}₁₃R^{β,γ}₂₃, (σ^α_λ⊗Δ^{β,γ}_μ)(R^{λ,μ}) = R^{α,γ}₁₃R^{α,β}₁₂",
        DEFAULT_TOLERANCE,
        Direction::AtMost,
    ),
    (
        "ybe",
        "R^{λ,μ}₁₂R^{λ,ν}₁₃R^{μ,ν}₂₃ = R^{μ,ν}₂₃R^{λ,ν}₁₃R^{λ,μ}₁₂",
        DEFAULT_TOLERANCE,
        Direction::AtMost,
    ),
    (
        "ybe_negative_control",
        "coloured YBE with the off-diagonal entry of R^{λ,μ} scaled by 1.01 must fail",
        1e-6,
        Direction::Exceeds,
    ),
    (
        "crossval",
        "(σ^λ⊗σ^μ)(R_q) in the representation equals the closed-form 4×4 matrix",
        1e-12,
        Direction::AtMost,
    ),
]
.as_slice();

#[derive(Debug, Parser)]
#[command(
    name = "colhopf",
    version,
    about = "Coloured Hopf superalgebra verification for U_{q,s}(gl(1/1))"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the full verification suite over seeded random draws.
    Verify(VerifyArgs),
    /// Print the coloured 4×4 R-matrix at one point.
    Rmatrix(RmatrixArgs),
    /// Coloured graded YBE residual at one point.
    Ybe(YbeArgs),
    /// YBE and cross-validation residuals over a parameter grid, as CSV.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub draws: u64,
    /// Override a check tolerance, e.g. `--tolerance ybe=1e-12`.
    #[arg(long, value_name = "NAME=VALUE", value_parser = parse_tolerance)]
    pub tolerance: Vec<(String, f64)>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Lower bound on |q^{2ν} − 1| for admissible points and colours.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    pub guard: f64,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub q: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub s: C64,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    pub guard: f64,
}

#[derive(Debug, Args)]
pub struct RmatrixArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub lambda: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub mu: C64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct YbeArgs {
    #[command(flatten)]
    pub point: PointArgs,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub lambda: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub mu: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true, default_value = "1")]
    pub nu: C64,
    /// Relative perturbation of the off-diagonal entry of R^{λ,μ}.
    #[arg(long, allow_hyphen_values = true)]
    pub perturb: Option<f64>,
    #[arg(long, value_name = "NAME=VALUE", value_parser = parse_tolerance)]
    pub tolerance: Vec<(String, f64)>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Grid such as `q=2;s=1;lambda=0.5,1,2;mu=1,1.5-0.5i;nu=1`.
    #[arg(long)]
    pub grid: String,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    pub guard: f64,
}

/// Parses `a`, `bi`, `a+bi` or `a-bi` (`j` is accepted for `i`).
pub fn parse_complex(text: &str) -> Result<C64, String> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("invalid complex literal {text:?}, expected a+bi");
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t
            .parse::<f64>()
            .map(|re| C64::new(re, 0.0))
            .map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse::<f64>().map_err(|_| bad())?,
    };
    let re = re.parse::<f64>().map_err(|_| bad())?;
    Ok(C64::new(re, im))
}

/// Formats in the syntax accepted by [`parse_complex`].
pub fn format_complex(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

fn parse_tolerance(text: &str) -> Result<(String, f64), String> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| format!("expected NAME=VALUE, got {text:?}"))?;
    let value: f64 = value
        .parse()
        .map_err(|_| format!("invalid tolerance value {value:?}"))?;
    if value.is_nan() || value < 0.0 {
        return Err(format!("tolerance must be nonnegative, got {value}"));
    }
    Ok((name.trim().to_string(), value))
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// One row of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub paper_ref: String,
    /// Worst residual over all draws: the largest for `at_most` checks, the
    /// smallest for `exceeds` checks.
    pub max_residual: f64,
    pub tolerance: f64,
    pub direction: Direction,
    pub pass: bool,
}

/// How often the composition and inverse laws of the colour group held only
/// after composing one side with `γ`.
#[derive(Debug, Clone, Default, Serialize)]
pub struct BranchSensitivity {
    pub draws: u64,
    pub composition_sign_flips: u64,
    pub inverse_sign_flips: u64,
    pub max_signed_composition_residual: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub draws: u64,
    pub checks: Vec<CheckResult>,
    pub pass: bool,
    pub duration_ms: u128,
    pub branch_sensitivity: BranchSensitivity,
}

struct Tally {
    worst: Vec<f64>,
    tolerances: Vec<f64>,
}

impl Tally {
    fn new(overrides: &[(String, f64)]) -> Result<Self, Failure> {
        let mut tolerances: Vec<f64> = CHECKS.iter().map(|c| c.2).collect();
        for (name, value) in overrides {
            let k = check_index(name)?;
            tolerances[k] = *value;
        }
        let worst = CHECKS
            .iter()
            .map(|c| match c.3 {
                Direction::AtMost => 0.0,
                Direction::Exceeds => f64::INFINITY,
            })
            .collect();
        Ok(Self { worst, tolerances })
    }

    fn record(&mut self, name: &str, value: f64) {
        let k = check_index(name).expect("known check");
        let w = &mut self.worst[k];
        *w = match CHECKS[k].3 {
            _ if value.is_nan() || w.is_nan() => f64::NAN,
            Direction::AtMost => w.max(value),
            Direction::Exceeds => w.min(value),
        };
    }

    fn results(&self) -> Vec<CheckResult> {
        CHECKS
            .iter()
            .enumerate()
            .map(|(k, &(name, identity, _, direction))| {
                let (worst, tol) = (self.worst[k], self.tolerances[k]);
                let pass = match direction {
                    Direction::AtMost => worst <= tol,
                    Direction::Exceeds => worst > tol,
                };
                CheckResult {
                    name: name.to_string(),
                    paper_ref: identity.to_string(),
                    max_residual: worst,
                    tolerance: tol,
                    direction,
                    pass,
                }
            })
            .collect()
    }
}

fn check_index(name: &str) -> Result<usize, Failure> {
    CHECKS.iter().position(|c| c.0 == name).ok_or_else(|| {
        let known: Vec<&str> = CHECKS.iter().map(|c| c.0).collect();
        Failure::Usage(format!(
            "unknown check {name:?}; known checks: {}",
            known.join(", ")
        ))
    })
}

/// Runs every verifier on `draws` seeded draws.
pub fn run_verification(
    seed: u64,
    draws: u64,
    guard: f64,
    overrides: &[(String, f64)],
) -> Result<VerificationReport, String> {
    run_suite(seed, draws, guard, overrides).map_err(|e| match e {
        Failure::Usage(m) | Failure::Domain(m) => m,
    })
}

fn run_suite(
    seed: u64,
    draws: u64,
    guard: f64,
    overrides: &[(String, f64)],
) -> Result<VerificationReport, Failure> {
    let start = Instant::now();
    let mut tally = Tally::new(overrides)?;
    let mut branch = BranchSensitivity {
        draws,
        ..Default::default()
    };
    let mut sampler = ParamSampler::with_guard(seed, guard);
    for _ in 0..draws {
        let p = sampler.point();

        let nu = sampler.colour(&p);
        let nu_prime = sampler.colour_composable(&p, nu);
        let probes = default_probes(sampler.rng(), Home::base(p), 3);
        let laws = check_group_laws(nu, nu_prime, &probes)?;
        let group = [
            laws.composition_up_to_sign,
            laws.identity,
            laws.inverse_up_to_sign,
            laws.exact_inverse,
            laws.norm_composition,
        ];
        tally.record("group_laws", group.into_iter().fold(0.0, f64::max));
        tally.record("grading_compatibility", laws.grading);
        branch.composition_sign_flips += u64::from(laws.composition_sign_flipped);
        branch.inverse_sign_flips += u64::from(laws.inverse_sign_flipped);
        branch.max_signed_composition_residual = branch
            .max_signed_composition_residual
            .max(laws.composition_signed);

        let c = ColourTuple::sample(&mut sampler, &p);
        let probes = default_probes(sampler.rng(), Home::copy(p, c.nu), 20);
        tally.record(
            "colour_transformations",
            verify_colour_transformations(p, &c, &probes)?.max(),
        );
        tally.record(
            "coassociativity",
            verify_coassociativity(p, &c, &probes)?.max(),
        );
        tally.record("counit", verify_counit_axiom(p, &c, &probes)?.max());
        tally.record("antipode", verify_antipode_axiom(p, &c, &probes)?.max());
        let map = ColouredMapContext::new(p, c.lambda, c.mu, c.nu)?;
        let pairs = default_pairs(sampler.rng(), map.source(), 5);
        tally.record(
            "bialgebra",
            verify_bialgebra(&map, &pairs, TwistConvention::Graded)?.max(),
        );
        let (_, literal) = odd_pair_bialgebra_discrepancy(&map, TwistConvention::SelfDegree)?;
        tally.record("bialgebra_sign_sensitivity", literal);
        let h = map.source();

        let mut relations = verify_relations(&map)?;
        relations.merge(&check_relations(h, c.lambda, c.mu)?);
        tally.record("relations", relations.max());

        let base_probes = default_probes(sampler.rng(), Home::base(p), 5);
        let one = Colour::IDENTITY;
        let reduction = verify_reduction(p, &base_probes)?.max();
        let ordinary = check_coloured_graded_ybe(p, one, one, one)?;
        tally.record("reduction", reduction.max(ordinary));

        let [a, b, g, l, m, n] = sampler.colours::<6>(&p);
        tally.record("inverse", check_inverse(p, l, m)?);
        for x in AlgebraElement::generators(Home::copy(p, n)) {
            tally.record("intertwiner", check_intertwiner(p, l, m, &x)?);
        }
        let (h12, h13) = check_hexagons(p, a, b, g, l, m)?;
        tally.record("hexagons", h12.max(h13));
        tally.record("ybe", check_coloured_graded_ybe(p, l, m, n)?);
        tally.record(
            "ybe_negative_control",
            check_perturbed_ybe(p, l, m, n, 0.01)?,
        );
        tally.record("crossval", check_cross_validation(p, l, m)?);
    }
    let checks = tally.results();
    let pass = checks.iter().all(|c| c.pass);
    Ok(VerificationReport {
        suite: "coloured-hopf-gl11".to_string(),
        seed,
        draws,
        checks,
        pass,
        duration_ms: start.elapsed().as_millis(),
        branch_sensitivity: branch,
    })
}

fn sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(
            File::create(p)
                .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", p.display())))?,
        ),
        None => Box::new(io::stdout().lock()),
    })
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Failure> {
    let report = run_suite(args.seed, args.draws, args.guard, &args.tolerance)?;
    let mut out = sink(&args.output)?;
    match args.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "name",
                "paper_ref",
                "max_residual",
                "tolerance",
                "direction",
                "pass",
            ])?;
            for c in &report.checks {
                let direction = match c.direction {
                    Direction::AtMost => "at_most",
                    Direction::Exceeds => "exceeds",
                };
                w.write_record([
                    c.name.clone(),
                    c.paper_ref.clone(),
                    format!("{:e}", c.max_residual),
                    format!("{:e}", c.tolerance),
                    direction.to_string(),
                    c.pass.to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    for c in report.checks.iter().filter(|c| !c.pass) {
        eprintln!(
            "FAIL {}: worst residual {:e} against tolerance {:e}",
            c.name, c.max_residual, c.tolerance
        );
    }
    Ok(report.pass)
}

fn colour(value: C64) -> Result<Colour, Failure> {
    Ok(Colour::new(value)?)
}

const BRANCH_NOTE: &str = "q^x = exp(x·Log q) with the principal logarithm of the base q; \
    a^ν = ((q^{2ν}−1)/(q²−1))^{1/2} with the principal square root; the (2,3) entry is \
    (q²−1)·a^λ·a^μ·q^{−(λ+μ)/2}, whose square is branch independent";

#[derive(Serialize)]
struct RmatrixReport {
    q: [f64; 2],
    s: [f64; 2],
    lambda: [f64; 2],
    mu: [f64; 2],
    guard: f64,
    branch_note: &'static str,
    route_agreement: f64,
    matrix: Vec<Vec<[f64; 2]>>,
}

fn pair(z: C64) -> [f64; 2] {
    [z.re, z.im]
}

fn cmd_rmatrix(args: &RmatrixArgs) -> Result<bool, Failure> {
    let p = ParamPoint::with_guard(args.point.q, args.point.s, args.point.guard)?;
    let (l, m) = (colour(args.lambda)?, colour(args.mu)?);
    let r = coloured_r_closed_form(p, l, m)?.entries;
    let agreement = check_cross_validation(p, l, m)?;
    let mut out = sink(&args.output)?;
    match args.format {
        Format::Json => {
            let report = RmatrixReport {
                q: pair(args.point.q),
                s: pair(args.point.s),
                lambda: pair(args.lambda),
                mu: pair(args.mu),
                guard: args.point.guard,
                branch_note: BRANCH_NOTE,
                route_agreement: agreement,
                matrix: (0..4)
                    .map(|i| (0..4).map(|j| pair(r[(i, j)])).collect())
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .from_writer(out);
            for i in 0..4 {
                let row: Vec<String> = (0..4)
                    .flat_map(|j| [r[(i, j)].re, r[(i, j)].im])
                    .map(|x| x.to_string())
                    .collect();
                w.write_record(&row)?;
            }
            w.flush()?;
        }
    }
    Ok(true)
}

fn cmd_ybe(args: &YbeArgs) -> Result<bool, Failure> {
    let mut tolerance = DEFAULT_TOLERANCE;
    for (name, value) in &args.tolerance {
        if name != "ybe" {
            return Err(Failure::Usage(format!(
                "unknown check {name:?} for ybe; only \"ybe\" applies"
            )));
        }
        tolerance = *value;
    }
    let p = ParamPoint::with_guard(args.point.q, args.point.s, args.point.guard)?;
    let (l, m, n) = (colour(args.lambda)?, colour(args.mu)?, colour(args.nu)?);
    let residual = match args.perturb {
        Some(eps) => check_perturbed_ybe(p, l, m, n, eps)?,
        None => check_coloured_graded_ybe(p, l, m, n)?,
    };
    println!("{residual:e}");
    Ok(residual <= tolerance)
}

/// Axis values of a sweep grid, in the order q, s, λ, μ, ν.
pub fn parse_grid(grid: &str) -> Result<[Vec<C64>; 5], String> {
    const KEYS: [&str; 5] = ["q", "s", "lambda", "mu", "nu"];
    let mut axes: [Option<Vec<C64>>; 5] = Default::default();
    for part in grid.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (key, values) = part
            .split_once('=')
            .ok_or_else(|| format!("expected key=values in grid, got {part:?}"))?;
        let k = KEYS
            .iter()
            .position(|&name| name == key.trim())
            .ok_or_else(|| {
                format!("unknown grid key {key:?}; expected one of q, s, lambda, mu, nu")
            })?;
        if axes[k].is_some() {
            return Err(format!("grid key {key:?} given twice"));
        }
        let values = values
            .split(',')
            .map(parse_complex)
            .collect::<Result<Vec<_>, _>>()?;
        axes[k] = Some(values);
    }
    let [q, s, l, m, n] = axes;
    let q = q.ok_or("grid must give q")?;
    let one = || vec![C64::new(1.0, 0.0)];
    Ok([
        q,
        s.unwrap_or_else(one),
        l.unwrap_or_else(one),
        m.unwrap_or_else(one),
        n.unwrap_or_else(one),
    ])
}

fn cmd_sweep(args: &SweepArgs) -> Result<bool, Failure> {
    let [qs, ss, ls, ms, ns] = parse_grid(&args.grid).map_err(Failure::Usage)?;
    let mut rows = Vec::new();
    for &q in &qs {
        for &s in &ss {
            let p = ParamPoint::with_guard(q, s, args.guard)?;
            for &l in &ls {
                for &m in &ms {
                    for &n in &ns {
                        let (cl, cm, cn) = (colour(l)?, colour(m)?, colour(n)?);
                        let ybe = check_coloured_graded_ybe(p, cl, cm, cn)?;
                        let cross = check_cross_validation(p, cl, cm)?;
                        rows.push([
                            format_complex(q),
                            format_complex(s),
                            format_complex(l),
                            format_complex(m),
                            format_complex(n),
                            format!("{ybe:e}"),
                            format!("{cross:e}"),
                        ]);
                    }
                }
            }
        }
    }
    let mut w = csv::Writer::from_writer(sink(&args.output)?);
    w.write_record([
        "q",
        "s",
        "lambda",
        "mu",
        "nu",
        "ybe_residual",
        "crossval_residual",
    ])?;
    for row in &rows {
        w.write_record(row)?;
    }
    w.flush()?;
    Ok(true)
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    let outcome = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Rmatrix(a) => cmd_rmatrix(a),
        Command::Ybe(a) => cmd_ybe(a),
        Command::Sweep(a) => cmd_sweep(a),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

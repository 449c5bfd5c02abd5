//! Command-line front end: matrix generation, scheme verification, correlation
//! spectra, entropy sweeps and Heun-operator reports.
//!
//! Exit codes: 0 success, 2 invalid input, 3 an exact identity failed, 4 a numerical
//! step failed.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::entangle::{
    correlation_report, entropy_sweep, heun_report, CorrelationReport, EntangleError, EntropyRow, HeunReport,
    ReportOptions, EXACT_ORDER_LIMIT,
};
use crate::hadamard::{
    core_blocks, hadamard_of_order, normalize, paley, sylvester, verify, HadamardError, HadamardMatrix, SignMatrix,
};
use crate::numerics::{ExactScalar, DEFAULT_CLUSTER_TOL, DEFAULT_EIG_TOL};
use crate::scheme::{SchemeError, SchemeTables};
use crate::terwilliger::{cubic_relation_residual, theta_identity_holds, triple_vanishing_check, TerwilligerBasis, TerwilligerError};

#[derive(Debug, Parser)]
#[command(name = "drg-entangle", version, about = "Entanglement on Hadamard graphs via association schemes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a Hadamard matrix and print it in the matrix-file format.
    Gen {
        #[command(flatten)]
        source: Source,
        /// Sylvester exponent (order 2^k).
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Check the scheme axioms, the triple-product vanishing criteria and the cubic relations.
    Verify {
        #[command(flatten)]
        source: Source,
        /// Sylvester exponent (order 2^k).
        #[arg(long)]
        k: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Spectrum, entropy and closed-form comparison for Π(K, ℓ).
    Spectrum {
        #[command(flatten)]
        source: Source,
        /// Highest filled eigenspace K.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=4))]
        k: u8,
        /// Ball radius ℓ.
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=4))]
        ell: u8,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Entropy table over the product of orders and cutoff pairs.
    Entropy {
        /// Hadamard orders, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [4usize, 16, 64])]
        n: Vec<usize>,
        /// Values of K, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [0u8, 1, 2, 3],
              value_parser = clap::value_parser!(u8).range(0..=4))]
        k: Vec<u8>,
        /// Values of ℓ, comma separated.
        #[arg(long, value_delimiter = ',', default_values_t = [0u8, 1, 2, 3],
              value_parser = clap::value_parser!(u8).range(0..=4))]
        ell: Vec<u8>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Neighbourhood-basis coefficients of T(K, ℓ) and its commutator status.
    Heun {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        k: u8,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        ell: u8,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Sylvester,
    Paley,
    File,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

/// Where the Hadamard matrix comes from. Without `--construction`, `--n` picks the
/// built-in matrix of that order (Sylvester for powers of two, else Paley).
#[derive(Clone, Debug, Default, Args)]
pub struct Source {
    #[arg(long, value_enum)]
    pub construction: Option<Construction>,
    /// Hadamard order.
    #[arg(long)]
    pub n: Option<usize>,
    /// Paley prime, q ≡ 3 (mod 4).
    #[arg(long)]
    pub q: Option<u64>,
    /// Matrix file for `--construction file`.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Clone, Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Tolerance for closed-form comparisons and spectrum range checks.
    #[arg(long, default_value_t = 1e-8, value_parser = positive_f64)]
    pub tol: f64,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        Ok(_) => Err("tolerance must be positive".into()),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Identity(String),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Identity(_) => 3,
            CliError::Numerical(_) => 4,
        }
    }
}

impl From<HadamardError> for CliError {
    fn from(e: HadamardError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<SchemeError> for CliError {
    fn from(e: SchemeError) -> Self {
        match e {
            SchemeError::OrderTooSmall(_) | SchemeError::HypercubeDimension(_) | SchemeError::EmptyGraph => {
                CliError::Validation(e.to_string())
            }
            SchemeError::Numerics(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Identity(e.to_string()),
        }
    }
}

impl From<TerwilligerError> for CliError {
    fn from(e: TerwilligerError) -> Self {
        match e {
            TerwilligerError::BaseVertex { .. } => CliError::Validation(e.to_string()),
            TerwilligerError::Numerics(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Identity(e.to_string()),
        }
    }
}

impl From<EntangleError> for CliError {
    fn from(e: EntangleError) -> Self {
        match e {
            EntangleError::CutoffOutOfRange { .. } | EntangleError::HeunUndefined { .. } | EntangleError::Uncovered { .. } => {
                CliError::Validation(e.to_string())
            }
            EntangleError::IdentityFailure(_) => CliError::Identity(e.to_string()),
            EntangleError::NumericalFailure(_) | EntangleError::InvalidSpectrum { .. } | EntangleError::Numerics(_) => {
                CliError::Numerical(e.to_string())
            }
            EntangleError::Hadamard(e) => e.into(),
            EntangleError::Scheme(e) => e.into(),
            EntangleError::Terwilliger(e) => e.into(),
        }
    }
}

/// Rendered output plus the exit code it should end with; a report can be
/// produced and still signal a failed identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
}

impl Outcome {
    fn new(text: String, ok: bool) -> Self {
        Outcome {
            text,
            exit_code: if ok { 0 } else { 3 },
        }
    }
}

/// Executes one command and renders its output.
pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Gen { source, k, output } => cmd_gen(source, *k, output),
        Command::Verify { source, k, output } => cmd_verify(source, *k, output),
        Command::Spectrum { source, k, ell, output } => cmd_spectrum(source, *k as usize, *ell as usize, output),
        Command::Entropy { n, k, ell, output } => cmd_entropy(n, k, ell, output),
        Command::Heun { source, k, ell, output } => cmd_heun(source, *k as usize, *ell as usize, output),
    }
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Gen { output, .. }
            | Command::Verify { output, .. }
            | Command::Spectrum { output, .. }
            | Command::Entropy { output, .. }
            | Command::Heun { output, .. } => output,
        }
    }
}

fn read_sign_matrix(source: &Source) -> Result<SignMatrix, CliError> {
    let path = source
        .input
        .as_ref()
        .ok_or_else(|| CliError::Validation("--construction file needs --input".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    Ok(SignMatrix::from_json(&text)?)
}

fn sylvester_exponent(n: usize) -> Result<u32, CliError> {
    if n.is_power_of_two() {
        Ok(n.trailing_zeros())
    } else {
        Err(CliError::Validation(format!("Sylvester order must be a power of two, got {n}")))
    }
}

/// Resolves the matrix source; `exponent` is the Sylvester `--k` of `gen`/`verify`.
fn resolve(source: &Source, exponent: Option<u32>) -> Result<HadamardMatrix, CliError> {
    let missing = |what: &str| CliError::Validation(format!("missing {what}"));
    match source.construction {
        Some(Construction::Sylvester) => {
            let k = match (exponent, source.n) {
                (Some(k), _) => k,
                (None, Some(n)) => sylvester_exponent(n)?,
                (None, None) => return Err(missing("--k or --n for the Sylvester construction")),
            };
            Ok(sylvester(k)?)
        }
        Some(Construction::Paley) => Ok(paley(source.q.ok_or_else(|| missing("--q for the Paley construction"))?)?),
        Some(Construction::File) => Ok(normalize(&read_sign_matrix(source)?)?),
        None => match (source.n, source.q, &source.input, exponent) {
            (Some(n), _, _, _) => Ok(hadamard_of_order(n)?),
            (None, Some(q), _, _) => Ok(paley(q)?),
            (None, None, Some(_), _) => Ok(normalize(&read_sign_matrix(source)?)?),
            (None, None, None, Some(k)) => Ok(sylvester(k)?),
            _ => Err(missing("matrix source (--n, --q, --k or --input)")),
        },
    }
}

fn require_exact_size(h: &HadamardMatrix) -> Result<(), CliError> {
    if h.order() > EXACT_ORDER_LIMIT {
        Err(CliError::Validation(format!(
            "exact computations are limited to n ≤ {EXACT_ORDER_LIMIT}, got {}",
            h.order()
        )))
    } else {
        Ok(())
    }
}

/// `%.15g`-style formatting: 15 significant digits, trailing zeros trimmed.
pub fn format_sig(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return if v == 0.0 { "0".into() } else { v.to_string() };
    }
    let sci = format!("{v:.14e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if (-4..15).contains(&exp) {
        trim(&format!("{v:.*}", (14 - exp) as usize))
    } else {
        format!("{}e{exp}", trim(mantissa))
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn cmd_gen(source: &Source, k: Option<u32>, output: &OutputArgs) -> Result<Outcome, CliError> {
    let construction = source
        .construction
        .ok_or_else(|| CliError::Validation("gen needs --construction".into()))?;
    let h = resolve(&Source { construction: Some(construction), ..source.clone() }, k)?;
    let rows = h.as_sign_matrix().rows();
    let text = match output.format.unwrap_or(Format::Json) {
        Format::Json => format!("{}\n", h.to_json()),
        Format::Csv => rows
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(",") + "\n")
            .collect(),
        Format::Pretty => rows
            .iter()
            .map(|r| r.iter().map(|&v| if v > 0 { "+" } else { "-" }).collect::<String>() + "\n")
            .collect(),
    };
    Ok(Outcome::new(text, true))
}

fn cmd_verify(source: &Source, k: Option<u32>, output: &OutputArgs) -> Result<Outcome, CliError> {
    let h = match source.construction {
        Some(Construction::File) | None if source.input.is_some() => {
            let raw = read_sign_matrix(source)?;
            let check = verify(&raw);
            if !check.is_hadamard {
                let report = json!({
                    "n": raw.order(),
                    "hadamard": false,
                    "max_deviation": check.max_deviation,
                    "all_passed": false,
                });
                let text = match output.format.unwrap_or(Format::Json) {
                    Format::Json => to_json(&report),
                    Format::Csv => "check,passed\nH Hᵀ = nI,false\n".to_string(),
                    Format::Pretty => format!(
                        "order {}: not a Hadamard matrix (max |H Hᵀ − nI| = {})\n",
                        raw.order(),
                        check.max_deviation
                    ),
                };
                return Ok(Outcome::new(text, false));
            }
            normalize(&raw)?
        }
        _ => resolve(source, k)?,
    };
    require_exact_size(&h)?;
    let n = h.order();
    let tables = SchemeTables::hadamard(&h)?;
    let axioms = tables.verify_axioms()?;
    let basis = TerwilligerBasis::new(&tables, 0)?;
    let dual = basis.verify(&tables)?;
    let vanishing = triple_vanishing_check(&basis, &tables)?;
    let r = n as u64;
    let rho = ExactScalar::sqrt_radicand(r);
    let tau = ExactScalar::integer(n as i64, r);
    let cubic = cubic_relation_residual(tables.adjacency(), basis.a_star(), &rho, &tau)?.vanishes()
        && theta_identity_holds(tables.eigenvalues(), &rho, &tau);
    let flags = tables.polynomial_flags();
    let blocks = core_blocks(&h).identities_hold();
    let array = tables.intersection_array()?.to_string();

    let mut checks: Vec<(String, bool)> = vec![("H Hᵀ = nI".into(), true), ("core block identities".into(), blocks)];
    checks.extend(axioms.checks.iter().map(|c| (c.name.clone(), c.passed)));
    checks.extend(dual.checks.iter().map(|c| (c.name.clone(), c.passed)));
    checks.push((format!("triple vanishing ({} triples)", vanishing.checked), vanishing.holds()));
    checks.push(("cubic relations (ρ = √n, τ = n)".into(), cubic));
    checks.push(("metric".into(), flags.metric));
    checks.push(("cometric".into(), flags.cometric));
    checks.push(("formally self-dual (P = Q)".into(), flags.formally_self_dual));
    let all = checks.iter().all(|c| c.1);

    let text = match output.format.unwrap_or(Format::Json) {
        Format::Json => {
            let violations: Vec<Value> = vanishing
                .violations
                .iter()
                .map(|v| json!({"kind": format!("{:?}", v.kind), "i": v.i, "j": v.j, "k": v.k}))
                .collect();
            to_json(&json!({
                "n": n,
                "vertices": tables.vertex_count(),
                "intersection_array": array,
                "hadamard": true,
                "checks": checks.iter().map(|(name, passed)| json!({"name": name, "passed": passed})).collect::<Vec<_>>(),
                "triple_vanishing": {"checked": vanishing.checked, "violations": violations},
                "polynomial": flags,
                "all_passed": all,
            }))
        }
        Format::Csv => {
            let mut s = String::from("check,passed\n");
            for (name, passed) in &checks {
                let _ = writeln!(s, "\"{}\",{passed}", name.replace('"', "\"\""));
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("Hadamard graph of order {n}: {} vertices\nintersection array {array}\n", tables.vertex_count());
            for (name, passed) in &checks {
                let _ = writeln!(s, "  [{}] {name}", if *passed { "ok" } else { "FAIL" });
            }
            let _ = writeln!(s, "{}", if all { "all checks passed" } else { "some checks FAILED" });
            s
        }
    };
    Ok(Outcome::new(text, all))
}

fn report_options(output: &OutputArgs) -> ReportOptions {
    ReportOptions {
        eig_tol: DEFAULT_EIG_TOL,
        cluster_tol: DEFAULT_CLUSTER_TOL,
        compare_tol: output.tol,
    }
}

fn render_spectrum(r: &CorrelationReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut s = String::from("value,mult\n");
            for v in &r.spectrum {
                let _ = writeln!(s, "{},{}", format_sig(v.value), v.multiplicity);
            }
            s
        }
        Format::Pretty => {
            let mut s = format!(
                "Π(K={}, ℓ={}) on the Hadamard graph of order {} ({:?} route)\ntrace = {}\nspectrum:\n",
                r.k, r.ell, r.n, r.route, r.trace_exact
            );
            for v in &r.spectrum {
                let _ = writeln!(s, "  {:>20}  ×{}", format_sig(v.value), v.multiplicity);
            }
            let _ = writeln!(s, "entropy = {}", format_sig(r.entropy));
            let status = match r.commutator_exact_zero {
                Some(b) => b.to_string(),
                None => "not computed".to_string(),
            };
            let _ = writeln!(s, "[T, Π] = 0 exactly: {status}");
            let _ = writeln!(s, "closed form ({}):", r.closed_form_rule);
            for c in &r.closed_form_flags {
                let _ = writeln!(
                    s,
                    "  claimed {} ×{}  observed {} ×{}  delta {:.3e}{}",
                    format_sig(c.claimed),
                    c.claimed_mult,
                    format_sig(c.observed),
                    c.observed_mult,
                    c.delta,
                    if c.flag { "  MISMATCH" } else { "" }
                );
            }
            s
        }
    }
}

fn cmd_spectrum(source: &Source, k: usize, ell: usize, output: &OutputArgs) -> Result<Outcome, CliError> {
    let h = resolve(source, None)?;
    let r = correlation_report(&h, k, ell, &report_options(output))?;
    let ok = r.commutator_exact_zero != Some(false);
    Ok(Outcome::new(render_spectrum(&r, output.format.unwrap_or(Format::Json)), ok))
}

fn cmd_entropy(orders: &[usize], ks: &[u8], ells: &[u8], output: &OutputArgs) -> Result<Outcome, CliError> {
    let pairs: Vec<(usize, usize)> = ks
        .iter()
        .flat_map(|&k| ells.iter().map(move |&l| (k as usize, l as usize)))
        .collect();
    let rows = entropy_sweep(orders, &pairs, DEFAULT_EIG_TOL, DEFAULT_CLUSTER_TOL)?;
    let text = match output.format.unwrap_or(Format::Csv) {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("n,K,ell,S,S/n,S*4n/ln(n),S-limit,S/n-limit,S*4n/ln(n)-1\n");
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.n,
                    r.k,
                    r.ell,
                    entropy_columns(r).map(format_sig).join(",")
                );
            }
            s
        }
        Format::Pretty => {
            let mut s = format!(
                "{:>6} {:>2} {:>3} {:>20} {:>20} {:>20}\n",
                "n", "K", "ell", "S", "S/n", "S*4n/ln(n)"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:>6} {:>2} {:>3} {:>20} {:>20} {:>20}",
                    r.n,
                    r.k,
                    r.ell,
                    format_sig(r.entropy),
                    format_sig(r.per_order),
                    format_sig(r.log_scaled)
                );
            }
            s
        }
    };
    Ok(Outcome::new(text, true))
}

fn entropy_columns(r: &EntropyRow) -> [f64; 6] {
    [r.entropy, r.per_order, r.log_scaled, r.delta_limit, r.delta_per_order, r.delta_log_scaled]
}

fn render_heun(r: &HeunReport, format: Format) -> String {
    match format {
        Format::Json => to_json(r),
        Format::Csv => {
            let mut s = String::from("block,i,coefficient\n");
            for (i, c) in r.shift.iter().enumerate() {
                let _ = writeln!(s, "E*_i,{i},{c}");
            }
            for (i, c) in r.diag_adjacency.iter().enumerate() {
                let _ = writeln!(s, "E*_i A E*_i,{i},{c}");
            }
            for (i, c) in r.off.iter().enumerate() {
                let _ = writeln!(s, "E*_(i-1) A E*_i + E*_i A E*_(i-1),{},{c}", i + 1);
            }
            s
        }
        Format::Pretty => {
            let mut s = format!(
                "T(K={}, ℓ={}) on the Hadamard graph of order {}\nμ = {}, ν = {}\n",
                r.k, r.ell, r.n, r.mu, r.nu
            );
            let d = r.shift.len();
            for i in 0..d {
                let _ = writeln!(s, "  block ({i},{i}): {} E*_{i} A E*_{i} + {} E*_{i}", r.diag_adjacency[i], r.shift[i]);
                if i + 1 < d {
                    let _ = writeln!(s, "  block ({i},{}): {} E*_{i} A E*_{}", i + 1, r.off[i], i + 1);
                }
            }
            let c = &r.commutation;
            let _ = writeln!(
                s,
                "[T, π₁] = 0: {}\n[T, π₂] = 0: {}\n[T, Π] = 0: {}\nexpansions rebuild T: {}\nblock tridiagonal: {}",
                c.pi1, c.pi2, c.chopped, r.expansions_match, r.block_tridiagonal
            );
            s
        }
    }
}

fn cmd_heun(source: &Source, k: usize, ell: usize, output: &OutputArgs) -> Result<Outcome, CliError> {
    let h = resolve(source, None)?;
    require_exact_size(&h)?;
    let r = heun_report(&h, k, ell)?;
    Ok(Outcome::new(render_heun(&r, output.format.unwrap_or(Format::Json)), r.all_hold()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("drg-entangle").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig(0.0), "0");
        assert_eq!(format_sig(0.25), "0.25");
        assert_eq!(format_sig(1.0 / 3.0), "0.333333333333333");
        assert_eq!(format_sig(-2.0), "-2");
        assert_eq!(format_sig(1.5e-9), "1.5e-9");
        assert_eq!(format_sig(123456.0), "123456");
        assert_eq!(format_sig(2.0f64.powi(60)), "1.15292150460685e18");
    }

    #[test]
    fn gen_and_validation_codes() {
        let out = run(&parse(&["gen", "--construction", "sylvester", "--k", "2"])).unwrap();
        assert_eq!(out.exit_code, 0);
        assert_eq!(SignMatrix::from_json(&out.text).unwrap().order(), 4);
        let out = run(&parse(&["gen", "--construction", "paley", "--q", "7"])).unwrap();
        assert!(verify(&SignMatrix::from_json(&out.text).unwrap()).is_hadamard);
        let err = run(&parse(&["gen", "--construction", "paley", "--q", "5"])).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(Cli::try_parse_from(["drg-entangle", "spectrum", "--k", "5", "--ell", "1", "--n", "4"]).is_err());
    }

    #[test]
    fn verify_small_orders() {
        for n in ["2", "4"] {
            let out = run(&parse(&["verify", "--n", n, "--format", "pretty"])).unwrap();
            assert_eq!(out.exit_code, 0, "{}", out.text);
        }
        let out = run(&parse(&["verify", "--n", "4"])).unwrap();
        let v: Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["intersection_array"], "{4,3,2,1;1,2,3,4}");
    }

    #[test]
    fn spectrum_and_heun_reports() {
        let out = run(&parse(&["spectrum", "--n", "4", "--k", "3", "--ell", "3"])).unwrap();
        let v: Value = serde_json::from_str(&out.text).unwrap();
        assert_eq!(v["spectrum"].as_array().unwrap().len(), 3);
        assert_eq!(v["commutator_exact_zero"], true);
        let out = run(&parse(&["heun", "--n", "4", "--k", "2", "--ell", "2", "--format", "csv"])).unwrap();
        assert_eq!(out.exit_code, 0);
        assert!(out.text.starts_with("block,i,coefficient\n"));
    }
}

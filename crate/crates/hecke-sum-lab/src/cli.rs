//! Command line surface: model selection, table construction, per-claim
//! verification, and CSV emission.
//!
//! Exit codes: 0 when the requested verdict is Holds or HoldsCalibrated
//! (or the command has no verdict), 1 for Violated or runtime failures,
//! 2 for usage, config, and domain errors.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bounds::{self, Lab, Section6Kind};
use crate::error::{Error, Result};
use crate::hecke::{CoefficientTable, PrimeCoefficientSource, SignRule};
use crate::lemma6::{
    estimate_a, estimate_b, verify_lemma6, weight_abs_lambda_hk, weight_abs_lambda_mu,
    weight_abs_mu, MultiplicativeWeight,
};
use crate::parallel::effective_workers;
use crate::report::{combined_verdict, reports_to_csv, BoundReport, Verdict};
use crate::sieve::FactorTable;
use crate::smooth::{psi_dfs, psi_scan, RhoTable};
use crate::sums::{partial_sums, WeightCtx, WeightKind};
use crate::theorems::{prime_power_tail, theorem_pipeline};

#[derive(Parser, Debug)]
#[command(
    name = "hecke-sum-lab",
    version,
    about = "Mean value experiments for Hecke eigenvalue sums over squarefree integers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify one claim over the checkpoint grid and write <claim>.csv
    Verify {
        #[arg(value_enum)]
        claim: Claim,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Tabulate the smooth-density limit function rho(u) as CSV
    Rho {
        /// Largest u in the table
        #[arg(long, default_value_t = 10.0)]
        u_max: f64,
        /// Grid step between consecutive rows
        #[arg(long, default_value_t = 0.01)]
        step: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Count y-smooth integers up to x with both algorithms
    Psi {
        #[arg(long)]
        x: u64,
        #[arg(long)]
        y: f64,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Stream weighted partial sums S and L to CSV
    Sums {
        /// Weight: one, abs-mu, abs-lambda, abs-lambda-mu, abs-lambda-4,
        /// lambda-star, abs-lambda-h3
        #[arg(long)]
        weight: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Write the prime coefficient file for a model (--out names the file)
    GenCoeffs {
        #[command(flatten)]
        common: CommonArgs,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Claim {
    Lemma1,
    Lemma2,
    Lemma3,
    Lemma4,
    Lemma5,
    Lemma6,
    Lemma7,
    Lemma8,
    Theorem1,
    Theorem2,
    Section6Primes,
    Section6Squarefull,
    Remark1,
    Eq3,
}

impl Claim {
    fn name(self) -> &'static str {
        match self {
            Claim::Lemma1 => "lemma1",
            Claim::Lemma2 => "lemma2",
            Claim::Lemma3 => "lemma3",
            Claim::Lemma4 => "lemma4",
            Claim::Lemma5 => "lemma5",
            Claim::Lemma6 => "lemma6",
            Claim::Lemma7 => "lemma7",
            Claim::Lemma8 => "lemma8",
            Claim::Theorem1 => "theorem1",
            Claim::Theorem2 => "theorem2",
            Claim::Section6Primes => "section6-primes",
            Claim::Section6Squarefull => "section6-squarefull",
            Claim::Remark1 => "remark1",
            Claim::Eq3 => "eq3",
        }
    }

    fn needs_lambda_star(self) -> bool {
        matches!(
            self,
            Claim::Eq3 | Claim::Section6Primes | Claim::Section6Squarefull
        )
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ModelChoice {
    File,
    SatoTate,
    Stress,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SignChoice {
    Plus,
    Alternating,
}

/// Flags shared by every subcommand; a `key=value` config file fills in
/// anything the command line leaves unset.
#[derive(Args, Debug, Clone, Default)]
struct CommonArgs {
    /// Largest n covered by the tables
    #[arg(long)]
    x_max: Option<u64>,
    /// Prime coefficient model
    #[arg(long, value_enum)]
    model: Option<ModelChoice>,
    /// Coefficient file (required for --model file)
    #[arg(long)]
    coeffs: Option<PathBuf>,
    /// Sampling seed for --model sato-tate
    #[arg(long)]
    seed: Option<u64>,
    /// Sign rule for --model stress
    #[arg(long, value_enum)]
    sign: Option<SignChoice>,
    /// Checkpoint grid, comma separated (default: powers of 10 up to x-max)
    #[arg(long, value_delimiter = ',')]
    grid: Option<Vec<u64>>,
    /// k-free exponent for theorem2 (k >= 2)
    #[arg(long)]
    k: Option<u32>,
    /// Epsilon as a rational P/Q, e.g. 1/64
    #[arg(long)]
    epsilon: Option<String>,
    /// Output directory (gen-coeffs: output file). Env: HECKE_SUM_LAB_OUT
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; 0 means all available cores
    #[arg(long)]
    workers: Option<usize>,
    /// key=value config file; explicit flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
}

/// Fully resolved run parameters.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub x_max: u64,
    pub model: String,
    pub coeffs: Option<PathBuf>,
    pub seed: u64,
    pub sign: SignRule,
    pub grid: Vec<u64>,
    pub k: u32,
    pub epsilon: f64,
    pub out: Option<PathBuf>,
    pub workers: usize,
}

fn parse_epsilon(s: &str) -> Result<f64> {
    let usage = || {
        Error::Usage(format!(
            "epsilon must be a rational P/Q with P, Q > 0: {s:?}"
        ))
    };
    let (p, q) = s.split_once('/').ok_or_else(usage)?;
    let p: u64 = p.trim().parse().map_err(|_| usage())?;
    let q: u64 = q.trim().parse().map_err(|_| usage())?;
    if p == 0 || q == 0 {
        return Err(usage());
    }
    Ok(p as f64 / q as f64)
}

fn parse_grid_list(s: &str) -> Option<Vec<u64>> {
    s.split(',').map(|t| t.trim().parse::<u64>().ok()).collect()
}

fn resolve(common: &CommonArgs) -> Result<RunConfig> {
    // layer 1: file values
    let mut file: BTreeMap<String, String> = BTreeMap::new();
    if let Some(path) = &common.config {
        let text = std::fs::read_to_string(path)?;
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| Error::Config {
                path: path.display().to_string(),
                line: idx + 1,
                msg,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err("expected key=value".into()))?;
            let key = key.trim();
            match key {
                "x-max" | "model" | "coeffs" | "seed" | "sign" | "grid" | "k" | "epsilon"
                | "out" | "workers" => {
                    file.insert(key.to_string(), value.trim().to_string());
                }
                other => return Err(err(format!("unknown key {other:?}"))),
            }
        }
    }
    let file_err = |key: &str, val: &str| Error::Config {
        path: common
            .config
            .as_ref()
            .map(|p| p.display().to_string())
            .unwrap_or_default(),
        line: 0,
        msg: format!("invalid value for {key}: {val:?}"),
    };

    // layer 2: flags override file values, defaults fill the rest
    let x_max = match (common.x_max, file.get("x-max")) {
        (Some(v), _) => v,
        (None, Some(v)) => v.parse().map_err(|_| file_err("x-max", v))?,
        (None, None) => 1_000_000,
    };
    let model = match (common.model, file.get("model")) {
        (Some(m), _) => m,
        (None, Some(v)) => match v.as_str() {
            "file" => ModelChoice::File,
            "sato-tate" => ModelChoice::SatoTate,
            "stress" => ModelChoice::Stress,
            _ => return Err(file_err("model", v)),
        },
        (None, None) => ModelChoice::SatoTate,
    };
    let coeffs = common
        .coeffs
        .clone()
        .or_else(|| file.get("coeffs").map(PathBuf::from));
    let seed = match (common.seed, file.get("seed")) {
        (Some(v), _) => v,
        (None, Some(v)) => v.parse().map_err(|_| file_err("seed", v))?,
        (None, None) => 0,
    };
    let sign = match (common.sign, file.get("sign")) {
        (Some(SignChoice::Plus), _) => SignRule::AllPlus,
        (Some(SignChoice::Alternating), _) => SignRule::Alternating,
        (None, Some(v)) => match v.as_str() {
            "plus" => SignRule::AllPlus,
            "alternating" => SignRule::Alternating,
            _ => return Err(file_err("sign", v)),
        },
        (None, None) => SignRule::AllPlus,
    };
    let grid_raw = match (&common.grid, file.get("grid")) {
        (Some(g), _) => Some(g.clone()),
        (None, Some(v)) => Some(parse_grid_list(v).ok_or_else(|| file_err("grid", v))?),
        (None, None) => None,
    };
    let k = match (common.k, file.get("k")) {
        (Some(v), _) => v,
        (None, Some(v)) => v.parse().map_err(|_| file_err("k", v))?,
        (None, None) => 3,
    };
    let epsilon = match (&common.epsilon, file.get("epsilon")) {
        (Some(s), _) => parse_epsilon(s)?,
        (None, Some(v)) => parse_epsilon(v)?,
        (None, None) => 1.0 / 64.0,
    };
    let out = common
        .out
        .clone()
        .or_else(|| file.get("out").map(PathBuf::from))
        .or_else(|| std::env::var_os("HECKE_SUM_LAB_OUT").map(PathBuf::from));
    let workers = match (common.workers, file.get("workers")) {
        (Some(v), _) => v,
        (None, Some(v)) => v.parse().map_err(|_| file_err("workers", v))?,
        (None, None) => 0,
    };

    // validation
    if x_max < 16 {
        return Err(Error::Usage("x-max must be at least 16".into()));
    }
    if k < 2 {
        return Err(Error::Usage(format!("k must be at least 2, got {k}")));
    }
    let mut grid = grid_raw.unwrap_or_else(|| default_grid(x_max));
    grid.sort_unstable();
    grid.dedup();
    if grid.is_empty() {
        return Err(Error::Usage("checkpoint grid is empty".into()));
    }
    if *grid.first().unwrap() == 0 {
        return Err(Error::Usage("checkpoints must be positive".into()));
    }
    if *grid.last().unwrap() > x_max {
        return Err(Error::Usage(format!(
            "grid point {} exceeds x-max {x_max}",
            grid.last().unwrap()
        )));
    }
    Ok(RunConfig {
        x_max,
        model: match model {
            ModelChoice::File => "file".into(),
            ModelChoice::SatoTate => "sato-tate".into(),
            ModelChoice::Stress => "stress".into(),
        },
        coeffs,
        seed,
        sign,
        grid,
        k,
        epsilon,
        out,
        workers: effective_workers(workers),
    })
}

/// Powers of 10 from 1e3 to x_max; just {x_max} when that range is empty.
fn default_grid(x_max: u64) -> Vec<u64> {
    let mut g = Vec::new();
    let mut p = 1_000u64;
    while p <= x_max {
        g.push(p);
        match p.checked_mul(10) {
            Some(n) => p = n,
            None => break,
        }
    }
    if g.is_empty() {
        g.push(x_max);
    }
    g
}

impl RunConfig {
    fn source(&self) -> Result<PrimeCoefficientSource> {
        match self.model.as_str() {
            "file" => {
                let path = self
                    .coeffs
                    .as_ref()
                    .ok_or_else(|| Error::Usage("--model file requires --coeffs PATH".into()))?;
                PrimeCoefficientSource::from_file(path)
            }
            "sato-tate" => Ok(PrimeCoefficientSource::SatoTate { seed: self.seed }),
            "stress" => Ok(PrimeCoefficientSource::Stress { sign: self.sign }),
            other => Err(Error::Usage(format!("unknown model {other:?}"))),
        }
    }

    fn out_dir(&self) -> PathBuf {
        self.out.clone().unwrap_or_else(|| PathBuf::from("."))
    }
}

fn write_csv(dir: &Path, name: &str, contents: &str) -> Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let path = dir.join(name);
    std::fs::write(&path, contents)?;
    Ok(path)
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Verify { claim, common } => cmd_verify(claim, &resolve(&common)?),
        Command::Rho {
            u_max,
            step,
            common,
        } => cmd_rho(u_max, step, &resolve(&common)?),
        Command::Psi { x, y, common } => cmd_psi(x, y, &resolve(&common)?),
        Command::Sums { weight, common } => cmd_sums(&weight, &resolve(&common)?),
        Command::GenCoeffs { common } => cmd_gen_coeffs(&resolve(&common)?),
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Holds | Verdict::HoldsCalibrated => 0,
        Verdict::Violated => 1,
    }
}

fn cmd_verify(claim: Claim, cfg: &RunConfig) -> Result<i32> {
    let source = cfg.source()?;
    let factors = FactorTable::build(cfg.x_max, cfg.workers)?;
    let mut coeffs = CoefficientTable::build(&source, cfg.x_max, &factors)?;
    if claim.needs_lambda_star() {
        coeffs.build_lambda_star(&factors)?;
    }
    let lab = Lab {
        factors: &factors,
        coeffs: &coeffs,
        workers: cfg.workers,
    };
    let grid = &cfg.grid;

    let reports: Vec<BoundReport> = match claim {
        Claim::Lemma1 => {
            let r = bounds::verify_lemma1(&lab, grid)?;
            println!("frozen C1 = {:.6}", bounds::frozen_c1(&factors)?);
            vec![r]
        }
        Claim::Lemma2 => {
            let (r, detail) = bounds::verify_lemma2(&lab, grid, cfg.epsilon)?;
            println!(
                "pointwise envelope |lambda(n)| <= n^(7/64) d(n): {} violations in {} smooth squarefree n",
                detail.envelope_violations, detail.checked
            );
            vec![r]
        }
        Claim::Lemma3 => vec![bounds::verify_lemma3(&lab, grid)?],
        Claim::Lemma4 => vec![bounds::verify_lemma4(&lab, grid)?],
        Claim::Lemma5 => {
            let (r, details) = bounds::verify_lemma5(&lab, grid)?;
            for (x, d) in grid.iter().zip(&details) {
                println!(
                    "x={x}: argmin M = {:.3} (closed form {:.3}), M/(log x)^(1/4) = {:.3}",
                    d.scan_argmin, d.closed_form_min, d.ratio_to_quarter_log
                );
            }
            vec![r]
        }
        Claim::Lemma6 => {
            let weights: Vec<MultiplicativeWeight> = vec![
                weight_abs_mu(),
                weight_abs_lambda_mu(&coeffs),
                weight_abs_lambda_hk(&coeffs, 3),
            ];
            let mut rs = Vec::new();
            for w in &weights {
                let a = estimate_a(w, &factors, grid)?;
                let b = estimate_b(w, &factors)?;
                println!(
                    "{}: A = {:.6}, B = {:.6} (grid-certified)",
                    w.descriptor, a, b
                );
                rs.push(verify_lemma6(w, &factors, a, b, grid, cfg.workers)?);
            }
            rs
        }
        Claim::Lemma7 => {
            let r = bounds::verify_lemma7(&lab, grid)?;
            let a = r
                .rows
                .iter()
                .map(|row| row.ratio)
                .fold(f64::NEG_INFINITY, f64::max);
            println!(
                "second prime-power sum = {} (mu vanishes there)",
                bounds::lemma7_second_sum()
            );
            println!("empirical A = max LHS/(x sqrt(log x)) = {a:.6}");
            vec![r]
        }
        Claim::Lemma8 => vec![bounds::verify_lemma8(&lab, grid)?],
        Claim::Theorem1 | Claim::Theorem2 => {
            let k = if claim == Claim::Theorem1 { 2 } else { cfg.k };
            let (r, parts) = theorem_pipeline(&lab, grid, k)?;
            for p in &parts {
                println!(
                    "x={}: initial {:.6e} <= Holder {:.6e}; decomposition residual {:.3e}; S/primeBound {:.4}",
                    p.x,
                    p.initial_lhs,
                    p.initial_holder,
                    (p.range_direct - p.range_decomposed).abs() / p.range_direct.max(f64::MIN_POSITIVE),
                    p.weighted_count / p.prime_bound_rhs
                );
            }
            if k >= 3 {
                let tail = prime_power_tail(&factors, k)?;
                println!(
                    "prime power mass B = {:.6e} (chain bound {:.6e})",
                    tail.b_value,
                    tail.chain_bound()
                );
            }
            vec![r]
        }
        Claim::Section6Primes | Claim::Section6Squarefull => {
            let kind = if claim == Claim::Section6Primes {
                Section6Kind::Primes
            } else {
                Section6Kind::Squarefull
            };
            let (r, instances) = bounds::holder_section6(&lab, grid, kind)?;
            for inst in &instances {
                println!(
                    "x={}: sum |lambda| = {:.6e} <= Holder majorant {:.6e} over {} elements",
                    inst.x, inst.lhs, inst.holder_majorant, inst.set_count
                );
            }
            vec![r]
        }
        Claim::Remark1 => {
            let (r, rows) = bounds::remark1_density(&lab, grid)?;
            for row in &rows {
                println!(
                    "x={}: R = {:.6} envelope = {:.6} reference x/(log x)^0.118 = {:.6e}",
                    row.x, row.ratio, row.envelope, row.tang_wu
                );
            }
            vec![r]
        }
        Claim::Eq3 => {
            let r = bounds::verify_eq3(&lab, grid)?;
            let (checked, viol) = bounds::eq3_coefficientwise_violations(&lab)?;
            println!("coefficientwise check at prime powers: {viol} exceedances in {checked}");
            vec![r]
        }
    };

    let path = write_csv(
        &cfg.out_dir(),
        &format!("{}.csv", claim.name()),
        &reports_to_csv(&reports),
    )?;
    for r in &reports {
        println!(
            "{}: {:?} (constant {:.6})",
            r.claim_id, r.verdict, r.calibrated_constant
        );
    }
    println!("wrote {}", path.display());
    Ok(verdict_code(combined_verdict(&reports)))
}

fn cmd_rho(u_max: f64, step: f64, cfg: &RunConfig) -> Result<i32> {
    if !(u_max >= 0.0) || !u_max.is_finite() {
        return Err(Error::domain("u-max must be a nonnegative finite number"));
    }
    if !(step > 0.0) || !step.is_finite() {
        return Err(Error::domain("step must be positive"));
    }
    let rows = (u_max / step).round() as u64;
    if rows > 10_000_000 {
        return Err(Error::domain("rho table would exceed 1e7 rows"));
    }
    let table = RhoTable::build(u_max + step)?;
    let mut csv = String::from("u,rho\n");
    for i in 0..=rows {
        let u = i as f64 * step;
        csv.push_str(&format!("{u:.6},{:.16e}\n", table.eval(u.min(u_max))?));
    }
    let path = write_csv(&cfg.out_dir(), "rho.csv", &csv)?;
    println!("wrote {} ({} rows)", path.display(), rows + 1);
    Ok(0)
}

fn cmd_psi(x: u64, y: f64, cfg: &RunConfig) -> Result<i32> {
    let factors = FactorTable::build(x.max(2), cfg.workers)?;
    let descent = psi_dfs(x, y, &factors)?;
    let scan = psi_scan(x, y, &factors)?;
    println!("psi({x}, {y}) = {descent} (prime descent)");
    println!("psi({x}, {y}) = {scan} (factor table scan)");
    if descent != scan {
        return Err(Error::domain(format!(
            "algorithm mismatch: descent {descent} != scan {scan}"
        )));
    }
    Ok(0)
}

fn cmd_sums(weight: &str, cfg: &RunConfig) -> Result<i32> {
    let kind = WeightKind::parse(weight)?;
    let factors = FactorTable::build(cfg.x_max, cfg.workers)?;
    let coeffs = if kind.needs_lambda() {
        let source = cfg.source()?;
        let mut t = CoefficientTable::build(&source, cfg.x_max, &factors)?;
        if kind == WeightKind::LambdaStar {
            t.build_lambda_star(&factors)?;
        }
        Some(t)
    } else {
        None
    };
    let ctx = WeightCtx {
        factors: &factors,
        coeffs: coeffs.as_ref(),
    };
    let series = partial_sums(kind, &ctx, &cfg.grid, cfg.workers)?;
    let path = write_csv(
        &cfg.out_dir(),
        &format!("sums-{}.csv", kind.descriptor()),
        &series.to_csv(),
    )?;
    let last = series.checkpoints.len() - 1;
    println!(
        "S({}) = {}, L({}) = {}",
        series.checkpoints[last],
        series.s_values[last],
        series.checkpoints[last],
        series.l_values[last]
    );
    println!("wrote {}", path.display());
    Ok(0)
}

fn cmd_gen_coeffs(cfg: &RunConfig) -> Result<i32> {
    let out = cfg
        .out
        .clone()
        .ok_or_else(|| Error::Usage("gen-coeffs requires --out FILE".into()))?;
    let source = cfg.source()?;
    let factors = FactorTable::build(cfg.x_max, cfg.workers)?;
    if let Some(dir) = out.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    source.write_file(&out, factors.primes())?;
    println!(
        "wrote {} ({} primes, model {})",
        out.display(),
        factors.primes().len(),
        source.descriptor()
    );
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn epsilon_parsing() {
        assert_eq!(parse_epsilon("1/64").unwrap(), 1.0 / 64.0);
        assert_eq!(parse_epsilon("3/128").unwrap(), 3.0 / 128.0);
        assert!(parse_epsilon("0/64").is_err());
        assert!(parse_epsilon("1/0").is_err());
        assert!(parse_epsilon("0.5").is_err());
    }

    #[test]
    fn default_grid_shapes() {
        assert_eq!(
            default_grid(1_000_000),
            vec![1_000, 10_000, 100_000, 1_000_000]
        );
        assert_eq!(default_grid(100), vec![100]);
        assert_eq!(default_grid(5_000), vec![1_000]);
    }

    #[test]
    fn resolve_rejects_small_k() {
        let args = CommonArgs {
            k: Some(1),
            ..Default::default()
        };
        match resolve(&args) {
            Err(Error::Usage(_)) => {}
            other => panic!("expected usage error, got {other:?}"),
        }
    }

    #[test]
    fn resolve_rejects_grid_beyond_x_max() {
        let args = CommonArgs {
            x_max: Some(1_000),
            grid: Some(vec![10_000]),
            ..Default::default()
        };
        assert!(matches!(resolve(&args), Err(Error::Usage(_))));
    }

    #[test]
    fn config_file_layering() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("run.conf");
        std::fs::write(&path, "x-max=2000\nseed=9\ngrid=1000,2000\n# comment\n").unwrap();
        let args = CommonArgs {
            config: Some(path.clone()),
            seed: Some(4), // flag wins
            ..Default::default()
        };
        let cfg = resolve(&args).unwrap();
        assert_eq!(cfg.x_max, 2000);
        assert_eq!(cfg.seed, 4);
        assert_eq!(cfg.grid, vec![1000, 2000]);

        std::fs::write(&path, "bogus=1\n").unwrap();
        let args = CommonArgs {
            config: Some(path),
            ..Default::default()
        };
        assert!(matches!(resolve(&args), Err(Error::Config { .. })));
    }
}

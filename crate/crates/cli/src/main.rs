//! `specfac`: factor-criterion checks, A_α spectral radii, the spectral
//! threshold and the verification harnesses, all with JSON output.
//!
//! Exit codes: 0 success, 2 input error, 3 negative answer, 4 capability
//! limit.

mod input;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::{json, Value};
use specfac::factor::{find_factor_capped, has_factor_criterion, CriterionWitness, DEFAULT_BLOCK_CAP};
use specfac::factor::search::DEFAULT_MAX_ORDER;
use specfac::verify::report::num;
use specfac::verify::{self, SignGrid, VerificationReport};
use specfac::{graph6, spectral, tol, Graph, VertexSubset};

use input::{next_chunk, GraphSource, Input};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 2;
const EXIT_NEGATIVE: u8 = 3;
const EXIT_CAPABILITY: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "specfac", version, about = "Spectral conditions for {P2, C3, P5, T(3)}-factors")]
struct Cli {
    /// Eigenvalue agreement tolerance.
    #[arg(long, global = true, env = "SPECFAC_TOL_EIG", default_value_t = tol::EIG_EQ)]
    tol_eig: f64,
    /// Polynomial root tolerance.
    #[arg(long, global = true, env = "SPECFAC_TOL_ROOT", default_value_t = tol::ROOT)]
    tol_root: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a graph has a factor; prints the violating set or a certificate.
    Check {
        #[command(flatten)]
        source: GraphSource,
        /// Worker threads for batch mode.
        #[arg(long, env = "SPECFAC_JOBS")]
        jobs: Option<usize>,
        /// Skip the explicit factor search.
        #[arg(long)]
        no_certificate: bool,
        /// Above the exhaustive cap, test this many sampled candidate sets instead.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Spectral radius of A_α = αD + (1-α)A.
    Rho {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Reject disconnected input.
        #[arg(long)]
        require_connected: bool,
    },
    /// The spectral threshold τ(n) at weight α.
    Tau {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alpha: f64,
    },
    /// Run a verification harness.
    Verify {
        #[arg(long, value_enum)]
        harness: Harness,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, value_delimiter = ',')]
        n_list: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Directory for `<harness>.jsonl` and `<harness>.csv`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Harness {
    Theorem1,
    Theorem2,
    Corollary3,
    Signclaims,
    LemmaEquivalence,
    Quotient,
    CompleteRadius,
    Monotonicity,
}

/// An error carrying its own exit code.
#[derive(Debug)]
struct Exit(u8, String);

impl std::fmt::Display for Exit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.1)
    }
}

impl std::error::Error for Exit {}

fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(Exit(code, _)) = cause.downcast_ref::<Exit>() {
            return *code;
        }
        if let Some(e) = cause.downcast_ref::<specfac::Error>() {
            return match e {
                specfac::Error::CapExceeded { .. }
                | specfac::Error::EnumerationUnavailable(_)
                | specfac::Error::Inconclusive(_) => EXIT_CAPABILITY,
                _ => EXIT_INPUT,
            };
        }
    }
    EXIT_INPUT
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    let tols = (cli.tol_eig, cli.tol_root);
    for (name, t) in [("tol-eig", cli.tol_eig), ("tol-root", cli.tol_root)] {
        if !(t.is_finite() && t > 0.0) {
            return Err(Exit(EXIT_INPUT, format!("--{name} must be a positive number, got {t}")).into());
        }
    }
    match cli.command {
        Command::Check { source, jobs, no_certificate, sample, seed } => {
            let opts = CheckOptions { certificate: !no_certificate, sample, seed };
            match source.open()? {
                Input::Single { label, graph } => {
                    let (mut value, code) = check_one(&graph, &opts)?;
                    value["input"] = json!(label);
                    println!("{value}");
                    Ok(code)
                }
                Input::Batch(mut reader) => check_batch(&mut *reader, jobs, &opts),
            }
        }
        Command::Rho { source, alpha, require_connected } => cmd_rho(&source.single()?, alpha, require_connected),
        Command::Tau { n, alpha } => cmd_tau(n, alpha, tols),
        Command::Verify { harness, n, max_n, alpha, n_list, trials, seed, out } => {
            let params = VerifyParams { n, max_n, alpha, n_list, trials, seed };
            cmd_verify(harness, &params, out, tols)
        }
    }
}

struct CheckOptions {
    certificate: bool,
    sample: Option<usize>,
    seed: u64,
}

fn witness_json(w: &CriterionWitness) -> (Value, Value) {
    (json!(w.set), json!({ "isolated": w.isolated, "slack": num(w.slack) }))
}

fn check_one(g: &Graph, opts: &CheckOptions) -> Result<(Value, u8)> {
    let started = Instant::now();
    let decided = match has_factor_criterion(g) {
        Ok(d) => d,
        Err(specfac::Error::CapExceeded { n, cap, .. }) => {
            let Some(samples) = opts.sample else {
                return Err(Exit(
                    EXIT_CAPABILITY,
                    format!("order {n} exceeds the exhaustive criterion cap {cap}; pass --sample N to search sampled candidate sets"),
                )
                .into());
            };
            return Ok(sampled_check(g, samples, opts.seed));
        }
        Err(e) => return Err(e.into()),
    };
    let (has_factor, witness) = decided;
    let mut out = json!({ "n": g.n(), "m": g.edge_count(), "has_factor": has_factor, "witness_S": null });
    if let Some(w) = &witness {
        let (set, detail) = witness_json(w);
        out["witness_S"] = set;
        out["witness"] = detail;
    }
    if has_factor && opts.certificate {
        out["certificate"] = if g.n() <= DEFAULT_MAX_ORDER {
            match find_factor_capped(g, DEFAULT_BLOCK_CAP, DEFAULT_MAX_ORDER)? {
                Some(cert) => serde_json::to_value(cert)?,
                None => {
                    return Err(Exit(EXIT_CAPABILITY, format!(
                        "criterion holds but no factor with blocks of at most {DEFAULT_BLOCK_CAP} vertices was found"
                    ))
                    .into())
                }
            }
        } else {
            Value::Null
        };
    }
    out["runtime_ms"] = num(started.elapsed().as_secs_f64() * 1e3);
    Ok((out, if has_factor { EXIT_OK } else { EXIT_NEGATIVE }))
}

/// One-sided check for graphs above the cap: candidate sets `S = N(I)` for
/// the prefixes `I` of random greedy independent sets (every other sample
/// takes low-degree vertices first). A violation settles the answer; finding
/// none leaves it open.
fn sampled_check(g: &Graph, samples: usize, seed: u64) -> (Value, u8) {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    for t in 0..samples {
        order.shuffle(&mut rng);
        if t % 2 == 0 {
            order.sort_by_key(|&v| g.degree(v));
        }
        let mut blocked = vec![false; n];
        let mut in_s = vec![false; n];
        let mut size = 0;
        for &v in &order {
            if blocked[v] {
                continue;
            }
            blocked[v] = true;
            for &u in g.neighbors(v) {
                blocked[u] = true;
                size += !std::mem::replace(&mut in_s[u], true) as usize;
            }
            // a violation needs |S| < 2n/5
            if 5 * size >= 2 * n {
                break;
            }
            let s = VertexSubset::new(n, (0..n).filter(|&v| in_s[v])).expect("vertices in range");
            let isolated = g.isolated_count(&s);
            if 2 * isolated > 3 * size {
                let slack = isolated as f64 - 1.5 * size as f64;
                let out = json!({
                    "n": n, "m": g.edge_count(), "has_factor": false, "witness_S": s.members(),
                    "witness": { "isolated": isolated, "slack": num(slack) }, "sampled": t + 1,
                });
                return (out, EXIT_NEGATIVE);
            }
        }
    }
    let out = json!({ "n": n, "m": g.edge_count(), "has_factor": null, "witness_S": null, "sampled": samples });
    (out, EXIT_CAPABILITY)
}

fn exit_rank(code: u8) -> u8 {
    match code {
        EXIT_OK => 0,
        EXIT_NEGATIVE => 1,
        EXIT_CAPABILITY => 2,
        _ => 3,
    }
}

/// Graph6 lines in, one JSON line out per graph, in input order.
fn check_batch(reader: &mut dyn io::BufRead, jobs: Option<usize>, opts: &CheckOptions) -> Result<u8> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(Exit(EXIT_INPUT, "--jobs must be at least 1".into()).into());
        }
        builder = builder.num_threads(j);
    }
    let pool = builder.build().context("starting worker pool")?;
    let chunk = 64 * pool.current_num_threads();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut line_no = 0;
    let mut worst = EXIT_OK;
    loop {
        let lines = next_chunk(reader, chunk, &mut line_no).context("reading graph6 input")?;
        if lines.is_empty() {
            break;
        }
        // indexed collect keeps input order
        let results: Vec<(Value, u8)> = pool.install(|| {
            lines
                .par_iter()
                .map(|(no, text)| {
                    let outcome = graph6::decode(text).map_err(anyhow::Error::from).and_then(|g| check_one(&g, opts));
                    let (mut value, code) = match outcome {
                        Ok(r) => r,
                        Err(e) => (json!({ "error": format!("{e:#}") }), exit_code(&e)),
                    };
                    value["line"] = json!(no);
                    value["g6"] = json!(text);
                    (value, code)
                })
                .collect()
        });
        for (value, code) in results {
            writeln!(out, "{value}")?;
            if exit_rank(code) > exit_rank(worst) {
                worst = code;
            }
        }
    }
    out.flush()?;
    Ok(worst)
}

fn cmd_rho(g: &Graph, alpha: f64, require_connected: bool) -> Result<u8> {
    spectral::check_alpha(alpha)?;
    if require_connected && !g.is_connected() {
        return Err(Exit(EXIT_INPUT, format!("graph on {} vertices is disconnected", g.n())).into());
    }
    let started = Instant::now();
    let rho = spectral::rho_alpha(g, alpha)?;
    let out = json!({
        "n": g.n(),
        "m": g.edge_count(),
        "alpha": num(alpha),
        "rho_alpha": num(rho),
        "runtime_ms": num(started.elapsed().as_secs_f64() * 1e3),
    });
    println!("{out}");
    Ok(EXIT_OK)
}

fn f_table() -> String {
    "f(alpha) = 20 for alpha <= 1/2; 25 for 1/2 < alpha <= 5/7; 7/(1-alpha) + 3 for 5/7 < alpha < 1".to_string()
}

/// Largest order for which `tau` also reports the radius of the extremal graph.
const TAU_EXTREMAL_MAX_N: usize = 400;

fn cmd_tau(n: usize, alpha: f64, (tol_eig, tol_root): (f64, f64)) -> Result<u8> {
    let f = spectral::f_threshold(alpha)?;
    let floor = spectral::min_order(alpha)?;
    if n < floor {
        return Err(Exit(EXIT_CAPABILITY, format!("n = {n} is below f({alpha}) = {f}; need n >= {floor}\n{}", f_table())).into());
    }
    let phi = spectral::phi(n, alpha)?;
    let nf = n as f64;
    let tau = phi.largest_root_tol(Some((nf - 3.0, nf - 1.0)), tol_root)?;
    let mut out = json!({
        "n": n,
        "alpha": num(alpha),
        "f_alpha": num(f),
        "tau": num(tau),
        "phi_coeffs": phi.coeffs().iter().map(|&c| num(c)).collect::<Vec<_>>(),
    });
    if n <= TAU_EXTREMAL_MAX_N {
        let rho = spectral::rho_alpha(&specfac::graph::extremal_g2(n)?, alpha)?;
        out["rho_extremal"] = num(rho);
        out["extremal_attains"] = json!((rho - tau).abs() <= tol_eig);
    }
    println!("{out}");
    Ok(EXIT_OK)
}

struct VerifyParams {
    n: Option<usize>,
    max_n: Option<usize>,
    alpha: Option<f64>,
    n_list: Vec<usize>,
    trials: usize,
    seed: u64,
}

impl VerifyParams {
    fn orders(&self, default: impl FnOnce() -> Result<Vec<usize>>) -> Result<Vec<usize>> {
        if !self.n_list.is_empty() {
            Ok(self.n_list.clone())
        } else if let Some(n) = self.n {
            Ok(vec![n])
        } else {
            default()
        }
    }
}

/// Folds per-order reports into one, keeping each order's notes apart.
fn combine(harness: &str, grid: Value, parts: Vec<(usize, VerificationReport)>) -> VerificationReport {
    let mut all = VerificationReport::new(harness, grid);
    let wall: u128 = parts.iter().map(|(_, r)| r.wall_ms).sum();
    for (n, mut part) in parts {
        let notes = std::mem::take(&mut part.notes);
        all.merge(part);
        all.note(&format!("n{n}"), Value::Object(notes));
    }
    let mut all = all.finish();
    all.wall_ms = wall;
    all
}

fn run_harness(harness: Harness, p: &VerifyParams) -> Result<VerificationReport> {
    Ok(match harness {
        Harness::Theorem1 => {
            let ns = p.orders(|| Ok((5..=8).collect()))?;
            let parts = ns.iter().map(|&n| Ok((n, verify::verify_theorem1(n)?))).collect::<Result<Vec<_>>>()?;
            combine("theorem1", json!({ "n": ns }), parts)
        }
        Harness::Theorem2 => {
            let alpha = p.alpha.unwrap_or(0.5);
            let ns = p.orders(|| Ok(vec![spectral::min_order(alpha)?]))?;
            verify::verify_theorem2(alpha, &ns, p.trials, p.seed)?
        }
        Harness::Corollary3 => verify::verify_corollary3(&p.orders(|| Ok(vec![20, 25, 30]))?)?,
        Harness::Signclaims => verify::check_sign_claims(&SignGrid::default())?,
        Harness::LemmaEquivalence => verify::verify_lemma_equivalence(p.max_n.or(p.n).unwrap_or(8))?,
        Harness::Quotient => verify::verify_quotient_consistency(&verify::QuotientGrid::default())?,
        Harness::CompleteRadius => {
            let alphas = match p.alpha {
                Some(a) => vec![a],
                None => vec![0.0, 0.25, 0.5, 0.75, 0.9],
            };
            verify::verify_complete_radius(p.max_n.unwrap_or(30), &alphas)?
        }
        Harness::Monotonicity => verify::verify_edge_monotonicity(p.trials, p.max_n.unwrap_or(12), p.seed)?,
    })
}

fn cmd_verify(harness: Harness, p: &VerifyParams, out: Option<PathBuf>, (tol_eig, tol_root): (f64, f64)) -> Result<u8> {
    let mut report = run_harness(harness, p)?;
    report.note("tolerances", json!({ "eig": tol_eig, "root": tol_root }));
    if let Some(dir) = out {
        std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        let name = harness.to_possible_value().expect("no skipped variants").get_name().to_string();
        let jsonl = dir.join(format!("{name}.jsonl"));
        let csv = dir.join(format!("{name}.csv"));
        let file = std::fs::File::create(&jsonl).with_context(|| format!("creating {}", jsonl.display()))?;
        report.write_jsonl(BufWriter::new(file))?;
        let file = std::fs::File::create(&csv).with_context(|| format!("creating {}", csv.display()))?;
        report.write_csv_summary(BufWriter::new(file))?;
    }
    let mut summary = report.summary();
    summary["pass"] = json!(report.is_pass());
    summary["failures"] = report.failures().take(10).map(serde_json::to_value).collect::<Result<Vec<_>, _>>()?.into();
    println!("{summary}");
    Ok(if report.is_pass() { EXIT_OK } else { EXIT_NEGATIVE })
}

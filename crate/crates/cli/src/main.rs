//! `spex`: build graph families, compute spectral radii and cycle spectra,
//! and run the certification checks from the command line.

mod input;

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use spex_core::cycles::{cycle_spectrum, in_gnk, DEFAULT_BUDGET};
use spex_core::forest::{enumerate_lna, extremal_graph, random_forest, LinearForest};
use spex_core::spectral::{spectral_radius, DEFAULT_TOL};
use spex_core::verify::{
    argmax_sweep, margins_csv, sweep_lemma1, sweep_lemma2, verify_claim33, verify_entry_bounds,
    verify_lemma1, verify_lemma2, PathMergeParams, VerificationReport,
};
use spex_core::{graph6, selftest, Graph, SpexError};

#[derive(Parser, Debug)]
#[command(name = "spex", version, about = "Spectral radii, cycle spectra and certification for planar graph families")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Residual tolerance of the power iteration.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    /// Node budget per cycle-length search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomised sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GraphFormat {
    G6,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph from a family string (or `extremal --n N --k K`) and
    /// print it.
    Build {
        /// Family string such as `k2+[4,1,1]`, `K2,18`, `P7`, or `extremal`.
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Output graph format.
        #[arg(long, value_enum, default_value_t = GraphFormat::G6)]
        out: GraphFormat,
    },
    /// Spectral radius of a connected graph.
    Rho {
        /// Family string, graph6, file path, or `-` for stdin (default).
        graph: Option<String>,
        /// Print the Perron vector as CSV instead.
        #[arg(long)]
        emit_vector: bool,
    },
    /// Which cycle lengths a graph contains.
    Spectrum {
        graph: Option<String>,
        /// Largest length to test (default: the order).
        #[arg(long)]
        max: Option<usize>,
    },
    /// Whether a planar graph misses some cycle length in `3..=n-k`.
    Member {
        graph: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// Certify a single inequality.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Run a parameter sweep.
    #[command(subcommand)]
    Sweep(SweepCmd),
    /// Run the built-in sanity checks.
    Selftest,
}

#[derive(Args, Debug)]
struct MergeArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n1: usize,
    #[arg(long)]
    n2: usize,
    /// Remaining paths, comma separated.
    #[arg(long, value_delimiter = ',')]
    rest: Vec<usize>,
    /// Allow orders below the proved range; reports are flagged.
    #[arg(long)]
    force: bool,
}

impl MergeArgs {
    fn params(&self) -> PathMergeParams {
        let p = PathMergeParams::new(self.n, self.k, self.n1, self.n2, &self.rest);
        if self.force {
            p.forced()
        } else {
            p
        }
    }
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Fewer paths beat more paths: rho(K2 v L2) > rho(K2 v L1).
    Lemma1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a1: usize,
        #[arg(long)]
        a2: usize,
        /// Paths of L1, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        l1: Vec<usize>,
        /// Paths of L2, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        l2: Vec<usize>,
    },
    /// Merging two long paths increases the radius.
    Lemma2(MergeArgs),
    /// Interval localisation of Perron entries at the path ends.
    Claim33(MergeArgs),
    /// Perron entries of forest vertices lie in `[2/rho, 2/rho + 8/rho^2]`.
    EntryBounds {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        forest: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum SweepCmd {
    /// Maximise the radius over admissible forests.
    Argmax {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 3)]
        parts: usize,
        #[arg(long)]
        force: bool,
    },
    /// Exhaustive fewer-paths check at one order.
    Lemma1 {
        #[arg(long)]
        n: usize,
    },
    /// Path merge and entry localisation over every split of `--sum`.
    Lemma2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        sum: usize,
        #[arg(long, default_value_t = 2)]
        n2_min: usize,
        #[arg(long, value_delimiter = ',')]
        rest: Vec<usize>,
    },
    /// Entry bounds on randomly sampled forests (uses `--seed`).
    EntryBounds {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 20)]
        n_min: usize,
        #[arg(long, default_value_t = 100)]
        n_max: usize,
    },
    /// Every forest of `L(n, a)`, one per line.
    Lna {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: usize,
    },
}

/// Outcome of a run: text to print and whether any verdict was violated.
struct Output {
    text: String,
    violated: bool,
}

impl Output {
    fn plain(text: String) -> Self {
        Output { text, violated: false }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable output") + "\n"
}

fn reports_output(reports: &[VerificationReport], format: Format) -> Output {
    let violated = reports.iter().any(VerificationReport::is_violated);
    let text = match format {
        Format::Json => reports.iter().map(|r| r.to_json_line() + "\n").collect(),
        Format::Csv => margins_csv(reports),
        Format::Text => reports
            .iter()
            .map(|r| {
                let verdict = serde_json::to_value(r.holds).unwrap();
                let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let mut line = format!("{} {} {}", r.check_id, verdict.as_str().unwrap_or(""), params.join(" "));
                if !r.within_hypothesis {
                    line.push_str(" (outside proved range)");
                }
                line + "\n"
            })
            .collect(),
    };
    Output { text, violated }
}

fn forest(parts: &[usize]) -> Result<LinearForest> {
    Ok(LinearForest::new(parts)?)
}

fn build(family: &str, n: Option<usize>, k: Option<usize>, out: GraphFormat) -> Result<Output> {
    let g = match (family, n, k) {
        ("extremal", Some(n), Some(k)) => extremal_graph(n, k)?,
        ("extremal", _, _) => bail!(SpexError::Argument("extremal needs --n and --k".into())),
        (_, None, None) => spex_core::family::parse_family(family)?,
        _ => bail!(SpexError::Argument("--n/--k only apply to `extremal`".into())),
    };
    Ok(Output::plain(match out {
        GraphFormat::G6 => graph6::encode(&g) + "\n",
        GraphFormat::Edges => g.to_edge_list(),
    }))
}

fn rho(g: &Graph, emit_vector: bool, global: &Global) -> Result<Output> {
    let r = spectral_radius(g, global.tol)?;
    if emit_vector {
        let mut text = String::from("vertex,x\n");
        for (v, x) in r.x.iter().enumerate() {
            text.push_str(&format!("{v},{x:e}\n"));
        }
        return Ok(Output::plain(text));
    }
    Ok(Output::plain(match global.format {
        Format::Json => json(&r),
        Format::Csv => format!("rho,residual,iters\n{:e},{:e},{}\n", r.rho, r.residual, r.iters),
        Format::Text => format!("rho = {} (residual {:e}, {} iterations)\n", r.rho, r.residual, r.iters),
    }))
}

fn spectrum(g: &Graph, max: Option<usize>, global: &Global) -> Result<Output> {
    let s = cycle_spectrum(g, max.unwrap_or(g.n()), global.budget)?;
    Ok(Output::plain(match global.format {
        Format::Json => json(&s.entries),
        Format::Csv => {
            let mut t = String::from("ell,status\n");
            for e in &s.entries {
                t.push_str(&format!("{},{}\n", e.ell, e.status.label()));
            }
            t
        }
        Format::Text => format!("present: {:?}\n", s.present_lengths()),
    }))
}

fn member(g: &Graph, k: usize, global: &Global) -> Result<Output> {
    let m = in_gnk(g, k, global.budget)?;
    Ok(Output::plain(match global.format {
        Format::Json | Format::Csv => json(&m),
        Format::Text => match m.witness {
            Some(w) => format!("member (no cycle of length {w})\n"),
            None => "not a member\n".to_string(),
        },
    }))
}

fn verify(cmd: &VerifyCmd, global: &Global) -> Result<Output> {
    let tol = global.tol;
    let report = match cmd {
        VerifyCmd::Lemma1 { n, a1, a2, l1, l2 } => verify_lemma1(*n, *a1, *a2, &forest(l1)?, &forest(l2)?, tol)?,
        VerifyCmd::Lemma2(m) => verify_lemma2(&m.params(), tol)?,
        VerifyCmd::Claim33(m) => verify_claim33(&m.params(), tol)?.1,
        VerifyCmd::EntryBounds { n, forest: parts } => verify_entry_bounds(*n, &forest(parts)?, tol)?,
    };
    Ok(reports_output(&[report], global.format))
}

fn sweep(cmd: &SweepCmd, global: &Global) -> Result<Output> {
    use rand::SeedableRng;
    let tol = global.tol;
    let reports = match cmd {
        SweepCmd::Argmax { n, k, parts, force } => vec![argmax_sweep(*n, *k, *parts, tol, *force)?.report],
        SweepCmd::Lemma1 { n } => sweep_lemma1(*n, tol)?,
        SweepCmd::Lemma2 { n, k, sum, n2_min, rest } => sweep_lemma2(*n, *k, *sum, *n2_min, rest, tol)?
            .into_iter()
            .flat_map(|(a, b)| [a, b])
            .collect(),
        SweepCmd::EntryBounds { samples, n_min, n_max } => {
            if n_min < &4 || n_min > n_max {
                bail!(SpexError::Argument(format!("need 4 <= n-min <= n-max, got {n_min}..{n_max}")));
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(global.seed);
            let samples: Vec<(usize, LinearForest)> = (0..*samples)
                .map(|_| {
                    let n = rand::Rng::gen_range(&mut rng, *n_min..=*n_max);
                    (n, random_forest(&mut rng, n - 2, n - 2))
                })
                .collect();
            samples
                .iter()
                .map(|(n, f)| verify_entry_bounds(*n, f, tol))
                .collect::<spex_core::Result<_>>()?
        }
        SweepCmd::Lna { n, a } => {
            let text = enumerate_lna(*n, *a)?.map(|f| format!("{f}\n")).collect();
            return Ok(Output::plain(text));
        }
    };
    Ok(reports_output(&reports, global.format))
}

fn run_selftest() -> Output {
    let mut text = String::new();
    let mut failed = false;
    for c in selftest::checks() {
        let ok = c.run();
        failed |= !ok;
        text.push_str(&format!("{} {}\n", if ok { "ok  " } else { "FAIL" }, c.name));
    }
    Output { text, violated: failed }
}

fn thread_pool(parallel: bool) -> Result<rayon::ThreadPool> {
    let threads = if parallel {
        match std::env::var("SPEX_THREADS") {
            Ok(v) => v
                .parse::<usize>()
                .ok()
                .filter(|&t| t > 0)
                .with_context(|| format!("SPEX_THREADS must be a positive integer, got {v:?}"))?,
            Err(_) => 0,
        }
    } else {
        1
    };
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads).build()?)
}

fn dispatch(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    if !(g.tol > 0.0 && g.tol.is_finite()) {
        bail!(SpexError::Argument(format!("--tol must be positive, got {}", g.tol)));
    }
    if g.budget == 0 {
        bail!(SpexError::Argument("--budget must be positive".into()));
    }
    let pool = thread_pool(matches!(cli.command, Command::Sweep(_)))?;
    pool.install(|| match &cli.command {
        Command::Build { family, n, k, out } => build(family, *n, *k, *out),
        Command::Rho { graph, emit_vector } => rho(&input::load(graph.as_deref())?, *emit_vector, g),
        Command::Spectrum { graph, max } => spectrum(&input::load(graph.as_deref())?, *max, g),
        Command::Member { graph, k } => member(&input::load(graph.as_deref())?, *k, g),
        Command::Verify(cmd) => verify(cmd, g),
        Command::Sweep(cmd) => sweep(cmd, g),
        Command::Selftest => Ok(run_selftest()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            if out.violated {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

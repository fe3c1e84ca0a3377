//! Command-line front end.
//!
//! Exit codes: 0 success or verified, 1 structure found / verdict false /
//! violations present, 2 usage or input error, 3 inconclusive.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

use crate::coherence::check_coherence;
use crate::decomposition::{all_y_fractures, flat_piece, homogeneous_partition, weighted_fractures, Fracture};
use crate::detectors::{extremal_set, find_forcer, find_hole_with_hat, find_house, is_perfect, ExtremalKind};
use crate::error::{Error, Result};
use crate::formats::{parse_graph, parse_weights, to_graph6};
use crate::graph::Graph;
use crate::harness::enumerate::{enumerate_graphs, EnumSpec, Filter};
use crate::harness::lemmas::{verify_lemma, verify_lemma_upto};
use crate::harness::search::{default_search_specs, run_pipeline, search_instances, with_forcer, Instance};
use crate::harness::stats::eh_statistics;
use crate::narrowness::{certify_narrow, is_good, narrowness_threshold, parse_rational, power_mass, Verdict};
use crate::report::LemmaId;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "hatfree", version, about = "Detect, decompose and verify hole-with-hat-free graphs")]
struct Cli {
    /// Worker threads for enumeration and verification.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for randomized search.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum What {
    HoleWithHat,
    House,
    Forcer,
    Perfect,
    Clique,
    Stable,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Look for a structure; exits 1 when found (or when not perfect).
    Detect {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Y-fractures and homogeneous partition, or with weights the weighted
    /// fractures, flat piece and split pipeline.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, requires = "eps")]
        weights: Option<PathBuf>,
        #[arg(long, requires = "weights")]
        eps: Option<String>,
    },
    /// Exact coherence check; exits 1 when a condition fails.
    Coherence {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        eps: String,
    },
    /// Certify alpha-narrowness; exits 1 when not narrow, 3 when inconclusive.
    Certify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        alpha: String,
        /// Also evaluate this good function.
        #[arg(long)]
        good: Option<PathBuf>,
        /// Also locate the least alpha at which the graph is narrow.
        #[arg(long)]
        threshold: bool,
    },
    /// Exhaustive lemma check; one line per violation, then a JSON summary.
    Verify {
        #[arg(long)]
        lemma: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "filter")]
        filters: Vec<String>,
        /// Every size from 0 to n, not just n.
        #[arg(long)]
        upto: bool,
    },
    /// One graph6 line per graph.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long = "filter")]
        filters: Vec<String>,
        /// Every labelled graph instead of one per isomorphism class.
        #[arg(long)]
        labelled: bool,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Least max(clique, stable set) over a class, as JSON.
    Stats {
        #[arg(long)]
        n: usize,
        #[arg(long = "filter")]
        filters: Vec<String>,
    },
    /// Search for coherent hole-with-hat-free instances.
    Search {
        /// Run the split pipeline on instances with a forcer.
        #[arg(long)]
        pipeline: bool,
    },
}

/// Parses `args` (program name first), runs the verb and returns the exit
/// code. Reports go to `out`, diagnostics to stderr.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_ERROR;
        }
    };
    // The report is buffered so the worker pool never touches `out`.
    let mut buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut buf));
    if let Err(e) = out.write_all(&buf).and_then(|_| out.flush()) {
        eprintln!("error: {e}");
        return EXIT_ERROR;
    }
    match result {
        Ok(code) => code,
        Err(Error::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}");
            EXIT_INCONCLUSIVE
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn read_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).map_err(|e| located(path, e))
}

fn located(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, column, message } => {
            Error::Parse { line, column, message: format!("{}: {message}", path.display()) }
        }
        other => other,
    }
}

fn filters(names: &[String]) -> Result<Vec<Filter>> {
    names.iter().map(|s| s.parse()).collect()
}

fn rational(s: &str) -> Result<BigRational> {
    parse_rational(s)
}

/// The serde name of a unit enum variant.
fn kebab<T: serde::Serialize>(x: &T) -> Result<String> {
    match serde_json::to_value(x) {
        Ok(serde_json::Value::String(s)) => Ok(s),
        _ => Err(Error::internal("expected a unit variant")),
    }
}

fn fracture_line(f: &Fracture) -> String {
    format!("A={} C={} D={} B={} Y={}", f.a, f.c, f.d, f.b, f.y)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Detect { what, input } => detect(*what, &read_graph(input)?, out),
        Command::Decompose { input, weights, eps } => {
            let g = read_graph(input)?;
            match (weights, eps) {
                (Some(w), Some(eps)) => {
                    let w = parse_weights(&read(w)?, true).map_err(|e| located(w, e))?;
                    decompose_weighted(Instance { graph: g, weights: w, eps: rational(eps)? }, out)
                }
                _ => decompose(&g, out),
            }
        }
        Command::Coherence { input, weights, eps } => {
            let g = read_graph(input)?;
            let w = parse_weights(&read(weights)?, true).map_err(|e| located(weights, e))?;
            let report = check_coherence(&g, &w, &rational(eps)?)?;
            if report.ok {
                writeln!(out, "coherent eps={}", report.eps)?;
                return Ok(EXIT_OK);
            }
            writeln!(out, "not coherent eps={}", report.eps)?;
            for v in &report.violations {
                let sets: Vec<String> = v.witness.iter().map(|s| s.to_string()).collect();
                writeln!(out, "{} {}", kebab(&v.condition)?, sets.join(" "))?;
            }
            Ok(EXIT_FOUND)
        }
        Command::Certify { input, alpha, good, threshold } => {
            let g = read_graph(input)?;
            certify(&g, &rational(alpha)?, good.as_deref(), *threshold, out)
        }
        Command::Verify { lemma, n, filters: fs, upto } => {
            let lemma: LemmaId = lemma.parse()?;
            let fs = filters(fs)?;
            let start = Instant::now();
            let report = if *upto { verify_lemma_upto(lemma, *n, &fs)? } else { verify_lemma(lemma, &EnumSpec::new(*n, &fs))? };
            for line in report.lines() {
                writeln!(out, "{line}")?;
            }
            let summary = serde_json::to_string(&report.summary(start.elapsed())).map_err(|e| Error::internal(e.to_string()))?;
            writeln!(out, "{summary}")?;
            Ok(if report.ok() { EXIT_OK } else { EXIT_FOUND })
        }
        Command::Enumerate { n, filters: fs, labelled, count } => {
            let mut spec = EnumSpec::new(*n, &filters(fs)?);
            spec.canonical = !labelled;
            let graphs = enumerate_graphs(&spec)?;
            if *count {
                writeln!(out, "{}", graphs.len())?;
            } else {
                for g in &graphs {
                    writeln!(out, "{}", to_graph6(g))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Stats { n, filters: fs } => {
            let stats = eh_statistics(*n, &filters(fs)?)?;
            writeln!(out, "{}", serde_json::to_string(&stats).map_err(|e| Error::internal(e.to_string()))?)?;
            Ok(EXIT_OK)
        }
        Command::Search { pipeline } => search(cli.seed, *pipeline, out),
    }
}

fn detect(what: What, g: &Graph, out: &mut dyn Write) -> Result<i32> {
    let hwh = |h: Option<crate::detectors::HoleWithHat>, out: &mut dyn Write| -> Result<i32> {
        match h {
            Some(h) => {
                writeln!(out, "found hole={:?} hat={}", h.hole.cycle, h.hat)?;
                Ok(EXIT_FOUND)
            }
            None => {
                writeln!(out, "none")?;
                Ok(EXIT_OK)
            }
        }
    };
    match what {
        What::HoleWithHat => hwh(find_hole_with_hat(g), out),
        What::House => hwh(find_house(g), out),
        What::Forcer => match find_forcer(g) {
            Some(f) => {
                writeln!(out, "found path1={:?} path2={:?}", f.path1, f.path2)?;
                Ok(EXIT_FOUND)
            }
            None => {
                writeln!(out, "none")?;
                Ok(EXIT_OK)
            }
        },
        What::Perfect => {
            let p = is_perfect(g);
            match p.witness {
                None => {
                    writeln!(out, "perfect")?;
                    Ok(EXIT_OK)
                }
                Some(w) => {
                    let kind = if w.antihole { "antihole" } else { "hole" };
                    writeln!(out, "not perfect odd-{kind}={:?}", w.cycle)?;
                    Ok(EXIT_FOUND)
                }
            }
        }
        What::Clique | What::Stable => {
            let kind = if matches!(what, What::Clique) { ExtremalKind::Clique } else { ExtremalKind::Stable };
            let s = extremal_set(g, kind);
            writeln!(out, "size={} set={s}", s.len())?;
            Ok(EXIT_OK)
        }
    }
}

fn decompose(g: &Graph, out: &mut dyn Write) -> Result<i32> {
    let frs = all_y_fractures(g);
    writeln!(out, "y-fractures {}", frs.len())?;
    for f in &frs {
        writeln!(out, "{}", fracture_line(f))?;
    }
    let v = g.vertices();
    if g.n() >= 2 && g.is_connected(v) && g.is_anticonnected(v) {
        let p = homogeneous_partition(g, v)?;
        let parts: Vec<String> = p.parts.iter().map(|s| s.to_string()).collect();
        writeln!(out, "homogeneous-partition {}", parts.join(" "))?;
    } else {
        writeln!(out, "homogeneous-partition skipped: graph is not connected and anticonnected")?;
    }
    Ok(EXIT_OK)
}

fn decompose_weighted(inst: Instance, out: &mut dyn Write) -> Result<i32> {
    let (g, w, eps) = (&inst.graph, &inst.weights, &inst.eps);
    let frs = weighted_fractures(g, w, eps)?;
    writeln!(out, "fractures {}", frs.len())?;
    for f in &frs {
        writeln!(out, "{}", fracture_line(f))?;
    }
    match flat_piece(g, w, eps) {
        Ok(p) => writeln!(out, "flat-piece small-side={} Z={} guarded={}", p.small_side, p.z, p.guarded)?,
        Err(Error::Precondition(msg)) => writeln!(out, "flat-piece skipped: {msg}")?,
        Err(e) => return Err(e),
    }
    let runs = run_pipeline(&inst)?;
    writeln!(out, "pipeline {}", runs.len())?;
    for r in &runs {
        writeln!(out, "split C={} D={} optimal C={} D={} {}", r.split.c, r.split.d, r.optimal.c, r.optimal.d, fracture_line(&r.fracture))?;
    }
    Ok(EXIT_OK)
}

fn certify(g: &Graph, alpha: &BigRational, good: Option<&Path>, threshold: bool, out: &mut dyn Write) -> Result<i32> {
    let cert = certify_narrow(g, alpha)?;
    let argmax: Vec<String> = cert.argmax.iter().map(|x| x.to_string()).collect();
    writeln!(out, "verdict={} alpha={} max_value={} argmax=[{}]", kebab(&cert.verdict)?, cert.alpha, cert.max_value, argmax.join(","))?;
    if let Some(path) = good {
        let f = parse_weights(&read(path)?, false).map_err(|e| located(path, e))?;
        let (ok, witness) = is_good(g, &f)?;
        if ok {
            writeln!(out, "good-function value={}", power_mass(f.as_slice(), g.vertices(), alpha)?)?;
        } else {
            let w = witness.map(|s| s.to_string()).unwrap_or_default();
            writeln!(out, "good-function rejected perfect-set={w}")?;
        }
    }
    if threshold {
        match narrowness_threshold(g, 1e-9)? {
            Some(t) => writeln!(out, "threshold={t:.12}")?,
            None => writeln!(out, "threshold=1")?,
        }
    }
    Ok(match cert.verdict {
        Verdict::Narrow => EXIT_OK,
        Verdict::NotNarrow => EXIT_FOUND,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

fn search(seed: u64, pipeline: bool, out: &mut dyn Write) -> Result<i32> {
    let mut found = Vec::new();
    for spec in default_search_specs(seed) {
        found.extend(search_instances(&spec)?);
    }
    writeln!(out, "instances {}", found.len())?;
    for inst in &found {
        let ws: Vec<String> = inst.weights.as_slice().iter().map(|x| x.to_string()).collect();
        writeln!(out, "{} eps={} weights={}", to_graph6(&inst.graph), inst.eps, ws.join(","))?;
    }
    if pipeline {
        let forcing = with_forcer(&found);
        writeln!(out, "with-forcer {}", forcing.len())?;
        for inst in forcing {
            for r in run_pipeline(inst)? {
                writeln!(out, "{} {}", to_graph6(&inst.graph), fracture_line(&r.fracture))?;
            }
        }
    }
    Ok(EXIT_OK)
}

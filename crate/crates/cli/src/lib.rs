//! Command-line front end: file I/O, JSON reports, enumeration dumps, SVG output
//! and randomized count sweeps.

pub mod render;

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use pseudotri::io::{parse_edges, read_point_set, write_edges};
use pseudotri::rigidity::internal_dof;
use pseudotri::sample::{random_point_set, rng_from_seed};
use pseudotri::{
    canonical_ppt, check_conjecture, complete_to_ppt, enumerate_ppt, enumerate_triangulations,
    is_expansive, mechanism_motion, min_max_degree, rank, rigidity_matrix, validate, CountReport,
    Edge, Error, GeomGraph, Limits, PointSet, PseudoTriangulation, ValidationReport,
};

use render::{render_svg, RenderOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_FINDING: i32 = 3;

/// Environment variable overriding the enumeration size limit (at most 10).
pub const MAX_N_VAR: &str = "PPT_MAX_N";

#[derive(Debug, Parser)]
#[command(name = "pseudotri", version, about = "Pointed pseudo-triangulations of planar point sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check whether an edge set is a (pointed) pseudo-triangulation; prints JSON.
    Validate { points: PathBuf, edges: PathBuf },
    /// Build a pointed pseudo-triangulation, optionally completing a given edge set.
    Construct {
        points: PathBuf,
        #[arg(long, value_name = "EDGES")]
        complete: Option<PathBuf>,
        /// Write the edge file here instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// List every pointed pseudo-triangulation or triangulation.
    Enumerate {
        points: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Write one edge file per object plus index.txt into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Count triangulations and pointed pseudo-triangulations.
    Count {
        points: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Rigidity rank, and the flex after removing a hull bar.
    Rigidity {
        points: PathBuf,
        edges: PathBuf,
        #[arg(long, num_args = 2, value_names = ["I", "J"])]
        remove_hull_edge: Option<Vec<usize>>,
        #[arg(long)]
        json: bool,
    },
    /// Smallest maximum degree over all pointed pseudo-triangulations.
    Degree {
        points: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Draw a graph as SVG.
    Render {
        points: PathBuf,
        edges: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Fill the bounded faces.
        #[arg(long)]
        shade: bool,
        /// Print vertex indices.
        #[arg(long)]
        labels: bool,
    },
    /// Count both families on random point sets.
    ConjectureSweep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Ppt,
    Tri,
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::LimitExceeded { .. } => EXIT_USAGE,
            _ => EXIT_INVALID,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

type CmdResult = Result<i32, Failure>;

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn with_path(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn load_points(path: &Path) -> Result<Arc<PointSet>, Failure> {
    read_point_set(&read_file(path)?)
        .map(Arc::new)
        .map_err(|e| with_path(path, e))
}

fn load_edges(path: &Path) -> Result<Vec<(usize, usize)>, Failure> {
    parse_edges(&read_file(path)?).map_err(|e| with_path(path, e))
}

fn load_graph(points: &Path, edges: &Path) -> Result<GeomGraph, Failure> {
    Ok(GeomGraph::new(load_points(points)?, load_edges(edges)?)?)
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Reads `PPT_MAX_N` if set. Values above 10 are capped at 10.
pub fn limits_from_env(value: Option<&str>) -> Result<Limits, String> {
    let mut limits = Limits::default();
    if let Some(raw) = value {
        let n: usize = raw
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_N_VAR}={raw:?} is not a non-negative integer"))?;
        if n < 3 {
            return Err(format!("{MAX_N_VAR} must be at least 3"));
        }
        limits.count = n.min(Limits::MAX_COUNT);
    }
    Ok(limits)
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{rendered}");
                EXIT_OK
            };
        }
    };
    let limits = match limits_from_env(std::env::var(MAX_N_VAR).ok().as_deref()) {
        Ok(l) => l,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            return EXIT_USAGE;
        }
    };
    let mut buf = String::new();
    let result = dispatch(cli.command, &limits, &mut buf);
    let _ = out.write_all(buf.as_bytes());
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, limits: &Limits, out: &mut String) -> CmdResult {
    match command {
        Command::Validate { points, edges } => cmd_validate(&points, &edges, out),
        Command::Construct { points, complete, out: path } => {
            cmd_construct(&points, complete.as_deref(), path.as_deref(), out)
        }
        Command::Enumerate { points, kind, out: dir, json } => {
            cmd_enumerate(&points, kind, dir.as_deref(), json, limits, out)
        }
        Command::Count { points, json } => cmd_count(&points, json, limits, out),
        Command::Rigidity { points, edges, remove_hull_edge, json } => {
            cmd_rigidity(&points, &edges, remove_hull_edge, json, out)
        }
        Command::Degree { points, json } => cmd_degree(&points, json, limits, out),
        Command::Render { points, edges, out: path, shade, labels } => {
            cmd_render(&points, &edges, path.as_deref(), RenderOptions { shade_faces: shade, labels }, out)
        }
        Command::ConjectureSweep { n, trials, seed, json } => cmd_sweep(n, trials, seed, json, limits, out),
    }
}

fn cmd_validate(points: &Path, edges: &Path, out: &mut String) -> CmdResult {
    let ps = load_points(points)?;
    let raw = load_edges(edges)?;
    let edge_count = raw.len();
    let report = match GeomGraph::new(ps, raw) {
        Ok(g) => validate(&g),
        Err(e @ (Error::CrossingEdges(..) | Error::DuplicateEdge(_) | Error::SelfLoop(_) | Error::VertexOutOfRange(..))) => {
            ValidationReport {
                is_pseudo_triangulation: false,
                is_pointed: false,
                face_count: 0,
                edge_count,
                violations: vec![e.to_string()],
            }
        }
        Err(e) => return Err(e.into()),
    };
    out.push_str(&to_json(&report));
    Ok(if report.is_pointed && report.violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

#[derive(Serialize)]
struct ConstructSummary {
    n: usize,
    edges: usize,
    faces: usize,
    pointed: bool,
    method: &'static str,
    input_edges: usize,
}

fn cmd_construct(points: &Path, complete: Option<&Path>, path: Option<&Path>, out: &mut String) -> CmdResult {
    let ps = load_points(points)?;
    let (t, method, input_edges) = match complete {
        Some(edges) => {
            let g = GeomGraph::new(ps, load_edges(edges)?)?;
            let input = g.edge_count();
            (complete_to_ppt(&g)?, "complete", input)
        }
        None => (canonical_ppt(ps)?, "canonical", 0),
    };
    let summary = ConstructSummary {
        n: t.n(),
        edges: t.edge_count(),
        faces: t.faces().len(),
        pointed: t.is_pointed(),
        method,
        input_edges,
    };
    let compact = serde_json::to_string(&summary).expect("serializable");
    let edge_file = format!("# {compact}\n{}", write_edges(t.graph().edges()));
    match path {
        Some(p) => {
            write_file(p, &edge_file)?;
            out.push_str(&to_json(&summary));
        }
        None => out.push_str(&edge_file),
    }
    Ok(EXIT_OK)
}

fn key_string(edges: &[Edge]) -> String {
    edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_enumerate(
    points: &Path,
    kind: Kind,
    dir: Option<&Path>,
    json: bool,
    limits: &Limits,
    out: &mut String,
) -> CmdResult {
    let ps = load_points(points)?;
    let (prefix, keys) = match kind {
        Kind::Ppt => ("ppt", enumerate_ppt(ps, limits)?.iter().map(PseudoTriangulation::key).collect::<Vec<_>>()),
        Kind::Tri => ("tri", enumerate_triangulations(ps, limits)?.iter().map(GeomGraph::key).collect()),
    };
    let mut files = Vec::new();
    if let Some(dir) = dir {
        fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
        let mut index = String::new();
        for (i, key) in keys.iter().enumerate() {
            let name = format!("{prefix}_{i:05}.txt");
            write_file(&dir.join(&name), &write_edges(key))?;
            let _ = writeln!(index, "{name}\t{}", key_string(key));
            files.push(name);
        }
        write_file(&dir.join("index.txt"), &index)?;
    }
    if json {
        let objects: Vec<Vec<[usize; 2]>> = keys
            .iter()
            .map(|k| k.iter().map(|e| [e.lo, e.hi]).collect())
            .collect();
        out.push_str(&to_json(&json!({
            "kind": prefix,
            "count": keys.len(),
            "objects": objects,
            "files": files,
        })));
    } else {
        let _ = writeln!(out, "{} {prefix} objects", keys.len());
        for (i, key) in keys.iter().enumerate() {
            let _ = writeln!(out, "{i:5}  {}", key_string(key));
        }
    }
    Ok(EXIT_OK)
}

fn count_table(r: &CountReport) -> String {
    let verdict = if r.is_counterexample() { "COUNTEREXAMPLE" } else { "holds" };
    format!(
        "n                 {}\n#T                {}\n#PPT              {}\nconvex position   {}\n#T <= #PPT        {}\nequality          {}\nverdict           {verdict}\n",
        r.n, r.num_triangulations, r.num_ppt, r.convex_position, r.conjecture_holds, r.equality
    )
}

fn cmd_count(points: &Path, json: bool, limits: &Limits, out: &mut String) -> CmdResult {
    let report = check_conjecture(load_points(points)?, limits)?;
    out.push_str(&if json { to_json(&report) } else { count_table(&report) });
    Ok(if report.is_counterexample() { EXIT_FINDING } else { EXIT_OK })
}

#[derive(Serialize)]
struct RigidityOutput {
    rank: usize,
    dof: usize,
    expansive: Option<bool>,
    motion: Option<Vec<[String; 2]>>,
    violations: Vec<(usize, usize)>,
}

fn cmd_rigidity(
    points: &Path,
    edges: &Path,
    remove: Option<Vec<usize>>,
    json: bool,
    out: &mut String,
) -> CmdResult {
    let g = load_graph(points, edges)?;
    let report = match remove {
        None => RigidityOutput {
            rank: rank(&rigidity_matrix(&g)),
            dof: internal_dof(&g),
            expansive: None,
            motion: None,
            violations: Vec::new(),
        },
        Some(pair) => {
            let (i, j) = (pair[0], pair[1]);
            if i == j || i >= g.n() || j >= g.n() {
                return Err(usage(format!("{i} {j} is not an edge of the point set")));
            }
            let e = Edge::new(i, j);
            let t = PseudoTriangulation::pointed(g)?;
            let motion = mechanism_motion(&t, e)?;
            let cut = t.graph().remove_edge(e)?;
            let check = is_expansive(&cut, &motion);
            RigidityOutput {
                rank: rank(&rigidity_matrix(&cut)),
                dof: internal_dof(&cut),
                expansive: Some(check.expansive),
                motion: Some(motion.to_strings()),
                violations: check.violations,
            }
        }
    };
    if json {
        out.push_str(&to_json(&report));
    } else {
        let _ = writeln!(out, "rank       {}", report.rank);
        let _ = writeln!(out, "dof        {}", report.dof);
        if let (Some(expansive), Some(motion)) = (report.expansive, &report.motion) {
            let _ = writeln!(out, "expansive  {expansive}");
            for (v, [x, y]) in motion.iter().enumerate() {
                let _ = writeln!(out, "v{v:<4} ({x}, {y})");
            }
            for (a, b) in &report.violations {
                let _ = writeln!(out, "violation  {a}-{b}");
            }
        }
    }
    Ok(if report.expansive == Some(false) { EXIT_FINDING } else { EXIT_OK })
}

fn cmd_degree(points: &Path, json: bool, limits: &Limits, out: &mut String) -> CmdResult {
    let ps = load_points(points)?;
    let n = ps.len();
    let (degree, code) = match min_max_degree(ps, limits) {
        Ok(d) => (d, EXIT_OK),
        Err(Error::DegreeBoundExceeded(d)) => (d, EXIT_FINDING),
        Err(e) => return Err(e.into()),
    };
    if json {
        out.push_str(&to_json(&json!({ "n": n, "min_max_degree": degree, "within_bound": degree <= 5 })));
    } else {
        let _ = writeln!(out, "min max degree {degree} (n = {n})");
    }
    Ok(code)
}

fn cmd_render(points: &Path, edges: &Path, path: Option<&Path>, options: RenderOptions, out: &mut String) -> CmdResult {
    let svg = render_svg(&load_graph(points, edges)?, options);
    match path {
        Some(p) => write_file(p, &svg)?,
        None => out.push_str(&svg),
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct SweepOutput {
    n: usize,
    trials: usize,
    seed: u64,
    counterexamples: usize,
    equality_cases: usize,
    convex_cases: usize,
    reports: Vec<CountReport>,
}

/// Point sets for a sweep, drawn in trial order from one seeded stream.
pub fn sweep_point_sets(n: usize, trials: usize, seed: u64) -> Vec<PointSet> {
    let mut rng = rng_from_seed(seed);
    (0..trials).map(|_| random_point_set(n, &mut rng)).collect()
}

fn cmd_sweep(n: usize, trials: usize, seed: u64, json: bool, limits: &Limits, out: &mut String) -> CmdResult {
    if n < 3 {
        return Err(usage("--n must be at least 3"));
    }
    limits.check_count(n)?;
    let sets = sweep_point_sets(n, trials, seed);
    let reports = sets
        .into_par_iter()
        .map(|ps| check_conjecture(Arc::new(ps), limits))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = SweepOutput {
        n,
        trials,
        seed,
        counterexamples: reports.iter().filter(|r| r.is_counterexample()).count(),
        equality_cases: reports.iter().filter(|r| r.equality).count(),
        convex_cases: reports.iter().filter(|r| r.convex_position).count(),
        reports,
    };
    if json {
        out.push_str(&to_json(&summary));
    } else {
        let _ = writeln!(out, "trial      #T    #PPT  convex  equality  verdict");
        for (i, r) in summary.reports.iter().enumerate() {
            let verdict = if r.is_counterexample() { "COUNTEREXAMPLE" } else { "holds" };
            let _ = writeln!(
                out,
                "{i:5} {:7} {:7}  {:6}  {:8}  {verdict}",
                r.num_triangulations, r.num_ppt, r.convex_position, r.equality
            );
        }
        let _ = writeln!(
            out,
            "n = {n}, {trials} trials, seed {seed}: {} counterexamples, {} equalities, {} convex",
            summary.counterexamples, summary.equality_cases, summary.convex_cases
        );
    }
    Ok(if summary.counterexamples > 0 { EXIT_FINDING } else { EXIT_OK })
}


use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use coronae::coronal::{coronal_eval, coronal_general};
use coronae::errata::{errata, render_markdown};
use coronae::format::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use coronae::graph::{parse_named, NAMED_GRAPHS};
use coronae::isospectral::{
    build_family, check_all_alpha, check_at_alpha, nonisomorphism_evidence, FamilyRecipe, IsoMode, IsoReport, Side,
};
use coronae::linalg::{alpha_matrix, char_poly, sym_eigen_default, AlphaParam};
use coronae::products::{build_product, ProductOp};
use coronae::theorems;
use coronae::{Graph, Spectrum};
use serde::Serialize;
use serde_json::value::RawValue;

#[derive(Parser)]
#[command(name = "coronae", version, about = "A_alpha spectra of corona-type graph products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a product graph and write it to a file.
    Build {
        #[arg(value_parser = parse_op)]
        op: ProductOp,
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Eigenvalues of A_alpha, by direct eigensolve or by factorization.
    Spectrum(SpectrumArgs),
    /// Characteristic polynomial of A_alpha, ascending coefficients.
    Charpoly {
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_alpha)]
        alpha: f64,
    },
    /// Coronal of A_alpha as a rational function, optionally evaluated.
    Coronal {
        #[arg(long)]
        graph: String,
        #[arg(long, value_parser = parse_alpha)]
        alpha: f64,
        #[arg(long)]
        at: Option<f64>,
    },
    /// Compare A_alpha spectra; exits 1 when the graphs are not isospectral.
    Isospectral {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long, value_parser = parse_alpha, conflicts_with = "all_alpha")]
        alpha: Option<f64>,
        /// Check every alpha in [0, 1] (the default).
        #[arg(long)]
        all_alpha: bool,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Grow an isospectral family from a seed pair and write it to a directory.
    Family {
        #[arg(long)]
        g1: String,
        #[arg(long)]
        g2: String,
        #[arg(long)]
        partner: String,
        #[arg(long, value_parser = parse_op)]
        op: ProductOp,
        #[arg(long, value_parser = parse_side)]
        side: Side,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// Named graph constructions.
    Named {
        #[arg(long)]
        list: bool,
    },
    /// Print-correction ledger with witness evidence, as markdown.
    Errata {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, required_if_eq("method", "direct"))]
    graph: Option<String>,
    /// A single alpha or a grid `start:end:step`.
    #[arg(long)]
    alpha: String,
    #[arg(long, value_enum, default_value = "direct")]
    method: Method,
    #[arg(long, value_parser = parse_op, required_if_eq("method", "formula"))]
    op: Option<ProductOp>,
    #[arg(long, required_if_eq("method", "formula"))]
    g1: Option<String>,
    #[arg(long)]
    g2: Option<String>,
    /// Eigenvalues closer than this share one entry.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    emit: Emit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edges,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Formula,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Json,
    Csv,
}

fn parse_op(s: &str) -> Result<ProductOp, String> {
    s.parse().map_err(|e: coronae::Error| e.to_string())
}

fn parse_side(s: &str) -> Result<Side, String> {
    s.parse().map_err(|e: coronae::Error| e.to_string())
}

fn parse_alpha(s: &str) -> Result<f64, String> {
    let a: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    AlphaParam::new(a).map(AlphaParam::alpha).map_err(|e| e.to_string())
}

/// `a` or `start:end:step`, ascending.
fn parse_alpha_grid(s: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts[..] {
        [a] => Ok(vec![parse_alpha(a)?]),
        [start, end, step] => {
            let (start, end) = (parse_alpha(start)?, parse_alpha(end)?);
            let step: f64 = step.parse().map_err(|_| format!("`{step}` is not a number"))?;
            if !(step > 0.0) || end < start {
                return Err(format!("grid `{s}` is empty"));
            }
            let count = ((end - start) / step + 1e-9).floor() as usize;
            Ok((0..=count).map(|k| (start + k as f64 * step).min(1.0)).collect())
        }
        _ => Err(format!("`{s}` is neither an alpha nor a grid start:end:step")),
    }
}

struct Failure {
    code: u8,
    msg: String,
    /// Output closed early by a downstream reader; not an error.
    broken_pipe: bool,
}

impl<E: std::fmt::Display + std::fmt::Debug> From<E> for Failure {
    fn from(e: E) -> Self {
        let msg = e.to_string();
        let broken_pipe = format!("{e:?}").contains("BrokenPipe");
        Failure { code: 2, msg, broken_pipe }
    }
}

type CliResult<T> = Result<T, Failure>;

fn fail<T>(msg: String) -> CliResult<T> {
    Err(Failure { code: 2, msg, broken_pipe: false })
}

/// An existing file wins over a named graph of the same spelling.
fn load_graph(flag: &str, src: &str) -> CliResult<Graph> {
    let path = Path::new(src);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| format!("{flag} {src}: {e}"))?;
        let g = if has_g6_extension(path) {
            let line = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
            parse_graph6(line.trim().as_bytes())
        } else {
            parse_edge_list(&text)
        };
        return g.map_err(|e| format!("{flag} {src}: {e}").into());
    }
    parse_named(src).map_err(|e| format!("{flag}: `{src}` is not a readable file or a named graph: {e}").into())
}

fn has_g6_extension(p: &Path) -> bool {
    matches!(p.extension().and_then(|e| e.to_str()), Some("g6" | "graph6"))
}

fn check_writable_dir(dir: &Path) -> CliResult<()> {
    let dir = if dir.as_os_str().is_empty() { Path::new(".") } else { dir };
    if !dir.is_dir() {
        return fail(format!("output directory {} does not exist", dir.display()));
    }
    Ok(())
}

fn write_graph(g: &Graph, path: &Path, format: Format) -> CliResult<()> {
    let text = match format {
        Format::G6 => write_graph6(g) + "\n",
        Format::Edges => write_edge_list(g),
    };
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn number(x: f64) -> Box<RawValue> {
    let s = if x.is_finite() { format!("{:.16e}", x + 0.0) } else { "null".into() };
    RawValue::from_string(s).expect("float literal is valid JSON")
}

fn numbers(xs: &[f64]) -> Vec<Box<RawValue>> {
    xs.iter().map(|&x| number(x)).collect()
}

fn emit_json<T: Serialize>(value: &T) -> CliResult<()> {
    let mut out = std::io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct Eigenvalue {
    value: Box<RawValue>,
    multiplicity: usize,
}

#[derive(Serialize)]
struct SpectrumReport {
    n: usize,
    alpha: Box<RawValue>,
    eigenvalues: Vec<Eigenvalue>,
    trace_check: Box<RawValue>,
}

fn spectrum_report(spec: &Spectrum, alpha: f64, edges: usize) -> SpectrumReport {
    SpectrumReport {
        n: spec.len(),
        alpha: number(alpha),
        eigenvalues: spec
            .pairs()
            .iter()
            .map(|&(v, m)| Eigenvalue { value: number(v), multiplicity: m })
            .collect(),
        trace_check: number((spec.trace() - alpha * 2.0 * edges as f64).abs()),
    }
}

fn formula_spectrum(op: ProductOp, g1: &Graph, g2: &Graph, alpha: AlphaParam) -> coronae::Result<Spectrum> {
    let t = match op {
        ProductOp::Corona => theorems::corona_charpoly(g1, g2, alpha)?,
        ProductOp::EdgeCorona => theorems::edge_corona_charpoly(g1, g2, alpha)?,
        ProductOp::RGraph => theorems::edge_corona_charpoly(g1, &Graph::empty(1), alpha)?,
        ProductOp::RVertex => theorems::r_vertex_charpoly(g1, g2, alpha)?,
        ProductOp::REdge => theorems::r_edge_charpoly(g1, g2, alpha)?,
    };
    Ok(t.spectrum)
}

fn run_spectrum(args: SpectrumArgs) -> CliResult<()> {
    let alphas = parse_alpha_grid(&args.alpha).map_err(|e| format!("--alpha: {e}"))?;
    enum Source {
        Direct(Graph),
        Formula(ProductOp, Graph, Graph, usize),
    }
    let source = match args.method {
        Method::Direct => Source::Direct(load_graph("--graph", args.graph.as_deref().unwrap_or_default())?),
        Method::Formula => {
            let op = args.op.expect("required by clap");
            let g1 = load_graph("--g1", args.g1.as_deref().unwrap_or_default())?;
            let g2 = match (&args.g2, op.binary()) {
                (Some(src), _) => load_graph("--g2", src)?,
                (None, false) => Graph::empty(0),
                (None, true) => return fail(format!("--g2 is required for {op}")),
            };
            let edges = build_product(op, &g1, &g2)?.0.m();
            Source::Formula(op, g1, g2, edges)
        }
    };
    let mut reports = Vec::new();
    for &a in &alphas {
        let alpha = AlphaParam::new(a)?;
        let (spec, edges) = match &source {
            Source::Direct(g) => (sym_eigen_default(&alpha_matrix(g, alpha))?, g.m()),
            Source::Formula(op, g1, g2, edges) => (formula_spectrum(*op, g1, g2, alpha)?, *edges),
        };
        let spec = Spectrum::from_values(spec.flatten(), args.tol);
        reports.push(spectrum_report(&spec, a, edges));
    }
    match args.emit {
        Emit::Json if reports.len() == 1 => emit_json(&reports[0]),
        Emit::Json => emit_json(&reports),
        Emit::Csv => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "alpha,value,multiplicity")?;
            for r in &reports {
                for e in &r.eigenvalues {
                    writeln!(out, "{},{},{}", r.alpha.get(), e.value.get(), e.multiplicity)?;
                }
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct Evidence {
    alpha: Box<RawValue>,
    deviation: Box<RawValue>,
}

#[derive(Serialize)]
struct IsoJson {
    verdict: bool,
    mode: String,
    evidence: Vec<Evidence>,
    witness_alpha: Option<Box<RawValue>>,
    nonisomorphism: Option<String>,
}

fn iso_json(report: &IsoReport, g1: &Graph, g2: &Graph) -> IsoJson {
    IsoJson {
        verdict: report.verdict,
        mode: match report.mode {
            IsoMode::AtAlpha(a) => format!("at-alpha({a})"),
            IsoMode::AllAlpha => "all-alpha".into(),
        },
        evidence: report
            .evidence
            .iter()
            .map(|&(a, d)| Evidence { alpha: number(a), deviation: number(d) })
            .collect(),
        witness_alpha: report.witness_alpha.map(number),
        nonisomorphism: (g1.n() == g2.n())
            .then(|| nonisomorphism_evidence(g1, g2))
            .flatten()
            .map(|c| c.to_string()),
    }
}

#[derive(Serialize)]
struct FamilyEntry {
    depth: usize,
    files: [String; 2],
    order: usize,
    justification: String,
    verified_all_alpha: bool,
    nonisomorphism: Option<String>,
}

#[derive(Serialize)]
struct FamilyManifest {
    op: String,
    side: String,
    pairs: Vec<FamilyEntry>,
    halted: Option<String>,
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Build { op, g1, g2, output, format } => {
            check_writable_dir(output.parent().unwrap_or(Path::new(".")))?;
            let g1 = load_graph("--g1", &g1)?;
            let g2 = match (g2, op.binary()) {
                (Some(src), _) => load_graph("--g2", &src)?,
                (None, false) => Graph::empty(0),
                (None, true) => return fail(format!("--g2 is required for {op}")),
            };
            let (g, _) = build_product(op, &g1, &g2)?;
            let format = format.unwrap_or(if has_g6_extension(&output) || output.extension().is_none() {
                Format::G6
            } else {
                Format::Edges
            });
            write_graph(&g, &output, format)?;
            eprintln!("wrote {} ({} vertices, {} edges)", output.display(), g.n(), g.m());
            Ok(())
        }
        Command::Spectrum(args) => run_spectrum(args),
        Command::Charpoly { graph, alpha } => {
            let g = load_graph("--graph", &graph)?;
            let p = char_poly(&alpha_matrix(&g, AlphaParam::new(alpha)?))?;
            #[derive(Serialize)]
            struct Out {
                n: usize,
                alpha: Box<RawValue>,
                coefficients: Vec<Box<RawValue>>,
            }
            emit_json(&Out { n: g.n(), alpha: number(alpha), coefficients: numbers(p.coeffs()) })
        }
        Command::Coronal { graph, alpha, at } => {
            let g = load_graph("--graph", &graph)?;
            let c = coronal_general(&alpha_matrix(&g, AlphaParam::new(alpha)?))?;
            let reduced = c.rf.reduce();
            let value = at.map(|x| coronal_eval(&c, x)).transpose()?;
            #[derive(Serialize)]
            struct Out {
                alpha: Box<RawValue>,
                numerator: Vec<Box<RawValue>>,
                denominator: Vec<Box<RawValue>>,
                reduced_numerator: Vec<Box<RawValue>>,
                reduced_denominator: Vec<Box<RawValue>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                at: Option<Box<RawValue>>,
                #[serde(skip_serializing_if = "Option::is_none")]
                value: Option<Box<RawValue>>,
            }
            emit_json(&Out {
                alpha: number(alpha),
                numerator: numbers(c.rf.num().coeffs()),
                denominator: numbers(c.rf.den().coeffs()),
                reduced_numerator: numbers(reduced.num().coeffs()),
                reduced_denominator: numbers(reduced.den().coeffs()),
                at: at.map(number),
                value: value.map(number),
            })
        }
        Command::Isospectral { g1, g2, alpha, all_alpha: _, tol } => {
            let (h1, h2) = (load_graph("--g1", &g1)?, load_graph("--g2", &g2)?);
            let report = match alpha {
                Some(a) => check_at_alpha(&h1, &h2, AlphaParam::new(a)?, tol)?,
                None if h1.n() != h2.n() => IsoReport {
                    verdict: false,
                    mode: IsoMode::AllAlpha,
                    evidence: Vec::new(),
                    witness_alpha: None,
                },
                None => check_all_alpha(&h1, &h2, tol)?,
            };
            emit_json(&iso_json(&report, &h1, &h2))?;
            if report.verdict {
                Ok(())
            } else {
                Err(Failure { code: 1, msg: format!("{g1} and {g2} are not A_alpha-isospectral"), broken_pipe: false })
            }
        }
        Command::Family { g1, g2, partner, op, side, depth, output, format } => {
            fs::create_dir_all(&output).map_err(|e| format!("{}: {e}", output.display()))?;
            let recipe = FamilyRecipe {
                seed_pair: (load_graph("--g1", &g1)?, load_graph("--g2", &g2)?),
                partner: load_graph("--partner", &partner)?,
                op,
                side,
                depth,
            };
            let family = build_family(&recipe)?;
            let ext = match format {
                Format::G6 => "g6",
                Format::Edges => "edges",
            };
            let mut pairs = Vec::new();
            for p in &family.pairs {
                let (a, b) = &p.pair;
                let files = [format!("depth{}_a.{ext}", p.depth), format!("depth{}_b.{ext}", p.depth)];
                write_graph(a, &output.join(&files[0]), format)?;
                write_graph(b, &output.join(&files[1]), format)?;
                pairs.push(FamilyEntry {
                    depth: p.depth,
                    files,
                    order: a.n(),
                    justification: p.justification.clone(),
                    verified_all_alpha: check_all_alpha(a, b, 1e-7)?.verdict,
                    nonisomorphism: nonisomorphism_evidence(a, b).map(|c| c.to_string()),
                });
            }
            let manifest = FamilyManifest {
                op: op.to_string(),
                side: format!("{side:?}").to_lowercase(),
                pairs,
                halted: family.halted,
            };
            let path = output.join("family.json");
            fs::write(&path, serde_json::to_string_pretty(&manifest)? + "\n")
                .map_err(|e| format!("{}: {e}", path.display()))?;
            emit_json(&manifest)
        }
        Command::Named { list: _ } => {
            let mut out = std::io::stdout().lock();
            for (_, line) in NAMED_GRAPHS {
                writeln!(out, "{line}")?;
            }
            Ok(())
        }
        Command::Errata { output } => {
            let text = render_markdown(&errata())?;
            match output {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                    eprintln!("wrote {}", path.display());
                    Ok(())
                }
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.broken_pipe => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

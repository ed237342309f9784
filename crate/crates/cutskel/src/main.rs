//! Command-line front end. Exit codes: 0 success, 1 usage, 2 invalid input,
//! 3 cap exceeded, 4 a guaranteed property failed (which is a bug).

use clap::{Parser, Subcommand, ValueEnum};
use cutskel::analysis::{self, AnalysisError};
use cutskel::constructions::{self, ConstructionError};
use cutskel::graph::{Cut, Graph, GraphError};
use cutskel::skeleton::{self, SkeletonError, SkeletonGraph};
use cutskel::workbench::{self, GeneratorSpec, ReportOptions, WorkbenchError};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "cutskel",
    version,
    about = "1-skeletons of cut polytopes: adjacency, exact metrics, constructive bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Vertex cap for exhaustive work; defaults: 16 for skeletons, 24 for
    /// max-cut, 12 for certificate scans.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,

    /// Seed for generators and samplers.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write the payload to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    /// Threads for skeleton construction and diameter sweeps; 0 picks
    /// automatically.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph of the given class in the graph file format.
    Gen {
        /// tree | cactus | almost-tree-2 | cycle | complete |
        /// complete-bipartite | complete-multipartite
        class: String,
        /// Vertex count, for the sized classes.
        #[arg(short, long)]
        n: Option<usize>,
        /// Part sizes for multipartite classes, e.g. 3,4.
        #[arg(long, value_delimiter = ',')]
        parts: Option<Vec<usize>>,
    },
    /// Class tags, parts and block excess of a graph.
    Classify { graph: PathBuf },
    /// Decide whether two cuts are adjacent skeleton vertices.
    Adjacent {
        graph: PathBuf,
        /// Vertex list of the first cut, e.g. "1,3"; empty for the empty cut.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Objective-vector certificate that two cuts are adjacent.
    Certify {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Midpoint witness that two cuts are not adjacent.
    Witness {
        graph: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Build the full skeleton and export it as JSON.
    Skeleton { graph: PathBuf },
    /// Exact skeleton diameter.
    Diameter { graph: PathBuf },
    /// Exact (budget permitting) skeleton clique number.
    Clique {
        graph: PathBuf,
        /// Search-tree node expansions allowed.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Binary-representation coloring of all cuts.
    Color {
        graph: PathBuf,
        #[arg(long, value_enum)]
        scheme: Scheme,
    },
    /// Explicit clique family for the graph's class.
    CliqueConstruct {
        graph: PathBuf,
        /// Force a construction instead of picking by class.
        #[arg(long, value_enum)]
        family: Option<Family>,
    },
    /// Exhaustive max-cut value and witness cut.
    Maxcut { graph: PathBuf },
    /// Bounds, exact metrics, constructions and pass/fail verdicts.
    Report {
        graph: PathBuf,
        /// Skip skeleton construction and exact metrics.
        #[arg(long)]
        skip_exact: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Scheme {
    Brm,
    BrmStar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    HammingBall,
    Symmetric,
}

#[derive(Debug, thiserror::Error)]
enum AppError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Skeleton(#[from] SkeletonError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    Workbench(#[from] WorkbenchError),
    #[error("{0}")]
    Input(String),
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{failed} of {total} verdicts failed; see the report")]
    VerdictFailure { failed: usize, total: usize },
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Graph(_) | AppError::Input(_) | AppError::Io { .. } => 2,
            AppError::Construction(_) => 2,
            AppError::Skeleton(SkeletonError::LimitExceeded { .. }) => 3,
            AppError::Skeleton(_) => 2,
            AppError::Workbench(e) => workbench_code(e),
            AppError::Analysis(_) => 4,
            AppError::VerdictFailure { .. } => 4,
        }
    }
}

fn workbench_code(e: &WorkbenchError) -> u8 {
    match e {
        WorkbenchError::LimitExceeded { .. } => 3,
        WorkbenchError::Skeleton(SkeletonError::LimitExceeded { .. }) => 3,
        WorkbenchError::Analysis(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(1)
                }
            };
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, AppError> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        use std::io::Read;
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|source| AppError::Io {
                path: "stdin".into(),
                source,
            })?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|source| AppError::Io {
            path: path.display().to_string(),
            source,
        })?
    };
    Ok(Graph::parse(&text)?)
}

fn parse_cut(list: &str, n: usize) -> Result<Cut, AppError> {
    let trimmed = list.trim();
    if trimmed.is_empty() {
        return Ok(Cut::EMPTY);
    }
    let mut vertices = Vec::new();
    for token in trimmed.split(',') {
        let v: u32 = token
            .trim()
            .parse()
            .map_err(|_| AppError::Input(format!("bad vertex '{token}' in cut list")))?;
        vertices.push(v);
    }
    Cut::from_vertices(vertices.iter().copied(), n)
        .ok_or_else(|| AppError::Input(format!("cut lists vertices outside 0..{n}")))
}

fn emit(cli: &Cli, payload: String) -> Result<(), AppError> {
    match &cli.out {
        Some(path) => std::fs::write(path, payload.as_bytes()).map_err(|source| AppError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            println!("{payload}");
            Ok(())
        }
    }
}

fn workers(cli: &Cli) -> usize {
    cli.workers
}

fn skeleton_cap(cli: &Cli) -> usize {
    cli.cap.unwrap_or(skeleton::DEFAULT_SKELETON_CAP)
}

fn build(cli: &Cli, g: &Graph) -> Result<SkeletonGraph, AppError> {
    let w = if cli.workers > 0 {
        cli.workers
    } else {
        std::thread::available_parallelism()
            .map(|p| p.get())
            .unwrap_or(1)
            .min(8)
    };
    Ok(skeleton::build_skeleton_with_workers(
        g,
        skeleton_cap(cli),
        w,
    )?)
}

fn run(cli: &Cli) -> Result<(), AppError> {
    match &cli.command {
        Command::Gen { class, n, parts } => {
            let spec = spec_from_args(class, *n, parts.as_deref(), cli.seed)?;
            let g = workbench::generate(&spec)?;
            let payload = if cli.json {
                let edges: Vec<serde_json::Value> = g
                    .edges()
                    .iter()
                    .zip(g.weights())
                    .map(|(&(u, v), &w)| serde_json::json!([u, v, w]))
                    .collect();
                serde_json::json!({"spec": spec, "n": g.n(), "m": g.m(), "edges": edges})
                    .to_string()
            } else {
                g.to_text()
            };
            emit(cli, payload)
        }
        Command::Classify { graph } => {
            let g = read_graph(graph)?;
            let cls = g.classify();
            let payload = if cli.json {
                serde_json::to_string(&cls).unwrap()
            } else {
                let tags: Vec<String> = cls.tags.iter().map(|t| t.to_string()).collect();
                let mut text = format!(
                    "most-specific: {}\ntags: {}\nmax-block-excess: {}",
                    cls.most_specific,
                    tags.join(", "),
                    cls.max_block_excess
                );
                if let Some(parts) = cls.multipartite_parts() {
                    text.push_str(&format!("\nparts: {parts:?}"));
                }
                text
            };
            emit(cli, payload)
        }
        Command::Adjacent { graph, x, y } => {
            let g = read_graph(graph)?;
            let (x, y) = (parse_cut(x, g.n())?, parse_cut(y, g.n())?);
            let adjacent = skeleton::is_adjacent(&g, x, y)?;
            let payload = if cli.json {
                serde_json::json!({"x": x.mask(), "y": y.mask(), "adjacent": adjacent}).to_string()
            } else {
                format!("x: {x}\ny: {y}\nadjacent: {adjacent}")
            };
            emit(cli, payload)
        }
        Command::Certify { graph, x, y } => {
            let g = read_graph(graph)?;
            let (x, y) = (parse_cut(x, g.n())?, parse_cut(y, g.n())?);
            let cap = cli.cap.unwrap_or(skeleton::DEFAULT_VERIFY_CAP);
            let cert = skeleton::certify_adjacent(&g, x, y, cap)?;
            let payload = if cli.json {
                serde_json::json!({
                    "x": x.mask(),
                    "y": y.mask(),
                    "coeffs": cert.coeffs,
                    "maximizers": cert.maximizer_indices(),
                    "verified": cert.verified,
                })
                .to_string()
            } else {
                let coeffs: Vec<String> = cert.coeffs.iter().map(|c| format!("{c:+}")).collect();
                format!(
                    "coeffs: {}\nmaximizers: {} {}\nverified: {}",
                    coeffs.join(" "),
                    cert.maximizer_indices()[0],
                    cert.maximizer_indices()[1],
                    cert.verified
                )
            };
            emit(cli, payload)
        }
        Command::Witness { graph, x, y } => {
            let g = read_graph(graph)?;
            let (x, y) = (parse_cut(x, g.n())?, parse_cut(y, g.n())?);
            let w = skeleton::witness_nonadjacent(&g, x, y)?;
            let payload = if cli.json {
                serde_json::json!({
                    "x": x.mask(),
                    "y": y.mask(),
                    "separator": w.separator.mask(),
                    "vx": w.vx.bits(),
                    "vy": w.vy.bits(),
                    "vx_sep": w.vx_sep.bits(),
                    "vy_sep": w.vy_sep.bits(),
                })
                .to_string()
            } else {
                format!(
                    "separator: {}\nv(x):   {}\nv(y):   {}\nv(x^l): {}\nv(y^l): {}",
                    w.separator, w.vx, w.vy, w.vx_sep, w.vy_sep
                )
            };
            emit(cli, payload)
        }
        Command::Skeleton { graph } => {
            let g = read_graph(graph)?;
            let s = build(cli, &g)?;
            let payload = if cli.json {
                s.to_json()
            } else {
                let degrees: Vec<usize> = (0..s.node_count() as u32).map(|v| s.degree(v)).collect();
                format!(
                    "nodes: {}\nedges: {}\ndegree: {}..{}",
                    s.node_count(),
                    s.edge_count(),
                    degrees.iter().min().unwrap(),
                    degrees.iter().max().unwrap()
                )
            };
            emit(cli, payload)
        }
        Command::Diameter { graph } => {
            let g = read_graph(graph)?;
            let s = build(cli, &g)?;
            let d =
                analysis::diameter_with_workers(&s, if cli.workers > 0 { cli.workers } else { 8 })?;
            let payload = if cli.json {
                serde_json::json!({"nodes": s.node_count(), "diameter": d}).to_string()
            } else {
                format!("diameter: {d}")
            };
            emit(cli, payload)
        }
        Command::Clique { graph, budget } => {
            let g = read_graph(graph)?;
            let s = build(cli, &g)?;
            let result =
                analysis::clique_number(&s, budget.unwrap_or(analysis::DEFAULT_CLIQUE_BUDGET));
            let payload = if cli.json {
                serde_json::to_string(&result).unwrap()
            } else {
                format!(
                    "clique-number: {}{}\nwitness: {:?}",
                    result.size,
                    if result.exact { "" } else { " (lower bound)" },
                    result.witness
                )
            };
            emit(cli, payload)
        }
        Command::Color { graph, scheme } => {
            let g = read_graph(graph)?;
            // Colors depend only on the graph; the skeleton is built (within
            // cap) so the width check has a live counterpart.
            let s = build(cli, &g)?;
            let (name, coloring) = match scheme {
                Scheme::Brm => ("brm", constructions::brm_coloring(&g, &s)?),
                Scheme::BrmStar => ("brm-star", constructions::brm_star_coloring(&g, &s)?),
            };
            let payload = if cli.json {
                serde_json::json!({
                    "scheme": name,
                    "width": coloring.width,
                    "colors_used": coloring.color_count(),
                    "colors": coloring.colors,
                })
                .to_string()
            } else {
                format!(
                    "scheme: {name}\nwidth: {}\ncolors-used: {}",
                    coloring.width,
                    coloring.color_count()
                )
            };
            emit(cli, payload)
        }
        Command::CliqueConstruct { graph, family } => {
            let g = read_graph(graph)?;
            let cls = g.classify();
            let fam = match family {
                Some(Family::HammingBall) => constructions::hamming_ball_clique(&g)?,
                Some(Family::Symmetric) => constructions::symmetric_cut_clique(&g)?,
                None if cls.is_cycle() => constructions::hamming_ball_clique(&g)?,
                None if cls.is_multipartite() => constructions::symmetric_cut_clique(&g)?,
                None => {
                    return Err(AppError::Input(format!(
                        "no clique construction for class {}; need a cycle or complete multipartite graph",
                        cls.most_specific
                    )))
                }
            };
            let payload = if cli.json {
                serde_json::json!({
                    "construction": fam.construction,
                    "size": fam.len(),
                    "cuts": fam.cuts,
                })
                .to_string()
            } else {
                let cuts: Vec<String> = fam.cuts.iter().map(|c| c.to_string()).collect();
                format!(
                    "construction: {}\nsize: {}\ncuts: {}",
                    fam.construction,
                    fam.len(),
                    cuts.join(" ")
                )
            };
            emit(cli, payload)
        }
        Command::Maxcut { graph } => {
            let g = read_graph(graph)?;
            let cap = cli.cap.unwrap_or(workbench::DEFAULT_MAXCUT_CAP);
            let result = workbench::maxcut_bruteforce(&g, cap)?;
            let members: Vec<u32> = result.cut.members().collect();
            let payload = if cli.json {
                serde_json::json!({
                    "weight": result.weight,
                    "cut": result.cut.mask(),
                    "members": members,
                })
                .to_string()
            } else {
                format!("weight: {}\ncut: {}", result.weight, result.cut)
            };
            emit(cli, payload)
        }
        Command::Report {
            graph,
            skip_exact,
            budget,
        } => {
            let g = read_graph(graph)?;
            let opts = ReportOptions {
                cap: skeleton_cap(cli),
                workers: workers(cli),
                budget: budget.unwrap_or(analysis::DEFAULT_CLIQUE_BUDGET),
                skip_exact: *skip_exact,
            };
            let r = workbench::report(&g, &opts)?;
            let payload = if cli.json {
                serde_json::to_string(&r).unwrap()
            } else {
                let mut lines = vec![
                    format!("class: {}", r.classification.most_specific),
                    format!(
                        "diameter bounds: [{}, {}]   clique bounds: [{}, {}]",
                        r.bounds.diameter.lo,
                        r.bounds.diameter.hi,
                        r.bounds.clique.lo,
                        r.bounds.clique.hi
                    ),
                ];
                if let Some(m) = &r.metrics {
                    lines.push(format!(
                        "diameter: {}   clique: {}{}",
                        m["diameter"],
                        m["clique_number"],
                        if m["clique_exact"] == true {
                            ""
                        } else {
                            " (lower bound)"
                        }
                    ));
                }
                for v in &r.verdicts {
                    lines.push(format!(
                        "{} {} ({})",
                        if v.pass { "pass" } else { "FAIL" },
                        v.check,
                        v.detail
                    ));
                }
                lines.join("\n")
            };
            emit(cli, payload)?;
            if !r.pass {
                return Err(AppError::VerdictFailure {
                    failed: r.verdicts.iter().filter(|v| !v.pass).count(),
                    total: r.verdicts.len(),
                });
            }
            Ok(())
        }
    }
}

fn spec_from_args(
    class: &str,
    n: Option<usize>,
    parts: Option<&[usize]>,
    seed: u64,
) -> Result<GeneratorSpec, AppError> {
    let need_n = || n.ok_or_else(|| AppError::Input(format!("class '{class}' needs -n")));
    let spec = match class {
        "tree" => GeneratorSpec::Tree { n: need_n()?, seed },
        "cactus" => GeneratorSpec::Cactus { n: need_n()?, seed },
        "almost-tree-2" => GeneratorSpec::AlmostTree2 { n: need_n()?, seed },
        "cycle" => GeneratorSpec::Cycle { n: need_n()? },
        "complete" => GeneratorSpec::Complete { n: need_n()? },
        "complete-bipartite" => {
            let parts =
                parts.ok_or_else(|| AppError::Input("complete-bipartite needs --parts a,b".into()))?;
            if parts.len() != 2 {
                return Err(AppError::Input("complete-bipartite needs exactly 2 parts".into()));
            }
            GeneratorSpec::CompleteBipartite {
                parts: [parts[0], parts[1]],
            }
        }
        "complete-multipartite" => {
            let parts = parts
                .ok_or_else(|| AppError::Input("complete-multipartite needs --parts".into()))?;
            GeneratorSpec::CompleteMultipartite {
                parts: parts.to_vec(),
            }
        }
        other => {
            return Err(AppError::Input(format!(
                "unknown class '{other}'; expected tree, cactus, almost-tree-2, cycle, complete, complete-bipartite or complete-multipartite"
            )))
        }
    };
    Ok(spec)
}

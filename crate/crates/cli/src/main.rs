use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Duration;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use raag_paut::auto::Automorphism;
use raag_paut::corpus::{generate_corpus, CorpusSpec};
use raag_paut::gadget::{self, RelationReport};
use raag_paut::graph::{Graph, VertexSet};
use raag_paut::io::{self as gio, GraphFormat};
use raag_paut::presentation::{self, ExportFormat};
use raag_paut::verify::{self, CheckId, VerificationReport};
use raag_paut::word::RaagWord;
use raag_paut::{hat, rho, sil, IntMatrix};

#[derive(Parser)]
#[command(name = "raag-paut", version, about = "Pure symmetric automorphisms of right-angled Artin groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Cas,
}

#[derive(Args)]
struct GraphArg {
    /// Graph file (`.json` or `.dot`), or `-` for JSON on stdin.
    graph: String,
}

#[derive(Args, Clone)]
struct Budget {
    /// Per-check time budget.
    #[arg(long, default_value_t = 60)]
    timeout_secs: u64,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Command {
    /// List SIL pairs with their shared components.
    SilPairs(GraphArg),
    /// Print slk(v) and sst(v).
    Slink {
        #[command(flatten)]
        graph: GraphArg,
        vertex: String,
    },
    /// Koban–Piggott presentation of PAut(A_Γ).
    Presentation(GraphArg),
    /// Arrow diagram on Λ.
    ArrowDiagram {
        #[command(flatten)]
        graph: GraphArg,
        /// Write the diagram as DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Images of the generators under ρ.
    Rho(GraphArg),
    /// Image of a word in Λ-vertices under ρ.
    RhoEval {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        word: String,
    },
    VerifyRho {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        budget: Budget,
    },
    /// Γ̂ as JSON plus the φ table.
    HatGamma(GraphArg),
    VerifyHat {
        #[command(flatten)]
        graph: GraphArg,
        #[command(flatten)]
        budget: Budget,
    },
    #[command(subcommand)]
    Gadget(GadgetCommand),
    /// Run every check, or those named by `--checks`, on each graph.
    Verify {
        #[arg(required = true)]
        graphs: Vec<String>,
        /// Comma-separated check names.
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Generate a graph corpus; with `--verify`, check it instead of printing it.
    Corpus {
        #[arg(long, default_value_t = 3)]
        min_vertices: usize,
        #[arg(long, default_value_t = 5)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        connected: bool,
        /// Write one JSON file per graph here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
        #[arg(long, value_delimiter = ',')]
        checks: Vec<String>,
        #[command(flatten)]
        budget: Budget,
    },
    /// Apply an automorphism expression to a word.
    Apply {
        #[command(flatten)]
        graph: GraphArg,
        /// e.g. `c[1|{3}] * c[2|{1,3}]^-1` or `inn[1 2]`.
        #[arg(long)]
        auto: String,
        #[arg(long)]
        word: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Subcommand)]
enum GadgetCommand {
    /// Embed the gadget group through a SIL pair.
    Embed {
        #[command(flatten)]
        graph: GraphArg,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
        /// Shared component, e.g. `{3}` or `3,4`.
        #[arg(long = "C")]
        c: String,
        #[arg(long)]
        w: String,
    },
    /// Kronecker matrix representation; matrices are JSON row lists.
    Matrix {
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long = "D")]
        d: String,
        #[arg(long = "M")]
        m: String,
    },
}

fn init_logging() {
    let level = match std::env::var("RAAG_PAUT_LOG").as_deref() {
        Ok("debug") => log::LevelFilter::Debug,
        Ok("info") => log::LevelFilter::Info,
        _ => log::LevelFilter::Warn,
    };
    let level = if std::env::var("RAAG_PAUT_LOG").as_deref() == Ok("quiet") { log::LevelFilter::Off } else { level };
    env_logger::Builder::new().filter_level(level).target(env_logger::Target::Stderr).init();
}

fn load_graph(arg: &GraphArg) -> Result<Arc<Graph>> {
    let (text, format) = if arg.graph == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        (s, GraphFormat::Json)
    } else {
        let s = fs::read_to_string(&arg.graph).with_context(|| format!("reading {}", arg.graph))?;
        (s, GraphFormat::from_path(&arg.graph))
    };
    let g = gio::parse_graph(&text, format).with_context(|| format!("parsing {}", arg.graph))?;
    log::info!("{}: {} vertices, {} edges", arg.graph, g.len(), g.edge_count());
    Ok(Arc::new(g))
}

fn parse_set(g: &Graph, text: &str) -> Result<VertexSet> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    let mut s = VertexSet::new();
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        s.insert(g.vertex(tok)?);
    }
    Ok(s)
}

fn parse_matrix(text: &str) -> Result<IntMatrix> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text).with_context(|| format!("matrix `{text}`"))?;
    let rows = rows.into_iter().map(|r| r.into_iter().map(Into::into).collect()).collect();
    Ok(IntMatrix::from_rows(rows)?)
}

fn parse_checks(names: &[String], default: &[CheckId]) -> Result<Vec<CheckId>> {
    if names.is_empty() {
        return Ok(default.to_vec());
    }
    names.iter().map(|n| CheckId::from_name(n).ok_or_else(|| anyhow!("unknown check `{n}`"))).collect()
}

fn print_report(report: &RelationReport, format: Format) -> bool {
    if format == Format::Json {
        let rows: Vec<_> = report.iter().map(|(r, ok)| json!({"relator": r, "pass": ok})).collect();
        println!("{}", serde_json::to_string_pretty(&rows).expect("serializable"));
    } else {
        for (r, ok) in report {
            println!("{r} {}", if *ok { "pass" } else { "FAIL" });
        }
    }
    gadget::all_pass(report)
}

fn print_reports(reports: &[VerificationReport], format: Format) -> bool {
    if format == Format::Json {
        println!("{}", serde_json::to_string_pretty(reports).expect("serializable"));
    } else {
        let mut failed = 0;
        for r in reports {
            print!("{}", r.render());
            failed += r.failed();
        }
        println!("{} graphs, {} failed checks", reports.len(), failed);
    }
    reports.iter().all(VerificationReport::passed)
}

fn verify_one(arg: &GraphArg, checks: &[CheckId], budget: &Budget, format: Format) -> Result<bool> {
    let g = load_graph(arg)?;
    let report = verify::run_verify(&g, &arg.graph, checks, Duration::from_secs(budget.timeout_secs));
    Ok(print_reports(&[report], format))
}

fn hat_json(g: &Arc<Graph>) -> Result<serde_json::Value> {
    let h = hat::hat_graph(g)?;
    let phi: Vec<_> = h
        .vertices
        .iter()
        .map(|hv| {
            let parts = hat::phi_components(g, hv)?;
            let factors: Vec<String> =
                parts.iter().map(|d| format!("c[{}|{}]", g.label(hv.vertex), g.display_set(d))).collect();
            Ok(json!({"vertex": hv.name(g), "phi": factors.join(" ")}))
        })
        .collect::<raag_paut::Result<_>>()?;
    Ok(json!({
        "graph": gio::graph_to_json_value(&h.graph),
        "quotient_rank": h.quotient_rank(),
        "phi": phi,
    }))
}

/// Returns whether every check passed.
fn run(cli: Cli) -> Result<bool> {
    let format = cli.format;
    match cli.command {
        Command::SilPairs(arg) => {
            let g = load_graph(&arg)?;
            let pairs = sil::sil_pairs(&g)?;
            if format == Format::Json {
                let rows: Vec<_> = pairs
                    .iter()
                    .map(|(u, v, cs)| {
                        json!({"u": g.label(*u), "v": g.label(*v),
                               "shared": cs.iter().map(|c| g.display_set(c)).collect::<Vec<_>>()})
                    })
                    .collect();
                println!("{}", serde_json::to_string_pretty(&rows)?);
            } else {
                for (u, v, cs) in &pairs {
                    let shared: Vec<String> = cs.iter().map(|c| g.display_set(c)).collect();
                    println!("{} {}: {}", g.label(*u), g.label(*v), shared.join(" "));
                }
            }
        }
        Command::Slink { graph, vertex } => {
            let g = load_graph(&graph)?;
            let v = g.vertex(&vertex)?;
            let (slk, sst) = (sil::slink(&g, v)?, sil::sst(&g, v)?);
            if format == Format::Json {
                println!("{}", json!({"slk": g.display_set(&slk), "sst": g.display_set(&sst)}));
            } else {
                println!("slk({vertex}) = {}", g.display_set(&slk));
                println!("sst({vertex}) = {}", g.display_set(&sst));
            }
        }
        Command::Presentation(arg) => {
            let g = load_graph(&arg)?;
            let export = if format == Format::Cas { ExportFormat::Cas } else { ExportFormat::Plain };
            print!("{}", presentation::export_presentation(&presentation::kp_presentation(&g), export));
        }
        Command::ArrowDiagram { graph, dot } => {
            let g = load_graph(&graph)?;
            let d = presentation::arrow_diagram(&g)?;
            if let Some(path) = dot {
                fs::write(&path, gio::arrow_diagram_dot(&d)).with_context(|| format!("writing {}", path.display()))?;
            }
            println!(
                "{} vertices, {} edges, {} arrows, {} dual pairs",
                d.lambda.len(),
                d.lambda.edge_count(),
                d.arrows.len(),
                d.pair_count()
            );
            for (k, a) in d.arrows.iter().enumerate() {
                println!("{} -> {{{}, {}}} dual {}", d.name(a.initial), d.name(a.edge.0), d.name(a.edge.1), d.dual[k]);
            }
        }
        Command::Rho(arg) => {
            let g = load_graph(&arg)?;
            print!("{}", rho::build_rho(&g)?);
        }
        Command::RhoEval { graph, word } => {
            let g = load_graph(&graph)?;
            let m = rho::build_rho(&g)?;
            let names: Vec<String> = (0..m.generator_count()).map(|i| m.diagram.name(i).to_string()).collect();
            let letters = gio::parse_word_expr(&word, |t| {
                names.iter().position(|n| n == t).ok_or_else(|| raag_paut::Error::UnknownGenerator(t.into()))
            })?;
            println!("{}", m.eval(&letters)?.render(&m.delta));
        }
        Command::VerifyRho { graph, budget } => return verify_one(&graph, &CheckId::RHO, &budget, format),
        Command::HatGamma(arg) => {
            let g = load_graph(&arg)?;
            println!("{}", serde_json::to_string_pretty(&hat_json(&g)?)?);
        }
        Command::VerifyHat { graph, budget } => return verify_one(&graph, &CheckId::HAT, &budget, format),
        Command::Gadget(GadgetCommand::Embed { graph, u, v, c, w }) => {
            let g = load_graph(&graph)?;
            let c = parse_set(&g, &c)?;
            let e = gadget::gadget_embedding(&g, g.vertex(&u)?, g.vertex(&v)?, &c, g.vertex(&w)?)?;
            return Ok(print_report(&e.report, format));
        }
        Command::Gadget(GadgetCommand::Matrix { a, b, d, m }) => {
            let r = gadget::kronecker_rep(&parse_matrix(&a)?, &parse_matrix(&b)?, &parse_matrix(&d)?, &parse_matrix(&m)?)?;
            if format == Format::Json {
                let images: Vec<_> = gadget::NAMES
                    .iter()
                    .zip(&r.images)
                    .map(|(n, x)| (n.to_string(), json!(x.to_rows().iter().map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>())))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&serde_json::Map::from_iter(images))?);
            } else {
                for (n, x) in gadget::NAMES.iter().zip(&r.images) {
                    println!("{n} -> {x}");
                }
            }
            return Ok(print_report(&r.report, format));
        }
        Command::Verify { graphs, checks, budget } => {
            let checks = parse_checks(&checks, &CheckId::ALL)?;
            let loaded = graphs
                .iter()
                .map(|p| Ok((p.clone(), load_graph(&GraphArg { graph: p.clone() })?)))
                .collect::<Result<Vec<_>>>()?;
            let reports =
                verify::run_verify_all(&loaded, &checks, Duration::from_secs(budget.timeout_secs), budget.jobs)?;
            return Ok(print_reports(&reports, format));
        }
        Command::Corpus { min_vertices, max_vertices, mode, count, seed, connected, out_dir, verify, checks, budget } => {
            let spec = match mode {
                ModeArg::Exhaustive => CorpusSpec::exhaustive(min_vertices, max_vertices, connected),
                ModeArg::Random => CorpusSpec::random(min_vertices, max_vertices, count, seed, connected),
            };
            let graphs = generate_corpus(&spec)?;
            log::info!("corpus of {} graphs", graphs.len());
            let named: Vec<(String, Arc<Graph>)> =
                graphs.into_iter().enumerate().map(|(i, g)| (format!("g{i:05}"), Arc::new(g))).collect();
            if let Some(dir) = &out_dir {
                write_corpus(dir, &named)?;
            }
            if verify {
                let checks = parse_checks(&checks, &CheckId::ALL)?;
                let reports =
                    verify::run_verify_all(&named, &checks, Duration::from_secs(budget.timeout_secs), budget.jobs)?;
                return Ok(print_reports(&reports, format));
            }
            if out_dir.is_none() {
                for (id, g) in &named {
                    println!("{id} {}", serde_json::to_string(&gio::graph_to_json_value(g))?);
                }
            }
        }
        Command::Apply { graph, auto, word } => {
            let g = load_graph(&graph)?;
            let a = Automorphism::from_expression(&g, &gio::parse_automorphism_expr(&g, &auto)?)?;
            let w = RaagWord::parse(g.clone(), &word)?;
            println!("{}", a.apply(&w)?);
        }
    }
    Ok(true)
}

fn write_corpus(dir: &Path, graphs: &[(String, Arc<Graph>)]) -> Result<()> {
    fs::create_dir_all(dir)?;
    for (id, g) in graphs {
        fs::write(dir.join(format!("{id}.json")), gio::graph_to_json(g))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    init_logging();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end: exact metric dimension, basis enumeration,
//! theorem audits, family constructions and n0 searches with stable
//! tab-separated output.
//!
//! Exit status: 0 = success / all checks pass; 1 = a check failed or a
//! uniqueness claim was falsified (one machine-readable line prefixed
//! "FAIL\t" is printed); 2 = usage or input error.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use unidim_core::constructions::{
    self, construct_3k, construct_5k_half, construct_k_plus_3k, construct_order9, find_base6,
    ConstructedGraph,
};
use unidim_core::verifier::{audit_graph, search_n0};
use unidim_core::{diameter, emit_graph6, girth, parse_graph6, Graph};

#[derive(Parser)]
#[command(
    name = "unidim",
    about = "Exact metric dimension and unique metric bases of small graphs",
    long_about = None,
    after_help = "Record columns are tab-separated with a fixed order; lines starting \
with '#' are comments. Exit status: 0 success, 1 check failed (one FAIL line \
printed), 2 usage or input error."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; standard input when omitted.
    file: Option<String>,
    /// Input format.
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Inline edge list, '/' separating lines, e.g. "2 1 / 0 1".
    #[arg(long, conflicts_with = "file")]
    inline: Option<String>,
}

#[derive(Args)]
struct JobsArg {
    /// Worker threads for stream subcommands; defaults to UNIDIM_JOBS or
    /// all cores.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Order, diameter, girth and metric dimension of each input graph.
    Dim(InputArgs),
    /// Metric dimension, every metric basis, uniqueness and randomly-k flag.
    Bases(InputArgs),
    /// Run every theorem check on each input graph; summary block follows.
    Audit {
        #[command(flatten)]
        input: InputArgs,
        /// Stop at the first failing graph.
        #[arg(long)]
        fail_fast: bool,
        #[command(flatten)]
        jobs: JobsArg,
    },
    /// Emit a member of one of the uniquely k-dimensional families.
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        /// Family parameter k, where applicable.
        #[arg(long)]
        k: Option<usize>,
        /// Output format.
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Format,
    },
    /// Per-order table of uniquely k-dimensional graph counts.
    #[command(name = "search-n0")]
    SearchN0 {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_n: usize,
        /// One representative per isomorphism class instead of all labeled
        /// graphs.
        #[arg(long)]
        dedup: bool,
        /// Skip orders below 2k+1 (forced empty by the half-order bound).
        #[arg(long)]
        skip_forced: bool,
        #[command(flatten)]
        jobs: JobsArg,
    },
    /// Attach a pendant path to a uniquely dimensional graph and re-verify.
    Extend {
        #[command(flatten)]
        input: InputArgs,
        /// Number of new path vertices (at least 1).
        #[arg(long)]
        m: usize,
        /// Basis vertex to anchor the far-vertex choice; lowest basis
        /// vertex when omitted.
        #[arg(long)]
        u: Option<usize>,
        /// Output format for the extended graph.
        #[arg(long, value_enum, default_value = "graph6")]
        emit: Format,
    },
    /// Transcode between graph6 and edge-list formats.
    Convert {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        to: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    #[value(name = "3k")]
    ThreeK,
    #[value(name = "kplus3k")]
    KPlus3K,
    Order9,
    Base6,
    Fivehalves,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(input: &InputArgs) -> Result<Vec<Graph>, String> {
    let (text, format) = if let Some(inline) = &input.inline {
        (inline.replace('/', "\n"), Format::Edgelist)
    } else {
        let text = match &input.file {
            Some(path) => fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?,
            None => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| e.to_string())?;
                buf
            }
        };
        (text, input.format)
    };
    match format {
        Format::Edgelist => Ok(vec![Graph::parse_edge_list(&text).map_err(|e| e.to_string())?]),
        Format::Graph6 => {
            let mut graphs = Vec::new();
            for line in text.lines() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                graphs.push(parse_graph6(line).map_err(|e| format!("{line:?}: {e}"))?);
            }
            if graphs.is_empty() {
                return Err("no graphs in input".into());
            }
            Ok(graphs)
        }
    }
}

fn install_pool(jobs: &JobsArg) -> Result<(), String> {
    let jobs = jobs.jobs.or_else(|| {
        std::env::var("UNIDIM_JOBS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(jobs) = jobs {
        if jobs == 0 {
            return Err("worker count must be at least 1".into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    Ok(())
}

fn emit_graph(g: &Graph, format: Format) {
    match format {
        Format::Graph6 => println!("{}", emit_graph6(g)),
        Format::Edgelist => print!("{}", g.to_edge_list()),
    }
}

fn print_construction(c: &ConstructedGraph, format: Format) {
    let basis: Vec<String> = c.designated_basis.iter().map(|v| v.to_string()).collect();
    println!(
        "# family={} order={} dim={} basis={}",
        c.family,
        c.predicted.order,
        c.predicted.dimension,
        basis.join(",")
    );
    emit_graph(&c.graph, format);
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Dim(input) => {
            println!("# n\tdiameter\tgirth\tdimension");
            for g in read_input(&input)? {
                let d = diameter(&g).map_err(|e| e.to_string())?;
                let girth = girth(&g).map_err(|e| e.to_string())?;
                let k = unidim_core::metric_dimension(&g).map_err(|e| e.to_string())?;
                println!("{}\t{}\t{}\t{}", g.n(), d, girth, k);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bases(input) => {
            for g in read_input(&input)? {
                println!("# graph {}", emit_graph6(&g));
                let report = unidim_core::all_bases(&g).map_err(|e| e.to_string())?;
                for b in &report.bases {
                    println!("basis\t{b}");
                }
                let randomly = match report.randomly_k {
                    Some(flag) => flag.to_string(),
                    None => "not_evaluated".into(),
                };
                println!(
                    "dimension={}\tbases={}\tunique={}\trandomly_k={}",
                    report.dimension,
                    report.bases.len(),
                    report.unique,
                    randomly
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit {
            input,
            fail_fast,
            jobs,
        } => {
            install_pool(&jobs)?;
            let graphs = read_input(&input)?;
            println!("# graph6\tn\tk\td\tg\tunique\tdim_vs_diameter\torder_bound\tunique_no_twins\tunique_diameter_bound\tunique_girth_bound\tunique_half_order");
            let mut total = 0usize;
            let mut failed = 0usize;
            let mut errors = 0usize;
            let mut first_fail: Option<String> = None;
            for g in &graphs {
                total += 1;
                match audit_graph(g) {
                    Ok(report) => {
                        let codes: Vec<&str> =
                            report.checks.iter().map(|c| c.verdict.code()).collect();
                        println!(
                            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                            emit_graph6(g),
                            report.profile.n,
                            report.profile.dimension,
                            report.profile.diameter,
                            report.profile.girth,
                            report.profile.unique,
                            codes.join("\t")
                        );
                        if let Some(rec) = report.first_failure() {
                            failed += 1;
                            if first_fail.is_none() {
                                let witness = match &rec.verdict {
                                    unidim_core::verifier::Verdict::Fail { witness } => witness.clone(),
                                    _ => String::new(),
                                };
                                first_fail = Some(format!(
                                    "FAIL\t{}\t{}\t{}",
                                    emit_graph6(g),
                                    rec.id.name(),
                                    witness
                                ));
                            }
                            if fail_fast {
                                break;
                            }
                        }
                    }
                    Err(e) => {
                        errors += 1;
                        println!("{}\terror\t{}", emit_graph6(g), e);
                        if fail_fast {
                            break;
                        }
                    }
                }
            }
            if let Some(line) = &first_fail {
                println!("{line}");
            }
            println!("# summary graphs={total} failed={failed} errors={errors}");
            if failed > 0 || errors > 0 {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Construct { family, k, emit } => {
            let need_k = |k: Option<usize>| k.ok_or("this family needs --k".to_string());
            let c = match family {
                Family::ThreeK => construct_3k(need_k(k)?),
                Family::KPlus3K => construct_k_plus_3k(need_k(k)?),
                Family::Order9 => Ok(construct_order9()),
                Family::Base6 => find_base6(),
                Family::Fivehalves => construct_5k_half(need_k(k)?),
            }
            .map_err(|e| e.to_string())?;
            print_construction(&c, emit);
            Ok(ExitCode::SUCCESS)
        }
        Command::SearchN0 {
            k,
            max_n,
            dedup,
            skip_forced,
            jobs,
        } => {
            install_pool(&jobs)?;
            let res = search_n0(k, max_n, dedup, skip_forced).map_err(|e| e.to_string())?;
            let mode = if dedup { "classes" } else { "labeled" };
            println!("# k={k} mode={mode}");
            println!("# order\tconnected\thits\texample");
            for scan in &res.scans {
                if scan.skipped {
                    println!("{}\tskipped\t-\t-", scan.order);
                } else {
                    println!(
                        "{}\t{}\t{}\t{}",
                        scan.order,
                        scan.connected,
                        scan.hits,
                        scan.example.as_deref().unwrap_or("-")
                    );
                }
            }
            match res.n0 {
                Some(n0) => println!("n0={n0}"),
                None => println!("n0=not_found<={max_n}"),
            }
            if res.contradicts_half_order_bound() {
                println!(
                    "FAIL\tn0={}\tcontradicts half-order bound 2k < n",
                    res.n0.unwrap()
                );
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Extend { input, m, u, emit } => {
            if m == 0 {
                return Err("--m must be at least 1".into());
            }
            let graphs = read_input(&input)?;
            if graphs.len() != 1 {
                return Err("extend expects exactly one input graph".into());
            }
            let g = graphs.into_iter().next().unwrap();
            let report = unidim_core::all_bases(&g).map_err(|e| e.to_string())?;
            if !report.unique {
                println!(
                    "FAIL\tinput\tnot uniquely dimensional ({} bases)",
                    report.bases.len()
                );
                return Ok(ExitCode::from(1));
            }
            let basis = report.bases[0];
            let u = match u {
                Some(u) => {
                    if !basis.contains(u) {
                        return Err(format!("--u {u} is not in the basis {basis}"));
                    }
                    u
                }
                None => basis.min().expect("nonempty basis"),
            };
            let c = ConstructedGraph {
                graph: g,
                designated_basis: basis,
                predicted: constructions::Predicted {
                    order: 0,
                    dimension: report.dimension,
                    diameter: None,
                    max_degree: None,
                },
                family: constructions::FamilyTag::PathExtended { m },
            };
            let ext = constructions::extend_by_path(&c, u, m).map_err(|e| e.to_string())?;
            print_construction(&ext, emit);
            let re = unidim_core::all_bases(&ext.graph).map_err(|e| e.to_string())?;
            if re.dimension == report.dimension && re.bases == vec![basis] {
                println!("verify=pass");
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "FAIL\textend\tdimension={} bases={} (expected dimension={} unique basis {})",
                    re.dimension,
                    re.bases.len(),
                    report.dimension,
                    basis
                );
                Ok(ExitCode::from(1))
            }
        }
        Command::Convert { input, to } => {
            for g in read_input(&input)? {
                emit_graph(&g, to);
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

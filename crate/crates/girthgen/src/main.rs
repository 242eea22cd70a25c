use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use girthgen::generate::{self, Format, GenerationTask};
use girthgen::report::{self, Selection};
use girthgen::verify::{self, Options};
use girthgen::{appendix, graph6, Error, Result};
use girthgen_core::pipeline::{Algorithm, Class};

#[derive(Parser)]
#[command(
    name = "girthgen",
    version,
    about = "Generate cubic graphs with a girth bound and snarks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Auto,
    Tripod,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Adjacency,
}

#[derive(Subcommand)]
enum Command {
    /// Generate all connected cubic graphs (or snarks) of one order.
    Generate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value_t = 3)]
        girth: usize,
        /// Only snarks (requires --girth 5 or more).
        #[arg(long)]
        snarks: bool,
        #[arg(long, value_enum, default_value = "auto")]
        algorithm: AlgorithmArg,
        #[arg(long, value_enum, default_value = "graph6")]
        format: FormatArg,
        /// Only the part with base index congruent to RES modulo MOD.
        #[arg(long = "mod", value_name = "RES/MOD")]
        split: Option<String>,
        /// Print only the number of graphs.
        #[arg(long)]
        count_only: bool,
        /// Write the graphs to PATH instead of standard output.
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Relabel graphs canonically before writing.
        #[arg(long)]
        canonical: bool,
        /// Disable the colouring look-ahead in snark mode.
        #[arg(long)]
        no_lookahead: bool,
        /// Re-check every emitted graph.
        #[arg(long)]
        validate: bool,
    },
    /// Print one property line per input graph.
    Analyze {
        /// Input file (graph6 lines or adjacency lists); standard input if absent.
        input: Option<PathBuf>,
        /// Skip oddness, hamiltonicity, strong snarks, dominating cycles,
        /// total and Petersen colourings.
        #[arg(long)]
        basic: bool,
        /// Node budget for the dominating cycle search.
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// Run named verification suites.
    Verify {
        /// Suites to run; all if none are given.
        suites: Vec<String>,
        /// Include the checks that take hours.
        #[arg(long)]
        full: bool,
        /// Largest snark order to generate.
        #[arg(long, default_value_t = 24)]
        max_snark_order: usize,
    },
}

fn parse_split(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::Usage(format!("--mod expects RES/MOD, got {s:?}"));
    let (r, m) = s.split_once('/').ok_or_else(bad)?;
    Ok((
        r.trim().parse().map_err(|_| bad())?,
        m.trim().parse().map_err(|_| bad())?,
    ))
}

fn read_graphs(input: Option<PathBuf>) -> Result<Vec<girthgen_core::CubicGraph>> {
    let reader: Box<dyn BufRead> = match input {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(BufReader::new(io::stdin())),
    };
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        out.push(if t.starts_with('{') {
            appendix::parse(t)?
        } else {
            graph6::decode(t)?
        });
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Generate {
            order,
            girth,
            snarks,
            algorithm,
            format,
            split,
            count_only,
            output,
            jobs,
            canonical,
            no_lookahead,
            validate,
        } => {
            let mut task = GenerationTask::new(order, girth);
            task.class = if snarks { Class::Snarks } else { Class::All };
            task.algorithm = match algorithm {
                AlgorithmArg::Auto => Algorithm::Auto,
                AlgorithmArg::Tripod => Algorithm::Tripod,
                AlgorithmArg::H => Algorithm::H,
            };
            task.format = (!count_only).then_some(match format {
                FormatArg::Graph6 => Format::Graph6,
                FormatArg::Adjacency => Format::Adjacency,
            });
            if let Some(s) = split {
                (task.res, task.modulus) = parse_split(&s)?;
            }
            task.jobs = jobs;
            task.canonical = canonical;
            task.no_lookahead = no_lookahead;
            task.validate = validate;
            let mut out: Box<dyn Write> = match output {
                Some(p) => Box::new(BufWriter::new(File::create(p)?)),
                None => Box::new(BufWriter::new(io::stdout().lock())),
            };
            let summary = generate::generate(&task, &mut out)?;
            if count_only {
                writeln!(out, "{}", summary.count)?;
            }
            out.flush()?;
            for s in &summary.stats {
                log::info!("{s:?}");
            }
            Ok(true)
        }
        Command::Analyze {
            input,
            basic,
            budget,
        } => {
            let mut sel = if basic {
                Selection::none()
            } else {
                Selection::all()
            };
            sel.dominating_budget = budget;
            let mut out = BufWriter::new(io::stdout().lock());
            for g in read_graphs(input)? {
                writeln!(out, "{}", report::analyze(&g, sel))?;
            }
            out.flush()?;
            Ok(true)
        }
        Command::Verify {
            suites,
            full,
            max_snark_order,
        } => {
            let names: Vec<String> = if suites.is_empty() {
                verify::SUITES.iter().map(|s| s.to_string()).collect()
            } else {
                suites
            };
            let opts = Options {
                full,
                max_snark_order,
            };
            let mut ok = true;
            for name in names {
                for check in verify::run_suite(&name, opts)? {
                    ok &= check.pass;
                    println!("[{name}] {check}");
                }
            }
            Ok(ok)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("girthgen: {e}");
            ExitCode::from(match e {
                Error::Usage(_) | Error::Plan(_) => 2,
                _ => 1,
            })
        }
    }
}

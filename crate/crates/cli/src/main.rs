//! `eil` — exact edge-ideal computations from the command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 resource budget
//! exceeded, 3 internal consistency violation (a bound check that is a
//! proven theorem reported "violated", or a guaranteed witness search
//! came up empty — either one means an engine bug).

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use eil_core::betti::power_betti_table;
use eil_core::bounds::{
    compute_invariants, evaluate_bounds, hereditary_witness_search, GraphDescriptor,
    HereditaryInvariant,
};
use eil_core::budget::Budget;
use eil_core::error::{Error, Result};
use eil_core::formats::{parse_graph, parse_graph_auto, write_graph, GraphFormat};
use eil_core::graph::Graph;
use eil_core::homology::Field;
use eil_core::scan::{scan, GeneratorSpec, ScanConfig};
use eil_core::structure::{build_gn, build_hn, whisker};

#[derive(Parser)]
#[command(
    name = "eil",
    version,
    about = "Exact Castelnuovo-Mumford regularity of powers of edge ideals, \
             the graph invariants that bound it, and batch verification of \
             those bounds",
    after_help = "Budgets: exponential searches refuse oversized inputs. \
                  EIL_BUDGET_VERTICES and EIL_BUDGET_SUBSET override the \
                  defaults (24 and 20); --budget N caps both at N for one run.\n\
                  Graph files: graph6, edge list ('n m' header then 'u v' \
                  lines), or JSON {\"n\",\"edges\",\"labels\"}; the format is \
                  sniffed from content unless --format is given. '-' reads \
                  from stdin."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Graph6,
    Edgelist,
    Json,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> GraphFormat {
        match f {
            FormatArg::Graph6 => GraphFormat::Graph6,
            FormatArg::Edgelist => GraphFormat::EdgeList,
            FormatArg::Json => GraphFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    Gf2,
    Rational,
}

impl From<FieldArg> for Field {
    fn from(f: FieldArg) -> Field {
        match f {
            FieldArg::Gf2 => Field::GF2,
            FieldArg::Rational => Field::Rational,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute every invariant of one graph (matchings, co-chordal cover
    /// number, girth, independence number, ...) as a JSON block
    Invariants {
        /// Graph file ('-' for stdin)
        graphfile: PathBuf,
        /// Input format (default: sniffed from content)
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Cap the vertex and subset budgets at N
        #[arg(long, value_name = "N")]
        budget: Option<usize>,
    },
    /// Exact graded Betti table and regularity of a power of the edge ideal
    Regularity {
        /// Graph file ('-' for stdin)
        graphfile: PathBuf,
        /// Power s of the edge ideal (the power is polarized first)
        #[arg(long, value_name = "S")]
        power: usize,
        /// Coefficient field for the homology ranks
        #[arg(long, value_enum, default_value = "gf2")]
        field: FieldArg,
        /// Cap the vertex and subset budgets at N
        #[arg(long, value_name = "N")]
        budget: Option<usize>,
        /// Input format (default: sniffed from content)
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Evaluate every upper/lower regularity bound on one graph and power;
    /// exits 3 if any check is violated
    Verify {
        /// Graph file ('-' for stdin)
        graphfile: PathBuf,
        /// Power s of the edge ideal
        #[arg(long, value_name = "S")]
        power: usize,
        /// Coefficient field for the regularity computation
        #[arg(long, value_enum, default_value = "gf2")]
        field: FieldArg,
        /// Cap the vertex and subset budgets at N
        #[arg(long, value_name = "N")]
        budget: Option<usize>,
        /// Input format (default: sniffed from content)
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Find a vertex w with f(G-w) <= f(G) and f(G-N[w]) <= max(f(G)-1, 2)
    /// for f = invariant + 1; exits 3 if none exists (guaranteed otherwise)
    Witness {
        /// Graph file ('-' for stdin)
        graphfile: PathBuf,
        /// Which hereditary invariant to use
        #[arg(long, value_name = "cochord|minmatch|minmatch-k2c5")]
        lemma: String,
        /// Cap the vertex and subset budgets at N
        #[arg(long, value_name = "N")]
        budget: Option<usize>,
        /// Input format (default: sniffed from content)
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
    },
    /// Build a named graph and write it as a graph file
    ///
    /// Families: hn N (5N-vertex girth-5 ladder member), whisker GRAPHFILE
    /// (add a pendant to every vertex), cycle N, path N, complete N,
    /// gn GRAPHFILE U N X (glue the graph in GRAPHFILE at its vertex U
    /// onto the whiskered ladder member W(H_N) at vertex X)
    Construct {
        /// Family name: hn, whisker, cycle, path, complete, or gn
        family: String,
        /// Family parameters (see the family list above)
        params: Vec<String>,
        /// Output file (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
    },
    /// Evaluate the bounds over a batch of graphs; one JSON line per
    /// report, then a summary line; exits 3 if any check is violated
    Scan {
        /// All non-isomorphic connected graphs on at most N vertices
        #[arg(long, value_name = "N", conflicts_with_all = ["random", "family"])]
        exhaustive: Option<usize>,
        /// COUNT seeded G(N, 1/2) samples
        #[arg(long, value_name = "SEED,N,COUNT", conflicts_with = "family")]
        random: Option<String>,
        /// A named construction ladder: hn, whn, cycle, path, or complete
        #[arg(long, value_name = "NAME")]
        family: Option<String>,
        /// Evaluate powers 1..=S for every graph
        #[arg(long, value_name = "S", default_value_t = 1)]
        smax: usize,
        /// Coefficient field for the regularity computations
        #[arg(long, value_enum, default_value = "gf2")]
        field: FieldArg,
        /// Cap the vertex and subset budgets at N
        #[arg(long, value_name = "N")]
        budget: Option<usize>,
        /// Write the JSON-lines stream to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 2,
                Error::Inconsistency(_) => 3,
                _ => 1,
            })
        }
    }
}

fn effective_budget(cap: Option<usize>) -> Budget {
    let b = Budget::from_env();
    match cap {
        Some(n) => b.with_vertices(n).with_subset(n),
        None => b,
    }
}

fn read_graph(path: &Path, fmt: Option<FormatArg>) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    match fmt {
        Some(f) => parse_graph(&text, f.into()),
        None => parse_graph_auto(&text),
    }
}

fn emit(value: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(value).unwrap());
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Invariants { graphfile, format, budget } => {
            let g = read_graph(&graphfile, format)?;
            let b = effective_budget(budget);
            let mut notes = Vec::new();
            let block = compute_invariants(&g, &b, &mut notes);
            emit(&serde_json::json!({
                "graph": GraphDescriptor::of(&g).json_value(),
                "invariants": block.json_value(),
                "notes": notes,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Regularity { graphfile, power, field, budget, format } => {
            let g = read_graph(&graphfile, format)?;
            let b = effective_budget(budget);
            let table = power_betti_table(&g, power, field.into(), &b)?;
            emit(&serde_json::json!({
                "graph": GraphDescriptor::of(&g).json_value(),
                "power": power,
                "reg": table.reg_ideal(),
                "betti": table.json_value(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { graphfile, power, field, budget, format } => {
            let g = read_graph(&graphfile, format)?;
            let b = effective_budget(budget);
            let report = evaluate_bounds(&g, power, field.into(), &b);
            emit(&report.json_value());
            if report.violations().is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("error: {} bound check(s) violated", report.violations().len());
                Ok(ExitCode::from(3))
            }
        }
        Command::Witness { graphfile, lemma, budget, format } => {
            let g = read_graph(&graphfile, format)?;
            let b = effective_budget(budget);
            let invariant: HereditaryInvariant = lemma.parse()?;
            let record = hereditary_witness_search(&g, invariant, &b)?;
            emit(&serde_json::json!({
                "graph": GraphDescriptor::of(&g).json_value(),
                "witness": record.json_value(),
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { family, params, out, format } => {
            let g = construct(&family, &params)?;
            let mut text = write_graph(&g, format.into());
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan { exhaustive, random, family, smax, field, budget, out } => {
            let generator = scan_generator(exhaustive, random, family)?;
            let config = ScanConfig {
                generator,
                s_max: smax,
                field: field.into(),
                budget: effective_budget(budget),
            };
            let output = scan(&config)?;
            let mut lines = String::new();
            for report in &output.reports {
                lines.push_str(&serde_json::to_string(&report.json_value()).unwrap());
                lines.push('\n');
            }
            lines.push_str(
                &serde_json::to_string(&serde_json::json!({
                    "summary": output.summary.json_value()
                }))
                .unwrap(),
            );
            lines.push('\n');
            match out {
                Some(path) => {
                    std::fs::write(&path, lines)?;
                    println!(
                        "scan: {} graphs, {} reports, checks holds={} violated={} skipped={} -> {}",
                        output.summary.graphs,
                        output.summary.reports,
                        output.summary.checks_holds,
                        output.summary.checks_violated,
                        output.summary.checks_skipped,
                        path.display()
                    );
                }
                None => print!("{lines}"),
            }
            if output.summary.checks_violated > 0 {
                eprintln!(
                    "error: {} bound check(s) violated",
                    output.summary.checks_violated
                );
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn param<T: std::str::FromStr>(params: &[String], idx: usize, what: &str) -> Result<T> {
    let tok = params.get(idx).ok_or_else(|| {
        Error::InvalidInput(format!("missing parameter {}: {what}", idx + 1))
    })?;
    tok.parse()
        .map_err(|_| Error::InvalidInput(format!("bad parameter {}: {what} (got '{tok}')", idx + 1)))
}

fn expect_params(params: &[String], count: usize, usage: &str) -> Result<()> {
    if params.len() != count {
        return Err(Error::InvalidInput(format!(
            "expected {count} parameter(s): {usage}"
        )));
    }
    Ok(())
}

fn construct(family: &str, params: &[String]) -> Result<Graph> {
    match family {
        "hn" => {
            expect_params(params, 1, "construct hn N")?;
            build_hn(param(params, 0, "N")?)
        }
        "whisker" => {
            expect_params(params, 1, "construct whisker GRAPHFILE")?;
            let host = read_graph(Path::new(&params[0]), None)?;
            Ok(whisker(&host))
        }
        "cycle" => {
            expect_params(params, 1, "construct cycle N")?;
            Graph::cycle(param(params, 0, "N")?)
        }
        "path" => {
            expect_params(params, 1, "construct path N")?;
            Graph::path(param(params, 0, "N")?)
        }
        "complete" => {
            expect_params(params, 1, "construct complete N")?;
            Graph::complete(param(params, 0, "N")?)
        }
        "gn" => {
            expect_params(params, 4, "construct gn GRAPHFILE U N X")?;
            let host = read_graph(Path::new(&params[0]), None)?;
            let u: usize = param(params, 1, "U")?;
            let n: usize = param(params, 2, "N")?;
            let x: usize = param(params, 3, "X")?;
            build_gn(&host, u, n, x)
        }
        other => Err(Error::InvalidInput(format!(
            "unknown family '{other}'; expected hn, whisker, cycle, path, complete, or gn"
        ))),
    }
}

fn scan_generator(
    exhaustive: Option<usize>,
    random: Option<String>,
    family: Option<String>,
) -> Result<GeneratorSpec> {
    match (exhaustive, random, family) {
        (Some(n_max), None, None) => Ok(GeneratorSpec::Exhaustive { n_max }),
        (None, Some(triple), None) => {
            let parts: Vec<&str> = triple.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::InvalidInput(
                    "--random takes SEED,N,COUNT (three comma-separated integers)".into(),
                ));
            }
            let parse = |tok: &str, what: &str| -> Result<u64> {
                tok.trim().parse().map_err(|_| {
                    Error::InvalidInput(format!("bad {what} in --random (got '{tok}')"))
                })
            };
            Ok(GeneratorSpec::Random {
                seed: parse(parts[0], "SEED")?,
                n: parse(parts[1], "N")? as usize,
                count: parse(parts[2], "COUNT")? as usize,
            })
        }
        (None, None, Some(name)) => Ok(GeneratorSpec::Family { name }),
        _ => Err(Error::InvalidInput(
            "scan needs exactly one of --exhaustive, --random, --family".into(),
        )),
    }
}

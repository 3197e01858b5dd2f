use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idealis::format::{self, IdealText};
use idealis::report;
use idealis::verify::{self, Check, SweepConfig};
use idealis_core::closure::{integral_closure_with, power_membership_oracle};
use idealis_core::homology::invariant_report;
use idealis_core::{Adjacency, ClassHint, ClosureOptions, MonomialIdeal, PartitionedGraph};

const USAGE_ERROR: u8 = 2;
const VERIFY_FAILURE: u8 = 1;

#[derive(Parser)]
#[command(
    name = "idealis",
    version,
    about = "Integral closures and invariants of monomial ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Integral closure of an ideal or of a graph's edge ideal.
    Closure {
        #[command(flatten)]
        input: Input,
        /// Largest candidate degree to search.
        #[arg(long)]
        degree_cap: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Height, dimension, depth, Betti numbers and related invariants.
    Invariants {
        #[command(flatten)]
        input: Input,
        /// Which ideal of a graph to study.
        #[arg(long, value_enum, default_value_t = Target::Edge)]
        target: Target,
        /// strong-quasi-closure, cover-ideal, principal or generic.
        #[arg(long, default_value = "generic")]
        class: ClassHint,
        #[arg(long)]
        json: bool,
        /// Append one CSV row to this file.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        /// Instance name for the CSV row.
        #[arg(long)]
        name: Option<String>,
    },
    /// Minimal vertex covers and the cover ideal of a graph.
    CoverIdeal {
        /// Graph JSON or @file.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        adjacent_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Least k <= k-max with f^k in I^k.
    Oracle {
        /// The monomial f.
        monomial: String,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 6)]
        k_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check the known closed forms across a family of graphs.
    Verify {
        /// Block counts, comma separated.
        #[arg(long, default_value = "2,3")]
        n: String,
        /// Block sizes, comma separated.
        #[arg(long, default_value = "1,2,3")]
        m: String,
        /// Comma-separated checks, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        #[arg(long, default_value_t = 6)]
        k_max: u32,
        #[arg(long = "max-M", default_value_t = 9)]
        max_m: usize,
        #[arg(long)]
        adjacent_only: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Input {
    /// Ideal: one monomial per line or a JSON array, inline or @file.
    #[arg(required_unless_present = "graph", conflicts_with = "graph")]
    ideal: Option<String>,
    /// Graph JSON or @file; its edge ideal is used.
    #[arg(long)]
    graph: Option<String>,
    /// Block sizes, comma separated; inferred from the ideal if absent.
    #[arg(long)]
    blocks: Option<String>,
    /// Join only consecutive blocks when edges are "complete".
    #[arg(long)]
    adjacent_only: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Edge,
    Closure,
    Cover,
}

fn adjacency(adjacent_only: bool) -> Adjacency {
    if adjacent_only {
        Adjacency::Consecutive
    } else {
        Adjacency::AllPairs
    }
}

enum Source {
    Ideal(MonomialIdeal),
    Graph(PartitionedGraph),
}

impl Input {
    fn load(&self) -> Result<Source, String> {
        if let Some(spec) = &self.graph {
            if self.blocks.is_some() {
                return Err(
                    "--blocks applies to ideal input; a graph carries its own blocks".into(),
                );
            }
            let text = format::read_argument(spec).map_err(|e| e.to_string())?;
            return format::parse_graph(&text, adjacency(self.adjacent_only))
                .map(Source::Graph)
                .map_err(|e| format!("graph: {e}"));
        }
        let arg = self.ideal.as_deref().expect("clap requires ideal or graph");
        let text = format::read_argument(arg).map_err(|e| e.to_string())?;
        let blocks = self
            .blocks
            .as_deref()
            .map(format::parse_blocks)
            .transpose()
            .map_err(|e| e.to_string())?;
        format::parse_ideal(&text, blocks.as_deref())
            .map(Source::Ideal)
            .map_err(|e| format!("ideal: {e}"))
    }

    fn ideal(&self) -> Result<MonomialIdeal, String> {
        Ok(match self.load()? {
            Source::Ideal(i) => i,
            Source::Graph(g) => g.edge_ideal(),
        })
    }
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("idealis: {message}");
    ExitCode::from(USAGE_ERROR)
}

fn print_json(v: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    );
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Closure {
            input,
            degree_cap,
            json,
        } => {
            let ideal = input.ideal()?;
            if ideal.is_zero() {
                return Err("the zero ideal has no generators to close".into());
            }
            let result = integral_closure_with(&ideal, &ClosureOptions { degree_cap })
                .map_err(|e| e.to_string())?;
            if json {
                print_json(&report::closure_json(&ideal, &result));
            } else {
                print!("{}", report::closure_text(&result));
            }
        }
        Command::Invariants {
            input,
            target,
            class,
            json,
            csv,
            name,
        } => {
            let source = input.load()?;
            let ideal = match (&source, target) {
                (Source::Ideal(i), Target::Edge) => i.clone(),
                (Source::Ideal(i), Target::Closure) => {
                    integral_closure_with(i, &ClosureOptions::default())
                        .map_err(|e| e.to_string())?
                        .closure
                }
                (Source::Ideal(_), Target::Cover) => {
                    return Err("--target cover needs --graph".into())
                }
                (Source::Graph(g), Target::Edge) => g.edge_ideal(),
                (Source::Graph(g), Target::Closure) => {
                    integral_closure_with(&g.edge_ideal(), &ClosureOptions::default())
                        .map_err(|e| e.to_string())?
                        .closure
                }
                (Source::Graph(g), Target::Cover) => g.cover_ideal().map_err(|e| e.to_string())?,
            };
            let r = invariant_report(&ideal, class).map_err(|e| e.to_string())?;
            if json {
                print_json(&report::invariants_json(&ideal, &r));
            } else {
                print!("{}", report::invariants_text(&ideal, &r));
            }
            if let Some(path) = csv {
                let instance = name.unwrap_or_else(|| match &source {
                    Source::Graph(g) => format::graph_spec(g),
                    Source::Ideal(i) => IdealText(i).to_string(),
                });
                report::append_csv(&path, &report::csv_record(&instance, &r))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
        }
        Command::CoverIdeal {
            graph,
            adjacent_only,
            json,
        } => {
            let text = format::read_argument(&graph).map_err(|e| e.to_string())?;
            let g = format::parse_graph(&text, adjacency(adjacent_only))
                .map_err(|e| format!("graph: {e}"))?;
            let covers = g.minimal_vertex_covers().map_err(|e| e.to_string())?;
            let ideal = g.cover_ideal().map_err(|e| e.to_string())?;
            let cover_strings: Vec<Vec<String>> = covers
                .iter()
                .map(|c| c.vertices.iter().map(ToString::to_string).collect())
                .collect();
            if json {
                print_json(&serde_json::json!({
                    "graph": serde_json::from_str::<serde_json::Value>(&format::graph_spec(&g)).expect("valid JSON"),
                    "minimal_covers": cover_strings,
                    "cover_ideal": format::generator_strings(&ideal),
                }));
            } else {
                for c in &cover_strings {
                    println!("cover: {{{}}}", c.join(", "));
                }
                println!("cover ideal: {}", IdealText(&ideal));
            }
        }
        Command::Oracle {
            monomial,
            input,
            k_max,
            json,
        } => {
            let ideal = input.ideal()?;
            let f = format::parse_monomial(ideal.vars(), &monomial)
                .map_err(|e| format!("monomial: {e}"))?;
            let k = power_membership_oracle(&f, &ideal, k_max).map_err(|e| e.to_string())?;
            if json {
                print_json(&serde_json::json!({
                    "monomial": f.display(ideal.vars()).to_string(),
                    "k_max": k_max,
                    "k": k,
                }));
            } else {
                match k {
                    Some(k) => println!("in closure: f^{k} in I^{k}"),
                    None => println!("inconclusive: no k <= {k_max} with f^k in I^k"),
                }
            }
        }
        Command::Verify {
            n,
            m,
            checks,
            k_max,
            max_m,
            adjacent_only,
            json,
        } => {
            let list = |s: &str| format::parse_blocks(s).map_err(|e| e.to_string());
            let checks = if checks.trim() == "all" {
                Check::ALL.into_iter().collect()
            } else {
                checks
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| s.trim().parse::<Check>())
                    .collect::<Result<_, _>>()?
            };
            let config = SweepConfig {
                n_range: list(&n)?,
                m_range: list(&m)?,
                k_max_oracle: k_max,
                checks,
                max_vars: max_m,
                adjacency: adjacency(adjacent_only),
            };
            let r = verify::run_sweep(&config).map_err(|e| format!("sweep configuration: {e}"))?;
            if json {
                print_json(&r.to_json());
            } else {
                print!("{}", r.to_text());
            }
            if !r.all_passed() {
                return Ok(ExitCode::from(VERIFY_FAILURE));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE_ERROR)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    run(cli).unwrap_or_else(fail)
}

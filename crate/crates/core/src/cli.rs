// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. [`run`] takes its streams as arguments so it can
//! be driven in-process by tests.
//!
//! Exit status: 0 on success, 1 on bad input or parameters, 2 when a
//! budgeted search stopped early and the answer is only an interval.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::bounds::compare_table;
use crate::coloring::{exact_chromatic, greedy_color, max_clique, Budget};
use crate::constructions::{g_family, named_graph, random_two_degenerate_construction};
use crate::discharging::{
    classify_vertices, detect_ghost_configs, detect_mad4_configs, ghost_discharge, mad4_discharge,
};
use crate::error::Error;
use crate::graph::{degree_profile, Graph};
use crate::io::{emit_dimacs, emit_edge_list, emit_edge_list_with_header, parse_graph};
use crate::metrics::{degeneracy_ordering, densest_subgraph};
use crate::report::{verify, SCHEMA};

/// Node cap for exact searches when `--budget` is not given.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(name = "sqcolor", version, about = "Colouring squares of sparse graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Input {
    /// Graph file (edge list or DIMACS); stdin when absent.
    #[arg(short = 'i', long = "input")]
    input: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph: a name (petersen, figure2, figure3_full,
    /// figure3_reduced, path N, cycle N), `gt N T`, or `rand2deg N CAP SEED`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        what: Vec<String>,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
    },
    /// Square of the input graph; DIMACS when the output file ends in `.col`.
    Square {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'o', long = "output")]
        output: Option<String>,
    },
    /// Exact maximum average degree with a densest-subgraph witness.
    Mad {
        #[command(flatten)]
        input: Input,
    },
    Degeneracy {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        square: bool,
    },
    /// First-fit along a degeneracy ordering, or exact with `--exact`.
    Color {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        square: bool,
        #[arg(long)]
        exact: bool,
        /// Node cap for the exact search.
        #[arg(long)]
        budget: Option<u64>,
    },
    Clique {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        square: bool,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Vertex classes by d - d2 and d3.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Reducible configurations, as JSON. Mode: `ghost K` or `mad4`.
    Detect {
        #[command(flatten)]
        input: Input,
        #[arg(long, required = true, num_args = 1..=2, value_names = ["MODE", "K"])]
        mode: Vec<String>,
    },
    /// Discharging report, as JSON. Mode: `ghost K` or `mad4`.
    Discharge {
        #[command(flatten)]
        input: Input,
        #[arg(long, required = true, num_args = 1..=2, value_names = ["MODE", "K"])]
        mode: Vec<String>,
    },
    /// Table of the closed-form bounds.
    Bounds {
        #[arg(long)]
        k: u64,
        #[arg(long = "from")]
        from: u64,
        #[arg(long = "to")]
        to: u64,
        #[arg(long)]
        csv: bool,
    },
    /// Summary of a graph against every applicable bound.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        /// Node cap for the clique search in the square.
        #[arg(long)]
        budget: Option<u64>,
    },
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

struct Streams<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Streams<'_> {
    fn read_graph(&mut self, input: &Input) -> Result<Graph, Failure> {
        let text = match &input.input {
            Some(path) => {
                std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read '{path}': {e}")))?
            }
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| Failure::Input(format!("cannot read stdin: {e}")))?;
                s
            }
        };
        Ok(parse_graph(&text)?)
    }

    fn write(&mut self, output: Option<&str>, text: &str) -> Result<(), Failure> {
        match output {
            Some(path) => std::fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write '{path}': {e}"))),
            None => {
                self.stdout.write_all(text.as_bytes()).map_err(|e| Failure::Input(format!("cannot write stdout: {e}")))
            }
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn number<T: std::str::FromStr>(tok: &str, what: &str) -> Result<T, Failure> {
    tok.parse().map_err(|_| Failure::Input(format!("invalid {what} '{tok}'")))
}

enum ModeArg {
    Ghost(usize),
    Mad4,
}

fn parse_mode(mode: &[String]) -> Result<ModeArg, Failure> {
    match mode {
        [m] if m == "mad4" => Ok(ModeArg::Mad4),
        [m, k] if m == "ghost" => Ok(ModeArg::Ghost(number(k, "k")?)),
        [m] if m == "ghost" => Err(Failure::Input("mode 'ghost' needs a value for K".into())),
        [m, extra] if m == "mad4" => Err(Failure::Input(format!("unexpected argument '{extra}' after mode 'mad4'"))),
        [m, ..] => Err(Failure::Input(format!("unknown mode '{m}'"))),
        [] => Err(Failure::Input("missing mode".into())),
    }
}

#[derive(Serialize)]
struct Wrapped<'a, T: Serialize> {
    schema: u32,
    #[serde(flatten)]
    body: &'a T,
}

fn to_json<T: Serialize>(body: &T) -> String {
    let mut s = serde_json::to_string_pretty(&Wrapped { schema: SCHEMA, body }).expect("serializable");
    s.push('\n');
    s
}

fn generate(what: &[String]) -> Result<String, Failure> {
    let (g, meta) = match what {
        [kind, n, t] if kind == "gt" => g_family(number(n, "n")?, number(t, "t")?)?,
        [kind, n, cap, seed] if kind == "rand2deg" => {
            random_two_degenerate_construction(number(n, "n")?, number(cap, "degree cap")?, number(seed, "seed")?)?
        }
        [kind, n] if kind == "path" || kind == "cycle" => named_graph(&format!("{kind}({n})"))?,
        [name] => named_graph(name)?,
        [_, ..] => return Err(Failure::Input(format!("unknown construction '{}'", what.join(" ")))),
        [] => return Err(Failure::Input("missing construction name".into())),
    };
    Ok(emit_edge_list_with_header(&g, &meta.header()))
}

/// Returns the exit status.
fn dispatch(cli: Cli, io: &mut Streams<'_>) -> Result<i32, Failure> {
    let budget_of = |b: Option<u64>| Budget::nodes(b.unwrap_or(DEFAULT_BUDGET));
    let pick = |g: Graph, square: bool| if square { g.square() } else { g };
    match cli.command {
        Command::Gen { what, output } => {
            let text = generate(&what)?;
            io.write(output.as_deref(), &text)?;
        }
        Command::Square { input, output } => {
            let sq = io.read_graph(&input)?.square();
            let text = match output.as_deref() {
                Some(path) if path.ends_with(".col") => emit_dimacs(&sq),
                _ => emit_edge_list(&sq),
            };
            io.write(output.as_deref(), &text)?;
        }
        Command::Mad { input } => {
            let g = io.read_graph(&input)?;
            let r = densest_subgraph(&g);
            let text = format!("mad: {}\ndensity: {}\nwitness: {}\n", r.mad(), r.density, join(&r.witness));
            io.write(None, &text)?;
        }
        Command::Degeneracy { input, square } => {
            let g = pick(io.read_graph(&input)?, square);
            let (d, ord) = degeneracy_ordering(&g);
            io.write(None, &format!("degeneracy: {d}\nordering: {}\n", join(&ord.sequence)))?;
        }
        Command::Color { input, square, exact, budget } => {
            let g = pick(io.read_graph(&input)?, square);
            if exact {
                let r = exact_chromatic(&g, budget_of(budget));
                let mut text = match r.chi() {
                    Some(chi) => format!("chi: {chi}\n"),
                    None => format!("chi: [{}, {}] (budget exhausted after {} nodes)\n", r.lower, r.upper, r.nodes),
                };
                let _ = writeln!(text, "coloring: {}", join(&r.coloring.colors));
                io.write(None, &text)?;
                if !r.exact {
                    return Ok(2);
                }
            } else {
                let (_, ord) = degeneracy_ordering(&g);
                let c = greedy_color(&g, &ord)?;
                io.write(None, &format!("colors: {}\ncoloring: {}\n", c.palette, join(&c.colors)))?;
            }
        }
        Command::Clique { input, square, budget } => {
            let g = pick(io.read_graph(&input)?, square);
            let c = max_clique(&g, budget_of(budget));
            let size = if c.exact { format!("{}", c.size) } else { format!(">= {} (budget exhausted)", c.size) };
            io.write(None, &format!("clique: {size}\nvertices: {}\n", join(&c.vertices)))?;
            if !c.exact {
                return Ok(2);
            }
        }
        Command::Classify { input } => {
            let g = io.read_graph(&input)?;
            let profile = degree_profile(&g);
            let mut text = String::from("vertex d d2 d3 class nice\n");
            for (v, c) in classify_vertices(&g).iter().enumerate() {
                let e = profile.get(v);
                let class = serde_json::to_value(c.class).expect("serializable");
                let class =
                    if c.small_degree { "small".to_string() } else { class.as_str().unwrap_or("other").to_string() };
                let _ = writeln!(text, "{v} {} {} {} {class} {}", e.d, e.d2, e.d3, c.nice);
            }
            io.write(None, &text)?;
        }
        Command::Detect { input, mode } => {
            let mode = parse_mode(&mode)?;
            let g = io.read_graph(&input)?;
            let hits = match mode {
                ModeArg::Ghost(k) => detect_ghost_configs(&g, k)?,
                ModeArg::Mad4 => detect_mad4_configs(&g),
            };
            #[derive(Serialize)]
            struct Hits<'a> {
                count: usize,
                hits: &'a [crate::discharging::ConfigHit],
            }
            io.write(None, &to_json(&Hits { count: hits.len(), hits: &hits }))?;
        }
        Command::Discharge { input, mode } => {
            let mode = parse_mode(&mode)?;
            let g = io.read_graph(&input)?;
            let report = match mode {
                ModeArg::Ghost(k) => ghost_discharge(&g, k)?,
                ModeArg::Mad4 => mad4_discharge(&g),
            };
            io.write(None, &to_json(&report))?;
        }
        Command::Bounds { k, from, to, csv } => {
            let table = compare_table(k, from, to)?;
            io.write(None, &if csv { table.to_csv() } else { table.to_text() })?;
        }
        Command::Verify { input, json, budget } => {
            let g = io.read_graph(&input)?;
            let report = verify(&g, budget_of(budget));
            let mut text = if json { report.to_json() } else { report.to_text() };
            if json {
                text.push('\n');
            }
            io.write(None, &text)?;
            if !report.square_clique.exact {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            let rendered = e.render().to_string();
            let line = rendered.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(stderr, "{line}");
            return 1;
        }
    };
    let mut streams = Streams { stdin, stdout };
    match dispatch(cli, &mut streams) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

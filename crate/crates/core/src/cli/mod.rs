//! The `hedet` command line.
//!
//! Exit status: 0 when a command completes (whatever the verdict), 2 when a
//! resource cap stopped it, 3 for bad parameters or unparsable input, 4 when
//! a Gröbner verdict disagrees with the colouring oracle, 1 for I/O failures.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::conjecture::{run_experiment_suite, run_task, ExperimentRecord, Ledger, SuiteConfig, Task, Verdict};
use crate::encode::family;
use crate::error::{Error, Result};
use crate::graphs::{chromatic_number, graph6_emit, is_k_critical, is_vertex_critical, load_graph, tensor_product};
use crate::groebner::{buchberger_with, eliminate, GbConfig, Ideal, Strategy};
use crate::poly::{parse_generators, MonomialOrder, VarSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_ABORTED: i32 = 2;
pub const EXIT_PARAM: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Normal,
    Sugar,
}

/// Settings shared by every subcommand.
#[derive(Clone, Debug, Args)]
pub struct Config {
    /// Wall-clock cap per Gröbner computation, in seconds.
    #[arg(long, global = true, env = "HEDET_TIMEOUT", default_value_t = 3600,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub timeout: u64,
    /// Cap on the number of terms held during a Gröbner computation.
    #[arg(long, global = true, default_value_t = 1_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub max_terms: u64,
    /// Worker threads for suites (default: available parallelism).
    #[arg(long, global = true, env = "HEDET_THREADS",
          value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    /// JSONL ledger that records are appended to.
    #[arg(long, global = true, env = "HEDET_LEDGER", default_value = "hedet-ledger.jsonl")]
    pub ledger: PathBuf,
    /// Do not append to the ledger.
    #[arg(long, global = true)]
    pub no_ledger: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for sampled pair sets.
    #[arg(long, global = true, default_value_t = 0x5eed)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = StrategyArg::Normal)]
    strategy: StrategyArg,
}

impl Config {
    fn gb(&self) -> GbConfig {
        let strategy = match self.strategy {
            StrategyArg::Normal => Strategy::Normal,
            StrategyArg::Sugar => Strategy::Sugar,
        };
        GbConfig {
            max_terms: self.max_terms as usize,
            ..GbConfig::default()
        }
        .with_timeout(Duration::from_secs(self.timeout))
        .with_strategy(strategy)
    }

    fn ledger(&self) -> Option<Ledger> {
        (!self.no_ledger).then(|| Ledger::new(&self.ledger))
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "hedet",
    version,
    about = "Gröbner-basis checks of tensor-product colouring, cross-checked by exact colouring"
)]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Ideal-inclusion test for all pairs of orders n, n' at colour bound k.
    Thm44 {
        #[arg(conflicts_with = "k")]
        k_pos: Option<usize>,
        #[arg(conflicts_with = "n")]
        n_pos: Option<usize>,
        #[arg(conflicts_with = "nprime")]
        nprime_pos: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        nprime: Option<usize>,
    },
    /// Triviality of the fixed-pair ideal, checked against colouring G×H.
    Pair {
        #[arg(conflicts_with = "graph_g")]
        g_pos: Option<String>,
        #[arg(conflicts_with = "graph_h")]
        h_pos: Option<String>,
        /// Graph name, spec, graph6 string or file.
        #[arg(long)]
        graph_g: Option<String>,
        #[arg(long)]
        graph_h: Option<String>,
        #[arg(long)]
        k: usize,
    },
    /// Runs a named battery: thm44-desk, pairs-desk, cycles-desk, structural.
    Suite {
        #[arg(conflicts_with = "name")]
        name_pos: Option<String>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Structural checks.
    Verify {
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        nprime: Option<usize>,
    },
    /// Prints the generators of an encoding family.
    Encode {
        #[arg(long)]
        family: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        nprime: usize,
    },
    /// Graph utilities.
    Graph {
        #[arg(long, value_enum)]
        op: GraphOp,
        #[arg(long)]
        graph: String,
        /// Second factor for `tensor`.
        #[arg(long)]
        graph_h: Option<String>,
        /// Colour count for `critical` (default: χ).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Reduced Gröbner basis of generators read from a file (or `-` for stdin).
    Gb {
        #[arg(default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
        /// Eliminate every non-edge variable and print the basis of the e, f part; `--order` is ignored.
        #[arg(long)]
        eliminate: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    A4,
    SmallCritical,
    Prop43,
    Prop41,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GraphOp {
    Chrom,
    Critical,
    Tensor,
    G6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Aborted(_) => EXIT_ABORTED,
        Error::Parameter(_) | Error::Parse { .. } => EXIT_PARAM,
        Error::OracleMismatch(_) => EXIT_MISMATCH,
        Error::Io(_) | Error::Json(_) => EXIT_IO,
    }
}

fn need<T>(a: Option<T>, b: Option<T>, what: &str) -> Result<T> {
    a.or(b).ok_or_else(|| Error::param(format!("missing {what}")))
}

/// Runs the CLI with process arguments and standard streams.
pub fn run() -> i32 {
    let (mut out, mut err) = (std::io::stdout().lock(), std::io::stderr().lock());
    run_with(std::env::args_os(), &mut out, &mut err)
}

/// Runs the CLI on explicit arguments (the first is the program name).
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = write!(err, "{}", e.render());
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARAM,
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "hedet: {e}");
            exit_code(&e)
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let cfg = &cli.config;
    match &cli.cmd {
        Cmd::Thm44 {
            k_pos,
            n_pos,
            nprime_pos,
            k,
            n,
            nprime,
        } => {
            let k = need(*k, *k_pos, "k")?;
            if k < 3 {
                return Err(Error::param(format!("k must be at least 3, got {k}")));
            }
            let task = Task::Thm44 {
                k,
                n: need(*n, *n_pos, "n")?,
                nprime: need(*nprime, *nprime_pos, "n'")?,
            };
            records(cfg, "thm44", &[task], out)
        }
        Cmd::Pair {
            g_pos,
            h_pos,
            graph_g,
            graph_h,
            k,
        } => {
            let g = need(graph_g.clone(), g_pos.clone(), "graph G")?;
            let h = need(graph_h.clone(), h_pos.clone(), "graph H")?;
            records(cfg, "pair", &[Task::Pair { g, h, k: *k }], out)
        }
        Cmd::Suite { name_pos, name } => {
            let name = need(name.clone(), name_pos.clone(), "suite name")?;
            let sc = SuiteConfig {
                gb: cfg.gb(),
                threads: cfg.threads.map_or(SuiteConfig::default().threads, |t| t as usize),
            };
            let recs = run_experiment_suite(&name, &sc, cfg.ledger().as_ref())?;
            emit(cfg, "suite", &recs, out)
        }
        Cmd::Verify {
            target,
            k,
            max_n,
            n,
            nprime,
        } => {
            let tasks = match target {
                Target::A4 => vec![Task::A4],
                Target::SmallCritical => {
                    vec![Task::SmallCritical {
                        k: k.unwrap_or(4),
                        max_n: max_n.unwrap_or(7),
                    }]
                }
                Target::Prop43 => match k {
                    Some(k) => vec![Task::Prop43 { k: *k }],
                    None => (2..=10).map(|k| Task::Prop43 { k }).collect(),
                },
                Target::Prop41 => vec![Task::Prop41 {
                    k: k.unwrap_or(3),
                    n: n.unwrap_or(3),
                    nprime: nprime.unwrap_or(3),
                }],
            };
            records(cfg, "verify", &tasks, out)
        }
        Cmd::Encode {
            family: name,
            k,
            n,
            nprime,
        } => {
            let ideal = family(name, *k, *n, *nprime)?;
            let gens: Vec<String> = ideal.generators().iter().map(|g| g.to_string()).collect();
            match cfg.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"schema": 1, "command": "encode", "family": name, "k": k, "n": n, "nprime": nprime,
                           "variables": ideal.universe().len(), "generators": gens})
                )?,
                Format::Text => {
                    writeln!(out, "# {name} k={k} n={n} n'={nprime}: {} generators", gens.len())?;
                    for g in gens {
                        writeln!(out, "{g}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Graph { op, graph, graph_h, k } => {
            let g = load_graph(graph)?;
            let result: Value = match op {
                GraphOp::Chrom => json!(chromatic_number(&g)),
                GraphOp::G6 => json!(graph6_emit(&g)),
                GraphOp::Tensor => {
                    let h = load_graph(
                        graph_h
                            .as_deref()
                            .ok_or_else(|| Error::param("tensor needs --graph-h"))?,
                    )?;
                    json!(graph6_emit(&tensor_product(&g, &h)))
                }
                GraphOp::Critical => {
                    let k = k.unwrap_or_else(|| chromatic_number(&g));
                    json!({"k": k, "critical": is_k_critical(&g, k), "vertex_critical": is_vertex_critical(&g, k)})
                }
            };
            match cfg.format {
                Format::Json => {
                    let op = format!("{op:?}").to_lowercase();
                    writeln!(
                        out,
                        "{}",
                        json!({"schema": 1, "command": "graph", "op": op, "result": result})
                    )?
                }
                Format::Text => match &result {
                    Value::String(s) => writeln!(out, "{s}")?,
                    Value::Object(m) => {
                        writeln!(out, "{}", m["critical"])?;
                        writeln!(out, "k={} vertex-critical={}", m["k"], m["vertex_critical"])?;
                    }
                    v => writeln!(out, "{v}")?,
                },
            }
            Ok(EXIT_OK)
        }
        Cmd::Gb {
            input,
            order,
            eliminate: elim,
        } => {
            let mut text = String::new();
            if input == "-" {
                std::io::stdin().read_to_string(&mut text)?;
            } else {
                text = std::fs::read_to_string(input)?;
            }
            let ideal = Ideal::from_generators(parse_generators(&text)?);
            let gb = if *elim {
                eliminate(&ideal, &VarSet::edges(), &cfg.gb())?.basis()
            } else {
                let ord = if *order == OrderArg::Lex {
                    MonomialOrder::Lex
                } else {
                    MonomialOrder::Grevlex
                };
                buchberger_with(&ideal, &ord, &cfg.gb())?
            };
            let basis: Vec<String> = gb.basis.iter().map(|p| p.to_string()).collect();
            match cfg.format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({"schema": 1, "command": "gb", "order": gb.order.name(), "basis": basis, "stats": gb.stats,
                           "elapsed_ms": gb.elapsed.as_millis() as u64})
                )?,
                Format::Text => {
                    writeln!(out, "# {} elements, order {}", basis.len(), gb.order.name())?;
                    for b in basis {
                        writeln!(out, "{b}")?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn records(cfg: &Config, command: &str, tasks: &[Task], out: &mut dyn Write) -> Result<i32> {
    let ledger = cfg.ledger();
    let mut recs = Vec::new();
    for t in tasks {
        let r = run_task(t, &cfg.gb())?;
        if let Some(l) = &ledger {
            l.append(&r)?;
        }
        recs.push(r);
    }
    emit(cfg, command, &recs, out)
}

fn emit(cfg: &Config, command: &str, recs: &[ExperimentRecord], out: &mut dyn Write) -> Result<i32> {
    match cfg.format {
        Format::Json => writeln!(out, "{}", json!({"schema": 1, "command": command, "records": recs}))?,
        Format::Text => {
            for r in recs {
                text_record(r, out)?;
            }
        }
    }
    Ok(if recs.iter().any(|r| r.verdict == Verdict::Aborted) {
        EXIT_ABORTED
    } else {
        EXIT_OK
    })
}

fn text_record(r: &ExperimentRecord, out: &mut dyn Write) -> Result<()> {
    let d = &r.detail;
    let p = &r.params;
    if let Some(cap) = &r.cap {
        writeln!(out, "Aborted: {cap}")?;
        writeln!(out, "{} {}", r.task, p)?;
        return Ok(());
    }
    match r.task.as_str() {
        "verify-a4" => {
            let h0 = if d["h0_identified"] == true {
                "H0 identified"
            } else {
                "H0 not identified"
            };
            writeln!(out, "{} classes; {h0}", d["classes"])?;
            writeln!(out, "edge-critical: {} of {}", d["edge_critical"], d["classes"])?;
            for x in d["discrepancies"].as_array().into_iter().flatten() {
                writeln!(out, "discrepancy: {}", x.as_str().unwrap_or_default())?;
            }
        }
        "verify-small-critical" => {
            writeln!(out, "{}", r.verdict)?;
            for row in d["rows"].as_array().into_iter().flatten() {
                let found: Vec<&str> = row["found"]
                    .as_array()
                    .into_iter()
                    .flatten()
                    .filter_map(|v| v.as_str())
                    .collect();
                let m = match row["matches"].as_bool() {
                    Some(true) => "matches catalogue",
                    Some(false) => "differs from catalogue",
                    None => "not catalogued",
                };
                writeln!(
                    out,
                    "n={}: {} class(es) [{}] {m}",
                    row["n"],
                    found.len(),
                    found.join(" ")
                )?;
            }
        }
        "verify-prop43" => writeln!(out, "{} k={}", r.verdict, p["k"])?,
        _ => {
            writeln!(out, "{}", r.verdict)?;
            writeln!(out, "{} {}", r.task, p)?;
            if r.task == "thm44" {
                let unit = if d["tilde_i_unit"] == true { " (unit ideal)" } else { "" };
                writeln!(
                    out,
                    "eliminated J: {} generators; eliminated I: {} generators{unit}",
                    d["tilde_j_size"], d["tilde_i_size"]
                )?;
            }
            for s in &r.gb_stats {
                writeln!(
                    out,
                    "basis {} elements, {} pairs, {} zero reductions, max degree {}",
                    s.basis_size, s.spairs_processed, s.reductions_to_zero, s.max_degree
                )?;
            }
        }
    }
    writeln!(out, "elapsed {} ms", r.elapsed_ms)?;
    Ok(())
}

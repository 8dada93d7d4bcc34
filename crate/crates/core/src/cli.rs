//! Command-line front end. Results go to stdout as JSON; failures go to
//! stderr as `{"error": {"kind": ..., "message": ...}}`.
//!
//! Exit codes: 0 success, 1 a verified property fails, 2 usage or input
//! error, 3 search budget exhausted.

use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bipartite_order::connected_optimal_ordering;
use crate::budget::{Budget, Decided};
use crate::chromatic::{bipartite_colour, exact_edge_colouring, vizing_colour};
use crate::colouring::EdgeColouring;
use crate::gadgets::{counterexample_subcubic, gadget_gv, gadget_h, q_plus, reduce};
use crate::graph::{EdgeId, Graph, Vertex};
use crate::greedy::{greedy_colour, ConnectedOrdering};
use crate::io::{graph_to_json, read_graph, read_text, to_dot, ColouringJson, IoError, OrderingJson};
use crate::oracle::{connected_chromatic_index, CgcQuery, Witness};
use crate::subcubic_order::subcubic_ordering;

#[derive(Debug, Parser)]
#[command(name = "greedy-edge", version, about = "Connected greedy edge colouring toolkit")]
pub struct Cli {
    /// Reserved for randomised features; every command is deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Proper edge colouring of a graph.
    Colour {
        graph: PathBuf,
        #[command(flatten)]
        method: ColourMethod,
        #[arg(long, default_value_t = Budget::default().0)]
        budget: u64,
    },
    /// Connected ordering from a start vertex, with its greedy colour count.
    Order {
        graph: PathBuf,
        /// Vertex id or label.
        #[arg(long)]
        start: String,
        #[command(flatten)]
        method: OrderMethod,
    },
    /// Check an ordering or a colouring against a graph.
    Verify {
        graph: PathBuf,
        file: PathBuf,
        #[arg(long)]
        max_colours: Option<usize>,
    },
    /// Exhaustive search for a connected greedy colouring.
    Oracle {
        graph: PathBuf,
        /// Colour bound; without it the connected greedy chromatic index is computed.
        #[arg(long)]
        k: Option<usize>,
        /// Edge id, or two vertex labels such as `su` or `s-u`.
        #[arg(long)]
        start_edge: Option<String>,
        #[arg(long, requires = "start_edge")]
        precolour: Option<usize>,
        #[arg(long, default_value_t = Budget::default().0)]
        budget: u64,
        #[arg(long)]
        no_memo: bool,
    },
    /// Emit a gadget graph.
    Gadget {
        kind: GadgetKind,
        #[arg(long, default_value_t = 3)]
        delta: usize,
    },
    /// Attach a gadget to every vertex of a d-regular graph.
    Reduce {
        graph: PathBuf,
        #[arg(long)]
        d: usize,
    },
    /// Graphviz export, optionally with a colouring.
    Dot {
        graph: PathBuf,
        #[arg(long)]
        colouring: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct ColourMethod {
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    vizing: bool,
    #[arg(long)]
    bipartite: bool,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct OrderMethod {
    #[arg(long)]
    bipartite: bool,
    #[arg(long)]
    subcubic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GadgetKind {
    Qplus,
    H,
    Gv,
    Counterexample,
}

/// Exit status of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    PropertyFails = 1,
    Indeterminate = 3,
}

const INPUT_ERROR: i32 = 2;

/// Runs the tool on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            report(err, "usage", &e.to_string());
            return INPUT_ERROR;
        }
    };
    match execute(&cli.command, out) {
        Ok(status) => status as i32,
        Err(e) => {
            let kind = if e.chain().any(|c| c.downcast_ref::<IoError>().is_some()) {
                "input"
            } else {
                "precondition"
            };
            report(err, kind, &format!("{e:#}"));
            INPUT_ERROR
        }
    }
}

fn report(err: &mut dyn Write, kind: &str, message: &str) {
    let body = json!({ "error": { "kind": kind, "message": message.trim_end() } });
    let _ = writeln!(err, "{body}");
}

fn emit(out: &mut dyn Write, value: &Value) -> anyhow::Result<()> {
    writeln!(out, "{value}")?;
    Ok(())
}

fn load(path: &Path) -> anyhow::Result<Graph> {
    Ok(read_graph(path)?)
}

fn vertex_arg(g: &Graph, text: &str) -> anyhow::Result<Vertex> {
    if let Some(v) = g.find_label(text) {
        return Ok(v);
    }
    let v: Vertex = text.parse().map_err(|_| anyhow!("no vertex named {text:?}"))?;
    if v >= g.vertex_count() {
        bail!("vertex {v} does not exist");
    }
    Ok(v)
}

/// An edge id, `a-b` with two vertex names, or two labels written together.
fn edge_arg(g: &Graph, text: &str) -> anyhow::Result<EdgeId> {
    if let Ok(e) = text.parse::<EdgeId>() {
        if e >= g.edge_count() {
            bail!("edge {e} does not exist");
        }
        return Ok(e);
    }
    let pairs: Vec<(String, String)> = match text.split_once('-') {
        Some((a, b)) => vec![(a.to_owned(), b.to_owned())],
        None => text
            .char_indices()
            .skip(1)
            .map(|(i, _)| (text[..i].to_owned(), text[i..].to_owned()))
            .collect(),
    };
    for (a, b) in pairs {
        if let (Some(a), Some(b)) = (g.find_label(&a), g.find_label(&b)) {
            return g.edge_between(a, b).ok_or_else(|| anyhow!("no edge between {a} and {b}"));
        }
    }
    bail!("cannot resolve edge {text:?}")
}

fn colouring_value(alpha: &EdgeColouring) -> Value {
    serde_json::to_value(ColouringJson::new(alpha)).expect("serialisable")
}

fn witness_fields(w: &Witness) -> Value {
    json!({ "order": w.ordering.edges(), "colours": w.colouring.as_slice() })
}

fn execute(command: &Command, out: &mut dyn Write) -> anyhow::Result<Status> {
    match command {
        Command::Colour { graph, method, budget } => {
            let g = load(graph)?;
            let (alpha, name) = if method.vizing {
                (vizing_colour(&g), "vizing")
            } else if method.bipartite {
                (bipartite_colour(&g)?, "bipartite")
            } else {
                match exact_edge_colouring(&g, Budget(*budget)) {
                    Decided::Value((_, alpha)) => (alpha, "exact"),
                    Decided::Indeterminate { explored } => {
                        emit(out, &json!({ "result": "indeterminate", "explored": explored }))?;
                        return Ok(Status::Indeterminate);
                    }
                }
            };
            let mut v = colouring_value(&alpha);
            v["method"] = json!(name);
            emit(out, &v)?;
            Ok(Status::Ok)
        }
        Command::Order { graph, start, method } => {
            let g = load(graph)?;
            let v = vertex_arg(&g, start)?;
            let bipartite = method.bipartite || (!method.subcubic && g.bipartition().is_bipartite());
            let (ordering, used, name) = if bipartite {
                let r = connected_optimal_ordering(&g, v)?;
                (r.ordering, r.greedy.colours_used, "bipartite")
            } else {
                let r = subcubic_ordering(&g, v)?;
                (r.ordering, r.greedy.colours_used, "subcubic")
            };
            let j = OrderingJson {
                order: ordering.into_edges(),
                colours_used: Some(used),
                start: Some(v),
            };
            let mut value = serde_json::to_value(j)?;
            value["method"] = json!(name);
            emit(out, &value)?;
            Ok(Status::Ok)
        }
        Command::Verify { graph, file, max_colours } => {
            let g = load(graph)?;
            let text = read_text(file)?;
            let doc: Value = serde_json::from_str(&text).map_err(IoError::from)?;
            let report = if doc.get("order").is_some() {
                let j: OrderingJson = serde_json::from_value(doc).map_err(IoError::from)?;
                verify_ordering(&g, &j.order, *max_colours)
            } else if doc.get("colours").is_some() {
                let j: ColouringJson = serde_json::from_value(doc).map_err(IoError::from)?;
                verify_colouring(&g, &j.colouring().map_err(IoError::from)?, *max_colours)
            } else {
                bail!("{} holds neither an \"order\" nor a \"colours\" field", file.display());
            };
            let valid = report["valid"].as_bool().unwrap_or(false);
            emit(out, &report)?;
            Ok(if valid { Status::Ok } else { Status::PropertyFails })
        }
        Command::Oracle {
            graph,
            k,
            start_edge,
            precolour,
            budget,
            no_memo,
        } => {
            let g = load(graph)?;
            let budget = Budget(*budget);
            let Some(k) = k else {
                if start_edge.is_some() {
                    bail!("--start-edge needs --k");
                }
                return match connected_chromatic_index(&g, budget)? {
                    Decided::Value((k, w)) => {
                        let mut v = witness_fields(&w);
                        v["connected_chromatic_index"] = json!(k);
                        emit(out, &v)?;
                        Ok(Status::Ok)
                    }
                    Decided::Indeterminate { explored } => {
                        emit(out, &json!({ "result": "indeterminate", "explored": explored }))?;
                        Ok(Status::Indeterminate)
                    }
                };
            };
            let mut query = CgcQuery::new(*k).budget(budget).memo(!no_memo);
            if let Some(text) = start_edge {
                query = query.start(edge_arg(&g, text)?);
            }
            if let Some(c) = precolour {
                query = query.precolour(*c);
            }
            match query.run(&g)? {
                Decided::Value(Some(w)) => {
                    let mut v = witness_fields(&w);
                    v["result"] = json!(true);
                    emit(out, &v)?;
                    Ok(Status::Ok)
                }
                Decided::Value(None) => {
                    emit(out, &json!({ "result": false }))?;
                    Ok(Status::Ok)
                }
                Decided::Indeterminate { explored } => {
                    emit(out, &json!({ "result": "indeterminate", "explored": explored }))?;
                    Ok(Status::Indeterminate)
                }
            }
        }
        Command::Gadget { kind, delta } => {
            let g = match kind {
                GadgetKind::Qplus => q_plus(*delta)?.graph,
                GadgetKind::H => gadget_h(*delta)?.graph,
                GadgetKind::Gv => gadget_gv(*delta)?.graph,
                GadgetKind::Counterexample => counterexample_subcubic(),
            };
            writeln!(out, "{}", graph_to_json(&g))?;
            Ok(Status::Ok)
        }
        Command::Reduce { graph, d } => {
            let g = load(graph)?;
            let r = reduce(&g, *d)?;
            writeln!(out, "{}", graph_to_json(&r.graph))?;
            Ok(Status::Ok)
        }
        Command::Dot { graph, colouring } => {
            let g = load(graph)?;
            let alpha = match colouring {
                Some(path) => {
                    let j: ColouringJson = serde_json::from_str(&read_text(path)?).map_err(IoError::from)?;
                    let alpha = j.colouring().map_err(IoError::from)?;
                    alpha.check_against(&g).map_err(IoError::from).context("colouring does not fit the graph")?;
                    Some(alpha)
                }
                None => None,
            };
            write!(out, "{}", to_dot(&g, alpha.as_ref()))?;
            Ok(Status::Ok)
        }
    }
}

fn verify_ordering(g: &Graph, order: &[EdgeId], bound: Option<usize>) -> Value {
    let mut errors = Vec::new();
    let connected = match ConnectedOrdering::new(g, order.to_vec()) {
        Ok(_) => true,
        Err(e) => {
            errors.push(e.to_string());
            false
        }
    };
    let complete = connected && order.len() == g.edge_count();
    if connected && !complete {
        errors.push(format!("ordering covers {} of {} edges", order.len(), g.edge_count()));
    }
    let greedy = if complete { greedy_colour(g, order).ok() } else { None };
    let used = greedy.as_ref().map(|r| r.colours_used);
    let proper = greedy.as_ref().is_some_and(|r| r.colouring.is_proper(g));
    let within = match (bound, used) {
        (Some(k), Some(u)) => u <= k,
        (Some(_), None) => false,
        (None, _) => true,
    };
    if let (Some(k), Some(u)) = (bound, used) {
        if u > k {
            errors.push(format!("greedy used {u} colours, more than {k}"));
        }
    }
    json!({
        "valid": connected && complete && proper && within,
        "kind": "ordering",
        "connected": connected,
        "complete": complete,
        "proper": proper,
        "colours_used": used,
        "within_bound": within,
        "colours": greedy.map(|r| r.colouring.as_slice().to_vec()),
        "errors": errors,
    })
}

fn verify_colouring(g: &Graph, alpha: &EdgeColouring, bound: Option<usize>) -> Value {
    let mut errors = Vec::new();
    let fits = alpha.check_against(g).map_err(|e| errors.push(e.to_string())).is_ok();
    let complete = fits && alpha.is_total();
    if fits && !complete {
        errors.push("some edges are uncoloured".to_owned());
    }
    let proper = fits && alpha.is_proper(g);
    if fits && !proper {
        errors.push("two edges of the same colour share a vertex".to_owned());
    }
    let used = alpha.max_colour();
    let within = bound.is_none_or(|k| used <= k);
    if !within {
        errors.push(format!("uses {used} colours, more than {}", bound.unwrap()));
    }
    json!({
        "valid": complete && proper && within,
        "kind": "colouring",
        "complete": complete,
        "proper": proper,
        "colours_used": used,
        "within_bound": within,
        "errors": errors,
    })
}

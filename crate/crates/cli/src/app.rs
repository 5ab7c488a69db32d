//! Argument parsing and subcommand dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use knotstate::bounds;
use knotstate::montesinos::{self, LoopClass};
use knotstate::notation::{parse_braid, parse_montesinos};
use knotstate::states::{self, State};
use knotstate::{LinkDiagram, Smoothing};

use crate::corpus::{self, Family};
use crate::error::Result;
use crate::input::{Input, InputArgs, Source};
use crate::json::{bounds as bounds_json, error_value, to_text};
use crate::{dot, ingest, report};

const DEFAULT_CAP: usize = 18;

#[derive(Debug, Parser)]
#[command(
    name = "knotstate",
    version,
    about = "State-graph invariants, guts, Jones data and volume bounds of link diagrams"
)]
struct Cli {
    /// Print a human-readable rendering instead of JSON.
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full report: states, guts, Jones data, volume bounds.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// Largest crossing count for the Jones computation.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Jones polynomial and its extreme coefficients.
    Jones {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Guts intervals of the all-A and all-B state surfaces.
    Guts {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Volume bounds for the most specific family the input belongs to.
    Volume {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Fiber test for the A, B and Seifert states.
    Fibered {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Montesinos link from a slope vector.
    Montesinos {
        /// Slope vector, e.g. "M(1/3, -1/2, 2/5)".
        #[arg(long, alias = "montesinos")]
        slopes: String,
        #[arg(value_enum, default_value_t = MontesinosView::Report)]
        view: MontesinosView,
    },
    /// Braid word summary and closure.
    Braid {
        #[arg(long)]
        braid: String,
    },
    /// Blackboard n-cable of a diagram.
    Cable {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// State graph in Graphviz DOT.
    Dot {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = StateArg::A)]
        state: StateArg,
    },
    /// Read a KnotInfo CSV (columns `name`, `pd_notation`) into a fixture file.
    Ingest {
        csv: PathBuf,
        #[arg(long, default_value = "knotstate-fixtures.json")]
        out: PathBuf,
    },
    /// Seeded diagram corpus as PD text.
    Corpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        max_crossings: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MontesinosView {
    Report,
    Volume,
    Normalize,
    Taxonomy,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StateArg {
    A,
    B,
}

enum Output {
    Json(Value),
    Raw(String),
}

/// Runs the front end on `args` (including the program name) and returns the exit code.
pub fn run(args: &[String], out: &mut impl Write, err: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let as_text = cli.text;
    match dispatch(cli.command) {
        Ok(Output::Json(v)) => {
            emit(out, &v, as_text);
            0
        }
        Ok(Output::Raw(s)) => {
            let _ = write!(out, "{s}");
            0
        }
        Err(e) => {
            emit(out, &error_value(&e), as_text);
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn emit(out: &mut impl Write, v: &Value, as_text: bool) {
    let s = if as_text { to_text(v) } else { serde_json::to_string_pretty(v).unwrap_or_default() };
    let _ = writeln!(out, "{s}");
}

fn dispatch(cmd: Command) -> Result<Output> {
    Ok(match cmd {
        Command::Analyze { input, cap } => Output::Json(report::analyze(&input.resolve()?, cap)),
        Command::Jones { input, cap } => {
            let inp = input.resolve()?;
            let p = knotstate::jones::jones_polynomial_with_cap(&inp.diagram, cap)?;
            let mut v = report::jones_json(&p.report());
            v["input"] = inp.echo();
            Output::Json(v)
        }
        Command::Guts { input } => {
            let inp = input.resolve()?;
            let mut v = report::guts_block(&inp);
            v["input"] = inp.echo();
            Output::Json(v)
        }
        Command::Volume { input } => {
            let inp = input.resolve()?;
            let (family, b) = report::volume_bounds(&inp)?;
            let mut v = bounds_json(&b);
            v["family"] = json!(family);
            v["input"] = inp.echo();
            Output::Json(v)
        }
        Command::Fibered { input } => {
            let inp = input.resolve()?;
            let mut v = report::fibered(&inp.diagram);
            v["input"] = inp.echo();
            Output::Json(v)
        }
        Command::Montesinos { slopes, view } => Output::Json(montesinos_view(&slopes, view)?),
        Command::Braid { braid } => Output::Json(braid_view(&braid)?),
        Command::Cable { input, n } => Output::Json(cable_view(&input.resolve()?, n)?),
        Command::Dot { input, state } => {
            let s = match state {
                StateArg::A => Smoothing::A,
                StateArg::B => Smoothing::B,
            };
            Output::Raw(dot::state_graph_dot(&input.resolve()?.diagram, s)?)
        }
        Command::Ingest { csv, out } => {
            let set = ingest::ingest_knotinfo(&csv)?;
            ingest::save_fixtures(&out, &set)?;
            Output::Json(json!({
                "fixtures": set.fixtures.len(),
                "names": set.fixtures.iter().map(|f| f.name.clone()).collect::<Vec<_>>(),
                "out": out.display().to_string(),
                "warnings": set.warnings,
            }))
        }
        Command::Corpus { seed, family, count, max_crossings } => {
            let fam: Family = family.parse()?;
            let items = corpus::generate(seed, fam, count, max_crossings)?;
            let list: Vec<Value> = items
                .iter()
                .map(|it| {
                    json!({
                        "label": it.label,
                        "crossings": it.diagram.crossing_count(),
                        "pd": it.diagram.to_pd().to_string(),
                    })
                })
                .collect();
            Output::Json(json!({"seed": seed, "family": fam.name(), "items": list}))
        }
    })
}

fn montesinos_view(slopes: &str, view: MontesinosView) -> Result<Value> {
    let v = parse_montesinos(slopes)?;
    let n = montesinos::normalize(&v);
    let echo = json!({"kind": "montesinos", "text": slopes, "normal_form": n.to_vector().to_string()});
    let mut out = match view {
        MontesinosView::Report => report::montesinos_block(&n),
        MontesinosView::Volume => bounds_json(&bounds::montesinos_bounds::<f64>(&n)?),
        MontesinosView::Normalize => json!({
            "normal_form": n.to_vector().to_string(),
            "positive": n.positive_count,
            "negative": n.negative_count,
            "sum": n.sum.to_string(),
            "alternating": n.is_alternating(),
            "q_half": n.q_half(),
            "crossings": montesinos::expected_crossings(&n),
        }),
        MontesinosView::Taxonomy => {
            let loops: Vec<Value> = montesinos::negative_loop_taxonomy(&n)
                .iter()
                .map(|p| {
                    let class = match p.class {
                        LoopClass::TwistRegion => "twist-region",
                        LoopClass::NegativeTangle => "negative-tangle",
                        LoopClass::TwoPositive => "two-positive",
                    };
                    json!({"class": class, "tangle": p.tangle})
                })
                .collect();
            json!({"loops": loops})
        }
    };
    out["input"] = echo;
    Ok(out)
}

fn braid_view(text: &str) -> Result<Value> {
    let b = parse_braid(text)?;
    let d = LinkDiagram::braid_closure(&b)?;
    let positive_family = b.is_positive() && b.letters.iter().all(|&(_, e)| e >= 3);
    let bounds = if positive_family {
        match bounds::positive_braid_bounds::<f64>(&b) {
            Ok(v) => bounds_json(&v),
            Err(e) => crate::json::core_error(&e),
        }
    } else {
        Value::Null
    };
    Ok(json!({
        "input": {"kind": "braid", "text": text},
        "normalized": b.to_string(),
        "strands": b.strands,
        "crossings": b.crossing_count(),
        "positive": b.is_positive(),
        "components": b.permutation_cycles(),
        "pd": d.to_pd().to_string(),
        "diagram": report::diagram_stats(&d),
        "fibered": report::fibered(&d),
        "positive_braid_bounds": bounds,
    }))
}

fn reduced_chi_a(d: &LinkDiagram) -> Result<i64> {
    let (_, g, r) = states::graphs(d, &State::all_a(d.crossing_count()))?;
    Ok(states::euler_data(&g, &r).chi_reduced)
}

fn cable_view(input: &Input, n: usize) -> Result<Value> {
    let d = &input.diagram;
    let c = d.cable(n)?;
    let (before, after) = (reduced_chi_a(d)?, reduced_chi_a(&c)?);
    let mut v = json!({
        "input": input.echo(),
        "n": n,
        "crossings": c.crossing_count(),
        "components": c.component_count(),
        "pd": c.to_pd().to_string(),
        "chi_reduced_A": {"diagram": before, "cable": after, "equal": before == after},
    });
    if matches!(input.source, Source::Montesinos(_)) {
        v["note"] = json!("cable of the built Montesinos diagram");
    }
    Ok(v)
}

//! `vkl`: switch verification and determinant invariants from the command line.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use vkl::detinv::{check_minor_independence, delta0, delta1, DetError, UnitOrbit};
use vkl::diagmod::PresentationMatrix;
use vkl::exactalg::parse_ratfun;
use vkl::knots::{builtin, knot_names, load_file, load_from_dir, Knot};
use vkl::switchlab::{catalog_names, printed_check_by_name, switch_by_name, verify_switch, Switch};

#[derive(Parser)]
#[command(name = "vkl", version, about = "Switch modules and determinant invariants of virtual knots")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute Delta_0, Delta_1 or the codimension-one minors of a knot.
    Invariant {
        /// Catalog name, or a path to a .braid / .vkd file.
        #[arg(long)]
        knot: String,
        #[arg(long)]
        switch: String,
        /// Bind a switch parameter, e.g. `--param t=1`. Repeatable.
        #[arg(long = "param", value_name = "NAME=EXPR", value_parser = key_value)]
        params: Vec<(String, String)>,
        /// Augment the switch by a monomial, usually `t`.
        #[arg(long)]
        augment: Option<String>,
        #[arg(long, value_enum, default_value_t = Which::Delta0)]
        which: Which,
        #[arg(long)]
        json: bool,
        /// Directory searched for NAME.braid and NAME.vkd instead of the shipped set.
        #[arg(long)]
        fixtures: Option<PathBuf>,
        /// Use the crossing diagram even when a braid word is available.
        #[arg(long)]
        diagram: bool,
    },
    /// Check the seven switch axioms and invertibility.
    Verify {
        #[arg(long)]
        switch: String,
        #[arg(long = "param", value_name = "NAME=EXPR", value_parser = key_value)]
        params: Vec<(String, String)>,
    },
    /// List catalog knots or switches.
    List {
        #[arg(value_enum)]
        kind: ListKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Delta0,
    Delta1,
    Minors,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListKind {
    Knots,
    Switches,
}

enum Failure {
    Input(String),
    Unsupported(String),
    Report,
}

impl From<DetError> for Failure {
    fn from(e: DetError) -> Self {
        match e {
            DetError::UnsupportedParams(_) => Failure::Unsupported(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn key_value(s: &str) -> Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected NAME=EXPR, got {s:?}"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

fn load_knot(spec: &str, fixtures: Option<&Path>) -> Result<Knot, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        return load_file(path).map_err(input);
    }
    match fixtures {
        Some(dir) => load_from_dir(dir, spec).map_err(input),
        None => builtin(spec).map_err(input),
    }
}

fn make_switch(name: &str, params: &[(String, String)], augment: Option<&str>) -> Result<Switch, Failure> {
    let s = switch_by_name(name, params).map_err(input)?;
    match augment {
        None => Ok(s),
        Some(t) => {
            if s.unit_vars.iter().any(|v| v == t) {
                return Err(Failure::Input(format!("switch {name} already carries {t}")));
            }
            let m = parse_ratfun(t).map_err(input)?;
            s.augment(&m).map_err(input)
        }
    }
}

fn orbit(u: &UnitOrbit) -> String {
    u.to_string()
}

#[allow(clippy::too_many_arguments)]
fn cmd_invariant(
    knot: &str,
    switch: &str,
    params: &[(String, String)],
    augment: Option<&str>,
    which: Which,
    json: bool,
    fixtures: Option<&Path>,
    diagram: bool,
) -> Result<(), Failure> {
    let k = load_knot(knot, fixtures)?;
    let s = make_switch(switch, params, augment)?;
    let p: PresentationMatrix = if diagram {
        k.diagram_presentation(&s).ok_or_else(|| Failure::Input(format!("{} has no crossing diagram", k.name)))?
    } else {
        k.presentation(&s)
    }
    .map_err(input)?;
    let (label, value, unit_orbit) = match which {
        Which::Delta0 | Which::Delta1 => {
            let v = if matches!(which, Which::Delta0) { delta0(&p, &s)? } else { delta1(&p, &s)? };
            let label = if matches!(which, Which::Delta0) { "delta0" } else { "delta1" };
            if !json {
                println!("{v}");
                return Ok(());
            }
            (label, json!(v.render()), orbit(&v.unit_orbit))
        }
        Which::Minors => {
            let rep = check_minor_independence(&p, &s)?;
            if !json {
                println!("{rep}");
                return Ok(());
            }
            let table: Vec<Vec<String>> = rep.table.iter().map(|r| r.iter().map(|v| v.render()).collect()).collect();
            let u = UnitOrbit { monomial_vars: s.unit_vars.clone() };
            ("minors", json!(table), orbit(&u))
        }
    };
    let out = json!({
        "knot": k.name,
        "switch": s.name,
        "which": label,
        "value": value,
        "unit_orbit": unit_orbit,
    });
    println!("{}", serde_json::to_string_pretty(&out).expect("json values serialize"));
    Ok(())
}

fn cmd_verify(switch: &str, params: &[(String, String)]) -> Result<(), Failure> {
    let s = make_switch(switch, params, None)?;
    let report = verify_switch(&s);
    println!("{report}");
    if let Some(check) = printed_check_by_name(switch, params).map_err(input)? {
        println!("{check}");
    }
    if report.passes() {
        Ok(())
    } else {
        Err(Failure::Report)
    }
}

fn cmd_list(kind: ListKind) {
    match kind {
        ListKind::Knots => {
            for name in knot_names() {
                let k = builtin(name).expect("shipped fixtures parse");
                println!("{name:<20} {}", k.note);
            }
        }
        ListKind::Switches => {
            for (name, about) in catalog_names() {
                println!("{name:<10} {about}");
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let r = match &cli.cmd {
        Cmd::Invariant { knot, switch, params, augment, which, json, fixtures, diagram } => {
            cmd_invariant(knot, switch, params, augment.as_deref(), *which, *json, fixtures.as_deref(), *diagram)
        }
        Cmd::Verify { switch, params } => cmd_verify(switch, params),
        Cmd::List { kind } => {
            cmd_list(*kind);
            Ok(())
        }
    };
    match r {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Report) => ExitCode::from(1),
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Unsupported(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

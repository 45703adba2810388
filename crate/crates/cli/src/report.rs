use std::process::ExitCode;

use kbideal_core::diagram::{kauffman_bracket_with, parity_split, reduce_tangle_with, BracketOptions};
use kbideal_core::ideals::{even_ideal, full_ideal, odd_ideal};
use kbideal_core::verify::{run_all, run_check, CheckReport, CHECKS};
use kbideal_core::{
    close, link_determinant, omega_contract, reduce_by_delta, solve_graph_coefficients, CatalogError, ClosureSpec,
    DiagramError, IdealError, LaurentError, PairingError, SkeinVector,
};
use serde_json::{json, Value};

use crate::input::{load_link, load_tangle};
use crate::{Command, Parity};

/// A failure reported on stderr, tagged with the error type it came from.
#[derive(Debug)]
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
}

impl Failure {
    pub fn usage(message: String) -> Self {
        Self { kind: "usage", message }
    }

    pub fn io(path: &str, e: std::io::Error) -> Self {
        Self { kind: "io", message: format!("{path}: {e}") }
    }
}

macro_rules! failure_from {
    ($($t:ident),*) => {$(
        impl From<$t> for Failure {
            fn from(e: $t) -> Self {
                Self { kind: stringify!($t), message: e.to_string() }
            }
        }
    )*};
}

failure_from!(CatalogError, DiagramError, IdealError, LaurentError, PairingError);

fn emit(json: bool, text: String, value: Value) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        print!("{text}");
    }
}

fn indent(block: &str) -> String {
    let body = if block.trim().is_empty() { "0" } else { block };
    body.lines().map(|l| format!("  {l}\n")).collect()
}

fn vector_json(v: &SkeinVector) -> Value {
    let terms: Vec<Value> = v
        .iter()
        .map(|(b, c)| json!({ "arc": format!("{:?}", b.arc).to_lowercase(), "cores": b.cores, "coefficient": c.to_string() }))
        .collect();
    Value::Array(terms)
}

pub fn run(command: &Command, json_out: bool) -> Result<ExitCode, Failure> {
    match command {
        Command::Bracket { input } => {
            let link = load_link(input)?;
            let b = kauffman_bracket_with(&link, &BracketOptions::from_env())?;
            let reduced = reduce_by_delta(&b).map(|r| r.to_string()).ok();
            let mut text = format!("{b}\n");
            if let Some(r) = &reduced {
                text += &format!("reduced: {r}\n");
            }
            emit(json_out, text, json!({ "bracket": b.to_string(), "reduced": reduced }));
        }
        Command::Reduce { input } => {
            let t = load_tangle(input)?;
            let v = reduce_tangle_with(&t, &BracketOptions::from_env())?;
            let (even, odd) = parity_split(&v);
            let text = [("vector", &v), ("even part", &even), ("odd part", &odd)]
                .iter()
                .map(|(title, x)| format!("{title}:\n{}", indent(&x.to_string())))
                .collect();
            emit(json_out, text, json!({ "vector": vector_json(&v), "even": vector_json(&even), "odd": vector_json(&odd) }));
        }
        Command::Coeffs { input, max_i } => {
            let c = solve_graph_coefficients(&load_tangle(input)?, *max_i)?;
            let map: serde_json::Map<String, Value> = c.iter().map(|(g, v)| (g.to_string(), json!(v.to_string()))).collect();
            emit(json_out, c.to_string(), json!({ "coefficients": map }));
        }
        Command::Ideal { input, parity } => {
            let t = load_tangle(input)?;
            let ideal = match parity {
                Parity::Even => even_ideal(&t)?,
                Parity::Odd => odd_ideal(&t)?,
                Parity::Full => full_ideal(&t)?,
            };
            let trivial = ideal.is_trivial();
            let verdict = if trivial { "TRIVIAL" } else { "NON-TRIVIAL" };
            let d = omega_contract(&ideal);
            let gens: Vec<String> = ideal.canonical_generators().iter().map(ToString::to_string).collect();
            let text = format!("{ideal}\n{verdict}\ninteger contraction at A = w: {d}\n");
            emit(
                json_out,
                text,
                json!({ "parity": format!("{parity:?}").to_lowercase(), "generators": gens, "trivial": trivial, "contraction": d.to_string() }),
            );
        }
        Command::Det { input } => {
            let d = link_determinant(&load_link(input)?)?;
            emit(json_out, format!("{d}\n"), json!({ "determinant": d.to_string() }));
        }
        Command::Closure { input, winding, twists, curls } => {
            let t = load_tangle(input)?;
            let spec = ClosureSpec::generated(*winding, *twists, *curls);
            let link = close(&t, &spec)?;
            let parity = if spec.is_odd() { "odd" } else { "even" };
            let text = format!("# {parity} closure {spec}\n{link}");
            emit(json_out, text, json!({ "closure": spec.to_string(), "odd": spec.is_odd(), "diagram": link.to_string() }));
        }
        Command::Verify { checks } => return verify(checks, json_out),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(checks: &[u32], json_out: bool) -> Result<ExitCode, Failure> {
    let reports: Vec<CheckReport> = if checks.is_empty() {
        run_all()
    } else {
        checks
            .iter()
            .map(|&id| {
                run_check(id).ok_or_else(|| Failure::usage(format!("no check {id}; checks are 1 to {}", CHECKS.len())))
            })
            .collect::<Result<_, _>>()?
    };
    let mut text = String::new();
    for r in &reports {
        let status = match (r.passed, r.known_issue) {
            (true, _) => "PASS",
            (false, Some(_)) => "KNOWN",
            (false, None) => "FAIL",
        };
        text += &format!("{status} {}: {}\n", r.id, r.title);
        for d in &r.details {
            text += &format!("    {d}\n");
        }
        if let (false, Some(why)) = (r.passed, r.known_issue) {
            text += &format!("    {why}\n");
        }
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    text += &format!("{passed}/{} checks pass\n", reports.len());
    let value: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "id": r.id, "title": r.title, "passed": r.passed, "known_issue": r.known_issue, "details": r.details }))
        .collect();
    emit(json_out, text, json!({ "checks": value }));
    Ok(if passed == reports.len() {
        ExitCode::SUCCESS
    } else if reports.iter().all(CheckReport::acceptable) {
        ExitCode::from(2)
    } else {
        ExitCode::FAILURE
    })
}

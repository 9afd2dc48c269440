//! `pcid` — command-line front end for the pcid reasoning toolkit.
//!
//! Exit codes: 0 success/positive verdict, 1 negative verdict, 2 usage or
//! parse error, 3 resource limit, 4 out-of-scope.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use pcid::calculus::{check_proof, discharge_totality};
use pcid::prover::{prove, ProveOutcome};
use pcid::semantics::{
    satisfiable, wf_trace, Bounds, DefaultPolicy, Interpretation, Sat, Totality, TruthValue,
    WfStepKind, WfTrace,
};
use pcid::syntax::{Atom, Definition, Formula};
use pcid::textio::{parse_proof, parse_sequent, parse_theory, print_proof};
use pcid::Error;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_OUT_OF_SCOPE: u8 = 4;

#[derive(Parser)]
#[command(
    name = "pcid",
    version,
    about = "Reasoning toolkit for propositional logic with inductive definitions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    /// Override the maximum vocabulary size for enumeration and proving.
    #[arg(long, global = true, value_name = "N")]
    max_atoms: Option<usize>,
    /// Override the maximum number of case-split extensions.
    #[arg(long, global = true, value_name = "N")]
    max_extensions: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Decide satisfiability of a theory and print a first model.
    Solve {
        /// Theory file (`-` for stdin).
        file: String,
    },
    /// Compute the well-founded model of a definition.
    Wfmodel {
        /// File holding exactly one statement, a definition (`-` for stdin).
        file: String,
        /// Two-valued assignment of the open atoms, e.g. `o=T,q=F`.
        #[arg(long, value_name = "ASSIGNMENTS", default_value = "")]
        open: String,
        /// Also print every derivation step of the induction.
        #[arg(long)]
        trace: bool,
    },
    /// Check whether a definition is total in the context of a theory.
    Totality {
        /// Theory file (`-` for stdin).
        file: String,
        /// Index of the definition among the file's definition statements.
        #[arg(long, value_name = "INDEX", default_value_t = 0)]
        def: usize,
    },
    /// Prove a sequent or report why it cannot be proved.
    Prove {
        /// Sequent file (`-` for stdin).
        file: String,
        /// Write the proof to a file and print `PROVED` instead.
        #[arg(short, long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Check a serialized proof.
    Check {
        /// Proof file (`-` for stdin).
        file: String,
        /// Also verify the totality obligations of `def-intro` steps.
        #[arg(long)]
        verify_totality: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut bounds = Bounds::default();
    if let Some(n) = cli.common.max_atoms {
        bounds.max_enum_atoms = n;
        bounds.max_prover_atoms = n;
    }
    if let Some(n) = cli.common.max_extensions {
        bounds.max_extensions = n;
    }
    let json = cli.common.json;
    let code = match cli.command {
        Command::Solve { file } => cmd_solve(&file, json, &bounds),
        Command::Wfmodel { file, open, trace } => cmd_wfmodel(&file, &open, trace, json),
        Command::Totality { file, def } => cmd_totality(&file, def, json, &bounds),
        Command::Prove { file, output } => cmd_prove(&file, output.as_deref(), json, &bounds),
        Command::Check {
            file,
            verify_totality,
        } => cmd_check(&file, verify_totality, json, &bounds),
    };
    match code {
        Ok(code) => ExitCode::from(code),
        Err(Error::ResourceLimit { what, size, bound }) => {
            eprintln!("resource limit: {what} of size {size} exceeds the bound {bound}");
            if json {
                println!("{}", json!({ "outcome": "resource-limit" }));
            }
            ExitCode::from(EXIT_RESOURCE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_input(path: &str) -> Result<String, Error> {
    let result = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map(|_| buf)
    } else {
        std::fs::read_to_string(path)
    };
    result.map_err(|e| Error::contract("cli", format!("cannot read `{path}`: {e}")))
}

fn interp_text(i: &Interpretation) -> String {
    i.to_string()
}

fn interp_json(i: &Interpretation) -> Value {
    let mut map = serde_json::Map::new();
    for (atom, value) in i.iter() {
        map.insert(atom.to_string(), Value::String(value.to_string()));
    }
    Value::Object(map)
}

fn cmd_solve(file: &str, json: bool, bounds: &Bounds) -> Result<u8, Error> {
    let text = read_input(file)?;
    let theory = parse_theory(&text).map_err(parse_error)?;
    match satisfiable(&theory, bounds)? {
        Sat::Model(m) => {
            if json {
                println!("{}", json!({ "result": "sat", "model": interp_json(&m) }));
            } else {
                println!("SAT");
                let line = interp_text(&m);
                if !line.is_empty() {
                    println!("{line}");
                }
            }
            Ok(EXIT_OK)
        }
        Sat::Unsat => {
            if json {
                println!("{}", json!({ "result": "unsat" }));
            } else {
                println!("UNSAT");
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn parse_open(spec: &str, d: &Definition) -> Result<Interpretation, Error> {
    let mut i = Interpretation::default();
    for part in spec.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, value) = part.trim().split_once('=').ok_or_else(|| {
            Error::contract("cli", format!("malformed assignment `{part}`: expected `atom=T` or `atom=F`"))
        })?;
        let atom = Atom::user(name.trim())?;
        let value = match value.trim() {
            "T" => TruthValue::T,
            "F" => TruthValue::F,
            other => {
                return Err(Error::contract(
                    "cli",
                    format!("malformed truth value `{other}`: expected `T` or `F`"),
                ))
            }
        };
        i.set(atom, value);
    }
    let open = d.open();
    let domain = i.domain();
    if domain != open {
        let missing: Vec<String> = open.difference(&domain).map(|a| a.to_string()).collect();
        let extra: Vec<String> = domain.difference(&open).map(|a| a.to_string()).collect();
        let mut parts = Vec::new();
        if !missing.is_empty() {
            parts.push(format!("missing: {}", missing.join(", ")));
        }
        if !extra.is_empty() {
            parts.push(format!("not open: {}", extra.join(", ")));
        }
        return Err(Error::contract(
            "cli",
            format!("--open must assign exactly the open atoms ({})", parts.join("; ")),
        ));
    }
    Ok(i)
}

fn step_heading(kind: &WfStepKind) -> String {
    match kind {
        WfStepKind::DeriveTrue(p) => format!("derive-true {p}"),
        WfStepKind::DeriveFalse(u) => {
            let atoms: Vec<String> = u.iter().map(|a| a.to_string()).collect();
            format!("derive-false {}", atoms.join(", "))
        }
    }
}

fn trace_json(trace: &WfTrace, include_steps: bool) -> Value {
    let mut out = serde_json::Map::new();
    out.insert("limit".into(), interp_json(&trace.limit));
    if include_steps {
        let steps: Vec<Value> = trace
            .steps
            .iter()
            .map(|s| match &s.kind {
                WfStepKind::DeriveTrue(p) => json!({
                    "kind": "derive-true",
                    "atom": p.to_string(),
                    "after": interp_json(&s.after),
                }),
                WfStepKind::DeriveFalse(u) => json!({
                    "kind": "derive-false",
                    "atoms": u.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                    "after": interp_json(&s.after),
                }),
            })
            .collect();
        out.insert("steps".into(), Value::Array(steps));
    }
    Value::Object(out)
}

fn cmd_wfmodel(file: &str, open: &str, trace: bool, json: bool) -> Result<u8, Error> {
    let text = read_input(file)?;
    let theory = parse_theory(&text).map_err(parse_error)?;
    let d = match theory.as_slice() {
        [Formula::Def(d)] => d.clone(),
        _ => {
            return Err(Error::contract(
                "cli",
                "the input must contain exactly one statement, a definition",
            ))
        }
    };
    let i_open = parse_open(open, &d)?;
    let t = wf_trace(&d, &i_open, &mut DefaultPolicy)?;
    if json {
        println!("{}", trace_json(&t, trace));
    } else {
        if trace {
            for (n, step) in t.steps.iter().enumerate() {
                println!(
                    "step {}: {} | {}",
                    n + 1,
                    step_heading(&step.kind),
                    interp_text(&step.after)
                );
            }
        }
        println!("limit: {}", interp_text(&t.limit));
    }
    Ok(EXIT_OK)
}

fn cmd_totality(file: &str, def: usize, json: bool, bounds: &Bounds) -> Result<u8, Error> {
    let text = read_input(file)?;
    let theory = parse_theory(&text).map_err(parse_error)?;
    let mut defs = Vec::new();
    let mut context = Vec::new();
    for f in theory {
        match f {
            Formula::Def(d) => defs.push(d),
            other => context.push(other),
        }
    }
    let total = defs.len();
    let mut defs = defs.into_iter();
    let Some(d) = defs.nth(def) else {
        return Err(Error::contract(
            "cli",
            format!("--def {def} is out of range: the input has {total} definition(s)"),
        ));
    };
    // Definitions other than the selected one stay in the context theory.
    context.extend(defs.map(Formula::Def));
    match pcid::semantics::is_total(&d, &context, bounds)? {
        Totality::Total => {
            if json {
                println!("{}", json!({ "result": "total" }));
            } else {
                println!("TOTAL");
            }
            Ok(EXIT_OK)
        }
        Totality::Witness(w) => {
            if json {
                println!(
                    "{}",
                    json!({ "result": "not-total", "witness": interp_json(&w) })
                );
            } else {
                println!("NOT TOTAL");
                let line = interp_text(&w);
                if !line.is_empty() {
                    println!("witness: {line}");
                }
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_prove(
    file: &str,
    output: Option<&std::path::Path>,
    json: bool,
    bounds: &Bounds,
) -> Result<u8, Error> {
    let text = read_input(file)?;
    let s = parse_sequent(&text).map_err(parse_error)?;
    match prove(&s, bounds)? {
        ProveOutcome::Proof(tree) => {
            let rendered = print_proof(&tree);
            if let Some(path) = output {
                std::fs::write(path, &rendered).map_err(|e| {
                    Error::contract("cli", format!("cannot write `{}`: {e}", path.display()))
                })?;
            }
            if json {
                println!("{}", json!({ "outcome": "proof", "proof": rendered }));
            } else if output.is_some() {
                println!("PROVED");
            } else {
                print!("{rendered}");
            }
            Ok(EXIT_OK)
        }
        ProveOutcome::CounterModel(m) => {
            if json {
                println!(
                    "{}",
                    json!({ "outcome": "counter-model", "model": interp_json(&m) })
                );
            } else {
                println!("INVALID");
                let line = interp_text(&m);
                if !line.is_empty() {
                    println!("{line}");
                }
            }
            Ok(EXIT_NEGATIVE)
        }
        ProveOutcome::OutOfScope(reason) => {
            if json {
                println!(
                    "{}",
                    json!({ "outcome": "out-of-scope", "reason": reason })
                );
            } else {
                println!("OUT OF SCOPE: {reason}");
            }
            Ok(EXIT_OUT_OF_SCOPE)
        }
        ProveOutcome::ResourceLimit => {
            if json {
                println!("{}", json!({ "outcome": "resource-limit" }));
            } else {
                println!("RESOURCE LIMIT");
            }
            Ok(EXIT_RESOURCE)
        }
    }
}

fn cmd_check(file: &str, verify_totality: bool, json: bool, bounds: &Bounds) -> Result<u8, Error> {
    let text = read_input(file)?;
    let tree = parse_proof(&text).map_err(parse_error)?;
    let report = check_proof(&tree);
    if !report.accepted {
        let reason = report
            .failure
            .as_ref()
            .map(|f| f.to_string())
            .unwrap_or_else(|| "unknown failure".into());
        if json {
            println!("{}", json!({ "accepted": false, "reason": reason }));
        } else {
            println!("REJECTED: {reason}");
        }
        return Ok(EXIT_NEGATIVE);
    }

    let mut obligations = Vec::new();
    let mut all_total = true;
    if verify_totality && report.uses_def_intro {
        for (d, totality) in discharge_totality(&report, bounds)? {
            let total = matches!(totality, Totality::Total);
            all_total &= total;
            obligations.push((d, totality));
        }
    }

    if json {
        let obs: Vec<Value> = obligations
            .iter()
            .map(|(d, t)| match t {
                Totality::Total => json!({ "definition": d.to_string(), "total": true }),
                Totality::Witness(w) => json!({
                    "definition": d.to_string(),
                    "total": false,
                    "witness": interp_json(w),
                }),
            })
            .collect();
        let mut out = serde_json::Map::new();
        out.insert("accepted".into(), Value::Bool(true));
        if verify_totality {
            out.insert("obligations".into(), Value::Array(obs));
        }
        println!("{}", Value::Object(out));
    } else {
        println!("ACCEPTED");
        for (d, t) in &obligations {
            match t {
                Totality::Total => println!("totality of {d}: TOTAL"),
                Totality::Witness(w) => {
                    println!("totality of {d}: NOT TOTAL (witness: {})", interp_text(w))
                }
            }
        }
    }
    Ok(if all_total { EXIT_OK } else { EXIT_NEGATIVE })
}

fn parse_error(e: pcid::textio::ParseError) -> Error {
    Error::contract("parse", e.to_string())
}

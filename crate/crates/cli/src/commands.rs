use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::json;
use weakll_core::laws::{self, LawResult, Status, SuiteConfig};
use weakll_dsl::{DslError, TypedItem, TypedProgram, Value};

use crate::polarity_laws::polarity_laws;
use crate::Failure;

type CmdResult = Result<(), Failure>;

fn emit(value: &impl Serialize, out: Option<&Path>) -> CmdResult {
    let mut text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct Summary {
    total: usize,
    passed: usize,
    failed: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct Report<'a> {
    dims: &'a [usize],
    degree: usize,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    filter: Option<&'a str>,
    summary: Summary,
    laws: Vec<LawResult>,
}

pub fn check_laws(dims: &[usize], degree: usize, seed: u64, filter: Option<&str>, out: Option<&Path>) -> CmdResult {
    if dims.is_empty() || dims.contains(&0) {
        return Err(Failure::Usage("--dims needs at least one dimension, each at least 1".into()));
    }
    let cfg = SuiteConfig { dims: dims.to_vec(), degree, seed, filter: filter.map(String::from) };
    let mut suite = laws::core_laws(&cfg);
    suite.extend(polarity_laws(seed).into_iter().filter(|l| laws::selected(filter, l)));
    if suite.is_empty() {
        return Err(Failure::Usage(format!("filter `{}` selects no laws", filter.unwrap_or(""))));
    }
    let results = laws::run(&suite);
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    let summary = Summary { total: results.len(), passed: count(Status::Pass), failed: count(Status::Fail), skipped: count(Status::Skipped) };
    let ok = laws::all_passed(&results);
    emit(&Report { dims, degree, seed, filter, summary, laws: results }, out)?;
    if ok {
        Ok(())
    } else {
        Err(Failure::Failed)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Prints `file:line:col: message` to stderr and a JSON diagnostic to stdout.
fn diagnose(path: &Path, e: &DslError) -> Failure {
    let sep = if e.span().is_some() { ":" } else { ": " };
    eprintln!("{}{sep}{e}", path.display());
    let (line, col) = e.span().map_or((None, None), |s| (Some(s.line), Some(s.col)));
    let _ = emit(&json!({ "ok": false, "error": { "line": line, "col": col, "message": e.to_string() } }), None);
    Failure::Failed
}

fn load(path: &Path) -> Result<TypedProgram, Failure> {
    let src = read(path)?;
    weakll_dsl::parse(&src).and_then(|p| weakll_dsl::typecheck(&p)).map_err(|e| diagnose(path, &e))
}

/// A binding is a sequence when it carries a `variant` field, a linear map
/// otherwise; decoding as that type directly gives precise errors.
fn bindings(path: &Path) -> Result<BTreeMap<String, Value>, Failure> {
    let bad = |e: serde_json::Error| Failure::Usage(format!("{}: {e}", path.display()));
    let raw: BTreeMap<String, serde_json::Value> = serde_json::from_str(&read(path)?).map_err(bad)?;
    raw.into_iter()
        .map(|(name, v)| {
            let value = if v.get("variant").is_some() {
                serde_json::from_value(v).map(Value::Seq)
            } else {
                serde_json::from_value(v).map(Value::Map)
            };
            value.map(|value| (name.clone(), value)).map_err(|e| Failure::Usage(format!("{}: `{name}`: {e}", path.display())))
        })
        .collect()
}

pub fn eval(path: &Path, bind: Option<&Path>) -> CmdResult {
    let program = load(path)?;
    let inputs = match bind {
        Some(b) => bindings(b)?,
        None => BTreeMap::new(),
    };
    let values = weakll_dsl::evaluate(&program, &inputs).map_err(|e| diagnose(path, &e))?;
    let out: Vec<_> = values
        .into_iter()
        .map(|(name, value)| json!({ "name": name, "type": value.ty().to_string(), "value": value }))
        .collect();
    emit(&json!({ "ok": true, "values": out }), None)
}

pub fn typecheck(path: &Path) -> CmdResult {
    let program = load(path)?;
    let items: Vec<_> = program
        .items
        .iter()
        .map(|item| match item {
            TypedItem::Space { name, space } => json!({ "name": name, "kind": "space", "space": space.to_string(), "dim": space.dim() }),
            TypedItem::Let { name, expr } => json!({ "name": name, "kind": "let", "type": expr.ty.to_string() }),
            TypedItem::Input { name, ty } => json!({ "name": name, "kind": "input", "type": ty.to_string() }),
            TypedItem::Formula { name, formula, space, polarity } => json!({
                "name": name,
                "kind": "formula",
                "formula": formula.to_string(),
                "space": space.as_ref().map(ToString::to_string),
                "polarity": polarity,
            }),
        })
        .collect();
    emit(&json!({ "ok": true, "items": items }), None)
}

pub fn dump(expr: &str) -> CmdResult {
    let space = weakll_dsl::parse_space(expr).and_then(|s| weakll_dsl::space_of(&s)).map_err(|e| {
        eprintln!("{e}");
        Failure::Failed
    })?;
    emit(&json!({ "space": space.to_string(), "dim": space.dim(), "basis": space.basis_labels() }), None)
}

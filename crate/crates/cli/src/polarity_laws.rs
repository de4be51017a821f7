//! The `polarity` law family: the checker against the connective table of
//! polarized linear logic.

use weakll_core::laws::{Law, Outcome, Parameters};
use weakll_dsl::ast::{FormulaAst, FormulaKind};
use weakll_dsl::{polarity, Polarity, SiteKind};

fn atom(n: &str) -> FormulaAst {
    FormulaAst::new(FormulaKind::Atom(n.into()))
}

fn neg(n: &str) -> FormulaAst {
    FormulaAst::new(FormulaKind::Neg(Box::new(atom(n))))
}

fn b(f: &FormulaAst) -> Box<FormulaAst> {
    Box::new(f.clone())
}

/// Every formula of the grammar up to the given depth, split by polarity.
fn grammar(depth: usize) -> (Vec<FormulaAst>, Vec<FormulaAst>) {
    let mut pos = vec![atom("X"), atom("Y")];
    let mut neg_ = vec![neg("X"), neg("Y")];
    for _ in 0..depth {
        let (p, n) = (pos.clone(), neg_.clone());
        for x in &p {
            pos.push(FormulaAst::new(FormulaKind::Bang(None, b(x))));
            neg_.push(FormulaAst::new(FormulaKind::ShiftDown(b(x))));
            for y in p.iter().take(3) {
                pos.push(FormulaAst::new(FormulaKind::Tensor(b(x), b(y))));
                pos.push(FormulaAst::new(FormulaKind::Plus(b(x), b(y))));
            }
        }
        for x in &n {
            neg_.push(FormulaAst::new(FormulaKind::WhyNot(None, b(x))));
            pos.push(FormulaAst::new(FormulaKind::ShiftUp(b(x))));
            for y in n.iter().take(3) {
                neg_.push(FormulaAst::new(FormulaKind::Par(b(x), b(y))));
                neg_.push(FormulaAst::new(FormulaKind::With(b(x), b(y))));
            }
        }
    }
    (pos, neg_)
}

/// Expected kind of the site at the root of a positive formula.
fn root_site(f: &FormulaAst) -> Option<SiteKind> {
    match f.kind {
        FormulaKind::Atom(_) | FormulaKind::Tensor(..) | FormulaKind::Bang(..) => Some(SiteKind::Required),
        FormulaKind::Plus(..) => Some(SiteKind::Exempt),
        _ => None,
    }
}

fn connective_table() -> Outcome {
    let (pos, negs) = grammar(2);
    for (set, want) in [(&pos, Polarity::Positive), (&negs, Polarity::Negative)] {
        for f in set {
            let text = f.to_string();
            let r = match polarity(f) {
                Ok(r) => r,
                Err(e) => return Outcome::Fail(format!("`{text}` rejected: {e}")),
            };
            if r.polarity != want {
                return Outcome::Fail(format!("`{text}` classified {}", r.polarity));
            }
            let root = r.sites.iter().find(|s| s.formula == text).map(|s| s.kind);
            if want == Polarity::Positive && root != root_site(f) {
                return Outcome::Fail(format!("`{text}` root site {root:?}"));
            }
            if want == Polarity::Negative && r.count(SiteKind::Required) > 0 {
                return Outcome::Fail(format!("negative `{text}` has a required shift site"));
            }
        }
    }
    Outcome::Pass
}

fn rejects_mixed() -> Outcome {
    let (pos, negs) = grammar(1);
    for p in &pos {
        for n in &negs {
            let mixed = [
                FormulaKind::Tensor(b(p), b(n)),
                FormulaKind::Plus(b(n), b(p)),
                FormulaKind::Par(b(p), b(n)),
                FormulaKind::With(b(n), b(p)),
            ];
            for kind in mixed {
                let f = FormulaAst::new(kind);
                if polarity(&f).is_ok() {
                    return Outcome::Fail(format!("`{f}` accepted"));
                }
            }
        }
        let under = [FormulaKind::WhyNot(None, b(p)), FormulaKind::ShiftUp(b(p))];
        for kind in under {
            let f = FormulaAst::new(kind);
            if polarity(&f).is_ok() {
                return Outcome::Fail(format!("`{f}` accepted"));
            }
        }
    }
    Outcome::Pass
}

pub fn polarity_laws(seed: u64) -> Vec<Law> {
    let p = Parameters { dims: vec![], degree: None, seed, instances: None };
    vec![
        Law::new("polarity", "connective_table", p.clone(), || Ok(connective_table())),
        Law::new("polarity", "rejects_mixed", p, || Ok(rejects_mixed())),
    ]
}

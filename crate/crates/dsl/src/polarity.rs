//! Polarity of formulas and shift sites.
//!
//! Negative formulas: `X⊥`, `N ⅋ N`, `N & N`, `?N`, `↓P`.
//! Positive formulas: `X`, `P ⊗ P`, `P ⊕ P`, `!P`, `↑N`.
//!
//! A shift site is a positive subformula whose denotation is not reflexive
//! without a double-dual shift. Atoms, tensors and `!` are required sites;
//! a binary `⊕` is exempt at its own node (its operands are classified on
//! their own). Sites below an explicit `↓` are already shifted.

use std::fmt;

use serde::Serialize;

use crate::ast::{FormulaAst, FormulaKind};
use crate::error::{DslError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    Positive,
    Negative,
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Positive => "positive",
            Polarity::Negative => "negative",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SiteKind {
    Required,
    Exempt,
    Explicit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Site {
    pub kind: SiteKind,
    pub node: &'static str,
    pub formula: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolarityReport {
    pub polarity: Polarity,
    pub sites: Vec<Site>,
}

impl PolarityReport {
    pub fn count(&self, kind: SiteKind) -> usize {
        self.sites.iter().filter(|s| s.kind == kind).count()
    }
}

pub fn polarity(f: &FormulaAst) -> Result<PolarityReport> {
    let mut sites = Vec::new();
    let polarity = walk(f, false, &mut sites)?;
    Ok(PolarityReport { polarity, sites })
}

fn error(f: &FormulaAst, message: impl Into<String>) -> DslError {
    DslError::Polarity { span: f.span, node: f.connective(), formula: f.to_string(), message: message.into() }
}

fn expect(f: &FormulaAst, operand: Polarity, want: Polarity) -> Result<()> {
    if operand == want {
        Ok(())
    } else {
        Err(error(f, format!("operand must be {want}, found {operand}")))
    }
}

fn walk(f: &FormulaAst, shifted: bool, sites: &mut Vec<Site>) -> Result<Polarity> {
    use Polarity::*;
    let site = |kind: SiteKind, sites: &mut Vec<Site>| {
        let kind = if shifted { SiteKind::Explicit } else { kind };
        sites.push(Site { kind, node: f.connective(), formula: f.to_string() });
    };
    Ok(match &f.kind {
        FormulaKind::Atom(_) => {
            site(SiteKind::Required, sites);
            Positive
        }
        FormulaKind::Neg(a) => {
            if !matches!(a.kind, FormulaKind::Atom(_)) {
                return Err(error(f, "negation applies to atoms only"));
            }
            Negative
        }
        FormulaKind::Tensor(a, b) | FormulaKind::Plus(a, b) => {
            let required = matches!(f.kind, FormulaKind::Tensor(..));
            site(if required { SiteKind::Required } else { SiteKind::Exempt }, sites);
            let (pa, pb) = (walk(a, shifted, sites)?, walk(b, shifted, sites)?);
            if pa != pb {
                return Err(error(f, format!("mixed operand polarities: {pa} and {pb}")));
            }
            expect(f, pa, Positive)?;
            Positive
        }
        FormulaKind::Par(a, b) | FormulaKind::With(a, b) => {
            let (pa, pb) = (walk(a, shifted, sites)?, walk(b, shifted, sites)?);
            if pa != pb {
                return Err(error(f, format!("mixed operand polarities: {pa} and {pb}")));
            }
            expect(f, pa, Negative)?;
            Negative
        }
        FormulaKind::Bang(_, a) => {
            site(SiteKind::Required, sites);
            let p = walk(a, shifted, sites)?;
            expect(f, p, Positive)?;
            Positive
        }
        FormulaKind::WhyNot(_, a) => {
            let p = walk(a, shifted, sites)?;
            expect(f, p, Negative)?;
            Negative
        }
        FormulaKind::ShiftDown(a) => {
            let p = walk(a, true, sites)?;
            expect(f, p, Positive)?;
            Negative
        }
        FormulaKind::ShiftUp(a) => {
            let p = walk(a, shifted, sites)?;
            expect(f, p, Negative)?;
            Positive
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_formula;

    fn report(src: &str) -> Result<PolarityReport> {
        polarity(&parse_formula(src).unwrap())
    }

    #[test]
    fn tensor_of_atoms() {
        let r = report("X * Y").unwrap();
        assert_eq!(r.polarity, Polarity::Positive);
        assert_eq!(r.count(SiteKind::Required), 3);
    }

    #[test]
    fn plus_exempt_at_node() {
        let r = report("X + Y").unwrap();
        assert_eq!(r.sites[0].kind, SiteKind::Exempt);
        assert_eq!(r.count(SiteKind::Required), 2);
    }

    #[test]
    fn negative_formula_has_no_required_sites() {
        let r = report("~X | ?~Y").unwrap();
        assert_eq!(r.polarity, Polarity::Negative);
        assert_eq!(r.count(SiteKind::Required), 0);
    }

    #[test]
    fn shift_down_makes_sites_explicit() {
        let r = report("dn (X * Y) & ~Z").unwrap();
        assert_eq!(r.polarity, Polarity::Negative);
        assert_eq!(r.count(SiteKind::Explicit), 3);
        assert_eq!(r.count(SiteKind::Required), 0);
    }

    #[test]
    fn mixed_operands_name_the_node() {
        let e = report("X * ~Y").unwrap_err();
        let DslError::Polarity { node, .. } = &e else { panic!("{e}") };
        assert_eq!(*node, "tensor");
    }

    #[test]
    fn negation_of_compound_rejected() {
        assert!(report("~(X * Y)").is_err());
    }
}

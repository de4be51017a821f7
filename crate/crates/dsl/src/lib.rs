//! A small language of morphism expressions over the weak-space model.
//!
//! Source text is parsed ([`parse`]), shape-checked ([`typecheck`]), and
//! evaluated to exact matrices and monomial sequences ([`evaluate`]).
//! Formulas declared in a program also get a polarity report.
//!
//! ```
//! use std::collections::BTreeMap;
//! let src = "space E = base 2; let f = compose(counit[E, 3], coder[E, 3]);";
//! let typed = weakll_dsl::typecheck(&weakll_dsl::parse(src).unwrap()).unwrap();
//! let out = weakll_dsl::evaluate(&typed, &BTreeMap::new()).unwrap();
//! assert_eq!(out[0].0, "f");
//! ```

pub mod ast;
pub mod error;
pub mod eval;
pub mod lexer;
pub mod parser;
pub mod polarity;
pub mod typecheck;

pub use error::{DslError, Result};
pub use eval::{evaluate, Value};
pub use parser::{parse, parse_formula, parse_morph, parse_space};
pub use polarity::{polarity, Polarity, PolarityReport, Site, SiteKind};
pub use typecheck::{space_of, typecheck, TExpr, Ty, TypedItem, TypedProgram};

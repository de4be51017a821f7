//! Syntax trees. Every node carries the position of its first token.
//!
//! `Span` compares equal to every other span, so two trees are equal when
//! they have the same structure, wherever they came from. This is what makes
//! parse/print round trips testable with `==`.

use std::fmt;

use weakll_core::{Scalar, SeqVariant};

#[derive(Clone, Copy, Debug, Default)]
pub struct Span {
    pub line: usize,
    pub col: usize,
}

impl PartialEq for Span {
    fn eq(&self, _: &Span) -> bool {
        true
    }
}

impl Eq for Span {}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    pub items: Vec<Item>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Space { name: String, space: SpaceAst, span: Span },
    Let { name: String, expr: MorphAst, span: Span },
    Formula { name: String, formula: FormulaAst, span: Span },
    Input { name: String, ty: TypeAst, span: Span },
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Space { name, .. } | Item::Let { name, .. } | Item::Formula { name, .. } | Item::Input { name, .. } => name,
        }
    }

    pub fn span(&self) -> Span {
        match self {
            Item::Space { span, .. } | Item::Let { span, .. } | Item::Formula { span, .. } | Item::Input { span, .. } => *span,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceAst {
    pub kind: SpaceKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceKind {
    Base(usize),
    Named(String),
    Dual(Box<SpaceAst>),
    Tensor(Box<SpaceAst>, Box<SpaceAst>),
    Par(Box<SpaceAst>, Box<SpaceAst>),
    Prod(Box<SpaceAst>, Box<SpaceAst>),
    Coprod(Box<SpaceAst>, Box<SpaceAst>),
    Hom(Box<SpaceAst>, Box<SpaceAst>),
    SymPow(Box<SpaceAst>, usize),
    Bang(Box<SpaceAst>, usize),
    BangNonUnit(Box<SpaceAst>, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeAst {
    Map(SpaceAst, SpaceAst),
    Seq(SeqVariant, SpaceAst, SpaceAst, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphAst {
    pub kind: MorphKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphKind {
    Var(String),
    /// `name[params](args)`; either list may be empty.
    Apply { name: String, params: Vec<Param>, args: Vec<MorphAst> },
    /// Rows of the matrix, `cod` rows by `dom` columns.
    Matrix { dom: SpaceAst, cod: SpaceAst, rows: Vec<Vec<Scalar>> },
    /// One coefficient matrix per grade, lowest grade first.
    Seq { variant: SeqVariant, dom: SpaceAst, cod: SpaceAst, degree: usize, blocks: Vec<Vec<Vec<Scalar>>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Space(SpaceAst),
    Int(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormulaAst {
    pub kind: FormulaKind,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormulaKind {
    Atom(String),
    Neg(Box<FormulaAst>),
    Tensor(Box<FormulaAst>, Box<FormulaAst>),
    Par(Box<FormulaAst>, Box<FormulaAst>),
    With(Box<FormulaAst>, Box<FormulaAst>),
    Plus(Box<FormulaAst>, Box<FormulaAst>),
    /// Optional truncation degree, `![3] A`.
    Bang(Option<usize>, Box<FormulaAst>),
    WhyNot(Option<usize>, Box<FormulaAst>),
    ShiftDown(Box<FormulaAst>),
    ShiftUp(Box<FormulaAst>),
}

impl FormulaAst {
    pub fn new(kind: FormulaKind) -> Self {
        FormulaAst { kind, span: Span::default() }
    }

    /// Connective name used in diagnostics.
    pub fn connective(&self) -> &'static str {
        match self.kind {
            FormulaKind::Atom(_) => "atom",
            FormulaKind::Neg(_) => "negation",
            FormulaKind::Tensor(..) => "tensor",
            FormulaKind::Par(..) => "par",
            FormulaKind::With(..) => "with",
            FormulaKind::Plus(..) => "plus",
            FormulaKind::Bang(..) => "of-course",
            FormulaKind::WhyNot(..) => "why-not",
            FormulaKind::ShiftDown(_) => "shift-down",
            FormulaKind::ShiftUp(_) => "shift-up",
        }
    }
}

// ---------------------------------------------------------------- printing
//
// Binary nodes are always parenthesized, so printed text re-parses to the
// same tree regardless of precedence.

fn bin(f: &mut fmt::Formatter<'_>, name: &str, a: &SpaceAst, b: &SpaceAst) -> fmt::Result {
    write!(f, "{name}({a}, {b})")
}

impl fmt::Display for SpaceAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            SpaceKind::Base(n) => write!(f, "base {n}"),
            SpaceKind::Named(n) => write!(f, "{n}"),
            SpaceKind::Dual(a) => write!(f, "dual({a})"),
            SpaceKind::Tensor(a, b) => bin(f, "tensor", a, b),
            SpaceKind::Par(a, b) => bin(f, "par", a, b),
            SpaceKind::Prod(a, b) => bin(f, "prod", a, b),
            SpaceKind::Coprod(a, b) => bin(f, "coprod", a, b),
            SpaceKind::Hom(a, b) => bin(f, "hom", a, b),
            SpaceKind::SymPow(a, n) => write!(f, "sympow({a}, {n})"),
            SpaceKind::Bang(a, n) => write!(f, "bang({a}, {n})"),
            SpaceKind::BangNonUnit(a, n) => write!(f, "bang1({a}, {n})"),
        }
    }
}

impl fmt::Display for TypeAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeAst::Map(a, b) => write!(f, "map({a}, {b})"),
            TypeAst::Seq(SeqVariant::Unit, a, b, d) => write!(f, "seq({a}, {b}, {d})"),
            TypeAst::Seq(SeqVariant::NonUnit, a, b, d) => write!(f, "seq1({a}, {b}, {d})"),
        }
    }
}

fn rows(f: &mut fmt::Formatter<'_>, rows: &[Vec<Scalar>]) -> fmt::Result {
    let text: Vec<String> = rows
        .iter()
        .map(|r| r.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", "))
        .collect();
    write!(f, "{{{}}}", text.join("; "))
}

fn comma<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Space(s) => write!(f, "{s}"),
            Param::Int(n) => write!(f, "{n}"),
        }
    }
}

impl fmt::Display for MorphAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            MorphKind::Var(n) => write!(f, "{n}"),
            MorphKind::Apply { name, params, args } => {
                write!(f, "{name}")?;
                if !params.is_empty() {
                    write!(f, "[{}]", comma(params))?;
                }
                if !args.is_empty() {
                    write!(f, "({})", comma(args))?;
                }
                Ok(())
            }
            MorphKind::Matrix { dom, cod, rows: r } => {
                write!(f, "matrix[{dom}, {cod}]")?;
                rows(f, r)
            }
            MorphKind::Seq { variant, dom, cod, degree, blocks } => {
                let kw = if *variant == SeqVariant::Unit { "seq" } else { "seq1" };
                write!(f, "{kw}[{dom}, {cod}, {degree}]{{")?;
                for (i, b) in blocks.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    rows(f, b)?;
                }
                write!(f, "}}")
            }
        }
    }
}

fn degree(f: &mut fmt::Formatter<'_>, d: &Option<usize>) -> fmt::Result {
    match d {
        Some(d) => write!(f, "[{d}] "),
        None => Ok(()),
    }
}

impl fmt::Display for FormulaAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            FormulaKind::Atom(n) => write!(f, "{n}"),
            FormulaKind::Neg(a) => write!(f, "~{a}"),
            FormulaKind::Tensor(a, b) => write!(f, "({a} * {b})"),
            FormulaKind::Par(a, b) => write!(f, "({a} | {b})"),
            FormulaKind::With(a, b) => write!(f, "({a} & {b})"),
            FormulaKind::Plus(a, b) => write!(f, "({a} + {b})"),
            FormulaKind::Bang(d, a) => {
                write!(f, "!")?;
                degree(f, d)?;
                write!(f, "{a}")
            }
            FormulaKind::WhyNot(d, a) => {
                write!(f, "?")?;
                degree(f, d)?;
                write!(f, "{a}")
            }
            FormulaKind::ShiftDown(a) => write!(f, "dn {a}"),
            FormulaKind::ShiftUp(a) => write!(f, "up {a}"),
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Space { name, space, .. } => write!(f, "space {name} = {space};"),
            Item::Let { name, expr, .. } => write!(f, "let {name} = {expr};"),
            Item::Formula { name, formula, .. } => write!(f, "formula {name} = {formula};"),
            Item::Input { name, ty, .. } => write!(f, "input {name} : {ty};"),
        }
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}

//! Shape inference. Every morphism subterm gets a [`Ty`]; formulas get a
//! polarity report and, when every exponential in them carries a degree, the
//! space they denote.

use std::collections::BTreeMap;
use std::fmt;

use weakll_core::exponential as ex;
use weakll_core::{SeqVariant, SpaceExpr};

use crate::ast::*;
use crate::error::{type_error, DslError, Result};
use crate::polarity::{polarity, PolarityReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ty {
    Map { dom: SpaceExpr, cod: SpaceExpr },
    Seq { variant: SeqVariant, dom: SpaceExpr, cod: SpaceExpr, degree: usize },
}

impl fmt::Display for Ty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ty::Map { dom, cod } => write!(f, "{dom} -> {cod}"),
            Ty::Seq { variant: SeqVariant::Unit, dom, cod, degree } => write!(f, "seq({dom}, {cod}, {degree})"),
            Ty::Seq { variant: SeqVariant::NonUnit, dom, cod, degree } => write!(f, "seq1({dom}, {cod}, {degree})"),
        }
    }
}

impl Ty {
    fn map(dom: SpaceExpr, cod: SpaceExpr) -> Ty {
        Ty::Map { dom, cod }
    }

    /// Truncation degrees mentioned anywhere in the type.
    pub fn degrees(&self) -> Vec<usize> {
        let mut out = Vec::new();
        match self {
            Ty::Map { dom, cod } => {
                space_degrees(dom, &mut out);
                space_degrees(cod, &mut out);
            }
            Ty::Seq { dom, cod, degree, .. } => {
                out.push(*degree);
                space_degrees(dom, &mut out);
                space_degrees(cod, &mut out);
            }
        }
        out
    }
}

fn space_degrees(s: &SpaceExpr, out: &mut Vec<usize>) {
    match s {
        SpaceExpr::Base(_) => {}
        SpaceExpr::Dual(a) => space_degrees(a, out),
        SpaceExpr::Tensor(a, b) | SpaceExpr::Par(a, b) | SpaceExpr::Prod(a, b) | SpaceExpr::Coprod(a, b) | SpaceExpr::Hom(a, b) => {
            space_degrees(a, out);
            space_degrees(b, out);
        }
        SpaceExpr::SymPow { space, .. } => space_degrees(space, out),
        SpaceExpr::Bang { space, degree } | SpaceExpr::BangNonUnit { space, degree } => {
            out.push(*degree);
            space_degrees(space, out);
        }
    }
}

/// Resolved bracket parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParamValue {
    Space(SpaceExpr),
    Int(usize),
}

/// A morphism subterm with its inferred type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TExpr {
    pub expr: MorphAst,
    pub ty: Ty,
    pub params: Vec<ParamValue>,
    pub args: Vec<TExpr>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypedItem {
    Space { name: String, space: SpaceExpr },
    Let { name: String, expr: TExpr },
    Formula { name: String, formula: FormulaAst, space: Option<SpaceExpr>, polarity: PolarityReport },
    Input { name: String, ty: Ty },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypedProgram {
    pub items: Vec<TypedItem>,
}

impl TypedProgram {
    pub fn inputs(&self) -> impl Iterator<Item = (&str, &Ty)> {
        self.items.iter().filter_map(|i| match i {
            TypedItem::Input { name, ty } => Some((name.as_str(), ty)),
            _ => None,
        })
    }
}

#[derive(Default)]
struct Env {
    spaces: BTreeMap<String, SpaceExpr>,
    morphs: BTreeMap<String, Ty>,
    formulas: BTreeMap<String, ()>,
}

pub fn typecheck(program: &Program) -> Result<TypedProgram> {
    let mut env = Env::default();
    let mut items = Vec::new();
    for item in &program.items {
        let name = item.name().to_string();
        if env.spaces.contains_key(&name) || env.morphs.contains_key(&name) || env.formulas.contains_key(&name) {
            return type_error(item.span(), format!("`{name}` is already defined"));
        }
        let typed = match item {
            Item::Space { space, .. } => {
                let s = resolve_space(&env, space)?;
                env.spaces.insert(name.clone(), s.clone());
                TypedItem::Space { name, space: s }
            }
            Item::Let { expr, .. } => {
                let t = check_morph(&env, expr)?;
                env.morphs.insert(name.clone(), t.ty.clone());
                TypedItem::Let { name, expr: t }
            }
            Item::Input { ty, .. } => {
                let ty = resolve_type(&env, ty)?;
                env.morphs.insert(name.clone(), ty.clone());
                TypedItem::Input { name, ty }
            }
            Item::Formula { formula, .. } => {
                let report = polarity(formula)?;
                let space = formula_space(&env, formula)?;
                if let Some(s) = &space {
                    env.spaces.insert(name.clone(), s.clone());
                } else {
                    env.formulas.insert(name.clone(), ());
                }
                TypedItem::Formula { name, formula: formula.clone(), space, polarity: report }
            }
        };
        items.push(typed);
    }
    Ok(TypedProgram { items })
}

pub(crate) fn resolve_space(env_spaces: &impl SpaceLookup, s: &SpaceAst) -> Result<SpaceExpr> {
    let r = |a: &SpaceAst| resolve_space(env_spaces, a);
    Ok(match &s.kind {
        SpaceKind::Base(n) => SpaceExpr::base(*n),
        SpaceKind::Named(n) => match env_spaces.lookup(n) {
            Some(sp) => sp,
            None => return type_error(s.span, format!("unknown space `{n}`")),
        },
        SpaceKind::Dual(a) => SpaceExpr::dual(r(a)?),
        SpaceKind::Tensor(a, b) => SpaceExpr::tensor(r(a)?, r(b)?),
        SpaceKind::Par(a, b) => SpaceExpr::par(r(a)?, r(b)?),
        SpaceKind::Prod(a, b) => SpaceExpr::prod(r(a)?, r(b)?),
        SpaceKind::Coprod(a, b) => SpaceExpr::coprod(r(a)?, r(b)?),
        SpaceKind::Hom(a, b) => SpaceExpr::hom(r(a)?, r(b)?),
        SpaceKind::SymPow(a, n) => SpaceExpr::sym_pow(r(a)?, *n),
        SpaceKind::Bang(a, n) => SpaceExpr::bang(r(a)?, *n),
        SpaceKind::BangNonUnit(a, n) => SpaceExpr::bang_non_unit(r(a)?, *n),
    })
}

pub(crate) trait SpaceLookup {
    fn lookup(&self, name: &str) -> Option<SpaceExpr>;
}

impl SpaceLookup for Env {
    fn lookup(&self, name: &str) -> Option<SpaceExpr> {
        self.spaces.get(name).cloned()
    }
}

/// Standalone space expressions have no names in scope.
pub(crate) struct NoNames;

impl SpaceLookup for NoNames {
    fn lookup(&self, _: &str) -> Option<SpaceExpr> {
        None
    }
}

fn resolve_type(env: &Env, t: &TypeAst) -> Result<Ty> {
    Ok(match t {
        TypeAst::Map(a, b) => Ty::map(resolve_space(env, a)?, resolve_space(env, b)?),
        TypeAst::Seq(variant, a, b, d) => {
            Ty::Seq { variant: *variant, dom: resolve_space(env, a)?, cod: resolve_space(env, b)?, degree: *d }
        }
    })
}

/// The space a formula denotes: atoms are declared spaces, `A⊥` the dual,
/// connectives the matching constructors, shifts the identity. `None` when an
/// exponential has no degree.
fn formula_space(env: &Env, f: &FormulaAst) -> Result<Option<SpaceExpr>> {
    let mut degrees = Vec::new();
    let s = formula_space_rec(env, f, &mut degrees)?;
    check_uniform(f.span, &degrees)?;
    Ok(s)
}

fn formula_space_rec(env: &Env, f: &FormulaAst, degrees: &mut Vec<usize>) -> Result<Option<SpaceExpr>> {
    let mut r = |a: &FormulaAst| formula_space_rec(env, a, degrees);
    Ok(match &f.kind {
        FormulaKind::Atom(n) => match env.spaces.get(n) {
            Some(s) => Some(s.clone()),
            None => return type_error(f.span, format!("atom `{n}` is not a declared space")),
        },
        FormulaKind::Neg(a) => r(a)?.map(SpaceExpr::dual),
        FormulaKind::Tensor(a, b) => both(r(a)?, r(b)?, SpaceExpr::tensor),
        FormulaKind::Par(a, b) => both(r(a)?, r(b)?, SpaceExpr::par),
        FormulaKind::With(a, b) => both(r(a)?, r(b)?, SpaceExpr::prod),
        FormulaKind::Plus(a, b) => both(r(a)?, r(b)?, SpaceExpr::coprod),
        FormulaKind::Bang(d, a) => {
            let inner = r(a)?;
            degrees.extend(*d);
            inner.zip(*d).map(|(s, d)| ex::bang_space(&s, d))
        }
        FormulaKind::WhyNot(d, a) => {
            let inner = r(a)?;
            degrees.extend(*d);
            inner.zip(*d).map(|(s, d)| ex::whynot_space(&s, d))
        }
        FormulaKind::ShiftDown(a) | FormulaKind::ShiftUp(a) => r(a)?,
    })
}

fn both(a: Option<SpaceExpr>, b: Option<SpaceExpr>, f: fn(SpaceExpr, SpaceExpr) -> SpaceExpr) -> Option<SpaceExpr> {
    Some(f(a?, b?))
}

fn check_uniform(span: Span, degrees: &[usize]) -> Result<()> {
    match degrees.iter().find(|&&d| d != degrees[0]) {
        Some(&other) => Err(DslError::DegreeMismatch { span, left: degrees[0], right: other }),
        None => Ok(()),
    }
}

/// Operands of a binary combinator must agree on truncation degree.
fn check_degrees(span: Span, left: &Ty, right: &Ty) -> Result<()> {
    let (a, b) = (left.degrees(), right.degrees());
    for &x in &a {
        if let Some(&y) = b.iter().find(|&&y| y != x) {
            return Err(DslError::DegreeMismatch { span, left: x, right: y });
        }
    }
    Ok(())
}

fn expect_map(t: &TExpr, what: &str) -> Result<(SpaceExpr, SpaceExpr)> {
    match &t.ty {
        Ty::Map { dom, cod } => Ok((dom.clone(), cod.clone())),
        other => type_error(t.expr.span, format!("{what} expects a linear map, found {other}")),
    }
}

fn expect_seq(t: &TExpr, variant: SeqVariant, what: &str) -> Result<(SpaceExpr, SpaceExpr, usize)> {
    match &t.ty {
        Ty::Seq { variant: v, dom, cod, degree } if *v == variant => Ok((dom.clone(), cod.clone(), *degree)),
        other => {
            let want = if variant == SeqVariant::Unit { "seq" } else { "seq1" };
            type_error(t.expr.span, format!("{what} expects a {want} sequence, found {other}"))
        }
    }
}

fn same_space(span: Span, what: &str, expected: &SpaceExpr, found: &SpaceExpr) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        type_error(span, format!("{what}: expected {expected}, found {found}"))
    }
}

/// Signature of a combinator: parameter kinds (`'s'` space, `'n'` integer)
/// and argument count.
fn signature(name: &str) -> Option<(&'static str, usize)> {
    Some(match name {
        "id" | "lunitor" | "runitor" | "lunitor_inv" | "runitor_inv" | "double_dual" => ("s", 0),
        "symmetry" | "ev" | "fst" | "snd" | "inl" | "inr" | "par_to_tensor" | "tensor_to_par" => ("ss", 0),
        "associator" | "associator_inv" => ("sss", 0),
        "counit" | "comultiplication" | "coder" | "contraction" | "weakening" | "cocontraction" | "coweakening"
        | "counit1" | "comultiplication1" | "der" | "der1" => ("sn", 0),
        "seely" | "seely_inv" | "mu" | "seely1" => ("ssn", 0),
        "mu0" => ("n", 0),
        "bang" | "bang1" => ("n", 1),
        "compose" | "tensor" | "pair" | "copair" | "kcompose" | "subst" | "add" => ("", 2),
        "transpose" | "curry" | "uncurry" | "kleisli" | "sequence" => ("", 1),
        _ => return None,
    })
}

pub const COMBINATORS: &[&str] = &[
    "id", "lunitor", "runitor", "lunitor_inv", "runitor_inv", "double_dual", "symmetry", "ev", "fst", "snd", "inl", "inr",
    "par_to_tensor", "tensor_to_par", "associator", "associator_inv", "counit", "comultiplication", "coder",
    "contraction", "weakening", "cocontraction", "coweakening", "counit1", "comultiplication1", "der", "der1", "seely",
    "seely_inv", "mu", "seely1", "mu0", "bang", "bang1", "compose", "tensor", "pair", "copair", "kcompose", "subst",
    "add", "transpose", "curry", "uncurry", "kleisli", "sequence",
];

fn check_morph(env: &Env, m: &MorphAst) -> Result<TExpr> {
    let span = m.span;
    let done = |ty: Ty, params: Vec<ParamValue>, args: Vec<TExpr>| Ok(TExpr { expr: m.clone(), ty, params, args });
    match &m.kind {
        MorphKind::Var(n) => match env.morphs.get(n) {
            Some(ty) => done(ty.clone(), vec![], vec![]),
            None if signature(n).is_some() => type_error(span, format!("combinator `{n}` needs parameters or arguments")),
            None => type_error(span, format!("unknown morphism `{n}`")),
        },
        MorphKind::Matrix { dom, cod, rows } => {
            let (dom, cod) = (resolve_space(env, dom)?, resolve_space(env, cod)?);
            let want = (cod.dim(), dom.dim());
            let cols = rows.first().map_or(0, Vec::len);
            if rows.len() != want.0 || rows.iter().any(|r| r.len() != cols) || cols != want.1 {
                return type_error(
                    span,
                    format!("matrix literal for {dom} -> {cod} needs {}x{} entries, found {}x{}", want.0, want.1, rows.len(), cols),
                );
            }
            done(Ty::map(dom, cod), vec![], vec![])
        }
        MorphKind::Seq { variant, dom, cod, degree, blocks } => {
            let (dom, cod) = (resolve_space(env, dom)?, resolve_space(env, cod)?);
            let lo = variant.lowest_degree();
            if *degree < lo || blocks.len() != degree + 1 - lo {
                return type_error(span, format!("sequence of degree {degree} needs {} blocks, found {}", (degree + 1).saturating_sub(lo), blocks.len()));
            }
            for (i, b) in blocks.iter().enumerate() {
                let n = lo + i;
                let cols = weakll_core::combinat::multiset_count(dom.dim(), n);
                if b.len() != cod.dim() || b.iter().any(|r| r.len() != cols) {
                    return type_error(
                        span,
                        format!("grade {n} block needs {}x{cols} entries, found {}x{}", cod.dim(), b.len(), b.first().map_or(0, Vec::len)),
                    );
                }
            }
            done(Ty::Seq { variant: *variant, dom, cod, degree: *degree }, vec![], vec![])
        }
        MorphKind::Apply { name, params, args } => {
            let Some((kinds, arity)) = signature(name) else {
                return type_error(span, format!("unknown combinator `{name}`"));
            };
            if params.len() != kinds.len() || args.len() != arity {
                return type_error(
                    span,
                    format!("`{name}` takes {} parameter(s) and {arity} argument(s), found {} and {}", kinds.len(), params.len(), args.len()),
                );
            }
            let mut pv = Vec::new();
            for (p, k) in params.iter().zip(kinds.chars()) {
                pv.push(match (p, k) {
                    (Param::Space(s), 's') => ParamValue::Space(resolve_space(env, s)?),
                    (Param::Int(n), 'n') => ParamValue::Int(*n),
                    (Param::Space(s), _) => return type_error(s.span, format!("`{name}` expects an integer here, found a space")),
                    (Param::Int(_), _) => return type_error(span, format!("`{name}` expects a space here, found an integer")),
                });
            }
            let targs = args.iter().map(|a| check_morph(env, a)).collect::<Result<Vec<_>>>()?;
            let ty = apply_type(span, name, &pv, &targs)?;
            done(ty, pv, targs)
        }
    }
}

fn sp(p: &ParamValue) -> SpaceExpr {
    match p {
        ParamValue::Space(s) => s.clone(),
        ParamValue::Int(_) => unreachable!("checked by signature"),
    }
}

fn int(p: &ParamValue) -> usize {
    match p {
        ParamValue::Int(n) => *n,
        ParamValue::Space(_) => unreachable!("checked by signature"),
    }
}

fn need_grade_one(span: Span, name: &str, d: usize) -> Result<()> {
    if d == 0 {
        type_error(span, format!("`{name}` needs truncation degree at least 1"))
    } else {
        Ok(())
    }
}

fn apply_type(span: Span, name: &str, p: &[ParamValue], a: &[TExpr]) -> Result<Ty> {
    use SpaceExpr as S;
    let k = S::unit;
    let t = |x: &S, y: &S| S::tensor(x.clone(), y.clone());
    Ok(match name {
        "id" => Ty::map(sp(&p[0]), sp(&p[0])),
        "lunitor" => Ty::map(t(&k(), &sp(&p[0])), sp(&p[0])),
        "runitor" => Ty::map(t(&sp(&p[0]), &k()), sp(&p[0])),
        "lunitor_inv" => Ty::map(sp(&p[0]), t(&k(), &sp(&p[0]))),
        "runitor_inv" => Ty::map(sp(&p[0]), t(&sp(&p[0]), &k())),
        "double_dual" => Ty::map(sp(&p[0]), S::dual(S::dual(sp(&p[0])))),
        "symmetry" => Ty::map(t(&sp(&p[0]), &sp(&p[1])), t(&sp(&p[1]), &sp(&p[0]))),
        "ev" => Ty::map(t(&S::hom(sp(&p[0]), sp(&p[1])), &sp(&p[0])), sp(&p[1])),
        "fst" => Ty::map(S::prod(sp(&p[0]), sp(&p[1])), sp(&p[0])),
        "snd" => Ty::map(S::prod(sp(&p[0]), sp(&p[1])), sp(&p[1])),
        "inl" => Ty::map(sp(&p[0]), S::coprod(sp(&p[0]), sp(&p[1]))),
        "inr" => Ty::map(sp(&p[1]), S::coprod(sp(&p[0]), sp(&p[1]))),
        "par_to_tensor" => Ty::map(S::par(sp(&p[0]), sp(&p[1])), t(&sp(&p[0]), &sp(&p[1]))),
        "tensor_to_par" => Ty::map(t(&sp(&p[0]), &sp(&p[1])), S::par(sp(&p[0]), sp(&p[1]))),
        "associator" => Ty::map(t(&t(&sp(&p[0]), &sp(&p[1])), &sp(&p[2])), t(&sp(&p[0]), &t(&sp(&p[1]), &sp(&p[2])))),
        "associator_inv" => Ty::map(t(&sp(&p[0]), &t(&sp(&p[1]), &sp(&p[2]))), t(&t(&sp(&p[0]), &sp(&p[1])), &sp(&p[2]))),
        "counit" | "coder" | "counit1" => {
            let (s, d) = (sp(&p[0]), int(&p[1]));
            need_grade_one(span, name, d)?;
            let b = if name == "counit1" { S::bang_non_unit(s.clone(), d) } else { S::bang(s.clone(), d) };
            if name == "coder" { Ty::map(s, b) } else { Ty::map(b, s) }
        }
        "comultiplication" => {
            let b = S::bang(sp(&p[0]), int(&p[1]));
            Ty::map(b.clone(), S::bang(b, int(&p[1])))
        }
        "comultiplication1" => {
            let b = S::bang_non_unit(sp(&p[0]), int(&p[1]));
            Ty::map(b.clone(), S::bang_non_unit(b, int(&p[1])))
        }
        "contraction" => {
            let b = S::bang(sp(&p[0]), int(&p[1]));
            Ty::map(b.clone(), t(&b, &b))
        }
        "cocontraction" => {
            let b = S::bang(sp(&p[0]), int(&p[1]));
            Ty::map(t(&b, &b), b)
        }
        "weakening" => Ty::map(S::bang(sp(&p[0]), int(&p[1])), k()),
        "coweakening" => Ty::map(k(), S::bang(sp(&p[0]), int(&p[1]))),
        "der" | "der1" => {
            let (s, d) = (sp(&p[0]), int(&p[1]));
            let variant = if name == "der" { SeqVariant::Unit } else { SeqVariant::NonUnit };
            if d < variant.lowest_degree().max(1) {
                return type_error(span, format!("`{name}` needs truncation degree at least 1"));
            }
            Ty::Seq { variant, dom: s.clone(), cod: s, degree: d }
        }
        "seely" | "seely_inv" | "seely1" => {
            let (s, tt, d) = (sp(&p[0]), sp(&p[1]), int(&p[2]));
            let bang = if name == "seely1" { S::bang_non_unit } else { S::bang };
            let dom = bang(S::prod(s.clone(), tt.clone()), d);
            let cod = t(&bang(s, d), &bang(tt, d));
            if name == "seely_inv" { Ty::map(cod, dom) } else { Ty::map(dom, cod) }
        }
        "mu" => {
            let (s, tt, d) = (sp(&p[0]), sp(&p[1]), int(&p[2]));
            Ty::map(t(&S::bang(s.clone(), d), &S::bang(tt.clone(), d)), S::bang(t(&s, &tt), d))
        }
        "mu0" => Ty::map(k(), S::bang(k(), int(&p[0]))),
        "bang" | "bang1" => {
            let (dom, cod) = expect_map(&a[0], name)?;
            let d = int(&p[0]);
            let bang = if name == "bang" { S::bang } else { S::bang_non_unit };
            let ty = Ty::map(bang(dom, d), bang(cod, d));
            check_degrees(span, &a[0].ty, &ty)?;
            ty
        }
        "compose" => {
            check_degrees(span, &a[0].ty, &a[1].ty)?;
            let (gd, gc) = expect_map(&a[0], "compose")?;
            let (fd, fc) = expect_map(&a[1], "compose")?;
            same_space(span, "cannot compose: outer map's domain vs inner map's codomain", &gd, &fc)?;
            Ty::map(fd, gc)
        }
        "tensor" => {
            check_degrees(span, &a[0].ty, &a[1].ty)?;
            let (fd, fc) = expect_map(&a[0], "tensor")?;
            let (gd, gc) = expect_map(&a[1], "tensor")?;
            Ty::map(t(&fd, &gd), t(&fc, &gc))
        }
        "add" => {
            check_degrees(span, &a[0].ty, &a[1].ty)?;
            if a[0].ty != a[1].ty {
                return type_error(span, format!("cannot add {} and {}", a[0].ty, a[1].ty));
            }
            a[0].ty.clone()
        }
        "pair" => {
            check_degrees(span, &a[0].ty, &a[1].ty)?;
            let (fd, fc) = expect_map(&a[0], "pair")?;
            let (gd, gc) = expect_map(&a[1], "pair")?;
            same_space(span, "pair needs equal domains", &fd, &gd)?;
            Ty::map(fd, S::prod(fc, gc))
        }
        "copair" => {
            check_degrees(span, &a[0].ty, &a[1].ty)?;
            let (fd, fc) = expect_map(&a[0], "copair")?;
            let (gd, gc) = expect_map(&a[1], "copair")?;
            same_space(span, "copair needs equal codomains", &fc, &gc)?;
            Ty::map(S::coprod(fd, gd), fc)
        }
        "kcompose" | "subst" => {
            let variant = if name == "kcompose" { SeqVariant::Unit } else { SeqVariant::NonUnit };
            check_degrees(span, &a[0].ty, &a[1].ty)?;
            let (gd, gc, _) = expect_seq(&a[0], variant, name)?;
            let (fd, fc, d) = expect_seq(&a[1], variant, name)?;
            same_space(span, "cannot compose: outer sequence's domain vs inner sequence's codomain", &gd, &fc)?;
            Ty::Seq { variant, dom: fd, cod: gc, degree: d }
        }
        "transpose" => {
            let (d, c) = expect_map(&a[0], "transpose")?;
            Ty::map(S::dual(c), S::dual(d))
        }
        "curry" => match &a[0].ty {
            Ty::Map { dom: S::Tensor(s, tt), cod } => Ty::map((**s).clone(), S::hom((**tt).clone(), cod.clone())),
            Ty::Seq { variant: SeqVariant::Unit, dom: S::Prod(s, tt), cod, degree } => Ty::Seq {
                variant: SeqVariant::Unit,
                dom: (**s).clone(),
                cod: S::hom(S::bang((**tt).clone(), *degree), cod.clone()),
                degree: *degree,
            },
            other => {
                return type_error(span, format!("curry expects a map out of a tensor or a sequence out of a product, found {other}"));
            }
        },
        "uncurry" => match &a[0].ty {
            Ty::Map { dom, cod: S::Hom(tt, u) } => Ty::map(t(dom, tt), (**u).clone()),
            Ty::Seq { variant: SeqVariant::Unit, dom, cod: S::Hom(bt, u), degree } => match &**bt {
                S::Bang { space, degree: d2 } if d2 == degree => Ty::Seq {
                    variant: SeqVariant::Unit,
                    dom: S::prod(dom.clone(), (**space).clone()),
                    cod: (**u).clone(),
                    degree: *degree,
                },
                S::Bang { degree: d2, .. } => return Err(DslError::DegreeMismatch { span, left: *degree, right: *d2 }),
                other => return type_error(span, format!("uncurry expects a sequence into hom(bang(T, D), U), found hom({other}, ...)")),
            },
            other => return type_error(span, format!("uncurry expects a map into a hom space, found {other}")),
        },
        "kleisli" => match &a[0].ty {
            Ty::Seq { variant, dom, cod, degree } => {
                let b = if *variant == SeqVariant::Unit { S::bang(dom.clone(), *degree) } else { S::bang_non_unit(dom.clone(), *degree) };
                Ty::map(b, cod.clone())
            }
            other => return type_error(span, format!("kleisli expects a sequence, found {other}")),
        },
        "sequence" => match &a[0].ty {
            Ty::Map { dom: S::Bang { space, degree }, cod } => {
                Ty::Seq { variant: SeqVariant::Unit, dom: (**space).clone(), cod: cod.clone(), degree: *degree }
            }
            Ty::Map { dom: S::BangNonUnit { space, degree }, cod } if *degree >= 1 => {
                Ty::Seq { variant: SeqVariant::NonUnit, dom: (**space).clone(), cod: cod.clone(), degree: *degree }
            }
            other => return type_error(span, format!("sequence expects a map out of an exponential, found {other}")),
        },
        _ => unreachable!("signature covers every combinator"),
    })
}

/// Resolves a standalone space expression with no names in scope.
pub fn space_of(ast: &SpaceAst) -> Result<SpaceExpr> {
    resolve_space(&NoNames, ast)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn check(src: &str) -> Result<TypedProgram> {
        typecheck(&parse(src).unwrap())
    }

    fn last_ty(p: &TypedProgram) -> Ty {
        match p.items.last().unwrap() {
            TypedItem::Let { expr, .. } => expr.ty.clone(),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn counit_after_coder_is_endo() {
        let p = check("space E = base 2; let f = compose(counit[E,3], coder[E,3]);").unwrap();
        assert_eq!(last_ty(&p), Ty::map(SpaceExpr::base(2), SpaceExpr::base(2)));
    }

    #[test]
    fn mismatched_degrees_named() {
        let e = check("space E = base 2; let f = tensor(counit[E,3], counit[E,2]);").unwrap_err();
        assert!(matches!(e, DslError::DegreeMismatch { left: 3, right: 2, .. }), "{e}");
        assert!(e.to_string().contains("3 vs 2"));
    }

    #[test]
    fn curry_needs_tensor_domain() {
        let e = check("space E = base 2; let f = curry(id[E]);").unwrap_err();
        assert!(matches!(e, DslError::Type { .. }));
        assert!(e.to_string().contains("curry expects"));
    }

    #[test]
    fn shape_mismatch_prints_both_shapes() {
        let e = check("let f = compose(id[base 2], id[base 3]);").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("base 2") && msg.contains("base 3"), "{msg}");
    }

    #[test]
    fn subterms_annotated() {
        let p = check("space E = base 1; let f = compose(counit[E,2], coder[E,2]);").unwrap();
        let TypedItem::Let { expr, .. } = &p.items[1] else { panic!() };
        assert_eq!(expr.args.len(), 2);
        assert_eq!(expr.args[0].ty, Ty::map(SpaceExpr::bang(SpaceExpr::base(1), 2), SpaceExpr::base(1)));
    }

    #[test]
    fn formulas_become_spaces() {
        let p = check("space X = base 2; formula A = ~X | ~X; let f = id[A];").unwrap();
        let dual = SpaceExpr::dual(SpaceExpr::base(2));
        let expect = SpaceExpr::par(dual.clone(), dual);
        assert_eq!(last_ty(&p), Ty::map(expect.clone(), expect));
    }

    #[test]
    fn duplicate_and_unknown_names() {
        assert!(check("space E = base 1; space E = base 2;").is_err());
        assert!(check("let f = g;").is_err());
        assert!(check("let f = frobnicate[base 1];").is_err());
    }

    #[test]
    fn literal_shapes_checked() {
        assert!(check("let m = matrix[base 2, base 1]{1, 2};").is_ok());
        assert!(check("let m = matrix[base 2, base 1]{1; 2};").is_err());
        assert!(check("let s = seq[base 2, base 1, 1]{{1}, {1, 2}};").is_ok());
        assert!(check("let s = seq[base 2, base 1, 1]{{1}};").is_err());
    }
}

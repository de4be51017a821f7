//! Evaluation of typechecked programs to exact matrices and sequences.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use weakll_core::combinat::multiset_count;
use weakll_core::{exponential as ex, mall, nonunit};
use weakll_core::{LinMap, Matrix, Monomial, MonomialSeq, SeqVariant, SpaceExpr, SparseMap};

use crate::ast::{MorphAst, MorphKind, Span};
use crate::error::{DslError, Result};
use crate::typecheck::{ParamValue, TExpr, Ty, TypedItem, TypedProgram};

/// A morphism value in its JSON-facing form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Value {
    Seq(MonomialSeq),
    Map(LinMap),
}

impl Value {
    pub fn ty(&self) -> Ty {
        match self {
            Value::Map(f) => Ty::Map { dom: f.dom().clone(), cod: f.cod().clone() },
            Value::Seq(s) => Ty::Seq { variant: s.variant(), dom: s.dom().clone(), cod: s.cod().clone(), degree: s.truncation() },
        }
    }
}

/// Working representation: maps stay sparse until output.
#[derive(Clone, Debug)]
enum Val {
    Map(SparseMap),
    Seq(MonomialSeq),
}

impl Val {
    fn into_value(self) -> Value {
        match self {
            Val::Map(f) => Value::Map(f.to_dense()),
            Val::Seq(s) => Value::Seq(s),
        }
    }

    fn from_value(v: &Value) -> Val {
        match v {
            Value::Map(f) => Val::Map(f.to_sparse()),
            Value::Seq(s) => Val::Seq(s.clone()),
        }
    }

    fn map(&self) -> &SparseMap {
        match self {
            Val::Map(f) => f,
            Val::Seq(_) => unreachable!("typechecked as a map"),
        }
    }

    fn seq(&self) -> &MonomialSeq {
        match self {
            Val::Seq(s) => s,
            Val::Map(_) => unreachable!("typechecked as a sequence"),
        }
    }
}

/// Evaluates every `let` in order; `inputs` must bind each declared input to
/// a value of its declared type.
pub fn evaluate(program: &TypedProgram, inputs: &BTreeMap<String, Value>) -> Result<Vec<(String, Value)>> {
    for name in inputs.keys() {
        if !program.inputs().any(|(n, _)| n == name) {
            return Err(DslError::Binding { name: name.clone(), message: "no such input is declared".into() });
        }
    }
    let mut env: BTreeMap<String, Val> = BTreeMap::new();
    let mut out = Vec::new();
    for item in &program.items {
        match item {
            TypedItem::Input { name, ty } => {
                let Some(v) = inputs.get(name) else {
                    return Err(DslError::Binding { name: name.clone(), message: format!("missing binding of type {ty}") });
                };
                if v.ty() != *ty {
                    return Err(DslError::Binding { name: name.clone(), message: format!("expected {ty}, found {}", v.ty()) });
                }
                env.insert(name.clone(), Val::from_value(v));
            }
            TypedItem::Let { name, expr } => {
                let v = eval(&env, expr)?;
                env.insert(name.clone(), v.clone());
                out.push((name.clone(), v.into_value()));
            }
            TypedItem::Space { .. } | TypedItem::Formula { .. } => {}
        }
    }
    Ok(out)
}

fn lift<T>(span: Span, r: weakll_core::Result<T>) -> Result<T> {
    r.map_err(|source| DslError::Eval { span, source })
}

fn sp(p: &ParamValue) -> &SpaceExpr {
    match p {
        ParamValue::Space(s) => s,
        ParamValue::Int(_) => unreachable!("checked by signature"),
    }
}

fn int(p: &ParamValue) -> usize {
    match p {
        ParamValue::Int(n) => *n,
        ParamValue::Space(_) => unreachable!("checked by signature"),
    }
}

fn dense(f: LinMap) -> Val {
    Val::Map(f.to_sparse())
}

fn eval(env: &BTreeMap<String, Val>, t: &TExpr) -> Result<Val> {
    let span = t.expr.span;
    let MorphAst { kind, .. } = &t.expr;
    let v = match kind {
        MorphKind::Var(n) => env.get(n).cloned().expect("typechecked name"),
        MorphKind::Matrix { rows, .. } => {
            let Ty::Map { dom, cod } = &t.ty else { unreachable!() };
            let m = Matrix::new(cod.dim(), dom.dim(), rows.concat());
            dense(lift(span, m.and_then(|m| LinMap::new(dom.clone(), cod.clone(), m)))?)
        }
        MorphKind::Seq { blocks, .. } => {
            let Ty::Seq { variant, dom, cod, degree } = &t.ty else { unreachable!() };
            let lo = variant.lowest_degree();
            let monomials = blocks
                .iter()
                .enumerate()
                .map(|(i, b)| {
                    let m = Matrix::new(cod.dim(), multiset_count(dom.dim(), lo + i), b.concat())?;
                    Monomial::new(dom.clone(), cod.clone(), lo + i, m)
                })
                .collect::<weakll_core::Result<Vec<_>>>();
            let seq = monomials.and_then(|ms| MonomialSeq::new(*variant, dom.clone(), cod.clone(), *degree, ms));
            Val::Seq(lift(span, seq)?)
        }
        MorphKind::Apply { name, .. } => {
            let args = t.args.iter().map(|a| eval(env, a)).collect::<Result<Vec<_>>>()?;
            apply(span, name, &t.params, &args)?
        }
    };
    debug_assert_eq!(ty_of(&v), t.ty, "value shape disagrees with inferred type");
    Ok(v)
}

fn ty_of(v: &Val) -> Ty {
    match v {
        Val::Map(f) => Ty::Map { dom: f.dom().clone(), cod: f.cod().clone() },
        Val::Seq(s) => Ty::Seq { variant: s.variant(), dom: s.dom().clone(), cod: s.cod().clone(), degree: s.truncation() },
    }
}

fn apply(span: Span, name: &str, p: &[ParamValue], a: &[Val]) -> Result<Val> {
    let dm = |v: &Val| v.map().to_dense();
    Ok(match name {
        "id" => Val::Map(SparseMap::identity(sp(&p[0]).clone())),
        "lunitor" => dense(mall::left_unitor(sp(&p[0]))),
        "runitor" => dense(mall::right_unitor(sp(&p[0]))),
        "lunitor_inv" => dense(mall::left_unitor_inverse(sp(&p[0]))),
        "runitor_inv" => dense(mall::right_unitor_inverse(sp(&p[0]))),
        "double_dual" => dense(mall::double_dual_ev(sp(&p[0]))),
        "symmetry" => Val::Map(mall::sparse::symmetry(sp(&p[0]), sp(&p[1]))),
        "ev" => dense(mall::ev(sp(&p[0]), sp(&p[1]))),
        "fst" => dense(mall::projection(sp(&p[0]), sp(&p[1]), mall::Side::Left)),
        "snd" => dense(mall::projection(sp(&p[0]), sp(&p[1]), mall::Side::Right)),
        "inl" => dense(mall::injection(sp(&p[0]), sp(&p[1]), mall::Side::Left)),
        "inr" => dense(mall::injection(sp(&p[0]), sp(&p[1]), mall::Side::Right)),
        "par_to_tensor" => dense(mall::par_to_tensor(sp(&p[0]), sp(&p[1]))),
        "tensor_to_par" => dense(mall::tensor_to_par(sp(&p[0]), sp(&p[1]))),
        "associator" => Val::Map(mall::sparse::associator(sp(&p[0]), sp(&p[1]), sp(&p[2]))),
        "associator_inv" => dense(mall::associator_inverse(sp(&p[0]), sp(&p[1]), sp(&p[2]))),
        "counit" => Val::Map(lift(span, ex::counit(sp(&p[0]), int(&p[1])))?),
        "coder" => Val::Map(lift(span, ex::coder(sp(&p[0]), int(&p[1])))?),
        "comultiplication" => Val::Map(lift(span, ex::comultiplication(sp(&p[0]), int(&p[1])))?),
        "contraction" => Val::Map(lift(span, ex::contraction(sp(&p[0]), int(&p[1])))?),
        "weakening" => Val::Map(ex::weakening(sp(&p[0]), int(&p[1]))),
        "cocontraction" => Val::Map(lift(span, ex::cocontraction(sp(&p[0]), int(&p[1])))?),
        "coweakening" => Val::Map(ex::coweakening(sp(&p[0]), int(&p[1]))),
        "counit1" => Val::Map(lift(span, nonunit::nonunit_counit(sp(&p[0]), int(&p[1])))?),
        "comultiplication1" => Val::Map(lift(span, nonunit::nonunit_comultiplication(sp(&p[0]), int(&p[1])))?),
        "der" => Val::Seq(lift(span, MonomialSeq::dereliction(SeqVariant::Unit, sp(&p[0]), int(&p[1])))?),
        "der1" => Val::Seq(lift(span, MonomialSeq::dereliction(SeqVariant::NonUnit, sp(&p[0]), int(&p[1])))?),
        "seely" => Val::Map(lift(span, ex::seely_iso(sp(&p[0]), sp(&p[1]), int(&p[2])))?),
        "seely_inv" => Val::Map(lift(span, ex::seely_inverse(sp(&p[0]), sp(&p[1]), int(&p[2])))?),
        "seely1" => Val::Map(lift(span, nonunit::nonunit_seely(sp(&p[0]), sp(&p[1]), int(&p[2])))?),
        "mu" => Val::Map(lift(span, ex::monoidal_mu(sp(&p[0]), sp(&p[1]), int(&p[2])))?),
        "mu0" => Val::Map(ex::mu0(int(&p[0]))),
        "bang" => Val::Map(ex::bang_map(a[0].map(), int(&p[0]))),
        "bang1" => Val::Map(nonunit::nonunit_bang_map(a[0].map(), int(&p[0]))),
        "compose" => Val::Map(lift(span, a[0].map().compose(a[1].map()))?),
        "tensor" => Val::Map(a[0].map().tensor(a[1].map())),
        "add" => match (&a[0], &a[1]) {
            (Val::Map(f), Val::Map(g)) => Val::Map(lift(span, f.add(g))?),
            (Val::Seq(f), Val::Seq(g)) => Val::Seq(lift(span, f.add(g))?),
            _ => unreachable!("typechecked as equal types"),
        },
        "pair" => dense(lift(span, mall::pair(&dm(&a[0]), &dm(&a[1])))?),
        "copair" => dense(lift(span, mall::copair(&dm(&a[0]), &dm(&a[1])))?),
        "kcompose" => Val::Seq(lift(span, ex::kleisli_compose(a[0].seq(), a[1].seq()))?),
        "subst" => Val::Seq(lift(span, nonunit::substitute_compose(a[0].seq(), a[1].seq()))?),
        "transpose" => dense(mall::transpose(&dm(&a[0]))),
        "curry" => match &a[0] {
            Val::Map(f) => dense(lift(span, mall::curry(&f.to_dense()))?),
            Val::Seq(h) => Val::Seq(lift(span, ex::curry_seq(h))?),
        },
        "uncurry" => match &a[0] {
            Val::Map(g) => dense(lift(span, mall::uncurry(&g.to_dense()))?),
            Val::Seq(g) => {
                let SpaceExpr::Hom(bt, _) = g.cod() else { unreachable!("typechecked hom codomain") };
                let SpaceExpr::Bang { space, .. } = &**bt else { unreachable!("typechecked bang") };
                Val::Seq(lift(span, ex::uncurry_seq(g, space))?)
            }
        },
        "kleisli" => Val::Map(ex::seq_to_kleisli(a[0].seq())),
        "sequence" => Val::Seq(lift(span, ex::kleisli_to_seq(a[0].map()))?),
        other => unreachable!("unknown combinator `{other}` passed the typechecker"),
    })
}

use std::collections::BTreeMap;

use weakll_core::combinat::{binom, multisets};
use weakll_core::{Scalar, SpaceExpr};
use weakll_dsl::ast::{Item, MorphKind, SpaceKind};
use weakll_dsl::{evaluate, parse, parse_formula, polarity, typecheck, DslError, Polarity, SiteKind, Ty, TypedItem, Value};

fn eval_single(src: &str) -> Value {
    let typed = typecheck(&parse(src).unwrap()).unwrap();
    evaluate(&typed, &BTreeMap::new()).unwrap().pop().unwrap().1
}

#[test]
fn space_and_coder_declarations() {
    let p = parse("space E = base 2;\nlet d = coder[E,3];").unwrap();
    assert!(matches!(&p.items[0], Item::Space { space, .. } if space.kind == SpaceKind::Base(2)));
    let Item::Let { expr, .. } = &p.items[1] else { panic!() };
    let MorphKind::Apply { name, params, args } = &expr.kind else { panic!() };
    assert_eq!((name.as_str(), params.len(), args.len()), ("coder", 2, 0));
}

#[test]
fn malformed_let_points_at_equals() {
    let e = parse("let = ;").unwrap_err();
    assert!(matches!(e, DslError::Syntax { .. }));
    let span = e.span().unwrap();
    assert_eq!((span.line, span.col), (1, 5));
}

#[test]
fn counit_after_coder() {
    let src = "space E = base 2; let f = compose(counit[E,3], coder[E,3]);";
    let typed = typecheck(&parse(src).unwrap()).unwrap();
    let TypedItem::Let { expr, .. } = &typed.items[1] else { panic!() };
    assert_eq!(expr.ty, Ty::Map { dom: SpaceExpr::base(2), cod: SpaceExpr::base(2) });
    let Value::Map(f) = eval_single(src) else { panic!() };
    assert!(f.is_identity());
}

#[test]
fn mismatched_truncations_are_named() {
    let e = typecheck(&parse("space E = base 1; let t = tensor(counit[E,3], counit[E,2]);").unwrap()).unwrap_err();
    let msg = e.to_string();
    assert!(matches!(e, DslError::DegreeMismatch { .. }));
    assert!(msg.contains('3') && msg.contains('2'), "{msg}");
}

#[test]
fn curry_outside_tensor_rejected() {
    let e = typecheck(&parse("let c = curry(id[prod(base 1, base 1)]);").unwrap()).unwrap_err();
    assert!(matches!(e, DslError::Type { .. }), "{e}");
}

#[test]
fn seely_value_on_two_scalars() {
    let Value::Map(f) = eval_single("let s = seely[base 1, base 1, 2];") else { panic!() };
    // Column for x^n y^m (a multiset over {x, y}) lands on e_n ⊗ e_m with
    // weight 1/C(n+m, n); rows past the truncation stay zero.
    let m = f.matrix();
    assert_eq!((m.rows(), m.cols()), (9, 6));
    let mut col = 0;
    for p in 0..=2 {
        for ms in multisets(2, p) {
            let n = ms.iter().filter(|&&v| v == 0).count();
            let k = p - n;
            for row in 0..9 {
                let want = if row == n * 3 + k { Scalar::ratio(1, binom(p, n) as i64).unwrap() } else { Scalar::zero() };
                assert_eq!(*m.get(row, col), want, "row {row}, column {col}");
            }
            col += 1;
        }
    }
}

#[test]
fn literal_matrix_is_itself() {
    let Value::Map(f) = eval_single("let m = matrix[base 2, base 2]{1, -2/3; 0, 5};") else { panic!() };
    let text: Vec<String> = f.matrix().entries().iter().map(ToString::to_string).collect();
    assert_eq!(text, ["1", "-2/3", "0", "5"]);
}

#[test]
fn shift_up_denotes_the_same_space() {
    let src = "space X = base 2; formula A = up (~X | ~X); formula B = ~X | ~X;";
    let typed = typecheck(&parse(src).unwrap()).unwrap();
    let spaces: Vec<_> = typed
        .items
        .iter()
        .filter_map(|i| match i {
            TypedItem::Formula { space, .. } => space.clone(),
            _ => None,
        })
        .collect();
    assert_eq!(spaces.len(), 2);
    assert_eq!(spaces[0], spaces[1]);
}

#[test]
fn formula_degrees_must_agree() {
    let e = typecheck(&parse("space X = base 1; formula A = ![2] X * ![3] X;").unwrap()).unwrap_err();
    assert!(matches!(e, DslError::DegreeMismatch { .. }), "{e}");
}

/// `(formula, polarity, root site, required, exempt, explicit)`; `None` for
/// formulas outside the polarized grammar.
type Row = (&'static str, Option<(Polarity, Option<SiteKind>, usize, usize, usize)>);

const CORPUS: &[Row] = {
    use Polarity::*;
    use SiteKind::*;
    &[
        ("?(X⊥)", Some((Negative, None, 0, 0, 0))),
        ("X ⊗ Y", Some((Positive, Some(Required), 3, 0, 0))),
        ("X ⊕ Y", Some((Positive, Some(Exempt), 2, 1, 0))),
        ("X", Some((Positive, Some(Required), 1, 0, 0))),
        ("X⊥", Some((Negative, None, 0, 0, 0))),
        ("X⊥ ⅋ Y⊥", Some((Negative, None, 0, 0, 0))),
        ("X⊥ & Y⊥", Some((Negative, None, 0, 0, 0))),
        ("!X", Some((Positive, Some(Required), 2, 0, 0))),
        ("!(X ⊗ Y)", Some((Positive, Some(Required), 4, 0, 0))),
        ("?(X⊥ ⅋ Y⊥)", Some((Negative, None, 0, 0, 0))),
        ("↓(X ⊗ Y)", Some((Negative, None, 0, 0, 3))),
        ("↑(X⊥ ⅋ Y⊥)", Some((Positive, None, 0, 0, 0))),
        ("(X ⊕ Y) ⊗ Z", Some((Positive, Some(Required), 4, 1, 0))),
        ("!(X ⊕ Y)", Some((Positive, Some(Required), 3, 1, 0))),
        ("↓!X & Y⊥", Some((Negative, None, 0, 0, 2))),
        ("(X⊥ & Y⊥) ⅋ ?Z⊥", Some((Negative, None, 0, 0, 0))),
        ("↑?X⊥ ⊗ X", Some((Positive, Some(Required), 2, 0, 0))),
        ("↓(X ⊕ Y)", Some((Negative, None, 0, 0, 3))),
        ("X ⊗ Y⊥", None),
        ("!(X⊥)", None),
    ]
};

#[test]
fn polarity_corpus() {
    assert_eq!(CORPUS.len(), 20);
    for (src, expected) in CORPUS {
        let result = polarity(&parse_formula(src).unwrap());
        match expected {
            None => assert!(matches!(result, Err(DslError::Polarity { .. })), "{src}: {result:?}"),
            Some((pol, root, req, ex, expl)) => {
                let r = result.unwrap_or_else(|e| panic!("{src}: {e}"));
                let f = parse_formula(src).unwrap().to_string();
                let root_kind = r.sites.iter().find(|s| s.formula == f).map(|s| s.kind);
                assert_eq!(r.polarity, *pol, "{src}");
                assert_eq!(root_kind, *root, "{src}");
                assert_eq!(
                    (r.count(SiteKind::Required), r.count(SiteKind::Exempt), r.count(SiteKind::Explicit)),
                    (*req, *ex, *expl),
                    "{src}"
                );
                if *pol == Polarity::Negative {
                    assert_eq!(r.count(SiteKind::Required), 0, "{src}");
                }
            }
        }
    }
}

#[test]
fn mixed_polarity_names_the_node() {
    let e = polarity(&parse_formula("X⊥ & Y").unwrap()).unwrap_err();
    let DslError::Polarity { node, formula, .. } = e else { panic!() };
    assert_eq!(node, "with");
    assert_eq!(formula, "(~X & Y)");
}

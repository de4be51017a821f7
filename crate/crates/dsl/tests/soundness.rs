//! Typechecking is sound: whatever typechecks evaluates without error, to a
//! value whose shape is exactly the inferred type.

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;
use weakll_dsl::{evaluate, parse, typecheck, TypedItem, Value};

const SPACES: &[&str] = &["base 1", "base 2"];

fn scalar_text() -> impl Strategy<Value = String> {
    (-5i64..6, 1i64..4).prop_map(|(n, d)| format!("{n}/{d}"))
}

fn square_literal() -> impl Strategy<Value = String> {
    prop::sample::select(SPACES).prop_flat_map(|s| {
        let n: usize = s[5..].parse().unwrap();
        prop::collection::vec(scalar_text(), n * n).prop_map(move |xs| {
            let rows: Vec<String> = xs.chunks(n).map(|r| r.join(", ")).collect();
            format!("matrix[{s}, {s}]{{{}}}", rows.join("; "))
        })
    })
}

fn seq_literal() -> impl Strategy<Value = String> {
    // seq[base 1, base 1, 2] has blocks of width 1, 1, 1.
    (prop::collection::vec(scalar_text(), 3), any::<bool>()).prop_map(|(c, unit)| {
        if unit {
            format!("seq[base 1, base 1, 2]{{{{{}}}, {{{}}}, {{{}}}}}", c[0], c[1], c[2])
        } else {
            format!("seq1[base 1, base 1, 2]{{{{{}}}, {{{}}}}}", c[1], c[2])
        }
    })
}

fn leaf() -> impl Strategy<Value = String> {
    let fixed = prop::sample::select(vec![
        "id[base 1]",
        "id[base 2]",
        "counit[base 1, 2]",
        "coder[base 1, 2]",
        "comultiplication[base 1, 2]",
        "contraction[base 1, 2]",
        "cocontraction[base 1, 2]",
        "weakening[base 1, 2]",
        "coweakening[base 1, 2]",
        "seely[base 1, base 1, 2]",
        "seely_inv[base 1, base 1, 2]",
        "seely1[base 1, base 1, 2]",
        "mu[base 1, base 1, 2]",
        "mu0[2]",
        "counit1[base 1, 2]",
        "comultiplication1[base 1, 2]",
        "symmetry[base 1, base 2]",
        "associator[base 1, base 2, base 1]",
        "lunitor[base 2]",
        "runitor_inv[base 2]",
        "ev[base 1, base 2]",
        "fst[base 1, base 2]",
        "inr[base 2, base 1]",
        "par_to_tensor[base 2, base 1]",
        "double_dual[base 2]",
        "der[base 1, 2]",
        "der1[base 1, 2]",
    ])
    .prop_map(String::from);
    prop_oneof![3 => fixed, 1 => square_literal(), 1 => seq_literal()]
}

fn term() -> impl Strategy<Value = String> {
    leaf().prop_recursive(3, 12, 2, |inner| {
        let unary = prop::sample::select(vec![
            "transpose", "curry", "uncurry", "bang[2]", "bang1[2]", "kleisli", "sequence",
        ]);
        let binary = prop::sample::select(vec!["compose", "tensor", "add", "pair", "copair", "kcompose", "subst"]);
        prop_oneof![
            (unary, inner.clone()).prop_map(|(op, a)| format!("{op}({a})")),
            (binary, inner.clone(), inner).prop_map(|(op, a, b)| format!("{op}({a}, {b})")),
        ]
    })
}

#[test]
fn typechecked_terms_evaluate_to_their_type() {
    let mut runner = TestRunner::deterministic();
    let strategy = term();
    let (mut accepted, mut composite) = (0, 0);
    for _ in 0..3000 {
        let term = strategy.new_tree(&mut runner).unwrap().current();
        let src = format!("let t = {term};");
        let program = parse(&src).unwrap_or_else(|e| panic!("{src}: {e}"));
        let Ok(typed) = typecheck(&program) else { continue };
        accepted += 1;
        if !term.ends_with(']') && !term.ends_with('}') {
            composite += 1;
        }
        let TypedItem::Let { expr, .. } = &typed.items[0] else { unreachable!() };
        let out = evaluate(&typed, &BTreeMap::new()).unwrap_or_else(|e| panic!("{src}: {e}"));
        let value: &Value = &out[0].1;
        assert_eq!(value.ty(), expr.ty, "{src}");
    }
    eprintln!("{accepted} of 3000 terms typechecked, {composite} of them composite");
    assert!(accepted >= 300 && composite >= 100, "too few well-typed terms: {accepted} ({composite} composite)");
}

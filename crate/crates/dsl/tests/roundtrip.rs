//! Printing any syntax tree and parsing the text back yields the same tree.

use proptest::prelude::*;
use weakll_core::{Scalar, SeqVariant};
use weakll_dsl::ast::*;
use weakll_dsl::{parse, parse_formula, parse_morph, parse_space};

fn sp(kind: SpaceKind) -> SpaceAst {
    SpaceAst { kind, span: Span::default() }
}

fn fm(kind: FormulaKind) -> FormulaAst {
    FormulaAst::new(kind)
}

fn mo(kind: MorphKind) -> MorphAst {
    MorphAst { kind, span: Span::default() }
}

fn name() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["E", "F", "X", "Y", "x1", "long_name", "dn", "up"]).prop_map(String::from)
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-30i64..30, 1i64..12).prop_map(|(n, d)| Scalar::ratio(n, d).unwrap())
}

fn space() -> impl Strategy<Value = SpaceAst> {
    let leaf = prop_oneof![
        (1usize..5).prop_map(|n| sp(SpaceKind::Base(n))),
        prop::sample::select(vec!["E", "F", "G"]).prop_map(|n| sp(SpaceKind::Named(n.into()))),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        let b = || inner.clone().prop_map(Box::new);
        prop_oneof![
            b().prop_map(|a| sp(SpaceKind::Dual(a))),
            (b(), b()).prop_map(|(a, c)| sp(SpaceKind::Tensor(a, c))),
            (b(), b()).prop_map(|(a, c)| sp(SpaceKind::Par(a, c))),
            (b(), b()).prop_map(|(a, c)| sp(SpaceKind::Prod(a, c))),
            (b(), b()).prop_map(|(a, c)| sp(SpaceKind::Coprod(a, c))),
            (b(), b()).prop_map(|(a, c)| sp(SpaceKind::Hom(a, c))),
            (b(), 0usize..5).prop_map(|(a, n)| sp(SpaceKind::SymPow(a, n))),
            (b(), 0usize..5).prop_map(|(a, n)| sp(SpaceKind::Bang(a, n))),
            (b(), 1usize..5).prop_map(|(a, n)| sp(SpaceKind::BangNonUnit(a, n))),
        ]
    })
}

fn formula() -> impl Strategy<Value = FormulaAst> {
    name().prop_map(|n| fm(FormulaKind::Atom(n))).prop_recursive(5, 32, 2, |inner| {
        let b = || inner.clone().prop_map(Box::new);
        let degree = prop::option::of(0usize..6);
        prop_oneof![
            b().prop_map(|a| fm(FormulaKind::Neg(a))),
            (b(), b()).prop_map(|(a, c)| fm(FormulaKind::Tensor(a, c))),
            (b(), b()).prop_map(|(a, c)| fm(FormulaKind::Par(a, c))),
            (b(), b()).prop_map(|(a, c)| fm(FormulaKind::With(a, c))),
            (b(), b()).prop_map(|(a, c)| fm(FormulaKind::Plus(a, c))),
            (degree.clone(), b()).prop_map(|(d, a)| fm(FormulaKind::Bang(d, a))),
            (degree, b()).prop_map(|(d, a)| fm(FormulaKind::WhyNot(d, a))),
            b().prop_map(|a| fm(FormulaKind::ShiftDown(a))),
            b().prop_map(|a| fm(FormulaKind::ShiftUp(a))),
        ]
    })
}

fn rows() -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    (1usize..4, 1usize..4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(scalar(), c), r))
}

fn param() -> impl Strategy<Value = Param> {
    prop_oneof![space().prop_map(Param::Space), (0usize..7).prop_map(Param::Int)]
}

fn combinator() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["id", "compose", "counit", "bang", "kcompose", "seely"]).prop_map(String::from)
}

fn morph() -> impl Strategy<Value = MorphAst> {
    let leaf = prop_oneof![
        name().prop_map(|n| mo(MorphKind::Var(n))),
        (space(), space(), rows()).prop_map(|(dom, cod, rows)| mo(MorphKind::Matrix { dom, cod, rows })),
        (space(), space(), 0usize..4, prop::collection::vec(rows(), 1..4), any::<bool>()).prop_map(
            |(dom, cod, degree, blocks, unit)| {
                let variant = if unit { SeqVariant::Unit } else { SeqVariant::NonUnit };
                mo(MorphKind::Seq { variant, dom, cod, degree, blocks })
            }
        ),
        (combinator(), prop::collection::vec(param(), 1..4))
            .prop_map(|(name, params)| mo(MorphKind::Apply { name, params, args: vec![] })),
    ];
    leaf.prop_recursive(3, 16, 3, |inner| {
        (combinator(), prop::collection::vec(param(), 0..3), prop::collection::vec(inner, 1..4))
            .prop_map(|(name, params, args)| mo(MorphKind::Apply { name, params, args }))
    })
}

fn type_ast() -> impl Strategy<Value = TypeAst> {
    prop_oneof![
        (space(), space()).prop_map(|(a, b)| TypeAst::Map(a, b)),
        (space(), space(), 0usize..5, any::<bool>()).prop_map(|(a, b, d, unit)| {
            TypeAst::Seq(if unit { SeqVariant::Unit } else { SeqVariant::NonUnit }, a, b, d)
        }),
    ]
}

fn item() -> impl Strategy<Value = Item> {
    let span = Span::default();
    prop_oneof![
        (name(), space()).prop_map(move |(name, space)| Item::Space { name, space, span }),
        (name(), morph()).prop_map(move |(name, expr)| Item::Let { name, expr, span }),
        (name(), formula()).prop_map(move |(name, formula)| Item::Formula { name, formula, span }),
        (name(), type_ast()).prop_map(move |(name, ty)| Item::Input { name, ty, span }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig { failure_persistence: None, ..ProptestConfig::with_cases(256) })]

    #[test]
    fn spaces_round_trip(s in space()) {
        prop_assert_eq!(parse_space(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn formulas_round_trip(f in formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn morphisms_round_trip(m in morph()) {
        prop_assert_eq!(parse_morph(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn programs_round_trip(items in prop::collection::vec(item(), 0..6)) {
        let p = Program { items };
        prop_assert_eq!(parse(&p.to_string()).unwrap(), p);
    }
}

#[test]
fn unicode_and_ascii_connectives_agree() {
    let a = parse_formula("↓(X ⊗ Y⊥) ⅋ ?Z ⊕ !W").unwrap();
    let b = parse_formula("dn (X * ~Y) | ?Z + !W").unwrap();
    assert_eq!(a, b);
}

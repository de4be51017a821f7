use proptest::prelude::*;

use weakll_core::combinat::{multiset_count, multisets};
use weakll_core::linalg::{kernel_containment_iff_span, solve_membership};
use weakll_core::mall::{self, Side};
use weakll_core::monomial::polarize;
use weakll_core::{LinMap, Matrix, Monomial, Scalar, SpaceExpr};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-9i64..=9, 1i64..=9).prop_map(|(p, q)| Scalar::ratio(p, q).unwrap())
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(scalar(), n)
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    vector(rows * cols).prop_map(move |e| Matrix::new(rows, cols, e).unwrap())
}

fn linmap(dom: SpaceExpr, cod: SpaceExpr) -> impl Strategy<Value = LinMap> {
    matrix(cod.dim(), dom.dim()).prop_map(move |m| LinMap::new(dom.clone(), cod.clone(), m).unwrap())
}

fn monomial(d: usize, e: usize, n: usize) -> impl Strategy<Value = Monomial> {
    matrix(e, multiset_count(d, n))
        .prop_map(move |m| Monomial::new(SpaceExpr::base(d), SpaceExpr::base(e), n, m).unwrap())
}

fn space() -> impl Strategy<Value = SpaceExpr> {
    let leaf = (1usize..=3).prop_map(SpaceExpr::base);
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(SpaceExpr::dual),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::tensor(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::par(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::prod(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::coprod(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| SpaceExpr::hom(a, b)),
            (inner, 0usize..=2).prop_map(|(a, n)| SpaceExpr::sym_pow(a, n)),
        ]
    })
    .prop_filter("total dimension at most 16", |s| (1..=16).contains(&s.dim()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_containment_matches_span(
        ls in prop::collection::vec(vector(4), 0..=3),
        l in vector(4),
        coeffs in vector(3),
        in_span in any::<bool>(),
    ) {
        let l = if in_span {
            (0..4).map(|k| ls.iter().zip(&coeffs).map(|(v, c)| &v[k] * c).sum()).collect()
        } else {
            l
        };
        let (a, b) = kernel_containment_iff_span(&l, &ls).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn membership_recombines(gens in prop::collection::vec(vector(4), 1..=3), coeffs in vector(3)) {
        let target: Vec<Scalar> = (0..4).map(|k| gens.iter().zip(&coeffs).map(|(v, c)| &v[k] * c).sum()).collect();
        let sol = solve_membership(&target, &gens).unwrap().expect("target lies in the span");
        let back: Vec<Scalar> = (0..4).map(|k| gens.iter().zip(&sol).map(|(v, c)| &v[k] * c).sum()).collect();
        prop_assert_eq!(back, target);
    }

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn double_dual_is_invertible_identity(s in space()) {
        let ev = mall::double_dual_ev(&s);
        prop_assert!(ev.is_identity());
        prop_assert!(ev.matrix().is_invertible());
        prop_assert!(mall::star_autonomy_check(&s));
    }

    #[test]
    fn curry_uncurry_inverse(
        (f, g) in (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(s, t, u)| {
            let (s, t, u) = (SpaceExpr::base(s), SpaceExpr::base(t), SpaceExpr::base(u));
            (linmap(mall::tensor_space(&s, &t), u.clone()), linmap(s, mall::hom_space(&t, &u)))
        })
    ) {
        prop_assert_eq!(mall::uncurry(&mall::curry(&f).unwrap()).unwrap(), f);
        prop_assert_eq!(mall::curry(&mall::uncurry(&g).unwrap()).unwrap(), g);
    }

    #[test]
    fn hom_dual_reconstructs(
        (s, t, phi) in (1usize..=3, 1usize..=3).prop_flat_map(|(s, t)| (Just(s), Just(t), vector(s * t)))
    ) {
        let (s, t) = (SpaceExpr::base(s), SpaceExpr::base(t));
        let pairs = mall::hom_dual_decompose(&s, &t, &phi).unwrap();
        for (u, expect) in phi.iter().enumerate() {
            let a: Vec<Scalar> = (0..phi.len()).map(|k| Scalar::from_int((k == u) as i64)).collect();
            prop_assert_eq!(&mall::eval_decomposition(&pairs, &s, &t, &a).unwrap(), expect);
        }
    }

    #[test]
    fn duals_of_products_are_invertible(s in 1usize..=4, t in 1usize..=4) {
        let (s, t) = (SpaceExpr::base(s), SpaceExpr::base(t));
        prop_assert!(mall::dual_of_prod(&s, &t).matrix().is_invertible());
        prop_assert!(mall::dual_of_coprod(&s, &t).matrix().is_invertible());
    }

    #[test]
    fn par_to_tensor_natural(
        (f, g) in (1usize..=3, 1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(a, b, c, d)| {
            (linmap(SpaceExpr::base(a), SpaceExpr::base(b)), linmap(SpaceExpr::base(c), SpaceExpr::base(d)))
        })
    ) {
        let lhs = mall::tensor_map(&f, &g).compose(&mall::par_to_tensor(f.dom(), g.dom())).unwrap();
        let rhs = mall::par_to_tensor(f.cod(), g.cod()).compose(&mall::par_map(&f, &g)).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert!(mall::par_to_tensor(f.dom(), g.dom()).matrix().is_invertible());
    }

    #[test]
    fn projections_after_pairing(
        (f, g) in (1usize..=3, 1usize..=3, 1usize..=3).prop_flat_map(|(a, b, c)| {
            (linmap(SpaceExpr::base(a), SpaceExpr::base(b)), linmap(SpaceExpr::base(a), SpaceExpr::base(c)))
        })
    ) {
        let p = mall::pair(&f, &g).unwrap();
        let (left, right) = (mall::projection(f.cod(), g.cod(), Side::Left), mall::projection(f.cod(), g.cod(), Side::Right));
        prop_assert_eq!(left.compose(&p).unwrap(), f);
        prop_assert_eq!(right.compose(&p).unwrap(), g);
    }

    #[test]
    fn polarize_inverts_eval(m in (1usize..=2, 1usize..=2, 0usize..=4).prop_flat_map(|(d, e, n)| monomial(d, e, n))) {
        let p = polarize(|x| m.eval(x).unwrap(), m.degree(), m.dom(), m.cod()).unwrap();
        prop_assert_eq!(p, m);
    }

    #[test]
    fn linearize_through_embedding(
        (m, x) in (1usize..=3, 0usize..=4).prop_flat_map(|(d, n)| (monomial(d, 2, n), vector(d)))
    ) {
        let emb = Monomial::sym_power_embed(m.dom(), m.degree());
        prop_assert_eq!(m.linearize().apply(&emb.eval(&x).unwrap()).unwrap(), m.eval(&x).unwrap());
    }

    #[test]
    fn composition_is_pointwise(
        (g, f, x) in (1usize..=2, 0usize..=2, 0usize..=2)
            .prop_flat_map(|(d, k, n)| (monomial(d, 1, k), monomial(d, d, n), vector(d)))
    ) {
        let c = Monomial::compose(&g, &f).unwrap();
        prop_assert_eq!(c.degree(), g.degree() * f.degree());
        prop_assert_eq!(c.eval(&x).unwrap(), g.eval(&f.eval(&x).unwrap()).unwrap());
    }

    #[test]
    fn homogeneous_of_its_degree(
        (m, x, l) in (1usize..=3, 0usize..=4).prop_flat_map(|(d, n)| (monomial(d, 2, n), vector(d), scalar()))
    ) {
        let lx: Vec<Scalar> = x.iter().map(|c| c * &l).collect();
        let expect: Vec<Scalar> = m.eval(&x).unwrap().iter().map(|c| c * &l.pow(m.degree() as u32)).collect();
        prop_assert_eq!(m.eval(&lx).unwrap(), expect);
    }

    #[test]
    fn sym_pow_dimension_is_stars_and_bars(d in 1usize..=5, n in 0usize..=5) {
        // brute force: count nondecreasing index tuples
        let mut count = 0usize;
        let mut stack = vec![(0usize, 0usize)];
        while let Some((len, min)) = stack.pop() {
            if len == n {
                count += 1;
                continue;
            }
            for i in min..d {
                stack.push((len + 1, i));
            }
        }
        prop_assert_eq!(SpaceExpr::sym_pow(SpaceExpr::base(d), n).dim(), count);
        prop_assert_eq!(multisets(d, n).len(), count);
    }
}

#[test]
fn sym_pow_example() {
    assert_eq!(SpaceExpr::sym_pow(SpaceExpr::base(2), 3).dim(), 4);
}

#[test]
fn polarization_of_square() {
    // x² on 𝕂 polarizes to (x, y) ↦ xy
    let k = SpaceExpr::base(1);
    let sq = polarize(|x| vec![&x[0] * &x[0]], 2, &k, &k).unwrap();
    let (x, y) = (Scalar::from_int(3), Scalar::ratio(-2, 5).unwrap());
    assert_eq!(sq.multilinear(&[vec![x.clone()], vec![y.clone()]]).unwrap(), vec![&x * &y]);
}

#[test]
fn hexagon_and_pentagon() {
    use weakll_core::laws::{monoidal_coherence, Outcome};
    assert_eq!(monoidal_coherence([1, 2, 3, 2]).unwrap(), Outcome::Pass);
    assert_eq!(monoidal_coherence([2, 3, 1, 2]).unwrap(), Outcome::Pass);
}

//! The non-unit exponential `!₁S = ⊕_{1≤n≤D} SymPow(S, n)`, whose co-Kleisli
//! composition is substitution of power series without constant term:
//!
//! ```text
//! (g∘f)_p(x) = Σ_{n=1}^{p} Σ_{k₁+…+kₙ=p, kᵢ≥1} ĝₙ(f_{k₁}(x), …, f_{kₙ}(x))
//! ```

use crate::combinat::compositions;
use crate::error::{Error, Result};
use crate::exponential::{ev_symbolic, from_bang_images, grade_offset, tensor_polyvec};
use crate::linmap::SparseMap;
use crate::monomial::{Monomial, MonomialSeq, SeqVariant};
use crate::poly::{self, PolyVec};
use crate::space::SpaceExpr;

pub use crate::exponential::{kleisli_to_seq, seq_to_kleisli};

pub fn nonunit_bang_space(s: &SpaceExpr, degree: usize) -> SpaceExpr {
    SpaceExpr::bang_non_unit(s.clone(), degree)
}

pub fn nonunit_bang_map(f: &SparseMap, degree: usize) -> SparseMap {
    crate::exponential::bang_map_nonunit(f, degree)
}

/// Projection onto grade 1.
pub fn nonunit_counit(s: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    crate::exponential::counit_nonunit(s, degree)
}

/// `δ₁: !₁S → !₁!₁S`,
/// `ev_x^p ↦ Σ_{n=1}^{p} Σ_{k₁+…+kₙ=p} ev_x^{k₁} ⋯ ev_x^{kₙ}` at grade `n`.
pub fn nonunit_comultiplication(s: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    let b = nonunit_bang_space(s, degree);
    let bb = nonunit_bang_space(&b, degree);
    let (d, db) = (s.dim(), b.dim());
    from_bang_images(&b, &bb, |p| {
        let evs: Vec<PolyVec> = (0..=p).map(|k| ev_symbolic(d, 1, k, 0)).collect();
        let mut out = PolyVec::new();
        for n in 1..=p {
            for comp in compositions(p, n) {
                let factors: Vec<&PolyVec> = comp.iter().map(|&k| &evs[k]).collect();
                let sym = poly::place(poly::sym_product(&factors), db, grade_offset(db, 1, n));
                poly::rvec_add(&mut out, &sym);
            }
        }
        Ok(out)
    })
}

/// Co-Kleisli composition of non-unit sequences (power-series substitution).
pub fn substitute_compose(g: &MonomialSeq, f: &MonomialSeq) -> Result<MonomialSeq> {
    g.check_composable(f)?;
    if g.variant() != SeqVariant::NonUnit || f.variant() != SeqVariant::NonUnit {
        return Err(Error::shape("non-unit sequences", "unit sequence"));
    }
    let degree = f.truncation();
    let fx: Vec<PolyVec> = f.monomials().iter().map(Monomial::symbolic).collect();
    let df = f.cod().dim();
    let mut out = MonomialSeq::zero(SeqVariant::NonUnit, f.dom().clone(), g.cod().clone(), degree);
    for p in 1..=degree {
        let mut image = PolyVec::new();
        for n in 1..=p {
            let gn = g.get(n).expect("n ≤ D");
            let cols = gn.columns();
            for comp in compositions(p, n) {
                let factors: Vec<&PolyVec> = comp.iter().map(|&k| &fx[k - 1]).collect();
                let sym = poly::place(poly::sym_product(&factors), df, 0);
                poly::rvec_add(&mut image, &poly::apply_columns(&cols, &sym));
            }
        }
        out.set(Monomial::from_symbolic(f.dom().clone(), g.cod().clone(), p, &image)?)?;
    }
    Ok(out)
}

/// `!₁(S × T) → !₁S ⊗ !₁T`, `ev_{(x,y)}^p ↦ Σ_{n+m=p, n,m≥1} ev_x^n ⊗ ev_y^m`.
///
/// The pure grades `(n, 0)` and `(0, m)` of `!₁(S × T)` have no counterpart in
/// `!₁S ⊗ !₁T`, so this map is not injective.
pub fn nonunit_seely(s: &SpaceExpr, t: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    let (ds, dt) = (s.dim(), t.dim());
    let bt = nonunit_bang_space(t, degree);
    let dom = nonunit_bang_space(&SpaceExpr::prod(s.clone(), t.clone()), degree);
    let cod = SpaceExpr::tensor(nonunit_bang_space(s, degree), bt.clone());
    let dim_bt = bt.dim();
    from_bang_images(&dom, &cod, |p| {
        let mut out = PolyVec::new();
        for n in 1..p {
            let u = ev_symbolic(ds, 1, n, 0);
            let v = ev_symbolic(dt, 1, p - n, ds);
            poly::rvec_add(&mut out, &tensor_polyvec(&u, &v, dim_bt));
        }
        Ok(out)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::linmap::LinMap;
    use crate::scalar::Scalar;

    fn k() -> SpaceExpr {
        SpaceExpr::base(1)
    }

    fn seq(coeffs: &[i64]) -> MonomialSeq {
        let ms = coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                Monomial::new(k(), k(), i + 1, Matrix::from_rows(vec![vec![Scalar::from_int(c)]]).unwrap()).unwrap()
            })
            .collect();
        MonomialSeq::new(SeqVariant::NonUnit, k(), k(), coeffs.len(), ms).unwrap()
    }

    #[test]
    fn square_of_x_plus_x2() {
        // g = x², f = x + x² ↦ x² + 2x³ + x⁴
        let g = seq(&[0, 1, 0, 0]);
        let f = seq(&[1, 1, 0, 0]);
        assert_eq!(substitute_compose(&g, &f).unwrap(), seq(&[0, 1, 2, 1]));
    }

    #[test]
    fn identity_is_neutral() {
        let g = seq(&[3, -1, 2, 5]);
        let id = MonomialSeq::dereliction(SeqVariant::NonUnit, &k(), 4).unwrap();
        assert_eq!(substitute_compose(&g, &id).unwrap(), g);
        assert_eq!(substitute_compose(&id, &g).unwrap(), g);
    }

    #[test]
    fn dimensions_and_functor() {
        assert_eq!(nonunit_bang_space(&k(), 3).dim(), 3);
        assert!(nonunit_bang_map(&LinMap::identity(SpaceExpr::base(2)).to_sparse(), 3).is_identity());
    }

    #[test]
    fn counit_laws() {
        let s = SpaceExpr::base(1);
        let dl = nonunit_comultiplication(&s, 4).unwrap();
        let eps = nonunit_counit(&s, 4).unwrap();
        let eps_b = nonunit_counit(&nonunit_bang_space(&s, 4), 4).unwrap();
        assert!(eps_b.compose(&dl).unwrap().is_identity());
        assert!(nonunit_bang_map(&eps, 4).compose(&dl).unwrap().is_identity());
    }

    #[test]
    fn seely_drops_pure_grades() {
        let se = nonunit_seely(&k(), &k(), 2).unwrap();
        assert_eq!(se.dom().dim(), 5);
        assert_eq!(se.cod().dim(), 4);
        // grade 1 of !₁(𝕂×𝕂) has no image
        assert!(se.column(0).is_zero() && se.column(1).is_zero());
    }
}

//! Deterministic random instances over small rationals.
//!
//! Scalars have numerators in `[-9, 9]` and denominators in `[1, 9]`. Every
//! generator is seeded from a base seed and a string salt, so each law draws
//! an independent, reproducible stream.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::multiset_count;
use crate::linalg::Matrix;
use crate::linmap::LinMap;
use crate::monomial::{Monomial, MonomialSeq, SeqVariant};
use crate::scalar::Scalar;
use crate::space::SpaceExpr;

pub type Gen = ChaCha8Rng;

/// FNV-1a, used to fold a salt into the seed.
fn fnv(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn rng(seed: u64, salt: &str) -> Gen {
    ChaCha8Rng::seed_from_u64(seed ^ fnv(salt))
}

pub fn scalar(g: &mut Gen) -> Scalar {
    let p = g.gen_range(-9..=9);
    let q = g.gen_range(1..=9);
    Scalar::ratio(p, q).expect("nonzero denominator")
}

pub fn nonzero_scalar(g: &mut Gen) -> Scalar {
    loop {
        let s = scalar(g);
        if !s.is_zero() {
            return s;
        }
    }
}

pub fn vector(g: &mut Gen, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| scalar(g)).collect()
}

pub fn matrix(g: &mut Gen, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| scalar(g))
}

pub fn linmap(g: &mut Gen, dom: &SpaceExpr, cod: &SpaceExpr) -> LinMap {
    LinMap::new(dom.clone(), cod.clone(), matrix(g, cod.dim(), dom.dim())).expect("shape")
}

pub fn monomial(g: &mut Gen, dom: &SpaceExpr, cod: &SpaceExpr, degree: usize) -> Monomial {
    let cols = multiset_count(dom.dim(), degree);
    Monomial::new(dom.clone(), cod.clone(), degree, matrix(g, cod.dim(), cols)).expect("shape")
}

pub fn seq(g: &mut Gen, variant: SeqVariant, dom: &SpaceExpr, cod: &SpaceExpr, truncation: usize) -> MonomialSeq {
    let ms = (variant.lowest_degree()..=truncation).map(|n| monomial(g, dom, cod, n)).collect();
    MonomialSeq::new(variant, dom.clone(), cod.clone(), truncation, ms).expect("shape")
}

/// Random space expression of dimension at most `max_dim` (at least 1),
/// built from the MALL constructors and small symmetric powers.
pub fn space(g: &mut Gen, max_dim: usize) -> SpaceExpr {
    let max_dim = max_dim.max(1);
    loop {
        let s = space_rec(g, max_dim, 3);
        if (1..=max_dim).contains(&s.dim()) {
            return s;
        }
    }
}

fn space_rec(g: &mut Gen, max_dim: usize, depth: usize) -> SpaceExpr {
    if depth == 0 || max_dim <= 1 {
        return SpaceExpr::base(g.gen_range(1..=max_dim.clamp(1, 4)));
    }
    let half = (max_dim / 2).max(1);
    match g.gen_range(0..9) {
        0 | 1 => SpaceExpr::base(g.gen_range(1..=max_dim.min(4))),
        2 => SpaceExpr::dual(space_rec(g, max_dim, depth - 1)),
        3 => SpaceExpr::tensor(space_rec(g, half, depth - 1), space_rec(g, half, depth - 1)),
        4 => SpaceExpr::par(space_rec(g, half, depth - 1), space_rec(g, half, depth - 1)),
        5 => SpaceExpr::prod(space_rec(g, half, depth - 1), space_rec(g, half, depth - 1)),
        6 => SpaceExpr::coprod(space_rec(g, half, depth - 1), space_rec(g, half, depth - 1)),
        7 => SpaceExpr::hom(space_rec(g, half, depth - 1), space_rec(g, half, depth - 1)),
        _ => SpaceExpr::sym_pow(space_rec(g, 2, depth - 1), g.gen_range(0..=2)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let a: Vec<Scalar> = vector(&mut rng(42, "x"), 10);
        let b: Vec<Scalar> = vector(&mut rng(42, "x"), 10);
        let c: Vec<Scalar> = vector(&mut rng(42, "y"), 10);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn spaces_respect_bound() {
        let mut g = rng(7, "spaces");
        for _ in 0..200 {
            let s = space(&mut g, 16);
            assert!((1..=16).contains(&s.dim()), "{s}");
        }
    }
}

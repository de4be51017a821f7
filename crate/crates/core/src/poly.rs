//! Sparse multivariate polynomials over ℚ and symmetric products.
//!
//! Structure maps on exponential spaces are defined by their value on the
//! elements `ev_x^p = x^{⊗p}`. Treating `x` as a vector of formal variables
//! turns such a definition into a vector of polynomials; reading off the
//! coefficient of each monomial `x^α` (divided by the multiplicity of `α`)
//! recovers the matrix column of the basis vector `e_α`.

use std::collections::BTreeMap;

use crate::combinat::{insert_sorted, multiplicity, multiset_count, rank};
use crate::error::{Error, Result};
use crate::linalg::SparseVec;
use crate::scalar::Scalar;

/// Minimal commutative ring interface shared by scalars and polynomials.
pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, rhs: &Self);
    fn mul_ref(&self, rhs: &Self) -> Self;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

/// Polynomial in variables `0, 1, …`; each key is the sorted list of variable
/// indices of a monomial (so `x0²x3` is `[0, 0, 3]`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly(BTreeMap<Vec<usize>, Scalar>);

impl Poly {
    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.0.insert(Vec::new(), c);
        }
        p
    }

    pub fn var(i: usize) -> Self {
        Poly::term(vec![i], Scalar::one())
    }

    pub fn term(mono: Vec<usize>, c: Scalar) -> Self {
        let mut p = Poly::default();
        if !c.is_zero() {
            p.0.insert(mono, c);
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.0.iter()
    }

    pub fn coeff(&self, mono: &[usize]) -> Scalar {
        self.0.get(mono).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mono: Vec<usize>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        add_into(&mut self.0, mono, c.clone());
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        if s.is_zero() {
            return Poly::default();
        }
        Poly(self.0.iter().map(|(k, v)| (k.clone(), v * s)).collect())
    }

    /// Evaluates at a point, with variable `i` set to `point[i]`.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.0
            .iter()
            .map(|(mono, c)| mono.iter().fold(c.clone(), |acc, &v| acc * &point[v]))
            .sum()
    }
}

impl Ring for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn one() -> Self {
        Poly::constant(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (k, v) in &rhs.0 {
            let slot = self.0.entry(k.clone()).or_default();
            *slot += v;
        }
        self.0.retain(|_, v| !v.is_zero());
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
        for (a, x) in &self.0 {
            for (b, y) in &rhs.0 {
                let mono = crate::combinat::merge_sorted(a, b);
                *out.entry(mono).or_default() += x * y;
            }
        }
        out.retain(|_, v| !v.is_zero());
        Poly(out)
    }
}

/// Sparse vector with coefficients in a ring.
pub type RVec<R> = BTreeMap<usize, R>;

/// A vector of polynomials.
pub type PolyVec = RVec<Poly>;

fn add_into<R: Ring, K: Ord>(map: &mut BTreeMap<K, R>, key: K, value: R) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(value);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            e.get_mut().add_assign_ref(&value);
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn rvec_add<R: Ring>(acc: &mut RVec<R>, other: &RVec<R>) {
    for (&i, v) in other {
        add_into(acc, i, v.clone());
    }
}

pub fn rvec_scale<R: Ring>(v: &RVec<R>, s: &R) -> RVec<R> {
    let mut out = RVec::new();
    for (&i, x) in v {
        add_into(&mut out, i, x.mul_ref(s));
    }
    out
}

/// Symmetric product `v₁ ⋯ vₙ` in multiset coordinates:
/// `Σ_{j₁…jₙ} ∏ vₖ[jₖ] · e_{sort(j)}`. With all factors equal to `x` this is
/// `x^{⊗n}`; on basis vectors it maps `(e_{i₁},…,e_{iₙ})` to `e_{sort(i)}`.
pub fn sym_product<R: Ring>(factors: &[&RVec<R>]) -> BTreeMap<Vec<usize>, R> {
    let mut acc: BTreeMap<Vec<usize>, R> = BTreeMap::new();
    acc.insert(Vec::new(), R::one());
    for v in factors {
        let mut next: BTreeMap<Vec<usize>, R> = BTreeMap::new();
        for (ms, c) in &acc {
            for (&j, x) in v.iter() {
                add_into(&mut next, insert_sorted(ms, j), c.mul_ref(x));
            }
        }
        acc = next;
    }
    acc
}

/// `x^{⊗n}` for a single vector.
pub fn sym_power<R: Ring>(x: &RVec<R>, n: usize) -> BTreeMap<Vec<usize>, R> {
    let factors = vec![x; n];
    sym_product(&factors)
}

/// Re-indexes a multiset-keyed vector into `SymPow` coordinates shifted by
/// `offset`, with `d` the dimension of the underlying space.
pub fn place<R: Ring>(sym: BTreeMap<Vec<usize>, R>, d: usize, offset: usize) -> RVec<R> {
    let mut out = RVec::new();
    for (ms, c) in sym {
        add_into(&mut out, offset + rank(&ms, d), c);
    }
    out
}

/// The formal vector `x = (x₀, …, x_{d-1})`, shifted to variables starting at
/// `first_var`.
pub fn symbolic_vector(d: usize, first_var: usize) -> PolyVec {
    (0..d).map(|i| (i, Poly::var(first_var + i))).collect()
}

pub fn scalar_to_poly(v: &SparseVec) -> PolyVec {
    v.iter().map(|(i, c)| (i, Poly::constant(c.clone()))).collect()
}

/// Applies a linear map given by sparse columns to a polynomial vector.
pub fn apply_columns(columns: &[SparseVec], v: &PolyVec) -> PolyVec {
    let mut out = PolyVec::new();
    for (&j, p) in v {
        for (i, c) in columns[j].iter() {
            add_into(&mut out, i, p.scale(c));
        }
    }
    out
}

/// Reads off matrix columns from the image of `x^{⊗n}`, where `x` ranges over
/// the first `nvars` variables: column `rank(α)` gets `coeff(x^α) / mult(α)`.
pub fn linearize(image: &PolyVec, nvars: usize, n: usize) -> Result<Vec<SparseVec>> {
    let mut cols = vec![SparseVec::new(); multiset_count(nvars, n)];
    for (&t, p) in image {
        for (mono, c) in p.terms() {
            if mono.len() != n || mono.last().is_some_and(|&v| v >= nvars) {
                return Err(Error::NotHomogeneous { degree: n });
            }
            let m = Scalar::from_u128(multiplicity(mono));
            cols[rank(mono, nvars)].add_at(t, &c.checked_div(&m)?);
        }
    }
    Ok(cols)
}

/// Bihomogeneous variant of [`linearize`] for the image of
/// `x^{⊗n} ⊗ y^{⊗m}`, with `x` the variables `0..dx` and `y` the variables
/// `dx..dx+dy`. Returns columns indexed by `(rank α, rank β)` flattened as
/// `rank α · C(dy+m-1, m) + rank β`.
pub fn linearize_bi(image: &PolyVec, dx: usize, dy: usize, n: usize, m: usize) -> Result<Vec<SparseVec>> {
    let cy = multiset_count(dy, m);
    let mut cols = vec![SparseVec::new(); multiset_count(dx, n) * cy];
    for (&t, p) in image {
        for (mono, c) in p.terms() {
            let split = mono.partition_point(|&v| v < dx);
            let (a, b) = mono.split_at(split);
            let b: Vec<usize> = b.iter().map(|&v| v - dx).collect();
            if a.len() != n || b.len() != m || b.last().is_some_and(|&v| v >= dy) {
                return Err(Error::NotHomogeneous { degree: n + m });
            }
            let mult = Scalar::from_u128(multiplicity(a) * multiplicity(&b));
            cols[rank(a, dx) * cy + rank(&b, dy)].add_at(t, &c.checked_div(&mult)?);
        }
    }
    Ok(cols)
}

/// Keeps only the terms of bidegree `(n, m)` in the variable split at `dx`.
pub fn bihomogeneous_part(v: &PolyVec, dx: usize, n: usize, m: usize) -> PolyVec {
    let mut out = PolyVec::new();
    for (&t, p) in v {
        let mut q = Poly::default();
        for (mono, c) in p.terms() {
            let split = mono.partition_point(|&x| x < dx);
            if split == n && mono.len() - split == m {
                q.add_term(mono.clone(), c);
            }
        }
        add_into(&mut out, t, q);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    #[test]
    fn poly_arithmetic() {
        let x = Poly::var(0);
        let y = Poly::var(1);
        let mut p = x.clone();
        p.add_assign_ref(&y);
        let sq = p.mul_ref(&p);
        assert_eq!(sq.coeff(&[0, 0]), s(1));
        assert_eq!(sq.coeff(&[0, 1]), s(2));
        assert_eq!(sq.coeff(&[1, 1]), s(1));
        assert_eq!(sq.eval(&[s(2), s(3)]), s(25));
        let mut z = x.clone();
        z.add_assign_ref(&x.scale(&s(-1)));
        assert!(z.is_zero());
    }

    #[test]
    fn sym_square_of_ones() {
        // (e0 + e1)^{⊗2} = e00 + 2 e01 + e11 in multiset coordinates
        let v: RVec<Scalar> = [(0, s(1)), (1, s(1))].into_iter().collect();
        let sq = place(sym_power(&v, 2), 2, 0);
        assert_eq!(sq.get(&0), Some(&s(1)));
        assert_eq!(sq.get(&1), Some(&s(2)));
        assert_eq!(sq.get(&2), Some(&s(1)));
    }

    #[test]
    fn sym_product_of_basis_vectors() {
        let e1: RVec<Scalar> = [(1, s(1))].into_iter().collect();
        let e0: RVec<Scalar> = [(0, s(1))].into_iter().collect();
        let p = sym_product(&[&e1, &e0, &e1]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.get(&vec![0, 1, 1]), Some(&s(1)));
    }

    #[test]
    fn linearize_symbolic_power_is_identity() {
        let x = symbolic_vector(3, 0);
        let image = place(sym_power(&x, 2), 3, 0);
        let cols = linearize(&image, 3, 2).unwrap();
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c, &SparseVec::unit(j));
        }
    }

    #[test]
    fn bihomogeneous_split() {
        // (x0 + y0)^2 restricted to bidegree (1,1) is 2 x0 y0
        let mut p = Poly::var(0);
        p.add_assign_ref(&Poly::var(1));
        let v: PolyVec = [(0, p.mul_ref(&p))].into_iter().collect();
        let bi = bihomogeneous_part(&v, 1, 1, 1);
        assert_eq!(bi[&0].coeff(&[0, 1]), s(2));
        let cols = linearize_bi(&bi, 1, 1, 1, 1).unwrap();
        assert_eq!(cols[0].get(0), s(2));
    }
}

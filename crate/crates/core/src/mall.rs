//! Multiplicative-additive structure: duals, tensor and par, binary
//! products and coproducts, internal hom with currying, and the canonical
//! isomorphisms between them.
//!
//! All structural isomorphisms are basis permutations on canonical bases; most
//! are literally the identity matrix between two differently shaped spaces.

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseMatrix};
use crate::linmap::{LinMap, SparseMap};
use crate::scalar::Scalar;
use crate::space::SpaceExpr;

fn relabel(dom: SpaceExpr, cod: SpaceExpr) -> LinMap {
    let n = dom.dim();
    LinMap::new_unchecked(dom, cod, Matrix::identity(n))
}

fn permutation(dom: SpaceExpr, cod: SpaceExpr, perm: impl Fn(usize) -> usize) -> LinMap {
    let n = dom.dim();
    let m = SparseMatrix::permutation(cod.dim(), (0..n).map(perm)).to_dense();
    LinMap::new_unchecked(dom, cod, m)
}

pub fn dual_space(s: &SpaceExpr) -> SpaceExpr {
    SpaceExpr::dual(s.clone())
}

/// `f: S → T` gives `fᵗ: T' → S'`, precomposition of linear forms with `f`.
pub fn transpose(f: &LinMap) -> LinMap {
    LinMap::new_unchecked(dual_space(f.cod()), dual_space(f.dom()), f.matrix().transpose())
}

/// Canonical evaluation `S → S''`, `x ↦ (l ↦ l(x))`.
pub fn double_dual_ev(s: &SpaceExpr) -> LinMap {
    relabel(s.clone(), dual_space(&dual_space(s)))
}

pub fn double_dual_ev_inverse(s: &SpaceExpr) -> LinMap {
    relabel(dual_space(&dual_space(s)), s.clone())
}

pub fn tensor_space(s: &SpaceExpr, t: &SpaceExpr) -> SpaceExpr {
    SpaceExpr::tensor(s.clone(), t.clone())
}

pub fn tensor_map(f: &LinMap, g: &LinMap) -> LinMap {
    LinMap::new_unchecked(
        tensor_space(f.dom(), g.dom()),
        tensor_space(f.cod(), g.cod()),
        f.matrix().kron(g.matrix()),
    )
}

/// `(S ⊗ T) ⊗ U → S ⊗ (T ⊗ U)`.
pub fn associator(s: &SpaceExpr, t: &SpaceExpr, u: &SpaceExpr) -> LinMap {
    relabel(
        tensor_space(&tensor_space(s, t), u),
        tensor_space(s, &tensor_space(t, u)),
    )
}

pub fn associator_inverse(s: &SpaceExpr, t: &SpaceExpr, u: &SpaceExpr) -> LinMap {
    relabel(
        tensor_space(s, &tensor_space(t, u)),
        tensor_space(&tensor_space(s, t), u),
    )
}

/// `S ⊗ T → T ⊗ S`.
pub fn symmetry(s: &SpaceExpr, t: &SpaceExpr) -> LinMap {
    let (ds, dt) = (s.dim(), t.dim());
    permutation(tensor_space(s, t), tensor_space(t, s), |k| (k % dt) * ds + k / dt)
}

/// `(A ⊗ B) ⊗ (C ⊗ D) → (A ⊗ C) ⊗ (B ⊗ D)`.
pub fn middle_swap(a: &SpaceExpr, b: &SpaceExpr, c: &SpaceExpr, d: &SpaceExpr) -> LinMap {
    let (db, dc, dd) = (b.dim(), c.dim(), d.dim());
    let dom = tensor_space(&tensor_space(a, b), &tensor_space(c, d));
    let cod = tensor_space(&tensor_space(a, c), &tensor_space(b, d));
    permutation(dom, cod, |k| middle_swap_index(db, dc, dd, k))
}

fn middle_swap_index(db: usize, dc: usize, dd: usize, k: usize) -> usize {
    let (ab, cd) = (k / (dc * dd), k % (dc * dd));
    let (i, j) = (ab / db, ab % db);
    let (l, m) = (cd / dd, cd % dd);
    (i * dc + l) * (db * dd) + j * dd + m
}

/// `𝕂 ⊗ S → S`.
pub fn left_unitor(s: &SpaceExpr) -> LinMap {
    relabel(tensor_space(&SpaceExpr::unit(), s), s.clone())
}

/// `S ⊗ 𝕂 → S`.
pub fn right_unitor(s: &SpaceExpr) -> LinMap {
    relabel(tensor_space(s, &SpaceExpr::unit()), s.clone())
}

pub fn left_unitor_inverse(s: &SpaceExpr) -> LinMap {
    relabel(s.clone(), tensor_space(&SpaceExpr::unit(), s))
}

pub fn right_unitor_inverse(s: &SpaceExpr) -> LinMap {
    relabel(s.clone(), tensor_space(s, &SpaceExpr::unit()))
}

pub fn par_space(s: &SpaceExpr, t: &SpaceExpr) -> SpaceExpr {
    SpaceExpr::par(s.clone(), t.clone())
}

/// `S ⅋ T → S ⊗ T`. The basis vector `(i, j)` of `S ⅋ T` is the bilinear form
/// `(φ, ψ) ↦ φ(eᵢ)ψ(fⱼ)` on `S' × T'`, which is the image of `eᵢ ⊗ fⱼ`.
pub fn par_to_tensor(s: &SpaceExpr, t: &SpaceExpr) -> LinMap {
    relabel(par_space(s, t), tensor_space(s, t))
}

pub fn tensor_to_par(s: &SpaceExpr, t: &SpaceExpr) -> LinMap {
    relabel(tensor_space(s, t), par_space(s, t))
}

pub fn par_map(f: &LinMap, g: &LinMap) -> LinMap {
    LinMap::new_unchecked(par_space(f.dom(), g.dom()), par_space(f.cod(), g.cod()), f.matrix().kron(g.matrix()))
}

pub fn prod_space(s: &SpaceExpr, t: &SpaceExpr) -> SpaceExpr {
    SpaceExpr::prod(s.clone(), t.clone())
}

pub fn coprod_space(s: &SpaceExpr, t: &SpaceExpr) -> SpaceExpr {
    SpaceExpr::coprod(s.clone(), t.clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn block(dom: SpaceExpr, cod: SpaceExpr, row_offset: usize, col_offset: usize, n: usize) -> LinMap {
    let mut m = Matrix::zeros(cod.dim(), dom.dim());
    for k in 0..n {
        m.set(row_offset + k, col_offset + k, Scalar::one());
    }
    LinMap::new_unchecked(dom, cod, m)
}

/// Projection `S × T → S` or `S × T → T`.
pub fn projection(s: &SpaceExpr, t: &SpaceExpr, side: Side) -> LinMap {
    let dom = prod_space(s, t);
    match side {
        Side::Left => block(dom, s.clone(), 0, 0, s.dim()),
        Side::Right => block(dom, t.clone(), 0, s.dim(), t.dim()),
    }
}

/// Injection `S → S ⊕ T` or `T → S ⊕ T`.
pub fn injection(s: &SpaceExpr, t: &SpaceExpr, side: Side) -> LinMap {
    let cod = coprod_space(s, t);
    match side {
        Side::Left => block(s.clone(), cod, 0, 0, s.dim()),
        Side::Right => block(t.clone(), cod, s.dim(), 0, t.dim()),
    }
}

/// Injection into the product, which is also a coproduct in finite dimension.
pub fn prod_injection(s: &SpaceExpr, t: &SpaceExpr, side: Side) -> LinMap {
    let i = injection(s, t, side);
    let dom = i.dom().clone();
    LinMap::new_unchecked(dom, prod_space(s, t), i.matrix().clone())
}

/// Projection out of the coproduct, which is also a product in finite dimension.
pub fn coprod_projection(s: &SpaceExpr, t: &SpaceExpr, side: Side) -> LinMap {
    let p = projection(s, t, side);
    let cod = p.cod().clone();
    LinMap::new_unchecked(coprod_space(s, t), cod, p.matrix().clone())
}

/// `S × T → S ⊕ T`.
pub fn biproduct_iso(s: &SpaceExpr, t: &SpaceExpr) -> LinMap {
    relabel(prod_space(s, t), coprod_space(s, t))
}

/// `⟨f, g⟩: U → S × T`.
pub fn pair(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    if f.dom() != g.dom() {
        return Err(Error::shape(f.dom(), g.dom()));
    }
    let (a, b) = (f.matrix(), g.matrix());
    let m = Matrix::from_fn(a.rows() + b.rows(), a.cols(), |i, j| {
        if i < a.rows() { a.get(i, j).clone() } else { b.get(i - a.rows(), j).clone() }
    });
    Ok(LinMap::new_unchecked(f.dom().clone(), prod_space(f.cod(), g.cod()), m))
}

/// `[f, g]: S ⊕ T → U`.
pub fn copair(f: &LinMap, g: &LinMap) -> Result<LinMap> {
    if f.cod() != g.cod() {
        return Err(Error::shape(f.cod(), g.cod()));
    }
    let (a, b) = (f.matrix(), g.matrix());
    let m = Matrix::from_fn(a.rows(), a.cols() + b.cols(), |i, j| {
        if j < a.cols() { a.get(i, j).clone() } else { b.get(i, j - a.cols()).clone() }
    });
    Ok(LinMap::new_unchecked(coprod_space(f.dom(), g.dom()), f.cod().clone(), m))
}

/// `f × g: S × T → S' × T'`, block diagonal.
pub fn prod_map(f: &LinMap, g: &LinMap) -> LinMap {
    let (a, b) = (f.matrix(), g.matrix());
    let m = Matrix::from_fn(a.rows() + b.rows(), a.cols() + b.cols(), |i, j| {
        match (i < a.rows(), j < a.cols()) {
            (true, true) => a.get(i, j).clone(),
            (false, false) => b.get(i - a.rows(), j - a.cols()).clone(),
            _ => Scalar::zero(),
        }
    });
    LinMap::new_unchecked(prod_space(f.dom(), g.dom()), prod_space(f.cod(), g.cod()), m)
}

/// `(S × T)' → S' ⊕ T'`: a form on the product splits into its restrictions.
pub fn dual_of_prod(s: &SpaceExpr, t: &SpaceExpr) -> LinMap {
    relabel(dual_space(&prod_space(s, t)), coprod_space(&dual_space(s), &dual_space(t)))
}

/// `(S ⊕ T)' → S' × T'`.
pub fn dual_of_coprod(s: &SpaceExpr, t: &SpaceExpr) -> LinMap {
    relabel(dual_space(&coprod_space(s, t)), prod_space(&dual_space(s), &dual_space(t)))
}

pub fn hom_space(s: &SpaceExpr, t: &SpaceExpr) -> SpaceExpr {
    SpaceExpr::hom(s.clone(), t.clone())
}

/// The vector of `Hom(S, T)` representing `f`: coordinate `(i, j)` is the
/// `fⱼ`-component of `f(eᵢ)`.
pub fn name_of(f: &LinMap) -> Vec<Scalar> {
    let (m, n) = (f.dom().dim(), f.cod().dim());
    let mut v = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            v.push(f.matrix().get(j, i).clone());
        }
    }
    v
}

/// Inverse of [`name_of`].
pub fn map_of(s: &SpaceExpr, t: &SpaceExpr, v: &[Scalar]) -> Result<LinMap> {
    let (m, n) = (s.dim(), t.dim());
    if v.len() != m * n {
        return Err(Error::DimensionMismatch { expected: m * n, found: v.len() });
    }
    let mat = Matrix::from_fn(n, m, |j, i| v[i * n + j].clone());
    Ok(LinMap::new_unchecked(s.clone(), t.clone(), mat))
}

/// Evaluation `Hom(T, U) ⊗ T → U`.
pub fn ev(t: &SpaceExpr, u: &SpaceExpr) -> LinMap {
    let (dt, du) = (t.dim(), u.dim());
    let dom = tensor_space(&hom_space(t, u), t);
    let mut m = Matrix::zeros(du, dom.dim());
    for j in 0..dt {
        for k in 0..du {
            // basis ([eⱼ ↦ u_k], eⱼ) ↦ u_k
            m.set(k, (j * du + k) * dt + j, Scalar::one());
        }
    }
    LinMap::new_unchecked(dom, u.clone(), m)
}

/// `f: S ⊗ T → U` gives `S → Hom(T, U)`.
pub fn curry(f: &LinMap) -> Result<LinMap> {
    let SpaceExpr::Tensor(s, t) = f.dom() else {
        return Err(Error::shape("tensor domain", f.dom()));
    };
    let (ds, dt, du) = (s.dim(), t.dim(), f.cod().dim());
    let m = Matrix::from_fn(dt * du, ds, |r, i| {
        let (j, k) = (r / du, r % du);
        f.matrix().get(k, i * dt + j).clone()
    });
    Ok(LinMap::new_unchecked((**s).clone(), hom_space(t, f.cod()), m))
}

/// `g: S → Hom(T, U)` gives `S ⊗ T → U`.
pub fn uncurry(g: &LinMap) -> Result<LinMap> {
    let SpaceExpr::Hom(t, u) = g.cod() else {
        return Err(Error::shape("hom codomain", g.cod()));
    };
    let (ds, dt, du) = (g.dom().dim(), t.dim(), u.dim());
    let m = Matrix::from_fn(du, ds * dt, |k, c| {
        let (i, j) = (c / dt, c % dt);
        g.matrix().get(j * du + k, i).clone()
    });
    Ok(LinMap::new_unchecked(tensor_space(g.dom(), t), (**u).clone(), m))
}

/// Writes a functional `φ` on `Hom(S, T)` as `Σ lᵢ ∘ ev_{xᵢ}`, returning the
/// pairs `(xᵢ, lᵢ)`. The number of terms is the rank of `φ` viewed as a
/// `dim S × dim T` array.
pub fn hom_dual_decompose(s: &SpaceExpr, t: &SpaceExpr, phi: &[Scalar]) -> Result<Vec<(Vec<Scalar>, Vec<Scalar>)>> {
    let (ds, dt) = (s.dim(), t.dim());
    if phi.len() != ds * dt {
        return Err(Error::DimensionMismatch { expected: ds * dt, found: phi.len() });
    }
    // φ(A) = Σ Φ[i][j]·A[j][i] with Φ[i][j] = φ([eᵢ ↦ fⱼ]); factor Φ = C·R.
    let big_phi = Matrix::from_fn(ds, dt, |i, j| phi[i * dt + j].clone());
    let (rref, pivots) = big_phi.rref();
    Ok(pivots
        .iter()
        .enumerate()
        .map(|(r, &p)| (big_phi.column(p), rref.row(r).to_vec()))
        .collect())
}

/// Evaluates `Σ lᵢ(A xᵢ)` for `A ∈ Hom(S, T)` given by its name.
pub fn eval_decomposition(pairs: &[(Vec<Scalar>, Vec<Scalar>)], s: &SpaceExpr, t: &SpaceExpr, a: &[Scalar]) -> Result<Scalar> {
    let a = map_of(s, t, a)?;
    let mut acc = Scalar::zero();
    for (x, l) in pairs {
        let ax = a.apply(x)?;
        acc += l.iter().zip(&ax).map(|(p, q)| p * q).sum::<Scalar>();
    }
    Ok(acc)
}

/// `S → Hom(Hom(S, 𝕂), 𝕂)`, `x ↦ (l ↦ l(x))`, built by currying evaluation
/// precomposed with the symmetry.
pub fn star_autonomy_map(s: &SpaceExpr) -> Result<LinMap> {
    let k = SpaceExpr::unit();
    let hs = hom_space(s, &k);
    let e = ev(s, &k).compose(&symmetry(s, &hs))?;
    curry(&e)
}

pub fn star_autonomy_check(s: &SpaceExpr) -> bool {
    star_autonomy_map(s).map(|f| f.matrix().is_invertible()).unwrap_or(false)
}

/// Sparse versions of the permutation isomorphisms, for large spaces.
pub mod sparse {
    use super::*;

    pub fn symmetry(s: &SpaceExpr, t: &SpaceExpr) -> SparseMap {
        let (ds, dt) = (s.dim(), t.dim());
        let m = SparseMatrix::permutation(ds * dt, (0..ds * dt).map(|k| (k % dt) * ds + k / dt));
        SparseMap::new(tensor_space(s, t), tensor_space(t, s), m).expect("permutation shape")
    }

    pub fn associator(s: &SpaceExpr, t: &SpaceExpr, u: &SpaceExpr) -> SparseMap {
        let dom = tensor_space(&tensor_space(s, t), u);
        let n = dom.dim();
        SparseMap::new(dom, tensor_space(s, &tensor_space(t, u)), SparseMatrix::identity(n)).expect("identity shape")
    }

    pub fn middle_swap(a: &SpaceExpr, b: &SpaceExpr, c: &SpaceExpr, d: &SpaceExpr) -> SparseMap {
        let (db, dc, dd) = (b.dim(), c.dim(), d.dim());
        let dom = tensor_space(&tensor_space(a, b), &tensor_space(c, d));
        let cod = tensor_space(&tensor_space(a, c), &tensor_space(b, d));
        let n = dom.dim();
        let m = SparseMatrix::permutation(n, (0..n).map(|k| middle_swap_index(db, dc, dd, k)));
        SparseMap::new(dom, cod, m).expect("permutation shape")
    }

    pub fn relabel(dom: SpaceExpr, cod: SpaceExpr) -> SparseMap {
        let n = dom.dim();
        SparseMap::new(dom, cod, SparseMatrix::identity(n)).expect("identity shape")
    }
}

//! The truncated exponential `!S = ⊕_{n≤D} SymPow(S, n)` and its structure.
//!
//! Grade `n` of `!S` is spanned by the multiset basis of `SymPow(S, n)`; the
//! element `ev_x^n` ("evaluate an `n`-monomial at `x`") is `x^{⊗n}`. Most
//! structure maps are specified by their value on `ev_x^p` and are computed by
//! evaluating that specification on a formal `x` (see [`crate::poly`]).
//!
//! Conventions:
//! - divisors of `0` are `{0}`, so `δ(ev^0)` is the unit of `!!S` and the
//!   co-Kleisli composite has `(g∘f)₀ = g₀`;
//! - the Seely map sends `ev_{(x,y)}^p` to `Σ_{n+m=p} ev_x^n ⊗ ev_y^m`;
//! - maps into `!S ⊗ !T` land in the degree-filtered part (total grade `≤ D`).

use std::collections::BTreeMap;

use crate::combinat::{binom, divisors, merge_sorted, multiset_count, multisets, unrank};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec};
use crate::linmap::{LinMap, SparseMap};
use crate::monomial::{Monomial, MonomialSeq, SeqVariant};
use crate::poly::{self, Poly, PolyVec, RVec, Ring};
use crate::scalar::Scalar;
use crate::space::SpaceExpr;

pub fn bang_space(s: &SpaceExpr, degree: usize) -> SpaceExpr {
    SpaceExpr::bang(s.clone(), degree)
}

/// `?S = (!S')'`.
pub fn whynot_space(s: &SpaceExpr, degree: usize) -> SpaceExpr {
    SpaceExpr::dual(SpaceExpr::bang(SpaceExpr::dual(s.clone()), degree))
}

/// Index of the first grade-`n` basis vector in an exponential over a
/// `d`-dimensional space whose lowest grade is `lo`.
pub fn grade_offset(d: usize, lo: usize, n: usize) -> usize {
    (lo..n).map(|k| multiset_count(d, k)).sum()
}

pub fn bang_index(d: usize, lo: usize, ms: &[usize]) -> usize {
    grade_offset(d, lo, ms.len()) + crate::combinat::rank(ms, d)
}

pub(crate) struct BangParts<'a> {
    pub space: &'a SpaceExpr,
    pub d: usize,
    pub lo: usize,
    pub degree: usize,
}

pub(crate) fn parts(s: &SpaceExpr) -> Result<BangParts<'_>> {
    let (space, lo, degree) = s.bang_parts().ok_or_else(|| Error::shape("exponential space", s))?;
    Ok(BangParts { space, d: space.dim(), lo, degree })
}

fn variant_of(lo: usize) -> SeqVariant {
    if lo == 0 {
        SeqVariant::Unit
    } else {
        SeqVariant::NonUnit
    }
}

fn exp_space(s: &SpaceExpr, lo: usize, degree: usize) -> SpaceExpr {
    if lo == 0 {
        SpaceExpr::bang(s.clone(), degree)
    } else {
        SpaceExpr::bang_non_unit(s.clone(), degree)
    }
}

pub(crate) fn to_rvec(v: &SparseVec) -> RVec<Scalar> {
    v.iter().map(|(i, c)| (i, c.clone())).collect()
}

pub(crate) fn from_rvec(v: RVec<Scalar>) -> SparseVec {
    v.into_iter().collect()
}

/// Formal `ev_x^p` in an exponential over a `d`-dimensional space, with `x`
/// the variables `first_var..first_var+d`.
pub fn ev_symbolic(d: usize, lo: usize, p: usize, first_var: usize) -> PolyVec {
    let x = poly::symbolic_vector(d, first_var);
    poly::place(poly::sym_power(&x, p), d, grade_offset(d, lo, p))
}

/// `u ⊗ v` with `v` in a space of dimension `dim_v`.
pub fn tensor_polyvec(u: &PolyVec, v: &PolyVec, dim_v: usize) -> PolyVec {
    let mut out = PolyVec::new();
    for (&i, p) in u {
        for (&j, q) in v {
            let r = p.mul_ref(q);
            if !r.is_zero() {
                out.insert(i * dim_v + j, r);
            }
        }
    }
    out
}

/// Builds a map out of an exponential space from its value on `ev_x^p`.
pub(crate) fn from_bang_images(
    dom: &SpaceExpr,
    cod: &SpaceExpr,
    image: impl Fn(usize) -> Result<PolyVec>,
) -> Result<SparseMap> {
    let bp = parts(dom)?;
    let mut columns = Vec::with_capacity(dom.dim());
    for p in bp.lo..=bp.degree {
        columns.extend(poly::linearize(&image(p)?, bp.d, p)?);
    }
    SparseMap::new(dom.clone(), cod.clone(), crate::linalg::SparseMatrix::from_columns(cod.dim(), columns))
}

/// Builds a map out of `!S ⊗ !T` from its value on `ev_x^n ⊗ ev_y^m`, with
/// `x` the variables `0..dim S` and `y` the following `dim T` variables.
pub(crate) fn from_bang_tensor_images(
    left: &SpaceExpr,
    right: &SpaceExpr,
    cod: &SpaceExpr,
    image: impl Fn(usize, usize) -> Result<PolyVec>,
) -> Result<SparseMap> {
    let (a, b) = (parts(left)?, parts(right)?);
    let (dim_l, dim_r) = (left.dim(), right.dim());
    let mut columns = vec![SparseVec::new(); dim_l * dim_r];
    for n in a.lo..=a.degree {
        for m in b.lo..=b.degree {
            let cols = poly::linearize_bi(&image(n, m)?, a.d, b.d, n, m)?;
            let cm = multiset_count(b.d, m);
            let (off_l, off_r) = (grade_offset(a.d, a.lo, n), grade_offset(b.d, b.lo, m));
            for (k, c) in cols.into_iter().enumerate() {
                columns[(off_l + k / cm) * dim_r + off_r + k % cm] = c;
            }
        }
    }
    let dom = SpaceExpr::tensor(left.clone(), right.clone());
    SparseMap::new(dom, cod.clone(), crate::linalg::SparseMatrix::from_columns(cod.dim(), columns))
}

/// Total grade of basis vector `i` of a tensor product of exponential spaces
/// (units `Base(1)` count as grade 0).
pub fn total_grade(s: &SpaceExpr, i: usize) -> Option<usize> {
    match s {
        SpaceExpr::Bang { .. } | SpaceExpr::BangNonUnit { .. } => s.bang_grade_of(i).map(|(n, _)| n),
        SpaceExpr::Tensor(a, b) => {
            let db = b.dim();
            Some(total_grade(a, i / db)? + total_grade(b, i % db)?)
        }
        SpaceExpr::Base(1) => Some(0),
        _ => None,
    }
}

/// Columns of a tensor of exponentials with total grade at most `degree`.
pub fn filtered_mask(s: &SpaceExpr, degree: usize) -> Vec<bool> {
    (0..s.dim()).map(|i| total_grade(s, i).is_some_and(|g| g <= degree)).collect()
}

/// Projection of a tensor of exponentials onto its degree-filtered part.
pub fn filter_projection(s: &SpaceExpr, degree: usize) -> SparseMap {
    let columns = filtered_mask(s, degree)
        .into_iter()
        .enumerate()
        .map(|(i, keep)| if keep { SparseVec::unit(i) } else { SparseVec::new() })
        .collect();
    SparseMap::new(s.clone(), s.clone(), crate::linalg::SparseMatrix::from_columns(s.dim(), columns))
        .expect("square shape")
}

/// Image of the basis vector `e_α` under `Symⁿ(f)`, given the columns of `f`.
fn sym_apply(f: &SparseMap, ms: &[usize], d_cod: usize, cod_offset: usize) -> SparseVec {
    let cols: Vec<RVec<Scalar>> = ms.iter().map(|&j| to_rvec(f.column(j))).collect();
    let refs: Vec<&RVec<Scalar>> = cols.iter().collect();
    from_rvec(poly::place(poly::sym_product(&refs), d_cod, cod_offset))
}

fn bang_map_variant(f: &SparseMap, lo: usize, degree: usize) -> SparseMap {
    let (d, e) = (f.dom().dim(), f.cod().dim());
    let dom = exp_space(f.dom(), lo, degree);
    let cod = exp_space(f.cod(), lo, degree);
    let mut columns = Vec::with_capacity(dom.dim());
    for n in lo..=degree {
        let off = grade_offset(e, lo, n);
        columns.extend(multisets(d, n).iter().map(|ms| sym_apply(f, ms, e, off)));
    }
    let rows = cod.dim();
    SparseMap::new(dom, cod, crate::linalg::SparseMatrix::from_columns(rows, columns)).expect("graded shape")
}

/// `!f = ⊕ₙ Symⁿ(f)`.
pub fn bang_map(f: &SparseMap, degree: usize) -> SparseMap {
    bang_map_variant(f, 0, degree)
}

pub(crate) fn bang_map_nonunit(f: &SparseMap, degree: usize) -> SparseMap {
    bang_map_variant(f, 1, degree)
}

/// `!f ∘ g` without materializing `!f`: only the basis vectors of `!dom f`
/// reached by the columns of `g` are expanded.
pub fn bang_map_after(f: &SparseMap, g: &SparseMap) -> Result<SparseMap> {
    let bp = parts(g.cod())?;
    if bp.space != f.dom() {
        return Err(Error::shape(bp.space, f.dom()));
    }
    let e = f.cod().dim();
    let cod = exp_space(f.cod(), bp.lo, bp.degree);
    let mut cache: BTreeMap<usize, SparseVec> = BTreeMap::new();
    let mut columns = Vec::with_capacity(g.dom().dim());
    for j in 0..g.dom().dim() {
        let mut out = SparseVec::new();
        for (i, c) in g.column(j).iter() {
            let img = cache.entry(i).or_insert_with(|| {
                let (n, r) = g.cod().bang_grade_of(i).expect("index in range");
                sym_apply(f, &unrank(r, n, bp.d), e, grade_offset(e, bp.lo, n))
            });
            out.add_scaled(c, img);
        }
        columns.push(out);
    }
    let rows = cod.dim();
    SparseMap::new(g.dom().clone(), cod, crate::linalg::SparseMatrix::from_columns(rows, columns))
}

fn grade_inclusion(s: &SpaceExpr, lo: usize, degree: usize) -> Result<SparseMap> {
    if degree < 1 {
        return Err(Error::DegreeTooSmall { what: "grade-1 structure", min: 1, found: degree });
    }
    let d = s.dim();
    let off = grade_offset(d, lo, 1);
    let cod = exp_space(s, lo, degree);
    let columns = (0..d).map(|i| SparseVec::unit(off + i)).collect();
    let rows = cod.dim();
    SparseMap::new(s.clone(), cod, crate::linalg::SparseMatrix::from_columns(rows, columns))
}

fn grade_projection(s: &SpaceExpr, lo: usize, degree: usize) -> Result<SparseMap> {
    let inc = grade_inclusion(s, lo, degree)?;
    SparseMap::new(inc.cod().clone(), s.clone(), inc.matrix().transpose())
}

/// Dereliction `ε: !S → S`, projection onto grade 1.
pub fn counit(s: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    grade_projection(s, 0, degree)
}

pub(crate) fn counit_nonunit(s: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    grade_projection(s, 1, degree)
}

/// Codereliction `S → !S`, inclusion at grade 1.
pub fn coder(s: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    grade_inclusion(s, 0, degree)
}

/// Digging `δ: !S → !!S`, with
/// `δ(ev_x^p) = Σ_{k | p} (ev_{ev_x^{p/k}})^{⊗k}` at grade `k` of `!!S`.
pub fn comultiplication(s: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    let b = bang_space(s, degree);
    let bb = bang_space(&b, degree);
    let (d, db) = (s.dim(), b.dim());
    from_bang_images(&b, &bb, |p| {
        let mut out = PolyVec::new();
        for k in divisors(p) {
            let q = p.checked_div(k).unwrap_or(0);
            let inner = ev_symbolic(d, 0, q, 0);
            let outer = poly::place(poly::sym_power(&inner, k), db, grade_offset(db, 0, k));
            poly::rvec_add(&mut out, &outer);
        }
        Ok(out)
    })
}

/// Splits a map `!S → T` into its monomial components
/// `fₙ = f ∘ inclₙ ∘ (x ↦ x^{⊗n})`.
pub fn kleisli_to_seq(f: &SparseMap) -> Result<MonomialSeq> {
    let bp = parts(f.dom())?;
    let rows = f.cod().dim();
    let mut monomials = Vec::new();
    for n in bp.lo..=bp.degree {
        let off = grade_offset(bp.d, bp.lo, n);
        let cols: Vec<Vec<Scalar>> =
            (off..off + multiset_count(bp.d, n)).map(|j| f.column(j).to_dense(rows)).collect();
        let coeffs = Matrix::from_columns(rows, &cols)?;
        monomials.push(Monomial::new(bp.space.clone(), f.cod().clone(), n, coeffs)?);
    }
    MonomialSeq::new(variant_of(bp.lo), bp.space.clone(), f.cod().clone(), bp.degree, monomials)
}

/// Inverse of [`kleisli_to_seq`]: `⊕ₙ linearize(fₙ)`.
pub fn seq_to_kleisli(seq: &MonomialSeq) -> SparseMap {
    let dom = exp_space(seq.dom(), seq.lowest_degree(), seq.truncation());
    let rows = seq.cod().dim();
    let columns = seq.monomials().iter().flat_map(|m| m.columns()).collect();
    SparseMap::new(dom, seq.cod().clone(), crate::linalg::SparseMatrix::from_columns(rows, columns))
        .expect("graded shape")
}

/// Co-Kleisli composition `(g∘f)_p = Σ_{k | p} g_k ∘ f_{p/k}`, with
/// `(g∘f)₀ = g₀ ∘ f₀ = g₀`.
pub fn kleisli_compose(g: &MonomialSeq, f: &MonomialSeq) -> Result<MonomialSeq> {
    g.check_composable(f)?;
    if g.variant() != SeqVariant::Unit || f.variant() != SeqVariant::Unit {
        return Err(Error::shape("unit exponential sequences", "non-unit sequence"));
    }
    let mut out = MonomialSeq::zero(SeqVariant::Unit, f.dom().clone(), g.cod().clone(), f.truncation());
    for p in 0..=f.truncation() {
        let mut acc = Monomial::zero(f.dom().clone(), g.cod().clone(), p);
        for k in divisors(p) {
            let q = p.checked_div(k).unwrap_or(0);
            let term = Monomial::compose(g.get(k).expect("k ≤ D"), f.get(q).expect("p/k ≤ D"))?;
            acc = acc.add(&term)?;
        }
        out.set(acc)?;
    }
    Ok(out)
}

/// The Seely map `!(S × T) → !S ⊗ !T`, an isomorphism onto the
/// degree-filtered part.
pub fn seely_iso(s: &SpaceExpr, t: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    let (ds, dt) = (s.dim(), t.dim());
    let (bs, bt) = (bang_space(s, degree), bang_space(t, degree));
    let dom = bang_space(&SpaceExpr::prod(s.clone(), t.clone()), degree);
    let cod = SpaceExpr::tensor(bs, bt.clone());
    let dim_bt = bt.dim();
    from_bang_images(&dom, &cod, |p| {
        let mut out = PolyVec::new();
        for n in 0..=p {
            let u = ev_symbolic(ds, 0, n, 0);
            let v = ev_symbolic(dt, 0, p - n, ds);
            poly::rvec_add(&mut out, &tensor_polyvec(&u, &v, dim_bt));
        }
        Ok(out)
    })
}

/// Inverse of [`seely_iso`] on the filtered part, zero elsewhere:
/// `ev_x^n ⊗ ev_y^m` goes to the bidegree-`(n, m)` part of `ev_{(x,y)}^{n+m}`.
pub fn seely_inverse(s: &SpaceExpr, t: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    let ds = s.dim();
    let d = ds + t.dim();
    let cod = bang_space(&SpaceExpr::prod(s.clone(), t.clone()), degree);
    from_bang_tensor_images(&bang_space(s, degree), &bang_space(t, degree), &cod, |n, m| {
        if n + m > degree {
            return Ok(PolyVec::new());
        }
        Ok(poly::bihomogeneous_part(&ev_symbolic(d, 0, n + m, 0), ds, n, m))
    })
}

/// Lax monoidal structure `μ: !S ⊗ !T → !(S ⊗ T)`:
/// `ev_x^n ⊗ ev_y^m ↦ ev_{x⊗y}^n` if `n = m`, else `0`.
pub fn monoidal_mu(s: &SpaceExpr, t: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    let (ds, dt) = (s.dim(), t.dim());
    let st = SpaceExpr::tensor(s.clone(), t.clone());
    let cod = bang_space(&st, degree);
    let mut xy = PolyVec::new();
    for i in 0..ds {
        for j in 0..dt {
            xy.insert(i * dt + j, Poly::var(i).mul_ref(&Poly::var(ds + j)));
        }
    }
    from_bang_tensor_images(&bang_space(s, degree), &bang_space(t, degree), &cod, |n, m| {
        if n != m {
            return Ok(PolyVec::new());
        }
        Ok(poly::place(poly::sym_power(&xy, n), ds * dt, grade_offset(ds * dt, 0, n)))
    })
}

/// Unit of the monoidal structure `𝕂 → !𝕂`, `t ↦ t·ev_1 = t·Σₙ eₙ`.
pub fn mu0(degree: usize) -> SparseMap {
    let cod = bang_space(&SpaceExpr::unit(), degree);
    let col: SparseVec = (0..=degree).map(|n| (n, Scalar::one())).collect();
    SparseMap::new(SpaceExpr::unit(), cod, crate::linalg::SparseMatrix::from_columns(degree + 1, vec![col]))
        .expect("unit shape")
}

/// Contraction `Δ: !S → !S ⊗ !S`, `ev_x^p ↦ Σ_{i+j=p} ev_x^i ⊗ ev_x^j`.
pub fn contraction(s: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    let d = s.dim();
    let b = bang_space(s, degree);
    let cod = SpaceExpr::tensor(b.clone(), b.clone());
    let db = b.dim();
    from_bang_images(&b, &cod, |p| {
        let mut out = PolyVec::new();
        for i in 0..=p {
            let u = ev_symbolic(d, 0, i, 0);
            let v = ev_symbolic(d, 0, p - i, 0);
            poly::rvec_add(&mut out, &tensor_polyvec(&u, &v, db));
        }
        Ok(out)
    })
}

/// Weakening `e: !S → 𝕂`, projection onto grade 0.
pub fn weakening(s: &SpaceExpr, degree: usize) -> SparseMap {
    let b = bang_space(s, degree);
    let mut columns = vec![SparseVec::new(); b.dim()];
    columns[0] = SparseVec::unit(0);
    SparseMap::new(b, SpaceExpr::unit(), crate::linalg::SparseMatrix::from_columns(1, columns)).expect("shape")
}

/// Cocontraction `∇: !S ⊗ !S → !S`, from `∇(φ⊗ψ)(h) = φ(x ↦ ψ(y ↦ h(x+y)))`:
/// `ev_x^n ⊗ ev_y^m` goes to the bidegree-`(n, m)` part of `ev_{x+y}^{n+m}`.
pub fn cocontraction(s: &SpaceExpr, degree: usize) -> Result<SparseMap> {
    let d = s.dim();
    let b = bang_space(s, degree);
    let mut sum = PolyVec::new();
    for i in 0..d {
        let mut p = Poly::var(i);
        p.add_assign_ref(&Poly::var(d + i));
        sum.insert(i, p);
    }
    from_bang_tensor_images(&b, &b, &b, |n, m| {
        if n + m > degree {
            return Ok(PolyVec::new());
        }
        let ev = poly::place(poly::sym_power(&sum, n + m), d, grade_offset(d, 0, n + m));
        Ok(poly::bihomogeneous_part(&ev, d, n, m))
    })
}

/// Closed form of [`cocontraction`]: `e_α ⊗ e_β ↦ C(n+m, n)·e_{α⊎β}`.
pub fn cocontraction_closed_form(s: &SpaceExpr, degree: usize) -> SparseMap {
    let d = s.dim();
    let b = bang_space(s, degree);
    let db = b.dim();
    let mut columns = Vec::with_capacity(db * db);
    for i in 0..db {
        let (n, r) = b.bang_grade_of(i).expect("in range");
        let alpha = unrank(r, n, d);
        for j in 0..db {
            let (m, r2) = b.bang_grade_of(j).expect("in range");
            if n + m > degree {
                columns.push(SparseVec::new());
                continue;
            }
            let beta = unrank(r2, m, d);
            let idx = bang_index(d, 0, &merge_sorted(&alpha, &beta));
            let mut c = SparseVec::new();
            c.add_at(idx, &Scalar::from_u128(binom(n + m, n)));
            columns.push(c);
        }
    }
    SparseMap::new(SpaceExpr::tensor(b.clone(), b.clone()), b, crate::linalg::SparseMatrix::from_columns(db, columns))
        .expect("shape")
}

/// Coweakening `ν: 𝕂 → !S`, `1 ↦ ev_0` (the grade-0 unit).
pub fn coweakening(s: &SpaceExpr, degree: usize) -> SparseMap {
    let b = bang_space(s, degree);
    let rows = b.dim();
    SparseMap::new(SpaceExpr::unit(), b, crate::linalg::SparseMatrix::from_columns(rows, vec![SparseVec::unit(0)]))
        .expect("shape")
}

fn split_hom_bang(cod: &SpaceExpr, degree: usize) -> Result<(&SpaceExpr, &SpaceExpr)> {
    match cod {
        SpaceExpr::Hom(bt, u) => match &**bt {
            SpaceExpr::Bang { space, degree: d2 } if *d2 == degree => Ok((space, u)),
            SpaceExpr::Bang { degree: d2, .. } => Err(Error::DegreeMismatch { left: degree, right: *d2 }),
            other => Err(Error::shape("hom out of an exponential", other)),
        },
        other => Err(Error::shape("hom out of an exponential", other)),
    }
}

/// Curries `h: !(S × T) → U` (as a monomial sequence) into
/// `g: !S → Hom(!T, U)`, with
/// `gₙ(x)ₘ(y) = ĥ_{n+m}((x,0), …, (x,0), (0,y), …, (0,y))`
/// (`n` copies of `(x,0)`, `m` of `(0,y)`). Components with `n + m > D` are 0.
pub fn curry_seq(h: &MonomialSeq) -> Result<MonomialSeq> {
    let SpaceExpr::Prod(s, t) = h.dom() else {
        return Err(Error::shape("product domain", h.dom()));
    };
    if h.variant() != SeqVariant::Unit {
        return Err(Error::shape("unit exponential sequence", "non-unit sequence"));
    }
    let degree = h.truncation();
    let (ds, dt, du) = (s.dim(), t.dim(), h.cod().dim());
    let bt = bang_space(t, degree);
    let cod = SpaceExpr::hom(bt.clone(), h.cod().clone());
    let mut out = MonomialSeq::zero(SeqVariant::Unit, (**s).clone(), cod.clone(), degree);
    for n in 0..=degree {
        let alphas = multisets(ds, n);
        let mut coeffs = Matrix::zeros(cod.dim(), alphas.len());
        for (b, m, beta) in bang_basis(dt, degree) {
            if n + m > degree {
                continue;
            }
            let hp = h.get(n + m).expect("≤ D");
            for (ai, alpha) in alphas.iter().enumerate() {
                let gamma: Vec<usize> = alpha.iter().copied().chain(beta.iter().map(|&j| ds + j)).collect();
                let col = crate::combinat::rank(&gamma, ds + dt);
                for k in 0..du {
                    coeffs.set(b * du + k, ai, hp.coeffs().get(k, col).clone());
                }
            }
        }
        out.set(Monomial::new((**s).clone(), cod.clone(), n, coeffs)?)?;
    }
    Ok(out)
}

/// Inverse of [`curry_seq`]:
/// `h_p(x, y) = Σ_{n+m=p} C(p, n)·gₙ(x)ₘ(y)`, which expands `ĥ_p` over all
/// ways of placing `n` arguments `(x,0)` and `m` arguments `(0,y)`, each with
/// weight `1/C(p, n)`.
pub fn uncurry_seq(g: &MonomialSeq, t: &SpaceExpr) -> Result<MonomialSeq> {
    let degree = g.truncation();
    let (t2, u) = split_hom_bang(g.cod(), degree)?;
    if t2 != t {
        return Err(Error::shape(t, t2));
    }
    if g.variant() != SeqVariant::Unit {
        return Err(Error::shape("unit exponential sequence", "non-unit sequence"));
    }
    let s = g.dom();
    let (ds, dt, du) = (s.dim(), t.dim(), u.dim());
    let dom = SpaceExpr::prod(s.clone(), t.clone());
    let mut out = MonomialSeq::zero(SeqVariant::Unit, dom.clone(), u.clone(), degree);
    for p in 0..=degree {
        let gammas = multisets(ds + dt, p);
        let mut coeffs = Matrix::zeros(du, gammas.len());
        for (ci, gamma) in gammas.iter().enumerate() {
            let split = gamma.partition_point(|&v| v < ds);
            let alpha = &gamma[..split];
            let beta: Vec<usize> = gamma[split..].iter().map(|&v| v - ds).collect();
            let b = bang_index(dt, 0, &beta);
            let gn = g.get(alpha.len()).expect("≤ D");
            let ai = crate::combinat::rank(alpha, ds);
            for k in 0..du {
                coeffs.set(k, ci, gn.coeffs().get(b * du + k, ai).clone());
            }
        }
        out.set(Monomial::new(dom.clone(), u.clone(), p, coeffs)?)?;
    }
    Ok(out)
}

/// `(index, grade, multiset)` for every basis vector of `Bang(Base(d), D)`.
fn bang_basis(d: usize, degree: usize) -> Vec<(usize, usize, Vec<usize>)> {
    let mut out = Vec::new();
    let mut idx = 0;
    for m in 0..=degree {
        for ms in multisets(d, m) {
            out.push((idx, m, ms));
            idx += 1;
        }
    }
    out
}

/// Dense conveniences for callers working with [`LinMap`].
pub fn bang_map_dense(f: &LinMap, degree: usize) -> LinMap {
    bang_map(&f.to_sparse(), degree).to_dense()
}

//! Homogeneous monomials between spaces and truncated monomial sequences.
//!
//! A degree-`n` monomial `f: S → T` is stored through its symmetric
//! `n`-linear map `f̂`, as the matrix `C` with one row per basis vector of `T`
//! and one column per multiset `α` of size `n` over the basis of `S`:
//! `C[·, α] = f̂(e_{α₁}, …, e_{αₙ})`. Then
//!
//! ```text
//! f(x) = Σ_α mult(α) · x^α · C[·, α]
//! ```
//!
//! with `mult(α)` the number of orderings of `α`. Since the symmetric power
//! embedding is `x ↦ (mult(α) x^α)_α`, the linearization of `f` on `SymPow(S, n)`
//! is `C` itself.

use serde::{Deserialize, Serialize};

use crate::combinat::{factorial, multiplicity, multiset_count, multisets};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseVec};
use crate::linmap::LinMap;
use crate::poly::{self, PolyVec, RVec};
use crate::scalar::Scalar;
use crate::space::SpaceExpr;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "MonomialJson", into = "MonomialJson")]
pub struct Monomial {
    dom: SpaceExpr,
    cod: SpaceExpr,
    degree: usize,
    coeffs: Matrix,
}

/// A symmetric multilinear map shares the monomial's carrier.
pub type SymMultiMap = Monomial;

#[derive(Serialize, Deserialize)]
struct CoeffEntry {
    multiset: Vec<usize>,
    cod_index: usize,
    value: Scalar,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    degree: usize,
    dom: SpaceExpr,
    cod: SpaceExpr,
    coeffs: Vec<CoeffEntry>,
}

impl From<Monomial> for MonomialJson {
    fn from(m: Monomial) -> Self {
        let mut coeffs = Vec::new();
        for (j, ms) in multisets(m.dom.dim(), m.degree).into_iter().enumerate() {
            for k in 0..m.cod.dim() {
                let value = m.coeffs.get(k, j);
                if !value.is_zero() {
                    coeffs.push(CoeffEntry { multiset: ms.clone(), cod_index: k, value: value.clone() });
                }
            }
        }
        MonomialJson { degree: m.degree, dom: m.dom, cod: m.cod, coeffs }
    }
}

impl TryFrom<MonomialJson> for Monomial {
    type Error = Error;
    fn try_from(j: MonomialJson) -> Result<Self> {
        let d = j.dom.dim();
        let mut m = Monomial::zero(j.dom, j.cod, j.degree);
        for e in j.coeffs {
            let mut ms = e.multiset;
            ms.sort_unstable();
            if ms.len() != j.degree || ms.last().is_some_and(|&i| i >= d) {
                return Err(Error::shape(format!("multiset of {} indices below {d}", j.degree), format!("{ms:?}")));
            }
            if e.cod_index >= m.cod.dim() {
                return Err(Error::DimensionMismatch { expected: m.cod.dim(), found: e.cod_index });
            }
            m.coeffs.set(e.cod_index, crate::combinat::rank(&ms, d), e.value);
        }
        Ok(m)
    }
}

impl Monomial {
    pub fn new(dom: SpaceExpr, cod: SpaceExpr, degree: usize, coeffs: Matrix) -> Result<Self> {
        let cols = multiset_count(dom.dim(), degree);
        if coeffs.rows() != cod.dim() || coeffs.cols() != cols {
            return Err(Error::shape(
                format!("{}x{}", cod.dim(), cols),
                format!("{}x{}", coeffs.rows(), coeffs.cols()),
            ));
        }
        Ok(Monomial { dom, cod, degree, coeffs })
    }

    pub fn zero(dom: SpaceExpr, cod: SpaceExpr, degree: usize) -> Self {
        let coeffs = Matrix::zeros(cod.dim(), multiset_count(dom.dim(), degree));
        Monomial { dom, cod, degree, coeffs }
    }

    /// Degree-0 monomial with constant value `c`.
    pub fn constant(dom: SpaceExpr, cod: SpaceExpr, c: &[Scalar]) -> Result<Self> {
        if c.len() != cod.dim() {
            return Err(Error::DimensionMismatch { expected: cod.dim(), found: c.len() });
        }
        let coeffs = Matrix::from_columns(cod.dim(), &[c.to_vec()])?;
        Ok(Monomial { dom, cod, degree: 0, coeffs })
    }

    pub fn from_linear(f: &LinMap) -> Self {
        Monomial { dom: f.dom().clone(), cod: f.cod().clone(), degree: 1, coeffs: f.matrix().clone() }
    }

    pub fn dom(&self) -> &SpaceExpr {
        &self.dom
    }

    pub fn cod(&self) -> &SpaceExpr {
        &self.cod
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub(crate) fn columns(&self) -> Vec<SparseVec> {
        (0..self.coeffs.cols()).map(|j| SparseVec::from_dense(&self.coeffs.column(j))).collect()
    }

    /// `f(x) = f̂(x, …, x)`.
    pub fn eval(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let d = self.dom.dim();
        if x.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: x.len() });
        }
        let mut out = vec![Scalar::zero(); self.cod.dim()];
        for (j, ms) in multisets(d, self.degree).iter().enumerate() {
            let mut w = Scalar::from_u128(multiplicity(ms));
            for &i in ms {
                w *= &x[i];
            }
            if w.is_zero() {
                continue;
            }
            for (k, o) in out.iter_mut().enumerate() {
                *o += &w * self.coeffs.get(k, j);
            }
        }
        Ok(out)
    }

    /// The symmetric multilinear map `f̂(x₁, …, xₙ)`.
    pub fn multilinear(&self, xs: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
        let d = self.dom.dim();
        if xs.len() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: xs.len() });
        }
        if let Some(x) = xs.iter().find(|x| x.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: x.len() });
        }
        let factors: Vec<RVec<Scalar>> =
            xs.iter().map(|x| SparseVec::from_dense(x).iter().map(|(i, c)| (i, c.clone())).collect()).collect();
        let refs: Vec<&RVec<Scalar>> = factors.iter().collect();
        let sym = poly::place(poly::sym_product(&refs), d, 0);
        let mut out = vec![Scalar::zero(); self.cod.dim()];
        for (j, w) in sym {
            for (k, o) in out.iter_mut().enumerate() {
                *o += &w * self.coeffs.get(k, j);
            }
        }
        Ok(out)
    }

    /// Applies the monomial to a vector of polynomials.
    pub fn eval_poly(&self, v: &PolyVec) -> PolyVec {
        let sym = poly::place(poly::sym_power(v, self.degree), self.dom.dim(), 0);
        poly::apply_columns(&self.columns(), &sym)
    }

    /// The monomial applied to the formal vector `(x₀, …, x_{d-1})`.
    pub fn symbolic(&self) -> PolyVec {
        self.eval_poly(&poly::symbolic_vector(self.dom.dim(), 0))
    }

    /// Reads a monomial back from its symbolic value, which must be
    /// homogeneous of `degree` in the variables `0..dim dom`.
    pub fn from_symbolic(dom: SpaceExpr, cod: SpaceExpr, degree: usize, image: &PolyVec) -> Result<Self> {
        let cols = poly::linearize(image, dom.dim(), degree)?;
        let m = cod.dim();
        let coeffs = Matrix::from_columns(m, &cols.iter().map(|c| c.to_dense(m)).collect::<Vec<_>>())?;
        Ok(Monomial { dom, cod, degree, coeffs })
    }

    /// The linear map `SymPow(dom, n) → cod` through which the monomial factors.
    pub fn linearize(&self) -> LinMap {
        LinMap::new_unchecked(SpaceExpr::sym_pow(self.dom.clone(), self.degree), self.cod.clone(), self.coeffs.clone())
    }

    /// Inverse of [`linearize`](Self::linearize).
    pub fn from_linearized(f: &LinMap) -> Result<Self> {
        let SpaceExpr::SymPow { space, n } = f.dom() else {
            return Err(Error::shape("symmetric power domain", f.dom()));
        };
        Monomial::new((**space).clone(), f.cod().clone(), *n, f.matrix().clone())
    }

    /// `x ↦ x^{⊗n}` into `SymPow(S, n)`.
    pub fn sym_power_embed(s: &SpaceExpr, n: usize) -> Self {
        let cod = SpaceExpr::sym_pow(s.clone(), n);
        let k = cod.dim();
        Monomial { dom: s.clone(), cod, degree: n, coeffs: Matrix::identity(k) }
    }

    /// `g ∘ f`, of degree `deg g · deg f`: `x ↦ ĝ(f(x), …, f(x))`.
    pub fn compose(g: &Monomial, f: &Monomial) -> Result<Monomial> {
        if f.cod != g.dom {
            return Err(Error::shape(&g.dom, &f.cod));
        }
        let image = g.eval_poly(&f.symbolic());
        Monomial::from_symbolic(f.dom.clone(), g.cod.clone(), g.degree * f.degree, &image)
    }

    fn check_same(&self, rhs: &Monomial) -> Result<()> {
        if self.degree != rhs.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: rhs.degree });
        }
        if self.dom != rhs.dom || self.cod != rhs.cod {
            return Err(Error::shape(format!("{} -> {}", self.dom, self.cod), format!("{} -> {}", rhs.dom, rhs.cod)));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Monomial) -> Result<Monomial> {
        self.check_same(rhs)?;
        Ok(Monomial { coeffs: self.coeffs.add(&rhs.coeffs)?, ..self.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> Monomial {
        Monomial { coeffs: self.coeffs.scale(s), ..self.clone() }
    }

    /// Postcomposition with a linear map.
    pub fn then_linear(&self, f: &LinMap) -> Result<Monomial> {
        if f.dom() != &self.cod {
            return Err(Error::shape(f.dom(), &self.cod));
        }
        Ok(Monomial { cod: f.cod().clone(), coeffs: f.matrix().mul(&self.coeffs)?, ..self.clone() })
    }
}

/// Recovers the symmetric `n`-linear map of an `n`-homogeneous map given as
/// an evaluation oracle, via
/// `f̂(x₁…xₙ) = (1/n!) Σ_{ε∈{0,1}ⁿ} (−1)^{n−Σεⱼ} f(Σ εⱼxⱼ)`.
///
/// Homogeneity is spot-checked on a few fixed points and scalings.
pub fn polarize(
    f: impl Fn(&[Scalar]) -> Vec<Scalar>,
    n: usize,
    dom: &SpaceExpr,
    cod: &SpaceExpr,
) -> Result<Monomial> {
    let d = dom.dim();
    let m = cod.dim();
    check_homogeneous(&f, n, d, m)?;
    let nfact = Scalar::from_u128(factorial(n));
    let columns: Vec<Vec<Scalar>> = multisets(d, n)
        .iter()
        .map(|ms| {
            let mut acc = vec![Scalar::zero(); m];
            for mask in 0u32..(1 << n) {
                let mut x = vec![Scalar::zero(); d];
                for (k, &i) in ms.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        x[i] += Scalar::one();
                    }
                }
                let y = f(&x);
                let neg = (n as u32 - mask.count_ones()) % 2 == 1;
                for (a, b) in acc.iter_mut().zip(y) {
                    if neg {
                        *a -= &b;
                    } else {
                        *a += &b;
                    }
                }
            }
            acc.iter().map(|a| a.checked_div(&nfact)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Monomial::new(dom.clone(), cod.clone(), n, Matrix::from_columns(m, &columns)?)
}

fn check_homogeneous(f: &impl Fn(&[Scalar]) -> Vec<Scalar>, n: usize, d: usize, m: usize) -> Result<()> {
    let points: Vec<Vec<Scalar>> = vec![
        vec![Scalar::one(); d],
        (0..d).map(|i| Scalar::from_int(i as i64 + 1)).collect(),
        (0..d).map(|i| Scalar::from_int(if i % 2 == 0 { 2 } else { -1 })).collect(),
    ];
    let lambdas = [Scalar::from_int(2), Scalar::ratio(-1, 3).expect("nonzero"), Scalar::zero()];
    for x in &points {
        let fx = f(x);
        if fx.len() != m {
            return Err(Error::DimensionMismatch { expected: m, found: fx.len() });
        }
        for l in &lambdas {
            let lx: Vec<Scalar> = x.iter().map(|c| c * l).collect();
            let ln = l.pow(n as u32);
            let ok = f(&lx).iter().zip(&fx).all(|(a, b)| *a == &ln * b);
            if !ok {
                return Err(Error::NotHomogeneous { degree: n });
            }
        }
    }
    Ok(())
}

/// Whether a sequence lives on `!E` (grades `0..=D`) or `!₁E` (grades `1..=D`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqVariant {
    Unit,
    #[serde(rename = "nonunit")]
    NonUnit,
}

impl SeqVariant {
    pub fn lowest_degree(self) -> usize {
        match self {
            SeqVariant::Unit => 0,
            SeqVariant::NonUnit => 1,
        }
    }
}

/// Truncated sequence `(f_lo, …, f_D)` with `fₙ` of degree `n`; the co-Kleisli
/// representation of a map `!S → T` (or `!₁S → T`).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "SeqJson", into = "SeqJson")]
pub struct MonomialSeq {
    variant: SeqVariant,
    dom: SpaceExpr,
    cod: SpaceExpr,
    truncation: usize,
    monomials: Vec<Monomial>,
}

#[derive(Serialize, Deserialize)]
struct SeqJson {
    variant: SeqVariant,
    dom: SpaceExpr,
    cod: SpaceExpr,
    truncation: usize,
    monomials: Vec<Monomial>,
}

impl From<MonomialSeq> for SeqJson {
    fn from(s: MonomialSeq) -> Self {
        SeqJson { variant: s.variant, dom: s.dom, cod: s.cod, truncation: s.truncation, monomials: s.monomials }
    }
}

impl TryFrom<SeqJson> for MonomialSeq {
    type Error = Error;
    fn try_from(j: SeqJson) -> Result<Self> {
        MonomialSeq::new(j.variant, j.dom, j.cod, j.truncation, j.monomials)
    }
}

impl MonomialSeq {
    pub fn new(
        variant: SeqVariant,
        dom: SpaceExpr,
        cod: SpaceExpr,
        truncation: usize,
        monomials: Vec<Monomial>,
    ) -> Result<Self> {
        let lo = variant.lowest_degree();
        let expected = (truncation + 1).saturating_sub(lo);
        if monomials.len() != expected {
            return Err(Error::DimensionMismatch { expected, found: monomials.len() });
        }
        for (k, m) in monomials.iter().enumerate() {
            if m.degree != lo + k {
                return Err(Error::DegreeMismatch { left: lo + k, right: m.degree });
            }
            if m.dom != dom || m.cod != cod {
                return Err(Error::shape(format!("{dom} -> {cod}"), format!("{} -> {}", m.dom, m.cod)));
            }
        }
        Ok(MonomialSeq { variant, dom, cod, truncation, monomials })
    }

    pub fn zero(variant: SeqVariant, dom: SpaceExpr, cod: SpaceExpr, truncation: usize) -> Self {
        let monomials = (variant.lowest_degree()..=truncation)
            .map(|n| Monomial::zero(dom.clone(), cod.clone(), n))
            .collect();
        MonomialSeq { variant, dom, cod, truncation, monomials }
    }

    /// The sequence `(0, id, 0, …)`.
    pub fn dereliction(variant: SeqVariant, s: &SpaceExpr, truncation: usize) -> Result<Self> {
        if truncation == 0 {
            return Err(Error::DegreeTooSmall { what: "dereliction", min: 1, found: 0 });
        }
        let mut seq = MonomialSeq::zero(variant, s.clone(), s.clone(), truncation);
        seq.set(Monomial::from_linear(&LinMap::identity(s.clone())))?;
        Ok(seq)
    }

    pub fn variant(&self) -> SeqVariant {
        self.variant
    }

    pub fn dom(&self) -> &SpaceExpr {
        &self.dom
    }

    pub fn cod(&self) -> &SpaceExpr {
        &self.cod
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn lowest_degree(&self) -> usize {
        self.variant.lowest_degree()
    }

    /// The component of degree `n`.
    pub fn get(&self, n: usize) -> Option<&Monomial> {
        n.checked_sub(self.lowest_degree()).and_then(|k| self.monomials.get(k))
    }

    /// Replaces the component of the monomial's degree.
    pub fn set(&mut self, m: Monomial) -> Result<()> {
        if m.dom != self.dom || m.cod != self.cod {
            return Err(Error::shape(format!("{} -> {}", self.dom, self.cod), format!("{} -> {}", m.dom, m.cod)));
        }
        let lo = self.lowest_degree();
        let slot = m
            .degree
            .checked_sub(lo)
            .and_then(|k| self.monomials.get_mut(k))
            .ok_or(Error::DegreeMismatch { left: self.truncation, right: m.degree })?;
        *slot = m;
        Ok(())
    }

    /// `Σₙ fₙ(x)`.
    pub fn eval(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        let mut out = vec![Scalar::zero(); self.cod.dim()];
        for m in &self.monomials {
            for (o, y) in out.iter_mut().zip(m.eval(x)?) {
                *o += y;
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &MonomialSeq) -> Result<MonomialSeq> {
        if self.variant != rhs.variant || self.truncation != rhs.truncation {
            return Err(Error::DegreeMismatch { left: self.truncation, right: rhs.truncation });
        }
        let monomials = self.monomials.iter().zip(&rhs.monomials).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(MonomialSeq { monomials, ..self.clone() })
    }

    pub fn scale(&self, s: &Scalar) -> MonomialSeq {
        MonomialSeq { monomials: self.monomials.iter().map(|m| m.scale(s)).collect(), ..self.clone() }
    }

    pub(crate) fn check_composable(&self, f: &MonomialSeq) -> Result<()> {
        if self.truncation != f.truncation {
            return Err(Error::DegreeMismatch { left: self.truncation, right: f.truncation });
        }
        if f.cod != self.dom {
            return Err(Error::shape(&self.dom, &f.cod));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> SpaceExpr {
        SpaceExpr::base(1)
    }

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn q(p: i64, r: i64) -> Scalar {
        Scalar::ratio(p, r).unwrap()
    }

    fn scalar_mono(degree: usize, c: Scalar) -> Monomial {
        Monomial::new(k(), k(), degree, Matrix::from_rows(vec![vec![c]]).unwrap()).unwrap()
    }

    #[test]
    fn square_polarizes_to_product() {
        let f = |x: &[Scalar]| vec![&x[0] * &x[0]];
        let m = polarize(f, 2, &k(), &k()).unwrap();
        // f̂(x, y) = ((x+y)² − x² − y²)/2 = xy
        assert_eq!(m.multilinear(&[vec![s(3)], vec![s(5)]]).unwrap(), vec![s(15)]);
        assert_eq!(m, scalar_mono(2, s(1)));
    }

    #[test]
    fn cross_term_polarization() {
        let b2 = SpaceExpr::base(2);
        let f = |x: &[Scalar]| vec![&x[0] * &x[1]];
        let m = polarize(f, 2, &b2, &k()).unwrap();
        // f̂(a, b) = (a₁b₂ + a₂b₁)/2
        let v = m.multilinear(&[vec![s(1), s(2)], vec![s(3), s(5)]]).unwrap();
        assert_eq!(v, vec![q(1 * 5 + 2 * 3, 2)]);
    }

    #[test]
    fn degree_one_polarization_is_identity() {
        let f = |x: &[Scalar]| vec![&x[0] * &s(7)];
        assert_eq!(polarize(f, 1, &k(), &k()).unwrap(), scalar_mono(1, s(7)));
    }

    #[test]
    fn polarize_rejects_inhomogeneous() {
        let f = |x: &[Scalar]| vec![&x[0] * &x[0] + &x[0]];
        assert_eq!(polarize(f, 2, &k(), &k()), Err(Error::NotHomogeneous { degree: 2 }));
    }

    #[test]
    fn evaluation() {
        let c = Monomial::constant(k(), SpaceExpr::base(2), &[s(4), s(-1)]).unwrap();
        assert_eq!(c.eval(&[s(9)]).unwrap(), vec![s(4), s(-1)]);
        assert_eq!(scalar_mono(2, s(1)).eval(&[s(3)]).unwrap(), vec![s(9)]);
        assert!(scalar_mono(2, s(1)).eval(&[s(3), s(1)]).is_err());
    }

    #[test]
    fn embed_and_linearize() {
        let b2 = SpaceExpr::base(2);
        let e = Monomial::sym_power_embed(&b2, 2);
        assert_eq!(e.eval(&[s(1), s(1)]).unwrap(), vec![s(1), s(2), s(1)]);
        assert!(e.linearize().is_identity());
        assert_eq!(Monomial::sym_power_embed(&b2, 0).eval(&[s(5), s(6)]).unwrap(), vec![s(1)]);
        assert!(Monomial::sym_power_embed(&b2, 1).linearize().is_identity());
        assert_eq!(scalar_mono(2, s(1)).linearize().matrix(), &Matrix::identity(1));
    }

    #[test]
    fn composition_of_powers() {
        let g = scalar_mono(2, s(1));
        let f = scalar_mono(3, s(1));
        let h = Monomial::compose(&g, &f).unwrap();
        assert_eq!(h, scalar_mono(6, s(1)));
        let lin = scalar_mono(1, s(3));
        assert_eq!(Monomial::compose(&lin, &f).unwrap(), scalar_mono(3, s(3)));
    }

    #[test]
    fn vector_space_ops() {
        let m = scalar_mono(2, s(1));
        let z = Monomial::zero(k(), k(), 2);
        assert_eq!(z.add(&m).unwrap(), m);
        assert_eq!(m.scale(&s(2)), scalar_mono(2, s(2)));
        assert!(m.add(&scalar_mono(3, s(1))).is_err());
    }

    #[test]
    fn json_is_sparse() {
        let m = scalar_mono(2, q(1, 2));
        let j = serde_json::to_string(&m).unwrap();
        assert_eq!(
            j,
            r#"{"degree":2,"dom":{"base":1},"cod":{"base":1},"coeffs":[{"multiset":[0,0],"cod_index":0,"value":"1/2"}]}"#
        );
        assert_eq!(serde_json::from_str::<Monomial>(&j).unwrap(), m);
    }

    #[test]
    fn sequences() {
        let seq = MonomialSeq::dereliction(SeqVariant::Unit, &k(), 3).unwrap();
        assert_eq!(seq.monomials().len(), 4);
        assert_eq!(seq.eval(&[s(5)]).unwrap(), vec![s(5)]);
        let nu = MonomialSeq::zero(SeqVariant::NonUnit, k(), k(), 3);
        assert_eq!(nu.monomials().len(), 3);
        assert!(nu.get(0).is_none());
        let j = serde_json::to_string(&nu).unwrap();
        assert!(j.starts_with(r#"{"variant":"nonunit""#));
        assert_eq!(serde_json::from_str::<MonomialSeq>(&j).unwrap(), nu);
        assert!(MonomialSeq::new(SeqVariant::Unit, k(), k(), 2, vec![]).is_err());
    }
}

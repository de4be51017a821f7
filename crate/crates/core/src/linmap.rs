//! Typed linear maps between space expressions.
//!
//! [`LinMap`] stores a dense matrix and is the user-facing value; [`SparseMap`]
//! stores columns sparsely and carries the exponential structure, whose spaces
//! (`!!E`, `!!!E`) outgrow dense storage quickly.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseMatrix, SparseVec};
use crate::scalar::Scalar;
use crate::space::SpaceExpr;

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "LinMapJson", into = "LinMapJson")]
pub struct LinMap {
    dom: SpaceExpr,
    cod: SpaceExpr,
    matrix: Matrix,
}

/// JSON form: shapes plus row-major entries.
#[derive(Serialize, Deserialize)]
struct LinMapJson {
    dom: SpaceExpr,
    cod: SpaceExpr,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl From<LinMap> for LinMapJson {
    fn from(f: LinMap) -> Self {
        LinMapJson {
            rows: f.matrix.rows(),
            cols: f.matrix.cols(),
            entries: f.matrix.entries().to_vec(),
            dom: f.dom,
            cod: f.cod,
        }
    }
}

impl TryFrom<LinMapJson> for LinMap {
    type Error = Error;
    fn try_from(j: LinMapJson) -> Result<Self> {
        LinMap::new(j.dom, j.cod, Matrix::new(j.rows, j.cols, j.entries)?)
    }
}

impl LinMap {
    pub fn new(dom: SpaceExpr, cod: SpaceExpr, matrix: Matrix) -> Result<Self> {
        let expected = format!("{}x{}", cod.dim(), dom.dim());
        let found = format!("{}x{}", matrix.rows(), matrix.cols());
        if expected != found {
            return Err(Error::shape(expected, found));
        }
        Ok(LinMap { dom, cod, matrix })
    }

    pub(crate) fn new_unchecked(dom: SpaceExpr, cod: SpaceExpr, matrix: Matrix) -> Self {
        debug_assert_eq!(matrix.rows(), cod.dim());
        debug_assert_eq!(matrix.cols(), dom.dim());
        LinMap { dom, cod, matrix }
    }

    pub fn identity(s: SpaceExpr) -> Self {
        let n = s.dim();
        LinMap { dom: s.clone(), cod: s, matrix: Matrix::identity(n) }
    }

    pub fn zero(dom: SpaceExpr, cod: SpaceExpr) -> Self {
        let matrix = Matrix::zeros(cod.dim(), dom.dim());
        LinMap { dom, cod, matrix }
    }

    pub fn dom(&self) -> &SpaceExpr {
        &self.dom
    }

    pub fn cod(&self) -> &SpaceExpr {
        &self.cod
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ rhs`; the codomain of `rhs` must be structurally equal to the
    /// domain of `self`.
    pub fn compose(&self, rhs: &LinMap) -> Result<LinMap> {
        if rhs.cod != self.dom {
            return Err(Error::shape(&self.dom, &rhs.cod));
        }
        Ok(LinMap { dom: rhs.dom.clone(), cod: self.cod.clone(), matrix: self.matrix.mul(&rhs.matrix)? })
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        self.matrix.mul_vec(x)
    }

    pub fn add(&self, rhs: &LinMap) -> Result<LinMap> {
        if self.dom != rhs.dom || self.cod != rhs.cod {
            return Err(Error::shape(format!("{} -> {}", self.dom, self.cod), format!("{} -> {}", rhs.dom, rhs.cod)));
        }
        Ok(LinMap { dom: self.dom.clone(), cod: self.cod.clone(), matrix: self.matrix.add(&rhs.matrix)? })
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        LinMap { dom: self.dom.clone(), cod: self.cod.clone(), matrix: self.matrix.scale(s) }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn inverse(&self) -> Result<LinMap> {
        Ok(LinMap { dom: self.cod.clone(), cod: self.dom.clone(), matrix: self.matrix.inverse()? })
    }

    /// Same matrix, new endpoint shapes of equal dimension.
    pub fn retype(&self, dom: SpaceExpr, cod: SpaceExpr) -> Result<LinMap> {
        LinMap::new(dom, cod, self.matrix.clone())
    }

    pub fn to_sparse(&self) -> SparseMap {
        SparseMap { dom: self.dom.clone(), cod: self.cod.clone(), matrix: SparseMatrix::from_dense(&self.matrix) }
    }
}

/// Linear map with column-sparse storage.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMap {
    dom: SpaceExpr,
    cod: SpaceExpr,
    matrix: SparseMatrix,
}

impl SparseMap {
    pub fn new(dom: SpaceExpr, cod: SpaceExpr, matrix: SparseMatrix) -> Result<Self> {
        if matrix.rows() != cod.dim() || matrix.cols() != dom.dim() {
            return Err(Error::shape(
                format!("{}x{}", cod.dim(), dom.dim()),
                format!("{}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        Ok(SparseMap { dom, cod, matrix })
    }

    pub fn identity(s: SpaceExpr) -> Self {
        let n = s.dim();
        SparseMap { dom: s.clone(), cod: s, matrix: SparseMatrix::identity(n) }
    }

    pub fn zero(dom: SpaceExpr, cod: SpaceExpr) -> Self {
        let matrix = SparseMatrix::zeros(cod.dim(), dom.dim());
        SparseMap { dom, cod, matrix }
    }

    pub fn dom(&self) -> &SpaceExpr {
        &self.dom
    }

    pub fn cod(&self) -> &SpaceExpr {
        &self.cod
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        self.matrix.column(j)
    }

    /// `self ∘ rhs`
    pub fn compose(&self, rhs: &SparseMap) -> Result<SparseMap> {
        if rhs.cod != self.dom {
            return Err(Error::shape(&self.dom, &rhs.cod));
        }
        Ok(SparseMap { dom: rhs.dom.clone(), cod: self.cod.clone(), matrix: self.matrix.compose(&rhs.matrix)? })
    }

    /// `f ⊗ g` on canonical tensor bases.
    pub fn tensor(&self, rhs: &SparseMap) -> SparseMap {
        SparseMap {
            dom: SpaceExpr::tensor(self.dom.clone(), rhs.dom.clone()),
            cod: SpaceExpr::tensor(self.cod.clone(), rhs.cod.clone()),
            matrix: self.matrix.kron(&rhs.matrix),
        }
    }

    pub fn add(&self, rhs: &SparseMap) -> Result<SparseMap> {
        if self.dom != rhs.dom || self.cod != rhs.cod {
            return Err(Error::shape(format!("{} -> {}", self.dom, self.cod), format!("{} -> {}", rhs.dom, rhs.cod)));
        }
        Ok(SparseMap { dom: self.dom.clone(), cod: self.cod.clone(), matrix: self.matrix.add(&rhs.matrix)? })
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn retype(&self, dom: SpaceExpr, cod: SpaceExpr) -> Result<SparseMap> {
        SparseMap::new(dom, cod, self.matrix.clone())
    }

    pub fn to_dense(&self) -> LinMap {
        LinMap::new_unchecked(self.dom.clone(), self.cod.clone(), self.matrix.to_dense())
    }
}

impl From<&LinMap> for SparseMap {
    fn from(f: &LinMap) -> Self {
        f.to_sparse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_checked() {
        let m = Matrix::zeros(2, 3);
        assert!(LinMap::new(SpaceExpr::base(3), SpaceExpr::base(2), m.clone()).is_ok());
        assert!(LinMap::new(SpaceExpr::base(2), SpaceExpr::base(3), m).is_err());
    }

    #[test]
    fn compose_checks_structure() {
        let f = LinMap::identity(SpaceExpr::tensor(SpaceExpr::base(1), SpaceExpr::base(2)));
        let g = LinMap::identity(SpaceExpr::par(SpaceExpr::base(1), SpaceExpr::base(2)));
        assert!(matches!(g.compose(&f), Err(Error::ShapeMismatch { .. })));
        assert!(f.compose(&f).unwrap().is_identity());
    }

    #[test]
    fn json_roundtrip() {
        let m = Matrix::from_rows(vec![vec![Scalar::ratio(1, 2).unwrap(), Scalar::from_int(-3)]]).unwrap();
        let f = LinMap::new(SpaceExpr::base(2), SpaceExpr::base(1), m).unwrap();
        let j = serde_json::to_string(&f).unwrap();
        assert_eq!(j, r#"{"dom":{"base":2},"cod":{"base":1},"rows":1,"cols":2,"entries":["1/2","-3"]}"#);
        let back: LinMap = serde_json::from_str(&j).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"dom":{"base":2},"cod":{"base":1},"rows":1,"cols":1,"entries":["1"]}"#;
        assert!(serde_json::from_str::<LinMap>(bad).is_err());
    }

    #[test]
    fn sparse_dense_agree() {
        let m = Matrix::from_fn(3, 2, |i, j| Scalar::from_int((i * 2 + j) as i64 - 2));
        let f = LinMap::new(SpaceExpr::base(2), SpaceExpr::base(3), m).unwrap();
        assert_eq!(f.to_sparse().to_dense(), f);
    }
}

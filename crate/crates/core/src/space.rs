//! Structural space expressions and their canonical bases.
//!
//! Canonical basis order per constructor:
//!
//! | constructor        | basis                                              | order                          |
//! |--------------------|----------------------------------------------------|--------------------------------|
//! | `Base(d)`          | `e0 … e(d-1)`                                      | index                          |
//! | `Dual(S)`          | dual basis `eᵢ*`                                   | as `S`                         |
//! | `Tensor/Par(S,T)`  | pairs `(i, j)`                                     | lexicographic, `i·dim T + j`   |
//! | `Hom(S,T)`         | matrix units `eᵢ ↦ fⱼ`                             | lexicographic, `i·dim T + j`   |
//! | `Prod/Coprod(S,T)` | `S` basis, then `T` basis                          | concatenation                  |
//! | `SymPow(S,n)`      | multisets of `n` basis indices of `S`              | lexicographic, non-decreasing  |
//! | `Bang(S,D)`        | grades `0..=D`, each a `SymPow(S,n)` block         | by grade, then multiset        |
//! | `BangNonUnit(S,D)` | grades `1..=D`                                     | by grade, then multiset        |
//!
//! The basis element of `SymPow(S,n)` for the multiset `{i₁,…,iₙ}` is the
//! symmetrized tensor `(1/n!) Σ_σ e_{i_σ(1)} ⊗ … ⊗ e_{i_σ(n)}`, so that
//! `x^{⊗n} = Σ_α mult(α)·x^α·e_α` with `mult` the multinomial coefficient.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinat::{multiset_count, unrank};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceExpr {
    Base(usize),
    Dual(Box<SpaceExpr>),
    Tensor(Box<SpaceExpr>, Box<SpaceExpr>),
    Par(Box<SpaceExpr>, Box<SpaceExpr>),
    Prod(Box<SpaceExpr>, Box<SpaceExpr>),
    Coprod(Box<SpaceExpr>, Box<SpaceExpr>),
    Hom(Box<SpaceExpr>, Box<SpaceExpr>),
    SymPow { space: Box<SpaceExpr>, n: usize },
    Bang { space: Box<SpaceExpr>, degree: usize },
    BangNonUnit { space: Box<SpaceExpr>, degree: usize },
}

impl SpaceExpr {
    pub fn base(d: usize) -> Self {
        SpaceExpr::Base(d)
    }

    /// The ground field as a one-dimensional space; unit of `⊗`.
    pub fn unit() -> Self {
        SpaceExpr::Base(1)
    }

    pub fn dual(s: SpaceExpr) -> Self {
        SpaceExpr::Dual(Box::new(s))
    }

    pub fn tensor(s: SpaceExpr, t: SpaceExpr) -> Self {
        SpaceExpr::Tensor(Box::new(s), Box::new(t))
    }

    pub fn par(s: SpaceExpr, t: SpaceExpr) -> Self {
        SpaceExpr::Par(Box::new(s), Box::new(t))
    }

    pub fn prod(s: SpaceExpr, t: SpaceExpr) -> Self {
        SpaceExpr::Prod(Box::new(s), Box::new(t))
    }

    pub fn coprod(s: SpaceExpr, t: SpaceExpr) -> Self {
        SpaceExpr::Coprod(Box::new(s), Box::new(t))
    }

    pub fn hom(s: SpaceExpr, t: SpaceExpr) -> Self {
        SpaceExpr::Hom(Box::new(s), Box::new(t))
    }

    pub fn sym_pow(s: SpaceExpr, n: usize) -> Self {
        SpaceExpr::SymPow { space: Box::new(s), n }
    }

    pub fn bang(s: SpaceExpr, degree: usize) -> Self {
        SpaceExpr::Bang { space: Box::new(s), degree }
    }

    pub fn bang_non_unit(s: SpaceExpr, degree: usize) -> Self {
        SpaceExpr::BangNonUnit { space: Box::new(s), degree }
    }

    pub fn dim(&self) -> usize {
        use SpaceExpr::*;
        match self {
            Base(d) => *d,
            Dual(s) => s.dim(),
            Tensor(s, t) | Par(s, t) | Hom(s, t) => s.dim() * t.dim(),
            Prod(s, t) | Coprod(s, t) => s.dim() + t.dim(),
            SymPow { space, n } => multiset_count(space.dim(), *n),
            Bang { space, degree } => {
                let d = space.dim();
                (0..=*degree).map(|n| multiset_count(d, n)).sum()
            }
            BangNonUnit { space, degree } => {
                let d = space.dim();
                (1..=*degree).map(|n| multiset_count(d, n)).sum()
            }
        }
    }

    /// Human-readable label of basis vector `i`.
    pub fn basis_label(&self, i: usize) -> String {
        use SpaceExpr::*;
        match self {
            Base(_) => format!("e{i}"),
            Dual(s) => format!("{}*", s.basis_label(i)),
            Tensor(s, t) => {
                let n = t.dim();
                format!("({}⊗{})", s.basis_label(i / n), t.basis_label(i % n))
            }
            Par(s, t) => {
                let n = t.dim();
                format!("({}⅋{})", s.basis_label(i / n), t.basis_label(i % n))
            }
            Hom(s, t) => {
                let n = t.dim();
                format!("[{}↦{}]", s.basis_label(i / n), t.basis_label(i % n))
            }
            Prod(s, t) | Coprod(s, t) => {
                let m = s.dim();
                if i < m {
                    format!("inl({})", s.basis_label(i))
                } else {
                    format!("inr({})", t.basis_label(i - m))
                }
            }
            SymPow { space, n } => sym_label(space, &unrank(i, *n, space.dim())),
            Bang { space, .. } | BangNonUnit { space, .. } => {
                let (n, r) = self.bang_grade_of(i).expect("bang space");
                sym_label(space, &unrank(r, n, space.dim()))
            }
        }
    }

    pub fn basis_labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.basis_label(i)).collect()
    }

    /// Lowest grade present in an exponential space (0 for `Bang`, 1 for
    /// `BangNonUnit`).
    pub fn bang_parts(&self) -> Option<(&SpaceExpr, usize, usize)> {
        match self {
            SpaceExpr::Bang { space, degree } => Some((space, 0, *degree)),
            SpaceExpr::BangNonUnit { space, degree } => Some((space, 1, *degree)),
            _ => None,
        }
    }

    /// Index of the first basis vector of grade `n` in an exponential space.
    pub fn bang_grade_offset(&self, n: usize) -> Option<usize> {
        let (space, lo, hi) = self.bang_parts()?;
        if n < lo || n > hi + 1 {
            return None;
        }
        let d = space.dim();
        Some((lo..n).map(|k| multiset_count(d, k)).sum())
    }

    /// `(grade, rank within grade)` of basis vector `i` of an exponential space.
    pub fn bang_grade_of(&self, i: usize) -> Option<(usize, usize)> {
        let (space, lo, hi) = self.bang_parts()?;
        let d = space.dim();
        let mut rest = i;
        for n in lo..=hi {
            let c = multiset_count(d, n);
            if rest < c {
                return Some((n, rest));
            }
            rest -= c;
        }
        None
    }

    /// Number of nodes in the expression tree.
    pub fn size(&self) -> usize {
        use SpaceExpr::*;
        match self {
            Base(_) => 1,
            Dual(s) => 1 + s.size(),
            Tensor(s, t) | Par(s, t) | Prod(s, t) | Coprod(s, t) | Hom(s, t) => 1 + s.size() + t.size(),
            SymPow { space, .. } | Bang { space, .. } | BangNonUnit { space, .. } => 1 + space.size(),
        }
    }
}

fn sym_label(space: &SpaceExpr, ms: &[usize]) -> String {
    if ms.is_empty() {
        return "1".to_string();
    }
    let parts: Vec<String> = ms.iter().map(|&j| space.basis_label(j)).collect();
    parts.join("·")
}

/// Prints in the surface syntax accepted by the DSL parser.
impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SpaceExpr::*;
        match self {
            Base(d) => write!(f, "base {d}"),
            Dual(s) => write!(f, "dual({s})"),
            Tensor(s, t) => write!(f, "tensor({s}, {t})"),
            Par(s, t) => write!(f, "par({s}, {t})"),
            Prod(s, t) => write!(f, "prod({s}, {t})"),
            Coprod(s, t) => write!(f, "coprod({s}, {t})"),
            Hom(s, t) => write!(f, "hom({s}, {t})"),
            SymPow { space, n } => write!(f, "sympow({space}, {n})"),
            Bang { space, degree } => write!(f, "bang({space}, {degree})"),
            BangNonUnit { space, degree } => write!(f, "bang1({space}, {degree})"),
        }
    }
}

impl fmt::Debug for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(d: usize) -> SpaceExpr {
        SpaceExpr::base(d)
    }

    #[test]
    fn dimensions() {
        assert_eq!(SpaceExpr::dual(b(3)).dim(), 3);
        assert_eq!(SpaceExpr::dual(SpaceExpr::dual(b(2))).dim(), 2);
        assert_eq!(SpaceExpr::dual(SpaceExpr::tensor(b(2), b(3))).dim(), 6);
        assert_eq!(SpaceExpr::par(b(2), b(3)).dim(), 6);
        assert_eq!(SpaceExpr::prod(b(2), b(3)).dim(), 5);
        assert_eq!(SpaceExpr::coprod(b(2), b(3)).dim(), 5);
        assert_eq!(SpaceExpr::hom(b(2), b(5)).dim(), 10);
        assert_eq!(SpaceExpr::sym_pow(b(2), 3).dim(), 4);
        assert_eq!(SpaceExpr::bang(b(2), 3).dim(), 10);
        assert_eq!(SpaceExpr::bang(b(1), 5).dim(), 6);
        assert_eq!(SpaceExpr::bang(b(4), 0).dim(), 1);
        assert_eq!(SpaceExpr::bang_non_unit(b(1), 3).dim(), 3);
    }

    #[test]
    fn bang_grades() {
        let s = SpaceExpr::bang(b(2), 3);
        assert_eq!(s.bang_grade_offset(0), Some(0));
        assert_eq!(s.bang_grade_offset(1), Some(1));
        assert_eq!(s.bang_grade_offset(2), Some(3));
        assert_eq!(s.bang_grade_offset(3), Some(6));
        assert_eq!(s.bang_grade_of(7), Some((3, 1)));
        assert_eq!(s.bang_grade_of(10), None);
        let s1 = SpaceExpr::bang_non_unit(b(2), 2);
        assert_eq!(s1.bang_grade_offset(1), Some(0));
        assert_eq!(s1.bang_grade_of(2), Some((2, 0)));
    }

    #[test]
    fn labels() {
        let s = SpaceExpr::bang(b(2), 2);
        assert_eq!(s.basis_labels(), vec!["1", "e0", "e1", "e0·e0", "e0·e1", "e1·e1"]);
        let t = SpaceExpr::tensor(b(2), SpaceExpr::dual(b(1)));
        assert_eq!(t.basis_labels(), vec!["(e0⊗e0*)", "(e1⊗e0*)"]);
    }

    #[test]
    fn json_shape() {
        let s = SpaceExpr::bang(SpaceExpr::tensor(b(1), b(2)), 2);
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"bang":{"space":{"tensor":[{"base":1},{"base":2}]},"degree":2}}"#);
        let back: SpaceExpr = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}

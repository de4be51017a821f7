//! Executable categorical laws and the suite runner.
//!
//! Each law is a function returning an [`Outcome`]; failures carry a witness
//! (the first differing column, or the offending instance). The runner
//! evaluates laws in parallel and reports them in construction order.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::exponential as ex;
use crate::linalg::{self, Matrix};
use crate::linmap::{LinMap, SparseMap};
use crate::mall;
use crate::monomial::{polarize, Monomial, MonomialSeq, SeqVariant};
use crate::nonunit as nu;
use crate::random::{self as rnd, Gen};
use crate::scalar::Scalar;
use crate::space::SpaceExpr;
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

impl Outcome {
    fn and(self, next: impl FnOnce() -> Result<Outcome>) -> Result<Outcome> {
        match self {
            Outcome::Pass => next(),
            other => Ok(other),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawResult {
    pub law: String,
    pub family: String,
    pub parameters: Parameters,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

type Runner = Box<dyn Fn() -> Result<Outcome> + Send + Sync>;

pub struct Law {
    pub name: String,
    pub family: String,
    pub parameters: Parameters,
    run: Runner,
}

impl Law {
    pub fn new(
        family: &str,
        name: &str,
        parameters: Parameters,
        run: impl Fn() -> Result<Outcome> + Send + Sync + 'static,
    ) -> Self {
        Law { name: format!("{family}.{name}"), family: family.to_string(), parameters, run: Box::new(run) }
    }

    pub fn evaluate(&self) -> LawResult {
        let (status, witness) = match (self.run)() {
            Ok(Outcome::Pass) => (Status::Pass, None),
            Ok(Outcome::Fail(w)) => (Status::Fail, Some(w)),
            Ok(Outcome::Skipped(w)) => (Status::Skipped, Some(w)),
            Err(e) => (Status::Fail, Some(format!("error: {e}"))),
        };
        LawResult {
            law: self.name.clone(),
            family: self.family.clone(),
            parameters: self.parameters.clone(),
            status,
            witness,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub dims: Vec<usize>,
    pub degree: usize,
    pub seed: u64,
    pub filter: Option<String>,
}

pub const FAMILIES: &[&str] =
    &["linalg", "mall", "monomials", "comonad", "kleisli", "seely", "monoidal", "differential", "nonunit"];

/// A law is selected when the filter names its family or is a prefix of its
/// full name.
pub fn selected(filter: Option<&str>, law: &Law) -> bool {
    filter.is_none_or(|f| law.family == f || law.name.starts_with(f))
}

pub fn run(laws: &[Law]) -> Vec<LawResult> {
    laws.par_iter().map(Law::evaluate).collect()
}

pub fn all_passed(results: &[LawResult]) -> bool {
    results.iter().all(|r| r.status != Status::Fail)
}

fn skip_below(degree: usize, min: usize) -> Option<Outcome> {
    (degree < min).then(|| Outcome::Skipped(format!("needs truncation degree at least {min}")))
}

/// Compares two maps column by column.
pub fn same_map(lhs: &SparseMap, rhs: &SparseMap) -> Outcome {
    same_map_where(lhs, rhs, |_| true)
}

pub fn same_map_where(lhs: &SparseMap, rhs: &SparseMap, keep: impl Fn(usize) -> bool) -> Outcome {
    if lhs.dom() != rhs.dom() || lhs.cod() != rhs.cod() {
        return Outcome::Fail(format!(
            "shapes differ: {} -> {} vs {} -> {}",
            lhs.dom(),
            lhs.cod(),
            rhs.dom(),
            rhs.cod()
        ));
    }
    match lhs.matrix().first_difference_where(rhs.matrix(), keep) {
        None => Outcome::Pass,
        Some(j) => Outcome::Fail(format!(
            "column {j} ({}): left {:?}, right {:?}",
            lhs.dom().basis_label(j),
            lhs.column(j),
            rhs.column(j)
        )),
    }
}

fn is_identity(f: &SparseMap) -> Outcome {
    same_map(f, &SparseMap::identity(f.dom().clone()))
}

fn check(ok: bool, witness: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(witness())
    }
}

fn base(d: usize) -> SpaceExpr {
    SpaceExpr::base(d)
}

fn seq_eq(lhs: &MonomialSeq, rhs: &MonomialSeq) -> Outcome {
    match lhs.monomials().iter().zip(rhs.monomials()).find(|(a, b)| a != b) {
        None if lhs == rhs => Outcome::Pass,
        None => Outcome::Fail("sequences differ in shape".into()),
        Some((a, b)) => Outcome::Fail(format!(
            "degree {}: left {}, right {}",
            a.degree(),
            compact(a.coeffs()),
            compact(b.coeffs())
        )),
    }
}

/// One-line `[a, b; c, d]` rendering for witnesses.
fn compact(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect::<Vec<_>>().join(", "))
        .collect();
    format!("[{}]", rows.join("; "))
}

// ---------------------------------------------------------------- linalg

/// Kernel containment `⋂ Ker lₖ ⊆ Ker l` agrees with `l ∈ span(lₖ)`.
pub fn kernel_iff_span(seed: u64, instances: usize, dim: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "linalg.kernel_iff_span");
    for i in 0..instances {
        let n = g.gen_range(0..=3);
        let ls: Vec<Vec<Scalar>> = (0..n).map(|_| rnd::vector(&mut g, dim)).collect();
        let l = if g.gen_bool(0.5) {
            let mut acc = vec![Scalar::zero(); dim];
            for v in &ls {
                let c = rnd::scalar(&mut g);
                for (a, x) in acc.iter_mut().zip(v) {
                    *a += &c * x;
                }
            }
            acc
        } else {
            rnd::vector(&mut g, dim)
        };
        let (a, b) = linalg::kernel_containment_iff_span(&l, &ls)?;
        if a != b {
            return Ok(Outcome::Fail(format!("instance {i}: l={l:?} ls={ls:?} containment={a} span={b}")));
        }
    }
    Ok(Outcome::Pass)
}

pub fn membership_recombines(seed: u64, instances: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "linalg.membership");
    for i in 0..instances {
        let n = g.gen_range(1..=3);
        let gens: Vec<Vec<Scalar>> = (0..n).map(|_| rnd::vector(&mut g, 4)).collect();
        let coeffs = rnd::vector(&mut g, n);
        let target: Vec<Scalar> =
            (0..4).map(|k| gens.iter().zip(&coeffs).map(|(v, c)| &v[k] * c).sum()).collect();
        let Some(sol) = linalg::solve_membership(&target, &gens)? else {
            return Ok(Outcome::Fail(format!("instance {i}: target in span reported absent")));
        };
        let back: Vec<Scalar> = (0..4).map(|k| gens.iter().zip(&sol).map(|(v, c)| &v[k] * c).sum()).collect();
        if back != target {
            return Ok(Outcome::Fail(format!("instance {i}: recombination {back:?} != {target:?}")));
        }
    }
    Ok(Outcome::Pass)
}

pub fn field_axioms(seed: u64, instances: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "linalg.field_axioms");
    for _ in 0..instances {
        let (a, b, c) = (rnd::scalar(&mut g), rnd::scalar(&mut g), rnd::scalar(&mut g));
        let ok = &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a + &b == &b + &a
            && &a * &b == &b * &a
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&(&a + &b) - &b) == a
            && (a.is_zero() || (&a * &a.recip()?).is_one());
        if !ok {
            return Ok(Outcome::Fail(format!("a={a} b={b} c={c}")));
        }
    }
    Ok(Outcome::Pass)
}

// ---------------------------------------------------------------- mall

/// `S → S''` is the identity on canonical bases and invertible.
pub fn double_dual(seed: u64, instances: usize, max_dim: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "mall.double_dual");
    for _ in 0..instances {
        let s = rnd::space(&mut g, max_dim);
        let ev = mall::double_dual_ev(&s);
        let back = mall::double_dual_ev_inverse(&s).compose(&ev)?;
        if !ev.is_identity() || !ev.matrix().is_invertible() || !back.is_identity() {
            return Ok(Outcome::Fail(format!("space {s}")));
        }
    }
    Ok(Outcome::Pass)
}

pub fn star_autonomy(seed: u64, instances: usize, max_dim: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "mall.star_autonomy");
    for _ in 0..instances {
        let s = rnd::space(&mut g, max_dim);
        if !mall::star_autonomy_check(&s) {
            return Ok(Outcome::Fail(format!("space {s}")));
        }
    }
    Ok(Outcome::Pass)
}

pub fn curry_roundtrip(seed: u64, instances: usize, max_dim: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "mall.curry_roundtrip");
    for _ in 0..instances {
        let (s, t, u) = (
            base(g.gen_range(1..=max_dim)),
            base(g.gen_range(1..=max_dim)),
            base(g.gen_range(1..=max_dim)),
        );
        let f = rnd::linmap(&mut g, &mall::tensor_space(&s, &t), &u);
        let h = rnd::linmap(&mut g, &s, &mall::hom_space(&t, &u));
        if mall::uncurry(&mall::curry(&f)?)? != f || mall::curry(&mall::uncurry(&h)?)? != h {
            return Ok(Outcome::Fail(format!("dims ({}, {}, {})", s.dim(), t.dim(), u.dim())));
        }
        // curry(f) followed by evaluation gives back f
        let via_ev = mall::ev(&t, &u).compose(&mall::tensor_map(&mall::curry(&f)?, &LinMap::identity(t.clone())))?;
        if via_ev != f {
            return Ok(Outcome::Fail(format!("ev ∘ (curry f ⊗ id) ≠ f at dims ({}, {}, {})", s.dim(), t.dim(), u.dim())));
        }
    }
    Ok(Outcome::Pass)
}

pub fn hom_dual_decomposition(seed: u64, instances: usize, max_dim: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "mall.hom_dual_decompose");
    for i in 0..instances {
        let (s, t) = (base(g.gen_range(1..=max_dim)), base(g.gen_range(1..=max_dim)));
        let n = s.dim() * t.dim();
        let phi = rnd::vector(&mut g, n);
        let pairs = mall::hom_dual_decompose(&s, &t, &phi)?;
        if pairs.len() > n {
            return Ok(Outcome::Fail(format!("instance {i}: {} terms", pairs.len())));
        }
        for (u, want) in phi.iter().enumerate() {
            let a: Vec<Scalar> = (0..n).map(|k| Scalar::from_int((k == u) as i64)).collect();
            let v = mall::eval_decomposition(&pairs, &s, &t, &a)?;
            if v != *want {
                return Ok(Outcome::Fail(format!("instance {i}: basis map {u}: {v} vs {want}")));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Pentagon, hexagon and triangle identities, shape-checked through
/// composition.
pub fn monoidal_coherence(dims: [usize; 4]) -> Result<Outcome> {
    let [a, b, c, d] = dims.map(base);
    let t = mall::tensor_space;
    let id = |s: &SpaceExpr| LinMap::identity(s.clone());
    let left = mall::associator(&a, &b, &t(&c, &d)).compose(&mall::associator(&t(&a, &b), &c, &d))?;
    let right = mall::tensor_map(&id(&a), &mall::associator(&b, &c, &d))
        .compose(&mall::associator(&a, &t(&b, &c), &d))?
        .compose(&mall::tensor_map(&mall::associator(&a, &b, &c), &id(&d)))?;
    if left != right {
        return Ok(Outcome::Fail("pentagon".into()));
    }
    let hex_l = mall::associator(&b, &c, &a)
        .compose(&mall::symmetry(&a, &t(&b, &c)))?
        .compose(&mall::associator(&a, &b, &c))?;
    let hex_r = mall::tensor_map(&id(&b), &mall::symmetry(&a, &c))
        .compose(&mall::associator(&b, &a, &c))?
        .compose(&mall::tensor_map(&mall::symmetry(&a, &b), &id(&c)))?;
    if hex_l != hex_r {
        return Ok(Outcome::Fail("hexagon".into()));
    }
    let k = SpaceExpr::unit();
    let tri_l = mall::tensor_map(&id(&a), &mall::left_unitor(&b)).compose(&mall::associator(&a, &k, &b))?;
    let tri_r = mall::tensor_map(&mall::right_unitor(&a), &id(&b));
    if tri_l != tri_r {
        return Ok(Outcome::Fail("triangle".into()));
    }
    let sym2 = mall::symmetry(&b, &a).compose(&mall::symmetry(&a, &b))?;
    Ok(check(sym2.is_identity(), || "symmetry is not involutive".into()))
}

pub fn tensor_functorial(seed: u64, instances: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "mall.tensor_functorial");
    let (s, t) = (base(2), base(2));
    let id = mall::tensor_map(&LinMap::identity(s.clone()), &LinMap::identity(t.clone()));
    if !id.is_identity() {
        return Ok(Outcome::Fail("id ⊗ id ≠ id".into()));
    }
    for _ in 0..instances {
        let (f, f2, h, h2) = (
            rnd::linmap(&mut g, &s, &s),
            rnd::linmap(&mut g, &s, &s),
            rnd::linmap(&mut g, &t, &t),
            rnd::linmap(&mut g, &t, &t),
        );
        let lhs = mall::tensor_map(&f.compose(&f2)?, &h.compose(&h2)?);
        let rhs = mall::tensor_map(&f, &h).compose(&mall::tensor_map(&f2, &h2))?;
        if lhs != rhs {
            return Ok(Outcome::Fail(format!("f={} g={}", compact(f.matrix()), compact(h.matrix()))));
        }
    }
    Ok(Outcome::Pass)
}

/// Duals of products and coproducts, and transposition against the
/// double-dual identification.
pub fn duality(seed: u64, instances: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "mall.duality");
    for _ in 0..instances {
        let (s, t) = (base(g.gen_range(1..=3)), base(g.gen_range(1..=3)));
        let dp = mall::dual_of_prod(&s, &t);
        let dc = mall::dual_of_coprod(&s, &t);
        if !dp.matrix().is_invertible() || !dc.matrix().is_invertible() {
            return Ok(Outcome::Fail(format!("dual iso not invertible at ({}, {})", s.dim(), t.dim())));
        }
        // (S×T)' → S'⊕T' sends the dual basis form of inl(eᵢ) to inl(eᵢ*)
        let restrict = mall::transpose(&mall::prod_injection(&s, &t, mall::Side::Left));
        let through = mall::coprod_projection(&mall::dual_space(&s), &mall::dual_space(&t), mall::Side::Left).compose(&dp)?;
        if restrict != through {
            return Ok(Outcome::Fail("dual_of_prod disagrees with restriction to the left factor".into()));
        }
        let f = rnd::linmap(&mut g, &s, &t);
        let tt = mall::transpose(&mall::transpose(&f));
        let expect = mall::double_dual_ev(&t).compose(&f)?.compose(&mall::double_dual_ev_inverse(&s))?;
        if tt != expect {
            return Ok(Outcome::Fail(format!("transpose twice of {}", compact(f.matrix()))));
        }
    }
    Ok(Outcome::Pass)
}

pub fn par_natural(seed: u64, instances: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "mall.par_natural");
    for _ in 0..instances {
        let (s, t) = (base(g.gen_range(1..=3)), base(g.gen_range(1..=3)));
        let (s2, t2) = (base(g.gen_range(1..=3)), base(g.gen_range(1..=3)));
        let iso = mall::par_to_tensor(&s, &t);
        if !iso.matrix().is_invertible() {
            return Ok(Outcome::Fail("par_to_tensor not invertible".into()));
        }
        let (f, h) = (rnd::linmap(&mut g, &s, &s2), rnd::linmap(&mut g, &t, &t2));
        let lhs = mall::tensor_map(&f, &h).compose(&iso)?;
        let rhs = mall::par_to_tensor(&s2, &t2).compose(&mall::par_map(&f, &h))?;
        if lhs != rhs {
            return Ok(Outcome::Fail(format!("naturality at ({}, {}) → ({}, {})", s.dim(), t.dim(), s2.dim(), t2.dim())));
        }
    }
    Ok(Outcome::Pass)
}

// ---------------------------------------------------------------- monomials

fn sample_points(g: &mut Gen, d: usize, n: usize) -> Vec<Vec<Scalar>> {
    (0..n).map(|_| rnd::vector(g, d)).collect()
}

/// `polarize(eval m) = m`.
pub fn polarize_eval(seed: u64, instances: usize, d: usize, max_degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("monomials.polarize_eval/{d}"));
    let s = base(d);
    let k = base(g.gen_range(1..=2));
    for i in 0..instances {
        let n = g.gen_range(0..=max_degree);
        let m = rnd::monomial(&mut g, &s, &k, n);
        let p = polarize(|x| m.eval(x).expect("dimension"), n, &s, &k)?;
        if p != m {
            return Ok(Outcome::Fail(format!("instance {i}, degree {n}: {} vs {}", compact(p.coeffs()), compact(m.coeffs()))));
        }
    }
    Ok(Outcome::Pass)
}

pub fn linearize_embed(seed: u64, instances: usize, d: usize, max_degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("monomials.linearize_embed/{d}"));
    let s = base(d);
    for i in 0..instances {
        let n = g.gen_range(0..=max_degree);
        let m = rnd::monomial(&mut g, &s, &base(2), n);
        let lin = m.linearize();
        let emb = Monomial::sym_power_embed(&s, n);
        for x in sample_points(&mut g, d, 10) {
            if lin.apply(&emb.eval(&x)?)? != m.eval(&x)? {
                return Ok(Outcome::Fail(format!("instance {i} at x={x:?}")));
            }
        }
    }
    Ok(Outcome::Pass)
}

pub fn compose_pointwise(seed: u64, instances: usize, d: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("monomials.compose_pointwise/{d}"));
    let s = base(d);
    for i in 0..instances {
        let (k, m) = (g.gen_range(0..=2), g.gen_range(0..=2));
        let f = rnd::monomial(&mut g, &s, &s, m);
        let h = rnd::monomial(&mut g, &s, &base(1), k);
        let c = Monomial::compose(&h, &f)?;
        for x in sample_points(&mut g, d, 20) {
            if c.eval(&x)? != h.eval(&f.eval(&x)?)? {
                return Ok(Outcome::Fail(format!("instance {i}, degrees ({k}, {m}) at x={x:?}")));
            }
        }
    }
    Ok(Outcome::Pass)
}

pub fn homogeneity(seed: u64, instances: usize, d: usize, max_degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("monomials.homogeneity/{d}"));
    let s = base(d);
    for i in 0..instances {
        let n = g.gen_range(0..=max_degree);
        let m = rnd::monomial(&mut g, &s, &base(2), n);
        let m2 = rnd::monomial(&mut g, &s, &base(2), n);
        let x = rnd::vector(&mut g, d);
        let l = rnd::scalar(&mut g);
        let lx: Vec<Scalar> = x.iter().map(|c| c * &l).collect();
        let scaled: Vec<Scalar> = m.eval(&x)?.iter().map(|c| c * &l.pow(n as u32)).collect();
        let sum: Vec<Scalar> = m.eval(&x)?.iter().zip(m2.eval(&x)?).map(|(a, b)| a + &b).collect();
        if m.eval(&lx)? != scaled || m.add(&m2)?.eval(&x)? != sum {
            return Ok(Outcome::Fail(format!("instance {i}, degree {n}")));
        }
    }
    Ok(Outcome::Pass)
}

// ---------------------------------------------------------------- comonad

/// `ε_{!S} ∘ δ = id_{!S}`.
pub fn comonad_counit_left(d: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let s = base(d);
    let dl = ex::comultiplication(&s, degree)?;
    let eps = ex::counit(&ex::bang_space(&s, degree), degree)?;
    Ok(is_identity(&eps.compose(&dl)?))
}

/// `!ε ∘ δ = id_{!S}`.
pub fn comonad_counit_right(d: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let s = base(d);
    let dl = ex::comultiplication(&s, degree)?;
    Ok(is_identity(&ex::bang_map_after(&ex::counit(&s, degree)?, &dl)?))
}

/// `δ_{!S} ∘ δ = !δ ∘ δ`.
pub fn comonad_coassociativity(d: usize, degree: usize) -> Result<Outcome> {
    let s = base(d);
    let dl = ex::comultiplication(&s, degree)?;
    let dl2 = ex::comultiplication(&ex::bang_space(&s, degree), degree)?;
    Ok(same_map(&dl2.compose(&dl)?, &ex::bang_map_after(&dl, &dl)?))
}

/// `!id = id`, `!(g∘f) = !g∘!f`.
pub fn bang_functorial(seed: u64, instances: usize, d: usize, degree: usize, variant: SeqVariant) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("bang_functorial/{d}/{variant:?}"));
    let s = base(d);
    let bang = |f: &SparseMap| match variant {
        SeqVariant::Unit => ex::bang_map(f, degree),
        SeqVariant::NonUnit => nu::nonunit_bang_map(f, degree),
    };
    let o = is_identity(&bang(&SparseMap::identity(s.clone())));
    let mut o = o;
    for _ in 0..instances {
        let f = rnd::linmap(&mut g, &s, &s).to_sparse();
        let h = rnd::linmap(&mut g, &s, &s).to_sparse();
        o = o.and(|| Ok(same_map(&bang(&h.compose(&f)?), &bang(&h).compose(&bang(&f))?)))?;
    }
    Ok(o)
}

/// `δ ∘ !f = !!f ∘ δ`.
pub fn delta_natural(seed: u64, instances: usize, d: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("comonad.delta_natural/{d}"));
    let s = base(d);
    let t = base(g.gen_range(1..=2));
    let ds = ex::comultiplication(&s, degree)?;
    let dt = ex::comultiplication(&t, degree)?;
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::linmap(&mut g, &s, &t).to_sparse();
        let bf = ex::bang_map(&f, degree);
        o = o.and(|| Ok(same_map(&dt.compose(&bf)?, &ex::bang_map_after(&bf, &ds)?)))?;
    }
    Ok(o)
}

/// `!f` agrees with its dual-side definition: pairing `!f(φ)` with a
/// sequence `(gₙ)` equals pairing `φ` with `(gₙ ∘ f)`.
pub fn bang_pairing(seed: u64, instances: usize, d: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("comonad.bang_pairing/{d}"));
    let s = base(d);
    let t = base(g.gen_range(1..=2));
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::linmap(&mut g, &s, &t);
        let h = rnd::seq(&mut g, SeqVariant::Unit, &t, &base(1), degree);
        let lhs = ex::seq_to_kleisli(&h).compose(&ex::bang_map(&f.to_sparse(), degree))?;
        let fm = Monomial::from_linear(&f);
        let comps = h.monomials().iter().map(|m| Monomial::compose(m, &fm)).collect::<Result<Vec<_>>>()?;
        let rhs = ex::seq_to_kleisli(&MonomialSeq::new(SeqVariant::Unit, s.clone(), base(1), degree, comps)?);
        o = o.and(|| Ok(same_map(&lhs, &rhs)))?;
    }
    Ok(o)
}

// ---------------------------------------------------------------- kleisli

pub fn kleisli_roundtrip(seed: u64, instances: usize, d: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("kleisli.roundtrip/{d}"));
    let s = base(d);
    let t = base(2);
    let b = ex::bang_space(&s, degree);
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::linmap(&mut g, &b, &t).to_sparse();
        let q = rnd::seq(&mut g, SeqVariant::Unit, &s, &t, degree);
        o = o.and(|| Ok(same_map(&ex::seq_to_kleisli(&ex::kleisli_to_seq(&f)?), &f)))?;
        o = o.and(|| Ok(seq_eq(&ex::kleisli_to_seq(&ex::seq_to_kleisli(&q))?, &q)))?;
    }
    Ok(o)
}

/// `seq(g) ∘ seq(f)` by divisor composition equals `seq(g ∘ !f ∘ δ)`.
pub fn kleisli_matches_comonad(seed: u64, instances: usize, d: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("kleisli.comonad_composition/{d}"));
    let s = base(d);
    let dl = ex::comultiplication(&s, degree)?;
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::seq(&mut g, SeqVariant::Unit, &s, &s, degree);
        let h = rnd::seq(&mut g, SeqVariant::Unit, &s, &base(1), degree);
        let lhs = ex::kleisli_compose(&h, &f)?;
        let composite = ex::seq_to_kleisli(&h).compose(&ex::bang_map_after(&ex::seq_to_kleisli(&f), &dl)?)?;
        o = o.and(|| Ok(seq_eq(&lhs, &ex::kleisli_to_seq(&composite)?)))?;
    }
    Ok(o)
}

fn scalar_seq(variant: SeqVariant, coeffs: &[Scalar]) -> MonomialSeq {
    let lo = variant.lowest_degree();
    let k = base(1);
    let ms = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| Monomial::new(k.clone(), k.clone(), lo + i, Matrix::from_rows(vec![vec![c.clone()]]).unwrap()).unwrap())
        .collect();
    MonomialSeq::new(variant, k.clone(), k, coeffs.len() + lo - 1, ms).expect("shape")
}

fn scalar_coeffs(seq: &MonomialSeq) -> Vec<Scalar> {
    seq.monomials().iter().map(|m| m.coeffs().get(0, 0).clone()).collect()
}

/// `(g∘f)₄ = b₁a₄ + b₂a₂² + b₄a₁⁴` for scalar sequences.
pub fn kleisli_scalar_witness(seed: u64, instances: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, "kleisli.scalar_witness");
    for _ in 0..instances {
        let a = rnd::vector(&mut g, 5);
        let b = rnd::vector(&mut g, 5);
        let h = ex::kleisli_compose(&scalar_seq(SeqVariant::Unit, &b), &scalar_seq(SeqVariant::Unit, &a))?;
        let expect = &b[1] * &a[4] + &b[2] * &a[2].pow(2) + &b[4] * &a[1].pow(4);
        let got = scalar_coeffs(&h)[4].clone();
        if got != expect {
            return Ok(Outcome::Fail(format!("a={a:?} b={b:?}: {got} vs {expect}")));
        }
    }
    Ok(Outcome::Pass)
}

/// `f ∘ der = f` and `der ∘ f = f`.
pub fn kleisli_identity(seed: u64, instances: usize, d: usize, degree: usize, left: bool) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let mut g = rnd::rng(seed, &format!("kleisli.identity/{d}/{left}"));
    let s = base(d);
    let der = MonomialSeq::dereliction(SeqVariant::Unit, &s, degree)?;
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::seq(&mut g, SeqVariant::Unit, &s, &s, degree);
        let c = if left { ex::kleisli_compose(&der, &f)? } else { ex::kleisli_compose(&f, &der)? };
        o = o.and(|| Ok(seq_eq(&c, &f)))?;
    }
    Ok(o)
}

pub fn kleisli_associativity(seed: u64, instances: usize, d: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("kleisli.associativity/{d}"));
    let s = base(d);
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::seq(&mut g, SeqVariant::Unit, &s, &s, degree);
        let h = rnd::seq(&mut g, SeqVariant::Unit, &s, &s, degree);
        let k = rnd::seq(&mut g, SeqVariant::Unit, &s, &s, degree);
        let lhs = ex::kleisli_compose(&ex::kleisli_compose(&k, &h)?, &f)?;
        let rhs = ex::kleisli_compose(&k, &ex::kleisli_compose(&h, &f)?)?;
        o = o.and(|| Ok(seq_eq(&lhs, &rhs)))?;
    }
    Ok(o)
}

/// Coefficients of `g(f(x))` truncated at degree `D`, for power series
/// without constant term given by `a[n-1]`, `b[n-1]` = coefficient of `xⁿ`.
pub fn power_series_substitution(b: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
    let dmax = a.len();
    let mut out = vec![Scalar::zero(); dmax + 1];
    let mut power = vec![Scalar::zero(); dmax + 1];
    power[0] = Scalar::one();
    for bn in b {
        let mut next = vec![Scalar::zero(); dmax + 1];
        for (i, p) in power.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            for (j, aj) in a.iter().enumerate() {
                if i + j < dmax {
                    next[i + j + 1] += p * aj;
                }
            }
        }
        power = next;
        for (o, p) in out.iter_mut().zip(&power) {
            *o += bn * p;
        }
    }
    out[1..].to_vec()
}

/// Divisor composition differs from pointwise composition on
/// `f = (0, x, x²)`, `g = (0, 0, x²)`, while non-unit composition agrees.
pub fn semantics_distinctness() -> Result<Outcome> {
    let z = Scalar::zero;
    let one = Scalar::one;
    let f = scalar_seq(SeqVariant::Unit, &[z(), one(), one(), z(), z()]);
    let h = scalar_seq(SeqVariant::Unit, &[z(), z(), one(), z(), z()]);
    let divisor = scalar_coeffs(&ex::kleisli_compose(&h, &f)?);
    let pointwise = power_series_substitution(&[z(), one(), z(), z()], &[one(), one(), z(), z()]);
    // pointwise g(f(x)) = x² + 2x³ + x⁴
    if pointwise != vec![z(), one(), Scalar::from_int(2), one()] {
        return Ok(Outcome::Fail(format!("oracle produced {pointwise:?}")));
    }
    if divisor[1..] == pointwise[..] || !divisor[3].is_zero() {
        return Ok(Outcome::Fail(format!("divisor composite {divisor:?} should lack the x³ term")));
    }
    let f1 = scalar_seq(SeqVariant::NonUnit, &[one(), one(), z(), z()]);
    let h1 = scalar_seq(SeqVariant::NonUnit, &[z(), one(), z(), z()]);
    let sub = nu::substitute_compose(&h1, &f1)?;
    if scalar_coeffs(&sub) != pointwise {
        return Ok(Outcome::Fail(format!("non-unit composite {:?}", scalar_coeffs(&sub))));
    }
    for x in [Scalar::from_int(2), Scalar::ratio(-1, 3)?, Scalar::from_int(5)] {
        let direct = h1.eval(&f1.eval(std::slice::from_ref(&x))?)?;
        if sub.eval(std::slice::from_ref(&x))? != direct {
            return Ok(Outcome::Fail(format!("non-unit composite differs from g(f(x)) at x={x}")));
        }
    }
    Ok(Outcome::Pass)
}

// ---------------------------------------------------------------- seely

pub fn seely_invertible(a: usize, b: usize, degree: usize) -> Result<Outcome> {
    let (s, t) = (base(a), base(b));
    let se = ex::seely_iso(&s, &t, degree)?;
    let inv = ex::seely_inverse(&s, &t, degree)?;
    let o = is_identity(&inv.compose(&se)?);
    o.and(|| Ok(same_map(&se.compose(&inv)?, &ex::filter_projection(se.cod(), degree))))
}

pub fn seely_natural(seed: u64, instances: usize, a: usize, b: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("seely.natural/{a}/{b}"));
    let (s, t) = (base(a), base(b));
    let se = ex::seely_iso(&s, &t, degree)?;
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::linmap(&mut g, &s, &s);
        let h = rnd::linmap(&mut g, &t, &t);
        let lhs = se.compose(&ex::bang_map(&mall::prod_map(&f, &h).to_sparse(), degree))?;
        let rhs = ex::bang_map(&f.to_sparse(), degree).tensor(&ex::bang_map(&h.to_sparse(), degree)).compose(&se)?;
        o = o.and(|| Ok(same_map(&lhs, &rhs)))?;
    }
    Ok(o)
}

/// `Δ = seely ∘ !⟨id, id⟩`.
pub fn seely_contraction(d: usize, degree: usize) -> Result<Outcome> {
    let s = base(d);
    let id = LinMap::identity(s.clone());
    let diag = mall::pair(&id, &id)?.to_sparse();
    let lhs = ex::seely_iso(&s, &s, degree)?.compose(&ex::bang_map(&diag, degree))?;
    Ok(same_map(&lhs, &ex::contraction(&s, degree)?))
}

/// `uncurry ∘ curry = id` on sequences `!(S×T) → 𝕂`, and `curry ∘ uncurry = id`
/// on sequences supported on `n + m ≤ D`.
pub fn curry_seq_roundtrip(seed: u64, instances: usize, a: usize, b: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("seely.curry_roundtrip/{a}/{b}"));
    let (s, t, u) = (base(a), base(b), base(1));
    let prod = SpaceExpr::prod(s.clone(), t.clone());
    let bt = ex::bang_space(&t, degree);
    let hom = SpaceExpr::hom(bt.clone(), u.clone());
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let h = rnd::seq(&mut g, SeqVariant::Unit, &prod, &u, degree);
        o = o.and(|| Ok(seq_eq(&ex::uncurry_seq(&ex::curry_seq(&h)?, &t)?, &h)))?;
        let raw = rnd::seq(&mut g, SeqVariant::Unit, &s, &hom, degree);
        let mut k = MonomialSeq::zero(SeqVariant::Unit, s.clone(), hom.clone(), degree);
        for m in raw.monomials() {
            let n = m.degree();
            let c = m.coeffs();
            let coeffs = Matrix::from_fn(c.rows(), c.cols(), |r, j| {
                let grade = bt.bang_grade_of(r / u.dim()).expect("in range").0;
                if n + grade <= degree { c.get(r, j).clone() } else { Scalar::zero() }
            });
            k.set(Monomial::new(s.clone(), hom.clone(), n, coeffs)?)?;
        }
        o = o.and(|| Ok(seq_eq(&ex::curry_seq(&ex::uncurry_seq(&k, &t)?)?, &k)))?;
    }
    Ok(o)
}

// ---------------------------------------------------------------- monoidal

/// `ε ∘ μ = ε ⊗ ε`.
pub fn mu_counit(a: usize, b: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let (s, t) = (base(a), base(b));
    let st = SpaceExpr::tensor(s.clone(), t.clone());
    let lhs = ex::counit(&st, degree)?.compose(&ex::monoidal_mu(&s, &t, degree)?)?;
    let rhs = ex::counit(&s, degree)?.tensor(&ex::counit(&t, degree)?);
    Ok(same_map(&lhs, &rhs))
}

/// `δ ∘ μ = !μ ∘ μ ∘ (δ ⊗ δ)`.
pub fn mu_comultiplication(a: usize, b: usize, degree: usize) -> Result<Outcome> {
    let (s, t) = (base(a), base(b));
    let st = SpaceExpr::tensor(s.clone(), t.clone());
    let mu = ex::monoidal_mu(&s, &t, degree)?;
    let lhs = ex::comultiplication(&st, degree)?.compose(&mu)?;
    let (bs, bt) = (ex::bang_space(&s, degree), ex::bang_space(&t, degree));
    let inner = ex::monoidal_mu(&bs, &bt, degree)?
        .compose(&ex::comultiplication(&s, degree)?.tensor(&ex::comultiplication(&t, degree)?))?;
    Ok(same_map(&lhs, &ex::bang_map_after(&mu, &inner)?))
}

/// `μ ∘ (!f ⊗ !g) = !(f ⊗ g) ∘ μ`.
pub fn mu_natural(seed: u64, instances: usize, a: usize, b: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("monoidal.mu_natural/{a}/{b}"));
    let (s, t) = (base(a), base(b));
    let mu = ex::monoidal_mu(&s, &t, degree)?;
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::linmap(&mut g, &s, &s);
        let h = rnd::linmap(&mut g, &t, &t);
        let lhs = mu.compose(&ex::bang_map(&f.to_sparse(), degree).tensor(&ex::bang_map(&h.to_sparse(), degree)))?;
        let rhs = ex::bang_map(&mall::tensor_map(&f, &h).to_sparse(), degree).compose(&mu)?;
        o = o.and(|| Ok(same_map(&lhs, &rhs)))?;
    }
    Ok(o)
}

/// `μ ∘ (μ₀ ⊗ id) = λ` up to `!(𝕂 ⊗ S) ≅ !S`.
pub fn mu_unit(d: usize, degree: usize) -> Result<Outcome> {
    let s = base(d);
    let k = SpaceExpr::unit();
    let bs = ex::bang_space(&s, degree);
    let mu = ex::monoidal_mu(&k, &s, degree)?;
    let lhs = mu.compose(&ex::mu0(degree).tensor(&SparseMap::identity(bs.clone())))?;
    let lhs = mall::sparse::relabel(lhs.cod().clone(), bs.clone()).compose(&lhs)?;
    Ok(same_map(&lhs, &mall::left_unitor(&bs).to_sparse()))
}

// ---------------------------------------------------------------- differential

/// `μ ∘ (coder ⊗ id) = coder ∘ (id ⊗ ε)` on `S ⊗ !T`.
pub fn strength(d: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let (s, t) = (base(d), base(d));
    let st = SpaceExpr::tensor(s.clone(), t.clone());
    let bt = ex::bang_space(&t, degree);
    let lhs = ex::monoidal_mu(&s, &t, degree)?.compose(&ex::coder(&s, degree)?.tensor(&SparseMap::identity(bt)))?;
    let rhs = ex::coder(&st, degree)?.compose(&SparseMap::identity(s.clone()).tensor(&ex::counit(&t, degree)?))?;
    Ok(same_map(&lhs, &rhs))
}

pub fn counit_coder(d: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let s = base(d);
    Ok(is_identity(&ex::counit(&s, degree)?.compose(&ex::coder(&s, degree)?)?))
}

/// `δ ∘ coder = ∇_{!S} ∘ (coder_{!S} ⊗ δ) ∘ (coder ⊗ ν) ∘ ρ⁻¹`.
pub fn comultiplication_coder(d: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let s = base(d);
    let b = ex::bang_space(&s, degree);
    let dl = ex::comultiplication(&s, degree)?;
    let lhs = dl.compose(&ex::coder(&s, degree)?)?;
    let rhs = ex::cocontraction(&b, degree)?
        .compose(&ex::coder(&b, degree)?.tensor(&dl))?
        .compose(&ex::coder(&s, degree)?.tensor(&ex::coweakening(&s, degree)))?
        .compose(&mall::right_unitor_inverse(&s).to_sparse())?;
    Ok(same_map(&lhs, &rhs))
}

struct Bialgebra {
    b: SpaceExpr,
    delta: SparseMap,
    e: SparseMap,
    nabla: SparseMap,
    nu: SparseMap,
    id: SparseMap,
}

fn bialgebra(d: usize, degree: usize) -> Result<Bialgebra> {
    let s = base(d);
    let b = ex::bang_space(&s, degree);
    Ok(Bialgebra {
        delta: ex::contraction(&s, degree)?,
        e: ex::weakening(&s, degree),
        nabla: ex::cocontraction(&s, degree)?,
        nu: ex::coweakening(&s, degree),
        id: SparseMap::identity(b.clone()),
        b,
    })
}

/// Coassociativity, cocommutativity and counit laws of `(Δ, e)`.
pub fn contraction_laws(d: usize, degree: usize) -> Result<Outcome> {
    let x = bialgebra(d, degree)?;
    let b = &x.b;
    let lhs = x.delta.tensor(&x.id).compose(&x.delta)?;
    let rhs = mall::associator_inverse(b, b, b).to_sparse().compose(&x.id.tensor(&x.delta))?.compose(&x.delta)?;
    let o = same_map(&lhs, &rhs);
    let o = o.and(|| Ok(same_map(&mall::sparse::symmetry(b, b).compose(&x.delta)?, &x.delta)))?;
    let o = o.and(|| Ok(is_identity(&mall::left_unitor(b).to_sparse().compose(&x.e.tensor(&x.id))?.compose(&x.delta)?)))?;
    o.and(|| Ok(is_identity(&mall::right_unitor(b).to_sparse().compose(&x.id.tensor(&x.e))?.compose(&x.delta)?)))
}

/// Associativity, commutativity and unit laws of `(∇, ν)`, and agreement with
/// the closed form.
pub fn cocontraction_laws(d: usize, degree: usize) -> Result<Outcome> {
    let x = bialgebra(d, degree)?;
    let b = &x.b;
    let lhs = x.nabla.compose(&x.nabla.tensor(&x.id))?;
    let rhs = x.nabla.compose(&x.id.tensor(&x.nabla))?.compose(&mall::associator(b, b, b).to_sparse())?;
    let o = same_map(&lhs, &rhs);
    let o = o.and(|| Ok(same_map(&x.nabla.compose(&mall::sparse::symmetry(b, b))?, &x.nabla)))?;
    let o = o.and(|| Ok(same_map(&x.nabla.compose(&x.nu.tensor(&x.id))?, &mall::left_unitor(b).to_sparse())))?;
    o.and(|| Ok(same_map(&x.nabla, &ex::cocontraction_closed_form(&base(d), degree))))
}

/// `Δ ∘ ∇ = (∇ ⊗ ∇) ∘ (id ⊗ σ ⊗ id) ∘ (Δ ⊗ Δ)` on total degree `≤ D`, plus
/// `e ∘ ν = id`, `e ∘ ∇ = e ⊗ e`, `Δ ∘ ν = ν ⊗ ν`.
pub fn bialgebra_compatibility(d: usize, degree: usize) -> Result<Outcome> {
    let x = bialgebra(d, degree)?;
    let b = &x.b;
    let k = SpaceExpr::unit();
    let lhs = x.delta.compose(&x.nabla)?;
    let rhs = x
        .nabla
        .tensor(&x.nabla)
        .compose(&mall::sparse::middle_swap(b, b, b, b))?
        .compose(&x.delta.tensor(&x.delta))?;
    let mask = ex::filtered_mask(lhs.dom(), degree);
    let o = same_map_where(&lhs, &rhs, |j| mask[j]);
    let o = o.and(|| Ok(is_identity(&x.e.compose(&x.nu)?)))?;
    let kk = mall::tensor_space(&k, &k);
    let o = o.and(|| {
        let ee = mall::sparse::relabel(kk.clone(), k.clone()).compose(&x.e.tensor(&x.e))?;
        Ok(same_map(&x.e.compose(&x.nabla)?, &ee))
    })?;
    o.and(|| {
        let nn = x.nu.tensor(&x.nu).compose(&mall::sparse::relabel(k.clone(), kk.clone()))?;
        Ok(same_map(&x.delta.compose(&x.nu)?, &nn))
    })
}

// ---------------------------------------------------------------- nonunit

/// `substitute_compose` agrees with truncated power-series substitution.
pub fn substitution_oracle(seed: u64, instances: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let mut g = rnd::rng(seed, "nonunit.substitution_oracle");
    for i in 0..instances {
        let a = rnd::vector(&mut g, degree);
        let b = rnd::vector(&mut g, degree);
        let got = scalar_coeffs(&nu::substitute_compose(&scalar_seq(SeqVariant::NonUnit, &b), &scalar_seq(SeqVariant::NonUnit, &a))?);
        let expect = power_series_substitution(&b, &a);
        if got != expect {
            return Ok(Outcome::Fail(format!("instance {i}: {got:?} vs {expect:?}")));
        }
    }
    Ok(Outcome::Pass)
}

pub fn nonunit_comonad(d: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let s = base(d);
    let b = nu::nonunit_bang_space(&s, degree);
    let dl = nu::nonunit_comultiplication(&s, degree)?;
    let o = is_identity(&nu::nonunit_counit(&b, degree)?.compose(&dl)?);
    let o = o.and(|| Ok(is_identity(&ex::bang_map_after(&nu::nonunit_counit(&s, degree)?, &dl)?)))?;
    o.and(|| {
        let dl2 = nu::nonunit_comultiplication(&b, degree)?;
        Ok(same_map(&dl2.compose(&dl)?, &ex::bang_map_after(&dl, &dl)?))
    })
}

/// Co-Kleisli composition through `δ₁` equals `substitute_compose`.
pub fn nonunit_kleisli(seed: u64, instances: usize, d: usize, degree: usize) -> Result<Outcome> {
    if let Some(o) = skip_below(degree, 1) {
        return Ok(o);
    }
    let mut g = rnd::rng(seed, &format!("nonunit.kleisli/{d}"));
    let s = base(d);
    let dl = nu::nonunit_comultiplication(&s, degree)?;
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::seq(&mut g, SeqVariant::NonUnit, &s, &s, degree);
        let h = rnd::seq(&mut g, SeqVariant::NonUnit, &s, &base(1), degree);
        let composite = ex::seq_to_kleisli(&h).compose(&ex::bang_map_after(&ex::seq_to_kleisli(&f), &dl)?)?;
        o = o.and(|| Ok(seq_eq(&nu::substitute_compose(&h, &f)?, &ex::kleisli_to_seq(&composite)?)))?;
    }
    Ok(o)
}

pub fn nonunit_seely_natural(seed: u64, instances: usize, a: usize, b: usize, degree: usize) -> Result<Outcome> {
    let mut g = rnd::rng(seed, &format!("nonunit.seely_natural/{a}/{b}"));
    let (s, t) = (base(a), base(b));
    let se = nu::nonunit_seely(&s, &t, degree)?;
    let mut o = Outcome::Pass;
    for _ in 0..instances {
        let f = rnd::linmap(&mut g, &s, &s);
        let h = rnd::linmap(&mut g, &t, &t);
        let lhs = se.compose(&nu::nonunit_bang_map(&mall::prod_map(&f, &h).to_sparse(), degree))?;
        let rhs = nu::nonunit_bang_map(&f.to_sparse(), degree)
            .tensor(&nu::nonunit_bang_map(&h.to_sparse(), degree))
            .compose(&se)?;
        o = o.and(|| Ok(same_map(&lhs, &rhs)))?;
    }
    Ok(o)
}

/// The non-unit Seely map is an isomorphism (it is not: the pure grades have
/// nowhere to go).
pub fn nonunit_seely_invertible(a: usize, b: usize, degree: usize) -> Result<Outcome> {
    let se = nu::nonunit_seely(&base(a), &base(b), degree)?;
    let (n, m) = (se.dom().dim(), se.cod().dim());
    let rank = se.matrix().to_dense().rank();
    Ok(check(rank == n && n == m, || format!("rank {rank}, domain dimension {n}, codomain dimension {m}")))
}

// ---------------------------------------------------------------- suite

fn pairs(dims: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (i, &a) in dims.iter().enumerate() {
        for &b in &dims[i..] {
            out.push((a, b));
        }
    }
    out
}

/// All laws of the core families for the given configuration.
pub fn core_laws(cfg: &SuiteConfig) -> Vec<Law> {
    let seed = cfg.seed;
    let deg = cfg.degree;
    let mut laws = Vec::new();
    let p = |dims: Vec<usize>, degree: Option<usize>, instances: Option<usize>| Parameters { dims, degree, seed, instances };

    laws.push(Law::new("linalg", "kernel_iff_span", p(vec![4], None, Some(200)), move || kernel_iff_span(seed, 200, 4)));
    laws.push(Law::new("linalg", "membership_recombines", p(vec![4], None, Some(50)), move || membership_recombines(seed, 50)));
    laws.push(Law::new("linalg", "field_axioms", p(vec![], None, Some(200)), move || field_axioms(seed, 200)));

    laws.push(Law::new("mall", "double_dual", p(vec![16], None, Some(50)), move || double_dual(seed, 50, 16)));
    laws.push(Law::new("mall", "star_autonomy", p(vec![16], None, Some(50)), move || star_autonomy(seed, 50, 16)));
    laws.push(Law::new("mall", "curry_roundtrip", p(vec![3, 3, 3], None, Some(30)), move || curry_roundtrip(seed, 30, 3)));
    laws.push(Law::new("mall", "hom_dual_decompose", p(vec![3, 3], None, Some(30)), move || hom_dual_decomposition(seed, 30, 3)));
    laws.push(Law::new("mall", "coherence", p(vec![2, 2, 2, 2], None, None), || monoidal_coherence([2, 2, 2, 2])));
    laws.push(Law::new("mall", "coherence_mixed", p(vec![1, 2, 3, 2], None, None), || monoidal_coherence([1, 2, 3, 2])));
    laws.push(Law::new("mall", "tensor_functorial", p(vec![2, 2], None, Some(20)), move || tensor_functorial(seed, 20)));
    laws.push(Law::new("mall", "duality", p(vec![3, 3], None, Some(20)), move || duality(seed, 20)));
    laws.push(Law::new("mall", "par_natural", p(vec![3, 3], None, Some(20)), move || par_natural(seed, 20)));

    let mdeg = deg.min(4);
    for &d in &cfg.dims {
        laws.push(Law::new("monomials", "polarize_eval", p(vec![d], Some(mdeg), Some(50)), move || polarize_eval(seed, 50, d, mdeg)));
        laws.push(Law::new("monomials", "linearize_embed", p(vec![d], Some(mdeg), Some(10)), move || linearize_embed(seed, 10, d, mdeg)));
        laws.push(Law::new("monomials", "compose_pointwise", p(vec![d], Some(2), Some(10)), move || compose_pointwise(seed, 10, d)));
        laws.push(Law::new("monomials", "homogeneity", p(vec![d], Some(mdeg), Some(30)), move || homogeneity(seed, 30, d, mdeg)));
    }

    for &d in &cfg.dims {
        let pd = p(vec![d], Some(deg), None);
        laws.push(Law::new("comonad", "counit_left", pd.clone(), move || comonad_counit_left(d, deg)));
        laws.push(Law::new("comonad", "counit_right", pd.clone(), move || comonad_counit_right(d, deg)));
        laws.push(Law::new("comonad", "coassociativity", pd.clone(), move || comonad_coassociativity(d, deg)));
        laws.push(Law::new("comonad", "functorial", p(vec![d], Some(deg), Some(5)), move || {
            bang_functorial(seed, 5, d, deg, SeqVariant::Unit)
        }));
        laws.push(Law::new("comonad", "delta_natural", p(vec![d], Some(deg), Some(3)), move || delta_natural(seed, 3, d, deg)));
        laws.push(Law::new("comonad", "bang_pairing", p(vec![d], Some(deg), Some(5)), move || bang_pairing(seed, 5, d, deg)));
    }

    for &d in &cfg.dims {
        laws.push(Law::new("kleisli", "roundtrip", p(vec![d], Some(deg), Some(20)), move || kleisli_roundtrip(seed, 20, d, deg)));
        laws.push(Law::new("kleisli", "comonad_composition", p(vec![d], Some(deg), Some(20)), move || {
            kleisli_matches_comonad(seed, 20, d, deg)
        }));
        laws.push(Law::new("kleisli", "right_identity", p(vec![d], Some(deg), Some(10)), move || {
            kleisli_identity(seed, 10, d, deg, false)
        }));
        laws.push(Law::new("kleisli", "left_identity", p(vec![d], Some(deg), Some(10)), move || {
            kleisli_identity(seed, 10, d, deg, true)
        }));
        laws.push(Law::new("kleisli", "associativity", p(vec![d], Some(deg), Some(10)), move || {
            kleisli_associativity(seed, 10, d, deg)
        }));
    }
    laws.push(Law::new("kleisli", "scalar_witness", p(vec![1], Some(4), Some(20)), move || kleisli_scalar_witness(seed, 20)));
    laws.push(Law::new("kleisli", "not_pointwise", p(vec![1], Some(4), None), semantics_distinctness));

    for (a, b) in pairs(&cfg.dims) {
        let pab = p(vec![a, b], Some(deg), None);
        laws.push(Law::new("seely", "invertible", pab.clone(), move || seely_invertible(a, b, deg)));
        laws.push(Law::new("seely", "natural", p(vec![a, b], Some(deg), Some(3)), move || seely_natural(seed, 3, a, b, deg)));
        laws.push(Law::new("seely", "curry_roundtrip", p(vec![a, b], Some(deg), Some(5)), move || {
            curry_seq_roundtrip(seed, 5, a, b, deg)
        }));
        laws.push(Law::new("monoidal", "mu_counit", pab.clone(), move || mu_counit(a, b, deg)));
        laws.push(Law::new("monoidal", "mu_comultiplication", pab.clone(), move || mu_comultiplication(a, b, deg)));
        laws.push(Law::new("monoidal", "mu_natural", p(vec![a, b], Some(deg), Some(3)), move || mu_natural(seed, 3, a, b, deg)));
        laws.push(Law::new("nonunit", "seely_natural", p(vec![a, b], Some(deg), Some(3)), move || {
            nonunit_seely_natural(seed, 3, a, b, deg)
        }));
        laws.push(Law::new("nonunit", "seely_invertible", pab, move || nonunit_seely_invertible(a, b, deg)));
    }
    for &d in &cfg.dims {
        laws.push(Law::new("seely", "contraction", p(vec![d], Some(deg), None), move || seely_contraction(d, deg)));
        laws.push(Law::new("monoidal", "mu_unit", p(vec![d], Some(deg), None), move || mu_unit(d, deg)));
    }

    for &d in &cfg.dims {
        let pd = p(vec![d], Some(deg), None);
        laws.push(Law::new("differential", "strength", p(vec![d, d], Some(deg), None), move || strength(d, deg)));
        laws.push(Law::new("differential", "counit_coder", pd.clone(), move || counit_coder(d, deg)));
        laws.push(Law::new("differential", "comultiplication_coder", pd.clone(), move || comultiplication_coder(d, deg)));
        laws.push(Law::new("differential", "contraction", pd.clone(), move || contraction_laws(d, deg)));
        laws.push(Law::new("differential", "cocontraction", pd.clone(), move || cocontraction_laws(d, deg)));
        laws.push(Law::new("differential", "bialgebra", pd, move || bialgebra_compatibility(d, deg)));
    }

    laws.push(Law::new("nonunit", "substitution_oracle", p(vec![1], Some(deg), Some(100)), move || {
        substitution_oracle(seed, 100, deg)
    }));
    for &d in &cfg.dims {
        laws.push(Law::new("nonunit", "comonad", p(vec![d], Some(deg), None), move || nonunit_comonad(d, deg)));
        laws.push(Law::new("nonunit", "kleisli_substitution", p(vec![d], Some(deg), Some(5)), move || {
            nonunit_kleisli(seed, 5, d, deg)
        }));
        laws.push(Law::new("nonunit", "functorial", p(vec![d], Some(deg), Some(5)), move || {
            bang_functorial(seed, 5, d, deg, SeqVariant::NonUnit)
        }));
    }

    laws.retain(|l| selected(cfg.filter.as_deref(), l));
    laws
}

//! Quivers, the Kac–Moody root system of their underlying graph, the
//! Crawley-Boevey criteria, and slice quivers with their restricted parameters.

mod presets;
mod slice;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parameters::ExactScalar;
use crate::rational::{int, rat, Rational};

pub use presets::{
    cherednik_decompositions, cherednik_frame, cherednik_quantum_parameter, cherednik_slice, cyclic_quiver,
    grassmann_decomposition, grassmann_slice, one_vertex_quiver, CherednikFrame,
};
pub use slice::{rho, slice, Decomposition, SliceQuiver};

/// Dimension vectors, indexed by vertex position.
pub type DimVector = Vec<i64>;

/// Largest number of sub-vectors an exhaustive decomposition search may visit.
pub const SEARCH_LIMIT: u128 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub t: String,
    pub h: String,
    pub mult: u32,
}

/// A finite quiver; loops and multiple arrows are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverData {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

/// Kac's classification of a nonnegative vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RootKind {
    Real,
    Imaginary,
    NotARoot,
}

impl RootKind {
    pub fn is_root(self) -> bool {
        self != RootKind::NotARoot
    }
}

impl QuiverData {
    /// A quiver on vertices `0..n` from `(tail, head, multiplicity)` triples.
    pub fn from_indices(n: usize, arrows: &[(usize, usize, u32)]) -> Self {
        Self {
            vertices: (0..n).map(|k| k.to_string()).collect(),
            arrows: arrows.iter().map(|&(t, h, mult)| Arrow { t: t.to_string(), h: h.to_string(), mult }).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == label).ok_or_else(|| Error::Parse(format!("unknown vertex {label:?}")))
    }

    /// Arrows as `(tail, head, multiplicity)` positions.
    pub fn indexed_arrows(&self) -> Result<Vec<(usize, usize, u32)>> {
        self.arrows.iter().map(|a| Ok((self.index(&a.t)?, self.index(&a.h)?, a.mult))).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = HashMap::new();
        for v in &self.vertices {
            if seen.insert(v.as_str(), ()).is_some() {
                return Err(Error::Parse(format!("duplicate vertex {v:?}")));
            }
        }
        self.indexed_arrows().map(|_| ())
    }

    /// Number of loops at vertex `k`.
    pub fn loops(&self, k: usize) -> u32 {
        self.indexed_arrows()
            .expect("validated quiver")
            .iter()
            .filter(|&&(t, h, _)| t == k && h == k)
            .map(|&(_, _, m)| m)
            .sum()
    }

    /// The framed quiver `Q^w`: a new vertex `∞` with `w_k` arrows `∞ → k`.
    pub fn framed(&self, w: &[i64]) -> Result<Self> {
        check_len(self, w)?;
        let mut out = self.clone();
        out.vertices.push("∞".to_string());
        for (k, &wk) in w.iter().enumerate() {
            if wk < 0 {
                return Err(Error::Parse("framing must be nonnegative".into()));
            }
            if wk > 0 {
                out.arrows.push(Arrow { t: "∞".into(), h: self.vertices[k].clone(), mult: wk as u32 });
            }
        }
        Ok(out)
    }
}

fn check_len(q: &QuiverData, v: &[i64]) -> Result<()> {
    if v.len() != q.len() {
        return Err(Error::LengthMismatch { expected: q.len(), got: v.len() });
    }
    Ok(())
}

/// The symmetrized Tits form
/// `(v¹, v²) = 2Σ_k v¹_k v²_k − Σ_a (v¹_{t(a)} v²_{h(a)} + v¹_{h(a)} v²_{t(a)})`.
pub fn tits_form(q: &QuiverData, v1: &[i64], v2: &[i64]) -> Result<i64> {
    check_len(q, v1)?;
    check_len(q, v2)?;
    let mut total: i64 = 2 * v1.iter().zip(v2).map(|(a, b)| a * b).sum::<i64>();
    for (t, h, mult) in q.indexed_arrows()? {
        total -= mult as i64 * (v1[t] * v2[h] + v1[h] * v2[t]);
    }
    Ok(total)
}

/// `p(v) = 1 − ½(v, v)`.
pub fn p_of(q: &QuiverData, v: &[i64]) -> Result<i64> {
    Ok(1 - tits_form(q, v, v)? / 2)
}

fn unit(n: usize, k: usize) -> DimVector {
    let mut e = vec![0; n];
    e[k] = 1;
    e
}

fn support_connected(q: &QuiverData, v: &[i64]) -> Result<bool> {
    let support: Vec<usize> = (0..v.len()).filter(|&k| v[k] != 0).collect();
    let Some(&start) = support.first() else { return Ok(false) };
    let arrows = q.indexed_arrows()?;
    let mut reached = vec![false; v.len()];
    reached[start] = true;
    let mut stack = vec![start];
    while let Some(k) = stack.pop() {
        for &(t, h, _) in &arrows {
            for (a, b) in [(t, h), (h, t)] {
                if a == k && v[b] != 0 && !reached[b] {
                    reached[b] = true;
                    stack.push(b);
                }
            }
        }
    }
    Ok(support.iter().all(|&k| reached[k]))
}

/// Kac's reflection algorithm: reflect at loop-free vertices with `(v, ε_k) > 0`
/// until reaching a simple root (real), a vector in the fundamental set
/// (imaginary), or a vector with a negative entry or disconnected support.
pub fn classify_root(q: &QuiverData, v: &[i64]) -> Result<RootKind> {
    check_len(q, v)?;
    if v.iter().any(|&x| x < 0) || v.iter().all(|&x| x == 0) {
        return Ok(RootKind::NotARoot);
    }
    let n = q.len();
    let units: Vec<DimVector> = (0..n).map(|k| unit(n, k)).collect();
    let mut current = v.to_vec();
    loop {
        if current.iter().any(|&x| x < 0) {
            return Ok(RootKind::NotARoot);
        }
        if !support_connected(q, &current)? {
            return Ok(RootKind::NotARoot);
        }
        let support: Vec<usize> = (0..n).filter(|&k| current[k] != 0).collect();
        if support.len() == 1 && current[support[0]] == 1 && q.loops(support[0]) == 0 {
            return Ok(RootKind::Real);
        }
        let mut reflected = false;
        for k in 0..n {
            if q.loops(k) > 0 {
                continue;
            }
            let pairing = tits_form(q, &current, &units[k])?;
            if pairing > 0 {
                current[k] -= pairing;
                reflected = true;
                break;
            }
        }
        if !reflected {
            return Ok(RootKind::Imaginary);
        }
    }
}

/// `λ·v` for an exact parameter and an integer vector.
pub fn pair(lambda: &[ExactScalar], v: &[i64]) -> Result<ExactScalar> {
    if lambda.len() != v.len() {
        return Err(Error::LengthMismatch { expected: v.len(), got: lambda.len() });
    }
    lambda.iter().zip(v).try_fold(ExactScalar::zero(), |acc, (l, &x)| acc.try_add(&l.scale(&int(x))))
}

/// All vectors `0 ≤ u ≤ v` in mixed-radix order (index 0 varies fastest).
fn sub_vectors(v: &[i64]) -> Result<Vec<DimVector>> {
    let count: u128 = v.iter().map(|&x| x as u128 + 1).product();
    if count > SEARCH_LIMIT {
        return Err(Error::ResourceLimit(format!("{count} sub-vectors of {v:?}")));
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut cur = vec![0i64; v.len()];
    loop {
        out.push(cur.clone());
        let mut k = 0;
        loop {
            if k == v.len() {
                return Ok(out);
            }
            if cur[k] < v[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

fn encode(u: &[i64], v: &[i64]) -> usize {
    let mut code = 0usize;
    for k in (0..v.len()).rev() {
        code = code * (v[k] as usize + 1) + u[k] as usize;
    }
    code
}

/// Sub-vectors of `v`, the best value for each, and the admissible parts with their `p`.
type DecompositionTable = (Vec<DimVector>, Vec<Option<i64>>, Vec<(DimVector, i64)>);

/// For every `0 ≤ u ≤ v`: the largest `Σ p(β)` over decompositions of `u` into
/// nonzero parts `β` accepted by `allowed` (`None` when `u` has no such
/// decomposition). The empty decomposition of `0` has value 0.
fn best_decompositions(
    q: &QuiverData,
    v: &[i64],
    allowed: impl Fn(&[i64]) -> Result<bool>,
) -> Result<DecompositionTable> {
    let subs = sub_vectors(v)?;
    let mut parts = Vec::new();
    for u in subs.iter().skip(1) {
        if allowed(u)? {
            parts.push((u.clone(), p_of(q, u)?));
        }
    }
    // Mixed-radix order lists every sub-vector after all of its sub-vectors.
    let mut best: Vec<Option<i64>> = vec![None; subs.len()];
    best[0] = Some(0);
    for u in subs.iter().skip(1) {
        let code = encode(u, v);
        let mut value: Option<i64> = None;
        for (beta, p) in &parts {
            if beta.iter().zip(u.iter()).all(|(b, x)| b <= x) {
                let rest: DimVector = u.iter().zip(beta).map(|(x, b)| x - b).collect();
                if let Some(r) = best[encode(&rest, v)] {
                    value = Some(value.map_or(r + p, |cur: i64| cur.max(r + p)));
                }
            }
        }
        best[code] = value;
    }
    Ok((subs, best, parts))
}

/// Crawley-Boevey: `Π^λ(Q)` has a simple module of dimension `ṽ` iff `ṽ` is a
/// positive root with `λ·ṽ = 0` and `p(ṽ) > Σ p(ṽ_(t))` for every decomposition
/// of `ṽ` into at least two nonzero vectors `ṽ_(t)` with `λ·ṽ_(t) = 0`.
pub fn cb_simple_exists(q: &QuiverData, lambda: &[ExactScalar], vtilde: &[i64]) -> Result<bool> {
    check_len(q, vtilde)?;
    if !classify_root(q, vtilde)?.is_root() || !pair(lambda, vtilde)?.is_zero() {
        return Ok(false);
    }
    let orthogonal = |u: &[i64]| Ok(pair(lambda, u)?.is_zero());
    let (_, best, parts) = best_decompositions(q, vtilde, orthogonal)?;
    let p_total = p_of(q, vtilde)?;
    for (beta, p) in &parts {
        if beta.as_slice() == vtilde {
            continue;
        }
        let rest: DimVector = vtilde.iter().zip(beta).map(|(x, b)| x - b).collect();
        if let Some(r) = best[encode(&rest, vtilde)] {
            if p_total <= p + r {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `λ_∞ = −λ·v`, the framing-vertex coordinate making `(λ, λ_∞)·(v, 1) = 0`.
pub fn lambda_infinity(lambda: &[ExactScalar], v: &[i64]) -> Result<ExactScalar> {
    Ok(-pair(lambda, v)?)
}

/// Crawley-Boevey flatness of `μ: T*R(Q, v, w) → 𝔤`: for every `v = v⁰ + v¹ + … + v^k`
/// with `v¹, …, v^k` roots, `p(v) + w·v − (w·v⁰ + Σ_{i=0}^k p(vⁱ)) ≥ 0`.
pub fn moment_flat(q: &QuiverData, v: &[i64], w: &[i64]) -> Result<bool> {
    check_len(q, v)?;
    check_len(q, w)?;
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let (subs, best, _) = best_decompositions(q, v, |u| Ok(classify_root(q, u)?.is_root()))?;
    let lhs = p_of(q, v)? + dot(w, v);
    for v0 in &subs {
        let rest: DimVector = v.iter().zip(v0).map(|(x, y)| x - y).collect();
        if let Some(r) = best[encode(&rest, v)] {
            if lhs - (dot(w, v0) + p_of(q, v0)? + r) < 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Nakajima genericity: no root `0 < v' ≤ v` with `v'·θ = v'·λ = 0`.
pub fn generic_pair(q: &QuiverData, v: &[i64], lambda: &[ExactScalar], theta: &[i64]) -> Result<bool> {
    check_len(q, v)?;
    check_len(q, theta)?;
    for u in sub_vectors(v)?.iter().skip(1) {
        let theta_dot: i64 = u.iter().zip(theta).map(|(a, b)| a * b).sum();
        if theta_dot == 0 && pair(lambda, u)?.is_zero() && classify_root(q, u)?.is_root() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `½` as a rational, used by the ϱ-shifts.
pub(crate) fn half() -> Rational {
    rat(1, 2)
}

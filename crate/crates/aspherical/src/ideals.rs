//! Chains of two-sided ideals in twisted differential operators on Grassmannians
//! and in the spherical Cherednik algebra `eH_c e` at a Weil-generic aspherical
//! parameter, together with the simples killed by the averaging idempotent `e`.
//!
//! Ideals are described by the slice they come from — the kernel of the map to
//! the finite-dimensional quotient of a slice algebra `D_{λ̂}(Gr(v̂, ŵ))` — and by
//! the dimension of their associated variety.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multipartition::{enumerate_multipartitions, MultiPartition};
use crate::parameters::{is_enumerated, HyperplaneParams};
use crate::quiver::grassmann_slice;
use crate::rational::int;
use crate::supports::closed_form_depth;

/// The algebra whose ideals a chain lists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum AlgebraTag {
    GrassmannRegular { v: u64, w: u64 },
    GrassmannSingular { v: u64, w: u64, lambda: i64 },
    SphericalCherednik { hyperplane: HyperplaneParams, n: u64 },
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraTag::GrassmannRegular { v, w } => write!(f, "D(Gr({v},{w}))"),
            AlgebraTag::GrassmannSingular { v, w, lambda } => write!(f, "D_{lambda}(Gr({v},{w}))"),
            AlgebraTag::SphericalCherednik { hyperplane, n } => {
                write!(f, "eH_c e, G({},1,{n}), {hyperplane}", hyperplane.ell)
            }
        }
    }
}

/// The slice algebra `D_λ(Gr(v, w))` an ideal is induced from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SliceData {
    pub v: i64,
    pub w: i64,
    pub lambda: i64,
}

/// One member of an ideal chain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealDescriptor {
    pub s: u64,
    /// The slice whose finite-dimensional quotient defines the ideal; `None` for
    /// the unit ideal.
    pub slice: Option<SliceData>,
    /// Whether the slice algebra has a nonzero finite-dimensional module. The zero
    /// ideal is present even when it does not.
    pub from_slice: bool,
    /// Dimension of the associated variety of the quotient; `None` for the unit ideal.
    pub leaf_dim: Option<u64>,
}

/// A chain `{0} = I_0 ⊊ I_1 ⊊ ⋯ ⊊ I_p ⊊ I_{p+1}` of all two-sided ideals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealChain {
    pub algebra: AlgebraTag,
    pub ideals: Vec<IdealDescriptor>,
    /// `p` as realized by the chain (its length minus two).
    pub p_grass: u64,
    /// For the Cherednik chain: `max{t, 0}`. For Grassmannians it equals `p_grass`.
    pub p_stated: u64,
}

impl IdealChain {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// The index of the last proper ideal.
    pub fn p(&self) -> u64 {
        self.ideals.len() as u64 - 2
    }
}

/// Whether `H^*(Gr(v, w), O(n)) ≠ 0`: the total cohomology vanishes exactly for
/// `1 − w ≤ n ≤ −1`, independently of `v`.
pub fn cohomology_nonvanishing(_v: u64, w: u64, n: i64) -> bool {
    !(1 - w as i64 <= n && n <= -1)
}

fn grass_p(v: i64, w: i64, lambda: i64) -> i64 {
    v.min((lambda + v).max(v - w - lambda).max(0))
}

/// The chain of `D_λ(Gr(v, w))` without the `w > 2v` check; `w = 2v` occurs as
/// the top slice of a Cherednik chain with `m = 0`.
fn grass_chain_unchecked(v: u64, w: u64, lambda: i64) -> Result<(Vec<IdealDescriptor>, u64)> {
    let (vi, wi) = (v as i64, w as i64);
    let p = grass_p(vi, wi, lambda);
    let mut ideals = Vec::with_capacity(p as usize + 2);
    for s in 0..=p {
        let sq = grassmann_slice(vi, wi, &int(lambda), s)?;
        let lambda_hat = sq.lambda_hat[0]
            .as_rational()
            .and_then(crate::rational::to_i64)
            .ok_or_else(|| Error::ModelViolation(format!("non-integral slice parameter {}", sq.lambda_hat[0])))?;
        let slice = SliceData { v: sq.vhat[0], w: sq.what[0], lambda: lambda_hat };
        ideals.push(IdealDescriptor {
            s: s as u64,
            slice: Some(slice),
            from_slice: cohomology_nonvanishing(slice.v as u64, slice.w as u64, slice.lambda),
            leaf_dim: Some((2 * (vi - s) * (wi - vi + s)) as u64),
        });
    }
    ideals.push(IdealDescriptor { s: p as u64 + 1, slice: None, from_slice: false, leaf_dim: None });
    Ok((ideals, p as u64))
}

/// All two-sided ideals of `D_λ(Gr(v, w))`, `w > 2v`. For regular `λ` the chain
/// has `v + 2` members; for singular `λ ∈ {1 − w, …, −1}` it has `p + 2` with
/// `p = max{λ + v, v − w − λ, 0}`. Member `s ≤ p` is induced from the slice
/// `D_{λ+v−s}(Gr(s, w − 2v + 2s))`.
pub fn grass_chain(v: u64, w: u64, lambda: i64) -> Result<IdealChain> {
    if w <= 2 * v {
        return Err(Error::InvalidGrassmannian { v, w });
    }
    let (ideals, p) = grass_chain_unchecked(v, w, lambda)?;
    let algebra = if cohomology_nonvanishing(v, w, lambda) {
        AlgebraTag::GrassmannRegular { v, w }
    } else {
        AlgebraTag::GrassmannSingular { v, w, lambda }
    };
    Ok(IdealChain { algebra, ideals, p_grass: p, p_stated: p })
}

/// All two-sided ideals of `eH_c e` for `c` Weil generic on an aspherical
/// hyperplane, transported from `D_{t−q}(Gr(q, |m| + 2q))`. Member `s ≤ p` is
/// induced from `D_{t−s}(Gr(s, |m| + 2s))` and its quotient has associated
/// variety of dimension `2(n − s(|m| + s))`.
pub fn cherednik_chain(hp: &HyperplaneParams, n: u64) -> Result<IdealChain> {
    if !is_enumerated(hp, n) {
        return Err(Error::NotAspherical(format!("{hp} at n = {n}")));
    }
    let q = hp.q(n);
    let abs_m = hp.m.unsigned_abs();
    let (mut ideals, p) = grass_chain_unchecked(q, abs_m + 2 * q, hp.t - q as i64)?;
    for ideal in ideals.iter_mut().filter(|d| d.slice.is_some()) {
        ideal.leaf_dim = Some(2 * (n - ideal.s * (abs_m + ideal.s)));
    }
    Ok(IdealChain {
        algebra: AlgebraTag::SphericalCherednik { hyperplane: *hp, n },
        ideals,
        p_grass: p,
        p_stated: hp.t.max(0) as u64,
    })
}

/// `n − (p + 1)(|m| + p + 1)` with `p = max{t, 0}`; negative when nothing is killed.
pub fn annihilation_threshold(hp: &HyperplaneParams, n: u64) -> i64 {
    let p = hp.t.max(0);
    n as i64 - (p + 1) * (hp.m.abs() + p + 1)
}

/// The ℓ-partitions `ν` of `n` whose simple `L(ν)` is killed by `e`: those with
/// support of dimension at most [`annihilation_threshold`].
pub fn annihilated_simples(hp: &HyperplaneParams, n: u64) -> Result<Vec<MultiPartition>> {
    let threshold = annihilation_threshold(hp, n);
    if threshold < 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for nu in enumerate_multipartitions(hp.ell, n) {
        if closed_form_depth(&nu, hp)? as i64 <= threshold {
            out.push(nu);
        }
    }
    Ok(out)
}

/// Generators of `ker(K₀(O_c) ↠ K₀(O_c^{sph}))`: the classes `[L(ν)]` of the
/// annihilated simples.
pub fn k0_kernel(hp: &HyperplaneParams, n: u64) -> Result<Vec<MultiPartition>> {
    annihilated_simples(hp, n)
}

/// Whether the idempotent `e` lies in the `s`-th ideal of the corresponding chain
/// of `H_c`: exactly for `s > p`.
pub fn e_membership(chain: &IdealChain, s: u64) -> Result<bool> {
    if s as usize >= chain.len() {
        return Err(Error::IndexOutOfRange { index: s as usize, len: chain.len() });
    }
    Ok(s > chain.p())
}

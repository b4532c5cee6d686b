//! The two families of slices used by the ideal chains: twisted differential
//! operators on Grassmannians and the spherical Cherednik algebra of `G(ℓ,1,n)`.

use serde::Serialize;

use super::{p_of, slice, Decomposition, DimVector, QuiverData, SliceQuiver};
use crate::error::{Error, Result};
use crate::parameters::{lambda_quantum, s_to_c, ExactScalar, HyperplaneParams};
use crate::rational::{rat, Rational};

/// One vertex, no arrows.
pub fn one_vertex_quiver() -> QuiverData {
    QuiverData::from_indices(1, &[])
}

/// The cyclic quiver `Ã_{ℓ−1}` with arrows `k → k+1 mod ℓ` (the Jordan quiver for `ℓ = 1`).
pub fn cyclic_quiver(ell: usize) -> QuiverData {
    let arrows: Vec<_> = (0..ell).map(|k| (k, (k + 1) % ell, 1)).collect();
    QuiverData::from_indices(ell, &arrows)
}

/// The decomposition `(v, 1) = (v − s, 1) + s·(1, 0)` of a Grassmannian point.
pub fn grassmann_decomposition(v: i64, s: i64) -> Result<Decomposition> {
    if !(0..=v).contains(&s) {
        return Err(Error::IndexOutOfRange { index: s.max(0) as usize, len: v.max(0) as usize + 1 });
    }
    let parts = if s > 0 { vec![(vec![1], s as u64)] } else { vec![] };
    Ok(Decomposition { v0: vec![v - s], parts })
}

/// The slice of `T*Gr(v, w)` at parameter `λ` through a point with `s` copies of
/// the simple root. At `s = 0` the slice vertex is kept with `v̂ = 0`, so the
/// chain data is uniform in `s`.
pub fn grassmann_slice(v: i64, w: i64, lambda: &Rational, s: i64) -> Result<SliceQuiver> {
    grassmann_decomposition(v, s)?;
    let dec = Decomposition { v0: vec![v - s], parts: vec![(vec![1], s as u64)] };
    let lam = [ExactScalar::constant(lambda.clone())];
    slice(&one_vertex_quiver(), &[v], &[w], &dec, &lam)
}

/// The hyperplane in the orientation used for the Cherednik slices: `m ≤ 0`,
/// where the λ-orthogonal real root is `|m|δ + 1_{[i+1, j]}`. Hyperplanes with
/// `m > 0` are replaced by their transpose `(m, t) ↦ (−m, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CherednikFrame {
    pub hyperplane: HyperplaneParams,
    pub transposed: bool,
}

impl CherednikFrame {
    /// The real root `v′`.
    pub fn real_root(&self) -> DimVector {
        let hp = &self.hyperplane;
        (0..hp.ell).map(|k| -hp.m + i64::from(k > hp.i && k <= hp.j)).collect()
    }
}

pub fn cherednik_frame(hp: &HyperplaneParams) -> CherednikFrame {
    if hp.m > 0 {
        CherednikFrame { hyperplane: hp.transposed(), transposed: true }
    } else {
        CherednikFrame { hyperplane: *hp, transposed: false }
    }
}

/// The quantum parameter at the surrogate point of the (framed) hyperplane,
/// normalized as `λ^q − 2δ/ℓ + 2ε_0`, i.e. `λ_k = κ(s_{k−1} − s_k)` for `k ≥ 1`
/// and `λ_0 = κ(1 + s_{ℓ−1} − s_0)`.
pub fn cherednik_quantum_parameter(hp: &HyperplaneParams) -> Result<Vec<ExactScalar>> {
    let frame = cherednik_frame(hp);
    let params = s_to_c(&frame.hyperplane.surrogate_sparams())?;
    let mut lambda = lambda_quantum(&params)?;
    let shift = ExactScalar::constant(rat(2, hp.ell as i64));
    for x in lambda.iter_mut() {
        *x = x.try_sub(&shift)?;
    }
    lambda[0] = lambda[0].try_add(&ExactScalar::from_int(2))?;
    Ok(lambda)
}

/// `(nδ, 1) = (nδ − s v′, 1) + s·(v′, 0)` for `s = 0, …, q`, each checked against
/// `p((v″, 1)) = n − s|m| − s² ≥ 0`.
pub fn cherednik_decompositions(hp: &HyperplaneParams, n: u64) -> Result<Vec<Decomposition>> {
    let frame = cherednik_frame(hp);
    let ell = hp.ell;
    let v_prime = frame.real_root();
    let framed = cyclic_quiver(ell).framed(&epsilon0(ell))?;
    let abs_m = hp.m.abs();
    let mut out = Vec::new();
    for s in 0..=hp.q(n) as i64 {
        let v0: DimVector = v_prime.iter().map(|x| n as i64 - s * x).collect();
        let mut with_inf = v0.clone();
        with_inf.push(1);
        let p = p_of(&framed, &with_inf)?;
        if p != n as i64 - s * abs_m - s * s || p < 0 {
            return Err(Error::InconsistentDecomposition(format!("p((v″,1)) = {p} at s = {s}")));
        }
        let parts = if s > 0 { vec![(v_prime.clone(), s as u64)] } else { vec![] };
        out.push(Decomposition { v0, parts });
    }
    Ok(out)
}

fn epsilon0(ell: usize) -> DimVector {
    let mut w = vec![0; ell];
    w[0] = 1;
    w
}

/// The slice of the Cherednik quiver variety (`Ã_{ℓ−1}`, `v = nδ`, `w = ε_0`) at
/// the point `(v″, 1) ⊕ (v′, 0)^{⊕ s}`.
pub fn cherednik_slice(hp: &HyperplaneParams, n: u64, s: u64) -> Result<SliceQuiver> {
    let decs = cherednik_decompositions(hp, n)?;
    let Some(dec) = decs.get(s as usize) else {
        return Err(Error::IndexOutOfRange { index: s as usize, len: decs.len() });
    };
    let q = cyclic_quiver(hp.ell);
    let v = vec![n as i64; hp.ell];
    let w = epsilon0(hp.ell);
    let lambda = cherednik_quantum_parameter(hp)?;
    // At `s = 0` keep the slice vertex with multiplicity zero.
    let dec = Decomposition { v0: dec.v0.clone(), parts: vec![(cherednik_frame(hp).real_root(), s)] };
    slice(&q, &v, &w, &dec, &lambda)
}

//! The Dunkl–Griffeth description of the aspherical locus, in c-form and s-form.

use std::collections::BTreeSet;

use serde::Serialize;

use super::hyperplane::{sqrt_floor_shift, HyperplaneParams};
use super::scalar::ExactScalar;
use super::systems::{CParams, SParams};
use crate::error::{Error, Result};
use crate::rational::{int, rat};

/// Why a c-parameter is aspherical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition")]
pub enum CWitness {
    /// `c0 = −k/m` with `1 ≤ k < m ≤ n`.
    A { k: i64, m: i64 },
    /// `k = d_j − d_{j−k} + ℓ m c0` within the printed bounds.
    B { j: usize, m: i64, k: i64 },
}

/// Why an s-parameter is aspherical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition")]
pub enum SWitness {
    /// `κ = k/m` with `1 ≤ k < m ≤ n`.
    A { k: i64, m: i64 },
    /// `k − k̂ = κℓ(s_{j−k} − s_j − m)` with `k̂ ≡ k (mod ℓ)`, `j+1−ℓ ≤ k̂ ≤ j`.
    B { j: usize, m: i64, k: i64, k_hat: i64 },
}

impl CWitness {
    /// The hyperplane a condition-(b) witness lies on.
    pub fn hyperplane(&self, ell: usize) -> Option<HyperplaneParams> {
        match *self {
            CWitness::A { .. } => None,
            CWitness::B { j, m, k } => HyperplaneParams::from_dg_witness(ell, j, m, k).ok(),
        }
    }
}

/// Upper bound `j + ⌊√(n + m²/4) − m/2 − 1⌋ℓ` for `k` in condition (b).
pub fn dg_k_bound(ell: usize, n: u64, j: usize, m: i64) -> i64 {
    j as i64 + (sqrt_floor_shift(n, m) - 1) * ell as i64
}

/// Every `(j, m, k)` allowed by the printed bounds of condition (b), in search order.
pub fn dg_triples(ell: usize, n: u64) -> Vec<(usize, i64, i64)> {
    let l = ell as i64;
    let span = n as i64 - 1;
    let mut out = Vec::new();
    for j in 1..ell {
        for m in -span..=span {
            for k in 1..=dg_k_bound(ell, n, j, m) {
                if k.rem_euclid(l) != 0 {
                    out.push((j, m, k));
                }
            }
        }
    }
    out
}

fn condition_a(n: u64) -> impl Iterator<Item = (i64, i64)> {
    (2..=n as i64).flat_map(|m| (1..m).map(move |k| (k, m)))
}

/// All witnesses of asphericity for `p` at rank `n`, condition (a) first.
pub fn aspherical_witnesses_c(p: &CParams, n: u64) -> Result<Vec<CWitness>> {
    p.validate()?;
    let mut out = Vec::new();
    for (k, m) in condition_a(n) {
        if p.c0 == ExactScalar::constant(rat(-k, m)) {
            out.push(CWitness::A { k, m });
        }
    }
    let ell_m_c0 = |m: i64| p.c0.scale(&int(m * p.ell as i64));
    for (j, m, k) in dg_triples(p.ell, n) {
        let rhs = p.d[j].try_sub(p.d_at(j as i64 - k))?.try_add(&ell_m_c0(m))?;
        if rhs == ExactScalar::from_int(k) {
            out.push(CWitness::B { j, m, k });
        }
    }
    Ok(out)
}

/// The Dunkl–Griffeth test: `Some(witness)` iff `p` is aspherical for `G(ℓ,1,n)`.
pub fn is_aspherical_c(p: &CParams, n: u64) -> Result<Option<CWitness>> {
    Ok(aspherical_witnesses_c(p, n)?.into_iter().next())
}

/// The same test phrased through the charges `s`.
pub fn aspherical_witnesses_s(p: &SParams, n: u64) -> Result<Vec<SWitness>> {
    p.validate()?;
    let ell = p.ell;
    let l = ell as i64;
    let mut out = Vec::new();
    for (k, m) in condition_a(n) {
        if p.kappa == ExactScalar::constant(rat(k, m)) {
            out.push(SWitness::A { k, m });
        }
    }
    for (j, m, k) in dg_triples(ell, n) {
        let other = (j as i64 - k).rem_euclid(l) as usize;
        let k_hat = j as i64 - other as i64;
        let bracket = p.s[other].try_sub(&p.s[j])?.try_sub(&ExactScalar::from_int(m))?;
        let rhs = match p.kappa.scale(&int(l)).try_mul(&bracket) {
            Ok(v) => v,
            Err(Error::OutOfSpan(_)) => continue,
            Err(e) => return Err(e),
        };
        if rhs == ExactScalar::from_int(k - k_hat) {
            out.push(SWitness::B { j, m, k, k_hat });
        }
    }
    Ok(out)
}

pub fn is_aspherical_s(p: &SParams, n: u64) -> Result<Option<SWitness>> {
    Ok(aspherical_witnesses_s(p, n)?.into_iter().next())
}

/// All hyperplanes `s_i − s_j = m + t/κ` (in normal form, sorted, without
/// duplicates) on which a Weil-generic point is aspherical for `G(ℓ,1,n)`.
pub fn enumerate_aspherical_hyperplanes(ell: usize, n: u64) -> Result<Vec<HyperplaneParams>> {
    if ell < 2 {
        return Err(Error::InvalidEll { min: 2, got: ell });
    }
    let set: BTreeSet<HyperplaneParams> = dg_triples(ell, n)
        .into_iter()
        .map(|(j, m, k)| HyperplaneParams::from_dg_witness(ell, j, m, k))
        .collect::<Result<_>>()?;
    Ok(set.into_iter().collect())
}

/// True when `hp` is one of the enumerated aspherical hyperplanes for rank `n`.
pub fn is_enumerated(hp: &HyperplaneParams, n: u64) -> bool {
    dg_triples(hp.ell, n)
        .into_iter()
        .any(|(j, m, k)| HyperplaneParams::from_dg_witness(hp.ell, j, m, k).ok() == Some(*hp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parameters::{c_to_s, KappaMode};

    fn cp(c0: (i64, i64), d: &[(i64, i64)]) -> CParams {
        CParams::new(
            d.len(),
            ExactScalar::constant(rat(c0.0, c0.1)),
            d.iter().map(|&(p, q)| ExactScalar::constant(rat(p, q))).collect(),
        )
        .unwrap()
    }

    #[test]
    fn c_form_examples() {
        let p = cp((-1, 2), &[(0, 1), (1, 7)]);
        assert_eq!(is_aspherical_c(&p, 2).unwrap(), Some(CWitness::A { k: 1, m: 2 }));
        let p = cp((1, 7), &[(0, 1), (1, 1)]);
        assert_eq!(is_aspherical_c(&p, 2).unwrap(), Some(CWitness::B { j: 1, m: 0, k: 1 }));
        let p = cp((1, 7), &[(0, 1), (1, 11)]);
        assert_eq!(is_aspherical_c(&p, 2).unwrap(), None);
    }

    #[test]
    fn s_form_examples() {
        for (c0, d, expected) in
            [((-1, 2), [(0, 1), (1, 7)], true), ((1, 7), [(0, 1), (1, 1)], true), ((1, 7), [(0, 1), (1, 11)], false)]
        {
            let s = c_to_s(&cp(c0, &d)).unwrap();
            assert_eq!(is_aspherical_s(&s, 2).unwrap().is_some(), expected);
        }
        let s = SParams::new(2, ExactScalar::constant(rat(2, 3)), vec![ExactScalar::zero(); 2]).unwrap();
        assert_eq!(is_aspherical_s(&s, 3).unwrap(), Some(SWitness::A { k: 2, m: 3 }));
        let t = KappaMode::Transcendental;
        let generic = SParams::new(
            2,
            ExactScalar::kappa(&t),
            vec![ExactScalar::constant(rat(1, 1_000_003)), ExactScalar::constant(rat(1, 1_000_033))],
        )
        .unwrap();
        assert_eq!(is_aspherical_s(&generic, 5).unwrap(), None);
    }

    #[test]
    fn enumeration_examples() {
        let small = enumerate_aspherical_hyperplanes(2, 2).unwrap();
        assert!(small.contains(&HyperplaneParams::new(2, 0, 1, 0, 0).unwrap()));
        // For m = 0 the bound is k ≤ j + ⌊√2 − 1⌋ℓ = j, which forces t = 0. For
        // m = −1 the printed bound is j + ⌊√(9/4) + 1/2 − 1⌋ℓ = j + ℓ, so k = 3 is
        // admissible and produces t = 1.
        assert!(small.iter().filter(|hp| hp.m == 0).all(|hp| hp.t == 0));
        let with_t: Vec<_> = small.iter().filter(|hp| hp.t != 0).collect();
        assert_eq!(with_t, vec![&HyperplaneParams::new(2, 0, 1, -1, 1).unwrap()]);
        let six = enumerate_aspherical_hyperplanes(2, 6).unwrap();
        assert!(six.contains(&HyperplaneParams::new(2, 0, 1, 0, 1).unwrap()));
        assert!(six.windows(2).all(|w| w[0] < w[1]));
        assert!(is_enumerated(&HyperplaneParams::new(2, 0, 1, 0, 1).unwrap(), 6));
        assert!(!is_enumerated(&HyperplaneParams::new(2, 0, 1, 0, 1).unwrap(), 2));
    }

    #[test]
    fn surrogate_point_is_aspherical_on_its_own_hyperplane() {
        for ell in 2..=3 {
            for n in 1..=6 {
                for hp in enumerate_aspherical_hyperplanes(ell, n).unwrap() {
                    let s = hp.surrogate_sparams();
                    let found = aspherical_witnesses_s(&s, n).unwrap();
                    assert!(!found.is_empty(), "{hp} n={n}");
                    let c = hp.surrogate_cparams();
                    let planes: Vec<_> =
                        aspherical_witnesses_c(&c, n).unwrap().iter().filter_map(|w| w.hyperplane(ell)).collect();
                    assert!(planes.iter().all(|p| *p == hp), "{hp} n={n}: {planes:?}");
                    assert!(!planes.is_empty());
                }
            }
        }
    }
}

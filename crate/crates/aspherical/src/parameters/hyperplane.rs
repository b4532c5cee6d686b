//! The Weil-generic aspherical regime `s_i − s_j = m + t/κ`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::scalar::{ExactScalar, KappaMode};
use super::systems::{s_to_c, s_to_h, CParams, HParams, SParams};
use crate::error::{Error, Result};
use crate::rational::{int, rat};

/// Distinct primes larger than any `n` used in practice. Charges `1/p` with these
/// denominators are mutually unrelated modulo `ℤ + κ⁻¹ℤ` and keep the surrogate
/// point away from every other aspherical hyperplane.
const SURROGATE_PRIMES: [i64; 8] =
    [1_000_003, 1_000_033, 1_000_037, 1_000_039, 1_000_081, 1_000_099, 1_000_117, 1_000_121];

/// A point on the single aspherical hyperplane `s_i − s_j = m + t/κ` (`i < j`),
/// with κ transcendental and every other difference of charges Weil generic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HyperplaneParams {
    pub ell: usize,
    pub i: usize,
    pub j: usize,
    pub m: i64,
    pub t: i64,
}

impl HyperplaneParams {
    pub fn new(ell: usize, i: usize, j: usize, m: i64, t: i64) -> Result<Self> {
        if ell < 2 {
            return Err(Error::InvalidEll { min: 2, got: ell });
        }
        if !(i < j && j < ell) {
            return Err(Error::InvalidHyperplane(format!("need 0 ≤ i < j ≤ ℓ−1, got i={i}, j={j}, ℓ={ell}")));
        }
        Ok(Self { ell, i, j, m, t })
    }

    /// Parses the comma list `i,j,m,t`.
    pub fn parse(ell: usize, text: &str) -> Result<Self> {
        let fields: Vec<i64> = text
            .split(',')
            .map(|f| f.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("hyperplane must be i,j,m,t, got {text:?}")))?;
        match fields[..] {
            [i, j, m, t] if i >= 0 && j >= 0 => Self::new(ell, i as usize, j as usize, m, t),
            _ => Err(Error::Parse(format!("hyperplane must be i,j,m,t, got {text:?}"))),
        }
    }

    /// Normal form of a Dunkl–Griffeth condition-(b) witness `k = d_J − d_{J−K} + ℓMc0`.
    ///
    /// With `I = (J − K) mod ℓ` the condition reads `s_I − s_J = M + T/κ`,
    /// `T = (I − J + K)/ℓ`; when `I > J` the labels are switched and `(M, T)` negated.
    pub fn from_dg_witness(ell: usize, big_j: usize, big_m: i64, big_k: i64) -> Result<Self> {
        let l = ell as i64;
        if big_k.rem_euclid(l) == 0 {
            return Err(Error::InvalidHyperplane(format!("k = {big_k} is divisible by ℓ = {ell}")));
        }
        let big_i = (big_j as i64 - big_k).rem_euclid(l);
        let big_t = (big_i - big_j as i64 + big_k) / l;
        let big_i = big_i as usize;
        if big_i < big_j {
            Self::new(ell, big_i, big_j, big_m, big_t)
        } else {
            Self::new(ell, big_j, big_i, -big_m, -big_t)
        }
    }

    /// The constant of the c-form `d_i − d_j − ℓmc0 = k`, namely `k = i − j − ℓt`.
    pub fn k(&self) -> i64 {
        self.i as i64 - self.j as i64 - self.ell as i64 * self.t
    }

    /// `q = ⌊√(n + m²/4) − |m|/2⌋`, the largest `r` with `r(r + |m|) ≤ n`.
    pub fn q(&self, n: u64) -> u64 {
        q_bound(n, self.m)
    }

    /// The surrogate charges: κ transcendental, `s_j = 1/p_j`, `s_i = s_j + m + tκ⁻¹`
    /// and `s_a = 1/p_a` for the remaining components, with distinct large primes
    /// `p_a`. The only relation among the charges modulo `ℤ + κ⁻¹ℤ` is the
    /// hyperplane relation, so box equivalences, c-differences and orders computed
    /// at this point are those of a Weil-generic point of the hyperplane.
    pub fn surrogate_sparams(&self) -> SParams {
        let mode = KappaMode::Transcendental;
        let kappa = ExactScalar::kappa(&mode);
        let mut s: Vec<ExactScalar> =
            (0..self.ell).map(|a| ExactScalar::constant(rat(1, SURROGATE_PRIMES[a % 8]))).collect();
        let shift = ExactScalar::new(int(self.m), int(0), int(self.t), mode).expect("transcendental mode never fails");
        s[self.i] = &s[self.j] + &shift;
        SParams::new(self.ell, kappa, s).expect("ℓ ≥ 2 is checked on construction")
    }

    pub fn surrogate_hparams(&self) -> HParams {
        s_to_h(&self.surrogate_sparams()).expect("surrogate charges stay in the span")
    }

    pub fn surrogate_cparams(&self) -> CParams {
        s_to_c(&self.surrogate_sparams()).expect("surrogate charges stay in the span")
    }

    /// The image under transposition of all Young diagrams, `(κ, s) ↦ (−κ, −s)`,
    /// which preserves box equivalences and c-values and sends `(m, t)` to `(−m, t)`.
    pub fn transposed(&self) -> Self {
        Self { m: -self.m, ..*self }
    }
}

impl fmt::Display for HyperplaneParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(ℓ={}, i={}, j={}, m={}, t={})", self.ell, self.i, self.j, self.m, self.t)
    }
}

/// `⌊(√(4n + m²) − m)/2⌋ = ⌊√(n + m²/4) − m/2⌋`, computed exactly.
///
/// With `g = ⌊√(4n + m²)⌋` the value is `⌊(g − m)/2⌋`: when `4n + m²` is not a
/// square, `√(4n + m²)` lies strictly between `g` and `g + 1`, and `g + 1 − m` is
/// even exactly when `g − m` is odd, so the floor does not move.
pub fn sqrt_floor_shift(n: u64, m: i64) -> i64 {
    let x = 4 * n as i128 + (m as i128) * (m as i128);
    let g = isqrt(x as u128) as i128;
    (g - m as i128).div_euclid(2) as i64
}

/// `q = ⌊√(n + m²/4) − |m|/2⌋`.
pub fn q_bound(n: u64, m: i64) -> u64 {
    sqrt_floor_shift(n, m.abs()) as u64
}

fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

//! The parameter systems `(c0, d)`, `(κ, h)`, `(κ, s)` and the maps between them.

use serde::{Deserialize, Serialize};

use super::scalar::ExactScalar;
use crate::error::{Error, Result};
use crate::rational::{int, rat};

fn check_shape(ell: usize, len: usize) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidEll { min: 2, got: ell });
    }
    if len != ell {
        return Err(Error::LengthMismatch { expected: ell, got: len });
    }
    Ok(())
}

fn index_mod(ell: usize, j: i64) -> usize {
    j.rem_euclid(ell as i64) as usize
}

/// Dunkl–Griffeth parameters `(c0, d_0, …, d_{ℓ−1})`, with `d` indexed modulo ℓ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CParams {
    pub ell: usize,
    pub c0: ExactScalar,
    pub d: Vec<ExactScalar>,
}

/// Parameters `(κ, h_0, …, h_{ℓ−1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HParams {
    pub ell: usize,
    pub kappa: ExactScalar,
    pub h: Vec<ExactScalar>,
}

/// Parameters `(κ, s_0, …, s_{ℓ−1})` with `h_j = κ s_j − j/ℓ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SParams {
    pub ell: usize,
    pub kappa: ExactScalar,
    pub s: Vec<ExactScalar>,
}

impl CParams {
    pub fn new(ell: usize, c0: ExactScalar, d: Vec<ExactScalar>) -> Result<Self> {
        check_shape(ell, d.len())?;
        Ok(Self { ell, c0, d })
    }

    /// `d_j` with the index read modulo ℓ.
    pub fn d_at(&self, j: i64) -> &ExactScalar {
        &self.d[index_mod(self.ell, j)]
    }

    pub fn validate(&self) -> Result<()> {
        check_shape(self.ell, self.d.len())
    }
}

impl HParams {
    pub fn new(ell: usize, kappa: ExactScalar, h: Vec<ExactScalar>) -> Result<Self> {
        check_shape(ell, h.len())?;
        if kappa.is_zero() {
            return Err(Error::ZeroKappa);
        }
        Ok(Self { ell, kappa, h })
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(self.ell, self.kappa.clone(), self.h.clone()).map(|_| ())
    }
}

impl SParams {
    pub fn new(ell: usize, kappa: ExactScalar, s: Vec<ExactScalar>) -> Result<Self> {
        check_shape(ell, s.len())?;
        if kappa.is_zero() {
            return Err(Error::ZeroKappa);
        }
        Ok(Self { ell, kappa, s })
    }

    pub fn validate(&self) -> Result<()> {
        Self::new(self.ell, self.kappa.clone(), self.s.clone()).map(|_| ())
    }
}

/// `κ = −c0`, `h_j = −d_j/ℓ`.
pub fn c_to_h(p: &CParams) -> Result<HParams> {
    p.validate()?;
    if p.c0.is_zero() {
        return Err(Error::ZeroKappa);
    }
    let scale = rat(-1, p.ell as i64);
    let h = p.d.iter().map(|d| d.scale(&scale)).collect();
    HParams::new(p.ell, -&p.c0, h)
}

/// `c0 = −κ`, `d_j = −ℓ h_j`.
pub fn h_to_c(p: &HParams) -> Result<CParams> {
    p.validate()?;
    let scale = int(-(p.ell as i64));
    let d = p.h.iter().map(|h| h.scale(&scale)).collect();
    CParams::new(p.ell, -&p.kappa, d)
}

/// `s_j = (h_j + j/ℓ)/κ`.
pub fn h_to_s(p: &HParams) -> Result<SParams> {
    p.validate()?;
    let ell = p.ell as i64;
    let s =
        p.h.iter()
            .enumerate()
            .map(|(j, h)| {
                let shifted = h.try_add(&ExactScalar::constant(rat(j as i64, ell)))?;
                shifted.try_div(&p.kappa)
            })
            .collect::<Result<Vec<_>>>()?;
    SParams::new(p.ell, p.kappa.clone(), s)
}

/// `h_j = κ s_j − j/ℓ`.
pub fn s_to_h(p: &SParams) -> Result<HParams> {
    p.validate()?;
    let ell = p.ell as i64;
    let h =
        p.s.iter()
            .enumerate()
            .map(|(j, s)| {
                let ks = p.kappa.try_mul(s)?;
                ks.try_sub(&ExactScalar::constant(rat(j as i64, ell)))
            })
            .collect::<Result<Vec<_>>>()?;
    HParams::new(p.ell, p.kappa.clone(), h)
}

pub fn c_to_s(p: &CParams) -> Result<SParams> {
    h_to_s(&c_to_h(p)?)
}

pub fn s_to_c(p: &SParams) -> Result<CParams> {
    h_to_c(&s_to_h(p)?)
}

/// The classical quiver-variety parameter
/// `λ^c = (1/ℓ)(ℓc0 − d_0 + d_{ℓ−1}, d_0 − d_1, …, d_{ℓ−2} − d_{ℓ−1})`.
///
/// Its coordinates telescope to `c0`.
pub fn lambda_classical(p: &CParams) -> Result<Vec<ExactScalar>> {
    p.validate()?;
    let ell = p.ell;
    let inv = rat(1, ell as i64);
    let mut out = Vec::with_capacity(ell);
    let first = p.c0.scale(&int(ell as i64)).try_sub(&p.d[0])?.try_add(&p.d[ell - 1])?;
    out.push(first.scale(&inv));
    for k in 1..ell {
        out.push(p.d[k - 1].try_sub(&p.d[k])?.scale(&inv));
    }
    Ok(out)
}

/// The quantum parameter
/// `λ^q = (1/ℓ)(1 − ℓ(c0+1) + d_0 − d_{ℓ−1}, 1 − d_0 + d_1, …, 1 − d_{ℓ−2} + d_{ℓ−1})`.
///
/// Its coordinates telescope to `−c0` (see [`lambda_quantum_sum`]).
pub fn lambda_quantum(p: &CParams) -> Result<Vec<ExactScalar>> {
    p.validate()?;
    let ell = p.ell;
    let inv = rat(1, ell as i64);
    let one = ExactScalar::from_int(1);
    let mut out = Vec::with_capacity(ell);
    let c0_plus_one = p.c0.try_add(&one)?;
    let first = one.try_sub(&c0_plus_one.scale(&int(ell as i64)))?.try_add(&p.d[0])?.try_sub(&p.d[ell - 1])?;
    out.push(first.scale(&inv));
    for k in 1..ell {
        out.push(one.try_sub(&p.d[k - 1])?.try_add(&p.d[k])?.scale(&inv));
    }
    Ok(out)
}

/// The value the coordinates of [`lambda_quantum`] sum to: the constants
/// contribute `ℓ/ℓ − (c0 + 1) = −c0`, the `d`-terms cancel in pairs.
pub fn lambda_quantum_sum(p: &CParams) -> ExactScalar {
    -&p.c0
}

//! Slice quivers at semisimple points and the restricted parameter map.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize, Serializer};

use super::{check_len, classify_root, half, p_of, pair, tits_form, DimVector, QuiverData};
use crate::error::{Error, Result};
use crate::parameters::ExactScalar;
use crate::rational::{int, Rational};

/// A dimension-level decomposition `v = v⁰ + Σ mult·vⁱ` of a semisimple point.
/// The framing vertex always belongs to the `v⁰` summand. A part of multiplicity
/// zero keeps its slice vertex with `v̂_i = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub v0: DimVector,
    pub parts: Vec<(DimVector, u64)>,
}

impl Decomposition {
    /// The total dimension `v⁰ + Σ mult·vⁱ`.
    pub fn total(&self) -> DimVector {
        let mut out = self.v0.clone();
        for (part, mult) in &self.parts {
            for (x, y) in out.iter_mut().zip(part) {
                *x += *mult as i64 * y;
            }
        }
        out
    }
}

/// The framed slice quiver `(Q̂, v̂, ŵ)` together with the restricted parameter `λ̂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceQuiver {
    pub quiver: QuiverData,
    pub vhat: DimVector,
    pub what: DimVector,
    pub lambda_hat: Vec<ExactScalar>,
}

impl Serialize for SliceQuiver {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Keyed<'a> {
            quiver: &'a QuiverData,
            vhat: BTreeMap<&'a str, i64>,
            what: BTreeMap<&'a str, i64>,
            lambda_hat: BTreeMap<&'a str, &'a ExactScalar>,
        }
        let labels = || self.quiver.vertices.iter().map(String::as_str);
        Keyed {
            quiver: &self.quiver,
            vhat: labels().zip(self.vhat.iter().copied()).collect(),
            what: labels().zip(self.what.iter().copied()).collect(),
            lambda_hat: labels().zip(self.lambda_hat.iter()).collect(),
        }
        .serialize(serializer)
    }
}

/// `ϱ(v)_k = −½(Σ_{h(a)=k} v_{t(a)} − Σ_{t(a)=k} v_{h(a)} − w_k)`; half-integral
/// when the framing is odd.
pub fn rho(q: &QuiverData, v: &[i64], w: &[i64]) -> Result<Vec<Rational>> {
    check_len(q, v)?;
    check_len(q, w)?;
    let mut sums: Vec<i64> = w.iter().map(|&x| -x).collect();
    for (t, h, mult) in q.indexed_arrows()? {
        sums[h] += mult as i64 * v[t];
        sums[t] -= mult as i64 * v[h];
    }
    Ok(sums.into_iter().map(|x| -int(x) * half()).collect())
}

fn inconsistent(msg: String) -> Error {
    Error::InconsistentDecomposition(msg)
}

/// The slice quiver at a point of type `dec`: one vertex per part `vⁱ` with
/// `p(vⁱ)` loops, `−(vⁱ, vʲ)` arrows `i → j` for `i < j`, dimension the part
/// multiplicities and framing `ŵ_i = w·vⁱ − (v⁰, vⁱ)`.
///
/// The parameter is restricted through the trace pairing `re(x)_i = x·vⁱ` as
/// `λ̂ = re(λ + ϱ(v)) − ϱ̂(v̂)`, the normalization under which the Grassmannian
/// slices carry `λ + v − s` and the Cherednik slices carry `t − s`.
pub fn slice(q: &QuiverData, v: &[i64], w: &[i64], dec: &Decomposition, lambda: &[ExactScalar]) -> Result<SliceQuiver> {
    check_len(q, v)?;
    check_len(q, w)?;
    check_len(q, &dec.v0)?;
    if lambda.len() != q.len() {
        return Err(Error::LengthMismatch { expected: q.len(), got: lambda.len() });
    }
    if dec.v0.iter().any(|&x| x < 0) {
        return Err(inconsistent(format!("negative v⁰ {:?}", dec.v0)));
    }
    for (part, mult) in &dec.parts {
        check_len(q, part)?;
        if part.iter().all(|&x| x == 0) {
            return Err(inconsistent(format!("empty part {part:?}×{mult}")));
        }
        if !classify_root(q, part)?.is_root() {
            return Err(inconsistent(format!("part {part:?} is not a root")));
        }
    }
    if dec.total() != v {
        return Err(inconsistent(format!("parts sum to {:?}, expected {v:?}", dec.total())));
    }

    let k = dec.parts.len();
    let labels: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
    let mut arrows = Vec::new();
    for (a, (pa, _)) in dec.parts.iter().enumerate() {
        let loops = p_of(q, pa)?;
        if loops > 0 {
            arrows.push((a, a, loops as u32));
        }
        for (b, (pb, _)) in dec.parts.iter().enumerate().skip(a + 1) {
            let count = -tits_form(q, pa, pb)?;
            if count < 0 {
                return Err(inconsistent(format!("parts {pa:?} and {pb:?} pair positively")));
            }
            if count > 0 {
                arrows.push((a, b, count as u32));
            }
        }
    }
    let mut quiver = QuiverData::from_indices(k, &arrows);
    quiver.vertices = labels;

    let vhat: DimVector = dec.parts.iter().map(|&(_, mult)| mult as i64).collect();
    let mut what = Vec::with_capacity(k);
    for (part, _) in &dec.parts {
        let framing: i64 = w.iter().zip(part).map(|(a, b)| a * b).sum::<i64>() - tits_form(q, &dec.v0, part)?;
        if framing < 0 {
            return Err(inconsistent(format!("negative framing at part {part:?}")));
        }
        what.push(framing);
    }

    let rho_v = rho(q, v, w)?;
    let shifted: Vec<ExactScalar> =
        lambda.iter().zip(&rho_v).map(|(l, r)| l.try_add(&ExactScalar::constant(r.clone()))).collect::<Result<_>>()?;
    let rho_hat = rho(&quiver, &vhat, &what)?;
    let lambda_hat = dec
        .parts
        .iter()
        .zip(rho_hat)
        .map(|((part, _), r)| pair(&shifted, part)?.try_sub(&ExactScalar::constant(r)))
        .collect::<Result<_>>()?;

    Ok(SliceQuiver { quiver, vhat, what, lambda_hat })
}

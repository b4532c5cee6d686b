//! The crystal on ℓ-partitions: z-signatures, `ẽ_z`, `f̃_z`, depth, and the
//! Fock-space operators `e_z`, `f_z`.

mod fock;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multipartition::{Cell, ChargeModel, MultiPartition, ZClass};

pub use fock::{fock_e, fock_f, FockVector};

/// How the boxes of a z-signature are ordered from left to right.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Increasing `c_b`: the boxes listed decreasingly for `⪯_c`.
    #[default]
    Printed,
    /// Decreasing `c_b`.
    Example,
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(text: &str) -> Result<Self> {
        match text {
            "printed" => Ok(Convention::Printed),
            "example" => Ok(Convention::Example),
            other => Err(Error::Parse(format!("convention must be printed|example, got {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    /// An addable box.
    Plus,
    /// A removable box.
    Minus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureEntry {
    pub sign: Sign,
    pub cell: Cell,
}

/// The `+`/`−` word of the addable and removable boxes of one z-class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZSignature {
    pub entries: Vec<SignatureEntry>,
}

impl ZSignature {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn count(&self, sign: Sign) -> usize {
        self.entries.iter().filter(|e| e.sign == sign).count()
    }

    /// A signature with dummy boxes, for working with bare words such as `"−−++"`.
    pub fn from_word(word: &str) -> Result<Self> {
        let entries = word
            .chars()
            .enumerate()
            .map(|(k, ch)| {
                let sign = match ch {
                    '+' => Sign::Plus,
                    '-' | '−' => Sign::Minus,
                    other => return Err(Error::Parse(format!("bad signature symbol {other:?}"))),
                };
                Ok(SignatureEntry { sign, cell: Cell::new(0, k as u32 + 1, 1) })
            })
            .collect::<Result<_>>()?;
        Ok(Self { entries })
    }
}

impl fmt::Display for ZSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            f.write_str(match e.sign {
                Sign::Plus => "+",
                Sign::Minus => "−",
            })?;
        }
        Ok(())
    }
}

fn signed_boxes(nu: &MultiPartition) -> impl Iterator<Item = SignatureEntry> + '_ {
    let add = nu.addable_boxes().into_iter().map(|cell| SignatureEntry { sign: Sign::Plus, cell });
    let rem = nu.removable_boxes().into_iter().map(|cell| SignatureEntry { sign: Sign::Minus, cell });
    add.chain(rem)
}

/// The classes met by the addable and removable boxes of `ν`, in canonical order.
pub fn z_classes<M: ChargeModel + ?Sized>(nu: &MultiPartition, model: &M) -> Vec<ZClass> {
    let mut out: Vec<ZClass> = signed_boxes(nu).map(|e| model.z_class(&e.cell)).collect();
    out.sort();
    out.dedup();
    out
}

/// The z-signature of `ν`: addable z-boxes as `+`, removable ones as `−`, ordered
/// by `c_b` (increasing for [`Convention::Printed`], decreasing for
/// [`Convention::Example`]).
pub fn signature<M: ChargeModel + ?Sized>(
    nu: &MultiPartition,
    z: &ZClass,
    model: &M,
    convention: Convention,
) -> Result<ZSignature> {
    check_level(nu, model)?;
    let mut keyed: Vec<(i64, SignatureEntry)> =
        signed_boxes(nu).filter(|e| model.z_class(&e.cell) == *z).map(|e| (model.c_offset(&e.cell), e)).collect();
    keyed.sort_by_key(|(c, _)| *c);
    if let Some(w) = keyed.windows(2).find(|w| w[0].0 == w[1].0) {
        return Err(Error::DegenerateOrder(format!(
            "boxes {} and {} of class {z} have equal c",
            w[0].1.cell, w[1].1.cell
        )));
    }
    if convention == Convention::Example {
        keyed.reverse();
    }
    Ok(ZSignature { entries: keyed.into_iter().map(|(_, e)| e).collect() })
}

fn check_level<M: ChargeModel + ?Sized>(nu: &MultiPartition, model: &M) -> Result<()> {
    if nu.ell() != model.ell() {
        return Err(Error::LengthMismatch { expected: model.ell(), got: nu.ell() });
    }
    Ok(())
}

/// Cancels `−+` pairs (adjacent once earlier cancellations are erased) until no
/// `−` stands to the left of a `+`. Single left-to-right pass with a stack.
pub fn reduce_signature(sig: &ZSignature) -> ZSignature {
    let mut kept: Vec<SignatureEntry> = Vec::with_capacity(sig.len());
    for &entry in &sig.entries {
        if entry.sign == Sign::Plus && kept.last().is_some_and(|e| e.sign == Sign::Minus) {
            kept.pop();
        } else {
            kept.push(entry);
        }
    }
    ZSignature { entries: kept }
}

/// The same reduction by repeatedly erasing the leftmost adjacent `−+` and rescanning.
pub fn reduce_signature_by_rescanning(sig: &ZSignature) -> ZSignature {
    let mut entries = sig.entries.clone();
    while let Some(pos) = entries.windows(2).position(|w| w[0].sign == Sign::Minus && w[1].sign == Sign::Plus) {
        entries.drain(pos..pos + 2);
    }
    ZSignature { entries }
}

/// `ẽ_z ν`: remove the box at the leftmost `−` of the reduced signature.
pub fn e_tilde<M: ChargeModel + ?Sized>(
    nu: &MultiPartition,
    z: &ZClass,
    model: &M,
    convention: Convention,
) -> Result<Option<MultiPartition>> {
    let reduced = reduce_signature(&signature(nu, z, model, convention)?);
    match reduced.entries.iter().find(|e| e.sign == Sign::Minus) {
        Some(e) => nu.remove_box(&e.cell).map(Some),
        None => Ok(None),
    }
}

/// `f̃_z ν`: add the box at the rightmost `+` of the reduced signature.
pub fn f_tilde<M: ChargeModel + ?Sized>(
    nu: &MultiPartition,
    z: &ZClass,
    model: &M,
    convention: Convention,
) -> Result<Option<MultiPartition>> {
    let reduced = reduce_signature(&signature(nu, z, model, convention)?);
    match reduced.entries.iter().rev().find(|e| e.sign == Sign::Plus) {
        Some(e) => nu.add_box(&e.cell).map(Some),
        None => Ok(None),
    }
}

/// `ν` is highest weight (singular) when every `ẽ_z` kills it.
pub fn is_highest_weight<M: ChargeModel + ?Sized>(
    nu: &MultiPartition,
    model: &M,
    convention: Convention,
) -> Result<bool> {
    for z in z_classes(nu, model) {
        if e_tilde(nu, &z, model, convention)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Depth of `ν`: apply the first applicable `ẽ_z` in canonical class order until
/// a highest-weight element is reached, counting the steps.
pub fn depth_by_descent<M: ChargeModel + ?Sized>(
    nu: &MultiPartition,
    model: &M,
    convention: Convention,
) -> Result<u64> {
    let mut current = nu.clone();
    let mut steps = 0;
    'descend: loop {
        for z in z_classes(&current, model) {
            if let Some(next) = e_tilde(&current, &z, model, convention)? {
                current = next;
                steps += 1;
                continue 'descend;
            }
        }
        return Ok(steps);
    }
}

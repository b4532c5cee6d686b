//! Supports of simple modules at a Weil-generic point of an aspherical hyperplane:
//! singular families, the rectangle index `r(ν)` and the depth `p(ν) = n − r(r + |m|)`.
//!
//! For `t ≥ 0` the rectangle lives in component `j` and the addable boxes of
//! component `i` are scanned; for `t < 0` the two components switch roles and the
//! effective shift becomes `−m`. With effective shift `μ`, a scanned box `b` is
//! matched with the farthest box `b'` of the other component on the diagonal of
//! content `cont(b) + μ`, and `r_b` measures how many rows (for `μ ≥ 0`) or columns
//! (for `μ < 0`) separate them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::multipartition::{enumerate_multipartitions, Cell, MultiPartition, Partition};
use crate::parameters::{q_bound, HyperplaneParams};

/// The closure of the stratum `X(W_{p,0})`, of dimension `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportStratum {
    pub p: u64,
    pub n: u64,
    pub description: String,
}

/// Which component is scanned, which hosts the rectangle, and the effective shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Roles {
    scanned: usize,
    host: usize,
    shift: i64,
}

fn roles(hp: &HyperplaneParams) -> Roles {
    if hp.t >= 0 {
        Roles { scanned: hp.i, host: hp.j, shift: hp.m }
    } else {
        Roles { scanned: hp.j, host: hp.i, shift: -hp.m }
    }
}

/// The rectangle of index `r` for effective shift `μ`: `r` rows of length `r + μ`
/// when `μ ≥ 0`, and `r + |μ|` rows of length `r` otherwise.
fn rectangle(r: u32, shift: i64) -> Partition {
    let a = shift.unsigned_abs() as u32;
    if shift >= 0 {
        Partition::rectangle(r, r + a)
    } else {
        Partition::rectangle(r + a, r)
    }
}

fn check_level(nu: &MultiPartition, hp: &HyperplaneParams) -> Result<()> {
    if nu.ell() != hp.ell {
        return Err(Error::LengthMismatch { expected: hp.ell, got: nu.ell() });
    }
    Ok(())
}

/// The singular (highest-weight) ℓ-partitions of `n`: a single rectangle with
/// `r(r + |m|) = n` in the host component and nothing else.
pub fn singular_family(hp: &HyperplaneParams, n: u64) -> Vec<MultiPartition> {
    if n == 0 {
        return vec![MultiPartition::empty(hp.ell)];
    }
    let roles = roles(hp);
    let a = hp.m.unsigned_abs();
    (1..=n)
        .take_while(|r| r * r <= n)
        .filter(|r| r * (r + a) == n)
        .map(|r| {
            let mut comps = vec![Partition::empty(); hp.ell];
            comps[roles.host] = rectangle(r as u32, roles.shift);
            MultiPartition::new(comps)
        })
        .collect()
}

/// `r_b` for an addable box `b` of the scanned component: 0 when the matching
/// diagonal of the host component is empty, otherwise the row (for a nonnegative
/// shift) or column (for a negative shift) distance to its farthest box, plus one.
pub fn r_of_addable_box(nu: &MultiPartition, b: &Cell, hp: &HyperplaneParams) -> Result<u64> {
    check_level(nu, hp)?;
    let roles = roles(hp);
    if b.i != roles.scanned || !nu.is_addable(b) {
        return Err(Error::NotAddable(format!("{b} (scanned component is {})", roles.scanned)));
    }
    let target = b.content() + roles.shift;
    let host = nu.component(roles.host);
    // Boxes of content `target` are (y + target, y); the last one is the farthest.
    let farthest = (1..=host.parts().len() as u32).rev().find(|&y| {
        let x = y as i64 + target;
        x >= 1 && host.contains(x as u32, y)
    });
    let Some(y) = farthest else { return Ok(0) };
    let x = (y as i64 + target) as u32;
    let distance = if roles.shift >= 0 { y as i64 - b.y as i64 + 1 } else { x as i64 - b.x as i64 + 1 };
    Ok(distance.max(0) as u64)
}

/// `r(ν) = max r_b` over the addable boxes of the scanned component (0 if none).
pub fn rectangle_index(nu: &MultiPartition, hp: &HyperplaneParams) -> Result<u64> {
    check_level(nu, hp)?;
    let scanned = roles(hp).scanned;
    let mut best = 0;
    for b in nu.addable_boxes().iter().filter(|b| b.i == scanned) {
        best = best.max(r_of_addable_box(nu, b, hp)?);
    }
    Ok(best)
}

/// `p(ν) = |ν| − r(r + |m|)`, the dimension of the support of `L(ν)`.
pub fn closed_form_depth(nu: &MultiPartition, hp: &HyperplaneParams) -> Result<u64> {
    let r = rectangle_index(nu, hp)?;
    let used = r * (r + hp.m.unsigned_abs());
    nu.size()
        .checked_sub(used)
        .ok_or_else(|| Error::ModelViolation(format!("rectangle index {r} of {nu} exceeds its size")))
}

pub fn support_stratum(nu: &MultiPartition, hp: &HyperplaneParams) -> Result<SupportStratum> {
    let p = closed_form_depth(nu, hp)?;
    Ok(SupportStratum { p, n: nu.size(), description: format!("closure of X(W_{{{p},0}})") })
}

/// `{ n − r(r + |m|) : 0 ≤ r ≤ q }`.
pub fn possible_support_dims(hp: &HyperplaneParams, n: u64) -> BTreeSet<u64> {
    let a = hp.m.unsigned_abs();
    (0..=q_bound(n, hp.m)).map(|r| n - r * (r + a)).collect()
}

/// One row of the supports table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SupportRow {
    pub nu: MultiPartition,
    pub depth: u64,
    pub support_dim: u64,
    pub rectangle_index: u64,
    pub singular: bool,
}

/// The supports table over `P_ℓ(n)`, in enumeration order.
pub fn supports_table(hp: &HyperplaneParams, n: u64) -> Result<Vec<SupportRow>> {
    enumerate_multipartitions(hp.ell, n)
        .into_iter()
        .map(|nu| {
            let r = rectangle_index(&nu, hp)?;
            let depth = closed_form_depth(&nu, hp)?;
            Ok(SupportRow { depth, support_dim: depth, rectangle_index: r, singular: depth == 0, nu })
        })
        .collect()
}

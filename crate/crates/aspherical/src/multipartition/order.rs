//! Charged contents, c-functions, box equivalence and the orders `⪯_c`, `≤_c`.

use num_traits::Signed;

use super::{Cell, ChargeModel, MultiPartition};
use crate::error::{Error, Result};
use crate::parameters::{h_to_s, ExactScalar, HParams, SParams};
use crate::rational::int;

/// `cont^s(b) = x − y + s_i`.
pub fn charged_content(b: &Cell, s: &SParams) -> ExactScalar {
    &ExactScalar::from_int(b.content()) + &s.s[b.i]
}

/// `c_b = κℓ(x − y) + ℓh_i`.
pub fn c_of_box(b: &Cell, h: &HParams) -> ExactScalar {
    let ell = int(h.ell as i64);
    &h.kappa.scale(&(&ell * int(b.content()))) + &h.h[b.i].scale(&ell)
}

/// `c_ν = Σ_{b ∈ ν} c_b`.
pub fn c_function(nu: &MultiPartition, h: &HParams) -> ExactScalar {
    nu.cells().iter().fold(ExactScalar::zero(), |acc, b| &acc + &c_of_box(b, h))
}

/// `b ∼ b'` iff `κ(cont^s b − cont^s b') ∈ ℤ`.
pub fn boxes_equivalent(b: &Cell, other: &Cell, s: &SParams) -> bool {
    let diff = &charged_content(b, s) - &charged_content(other, s);
    s.kappa.times_is_integer(&diff)
}

/// Outcome of comparing two boxes under `⪯_c`.
///
/// `Less` means `b ⪯_c b'` strictly, i.e. `c_b − c_{b'}` is a positive integer;
/// `Greater` means `b' ⪯_c b` strictly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoxOrder {
    Less,
    Greater,
    Equal,
    Incomparable,
}

impl BoxOrder {
    fn from_difference(diff: i64) -> Self {
        match diff.signum() {
            1 => BoxOrder::Less,
            -1 => BoxOrder::Greater,
            _ => BoxOrder::Equal,
        }
    }

    /// True for `Less` or `Equal`, i.e. `b ⪯_c b'`.
    pub fn is_preceq(self) -> bool {
        matches!(self, BoxOrder::Less | BoxOrder::Equal)
    }
}

fn compare_with(b: &Cell, other: &Cell, h: &HParams, s: &SParams) -> Result<BoxOrder> {
    if !boxes_equivalent(b, other, s) {
        return Ok(BoxOrder::Incomparable);
    }
    let diff = &c_of_box(b, h) - &c_of_box(other, h);
    let value = diff
        .as_rational()
        .filter(|q| q.is_integer())
        .ok_or_else(|| Error::ModelViolation(format!("equivalent boxes {b}, {other} have c-difference {diff}")))?;
    let sign = if value.is_positive() {
        1
    } else if value.is_negative() {
        -1
    } else {
        0
    };
    Ok(BoxOrder::from_difference(sign))
}

/// Compares two boxes under `⪯_c` using exact scalars.
pub fn box_compare(b: &Cell, other: &Cell, h: &HParams) -> Result<BoxOrder> {
    compare_with(b, other, h, &h_to_s(h)?)
}

/// Compares two boxes under `⪯_c` in a charge model.
pub fn box_compare_in<M: ChargeModel + ?Sized>(b: &Cell, other: &Cell, model: &M) -> BoxOrder {
    match model.c_difference(b, other) {
        None => BoxOrder::Incomparable,
        Some(d) => BoxOrder::from_difference(d),
    }
}

/// Is there a perfect matching in the bipartite graph with an edge `u → v`
/// whenever `edge(u, v)`? Augmenting paths (Kuhn's algorithm).
fn has_perfect_matching(left: usize, right: usize, edge: impl Fn(usize, usize) -> bool) -> bool {
    if left != right {
        return false;
    }
    let adjacency: Vec<Vec<usize>> = (0..left).map(|u| (0..right).filter(|&v| edge(u, v)).collect()).collect();
    let mut matched: Vec<Option<usize>> = vec![None; right];
    fn augment(u: usize, adjacency: &[Vec<usize>], seen: &mut [bool], matched: &mut [Option<usize>]) -> bool {
        for &v in &adjacency[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if matched[v].is_none_or(|w| augment(w, adjacency, seen, matched)) {
                matched[v] = Some(u);
                return true;
            }
        }
        false
    }
    (0..left).all(|u| augment(u, &adjacency, &mut vec![false; right], &mut matched))
}

/// `λ ⪯_c λ'`: the boxes can be paired `b_k ↔ b'_k` with `b_k ⪯_c b'_k` for all `k`.
pub fn preceq_multipartition(lambda: &MultiPartition, other: &MultiPartition, h: &HParams) -> Result<bool> {
    if lambda.size() != other.size() {
        return Ok(false);
    }
    let s = h_to_s(h)?;
    let (left, right) = (lambda.cells(), other.cells());
    let mut table = vec![vec![false; right.len()]; left.len()];
    for (u, b) in left.iter().enumerate() {
        for (v, b2) in right.iter().enumerate() {
            table[u][v] = compare_with(b, b2, h, &s)?.is_preceq();
        }
    }
    Ok(has_perfect_matching(left.len(), right.len(), |u, v| table[u][v]))
}

/// `λ ⪯_c λ'` computed in a charge model.
pub fn preceq_in<M: ChargeModel + ?Sized>(lambda: &MultiPartition, other: &MultiPartition, model: &M) -> bool {
    if lambda.size() != other.size() {
        return false;
    }
    let (left, right) = (lambda.cells(), other.cells());
    has_perfect_matching(left.len(), right.len(), |u, v| box_compare_in(&left[u], &right[v], model).is_preceq())
}

/// `λ ≤_c λ'` iff `λ = λ'` or `c_λ − c_{λ'}` is a positive integer.
pub fn leq_c(lambda: &MultiPartition, other: &MultiPartition, h: &HParams) -> Result<bool> {
    if lambda == other {
        return Ok(true);
    }
    let diff = &c_function(lambda, h) - &c_function(other, h);
    Ok(diff.is_integer() && diff.a().is_positive())
}

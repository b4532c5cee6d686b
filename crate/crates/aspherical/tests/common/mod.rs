//! Independent oracles shared by the integration tests.
//!
//! The crystal oracle works directly from the exact quantities — charged contents
//! `cont^s(b)`, the equivalence `κ(cont^s b − cont^s b') ∈ ℤ` and the values
//! `c_b` — rather than from the crate's charge models, and finds depths by
//! exhaustive search over every sequence of crystal operators.

#![allow(dead_code)]

use std::collections::HashMap;

use aspherical::multipartition::{boxes_equivalent, c_of_box};
use aspherical::parameters::{h_to_s, ExactScalar, HParams, SParams};
use aspherical::rational::to_i64;
use aspherical::{Cell, MultiPartition};

/// A box up to equivalence: `(component, content)`.
type BoxKey = (usize, i64);

/// Crystal data of a Weil-generic point, evaluated exactly and cached per
/// `(component, content)`.
pub struct ExactCrystal {
    h: HParams,
    s: SParams,
    c_values: HashMap<BoxKey, ExactScalar>,
    equivalent: HashMap<(BoxKey, BoxKey), bool>,
    depth_memo: HashMap<MultiPartition, (u64, u64)>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mark {
    Add,
    Remove,
}

impl ExactCrystal {
    pub fn new(h: HParams) -> Self {
        let s = h_to_s(&h).expect("valid parameters");
        Self { h, s, c_values: HashMap::new(), equivalent: HashMap::new(), depth_memo: HashMap::new() }
    }

    fn key(b: &Cell) -> (usize, i64) {
        (b.i, b.content())
    }

    fn c_value(&mut self, b: &Cell) -> ExactScalar {
        let h = &self.h;
        self.c_values.entry(Self::key(b)).or_insert_with(|| c_of_box(b, h)).clone()
    }

    fn equiv(&mut self, b: &Cell, other: &Cell) -> bool {
        let s = &self.s;
        *self.equivalent.entry((Self::key(b), Self::key(other))).or_insert_with(|| boxes_equivalent(b, other, s))
    }

    /// `c_b − c_{b'}` for equivalent boxes (an integer).
    fn c_diff(&mut self, b: &Cell, other: &Cell) -> i64 {
        let d = self.c_value(b).try_sub(&self.c_value(other)).expect("same κ");
        d.as_rational().and_then(to_i64).expect("equivalent boxes differ by an integer")
    }

    /// Signatures of all classes: each is a list of marked boxes in increasing `c_b`.
    fn signatures(&mut self, nu: &MultiPartition) -> Vec<Vec<(Mark, Cell)>> {
        let mut marked: Vec<(Mark, Cell)> = nu.addable_boxes().into_iter().map(|b| (Mark::Add, b)).collect();
        marked.extend(nu.removable_boxes().into_iter().map(|b| (Mark::Remove, b)));
        let mut classes: Vec<Vec<(Mark, Cell)>> = Vec::new();
        'outer: for entry in marked {
            for class in classes.iter_mut() {
                if self.equiv(&class[0].1, &entry.1) {
                    class.push(entry);
                    continue 'outer;
                }
            }
            classes.push(vec![entry]);
        }
        for class in classes.iter_mut() {
            let anchor = class[0].1;
            let mut keyed: Vec<(i64, (Mark, Cell))> = class.iter().map(|&e| (self.c_diff(&e.1, &anchor), e)).collect();
            keyed.sort_by_key(|(k, _)| *k);
            assert!(keyed.windows(2).all(|w| w[0].0 != w[1].0), "degenerate order at {nu}");
            *class = keyed.into_iter().map(|(_, e)| e).collect();
        }
        classes
    }

    /// Cancel `−+` pairs by repeatedly erasing the leftmost adjacent one.
    fn reduce(word: &[(Mark, Cell)]) -> Vec<(Mark, Cell)> {
        let mut w = word.to_vec();
        loop {
            let pos = w.windows(2).position(|p| p[0].0 == Mark::Remove && p[1].0 == Mark::Add);
            match pos {
                Some(k) => {
                    w.remove(k);
                    w.remove(k);
                }
                None => return w,
            }
        }
    }

    /// Every `ẽ_z ν ≠ 0`, one per class.
    pub fn e_moves(&mut self, nu: &MultiPartition) -> Vec<MultiPartition> {
        let mut out = Vec::new();
        for class in self.signatures(nu) {
            if let Some((_, b)) = Self::reduce(&class).into_iter().find(|(m, _)| *m == Mark::Remove) {
                out.push(nu.remove_box(&b).expect("removable"));
            }
        }
        out
    }

    /// Every `f̃_z ν`, one per class.
    pub fn f_moves(&mut self, nu: &MultiPartition) -> Vec<MultiPartition> {
        let mut out = Vec::new();
        for class in self.signatures(nu) {
            if let Some((_, b)) = Self::reduce(&class).into_iter().rev().find(|(m, _)| *m == Mark::Add) {
                out.push(nu.add_box(&b).expect("addable"));
            }
        }
        out
    }

    pub fn is_highest_weight(&mut self, nu: &MultiPartition) -> bool {
        self.e_moves(nu).is_empty()
    }

    /// `(longest, shortest)` lengths of a chain of `ẽ`'s from `ν` to a
    /// highest-weight element, over all orders of application.
    pub fn descent_lengths(&mut self, nu: &MultiPartition) -> (u64, u64) {
        if let Some(&d) = self.depth_memo.get(nu) {
            return d;
        }
        let moves = self.e_moves(nu);
        let result = if moves.is_empty() {
            (0, 0)
        } else {
            let mut longest = 0;
            let mut shortest = u64::MAX;
            for next in moves {
                let (l, s) = self.descent_lengths(&next);
                longest = longest.max(l + 1);
                shortest = shortest.min(s + 1);
            }
            (longest, shortest)
        };
        self.depth_memo.insert(nu.clone(), result);
        result
    }

    /// Depth: the length of the longest nonzero `ẽ_{z_1}⋯ẽ_{z_k} ν`.
    pub fn depth(&mut self, nu: &MultiPartition) -> u64 {
        self.descent_lengths(nu).0
    }
}

/// The `(i, j)` pairs with `i < j < ℓ`.
pub fn index_pairs(ell: usize) -> Vec<(usize, usize)> {
    (0..ell).flat_map(|i| (i + 1..ell).map(move |j| (i, j))).collect()
}

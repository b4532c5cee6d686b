//! Charge models: how boxes group into z-classes and how their c-values compare.

use serde::{Deserialize, Serialize};

use super::Cell;
use crate::error::{Error, Result};
use crate::parameters::{ExactScalar, HyperplaneParams, KappaMode, SParams};
use num_traits::Zero;

use crate::rational::to_i64;

/// Canonical label of a class of equivalent boxes: the smallest component of the
/// class together with the content a box of that component must have to belong
/// to the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ZClass {
    pub component: usize,
    pub content: i64,
}

impl std::fmt::Display for ZClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.component, self.content)
    }
}

impl std::str::FromStr for ZClass {
    type Err = Error;

    /// Parses `component:content`, e.g. `0:-1`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("z-class must be component:content, got {text:?}"));
        let (comp, content) = text.trim().split_once(':').ok_or_else(bad)?;
        Ok(Self {
            component: comp.trim().parse().map_err(|_| bad())?,
            content: content.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// A parameter regime with κ transcendental, seen through the two facts the
/// combinatorics needs: which boxes are equivalent (`κ(cont^s b − cont^s b') ∈ ℤ`)
/// and the integer `c_b − c_{b'}` between equivalent boxes.
pub trait ChargeModel {
    fn ell(&self) -> usize;

    /// The class of `b`; two boxes are equivalent iff their classes coincide.
    fn z_class(&self, b: &Cell) -> ZClass;

    /// The integer `c_b − c_r`, where `r` is the (possibly virtual) box of the
    /// class's canonical component with the class's content. Differences of
    /// offsets of equivalent boxes are their c-differences.
    fn c_offset(&self, b: &Cell) -> i64;

    fn equivalent(&self, b: &Cell, other: &Cell) -> bool {
        self.z_class(b) == self.z_class(other)
    }

    /// `c_b − c_{b'}` when the boxes are equivalent.
    fn c_difference(&self, b: &Cell, other: &Cell) -> Option<i64> {
        self.equivalent(b, other).then(|| self.c_offset(b) - self.c_offset(other))
    }
}

/// Fully generic charges: no two components are linked.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericCharges {
    pub ell: usize,
}

impl ChargeModel for GenericCharges {
    fn ell(&self) -> usize {
        self.ell
    }

    fn z_class(&self, b: &Cell) -> ZClass {
        ZClass { component: b.i, content: b.content() }
    }

    fn c_offset(&self, _b: &Cell) -> i64 {
        0
    }
}

/// On the hyperplane `s_i − s_j = m + t/κ` a box of component `j` with content
/// `c + m` is equivalent to the box of component `i` with content `c`, and
/// `c_{b_i} − c_{b_j} = tℓ − (i − j)`.
impl ChargeModel for HyperplaneParams {
    fn ell(&self) -> usize {
        self.ell
    }

    fn z_class(&self, b: &Cell) -> ZClass {
        if b.i == self.j {
            ZClass { component: self.i, content: b.content() - self.m }
        } else {
            ZClass { component: b.i, content: b.content() }
        }
    }

    fn c_offset(&self, b: &Cell) -> i64 {
        if b.i == self.j {
            -(self.ell as i64) * self.t - (self.j as i64 - self.i as i64)
        } else {
            0
        }
    }
}

/// The charge model read off from explicit charges `s` with κ the transcendental
/// symbol. Components `a < b` are linked when `s_b − s_a = α + γκ⁻¹` with
/// `α, γ ∈ ℤ`; a box of `b` with content `c` then sits in the class of content
/// `c + α` on `a`, with c-offset `ℓγ + a − b`.
#[derive(Clone, Debug)]
pub struct SParamsCharges {
    ell: usize,
    /// For each component: (canonical component, α, γ).
    links: Vec<(usize, i64, i64)>,
}

impl SParamsCharges {
    pub fn new(s: &SParams) -> Result<Self> {
        s.validate()?;
        if s.kappa != ExactScalar::kappa(&KappaMode::Transcendental) {
            return Err(Error::ModelViolation("charge models need κ to be the transcendental symbol".into()));
        }
        let link = |a: usize, b: usize| -> Option<(i64, i64)> {
            let diff = &s.s[b] - &s.s[a];
            if !diff.b().is_zero() {
                return None;
            }
            Some((to_i64(diff.a())?, to_i64(diff.c())?))
        };
        let mut links = Vec::with_capacity(s.ell);
        for b in 0..s.ell {
            let found = (0..b).find_map(|a| link(a, b).map(|(alpha, gamma)| (a, alpha, gamma)));
            links.push(found.unwrap_or((b, 0, 0)));
        }
        Ok(Self { ell: s.ell, links })
    }
}

impl ChargeModel for SParamsCharges {
    fn ell(&self) -> usize {
        self.ell
    }

    fn z_class(&self, b: &Cell) -> ZClass {
        let (root, alpha, _) = self.links[b.i];
        ZClass { component: root, content: b.content() + alpha }
    }

    fn c_offset(&self, b: &Cell) -> i64 {
        let (root, _, gamma) = self.links[b.i];
        self.ell as i64 * gamma + root as i64 - b.i as i64
    }
}

//! The level-ℓ Fock space and its operators `e_z`, `f_z`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::multipartition::{ChargeModel, MultiPartition, ZClass};
use crate::rational::{to_pq, Rational};

/// A finite linear combination of basis vectors `|ν⟩` with rational coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<MultiPartition, Rational>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `|ν⟩`.
    pub fn basis(nu: MultiPartition) -> Self {
        let mut v = Self::zero();
        v.add_term(nu, Rational::one());
        v
    }

    pub fn add_term(&mut self, nu: MultiPartition, coeff: Rational) {
        let entry = self.terms.entry(nu).or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn coefficient(&self, nu: &MultiPartition) -> Rational {
        self.terms.get(nu).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiPartition, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero();
        for (nu, c) in &self.terms {
            out.add_term(nu.clone(), c * q);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (nu, c) in &other.terms {
            out.add_term(nu.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }
}

impl Serialize for FockVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (nu, c) in &self.terms {
            seq.serialize_element(&serde_json::json!({ "nu": nu, "coeff": to_pq(c) }))?;
        }
        seq.end()
    }
}

/// `f_z |ν⟩ = Σ |μ⟩` over all `μ` obtained from `ν` by adding a z-box.
pub fn fock_f<M: ChargeModel + ?Sized>(v: &FockVector, z: &ZClass, model: &M) -> FockVector {
    let mut out = FockVector::zero();
    for (nu, c) in v.terms() {
        for b in nu.addable_boxes() {
            if model.z_class(&b) == *z {
                out.add_term(nu.add_box(&b).expect("addable box"), c.clone());
            }
        }
    }
    out
}

/// `e_z |ν⟩ = Σ |μ⟩` over all `μ` obtained from `ν` by removing a z-box.
pub fn fock_e<M: ChargeModel + ?Sized>(v: &FockVector, z: &ZClass, model: &M) -> FockVector {
    let mut out = FockVector::zero();
    for (nu, c) in v.terms() {
        for b in nu.removable_boxes() {
            if model.z_class(&b) == *z {
                out.add_term(nu.remove_box(&b).expect("removable box"), c.clone());
            }
        }
    }
    out
}

//! Supports of simple modules: the closed-form depth `n − r(r + |m|)`, compared
//! with descent in the crystal, and the singular (finite-support) ℓ-partitions.
//!
//! Run with `cargo run --example supports`.

use std::collections::BTreeMap;

use aspherical::crystal::{depth_by_descent, Convention};
use aspherical::parameters::enumerate_aspherical_hyperplanes;
use aspherical::supports::{possible_support_dims, singular_family, supports_table};

fn main() -> aspherical::Result<()> {
    let n = 6;
    for hp in enumerate_aspherical_hyperplanes(2, n)?.into_iter().filter(|hp| hp.t.abs() <= 1 && hp.m.abs() <= 1) {
        let rows = supports_table(&hp, n)?;
        let mut histogram: BTreeMap<u64, usize> = BTreeMap::new();
        for row in &rows {
            assert_eq!(row.depth, depth_by_descent(&row.nu, &hp, Convention::Printed)?);
            *histogram.entry(row.support_dim).or_default() += 1;
        }
        let singular: Vec<String> = singular_family(&hp, n).iter().map(|nu| nu.to_string()).collect();
        println!(
            "{hp}: possible dims {:?}, simples per dim {histogram:?}, singular {singular:?}",
            possible_support_dims(&hp, n)
        );
    }
    Ok(())
}

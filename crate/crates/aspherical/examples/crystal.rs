//! The crystal on ℓ-partitions at a point of an aspherical hyperplane.
//!
//! Prints the z-signatures of one ℓ-partition, applies `ẽ_z` and `f̃_z`, descends
//! to a highest-weight element, and checks one Fock-space commutator.
//!
//! Run with `cargo run --example crystal`.

use aspherical::crystal::{
    depth_by_descent, e_tilde, f_tilde, fock_e, fock_f, is_highest_weight, reduce_signature, signature, z_classes,
    Convention, FockVector,
};
use aspherical::{HyperplaneParams, MultiPartition};

fn main() -> aspherical::Result<()> {
    let hp = HyperplaneParams::new(2, 0, 1, -1, 0)?;
    let nu: MultiPartition = "((2,2),(2))".parse()?;
    println!("ν = {nu} on the hyperplane {hp}");

    for z in z_classes(&nu, &hp) {
        let sig = signature(&nu, &z, &hp, Convention::Printed)?;
        let show = |x: Option<MultiPartition>| x.map_or("0".to_string(), |m| m.to_string());
        println!(
            "  z = {z}: signature {sig}, reduced {}, ẽ ν = {}, f̃ ν = {}",
            reduce_signature(&sig),
            show(e_tilde(&nu, &z, &hp, Convention::Printed)?),
            show(f_tilde(&nu, &z, &hp, Convention::Printed)?),
        );
    }

    let mut current = nu.clone();
    'descend: while !is_highest_weight(&current, &hp, Convention::Printed)? {
        for z in z_classes(&current, &hp) {
            if let Some(next) = e_tilde(&current, &z, &hp, Convention::Printed)? {
                println!("  ẽ_{z}: {current} → {next}");
                current = next;
                continue 'descend;
            }
        }
    }
    println!("highest weight reached: {current}; depth {}", depth_by_descent(&nu, &hp, Convention::Printed)?);

    // (e_z f_z − f_z e_z)|ν⟩ = (#addable z-boxes − #removable z-boxes)|ν⟩.
    let z = z_classes(&nu, &hp)[0];
    let basis = FockVector::basis(nu.clone());
    let ef = fock_e(&fock_f(&basis, &z, &hp), &z, &hp);
    let fe = fock_f(&fock_e(&basis, &z, &hp), &z, &hp);
    let commutator = ef.sub(&fe);
    println!("[e_{z}, f_{z}]|ν⟩ = {}·|ν⟩", commutator.coefficient(&nu));
    Ok(())
}

//! Chains of two-sided ideals and the simples killed by the averaging idempotent.
//!
//! Run with `cargo run --example ideal_chains`.

use aspherical::ideals::{annihilated_simples, cherednik_chain, e_membership, grass_chain, IdealChain};
use aspherical::HyperplaneParams;

fn show(chain: &IdealChain) -> aspherical::Result<()> {
    println!("{} — {} ideals (p = {}, max{{t,0}} = {})", chain.algebra, chain.len(), chain.p_grass, chain.p_stated);
    for ideal in &chain.ideals {
        let slice = ideal.slice.map_or("unit".to_string(), |x| format!("D_{}(Gr({},{}))", x.lambda, x.v, x.w));
        let leaf = ideal.leaf_dim.map_or("-".to_string(), |d| d.to_string());
        println!("  s = {}: {slice:<16} leaf dim {leaf:<3} e ∈ J_s: {}", ideal.s, e_membership(chain, ideal.s)?);
    }
    Ok(())
}

fn main() -> aspherical::Result<()> {
    for lambda in [0, -1, -2, -4, -5] {
        show(&grass_chain(2, 5, lambda)?)?;
    }
    let hp = HyperplaneParams::new(2, 0, 1, 0, 1)?;
    show(&cherednik_chain(&hp, 6)?)?;
    let killed: Vec<String> = annihilated_simples(&hp, 6)?.iter().map(|nu| nu.to_string()).collect();
    println!("simples killed by e: {killed:?}");
    Ok(())
}

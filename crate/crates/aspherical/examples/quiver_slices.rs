//! Root systems of quivers and slice quivers.
//!
//! Classifies a few dimension vectors of `Ã_2`, evaluates the Crawley-Boevey
//! flatness criterion for Grassmannian data, and computes the slices of the
//! Cherednik quiver variety along an aspherical hyperplane.
//!
//! Run with `cargo run --example quiver_slices`.

use aspherical::quiver::{
    cherednik_decompositions, cherednik_slice, classify_root, cyclic_quiver, grassmann_slice, moment_flat,
    one_vertex_quiver, p_of,
};
use aspherical::rational::int;
use aspherical::HyperplaneParams;

fn main() -> aspherical::Result<()> {
    let q = cyclic_quiver(3);
    for v in [[1, 1, 1], [1, 2, 1], [2, 2, 1], [1, 3, 1], [2, 0, 2]] {
        println!("Ã_2, v = {v:?}: {:?}, p = {}", classify_root(&q, &v)?, p_of(&q, &v)?);
    }

    let point = one_vertex_quiver();
    for (v, w) in [(1, 3), (2, 4), (2, 3), (1, 0)] {
        println!("T*R(v = {v}, w = {w}) → gl_v flat: {}", moment_flat(&point, &[v], &[w])?);
    }

    for s in 0..=2 {
        let sq = grassmann_slice(2, 5, &int(0), s)?;
        println!("Gr(2,5), s = {s}: v̂ = {}, ŵ = {}, λ̂ = {}", sq.vhat[0], sq.what[0], sq.lambda_hat[0]);
    }

    let hp = HyperplaneParams::new(3, 0, 2, -1, 1)?;
    let n = 6;
    for (s, dec) in cherednik_decompositions(&hp, n)?.iter().enumerate() {
        let sq = cherednik_slice(&hp, n, s as u64)?;
        println!(
            "{hp}, n = {n}, s = {s}: (v″, v′×s) = ({:?}, {:?}) → v̂ = {}, ŵ = {}, λ̂ = {}",
            dec.v0, dec.parts, sq.vhat[0], sq.what[0], sq.lambda_hat[0]
        );
    }
    Ok(())
}

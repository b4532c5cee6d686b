//! Parameter systems and the aspherical locus.
//!
//! Converts one point between the `(c0, d)`, `(κ, h)` and `(κ, s)` systems, tests a
//! few points for asphericity, and lists the aspherical hyperplanes for `G(2,1,4)`.
//!
//! Run with `cargo run --example parameters`.

use aspherical::parameters::{
    c_to_h, c_to_s, enumerate_aspherical_hyperplanes, is_aspherical_c, lambda_classical, lambda_quantum, s_to_c,
    CParams, ExactScalar, KappaMode,
};

fn q(text: &str) -> ExactScalar {
    ExactScalar::parse(text, &KappaMode::Transcendental).expect("valid scalar")
}

fn main() -> aspherical::Result<()> {
    let point = CParams::new(2, q("-1"), vec![q("0"), q("-2")])?;
    let h = c_to_h(&point)?;
    let s = c_to_s(&point)?;
    println!("c0 = {}, d = {:?}", point.c0, point.d.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("κ = {}, h = {:?}", h.kappa, h.h.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    println!("κ = {}, s = {:?}", s.kappa, s.s.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    assert_eq!(s_to_c(&s)?, point);

    let classical: Vec<String> = lambda_classical(&point)?.iter().map(|x| x.to_string()).collect();
    let quantum: Vec<String> = lambda_quantum(&point)?.iter().map(|x| x.to_string()).collect();
    println!("λ^c = {classical:?}\nλ^q = {quantum:?}");

    for (c0, d) in [("-1/2", ["0", "0"]), ("-1/5", ["0", "0"]), ("k", ["0", "1 - 2k"])] {
        let p = CParams::new(2, q(c0), d.iter().map(|x| q(x)).collect())?;
        match is_aspherical_c(&p, 4)? {
            Some(w) => println!("c0 = {c0}, d = {d:?}: aspherical, witness {w:?}"),
            None => println!("c0 = {c0}, d = {d:?}: spherical"),
        }
    }

    println!("aspherical hyperplanes (i,j,m,t) for ℓ = 2, n = 4:");
    for hp in enumerate_aspherical_hyperplanes(2, 4)? {
        println!("  {hp}   k = {:>3}   q = {}", hp.k(), hp.q(4));
    }
    Ok(())
}

//! Exact scalars, the parameter systems of `H_c(G(ℓ,1,n))` and the aspherical locus.

mod aspherical;
mod hyperplane;
mod scalar;
mod systems;

pub use aspherical::{
    aspherical_witnesses_c, aspherical_witnesses_s, dg_k_bound, dg_triples, enumerate_aspherical_hyperplanes,
    is_aspherical_c, is_aspherical_s, is_enumerated, CWitness, SWitness,
};
pub use hyperplane::{q_bound, sqrt_floor_shift, HyperplaneParams};
pub use scalar::{ExactScalar, KappaMode};
pub use systems::{
    c_to_h, c_to_s, h_to_c, h_to_s, lambda_classical, lambda_quantum, lambda_quantum_sum, s_to_c, s_to_h, CParams,
    HParams, SParams,
};

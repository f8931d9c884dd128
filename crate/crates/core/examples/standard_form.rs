//! The relative modular operator and the spatial derivative acting on the
//! Hilbert–Schmidt space, and the identity relating their moments.

use modlp::random::{random_hs_vector, random_state};
use modlp::standard_form::{functional_of_vector, r_phi, vector_rep};
use modlp::{HSVector, RelativeModular, SpatialDerivative};

fn main() -> modlp::Result<()> {
    let sigma = random_state(3, 51);
    let phi = random_state(3, 52);
    let dm = RelativeModular::new(sigma, phi.clone())?;
    let k = HSVector::new(random_hs_vector(3, 53))?;

    // Δ^{1/2} Δ^{1/2} = Δ
    let half = dm.apply(0.5, &dm.apply(0.5, &k));
    let full = dm.apply(1.0, &k);
    println!("group law error: {:.2e}", modlp::matrix::frobenius(&(half.matrix() - full.matrix())));

    // the vector representative of φ is fixed by Δ_{φ,φ}^{it}-type powers
    let xi = vector_rep(&phi);
    let self_dm = RelativeModular::new(phi.clone(), phi.clone())?;
    let moved = self_dm.apply(0.37, &xi);
    println!("Δ_φ^z ξ_φ = ξ_φ error: {:.2e}", modlp::matrix::frobenius(&(moved.matrix() - xi.matrix())));

    let h = HSVector::new(random_hs_vector(3, 54))?;
    let sd = SpatialDerivative::new(h, phi.clone())?;
    let dm_omega = RelativeModular::new(sd.omega.clone(), phi.clone())?;
    for gamma in [-0.5, -0.25, 0.3, 0.5] {
        let lhs = sd.apply(gamma, &k).norm();
        let rhs = dm_omega.apply(gamma, &k.conj()).norm();
        println!("gamma {gamma:>5}: ||Δ(h/φ)^γ k|| = {lhs:.14}, ||Δ_(ω,φ)^γ k*|| = {rhs:.14}");
    }

    let (_, bound) = r_phi(&k, &phi)?;
    let omega_k = functional_of_vector(&k);
    println!("ω_k ≤ C φ with least C = {bound:.10} (ω_k(1) = {:.10})", omega_k.trace());
    println!("quadratic form (k, Δ(h/φ) k) = {:.12}", sd.quadratic_form(&k)?);
    Ok(())
}

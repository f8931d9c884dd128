//! Weighted noncommutative Lp norms with respect to a positive functional φ.
//!
//! Three families are provided:
//!
//! * Kosaki norms on `L_p(M, φ) = h_φ^{1/2q} L_p(M) h_φ^{1/2q}`,
//!   `‖h_φ^{1/2q} x h_φ^{1/2q}‖_{p,φ} = ‖x‖_p`.
//! * Araki–Masuda norms on `L_2(M)`, defined variationally through the
//!   relative modular operator (a supremum over states for `p ≥ 2`, an
//!   infimum for `p < 2`).
//! * BST norms of vectors, with `‖k‖^{BST}_{p,φ} = ‖k*‖^{AM}_{p,φ}` for
//!   faithful φ and a support rule for non-faithful φ.
//!
//! Both Araki–Masuda branches collapse to one closed form,
//!
//! ```text
//! ‖k‖^{AM}_{p,φ} = ‖k h_φ^{1/p − 1/2}‖_p ,
//! ```
//!
//! which follows from the polar decomposition `k = u h_ρ^{1/p} h_φ^{1/2−1/p}`
//! with `‖k‖^{AM}_{p,φ} = ρ(1)^{1/p}`. For `p ≥ 2` the supremum is attained
//! at `σ ∝ |m*|^p` with `m = k h_φ^{1/p−1/2}` (Hölder with equality); for
//! `p < 2` the infimum is approached along the same direction. The
//! variational evaluator in [`crate::variational`] and the Kosaki route are
//! the two independent checks of this formula.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{
    conjugate_exponent, frobenius, polar_right, recip, schatten_norm, ComplexMatrix, PartialIsometry,
    PositiveFunctional,
};
use crate::standard_form::{functional_of_vector, support_residual, HSVector, RelativeModular, MAJORIZATION_TOL};

/// Relative tolerance for Kosaki membership `h = φ^{1/2q} x φ^{1/2q}`.
pub const KOSAKI_MEMBERSHIP_TOL: f64 = 1e-9;

fn check_exponent(p: f64) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    Ok(())
}

fn check_dims(k: &HSVector, phi: &PositiveFunctional) -> Result<()> {
    if k.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: phi.dim(), got: k.dim() });
    }
    Ok(())
}

fn require_faithful(phi: &PositiveFunctional) -> Result<()> {
    if !phi.is_faithful() {
        return Err(Error::NotFaithful { rank: phi.rank(), dim: phi.dim() });
    }
    Ok(())
}

/// `m h_φ^{1/p − 1/2}` with pseudo-inverse powers.
fn weighted(m: &ComplexMatrix, phi: &PositiveFunctional, p: f64) -> ComplexMatrix {
    m * phi.power(recip(p) - 0.5)
}

/// Kosaki norm of `h ∈ L_p(M, φ)`, `p ∈ (1, ∞)`.
pub fn kosaki_norm(h: &ComplexMatrix, phi: &PositiveFunctional, p: f64) -> Result<f64> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::InvalidExponent(p));
    }
    if !h.is_square() {
        return Err(Error::NotSquare(h.nrows(), h.ncols()));
    }
    if h.nrows() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: phi.dim(), got: h.nrows() });
    }
    let half_q = 0.5 / conjugate_exponent(p);
    let x = phi.power(-half_q) * h * phi.power(-half_q);
    let back = phi.power(half_q) * &x * phi.power(half_q);
    let scale = frobenius(h);
    let residual = if scale > 0.0 { frobenius(&(back - h)) / scale } else { 0.0 };
    if residual > KOSAKI_MEMBERSHIP_TOL {
        return Err(Error::NotInSpace(residual));
    }
    schatten_norm(&x, p)
}

/// Araki–Masuda norm `‖k‖^{AM}_{p,φ}` for faithful φ, `p ∈ [1, ∞]`.
pub fn am_norm(k: &HSVector, phi: &PositiveFunctional, p: f64) -> Result<f64> {
    check_exponent(p)?;
    check_dims(k, phi)?;
    require_faithful(phi)?;
    schatten_norm(&weighted(k.matrix(), phi, p), p)
}

/// Polar decomposition `k = u ρ^{1/p}` in `L_p^{AM}(M, φ)`.
#[derive(Debug, Clone)]
pub struct AMPolarDecomposition {
    pub u: PartialIsometry,
    pub rho: PositiveFunctional,
    pub p: f64,
}

impl AMPolarDecomposition {
    /// `ρ(1)^{1/p}`, the norm of the decomposed vector.
    pub fn norm(&self) -> f64 {
        self.rho.trace().powf(1.0 / self.p)
    }

    /// `u h_ρ^{1/p}`.
    pub fn left_factor(&self) -> ComplexMatrix {
        &self.u.matrix * self.rho.power(1.0 / self.p)
    }

    /// `u h_ρ^{1/p} h_φ^{1/2 − 1/p}`, which recovers `k` for faithful φ.
    pub fn reconstruct(&self, phi: &PositiveFunctional) -> ComplexMatrix {
        self.left_factor() * phi.power(0.5 - 1.0 / self.p)
    }
}

/// Polar pieces of `m = k h_φ^{1/p−1/2} = u |m|` with `ρ = |m|^p`.
fn lp_polar(m: &ComplexMatrix, p: f64) -> Result<AMPolarDecomposition> {
    let (u, abs) = polar_right(m)?;
    let rho = PositiveFunctional::from_eigen(
        abs.eigenvalues().iter().map(|&s| s.powf(p)).collect(),
        abs.eigenvectors().clone(),
    );
    Ok(AMPolarDecomposition { u, rho, p })
}

/// AM polar decomposition of `k` for faithful φ and `p ∈ [1, ∞)`:
/// `k h_φ^{1/p − 1/2} = u h_ρ^{1/p}`. For `p ≥ 2` this is the form
/// `k = u h_ρ^{1/p} h_φ^{1/2−1/p}`; for `p ≤ 2` it is the `L_p(M)` polar
/// decomposition that defines ρ, applied to `k` itself.
pub fn am_polar(k: &HSVector, phi: &PositiveFunctional, p: f64) -> Result<AMPolarDecomposition> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidExponent(p));
    }
    check_dims(k, phi)?;
    require_faithful(phi)?;
    if k.is_zero() {
        return Err(Error::ZeroVector);
    }
    lp_polar(&weighted(k.matrix(), phi, p), p)
}

/// BST weighted norm of the vector `k`; `f64::INFINITY` when `p > 2` and
/// `s(ω_k) ≰ s(φ)`. φ need not be faithful.
pub fn bst_norm(k: &HSVector, phi: &PositiveFunctional, p: f64) -> Result<f64> {
    check_exponent(p)?;
    check_dims(k, phi)?;
    if p == 2.0 {
        return Ok(k.norm());
    }
    if p > 2.0 && support_residual(k.matrix(), phi) > MAJORIZATION_TOL {
        return Ok(f64::INFINITY);
    }
    // for p > 2 the pseudo-inverse power restricts to s(φ) M s(φ)
    schatten_norm(&weighted(&k.matrix().adjoint(), phi, p), p)
}

/// The `L_2` pairing `(k, k') = Tr(k* k')` that realizes the AM duality.
pub fn am_duality_pair(k: &HSVector, kprime: &HSVector) -> Complex64 {
    k.inner(kprime)
}

/// The unique norming element `k' = ρ(1)^{−1/q} u ρ^{1/q}` of the unit ball
/// of `L_q^{AM}(M, φ)`, realized in `L_2` as
/// `ρ(1)^{−1/q} u h_ρ^{1/q} h_φ^{1/2 − 1/q}`.
pub fn dual_optimizer(k: &HSVector, phi: &PositiveFunctional, p: f64) -> Result<HSVector> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::InvalidExponent(p));
    }
    let polar = am_polar(k, phi, p)?;
    let q = conjugate_exponent(p);
    let scale = polar.rho.trace().powf(-1.0 / q);
    let m = (&polar.u.matrix * polar.rho.power(1.0 / q) * phi.power(0.5 - 1.0 / q)).scale(scale);
    HSVector::new(m)
}

/// Output of [`sigma_eps_witness`].
#[derive(Debug, Clone)]
pub struct WitnessResult {
    /// The feasible state `σ_ε`.
    pub sigma: PositiveFunctional,
    /// `‖Δ_{σ_ε,φ}^{1/2−1/p} k*‖_2`.
    pub value: f64,
    /// `ε^{1/2−1/p} ρ(1)^{1/p}`, with `ε = 1` in the edge case.
    pub predicted: f64,
    /// `ρ(1)`.
    pub rho_mass: f64,
    /// The mixing weight actually used (1 when no complement exists).
    pub eps: f64,
}

/// Explicit feasible point for the BST infimum at `1 < p ≤ 2`.
///
/// With `k* h_φ^{1/p−1/2} = u h_ρ^{1/p}` and `ρ_u = u h_ρ u*`, the state
/// `σ_ε = ε ρ_u/ρ(1) + (1 − ε) σ_0` (σ_0 uniform on `s(ω_{k*}) − s(ρ_u)`)
/// gives objective value exactly `ε^{1/2−1/p} ρ(1)^{1/p}`. When
/// `s(ρ_u) = s(ω_{k*})`, which always happens for faithful φ, there is no
/// room for σ_0 and `σ = ρ_u/ρ(1)` is returned with `ε` ignored.
pub fn sigma_eps_witness(k: &HSVector, phi: &PositiveFunctional, p: f64, eps: f64) -> Result<WitnessResult> {
    if !(p > 1.0 && p <= 2.0) {
        return Err(Error::InvalidExponent(p));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(Error::InvalidEpsilon(eps));
    }
    check_dims(k, phi)?;
    if k.is_zero() {
        return Err(Error::ZeroVector);
    }
    let kstar = k.conj();
    let polar = lp_polar(&weighted(kstar.matrix(), phi, p), p)?;
    let rho_mass = polar.rho.trace();
    if rho_mass <= 0.0 {
        // k* h_φ^{1/p−1/2} = 0: the weighted norm vanishes
        return Err(Error::ZeroVector);
    }
    let u = &polar.u.matrix;
    let rho_u = polar.rho.conjugated(u)?;
    let required = functional_of_vector(&kstar).support();
    let complement = &required - rho_u.support();
    let sigma0 = PositiveFunctional::uniform_on(&complement)?;

    let (sigma, eps_used) = if sigma0.rank() == 0 {
        (rho_u.normalized()?, 1.0)
    } else {
        let mix = rho_u.density().scale(eps / rho_mass) + sigma0.density().scale(1.0 - eps);
        (PositiveFunctional::new(mix)?, eps)
    };

    let exponent = 0.5 - 1.0 / p;
    let dm = RelativeModular::new(sigma.clone(), phi.clone())?;
    let value = dm.apply(exponent, &kstar).norm();
    let predicted = eps_used.powf(exponent) * rho_mass.powf(1.0 / p);
    Ok(WitnessResult { sigma, value, predicted, rho_mass, eps: eps_used })
}

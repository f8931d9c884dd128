//! Sandwiched Rényi divergences
//!
//! ```text
//! D_α(ψ‖φ) = 1/(α−1) · log Tr (h_φ^{(1−α)/2α} h_ψ h_φ^{(1−α)/2α})^α
//! ```
//!
//! for `α ∈ [1/2, 1) ∪ (1, ∞]`, in nats. Two routes are implemented: the
//! trace formula above and the weighted-norm route
//! `2α/(α−1) · log ‖h_ψ^{1/2}‖^{BST}_{2α,φ}`. They share no intermediate
//! matrices (the trace route diagonalizes the sandwich, the norm route takes
//! singular values of `h_ψ^{1/2} h_φ^{1/2α − 1/2}`), so their agreement is
//! a real check.
//!
//! Support conventions: for `α > 1` the value is `+∞` unless
//! `s(ψ) ≤ s(φ)`; for `α < 1` it is `+∞` when `s(ψ) ⊥ s(φ)`, i.e. when
//! `Tr Q_α = 0`.

use crate::error::{Error, Result};
use crate::matrix::{herm_eig, op_norm, PositiveFunctional};
use crate::standard_form::vector_rep;
use crate::weighted_lp::bst_norm;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    TraceFormula,
    NormRoute,
}

impl Route {
    pub fn as_str(self) -> &'static str {
        match self {
            Route::TraceFormula => "trace_formula",
            Route::NormRoute => "norm_route",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DivergenceValue {
    /// Finite value or `f64::INFINITY`.
    pub value: f64,
    pub alpha: f64,
    pub route: Route,
}

/// Accepts `[1/2, 1) ∪ (1, ∞]`.
pub fn check_alpha(alpha: f64) -> Result<()> {
    if alpha.is_nan() || alpha < 0.5 || alpha == 1.0 {
        return Err(Error::InvalidAlpha(alpha));
    }
    Ok(())
}

fn check_pair(psi: &PositiveFunctional, phi: &PositiveFunctional) -> Result<()> {
    if psi.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: phi.dim(), got: psi.dim() });
    }
    if !psi.is_state() {
        return Err(Error::NotAState(psi.trace()));
    }
    Ok(())
}

/// `s(ψ) ⊥ s(φ)`, decided by `‖P_φ h_ψ P_φ‖_op ≤ 1e-10 · Tr h_ψ`.
fn orthogonal_supports(psi: &PositiveFunctional, phi: &PositiveFunctional) -> bool {
    let p = phi.support();
    op_norm(&(&p * psi.density() * &p)) <= 1e-10 * psi.trace()
}

/// `Q_α = Tr (h_φ^{(1−α)/2α} h_ψ h_φ^{(1−α)/2α})^α` for finite α.
/// Negative powers of `h_φ` are pseudo-inverse powers; support checks are
/// the caller's job.
pub fn sandwiched_q(psi: &PositiveFunctional, phi: &PositiveFunctional, alpha: f64) -> Result<f64> {
    check_alpha(alpha)?;
    if alpha.is_infinite() {
        return Err(Error::InvalidAlpha(alpha));
    }
    if psi.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: phi.dim(), got: psi.dim() });
    }
    let side = phi.power((1.0 - alpha) / (2.0 * alpha));
    let sandwich = PositiveFunctional::new(&side * psi.density() * &side)?;
    Ok(sandwich.eigenvalues().iter().filter(|&&l| l > 0.0).map(|l| l.powf(alpha)).sum())
}

/// Sandwiched Rényi divergence by the trace formula (`α = ∞` gives `D_max`).
pub fn d_renyi(psi: &PositiveFunctional, phi: &PositiveFunctional, alpha: f64) -> Result<DivergenceValue> {
    check_alpha(alpha)?;
    check_pair(psi, phi)?;
    let out = |value| Ok(DivergenceValue { value, alpha, route: Route::TraceFormula });
    if alpha > 1.0 && !psi.support_within(phi) {
        return out(f64::INFINITY);
    }
    if alpha < 1.0 && orthogonal_supports(psi, phi) {
        return out(f64::INFINITY);
    }
    if alpha.is_infinite() {
        let side = phi.power(-0.5);
        let e = herm_eig(&(&side * psi.density() * &side))?;
        return out(e.values[0].ln());
    }
    let q = sandwiched_q(psi, phi, alpha)?;
    if q <= 0.0 {
        return out(f64::INFINITY);
    }
    out(q.ln() / (alpha - 1.0))
}

/// The same divergence through the BST norm of the vector representative
/// `h_ψ^{1/2}` at `p = 2α`.
pub fn d_renyi_norm_route(psi: &PositiveFunctional, phi: &PositiveFunctional, alpha: f64) -> Result<DivergenceValue> {
    check_alpha(alpha)?;
    check_pair(psi, phi)?;
    let out = |value| Ok(DivergenceValue { value, alpha, route: Route::NormRoute });
    if alpha < 1.0 && orthogonal_supports(psi, phi) {
        return out(f64::INFINITY);
    }
    let norm = bst_norm(&vector_rep(psi), phi, 2.0 * alpha)?;
    if norm.is_infinite() {
        return out(f64::INFINITY);
    }
    if norm <= 0.0 {
        return out(f64::INFINITY);
    }
    let factor = if alpha.is_infinite() { 2.0 } else { 2.0 * alpha / (alpha - 1.0) };
    out(factor * norm.ln())
}

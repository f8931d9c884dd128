//! The standard form of the matrix algebra: `M` acts on the Hilbert–Schmidt
//! space `L_2(M)` by left multiplication, the positive cone is the PSD
//! matrices and the modular conjugation is `J k = k*`.
//!
//! Operators on `L_2(M)` such as the relative modular operator are never
//! materialized as `d² × d²` matrices. They act by two-sided
//! multiplication, e.g. `Δ_{σ,φ}^z k = h_σ^z k h_φ^{-z}`.
//!
//! Commutant vector functionals `ω'_k(r(a)) = (k, k a)` have density `k* k`,
//! so they are represented as [`functional_of_vector`] of `J k`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{frobenius, identity, op_norm, ComplexMatrix, PositiveFunctional};

/// An element of `L_2(M)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HSVector(ComplexMatrix);

impl HSVector {
    pub fn new(matrix: ComplexMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare(matrix.nrows(), matrix.ncols()));
        }
        Ok(Self(matrix))
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    /// Modular conjugation `J k = k*`.
    pub fn conj(&self) -> Self {
        Self(self.0.adjoint())
    }

    /// `(self, other) = Tr(self* other)`, antilinear in the first slot.
    pub fn inner(&self, other: &HSVector) -> Complex64 {
        self.0.iter().zip(other.0.iter()).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn norm(&self) -> f64 {
        frobenius(&self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|z| *z == Complex64::new(0.0, 0.0))
    }
}

impl From<HSVector> for ComplexMatrix {
    fn from(v: HSVector) -> Self {
        v.0
    }
}

/// Canonical vector representative `h_ψ^{1/2}` in the positive cone.
pub fn vector_rep(psi: &PositiveFunctional) -> HSVector {
    HSVector(psi.power(0.5))
}

/// Vector functional `ω_k(a) = (k, a k) = Tr(a k k*)`, density `k k*`.
pub fn functional_of_vector(k: &HSVector) -> PositiveFunctional {
    PositiveFunctional::new(k.matrix() * k.matrix().adjoint()).expect("k k* is PSD")
}

/// Relative modular operator `Δ_{σ,φ}`.
#[derive(Debug, Clone)]
pub struct RelativeModular {
    pub sigma: PositiveFunctional,
    pub phi: PositiveFunctional,
}

impl RelativeModular {
    pub fn new(sigma: PositiveFunctional, phi: PositiveFunctional) -> Result<Self> {
        if sigma.dim() != phi.dim() {
            return Err(Error::DimensionMismatch { expected: phi.dim(), got: sigma.dim() });
        }
        Ok(Self { sigma, phi })
    }

    /// `Δ_{σ,φ}^z k = h_σ^z k h_φ^{-z}`; pseudo-inverse powers, so supports
    /// are always applied.
    pub fn apply(&self, z: f64, k: &HSVector) -> HSVector {
        HSVector(self.sigma.power(z) * k.matrix() * self.phi.power(-z))
    }
}

pub fn rel_modular_apply(dm: &RelativeModular, z: f64, k: &HSVector) -> HSVector {
    dm.apply(z, k)
}

/// Spatial derivative `Δ(h/φ) = J Δ_{ω,φ} J`, where `ω = ω'_h` is the
/// commutant functional of `h` with density `h* h`.
#[derive(Debug, Clone)]
pub struct SpatialDerivative {
    pub h: HSVector,
    pub phi: PositiveFunctional,
    pub omega: PositiveFunctional,
}

impl SpatialDerivative {
    pub fn new(h: HSVector, phi: PositiveFunctional) -> Result<Self> {
        if h.dim() != phi.dim() {
            return Err(Error::DimensionMismatch { expected: phi.dim(), got: h.dim() });
        }
        let omega = functional_of_vector(&h.conj());
        Ok(Self { h, phi, omega })
    }

    /// `Δ(h/φ)^γ k = h_φ^{-γ} k h_ω^{γ}`.
    pub fn apply(&self, gamma: f64, k: &HSVector) -> HSVector {
        HSVector(self.phi.power(-gamma) * k.matrix() * self.omega.power(gamma))
    }

    /// The quadratic form `(k, Δ(h/φ) k) = ‖R^φ(k)* h‖²`, evaluated through
    /// the bounded operator `R^φ(k) = r(y_k)`.
    pub fn quadratic_form(&self, k: &HSVector) -> Result<f64> {
        let (y, _) = r_phi(k, &self.phi)?;
        // R^φ(k)* h = h y_k* s(φ)
        let v = self.h.matrix() * y.adjoint() * self.phi.support();
        Ok(frobenius(&v).powi(2))
    }
}

pub fn spatial_apply(sd: &SpatialDerivative, gamma: f64, k: &HSVector) -> HSVector {
    sd.apply(gamma, k)
}

/// Majorization residual tolerance: `‖(1 − s(φ)) k‖_2 ≤ 1e-10 ‖k‖_2`.
pub const MAJORIZATION_TOL: f64 = 1e-10;

/// Relative residual `‖(1 − s(φ)) k‖_2 / ‖k‖_2` (zero for `k = 0`).
pub fn support_residual(k: &ComplexMatrix, phi: &PositiveFunctional) -> f64 {
    let n = frobenius(k);
    if n == 0.0 {
        return 0.0;
    }
    let complement = identity(phi.dim()) - phi.support();
    frobenius(&(complement * k)) / n
}

/// The operator `R^φ(k): a h_φ^{1/2} ↦ a k` as right multiplication by
/// `y_k = h_φ^{-1/2} k`. Returns `y_k` and the least majorization constant
/// `C_k = ‖y_k‖²_op` with `ω_k ≤ C_k φ`.
pub fn r_phi(k: &HSVector, phi: &PositiveFunctional) -> Result<(ComplexMatrix, f64)> {
    if k.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: phi.dim(), got: k.dim() });
    }
    let residual = support_residual(k.matrix(), phi);
    if residual > MAJORIZATION_TOL {
        return Err(Error::NotMajorized(residual));
    }
    let y = phi.power(-0.5) * k.matrix();
    let bound = op_norm(&y).powi(2);
    Ok((y, bound))
}

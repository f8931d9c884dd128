//! Dense complex matrices: Hermitian eigendecomposition, support-aware
//! fractional powers, right polar decomposition and Schatten norms.
//!
//! Every positive operator that enters the weighted norms is a
//! [`PositiveFunctional`], which keeps its eigendecomposition around so that
//! all powers `h^t` are scalar operations on cached eigenvalues.
//!
//! Rank decisions use one rule throughout: an eigenvalue (or singular value)
//! `λ` is retained iff `λ > d · ε · λ_max`, where `ε` is machine epsilon.
//! Everything below the cutoff is exactly zero, so supports are projections
//! and negative powers are pseudo-inverse powers on the support.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense `rows × cols` complex matrix.
pub type ComplexMatrix = DMatrix<Complex64>;

const HERMITICITY_TOL: f64 = 1e-10;
const EIGEN_MAX_ITER: usize = 100_000;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn identity(d: usize) -> ComplexMatrix {
    ComplexMatrix::identity(d, d)
}

pub fn zeros(rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::zeros(rows, cols)
}

/// Real diagonal matrix.
pub fn diag(values: &[f64]) -> ComplexMatrix {
    let d = values.len();
    ComplexMatrix::from_fn(d, d, |i, j| if i == j { c(values[i], 0.0) } else { c(0.0, 0.0) })
}

/// Matrix unit `E_{ij}` in dimension `d`.
pub fn matrix_unit(d: usize, i: usize, j: usize) -> ComplexMatrix {
    let mut m = zeros(d, d);
    m[(i, j)] = c(1.0, 0.0);
    m
}

/// Build a matrix from real row-major data.
pub fn from_real_rows(rows: &[&[f64]]) -> ComplexMatrix {
    let r = rows.len();
    let cols = rows.first().map_or(0, |row| row.len());
    ComplexMatrix::from_fn(r, cols, |i, j| c(rows[i][j], 0.0))
}

/// Kronecker product `a ⊗ b`; the second factor is the fast index.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    a.kronecker(b)
}

pub fn trace(a: &ComplexMatrix) -> Complex64 {
    a.trace()
}

/// Hilbert–Schmidt norm `sqrt(Tr a* a)`.
pub fn frobenius(a: &ComplexMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest singular value.
pub fn op_norm(a: &ComplexMatrix) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    singular_values(a).first().copied().unwrap_or(0.0)
}

/// Singular triplets of `a` from the Hermitian embedding
/// `[[0, a], [a*, 0]]`, whose eigenpairs are `±s_i` with eigenvectors
/// `(w_i; ±v_i)/√2`. Returns the `min(rows, cols)` largest eigenvalues
/// (clamped at zero) with `W` and `V` columns rescaled to unit length.
///
/// nalgebra's complex SVD can return factors that do not reproduce the
/// input on nearly rank-deficient matrices, so it is not used.
fn singular_triplets(a: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix, ComplexMatrix)> {
    let (r, c_) = a.shape();
    let n = r + c_;
    let mut h = zeros(n, n);
    h.view_mut((0, r), (r, c_)).copy_from(a);
    h.view_mut((r, 0), (c_, r)).copy_from(&a.adjoint());
    let eig = herm_eig(&h)?;
    let k = r.min(c_);
    let s: Vec<f64> = eig.values[..k].iter().map(|&x| x.max(0.0)).collect();
    let scale = std::f64::consts::SQRT_2;
    let w = eig.vectors.view((0, 0), (r, k)).scale(scale);
    let v = eig.vectors.view((r, 0), (c_, k)).scale(scale);
    Ok((s, w, v))
}

/// Singular values sorted nonincreasing.
pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    if a.is_empty() {
        return Vec::new();
    }
    singular_triplets(a).map(|t| t.0).expect("Hermitian embedding is diagonalizable")
}

fn retention_cutoff(d: usize, largest: f64) -> f64 {
    d as f64 * f64::EPSILON * largest.max(0.0)
}

/// Measure of non-Hermiticity used by [`herm_eig`]: `‖A − A*‖_F` against
/// `1e-10 · max(1, ‖A‖_F)`. The Frobenius norm bounds the operator norm
/// from above, so this check is never looser on the asymmetry side.
fn check_hermitian(a: &ComplexMatrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.nrows(), a.ncols()));
    }
    let asym = frobenius(&(a - a.adjoint()));
    if asym > HERMITICITY_TOL * frobenius(a).max(1.0) {
        return Err(Error::NonHermitian(asym));
    }
    Ok(())
}

/// Eigendecomposition `A = U diag(λ) U*` of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct HermEig {
    /// Eigenvalues, nonincreasing.
    pub values: Vec<f64>,
    /// Unitary whose columns are the matching eigenvectors.
    pub vectors: ComplexMatrix,
}

impl HermEig {
    pub fn reconstruct(&self) -> ComplexMatrix {
        apply_spectral(&self.vectors, self.values.iter().copied())
    }
}

/// `U diag(f) U*`.
fn apply_spectral(u: &ComplexMatrix, f: impl Iterator<Item = f64>) -> ComplexMatrix {
    let mut scaled = u.clone();
    for (j, fj) in f.enumerate() {
        scaled.column_mut(j).scale_mut(fj);
    }
    scaled * u.adjoint()
}

pub fn herm_eig(a: &ComplexMatrix) -> Result<HermEig> {
    check_hermitian(a)?;
    let d = a.nrows();
    if d == 0 {
        return Ok(HermEig { values: Vec::new(), vectors: zeros(0, 0) });
    }
    let sym = (a + a.adjoint()).scale(0.5);
    let eig = sym
        .try_symmetric_eigen(f64::EPSILON, EIGEN_MAX_ITER)
        .ok_or(Error::EigenFailure)?;
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[j].total_cmp(&eig.eigenvalues[i]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = ComplexMatrix::from_fn(d, d, |r, k| eig.eigenvectors[(r, order[k])]);
    Ok(HermEig { values, vectors })
}

/// A positive linear functional on the `d × d` matrices, stored as its
/// density matrix together with a cached eigendecomposition.
#[derive(Debug, Clone)]
pub struct PositiveFunctional {
    density: ComplexMatrix,
    eigenvalues: Vec<f64>,
    eigenvectors: ComplexMatrix,
    rank: usize,
}

impl PositiveFunctional {
    /// Validate a PSD density matrix. Eigenvalues at or below the retention
    /// cutoff are set to zero; anything more negative than the Hermiticity
    /// tolerance is rejected.
    pub fn new(density: ComplexMatrix) -> Result<Self> {
        let eig = herm_eig(&density)?;
        let largest = eig.values.first().copied().unwrap_or(0.0);
        let smallest = eig.values.last().copied().unwrap_or(0.0);
        if smallest < -HERMITICITY_TOL * largest.abs().max(1.0) {
            return Err(Error::NotPositive(smallest));
        }
        Ok(Self::from_eigen(eig.values, eig.vectors))
    }

    /// Assemble from a spectral decomposition; `vectors` must be unitary.
    /// Values need not be sorted and are clamped by the retention cutoff.
    pub fn from_eigen(values: Vec<f64>, vectors: ComplexMatrix) -> Self {
        let d = values.len();
        let mut order: Vec<usize> = (0..d).collect();
        order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
        let sorted: Vec<f64> = order.iter().map(|&i| values[i]).collect();
        let vectors = ComplexMatrix::from_fn(vectors.nrows(), d, |r, k| vectors[(r, order[k])]);
        let cut = retention_cutoff(d, sorted.first().copied().unwrap_or(0.0));
        let eigenvalues: Vec<f64> = sorted.iter().map(|&l| if l > cut { l } else { 0.0 }).collect();
        let rank = eigenvalues.iter().filter(|&&l| l > 0.0).count();
        let density = apply_spectral(&vectors, eigenvalues.iter().copied());
        Self { density, eigenvalues, eigenvectors: vectors, rank }
    }

    pub fn zero(d: usize) -> Self {
        Self::from_eigen(vec![0.0; d], identity(d))
    }

    /// Normalized trace `I/d`.
    pub fn maximally_mixed(d: usize) -> Self {
        Self::from_eigen(vec![1.0 / d as f64; d], identity(d))
    }

    /// Uniform state on the range of an orthogonal projection. Eigenvalues
    /// above 1/2 count as range, so rounding noise in differences of
    /// projections is ignored. Returns zero for the zero projection.
    pub fn uniform_on(projection: &ComplexMatrix) -> Result<Self> {
        let eig = herm_eig(projection)?;
        let r = eig.values.iter().filter(|&&l| l > 0.5).count();
        if r == 0 {
            return Ok(Self::zero(projection.nrows()));
        }
        let w = 1.0 / r as f64;
        Ok(Self::from_eigen(
            eig.values.iter().map(|&l| if l > 0.5 { w } else { 0.0 }).collect(),
            eig.vectors,
        ))
    }

    pub fn density(&self) -> &ComplexMatrix {
        &self.density
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &ComplexMatrix {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_faithful(&self) -> bool {
        self.rank == self.dim()
    }

    /// `φ(1) = Tr h_φ`.
    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn is_state(&self) -> bool {
        (self.trace() - 1.0).abs() <= 1e-12
    }

    /// Support projection `s(φ)`.
    pub fn support(&self) -> ComplexMatrix {
        self.power(0.0)
    }

    /// `h^t` with the pseudo-inverse convention for `t < 0`; `t = 0` gives
    /// the support projection.
    pub fn power(&self, t: f64) -> ComplexMatrix {
        apply_spectral(
            &self.eigenvectors,
            self.eigenvalues.iter().map(|&l| if l > 0.0 { l.powf(t) } else { 0.0 }),
        )
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self::from_eigen(self.eigenvalues.iter().map(|l| l * factor).collect(), self.eigenvectors.clone())
    }

    /// `φ / φ(1)`.
    pub fn normalized(&self) -> Result<Self> {
        let t = self.trace();
        if t <= 0.0 {
            return Err(Error::ZeroFunctional);
        }
        Ok(self.scaled(1.0 / t))
    }

    /// `u h u*` for a matrix `u` of matching input dimension.
    pub fn conjugated(&self, u: &ComplexMatrix) -> Result<Self> {
        Self::new(u * &self.density * u.adjoint())
    }

    /// `s(self) ≤ s(other)`, decided by `‖(1−P_other) h (1−P_other)‖_op ≤ 1e-10 · Tr h`.
    pub fn support_within(&self, other: &PositiveFunctional) -> bool {
        let complement = identity(other.dim()) - other.support();
        let leak = op_norm(&(&complement * &self.density * &complement));
        leak <= 1e-10 * self.trace()
    }
}

/// `A^t` for a PSD matrix with pseudo-inverse powers when `t < 0`.
pub fn frac_power(a: &ComplexMatrix, t: f64) -> Result<ComplexMatrix> {
    Ok(PositiveFunctional::new(a.clone())?.power(t))
}

/// A partial isometry together with its initial and final projections.
#[derive(Debug, Clone)]
pub struct PartialIsometry {
    pub matrix: ComplexMatrix,
    /// `u* u`
    pub initial_proj: ComplexMatrix,
    /// `u u*`
    pub final_proj: ComplexMatrix,
}

/// Right polar decomposition `m = u |m|` with `|m| = (m* m)^{1/2}`,
/// `u* u = s(|m|)` and `u u* = s(m m*)`.
pub fn polar_right(m: &ComplexMatrix) -> Result<(PartialIsometry, PositiveFunctional)> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.nrows(), m.ncols()));
    }
    let d = m.nrows();
    if d == 0 {
        return Ok((
            PartialIsometry { matrix: zeros(0, 0), initial_proj: zeros(0, 0), final_proj: zeros(0, 0) },
            PositiveFunctional::zero(0),
        ));
    }
    let (s, w, v) = singular_triplets(m)?;
    let cut = retention_cutoff(d, s[0]);
    let kept: Vec<usize> = (0..d).filter(|&i| s[i] > cut).collect();

    let w_r = ComplexMatrix::from_fn(d, kept.len(), |r, k| w[(r, kept[k])]);
    let v_r = ComplexMatrix::from_fn(d, kept.len(), |r, k| v[(r, kept[k])]);
    let u = &w_r * v_r.adjoint();
    let iso = PartialIsometry {
        initial_proj: &v_r * v_r.adjoint(),
        final_proj: &w_r * w_r.adjoint(),
        matrix: u,
    };
    // the embedding does not separate null vectors of m from those of m*,
    // so |m| gets its own eigenbasis
    let abs = apply_spectral(&v_r, kept.iter().map(|&i| s[i]));
    let absval = PositiveFunctional::new(abs)?;
    Ok((iso, absval))
}

/// Schatten `p`-norm, `p ∈ [1, ∞]`; `p = f64::INFINITY` is the operator norm.
pub fn schatten_norm(a: &ComplexMatrix, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent(p));
    }
    Ok(schatten_from_singular(&singular_values(a), p))
}

pub(crate) fn schatten_from_singular(s: &[f64], p: f64) -> f64 {
    let largest = s.iter().copied().fold(0.0, f64::max);
    if largest == 0.0 {
        return 0.0;
    }
    if p.is_infinite() {
        return largest;
    }
    largest * s.iter().map(|x| (x / largest).powf(p)).sum::<f64>().powf(1.0 / p)
}

/// Conjugate exponent `q` with `1/p + 1/q = 1`; `∞ ↔ 1` handled exactly.
pub fn conjugate_exponent(p: f64) -> f64 {
    if p.is_infinite() {
        1.0
    } else if p == 1.0 {
        f64::INFINITY
    } else {
        p / (p - 1.0)
    }
}

/// `1/p`, exact zero for `p = ∞`.
pub(crate) fn recip(p: f64) -> f64 {
    if p.is_infinite() {
        0.0
    } else {
        1.0 / p
    }
}

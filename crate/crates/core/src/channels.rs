//! Quantum channels in Kraus form, their Stinespring dilations, Petz
//! recovery and the data-processing experiments built on them.
//!
//! Sufficiency of a channel Φ for a pair `{ψ, φ}` with `s(ψ) ≤ s(φ)` is
//! decided operationally: Φ is sufficient iff the Petz recovery map
//! `Ψ(y) = φ^{1/2} Φ*(Φ(φ)^{−1/2} y Φ(φ)^{−1/2}) φ^{1/2}` returns ψ from
//! `Φ(ψ)` (it always returns φ from `Φ(φ)`).

use serde::{Deserialize, Serialize};

use crate::divergences::{check_alpha, d_renyi};
use crate::error::{Error, Result};
use crate::matrix::{c, herm_eig, identity, kron, op_norm, schatten_norm, zeros, ComplexMatrix, PositiveFunctional};

const TP_TOL: f64 = 1e-10;

/// Completely positive trace-preserving map `x ↦ Σ K_i x K_i*`.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    kraus_ops: Vec<ComplexMatrix>,
    d_in: usize,
    d_out: usize,
}

impl KrausChannel {
    /// Validates shapes and `Σ K_i* K_i = I` within `1e-10`.
    pub fn new(kraus_ops: Vec<ComplexMatrix>) -> Result<Self> {
        let first = kraus_ops.first().ok_or_else(|| Error::InvalidChannel("no Kraus operators".into()))?;
        let (d_out, d_in) = first.shape();
        if kraus_ops.iter().any(|k| k.shape() != (d_out, d_in)) {
            return Err(Error::InvalidChannel("Kraus operators have different shapes".into()));
        }
        let ch = Self { kraus_ops, d_in, d_out };
        let defect = op_norm(&(ch.dual_unchecked(&identity(d_out)) - identity(d_in)));
        if defect > TP_TOL {
            return Err(Error::InvalidChannel(format!("not trace preserving (defect {defect:e})")));
        }
        Ok(ch)
    }

    pub fn kraus_ops(&self) -> &[ComplexMatrix] {
        &self.kraus_ops
    }

    pub fn d_in(&self) -> usize {
        self.d_in
    }

    pub fn d_out(&self) -> usize {
        self.d_out
    }

    pub fn identity(d: usize) -> Self {
        Self { kraus_ops: vec![identity(d)], d_in: d, d_out: d }
    }

    /// `x ↦ U x U*` for a unitary, or more generally `x ↦ V x V*` for an isometry.
    pub fn isometric(v: ComplexMatrix) -> Result<Self> {
        Self::new(vec![v])
    }

    /// `x ↦ (1 − λ) x + λ Tr(x) I/d`.
    pub fn depolarizing(d: usize, lambda: f64) -> Result<Self> {
        let mut ops = vec![identity(d).scale((1.0 - lambda).sqrt())];
        let w = (lambda / d as f64).sqrt();
        for i in 0..d {
            for j in 0..d {
                let mut e = zeros(d, d);
                e[(i, j)] = c(w, 0.0);
                ops.push(e);
            }
        }
        Self::new(ops)
    }

    /// `x ↦ (1 − λ) x + λ diag(x)`.
    pub fn dephasing(d: usize, lambda: f64) -> Result<Self> {
        let mut ops = vec![identity(d).scale((1.0 - lambda).sqrt())];
        for i in 0..d {
            let mut e = zeros(d, d);
            e[(i, i)] = c(lambda.sqrt(), 0.0);
            ops.push(e);
        }
        Self::new(ops)
    }

    /// Trace over the second tensor factor of `C^{d_a} ⊗ C^{d_b}`.
    pub fn partial_trace(d_a: usize, d_b: usize) -> Result<Self> {
        let ops = (0..d_b)
            .map(|j| {
                let mut bra = zeros(1, d_b);
                bra[(0, j)] = c(1.0, 0.0);
                kron(&identity(d_a), &bra)
            })
            .collect();
        Self::new(ops)
    }

    /// `x ↦ x ⊗ τ`.
    pub fn ancilla_attach(d_a: usize, tau: &PositiveFunctional) -> Result<Self> {
        let ops = tau
            .eigenvalues()
            .iter()
            .enumerate()
            .filter(|(_, &t)| t > 0.0)
            .map(|(j, &t)| {
                let ket = tau.eigenvectors().columns(j, 1).into_owned().scale(t.sqrt());
                kron(&identity(d_a), &ket)
            })
            .collect();
        Self::new(ops)
    }

    /// Qubit amplitude damping with decay probability `gamma`.
    pub fn amplitude_damping(gamma: f64) -> Result<Self> {
        let k0 = crate::matrix::from_real_rows(&[&[1.0, 0.0], &[0.0, (1.0 - gamma).sqrt()]]);
        let k1 = crate::matrix::from_real_rows(&[&[0.0, gamma.sqrt()], &[0.0, 0.0]]);
        Self::new(vec![k0, k1])
    }

    /// Channel `x ↦ Tr_env(V x V*)` of an isometry `V: C^{d_in} → C^{d_out} ⊗ C^{env}`.
    pub fn from_isometry(v: &ComplexMatrix, env_dim: usize) -> Result<Self> {
        if env_dim == 0 || !v.nrows().is_multiple_of(env_dim) {
            return Err(Error::InvalidChannel("isometry rows not divisible by environment dimension".into()));
        }
        let d_out = v.nrows() / env_dim;
        let ops = (0..env_dim)
            .map(|i| ComplexMatrix::from_fn(d_out, v.ncols(), |a, col| v[(a * env_dim + i, col)]))
            .collect();
        Self::new(ops)
    }

    fn dual_unchecked(&self, a: &ComplexMatrix) -> ComplexMatrix {
        self.kraus_ops.iter().fold(zeros(self.d_in, self.d_in), |acc, k| acc + k.adjoint() * a * k)
    }

    pub fn apply(&self, x: &ComplexMatrix) -> Result<ComplexMatrix> {
        if x.shape() != (self.d_in, self.d_in) {
            return Err(Error::DimensionMismatch { expected: self.d_in, got: x.nrows() });
        }
        Ok(self.kraus_ops.iter().fold(zeros(self.d_out, self.d_out), |acc, k| acc + k * x * k.adjoint()))
    }

    /// Heisenberg-picture map `a ↦ Σ K_i* a K_i`, unital.
    pub fn dual_apply(&self, a: &ComplexMatrix) -> Result<ComplexMatrix> {
        if a.shape() != (self.d_out, self.d_out) {
            return Err(Error::DimensionMismatch { expected: self.d_out, got: a.nrows() });
        }
        Ok(self.dual_unchecked(a))
    }

    /// Image of a positive functional.
    pub fn apply_functional(&self, phi: &PositiveFunctional) -> Result<PositiveFunctional> {
        PositiveFunctional::new(self.apply(phi.density())?)
    }

    /// Choi matrix `Σ_{ij} E_{ij} ⊗ Φ(E_{ij})`.
    pub fn choi(&self) -> ComplexMatrix {
        let mut out = zeros(self.d_in * self.d_out, self.d_in * self.d_out);
        for i in 0..self.d_in {
            for j in 0..self.d_in {
                let e = crate::matrix::matrix_unit(self.d_in, i, j);
                let img = self.apply(&e).expect("dimensions match");
                out += kron(&e, &img);
            }
        }
        out
    }
}

pub fn apply(ch: &KrausChannel, x: &ComplexMatrix) -> Result<ComplexMatrix> {
    ch.apply(x)
}

pub fn dual_apply(ch: &KrausChannel, a: &ComplexMatrix) -> Result<ComplexMatrix> {
    ch.dual_apply(a)
}

/// Stinespring isometry `V = Σ_i K_i ⊗ e_i`, with `Φ*(a) = V*(a ⊗ I)V`.
#[derive(Debug, Clone)]
pub struct StinespringDilation {
    pub isometry: ComplexMatrix,
    pub env_dim: usize,
}

impl StinespringDilation {
    /// `V*(a ⊗ I_env)V`.
    pub fn dual_apply(&self, a: &ComplexMatrix) -> ComplexMatrix {
        self.isometry.adjoint() * kron(a, &identity(self.env_dim)) * &self.isometry
    }

    /// `Tr_env(V x V*)`.
    pub fn apply(&self, x: &ComplexMatrix) -> ComplexMatrix {
        let big = &self.isometry * x * self.isometry.adjoint();
        let n = self.env_dim;
        let d_out = big.nrows() / n;
        ComplexMatrix::from_fn(d_out, d_out, |a, b| (0..n).map(|i| big[(a * n + i, b * n + i)]).sum())
    }
}

pub fn stinespring(ch: &KrausChannel) -> StinespringDilation {
    let n = ch.kraus_ops.len();
    let mut v = zeros(ch.d_out * n, ch.d_in);
    for (i, k) in ch.kraus_ops.iter().enumerate() {
        let mut e = zeros(n, 1);
        e[(i, 0)] = c(1.0, 0.0);
        v += kron(k, &e);
    }
    StinespringDilation { isometry: v, env_dim: n }
}

/// Petz recovery channel with Kraus operators `φ^{1/2} K_i* Φ(φ)^{−1/2}`,
/// completed to a channel by sending the complement of `s(Φ(φ))` to the
/// fixed state `φ/φ(1)`.
pub fn petz_recovery(ch: &KrausChannel, phi: &PositiveFunctional) -> Result<KrausChannel> {
    if phi.dim() != ch.d_in {
        return Err(Error::DimensionMismatch { expected: ch.d_in, got: phi.dim() });
    }
    if phi.trace() <= 0.0 {
        return Err(Error::ZeroFunctional);
    }
    let image = ch.apply_functional(phi)?;
    let left = phi.power(0.5);
    let right = image.power(-0.5);
    let mut ops: Vec<ComplexMatrix> = ch.kraus_ops.iter().map(|k| &left * k.adjoint() * &right).collect();

    let complement = identity(ch.d_out) - image.support();
    let comp = herm_eig(&complement)?;
    let tau = phi.normalized()?;
    for (l, _) in comp.values.iter().enumerate().filter(|(_, &v)| v > 0.5) {
        let e_l = comp.vectors.columns(l, 1).into_owned();
        for (j, &t) in tau.eigenvalues().iter().enumerate() {
            if t > 0.0 {
                let v_j = tau.eigenvectors().columns(j, 1).into_owned();
                ops.push((v_j * e_l.adjoint()).scale(t.sqrt()));
            }
        }
    }
    KrausChannel::new(ops)
}

/// Tolerances shared by the sufficiency test, the equality probe and
/// campaigns.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct Tolerances {
    /// A DPI gap at most this large counts as equality.
    pub gap: f64,
    /// Petz recovery error (trace norm) at most this large counts as recovery.
    pub recovery: f64,
    /// A gap below `−dpi` is a DPI violation.
    pub dpi: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { gap: 1e-8, recovery: 1e-7, dpi: 1e-8 }
    }
}

#[derive(Debug, Clone)]
pub struct SufficiencyReport {
    pub recovered_psi_error: f64,
    pub recovered_phi_error: f64,
    pub sufficient: bool,
    pub recovery: KrausChannel,
}

pub fn is_sufficient(
    ch: &KrausChannel,
    psi: &PositiveFunctional,
    phi: &PositiveFunctional,
    tol: f64,
) -> Result<SufficiencyReport> {
    if psi.dim() != ch.d_in || phi.dim() != ch.d_in {
        return Err(Error::DimensionMismatch { expected: ch.d_in, got: psi.dim() });
    }
    if !psi.support_within(phi) {
        return Err(Error::SupportViolation);
    }
    let recovery = petz_recovery(ch, phi)?;
    let err = |s: &PositiveFunctional| -> Result<f64> {
        let back = recovery.apply(&ch.apply(s.density())?)?;
        schatten_norm(&(back - s.density()), 1.0)
    };
    let recovered_psi_error = err(psi)?;
    let recovered_phi_error = err(phi)?;
    Ok(SufficiencyReport {
        sufficient: recovered_psi_error <= tol && recovered_phi_error <= tol,
        recovered_psi_error,
        recovered_phi_error,
        recovery,
    })
}

/// Input divergence, output divergence and their difference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DpiTerms {
    pub input: f64,
    pub output: f64,
    pub gap: f64,
}

pub fn dpi_terms(ch: &KrausChannel, psi: &PositiveFunctional, phi: &PositiveFunctional, alpha: f64) -> Result<DpiTerms> {
    let input = d_renyi(psi, phi, alpha)?.value;
    let out_psi = ch.apply_functional(psi)?;
    let out_phi = ch.apply_functional(phi)?;
    let output = d_renyi(&out_psi, &out_phi, alpha)?.value;
    let gap = match (input.is_infinite(), output.is_infinite()) {
        (true, true) => return Err(Error::IndeterminateGap),
        (true, false) => f64::INFINITY,
        _ => input - output,
    };
    Ok(DpiTerms { input, output, gap })
}

/// `D_α(ψ‖φ) − D_α(Φ(ψ)‖Φ(φ))`; `+∞` when only the input is infinite.
pub fn dpi_gap(ch: &KrausChannel, psi: &PositiveFunctional, phi: &PositiveFunctional, alpha: f64) -> Result<f64> {
    Ok(dpi_terms(ch, psi, phi, alpha)?.gap)
}

/// Whether the order lies in the open interval where equality in DPI
/// characterizes sufficiency.
pub fn in_equality_range(alpha: f64) -> bool {
    alpha > 0.5 && alpha < 1.0
}

/// Decide whether one `(gap, sufficient)` observation contradicts DPI or the
/// equality/sufficiency equivalence.
pub fn is_violation(alpha: f64, gap: f64, sufficient: bool, tol: &Tolerances) -> bool {
    let dpi_broken = gap < -tol.dpi;
    let sufficient_but_gap = sufficient && gap.abs() > tol.gap;
    let equal_but_insufficient = in_equality_range(alpha) && gap <= tol.gap && !sufficient;
    dpi_broken || sufficient_but_gap || equal_but_insufficient
}

#[derive(Debug, Clone)]
pub struct EqualityReport {
    /// `(α, gap)` per grid point.
    pub gaps: Vec<(f64, f64)>,
    pub sufficiency: SufficiencyReport,
    /// Set when some grid point contradicts the equality criterion.
    pub violation: bool,
}

pub fn equality_probe(
    ch: &KrausChannel,
    psi: &PositiveFunctional,
    phi: &PositiveFunctional,
    alpha_grid: &[f64],
    tol: &Tolerances,
) -> Result<EqualityReport> {
    for &a in alpha_grid {
        check_alpha(a)?;
        if !in_equality_range(a) {
            return Err(Error::InvalidAlpha(a));
        }
    }
    let sufficiency = is_sufficient(ch, psi, phi, tol.recovery)?;
    let gaps = alpha_grid
        .iter()
        .map(|&a| Ok((a, dpi_gap(ch, psi, phi, a)?)))
        .collect::<Result<Vec<_>>>()?;
    let violation = gaps.iter().any(|&(a, g)| is_violation(a, g, sufficiency.sufficient, tol));
    Ok(EqualityReport { gaps, sufficiency, violation })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{diag, frobenius};
    use crate::random::{ginibre, isometry_with, random_state, random_unitary, rng_from_seed};

    fn close(a: &ComplexMatrix, b: &ComplexMatrix, tol: f64) -> bool {
        frobenius(&(a - b)) <= tol
    }

    fn random_channel(d_in: usize, d_out: usize, env: usize, seed: u64) -> KrausChannel {
        let v = isometry_with(d_out * env, d_in, &mut rng_from_seed(seed));
        KrausChannel::from_isometry(&v, env).unwrap()
    }

    fn product(a: &PositiveFunctional, b: &PositiveFunctional) -> PositiveFunctional {
        PositiveFunctional::new(kron(a.density(), b.density())).unwrap()
    }

    #[test]
    fn apply_examples() {
        let x = random_state(3, 1);
        assert!(close(&KrausChannel::identity(3).apply(x.density()).unwrap(), x.density(), 0.0));
        let dep = KrausChannel::depolarizing(3, 1.0).unwrap();
        assert!(close(&dep.apply(x.density()).unwrap(), &identity(3).unscale(3.0), 1e-15));
        let u = random_unitary(3, 2);
        let uc = KrausChannel::isometric(u.clone()).unwrap();
        assert!(close(&uc.apply(x.density()).unwrap(), &(&u * x.density() * u.adjoint()), 1e-15));
        assert!(matches!(uc.apply(&identity(2)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn rejects_non_trace_preserving() {
        assert!(matches!(
            KrausChannel::new(vec![identity(2).scale(0.9)]),
            Err(Error::InvalidChannel(_))
        ));
    }

    #[test]
    fn dual_examples() {
        let ch = random_channel(3, 2, 2, 3);
        assert!(close(&ch.dual_apply(&identity(2)).unwrap(), &identity(3), 1e-12));
        let u = random_unitary(2, 4);
        let a = ginibre(2, 2, &mut rng_from_seed(5));
        let uc = KrausChannel::isometric(u.clone()).unwrap();
        assert!(close(&uc.dual_apply(&a).unwrap(), &(u.adjoint() * &a * &u), 1e-14));

        let x = ginibre(3, 3, &mut rng_from_seed(6));
        let lhs = (&a * ch.apply(&x).unwrap()).trace();
        let rhs = (ch.dual_apply(&a).unwrap() * &x).trace();
        assert!((lhs - rhs).norm() < 1e-10);
    }

    #[test]
    fn choi_is_psd() {
        let ch = random_channel(2, 3, 2, 7);
        let e = herm_eig(&ch.choi()).unwrap();
        assert!(*e.values.last().unwrap() >= -1e-10);
    }

    #[test]
    fn stinespring_examples() {
        let u = random_unitary(3, 8);
        let s = stinespring(&KrausChannel::isometric(u.clone()).unwrap());
        assert_eq!(s.env_dim, 1);
        assert!(close(&s.isometry, &u, 0.0));

        let ch = random_channel(3, 2, 3, 9);
        let s = stinespring(&ch);
        assert_eq!(s.env_dim, ch.kraus_ops().len());
        assert!(op_norm(&(s.isometry.adjoint() * &s.isometry - identity(3))) <= 1e-10);
        let a = ginibre(2, 2, &mut rng_from_seed(10));
        assert!(close(&s.dual_apply(&a), &ch.dual_apply(&a).unwrap(), 1e-10));
        let x = random_state(3, 11);
        assert!(close(&s.apply(x.density()), &ch.apply(x.density()).unwrap(), 1e-12));
    }

    #[test]
    fn petz_of_unitary_is_inverse() {
        let u = random_unitary(3, 12);
        let ch = KrausChannel::isometric(u.clone()).unwrap();
        let phi = random_state(3, 13);
        let rec = petz_recovery(&ch, &phi).unwrap();
        let y = ginibre(3, 3, &mut rng_from_seed(14));
        let expect = u.adjoint() * &y * &u;
        assert!(close(&rec.apply(&y).unwrap(), &expect, 1e-10));
    }

    #[test]
    fn petz_of_ancilla_attach_is_partial_trace() {
        let tau = random_state(2, 15);
        let ch = KrausChannel::ancilla_attach(2, &tau).unwrap();
        let phi = random_state(2, 16);
        let rec = petz_recovery(&ch, &phi).unwrap();
        let tr = KrausChannel::partial_trace(2, 2).unwrap();
        for seed in 0..3 {
            let g = ginibre(4, 4, &mut rng_from_seed(17 + seed));
            assert!(close(&rec.apply(&g).unwrap(), &tr.apply(&g).unwrap(), 1e-10));
        }
    }

    #[test]
    fn petz_always_recovers_phi() {
        let ch = random_channel(3, 2, 2, 20);
        let phi = random_state(3, 21);
        let rec = petz_recovery(&ch, &phi).unwrap();
        let back = rec.apply(&ch.apply(phi.density()).unwrap()).unwrap();
        assert!(close(&back, phi.density(), 1e-9));

        // embedding into a larger space leaves s(Φ(φ)) non-faithful, so the
        // completion block is exercised
        let emb = KrausChannel::isometric(isometry_with(4, 2, &mut rng_from_seed(34))).unwrap();
        let phi = random_state(2, 35);
        let rec = petz_recovery(&emb, &phi).unwrap();
        assert_eq!(rec.kraus_ops().len(), 1 + 2 * 2);
        let back = rec.apply(&emb.apply(phi.density()).unwrap()).unwrap();
        assert!(close(&back, phi.density(), 1e-10));
        assert!(matches!(petz_recovery(&ch, &PositiveFunctional::zero(3)), Err(Error::ZeroFunctional)));
    }

    #[test]
    fn sufficiency_examples() {
        let psi = random_state(3, 22);
        let phi = random_state(3, 23);
        let uc = KrausChannel::isometric(random_unitary(3, 24)).unwrap();
        let rep = is_sufficient(&uc, &psi, &phi, 1e-7).unwrap();
        assert!(rep.sufficient);
        assert!(rep.recovered_psi_error <= 1e-10 && rep.recovered_phi_error <= 1e-10);

        let dep = KrausChannel::depolarizing(3, 1.0).unwrap();
        let rep = is_sufficient(&dep, &psi, &phi, 1e-7).unwrap();
        assert!(!rep.sufficient);
        let floor = schatten_norm(&(psi.density() - identity(3).unscale(3.0)), 1.0).unwrap();
        assert!(rep.recovered_psi_error >= floor - 1e-9);

        let tau = random_state(2, 25);
        let tr = KrausChannel::partial_trace(2, 2).unwrap();
        let rep = is_sufficient(&tr, &product(&random_state(2, 26), &tau), &product(&random_state(2, 27), &tau), 1e-7)
            .unwrap();
        assert!(rep.sufficient);

        let a = PositiveFunctional::new(diag(&[0.0, 1.0])).unwrap();
        let b = PositiveFunctional::new(diag(&[1.0, 0.0])).unwrap();
        let id = KrausChannel::identity(2);
        assert!(matches!(is_sufficient(&id, &a, &b, 1e-7), Err(Error::SupportViolation)));
    }

    #[test]
    fn dpi_gap_examples() {
        let psi = random_state(3, 28);
        let phi = random_state(3, 29);
        for a in [0.75, 2.0, f64::INFINITY] {
            assert!(dpi_gap(&KrausChannel::identity(3), &psi, &phi, a).unwrap().abs() < 1e-10);
            let uc = KrausChannel::isometric(random_unitary(3, 30)).unwrap();
            assert!(dpi_gap(&uc, &psi, &phi, a).unwrap().abs() < 1e-10);
        }
        let psi = PositiveFunctional::new(diag(&[0.5, 0.5])).unwrap();
        let phi = PositiveFunctional::new(diag(&[1.0 / 3.0, 2.0 / 3.0])).unwrap();
        let dep = KrausChannel::depolarizing(2, 1.0).unwrap();
        let gap = dpi_gap(&dep, &psi, &phi, 2.0).unwrap();
        assert!((gap - (9.0f64 / 8.0).ln()).abs() < 1e-12);
    }

    #[test]
    fn dpi_gap_infinities() {
        let a = PositiveFunctional::new(diag(&[1.0, 0.0])).unwrap();
        let b = PositiveFunctional::new(diag(&[0.0, 1.0])).unwrap();
        let id = KrausChannel::identity(2);
        assert!(matches!(dpi_gap(&id, &a, &b, 2.0), Err(Error::IndeterminateGap)));
        let dep = KrausChannel::depolarizing(2, 1.0).unwrap();
        assert_eq!(dpi_gap(&dep, &a, &b, 2.0).unwrap(), f64::INFINITY);
    }

    #[test]
    fn equality_probe_examples() {
        let tol = Tolerances::default();
        let grid = [0.6, 0.75, 0.9];
        let psi = random_state(2, 31);
        let phi = random_state(2, 32);

        let uc = KrausChannel::isometric(random_unitary(2, 33)).unwrap();
        let rep = equality_probe(&uc, &psi, &phi, &grid, &tol).unwrap();
        assert!(rep.sufficiency.sufficient && !rep.violation);
        assert!(rep.gaps.iter().all(|(_, g)| g.abs() <= 1e-8));

        // amplitude damping on a generic qubit pair (frozen regression values)
        let ad = KrausChannel::amplitude_damping(0.3).unwrap();
        let rep = equality_probe(&ad, &psi, &phi, &[0.75], &tol).unwrap();
        assert!(!rep.sufficiency.sufficient && !rep.violation);
        assert!(rep.gaps[0].1 > 1e-4, "gap {}", rep.gaps[0].1);

        let rep = equality_probe(&ad, &phi, &phi, &grid, &tol).unwrap();
        assert!(rep.sufficiency.sufficient && !rep.violation);

        assert!(matches!(equality_probe(&uc, &psi, &phi, &[0.5], &tol), Err(Error::InvalidAlpha(_))));
    }
}

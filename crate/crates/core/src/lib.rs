//! Finite-dimensional lab for weighted noncommutative Lp spaces and
//! sandwiched Rényi divergences on the matrix algebra `M_d`.
//!
//! Functionals are identified with their density matrices, the standard form
//! is the Hilbert–Schmidt space with `J k = k*`, and the relative modular
//! operator acts as `Δ_{σ,φ}^z k = σ^z k φ^{−z}` (pseudo-inverse powers off
//! the supports).
//!
//! * [`weighted_lp`]: Kosaki, Araki–Masuda and BST norms, AM polar
//!   decomposition, duality and the `σ_ε` feasible state.
//! * [`variational`]: direct optimization of the AM variational formulas.
//! * [`divergences`]: sandwiched Rényi divergences by the trace formula and
//!   by the BST norm.
//! * [`standard_form`]: vectors of `L_2`, relative modular operators,
//!   spatial derivatives.
//! * [`channels`] and [`campaign`]: channels, Petz recovery, data-processing
//!   gaps and randomized campaigns.
//! * [`io`] and [`cli`]: file formats and the `modlp` command.
//!
//! ```
//! use modlp::{d_renyi, matrix::diag, PositiveFunctional};
//!
//! let psi = PositiveFunctional::new(diag(&[1.0, 0.0])).unwrap();
//! let phi = PositiveFunctional::new(diag(&[0.5, 0.5])).unwrap();
//! let d = d_renyi(&psi, &phi, 2.0).unwrap();
//! assert!((d.value - 2f64.ln()).abs() < 1e-12);
//! ```

pub mod error;
pub mod matrix;
pub mod random;
pub mod standard_form;
pub mod weighted_lp;
pub mod variational;
pub mod divergences;
pub mod channels;
pub mod campaign;
pub mod io;
pub mod cli;

pub use channels::{
    dpi_gap, equality_probe, is_sufficient, petz_recovery, stinespring, KrausChannel, StinespringDilation,
    SufficiencyReport, Tolerances,
};
pub use divergences::{d_renyi, d_renyi_norm_route, sandwiched_q, DivergenceValue, Route};
pub use error::{Error, Result};
pub use matrix::{ComplexMatrix, PositiveFunctional};
pub use standard_form::{HSVector, RelativeModular, SpatialDerivative};
pub use variational::{am_norm_variational, BoundKind, VariationalResult};
pub use weighted_lp::{
    am_duality_pair, am_norm, am_polar, bst_norm, dual_optimizer, kosaki_norm, sigma_eps_witness,
    AMPolarDecomposition, WitnessResult,
};

//! Seeded random matrices: Ginibre ensembles, induced random states and
//! Haar-random unitaries / isometries.
//!
//! All generators draw from a ChaCha stream, so a seed fixes the output bit
//! for bit across platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::matrix::{c, ComplexMatrix, PositiveFunctional};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent substream `stream` of the generator keyed by `seed`.
pub fn substream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Ginibre matrix: i.i.d. entries `(x + i y)/√2` with `x, y ~ N(0, 1)`.
pub fn ginibre<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let mut m = ComplexMatrix::zeros(rows, cols);
    // fill row-major so the stream order does not depend on storage layout
    for i in 0..rows {
        for j in 0..cols {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            m[(i, j)] = c(re * scale, im * scale);
        }
    }
    m
}

/// Full-rank random state `G G* / Tr(G G*)`.
pub fn state_with<R: Rng + ?Sized>(d: usize, rng: &mut R) -> PositiveFunctional {
    let g = ginibre(d, d, rng);
    let w = &g * g.adjoint();
    let t = w.trace().re;
    PositiveFunctional::new(w.unscale(t)).expect("Wishart matrix is PSD")
}

/// Haar-random isometry `rows × cols` (`rows ≥ cols`) from the QR
/// factorization of a Ginibre matrix with the phases of `R` removed.
pub fn isometry_with<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> ComplexMatrix {
    assert!(rows >= cols, "isometry needs rows >= cols");
    let g = ginibre(rows, cols, rng);
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..cols {
        let rjj = r[(j, j)];
        let n = rjj.norm();
        if n > 0.0 {
            let phase = rjj / n;
            for i in 0..rows {
                q[(i, j)] *= phase;
            }
        }
    }
    q
}

pub fn unitary_with<R: Rng + ?Sized>(d: usize, rng: &mut R) -> ComplexMatrix {
    isometry_with(d, d, rng)
}

pub fn random_state(d: usize, seed: u64) -> PositiveFunctional {
    state_with(d, &mut rng_from_seed(seed))
}

/// Random Hilbert–Schmidt vector (a Ginibre `d × d` matrix).
pub fn random_hs_vector(d: usize, seed: u64) -> ComplexMatrix {
    ginibre(d, d, &mut rng_from_seed(seed))
}

pub fn random_unitary(d: usize, seed: u64) -> ComplexMatrix {
    unitary_with(d, &mut rng_from_seed(seed))
}

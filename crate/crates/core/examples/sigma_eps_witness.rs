//! The explicit feasible state σ_ε for the BST infimum at `1 < p ≤ 2`. A
//! rank-deficient weight leaves room for the complementary block, and the
//! objective then scales exactly like `ε^{1/2−1/p}`.

use modlp::matrix::{c, ComplexMatrix};
use modlp::random::{random_hs_vector, random_state, random_unitary};
use modlp::{sigma_eps_witness, HSVector, PositiveFunctional};

fn main() -> modlp::Result<()> {
    // rank-2 weight on C^3, rotated into general position
    let small = random_state(2, 31);
    let mut h = ComplexMatrix::from_element(3, 3, c(0.0, 0.0));
    h.view_mut((0, 0), (2, 2)).copy_from(small.density());
    let u = random_unitary(3, 32);
    let phi = PositiveFunctional::new(&u * h * u.adjoint())?;
    let k = HSVector::new(random_hs_vector(3, 33))?;

    for p in [4.0 / 3.0, 1.5, 1.9] {
        println!("p = {p:.4}");
        for eps in [0.05, 0.25, 0.5, 0.75, 0.95] {
            let w = sigma_eps_witness(&k, &phi, p, eps)?;
            println!(
                "  eps {eps:.2}: objective {:.14}  predicted {:.14}  rel err {:.1e}",
                w.value,
                w.predicted,
                (w.value - w.predicted).abs() / w.predicted
            );
        }
    }

    // with a faithful weight the complement is empty and ε plays no role
    let w = sigma_eps_witness(&k, &random_state(3, 34), 1.5, 0.3)?;
    println!("faithful weight: eps used = {}, objective {:.14}", w.eps, w.value);
    Ok(())
}

//! Kosaki, Araki–Masuda and BST norms of one vector, the identity linking
//! AM and Kosaki norms, the AM polar decomposition and the norming dual
//! element.

use modlp::matrix::conjugate_exponent;
use modlp::random::{random_hs_vector, random_state};
use modlp::{am_duality_pair, am_norm, am_polar, bst_norm, dual_optimizer, kosaki_norm, HSVector};

fn main() -> modlp::Result<()> {
    let phi = random_state(3, 11);
    let k = HSVector::new(random_hs_vector(3, 12))?;

    println!("{:>8} {:>16} {:>16}", "p", "AM", "BST");
    for p in [1.0, 4.0 / 3.0, 2.0, 3.0, 4.0, f64::INFINITY] {
        println!("{p:>8.4} {:>16.12} {:>16.12}", am_norm(&k, &phi, p)?, bst_norm(&k, &phi, p)?);
    }

    // ‖k‖^{AM}_{r} = ‖k* k‖^{Kosaki}_{r/2}^{1/2} for r > 2
    let gram = k.matrix().adjoint() * k.matrix();
    for r in [2.5, 4.0, 6.0] {
        let lhs = am_norm(&k, &phi, r)?;
        let rhs = kosaki_norm(&gram, &phi, r / 2.0)?.sqrt();
        println!("r = {r}: AM {lhs:.14}  Kosaki route {rhs:.14}");
    }

    let p = 3.0;
    let polar = am_polar(&k, &phi, p)?;
    let err = modlp::matrix::frobenius(&(polar.reconstruct(&phi) - k.matrix()));
    println!("polar at p = {p}: rho(1)^(1/p) = {:.12}, reconstruction error {err:.2e}", polar.norm());

    let kp = dual_optimizer(&k, &phi, p)?;
    let q = conjugate_exponent(p);
    println!(
        "dual element: ||k'||_q = {:.12}, (k, k') = {:.12}",
        am_norm(&kp, &phi, q)?,
        am_duality_pair(&k, &kp).re
    );
    Ok(())
}

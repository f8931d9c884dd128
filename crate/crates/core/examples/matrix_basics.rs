//! Positive functionals, fractional powers, Schatten norms and the polar
//! decomposition on `M_3`.

use modlp::matrix::{conjugate_exponent, polar_right, schatten_norm, singular_values};
use modlp::random::{random_hs_vector, random_state};

fn main() -> modlp::Result<()> {
    let phi = random_state(3, 1);
    println!("phi: trace {:.12}, rank {}, eigenvalues {:?}", phi.trace(), phi.rank(), phi.eigenvalues());

    // h^{1/3} h^{2/3} = h
    let a = phi.power(1.0 / 3.0);
    let b = phi.power(2.0 / 3.0);
    let err = modlp::matrix::frobenius(&(a * b - phi.density()));
    println!("power additivity error: {err:.2e}");

    let m = random_hs_vector(3, 2);
    println!("singular values: {:?}", singular_values(&m));
    for p in [1.0, 4.0 / 3.0, 2.0, 4.0, f64::INFINITY] {
        println!("  ||m||_{p:<8.4} = {:.12}   (conjugate exponent {:.4})", schatten_norm(&m, p)?, conjugate_exponent(p));
    }

    let (u, abs) = polar_right(&m)?;
    let err = modlp::matrix::frobenius(&(&u.matrix * abs.density() - &m));
    println!("polar m = u|m|: reconstruction error {err:.2e}, rank of |m| = {}", abs.rank());
    Ok(())
}

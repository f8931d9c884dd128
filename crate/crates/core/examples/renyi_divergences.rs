//! Sandwiched Rényi divergences along the order axis, computed by the trace
//! formula and by the BST norm, with output in nats and bits.

use modlp::matrix::diag;
use modlp::random::random_state;
use modlp::{d_renyi, d_renyi_norm_route, PositiveFunctional};

fn main() -> modlp::Result<()> {
    let psi = random_state(3, 21);
    let phi = random_state(3, 22);
    println!("{:>6} {:>20} {:>20} {:>10}", "alpha", "trace formula", "norm route", "|diff|");
    for alpha in [0.5, 0.6, 0.75, 0.9, 1.5, 2.0, 3.0, 10.0, f64::INFINITY] {
        let t = d_renyi(&psi, &phi, alpha)?.value;
        let n = d_renyi_norm_route(&psi, &phi, alpha)?.value;
        println!("{alpha:>6} {t:>20.15} {n:>20.15} {:>10.1e}", (t - n).abs());
    }

    // commuting pair: D_2 = log(9/8)
    let a = PositiveFunctional::new(diag(&[0.5, 0.5]))?;
    let b = PositiveFunctional::new(diag(&[1.0 / 3.0, 2.0 / 3.0]))?;
    let d2 = d_renyi(&a, &b, 2.0)?.value;
    println!("D_2(diag(1/2,1/2) || diag(1/3,2/3)) = {d2:.15} nats = {:.15} bits", d2 / 2f64.ln());

    // support conventions
    let e1 = PositiveFunctional::new(diag(&[1.0, 0.0]))?;
    let e2 = PositiveFunctional::new(diag(&[0.0, 1.0]))?;
    println!("orthogonal supports, alpha = 0.75: {}", d_renyi(&e1, &e2, 0.75)?.value);
    println!("psi not dominated, alpha = 2:      {}", d_renyi(&a, &e1, 2.0)?.value);
    println!("psi not dominated, alpha = 0.75:   {:.15}", d_renyi(&a, &e1, 0.75)?.value);
    Ok(())
}

//! One-sided bounds on the AM norm from direct optimization over states,
//! compared with the closed form as the budget grows.

use modlp::random::{random_hs_vector, random_state};
use modlp::{am_norm, am_norm_variational, HSVector};

fn main() -> modlp::Result<()> {
    let phi = random_state(2, 41);
    let k = HSVector::new(random_hs_vector(2, 42))?;
    for p in [4.0 / 3.0, 3.0] {
        let exact = am_norm(&k, &phi, p)?;
        println!("p = {p:.4}: closed form {exact:.12}");
        for budget in [10, 100, 1000, 5000] {
            let r = am_norm_variational(&k, &phi, p, budget, 7)?;
            println!(
                "  budget {budget:>5}: {} bound {:.12}  rel gap {:.1e}  ({} local steps)",
                r.bound_kind.as_str(),
                r.value,
                (r.value - exact).abs() / exact,
                r.iterations
            );
        }
    }
    Ok(())
}

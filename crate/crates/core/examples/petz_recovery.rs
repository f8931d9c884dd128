//! Channels, their Stinespring dilation, Petz recovery and the equality
//! probe on reversible and irreversible examples.

use modlp::matrix::kron;
use modlp::random::{random_state, random_unitary};
use modlp::{equality_probe, is_sufficient, stinespring, KrausChannel, PositiveFunctional, Tolerances};

fn main() -> modlp::Result<()> {
    let psi = random_state(2, 61);
    let phi = random_state(2, 62);
    let tol = Tolerances::default();
    let grid = [0.6, 0.75, 0.9];

    let damping = KrausChannel::amplitude_damping(0.3)?;
    let dil = stinespring(&damping);
    println!("amplitude damping: {} Kraus operators, isometry {}x{}", damping.kraus_ops().len(), dil.isometry.nrows(), dil.isometry.ncols());

    let cases: Vec<(&str, KrausChannel, PositiveFunctional, PositiveFunctional)> = vec![
        ("unitary", KrausChannel::isometric(random_unitary(2, 63))?, psi.clone(), phi.clone()),
        ("amplitude damping", damping, psi.clone(), phi.clone()),
        ("depolarizing 0.5", KrausChannel::depolarizing(2, 0.5)?, psi.clone(), phi.clone()),
        {
            let tau = random_state(2, 64);
            let prod = |s: &PositiveFunctional| PositiveFunctional::new(kron(s.density(), tau.density()));
            ("partial trace, product pair", KrausChannel::partial_trace(2, 2)?, prod(&psi)?, prod(&phi)?)
        },
    ];

    for (name, ch, a, b) in cases {
        let rep = equality_probe(&ch, &a, &b, &grid, &tol)?;
        let gaps: Vec<String> = rep.gaps.iter().map(|(al, g)| format!("{al}: {g:.3e}")).collect();
        println!(
            "{name:<28} sufficient {:<5} petz err {:.2e}  gaps [{}]  violation {}",
            rep.sufficiency.sufficient,
            rep.sufficiency.recovered_psi_error,
            gaps.join(", "),
            rep.violation
        );
    }

    // the recovery map always returns φ
    let ch = KrausChannel::depolarizing(2, 0.8)?;
    let rep = is_sufficient(&ch, &psi, &phi, tol.recovery)?;
    println!("depolarizing 0.8: phi error {:.2e}, psi error {:.3}", rep.recovered_phi_error, rep.recovered_psi_error);
    Ok(())
}

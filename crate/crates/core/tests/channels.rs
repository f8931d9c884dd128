//! Channel fixtures: reversible constructions, frozen irreversible cases and
//! the positivity and dilation contracts on random channels.

use modlp::campaign::{draw_instance, ChannelFamily};
use modlp::matrix::{frobenius, herm_eig, identity, kron};
use modlp::random::{ginibre, isometry_with, random_state, rng_from_seed, state_with};
use modlp::{dpi_gap, equality_probe, is_sufficient, stinespring, KrausChannel, PositiveFunctional, Tolerances};

const EQUALITY_GRID: [f64; 3] = [0.6, 0.75, 0.9];

fn product(a: &PositiveFunctional, b: &PositiveFunctional) -> PositiveFunctional {
    PositiveFunctional::new(kron(a.density(), b.density())).unwrap()
}

#[test]
fn block_embedding_is_sufficient() {
    let tol = Tolerances::default();
    for seed in 0..10 {
        let v = isometry_with(4, 2, &mut rng_from_seed(seed));
        let ch = KrausChannel::isometric(v).unwrap();
        let rep = equality_probe(&ch, &random_state(2, 100 + seed), &random_state(2, 200 + seed), &EQUALITY_GRID, &tol)
            .unwrap();
        assert!(rep.sufficiency.sufficient && !rep.violation);
        assert!(rep.gaps.iter().all(|(_, g)| g.abs() <= 1e-8));
    }
}

#[test]
fn ancilla_attach_then_trace_is_sufficient() {
    let tol = Tolerances::default();
    let tau = random_state(2, 1);
    let attach = KrausChannel::ancilla_attach(3, &tau).unwrap();
    let trace = KrausChannel::partial_trace(3, 2).unwrap();
    let psi = random_state(3, 2);
    let phi = random_state(3, 3);
    let rep = equality_probe(&attach, &psi, &phi, &EQUALITY_GRID, &tol).unwrap();
    assert!(rep.sufficiency.sufficient && !rep.violation);
    let rep = equality_probe(&trace, &product(&psi, &tau), &product(&phi, &tau), &EQUALITY_GRID, &tol).unwrap();
    assert!(rep.sufficiency.sufficient && !rep.violation);
}

#[test]
fn frozen_amplitude_damping_fixture() {
    let ch = KrausChannel::amplitude_damping(0.3).unwrap();
    let psi = random_state(2, 31);
    let phi = random_state(2, 32);
    let rep = equality_probe(&ch, &psi, &phi, &[0.75], &Tolerances::default()).unwrap();
    assert!(!rep.sufficiency.sufficient);
    assert!(rep.gaps[0].1 > 1e-4);
    assert!(!rep.violation);
    let again = dpi_gap(&ch, &psi, &phi, 0.75).unwrap();
    assert_eq!(again.to_bits(), rep.gaps[0].1.to_bits());
}

#[test]
fn identical_states_are_trivially_sufficient() {
    let phi = random_state(3, 4);
    let ch = KrausChannel::depolarizing(3, 0.7).unwrap();
    let rep = equality_probe(&ch, &phi, &phi, &EQUALITY_GRID, &Tolerances::default()).unwrap();
    assert!(rep.sufficiency.sufficient);
    assert!(rep.gaps.iter().all(|(_, g)| g.abs() <= 1e-10));
}

#[test]
fn random_channels_preserve_positivity() {
    let mut rng = rng_from_seed(5);
    for family in [ChannelFamily::RandomStinespring, ChannelFamily::Depolarizing, ChannelFamily::AncillaAttach] {
        for _ in 0..4 {
            let inst = draw_instance(family, &[2, 3, 4], false, &mut rng).unwrap();
            let ch = &inst.channel;
            let choi = herm_eig(&ch.choi()).unwrap();
            assert!(*choi.values.last().unwrap() >= -1e-10);
            for _ in 0..200 / 12 + 1 {
                let x = state_with(ch.d_in(), &mut rng);
                let out = herm_eig(&ch.apply(x.density()).unwrap()).unwrap();
                assert!(*out.values.last().unwrap() >= -1e-10);
            }
        }
    }
}

#[test]
fn stinespring_factorizes_the_dual() {
    let mut rng = rng_from_seed(6);
    for _ in 0..20 {
        let inst = draw_instance(ChannelFamily::RandomStinespring, &[2, 3, 4], false, &mut rng).unwrap();
        let s = stinespring(&inst.channel);
        let vv = s.isometry.adjoint() * &s.isometry;
        assert!(frobenius(&(vv - identity(inst.channel.d_in()))) <= 1e-10);
        let a = ginibre(inst.channel.d_out(), inst.channel.d_out(), &mut rng);
        assert!(frobenius(&(s.dual_apply(&a) - inst.channel.dual_apply(&a).unwrap())) <= 1e-10);
    }
}

#[test]
fn depolarizing_recovery_output_is_fixed() {
    let ch = KrausChannel::depolarizing(3, 1.0).unwrap();
    let psi = random_state(3, 7);
    let phi = random_state(3, 8);
    let rep = is_sufficient(&ch, &psi, &phi, 1e-7).unwrap();
    // the recovered state is φ regardless of input
    let back = rep.recovery.apply(&ch.apply(psi.density()).unwrap()).unwrap();
    assert!(frobenius(&(back - phi.density())) <= 1e-10);
}

//! Structural invariants checked on random inputs.

use modlp::io::MatrixFile;
use modlp::matrix::{conjugate_exponent, frac_power, frobenius, polar_right, schatten_norm};
use modlp::random::{random_hs_vector, random_state, random_unitary};
use modlp::{am_duality_pair, am_norm, bst_norm, d_renyi, HSVector, KrausChannel};
use proptest::prelude::*;

fn exponent() -> impl Strategy<Value = f64> {
    prop_oneof![Just(1.0), 1.01f64..8.0, Just(f64::INFINITY)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn power_additivity(d in 2usize..=4, seed in any::<u64>(), s in -1.5f64..1.5, t in -1.5f64..1.5) {
        let phi = random_state(d, seed);
        let lhs = phi.power(s) * phi.power(t);
        let rhs = phi.power(s + t);
        // powers of an ill-conditioned state can be large; compare relatively
        prop_assert!(frobenius(&(lhs - &rhs)) <= 1e-9 * frobenius(&rhs).max(1.0));
        let via_free = frac_power(phi.density(), s).unwrap();
        prop_assert!(frobenius(&(via_free - phi.power(s))) <= 1e-9 * frobenius(&phi.power(s)).max(1.0));
    }

    #[test]
    fn polar_reconstructs(d in 1usize..=4, seed in any::<u64>()) {
        let m = random_hs_vector(d, seed);
        let (u, abs) = polar_right(&m).unwrap();
        prop_assert!(frobenius(&(&u.matrix * abs.density() - &m)) <= 1e-10 * frobenius(&m));
        prop_assert!(frobenius(&(u.matrix.adjoint() * &u.matrix - &u.initial_proj)) <= 1e-10);
    }

    #[test]
    fn holder_pairing(d in 2usize..=4, seed in any::<u64>(), p in exponent()) {
        let phi = random_state(d, seed);
        let k = HSVector::new(random_hs_vector(d, seed ^ 1)).unwrap();
        let kp = HSVector::new(random_hs_vector(d, seed ^ 2)).unwrap();
        let q = conjugate_exponent(p);
        let pair = am_duality_pair(&k, &kp).norm();
        let bound = am_norm(&k, &phi, p).unwrap() * am_norm(&kp, &phi, q).unwrap();
        prop_assert!(pair <= bound * (1.0 + 1e-10));
    }

    #[test]
    fn norms_are_subadditive(d in 2usize..=4, seed in any::<u64>(), p in exponent()) {
        let phi = random_state(d, seed);
        let a = random_hs_vector(d, seed ^ 3);
        let b = random_hs_vector(d, seed ^ 4);
        let sum = HSVector::new(&a + &b).unwrap();
        let (a, b) = (HSVector::new(a).unwrap(), HSVector::new(b).unwrap());
        for norm in [am_norm, bst_norm] {
            let lhs = norm(&sum, &phi, p).unwrap();
            let rhs = norm(&a, &phi, p).unwrap() + norm(&b, &phi, p).unwrap();
            prop_assert!(lhs <= rhs * (1.0 + 1e-10));
        }
    }

    #[test]
    fn schatten_is_unitarily_invariant(d in 2usize..=4, seed in any::<u64>(), p in exponent()) {
        let m = random_hs_vector(d, seed);
        let u = random_unitary(d, seed ^ 5);
        let v = random_unitary(d, seed ^ 6);
        let a = schatten_norm(&m, p).unwrap();
        let b = schatten_norm(&(&u * &m * &v), p).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a);
    }

    #[test]
    fn divergence_is_nonnegative(d in 2usize..=4, seed in any::<u64>(),
                                 alpha in prop_oneof![0.5f64..0.99, 1.01f64..20.0, Just(f64::INFINITY)]) {
        let psi = random_state(d, seed);
        let phi = random_state(d, seed ^ 7);
        prop_assert!(d_renyi(&psi, &phi, alpha).unwrap().value >= -1e-10);
    }

    #[test]
    fn files_round_trip(d in 1usize..=4, seed in any::<u64>(), lambda in 0.0f64..=1.0) {
        let files = [
            MatrixFile::matrix(random_hs_vector(d, seed)),
            MatrixFile::state(&random_state(d, seed)),
            MatrixFile::functional(&random_state(d, seed).scaled(3.7)),
            MatrixFile::channel(&KrausChannel::depolarizing(d, lambda).unwrap()),
        ];
        for f in files {
            let text = f.to_json().unwrap();
            let back = MatrixFile::from_json(&text).unwrap();
            prop_assert_eq!(&back, &f);
            // equality above is on f64 values; make it bitwise
            for (x, y) in back.matrices.iter().flat_map(|m| m.iter()).zip(f.matrices.iter().flat_map(|m| m.iter())) {
                prop_assert_eq!(x.re.to_bits(), y.re.to_bits());
                prop_assert_eq!(x.im.to_bits(), y.im.to_bits());
            }
            prop_assert_eq!(back.to_json().unwrap(), text);
        }
    }
}

use std::f64::consts::FRAC_PI_4;

use num_complex::Complex64;
use proptest::prelude::*;
use qtsteer_core::linalg::{hermitian_eig, kron, ComplexMatrix};
use qtsteer_core::measures::{
    conditional_entropy, decoherence_triple, joint_distribution, lqu, standard_observables, steerability,
    steering_sum_oracle, Convention, Direction, Space,
};
use qtsteer_core::{accelerate_closed, initial_state, ModelParams, RegionIState, Scenario};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn grid_states() -> Vec<RegionIState> {
    let mut states: Vec<RegionIState> = [0.0, 0.1, 0.25, 0.4, 0.5].iter().map(|&p| initial_state(p).unwrap()).collect();
    for scenario in Scenario::ACCELERATED {
        for p in [0.0, 0.01, 0.05, 0.1, 0.25, 0.4, 0.5] {
            for k in 0..9 {
                let r = FRAC_PI_4 * k as f64 / 8.0;
                states.push(accelerate_closed(&ModelParams::new(scenario, p, r)).unwrap());
            }
        }
    }
    states
}

#[test]
fn total_decoherence_of_initial_family() {
    for k in 0..=10 {
        let p = 0.05 * k as f64;
        let s = initial_state(p).unwrap();
        let by_squaring = 1.0 - (s.matrix() * s.matrix()).trace().re;
        let closed = 1.0 - 1.5 * p * p - (1.0 - 2.0 * p).powi(2);
        let d = decoherence_triple(&s).unwrap();
        assert!((d.d_total - by_squaring).abs() < 1e-12);
        assert!((d.d_total - closed).abs() < 1e-12);
        assert!((d.d_qubit - 0.5).abs() < 1e-15);
    }
}

#[test]
fn decoherence_within_dimension_bounds() {
    for s in grid_states() {
        let d = decoherence_triple(&s).unwrap();
        let n = s.dim() as f64;
        let m = s.qutrit_dim() as f64;
        assert!((0.0..=1.0 - 1.0 / n + 1e-12).contains(&d.d_total));
        assert!((0.0..=0.5 + 1e-12).contains(&d.d_qubit));
        assert!((0.0..=1.0 - 1.0 / m + 1e-12).contains(&d.d_qutrit));
    }
}

#[test]
fn lqu_range_and_symmetry() {
    for s in grid_states() {
        let r = lqu(&s).unwrap();
        assert!(r.asymmetry() < 1e-10);
        assert!((-1e-10..=1.0 + 1e-10).contains(&r.value), "{}", r.value);
    }
}

fn random_unitary(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let h =
        ComplexMatrix::from_fn(dim, |_, _| Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
            .hermitian_part();
    let eig = hermitian_eig(&h).unwrap();
    let v = &eig.eigenvectors;
    let phases = ComplexMatrix::from_fn(dim, |r, c| {
        if r == c {
            Complex64::from_polar(1.0, eig.eigenvalues[r])
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    &(v * &phases) * &v.adjoint()
}

#[test]
fn lqu_invariant_under_qutrit_unitaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for s in grid_states().into_iter().step_by(7) {
        let u = kron(&ComplexMatrix::identity(2), &random_unitary(&mut rng, s.qutrit_dim()));
        let rotated = RegionIState::from_matrix((&(&u * s.matrix()) * &u.adjoint()).hermitian_part()).unwrap();
        let before = lqu(&s).unwrap().value;
        let after = lqu(&rotated).unwrap().value;
        assert!((before - after).abs() < 1e-10, "{before} vs {after}");
    }
}

#[test]
fn joint_marginals_match_local_expectations() {
    for s in grid_states() {
        let qubit = standard_observables(Space::Qubit);
        let qutrit = standard_observables(Space::qutrit_side(s.qutrit_dim()).unwrap());
        for (a, b) in qubit.iter().zip(&qutrit) {
            let joint = joint_distribution(&s, a, b).unwrap();
            assert!((joint.total() - 1.0).abs() < 1e-12);
            for (k, pa) in joint.marginal_a().iter().enumerate() {
                let local = kron(&a.spectrum()[k].projector, &ComplexMatrix::identity(s.qutrit_dim()));
                let direct = (s.matrix() * &local).trace().re;
                assert!((pa - direct).abs() < 1e-12);
            }
            for (k, pb) in joint.marginal_b().iter().enumerate() {
                let local = kron(&ComplexMatrix::identity(2), &b.spectrum()[k].projector);
                let direct = (s.matrix() * &local).trace().re;
                assert!((pb - direct).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn sz_table_of_maximally_entangled_state() {
    let s = initial_state(0.0).unwrap();
    let sz_a = &standard_observables(Space::Qubit)[2];
    let sz_b = &standard_observables(Space::Qutrit)[2];
    let joint = joint_distribution(&s, sz_a, sz_b).unwrap();
    let expect = |a: f64, b: f64, v: f64| assert!((joint.prob_of(a, b).unwrap() - v).abs() < 1e-12, "p({a},{b})");
    expect(1.0, 0.0, 0.5);
    expect(-1.0, 1.0, 0.25);
    expect(-1.0, -1.0, 0.25);
    expect(1.0, 1.0, 0.0);
    expect(1.0, -1.0, 0.0);
    expect(-1.0, 0.0, 0.0);
    assert!((conditional_entropy(&joint) - 0.5).abs() < 1e-12);
}

#[test]
fn maximally_mixed_joint_is_weighted_uniform() {
    let s = RegionIState::from_matrix(ComplexMatrix::identity(6).scale(1.0 / 6.0)).unwrap();
    for a in standard_observables(Space::Qubit) {
        for b in standard_observables(Space::Qutrit) {
            let joint = joint_distribution(&s, &a, &b).unwrap();
            for (i, pa) in a.spectrum().iter().enumerate() {
                for (j, pb) in b.spectrum().iter().enumerate() {
                    let weight = pa.projector.trace().re * pb.projector.trace().re / 6.0;
                    assert!((joint.prob(i, j) - weight).abs() < 1e-12);
                }
            }
        }
    }
}

#[test]
fn steering_sums_ignore_padding_at_rest() {
    for p in [0.0, 0.1, 0.25, 0.4, 0.5] {
        let s = initial_state(p).unwrap();
        for dir in Direction::BOTH {
            let six = steering_sum_oracle(&s, dir).unwrap();
            let eight = steering_sum_oracle(&s.padded(), dir).unwrap();
            let accelerated =
                steering_sum_oracle(&accelerate_closed(&ModelParams::new(Scenario::Both, p, 0.0)).unwrap(), dir)
                    .unwrap();
            assert!((six - eight).abs() < 1e-12);
            assert!((six - accelerated).abs() < 1e-12);
        }
    }
}

#[test]
fn steering_sums_non_negative() {
    for s in grid_states() {
        for dir in Direction::BOTH {
            assert!(steering_sum_oracle(&s, dir).unwrap() >= -1e-12);
        }
    }
}

proptest! {
    #[test]
    fn steerability_in_unit_interval(value in -10.0f64..10.0, ab in any::<bool>(), printed in any::<bool>()) {
        let dir = if ab { Direction::AtoB } else { Direction::BtoA };
        let conv = if printed { Convention::AsPrinted } else { Convention::DeficitNormalized };
        let s = steerability(value, dir, conv);
        prop_assert!((0.0..=1.0).contains(&s));
    }
}

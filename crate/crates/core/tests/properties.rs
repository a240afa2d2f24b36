mod common;

use common::{random_full_partition, random_gsm, random_r_class};
use gsm_core::algebra::random::{
    random_density_matrix_with, random_pure_state, random_separable_state, seeded_rng,
};
use gsm_core::applications::{
    c_max, correlation_matrix, dual_frame, index_of_coincidence, probabilities,
    purity_from_probabilities, separability_test, shannon_renyi_check, Verdict,
};
use gsm_core::construction::{
    block_t_range, build_h_operators, max_common_x, t_from_x, x_from_t, Sign, VariantTag,
};
use gsm_core::designs::{certify_design, choi_of_channel_sum, tensor_square_sum, DesignKind};
use gsm_core::measurement::{classify, verify_gsm};
use gsm_core::{
    build_measurement_block, is_informationally_complete, recover_basis_block, trace_norm,
    variant_coincidence, DensityMatrix, HermitianOperator,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn dims() -> impl Strategy<Value = usize> {
    2usize..=4
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn construction_round_trip(d in dims(), seed in any::<u64>(), v in 0usize..4, frac in 0.05f64..1.0) {
        let p = random_full_partition(d, seed);
        let variant = VariantTag::ALL[v];
        for alpha in 0..p.n_blocks() {
            let t = frac * block_t_range(&p, alpha, variant.primed).unwrap().extreme(variant.sign);
            let e = build_measurement_block(&p, alpha, variant, t).unwrap();
            let g = recover_basis_block(&e, t, variant).unwrap();
            for (a, b) in g.iter().zip(p.block(alpha).unwrap()) {
                prop_assert!(a.matrix().max_abs_diff(b.matrix()) < 1e-8);
            }
            let m = e.len();
            let x = x_from_t(t, m, d, variant.primed);
            prop_assert!((t_from_x(x, m, d, variant).unwrap() - t).abs() < 1e-9 * (1.0 + t.abs()));
        }
    }

    #[test]
    fn h_operators_traceless_and_balanced(d in dims(), seed in any::<u64>(), primed in any::<bool>()) {
        let p = random_full_partition(d, seed);
        for alpha in 0..p.n_blocks() {
            let h = build_h_operators(&p, alpha, primed).unwrap();
            let sum = HermitianOperator::linear_combination(h.iter().map(|x| (1.0, x)));
            prop_assert!(sum.matrix().max_abs() < 1e-9);
            prop_assert!(h.iter().all(|x| x.trace().abs() < 1e-9));
        }
    }

    #[test]
    fn parameter_closure(d in dims(), seed in any::<u64>()) {
        let g = random_gsm(d, seed);
        let p = g.params();
        let df = d as f64;
        for (alpha, &m) in g.block_sizes().iter().enumerate() {
            let mf = m as f64;
            prop_assert!((mf * p.w[alpha] - df).abs() < 1e-9);
            prop_assert!((p.x[alpha] + (mf - 1.0) * p.y[alpha] - p.w[alpha]).abs() < 1e-9);
            for (beta, &mb) in g.block_sizes().iter().enumerate() {
                if beta != alpha {
                    prop_assert!((mb as f64 * p.z[alpha][beta] - p.w[alpha]).abs() < 1e-9);
                }
            }
        }
    }

    #[test]
    fn ic_rank_agrees_with_count(d in dims(), seed in any::<u64>()) {
        let g = random_gsm(d, seed);
        let ic = is_informationally_complete(&g);
        prop_assert!(ic.count_ok() && ic.rank_ok());
        // dropping a POVM loses completeness on both counts
        if g.n_povms() > 1 {
            let mut blocks = g.blocks().to_vec();
            blocks.pop();
            let h = verify_gsm(blocks, d, 1e-9).unwrap();
            let ic = is_informationally_complete(&h);
            prop_assert!(!ic.count_ok() && !ic.rank_ok());
        }
    }

    #[test]
    fn classify_is_relabeling_invariant(d in dims(), seed in any::<u64>(), r_class in any::<bool>()) {
        let g = if r_class { random_r_class(d, seed, 0.7) } else { random_gsm(d, seed) };
        let mut rng = seeded_rng(seed ^ 0x5eed);
        let mut blocks = g.blocks().to_vec();
        blocks.shuffle(&mut rng);
        for b in &mut blocks {
            b.shuffle(&mut rng);
        }
        let h = verify_gsm(blocks, d, 1e-9).unwrap();
        let (a, b) = (classify(&g), classify(&h));
        prop_assert_eq!(&a.kinds, &b.kinds);
        prop_assert_eq!(a.r.is_some(), b.r.is_some());
        if let (Some(x), Some(y)) = (a.r, b.r) {
            prop_assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn r_class_is_conical_design(d in dims(), seed in any::<u64>(), frac in 0.1f64..1.0) {
        let g = random_r_class(d, seed, frac);
        let c = certify_design(&g);
        let r = c.r.expect("r-class");
        prop_assert_eq!(c.kind, DesignKind::Conical2Design);
        prop_assert!((c.kappa_minus - r).abs() < 1e-9);
        prop_assert!((c.kappa_plus - (g.mu() - r / d as f64)).abs() < 1e-9);
        prop_assert!(c.kappa_plus >= c.kappa_minus);
        prop_assert!(c.residual_operator <= 1e-8 && c.residual_map <= 1e-8);
        prop_assert!(c.choi_deviation <= 1e-9 && c.consistent);
        prop_assert!(c.trace_identity_deviation <= 1e-8);
    }

    #[test]
    fn choi_matches_tensor_sum(d in dims(), seed in any::<u64>()) {
        let g = random_gsm(d, seed);
        let choi = choi_of_channel_sum(&g);
        prop_assert!(choi.max_abs_diff(&tensor_square_sum(&g, false)) < 1e-9);
        prop_assert!(choi.hermiticity_residual() < 1e-12);
    }

    #[test]
    fn purity_identity_holds_for_every_gsm(d in dims(), seed in any::<u64>()) {
        let g = random_gsm(d, seed);
        let mut rng = seeded_rng(seed);
        for rank in 1..=d {
            let rho = random_density_matrix_with(d, rank, &mut rng).unwrap();
            let t = probabilities(&g, &rho).unwrap();
            prop_assert!((purity_from_probabilities(&g, &t) - rho.purity()).abs() < 1e-9);
        }
    }

    #[test]
    fn coincidence_bound(d in dims(), seed in any::<u64>()) {
        let g = random_r_class(d, seed, 0.8);
        let cm = c_max(&g).unwrap();
        let mut rng = seeded_rng(seed);
        for _ in 0..5 {
            let mixed = random_density_matrix_with(d, d, &mut rng).unwrap();
            prop_assert!(index_of_coincidence(&probabilities(&g, &mixed).unwrap()) <= cm + 1e-9);
            let pure = random_pure_state(d, &mut rng);
            prop_assert!((index_of_coincidence(&probabilities(&g, &pure).unwrap()) - cm).abs() < 1e-9);
        }
    }

    #[test]
    fn entropy_chain(d in dims(), seed in any::<u64>()) {
        let g = random_r_class(d, seed, 0.5);
        let bound = gsm_core::applications::eur_bound(&g).unwrap().nats;
        let mut rng = seeded_rng(seed);
        let rho = random_density_matrix_with(d, 1 + (seed as usize % d), &mut rng).unwrap();
        let rep = shannon_renyi_check(&probabilities(&g, &rho).unwrap());
        prop_assert!(rep.shannon_dominates_renyi && rep.above_state_bound);
        prop_assert!(rep.state_bound >= bound - 1e-10);
    }

    #[test]
    fn dual_frame_reconstructs(d in dims(), seed in any::<u64>()) {
        let g = random_gsm(d, seed);
        let frame = dual_frame(&g).unwrap();
        let mut rng = seeded_rng(seed);
        for _ in 0..5 {
            let rho = random_density_matrix_with(d, d, &mut rng).unwrap();
            let back = frame.reconstruct(&probabilities(&g, &rho).unwrap()).unwrap();
            prop_assert!(back.matrix().max_abs_diff(rho.matrix()) <= 1e-8);
        }
    }

    #[test]
    fn separable_states_pass(seed in any::<u64>(), da in 2usize..=3, db in 2usize..=3) {
        let ga = random_r_class(da, seed, 0.9);
        let gb = random_r_class(db, seed.wrapping_add(1), 0.9);
        let mut rng = seeded_rng(seed);
        for _ in 0..5 {
            let rho = random_separable_state(da, db, 10, &mut rng);
            let rep = separability_test(&ga, &gb, &rho, 1e-9).unwrap();
            prop_assert_eq!(rep.verdict, Verdict::Inconclusive);
            let p = correlation_matrix(&ga, &gb, &rho).unwrap();
            prop_assert!((p.total() - (ga.n_povms() * gb.n_povms()) as f64).abs() < 1e-8);
            prop_assert!(p.matrix.as_slice().iter().all(|&v| (-1e-12..=1.0 + 1e-12).contains(&v)));
        }
    }

    #[test]
    fn trace_norm_convexity(seed in any::<u64>(), lambda in 0.0f64..1.0) {
        let g = random_r_class(2, seed, 0.9);
        let mut rng = seeded_rng(seed);
        let r1 = random_density_matrix_with(4, 4, &mut rng).unwrap();
        let r2 = random_density_matrix_with(4, 1, &mut rng).unwrap();
        let mix = DensityMatrix::mixture(&[(lambda, &r1), (1.0 - lambda, &r2)]).unwrap();
        let n = |rho: &DensityMatrix| trace_norm(&correlation_matrix(&g, &g, rho).unwrap().matrix.to_complex());
        prop_assert!(n(&mix) <= lambda * n(&r1) + (1.0 - lambda) * n(&r2) + 1e-10);
    }

    #[test]
    fn coincidence_of_variants(d in dims(), seed in any::<u64>(), m in 2usize..=4) {
        prop_assume!(m < d * d);
        let mut rng = seeded_rng(seed);
        let p = gsm_core::basis::random_partition(d, &[m], &mut rng).unwrap();
        let lo = d as f64 / (m * m) as f64;
        let hi = max_common_x(&p, 0).unwrap();
        prop_assume!(hi > lo * (1.0 + 1e-6));
        let x = lo + 0.5 * (hi - lo);
        let rep = variant_coincidence(&p, 0, x).unwrap();
        prop_assert_eq!(rep.equal_sets(), m <= 3);
        match m {
            2 => prop_assert_eq!(rep.pairing.clone(), Some(vec![0, 1])),
            3 => prop_assert_eq!(rep.pairing.clone(), Some(vec![1, 0, 2])),
            _ => prop_assert!(rep.pairing.is_none()),
        }
        prop_assert!(rep.t > 0.0 && rep.t_primed < 0.0);
    }
}

#[test]
fn maximally_entangled_violates() {
    for d in [2usize, 3] {
        let g = random_r_class(d, 7, 0.9);
        let rho = gsm_core::max_entangled_projector(d).unwrap();
        let rep = separability_test(&g, &g, &rho, 1e-9).unwrap();
        assert_eq!(rep.verdict, Verdict::Entangled);
        assert!(rep.trace_norm.margin() > 0.0);
    }
}

#[test]
fn non_ic_rejected_by_frame() {
    let g = random_gsm(3, 3);
    let mut blocks = g.blocks().to_vec();
    blocks.truncate(1);
    let h = verify_gsm(blocks, 3, 1e-9).unwrap();
    match dual_frame(&h) {
        Err(gsm_core::Error::NotInformationallyComplete { rank, full, .. }) => assert!(rank < full),
        other => panic!("expected rejection, got {other:?}"),
    }
}

#[test]
fn c_max_requires_r_class() {
    let p = gsm_core::partition_basis(&gsm_core::gell_mann_basis(2).unwrap(), &[2, 3]).unwrap();
    let v = VariantTag::new(false, Sign::Plus);
    let g = gsm_core::construct_gsm(&p, &[(v, 0.2), (v, 0.05)], 1e-9).unwrap();
    assert_eq!(c_max(&g), Err(gsm_core::Error::NotRClass));
    let mixed = DensityMatrix::maximally_mixed(4);
    assert!(separability_test(&g, &g, &mixed, 1e-9).is_err());
}

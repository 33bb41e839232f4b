use colhopf::coefficients::{Colour, ParamSampler};
use colhopf::colour::sigma;
use colhopf::hopf::{
    homogeneous_part, random_element, verify_bialgebra, verify_reduction, ColouredMapContext,
};
use colhopf::pbw::{AlgebraElement, Home, Monomial, TensorElement, TwistConvention};
use colhopf::representation::*;
use proptest::prelude::*;

fn sampled(seed: u64) -> (ParamSampler, Home) {
    let mut sampler = ParamSampler::new(seed);
    let p = sampler.point();
    let nu = sampler.colour(&p);
    (sampler, Home::copy(p, nu))
}

fn elements(seed: u64, n: usize) -> (ParamSampler, Vec<AlgebraElement>) {
    let (mut sampler, home) = sampled(seed);
    let xs = (0..n)
        .map(|_| random_element(sampler.rng(), home))
        .collect();
    (sampler, xs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(seed in any::<u64>()) {
        let (_, xs) = elements(seed, 3);
        let lhs = xs[0].multiply(&xs[1]).unwrap().multiply(&xs[2]).unwrap();
        let rhs = xs[0].multiply(&xs[1].multiply(&xs[2]).unwrap()).unwrap();
        prop_assert!(lhs.residual(&rhs) <= 1e-11, "{}", lhs.residual(&rhs));
    }

    #[test]
    fn unit_leaves_normal_monomials_unchanged(
        seed in any::<u64>(), a in 0u32..3, b in 0u32..3, plus in any::<bool>(), minus in any::<bool>(), alpha in -2.0..2.0f64,
    ) {
        let (_, home) = sampled(seed);
        let mut m = Monomial::UNIT;
        m.z_deg = a;
        m.h_deg = b;
        m.plus = plus;
        m.minus = minus;
        m.alpha = colhopf::C64::new(alpha, 0.5);
        let x = AlgebraElement::monomial(home, m, colhopf::C64::new(1.5, -0.5));
        let one = AlgebraElement::one(home);
        prop_assert_eq!(x.multiply(&one).unwrap().residual(&x), 0.0);
        prop_assert_eq!(one.multiply(&x).unwrap().residual(&x), 0.0);
    }

    #[test]
    fn parity_is_additive(seed in any::<u64>(), px in 0u8..2, py in 0u8..2) {
        let (_, xs) = elements(seed, 2);
        let x = homogeneous_part(&xs[0], px);
        let y = homogeneous_part(&xs[1], py);
        let xy = x.multiply(&y).unwrap();
        if !xy.is_zero() {
            prop_assert_eq!(xy.parity(), Some((px + py) % 2));
        }
    }

    #[test]
    fn grading_is_an_automorphism(seed in any::<u64>()) {
        let (_, xs) = elements(seed, 2);
        let lhs = xs[0].multiply(&xs[1]).unwrap().grading_automorphism();
        let rhs = xs[0].grading_automorphism().multiply(&xs[1].grading_automorphism()).unwrap();
        prop_assert!(lhs.residual(&rhs) <= 1e-12);
    }

    #[test]
    fn representation_is_multiplicative(seed in any::<u64>()) {
        let (_, xs) = elements(seed, 2);
        let lhs = rep(&xs[0].multiply(&xs[1]).unwrap()).entries;
        let rhs = rep(&xs[0]).entries * rep(&xs[1]).entries;
        prop_assert!(frobenius_residual(&lhs, &rhs) <= 1e-12);
    }

    #[test]
    fn sigma_is_an_algebra_map(seed in any::<u64>()) {
        let (mut sampler, xs) = elements(seed, 2);
        let p = xs[0].home().point();
        let nu = sampler.colour_composable(&p, Colour::new(xs[0].home().colour()).unwrap());
        let lhs = sigma(nu, &xs[0].multiply(&xs[1]).unwrap()).unwrap();
        let rhs = sigma(nu, &xs[0]).unwrap().multiply(&sigma(nu, &xs[1]).unwrap()).unwrap();
        prop_assert!(lhs.residual(&rhs) <= 1e-11, "{}", lhs.residual(&rhs));
    }

    #[test]
    fn coproduct_is_an_algebra_map(seed in any::<u64>()) {
        let (mut sampler, home) = sampled(seed);
        let p = home.point();
        let [l, m] = sampler.colours::<2>(&p);
        let map = ColouredMapContext::new(p, l, m, Colour::new(home.colour()).unwrap()).unwrap();
        let pairs: Vec<_> = (0..3)
            .map(|_| (random_element(sampler.rng(), home), random_element(sampler.rng(), home)))
            .map(|(x, y)| (homogeneous_part(&x, 1), homogeneous_part(&y, 0)))
            .collect();
        let report = verify_bialgebra(&map, &pairs, TwistConvention::Graded).unwrap();
        prop_assert!(report.within(1e-10), "{}", report);
    }

    #[test]
    fn uncoloured_maps_are_recovered(seed in any::<u64>()) {
        let mut sampler = ParamSampler::new(seed);
        let p = sampler.point();
        let home = Home::base(p);
        let mut probes: Vec<_> = AlgebraElement::generators(home).into();
        probes.extend((0..3).map(|_| random_element(sampler.rng(), home)));
        let report = verify_reduction(p, &probes).unwrap();
        prop_assert!(report.within(1e-12), "{}", report);
    }

    #[test]
    fn rep_tensor_is_multiplicative(seed in any::<u64>()) {
        let mut sampler = ParamSampler::new(seed);
        let p = sampler.point();
        let [a, b] = sampler.colours::<2>(&p);
        let (ha, hb) = (Home::copy(p, a), Home::copy(p, b));
        let mut pure = || {
            let x = random_element(sampler.rng(), ha);
            let y = random_element(sampler.rng(), hb);
            TensorElement::pure(&[&x, &y])
        };
        let (u, v) = (pure(), pure());
        let lhs = rep_tensor(&u.tensor_multiply(&v).unwrap()).entries;
        let rhs = rep_tensor(&u).entries * rep_tensor(&v).entries;
        prop_assert!(frobenius_residual(&lhs, &rhs) <= 1e-11);
    }

    #[test]
    fn r_matrix_routes_agree_and_satisfy_ybe(seed in any::<u64>()) {
        let mut sampler = ParamSampler::new(seed);
        let p = sampler.point();
        let [l, m, n] = sampler.colours::<3>(&p);
        prop_assert!(check_cross_validation(p, l, m).unwrap() <= 1e-12);
        prop_assert!(check_coloured_graded_ybe(p, l, m, n).unwrap() <= 1e-10);
        prop_assert!(check_perturbed_ybe(p, l, m, n, 0.01).unwrap() > 1e-6);
        prop_assert!(check_inverse(p, l, m).unwrap() <= 1e-12);
    }
}

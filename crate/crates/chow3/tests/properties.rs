//! Randomized structural invariants of the blowup calculus: product
//! symmetry, projection formula, pullback/pushforward adjunction,
//! blowdown invariance of c1·c2, and the zero-section identities.

mod common;

use chow3::chow::{BlowupRecord, CurveCenterSpec, DivisorClass, ThreefoldModel};
use chow3::property_a::{property_a_report, subcase22_certificate};
use chow3::rat::{self, Rat};
use num_traits::Zero;
use rand::Rng;

#[test]
fn triple_product_is_permutation_invariant() {
    let mut rng = common::rng(101);
    for _ in 0..20 {
        let depth = rng.gen_range(0..=4);
        let model = common::random_model(&mut rng, depth);
        model
            .validate()
            .expect("random model tables are consistent");
        // All six orders on a random triple of (possibly repeated)
        // basis divisors.
        for _ in 0..5 {
            let i = rng.gen_range(0..model.divisor_rank());
            let j = rng.gen_range(0..model.divisor_rank());
            let k = rng.gen_range(0..model.divisor_rank());
            let (a, b, c) = (
                model.basis_divisor(i),
                model.basis_divisor(j),
                model.basis_divisor(k),
            );
            let orders = [
                model.triple(&a, &b, &c).unwrap(),
                model.triple(&a, &c, &b).unwrap(),
                model.triple(&b, &a, &c).unwrap(),
                model.triple(&b, &c, &a).unwrap(),
                model.triple(&c, &a, &b).unwrap(),
                model.triple(&c, &b, &a).unwrap(),
            ];
            assert!(orders.iter().all(|v| *v == orders[0]));
        }
    }
}

#[test]
fn projection_formula_on_basis_classes() {
    let mut rng = common::rng(202);
    for _ in 0..25 {
        let depth = rng.gen_range(0..=3);
        let parent = common::random_model(&mut rng, depth);
        let child = common::random_blowup(&mut rng, &parent);
        let a = common::random_divisor(&mut rng, &parent);
        let b = common::random_divisor(&mut rng, &parent);
        let a_up = child.pullback_divisor(&a).unwrap();
        let b_up = child.pullback_divisor(&b).unwrap();

        // Divisor-degree classes: pi_*(pi^*a · pi^*b · x) = a·b·pi_*(x).
        for i in 0..child.divisor_rank() {
            let x = child.basis_divisor(i);
            let lhs = child.triple(&a_up, &b_up, &x).unwrap();
            let rhs = parent
                .pair(
                    &child.pushforward_divisor(&x).unwrap(),
                    &parent.mul_divisors(&a, &b).unwrap(),
                )
                .unwrap();
            assert_eq!(lhs, rhs);
        }
        // Curve-degree classes: pi^*a · x = a · pi_*(x).
        for j in 0..child.curve_rank() {
            let x = child.basis_curve(j);
            let lhs = child.pair(&a_up, &x).unwrap();
            let rhs = parent
                .pair(&a, &child.pushforward_curve(&x).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn pushforward_inverts_pullback() {
    let mut rng = common::rng(303);
    for _ in 0..25 {
        let depth = rng.gen_range(0..=3);
        let parent = common::random_model(&mut rng, depth);
        let child = common::random_blowup(&mut rng, &parent);
        let d = common::random_divisor(&mut rng, &parent);
        let c = common::random_curve(&mut rng, &parent);
        assert_eq!(
            child
                .pushforward_divisor(&child.pullback_divisor(&d).unwrap())
                .unwrap(),
            d
        );
        assert_eq!(
            child
                .pushforward_curve(&child.pullback_curve(&c).unwrap())
                .unwrap(),
            c
        );
        // Pulled-back products evaluate as in the parent.
        let e = common::random_divisor(&mut rng, &parent);
        let f = common::random_divisor(&mut rng, &parent);
        assert_eq!(
            child
                .triple(
                    &child.pullback_divisor(&d).unwrap(),
                    &child.pullback_divisor(&e).unwrap(),
                    &child.pullback_divisor(&f).unwrap(),
                )
                .unwrap(),
            parent.triple(&d, &e, &f).unwrap()
        );
    }
}

#[test]
fn c1_c2_is_blowdown_invariant() {
    let mut rng = common::rng(404);
    for _ in 0..60 {
        let depth = rng.gen_range(0..=5);
        let model = common::random_model(&mut rng, depth);
        assert_eq!(model.pair(model.c1(), model.c2()).unwrap(), rat::int(24));
    }
}

#[test]
fn exceptional_rules_on_random_models() {
    let mut rng = common::rng(505);
    for _ in 0..20 {
        let depth = rng.gen_range(0..=3);
        let parent = common::random_model(&mut rng, depth);
        let a = common::random_divisor(&mut rng, &parent);

        // Point blowup: E³ = 1, pi^*a·E² = 0, E·l = −1.
        let child = parent.blow_up_point();
        let e = child.basis_divisor(child.divisor_rank() - 1);
        let l = child.basis_curve(child.curve_rank() - 1);
        let a_up = child.pullback_divisor(&a).unwrap();
        assert_eq!(child.triple(&e, &e, &e).unwrap(), rat::int(1));
        assert_eq!(child.triple(&a_up, &e, &e).unwrap(), rat::int(0));
        assert_eq!(child.pair(&e, &l).unwrap(), rat::int(-1));
        assert!(child.pushforward_divisor(&e).unwrap().is_zero());

        // Curve blowup: F³ = −γ, pi^*a·F² = −(a·C), F·f = −1,
        // pi_*(F²) = −C.
        let center = common::random_center(&mut rng, &parent);
        let center_class = center.class.clone();
        let child = parent.blow_up_curve(center).unwrap();
        let gamma = match child.provenance().last().unwrap() {
            BlowupRecord::Curve { gamma, .. } => *gamma,
            _ => unreachable!(),
        };
        let f_div = child.basis_divisor(child.divisor_rank() - 1);
        let fiber = child.basis_curve(child.curve_rank() - 1);
        let a_up = child.pullback_divisor(&a).unwrap();
        assert_eq!(
            child.triple(&f_div, &f_div, &f_div).unwrap(),
            rat::int(-gamma)
        );
        assert_eq!(
            child.triple(&a_up, &f_div, &f_div).unwrap(),
            -parent.pair(&a, &center_class).unwrap()
        );
        assert_eq!(child.pair(&f_div, &fiber).unwrap(), rat::int(-1));
        let ff = child.mul_divisors(&f_div, &f_div).unwrap();
        assert_eq!(child.pushforward_curve(&ff).unwrap(), center_class.neg());
    }
}

#[test]
fn zeta_square_f_coefficient_identity() {
    // For ζ = π*ξ − αF over a curve blowup, the f-coefficient of ζ² is
    // α²γ − 2α(ξ·C); with ζ² = 0 and α ≠ 0 this forces ξ·C = αγ/2.
    let mut rng = common::rng(606);
    for _ in 0..25 {
        let depth = rng.gen_range(0..=3);
        let parent = common::random_model(&mut rng, depth);
        let center = common::random_center(&mut rng, &parent);
        let center_class = center.class.clone();
        let child = parent.blow_up_curve(center).unwrap();
        let gamma = child.provenance().last().unwrap().gamma().unwrap();
        let xi = common::random_divisor(&mut rng, &parent);
        let alpha = rat::frac(rng.gen_range(1..=9), rng.gen_range(1..=4));
        let f_div = child.basis_divisor(child.divisor_rank() - 1);
        let zeta = child
            .pullback_divisor(&xi)
            .unwrap()
            .sub(&f_div.scale(&alpha));
        let zeta_sq = child.mul_divisors(&zeta, &zeta).unwrap();
        let xi_c = parent.pair(&xi, &center_class).unwrap();
        let expected = &alpha * &alpha * rat::int(gamma) - rat::int(2) * &alpha * &xi_c;
        assert_eq!(*zeta_sq.coeff(child.curve_rank() - 1), expected);
    }
}

#[test]
fn subcase22_value_is_alpha_tau_halves() {
    // Random (γ, α, τ) with admissible parity and ξ·C = αγ/2 pin the
    // zero-section pairing at exactly ατ/2.
    let mut rng = common::rng(707);
    let mut done = 0;
    while done < 40 {
        let depth = rng.gen_range(1..=3);
        let parent = common::random_model(&mut rng, depth);
        let center = common::random_center(&mut rng, &parent);
        let center_class = center.class.clone();
        // Find a basis divisor pairing nontrivially with the center so
        // ξ can be tuned to ξ·C = αγ/2.
        let Some(i) = (0..parent.divisor_rank()).find(|&i| {
            !parent
                .pair(&parent.basis_divisor(i), &center_class)
                .unwrap()
                .is_zero()
        }) else {
            continue;
        };
        let child = parent.blow_up_curve(center).unwrap();
        let gamma = child.provenance().last().unwrap().gamma().unwrap();
        let alpha = rat::frac(rng.gen_range(1..=9), rng.gen_range(1..=4));
        let tau = (if gamma.rem_euclid(2) == 1 { -1 } else { 0 }) - 2 * rng.gen_range(0..=4i64);
        let p = parent
            .pair(&parent.basis_divisor(i), &center_class)
            .unwrap();
        let xi = parent
            .basis_divisor(i)
            .scale(&((&alpha * rat::frac(gamma, 2)) / &p));
        let out = subcase22_certificate(&child, &xi, &alpha, tau).unwrap();
        assert_eq!(out.value, &alpha * rat::frac(tau, 2));
        assert_eq!(out.contradiction, tau < 0);
        done += 1;
    }
}

#[test]
fn pullback_class_identities_after_curve_blowup() {
    // ζ = π*ξ: ζ·c₁(X)² = ξ·c₁(Y)² − ξ·C and ζ·c₂(X) = ξ·c₂(Y) + ξ·C.
    let mut rng = common::rng(808);
    for _ in 0..30 {
        let depth = rng.gen_range(0..=3);
        let parent = common::random_model(&mut rng, depth);
        let center = common::random_center(&mut rng, &parent);
        let center_class = center.class.clone();
        let child = parent.blow_up_curve(center).unwrap();
        let xi = common::random_divisor(&mut rng, &parent);
        let zeta = child.pullback_divisor(&xi).unwrap();
        let report = property_a_report(&child, &zeta).unwrap();
        let xi_c = parent.pair(&xi, &center_class).unwrap();
        let xi_c1_sq = parent.triple(&xi, parent.c1(), parent.c1()).unwrap();
        let xi_c2 = parent.pair(&xi, parent.c2()).unwrap();
        assert_eq!(report.zeta_c1_sq, &xi_c1_sq - &xi_c);
        assert_eq!(report.zeta_c2, &xi_c2 + &xi_c);
    }
}

#[test]
fn strict_transform_degree_drop() {
    let mut rng = common::rng(909);
    for _ in 0..20 {
        let depth = rng.gen_range(0..=3);
        let parent = common::random_model(&mut rng, depth);
        let z = common::random_curve(&mut rng, &parent);
        let m = rng.gen_range(0..=4u32);
        let parent_degree = parent.pair(parent.c1(), &z).unwrap();

        let child = parent.blow_up_point();
        let t = child.strict_transform(&z, m).unwrap();
        assert_eq!(
            child.pair(child.c1(), &t).unwrap(),
            &parent_degree - rat::int(2 * i64::from(m))
        );

        let center = common::random_center(&mut rng, &parent);
        let child = parent.blow_up_curve(center).unwrap();
        let t = child.strict_transform(&z, m).unwrap();
        assert_eq!(
            child.pair(child.c1(), &t).unwrap(),
            &parent_degree - rat::int(i64::from(m))
        );
    }
}

#[test]
fn zero_section_pushes_forward_to_center() {
    let mut rng = common::rng(1010);
    for _ in 0..20 {
        let depth = rng.gen_range(0..=2);
        let parent = common::random_model(&mut rng, depth);
        let center = common::random_center(&mut rng, &parent);
        let center_class = center.class.clone();
        let child = parent.blow_up_curve(center).unwrap();
        let index = child.provenance().len() - 1;
        let gamma = child.provenance()[index].gamma().unwrap();
        let tau = (if gamma.rem_euclid(2) == 1 { -1 } else { 0 }) - 2 * rng.gen_range(0..=3i64);
        let c0 = child.zero_section_class(index, tau).unwrap();
        assert_eq!(child.pushforward_curve(&c0).unwrap(), center_class);
        // In basis coordinates C₀ = π*C + ((τ−γ)/2)·f.
        let expected = child.pullback_curve(&center_class).unwrap().add(
            &child
                .basis_curve(child.curve_rank() - 1)
                .scale(&rat::frac(tau - gamma, 2)),
        );
        assert_eq!(c0, expected);
    }
}

#[test]
fn tuned_center_reaches_odd_gamma() {
    // Fibers of curve blowups have c₁-degree 1, so after one curve
    // blowup every integer γ is realized by some center; check the
    // bookkeeping degree formula on a line-plus-fiber class.
    let p3 = ThreefoldModel::p3();
    let x1 = p3
        .blow_up_curve(CurveCenterSpec::new(
            p3.curve_by_name("L").unwrap(),
            0,
            true,
            None,
        ))
        .unwrap();
    for target in -5..=5i64 {
        let class = x1
            .curve_by_name("L")
            .unwrap()
            .add(&x1.curve_by_name("f1").unwrap().scale(&rat::int(target - 4)));
        let gamma = x1
            .center_gamma(&CurveCenterSpec::new(class, 0, true, None))
            .unwrap();
        assert_eq!(gamma, target - 2);
    }
}

#[test]
fn property_a_zero_class_is_trivially_met() {
    let mut rng = common::rng(1111);
    let model = common::random_model(&mut rng, 3);
    let report = property_a_report(&model, &DivisorClass::zero(model.divisor_rank())).unwrap();
    assert!(report.hypotheses_met);
    assert_eq!(report.zeta_c1_sq, Rat::zero());
    assert_eq!(report.zeta_c2, Rat::zero());
}

#[test]
fn theorem1_depends_only_on_parity_and_decomposability() {
    use chow3::property_a::{theorem1_check, Center, Theorem1Reason};
    // On the line blowup, classes a·L + b·f1 have c₁-degree 4a + b, so
    // both parities are reachable; sweep small centers against genus
    // and the decomposability flag.
    let p3 = ThreefoldModel::p3();
    let x = p3
        .blow_up_curve(CurveCenterSpec::new(
            p3.curve_by_name("L").unwrap(),
            0,
            true,
            None,
        ))
        .unwrap();
    for a in 0..=2i64 {
        for b in -2..=2i64 {
            for genus in 0..=2u32 {
                for decomposable in [false, true] {
                    let class = x
                        .curve_by_name("L")
                        .unwrap()
                        .scale(&rat::int(a))
                        .add(&x.curve_by_name("f1").unwrap().scale(&rat::int(b)));
                    let spec = CurveCenterSpec::new(class, genus, decomposable, None);
                    let verdict = theorem1_check(&x, &Center::Curve(spec)).unwrap();
                    let odd = (4 * a + b).rem_euclid(2) == 1;
                    let effective = decomposable || genus == 0;
                    assert_eq!(verdict.applicable, odd && effective);
                    let expected = if !odd {
                        Theorem1Reason::FailsParity
                    } else if effective {
                        Theorem1Reason::OddDegreeAndDecomposable
                    } else {
                        Theorem1Reason::DecomposabilityUnknown
                    };
                    assert_eq!(verdict.reason, expected);
                }
            }
        }
    }
}

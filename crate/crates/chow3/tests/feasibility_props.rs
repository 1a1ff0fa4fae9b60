//! Fourier–Motzkin elimination against the brute-force vertex oracle,
//! plus order-independence and rescaling invariance.

mod common;

use chow3::feasibility::{Constraint, ConstraintSystem, LinExpr, Relation};
use chow3::rat;
use rand::Rng;

#[test]
fn elimination_agrees_with_vertex_oracle() {
    let mut rng = common::rng(4242);
    for case in 0..120 {
        let sys = common::random_system(&mut rng);
        let fm = sys.is_feasible();
        let oracle = common::oracle_feasible(&sys);
        assert_eq!(fm, oracle, "case {case} disagrees on\n{sys}");
    }
}

#[test]
fn elimination_order_does_not_change_the_verdict() {
    let mut rng = common::rng(4343);
    for _ in 0..60 {
        let sys = common::random_system(&mut rng);
        let verdict = sys.is_feasible();

        let mut forward = sys.clone();
        for var in sys.vars() {
            forward = forward.eliminate_variable(&var);
        }
        let mut backward = sys.clone();
        for var in sys.vars().into_iter().rev() {
            backward = backward.eliminate_variable(&var);
        }
        assert!(forward.vars().is_empty());
        assert!(backward.vars().is_empty());
        assert_eq!(forward.is_feasible(), verdict);
        assert_eq!(backward.is_feasible(), verdict);
    }
}

#[test]
fn eliminated_variable_is_gone_and_feasibility_is_preserved() {
    let mut rng = common::rng(4444);
    for _ in 0..60 {
        let sys = common::random_system(&mut rng);
        let Some(var) = sys.vars().into_iter().next() else {
            continue;
        };
        let reduced = sys.eliminate_variable(&var);
        assert!(!reduced.vars().contains(&var));
        assert_eq!(reduced.is_feasible(), sys.is_feasible());
    }
}

#[test]
fn forces_zero_is_invariant_under_positive_rescaling() {
    let mut rng = common::rng(4545);
    for _ in 0..40 {
        // Random homogeneous system over x0..x3 with the x0 ≥ 0 sign
        // constraint present.
        let nvars = rng.gen_range(1..=4usize);
        let mut sys = ConstraintSystem::new();
        sys.push(Constraint::new(LinExpr::var("x0"), Relation::Ge));
        for _ in 0..rng.gen_range(1..=4usize) {
            let mut expr = LinExpr::new();
            for v in 0..nvars {
                expr.add_term(rat::int(rng.gen_range(-4..=4)), format!("x{v}"));
            }
            let rel = if rng.gen_bool(0.3) {
                Relation::Eq
            } else {
                Relation::Ge
            };
            sys.push(Constraint::new(expr, rel));
        }
        let baseline = sys.forces_zero("x0").unwrap();

        let mut scaled = ConstraintSystem::new();
        for c in sys.constraints() {
            let s = rat::frac(rng.gen_range(1..=7), rng.gen_range(1..=7));
            scaled.push(Constraint::new(c.expr.scale(&s), c.rel));
        }
        assert_eq!(scaled.forces_zero("x0").unwrap(), baseline);
    }
}

#[test]
fn strict_and_weak_differ_exactly_on_the_boundary() {
    // {x ≥ 3, −x ≥ −3} pins x = 3; turning either into a strict
    // inequality empties the set.
    let weak = ConstraintSystem::parse("x - 3 >= 0\n-x + 3 >= 0").unwrap();
    assert!(weak.is_feasible());
    assert!(common::oracle_feasible(&weak));
    let strict = ConstraintSystem::parse("x - 3 > 0\n-x + 3 >= 0").unwrap();
    assert!(!strict.is_feasible());
    assert!(!common::oracle_feasible(&strict));
}

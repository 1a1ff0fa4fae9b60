//! Shared helpers for the integration and acceptance suites: seeded
//! random models/classes/systems and a brute-force feasibility oracle
//! kept independent of the Fourier–Motzkin implementation.
#![allow(dead_code)]

use chow3::chow::{CurveCenterSpec, CurveClass, DivisorClass, ThreefoldModel};
use chow3::feasibility::{Constraint, ConstraintSystem, LinExpr, Relation};
use chow3::rat::{self, Rat};
use itertools::Itertools;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random blowup sequence from P³: each step blows up a point, or a
/// curve with small integral class, genus ≤ 2, and occasionally a
/// parity-correct tau.
pub fn random_model(rng: &mut ChaCha8Rng, depth: usize) -> ThreefoldModel {
    let mut model = ThreefoldModel::p3();
    for _ in 0..depth {
        model = random_blowup(rng, &model);
    }
    model
}

pub fn random_blowup(rng: &mut ChaCha8Rng, model: &ThreefoldModel) -> ThreefoldModel {
    if rng.gen_bool(0.5) {
        return model.blow_up_point();
    }
    let center = random_center(rng, model);
    model
        .blow_up_curve(center)
        .expect("random centers are integral with admissible tau")
}

/// A curve center with small integer coordinates and admissible data.
pub fn random_center(rng: &mut ChaCha8Rng, model: &ThreefoldModel) -> CurveCenterSpec {
    let coeffs: Vec<Rat> = (0..model.curve_rank())
        .map(|_| rat::int(rng.gen_range(-2..=3)))
        .collect();
    let class = CurveClass::new(coeffs);
    let genus = rng.gen_range(0..=2u32);
    let mut spec = CurveCenterSpec::new(class, genus, true, None);
    if rng.gen_bool(0.3) {
        let gamma = model
            .center_gamma(&spec)
            .expect("integer classes pair integrally");
        let base = if gamma.rem_euclid(2) == 1 { -1 } else { 0 };
        spec.tau = Some(base - 2 * rng.gen_range(0..=3i64));
    }
    spec
}

/// A divisor class with small rational coordinates.
pub fn random_divisor(rng: &mut ChaCha8Rng, model: &ThreefoldModel) -> DivisorClass {
    DivisorClass::new(
        (0..model.divisor_rank())
            .map(|_| rat::frac(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
            .collect(),
    )
}

pub fn random_curve(rng: &mut ChaCha8Rng, model: &ThreefoldModel) -> CurveClass {
    CurveClass::new(
        (0..model.curve_rank())
            .map(|_| rat::frac(rng.gen_range(-6..=6), rng.gen_range(1..=3)))
            .collect(),
    )
}

/// A random small system: ≤ 4 variables, ≤ 5 constraints, integer
/// coefficients and constants in [−5, 5].
pub fn random_system(rng: &mut ChaCha8Rng) -> ConstraintSystem {
    let nvars = rng.gen_range(1..=4usize);
    let nconstraints = rng.gen_range(1..=5usize);
    let mut sys = ConstraintSystem::new();
    for _ in 0..nconstraints {
        let mut expr = LinExpr::new();
        for v in 0..nvars {
            let coeff = rng.gen_range(-5..=5i64);
            expr.add_term(rat::int(coeff), format!("x{v}"));
        }
        expr.add_constant(rat::int(rng.gen_range(-5..=5i64)));
        let rel = match rng.gen_range(0..4u8) {
            0 => Relation::Eq,
            1 => Relation::Gt,
            _ => Relation::Ge,
        };
        sys.push(Constraint::new(expr, rel));
    }
    sys
}

// ---------------------------------------------------------------------------
// Brute-force feasibility oracle: vertex enumeration on a lifted
// polytope. Independent of the Fourier–Motzkin path.
//
// Strict constraints get a shared slack variable eps (expr − eps ≥ 0);
// the original system is feasible over ℚ iff the polytope
//   { weak constraints, equalities, 0 ≤ eps ≤ 1, |x_i| ≤ BOX }
// contains a point with eps > 0. The box is sound because, for integer
// data bounded by 5 with at most 4 variables, any feasible face
// contains a point whose coordinates are ratios of minors far below
// BOX (Hadamard bound ≈ 1e6); eps-optimal points stay below ~1e10.
// Every vertex of the polytope solves some (nvars+1)-subset of the
// constraint rows as equalities, so enumerating all square subsystems
// finds a witness whenever one exists.
// ---------------------------------------------------------------------------

const BOX: i64 = 1_000_000_000_000;

struct Row {
    coeffs: Vec<Rat>, // over x_0..x_{nv-1}, eps
    rhs: Rat,
    eq: bool,
}

pub fn oracle_feasible(system: &ConstraintSystem) -> bool {
    let vars: Vec<String> = system.vars().into_iter().collect();
    let nv = vars.len();
    if nv == 0 {
        return system.constraints().iter().all(|c| {
            let v = c.expr.constant_term();
            match c.rel {
                Relation::Eq => v.is_zero(),
                Relation::Ge => !v.is_negative(),
                Relation::Gt => v.is_positive(),
            }
        });
    }
    let unknowns = nv + 1; // x's plus eps
    let mut rows: Vec<Row> = Vec::new();
    for c in system.constraints() {
        let mut coeffs: Vec<Rat> = vars.iter().map(|v| c.expr.coeff(v)).collect();
        coeffs.push(if c.rel == Relation::Gt {
            rat::int(-1)
        } else {
            rat::int(0)
        });
        rows.push(Row {
            coeffs,
            rhs: -c.expr.constant_term().clone(),
            eq: c.rel == Relation::Eq,
        });
    }
    // 0 ≤ eps ≤ 1.
    let mut eps_low = vec![rat::int(0); unknowns];
    eps_low[nv] = rat::int(1);
    rows.push(Row {
        coeffs: eps_low,
        rhs: rat::int(0),
        eq: false,
    });
    let mut eps_high = vec![rat::int(0); unknowns];
    eps_high[nv] = rat::int(-1);
    rows.push(Row {
        coeffs: eps_high,
        rhs: rat::int(-1),
        eq: false,
    });
    // |x_i| ≤ BOX.
    for i in 0..nv {
        let mut up = vec![rat::int(0); unknowns];
        up[i] = rat::int(-1);
        rows.push(Row {
            coeffs: up,
            rhs: rat::int(-BOX),
            eq: false,
        });
        let mut down = vec![rat::int(0); unknowns];
        down[i] = rat::int(1);
        rows.push(Row {
            coeffs: down,
            rhs: rat::int(-BOX),
            eq: false,
        });
    }

    for subset in (0..rows.len()).combinations(unknowns) {
        let matrix: Vec<Vec<Rat>> = subset.iter().map(|&i| rows[i].coeffs.clone()).collect();
        let rhs: Vec<Rat> = subset.iter().map(|&i| rows[i].rhs.clone()).collect();
        let Some(candidate) = solve_square(matrix, rhs) else {
            continue;
        };
        if !candidate[nv].is_positive() {
            continue; // need eps > 0 to witness the strict constraints
        }
        let ok = rows.iter().all(|row| {
            let lhs: Rat = row
                .coeffs
                .iter()
                .zip(&candidate)
                .map(|(a, x)| a * x)
                .fold(Rat::zero(), |acc, v| acc + v);
            if row.eq {
                lhs == row.rhs
            } else {
                lhs >= row.rhs
            }
        });
        if ok {
            return true;
        }
    }
    false
}

/// Exact Gauss–Jordan solve of a square system; None when singular.
#[allow(clippy::needless_range_loop)]
pub fn solve_square(mut a: Vec<Vec<Rat>>, mut b: Vec<Rat>) -> Option<Vec<Rat>> {
    let n = a.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &p;
            for k in col..n {
                let v = &a[col][k] * &factor;
                a[r][k] = &a[r][k] - &v;
            }
            let v = &b[col] * &factor;
            b[r] = &b[r] - &v;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

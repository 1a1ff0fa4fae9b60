//! Hypothesis checks and deduction chains for nef classes on blowups:
//! the ζ-hypothesis report, blowup applicability, admissible
//! zero-section degrees, the ruled-surface certificate, the two-step
//! blowup chain with its per-curve dichotomy, the incidence-bound check
//! and the odd-intersection parity rule.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::chow::{
    BlowupKind, BlowupRecord, ChowError, CurveCenterSpec, CurveClass, DivisorClass, ThreefoldModel,
};
use crate::rat::{self, Rat};
use crate::trace::{DeductionTrace, TraceValue};

#[derive(Debug, Error)]
pub enum PropertyAError {
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error("alpha must be a positive rational (got {0})")]
    NonPositiveAlpha(Rat),
    #[error("alpha coefficients must be non-negative (alpha_{index} = {value})")]
    NegativeAlpha { index: usize, value: Rat },
    #[error("precondition failed: xi·C = {got}, but alpha*gamma/2 = {want}")]
    XiCMismatch { got: Rat, want: Rat },
    #[error("lambda must be positive (got {0})")]
    NonPositiveLambda(Rat),
    #[error("inputs have mismatched lengths: {0}")]
    LengthMismatch(String),
    #[error("the model is not a pure point blowup of its base (record {0} is a curve blowup)")]
    NotPointBlowups(usize),
}

/// Exact values of the three hypothesis quantities for a divisor class
/// ζ: the class ζ², and the numbers ζ·c₁² and ζ·c₂. `hypotheses_met` is
/// the conjunction ζ² = 0 ∧ ζ·c₁² ≥ 0 ∧ ζ·c₂ ≤ 0. Nefness of ζ is the
/// caller's assertion and is never checked here.
#[derive(Clone, Debug)]
pub struct PropertyAReport {
    pub zeta_sq: CurveClass,
    pub zeta_c1_sq: Rat,
    pub zeta_c2: Rat,
    pub hypotheses_met: bool,
}

pub fn property_a_report(
    model: &ThreefoldModel,
    zeta: &DivisorClass,
) -> Result<PropertyAReport, PropertyAError> {
    let zeta_sq = model.mul_divisors(zeta, zeta)?;
    let zeta_c1_sq = model.triple(zeta, model.c1(), model.c1())?;
    let zeta_c2 = model.pair(zeta, model.c2())?;
    let hypotheses_met = zeta_sq.is_zero() && !zeta_c1_sq.is_negative() && !zeta_c2.is_positive();
    Ok(PropertyAReport {
        zeta_sq,
        zeta_c1_sq,
        zeta_c2,
        hypotheses_met,
    })
}

/// A prospective blowup center.
#[derive(Clone, Debug)]
pub enum Center {
    Point,
    Curve(CurveCenterSpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem1Reason {
    PointCenter,
    OddDegreeAndDecomposable,
    FailsParity,
    DecomposabilityUnknown,
}

impl Theorem1Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Theorem1Reason::PointCenter => "point-center",
            Theorem1Reason::OddDegreeAndDecomposable => "odd-degree-and-decomposable",
            Theorem1Reason::FailsParity => "fails-parity",
            Theorem1Reason::DecomposabilityUnknown => "decomposability-unknown",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Theorem1Verdict {
    pub applicable: bool,
    pub reason: Theorem1Reason,
}

/// Applicability of the blowup-preservation statement: point centers
/// always qualify; a curve center qualifies iff c₁(Y)·C is odd and the
/// normal bundle is decomposable. A rational center (genus 0) is
/// decomposable automatically, by Grothendieck splitting.
pub fn theorem1_check(
    parent: &ThreefoldModel,
    center: &Center,
) -> Result<Theorem1Verdict, PropertyAError> {
    match center {
        Center::Point => Ok(Theorem1Verdict {
            applicable: true,
            reason: Theorem1Reason::PointCenter,
        }),
        Center::Curve(spec) => {
            let gamma = parent.center_gamma(spec)?;
            // c₁·C = γ − 2g + 2 has the parity of γ.
            let odd = gamma.rem_euclid(2) == 1;
            let decomposable = spec.decomposable || spec.genus == 0;
            let (applicable, reason) = if !odd {
                (false, Theorem1Reason::FailsParity)
            } else if decomposable {
                (true, Theorem1Reason::OddDegreeAndDecomposable)
            } else {
                (false, Theorem1Reason::DecomposabilityUnknown)
            };
            Ok(Theorem1Verdict { applicable, reason })
        }
    }
}

/// The admissible set of zero-section self-intersections for a
/// decomposable center of normal degree γ: τ ≤ max and τ ≡ γ (mod 2).
/// Returns `None` when the center is not decomposable (no bound is
/// asserted then).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TauAdmissible {
    pub max: i64,
    pub parity: i64,
}

impl TauAdmissible {
    pub fn contains(&self, tau: i64) -> bool {
        tau <= self.max && tau.rem_euclid(2) == self.parity
    }
}

impl std::fmt::Display for TauAdmissible {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "tau <= {}, tau ≡ {} (mod 2)", self.max, self.parity)
    }
}

pub fn tau_admissible(gamma: i64, decomposable: bool) -> Option<TauAdmissible> {
    if !decomposable {
        return None;
    }
    let parity = gamma.rem_euclid(2);
    let max = if parity == 1 { -1 } else { 0 };
    Some(TauAdmissible { max, parity })
}

/// Result of evaluating ζ·C₀ against the zero section of a curve
/// blowup, for ζ = π*ξ − αF with ξ·C = αγ/2.
#[derive(Clone, Debug)]
pub struct Subcase22Outcome {
    pub gamma: i64,
    pub value: Rat,
    pub expected: Rat,
    pub contradiction: bool,
    pub trace: DeductionTrace,
}

/// Computes ζ·C₀ = ατ/2 for the last blowup of `model` (which must be a
/// curve blowup) and flags the nefness contradiction when τ < 0. The
/// precondition ξ·C = αγ/2 (the shape forced by ζ² = 0 with α ≠ 0)
/// is checked exactly.
pub fn subcase22_certificate(
    model: &ThreefoldModel,
    xi: &DivisorClass,
    alpha: &Rat,
    tau: i64,
) -> Result<Subcase22Outcome, PropertyAError> {
    let last = model
        .provenance()
        .len()
        .checked_sub(1)
        .ok_or_else(|| ChowError::ModelMismatch("model has no blowup".to_string()))?;
    let record = &model.provenance()[last];
    let (gamma, center_class) = match record {
        BlowupRecord::Curve { gamma, center, .. } => (*gamma, center.class.clone()),
        BlowupRecord::Point { .. } => {
            return Err(ChowError::NotCurveBlowup(last).into());
        }
    };
    if !alpha.is_positive() {
        return Err(PropertyAError::NonPositiveAlpha(alpha.clone()));
    }

    // ξ·C, computed through pullbacks (pairings of pulled-back classes
    // agree with the parent pairing).
    let xi_up = model.pullback_divisor(xi)?;
    let center_up = model.pullback_curve(&center_class)?;
    let xi_dot_c = model.pair(&xi_up, &center_up)?;
    let want = alpha * rat::frac(gamma, 2);
    if xi_dot_c != want {
        return Err(PropertyAError::XiCMismatch {
            got: xi_dot_c,
            want,
        });
    }

    let zero_section = model.zero_section_class(last, tau)?;
    let exceptional = model.basis_divisor(record.exceptional_index());
    let zeta = xi_up.sub(&exceptional.scale(alpha));
    let value = model.pair(&zeta, &zero_section)?;
    let expected = alpha * rat::frac(tau, 2);
    debug_assert_eq!(value, expected);

    let mut trace = DeductionTrace::new();
    trace.push("gamma", TraceValue::Int(gamma), "c1(Y)·C + 2g - 2");
    trace.push(
        "xi·C",
        TraceValue::Rat(xi_dot_c),
        "matches alpha*gamma/2 (forced by zeta^2 = 0, alpha > 0)",
    );
    match tau_admissible(gamma, true) {
        Some(adm) if adm.contains(tau) => {
            trace.push("tau", TraceValue::Int(tau), format!("admissible: {adm}"));
        }
        Some(adm) => {
            trace.push(
                "tau",
                TraceValue::Int(tau),
                format!("outside the admissible set {adm}"),
            );
        }
        None => unreachable!(),
    }
    trace.push(
        "C0",
        TraceValue::Text(model.render_curve(&zero_section)),
        "zero section: -F·F + (tau+gamma)/2 · f",
    );
    trace.push(
        "zeta·C0",
        TraceValue::Rat(value.clone()),
        "equals alpha*tau/2",
    );
    let contradiction = value.is_negative();
    if contradiction {
        trace.push(
            "verdict",
            TraceValue::Bool(true),
            "contradiction with nefness: zeta·C0 >= 0 fails for the effective zero section",
        );
    } else {
        trace.push(
            "verdict",
            TraceValue::Bool(false),
            "no contradiction (requires tau < 0)",
        );
    }

    Ok(Subcase22Outcome {
        gamma,
        value,
        expected,
        contradiction,
        trace,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem2Part {
    One,
    Two,
}

/// A curve D_j on the point-blowup model, with its genus. The curves
/// are asserted by the caller to be pairwise disjoint, smooth, and to
/// admit ζ = π₂*ξ − Σ α_j F_j with the stated hypotheses.
#[derive(Clone, Debug)]
pub struct Theorem2Curve {
    pub class: CurveClass,
    pub genus: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theorem2Status {
    Ok,
    Inapplicable(String),
    Inconsistent(String),
}

#[derive(Clone, Debug)]
pub struct Theorem2Outcome {
    pub status: Theorem2Status,
    /// ξ·D_j − α_j·c₁(X₁)·D_j per curve.
    pub terms: Vec<Rat>,
    pub xi_c2_x1: Rat,
    /// ζ·c₂(X₂) = ξ·c₂(X₁) + Σ terms, by the blowup expansion of c₂.
    pub zeta_c2_x2: Rat,
    /// True when every term is ≥ 0, so the hypothesis ζ·c₂(X₂) ≤ 0
    /// forces ξ·c₂(X₁) ≤ 0.
    pub xi_c2_forced_nonpositive: bool,
    /// (π₁)_* ξ on the base model.
    pub xi_pushforward: DivisorClass,
    /// True when the chain concludes (π₁)_* ξ = 0 (hence ξ = ζ = 0):
    /// all terms ≥ 0 and the base has the c₂-positivity property.
    pub forced_vanishing: bool,
    pub trace: DeductionTrace,
}

/// Runs the deduction chain for ζ = π₂*ξ − Σ α_j F_j on the blowup of
/// `x1` (itself a pure point blowup of its base) along disjoint curves.
///
/// The hypothesis set consumed here is (ζ² = 0, ζ·c₁(X₂) = 0,
/// ζ·c₂(X₂) ≤ 0); the trace header records it. Intersecting the first
/// two with F_j gives, per curve, either α_j = 0 or the branch
/// equalities checked below; inputs violating both branches are
/// reported as inconsistent rather than rejected.
///
/// `c2_positive_on_base`: pass `None` to auto-assert exactly when the
/// base is P³ (c₂ = 6L pairs positively with every positive multiple
/// of H); the part-2 genus hypothesis failing yields an inapplicable
/// status, not an error.
pub fn theorem2_chain(
    x1: &ThreefoldModel,
    curves: &[Theorem2Curve],
    xi: &DivisorClass,
    alphas: &[Rat],
    part: Theorem2Part,
    c2_positive_on_base: Option<bool>,
) -> Result<Theorem2Outcome, PropertyAError> {
    for (i, record) in x1.provenance().iter().enumerate() {
        if record.kind() != BlowupKind::Point {
            return Err(PropertyAError::NotPointBlowups(i));
        }
    }
    if curves.len() != alphas.len() {
        return Err(PropertyAError::LengthMismatch(format!(
            "{} curves but {} alpha coefficients",
            curves.len(),
            alphas.len()
        )));
    }
    if let Some((index, value)) = alphas.iter().enumerate().find(|(_, a)| a.is_negative()) {
        return Err(PropertyAError::NegativeAlpha {
            index,
            value: value.clone(),
        });
    }

    let mut trace = DeductionTrace::new();
    trace.push(
        "hypotheses",
        TraceValue::Text("zeta^2 = 0, zeta·c1(X2) = 0, zeta·c2(X2) <= 0".to_string()),
        "assumed for zeta = pi2*(xi) - sum_j alpha_j F_j; the chain consumes the linear \
         condition zeta·c1 = 0, not the squared form; nefness of zeta asserted by caller",
    );

    let base_is_p3 = x1.divisor_rank() == x1.provenance().len() + 1;
    let c2_positive = c2_positive_on_base.unwrap_or(base_is_p3);
    trace.push(
        "c2-positivity on base",
        TraceValue::Bool(c2_positive),
        match (c2_positive_on_base, base_is_p3) {
            (Some(_), _) => "asserted by caller",
            (None, true) => "auto: base is P3, so c2 = 6L pairs positively with movable classes",
            (None, false) => "not asserted and base is not P3",
        },
    );
    let mut status = Theorem2Status::Ok;

    // Part 2 hypothesis: c₁(X₁)·D_j ≤ 2g_j − 2 for every j.
    if part == Theorem2Part::Two {
        for (j, curve) in curves.iter().enumerate() {
            let c1_dj = x1.pair(x1.c1(), &curve.class)?;
            let bound = rat::int(2 * i64::from(curve.genus) - 2);
            if c1_dj > bound {
                let message = format!(
                    "genus condition fails for D_{}: c1(X1)·D = {} > 2g - 2 = {}",
                    j + 1,
                    c1_dj,
                    bound
                );
                trace.push("genus condition", TraceValue::Bool(false), message.clone());
                status = Theorem2Status::Inapplicable(message);
                break;
            }
        }
    }

    let mut terms = Vec::with_capacity(curves.len());
    if status == Theorem2Status::Ok {
        for (j, (curve, alpha)) in curves.iter().zip(alphas).enumerate() {
            let xi_dj = x1.pair(xi, &curve.class)?;
            let c1_dj = x1.pair(x1.c1(), &curve.class)?;
            let two_g_minus_2 = rat::int(2 * i64::from(curve.genus) - 2);
            let term = &xi_dj - alpha * &c1_dj;
            let label = format!("D_{}", j + 1);
            if alpha.is_zero() {
                // Branch α_j = 0: term = ξ·D_j = ζ·D_j' ≥ 0, with D_j'
                // a section of F_j pushing forward to D_j.
                if xi_dj.is_negative() {
                    let message = format!(
                        "alpha_{} = 0 but xi·D = {} < 0 contradicts nefness of zeta",
                        j + 1,
                        xi_dj
                    );
                    trace.push(label, TraceValue::Rat(term.clone()), message.clone());
                    status = Theorem2Status::Inconsistent(message);
                    terms.push(term);
                    continue;
                }
                trace.push(
                    label,
                    TraceValue::Rat(term.clone()),
                    format!("alpha = 0: term = xi·D = zeta·D' = {xi_dj} >= 0"),
                );
            } else {
                let branch_ok = match part {
                    Theorem2Part::One => {
                        // ξ·D_j = α_j·c₁(X₁)·D_j = α_j(2g_j − 2).
                        xi_dj == alpha * &c1_dj && c1_dj == two_g_minus_2
                    }
                    Theorem2Part::Two => {
                        // ξ·D_j = α_j γ_j / 2 from ζ²·F_j = 0, i.e.
                        // term = (α_j/2)(2g_j − 2 − c₁·D_j).
                        let gamma_j = &c1_dj + &two_g_minus_2;
                        xi_dj == alpha * gamma_j / rat::int(2)
                    }
                };
                if !branch_ok {
                    let message = format!(
                        "D_{}: alpha = {} but xi·D = {} satisfies neither dichotomy branch \
                         (such zeta cannot have zeta^2 = zeta·c1 = 0)",
                        j + 1,
                        alpha,
                        xi_dj
                    );
                    trace.push(label, TraceValue::Rat(term.clone()), message.clone());
                    status = Theorem2Status::Inconsistent(message);
                    terms.push(term);
                    continue;
                }
                let note = match part {
                    Theorem2Part::One => {
                        format!("alpha = {alpha}: xi·D = alpha·c1(X1)·D = alpha·(2g-2), term = 0")
                    }
                    Theorem2Part::Two => {
                        format!("alpha = {alpha}: term = (alpha/2)(2g-2 - c1(X1)·D) = {term} >= 0")
                    }
                };
                trace.push(label, TraceValue::Rat(term.clone()), note);
            }
            terms.push(term);
        }
    }

    let xi_c2_x1 = x1.pair(xi, x1.c2())?;
    let term_sum: Rat = terms.iter().fold(Rat::zero(), |acc, t| acc + t);
    let zeta_c2_x2 = &xi_c2_x1 + &term_sum;
    trace.push(
        "xi·c2(X1)",
        TraceValue::Rat(xi_c2_x1.clone()),
        "c2(X1) is the pullback of c2 from the base",
    );
    trace.push(
        "zeta·c2(X2)",
        TraceValue::Rat(zeta_c2_x2.clone()),
        "= xi·c2(X1) + sum of terms",
    );

    if status == Theorem2Status::Ok && zeta_c2_x2.is_positive() {
        let message =
            format!("zeta·c2(X2) = {zeta_c2_x2} > 0 contradicts the hypothesis zeta·c2(X2) <= 0");
        trace.push("hypothesis check", TraceValue::Bool(false), message.clone());
        status = Theorem2Status::Inconsistent(message);
    }

    let all_nonneg = terms.iter().all(|t| !t.is_negative());
    let xi_c2_forced_nonpositive = status == Theorem2Status::Ok && all_nonneg;
    if xi_c2_forced_nonpositive {
        trace.push(
            "conclusion",
            TraceValue::Bool(true),
            "every term is >= 0, so zeta·c2(X2) <= 0 forces xi·c2(X1) <= 0",
        );
    }

    // (π₁)_* ξ on the base, through all point blowups.
    let mut down = xi.clone();
    let mut steps = x1.provenance().len();
    while steps > 0 {
        let mut coeffs = down.coeffs().to_vec();
        coeffs.pop();
        down = DivisorClass::new(coeffs);
        steps -= 1;
    }
    trace.push(
        "(pi1)_* xi",
        TraceValue::Text(render_on_base(x1, &down)),
        "movable on the base (asserted); pairs with c2(X0) as xi·c2(X1) does",
    );

    let forced_vanishing = xi_c2_forced_nonpositive && c2_positive;
    if forced_vanishing {
        trace.push(
            "forced vanishing",
            TraceValue::Bool(true),
            "c2-positivity on the base plus (pi1)_* xi·c2(X0) <= 0 force (pi1)_* xi = 0, \
             hence xi = 0 and zeta = 0",
        );
    } else if xi_c2_forced_nonpositive {
        trace.push(
            "forced vanishing",
            TraceValue::Bool(false),
            "c2-positivity on the base was not asserted",
        );
    }

    Ok(Theorem2Outcome {
        status,
        terms,
        xi_c2_x1,
        zeta_c2_x2,
        xi_c2_forced_nonpositive,
        xi_pushforward: down,
        forced_vanishing,
        trace,
    })
}

fn render_on_base(x1: &ThreefoldModel, class: &DivisorClass) -> String {
    // The base divisor names are the leading prefix of x1's names.
    let names: Vec<String> = x1.divisor_names()[..class.rank()].to_vec();
    let mut out = String::new();
    for (c, name) in class.coeffs().iter().zip(&names) {
        if c.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        } else if c.is_negative() {
            out.push('-');
        }
        let mag = c.abs();
        if mag == rat::int(1) {
            out.push_str(name);
        } else {
            out.push_str(&format!("{mag}*{name}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Input of the incidence-bound check: one row of `incidence` per
/// exceptional divisor E_l of the point blowup, one column per curve
/// D_j, with degrees of the pushed-forward curves, genera, and
/// c₁(X₁)-degrees given per curve.
#[derive(Clone, Debug)]
pub struct Remark2Input {
    pub incidence: Vec<Vec<u32>>,
    pub degrees: Vec<u32>,
    pub genera: Vec<u32>,
    pub c1_degrees: Vec<i64>,
    pub lambda: Rat,
}

#[derive(Clone, Debug)]
pub struct Remark2Outcome {
    pub passed: bool,
    pub gamma: i64,
    pub row_sums_ok: bool,
    pub ratio_ok: bool,
    pub genus_ok: bool,
    pub trace: DeductionTrace,
}

/// Checks, for γ = Σ_j deg (π₁)_* D_j:
/// (a) Σ_j E_l·D_j ≤ λ for every l,
/// (b) (6 + γ)/λ > 11/2,
/// (c) (1/2 + 1/λ)·c₁(X₁)·D_j ≥ (g_j − 1)/2 for every j.
pub fn remark2_check(input: &Remark2Input) -> Result<Remark2Outcome, PropertyAError> {
    if !input.lambda.is_positive() {
        return Err(PropertyAError::NonPositiveLambda(input.lambda.clone()));
    }
    let m = input.degrees.len();
    if input.genera.len() != m
        || input.c1_degrees.len() != m
        || input.incidence.iter().any(|row| row.len() != m)
    {
        return Err(PropertyAError::LengthMismatch(
            "incidence columns, degrees, genera and c1-degrees must agree".to_string(),
        ));
    }

    let mut trace = DeductionTrace::new();
    let gamma: i64 = input.degrees.iter().map(|d| i64::from(*d)).sum();
    trace.push(
        "gamma",
        TraceValue::Int(gamma),
        "sum of pushforward degrees",
    );

    let mut row_sums_ok = true;
    for (l, row) in input.incidence.iter().enumerate() {
        let sum: i64 = row.iter().map(|x| i64::from(*x)).sum();
        let ok = rat::int(sum) <= input.lambda;
        if !ok {
            row_sums_ok = false;
        }
        trace.push(
            format!("row sum E_{}", l + 1),
            TraceValue::Int(sum),
            if ok {
                format!("<= lambda = {}", input.lambda)
            } else {
                format!("exceeds lambda = {}", input.lambda)
            },
        );
    }

    let ratio = (rat::int(6) + rat::int(gamma)) / input.lambda.clone();
    let ratio_ok = ratio > rat::frac(11, 2);
    trace.push(
        "(6+gamma)/lambda",
        TraceValue::Rat(ratio.clone()),
        if ratio_ok { "> 11/2" } else { "not > 11/2" },
    );

    let mut genus_ok = true;
    let slope = rat::frac(1, 2) + rat::int(1) / input.lambda.clone();
    for (j, (&c1_dj, &g)) in input.c1_degrees.iter().zip(&input.genera).enumerate() {
        let lhs = &slope * rat::int(c1_dj);
        let rhs = rat::frac(i64::from(g) - 1, 2);
        let ok = lhs >= rhs;
        if !ok {
            genus_ok = false;
        }
        trace.push(
            format!("(1/2 + 1/lambda)·c1·D_{}", j + 1),
            TraceValue::Rat(lhs),
            if ok {
                format!(">= (g-1)/2 = {rhs}")
            } else {
                format!("< (g-1)/2 = {rhs}")
            },
        );
    }

    let passed = row_sums_ok && ratio_ok && genus_ok;
    trace.push("verdict", TraceValue::Bool(passed), "");
    Ok(Remark2Outcome {
        passed,
        gamma,
        row_sums_ok,
        ratio_ok,
        genus_ok,
        trace,
    })
}

/// The n-point/all-lines configuration: λ = n − 1, one line D_{i,j} per
/// pair of points with E_l·D_{i,j} = [l ∈ {i,j}], degree 1, genus 0 and
/// c₁(X₁)-degree 0.
pub fn line_configuration(n: usize) -> Remark2Input {
    assert!(n >= 2, "need at least two points for a line");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let incidence = (0..n)
        .map(|l| {
            pairs
                .iter()
                .map(|&(i, j)| u32::from(l == i || l == j))
                .collect()
        })
        .collect();
    Remark2Input {
        incidence,
        degrees: vec![1; pairs.len()],
        genera: vec![0; pairs.len()],
        c1_degrees: vec![0; pairs.len()],
        lambda: rat::int(n as i64 - 1),
    }
}

/// Parity rule for a smooth rational curve D on a curve-blowup of P³:
/// a fiber of an exceptional divisor has c₁-degree 1 and qualifies;
/// otherwise the c₁-degree is 4·deg π₁(D) − m, and D qualifies iff the
/// number m of intersection points with the blown-up curves is odd.
pub fn example3_parity(degree: u32, m: u32, fiber: bool) -> (i64, bool) {
    if fiber {
        return (1, true);
    }
    let c1_degree = 4 * i64::from(degree) - i64::from(m);
    (c1_degree, m % 2 == 1)
}

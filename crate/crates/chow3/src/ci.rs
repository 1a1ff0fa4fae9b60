//! Chern-class coefficients of complete-intersection threefolds in Pⁿ
//! and the positivity certificate for the c₂ coefficient.
//!
//! For X ⊂ Pⁿ cut out by hypersurfaces of degrees d₁,…,d_{n−3} and h the
//! hyperplane class,
//!
//!   c₁ = ((n+1) − Σd)·h,
//!   c₂ = (n(n+1)/2 − Σ_{i<j} dᵢdⱼ − (n+1)Σd + (Σd)²)·h².
//!
//! The c₂ coefficient splits exactly as
//!
//!   [ (n−4)/(2(n−3))·(Σd)² − Σ_{i<j} dᵢdⱼ ] + g(Σd),
//!   g(x) = n(n+1)/2 − (n+1)x + (n−2)/(2(n−3))·x²,
//!
//! where the first bracket is ≥ 0 by Cauchy–Schwarz over the n−3
//! degrees and g is positive at every integer x ≥ n−3.

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::rat::{self, Rat};

#[derive(Debug, Error, PartialEq)]
pub enum CiError {
    #[error("ambient dimension must be at least 4 (got {0})")]
    AmbientTooSmall(u32),
    #[error("a threefold in P^{n} needs {want} hypersurface degrees, got {got}")]
    WrongDegreeCount { n: u32, want: u32, got: usize },
    #[error("hypersurface degrees must be >= 1")]
    ZeroDegree,
}

/// A complete-intersection threefold in Pⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiSpec {
    pub n: u32,
    pub degrees: Vec<u32>,
}

impl CiSpec {
    pub fn new(n: u32, degrees: Vec<u32>) -> Result<Self, CiError> {
        if n < 4 {
            return Err(CiError::AmbientTooSmall(n));
        }
        if degrees.len() != (n - 3) as usize {
            return Err(CiError::WrongDegreeCount {
                n,
                want: n - 3,
                got: degrees.len(),
            });
        }
        if degrees.contains(&0) {
            return Err(CiError::ZeroDegree);
        }
        Ok(CiSpec { n, degrees })
    }

    pub fn degree_sum(&self) -> i64 {
        self.degrees.iter().map(|d| i64::from(*d)).sum()
    }

    /// Σ_{i<j} dᵢdⱼ.
    pub fn degree_pair_sum(&self) -> i64 {
        let mut total = 0i64;
        for i in 0..self.degrees.len() {
            for j in (i + 1)..self.degrees.len() {
                total += i64::from(self.degrees[i]) * i64::from(self.degrees[j]);
            }
        }
        total
    }
}

/// Coefficients of c₁ = c1_coeff·h and c₂ = c2_coeff·h².
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CiChern {
    pub c1_coeff: BigInt,
    pub c2_coeff: BigInt,
}

pub fn chern_classes_ci(spec: &CiSpec) -> CiChern {
    let n = i64::from(spec.n);
    let x = spec.degree_sum();
    let e2 = spec.degree_pair_sum();
    let c1 = (n + 1) - x;
    let c2 = n * (n + 1) / 2 - e2 - (n + 1) * x + x * x;
    CiChern {
        c1_coeff: BigInt::from(c1),
        c2_coeff: BigInt::from(c2),
    }
}

/// g(x) = n(n+1)/2 − (n+1)x + (n−2)/(2(n−3))·x², exactly.
pub fn g_value(n: u32, x: i64) -> Result<Rat, CiError> {
    if n < 4 {
        return Err(CiError::AmbientTooSmall(n));
    }
    let n = i64::from(n);
    let quadratic = rat::frac(n - 2, 2 * (n - 3)) * rat::int(x) * rat::int(x);
    Ok(rat::frac(n * (n + 1), 2) - rat::int((n + 1) * x) + quadratic)
}

/// (n−4)/(2(n−3))·(Σd)² − Σ_{i<j} dᵢdⱼ; equals (Σd² − (Σd)²/(n−3))/2,
/// which Cauchy–Schwarz makes non-negative.
pub fn first_bracket(spec: &CiSpec) -> Rat {
    let n = i64::from(spec.n);
    let x = spec.degree_sum();
    rat::frac(n - 4, 2 * (n - 3)) * rat::int(x * x) - rat::int(spec.degree_pair_sum())
}

#[derive(Clone, Debug)]
pub struct C2Certificate {
    pub first_bracket: Rat,
    pub g_at_sum: Rat,
    pub c2_coeff: BigInt,
    /// c₂ coefficient equals first bracket + g(Σd), exactly.
    pub bracket_sum_matches: bool,
    /// first bracket ≥ 0 and g(Σd) > 0.
    pub certificate_positive: bool,
    /// c₂ coefficient > 0 by direct evaluation.
    pub direct_positive: bool,
}

pub fn c2_certificate(spec: &CiSpec) -> Result<C2Certificate, CiError> {
    let chern = chern_classes_ci(spec);
    let fb = first_bracket(spec);
    let g = g_value(spec.n, spec.degree_sum())?;
    let total = &fb + &g;
    let bracket_sum_matches = total == Rat::from_integer(chern.c2_coeff.clone());
    let certificate_positive = !fb.is_negative() && g.is_positive();
    let direct_positive = chern.c2_coeff.is_positive();
    Ok(C2Certificate {
        first_bracket: fb,
        g_at_sum: g,
        c2_coeff: chern.c2_coeff,
        bracket_sum_matches,
        certificate_positive,
        direct_positive,
    })
}

#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub checked: u64,
    pub counterexample: Option<(CiSpec, String)>,
}

impl SweepOutcome {
    pub fn all_positive(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Advances an odometer over tuples in 1..=d_max; false when wrapped.
fn next_tuple(tuple: &mut [u32], d_max: u32) -> bool {
    for pos in (0..tuple.len()).rev() {
        if tuple[pos] < d_max {
            tuple[pos] += 1;
            for later in &mut tuple[pos + 1..] {
                *later = 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustively verifies, for every 4 ≤ n ≤ n_max and every degree
/// tuple with entries in 1..=d_max, that the certificate route
/// (bracket decomposition) and the direct route (c₂ coefficient > 0)
/// both succeed and agree. Returns the first counterexample otherwise.
pub fn verify_c2_positive(n_max: u32, d_max: u32) -> Result<SweepOutcome, CiError> {
    if n_max < 4 {
        return Err(CiError::AmbientTooSmall(n_max));
    }
    if d_max < 1 {
        return Err(CiError::ZeroDegree);
    }
    let mut checked = 0u64;
    for n in 4..=n_max {
        let mut tuple = vec![1u32; (n - 3) as usize];
        loop {
            let spec = CiSpec::new(n, tuple.clone()).expect("tuple is valid by construction");
            let cert = c2_certificate(&spec)?;
            checked += 1;
            let failure = if !cert.bracket_sum_matches {
                Some(format!(
                    "bracket sum {} + {} does not equal c2 = {}",
                    cert.first_bracket, cert.g_at_sum, cert.c2_coeff
                ))
            } else if !cert.certificate_positive || !cert.direct_positive {
                Some(format!(
                    "positivity fails: first bracket = {}, g = {}, c2 = {}",
                    cert.first_bracket, cert.g_at_sum, cert.c2_coeff
                ))
            } else {
                None
            };
            if let Some(message) = failure {
                return Ok(SweepOutcome {
                    checked,
                    counterexample: Some((spec, message)),
                });
            }
            if !next_tuple(&mut tuple, d_max) {
                break;
            }
        }
    }
    Ok(SweepOutcome {
        checked,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chow::ThreefoldModel;
    use crate::rat::{frac, int};
    use num_traits::ToPrimitive;

    #[test]
    fn p3_re_embedded() {
        // n = 4, d = (1) is P³ again: c₁ = 4h, c₂ = 6h², matching the
        // base threefold model.
        let spec = CiSpec::new(4, vec![1]).unwrap();
        let chern = chern_classes_ci(&spec);
        assert_eq!(chern.c1_coeff, BigInt::from(4));
        assert_eq!(chern.c2_coeff, BigInt::from(6));
        let p3 = ThreefoldModel::p3();
        assert_eq!(p3.c1().coeff(0).numer().to_i64(), chern.c1_coeff.to_i64());
        assert_eq!(p3.c2().coeff(0).numer().to_i64(), chern.c2_coeff.to_i64());
    }

    #[test]
    fn quintic_and_biquadric() {
        // n = 4, d = (5): c₁ = 0, c₂ = 10 − 0 − 25 + 25 = 10.
        let spec = CiSpec::new(4, vec![5]).unwrap();
        let chern = chern_classes_ci(&spec);
        assert_eq!(chern.c1_coeff, BigInt::from(0));
        assert_eq!(chern.c2_coeff, BigInt::from(10));

        // n = 5, d = (2,2): c₁ = 2, c₂ = 15 − 4 − 24 + 16 = 3.
        let spec = CiSpec::new(5, vec![2, 2]).unwrap();
        let chern = chern_classes_ci(&spec);
        assert_eq!(chern.c1_coeff, BigInt::from(2));
        assert_eq!(chern.c2_coeff, BigInt::from(3));
    }

    #[test]
    fn g_closed_forms() {
        for n in 4..=50u32 {
            let n_i = i64::from(n);
            // g(n−3) = 6 for every n.
            assert_eq!(g_value(n, n_i - 3).unwrap(), int(6));
            // g(n−2) > 3.
            assert!(g_value(n, n_i - 2).unwrap() > int(3));
            // g(n−1) = 2(n−2)/(n−3).
            assert_eq!(g_value(n, n_i - 1).unwrap(), frac(2 * (n_i - 2), n_i - 3));
            // g(n) = 3n/(2(n−3)). (Evaluate the quadratic directly: for
            // n = 4 it is 10 − 5x + x², so g(4) = 6.)
            assert_eq!(g_value(n, n_i).unwrap(), frac(3 * n_i, 2 * (n_i - 3)));
        }
        assert_eq!(g_value(4, 4).unwrap(), int(6));
        assert_eq!(g_value(4, 5).unwrap(), int(10));
        assert_eq!(g_value(3, 1), Err(CiError::AmbientTooSmall(3)));
    }

    #[test]
    fn g_positive_beyond_vertex() {
        // The critical point x₀ = (n+1)(n−3)/(n−2) is < n, so checking
        // the four integer points n−3..n plus growth beyond n covers
        // all integers x ≥ n−3.
        for n in 4..=50u32 {
            let n_i = i64::from(n);
            let x0 = frac((n_i + 1) * (n_i - 3), n_i - 2);
            assert!(x0 < int(n_i));
            for x in (n_i - 3)..=n_i {
                assert!(g_value(n, x).unwrap().is_positive());
            }
            // Monotone increasing past the vertex.
            let mut prev = g_value(n, n_i).unwrap();
            for x in (n_i + 1)..=(n_i + 5) {
                let next = g_value(n, x).unwrap();
                assert!(next > prev);
                prev = next;
            }
        }
    }

    #[test]
    fn bracket_identity_examples() {
        // n = 4: the first bracket vanishes (single degree), so
        // c₂ = g(d₁).
        let spec = CiSpec::new(4, vec![5]).unwrap();
        assert_eq!(first_bracket(&spec), int(0));
        let cert = c2_certificate(&spec).unwrap();
        assert!(cert.bracket_sum_matches);
        assert_eq!(cert.g_at_sum, int(10));

        // n = 5, d = (1,4): bracket 9/4, g(5) = 15/4, total 6.
        let spec = CiSpec::new(5, vec![1, 4]).unwrap();
        let cert = c2_certificate(&spec).unwrap();
        assert_eq!(cert.first_bracket, frac(9, 4));
        assert_eq!(cert.g_at_sum, frac(15, 4));
        assert_eq!(cert.c2_coeff, BigInt::from(6));
        assert!(cert.bracket_sum_matches);
    }

    #[test]
    fn sweep_small_range() {
        let out = verify_c2_positive(8, 6).unwrap();
        assert!(out.all_positive(), "{:?}", out.counterexample);
        // 6 + 36 + 216 + 1296 + 7776 tuples.
        assert_eq!(out.checked, 6 + 36 + 216 + 1296 + 7776);
    }

    #[test]
    fn spec_validation() {
        assert_eq!(CiSpec::new(3, vec![]), Err(CiError::AmbientTooSmall(3)));
        assert!(matches!(
            CiSpec::new(5, vec![2]),
            Err(CiError::WrongDegreeCount { .. })
        ));
        assert_eq!(CiSpec::new(4, vec![0]), Err(CiError::ZeroDegree));
    }
}

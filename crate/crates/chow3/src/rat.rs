//! Exact rational scalars and small conversion helpers used across the
//! crate. Everything is `BigRational`; there is no floating point.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rat) -> bool {
    r.is_integer()
}

/// Exact conversion to `i64`, if the value is an integer that fits.
pub fn to_i64(r: &Rat) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

/// Parses `p/q` or a plain integer.
pub fn parse(s: &str) -> Result<Rat, String> {
    let t = s.trim();
    match t.split_once('/') {
        None => t
            .parse::<BigInt>()
            .map(Rat::from_integer)
            .map_err(|_| format!("malformed rational `{t}`")),
        Some((n, d)) => {
            let numer = n
                .trim()
                .parse::<BigInt>()
                .map_err(|_| format!("malformed rational `{t}`"))?;
            let denom = d
                .trim()
                .parse::<BigInt>()
                .map_err(|_| format!("malformed rational `{t}`"))?;
            if denom.is_zero() {
                return Err(format!("zero denominator in `{t}`"));
            }
            Ok(Rat::new(numer, denom))
        }
    }
}

/// JSON form with the numerator and denominator as decimal strings, so
/// arbitrary-precision values survive untouched.
pub fn json(r: &Rat) -> serde_json::Value {
    serde_json::json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

/// Renders like `Display` (`p/q`, or `p` when the value is integral).
pub fn render(r: &Rat) -> String {
    r.to_string()
}

/// Sign as -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::ExactError;

/// Arbitrary-precision rational number. Always stored in lowest terms with a
/// positive denominator.
pub type ExactScalar = BigRational;

/// Parses `"n"`, `"-n"`, `"p/q"` or `"-p/q"`.
pub fn parse_scalar(s: &str) -> Result<ExactScalar, ExactError> {
    let t = s.trim();
    let bad = || ExactError::Parse(format!("not a rational number: {s:?}"));
    if t.is_empty() {
        return Err(bad());
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(ExactError::DivisionByZero);
    }
    Ok(BigRational::new(n, d))
}

/// Canonical text form: `n` for integers, `p/q` otherwise.
pub fn format_scalar(q: &ExactScalar) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

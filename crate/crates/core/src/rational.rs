//! Exact rationals over unbounded integers.
//!
//! `Rational` is `num_rational::BigRational`, which is kept in lowest terms
//! with a positive denominator. The helpers here fix the floor/fractional
//! part convention: `{r} = r - floor(r)` always lies in `[0, 1)`, including
//! for negative `r`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

/// `num / den`, normalized. Panics on a zero denominator.
pub fn ratio(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Largest integer `<= r`.
pub fn floor(r: &Rational) -> BigInt {
    r.numer().div_floor(r.denom())
}

/// Fractional part `r - floor(r)`, in `[0, 1)`.
pub fn frac(r: &Rational) -> Rational {
    r - int(floor(r))
}

pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn is_nonneg_integer(r: &Rational) -> bool {
    is_integral(r) && !r.is_negative()
}

/// Representative of `value mod modulus` in `[0, modulus)`.
pub fn mod_floor(value: &BigInt, modulus: &BigInt) -> BigInt {
    value.mod_floor(modulus)
}

/// Serialize as `p/q`, or `p` when the denominator is one.
pub fn to_pq(r: &Rational) -> String {
    r.to_string()
}

/// Parse `p/q` or `p`, tolerating surrounding whitespace.
pub fn parse_pq(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(int),
    }
}

/// Least common multiple of the denominators of `values` (one for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

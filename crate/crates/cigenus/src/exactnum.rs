//! Exact integer and rational arithmetic.
//!
//! Every numeric result in this crate is an [`ExactInt`] or an [`ExactRat`].
//! Both are thin aliases over `num-bigint` / `num-rational`, so values never
//! overflow and rationals are always kept in lowest terms with a positive
//! denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{invalid, Result};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, normalized on construction.
pub type ExactRat = BigRational;

/// Integer-valued rational.
pub fn rat_int(v: impl Into<BigInt>) -> ExactRat {
    ExactRat::from_integer(v.into())
}

/// `num / den` reduced to lowest terms.
///
/// Panics if `den` is zero.
pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> ExactRat {
    ExactRat::new(num.into(), den.into())
}

/// Binomial coefficient with the truncation convention `C(a, b) = 0` for `a < b`.
///
/// Negative `a` always yields zero, which is what makes the Koszul alternating
/// sum valid at every level rather than only for large levels.
///
/// ```
/// use cigenus::exactnum::binom_trunc;
/// assert_eq!(binom_trunc(5, 2).unwrap(), 10.into());
/// assert_eq!(binom_trunc(1, 2).unwrap(), 0.into());
/// assert_eq!(binom_trunc(-3, 2).unwrap(), 0.into());
/// assert!(binom_trunc(4, -1).is_err());
/// ```
pub fn binom_trunc(a: i64, b: i64) -> Result<ExactInt> {
    if b < 0 {
        return Err(invalid(format!("binomial lower index must be nonnegative, got {b}")));
    }
    if a < b {
        return Ok(ExactInt::zero());
    }
    let b = b.min(a - b);
    let mut acc = ExactInt::one();
    for i in 0..b {
        acc *= a - i;
        acc /= i + 1;
    }
    Ok(acc)
}

/// Same as [`binom_trunc`] for call sites where `b` is known to be nonnegative.
pub(crate) fn binom(a: i64, b: u32) -> ExactInt {
    binom_trunc(a, i64::from(b)).expect("nonnegative lower index")
}

/// Decimal approximation with `sig` significant digits, as an `f64`.
pub fn approx(value: &ExactRat, sig: usize) -> f64 {
    let raw = value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    });
    if raw == 0.0 || !raw.is_finite() {
        return raw;
    }
    let text = format!("{:.*e}", sig.saturating_sub(1), raw);
    text.parse().unwrap_or(raw)
}

/// `true` when the rational is an integer.
pub fn is_integral(value: &ExactRat) -> bool {
    value.denom().is_one()
}

/// Ceiling division for positive divisors.
pub fn ceil_div(num: u64, den: u64) -> u64 {
    num.div_ceil(den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn binom_examples() {
        assert_eq!(binom_trunc(5, 2).unwrap(), ExactInt::from(10));
        assert_eq!(binom_trunc(1, 2).unwrap(), ExactInt::zero());
        assert_eq!(binom_trunc(-3, 2).unwrap(), ExactInt::zero());
        assert_eq!(binom_trunc(0, 0).unwrap(), ExactInt::one());
        assert_eq!(binom_trunc(-1, 0).unwrap(), ExactInt::zero());
        assert_eq!(binom_trunc(7, 0).unwrap(), ExactInt::one());
    }

    #[test]
    fn binom_rejects_negative_lower_index() {
        assert!(matches!(binom_trunc(3, -1), Err(crate::Error::InvalidInput(_))));
    }

    #[test]
    fn binom_large_is_exact() {
        // C(100, 50)
        let expected: ExactInt = "100891344545564193334812497256".parse().unwrap();
        assert_eq!(binom_trunc(100, 50).unwrap(), expected);
    }

    #[test]
    fn approx_digits() {
        assert_eq!(approx(&rat(87, 2), 15), 43.5);
        assert_eq!(approx(&rat(1, 3), 15), 0.333333333333333);
        assert_eq!(approx(&rat_int(0), 15), 0.0);
    }

    proptest! {
        #[test]
        fn pascal_recurrence(a in -40i64..60, b in 1i64..30) {
            let lhs = binom_trunc(a, b).unwrap();
            let rhs = binom_trunc(a - 1, b).unwrap() + binom_trunc(a - 1, b - 1).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn rational_field_laws(
            a in (-50i64..50, 1i64..20),
            b in (-50i64..50, 1i64..20),
            c in (-50i64..50, 1i64..20),
        ) {
            let (x, y, z) = (rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1));
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert!(x.denom().is_positive());
        }
    }
}

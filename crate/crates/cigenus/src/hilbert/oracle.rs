//! Independent checks for [`quotient_hf`](super::quotient_hf).
//!
//! Neither oracle touches binomial coefficients or subset sums: one expands
//! the Hilbert series as a truncated power series, the other counts standard
//! monomials of a monomial complete intersection directly.

use num_traits::{One, Zero};

use super::IdealSpec;
use crate::error::{Error, Result};
use crate::exactnum::ExactInt;

/// Largest number of exponent vectors the monomial oracle will walk.
pub const MONOMIAL_BUDGET: u128 = 10_000_000;

/// Coefficients `0..=max_level` of `∏ (1 - q^{d_i}) / (1 - q)^{n+1}`.
///
/// ```
/// use cigenus::hilbert::{quotient_hf_series_oracle, IdealSpec};
/// let ci = IdealSpec::new(2, vec![2, 2]).unwrap();
/// let series = quotient_hf_series_oracle(&ci, 4);
/// assert_eq!(series, [1, 3, 4, 4, 4].map(Into::into));
/// ```
pub fn quotient_hf_series_oracle(ideal: &IdealSpec, max_level: u64) -> Vec<ExactInt> {
    let len = max_level as usize + 1;
    let mut coeffs = vec![ExactInt::zero(); len];
    coeffs[0] = ExactInt::one();

    // multiply by (1 - q^d), truncating
    for &d in ideal.gen_degrees() {
        let d = d as usize;
        for i in (d..len).rev() {
            let shifted = coeffs[i - d].clone();
            coeffs[i] -= shifted;
        }
    }

    // 1 / (1 - q) is a running sum
    for _ in 0..ideal.variables() {
        for i in 1..len {
            let prev = coeffs[i - 1].clone();
            coeffs[i] += prev;
        }
    }
    coeffs
}

/// Counts degree-`level` monomials in `n + 1` variables with `x_j^{d_j}`
/// excluded for each generator, i.e. the quotient by pure powers of distinct
/// variables.
///
/// Fails with [`Error::BudgetExceeded`] when `C(level + n, n)` exceeds
/// [`MONOMIAL_BUDGET`].
pub fn quotient_hf_monomial_oracle(ideal: &IdealSpec, level: u64) -> Result<ExactInt> {
    let vars = ideal.variables();
    let needed = candidate_count(level, vars - 1);
    if needed > MONOMIAL_BUDGET {
        return Err(Error::BudgetExceeded { needed, budget: MONOMIAL_BUDGET });
    }

    // exclusive exponent bounds; unconstrained variables get level + 1
    let mut bounds = vec![level + 1; vars];
    for (b, &d) in bounds.iter_mut().zip(ideal.gen_degrees()) {
        *b = d;
    }
    Ok(ExactInt::from(count_vectors(&bounds, level)))
}

fn count_vectors(bounds: &[u64], remaining: u64) -> u64 {
    match bounds {
        [] => u64::from(remaining == 0),
        [last] => u64::from(remaining < *last),
        [first, rest @ ..] => {
            let top = remaining.min(first.saturating_sub(1));
            (0..=top).map(|e| count_vectors(rest, remaining - e)).sum()
        }
    }
}

fn candidate_count(level: u64, n: usize) -> u128 {
    // C(level + n, n), saturating
    let mut acc: u128 = 1;
    for i in 0..n as u128 {
        acc = acc.saturating_mul(u128::from(level) + i + 1) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: u32, degs: &[u64]) -> IdealSpec {
        IdealSpec::new(n, degs.to_vec()).unwrap()
    }

    fn as_i64(v: &[ExactInt]) -> Vec<i64> {
        v.iter().map(|x| x.try_into().unwrap()).collect()
    }

    #[test]
    fn series_examples() {
        assert_eq!(as_i64(&quotient_hf_series_oracle(&ideal(2, &[2, 2]), 4)), [1, 3, 4, 4, 4]);
        assert_eq!(as_i64(&quotient_hf_series_oracle(&ideal(0, &[1]), 5)), [1, 0, 0, 0, 0, 0]);
        assert_eq!(as_i64(&quotient_hf_series_oracle(&ideal(3, &[]), 2)), [1, 4, 10]);
    }

    #[test]
    fn monomial_examples() {
        let count = |n, degs: &[u64], l| -> i64 {
            quotient_hf_monomial_oracle(&ideal(n, degs), l).unwrap().try_into().unwrap()
        };
        assert_eq!(count(2, &[2, 2], 4), 4);
        assert_eq!(count(1, &[3], 2), 3);
        assert_eq!(count(2, &[1], 0), 1);
        assert_eq!(count(0, &[1], 0), 1);
        assert_eq!(count(0, &[1], 3), 0);
        assert_eq!(count(2, &[2, 2, 5], 5), 3);
        assert_eq!(count(2, &[2, 2, 5], 6), 1);
        assert_eq!(count(2, &[2, 2, 5], 7), 0);
    }

    #[test]
    fn monomial_budget_guard() {
        let err = quotient_hf_monomial_oracle(&ideal(8, &[]), 200).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn candidate_count_matches_binomial() {
        assert_eq!(candidate_count(4, 2), 15);
        assert_eq!(candidate_count(20, 5), 53130);
        assert_eq!(candidate_count(7, 0), 1);
    }
}

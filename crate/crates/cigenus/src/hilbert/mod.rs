//! Hilbert functions of ideals generated by regular sequences.
//!
//! For a regular sequence `g_1, ..., g_r` of degrees `d_1, ..., d_r` in
//! `k[x_0, ..., x_n]`, the Koszul complex is exact and the graded pieces of
//! the ideal and of the quotient are alternating sums of binomials over the
//! subset sums of the degrees. Two independent oracles live in [`oracle`].

pub mod oracle;

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::exactnum::{binom, ExactInt};

pub use oracle::{quotient_hf_monomial_oracle, quotient_hf_series_oracle, MONOMIAL_BUDGET};

/// Generator degrees of a regular sequence in `n + 1` variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealSpec {
    ambient_dim: u32,
    gen_degrees: Vec<u64>,
}

impl IdealSpec {
    /// Builds the canonical (ascending) form. A regular sequence in `n + 1`
    /// variables has at most `n + 1` elements, each of positive degree.
    pub fn new(ambient_dim: u32, mut gen_degrees: Vec<u64>) -> Result<Self> {
        if gen_degrees.len() > ambient_dim as usize + 1 {
            return Err(invalid(format!(
                "{} generators cannot form a regular sequence in {} variables",
                gen_degrees.len(),
                ambient_dim + 1
            )));
        }
        if gen_degrees.contains(&0) {
            return Err(invalid("generator degrees must be positive"));
        }
        gen_degrees.sort_unstable();
        Ok(IdealSpec { ambient_dim, gen_degrees })
    }

    /// The `n` of projective `n`-space.
    pub fn ambient_dim(&self) -> u32 {
        self.ambient_dim
    }

    pub fn gen_degrees(&self) -> &[u64] {
        &self.gen_degrees
    }

    /// Number of variables, `n + 1`.
    pub fn variables(&self) -> usize {
        self.ambient_dim as usize + 1
    }

    /// `Σ (d_i - 1)`, the top nonzero degree when the quotient is Artinian.
    pub fn socle_degree(&self) -> u64 {
        self.gen_degrees.iter().map(|d| d - 1).sum()
    }

    /// `true` when the quotient ring is finite dimensional.
    pub fn is_artinian(&self) -> bool {
        self.gen_degrees.len() == self.variables()
    }
}

impl fmt::Display for IdealSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P^{} {:?}", self.ambient_dim, self.gen_degrees)
    }
}

/// Which subset sizes carry the `+1` sign in the ideal-slice alternating sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignConvention {
    /// `+1` for odd-size subsets. This is the convention under which the
    /// alternating sum counts the ideal; single generators contribute
    /// `C(l - d + n, n)` positively.
    OddPositive,
    /// `+1` for even-size subsets. Kept only so audits can show that it
    /// disagrees with the monomial count.
    EvenPositive,
}

/// One nonempty subset of the generator degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PartialSum {
    pub sum: u64,
    pub size: usize,
    pub sign: i8,
}

/// The multiset of nonempty subset sums of a degree list, with signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedPartialSums {
    entries: Vec<PartialSum>,
}

impl SignedPartialSums {
    pub fn new(degrees: &[u64], convention: SignConvention) -> Self {
        let r = degrees.len();
        let mut entries = Vec::with_capacity((1usize << r).saturating_sub(1));
        for mask in 1u64..(1u64 << r) {
            let size = mask.count_ones() as usize;
            let sum = degrees
                .iter()
                .enumerate()
                .filter(|(j, _)| mask & (1 << j) != 0)
                .map(|(_, d)| d)
                .sum();
            let odd = size % 2 == 1;
            let positive = match convention {
                SignConvention::OddPositive => odd,
                SignConvention::EvenPositive => !odd,
            };
            entries.push(PartialSum { sum, size, sign: if positive { 1 } else { -1 } });
        }
        SignedPartialSums { entries }
    }

    pub fn entries(&self) -> &[PartialSum] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `Σ sgn`, which is `1` for the odd-positive convention when `r ≥ 1`.
    pub fn sign_total(&self) -> i64 {
        self.entries.iter().map(|e| i64::from(e.sign)).sum()
    }
}

fn level_binom(level: u64, shift: u64, n: u32) -> ExactInt {
    binom(level as i64 - shift as i64 + i64::from(n), n)
}

/// Dimension of the degree-`level` piece of the ideal.
pub fn ideal_slice_dim(ideal: &IdealSpec, level: u64) -> ExactInt {
    ideal_slice_dim_with(ideal, level, SignConvention::OddPositive)
}

/// [`ideal_slice_dim`] under an explicit sign convention.
pub fn ideal_slice_dim_with(ideal: &IdealSpec, level: u64, convention: SignConvention) -> ExactInt {
    let n = ideal.ambient_dim;
    SignedPartialSums::new(&ideal.gen_degrees, convention)
        .entries()
        .iter()
        .fold(ExactInt::zero(), |acc, e| {
            let term = level_binom(level, e.sum, n);
            if e.sign > 0 {
                acc + term
            } else {
                acc - term
            }
        })
}

/// Hilbert function of the quotient ring `R / (g_1, ..., g_r)` at `level`.
///
/// ```
/// use cigenus::hilbert::{quotient_hf, IdealSpec};
/// let ci = IdealSpec::new(2, vec![2, 2]).unwrap();
/// let values: Vec<i64> = (0..6)
///     .map(|l| quotient_hf(&ci, l).try_into().unwrap())
///     .collect();
/// assert_eq!(values, [1, 3, 4, 4, 4, 4]);
/// ```
pub fn quotient_hf(ideal: &IdealSpec, level: u64) -> ExactInt {
    level_binom(level, 0, ideal.ambient_dim) - ideal_slice_dim(ideal, level)
}

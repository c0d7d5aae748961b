//! Dense-enough multivariate polynomials over the rationals, used only to
//! extract coefficients symbolically.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::exactnum::{rat_int, ExactRat};

/// Sparse polynomial: exponent vector → coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Poly {
    vars: usize,
    terms: BTreeMap<Vec<u32>, ExactRat>,
}

impl Poly {
    pub fn constant(vars: usize, c: ExactRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; vars], c);
        }
        Poly { vars, terms }
    }

    /// `x_0 + ... + x_{vars-1} + shift`.
    pub fn linear_sum(vars: usize, shift: i64) -> Self {
        let mut p = Poly::constant(vars, rat_int(shift));
        for j in 0..vars {
            let mut e = vec![0; vars];
            e[j] = 1;
            p.terms.insert(e, ExactRat::one());
        }
        p
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut terms: BTreeMap<Vec<u32>, ExactRat> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(ExactRat::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { vars: self.vars, terms }
    }

    pub fn scale(&self, c: &ExactRat) -> Poly {
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), v * c))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        Poly { vars: self.vars, terms }
    }

    /// Terms in which every variable appears.
    pub fn divisible_by_all(&self) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().all(|&x| x > 0))
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        Poly { vars: self.vars, terms }
    }

    pub fn eval(&self, point: &[u64]) -> ExactRat {
        assert_eq!(point.len(), self.vars);
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono: num_bigint::BigInt = e
                    .iter()
                    .zip(point)
                    .map(|(&x, &p)| num_bigint::BigInt::from(p).pow(x))
                    .product();
                c * rat_int(mono)
            })
            .sum()
    }

    #[cfg(test)]
    pub fn coeff(&self, e: &[u32]) -> ExactRat {
        self.terms.get(e).cloned().unwrap_or_else(ExactRat::zero)
    }
}

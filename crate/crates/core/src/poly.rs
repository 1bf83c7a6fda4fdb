//! Nonnegative integer polynomials in one variable `t`, used for Betti
//! tables and graded dimensions.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Poincaré polynomial `sum_k b_k t^k`; index = cohomological degree.
///
/// Trailing zero coefficients are trimmed, so structural equality is
/// polynomial equality. Arithmetic panics on `u64` overflow.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PoincarePolynomial {
    coeffs: Vec<u64>,
}

impl PoincarePolynomial {
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `1 + k t`
    pub fn linear(k: u64) -> Self {
        Self::new(vec![1, k])
    }

    /// `(1 + t)^n`, the Poincaré polynomial of an `n`-torus.
    pub fn torus(n: usize) -> Self {
        Self::linear(1).pow(n)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Degree of the top nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Value at `t = 1`: the total dimension.
    pub fn total(&self) -> u64 {
        self.coeffs
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .expect("overflow in PoincarePolynomial::total")
    }

    /// Value at `t = -1`: the Euler characteristic.
    pub fn euler_characteristic(&self) -> i128 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| if k % 2 == 0 { c as i128 } else { -(c as i128) })
            .sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn odd_coefficients_vanish(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|&c| c == 0)
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitute `t -> t^k` (e.g. to place even-degree tables).
    pub fn stretch(&self, k: usize) -> Self {
        let mut out = vec![0; self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i * k] = c;
        }
        Self::new(out)
    }

    /// Exact division by `(1 + t)^n`. Fails if the quotient is not a
    /// polynomial with nonnegative integer coefficients.
    pub fn div_by_torus(&self, n: usize) -> Result<Self> {
        let mut rem: Vec<i128> = self.coeffs.iter().map(|&c| c as i128).collect();
        for step in 0..n {
            // synthetic division by (1 + t), lowest degree first
            let mut quot = vec![0i128; rem.len().saturating_sub(1)];
            let mut carry = 0i128;
            for (k, q) in quot.iter_mut().enumerate() {
                *q = rem[k] - carry;
                carry = *q;
            }
            let last = rem.len().checked_sub(1);
            match last {
                Some(last) if rem[last] == carry => {}
                None => {}
                _ => {
                    return Err(Error::FreenessViolation(format!(
                        "{self} is not divisible by (1+t)^{n} (failed at factor {})",
                        step + 1
                    )))
                }
            }
            rem = quot;
        }
        if let Some((k, c)) = rem.iter().enumerate().find(|(_, c)| **c < 0) {
            return Err(Error::FreenessViolation(format!(
                "{self} / (1+t)^{n} has negative coefficient {c} in degree {k}"
            )));
        }
        Ok(Self::new(rem.into_iter().map(|c| c as u64).collect()))
    }
}

impl Default for PoincarePolynomial {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Vec<u64>> for PoincarePolynomial {
    fn from(coeffs: Vec<u64>) -> Self {
        Self::new(coeffs)
    }
}

impl Mul for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn mul(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return PoincarePolynomial::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let prod = a.checked_mul(b).expect("overflow in PoincarePolynomial::mul");
                out[i + j] = out[i + j]
                    .checked_add(prod)
                    .expect("overflow in PoincarePolynomial::mul");
            }
        }
        PoincarePolynomial::new(out)
    }
}

impl Mul for PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn mul(self, rhs: PoincarePolynomial) -> PoincarePolynomial {
        &self * &rhs
    }
}

impl Add for &PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn add(self, rhs: &PoincarePolynomial) -> PoincarePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let out = (0..len)
            .map(|k| {
                self.coeff(k)
                    .checked_add(rhs.coeff(k))
                    .expect("overflow in PoincarePolynomial::add")
            })
            .collect();
        PoincarePolynomial::new(out)
    }
}

impl Add for PoincarePolynomial {
    type Output = PoincarePolynomial;

    fn add(self, rhs: PoincarePolynomial) -> PoincarePolynomial {
        &self + &rhs
    }
}

impl std::iter::Product for PoincarePolynomial {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for PoincarePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Display for PoincarePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}t^{k}")?,
            }
        }
        Ok(())
    }
}

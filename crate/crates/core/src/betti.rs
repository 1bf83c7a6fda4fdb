//! Finite-field point counts and Poincaré polynomials of genus-zero moduli
//! spaces and of the little-disks-type spaces built on them.
//!
//! For the Tate-type spaces here, `|U(F_q)| = sum_k (-1)^k b_k q^{dim-k}`
//! for open `U` and `|X(F_q)| = sum_k b_{2k} q^k` for proper `X`. Counting at
//! enough primes and interpolating recovers the Betti numbers, which are
//! then checked against the topological recursions.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::PoincarePolynomial;
use crate::trees::enumerate_all_trees;

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn check_field(q: u64) -> Result<()> {
    if q < 5 {
        return Err(Error::FieldTooSmall(q));
    }
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(())
}

/// The first `count` primes `>= 5`.
pub fn primes_from_five(count: usize) -> Vec<u64> {
    (5u64..).filter(|&q| is_prime(q)).take(count).collect()
}

/// Number of ordered tuples of `len` distinct elements of `pool`: the
/// increasing tuples are enumerated explicitly, and each is the sorted form
/// of `len!` ordered ones.
fn count_distinct_tuples(pool: &[u64], len: usize) -> u64 {
    fn increasing(pool: &[u64], left: usize) -> u64 {
        if left == 0 {
            return 1;
        }
        (0..pool.len()).map(|k| increasing(&pool[k + 1..], left - 1)).sum()
    }
    if len > pool.len() {
        return 0;
    }
    let orderings: u64 = (1..=len as u64).product();
    increasing(pool, len) * orderings
}

/// `|M_{0,n}(F_q)|`: with three marks fixed at `0, 1, ∞`, the remaining
/// `n - 3` marks are distinct points of `F_q \ {0, 1}`. Brute force.
pub fn count_open(n: usize, q: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::Arity { got: n, min: 3 });
    }
    check_field(q)?;
    let pool: Vec<u64> = (2..q).collect();
    Ok(count_distinct_tuples(&pool, n - 3))
}

/// `|Mbar_{0,n}(F_q)|` as the sum over all boundary strata (stable trees of
/// arity `n - 1`) of the product of open counts of the vertex moduli.
pub fn count_bar(n: usize, q: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::Arity { got: n, min: 3 });
    }
    check_field(q)?;
    let mut cache: HashMap<usize, u64> = HashMap::new();
    let mut total: u64 = 0;
    for tree in enumerate_all_trees(n - 1) {
        let mut prod: u64 = 1;
        for v in tree.vertex_valences() {
            let c = match cache.get(&v) {
                Some(&c) => c,
                None => {
                    let c = count_open(v, q)?;
                    cache.insert(v, c);
                    c
                }
            };
            prod = prod.checked_mul(c).ok_or(Error::Overflow("count_bar"))?;
        }
        total = total.checked_add(prod).ok_or(Error::Overflow("count_bar"))?;
    }
    Ok(total)
}

/// `|Conf_n(A^1)(F_q)|`: ordered `n`-tuples of distinct points of `F_q`.
pub fn count_conf(n: usize, q: u64) -> Result<u64> {
    check_field(q)?;
    let pool: Vec<u64> = (0..q).collect();
    Ok(count_distinct_tuples(&pool, n))
}

/// Points of the open part of `FLC_n`: a `G_m^{n+1}`-bundle over
/// `M_{0,n+1}` (a single `G_m` for `n = 1`).
pub fn count_flc_open(n: usize, q: u64) -> Result<u64> {
    check_field(q)?;
    if n == 0 {
        return Err(Error::Arity { got: 0, min: 1 });
    }
    if n == 1 {
        return Ok(q - 1);
    }
    let base = count_open(n + 1, q)?;
    (q - 1)
        .checked_pow(n as u32 + 1)
        .and_then(|t| t.checked_mul(base))
        .ok_or(Error::Overflow("count_flc_open"))
}

/// Exact Lagrange interpolation; coefficients in ascending degree.
pub fn interpolate(points: &[(u64, u64)]) -> Vec<BigRational> {
    let n = points.len();
    let mut result = vec![BigRational::zero(); n];
    for (k, &(xk, yk)) in points.iter().enumerate() {
        // basis polynomial prod_{j != k} (x - x_j) / (x_k - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, &(xj, _)) in points.iter().enumerate() {
            if j == k {
                continue;
            }
            let xj = BigRational::from_integer(BigInt::from(xj));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (d, c) in basis.iter().enumerate() {
                next[d + 1] += c;
                next[d] -= c * &xj;
            }
            basis = next;
            denom *= BigRational::from_integer(BigInt::from(xk)) - xj;
        }
        let scale = BigRational::from_integer(BigInt::from(yk)) / denom;
        for (d, c) in basis.iter().enumerate() {
            result[d] += c * &scale;
        }
    }
    result
}

fn eval(coeffs: &[BigRational], x: u64) -> BigRational {
    let x = BigRational::from_integer(BigInt::from(x));
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &x + c)
}

/// Interpolates point counts with the first `dim + 1` samples, checks every
/// remaining sample against the polynomial, and returns the integer
/// coefficients in ascending powers of `q`.
pub fn count_polynomial(samples: &[(u64, u64)], dim: usize) -> Result<Vec<i128>> {
    if samples.len() < dim + 2 {
        return Err(Error::PurityViolation(format!(
            "{} samples cannot determine and confirm a degree-{dim} count",
            samples.len()
        )));
    }
    let coeffs = interpolate(&samples[..dim + 1]);
    for &(q, y) in &samples[dim + 1..] {
        if eval(&coeffs, q) != BigRational::from_integer(BigInt::from(y)) {
            return Err(Error::PurityViolation(format!(
                "count {y} at q = {q} is off the degree-{dim} interpolant"
            )));
        }
    }
    coeffs
        .iter()
        .map(|c| {
            if !c.is_integer() {
                return Err(Error::PurityViolation(format!("non-integral coefficient {c}")));
            }
            c.to_integer().to_i128().ok_or(Error::Overflow("count_polynomial"))
        })
        .collect()
}

/// Betti numbers of a 2-pure smooth variety of dimension `dim` from its
/// count polynomial: `b_k = (-1)^k [q^{dim-k}]`.
pub fn open_betti_from_counts(samples: &[(u64, u64)], dim: usize) -> Result<PoincarePolynomial> {
    let coeffs = count_polynomial(samples, dim)?;
    let mut betti = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let c = coeffs[dim - k];
        let b = if k % 2 == 0 { c } else { -c };
        if b < 0 {
            return Err(Error::PurityViolation(format!(
                "coefficient {c} of q^{} has the wrong sign for degree {k}",
                dim - k
            )));
        }
        betti.push(b as u64);
    }
    Ok(PoincarePolynomial::new(betti))
}

/// Betti numbers of a smooth proper variety with only algebraic cohomology
/// from its count polynomial: `b_{2k} = [q^k]`, odd Betti numbers zero.
pub fn proper_betti_from_counts(samples: &[(u64, u64)], dim: usize) -> Result<PoincarePolynomial> {
    let coeffs = count_polynomial(samples, dim)?;
    if let Some(c) = coeffs.iter().find(|c| c.is_negative()) {
        return Err(Error::PurityViolation(format!("negative count coefficient {c}")));
    }
    let even = PoincarePolynomial::new(coeffs.iter().map(|&c| c as u64).collect());
    let table = even.stretch(2);
    if !table.is_palindromic() {
        return Err(Error::PurityViolation(format!("{table} violates Poincaré duality")));
    }
    Ok(table)
}

fn sample(primes: &[u64], f: impl Fn(u64) -> Result<u64> + Sync) -> Result<Vec<(u64, u64)>> {
    primes.par_iter().map(|&q| f(q).map(|c| (q, c))).collect()
}

fn default_primes(dim: usize) -> Vec<u64> {
    primes_from_five(dim + 2)
}

/// `P(M_{0,n})` by the fibration recursion: forgetting the last mark of
/// `M_{0,k+1}` is a fibration with fiber `P^1` minus `k` points, so each
/// step multiplies by `1 + (k - 1) t`.
pub fn betti_open_recursion(n: usize) -> Result<PoincarePolynomial> {
    if n < 3 {
        return Err(Error::Arity { got: n, min: 3 });
    }
    Ok((3..n).map(|k| PoincarePolynomial::linear(k as u64 - 1)).product())
}

/// `P(M_{0,n})` by interpolating point counts at the given primes.
pub fn betti_open_counted(n: usize, primes: &[u64]) -> Result<PoincarePolynomial> {
    if n < 3 {
        return Err(Error::Arity { got: n, min: 3 });
    }
    let samples = sample(primes, |q| count_open(n, q))?;
    open_betti_from_counts(&samples, n - 3)
}

/// `P(M_{0,n})`, computed by the fibration recursion and by point counting;
/// disagreement is a purity violation.
pub fn betti_open(n: usize) -> Result<PoincarePolynomial> {
    let primes = default_primes(n.saturating_sub(3));
    betti_open_with(n, &primes)
}

pub fn betti_open_with(n: usize, primes: &[u64]) -> Result<PoincarePolynomial> {
    let recursion = betti_open_recursion(n)?;
    let counted = betti_open_counted(n, primes)?;
    if recursion != counted {
        return Err(Error::PurityViolation(format!(
            "M_0,{n}: recursion gives {recursion}, point counts give {counted}"
        )));
    }
    Ok(recursion)
}

/// `P(Mbar_{0,n})` from the stratified point count.
pub fn betti_mbar(n: usize) -> Result<PoincarePolynomial> {
    betti_mbar_with(n, &default_primes(n.saturating_sub(3)))
}

pub fn betti_mbar_with(n: usize, primes: &[u64]) -> Result<PoincarePolynomial> {
    if n < 3 {
        return Err(Error::Arity { got: n, min: 3 });
    }
    let samples = sample(primes, |q| count_bar(n, q))?;
    proper_betti_from_counts(&samples, n - 3)
}

/// `H^*(LD_n) = H^*(Conf_n(C))`, from configuration counts over `F_q`,
/// cross-checked against `(1 + t) P(M_{0,n+1})` for `n >= 2`.
pub fn betti_ld(n: usize) -> Result<PoincarePolynomial> {
    betti_ld_with(n, &default_primes(n))
}

pub fn betti_ld_with(n: usize, primes: &[u64]) -> Result<PoincarePolynomial> {
    if n == 0 {
        return Err(Error::Arity { got: 0, min: 1 });
    }
    let samples = sample(primes, |q| count_conf(n, q))?;
    let counted = open_betti_from_counts(&samples, n)?;
    if n >= 2 {
        let expected = PoincarePolynomial::linear(1) * betti_open_recursion(n + 1)?;
        if counted != expected {
            return Err(Error::PurityViolation(format!(
                "Conf_{n}(C): counts give {counted}, (1+t)·P(M_0,{}) is {expected}",
                n + 1
            )));
        }
    }
    Ok(counted)
}

/// `H^*(FLD_n) = H^*((S^1)^n) ⊗ H^*(LD_n)`.
pub fn betti_fld(n: usize) -> Result<PoincarePolynomial> {
    Ok(PoincarePolynomial::torus(n) * betti_ld(n)?)
}

/// Betti table of the topological realization of `FLC_n`: an
/// `(n+1)`-torus bundle over `M_{0,n+1}`, or a circle for `n = 1`.
pub fn betti_flc_top(n: usize) -> Result<PoincarePolynomial> {
    match n {
        0 => Err(Error::Arity { got: 0, min: 1 }),
        1 => Ok(PoincarePolynomial::torus(1)),
        n => Ok(PoincarePolynomial::torus(n + 1) * betti_open_recursion(n + 1)?),
    }
}

/// The Betti tables attached to operad arity `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoincareTables {
    pub arity: usize,
    /// `Mbar_{0,n+1}`, the base of `FLC_n` (absent for `n = 1`).
    pub mbar: Option<PoincarePolynomial>,
    pub flc_top: PoincarePolynomial,
    pub fld: PoincarePolynomial,
    pub ld: PoincarePolynomial,
}

pub fn poincare_tables(n: usize) -> Result<PoincareTables> {
    let mbar = if n >= 2 { Some(betti_mbar(n + 1)?) } else { None };
    let flc_top = betti_flc_top(n)?;
    let fld = betti_fld(n)?;
    let ld = betti_ld(n)?;
    if flc_top != fld {
        return Err(Error::DimensionMismatch(format!(
            "arity {n}: FLC^top table {flc_top} differs from FLD table {fld}"
        )));
    }
    Ok(PoincareTables { arity: n, mbar, flc_top, fld, ld })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u64]) -> PoincarePolynomial {
        PoincarePolynomial::new(c.to_vec())
    }

    #[test]
    fn open_counts() {
        assert_eq!(count_open(4, 7), Ok(5));
        assert_eq!(count_open(5, 7), Ok(20));
        assert_eq!(count_open(3, 11), Ok(1));
        assert_eq!(count_open(4, 9), Err(Error::NotPrime(9)));
        assert_eq!(count_open(4, 3), Err(Error::FieldTooSmall(3)));
        assert!(count_open(2, 7).is_err());
    }

    #[test]
    fn compactified_counts() {
        assert_eq!(count_bar(4, 7), Ok(8));
        assert_eq!(count_bar(5, 7), Ok(85));
        assert_eq!(count_bar(5, 11), Ok(177));
        assert_eq!(count_bar(3, 5), Ok(1));
    }

    #[test]
    fn open_tables() {
        assert_eq!(betti_open(3).unwrap(), PoincarePolynomial::one());
        assert_eq!(betti_open(5).unwrap(), p(&[1, 5, 6]));
        assert_eq!(betti_open(6).unwrap(), p(&[1, 9, 26, 24]));
    }

    #[test]
    fn compact_tables() {
        assert_eq!(betti_mbar(4).unwrap(), p(&[1, 0, 1]));
        assert_eq!(betti_mbar(5).unwrap(), p(&[1, 0, 5, 0, 1]));
    }

    #[test]
    fn operad_tables() {
        assert_eq!(betti_fld(2).unwrap(), p(&[1, 3, 3, 1]));
        assert_eq!(betti_ld(3).unwrap(), p(&[1, 3, 2]));
        assert_eq!(betti_ld(1).unwrap(), PoincarePolynomial::one());
        let t = poincare_tables(3).unwrap();
        assert_eq!(t.flc_top, t.fld);
        assert_eq!(t.mbar, Some(p(&[1, 0, 1])));
    }

    #[test]
    fn too_few_primes() {
        assert!(matches!(betti_open_counted(6, &[5, 7, 11]), Err(Error::PurityViolation(_))));
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        // q^2 + 5q + 1
        let samples: Vec<(u64, u64)> = [5u64, 7, 11, 13].iter().map(|&q| (q, q * q + 5 * q + 1)).collect();
        assert_eq!(count_polynomial(&samples, 2).unwrap(), vec![1, 5, 1]);
        let mut bad = samples.clone();
        bad[3].1 += 1;
        assert!(count_polynomial(&bad, 2).is_err());
    }

    #[test]
    fn flc_open_counts_match_torus_bundle() {
        assert_eq!(count_flc_open(1, 7), Ok(6));
        assert_eq!(count_flc_open(2, 7), Ok(216));
    }
}

//! Closed-form counting functions. Everything returns arbitrary-precision
//! integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::{Error, Rational, Result};

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `n! / (k_1! ⋯ k_r!)`; the parts must sum to `n`.
pub fn multinomial(n: usize, parts: &[usize]) -> BigUint {
    debug_assert_eq!(parts.iter().sum::<usize>(), n);
    parts.iter().fold(factorial(n), |acc, &k| acc / factorial(k))
}

/// `c_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// Large Schröder numbers `s_0, …, s_n` from `s_0 = 1`, `s_1 = 2`,
/// `s_n = 3 s_{n-1} + Σ_{k=1}^{n-2} s_k s_{n-k-1}`.
pub fn schroeder_table(n: usize) -> Vec<BigUint> {
    let mut s = vec![BigUint::one()];
    if n >= 1 {
        s.push(BigUint::from(2u32));
    }
    for m in 2..=n {
        let mut next = BigUint::from(3u32) * &s[m - 1];
        for k in 1..=m - 2 {
            next += &s[k] * &s[m - k - 1];
        }
        s.push(next);
    }
    s
}

pub fn schroeder(n: usize) -> BigUint {
    schroeder_table(n).pop().expect("table has n + 1 entries")
}

/// The Kreweras number `Krew(λ) = multinomial(n; m_1, …, m_n, n-ℓ) / (n-ℓ+1)`,
/// the coefficient of `h_λ` in `PF_n`.
pub fn krew(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let len = lambda.len();
    let mut blocks: Vec<usize> = lambda.multiplicities().into_iter().map(|(_, m)| m).collect();
    blocks.push(n - len);
    let (q, r) = multinomial(n, &blocks).div_rem(&BigUint::from(n - len + 1));
    debug_assert!(r.is_zero());
    q
}

/// The odd Kreweras number
/// `OKrew(λ) = (2^ℓ / ℓ!) · binom(ℓ; m_1, m_3, …) · (n+ℓ-1)(n+ℓ-3)⋯(n-ℓ+3)`.
///
/// The descending product has `ℓ - 1` factors and is empty for `ℓ ≤ 1`.
pub fn okrew(lambda: &Partition) -> Result<BigUint> {
    if !lambda.is_odd() {
        return Err(Error::NotOdd(alloc::format!("{lambda}")));
    }
    let n = lambda.size();
    let len = lambda.len();
    // 2^ℓ/ℓ! · ℓ!/∏m_i! = 2^ℓ/∏m_i!
    let mut value = Rational::from_integer((BigUint::one() << len).into());
    for (_, m) in lambda.multiplicities() {
        value /= Rational::from_integer(factorial(m).into());
    }
    for k in 0..len.saturating_sub(1) {
        value *= Rational::from_integer((n + len - 1 - 2 * k).into());
    }
    if !value.is_integer() {
        return Err(Error::Inconsistent(alloc::format!("OKrew{lambda} = {value} is not an integer")));
    }
    let value = value.to_integer();
    Ok(value.to_biguint().expect("positive"))
}

/// Checks `OKrew(λ) · binom(n, (n+ℓ)/2) = Krew(λ) · binom(n+ℓ, (n+ℓ)/2)`.
pub fn okrew_ratio_check(lambda: &Partition) -> Result<bool> {
    let odd = okrew(lambda)?;
    let n = lambda.size();
    let half = (n + lambda.len()) / 2;
    Ok(odd * binomial(n, half) == krew(lambda) * binomial(n + lambda.len(), half))
}

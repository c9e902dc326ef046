//! The Clifford algebra `𝒞_n` over `ℚ(i, √2)` and the embedding of the
//! double cover of `𝔖_n` into its unit group.
//!
//! Basis monomials `ξ_I` are keyed by bitmasks (bit `k - 1` for `ξ_k`), so
//! `n ≤ 32`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::quadratic::{pow2, Sqrt2Rational};
use crate::{Error, Rational, Result};

/// `re + i·im` with `re`, `im` in `ℚ(√2)`, i.e. `a + b·i + c·√2 + d·i·√2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RingQI2 {
    pub re: Sqrt2Rational,
    pub im: Sqrt2Rational,
}

impl RingQI2 {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        RingQI2 { re: Sqrt2Rational::new(a, c), im: Sqrt2Rational::new(b, d) }
    }

    pub fn real(re: Sqrt2Rational) -> Self {
        RingQI2 { re, im: Sqrt2Rational::zero() }
    }

    pub fn rational(a: Rational) -> Self {
        Self::real(Sqrt2Rational::rational(a))
    }

    pub fn i() -> Self {
        RingQI2 { re: Sqrt2Rational::zero(), im: Sqrt2Rational::one() }
    }

    /// `(a, b, c, d)` in `a + b·i + c·√2 + d·i·√2`.
    pub fn components(&self) -> [&Rational; 4] {
        [&self.re.a, &self.im.a, &self.re.b, &self.im.b]
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RingQI2 { re: self.re.scale(c), im: self.im.scale(c) }
    }
}

impl Zero for RingQI2 {
    fn zero() -> Self {
        RingQI2::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for RingQI2 {
    fn one() -> Self {
        RingQI2::real(Sqrt2Rational::one())
    }
}

impl<'a> Add<&'a RingQI2> for &'a RingQI2 {
    type Output = RingQI2;
    fn add(self, rhs: Self) -> RingQI2 {
        RingQI2 { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Add for RingQI2 {
    type Output = RingQI2;
    fn add(self, rhs: Self) -> RingQI2 {
        &self + &rhs
    }
}

impl Sub for RingQI2 {
    type Output = RingQI2;
    fn sub(self, rhs: Self) -> RingQI2 {
        RingQI2 { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Neg for RingQI2 {
    type Output = RingQI2;
    fn neg(self) -> RingQI2 {
        RingQI2 { re: -self.re, im: -self.im }
    }
}

impl<'a> Mul<&'a RingQI2> for &'a RingQI2 {
    type Output = RingQI2;
    fn mul(self, rhs: Self) -> RingQI2 {
        RingQI2 { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

impl Mul for RingQI2 {
    type Output = RingQI2;
    fn mul(self, rhs: Self) -> RingQI2 {
        &self * &rhs
    }
}

impl fmt::Display for RingQI2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "i({})", self.im),
            (false, false) => write!(f, "{} + i({})", self.re, self.im),
        }
    }
}

/// Sign of `ξ_I ξ_J = ± ξ_{I Δ J}`: the parity of pairs `a ∈ I`, `b ∈ J`
/// with `a > b`.
fn monomial_sign(i: u32, j: u32) -> bool {
    let mut swaps = 0u32;
    let mut rest = j;
    while rest != 0 {
        let b = rest.trailing_zeros();
        rest &= rest - 1;
        // elements of I strictly above b
        swaps += (u64::from(i) & !((2u64 << b) - 1)).count_ones();
    }
    swaps % 2 == 1
}

/// An element of `𝒞_n` as a sparse combination of the monomials `ξ_I`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElement {
    n: usize,
    terms: BTreeMap<u32, RingQI2>,
}

impl CliffordElement {
    fn check_size(n: usize) -> Result<()> {
        if n > 32 {
            return Err(Error::IndexOutOfRange { index: n, n: 32 });
        }
        Ok(())
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::check_size(n)?;
        Ok(CliffordElement { n, terms: BTreeMap::new() })
    }

    pub fn scalar(n: usize, c: RingQI2) -> Result<Self> {
        let mut x = Self::zero(n)?;
        x.add_term(0, c);
        Ok(x)
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::scalar(n, RingQI2::one())
    }

    /// `c · ξ_I` for a set of 1-based indices `I` (any order, no repeats).
    pub fn monomial(n: usize, indices: &[usize], c: RingQI2) -> Result<Self> {
        Self::check_size(n)?;
        let mut mask = 0u32;
        let mut sign_flip = false;
        for &k in indices {
            if k == 0 || k > n {
                return Err(Error::IndexOutOfRange { index: k, n });
            }
            let bit = 1u32 << (k - 1);
            if mask & bit != 0 {
                return Err(Error::Inconsistent(format!("repeated generator {k}")));
            }
            // moving ξ_k left past the larger indices already placed
            sign_flip ^= (u64::from(mask) & !((u64::from(bit) << 1) - 1)).count_ones() % 2 == 1;
            mask |= bit;
        }
        let mut x = Self::zero(n)?;
        x.add_term(mask, if sign_flip { -c } else { c });
        Ok(x)
    }

    pub fn generator(n: usize, k: usize) -> Result<Self> {
        Self::monomial(n, &[k], RingQI2::one())
    }

    pub fn generators(&self) -> usize {
        self.n
    }

    /// Terms as (ascending 1-based index list, coefficient).
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &RingQI2)> + '_ {
        self.terms.iter().map(|(&mask, c)| ((1..=self.n).filter(|k| mask >> (k - 1) & 1 == 1).collect(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The coefficient of `ξ_∅`.
    pub fn constant_term(&self) -> RingQI2 {
        self.terms.get(&0).cloned().unwrap_or_default()
    }

    pub fn coeff_mask(&self, mask: u32) -> RingQI2 {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, mask: u32, c: RingQI2) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(mask).or_default();
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.remove(&mask);
        }
    }

    pub fn add(&self, other: &CliffordElement) -> Result<CliffordElement> {
        if self.n != other.n {
            return Err(Error::GeneratorMismatch { left: self.n, right: other.n });
        }
        let mut out = self.clone();
        for (&mask, c) in &other.terms {
            out.add_term(mask, c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RingQI2) -> CliffordElement {
        let mut out = CliffordElement { n: self.n, terms: BTreeMap::new() };
        for (&mask, x) in &self.terms {
            out.add_term(mask, x * c);
        }
        out
    }

    pub fn mul(&self, other: &CliffordElement) -> Result<CliffordElement> {
        clifford_mul(self, other)
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (indices, c)) in self.terms().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})ξ{indices:?}")?;
        }
        Ok(())
    }
}

/// `ξ_I ξ_J = sgn(I, J) ξ_{I Δ J}` extended bilinearly.
pub fn clifford_mul(x: &CliffordElement, y: &CliffordElement) -> Result<CliffordElement> {
    if x.n != y.n {
        return Err(Error::GeneratorMismatch { left: x.n, right: y.n });
    }
    let mut out = CliffordElement { n: x.n, terms: BTreeMap::new() };
    for (&i, a) in &x.terms {
        for (&j, b) in &y.terms {
            let c = a * b;
            out.add_term(i ^ j, if monomial_sign(i, j) { -c } else { c });
        }
    }
    Ok(out)
}

/// The image `(i/√2)(ξ_k - ξ_{k+1})` of the generator `s_k`, `1 ≤ k < n`.
pub fn embed_generator(k: usize, n: usize) -> Result<CliffordElement> {
    if k == 0 || k >= n {
        return Err(Error::IndexOutOfRange { index: k, n });
    }
    let half = Rational::new(1.into(), 2.into());
    let zero = Rational::zero();
    // i/√2 = (√2/2)·i
    let c = RingQI2::new(zero.clone(), zero.clone(), zero, half);
    let x = CliffordElement::monomial(n, &[k], c.clone())?;
    let y = CliffordElement::monomial(n, &[k + 1], -c)?;
    x.add(&y)
}

/// The positive class representative `π_λ = π_1 ⋯ π_k` for odd `λ ⊢ n`, where
/// `π_j` is the product `s_{r+1} ⋯ s_{r+λ_j-1}` over the block
/// `{r+1, …, r+λ_j}`.
pub fn embed_positive_rep(lambda: &Partition, n: usize) -> Result<CliffordElement> {
    if !lambda.is_odd() {
        return Err(Error::NotOdd(format!("{lambda}")));
    }
    if lambda.size() != n {
        return Err(Error::InvalidPartition(format!("{lambda} is not a partition of {n}")));
    }
    let mut out = CliffordElement::one(n)?;
    let mut start = 0;
    for &part in lambda.parts() {
        for k in start + 1..start + part {
            out = clifford_mul(&out, &embed_generator(k, n)?)?;
        }
        start += part;
    }
    Ok(out)
}

/// Trace of left multiplication by `x` on `𝒞_n`: `2^n` times the constant
/// term, since every `ξ_J` with `J ≠ ∅` permutes the basis without fixed
/// points.
pub fn trace_left_mul(x: &CliffordElement) -> RingQI2 {
    x.constant_term().scale(&pow2(x.n as i64))
}

/// The `2^n × 2^n` matrix of left multiplication by `x` in the basis
/// `{ξ_J}` ordered by bitmask; entry `[I][J]` is the coefficient of `ξ_I` in
/// `x ξ_J`.
pub fn left_mul_matrix(x: &CliffordElement) -> Vec<Vec<RingQI2>> {
    let dim = 1usize << x.n;
    let mut matrix = alloc::vec![alloc::vec![RingQI2::zero(); dim]; dim];
    for j in 0..dim as u32 {
        let basis = CliffordElement { n: x.n, terms: BTreeMap::from([(j, RingQI2::one())]) };
        let image = clifford_mul(x, &basis).expect("same algebra");
        for (&i, c) in &image.terms {
            matrix[i as usize][j as usize] = c.clone();
        }
    }
    matrix
}

/// `2^{(n + ℓ(λ))/2}`, the value of the trace at `π_λ`.
pub fn expected_trace(lambda: &Partition) -> Sqrt2Rational {
    Sqrt2Rational::pow_sqrt2((lambda.size() + lambda.len()) as i64)
}

/// The real value of the trace of `π_λ`, or an error if it has an imaginary
/// part.
pub fn positive_rep_trace(lambda: &Partition) -> Result<Sqrt2Rational> {
    let t = trace_left_mul(&embed_positive_rep(lambda, lambda.size())?);
    if !t.is_real() {
        return Err(Error::Inconsistent(format!("trace of π{lambda} is {t}")));
    }
    Ok(t.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{class_representative, partitions_of, PartitionFilter};
    use proptest::prelude::*;

    fn int(k: i64) -> RingQI2 {
        RingQI2::rational(Rational::from_integer(k.into()))
    }

    fn xi(n: usize, indices: &[usize]) -> CliffordElement {
        CliffordElement::monomial(n, indices, RingQI2::one()).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn ring_arithmetic() {
        let i = RingQI2::i();
        assert_eq!(&i * &i, int(-1));
        let r2 = RingQI2::real(Sqrt2Rational::sqrt2());
        assert_eq!(&r2 * &r2, int(2));
        let c = RingQI2::new(Rational::zero(), Rational::zero(), Rational::zero(), Rational::new(1.into(), 2.into()));
        // (i/√2)² = -1/2
        assert_eq!(&c * &c, RingQI2::rational(Rational::new((-1).into(), 2.into())));
    }

    #[test]
    fn generator_relations() {
        let one = CliffordElement::one(2).unwrap();
        assert_eq!(xi(2, &[1]).mul(&xi(2, &[1])).unwrap(), one);
        assert_eq!(xi(2, &[1]).mul(&xi(2, &[2])).unwrap(), xi(2, &[1, 2]));
        assert_eq!(xi(2, &[2]).mul(&xi(2, &[1])).unwrap(), xi(2, &[1, 2]).scale(&int(-1)));
        assert_eq!(xi(2, &[2, 1]), xi(2, &[1, 2]).scale(&int(-1)));
        let d = xi(2, &[1]).add(&xi(2, &[2]).scale(&int(-1))).unwrap();
        assert_eq!(d.mul(&d).unwrap(), CliffordElement::scalar(2, int(2)).unwrap());
        assert!(xi(2, &[1]).mul(&xi(3, &[1])).is_err());
    }

    #[test]
    fn embedded_generators_satisfy_the_double_cover_relations() {
        for n in 2..=7 {
            let minus_one = CliffordElement::scalar(n, int(-1)).unwrap();
            let s: Vec<CliffordElement> = (1..n).map(|k| embed_generator(k, n).unwrap()).collect();
            for (a, x) in s.iter().enumerate() {
                assert_eq!(x.mul(x).unwrap(), minus_one);
                for (b, y) in s.iter().enumerate() {
                    let xy = x.mul(y).unwrap();
                    let yx = y.mul(x).unwrap();
                    if a + 1 < b {
                        assert_eq!(xy, yx.scale(&int(-1)));
                    }
                    if a + 1 == b {
                        // the braid relation holds without a sign, so that
                        // (s_k s_{k+1})^3 = z = -1
                        let xyx = xy.mul(x).unwrap();
                        let yxy = yx.mul(y).unwrap();
                        assert_eq!(xyx, yxy);
                        assert_eq!(xy.mul(&xy).unwrap().mul(&xy).unwrap(), minus_one);
                    }
                }
            }
        }
        assert!(embed_generator(0, 3).is_err());
        assert!(embed_generator(3, 3).is_err());
    }

    #[test]
    fn positive_representatives() {
        assert_eq!(embed_positive_rep(&p(&[1, 1, 1]), 3).unwrap(), CliffordElement::one(3).unwrap());
        let expected = embed_generator(1, 3).unwrap().mul(&embed_generator(2, 3).unwrap()).unwrap();
        assert_eq!(embed_positive_rep(&p(&[3]), 3).unwrap(), expected);
        // (i/√2)² (ξ1 - ξ2)(ξ2 - ξ3) = (-1/2)(ξ1ξ2 - ξ1ξ3 - 1 + ξ2ξ3)
        assert_eq!(expected.constant_term(), RingQI2::rational(Rational::new(1.into(), 2.into())));
        assert!(embed_positive_rep(&p(&[2, 1]), 3).is_err());
        assert!(embed_positive_rep(&p(&[3]), 4).is_err());
    }

    #[test]
    fn traces() {
        assert_eq!(trace_left_mul(&CliffordElement::one(4).unwrap()), int(16));
        assert!(trace_left_mul(&xi(4, &[2, 3])).is_zero());
        assert_eq!(trace_left_mul(&embed_positive_rep(&p(&[3]), 3).unwrap()), int(4));
        assert_eq!(positive_rep_trace(&p(&[3, 1])).unwrap(), Sqrt2Rational::rational(Rational::from_integer(8.into())));
        for n in 1..=8 {
            for lambda in partitions_of(n, PartitionFilter::Odd) {
                assert_eq!(positive_rep_trace(&lambda).unwrap(), expected_trace(&lambda), "{lambda}");
            }
        }
    }

    #[test]
    fn trace_matches_the_explicit_matrix() {
        for n in 1..=6 {
            for lambda in partitions_of(n, PartitionFilter::Odd) {
                let x = embed_positive_rep(&lambda, n).unwrap();
                let matrix = left_mul_matrix(&x);
                let mut trace = RingQI2::zero();
                for (k, row) in matrix.iter().enumerate() {
                    trace = &trace + &row[k];
                }
                assert_eq!(trace, trace_left_mul(&x), "{lambda}");
            }
        }
    }

    #[test]
    fn conjugation_follows_the_representative() {
        for n in 1..=5 {
            for lambda in partitions_of(n, PartitionFilter::Odd) {
                let pi = embed_positive_rep(&lambda, n).unwrap();
                // the inverse of a product of s_k is the reversed product of -s_k
                let mut pi_inv = CliffordElement::one(n).unwrap();
                let mut start = 0;
                let mut factors = Vec::new();
                for &part in lambda.parts() {
                    factors.extend(start + 1..start + part);
                    start += part;
                }
                for &k in factors.iter().rev() {
                    pi_inv = pi_inv.mul(&embed_generator(k, n).unwrap().scale(&int(-1))).unwrap();
                }
                assert_eq!(pi.mul(&pi_inv).unwrap(), CliffordElement::one(n).unwrap());
                let w = class_representative(&lambda);
                for mask in 0u32..(1 << n) {
                    let indices: Vec<usize> = (1..=n).filter(|k| mask >> (k - 1) & 1 == 1).collect();
                    let conj = pi.mul(&xi(n, &indices)).unwrap().mul(&pi_inv).unwrap();
                    let image: u32 = indices.iter().map(|&k| 1u32 << w.apply(k - 1)).sum();
                    assert_eq!(conj.len(), 1, "{lambda}: {conj}");
                    let c = conj.coeff_mask(image);
                    assert!(c == int(1) || c == int(-1), "{lambda}, {indices:?}: {conj}");
                }
            }
        }
    }

    fn arb_element(n: usize) -> impl Strategy<Value = CliffordElement> {
        proptest::collection::vec((0u32..(1 << n), -3i64..=3, -3i64..=3), 0..5).prop_map(move |terms| {
            let mut x = CliffordElement::zero(n).unwrap();
            for (mask, a, d) in terms {
                let c = RingQI2::new(
                    Rational::from_integer(a.into()),
                    Rational::zero(),
                    Rational::zero(),
                    Rational::from_integer(d.into()),
                );
                x.add_term(mask, c);
            }
            x
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn multiplication_is_associative((x, y, z) in (1usize..=6).prop_flat_map(|n| (arb_element(n), arb_element(n), arb_element(n)))) {
            let left = x.mul(&y).unwrap().mul(&z).unwrap();
            let right = x.mul(&y.mul(&z).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn trace_is_symmetric((x, y) in (1usize..=6).prop_flat_map(|n| (arb_element(n), arb_element(n)))) {
            prop_assert_eq!(trace_left_mul(&x.mul(&y).unwrap()), trace_left_mul(&y.mul(&x).unwrap()));
        }
    }

    #[test]
    fn monomial_signs() {
        assert!(!monomial_sign(0b01, 0b10));
        assert!(monomial_sign(0b10, 0b01));
        // ξ1ξ2ξ1ξ2 = -1
        assert!(monomial_sign(0b11, 0b11));
    }
}

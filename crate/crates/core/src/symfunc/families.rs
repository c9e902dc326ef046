//! The single-part Schur–P functions `P_k` and the product families
//! `V_λ = ∏ P_{λ_i}` and `R_λ = ∏ R_{λ_i}`.

use alloc::vec::Vec;

use crate::partition::Partition;
use crate::{Rational, SymFunc};

use super::{e, h};

/// `P_k = sh(h_k) / 2`, with the convention `P_0 = 1`.
pub fn big_p(k: usize) -> SymFunc {
    if k == 0 {
        return SymFunc::one();
    }
    h(k).shift().scale(&Rational::new(1.into(), 2.into()))
}

/// Memoized `P_k` values; `V_λ` and `R_λ` are products of these.
#[derive(Default, Clone, Debug)]
pub struct PCache {
    values: Vec<SymFunc>,
}

impl PCache {
    pub fn new() -> Self {
        PCache::default()
    }

    pub fn p(&mut self, k: usize) -> &SymFunc {
        while self.values.len() <= k {
            let next = big_p(self.values.len());
            self.values.push(next);
        }
        &self.values[k]
    }

    pub fn v(&mut self, lambda: &Partition) -> SymFunc {
        let mut out = SymFunc::one();
        for &part in lambda.parts() {
            out = out.mul(self.p(part));
        }
        out
    }

    /// `R_m = P_m` for odd `m`, `Σ_{i=1}^{m/2} P_{2i} P_{m-2i}` for even `m`.
    pub fn r_single(&mut self, m: usize) -> SymFunc {
        if m % 2 == 1 {
            return self.p(m).clone();
        }
        let mut out = SymFunc::zero(m);
        for i in 1..=m / 2 {
            let left = self.p(2 * i).clone();
            out += &left.mul(self.p(m - 2 * i));
        }
        out
    }

    pub fn r(&mut self, lambda: &Partition) -> SymFunc {
        let mut out = SymFunc::one();
        for &part in lambda.parts() {
            out = out.mul(&self.r_single(part));
        }
        out
    }
}

pub fn v_func(lambda: &Partition) -> SymFunc {
    PCache::new().v(lambda)
}

pub fn r_func(lambda: &Partition) -> SymFunc {
    PCache::new().r(lambda)
}

/// Checks that the three displayed forms of `P_k`
/// (`½ Σ_i h_i e_{k-i}`, the odd-`i` sum and the even-`i` sum) all equal
/// [`big_p`]`(k)`.
pub fn p_def_forms(k: usize) -> bool {
    let target = big_p(k);
    let mut half = SymFunc::zero(k);
    let mut odd = SymFunc::zero(k);
    let mut even = SymFunc::zero(k);
    for i in 0..=k {
        let term = h(i).mul(&e(k - i));
        half += &term;
        if i % 2 == 1 {
            odd += &term;
        } else {
            even += &term;
        }
    }
    let half = half.scale(&Rational::new(1.into(), 2.into()));
    half == target && odd == target && even == target
}

/// `Σ_{i=1}^k P_{2i} P_{2k-2i} = Σ_{i=1}^k P_{2i-1} P_{2k-2i+1}`.
pub fn p_relation_check(k: usize) -> bool {
    let mut cache = PCache::new();
    let mut even = SymFunc::zero(2 * k);
    let mut odd = SymFunc::zero(2 * k);
    for i in 1..=k {
        let a = cache.p(2 * i).clone();
        even += &a.mul(cache.p(2 * k - 2 * i));
        let b = cache.p(2 * i - 1).clone();
        odd += &b.mul(cache.p(2 * k - 2 * i + 1));
    }
    even == odd
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn small_p_values() {
        assert_eq!(big_p(0), SymFunc::one());
        assert_eq!(big_p(1), SymFunc::p_monomial(p(&[1])));
        assert_eq!(big_p(2), SymFunc::p_monomial(p(&[1, 1])));
        let p3 = SymFunc::from_terms(3, vec![(p(&[3]), q(1, 3)), (p(&[1, 1, 1]), q(2, 3))]).unwrap();
        assert_eq!(big_p(3), p3);
        // P_2 = h_1 e_1
        assert_eq!(big_p(2), h(1).mul(&e(1)));
    }

    #[test]
    fn displayed_forms_agree() {
        for k in 1..=10 {
            assert!(p_def_forms(k), "k = {k}");
        }
    }

    #[test]
    fn even_odd_relation() {
        for k in 1..=6 {
            assert!(p_relation_check(k), "k = {k}");
        }
    }

    #[test]
    fn v_and_r_products() {
        assert_eq!(v_func(&p(&[1, 1])), SymFunc::p_monomial(p(&[1, 1])));
        assert_eq!(r_func(&p(&[2])), SymFunc::p_monomial(p(&[1, 1])));
        let r4 = big_p(2).mul(&big_p(2)).add(&big_p(4)).unwrap();
        assert_eq!(r_func(&p(&[4])), r4);
        let r44211 = r4.mul(&r4).mul(&big_p(2)).mul(&big_p(1)).mul(&big_p(1));
        assert_eq!(r_func(&p(&[4, 4, 2, 1, 1])), r44211);
        // R_{4,4,2,1,1} = V_{4,4,2,1,1} + 2V_{4,2,2,2,1,1} + V_{2,2,2,2,2,1,1}
        let mut rhs = v_func(&p(&[4, 4, 2, 1, 1]));
        rhs += &v_func(&p(&[4, 2, 2, 2, 1, 1])).scale(&q(2, 1));
        rhs += &v_func(&p(&[2, 2, 2, 2, 2, 1, 1]));
        assert_eq!(r44211, rhs);
    }
}

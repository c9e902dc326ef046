//! `t`-graded symmetric functions and the `q = 1` specializations of `SH_n`.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::parking::enumerate_sorted_naive;
use crate::partition::Partition;
use crate::shifted::{area_o, enumerate_sorted_odd};
use crate::{Rational, SymFunc};

use super::PCache;

/// A polynomial in `t` with rational coefficients, lowest degree first and no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct TPoly {
    coeffs: Vec<Rational>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// `c · t^power`.
    pub fn monomial(power: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_assign(&mut self, other: &TPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Rational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&self, c: &Rational) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |acc, c| acc + c)
    }
}

/// `Σ_λ poly_λ(t) p_λ`, homogeneous of a fixed degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSymFunc {
    degree: usize,
    coeffs: BTreeMap<Partition, TPoly>,
}

impl TSymFunc {
    pub fn zero(degree: usize) -> Self {
        TSymFunc { degree, coeffs: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, TPoly> {
        &self.coeffs
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, TPoly)>) -> Self {
        let mut out = TSymFunc::zero(degree);
        for (lambda, poly) in terms {
            out.add_poly(lambda, &poly);
        }
        out
    }

    fn add_poly(&mut self, lambda: Partition, poly: &TPoly) {
        assert_eq!(lambda.size(), self.degree, "term {lambda} has the wrong degree");
        match self.coeffs.entry(lambda) {
            Entry::Vacant(slot) => {
                if !poly.is_zero() {
                    slot.insert(poly.clone());
                }
            }
            Entry::Occupied(mut slot) => {
                slot.get_mut().add_assign(poly);
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Adds `t^power · f`.
    pub fn add_scaled(&mut self, power: usize, f: &SymFunc) {
        assert_eq!(f.degree(), self.degree, "degree mismatch in TSymFunc addition");
        for (lambda, c) in f.coeffs() {
            self.add_poly(lambda.clone(), &TPoly::monomial(power, c.clone()));
        }
    }

    /// `⟨f, h_n⟩` taken coefficientwise in `t`; every `p_λ` pairs to `1`.
    pub fn pair_with_h(&self) -> TPoly {
        let mut out = TPoly::zero();
        for poly in self.coeffs.values() {
            out.add_assign(poly);
        }
        out
    }

    /// The coefficient of `t^power`.
    pub fn t_coefficient(&self, power: usize) -> SymFunc {
        let terms = self.coeffs.iter().filter_map(|(l, poly)| poly.coeffs().get(power).map(|c| (l.clone(), c.clone())));
        SymFunc::from_terms(self.degree, terms).expect("keys have the right degree")
    }

    pub fn eval_at_one(&self) -> SymFunc {
        SymFunc::from_terms(self.degree, self.coeffs.iter().map(|(l, poly)| (l.clone(), poly.eval_at_one())))
            .expect("keys have the right degree")
    }
}

impl fmt::Display for TSymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (lambda, poly)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            f.write_str("(")?;
            let mut first = true;
            for (power, c) in poly.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if !first {
                    f.write_str(" + ")?;
                }
                first = false;
                write!(f, "{c}·t^{power}")?;
            }
            write!(f, ")·p{lambda}")?;
        }
        Ok(())
    }
}

fn graded_sum(degree: usize, weights: BTreeMap<(Partition, usize), usize>) -> TSymFunc {
    let mut cache = PCache::new();
    let mut out = TSymFunc::zero(degree);
    for ((shape, power), count) in weights {
        let v = cache.v(&shape).scale(&Rational::from_integer(count.into()));
        out.add_scaled(power, &v);
    }
    out
}

/// Two `t`-graded sums: `SH_n(1, t) = Σ t^{area(p)} V_{λ(p)}` over sorted
/// naive shifted parking functions, and `Σ t^{area_o} V_{λ(p)}` over sorted
/// odd shifted parking functions.
///
/// Both specialize to `SH_n` at `t = 1` and have the same pairing with `h_n`,
/// since the naive-to-odd bijection carries `area` to `area_o`. They are
/// equal coefficientwise only for `n ≤ 3`: from `n = 4` on, some
/// `t`-coefficients of `SH_n(1, t)` have negative `V`-coefficients on odd
/// shapes (the top one for `n = 4` is `2P_4 = 4V_{31} - 2V_{1111}`), which no
/// sum over odd objects can produce.
pub fn t_graded(n: usize) -> (TSymFunc, TSymFunc) {
    let mut naive: BTreeMap<(Partition, usize), usize> = BTreeMap::new();
    for x in enumerate_sorted_naive(n) {
        *naive.entry((x.shape(), x.area())).or_default() += 1;
    }
    let mut odd: BTreeMap<(Partition, usize), usize> = BTreeMap::new();
    for x in enumerate_sorted_odd(n) {
        *odd.entry((x.shape(), area_o(&x))).or_default() += 1;
    }
    (graded_sum(n, naive), graded_sum(n, odd))
}

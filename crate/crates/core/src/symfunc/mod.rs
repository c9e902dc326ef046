//! Homogeneous symmetric functions in the power-sum basis.
//!
//! Every basis the rest of the crate uses (`h`, `e`, `P_k`, `V_λ`, `R_λ`) is
//! materialized as a `p`-expansion. Shiftification, the Hall inner product and
//! the Kronecker product are all diagonal in this basis.

mod basis;
mod families;
mod graded;
mod parking_symm;

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{AddAssign, Mul};

use num_traits::{One, Zero};

use crate::partition::{partitions_of, z_rational, Partition, PartitionFilter};
use crate::quadratic::pow2;
use crate::{Error, Rational, Result};

pub use basis::{expand_odd_v, v_combination};
pub use families::{big_p, p_def_forms, p_relation_check, r_func, v_func, PCache};
pub use graded::{t_graded, TPoly, TSymFunc};
pub use parking_symm::{
    naive_v_expansion, pf_symfunc, pf_symfunc_from_enumeration, pf_symfunc_from_kreweras, sh_symfunc,
};

/// `f = Σ coeffs[λ] p_λ`, homogeneous of a fixed degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymFunc {
    degree: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFunc {
    pub fn zero(degree: usize) -> Self {
        SymFunc { degree, coeffs: BTreeMap::new() }
    }

    /// The constant `1` in degree 0.
    pub fn one() -> Self {
        Self::p_monomial(Partition::empty())
    }

    pub fn p_monomial(lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, Rational::one());
        SymFunc { degree, coeffs }
    }

    /// Builds from explicit terms; zero coefficients are dropped and repeated
    /// keys are summed.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, Rational)>) -> Result<Self> {
        let mut f = SymFunc::zero(degree);
        for (lambda, c) in terms {
            if lambda.size() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: lambda.size() });
            }
            f.add_term(lambda, c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> Rational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Membership in SymP: every key is an odd partition.
    pub fn is_symp(&self) -> bool {
        self.coeffs.keys().all(Partition::is_odd)
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(lambda) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn check_degree(&self, other: &SymFunc) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (lambda, c) in &other.coeffs {
            out.add_term(lambda.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.degree);
        }
        SymFunc { degree: self.degree, coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    /// Product in Sym, using `p_λ p_μ = p_{λ ∪ μ}`.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero(self.degree + other.degree);
        for (l, a) in &self.coeffs {
            for (m, b) in &other.coeffs {
                out.add_term(l.union(m), a * b);
            }
        }
        out
    }

    /// Hall inner product `Σ z_λ f_λ g_λ`.
    pub fn hall_inner(&self, other: &SymFunc) -> Result<Rational> {
        self.check_degree(other)?;
        let mut total = Rational::zero();
        for (lambda, a) in &self.coeffs {
            if let Some(b) = other.coeffs.get(lambda) {
                total += z_rational(lambda) * a * b;
            }
        }
        Ok(total)
    }

    /// Kronecker product: `p_λ * p_μ = δ_{λμ} z_λ p_λ`.
    pub fn kronecker(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_degree(other)?;
        let mut out = SymFunc::zero(self.degree);
        for (lambda, a) in &self.coeffs {
            if let Some(b) = other.coeffs.get(lambda) {
                out.add_term(lambda.clone(), z_rational(lambda) * a * b);
            }
        }
        Ok(out)
    }

    /// Shiftification: `p_λ ↦ 2^{ℓ(λ)} p_λ` for odd `λ`, `0` otherwise.
    pub fn shift(&self) -> SymFunc {
        SymFunc {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(lambda, _)| lambda.is_odd())
                .map(|(lambda, c)| (lambda.clone(), c * pow2(lambda.len() as i64)))
                .collect(),
        }
    }
}

impl AddAssign<&SymFunc> for SymFunc {
    /// Panics on a degree mismatch; use [`SymFunc::add`] for the checked form.
    fn add_assign(&mut self, rhs: &SymFunc) {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in SymFunc addition");
        for (lambda, c) in &rhs.coeffs {
            self.add_term(lambda.clone(), c.clone());
        }
    }
}

impl Mul for &SymFunc {
    type Output = SymFunc;
    fn mul(self, rhs: &SymFunc) -> SymFunc {
        SymFunc::mul(self, rhs)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (lambda, c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·p{lambda}")?;
        }
        Ok(())
    }
}

/// `h_n = Σ_λ p_λ / z_λ`.
pub fn h(n: usize) -> SymFunc {
    let coeffs = partitions_of(n, PartitionFilter::All).into_iter().map(|l| {
        let c = z_rational(&l).recip();
        (l, c)
    });
    SymFunc { degree: n, coeffs: coeffs.collect() }
}

/// `e_n = Σ_λ (-1)^{n-ℓ(λ)} p_λ / z_λ`.
pub fn e(n: usize) -> SymFunc {
    let coeffs = partitions_of(n, PartitionFilter::All).into_iter().map(|l| {
        let mut c = z_rational(&l).recip();
        if (n - l.len()) % 2 == 1 {
            c = -c;
        }
        (l, c)
    });
    SymFunc { degree: n, coeffs: coeffs.collect() }
}

pub fn h_prod(lambda: &Partition) -> SymFunc {
    lambda.parts().iter().fold(SymFunc::one(), |acc, &k| acc.mul(&h(k)))
}

pub fn e_prod(lambda: &Partition) -> SymFunc {
    lambda.parts().iter().fold(SymFunc::one(), |acc, &k| acc.mul(&e(k)))
}

/// `Σ_λ c_λ · basis(λ)` over a coefficient map.
pub fn combine(
    degree: usize,
    coefficients: &BTreeMap<Partition, Rational>,
    mut basis: impl FnMut(&Partition) -> SymFunc,
) -> SymFunc {
    let mut out = SymFunc::zero(degree);
    for (lambda, c) in coefficients {
        let term = basis(lambda);
        assert_eq!(term.degree(), degree, "basis element {lambda} has the wrong degree");
        out += &term.scale(c);
    }
    out
}

//! `PF_n`, `SH_n = sh(PF_n)` and the naive `V`-expansion of `SH_n`.

use alloc::collections::BTreeMap;
use alloc::format;

use crate::counting::krew;
use crate::parking::enumerate_sorted_pf;
use crate::partition::{partitions_of, Partition, PartitionFilter};
use crate::quadratic::pow2;
use crate::{Error, Rational, Result, SymFunc};

use super::{combine, h_prod};

/// `Σ_λ Krew(λ) h_λ`.
pub fn pf_symfunc_from_kreweras(n: usize) -> SymFunc {
    let coeffs: BTreeMap<Partition, Rational> = partitions_of(n, PartitionFilter::All)
        .into_iter()
        .map(|l| {
            let c = Rational::from_integer(krew(&l).into());
            (l, c)
        })
        .collect();
    combine(n, &coeffs, h_prod)
}

/// `Σ_{p sorted} h_{λ(p)}`.
pub fn pf_symfunc_from_enumeration(n: usize) -> SymFunc {
    let mut counts: BTreeMap<Partition, Rational> = BTreeMap::new();
    for p in enumerate_sorted_pf(n) {
        *counts.entry(p.shape()).or_insert_with(|| Rational::from_integer(0.into())) +=
            Rational::from_integer(1.into());
    }
    combine(n, &counts, h_prod)
}

/// The parking function symmetric function, computed both from the Kreweras
/// closed form and by summing over sorted parking functions.
pub fn pf_symfunc(n: usize) -> Result<SymFunc> {
    let closed = pf_symfunc_from_kreweras(n);
    let summed = pf_symfunc_from_enumeration(n);
    if closed != summed {
        return Err(Error::Inconsistent(format!("PF_{n}: Kreweras form and enumeration disagree")));
    }
    Ok(closed)
}

pub fn sh_symfunc(n: usize) -> Result<SymFunc> {
    Ok(pf_symfunc(n)?.shift())
}

/// `λ ↦ 2^{ℓ(λ)} Krew(λ)` over all `λ ⊢ n`, so that `SH_n = Σ coeff · V_λ`.
pub fn naive_v_expansion(n: usize) -> BTreeMap<Partition, Rational> {
    partitions_of(n, PartitionFilter::All)
        .into_iter()
        .map(|l| {
            let c = Rational::from_integer(krew(&l).into()) * pow2(l.len() as i64);
            (l, c)
        })
        .collect()
}

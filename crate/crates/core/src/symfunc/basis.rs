//! Change of basis from `p` into `{V_λ : λ odd}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::partition::{partitions_of, Partition, PartitionFilter};
use crate::{Error, Rational, Result, SymFunc};

use super::{combine, PCache};

/// `Σ c_λ V_λ`.
pub fn v_combination(degree: usize, coefficients: &BTreeMap<Partition, Rational>) -> SymFunc {
    let mut cache = PCache::new();
    combine(degree, coefficients, |lambda| cache.v(lambda))
}

/// The unique coefficients `c_λ` (odd `λ`) with `f = Σ c_λ V_λ`.
///
/// The system `[V_λ in p_μ] c = f` over odd `λ, μ ⊢ n` is solved by exact
/// Gaussian elimination with full pivoting; rows and columns start in the
/// fixed partition order and the first nonzero entry of the remaining block
/// is taken as pivot. The result is re-expanded and compared with `f` before
/// it is returned.
pub fn expand_odd_v(f: &SymFunc) -> Result<BTreeMap<Partition, Rational>> {
    if let Some(bad) = f.coeffs().keys().find(|l| !l.is_odd()) {
        return Err(Error::NotSymP(format!("{bad}")));
    }
    let n = f.degree();
    let odd = partitions_of(n, PartitionFilter::Odd);
    let size = odd.len();
    let row_of: BTreeMap<&Partition, usize> = odd.iter().enumerate().map(|(i, l)| (l, i)).collect();

    let mut cache = PCache::new();
    // matrix[row μ][column λ] = coefficient of p_μ in V_λ
    let mut matrix: Vec<Vec<Rational>> = (0..size).map(|_| (0..size).map(|_| Rational::zero()).collect()).collect();
    for (col, lambda) in odd.iter().enumerate() {
        let v = cache.v(lambda);
        for (mu, c) in v.coeffs() {
            let row = *row_of.get(mu).ok_or_else(|| Error::Inconsistent(format!("V{lambda} has even term p{mu}")))?;
            matrix[row][col] = c.clone();
        }
    }
    let mut rhs: Vec<Rational> = odd.iter().map(|mu| f.coeff(mu)).collect();
    let mut columns: Vec<usize> = (0..size).collect();

    for step in 0..size {
        let pivot =
            (step..size).flat_map(|r| (step..size).map(move |c| (r, c))).find(|&(r, c)| !matrix[r][c].is_zero());
        let (pr, pc) = pivot.ok_or(Error::Singular)?;
        matrix.swap(step, pr);
        rhs.swap(step, pr);
        if pc != step {
            for row in matrix.iter_mut() {
                row.swap(step, pc);
            }
            columns.swap(step, pc);
        }
        let inv = matrix[step][step].recip();
        for x in &mut matrix[step][step..] {
            *x *= &inv;
        }
        rhs[step] *= &inv;
        for r in 0..size {
            if r == step || matrix[r][step].is_zero() {
                continue;
            }
            let factor = matrix[r][step].clone();
            let pivot_row = matrix[step].clone();
            for (x, p) in matrix[r][step..].iter_mut().zip(&pivot_row[step..]) {
                *x -= &factor * p;
            }
            let delta = &factor * &rhs[step];
            rhs[r] -= delta;
        }
    }

    let mut out = BTreeMap::new();
    for (k, value) in rhs.into_iter().enumerate() {
        if !value.is_zero() {
            out.insert(odd[columns[k]].clone(), value);
        }
    }
    if v_combination(n, &out) != *f {
        return Err(Error::Inconsistent(format!("V-expansion of degree {n} does not reconstruct its input")));
    }
    Ok(out)
}

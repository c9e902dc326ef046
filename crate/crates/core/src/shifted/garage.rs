//! Garages, garage equivalence and the map `φ̄` onto garages.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::parking::{entries_from_content, enumerate_sorted_naive, ParkingFunction, SortedNaiveShifted};
use crate::{Error, Result};

use super::path::{matching_path, path_matching, upsilon, Matching};

/// Garage test via the matching path: every matched right endpoint of `τ(L)`
/// has `υ = 0`.
pub fn is_garage(x: &SortedNaiveShifted) -> bool {
    let ups = upsilon(x);
    path_matching(&matching_path(x)).arcs().iter().all(|&(_, k)| ups[k - 1] == 0)
}

/// Garage test on the word `υ`: whenever `υ_i = υ_j = 2` (`i < j`) and the
/// letters strictly between them, read as `2 = (` and `0 = )`, form a
/// balanced word (every prefix has at least as many 2's as 0's and the whole
/// word has equally many), the signs agree: `σ̄_i = σ̄_j`.
pub fn is_garage_word(x: &SortedNaiveShifted) -> bool {
    let ups = upsilon(x);
    let sbar = x.sbar();
    for i in 0..ups.len() {
        if ups[i] != 2 {
            continue;
        }
        let mut depth = 0i64;
        for j in i + 1..ups.len() {
            if ups[j] == 2 && depth == 0 && sbar[i] != sbar[j] {
                return false;
            }
            match ups[j] {
                2 => depth += 1,
                0 => depth -= 1,
                _ => {}
            }
            if depth < 0 {
                break;
            }
        }
    }
    true
}

/// A sorted naive shifted parking function certified by [`is_garage`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Garage {
    inner: SortedNaiveShifted,
}

impl Garage {
    pub fn new(x: SortedNaiveShifted) -> Result<Self> {
        if !is_garage(&x) {
            return Err(Error::NotGarage(format!("{x}")));
        }
        Ok(Garage { inner: x })
    }

    pub fn as_naive(&self) -> &SortedNaiveShifted {
        &self.inner
    }

    pub fn into_naive(self) -> SortedNaiveShifted {
        self.inner
    }

    /// `τ(L)` of the underlying object.
    pub fn matching(&self) -> Matching {
        path_matching(&matching_path(&self.inner))
    }
}

impl fmt::Display for Garage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.inner.fmt(f)
    }
}

/// The unique garage equivalent to `x`: for every arc `(i, k)` of `τ(L)` all
/// cars at `i` and `k` are parked at `i`, and `σ̄_k` becomes `0`.
pub fn garage_of(x: &SortedNaiveShifted) -> Garage {
    let tau = path_matching(&matching_path(x));
    let mut alpha = x.content();
    let mut sbar = x.sbar().to_vec();
    for &(i, k) in tau.arcs() {
        alpha[i - 1] += alpha[k - 1];
        alpha[k - 1] = 0;
        sbar[k - 1] = 0;
    }
    let p = ParkingFunction::new_unchecked(entries_from_content(&alpha));
    let g = SortedNaiveShifted::new_unchecked(p, sbar);
    debug_assert!(is_garage(&g));
    Garage { inner: g }
}

/// Every sorted naive shifted parking function garage equivalent to `g`.
///
/// For an arc `(i, k)` carrying `2ℓ` cars, the splits `(2j, 2ℓ - 2j)` for
/// `j = ℓ, …, 1` are listed in that order, with `σ̄_k = -σ̄_i` whenever
/// `k` is occupied. Arcs are taken by increasing left endpoint and the last
/// arc varies fastest.
pub fn garage_class(g: &Garage) -> Vec<SortedNaiveShifted> {
    let base = g.as_naive();
    let tau = g.matching();
    let alpha = base.content();
    let arcs: Vec<(usize, usize, usize)> = tau.arcs().iter().map(|&(i, k)| (i, k, alpha[i - 1] / 2)).collect();
    let mut out = Vec::new();
    let mut alpha_work = alpha.clone();
    let mut sbar_work = base.sbar().to_vec();
    split_arcs(&arcs, 0, &mut alpha_work, &mut sbar_work, &mut |alpha, sbar| {
        let p = ParkingFunction::new_unchecked(entries_from_content(alpha));
        out.push(SortedNaiveShifted::new_unchecked(p, sbar.to_vec()));
    });
    out
}

fn split_arcs(
    arcs: &[(usize, usize, usize)],
    at: usize,
    alpha: &mut [usize],
    sbar: &mut [i8],
    emit: &mut impl FnMut(&[usize], &[i8]),
) {
    let Some(&(i, k, ell)) = arcs.get(at) else {
        emit(alpha, sbar);
        return;
    };
    for j in (1..=ell).rev() {
        alpha[i - 1] = 2 * j;
        alpha[k - 1] = 2 * (ell - j);
        sbar[k - 1] = if j == ell { 0 } else { -sbar[i - 1] };
        split_arcs(arcs, at + 1, alpha, sbar, emit);
    }
}

/// Garages of size `n`, in the order of [`enumerate_sorted_naive`].
pub fn enumerate_garages(n: usize) -> impl Iterator<Item = Garage> {
    enumerate_sorted_naive(n).filter(is_garage).map(|inner| Garage { inner })
}

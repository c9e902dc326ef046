//! Odd shifted parking functions, the map `φ_o` onto garages and the
//! bijection with sorted naive shifted parking functions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::parking::{
    check_reduced_signs, entries_from_content, enumerate_sorted_pf, reduced_signs, write_tuple, ParkingFunction,
    SignVector, SortedNaiveShifted,
};
use crate::partition::Partition;
use crate::{Error, Result};

use super::garage::Garage;
use super::path::{matching_path, path_matching, Matching};

/// An odd shifted parking function `(p, σ, τ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OddShifted {
    p: ParkingFunction,
    sigma: SignVector,
    tau: Matching,
}

impl OddShifted {
    pub fn new(p: ParkingFunction, sigma: SignVector, tau: Matching) -> Result<Self> {
        if !is_odd_shifted(&p, &sigma, &tau)? {
            return Err(Error::NotOddShifted(format!("({p}, {:?}, {tau})", sigma.signs())));
        }
        Ok(OddShifted { p, sigma, tau })
    }

    pub fn p(&self) -> &ParkingFunction {
        &self.p
    }

    pub fn sigma(&self) -> &SignVector {
        &self.sigma
    }

    pub fn tau(&self) -> &Matching {
        &self.tau
    }

    pub fn sort(&self) -> SortedOddShifted {
        SortedOddShifted {
            p: self.p.sorted(),
            sbar: reduced_signs(self.p.entries(), self.sigma.signs()),
            tau: self.tau.clone(),
        }
    }
}

/// Checks the three conditions on `(content, σ̄, τ)` after validating that
/// every endpoint of `τ` is a value of `p`. The shape must be odd.
fn conditions_hold(alpha: &[usize], sbar: &[i8], tau: &Matching) -> Result<bool> {
    for &(a, b) in tau.arcs() {
        for v in [a, b] {
            if v > alpha.len() || alpha[v - 1] == 0 {
                return Err(Error::MalformedMatching(format!("endpoint {v} of {tau} is not a value")));
            }
        }
    }
    if alpha.iter().any(|&a| a % 2 == 0 && a > 0) {
        return Ok(false);
    }
    let arcs = tau.arcs();
    for &(a, b) in arcs {
        if sbar[a - 1] != -sbar[b - 1] {
            return Ok(false);
        }
        if alpha[a..b - 1].contains(&0) {
            return Ok(false);
        }
    }
    for &(a, d) in arcs {
        for &(b, c) in arcs {
            if a < b && c < d && sbar[a - 1] != sbar[b - 1] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The defining predicate of odd shifted parking functions. `p` must be a
/// parking function and `σ` a sign vector of the same length; a matching with
/// an endpoint that is not a value of `p` is an error.
pub fn is_odd_shifted(p: &ParkingFunction, sigma: &SignVector, tau: &Matching) -> Result<bool> {
    if p.len() != sigma.len() {
        return Err(Error::InvalidSigns(format!("length {} for a parking function of size {}", sigma.len(), p.len())));
    }
    conditions_hold(&p.content(), &reduced_signs(p.entries(), sigma.signs()), tau)
}

/// A sorted odd shifted parking function `(p, σ̄, τ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SortedOddShifted {
    p: ParkingFunction,
    sbar: Vec<i8>,
    tau: Matching,
}

impl SortedOddShifted {
    pub fn new(p: ParkingFunction, sbar: Vec<i8>, tau: Matching) -> Result<Self> {
        if !p.is_sorted() {
            return Err(Error::NotParking(format!("{p} is not sorted")));
        }
        check_reduced_signs(&p, &sbar)?;
        if !conditions_hold(&p.content(), &sbar, &tau)? {
            return Err(Error::NotOddShifted(format!("({p}, {sbar:?}, {tau})")));
        }
        Ok(SortedOddShifted { p, sbar, tau })
    }

    pub fn from_parts(entries: Vec<usize>, sbar: Vec<i8>, arcs: Vec<(usize, usize)>) -> Result<Self> {
        Self::new(ParkingFunction::new(entries)?, sbar, Matching::new(arcs)?)
    }

    fn from_content(alpha: &[usize], sbar: Vec<i8>, tau: Matching) -> Self {
        let x = SortedOddShifted { p: ParkingFunction::new_unchecked(entries_from_content(alpha)), sbar, tau };
        debug_assert!(conditions_hold(alpha, &x.sbar, &x.tau) == Ok(true), "{x}");
        x
    }

    pub fn p(&self) -> &ParkingFunction {
        &self.p
    }

    pub fn sbar(&self) -> &[i8] {
        &self.sbar
    }

    pub fn tau(&self) -> &Matching {
        &self.tau
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    pub fn content(&self) -> Vec<usize> {
        self.p.content()
    }

    pub fn shape(&self) -> Partition {
        self.p.shape()
    }
}

impl fmt::Display for SortedOddShifted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_tuple(f, self.p.entries())?;
        f.write_str(",")?;
        write_tuple(f, &self.sbar)?;
        write!(f, ",{})", self.tau)
    }
}

/// Noncrossing matchings on `[lo, hi]` whose arcs span only occupied values.
fn spanning_matchings(alpha: &[usize], lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
    if lo > hi {
        return vec![Vec::new()];
    }
    if alpha[lo - 1] == 0 {
        return spanning_matchings(alpha, lo + 1, hi);
    }
    let mut out = spanning_matchings(alpha, lo + 1, hi);
    for c in lo + 1..=hi {
        if alpha[c - 1] == 0 {
            break;
        }
        let inner = spanning_matchings(alpha, lo + 1, c - 1);
        let outer = spanning_matchings(alpha, c + 1, hi);
        for a in &inner {
            for b in &outer {
                let mut arcs = Vec::with_capacity(1 + a.len() + b.len());
                arcs.push((lo, c));
                arcs.extend_from_slice(a);
                arcs.extend_from_slice(b);
                out.push(arcs);
            }
        }
    }
    out
}

/// All sign vectors `σ̄` compatible with `τ`, by increasing value: a right
/// endpoint is forced to the opposite of its partner, a left endpoint nested
/// in an arc copies the left endpoint of the innermost enclosing arc, and
/// every other occupied value is free (`+` listed first).
fn compatible_signs(alpha: &[usize], tau: &Matching) -> Vec<Vec<i8>> {
    let n = alpha.len();
    let mut out = vec![vec![0i8; n]];
    for v in 1..=n {
        if alpha[v - 1] == 0 {
            continue;
        }
        let forced = if let Some(&(a, _)) = tau.arcs().iter().find(|&&(_, b)| b == v) {
            Some((a, -1))
        } else if tau.is_left_endpoint(v) {
            tau.arcs().iter().filter(|&&(a, d)| a < v && v < d).map(|&(a, _)| a).max().map(|a| (a, 1))
        } else {
            None
        };
        match forced {
            Some((a, factor)) => {
                for s in out.iter_mut() {
                    s[v - 1] = factor * s[a - 1];
                }
            }
            None => {
                out = out
                    .into_iter()
                    .flat_map(|s| {
                        let mut minus = s.clone();
                        let mut plus = s;
                        plus[v - 1] = 1;
                        minus[v - 1] = -1;
                        [plus, minus]
                    })
                    .collect();
            }
        }
    }
    out
}

/// Sorted odd shifted parking functions of size `n`, built directly: sorted
/// parking functions of odd shape, then matchings on runs of occupied values,
/// then the compatible reduced sign vectors.
pub fn enumerate_sorted_odd(n: usize) -> impl Iterator<Item = SortedOddShifted> {
    enumerate_sorted_pf(n).filter(|p| p.shape().is_odd()).flat_map(move |p| {
        let alpha = p.content();
        spanning_matchings(&alpha, 1, n).into_iter().flat_map(move |arcs| {
            let tau = Matching::from_sorted_unchecked(sorted(arcs));
            let p = p.clone();
            compatible_signs(&alpha, &tau).into_iter().map(move |sbar| SortedOddShifted {
                p: p.clone(),
                sbar,
                tau: tau.clone(),
            })
        })
    })
}

fn sorted(mut arcs: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    arcs.sort_unstable();
    arcs
}

/// `φ_o`: every right endpoint `b` of an arc `(a, b)` is rewritten to `a`.
pub fn phi_o(x: &SortedOddShifted) -> Garage {
    let mut alpha = x.content();
    let mut sbar = x.sbar.clone();
    for &(a, b) in x.tau.arcs() {
        alpha[a - 1] += alpha[b - 1];
        alpha[b - 1] = 0;
        sbar[b - 1] = 0;
    }
    let p = ParkingFunction::new_unchecked(entries_from_content(&alpha));
    Garage::new(SortedNaiveShifted::new_unchecked(p, sbar)).expect("φ_o lands in garages")
}

/// The fiber of `φ_o` over `g`: an arc `(i, k)` of `τ(L(g))` carrying `2m`
/// cars splits as `(2j - 1, 2(m - j) + 1)` for `j = m, …, 1`, with
/// `σ̄_k = -σ̄_i`. Arcs are taken by increasing left endpoint and the last arc
/// varies fastest.
pub fn odd_class(g: &Garage) -> Vec<SortedOddShifted> {
    let base = g.as_naive();
    let tau = g.matching();
    let mut alpha = base.content();
    let mut sbar = base.sbar().to_vec();
    let arcs: Vec<(usize, usize, usize)> = tau.arcs().iter().map(|&(i, k)| (i, k, alpha[i - 1] / 2)).collect();
    for &(i, k, _) in &arcs {
        sbar[k - 1] = -sbar[i - 1];
    }
    let mut out = Vec::new();
    odd_splits(&arcs, 0, &mut alpha, &mut |alpha| {
        out.push(SortedOddShifted::from_content(alpha, sbar.clone(), tau.clone()));
    });
    out
}

fn odd_splits(arcs: &[(usize, usize, usize)], at: usize, alpha: &mut [usize], emit: &mut impl FnMut(&[usize])) {
    let Some(&(i, k, m)) = arcs.get(at) else {
        emit(alpha);
        return;
    };
    for j in (1..=m).rev() {
        alpha[i - 1] = 2 * j - 1;
        alpha[k - 1] = 2 * (m - j) + 1;
        odd_splits(arcs, at + 1, alpha, emit);
    }
}

/// For each arc `(i, j)` of `τ(L(x))`, one car moves from `i` to `j` and
/// `σ̄_j` becomes `-σ̄_i`; the matching of the image is `τ(L(x))`.
pub fn naive_to_odd(x: &SortedNaiveShifted) -> SortedOddShifted {
    let tau = path_matching(&matching_path(x));
    let mut alpha = x.content();
    let mut sbar = x.sbar().to_vec();
    for &(i, j) in tau.arcs() {
        alpha[i - 1] -= 1;
        alpha[j - 1] += 1;
        sbar[j - 1] = -sbar[i - 1];
    }
    SortedOddShifted::from_content(&alpha, sbar, tau)
}

/// Inverse of [`naive_to_odd`].
pub fn odd_to_naive(x: &SortedOddShifted) -> SortedNaiveShifted {
    let mut alpha = x.content();
    let mut sbar = x.sbar.clone();
    for &(i, j) in x.tau.arcs() {
        alpha[i - 1] += 1;
        alpha[j - 1] -= 1;
        if alpha[j - 1] == 0 {
            sbar[j - 1] = 0;
        }
    }
    SortedNaiveShifted::new_unchecked(ParkingFunction::new_unchecked(entries_from_content(&alpha)), sbar)
}

/// `area(p) + Σ_{(i, j) ∈ τ} (j - i)`.
pub fn area_o(x: &SortedOddShifted) -> usize {
    x.p.area() + x.tau.arcs().iter().map(|&(i, j)| j - i).sum::<usize>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::schroeder;
    use crate::parking::{enumerate_pf, enumerate_sorted_naive, is_parking};
    use crate::shifted::{enumerate_garages, garage_class};
    use alloc::collections::{BTreeMap, BTreeSet};

    fn odd(entries: &[usize], sbar: &[i8], arcs: &[(usize, usize)]) -> SortedOddShifted {
        SortedOddShifted::from_parts(entries.to_vec(), sbar.to_vec(), arcs.to_vec()).unwrap()
    }

    fn naive(entries: &[usize], sbar: &[i8]) -> SortedNaiveShifted {
        SortedNaiveShifted::from_parts(entries.to_vec(), sbar.to_vec()).unwrap()
    }

    fn example_garage() -> Garage {
        Garage::new(naive(&[1, 1, 1, 1, 2, 4, 4, 4, 4, 5, 5, 6], &[-1, 1, 0, 1, 1, -1, 0, 0, 0, 0, 0, 0])).unwrap()
    }

    /// Every set of pairwise disjoint pairs from `values`, crossing or not.
    fn all_pairings(values: &[usize]) -> Vec<Vec<(usize, usize)>> {
        let Some((&first, rest)) = values.split_first() else {
            return vec![Vec::new()];
        };
        let mut out = all_pairings(rest);
        for (idx, &other) in rest.iter().enumerate() {
            let mut remaining = rest.to_vec();
            remaining.remove(idx);
            for mut arcs in all_pairings(&remaining) {
                arcs.push((first, other));
                out.push(arcs);
            }
        }
        out
    }

    fn all_sign_vectors(alpha: &[usize]) -> Vec<Vec<i8>> {
        let mut out = vec![Vec::new()];
        for &a in alpha {
            let choices: &[i8] = if a == 0 { &[0] } else { &[1, -1] };
            out = out
                .into_iter()
                .flat_map(|s| {
                    choices.iter().map(move |&c| {
                        let mut t = s.clone();
                        t.push(c);
                        t
                    })
                })
                .collect();
        }
        out
    }

    /// Filter every sorted triple through the predicate.
    fn brute_sorted_odd(n: usize) -> BTreeSet<SortedOddShifted> {
        let mut out = BTreeSet::new();
        for p in enumerate_sorted_pf(n) {
            let alpha = p.content();
            let occupied: Vec<usize> = (1..=n).filter(|&v| alpha[v - 1] > 0).collect();
            for arcs in all_pairings(&occupied) {
                let Ok(tau) = Matching::new(arcs) else { continue };
                for sbar in all_sign_vectors(&alpha) {
                    if conditions_hold(&alpha, &sbar, &tau).unwrap() {
                        out.insert(SortedOddShifted { p: p.clone(), sbar, tau: tau.clone() });
                    }
                }
            }
        }
        out
    }

    #[test]
    fn size_two() {
        let all: Vec<_> = enumerate_sorted_odd(2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().filter(|x| x.tau().is_empty()).count(), 4);
        assert!(all.iter().all(|x| x.p().entries() == [1, 2]));
        assert!(SortedOddShifted::from_parts(vec![1, 2], vec![1, 1], vec![(1, 2)]).is_err());
        let p = ParkingFunction::new(vec![2, 1]).unwrap();
        let tau = Matching::new(vec![(1, 2)]).unwrap();
        assert!(!is_odd_shifted(&p, &SignVector::new(vec![1, 1]).unwrap(), &tau).unwrap());
        assert!(is_odd_shifted(&p, &SignVector::new(vec![1, -1]).unwrap(), &tau).unwrap());
    }

    #[test]
    fn malformed_matchings_are_errors() {
        let p = ParkingFunction::new(vec![1, 1, 1]).unwrap();
        let tau = Matching::new(vec![(1, 2)]).unwrap();
        assert!(is_odd_shifted(&p, &SignVector::all_plus(3), &tau).is_err());
        assert!(Matching::new(vec![(1, 3), (2, 4)]).is_err());
    }

    #[test]
    fn counts_are_schroeder_numbers() {
        for n in 1..=7 {
            assert_eq!(enumerate_sorted_odd(n).count(), usize::try_from(schroeder(n)).unwrap(), "n = {n}");
        }
        assert_eq!(enumerate_sorted_odd(5).count(), 394);
    }

    #[test]
    fn direct_enumeration_matches_filtering() {
        for n in 1..=6 {
            let built: Vec<_> = enumerate_sorted_odd(n).collect();
            let set: BTreeSet<_> = built.iter().cloned().collect();
            assert_eq!(set.len(), built.len(), "duplicates at n = {n}");
            assert_eq!(set, brute_sorted_odd(n), "n = {n}");
        }
    }

    #[test]
    fn sorting_all_triples_gives_the_sorted_set() {
        for n in 1..=4 {
            let mut image = BTreeSet::new();
            for p in enumerate_pf(n) {
                let alpha = p.content();
                let occupied: Vec<usize> = (1..=n).filter(|&v| alpha[v - 1] > 0).collect();
                for arcs in all_pairings(&occupied) {
                    let Ok(tau) = Matching::new(arcs) else { continue };
                    for mask in 0u32..(1 << n) {
                        let signs = (0..n).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect();
                        let sigma = SignVector::new(signs).unwrap();
                        if let Ok(x) = OddShifted::new(p.clone(), sigma, tau.clone()) {
                            image.insert(x.sort());
                        }
                    }
                }
            }
            assert_eq!(image, enumerate_sorted_odd(n).collect::<BTreeSet<_>>(), "n = {n}");
        }
    }

    #[test]
    fn fiber_over_the_running_example() {
        let g = example_garage();
        let fiber = odd_class(&g);
        assert_eq!(fiber.len(), 4);
        let entries: Vec<Vec<usize>> = fiber.iter().map(|x| x.p().entries().to_vec()).collect();
        assert_eq!(
            entries,
            vec![
                vec![1, 1, 1, 2, 3, 4, 4, 4, 5, 6, 7, 8],
                vec![1, 1, 1, 2, 3, 4, 5, 6, 7, 8, 8, 8],
                vec![1, 2, 3, 3, 3, 4, 4, 4, 5, 6, 7, 8],
                vec![1, 2, 3, 3, 3, 4, 5, 6, 7, 8, 8, 8],
            ]
        );
        for x in &fiber {
            assert_eq!(x.shape().parts(), &[3, 3, 1, 1, 1, 1, 1, 1]);
            assert_eq!(x.tau().arcs(), &[(1, 3), (4, 8), (5, 7)]);
            // right endpoints carry the opposite sign of their partner
            assert_eq!((x.sbar()[2], x.sbar()[6], x.sbar()[7]), (1, -1, -1));
            assert_eq!(phi_o(x), g);
        }
        let first = odd(
            &[1, 1, 1, 2, 3, 4, 4, 4, 5, 6, 7, 8],
            &[-1, 1, 1, 1, 1, -1, -1, -1, 0, 0, 0, 0],
            &[(1, 3), (4, 8), (5, 7)],
        );
        assert_eq!(fiber[0], first);
    }

    #[test]
    fn small_fibers() {
        let g = Garage::new(naive(&[1, 1, 1, 1], &[1, 0, 0, 0])).unwrap();
        assert_eq!(
            odd_class(&g),
            vec![odd(&[1, 1, 1, 2], &[1, -1, 0, 0], &[(1, 2)]), odd(&[1, 2, 2, 2], &[1, -1, 0, 0], &[(1, 2)])]
        );
        let g = Garage::new(naive(&[1, 2, 2, 2], &[1, -1, 0, 0])).unwrap();
        let fiber = odd_class(&g);
        assert_eq!(fiber.len(), 1);
        assert!(fiber[0].tau().is_empty());
        let x = odd(&[1, 2, 3], &[1, -1, 1], &[]);
        assert_eq!(phi_o(&x).as_naive(), &naive(&[1, 2, 3], &[1, -1, 1]));
    }

    #[test]
    fn fibers_partition_sorted_odd() {
        for n in 1..=7 {
            let mut seen = BTreeSet::new();
            for g in enumerate_garages(n) {
                for x in odd_class(&g) {
                    assert_eq!(phi_o(&x), g);
                    assert!(seen.insert(x));
                }
            }
            assert_eq!(seen, enumerate_sorted_odd(n).collect::<BTreeSet<_>>(), "n = {n}");
        }
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(naive_to_odd(&naive(&[1, 1], &[1, 0])), odd(&[1, 2], &[1, -1], &[(1, 2)]));
        let x = naive(&[1, 2, 2], &[1, -1, 0]);
        assert_eq!(naive_to_odd(&x), odd(&[1, 2, 3], &[1, -1, 1], &[(2, 3)]));
        let x = naive(&[1, 2, 3], &[-1, 1, 1]);
        assert_eq!(naive_to_odd(&x), odd(&[1, 2, 3], &[-1, 1, 1], &[]));
        assert_eq!(area_o(&odd(&[1, 2], &[1, -1], &[(1, 2)])), 1);
    }

    #[test]
    fn bijection_is_exhaustive() {
        for n in 1..=7 {
            let mut images = BTreeSet::new();
            for x in enumerate_sorted_naive(n) {
                let y = naive_to_odd(&x);
                assert!(is_parking(y.p().entries()).unwrap());
                assert_eq!(odd_to_naive(&y), x);
                assert_eq!(y.tau(), &path_matching(&matching_path(&x)));
                assert_eq!(area_o(&y), x.area());
                images.insert(y);
            }
            assert_eq!(images, enumerate_sorted_odd(n).collect::<BTreeSet<_>>(), "n = {n}");
        }
    }

    #[test]
    fn area_distributions_agree() {
        for n in 1..=6 {
            let mut naive_dist: BTreeMap<usize, usize> = BTreeMap::new();
            let mut odd_dist: BTreeMap<usize, usize> = BTreeMap::new();
            for x in enumerate_sorted_naive(n) {
                *naive_dist.entry(x.area()).or_default() += 1;
            }
            for y in enumerate_sorted_odd(n) {
                *odd_dist.entry(area_o(&y)).or_default() += 1;
            }
            assert_eq!(naive_dist, odd_dist);
        }
    }

    #[test]
    fn garage_and_odd_fibers_share_their_garage() {
        for n in 1..=5 {
            for g in enumerate_garages(n) {
                let class = garage_class(&g);
                let fiber = odd_class(&g);
                let tau = g.matching();
                let expected: usize = tau.arcs().iter().map(|&(i, _)| g.as_naive().content()[i - 1] / 2).product();
                assert_eq!(class.len(), expected);
                assert_eq!(fiber.len(), expected);
            }
        }
    }
}

//! Parking functions, naive shifted parking functions and Schröder paths.
//!
//! Values are 1-based as in the usual definition; a parking function of size
//! `n` takes values in `1..=n`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{Partition, Permutation};
use crate::{Error, Result};

/// True iff the `i`-th smallest entry is at most `i` for every `i`.
pub fn is_parking(entries: &[usize]) -> Result<bool> {
    if entries.contains(&0) {
        return Err(Error::NonPositiveEntry);
    }
    let mut sorted = entries.to_vec();
    sorted.sort_unstable();
    Ok(sorted.iter().enumerate().all(|(i, &v)| v <= i + 1))
}

/// A parking function, stored as its entries in the given order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ParkingFunction {
    entries: Vec<usize>,
}

impl ParkingFunction {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if !is_parking(&entries)? {
            return Err(Error::NotParking(format!("{entries:?}")));
        }
        Ok(ParkingFunction { entries })
    }

    pub(crate) fn new_unchecked(entries: Vec<usize>) -> Self {
        debug_assert_eq!(is_parking(&entries), Ok(true), "{entries:?}");
        ParkingFunction { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_sorted(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn sorted(&self) -> ParkingFunction {
        let mut entries = self.entries.clone();
        entries.sort_unstable();
        ParkingFunction { entries }
    }

    /// `α(p)`: `α_k` is the number of entries equal to `k`, for `k = 1..=n`.
    pub fn content(&self) -> Vec<usize> {
        content_of(&self.entries)
    }

    /// `λ(p)`: the nonzero content values sorted decreasingly.
    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.content())
    }

    /// `area(p) = binom(n+1, 2) - Σ p_i`.
    pub fn area(&self) -> usize {
        area(&self.entries)
    }

    /// `w · p = (p_{w(1)}, …, p_{w(n)})`.
    pub fn act(&self, w: &Permutation) -> ParkingFunction {
        ParkingFunction { entries: w.act_on(&self.entries) }
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.entries)
    }
}

pub(crate) fn write_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    f.write_str("(")?;
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

pub(crate) fn content_of(entries: &[usize]) -> Vec<usize> {
    let mut alpha = vec![0; entries.len()];
    for &v in entries {
        alpha[v - 1] += 1;
    }
    alpha
}

/// Sorted entries from a content vector.
pub(crate) fn entries_from_content(alpha: &[usize]) -> Vec<usize> {
    alpha.iter().enumerate().flat_map(|(k, &m)| core::iter::repeat_n(k + 1, m)).collect()
}

pub fn area(entries: &[usize]) -> usize {
    let n = entries.len();
    n * (n + 1) / 2 - entries.iter().sum::<usize>()
}

pub fn sort_pf(p: &ParkingFunction) -> ParkingFunction {
    p.sorted()
}

pub fn content(p: &ParkingFunction) -> Vec<usize> {
    p.content()
}

pub fn shape(p: &ParkingFunction) -> Partition {
    p.shape()
}

/// Sorted parking functions of size `n` in lexicographic order.
pub fn enumerate_sorted_pf(n: usize) -> SortedPfIter {
    SortedPfIter { current: if n == 0 { None } else { Some(vec![1; n]) } }
}

pub struct SortedPfIter {
    current: Option<Vec<usize>>,
}

impl Iterator for SortedPfIter {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        let word = self.current.take()?;
        // Rightmost position that can grow while staying at most its index;
        // everything after it resets to the smallest weakly increasing tail.
        let mut next = word.clone();
        if let Some(i) = (0..next.len()).rev().find(|&i| next[i] < i + 1) {
            next[i] += 1;
            let v = next[i];
            for x in next.iter_mut().skip(i + 1) {
                *x = v;
            }
            self.current = Some(next);
        }
        Some(ParkingFunction { entries: word })
    }
}

/// All parking functions of size `n` in lexicographic order.
///
/// Words are grown left to right and a prefix is extended only while it can
/// still be completed to a parking function, so no word outside `Pf(n)` is
/// ever materialized.
pub fn enumerate_pf(n: usize) -> PfIter {
    let mut iter = PfIter { n, word: Vec::with_capacity(n), done: n == 0 };
    if !iter.done {
        iter.complete_from(0);
    }
    iter
}

pub struct PfIter {
    n: usize,
    word: Vec<usize>,
    done: bool,
}

impl PfIter {
    /// A prefix is completable iff for every `k`, the entries `≤ k` plus the
    /// free slots reach `k`.
    fn completable(&self) -> bool {
        let n = self.n;
        let free = n - self.word.len();
        let mut counts = vec![0usize; n + 1];
        for &v in &self.word {
            counts[v] += 1;
        }
        let mut below = 0;
        for (k, &c) in counts.iter().enumerate().skip(1) {
            below += c;
            if below + free < k {
                return false;
            }
        }
        true
    }

    /// Truncates to `len` and fills greedily with the smallest feasible values.
    fn complete_from(&mut self, len: usize) {
        self.word.truncate(len);
        while self.word.len() < self.n {
            self.word.push(1);
            while !self.completable() {
                *self.word.last_mut().expect("nonempty") += 1;
            }
        }
    }
}

impl Iterator for PfIter {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        if self.done {
            return None;
        }
        let out = ParkingFunction { entries: self.word.clone() };
        let n = self.n;
        let mut advanced = false;
        for i in (0..n).rev() {
            self.word.truncate(i + 1);
            while self.word[i] < n {
                self.word[i] += 1;
                if self.completable() {
                    advanced = true;
                    break;
                }
            }
            if advanced {
                self.complete_from(i + 1);
                break;
            }
        }
        if !advanced {
            self.done = true;
        }
        Some(out)
    }
}

/// A vector of `±1` signs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SignVector {
    signs: Vec<i8>,
}

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidSigns(format!("entry {bad} is not ±1")));
        }
        Ok(SignVector { signs })
    }

    pub fn all_plus(n: usize) -> Self {
        SignVector { signs: vec![1; n] }
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// 0-based positions carrying `-1`.
    pub fn minus_positions(&self) -> Vec<usize> {
        self.signs.iter().enumerate().filter(|(_, &s)| s == -1).map(|(i, _)| i).collect()
    }
}

/// A naive shifted parking function `(p, σ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct NaiveShifted {
    pub p: ParkingFunction,
    pub sigma: SignVector,
}

impl NaiveShifted {
    pub fn new(p: ParkingFunction, sigma: SignVector) -> Result<Self> {
        if p.len() != sigma.len() {
            return Err(Error::InvalidSigns(format!(
                "length {} for a parking function of size {}",
                sigma.len(),
                p.len()
            )));
        }
        Ok(NaiveShifted { p, sigma })
    }

    /// `w · (p, σ) = (p ∘ w, σ ∘ w)`.
    pub fn act(&self, w: &Permutation) -> NaiveShifted {
        NaiveShifted { p: self.p.act(w), sigma: SignVector { signs: w.act_on(&self.sigma.signs) } }
    }

    pub fn sort(&self) -> SortedNaiveShifted {
        sort_naive(&self.p, &self.sigma).expect("lengths agree by construction")
    }
}

/// Reduced signs: `σ̄_k = ∏_{p_i = k} σ_i` when `α_k > 0`, else `0`.
pub(crate) fn reduced_signs(entries: &[usize], sigma: &[i8]) -> Vec<i8> {
    let mut sbar = vec![0i8; entries.len()];
    for (&v, &s) in entries.iter().zip(sigma) {
        let slot = &mut sbar[v - 1];
        *slot = if *slot == 0 { s } else { *slot * s };
    }
    sbar
}

pub fn sort_naive(p: &ParkingFunction, sigma: &SignVector) -> Result<SortedNaiveShifted> {
    if p.len() != sigma.len() {
        return Err(Error::InvalidSigns(format!("length {} for a parking function of size {}", sigma.len(), p.len())));
    }
    Ok(SortedNaiveShifted { p: p.sorted(), sbar: reduced_signs(p.entries(), sigma.signs()) })
}

/// A sorted naive shifted parking function `(p, σ̄)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SortedNaiveShifted {
    p: ParkingFunction,
    sbar: Vec<i8>,
}

impl SortedNaiveShifted {
    /// Validates that `p` is sorted and `σ̄_k = 0` exactly when `α_k = 0`.
    pub fn new(p: ParkingFunction, sbar: Vec<i8>) -> Result<Self> {
        if !p.is_sorted() {
            return Err(Error::NotParking(format!("{p} is not sorted")));
        }
        check_reduced_signs(&p, &sbar)?;
        Ok(SortedNaiveShifted { p, sbar })
    }

    pub fn from_parts(entries: Vec<usize>, sbar: Vec<i8>) -> Result<Self> {
        Self::new(ParkingFunction::new(entries)?, sbar)
    }

    pub(crate) fn new_unchecked(p: ParkingFunction, sbar: Vec<i8>) -> Self {
        debug_assert!(check_reduced_signs(&p, &sbar).is_ok());
        SortedNaiveShifted { p, sbar }
    }

    pub fn p(&self) -> &ParkingFunction {
        &self.p
    }

    pub fn sbar(&self) -> &[i8] {
        &self.sbar
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

    pub fn area(&self) -> usize {
        self.p.area()
    }

    /// Every `(p', σ')` whose sort is `self`: distinct rearrangements of `p`
    /// paired with sign vectors of the prescribed per-value parity.
    pub fn class_members(&self) -> Vec<NaiveShifted> {
        let n = self.len();
        let mut out = Vec::new();
        for arrangement in distinct_permutations(self.p.entries()) {
            // positions of each value in this arrangement
            let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (pos, &v) in arrangement.iter().enumerate() {
                fibers[v - 1].push(pos);
            }
            let mut sigma = vec![1i8; n];
            fill_signs(&fibers, &self.sbar, 0, &mut sigma, &mut |s| {
                out.push(NaiveShifted {
                    p: ParkingFunction { entries: arrangement.clone() },
                    sigma: SignVector { signs: s.to_vec() },
                });
            });
        }
        out
    }
}

pub(crate) fn check_reduced_signs(p: &ParkingFunction, sbar: &[i8]) -> Result<()> {
    if sbar.len() != p.len() {
        return Err(Error::InvalidSigns(format!("length {} for size {}", sbar.len(), p.len())));
    }
    for (k, (&a, &s)) in p.content().iter().zip(sbar).enumerate() {
        let ok = if a == 0 { s == 0 } else { s == 1 || s == -1 };
        if !ok {
            return Err(Error::InvalidSigns(format!("σ̄_{} = {s} with α = {a}", k + 1)));
        }
    }
    Ok(())
}

fn fill_signs(fibers: &[Vec<usize>], sbar: &[i8], value: usize, sigma: &mut [i8], emit: &mut impl FnMut(&[i8])) {
    if value == fibers.len() {
        emit(sigma);
        return;
    }
    let fiber = &fibers[value];
    if fiber.is_empty() {
        fill_signs(fibers, sbar, value + 1, sigma, emit);
        return;
    }
    let m = fiber.len();
    for mask in 0u32..(1 << m) {
        let parity = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        if parity != sbar[value] {
            continue;
        }
        for (bit, &pos) in fiber.iter().enumerate() {
            sigma[pos] = if mask >> bit & 1 == 1 { -1 } else { 1 };
        }
        fill_signs(fibers, sbar, value + 1, sigma, emit);
    }
}

/// Distinct rearrangements of a multiset in lexicographic order.
pub(crate) fn distinct_permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut current = items.to_vec();
    current.sort_unstable();
    let mut out = vec![current.clone()];
    loop {
        let Some(i) = (0..current.len().saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            return out;
        };
        let j = (i + 1..current.len()).rev().find(|&j| current[j] > current[i]).expect("exists");
        current.swap(i, j);
        current[i + 1..].reverse();
        out.push(current.clone());
    }
}

impl fmt::Display for SortedNaiveShifted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_tuple(f, self.p.entries())?;
        f.write_str(",")?;
        write_tuple(f, &self.sbar)?;
        f.write_str(")")
    }
}

/// Sorted naive shifted parking functions of size `n`: each sorted parking
/// function with all `2^{ℓ(λ(p))}` sign patterns on its occupied values.
pub fn enumerate_sorted_naive(n: usize) -> impl Iterator<Item = SortedNaiveShifted> {
    enumerate_sorted_pf(n).flat_map(|p| {
        let occupied: Vec<usize> = p.content().iter().enumerate().filter(|(_, &a)| a > 0).map(|(k, _)| k).collect();
        let len = p.len();
        (0u32..(1 << occupied.len())).map(move |mask| {
            let mut sbar = vec![0i8; len];
            for (bit, &k) in occupied.iter().enumerate() {
                sbar[k] = if mask >> bit & 1 == 1 { -1 } else { 1 };
            }
            SortedNaiveShifted { p: p.clone(), sbar }
        })
    })
}

/// One step of a Schröder path.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum SchroederStep {
    /// `(0, 1)`
    Up,
    /// `(1, 0)`
    Right,
    /// `(1, 1)`
    Diag,
}

impl SchroederStep {
    pub fn letter(self) -> char {
        match self {
            SchroederStep::Up => 'U',
            SchroederStep::Right => 'R',
            SchroederStep::Diag => 'D',
        }
    }
}

/// A lattice path from `(0,0)` to `(n,n)` weakly above `y = x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SchroederPath {
    steps: Vec<SchroederStep>,
}

impl SchroederPath {
    pub fn new(steps: Vec<SchroederStep>) -> Result<Self> {
        let path = SchroederPath { steps };
        if !path.is_valid() {
            return Err(Error::Inconsistent(format!("{path} is not a Schröder path")));
        }
        Ok(path)
    }

    pub fn steps(&self) -> &[SchroederStep] {
        &self.steps
    }

    pub fn is_valid(&self) -> bool {
        let (mut x, mut y) = (0i64, 0i64);
        for step in &self.steps {
            match step {
                SchroederStep::Up => y += 1,
                SchroederStep::Right => x += 1,
                SchroederStep::Diag => {
                    x += 1;
                    y += 1;
                }
            }
            if y < x {
                return false;
            }
        }
        x == y
    }

    /// Size `n` of the endpoint `(n, n)`.
    pub fn size(&self) -> usize {
        self.steps.iter().filter(|s| **s != SchroederStep::Up).count()
    }

    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'U' => Ok(SchroederStep::Up),
                'R' => Ok(SchroederStep::Right),
                'D' => Ok(SchroederStep::Diag),
                other => Err(Error::Inconsistent(format!("unknown Schröder step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

impl fmt::Display for SchroederPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl From<&SchroederPath> for String {
    fn from(path: &SchroederPath) -> String {
        format!("{path}")
    }
}

/// For each value `k`: if `σ̄_k ∈ {0, +1}`, `α_k` up-steps then a right step;
/// if `σ̄_k = -1`, `α_k - 1` up-steps then a diagonal step.
pub fn to_schroeder_path(x: &SortedNaiveShifted) -> SchroederPath {
    let mut steps = Vec::with_capacity(2 * x.len());
    for (alpha, &s) in x.content().iter().zip(x.sbar()) {
        if s == -1 {
            steps.extend(core::iter::repeat_n(SchroederStep::Up, alpha - 1));
            steps.push(SchroederStep::Diag);
        } else {
            steps.extend(core::iter::repeat_n(SchroederStep::Up, *alpha));
            steps.push(SchroederStep::Right);
        }
    }
    SchroederPath { steps }
}

/// All Schröder paths of size `n`, generated directly.
pub fn enumerate_schroeder_paths(n: usize) -> Vec<SchroederPath> {
    fn go(n: usize, x: usize, y: usize, steps: &mut Vec<SchroederStep>, out: &mut Vec<SchroederPath>) {
        if x == n && y == n {
            out.push(SchroederPath { steps: steps.clone() });
            return;
        }
        if y < n {
            steps.push(SchroederStep::Up);
            go(n, x, y + 1, steps, out);
            steps.pop();
        }
        if x < y {
            steps.push(SchroederStep::Right);
            go(n, x + 1, y, steps, out);
            steps.pop();
        }
        if x < n && y < n {
            steps.push(SchroederStep::Diag);
            go(n, x + 1, y + 1, steps, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

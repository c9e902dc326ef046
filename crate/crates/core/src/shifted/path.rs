use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::parking::SortedNaiveShifted;
use crate::{Error, Result};

/// `υ_i = 0` if `α_i = 0`, `1` if `α_i` is odd, `2` if `α_i > 0` is even.
pub fn upsilon(x: &SortedNaiveShifted) -> Vec<u8> {
    upsilon_of_content(&x.content())
}

pub(crate) fn upsilon_of_content(alpha: &[usize]) -> Vec<u8> {
    alpha
        .iter()
        .map(|&a| match a {
            0 => 0,
            a if a % 2 == 1 => 1,
            _ => 2,
        })
        .collect()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PathStep {
    /// `(0, 1)`
    Up,
    /// `(1, 0)`
    Right,
    /// `(1, 1)` for an odd multiplicity
    DiagPos,
    /// `(1, 1)` for an absent value taken on the diagonal
    DiagNeg,
}

impl PathStep {
    pub fn letter(self) -> char {
        match self {
            PathStep::Up => 'U',
            PathStep::Right => 'R',
            PathStep::DiagPos => 'P',
            PathStep::DiagNeg => 'N',
        }
    }

    pub fn from_letter(c: char) -> Option<PathStep> {
        Some(match c {
            'U' => PathStep::Up,
            'R' => PathStep::Right,
            'P' => PathStep::DiagPos,
            'N' => PathStep::DiagNeg,
            _ => return None,
        })
    }

    /// Change in `x - y`.
    fn level_delta(self) -> i64 {
        match self {
            PathStep::Up => -1,
            PathStep::Right => 1,
            PathStep::DiagPos | PathStep::DiagNeg => 0,
        }
    }
}

/// The matching path of a sorted naive shifted parking function.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MatchingPath {
    steps: Vec<PathStep>,
}

impl MatchingPath {
    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Builds a path from its letters `U`, `R`, `P`, `N`. Any step sequence is
    /// accepted; [`matching_path`] is the only producer of paths attached to
    /// parking data.
    pub fn parse(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| PathStep::from_letter(c).ok_or_else(|| Error::Inconsistent(format!("unknown path step {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(MatchingPath { steps })
    }

    #[cfg(test)]
    pub(crate) fn from_steps(steps: Vec<PathStep>) -> Self {
        MatchingPath { steps }
    }

    /// Lattice points visited, starting at the origin.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = (0i64, 0i64);
        pts.push((x, y));
        for s in &self.steps {
            match s {
                PathStep::Up => y += 1,
                PathStep::Right => x += 1,
                PathStep::DiagPos | PathStep::DiagNeg => {
                    x += 1;
                    y += 1;
                }
            }
            pts.push((x, y));
        }
        pts
    }

    /// True iff step `i` (1-based) moves toward the main diagonal.
    pub fn is_toward(&self, i: usize) -> bool {
        let level = self.level_before(i);
        let delta = self.steps[i - 1].level_delta();
        delta != 0 && (level + delta).abs() < level.abs()
    }

    /// `x - y` before step `i` (1-based).
    fn level_before(&self, i: usize) -> i64 {
        self.steps[..i - 1].iter().map(|s| s.level_delta()).sum()
    }
}

impl fmt::Display for MatchingPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

/// Up if `(υ=2, σ̄=+)` or `(υ=0, below the diagonal)`; Right if `(υ=2, σ̄=-)`
/// or `(υ=0, above)`; `DiagPos` if `υ=1`; `DiagNeg` if `υ=0` on the diagonal.
/// "Below" and "above" refer to the position before the step.
pub fn matching_path(x: &SortedNaiveShifted) -> MatchingPath {
    let ups = upsilon(x);
    let mut steps = Vec::with_capacity(ups.len());
    let mut level = 0i64; // x - y
    for (&u, &s) in ups.iter().zip(x.sbar()) {
        let step = match (u, s) {
            (2, 1) => PathStep::Up,
            (2, _) => PathStep::Right,
            (1, _) => PathStep::DiagPos,
            _ if level > 0 => PathStep::Up,
            _ if level < 0 => PathStep::Right,
            _ => PathStep::DiagNeg,
        };
        level += step.level_delta();
        steps.push(step);
    }
    MatchingPath { steps }
}

/// A noncrossing matching: arcs `(i, k)` with `i < k`, pairwise nested or
/// disjoint, no shared endpoints. Stored sorted by left endpoint.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Matching {
    arcs: Vec<(usize, usize)>,
}

impl Matching {
    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn new(mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        arcs.sort_unstable();
        let mut endpoints: Vec<usize> = arcs.iter().flat_map(|&(i, k)| [i, k]).collect();
        if arcs.iter().any(|&(i, k)| i >= k || i == 0) {
            return Err(Error::MalformedMatching(format!("{arcs:?}: arcs must satisfy 0 < i < k")));
        }
        endpoints.sort_unstable();
        if endpoints.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedMatching(format!("{arcs:?}: shared endpoint")));
        }
        for (x, &(a, d)) in arcs.iter().enumerate() {
            for &(b, c) in &arcs[x + 1..] {
                // a < b here; crossing means a < b < d < c
                if b < d && d < c {
                    return Err(Error::MalformedMatching(format!("{arcs:?}: ({a},{d}) crosses ({b},{c})")));
                }
            }
        }
        Ok(Matching { arcs })
    }

    pub(crate) fn from_sorted_unchecked(arcs: Vec<(usize, usize)>) -> Self {
        debug_assert!(Matching::new(arcs.clone()).is_ok());
        Matching { arcs }
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// Partner of endpoint `v`, if matched.
    pub fn partner(&self, v: usize) -> Option<usize> {
        self.arcs.iter().find_map(|&(i, k)| {
            if i == v {
                Some(k)
            } else if k == v {
                Some(i)
            } else {
                None
            }
        })
    }

    pub fn is_right_endpoint(&self, v: usize) -> bool {
        self.arcs.iter().any(|&(_, k)| k == v)
    }

    pub fn is_left_endpoint(&self, v: usize) -> bool {
        self.arcs.iter().any(|&(i, _)| i == v)
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, j)) in self.arcs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({i},{j})")?;
        }
        f.write_str("}")
    }
}

/// `τ(L)`: each step moving toward the diagonal is paired with the nearest
/// unmatched earlier step moving away from it, i.e. the previous step that
/// crossed the same line `x - y = d + ½`. Diagonal steps are never matched.
pub fn path_matching(path: &MatchingPath) -> Matching {
    let mut stack: Vec<usize> = Vec::new();
    let mut arcs = Vec::new();
    let mut level = 0i64;
    for (idx, step) in path.steps.iter().enumerate() {
        let delta = step.level_delta();
        if delta == 0 {
            continue;
        }
        let next = level + delta;
        if next.abs() > level.abs() {
            stack.push(idx + 1);
        } else if let Some(open) = stack.pop() {
            arcs.push((open, idx + 1));
        }
        level = next;
    }
    arcs.sort_unstable();
    Matching { arcs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parking::{enumerate_sorted_naive, SortedNaiveShifted};
    use alloc::collections::BTreeMap;
    use alloc::string::ToString;
    use alloc::vec;
    use proptest::prelude::*;

    pub(crate) fn example() -> SortedNaiveShifted {
        SortedNaiveShifted::from_parts(
            vec![1, 1, 1, 1, 2, 4, 4, 4, 4, 5, 5, 6],
            vec![-1, 1, 0, 1, 1, -1, 0, 0, 0, 0, 0, 0],
        )
        .unwrap()
    }

    /// Geometric formulation: pair consecutive crossings of each half-integer
    /// line `x - y = c`, keyed by `2c`.
    fn geometric_matching(path: &MatchingPath) -> Matching {
        let mut open: BTreeMap<i64, usize> = BTreeMap::new();
        let mut arcs = Vec::new();
        let pts = path.points();
        for (idx, w) in pts.windows(2).enumerate() {
            let (d0, d1) = (w[0].0 - w[0].1, w[1].0 - w[1].1);
            if d0 == d1 {
                continue;
            }
            let line = d0 + d1; // 2c for the crossed line
            match open.remove(&line) {
                Some(start) => arcs.push((start, idx + 1)),
                None => {
                    open.insert(line, idx + 1);
                }
            }
        }
        Matching::new(arcs).unwrap()
    }

    #[test]
    fn upsilon_values() {
        assert_eq!(upsilon(&example()), vec![2, 1, 0, 2, 2, 1, 0, 0, 0, 0, 0, 0]);
        let x = SortedNaiveShifted::from_parts(vec![1, 2, 3], vec![1, 1, 1]).unwrap();
        assert_eq!(upsilon(&x), vec![1, 1, 1]);
        let x = SortedNaiveShifted::from_parts(vec![1, 1], vec![1, 0]).unwrap();
        assert_eq!(upsilon(&x), vec![2, 0]);
    }

    #[test]
    fn figure_path_and_matching() {
        let path = matching_path(&example());
        assert_eq!(path.to_string(), "RPUUUPRRNNNN");
        let pts = path.points();
        assert_eq!(&pts[..9], &[(0, 0), (1, 0), (2, 1), (2, 2), (2, 3), (2, 4), (3, 5), (4, 5), (5, 5)]);
        assert_eq!(path_matching(&path).arcs(), &[(1, 3), (4, 8), (5, 7)]);
    }

    #[test]
    fn small_paths() {
        let x = SortedNaiveShifted::from_parts(vec![1, 2], vec![1, -1]).unwrap();
        assert_eq!(matching_path(&x).to_string(), "PP");
        assert!(path_matching(&matching_path(&x)).is_empty());
        let x = SortedNaiveShifted::from_parts(vec![1, 1], vec![1, 0]).unwrap();
        assert_eq!(matching_path(&x).to_string(), "UR");
        assert_eq!(path_matching(&MatchingPath::parse("UR").unwrap()).arcs(), &[(1, 2)]);
    }

    #[test]
    fn stack_matching_agrees_with_geometry_on_all_small_objects() {
        for n in 1..=6 {
            for x in enumerate_sorted_naive(n) {
                let path = matching_path(&x);
                assert_eq!(path_matching(&path), geometric_matching(&path), "{x}");
            }
        }
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::new(vec![(1, 3), (2, 4)]).is_err());
        assert!(Matching::new(vec![(1, 3), (3, 4)]).is_err());
        assert!(Matching::new(vec![(2, 2)]).is_err());
        assert!(Matching::new(vec![(1, 4), (2, 3), (5, 6)]).is_ok());
    }

    fn arb_path() -> impl Strategy<Value = MatchingPath> {
        proptest::collection::vec(0u8..4, 0..24).prop_map(|codes| {
            MatchingPath::from_steps(
                codes
                    .into_iter()
                    .map(|c| match c {
                        0 => PathStep::Up,
                        1 => PathStep::Right,
                        2 => PathStep::DiagPos,
                        _ => PathStep::DiagNeg,
                    })
                    .collect(),
            )
        })
    }

    proptest! {
        #[test]
        fn stack_matching_agrees_with_geometry_on_random_paths(path in arb_path()) {
            prop_assert_eq!(path_matching(&path), geometric_matching(&path));
        }

        #[test]
        fn matched_pairs_are_away_then_toward(path in arb_path()) {
            for &(i, k) in path_matching(&path).arcs() {
                prop_assert!(!path.is_toward(i));
                prop_assert!(path.is_toward(k));
            }
        }
    }
}

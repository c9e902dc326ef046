//! Named checks of the identities implemented in this crate, grouped into
//! suites and run one `(claim, n)` pair at a time.
//!
//! Every claim has a hard cap on `n`. Brute-force oracles are further limited
//! by [`SuiteConfig::brute_bound`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::characters::{
    clifford_character, exterior_character, exterior_halves_by_subsets, frobenius, naive_character,
    naive_character_by_traces, pf_character, pf_character_by_scan, spin_characteristic_parts, spin_naive_character,
    sqrt2_power_times, verify_class_characters, ClassFunction,
};
use crate::clifford::{
    embed_generator, embed_positive_rep, expected_trace, left_mul_matrix, positive_rep_trace, trace_left_mul,
    CliffordElement, RingQI2,
};
use crate::counting::{catalan, factorial, krew, okrew, okrew_ratio_check, schroeder};
use crate::parking::{
    enumerate_pf, enumerate_schroeder_paths, enumerate_sorted_naive, enumerate_sorted_pf, to_schroeder_path,
};
use crate::partition::{partitions_of, Partition, PartitionFilter};
use crate::quadratic::pow2;
use crate::shifted::{
    area_o, enumerate_garages, enumerate_sorted_odd, garage_class, garage_of, is_garage, is_garage_word, matching_path,
    naive_to_odd, odd_class, odd_to_naive, path_matching, phi_o, upsilon,
};
use crate::symfunc::{
    big_p, e, expand_odd_v, h, h_prod, naive_v_expansion, p_def_forms, p_relation_check, pf_symfunc, sh_symfunc,
    t_graded, v_combination, PCache,
};
use crate::{Rational, SymFunc};

/// `Ok(())` or a description of the counterexample.
pub type Outcome = core::result::Result<(), String>;

/// Random pairs per degree for the self-adjointness claim.
pub const PAIRS_PER_DEGREE: usize = 34;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Suite {
    Identities,
    Combinatorics,
    Characters,
    Clifford,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Identities, Suite::Combinatorics, Suite::Characters, Suite::Clifford];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Combinatorics => "combinatorics",
            Suite::Characters => "characters",
            Suite::Clifford => "clifford",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_n: usize,
    /// Upper bound for claims that scan modules element by element.
    pub brute_bound: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 5, brute_bound: 5, seed: 0x5eed_2024 }
    }
}

#[derive(Clone, Copy, Debug)]
enum Bound {
    Cap(usize),
    Brute(usize),
}

/// A named identity, checked separately for each `n` in its range.
#[derive(Clone, Copy)]
pub struct Claim {
    pub suite: Suite,
    pub name: &'static str,
    pub min_n: usize,
    bound: Bound,
    check: fn(usize, &SuiteConfig) -> Outcome,
}

impl Claim {
    /// The hard cap on `n`, independent of any configuration.
    pub fn cap(&self) -> usize {
        match self.bound {
            Bound::Cap(c) | Bound::Brute(c) => c,
        }
    }

    pub fn is_brute_force(&self) -> bool {
        matches!(self.bound, Bound::Brute(_))
    }

    /// The largest `n` this claim runs at under `cfg`.
    pub fn max_n(&self, cfg: &SuiteConfig) -> usize {
        match self.bound {
            Bound::Cap(c) => cfg.max_n.min(c),
            Bound::Brute(c) => cfg.max_n.min(cfg.brute_bound).min(c),
        }
    }

    pub fn check(&self, n: usize, cfg: &SuiteConfig) -> Check {
        Check { suite: self.suite, claim: self.name, n, outcome: (self.check)(n, cfg) }
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("suite", &self.suite)
            .field("name", &self.name)
            .field("min_n", &self.min_n)
            .field("bound", &self.bound)
            .finish()
    }
}

/// The result of one `(claim, n)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub suite: Suite,
    pub claim: &'static str,
    pub n: usize,
    pub outcome: Outcome,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Ok(()) => write!(f, "PASS  {:<13} {} [n={}]", self.suite, self.claim, self.n),
            Err(why) => write!(f, "FAIL  {:<13} {} [n={}]: {why}", self.suite, self.claim, self.n),
        }
    }
}

/// One unit of work: a claim at a single `n`.
#[derive(Clone, Copy, Debug)]
pub struct Task {
    pub claim: &'static Claim,
    pub n: usize,
}

impl Task {
    pub fn run(&self, cfg: &SuiteConfig) -> Check {
        self.claim.check(self.n, cfg)
    }
}

pub fn claims() -> &'static [Claim] {
    &CLAIMS
}

pub fn find_claim(name: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.name == name)
}

/// All tasks of a suite (or of every suite), claim by claim in table order
/// and by increasing `n` within a claim.
pub fn tasks(suite: Option<Suite>, cfg: &SuiteConfig) -> Vec<Task> {
    CLAIMS
        .iter()
        .filter(|c| suite.is_none_or(|s| c.suite == s))
        .flat_map(|c| (c.min_n..=c.max_n(cfg)).map(move |n| Task { claim: c, n }))
        .collect()
}

/// Runs [`tasks`] sequentially.
pub fn run(suite: Option<Suite>, cfg: &SuiteConfig) -> Vec<Check> {
    tasks(suite, cfg).iter().map(|t| t.run(cfg)).collect()
}

macro_rules! claim {
    ($suite:ident, $name:expr, $min:expr, $bound:expr, $check:expr) => {
        Claim { suite: Suite::$suite, name: $name, min_n: $min, bound: $bound, check: $check }
    };
}

static CLAIMS: [Claim; 37] = [
    claim!(Identities, "P_k forms agree", 1, Bound::Cap(10), check_p_def_forms),
    claim!(Identities, "P-relation", 1, Bound::Cap(6), check_p_relation),
    claim!(Identities, "shiftification is self-adjoint", 1, Bound::Cap(8), check_self_adjoint),
    claim!(Identities, "shiftification is multiplicative", 2, Bound::Cap(8), check_shift_multiplicative),
    claim!(Identities, "h_lambda * 2P_n = sh(h_lambda)", 1, Bound::Cap(7), check_kronecker_shift_h),
    claim!(Identities, "PF_n Kreweras form equals enumeration", 1, Bound::Cap(8), check_pf_forms),
    claim!(Identities, "naive V-expansion gives SH_n", 1, Bound::Cap(8), check_naive_v),
    claim!(Identities, "odd V-coefficients of SH_n are OKrew", 1, Bound::Cap(9), check_odd_v),
    claim!(Identities, "odd Kreweras ratio", 1, Bound::Cap(12), check_okrew_ratio),
    claim!(Identities, "dimension audit", 1, Bound::Cap(8), check_dimension),
    claim!(Identities, "t-graded sums agree at t = 1 and against h_n", 1, Bound::Cap(7), check_t_graded),
    claim!(Combinatorics, "|Pf(n)| = (n+1)^(n-1)", 1, Bound::Cap(7), check_pf_count),
    claim!(Combinatorics, "sorted Pf counted by Catalan", 1, Bound::Cap(10), check_sorted_pf_count),
    claim!(Combinatorics, "Kreweras numbers sum to Catalan", 1, Bound::Cap(12), check_krew_sum),
    claim!(Combinatorics, "sorted naive counted by Schroeder", 1, Bound::Cap(8), check_naive_count),
    claim!(Combinatorics, "sorted odd counted by Schroeder", 1, Bound::Cap(8), check_odd_count),
    claim!(Combinatorics, "Schroeder path bijection", 1, Bound::Cap(7), check_schroeder_bijection),
    claim!(Combinatorics, "garage path and word predicates agree", 1, Bound::Cap(8), check_garage_predicates),
    claim!(Combinatorics, "garage classes partition sorted naive", 1, Bound::Cap(7), check_garage_partition),
    claim!(Combinatorics, "odd fibers partition sorted odd", 1, Bound::Cap(7), check_odd_partition),
    claim!(Combinatorics, "matched steps carry enough mass", 1, Bound::Cap(7), check_pigeonhole),
    claim!(Combinatorics, "garage fibers sum to R_shape", 1, Bound::Cap(7), check_fiber_sums),
    claim!(Combinatorics, "sum of R over garages is SH_n", 1, Bound::Cap(8), check_garage_r),
    claim!(Combinatorics, "sum of V over sorted odd is SH_n", 1, Bound::Cap(8), check_odd_v_sum),
    claim!(Combinatorics, "naive/odd bijection preserves area", 1, Bound::Cap(7), check_bijection_area),
    claim!(Characters, "trivial and sign map to h_n and e_n", 1, Bound::Cap(8), check_trivial_sign),
    claim!(Characters, "parking character by cycles matches scan", 1, Bound::Brute(6), check_pf_scan),
    claim!(Characters, "Frobenius of parking character is PF_n", 1, Bound::Cap(7), check_pf_frobenius),
    claim!(Characters, "exterior algebra character", 1, Bound::Cap(8), check_exterior),
    claim!(Characters, "Frobenius of naive character is SH_n", 1, Bound::Cap(7), check_naive_frobenius),
    claim!(Characters, "Kronecker with 2P_n is sh on characters", 1, Bound::Cap(7), check_kronecker_characters),
    claim!(Characters, "class traces sum to the naive character", 1, Bound::Brute(6), check_traces_sum),
    claim!(Characters, "class characters decompose by shape", 1, Bound::Brute(6), check_class_characters),
    claim!(Characters, "spin character of Pf x C_n is 2^(n/2) SH_n", 1, Bound::Cap(6), check_spin_naive),
    claim!(Clifford, "trace of pi_lambda is 2^((n+l)/2)", 1, Bound::Cap(8), check_traces),
    claim!(Clifford, "spin character of C_n is 2^(n/2+1) P_n", 1, Bound::Cap(8), check_clifford_character),
    claim!(Clifford, "embedded generators satisfy the cover relations", 2, Bound::Cap(7), check_relations),
];

fn ensure(condition: bool, why: impl FnOnce() -> String) -> Outcome {
    if condition {
        Ok(())
    } else {
        Err(why())
    }
}

fn sh(n: usize) -> core::result::Result<SymFunc, String> {
    sh_symfunc(n).map_err(|e| e.to_string())
}

fn int(k: usize) -> Rational {
    Rational::from_integer(k.into())
}

fn rng_for(cfg: &SuiteConfig, n: usize) -> StdRng {
    StdRng::seed_from_u64(cfg.seed ^ (n as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn random_symfunc(rng: &mut StdRng, n: usize, filter: PartitionFilter) -> SymFunc {
    let terms = partitions_of(n, filter).into_iter().filter_map(|l| {
        let num: i64 = rng.gen_range(-5..=5);
        let den: i64 = rng.gen_range(1..=4);
        (num != 0).then(|| (l, Rational::new(num.into(), den.into())))
    });
    SymFunc::from_terms(n, terms).expect("partitions of n")
}

fn count_as_biguint(count: usize) -> BigUint {
    BigUint::from(count)
}

// identities

fn check_p_def_forms(k: usize, _: &SuiteConfig) -> Outcome {
    ensure(p_def_forms(k), || format!("the three forms of P_{k} disagree"))
}

fn check_p_relation(k: usize, _: &SuiteConfig) -> Outcome {
    ensure(p_relation_check(k), || format!("even and odd P-sums differ in degree {}", 2 * k))
}

fn check_self_adjoint(n: usize, cfg: &SuiteConfig) -> Outcome {
    let mut rng = rng_for(cfg, n);
    for _ in 0..PAIRS_PER_DEGREE {
        let f = random_symfunc(&mut rng, n, PartitionFilter::All);
        let g = random_symfunc(&mut rng, n, PartitionFilter::All);
        let left = f.shift().hall_inner(&g).map_err(|e| e.to_string())?;
        let right = f.hall_inner(&g.shift()).map_err(|e| e.to_string())?;
        ensure(left == right, || format!("<sh f, g> = {left} but <f, sh g> = {right} for f = {f}, g = {g}"))?;
    }
    Ok(())
}

fn check_shift_multiplicative(n: usize, cfg: &SuiteConfig) -> Outcome {
    let mut rng = rng_for(cfg, n);
    for _ in 0..PAIRS_PER_DEGREE {
        let k = rng.gen_range(1..n);
        let f = random_symfunc(&mut rng, k, PartitionFilter::All);
        let g = random_symfunc(&mut rng, n - k, PartitionFilter::All);
        ensure(f.mul(&g).shift() == f.shift().mul(&g.shift()), || format!("f = {f}, g = {g}"))?;
    }
    Ok(())
}

fn check_kronecker_shift_h(n: usize, _: &SuiteConfig) -> Outcome {
    let two_p = big_p(n).scale(&int(2));
    for l in partitions_of(n, PartitionFilter::All) {
        let f = h_prod(&l);
        let lhs = f.kronecker(&two_p).map_err(|e| e.to_string())?;
        ensure(lhs == f.shift(), || format!("h{l}"))?;
    }
    Ok(())
}

fn check_pf_forms(n: usize, _: &SuiteConfig) -> Outcome {
    pf_symfunc(n).map(|_| ()).map_err(|e| e.to_string())
}

fn check_naive_v(n: usize, _: &SuiteConfig) -> Outcome {
    let mut cache = PCache::new();
    let mut total = SymFunc::zero(n);
    for (l, c) in naive_v_expansion(n) {
        total += &cache.v(&l).scale(&c);
    }
    ensure(total == sh(n)?, || format!("sum of 2^l Krew(l) V_l is {total}"))
}

fn check_odd_v(n: usize, _: &SuiteConfig) -> Outcome {
    let expansion = expand_odd_v(&sh(n)?).map_err(|e| e.to_string())?;
    for l in partitions_of(n, PartitionFilter::Odd) {
        let want = Rational::from_integer(okrew(&l).map_err(|e| e.to_string())?.into());
        let got = expansion.get(&l).cloned().unwrap_or_else(Rational::zero);
        ensure(got == want, || format!("coefficient of V{l} is {got}, OKrew is {want}"))?;
    }
    ensure(expansion.keys().all(|l| l.is_odd()), || "expansion has an even shape".to_string())
}

fn check_okrew_ratio(n: usize, _: &SuiteConfig) -> Outcome {
    for l in partitions_of(n, PartitionFilter::Odd) {
        ensure(okrew_ratio_check(&l).map_err(|e| e.to_string())?, || format!("{l}"))?;
    }
    Ok(())
}

fn check_dimension(n: usize, _: &SuiteConfig) -> Outcome {
    let ones = Partition::from_unsorted(alloc::vec![1; n]);
    let n_fact = Rational::from_integer(factorial(n).into());
    let mut cache = PCache::new();
    let mut total = Rational::zero();
    for l in partitions_of(n, PartitionFilter::Odd) {
        let dim = cache.v(&l).coeff(&ones) * &n_fact;
        total += Rational::from_integer(okrew(&l).map_err(|e| e.to_string())?.into()) * dim;
    }
    let want = pow2(n as i64) * Rational::from_integer(BigUint::from(n + 1).pow(n as u32 - 1).into());
    ensure(total == want, || format!("sum is {total}, expected {want}"))
}

fn check_t_graded(n: usize, _: &SuiteConfig) -> Outcome {
    let target = sh(n)?;
    let (naive, odd) = t_graded(n);
    ensure(naive.eval_at_one() == target, || "naive sum at t = 1 is not SH_n".to_string())?;
    ensure(odd.eval_at_one() == target, || "odd sum at t = 1 is not SH_n".to_string())?;
    let (a, b) = (naive.pair_with_h(), odd.pair_with_h());
    ensure(a == b, || format!("pairings with h_n differ: {:?} vs {:?}", a.coeffs(), b.coeffs()))
}

// combinatorics

fn check_pf_count(n: usize, _: &SuiteConfig) -> Outcome {
    let got = count_as_biguint(enumerate_pf(n).count());
    let want = BigUint::from(n + 1).pow(n as u32 - 1);
    ensure(got == want, || format!("counted {got}, expected {want}"))
}

fn check_sorted_pf_count(n: usize, _: &SuiteConfig) -> Outcome {
    let got = count_as_biguint(enumerate_sorted_pf(n).count());
    ensure(got == catalan(n), || format!("counted {got}, expected {}", catalan(n)))
}

fn check_krew_sum(n: usize, _: &SuiteConfig) -> Outcome {
    let total: BigUint = partitions_of(n, PartitionFilter::All).iter().map(krew).sum();
    ensure(total == catalan(n), || format!("sum is {total}, expected {}", catalan(n)))
}

fn check_naive_count(n: usize, _: &SuiteConfig) -> Outcome {
    let got = count_as_biguint(enumerate_sorted_naive(n).count());
    ensure(got == schroeder(n), || format!("counted {got}, expected {}", schroeder(n)))
}

fn check_odd_count(n: usize, _: &SuiteConfig) -> Outcome {
    let got = count_as_biguint(enumerate_sorted_odd(n).count());
    ensure(got == schroeder(n), || format!("counted {got}, expected {}", schroeder(n)))
}

fn check_schroeder_bijection(n: usize, _: &SuiteConfig) -> Outcome {
    let mut images = BTreeSet::new();
    for x in enumerate_sorted_naive(n) {
        let path = to_schroeder_path(&x);
        ensure(path.is_valid() && path.size() == n, || format!("{x} maps to invalid path {path}"))?;
        ensure(images.insert(path), || format!("{x} shares its path with another object"))?;
    }
    let all: BTreeSet<_> = enumerate_schroeder_paths(n).into_iter().collect();
    ensure(images == all, || format!("{} images but {} paths", images.len(), all.len()))
}

fn check_garage_predicates(n: usize, _: &SuiteConfig) -> Outcome {
    for x in enumerate_sorted_naive(n) {
        ensure(is_garage(&x) == is_garage_word(&x), || format!("{x}"))?;
    }
    Ok(())
}

fn check_garage_partition(n: usize, _: &SuiteConfig) -> Outcome {
    let mut seen = BTreeSet::new();
    for g in enumerate_garages(n) {
        for x in garage_class(&g) {
            ensure(garage_of(&x) == g, || format!("{x} is listed under {g} but belongs to {}", garage_of(&x)))?;
            ensure(seen.insert(x.clone()), || format!("{x} appears twice"))?;
        }
    }
    let total = enumerate_sorted_naive(n).count();
    ensure(seen.len() == total, || format!("classes cover {} of {total} objects", seen.len()))
}

fn check_odd_partition(n: usize, _: &SuiteConfig) -> Outcome {
    let mut seen = BTreeSet::new();
    for g in enumerate_garages(n) {
        let fiber = odd_class(&g);
        let naive_size = garage_class(&g).len();
        ensure(fiber.len() == naive_size, || {
            format!("{g}: odd fiber has {} objects, class has {naive_size}", fiber.len())
        })?;
        for y in fiber {
            ensure(phi_o(&y) == g, || format!("{y} is listed under {g} but maps to {}", phi_o(&y)))?;
            ensure(seen.insert(y.clone()), || format!("{y} appears twice"))?;
        }
    }
    let total = enumerate_sorted_odd(n).count();
    ensure(seen.len() == total, || format!("fibers cover {} of {total} objects", seen.len()))
}

fn check_pigeonhole(n: usize, _: &SuiteConfig) -> Outcome {
    for x in enumerate_sorted_naive(n) {
        let ups = upsilon(&x);
        for &(i, k) in path_matching(&matching_path(&x)).arcs() {
            let mass: usize = ups[i - 1..k - 1].iter().map(|&u| u as usize).sum();
            ensure(mass >= k - i, || format!("{x}: arc ({i},{k}) carries {mass}"))?;
        }
    }
    Ok(())
}

fn check_fiber_sums(n: usize, _: &SuiteConfig) -> Outcome {
    let mut cache = PCache::new();
    for g in enumerate_garages(n) {
        let expected = cache.r(&g.as_naive().shape());
        let mut naive_side = SymFunc::zero(n);
        for x in garage_class(&g) {
            naive_side += &cache.v(&x.shape());
        }
        ensure(naive_side == expected, || format!("naive class of {g}"))?;
        let mut odd_side = SymFunc::zero(n);
        for y in odd_class(&g) {
            odd_side += &cache.v(&y.shape());
        }
        ensure(odd_side == expected, || format!("odd fiber of {g}"))?;
    }
    Ok(())
}

fn shape_counts<I: Iterator<Item = Partition>>(shapes: I) -> BTreeMap<Partition, Rational> {
    let mut counts: BTreeMap<Partition, Rational> = BTreeMap::new();
    for s in shapes {
        *counts.entry(s).or_insert_with(Rational::zero) += int(1);
    }
    counts
}

fn check_garage_r(n: usize, _: &SuiteConfig) -> Outcome {
    let counts = shape_counts(enumerate_garages(n).map(|g| g.as_naive().shape()));
    let mut cache = PCache::new();
    let mut total = SymFunc::zero(n);
    for (l, c) in &counts {
        total += &cache.r(l).scale(c);
    }
    ensure(total == sh(n)?, || format!("sum is {total}"))
}

fn check_odd_v_sum(n: usize, _: &SuiteConfig) -> Outcome {
    let counts = shape_counts(enumerate_sorted_odd(n).map(|y| y.shape()));
    let total = v_combination(n, &counts);
    ensure(total == sh(n)?, || format!("sum is {total}"))
}

fn check_bijection_area(n: usize, _: &SuiteConfig) -> Outcome {
    let mut images = BTreeSet::new();
    for x in enumerate_sorted_naive(n) {
        let y = naive_to_odd(&x);
        ensure(odd_to_naive(&y) == x, || format!("{x} -> {y} does not come back"))?;
        ensure(area_o(&y) == x.area(), || format!("{x}: area {} but area_o {}", x.area(), area_o(&y)))?;
        images.insert(y);
    }
    let all: BTreeSet<_> = enumerate_sorted_odd(n).collect();
    ensure(images == all, || format!("{} images but {} sorted odd objects", images.len(), all.len()))
}

// characters

fn frob(chi: &ClassFunction) -> core::result::Result<SymFunc, String> {
    frobenius(chi).map_err(|e| e.to_string())
}

fn check_trivial_sign(n: usize, _: &SuiteConfig) -> Outcome {
    ensure(frob(&ClassFunction::trivial(n))? == h(n), || "trivial".to_string())?;
    ensure(frob(&ClassFunction::sign(n))? == e(n), || "sign".to_string())
}

fn check_pf_scan(n: usize, _: &SuiteConfig) -> Outcome {
    ensure(pf_character(n) == pf_character_by_scan(n), || format!("{:?}", pf_character(n).values()))
}

fn check_pf_frobenius(n: usize, _: &SuiteConfig) -> Outcome {
    let pf = pf_symfunc(n).map_err(|e| e.to_string())?;
    ensure(frob(&pf_character(n))? == pf, || "ch(chi_Pf) differs from PF_n".to_string())
}

fn check_exterior(n: usize, _: &SuiteConfig) -> Outcome {
    let p = big_p(n);
    ensure(frob(&exterior_character(n))? == p.scale(&int(2)), || "ch of the exterior algebra is not 2P_n".to_string())?;
    let (even, odd) = exterior_halves_by_subsets(n);
    ensure(frob(&even)? == p, || "even half is not P_n".to_string())?;
    ensure(frob(&odd)? == p, || "odd half is not P_n".to_string())?;
    let sum = even.add(&odd).map_err(|e| e.to_string())?;
    ensure(sum == exterior_character(n), || "halves do not add up to the closed form".to_string())
}

fn check_naive_frobenius(n: usize, _: &SuiteConfig) -> Outcome {
    ensure(frob(&naive_character(n))? == sh(n)?, || "ch of the naive module differs from SH_n".to_string())
}

fn check_kronecker_characters(n: usize, _: &SuiteConfig) -> Outcome {
    let two_p = big_p(n).scale(&int(2));
    let named =
        [("parking", pf_character(n)), ("trivial", ClassFunction::trivial(n)), ("sign", ClassFunction::sign(n))];
    for (name, chi) in named {
        let f = frob(&chi)?;
        ensure(f.kronecker(&two_p).map_err(|e| e.to_string())? == f.shift(), || format!("{name} character"))?;
    }
    Ok(())
}

fn check_traces_sum(n: usize, _: &SuiteConfig) -> Outcome {
    ensure(naive_character_by_traces(n) == naive_character(n), || {
        format!("traces give {:?}", naive_character_by_traces(n).values())
    })
}

fn check_class_characters(n: usize, _: &SuiteConfig) -> Outcome {
    match verify_class_characters(n).first() {
        None => Ok(()),
        Some(m) => Err(format!("{}: {}", m.claim, m.object)),
    }
}

fn check_spin_naive(n: usize, _: &SuiteConfig) -> Outcome {
    let psi = spin_naive_character(n).map_err(|e| e.to_string())?;
    let got = spin_characteristic_parts(&psi).map_err(|e| e.to_string())?;
    ensure(got == sqrt2_power_times(n as i64, &sh(n)?), || format!("ch' = {} + sqrt2*({})", got.0, got.1))
}

// clifford

fn check_traces(n: usize, _: &SuiteConfig) -> Outcome {
    for l in partitions_of(n, PartitionFilter::Odd) {
        let got = positive_rep_trace(&l).map_err(|e| e.to_string())?;
        ensure(got == expected_trace(&l), || format!("{l}: trace {got}"))?;
        if n <= 6 {
            let x = embed_positive_rep(&l, n).map_err(|e| e.to_string())?;
            let matrix = left_mul_matrix(&x);
            let mut diagonal = RingQI2::zero();
            for (k, row) in matrix.iter().enumerate() {
                diagonal = &diagonal + &row[k];
            }
            ensure(diagonal == trace_left_mul(&x), || format!("{l}: matrix trace {diagonal}"))?;
        }
    }
    Ok(())
}

fn check_clifford_character(n: usize, _: &SuiteConfig) -> Outcome {
    let psi = clifford_character(n).map_err(|e| e.to_string())?;
    let got = spin_characteristic_parts(&psi).map_err(|e| e.to_string())?;
    ensure(got == sqrt2_power_times(n as i64 + 2, &big_p(n)), || format!("ch' = {} + sqrt2*({})", got.0, got.1))
}

fn check_relations(n: usize, _: &SuiteConfig) -> Outcome {
    let err = |e: crate::Error| e.to_string();
    let minus_one = CliffordElement::one(n).map_err(err)?.scale(&RingQI2::rational(-int(1)));
    let gens: Vec<CliffordElement> =
        (1..n).map(|k| embed_generator(k, n)).collect::<crate::Result<_>>().map_err(err)?;
    for (a, x) in gens.iter().enumerate() {
        ensure(x.mul(x).map_err(err)? == minus_one, || format!("s_{}^2 != -1", a + 1))?;
        for (b, y) in gens.iter().enumerate().skip(a + 1) {
            let xy = x.mul(y).map_err(err)?;
            let yx = y.mul(x).map_err(err)?;
            if b > a + 1 {
                ensure(xy == yx.scale(&RingQI2::rational(-int(1))), || {
                    format!("s_{} s_{} do not anticommute", a + 1, b + 1)
                })?;
            } else {
                let xyx = xy.mul(x).map_err(err)?;
                ensure(xyx == yx.mul(y).map_err(err)?, || format!("braid fails at s_{}", a + 1))?;
                let cube = xy.mul(&xy).map_err(err)?.mul(&xy).map_err(err)?;
                ensure(cube == minus_one, || format!("(s_{} s_{})^3 != -1", a + 1, b + 1))?;
            }
        }
    }
    Ok(())
}

//! Class functions of `𝔖_n`, the Frobenius and spin characteristic maps, and
//! trace oracles for the modules spanned by shifted parking functions.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::clifford::positive_rep_trace;
use crate::parking::{enumerate_pf, enumerate_sorted_naive, NaiveShifted, SortedNaiveShifted};
use crate::partition::{class_representative, partitions_of, z_rational, PartitionFilter, Permutation};
use crate::quadratic::{pow2, Sqrt2Rational};
use crate::shifted::{enumerate_garages, enumerate_sorted_odd, garage_class, odd_class, SortedOddShifted};
use crate::symfunc::{r_func, v_func};
use crate::{Error, Partition, Rational, Result, SymFunc};

/// Values of a class function, keyed by cycle type.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ClassValues {
    /// One rational value for every `λ ⊢ n`.
    Ordinary(BTreeMap<Partition, Rational>),
    /// Values on the positive class representatives `π_λ`, odd `λ ⊢ n` only.
    Spin(BTreeMap<Partition, Sqrt2Rational>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassFunction {
    degree: usize,
    values: ClassValues,
}

fn check_keys<'a>(n: usize, keys: impl Iterator<Item = &'a Partition>, filter: PartitionFilter) -> Result<()> {
    let expected = partitions_of(n, filter);
    let got: Vec<&Partition> = keys.collect();
    if got.len() != expected.len() || got.iter().zip(&expected).any(|(a, b)| *a != b) {
        return Err(Error::InvalidPartition(format!(
            "class function of degree {n} must be indexed by every {filter:?} partition of {n}"
        )));
    }
    Ok(())
}

impl ClassFunction {
    pub fn ordinary(n: usize, values: BTreeMap<Partition, Rational>) -> Result<Self> {
        check_keys(n, values.keys(), PartitionFilter::All)?;
        Ok(ClassFunction { degree: n, values: ClassValues::Ordinary(values) })
    }

    pub fn spin(n: usize, values: BTreeMap<Partition, Sqrt2Rational>) -> Result<Self> {
        check_keys(n, values.keys(), PartitionFilter::Odd)?;
        Ok(ClassFunction { degree: n, values: ClassValues::Spin(values) })
    }

    pub fn ordinary_from_fn(n: usize, mut f: impl FnMut(&Partition) -> Rational) -> Self {
        let values = partitions_of(n, PartitionFilter::All)
            .into_iter()
            .map(|l| {
                let v = f(&l);
                (l, v)
            })
            .collect();
        ClassFunction { degree: n, values: ClassValues::Ordinary(values) }
    }

    pub fn try_ordinary_from_fn(n: usize, mut f: impl FnMut(&Partition) -> Result<Rational>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for l in partitions_of(n, PartitionFilter::All) {
            values.insert(l.clone(), f(&l)?);
        }
        Ok(ClassFunction { degree: n, values: ClassValues::Ordinary(values) })
    }

    pub fn spin_from_fn(n: usize, mut f: impl FnMut(&Partition) -> Result<Sqrt2Rational>) -> Result<Self> {
        let mut values = BTreeMap::new();
        for l in partitions_of(n, PartitionFilter::Odd) {
            values.insert(l.clone(), f(&l)?);
        }
        Ok(ClassFunction { degree: n, values: ClassValues::Spin(values) })
    }

    /// The all-ones character.
    pub fn trivial(n: usize) -> Self {
        Self::ordinary_from_fn(n, |_| Rational::one())
    }

    /// `(-1)^{n - ℓ(λ)}`.
    pub fn sign(n: usize) -> Self {
        Self::ordinary_from_fn(n, |l| if (n - l.len()).is_multiple_of(2) { Rational::one() } else { -Rational::one() })
    }

    /// `n!` at the identity, `0` elsewhere.
    pub fn regular(n: usize) -> Self {
        let fact: Rational = (1..=n).map(|k| Rational::from_integer(k.into())).product();
        Self::ordinary_from_fn(n, |l| if l.len() == n { fact.clone() } else { Rational::zero() })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> &'static str {
        match self.values {
            ClassValues::Ordinary(_) => "ordinary",
            ClassValues::Spin(_) => "spin",
        }
    }

    pub fn values(&self) -> &ClassValues {
        &self.values
    }

    pub fn ordinary_values(&self) -> Result<&BTreeMap<Partition, Rational>> {
        match &self.values {
            ClassValues::Ordinary(v) => Ok(v),
            ClassValues::Spin(_) => Err(Error::KindMismatch { expected: "ordinary" }),
        }
    }

    pub fn spin_values(&self) -> Result<&BTreeMap<Partition, Sqrt2Rational>> {
        match &self.values {
            ClassValues::Spin(v) => Ok(v),
            ClassValues::Ordinary(_) => Err(Error::KindMismatch { expected: "spin" }),
        }
    }

    /// Pointwise product of two ordinary class functions.
    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let (a, b) = (self.ordinary_values()?, other.ordinary_values()?);
        let values = a.iter().map(|(l, x)| (l.clone(), x * &b[l])).collect();
        Ok(ClassFunction { degree: self.degree, values: ClassValues::Ordinary(values) })
    }

    /// Pointwise sum of two ordinary class functions.
    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let (a, b) = (self.ordinary_values()?, other.ordinary_values()?);
        let values = a.iter().map(|(l, x)| (l.clone(), x + &b[l])).collect();
        Ok(ClassFunction { degree: self.degree, values: ClassValues::Ordinary(values) })
    }
}

/// `ch(χ) = Σ_λ χ(π_λ) p_λ / z_λ`.
pub fn frobenius(chi: &ClassFunction) -> Result<SymFunc> {
    let values = chi.ordinary_values()?;
    SymFunc::from_terms(chi.degree, values.iter().map(|(l, v)| (l.clone(), v / z_rational(l))))
}

/// `ch'(ψ) = Σ_{λ odd} 2^{ℓ(λ)/2} ψ(π_λ) p_λ / z_λ`, returned as `(A, B)` with
/// `ch'(ψ) = A + √2·B`.
pub fn spin_characteristic_parts(psi: &ClassFunction) -> Result<(SymFunc, SymFunc)> {
    let values = psi.spin_values()?;
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    for (l, v) in values {
        let c = (&Sqrt2Rational::pow_sqrt2(l.len() as i64) * v).scale(&z_rational(l).recip());
        rational.push((l.clone(), c.a));
        irrational.push((l.clone(), c.b));
    }
    Ok((SymFunc::from_terms(psi.degree, rational)?, SymFunc::from_terms(psi.degree, irrational)?))
}

/// The spin characteristic, which must have rational coefficients.
pub fn spin_characteristic(psi: &ClassFunction) -> Result<SymFunc> {
    let (a, b) = spin_characteristic_parts(psi)?;
    if let Some((l, _)) = b.coeffs().iter().next() {
        return Err(Error::Irrational(format!("p{l}")));
    }
    Ok(a)
}

/// `2^{k/2}·f` as a pair `(A, B)` meaning `A + √2·B`.
pub fn sqrt2_power_times(k: i64, f: &SymFunc) -> (SymFunc, SymFunc) {
    let c = Sqrt2Rational::pow_sqrt2(k);
    (f.scale(&c.a), f.scale(&c.b))
}

/// Number of parking functions of size `n` constant on the cycles of a
/// permutation with cycle type `λ`: one value per cycle, then a parking test
/// on the resulting content.
fn fixed_parking_count(lambda: &Partition) -> usize {
    fn go(parts: &[usize], alpha: &mut [usize]) -> usize {
        let Some((&len, rest)) = parts.split_first() else {
            let mut total = 0;
            for (k, &a) in alpha.iter().enumerate() {
                total += a;
                if total < k + 1 {
                    return 0;
                }
            }
            return 1;
        };
        let n = alpha.len();
        let mut count = 0;
        for v in 0..n {
            alpha[v] += len;
            count += go(rest, alpha);
            alpha[v] -= len;
        }
        count
    }
    let mut alpha = vec![0; lambda.size()];
    go(lambda.parts(), &mut alpha)
}

/// The permutation character of `𝔖_n` on parking functions:
/// `χ(w) = #{p : p ∘ w = p}`.
pub fn pf_character(n: usize) -> ClassFunction {
    ClassFunction::ordinary_from_fn(n, |l| Rational::from_integer(fixed_parking_count(l).into()))
}

/// [`pf_character`] by scanning every parking function.
pub fn pf_character_by_scan(n: usize) -> ClassFunction {
    let all: Vec<_> = enumerate_pf(n).collect();
    ClassFunction::ordinary_from_fn(n, |l| {
        let w = class_representative(l);
        Rational::from_integer(all.iter().filter(|p| p.act(&w) == **p).count().into())
    })
}

/// Trace on the exterior algebra `⋀(ℂ^n)`: `∏_{cycles} (1 + (-1)^{c-1})`,
/// i.e. `2^{ℓ(λ)}` for odd `λ` and `0` otherwise.
pub fn exterior_character(n: usize) -> ClassFunction {
    ClassFunction::ordinary_from_fn(n, |l| if l.is_odd() { pow2(l.len() as i64) } else { Rational::zero() })
}

/// Sign of `w` restricted to a `w`-stable set given by a membership mask.
fn restricted_sign(w: &Permutation, inside: impl Fn(usize) -> bool) -> i32 {
    let flips: usize = w.cycles().iter().filter(|c| inside(c[0])).map(|c| c.len() - 1).sum();
    if flips.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The even and odd degree parts of the exterior algebra character, by
/// direct signed fixed-point counting over the wedge basis `e_S`.
pub fn exterior_halves_by_subsets(n: usize) -> (ClassFunction, ClassFunction) {
    let mut even = BTreeMap::new();
    let mut odd = BTreeMap::new();
    for l in partitions_of(n, PartitionFilter::All) {
        let w = class_representative(&l);
        let (mut e, mut o) = (0i64, 0i64);
        for mask in 0u64..(1 << n) {
            let stable = (0..n).all(|i| (mask >> i & 1) == (mask >> w.apply(i) & 1));
            if !stable {
                continue;
            }
            let s = i64::from(restricted_sign(&w, |i| mask >> i & 1 == 1));
            if mask.count_ones() % 2 == 0 {
                e += s;
            } else {
                o += s;
            }
        }
        even.insert(l.clone(), Rational::from_integer(e.into()));
        odd.insert(l, Rational::from_integer(o.into()));
    }
    (
        ClassFunction { degree: n, values: ClassValues::Ordinary(even) },
        ClassFunction { degree: n, values: ClassValues::Ordinary(odd) },
    )
}

/// The character of `ℂ[NShPf(n)] ≅ ℂ[Pf(n)] ⊗ ⋀(ℂ^n)`.
pub fn naive_character(n: usize) -> ClassFunction {
    pf_character(n).pointwise_mul(&exterior_character(n)).expect("both ordinary of degree n")
}

/// Trace of `w` on the span of `members`, where `w·(p, σ) = (p∘w, σ∘w)` up to
/// the wedge reordering sign: each fixed `(p, σ)` contributes the sign of `w`
/// restricted to `I = {i : σ_i = -1}`.
pub fn class_trace(members: &[NaiveShifted], w: &Permutation) -> Result<Rational> {
    let set: BTreeSet<&NaiveShifted> = members.iter().collect();
    let mut trace = 0i64;
    for m in members {
        if m.p.len() != w.len() {
            return Err(Error::DegreeMismatch { left: m.p.len(), right: w.len() });
        }
        let image = m.act(w);
        if image == *m {
            let signs = m.sigma.signs();
            trace += i64::from(restricted_sign(w, |i| signs[i] == -1));
        } else if !set.contains(&image) {
            return Err(Error::NotClosed(format!("({}, {:?}) leaves the list", m.p, m.sigma.signs())));
        }
    }
    Ok(Rational::from_integer(trace.into()))
}

/// The character of the span of `members`, evaluated by [`class_trace`].
pub fn character_of(members: &[NaiveShifted], n: usize) -> Result<ClassFunction> {
    ClassFunction::try_ordinary_from_fn(n, |l| class_trace(members, &class_representative(l)))
}

/// The character of the span of the class of a sorted naive object.
pub fn naive_class_character(x: &SortedNaiveShifted) -> ClassFunction {
    character_of(&x.class_members(), x.len()).expect("classes are closed")
}

/// The character of the span of the odd objects sorting to `y`. The matching
/// is carried along unchanged, so this is the class of `(p, σ̄)`.
pub fn odd_class_character(y: &SortedOddShifted) -> ClassFunction {
    let x = SortedNaiveShifted::new(y.p().clone(), y.sbar().to_vec()).expect("valid reduced signs");
    naive_class_character(&x)
}

/// Sum of the class traces over all sorted naive objects.
pub fn naive_character_by_traces(n: usize) -> ClassFunction {
    let mut total = ClassFunction::ordinary_from_fn(n, |_| Rational::zero());
    for x in enumerate_sorted_naive(n) {
        total = total.add(&naive_class_character(&x)).expect("same degree");
    }
    total
}

/// One failed claim found by [`verify_class_characters`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CharacterMismatch {
    pub claim: &'static str,
    pub object: String,
}

/// Brute-force checks of the character-level decompositions at size `n`:
/// each naive class has Frobenius image `V_{shape}`, each garage class and
/// each odd fiber has image `R_{shape(g)}`, and the odd class characters add
/// up to the naive character.
pub fn verify_class_characters(n: usize) -> Vec<CharacterMismatch> {
    let mut failures = Vec::new();
    let mut cache: BTreeMap<SortedNaiveShifted, SymFunc> = BTreeMap::new();
    let mut class_frobenius = |x: &SortedNaiveShifted| -> SymFunc {
        cache.entry(x.clone()).or_insert_with(|| frobenius(&naive_class_character(x)).expect("ordinary")).clone()
    };
    for x in enumerate_sorted_naive(n) {
        if class_frobenius(&x) != v_func(&x.shape()) {
            failures.push(CharacterMismatch { claim: "naive class character is V_shape", object: format!("{x}") });
        }
    }
    for g in enumerate_garages(n) {
        let expected = r_func(&g.as_naive().shape());
        let mut naive_side = SymFunc::zero(n);
        for x in garage_class(&g) {
            naive_side += &class_frobenius(&x);
        }
        if naive_side != expected {
            failures.push(CharacterMismatch { claim: "garage class character is R_shape", object: format!("{g}") });
        }
        let mut odd_side = SymFunc::zero(n);
        for y in odd_class(&g) {
            let x = SortedNaiveShifted::new(y.p().clone(), y.sbar().to_vec()).expect("valid reduced signs");
            odd_side += &class_frobenius(&x);
        }
        if odd_side != expected {
            failures.push(CharacterMismatch { claim: "odd fiber character is R_shape", object: format!("{g}") });
        }
    }
    let mut odd_total = ClassFunction::ordinary_from_fn(n, |_| Rational::zero());
    for y in enumerate_sorted_odd(n) {
        odd_total = odd_total.add(&odd_class_character(&y)).expect("same degree");
    }
    if odd_total != naive_character(n) {
        failures.push(CharacterMismatch {
            claim: "odd class characters sum to the naive character",
            object: format!("n = {n}"),
        });
    }
    failures
}

/// The spin character of `ℂ[Pf(n)] ⊗ 𝒞_n` on positive class
/// representatives: `χ_Pf(π_λ) · tr(π_λ | 𝒞_n)`.
pub fn spin_naive_character(n: usize) -> Result<ClassFunction> {
    let pf = pf_character(n);
    let pf_values = pf.ordinary_values()?;
    ClassFunction::spin_from_fn(n, |l| Ok(positive_rep_trace(l)?.scale(&pf_values[l])))
}

/// The spin character of `𝒞_n` itself.
pub fn clifford_character(n: usize) -> Result<ClassFunction> {
    ClassFunction::spin_from_fn(n, positive_rep_trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{big_p, e, h, pf_symfunc, sh_symfunc};
    use crate::SymFunc;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn int(k: i64) -> Rational {
        Rational::from_integer(k.into())
    }

    fn naive(entries: &[usize], sbar: &[i8]) -> SortedNaiveShifted {
        SortedNaiveShifted::from_parts(entries.to_vec(), sbar.to_vec()).unwrap()
    }

    #[test]
    fn standard_characters() {
        for n in 1..=8 {
            assert_eq!(frobenius(&ClassFunction::trivial(n)).unwrap(), h(n));
            assert_eq!(frobenius(&ClassFunction::sign(n)).unwrap(), e(n));
        }
        assert_eq!(frobenius(&ClassFunction::regular(4)).unwrap(), SymFunc::p_monomial(p(&[1, 1, 1, 1])));
    }

    #[test]
    fn constructors_validate_keys() {
        let mut values = BTreeMap::new();
        values.insert(p(&[2]), int(1));
        assert!(ClassFunction::ordinary(2, values.clone()).is_err());
        values.insert(p(&[1, 1]), int(1));
        assert!(ClassFunction::ordinary(2, values).is_ok());
        let mut spin = BTreeMap::new();
        spin.insert(p(&[1, 1]), Sqrt2Rational::one());
        assert!(ClassFunction::spin(2, spin).is_ok());
        assert!(frobenius(&clifford_character(2).unwrap()).is_err());
    }

    #[test]
    fn parking_character() {
        let chi = pf_character(2);
        assert_eq!(chi.ordinary_values().unwrap()[&p(&[2])], int(1));
        assert_eq!(chi.ordinary_values().unwrap()[&p(&[1, 1])], int(3));
        for n in 1..=5 {
            assert_eq!(pf_character(n), pf_character_by_scan(n), "n = {n}");
            let ones = p(&vec![1; n]);
            assert_eq!(pf_character(n).ordinary_values().unwrap()[&ones], int((n as i64 + 1).pow(n as u32 - 1)));
        }
        for n in 1..=7 {
            assert_eq!(frobenius(&pf_character(n)).unwrap(), pf_symfunc(n).unwrap());
        }
    }

    #[test]
    fn exterior_algebra() {
        let chi = exterior_character(2);
        assert_eq!(chi.ordinary_values().unwrap()[&p(&[1, 1])], int(4));
        assert_eq!(chi.ordinary_values().unwrap()[&p(&[2])], int(0));
        for n in 1..=6 {
            assert_eq!(frobenius(&exterior_character(n)).unwrap(), big_p(n).scale(&int(2)));
            let (even, odd) = exterior_halves_by_subsets(n);
            assert_eq!(frobenius(&even).unwrap(), big_p(n));
            assert_eq!(frobenius(&odd).unwrap(), big_p(n));
        }
    }

    #[test]
    fn naive_module() {
        assert_eq!(frobenius(&naive_character(2)).unwrap(), SymFunc::p_monomial(p(&[1, 1])).scale(&int(6)));
        for n in 1..=6 {
            let chi = naive_character(n);
            let values = chi.ordinary_values().unwrap();
            let ones = p(&vec![1; n]);
            assert_eq!(values[&ones], int(2i64.pow(n as u32) * (n as i64 + 1).pow(n as u32 - 1)));
            assert!(values.iter().filter(|(l, _)| !l.is_odd()).all(|(_, v)| v.is_zero()));
            assert_eq!(frobenius(&chi).unwrap(), sh_symfunc(n).unwrap());
        }
    }

    #[test]
    fn class_trace_examples() {
        let x = naive(&[1, 1], &[1, 0]);
        let members = x.class_members();
        assert_eq!(members.len(), 2);
        assert_eq!(class_trace(&members, &Permutation::identity(2)).unwrap(), int(2));
        let swap = Permutation::from_one_based(&[2, 1]).unwrap();
        assert_eq!(class_trace(&members, &swap).unwrap(), int(0));
        assert!(class_trace(&members[..1], &swap).is_ok());
        let y = naive(&[1, 2], &[1, -1]);
        let members = y.class_members();
        assert!(matches!(class_trace(&members[..1], &swap), Err(Error::NotClosed(_))));
        assert_eq!(frobenius(&naive_class_character(&y)).unwrap(), SymFunc::p_monomial(p(&[1, 1])));
    }

    #[test]
    fn traces_add_up_to_the_naive_character() {
        for n in 1..=4 {
            assert_eq!(naive_character_by_traces(n), naive_character(n), "n = {n}");
        }
    }

    #[test]
    fn class_level_decompositions() {
        for n in 1..=4 {
            assert_eq!(verify_class_characters(n), Vec::new(), "n = {n}");
        }
        let g = crate::shifted::Garage::new(naive(&[1, 1, 1, 1], &[1, 0, 0, 0])).unwrap();
        let mut total = SymFunc::zero(4);
        for x in garage_class(&g) {
            total += &frobenius(&naive_class_character(&x)).unwrap();
        }
        assert_eq!(total, big_p(4).add(&big_p(2).mul(&big_p(2))).unwrap());
    }

    #[test]
    fn spin_characteristics() {
        // 𝒞_n has spin character 2^{n/2+1} P_n
        for n in 1..=6 {
            let got = spin_characteristic_parts(&clifford_character(n).unwrap()).unwrap();
            assert_eq!(got, sqrt2_power_times(n as i64 + 2, &big_p(n)), "n = {n}");
        }
        assert_eq!(spin_characteristic(&clifford_character(2).unwrap()).unwrap(), big_p(2).scale(&int(4)));
        assert!(matches!(spin_characteristic(&clifford_character(1).unwrap()), Err(Error::Irrational(_))));
        let zero = ClassFunction::spin_from_fn(3, |_| Ok(Sqrt2Rational::zero())).unwrap();
        assert!(spin_characteristic(&zero).unwrap().is_zero());
    }

    #[test]
    fn spin_character_of_the_naive_realization() {
        let psi = spin_naive_character(1).unwrap();
        assert_eq!(psi.spin_values().unwrap()[&p(&[1])], Sqrt2Rational::rational(int(2)));
        assert_eq!(
            spin_characteristic(&spin_naive_character(2).unwrap()).unwrap(),
            SymFunc::p_monomial(p(&[1, 1])).scale(&int(12))
        );
        for n in 1..=6 {
            let got = spin_characteristic_parts(&spin_naive_character(n).unwrap()).unwrap();
            assert_eq!(got, sqrt2_power_times(n as i64, &sh_symfunc(n).unwrap()), "n = {n}");
        }
    }

    #[test]
    fn kronecker_with_twice_p_n_is_shiftification() {
        for n in 1..=6 {
            let two_p = big_p(n).scale(&int(2));
            for chi in [pf_character(n), ClassFunction::trivial(n), ClassFunction::sign(n)] {
                let f = frobenius(&chi).unwrap();
                assert_eq!(f.kronecker(&two_p).unwrap(), f.shift());
            }
        }
    }
}

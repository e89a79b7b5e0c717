//! Exact integer primitives shared by the counting formulas: big-integer
//! newtypes, memoized factorials, binomial and multinomial coefficients,
//! signed powers and lazy composition generators.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};
use std::str::FromStr;
use std::sync::{LazyLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// A nonnegative exact count, such as the number of spanning trees of a graph.
///
/// Serializes as a decimal string so that no consumer ever rounds it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Count(BigUint);

impl Count {
    pub fn zero() -> Self {
        Count(BigUint::zero())
    }

    pub fn one() -> Self {
        Count(BigUint::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn as_biguint(&self) -> &BigUint {
        &self.0
    }

    pub fn into_biguint(self) -> BigUint {
        self.0
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    /// `self^exp`, with `0^0 = 1`.
    pub fn pow(&self, exp: u32) -> Count {
        Count(self.0.pow(exp))
    }
}

impl From<BigUint> for Count {
    fn from(value: BigUint) -> Self {
        Count(value)
    }
}

impl From<u64> for Count {
    fn from(value: u64) -> Self {
        Count(BigUint::from(value))
    }
}

impl From<u32> for Count {
    fn from(value: u32) -> Self {
        Count(BigUint::from(value))
    }
}

impl PartialEq<u64> for Count {
    fn eq(&self, other: &u64) -> bool {
        self.0 == BigUint::from(*other)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for Count {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::MalformedList(s.to_owned()));
        }
        BigUint::from_str(s)
            .map(Count)
            .map_err(|_| Error::MalformedList(s.to_owned()))
    }
}

impl Serialize for Count {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for Count {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        Count(self.0 + rhs.0)
    }
}

impl<'a> Add<&'a Count> for Count {
    type Output = Count;
    fn add(self, rhs: &'a Count) -> Count {
        Count(self.0 + &rhs.0)
    }
}

impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        Count(self.0 * rhs.0)
    }
}

impl<'a> Mul<&'a Count> for &'a Count {
    type Output = Count;
    fn mul(self, rhs: &'a Count) -> Count {
        Count(&self.0 * &rhs.0)
    }
}

impl Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        Count(iter.map(|c| c.0).sum())
    }
}

impl Product for Count {
    fn product<I: Iterator<Item = Count>>(iter: I) -> Count {
        Count(iter.map(|c| c.0).product())
    }
}

/// An exact signed intermediate, e.g. a power sum over the sign hypercube
/// before it is divided down to a count.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedSum(BigInt);

impl SignedSum {
    pub fn zero() -> Self {
        SignedSum(BigInt::zero())
    }

    pub fn as_bigint(&self) -> &BigInt {
        &self.0
    }

    pub fn into_bigint(self) -> BigInt {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `self / 2^exponent`, failing unless the division is exact.
    pub fn exact_div_pow2(&self, exponent: u32) -> Result<SignedSum> {
        if self.0.is_zero() {
            return Ok(SignedSum::zero());
        }
        let twos = self.0.trailing_zeros().unwrap_or(0);
        if twos < u64::from(exponent) {
            return Err(Error::InexactDivision {
                value: self.0.to_string(),
                exponent,
            });
        }
        Ok(SignedSum(&self.0 >> exponent))
    }

    /// Converts to a [`Count`]; negative values are rejected.
    pub fn to_count(&self) -> Option<Count> {
        match self.0.sign() {
            Sign::Minus => None,
            _ => Some(Count(self.0.magnitude().clone())),
        }
    }
}

impl From<BigInt> for SignedSum {
    fn from(value: BigInt) -> Self {
        SignedSum(value)
    }
}

impl From<i64> for SignedSum {
    fn from(value: i64) -> Self {
        SignedSum(BigInt::from(value))
    }
}

impl From<Count> for SignedSum {
    fn from(value: Count) -> Self {
        SignedSum(BigInt::from(value.0))
    }
}

impl PartialEq<i64> for SignedSum {
    fn eq(&self, other: &i64) -> bool {
        self.0 == BigInt::from(*other)
    }
}

impl fmt::Display for SignedSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for SignedSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::MalformedList(s.to_owned()));
        }
        BigInt::from_str(s)
            .map(SignedSum)
            .map_err(|_| Error::MalformedList(s.to_owned()))
    }
}

impl Serialize for SignedSum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.0)
    }
}

impl<'de> Deserialize<'de> for SignedSum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for SignedSum {
    type Output = SignedSum;
    fn add(self, rhs: SignedSum) -> SignedSum {
        SignedSum(self.0 + rhs.0)
    }
}

impl Mul for SignedSum {
    type Output = SignedSum;
    fn mul(self, rhs: SignedSum) -> SignedSum {
        SignedSum(self.0 * rhs.0)
    }
}

impl Sum for SignedSum {
    fn sum<I: Iterator<Item = SignedSum>>(iter: I) -> SignedSum {
        SignedSum(iter.map(|c| c.0).sum())
    }
}

/// Shared factorial table; entry `k` holds `k!`.
static FACTORIALS: LazyLock<RwLock<Vec<BigUint>>> =
    LazyLock::new(|| RwLock::new(vec![BigUint::one()]));

fn factorial_big(k: usize) -> BigUint {
    {
        let table = FACTORIALS.read().unwrap_or_else(|e| e.into_inner());
        if let Some(value) = table.get(k) {
            return value.clone();
        }
    }
    let mut table = FACTORIALS.write().unwrap_or_else(|e| e.into_inner());
    while table.len() <= k {
        let next = table.last().expect("table starts with 0!") * BigUint::from(table.len());
        table.push(next);
    }
    table[k].clone()
}

/// `k!`, memoized in a process-wide table.
pub fn factorial(k: u64) -> Count {
    Count(factorial_big(k as usize))
}

/// `C(n, k)`; zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: i64) -> Count {
    if k < 0 || k as u64 > n {
        return Count::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    Count(acc)
}

/// `total! / (parts[0]! parts[1]! ...)`; the parts must sum to `total`.
pub fn multinomial(total: u64, parts: &[u32]) -> Result<Count> {
    let parts_sum: u64 = parts.iter().map(|&p| u64::from(p)).sum();
    if parts_sum != total {
        return Err(Error::MultinomialMismatch { total, parts_sum });
    }
    let denominator: BigUint = parts
        .iter()
        .filter(|&&p| p > 1)
        .map(|&p| factorial_big(p as usize))
        .product();
    Ok(Count(factorial_big(total as usize) / denominator))
}

/// `base^exp` as an exact signed integer, with `0^0 = 1`.
pub fn int_pow(base: i64, exp: u32) -> SignedSum {
    SignedSum(BigInt::from(base).pow(exp))
}

/// Divides a signed intermediate by `2^exponent` and checks that the result
/// is an exact nonnegative count.
pub(crate) fn exact_count_div_pow2(value: &SignedSum, exponent: u32) -> Result<Count> {
    let quotient = value.exact_div_pow2(exponent)?;
    quotient.to_count().ok_or_else(|| Error::InexactDivision {
        value: value.to_string(),
        exponent,
    })
}

/// Iterator over ordered lists of `parts` nonnegative even integers summing
/// to `total`, in decreasing lexicographic order (`[total, 0, ..]` first).
#[derive(Clone, Debug)]
pub struct EvenCompositions {
    halves: Option<Vec<u32>>,
}

/// Every ordered list of `parts` nonnegative even integers that sum to
/// `total`. Empty when `total` is odd.
pub fn even_compositions(total: u32, parts: usize) -> EvenCompositions {
    let halves = if total % 2 == 1 {
        None
    } else if parts == 0 {
        (total == 0).then(Vec::new)
    } else {
        let mut first = vec![0; parts];
        first[0] = total / 2;
        Some(first)
    };
    EvenCompositions { halves }
}

impl Iterator for EvenCompositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.halves.as_mut()?;
        let item = current.iter().map(|h| 2 * h).collect();

        let parts = current.len();
        // Move one unit out of the rightmost nonzero non-final slot and
        // gather the tail into the slot right after it.
        match (0..parts.saturating_sub(1)).rev().find(|&i| current[i] > 0) {
            Some(i) => {
                let tail: u32 = current[i + 1..].iter().sum();
                current[i] -= 1;
                current[i + 1..].iter_mut().for_each(|x| *x = 0);
                current[i + 1] = tail + 1;
            }
            None => self.halves = None,
        }
        Some(item)
    }
}

/// Iterator over ordered lists of `parts` positive integers summing to
/// `total`, in increasing lexicographic order.
#[derive(Clone, Debug)]
pub struct PositiveCompositions {
    current: Option<Vec<u32>>,
}

/// Every ordered list of `parts` positive integers that sum to `total`.
/// Empty when `total < parts`.
pub fn positive_compositions(total: u32, parts: usize) -> PositiveCompositions {
    let current = if parts == 0 {
        (total == 0).then(Vec::new)
    } else if (total as usize) < parts {
        None
    } else {
        let mut first = vec![1; parts];
        first[parts - 1] = total - (parts as u32 - 1);
        Some(first)
    };
    PositiveCompositions { current }
}

impl Iterator for PositiveCompositions {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let current = self.current.as_mut()?;
        let item = current.clone();

        let parts = current.len();
        // Rightmost slot whose suffix still has slack above all-ones.
        let mut slack = 0;
        let mut bump = None;
        for i in (0..parts.saturating_sub(1)).rev() {
            slack += current[i + 1] - 1;
            if slack > 0 {
                bump = Some(i);
                break;
            }
        }
        match bump {
            Some(i) => {
                current[i] += 1;
                current[i + 1..].iter_mut().for_each(|x| *x = 1);
                current[parts - 1] += slack - 1;
            }
            None => self.current = None,
        }
        Some(item)
    }
}

/// Every entry odd.
pub fn all_odd(values: &[u32]) -> bool {
    values.iter().all(|d| d % 2 == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factorial_oracle(k: u32) -> u128 {
        (1..=u128::from(k)).product()
    }

    fn pascal_row(n: usize) -> Vec<u128> {
        let mut row = vec![1u128];
        for _ in 0..n {
            let mut next = vec![1u128; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] + row[i];
            }
            row = next;
        }
        row
    }

    // All ordered `parts`-tuples over 0..=total whose entries sum to total.
    fn all_weak_compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..parts {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u32>| {
                    (0..=total).map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .filter(|v| v.iter().sum::<u32>() <= total)
                .collect();
        }
        out.retain(|v| v.iter().sum::<u32>() == total);
        out
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(factorial(0), 1);
        assert_eq!(factorial(5), 120);
        assert_eq!(factorial(20), 2432902008176640000);
        for k in 0..=30 {
            assert_eq!(
                factorial(k as u64).to_string(),
                factorial_oracle(k).to_string()
            );
        }
    }

    #[test]
    fn factorial_is_consistent_out_of_order() {
        let big = factorial(60);
        let small = factorial(7);
        assert_eq!(small, 5040);
        assert_eq!(big.as_biguint() / factorial(59).as_biguint(), 60u32.into());
    }

    #[test]
    fn factorial_table_shared_across_threads() {
        let handles: Vec<_> = (0..4)
            .map(|t| std::thread::spawn(move || factorial(40 + 10 * t)))
            .collect();
        let results: Vec<Count> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, value) in results.iter().enumerate() {
            let expected: BigUint = (1..=(40 + 10 * t as u64)).map(BigUint::from).product();
            assert_eq!(value.as_biguint(), &expected);
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(6, 0), 1);
        assert_eq!(binomial(8, 3), 56);
        assert_eq!(binomial(5, -1), 0);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn binomial_matches_pascal_triangle() {
        for n in 0..=40 {
            let row = pascal_row(n);
            for (k, expected) in row.iter().enumerate() {
                assert_eq!(
                    binomial(n as u64, k as i64).to_string(),
                    expected.to_string()
                );
            }
        }
    }

    #[test]
    fn binomial_row_sums_to_power_of_two() {
        for n in 0..=30u64 {
            let total: Count = (0..=n as i64).map(|k| binomial(n, k)).sum();
            assert_eq!(total, 1u64 << n);
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(2, &[2, 0, 0, 0]).unwrap(), 1);
        assert_eq!(multinomial(2, &[1, 1]).unwrap(), 2);
        assert_eq!(multinomial(4, &[2, 2, 0]).unwrap(), 6);
        let oracle = factorial_oracle(4) / (factorial_oracle(2) * factorial_oracle(2));
        assert_eq!(multinomial(4, &[2, 2, 0]).unwrap(), oracle as u64);
        assert_eq!(multinomial(0, &[]).unwrap(), 1);
    }

    #[test]
    fn multinomial_rejects_mismatched_parts() {
        assert_eq!(
            multinomial(5, &[2, 2]),
            Err(Error::MultinomialMismatch {
                total: 5,
                parts_sum: 4
            })
        );
    }

    #[test]
    fn int_pow_examples() {
        assert_eq!(int_pow(0, 0), 1);
        assert_eq!(int_pow(-2, 3), -8);
        assert_eq!(int_pow(3, 4), 81);
        assert_eq!(int_pow(0, 5), 0);
        for base in -5i64..=5 {
            for exp in 0..=12u32 {
                let oracle: i128 = (0..exp).fold(1i128, |acc, _| acc * i128::from(base));
                assert_eq!(int_pow(base, exp).to_string(), oracle.to_string());
            }
        }
    }

    #[test]
    fn zero_base_powers() {
        assert_eq!(int_pow(0, 0), 1);
        for e in 1..=20 {
            assert_eq!(int_pow(0, e), 0);
        }
    }

    #[test]
    fn even_composition_examples() {
        let got: Vec<_> = even_compositions(2, 3).collect();
        assert_eq!(got, vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]);
        assert_eq!(even_compositions(3, 2).count(), 0);
        let got: Vec<_> = even_compositions(4, 2).collect();
        assert_eq!(got, vec![vec![4, 0], vec![2, 2], vec![0, 4]]);
        assert_eq!(
            even_compositions(0, 3).collect::<Vec<_>>(),
            vec![vec![0, 0, 0]]
        );
        assert_eq!(even_compositions(6, 1).collect::<Vec<_>>(), vec![vec![6]]);
    }

    #[test]
    fn even_compositions_match_filtered_enumeration() {
        for total in 0..=8 {
            for parts in 1..=4 {
                let mut expected: Vec<_> = all_weak_compositions(total, parts)
                    .into_iter()
                    .filter(|v| v.iter().all(|x| x % 2 == 0))
                    .collect();
                expected.sort_by(|a, b| b.cmp(a));
                let got: Vec<_> = even_compositions(total, parts).collect();
                assert_eq!(got, expected, "total={total} parts={parts}");
            }
        }
    }

    #[test]
    fn positive_composition_examples() {
        let got: Vec<_> = positive_compositions(3, 2).collect();
        assert_eq!(got, vec![vec![1, 2], vec![2, 1]]);
        assert_eq!(positive_compositions(2, 3).count(), 0);
        assert_eq!(positive_compositions(6, 4).count(), 10);
        assert_eq!(
            positive_compositions(5, 1).collect::<Vec<_>>(),
            vec![vec![5]]
        );
    }

    #[test]
    fn positive_compositions_match_filtered_enumeration() {
        for total in 1..=8 {
            for parts in 1..=4 {
                let mut expected: Vec<_> = all_weak_compositions(total, parts)
                    .into_iter()
                    .filter(|v| v.iter().all(|&x| x >= 1))
                    .collect();
                expected.sort();
                let got: Vec<_> = positive_compositions(total, parts).collect();
                assert_eq!(got, expected, "total={total} parts={parts}");
            }
        }
    }

    #[test]
    fn composition_counts_follow_stars_and_bars() {
        for t in 1..=12u32 {
            for p in 1..=12usize {
                let count = positive_compositions(t, p).count() as u64;
                assert_eq!(
                    binomial(u64::from(t) - 1, p as i64 - 1),
                    count,
                    "t={t} p={p}"
                );
            }
        }
        for s in 0..=8u32 {
            for p in 1..=8usize {
                let count = even_compositions(2 * s, p).count() as u64;
                assert_eq!(
                    binomial(u64::from(s) + p as u64 - 1, p as i64 - 1),
                    count,
                    "s={s} p={p}"
                );
            }
        }
    }

    #[test]
    fn exact_division_by_powers_of_two() {
        let v = SignedSum::from(6144);
        assert_eq!(exact_count_div_pow2(&v, 6).unwrap(), 96);
        assert!(matches!(
            exact_count_div_pow2(&SignedSum::from(6145), 6),
            Err(Error::InexactDivision { exponent: 6, .. })
        ));
        assert!(exact_count_div_pow2(&SignedSum::from(-64), 6).is_err());
        assert_eq!(SignedSum::from(-64).exact_div_pow2(6).unwrap(), -1);
        assert_eq!(exact_count_div_pow2(&SignedSum::zero(), 40).unwrap(), 0);
    }

    #[test]
    fn decimal_text_round_trips() {
        let huge = factorial(200);
        let text = huge.to_string();
        assert!(text.bytes().all(|b| b.is_ascii_digit()));
        assert_eq!(text.parse::<Count>().unwrap(), huge);
        let json = serde_json::to_string(&huge).unwrap();
        assert_eq!(json, format!("\"{text}\""));
        assert_eq!(serde_json::from_str::<Count>(&json).unwrap(), huge);
        assert!("-3".parse::<Count>().is_err());
        assert!("1e5".parse::<Count>().is_err());
        assert_eq!("-12".parse::<SignedSum>().unwrap(), -12);
    }

    proptest! {
        #[test]
        fn multinomial_is_permutation_invariant(
            parts in proptest::collection::vec(0u32..6, 1..6),
            seed in any::<u64>(),
        ) {
            let total: u64 = parts.iter().map(|&p| u64::from(p)).sum();
            let mut shuffled = parts.clone();
            let len = shuffled.len();
            // deterministic Fisher-Yates driven by the seed
            let mut state = seed;
            for i in (1..len).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                shuffled.swap(i, j);
            }
            prop_assert_eq!(multinomial(total, &parts).unwrap(), multinomial(total, &shuffled).unwrap());
        }

        #[test]
        fn int_pow_adds_exponents(base in -5i64..=5, e1 in 0u32..=20, e2 in 0u32..=20) {
            prop_assume!(base != 0 && e1 + e2 <= 20);
            prop_assert_eq!(int_pow(base, e1 + e2), int_pow(base, e1) * int_pow(base, e2));
        }
    }
}

//! Power sums of a linear form over the sign hypercube `{-1, +1}^n`.
//!
//! For integer coefficients `a_1..a_n` and a power `m`,
//!
//! ```text
//! sum over y in {±1}^n of (a_1 y_1 + ... + a_n y_n)^m
//!     = 2^n * sum over even k_1+...+k_n = m of m!/(k_1!...k_n!) * a_1^k_1 ... a_n^k_n
//! ```
//!
//! because every odd moment of a uniform sign vanishes. [`hypercube_power_sum`]
//! evaluates the left side by enumeration, [`multinomial_power_sum`] the right
//! side by composition sums, and [`binomial_collapse`] specializes the left
//! side to all-ones coefficients by grouping sign vectors by their number of
//! `+1` entries.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{binomial, even_compositions, int_pow, multinomial, SignedSum};
use crate::{Error, Result};

/// Largest dimension the direct enumeration accepts.
pub const HYPERCUBE_LIMIT: usize = 24;

/// Integer coefficients `a_1..a_n` of the linear form; `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoefficientVector(Vec<i64>);

impl CoefficientVector {
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::InvalidParameter {
                name: "coefficients",
                value: 0,
                reason: "at least one coefficient is required",
            });
        }
        Ok(CoefficientVector(coefficients))
    }

    /// `n` ones.
    pub fn ones(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn scaled(&self, factor: i64) -> CoefficientVector {
        CoefficientVector(self.0.iter().map(|a| a * factor).collect())
    }
}

/// A point of `{-1, +1}^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::InvalidParameter {
                name: "sign",
                value: 0,
                reason: "entries must be -1 or +1",
            });
        }
        Ok(SignVector(signs))
    }

    /// Bit `i` of `mask` set means `y_i = -1`.
    pub fn from_mask(mask: u64, n: usize) -> SignVector {
        SignVector(
            (0..n)
                .map(|i| if mask >> i & 1 == 1 { -1 } else { 1 })
                .collect(),
        )
    }

    pub fn signs(&self) -> &[i8] {
        &self.0
    }

    /// `Σ a_i y_i`.
    pub fn dot(&self, a: &CoefficientVector) -> i128 {
        self.0
            .iter()
            .zip(a.coefficients())
            .map(|(&y, &a)| i128::from(y) * i128::from(a))
            .sum()
    }
}

/// Accumulates `i128` terms and spills into a big integer on overflow.
struct Accumulator {
    small: i128,
    big: BigInt,
}

impl Accumulator {
    fn new() -> Self {
        Accumulator {
            small: 0,
            big: BigInt::zero(),
        }
    }

    fn add_power(&mut self, base: i128, exp: u32) {
        match base.checked_pow(exp) {
            Some(term) => match self.small.checked_add(term) {
                Some(sum) => self.small = sum,
                None => {
                    self.big += self.small;
                    self.small = term;
                }
            },
            None => self.big += BigInt::from(base).pow(exp),
        }
    }

    fn finish(self) -> BigInt {
        self.big + self.small
    }
}

/// Bits of the mask enumerated inside one block by Gray code.
const BLOCK_BITS: usize = 12;

/// Sum of `(Σ a_i y_i)^m` over the sign vectors whose high bits equal
/// `high`; the low `low_bits` coordinates are walked in Gray-code order so
/// each step flips exactly one sign.
fn block_sum(a: &[i64], m: u32, high: u64, low_bits: usize) -> BigInt {
    let mut signs: Vec<bool> = (0..a.len())
        .map(|i| i >= low_bits && (high >> (i - low_bits)) & 1 == 1)
        .collect();
    let mut s: i128 = a
        .iter()
        .zip(&signs)
        .map(|(&a, &neg)| if neg { -i128::from(a) } else { i128::from(a) })
        .sum();
    let mut acc = Accumulator::new();
    let steps: u64 = 1 << low_bits;
    for step in 1..=steps {
        acc.add_power(s, m);
        if step == steps {
            break;
        }
        let bit = step.trailing_zeros() as usize;
        let twice = 2 * i128::from(a[bit]);
        s += if signs[bit] { twice } else { -twice };
        signs[bit] = !signs[bit];
    }
    acc.finish()
}

/// `Σ_{y ∈ {±1}^n} (Σ a_i y_i)^m` by direct enumeration of all `2^n` sign
/// vectors, with `0^0 = 1`. Blocks of the hypercube are summed in parallel.
pub fn hypercube_power_sum(a: &CoefficientVector, m: u32) -> Result<SignedSum> {
    let n = a.len();
    if n > HYPERCUBE_LIMIT {
        return Err(Error::SizeLimit {
            what: "hypercube dimension",
            got: n,
            limit: HYPERCUBE_LIMIT,
        });
    }
    let low_bits = n.min(BLOCK_BITS);
    let blocks: u64 = 1 << (n - low_bits);
    let total = (0..blocks)
        .into_par_iter()
        .map(|high| block_sum(a.coefficients(), m, high, low_bits))
        .reduce(BigInt::zero, |x, y| x + y);
    Ok(SignedSum::from(total))
}

/// `2^n · Σ_{k even, Σk = m} m!/(k_1!···k_n!) · Π a_i^{k_i}`; zero for odd `m`.
pub fn multinomial_power_sum(a: &CoefficientVector, m: u32) -> SignedSum {
    let inner: BigInt = even_compositions(m, a.len())
        .map(|k| {
            let coefficient = multinomial(u64::from(m), &k).expect("composition sums to m");
            let monomial: BigInt = a
                .coefficients()
                .iter()
                .zip(&k)
                .filter(|(_, &e)| e > 0)
                .map(|(&ai, &e)| int_pow(ai, e).into_bigint())
                .product();
            BigInt::from(coefficient.into_biguint()) * monomial
        })
        .sum();
    SignedSum::from(inner << a.len())
}

/// `Σ_{k=0}^{n} C(n,k) · (2k − n)^m`: the all-ones hypercube sum with sign
/// vectors grouped by their number `k` of `+1` entries.
pub fn binomial_collapse(n: u32, m: u32) -> SignedSum {
    (0..=i64::from(n))
        .map(|k| {
            let weight = SignedSum::from(binomial(u64::from(n), k));
            weight * int_pow(2 * k - i64::from(n), m)
        })
        .sum()
}

//! Closed-form spanning tree counts for `K_n` and `K_{m,n}`.
//!
//! The odd-tree counters exist in two shapes that are computed along
//! unrelated paths: a binomial sum that is divided by a power of two (with a
//! hard error if the division is inexact), and a sum of multinomial
//! coefficients over even compositions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{even_compositions, exact_count_div_pow2, factorial, multinomial, Count};
use crate::degrees::{BipartiteDegreeSpec, DegreeSequence};
use crate::oracles::LabeledGraph;
use crate::sign_sum::binomial_collapse;
use crate::{Error, Result};

fn require_positive(name: &'static str, value: u32) -> Result<()> {
    if value == 0 {
        return Err(Error::InvalidParameter {
            name,
            value: 0,
            reason: "must be at least 1",
        });
    }
    Ok(())
}

/// `K_n` or `K_{m,n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphFamily {
    Complete { n: u32 },
    CompleteBipartite { m: u32, n: u32 },
}

impl GraphFamily {
    pub fn complete(n: u32) -> Result<Self> {
        require_positive("n", n)?;
        Ok(GraphFamily::Complete { n })
    }

    pub fn complete_bipartite(m: u32, n: u32) -> Result<Self> {
        require_positive("m", m)?;
        require_positive("n", n)?;
        Ok(GraphFamily::CompleteBipartite { m, n })
    }

    pub fn vertex_count(&self) -> u32 {
        match *self {
            GraphFamily::Complete { n } => n,
            GraphFamily::CompleteBipartite { m, n } => m + n,
        }
    }

    pub fn spanning_trees(&self) -> Result<Count> {
        match *self {
            GraphFamily::Complete { n } => tau_complete(n),
            GraphFamily::CompleteBipartite { m, n } => tau_bipartite(m, n),
        }
    }

    pub fn odd_spanning_trees(&self) -> Result<Count> {
        match *self {
            GraphFamily::Complete { n } => odd_trees_complete(n),
            GraphFamily::CompleteBipartite { m, n } => odd_trees_bipartite(m, n),
        }
    }

    /// Explicit edge list; side `A` is `1..=m`, side `B` is `m+1..=m+n`.
    pub fn graph(&self) -> LabeledGraph {
        match *self {
            GraphFamily::Complete { n } => LabeledGraph::complete(n),
            GraphFamily::CompleteBipartite { m, n } => LabeledGraph::complete_bipartite(m, n),
        }
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Complete { n } => write!(f, "K_{n}"),
            GraphFamily::CompleteBipartite { m, n } => write!(f, "K_{{{m},{n}}}"),
        }
    }
}

/// Cayley's formula `n^{n-2}`, with `τ(K_1) = 1`.
pub fn tau_complete(n: u32) -> Result<Count> {
    require_positive("n", n)?;
    if n <= 2 {
        return Ok(Count::one());
    }
    Ok(Count::from(n).pow(n - 2))
}

/// `m^{n-1} · n^{m-1}`.
pub fn tau_bipartite(m: u32, n: u32) -> Result<Count> {
    require_positive("m", m)?;
    require_positive("n", n)?;
    Ok(Count::from(m).pow(n - 1) * Count::from(n).pow(m - 1))
}

/// `∏ (d_i - 1)!` over the entries of a degree list.
fn reduced_factorial_product(degrees: &[u32]) -> Count {
    degrees
        .iter()
        .map(|&d| factorial(u64::from(d) - 1))
        .product()
}

/// Number of spanning trees of `K_n` in which vertex `i` has degree `d_i`:
/// `(n-2)! / ∏(d_i-1)!` when `Σd_i = 2n-2`, and zero otherwise. A single
/// vertex has degree 0, so every one-entry sequence yields zero.
pub fn trees_with_degrees_complete(d: &DegreeSequence) -> Count {
    let n = d.vertex_count() as u64;
    if n < 2 || d.degree_sum() != 2 * n - 2 {
        return Count::zero();
    }
    let numerator = factorial(n - 2);
    Count::from(numerator.as_biguint() / reduced_factorial_product(d.degrees()).as_biguint())
}

/// Number of spanning trees of `K_{m,n}` in which `u_i` has degree `a_i` and
/// `v_j` has degree `b_j`: `(m-1)!(n-1)! / (∏(a_i-1)! ∏(b_j-1)!)` when
/// `Σa_i = Σb_j = m+n-1`, and zero otherwise.
pub fn trees_with_degrees_bipartite(spec: &BipartiteDegreeSpec) -> Count {
    let (m, n) = spec.sizes();
    let edges = (m + n - 1) as u64;
    let sum = |side: &[u32]| side.iter().map(|&x| u64::from(x)).sum::<u64>();
    if sum(spec.side_a()) != edges || sum(spec.side_b()) != edges {
        return Count::zero();
    }
    let numerator = &factorial(m as u64 - 1) * &factorial(n as u64 - 1);
    let denominator =
        &reduced_factorial_product(spec.side_a()) * &reduced_factorial_product(spec.side_b());
    Count::from(numerator.as_biguint() / denominator.as_biguint())
}

/// Odd spanning trees of `K_n`: `2^{-n} Σ_{k=0}^{n} C(n,k)(2k-n)^{n-2}`.
///
/// `τ_o(K_1) = 0`: the lone vertex has degree 0. The binomial sum is never
/// evaluated at the negative exponent.
pub fn odd_trees_complete(n: u32) -> Result<Count> {
    require_positive("n", n)?;
    if n == 1 {
        return Ok(Count::zero());
    }
    exact_count_div_pow2(&binomial_collapse(n, n - 2), n)
}

/// Odd spanning trees of `K_n` as `Σ (n-2)! / (k_1!···k_n!)` over even
/// compositions `k` of `n-2` into `n` parts.
pub fn odd_trees_complete_by_sum(n: u32) -> Result<Count> {
    require_positive("n", n)?;
    if n == 1 {
        return Ok(Count::zero());
    }
    Ok(even_composition_mass(n - 2, n as usize))
}

/// `Σ total!/(k_1!···k_p!)` over even compositions of `total` into `parts`.
fn even_composition_mass(total: u32, parts: usize) -> Count {
    even_compositions(total, parts)
        .map(|k| multinomial(u64::from(total), &k).expect("composition sums to total"))
        .sum()
}

/// Odd spanning trees of `K_{m,n}`:
/// `2^{-(m+n)} [Σ_i C(m,i)(2i-m)^{n-1}] [Σ_j C(n,j)(2j-n)^{m-1}]`.
pub fn odd_trees_bipartite(m: u32, n: u32) -> Result<Count> {
    require_positive("m", m)?;
    require_positive("n", n)?;
    let product = binomial_collapse(m, n - 1) * binomial_collapse(n, m - 1);
    exact_count_div_pow2(&product, m + n)
}

/// Odd spanning trees of `K_{m,n}` as the double sum of
/// `(m-1)!(n-1)! / (∏k_i! ∏l_j!)` over even compositions `k` of `n-1` into
/// `m` parts and `l` of `m-1` into `n` parts. The summand factors as
/// `multinomial(n-1, k) · multinomial(m-1, l)`, so the double sum is the
/// product of the two single sums.
pub fn odd_trees_bipartite_by_sum(m: u32, n: u32) -> Result<Count> {
    require_positive("m", m)?;
    require_positive("n", n)?;
    Ok(even_composition_mass(n - 1, m as usize) * even_composition_mass(m - 1, n as usize))
}

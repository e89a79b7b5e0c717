//! Prescribed vertex-degree profiles for `K_n` and `K_{m,n}`.
//!
//! Entries are validated to be positive on construction. Whether the degree
//! sum is realizable by a tree is a property of the query, not of the type,
//! and is checked by the counting operations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Degrees `d_1, ..., d_n` for the vertices `1..=n` of `K_n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DegreeSequence {
    degrees: Vec<u32>,
}

fn check_positive(degrees: &[u32]) -> Result<()> {
    if degrees.is_empty() {
        return Err(Error::EmptyDegreeList);
    }
    match degrees.iter().position(|&d| d == 0) {
        Some(index) => Err(Error::NonPositiveDegree { index, value: 0 }),
        None => Ok(()),
    }
}

/// Parses `"2,2,1,1"`. Signed input is accepted by the tokenizer so that a
/// negative degree is reported as such rather than as a syntax error.
pub fn parse_degree_list(text: &str) -> Result<Vec<u32>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyDegreeList);
    }
    trimmed
        .split(',')
        .enumerate()
        .map(|(index, token)| {
            let value: i64 = token
                .trim()
                .parse()
                .map_err(|_| Error::MalformedList(text.to_owned()))?;
            if value <= 0 {
                return Err(Error::NonPositiveDegree { index, value });
            }
            u32::try_from(value).map_err(|_| Error::MalformedList(text.to_owned()))
        })
        .collect()
}

fn render(degrees: &[u32], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, d) in degrees.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

impl DegreeSequence {
    pub fn new(degrees: Vec<u32>) -> Result<Self> {
        check_positive(&degrees)?;
        Ok(DegreeSequence { degrees })
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn degree_sum(&self) -> u64 {
        self.degrees.iter().map(|&d| u64::from(d)).sum()
    }

    pub fn all_odd(&self) -> bool {
        crate::arith::all_odd(&self.degrees)
    }
}

impl TryFrom<Vec<u32>> for DegreeSequence {
    type Error = Error;
    fn try_from(degrees: Vec<u32>) -> Result<Self> {
        DegreeSequence::new(degrees)
    }
}

impl From<DegreeSequence> for Vec<u32> {
    fn from(seq: DegreeSequence) -> Self {
        seq.degrees
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DegreeSequence::new(parse_degree_list(s)?)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render(&self.degrees, f)
    }
}

/// Degrees `a_1..a_m` for side `A` and `b_1..b_n` for side `B` of `K_{m,n}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBipartite", into = "RawBipartite")]
pub struct BipartiteDegreeSpec {
    side_a: Vec<u32>,
    side_b: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct RawBipartite {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl BipartiteDegreeSpec {
    pub fn new(side_a: Vec<u32>, side_b: Vec<u32>) -> Result<Self> {
        check_positive(&side_a)?;
        check_positive(&side_b).map_err(|e| match e {
            Error::NonPositiveDegree { index, value } => Error::NonPositiveDegree {
                index: side_a.len() + index,
                value,
            },
            other => other,
        })?;
        Ok(BipartiteDegreeSpec { side_a, side_b })
    }

    pub fn side_a(&self) -> &[u32] {
        &self.side_a
    }

    pub fn side_b(&self) -> &[u32] {
        &self.side_b
    }

    /// `(m, n)`.
    pub fn sizes(&self) -> (usize, usize) {
        (self.side_a.len(), self.side_b.len())
    }

    pub fn all_odd(&self) -> bool {
        crate::arith::all_odd(&self.side_a) && crate::arith::all_odd(&self.side_b)
    }
}

impl TryFrom<RawBipartite> for BipartiteDegreeSpec {
    type Error = Error;
    fn try_from(raw: RawBipartite) -> Result<Self> {
        BipartiteDegreeSpec::new(raw.a, raw.b)
    }
}

impl From<BipartiteDegreeSpec> for RawBipartite {
    fn from(spec: BipartiteDegreeSpec) -> Self {
        RawBipartite {
            a: spec.side_a,
            b: spec.side_b,
        }
    }
}

impl fmt::Display for BipartiteDegreeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a=")?;
        render(&self.side_a, f)?;
        f.write_str(";b=")?;
        render(&self.side_b, f)
    }
}

//! Brute-force ground truth for the closed forms.
//!
//! * Prüfer enumeration: every labeled tree on `{1..n}` is the decoding of
//!   exactly one word of length `n-2` over `{1..n}`, and vertex `v` has degree
//!   one more than its number of occurrences in the word.
//! * Bipartite filtering: trees of `K_{m,n}` are the labeled trees on `m+n`
//!   vertices whose edges all join `A = {1..m}` to `B = {m+1..m+n}`.
//! * Matrix-Tree: the number of spanning trees of any simple graph is the
//!   determinant of its reduced Laplacian, evaluated by fraction-free
//!   elimination.
//!
//! Enumerations are split by leading letters and summed with rayon; counts
//! are identical for any thread count.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::Count;
use crate::degrees::DegreeSequence;
use crate::{Error, Result};

/// Largest `n` for which all `n^{n-2}` Prüfer words are enumerated.
pub const COMPLETE_BRUTE_LIMIT: u32 = 9;
/// Largest `m + n` for the bipartite-filtered enumeration.
pub const BIPARTITE_BRUTE_LIMIT: u32 = 9;

/// A word of length `n - 2` over `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrueferSequence {
    word: Vec<u32>,
    n: u32,
}

impl PrueferSequence {
    pub fn new(word: Vec<u32>, n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter {
                name: "n",
                value: i128::from(n),
                reason: "Prüfer sequences need at least two vertices",
            });
        }
        let expected = n as usize - 2;
        if word.len() != expected {
            return Err(Error::PrueferLength {
                n,
                expected,
                got: word.len(),
            });
        }
        if let Some((index, &value)) = word.iter().enumerate().find(|(_, &v)| v == 0 || v > n) {
            return Err(Error::PrueferEntry { index, value, n });
        }
        Ok(PrueferSequence { word, n })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }
}

/// A labeled tree on `{1..vertex_count}`; edges are stored as sorted
/// `(low, high)` pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// `false` if `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

impl Tree {
    pub fn new(vertex_count: u32, edges: Vec<(u32, u32)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidTree("a tree needs at least one vertex"));
        }
        if edges.len() != vertex_count as usize - 1 {
            return Err(Error::InvalidTree(
                "edge count must be one less than vertex count",
            ));
        }
        let mut uf = UnionFind::new(vertex_count as usize + 1);
        let mut normalized = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::InvalidTree("edge endpoint out of range"));
            }
            if u == v {
                return Err(Error::InvalidTree("self-loop"));
            }
            if !uf.union(u as usize, v as usize) {
                return Err(Error::InvalidTree("cycle"));
            }
            normalized.push((u.min(v), u.max(v)));
        }
        let root = uf.find(1);
        if (2..=vertex_count as usize).any(|v| uf.find(v) != root) {
            return Err(Error::InvalidTree("disconnected"));
        }
        normalized.sort_unstable();
        Ok(Tree {
            vertex_count,
            edges: normalized,
        })
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    /// Degree of each vertex `1..=vertex_count`, in label order.
    pub fn degrees(&self) -> Vec<u32> {
        let mut degrees = vec![0; self.vertex_count as usize];
        for &(u, v) in &self.edges {
            degrees[u as usize - 1] += 1;
            degrees[v as usize - 1] += 1;
        }
        degrees
    }
}

/// Reusable scratch space for the linear-time Prüfer decoder.
struct Decoder {
    degree: Vec<u32>,
    edges: Vec<(u32, u32)>,
}

impl Decoder {
    fn new(n: u32) -> Self {
        Decoder {
            degree: vec![0; n as usize + 2],
            edges: Vec::with_capacity(n as usize),
        }
    }

    /// Joins the smallest current leaf to each letter in turn; the last two
    /// remaining vertices (one of them `n`) form the final edge.
    fn decode(&mut self, word: &[u32], n: u32) -> &[(u32, u32)] {
        let n = n as usize;
        self.edges.clear();
        let degree = &mut self.degree;
        degree[1..=n].iter_mut().for_each(|d| *d = 1);
        for &v in word {
            degree[v as usize] += 1;
        }
        let mut ptr = 1;
        while degree[ptr] != 1 {
            ptr += 1;
        }
        let mut leaf = ptr;
        for &v in word {
            let v = v as usize;
            self.edges.push((leaf as u32, v as u32));
            degree[v] -= 1;
            if degree[v] == 1 && v < ptr {
                leaf = v;
            } else {
                ptr += 1;
                while degree[ptr] != 1 {
                    ptr += 1;
                }
                leaf = ptr;
            }
        }
        self.edges.push((leaf as u32, n as u32));
        &self.edges
    }
}

/// The labeled tree encoded by `seq`.
pub fn pruefer_decode(seq: &PrueferSequence) -> Tree {
    let mut decoder = Decoder::new(seq.n);
    let edges = decoder.decode(&seq.word, seq.n).to_vec();
    Tree::new(seq.n, edges).expect("Prüfer decoding always yields a tree")
}

fn occurrence_degrees(word: &[u32], n: u32, out: &mut [u32]) {
    out[..n as usize].iter_mut().for_each(|d| *d = 1);
    for &v in word {
        out[v as usize - 1] += 1;
    }
}

/// Degrees of `pruefer_decode(seq)` without building the tree: each vertex
/// has degree one more than its number of occurrences.
pub fn degrees_from_pruefer(seq: &PrueferSequence) -> DegreeSequence {
    let mut degrees = vec![0; seq.n as usize];
    occurrence_degrees(&seq.word, seq.n, &mut degrees);
    DegreeSequence::new(degrees).expect("occurrence degrees are positive")
}

/// Folds `step` over every word of length `len` over `{1..n}`, splitting the
/// space by the first letter.
fn fold_words<A, I, S, M>(n: u32, len: usize, init: I, step: S, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    S: Fn(&mut A, &[u32]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    if len == 0 {
        let mut acc = init();
        step(&mut acc, &[]);
        return acc;
    }
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut acc = init();
            let mut word = vec![1u32; len];
            word[0] = first;
            loop {
                step(&mut acc, &word);
                // odometer over positions 1..len
                let mut pos = len - 1;
                loop {
                    if pos == 0 {
                        return acc;
                    }
                    if word[pos] < n {
                        word[pos] += 1;
                        break;
                    }
                    word[pos] = 1;
                    pos -= 1;
                }
            }
        })
        .reduce(&init, &merge)
}

/// Packs a degree list (entries below 16) into a hash key, four bits each.
fn pack(degrees: &[u32]) -> u64 {
    degrees
        .iter()
        .rev()
        .fold(0u64, |key, &d| (key << 4) | u64::from(d))
}

fn unpack(mut key: u64, len: usize) -> Vec<u32> {
    (0..len)
        .map(|_| {
            let d = (key & 0xF) as u32;
            key >>= 4;
            d
        })
        .collect()
}

fn merge_maps(mut a: HashMap<u64, u64>, b: HashMap<u64, u64>) -> HashMap<u64, u64> {
    if a.len() < b.len() {
        return merge_maps(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

fn check_complete_size(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter {
            name: "n",
            value: 0,
            reason: "must be at least 1",
        });
    }
    if n > COMPLETE_BRUTE_LIMIT {
        return Err(Error::SizeLimit {
            what: "complete-graph Prüfer enumeration size n",
            got: n as usize,
            limit: COMPLETE_BRUTE_LIMIT as usize,
        });
    }
    Ok(())
}

fn check_bipartite_size(m: u32, n: u32) -> Result<()> {
    for (name, value) in [("m", m), ("n", n)] {
        if value == 0 {
            return Err(Error::InvalidParameter {
                name,
                value: 0,
                reason: "must be at least 1",
            });
        }
    }
    if m + n > BIPARTITE_BRUTE_LIMIT {
        return Err(Error::SizeLimit {
            what: "bipartite Prüfer enumeration size m+n",
            got: (m + n) as usize,
            limit: BIPARTITE_BRUTE_LIMIT as usize,
        });
    }
    Ok(())
}

/// How many labeled trees on `{1..n}` have each degree profile, tallied over
/// all `n^{n-2}` Prüfer words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteHistogram {
    n: u32,
    words: u64,
    counts: BTreeMap<Vec<u32>, u64>,
}

impl CompleteHistogram {
    /// Number of Prüfer words visited.
    pub fn words_visited(&self) -> u64 {
        self.words
    }

    pub fn vertex_count(&self) -> u32 {
        self.n
    }

    /// Trees with exactly this degree profile.
    pub fn count(&self, degrees: &[u32]) -> Count {
        Count::from(self.counts.get(degrees).copied().unwrap_or(0))
    }

    pub fn count_where(&self, predicate: impl Fn(&[u32]) -> bool) -> Count {
        Count::from(
            self.counts
                .iter()
                .filter(|(d, _)| predicate(d))
                .map(|(_, &c)| c)
                .sum::<u64>(),
        )
    }

    pub fn total(&self) -> Count {
        self.count_where(|_| true)
    }

    pub fn profiles(&self) -> impl Iterator<Item = (&[u32], u64)> {
        self.counts.iter().map(|(d, &c)| (d.as_slice(), c))
    }
}

/// Enumerates all `n^{n-2}` Prüfer words once and tallies degree profiles.
/// `n = 1` yields the single profile `[0]`.
pub fn complete_degree_histogram(n: u32) -> Result<CompleteHistogram> {
    check_complete_size(n)?;
    if n == 1 {
        return Ok(CompleteHistogram {
            n,
            words: 0,
            counts: BTreeMap::from([(vec![0], 1)]),
        });
    }
    let len = n as usize - 2;
    let (words, raw, _) = fold_words(
        n,
        len,
        || (0u64, HashMap::new(), vec![0u32; n as usize]),
        |(words, map, scratch), word| {
            occurrence_degrees(word, n, scratch);
            *words += 1;
            *map.entry(pack(scratch)).or_insert(0u64) += 1;
        },
        |(w1, m1, s), (w2, m2, _)| (w1 + w2, merge_maps(m1, m2), s),
    );
    let counts = raw
        .into_iter()
        .map(|(k, c)| (unpack(k, n as usize), c))
        .collect();
    Ok(CompleteHistogram { n, words, counts })
}

/// Counts labeled trees on `{1..n}` whose degree list (in label order) is
/// accepted by `filter`, by enumerating all `n^{n-2}` Prüfer words. For
/// `n = 1` the filter sees the profile `[0]`.
pub fn count_trees_complete_brute<F>(n: u32, filter: F) -> Result<Count>
where
    F: Fn(&[u32]) -> bool + Sync + Send,
{
    check_complete_size(n)?;
    if n == 1 {
        return Ok(Count::from(u64::from(filter(&[0]))));
    }
    let accepted = fold_words(
        n,
        n as usize - 2,
        || (0u64, vec![0u32; n as usize]),
        |(count, scratch), word| {
            occurrence_degrees(word, n, scratch);
            if filter(scratch) {
                *count += 1;
            }
        },
        |(a, s), (b, _)| (a + b, s),
    )
    .0;
    Ok(Count::from(accepted))
}

/// Like [`count_trees_complete_brute`], but every word is fully decoded and
/// the filter sees the degrees of the decoded edge list. Returns
/// `(words decoded, trees accepted)`.
pub fn count_trees_complete_decoded<F>(n: u32, filter: F) -> Result<(u64, Count)>
where
    F: Fn(&[u32]) -> bool + Sync + Send,
{
    check_complete_size(n)?;
    if n == 1 {
        return Ok((0, Count::from(u64::from(filter(&[0])))));
    }
    let (words, accepted, _, _) = fold_words(
        n,
        n as usize - 2,
        || (0u64, 0u64, Decoder::new(n), vec![0u32; n as usize]),
        |(words, accepted, decoder, degrees), word| {
            *words += 1;
            degrees.iter_mut().for_each(|d| *d = 0);
            for &(u, v) in decoder.decode(word, n) {
                degrees[u as usize - 1] += 1;
                degrees[v as usize - 1] += 1;
            }
            if filter(degrees) {
                *accepted += 1;
            }
        },
        |(w1, a1, d, s), (w2, a2, _, _)| (w1 + w2, a1 + a2, d, s),
    );
    Ok((words, Count::from(accepted)))
}

/// Tally of the spanning trees of `K_{m,n}` by `(side_a, side_b)` degree
/// profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteHistogram {
    m: u32,
    n: u32,
    words: u64,
    decoded: u64,
    counts: BTreeMap<(Vec<u32>, Vec<u32>), u64>,
}

impl BipartiteHistogram {
    /// Prüfer words visited.
    pub fn words_visited(&self) -> u64 {
        self.words
    }

    /// Words that passed the degree-sum precheck and were fully decoded.
    pub fn words_decoded(&self) -> u64 {
        self.decoded
    }

    pub fn sizes(&self) -> (u32, u32) {
        (self.m, self.n)
    }

    pub fn count(&self, side_a: &[u32], side_b: &[u32]) -> Count {
        let key = (side_a.to_vec(), side_b.to_vec());
        Count::from(self.counts.get(&key).copied().unwrap_or(0))
    }

    pub fn count_where(&self, predicate: impl Fn(&[u32], &[u32]) -> bool) -> Count {
        Count::from(
            self.counts
                .iter()
                .filter(|((a, b), _)| predicate(a, b))
                .map(|(_, &c)| c)
                .sum::<u64>(),
        )
    }

    pub fn total(&self) -> Count {
        self.count_where(|_, _| true)
    }

    pub fn profiles(&self) -> impl Iterator<Item = (&[u32], &[u32], u64)> {
        self.counts
            .iter()
            .map(|((a, b), &c)| (a.as_slice(), b.as_slice(), c))
    }
}

struct BipartiteScratch {
    decoder: Decoder,
    degrees: Vec<u32>,
    words: u64,
    decoded: u64,
}

/// Visits every spanning tree of `K_{m,n}` by decoding all Prüfer words on
/// `m+n` vertices and discarding trees with an edge inside a side. `visit`
/// receives the full degree list in label order, side `A` first.
fn fold_bipartite_trees<A, V>(
    m: u32,
    n: u32,
    init: impl Fn() -> A + Sync + Send,
    visit: V,
    merge: impl Fn(A, A) -> A + Sync + Send,
) -> (A, u64, u64)
where
    A: Send,
    V: Fn(&mut A, &[u32]) + Sync + Send,
{
    let total = m + n;
    let in_a = |v: u32| v <= m;
    let edges_needed = u64::from(total - 1);
    let (acc, scratch) = fold_words(
        total,
        total as usize - 2,
        || {
            (
                init(),
                BipartiteScratch {
                    decoder: Decoder::new(total),
                    degrees: vec![0; total as usize],
                    words: 0,
                    decoded: 0,
                },
            )
        },
        |(acc, s), word| {
            s.words += 1;
            occurrence_degrees(word, total, &mut s.degrees);
            // every crossing edge has exactly one endpoint in A
            let a_sum: u64 = s.degrees[..m as usize].iter().map(|&d| u64::from(d)).sum();
            if a_sum != edges_needed {
                return;
            }
            s.decoded += 1;
            let crossing = s
                .decoder
                .decode(word, total)
                .iter()
                .all(|&(u, v)| in_a(u) != in_a(v));
            if crossing {
                visit(acc, &s.degrees);
            }
        },
        |(a1, s1), (a2, s2)| {
            (
                merge(a1, a2),
                BipartiteScratch {
                    words: s1.words + s2.words,
                    decoded: s1.decoded + s2.decoded,
                    ..s1
                },
            )
        },
    );
    (acc, scratch.words, scratch.decoded)
}

/// Enumerates the spanning trees of `K_{m,n}` once and tallies degree
/// profiles.
pub fn bipartite_degree_histogram(m: u32, n: u32) -> Result<BipartiteHistogram> {
    check_bipartite_size(m, n)?;
    let (raw, words, decoded) = fold_bipartite_trees(
        m,
        n,
        HashMap::new,
        |map: &mut HashMap<u64, u64>, degrees| {
            *map.entry(pack(degrees)).or_insert(0) += 1;
        },
        merge_maps,
    );
    let counts = raw
        .into_iter()
        .map(|(k, c)| {
            let mut a = unpack(k, (m + n) as usize);
            let b = a.split_off(m as usize);
            ((a, b), c)
        })
        .collect();
    Ok(BipartiteHistogram {
        m,
        n,
        words,
        decoded,
        counts,
    })
}

/// Counts spanning trees of `K_{m,n}` whose `(side_a, side_b)` degree
/// profile is accepted by `filter`. Sides are `A = {1..m}`, `B = {m+1..m+n}`.
pub fn count_trees_bipartite_brute<F>(m: u32, n: u32, filter: F) -> Result<Count>
where
    F: Fn(&[u32], &[u32]) -> bool + Sync + Send,
{
    check_bipartite_size(m, n)?;
    let (accepted, _, _) = fold_bipartite_trees(
        m,
        n,
        || 0u64,
        |count, degrees| {
            let (a, b) = degrees.split_at(m as usize);
            if filter(a, b) {
                *count += 1;
            }
        },
        |a, b| a + b,
    );
    Ok(Count::from(accepted))
}

/// A simple graph on `{1..vertex_count}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    vertex_count: u32,
    edges: BTreeSet<(u32, u32)>,
}

impl LabeledGraph {
    pub fn new(vertex_count: u32, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex"));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph("self-loop"));
            }
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(Error::InvalidGraph("edge endpoint out of range"));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph("duplicate edge"));
            }
        }
        Ok(LabeledGraph {
            vertex_count,
            edges: set,
        })
    }

    /// `K_n`. Panics on `n = 0`.
    pub fn complete(n: u32) -> Self {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        LabeledGraph::new(n, edges).expect("complete graph is simple")
    }

    /// `K_{m,n}` with side `A = {1..m}` and side `B = {m+1..m+n}`.
    pub fn complete_bipartite(m: u32, n: u32) -> Self {
        let edges = (1..=m).flat_map(|u| (m + 1..=m + n).map(move |v| (u, v)));
        LabeledGraph::new(m + n, edges).expect("complete bipartite graph is simple")
    }

    /// The cycle `1-2-...-n-1`, `n >= 3`.
    pub fn cycle(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph("a cycle needs at least three vertices"));
        }
        LabeledGraph::new(n, (1..=n).map(|u| (u, u % n + 1)))
    }

    pub fn path(n: u32) -> Result<Self> {
        LabeledGraph::new(n, (1..n).map(|u| (u, u + 1)))
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }
}

/// Determinant of a square integer matrix by Bareiss elimination; every
/// intermediate division is exact.
pub fn bareiss_determinant(mut matrix: Vec<Vec<BigInt>>) -> BigInt {
    let size = matrix.len();
    let mut negate = false;
    let mut previous = BigInt::one();
    for k in 0..size {
        if matrix[k][k].is_zero() {
            match (k + 1..size).find(|&r| !matrix[r][k].is_zero()) {
                Some(r) => {
                    matrix.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let value = &matrix[i][j] * &matrix[k][k] - &matrix[i][k] * &matrix[k][j];
                matrix[i][j] = value / &previous;
            }
        }
        previous = matrix[k][k].clone();
    }
    let det = if size == 0 {
        BigInt::one()
    } else {
        matrix[size - 1][size - 1].clone()
    };
    if negate {
        -det
    } else {
        det
    }
}

/// Number of spanning trees of `g`: the determinant of the Laplacian with
/// the row and column of vertex 1 removed.
pub fn matrix_tree_count(g: &LabeledGraph) -> Count {
    let size = g.vertex_count as usize - 1;
    let mut reduced = vec![vec![BigInt::zero(); size]; size];
    for (u, v) in g.edges() {
        // shift labels so vertex 2 is row 0
        let (iu, iv) = (u as usize, v as usize);
        for x in [iu, iv] {
            if x >= 2 {
                reduced[x - 2][x - 2] += 1;
            }
        }
        if iu >= 2 && iv >= 2 {
            reduced[iu - 2][iv - 2] -= 1;
            reduced[iv - 2][iu - 2] -= 1;
        }
    }
    let det = bareiss_determinant(reduced);
    Count::from(
        det.to_biguint()
            .expect("reduced Laplacian determinant is nonnegative"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::all_odd;
    use std::collections::HashSet;

    fn seq(word: &[u32], n: u32) -> PrueferSequence {
        PrueferSequence::new(word.to_vec(), n).unwrap()
    }

    fn all_words(n: u32) -> Vec<Vec<u32>> {
        fold_words(
            n,
            n as usize - 2,
            Vec::new,
            |acc: &mut Vec<Vec<u32>>, w| acc.push(w.to_vec()),
            |mut a, b| {
                a.extend(b);
                a
            },
        )
    }

    #[test]
    fn decode_examples() {
        assert_eq!(pruefer_decode(&seq(&[], 2)).edges(), &[(1, 2)]);
        assert_eq!(
            pruefer_decode(&seq(&[1, 1], 4)).edges(),
            &[(1, 2), (1, 3), (1, 4)]
        );
        assert_eq!(
            pruefer_decode(&seq(&[3, 3, 4], 5)).edges(),
            &[(1, 3), (2, 3), (3, 4), (4, 5)]
        );
    }

    #[test]
    fn degree_shortcut_examples() {
        assert_eq!(
            degrees_from_pruefer(&seq(&[1, 1], 4)).degrees(),
            &[3, 1, 1, 1]
        );
        assert_eq!(degrees_from_pruefer(&seq(&[], 2)).degrees(), &[1, 1]);
        assert_eq!(
            degrees_from_pruefer(&seq(&[3, 3, 4], 5)).degrees(),
            &[1, 1, 3, 2, 1]
        );
    }

    #[test]
    fn sequence_validation() {
        assert_eq!(
            PrueferSequence::new(vec![1], 4),
            Err(Error::PrueferLength {
                n: 4,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            PrueferSequence::new(vec![1, 5], 4),
            Err(Error::PrueferEntry {
                index: 1,
                value: 5,
                n: 4
            })
        );
        assert!(PrueferSequence::new(vec![0, 1], 4).is_err());
        assert!(PrueferSequence::new(vec![], 1).is_err());
    }

    #[test]
    fn decoding_is_a_bijection() {
        for n in 2..=7u32 {
            let words = all_words(n);
            assert_eq!(words.len() as u64, u64::from(n).pow(n - 2));
            let trees: HashSet<Tree> = words.iter().map(|w| pruefer_decode(&seq(w, n))).collect();
            assert_eq!(trees.len(), words.len(), "n={n}");
        }
    }

    #[test]
    fn degree_shortcut_matches_decoded_tree() {
        for n in 2..=6u32 {
            for w in all_words(n) {
                let s = seq(&w, n);
                assert_eq!(
                    degrees_from_pruefer(&s).degrees(),
                    pruefer_decode(&s).degrees()
                );
            }
        }
    }

    #[test]
    fn fast_decoder_matches_quadratic_reference() {
        // textbook decode: repeatedly remove the smallest leaf
        fn reference(word: &[u32], n: u32) -> Vec<(u32, u32)> {
            let mut degree = vec![1u32; n as usize + 1];
            for &v in word {
                degree[v as usize] += 1;
            }
            let mut edges = Vec::new();
            for &v in word {
                let leaf = (1..=n).find(|&u| degree[u as usize] == 1).unwrap();
                edges.push((leaf.min(v), leaf.max(v)));
                degree[leaf as usize] = 0;
                degree[v as usize] -= 1;
            }
            let rest: Vec<u32> = (1..=n).filter(|&u| degree[u as usize] == 1).collect();
            edges.push((rest[0], rest[1]));
            edges.sort_unstable();
            edges
        }
        for n in 2..=7u32 {
            for w in all_words(n) {
                assert_eq!(
                    pruefer_decode(&seq(&w, n)).edges(),
                    reference(&w, n).as_slice()
                );
            }
        }
    }

    #[test]
    fn tree_invariants_are_enforced() {
        assert!(Tree::new(3, vec![(1, 2), (2, 3)]).is_ok());
        assert_eq!(
            Tree::new(3, vec![(1, 2)]),
            Err(Error::InvalidTree(
                "edge count must be one less than vertex count"
            ))
        );
        assert_eq!(
            Tree::new(4, vec![(1, 2), (2, 1), (3, 4)]),
            Err(Error::InvalidTree("cycle"))
        );
        assert_eq!(
            Tree::new(3, vec![(1, 1), (2, 3)]),
            Err(Error::InvalidTree("self-loop"))
        );
        assert!(Tree::new(3, vec![(1, 2), (2, 4)]).is_err());
        assert_eq!(Tree::new(1, vec![]).unwrap().degrees(), vec![0]);
    }

    #[test]
    fn complete_brute_examples() {
        assert_eq!(count_trees_complete_brute(4, all_odd).unwrap(), 4);
        assert_eq!(count_trees_complete_brute(4, |_| true).unwrap(), 16);
        assert_eq!(
            count_trees_complete_brute(4, |d| d == [2, 2, 1, 1]).unwrap(),
            2
        );
        assert_eq!(count_trees_complete_brute(1, |_| true).unwrap(), 1);
        assert_eq!(count_trees_complete_brute(1, all_odd).unwrap(), 0);
        assert!(matches!(
            count_trees_complete_brute(10, |_| true),
            Err(Error::SizeLimit {
                got: 10,
                limit: 9,
                ..
            })
        ));
        assert!(count_trees_complete_brute(0, |_| true).is_err());
    }

    #[test]
    fn decoded_sweep_matches_degree_shortcut() {
        for n in 1..=7 {
            let (words, odd) = count_trees_complete_decoded(n, all_odd).unwrap();
            assert_eq!(odd, count_trees_complete_brute(n, all_odd).unwrap());
            if n >= 2 {
                assert_eq!(words, u64::from(n).pow(n - 2));
            }
        }
        assert_eq!(
            count_trees_complete_decoded(4, |_| true).unwrap(),
            (16, Count::from(16u64))
        );
    }

    #[test]
    fn bipartite_brute_examples() {
        assert_eq!(count_trees_bipartite_brute(2, 3, |_, _| true).unwrap(), 12);
        assert_eq!(
            count_trees_bipartite_brute(3, 3, |a, b| all_odd(a) && all_odd(b)).unwrap(),
            9
        );
        assert_eq!(count_trees_bipartite_brute(1, 1, |_, _| true).unwrap(), 1);
        assert_eq!(
            count_trees_bipartite_brute(2, 3, |a, b| a == [2, 2] && b == [2, 1, 1]).unwrap(),
            2
        );
        assert!(matches!(
            count_trees_bipartite_brute(5, 5, |_, _| true),
            Err(Error::SizeLimit { got: 10, .. })
        ));
    }

    #[test]
    fn bipartite_filter_without_precheck_agrees() {
        // decode every word with no degree-sum shortcut
        for (m, n) in [(1, 3), (2, 2), (2, 3), (3, 3), (2, 4)] {
            let total = m + n;
            let mut decoder = Decoder::new(total);
            let crossing = all_words(total)
                .iter()
                .filter(|w| {
                    decoder
                        .decode(w, total)
                        .iter()
                        .all(|&(u, v)| (u <= m) != (v <= m))
                })
                .count() as u64;
            assert_eq!(
                count_trees_bipartite_brute(m, n, |_, _| true).unwrap(),
                crossing
            );
        }
    }

    #[test]
    fn histograms_agree_with_filters() {
        let h = complete_degree_histogram(6).unwrap();
        assert_eq!(h.words_visited(), 1296);
        assert_eq!(h.total(), 1296);
        assert_eq!(h.count_where(all_odd), 96);
        assert_eq!(h.count(&[5, 1, 1, 1, 1, 1]), 1);
        let b = bipartite_degree_histogram(2, 3).unwrap();
        assert_eq!(b.words_visited(), 125);
        assert_eq!(b.total(), 12);
        assert_eq!(b.count(&[2, 2], &[2, 1, 1]), 2);
        assert_eq!(b.count(&[2, 1], &[2, 1, 1]), 0);
        let k1 = complete_degree_histogram(1).unwrap();
        assert_eq!(k1.total(), 1);
        assert_eq!(k1.count_where(all_odd), 0);
    }

    #[test]
    fn matrix_tree_examples() {
        assert_eq!(matrix_tree_count(&LabeledGraph::path(3).unwrap()), 1);
        assert_eq!(matrix_tree_count(&LabeledGraph::cycle(4).unwrap()), 4);
        assert_eq!(matrix_tree_count(&LabeledGraph::complete(5)), 125);
        assert_eq!(matrix_tree_count(&LabeledGraph::complete(1)), 1);
        let disconnected = LabeledGraph::new(4, [(1, 2), (3, 4)]).unwrap();
        assert_eq!(matrix_tree_count(&disconnected), 0);
        for n in 3..=9 {
            assert_eq!(
                matrix_tree_count(&LabeledGraph::cycle(n).unwrap()),
                u64::from(n)
            );
        }
    }

    #[test]
    fn bareiss_handles_pivoting() {
        let m = |rows: &[&[i64]]| -> Vec<Vec<BigInt>> {
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect()
        };
        assert_eq!(
            bareiss_determinant(m(&[&[0, 1], &[1, 0]])),
            BigInt::from(-1)
        );
        assert_eq!(
            bareiss_determinant(m(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]])),
            BigInt::from(4)
        );
        assert_eq!(
            bareiss_determinant(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]])),
            BigInt::zero()
        );
        assert_eq!(bareiss_determinant(vec![]), BigInt::one());
    }

    #[test]
    fn graph_validation() {
        assert_eq!(
            LabeledGraph::new(3, [(1, 1)]),
            Err(Error::InvalidGraph("self-loop"))
        );
        assert_eq!(
            LabeledGraph::new(3, [(1, 2), (2, 1)]),
            Err(Error::InvalidGraph("duplicate edge"))
        );
        assert!(LabeledGraph::new(0, []).is_err());
        assert!(LabeledGraph::new(3, [(1, 4)]).is_err());
        assert_eq!(LabeledGraph::complete_bipartite(2, 3).edge_count(), 6);
    }
}

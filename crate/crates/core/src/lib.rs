//! Exact counting of labeled spanning trees of complete graphs `K_n` and
//! complete bipartite graphs `K_{m,n}`: unrestricted counts, counts with a
//! prescribed degree for every vertex, and counts of odd spanning trees
//! (every vertex of odd degree).
//!
//! Every closed form is available in two algebraically independent shapes
//! (a binomial sum over the sign hypercube and a sum of multinomial
//! coefficients over even compositions), and the [`oracles`] module supplies
//! brute-force ground truth by Prüfer enumeration and by the Matrix-Tree
//! determinant.
//!
//! All arithmetic is exact; counts are arbitrary-precision integers.

pub mod arith;
pub mod closed_forms;
pub mod degrees;
mod error;
pub mod oracles;
pub mod sign_sum;

pub use arith::{Count, SignedSum};
pub use closed_forms::GraphFamily;
pub use degrees::{BipartiteDegreeSpec, DegreeSequence};
pub use error::{Error, Result};

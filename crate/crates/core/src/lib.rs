//! Exact graded Betti numbers of edge ideals of circulant graphs.
//!
//! The crate builds the three circulant families
//! `C_n(1,..,^j,..,n/2)`, `C_lm(1,..,^2l,..,^3l,..)` and
//! `C_lm(1,..,^l,..,^2l,..)`, computes the graded Betti numbers of their edge
//! ideals both by brute force (Hochster's formula over exact simplicial
//! homology) and by closed-form formulas, and decides the usual combinatorial
//! properties of their independence complexes (well-covered, Cohen-Macaulay,
//! Buchsbaum, vertex decomposable, shellable, sequentially Cohen-Macaulay,
//! Serre's `S2`).
//!
//! ```
//! use circbetti::{betti, graph::Graph, homology::FieldSpec};
//!
//! let c5 = Graph::cycle(5).unwrap();
//! let table = betti::betti_hochster(&c5, FieldSpec::Rationals).unwrap();
//! assert_eq!(table.get_u64(3, 5), 1);
//! assert_eq!(table.regularity(), 2);
//! ```

pub mod betti;
mod bits;
pub mod complex;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod homology;
pub mod properties;

pub use error::{Error, Result};

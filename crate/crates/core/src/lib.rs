//! Distance spectral radius of uniform hypergraphs.
//!
//! * [`hypergraph`]: validated hypergraphs and their combinatorial predicates;
//! * [`uhg`]: the `.uhg` text format and the JSON mirror;
//! * [`spectral`]: distance matrices and the Perron pair by power iteration;
//! * [`families`]: loose paths, hyperstars, brooms, `F_{n,k}`, double brooms
//!   and the pendant/edge-split constructions;
//! * [`grafts`]: edge moving and the three graft transformations with
//!   numerical verdicts;
//! * [`canon`]: canonical forms, isomorphism, orbits and hypertree generation;
//! * [`extremal`]: reproduces the extremal orderings over enumerated hypertrees;
//! * [`cli`]: the `hyperspec` command line.

pub mod canon;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod families;
pub mod grafts;
pub mod hypergraph;
pub mod numfmt;
pub mod spectral;
pub mod uhg;

pub use error::{Error, Result};
pub use hypergraph::{ComponentPartition, Hypergraph};
pub use spectral::{PowerConfig, SpectralResult};

//! Classical and persistent graded Betti numbers of edge ideals of graph and
//! hypergraph filtrations, computed through the Hochster correspondence
//! between multigraded Betti numbers and reduced (co)homology of induced
//! subcomplexes.
//!
//! The crate covers:
//!
//! * [`complexes`] — graphs, hypergraphs, simplicial complexes, monomial
//!   ideals, filtrations, and the constructions connecting them
//!   (independence complex, Stanley–Reisner correspondence, vertex splits);
//! * [`homology`] — reduced homology dimensions over GF(2), GF(p), or the
//!   rationals, and ranks of inclusion-induced maps;
//! * [`betti`] — classical, multigraded, and persistent Betti tables, the
//!   upper-Koszul oracle for arbitrary monomial ideals, and the
//!   connected-component fast path;
//! * [`splitting`] — Betti splitting verification, classical and persistent;
//! * [`covers`] — minimal vertex covers, minimal primes, and the
//!   persistent-minimal-prime barcode;
//! * [`pipelines`] — alignment-free genome featurization/classification and
//!   molecular isomer curves from 3D coordinates;
//! * [`cli`] — the `edge-ideals` binary.
//!
//! # Example
//!
//! ```
//! use edge_ideals::{
//!     betti::{betti_table_quotient, DEFAULT_BUDGET},
//!     complexes::{independence_complex, Hypergraph},
//!     field::Field,
//! };
//!
//! // The path 1 - 2 - 3: S/I(P3) resolves as β_{0,0}=1, β_{1,2}=2, β_{2,3}=1.
//! let p3 = Hypergraph::path(3).unwrap();
//! let ind = independence_complex(&p3);
//! let table = betti_table_quotient(&ind, Field::GF2, 8, 8, DEFAULT_BUDGET, false).unwrap();
//! assert_eq!(table.get(1, 2), 2);
//! assert_eq!(table.get(2, 3), 1);
//! ```
//!
//! Runnable walkthroughs for each capability live in the `examples/`
//! directory; `cargo run --example betti_tables` is a good starting point.

pub mod betti;
pub mod bitset;
pub mod cli;
pub mod complexes;
pub mod covers;
pub mod error;
pub mod field;
pub mod homology;
pub mod io;
pub mod pipelines;
pub mod splitting;
pub mod unionfind;

mod linalg;
mod transversal;

pub use bitset::VertexSet;
pub use complexes::{Hypergraph, HypergraphFiltration, MonomialIdeal, SimplicialComplex};
pub use error::{Error, Result};
pub use field::Field;

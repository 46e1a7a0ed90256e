//! Equivariant covers of finite spaces.
//!
//! Two kinds of finite space are supported: finite posets carrying their
//! Alexandrov topology (open sets are up-sets) and finite metric spaces with
//! rational distances, sampled at a resolution `rho`. A finite group acts on
//! either by automorphisms. On top of that the crate builds
//!
//! - orbit spaces and projection certificates ([`group`]),
//! - equivariant refinements of bounded dimension ([`refine`]),
//! - nerves, barycentric subdivisions, canonical star covers and their
//!   pull-backs ([`nerve`]),
//! - a graded cover pipeline with a seven-property certificate ([`pipeline`]).
//!
//! Every construction returns its result together with a certificate that can
//! be checked without trusting the construction.
//!
//! ```
//! use equicover::group::{Action, PermGroup};
//! use equicover::metric::FiniteMetricSpace;
//! use equicover::rational::int;
//! use equicover::sets::Space;
//!
//! let z6 = FiniteMetricSpace::cycle(6, int(1)).unwrap();
//! let rot = PermGroup::generated(6, vec![vec![3, 4, 5, 0, 1, 2]], 120).unwrap();
//! let action = Action::new(rot, z6).unwrap();
//! let q = equicover::group::quotient_metric(&action).unwrap();
//! assert_eq!(q.space.len(), 3);
//! ```

pub mod cli;
pub mod cover;
pub mod error;
pub mod generate;
pub mod group;
pub mod io;
pub mod metric;
pub mod nerve;
pub mod pipeline;
pub mod poset;
pub mod rational;
pub mod refine;
pub mod search;
pub mod sets;

pub use cover::Cover;
pub use error::{Error, ErrorKind, Result};
pub use group::{Action, PermGroup};
pub use metric::FiniteMetricSpace;
pub use poset::FinitePoset;
pub use sets::{PointSet, SampledSet, Space};

//! Eccentric connectivity index of strongly connected digraphs under the
//! maximum-distance metric `md(u, v) = max(d(u, v), d(v, u))`.
//!
//! ```
//! use ecci::families::{fixture, FixtureId};
//! let xi = ecci::index::ecci_digraph(&fixture(FixtureId::Fig1)).unwrap();
//! assert_eq!(xi.to_string(), "8");
//! ```

pub mod cli;
pub mod digraph;
pub mod error;
pub mod extremal;
pub mod families;
pub mod index;
pub mod io;
pub mod metrics;
pub mod random;

pub use digraph::{Digraph, UndirectedGraph};
pub use error::{Error, Result};
pub use index::XiValue;

//! Horadam cubes `Π^{a,b}_n`: graphs on words over `{0, .., a+b-1}` in which
//! every letter `>= a` directly follows a `0`, with edges between words that
//! differ by one in a single position.
//!
//! The crate enumerates the vertices, builds the graph, evaluates the
//! counting sequences (vertices, edges, degree distribution, induced
//! subcubes) exactly, checks the structural decompositions, and constructs
//! Hamiltonian paths and cycles.

pub mod error;
pub mod exec;
pub mod graph;
pub mod hamilton;
pub mod limits;
pub mod oracle;
pub mod sequences;
pub mod series;
pub mod structure;
pub mod words;

pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{build_graph, HoradamGraph};
pub use limits::Limits;
pub use words::{Params, Word};

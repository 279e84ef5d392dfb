//! Constructive Brooks colorings, list colorings via kernel-perfect
//! orientations, and the brute-force oracles that check them.
//!
//! Every algorithm returns a certificate (a coloring, an orientation, a
//! kernel or a violating vertex set) that can be re-checked independently.
//! Graphs are simple and undirected, with vertices `0..n`.

pub mod brooks;
pub mod choosability;
pub mod coloring;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kernels;
pub mod oracles;
pub mod orientations;

pub use coloring::{Coloring, ListAssignment};
pub use error::{Error, Result};
pub use graph::{Digraph, Graph, VertexSet};

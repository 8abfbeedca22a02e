//! Shortest path reconfiguration graphs.
//!
//! For a graph `G` with distinct vertices `a` and `b`, the shortest path
//! graph `S(G, a, b)` has one vertex per shortest `a,b`-path, and two paths
//! are adjacent when they differ in exactly one position. This crate builds
//! these graphs, generates the base-graph families whose shortest path
//! graphs are known (paths, cliques, even cycles, hypercubes, grids, sums),
//! and checks the structural properties every shortest path graph has.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod geodesics;
pub mod graph;
pub mod grid;
pub mod induced;
pub mod iso;
pub mod spg;
pub mod verify;

pub use error::{Error, Result};
pub use geodesics::{Geodesic, GeodesicDag, ReducedInstance, DEFAULT_GEODESIC_LIMIT};
pub use graph::{BaseInstance, Graph};
pub use spg::SpGraph;

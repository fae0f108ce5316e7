//! Single-source shortest paths where the length of a path is an arbitrary
//! path function.
//!
//! A [`PathFunction`] gives a value to `(s,s)` and a rule for extending a
//! path by one road. The engines find, for every vertex reachable inside a
//! [`PathSystem`], a path of minimum value, provided the function has the
//! structural properties each engine relies on:
//!
//! * [`engines::eda`] (extended Dijkstra): SOPSP, WISP, NDSP.
//! * [`engines::embfa`] (extended Moore-Bellman-Ford): OP, no negative circles.
//!
//! The [`verify`] module brute-forces true minima on small graphs and checks
//! the properties empirically.

pub mod builtin;
pub mod detour;
pub mod engines;
pub mod error;
pub mod format;
pub mod function;
pub mod generate;
pub mod graph;
pub mod path;
pub mod value;
pub mod verify;

pub use builtin::{anti_risk, blocked_cost, classic_distance, expected_cost, Builtin};
pub use detour::DetourTable;
pub use engines::{dijkstra_classic, eda, embfa, sta, Gate, RunStats, ShortestPathTree, Solution};
pub use format::{parse_graph, serialize_graph};
pub use function::{path_value, PathFunction, Property, PropertySet};
pub use generate::{generate_random, GenMode, GenParams};
pub use graph::{Graph, GraphBuilder, Road, RoadKey, VertexId};
pub use path::{Path, PathSystem, SystemKind};
pub use value::ExtReal;

//! Test support for the workspace: exhaustive path-enumeration oracles
//! that recompute path-based measures from first principles, plus the
//! small graph families used by counterexample and continuity tests.
//!
//! Nothing here shares code with the shortest-path machinery under test:
//! the oracles enumerate simple paths directly.

pub mod families;
pub mod oracle;

pub use families::{random_digraph, random_undirected, two_node_pair, two_route_gadget, undirected};
pub use oracle::PathOracle;

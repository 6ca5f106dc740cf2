//! Solvers for edge-deletion problems that forbid a family of subgraphs,
//! with special support for capping every connected component at `h`
//! vertices.
//!
//! * [`graph`]: graphs, components, twin classes, vertex covers
//! * [`io`]: the plain-text edge-list format
//! * [`forbidden`]: forbidden-family descriptors and containment checks
//! * [`kernel`]: the small-component reduction and its size bounds
//! * [`exact`]: exhaustive oracle and bounded search tree
//! * [`vc`]: exact solver parameterized by vertex cover (partition + integer program)
//! * [`reduction`]: generators for the orientation and hitting-set reductions

pub mod exact;
pub mod forbidden;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod reduction;
pub mod vc;

pub use exact::{brute_force_min, branch_cap, branch_cap_min, verify, Outcome, SearchError, Solution};
pub use forbidden::{family_free, FamilyChecker, Forbidden, ForbiddenFamily};
pub use graph::{connected_components, Edge, Graph, Orientation, WeightedGraph};
pub use kernel::{kernelize, KernelResult, Verdict};

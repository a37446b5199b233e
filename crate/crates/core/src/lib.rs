//! Induced minor containment for small fixed patterns.

pub mod bitset;
pub mod catalog;
pub mod dispatch;
pub mod enumerate;
pub mod graph;
pub mod io;
pub mod model;
pub mod oracle;
pub mod solvers;

pub use bitset::VertexSet;
pub use graph::{ContractionTrace, Graph, GraphError};
pub use model::{extends, lift_through_trace, shrink_small_degree_bag, straighten_path_bags, verify_model, Answer, Method, Model, ModelError, Premodel, Violation, Witness};
pub use oracle::{clique_minor_test, induced_minor_exhaustive, induced_subgraph_search, rooted_clique_minor, OracleConfig, OracleError};
pub use catalog::{classify, named_graph, PatternClass};
pub use solvers::{SolveError, SolverConfig};
pub use dispatch::{dispatch, Algorithm, Config};

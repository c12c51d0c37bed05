//! Exact tooling around the quantifier depth `D[F]` of first-order sentences
//! expressing "contains an induced subgraph isomorphic to F": graph
//! constructions, a first-order evaluator and formula synthesizers, an exact
//! Ehrenfeucht-Fraisse game solver with scripted Duplicator policies, and
//! machine-checkable certificates for lower and upper bounds.

pub mod graph;
pub mod cert;
pub mod game;
pub mod logic;

pub use cert::CertError;
pub use game::GameError;
pub use graph::{Graph, GraphError};
pub use logic::{Formula, LogicError};

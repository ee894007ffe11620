//! Binary polynomial optimization over cost-weighted hypergraphs.
//!
//! The toolkit classifies a hypergraph into the acyclicity hierarchy
//! (Berge ⊂ gamma ⊂ beta ⊂ alpha), builds the strongest applicable LP or
//! extended formulation for its multilinear polytope, solves it with an
//! exact rational simplex, and cross-checks every formulation against
//! brute-force polyhedral oracles at desk scale.

pub mod acyclicity;
pub mod exactlp;
pub mod extform;
pub mod guards;
pub mod hypergraph;
pub mod io;
pub mod oracle;
pub mod pipeline;
pub mod relaxations;
pub mod verify;

pub use guards::Guards;
pub use hypergraph::{Edge, Hypergraph, Instance, Node};

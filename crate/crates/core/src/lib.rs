pub mod bounds;
pub mod catalog;
pub mod graph;
pub mod independence;
pub mod io;
pub mod lexproduct;
pub mod registry;
pub mod solver;

pub use bounds::{BoundError, BoundReport, BoundSource, BoundTerms, Exactness};
pub use graph::{Distance, DistanceMatrix, Family, Graph, GraphError, VertexSet};
pub use lexproduct::ProductGraph;
pub use registry::{BoundRegistry, BoundRule, Construction, ConstructionRegistry, LexPair};
pub use solver::{Budget, PackingColoring, SearchOutcome, SolveResult, Verdict};

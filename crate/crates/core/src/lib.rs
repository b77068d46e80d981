//! Rainbow decompositions of edge-colored multigraphs.
//!
//! A connected multigraph on `n` vertices, edge-colored with `n - 1` colors so
//! that every color class induces a spanning star (or tree, or path), can
//! sometimes be re-partitioned into `n - 1` edge-disjoint *rainbow* spanning
//! subgraphs of the same kind. This crate provides:
//!
//! * domain types for colored multigraphs, star configurations and certified
//!   rainbow collections ([`graph`], [`star`], [`collection`]);
//! * the four constructive decompositions for stars with all-distinct centers,
//!   a single shared center, centers on two vertices, and identical tree
//!   copies driven by a Latin square ([`construct`]);
//! * an exhaustive backtracking oracle that finds, counts, or enumerates all
//!   decompositions of a requested shape ([`search`]);
//! * exact counting of Latin squares and of star-decomposition collections by
//!   three independent routes: reduced-square backtracking, direct
//!   enumeration, and a permanent-based inclusion-exclusion formula
//!   ([`latin`]);
//! * a JSON graph file format plus DOT export ([`io`]) and the bundled
//!   example graphs used throughout the test suite ([`fixtures`]).
//!
//! All types are immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.

pub mod collection;
pub mod construct;
pub mod fixtures;
pub mod graph;
pub mod io;
pub mod latin;
pub mod search;
pub mod star;
mod util;

pub use collection::{DecompositionError, RainbowCollection, RainbowSubgraph, Shape};
pub use construct::{
    construct_different_centers, construct_identical_trees, construct_same_center,
    construct_two_centers, ConstructError, TwoCenterConfig,
};
pub use graph::{
    validate_graph, ClassReport, ClassShape, ColorClass, ColorId, ColoredEdge, ColoredMultigraph,
    EdgeId, GraphError, ValidationReport, VertexId,
};
pub use io::GraphDocument;
pub use latin::{LatinError, LatinSquare, SlotOrder, ZeroOneMatrix};
pub use search::{
    count_rainbow_star_decompositions_fast, search_decompositions, stars_to_stars_feasible,
    CountError, SearchError, SearchMode, SearchReport, SearchRequest,
};
pub use star::{CenterArrangement, StarConfigError, StarConfiguration, VertexDegrees};

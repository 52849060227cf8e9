//! Regular graphs in which every edge lies in a triangle.
//!
//! - [`graph`]: multigraphs with edge multiplicities and loops.
//! - [`triangles`]: triangle inventory and the triangle property.
//! - [`bounds`]: lower bounds on triangle counts and the optimality check.
//! - [`construct`]: the `L_n` family, line graphs, triangle augmentation,
//!   one-factor doubling and named graphs.
//! - [`diamond`]: diamond decompositions of optimal quintic graphs and the
//!   even cycle decompositions that describe them.
//! - [`removability`]: removable edges.
//! - [`search`]: exhaustive census of small regular graphs.
//! - [`canon`], [`io`], [`matching`]: canonical forms, text formats,
//!   maximum matching.

pub mod bounds;
pub mod canon;
pub mod cli;
pub mod construct;
pub mod diamond;
pub mod error;
pub mod graph;
pub mod io;
pub mod matching;
pub mod removability;
pub mod search;
pub mod triangles;

pub use bounds::{is_optimal, lower_bound_triangles, min_two_triangle_edges};
pub use canon::{are_isomorphic, canonical_form, canonical_labeling};
pub use construct::{
    augment_with_triangles, construct_ln, double_one_factor, line_graph, optimal_quartic_from_cubic,
    petersen_six_regular, seven_regular_from_l3j, NamedGraph,
};
pub use diamond::{
    contract_diamonds, enumerate_ecds, extract_ecd, find_diamond_decomposition, synthesize_quintic,
    validate_ecd, EvenCycleDecomposition,
};
pub use error::{Error, Result};
pub use graph::{EdgeKey, MultiGraph, Vertex};
pub use removability::{classify_edges, is_edge_removable, verify_theorem3, EdgeClassification};
pub use search::{enumerate_regular_graphs, ingest_graph6_stream, scan_optimal};
pub use triangles::{
    enumerate_triangles, has_triangle_property_direct, has_triangle_property_lemma, TriangleReport,
};

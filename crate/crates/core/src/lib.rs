//! Exact Ehrhart series of graph and hypergraph polytopes.
//!
//! For a hypergraph `H` on `k` vertices with incidence matrix `A`, the
//! polytope `P(H) = { x >= 0 : A x <= 1 }` is built, its vertices are
//! enumerated exactly, lattice points in its dilations are counted, and the
//! generating function `Σ ehr(P, n) x^n` is recovered as a rational function
//! in lowest terms. Structural checks (palindromic numerators, reciprocity,
//! denominator shapes, unimodularity and integrality) run on the result.
//!
//! ```
//! use ehrgraph::{analyze, parse_hypergraph, AnalysisOptions};
//!
//! let h = parse_hypergraph("vertices: 2\nedge: 1 2\n").unwrap();
//! let a = analyze(&h, &AnalysisOptions::default()).unwrap();
//! assert_eq!(a.series.num().to_string(), "1");
//! assert_eq!(a.normalized_volume.to_string(), "1/2");
//! ```

pub mod analysis;
pub mod cli;
pub mod counting;
pub mod error;
pub mod exact;
pub mod generate;
pub mod hypergraph;
pub mod poly;
pub mod polytope;
pub mod report;
pub mod series;
pub mod unimodular;

pub use analysis::{analyze, AnalysisOptions, EhrhartAnalysis};
pub use counting::{count_dilation, count_naive, count_sequence, CountSequence};
pub use error::{Error, Result};
pub use generate::{generate_family, Family};
pub use hypergraph::{incidence_matrix, parse_hypergraph, validate, Hypergraph, HypergraphProperties, IncidenceMatrix};
pub use poly::Poly;
pub use polytope::{build_polytope, enumerate_vertices, is_integral, vertex_denominators, HRep, RationalPoint, VertexSet};
pub use series::{
    candidate_denominator, check_reciprocity, denominator_shape, fit_series, graph_report,
    is_palindromic, normalized_volume, reduce_lowest_terms, uniform_report, DenominatorShape,
    RationalFunction, Verdict,
};
pub use unimodular::{is_totally_unimodular, TuVerdict, Witness};

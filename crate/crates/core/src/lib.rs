//! Exact spectral graph theory at desk scale.
//!
//! Small simple graphs ([`Graph`]), their adjacency, Laplacian and signless
//! Laplacian characteristic polynomials in exact integer arithmetic,
//! certified real-root comparisons, canonical labeling, and isomorph-free
//! enumeration with declarative filters.

pub mod canon;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod limits;
pub mod linalg;
pub mod spectra;

pub use canon::{canonical_form, canonicalize, is_isomorphic, Canon, CanonKey};
pub use enumerate::{count, enumerate, realizations, EnumerationFilter, SpectralPredicate};
pub use error::{Error, Result};
pub use family::{build, parse_family, parse_graph, Expr, FamilySpec};
pub use format::{from_graph6, from_sparse6, parse_any, to_graph6, to_sparse6};
pub use graph::{ComponentFacts, Graph, StructureFacts, VertexSet};
pub use limits::{Limits, MAX_ORDER};
pub use linalg::{compare_root, isolate_real_roots, IntMatrix, IntPoly, RealRoot, RootIsolation};
pub use spectra::{are_cospectral, charpoly, matrix, spectrum, MatrixKind, SpectrumReport};

//! Exact computation of even, odd and full Kauffman bracket ideals of genus-1
//! tangles.
//!
//! The pipeline has two independent paths that are required to agree:
//! a diagrammatic one (annular state sums glued into planar links) and a
//! recoupling one (graph-basis coefficients paired against the relative
//! bases through closed formulas).

pub mod bases;
pub mod catalog;
pub mod diagram;
pub mod error;
pub mod ideals;
pub mod laurent;
pub mod pairing;
pub mod recoupling;
pub mod verify;

pub use bases::{basis_element, change_of_basis_matrix, q_poly, s_poly, BasisKind, GraphIndex, PolyInZ2};
pub use catalog::{entry, load, CatalogEntry, CatalogName};
pub use diagram::{
    close, kauffman_bracket, parity_split, reduce_tangle, ArcType, BasisElement, ClosureSpec,
    LinkDiagram, SkeinVector, TangleDiagram,
};
pub use error::{CatalogError, DiagramError, IdealError, LaurentError, PairingError, RecouplingError};
pub use ideals::{
    even_ideal, full_ideal, ideal_equal, is_trivial, link_determinant, membership, odd_ideal, omega, omega_contract,
    CyclotomicInt, LaurentIdeal,
};
pub use laurent::{delta, phi, reduce_by_delta, LaurentPoly, RationalFunction};
pub use pairing::{hopf_pair, pair_graph_with_basis, solve_graph_coefficients, worked_sum, GraphCoeffs};
pub use recoupling::{is_admissible, quantum_delta, tet, theta, tl_evaluate, twist_lambda, Color};

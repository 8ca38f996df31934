//! Virtual knots as Gauss diagrams.
//!
//! A diagram is a based circle of chord endpoints; each chord runs from its
//! initial (over) endpoint to its terminal (under) endpoint and carries a
//! sign. On top of that model the crate provides the n-writhe invariants,
//! Reidemeister, Ξ- and 2k-moves with replayable scripts, classification
//! modulo 2k-moves and Ξ-moves, and bounds on 2k-move distance.
//!
//! ```
//! use vknot_core::{odd_writhe, GaussDiagram};
//!
//! let trefoil: GaussDiagram = "O1+ O2+ U1+ U2+".parse().unwrap();
//! assert_eq!(odd_writhe(&trefoil), 2);
//! ```

pub mod classify;
pub mod cli;
pub mod distance;
pub mod error;
pub mod gauss;
pub mod invariants;
pub mod laurent;
pub mod moves;

pub use classify::{
    classify_2k_xi, normal_form_diagram, representative_system, same_class_2k_xi, separating_k,
    xi_equivalent, NormalForm,
};
pub use distance::{
    exact_distance, lower_bound_2k, search_upper_bound, unknotting_lower_bound, witness_construction,
    Budget, DistanceBound, LowerBound,
};
pub use error::{GaussError, InvariantError, MoveError, ParamError};
pub use gauss::{ChordId, Endpoint, GaussDiagram, Role, Sign};
pub use invariants::{
    affine_index_polynomial, chord_index, chord_indices, endpoint_sign, n_writhe, odd_writhe,
    writhe_vector, InvariantReport, WritheVector,
};
pub use laurent::LaurentPolynomial;
pub use moves::{apply_move, ChordLayout, Move, MoveKind, MoveScript, TwoKSite};

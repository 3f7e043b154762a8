//! Eulerian tours, the category of graphs with a chosen tour, and the two
//! fibrations relating it to bypass operations and to `Λ`.
//!
//! A [`Tour`] is an object of the tour category: a nonempty graph with a
//! cyclic ordering of its edges forming one closed walk. Bypass operations
//! pull tours back ([`pullback_tour`]), which makes the set of tours a
//! presheaf `Eul` on nonempty graphs. Forgetting the labels sends a tour on
//! `m` edges to `T_{m−1}` and a tour-compatible bypass operation to a
//! [`LambdaArrow`] in the reverse direction ([`to_lambda_arrow`]).

mod fibration;
mod tours;

use crate::cyclic::CyclicError;
use crate::graphcat::GraphError;

pub use fibration::{
    eul_morphism_valid, left_fibration_check, pullback_tour, right_fibration_check, straighten,
    to_lambda_arrow, to_lambda_object, unstraighten, LiftReport,
};
pub use tours::{count_tours_oracle, enumerate_tours, Tour, TourGraph};

#[derive(Debug, thiserror::Error)]
pub enum EulerError {
    #[error("the empty graph has no Eulerian tour")]
    EmptyGraph,
    #[error("not an Eulerian tour: {0}")]
    NotATour(String),
    #[error("tour and map live on different graphs")]
    GraphMismatch,
    #[error("the map does not pull the target tour back to the source tour")]
    NotEulMorphism,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
}

//! Topological Hochschild homology of bypass categories.
//!
//! [`build_othh`] computes the cyclic set `O_thh(Γ)` of itineraries on `Γ`:
//! its `n`-simplices are bypass operations from `Γ` onto cycle graphs with
//! `n + 1` stops, and `Λ` acts by postcomposition. Its homology is one circle
//! per Eulerian tour.
//!
//! For a linear enriched category `C` on `S`, [`cyclic_bar`] forms the cyclic
//! bar construction by evaluating `C` on cycle graphs, and
//! [`hochschild_homology`] takes its rational homology.

mod bar;
mod enriched;
mod othh;

use crate::cyclic::CyclicError;
use crate::graphcat::GraphError;
use crate::homology::HomologyError;

pub use bar::{
    commutator_quotient_dim, cyclic_bar, dual_numbers_periodic, hochschild_homology, CyclicBar,
};
pub use enriched::{enriched_eval, enriched_eval_map, LinearEnrichedCategory};
pub use othh::{
    arrow_bypass, build_othh, itinerary_count_invariance, othh_homology, Othh, OthhReport, OthhSimplex,
    Pi0Report, TourBlock,
};

#[derive(Debug, thiserror::Error)]
pub enum ThhError {
    #[error("simplicial identities fail: {0}")]
    Identity(String),
    #[error("an itinerary does not run along a tour")]
    NoTour,
    #[error("normalized and unnormalized homology differ: {0}")]
    Mismatch(String),
    #[error("invalid enriched category: {0}")]
    Enriched(String),
    #[error(transparent)]
    Cyclic(#[from] CyclicError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

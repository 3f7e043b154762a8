//! Bypass operations on directed multigraphs, Connes' cyclic category `Λ`,
//! Eulerian tours, and the cyclic set `O_thh` whose homology splits as one
//! circle per Eulerian tour.
//!
//! Everything is finite and exact: graphs are enumerated exhaustively,
//! homology is computed over `ℤ` by Smith normal form or over `ℚ` by exact
//! elimination.
//!
//! - [`graphcat`]: graphs on a vertex set, bypass maps, hom enumeration.
//! - [`cyclic`]: arrows of `Λ`, duality, truncated cyclic sets.
//! - [`eulerian`]: tours, the BEST count, the two fibrations over bypass
//!   maps and over `Λ`.
//! - [`homology`]: chain complexes, simplicial sets, Smith normal form.
//! - [`thh`]: `O_thh(Γ)` and the cyclic bar construction of linear
//!   categories.
//! - [`suite`]: the exhaustive checks behind `bypass-thh verify`.
//!
//! Runnable examples live in `examples/`: `eulerian_tours`, `bypass_maps`,
//! `cyclic_category`, `fibrations`, `othh_homology`, `hochschild`,
//! `smith_homology` and `verify_small`.
//!
//! ```
//! use std::sync::Arc;
//! use bypass_thh::graphcat::{Graph, Vertex, VertexSet};
//! use bypass_thh::thh::othh_homology;
//!
//! let g = Arc::new(Graph::loops(VertexSet::alphabetic(1), Vertex(0), 3).unwrap());
//! let report = othh_homology(&g, 3).unwrap();
//! assert_eq!(report.betti, [2, 2, 0]);
//! ```

pub mod cyclic;
pub mod eulerian;
pub mod graphcat;
pub mod homology;
pub mod suite;
pub mod thh;

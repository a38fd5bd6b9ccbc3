//! Planar embeddings, interactions and the geometric lemmas used by the
//! certificate builders: point density, separators, grid tilings and
//! rectangle subdivision.

pub mod embedding;
pub mod interactions;
pub mod rectangle;
pub mod separator;
pub mod subdivision;
pub mod tiling;

pub use embedding::{dist, Embedding};
pub use interactions::{
    default_edges, extract_interactions, histogram, interaction_counter, Histogram, Interaction,
    InteractionCounter, InteractionGraph,
};
pub use rectangle::{count_in_rectangle, density_bound_holds, RectCount, Rectangle};
pub use separator::{find_separator, Orientation, Separator, Side};
pub use subdivision::{subdivide_rectangle, Subdivision};
pub use tiling::{bad_counts, find_tiling, GridTiling, TilingResult};

pub type Point = [f64; 2];

/// Absolute tolerance for geometric comparisons.
pub const EPS: f64 = 1e-9;

/// An interaction is long (bad) at threshold `ell` if its length is at
/// least `ell`, up to tolerance.
#[inline]
pub fn is_long(length: f64, ell: f64) -> bool {
    length + EPS >= ell
}

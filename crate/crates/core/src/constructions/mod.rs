//! Hadamard and skew Hadamard matrix constructions.
//!
//! Every function returns an unchecked result; callers that need a
//! guarantee run [`is_hadamard`](crate::exactmat::is_hadamard) or rely on the
//! registry, which checks by default.

mod arrays;
mod bordered;
mod designs;
pub mod families;
mod miyamoto;
mod paley;
mod quads;
mod search;
pub(crate) mod skew;

pub use arrays::{goethals_seidel, hadamard_from_sds};
pub use miyamoto::miyamoto;
pub use designs::{amicable_hadamard, aod_skew_hadamard, od_from_circulants, search_skew_od, AmicablePair, OrthDesign};
pub use paley::{conference_paley, double, paley_i, paley_ii};
pub use quads::{GoodQuad, WilliamsonQuad};
pub use families::{cooper_wallis, cooper_wallis_with, good_matrices_hadamard, williamson_hadamard};
pub use skew::{cds_skew_hadamard, spence_hadamard, spence_skew};
pub use search::{search_good, search_williamson, turyn_williamson};

//! Difference-set machinery over finite abelian groups: m-sequences, relative,
//! supplementary and complementary difference sets, and planar sets.

mod cds;
mod construct;
mod family;
mod group;
mod mseq;
mod orbit;
mod search;
mod singer;
mod spence;

pub use cds::{cds, cds_exists, CdsPair, CdsVariant};
pub use construct::{construction_sds, CosetSpec, SdsRecord};
pub use family::{difference_counts, is_sds, is_skew_set, SdsDefect, SubsetFamily};
pub use group::AbelianGroup;
pub use mseq::{find_fixed_translate, m_sequence, rds_from_homomorphism, rds_from_m_sequence, MSeq, RelDiffSet};
pub use orbit::{search_field_orbit_sds, search_orbit_sds};
pub use search::search_sds_bruteforce;
pub use singer::singer_difference_set;
pub use spence::{spence_sds, spence_sds_exists, spence_sds_parameters};

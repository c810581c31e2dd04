//! The Pfaffian side: families of skew forms, their Pfaffian equations,
//! sampling of the degeneracy locus over finite fields, Hodge numbers of
//! hypersurfaces, and clean-intersection arithmetic.

pub mod amap;
pub mod census;
pub mod hypersurface;
pub mod lg;
pub mod sample;
pub mod skew;

pub use amap::{pair_count, pair_index, AMap, Scalars};
pub use census::{rank_census, skew_rank_count, stratum_scaling, RankCensus};
pub use hypersurface::{hypersurface_hodge, jacobian_ring_dim};
pub use lg::{knorrer_check, lg_ext_profile, lg_hom_shift, KnorrerCheck};
pub use sample::{analyze_point, sample_y2, SamplePoint, SampleReport, DEFAULT_PRIME};
pub use skew::{build_skew_matrix, build_skew_matrix_mod, SkewLinearMatrix};

//! Cohomology of the linear section `Y1` of Gr(2,n) and the Ext computations
//! between window bundles.

pub mod collection;
pub mod diamond;
pub mod grass_hodge;
pub mod koszul;
pub mod lemma;

pub use collection::{rhom, verify_strong_exceptional, CollectionReport, Label};
pub use diamond::HodgeDiamond;
pub use grass_hodge::{h1_tangent_y1, hodge_diamond_y1, Y1Hodge};
pub use koszul::{omega_p_class, restricted_cohomology, restricted_euler, CohomologyResult, DegreeValue, Mode};
pub use lemma::{decide_pair_all_t, lemma_vanishing_all_t, LemmaReport, Verdict};

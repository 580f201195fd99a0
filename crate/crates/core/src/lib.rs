//! Promotion and rowmotion on the poset V = {A < B, A < C} and its products
//! with chains.
//!
//! - [`poset`]: finite posets, `V x [k]`, linear extensions.
//! - [`linext`] and [`kreweras`]: classical promotion, Kreweras words and
//!   their bump diagrams.
//! - [`pstrict`]: P-strict labelings of `V x [ell]` under `R^q` and
//!   P-strict promotion.
//! - [`multiword`]: partial multi Kreweras words, generalized bump
//!   diagrams, layer decompositions, double arcs and standardization.
//! - [`ppartition`]: bounded P-partitions, toggles, rowmotion and
//!   toggle-promotion.

pub mod error;
pub mod json;
pub mod kreweras;
pub mod linext;
pub mod multiword;
pub mod poset;
pub mod ppartition;
pub mod pstrict;

pub use error::{Error, Result};
pub use kreweras::{bump_diagram, from_kreweras, to_kreweras, BumpDiagram, KrewerasWord, Letter};
pub use linext::{bender_knuth, promote_linext};
pub use multiword::{
    delete_double_arc, destandardize, double_arcs, generalized_bump_diagram, labeling_of_word,
    layer_decomposition, promote_word, standardize, validate_word, word_of_labeling,
    GeneralizedBumpDiagram, PartialMultiKrewerasWord, VLayer,
};
pub use poset::{linear_extensions, make_v, product_with_chain, ElementId, LinearExtension, Poset};
pub use ppartition::{
    apply_automorphism, enumerate_ppartitions, rowmotion, toggle, togpro, PPartition, PosetAutomorphism,
};
pub use pstrict::{
    bender_knuth_tau, enumerate_labelings, free_labels, promote_pstrict, restriction_rq, FreeLabels,
    PStrictLabeling, RestrictionFunction,
};

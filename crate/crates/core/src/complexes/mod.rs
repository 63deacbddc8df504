//! Simplicial complexes, matroid complexes and their numerical invariants.

mod canon;
mod complex;
mod enumerate;
mod matroid;
mod ops;
mod random;
mod tutte;
mod vectors;

pub use canon::{canonical_complex, canonical_form};
pub use complex::{bits, ground_mask, mask_of, maximal_sets, minimal_sets, to_labels, FacetListing, SimplicialComplex, Subset, MAX_GROUND};
pub use enumerate::{
    coloop_extension, enumerate_matroids, enumerate_matroids_with, enumerate_up_to_rank, non_coloop_extensions,
    EnumerationConfig, EnumerationMode, DEFAULT_MAX_N, HARD_MAX_N,
};
pub use matroid::{
    ci_degrees, circuit_exchange_holds, coloop_mask, coloops, is_complete_intersection, is_cone, is_matroid,
    is_matroid_by_restriction, parallel_classes, series_classes, GroundPartition,
};
pub use ops::{cone, deletion, join, link, skeleton, strip_coloops, Deletion};
pub use random::{random_complex, random_pure_complex};
pub use tutte::tutte_h;
pub use vectors::{f_from_h, f_vector, h_from_f, h_vector};

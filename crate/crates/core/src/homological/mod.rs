//! Complexes, resolutions, Ext/Tor and homological dimensions.

mod complex;
mod cover;
mod dimension;
mod ext;
mod graded;
mod injective;
mod resolution;
mod stable_iso;

pub use complex::{homology, r_map_is_iso, ChainComplex};
pub use cover::{is_projective, projective_cover, radical_span, splitting, top, Cover};
pub use dimension::{
    is_perfect_both_sides, proj_dim, proj_dim_with, verify_recurrence, FinitenessVerdict, Recurrence,
    DEFAULT_DEPTH,
};
pub use ext::{ext, ext_degree, ext_with, tor, HomComplex};
pub use graded::GradedGroups;
pub use injective::{injective_resolution_artin, InjectiveResolution};
pub use resolution::{projective_resolution, syzygy, Resolution};
pub use stable_iso::{factors_through_projective, phom_generators, stable_iso, StableIso};

#[cfg(test)]
mod tests;

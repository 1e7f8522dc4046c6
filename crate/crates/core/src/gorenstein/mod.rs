//! The dualizing bimodule, its bimodule resolution, Gorenstein detection, the Nakayama pair
//! and tilting checks.

mod check;
mod nakayama;
mod omega;
mod tilting;

pub use check::{gorenstein_check, Criterion, GorensteinStatus, GorensteinVerdict, SiteDims};
pub use nakayama::{adjunction_check, conakayama, conakayama_with, nakayama, nakayama_with, AdjunctionReport};
pub use omega::{dualizing_bimodule, omega_hat, DualizingBimodule, OmegaHat};
pub use tilting::{verify_tilting, verify_tilting_with, CompositeCheck, DegreeCheck, TiltingReport};

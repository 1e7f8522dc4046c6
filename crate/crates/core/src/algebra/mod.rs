//! Finite algebras, modules over them, Hom and tensor.

mod bimodule;
mod finite;
mod hom;
pub mod io;
mod iso;
mod module;
pub mod named;
pub mod presets;
mod radical;

pub use bimodule::Bimodule;
pub use finite::{enveloping, pure_tensor, tensor_algebra, Alg, AxiomFailure, FiniteAlgebra, ValidationReport};
pub use iso::{module_iso, module_iso_seeded, IsoOutcome, IsoStatus};
pub use hom::{dual_over_algebra, hom_module, HomSpace, TensorSpace};
pub use module::{DirectSum, Module, ModuleMap, Presented, Side};

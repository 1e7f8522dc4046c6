//! Exact linear algebra over `Q`, `F_p` and `Z`.

mod lattice;
mod lll;
mod matrix;
mod ring;
mod scalar;
mod smith;
mod solve;

pub use lattice::{cokernel_invariants, merge_factors, EchelonBasis, NormalForm, Subquotient};
pub use lll::{lll_reduce, Reduced};
pub use matrix::{unit_vector, vec_is_zero, Matrix};
pub use ring::{is_prime, prime_factors, BaseRing};
pub use scalar::{ParseScalarError, Scalar};
pub use smith::{determinant, smith_normal_form, SmithForm};
pub use solve::{column_hermite, field_kernel, inverse, kernel, rank, rref, solve, solve_congruences, solve_matrix, span_basis};

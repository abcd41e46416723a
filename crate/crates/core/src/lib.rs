//! Exact evaluation of elementary symmetric polynomials and the algebra
//! built on them.
//!
//! * [`scalar`]: complex arithmetic in exact, wrapping 64-bit and float modes.
//! * [`esp`]: the prefix recurrence table and a direct subset-sum oracle.
//! * [`symalg`]: polynomials in the generators `e1..en`, the shift, the
//!   embedding into one more variable and its multiplicative extension.
//! * [`polyzero`]: single-variable polynomials from roots, root insertion
//!   and deflation.
//! * [`verify`]: randomized property checks over all of the above.
//! * [`cli`]: the `esym` command line, including a byte-compatible replica
//!   of the original interactive program.

pub mod cli;
pub mod error;
pub mod esp;
pub mod polyzero;
pub mod sample;
pub mod scalar;
pub mod symalg;
pub mod verify;

pub use error::{EsymError, Result};
pub use esp::{build_table, direct_eps, eps_omit_identity, Assignment, EpsTable};
pub use polyzero::{from_roots, Poly1};
pub use scalar::{ComplexRing, ExactComplex, FloatComplex, Mode, Scalar, Wrap64Complex};
pub use symalg::{
    alpha_gen, eval_extended, eval_genpoly, generator_partition, merge_varsets, phi, shift_u,
    split_by_top_generator, GenMonomial, GenPoly, VarSet,
};

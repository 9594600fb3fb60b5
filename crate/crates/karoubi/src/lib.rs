//! Exactly computable category theory around idempotent completion:
//! matrix categories over exact rings, Karoubi envelopes and weak
//! idempotent completions, categories of extensions of a biadditive
//! functor, lifted functor calculus, and the equivalence between the
//! extension category of a completion and the completion of an extension
//! category, all verified pointwise by seeded property suites.
//!
//! ```
//! use karoubi::cat::{verify_split_witness, SplitsIdempotents};
//! use karoubi::completion::Completion;
//! use karoubi::matcat::MatCat;
//! use karoubi::matrix::Matrix;
//! use karoubi::ring::Ring;
//!
//! # fn main() -> karoubi::Result<()> {
//! let ring = Ring::prime_field(2)?;
//! let completed = Completion::new(MatCat::new(ring));
//!
//! // an idempotent morphism (e, e, e) on the object (F2^2, e)
//! let e = Matrix::from_i64s(ring, &[&[1, 1], &[0, 0]]);
//! let m = completed.morphism(e.clone(), e.clone(), e)?;
//!
//! // in the completion every idempotent splits, with a checkable witness
//! let witness = completed.split_idempotent(&m)?;
//! assert!(verify_split_witness(&completed, &m, &witness)?);
//! # Ok(())
//! # }
//! ```

pub mod cat;
pub mod completion;
pub mod bifunctor;
pub mod equivalence;
pub mod error;
pub mod exactness;
pub mod exfunctor;
pub mod extensions;
pub mod functor;
pub mod generate;
pub mod jsonio;
pub mod laws;
pub mod matcat;
pub mod matrix;
pub mod rect;
pub mod registry;
pub mod ring;
pub mod suite;

pub use error::{Error, Result};

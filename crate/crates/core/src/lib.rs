//! Pure ideals and pure spectra of finite commutative rings.
//!
//! An ideal `I` of a commutative unital ring `A` is *pure* if for every
//! `f` in `I` there is a `g` in `I` with `f = f g`.  Pure ideals form a
//! frame under sum; every ideal `I` contains a largest pure ideal, its
//! *pure part* `nu(I)`.  The purely-prime ideals (primes of that frame)
//! carry a spectral topology, the *pure spectrum* `Spp(A)`, which maps
//! onto the Pierce spectrum `Sp(A)` and receives the Zariski spectrum
//! `Spec(A)` through the canonical map `p -> nu(p)`.
//!
//! Everything here is computed by exhaustive enumeration on finite
//! rings given by multiplication tables, plus a small closed-form
//! backend for the ring of integers.  The [`verify`] module packages
//! the supporting theory as a catalog of executable theorem checks.

pub mod bits;
pub mod classify;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod hom;
pub mod ideal;
pub mod lattice;
pub mod limits;
pub mod purity;
pub mod ring;
pub mod spectra;
pub mod symz;
pub mod topology;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;

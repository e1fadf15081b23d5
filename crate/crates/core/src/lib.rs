//! Exact computer algebra for Clifford algebras of rational quadratic forms,
//! lambda-ring and Adams operations, and classical and hermitian Bott classes.
//!
//! Every computation is carried out in exact arithmetic: arbitrary-precision
//! rationals, cyclotomic rings `Z[x]/Φ_k(x)` with rational coefficients, and
//! truncated polynomial rings `Q[x_1..x_r]/(x_i^2)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`rings`]: coefficient domains and the [`rings::Ring`] abstraction.
//! * [`quadratic`]: diagonal forms, Hilbert symbols, Hasse–Witt invariants.
//! * [`clifford`]: blade arithmetic, Clifford group, volume elements,
//!   graded tensor products and the spin lifting of transpositions.
//! * [`lambda`]: line expressions, λ-vectors, Adams operations, Bott classes
//!   and the Serre square root.
//! * [`spinor`]: explicit graded Clifford modules, tensor powers with Koszul
//!   signs, eigenmodule and character Adams operations, hermitian Bott class.
//! * [`verify`]: deterministic verification suites and their JSON reports.

pub mod caps;
pub mod clifford;
pub mod error;
pub mod lambda;
pub mod linalg;
pub mod quadratic;
pub mod rings;
pub mod spinor;
pub mod verify;

pub use caps::Caps;
pub use error::{Error, Result};
pub use rings::{Cyclotomic, QAlgebra, Rational, Ring, RingValue, Truncated};

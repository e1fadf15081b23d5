//! λ-ring computations: line expressions, λ-vectors, Adams operations, the
//! Bott class `ρᵏ` in its line, virtual and cyclotomic forms, the Serre
//! square root and the sphere coefficients.

mod bott;
mod lines;
mod sphere;
mod vector;

pub use bott::{bott_cyclotomic, bott_lines, bott_virtual, bott_virtual_in, corrected_bott, serre_sqrt, SerreRoot};
pub use lines::LineExpr;
pub use sphere::{sphere_check, sphere_closed_form, sphere_coefficient, sphere_formula, sphere_mod2_class, SphereCheck};
pub use vector::{adams_lines, adams_newton, LambdaVector};

//! Problem model: the difference equation, Cauchy data on `X₀`, and the face
//! geometry of the coefficient box. Everything validates before any
//! computation runs.

pub mod data;
pub mod equation;
pub mod faces;

pub use data::{CauchyData, DataIssue, RaySpec};
pub use equation::{DifferenceEquation, EquationIssue};
pub use faces::{decompose_point, faces, in_x0, Face};

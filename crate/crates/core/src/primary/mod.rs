//! Conversions between a `P`-primary ideal and its Noetherian operators.

mod backward;
mod forward;
mod scene;
mod solutions;

pub use backward::{ideal_from_operators, operators_to_inverse_system, reconstruct, verify_noetherian, Reconstruction};
pub use forward::{gamma_image, multiplicity, noetherian_operators, GammaImage, OperatorRepresentation, DEFAULT_MAX_DEGREE};
pub use scene::Scene;
pub use solutions::{render_sample, solution_family, SolutionFamily};

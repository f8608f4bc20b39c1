//! Modular objects on the theta group Γ_ϑ = ⟨S, T²⟩.

mod group;
mod hz;
mod lambda;
mod point;
pub mod theta;

pub use group::{axis_margin, in_theta_group, reduce_to_fundamental_domain, IntegerMatrix2x2};
pub use hz::{h_z, h_z_with_guard, DEFAULT_POLE_GUARD};
pub use lambda::{axis_inverse_j, inverse_j_theta, j_theta, lambda_modular, one_minus_lambda};
pub use point::{PolePoint, UpperHalfPoint};
pub use theta::{axis_thetas, theta, theta2, theta_minus_one_on_axis, thetas, AxisThetas, Thetas};

//! Numerics for generalized L-functions attached to weight 1/2 meromorphic
//! modular forms on the theta group.
//!
//! The crate is `no_std` (it needs `alloc`) and is organized bottom-up:
//!
//! * [`special_functions`]: Γ, Γ(s, y), ₁F₁ asymptotics, polylogarithms on the
//!   unit circle, ζ and ξ.
//! * [`modular_forms`]: ϑ, θ₂, λ, the Hauptmodul j_ϑ, the meromorphic forms
//!   H_z and reduction into the fundamental domain of Γ_ϑ.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration of complex integrands.
//! * [`mellin`]: the transform F_z(s) and its functional equation.
//! * [`asymptotics`]: the correction terms in y = Im(z) and the limit
//!   F_z(s) + corrections → ξ(2s).
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod asymptotics;
mod error;
pub mod mellin;
pub mod modular_forms;
pub mod quadrature;
pub mod special_functions;

pub use error::{Error, ErrorKind, Result};
pub use num_complex::Complex64;

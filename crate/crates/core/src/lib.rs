//! Numerical laboratory for Turán-type oscillation inequalities
//! `‖p′‖_{L^q(∂K)} ≥ c·n·‖p‖_{L^q(∂K)}` on convex polygonal domains.
//!
//! The crate is organised around the objects the inequalities talk about:
//!
//! * [`geom`] — convex polygons, global parameters (diameter, width, local
//!   depth), the acute-vertex radius `R_V` and the tilted-normal frame.
//! * [`poly`] — polynomials represented by their zero sets, evaluated through
//!   an overflow-safe log-magnitude channel.
//! * [`boundary`] — boundary parametrisation, adaptive Gauss–Legendre `L^q`
//!   norms, sup norms with argmax, and the level set `𝒢(p)` carrying at least
//!   half of the `L^q` mass.
//! * [`capacity`] — Leja/Fekete points, Fekete diameters, the closed form for
//!   regular k-gons, Chebyshev numbers and the Pólya lower bound.
//! * [`constants`] + [`verify`] — every explicit constant and one verifier per
//!   inequality, each returning a structured [`report::VerifierReport`].
//! * [`search`] — derivative-free minimisation of the oscillation factor
//!   `M_q(p)` over zero configurations, bracketing the extremal constant.

pub mod boundary;
pub mod capacity;
pub mod constants;
pub mod geom;
pub mod nm;
pub mod poly;
pub mod randpoly;
pub mod report;
pub mod search;
pub mod verify;

pub use num_complex::Complex64;

/// Library version string, logged by every CLI run.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

//! Direct solver for second-kind boundary integral equations on
//! axisymmetric surfaces in three dimensions.
//!
//! The surface is generated by rotating a planar curve about the z axis.
//! A Fourier transform in the azimuthal angle reduces the surface equation
//! to a sequence of one-dimensional integral equations on the generating
//! curve, one per azimuthal mode. Each modal equation is discretized by a
//! high-order Nystrom method on panel Gauss nodes, with generalized
//! quadrature rules absorbing the logarithmic kernel singularity near the
//! diagonal, and the resulting dense systems are factorized directly so
//! that additional right-hand sides cost only triangular solves.
//!
//! The productized kernels are the Laplace double layer formulations of
//! the interior and exterior Dirichlet problems, whose modal coefficients
//! are evaluated by recursion relations for half-integer Legendre
//! functions rather than by numerical integration.

pub mod assembly;
pub mod driver;
pub mod error;
pub mod fourier;
pub mod geometry;
pub mod kernels;
pub mod postprocess;
pub mod quadrature;
pub mod solver;
pub mod special;

pub use error::{Error, Result};

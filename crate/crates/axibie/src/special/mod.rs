//! Complete elliptic integrals and Legendre functions of the second kind
//! of half-integer degree.

pub mod elliptic;
pub mod legendre;

pub use elliptic::{elliptic_e, elliptic_k, elliptic_ke};
pub use legendre::{
    legendre_q, legendre_q_backward, legendre_q_derivative, legendre_q_forward, LegendreQSequence,
};

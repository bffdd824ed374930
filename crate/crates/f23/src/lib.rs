//! Exact-arithmetic tools for the free step-2 rank-3 Carnot algebra:
//! its group law and horizontal lines, the h-affine function family,
//! precise-monotonicity checking of sublevel sets along horizontal
//! lines, and classification certificates (witness lines, component
//! paths, boundary graphs, quotient half-spaces).
//!
//! All computation is over arbitrary-precision rationals; every
//! certificate produced here carries enough data to be re-verified
//! independently of how it was found.

pub mod carnot;
pub mod classify;
pub mod haffine;
pub mod linalg;
pub mod monotone;
pub mod multivec;
pub mod poly;
pub mod poly6;
pub mod rat;
pub mod scene;

//! Exact combinatorics of the polyhedral compactification of a
//! Bruhat-Tits building, one apartment at a time.
//!
//! The crate works with a finite root system, the Weyl fan and the coarser
//! fans attached to a subset `J` of simple roots, parabolic subgroups and
//! their strata, an affine apartment with its walls and special points, the
//! compactified apartment, and a toy model of the Gauss-norm coordinates on
//! the analytic group.

pub mod num;
pub mod linalg;
pub mod rootdata;
pub mod fans;
pub mod parabolics;
pub mod apartment;
pub mod compactify;
pub mod gaussnorm;
pub mod json;
pub mod checks;

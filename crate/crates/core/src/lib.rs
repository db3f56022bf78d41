//! Exact verification that quantum multiplication by the hyperplane class on a
//! minuscule flag manifold `G/P_i` is the action of `sum_j e_{-alpha_j} + q e_psi`
//! on the minuscule representation `V_{lambda_i}`, together with the
//! asymptotic-data / Weyl-alcove / DPW dictionary of the tt*-Toda equations.

pub mod cli;
pub mod error;
pub mod minrep;
pub mod poly;
pub mod qchev;
pub mod rootsys;
pub mod satake;
pub mod sweep;
pub mod ttstar;
pub mod weylorbit;

pub use error::{Error, Result};
pub use poly::{Poly, PolyMatrix};
pub use rootsys::{Family, LieType, RootSystem, RootVec, Weight};
pub use weylorbit::{Orbit, OrbitElement};

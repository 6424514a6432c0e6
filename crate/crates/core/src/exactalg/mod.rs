//! Exact arithmetic: Gaussian rationals, dense and sparse polynomials,
//! parameterized Laurent rings and certified modulus bounds.
//!
//! Everything in this module is exact. Where an operation cannot return an
//! exact value (moduli of complex rationals, powers of huge radii) it returns
//! a one-sided bound computed by outward rounding, so every inequality
//! certified here is a true rational inequality.

pub mod rat;
pub mod gauss;
pub mod dyf;
pub mod dyadic;
pub mod poly;
pub mod multipoly;
pub mod laurent;
pub mod bounds;

pub use rat::{rat_from_str, rat_to_string, Rat};
pub use gauss::GaussRat;
pub use dyf::{CEnc, DyF, Enc, Round};
pub use dyadic::{DyComplex, Dyadic};
pub use poly::{Coeff, DensePoly, LaurentPoly};
pub use multipoly::{MultiIndex, MultiPoly};
pub use laurent::ParamLaurent;
pub use bounds::{disc_sup_bound, disc_sup_bound_multi, modulus_upper, ModulusBound, Radius};

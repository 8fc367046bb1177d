//! Exact computations with rational shuffle algebras, degenerate affine
//! Hecke operators, Shibukawa–Ueno R-operators, quantum minors in
//! `U_hbar(gl_N)`, hbar-Weyl algebra identities, difference operators and
//! the GKLO homomorphism.
//!
//! All arithmetic is exact over the rationals. Elements print in a canonical
//! form that parses back through [`exactalg::parse`].

pub mod diffops;
pub mod envelope;
pub mod exactalg;
pub mod gklo;
pub mod heckerep;
pub mod permops;
pub mod shuffle;
pub mod weylmat;

pub use exactalg::{AlgError, Monomial, Poly, Rf, Var, Q};

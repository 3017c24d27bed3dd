//! Exact determinantal-moment machinery for random two-qubit-family and
//! qubit-qutrit density matrices, under the Hilbert-Schmidt and Bures
//! measures.
//!
//! The crate has three layers:
//!
//! * an exact algebraic core — arbitrary-precision rationals, polynomials,
//!   rational functions, affine parameter forms, and terminating
//!   hypergeometric series ([`rational`], [`poly`], [`ratfun`], [`affine`],
//!   [`hyper`]);
//! * the closed-form moment catalog and the utility-function framework that
//!   manufactures hybrid moment formulas ([`formulas`], [`utility`]);
//! * numerical exploitation — Legendre moment inversion for separability
//!   probabilities, rational sequence fitting, and an eigenvalue-simplex
//!   quadrature oracle ([`inversion`], [`seqfit`], [`oracle`]).
//!
//! The guide in `book/` walks through each layer with runnable examples;
//! its code blocks compile as doctests of this crate.

pub mod affine;
pub mod error;
pub mod formulas;
pub mod hyper;
pub mod poly;
pub mod ratfun;
pub mod rational;

pub use affine::{AffineForm, Bindings};
pub use error::{Error, Result};
pub use hyper::HyperSeries;
pub use poly::PolynomialQ;
pub use ratfun::RationalFunctionQ;
pub use rational::{parse_rat, pochhammer, rat, rat_to_decimal, ratio, Int, Rat};

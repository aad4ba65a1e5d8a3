//! Exact computation of the minimal A∞-algebra obtained by homological
//! perturbation from the endomorphism dg-algebra of the Koszul matrix
//! factorization of a homogeneous potential.
//!
//! Everything is computed on a single chart with exact rational arithmetic:
//!
//! * [`exterior`], [`poly`] and [`potential`] provide the multilinear algebra
//!   (wedge monomials in `dx_i` and `v_i = ∂/∂x_i`, Laurent polynomials in `u`).
//! * [`koszul`] builds the factorization `δ_F = i_η + γ∧` and checks `δ_F² = u·p`.
//! * [`endo`] is the endomorphism algebra `B` with `∂`, `∂̄` and `∂̄ − ∂`.
//! * [`transfer`] holds the contraction data `p`, `i`, `h` and its side conditions.
//! * [`trees`] enumerates ribbon trees and evaluates the transferred products `μ^k`.
//! * [`verify`] checks the computed table against the closed-form predictions
//!   and the Stasheff relations.
//! * [`sod`] is the semiorthogonal-decomposition bookkeeping.

pub mod conventions;
pub mod endo;
pub mod error;
pub mod exterior;
pub mod koszul;
pub mod lincomb;
pub mod parse;
pub mod poly;
pub mod potential;
pub mod rational;
pub mod report;
pub mod sod;
pub mod transfer;
pub mod trees;
pub mod verify;

pub use endo::{BKey, BVector};
pub use error::{Error, Result};
pub use exterior::{Form, Multivector, Signed};
pub use koszul::FVector;
pub use poly::{PolyMonomial, Polynomial};
pub use potential::{Context, Potential};
pub use rational::Rational;
pub use transfer::AVector;
pub use trees::{MuTable, RibbonTree};

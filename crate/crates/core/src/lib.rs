//! Reference evaluation and certified two-sided bounds for the modified
//! Struve function of the first kind L_ν(x).
//!
//! The crate is organised bottom-up:
//!
//! * [`special`] evaluates I_ν, L_ν and M_ν (power series, closed forms,
//!   asymptotic forms and an independent quadrature route);
//! * [`bfunc`] provides the kernel b_ν(x) that appears in every
//!   Struve-versus-Bessel correction;
//! * [`succ_ratio`], [`condition`] and [`arg_ratio`] hold the bounds for
//!   L_ν/L_{ν−1}, xL′_ν/L_ν, L_ν(x)/L_ν(y) and L_ν(x) itself;
//! * [`registry`] names every inequality with its validity range;
//! * [`verify`] certifies the registry over grids, reproduces the
//!   relative-error tables and locates crossovers;
//! * [`cli`] is the command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arg_ratio;
pub mod bfunc;
pub mod bracket;
pub mod cli;
pub mod condition;
pub mod error;
pub mod registry;
pub mod special;
pub mod succ_ratio;
pub mod verify;

pub use bracket::Bracket;
pub use error::{Error, Result};
pub use special::{EvalConfig, FuncValue, Kind};

//! Exact super Catalan numbers and the lattice-path constructions around
//! them.
//!
//! For `m, n >= 1` the super Catalan number
//! `T(m, n) = (2m)! (2n)! / (2 m! n! (m+n)!)` is a signed count of 2-Motzkin
//! paths of length `m + n - 2`: a path is positive when the point `m - 1`
//! sits on an even level and negative otherwise. This crate
//!
//! * represents Dyck, 2-Motzkin and ballot paths ([`paths`]),
//! * enumerates them exhaustively in lexicographic order ([`enumerate`]),
//! * evaluates the numbers exactly ([`numbers`]),
//! * implements the constructive maps between the families, including the
//!   ones that turn the signed count of `T(2, n)` into a plain count
//!   ([`bijections`]),
//! * checks every identity over a parameter range ([`verify`]),
//! * and draws paths as SVG ([`render`]).
//!
//! The `supercat` binary is a thin front end over [`cli`].

pub mod bijections;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod numbers;
pub mod paths;
pub mod render;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use numbers::ExactInt;
pub use paths::{
    BallotPath, DyckPath, DyckStep, LatticePath, MotzkinStep, PathMarkers, Step, TwoMotzkinPath,
};
pub use verify::{Identity, VerificationReport};

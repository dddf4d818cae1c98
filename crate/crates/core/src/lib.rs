//! Exact computations for small semisimple Hopf algebras.

#![allow(clippy::needless_range_loop)]

pub mod census;
pub mod cli;
pub mod cyclotomic;
pub mod fusion;
pub mod groups;
pub mod hopf;
pub mod search;

//! Command-line front end, named fixtures and corpus verification for
//! `rigidkit`.

pub mod batch;
pub mod cli;
pub mod gallery;

//! Command-line front end for `scaprop-core`: the diagram DSL, JSON
//! signature and language documents, dot rendering, named backends and
//! seeded random terms.

pub mod backend;
pub mod cli;
pub mod doc;
pub mod dsl;
pub mod gen;
pub mod render;
pub mod selftest;

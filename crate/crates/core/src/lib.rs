//! Singly even self-dual binary codes: GF(2) linear algebra, exact minimum
//! weights, symbolic weight enumerators with shadows, and the constructions
//! used to build length-82 examples.
//!
//! The guide in `book/` walks through each module with runnable listings.

pub mod gf2;
pub mod minweight;
pub mod constructions;
pub mod wefsym;
pub mod cli;

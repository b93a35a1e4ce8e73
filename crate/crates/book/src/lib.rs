//! The guide in `book/`, one module per chapter, so that `cargo test`
//! runs every listing as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/codes.md")]
pub mod codes {}

#[doc = include_str!("../../../book/src/minimum-weight.md")]
pub mod minimum_weight {}

#[doc = include_str!("../../../book/src/enumerators.md")]
pub mod enumerators {}

#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

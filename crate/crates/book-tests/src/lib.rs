//! Compiles the code listings of the guide in `book/src` as doctests, so
//! `cargo test` fails when a chapter drifts from the library.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/fractions.md")]
pub mod fractions {}
#[doc = include_str!("../../../book/src/sequences.md")]
pub mod sequences {}
#[doc = include_str!("../../../book/src/neighbors.md")]
pub mod neighbors {}
#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}
#[doc = include_str!("../../../book/src/maps.md")]
pub mod maps {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}

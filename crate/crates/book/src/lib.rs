//! The chapters of the guide in `book/src`, compiled as documentation so
//! that `cargo test` runs every code snippet in them.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}

#[doc = include_str!("../../../book/src/shellings.md")]
pub mod shellings {}

#[doc = include_str!("../../../book/src/cycle-space.md")]
pub mod cycle_space {}

#[doc = include_str!("../../../book/src/decomposition.md")]
pub mod decomposition {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

#[doc = include_str!("../../../README.md")]
pub mod readme {}

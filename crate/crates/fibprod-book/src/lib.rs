//! Runs every code snippet in `book/` as a doctest, so `cargo test`
//! keeps the guide in sync with the library. mdBook itself cannot resolve
//! crate dependencies when testing snippets; including each chapter as
//! rustdoc here can. One module per chapter, so a failing snippet names
//! the chapter it came from.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/coefficients.md")]
pub mod coefficients {}

#[doc = include_str!("../../../book/src/recursion.md")]
pub mod recursion {}

#[doc = include_str!("../../../book/src/density.md")]
pub mod density {}

#[doc = include_str!("../../../book/src/maps.md")]
pub mod maps {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

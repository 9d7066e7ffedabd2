//! The user guide's chapters, included as doc-tested modules.
//!
//! mdbook renders `book/` but does not run its code blocks; including each
//! chapter here makes `cargo test --doc` compile and execute every `rust`
//! fence, so the guide cannot drift from the API.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/query-model.md")]
pub mod query_model {}

#[doc = include_str!("../../../book/src/estimating-stars.md")]
pub mod estimating_stars {}

#[doc = include_str!("../../../book/src/self-joins.md")]
pub mod self_joins {}

#[doc = include_str!("../../../book/src/directed-paths.md")]
pub mod directed_paths {}

#[doc = include_str!("../../../book/src/hard-instances.md")]
pub mod hard_instances {}

#[doc = include_str!("../../../book/src/exact-oracles.md")]
pub mod exact_oracles {}

#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}

// The README's example stays compiling for the same reason.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

//! The guide from `book/`, compiled here so that its examples run as doc-tests.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/crossed-modules.md")]
pub mod crossed_modules {}
#[doc = include_str!("../../../book/src/two-groupoids.md")]
pub mod two_groupoids {}
#[doc = include_str!("../../../book/src/nerves.md")]
pub mod nerves {}
#[doc = include_str!("../../../book/src/weak-maps.md")]
pub mod weak_maps {}
#[doc = include_str!("../../../book/src/reconstruction.md")]
pub mod reconstruction {}
#[doc = include_str!("../../../book/src/cohomology.md")]
pub mod cohomology {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}

//! Finite 2-groupoids, crossed modules and their nerves.

#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod cli;
pub mod cohom;
pub mod corpus;
pub mod error;
pub mod fingroup;
pub mod guide;
pub mod nerve;
pub mod reconstruct;
pub mod simpset;
pub mod text;
pub mod twogpd;
pub mod weakmaps;
pub mod xmod;

mod search;

pub use error::{Error, Result};

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod convex;
pub mod engine;
pub mod error;
pub mod fpvd;
pub mod geom;
pub mod hull;
pub mod mec;
pub mod oracle;
mod num;
pub mod path_index;
pub mod predicates;
pub mod sample;
mod triangulation;

pub use error::{Error, Result};
pub use geom::{Circle, DirectedLine, Feature, Orientation, Point, Segment, Tangency};

#![no_std]
#![doc = include_str!("../README.md")]

extern crate alloc;

pub mod scalars;
pub mod groups;
pub mod linalg;
pub mod braided;
pub mod exec;
pub mod hopfcore;
pub mod liftings;
pub mod cocycles;
pub mod fixtures;

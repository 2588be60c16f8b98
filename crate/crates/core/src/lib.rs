#![no_std]
extern crate alloc;

pub mod enumeration;
pub mod error;
pub mod exceptional;
pub mod exchange;
pub mod framework;
pub mod linalg;
pub mod roots;

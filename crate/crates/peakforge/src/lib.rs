pub use peakforge_core as core;

pub mod cli;
pub mod json;

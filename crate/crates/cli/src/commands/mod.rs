pub mod apply;
pub mod decompose;
pub mod laws;
pub mod show;
pub mod solve;

//! Exact local matrix representations of braid, virtual, twisted virtual and
//! singular braid structures, with tools to verify, classify and audit them.

pub mod analysis;
pub mod audit;
pub mod catalog;
pub mod classifier;
pub mod matrix;
pub mod phi;
pub mod presentation;
pub mod scalar;

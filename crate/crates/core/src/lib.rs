//! Exact and numerical tools for association schemes of Hadamard graphs and the
//! entanglement of free fermions living on them.

pub mod cli;
pub mod entangle;
pub mod hadamard;
pub mod numerics;
pub mod scheme;
pub mod terwilliger;

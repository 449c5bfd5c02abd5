//! Hadamard graphs, hypercubes and the Bose–Mesner data of their distance schemes:
//! distance matrices, intersection numbers, primitive idempotents, eigenmatrices,
//! Krein parameters and the metric/cometric/self-duality checks.
//!
//! Idempotents are ordered so that the scheme is Q-polynomial. For Hadamard graphs
//! that means `θ = (n, √n, 0, −√n, −n)`, and for hypercubes `θ_i = L − 2i`.

mod graph;
mod spectral;
mod tables;

use thiserror::Error;

use crate::numerics::NumericsError;

pub use graph::{
    build_hadamard_graph, build_hypercube, distance_matrices, distance_matrices_float,
    DistanceTable, Graph, HadamardGraph, VertexLabel, MAX_HYPERCUBE_DIMENSION,
};
pub use spectral::{hadamard_eigenvalues_f64, FloatSpectralData};
pub use tables::{
    eigenmatrices, hadamard_eigenvalues, hypercube_eigenvalues, idempotents, intersection_array,
    intersection_numbers, krein_parameters, polynomial_checks, AxiomCheck, AxiomReport,
    IntersectionArray, PolynomialFlags, ScalarTable, SchemeTables, Tensor3,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SchemeError {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected: no path from {from} to {to}")]
    Disconnected { from: usize, to: usize },
    #[error("Hadamard graph needs order at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("hypercube dimension {0} outside 1..={MAX_HYPERCUBE_DIMENSION}")]
    HypercubeDimension(u32),
    #[error("not an association scheme: {0}")]
    NotAScheme(String),
    #[error("scheme is not metric in the given ordering")]
    NotMetric,
    #[error("eigenvalue list rejected: {0}")]
    BadEigenvalues(String),
    #[error("change of basis between distance matrices and idempotents failed: {0}")]
    ChangeOfBasis(String),
    #[error("Krein reconstruction failed for E_{i} ∘ E_{j}")]
    KreinReconstruction { i: usize, j: usize },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

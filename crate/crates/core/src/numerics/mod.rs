//! Exact Q(√n) arithmetic, dense matrices over exact and float scalars, and a
//! symmetric eigensolver.

mod eigen;
mod exact_matrix;
mod float_matrix;
mod scalar;
mod spectrum;

use thiserror::Error;

pub use eigen::{jacobi_eig, symmetric_eig, symmetric_eigenvalues, Eigen, DEFAULT_EIG_TOL};
pub use exact_matrix::ExactMatrix;
pub use float_matrix::FloatMatrix;
pub use scalar::{perfect_square_root, ExactScalar};
pub use spectrum::{cluster_spectrum, SpectralValue, Spectrum, DEFAULT_CLUSTER_TOL};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("radicand mismatch: {left} vs {right}")]
    RadicandMismatch { left: u64, right: u64 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is not symmetric (max deviation {deviation:e})")]
    NotSymmetric { deviation: f64 },
    #[error("matrix has non-finite entries")]
    NonFinite,
    #[error("empty matrix")]
    Empty,
    #[error("eigensolver did not converge at index {index} after {iterations} iterations")]
    NoConvergence { index: usize, iterations: usize },
    #[error("eigenpair residual {residual:e} exceeds bound {bound:e}")]
    ResidualTooLarge { residual: f64, bound: f64 },
}

/// Matrix algebra shared by the exact and float matrix types.
pub trait MatrixAlgebra: Sized {
    fn dim(&self) -> usize;
    fn try_add(&self, rhs: &Self) -> Result<Self, NumericsError>;
    fn try_sub(&self, rhs: &Self) -> Result<Self, NumericsError>;
    fn try_mul(&self, rhs: &Self) -> Result<Self, NumericsError>;

    /// `[A, B] = AB − BA`
    fn commutator(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.try_mul(rhs)?.try_sub(&rhs.try_mul(self)?)
    }

    /// `{A, B} = AB + BA`
    fn anticommutator(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.try_mul(rhs)?.try_add(&rhs.try_mul(self)?)
    }
}

/// Product of a sequence of matrices, left to right.
pub fn product<M: MatrixAlgebra + Clone>(factors: &[&M]) -> Result<M, NumericsError> {
    let (first, rest) = factors.split_first().ok_or(NumericsError::Empty)?;
    rest.iter().try_fold((*first).clone(), |acc, m| acc.try_mul(m))
}

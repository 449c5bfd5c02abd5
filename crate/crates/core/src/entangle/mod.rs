//! Free-fermion ground-state correlations on distance-regular graphs.
//!
//! `π₂(K)` fills the lowest `K + 1` eigenspaces, `π₁(ℓ)` keeps the ball of radius `ℓ`
//! around the base vertex, and the chopped correlation matrix `Π(K, ℓ)` commutes with
//! the Heun operator `T(K, ℓ)`. Exact matrices are used up to moderate sizes; the
//! float route handles large Hadamard orders.

use thiserror::Error;

use crate::hadamard::HadamardError;
use crate::numerics::NumericsError;
use crate::scheme::SchemeError;
use crate::terwilliger::TerwilligerError;

mod entropy;
mod float;
mod projectors;
mod report;
mod spectra;

pub use entropy::{binary_entropy, entanglement_hamiltonian, entropy, entropy_limit, EntanglementHamiltonian, EntanglementMode};
pub use float::{entropy_sweep, EntropyRow, FloatHadamardScheme};
pub use projectors::{CommutationStatus, ExactScheme, HeunBlockCoefficients, HeunOperator, ProjectorPair};
pub use report::{
    correlation_report, heun_report, CorrelationReport, HeunReport, ReportOptions, Route, EXACT_ORDER_LIMIT,
};
pub use spectra::{
    closed_form_spectrum, compare_closed_form, padded_spectrum, spectrum_numeric, ClaimedEigenvalue, ClosedForm,
    ClosedFormComparison,
};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntangleError {
    #[error("cutoff {value} exceeds the diameter {max}")]
    CutoffOutOfRange { value: usize, max: usize },
    #[error("Heun operator needs K, ℓ < d = {diameter}, got K = {k}, ℓ = {ell}")]
    HeunUndefined { k: usize, ell: usize, diameter: usize },
    #[error("eigenvalue {value} lies outside [0, 1]")]
    InvalidSpectrum { value: f64 },
    #[error("no closed form for cutoffs ({k}, {ell})")]
    Uncovered { k: usize, ell: usize },
    #[error("exact identity failed: {0}")]
    IdentityFailure(String),
    #[error("numerical failure: {0}")]
    NumericalFailure(String),
    #[error(transparent)]
    Hadamard(#[from] HadamardError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Terwilliger(#[from] TerwilligerError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

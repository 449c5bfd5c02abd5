use serde::Serialize;

use crate::hadamard::HadamardMatrix;
use crate::numerics::{ExactScalar, SpectralValue, DEFAULT_CLUSTER_TOL, DEFAULT_EIG_TOL};
use crate::terwilliger::block_tridiagonal_decompose;

use super::entropy::entropy;
use super::float::FloatHadamardScheme;
use super::projectors::{CommutationStatus, ExactScheme};
use super::spectra::{closed_form_spectrum, compare_closed_form, padded_spectrum, ClosedFormComparison};
use super::EntangleError;

/// Largest Hadamard order handled by the exact pipeline (`N = 256`).
pub const EXACT_ORDER_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReportOptions {
    pub eig_tol: f64,
    pub cluster_tol: f64,
    /// Tolerance for closed-form comparisons and spectrum range checks.
    pub compare_tol: f64,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            eig_tol: DEFAULT_EIG_TOL,
            cluster_tol: DEFAULT_CLUSTER_TOL,
            compare_tol: 1e-8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Exact,
    Float,
}

/// Spectrum report for `Π(K, ℓ)` on a Hadamard graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorrelationReport {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub ell: usize,
    /// `N_ℓ F_K / N`; on the exact route also equal to the trace of the exact matrix.
    pub trace_exact: String,
    pub spectrum: Vec<SpectralValue>,
    pub entropy: f64,
    /// `[T(K,ℓ), Π(K,ℓ)] = 0` over `Q(√n)`; `None` when `T` is undefined (`K` or
    /// `ℓ` equal to the diameter) or the float route is used.
    pub commutator_exact_zero: Option<bool>,
    pub closed_form_flags: Vec<ClosedFormComparison>,
    pub closed_form_rule: &'static str,
    /// Any closed-form comparison flagged.
    pub closed_form_mismatch: bool,
    pub route: Route,
}

pub fn correlation_report(
    h: &HadamardMatrix,
    k: usize,
    ell: usize,
    opts: &ReportOptions,
) -> Result<CorrelationReport, EntangleError> {
    let n = h.order();
    let (spectrum, trace, commutator, route) = if n <= EXACT_ORDER_LIMIT {
        let scheme = ExactScheme::hadamard(h)?;
        let pi = scheme.chopped_correlation(k, ell)?;
        let trace = scheme.trace_formula(k, ell);
        if pi.trace() != trace {
            return Err(EntangleError::IdentityFailure(format!(
                "trace of Π({k},{ell}) is {} but N_ℓ F_K / N = {trace}",
                pi.trace()
            )));
        }
        let support: Vec<usize> = scheme
            .basis()
            .ball(ell)
            .iter()
            .enumerate()
            .filter_map(|(i, &keep)| keep.then_some(i))
            .collect();
        let block = pi.to_float().principal_submatrix(&support);
        let spectrum = padded_spectrum(&block, pi.dim(), trace.to_f64(), opts.eig_tol, opts.cluster_tol)?;
        let commutator = if k < scheme.diameter() && ell < scheme.diameter() {
            let t = scheme.heun_operator(k, ell)?;
            Some(t.commutation(&scheme.projectors(k, ell)?)?.chopped)
        } else {
            None
        };
        (spectrum, trace, commutator, Route::Exact)
    } else {
        let scheme = FloatHadamardScheme::new(h)?;
        let spectrum = scheme.spectrum(k, ell, opts.eig_tol, opts.cluster_tol)?;
        let nl: usize = scheme.spectral_data().valencies[..=ell].iter().map(|&v| v.round() as usize).sum();
        let fk: usize = scheme.spectral_data().multiplicities[..=k].iter().map(|&v| v.round() as usize).sum();
        let trace = ExactScalar::ratio((nl * fk) as i64, scheme.vertex_count() as i64, n as u64);
        (spectrum, trace, None, Route::Float)
    };
    let s = entropy(&spectrum, opts.compare_tol)?;
    let closed = closed_form_spectrum(k, ell, n)?;
    let flags = compare_closed_form(&closed.values, &spectrum, opts.compare_tol);
    Ok(CorrelationReport {
        n,
        k,
        ell,
        trace_exact: trace.to_string(),
        closed_form_mismatch: flags.iter().any(|c| c.flag),
        spectrum: spectrum.values,
        entropy: s,
        commutator_exact_zero: commutator,
        closed_form_flags: flags,
        closed_form_rule: closed.rule,
        route,
    })
}

/// Neighbourhood-basis coefficients of `T(K, ℓ)` and its exact checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HeunReport {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub ell: usize,
    pub mu: String,
    pub nu: String,
    /// Coefficient of `E*_i` for each `i`.
    pub shift: Vec<String>,
    /// Coefficient of `E*_i A E*_i`.
    pub diag_adjacency: Vec<String>,
    /// Coefficient of `E*_{i−1} A E*_i + E*_i A E*_{i−1}`, `i = 1..=d`.
    pub off: Vec<String>,
    pub commutation: CommutationStatus,
    /// Both basis expansions rebuild `T` exactly.
    pub expansions_match: bool,
    pub block_tridiagonal: bool,
}

impl HeunReport {
    pub fn all_hold(&self) -> bool {
        self.commutation.all() && self.expansions_match && self.block_tridiagonal
    }
}

pub fn heun_report(h: &HadamardMatrix, k: usize, ell: usize) -> Result<HeunReport, EntangleError> {
    let scheme = ExactScheme::hadamard(h)?;
    let t = scheme.heun_operator(k, ell)?;
    let commutation = t.commutation(&scheme.projectors(k, ell)?)?;
    let expansions_match = t.dual_expansion(&scheme)? == t.t && t.primal_expansion(&scheme)? == t.t;
    let blocks = block_tridiagonal_decompose(&t.t, scheme.basis().dual_idempotents())?;
    let c = t.dual_basis_coefficients(scheme.tables());
    let strings = |v: &[ExactScalar]| v.iter().map(ToString::to_string).collect();
    Ok(HeunReport {
        n: h.order(),
        k,
        ell,
        mu: t.mu.to_string(),
        nu: t.nu.to_string(),
        shift: strings(&c.shift),
        diag_adjacency: strings(&c.diag_adjacency),
        off: strings(&c.off),
        commutation,
        expansions_match,
        block_tridiagonal: blocks.is_block_tridiagonal(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::sylvester;

    #[test]
    fn order_four_reports() {
        let h = sylvester(2).unwrap();
        let opts = ReportOptions::default();
        let r = correlation_report(&h, 3, 3, &opts).unwrap();
        assert_eq!(r.trace_exact, "225/16");
        assert_eq!(r.commutator_exact_zero, Some(true));
        assert!(!r.closed_form_mismatch);
        let r = correlation_report(&h, 4, 2, &opts).unwrap();
        assert_eq!(r.commutator_exact_zero, None);
        assert_eq!(r.route, Route::Exact);
        let r = correlation_report(&h, 1, 1, &opts).unwrap();
        assert!(!r.closed_form_mismatch, "{:?}", r.closed_form_flags);
    }

    #[test]
    fn exact_and_float_routes_agree() {
        let h = sylvester(3).unwrap();
        let s = FloatHadamardScheme::new(&h).unwrap();
        let exact = correlation_report(&h, 2, 2, &ReportOptions::default()).unwrap();
        let float = s.spectrum(2, 2, DEFAULT_EIG_TOL, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(exact.spectrum.len(), float.values.len());
        for (a, b) in exact.spectrum.iter().zip(&float.values) {
            assert_eq!(a.multiplicity, b.multiplicity);
            assert!((a.value - b.value).abs() < 1e-10);
        }
        assert!(exact.closed_form_mismatch);
    }

    #[test]
    fn heun_report_for_two_two() {
        let r = heun_report(&sylvester(2).unwrap(), 2, 2).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.mu, "2");
        assert_eq!(r.nu, "2");
        assert_eq!(r.shift, ["8", "4", "0", "-4", "-8"]);
        assert_eq!(r.off, ["8", "4", "0", "-4"]);
        assert!(heun_report(&sylvester(2).unwrap(), 4, 0).is_err());
    }
}

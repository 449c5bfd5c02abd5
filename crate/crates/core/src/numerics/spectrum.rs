use serde::Serialize;

/// Default absolute tolerance for merging eigenvalues into clusters.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-8;

/// One distinct eigenvalue and its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SpectralValue {
    pub value: f64,
    #[serde(rename = "mult")]
    pub multiplicity: usize,
}

/// Distinct eigenvalues (strictly increasing) with multiplicities.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub values: Vec<SpectralValue>,
    pub cluster_tolerance: f64,
    /// Sum of the raw eigenvalues the spectrum was built from.
    pub trace_check: f64,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.values.iter().map(|v| v.multiplicity).sum()
    }

    /// `Σ λ·m` over the clustered values.
    pub fn weighted_sum(&self) -> f64 {
        self.values.iter().map(|v| v.value * v.multiplicity as f64).sum()
    }

    /// `|Σ λᵢ − trace| ≤ tol·dim`.
    pub fn trace_consistent(&self, trace: f64, tol: f64) -> bool {
        (self.trace_check - trace).abs() <= tol * self.dim().max(1) as f64
    }

    /// Every eigenvalue repeated by multiplicity, ascending.
    pub fn expanded(&self) -> Vec<f64> {
        self.values
            .iter()
            .flat_map(|v| std::iter::repeat_n(v.value, v.multiplicity))
            .collect()
    }

    /// Cluster closest to `value`.
    pub fn nearest(&self, value: f64) -> Option<&SpectralValue> {
        self.values
            .iter()
            .min_by(|a, b| (a.value - value).abs().total_cmp(&(b.value - value).abs()))
    }

    pub fn multiplicity_of(&self, value: f64, tol: f64) -> usize {
        self.values
            .iter()
            .filter(|v| (v.value - value).abs() <= tol)
            .map(|v| v.multiplicity)
            .sum()
    }

    /// Drops clusters within `tol` of zero.
    pub fn nonzero(&self, tol: f64) -> Vec<SpectralValue> {
        self.values
            .iter()
            .copied()
            .filter(|v| v.value.abs() > tol)
            .collect()
    }
}

/// Sorts the eigenvalues and groups them: consecutive values within `tol` join a
/// cluster whose representative is the cluster mean. `tol <= 0` groups only
/// identical values.
pub fn cluster_spectrum(eigenvalues: &[f64], tol: f64) -> Spectrum {
    let tol = tol.max(0.0);
    let mut eigenvalues = eigenvalues.to_vec();
    eigenvalues.sort_by(f64::total_cmp);
    let mut values: Vec<SpectralValue> = Vec::new();
    let mut start = 0;
    while start < eigenvalues.len() {
        let mut end = start + 1;
        while end < eigenvalues.len() && eigenvalues[end] - eigenvalues[end - 1] <= tol {
            end += 1;
        }
        let slice = &eigenvalues[start..end];
        values.push(SpectralValue {
            value: slice.iter().sum::<f64>() / slice.len() as f64,
            multiplicity: slice.len(),
        });
        start = end;
    }
    Spectrum {
        values,
        cluster_tolerance: tol,
        trace_check: eigenvalues.iter().sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges_exact_repeats() {
        let s = cluster_spectrum(&[0.0, 0.0, 1.0, 1.0, 1.0], 1e-9);
        assert_eq!(
            s.values,
            vec![
                SpectralValue { value: 0.0, multiplicity: 2 },
                SpectralValue { value: 1.0, multiplicity: 3 }
            ]
        );
        assert_eq!(s.dim(), 5);
    }

    #[test]
    fn merges_near_repeats_to_mean() {
        let s = cluster_spectrum(&[0.2499999999, 0.2500000001], 1e-8);
        assert_eq!(s.values.len(), 1);
        assert!((s.values[0].value - 0.25).abs() < 1e-15);
        assert_eq!(s.values[0].multiplicity, 2);
    }

    #[test]
    fn nonpositive_tolerance_is_exact_grouping() {
        let s = cluster_spectrum(&[1.0, 1.0, 1.0 + 1e-15], 0.0);
        assert_eq!(s.values.len(), 2);
        let s = cluster_spectrum(&[1.0, 1.0], -3.0);
        assert_eq!(s.values.len(), 1);
    }
}

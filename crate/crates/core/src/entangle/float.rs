//! Floating-point route for large Hadamard orders.
//!
//! `Π(K, ℓ)_{yz} = [d(x,y) ≤ ℓ][d(x,z) ≤ ℓ] (1/N) Σ_{k≤K} Q_{d(y,z),k}`, with `Q` from
//! the intersection-array recurrence, so only the `N_ℓ × N_ℓ` support block is built.

use rayon::prelude::*;
use serde::Serialize;

use crate::hadamard::{hadamard_of_order, HadamardMatrix};
use crate::numerics::{FloatMatrix, Spectrum};
use crate::scheme::{build_hadamard_graph, hadamard_eigenvalues_f64, DistanceTable, FloatSpectralData, IntersectionArray};

use super::entropy::{entropy, entropy_limit};
use super::spectra::padded_spectrum;
use super::EntangleError;

#[derive(Clone, Debug)]
pub struct FloatHadamardScheme {
    order: usize,
    table: DistanceTable,
    array: IntersectionArray,
    data: FloatSpectralData,
}

impl FloatHadamardScheme {
    pub fn new(h: &HadamardMatrix) -> Result<Self, EntangleError> {
        let g = build_hadamard_graph(h)?;
        let table = DistanceTable::new(g.graph())?;
        let array = IntersectionArray::from_graph(g.graph(), &table)?;
        let data = FloatSpectralData::from_array(&array, &hadamard_eigenvalues_f64(h.order()));
        Ok(FloatHadamardScheme {
            order: h.order(),
            table,
            array,
            data,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn vertex_count(&self) -> usize {
        self.table.vertex_count()
    }

    pub fn intersection_array(&self) -> &IntersectionArray {
        &self.array
    }

    pub fn spectral_data(&self) -> &FloatSpectralData {
        &self.data
    }

    fn check(&self, k: usize, ell: usize) -> Result<(), EntangleError> {
        let max = self.table.diameter();
        match [k, ell].into_iter().find(|&v| v > max) {
            Some(value) => Err(EntangleError::CutoffOutOfRange { value, max }),
            None => Ok(()),
        }
    }

    /// Vertices within distance `ℓ` of vertex 0, in vertex order.
    pub fn support(&self, ell: usize) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&y| self.table.distance(0, y) <= ell).collect()
    }

    /// Nonzero block of `Π(K, ℓ)` on the ball of radius `ℓ`.
    pub fn chopped_block(&self, k: usize, ell: usize) -> Result<FloatMatrix, EntangleError> {
        self.check(k, ell)?;
        let support = self.support(ell);
        let big_n = self.vertex_count() as f64;
        let by_distance: Vec<f64> = self
            .data
            .q
            .iter()
            .map(|row| row[..=k].iter().sum::<f64>() / big_n)
            .collect();
        Ok(FloatMatrix::from_fn(support.len(), |i, j| {
            by_distance[self.table.distance(support[i], support[j])]
        }))
    }

    /// `N_ℓ F_K / N`.
    pub fn trace(&self, k: usize, ell: usize) -> f64 {
        let nl: f64 = self.data.valencies[..=ell].iter().sum();
        let fk: f64 = self.data.multiplicities[..=k].iter().sum();
        nl * fk / self.vertex_count() as f64
    }

    pub fn spectrum(&self, k: usize, ell: usize, eig_tol: f64, cluster_tol: f64) -> Result<Spectrum, EntangleError> {
        let block = self.chopped_block(k, ell)?;
        padded_spectrum(&block, self.vertex_count(), self.trace(k, ell), eig_tol, cluster_tol)
    }
}

/// One `(n, K, ℓ)` entry of an entropy sweep with the asymptotic comparison columns.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct EntropyRow {
    pub n: usize,
    #[serde(rename = "K")]
    pub k: usize,
    pub ell: usize,
    pub entropy: f64,
    /// `S / n`
    pub per_order: f64,
    /// `S · 4n / ln n`
    pub log_scaled: f64,
    /// `S − (2 ln 2 − ¾ ln 3)`
    pub delta_limit: f64,
    /// `S/n − (2 ln 2 − ¾ ln 3)`
    pub delta_per_order: f64,
    /// `S · 4n / ln n − 1`
    pub delta_log_scaled: f64,
}

impl EntropyRow {
    pub fn new(n: usize, k: usize, ell: usize, entropy: f64) -> Self {
        let nf = n as f64;
        let limit = entropy_limit();
        let log_scaled = entropy * 4.0 * nf / nf.ln();
        EntropyRow {
            n,
            k,
            ell,
            entropy,
            per_order: entropy / nf,
            log_scaled,
            delta_limit: entropy - limit,
            delta_per_order: entropy / nf - limit,
            delta_log_scaled: log_scaled - 1.0,
        }
    }
}

/// Entropies for every order and cutoff pair, computed in parallel; rows come back
/// in `orders × pairs` order.
pub fn entropy_sweep(
    orders: &[usize],
    pairs: &[(usize, usize)],
    eig_tol: f64,
    cluster_tol: f64,
) -> Result<Vec<EntropyRow>, EntangleError> {
    let schemes: Vec<FloatHadamardScheme> = orders
        .par_iter()
        .map(|&n| FloatHadamardScheme::new(&hadamard_of_order(n)?))
        .collect::<Result<_, EntangleError>>()?;
    let jobs: Vec<(&FloatHadamardScheme, usize, usize)> = schemes
        .iter()
        .flat_map(|s| pairs.iter().map(move |&(k, ell)| (s, k, ell)))
        .collect();
    jobs.par_iter()
        .map(|&(s, k, ell)| {
            let spec = s.spectrum(k, ell, eig_tol, cluster_tol)?;
            Ok(EntropyRow::new(s.order(), k, ell, entropy(&spec, 1e-9)?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entangle::{binary_entropy, ExactScheme};
    use crate::hadamard::sylvester;
    use crate::numerics::{DEFAULT_CLUSTER_TOL, DEFAULT_EIG_TOL};

    #[test]
    fn float_block_matches_exact_matrix() {
        let h = sylvester(3).unwrap();
        let f = FloatHadamardScheme::new(&h).unwrap();
        let e = ExactScheme::hadamard(&h).unwrap();
        for (k, ell) in [(1, 1), (2, 2), (3, 1), (2, 3)] {
            let block = f.chopped_block(k, ell).unwrap();
            let exact = e.chopped_correlation(k, ell).unwrap().to_float();
            let support = f.support(ell);
            assert_eq!(support.len(), e.ball_size(ell));
            for (i, &y) in support.iter().enumerate() {
                for (j, &z) in support.iter().enumerate() {
                    assert!((block.get(i, j) - exact.get(y, z)).abs() < 1e-14);
                }
            }
            assert!((f.trace(k, ell) - e.trace_formula(k, ell).to_f64()).abs() < 1e-12);
        }
    }

    #[test]
    fn sweep_matches_binary_entropy_oracle() {
        let rows = entropy_sweep(&[4, 16], &[(3, 1), (1, 3)], DEFAULT_EIG_TOL, DEFAULT_CLUSTER_TOL).unwrap();
        assert_eq!(rows.len(), 4);
        for r in rows {
            let nf = r.n as f64;
            let expect = binary_entropy((3.0 * nf - 1.0) / (4.0 * nf));
            assert!((r.entropy - expect).abs() < 1e-9, "{r:?}");
        }
    }

    #[test]
    fn rejects_bad_cutoff() {
        let f = FloatHadamardScheme::new(&sylvester(2).unwrap()).unwrap();
        assert!(f.chopped_block(5, 1).is_err());
        assert!(f.chopped_block(1, 5).is_err());
    }
}

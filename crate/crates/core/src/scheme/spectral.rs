//! Eigenmatrices straight from the intersection array, in floating point.
//!
//! With `u₀ = 1` and `c_s u_{s−1} + a_s u_s + b_s u_{s+1} = θ u_s`, the scheme has
//! `P_{ks} = n_s u_s(θ_k)`, `f_k = N / Σ_s n_s u_s(θ_k)²` and `Q_{sk} = f_k u_s(θ_k)`.
//! No `N × N` matrix is formed, which is what makes large orders cheap.

use super::IntersectionArray;

/// `(n, √n, 0, −√n, −n)`.
pub fn hadamard_eigenvalues_f64(n: usize) -> Vec<f64> {
    let n = n as f64;
    let r = n.sqrt();
    vec![n, r, 0.0, -r, -n]
}

#[derive(Clone, Debug, PartialEq)]
pub struct FloatSpectralData {
    pub theta: Vec<f64>,
    pub valencies: Vec<f64>,
    pub multiplicities: Vec<f64>,
    /// `P[k][s]`: eigenvalue of `A_s` on the `k`-th eigenspace.
    pub p: Vec<Vec<f64>>,
    /// `Q[s][k] = N (E_k)_{xy}` for `d(x, y) = s`.
    pub q: Vec<Vec<f64>>,
}

impl FloatSpectralData {
    pub fn from_array(array: &IntersectionArray, theta: &[f64]) -> Self {
        let d = array.diameter();
        assert_eq!(theta.len(), d + 1, "need one eigenvalue per class");
        let valencies: Vec<f64> = array.valencies().iter().map(|&v| v as f64).collect();
        let big_n: f64 = valencies.iter().sum();
        let u: Vec<Vec<f64>> = theta
            .iter()
            .map(|&t| {
                let mut u = vec![1.0; d + 1];
                for s in 0..d {
                    let prev = if s == 0 { 0.0 } else { u[s - 1] };
                    let a = array.a_at(s) as f64;
                    let c = array.c_at(s) as f64;
                    u[s + 1] = ((t - a) * u[s] - c * prev) / array.b_at(s) as f64;
                }
                u
            })
            .collect();
        let multiplicities: Vec<f64> = u
            .iter()
            .map(|uk| big_n / uk.iter().zip(&valencies).map(|(x, n)| n * x * x).sum::<f64>())
            .collect();
        let p = u
            .iter()
            .map(|uk| uk.iter().zip(&valencies).map(|(x, n)| n * x).collect())
            .collect();
        let q = (0..=d)
            .map(|s| (0..=d).map(|k| multiplicities[k] * u[k][s]).collect())
            .collect();
        FloatSpectralData {
            theta: theta.to_vec(),
            valencies,
            multiplicities,
            p,
            q,
        }
    }

    pub fn vertex_count(&self) -> f64 {
        self.valencies.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard::sylvester;
    use crate::scheme::SchemeTables;

    fn hadamard_array(n: i64) -> IntersectionArray {
        IntersectionArray {
            b: vec![n, n - 1, n / 2, 1],
            c: vec![1, n / 2, n - 1, n],
        }
    }

    #[test]
    fn recurrence_matches_matrix_route() {
        for k in 1..=3 {
            let h = sylvester(k).unwrap();
            let n = h.order();
            let t = SchemeTables::hadamard(&h).unwrap();
            let f = FloatSpectralData::from_array(&t.intersection_array().unwrap(), &hadamard_eigenvalues_f64(n));
            for i in 0..5 {
                for j in 0..5 {
                    assert!((f.p[i][j] - t.p_matrix()[i][j].to_f64()).abs() < 1e-12);
                    assert!((f.q[i][j] - t.q_matrix()[i][j].to_f64()).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn large_order_is_self_dual() {
        let n = 256;
        let f = FloatSpectralData::from_array(&hadamard_array(n as i64), &hadamard_eigenvalues_f64(n));
        assert_eq!(f.valencies, vec![1.0, 256.0, 510.0, 256.0, 1.0]);
        for k in 0..5 {
            assert!((f.multiplicities[k] - f.valencies[k]).abs() < 1e-9);
            for s in 0..5 {
                assert!((f.p[k][s] - f.q[k][s]).abs() < 1e-9 * n as f64);
            }
        }
        assert_eq!(f.vertex_count(), 1024.0);
    }
}

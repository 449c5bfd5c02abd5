use super::{MatrixAlgebra, NumericsError};

/// Dense square `f64` matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMatrix {
    dim: usize,
    data: Vec<f64>,
}

impl FloatMatrix {
    pub fn zeros(dim: usize) -> Self {
        FloatMatrix {
            dim,
            data: vec![0.0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1.0;
        }
        m
    }

    pub fn from_vec(dim: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), dim * dim, "entry count must be dim²");
        FloatMatrix { dim, data }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let data = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        FloatMatrix { dim, data }
    }

    pub fn from_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        Self::from_fn(n, |i, j| if i == j { diag[i] } else { 0.0 })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.dim + j] = v;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.dim).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        Self::from_fn(d, |i, j| self.data[j * d + i])
    }

    pub fn scale(&self, c: f64) -> Self {
        FloatMatrix {
            dim: self.dim,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn mat_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `max|M − Mᵀ|`.
    pub fn asymmetry(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in i + 1..d {
                worst = worst.max((self.data[i * d + j] - self.data[j * d + i]).abs());
            }
        }
        worst
    }

    /// Symmetric within `1e-12·max|M|`.
    pub fn check_symmetric(&self) -> Result<(), NumericsError> {
        let dev = self.asymmetry();
        if dev <= 1e-12 * self.max_abs() {
            Ok(())
        } else {
            Err(NumericsError::NotSymmetric { deviation: dev })
        }
    }

    /// Principal submatrix on the given (sorted, distinct) indices.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        let k = indices.len();
        Self::from_fn(k, |i, j| self.get(indices[i], indices[j]))
    }

    fn conform(&self, rhs: &Self) -> Result<(), NumericsError> {
        if self.dim == rhs.dim {
            Ok(())
        } else {
            Err(NumericsError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            })
        }
    }
}

impl MatrixAlgebra for FloatMatrix {
    fn dim(&self) -> usize {
        self.dim
    }

    fn try_add(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.conform(rhs)?;
        Ok(FloatMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.conform(rhs)?;
        Ok(FloatMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    fn try_mul(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.conform(rhs)?;
        let d = self.dim;
        let mut out = vec![0.0; d * d];
        for i in 0..d {
            let row = &mut out[i * d..(i + 1) * d];
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == 0.0 {
                    continue;
                }
                for (o, b) in row.iter_mut().zip(&rhs.data[k * d..(k + 1) * d]) {
                    *o += a * b;
                }
            }
        }
        Ok(FloatMatrix { dim: d, data: out })
    }
}

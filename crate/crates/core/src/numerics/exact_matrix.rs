//! Dense square matrices over Q(√n).
//!
//! Entries are stored as two integer numerator arrays over one shared positive
//! denominator: `M = (R + S·√n) / den`. The representation is kept canonical
//! (perfect-square radicands have `S = 0`, and `gcd(den, R, S) = 1`), so derived
//! equality coincides with equality of matrices.
//!
//! Products go through a sparsity-aware integer kernel that runs in `i128` when an
//! a-priori bound rules out overflow and falls back to `BigInt` otherwise.

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use super::scalar::perfect_square_root;
use super::{ExactScalar, FloatMatrix, MatrixAlgebra, NumericsError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    radicand: u64,
    denom: BigInt,
    rational: Vec<BigInt>,
    surd: Vec<BigInt>,
}

impl ExactMatrix {
    fn from_raw(
        dim: usize,
        radicand: u64,
        denom: BigInt,
        rational: Vec<BigInt>,
        surd: Vec<BigInt>,
    ) -> Self {
        assert!(radicand > 0, "radicand must be positive");
        let mut m = ExactMatrix {
            dim,
            radicand,
            denom,
            rational,
            surd,
        };
        m.normalize();
        m
    }

    fn normalize(&mut self) {
        if let Some(s) = perfect_square_root(self.radicand) {
            if self.surd.iter().any(|v| !v.is_zero()) {
                let s = BigInt::from(s);
                for (r, q) in self.rational.iter_mut().zip(self.surd.iter_mut()) {
                    if !q.is_zero() {
                        *r += &*q * &s;
                        *q = BigInt::zero();
                    }
                }
            }
        }
        if self.denom.is_negative() {
            self.denom = -&self.denom;
            self.rational.iter_mut().for_each(|v| *v = -&*v);
            self.surd.iter_mut().for_each(|v| *v = -&*v);
        }
        let mut g = self.denom.clone();
        for v in self.rational.iter().chain(self.surd.iter()) {
            if g.is_one() {
                return;
            }
            if !v.is_zero() {
                g = g.gcd(v);
            }
        }
        if self.rational.iter().chain(self.surd.iter()).all(Zero::is_zero) {
            self.denom = BigInt::one();
            return;
        }
        if !g.is_one() {
            self.denom /= &g;
            self.rational.iter_mut().for_each(|v| *v /= &g);
            self.surd.iter_mut().for_each(|v| *v /= &g);
        }
    }

    pub fn zeros(dim: usize, radicand: u64) -> Self {
        Self::from_raw(
            dim,
            radicand,
            BigInt::one(),
            vec![BigInt::zero(); dim * dim],
            vec![BigInt::zero(); dim * dim],
        )
    }

    pub fn identity(dim: usize, radicand: u64) -> Self {
        let mut r = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            r[i * dim + i] = BigInt::one();
        }
        Self::from_raw(dim, radicand, BigInt::one(), r, vec![BigInt::zero(); dim * dim])
    }

    /// All-ones matrix `J`.
    pub fn ones(dim: usize, radicand: u64) -> Self {
        Self::from_raw(
            dim,
            radicand,
            BigInt::one(),
            vec![BigInt::one(); dim * dim],
            vec![BigInt::zero(); dim * dim],
        )
    }

    /// Integer matrix from row-major entries.
    pub fn from_integers(dim: usize, radicand: u64, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim²");
        Self::from_raw(
            dim,
            radicand,
            BigInt::one(),
            entries.iter().map(|&v| BigInt::from(v)).collect(),
            vec![BigInt::zero(); dim * dim],
        )
    }

    /// Builds the matrix entry by entry. Panics if an entry carries another radicand.
    pub fn from_fn(dim: usize, radicand: u64, mut f: impl FnMut(usize, usize) -> ExactScalar) -> Self {
        let entries: Vec<ExactScalar> = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self::from_scalars(dim, radicand, &entries)
    }

    pub fn from_scalars(dim: usize, radicand: u64, entries: &[ExactScalar]) -> Self {
        assert_eq!(entries.len(), dim * dim, "entry count must be dim²");
        let mut denom = BigInt::one();
        for e in entries {
            assert_eq!(e.radicand(), radicand, "entry radicand mismatch");
            denom = denom.lcm(e.rational_part().denom());
            denom = denom.lcm(e.surd_part().denom());
        }
        let scale = |r: &BigRational| r.numer() * (&denom / r.denom());
        let rational = entries.iter().map(|e| scale(e.rational_part())).collect();
        let surd = entries.iter().map(|e| scale(e.surd_part())).collect();
        Self::from_raw(dim, radicand, denom, rational, surd)
    }

    pub fn diagonal(radicand: u64, diag: &[ExactScalar]) -> Self {
        let dim = diag.len();
        let zero = ExactScalar::zero(radicand);
        Self::from_fn(dim, radicand, |i, j| if i == j { diag[i].clone() } else { zero.clone() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn get(&self, i: usize, j: usize) -> ExactScalar {
        let k = i * self.dim + j;
        ExactScalar::new(
            BigRational::new(self.rational[k].clone(), self.denom.clone()),
            BigRational::new(self.surd[k].clone(), self.denom.clone()),
            self.radicand,
        )
    }

    pub fn is_zero(&self) -> bool {
        self.rational.iter().chain(self.surd.iter()).all(Zero::is_zero)
    }

    pub fn is_entry_zero(&self, i: usize, j: usize) -> bool {
        let k = i * self.dim + j;
        self.rational[k].is_zero() && self.surd[k].is_zero()
    }

    pub fn is_symmetric(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (i + 1..d).all(|j| {
                self.rational[i * d + j] == self.rational[j * d + i]
                    && self.surd[i * d + j] == self.surd[j * d + i]
            })
        })
    }

    pub fn is_diagonal(&self) -> bool {
        let d = self.dim;
        (0..d * d).all(|k| k / d == k % d || (self.rational[k].is_zero() && self.surd[k].is_zero()))
    }

    pub fn trace(&self) -> ExactScalar {
        let d = self.dim;
        let r: BigInt = (0..d).map(|i| &self.rational[i * d + i]).sum();
        let s: BigInt = (0..d).map(|i| &self.surd[i * d + i]).sum();
        ExactScalar::new(
            BigRational::new(r, self.denom.clone()),
            BigRational::new(s, self.denom.clone()),
            self.radicand,
        )
    }

    pub fn diagonal_entries(&self) -> Vec<ExactScalar> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        let t = |v: &[BigInt]| (0..d * d).map(|k| v[(k % d) * d + k / d].clone()).collect();
        ExactMatrix {
            dim: d,
            radicand: self.radicand,
            denom: self.denom.clone(),
            rational: t(&self.rational),
            surd: t(&self.surd),
        }
    }

    fn check_conforming(&self, rhs: &Self) -> Result<(), NumericsError> {
        if self.radicand != rhs.radicand {
            return Err(NumericsError::RadicandMismatch {
                left: self.radicand,
                right: rhs.radicand,
            });
        }
        if self.dim != rhs.dim {
            return Err(NumericsError::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        Ok(())
    }

    fn combine(&self, rhs: &Self, sign: i32) -> Result<Self, NumericsError> {
        self.check_conforming(rhs)?;
        let denom = self.denom.lcm(&rhs.denom);
        let fa = &denom / &self.denom;
        let fb = &denom / &rhs.denom;
        let mix = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
            a.iter()
                .zip(b)
                .map(|(x, y)| {
                    let l = x * &fa;
                    let r = y * &fb;
                    if sign >= 0 {
                        l + r
                    } else {
                        l - r
                    }
                })
                .collect()
        };
        Ok(Self::from_raw(
            self.dim,
            self.radicand,
            denom,
            mix(&self.rational, &rhs.rational),
            mix(&self.surd, &rhs.surd),
        ))
    }

    /// Multiplies every entry by an exact scalar.
    pub fn scale(&self, c: &ExactScalar) -> Result<Self, NumericsError> {
        if c.radicand() != self.radicand {
            return Err(NumericsError::RadicandMismatch {
                left: self.radicand,
                right: c.radicand(),
            });
        }
        let m = c.rational_part().denom().lcm(c.surd_part().denom());
        let a = c.rational_part().numer() * (&m / c.rational_part().denom());
        let b = c.surd_part().numer() * (&m / c.surd_part().denom());
        let n = BigInt::from(self.radicand);
        let bn = &b * &n;
        let rational = self
            .rational
            .iter()
            .zip(&self.surd)
            .map(|(r, s)| &a * r + &bn * s)
            .collect();
        let surd = self
            .rational
            .iter()
            .zip(&self.surd)
            .map(|(r, s)| &a * s + &b * r)
            .collect();
        Ok(Self::from_raw(self.dim, self.radicand, &self.denom * m, rational, surd))
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&ExactScalar::integer(c, self.radicand))
            .expect("same radicand")
    }

    /// Entrywise (Schur) product `A ∘ B`.
    pub fn hadamard(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.check_conforming(rhs)?;
        let n = BigInt::from(self.radicand);
        let len = self.dim * self.dim;
        let mut rational = Vec::with_capacity(len);
        let mut surd = Vec::with_capacity(len);
        for k in 0..len {
            let (r1, s1, r2, s2) = (&self.rational[k], &self.surd[k], &rhs.rational[k], &rhs.surd[k]);
            rational.push(r1 * r2 + s1 * s2 * &n);
            surd.push(r1 * s2 + s1 * r2);
        }
        Ok(Self::from_raw(self.dim, self.radicand, &self.denom * &rhs.denom, rational, surd))
    }

    /// `Σ cᵢ·Mᵢ` for matrices of a common shape.
    pub fn linear_combination(
        terms: &[(ExactScalar, &ExactMatrix)],
        dim: usize,
        radicand: u64,
    ) -> Result<Self, NumericsError> {
        let mut acc = ExactMatrix::zeros(dim, radicand);
        for (c, m) in terms {
            if c.is_zero() {
                continue;
            }
            acc = acc.try_add(&m.scale(c)?)?;
        }
        Ok(acc)
    }

    /// Keeps rows and columns whose flag is set; zeroes everything else.
    /// Equal to `D·M·D` for the 0/1 diagonal matrix `D` of the flags.
    pub fn mask(&self, keep: &[bool]) -> Self {
        assert_eq!(keep.len(), self.dim);
        let d = self.dim;
        let pick = |v: &[BigInt]| {
            (0..d * d)
                .map(|k| {
                    if keep[k / d] && keep[k % d] {
                        v[k].clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        };
        Self::from_raw(d, self.radicand, self.denom.clone(), pick(&self.rational), pick(&self.surd))
    }

    /// Single entry `(self · rhs)_{ij}` without forming the product.
    pub fn product_entry(&self, rhs: &Self, i: usize, j: usize) -> Result<ExactScalar, NumericsError> {
        self.check_conforming(rhs)?;
        let d = self.dim;
        let n = BigInt::from(self.radicand);
        let mut r = BigInt::zero();
        let mut s = BigInt::zero();
        for z in 0..d {
            let (r1, s1) = (&self.rational[i * d + z], &self.surd[i * d + z]);
            let (r2, s2) = (&rhs.rational[z * d + j], &rhs.surd[z * d + j]);
            if !r1.is_zero() || !s1.is_zero() {
                r += r1 * r2 + s1 * s2 * &n;
                s += r1 * s2 + s1 * r2;
            }
        }
        let den = &self.denom * &rhs.denom;
        Ok(ExactScalar::new(
            BigRational::new(r, den.clone()),
            BigRational::new(s, den),
            self.radicand,
        ))
    }

    /// Floating-point evaluation.
    pub fn to_float(&self) -> FloatMatrix {
        let den = self.denom.to_f64().unwrap_or(f64::NAN);
        let root = (self.radicand as f64).sqrt();
        let data = self
            .rational
            .iter()
            .zip(&self.surd)
            .map(|(r, s)| {
                let rv = ratio_to_f64(r, &self.denom, den);
                if s.is_zero() {
                    rv
                } else {
                    rv + ratio_to_f64(s, &self.denom, den) * root
                }
            })
            .collect();
        FloatMatrix::from_vec(self.dim, data)
    }

    /// Largest absolute entry of the float evaluation (human-readable residual size).
    pub fn max_abs(&self) -> f64 {
        self.to_float().max_abs()
    }
}

fn ratio_to_f64(num: &BigInt, den: &BigInt, den_f: f64) -> f64 {
    match num.to_f64() {
        Some(v) if v.is_finite() && den_f.is_finite() => v / den_f,
        _ => BigRational::new(num.clone(), den.clone()).to_f64().unwrap_or(f64::NAN),
    }
}

/// Square integer product `a·b` over `dim × dim` row-major arrays.
fn int_matmul(a: &[BigInt], b: &[BigInt], dim: usize) -> Vec<BigInt> {
    let max_a = a.iter().map(|v| v.abs()).max().unwrap_or_default();
    let max_b = b.iter().map(|v| v.abs()).max().unwrap_or_default();
    if max_a.is_zero() || max_b.is_zero() {
        return vec![BigInt::zero(); dim * dim];
    }
    // |c_ij| ≤ dim·max_a·max_b; leave headroom for the caller's additions
    let bound = BigInt::from(dim) * &max_a * &max_b;
    if bound.bits() < 120 {
        let a: Vec<i128> = a.iter().map(|v| v.to_i128().unwrap()).collect();
        let b: Vec<i128> = b.iter().map(|v| v.to_i128().unwrap()).collect();
        let rows = sparse_rows(&b, dim);
        let mut out = vec![0i128; dim * dim];
        for i in 0..dim {
            let row = &mut out[i * dim..(i + 1) * dim];
            for k in 0..dim {
                let aik = a[i * dim + k];
                if aik == 0 {
                    continue;
                }
                for &(j, bkj) in &rows[k] {
                    row[j] += aik * bkj;
                }
            }
        }
        out.into_iter().map(BigInt::from).collect()
    } else {
        let rows = sparse_rows_ref(b, dim);
        let mut out = vec![BigInt::zero(); dim * dim];
        for i in 0..dim {
            for k in 0..dim {
                let aik = &a[i * dim + k];
                if aik.is_zero() {
                    continue;
                }
                for &(j, bkj) in &rows[k] {
                    out[i * dim + j] += aik * bkj;
                }
            }
        }
        out
    }
}

fn sparse_rows(b: &[i128], dim: usize) -> Vec<Vec<(usize, i128)>> {
    (0..dim)
        .map(|k| {
            (0..dim)
                .filter(|&j| b[k * dim + j] != 0)
                .map(|j| (j, b[k * dim + j]))
                .collect()
        })
        .collect()
}

fn sparse_rows_ref(b: &[BigInt], dim: usize) -> Vec<Vec<(usize, &BigInt)>> {
    (0..dim)
        .map(|k| {
            (0..dim)
                .filter(|&j| !b[k * dim + j].is_zero())
                .map(|j| (j, &b[k * dim + j]))
                .collect()
        })
        .collect()
}

fn add_vecs(a: Vec<BigInt>, b: Vec<BigInt>) -> Vec<BigInt> {
    a.into_iter().zip(b).map(|(x, y)| x + y).collect()
}

impl MatrixAlgebra for ExactMatrix {
    fn dim(&self) -> usize {
        self.dim
    }

    fn try_add(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.combine(rhs, 1)
    }

    fn try_sub(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.combine(rhs, -1)
    }

    /// `(R₁ + S₁√n)(R₂ + S₂√n) = (R₁R₂ + n·S₁S₂) + (R₁S₂ + S₁R₂)√n`.
    fn try_mul(&self, rhs: &Self) -> Result<Self, NumericsError> {
        self.check_conforming(rhs)?;
        let d = self.dim;
        let zero = || vec![BigInt::zero(); d * d];
        let lhs_surd = self.surd.iter().any(|v| !v.is_zero());
        let rhs_surd = rhs.surd.iter().any(|v| !v.is_zero());
        let mut rational = int_matmul(&self.rational, &rhs.rational, d);
        if lhs_surd && rhs_surd {
            let n = BigInt::from(self.radicand);
            let ss = int_matmul(&self.surd, &rhs.surd, d);
            rational = rational.into_iter().zip(ss).map(|(x, y)| x + y * &n).collect();
        }
        let surd = match (lhs_surd, rhs_surd) {
            (false, false) => zero(),
            (true, false) => int_matmul(&self.surd, &rhs.rational, d),
            (false, true) => int_matmul(&self.rational, &rhs.surd, d),
            (true, true) => add_vecs(
                int_matmul(&self.rational, &rhs.surd, d),
                int_matmul(&self.surd, &rhs.rational, d),
            ),
        };
        Ok(Self::from_raw(d, self.radicand, &self.denom * &rhs.denom, rational, surd))
    }
}

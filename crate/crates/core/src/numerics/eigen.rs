//! Dense symmetric eigensolver.
//!
//! The production path is Householder reduction to tridiagonal form followed by
//! implicit-shift QL iteration. A cyclic Jacobi solver is kept alongside as an
//! independent reference for small matrices.

use super::{FloatMatrix, MatrixAlgebra, NumericsError};

/// QL sweeps allowed per eigenvalue before giving up.
const MAX_QL_ITERATIONS: usize = 64;
const MAX_JACOBI_SWEEPS: usize = 100;

/// Default relative residual tolerance.
pub const DEFAULT_EIG_TOL: f64 = 1e-10;

/// Eigenvalues in ascending order with orthonormal eigenvectors stored as columns.
#[derive(Clone, Debug)]
pub struct Eigen {
    pub values: Vec<f64>,
    pub vectors: FloatMatrix,
}

impl Eigen {
    /// `max_k ‖M v_k − λ_k v_k‖₂`.
    pub fn max_residual(&self, m: &FloatMatrix) -> f64 {
        let mv = m.try_mul(&self.vectors).expect("conforming");
        let d = m.dim();
        (0..d)
            .map(|k| {
                (0..d)
                    .map(|i| {
                        let r = mv.get(i, k) - self.values[k] * self.vectors.get(i, k);
                        r * r
                    })
                    .sum::<f64>()
                    .sqrt()
            })
            .fold(0.0, f64::max)
    }

    /// `max|VᵀV − I|`.
    pub fn orthonormality_defect(&self) -> f64 {
        let vt = self.vectors.transpose();
        let g = vt.try_mul(&self.vectors).expect("conforming");
        g.try_sub(&FloatMatrix::identity(g.dim()))
            .expect("conforming")
            .max_abs()
    }
}

/// Householder tridiagonalization. Returns (diagonal, subdiagonal with `e[0] = 0`,
/// accumulated orthogonal transform in row-major `a[k][i]` = component k of basis vector i).
fn householder_tridiagonal(m: &FloatMatrix, vectors: bool) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let n = m.dim();
    let mut a = m.as_slice().to_vec();
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    let idx = |i: usize, j: usize| i * n + j;

    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[idx(i, k)].abs()).sum();
            if scale == 0.0 {
                e[i] = a[idx(i, l)];
            } else {
                for k in 0..=l {
                    a[idx(i, k)] /= scale;
                    h += a[idx(i, k)] * a[idx(i, k)];
                }
                let f = a[idx(i, l)];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[idx(i, l)] = f - g;
                let mut f = 0.0;
                for j in 0..=l {
                    if vectors {
                        a[idx(j, i)] = a[idx(i, j)] / h;
                    }
                    let mut g = 0.0;
                    for k in 0..=j {
                        g += a[idx(j, k)] * a[idx(i, k)];
                    }
                    for k in j + 1..=l {
                        g += a[idx(k, j)] * a[idx(i, k)];
                    }
                    e[j] = g / h;
                    f += e[j] * a[idx(i, j)];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f = a[idx(i, j)];
                    let g = e[j] - hh * f;
                    e[j] = g;
                    for k in 0..=j {
                        a[idx(j, k)] -= f * e[k] + g * a[idx(i, k)];
                    }
                }
            }
        } else {
            e[i] = a[idx(i, l)];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if vectors {
            if d[i] != 0.0 {
                for j in 0..i {
                    let g: f64 = (0..i).map(|k| a[idx(i, k)] * a[idx(k, j)]).sum();
                    for k in 0..i {
                        a[idx(k, j)] -= g * a[idx(k, i)];
                    }
                }
            }
            d[i] = a[idx(i, i)];
            a[idx(i, i)] = 1.0;
            for j in 0..i {
                a[idx(j, i)] = 0.0;
                a[idx(i, j)] = 0.0;
            }
        } else {
            d[i] = a[idx(i, i)];
        }
    }
    (d, e, a)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix. `zt` holds eigenvectors as
/// rows (so rotations touch contiguous memory) when present.
fn tridiagonal_ql(
    d: &mut [f64],
    e: &mut [f64],
    mut zt: Option<&mut [f64]>,
) -> Result<(), NumericsError> {
    let n = d.len();
    for i in 1..n {
        e[i - 1] = e[i];
    }
    if n > 0 {
        e[n - 1] = 0.0;
    }
    // Absolute floor so clusters of noise-level eigenvalues still deflate; dropping
    // `|e| ≤ ε‖T‖` is a backward-stable perturbation.
    let floor = f64::EPSILON * d.iter().zip(e.iter()).map(|(a, b)| a.abs() + b.abs()).fold(0.0, f64::max);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd || e[m].abs() <= floor {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            if iter == MAX_QL_ITERATIONS {
                return Err(NumericsError::NoConvergence {
                    index: l,
                    iterations: iter,
                });
            }
            iter += 1;
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = zt.as_deref_mut() {
                    let (lo, hi) = z.split_at_mut((i + 1) * n);
                    let zi = &mut lo[i * n..];
                    let zi1 = &mut hi[..n];
                    for k in 0..n {
                        let f = zi1[k];
                        zi1[k] = s * zi[k] + c * f;
                        zi[k] = c * zi[k] - s * f;
                    }
                }
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

fn check_input(m: &FloatMatrix) -> Result<(), NumericsError> {
    if m.dim() == 0 {
        return Err(NumericsError::Empty);
    }
    if m.as_slice().iter().any(|v| !v.is_finite()) {
        return Err(NumericsError::NonFinite);
    }
    m.check_symmetric()
}

fn symmetrized(m: &FloatMatrix) -> FloatMatrix {
    let d = m.dim();
    FloatMatrix::from_fn(d, |i, j| 0.5 * (m.get(i, j) + m.get(j, i)))
}

/// Eigenvalues only, ascending.
pub fn symmetric_eigenvalues(m: &FloatMatrix) -> Result<Vec<f64>, NumericsError> {
    check_input(m)?;
    let (mut d, mut e, _) = householder_tridiagonal(&symmetrized(m), false);
    tridiagonal_ql(&mut d, &mut e, None)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// Full decomposition with residual verification: every pair satisfies
/// `‖Mv − λv‖₂ ≤ tol·‖M‖_F` or an error is returned.
pub fn symmetric_eig(m: &FloatMatrix, tol: f64) -> Result<Eigen, NumericsError> {
    check_input(m)?;
    let n = m.dim();
    let sym = symmetrized(m);
    let (mut d, mut e, a) = householder_tridiagonal(&sym, true);
    // rows of zt are eigenvectors
    let mut zt: Vec<f64> = (0..n * n).map(|k| a[(k % n) * n + k / n]).collect();
    tridiagonal_ql(&mut d, &mut e, Some(&mut zt))?;
    let eig = finish(d, &zt, n, sym.frobenius_norm());
    verify_residual(&sym, &eig, tol)?;
    Ok(eig)
}

/// Cyclic Jacobi rotations; a slow, independent reference for small matrices.
pub fn jacobi_eig(m: &FloatMatrix) -> Result<Eigen, NumericsError> {
    check_input(m)?;
    let n = m.dim();
    let mut a = symmetrized(m).as_slice().to_vec();
    let frob = m.frobenius_norm();
    let mut v: Vec<f64> = FloatMatrix::identity(n).as_slice().to_vec();
    let idx = |i: usize, j: usize| i * n + j;
    for _sweep in 0..MAX_JACOBI_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[idx(i, j)] * a[idx(i, j)])
            .sum();
        if off.sqrt() <= f64::EPSILON * n as f64 * frob.max(f64::MIN_POSITIVE) {
            let values: Vec<f64> = (0..n).map(|i| a[idx(i, i)]).collect();
            // vectors as rows for `finish`
            let zt: Vec<f64> = (0..n * n).map(|k| v[(k % n) * n + k / n]).collect();
            return Ok(finish(values, &zt, n, frob));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[idx(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[idx(q, q)] - a[idx(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[idx(k, p)];
                    let akq = a[idx(k, q)];
                    a[idx(k, p)] = c * akp - s * akq;
                    a[idx(k, q)] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[idx(p, k)];
                    let aqk = a[idx(q, k)];
                    a[idx(p, k)] = c * apk - s * aqk;
                    a[idx(q, k)] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[idx(k, p)];
                    let vkq = v[idx(k, q)];
                    v[idx(k, p)] = c * vkp - s * vkq;
                    v[idx(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    Err(NumericsError::NoConvergence {
        index: 0,
        iterations: MAX_JACOBI_SWEEPS,
    })
}

/// Sorts eigenpairs ascending and re-orthonormalizes each near-degenerate cluster
/// with modified Gram–Schmidt.
fn finish(values: Vec<f64>, zt: &[f64], n: usize, scale: f64) -> Eigen {
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let sorted: Vec<f64> = order.iter().map(|&k| values[k]).collect();
    let mut rows: Vec<Vec<f64>> = order.iter().map(|&k| zt[k * n..(k + 1) * n].to_vec()).collect();

    let gap = 1e-8 * scale.max(1.0);
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && sorted[end] - sorted[end - 1] <= gap {
            end += 1;
        }
        if end - start > 1 {
            // two passes of MGS restore orthogonality to working precision
            for _ in 0..2 {
                for i in start..end {
                    for j in start..i {
                        let dot: f64 = rows[i].iter().zip(&rows[j]).map(|(a, b)| a * b).sum();
                        let (head, tail) = rows.split_at_mut(i);
                        for (x, y) in tail[0].iter_mut().zip(&head[j]) {
                            *x -= dot * y;
                        }
                    }
                    let norm = rows[i].iter().map(|x| x * x).sum::<f64>().sqrt();
                    if norm > 0.0 {
                        rows[i].iter_mut().for_each(|x| *x /= norm);
                    }
                }
            }
        }
        start = end;
    }
    let vectors = FloatMatrix::from_fn(n, |i, k| rows[k][i]);
    Eigen {
        values: sorted,
        vectors,
    }
}

fn verify_residual(m: &FloatMatrix, eig: &Eigen, tol: f64) -> Result<(), NumericsError> {
    let frob = m.frobenius_norm();
    let residual = eig.max_residual(m);
    if residual <= tol * frob.max(f64::MIN_POSITIVE) {
        Ok(())
    } else {
        Err(NumericsError::ResidualTooLarge {
            residual,
            bound: tol * frob,
        })
    }
}

//! Dual idempotents and dual distance matrices with respect to a base vertex,
//! the vanishing criteria linking triple products to `p_{ij}^k` and `q_{ij}^k`,
//! block-tridiagonal decompositions, and the cubic relations between `A` and `A*`.

use thiserror::Error;

use crate::numerics::{ExactMatrix, ExactScalar, MatrixAlgebra, NumericsError};
use crate::scheme::{AxiomReport, SchemeTables};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum TerwilligerError {
    #[error("base vertex {index} out of range for {count} vertices")]
    BaseVertex { index: usize, count: usize },
    #[error("projector family does not sum to the identity")]
    NotResolution,
    #[error("block decomposition does not reconstruct the matrix")]
    Reconstruction,
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// `E*_i(x)` with `(E*_i)_{yy} = (A_i)_{xy}`.
pub fn dual_idempotents(x: usize, a: &[ExactMatrix]) -> Vec<ExactMatrix> {
    a.iter()
        .map(|m| {
            let diag: Vec<ExactScalar> = (0..m.dim()).map(|y| m.get(x, y)).collect();
            ExactMatrix::diagonal(m.radicand(), &diag)
        })
        .collect()
}

/// `A*_i(x)` with `(A*_i)_{yy} = N (E_i)_{xy}`.
pub fn dual_distance(x: usize, e: &[ExactMatrix]) -> Vec<ExactMatrix> {
    e.iter()
        .map(|m| {
            let n = ExactScalar::integer(m.dim() as i64, m.radicand());
            let diag: Vec<ExactScalar> = (0..m.dim()).map(|y| &n * &m.get(x, y)).collect();
            ExactMatrix::diagonal(m.radicand(), &diag)
        })
        .collect()
}

/// Dual idempotents and dual distance matrices at one base vertex.
#[derive(Clone, Debug)]
pub struct TerwilligerBasis {
    base: usize,
    dual_idempotents: Vec<ExactMatrix>,
    dual_distance: Vec<ExactMatrix>,
}

impl TerwilligerBasis {
    pub fn new(tables: &SchemeTables, base: usize) -> Result<Self, TerwilligerError> {
        let count = tables.vertex_count();
        if base >= count {
            return Err(TerwilligerError::BaseVertex { index: base, count });
        }
        Ok(TerwilligerBasis {
            base,
            dual_idempotents: dual_idempotents(base, tables.distance_matrices()),
            dual_distance: dual_distance(base, tables.idempotents()),
        })
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn dual_idempotents(&self) -> &[ExactMatrix] {
        &self.dual_idempotents
    }

    pub fn dual_distance(&self) -> &[ExactMatrix] {
        &self.dual_distance
    }

    /// `A* = A*₁`.
    pub fn a_star(&self) -> &ExactMatrix {
        &self.dual_distance[1]
    }

    /// Membership flags of the shell `{y : d(x, y) = i}`.
    pub fn shell(&self, i: usize) -> Vec<bool> {
        let m = &self.dual_idempotents[i];
        (0..m.dim()).map(|y| !m.is_entry_zero(y, y)).collect()
    }

    /// Flags of `{y : d(x, y) ≤ ℓ}`.
    pub fn ball(&self, ell: usize) -> Vec<bool> {
        let mut keep = vec![false; self.dual_idempotents[0].dim()];
        for i in 0..=ell.min(self.dual_idempotents.len() - 1) {
            for (k, f) in self.shell(i).into_iter().enumerate() {
                keep[k] |= f;
            }
        }
        keep
    }

    /// Exact checks of the dual relations against the scheme tables.
    pub fn verify(&self, tables: &SchemeTables) -> Result<AxiomReport, TerwilligerError> {
        let es = &self.dual_idempotents;
        let as_ = &self.dual_distance;
        let size = es.len();
        let dim = tables.vertex_count();
        let r = tables.radicand();
        let zero = ExactMatrix::zeros(dim, r);
        let identity = ExactMatrix::identity(dim, r);
        let mut report = AxiomReport::default();

        let sum = es.iter().try_fold(zero.clone(), |acc, m| acc.try_add(m))?;
        report.push("Σ E*_i = I", sum == identity);
        let mut orth = true;
        let mut krein = true;
        for i in 0..size {
            for j in 0..size {
                let p = es[i].try_mul(&es[j])?;
                orth &= p == if i == j { es[i].clone() } else { zero.clone() };
                let terms: Vec<(ExactScalar, &ExactMatrix)> = (0..size)
                    .map(|k| (tables.krein_parameters().get(i, j, k).clone(), &as_[k]))
                    .collect();
                krein &= ExactMatrix::linear_combination(&terms, dim, r)? == as_[i].try_mul(&as_[j])?;
            }
        }
        report.push("E*_i E*_j = δ_ij E*_i", orth);
        report.push("A*_i A*_j = Σ_k q_ij^k A*_k", krein);
        report.push("A*_0 = I", as_[0] == identity);
        let terms: Vec<(ExactScalar, &ExactMatrix)> =
            (0..size).map(|i| (tables.q_matrix()[i][1].clone(), &es[i])).collect();
        report.push("A* = Σ_i Q_i1 E*_i", ExactMatrix::linear_combination(&terms, dim, r)? == as_[1]);
        let traces_ok = es
            .iter()
            .zip(tables.valencies())
            .all(|(m, &v)| m.trace() == ExactScalar::integer(v as i64, r));
        report.push("tr E*_i = n_i", traces_ok);
        Ok(report)
    }
}

/// Which side of the duality a vanishing mismatch came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleKind {
    /// `E*_i A_j E*_k` against `p_{ij}^k`.
    Distance,
    /// `E_i A*_j E_k` against `q_{ij}^k`.
    Dual,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TripleViolation {
    pub kind: TripleKind,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub product_zero: bool,
    pub parameter_zero: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VanishingReport {
    pub checked: usize,
    pub violations: Vec<TripleViolation>,
}

impl VanishingReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For every `(i, j, k)`: `E*_i A_j E*_k = 0 ⇔ p_{ij}^k = 0` and
/// `E_i A*_j E_k = 0 ⇔ q_{ij}^k = 0`, each triple product formed exactly.
pub fn triple_vanishing_check(
    basis: &TerwilligerBasis,
    tables: &SchemeTables,
) -> Result<VanishingReport, TerwilligerError> {
    let es = basis.dual_idempotents();
    let as_ = basis.dual_distance();
    let a = tables.distance_matrices();
    let e = tables.idempotents();
    let size = a.len();
    let mut report = VanishingReport::default();
    for i in 0..size {
        for j in 0..size {
            let left = es[i].try_mul(&a[j])?;
            let left_dual = e[i].try_mul(&as_[j])?;
            for k in 0..size {
                let product_zero = left.try_mul(&es[k])?.is_zero();
                let parameter_zero = tables.intersection_numbers().is_zero(i, j, k);
                report.checked += 1;
                if product_zero != parameter_zero {
                    report.violations.push(TripleViolation {
                        kind: TripleKind::Distance,
                        i,
                        j,
                        k,
                        product_zero,
                        parameter_zero,
                    });
                }
                let product_zero = left_dual.try_mul(&e[k])?.is_zero();
                let parameter_zero = tables.krein_parameters().is_zero(i, j, k);
                report.checked += 1;
                if product_zero != parameter_zero {
                    report.violations.push(TripleViolation {
                        kind: TripleKind::Dual,
                        i,
                        j,
                        k,
                        product_zero,
                        parameter_zero,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// All blocks `F_i M F_j` of a matrix with respect to a resolution of the identity.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    size: usize,
    blocks: Vec<ExactMatrix>,
}

impl BlockDecomposition {
    pub fn block(&self, i: usize, j: usize) -> &ExactMatrix {
        &self.blocks[i * self.size + j]
    }

    pub fn is_zero(&self, i: usize, j: usize) -> bool {
        self.block(i, j).is_zero()
    }

    /// Largest `|i − j|` over nonzero blocks.
    pub fn bandwidth(&self) -> usize {
        let mut w = 0;
        for i in 0..self.size {
            for j in 0..self.size {
                if !self.is_zero(i, j) {
                    w = w.max(i.abs_diff(j));
                }
            }
        }
        w
    }

    pub fn is_block_tridiagonal(&self) -> bool {
        self.bandwidth() <= 1
    }
}

/// Splits `M = Σ_{i,j} F_i M F_j` and checks the sum reconstructs `M` exactly.
pub fn block_tridiagonal_decompose(
    m: &ExactMatrix,
    family: &[ExactMatrix],
) -> Result<BlockDecomposition, TerwilligerError> {
    let dim = m.dim();
    let r = m.radicand();
    let zero = ExactMatrix::zeros(dim, r);
    let total = family.iter().try_fold(zero.clone(), |acc, f| acc.try_add(f))?;
    if total != ExactMatrix::identity(dim, r) {
        return Err(TerwilligerError::NotResolution);
    }
    let size = family.len();
    let mut blocks = Vec::with_capacity(size * size);
    for fi in family {
        let left = fi.try_mul(m)?;
        for fj in family {
            blocks.push(left.try_mul(fj)?);
        }
    }
    let rebuilt = blocks.iter().try_fold(zero, |acc, b| acc.try_add(b))?;
    if rebuilt != *m {
        return Err(TerwilligerError::Reconstruction);
    }
    Ok(BlockDecomposition { size, blocks })
}

/// Residuals of the two cubic relations.
#[derive(Clone, Debug)]
pub struct CubicResidual {
    /// `A²A* − ρAA*A + A*A² − τA*`
    pub first: ExactMatrix,
    /// `A*²A − ρA*AA* + AA*² − τA`
    pub second: ExactMatrix,
}

impl CubicResidual {
    pub fn vanishes(&self) -> bool {
        self.first.is_zero() && self.second.is_zero()
    }

    pub fn max_abs(&self) -> (f64, f64) {
        (self.first.max_abs(), self.second.max_abs())
    }
}

fn cubic(x: &ExactMatrix, y: &ExactMatrix, rho: &ExactScalar, tau: &ExactScalar) -> Result<ExactMatrix, NumericsError> {
    let x2 = x.try_mul(x)?;
    let xyx = x.try_mul(y)?.try_mul(x)?;
    x2.try_mul(y)?
        .try_sub(&xyx.scale(rho)?)?
        .try_add(&y.try_mul(&x2)?)?
        .try_sub(&y.scale(tau)?)
}

pub fn cubic_relation_residual(
    a: &ExactMatrix,
    a_star: &ExactMatrix,
    rho: &ExactScalar,
    tau: &ExactScalar,
) -> Result<CubicResidual, TerwilligerError> {
    Ok(CubicResidual {
        first: cubic(a, a_star, rho, tau)?,
        second: cubic(a_star, a, rho, tau)?,
    })
}

/// `θ_i² − ρθ_iθ_{i−1} + θ_{i−1}² − τ = 0` for `i = 1..d`.
pub fn theta_identity_holds(theta: &[ExactScalar], rho: &ExactScalar, tau: &ExactScalar) -> bool {
    theta.windows(2).all(|w| {
        let (prev, cur) = (&w[0], &w[1]);
        let v = &(&(cur * cur) - &(&(rho * cur) * prev)) + &(&(prev * prev) - tau);
        v.is_zero()
    })
}

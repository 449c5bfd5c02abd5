use crate::hadamard::HadamardMatrix;
use crate::numerics::{ExactMatrix, ExactScalar, MatrixAlgebra};
use crate::scheme::SchemeTables;
use crate::terwilliger::TerwilligerBasis;

use super::EntangleError;

/// Scheme tables together with a Terwilliger basis at a fixed base vertex.
#[derive(Clone, Debug)]
pub struct ExactScheme {
    tables: SchemeTables,
    basis: TerwilligerBasis,
}

impl ExactScheme {
    pub fn new(tables: SchemeTables, base: usize) -> Result<Self, EntangleError> {
        let basis = TerwilligerBasis::new(&tables, base)?;
        Ok(ExactScheme { tables, basis })
    }

    /// Hadamard scheme with base vertex `c₀⁺`.
    pub fn hadamard(h: &HadamardMatrix) -> Result<Self, EntangleError> {
        Self::new(SchemeTables::hadamard(h)?, 0)
    }

    pub fn tables(&self) -> &SchemeTables {
        &self.tables
    }

    pub fn basis(&self) -> &TerwilligerBasis {
        &self.basis
    }

    pub fn diameter(&self) -> usize {
        self.tables.diameter()
    }

    fn check_cutoff(&self, value: usize) -> Result<(), EntangleError> {
        let max = self.diameter();
        if value > max {
            Err(EntangleError::CutoffOutOfRange { value, max })
        } else {
            Ok(())
        }
    }

    /// `N_ℓ = Σ_{s≤ℓ} n_s`.
    pub fn ball_size(&self, ell: usize) -> usize {
        self.tables.valencies()[..=ell.min(self.diameter())].iter().sum()
    }

    /// `F_K = Σ_{k≤K} f_k`.
    pub fn filled_dimension(&self, k: usize) -> usize {
        self.tables.multiplicities()[..=k.min(self.diameter())].iter().sum()
    }

    /// Ground-state correlation matrix `π₂(K) = Σ_{k≤K} E_k`.
    pub fn ground_state_correlation(&self, k: usize) -> Result<ExactMatrix, EntangleError> {
        self.check_cutoff(k)?;
        let e = self.tables.idempotents();
        Ok(e[1..=k].iter().try_fold(e[0].clone(), |acc, m| acc.try_add(m))?)
    }

    /// `π₁(ℓ) = Σ_{s≤ℓ} E*_s`.
    pub fn spatial_projector(&self, ell: usize) -> Result<ExactMatrix, EntangleError> {
        self.check_cutoff(ell)?;
        let es = self.basis.dual_idempotents();
        Ok(es[1..=ell].iter().try_fold(es[0].clone(), |acc, m| acc.try_add(m))?)
    }

    pub fn projectors(&self, k: usize, ell: usize) -> Result<ProjectorPair, EntangleError> {
        Ok(ProjectorPair {
            k,
            ell,
            pi1: self.spatial_projector(ell)?,
            pi2: self.ground_state_correlation(k)?,
        })
    }

    /// `Π(K, ℓ) = π₁(ℓ) π₂(K) π₁(ℓ)`. Since `π₁` is a 0/1 diagonal this is `π₂(K)`
    /// with everything outside the ball of radius `ℓ` zeroed.
    pub fn chopped_correlation(&self, k: usize, ell: usize) -> Result<ExactMatrix, EntangleError> {
        self.check_cutoff(ell)?;
        Ok(self.ground_state_correlation(k)?.mask(&self.basis.ball(ell)))
    }

    /// `D(K, ℓ) = π₂(K) π₁(ℓ) π₂(K)`.
    pub fn dual_correlation(&self, k: usize, ell: usize) -> Result<ExactMatrix, EntangleError> {
        let pi2 = self.ground_state_correlation(k)?;
        let pi1 = self.spatial_projector(ell)?;
        Ok(pi2.try_mul(&pi1)?.try_mul(&pi2)?)
    }

    /// `trace Π(K, ℓ) = N_ℓ F_K / N`, from integer data alone.
    pub fn trace_formula(&self, k: usize, ell: usize) -> ExactScalar {
        ExactScalar::ratio(
            (self.ball_size(ell) * self.filled_dimension(k)) as i64,
            self.tables.vertex_count() as i64,
            self.tables.radicand(),
        )
    }

    /// `T(K, ℓ) = {A, A*} + μA* + νA` with `μ = −P_{K,1} − P_{K+1,1}` and
    /// `ν = −Q_{ℓ,1} − Q_{ℓ+1,1}`; defined for `K, ℓ < d`.
    pub fn heun_operator(&self, k: usize, ell: usize) -> Result<HeunOperator, EntangleError> {
        let d = self.diameter();
        if k >= d || ell >= d {
            return Err(EntangleError::HeunUndefined { k, ell, diameter: d });
        }
        let p = self.tables.p_matrix();
        let q = self.tables.q_matrix();
        let mu = -(&p[k][1] + &p[k + 1][1]);
        let nu = -(&q[ell][1] + &q[ell + 1][1]);
        let a = self.tables.adjacency();
        let a_star = self.basis.a_star();
        let t = a
            .anticommutator(a_star)?
            .try_add(&a_star.scale(&mu)?)?
            .try_add(&a.scale(&nu)?)?;
        Ok(HeunOperator { k, ell, mu, nu, t })
    }
}

/// `π₁(ℓ)` and `π₂(K)`.
#[derive(Clone, Debug)]
pub struct ProjectorPair {
    pub k: usize,
    pub ell: usize,
    pub pi1: ExactMatrix,
    pub pi2: ExactMatrix,
}

impl ProjectorPair {
    pub fn chopped(&self) -> Result<ExactMatrix, EntangleError> {
        Ok(self.pi1.try_mul(&self.pi2)?.try_mul(&self.pi1)?)
    }

    pub fn are_projectors(&self) -> Result<bool, EntangleError> {
        Ok(self.pi1.try_mul(&self.pi1)? == self.pi1
            && self.pi2.try_mul(&self.pi2)? == self.pi2
            && self.pi1.is_symmetric()
            && self.pi2.is_symmetric())
    }
}

/// Exact commutator status of `T(K, ℓ)` with the two projectors and `Π(K, ℓ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CommutationStatus {
    pub pi1: bool,
    pub pi2: bool,
    pub chopped: bool,
}

impl CommutationStatus {
    pub fn all(&self) -> bool {
        self.pi1 && self.pi2 && self.chopped
    }
}

#[derive(Clone, Debug)]
pub struct HeunOperator {
    pub k: usize,
    pub ell: usize,
    pub mu: ExactScalar,
    pub nu: ExactScalar,
    pub t: ExactMatrix,
}

/// Scalar coefficients of `T` in the neighbourhood basis:
/// `T = Σ_i diag_adjacency_i E*_iAE*_i + Σ_i shift_i E*_i + Σ_i off_i (E*_{i−1}AE*_i + E*_iAE*_{i−1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeunBlockCoefficients {
    /// `μ Q_{i,1}`
    pub shift: Vec<ExactScalar>,
    /// `2Q_{i,1} + ν`
    pub diag_adjacency: Vec<ExactScalar>,
    /// `Q_{i−1,1} + Q_{i,1} + ν` for `i = 1..=d`
    pub off: Vec<ExactScalar>,
}

impl HeunOperator {
    pub fn commutation(&self, pair: &ProjectorPair) -> Result<CommutationStatus, EntangleError> {
        let chopped = pair.chopped()?;
        Ok(CommutationStatus {
            pi1: self.t.commutator(&pair.pi1)?.is_zero(),
            pi2: self.t.commutator(&pair.pi2)?.is_zero(),
            chopped: self.t.commutator(&chopped)?.is_zero(),
        })
    }

    /// Coefficients of the neighbourhood-basis expansion; with `(θ, Q)` swapped for
    /// `(θ*, P)` and `(μ, ν)` exchanged they give the eigenspace-basis expansion.
    fn coefficients(col: &[ExactScalar], scale: &ExactScalar, shift: &ExactScalar) -> HeunBlockCoefficients {
        let two = ExactScalar::integer(2, scale.radicand());
        HeunBlockCoefficients {
            shift: col.iter().map(|c| scale * c).collect(),
            diag_adjacency: col.iter().map(|c| &(&two * c) + shift).collect(),
            off: col.windows(2).map(|w| &(&w[0] + &w[1]) + shift).collect(),
        }
    }

    pub fn dual_basis_coefficients(&self, tables: &SchemeTables) -> HeunBlockCoefficients {
        let col: Vec<ExactScalar> = tables.q_matrix().iter().map(|row| row[1].clone()).collect();
        Self::coefficients(&col, &self.mu, &self.nu)
    }

    pub fn primal_basis_coefficients(&self, tables: &SchemeTables) -> HeunBlockCoefficients {
        let col: Vec<ExactScalar> = tables.p_matrix().iter().map(|row| row[1].clone()).collect();
        Self::coefficients(&col, &self.nu, &self.mu)
    }

    /// `Σ c_i F_i X F_i + Σ s_i F_i + Σ o_i (F_{i−1} X F_i + F_i X F_{i−1})`.
    fn assemble(
        coeffs: &HeunBlockCoefficients,
        family: &[ExactMatrix],
        x: &ExactMatrix,
    ) -> Result<ExactMatrix, EntangleError> {
        let mut acc = ExactMatrix::zeros(x.dim(), x.radicand());
        for (i, f) in family.iter().enumerate() {
            let fx = f.try_mul(x)?;
            acc = acc
                .try_add(&fx.try_mul(f)?.scale(&coeffs.diag_adjacency[i])?)?
                .try_add(&f.scale(&coeffs.shift[i])?)?;
            if i > 0 {
                let up = family[i - 1].try_mul(x)?.try_mul(f)?;
                let down = fx.try_mul(&family[i - 1])?;
                acc = acc.try_add(&up.try_add(&down)?.scale(&coeffs.off[i - 1])?)?;
            }
        }
        Ok(acc)
    }

    /// Expansion over the dual idempotents `E*_i` with `A` in the blocks.
    pub fn dual_expansion(&self, scheme: &ExactScheme) -> Result<ExactMatrix, EntangleError> {
        let c = self.dual_basis_coefficients(scheme.tables());
        Self::assemble(&c, scheme.basis().dual_idempotents(), scheme.tables().adjacency())
    }

    /// Expansion over the primitive idempotents `E_i` with `A*` in the blocks.
    pub fn primal_expansion(&self, scheme: &ExactScheme) -> Result<ExactMatrix, EntangleError> {
        let c = self.primal_basis_coefficients(scheme.tables());
        Self::assemble(&c, scheme.tables().idempotents(), scheme.basis().a_star())
    }
}

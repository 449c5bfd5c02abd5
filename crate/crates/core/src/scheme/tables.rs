use num::{BigRational, ToPrimitive};
use serde::Serialize;
use serde_json::Value;

use crate::hadamard::HadamardMatrix;
use crate::numerics::{ExactMatrix, ExactScalar, MatrixAlgebra};

use super::graph::{build_hadamard_graph, build_hypercube, distance_matrices, DistanceTable, Graph};
use super::SchemeError;

/// Square table of exact scalars, indexed `[row][column]`.
pub type ScalarTable = Vec<Vec<ExactScalar>>;

/// Cube of exact scalars indexed `[i][j][k]`, used for `p_{ij}^k` and `q_{ij}^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    size: usize,
    data: Vec<ExactScalar>,
}

impl Tensor3 {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &ExactScalar {
        &self.data[(i * self.size + j) * self.size + k]
    }

    pub fn is_zero(&self, i: usize, j: usize, k: usize) -> bool {
        self.get(i, j, k).is_zero()
    }

    pub fn to_json(&self) -> Value {
        let s = self.size;
        Value::Array(
            (0..s)
                .map(|i| {
                    Value::Array(
                        (0..s)
                            .map(|j| Value::Array((0..s).map(|k| exact_parts_json(self.get(i, j, k))).collect()))
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

/// `[a_num, a_den, b_num, b_den]`, using JSON integers when they fit in `i64`.
pub(crate) fn exact_parts_json(x: &ExactScalar) -> Value {
    let part = |r: &BigRational| {
        [r.numer(), r.denom()].map(|v| match v.to_i64() {
            Some(i) => Value::from(i),
            None => Value::from(v.to_string()),
        })
    };
    let [an, ad] = part(x.rational_part());
    let [bn, bd] = part(x.surd_part());
    Value::Array(vec![an, ad, bn, bd])
}

fn table_json(t: &ScalarTable) -> Value {
    Value::Array(
        t.iter()
            .map(|row| Value::Array(row.iter().map(exact_parts_json).collect()))
            .collect(),
    )
}

/// `{b₀..b_{d−1}; c₁..c_d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntersectionArray {
    pub b: Vec<i64>,
    pub c: Vec<i64>,
}

impl IntersectionArray {
    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    /// `b_i` for `i = 0..=d` with `b_d = 0`.
    pub fn b_at(&self, i: usize) -> i64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i` for `i = 0..=d` with `c_0 = 0`.
    pub fn c_at(&self, i: usize) -> i64 {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    /// `a_i = b₀ − b_i − c_i`.
    pub fn a_at(&self, i: usize) -> i64 {
        self.b[0] - self.b_at(i) - self.c_at(i)
    }

    /// Counts `b_i`, `c_i` around vertex 0 and checks every pair `(x, y)` of the graph
    /// has the same counts for its distance.
    pub fn from_graph(graph: &Graph, table: &DistanceTable) -> Result<Self, SchemeError> {
        let d = table.diameter();
        let n = table.vertex_count();
        let counts = |x: usize, y: usize| {
            let i = table.distance(x, y);
            let mut up = 0i64;
            let mut down = 0i64;
            for &z in graph.neighbours(y) {
                let dz = table.distance(x, z);
                if dz == i + 1 {
                    up += 1;
                } else if dz + 1 == i {
                    down += 1;
                }
            }
            (i, up, down)
        };
        let mut b = vec![-1i64; d + 1];
        let mut c = vec![-1i64; d + 1];
        for x in 0..n {
            for y in 0..n {
                let (i, up, down) = counts(x, y);
                if b[i] < 0 {
                    b[i] = up;
                    c[i] = down;
                } else if b[i] != up || c[i] != down {
                    return Err(SchemeError::NotAScheme(format!(
                        "graph is not distance-regular at ({x}, {y})"
                    )));
                }
            }
        }
        Ok(IntersectionArray {
            b: b[..d].to_vec(),
            c: c[1..].to_vec(),
        })
    }

    /// Valencies `n_i = n_{i−1} b_{i−1} / c_i`.
    pub fn valencies(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for i in 1..=self.diameter() {
            let prev = out[i - 1];
            out.push(prev * self.b_at(i - 1) as u64 / self.c_at(i) as u64);
        }
        out
    }
}

impl std::fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(&self.b), join(&self.c))
    }
}

/// Metric, cometric and formally-self-dual flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PolynomialFlags {
    pub metric: bool,
    pub cometric: bool,
    pub formally_self_dual: bool,
}

/// First nonzero entry of row 0, per matrix; `A_k` always has one for a scheme.
fn representatives(a: &[ExactMatrix]) -> Result<Vec<usize>, SchemeError> {
    a.iter()
        .enumerate()
        .map(|(k, m)| {
            (0..m.dim())
                .find(|&y| !m.is_entry_zero(0, y))
                .ok_or_else(|| SchemeError::NotAScheme(format!("A_{k} has an empty first row")))
        })
        .collect()
}

/// Reads `p_{ij}^k` off `A_iA_j` at one entry per class, then checks
/// `A_iA_j = Σ_k p_{ij}^k A_k` for every pair.
pub fn intersection_numbers(a: &[ExactMatrix]) -> Result<Tensor3, SchemeError> {
    let size = a.len();
    let reps = representatives(a)?;
    let dim = a[0].dim();
    let radicand = a[0].radicand();
    let mut data = vec![ExactScalar::zero(radicand); size * size * size];
    for i in 0..size {
        for j in 0..size {
            let prod = a[i].try_mul(&a[j])?;
            let coeffs: Vec<ExactScalar> = (0..size).map(|k| prod.get(0, reps[k])).collect();
            let terms: Vec<(ExactScalar, &ExactMatrix)> =
                coeffs.iter().cloned().zip(a.iter()).collect();
            if ExactMatrix::linear_combination(&terms, dim, radicand)? != prod {
                return Err(SchemeError::NotAScheme(format!(
                    "A_{i}·A_{j} is not a combination of the distance matrices"
                )));
            }
            for (k, c) in coeffs.into_iter().enumerate() {
                data[(i * size + j) * size + k] = c;
            }
        }
    }
    Ok(Tensor3 { size, data })
}

/// `b_i = p_{1,i+1}^i`, `c_i = p_{1,i−1}^i`; requires a metric ordering.
pub fn intersection_array(p: &Tensor3) -> Result<IntersectionArray, SchemeError> {
    if !structure_is_polynomial(p) {
        return Err(SchemeError::NotMetric);
    }
    let d = p.size() - 1;
    let int = |x: &ExactScalar| x.to_i64().ok_or(SchemeError::NotMetric);
    let b = (0..d).map(|i| int(p.get(1, i + 1, i))).collect::<Result<_, _>>()?;
    let c = (1..=d).map(|i| int(p.get(1, i - 1, i))).collect::<Result<_, _>>()?;
    Ok(IntersectionArray { b, c })
}

/// Triangle vanishing (`x_{ij}^k = 0` when one index exceeds the sum of the other
/// two) and nonvanishing on the boundary `k = i + j`.
fn structure_is_polynomial(t: &Tensor3) -> bool {
    let s = t.size();
    for i in 0..s {
        for j in 0..s {
            for k in 0..s {
                let outside = i + j < k || i + k < j || j + k < i;
                if outside && !t.is_zero(i, j, k) {
                    return false;
                }
                if k == i + j && t.is_zero(i, j, k) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn polynomial_checks(p: &Tensor3, q: &Tensor3, pm: &ScalarTable, qm: &ScalarTable) -> PolynomialFlags {
    PolynomialFlags {
        metric: structure_is_polynomial(p),
        cometric: structure_is_polynomial(q),
        formally_self_dual: pm == qm,
    }
}

/// Coefficients (ascending degree) of `Π_j (x − roots_j)`.
fn poly_from_roots(roots: &[&ExactScalar], radicand: u64) -> Vec<ExactScalar> {
    let mut coeffs = vec![ExactScalar::one(radicand)];
    for r in roots {
        let mut next = vec![ExactScalar::zero(radicand); coeffs.len() + 1];
        for (m, c) in coeffs.iter().enumerate() {
            next[m + 1] = &next[m + 1] + c;
            next[m] = &next[m] - &(c * *r);
        }
        coeffs = next;
    }
    coeffs
}

fn eval_poly(coeffs: &[ExactScalar], powers: &[ExactMatrix]) -> Result<ExactMatrix, SchemeError> {
    let terms: Vec<(ExactScalar, &ExactMatrix)> = coeffs.iter().cloned().zip(powers.iter()).collect();
    Ok(ExactMatrix::linear_combination(&terms, powers[0].dim(), powers[0].radicand())?)
}

/// Lagrange projectors `E_k = Π_{j≠k} (A − θ_j I)/(θ_k − θ_j)`.
///
/// The list is accepted when the θ are distinct, `Π_j (A − θ_j I) = 0` (so the
/// projectors are orthogonal idempotents summing to `I` with `A = Σ θ_k E_k`) and
/// no projector vanishes.
pub fn idempotents(a1: &ExactMatrix, theta: &[ExactScalar]) -> Result<Vec<ExactMatrix>, SchemeError> {
    let radicand = a1.radicand();
    let d = theta.len();
    if d == 0 {
        return Err(SchemeError::BadEigenvalues("empty list".into()));
    }
    let mut powers = vec![ExactMatrix::identity(a1.dim(), radicand)];
    for _ in 0..d {
        let next = powers.last().unwrap().try_mul(a1)?;
        powers.push(next);
    }
    let all: Vec<&ExactScalar> = theta.iter().collect();
    if !eval_poly(&poly_from_roots(&all, radicand), &powers)?.is_zero() {
        return Err(SchemeError::BadEigenvalues(
            "Π (A − θ_j I) is not zero; the list misses an eigenvalue".into(),
        ));
    }
    let mut out = Vec::with_capacity(d);
    for k in 0..d {
        let others: Vec<&ExactScalar> = (0..d).filter(|&j| j != k).map(|j| &theta[j]).collect();
        let mut denom = ExactScalar::one(radicand);
        for t in &others {
            denom = &denom * &(&theta[k] - *t);
        }
        if denom.is_zero() {
            return Err(SchemeError::BadEigenvalues(format!("θ_{k} is repeated")));
        }
        let inv = denom.inv()?;
        let coeffs: Vec<ExactScalar> = poly_from_roots(&others, radicand).iter().map(|c| c * &inv).collect();
        let e = eval_poly(&coeffs, &powers[..d])?;
        if e.is_zero() {
            return Err(SchemeError::BadEigenvalues(format!("θ_{k} is not an eigenvalue")));
        }
        out.push(e);
    }
    Ok(out)
}

/// `P_{ij} = (A_jE_i)_{00}/(E_i)_{00}` and `Q_{ij} = N (E_j)_{0y}` with `d(0, y) = i`,
/// verified through both change-of-basis relations and `PQ = NI`.
pub fn eigenmatrices(a: &[ExactMatrix], e: &[ExactMatrix]) -> Result<(ScalarTable, ScalarTable), SchemeError> {
    let size = a.len();
    if e.len() != size {
        return Err(SchemeError::ChangeOfBasis(format!(
            "{} distance matrices but {} idempotents",
            size,
            e.len()
        )));
    }
    let dim = a[0].dim();
    let radicand = a[0].radicand();
    let big_n = ExactScalar::integer(dim as i64, radicand);
    let reps = representatives(a)?;
    let mut pm = vec![vec![ExactScalar::zero(radicand); size]; size];
    for i in 0..size {
        let e00 = e[i].get(0, 0);
        if e00.is_zero() {
            return Err(SchemeError::ChangeOfBasis(format!("(E_{i})_00 = 0")));
        }
        for j in 0..size {
            pm[i][j] = a[j].product_entry(&e[i], 0, 0)?.checked_div(&e00)?;
        }
    }
    let qm: ScalarTable = (0..size)
        .map(|i| (0..size).map(|j| &big_n * &e[j].get(0, reps[i])).collect())
        .collect();

    let inv_n = big_n.inv()?;
    for j in 0..size {
        let terms: Vec<(ExactScalar, &ExactMatrix)> = (0..size).map(|i| (pm[i][j].clone(), &e[i])).collect();
        if ExactMatrix::linear_combination(&terms, dim, radicand)? != a[j] {
            return Err(SchemeError::ChangeOfBasis(format!("A_{j} ≠ Σ_i P_i{j} E_i")));
        }
        let terms: Vec<(ExactScalar, &ExactMatrix)> =
            (0..size).map(|i| (&qm[i][j] * &inv_n, &a[i])).collect();
        if ExactMatrix::linear_combination(&terms, dim, radicand)? != e[j] {
            return Err(SchemeError::ChangeOfBasis(format!("E_{j} ≠ (1/N) Σ_i Q_i{j} A_i")));
        }
    }
    if !pq_is_n_identity(&pm, &qm, &big_n) {
        return Err(SchemeError::ChangeOfBasis("PQ ≠ NI".into()));
    }
    Ok((pm, qm))
}

fn pq_is_n_identity(pm: &ScalarTable, qm: &ScalarTable, big_n: &ExactScalar) -> bool {
    let size = pm.len();
    let zero = ExactScalar::zero(big_n.radicand());
    (0..size).all(|i| {
        (0..size).all(|j| {
            let s = (0..size).fold(zero.clone(), |acc, k| &acc + &(&pm[i][k] * &qm[k][j]));
            s == if i == j { big_n.clone() } else { zero.clone() }
        })
    })
}

/// `q_{ij}^k = N ((E_i ∘ E_j) E_k)_{00} / (E_k)_{00}` under the convention
/// `E_i ∘ E_j = (1/N) Σ_k q_{ij}^k E_k`, verified by reconstruction.
pub fn krein_parameters(e: &[ExactMatrix]) -> Result<Tensor3, SchemeError> {
    let size = e.len();
    let dim = e[0].dim();
    let radicand = e[0].radicand();
    let big_n = ExactScalar::integer(dim as i64, radicand);
    let inv_n = big_n.inv()?;
    let diag: Vec<ExactScalar> = e.iter().map(|m| m.get(0, 0)).collect();
    let mut data = vec![ExactScalar::zero(radicand); size * size * size];
    for i in 0..size {
        for j in 0..size {
            let schur = e[i].hadamard(&e[j])?;
            let mut terms = Vec::with_capacity(size);
            for k in 0..size {
                let q = (&big_n * &schur.product_entry(&e[k], 0, 0)?).checked_div(&diag[k])?;
                terms.push((&q * &inv_n, &e[k]));
                data[(i * size + j) * size + k] = q;
            }
            if ExactMatrix::linear_combination(&terms, dim, radicand)? != schur {
                return Err(SchemeError::KreinReconstruction { i, j });
            }
        }
    }
    Ok(Tensor3 { size, data })
}

/// `(n, √n, 0, −√n, −n)` over Q(√n).
pub fn hadamard_eigenvalues(n: u64) -> Vec<ExactScalar> {
    let r = ExactScalar::sqrt_radicand(n);
    vec![
        ExactScalar::integer(n as i64, n),
        r.clone(),
        ExactScalar::zero(n),
        -r,
        ExactScalar::integer(-(n as i64), n),
    ]
}

/// `θ_i = L − 2i`, descending so the ordering is Q-polynomial.
pub fn hypercube_eigenvalues(dimension: u32, radicand: u64) -> Vec<ExactScalar> {
    (0..=dimension as i64)
        .map(|i| ExactScalar::integer(dimension as i64 - 2 * i, radicand))
        .collect()
}

/// Complete Bose–Mesner data of a distance-regular graph.
#[derive(Clone, Debug)]
pub struct SchemeTables {
    distance_table: DistanceTable,
    distance: Vec<ExactMatrix>,
    theta: Vec<ExactScalar>,
    idempotents: Vec<ExactMatrix>,
    p_matrix: ScalarTable,
    q_matrix: ScalarTable,
    intersection: Tensor3,
    krein: Tensor3,
    valencies: Vec<usize>,
    multiplicities: Vec<usize>,
}

impl SchemeTables {
    /// Builds and cross-checks every table; `theta` fixes the idempotent ordering.
    pub fn from_graph(graph: &Graph, theta: Vec<ExactScalar>, radicand: u64) -> Result<Self, SchemeError> {
        let table = DistanceTable::new(graph)?;
        let distance = distance_matrices(&table, radicand);
        if theta.len() != distance.len() {
            return Err(SchemeError::BadEigenvalues(format!(
                "expected {} eigenvalues for diameter {}, got {}",
                distance.len(),
                table.diameter(),
                theta.len()
            )));
        }
        if theta.iter().any(|t| t.radicand() != radicand) {
            return Err(SchemeError::BadEigenvalues("eigenvalue radicand differs from the scheme's".into()));
        }
        let intersection = intersection_numbers(&distance)?;
        let idempotents = idempotents(&distance[1], &theta)?;
        let (p_matrix, q_matrix) = eigenmatrices(&distance, &idempotents)?;
        let krein = krein_parameters(&idempotents)?;
        let valencies = table.shell_sizes(0);
        let multiplicities = idempotents
            .iter()
            .map(|e| e.trace().to_i64().map(|v| v as usize))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| SchemeError::BadEigenvalues("idempotent trace is not an integer".into()))?;
        Ok(SchemeTables {
            distance_table: table,
            distance,
            theta,
            idempotents,
            p_matrix,
            q_matrix,
            intersection,
            krein,
            valencies,
            multiplicities,
        })
    }

    /// Scheme of the Hadamard graph of `h`, over Q(√n).
    pub fn hadamard(h: &HadamardMatrix) -> Result<Self, SchemeError> {
        let g = build_hadamard_graph(h)?;
        let n = h.order() as u64;
        Self::from_graph(g.graph(), hadamard_eigenvalues(n), n)
    }

    /// Hamming scheme `H(L, 2)` over Q.
    pub fn hypercube(dimension: u32) -> Result<Self, SchemeError> {
        let g = build_hypercube(dimension)?;
        Self::from_graph(&g, hypercube_eigenvalues(dimension, 1), 1)
    }

    pub fn diameter(&self) -> usize {
        self.distance.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.distance[0].dim()
    }

    pub fn radicand(&self) -> u64 {
        self.distance[0].radicand()
    }

    pub fn distance_table(&self) -> &DistanceTable {
        &self.distance_table
    }

    pub fn distance_matrices(&self) -> &[ExactMatrix] {
        &self.distance
    }

    pub fn adjacency(&self) -> &ExactMatrix {
        &self.distance[1]
    }

    pub fn eigenvalues(&self) -> &[ExactScalar] {
        &self.theta
    }

    pub fn idempotents(&self) -> &[ExactMatrix] {
        &self.idempotents
    }

    pub fn p_matrix(&self) -> &ScalarTable {
        &self.p_matrix
    }

    pub fn q_matrix(&self) -> &ScalarTable {
        &self.q_matrix
    }

    pub fn intersection_numbers(&self) -> &Tensor3 {
        &self.intersection
    }

    pub fn krein_parameters(&self) -> &Tensor3 {
        &self.krein
    }

    pub fn valencies(&self) -> &[usize] {
        &self.valencies
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn intersection_array(&self) -> Result<IntersectionArray, SchemeError> {
        intersection_array(&self.intersection)
    }

    pub fn polynomial_flags(&self) -> PolynomialFlags {
        polynomial_checks(&self.intersection, &self.krein, &self.p_matrix, &self.q_matrix)
    }

    /// Re-derives every scheme axiom from the stored matrices with exact arithmetic.
    pub fn verify_axioms(&self) -> Result<AxiomReport, SchemeError> {
        let size = self.distance.len();
        let dim = self.vertex_count();
        let r = self.radicand();
        let a = &self.distance;
        let e = &self.idempotents;
        let big_n = ExactScalar::integer(dim as i64, r);
        let inv_n = big_n.inv()?;
        let identity = ExactMatrix::identity(dim, r);
        let ones = ExactMatrix::ones(dim, r);
        let zero = ExactMatrix::zeros(dim, r);
        let sum = |ms: &[ExactMatrix]| -> Result<ExactMatrix, SchemeError> {
            ms.iter().try_fold(zero.clone(), |acc, m| Ok(acc.try_add(m)?))
        };
        let mut report = AxiomReport::default();

        report.push("A_0 = I", a[0] == identity);
        report.push("E_0 = J/N", e[0] == ones.scale(&inv_n)?);
        report.push("Σ A_i = J", sum(a)? == ones);
        report.push("Σ E_i = I", sum(e)? == identity);

        let mut schur_ok = true;
        let mut idem_ok = true;
        let mut commute_ok = true;
        let mut p_ok = true;
        let mut q_ok = true;
        for i in 0..size {
            for j in 0..size {
                let s = a[i].hadamard(&a[j])?;
                schur_ok &= s == if i == j { a[i].clone() } else { zero.clone() };
                let pe = e[i].try_mul(&e[j])?;
                idem_ok &= pe == if i == j { e[i].clone() } else { zero.clone() };
                let aa = a[i].try_mul(&a[j])?;
                if j > i {
                    commute_ok &= aa == a[j].try_mul(&a[i])?;
                }
                let terms: Vec<(ExactScalar, &ExactMatrix)> =
                    (0..size).map(|k| (self.intersection.get(i, j, k).clone(), &a[k])).collect();
                p_ok &= ExactMatrix::linear_combination(&terms, dim, r)? == aa;
                let terms: Vec<(ExactScalar, &ExactMatrix)> =
                    (0..size).map(|k| (self.krein.get(i, j, k) * &inv_n, &e[k])).collect();
                q_ok &= ExactMatrix::linear_combination(&terms, dim, r)? == e[i].hadamard(&e[j])?;
            }
        }
        report.push("A_i ∘ A_j = δ_ij A_i", schur_ok);
        report.push("E_i E_j = δ_ij E_i", idem_ok);
        report.push("A_i A_j = A_j A_i", commute_ok);
        report.push("A_i A_j = Σ_k p_ij^k A_k", p_ok);
        report.push("E_i ∘ E_j = (1/N) Σ_k q_ij^k E_k", q_ok);

        let mut pa_ok = true;
        let mut qe_ok = true;
        for j in 0..size {
            let terms: Vec<(ExactScalar, &ExactMatrix)> =
                (0..size).map(|i| (self.p_matrix[i][j].clone(), &e[i])).collect();
            pa_ok &= ExactMatrix::linear_combination(&terms, dim, r)? == a[j];
            let terms: Vec<(ExactScalar, &ExactMatrix)> =
                (0..size).map(|i| (&self.q_matrix[i][j] * &inv_n, &a[i])).collect();
            qe_ok &= ExactMatrix::linear_combination(&terms, dim, r)? == e[j];
        }
        report.push("A_j = Σ_i P_ij E_i", pa_ok);
        report.push("E_j = (1/N) Σ_i Q_ij A_i", qe_ok);
        report.push("P Q = N I", pq_is_n_identity(&self.p_matrix, &self.q_matrix, &big_n));
        report.push(
            "A_1 = Σ_k θ_k E_k",
            ExactMatrix::linear_combination(
                &self.theta.iter().cloned().zip(e.iter()).collect::<Vec<_>>(),
                dim,
                r,
            )? == a[1],
        );
        let diag_ok = e.iter().zip(&self.multiplicities).all(|(m, &f)| {
            let target = ExactScalar::ratio(f as i64, dim as i64, r);
            m.diagonal_entries().iter().all(|v| *v == target)
        });
        report.push("diag(E_k) = f_k/N", diag_ok);
        Ok(report)
    }

    /// JSON export with exact entries as `[a_num, a_den, b_num, b_den]`.
    pub fn to_json(&self) -> Value {
        serde_json::json!({
            "vertex_count": self.vertex_count(),
            "diameter": self.diameter(),
            "radicand": self.radicand(),
            "eigenvalues": self.theta.iter().map(exact_parts_json).collect::<Vec<_>>(),
            "valencies": self.valencies,
            "multiplicities": self.multiplicities,
            "P": table_json(&self.p_matrix),
            "Q": table_json(&self.q_matrix),
            "p": self.intersection.to_json(),
            "q": self.krein.to_json(),
        })
    }
}

/// One named exact check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn push(&mut self, name: &str, passed: bool) {
        self.checks.push(AxiomCheck {
            name: name.to_string(),
            passed,
        });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

//! Hadamard matrices: Sylvester and Paley constructions, verification,
//! normalization, and the `H̄`, `M₁`, `M₂` blocks used to write the Hadamard-graph
//! distance matrices in closed form.
//!
//! Everything here is integer arithmetic.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest Sylvester exponent accepted.
pub const MAX_SYLVESTER_EXPONENT: u32 = 12;
/// Largest Hadamard order produced by the Paley construction.
pub const MAX_PALEY_ORDER: u64 = 4096;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HadamardError {
    #[error("sylvester exponent {0} exceeds cap {MAX_SYLVESTER_EXPONENT}")]
    ExponentTooLarge(u32),
    #[error("paley order {0} exceeds cap {MAX_PALEY_ORDER}")]
    OrderTooLarge(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{q} is not congruent to 3 mod 4 (got {residue})")]
    WrongResidueClass { q: u64, residue: u64 },
    #[error("matrix is not Hadamard: max |H·Hᵀ − nI| = {max_deviation}")]
    NotHadamard { max_deviation: i64 },
    #[error("malformed sign matrix: {0}")]
    Malformed(String),
    #[error("no built-in construction for order {0}")]
    UnsupportedOrder(usize),
}

/// Dense integer matrix with arbitrary shape, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols.max(1), k % cols.max(1))).collect();
        IntMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    /// `self · otherᵀ`
    pub fn mul_transpose(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.cols, "inner dimensions must agree");
        IntMatrix::from_fn(self.rows, other.rows, |i, j| {
            (0..self.cols).map(|k| self.get(i, k) * other.get(j, k)).sum()
        })
    }

    pub fn add(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j) - other.get(i, j))
    }
}

/// A square matrix with entries in {+1, −1}; not necessarily Hadamard.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixFile", into = "MatrixFile")]
pub struct SignMatrix {
    order: usize,
    entries: Vec<i8>,
}

/// On-disk form: `{"order": n, "rows": [[±1, ...], ...]}`.
#[derive(Serialize, Deserialize)]
struct MatrixFile {
    order: usize,
    rows: Vec<Vec<i64>>,
}

impl TryFrom<MatrixFile> for SignMatrix {
    type Error = HadamardError;
    fn try_from(file: MatrixFile) -> Result<Self, HadamardError> {
        if file.rows.len() != file.order {
            return Err(HadamardError::Malformed(format!(
                "order {} but {} rows",
                file.order,
                file.rows.len()
            )));
        }
        SignMatrix::from_rows(&file.rows)
    }
}

impl From<SignMatrix> for MatrixFile {
    fn from(m: SignMatrix) -> Self {
        MatrixFile {
            order: m.order,
            rows: m.rows(),
        }
    }
}

impl SignMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self, HadamardError> {
        let order = rows.len();
        if order == 0 {
            return Err(HadamardError::Malformed("empty matrix".into()));
        }
        let mut entries = Vec::with_capacity(order * order);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(HadamardError::Malformed(format!(
                    "row {i} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                match v {
                    1 => entries.push(1),
                    -1 => entries.push(-1),
                    other => {
                        return Err(HadamardError::Malformed(format!(
                            "entry {other} in row {i} is not ±1"
                        )))
                    }
                }
            }
        }
        Ok(SignMatrix { order, entries })
    }

    fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> i8) -> Self {
        let entries = (0..order * order).map(|k| f(k / order, k % order)).collect();
        SignMatrix { order, entries }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.order)
            .map(|i| (0..self.order).map(|j| self.get(i, j) as i64).collect())
            .collect()
    }

    pub fn transpose(&self) -> SignMatrix {
        SignMatrix::from_fn(self.order, |i, j| self.get(j, i))
    }

    pub fn negate_row(&mut self, i: usize) {
        let n = self.order;
        self.entries[i * n..(i + 1) * n].iter_mut().for_each(|v| *v = -*v);
    }

    pub fn negate_column(&mut self, j: usize) {
        let n = self.order;
        for i in 0..n {
            self.entries[i * n + j] = -self.entries[i * n + j];
        }
    }

    pub fn is_normalized(&self) -> bool {
        (0..self.order).all(|k| self.get(0, k) == 1 && self.get(k, 0) == 1)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("sign matrix serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, HadamardError> {
        serde_json::from_str(text).map_err(|e| HadamardError::Malformed(e.to_string()))
    }
}

/// Outcome of checking `H·Hᵀ = nI`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub is_hadamard: bool,
    /// `max |(H·Hᵀ − nI)_{ij}|`
    pub max_deviation: i64,
}

pub fn verify(h: &SignMatrix) -> Verification {
    let n = h.order;
    let mut worst = 0i64;
    for i in 0..n {
        for j in i..n {
            let dot: i64 = (0..n).map(|k| (h.get(i, k) as i64) * (h.get(j, k) as i64)).sum();
            let target = if i == j { n as i64 } else { 0 };
            worst = worst.max((dot - target).abs());
        }
    }
    Verification {
        is_hadamard: worst == 0,
        max_deviation: worst,
    }
}

/// A verified Hadamard matrix whose first row and first column are all `+1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadamardMatrix(SignMatrix);

impl HadamardMatrix {
    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.0.get(i, j)
    }

    pub fn as_sign_matrix(&self) -> &SignMatrix {
        &self.0
    }

    pub fn to_json(&self) -> String {
        self.0.to_json()
    }
}

/// Negates rows, then columns, so the first row and column become all `+1`.
pub fn normalize(h: &SignMatrix) -> Result<HadamardMatrix, HadamardError> {
    let check = verify(h);
    if !check.is_hadamard {
        return Err(HadamardError::NotHadamard {
            max_deviation: check.max_deviation,
        });
    }
    let mut m = h.clone();
    for i in 0..m.order {
        if m.get(i, 0) == -1 {
            m.negate_row(i);
        }
    }
    for j in 0..m.order {
        if m.get(0, j) == -1 {
            m.negate_column(j);
        }
    }
    Ok(HadamardMatrix(m))
}

/// Sylvester doubling `H ↦ [[H, H], [H, −H]]` applied `k` times to `[[1]]`.
pub fn sylvester(k: u32) -> Result<HadamardMatrix, HadamardError> {
    if k > MAX_SYLVESTER_EXPONENT {
        return Err(HadamardError::ExponentTooLarge(k));
    }
    let n = 1usize << k;
    // entry (i, j) is (−1)^{popcount(i & j)}
    let m = SignMatrix::from_fn(n, |i, j| if (i & j).count_ones() % 2 == 0 { 1 } else { -1 });
    Ok(HadamardMatrix(m))
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Quadratic character of `x` modulo prime `q`.
fn legendre(x: u64, q: u64) -> i8 {
    let x = x % q;
    if x == 0 {
        return 0;
    }
    let mut result = 1u64;
    let mut base = x;
    let mut e = (q - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q;
        }
        base = base * base % q;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

/// Paley construction for prime `q ≡ 3 (mod 4)`: `H = I + S` with the skew border
/// `S = [[0, 1ᵀ], [−1, Q]]` around the Jacobsthal matrix `Q_{ij} = χ(j − i)`,
/// returned in raw (non-normalized) form.
pub fn paley_raw(q: u64) -> Result<SignMatrix, HadamardError> {
    if q + 1 > MAX_PALEY_ORDER {
        return Err(HadamardError::OrderTooLarge(q + 1));
    }
    if !is_prime(q) {
        return Err(HadamardError::NotPrime(q));
    }
    if q % 4 != 3 {
        return Err(HadamardError::WrongResidueClass { q, residue: q % 4 });
    }
    let n = (q + 1) as usize;
    Ok(SignMatrix::from_fn(n, |i, j| {
        let s = match (i, j) {
            (0, 0) => 0,
            (0, _) => 1,
            (_, 0) => -1,
            _ => legendre((j as u64 + q - i as u64) % q, q),
        };
        s + if i == j { 1 } else { 0 }
    }))
}

/// Normalized Paley Hadamard matrix of order `q + 1`.
pub fn paley(q: u64) -> Result<HadamardMatrix, HadamardError> {
    normalize(&paley_raw(q)?)
}

/// Sylvester when `n` is a power of two, otherwise Paley with `q = n − 1`.
pub fn hadamard_of_order(n: usize) -> Result<HadamardMatrix, HadamardError> {
    if n.is_power_of_two() {
        return sylvester(n.trailing_zeros());
    }
    match n.checked_sub(1).map(|q| paley(q as u64)) {
        Some(Ok(h)) => Ok(h),
        _ => Err(HadamardError::UnsupportedOrder(n)),
    }
}

/// `H̄` (H without its first column) and the 0/1 blocks
/// `M₁ = ½(J + H̄ | J − H̄)`, `M₂ = ½(J − H̄ | J + H̄)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreBlocks {
    pub hbar: IntMatrix,
    pub m1: IntMatrix,
    pub m2: IntMatrix,
}

pub fn core_blocks(h: &HadamardMatrix) -> CoreBlocks {
    let n = h.order();
    let m = n.saturating_sub(1);
    let hbar = IntMatrix::from_fn(n, m, |i, j| h.get(i, j + 1) as i64);
    let m1 = IntMatrix::from_fn(n, 2 * m, |i, j| {
        let v = hbar.get(i, j % m);
        if j < m {
            (1 + v) / 2
        } else {
            (1 - v) / 2
        }
    });
    let m2 = IntMatrix::from_fn(n, 2 * m, |i, j| 1 - m1.get(i, j));
    CoreBlocks { hbar, m1, m2 }
}

impl CoreBlocks {
    pub fn order(&self) -> usize {
        self.hbar.rows()
    }

    /// `M₁ + M₂ = J`, `M₁ − M₂ = (H̄ | −H̄)`, `M₁M₁ᵀ = M₂M₂ᵀ = ½(nI + (n−2)J)` and
    /// `M₁M₂ᵀ = M₂M₁ᵀ = (n/2)(J − I)`, all checked exactly.
    pub fn identities_hold(&self) -> bool {
        let n = self.order();
        let m = n - 1;
        let ni = n as i64;
        let sum = self.m1.add(&self.m2);
        let diff = self.m1.sub(&self.m2);
        let ones_ok = (0..n).all(|i| (0..2 * m).all(|j| sum.get(i, j) == 1));
        let diff_ok = (0..n).all(|i| {
            (0..2 * m).all(|j| {
                let v = self.hbar.get(i, j % m);
                diff.get(i, j) == if j < m { v } else { -v }
            })
        });
        let gram = |a: &IntMatrix, b: &IntMatrix, diag2: i64, off2: i64| {
            let p = a.mul_transpose(b);
            (0..n).all(|i| (0..n).all(|j| 2 * p.get(i, j) == if i == j { diag2 } else { off2 }))
        };
        // twice the targets keeps everything integral
        let same = |a: &IntMatrix| gram(a, a, ni + (ni - 2), ni - 2);
        let cross = |a: &IntMatrix, b: &IntMatrix| gram(a, b, 0, ni);
        ones_ok
            && diff_ok
            && same(&self.m1)
            && same(&self.m2)
            && cross(&self.m1, &self.m2)
            && cross(&self.m2, &self.m1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h4() -> SignMatrix {
        SignMatrix::from_rows(&[
            vec![1, 1, 1, 1],
            vec![1, -1, 1, -1],
            vec![1, -1, -1, 1],
            vec![1, 1, -1, -1],
        ])
        .unwrap()
    }

    #[test]
    fn small_sylvester_orders() {
        assert_eq!(sylvester(0).unwrap().as_sign_matrix().rows(), vec![vec![1]]);
        assert_eq!(
            sylvester(1).unwrap().as_sign_matrix().rows(),
            vec![vec![1, 1], vec![1, -1]]
        );
        let h = sylvester(2).unwrap();
        assert!(verify(h.as_sign_matrix()).is_hadamard);
        assert!(h.as_sign_matrix().is_normalized());
        assert!(matches!(sylvester(13), Err(HadamardError::ExponentTooLarge(13))));
    }

    #[test]
    fn sylvester_two_is_equivalent_to_displayed_h4() {
        // The displayed H4 is Sylvester(2) with its last two rows swapped.
        let s = sylvester(2).unwrap();
        let h = h4();
        for (i, j) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
            assert_eq!(s.as_sign_matrix().rows()[i], h.rows()[j]);
        }
    }

    #[test]
    fn verify_flags_non_hadamard() {
        let ones = SignMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        let v = verify(&ones);
        assert!(!v.is_hadamard);
        assert_eq!(v.max_deviation, 2);
        assert!(verify(&h4()).is_hadamard);
    }

    #[test]
    fn paley_orders_verify() {
        for q in [3, 7, 11, 19, 23, 31, 43] {
            let raw = paley_raw(q).unwrap();
            assert!(verify(&raw).is_hadamard, "q={q}");
            let h = paley(q).unwrap();
            assert!(verify(h.as_sign_matrix()).is_hadamard);
            assert!(h.as_sign_matrix().is_normalized());
            assert_eq!(h.order() as u64, q + 1);
        }
    }

    #[test]
    fn paley_rejects_bad_inputs() {
        assert!(matches!(paley(5), Err(HadamardError::WrongResidueClass { q: 5, residue: 1 })));
        assert!(matches!(paley(15), Err(HadamardError::NotPrime(15))));
        assert!(matches!(paley(4099), Err(HadamardError::OrderTooLarge(4100))));
    }

    #[test]
    fn order_lookup() {
        assert_eq!(hadamard_of_order(16).unwrap(), sylvester(4).unwrap());
        assert_eq!(hadamard_of_order(12).unwrap(), paley(11).unwrap());
        assert!(matches!(hadamard_of_order(6), Err(HadamardError::UnsupportedOrder(6))));
        assert!(hadamard_of_order(0).is_err());
    }

    #[test]
    fn normalize_undoes_row_negation() {
        let h = sylvester(3).unwrap();
        assert_eq!(normalize(h.as_sign_matrix()).unwrap(), h);
        let mut flipped = h.as_sign_matrix().clone();
        flipped.negate_row(0);
        assert_eq!(normalize(&flipped).unwrap(), h);
        let ones = SignMatrix::from_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert!(matches!(normalize(&ones), Err(HadamardError::NotHadamard { .. })));
    }

    #[test]
    fn core_blocks_order_two() {
        let b = core_blocks(&sylvester(1).unwrap());
        assert_eq!(b.hbar, IntMatrix::from_fn(2, 1, |i, _| if i == 0 { 1 } else { -1 }));
        assert_eq!(b.m1, IntMatrix::from_fn(2, 2, |i, j| (i == j) as i64));
        assert_eq!(b.m2, IntMatrix::from_fn(2, 2, |i, j| (i != j) as i64));
        assert!(b.identities_hold());
    }

    #[test]
    fn core_block_gram_for_h4() {
        let h = normalize(&h4()).unwrap();
        let b = core_blocks(&h);
        let g = b.m1.mul_transpose(&b.m1);
        // ½(4I + 2J) = 2I + J
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(g.get(i, j), if i == j { 3 } else { 1 });
            }
        }
    }

    #[test]
    fn core_identities_across_orders() {
        for k in 1..=5 {
            let b = core_blocks(&sylvester(k).unwrap());
            assert!(b.identities_hold(), "k={k}");
            let n = 1i64 << k;
            for i in 0..b.m1.rows() {
                let r1: i64 = (0..b.m1.cols()).map(|j| b.m1.get(i, j)).sum();
                let r2: i64 = (0..b.m2.cols()).map(|j| b.m2.get(i, j)).sum();
                assert_eq!((r1, r2), (n - 1, n - 1));
            }
        }
        assert!(core_blocks(&paley(11).unwrap()).identities_hold());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let h = sylvester(2).unwrap();
        let text = h.to_json();
        assert!(text.starts_with("{\"order\":4,\"rows\":[[1,1,1,1]"));
        assert_eq!(&SignMatrix::from_json(&text).unwrap(), h.as_sign_matrix());
        assert!(SignMatrix::from_json(r#"{"order":2,"rows":[[1,0],[1,1]]}"#).is_err());
        assert!(SignMatrix::from_json(r#"{"order":3,"rows":[[1,1],[1,-1]]}"#).is_err());
    }
}

use std::collections::VecDeque;
use std::fmt;

use crate::hadamard::HadamardMatrix;
use crate::numerics::{ExactMatrix, FloatMatrix};

use super::SchemeError;

/// Largest hypercube dimension accepted.
pub const MAX_HYPERCUBE_DIMENSION: u32 = 10;

/// Simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    neighbours: Vec<Vec<usize>>,
}

impl Graph {
    pub fn from_edges(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut neighbours = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            assert!(u < vertex_count && v < vertex_count && u != v, "bad edge ({u}, {v})");
            neighbours[u].push(v);
            neighbours[v].push(u);
        }
        for list in &mut neighbours {
            list.sort_unstable();
            list.dedup();
        }
        Graph { neighbours }
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbours.len()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.neighbours[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbours[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbours.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degree(0);
        self.neighbours.iter().all(|l| l.len() == d).then_some(d)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbours[u].binary_search(&v).is_ok()
    }

    pub fn adjacency_matrix(&self, radicand: u64) -> ExactMatrix {
        let n = self.vertex_count();
        let mut entries = vec![0i64; n * n];
        for (u, list) in self.neighbours.iter().enumerate() {
            for &v in list {
                entries[u * n + v] = 1;
            }
        }
        ExactMatrix::from_integers(n, radicand, &entries)
    }

    /// Graph with vertices renamed by `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges = self
            .neighbours
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| u < v).map(move |&v| (perm[u], perm[v])));
        Graph::from_edges(self.vertex_count(), edges)
    }
}

/// All-pairs graph distances.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceTable {
    vertex_count: usize,
    diameter: usize,
    dist: Vec<u16>,
}

impl DistanceTable {
    /// Breadth-first search from every vertex.
    pub fn new(graph: &Graph) -> Result<Self, SchemeError> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(SchemeError::EmptyGraph);
        }
        let mut dist = vec![u16::MAX; n * n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            let row = &mut dist[s * n..(s + 1) * n];
            row[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in graph.neighbours(u) {
                    if row[v] == u16::MAX {
                        row[v] = row[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if let Some(v) = row.iter().position(|&d| d == u16::MAX) {
                return Err(SchemeError::Disconnected { from: s, to: v });
            }
        }
        let diameter = dist.iter().copied().max().unwrap_or(0) as usize;
        Ok(DistanceTable {
            vertex_count: n,
            diameter,
            dist,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn distance(&self, x: usize, y: usize) -> usize {
        self.dist[x * self.vertex_count + y] as usize
    }

    /// Shell sizes `|{y : d(x, y) = i}|` for `i = 0..=d`.
    pub fn shell_sizes(&self, x: usize) -> Vec<usize> {
        let mut sizes = vec![0; self.diameter + 1];
        for y in 0..self.vertex_count {
            sizes[self.distance(x, y)] += 1;
        }
        sizes
    }

    /// Some `y` with `d(x, y) = i`.
    pub fn representative(&self, x: usize, i: usize) -> Option<usize> {
        (0..self.vertex_count).find(|&y| self.distance(x, y) == i)
    }
}

/// `A₀..A_d` with `(A_i)_{xy} = 1` iff `d(x, y) = i`.
pub fn distance_matrices(table: &DistanceTable, radicand: u64) -> Vec<ExactMatrix> {
    let n = table.vertex_count();
    (0..=table.diameter())
        .map(|i| {
            let entries: Vec<i64> = (0..n * n)
                .map(|k| (table.distance(k / n, k % n) == i) as i64)
                .collect();
            ExactMatrix::from_integers(n, radicand, &entries)
        })
        .collect()
}

pub fn distance_matrices_float(table: &DistanceTable) -> Vec<FloatMatrix> {
    let n = table.vertex_count();
    (0..=table.diameter())
        .map(|i| FloatMatrix::from_fn(n, |x, y| (table.distance(x, y) == i) as u8 as f64))
        .collect()
}

/// Row (`r`) or column (`c`) vertex of a Hadamard graph with its sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    Row { index: usize, positive: bool },
    Column { index: usize, positive: bool },
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kind, index, positive) = match *self {
            VertexLabel::Row { index, positive } => ('r', index, positive),
            VertexLabel::Column { index, positive } => ('c', index, positive),
        };
        write!(f, "{kind}{index}{}", if positive { '+' } else { '-' })
    }
}

/// The Hadamard graph of an `n × n` Hadamard matrix, with vertices listed in the
/// distance-partition order around `c₀⁺`:
/// `c₀⁺; r₀⁺..r_{n−1}⁺; c₁⁺..c_{n−1}⁺, c₁⁻..c_{n−1}⁻; r₀⁻..r_{n−1}⁻; c₀⁻`.
#[derive(Clone, Debug)]
pub struct HadamardGraph {
    order: usize,
    graph: Graph,
    labels: Vec<VertexLabel>,
}

impl HadamardGraph {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn index_of(&self, label: VertexLabel) -> usize {
        let n = self.order;
        match label {
            VertexLabel::Column { index: 0, positive: true } => 0,
            VertexLabel::Row { index, positive: true } => 1 + index,
            VertexLabel::Column { index, positive: true } => n + index,
            VertexLabel::Column { index: 0, positive: false } => 4 * n - 1,
            VertexLabel::Column { index, positive: false } => 2 * n - 1 + index,
            VertexLabel::Row { index, positive: false } => 3 * n - 1 + index,
        }
    }
}

/// Edges `(rᵢ⁺, cⱼ⁺)`, `(rᵢ⁻, cⱼ⁻)` when `H_ij = 1` and `(rᵢ⁺, cⱼ⁻)`, `(rᵢ⁻, cⱼ⁺)` when
/// `H_ij = −1`. Order 1 gives a disconnected graph, so `n ≥ 2` is required.
pub fn build_hadamard_graph(h: &HadamardMatrix) -> Result<HadamardGraph, SchemeError> {
    let n = h.order();
    if n < 2 {
        return Err(SchemeError::OrderTooSmall(n));
    }
    let mut labels = Vec::with_capacity(4 * n);
    labels.push(VertexLabel::Column { index: 0, positive: true });
    labels.extend((0..n).map(|index| VertexLabel::Row { index, positive: true }));
    labels.extend((1..n).map(|index| VertexLabel::Column { index, positive: true }));
    labels.extend((1..n).map(|index| VertexLabel::Column { index, positive: false }));
    labels.extend((0..n).map(|index| VertexLabel::Row { index, positive: false }));
    labels.push(VertexLabel::Column { index: 0, positive: false });

    let mut hg = HadamardGraph {
        order: n,
        graph: Graph::from_edges(4 * n, []),
        labels,
    };
    let mut edges = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            let same = h.get(i, j) == 1;
            for sign in [true, false] {
                let r = hg.index_of(VertexLabel::Row { index: i, positive: sign });
                let c = hg.index_of(VertexLabel::Column {
                    index: j,
                    positive: if same { sign } else { !sign },
                });
                edges.push((r, c));
            }
        }
    }
    hg.graph = Graph::from_edges(4 * n, edges);
    Ok(hg)
}

/// `L`-dimensional hypercube on `{0,1}^L`; vertex `v` is the bit string of `v`.
pub fn build_hypercube(dimension: u32) -> Result<Graph, SchemeError> {
    if dimension == 0 || dimension > MAX_HYPERCUBE_DIMENSION {
        return Err(SchemeError::HypercubeDimension(dimension));
    }
    let n = 1usize << dimension;
    let edges = (0..n).flat_map(|v| {
        (0..dimension)
            .map(move |b| (v, v ^ (1 << b)))
            .filter(|&(u, w)| u < w)
    });
    Ok(Graph::from_edges(n, edges))
}

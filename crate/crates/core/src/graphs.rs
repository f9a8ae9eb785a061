//! Graphs, their incidence matrices and graphic matroids, and the bipartite
//! graph of a boolean matrix.

use crate::error::{Error, Result};
use crate::field::FieldMatrix;
use crate::hereditary::HereditaryCollection;
use crate::matrix::SBMatrix;
use crate::semiring::SBElem;
use crate::subset::{ElementSet, MAX_GROUND};

/// An undirected multigraph. Vertices are `0..vertices`; edge `j` is the
/// ground element `j` of the graphic matroid. Self-loops are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Edges use 0-based endpoints.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= vertices {
                    return Err(Error::VertexOutOfRange {
                        vertex: w + 1,
                        count: vertices,
                    });
                }
            }
        }
        Ok(Graph { vertices, edges })
    }

    /// The complete graph, edges in lexicographic endpoint order.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph { vertices: n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 1);
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph { vertices: n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Graph { vertices: n, edges }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `|V| × |E|` boolean matrix with `1` where a vertex is an endpoint of
    /// a non-loop edge.
    pub fn incidence_matrix(&self) -> SBMatrix {
        let mut a = SBMatrix::zeros(self.vertices, self.edges.len());
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            if u != v {
                a.set(u, j, SBElem::One);
                a.set(v, j, SBElem::One);
            }
        }
        a
    }

    /// The incidence matrix over `GF(2)`.
    pub fn incidence_gf2(&self) -> FieldMatrix {
        let mut data = vec![0; self.vertices * self.edges.len()];
        let cols = self.edges.len();
        for (j, &(u, v)) in self.edges.iter().enumerate() {
            if u != v {
                data[u * cols + j] = 1;
                data[v * cols + j] = 1;
            }
        }
        FieldMatrix::new(2, self.vertices, cols, data).expect("entries are 0 or 1")
    }

    /// True iff the edges `x` contain no cycle; a self-loop is a cycle.
    pub fn is_forest(&self, x: ElementSet) -> bool {
        let mut uf = UnionFind::new(self.vertices);
        x.iter()
            .filter(|&j| j < self.edges.len())
            .all(|j| uf.union(self.edges[j].0, self.edges[j].1))
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.vertices);
        let mut components = self.vertices;
        for &(u, v) in &self.edges {
            if uf.union(u, v) {
                components -= 1;
            }
        }
        components <= 1
    }

    /// The graphic matroid, computed from the `GF(2)` incidence matrix.
    pub fn graphic_matroid(&self) -> HereditaryCollection {
        assert!(self.edges.len() <= MAX_GROUND);
        self.incidence_gf2().vector_matroid()
    }

    /// Compares the vector collection of the boolean incidence matrix with
    /// the graphic matroid. Requires a connected graph.
    pub fn boolean_graphic_equals_gf2(&self) -> Result<bool> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let boolean = crate::represent::vector_hc(&self.incidence_matrix());
        Ok(boolean == self.graphic_matroid())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if already merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// A bipartite graph with left vertices `0..left` (matrix rows) and right
/// vertices `0..right` (matrix columns).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    adjacent: Vec<ElementSet>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: &[(usize, usize)]) -> Result<Self> {
        assert!(left <= MAX_GROUND && right <= MAX_GROUND);
        let mut adjacent = vec![ElementSet::EMPTY; right];
        for &(i, j) in edges {
            if i >= left {
                return Err(Error::VertexOutOfRange {
                    vertex: i + 1,
                    count: left,
                });
            }
            if j >= right {
                return Err(Error::VertexOutOfRange {
                    vertex: j + 1,
                    count: right,
                });
            }
            adjacent[j].insert(i);
        }
        Ok(BipartiteGraph {
            left,
            right,
            adjacent,
        })
    }

    /// Left = rows, right = columns, an edge for every `1`.
    pub fn of_matrix(a: &SBMatrix) -> Result<Self> {
        if let Some((row, col)) = a.first_ghost() {
            return Err(Error::GhostEntry { row, col });
        }
        let edges: Vec<(usize, usize)> = (0..a.rows())
            .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
            .filter(|&(i, j)| a.get(i, j) == SBElem::One)
            .collect();
        Self::new(a.rows(), a.cols(), &edges)
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn edge_count(&self) -> usize {
        self.adjacent.iter().map(|s| s.len()).sum()
    }

    /// Left neighbours of right vertex `j`.
    pub fn neighbours(&self, j: usize) -> ElementSet {
        self.adjacent[j]
    }

    /// Number of perfect matchings of `x` onto `y`, counted up to `limit`.
    pub fn count_matchings(&self, x: ElementSet, y: ElementSet, limit: usize) -> usize {
        if x.len() != y.len() {
            return 0;
        }
        let xs = x.to_vec();
        self.count_from(&xs, y, limit)
    }

    fn count_from(&self, xs: &[usize], free: ElementSet, limit: usize) -> usize {
        let Some((&j, rest)) = xs.split_first() else {
            return 1;
        };
        let mut total = 0;
        for i in self.adjacent[j].intersection(free) {
            total += self.count_from(rest, free.without(i), limit - total);
            if total >= limit {
                break;
            }
        }
        total
    }

    /// True iff exactly one perfect matching of `x` onto `y` exists.
    pub fn has_unique_matching_onto(&self, x: ElementSet, y: ElementSet) -> Result<bool> {
        if x.len() != y.len() {
            return Err(Error::SizeMismatch {
                rows: y.len(),
                cols: x.len(),
            });
        }
        Ok(self.count_matchings(x, y, 2) == 1)
    }

    /// True iff some left set admits a unique perfect matching of `x`.
    pub fn has_unique_matching_from(&self, x: ElementSet) -> bool {
        let reachable = x
            .iter()
            .fold(ElementSet::EMPTY, |acc, j| acc.union(self.adjacent[j]));
        crate::subset::k_subsets(self.left, x.len())
            .filter(|y| y.is_subset(reachable))
            .any(|y| self.count_matchings(x, y, 2) == 1)
    }
}

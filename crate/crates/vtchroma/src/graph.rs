//! Undirected simple graphs as adjacency bitsets, plus every construction the
//! toolkit's families are built from: complements, joins, blow-ups, line
//! graphs of multigraphs, circulants, and Kneser graphs.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::{Error, Result};

/// An undirected simple graph on `n <= MAX_VERTICES` vertices.
///
/// Values are immutable after construction; all operations are pure and
/// return new graphs. Rows satisfy symmetry (`u in adj[v]` iff `v in adj[u]`)
/// and irreflexivity (`v not in adj[v]`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    fn check_capacity(n: usize) -> Result<()> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded { requested: n });
        }
        Ok(())
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Self::check_capacity(n)?;
        Ok(Graph { n, adj: vec![VertexSet::EMPTY; n] })
    }

    /// Graph with exactly the given adjacencies; duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph> {
        Self::check_capacity(n)?;
        let all = VertexSet::full(n);
        let adj = (0..n).map(|v| all.without(v)).collect();
        Ok(Graph { n, adj })
    }

    /// Cycle C_n for n >= 3.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Path P_n.
    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All vertices as a set.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        match self.n {
            0 => true,
            _ => {
                let d = self.degree(0);
                (1..self.n).all(|v| self.degree(v) == d)
            }
        }
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as pairs (u, v) with u < v, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = VertexSet::singleton(0);
        while let Some(v) = frontier.pop_first() {
            let new = self.adj[v].difference(&seen);
            seen = seen.union(&new);
            frontier = frontier.union(&new);
        }
        seen == self.vertices()
    }

    /// Complement: u~v in the result iff u != v and u is not adjacent to v here.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| all.difference(&self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union; `self`'s vertices come first.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        Self::check_capacity(n)?;
        let mut adj = self.adj.clone();
        adj.resize(n, VertexSet::EMPTY);
        for v in 0..other.n {
            for u in other.adj[v].iter() {
                adj[self.n + v].insert(self.n + u);
            }
        }
        Ok(Graph { n, adj })
    }

    /// Join: disjoint union plus all edges between the two vertex sets.
    /// `self`'s vertices come first.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n);
        let right = g.vertices().difference(&left);
        for v in 0..self.n {
            g.adj[v] = g.adj[v].union(&right);
        }
        for v in self.n..g.n {
            g.adj[v] = g.adj[v].union(&left);
        }
        Ok(g)
    }

    /// Replaces each vertex by a clique of size `m`; cliques of adjacent
    /// vertices are completely joined. Block `v` occupies vertices
    /// `v*m .. (v+1)*m`, so blocks are consecutive.
    pub fn blow_up(&self, m: usize) -> Result<Graph> {
        if m < 1 {
            return Err(Error::InvalidParameter("blow-up size must be >= 1".into()));
        }
        let n = self.n * m;
        Self::check_capacity(n)?;
        let mut block = vec![VertexSet::EMPTY; self.n];
        for (v, b) in block.iter_mut().enumerate() {
            for i in 0..m {
                b.insert(v * m + i);
            }
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for v in 0..self.n {
            let mut nb = block[v];
            for u in self.adj[v].iter() {
                nb = nb.union(&block[u]);
            }
            for i in 0..m {
                adj[v * m + i] = nb.without(v * m + i);
            }
        }
        Ok(Graph { n, adj })
    }

    /// Circulant graph on Z_n with connection offsets `gens`, each in
    /// `1..=n/2`. Always vertex-transitive (cyclic shifts are automorphisms).
    pub fn circulant(n: usize, gens: &[usize]) -> Result<Graph> {
        Self::check_capacity(n)?;
        for &s in gens {
            if s < 1 || s > n / 2 {
                return Err(Error::InvalidParameter(format!(
                    "circulant offset {s} outside 1..={}",
                    n / 2
                )));
            }
        }
        let mut g = Graph::edgeless(n)?;
        for i in 0..n {
            for &s in gens {
                let j = (i + s) % n;
                if i != j {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok(g)
    }

    /// Kneser graph: vertices are the k-subsets of {0..n-1} in lexicographic
    /// order, adjacent iff disjoint. Requires n >= 2k and k >= 1.
    pub fn kneser(n: usize, k: usize) -> Result<Graph> {
        if k < 1 || n < 2 * k {
            return Err(Error::InvalidParameter(format!(
                "kneser requires 1 <= k and n >= 2k, got n={n} k={k}"
            )));
        }
        let subsets = k_subsets(n, k);
        Self::check_capacity(subsets.len())?;
        let mut g = Graph::edgeless(subsets.len())?;
        for i in 0..subsets.len() {
            for j in i + 1..subsets.len() {
                if subsets[i] & subsets[j] == 0 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok(g)
    }

    /// Line graph of the odd cycle C_{2t+1} with every edge duplicated k
    /// times. Requires t >= 2 and k >= 1. The result has k(2t+1) vertices,
    /// maximum degree 3k-1, and clique number 2k.
    pub fn catlin(t: usize, k: usize) -> Result<Graph> {
        if t < 2 {
            return Err(Error::InvalidParameter(format!("catlin requires t >= 2, got {t}")));
        }
        if k < 1 {
            return Err(Error::InvalidParameter(format!("catlin requires k >= 1, got {k}")));
        }
        Graph::line_graph(&Multigraph::repeated_cycle(2 * t + 1, k)?)
    }

    /// Line graph of a multigraph: one vertex per edge instance, adjacent iff
    /// the underlying edges share an endpoint. Parallel edges share both
    /// endpoints and are therefore adjacent.
    pub fn line_graph(m: &Multigraph) -> Result<Graph> {
        if m.edges.is_empty() {
            return Err(Error::EmptyEdgeList);
        }
        let n = m.edges.len();
        Self::check_capacity(n)?;
        let mut g = Graph::edgeless(n)?;
        for i in 0..n {
            let (a, b) = m.edges[i];
            for j in i + 1..n {
                let (c, d) = m.edges[j];
                if a == c || a == d || b == c || b == d {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok(g)
    }

    /// Subgraph induced on `set`, relabeled to 0.. in ascending vertex order.
    pub fn induced(&self, set: &VertexSet) -> Graph {
        let verts = set.to_vec();
        let index_of: std::collections::HashMap<usize, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::edgeless(verts.len()).expect("induced subgraph within capacity");
        for (i, &v) in verts.iter().enumerate() {
            for u in self.adj[v].intersection(set).iter() {
                g.adj[i].insert(index_of[&u]);
            }
        }
        g
    }

    /// Checks the representation invariants: symmetry, irreflexivity, and all
    /// member bits below `n`.
    pub fn validate(&self) -> Result<()> {
        if self.adj.len() != self.n {
            return Err(Error::InvalidParameter("adjacency length mismatch".into()));
        }
        let all = self.vertices();
        for v in 0..self.n {
            if !self.adj[v].is_subset(&all) {
                return Err(Error::VertexOutOfRange {
                    vertex: self.adj[v].difference(&all).first().unwrap(),
                    n: self.n,
                });
            }
            if self.adj[v].contains(v) {
                return Err(Error::LoopEdge(v));
            }
            for u in self.adj[v].iter() {
                if !self.adj[u].contains(v) {
                    return Err(Error::InvalidParameter(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Ascending list of k-subsets of {0..n-1} as bitmasks (n <= 64 is plenty
/// here; Kneser parameters beyond that blow the vertex capacity anyway).
fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    loop {
        out.push(current.iter().fold(0u64, |m, &i| m | 1 << i));
        // next combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..k {
            current[j] = current[j - 1] + 1;
        }
    }
}

/// A loopless multigraph: parallel edges allowed, stored as an explicit edge
/// list. Only consumed by [`Graph::line_graph`].
#[derive(Clone, Debug)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Multigraph> {
        for &(u, v) in &edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
        }
        Ok(Multigraph { n, edges })
    }

    /// The cycle C_len with every edge duplicated k times; edge instances are
    /// grouped by cycle position, copies consecutive.
    pub fn repeated_cycle(len: usize, k: usize) -> Result<Multigraph> {
        if len < 3 {
            return Err(Error::InvalidParameter(format!("cycle needs length >= 3, got {len}")));
        }
        let mut edges = Vec::with_capacity(len * k);
        for pos in 0..len {
            for _ in 0..k {
                edges.push((pos, (pos + 1) % len));
            }
        }
        Multigraph::new(len, edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_path() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!((g.degree(0), g.degree(1), g.degree(2)), (1, 2, 1));
        g.validate().unwrap();
    }

    #[test]
    fn from_edges_k1_and_cycle() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        let edges: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let c5 = Graph::from_edges(5, &edges).unwrap();
        assert!(c5.is_regular());
        assert_eq!(c5.degree(0), 2);
        assert_eq!(c5, Graph::cycle(5).unwrap());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::LoopEdge(1)));
        assert!(matches!(
            Graph::edgeless(MAX_VERTICES + 1),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn complement_known_cases() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.complement().edge_count(), 0);
        let c5 = Graph::cycle(5).unwrap();
        // C_5 is self-complementary up to relabeling; degrees already tell us.
        assert!(c5.complement().is_regular());
        assert_eq!(c5.complement().degree(0), 2);
    }

    #[test]
    fn complement_is_involution() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 5), (3, 4), (1, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_wheel_and_identity() {
        let w5 = Graph::complete(1).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(w5.n(), 6);
        assert_eq!(w5.max_degree(), 5);
        assert_eq!(w5.degree(0), 5);
        w5.validate().unwrap();

        let g = Graph::cycle(4).unwrap();
        let same = Graph::edgeless(0).unwrap().join(&g).unwrap();
        assert_eq!(same, g);
    }

    #[test]
    fn join_clique_to_cycle_degrees() {
        // K_11 joined to C_5: 16 vertices, clique side has degree 15.
        let h11 = Graph::complete(11).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(h11.n(), 16);
        assert_eq!(h11.max_degree(), 15);
        assert_eq!(h11.degree(11), 13); // cycle vertex: 11 + 2
        h11.validate().unwrap();
    }

    #[test]
    fn blow_up_identity_and_degrees() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(c5.blow_up(1).unwrap(), c5);

        let b = c5.blow_up(2).unwrap();
        assert_eq!(b.n(), 10);
        assert!(b.is_regular());
        assert_eq!(b.degree(0), 5); // (m-1) + m*deg = 1 + 4

        let b7 = Graph::cycle(7).unwrap().blow_up(3).unwrap();
        assert_eq!(b7.n(), 21);
        assert!(b7.is_regular());
        assert_eq!(b7.degree(0), 8);
        b7.validate().unwrap();
    }

    #[test]
    fn blow_up_capacity() {
        assert!(matches!(
            Graph::cycle(5).unwrap().blow_up(30),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn circulant_basics() {
        let c5 = Graph::circulant(5, &[1]).unwrap();
        assert_eq!(c5, Graph::cycle(5).unwrap());
        let k7 = Graph::circulant(7, &[1, 2, 3]).unwrap();
        assert_eq!(k7, Graph::complete(7).unwrap());
        assert!(Graph::circulant(5, &[3]).is_err());
        // even n: the half offset contributes one edge per vertex
        let k2 = Graph::circulant(2, &[1]).unwrap();
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn kneser_basics() {
        let petersen = Graph::kneser(5, 2).unwrap();
        assert_eq!(petersen.n(), 10);
        assert!(petersen.is_regular());
        assert_eq!(petersen.degree(0), 3);

        // kneser(2k, k): each vertex has a unique disjoint partner
        let m = Graph::kneser(4, 2).unwrap();
        assert_eq!(m.n(), 6);
        assert!(m.is_regular());
        assert_eq!(m.degree(0), 1);

        let k73 = Graph::kneser(7, 3).unwrap();
        assert_eq!(k73.n(), 35);
        assert!(k73.is_regular());
        assert_eq!(k73.degree(0), 4);

        assert!(Graph::kneser(3, 2).is_err());
    }

    #[test]
    fn line_graph_of_cycle_is_cycle() {
        let c5 = Multigraph::repeated_cycle(5, 1).unwrap();
        let l = Graph::line_graph(&c5).unwrap();
        assert_eq!(l.n(), 5);
        assert!(l.is_regular());
        assert_eq!(l.degree(0), 2);
        assert!(l.is_connected());
    }

    #[test]
    fn line_graph_doubled_cycle() {
        // C_5 with doubled edges: 10 vertices, degree 3k-1 = 5.
        let m = Multigraph::repeated_cycle(5, 2).unwrap();
        let l = Graph::line_graph(&m).unwrap();
        assert_eq!(l.n(), 10);
        assert!(l.is_regular());
        assert_eq!(l.degree(0), 5);
    }

    #[test]
    fn line_graph_empty_rejected() {
        let m = Multigraph::new(3, vec![]).unwrap();
        assert_eq!(Graph::line_graph(&m), Err(Error::EmptyEdgeList));
    }

    #[test]
    fn catlin_parameters() {
        assert!(Graph::catlin(1, 1).is_err());
        assert!(Graph::catlin(2, 0).is_err());
        let g = Graph::catlin(2, 2).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(g.max_degree(), 5);
        let g = Graph::catlin(3, 3).unwrap();
        assert_eq!(g.n(), 21);
        assert_eq!(g.max_degree(), 8);
    }

    #[test]
    fn induced_subgraph() {
        let c5 = Graph::cycle(5).unwrap();
        let sub = c5.induced(&[0, 1, 2].into_iter().collect());
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edge_count(), 2);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::cycle(6).unwrap().is_connected());
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!two_triangles.is_connected());
        assert!(Graph::edgeless(1).unwrap().is_connected());
    }
}

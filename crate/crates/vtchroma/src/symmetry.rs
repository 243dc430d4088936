//! Automorphism orbits, vertex-transitivity, and graph isomorphism by
//! exhaustive backtracking with invariant pruning.
//!
//! Exactness is the contract: a search that would exceed its node budget
//! aborts with an explicit error instead of guessing. Pruning uses two rounds
//! of refinement by (degree, sorted multiset of neighbor classes), which is
//! plenty at desk scale where speed is secondary.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::{Budget, Error, Result};

/// A bijection on 0..n-1, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { image: (0..n).collect() }
    }

    pub fn new(image: Vec<usize>) -> Result<Permutation> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen[v] {
                return Err(Error::InvalidParameter(format!("image {v} repeated")));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image_of(&self, v: usize) -> usize {
        self.image[v]
    }

    /// Relabels `g` by this permutation: vertex v becomes image_of(v).
    pub fn apply(&self, g: &Graph) -> Graph {
        assert_eq!(self.len(), g.n());
        let edges: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (self.image[u], self.image[v]))
            .collect();
        Graph::from_edges(g.n(), &edges).expect("permutation preserves range")
    }

    /// True iff applying the permutation reproduces `g` exactly.
    pub fn is_automorphism(&self, g: &Graph) -> bool {
        self.len() == g.n() && &self.apply(g) == g
    }
}

/// Partition of the vertex set into orbits of the full automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    orbit_of: Vec<usize>,
    orbit_count: usize,
}

impl OrbitPartition {
    pub fn orbit_count(&self) -> usize {
        self.orbit_count
    }

    pub fn orbit_of(&self, v: usize) -> usize {
        self.orbit_of[v]
    }

    /// Orbits as vertex sets, ordered by smallest member.
    pub fn orbits(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.orbit_count];
        for (v, &o) in self.orbit_of.iter().enumerate() {
            out[o].insert(v);
        }
        out
    }
}

/// Vertex classes from two rounds of refinement by (previous class, sorted
/// multiset of neighbor classes), starting from degrees. Class signatures are
/// shared across both graphs so classes are comparable between them.
fn joint_refine(g: &Graph, h: &Graph) -> Option<(Vec<u32>, Vec<u32>)> {
    let sig_g: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    let sig_h: Vec<u64> = (0..h.n()).map(|v| h.degree(v) as u64).collect();
    let (mut cls_g, mut cls_h) = assign_classes(&sig_g, &sig_h)?;
    for _ in 0..2 {
        let raw_g = raw_signatures(g, &cls_g);
        let raw_h = raw_signatures(h, &cls_h);
        let (next_g, next_h) = assign_raw(&raw_g, &raw_h)?;
        cls_g = next_g;
        cls_h = next_h;
    }
    Some((cls_g, cls_h))
}

fn raw_signatures(g: &Graph, cls: &[u32]) -> Vec<(u32, Vec<u32>)> {
    (0..g.n())
        .map(|v| {
            let mut nbr: Vec<u32> = g.neighbors(v).iter().map(|u| cls[u]).collect();
            nbr.sort_unstable();
            (cls[v], nbr)
        })
        .collect()
}

fn assign_classes(sig_g: &[u64], sig_h: &[u64]) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut all: Vec<u64> = sig_g.to_vec();
    all.extend_from_slice(sig_h);
    all.sort_unstable();
    all.dedup();
    let id = |s: &u64| all.binary_search(s).unwrap() as u32;
    let cls_g: Vec<u32> = sig_g.iter().map(id).collect();
    let cls_h: Vec<u32> = sig_h.iter().map(id).collect();
    multisets_match(&cls_g, &cls_h).then_some((cls_g, cls_h))
}

fn assign_raw(
    raw_g: &[(u32, Vec<u32>)],
    raw_h: &[(u32, Vec<u32>)],
) -> Option<(Vec<u32>, Vec<u32>)> {
    let mut all: Vec<&(u32, Vec<u32>)> = raw_g.iter().chain(raw_h.iter()).collect();
    all.sort();
    all.dedup();
    let id = |s: &(u32, Vec<u32>)| all.binary_search(&s).unwrap() as u32;
    let cls_g: Vec<u32> = raw_g.iter().map(id).collect();
    let cls_h: Vec<u32> = raw_h.iter().map(id).collect();
    multisets_match(&cls_g, &cls_h).then_some((cls_g, cls_h))
}

fn multisets_match(a: &[u32], b: &[u32]) -> bool {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    a == b
}

struct EmbeddingSearch<'a> {
    g: &'a Graph,
    h: &'a Graph,
    cls_g: Vec<u32>,
    /// For each class id, the h-vertices in that class.
    class_mask_h: Vec<VertexSet>,
    /// Static variable order over g's vertices.
    order: Vec<usize>,
    nodes: u64,
    node_limit: u64,
}

impl<'a> EmbeddingSearch<'a> {
    /// Greedy connected order: start from `root` (or the vertex in the
    /// smallest class), then repeatedly take the unplaced vertex with the
    /// most placed neighbors, breaking ties by class size then index.
    fn build_order(g: &Graph, cls: &[u32], root: Option<usize>) -> Vec<usize> {
        let n = g.n();
        let mut class_size = std::collections::HashMap::new();
        for &c in cls {
            *class_size.entry(c).or_insert(0usize) += 1;
        }
        let start = root.unwrap_or_else(|| {
            (0..n)
                .min_by_key(|&v| (class_size[&cls[v]], v))
                .expect("n >= 1")
        });
        let mut order = vec![start];
        let mut placed = VertexSet::singleton(start);
        while order.len() < n {
            let next = (0..n)
                .filter(|&v| !placed.contains(v))
                .max_by(|&a, &b| {
                    let ka = g.neighbors(a).intersection(&placed).len();
                    let kb = g.neighbors(b).intersection(&placed).len();
                    ka.cmp(&kb)
                        .then(class_size[&cls[b]].cmp(&class_size[&cls[a]]))
                        .then(b.cmp(&a))
                })
                .unwrap();
            order.push(next);
            placed.insert(next);
        }
        order
    }

    fn run(&mut self, forced: Option<(usize, usize)>) -> Result<Option<Permutation>> {
        let n = self.g.n();
        let mut image = vec![usize::MAX; n];
        let mut used = VertexSet::EMPTY;
        if let Some((u, w)) = forced {
            debug_assert_eq!(self.order[0], u);
            image[u] = w;
            used.insert(w);
            if self.extend(1, &mut image, &mut used)? {
                return Ok(Some(Permutation { image }));
            }
            return Ok(None);
        }
        if self.extend(0, &mut image, &mut used)? {
            return Ok(Some(Permutation { image }));
        }
        Ok(None)
    }

    fn extend(&mut self, depth: usize, image: &mut [usize], used: &mut VertexSet) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let u = self.order[depth];
        let mut cand = self.class_mask_h[self.cls_g[u] as usize].difference(used);
        let h_all = self.h.vertices();
        for &x in &self.order[..depth] {
            let ix = image[x];
            cand = if self.g.has_edge(u, x) {
                cand.intersection(&self.h.neighbors(ix))
            } else {
                cand.intersection(&h_all.difference(&self.h.neighbors(ix)))
            };
            if cand.is_empty() {
                break;
            }
        }
        for w in cand.iter() {
            self.nodes += 1;
            if self.nodes > self.node_limit {
                return Err(Error::BudgetExhausted("isomorphism search"));
            }
            image[u] = w;
            used.insert(w);
            if self.extend(depth + 1, image, used)? {
                return Ok(true);
            }
            used.remove(w);
            image[u] = usize::MAX;
        }
        Ok(false)
    }
}

/// Searches for an edge-preserving bijection g -> h, optionally with a forced
/// assignment. Returns None only after exhausting the pruned search space.
fn find_embedding(
    g: &Graph,
    h: &Graph,
    forced: Option<(usize, usize)>,
    budget: &Budget,
) -> Result<Option<Permutation>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    if g.n() == 0 {
        return Ok(Some(Permutation::identity(0)));
    }
    let Some((cls_g, cls_h)) = joint_refine(g, h) else {
        return Ok(None);
    };
    if let Some((u, w)) = forced {
        if cls_g[u] != cls_h[w] {
            return Ok(None);
        }
    }
    let num_classes = cls_g.iter().chain(cls_h.iter()).max().map_or(0, |&m| m as usize + 1);
    let mut class_mask_h = vec![VertexSet::EMPTY; num_classes];
    for (v, &c) in cls_h.iter().enumerate() {
        class_mask_h[c as usize].insert(v);
    }
    let order = EmbeddingSearch::build_order(g, &cls_g, forced.map(|(u, _)| u));
    let mut search = EmbeddingSearch {
        g,
        h,
        cls_g,
        class_mask_h,
        order,
        nodes: 0,
        node_limit: budget.search_nodes,
    };
    search.run(forced)
}

/// True iff an edge-preserving bijection exists; the witness is returned.
pub fn isomorphism(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<Permutation>> {
    find_embedding(g, h, None, budget)
}

/// Exact isomorphism test.
pub fn are_isomorphic(g: &Graph, h: &Graph, budget: &Budget) -> Result<bool> {
    Ok(isomorphism(g, h, budget)?.is_some())
}

/// Exact orbit partition of the full automorphism group.
///
/// Vertices u, v share an orbit iff some automorphism maps u to v; the search
/// for each untested pair is exhaustive, and every discovered automorphism
/// merges all of its vertex pairs at once.
pub fn automorphism_orbits(g: &Graph, budget: &Budget) -> Result<OrbitPartition> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("orbit partition needs n >= 1".into()));
    }
    let (cls, _) = joint_refine(g, g).expect("graph matches itself");
    let mut uf = UnionFind::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if cls[u] != cls[v] || uf.find(u) == uf.find(v) {
                continue;
            }
            // a failed (exhaustive) search proves u and v lie in different orbits
            if let Some(perm) = find_embedding(g, g, Some((u, v)), budget)? {
                for x in 0..n {
                    uf.union(x, perm.image_of(x));
                }
            }
        }
    }
    // normalize orbit ids in order of first occurrence
    let mut id_of_root = std::collections::HashMap::new();
    let mut orbit_of = vec![0usize; n];
    let mut count = 0;
    for (v, slot) in orbit_of.iter_mut().enumerate() {
        let r = uf.find(v);
        let id = *id_of_root.entry(r).or_insert_with(|| {
            let id = count;
            count += 1;
            id
        });
        *slot = id;
    }
    Ok(OrbitPartition { orbit_of, orbit_count: count })
}

/// Vertex-transitivity with witnesses.
///
/// Returns `Some(witnesses)` where `witnesses[v]` is an automorphism mapping
/// vertex 0 to v, or `None` if some vertex is in a different orbit than 0.
pub fn is_vertex_transitive(g: &Graph, budget: &Budget) -> Result<Option<Vec<Permutation>>> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidParameter("transitivity needs n >= 1".into()));
    }
    if !g.is_regular() {
        return Ok(None);
    }
    let mut witnesses = vec![Permutation::identity(n)];
    for v in 1..n {
        match find_embedding(g, g, Some((0, v)), budget)? {
            Some(perm) => witnesses.push(perm),
            None => return Ok(None),
        }
    }
    Ok(Some(witnesses))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

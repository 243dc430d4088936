//! Maximal and maximum clique enumeration and the structure theory of
//! maximum-clique clusters: the intersection graph X_Q of the maximum
//! cliques, common-vertex extraction when the clique number is large
//! relative to the maximum degree, and the edgeless-or-cycle-blow-up
//! dichotomy for vertex-transitive graphs.
//!
//! All threshold comparisons like omega >= (2/3)(Delta+1) are done in integer
//! arithmetic (3*omega vs 2*(Delta+1)); no floating point anywhere.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::symmetry::{is_vertex_transitive, Permutation};
use crate::{Budget, Error, Result};

/// A list of cliques of one host graph.
///
/// When `all_maximum` is set the list is exactly the set of all maximum
/// cliques: complete, duplicate-free, every member of size omega.
#[derive(Clone, Debug)]
pub struct CliqueCollection {
    host_n: usize,
    cliques: Vec<VertexSet>,
    all_maximum: bool,
    omega: Option<usize>,
}

impl CliqueCollection {
    /// Wraps explicit cliques after validating each against the host graph.
    pub fn new(g: &Graph, cliques: Vec<VertexSet>) -> Result<CliqueCollection> {
        for c in &cliques {
            if !is_clique(g, c) {
                return Err(Error::InvalidParameter(format!("{c:?} is not a clique")));
            }
        }
        Ok(CliqueCollection { host_n: g.n(), cliques, all_maximum: false, omega: None })
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn get(&self, i: usize) -> VertexSet {
        self.cliques[i]
    }

    /// True iff this is exactly the set of all maximum cliques of the host.
    pub fn is_all_maximum(&self) -> bool {
        self.all_maximum
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    /// Clique number of the host when known (always known for enumerated
    /// maximum cliques).
    pub fn omega(&self) -> Option<usize> {
        self.omega
    }

    pub fn union_all(&self) -> VertexSet {
        self.cliques.iter().fold(VertexSet::EMPTY, |a, c| a.union(c))
    }

    /// Intersection of all members; the empty collection has no well-defined
    /// intersection, so this requires at least one member.
    pub fn intersection_all(&self) -> VertexSet {
        assert!(!self.cliques.is_empty(), "intersection of empty collection");
        self.cliques[1..]
            .iter()
            .fold(self.cliques[0], |a, c| a.intersection(c))
    }

    /// Sub-collection by index; keeps omega metadata but drops the
    /// all-maximum flag (a subset is generally not all of them).
    pub fn subset(&self, indices: &[usize]) -> CliqueCollection {
        CliqueCollection {
            host_n: self.host_n,
            cliques: indices.iter().map(|&i| self.cliques[i]).collect(),
            all_maximum: false,
            omega: self.omega,
        }
    }
}

pub fn is_clique(g: &Graph, set: &VertexSet) -> bool {
    set.iter().all(|v| set.without(v).is_subset(&g.neighbors(v)))
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

struct Enumerator<'a> {
    g: &'a Graph,
    min_size: usize,
    limit: usize,
    out: Vec<VertexSet>,
}

impl<'a> Enumerator<'a> {
    /// Pivot-based recursive enumeration of maximal cliques extending R with
    /// vertices from P, excluding X. Branches die early when even taking all
    /// of P cannot reach `min_size`.
    fn run(&mut self, r: VertexSet, p: VertexSet, x: VertexSet) -> Result<()> {
        if r.len() + p.len() < self.min_size {
            return Ok(());
        }
        if p.is_empty() {
            if x.is_empty() {
                if self.out.len() == self.limit {
                    return Err(Error::CliqueLimitExceeded(self.limit));
                }
                self.out.push(r);
            }
            return Ok(());
        }
        // pivot from P ∪ X maximizing |P ∩ N(pivot)|, ties to lowest index
        let pivot = p
            .union(&x)
            .iter()
            .max_by_key(|&u| (p.intersection(&self.g.neighbors(u)).len(), usize::MAX - u))
            .expect("P nonempty");
        let mut todo = p.difference(&self.g.neighbors(pivot));
        let mut p = p;
        let mut x = x;
        while let Some(v) = todo.pop_first() {
            let nv = self.g.neighbors(v);
            self.run(r.with(v), p.intersection(&nv), x.intersection(&nv))?;
            p.remove(v);
            x.insert(v);
        }
        Ok(())
    }
}

/// All inclusion-maximal cliques, each exactly once, in a deterministic
/// order. Aborts with an explicit error if more than `budget.clique_limit`
/// would be emitted.
pub fn maximal_cliques(g: &Graph, budget: &Budget) -> Result<CliqueCollection> {
    let mut e = Enumerator { g, min_size: 0, limit: budget.clique_limit, out: Vec::new() };
    e.run(VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY)?;
    let mut cliques = e.out;
    cliques.sort_unstable();
    Ok(CliqueCollection { host_n: g.n(), cliques, all_maximum: false, omega: None })
}

/// Exact clique number via branch and bound.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum clique (deterministic witness) via branch and bound with a
/// greedy-coloring upper bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    if g.n() == 0 {
        return best;
    }
    expand_max(g, VertexSet::EMPTY, 0, g.vertices(), &mut best);
    best
}

fn expand_max(g: &Graph, r: VertexSet, r_len: usize, p: VertexSet, best: &mut VertexSet) {
    if p.is_empty() {
        if r_len > best.len() {
            *best = r;
        }
        return;
    }
    let (order, color) = color_sort(g, p);
    let mut p = p;
    for i in (0..order.len()).rev() {
        if r_len + color[i] <= best.len() {
            return;
        }
        let v = order[i];
        p.remove(v);
        expand_max(g, r.with(v), r_len + 1, p.intersection(&g.neighbors(v)), best);
    }
}

/// Greedy sequential coloring of `p`; returns vertices ordered by ascending
/// color class together with their (1-based) color numbers. A vertex with
/// color c can extend the current clique by at most c more vertices, which is
/// the pruning bound.
fn color_sort(g: &Graph, p: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut colors = Vec::with_capacity(p.len());
    let mut uncolored = p;
    let mut color = 1;
    while !uncolored.is_empty() {
        let mut avail = uncolored;
        while let Some(v) = avail.pop_first() {
            order.push(v);
            colors.push(color);
            uncolored.remove(v);
            avail = avail.difference(&g.neighbors(v));
        }
        color += 1;
    }
    (order, colors)
}

/// All maximum cliques: maximal-clique enumeration with a branch-and-bound
/// size cutoff at omega, then a size filter.
pub fn maximum_cliques(g: &Graph, budget: &Budget) -> Result<CliqueCollection> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("maximum cliques need n >= 1".into()));
    }
    let omega = clique_number(g);
    let mut e = Enumerator { g, min_size: omega, limit: budget.clique_limit, out: Vec::new() };
    e.run(VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY)?;
    let mut cliques: Vec<VertexSet> = e.out.into_iter().filter(|c| c.len() == omega).collect();
    cliques.sort_unstable();
    Ok(CliqueCollection { host_n: g.n(), cliques, all_maximum: true, omega: Some(omega) })
}

// ---------------------------------------------------------------------------
// The clique graph X_Q
// ---------------------------------------------------------------------------

/// Intersection graph of a clique collection: vertices are clique indices,
/// edges join distinct cliques with nonempty intersection. Not capped at the
/// graph capacity since collections can be larger than 128.
#[derive(Clone, Debug)]
pub struct CliqueGraph {
    adj: Vec<Vec<usize>>,
    components: Vec<Vec<usize>>,
}

impl CliqueGraph {
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj[i].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.edge_count() == 0
    }

    pub fn is_connected(&self) -> bool {
        self.components.len() <= 1
    }

    /// Connected components as sorted index lists, ordered by smallest member.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// True iff the whole graph is a single cycle of length >= 3.
    pub fn is_cycle(&self) -> bool {
        self.n() >= 3 && self.is_connected() && self.adj.iter().all(|a| a.len() == 2)
    }

    /// Vertices of a connected cycle in traversal order, starting at index 0
    /// and moving toward its smaller neighbor.
    pub fn cycle_order(&self) -> Option<Vec<usize>> {
        if !self.is_cycle() {
            return None;
        }
        let mut order = vec![0usize];
        let mut prev = 0usize;
        let mut cur = self.adj[0][0];
        while cur != 0 {
            order.push(cur);
            let next = if self.adj[cur][0] == prev { self.adj[cur][1] } else { self.adj[cur][0] };
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

/// Builds X_Q for a collection.
pub fn build_clique_graph(q: &CliqueCollection) -> CliqueGraph {
    let m = q.len();
    let mut adj = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            if !q.get(i).is_disjoint(&q.get(j)) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    let mut seen = vec![false; m];
    let mut components = Vec::new();
    for start in 0..m {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    CliqueGraph { adj, components }
}

// ---------------------------------------------------------------------------
// Structure lemma checks and classifiers
// ---------------------------------------------------------------------------

/// Result of the Hajnal union/intersection inequality on a set of maximum
/// cliques: |union| + |intersection| >= 2*omega.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HajnalReport {
    pub union_size: usize,
    pub intersection_size: usize,
    pub omega: usize,
    pub holds: bool,
}

/// Evaluates Hajnal's inequality for a nonempty set of maximum cliques.
pub fn hajnal_check(g: &Graph, sets: &[VertexSet]) -> Result<HajnalReport> {
    if sets.is_empty() {
        return Err(Error::PreconditionViolated("hajnal check needs at least one clique".into()));
    }
    let omega = clique_number(g);
    for s in sets {
        if s.len() != omega || !is_clique(g, s) {
            return Err(Error::NotMaximumClique);
        }
    }
    let union_size = sets.iter().fold(VertexSet::EMPTY, |a, s| a.union(s)).len();
    let intersection_size = sets[1..]
        .iter()
        .fold(sets[0], |a, s| a.intersection(s))
        .len();
    Ok(HajnalReport {
        union_size,
        intersection_size,
        omega,
        holds: union_size + intersection_size >= 2 * omega,
    })
}

/// Summary of a capped sweep of Hajnal's inequality over subsets of the
/// maximum cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HajnalSweep {
    pub subsets_checked: usize,
    pub all_hold: bool,
}

/// Evaluates Hajnal's inequality on every nonempty subset of the maximum
/// cliques, capped at `cap` subsets (subsets of a prefix of the collection
/// are used once 2^m would exceed the cap). Computes omega once and walks
/// unions/intersections incrementally.
pub fn hajnal_sweep(g: &Graph, cap: usize, budget: &Budget) -> Result<HajnalSweep> {
    let q = maximum_cliques(g, budget)?;
    let omega = q.omega().expect("maximum cliques carry omega");
    // largest m with 2^m - 1 <= cap, so the shift below cannot overflow
    let max_m = (usize::BITS - 1).saturating_sub((cap + 1).leading_zeros()) as usize;
    let m = q.len().min(max_m);
    let count = (1usize << m) - 1;
    let mut unions = vec![VertexSet::EMPTY; count + 1];
    let mut inters = vec![VertexSet::EMPTY; count + 1];
    let mut all_hold = true;
    for mask in 1..=count {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        let set = q.get(low);
        if rest == 0 {
            unions[mask] = set;
            inters[mask] = set;
        } else {
            unions[mask] = unions[rest].union(&set);
            inters[mask] = inters[rest].intersection(&set);
        }
        if unions[mask].len() + inters[mask].len() < 2 * omega {
            all_hold = false;
        }
    }
    Ok(HajnalSweep { subsets_checked: count, all_hold })
}

/// Classification of a maximum-clique cluster (one component of X_Q, or the
/// whole X_Q for a vertex-transitive graph).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClusterClassification {
    /// X_Q has no edges: the maximum cliques are pairwise disjoint.
    Edgeless,
    /// X_Q is a cycle and the graph is that cycle with every vertex blown up
    /// to a clique of size omega/2.
    CycleBlowup { cycle_len: usize, part_size: usize },
    /// Every component's cliques share a common vertex set (listed).
    StarComponents(Vec<VertexSet>),
    /// A shape outside the dichotomy, reported verbatim.
    Other(String),
}

impl std::fmt::Display for ClusterClassification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClusterClassification::Edgeless => write!(f, "edgeless"),
            ClusterClassification::CycleBlowup { cycle_len, part_size } => {
                write!(f, "cycle_blowup({cycle_len},{part_size})")
            }
            ClusterClassification::StarComponents(sets) => {
                write!(f, "star_components({})", sets.len())
            }
            ClusterClassification::Other(reason) => write!(f, "other: {reason}"),
        }
    }
}

fn check_component_preconditions(g: &Graph, sets: &[VertexSet]) -> Result<usize> {
    if sets.is_empty() {
        return Err(Error::PreconditionViolated("component must be nonempty".into()));
    }
    let omega = clique_number(g);
    for s in sets {
        if s.len() != omega || !is_clique(g, s) {
            return Err(Error::NotMaximumClique);
        }
    }
    let coll = CliqueCollection {
        host_n: g.n(),
        cliques: sets.to_vec(),
        all_maximum: false,
        omega: Some(omega),
    };
    if !build_clique_graph(&coll).is_connected() {
        return Err(Error::PreconditionViolated(
            "cliques do not form a connected component of the intersection graph".into(),
        ));
    }
    Ok(omega)
}

/// Common vertex set of a connected maximum-clique cluster when
/// omega > (2/3)(Delta + 1). Nonempty by a proved lemma; an empty result is a
/// falsification signal, not a normal outcome.
pub fn kostochka_common_vertex(g: &Graph, component: &[VertexSet]) -> Result<VertexSet> {
    let omega = check_component_preconditions(g, component)?;
    if 3 * omega <= 2 * (g.max_degree() + 1) {
        return Err(Error::PreconditionViolated(format!(
            "needs 3*omega > 2*(Delta+1); got 3*{omega} vs 2*{}",
            g.max_degree() + 1
        )));
    }
    let inter = component[1..]
        .iter()
        .fold(component[0], |a, s| a.intersection(s));
    if inter.is_empty() {
        return Err(Error::LemmaFalsified(
            "connected maximum-clique cluster with 3*omega > 2*(Delta+1) has empty intersection"
                .into(),
        ));
    }
    Ok(inter)
}

/// Classifies one connected maximum-clique cluster under
/// omega >= (2/3)(Delta + 1): either all cliques share a common vertex
/// (star), or the cluster's intersection graph has maximum degree at most 2
/// with half-omega consecutive intersections, giving a cycle blow-up or a
/// path shape reported verbatim.
pub fn cek_classify(g: &Graph, component: &[VertexSet]) -> Result<ClusterClassification> {
    let omega = check_component_preconditions(g, component)?;
    if 3 * omega < 2 * (g.max_degree() + 1) {
        return Err(Error::PreconditionViolated(format!(
            "needs 3*omega >= 2*(Delta+1); got 3*{omega} vs 2*{}",
            g.max_degree() + 1
        )));
    }
    let inter = component[1..]
        .iter()
        .fold(component[0], |a, s| a.intersection(s));
    if !inter.is_empty() {
        return Ok(ClusterClassification::StarComponents(vec![inter]));
    }
    let coll = CliqueCollection {
        host_n: g.n(),
        cliques: component.to_vec(),
        all_maximum: false,
        omega: Some(omega),
    };
    let x = build_clique_graph(&coll);
    if x.max_degree() > 2 {
        return Err(Error::LemmaFalsified(format!(
            "cluster with empty intersection has X degree {} > 2",
            x.max_degree()
        )));
    }
    // neighbors B, C of any A must be disjoint with |A∩B| = |A∩C| = omega/2
    if omega % 2 != 0 {
        return Err(Error::LemmaFalsified(format!(
            "half-omega intersections impossible: omega = {omega} is odd"
        )));
    }
    for a in 0..component.len() {
        let nbrs = x.neighbors(a);
        for (bi, &b) in nbrs.iter().enumerate() {
            if component[a].intersection(&component[b]).len() != omega / 2 {
                return Err(Error::LemmaFalsified(
                    "adjacent maximum cliques do not meet in exactly omega/2 vertices".into(),
                ));
            }
            for &c in &nbrs[bi + 1..] {
                if !component[b].is_disjoint(&component[c]) {
                    return Err(Error::LemmaFalsified(
                        "two neighbors of a cluster clique intersect".into(),
                    ));
                }
            }
        }
    }
    if x.is_cycle() {
        verify_cycle_tiling(&coll, &x, omega)?;
        Ok(ClusterClassification::CycleBlowup {
            cycle_len: component.len(),
            part_size: omega / 2,
        })
    } else {
        // connected, max degree <= 2, not a cycle: a path (or a single edge)
        Ok(ClusterClassification::Other(format!(
            "path of {} cliques with half-omega intersections",
            component.len()
        )))
    }
}

/// Checks that the consecutive intersections around a cycle-shaped cluster
/// are disjoint, have size omega/2, and tile the cluster's vertex span.
/// Returns the blobs in cycle order.
fn verify_cycle_tiling(
    q: &CliqueCollection,
    x: &CliqueGraph,
    omega: usize,
) -> Result<Vec<VertexSet>> {
    let order = x.cycle_order().expect("caller verified cycle shape");
    let m = order.len();
    let mut blobs = Vec::with_capacity(m);
    for j in 0..m {
        let prev = order[(j + m - 1) % m];
        let cur = order[j];
        let blob = q.get(prev).intersection(&q.get(cur));
        if blob.len() != omega / 2 {
            return Err(Error::LemmaFalsified(
                "consecutive cycle cliques do not meet in omega/2 vertices".into(),
            ));
        }
        blobs.push(blob);
    }
    let mut union = VertexSet::EMPTY;
    let mut total = 0;
    for b in &blobs {
        union = union.union(b);
        total += b.len();
    }
    if total != union.len() || union != q.union_all() {
        return Err(Error::LemmaFalsified(
            "cycle blobs do not tile the cluster's vertex span".into(),
        ));
    }
    for j in 0..m {
        if blobs[j].union(&blobs[(j + 1) % m]) != q.get(order[j]) {
            return Err(Error::LemmaFalsified(
                "clique is not the union of its two consecutive blobs".into(),
            ));
        }
    }
    Ok(blobs)
}

/// The dichotomy for a connected vertex-transitive graph with
/// omega >= (2/3)(Delta + 1): the maximum cliques are pairwise disjoint and
/// tile the vertex set (Edgeless), or X_Q is a cycle and the graph is exactly
/// that cycle blown up by omega/2 (verified by an explicit isomorphism).
pub fn vt_classify(g: &Graph, budget: &Budget) -> Result<ClusterClassification> {
    if g.n() == 0 {
        return Err(Error::PreconditionViolated("classification needs n >= 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::PreconditionViolated("graph must be connected".into()));
    }
    if is_vertex_transitive(g, budget)?.is_none() {
        return Err(Error::NotVertexTransitive);
    }
    let q = maximum_cliques(g, budget)?;
    let omega = q.omega().expect("maximum cliques carry omega");
    if 3 * omega < 2 * (g.max_degree() + 1) {
        return Err(Error::PreconditionViolated(format!(
            "needs 3*omega >= 2*(Delta+1); got 3*{omega} vs 2*{}",
            g.max_degree() + 1
        )));
    }
    let x = build_clique_graph(&q);
    if x.is_edgeless() {
        // pairwise disjoint by edgelessness; they must also cover V
        if q.union_all() != g.vertices() {
            return Err(Error::LemmaFalsified(
                "disjoint maximum cliques fail to cover a vertex-transitive graph".into(),
            ));
        }
        return Ok(ClusterClassification::Edgeless);
    }
    if !x.is_cycle() {
        return Err(Error::LemmaFalsified(format!(
            "X_Q of a vertex-transitive graph is neither edgeless nor a cycle \
             ({} cliques, {} edges, max degree {})",
            x.n(),
            x.edge_count(),
            x.max_degree()
        )));
    }
    if omega % 2 != 0 {
        return Err(Error::LemmaFalsified(format!(
            "cycle-shaped X_Q with odd omega = {omega}"
        )));
    }
    let blobs = verify_cycle_tiling(&q, &x, omega)?;
    let m = blobs.len();
    let part = omega / 2;
    // explicit isomorphism onto blow_up(C_m, part): blob j -> block j
    let target = Graph::cycle(m)?.blow_up(part)?;
    let mut image = vec![usize::MAX; g.n()];
    for (j, blob) in blobs.iter().enumerate() {
        for (i, v) in blob.iter().enumerate() {
            image[v] = j * part + i;
        }
    }
    let perm = Permutation::new(image)
        .map_err(|_| Error::LemmaFalsified("blob labeling is not a bijection".into()))?;
    if perm.apply(g) != target {
        return Err(Error::LemmaFalsified(
            "blob labeling is not an isomorphism onto the cycle blow-up".into(),
        ));
    }
    Ok(ClusterClassification::CycleBlowup { cycle_len: m, part_size: part })
}

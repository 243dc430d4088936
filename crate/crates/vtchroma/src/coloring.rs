//! Exact coloring machinery: chromatic and independence numbers, the exact
//! fractional chromatic number with primal and dual certificates,
//! independent transversals, strong colorings, and the clique-padding
//! reduction that turns a strong coloring of an edge-stripped graph into a
//! proper coloring with every clique rainbow.

use crate::bitset::VertexSet;
use crate::cliques::{is_clique, max_clique, maximal_cliques};
use crate::graph::Graph;
use crate::simplex;
use crate::symmetry::is_vertex_transitive;
use crate::{rational_from, Budget, Error, Result, MAX_VERTICES};
use num::{BigRational, Signed, Zero};

/// A proper vertex coloring with colors 0..num_colors-1, all used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Wraps an assignment, compacting color indices so that the used colors
    /// are exactly 0..k-1 (order of first appearance by color value).
    pub fn new(raw: Vec<usize>) -> Coloring {
        let mut used: Vec<usize> = raw.to_vec();
        used.sort_unstable();
        used.dedup();
        let colors = raw
            .iter()
            .map(|c| used.binary_search(c).expect("own value"))
            .collect();
        Coloring { colors, num_colors: used.len() }
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Proper, covers every vertex, and uses every color below num_colors.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.colors.len() != g.n() {
            return false;
        }
        let mut seen = vec![false; self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            if c >= self.num_colors {
                return false;
            }
            seen[c] = true;
            for u in g.neighbors(v).iter() {
                if self.colors[u] == c {
                    return false;
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// Exact independence number with a witness set (maximum clique of the
/// complement).
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let w = max_clique(&g.complement());
    (w.len(), w)
}

// ---------------------------------------------------------------------------
// Chromatic number
// ---------------------------------------------------------------------------

/// Exact chromatic number with a witness coloring.
///
/// Saturation-ordered branch and bound, seeded with a maximum clique colored
/// rainbow (lower bound omega), upper bound from a greedy saturation
/// coloring. Vertex ties break to the lowest index, so runs are reproducible.
/// Returns an explicit budget error instead of an unproven answer.
pub fn chromatic_number(g: &Graph, budget: &Budget) -> Result<(usize, Coloring)> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("chromatic number needs n >= 1".into()));
    }
    let clique = max_clique(g);
    let omega = clique.len();
    let greedy = greedy_coloring(g);
    if greedy.num_colors() == omega {
        return Ok((omega, greedy));
    }
    let mut search = ChiSearch {
        g,
        colors: vec![usize::MAX; g.n()],
        best: greedy.colors().to_vec(),
        best_count: greedy.num_colors(),
        omega,
        nodes: 0,
        limit: budget.search_nodes,
    };
    for (i, v) in clique.iter().enumerate() {
        search.colors[v] = i;
    }
    search.descend(omega, g.n() - omega)?;
    let coloring = Coloring::new(search.best);
    debug_assert!(coloring.is_valid_for(g));
    Ok((search.best_count, coloring))
}

struct ChiSearch<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: Vec<usize>,
    best_count: usize,
    omega: usize,
    nodes: u64,
    limit: u64,
}

impl<'a> ChiSearch<'a> {
    /// Exhausts all colorings using fewer than `best_count` colors, updating
    /// the best as completions are found. Returns Ok(true) when the lower
    /// bound omega has been reached and the search may stop.
    fn descend(&mut self, used: usize, remaining: usize) -> Result<bool> {
        if remaining == 0 {
            self.best_count = used;
            self.best = self.colors.clone();
            return Ok(used == self.omega);
        }
        let v = self.most_saturated_uncolored();
        let forbidden = self
            .g
            .neighbors(v)
            .iter()
            .filter(|&u| self.colors[u] != usize::MAX)
            .fold(0u128, |m, u| m | 1 << self.colors[u]);
        let cap = (used + 1).min(self.best_count - 1);
        for c in 0..cap {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::BudgetExhausted("chromatic number search"));
            }
            self.colors[v] = c;
            let done = self.descend(used.max(c + 1), remaining - 1)?;
            self.colors[v] = usize::MAX;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn most_saturated_uncolored(&self) -> usize {
        let mut best_v = usize::MAX;
        let mut best_sat = 0usize;
        for v in 0..self.g.n() {
            if self.colors[v] != usize::MAX {
                continue;
            }
            let sat = self
                .g
                .neighbors(v)
                .iter()
                .filter(|&u| self.colors[u] != usize::MAX)
                .fold(0u128, |m, u| m | 1 << self.colors[u])
                .count_ones() as usize;
            if best_v == usize::MAX || sat > best_sat {
                best_v = v;
                best_sat = sat;
            }
        }
        best_v
    }
}

/// Greedy saturation-order coloring; an upper bound for the exact search.
fn greedy_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    for _ in 0..n {
        let mut best_v = usize::MAX;
        let mut best_sat = 0usize;
        for v in 0..n {
            if colors[v] != usize::MAX {
                continue;
            }
            let sat = g
                .neighbors(v)
                .iter()
                .filter(|&u| colors[u] != usize::MAX)
                .fold(0u128, |m, u| m | 1 << colors[u])
                .count_ones() as usize;
            if best_v == usize::MAX || sat > best_sat {
                best_v = v;
                best_sat = sat;
            }
        }
        let forbidden = g
            .neighbors(best_v)
            .iter()
            .filter(|&u| colors[u] != usize::MAX)
            .fold(0u128, |m, u| m | 1 << colors[u]);
        colors[best_v] = (0..n).find(|&c| forbidden >> c & 1 == 0).expect("n colors suffice");
    }
    Coloring::new(colors)
}

// ---------------------------------------------------------------------------
// Fractional chromatic number
// ---------------------------------------------------------------------------

/// Exact optimum of the covering linear program over maximal independent
/// sets, with matching primal (weighted independent sets) and dual
/// (fractional clique) certificates.
#[derive(Clone, Debug)]
pub struct FractionalCertificate {
    pub value: BigRational,
    /// Positive weights on independent sets; every vertex is covered with
    /// total weight at least 1 and the weights sum to `value`.
    pub sets: Vec<(VertexSet, BigRational)>,
    /// Nonnegative vertex weights summing to `value` with total weight at
    /// most 1 on every independent set.
    pub vertex_weights: Vec<BigRational>,
}

impl FractionalCertificate {
    /// Full optimality check: primal feasible, dual feasible (against all
    /// maximal independent sets, which dominate), equal values.
    pub fn verify(&self, g: &Graph, budget: &Budget) -> Result<()> {
        let one = rational_from(1);
        let mut primal_total = BigRational::zero();
        let mut cover = vec![BigRational::zero(); g.n()];
        for (set, w) in &self.sets {
            if w.is_negative() {
                return Err(Error::InvalidParameter("negative set weight".into()));
            }
            if !is_clique(&g.complement(), set) {
                return Err(Error::InvalidParameter("weighted set is not independent".into()));
            }
            primal_total += w;
            for v in set.iter() {
                cover[v] += w;
            }
        }
        if cover.iter().any(|c| *c < one) {
            return Err(Error::InvalidParameter("a vertex is under-covered".into()));
        }
        if primal_total != self.value {
            return Err(Error::InvalidParameter("primal value mismatch".into()));
        }
        let dual_total: BigRational = self.vertex_weights.iter().sum();
        if dual_total != self.value {
            return Err(Error::InvalidParameter("dual value mismatch".into()));
        }
        if self.vertex_weights.iter().any(|y| y.is_negative()) {
            return Err(Error::InvalidParameter("negative vertex weight".into()));
        }
        for set in independent_set_constraints(g, budget)?.sets() {
            let total: BigRational = set.iter().map(|v| self.vertex_weights[v].clone()).sum();
            if total > one {
                return Err(Error::InvalidParameter(
                    "dual weights exceed 1 on an independent set".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Maximal independent sets = maximal cliques of the complement.
fn independent_set_constraints(g: &Graph, budget: &Budget) -> Result<crate::cliques::CliqueCollection> {
    let adapted = Budget { clique_limit: budget.independent_set_limit, ..budget.clone() };
    maximal_cliques(&g.complement(), &adapted).map_err(|e| match e {
        Error::CliqueLimitExceeded(_) => Error::BudgetExhausted("independent set enumeration"),
        other => other,
    })
}

/// Exact fractional chromatic number, solved in rational arithmetic.
///
/// The returned certificate is verified before being handed back, so a wrong
/// answer cannot escape even if the solver were buggy.
pub fn fractional_chromatic(g: &Graph, budget: &Budget) -> Result<FractionalCertificate> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("fractional chromatic needs n >= 1".into()));
    }
    let mis = independent_set_constraints(g, budget)?;
    let n = g.n();
    let one = rational_from(1);
    let zero = BigRational::zero();
    let c = vec![one.clone(); n];
    let a: Vec<Vec<BigRational>> = mis
        .sets()
        .iter()
        .map(|s| (0..n).map(|v| if s.contains(v) { one.clone() } else { zero.clone() }).collect())
        .collect();
    let b = vec![one.clone(); mis.len()];
    let sol = simplex::maximize(&c, &a, &b);
    let sets: Vec<(VertexSet, BigRational)> = mis
        .sets()
        .iter()
        .zip(sol.duals.iter())
        .filter(|(_, w)| w.is_positive())
        .map(|(s, w)| (*s, w.clone()))
        .collect();
    let cert = FractionalCertificate { value: sol.objective, sets, vertex_weights: sol.primal };
    cert.verify(g, budget)?;
    Ok(cert)
}

/// n/alpha as an exact rational; only valid (and only accepted) for
/// vertex-transitive graphs, where it equals the fractional chromatic number.
pub fn fractional_chromatic_vt(g: &Graph, budget: &Budget) -> Result<BigRational> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("fractional chromatic needs n >= 1".into()));
    }
    if is_vertex_transitive(g, budget)?.is_none() {
        return Err(Error::NotVertexTransitive);
    }
    let (alpha, _) = independence_number(g);
    Ok(rational_from(g.n()) / rational_from(alpha))
}

// ---------------------------------------------------------------------------
// Partitions and independent transversals
// ---------------------------------------------------------------------------

/// A list of disjoint vertex sets covering the vertex set of some graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    parts: Vec<VertexSet>,
}

impl VertexPartition {
    pub fn new(parts: Vec<VertexSet>) -> VertexPartition {
        VertexPartition { parts }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len()).collect()
    }

    /// Disjoint, nonempty, and covering 0..n.
    pub fn validate(&self, n: usize) -> Result<()> {
        let mut union = VertexSet::EMPTY;
        let mut total = 0;
        for p in &self.parts {
            if p.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            union = union.union(p);
            total += p.len();
        }
        if total != union.len() {
            return Err(Error::InvalidPartition("parts overlap".into()));
        }
        if union != VertexSet::full(n) {
            return Err(Error::InvalidPartition("parts do not cover the vertex set".into()));
        }
        Ok(())
    }
}

/// Exact search for an independent set with exactly one vertex per part.
/// Returns None only after exhausting the search space.
pub fn independent_transversal(h: &Graph, p: &VertexPartition) -> Result<Option<VertexSet>> {
    p.validate(h.n())?;
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (p.parts()[i].len(), i));
    Ok(transversal_descend(h, p, &order, 0, VertexSet::EMPTY, VertexSet::EMPTY))
}

fn transversal_descend(
    h: &Graph,
    p: &VertexPartition,
    order: &[usize],
    depth: usize,
    chosen: VertexSet,
    banned: VertexSet,
) -> Option<VertexSet> {
    if depth == order.len() {
        return Some(chosen);
    }
    let candidates = p.parts()[order[depth]].difference(&banned);
    for v in candidates.iter() {
        if let Some(found) = transversal_descend(
            h,
            p,
            order,
            depth + 1,
            chosen.with(v),
            banned.union(&h.neighbors(v)).with(v),
        ) {
            return Some(found);
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Strong coloring
// ---------------------------------------------------------------------------

/// A proper coloring that is rainbow on every part of a partition into parts
/// of equal size r: each part carries all r colors exactly once. Lives on the
/// padded vertex set (isolated vertices appended to fill parts up to r).
#[derive(Clone, Debug)]
pub struct StrongColoring {
    pub coloring: Coloring,
    pub partition: VertexPartition,
    pub original_n: usize,
}

impl StrongColoring {
    /// Checks properness on the padded host and the all-colors-per-part
    /// condition.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let padded = match pad_with_isolated(g, self.coloring.colors().len()) {
            Ok(p) => p,
            Err(_) => return false,
        };
        if !self.coloring.is_valid_for(&padded) {
            return false;
        }
        let r = self.coloring.num_colors();
        self.partition.parts().iter().all(|part| {
            part.len() == r
                && part.iter().map(|v| self.coloring.color(v)).collect::<VertexSet>().len() == r
        })
    }
}

fn pad_with_isolated(g: &Graph, total: usize) -> Result<Graph> {
    if total < g.n() {
        return Err(Error::InvalidParameter("padded size below original".into()));
    }
    Graph::from_edges(total, &g.edges())
}

/// Searches for a proper coloring of `g` with `r` colors that is rainbow on
/// every part of `p`. Parts smaller than r are filled with fresh isolated
/// vertices first. Returns Ok(None) when the exhaustive search proves no such
/// coloring exists for this partition.
pub fn strong_coloring(
    g: &Graph,
    p: &VertexPartition,
    r: usize,
    budget: &Budget,
) -> Result<Option<StrongColoring>> {
    if g.n() == 0 || r == 0 {
        return Err(Error::InvalidParameter("strong coloring needs n >= 1 and r >= 1".into()));
    }
    p.validate(g.n())?;
    for part in p.parts() {
        if part.len() > r {
            return Err(Error::PartTooLarge { size: part.len(), colors: r });
        }
    }
    let pad_total: usize = p.parts().iter().map(|part| r - part.len()).sum();
    let padded_n = g.n() + pad_total;
    if padded_n > MAX_VERTICES {
        return Err(Error::CapacityExceeded { requested: padded_n });
    }
    let padded = pad_with_isolated(g, padded_n)?;
    let mut padded_parts: Vec<VertexSet> = p.parts().to_vec();
    let mut next = g.n();
    for part in padded_parts.iter_mut() {
        while part.len() < r {
            part.insert(next);
            next += 1;
        }
    }

    // parts by descending original size, ties by index; vertices ascending,
    // colors ascending
    let mut part_order: Vec<usize> = (0..p.len()).collect();
    part_order.sort_by_key(|&i| (usize::MAX - p.parts()[i].len(), i));
    let vertex_order: Vec<usize> = part_order
        .iter()
        .flat_map(|&i| padded_parts[i].iter())
        .collect();
    let part_of: Vec<usize> = {
        let mut map = vec![usize::MAX; padded_n];
        for (i, part) in padded_parts.iter().enumerate() {
            for v in part.iter() {
                map[v] = i;
            }
        }
        map
    };

    let mut search = StrongSearch {
        g: &padded,
        vertex_order: &vertex_order,
        part_of: &part_of,
        colors: vec![usize::MAX; padded_n],
        used_in_part: vec![0u128; p.len()],
        r,
        nodes: 0,
        limit: budget.search_nodes,
    };
    if !search.descend(0)? {
        return Ok(None);
    }
    let coloring = Coloring::new(search.colors);
    let result = StrongColoring {
        coloring,
        partition: VertexPartition::new(padded_parts),
        original_n: g.n(),
    };
    debug_assert!(result.is_valid_for(g));
    Ok(Some(result))
}

struct StrongSearch<'a> {
    g: &'a Graph,
    vertex_order: &'a [usize],
    part_of: &'a [usize],
    colors: Vec<usize>,
    used_in_part: Vec<u128>,
    r: usize,
    nodes: u64,
    limit: u64,
}

impl<'a> StrongSearch<'a> {
    fn descend(&mut self, depth: usize) -> Result<bool> {
        if depth == self.vertex_order.len() {
            return Ok(true);
        }
        let v = self.vertex_order[depth];
        let part = self.part_of[v];
        let mut forbidden = self.used_in_part[part];
        for u in self.g.neighbors(v).iter() {
            if self.colors[u] != usize::MAX {
                forbidden |= 1 << self.colors[u];
            }
        }
        for c in 0..self.r {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(Error::BudgetExhausted("strong coloring search"));
            }
            self.colors[v] = c;
            self.used_in_part[part] |= 1 << c;
            if self.descend(depth + 1)? {
                return Ok(true);
            }
            self.colors[v] = usize::MAX;
            self.used_in_part[part] &= !(1 << c);
        }
        Ok(false)
    }
}

/// Outcome of the exhaustive strong-colorability test.
#[derive(Clone, Debug)]
pub enum StrongExhaustive {
    /// Every partition into parts of size r admits a strong coloring.
    StronglyColorable,
    /// A witness partition with no strong coloring.
    NotStronglyColorable(VertexPartition),
}

impl StrongExhaustive {
    pub fn holds(&self) -> bool {
        matches!(self, StrongExhaustive::StronglyColorable)
    }
}

/// Tests strong r-colorability by trying every partition of the padded
/// vertex set (r * ceil(n/r) vertices) into parts of size exactly r.
/// Exhaustive enumeration is only sensible for padded sizes up to 12.
pub fn strong_chromatic_number_exhaustive(
    g: &Graph,
    r: usize,
    budget: &Budget,
) -> Result<StrongExhaustive> {
    if g.n() == 0 || r == 0 {
        return Err(Error::InvalidParameter("needs n >= 1 and r >= 1".into()));
    }
    let padded_n = r * g.n().div_ceil(r);
    if padded_n > 12 {
        return Err(Error::PreconditionViolated(format!(
            "padded size {padded_n} exceeds the exhaustive limit of 12"
        )));
    }
    let padded = pad_with_isolated(g, padded_n)?;
    let mut current: Vec<VertexSet> = Vec::new();
    let mut remaining = VertexSet::full(padded_n);
    match try_all_partitions(&padded, r, &mut current, &mut remaining, budget)? {
        Some(witness) => Ok(StrongExhaustive::NotStronglyColorable(witness)),
        None => Ok(StrongExhaustive::StronglyColorable),
    }
}

/// Enumerates partitions into r-sets (smallest remaining vertex anchors each
/// block) and returns the first partition with no strong coloring.
fn try_all_partitions(
    padded: &Graph,
    r: usize,
    current: &mut Vec<VertexSet>,
    remaining: &mut VertexSet,
    budget: &Budget,
) -> Result<Option<VertexPartition>> {
    if remaining.is_empty() {
        let partition = VertexPartition::new(current.clone());
        if strong_coloring(padded, &partition, r, budget)?.is_none() {
            return Ok(Some(partition));
        }
        return Ok(None);
    }
    let anchor = remaining.first().expect("nonempty");
    let pool: Vec<usize> = remaining.without(anchor).to_vec();
    let mut pick = vec![0usize; r - 1];
    enumerate_blocks(padded, r, current, remaining, budget, anchor, &pool, &mut pick, 0, 0)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_blocks(
    padded: &Graph,
    r: usize,
    current: &mut Vec<VertexSet>,
    remaining: &mut VertexSet,
    budget: &Budget,
    anchor: usize,
    pool: &[usize],
    pick: &mut [usize],
    slot: usize,
    start: usize,
) -> Result<Option<VertexPartition>> {
    if slot == pick.len() {
        let mut block = VertexSet::singleton(anchor);
        for &i in pick.iter() {
            block.insert(pool[i]);
        }
        let saved = *remaining;
        *remaining = remaining.difference(&block);
        current.push(block);
        let found = try_all_partitions(padded, r, current, remaining, budget)?;
        current.pop();
        *remaining = saved;
        return Ok(found);
    }
    for i in start..pool.len() {
        pick[slot] = i;
        if let Some(w) = enumerate_blocks(
            padded, r, current, remaining, budget, anchor, pool, pick, slot + 1, i + 1,
        )? {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// Clique padding reduction
// ---------------------------------------------------------------------------

/// Builds G' by padding each clique of a clique partition to size r with
/// private vertices (no edges outside their clique), strips all intra-clique
/// edges to get G'', strong-colors G'' with the padded cliques as parts, and
/// restricts the result to the original vertices: a proper coloring with at
/// most r colors in which every original clique is rainbow.
pub fn clique_padding_reduction(
    g: &Graph,
    cliques: &[VertexSet],
    r: usize,
    budget: &Budget,
) -> Result<Coloring> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("reduction needs n >= 1".into()));
    }
    let mut union = VertexSet::EMPTY;
    let mut total = 0;
    for q in cliques {
        if !is_clique(g, q) {
            return Err(Error::NotCliquePartition("a part is not a clique".into()));
        }
        if q.is_empty() {
            return Err(Error::NotCliquePartition("empty clique".into()));
        }
        union = union.union(q);
        total += q.len();
    }
    if total != union.len() {
        return Err(Error::NotCliquePartition("cliques overlap".into()));
    }
    if union != g.vertices() {
        return Err(Error::NotCliquePartition("cliques do not cover the vertex set".into()));
    }
    let max_size = cliques.iter().map(|q| q.len()).max().unwrap_or(0);
    if max_size > r {
        return Err(Error::PartTooLarge { size: max_size, colors: r });
    }

    // G': pad each clique to r private vertices appended after the originals.
    let pad_total: usize = cliques.iter().map(|q| r - q.len()).sum();
    let padded_n = g.n() + pad_total;
    if padded_n > MAX_VERTICES {
        return Err(Error::CapacityExceeded { requested: padded_n });
    }
    let mut padded_cliques: Vec<VertexSet> = cliques.to_vec();
    let mut next = g.n();
    for q in padded_cliques.iter_mut() {
        while q.len() < r {
            q.insert(next);
            next += 1;
        }
    }
    // G'': G' minus intra-clique edges. Pads have no outside edges, so G'' is
    // just g's inter-clique edges on the padded vertex set.
    let clique_of: Vec<usize> = {
        let mut map = vec![usize::MAX; padded_n];
        for (i, q) in padded_cliques.iter().enumerate() {
            for v in q.iter() {
                map[v] = i;
            }
        }
        map
    };
    let stripped_edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| clique_of[u] != clique_of[v])
        .collect();
    let stripped = Graph::from_edges(padded_n, &stripped_edges)?;

    let partition = VertexPartition::new(padded_cliques);
    let strong = strong_coloring(&stripped, &partition, r, budget)?
        .ok_or(Error::StrongColoringInfeasible)?;

    let restricted: Vec<usize> = (0..g.n()).map(|v| strong.coloring.color(v)).collect();
    let coloring = Coloring::new(restricted);
    if !coloring.is_valid_for(g) {
        return Err(Error::LemmaFalsified(
            "restricted strong coloring is not proper on the original graph".into(),
        ));
    }
    for q in cliques {
        let distinct: std::collections::HashSet<usize> =
            q.iter().map(|v| coloring.color(v)).collect();
        if distinct.len() != q.len() {
            return Err(Error::LemmaFalsified("a clique is not rainbow after restriction".into()));
        }
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::rational;

    fn budget() -> Budget {
        Budget::default()
    }

    /// Reference chromatic number by trying k = 1.. with plain backtracking.
    fn brute_chromatic(g: &Graph) -> usize {
        fn feasible(g: &Graph, k: usize, colors: &mut Vec<usize>, v: usize) -> bool {
            if v == g.n() {
                return true;
            }
            for c in 0..k {
                if g.neighbors(v).iter().all(|u| u >= v || colors[u] != c) {
                    colors[v] = c;
                    if feasible(g, k, colors, v + 1) {
                        return true;
                    }
                }
            }
            false
        }
        (1..=g.n().max(1))
            .find(|&k| feasible(g, k, &mut vec![usize::MAX; g.n()], 0))
            .expect("n colors always suffice")
    }

    #[test]
    fn alpha_known_values() {
        assert_eq!(independence_number(&Graph::complete(6).unwrap()).0, 1);
        assert_eq!(independence_number(&Graph::cycle(7).unwrap()).0, 3);
        let (a, w) = independence_number(&Graph::kneser(5, 2).unwrap());
        assert_eq!(a, 4);
        assert!(is_clique(&Graph::kneser(5, 2).unwrap().complement(), &w));
    }

    #[test]
    fn chi_known_values() {
        let b = budget();
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap(), &b).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::kneser(5, 2).unwrap(), &b).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::catlin(2, 2).unwrap(), &b).unwrap().0, 5);
        assert_eq!(chromatic_number(&Graph::complete(9).unwrap(), &b).unwrap().0, 9);
        assert_eq!(chromatic_number(&Graph::edgeless(4).unwrap(), &b).unwrap().0, 1);
    }

    #[test]
    fn chi_matches_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for trial in 0..40 {
            let n = 2 + trial % 7;
            let g = crate::corpus::random_graph(&mut rng, n, 0.5);
            let (chi, witness) = chromatic_number(&g, &budget()).unwrap();
            assert_eq!(chi, brute_chromatic(&g), "graph {g:?}");
            assert!(witness.is_valid_for(&g));
            assert_eq!(witness.num_colors(), chi);
        }
    }

    #[test]
    fn chi_budget_exhaustion_is_explicit() {
        let tiny = Budget { search_nodes: 1, ..Budget::default() };
        let g = Graph::kneser(5, 2).unwrap();
        assert_eq!(
            chromatic_number(&g, &tiny),
            Err(Error::BudgetExhausted("chromatic number search"))
        );
    }

    #[test]
    fn fractional_known_values() {
        let b = budget();
        let k4 = fractional_chromatic(&Graph::complete(4).unwrap(), &b).unwrap();
        assert_eq!(k4.value, rational(4, 1));
        let c5 = fractional_chromatic(&Graph::cycle(5).unwrap(), &b).unwrap();
        assert_eq!(c5.value, rational(5, 2));
        let pet = fractional_chromatic(&Graph::kneser(5, 2).unwrap(), &b).unwrap();
        assert_eq!(pet.value, rational(5, 2));
    }

    #[test]
    fn fractional_vt_identity_small() {
        let b = budget();
        for g in [
            Graph::kneser(5, 2).unwrap(),
            Graph::cycle(5).unwrap().blow_up(2).unwrap(),
            Graph::complete(7).unwrap(),
            Graph::cycle(9).unwrap(),
        ] {
            let lp = fractional_chromatic(&g, &b).unwrap().value;
            let closed = fractional_chromatic_vt(&g, &b).unwrap();
            assert_eq!(lp, closed);
        }
    }

    #[test]
    fn fractional_vt_rejects_non_transitive() {
        let p3 = Graph::path(3).unwrap();
        assert_eq!(fractional_chromatic_vt(&p3, &budget()), Err(Error::NotVertexTransitive));
    }

    #[test]
    fn sandwich_omega_chif_chi() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for trial in 0..25 {
            let n = 2 + trial % 8;
            let g = crate::corpus::random_graph(&mut rng, n, 0.45);
            let omega = crate::cliques::clique_number(&g);
            let chif = fractional_chromatic(&g, &budget()).unwrap().value;
            let (chi, _) = chromatic_number(&g, &budget()).unwrap();
            assert!(crate::rational_from(omega) <= chif);
            assert!(chif <= crate::rational_from(chi));
        }
    }

    #[test]
    fn transversal_edgeless_and_k2() {
        let e = Graph::edgeless(4).unwrap();
        let p = VertexPartition::new(vec![
            [0usize, 1].into_iter().collect(),
            [2usize, 3].into_iter().collect(),
        ]);
        let t = independent_transversal(&e, &p).unwrap().unwrap();
        assert_eq!(t.len(), 2);

        let k2 = Graph::complete(2).unwrap();
        let p = VertexPartition::new(vec![VertexSet::singleton(0), VertexSet::singleton(1)]);
        assert_eq!(independent_transversal(&k2, &p).unwrap(), None);
    }

    /// Reference transversal search: try every choice tuple outright.
    fn brute_transversal_exists(h: &Graph, p: &VertexPartition) -> bool {
        fn go(h: &Graph, parts: &[VertexSet], chosen: VertexSet) -> bool {
            match parts.split_first() {
                None => true,
                Some((part, rest)) => part.iter().any(|v| {
                    chosen.is_disjoint(&h.neighbors(v)) && go(h, rest, chosen.with(v))
                }),
            }
        }
        go(h, p.parts(), VertexSet::EMPTY)
    }

    #[test]
    fn transversal_infeasibility_matches_brute_force() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        for _ in 0..60 {
            let g = crate::corpus::random_graph(&mut rng, 8, 0.5);
            let parts: Vec<VertexSet> =
                (0..4).map(|i| (2 * i..2 * (i + 1)).collect()).collect();
            let p = VertexPartition::new(parts);
            let found = independent_transversal(&g, &p).unwrap();
            assert_eq!(found.is_some(), brute_transversal_exists(&g, &p), "graph {g:?}");
        }
    }

    #[test]
    fn transversal_is_independent_and_hits_each_part() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..50 {
            let g = crate::corpus::random_bounded_degree_graph(&mut rng, 12, 2);
            let parts: Vec<VertexSet> = (0..3)
                .map(|i| (4 * i..4 * (i + 1)).collect())
                .collect();
            let p = VertexPartition::new(parts);
            if let Some(t) = independent_transversal(&g, &p).unwrap() {
                assert_eq!(t.len(), 3);
                assert!(is_clique(&g.complement(), &t));
                for part in p.parts() {
                    assert_eq!(t.intersection(part).len(), 1);
                }
            }
        }
    }

    #[test]
    fn strong_coloring_c4_partitions() {
        let c4 = Graph::cycle(4).unwrap();
        let diagonal = VertexPartition::new(vec![
            [0usize, 2].into_iter().collect(),
            [1usize, 3].into_iter().collect(),
        ]);
        assert!(strong_coloring(&c4, &diagonal, 2, &budget()).unwrap().is_none());

        let adjacent = VertexPartition::new(vec![
            [0usize, 1].into_iter().collect(),
            [2usize, 3].into_iter().collect(),
        ]);
        let sc = strong_coloring(&c4, &adjacent, 2, &budget()).unwrap().unwrap();
        assert!(sc.is_valid_for(&c4));
    }

    #[test]
    fn strong_coloring_single_part() {
        // one part of size n with r = n: feasible iff a rainbow proper
        // coloring exists, which for an edgeless graph it always is
        let e = Graph::edgeless(4).unwrap();
        let p = VertexPartition::new(vec![VertexSet::full(4)]);
        assert!(strong_coloring(&e, &p, 4, &budget()).unwrap().is_some());

        let k2 = Graph::complete(2).unwrap();
        let p = VertexPartition::new(vec![VertexSet::full(2)]);
        assert!(strong_coloring(&k2, &p, 2, &budget()).unwrap().is_some());
    }

    #[test]
    fn strong_coloring_pads_odd_sizes() {
        // C_5 with r = 3: parts of size 3, 2 -> one pad vertex
        let c5 = Graph::cycle(5).unwrap();
        let p = VertexPartition::new(vec![
            [0usize, 1, 2].into_iter().collect(),
            [3usize, 4].into_iter().collect(),
        ]);
        let sc = strong_coloring(&c5, &p, 3, &budget()).unwrap().unwrap();
        assert_eq!(sc.partition.parts()[1].len(), 3);
        assert!(sc.partition.parts()[1].contains(5));
        assert!(sc.is_valid_for(&c5));
    }

    #[test]
    fn strong_part_too_large() {
        let c4 = Graph::cycle(4).unwrap();
        let p = VertexPartition::new(vec![VertexSet::full(4)]);
        assert!(matches!(
            strong_coloring(&c4, &p, 3, &budget()),
            Err(Error::PartTooLarge { size: 4, colors: 3 })
        ));
    }

    #[test]
    fn exhaustive_c4() {
        let c4 = Graph::cycle(4).unwrap();
        let two = strong_chromatic_number_exhaustive(&c4, 2, &budget()).unwrap();
        match two {
            StrongExhaustive::NotStronglyColorable(p) => {
                // the diagonal partition is the witness
                assert!(p.parts().contains(&[0usize, 2].into_iter().collect()));
            }
            StrongExhaustive::StronglyColorable => panic!("C_4 is not strongly 2-colorable"),
        }
        assert!(strong_chromatic_number_exhaustive(&c4, 5, &budget()).unwrap().holds());
    }

    #[test]
    fn exhaustive_k3() {
        assert!(strong_chromatic_number_exhaustive(&Graph::complete(3).unwrap(), 3, &budget())
            .unwrap()
            .holds());
    }

    #[test]
    fn exhaustive_size_budget() {
        let g = Graph::cycle(7).unwrap();
        assert!(matches!(
            strong_chromatic_number_exhaustive(&g, 13, &budget()),
            Err(Error::PreconditionViolated(_))
        ));
    }

    fn k4_prism() -> (Graph, Vec<VertexSet>) {
        // two disjoint K_4's plus a perfect matching between them
        let mut edges = Vec::new();
        for base in [0, 4] {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((base + i, base + j));
                }
            }
        }
        for i in 0..4 {
            edges.push((i, 4 + i));
        }
        let g = Graph::from_edges(8, &edges).unwrap();
        let cliques = vec![VertexSet::full(4), VertexSet::full(8).difference(&VertexSet::full(4))];
        (g, cliques)
    }

    #[test]
    fn reduction_on_k4_prism() {
        let (g, cliques) = k4_prism();
        let coloring = clique_padding_reduction(&g, &cliques, 4, &budget()).unwrap();
        assert!(coloring.is_valid_for(&g));
        assert_eq!(coloring.num_colors(), 4);
        for q in &cliques {
            let distinct: std::collections::HashSet<usize> =
                q.iter().map(|v| coloring.color(v)).collect();
            assert_eq!(distinct.len(), 4);
        }
    }

    #[test]
    fn reduction_rejects_overlapping_cliques() {
        let b = Graph::cycle(5).unwrap().blow_up(2).unwrap();
        let q = crate::cliques::maximum_cliques(&b, &budget()).unwrap();
        assert!(matches!(
            clique_padding_reduction(&b, q.sets(), 4, &budget()),
            Err(Error::NotCliquePartition(_))
        ));
    }

    #[test]
    fn reduction_two_triangles() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let cliques = vec![
            [0usize, 1, 2].into_iter().collect::<VertexSet>(),
            [3usize, 4, 5].into_iter().collect::<VertexSet>(),
        ];
        let coloring = clique_padding_reduction(&g, &cliques, 3, &budget()).unwrap();
        assert!(coloring.is_valid_for(&g));
        for q in &cliques {
            let distinct: std::collections::HashSet<usize> =
                q.iter().map(|v| coloring.color(v)).collect();
            assert_eq!(distinct.len(), 3);
        }
    }

    #[test]
    fn reduction_with_padding() {
        // cliques smaller than r force private pad vertices
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let cliques = vec![
            [0usize, 1].into_iter().collect::<VertexSet>(),
            [2usize, 3].into_iter().collect::<VertexSet>(),
        ];
        let coloring = clique_padding_reduction(&g, &cliques, 3, &budget()).unwrap();
        assert!(coloring.is_valid_for(&g));
    }
}

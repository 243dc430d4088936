//! Bound checkers and family scanners.
//!
//! Every checker produces a [`ConjectureReport`] with an exact rational bound
//! and a verdict; proved statements and open conjectures are distinguished so
//! the scanner can count "violations of proved statements" (which must be
//! zero) separately from conjecture counterexamples (which would be news and
//! are surfaced loudly with a graph6 witness).

use crate::bitset::VertexSet;
use crate::cliques::{
    build_clique_graph, clique_number, hajnal_sweep, kostochka_common_vertex, maximum_cliques,
    vt_classify, ClusterClassification,
};
use crate::coloring::{chromatic_number, fractional_chromatic, independence_number};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::symmetry::{are_isomorphic, is_vertex_transitive};
use crate::{rational_from, Budget, Error, Result};
use num::{BigInt, BigRational, Zero};
use rayon::prelude::*;

/// Exact invariants of one graph. `None` fields mean the search budget ran
/// out; they are reported as "undecided", never guessed.
#[derive(Clone, Debug)]
pub struct GraphProfile {
    pub n: usize,
    pub delta: usize,
    pub omega: usize,
    pub alpha: usize,
    pub chi: Option<usize>,
    pub chi_f: Option<BigRational>,
    pub vertex_transitive: Option<bool>,
    pub connected: bool,
    /// Maximum-clique cluster classification when the dichotomy hypothesis
    /// (vertex-transitive, connected, 3*omega >= 2*(Delta+1)) applies.
    pub cluster: Option<ClusterClassification>,
}

impl GraphProfile {
    pub fn cluster_class_string(&self) -> String {
        match &self.cluster {
            Some(c) => c.to_string(),
            None => "n/a".to_string(),
        }
    }

    fn is_vt(&self) -> bool {
        self.vertex_transitive == Some(true)
    }

    /// 3*omega >= 2*(Delta+1), in integers.
    fn big_clique_weak(&self) -> bool {
        3 * self.omega >= 2 * (self.delta + 1)
    }

    /// 3*omega > 2*(Delta+1), in integers.
    fn big_clique_strict(&self) -> bool {
        3 * self.omega > 2 * (self.delta + 1)
    }
}

/// Computes the full profile of a graph (n >= 1). Budget exhaustion in any
/// sub-computation leaves the corresponding field `None`.
pub fn compute_profile(g: &Graph, budget: &Budget) -> Result<GraphProfile> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("profile needs n >= 1".into()));
    }
    let n = g.n();
    let delta = g.max_degree();
    let omega = clique_number(g);
    let (alpha, _) = independence_number(g);
    let connected = g.is_connected();
    let vertex_transitive = match is_vertex_transitive(g, budget) {
        Ok(w) => Some(w.is_some()),
        Err(Error::BudgetExhausted(_)) => None,
        Err(e) => return Err(e),
    };
    let chi = match chromatic_number(g, budget) {
        Ok((chi, _)) => Some(chi),
        Err(Error::BudgetExhausted(_)) => None,
        Err(e) => return Err(e),
    };
    // For vertex-transitive graphs the fractional chromatic number is n/alpha
    // exactly; otherwise solve the covering LP.
    let chi_f = match vertex_transitive {
        Some(true) => Some(rational_from(n) / rational_from(alpha)),
        _ => match fractional_chromatic(g, budget) {
            Ok(cert) => Some(cert.value),
            Err(Error::BudgetExhausted(_)) => None,
            Err(e) => return Err(e),
        },
    };
    let cluster = if vertex_transitive == Some(true) && connected && 3 * omega >= 2 * (delta + 1) {
        match vt_classify(g, budget) {
            Ok(c) => Some(c),
            Err(Error::LemmaFalsified(reason)) => Some(ClusterClassification::Other(reason)),
            Err(Error::BudgetExhausted(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    Ok(GraphProfile { n, delta, omega, alpha, chi, chi_f, vertex_transitive, connected, cluster })
}

/// Verdict of one bound or structure check on one graph.
#[derive(Clone, Debug)]
pub struct ConjectureReport {
    /// Check name (stable key in serialized reports).
    pub conjecture: String,
    /// graph6 of the graph checked.
    pub graph6: String,
    /// Exact rational bound, when the check is a bound comparison.
    pub bound: Option<BigRational>,
    /// Whether the statement holds; `None` means undecided (budget).
    pub holds: Option<bool>,
    /// Equality at the bound, when meaningful.
    pub tight: Option<bool>,
    /// Whether the statement's hypotheses are satisfied by this graph.
    pub in_hypothesis: bool,
    /// Proved statement (a violation is a falsification signal) vs open
    /// conjecture (a violation is a counterexample witness).
    pub proved: bool,
    pub notes: String,
}

fn int_rational(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

// ---------------------------------------------------------------------------
// Individual checkers
// ---------------------------------------------------------------------------

/// chi <= max{omega, ceil((5*Delta + 3)/6)}, conjectured for vertex-transitive
/// graphs (false in general).
pub fn check_five_sixths(g: &Graph, budget: &Budget) -> Result<ConjectureReport> {
    let p = compute_profile(g, budget)?;
    Ok(five_sixths_report(&p, &write_graph6(g)))
}

fn five_sixths_report(p: &GraphProfile, g6: &str) -> ConjectureReport {
    let bound = p.omega.max((5 * p.delta + 3).div_ceil(6));
    let mut notes = String::new();
    if p.vertex_transitive == Some(false) {
        notes = "not vertex-transitive".into();
    } else if p.vertex_transitive.is_none() {
        notes = "vertex-transitivity undecided".into();
    }
    ConjectureReport {
        conjecture: "five_sixths".into(),
        graph6: g6.into(),
        bound: Some(rational_from(bound)),
        holds: p.chi.map(|chi| chi <= bound),
        tight: p.chi.map(|chi| chi == bound),
        in_hypothesis: p.is_vt(),
        proved: false,
        notes,
    }
}

/// chi <= Delta - 1 for vertex-transitive graphs with Delta >= 13 and no
/// K_Delta; proved in that regime, recorded as out-of-hypothesis data
/// otherwise.
pub fn check_borodin_kostochka(g: &Graph, budget: &Budget) -> Result<ConjectureReport> {
    let p = compute_profile(g, budget)?;
    Ok(borodin_kostochka_report(&p, &write_graph6(g)))
}

fn borodin_kostochka_report(p: &GraphProfile, g6: &str) -> ConjectureReport {
    let bound = int_rational(p.delta as i64 - 1);
    let has_k_delta = p.omega >= p.delta;
    let in_hypothesis = p.is_vt() && p.delta >= 13 && !has_k_delta;
    let mut reasons = Vec::new();
    if !p.is_vt() {
        reasons.push("not vertex-transitive");
    }
    if p.delta < 13 {
        reasons.push("Delta < 13");
    }
    if has_k_delta {
        reasons.push("contains K_Delta");
    }
    let notes = if reasons.is_empty() {
        String::new()
    } else {
        format!("hypothesis fails: {}", reasons.join(", "))
    };
    ConjectureReport {
        conjecture: "borodin_kostochka".into(),
        graph6: g6.into(),
        bound: Some(bound.clone()),
        holds: p.chi.map(|chi| rational_from(chi) <= bound),
        tight: p.chi.map(|chi| rational_from(chi) == bound),
        in_hypothesis,
        proved: true,
        notes,
    }
}

/// chi <= ceil((omega + Delta + 1)/2), conjectured for every graph.
pub fn check_reed(g: &Graph, budget: &Budget) -> Result<ConjectureReport> {
    let p = compute_profile(g, budget)?;
    Ok(reed_report(&p, &write_graph6(g)))
}

fn reed_report(p: &GraphProfile, g6: &str) -> ConjectureReport {
    let bound = (p.omega + p.delta + 1).div_ceil(2);
    ConjectureReport {
        conjecture: "reed".into(),
        graph6: g6.into(),
        bound: Some(rational_from(bound)),
        holds: p.chi.map(|chi| chi <= bound),
        tight: p.chi.map(|chi| chi == bound),
        in_hypothesis: true,
        proved: false,
        notes: String::new(),
    }
}

/// chi_f <= max{omega, (5/6)(Delta + 1)}, proved for vertex-transitive
/// graphs; compared in exact rationals. Errors when the graph is not
/// vertex-transitive.
pub fn check_five_sixths_fractional(g: &Graph, budget: &Budget) -> Result<ConjectureReport> {
    let p = compute_profile(g, budget)?;
    if p.vertex_transitive == Some(false) {
        return Err(Error::NotVertexTransitive);
    }
    Ok(five_sixths_fractional_report(&p, &write_graph6(g)))
}

fn five_sixths_fractional_report(p: &GraphProfile, g6: &str) -> ConjectureReport {
    let frac = int_rational(5) * rational_from(p.delta + 1) / int_rational(6);
    let bound = rational_from(p.omega).max(frac);
    let notes = match p.vertex_transitive {
        Some(true) => String::new(),
        Some(false) => "not vertex-transitive".into(),
        None => "vertex-transitivity undecided".into(),
    };
    ConjectureReport {
        conjecture: "five_sixths_fractional".into(),
        graph6: g6.into(),
        bound: Some(bound.clone()),
        holds: p.chi_f.as_ref().map(|cf| *cf <= bound),
        tight: p.chi_f.as_ref().map(|cf| *cf == bound),
        in_hypothesis: p.is_vt(),
        proved: true,
        notes,
    }
}

/// alpha >= 2n/(omega + Delta + 1), proved for every graph. The bound is the
/// right-hand side; `holds` means alpha is at least it.
pub fn check_fajtlowicz(g: &Graph) -> ConjectureReport {
    let p = GraphProfile {
        n: g.n(),
        delta: g.max_degree(),
        omega: clique_number(g),
        alpha: independence_number(g).0,
        chi: None,
        chi_f: None,
        vertex_transitive: None,
        connected: g.is_connected(),
        cluster: None,
    };
    fajtlowicz_report(&p, &write_graph6(g))
}

fn fajtlowicz_report(p: &GraphProfile, g6: &str) -> ConjectureReport {
    let bound = int_rational(2) * rational_from(p.n) / rational_from(p.omega + p.delta + 1);
    ConjectureReport {
        conjecture: "fajtlowicz".into(),
        graph6: g6.into(),
        bound: Some(bound.clone()),
        holds: Some(rational_from(p.alpha) >= bound),
        tight: Some(rational_from(p.alpha) == bound),
        in_hypothesis: true,
        proved: true,
        notes: "lower bound on alpha".into(),
    }
}

/// chi(catlin(t, k)) = 2k + ceil(k/t) exactly, along with Delta = 3k-1 and
/// omega = 2k.
pub fn check_catlin_formula(t: usize, k: usize, budget: &Budget) -> Result<ConjectureReport> {
    let g = Graph::catlin(t, k)?;
    let (chi, _) = chromatic_number(&g, budget)?;
    let expected = 2 * k + k.div_ceil(t);
    let delta_ok = g.max_degree() == 3 * k - 1;
    let omega_ok = clique_number(&g) == 2 * k;
    let chi_ok = chi == expected;
    Ok(ConjectureReport {
        conjecture: "catlin_formula".into(),
        graph6: write_graph6(&g),
        bound: Some(rational_from(expected)),
        holds: Some(chi_ok && delta_ok && omega_ok),
        tight: Some(chi_ok),
        in_hypothesis: true,
        proved: true,
        notes: format!(
            "t={t} k={k}: chi={chi} (expected {expected}), Delta={} (expected {}), omega=2k: {omega_ok}",
            g.max_degree(),
            3 * k - 1
        ),
    })
}

// ---------------------------------------------------------------------------
// Structure-lemma checks run per graph in scans
// ---------------------------------------------------------------------------

const HAJNAL_SUBSET_CAP: usize = 4096;

fn hajnal_report(g: &Graph, p: &GraphProfile, g6: &str, budget: &Budget) -> ConjectureReport {
    let (holds, notes) = match hajnal_sweep(g, HAJNAL_SUBSET_CAP, budget) {
        Ok(sweep) => (
            Some(sweep.all_hold),
            format!("{} subsets of maximum cliques checked", sweep.subsets_checked),
        ),
        Err(Error::BudgetExhausted(_)) | Err(Error::CliqueLimitExceeded(_)) => {
            (None, "enumeration budget exhausted".into())
        }
        Err(e) => (Some(false), format!("unexpected error: {e}")),
    };
    ConjectureReport {
        conjecture: "hajnal".into(),
        graph6: g6.into(),
        bound: Some(rational_from(2 * p.omega)),
        holds,
        tight: None,
        in_hypothesis: true,
        proved: true,
        notes,
    }
}

fn kostochka_report(g: &Graph, p: &GraphProfile, g6: &str, budget: &Budget) -> ConjectureReport {
    let in_hypothesis = p.big_clique_strict();
    if !in_hypothesis {
        return ConjectureReport {
            conjecture: "kostochka".into(),
            graph6: g6.into(),
            bound: Some(rational_from(1)),
            holds: None,
            tight: None,
            in_hypothesis,
            proved: true,
            notes: "hypothesis fails: 3*omega <= 2*(Delta+1)".into(),
        };
    }
    let outcome = maximum_cliques(g, budget).map(|q| {
        let x = build_clique_graph(&q);
        let mut min_inter = usize::MAX;
        for comp in x.components() {
            let sets: Vec<VertexSet> = comp.iter().map(|&i| q.get(i)).collect();
            match kostochka_common_vertex(g, &sets) {
                Ok(inter) => min_inter = min_inter.min(inter.len()),
                Err(_) => min_inter = 0,
            }
        }
        (min_inter, x.components().len())
    });
    let (holds, tight, notes) = match outcome {
        Ok((min_inter, comps)) => (
            Some(min_inter >= 1),
            Some(min_inter == 1),
            format!("{comps} cluster components, smallest common-vertex set has {min_inter}"),
        ),
        Err(_) => (None, None, "enumeration budget exhausted".into()),
    };
    ConjectureReport {
        conjecture: "kostochka".into(),
        graph6: g6.into(),
        bound: Some(rational_from(1)),
        holds,
        tight,
        in_hypothesis,
        proved: true,
        notes,
    }
}

fn cluster_dichotomy_report(p: &GraphProfile, g6: &str) -> ConjectureReport {
    let in_hypothesis = p.is_vt() && p.connected && p.big_clique_weak();
    let (holds, notes) = if !in_hypothesis {
        (None, "hypothesis fails (needs vertex-transitive, connected, 3*omega >= 2*(Delta+1))".into())
    } else {
        match &p.cluster {
            Some(ClusterClassification::Edgeless)
            | Some(ClusterClassification::CycleBlowup { .. }) => {
                (Some(true), p.cluster_class_string())
            }
            Some(other) => (Some(false), other.to_string()),
            None => (None, "classification undecided".into()),
        }
    };
    ConjectureReport {
        conjecture: "cluster_dichotomy".into(),
        graph6: g6.into(),
        bound: None,
        holds,
        tight: None,
        in_hypothesis,
        proved: true,
        notes,
    }
}

fn alpha_floor_report(p: &GraphProfile, g6: &str) -> ConjectureReport {
    // The floor identity needs connectivity: two disjoint 5-cycles are
    // vertex-transitive with 3*omega = 2*(Delta+1) but alpha = 4 < 5.
    let in_hypothesis = p.is_vt() && p.connected && p.big_clique_weak();
    let floor = p.n / p.omega;
    let divisibility_ok = !p.big_clique_strict() || p.n.is_multiple_of(p.omega);
    ConjectureReport {
        conjecture: "alpha_floor".into(),
        graph6: g6.into(),
        bound: Some(rational_from(floor)),
        holds: in_hypothesis.then_some(p.alpha == floor && divisibility_ok),
        tight: None,
        in_hypothesis,
        proved: true,
        notes: if in_hypothesis {
            format!(
                "alpha={} vs floor(n/omega)={floor}; omega divides n: {}",
                p.alpha,
                p.n.is_multiple_of(p.omega)
            )
        } else {
            "hypothesis fails (needs vertex-transitive, connected, 3*omega >= 2*(Delta+1))".into()
        },
    }
}

/// Cap for cross-checking the covering LP against n/alpha on
/// vertex-transitive graphs.
const LP_CONSISTENCY_MAX_N: usize = 14;

fn fractional_identity_report(
    g: &Graph,
    p: &GraphProfile,
    g6: &str,
    budget: &Budget,
) -> ConjectureReport {
    let in_hypothesis = p.is_vt() && p.n <= LP_CONSISTENCY_MAX_N;
    let closed = rational_from(p.n) / rational_from(p.alpha);
    let (holds, notes) = if !in_hypothesis {
        let why = if p.is_vt() { "n > 14, LP cross-check skipped" } else { "not vertex-transitive" };
        (None, why.to_string())
    } else {
        match fractional_chromatic(g, budget) {
            Ok(cert) => {
                let same = cert.value == closed;
                (Some(same), format!("LP optimum vs n/alpha; {} sets in support", cert.sets.len()))
            }
            Err(Error::BudgetExhausted(_)) => (None, "LP budget exhausted".into()),
            Err(e) => (Some(false), format!("unexpected error: {e}")),
        }
    };
    ConjectureReport {
        conjecture: "fractional_vt_identity".into(),
        graph6: g6.into(),
        bound: Some(closed),
        holds,
        tight: None,
        in_hypothesis,
        proved: true,
        notes,
    }
}

// ---------------------------------------------------------------------------
// Per-graph analysis and family scans
// ---------------------------------------------------------------------------

/// Profile plus every applicable check for one graph.
#[derive(Clone, Debug)]
pub struct AnalysisRecord {
    pub graph6: String,
    pub profile: GraphProfile,
    pub checks: Vec<ConjectureReport>,
}

impl AnalysisRecord {
    /// Any undecided field or in-hypothesis check verdict (budget exhaustion
    /// somewhere).
    pub fn undecided(&self) -> bool {
        self.profile.chi.is_none()
            || self.profile.chi_f.is_none()
            || self.profile.vertex_transitive.is_none()
            || self.checks.iter().any(|c| c.in_hypothesis && c.holds.is_none())
    }
}

/// Runs the full profile and every checker on one graph.
pub fn analyze_graph(g: &Graph, budget: &Budget) -> Result<AnalysisRecord> {
    let g6 = write_graph6(g);
    let p = compute_profile(g, budget)?;
    let checks = vec![
        five_sixths_report(&p, &g6),
        borodin_kostochka_report(&p, &g6),
        reed_report(&p, &g6),
        five_sixths_fractional_report(&p, &g6),
        fajtlowicz_report(&p, &g6),
        hajnal_report(g, &p, &g6, budget),
        kostochka_report(g, &p, &g6, budget),
        cluster_dichotomy_report(&p, &g6),
        alpha_floor_report(&p, &g6),
        fractional_identity_report(g, &p, &g6, budget),
    ];
    Ok(AnalysisRecord { graph6: g6, profile: p, checks })
}

/// A graph family to enumerate deterministically.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    /// All connected circulants with `min_n <= n <= max_n`, one graph per
    /// isomorphism class.
    Circulants { min_n: usize, max_n: usize },
    /// catlin(t, k) over inclusive ranges.
    Catlin { t_min: usize, t_max: usize, k_min: usize, k_max: usize },
    /// Kneser graphs for explicit (n, k) pairs.
    Kneser { params: Vec<(usize, usize)> },
    /// blow_up(C_len, size) over the cross product.
    Blowups { cycles: Vec<usize>, sizes: Vec<usize> },
    /// Explicit graphs (e.g. parsed from a graph6 file).
    Graphs(Vec<Graph>),
}

/// Enumerates a family in a fixed order.
pub fn enumerate_family(spec: &FamilySpec, budget: &Budget) -> Result<Vec<Graph>> {
    match spec {
        FamilySpec::Circulants { min_n, max_n } => {
            let mut out = Vec::new();
            for n in *min_n..=*max_n {
                out.extend(connected_circulants(n, budget)?);
            }
            Ok(out)
        }
        FamilySpec::Catlin { t_min, t_max, k_min, k_max } => {
            let mut out = Vec::new();
            for t in *t_min..=*t_max {
                for k in *k_min..=*k_max {
                    out.push(Graph::catlin(t, k)?);
                }
            }
            Ok(out)
        }
        FamilySpec::Kneser { params } => params.iter().map(|&(n, k)| Graph::kneser(n, k)).collect(),
        FamilySpec::Blowups { cycles, sizes } => {
            let mut out = Vec::new();
            for &len in cycles {
                for &size in sizes {
                    out.push(Graph::cycle(len)?.blow_up(size)?);
                }
            }
            Ok(out)
        }
        FamilySpec::Graphs(gs) => Ok(gs.clone()),
    }
}

/// One connected circulant per isomorphism class on n vertices.
///
/// Generator sets are first deduplicated by multiplier equivalence (a*S mod n
/// over units a, folding offsets into 1..=n/2, which subsumes reflection),
/// then any surviving isomorphic duplicates are removed with the exact
/// isomorphism oracle.
fn connected_circulants(n: usize, budget: &Budget) -> Result<Vec<Graph>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![Graph::edgeless(1)?]);
    }
    let half = n / 2;
    let units: Vec<usize> = (1..n).filter(|&a| gcd(a, n) == 1).collect();
    let mut canon_sets: Vec<Vec<usize>> = Vec::new();
    for mask in 1u64..1 << half {
        let offsets: Vec<usize> = (1..=half).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
        if offsets.iter().fold(n, |acc, &s| gcd(acc, s)) != 1 {
            continue; // disconnected
        }
        if canonical_offsets(n, &offsets, &units) == offsets {
            canon_sets.push(offsets);
        }
    }
    canon_sets.sort();
    let mut graphs: Vec<Graph> = Vec::new();
    for offsets in canon_sets {
        let g = Graph::circulant(n, &offsets)?;
        let mut duplicate = false;
        for kept in &graphs {
            if are_isomorphic(&g, kept, budget)? {
                duplicate = true;
                break;
            }
        }
        if !duplicate {
            graphs.push(g);
        }
    }
    Ok(graphs)
}

fn canonical_offsets(n: usize, offsets: &[usize], units: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    for &a in units {
        let mut image: Vec<usize> = offsets
            .iter()
            .map(|&s| {
                let x = a * s % n;
                x.min(n - x)
            })
            .collect();
        image.sort_unstable();
        image.dedup();
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    best.expect("the identity multiplier always applies")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Aggregate counters over all checks of a scan.
#[derive(Clone, Debug, Default)]
pub struct ScanSummary {
    pub graphs: usize,
    pub holds: usize,
    pub tight: usize,
    pub violated: usize,
    pub out_of_hypothesis: usize,
    pub undecided: usize,
    /// In-hypothesis violations of proved statements; must be zero.
    pub violations_of_proved: usize,
    /// graph6 strings of graphs with any in-hypothesis violation.
    pub violation_witnesses: Vec<String>,
    /// Descriptive statistic over vertex-transitive graphs with known chi:
    /// max of (chi - omega)^+ / (Delta + 1), exact.
    pub max_chi_excess_ratio: Option<BigRational>,
}

/// Analyzes every graph (in parallel when asked), sorts records by graph6,
/// and aggregates the summary. Output is deterministic: parallelism never
/// changes bytes.
pub fn scan(
    graphs: &[Graph],
    budget: &Budget,
    parallel: bool,
) -> Result<(Vec<AnalysisRecord>, ScanSummary)> {
    let results: Vec<Result<AnalysisRecord>> = if parallel {
        graphs.par_iter().map(|g| analyze_graph(g, budget)).collect()
    } else {
        graphs.iter().map(|g| analyze_graph(g, budget)).collect()
    };
    let mut records = results.into_iter().collect::<Result<Vec<_>>>()?;
    records.sort_by(|a, b| a.graph6.cmp(&b.graph6));

    let mut summary = ScanSummary { graphs: records.len(), ..Default::default() };
    for rec in &records {
        let mut violated_here = false;
        for check in &rec.checks {
            if !check.in_hypothesis {
                summary.out_of_hypothesis += 1;
                continue;
            }
            match check.holds {
                None => summary.undecided += 1,
                Some(true) => {
                    summary.holds += 1;
                    if check.tight == Some(true) {
                        summary.tight += 1;
                    }
                }
                Some(false) => {
                    summary.violated += 1;
                    violated_here = true;
                    if check.proved {
                        summary.violations_of_proved += 1;
                    }
                }
            }
        }
        if violated_here {
            summary.violation_witnesses.push(rec.graph6.clone());
        }
        if rec.profile.is_vt() {
            if let Some(chi) = rec.profile.chi {
                let excess = chi.saturating_sub(rec.profile.omega);
                let ratio = rational_from(excess) / rational_from(rec.profile.delta + 1);
                let current =
                    summary.max_chi_excess_ratio.take().unwrap_or_else(BigRational::zero);
                summary.max_chi_excess_ratio = Some(current.max(ratio));
            }
        }
    }
    Ok((records, summary))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn five_sixths_on_petersen_tight() {
        let r = check_five_sixths(&Graph::kneser(5, 2).unwrap(), &budget()).unwrap();
        assert_eq!(r.bound, Some(rational(3, 1))); // max{2, ceil(18/6)}
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.tight, Some(true));
        assert!(r.in_hypothesis);
    }

    #[test]
    fn five_sixths_on_doubled_cycle_tight() {
        let r = check_five_sixths(&Graph::catlin(2, 2).unwrap(), &budget()).unwrap();
        assert_eq!(r.bound, Some(rational(5, 1))); // max{4, ceil(28/6)}
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.tight, Some(true));
    }

    #[test]
    fn five_sixths_violated_by_clique_cycle_join() {
        let h11 = Graph::complete(11).unwrap().join(&Graph::cycle(5).unwrap()).unwrap();
        let r = check_five_sixths(&h11, &budget()).unwrap();
        assert_eq!(r.bound, Some(rational(13, 1))); // max{13, ceil(78/6)}
        assert_eq!(r.holds, Some(false)); // chi = 14
        assert!(!r.in_hypothesis);
        assert!(r.notes.contains("not vertex-transitive"));
    }

    #[test]
    fn borodin_kostochka_examples() {
        let r = check_borodin_kostochka(&Graph::complete(7).unwrap(), &budget()).unwrap();
        assert_eq!(r.holds, Some(false)); // chi = 7 > 6 = Delta - 1 + 1
        assert!(!r.in_hypothesis); // contains K_Delta
        assert!(r.notes.contains("K_Delta"));

        let b53 = Graph::cycle(5).unwrap().blow_up(3).unwrap();
        let r = check_borodin_kostochka(&b53, &budget()).unwrap();
        assert_eq!(r.bound, Some(rational(7, 1))); // Delta - 1
        assert_eq!(r.holds, Some(false)); // chi = 8
        assert!(!r.in_hypothesis); // Delta = 8 < 13
        assert!(r.notes.contains("Delta < 13"));

        let pet = check_borodin_kostochka(&Graph::kneser(5, 2).unwrap(), &budget()).unwrap();
        assert_eq!(pet.holds, Some(false)); // 3 > 2
        assert!(!pet.in_hypothesis);
    }

    #[test]
    fn reed_examples() {
        let r = check_reed(&Graph::cycle(5).unwrap(), &budget()).unwrap();
        assert_eq!(r.bound, Some(rational(3, 1)));
        assert_eq!((r.holds, r.tight), (Some(true), Some(true)));
        let r = check_reed(&Graph::catlin(2, 2).unwrap(), &budget()).unwrap();
        assert_eq!(r.bound, Some(rational(5, 1)));
        assert_eq!((r.holds, r.tight), (Some(true), Some(true)));
        let r = check_reed(&Graph::complete(9).unwrap(), &budget()).unwrap();
        assert_eq!(r.bound, Some(rational(9, 1)));
        assert_eq!((r.holds, r.tight), (Some(true), Some(true)));
    }

    #[test]
    fn fractional_bound_examples() {
        let r = check_five_sixths_fractional(&Graph::kneser(5, 2).unwrap(), &budget()).unwrap();
        assert_eq!(r.bound, Some(rational(10, 3))); // max{2, 20/6}
        assert_eq!(r.holds, Some(true));

        let r =
            check_five_sixths_fractional(&Graph::cycle(5).unwrap().blow_up(2).unwrap(), &budget())
                .unwrap();
        assert_eq!(r.bound, Some(rational(5, 1))); // max{4, 5}
        assert_eq!((r.holds, r.tight), (Some(true), Some(true)));

        let r = check_five_sixths_fractional(&Graph::complete(7).unwrap(), &budget()).unwrap();
        assert_eq!((r.holds, r.tight), (Some(true), Some(true)));

        assert!(matches!(
            check_five_sixths_fractional(&Graph::path(3).unwrap(), &budget()),
            Err(Error::NotVertexTransitive)
        ));
    }

    #[test]
    fn fajtlowicz_examples() {
        let r = check_fajtlowicz(&Graph::kneser(5, 2).unwrap());
        assert_eq!(r.bound, Some(rational(10, 3)));
        assert_eq!(r.holds, Some(true));
        let r = check_fajtlowicz(&Graph::complete(6).unwrap());
        assert_eq!((r.holds, r.tight), (Some(true), Some(true))); // 1 = 12/12
        let r = check_fajtlowicz(&Graph::cycle(5).unwrap());
        assert_eq!((r.holds, r.tight), (Some(true), Some(true))); // 2 = 10/5
    }

    #[test]
    fn catlin_formula_small() {
        let r = check_catlin_formula(2, 1, &budget()).unwrap();
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.bound, Some(rational(3, 1)));
        let r = check_catlin_formula(3, 2, &budget()).unwrap();
        assert_eq!(r.holds, Some(true));
        assert_eq!(r.bound, Some(rational(5, 1)));
    }

    #[test]
    fn profile_of_petersen() {
        let p = compute_profile(&Graph::kneser(5, 2).unwrap(), &budget()).unwrap();
        assert_eq!((p.n, p.delta, p.omega, p.alpha), (10, 3, 2, 4));
        assert_eq!(p.chi, Some(3));
        assert_eq!(p.chi_f, Some(rational(5, 2)));
        assert_eq!(p.vertex_transitive, Some(true));
        assert!(p.cluster.is_none()); // 6 < 8: dichotomy hypothesis fails
    }

    #[test]
    fn analyze_record_consistency() {
        let rec = analyze_graph(&Graph::kneser(5, 2).unwrap(), &budget()).unwrap();
        assert!(!rec.undecided());
        assert_eq!(rec.checks.len(), 10);
        for c in &rec.checks {
            if c.in_hypothesis && c.proved {
                assert_eq!(c.holds, Some(true), "proved check {} failed", c.conjecture);
            }
        }
    }

    #[test]
    fn circulant_enumeration_small() {
        let b = budget();
        assert_eq!(connected_circulants(1, &b).unwrap().len(), 1); // K_1
        assert_eq!(connected_circulants(2, &b).unwrap().len(), 1); // K_2
        assert_eq!(connected_circulants(3, &b).unwrap().len(), 1); // C_3
        assert_eq!(connected_circulants(4, &b).unwrap().len(), 2); // C_4, K_4
        assert_eq!(connected_circulants(5, &b).unwrap().len(), 2); // C_5, K_5
        // n=6: C_6, octahedron, K_3,3, prism, K_6
        assert_eq!(connected_circulants(6, &b).unwrap().len(), 5);
        // all pairwise non-isomorphic
        let graphs = connected_circulants(8, &b).unwrap();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert!(!are_isomorphic(&graphs[i], &graphs[j], &b).unwrap());
            }
        }
    }

    #[test]
    fn scan_catlin_family() {
        let spec = FamilySpec::Catlin { t_min: 2, t_max: 3, k_min: 1, k_max: 2 };
        let graphs = enumerate_family(&spec, &budget()).unwrap();
        assert_eq!(graphs.len(), 4);
        let (records, summary) = scan(&graphs, &budget(), false).unwrap();
        assert_eq!(records.len(), 4);
        assert_eq!(summary.violations_of_proved, 0);
        assert!(summary.violation_witnesses.is_empty());
        // these families are vertex-transitive with chi > omega
        assert!(summary.max_chi_excess_ratio.is_some());
    }

    #[test]
    fn circulant_classes_match_pure_isomorphism_dedup() {
        // oracle: enumerate every connected generator set and dedupe with
        // the isomorphism search alone; multiplier canonicalization must not
        // change the class count
        let b = budget();
        for n in 2..=12usize {
            let half = n / 2;
            let mut classes: Vec<Graph> = Vec::new();
            for mask in 1u64..1 << half {
                let offsets: Vec<usize> =
                    (1..=half).filter(|&s| mask >> (s - 1) & 1 == 1).collect();
                if offsets.iter().fold(n, |acc, &s| gcd(acc, s)) != 1 {
                    continue;
                }
                let g = Graph::circulant(n, &offsets).unwrap();
                if !classes.iter().any(|kept| are_isomorphic(&g, kept, &b).unwrap()) {
                    classes.push(g);
                }
            }
            assert_eq!(
                connected_circulants(n, &b).unwrap().len(),
                classes.len(),
                "class count differs at n={n}"
            );
        }
    }

    #[test]
    fn profiles_are_internally_consistent() {
        let graphs =
            enumerate_family(&FamilySpec::Circulants { min_n: 1, max_n: 9 }, &budget()).unwrap();
        for g in &graphs {
            let p = compute_profile(g, &budget()).unwrap();
            let chi = p.chi.expect("small graphs always decided");
            let chi_f = p.chi_f.clone().expect("small graphs always decided");
            assert!(p.omega <= chi);
            assert!(rational_from(p.omega) <= chi_f);
            assert!(chi_f <= rational_from(chi));
            if p.is_vt() {
                assert!(rational_from(p.alpha) * &chi_f >= rational_from(p.n));
            }
        }
    }

    #[test]
    fn scan_is_deterministic_under_parallelism() {
        let spec = FamilySpec::Circulants { min_n: 5, max_n: 8 };
        let graphs = enumerate_family(&spec, &budget()).unwrap();
        let (seq, _) = scan(&graphs, &budget(), false).unwrap();
        let (par, _) = scan(&graphs, &budget(), true).unwrap();
        let a: Vec<&str> = seq.iter().map(|r| r.graph6.as_str()).collect();
        let b: Vec<&str> = par.iter().map(|r| r.graph6.as_str()).collect();
        assert_eq!(a, b);
    }
}

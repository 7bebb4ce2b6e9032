//! Constructors for the hardness reductions: vertex-cover leaf attachment,
//! the diameter wrappers, the two nae-3sat reductions, the hypergraph
//! vertex cover to split graph reduction, the pendant extension to larger
//! claw orders, and brute-force oracles for the source problems.

use crate::gadgets::{claw_a, claw_clause_half, claw_h, claw_variable, cvd_clause, cvd_variable};
use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("hyperedge {index} has wrong arity (expected {expected})")]
    UniformityViolation { index: usize, expected: usize },
    #[error("hyperedge {index} has an out-of-range or repeated vertex")]
    InvalidHyperedge { index: usize },
    #[error("hypergraph uniformity must be at least 2")]
    UniformityTooSmall,
    #[error("clause {index} must consist of three distinct variables in range")]
    InvalidClause { index: usize },
    #[error("formula has no clauses")]
    EmptyFormula,
    #[error("claw order {d} out of range for this construction")]
    ClawOrder { d: usize },
    #[error("input graph is not bipartite")]
    NotBipartite,
    #[error("hyperedge {index} intersects every other hyperedge")]
    NoDisjointEdge { index: usize },
    #[error("assignment is not nae on clause {index}")]
    AssignmentNotNae { index: usize },
    #[error("assignment length {got} does not match variable count {expected}")]
    AssignmentLength { got: usize, expected: usize },
    #[error("backward split map requires a deletion set smaller than {n}")]
    BackwardSetTooLarge { n: usize },
    #[error("artifact does not carry the source instance this operation needs")]
    WrongArtifact,
    #[error("budget {k} must be smaller than the vertex count {n}")]
    BudgetTooLarge { k: usize, n: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// An r-uniform hypergraph on vertices 0..n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Hypergraph {
    pub n: usize,
    pub r: usize,
    /// Each edge sorted, r distinct in-range vertices.
    pub edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Hypergraph, ReductionError> {
        if r < 2 {
            return Err(ReductionError::UniformityTooSmall);
        }
        let mut sorted = edges;
        for (index, e) in sorted.iter_mut().enumerate() {
            if e.len() != r {
                return Err(ReductionError::UniformityViolation { index, expected: r });
            }
            e.sort_unstable();
            let distinct = e.windows(2).all(|w| w[0] != w[1]);
            if !distinct || e.iter().any(|&v| v >= n) {
                return Err(ReductionError::InvalidHyperedge { index });
            }
        }
        Ok(Hypergraph { n, r, edges: sorted })
    }
}

/// A monotone nae-3sat formula: clauses of three distinct 1-based variables,
/// no negations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaeFormula {
    pub n: usize,
    pub clauses: Vec<[usize; 3]>,
}

impl NaeFormula {
    pub fn new(n: usize, clauses: Vec<[usize; 3]>) -> Result<NaeFormula, ReductionError> {
        for (index, c) in clauses.iter().enumerate() {
            let in_range = c.iter().all(|&v| v >= 1 && v <= n);
            let distinct = c[0] != c[1] && c[0] != c[2] && c[1] != c[2];
            if !in_range || !distinct {
                return Err(ReductionError::InvalidClause { index });
            }
        }
        Ok(NaeFormula { n, clauses })
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// True iff every clause sees at least one true and one false variable.
    pub fn is_nae(&self, assignment: &[bool]) -> Result<(), ReductionError> {
        if assignment.len() != self.n {
            return Err(ReductionError::AssignmentLength {
                got: assignment.len(),
                expected: self.n,
            });
        }
        for (index, c) in self.clauses.iter().enumerate() {
            let trues = c.iter().filter(|&&v| assignment[v - 1]).count();
            if trues == 0 || trues == 3 {
                return Err(ReductionError::AssignmentNotNae { index });
            }
        }
        Ok(())
    }
}

/// What the reduction was built from, kept so that solution translation can
/// run without re-reading the source instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SourceInstance {
    Graph { n: usize },
    Formula { formula: NaeFormula },
    Hypergraph { hypergraph: Hypergraph },
}

/// A constructed graph plus the budget and the maps back to the source.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionArtifact {
    pub graph: Graph,
    pub d: usize,
    /// Deletion budget paired with the reduction's iff-condition; unset when
    /// the caller did not supply a source budget.
    pub budget_k: Option<usize>,
    /// Role label per vertex id.
    pub vertex_labels: Vec<String>,
    /// Role label back to vertex id; inverse of `vertex_labels`.
    pub source_map: BTreeMap<String, usize>,
    pub source: SourceInstance,
}

impl ReductionArtifact {
    fn build(
        graph: Graph,
        d: usize,
        budget_k: Option<usize>,
        vertex_labels: Vec<String>,
        source: SourceInstance,
    ) -> Result<ReductionArtifact, ReductionError> {
        if let Some(k) = budget_k {
            if k >= graph.vertex_count() {
                return Err(ReductionError::BudgetTooLarge { k, n: graph.vertex_count() });
            }
        }
        debug_assert_eq!(vertex_labels.len(), graph.vertex_count());
        let source_map =
            vertex_labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect::<BTreeMap<_, _>>();
        debug_assert_eq!(source_map.len(), vertex_labels.len(), "labels must be unique");
        Ok(ReductionArtifact { graph, d, budget_k, vertex_labels, source_map, source })
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.source_map.get(label).copied()
    }
}

// ---------------------------------------------------------------------------
// Vertex cover to d-claw deletion by leaf attachment.
// ---------------------------------------------------------------------------

/// Attaches d-1 pendant leaves to every vertex; vertex covers of the input
/// then correspond exactly to d-claw deletion sets of the output, with equal
/// optima. The budget carries over unchanged.
pub fn attach_leaves(
    g: &Graph,
    d: usize,
    source_budget: Option<usize>,
) -> Result<ReductionArtifact, ReductionError> {
    if d < 2 {
        return Err(ReductionError::ClawOrder { d });
    }
    let n = g.vertex_count();
    let mut edges = g.edges();
    let mut labels: Vec<String> = (0..n).map(|v| format!("v_{v}")).collect();
    let mut next = n;
    for v in 0..n {
        for t in 1..d {
            edges.push((v, next));
            labels.push(format!("I(v_{v})#{t}"));
            next += 1;
        }
    }
    let graph = Graph::from_edge_list(next, &edges)?;
    ReductionArtifact::build(graph, d, source_budget, labels, SourceInstance::Graph { n })
}

// ---------------------------------------------------------------------------
// Diameter wrappers.
// ---------------------------------------------------------------------------

/// Adds a d-claw whose center is joined to every original vertex, making it
/// universal; the optimum shifts by exactly +1 and the output has diameter 2.
pub fn wrap_diameter2(
    g: &Graph,
    d: usize,
    source_budget: Option<usize>,
) -> Result<ReductionArtifact, ReductionError> {
    if d < 2 {
        return Err(ReductionError::ClawOrder { d });
    }
    let n = g.vertex_count();
    let apex = n;
    let mut edges = g.edges();
    let mut labels: Vec<String> = (0..n).map(|v| format!("v_{v}")).collect();
    labels.push("apex".into());
    for v in 0..n {
        edges.push((v, apex));
    }
    for t in 1..=d {
        edges.push((apex, n + t));
        labels.push(format!("apex_leaf#{t}"));
    }
    let graph = Graph::from_edge_list(n + 1 + d, &edges)?;
    ReductionArtifact::build(
        graph,
        d,
        source_budget.map(|k| k + 1),
        labels,
        SourceInstance::Graph { n },
    )
}

/// Bipartite variant: adds claw centers x and y, joining x to the right side
/// plus y and y to the left side plus x. The optimum shifts by exactly +2 and
/// the output is bipartite of diameter 3.
pub fn wrap_diameter3_bipartite(
    g: &Graph,
    d: usize,
    source_budget: Option<usize>,
) -> Result<ReductionArtifact, ReductionError> {
    if d < 2 {
        return Err(ReductionError::ClawOrder { d });
    }
    let bip = g.bipartition();
    if !bip.valid {
        return Err(ReductionError::NotBipartite);
    }
    let n = g.vertex_count();
    let x_apex = n;
    let y_apex = n + 1;
    let mut edges = g.edges();
    let mut labels: Vec<String> = (0..n).map(|v| format!("v_{v}")).collect();
    labels.push("x_apex".into());
    labels.push("y_apex".into());
    edges.push((x_apex, y_apex));
    for v in 0..n {
        match bip.side[v] {
            crate::graph::Side::Left => edges.push((y_apex, v)),
            crate::graph::Side::Right => edges.push((x_apex, v)),
        }
    }
    let mut next = n + 2;
    for t in 1..=d {
        edges.push((x_apex, next));
        labels.push(format!("x_leaf#{t}"));
        next += 1;
    }
    for t in 1..=d {
        edges.push((y_apex, next));
        labels.push(format!("y_leaf#{t}"));
        next += 1;
    }
    let graph = Graph::from_edge_list(next, &edges)?;
    debug_assert!(graph.bipartition().valid);
    ReductionArtifact::build(
        graph,
        d,
        source_budget.map(|k| k + 2),
        labels,
        SourceInstance::Graph { n },
    )
}

// ---------------------------------------------------------------------------
// nae-3sat to cluster vertex deletion (d = 2), budget 2mn + 11m.
// ---------------------------------------------------------------------------

struct CvdLayout {
    m: usize,
}

impl CvdLayout {
    fn var_base(&self, i: usize) -> usize {
        i * cvd_variable::size(self.m)
    }

    fn var_vertex(&self, i: usize, j: usize, role: usize) -> usize {
        self.var_base(i) + cvd_variable::SLOT * j + role
    }

    fn clause_base(&self, n: usize, j: usize) -> usize {
        n * cvd_variable::size(self.m) + j * cvd_clause::SIZE
    }
}

pub fn reduce_nae3sat_to_cvd(f: &NaeFormula) -> Result<ReductionArtifact, ReductionError> {
    if f.clauses.is_empty() {
        return Err(ReductionError::EmptyFormula);
    }
    let (n, m) = (f.n, f.clause_count());
    let lay = CvdLayout { m };
    let total = n * cvd_variable::size(m) + m * cvd_clause::SIZE;
    let mut edges = Vec::new();
    let mut labels = vec![String::new(); total];

    for i in 0..n {
        let base = lay.var_base(i);
        edges.extend(cvd_variable::edges(m).iter().map(|&(u, v)| (base + u, base + v)));
        for j in 0..m {
            for (r, role) in ["v", "v'", "w", "x", "y", "z"].iter().enumerate() {
                labels[base + cvd_variable::SLOT * j + r] = format!("{role}_{{{},{}}}", i + 1, j + 1);
            }
        }
    }
    for j in 0..m {
        let base = lay.clause_base(n, j);
        edges.extend(cvd_clause::edges().iter().map(|&(u, v)| (base + u, base + v)));
        for k in 0..cvd_clause::SECTIONS {
            for (r, role) in ["c", "c'", "q1", "q2", "x", "x'", "q3", "q4", "r1", "r2"]
                .iter()
                .enumerate()
            {
                let id = base + cvd_clause::SECTION * k + r;
                labels[id] = match r {
                    0 => format!("c_{{{},{}}}", j + 1, k + 1),
                    1 => format!("c'_{{{},{}}}", j + 1, k + 1),
                    _ => format!("c_{{{},{}}}:{role}", j + 1, k + 1),
                };
            }
        }
        // clause vertex to corresponding variable vertex wiring
        for (k, &var) in f.clauses[j].iter().enumerate() {
            let i = var - 1;
            edges.push((lay.var_vertex(i, j, cvd_variable::V), base + cvd_clause::vertex(k, cvd_clause::C)));
            edges.push((
                lay.var_vertex(i, j, cvd_variable::V_PRIME),
                base + cvd_clause::vertex(k, cvd_clause::C_PRIME),
            ));
        }
    }

    let graph = Graph::from_edge_list(total, &edges)?;
    assert!(graph.bipartition().valid, "cvd reduction output must be bipartite");
    assert!(graph.max_degree() <= 3, "cvd reduction output must be subcubic");
    let budget = 2 * m * n + 11 * m;
    ReductionArtifact::build(graph, 2, Some(budget), labels, SourceInstance::Formula {
        formula: f.clone(),
    })
}

// ---------------------------------------------------------------------------
// nae-3sat to claw vertex deletion (d = 3), budget 2mn + 16m.
// ---------------------------------------------------------------------------

struct ClawLayout {
    m: usize,
}

impl ClawLayout {
    fn var_base(&self, i: usize) -> usize {
        i * claw_variable::size(self.m)
    }

    fn var_vertex(&self, i: usize, j: usize, role: usize) -> usize {
        self.var_base(i) + claw_variable::SLOT * j + role
    }

    fn clause_base(&self, n: usize, j: usize) -> usize {
        n * claw_variable::size(self.m) + j * 2 * claw_clause_half::SIZE
    }

    fn clause_half(&self, n: usize, j: usize, prime: bool) -> usize {
        self.clause_base(n, j) + if prime { claw_clause_half::SIZE } else { 0 }
    }
}

pub fn reduce_nae3sat_to_clawvd(f: &NaeFormula) -> Result<ReductionArtifact, ReductionError> {
    if f.clauses.is_empty() {
        return Err(ReductionError::EmptyFormula);
    }
    let (n, m) = (f.n, f.clause_count());
    let lay = ClawLayout { m };
    let total = n * claw_variable::size(m) + m * 2 * claw_clause_half::SIZE;
    let mut edges = Vec::new();
    let mut labels = vec![String::new(); total];

    for i in 0..n {
        let base = lay.var_base(i);
        edges.extend(claw_variable::edges(m).iter().map(|&(u, v)| (base + u, base + v)));
        for j in 0..m {
            for (r, role) in ["v", "a1", "a2", "a3", "b1", "b2", "b3", "v'"].iter().enumerate() {
                labels[base + claw_variable::SLOT * j + r] = format!("{role}_{{{},{}}}", i + 1, j + 1);
            }
        }
    }
    for j in 0..m {
        for prime in [false, true] {
            let base = lay.clause_half(n, j, prime);
            edges.extend(claw_clause_half::edges().iter().map(|&(u, v)| (base + u, base + v)));
            let mark = if prime { "'" } else { "" };
            for k in 0..claw_clause_half::SECTIONS {
                for (r, role) in ["c", "p1", "p2", "p3", "x", "y", "z", "q1", "q2", "q3", "d"]
                    .iter()
                    .enumerate()
                {
                    let id = base + claw_clause_half::SECTION * k + r;
                    labels[id] = if r == 0 {
                        format!("c{mark}_{{{},{}}}", j + 1, k + 1)
                    } else {
                        format!("c{mark}_{{{},{}}}:{role}", j + 1, k + 1)
                    };
                }
            }
        }
        for (k, &var) in f.clauses[j].iter().enumerate() {
            let i = var - 1;
            edges.push((
                lay.var_vertex(i, j, claw_h::V),
                lay.clause_half(n, j, false) + claw_clause_half::vertex(k, claw_a::C),
            ));
            edges.push((
                lay.var_vertex(i, j, claw_h::V_PRIME),
                lay.clause_half(n, j, true) + claw_clause_half::vertex(k, claw_a::C),
            ));
        }
    }

    let graph = Graph::from_edge_list(total, &edges)?;
    assert!(graph.bipartition().valid, "claw reduction output must be bipartite");
    assert!(graph.max_degree() <= 3, "claw reduction output must be subcubic");
    let budget = 2 * m * n + 16 * m;
    ReductionArtifact::build(graph, 3, Some(budget), labels, SourceInstance::Formula {
        formula: f.clone(),
    })
}

/// The exact deletion set the constructive direction of the nae reductions
/// describes: per-variable true/false menus plus a per-clause menu keyed by
/// the clause's truth pattern. Its size is exactly the artifact budget.
pub fn solution_from_nae_assignment(
    artifact: &ReductionArtifact,
    assignment: &[bool],
) -> Result<Vec<usize>, ReductionError> {
    let SourceInstance::Formula { formula } = &artifact.source else {
        return Err(ReductionError::WrongArtifact);
    };
    formula.is_nae(assignment)?;
    let (n, m) = (formula.n, formula.clause_count());
    let mut out = Vec::new();
    match artifact.d {
        2 => {
            let lay = CvdLayout { m };
            for (i, &value) in assignment.iter().enumerate() {
                let base = lay.var_base(i);
                out.extend(cvd_variable::menu(m, value).iter().map(|&v| base + v));
            }
            for (j, clause) in formula.clauses.iter().enumerate() {
                let truth = [
                    assignment[clause[0] - 1],
                    assignment[clause[1] - 1],
                    assignment[clause[2] - 1],
                ];
                let base = lay.clause_base(n, j);
                out.extend(cvd_clause::menu(truth).iter().map(|&v| base + v));
            }
        }
        3 => {
            let lay = ClawLayout { m };
            for (i, &value) in assignment.iter().enumerate() {
                let base = lay.var_base(i);
                out.extend(claw_variable::menu(m, value).iter().map(|&v| base + v));
            }
            for (j, clause) in formula.clauses.iter().enumerate() {
                let truth = [
                    assignment[clause[0] - 1],
                    assignment[clause[1] - 1],
                    assignment[clause[2] - 1],
                ];
                // a clause vertex is deleted exactly when its variable vertex
                // stays: plain side takes the false positions, primed side
                // the true ones
                let falses = truth.map(|b| !b);
                let plain = lay.clause_half(n, j, false);
                let primed = lay.clause_half(n, j, true);
                out.extend(claw_clause_half::menu(falses).iter().map(|&v| plain + v));
                out.extend(claw_clause_half::menu(truth).iter().map(|&v| primed + v));
            }
        }
        _ => return Err(ReductionError::WrongArtifact),
    }
    out.sort_unstable();
    debug_assert_eq!(Some(out.len()), artifact.budget_k);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Hypergraph vertex cover to d-claw deletion on split graphs, d = r + 1.
// ---------------------------------------------------------------------------

/// Builds the split graph with independent set I = {v' | v} and one clique
/// Q(e) of size n per hyperedge, all merged into a single clique Q; v' is
/// joined to all of Q(e) exactly when v is in e. Requires every hyperedge to
/// have a disjoint partner; covers and deletion sets then have equal optima.
pub fn reduce_hvc_to_split(
    h: &Hypergraph,
    source_budget: Option<usize>,
) -> Result<ReductionArtifact, ReductionError> {
    let d = h.r + 1;
    let (n, m) = (h.n, h.edges.len());
    for (index, e) in h.edges.iter().enumerate() {
        let has_disjoint = h.edges.iter().any(|f| e.iter().all(|v| !f.contains(v)));
        if !has_disjoint {
            return Err(ReductionError::NoDisjointEdge { index });
        }
    }
    let total = n + n * m;
    let mut edges = Vec::new();
    let mut labels: Vec<String> = (0..n).map(|v| format!("v_{v}'")).collect();
    let clique_vertex = |e: usize, t: usize| n + e * n + t;
    for e in 0..m {
        for t in 0..n {
            labels.push(format!("Q(e{e})#{t}"));
        }
    }
    // one big clique over all Q(e)
    for a in n..total {
        for b in a + 1..total {
            edges.push((a, b));
        }
    }
    for (e, members) in h.edges.iter().enumerate() {
        for &v in members {
            for t in 0..n {
                edges.push((v, clique_vertex(e, t)));
            }
        }
    }
    let graph = Graph::from_edge_list(total, &edges)?;
    assert_eq!(graph.vertex_count(), n * m + n);
    assert!(
        crate::claw::is_d_claw_free(&graph, d + 1),
        "split reduction output must have no induced (d+1)-claw",
    );
    ReductionArtifact::build(graph, d, source_budget, labels, SourceInstance::Hypergraph {
        hypergraph: h.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitDirection {
    VcToClaw,
    ClawToVc,
}

/// The split reduction's solution translations: hypergraph covers map to the
/// matching independent-set vertices, and deletion sets smaller than n map
/// back to the covered hypergraph vertices.
pub fn solution_maps_split(
    artifact: &ReductionArtifact,
    direction: SplitDirection,
    set: &[usize],
) -> Result<Vec<usize>, ReductionError> {
    let SourceInstance::Hypergraph { hypergraph } = &artifact.source else {
        return Err(ReductionError::WrongArtifact);
    };
    let n = hypergraph.n;
    match direction {
        SplitDirection::VcToClaw => {
            let mut out = Vec::with_capacity(set.len());
            for &v in set {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { v, n }.into());
                }
                out.push(v); // I vertices occupy ids 0..n
            }
            out.sort_unstable();
            out.dedup();
            Ok(out)
        }
        SplitDirection::ClawToVc => {
            if set.len() >= n {
                return Err(ReductionError::BackwardSetTooLarge { n });
            }
            for &v in set {
                if v >= artifact.graph.vertex_count() {
                    return Err(GraphError::VertexOutOfRange { v, n: artifact.graph.vertex_count() }
                        .into());
                }
            }
            let mut out: Vec<usize> = set.iter().copied().filter(|&v| v < n).collect();
            out.sort_unstable();
            out.dedup();
            Ok(out)
        }
    }
}

// ---------------------------------------------------------------------------
// Claw deletion to d-claw deletion for d > 3 by pendant attachment.
// ---------------------------------------------------------------------------

/// Attaches d-3 pendants to every vertex; 3-claw deletion sets of the input
/// correspond to d-claw deletion sets of the output with equal optima, and
/// bipartiteness is preserved.
pub fn extend_claw_to_dclaw(
    g: &Graph,
    d: usize,
    source_budget: Option<usize>,
) -> Result<ReductionArtifact, ReductionError> {
    if d <= 3 {
        return Err(ReductionError::ClawOrder { d });
    }
    let n = g.vertex_count();
    let mut edges = g.edges();
    let mut labels: Vec<String> = (0..n).map(|v| format!("v_{v}")).collect();
    let mut next = n;
    for v in 0..n {
        for t in 1..=(d - 3) {
            edges.push((v, next));
            labels.push(format!("P(v_{v})#{t}"));
            next += 1;
        }
    }
    let graph = Graph::from_edge_list(next, &edges)?;
    ReductionArtifact::build(graph, d, source_budget, labels, SourceInstance::Graph { n })
}

// ---------------------------------------------------------------------------
// Brute-force oracles for the source problems.
// ---------------------------------------------------------------------------

/// Exhaustive nae satisfiability: the least assignment in binary order (the
/// last variable is the least significant bit), or None.
pub fn nae_oracle(f: &NaeFormula) -> Option<Vec<bool>> {
    assert!(f.n < 60, "exhaustive oracle is for small variable counts");
    for x in 0u64..(1u64 << f.n) {
        let assignment: Vec<bool> = (0..f.n).map(|i| (x >> (f.n - 1 - i)) & 1 == 1).collect();
        if f.is_nae(&assignment).is_ok() {
            return Some(assignment);
        }
    }
    None
}

/// Minimum hypergraph vertex cover by subset enumeration, lexicographically
/// least among the minima.
pub fn hvc_oracle(h: &Hypergraph) -> Vec<usize> {
    if h.edges.is_empty() {
        return Vec::new();
    }
    assert!(h.n <= 128, "exhaustive oracle is for small vertex counts");
    let masks: Vec<u128> = h
        .edges
        .iter()
        .map(|e| e.iter().fold(0u128, |acc, &v| acc | (1u128 << v)))
        .collect();
    for t in 1..=h.n {
        let hit = crate::solvers::first_combination(h.n, t, |subset| {
            let mask = subset.iter().fold(0u128, |acc, &v| acc | (1u128 << v));
            masks.iter().all(|&e| e & mask != 0)
        });
        if let Some(s) = hit {
            return s;
        }
    }
    unreachable!("every vertex together covers all edges");
}

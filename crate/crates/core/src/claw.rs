//! Detection, enumeration and certification of induced d-claws (K_{1,d}) and
//! of d-claw deletion sets.
//!
//! Everything here is about induced claws: the leaves must be pairwise
//! non-adjacent. Hitting K_{1,d} as a not-necessarily-induced subgraph (the
//! transversal variant) is a different problem and out of scope, though the
//! two coincide on triangle-free graphs.

use crate::graph::{Graph, GraphError};
use serde::{Deserialize, Serialize};

/// One induced K_{1,d} witness: a center plus d pairwise non-adjacent leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DClaw {
    pub center: usize,
    /// Sorted, pairwise non-adjacent, all adjacent to the center.
    pub leaves: Vec<usize>,
}

impl DClaw {
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = vec![self.center];
        out.extend_from_slice(&self.leaves);
        out
    }
}

/// A vertex deletion set together with how it was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    /// Sorted vertex ids of the deletion set.
    pub vertices: Vec<usize>,
    pub d: usize,
    pub certified_optimal: bool,
    pub algorithm_tag: String,
}

impl Solution {
    pub fn new(mut vertices: Vec<usize>, d: usize, certified: bool, tag: &str) -> Solution {
        vertices.sort_unstable();
        vertices.dedup();
        Solution { vertices, d, certified_optimal: certified, algorithm_tag: tag.to_string() }
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

// Lexicographically least choice of `d` pairwise non-adjacent vertices from
// `candidates` (sorted), extending `chosen`. Plain backtracking: d is a small
// constant for every use case here, so subset enumeration with early pruning
// beats anything fancier.
fn least_independent_subset(
    g: &Graph,
    candidates: &[usize],
    d: usize,
    start: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == d {
        return true;
    }
    let needed = d - chosen.len();
    if candidates.len() - start < needed {
        return false;
    }
    for (i, &v) in candidates.iter().enumerate().skip(start) {
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
            if least_independent_subset(g, candidates, d, i + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Some induced d-claw if one exists: the one with the lowest center id and,
/// among those, the lexicographically least leaf set.
pub fn find_d_claw(g: &Graph, d: usize) -> Option<DClaw> {
    assert!(d >= 1, "claw order must be at least 1");
    let alive = vec![true; g.vertex_count()];
    find_d_claw_alive(g, d, &alive)
}

// Same search restricted to vertices still marked alive; lets the branching
// solvers avoid rebuilding induced subgraphs at every node.
pub(crate) fn find_d_claw_alive(g: &Graph, d: usize, alive: &[bool]) -> Option<DClaw> {
    for center in g.vertices() {
        if !alive[center] || g.degree(center) < d {
            continue;
        }
        let candidates: Vec<usize> =
            g.neighbors(center).iter().copied().filter(|&v| alive[v]).collect();
        if candidates.len() < d {
            continue;
        }
        let mut leaves = Vec::with_capacity(d);
        if least_independent_subset(g, &candidates, d, 0, &mut leaves) {
            return Some(DClaw { center, leaves });
        }
    }
    None
}

pub fn is_d_claw_free(g: &Graph, d: usize) -> bool {
    find_d_claw(g, d).is_none()
}

fn enumerate_from_center(
    g: &Graph,
    center: usize,
    d: usize,
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<DClaw>,
    limit: Option<usize>,
) -> bool {
    if chosen.len() == d {
        out.push(DClaw { center, leaves: chosen.clone() });
        return limit.is_some_and(|l| out.len() >= l);
    }
    let candidates = g.neighbors(center);
    for (i, &v) in candidates.iter().enumerate().skip(start) {
        if chosen.iter().all(|&u| !g.has_edge(u, v)) {
            chosen.push(v);
            let full = enumerate_from_center(g, center, d, i + 1, chosen, out, limit);
            chosen.pop();
            if full {
                return true;
            }
        }
    }
    false
}

/// All induced d-claws, centers ascending and leaf sets in lexicographic
/// order per center, truncated at `limit` if given.
pub fn enumerate_d_claws(g: &Graph, d: usize, limit: Option<usize>) -> Vec<DClaw> {
    assert!(d >= 1, "claw order must be at least 1");
    let mut out = Vec::new();
    for center in g.vertices() {
        if g.degree(center) < d {
            continue;
        }
        let mut chosen = Vec::with_capacity(d);
        if enumerate_from_center(g, center, d, 0, &mut chosen, &mut out, limit) {
            break;
        }
    }
    out
}

/// Checks whether `g - s` is d-claw-free; on failure also returns one
/// witnessing claw in the ids of the original graph.
pub fn verify_deletion_set(
    g: &Graph,
    s: &[usize],
    d: usize,
) -> Result<(bool, Option<DClaw>), GraphError> {
    let (reduced, remap) = g.delete_vertices(s)?;
    match find_d_claw(&reduced, d) {
        None => Ok((true, None)),
        Some(claw) => {
            let witness = DClaw {
                center: remap[claw.center],
                leaves: claw.leaves.iter().map(|&v| remap[v]).collect(),
            };
            Ok((false, Some(witness)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(d: usize) -> Graph {
        let edges: Vec<_> = (1..=d).map(|i| (0, i)).collect();
        Graph::from_edge_list(d + 1, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn find_in_star() {
        let claw = find_d_claw(&star(3), 3).unwrap();
        assert_eq!(claw.center, 0);
        assert_eq!(claw.leaves, vec![1, 2, 3]);
    }

    #[test]
    fn complete_graphs_have_none() {
        for n in 1..7 {
            for d in 2..5 {
                assert!(find_d_claw(&complete(n), d).is_none());
            }
        }
    }

    #[test]
    fn low_degree_is_free() {
        // trivial on graphs of maximum degree below d
        let g = cycle(5);
        assert!(is_d_claw_free(&g, 3));
        assert!(!is_d_claw_free(&g, 2));
    }

    #[test]
    fn cluster_graph_is_p3_free() {
        let g = Graph::from_edge_list(6, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        assert!(is_d_claw_free(&g, 2));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_d_claws(&star(3), 3, None).len(), 1);
        // C(4, 3) leaf choices
        assert_eq!(enumerate_d_claws(&star(4), 3, None).len(), 4);
        // one per vertex of the 6-cycle
        assert_eq!(enumerate_d_claws(&cycle(6), 2, None).len(), 6);
        assert_eq!(enumerate_d_claws(&star(4), 3, Some(2)).len(), 2);
    }

    #[test]
    fn verify_with_witness() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        let (ok, w) = verify_deletion_set(&p3, &[1], 2).unwrap();
        assert!(ok);
        assert!(w.is_none());

        let (ok, w) = verify_deletion_set(&p3, &[], 2).unwrap();
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.center, 1);
        assert_eq!(w.leaves, vec![0, 2]);
        assert!(verify_deletion_set(&p3, &[5], 2).is_err());
    }

    #[test]
    fn witness_reported_in_original_ids() {
        // deleting 0 leaves the P_3 2-3-4; witness must use original ids
        let g = Graph::from_edge_list(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        let (ok, w) = verify_deletion_set(&g, &[0, 1], 2).unwrap();
        assert!(!ok);
        assert_eq!(w.unwrap().vertices(), vec![3, 2, 4]);
    }

    #[test]
    fn deleting_everything_verifies() {
        let g = cycle(6);
        let all: Vec<_> = g.vertices().collect();
        assert!(verify_deletion_set(&g, &all, 2).unwrap().0);
    }
}

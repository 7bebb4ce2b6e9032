//! Solvers for minimum d-claw vertex deletion: exact brute force (the
//! oracle), the O*((d+1)^k) bounded search tree, the delete-whole-claw
//! greedy, the complete-bipartite closed form and an auto-dispatcher.

use crate::claw::{enumerate_d_claws, find_d_claw, is_d_claw_free, DClaw, Solution};
use crate::dblock;
use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("input is not a connected complete bipartite graph")]
    NotCompleteBipartite,
    #[error("input is not a {d}-block graph: {reason}")]
    NotDBlockGraph { d: usize, reason: String },
    #[error("claw order out of range for this solver")]
    InvalidClawOrder,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Brute,
    Fpt,
    Greedy,
    CompleteBipartite,
    DBlock,
    Auto,
}

#[derive(Debug, Clone)]
pub struct SolveRequest {
    pub graph: Graph,
    pub d: usize,
    pub budget_k: Option<usize>,
    pub algorithm: Algorithm,
    /// Branch-node cap for the search tree before `auto` falls back to greedy.
    pub branch_cap: Option<u64>,
}

pub const DEFAULT_BRANCH_CAP: u64 = 10_000_000;

/// Brute force becomes noticeably slow beyond this many vertices.
pub const BRUTE_FORCE_WARN_VERTICES: usize = 24;

// Deleting S leaves a d-claw-free graph exactly when S hits every induced
// d-claw of the original graph (induced claws survive vertex deletion
// untouched), so the brute force is a minimum hitting set search.
fn hits_all(claw_masks: &[u128], subset_mask: u128) -> bool {
    claw_masks.iter().all(|&c| c & subset_mask != 0)
}

fn combination_masks(vertices: &[usize]) -> u128 {
    vertices.iter().fold(0u128, |acc, &v| acc | (1u128 << v))
}

// Visits t-subsets of 0..n in lexicographic order until `f` returns true;
// returns the first accepted subset.
pub(crate) fn first_combination(
    n: usize,
    t: usize,
    mut f: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if t > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    loop {
        if f(&idx) {
            return Some(idx);
        }
        if t == 0 {
            return None;
        }
        // advance to the next combination
        let mut i = t - 1;
        loop {
            if idx[i] < i + n - t {
                idx[i] += 1;
                for j in i + 1..t {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return None;
            }
            i -= 1;
        }
    }
}

/// Minimum deletion set by iterating the target size upward and enumerating
/// subsets; returns the lexicographically least among the minimum sets.
/// Intended for small graphs; see [`BRUTE_FORCE_WARN_VERTICES`].
pub fn solve_brute_force(g: &Graph, d: usize) -> Solution {
    let n = g.vertex_count();
    let claws = enumerate_d_claws(g, d, None);
    if claws.is_empty() {
        return Solution::new(Vec::new(), d, true, "brute");
    }
    if n <= 128 {
        let masks: Vec<u128> = claws.iter().map(|c| combination_masks(&c.vertices())).collect();
        for t in 1..=n {
            let hit = first_combination(n, t, |subset| hits_all(&masks, combination_masks(subset)));
            if let Some(s) = hit {
                return Solution::new(s, d, true, "brute");
            }
        }
    } else {
        for t in 1..=n {
            let hit = first_combination(n, t, |subset| {
                claws.iter().all(|c| c.vertices().iter().any(|v| subset.binary_search(v).is_ok()))
            });
            if let Some(s) = hit {
                return Solution::new(s, d, true, "brute");
            }
        }
    }
    unreachable!("deleting every vertex is always a deletion set");
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BranchCapHit;

struct FptSearch<'a> {
    g: &'a Graph,
    d: usize,
    nodes: u64,
    cap: Option<u64>,
}

impl FptSearch<'_> {
    fn run(
        &mut self,
        alive: &mut [bool],
        k: usize,
        acc: &mut Vec<usize>,
    ) -> Result<bool, BranchCapHit> {
        self.nodes += 1;
        if self.cap.is_some_and(|cap| self.nodes > cap) {
            return Err(BranchCapHit);
        }
        let Some(claw) = crate::claw::find_d_claw_alive(self.g, self.d, alive) else {
            return Ok(true);
        };
        if k == 0 {
            return Ok(false);
        }
        // branch order: center first, then leaves ascending
        for v in claw.vertices() {
            alive[v] = false;
            acc.push(v);
            let found = self.run(alive, k - 1, acc)?;
            if found {
                return Ok(true);
            }
            acc.pop();
            alive[v] = true;
        }
        Ok(false)
    }
}

/// Bounded search tree: some deletion set of size at most `k` if one exists.
/// The returned set is the first found under the fixed branch order and is
/// not necessarily minimum.
pub fn solve_fpt(g: &Graph, d: usize, k: usize) -> Option<Solution> {
    solve_fpt_capped(g, d, k, None).expect("uncapped search cannot hit a cap")
}

/// As [`solve_fpt`] but giving up once the search tree exceeds `cap` nodes.
pub fn solve_fpt_capped(
    g: &Graph,
    d: usize,
    k: usize,
    cap: Option<u64>,
) -> Result<Option<Solution>, BranchCapHit> {
    let mut search = FptSearch { g, d, nodes: 0, cap };
    let mut alive = vec![true; g.vertex_count()];
    let mut acc = Vec::new();
    Ok(search.run(&mut alive, k, &mut acc)?.then(|| Solution::new(acc, d, false, "fpt")))
}

/// Greedily packs vertex-disjoint d-claws; their count lower-bounds the
/// optimum since any deletion set needs a vertex from each.
pub fn packing_lower_bound(g: &Graph, d: usize) -> usize {
    let mut alive = vec![true; g.vertex_count()];
    let mut count = 0;
    while let Some(claw) = crate::claw::find_d_claw_alive(g, d, &alive) {
        for v in claw.vertices() {
            alive[v] = false;
        }
        count += 1;
    }
    count
}

/// Minimum deletion set via the search tree, iterating the budget upward
/// from the packing lower bound.
pub fn solve_min_fpt(g: &Graph, d: usize) -> Solution {
    match solve_min_fpt_capped(g, d, None) {
        Ok(sol) => sol,
        Err(BranchCapHit) => unreachable!("uncapped search cannot hit a cap"),
    }
}

pub fn solve_min_fpt_capped(
    g: &Graph,
    d: usize,
    cap: Option<u64>,
) -> Result<Solution, BranchCapHit> {
    let mut k = packing_lower_bound(g, d);
    loop {
        if let Some(sol) = solve_fpt_capped(g, d, k, cap)? {
            // k - 1 failed (or k is the lower bound), so the size is optimal
            return Ok(Solution::new(sol.vertices, d, true, "fpt"));
        }
        k += 1;
    }
}

/// Repeatedly deletes all d+1 vertices of some claw; the result is a valid
/// deletion set of size at most (d+1) times the optimum.
pub fn greedy_approx(g: &Graph, d: usize) -> Solution {
    let mut alive = vec![true; g.vertex_count()];
    let mut acc = Vec::new();
    while let Some(claw) = crate::claw::find_d_claw_alive(g, d, &alive) {
        for v in claw.vertices() {
            alive[v] = false;
            acc.push(v);
        }
    }
    Solution::new(acc, d, false, "greedy")
}

/// Closed form on complete bipartite graphs: the optimum is one of X, Y, or
/// trimming both sides down to d-1 vertices. Keeps the lowest ids on each
/// side when trimming.
pub fn solve_complete_bipartite(g: &Graph, d: usize) -> Result<Solution, SolveError> {
    let (x, y) = g.complete_bipartite_sides().ok_or(SolveError::NotCompleteBipartite)?;
    if x.len().max(y.len()) < d {
        return Ok(Solution::new(Vec::new(), d, true, "complete_bipartite"));
    }
    let trim_cost = x.len().saturating_sub(d - 1) + y.len().saturating_sub(d - 1);
    let best = x.len().min(y.len()).min(trim_cost);
    let vertices = if best == x.len() {
        x
    } else if best == y.len() {
        y
    } else {
        let mut s: Vec<usize> = x.iter().skip(d - 1).copied().collect();
        s.extend(y.iter().skip(d - 1).copied());
        s
    };
    Ok(Solution::new(vertices, d, true, "complete_bipartite"))
}

/// Dispatches to the cheapest applicable solver: trivially free graphs,
/// the complete-bipartite closed form, the d-block algorithm, brute force on
/// small instances, then the search tree with a branch-node cap and a greedy
/// fallback once the cap is hit.
pub fn solve_auto(req: &SolveRequest) -> Result<Solution, SolveError> {
    let g = &req.graph;
    let d = req.d;
    if d < 1 {
        return Err(SolveError::InvalidClawOrder);
    }
    if is_d_claw_free(g, d) {
        return Ok(Solution::new(Vec::new(), d, true, "auto:free"));
    }
    if g.complete_bipartite_sides().is_some() {
        let sol = solve_complete_bipartite(g, d)?;
        return Ok(Solution { algorithm_tag: "auto:complete_bipartite".into(), ..sol });
    }
    if d >= 2 {
        let analysis = dblock::is_d_block_graph(g, d).expect("d >= 2");
        if analysis.is_d_block {
            let sol = dblock::solve_d_block(g, d).expect("recognition passed");
            return Ok(Solution { algorithm_tag: "auto:dblock".into(), ..sol });
        }
    }
    if g.vertex_count() <= 20 {
        let sol = solve_brute_force(g, d);
        return Ok(Solution { algorithm_tag: "auto:brute".into(), ..sol });
    }
    let cap = req.branch_cap.unwrap_or(DEFAULT_BRANCH_CAP);
    match solve_min_fpt_capped(g, d, Some(cap)) {
        Ok(sol) => Ok(Solution { algorithm_tag: "auto:fpt".into(), ..sol }),
        Err(BranchCapHit) => {
            let sol = greedy_approx(g, d);
            Ok(Solution { algorithm_tag: "auto:greedy_fallback".into(), ..sol })
        }
    }
}

/// Decision variant: a witness of size at most `k`, or None.
pub fn solve_decision(g: &Graph, d: usize, k: usize) -> Option<Solution> {
    solve_fpt(g, d, k)
}

pub fn witness_claw(g: &Graph, d: usize) -> Option<DClaw> {
    find_d_claw(g, d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claw::verify_deletion_set;

    fn star(d: usize) -> Graph {
        let edges: Vec<_> = (1..=d).map(|i| (0, i)).collect();
        Graph::from_edge_list(d + 1, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Graph::from_edge_list(a + b, &edges).unwrap()
    }

    #[test]
    fn brute_force_examples() {
        assert_eq!(solve_brute_force(&star(3), 3).size(), 1);
        // C_6 packs two disjoint P_3s, and two antipodal vertices suffice
        assert_eq!(solve_brute_force(&cycle(6), 2).size(), 2);
        let sol = solve_brute_force(&star(3), 3);
        assert!(sol.certified_optimal);
        assert_eq!(sol.vertices, vec![0]);
    }

    #[test]
    fn brute_force_is_lexicographically_least() {
        // both {1} and {0} are optimal for P_3; the lex-least is {0}? no:
        // deleting 0 leaves the edge 1-2 which is P_3-free, so {0} works.
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(solve_brute_force(&p3, 2).vertices, vec![0]);
    }

    #[test]
    fn fpt_examples() {
        let p3 = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(solve_fpt(&p3, 2, 0).is_none());
        let sol = solve_fpt(&p3, 2, 1).unwrap();
        assert_eq!(sol.size(), 1);
        assert!(verify_deletion_set(&p3, &sol.vertices, 2).unwrap().0);
    }

    #[test]
    fn min_fpt_matches_brute_on_smalls() {
        let graphs = vec![star(3), cycle(6), cycle(7), complete_bipartite(3, 3)];
        for g in graphs {
            for d in 2..4 {
                assert_eq!(solve_min_fpt(&g, d).size(), solve_brute_force(&g, d).size());
            }
        }
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_approx(&cycle(5), 3).size(), 0);
        assert_eq!(greedy_approx(&star(3), 3).size(), 4);
        // greedy on C_6 takes both P_3 halves
        let sol = greedy_approx(&cycle(6), 2);
        assert_eq!(sol.size(), 6);
        assert!(!sol.certified_optimal);
    }

    #[test]
    fn complete_bipartite_closed_form() {
        assert_eq!(solve_complete_bipartite(&complete_bipartite(3, 3), 3).unwrap().size(), 2);
        assert_eq!(solve_complete_bipartite(&complete_bipartite(2, 3), 3).unwrap().size(), 1);
        assert_eq!(solve_complete_bipartite(&complete_bipartite(1, 2), 4).unwrap().size(), 0);
        assert!(matches!(
            solve_complete_bipartite(&cycle(5), 3),
            Err(SolveError::NotCompleteBipartite)
        ));
    }

    #[test]
    fn auto_on_complete_graph() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edge_list(5, &edges).unwrap();
        let req = SolveRequest {
            graph: g,
            d: 3,
            budget_k: None,
            algorithm: Algorithm::Auto,
            branch_cap: None,
        };
        let sol = solve_auto(&req).unwrap();
        assert_eq!(sol.size(), 0);
        assert!(sol.certified_optimal);
    }

    #[test]
    fn auto_routes_block_graphs_to_dblock() {
        let g = crate::generators::block_graph(12, 7);
        let req = SolveRequest {
            graph: g.clone(),
            d: 3,
            budget_k: None,
            algorithm: Algorithm::Auto,
            branch_cap: None,
        };
        let sol = solve_auto(&req).unwrap();
        if !is_d_claw_free(&g, 3) {
            assert_eq!(sol.algorithm_tag, "auto:dblock");
        }
        assert_eq!(sol.size(), solve_brute_force(&g, 3).size());
        assert!(sol.certified_optimal);
    }

    #[test]
    fn auto_falls_back_to_greedy_on_cap_hit() {
        let g = crate::generators::gnp(50, 0.2, 11);
        let req = SolveRequest {
            graph: g.clone(),
            d: 3,
            budget_k: None,
            algorithm: Algorithm::Auto,
            branch_cap: Some(10),
        };
        let sol = solve_auto(&req).unwrap();
        assert_eq!(sol.algorithm_tag, "auto:greedy_fallback");
        assert!(!sol.certified_optimal);
        assert!(verify_deletion_set(&g, &sol.vertices, 3).unwrap().0);
    }

    #[test]
    fn fpt_cap_triggers() {
        // K_{1,3} needs branching; a cap of 1 node cannot finish
        let res = solve_fpt_capped(&star(3), 3, 4, Some(1));
        assert_eq!(res, Err(BranchCapHit));
    }

    #[test]
    fn packing_bound_is_sound() {
        for (g, d) in [(cycle(6), 2), (star(3), 3), (cycle(9), 2)] {
            assert!(packing_lower_bound(&g, d) <= solve_brute_force(&g, d).size());
        }
    }
}

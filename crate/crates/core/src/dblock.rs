//! Recognition of d-block graphs and the polynomial-time minimum d-claw
//! deletion algorithm on them.
//!
//! A graph is a d-block graph when every block is d-claw-free, every cut
//! vertex has a clique neighborhood inside each of its blocks, and the cut
//! vertices within a block are pairwise adjacent. Block graphs are exactly
//! the 2-block graphs.

use crate::claw::Solution;
use crate::graph::{BlockCutTree, Graph};
use crate::solvers::SolveError;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DBlockViolation {
    HasDClaw,
    CutVertexNeighborhoodNotClique,
    CutVerticesNotClique,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DBlockRole {
    Endvertex,
    PseudoEndvertex,
    OtherCut,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DBlockAnalysis {
    pub is_d_block: bool,
    /// First violating block (by deterministic block order) and the reason.
    pub violating_block: Option<(usize, DBlockViolation)>,
    pub vertex_roles: Vec<DBlockRole>,
}

// Structure of one residual graph: blocks, cut vertices, block membership,
// endblock status. Recomputed from scratch each round of the solver.
struct Structure {
    bct: BlockCutTree,
    vertex_blocks: Vec<Vec<usize>>,
    /// Per block: number of cut vertices it contains.
    cut_count: Vec<usize>,
}

impl Structure {
    fn new(g: &Graph) -> Structure {
        let bct = g.block_cut_tree();
        let vertex_blocks = bct.blocks_of_vertices(g.vertex_count());
        let cut_count = bct
            .blocks
            .iter()
            .map(|b| b.iter().filter(|&&v| bct.is_cut(v)).count())
            .collect();
        Structure { bct, vertex_blocks, cut_count }
    }

    fn is_endblock(&self, b: usize) -> bool {
        self.cut_count[b] <= 1
    }

    fn endblocks_of(&self, v: usize) -> usize {
        self.vertex_blocks[v].iter().filter(|&&b| self.is_endblock(b)).count()
    }

    fn nonendblocks_of(&self, v: usize) -> usize {
        self.vertex_blocks[v].iter().filter(|&&b| !self.is_endblock(b)).count()
    }

    fn is_pseudo_endvertex(&self, v: usize, d: usize) -> bool {
        self.bct.is_cut(v) && self.nonendblocks_of(v) == 1 && self.endblocks_of(v) <= d - 2
    }

    // A vertex the solver may always steer around: an endvertex, or a
    // pseudo-endvertex (there is an optimal solution containing neither).
    fn is_avoidable(&self, v: usize, d: usize) -> bool {
        !self.bct.is_cut(v) || self.is_pseudo_endvertex(v, d)
    }
}

/// Checks the three d-block conditions block by block, reporting the first
/// violation in deterministic block order. Requires d >= 2.
pub fn is_d_block_graph(g: &Graph, d: usize) -> Result<DBlockAnalysis, SolveError> {
    if d < 2 {
        return Err(SolveError::InvalidClawOrder);
    }
    let st = Structure::new(g);
    let mut violating_block = None;
    'blocks: for (bi, block) in st.bct.blocks.iter().enumerate() {
        let sub = induced_on(g, block);
        if !crate::claw::is_d_claw_free(&sub, d) {
            violating_block = Some((bi, DBlockViolation::HasDClaw));
            break;
        }
        for &v in block {
            if !st.bct.is_cut(v) {
                continue;
            }
            let nb: Vec<usize> =
                g.neighbors(v).iter().copied().filter(|&w| in_block(block, w)).collect();
            if !g.is_clique(&nb).expect("neighbors are in range") {
                violating_block = Some((bi, DBlockViolation::CutVertexNeighborhoodNotClique));
                break 'blocks;
            }
        }
        let cuts: Vec<usize> = block.iter().copied().filter(|&v| st.bct.is_cut(v)).collect();
        if !g.is_clique(&cuts).expect("cut vertices are in range") {
            violating_block = Some((bi, DBlockViolation::CutVerticesNotClique));
            break;
        }
    }
    let vertex_roles = (0..g.vertex_count())
        .map(|v| {
            if !st.bct.is_cut(v) {
                DBlockRole::Endvertex
            } else if st.is_pseudo_endvertex(v, d) {
                DBlockRole::PseudoEndvertex
            } else {
                DBlockRole::OtherCut
            }
        })
        .collect();
    Ok(DBlockAnalysis { is_d_block: violating_block.is_none(), violating_block, vertex_roles })
}

fn in_block(block: &[usize], v: usize) -> bool {
    block.binary_search(&v).is_ok()
}

fn induced_on(g: &Graph, vertices: &[usize]) -> Graph {
    let removed: Vec<usize> = g.vertices().filter(|v| !in_block(vertices, *v)).collect();
    g.induced_without(&removed)
}

// Exact solution for a connected residual component with at most one
// non-endblock, in residual vertex ids.
//
// With at most one non-endblock B, every other block is an endblock hanging
// off a vertex of B, and every d-claw is centered at a cut vertex v of B:
// its leaves are one endblock neighbor per endblock of v plus at most one
// vertex of N(v) inside B. Some optimal solution avoids all endvertices and
// pseudo-endvertices, and for such a solution:
//   - every v in >= d endblocks is forced (set X),
//   - every v in exactly d-1 endblocks with an avoidable neighbor in B is
//     forced (set Y): the claw through that neighbor cannot be hit anywhere
//     else,
//   - the remaining degree-(d-1) cut vertices (set Z) satisfy "v in S or all
//     of N(v) inside B in S"; two of them cannot both be spared since cut
//     vertices in B are pairwise adjacent. Z nonempty forces B to be the
//     clique X + Z, and sparing any single Z vertex is optimal.
fn solve_one_nonendblock_component(
    r: &Graph,
    st: &Structure,
    comp_blocks: &[usize],
    d: usize,
) -> Result<Vec<usize>, SolveError> {
    let nonend: Vec<usize> =
        comp_blocks.iter().copied().filter(|&b| !st.is_endblock(b)).collect();
    if nonend.len() > 1 {
        return Err(SolveError::Precondition(
            "component has more than one non-endblock".into(),
        ));
    }
    if nonend.is_empty() {
        // all blocks endblocks: at most one cut vertex; a d-claw exists iff
        // there are at least d blocks, and then the cut vertex kills them all
        let cut = comp_blocks
            .iter()
            .flat_map(|&b| st.bct.blocks[b].iter())
            .copied()
            .find(|&v| st.bct.is_cut(v));
        if comp_blocks.len() >= d {
            let v = cut.expect("a connected graph with several blocks has a cut vertex");
            return Ok(vec![v]);
        }
        return Ok(Vec::new());
    }

    let block = &st.bct.blocks[nonend[0]];
    let mut forced = Vec::new(); // X and Y together
    let mut spareable = Vec::new(); // Z
    for &v in block {
        if st.is_avoidable(v, d) {
            continue;
        }
        let endblocks = st.endblocks_of(v);
        if endblocks >= d {
            forced.push(v);
        } else if endblocks == d - 1 {
            let has_avoidable_neighbor = r
                .neighbors(v)
                .iter()
                .any(|&w| in_block(block, w) && st.is_avoidable(w, d));
            if has_avoidable_neighbor {
                forced.push(v);
            } else {
                spareable.push(v);
            }
        }
        // vertices in <= d-2 endblocks are pseudo-endvertices, already skipped
    }
    if spareable.is_empty() {
        return Ok(forced);
    }
    assert!(
        r.is_clique(block).expect("block vertices in range"),
        "a non-endblock with unforced degree-(d-1) cut vertices must be a clique",
    );
    assert_eq!(
        forced.len() + spareable.len(),
        block.len(),
        "clique case leaves no avoidable vertices in the block",
    );
    let spare = spareable[0];
    Ok(block.iter().copied().filter(|&v| v != spare).collect())
}

// One elimination round on a component with at least two non-endblocks.
enum Step {
    // Mark v as pseudo-endvertex and drop the interiors of its endblocks.
    Flag { v: usize, dead: Vec<usize> },
    // Move vertices into the solution; `dead` are dropped alongside without
    // entering it.
    Take { into_solution: Vec<usize>, dead: Vec<usize> },
}

fn eliminate_step(r: &Graph, st: &Structure, comp_blocks: &[usize], d: usize) -> Step {
    // root the block-cut tree of this component at its first block
    let root = comp_blocks[0];
    let n_blocks = st.bct.blocks.len();
    // BFS over the incidence structure; cut nodes are offset by n_blocks
    let mut depth = vec![usize::MAX; n_blocks + r.vertex_count()];
    let mut parent = vec![usize::MAX; n_blocks + r.vertex_count()];
    depth[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(node) = queue.pop_front() {
        if node < n_blocks {
            for &v in &st.bct.blocks[node] {
                if st.bct.is_cut(v) && depth[n_blocks + v] == usize::MAX {
                    depth[n_blocks + v] = depth[node] + 1;
                    parent[n_blocks + v] = node;
                    queue.push_back(n_blocks + v);
                }
            }
        } else {
            let v = node - n_blocks;
            for &b in &st.vertex_blocks[v] {
                if depth[b] == usize::MAX {
                    depth[b] = depth[node] + 1;
                    parent[b] = node;
                    queue.push_back(b);
                }
            }
        }
    }

    // deepest block leaf, ties by block index
    let u = comp_blocks
        .iter()
        .copied()
        .filter(|&b| depth[b] != usize::MAX)
        .max_by_key(|&b| (depth[b], std::cmp::Reverse(b)))
        .expect("component has a block");
    assert!(depth[u] >= 4, "two non-endblocks force a leaf below depth 4");

    let v = parent[u] - n_blocks;
    let b_up = parent[n_blocks + v];
    let block_up = &st.bct.blocks[b_up];
    let children: Vec<usize> =
        st.vertex_blocks[v].iter().copied().filter(|&b| b != b_up).collect();
    debug_assert!(children.iter().all(|&b| st.is_endblock(b)));
    let endblock_interiors = || {
        children
            .iter()
            .flat_map(|&b| st.bct.blocks[b].iter().copied())
            .filter(|&w| w != v)
            .collect::<Vec<usize>>()
    };

    if children.len() <= d - 2 {
        // v is a pseudo-endvertex: no claw is centered at it, and its
        // endblock interiors cannot appear in any remaining claw
        return Step::Flag { v, dead: endblock_interiors() };
    }
    let forced = children.len() >= d
        || r.neighbors(v)
            .iter()
            .any(|&w| in_block(block_up, w) && st.is_avoidable(w, d));
    if forced {
        // only v joins the solution; its endblock interiors die with it
        return Step::Take { into_solution: vec![v], dead: endblock_interiors() };
    }
    // v has exactly d-1 endblocks and every neighbor in the parent block is
    // an unavoidable cut vertex, so the parent block is a clique and all of
    // it except v must go
    assert!(
        r.is_clique(block_up).expect("block vertices in range"),
        "parent block must be a clique when no neighbor of v is avoidable",
    );
    let into_solution: Vec<usize> = block_up.iter().copied().filter(|&w| w != v).collect();
    Step::Take { into_solution, dead: Vec::new() }
}

/// Minimum d-claw deletion set on a d-block graph via rooted block-cut-tree
/// elimination, solving each component down to the one-non-endblock case.
pub fn solve_d_block(g: &Graph, d: usize) -> Result<Solution, SolveError> {
    let analysis = is_d_block_graph(g, d)?;
    if let Some((block, reason)) = analysis.violating_block {
        return Err(SolveError::NotDBlockGraph {
            d,
            reason: format!("block {block} violates {reason:?}"),
        });
    }

    let mut alive = vec![true; g.vertex_count()];
    let mut flagged = vec![false; g.vertex_count()];
    let mut solution: Vec<usize> = Vec::new();

    loop {
        let keep: Vec<usize> = g.vertices().filter(|&v| alive[v]).collect();
        if keep.is_empty() {
            break;
        }
        let removed: Vec<usize> = g.vertices().filter(|&v| !alive[v]).collect();
        let (r, remap) = g.delete_vertices(&removed).expect("ids in range");
        debug_assert!(
            is_d_block_graph(&r, d).expect("d >= 2").is_d_block,
            "residual graphs stay d-block graphs",
        );
        let st = Structure::new(&r);

        // blocks per component, components keyed by their smallest vertex
        let comps = r.connected_components();
        let mut comp_of = vec![usize::MAX; r.vertex_count()];
        for (ci, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = ci;
            }
        }
        let mut comp_blocks: Vec<Vec<usize>> = vec![Vec::new(); comps.len()];
        for (bi, block) in st.bct.blocks.iter().enumerate() {
            comp_blocks[comp_of[block[0]]].push(bi);
        }

        let busy = comp_blocks
            .iter()
            .position(|blocks| blocks.iter().filter(|&&b| !st.is_endblock(b)).count() >= 2);
        match busy {
            None => {
                for blocks in &comp_blocks {
                    let part = solve_one_nonendblock_component(&r, &st, blocks, d)?;
                    debug_assert!(part.iter().all(|&v| !flagged[remap[v]]));
                    solution.extend(part.iter().map(|&v| remap[v]));
                }
                break;
            }
            Some(ci) => match eliminate_step(&r, &st, &comp_blocks[ci], d) {
                Step::Flag { v, dead } => {
                    flagged[remap[v]] = true;
                    for w in dead {
                        alive[remap[w]] = false;
                    }
                }
                Step::Take { into_solution, dead } => {
                    for &w in into_solution.iter().chain(dead.iter()) {
                        alive[remap[w]] = false;
                    }
                    debug_assert!(into_solution.iter().all(|&w| !flagged[remap[w]]));
                    solution.extend(into_solution.iter().map(|&w| remap[w]));
                }
            },
        }
    }

    Ok(Solution::new(solution, d, true, "dblock"))
}

/// Direct solver for a connected d-block graph with at most one non-endblock.
pub fn solve_single_nonendblock(
    g: &Graph,
    d: usize,
    analysis: &DBlockAnalysis,
) -> Result<Solution, SolveError> {
    if !analysis.is_d_block {
        return Err(SolveError::Precondition("input is not a d-block graph".into()));
    }
    if !g.is_connected() {
        return Err(SolveError::Precondition("input graph is not connected".into()));
    }
    let st = Structure::new(g);
    let all_blocks: Vec<usize> = (0..st.bct.blocks.len()).collect();
    let part = solve_one_nonendblock_component(g, &st, &all_blocks, d)?;
    Ok(Solution::new(part, d, true, "dblock"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claw::verify_deletion_set;
    use crate::solvers::solve_brute_force;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    #[test]
    fn block_graphs_are_recognized() {
        // two triangles sharing a vertex, a pendant edge
        let g = graph(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (2, 5)]);
        for d in 2..5 {
            assert!(is_d_block_graph(&g, d).unwrap().is_d_block);
        }
    }

    #[test]
    fn pendant_cycle_is_not_3_block() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        let analysis = is_d_block_graph(&g, 3).unwrap();
        assert!(!analysis.is_d_block);
        assert_eq!(
            analysis.violating_block,
            Some((0, DBlockViolation::CutVertexNeighborhoodNotClique))
        );
    }

    #[test]
    fn standalone_cycle_is_3_block() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        assert!(is_d_block_graph(&g, 3).unwrap().is_d_block);
        assert_eq!(solve_d_block(&g, 3).unwrap().size(), 0);
    }

    #[test]
    fn vertex_roles_on_a_path() {
        // P_4: the middle vertices sit in one endblock and one non-endblock,
        // so they are pseudo-endvertices at d = 3 but plain cuts at d = 2
        let g = graph(4, &[(0, 1), (1, 2), (2, 3)]);
        let roles3 = is_d_block_graph(&g, 3).unwrap().vertex_roles;
        assert_eq!(
            roles3,
            vec![
                DBlockRole::Endvertex,
                DBlockRole::PseudoEndvertex,
                DBlockRole::PseudoEndvertex,
                DBlockRole::Endvertex
            ]
        );
        let roles2 = is_d_block_graph(&g, 2).unwrap().vertex_roles;
        assert_eq!(roles2[1], DBlockRole::OtherCut);
        assert_eq!(roles2[0], DBlockRole::Endvertex);
    }

    #[test]
    fn order_too_small_is_rejected() {
        let g = graph(2, &[(0, 1)]);
        assert!(is_d_block_graph(&g, 1).is_err());
    }

    #[test]
    fn star_of_edge_blocks() {
        // K_{1,2} at d = 2: two edge blocks at one cut vertex
        let g = graph(3, &[(0, 1), (0, 2)]);
        let analysis = is_d_block_graph(&g, 2).unwrap();
        let sol = solve_single_nonendblock(&g, 2, &analysis).unwrap();
        assert_eq!(sol.vertices, vec![0]);
    }

    #[test]
    fn triangle_of_cut_vertices_with_pendants() {
        // K_3 whose vertices each carry two pendant edges; d = 3
        let mut edges = vec![(0, 1), (0, 2), (1, 2)];
        let mut next = 3;
        for v in 0..3 {
            edges.push((v, next));
            edges.push((v, next + 1));
            next += 2;
        }
        let g = graph(9, &edges);
        let analysis = is_d_block_graph(&g, 3).unwrap();
        assert!(analysis.is_d_block);
        let sol = solve_single_nonendblock(&g, 3, &analysis).unwrap();
        assert_eq!(sol.size(), 2);
        assert_eq!(sol.size(), solve_brute_force(&g, 3).size());
        assert!(verify_deletion_set(&g, &sol.vertices, 3).unwrap().0);
    }

    #[test]
    fn forced_centers_with_many_endblocks() {
        // one vertex in three pendant endblocks (d = 3) hanging off a
        // triangle: X nonempty, Z empty
        let g = graph(
            6,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5)],
        );
        let analysis = is_d_block_graph(&g, 3).unwrap();
        let sol = solve_single_nonendblock(&g, 3, &analysis).unwrap();
        assert_eq!(sol.vertices, vec![0]);
        assert_eq!(solve_brute_force(&g, 3).size(), 1);
    }

    #[test]
    fn avoidable_neighbor_forces_center() {
        // diamond block with one cut vertex carrying two pendants (d = 3):
        // the optimum is the cut vertex alone, not block-minus-one
        let g = graph(
            6,
            &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (0, 5)],
        );
        let analysis = is_d_block_graph(&g, 3).unwrap();
        assert!(analysis.is_d_block);
        let sol = solve_d_block(&g, 3).unwrap();
        assert_eq!(sol.size(), 1);
        assert_eq!(sol.size(), solve_brute_force(&g, 3).size());
    }

    #[test]
    fn two_claws_sharing_a_leaf() {
        // centers 1 and 2 share exactly the leaf 0; unique optimum is {0}
        let g = graph(7, &[(1, 0), (1, 3), (1, 4), (2, 0), (2, 5), (2, 6)]);
        let sol = solve_d_block(&g, 3).unwrap();
        assert_eq!(sol.vertices, vec![0]);
        assert!(sol.certified_optimal);
    }

    #[test]
    fn trees_below_degree_d_are_free() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(solve_d_block(&g, 3).unwrap().size(), 0);
    }

    #[test]
    fn deeper_trees_match_brute_force() {
        // spider with three legs of length 2 plus extra branches at d = 2
        let g = graph(
            10,
            &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6), (4, 7), (4, 8), (5, 9)],
        );
        for d in 2..4 {
            let sol = solve_d_block(&g, d).unwrap();
            assert_eq!(sol.size(), solve_brute_force(&g, d).size(), "d = {d}");
            assert!(verify_deletion_set(&g, &sol.vertices, d).unwrap().0);
        }
    }

    #[test]
    fn non_d_block_inputs_are_rejected() {
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]);
        assert!(matches!(solve_d_block(&g, 3), Err(SolveError::NotDBlockGraph { .. })));
    }
}

//! Undirected simple graphs with the structural primitives the solvers need:
//! components, bipartition, diameter, blocks and cut vertices.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint out of range: ({u}, {v}) with n = {n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {v} out of range (n = {n})")]
    VertexOutOfRange { v: usize, n: usize },
}

/// Undirected simple graph. Adjacency lists are kept sorted, so membership
/// tests are binary searches and all iteration orders are deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Out-of-range endpoints, self-loops
    /// and duplicate edges are rejected rather than silently merged; the
    /// gadget constructors never produce them, so strictness catches bugs.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut normalized = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for w in normalized.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &normalized {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, adj, m: normalized.len() })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// Edges as (u, v) pairs with u < v, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Returns the induced subgraph on the complement of `s`, together with
    /// the map from new vertex ids to old ones.
    pub fn delete_vertices(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        for &v in s {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        let mut deleted = vec![false; self.n];
        for &v in s {
            deleted[v] = true;
        }
        let mut new_id = vec![usize::MAX; self.n];
        let mut remap = Vec::new();
        for v in 0..self.n {
            if !deleted[v] {
                new_id[v] = remap.len();
                remap.push(v);
            }
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges() {
            if !deleted[u] && !deleted[v] {
                edges.push((new_id[u], new_id[v]));
            }
        }
        let g = Graph::from_edge_list(remap.len(), &edges).expect("induced subgraph is simple");
        Ok((g, remap))
    }

    /// Induced subgraph with the remap discarded; panics on out-of-range ids.
    pub fn induced_without(&self, s: &[usize]) -> Graph {
        self.delete_vertices(s).expect("vertex ids in range").0
    }

    /// Partition of the vertices into maximal connected sets, each sorted,
    /// ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Two-colors each component by BFS, the lowest-id vertex of a component
    /// going left. `valid` is false exactly when some edge joins equal sides,
    /// i.e. when an odd cycle exists.
    pub fn bipartition(&self) -> Bipartition {
        let mut side = vec![Side::Left; self.n];
        let mut seen = vec![false; self.n];
        let mut valid = true;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        side[v] = side[u].flip();
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        valid = false;
                    }
                }
            }
        }
        Bipartition { side, valid }
    }

    /// BFS distances from `start`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, start: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Maximum distance over vertex pairs; `Infinite` when disconnected and
    /// 0 for graphs with at most one vertex.
    pub fn diameter(&self) -> Diameter {
        if self.n <= 1 {
            return Diameter::Finite(0);
        }
        let mut best = 0;
        for v in 0..self.n {
            for d in self.bfs_distances(v) {
                if d == usize::MAX {
                    return Diameter::Infinite;
                }
                best = best.max(d);
            }
        }
        Diameter::Finite(best)
    }

    /// True iff all pairs of `s` are adjacent (vacuously true for |s| <= 1).
    pub fn is_clique(&self, s: &[usize]) -> Result<bool, GraphError> {
        for &v in s {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { v, n: self.n });
            }
        }
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                if s[i] == s[j] || !self.has_edge(s[i], s[j]) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Recognizes connected complete bipartite graphs with at least one edge.
    /// Returns the side containing vertex 0 first. Edgeless or disconnected
    /// inputs yield `None`.
    pub fn complete_bipartite_sides(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        if self.m == 0 || !self.is_connected() {
            return None;
        }
        let bip = self.bipartition();
        if !bip.valid {
            return None;
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for v in 0..self.n {
            match bip.side[v] {
                Side::Left => left.push(v),
                Side::Right => right.push(v),
            }
        }
        // bipartite and connected, so all edges go across; completeness is
        // then exactly the edge count
        if self.m == left.len() * right.len() {
            Some((left, right))
        } else {
            None
        }
    }

    /// Splits the vertex set into a clique and an independent set if
    /// possible, via the Hammer-Simeone degree criterion with the resulting
    /// partition verified directly.
    pub fn split_partition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
        let degs: Vec<usize> = order.iter().map(|&v| self.degree(v)).collect();
        let mut m = 0;
        for (j, &dj) in degs.iter().enumerate() {
            if dj >= j {
                m = j + 1;
            }
        }
        let top: usize = degs[..m].iter().sum();
        let rest: usize = degs[m..].iter().sum();
        if top != m * m.saturating_sub(1) + rest {
            return None;
        }
        let mut clique = order[..m].to_vec();
        clique.sort_unstable();
        let mut independent = order[m..].to_vec();
        independent.sort_unstable();
        let indep_ok = independent
            .iter()
            .enumerate()
            .all(|(i, &a)| independent[i + 1..].iter().all(|&b| !self.has_edge(a, b)));
        if self.is_clique(&clique).expect("in range") && indep_ok {
            Some((clique, independent))
        } else {
            None
        }
    }

    /// Block-cut tree: blocks are the maximal biconnected subgraphs (isolated
    /// vertices forming singleton blocks), ordered by smallest contained
    /// vertex. Works per component, so disconnected input yields a forest.
    pub fn block_cut_tree(&self) -> BlockCutTree {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut is_cut = vec![false; self.n];

        // iterative Tarjan with an explicit edge stack
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut next_child = vec![0usize; self.n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();

        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            if self.adj[root].is_empty() {
                disc[root] = timer;
                timer += 1;
                blocks.push(vec![root]);
                continue;
            }
            let mut root_children = 0usize;
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            let mut stack = vec![root];
            while let Some(&u) = stack.last() {
                if next_child[u] < self.adj[u].len() {
                    let v = self.adj[u][next_child[u]];
                    next_child[u] += 1;
                    if disc[v] == usize::MAX {
                        edge_stack.push((u, v));
                        parent[v] = u;
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push(v);
                    } else if v != parent[u] && disc[v] < disc[u] {
                        edge_stack.push((u, v));
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&p) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            // edges from (p, u) up form one block
                            if p == root {
                                root_children += 1;
                            } else {
                                is_cut[p] = true;
                            }
                            let mut members = Vec::new();
                            while let Some(&(a, b)) = edge_stack.last() {
                                edge_stack.pop();
                                members.push(a);
                                members.push(b);
                                if (a, b) == (p, u) {
                                    break;
                                }
                            }
                            members.sort_unstable();
                            members.dedup();
                            blocks.push(members);
                        }
                    }
                }
            }
            if root_children >= 2 {
                is_cut[root] = true;
            }
        }

        blocks.sort_by(|a, b| a[0].cmp(&b[0]).then_with(|| a.cmp(b)));

        let cut_vertices: Vec<usize> = (0..self.n).filter(|&v| is_cut[v]).collect();
        let mut tree_edges = Vec::new();
        for (bi, block) in blocks.iter().enumerate() {
            for &v in block {
                if is_cut[v] {
                    tree_edges.push((bi, v));
                }
            }
        }
        let vertex_roles = (0..self.n)
            .map(|v| if is_cut[v] { VertexRole::Cut } else { VertexRole::Endvertex })
            .collect();
        BlockCutTree { blocks, cut_vertices, tree_edges, vertex_roles }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<Side>,
    pub valid: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexRole {
    Endvertex,
    Cut,
}

/// Blocks, cut vertices and their incidence forest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCutTree {
    /// Vertex sets of the maximal biconnected subgraphs, sorted, ordered by
    /// smallest contained vertex.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    /// (block index, cut vertex) incidence pairs.
    pub tree_edges: Vec<(usize, usize)>,
    pub vertex_roles: Vec<VertexRole>,
}

impl BlockCutTree {
    pub fn is_cut(&self, v: usize) -> bool {
        self.vertex_roles[v] == VertexRole::Cut
    }

    /// Indices of the blocks containing each vertex.
    pub fn blocks_of_vertices(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (bi, block) in self.blocks.iter().enumerate() {
            for &v in block {
                out[v].push(bi);
            }
        }
        out
    }
}

//! Frozen adjacency tables for the hardness-reduction gadgets, plus the
//! per-clause deletion menus used when building solutions from nae
//! assignments.
//!
//! Each three-section gadget is rotation-symmetric: shifting every vertex by
//! one section size is a graph automorphism, which is how a menu stated for
//! one true/false pattern is permuted to the others. Every permuted menu is
//! still validated against `verify_deletion_set` by the test suite rather
//! than trusted.

use crate::graph::Graph;

/// A graph whose vertices carry role labels.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

// ---------------------------------------------------------------------------
// CVD variable gadget: a cycle on 6m vertices.
//
// Slot j (0-based) occupies ids 6j..6j+6 as v, v', w, x, y, z; consecutive
// slots are joined z -> v of the next slot, wrapping around.
// ---------------------------------------------------------------------------

pub mod cvd_variable {
    pub const SLOT: usize = 6;
    pub const V: usize = 0;
    pub const V_PRIME: usize = 1;
    pub const W: usize = 2;
    pub const X: usize = 3;
    pub const Y: usize = 4;
    pub const Z: usize = 5;

    pub fn size(m: usize) -> usize {
        SLOT * m
    }

    pub fn edges(m: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(6 * m);
        for j in 0..m {
            let b = SLOT * j;
            out.push((b + V, b + V_PRIME));
            out.push((b + V_PRIME, b + W));
            out.push((b + W, b + X));
            out.push((b + X, b + Y));
            out.push((b + Y, b + Z));
            out.push((b + Z, SLOT * ((j + 1) % m) + V));
        }
        out
    }

    pub fn labels(m: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(size(m));
        for j in 1..=m {
            for role in ["v", "v'", "w", "x", "y", "z"] {
                out.push(format!("{role}_{j}"));
            }
        }
        out
    }

    /// Local ids deleted for a true (v and x per slot) or false (v' and y
    /// per slot) variable.
    pub fn menu(m: usize, value: bool) -> Vec<usize> {
        (0..m)
            .flat_map(|j| {
                let b = SLOT * j;
                if value {
                    [b + V, b + X]
                } else {
                    [b + V_PRIME, b + Y]
                }
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// CVD clause gadget: 30 vertices in three sections of 10.
//
// Section k holds the clause vertex pair c, c' on an 8-cycle
//   c - q1 - q2 - x - x' - q3 - q4 - c' - c
// whose two adjacent degree-3 vertices are x and x'; bridges
//   x'(k) - r1(k) - r2(k) - x(k+1)
// close the central 12-cycle through all x and x' vertices.
// ---------------------------------------------------------------------------

pub mod cvd_clause {
    pub const SECTION: usize = 10;
    pub const SECTIONS: usize = 3;
    pub const C: usize = 0;
    pub const C_PRIME: usize = 1;
    pub const Q1: usize = 2;
    pub const Q2: usize = 3;
    pub const X: usize = 4;
    pub const X_PRIME: usize = 5;
    pub const Q3: usize = 6;
    pub const Q4: usize = 7;
    pub const R1: usize = 8;
    pub const R2: usize = 9;

    pub const SIZE: usize = SECTION * SECTIONS;

    pub fn vertex(section: usize, role: usize) -> usize {
        SECTION * section + role
    }

    pub fn edges() -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in 0..SECTIONS {
            let at = |role| vertex(k, role);
            out.push((at(C), at(Q1)));
            out.push((at(Q1), at(Q2)));
            out.push((at(Q2), at(X)));
            out.push((at(X), at(X_PRIME)));
            out.push((at(X_PRIME), at(Q3)));
            out.push((at(Q3), at(Q4)));
            out.push((at(Q4), at(C_PRIME)));
            out.push((at(C_PRIME), at(C)));
            out.push((at(X_PRIME), at(R1)));
            out.push((at(R1), at(R2)));
            out.push((at(R2), vertex((k + 1) % SECTIONS, X)));
        }
        out
    }

    pub fn labels() -> Vec<String> {
        let mut out = Vec::with_capacity(SIZE);
        for k in 1..=SECTIONS {
            for role in ["c", "c'", "q1", "q2", "x", "x'", "q3", "q4", "r1", "r2"] {
                if role == "c" || role == "c'" {
                    out.push(format!("{role}_{k}"));
                } else {
                    out.push(format!("c_{k}:{role}"));
                }
            }
        }
        out
    }

    fn rotate(set: &[usize], sections: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            set.iter().map(|&v| (v + sections * SECTION) % SIZE).collect();
        out.sort_unstable();
        out
    }

    // Menu for one true variable at section 0: deletes c' of the true
    // section, c of both false sections, and eight interior vertices.
    const ONE_TRUE_AT_0: [usize; 11] = [1, 3, 5, 10, 14, 16, 19, 20, 23, 26, 28];
    // Menu for true variables at sections 0 and 1 (false at 2).
    const TWO_TRUE_FALSE_AT_2: [usize; 11] = [1, 3, 6, 8, 11, 13, 15, 20, 24, 26, 29];

    /// The 11-vertex deletion menu for a nae pattern over the three clause
    /// positions (not all equal).
    pub fn menu(truth: [bool; 3]) -> Vec<usize> {
        let true_count = truth.iter().filter(|&&b| b).count();
        match true_count {
            1 => {
                let t = truth.iter().position(|&b| b).unwrap();
                rotate(&ONE_TRUE_AT_0, t)
            }
            2 => {
                let f = truth.iter().position(|&b| !b).unwrap();
                rotate(&TWO_TRUE_FALSE_AT_2, (f + 1) % 3)
            }
            _ => panic!("pattern is not nae"),
        }
    }
}

// ---------------------------------------------------------------------------
// Claw auxiliary graph H: 8 vertices v, a1, a2, a3, b1, b2, b3, v'.
//
// Its only optimal claw deletion sets have 2 vertices, and the unique one
// containing v is {v, b2}.
// ---------------------------------------------------------------------------

pub mod claw_h {
    pub const SIZE: usize = 8;
    pub const V: usize = 0;
    pub const A1: usize = 1;
    pub const A2: usize = 2;
    pub const A3: usize = 3;
    pub const B1: usize = 4;
    pub const B2: usize = 5;
    pub const B3: usize = 6;
    pub const V_PRIME: usize = 7;

    pub fn edges() -> Vec<(usize, usize)> {
        vec![
            (V, A1),
            (A1, A2),
            (A2, A3),
            (A3, B3),
            (B3, B2),
            (B2, B1),
            (B1, A1),
            (A2, B2),
            (B1, V_PRIME),
            (V_PRIME, B3),
        ]
    }

    pub fn labels() -> Vec<String> {
        ["v", "a1", "a2", "a3", "b1", "b2", "b3", "v'"]
            .into_iter()
            .map(str::to_string)
            .collect()
    }
}

// Claw variable gadget: m copies of H chained a3 -> v of the next copy,
// wrapping around.
pub mod claw_variable {
    use super::claw_h;

    pub const SLOT: usize = claw_h::SIZE;

    pub fn size(m: usize) -> usize {
        SLOT * m
    }

    pub fn edges(m: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for j in 0..m {
            let b = SLOT * j;
            out.extend(claw_h::edges().into_iter().map(|(u, v)| (b + u, b + v)));
            out.push((b + claw_h::A3, SLOT * ((j + 1) % m) + claw_h::V));
        }
        out
    }

    pub fn labels(m: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(size(m));
        for j in 1..=m {
            for role in ["v", "a1", "a2", "a3", "b1", "b2", "b3", "v'"] {
                out.push(format!("{role}_{j}"));
            }
        }
        out
    }

    /// Local ids deleted for a true (v and b2 per slot) or false (v' and a2
    /// per slot) variable.
    pub fn menu(m: usize, value: bool) -> Vec<usize> {
        (0..m)
            .flat_map(|j| {
                let b = SLOT * j;
                if value {
                    [b + claw_h::V, b + claw_h::B2]
                } else {
                    [b + claw_h::V_PRIME, b + claw_h::A2]
                }
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Claw auxiliary graph A: 11 vertices carrying two disjoint K_{2,3}, whose
// unique optimal claw deletion set is {x, z}.
// ---------------------------------------------------------------------------

pub mod claw_a {
    pub const SIZE: usize = 11;
    pub const C: usize = 0;
    pub const P1: usize = 1;
    pub const P2: usize = 2;
    pub const P3: usize = 3;
    pub const X: usize = 4;
    pub const Y: usize = 5;
    pub const Z: usize = 6;
    pub const Q1: usize = 7;
    pub const Q2: usize = 8;
    pub const Q3: usize = 9;
    pub const D: usize = 10;

    pub fn edges() -> Vec<(usize, usize)> {
        vec![
            (C, P1),
            (C, P3),
            (P1, P2),
            (P2, P3),
            (P1, X),
            (P3, X),
            (X, Y),
            (Y, Z),
            (Z, Q1),
            (Z, Q3),
            (Q1, Q2),
            (Q2, Q3),
            (Q1, D),
            (Q3, D),
        ]
    }

    pub fn labels() -> Vec<String> {
        ["c", "p1", "p2", "p3", "x", "y", "z", "q1", "q2", "q3", "d"]
            .into_iter()
            .map(str::to_string)
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Claw clause half-gadget H_j: three copies of A (sections of 11) plus the
// cross edges d(k) - y(k+1). The full clause gadget is two disjoint copies,
// one for the plain clause vertices and one for the primed ones.
// ---------------------------------------------------------------------------

pub mod claw_clause_half {
    use super::claw_a;

    pub const SECTION: usize = claw_a::SIZE;
    pub const SECTIONS: usize = 3;
    pub const SIZE: usize = SECTION * SECTIONS;

    pub fn vertex(section: usize, role: usize) -> usize {
        SECTION * section + role
    }

    pub fn edges() -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in 0..SECTIONS {
            let b = SECTION * k;
            out.extend(claw_a::edges().into_iter().map(|(u, v)| (b + u, b + v)));
            out.push((b + claw_a::D, vertex((k + 1) % SECTIONS, claw_a::Y)));
        }
        out
    }

    pub fn labels(prime: bool) -> Vec<String> {
        let mark = if prime { "'" } else { "" };
        let mut out = Vec::with_capacity(SIZE);
        for k in 1..=SECTIONS {
            for role in ["c", "p1", "p2", "p3", "x", "y", "z", "q1", "q2", "q3", "d"] {
                if role == "c" {
                    out.push(format!("c{mark}_{k}"));
                } else {
                    out.push(format!("c{mark}_{k}:{role}"));
                }
            }
        }
        out
    }

    fn rotate(set: &[usize], sections: usize) -> Vec<usize> {
        let mut out: Vec<usize> =
            set.iter().map(|&v| (v + sections * SECTION) % SIZE).collect();
        out.sort_unstable();
        out
    }

    // Optimal 8-set containing the clause vertex of section 0 only:
    // c, y, d of section 0; x, z of section 1; x, y, d of section 2.
    const SINGLE_AT_0: [usize; 8] = [0, 5, 10, 15, 17, 26, 27, 32];
    // Optimal 8-set containing the clause vertices of sections 1 and 2:
    // x, z of section 0; c, y, d of sections 1 and 2.
    const PAIR_SPARING_0: [usize; 8] = [4, 6, 11, 16, 21, 22, 27, 32];

    /// Optimal 8-set whose clause vertices are exactly the sections in
    /// `include` (a nonempty proper subset of the three).
    pub fn menu(include: [bool; 3]) -> Vec<usize> {
        let count = include.iter().filter(|&&b| b).count();
        match count {
            1 => {
                let t = include.iter().position(|&b| b).unwrap();
                rotate(&SINGLE_AT_0, t)
            }
            2 => {
                let spared = include.iter().position(|&b| !b).unwrap();
                rotate(&PAIR_SPARING_0, spared)
            }
            _ => panic!("menu requires a nonempty proper subset of clause vertices"),
        }
    }
}

pub fn build_cvd_variable_gadget(m: usize) -> Result<LabeledGraph, crate::reductions::ReductionError> {
    if m < 1 {
        return Err(crate::reductions::ReductionError::EmptyFormula);
    }
    let graph = Graph::from_edge_list(cvd_variable::size(m), &cvd_variable::edges(m))
        .expect("gadget table is simple");
    Ok(LabeledGraph { graph, labels: cvd_variable::labels(m) })
}

pub fn build_cvd_clause_gadget() -> LabeledGraph {
    let graph =
        Graph::from_edge_list(cvd_clause::SIZE, &cvd_clause::edges()).expect("gadget table is simple");
    LabeledGraph { graph, labels: cvd_clause::labels() }
}

pub fn build_claw_aux_hij() -> LabeledGraph {
    let graph =
        Graph::from_edge_list(claw_h::SIZE, &claw_h::edges()).expect("gadget table is simple");
    LabeledGraph { graph, labels: claw_h::labels() }
}

pub fn build_claw_aux_ajk() -> LabeledGraph {
    let graph =
        Graph::from_edge_list(claw_a::SIZE, &claw_a::edges()).expect("gadget table is simple");
    LabeledGraph { graph, labels: claw_a::labels() }
}

pub fn build_claw_aux_hj() -> LabeledGraph {
    let graph = Graph::from_edge_list(claw_clause_half::SIZE, &claw_clause_half::edges())
        .expect("gadget table is simple");
    LabeledGraph { graph, labels: claw_clause_half::labels(false) }
}

/// Builds a claw variable gadget (the chain of m auxiliary 8-vertex graphs).
pub fn build_claw_variable_gadget(m: usize) -> Result<LabeledGraph, crate::reductions::ReductionError> {
    if m < 1 {
        return Err(crate::reductions::ReductionError::EmptyFormula);
    }
    let graph = Graph::from_edge_list(claw_variable::size(m), &claw_variable::edges(m))
        .expect("gadget table is simple");
    Ok(LabeledGraph { graph, labels: claw_variable::labels(m) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claw::verify_deletion_set;
    use crate::solvers::{solve_fpt, solve_min_fpt};

    fn nae_patterns() -> Vec<[bool; 3]> {
        vec![
            [true, false, false],
            [false, true, false],
            [false, false, true],
            [true, true, false],
            [true, false, true],
            [false, true, true],
        ]
    }

    #[test]
    fn cvd_variable_gadget_shape() {
        let g = build_cvd_variable_gadget(1).unwrap().graph;
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert!(g.bipartition().valid);
        let g = build_cvd_variable_gadget(2).unwrap().graph;
        assert!(g.bipartition().valid);
        let g = build_cvd_variable_gadget(3).unwrap().graph;
        assert_eq!(g.vertex_count(), 18);
        assert!(g.vertices().all(|v| g.degree(v) == 2));
        assert!(build_cvd_variable_gadget(0).is_err());
    }

    #[test]
    fn cvd_variable_gadget_optimum_is_2m() {
        for m in 1..=3 {
            let g = build_cvd_variable_gadget(m).unwrap().graph;
            assert_eq!(solve_min_fpt(&g, 2).size(), 2 * m, "m = {m}");
            for value in [true, false] {
                let menu = cvd_variable::menu(m, value);
                assert_eq!(menu.len(), 2 * m);
                assert!(verify_deletion_set(&g, &menu, 2).unwrap().0);
            }
        }
    }

    #[test]
    fn cvd_clause_gadget_shape() {
        let lg = build_cvd_clause_gadget();
        assert_eq!(lg.graph.vertex_count(), 30);
        assert!(lg.graph.bipartition().valid);
        // clause vertices have degree 2 inside the gadget, everything else
        // degree 2 or 3, and the twelve ring vertices degree 3
        assert!(lg.graph.max_degree() == 3);
    }

    #[test]
    fn cvd_clause_gadget_optimum_is_11() {
        let g = build_cvd_clause_gadget().graph;
        assert_eq!(solve_min_fpt(&g, 2).size(), 11);
        assert!(solve_fpt(&g, 2, 10).is_none());
        for pattern in nae_patterns() {
            let menu = cvd_clause::menu(pattern);
            assert_eq!(menu.len(), 11);
            assert!(
                verify_deletion_set(&g, &menu, 2).unwrap().0,
                "pattern {pattern:?}"
            );
        }
    }

    #[test]
    fn cvd_clause_gadget_never_deletes_all_three_clause_vertices() {
        let g = build_cvd_clause_gadget().graph;
        for role in [cvd_clause::C, cvd_clause::C_PRIME] {
            let all_three: Vec<usize> = (0..3).map(|k| cvd_clause::vertex(k, role)).collect();
            let (rest, _) = g.delete_vertices(&all_three).unwrap();
            // an 11-set containing the three would leave an 8-set here
            assert!(solve_fpt(&rest, 2, 8).is_none());
        }
    }

    #[test]
    fn claw_h_optima() {
        let g = build_claw_aux_hij().graph;
        assert_eq!(g.edge_count(), 10);
        assert_eq!(solve_min_fpt(&g, 3).size(), 2);
        assert_eq!(crate::solvers::solve_brute_force(&g, 3).size(), 2);
        // enumerate all 2-subsets: the only ones through v include b2
        let mut with_v = Vec::new();
        for a in 0..8 {
            for b in a + 1..8 {
                if verify_deletion_set(&g, &[a, b], 3).unwrap().0 && (a == claw_h::V || b == claw_h::V)
                {
                    with_v.push((a, b));
                }
            }
        }
        assert_eq!(with_v, vec![(claw_h::V, claw_h::B2)]);
    }

    #[test]
    fn claw_a_unique_optimum() {
        let g = build_claw_aux_ajk().graph;
        assert_eq!(g.vertex_count(), 11);
        let mut optima = Vec::new();
        for a in 0..11 {
            for b in a + 1..11 {
                if verify_deletion_set(&g, &[a, b], 3).unwrap().0 {
                    optima.push((a, b));
                }
            }
        }
        assert_eq!(optima, vec![(claw_a::X, claw_a::Z)]);
        assert!(solve_fpt(&g, 3, 1).is_none());
    }

    #[test]
    fn claw_half_gadget_optimum_is_8() {
        let g = build_claw_aux_hj().graph;
        assert_eq!(g.vertex_count(), 33);
        assert!(solve_fpt(&g, 3, 7).is_none());
        assert_eq!(solve_fpt(&g, 3, 8).map(|s| s.size()), Some(8));
        for include in nae_patterns() {
            let menu = claw_clause_half::menu(include);
            assert_eq!(menu.len(), 8);
            assert!(
                verify_deletion_set(&g, &menu, 3).unwrap().0,
                "include {include:?}"
            );
            // the menu's clause vertices are exactly the included sections
            for (k, &included) in include.iter().enumerate() {
                let c = claw_clause_half::vertex(k, claw_a::C);
                assert_eq!(menu.contains(&c), included);
            }
        }
    }

    #[test]
    fn claw_half_gadget_excludes_all_three_and_clause_neighbors() {
        let g = build_claw_aux_hj().graph;
        let all_three: Vec<usize> =
            (0..3).map(|k| claw_clause_half::vertex(k, claw_a::C)).collect();
        let (rest, _) = g.delete_vertices(&all_three).unwrap();
        assert!(solve_fpt(&rest, 3, 5).is_none());
        // no optimal 8-set contains a neighbor of a clause vertex
        for k in 0..3 {
            let c = claw_clause_half::vertex(k, claw_a::C);
            for &w in g.neighbors(c) {
                let (rest, _) = g.delete_vertices(&[w]).unwrap();
                assert!(solve_fpt(&rest, 3, 7).is_none(), "neighbor {w} of section {k}");
            }
        }
    }

    #[test]
    fn claw_variable_gadget_optimum_is_2m() {
        for m in 1..=3 {
            let g = build_claw_variable_gadget(m).unwrap().graph;
            assert_eq!(g.vertex_count(), 8 * m);
            assert!(g.bipartition().valid);
            assert!(g.max_degree() <= 3);
            assert_eq!(solve_min_fpt(&g, 3).size(), 2 * m, "m = {m}");
            for value in [true, false] {
                let menu = claw_variable::menu(m, value);
                assert_eq!(menu.len(), 2 * m);
                assert!(verify_deletion_set(&g, &menu, 3).unwrap().0);
            }
        }
    }
}

//! The acceptance suites: executable checks for the gadget optima, budget
//! identities, equality transfers, d-block optimality, solver agreement and
//! structural assertions. Shared by the `acceptance` integration test target
//! and the `suite` CLI command.

use crate::claw::verify_deletion_set;
use crate::gadgets::{self, claw_clause_half, cvd_clause};
use crate::generators;
use crate::graph::{Diameter, Graph};
use crate::reductions::{self, Hypergraph, NaeFormula, SplitDirection};
use crate::solvers::{greedy_approx, solve_brute_force, solve_complete_bipartite, solve_fpt, solve_min_fpt};

#[derive(Debug, Clone)]
pub struct SuiteItem {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub items: Vec<SuiteItem>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.pass)
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "gadget-optima",
    "budget-identities",
    "equality-transfers",
    "dblock-optimality",
    "solver-agreement",
    "structural-assertions",
    "conclusions-substituted",
];

pub fn run_suite(name: &str) -> Option<SuiteReport> {
    match name {
        "gadget-optima" => Some(gadget_optima()),
        "budget-identities" => Some(budget_identities()),
        "equality-transfers" => Some(equality_transfers()),
        "dblock-optimality" => Some(dblock_optimality()),
        "solver-agreement" => Some(solver_agreement()),
        "structural-assertions" => Some(structural_assertions()),
        "conclusions-substituted" => Some(conclusions_substituted()),
        _ => None,
    }
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITE_NAMES.iter().map(|n| run_suite(n).expect("known suite")).collect()
}

fn item(items: &mut Vec<SuiteItem>, name: &str, pass: bool, detail: String) {
    items.push(SuiteItem { name: name.to_string(), pass, detail });
}

// Exact optimum split over connected components; deletion sets decompose
// because every claw lives inside one component.
fn exact_by_components(g: &Graph, d: usize) -> usize {
    let mut total = 0;
    for comp in g.connected_components() {
        let removed: Vec<usize> = g.vertices().filter(|v| !comp.contains(v)).collect();
        let sub = g.induced_without(&removed);
        total += solve_min_fpt(&sub, d).size();
    }
    total
}

fn vc_optimum(g: &Graph) -> usize {
    if g.edge_count() == 0 {
        return 0;
    }
    let h = Hypergraph::new(
        g.vertex_count(),
        2,
        g.edges().iter().map(|&(u, v)| vec![u, v]).collect(),
    )
    .expect("graph edges form a 2-uniform hypergraph");
    reductions::hvc_oracle(&h).len()
}

fn connected_corpus(count: usize, max_n: usize, seed0: u64) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seed = seed0;
    while out.len() < count {
        let n = 3 + (seed as usize) % (max_n - 2);
        let p = [0.25, 0.4, 0.6][(seed as usize / 7) % 3];
        let g = generators::gnp(n, p, seed);
        seed += 1;
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Criterion 1: gadget optima, tolerance 0.
// ---------------------------------------------------------------------------

fn gadget_optima() -> SuiteReport {
    let mut items = Vec::new();

    for m in 1..=3usize {
        let g = gadgets::build_cvd_variable_gadget(m).unwrap().graph;
        let opt = solve_min_fpt(&g, 2).size();
        item(
            &mut items,
            &format!("cvd-variable-gadget-opt-m{m}"),
            opt == 2 * m,
            format!("opt = {opt}, expected {}", 2 * m),
        );
    }

    let clause = gadgets::build_cvd_clause_gadget().graph;
    let no_10 = solve_fpt(&clause, 2, 10).is_none();
    let menu = cvd_clause::menu([true, false, false]);
    let menu_ok = verify_deletion_set(&clause, &menu, 2).unwrap().0 && menu.len() == 11;
    item(
        &mut items,
        "cvd-clause-gadget-opt-11",
        no_10 && menu_ok,
        format!("10 infeasible: {no_10}, 11-set valid: {menu_ok}"),
    );

    let hij = gadgets::build_claw_aux_hij().graph;
    let opt = solve_min_fpt(&hij, 3).size();
    let mut v_optima = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            if (a == gadgets::claw_h::V || b == gadgets::claw_h::V)
                && verify_deletion_set(&hij, &[a, b], 3).unwrap().0
            {
                v_optima.push((a, b));
            }
        }
    }
    item(
        &mut items,
        "claw-aux-h-opt-2-unique-through-v",
        opt == 2 && v_optima == vec![(gadgets::claw_h::V, gadgets::claw_h::B2)],
        format!("opt = {opt}, sets through v: {v_optima:?}"),
    );

    let ajk = gadgets::build_claw_aux_ajk().graph;
    let mut optima = Vec::new();
    for a in 0..11 {
        for b in a + 1..11 {
            if verify_deletion_set(&ajk, &[a, b], 3).unwrap().0 {
                optima.push((a, b));
            }
        }
    }
    let singletons_fail = solve_fpt(&ajk, 3, 1).is_none();
    item(
        &mut items,
        "claw-aux-a-opt-2-unique",
        singletons_fail && optima == vec![(gadgets::claw_a::X, gadgets::claw_a::Z)],
        format!("unique optimum {{x, z}}: {optima:?}"),
    );

    let hj = gadgets::build_claw_aux_hj().graph;
    let no_7 = solve_fpt(&hj, 3, 7).is_none();
    let mut menus_ok = true;
    for include in [
        [true, false, false],
        [false, true, false],
        [false, false, true],
        [true, true, false],
        [true, false, true],
        [false, true, true],
    ] {
        let menu = claw_clause_half::menu(include);
        let valid = verify_deletion_set(&hj, &menu, 3).unwrap().0;
        let carries: Vec<bool> = (0..3)
            .map(|k| menu.contains(&claw_clause_half::vertex(k, gadgets::claw_a::C)))
            .collect();
        menus_ok &= valid && carries == include.to_vec() && menu.len() == 8;
    }
    let all_three: Vec<usize> =
        (0..3).map(|k| claw_clause_half::vertex(k, gadgets::claw_a::C)).collect();
    let no_all_three = solve_fpt(&hj.induced_without(&all_three), 3, 5).is_none();
    item(
        &mut items,
        "claw-aux-hj-opt-8-with-menus",
        no_7 && menus_ok && no_all_three,
        format!("7 infeasible: {no_7}, menus valid: {menus_ok}, all-three excluded: {no_all_three}"),
    );

    // the clause gadget is two disjoint halves, so its optimum is the sum
    let f = NaeFormula::new(3, vec![[1, 2, 3]]).unwrap();
    let art = reductions::reduce_nae3sat_to_clawvd(&f).unwrap();
    let plain_base = 3 * 8;
    let halves: Vec<usize> = (plain_base..plain_base + 66).collect();
    let removed: Vec<usize> = art.graph.vertices().filter(|v| !halves.contains(v)).collect();
    let clause_graph = art.graph.induced_without(&removed);
    let opt = exact_by_components(&clause_graph, 3);
    item(
        &mut items,
        "claw-clause-gadget-opt-16",
        opt == 16,
        format!("opt = {opt}, expected 16"),
    );

    SuiteReport { suite: "gadget-optima".into(), items }
}

// ---------------------------------------------------------------------------
// Criterion 2: budget identities on nae-satisfiable formulas.
// ---------------------------------------------------------------------------

fn budget_identities() -> SuiteReport {
    let mut items = Vec::new();
    let mut formulas = Vec::new();
    let mut seed = 100u64;
    while formulas.len() < 25 {
        let n = 3 + (seed as usize) % 2;
        let m = 1 + (seed as usize) % 2;
        let f = generators::nae_formula(n, m, seed);
        seed += 1;
        if reductions::nae_oracle(&f).is_some() {
            formulas.push(f);
        }
    }
    let mut cvd_ok = 0;
    let mut claw_ok = 0;
    for f in &formulas {
        let assignment = reductions::nae_oracle(f).unwrap();
        let (n, m) = (f.n, f.clause_count());

        let art = reductions::reduce_nae3sat_to_cvd(f).unwrap();
        let sol = reductions::solution_from_nae_assignment(&art, &assignment).unwrap();
        if sol.len() == 2 * m * n + 11 * m && verify_deletion_set(&art.graph, &sol, 2).unwrap().0 {
            cvd_ok += 1;
        }

        let art = reductions::reduce_nae3sat_to_clawvd(f).unwrap();
        let sol = reductions::solution_from_nae_assignment(&art, &assignment).unwrap();
        if sol.len() == 2 * m * n + 16 * m && verify_deletion_set(&art.graph, &sol, 3).unwrap().0 {
            claw_ok += 1;
        }
    }
    item(
        &mut items,
        "cvd-budget-2mn+11m",
        cvd_ok == 25,
        format!("{cvd_ok}/25 formulas produce exact-budget valid sets"),
    );
    item(
        &mut items,
        "claw-budget-2mn+16m",
        claw_ok == 25,
        format!("{claw_ok}/25 formulas produce exact-budget valid sets"),
    );
    SuiteReport { suite: "budget-identities".into(), items }
}

// ---------------------------------------------------------------------------
// Criterion 3: equality transfers against the brute-force oracle.
// ---------------------------------------------------------------------------

fn equality_transfers() -> SuiteReport {
    let mut items = Vec::new();

    let corpus = connected_corpus(300, 7, 2000);
    let mut leaves_ok = 0;
    for g in &corpus {
        let vc = vc_optimum(g);
        let both = [2, 3].iter().all(|&d| {
            let art = reductions::attach_leaves(g, d, None).unwrap();
            solve_brute_force(&art.graph, d).size() == vc
        });
        if both {
            leaves_ok += 1;
        }
    }
    item(
        &mut items,
        "attach-leaves-vc-equality",
        leaves_ok == corpus.len(),
        format!("{leaves_ok}/{} connected graphs agree for d in {{2, 3}}", corpus.len()),
    );

    let mut wrap2_ok = 0;
    let mut wrap2_total = 0;
    let mut wrap3_ok = 0;
    let mut wrap3_total = 0;
    for seed in 0..200u64 {
        let n = 3 + (seed as usize) % 4; // up to 6
        let g = generators::gnp(n, 0.4, 3000 + seed);
        for d in [2, 3] {
            wrap2_total += 1;
            let base = solve_brute_force(&g, d).size();
            let art = reductions::wrap_diameter2(&g, d, None).unwrap();
            if solve_brute_force(&art.graph, d).size() == base + 1
                && art.graph.diameter() == Diameter::Finite(2)
            {
                wrap2_ok += 1;
            }
        }
        if g.bipartition().valid {
            for d in [2, 3] {
                wrap3_total += 1;
                let base = solve_brute_force(&g, d).size();
                let art = reductions::wrap_diameter3_bipartite(&g, d, None).unwrap();
                if solve_brute_force(&art.graph, d).size() == base + 2 {
                    wrap3_ok += 1;
                }
            }
        }
    }
    item(
        &mut items,
        "diameter2-wrapper-shift",
        wrap2_ok == wrap2_total,
        format!("{wrap2_ok}/{wrap2_total} instances shift the optimum by +1 at diameter 2"),
    );
    item(
        &mut items,
        "diameter3-wrapper-shift",
        wrap3_ok == wrap3_total && wrap3_total > 0,
        format!("{wrap3_ok}/{wrap3_total} bipartite instances shift the optimum by +2"),
    );

    let mut split_ok = 0;
    let mut split_seen = 0;
    let mut seed = 4000u64;
    while split_seen < 50 {
        let n = 4 + (seed as usize) % 5; // up to 8
        let m = 2 + (seed as usize) % 3; // up to 4
        let h = generators::uniform_hypergraph(n, m, 2, seed);
        seed += 1;
        let Ok(art) = reductions::reduce_hvc_to_split(&h, None) else {
            continue;
        };
        split_seen += 1;
        let cover = reductions::hvc_oracle(&h);
        let opt = solve_brute_force(&art.graph, art.d).size();
        let fwd = reductions::solution_maps_split(&art, SplitDirection::VcToClaw, &cover).unwrap();
        if opt == cover.len() && verify_deletion_set(&art.graph, &fwd, art.d).unwrap().0 {
            split_ok += 1;
        }
    }
    item(
        &mut items,
        "hvc-split-equality",
        split_ok == 50,
        format!("{split_ok}/50 hypergraphs agree with the cover optimum"),
    );

    let small = connected_corpus(60, 7, 5000);
    let mut extend_ok = 0;
    let mut extend_total = 0;
    for g in &small {
        let base = solve_brute_force(g, 3).size();
        for d in [4, 5] {
            extend_total += 1;
            let art = reductions::extend_claw_to_dclaw(g, d, None).unwrap();
            if solve_brute_force(&art.graph, d).size() == base {
                extend_ok += 1;
            }
        }
    }
    item(
        &mut items,
        "claw-extension-equality",
        extend_ok == extend_total,
        format!("{extend_ok}/{extend_total} instances preserve the optimum for d in {{4, 5}}"),
    );

    SuiteReport { suite: "equality-transfers".into(), items }
}

// ---------------------------------------------------------------------------
// Criterion 4: d-block solver optimality.
// ---------------------------------------------------------------------------

fn dblock_optimality() -> SuiteReport {
    let mut items = Vec::new();
    let mut agree = 0;
    let mut no_endvertex = 0;
    let total = 200;
    for idx in 0..total {
        let d = 2 + idx % 2;
        let n = 8 + (idx * 7) % 7; // 8..14
        let g = generators::d_block_graph(d, n, 6000 + idx as u64);
        let sol = crate::dblock::solve_d_block(&g, d).expect("generator output is d-block");
        if sol.size() == solve_brute_force(&g, d).size() {
            agree += 1;
        }
        let tree = g.block_cut_tree();
        if sol.vertices.iter().all(|&v| tree.is_cut(v)) {
            no_endvertex += 1;
        }
    }
    item(
        &mut items,
        "dblock-matches-brute-force",
        agree == total,
        format!("{agree}/{total} seeded d-block graphs match the oracle optimum"),
    );
    item(
        &mut items,
        "dblock-avoids-endvertices",
        no_endvertex == total,
        format!("{no_endvertex}/{total} solutions contain no endvertex"),
    );
    SuiteReport { suite: "dblock-optimality".into(), items }
}

// ---------------------------------------------------------------------------
// Criterion 5: solver cross-agreement.
// ---------------------------------------------------------------------------

fn solver_agreement() -> SuiteReport {
    let mut items = Vec::new();
    let mut fpt_agree = 0;
    let mut greedy_ok = 0;
    let total = 500;
    for idx in 0..total {
        let d = 2 + idx % 2;
        let n = 4 + (idx * 3) % 8; // 4..11
        let p = [0.2, 0.35, 0.5][idx % 3];
        let g = generators::gnp(n, p, 7000 + idx as u64);
        let opt = solve_brute_force(&g, d).size();
        if solve_min_fpt(&g, d).size() == opt {
            fpt_agree += 1;
        }
        let greedy = greedy_approx(&g, d);
        if verify_deletion_set(&g, &greedy.vertices, d).unwrap().0 && greedy.size() <= (d + 1) * opt
        {
            greedy_ok += 1;
        }
    }
    item(
        &mut items,
        "min-fpt-agrees-with-brute-force",
        fpt_agree == total,
        format!("{fpt_agree}/{total} random graphs agree"),
    );
    item(
        &mut items,
        "greedy-valid-within-factor",
        greedy_ok == total,
        format!("{greedy_ok}/{total} greedy runs valid and within (d+1) of the optimum"),
    );

    let mut cb_agree = 0;
    let mut cb_total = 0;
    for a in 1..=6usize {
        for b in a..=6usize {
            let g = match generators::gen(&generators::GenSpec {
                model: generators::GenModel::CompleteBipartite { a, b },
                seed: 0,
            })
            .unwrap()
            {
                generators::Instance::Graph(g) => g,
                _ => unreachable!(),
            };
            for d in 2..=4usize {
                cb_total += 1;
                let closed = solve_complete_bipartite(&g, d).unwrap();
                let brute = solve_brute_force(&g, d);
                if closed.size() == brute.size()
                    && verify_deletion_set(&g, &closed.vertices, d).unwrap().0
                {
                    cb_agree += 1;
                }
            }
        }
    }
    item(
        &mut items,
        "complete-bipartite-closed-form",
        cb_agree == cb_total,
        format!("{cb_agree}/{cb_total} K_{{a,b}} instances agree with brute force"),
    );
    SuiteReport { suite: "solver-agreement".into(), items }
}

// ---------------------------------------------------------------------------
// Criterion 6: structural assertions.
// ---------------------------------------------------------------------------

fn structural_assertions() -> SuiteReport {
    let mut items = Vec::new();

    let mut nae_ok = 0;
    for seed in 0..50u64 {
        let f = generators::nae_formula(3 + (seed as usize) % 3, 1 + (seed as usize) % 3, 8000 + seed);
        let cvd = reductions::reduce_nae3sat_to_cvd(&f).unwrap();
        let claw = reductions::reduce_nae3sat_to_clawvd(&f).unwrap();
        let good = |g: &Graph| g.bipartition().valid && g.max_degree() == 3;
        if good(&cvd.graph) && good(&claw.graph) {
            nae_ok += 1;
        }
    }
    item(
        &mut items,
        "nae-outputs-bipartite-subcubic",
        nae_ok == 50,
        format!("{nae_ok}/50 formulas give bipartite max-degree-3 outputs"),
    );

    let mut split_ok = 0;
    let mut split_seen = 0;
    let mut seed = 9000u64;
    while split_seen < 20 {
        let r = 2 + (seed as usize) % 2;
        let n = (2 * r) + (seed as usize) % 3;
        let h = generators::uniform_hypergraph(n, 2 + (seed as usize) % 2, r, seed);
        seed += 1;
        let Ok(art) = reductions::reduce_hvc_to_split(&h, None) else {
            continue;
        };
        split_seen += 1;
        let n_expected = h.n * h.edges.len() + h.n;
        if art.graph.vertex_count() == n_expected
            && crate::claw::is_d_claw_free(&art.graph, art.d + 1)
            && art.graph.split_partition().is_some()
        {
            split_ok += 1;
        }
    }
    item(
        &mut items,
        "split-outputs-no-higher-claw",
        split_ok == 20,
        format!("{split_ok}/20 split outputs have nm+n vertices and no (d+1)-claw"),
    );

    let mut diam_ok = 0;
    for seed in 0..20u64 {
        let g = generators::gnp(3 + (seed as usize) % 4, 0.4, 9500 + seed);
        let w2 = reductions::wrap_diameter2(&g, 2, None).unwrap();
        let ok2 = w2.graph.diameter() == Diameter::Finite(2);
        let ok3 = if g.bipartition().valid {
            let w3 = reductions::wrap_diameter3_bipartite(&g, 2, None).unwrap();
            w3.graph.diameter() == Diameter::Finite(3) && w3.graph.bipartition().valid
        } else {
            true
        };
        if ok2 && ok3 {
            diam_ok += 1;
        }
    }
    item(
        &mut items,
        "wrapper-diameters",
        diam_ok == 20,
        format!("{diam_ok}/20 wrapped outputs have diameters 2 and 3"),
    );

    SuiteReport { suite: "structural-assertions".into(), items }
}

// ---------------------------------------------------------------------------
// Criterion 7: conclusions out of scope, substituted by the gadget facts.
// ---------------------------------------------------------------------------

fn conclusions_substituted() -> SuiteReport {
    // the complexity conclusions themselves and the converse direction on
    // unsatisfiable formulas are not desk-scale reproducible; the gadget
    // facts of criterion 1 are their executable substitute, so this suite
    // passes exactly when those do
    let sub = gadget_optima();
    let pass = sub.passed();
    let fano_unsat = reductions::nae_oracle(
        &NaeFormula::new(
            7,
            vec![
                [1, 2, 3],
                [1, 4, 5],
                [1, 6, 7],
                [2, 4, 6],
                [2, 5, 7],
                [3, 4, 7],
                [3, 5, 6],
            ],
        )
        .unwrap(),
    )
    .is_none();
    SuiteReport {
        suite: "conclusions-substituted".into(),
        items: vec![SuiteItem {
            name: "gadget-facts-substitute-conclusions".into(),
            pass: pass && fano_unsat,
            detail: format!(
                "gadget facts pass: {pass}; smallest known unsatisfiable family (Fano) \
                 confirmed unsatisfiable: {fano_unsat}; its reduction exceeds desk scale"
            ),
        }],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_resolve() {
        for name in SUITE_NAMES {
            assert!(run_suite(name).is_some());
        }
        assert!(run_suite("no-such-suite").is_none());
    }
}

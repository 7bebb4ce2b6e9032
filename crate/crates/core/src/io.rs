//! Text formats: edge lists, nae formulas, hypergraphs, vertex sets and the
//! reduction artifact sidecar.
//!
//! Edge-list format: optional `#` comment lines, a header `n m`, then
//! exactly m lines `u v` of 0-based endpoints. Writers emit edges with
//! u < v in lexicographic order, so output is byte-stable.

use crate::graph::{Graph, GraphError};
use crate::reductions::{Hypergraph, NaeFormula, ReductionArtifact, ReductionError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("missing or malformed header on line {line}")]
    BadHeader { line: usize },
    #[error("malformed value on line {line}")]
    BadToken { line: usize },
    #[error("expected {expected} entries, found {got}")]
    WrongCount { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Reduction(#[from] ReductionError),
}

fn content_lines(input: &str) -> impl Iterator<Item = (usize, &str)> {
    input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_fields(line: &str, lineno: usize, expected: usize) -> Result<Vec<usize>, ParseError> {
    let vals: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
    match vals {
        Ok(v) if v.len() == expected => Ok(v),
        _ => Err(ParseError::BadToken { line: lineno }),
    }
}

pub fn parse_edge_list(input: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(input);
    let (lineno, header) = lines.next().ok_or(ParseError::BadHeader { line: 1 })?;
    let head = parse_fields(header, lineno, 2).map_err(|_| ParseError::BadHeader { line: lineno })?;
    let (n, m) = (head[0], head[1]);
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let f = parse_fields(line, lineno, 2)?;
        edges.push((f[0], f[1]));
    }
    if edges.len() != m {
        return Err(ParseError::WrongCount { expected: m, got: edges.len() });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Formula format: header `n m`, then m lines of three distinct 1-based
/// variable indices.
pub fn parse_nae_formula(input: &str) -> Result<NaeFormula, ParseError> {
    let mut lines = content_lines(input);
    let (lineno, header) = lines.next().ok_or(ParseError::BadHeader { line: 1 })?;
    let head = parse_fields(header, lineno, 2).map_err(|_| ParseError::BadHeader { line: lineno })?;
    let (n, m) = (head[0], head[1]);
    let mut clauses = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let f = parse_fields(line, lineno, 3)?;
        clauses.push([f[0], f[1], f[2]]);
    }
    if clauses.len() != m {
        return Err(ParseError::WrongCount { expected: m, got: clauses.len() });
    }
    Ok(NaeFormula::new(n, clauses)?)
}

pub fn format_nae_formula(f: &NaeFormula) -> String {
    let mut out = format!("{} {}\n", f.n, f.clause_count());
    for c in &f.clauses {
        out.push_str(&format!("{} {} {}\n", c[0], c[1], c[2]));
    }
    out
}

/// Hypergraph format: header `n m r`, then m lines of r distinct 0-based
/// vertex ids.
pub fn parse_hypergraph(input: &str) -> Result<Hypergraph, ParseError> {
    let mut lines = content_lines(input);
    let (lineno, header) = lines.next().ok_or(ParseError::BadHeader { line: 1 })?;
    let head = parse_fields(header, lineno, 3).map_err(|_| ParseError::BadHeader { line: lineno })?;
    let (n, m, r) = (head[0], head[1], head[2]);
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        edges.push(parse_fields(line, lineno, r)?);
    }
    if edges.len() != m {
        return Err(ParseError::WrongCount { expected: m, got: edges.len() });
    }
    Ok(Hypergraph::new(n, r, edges)?)
}

pub fn format_hypergraph(h: &Hypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.n, h.edges.len(), h.r);
    for e in &h.edges {
        let words: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

/// Vertex sets: whitespace-separated ids, `#` comments allowed.
pub fn parse_vertex_set(input: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in content_lines(input) {
        for tok in line.split_whitespace() {
            out.push(tok.parse().map_err(|_| ParseError::BadToken { line: lineno })?);
        }
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn format_vertex_set(s: &[usize]) -> String {
    let words: Vec<String> = s.iter().map(usize::to_string).collect();
    let mut out = words.join(" ");
    out.push('\n');
    out
}

/// The sidecar record written next to a reduction's edge list.
#[derive(Debug, serde::Serialize, serde::Deserialize)]
pub struct ArtifactSidecar {
    pub d: usize,
    pub budget_k: Option<usize>,
    pub vertex_labels: Vec<String>,
    pub source_map: std::collections::BTreeMap<String, usize>,
    pub source: crate::reductions::SourceInstance,
}

impl From<&ReductionArtifact> for ArtifactSidecar {
    fn from(a: &ReductionArtifact) -> ArtifactSidecar {
        ArtifactSidecar {
            d: a.d,
            budget_k: a.budget_k,
            vertex_labels: a.vertex_labels.clone(),
            source_map: a.source_map.clone(),
            source: a.source.clone(),
        }
    }
}

pub fn format_artifact_sidecar(a: &ReductionArtifact) -> String {
    serde_json::to_string_pretty(&ArtifactSidecar::from(a)).expect("sidecar serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "# a comment\n4 3\n0 1\n1 2\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(format_edge_list(&g), "4 3\n0 1\n1 2\n2 3\n");
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(ParseError::BadHeader { .. })));
        assert!(matches!(parse_edge_list("3\n"), Err(ParseError::BadHeader { .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(ParseError::WrongCount { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(ParseError::BadToken { .. })));
        assert!(matches!(parse_edge_list("3 1\n1 1\n"), Err(ParseError::Graph(_))));
    }

    #[test]
    fn writer_normalizes_edge_order() {
        let g = Graph::from_edge_list(3, &[(2, 1), (1, 0)]).unwrap();
        assert_eq!(format_edge_list(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn formula_round_trip() {
        let f = parse_nae_formula("3 2\n1 2 3\n2 3 1\n").unwrap();
        assert_eq!(f.clause_count(), 2);
        assert_eq!(format_nae_formula(&f), "3 2\n1 2 3\n2 3 1\n");
        assert!(parse_nae_formula("3 1\n1 1 2\n").is_err());
    }

    #[test]
    fn hypergraph_round_trip() {
        let h = parse_hypergraph("4 2 2\n0 1\n2 3\n").unwrap();
        assert_eq!(h.r, 2);
        assert_eq!(format_hypergraph(&h), "4 2 2\n0 1\n2 3\n");
    }

    #[test]
    fn vertex_sets() {
        assert_eq!(parse_vertex_set("# s\n3 1\n2\n").unwrap(), vec![1, 2, 3]);
        assert_eq!(format_vertex_set(&[1, 2, 3]), "1 2 3\n");
        assert_eq!(parse_vertex_set("").unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn sidecar_serializes() {
        let f = crate::reductions::NaeFormula::new(3, vec![[1, 2, 3]]).unwrap();
        let art = crate::reductions::reduce_nae3sat_to_cvd(&f).unwrap();
        let json = format_artifact_sidecar(&art);
        let back: ArtifactSidecar = serde_json::from_str(&json).unwrap();
        assert_eq!(back.budget_k, Some(17));
        assert_eq!(back.vertex_labels.len(), art.graph.vertex_count());
    }
}

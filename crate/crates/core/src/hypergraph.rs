//! Hypergraphs on the vertex set `{1, ..., k}`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A hypergraph with vertices `1..=k` and an ordered list of hyperedges.
///
/// Each edge is stored as a sorted, duplicate-free list of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Build a hypergraph, checking ids are in range and edges are nonempty.
    ///
    /// Duplicate ids inside one edge are rejected; edge order is preserved.
    pub fn new(k: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidHypergraph("vertex count must be positive".into()));
        }
        if edges.is_empty() {
            return Err(Error::InvalidHypergraph("at least one edge is required".into()));
        }
        let mut normalized = Vec::with_capacity(edges.len());
        for (i, edge) in edges.into_iter().enumerate() {
            normalized.push(normalize_edge(k, edge).map_err(|m| {
                Error::InvalidHypergraph(format!("edge {}: {m}", i + 1))
            })?);
        }
        Ok(Self { k, edges: normalized })
    }

    pub fn num_vertices(&self) -> usize {
        self.k
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of edges containing vertex `v` (1-based).
    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    /// Vertices not contained in any edge.
    pub fn uncovered(&self) -> Vec<usize> {
        let covered: BTreeSet<usize> = self.edges.iter().flatten().copied().collect();
        (1..=self.k).filter(|v| !covered.contains(v)).collect()
    }

    /// Two-colourability of a graph input; `None` unless every edge has two vertices.
    pub fn is_bipartite_graph(&self) -> Option<bool> {
        if self.edges.iter().any(|e| e.len() != 2) {
            return None;
        }
        let mut adj = vec![Vec::new(); self.k + 1];
        for e in &self.edges {
            adj[e[0]].push(e[1]);
            adj[e[1]].push(e[0]);
        }
        let mut colour: Vec<Option<bool>> = vec![None; self.k + 1];
        for start in 1..=self.k {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let c = colour[u].unwrap();
                for &w in &adj[u] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return Some(false),
                        Some(_) => {}
                    }
                }
            }
        }
        Some(true)
    }

    /// Render in the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.k);
        for e in &self.edges {
            out.push_str("edge:");
            for v in e {
                out.push(' ');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&HypergraphJson {
            vertices: self.k as i64,
            edges: self
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| v as i64).collect())
                .collect(),
        })
        .expect("plain data serializes")
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn normalize_edge(k: usize, edge: Vec<usize>) -> std::result::Result<Vec<usize>, String> {
    if edge.is_empty() {
        return Err("empty edge".into());
    }
    let mut seen = HashSet::new();
    for &v in &edge {
        if v == 0 || v > k {
            return Err(format!("vertex id {v} out of range 1..={k}"));
        }
        if !seen.insert(v) {
            return Err(format!("duplicate vertex id {v}"));
        }
    }
    let mut sorted = edge;
    sorted.sort_unstable();
    Ok(sorted)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphJson {
    vertices: i64,
    edges: Vec<Vec<i64>>,
}

/// Parse either the text format or its JSON equivalent.
///
/// A document whose first non-blank character is `{` is treated as JSON.
pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

fn parse_json(text: &str) -> Result<Hypergraph> {
    let doc: HypergraphJson =
        serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
    if doc.vertices <= 0 {
        return Err(Error::Json(format!("vertex count {} must be positive", doc.vertices)));
    }
    let k = doc.vertices as usize;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (i, e) in doc.edges.into_iter().enumerate() {
        let mut edge = Vec::with_capacity(e.len());
        for v in e {
            if v <= 0 || v as u64 > k as u64 {
                return Err(Error::Json(format!(
                    "edge {}: vertex id {v} out of range 1..={k}",
                    i + 1
                )));
            }
            edge.push(v as usize);
        }
        edges.push(edge);
    }
    Hypergraph::new(k, edges).map_err(|e| Error::Json(e.to_string()))
}

fn parse_text(text: &str) -> Result<Hypergraph> {
    let mut k: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        if let Some(rest) = line.strip_prefix("vertices:") {
            if k.is_some() {
                return Err(err("duplicate vertices header".into()));
            }
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| err(format!("bad vertex count '{}'", rest.trim())))?;
            if n == 0 {
                return Err(err("vertex count must be positive".into()));
            }
            k = Some(n);
        } else if let Some(rest) = line.strip_prefix("edge:") {
            let Some(k) = k else {
                return Err(err("edge before 'vertices:' header".into()));
            };
            let rest = rest.strip_prefix(' ').unwrap_or(rest);
            if rest.trim().is_empty() {
                return Err(err("empty edge".into()));
            }
            let mut edge = Vec::new();
            for tok in rest.split(' ') {
                let v: i64 = tok
                    .parse()
                    .map_err(|_| err(format!("bad vertex id '{tok}'")))?;
                if v <= 0 || v as u64 > k as u64 {
                    return Err(err(format!("vertex id {v} out of range 1..={k}")));
                }
                let v = v as usize;
                if edge.contains(&v) {
                    return Err(err(format!("duplicate vertex id {v}")));
                }
                edge.push(v);
            }
            edges.push(edge);
        } else {
            return Err(err(format!("unrecognized line '{line}'")));
        }
    }
    let Some(k) = k else {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: "missing 'vertices:' header".into(),
        });
    };
    if edges.is_empty() {
        return Err(Error::Parse {
            line: last_line.max(1),
            message: "no edges".into(),
        });
    }
    Hypergraph::new(k, edges)
}

/// Structural flags computed by [`validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypergraphProperties {
    pub is_simple: bool,
    pub is_connected: bool,
    pub is_covering: bool,
    pub has_loops: bool,
    pub has_repeated_edges: bool,
    pub uniform_s: Option<usize>,
    pub is_graph: bool,
}

/// Diagnostic classification; never fails.
pub fn validate(h: &Hypergraph) -> HypergraphProperties {
    let edges = h.edges();
    let has_repeated_edges = {
        let mut seen = HashSet::new();
        !edges.iter().all(|e| seen.insert(e))
    };
    let is_simple = edges.iter().enumerate().all(|(i, a)| {
        edges
            .iter()
            .enumerate()
            .all(|(j, b)| i == j || !is_subset(a, b))
    });
    let first = edges[0].len();
    let uniform_s = edges.iter().all(|e| e.len() == first).then_some(first);
    HypergraphProperties {
        is_simple,
        is_connected: is_connected(h),
        is_covering: h.uncovered().is_empty(),
        has_loops: edges.iter().any(|e| e.len() == 1),
        has_repeated_edges,
        uniform_s,
        is_graph: uniform_s == Some(2) && !has_repeated_edges,
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Union-find over vertices; every vertex, covered or not, must land in one class.
fn is_connected(h: &Hypergraph) -> bool {
    let mut parent: Vec<usize> = (0..=h.num_vertices()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for e in h.edges() {
        let root = find(&mut parent, e[0]);
        for &v in &e[1..] {
            let r = find(&mut parent, v);
            parent[r] = root;
        }
    }
    let root = find(&mut parent, 1);
    (2..=h.num_vertices()).all(|v| find(&mut parent, v) == root)
}

/// Row `i` is edge `i`; column `j` is vertex `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    pub fn from_rows(entries: Vec<Vec<u8>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::Argument("incidence matrix must be nonempty".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Argument(format!("row {} has wrong length", i + 1)));
            }
            if row.iter().any(|&x| x > 1) {
                return Err(Error::Argument(format!("row {} is not 0/1", i + 1)));
            }
            if row.iter().all(|&x| x == 0) {
                return Err(Error::Argument(format!("row {} is all zero", i + 1)));
            }
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<u8>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[i][j]
    }

    /// Rebuild the edge list (1-based vertex ids) from the rows.
    pub fn to_edges(&self) -> Vec<Vec<usize>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &x)| x == 1)
                    .map(|(j, _)| j + 1)
                    .collect()
            })
            .collect()
    }
}

pub fn incidence_matrix(h: &Hypergraph) -> IncidenceMatrix {
    let entries = h
        .edges()
        .iter()
        .map(|e| {
            let mut row = vec![0u8; h.num_vertices()];
            for &v in e {
                row[v - 1] = 1;
            }
            row
        })
        .collect();
    IncidenceMatrix {
        rows: h.num_edges(),
        cols: h.num_vertices(),
        entries,
    }
}

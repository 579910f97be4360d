//! Text and JSON renderings. All numbers are exact: decimal integers and `a/b` rationals.

use std::fmt::{Display, Write as _};

use serde::Serializer;
use serde_json::{json, Value};

use crate::analysis::EhrhartAnalysis;
use crate::counting::CountSequence;
use crate::hypergraph::{Hypergraph, HypergraphProperties, IncidenceMatrix};
use crate::poly::Poly;
use crate::polytope::VertexSet;
use crate::series::{format_series, DenominatorShape};
use crate::unimodular::TuVerdict;

pub(crate) fn ser_display<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn ser_display_vec<T: Display, S: Serializer>(v: &[T], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn opt<T: Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

fn poly_json(p: &Poly) -> Value {
    json!(p.coeff_strings())
}

pub fn properties_text(p: &HypergraphProperties, bipartite: Option<bool>) -> String {
    format!(
        "simple={} connected={} covering={} loops={} repeated_edges={} uniform_s={} graph={} bipartite={}",
        p.is_simple,
        p.is_connected,
        p.is_covering,
        p.has_loops,
        p.has_repeated_edges,
        opt(p.uniform_s),
        p.is_graph,
        opt(bipartite),
    )
}

pub fn properties_json(p: &HypergraphProperties, bipartite: Option<bool>) -> Value {
    let mut v = serde_json::to_value(p).expect("plain data serializes");
    v["is_bipartite"] = json!(bipartite);
    v
}

pub fn tu_text(tu: &TuVerdict) -> String {
    match tu {
        TuVerdict::Unimodular => "true".into(),
        TuVerdict::NotUnimodular(w) => format!(
            "false (rows {:?}, cols {:?}, det {})",
            w.rows, w.cols, w.determinant
        ),
        TuVerdict::Indeterminate { submatrices, cap } => {
            format!("indeterminate ({submatrices} submatrices > cap {cap})")
        }
    }
}

pub fn tu_json(tu: &TuVerdict) -> Value {
    match tu {
        TuVerdict::Unimodular => json!({ "verdict": "true" }),
        TuVerdict::NotUnimodular(w) => json!({
            "verdict": "false",
            "witness": serde_json::to_value(w).expect("plain data serializes"),
        }),
        TuVerdict::Indeterminate { submatrices, cap } => json!({
            "verdict": "indeterminate",
            "submatrices": submatrices.to_string(),
            "cap": cap.to_string(),
        }),
    }
}

pub fn validate_text(
    h: &Hypergraph,
    p: &HypergraphProperties,
    bipartite: Option<bool>,
    a: &IncidenceMatrix,
    tu: &TuVerdict,
) -> String {
    let mut out = String::new();
    writeln!(out, "vertices: {}", h.num_vertices()).unwrap();
    writeln!(out, "edges: {}", h.num_edges()).unwrap();
    writeln!(out, "properties: {}", properties_text(p, bipartite)).unwrap();
    writeln!(out, "incidence matrix:").unwrap();
    for row in a.entries() {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(out, "  {}", cells.join(" ")).unwrap();
    }
    writeln!(out, "totally unimodular: {}", tu_text(tu)).unwrap();
    out
}

pub fn validate_json(
    h: &Hypergraph,
    p: &HypergraphProperties,
    bipartite: Option<bool>,
    a: &IncidenceMatrix,
    tu: &TuVerdict,
) -> Value {
    json!({
        "vertices": h.num_vertices(),
        "edges": h.edges(),
        "properties": properties_json(p, bipartite),
        "incidence_matrix": a.entries(),
        "totally_unimodular": tu_json(tu),
    })
}

fn dens_text(dens: &[u64]) -> String {
    let mut sorted = dens.to_vec();
    sorted.sort_unstable();
    let parts: Vec<String> = sorted.iter().map(u64::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

pub fn vertices_text(vs: &VertexSet, dens: &[u64]) -> String {
    let mut out = String::new();
    for p in vs.points() {
        writeln!(out, "{}", p.coord_strings().join(" ")).unwrap();
    }
    writeln!(out, "denominators: {}", dens_text(dens)).unwrap();
    out
}

pub fn vertices_json(vs: &VertexSet) -> Value {
    json!(vs
        .points()
        .iter()
        .map(|p| p.coord_strings())
        .collect::<Vec<_>>())
}

pub fn counts_text(c: &CountSequence) -> String {
    let mut out = String::new();
    for (n, v) in c.values().iter().enumerate() {
        writeln!(out, "ehr({n}) = {v}").unwrap();
    }
    out
}

pub fn counts_json(c: &CountSequence) -> Value {
    serde_json::to_value(c).expect("plain data serializes")["values"].take()
}

fn shape_text(s: &DenominatorShape) -> String {
    format!(
        "(1-x)^{} (1+x)^{} remainder {}",
        s.mult_1mx, s.mult_1px, s.remainder
    )
}

/// The `series`/`verify` report.
pub fn analysis_text(a: &EhrhartAnalysis) -> String {
    let mut out = String::new();
    let h = &a.hypergraph;
    writeln!(out, "hypergraph: k={} r={}", h.num_vertices(), h.num_edges()).unwrap();
    writeln!(out, "properties: {}", properties_text(&a.properties, a.bipartite)).unwrap();
    writeln!(out, "totally unimodular: {}", tu_text(&a.tu)).unwrap();
    writeln!(out, "vertex count: {}", a.vertices.len()).unwrap();
    writeln!(out, "integral: {}", a.integral).unwrap();
    writeln!(out, "denominators: {}", dens_text(&a.denominators)).unwrap();
    writeln!(out, "counts:").unwrap();
    for line in counts_text(&a.counts).lines() {
        writeln!(out, "  {line}").unwrap();
    }
    writeln!(
        out,
        "candidate denominator: {} [{}]",
        DenominatorShape::of(&a.candidate.poly).factored(),
        a.candidate.rule
    )
    .unwrap();
    writeln!(out, "series: {}", format_series(&a.series)).unwrap();
    writeln!(out, "numerator: {}", a.series.num()).unwrap();
    writeln!(out, "denominator: {}", a.series.den()).unwrap();
    writeln!(out, "shape: {}", shape_text(&a.shape)).unwrap();
    writeln!(out, "numerator degree: {}", opt(a.numerator_degree)).unwrap();
    writeln!(out, "palindromic: {}", a.palindromic).unwrap();
    writeln!(out, "reciprocity: {}", opt(a.reciprocity_ok)).unwrap();
    writeln!(out, "volume: {}", a.normalized_volume).unwrap();
    writeln!(out, "checks:").unwrap();
    let width = a.verdicts.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    for (name, v) in &a.verdicts {
        writeln!(out, "  {name:<width$}  {:<4}  {}", v.label(), v.detail()).unwrap();
    }
    out
}

pub fn analysis_json(a: &EhrhartAnalysis) -> Value {
    let verdicts: serde_json::Map<String, Value> = a
        .verdicts
        .iter()
        .map(|(n, v)| {
            (
                n.clone(),
                json!({ "status": v.label(), "detail": v.detail() }),
            )
        })
        .collect();
    json!({
        "hypergraph": {
            "vertices": a.hypergraph.num_vertices(),
            "edges": a.hypergraph.edges(),
        },
        "properties": properties_json(&a.properties, a.bipartite),
        "totally_unimodular": tu_json(&a.tu),
        "vertex_count": a.vertices.len(),
        "integral": a.integral,
        "denominators": a.denominators.iter().map(u64::to_string).collect::<Vec<_>>(),
        "counts": counts_json(&a.counts),
        "candidate_denominator": {
            "rule": a.candidate.rule,
            "lcm": a.candidate.lcm.to_string(),
            "factored": DenominatorShape::of(&a.candidate.poly).factored(),
            "coefficients": poly_json(&a.candidate.poly),
        },
        "margin": a.margin,
        "series": {
            "text": format_series(&a.series),
            "numerator": poly_json(a.series.num()),
            "denominator": poly_json(a.series.den()),
        },
        "shape": {
            "mult_1mx": a.shape.mult_1mx,
            "mult_1px": a.shape.mult_1px,
            "remainder": poly_json(&a.shape.remainder),
        },
        "numerator_degree": a.numerator_degree,
        "palindromic": a.palindromic,
        "reciprocity_ok": a.reciprocity_ok,
        "normalized_volume": a.normalized_volume.to_string(),
        "theorem_verdicts": Value::Object(verdicts),
    })
}

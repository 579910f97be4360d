//! The full chain: validate, polytope, vertices, counts, fit, reduce, shape, checks.

use num_rational::BigRational;

use crate::counting::{count_sequence, CountSequence};
use crate::error::{Error, Result};
use crate::hypergraph::{incidence_matrix, validate, Hypergraph, HypergraphProperties};
use crate::polytope::{
    build_polytope, enumerate_vertices, is_integral, vertex_denominators, VertexSet,
    DEFAULT_VERTEX_CAP,
};
use crate::series::{
    candidate_denominator, check_reciprocity, counts_needed, denominator_shape, fit_series,
    graph_report, has_nonnegative_integer_coeffs, normalized_volume, reduce_lowest_terms,
    reproduces_counts, uniform_report, Candidate, DenominatorShape, RationalFunction, Verdict,
    DEFAULT_MARGIN,
};
use crate::unimodular::{is_totally_unimodular, TuVerdict, DEFAULT_TU_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Extra coefficients verified beyond the candidate degree.
    pub margin: usize,
    /// Largest dilation counted; `None` sizes it from the candidate denominator.
    pub n_max: Option<u64>,
    pub graph_box: bool,
    pub tu_cap: u64,
    pub vertex_cap: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            margin: DEFAULT_MARGIN,
            n_max: None,
            graph_box: false,
            tu_cap: DEFAULT_TU_CAP,
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

/// Everything computed for one hypergraph.
#[derive(Debug, Clone)]
pub struct EhrhartAnalysis {
    pub hypergraph: Hypergraph,
    pub properties: HypergraphProperties,
    pub bipartite: Option<bool>,
    pub tu: TuVerdict,
    pub vertices: VertexSet,
    pub denominators: Vec<u64>,
    pub integral: bool,
    pub candidate: Candidate,
    pub margin: usize,
    pub counts: CountSequence,
    pub fitted: RationalFunction,
    pub series: RationalFunction,
    pub shape: DenominatorShape,
    pub palindromic: bool,
    pub numerator_degree: Option<usize>,
    pub reciprocity_ok: Option<bool>,
    pub normalized_volume: BigRational,
    pub verdicts: Vec<(String, Verdict)>,
}

impl EhrhartAnalysis {
    pub fn k(&self) -> usize {
        self.hypergraph.num_vertices()
    }

    pub fn verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn all_pass(&self) -> bool {
        !self.verdicts.iter().any(|(_, v)| v.is_fail())
    }
}

/// Run the whole chain on `h`.
pub fn analyze(h: &Hypergraph, opts: &AnalysisOptions) -> Result<EhrhartAnalysis> {
    let k = h.num_vertices();
    let properties = validate(h);
    if !properties.is_covering && !opts.graph_box {
        return Err(Error::Uncovered(h.uncovered()[0]));
    }
    let bipartite = h.is_bipartite_graph();
    let tu = is_totally_unimodular(&incidence_matrix(h), opts.tu_cap);
    let polytope = build_polytope(h, opts.graph_box)?;
    let vertices = enumerate_vertices(&polytope, opts.vertex_cap)?;
    let denominators = vertex_denominators(&vertices);
    let integral = is_integral(&vertices);
    let candidate = candidate_denominator(&denominators, k)?;
    let deg_t = candidate.poly.degree().expect("candidate is nonzero");
    let needed = counts_needed(deg_t, opts.margin);
    let n_max = match opts.n_max {
        Some(n) if (n as u128) + 1 < needed as u128 => {
            return Err(Error::TooFewCounts { needed, have: n as usize + 1 });
        }
        Some(n) => n,
        None => (needed - 1) as u64,
    };
    let counts = count_sequence(&polytope, n_max)?;
    let fitted = fit_series(&counts, &candidate.poly, opts.margin)?;
    let series = reduce_lowest_terms(&fitted);
    let shape = denominator_shape(series.den(), k)?;
    let normalized_volume = normalized_volume(&series, k)?;
    let palindromic = series.num().is_palindromic();
    let numerator_degree = series.num().degree();

    let mut verdicts: Vec<(String, Verdict)> = Vec::new();
    let mut push = |name: &str, v: Verdict| verdicts.push((name.to_string(), v));

    push(
        "origin_count",
        Verdict::from_bool(
            counts.values().first().is_some_and(|c| *c == 1u8.into()),
            format!("ehr(0) = {}", counts.values()[0]),
        ),
    );
    push(
        "count_monotone",
        Verdict::from_bool(counts.is_monotone(), format!("n = 0..{n_max}")),
    );
    push(
        "pole_order",
        Verdict::Pass(format!("(1-x) multiplicity {} = k+1", shape.mult_1mx)),
    );
    push(
        "fit_residual",
        Verdict::Pass(format!("{} coefficients beyond degree {deg_t} vanish", opts.margin)),
    );
    push(
        "series_round_trip",
        Verdict::from_bool(
            reproduces_counts(&series, &counts),
            format!("{} counts reproduced", counts.len()),
        ),
    );
    push(
        "h_star_nonnegative",
        if integral {
            Verdict::from_bool(
                has_nonnegative_integer_coeffs(series.num()),
                format!("numerator {}", series.num()),
            )
        } else {
            Verdict::NotApplicable("polytope is not integral".into())
        },
    );

    let simple_reason = if properties.has_repeated_edges {
        Some("repeated hyperedges")
    } else if !properties.is_simple {
        Some("hypergraph is not simple")
    } else if !properties.is_connected {
        Some("hypergraph is not connected")
    } else {
        None
    };
    let tu_true = tu.as_bool() == Some(true);

    push(
        "unimodular_integral",
        match (properties.has_repeated_edges, tu.as_bool()) {
            (true, _) => Verdict::NotApplicable("repeated hyperedges".into()),
            (false, Some(true)) => {
                let den_ok = *series.den() == crate::poly::Poly::one_minus_x_pow(1).pow(k + 1);
                Verdict::from_bool(
                    integral && den_ok,
                    format!("integral={integral}, denominator (1-x)^{}={den_ok}", k + 1),
                )
            }
            (false, Some(false)) => Verdict::NotApplicable("not totally unimodular".into()),
            (false, None) => Verdict::NotApplicable("unimodularity indeterminate".into()),
        },
    );

    let mut reciprocity_ok = None;
    match (simple_reason, properties.uniform_s) {
        (None, Some(s)) => {
            let ok = check_reciprocity(&series, k, s);
            reciprocity_ok = Some(ok);
            push("reciprocity", Verdict::from_bool(ok, format!("x^{} Ehr(x) = (-1)^{} Ehr(1/x)", s + 1, k + 1)));
            for (name, v) in uniform_report(&series, k, s, tu_true).verdicts(k, s) {
                push(name, v);
            }
        }
        (reason, _) => {
            let why = reason.unwrap_or("hypergraph is not uniform").to_string();
            push("reciprocity", Verdict::NotApplicable(why.clone()));
            push("uniform_palindromic", Verdict::NotApplicable(why.clone()));
            push("uniform_unimodular_degree", Verdict::NotApplicable(why));
        }
    }

    match (simple_reason, properties.is_graph) {
        (None, true) => {
            let report = graph_report(&series, k, bipartite == Some(true));
            for (name, v) in report.verdicts(k) {
                push(name, v);
            }
        }
        (reason, _) => {
            let why = reason.unwrap_or("not a graph").to_string();
            push("graph_denominator_shape", Verdict::NotApplicable(why.clone()));
            push("graph_symmetric", Verdict::NotApplicable(why.clone()));
            push("bipartite_degree", Verdict::NotApplicable(why));
        }
    }

    Ok(EhrhartAnalysis {
        hypergraph: h.clone(),
        properties,
        bipartite,
        tu,
        vertices,
        denominators,
        integral,
        candidate,
        margin: opts.margin,
        counts,
        fitted,
        series,
        shape,
        palindromic,
        numerator_degree,
        reciprocity_ok,
        normalized_volume,
        verdicts,
    })
}

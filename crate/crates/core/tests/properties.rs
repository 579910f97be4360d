mod common;

use common::*;
use ehrgraph::polytope::{is_vertex, DEFAULT_VERTEX_CAP};
use ehrgraph::series::reproduces_counts;
use ehrgraph::unimodular::DEFAULT_TU_CAP;
use ehrgraph::*;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

fn covering(h: &Hypergraph) -> bool {
    validate(h).is_covering
}

#[test]
fn counter_matches_naive_on_the_corpus() {
    for inst in corpus().into_iter().filter(|i| i.h.num_vertices() <= 5) {
        let p = build_polytope(&inst.h, false).unwrap();
        for n in 0..=6 {
            assert_eq!(
                count_dilation(&p, n).unwrap(),
                count_naive(&inst.h, n, 100_000_000).unwrap(),
                "{} n={n}",
                inst.name
            );
        }
    }
}

#[test]
fn naive_matches_the_graph_membership_predicate() {
    // points with every n_i in {0..n} and n_i + n_j <= n for every edge ij
    for inst in corpus() {
        if validate(&inst.h).uniform_s != Some(2) || inst.h.num_vertices() > 5 {
            continue;
        }
        let brute = brute_counts(&inst.h, 5);
        for (n, expect) in brute.iter().enumerate() {
            assert_eq!(
                count_naive(&inst.h, n as u64, 100_000_000).unwrap(),
                BigUint::from(*expect),
                "{} n={n}",
                inst.name
            );
        }
    }
}

#[test]
fn vertices_are_feasible_tight_and_extreme() {
    let two = BigRational::from_integer(2.into());
    for inst in corpus() {
        let p = build_polytope(&inst.h, false).unwrap();
        let vs = enumerate_vertices(&p, DEFAULT_VERTEX_CAP).unwrap();
        for v in vs.points() {
            assert!(p.contains(v.coords()), "{}", inst.name);
            assert!(is_vertex(&p, v.coords()), "{} {v}", inst.name);
        }
        let pts = vs.points();
        for a in 0..pts.len() {
            for b in a + 1..pts.len() {
                let mid: Vec<BigRational> = pts[a]
                    .coords()
                    .iter()
                    .zip(pts[b].coords())
                    .map(|(x, y)| (x + y) / &two)
                    .collect();
                assert!(
                    !pts.iter().any(|q| q.coords() == mid.as_slice()),
                    "{}: a vertex is a midpoint",
                    inst.name
                );
            }
        }
    }
}

#[test]
fn polytopes_are_full_dimensional() {
    // origin plus eps * e_i with eps = 1/(2k) are k+1 affinely independent feasible points
    for inst in corpus() {
        let k = inst.h.num_vertices();
        let p = build_polytope(&inst.h, false).unwrap();
        let eps = BigRational::new(1.into(), (2 * k as i64).into());
        assert!(p.contains(&vec![BigRational::zero(); k]));
        for i in 0..k {
            let mut x = vec![BigRational::zero(); k];
            x[i] = eps.clone();
            assert!(p.contains(&x), "{}", inst.name);
        }
        let all_eps = vec![eps.clone(); k];
        assert!(p.contains(&all_eps), "{} interior point", inst.name);
    }
}

#[test]
fn unimodular_implies_integral_across_the_corpus() {
    let mut seen = 0;
    for inst in corpus() {
        let tu = is_totally_unimodular(&incidence_matrix(&inst.h), DEFAULT_TU_CAP);
        if tu.as_bool() == Some(true) {
            seen += 1;
            let p = build_polytope(&inst.h, false).unwrap();
            let vs = enumerate_vertices(&p, DEFAULT_VERTEX_CAP).unwrap();
            assert!(is_integral(&vs), "{}", inst.name);
        }
    }
    assert!(seen >= 10);
}

#[test]
fn every_corpus_instance_analyzes_cleanly() {
    for inst in corpus() {
        let a = analyze(&inst.h, &AnalysisOptions::default())
            .unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        let k = inst.h.num_vertices();
        assert_eq!(a.shape.mult_1mx, k + 1, "{}", inst.name);
        assert!(reproduces_counts(&a.series, &a.counts), "{}", inst.name);
        assert!(a.all_pass(), "{}: {:?}", inst.name, a.verdicts);
        // the removed gcd times the reduced form is the fitted form
        let g = a.fitted.num().gcd(a.fitted.den());
        let qn = a.fitted.num().exact_div(a.series.num()).expect("reduced numerator divides");
        let qd = a.fitted.den().exact_div(a.series.den()).expect("reduced denominator divides");
        assert_eq!(qn, qd, "{}", inst.name);
        assert_eq!(qn.monic(), g.monic(), "{}", inst.name);
        assert!(a.series.num().gcd(a.series.den()).degree() == Some(0), "{}", inst.name);
        if validate(&inst.h).has_repeated_edges {
            assert!(matches!(a.verdict("reciprocity"), Some(Verdict::NotApplicable(_))));
        }
    }
}

#[test]
fn graph_box_accepts_isolated_vertices() {
    let h = hg(4, &[&[1, 2], &[2, 3]]);
    assert!(analyze(&h, &AnalysisOptions::default()).is_err());
    let opts = AnalysisOptions { graph_box: true, ..Default::default() };
    let a = analyze(&h, &opts).unwrap();
    // the isolated vertex contributes a factor n+1 to every count
    let counts: Vec<u64> = brute_counts(&hg(3, &[&[1, 2], &[2, 3]]), 12)
        .iter()
        .enumerate()
        .map(|(n, c)| c * (n as u64 + 1))
        .collect();
    assert_eq!(
        int_coeffs(a.series.num()),
        oracle_numerator(&counts, &one_minus_x_one_plus_x(5, 0))
    );
    assert_eq!(a.shape.mult_1mx, 5);
    assert!(a.all_pass());
}

#[test]
fn larger_dilations_stay_exact() {
    let p = build_polytope(&triple_ring(), false).unwrap();
    let a = analyze(&triple_ring(), &AnalysisOptions::default()).unwrap();
    let n = 60usize;
    let expanded = a.series.expand(n + 1);
    assert_eq!(
        BigRational::from_integer(count_dilation(&p, n as u64).unwrap().into()),
        expanded[n]
    );
}

#[test]
fn volume_matches_leading_growth() {
    // ehr(n) / n^k approaches the volume; check the ratio at n = 400 for K2
    let a = analyze(&hg(2, &[&[1, 2]]), &AnalysisOptions::default()).unwrap();
    let c = count_dilation(&build_polytope(&hg(2, &[&[1, 2]]), false).unwrap(), 400)
        .unwrap()
        .to_f64()
        .unwrap();
    let v = a.normalized_volume.numer().to_f64().unwrap() / a.normalized_volume.denom().to_f64().unwrap();
    assert!((c / 160_000.0 - v).abs() < 0.01);
    assert_eq!(a.normalized_volume, BigRational::new(BigUint::one().into(), 2.into()));
}

fn random_hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..=4).prop_flat_map(|k| {
        proptest::collection::vec(proptest::collection::btree_set(1..=k, 1..=k.min(3)), 1..=4)
            .prop_map(move |edges| {
                Hypergraph::new(k, edges.into_iter().map(|e| e.into_iter().collect()).collect())
                    .unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_counts_agree(h in random_hypergraph(), n in 0u64..=5) {
        prop_assume!(covering(&h));
        let p = build_polytope(&h, false).unwrap();
        prop_assert_eq!(count_dilation(&p, n).unwrap(), count_naive(&h, n, 100_000_000).unwrap());
    }

    #[test]
    fn random_sequences_start_at_one_and_grow(h in random_hypergraph()) {
        prop_assume!(covering(&h));
        let seq = count_sequence(&build_polytope(&h, false).unwrap(), 6).unwrap();
        prop_assert_eq!(seq.values()[0].clone(), BigUint::one());
        prop_assert!(seq.is_monotone());
    }

    #[test]
    fn random_unimodular_inputs_are_integral(h in random_hypergraph()) {
        prop_assume!(covering(&h));
        let tu = is_totally_unimodular(&incidence_matrix(&h), DEFAULT_TU_CAP);
        let vs = enumerate_vertices(&build_polytope(&h, false).unwrap(), DEFAULT_VERTEX_CAP).unwrap();
        if tu.as_bool() == Some(true) {
            prop_assert!(is_integral(&vs));
        }
    }
}

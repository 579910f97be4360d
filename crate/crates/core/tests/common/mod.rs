#![allow(dead_code)]

use ehrgraph::{generate_family, Family, Hypergraph};

pub struct Instance {
    pub name: String,
    pub h: Hypergraph,
}

pub fn hg(k: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::new(k, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
}

pub fn triple_chain() -> Hypergraph {
    hg(5, &[&[1, 2, 3], &[3, 4], &[4, 5]])
}

pub fn triple_ring() -> Hypergraph {
    hg(6, &[&[1, 2, 6], &[2, 3, 4], &[4, 5, 6]])
}

pub fn family(f: Family, params: &[i64]) -> Hypergraph {
    generate_family(f, params).unwrap()
}

/// Every instance the structural properties are checked on.
pub fn corpus() -> Vec<Instance> {
    let mut out = vec![
        Instance { name: "triple_chain".into(), h: triple_chain() },
        Instance { name: "triple_ring".into(), h: triple_ring() },
        Instance { name: "K2".into(), h: hg(2, &[&[1, 2]]) },
        Instance { name: "loop".into(), h: hg(1, &[&[1]]) },
        Instance { name: "chain-1-234-5".into(), h: hg(5, &[&[1, 2], &[2, 3, 4], &[4, 5]]) },
        Instance { name: "triple-pair".into(), h: hg(4, &[&[1, 2, 3], &[3, 4]]) },
        Instance { name: "two-triangles-3u".into(), h: hg(5, &[&[1, 2, 3], &[3, 4, 5], &[1, 4, 5]]) },
        Instance { name: "K4-minus-edge".into(), h: hg(4, &[&[1, 2], &[2, 3], &[3, 4], &[4, 1], &[1, 3]]) },
        Instance { name: "disjoint-edges".into(), h: hg(4, &[&[1, 2], &[3, 4]]) },
        Instance { name: "loop-and-edge".into(), h: hg(2, &[&[1], &[1, 2]]) },
        Instance { name: "repeated".into(), h: hg(3, &[&[1, 2], &[2, 3], &[2, 3]]) },
    ];
    for n in 2..=6 {
        out.push(Instance { name: format!("P{n}"), h: family(Family::Path, &[n]) });
    }
    for n in 3..=6 {
        out.push(Instance { name: format!("C{n}"), h: family(Family::Cycle, &[n]) });
    }
    out.push(Instance { name: "K4".into(), h: family(Family::Complete, &[4]) });
    out.push(Instance { name: "K22".into(), h: family(Family::CompleteBipartite, &[2, 2]) });
    out.push(Instance { name: "K23".into(), h: family(Family::CompleteBipartite, &[2, 3]) });
    out.push(Instance { name: "Q2".into(), h: family(Family::Hypercube, &[2]) });
    out
}

/// Brute-force `ehr` over `{0..n}^k`; independent of the library.
pub fn brute_counts(h: &Hypergraph, n_max: u64) -> Vec<u64> {
    (0..=n_max)
        .map(|n| {
            let k = h.num_vertices();
            let mut x = vec![0u64; k];
            let mut count = 0;
            'outer: loop {
                if h.edges().iter().all(|e| e.iter().map(|&v| x[v - 1]).sum::<u64>() <= n) {
                    count += 1;
                }
                for xj in x.iter_mut() {
                    if *xj < n {
                        *xj += 1;
                        continue 'outer;
                    }
                    *xj = 0;
                }
                break count;
            }
        })
        .collect()
}

/// Integer polynomial product, coefficient vectors indexed by degree.
pub fn convolve(a: &[i128], b: &[i128]) -> Vec<i128> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `(1-x)^a (1+x)^b` as integer coefficients.
pub fn one_minus_x_one_plus_x(a: usize, b: usize) -> Vec<i128> {
    let mut p = vec![1i128];
    for _ in 0..a {
        p = convolve(&p, &[1, -1]);
    }
    for _ in 0..b {
        p = convolve(&p, &[1, 1]);
    }
    p
}

/// Numerator of `Σ counts x^n` over `den`, trimmed; asserts the product
/// vanishes from `deg den` up to the last count.
pub fn oracle_numerator(counts: &[u64], den: &[i128]) -> Vec<i128> {
    let c: Vec<i128> = counts.iter().map(|&v| v as i128).collect();
    let prod = convolve(&c, den);
    let d = den.len() - 1;
    assert!(counts.len() > d, "need more counts than the denominator degree");
    for (i, v) in prod.iter().enumerate().take(counts.len()).skip(d) {
        assert_eq!(*v, 0, "oracle residual at degree {i}");
    }
    let mut num: Vec<i128> = prod[..d].to_vec();
    while num.last() == Some(&0) {
        num.pop();
    }
    num
}

/// Integer coefficients of a library polynomial.
pub fn int_coeffs(p: &ehrgraph::Poly) -> Vec<i128> {
    p.int_coeffs()
        .expect("integer coefficients")
        .iter()
        .map(|c| i128::try_from(c).unwrap())
        .collect()
}

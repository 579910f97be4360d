//! Brute-force total unimodularity.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::exact::determinant_i64;
use crate::hypergraph::IncidenceMatrix;

pub const DEFAULT_TU_CAP: u64 = 10_000_000;

/// A square submatrix whose determinant is outside `{-1, 0, 1}`.
///
/// Row and column indices are 1-based (edge index, vertex id).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    #[serde(serialize_with = "crate::report::ser_display")]
    pub determinant: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TuVerdict {
    Unimodular,
    NotUnimodular(Witness),
    /// The scan would visit `submatrices` square submatrices, more than the cap.
    Indeterminate { submatrices: BigUint, cap: u64 },
}

impl TuVerdict {
    pub fn as_bool(&self) -> Option<bool> {
        match self {
            TuVerdict::Unimodular => Some(true),
            TuVerdict::NotUnimodular(_) => Some(false),
            TuVerdict::Indeterminate { .. } => None,
        }
    }
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Number of nonempty square submatrices of an `r x k` matrix, `C(r+k, r) - 1`.
pub fn submatrix_count(rows: usize, cols: usize) -> BigUint {
    binomial(rows + cols, rows.min(cols)) - BigUint::one()
}

/// Check every square submatrix's determinant.
///
/// The reported witness is the first failing submatrix in (size, rows, cols)
/// lexicographic order, independent of how the scan is scheduled.
pub fn is_totally_unimodular(m: &IncidenceMatrix, work_cap: u64) -> TuVerdict {
    let (r, k) = (m.rows(), m.cols());
    let total = submatrix_count(r, k);
    if total.to_u64().is_none_or(|t| t > work_cap) {
        return TuVerdict::Indeterminate {
            submatrices: total,
            cap: work_cap,
        };
    }
    for t in 1..=r.min(k) {
        let row_sets: Vec<Vec<usize>> = (0..r).combinations(t).collect();
        let found = row_sets.par_iter().find_map_first(|rows| {
            (0..k).combinations(t).find_map(|cols| {
                let sub: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|&i| cols.iter().map(|&j| i64::from(m.get(i, j))).collect())
                    .collect();
                let det = determinant_i64(&sub);
                (det.abs() > BigInt::one()).then(|| Witness {
                    rows: rows.iter().map(|i| i + 1).collect(),
                    cols: cols.iter().map(|j| j + 1).collect(),
                    determinant: det,
                })
            })
        });
        if let Some(w) = found {
            return TuVerdict::NotUnimodular(w);
        }
    }
    TuVerdict::Unimodular
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_family, Family};
    use crate::hypergraph::{incidence_matrix, Hypergraph};
    use proptest::prelude::*;

    fn matrix(rows: &[&[u8]]) -> IncidenceMatrix {
        IncidenceMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn triple_chain_is_unimodular() {
        let m = matrix(&[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 0], &[0, 0, 0, 1, 1]]);
        assert_eq!(is_totally_unimodular(&m, DEFAULT_TU_CAP), TuVerdict::Unimodular);
    }

    #[test]
    fn triple_ring_has_a_three_by_three_witness() {
        let m = matrix(&[&[1, 1, 0, 0, 0, 1], &[0, 1, 1, 1, 0, 0], &[0, 0, 0, 1, 1, 1]]);
        match is_totally_unimodular(&m, DEFAULT_TU_CAP) {
            TuVerdict::NotUnimodular(w) => {
                assert_eq!(w.rows.len(), 3);
                assert_eq!(w.determinant.abs(), BigInt::from(2));
                // first failing column triple in lexicographic order
                assert_eq!(w.cols, vec![2, 4, 6]);
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn one_by_one() {
        assert_eq!(is_totally_unimodular(&matrix(&[&[1]]), 1), TuVerdict::Unimodular);
    }

    #[test]
    fn cap_gives_indeterminate() {
        let m = matrix(&[&[1, 1], &[0, 1]]);
        assert_eq!(submatrix_count(2, 2), BigUint::from(5u8));
        assert!(matches!(is_totally_unimodular(&m, 4), TuVerdict::Indeterminate { .. }));
        assert_eq!(is_totally_unimodular(&m, 5), TuVerdict::Unimodular);
    }

    #[test]
    fn bipartite_families_are_unimodular() {
        let cases: &[(Family, &[i64])] = &[
            (Family::Path, &[2]),
            (Family::Path, &[5]),
            (Family::Cycle, &[4]),
            (Family::Cycle, &[6]),
            (Family::Cycle, &[8]),
            (Family::CompleteBipartite, &[2, 3]),
            (Family::CompleteBipartite, &[3, 3]),
            (Family::Hypercube, &[3]),
        ];
        for (f, p) in cases {
            let m = incidence_matrix(&generate_family(*f, p).unwrap());
            assert_eq!(is_totally_unimodular(&m, DEFAULT_TU_CAP), TuVerdict::Unimodular, "{f} {p:?}");
        }
        for n in [3, 5, 7] {
            let m = incidence_matrix(&generate_family(Family::Cycle, &[n]).unwrap());
            assert!(matches!(
                is_totally_unimodular(&m, DEFAULT_TU_CAP),
                TuVerdict::NotUnimodular(_)
            ));
        }
    }

    fn random_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..=5).prop_flat_map(|k| {
            proptest::collection::vec(proptest::collection::btree_set(1..=k, 1..=k), 1..=5)
                .prop_map(move |edges| {
                    Hypergraph::new(k, edges.into_iter().map(|e| e.into_iter().collect()).collect())
                        .unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn verdict_is_permutation_invariant(
            h in random_hypergraph(),
            row_seed in any::<u64>(),
            col_seed in any::<u64>(),
        ) {
            use rand::{seq::SliceRandom, SeedableRng};
            let m = incidence_matrix(&h);
            let mut rows: Vec<usize> = (0..m.rows()).collect();
            let mut cols: Vec<usize> = (0..m.cols()).collect();
            rows.shuffle(&mut rand::rngs::StdRng::seed_from_u64(row_seed));
            cols.shuffle(&mut rand::rngs::StdRng::seed_from_u64(col_seed));
            let permuted = IncidenceMatrix::from_rows(
                rows.iter().map(|&i| cols.iter().map(|&j| m.get(i, j)).collect()).collect(),
            ).unwrap();
            prop_assert_eq!(
                is_totally_unimodular(&m, DEFAULT_TU_CAP).as_bool(),
                is_totally_unimodular(&permuted, DEFAULT_TU_CAP).as_bool()
            );
        }

        #[test]
        fn incidence_round_trip(h in random_hypergraph()) {
            prop_assert_eq!(incidence_matrix(&h).to_edges(), h.edges().to_vec());
        }
    }
}

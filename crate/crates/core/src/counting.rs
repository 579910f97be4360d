//! Lattice points in dilations of a polytope.
//!
//! [`count_dilation`] assigns coordinates one at a time. Every packing row
//! keeps a residual capacity, and a coordinate ranges from 0 to the least
//! residual among rows containing it. Subtree counts depend only on the
//! residuals of rows that still contain unassigned coordinates, so they are
//! memoized on that vector.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::polytope::HRep;

pub const DEFAULT_NAIVE_CAP: u64 = 100_000_000;

/// `ehr(P, n)` for `n = 0, 1, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountSequence {
    #[serde(serialize_with = "crate::report::ser_display_vec")]
    values: Vec<BigUint>,
}

impl CountSequence {
    pub fn new(values: Vec<BigUint>) -> Self {
        Self { values }
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_monotone(&self) -> bool {
        self.values.windows(2).all(|w| w[0] <= w[1])
    }
}

/// Prepared search: packing rows, a variable order, and per-depth active rows.
struct Plan {
    order: Vec<usize>,
    rhs: Vec<u64>,
    /// rows (indices into `rows`) containing each variable
    rows_of: Vec<Vec<usize>>,
    /// rows still containing an unassigned variable once depth `d` is reached
    active: Vec<Vec<usize>>,
}

impl Plan {
    fn new(p: &HRep) -> Result<Self> {
        let k = p.dim();
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        let mut lower = vec![false; k];
        for (i, r) in p.rows().iter().enumerate() {
            if let Some(j) = r.nonnegativity_var() {
                lower[j] = true;
            } else if r.is_packing() {
                let support: Vec<usize> = (0..k).filter(|&j| r.coeffs[j] == 1).collect();
                if support.is_empty() {
                    continue;
                }
                rows.push(support);
                rhs.push(r.rhs as u64);
            } else {
                return Err(Error::UnsupportedRow(i + 1));
            }
        }
        let mut rows_of = vec![Vec::new(); k];
        for (i, support) in rows.iter().enumerate() {
            for &j in support {
                rows_of[j].push(i);
            }
        }
        if let Some(j) = (0..k).find(|&j| !lower[j] || rows_of[j].is_empty()) {
            return Err(Error::Unbounded(j + 1));
        }
        let mut order: Vec<usize> = (0..k).collect();
        order.sort_by_key(|&j| (std::cmp::Reverse(rows_of[j].len()), j));
        let mut position = vec![0; k];
        for (d, &j) in order.iter().enumerate() {
            position[j] = d;
        }
        let active = (0..=k)
            .map(|d| {
                (0..rows.len())
                    .filter(|&i| rows[i].iter().any(|&j| position[j] >= d))
                    .collect()
            })
            .collect();
        Ok(Self { order, rhs, rows_of, active })
    }

    fn count(&self, n: u64) -> Result<BigUint> {
        let residual: Vec<u64> = self
            .rhs
            .iter()
            .map(|&b| {
                b.checked_mul(n)
                    .ok_or_else(|| Error::Argument(format!("dilation {n} is too large")))
            })
            .collect::<Result<_>>()?;
        let mut memo = vec![HashMap::new(); self.order.len()];
        let mut residual = residual;
        Ok(self.descend(0, &mut residual, &mut memo))
    }

    fn descend(
        &self,
        depth: usize,
        residual: &mut Vec<u64>,
        memo: &mut Vec<HashMap<Vec<u64>, BigUint>>,
    ) -> BigUint {
        let var = self.order[depth];
        let bound = self.rows_of[var]
            .iter()
            .map(|&i| residual[i])
            .min()
            .expect("every variable lies in a packing row");
        if depth + 1 == self.order.len() {
            return BigUint::from(bound) + BigUint::one();
        }
        let key: Vec<u64> = self.active[depth].iter().map(|&i| residual[i]).collect();
        if let Some(hit) = memo[depth].get(&key) {
            return hit.clone();
        }
        let mut total = BigUint::zero();
        for x in 0..=bound {
            if x > 0 {
                for &i in &self.rows_of[var] {
                    residual[i] -= 1;
                }
            }
            total += self.descend(depth + 1, residual, memo);
        }
        for &i in &self.rows_of[var] {
            residual[i] += bound;
        }
        memo[depth].insert(key, total.clone());
        total
    }
}

/// `|nP ∩ Z^k|` for a polytope given by packing rows and nonnegativity rows.
pub fn count_dilation(p: &HRep, n: u64) -> Result<BigUint> {
    Plan::new(p)?.count(n)
}

/// `ehr(P, n)` for `n = 0..=n_max`, evaluated in parallel over `n`.
pub fn count_sequence(p: &HRep, n_max: u64) -> Result<CountSequence> {
    let plan = Plan::new(p)?;
    let values = (0..=n_max)
        .into_par_iter()
        .map(|n| plan.count(n))
        .collect::<Result<Vec<_>>>()?;
    Ok(CountSequence::new(values))
}

/// Exhaustive scan of `{0..n}^k`, keeping tuples whose every edge sum is at most `n`.
///
/// This is the reference oracle for [`count_dilation`]; `cap` bounds the
/// number of tuples visited.
pub fn count_naive(h: &Hypergraph, n: u64, cap: u64) -> Result<BigUint> {
    let k = h.num_vertices();
    let side = n
        .checked_add(1)
        .ok_or_else(|| Error::Argument("dilation too large".into()))?;
    let tuples = BigUint::from(side).pow(k as u32);
    if tuples.to_u64().is_none_or(|t| t > cap) {
        return Err(Error::WorkCap {
            what: "naive count",
            needed: tuples.to_string(),
            cap,
        });
    }
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .map(|e| e.iter().map(|v| v - 1).collect())
        .collect();
    let mut x = vec![0u64; k];
    let mut count: u64 = 0;
    loop {
        if edges.iter().all(|e| e.iter().map(|&j| x[j]).sum::<u64>() <= n) {
            count += 1;
        }
        let mut j = 0;
        loop {
            if j == k {
                return Ok(BigUint::from(count));
            }
            if x[j] < n {
                x[j] += 1;
                break;
            }
            x[j] = 0;
            j += 1;
        }
    }
}

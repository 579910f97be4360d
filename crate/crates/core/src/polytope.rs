//! The inequality description of `P(H)` and its exact vertices.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::{solve_i64, Solve};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_VERTEX_CAP: u64 = 5_000_000;

/// Where an inequality came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowKind {
    /// Edge `i` (0-based): the coordinates of its vertices sum to at most 1.
    Incidence(usize),
    /// `-x_j <= 0`.
    NonNegative(usize),
    /// `x_j <= 1`, only present with the graph box.
    UnitBound(usize),
}

/// One inequality `coeffs . x <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub coeffs: Vec<i64>,
    pub rhs: i64,
    pub kind: RowKind,
}

impl Row {
    /// A row with 0/1 coefficients and nonnegative right-hand side.
    pub fn is_packing(&self) -> bool {
        self.rhs >= 0 && self.coeffs.iter().all(|&c| c == 0 || c == 1)
    }

    /// `-x_j <= 0` for some `j`.
    pub fn nonnegativity_var(&self) -> Option<usize> {
        if self.rhs != 0 {
            return None;
        }
        let mut nz = self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0);
        match (nz.next(), nz.next()) {
            (Some((j, &-1)), None) => Some(j),
            _ => None,
        }
    }

    fn eval(&self, x: &[BigRational]) -> BigRational {
        self.coeffs
            .iter()
            .zip(x)
            .filter(|(&c, _)| c != 0)
            .map(|(&c, xi)| xi * BigRational::from_integer(c.into()))
            .sum()
    }
}

/// `P = { x : row.coeffs . x <= row.rhs for every row }` in dimension `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRep {
    k: usize,
    rows: Vec<Row>,
}

impl HRep {
    pub fn new(k: usize, rows: Vec<Row>) -> Result<Self> {
        if k == 0 {
            return Err(Error::Argument("dimension must be positive".into()));
        }
        if let Some(i) = rows.iter().position(|r| r.coeffs.len() != k) {
            return Err(Error::Argument(format!("row {} has wrong length", i + 1)));
        }
        Ok(Self { k, rows })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    /// Whether `x` satisfies every row.
    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.rows
            .iter()
            .all(|r| r.eval(x) <= BigRational::from_integer(r.rhs.into()))
    }

    /// Indices of rows holding with equality at `x`.
    pub fn tight_rows(&self, x: &[BigRational]) -> Vec<usize> {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.eval(x) == BigRational::from_integer(r.rhs.into()))
            .map(|(i, _)| i)
            .collect()
    }

    /// For systems made of packing and nonnegativity rows, every coordinate
    /// must appear in some packing row. Other systems are not checked.
    pub fn check_bounded(&self) -> Result<()> {
        let packing_form = self
            .rows
            .iter()
            .all(|r| r.is_packing() || r.nonnegativity_var().is_some());
        if !packing_form {
            return Ok(());
        }
        for j in 0..self.k {
            if !self.rows.iter().any(|r| r.is_packing() && r.coeffs[j] == 1) {
                return Err(Error::Unbounded(j + 1));
            }
        }
        Ok(())
    }
}

impl fmt::Display for HRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let mut first = true;
            for (j, &c) in r.coeffs.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                let sign = if c < 0 { "-" } else if first { "" } else { "+" };
                let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
                write!(f, "{sign}{mag}x{}", j + 1)?;
                first = false;
            }
            if first {
                f.write_str("0")?;
            }
            writeln!(f, " <= {}", r.rhs)?;
        }
        Ok(())
    }
}

/// Incidence rows (rhs 1), then nonnegativity rows, then unit bounds if `graph_box`.
///
/// Without the box every vertex must lie in some edge, or `P` is unbounded.
pub fn build_polytope(h: &Hypergraph, graph_box: bool) -> Result<HRep> {
    let k = h.num_vertices();
    if !graph_box {
        if let Some(&v) = h.uncovered().first() {
            return Err(Error::Uncovered(v));
        }
    }
    let mut rows = Vec::with_capacity(h.num_edges() + 2 * k);
    for (i, e) in h.edges().iter().enumerate() {
        let mut coeffs = vec![0; k];
        for &v in e {
            coeffs[v - 1] = 1;
        }
        rows.push(Row { coeffs, rhs: 1, kind: RowKind::Incidence(i) });
    }
    for j in 0..k {
        let mut coeffs = vec![0; k];
        coeffs[j] = -1;
        rows.push(Row { coeffs, rhs: 0, kind: RowKind::NonNegative(j) });
    }
    if graph_box {
        for j in 0..k {
            let mut coeffs = vec![0; k];
            coeffs[j] = 1;
            rows.push(Row { coeffs, rhs: 1, kind: RowKind::UnitBound(j) });
        }
    }
    HRep::new(k, rows)
}

/// An exact point with the least `q` making `q * coords` integral.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalPoint {
    coords: Vec<BigRational>,
    den: u64,
}

impl RationalPoint {
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        let den = coords
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let den = den
            .to_u64()
            .ok_or_else(|| Error::Internal(format!("vertex denominator {den} overflows u64")))?;
        Ok(Self { coords, den })
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    /// Coordinates as `a/b` strings, integers without a slash.
    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coord_strings().join(", "))
    }
}

/// Vertices sorted lexicographically by coordinates, without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    points: Vec<RationalPoint>,
}

impl VertexSet {
    pub fn from_points(points: impl IntoIterator<Item = RationalPoint>) -> Self {
        let set: BTreeSet<RationalPoint> = points.into_iter().collect();
        Self { points: set.into_iter().collect() }
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Every basic feasible solution of `p`, found by scanning all `k`-subsets of rows.
///
/// A subset whose rows are linearly independent has one solution; it is kept
/// if it satisfies the whole system. `vertex_cap` bounds the number of subsets.
pub fn enumerate_vertices(p: &HRep, vertex_cap: u64) -> Result<VertexSet> {
    p.check_bounded()?;
    let (m, k) = (p.rows().len(), p.dim());
    if m < k {
        return Err(Error::Unbounded(1));
    }
    let needed = binomial_u128(m, k);
    if needed.is_none_or(|n| n > u128::from(vertex_cap)) {
        return Err(Error::WorkCap {
            what: "vertex enumeration",
            needed: needed.map_or_else(|| "more than 2^128".into(), |n| n.to_string()),
            cap: vertex_cap,
        });
    }
    let rhs_all: Vec<i64> = p.rows().iter().map(|r| r.rhs).collect();
    let found: Vec<RationalPoint> = (0..m)
        .combinations(k)
        .par_bridge()
        .filter_map(|subset| {
            let lhs: Vec<Vec<i64>> = subset.iter().map(|&i| p.rows()[i].coeffs.clone()).collect();
            let rhs: Vec<i64> = subset.iter().map(|&i| rhs_all[i]).collect();
            match solve_i64(&lhs, &rhs) {
                Solve::Unique(x) if p.contains(&x) => Some(RationalPoint::new(x)),
                _ => None,
            }
        })
        .collect::<Result<_>>()?;
    let vs = VertexSet::from_points(found);
    if vs.is_empty() {
        return Err(Error::Internal("polytope has no vertices".into()));
    }
    Ok(vs)
}

fn binomial_u128(n: usize, k: usize) -> Option<u128> {
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// `den` of each vertex, in vertex order.
pub fn vertex_denominators(vs: &VertexSet) -> Vec<u64> {
    vs.points().iter().map(RationalPoint::den).collect()
}

pub fn is_integral(vs: &VertexSet) -> bool {
    vs.points().iter().all(|p| p.den() == 1)
}

/// Rank of a set of integer row vectors, by exact elimination.
pub fn rank(rows: &[&[i64]]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| BigRational::from_integer(c.into())).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let pivot = a[rank][c].clone();
        for i in 0..a.len() {
            if i != rank && !a[i][c].is_zero() {
                let factor = &a[i][c] / &pivot;
                let pivot_row = a[rank].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot_row).skip(c) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether `x` is a vertex of `p` by the rank test: feasible, with `k`
/// linearly independent tight rows.
pub fn is_vertex(p: &HRep, x: &[BigRational]) -> bool {
    if !p.contains(x) {
        return false;
    }
    let tight = p.tight_rows(x);
    let coeffs: Vec<&[i64]> = tight.iter().map(|&i| p.rows()[i].coeffs.as_slice()).collect();
    rank(&coeffs) == p.dim()
}

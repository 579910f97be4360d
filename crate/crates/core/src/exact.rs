//! Fraction-free integer elimination.
//!
//! Both routines are generic over the integer type so the hot loops can run
//! on `i128` with checked arithmetic and fall back to `BigInt` when an
//! intermediate minor does not fit. Every intermediate value is a minor of
//! the input, so the divisions are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{CheckedDiv, CheckedMul, CheckedSub, One, Zero};

pub trait ExactInt: Clone + Zero + One + PartialEq + CheckedMul + CheckedSub + CheckedDiv {
    fn neg(&self) -> Self;
    fn to_bigint(&self) -> BigInt;
}

impl ExactInt for i128 {
    fn neg(&self) -> Self {
        -*self
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn neg(&self) -> Self {
        -self
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// `(a*b - c*d) / e`, `None` on overflow.
fn cross<T: ExactInt>(a: &T, b: &T, c: &T, d: &T, e: &T) -> Option<T> {
    let lhs = a.checked_mul(b)?;
    let rhs = c.checked_mul(d)?;
    lhs.checked_sub(&rhs)?.checked_div(e)
}

/// Bareiss determinant of a square matrix. `None` signals overflow.
pub fn determinant<T: ExactInt>(matrix: &[Vec<T>]) -> Option<T> {
    let n = matrix.len();
    let mut a: Vec<Vec<T>> = matrix.to_vec();
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return Some(T::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = cross(&a[k][k], &a[i][j], &a[i][k], &a[k][j], &prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = if n == 0 { T::one() } else { a[n - 1][n - 1].clone() };
    Some(if negate { det.neg() } else { det })
}

/// Determinant of a small integer matrix, exact at any size.
pub fn determinant_i64(matrix: &[Vec<i64>]) -> BigInt {
    let narrow: Vec<Vec<i128>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    if let Some(det) = determinant(&narrow) {
        return BigInt::from(det);
    }
    let wide: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    determinant(&wide).expect("BigInt elimination cannot overflow")
}

/// Outcome of solving a square system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solve {
    Unique(Vec<BigRational>),
    Singular,
}

/// Fraction-free Gauss-Jordan on `[A | b]`. Outer `None` signals overflow.
pub fn solve<T: ExactInt>(lhs: &[Vec<T>], rhs: &[T]) -> Option<Solve> {
    let n = lhs.len();
    let mut a: Vec<Vec<T>> = lhs
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut prev = T::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Some(Solve::Singular);
        };
        a.swap(p, k);
        for i in 0..n {
            if i == k {
                continue;
            }
            for j in 0..=n {
                if j == k {
                    continue;
                }
                a[i][j] = cross(&a[k][k], &a[i][j], &a[i][k], &a[k][j], &prev)?;
            }
            a[i][k] = T::zero();
        }
        prev = a[k][k].clone();
    }
    let x = (0..n)
        .map(|i| BigRational::new(a[i][n].to_bigint(), a[i][i].to_bigint()))
        .collect();
    Some(Solve::Unique(x))
}

/// Solve a small integer system exactly, widening to `BigInt` if needed.
pub fn solve_i64(lhs: &[Vec<i64>], rhs: &[i64]) -> Solve {
    let narrow: Vec<Vec<i128>> = lhs
        .iter()
        .map(|row| row.iter().map(|&v| v as i128).collect())
        .collect();
    let narrow_rhs: Vec<i128> = rhs.iter().map(|&v| v as i128).collect();
    if let Some(s) = solve(&narrow, &narrow_rhs) {
        return s;
    }
    let wide: Vec<Vec<BigInt>> = lhs
        .iter()
        .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
        .collect();
    let wide_rhs: Vec<BigInt> = rhs.iter().map(|&v| BigInt::from(v)).collect();
    solve(&wide, &wide_rhs).expect("BigInt elimination cannot overflow")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Leibniz expansion over all permutations; independent of elimination.
    fn leibniz(m: &[Vec<i64>]) -> BigInt {
        let n = m.len();
        let mut total = BigInt::zero();
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(m: &[Vec<i64>], perm: &mut Vec<usize>, k: usize, total: &mut BigInt) {
            let n = perm.len();
            if k == n {
                let mut inversions = 0;
                for i in 0..n {
                    for j in i + 1..n {
                        if perm[i] > perm[j] {
                            inversions += 1;
                        }
                    }
                }
                let mut prod = BigInt::one();
                for (i, &p) in perm.iter().enumerate() {
                    prod *= m[i][p];
                }
                if inversions % 2 == 1 {
                    prod = -prod;
                }
                *total += prod;
                return;
            }
            for i in k..n {
                perm.swap(k, i);
                rec(m, perm, k + 1, total);
                perm.swap(k, i);
            }
        }
        rec(m, &mut perm, 0, &mut total);
        total
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant_i64(&[]), BigInt::one());
        assert_eq!(determinant_i64(&[vec![1]]), BigInt::one());
        assert_eq!(determinant_i64(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        // odd cycle incidence
        let c3 = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(determinant_i64(&c3), BigInt::from(2));
    }

    #[test]
    fn widening_fallback() {
        let big = i64::MAX / 2;
        let m = vec![vec![big, 1], vec![1, big]];
        assert_eq!(determinant_i64(&m), leibniz(&m));
    }

    #[test]
    fn triangle_vertex() {
        let lhs = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(
            solve_i64(&lhs, &[1, 1, 1]),
            Solve::Unique(vec![half.clone(), half.clone(), half])
        );
        assert_eq!(solve_i64(&[vec![1, 1], vec![2, 2]], &[1, 1]), Solve::Singular);
    }

    proptest! {
        #[test]
        fn bareiss_matches_leibniz(n in 1usize..6, seed in proptest::collection::vec(-3i64..=3, 25)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 5 + j]).collect()).collect();
            prop_assert_eq!(determinant_i64(&m), leibniz(&m));
        }

        #[test]
        fn solution_satisfies_system(n in 1usize..6, seed in proptest::collection::vec(-3i64..=3, 30)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| seed[i * 5 + j]).collect()).collect();
            let b: Vec<i64> = (0..n).map(|i| seed[25 + i]).collect();
            match solve_i64(&m, &b) {
                Solve::Unique(x) => {
                    prop_assert!(!leibniz(&m).is_zero());
                    for (row, rhs) in m.iter().zip(&b) {
                        let lhs: BigRational = row
                            .iter()
                            .zip(&x)
                            .map(|(&a, xi)| xi * BigRational::from_integer(a.into()))
                            .sum();
                        prop_assert_eq!(lhs, BigRational::from_integer((*rhs).into()));
                    }
                }
                Solve::Singular => prop_assert!(leibniz(&m).is_zero()),
            }
        }
    }
}

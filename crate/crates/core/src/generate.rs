//! Standard graph families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Hypercube,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Hypercube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s || f.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Argument(format!("unknown family '{s}'")))
    }
}

fn arity(family: Family, params: &[i64], n: usize) -> Result<()> {
    if params.len() != n {
        return Err(Error::Argument(format!(
            "{family} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

fn at_least(family: Family, value: i64, min: i64) -> Result<usize> {
    if value < min {
        return Err(Error::Argument(format!("{family} needs a parameter >= {min}, got {value}")));
    }
    Ok(value as usize)
}

/// Generate a member of `family`; vertices are labelled `1..=k`.
///
/// `path 1` is the single loop `{1}`, the only way to cover one vertex.
pub fn generate_family(family: Family, params: &[i64]) -> Result<Hypergraph> {
    let (k, edges) = match family {
        Family::Path => {
            arity(family, params, 1)?;
            let n = at_least(family, params[0], 1)?;
            if n == 1 {
                (1, vec![vec![1]])
            } else {
                (n, (1..n).map(|i| vec![i, i + 1]).collect())
            }
        }
        Family::Cycle => {
            arity(family, params, 1)?;
            let n = at_least(family, params[0], 3)?;
            let mut edges: Vec<Vec<usize>> = (1..n).map(|i| vec![i, i + 1]).collect();
            edges.push(vec![n, 1]);
            (n, edges)
        }
        Family::Complete => {
            arity(family, params, 1)?;
            let n = at_least(family, params[0], 2)?;
            let edges = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| vec![i, j]))
                .collect();
            (n, edges)
        }
        Family::CompleteBipartite => {
            arity(family, params, 2)?;
            let a = at_least(family, params[0], 1)?;
            let b = at_least(family, params[1], 1)?;
            let edges = (1..=a)
                .flat_map(|i| (1..=b).map(move |j| vec![i, a + j]))
                .collect();
            (a + b, edges)
        }
        Family::Hypercube => {
            arity(family, params, 1)?;
            let d = at_least(family, params[0], 1)?;
            if d > 20 {
                return Err(Error::Argument(format!("hypercube dimension {d} is too large")));
            }
            let n = 1usize << d;
            let mut edges = Vec::new();
            for u in 0..n {
                for bit in 0..d {
                    if u & (1 << bit) == 0 {
                        edges.push(vec![u + 1, (u | (1 << bit)) + 1]);
                    }
                }
            }
            (n, edges)
        }
    };
    Hypergraph::new(k, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::validate;

    #[test]
    fn four_cycle() {
        let h = generate_family(Family::Cycle, &[4]).unwrap();
        assert_eq!(h.num_vertices(), 4);
        assert_eq!(h.edges(), &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]);
    }

    #[test]
    fn square_is_a_four_cycle() {
        let h = generate_family(Family::Hypercube, &[2]).unwrap();
        assert_eq!(h.num_vertices(), 4);
        assert_eq!(h.num_edges(), 4);
        assert!((1..=4).all(|v| h.degree(v) == 2));
        let p = validate(&h);
        assert!(p.is_connected && p.is_graph);
    }

    #[test]
    fn single_vertex_path_is_a_loop() {
        let h = generate_family(Family::Path, &[1]).unwrap();
        assert_eq!(h.num_vertices(), 1);
        assert_eq!(h.edges(), &[vec![1]]);
    }

    #[test]
    fn sizes() {
        let k5 = generate_family(Family::Complete, &[5]).unwrap();
        assert_eq!(k5.num_edges(), 10);
        let k23 = generate_family(Family::CompleteBipartite, &[2, 3]).unwrap();
        assert_eq!((k23.num_vertices(), k23.num_edges()), (5, 6));
        let q3 = generate_family(Family::Hypercube, &[3]).unwrap();
        assert_eq!((q3.num_vertices(), q3.num_edges()), (8, 12));
        assert_eq!(q3.is_bipartite_graph(), Some(true));
    }

    #[test]
    fn cycles_are_connected_and_two_uniform() {
        for n in 3..=10 {
            let p = validate(&generate_family(Family::Cycle, &[n]).unwrap());
            assert_eq!(p.uniform_s, Some(2));
            assert!(p.is_connected);
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(generate_family(Family::Path, &[0]).is_err());
        assert!(generate_family(Family::Cycle, &[2]).is_err());
        assert!(generate_family(Family::Complete, &[1]).is_err());
        assert!(generate_family(Family::CompleteBipartite, &[1]).is_err());
        assert!(generate_family(Family::CompleteBipartite, &[0, 2]).is_err());
        assert!(generate_family(Family::Hypercube, &[0]).is_err());
        assert!("nonsense".parse::<Family>().is_err());
        assert_eq!("complete-bipartite".parse::<Family>().unwrap(), Family::CompleteBipartite);
    }
}

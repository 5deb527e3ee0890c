//! Exhaustive search for antimagic orientations of tiny graphs.
//!
//! Orientations are visited in Gray-code order and, for each, labelings are
//! built edge by edge in lexicographic order. A branch is cut as soon as two
//! vertices whose edges are all labeled share a sum.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{verify_antimagic, Certificate, Graph, Labeling, Orientation};

/// Largest edge count the oracle accepts.
pub const ORACLE_MAX_EDGES: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleStatus {
    Exists,
    NotExists,
    /// The node budget ran out before the search finished.
    Inconclusive,
}

impl fmt::Display for OracleStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleStatus::Exists => "exists",
            OracleStatus::NotExists => "not-exists",
            OracleStatus::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub status: OracleStatus,
    /// Present exactly when `status` is `Exists`; always verified.
    pub witness: Option<Certificate>,
    /// Complete (orientation, labeling) pairs ruled out or checked,
    /// counting every pair below a pruned branch.
    pub explored: u64,
    /// Search nodes visited; this is what the budget limits.
    pub nodes: u64,
}

impl OracleResult {
    pub fn exists(&self) -> bool {
        self.status == OracleStatus::Exists
    }
}

fn factorial(k: usize) -> u64 {
    (1..=k as u64).product()
}

/// Edge order that completes vertices early: repeatedly take the vertex with
/// the fewest unordered edges left and append them.
fn elimination_order(g: &Graph) -> Vec<usize> {
    let mut left: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut taken = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    while order.len() < g.m() {
        let v = (0..g.n())
            .filter(|&v| left[v] > 0)
            .min_by_key(|&v| (left[v], v))
            .expect("an edge is left");
        let mut edges: Vec<usize> = g
            .incident(v)
            .iter()
            .map(|&(_, e)| e)
            .filter(|&e| !taken[e])
            .collect();
        edges.sort_unstable();
        for e in edges {
            taken[e] = true;
            let (a, b) = g.endpoints(e);
            left[a] -= 1;
            left[b] -= 1;
            order.push(e);
        }
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    tails: Vec<usize>,
    heads: Vec<usize>,
    sums: Vec<i64>,
    left: Vec<usize>,
    labels: Vec<u64>,
    used: u32,
    budget: u64,
    nodes: u64,
    explored: u64,
}

enum Step {
    Found,
    Exhausted,
    OutOfBudget,
}

impl Search<'_> {
    /// `true` if vertex `v`, just completed, collides with another complete vertex.
    fn collides(&self, v: usize) -> bool {
        (0..self.g.n()).any(|u| u != v && self.left[u] == 0 && self.sums[u] == self.sums[v])
    }

    fn dfs(&mut self, depth: usize) -> Step {
        let m = self.order.len();
        if depth == m {
            self.explored += 1;
            return Step::Found;
        }
        let e = self.order[depth];
        let (t, h) = (self.tails[e], self.heads[e]);
        for label in 1..=m as u64 {
            let bit = 1u32 << (label - 1);
            if self.used & bit != 0 {
                continue;
            }
            if self.nodes >= self.budget {
                return Step::OutOfBudget;
            }
            self.nodes += 1;
            self.used |= bit;
            self.labels[e] = label;
            self.sums[h] += label as i64;
            self.sums[t] -= label as i64;
            self.left[h] -= 1;
            self.left[t] -= 1;
            let bad = (self.left[h] == 0 && self.collides(h)) || (self.left[t] == 0 && self.collides(t));
            let step = if bad {
                self.explored += factorial(m - depth - 1);
                Step::Exhausted
            } else {
                self.dfs(depth + 1)
            };
            if matches!(step, Step::Found) {
                return step;
            }
            self.left[h] += 1;
            self.left[t] += 1;
            self.sums[h] -= label as i64;
            self.sums[t] += label as i64;
            self.used &= !bit;
            self.labels[e] = 0;
            if matches!(step, Step::OutOfBudget) {
                return step;
            }
        }
        Step::Exhausted
    }
}

/// Decides by exhaustive search whether `g` has an antimagic orientation,
/// visiting at most `budget` search nodes.
pub fn brute_force_antimagic(g: &Graph, budget: u64) -> Result<OracleResult> {
    let m = g.m();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::Precondition(format!(
            "oracle handles at most {ORACLE_MAX_EDGES} edges, graph has {m}"
        )));
    }
    // vertices without edges all sum to zero
    let isolated = (0..g.n()).filter(|&v| g.degree(v) == 0).count();
    let mut search = Search {
        g,
        order: elimination_order(g),
        tails: vec![0; m],
        heads: vec![0; m],
        sums: vec![0; g.n()],
        left: (0..g.n()).map(|v| g.degree(v)).collect(),
        labels: vec![0; m],
        used: 0,
        budget,
        nodes: 0,
        explored: 0,
    };
    let mut flags = vec![true; m];
    for k in 0u64..(1u64 << m) {
        if k > 0 {
            // Gray code: flip the lowest set bit position of k
            flags[k.trailing_zeros() as usize] ^= true;
        }
        let orientation = Orientation::from_flags(flags.clone());
        for e in 0..m {
            search.tails[e] = orientation.tail(g, e);
            search.heads[e] = orientation.head(g, e);
        }
        if isolated > 1 {
            search.explored += factorial(m);
            continue;
        }
        match search.dfs(0) {
            Step::Found => {
                let cert = Certificate::new(g.clone(), orientation, Labeling::new(search.labels.clone()))?;
                if !verify_antimagic(&cert).is_accept() {
                    return Err(Error::Internal("oracle witness failed verification".into()));
                }
                return Ok(OracleResult {
                    status: OracleStatus::Exists,
                    witness: Some(cert),
                    explored: search.explored,
                    nodes: search.nodes,
                });
            }
            Step::OutOfBudget => {
                return Ok(OracleResult {
                    status: OracleStatus::Inconclusive,
                    witness: None,
                    explored: search.explored,
                    nodes: search.nodes,
                });
            }
            Step::Exhausted => {}
        }
    }
    Ok(OracleResult {
        status: OracleStatus::NotExists,
        witness: None,
        explored: search.explored,
        nodes: search.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: u64 = 10_000_000;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.to_vec()).unwrap()
    }

    #[test]
    fn single_edge() {
        let r = brute_force_antimagic(&g(2, &[(0, 1)]), BUDGET).unwrap();
        assert!(r.exists());
        assert_eq!(r.witness.unwrap().labeling.labels(), &[1]);
    }

    #[test]
    fn path_with_two_edges() {
        let r = brute_force_antimagic(&g(3, &[(0, 1), (1, 2)]), BUDGET).unwrap();
        assert_eq!(r.status, OracleStatus::Exists);
        let w = r.witness.unwrap();
        let mut sums = w.sums.clone();
        sums.sort();
        sums.dedup();
        assert_eq!(sums.len(), 3);
    }

    #[test]
    fn star_k13() {
        let r = brute_force_antimagic(&g(4, &[(0, 1), (0, 2), (0, 3)]), BUDGET).unwrap();
        assert!(r.exists());
        assert!(verify_antimagic(r.witness.as_ref().unwrap()).is_accept());
    }

    #[test]
    fn two_isolated_vertices_never_work() {
        let r = brute_force_antimagic(&g(4, &[(0, 1)]), BUDGET).unwrap();
        assert_eq!(r.status, OracleStatus::NotExists);
        assert_eq!(r.explored, 2);
        let empty = brute_force_antimagic(&Graph::empty(1), BUDGET).unwrap();
        assert!(empty.exists());
    }

    #[test]
    fn triangle_exists_and_counts_pruned_pairs() {
        let r = brute_force_antimagic(&g(3, &[(0, 1), (1, 2), (2, 0)]), BUDGET).unwrap();
        assert!(r.exists());
        // the cyclic orientation comes first and fails for every labeling
        assert!(r.explored > 6);
    }

    #[test]
    fn budget_and_cap() {
        let k5 = crate::generate::complete(5);
        let r = brute_force_antimagic(&k5, 3).unwrap();
        assert_eq!(r.status, OracleStatus::Inconclusive);
        assert!(r.witness.is_none());
        let k6 = crate::generate::complete(6);
        assert!(matches!(
            brute_force_antimagic(&k6, BUDGET),
            Err(Error::Precondition(_))
        ));
    }
}

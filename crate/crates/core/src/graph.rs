//! Graphs, orientations, labelings and the antimagic verifier.
//!
//! Vertices are dense ids `0..n`. Edges are stored once, in insertion order,
//! and every algorithm in the crate refers to them by index. An
//! [`Orientation`] and a [`Labeling`] are both indexed by edge.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest edge count any pipeline accepts; keeps every vertex sum well inside `i64`.
pub const MAX_EDGES: usize = 1 << 30;

/// A simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated pairs and out-of-range ids.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::Malformed(format!(
                    "edge {i} ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::Malformed(format!("edge {i} is a self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Malformed(format!("edge {i} ({u}, {v}) is repeated")));
            }
        }
        Ok(Self::new_unchecked(n, edges))
    }

    fn new_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        Graph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `(neighbor, edge index)` pairs at `v`, in edge insertion order.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(|&(u, _)| u)
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj[a].iter().find_map(|&(w, e)| (w == b).then_some(e))
    }

    /// Spanning subgraph on the same vertex set keeping the listed edges, in the
    /// given order. The returned map sends each new edge index to its index here.
    pub fn spanning_subgraph(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let edges = keep.iter().map(|&e| self.edges[e]).collect();
        (Graph::new_unchecked(self.n, edges), keep.to_vec())
    }

    /// Edges with both endpoints inside `mask`.
    pub fn induced_edges(&self, mask: &[bool]) -> Vec<usize> {
        (0..self.m())
            .filter(|&e| {
                let (u, v) = self.edges[e];
                mask[u] && mask[v]
            })
            .collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let v = members[i];
                i += 1;
                for &(u, _) in &self.adj[v] {
                    if comp[u] == usize::MAX {
                        comp[u] = id;
                        members.push(u);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }
}

/// Direction of every edge: `forward[e]` means the arc runs from the first
/// stored endpoint of `e` to the second.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn all_forward(m: usize) -> Self {
        Orientation {
            forward: vec![true; m],
        }
    }

    pub fn from_flags(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn flags(&self) -> &[bool] {
        &self.forward
    }

    /// Points `e` away from `tail`.
    pub fn set_tail(&mut self, g: &Graph, e: usize, tail: usize) {
        let (a, b) = g.endpoints(e);
        debug_assert!(tail == a || tail == b);
        self.forward[e] = tail == a;
    }

    pub fn tail(&self, g: &Graph, e: usize) -> usize {
        let (a, b) = g.endpoints(e);
        if self.forward[e] {
            a
        } else {
            b
        }
    }

    pub fn head(&self, g: &Graph, e: usize) -> usize {
        let (a, b) = g.endpoints(e);
        if self.forward[e] {
            b
        } else {
            a
        }
    }
}

/// Label of every edge, indexed by edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    labels: Vec<u64>,
}

impl Labeling {
    pub fn new(labels: Vec<u64>) -> Self {
        Labeling { labels }
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn get(&self, e: usize) -> u64 {
        self.labels[e]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Labels in ascending order.
    pub fn sorted(&self) -> Vec<u64> {
        let mut v = self.labels.clone();
        v.sort_unstable();
        v
    }
}

/// Oriented vertex sums: labels entering minus labels leaving.
pub fn oriented_vertex_sums(g: &Graph, orientation: &Orientation, labeling: &Labeling) -> Result<Vec<i64>> {
    if orientation.len() != g.m() {
        return Err(Error::Malformed(format!(
            "orientation covers {} edges, graph has {}",
            orientation.len(),
            g.m()
        )));
    }
    if labeling.len() != g.m() {
        return Err(Error::Malformed(format!(
            "labeling covers {} edges, graph has {}",
            labeling.len(),
            g.m()
        )));
    }
    let mut first_use = HashMap::with_capacity(g.m());
    for (e, &l) in labeling.labels().iter().enumerate() {
        if let Some(prev) = first_use.insert(l, e) {
            return Err(Error::Malformed(format!(
                "label {l} used on edges {prev} and {e}"
            )));
        }
    }
    Ok(sums_unchecked(g, orientation, labeling))
}

pub(crate) fn sums_unchecked(g: &Graph, orientation: &Orientation, labeling: &Labeling) -> Vec<i64> {
    let mut sums = vec![0i64; g.n()];
    for e in 0..g.m() {
        let l = labeling.get(e) as i64;
        sums[orientation.head(g, e)] += l;
        sums[orientation.tail(g, e)] -= l;
    }
    sums
}

/// An orientation and labeling of a graph together with the vertex sums they induce.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub graph: Graph,
    pub orientation: Orientation,
    pub labeling: Labeling,
    pub sums: Vec<i64>,
}

impl Certificate {
    /// Computes the sums; fails on shape mismatch or repeated labels.
    pub fn new(graph: Graph, orientation: Orientation, labeling: Labeling) -> Result<Self> {
        let sums = oriented_vertex_sums(&graph, &orientation, &labeling)?;
        Ok(Certificate {
            graph,
            orientation,
            labeling,
            sums,
        })
    }

    /// Arcs as `(tail, head, label)` in edge order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.graph.m()).map(move |e| {
            (
                self.orientation.tail(&self.graph, e),
                self.orientation.head(&self.graph, e),
                self.labeling.get(e),
            )
        })
    }
}

/// First problem found by [`verify_antimagic`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// The certificate does not describe one arc and one label per edge.
    Shape {
        detail: String,
    },
    LabelOutOfRange {
        edge: usize,
        label: u64,
        max: u64,
    },
    DuplicateLabel {
        label: u64,
        first: usize,
        second: usize,
    },
    /// A recorded sum disagrees with the one recomputed from the arcs.
    SumMismatch {
        vertex: usize,
        recorded: i64,
        actual: i64,
    },
    DuplicateSum {
        u: usize,
        v: usize,
        sum: i64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { detail } => write!(f, "malformed certificate: {detail}"),
            Violation::LabelOutOfRange { edge, label, max } => {
                write!(
                    f,
                    "label-out-of-range: edge {edge} has label {label} outside [1, {max}]"
                )
            }
            Violation::DuplicateLabel { label, first, second } => {
                write!(f, "duplicate-label: {label} on edges {first} and {second}")
            }
            Violation::SumMismatch {
                vertex,
                recorded,
                actual,
            } => write!(
                f,
                "sum-mismatch: vertex {vertex} records {recorded}, arcs give {actual}"
            ),
            Violation::DuplicateSum { u, v, sum } => {
                write!(f, "duplicate-sum: vertices {u} and {v} both have sum {sum}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(Violation),
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

/// Accepts iff the labeling is a bijection onto `1..=m`, the recorded sums are
/// the true oriented sums, and those sums are pairwise distinct.
///
/// Checks run in that order and the first failure is reported.
pub fn verify_antimagic(cert: &Certificate) -> Verdict {
    let g = &cert.graph;
    let m = g.m();
    if cert.orientation.len() != m || cert.labeling.len() != m || cert.sums.len() != g.n() {
        return Verdict::Reject(Violation::Shape {
            detail: format!(
                "{} orientation flags, {} labels, {} sums for a graph with {} edges and {} vertices",
                cert.orientation.len(),
                cert.labeling.len(),
                cert.sums.len(),
                m,
                g.n()
            ),
        });
    }
    let max = m as u64;
    let mut owner = vec![usize::MAX; m + 1];
    for (e, &l) in cert.labeling.labels().iter().enumerate() {
        if l == 0 || l > max {
            return Verdict::Reject(Violation::LabelOutOfRange {
                edge: e,
                label: l,
                max,
            });
        }
    }
    for (e, &l) in cert.labeling.labels().iter().enumerate() {
        let slot = &mut owner[l as usize];
        if *slot != usize::MAX {
            return Verdict::Reject(Violation::DuplicateLabel {
                label: l,
                first: *slot,
                second: e,
            });
        }
        *slot = e;
    }
    let actual = sums_unchecked(g, &cert.orientation, &cert.labeling);
    for v in 0..g.n() {
        if actual[v] != cert.sums[v] {
            return Verdict::Reject(Violation::SumMismatch {
                vertex: v,
                recorded: cert.sums[v],
                actual: actual[v],
            });
        }
    }
    let mut first_with = HashMap::with_capacity(g.n());
    for (v, &s) in actual.iter().enumerate() {
        if let Some(&u) = first_with.get(&s) {
            return Verdict::Reject(Violation::DuplicateSum { u, v, sum: s });
        }
        first_with.insert(s, v);
    }
    Verdict::Accept
}

/// A proper 2-coloring; `side[v]` is false for the X side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side: Vec<bool>,
}

impl Bipartition {
    pub fn x(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| !self.side[v]).collect()
    }

    pub fn y(&self) -> Vec<usize> {
        (0..self.side.len()).filter(|&v| self.side[v]).collect()
    }
}

/// Breadth-first 2-coloring; the smallest vertex of every component lands in X.
pub fn bipartition(g: &Graph) -> Result<Bipartition> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            for &(u, _) in g.incident(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!cv);
                        parent[u] = v;
                        depth[u] = depth[v] + 1;
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => {
                        return Err(Error::NotBipartite {
                            cycle: odd_cycle(&parent, &depth, v, u),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Bipartition {
        side: color.into_iter().map(|c| c.unwrap()).collect(),
    })
}

fn odd_cycle(parent: &[usize], depth: &[usize], mut a: usize, mut b: usize) -> Vec<usize> {
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(n: usize, arcs: &[(usize, usize, u64)]) -> Certificate {
        let g = Graph::new(n, arcs.iter().map(|&(t, h, _)| (t, h)).collect()).unwrap();
        let o = Orientation::all_forward(g.m());
        let l = Labeling::new(arcs.iter().map(|a| a.2).collect());
        Certificate::new(g, o, l).unwrap()
    }

    #[test]
    fn single_arc_sums() {
        let c = cert(2, &[(0, 1, 1)]);
        assert_eq!(c.sums, vec![-1, 1]);
        assert_eq!(verify_antimagic(&c), Verdict::Accept);
    }

    #[test]
    fn directed_triangle_sums_collide() {
        let c = cert(3, &[(0, 1, 1), (1, 2, 2), (2, 0, 3)]);
        assert_eq!(c.sums, vec![2, -1, -1]);
        assert_eq!(
            verify_antimagic(&c),
            Verdict::Reject(Violation::DuplicateSum { u: 1, v: 2, sum: -1 })
        );
    }

    #[test]
    fn empty_graph_sums_are_zero() {
        let g = Graph::empty(3);
        let s = oriented_vertex_sums(&g, &Orientation::all_forward(0), &Labeling::new(vec![])).unwrap();
        assert_eq!(s, vec![0, 0, 0]);
    }

    #[test]
    fn sums_reject_bad_labelings() {
        let g = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        let o = Orientation::all_forward(2);
        assert!(matches!(
            oriented_vertex_sums(&g, &o, &Labeling::new(vec![1])),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(
            oriented_vertex_sums(&g, &o, &Labeling::new(vec![2, 2])),
            Err(Error::Malformed(_))
        ));
    }

    #[test]
    fn verifier_reports_label_problems() {
        let mut c = cert(3, &[(0, 1, 1), (1, 2, 2)]);
        c.labeling = Labeling::new(vec![1, 3]);
        assert!(matches!(
            verify_antimagic(&c),
            Verdict::Reject(Violation::LabelOutOfRange {
                edge: 1,
                label: 3,
                max: 2
            })
        ));
        c.labeling = Labeling::new(vec![2, 2]);
        assert!(matches!(
            verify_antimagic(&c),
            Verdict::Reject(Violation::DuplicateLabel {
                label: 2,
                first: 0,
                second: 1
            })
        ));
        c.labeling = Labeling::new(vec![2, 1]);
        assert!(matches!(
            verify_antimagic(&c),
            Verdict::Reject(Violation::SumMismatch { vertex: 0, .. })
        ));
    }

    #[test]
    fn graph_rejects_non_simple_input() {
        assert!(Graph::new(2, vec![(0, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 1), (1, 0)]).is_err());
        assert!(Graph::new(2, vec![(0, 2)]).is_err());
    }

    #[test]
    fn path_bipartition() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = bipartition(&g).unwrap();
        assert_eq!(b.x(), vec![0, 2]);
        assert_eq!(b.y(), vec![1, 3]);
    }

    #[test]
    fn triangle_is_not_bipartite() {
        let g = Graph::new(3, vec![(0, 1), (1, 2), (2, 0)]).unwrap();
        match bipartition(&g) {
            Err(Error::NotBipartite { cycle }) => {
                assert_eq!(cycle.len(), 3);
                let mut c = cycle.clone();
                c.sort();
                assert_eq!(c, vec![0, 1, 2]);
            }
            other => panic!("expected odd cycle, got {other:?}"),
        }
    }

    #[test]
    fn odd_cycle_witness_is_a_cycle() {
        // 5-cycle with a pendant path
        let g = Graph::new(7, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)]).unwrap();
        let Err(Error::NotBipartite { cycle }) = bipartition(&g) else {
            panic!("5-cycle is not bipartite")
        };
        assert_eq!(cycle.len() % 2, 1);
        for i in 0..cycle.len() {
            let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
            assert!(g.edge_between(a, b).is_some(), "{a}-{b} missing from {cycle:?}");
        }
    }

    #[test]
    fn two_squares_bipartition() {
        let g = Graph::new(
            8,
            vec![(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4)],
        )
        .unwrap();
        let b = bipartition(&g).unwrap();
        for &(u, v) in g.edges() {
            assert_ne!(b.side[u], b.side[v]);
        }
        assert_eq!(b.x(), vec![0, 2, 4, 6]);
    }
}

//! Maximum bipartite matching and the S/T partition.
//!
//! [`st_partition`] splits the vertices of a bipartite graph into `S` and `T`
//! such that `T` is independent and some matching between `S` and `T`
//! saturates `S`. When a maximum matching leaves part of the smaller side `X`
//! unsaturated, the sets are grown by alternating layers:
//!
//! ```text
//! B_0 = N(X_0)          A_0 = M(B_0)
//! B_i = N(A_{i-1}) \ (B_0 ∪ … ∪ B_{i-1})
//! A_i = M(B_i)
//! S   = B ∪ X_r         T = A ∪ Y_r ∪ X_0 ∪ Y_0
//! ```
//!
//! with `X_0, Y_0` the unsaturated vertices and `X_r = X_1 \ A`,
//! `Y_r = Y_1 \ B`.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{bipartition, Graph};

const NIL: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    /// Matched edge indices, ascending.
    pub edges: Vec<usize>,
    mate: Vec<usize>,
}

impl Matching {
    pub fn empty(n: usize) -> Self {
        Matching {
            edges: Vec::new(),
            mate: vec![NIL; n],
        }
    }

    /// Builds a matching from edge indices, rejecting edges that share a vertex.
    pub fn from_edges(g: &Graph, mut edges: Vec<usize>) -> Result<Self> {
        let mut mate = vec![NIL; g.n()];
        for &e in &edges {
            let (u, v) = g.endpoints(e);
            if mate[u] != NIL || mate[v] != NIL {
                return Err(Error::Malformed(format!(
                    "edge {e} shares a vertex with another matched edge"
                )));
            }
            mate[u] = v;
            mate[v] = u;
        }
        edges.sort_unstable();
        Ok(Matching { edges, mate })
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        (self.mate[v] != NIL).then_some(self.mate[v])
    }

    pub fn is_saturated(&self, v: usize) -> bool {
        self.mate[v] != NIL
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn check_sides(g: &Graph, x: &[usize], y: &[usize]) -> Result<Vec<bool>> {
    let n = g.n();
    let mut in_x = vec![false; n];
    let mut placed = vec![false; n];
    for (side, list) in [(true, x), (false, y)] {
        for &v in list {
            if v >= n || placed[v] {
                return Err(Error::structural(
                    v.min(n.saturating_sub(1)),
                    "vertex listed twice or out of range",
                ));
            }
            placed[v] = true;
            in_x[v] = side;
        }
    }
    if let Some(v) = placed.iter().position(|&p| !p) {
        return Err(Error::structural(v, "vertex on neither side"));
    }
    for &(u, v) in g.edges() {
        if in_x[u] == in_x[v] {
            return Err(Error::structural(
                u,
                format!("edge {u}-{v} does not cross the bipartition"),
            ));
        }
    }
    Ok(in_x)
}

/// Hopcroft–Karp maximum matching for the bipartition `(x, y)`.
pub fn maximum_matching(g: &Graph, x: &[usize], y: &[usize]) -> Result<Matching> {
    check_sides(g, x, y)?;
    Ok(hopcroft_karp(g, x))
}

fn hopcroft_karp(g: &Graph, x: &[usize]) -> Matching {
    let n = g.n();
    let mut mate = vec![NIL; n];
    let mut dist = vec![usize::MAX; n];
    loop {
        // layered BFS from free X vertices
        let mut queue = VecDeque::new();
        for &u in x {
            if mate[u] == NIL {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for &(w, _) in g.incident(u) {
                match mate[w] {
                    NIL => found = true,
                    next if dist[next] == usize::MAX => {
                        dist[next] = dist[u] + 1;
                        queue.push_back(next);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        let mut cursor = vec![0usize; n];
        for &u in x {
            if mate[u] == NIL {
                augment(g, u, &mut mate, &mut dist, &mut cursor);
            }
        }
    }
    let mut edges: Vec<usize> = x
        .iter()
        .filter(|&&u| mate[u] != NIL)
        .map(|&u| g.edge_between(u, mate[u]).expect("matched pair is an edge"))
        .collect();
    edges.sort_unstable();
    Matching { edges, mate }
}

/// Iterative DFS along the BFS layers; augments one path if it finds one.
fn augment(g: &Graph, root: usize, mate: &mut [usize], dist: &mut [usize], cursor: &mut [usize]) -> bool {
    let mut path: Vec<(usize, usize)> = Vec::new(); // (x vertex, y vertex chosen)
    let mut u = root;
    loop {
        let adj = g.incident(u);
        let mut advanced = false;
        while cursor[u] < adj.len() {
            let w = adj[cursor[u]].0;
            cursor[u] += 1;
            match mate[w] {
                NIL => {
                    path.push((u, w));
                    for &(a, b) in &path {
                        mate[a] = b;
                        mate[b] = a;
                    }
                    return true;
                }
                next if dist[next] == dist[u].wrapping_add(1) => {
                    path.push((u, w));
                    u = next;
                    advanced = true;
                    break;
                }
                _ => {}
            }
        }
        if !advanced {
            dist[u] = usize::MAX;
            match path.pop() {
                Some((prev, _)) => u = prev,
                None => return false,
            }
        }
    }
}

/// Whether some alternating path joins two unsaturated vertices.
pub fn has_augmenting_path(g: &Graph, x: &[usize], matching: &Matching) -> bool {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = x.iter().copied().filter(|&u| !matching.is_saturated(u)).collect();
    for &u in &queue {
        seen[u] = true;
    }
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            match matching.mate(w) {
                None => return true,
                Some(next) if !seen[next] => {
                    seen[next] = true;
                    queue.push_back(next);
                }
                _ => {}
            }
        }
    }
    false
}

/// `S ∪ T = V`, `T` independent, `M ⊆ E(S, T)` saturating `S`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StPartition {
    pub s: Vec<usize>,
    pub t: Vec<usize>,
    pub matching: Matching,
    in_s: Vec<bool>,
}

impl StPartition {
    pub fn in_s(&self, v: usize) -> bool {
        self.in_s[v]
    }

    pub fn s_mask(&self) -> &[bool] {
        &self.in_s
    }

    /// Checks every defining property against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        if self.s.len() + self.t.len() != n {
            return Err(format!("|S| + |T| = {} but n = {n}", self.s.len() + self.t.len()));
        }
        let mut placed = vec![false; n];
        for &v in self.s.iter().chain(&self.t) {
            if std::mem::replace(&mut placed[v], true) {
                return Err(format!("vertex {v} placed twice"));
            }
        }
        for &(u, v) in g.edges() {
            if !self.in_s[u] && !self.in_s[v] {
                return Err(format!("edge {u}-{v} lies inside T"));
            }
        }
        if self.matching.len() != self.s.len() {
            return Err(format!(
                "|M| = {} but |S| = {}",
                self.matching.len(),
                self.s.len()
            ));
        }
        for &e in &self.matching.edges {
            let (u, v) = g.endpoints(e);
            if self.in_s[u] == self.in_s[v] {
                return Err(format!("matching edge {u}-{v} does not join S and T"));
            }
        }
        if let Some(&x) = self.s.iter().find(|&&x| !self.matching.is_saturated(x)) {
            return Err(format!("S vertex {x} is unsaturated"));
        }
        Ok(())
    }
}

/// The alternating layers behind an [`StPartition`], kept for inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StConstruction {
    pub partition: StPartition,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub a_layers: Vec<Vec<usize>>,
    pub b_layers: Vec<Vec<usize>>,
    /// `D_0 = M(N(Y_0))`.
    pub d0: Vec<usize>,
}

impl StConstruction {
    /// No edge joins any `A_i` to `D_0`; a violation would be an augmenting path.
    pub fn a_layers_avoid_d0(&self, g: &Graph) -> bool {
        let mut in_d0 = vec![false; g.n()];
        for &v in &self.d0 {
            in_d0[v] = true;
        }
        self.a_layers
            .iter()
            .flatten()
            .all(|&a| g.neighbors(a).all(|w| !in_d0[w]))
    }
}

/// Splits a bipartite graph into `S` and `T`; see the module docs.
pub fn st_partition(g: &Graph) -> Result<StPartition> {
    Ok(st_construction(g)?.partition)
}

/// [`st_partition`] together with its intermediate layers.
pub fn st_construction(g: &Graph) -> Result<StConstruction> {
    let n = g.n();
    let coloring = bipartition(g)?;
    // per component, X is the smaller side; ties go to the side holding the smallest vertex
    let mut in_x = vec![false; n];
    for comp in g.components() {
        let ones = comp.iter().filter(|&&v| coloring.side[v]).count();
        let zeros = comp.len() - ones;
        let x_color = zeros > ones;
        for &v in &comp {
            in_x[v] = coloring.side[v] == x_color;
        }
    }
    let x: Vec<usize> = (0..n).filter(|&v| in_x[v]).collect();
    let y: Vec<usize> = (0..n).filter(|&v| !in_x[v]).collect();
    let matching = hopcroft_karp(g, &x);

    let mut in_b = vec![false; n];
    let mut in_a = vec![false; n];
    let mut a_layers = Vec::new();
    let mut b_layers = Vec::new();
    let mut frontier: Vec<usize> = x.iter().copied().filter(|&v| !matching.is_saturated(v)).collect();
    while !frontier.is_empty() {
        let mut b_layer = Vec::new();
        for &v in &frontier {
            for w in g.neighbors(v) {
                if !in_b[w] {
                    in_b[w] = true;
                    b_layer.push(w);
                }
            }
        }
        if b_layer.is_empty() {
            break;
        }
        b_layer.sort_unstable();
        let mut a_layer = Vec::with_capacity(b_layer.len());
        for &b in &b_layer {
            let a = matching
                .mate(b)
                .ok_or_else(|| Error::Internal(format!("vertex {b} reachable from X_0 is unsaturated")))?;
            in_a[a] = true;
            a_layer.push(a);
        }
        frontier = a_layer.clone();
        b_layers.push(b_layer);
        a_layers.push(a_layer);
    }

    let mut in_s = vec![false; n];
    for v in 0..n {
        in_s[v] = if in_x[v] {
            // X_r = X_1 \ A
            matching.is_saturated(v) && !in_a[v]
        } else {
            in_b[v]
        };
    }
    let y0: Vec<usize> = y.iter().copied().filter(|&v| !matching.is_saturated(v)).collect();
    let mut d0: Vec<usize> = Vec::new();
    let mut in_c0 = vec![false; n];
    for &v in &y0 {
        for w in g.neighbors(v) {
            if !in_c0[w] {
                in_c0[w] = true;
                if let Some(d) = matching.mate(w) {
                    d0.push(d);
                }
            }
        }
    }
    d0.sort_unstable();

    let s: Vec<usize> = (0..n).filter(|&v| in_s[v]).collect();
    let t: Vec<usize> = (0..n).filter(|&v| !in_s[v]).collect();
    let partition = StPartition { s, t, matching, in_s };
    partition
        .validate(g)
        .map_err(|e| Error::Internal(format!("S/T partition: {e}")))?;
    Ok(StConstruction {
        partition,
        x,
        y,
        a_layers,
        b_layers,
        d0,
    })
}

/// `M` plus one edge of `h` at every `T` vertex that `M` leaves unsaturated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MStar {
    /// Edge indices of `h`, ascending.
    pub edges: Vec<usize>,
    /// For each vertex of `T`, its unique `M*` edge in `h`.
    pub at_t: Vec<Option<usize>>,
    /// Edges of `M` as indices of `h`, ascending.
    pub matching_edges: Vec<usize>,
}

impl MStar {
    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }
}

/// Extends the matching of `st` into `M*` inside `h`, picking for every
/// unsaturated `T` vertex its edge to the smallest-id neighbor.
///
/// `h` is a graph on the same vertex ids that contains every matching edge
/// (as a vertex pair).
pub fn extend_to_mstar(h: &Graph, st: &StPartition) -> Result<MStar> {
    let mut at_t = vec![None; h.n()];
    let mut matching_edges = Vec::with_capacity(st.s.len());
    for &x in &st.s {
        let y = st.matching.mate(x).expect("S is saturated");
        let e = h
            .edge_between(x, y)
            .ok_or_else(|| Error::structural(x, format!("matching edge {x}-{y} missing from h")))?;
        at_t[y] = Some(e);
        matching_edges.push(e);
    }
    for &y in &st.t {
        if at_t[y].is_some() {
            continue;
        }
        let e = h
            .incident(y)
            .iter()
            .min_by_key(|&&(w, _)| w)
            .map(|&(_, e)| e)
            .ok_or_else(|| Error::structural(y, "unsaturated T vertex has no edge"))?;
        at_t[y] = Some(e);
    }
    let mut edges: Vec<usize> = at_t.iter().flatten().copied().collect();
    edges.sort_unstable();
    matching_edges.sort_unstable();
    Ok(MStar {
        edges,
        at_t,
        matching_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.to_vec()).unwrap()
    }

    fn k(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..a {
            for j in 0..b {
                e.push((i, a + j));
            }
        }
        g(a + b, &e)
    }

    #[test]
    fn matching_sizes() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(maximum_matching(&p4, &[0, 2], &[1, 3]).unwrap().len(), 2);
        let k23 = k(2, 3);
        assert_eq!(maximum_matching(&k23, &[0, 1], &[2, 3, 4]).unwrap().len(), 2);
        let c6 = g(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let m = maximum_matching(&c6, &[0, 2, 4], &[1, 3, 5]).unwrap();
        assert_eq!(m.len(), 3);
        assert!(!has_augmenting_path(&c6, &[0, 2, 4], &m));
    }

    #[test]
    fn matching_rejects_bad_sides() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        assert!(maximum_matching(&p3, &[0, 1], &[2]).is_err());
        assert!(maximum_matching(&p3, &[0], &[1]).is_err());
    }

    #[test]
    fn star_partition() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let st = st_partition(&star).unwrap();
        assert_eq!(st.s, vec![0]);
        assert_eq!(st.t, vec![1, 2, 3]);
        assert_eq!(st.matching.len(), 1);
    }

    #[test]
    fn odd_path_partition() {
        // a-b-c-d-e: X = {b, d} is the smaller side
        let p5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let st = st_partition(&p5).unwrap();
        assert_eq!(st.s, vec![1, 3]);
        assert_eq!(st.t, vec![0, 2, 4]);
    }

    #[test]
    fn even_path_partition() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let st = st_partition(&p4).unwrap();
        assert_eq!(st.s, vec![0, 2]);
        assert_eq!(st.t, vec![1, 3]);
        assert_eq!(st.matching.edges, vec![0, 2]);
    }

    #[test]
    fn unsaturated_case_builds_layers() {
        // double star: 0-1 joined, 0 has leaves 2,3; 1 has leaves 4,5
        let ds = g(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]);
        let c = st_construction(&ds).unwrap();
        c.partition.validate(&ds).unwrap();
        assert!(c.a_layers_avoid_d0(&ds));
        assert_eq!(c.partition.s, vec![0, 1]);
    }

    #[test]
    fn mstar_on_star_takes_every_edge() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let st = st_partition(&star).unwrap();
        let ms = extend_to_mstar(&star, &st).unwrap();
        assert_eq!(ms.edges, vec![0, 1, 2]);
    }

    #[test]
    fn mstar_on_k33_is_the_matching() {
        let k33 = k(3, 3);
        let st = st_partition(&k33).unwrap();
        let ms = extend_to_mstar(&k33, &st).unwrap();
        assert_eq!(ms.edges, ms.matching_edges);
        assert_eq!(ms.edges.len(), 3);
    }

    #[test]
    fn mstar_needs_an_edge_per_t_vertex() {
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let st = st_partition(&star).unwrap();
        let (h, _) = star.spanning_subgraph(&[st.matching.edges[0]]);
        assert!(matches!(extend_to_mstar(&h, &st), Err(Error::Structural { .. })));
    }

    #[test]
    fn empty_graph_partition() {
        let e = Graph::empty(3);
        let st = st_partition(&e).unwrap();
        assert!(st.s.is_empty());
        assert_eq!(st.t, vec![0, 1, 2]);
    }
}

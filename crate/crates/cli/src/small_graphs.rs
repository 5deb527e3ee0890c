//! Enumeration of small connected bipartite graphs up to isomorphism.
//!
//! Graphs are grown one edge at a time from a single edge, either joining
//! two existing vertices of opposite colors or attaching a new vertex. Every
//! connected graph arises this way because it always has an edge whose
//! removal (together with a vertex left isolated) keeps it connected.
//! Isomorphic copies are merged by a canonical adjacency mask computed over
//! all vertex orders compatible with a degree-based refinement.

use std::collections::BTreeSet;

use antimagic::Graph;

/// Largest vertex count representable by the pair mask.
const MAX_VERTICES: usize = 11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct Key {
    n: usize,
    mask: u64,
}

fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

fn edges_of(key: Key) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for b in 1..key.n {
        for a in 0..b {
            if key.mask >> pair_index(a, b) & 1 == 1 {
                out.push((a, b));
            }
        }
    }
    out
}

/// Minimal adjacency mask over vertex orders that sort vertices by
/// (degree, sorted neighbor degrees); only orders within equal classes vary.
fn canonical(n: usize, edges: &[(usize, usize)]) -> Key {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let class_key = |v: usize| {
        let mut nd: Vec<usize> = adj[v].iter().map(|&u| adj[u].len()).collect();
        nd.sort_unstable();
        (adj[v].len(), nd)
    };
    let keys: Vec<_> = (0..n).map(class_key).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    // position -> class id
    let mut class_of_pos = vec![0usize; n];
    for i in 1..n {
        class_of_pos[i] = class_of_pos[i - 1] + usize::from(keys[order[i]] != keys[order[i - 1]]);
    }
    let class_of_vertex: Vec<usize> = {
        let mut c = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            c[v] = class_of_pos[i];
        }
        c
    };

    struct State<'a> {
        n: usize,
        edges: &'a [(usize, usize)],
        class_of_pos: &'a [usize],
        class_of_vertex: &'a [usize],
        position: Vec<usize>,
        used: Vec<bool>,
        best: u64,
    }
    fn assign(s: &mut State, pos: usize) {
        if pos == s.n {
            let mask = s.edges.iter().fold(0u64, |m, &(u, v)| {
                m | 1 << pair_index(s.position[u], s.position[v])
            });
            s.best = s.best.min(mask);
            return;
        }
        for v in 0..s.n {
            if !s.used[v] && s.class_of_vertex[v] == s.class_of_pos[pos] {
                s.used[v] = true;
                s.position[v] = pos;
                assign(s, pos + 1);
                s.used[v] = false;
            }
        }
    }
    let mut state = State {
        n,
        edges,
        class_of_pos: &class_of_pos,
        class_of_vertex: &class_of_vertex,
        position: vec![0; n],
        used: vec![false; n],
        best: u64::MAX,
    };
    assign(&mut state, 0);
    Key { n, mask: state.best }
}

/// Two-coloring of a connected graph given as an edge list; `None` if it
/// has an odd cycle.
fn coloring(n: usize, edges: &[(usize, usize)]) -> Option<Vec<bool>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut color = vec![None; n];
    color[0] = Some(false);
    let mut stack = vec![0];
    while let Some(u) = stack.pop() {
        let c = color[u].expect("colored before push");
        for &w in &adj[u] {
            match color[w] {
                None => {
                    color[w] = Some(!c);
                    stack.push(w);
                }
                Some(cw) if cw == c => return None,
                Some(_) => {}
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
}

/// All connected bipartite graphs with `1..=max_edges` edges, one per
/// isomorphism class. Entry `k` of the result holds those with `k + 1`
/// edges, in canonical order.
pub fn connected_bipartite_graphs(max_edges: usize) -> Vec<Vec<Graph>> {
    assert!(
        max_edges < MAX_VERTICES,
        "edge count {max_edges} too large for the pair mask"
    );
    let mut levels: Vec<BTreeSet<Key>> = Vec::new();
    let mut current: BTreeSet<Key> = BTreeSet::from([canonical(2, &[(0, 1)])]);
    for _ in 0..max_edges {
        let mut next = BTreeSet::new();
        for &key in &current {
            let edges = edges_of(key);
            let color = coloring(key.n, &edges).expect("stored graphs are bipartite");
            for b in 1..key.n {
                for a in 0..b {
                    if color[a] != color[b] && key.mask >> pair_index(a, b) & 1 == 0 {
                        let mut grown = edges.clone();
                        grown.push((a, b));
                        next.insert(canonical(key.n, &grown));
                    }
                }
            }
            for a in 0..key.n {
                let mut grown = edges.clone();
                grown.push((a, key.n));
                next.insert(canonical(key.n + 1, &grown));
            }
        }
        levels.push(std::mem::replace(&mut current, next));
    }
    levels
        .into_iter()
        .map(|level| {
            level
                .into_iter()
                .map(|k| Graph::new(k.n, edges_of(k)).expect("canonical graphs are simple"))
                .collect()
        })
        .collect()
}

/// Connected bipartite graphs with at most `max_edges` edges and no vertex
/// of degree 0 or 2, up to isomorphism, ordered by edge count.
pub fn without_degree_two(max_edges: usize) -> Vec<Graph> {
    connected_bipartite_graphs(max_edges)
        .into_iter()
        .flatten()
        .filter(|g| (0..g.n()).all(|v| g.degree(v) != 2))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_ignores_labels() {
        let path = canonical(4, &[(0, 1), (1, 2), (2, 3)]);
        let shuffled = canonical(4, &[(2, 0), (0, 3), (3, 1)]);
        assert_eq!(path, shuffled);
        assert_ne!(path, canonical(4, &[(0, 1), (0, 2), (0, 3)]));
    }

    #[test]
    fn tree_counts_match_known_values() {
        // unlabeled trees on 2..=8 vertices
        let expected = [1, 1, 2, 3, 6, 11, 23];
        let levels = connected_bipartite_graphs(7);
        for (k, level) in levels.iter().enumerate() {
            let trees = level.iter().filter(|g| g.n() == g.m() + 1).count();
            assert_eq!(trees, expected[k], "{} edges", k + 1);
        }
    }

    #[test]
    fn small_cyclic_counts() {
        let levels = connected_bipartite_graphs(6);
        // C4; then C4 plus a pendant edge; K_{2,3} at six edges among others
        assert_eq!(levels[3].iter().filter(|g| g.m() == g.n()).count(), 1);
        assert_eq!(levels[4].iter().filter(|g| g.m() == g.n()).count(), 1);
        assert!(levels[5]
            .iter()
            .any(|g| g.n() == 5 && (0..5).filter(|&v| g.degree(v) == 3).count() == 2));
    }

    #[test]
    fn homeomorphically_irreducible_trees() {
        let graphs = without_degree_two(7);
        let by_edges: Vec<usize> = (1..=7)
            .map(|k| graphs.iter().filter(|g| g.m() == k).count())
            .collect();
        assert_eq!(by_edges, [1, 0, 1, 1, 2, 2, 4]);
        assert!(graphs.iter().all(|g| g.n() == g.m() + 1));
    }
}

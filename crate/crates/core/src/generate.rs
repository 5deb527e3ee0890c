//! Seeded graph generators.
//!
//! All randomness comes from a ChaCha8 stream keyed by a single `u64` seed,
//! so a family, its parameters and a seed determine the graph exactly.
//! Random families realize a sampled degree sequence greedily and then mix it
//! with degree-preserving edge swaps, which keeps every degree constraint
//! intact while the edges spread out.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ATTEMPTS: usize = 1000;
/// Swap attempts per edge when mixing a realized degree sequence.
const SWAPS_PER_EDGE: usize = 10;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Family {
    /// `K_n`.
    Complete { n: usize },
    /// `K_{a,b}`.
    CompleteBipartite { a: usize, b: usize },
    /// `K_{1,t}`.
    Star { t: usize },
    /// Random bipartite graph on `nx + ny` vertices, every degree 1 or in
    /// `3..=dmax`; each vertex is a leaf with probability `leaf_prob`.
    RandomBipartite {
        nx: usize,
        ny: usize,
        dmax: usize,
        leaf_prob: f64,
    },
    /// Random graph with all degrees `d`, one vertex `d + 1` when `n·d` is odd.
    NearRegular { n: usize, d: usize },
    /// The `k`-dimensional hypercube.
    Hypercube { k: usize },
    /// A random tree on `centers` hubs, each hub carrying between 1 and
    /// `max_leaves` pendant leaves (more if needed to reach degree 3).
    TreeOfStars { centers: usize, max_leaves: usize },
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Complete { .. } => "complete",
            Family::CompleteBipartite { .. } => "complete-bipartite",
            Family::Star { .. } => "star",
            Family::RandomBipartite { .. } => "random-bipartite",
            Family::NearRegular { .. } => "near-regular",
            Family::Hypercube { .. } => "hypercube",
            Family::TreeOfStars { .. } => "tree-of-stars",
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn generate(family: &Family, seed: u64) -> Result<Graph> {
    let mut rng = rng_from_seed(seed);
    match *family {
        Family::Complete { n } => Ok(complete(n)),
        Family::CompleteBipartite { a, b } => Ok(complete_bipartite(a, b)),
        Family::Star { t } => Ok(complete_bipartite(1, t)),
        Family::RandomBipartite {
            nx,
            ny,
            dmax,
            leaf_prob,
        } => random_bipartite(nx, ny, dmax, leaf_prob, &mut rng),
        Family::NearRegular { n, d } => near_regular(n, d, &mut rng),
        Family::Hypercube { k } => hypercube(k),
        Family::TreeOfStars { centers, max_leaves } => tree_of_stars(centers, max_leaves, &mut rng),
    }
}

pub fn complete(n: usize) -> Graph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, edges).expect("complete graph is simple")
}

/// Side `a` gets ids `0..a`, side `b` gets `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::new(a + b, edges).expect("complete bipartite graph is simple")
}

pub fn hypercube(k: usize) -> Result<Graph> {
    if k > 20 {
        return Err(Error::Precondition(format!(
            "hypercube dimension {k} is too large"
        )));
    }
    let n = 1usize << k;
    let edges = (0..n)
        .flat_map(|u| (0..k).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v))
        .collect();
    Graph::new(n, edges)
}

pub fn tree_of_stars(centers: usize, max_leaves: usize, rng: &mut impl Rng) -> Result<Graph> {
    if centers == 0 || max_leaves == 0 {
        return Err(Error::Precondition(
            "tree-of-stars needs at least one center and one leaf".into(),
        ));
    }
    let mut edges = Vec::new();
    let mut degree = vec![0usize; centers];
    for c in 1..centers {
        let parent = rng.gen_range(0..c);
        edges.push((parent, c));
        degree[parent] += 1;
        degree[c] += 1;
    }
    let mut n = centers;
    for (c, &d) in degree.iter().enumerate() {
        let leaves = rng.gen_range(1..=max_leaves).max(3usize.saturating_sub(d));
        for _ in 0..leaves {
            edges.push((c, n));
            n += 1;
        }
    }
    Graph::new(n, edges)
}

fn sample_degree(leaf_prob: f64, cap: usize, rng: &mut impl Rng) -> usize {
    if cap < 3 || rng.gen_bool(leaf_prob) {
        1
    } else {
        rng.gen_range(3..=cap)
    }
}

/// Nudges the two degree lists toward equal sums using steps that keep every
/// degree in `{1} ∪ [3, cap]`.
fn balance(dx: &mut [usize], cx: usize, dy: &mut [usize], cy: usize, rng: &mut impl Rng) -> bool {
    fn raise(d: &mut [usize], cap: usize, diff: usize, rng: &mut impl Rng) -> bool {
        let candidates: Vec<usize> = (0..d.len())
            .filter(|&i| {
                if d[i] == 1 {
                    diff >= 2 && cap >= 3
                } else {
                    d[i] < cap
                }
            })
            .collect();
        match candidates.choose(rng) {
            Some(&i) => {
                d[i] = if d[i] == 1 { 3 } else { d[i] + 1 };
                true
            }
            None => false,
        }
    }
    fn lower(d: &mut [usize], diff: usize, rng: &mut impl Rng) -> bool {
        let candidates: Vec<usize> = (0..d.len())
            .filter(|&i| d[i] > 3 || (d[i] == 3 && diff >= 2))
            .collect();
        match candidates.choose(rng) {
            Some(&i) => {
                d[i] = if d[i] == 3 { 1 } else { d[i] - 1 };
                true
            }
            None => false,
        }
    }
    /// Raises a degree on the short side or lowers one on the long side,
    /// trying the two in random order.
    fn nudge(short: &mut [usize], cap: usize, long: &mut [usize], diff: usize, rng: &mut impl Rng) -> bool {
        if rng.gen_bool(0.5) && raise(short, cap, diff, rng) {
            return true;
        }
        lower(long, diff, rng) || raise(short, cap, diff, rng)
    }
    for _ in 0..4 * (dx.len() + dy.len()) * (cx + cy + 1) {
        let (sx, sy): (usize, usize) = (dx.iter().sum(), dy.iter().sum());
        if sx == sy {
            return true;
        }
        let moved = if sx < sy {
            nudge(dx, cx, dy, sy - sx, rng)
        } else {
            nudge(dy, cy, dx, sx - sy, rng)
        };
        if !moved {
            return false;
        }
    }
    false
}

/// Greedy bipartite realization: each `X` vertex, largest demand first,
/// takes the `Y` vertices with the most remaining demand.
fn realize_bipartite(dx: &[usize], dy: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut xs: Vec<usize> = (0..dx.len()).collect();
    xs.sort_by_key(|&x| std::cmp::Reverse(dx[x]));
    // Y ids ordered by remaining degree, nonincreasing. Decrementing the top
    // k entries keeps the order if, within the tie group straddling position
    // k, the entries taken are the last ones of the group.
    let mut ys: Vec<usize> = (0..dy.len()).collect();
    ys.sort_by_key(|&y| (std::cmp::Reverse(dy[y]), y));
    let mut remaining: Vec<usize> = ys.iter().map(|&y| dy[y]).collect();
    let mut edges = Vec::with_capacity(dx.iter().sum());
    for x in xs {
        let k = dx[x];
        if k == 0 {
            continue;
        }
        if k > remaining.len() || remaining[k - 1] == 0 {
            return None;
        }
        let boundary = remaining[k - 1];
        let lo = remaining.partition_point(|&r| r > boundary);
        let hi = remaining.partition_point(|&r| r >= boundary);
        let from_tie = k - lo;
        for i in (0..lo).chain(hi - from_tie..hi) {
            remaining[i] -= 1;
            edges.push((x, ys[i]));
        }
    }
    remaining.iter().all(|&r| r == 0).then_some(edges)
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Degree-preserving double-edge swaps. With `bipartite`, the first endpoint
/// of every edge is on one side and swaps keep it there.
fn mix(edges: &mut [(usize, usize)], bipartite: bool, rng: &mut impl Rng) {
    if edges.len() < 2 {
        return;
    }
    let mut present: HashSet<(usize, usize)> = edges.iter().map(|&(u, v)| key(u, v)).collect();
    for _ in 0..SWAPS_PER_EDGE * edges.len() {
        let i = rng.gen_range(0..edges.len());
        let j = rng.gen_range(0..edges.len());
        let ((a, b), (c, d)) = (edges[i], edges[j]);
        let (c, d) = if !bipartite && rng.gen_bool(0.5) {
            (d, c)
        } else {
            (c, d)
        };
        // (a,b),(c,d) -> (a,d),(c,b)
        if a == d || c == b || a == c || b == d {
            continue;
        }
        if present.contains(&key(a, d)) || present.contains(&key(c, b)) {
            continue;
        }
        present.remove(&key(a, b));
        present.remove(&key(c, d));
        present.insert(key(a, d));
        present.insert(key(c, b));
        edges[i] = (a, d);
        edges[j] = (c, b);
    }
}

fn finish(n: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(u, v)| key(u, v)).collect();
    edges.sort_unstable();
    Graph::new(n, edges)
}

pub fn random_bipartite(
    nx: usize,
    ny: usize,
    dmax: usize,
    leaf_prob: f64,
    rng: &mut impl Rng,
) -> Result<Graph> {
    if nx == 0 || ny == 0 {
        return Err(Error::Precondition(
            "random-bipartite needs both sides nonempty".into(),
        ));
    }
    if !(0.0..=1.0).contains(&leaf_prob) {
        return Err(Error::Precondition(format!(
            "leaf probability {leaf_prob} outside [0, 1]"
        )));
    }
    if dmax < 1 {
        return Err(Error::Precondition("dmax must be at least 1".into()));
    }
    let (cx, cy) = (dmax.min(ny), dmax.min(nx));
    for _ in 0..MAX_ATTEMPTS {
        let mut dx: Vec<usize> = (0..nx).map(|_| sample_degree(leaf_prob, cx, rng)).collect();
        let mut dy: Vec<usize> = (0..ny).map(|_| sample_degree(leaf_prob, cy, rng)).collect();
        if !balance(&mut dx, cx, &mut dy, cy, rng) {
            continue;
        }
        let Some(edges) = realize_bipartite(&dx, &dy) else {
            continue;
        };
        let mut edges: Vec<(usize, usize)> = edges.into_iter().map(|(x, y)| (x, nx + y)).collect();
        mix(&mut edges, true, rng);
        let g = finish(nx + ny, edges)?;
        debug_assert!((0..g.n()).all(|v| g.degree(v) == 1 || g.degree(v) >= 3));
        return Ok(g);
    }
    Err(Error::Precondition(format!(
        "no bipartite degree sequence with degrees in {{1}} ∪ [3, {dmax}] found for sides {nx} and {ny}"
    )))
}

/// Havel–Hakimi realization of a graphical sequence.
fn realize_graphical(degrees: &[usize]) -> Option<Vec<(usize, usize)>> {
    let mut remaining = degrees.to_vec();
    let mut edges = Vec::new();
    loop {
        let Some(v) = (0..remaining.len()).max_by_key(|&v| (remaining[v], std::cmp::Reverse(v))) else {
            return Some(edges);
        };
        let d = remaining[v];
        if d == 0 {
            return Some(edges);
        }
        remaining[v] = 0;
        let mut others: Vec<usize> = (0..remaining.len()).filter(|&u| remaining[u] > 0).collect();
        if others.len() < d {
            return None;
        }
        others.sort_by_key(|&u| (std::cmp::Reverse(remaining[u]), u));
        for &u in &others[..d] {
            remaining[u] -= 1;
            edges.push((v, u));
        }
    }
}

pub fn near_regular(n: usize, d: usize, rng: &mut impl Rng) -> Result<Graph> {
    let odd = n * d % 2 == 1;
    if d >= n || (odd && d + 1 >= n) {
        return Err(Error::Precondition(format!(
            "no simple graph on {n} vertices with degrees near {d}"
        )));
    }
    let mut degrees = vec![d; n];
    if odd {
        degrees[0] += 1;
    }
    let mut edges = realize_graphical(&degrees)
        .ok_or_else(|| Error::Internal(format!("near-regular sequence ({n}, {d}) not realized")))?;
    mix(&mut edges, false, rng);
    finish(n, edges)
}

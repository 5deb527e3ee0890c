//! Antimagic orientations of graphs with minimum degree at least 33.
//!
//! A locally maximal cut gives a spanning bipartite subgraph `L` in which
//! every vertex keeps at least half its edges. The `S`/`T` split of `L`
//! and `M*` are built as in the bipartite pipeline, and the edges of
//! `H = L − E(L[S]) − M*` at each `T` vertex are divided three ways:
//!
//! * a few go to `G₂` (everything outside `L*`, plus these) so that each
//!   `T` vertex has `G₂`-degree divisible by 4,
//! * half that many form `H₂`, whose T-even labeling exactly cancels the
//!   `+d/2` the consecutive labeling of `G₂` puts on every `T` vertex,
//! * the rest form `H₁`, labeled by a zero-sum partition.
//!
//! `T` sums are then governed by the `M*` labels alone, and the `M` labels
//! lift the `S` sums above them, as in the bipartite case.

use serde::{Deserialize, Serialize};

use crate::assembly::Assembly;
use crate::bipartite::{extend_to_mstar, st_partition, StPartition};
use crate::error::{Error, Result};
use crate::generate::rng_from_seed;
use crate::graph::{verify_antimagic, Certificate, Graph, Verdict, Violation, MAX_EDGES};
use crate::residue::residue_partition;
use crate::trail::{consecutive_labeling, teven_labeling};

use rand::Rng;

/// Minimum degree the construction is guaranteed for.
pub const MIN_DEGREE: usize = 33;

/// A 2-partition in which every vertex has at least half its edges crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPartition {
    /// `side[v]` is `true` for the second side.
    pub side: Vec<bool>,
    /// Crossing edges, ascending edge indices of the input graph.
    pub crossing: Vec<usize>,
}

impl CutPartition {
    /// `true` when every vertex has at least half its edges crossing.
    pub fn is_locally_maximal(&self, g: &Graph) -> bool {
        (0..g.n()).all(|v| {
            let crossing = g
                .incident(v)
                .iter()
                .filter(|&&(u, _)| self.side[u] != self.side[v])
                .count();
            2 * crossing >= g.degree(v)
        })
    }
}

/// Local search for a cut: start from id parity (or a seeded random split)
/// and flip any vertex with fewer than half its edges crossing. Every flip
/// grows the cut, so this stops after at most `m` flips.
pub fn max_bipartite_spanning(g: &Graph, seed: Option<u64>) -> CutPartition {
    let n = g.n();
    let mut side: Vec<bool> = match seed {
        None => (0..n).map(|v| v % 2 == 1).collect(),
        Some(s) => {
            let mut rng = rng_from_seed(s);
            (0..n).map(|_| rng.gen_bool(0.5)).collect()
        }
    };
    let mut crossing: Vec<usize> = (0..n)
        .map(|v| g.incident(v).iter().filter(|&&(u, _)| side[u] != side[v]).count())
        .collect();
    let mut stack: Vec<usize> = (0..n).rev().collect();
    let mut queued = vec![true; n];
    while let Some(v) = stack.pop() {
        queued[v] = false;
        if 2 * crossing[v] >= g.degree(v) {
            continue;
        }
        side[v] = !side[v];
        crossing[v] = g.degree(v) - crossing[v];
        for &(u, _) in g.incident(v) {
            if side[u] != side[v] {
                crossing[u] += 1;
            } else {
                crossing[u] -= 1;
                if !queued[u] && 2 * crossing[u] < g.degree(u) {
                    queued[u] = true;
                    stack.push(u);
                }
            }
        }
    }
    let crossing = (0..g.m())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            side[u] != side[v]
        })
        .collect();
    CutPartition { side, crossing }
}

/// Every edge list holds ascending edge indices of the input graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem2Plan {
    pub graph: Graph,
    pub cut: CutPartition,
    /// `S`/`T` split of the cut subgraph `L`; matching edges index `L`.
    pub st: StPartition,
    /// `M*` edge at each `T` vertex, `None` on `S`.
    pub mstar_at_t: Vec<Option<usize>>,
    pub mstar: Vec<usize>,
    pub h: Vec<usize>,
    pub g1: Vec<usize>,
    /// `H` edges moved into `G₂`.
    pub moved: Vec<usize>,
    pub g2: Vec<usize>,
    pub h_prime: Vec<usize>,
    pub h1: Vec<usize>,
    pub h2: Vec<usize>,
    /// `d_{G₁}(v) mod 4` for each vertex of `T`, aligned with `st.t`.
    pub residues: Vec<u8>,
}

impl Theorem2Plan {
    pub fn m1(&self) -> usize {
        self.h1.len()
    }

    pub fn m2(&self) -> usize {
        self.g2.len()
    }

    pub fn m3(&self) -> usize {
        self.h2.len()
    }

    fn degrees_in(&self, edges: &[usize]) -> Vec<usize> {
        let mut d = vec![0; self.graph.n()];
        for &e in edges {
            let (u, v) = self.graph.endpoints(e);
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Checks every structural invariant the labeling relies on.
    pub fn validate(&self) -> std::result::Result<(), String> {
        let g = &self.graph;
        let t = &self.st.t;
        if self.m1() + self.m2() + self.m3() + t.len() != g.m() {
            return Err(format!(
                "m1 + m2 + m3 + |T| = {} + {} + {} + {} != {}",
                self.m1(),
                self.m2(),
                self.m3(),
                t.len(),
                g.m()
            ));
        }
        let mut owner = vec![0u8; g.m()];
        for (tag, list) in [(1u8, &self.h1), (2, &self.g2), (3, &self.h2), (4, &self.mstar)] {
            for &e in list.iter() {
                if owner[e] != 0 {
                    return Err(format!("edge {e} lies in two parts"));
                }
                owner[e] = tag;
            }
        }
        if let Some(e) = owner.iter().position(|&o| o == 0) {
            return Err(format!("edge {e} lies in no part"));
        }
        let d_g1 = self.degrees_in(&self.g1);
        let d_g2 = self.degrees_in(&self.g2);
        let d_h1 = self.degrees_in(&self.h1);
        let d_h2 = self.degrees_in(&self.h2);
        let mut reaches_s = vec![false; g.n()];
        for &e in &self.g2 {
            let (u, v) = g.endpoints(e);
            reaches_s[u] |= self.st.in_s(v);
            reaches_s[v] |= self.st.in_s(u);
        }
        for (i, &y) in t.iter().enumerate() {
            if d_g1[y] % 4 != self.residues[i] as usize {
                return Err(format!(
                    "T vertex {y}: stored residue {} for G1-degree {}",
                    self.residues[i], d_g1[y]
                ));
            }
            if !d_g2[y].is_multiple_of(4) {
                return Err(format!("T vertex {y}: G2-degree {} not divisible by 4", d_g2[y]));
            }
            if !reaches_s[y] {
                return Err(format!("T vertex {y} has no G2 neighbor in S"));
            }
            if 2 * d_h2[y] != d_g2[y] {
                return Err(format!(
                    "T vertex {y}: H2-degree {} vs G2-degree {}",
                    d_h2[y], d_g2[y]
                ));
            }
            if d_h1[y] < 2 {
                return Err(format!("T vertex {y}: H1-degree {} < 2", d_h1[y]));
            }
        }
        for &e in self.h1.iter().chain(&self.h2) {
            let (u, v) = g.endpoints(e);
            if self.st.in_s(u) == self.st.in_s(v) {
                return Err(format!("H edge {e} does not join S and T"));
            }
        }
        Ok(())
    }
}

fn check_min_degree(g: &Graph, threshold: usize) -> Result<()> {
    if g.m() > MAX_EDGES {
        return Err(Error::Precondition(format!(
            "{} edges exceeds the limit {MAX_EDGES}",
            g.m()
        )));
    }
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < threshold) {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {} below the minimum {threshold}",
            g.degree(v)
        )));
    }
    Ok(())
}

/// Builds the plan without the degree check; structural failures are
/// reported as [`Error::Structural`].
fn build_plan_unchecked(g: &Graph, seed: Option<u64>) -> Result<Theorem2Plan> {
    let n = g.n();
    let cut = max_bipartite_spanning(g, seed);
    let (l, l_parent) = g.spanning_subgraph(&cut.crossing);
    let st = st_partition(&l)?;

    let lstar_local: Vec<usize> = (0..l.m())
        .filter(|&e| {
            let (u, v) = l.endpoints(e);
            !(st.in_s(u) && st.in_s(v))
        })
        .collect();
    let (lstar, ls_parent) = l.spanning_subgraph(&lstar_local);
    let to_g = |e: usize| l_parent[ls_parent[e]];
    let ms = extend_to_mstar(&lstar, &st)?;
    let mstar_at_t: Vec<Option<usize>> = ms.at_t.iter().map(|o| o.map(to_g)).collect();
    let mut mstar: Vec<usize> = ms.edges.iter().map(|&e| to_g(e)).collect();
    mstar.sort_unstable();
    let mut in_mstar = vec![false; g.m()];
    for &e in &mstar {
        in_mstar[e] = true;
    }
    let mut h: Vec<usize> = (0..lstar.m()).map(to_g).filter(|&e| !in_mstar[e]).collect();
    h.sort_unstable();
    let mut in_h = vec![false; g.m()];
    for &e in &h {
        in_h[e] = true;
    }
    let g1: Vec<usize> = (0..g.m()).filter(|&e| !in_h[e] && !in_mstar[e]).collect();
    let mut d_g1 = vec![0usize; n];
    for &e in &g1 {
        let (u, v) = g.endpoints(e);
        d_g1[u] += 1;
        d_g1[v] += 1;
    }

    let mut moved = Vec::new();
    let mut chosen_h2 = Vec::new();
    let mut residues = Vec::with_capacity(st.t.len());
    for &y in &st.t {
        let mut at_y: Vec<usize> = g
            .incident(y)
            .iter()
            .map(|&(_, e)| e)
            .filter(|&e| in_h[e])
            .collect();
        at_y.sort_unstable();
        let c = d_g1[y] % 4;
        residues.push(c as u8);
        let shift = 4 - c;
        let d_g2 = d_g1[y] + shift;
        let take = d_g2 / 2;
        if at_y.len() < shift + take + 2 {
            return Err(Error::structural(
                y,
                format!(
                    "T vertex has {} H-edges; needs {shift} to move, {take} for H2 and 2 for H1",
                    at_y.len()
                ),
            ));
        }
        moved.extend_from_slice(&at_y[..shift]);
        chosen_h2.extend_from_slice(&at_y[shift..shift + take]);
    }
    moved.sort_unstable();
    chosen_h2.sort_unstable();
    let mut g2: Vec<usize> = g1.iter().copied().chain(moved.iter().copied()).collect();
    g2.sort_unstable();
    let h_prime: Vec<usize> = h
        .iter()
        .copied()
        .filter(|e| moved.binary_search(e).is_err())
        .collect();
    let h1: Vec<usize> = h_prime
        .iter()
        .copied()
        .filter(|e| chosen_h2.binary_search(e).is_err())
        .collect();

    let plan = Theorem2Plan {
        graph: g.clone(),
        cut,
        st,
        mstar_at_t,
        mstar,
        h,
        g1,
        moved,
        g2,
        h_prime,
        h1,
        h2: chosen_h2,
        residues,
    };
    plan.validate()
        .map_err(|e| Error::Internal(format!("min-degree plan: {e}")))?;
    Ok(plan)
}

/// Checks `δ(g) ≥ 33` and builds the edge split.
pub fn build_theorem2_plan(g: &Graph, seed: Option<u64>) -> Result<Theorem2Plan> {
    check_min_degree(g, MIN_DEGREE)?;
    build_plan_unchecked(g, seed)
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDegreeOptions {
    /// Seeds the random starting cut; `None` starts from id parity.
    pub seed: Option<u64>,
    /// Skip the minimum-degree check. Failures are then reported as
    /// counterexamples instead of internal errors.
    pub unsafe_mode: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Accepted(Certificate),
    /// Only produced in unsafe mode.
    Rejected {
        certificate: Certificate,
        violation: Violation,
    },
}

/// Labels a plan; the returned certificate is not yet verified.
pub fn label_plan(plan: &Theorem2Plan) -> Result<Certificate> {
    let g = &plan.graph;
    let (s, t) = (&plan.st.s, &plan.st.t);
    let (m1, m2, m3) = (plan.m1() as u64, plan.m2() as u64, plan.m3() as u64);
    let mut asm = Assembly::new(g);

    // H1: zero-sum groups per T vertex, all pointing into S
    let mut in_h1 = vec![false; g.m()];
    for &e in &plan.h1 {
        in_h1[e] = true;
    }
    let groups: Vec<(usize, Vec<usize>)> = t
        .iter()
        .map(|&y| {
            let mut edges: Vec<usize> = g
                .incident(y)
                .iter()
                .map(|&(_, e)| e)
                .filter(|&e| in_h1[e])
                .collect();
            edges.sort_unstable();
            (y, edges)
        })
        .collect();
    let sizes: Vec<usize> = groups.iter().map(|(_, edges)| edges.len()).collect();
    let parts = residue_partition(m1, &sizes)?;
    for ((y, edges), part) in groups.iter().zip(&parts.parts) {
        for (&e, &l) in edges.iter().zip(part) {
            asm.set(e, *y, l);
        }
    }

    // G2: +d/2 on every T vertex
    let (sub, parent) = g.spanning_subgraph(&plan.g2);
    let (o, l) = consecutive_labeling(&sub, m1, t)?;
    asm.import(&sub, &parent, &o, &l);

    // H2: −d on every T vertex, cancelling the G2 contribution
    let (sub, parent) = g.spanning_subgraph(&plan.h2);
    let teven = teven_labeling(&sub, s, t, m1 + m2)?;
    asm.import(&sub, &parent, &teven.orientation, &teven.labeling);

    // M*: fill the gap the T-even labeling leaves when m3 ≡ 2 (mod 4)
    let base = m1 + m2 + m3;
    let gap = m3 % 4 != 0;
    let extra = (t.len() - s.len()) as u64;
    let mut unmatched_labels: Vec<u64> = (1..=extra).map(|i| base + i).collect();
    let mut matched_labels: Vec<u64> = (1..=s.len() as u64).map(|i| base + extra + i).collect();
    if gap {
        if let Some(first) = unmatched_labels.first_mut() {
            *first = base;
        } else if let Some(first) = matched_labels.first_mut() {
            *first = base;
        }
    }
    let unmatched: Vec<usize> = t
        .iter()
        .copied()
        .filter(|&y| !plan.st.matching.is_saturated(y))
        .collect();
    for (&y, l) in unmatched.iter().zip(unmatched_labels) {
        asm.set(plan.mstar_at_t[y].expect("T vertex has an M* edge"), y, l);
    }
    let order = asm.sort_by_partial_sum(s);
    for (&x, l) in order.iter().zip(matched_labels) {
        let y = plan.st.matching.mate(x).expect("S is saturated");
        asm.set(plan.mstar_at_t[y].expect("T vertex has an M* edge"), y, l);
    }
    asm.finish_unverified("min-degree pipeline")
}

/// Runs the pipeline with explicit options.
pub fn antimagic_orientation_mindegree_with(g: &Graph, options: &MinDegreeOptions) -> Result<Outcome> {
    let plan = if options.unsafe_mode {
        if g.n() == 0 {
            return Err(Error::Precondition("graph has no vertices".into()));
        }
        build_plan_unchecked(g, options.seed)?
    } else {
        build_theorem2_plan(g, options.seed)?
    };
    let cert = label_plan(&plan)?;
    match verify_antimagic(&cert) {
        Verdict::Accept => Ok(Outcome::Accepted(cert)),
        Verdict::Reject(violation) if options.unsafe_mode => Ok(Outcome::Rejected {
            certificate: cert,
            violation,
        }),
        Verdict::Reject(v) => Err(Error::Internal(format!(
            "min-degree pipeline: verifier rejected output: {v}"
        ))),
    }
}

/// Antimagic orientation of a graph with minimum degree at least 33.
pub fn antimagic_orientation_mindegree(g: &Graph) -> Result<Certificate> {
    match antimagic_orientation_mindegree_with(g, &MinDegreeOptions::default())? {
        Outcome::Accepted(cert) => Ok(cert),
        Outcome::Rejected { violation, .. } => Err(Error::Internal(format!("min-degree pipeline: {violation}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{complete, complete_bipartite};

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::new(10, e).unwrap()
    }

    #[test]
    fn cut_examples() {
        let k33 = complete_bipartite(3, 3);
        let cut = max_bipartite_spanning(&k33, None);
        assert_eq!(cut.crossing.len(), 9);
        let triangle = complete(3);
        let cut = max_bipartite_spanning(&triangle, None);
        assert_eq!(cut.crossing.len(), 2);
        assert!(cut.is_locally_maximal(&triangle));
        let k4 = complete(4);
        for seed in [None, Some(1), Some(2)] {
            let cut = max_bipartite_spanning(&k4, seed);
            assert!(cut.is_locally_maximal(&k4));
            assert_eq!(cut.crossing.len(), 4);
        }
    }

    #[test]
    fn k34_plan_and_certificate() {
        let g = complete(34);
        let plan = build_theorem2_plan(&g, None).unwrap();
        assert_eq!(plan.m1() + plan.m2() + plan.m3() + plan.st.t.len(), 561);
        let cert = antimagic_orientation_mindegree(&g).unwrap();
        assert_eq!(cert.labeling.sorted(), (1..=561).collect::<Vec<_>>());
    }

    #[test]
    fn k35_and_k40() {
        for n in [35, 40] {
            antimagic_orientation_mindegree(&complete(n)).unwrap();
        }
    }

    #[test]
    fn seeds_give_valid_certificates() {
        let g = complete(36);
        for seed in 0..3 {
            let opts = MinDegreeOptions {
                seed: Some(seed),
                unsafe_mode: false,
            };
            assert!(matches!(
                antimagic_orientation_mindegree_with(&g, &opts).unwrap(),
                Outcome::Accepted(_)
            ));
        }
    }

    #[test]
    fn low_degree_is_rejected() {
        assert!(matches!(
            antimagic_orientation_mindegree(&petersen()),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            build_theorem2_plan(&complete(33), None),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn unsafe_mode_runs_below_threshold() {
        let opts = MinDegreeOptions {
            seed: None,
            unsafe_mode: true,
        };
        // either a structural refusal or a verified outcome, never a panic
        for n in [12, 20, 28] {
            match antimagic_orientation_mindegree_with(&complete(n), &opts) {
                Ok(Outcome::Accepted(c)) => assert!(verify_antimagic(&c).is_accept()),
                Ok(Outcome::Rejected { .. }) | Err(Error::Structural { .. }) => {}
                Err(e) => panic!("K{n}: unexpected {e}"),
            }
        }
    }
}

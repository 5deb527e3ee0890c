//! Antimagic orientations of bipartite graphs with no vertex of degree 0 or 2.
//!
//! The vertex set is split into `S` and an independent `T` with a matching `M`
//! saturating `S` ([`st_partition`]). Every `T` vertex keeps exactly one edge
//! of `M* ⊇ M`; its other edges form `H`. All edges at `T` point into `S`, so
//! every `T` sum is negative, while the `M` labels, handed out in order of the
//! partial `S` sums, push every `S` sum above zero and make them strictly
//! increasing. What remains is to keep the `T` sums apart, which each case
//! does by making the `H` part of every `T` sum vanish modulo a fixed number
//! and giving the `M*` edges distinct residues.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::assembly::Assembly;
use crate::bipartite::{extend_to_mstar, st_partition, MStar, StPartition};
use crate::error::{Error, Result};
use crate::graph::{bipartition, Certificate, Graph, MAX_EDGES};
use crate::residue::residue_partition;
use crate::trail::consecutive_labeling;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Case {
    /// `|T| ≤ e(H)`.
    Case1,
    /// `|T| > e(H)`, every `H`-degree at `T` even.
    Case21,
    /// `|T| > e(H)`, some `H`-degree at `T` odd.
    Case22,
    /// `e(H) = 0`: every `T` vertex is a leaf.
    Degenerate,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::Case1 => "Case1",
            Case::Case21 => "Case21",
            Case::Case22 => "Case22",
            Case::Degenerate => "Degenerate",
        };
        f.write_str(s)
    }
}

/// The `H`-edges at one `T` vertex of degree at least 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeGroup {
    pub vertex: usize,
    /// Edge indices, ascending.
    pub edges: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem1Plan {
    pub graph: Graph,
    pub st: StPartition,
    pub mstar: MStar,
    /// `T` with the degree-1 vertices last; ascending id within each class.
    pub t_order: Vec<usize>,
    /// `T` vertices not covered by `M`, ascending.
    pub unmatched_t: Vec<usize>,
    /// One group per `T` vertex of degree ≥ 3, in `t_order`.
    pub groups: Vec<EdgeGroup>,
    /// `E(G[S])`.
    pub s_edges: Vec<usize>,
    /// `E(H)`.
    pub h_edges: Vec<usize>,
    pub m1: usize,
    pub m2: usize,
    pub t1: usize,
    pub case: Case,
    /// Number of groups of odd size (Case 2 only).
    pub k: usize,
    /// `(m2 − 3k)/2` (Case 2 only).
    pub ell: usize,
}

impl Theorem1Plan {
    pub fn n1(&self) -> usize {
        self.st.s.len()
    }

    pub fn n2(&self) -> usize {
        self.st.t.len()
    }

    fn validate(&self) -> std::result::Result<(), String> {
        let g = &self.graph;
        if self.m1 + self.m2 + self.n2() != g.m() {
            return Err(format!(
                "m1 + m2 + n2 = {} + {} + {} != m = {}",
                self.m1,
                self.m2,
                self.n2(),
                g.m()
            ));
        }
        for grp in &self.groups {
            if grp.edges.len() != g.degree(grp.vertex) - 1 || grp.edges.len() < 2 {
                return Err(format!(
                    "T vertex {} has {} H-edges at degree {}",
                    grp.vertex,
                    grp.edges.len(),
                    g.degree(grp.vertex)
                ));
            }
        }
        let expected = if self.n2() <= self.m2 {
            Case::Case1
        } else if self.k + self.ell == 0 {
            Case::Degenerate
        } else if self.k == 0 {
            Case::Case21
        } else {
            Case::Case22
        };
        if expected != self.case {
            return Err(format!("case {} but parameters give {expected}", self.case));
        }
        Ok(())
    }
}

/// Checks the input class and builds the shared structure for every case.
pub fn plan_theorem1(g: &Graph) -> Result<Theorem1Plan> {
    if g.m() > MAX_EDGES {
        return Err(Error::Precondition(format!(
            "{} edges exceeds the limit {MAX_EDGES}",
            g.m()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0 || g.degree(v) == 2) {
        return Err(Error::Precondition(format!(
            "vertex {v} has degree {}; degrees 0 and 2 are not allowed",
            g.degree(v)
        )));
    }
    bipartition(g)?;
    let st = st_partition(g)?;
    let mstar = extend_to_mstar(g, &st)?;

    let mut t_order: Vec<usize> = st.t.iter().copied().filter(|&y| g.degree(y) > 1).collect();
    let t1 = st.t.len() - t_order.len();
    t_order.extend(st.t.iter().copied().filter(|&y| g.degree(y) == 1));
    let unmatched_t: Vec<usize> =
        st.t.iter()
            .copied()
            .filter(|&y| !st.matching.is_saturated(y))
            .collect();

    let s_edges = g.induced_edges(st.s_mask());
    let h_edges: Vec<usize> = (0..g.m())
        .filter(|&e| {
            let (u, v) = g.endpoints(e);
            !(st.in_s(u) && st.in_s(v)) && !mstar.contains(e)
        })
        .collect();
    let mut in_h = vec![false; g.m()];
    for &e in &h_edges {
        in_h[e] = true;
    }
    let groups: Vec<EdgeGroup> = t_order[..t_order.len() - t1]
        .iter()
        .map(|&y| {
            let mut edges: Vec<usize> = g
                .incident(y)
                .iter()
                .map(|&(_, e)| e)
                .filter(|&e| in_h[e])
                .collect();
            edges.sort_unstable();
            EdgeGroup { vertex: y, edges }
        })
        .collect();

    let m1 = s_edges.len();
    let m2 = h_edges.len();
    let n2 = st.t.len();
    let k = groups.iter().filter(|grp| grp.edges.len() % 2 == 1).count();
    let (case, k, ell) = if n2 <= m2 {
        (Case::Case1, 0, 0)
    } else {
        let ell = (m2 - 3 * k) / 2;
        let case = if k + ell == 0 {
            Case::Degenerate
        } else if k == 0 {
            Case::Case21
        } else {
            Case::Case22
        };
        (case, k, ell)
    };
    let plan = Theorem1Plan {
        graph: g.clone(),
        st,
        mstar,
        t_order,
        unmatched_t,
        groups,
        s_edges,
        h_edges,
        m1,
        m2,
        t1,
        case,
        k,
        ell,
    };
    plan.validate()
        .map_err(|e| Error::Internal(format!("bipartite plan: {e}")))?;
    Ok(plan)
}

fn label_s_edges(plan: &Theorem1Plan, asm: &mut Assembly<'_>, p: u64) -> Result<()> {
    if plan.s_edges.is_empty() {
        return Ok(());
    }
    let (sub, parent) = plan.graph.spanning_subgraph(&plan.s_edges);
    let (o, l) = consecutive_labeling(&sub, p, &[])?;
    asm.import(&sub, &parent, &o, &l);
    Ok(())
}

fn require_case(plan: &Theorem1Plan, allowed: &[Case]) -> Result<()> {
    if allowed.contains(&plan.case) {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "plan is {}, labeler handles {allowed:?}",
            plan.case
        )))
    }
}

/// Edge of `M*` at `y`.
fn mstar_edge(plan: &Theorem1Plan, y: usize) -> usize {
    plan.mstar.at_t[y].expect("every T vertex has an M* edge")
}

/// Labels the `M*∖M` edges with `labels` in order of `unmatched_t`, then the
/// `M` edges with `matched_labels` (ascending) in order of the partial `S` sums.
fn label_mstar(
    plan: &Theorem1Plan,
    asm: &mut Assembly<'_>,
    unmatched_labels: impl IntoIterator<Item = u64>,
    matched_labels: impl IntoIterator<Item = u64>,
) {
    for (&y, l) in plan.unmatched_t.iter().zip(unmatched_labels) {
        asm.set(mstar_edge(plan, y), y, l);
    }
    let order = asm.sort_by_partial_sum(&plan.st.s);
    for (&x, l) in order.iter().zip(matched_labels) {
        let y = plan.st.matching.mate(x).expect("S is saturated");
        asm.set(mstar_edge(plan, y), y, l);
    }
}

/// `|T| ≤ e(H)` (and the all-leaves case): `H` takes `1..=m2` through a
/// zero-sum partition, `G[S]` the next `m1` labels, `M*` the top `n2`.
pub fn label_case1(plan: &Theorem1Plan) -> Result<Certificate> {
    require_case(plan, &[Case::Case1, Case::Degenerate])?;
    let g = &plan.graph;
    let (m1, m2) = (plan.m1 as u64, plan.m2 as u64);
    let (n1, n2) = (plan.n1() as u64, plan.n2() as u64);
    let mut asm = Assembly::new(g);
    if m2 > 0 {
        let sizes: Vec<usize> = plan.groups.iter().map(|grp| grp.edges.len()).collect();
        let parts = residue_partition(m2, &sizes)?;
        for (grp, part) in plan.groups.iter().zip(&parts.parts) {
            for (&e, &l) in grp.edges.iter().zip(part) {
                asm.set(e, grp.vertex, l);
            }
        }
    }
    label_s_edges(plan, &mut asm, m2)?;
    label_mstar(
        plan,
        &mut asm,
        (1..=n2 - n1).map(|i| m1 + m2 + i),
        (1..=n1).map(|i| m1 + m2 + n2 - n1 + i),
    );
    asm.finish(&format!("bipartite pipeline {}", plan.case))
}

/// `|T| > e(H)` with every group even: 2-blocks `{m1+n2+i, m−i+1}` all sum
/// to `m + m1 + n2 + 1`.
pub fn label_case21(plan: &Theorem1Plan) -> Result<Certificate> {
    require_case(plan, &[Case::Case21])?;
    let g = &plan.graph;
    let m = g.m() as u64;
    let m1 = plan.m1 as u64;
    let (n1, n2) = (plan.n1() as u64, plan.n2() as u64);
    let mut asm = Assembly::new(g);
    label_s_edges(plan, &mut asm, 0)?;
    let mut block = 0u64;
    for grp in &plan.groups {
        for pair in grp.edges.chunks(2) {
            block += 1;
            let labels = [m1 + n2 + block, m - (block - 1)];
            debug_assert_eq!(labels[0] + labels[1], m + m1 + n2 + 1);
            for (&e, l) in pair.iter().zip(labels) {
                asm.set(e, grp.vertex, l);
            }
        }
    }
    debug_assert_eq!(2 * block, plan.m2 as u64);
    label_mstar(
        plan,
        &mut asm,
        (1..=n2 - n1).map(|i| m1 + i),
        (1..=n1).map(|i| m1 + n2 - n1 + i),
    );
    asm.finish("bipartite pipeline Case21")
}

/// Labels never used on `H` or `G[S]` in Case 2.2, ascending.
pub fn case22_free_labels(m: u64, m1: u64, k: u64, ell: u64) -> Vec<u64> {
    let mut free: Vec<u64> = (m1 + 2 * k + 1..=m1 + 3 * k).collect();
    free.extend(m1 + 3 * k + ell + 1..=m + 1 - 2 * k - ell);
    free.extend((m + 3 - 2 * k..m).step_by(2));
    free
}

/// `|T| > e(H)` with `k ≥ 1` odd groups: each odd group takes one 3-block
/// `{i, m1+k+i, m−2i+2}`, everything else 2-blocks `{m1+3k+i, m−2k+2−i}`;
/// all blocks sum to `m + m1 + k + 2`. `G[S]` takes `k+1..=k+m1` and `M*`
/// the labels left over.
pub fn label_case22(plan: &Theorem1Plan) -> Result<Certificate> {
    require_case(plan, &[Case::Case22])?;
    let g = &plan.graph;
    let m = g.m() as u64;
    let m1 = plan.m1 as u64;
    let (k, ell) = (plan.k as u64, plan.ell as u64);
    let (n1, n2) = (plan.n1() as u64, plan.n2() as u64);
    let block_sum = m + m1 + k + 2;
    let mut asm = Assembly::new(g);
    let mut used = vec![false; g.m() + 1];
    let mut put = |asm: &mut Assembly<'_>, e: usize, y: usize, l: u64| {
        used[l as usize] = true;
        asm.set(e, y, l);
    };

    let mut triple = 0u64;
    for grp in plan.groups.iter().filter(|grp| grp.edges.len() % 2 == 1) {
        triple += 1;
        let labels = [triple, m1 + k + triple, m + 2 - 2 * triple];
        assert_eq!(labels.iter().sum::<u64>(), block_sum);
        for (&e, l) in grp.edges[..3].iter().zip(labels) {
            put(&mut asm, e, grp.vertex, l);
        }
    }
    let mut pair = 0u64;
    for grp in &plan.groups {
        let rest = if grp.edges.len() % 2 == 1 {
            &grp.edges[3..]
        } else {
            &grp.edges[..]
        };
        for chunk in rest.chunks(2) {
            pair += 1;
            let labels = [m1 + 3 * k + pair, m + 2 - 2 * k - pair];
            assert_eq!(labels[0] + labels[1], block_sum);
            for (&e, l) in chunk.iter().zip(labels) {
                put(&mut asm, e, grp.vertex, l);
            }
        }
    }
    if triple != k || pair != ell {
        return Err(Error::Internal(format!(
            "case 2.2 formed {triple} triples and {pair} pairs, expected {k} and {ell}"
        )));
    }
    if !plan.s_edges.is_empty() {
        let (sub, parent) = g.spanning_subgraph(&plan.s_edges);
        let (o, l) = consecutive_labeling(&sub, k, &[])?;
        for (i, &e) in parent.iter().enumerate() {
            put(&mut asm, e, o.tail(&sub, i), l.get(i));
        }
    }

    let free = case22_free_labels(m, m1, k, ell);
    let complement: Vec<u64> = (1..=m).filter(|&l| !used[l as usize]).collect();
    if free.len() as u64 != n2 || free != complement {
        return Err(Error::Internal(format!(
            "case 2.2 free labels: |B| = {}, n2 = {n2}, matches complement: {}",
            free.len(),
            free == complement
        )));
    }
    let split = (n2 - n1) as usize;
    label_mstar(
        plan,
        &mut asm,
        free[..split].iter().copied(),
        free[split..].iter().copied(),
    );
    asm.finish("bipartite pipeline Case22")
}

/// Runs the case labeler chosen by `plan`.
pub fn label(plan: &Theorem1Plan) -> Result<Certificate> {
    match plan.case {
        Case::Case1 | Case::Degenerate => label_case1(plan),
        Case::Case21 => label_case21(plan),
        Case::Case22 => label_case22(plan),
    }
}

/// Antimagic orientation of a bipartite graph with no vertex of degree 0 or 2.
pub fn antimagic_orientation_bipartite(g: &Graph) -> Result<Certificate> {
    label(&plan_theorem1(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{verify_antimagic, Verdict};

    fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..a {
            for j in 0..b {
                e.push((i, a + j));
            }
        }
        Graph::new(a + b, e).unwrap()
    }

    #[test]
    fn star_is_degenerate() {
        let star = complete_bipartite(1, 3);
        let plan = plan_theorem1(&star).unwrap();
        assert_eq!(plan.case, Case::Degenerate);
        assert_eq!((plan.n1(), plan.n2(), plan.m1, plan.m2, plan.t1), (1, 3, 0, 0, 3));
        assert_eq!(plan.mstar.edges.len(), 3);
        let cert = label(&plan).unwrap();
        let mut leaves = cert.sums[1..].to_vec();
        leaves.sort();
        assert_eq!(leaves, vec![-3, -2, -1]);
        assert_eq!(cert.sums[0], 6);
    }

    #[test]
    fn k33_is_case1() {
        let g = complete_bipartite(3, 3);
        let plan = plan_theorem1(&g).unwrap();
        assert_eq!(plan.case, Case::Case1);
        assert_eq!((plan.n1(), plan.n2(), plan.m1, plan.m2), (3, 3, 0, 6));
        let cert = label(&plan).unwrap();
        assert_eq!(cert.labeling.sorted(), (1..=9).collect::<Vec<_>>());
        assert_eq!(verify_antimagic(&cert), Verdict::Accept);
    }

    #[test]
    fn two_stars() {
        let g = Graph::new(8, vec![(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]).unwrap();
        assert!(antimagic_orientation_bipartite(&g).is_ok());
    }

    #[test]
    fn degree_two_is_rejected() {
        let p3 = Graph::new(3, vec![(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            antimagic_orientation_bipartite(&p3),
            Err(Error::Precondition(_))
        ));
        let iso = Graph::new(3, vec![(0, 1)]).unwrap();
        assert!(matches!(
            antimagic_orientation_bipartite(&iso),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn odd_cycle_is_rejected() {
        let mut e = vec![(0, 1), (1, 2), (2, 0)];
        e.extend([(0, 3), (1, 4), (2, 5)]);
        let g = Graph::new(6, e).unwrap();
        assert!(matches!(
            antimagic_orientation_bipartite(&g),
            Err(Error::NotBipartite { .. })
        ));
    }

    #[test]
    fn labeler_refuses_other_cases() {
        let plan = plan_theorem1(&complete_bipartite(3, 3)).unwrap();
        assert!(matches!(label_case21(&plan), Err(Error::Precondition(_))));
        assert!(matches!(label_case22(&plan), Err(Error::Precondition(_))));
    }

    #[test]
    fn empty_graph() {
        let cert = antimagic_orientation_bipartite(&Graph::empty(0)).unwrap();
        assert!(cert.sums.is_empty());
    }
}

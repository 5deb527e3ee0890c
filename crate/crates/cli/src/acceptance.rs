//! The acceptance suite: nine criteria, each reported as one line.
//!
//! Contract checks here recompute sums and label sets from scratch rather
//! than calling the library's own postcondition checkers, so a bug shared
//! by a construction and its checker still shows up.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use antimagic::bipartite::st_construction;
use antimagic::generate::{complete, complete_bipartite, generate, rng_from_seed, Family};
use antimagic::io::write_edge_list;
use antimagic::oracle::brute_force_antimagic;
use antimagic::residue::residue_partition;
use antimagic::theorem1::{label, plan_theorem1, Case};
use antimagic::theorem2::antimagic_orientation_mindegree;
use antimagic::trail::{consecutive_labeling, teven_labeling};
use antimagic::{verify_antimagic, Graph, Labeling, Orientation, Verdict};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::small_graphs::without_degree_two;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "criterion {} [{status}] {}: {}",
            self.id, self.name, self.detail
        )
    }
}

fn report(id: u8, name: &'static str, passed: bool, detail: String) -> CriterionReport {
    CriterionReport {
        id,
        name,
        passed,
        detail,
    }
}

pub fn run_all() -> Vec<CriterionReport> {
    vec![
        bipartite_end_to_end(),
        mindegree_end_to_end(),
        residue_partitions(),
        consecutive_contract(),
        teven_contract(),
        st_partition_contract(),
        oracle_concordance(),
        determinism(),
        scale(),
    ]
}

fn secs(d: Duration) -> String {
    format!("{:.3}s", d.as_secs_f64())
}

fn sums_of(g: &Graph, orientation: &Orientation, labeling: &Labeling) -> Vec<i64> {
    let mut sums = vec![0i64; g.n()];
    for e in 0..g.m() {
        let l = labeling.get(e) as i64;
        sums[orientation.head(g, e)] += l;
        sums[orientation.tail(g, e)] -= l;
    }
    sums
}

fn floor_half_below(d: usize) -> i64 {
    (d as i64 - 1).div_euclid(2)
}

fn sorted_labels(labeling: &Labeling) -> Vec<u64> {
    let mut v = labeling.labels().to_vec();
    v.sort_unstable();
    v
}

/// Random graph on `n` vertices with each pair present with probability `p`.
fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("simple by construction")
}

/// Random bipartite graph with sides `0..nx` and `nx..nx+ny`.
fn bipartite_gnp(nx: usize, ny: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for x in 0..nx {
        for y in nx..nx + ny {
            if rng.gen_bool(p) {
                edges.push((x, y));
            }
        }
    }
    Graph::new(nx + ny, edges).expect("simple by construction")
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let shift = a.n();
    let edges = a
        .edges()
        .iter()
        .copied()
        .chain(b.edges().iter().map(|&(u, v)| (u + shift, v + shift)))
        .collect();
    Graph::new(a.n() + b.n(), edges).expect("union of simple graphs")
}

fn case_index(case: Case) -> usize {
    match case {
        Case::Case1 => 0,
        Case::Case21 => 1,
        Case::Case22 => 2,
        Case::Degenerate => 3,
    }
}

const CASE_NAMES: [&str; 4] = ["Case1", "Case21", "Case22", "Degenerate"];

/// A random bipartite graph with no vertex of degree 0 or 2 and at most 200
/// vertices, drawn from a mix of families.
fn bipartite_instance(seed: u64) -> Option<Graph> {
    let mut rng = rng_from_seed(seed);
    let family = match rng.gen_range(0..10) {
        0..=4 => Family::RandomBipartite {
            nx: rng.gen_range(2..=80),
            ny: rng.gen_range(2..=100),
            dmax: rng.gen_range(3..=12),
            leaf_prob: rng.gen_range(0.0..0.8),
        },
        5..=7 => Family::TreeOfStars {
            centers: rng.gen_range(1..=40),
            max_leaves: rng.gen_range(1..=3),
        },
        8 => Family::CompleteBipartite {
            a: rng.gen_range(3..=12),
            b: rng.gen_range(3..=12),
        },
        // K_{1,2} would put a degree-2 vertex at the center
        _ => Family::Star {
            t: match rng.gen_range(2..=150) {
                2 => 1,
                t => t,
            },
        },
    };
    generate(&family, rng.gen()).ok().filter(|g| g.n() <= 200)
}

/// Criterion 1: the bipartite pipeline on 500 graphs spread over all case tags.
pub fn bipartite_end_to_end() -> CriterionReport {
    const PER_CASE: usize = 125;
    const MAX_SEEDS: u64 = 100_000;
    let start = Instant::now();
    let mut counts = [0usize; 4];
    let mut accepted = 0usize;
    let mut failures = Vec::new();
    let mut seed = 0u64;
    while counts.iter().any(|&c| c < PER_CASE) && seed < MAX_SEEDS {
        seed += 1;
        let Some(g) = bipartite_instance(seed) else {
            continue;
        };
        let plan = match plan_theorem1(&g) {
            Ok(plan) => plan,
            Err(e) => {
                failures.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        let slot = case_index(plan.case);
        if counts[slot] >= PER_CASE {
            continue;
        }
        counts[slot] += 1;
        match label(&plan) {
            Ok(cert) if verify_antimagic(&cert).is_accept() => accepted += 1,
            Ok(_) => failures.push(format!("seed {seed}: certificate rejected")),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let total: usize = counts.iter().sum();
    let passed = total == 4 * PER_CASE
        && accepted == total
        && failures.is_empty()
        && elapsed < Duration::from_secs(10);
    let tags: Vec<String> = CASE_NAMES
        .iter()
        .zip(counts)
        .map(|(n, c)| format!("{n}={c}"))
        .collect();
    let mut detail = format!(
        "{accepted}/{total} verified ({}), {} (limit 10s)",
        tags.join(" "),
        secs(elapsed)
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; {} failures, first: {first}", failures.len()));
    }
    report(1, "bipartite pipeline end-to-end", passed, detail)
}

/// Criterion 2: the min-degree pipeline on K34, K35, K40 and 50 random graphs.
pub fn mindegree_end_to_end() -> CriterionReport {
    let mut instances: Vec<(String, Graph)> = [34, 35, 40]
        .iter()
        .map(|&n| (format!("K{n}"), complete(n)))
        .collect();
    let mut rng = rng_from_seed(0x2024);
    while instances.len() < 53 {
        let n = rng.gen_range(40..=120);
        let d = rng.gen_range(33..=n - 2);
        let seed = rng.gen();
        if let Ok(g) = generate(&Family::NearRegular { n, d }, seed) {
            instances.push((format!("near-regular n={n} d={d} seed={seed}"), g));
        }
    }
    let mut accepted = 0;
    let mut worst = Duration::ZERO;
    let mut failures = Vec::new();
    for (name, g) in &instances {
        let start = Instant::now();
        let result = antimagic_orientation_mindegree(g).map(|c| verify_antimagic(&c));
        let elapsed = start.elapsed();
        worst = worst.max(elapsed);
        match result {
            Ok(Verdict::Accept) if elapsed < Duration::from_secs(1) => accepted += 1,
            Ok(Verdict::Accept) => failures.push(format!("{name}: took {}", secs(elapsed))),
            Ok(Verdict::Reject(v)) => failures.push(format!("{name}: {v}")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let mut detail = format!(
        "{accepted}/{} verified, slowest {} (limit 1s each)",
        instances.len(),
        secs(worst)
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    report(2, "min-degree pipeline end-to-end", failures.is_empty(), detail)
}

/// All multisets of part sizes `≥ 2` summing to `n`, each nonincreasing.
fn size_multisets(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(current.clone());
            return;
        }
        for r in (2..=cap.min(left)).rev() {
            current.push(r);
            rec(left - r, r, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn random_sizes(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let cap = *[3, 5, 10, n].choose(rng).expect("nonempty");
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        if left <= 3 {
            sizes.push(left);
            break;
        }
        let mut r = rng.gen_range(2..=cap.clamp(2, left));
        if left - r == 1 {
            r = left;
        }
        sizes.push(r);
        left -= r;
    }
    sizes.shuffle(rng);
    sizes
}

/// Independent check of a zero-sum partition of `1..=n`.
fn residue_ok(n: u64, sizes: &[usize], parts: &[Vec<u64>]) -> Result<(), String> {
    let modulus = if n.is_multiple_of(2) { n + 1 } else { n };
    if parts.len() != sizes.len() {
        return Err(format!("{} parts for {} sizes", parts.len(), sizes.len()));
    }
    let mut all: Vec<u64> = parts.iter().flatten().copied().collect();
    all.sort_unstable();
    if all != (1..=n).collect::<Vec<_>>() {
        return Err("parts do not partition 1..=n".into());
    }
    for (part, &r) in parts.iter().zip(sizes) {
        if part.len() != r || part.iter().sum::<u64>() % modulus != 0 {
            return Err(format!("part {part:?} (size {r}) fails"));
        }
    }
    Ok(())
}

/// Criterion 3: residue partitions, exhaustively for small `n` and at random.
pub fn residue_partitions() -> CriterionReport {
    let mut cases: Vec<(u64, Vec<usize>)> = Vec::new();
    for n in 2..=12 {
        for sizes in size_multisets(n) {
            let mut ascending = sizes.clone();
            ascending.reverse();
            if ascending != sizes {
                cases.push((n as u64, ascending));
            }
            cases.push((n as u64, sizes));
        }
    }
    let exhaustive = cases.len();
    let mut rng = rng_from_seed(0x22);
    for _ in 0..1000 {
        let n = rng.gen_range(2..=60);
        cases.push((n as u64, random_sizes(n, &mut rng)));
    }
    let mut failures = Vec::new();
    for (n, sizes) in &cases {
        let outcome = residue_partition(*n, sizes)
            .map_err(|e| e.to_string())
            .and_then(|p| residue_ok(*n, sizes, &p.parts));
        if let Err(e) = outcome {
            failures.push(format!("n={n} sizes={sizes:?}: {e}"));
        }
    }
    let ok = cases.len() - failures.len();
    let mut detail = format!(
        "{ok}/{} accepted ({exhaustive} exhaustive orders for n <= 12, 1000 random for n <= 60)",
        cases.len()
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    report(3, "residue partitions", failures.is_empty(), detail)
}

/// Even-degree vertices kept only while they have a neighbor outside the set.
fn random_exact_set(g: &Graph, rng: &mut impl Rng) -> Vec<usize> {
    let mut inside: Vec<bool> = (0..g.n())
        .map(|v| g.degree(v) >= 2 && g.degree(v).is_multiple_of(2) && rng.gen_bool(0.5))
        .collect();
    loop {
        let stuck: Vec<usize> = (0..g.n())
            .filter(|&v| inside[v] && g.neighbors(v).all(|u| inside[u]))
            .collect();
        if stuck.is_empty() {
            break;
        }
        for v in stuck {
            inside[v] = false;
        }
    }
    (0..g.n()).filter(|&v| inside[v]).collect()
}

/// Criterion 4: the consecutive labeling contract.
pub fn consecutive_contract() -> CriterionReport {
    let mut rng = rng_from_seed(0x23);
    let mut failures = Vec::new();
    let (mut total, mut exact_total) = (0, 0);
    while total < 200 {
        let n = rng.gen_range(2..=60);
        let g = gnp(n, rng.gen_range(0.05..0.6), &mut rng);
        if g.m() == 0 {
            continue;
        }
        total += 1;
        let exact = random_exact_set(&g, &mut rng);
        exact_total += exact.len();
        let p: u64 = rng.gen_range(0..1000);
        let check = consecutive_labeling(&g, p, &exact)
            .map_err(|e| e.to_string())
            .and_then(|(o, l)| {
                let top = p + g.m() as u64;
                if sorted_labels(&l) != (p + 1..=top).collect::<Vec<_>>() {
                    return Err("label set is not p+1..=p+m".into());
                }
                let sums = sums_of(&g, &o, &l);
                if let Some(v) =
                    (0..g.n()).find(|&v| (sums[v] - floor_half_below(g.degree(v))).abs() > top as i64)
                {
                    return Err(format!("vertex {v} sum {} out of bounds", sums[v]));
                }
                if let Some(&v) = exact.iter().find(|&&v| sums[v] != g.degree(v) as i64 / 2) {
                    return Err(format!("exact vertex {v} sum {}", sums[v]));
                }
                Ok(())
            });
        if let Err(e) = check {
            failures.push(format!("graph {total} (n={n}, m={}): {e}", g.m()));
        }
    }
    let mut detail = format!(
        "{}/{total} satisfy the contract ({exact_total} exact-sum vertices checked)",
        total - failures.len()
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    report(4, "consecutive labeling contract", failures.is_empty(), detail)
}

/// Bipartite graph whose T vertices all have even positive degree, with
/// vertex ids shuffled. Returns the graph, S and T.
fn even_t_instance(rng: &mut impl Rng) -> (Graph, Vec<usize>, Vec<usize>) {
    let ns = rng.gen_range(2..=40);
    let nt = rng.gen_range(1..=40);
    let mut ids: Vec<usize> = (0..ns + nt).collect();
    ids.shuffle(rng);
    let (s, t) = (ids[..ns].to_vec(), ids[ns..].to_vec());
    let mut edges = Vec::new();
    for &y in &t {
        let d = 2 * rng.gen_range(1..=ns / 2);
        for &x in s.choose_multiple(rng, d) {
            edges.push((x, y));
        }
    }
    (Graph::new(ns + nt, edges).expect("simple by construction"), s, t)
}

/// Criterion 5: the even-T labeling contract, with the S bounds
/// `⌊(d−1)/2⌋ ± δ`.
pub fn teven_contract() -> CriterionReport {
    let mut rng = rng_from_seed(0x24);
    let mut failures = Vec::new();
    for i in 0..200 {
        let (g, s, t) = even_t_instance(&mut rng);
        let p: u64 = rng.gen_range(0..1000);
        let check = teven_labeling(&g, &s, &t, p)
            .map_err(|e| e.to_string())
            .and_then(|out| {
                let m = g.m() as u64;
                let delta = if m.is_multiple_of(4) { p + m } else { p + m + 1 };
                let mut expected: Vec<u64> = (p + 1..p + m).collect();
                expected.push(delta);
                if out.top_label != delta || sorted_labels(&out.labeling) != expected {
                    return Err(format!("label set is not p+1..p+m-1 plus {delta}"));
                }
                let sums = sums_of(&g, &out.orientation, &out.labeling);
                if let Some(&y) = t.iter().find(|&&y| sums[y] != -(g.degree(y) as i64)) {
                    return Err(format!("T vertex {y} sum {}", sums[y]));
                }
                let delta = delta as i64;
                if let Some(&x) = s
                    .iter()
                    .find(|&&x| (sums[x] - floor_half_below(g.degree(x))).abs() > delta)
                {
                    return Err(format!("S vertex {x} (degree {}) sum {}", g.degree(x), sums[x]));
                }
                Ok(())
            });
        if let Err(e) = check {
            failures.push(format!("graph {i} (m={}): {e}", g.m()));
        }
    }
    let mut detail = format!("{}/200 satisfy the contract", 200 - failures.len());
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    report(5, "even-T labeling contract", failures.is_empty(), detail)
}

fn st_instance(i: usize, rng: &mut impl Rng) -> Graph {
    match i % 3 {
        0 => {
            let (nx, ny) = (rng.gen_range(1..=60), rng.gen_range(1..=60));
            bipartite_gnp(nx, ny, rng.gen_range(0.01..0.3), rng)
        }
        1 => loop {
            let family = Family::RandomBipartite {
                nx: rng.gen_range(2..=60),
                ny: rng.gen_range(2..=60),
                dmax: rng.gen_range(3..=8),
                leaf_prob: rng.gen_range(0.0..0.9),
            };
            if let Ok(g) = generate(&family, rng.gen()) {
                break g;
            }
        },
        _ => {
            let a = bipartite_gnp(
                rng.gen_range(1..=30),
                rng.gen_range(1..=30),
                rng.gen_range(0.05..0.5),
                rng,
            );
            let b = bipartite_gnp(
                rng.gen_range(1..=30),
                rng.gen_range(1..=30),
                rng.gen_range(0.05..0.5),
                rng,
            );
            disjoint_union(&a, &b)
        }
    }
}

/// Criterion 6: the S/T partition contract.
pub fn st_partition_contract() -> CriterionReport {
    let mut rng = rng_from_seed(0x25);
    let mut failures = Vec::new();
    let (mut disconnected, mut unsaturated) = (0, 0);
    for i in 0..300 {
        let g = st_instance(i, &mut rng);
        disconnected += usize::from(!g.is_connected());
        let check = st_construction(&g).map_err(|e| e.to_string()).and_then(|c| {
            let st = &c.partition;
            let n = g.n();
            let mut in_s = vec![None; n];
            for &v in &st.s {
                in_s[v] = Some(true);
            }
            for &v in &st.t {
                if in_s[v].replace(false).is_some() {
                    return Err(format!("vertex {v} in both S and T"));
                }
            }
            if let Some(v) = (0..n).find(|&v| in_s[v].is_none()) {
                return Err(format!("vertex {v} in neither S nor T"));
            }
            let in_s: Vec<bool> = in_s.into_iter().map(|s| s == Some(true)).collect();
            if let Some(&(u, v)) = g.edges().iter().find(|&&(u, v)| !in_s[u] && !in_s[v]) {
                return Err(format!("T spans edge {u}-{v}"));
            }
            let mut covered = vec![false; n];
            for &e in &st.matching.edges {
                let (u, v) = g.endpoints(e);
                if in_s[u] == in_s[v] {
                    return Err(format!("matching edge {u}-{v} does not join S and T"));
                }
                if std::mem::replace(&mut covered[u], true) || std::mem::replace(&mut covered[v], true) {
                    return Err(format!("matching edges share a vertex at edge {u}-{v}"));
                }
            }
            if let Some(&x) = st.s.iter().find(|&&x| !covered[x]) {
                return Err(format!("S vertex {x} unsaturated"));
            }
            if st.matching.edges.len() != st.s.len() {
                return Err(format!(
                    "|M| = {} but |S| = {}",
                    st.matching.edges.len(),
                    st.s.len()
                ));
            }
            if !c.a_layers.is_empty() {
                unsaturated += 1;
                let mut in_d0 = vec![false; n];
                for &v in &c.d0 {
                    in_d0[v] = true;
                }
                if c.a_layers
                    .iter()
                    .flatten()
                    .any(|&a| g.neighbors(a).any(|w| in_d0[w]))
                {
                    return Err("an A layer has an edge into D0".into());
                }
            }
            Ok(())
        });
        if let Err(e) = check {
            failures.push(format!("graph {i} (n={}, m={}): {e}", g.n(), g.m()));
        }
    }
    let mut detail = format!(
        "{}/300 satisfy the contract ({disconnected} disconnected, {unsaturated} unsaturated constructions)",
        300 - failures.len()
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    report(6, "S/T partition contract", failures.is_empty(), detail)
}

/// Criterion 7: exhaustive search agrees with the bipartite pipeline on
/// every small graph in its domain.
pub fn oracle_concordance() -> CriterionReport {
    const BUDGET: u64 = 200_000_000;
    let graphs = without_degree_two(7);
    let mut failures = Vec::new();
    let mut worst = Duration::ZERO;
    for g in &graphs {
        let start = Instant::now();
        let oracle = brute_force_antimagic(g, BUDGET);
        let elapsed = start.elapsed();
        worst = worst.max(elapsed);
        let name = format!("n={} edges={:?}", g.n(), g.edges());
        match oracle {
            Ok(r) if r.exists() && elapsed < Duration::from_secs(5) => {}
            Ok(r) => failures.push(format!("{name}: oracle {} in {}", r.status, secs(elapsed))),
            Err(e) => failures.push(format!("{name}: oracle error {e}")),
        }
        match plan_theorem1(g).and_then(|p| label(&p)) {
            Ok(cert) if verify_antimagic(&cert).is_accept() => {}
            Ok(_) => failures.push(format!("{name}: certificate rejected")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let mut detail = format!(
        "{} graphs up to isomorphism, {} failures, slowest oracle {} (limit 5s)",
        graphs.len(),
        failures.len(),
        secs(worst)
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    report(
        7,
        "oracle concordance",
        failures.is_empty() && !graphs.is_empty(),
        detail,
    )
}

struct ScratchDir(PathBuf);

impl ScratchDir {
    fn new(tag: &str) -> std::io::Result<Self> {
        let nanos = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_nanos())
            .unwrap_or(0);
        let dir = std::env::temp_dir().join(format!("antimagic-{tag}-{}-{nanos}", std::process::id()));
        fs::create_dir_all(&dir)?;
        Ok(ScratchDir(dir))
    }
}

impl Drop for ScratchDir {
    fn drop(&mut self) {
        let _ = fs::remove_dir_all(&self.0);
    }
}

fn run_quiet(args: &[&str]) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    crate::run_cli_with(
        std::iter::once("antimagic").chain(args.iter().copied()),
        &mut out,
        &mut err,
    )
}

/// Criterion 8: repeated `orient` runs give identical bytes.
pub fn determinism() -> CriterionReport {
    let dir = match ScratchDir::new("determinism") {
        Ok(d) => d,
        Err(e) => {
            return report(
                8,
                "determinism",
                false,
                format!("cannot create scratch directory: {e}"),
            )
        }
    };
    let mut corpus: Vec<(&str, Graph, u64)> = Vec::new();
    let mut seed = 0;
    while corpus.len() < 10 {
        seed += 1;
        if let Some(g) = bipartite_instance(1_000_000 + seed) {
            corpus.push(("bipartite", g, seed));
        }
    }
    let mut rng = rng_from_seed(0x26);
    while corpus.len() < 20 {
        let n = rng.gen_range(40..=80);
        let d = rng.gen_range(33..=n - 2);
        if let Ok(g) = generate(&Family::NearRegular { n, d }, rng.gen()) {
            corpus.push(("mindegree", g, rng.gen_range(0..1000)));
        }
    }
    let mut failures = Vec::new();
    for (i, (mode, g, seed)) in corpus.iter().enumerate() {
        let input = dir.0.join(format!("g{i}.txt"));
        let outputs = [
            dir.0.join(format!("c{i}a.json")),
            dir.0.join(format!("c{i}b.json")),
        ];
        if let Err(e) = fs::write(&input, write_edge_list(g)) {
            failures.push(format!("instance {i}: {e}"));
            continue;
        }
        let seed = seed.to_string();
        let codes: Vec<i32> = outputs
            .iter()
            .map(|out| {
                run_quiet(&[
                    "orient",
                    "--mode",
                    mode,
                    "--input",
                    input.to_str().expect("utf-8 temp path"),
                    "--seed",
                    &seed,
                    "--output",
                    out.to_str().expect("utf-8 temp path"),
                ])
            })
            .collect();
        if codes != [0, 0] {
            failures.push(format!("instance {i} ({mode}): exit codes {codes:?}"));
            continue;
        }
        match (fs::read(&outputs[0]), fs::read(&outputs[1])) {
            (Ok(a), Ok(b)) if a == b => {
                let code = run_quiet(&["verify", outputs[0].to_str().expect("utf-8 temp path")]);
                if code != 0 {
                    failures.push(format!("instance {i} ({mode}): verify exited {code}"));
                }
            }
            (Ok(_), Ok(_)) => failures.push(format!("instance {i} ({mode}): outputs differ")),
            (Err(e), _) | (_, Err(e)) => failures.push(format!("instance {i}: {e}")),
        }
    }
    let mut detail = format!(
        "{}/{} instances byte-identical across two runs",
        corpus.len() - failures.len(),
        corpus.len()
    );
    if let Some(first) = failures.first() {
        detail.push_str(&format!("; first failure: {first}"));
    }
    report(8, "determinism", failures.is_empty(), detail)
}

/// Criterion 9: bipartite pipeline and verifier on 10^5 edges.
pub fn scale() -> CriterionReport {
    let mut instances = vec![("K250,400".to_string(), complete_bipartite(250, 400))];
    let sparse = Family::RandomBipartite {
        nx: 25_000,
        ny: 25_000,
        dmax: 6,
        leaf_prob: 0.2,
    };
    match generate(&sparse, 9) {
        Ok(g) => instances.push((format!("sparse random n={}", g.n()), g)),
        Err(e) => return report(9, "scale", false, format!("sparse generator failed: {e}")),
    }
    let mut parts = Vec::new();
    let mut passed = true;
    for (name, g) in &instances {
        let start = Instant::now();
        let cert = plan_theorem1(g).and_then(|p| label(&p));
        let build = start.elapsed();
        let Ok(cert) = cert else {
            passed = false;
            parts.push(format!("{name}: {}", cert.unwrap_err()));
            continue;
        };
        let start = Instant::now();
        let verdict = verify_antimagic(&cert);
        let check = start.elapsed();
        passed &= verdict.is_accept() && build < Duration::from_secs(5) && check < Duration::from_secs(1);
        parts.push(format!(
            "{name} m={}: build {} (limit 5s), verify {} (limit 1s), {}",
            g.m(),
            secs(build),
            secs(check),
            if verdict.is_accept() {
                "accepted"
            } else {
                "REJECTED"
            }
        ));
    }
    report(9, "scale", passed, parts.join("; "))
}

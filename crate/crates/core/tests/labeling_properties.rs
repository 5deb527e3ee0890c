use antimagic::graph::{oriented_vertex_sums, Graph};
use antimagic::residue::{residue_partition, verify_residue_partition};
use antimagic::trail::{check_consecutive, check_teven, consecutive_labeling, teven_labeling};
use proptest::prelude::*;
use proptest::sample::subsequence;

/// Part sizes, each at least 2, with their total.
fn sizes() -> impl Strategy<Value = (u64, Vec<usize>)> {
    prop::collection::vec(2usize..9, 1..12).prop_map(|s| (s.iter().sum::<usize>() as u64, s))
}

/// Bipartite graph with S = 0..ns and T after it, every T degree even.
fn even_t_graph() -> impl Strategy<Value = (Graph, Vec<usize>, Vec<usize>)> {
    (2usize..16, 1usize..16).prop_flat_map(|(ns, nt)| {
        let pick = (1..=ns / 2).prop_flat_map(move |half| subsequence((0..ns).collect::<Vec<_>>(), 2 * half));
        prop::collection::vec(pick, nt).prop_map(move |neighbors| {
            let edges = neighbors
                .iter()
                .enumerate()
                .flat_map(|(i, xs)| xs.iter().map(move |&x| (x, ns + i)))
                .collect();
            let g = Graph::new(ns + nt, edges).unwrap();
            (g, (0..ns).collect(), (ns..ns + nt).collect())
        })
    })
}

fn any_graph() -> impl Strategy<Value = Graph> {
    (2usize..20).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let len = pairs.len();
        subsequence(pairs, 1..=len).prop_map(move |edges| Graph::new(n, edges).unwrap())
    })
}

proptest! {
    #[test]
    fn residue_partitions_hold((n, sizes) in sizes()) {
        let p = residue_partition(n, &sizes).unwrap();
        prop_assert_eq!(verify_residue_partition(&p, n, &sizes), Ok(()));
    }

    #[test]
    fn teven_meets_its_contract((g, s, t) in even_t_graph(), p in 0u64..100) {
        let out = teven_labeling(&g, &s, &t, p).unwrap();
        prop_assert_eq!(check_teven(&g, &s, &t, p, &out), Ok(()));
    }

    #[test]
    fn consecutive_meets_its_contract(g in any_graph(), p in 0u64..100) {
        let exact: Vec<usize> = (0..g.n())
            .filter(|&v| g.degree(v) >= 2 && g.degree(v) % 2 == 0 && g.neighbors(v).any(|u| g.degree(u) % 2 == 1))
            .collect();
        let (o, l) = consecutive_labeling(&g, p, &exact).unwrap();
        prop_assert_eq!(check_consecutive(&g, p, &exact, &o, &l), Ok(()));
        let sums = oriented_vertex_sums(&g, &o, &l).unwrap();
        for &v in &exact {
            prop_assert_eq!(sums[v], g.degree(v) as i64 / 2);
        }
    }
}

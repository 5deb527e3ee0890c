use antimagic::generate::{generate, hypercube, rng_from_seed, Family};
use antimagic::io::{CertificateDocument, Meta};
use antimagic::theorem1::{label, plan_theorem1, Case};
use antimagic::theorem2::{
    antimagic_orientation_mindegree, antimagic_orientation_mindegree_with, build_theorem2_plan,
    MinDegreeOptions, Outcome,
};
use antimagic::{verify_antimagic, Error};
use rand::Rng;

#[test]
fn bipartite_pipeline_covers_every_case() {
    let mut seen = std::collections::HashSet::new();
    for seed in 0..300u64 {
        let mut rng = rng_from_seed(seed);
        let family = if seed % 2 == 0 {
            Family::RandomBipartite {
                nx: rng.gen_range(2..40),
                ny: rng.gen_range(2..60),
                dmax: rng.gen_range(3..8),
                leaf_prob: rng.gen_range(0.0..0.8),
            }
        } else {
            Family::TreeOfStars {
                centers: rng.gen_range(1..30),
                max_leaves: rng.gen_range(1..4),
            }
        };
        let Ok(g) = generate(&family, seed) else { continue };
        let plan = plan_theorem1(&g).unwrap();
        seen.insert(plan.case);
        let cert = label(&plan).unwrap();
        assert!(verify_antimagic(&cert).is_accept(), "{family:?} seed {seed}");
    }
    for case in [Case::Case1, Case::Case21, Case::Case22, Case::Degenerate] {
        assert!(seen.contains(&case), "{case} never produced");
    }
}

#[test]
fn hypercubes() {
    for k in 3..=9 {
        let g = hypercube(k).unwrap();
        let cert = label(&plan_theorem1(&g).unwrap()).unwrap();
        assert!(verify_antimagic(&cert).is_accept(), "Q{k}");
    }
}

#[test]
fn certificates_survive_serialization() {
    let g = generate(
        &Family::TreeOfStars {
            centers: 12,
            max_leaves: 3,
        },
        4,
    )
    .unwrap();
    let cert = label(&plan_theorem1(&g).unwrap()).unwrap();
    let doc = CertificateDocument::from_certificate(&cert, Meta::new("bipartite"));
    let back = CertificateDocument::from_json(&doc.to_json())
        .unwrap()
        .to_certificate()
        .unwrap();
    assert!(verify_antimagic(&back).is_accept());
    assert_eq!(back.sums, cert.sums);
}

#[test]
fn mindegree_pipeline_on_near_regular_graphs() {
    let mut rng = rng_from_seed(77);
    for _ in 0..30 {
        let n = rng.gen_range(40..=100);
        let d = rng.gen_range(33..=n - 2);
        let g = generate(&Family::NearRegular { n, d }, rng.gen()).unwrap();
        let plan = build_theorem2_plan(&g, None).unwrap();
        plan.validate().unwrap();
        let cert = antimagic_orientation_mindegree(&g).unwrap();
        assert!(verify_antimagic(&cert).is_accept(), "n={n} d={d}");
    }
}

#[test]
fn seeded_cuts_also_work() {
    let g = generate(&Family::NearRegular { n: 70, d: 40 }, 3).unwrap();
    for seed in 0..10 {
        let opts = MinDegreeOptions {
            seed: Some(seed),
            unsafe_mode: false,
        };
        match antimagic_orientation_mindegree_with(&g, &opts).unwrap() {
            Outcome::Accepted(cert) => assert!(verify_antimagic(&cert).is_accept()),
            Outcome::Rejected { violation, .. } => panic!("seed {seed}: {violation}"),
        }
    }
}

#[test]
fn unsafe_mode_never_fails_internally() {
    let opts = MinDegreeOptions {
        seed: None,
        unsafe_mode: true,
    };
    for d in [4usize, 8, 16, 28] {
        for seed in 0..10u64 {
            let g = generate(&Family::NearRegular { n: 60, d }, seed).unwrap();
            match antimagic_orientation_mindegree_with(&g, &opts) {
                Ok(Outcome::Accepted(cert)) => assert!(verify_antimagic(&cert).is_accept()),
                Ok(Outcome::Rejected { certificate, .. }) => {
                    assert!(!verify_antimagic(&certificate).is_accept())
                }
                Err(Error::Structural { .. }) => {}
                Err(e) => panic!("d={d} seed={seed}: {e}"),
            }
        }
    }
}

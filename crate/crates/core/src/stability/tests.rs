use num_rational::BigRational;

use super::*;
use crate::detect::contains_fano;
use crate::hypergraph::Generator;
use crate::multigraph::Multigraph;

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// delta = 9/625 puts delta_1 = (5/3) sqrt(delta) at exactly 0.2.
fn relaxed_cfg() -> StabilityConfig {
    StabilityConfig::relaxed(rat(9, 625))
}

fn bn(n: usize) -> Hypergraph3 {
    Hypergraph3::generate(Generator::Bn(n)).unwrap()
}

#[test]
fn config_validation() {
    assert!(StabilityConfig::relaxed(rat(9, 625)).validate().is_ok());
    assert!(StabilityConfig::strict(rat(9, 625)).validate().is_err());
    assert!(StabilityConfig::relaxed(rat(0, 1)).validate().is_err());
    assert!(StabilityConfig::relaxed(rat(3, 2)).validate().is_err());
    let tiny = BigRational::new(1.into(), num_bigint::BigInt::from(36u64).pow(8) * 2);
    assert!(StabilityConfig::strict(tiny).validate().is_ok());
}

#[test]
fn bn40_relaxed_recovers_the_parts() {
    let h = bn(40);
    let out = run_stability(&h, &relaxed_cfg()).unwrap();
    let rep = out.partition().expect("partition expected");
    assert_eq!(rep.a, (20..40).collect::<Vec<_>>());
    assert_eq!(rep.b, (0..20).collect::<Vec<_>>());
    assert_eq!(rep.e_a + rep.e_b, 0);
    assert_eq!(
        (rep.bad_pairs.i, rep.bad_pairs.ii, rep.bad_pairs.iii),
        (0, 0, 0)
    );
    assert_eq!(rep.trace.case, Some(1));
    assert!(rep.trace.peeled_degree.is_empty());
    assert_eq!(rep.trace.class_sizes.unwrap()[2], 0); // C empty
    assert_eq!(rep.trace.class_sizes.unwrap()[3], 0); // D empty
    // the split pairs part-0 apexes with the B side
    assert_eq!(rep.split, ([0, 1], [20, 21]));
    assert!(!rep.chain.certified); // relaxed delta is outside the theorem range
}

#[test]
fn bn40_without_dropping_lower_order_peels_out() {
    let mut cfg = relaxed_cfg();
    cfg.drop_lower_order = false;
    // threshold 480 + 120 = 600 exceeds every degree (570)
    let out = run_stability(&bn(40), &cfg).unwrap();
    let cert = out.certificate().expect("certificate expected");
    assert_eq!(cert.stage(), Some("degree-peel"));
}

#[test]
fn bn40_strict_peels_out() {
    let tiny = BigRational::new(1.into(), num_bigint::BigInt::from(36u64).pow(8) * 36);
    let out = run_stability(&bn(40), &StabilityConfig::strict(tiny)).unwrap();
    let cert = out.certificate().expect("certificate expected");
    assert_eq!(cert.stage(), Some("degree-peel"));
    // the violation names a stage that was executed
    assert!(out
        .trace()
        .stages
        .iter()
        .any(|s| s == cert.stage().unwrap()));
}

#[test]
fn empty_hypergraph_peels_to_violation() {
    let h = Hypergraph3::new(6, vec![]).unwrap();
    let out = run_stability(&h, &relaxed_cfg()).unwrap();
    assert_eq!(out.certificate().unwrap().stage(), Some("degree-peel"));
}

#[test]
fn complete12_yields_a_verified_fano_witness() {
    let h = Hypergraph3::generate(Generator::Complete(12)).unwrap();
    let out = run_stability(&h, &relaxed_cfg()).unwrap();
    let cert = out.certificate().expect("complete(12) cannot be stable");
    let w = cert.witness().expect("a witness is reachable here");
    w.validate(&h).unwrap();
    assert_eq!(out.trace().case, Some(2));
}

#[test]
fn planted_fano_in_bn24_yields_witness_via_case2() {
    let mut edges = bn(24).edges().to_vec();
    edges.push([0, 2, 4]);
    let h = Hypergraph3::new(24, edges).unwrap();
    assert!(contains_fano(&h).is_some(), "instance must contain a Fano");
    let out = run_stability(&h, &relaxed_cfg()).unwrap();
    let cert = out.certificate().expect("certificate expected");
    let w = cert.witness().expect("witness expected");
    w.validate(&h).unwrap();
    assert_eq!(out.trace().case, Some(2));
}

#[test]
fn bn_case2_is_unreachable() {
    // three vertices of a B_n link multigraph span at most 2 + 4 + 4 = 10
    let out = run_stability(&bn(16), &relaxed_cfg()).unwrap();
    let rep = out.partition().unwrap();
    assert_eq!(rep.trace.case, Some(1));
    assert_eq!(rep.e_a + rep.e_b, 0);
}

#[test]
fn minus_cross_edges_still_recovers() {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let base = bn(28);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut edges = base.edges().to_vec();
    edges.shuffle(&mut rng);
    let kept: Vec<[usize; 3]> = edges[30..].to_vec();
    let h = Hypergraph3::new(28, kept).unwrap();
    let out = run_stability(&h, &relaxed_cfg()).unwrap();
    let rep = out.partition().expect("partition expected");
    assert_eq!(rep.e_a + rep.e_b, 0);
    assert_eq!(rep.a, (14..28).collect::<Vec<_>>());
    assert_eq!(rep.b, (0..14).collect::<Vec<_>>());
}

#[test]
fn partition_soundness_invariants() {
    for n in [24usize, 30, 36] {
        let h = bn(n);
        let out = run_stability(&h, &relaxed_cfg()).unwrap();
        let rep = out.partition().unwrap();
        let a = VertexSet::new(rep.a.clone()).unwrap();
        let b = VertexSet::new(rep.b.clone()).unwrap();
        assert_eq!(rep.e_a, h.edges_within(&a).unwrap());
        assert_eq!(rep.e_b, h.edges_within(&b).unwrap());
        let mut all: Vec<usize> = rep.a.iter().chain(&rep.b).copied().collect();
        all.sort_unstable();
        assert_eq!(all, (0..n).collect::<Vec<_>>());
    }
}

#[test]
fn classify_on_bn8_links() {
    let b = bn(8);
    let s = VertexSet::new(vec![0, 1, 4, 5]).unwrap();
    let links = crate::detect::link_structures(&b, &s).unwrap();
    // reduced vertices are [2,3,6,7]; anchor on the cross pair (2,6)
    let g = &links.reduced;
    assert_eq!(g.mult(0, 2), 4);
    let cls = case1_classify(g, 0, 2).unwrap();
    assert_eq!(cls.a, vec![3]); // old 7: (4,2)
    assert_eq!(cls.b, vec![1]); // old 3: (2,4)
    assert!(cls.c.is_empty() && cls.d.is_empty());
    let total: usize = cls.histogram.iter().sum();
    assert_eq!(total, g.vertex_count() - 2);
}

#[test]
fn classify_routes_low_sums_to_d() {
    let mut g = Multigraph::new(5);
    g.set_mult(0, 1, 4);
    g.set_mult(2, 0, 1);
    g.set_mult(2, 1, 1);
    g.set_mult(3, 0, 4);
    g.set_mult(3, 1, 2);
    let cls = case1_classify(&g, 0, 1).unwrap();
    assert_eq!(cls.d, vec![2, 4]);
    assert_eq!(cls.a, vec![3]);
}

#[test]
fn classify_rejects_unclassifiable_vertices() {
    let mut g = Multigraph::new(4);
    g.set_mult(0, 1, 4);
    g.set_mult(2, 0, 4);
    g.set_mult(2, 1, 3);
    let err = case1_classify(&g, 0, 1).unwrap_err();
    match err {
        FailureCertificate::StageViolation { description, .. } => {
            assert!(description.contains("vertex 2"), "{description}");
        }
        _ => panic!("expected a stage violation"),
    }
    // anchor without multiplicity 4 is rejected too
    let mut g = Multigraph::new(3);
    g.set_mult(0, 1, 3);
    assert!(case1_classify(&g, 0, 1).is_err());
}

#[test]
fn normalize_triple_cases() {
    let mut g = Multigraph::new(4);
    g.set_mult(0, 1, 4);
    g.set_mult(0, 2, 4);
    g.set_mult(1, 2, 3);
    assert_eq!(super::case2::normalize_triple(&g, [2, 0, 1]), Some([0, 1, 2]));
    let mut g = Multigraph::new(4);
    g.set_mult(0, 1, 4);
    g.set_mult(0, 2, 3);
    g.set_mult(1, 2, 4);
    // the common vertex of the two 4-pairs is 1
    assert_eq!(super::case2::normalize_triple(&g, [0, 1, 2]), Some([1, 0, 2]));
    let mut g = Multigraph::new(4);
    g.set_mult(0, 1, 4);
    g.set_mult(0, 2, 4);
    g.set_mult(1, 2, 2);
    assert_eq!(super::case2::normalize_triple(&g, [0, 1, 2]), None);
}

#[test]
fn report_json_shape() {
    let out = run_stability(&bn(24), &relaxed_cfg()).unwrap();
    let v = out.to_report_json();
    assert!(v["A"].is_array());
    assert!(v["certificate"].is_null());
    assert_eq!(v["eA"], 0);
    let out = run_stability(&Hypergraph3::new(6, vec![]).unwrap(), &relaxed_cfg()).unwrap();
    let v = out.to_report_json();
    assert!(v["A"].is_null());
    assert_eq!(v["certificate"]["type"], "stage-violation");
}

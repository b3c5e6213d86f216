//! The bipartition stability pipeline: peel low-degree vertices, anchor on
//! a tetrahedron, analyze its link multigraph, and either extract the
//! two-class partition or return a certificate explaining why not.
//!
//! Every branch that the underlying argument closes with "then a Fano plane
//! exists" either constructs a verified [`FanoWitness`] or cites the exact
//! configuration (a heavy quadruple, an arithmetic impossibility) in a
//! [`FailureCertificate`], so the pipeline is total over arbitrary inputs.

mod case1;
mod case2;
mod claim;

pub use case1::{case1_classify, Classification};
pub use claim::{verify_claim, ClaimReport};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::constants::{theorem_delta_max, verify_inequalities, ChainReport};
use crate::detect::{find_tetrahedron, link_structures, DetectError, FanoWitness, LinkFamily};
use crate::hypergraph::{ex_fano, Hypergraph3, HypergraphError, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Strict,
    Relaxed,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "strict" => Ok(Mode::Strict),
            "relaxed" => Ok(Mode::Relaxed),
            other => Err(format!("unknown mode '{other}' (strict|relaxed)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabilityConfig {
    pub delta: BigRational,
    pub mode: Mode,
    /// Omit the additive +3n style lower-order terms from the peel
    /// thresholds; the asymptotic statement absorbs them, finite runs may
    /// not.
    pub drop_lower_order: bool,
    pub seed: u64,
}

impl StabilityConfig {
    pub fn relaxed(delta: BigRational) -> Self {
        StabilityConfig {
            delta,
            mode: Mode::Relaxed,
            drop_lower_order: true,
            seed: 0,
        }
    }

    pub fn strict(delta: BigRational) -> Self {
        StabilityConfig {
            delta,
            mode: Mode::Strict,
            drop_lower_order: false,
            seed: 0,
        }
    }

    pub fn validate(&self) -> Result<(), StabilityError> {
        if !self.delta.is_positive() || self.delta >= BigRational::one() {
            return Err(StabilityError::InvalidConfig(
                "delta must lie in (0, 1)".into(),
            ));
        }
        if self.mode == Mode::Strict && self.delta >= theorem_delta_max() {
            return Err(StabilityError::InvalidConfig(
                "strict mode requires delta < (1/36)^8".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum StabilityError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
    #[error(transparent)]
    Detect(#[from] DetectError),
}

/// Execution trace of the pipeline stages.
#[derive(Clone, Debug, Default, Serialize)]
pub struct StageTrace {
    /// Stage identifiers in execution order; violations name one of these.
    pub stages: Vec<String>,
    pub n0: Option<usize>,
    pub n1: Option<usize>,
    pub n2: Option<usize>,
    pub n3: Option<usize>,
    pub n4: Option<usize>,
    pub n5: Option<usize>,
    /// Vertices peeled by the degree stage (original labels).
    pub peeled_degree: Vec<usize>,
    /// Vertices peeled from the link multigraph (original labels).
    pub peeled_multigraph: Vec<usize>,
    /// Tetrahedron vertex set (original labels).
    pub s: Option<Vec<usize>>,
    pub case: Option<u8>,
    /// {p, q} in case 1, {p, q, r} in case 2 (original labels).
    pub anchor: Option<Vec<usize>>,
    /// Connection-count histogram to the anchor.
    pub histogram: Option<Vec<usize>>,
    /// |A|, |B|, |C|, |D| from the classification.
    pub class_sizes: Option<[usize; 4]>,
    /// Count of low-multiplicity pairs within and across A, B.
    pub e_prime: Option<u64>,
    /// Lower bound on the balanced class size m, evaluated at the run's
    /// delta (lower enclosure endpoint).
    pub m_bound: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum FailureCertificate {
    FanoWitness(FanoWitness),
    StageViolation {
        stage: String,
        description: String,
        data: serde_json::Value,
    },
}

impl FailureCertificate {
    pub fn witness(&self) -> Option<&FanoWitness> {
        match self {
            FailureCertificate::FanoWitness(w) => Some(w),
            FailureCertificate::StageViolation { .. } => None,
        }
    }

    pub fn stage(&self) -> Option<&str> {
        match self {
            FailureCertificate::FanoWitness(_) => None,
            FailureCertificate::StageViolation { stage, .. } => Some(stage),
        }
    }
}

/// Pair counts violating the three link-membership conditions.
#[derive(Clone, Debug, Serialize)]
pub struct BadPairs {
    pub i: u64,
    pub ii: u64,
    pub iii: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub e_a: usize,
    pub e_b: usize,
    pub bad_pairs: BadPairs,
    /// The derived split of the tetrahedron: A pairs live in the links of
    /// `split.0`, B pairs in the links of `split.1`.
    pub split: ([usize; 2], [usize; 2]),
    /// Strict-mode bound check: violation total at most 417 delta^(1/8)
    /// n1^2 and both classes at least n1/4 inside V1. None in relaxed mode.
    pub strict_bounds_hold: Option<bool>,
    pub chain: ChainReport,
    pub trace: StageTrace,
}

#[derive(Clone, Debug)]
pub enum StabilityOutcome {
    Partition(Box<PartitionReport>),
    Failure {
        certificate: FailureCertificate,
        trace: StageTrace,
    },
}

impl StabilityOutcome {
    pub fn partition(&self) -> Option<&PartitionReport> {
        match self {
            StabilityOutcome::Partition(p) => Some(p),
            StabilityOutcome::Failure { .. } => None,
        }
    }

    pub fn certificate(&self) -> Option<&FailureCertificate> {
        match self {
            StabilityOutcome::Partition(_) => None,
            StabilityOutcome::Failure { certificate, .. } => Some(certificate),
        }
    }

    pub fn trace(&self) -> &StageTrace {
        match self {
            StabilityOutcome::Partition(p) => &p.trace,
            StabilityOutcome::Failure { trace, .. } => trace,
        }
    }

    /// The fixed report shape: `{A, B, eA, eB, badPairs, trace, certificate}`
    /// with nulls on the side that does not apply.
    pub fn to_report_json(&self) -> serde_json::Value {
        match self {
            StabilityOutcome::Partition(p) => serde_json::json!({
                "A": p.a,
                "B": p.b,
                "eA": p.e_a,
                "eB": p.e_b,
                "badPairs": p.bad_pairs,
                "split": p.split,
                "chain": p.chain,
                "trace": p.trace,
                "certificate": serde_json::Value::Null,
            }),
            StabilityOutcome::Failure { certificate, trace } => serde_json::json!({
                "A": serde_json::Value::Null,
                "B": serde_json::Value::Null,
                "eA": serde_json::Value::Null,
                "eB": serde_json::Value::Null,
                "badPairs": serde_json::Value::Null,
                "trace": trace,
                "certificate": certificate,
            }),
        }
    }
}

/// True iff `deg < (1 - delta_1) 3n^2/8 [+ 3n]` with
/// `delta_1 = (5/3) sqrt(delta)`, decided exactly over the rationals.
fn below_degree_threshold(deg: usize, n: usize, delta: &BigRational, drop: bool) -> bool {
    let c = BigRational::new(BigInt::from(3) * BigInt::from(n).pow(2), BigInt::from(8));
    let mut base = c.clone();
    if !drop {
        base += BigRational::from_integer(BigInt::from(3 * n));
    }
    let d = BigRational::from_integer(BigInt::from(deg));
    if c.is_zero() {
        return d < base;
    }
    // deg < base - c * delta_1  <=>  delta_1 < (base - deg)/c  =: r
    let r = (base - d) / c;
    if !r.is_positive() {
        return false;
    }
    // (5/3) sqrt(delta) < r  <=>  delta < (9/25) r^2
    delta * BigRational::new(25.into(), 9.into()) < r.clone() * r
}

/// True iff `deleted >= delta_2 n - 4` with `delta_2 = sqrt(delta)` and at
/// least one deletion: `(deleted + 4)^2 >= delta n^2`.
fn peel_exhausted(deleted: usize, n: usize, delta: &BigRational) -> bool {
    if deleted == 0 {
        return false;
    }
    let lhs = BigRational::from_integer(BigInt::from(deleted + 4).pow(2));
    let rhs = delta * BigRational::from_integer(BigInt::from(n).pow(2));
    lhs >= rhs
}

pub struct DegreePeel {
    /// Surviving vertices, original labels.
    pub v0: Vec<usize>,
    pub peeled: Vec<usize>,
    /// Hyperedges lost to the peeling.
    pub removed_edges: usize,
}

/// Iteratively deletes the least-indexed vertex below the degree threshold.
/// Fails with the peel-exhausted violation when the deletion count crosses
/// the contradiction bound.
pub fn peel_min_degree(
    h: &Hypergraph3,
    cfg: &StabilityConfig,
) -> Result<DegreePeel, FailureCertificate> {
    let n = h.vertex_count();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (ei, e) in h.edges().iter().enumerate() {
        for &v in e {
            incident[v].push(ei);
        }
    }
    let mut edge_alive = vec![true; h.edge_count()];
    let mut peeled = Vec::new();
    let mut removed_edges = 0usize;
    loop {
        let Some(v) = (0..n)
            .find(|&v| alive[v] && below_degree_threshold(degree[v], n, &cfg.delta, cfg.drop_lower_order))
        else {
            break;
        };
        alive[v] = false;
        peeled.push(v);
        for &ei in &incident[v] {
            if edge_alive[ei] {
                edge_alive[ei] = false;
                removed_edges += 1;
                for &u in &h.edges()[ei] {
                    degree[u] -= 1;
                }
            }
        }
        if peel_exhausted(peeled.len(), n, &cfg.delta) {
            return Err(FailureCertificate::StageViolation {
                stage: "degree-peel".into(),
                description: "peel-exhausted: the deletion count reached the \
                              contradiction bound delta^(1/2) n - 4"
                    .into(),
                data: serde_json::json!({
                    "deleted": peeled.len(),
                    "n": n,
                    "peeled": peeled,
                }),
            });
        }
    }
    Ok(DegreePeel {
        v0: (0..n).filter(|&v| alive[v]).collect(),
        peeled,
        removed_edges,
    })
}

/// True iff the multigraph degree `deg` is below `(1 - delta_3) 3 n1` with
/// `delta_3 = (5/3)^(1/2) delta^(1/4)`: `(25/9) delta < ((3n1-deg)/(3n1))^4`.
fn below_mg_threshold(deg: u64, n1: usize, delta: &BigRational) -> bool {
    if n1 == 0 {
        return false;
    }
    let three_n1 = BigRational::from_integer(BigInt::from(3 * n1));
    let r = (three_n1.clone() - BigRational::from_integer(BigInt::from(deg))) / three_n1;
    if !r.is_positive() {
        return false;
    }
    let mut r4 = BigRational::one();
    for _ in 0..4 {
        r4 *= r.clone();
    }
    delta * BigRational::new(25.into(), 9.into()) < r4
}

/// True iff `deleted >= delta_4 n1` with `delta_4 = delta_3`:
/// `deleted^4 >= (25/9) delta n1^4`, requiring at least one deletion.
fn mg_peel_exhausted(deleted: usize, n1: usize, delta: &BigRational) -> bool {
    if deleted == 0 {
        return false;
    }
    let lhs = BigRational::from_integer(BigInt::from(deleted).pow(4));
    let rhs = delta
        * BigRational::new(25.into(), 9.into())
        * BigRational::from_integer(BigInt::from(n1).pow(4));
    lhs >= rhs
}

struct Pipeline {
    trace: StageTrace,
}

impl Pipeline {
    fn fail(self, certificate: FailureCertificate) -> StabilityOutcome {
        StabilityOutcome::Failure {
            certificate,
            trace: self.trace,
        }
    }
}

/// Runs the full pipeline. A returned [`StabilityOutcome::Failure`] is a
/// verified explanation (a Fano witness or a named stage violation), not an
/// error; `Err` is reserved for invalid configurations and internal
/// contradictions of the pattern lemmas.
pub fn run_stability(
    h: &Hypergraph3,
    cfg: &StabilityConfig,
) -> Result<StabilityOutcome, StabilityError> {
    cfg.validate()?;
    let n = h.vertex_count();
    let mut p = Pipeline {
        trace: StageTrace::default(),
    };

    // density precondition (strict mode only)
    p.trace.stages.push("density-check".into());
    if cfg.mode == Mode::Strict {
        let Ok(ex) = ex_fano(n) else {
            return Ok(p.fail(FailureCertificate::StageViolation {
                stage: "density-check".into(),
                description: "the exact extremal count requires n >= 8".into(),
                data: serde_json::json!({ "n": n }),
            }));
        };
        let need = BigRational::from_integer(BigInt::from(ex))
            - cfg.delta.clone() * BigRational::new(BigInt::from(n).pow(3), 8.into());
        if BigRational::from_integer(BigInt::from(h.edge_count())) < need {
            return Ok(p.fail(FailureCertificate::StageViolation {
                stage: "density-check".into(),
                description: "edge count below ex(n) - delta n^3/8".into(),
                data: serde_json::json!({
                    "edges": h.edge_count(),
                    "required": need.to_string(),
                }),
            }));
        }
    }

    // stage: degree peel
    p.trace.stages.push("degree-peel".into());
    let peel = match peel_min_degree(h, cfg) {
        Ok(out) => out,
        Err(cert) => return Ok(p.fail(cert)),
    };
    p.trace.peeled_degree = peel.peeled.clone();
    p.trace.n0 = Some(peel.v0.len());
    let v0_set = VertexSet::new(peel.v0.clone())?;
    let (h0, v0_map) = h.induced(&v0_set)?;

    // stage: tetrahedron anchor
    p.trace.stages.push("tetrahedron".into());
    let Some(s) = find_tetrahedron(&h0) else {
        return Ok(p.fail(FailureCertificate::StageViolation {
            stage: "tetrahedron".into(),
            description: "no four vertices span all four triples".into(),
            data: serde_json::json!({ "n0": h0.vertex_count() }),
        }));
    };
    p.trace.s = Some(s.iter().map(|v| v0_map[v]).collect());

    // stage: link structures
    p.trace.stages.push("link-structures".into());
    let links = link_structures(&h0, &s)?;
    let n1 = links.reduced.vertex_count();
    p.trace.n1 = Some(n1);

    // stage: multigraph peel at (1 - delta_3) 3 n1
    p.trace.stages.push("multigraph-peel".into());
    let g = &links.reduced;
    let mut alive = vec![true; n1];
    let mut deg: Vec<u64> = (0..n1).map(|v| g.degree(v)).collect();
    let mut mg_peeled = Vec::new();
    loop {
        let Some(v) =
            (0..n1).find(|&v| alive[v] && below_mg_threshold(deg[v], n1, &cfg.delta))
        else {
            break;
        };
        alive[v] = false;
        mg_peeled.push(v);
        for u in 0..n1 {
            if u != v && alive[u] {
                deg[u] -= g.mult(u, v) as u64;
            }
        }
        if mg_peel_exhausted(mg_peeled.len(), n1, &cfg.delta) {
            // by the 20-cap bound the current multigraph must carry a heavy
            // quadruple; cite it (or the arithmetic) and stop
            let keep: Vec<usize> = (0..n1).filter(|&v| alive[v]).collect();
            let (current, map) = g.restrict(&keep);
            let to_old = |v: usize| v0_map[links.reduced_vertices[map[v]]];
            let cert = match crate::detect::heavy_quadruple(&current) {
                Some(q) => {
                    let quad: Vec<usize> = q.iter().collect();
                    match try_witness_from_quad(&h0, &links, &quad_to_reduced(&map, &quad)) {
                        Some(w) => FailureCertificate::FanoWitness(map_witness(&w, &v0_map)),
                        None => FailureCertificate::StageViolation {
                            stage: "multigraph-peel".into(),
                            description:
                                "four vertices span at least 21 link edges; a Fano plane \
                                 exists by the heavy-quadruple lemma"
                                    .into(),
                            data: serde_json::json!({
                                "quadruple": quad.iter().map(|&v| to_old(v)).collect::<Vec<_>>(),
                                "span": current.span(&quad),
                            }),
                        },
                    }
                }
                None => FailureCertificate::StageViolation {
                    stage: "multigraph-peel".into(),
                    description: "peel crossed the delta_4 n1 budget without a heavy \
                                  quadruple; the density arithmetic is violated"
                        .into(),
                    data: serde_json::json!({
                        "deleted": mg_peeled.len(),
                        "n1": n1,
                    }),
                },
            };
            p.trace.peeled_multigraph = mg_peeled.iter().map(|&v| v0_map[links.reduced_vertices[v]]).collect();
            return Ok(p.fail(cert));
        }
    }
    p.trace.peeled_multigraph = mg_peeled
        .iter()
        .map(|&v| v0_map[links.reduced_vertices[v]])
        .collect();
    let v2: Vec<usize> = (0..n1).filter(|&v| alive[v]).collect();
    p.trace.n2 = Some(v2.len());

    // stage: case split on three-vertex spans
    p.trace.stages.push("case-split".into());
    let mut case2_triple: Option<[usize; 3]> = None;
    'outer: for (i, &a) in v2.iter().enumerate() {
        for (j, &b) in v2.iter().enumerate().skip(i + 1) {
            for &c in v2.iter().skip(j + 1) {
                if g.span(&[a, b, c]) >= 11 {
                    case2_triple = Some([a, b, c]);
                    break 'outer;
                }
            }
        }
    }

    if let Some(triple) = case2_triple {
        p.trace.case = Some(2);
        p.trace.stages.push("case2".into());
        let cert = case2::analyze(&h0, &links, &v2, triple, cfg, &mut p.trace, &v0_map)?;
        return Ok(p.fail(cert));
    }

    p.trace.case = Some(1);
    p.trace.stages.push("case1".into());
    let outcome = case1::analyze(&h0, &links, &v2, cfg, &mut p.trace, &v0_map)?;
    let (a_red, b_red, split_h0) = match outcome {
        case1::Case1Outcome::Certificate(cert) => return Ok(p.fail(cert)),
        case1::Case1Outcome::Partition { a, b, split } => (a, b, split),
    };

    // map back to original labels
    let to_old = |v: usize| v0_map[links.reduced_vertices[v]];
    let mut a_final: Vec<usize> = a_red.iter().map(|&v| to_old(v)).collect();
    let mut b_final: Vec<usize> = b_red.iter().map(|&v| to_old(v)).collect();
    let split = (
        [v0_map[split_h0.0[0]], v0_map[split_h0.0[1]]],
        [v0_map[split_h0.1[0]], v0_map[split_h0.1[1]]],
    );
    p.trace.n5 = Some(a_final.len() + b_final.len());

    // distribute every remaining vertex greedily: add to the side gaining
    // fewer intra-side hyperedges, ties to A
    p.trace.stages.push("distribute".into());
    let mut assigned = vec![false; n];
    for &v in a_final.iter().chain(&b_final) {
        assigned[v] = true;
    }
    let mut in_a = vec![false; n];
    let mut in_b = vec![false; n];
    for &v in &a_final {
        in_a[v] = true;
    }
    for &v in &b_final {
        in_b[v] = true;
    }
    let added_edges = |v: usize, side: &[bool], h: &Hypergraph3| -> usize {
        let members: Vec<usize> = (0..n).filter(|&u| side[u]).collect();
        let mut count = 0;
        for (i, &x) in members.iter().enumerate() {
            for &y in &members[i + 1..] {
                if h.has_edge(v, x, y) {
                    count += 1;
                }
            }
        }
        count
    };
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let ca = added_edges(v, &in_a, h);
        let cb = added_edges(v, &in_b, h);
        if ca <= cb {
            in_a[v] = true;
            a_final.push(v);
        } else {
            in_b[v] = true;
            b_final.push(v);
        }
    }
    a_final.sort_unstable();
    b_final.sort_unstable();

    let a_set = VertexSet::new(a_final.clone())?;
    let b_set = VertexSet::new(b_final.clone())?;
    let e_a = h.edges_within(&a_set)?;
    let e_b = h.edges_within(&b_set)?;

    // claim check over the pairs of V1 (original labels)
    let s_old: Vec<usize> = p.trace.s.clone().unwrap();
    let v1_old: Vec<usize> = peel
        .v0
        .iter()
        .copied()
        .filter(|v| !s_old.contains(v))
        .collect();
    let a_v1: Vec<usize> = a_final
        .iter()
        .copied()
        .filter(|v| v1_old.binary_search(v).is_ok())
        .collect();
    let b_v1: Vec<usize> = b_final
        .iter()
        .copied()
        .filter(|v| v1_old.binary_search(v).is_ok())
        .collect();
    let a_v1_len = a_v1.len();
    let b_v1_len = b_v1.len();
    let claim = verify_claim(
        h,
        &VertexSet::new(s_old.clone())?,
        (split.0, split.1),
        &VertexSet::new(a_v1)?,
        &VertexSet::new(b_v1)?,
    )?;

    // strict mode: total violations at most 417 delta^(1/8) n1^2, compared
    // exactly as total^8 <= 417^8 delta n1^16, plus the quarter-size bound
    let strict_bounds_hold = (cfg.mode == Mode::Strict).then(|| {
        let total = claim.viol_i + claim.viol_ii + claim.viol_iii;
        let lhs = BigRational::from_integer(BigInt::from(total).pow(8));
        let rhs = cfg.delta.clone()
            * BigRational::from_integer(BigInt::from(417u32).pow(8))
            * BigRational::from_integer(BigInt::from(n1).pow(16));
        lhs <= rhs && 4 * a_v1_len >= n1 && 4 * b_v1_len >= n1
    });

    let chain = verify_inequalities(&cfg.delta).map_err(|e| {
        StabilityError::InvalidConfig(format!("chain verification rejected delta: {e}"))
    })?;

    Ok(StabilityOutcome::Partition(Box::new(PartitionReport {
        a: a_final,
        b: b_final,
        e_a,
        e_b,
        bad_pairs: BadPairs {
            i: claim.viol_i,
            ii: claim.viol_ii,
            iii: claim.viol_iii,
        },
        split,
        strict_bounds_hold,
        chain,
        trace: p.trace,
    })))
}

/// Runs the case-2 analysis directly against a prepared link family: the
/// host, its apex links, the surviving vertex list (reduced labels) and a
/// triple spanning at least 11 edges. Always returns a certificate.
pub fn case2_analyze(
    h: &Hypergraph3,
    links: &LinkFamily,
    survivors: &[usize],
    triple: [usize; 3],
    cfg: &StabilityConfig,
) -> Result<FailureCertificate, StabilityError> {
    let mut trace = StageTrace::default();
    let identity: Vec<usize> = (0..h.vertex_count()).collect();
    case2::analyze(h, links, survivors, triple, cfg, &mut trace, &identity)
}

fn quad_to_reduced(map: &[usize], quad: &[usize]) -> [usize; 4] {
    [map[quad[0]], map[quad[1]], map[quad[2]], map[quad[3]]]
}

/// Attempts the rainbow construction on a quad given in reduced labels.
fn try_witness_from_quad(
    h0: &Hypergraph3,
    links: &LinkFamily,
    quad: &[usize; 4],
) -> Option<FanoWitness> {
    crate::detect::rainbow_quad(h0, links, *quad).ok().flatten()
}

/// Relabels a witness from induced-subhypergraph space back to the host.
fn map_witness(w: &FanoWitness, v0_map: &[usize]) -> FanoWitness {
    let mut vertices: Vec<usize> = w.vertices.iter().map(|&v| v0_map[v]).collect();
    vertices.sort_unstable();
    let mut edges: Vec<[usize; 3]> = w
        .edges
        .iter()
        .map(|e| {
            let mut t = [v0_map[e[0]], v0_map[e[1]], v0_map[e[2]]];
            t.sort_unstable();
            t
        })
        .collect();
    edges.sort_unstable();
    FanoWitness { vertices, edges }
}

#[cfg(test)]
mod tests;

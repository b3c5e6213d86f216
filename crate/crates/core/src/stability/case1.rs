//! Case 1 of the link-multigraph analysis: every three vertices span at
//! most ten edges. Classifies vertices against a multiplicity-4 anchor
//! pair, prunes the deficient classes, and reads off the bipartition, with
//! every forced-Fano configuration turned into a witness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::constants::{Coeff, DeltaExpr};
use crate::detect::{rainbow_quad, FanoWitness, LinkFamily};
use crate::hypergraph::Hypergraph3;
use crate::multigraph::Multigraph;

use super::{map_witness, FailureCertificate, StabilityConfig, StabilityError, StageTrace};

pub enum Case1Outcome {
    Partition {
        /// Reduced labels.
        a: Vec<usize>,
        b: Vec<usize>,
        /// h0 labels: (the two apexes carrying A pairs, the two carrying B).
        split: ([usize; 2], [usize; 2]),
    },
    Certificate(FailureCertificate),
}

/// Vertex classes around the anchor pair: A = (4,2), B = (2,4), C = (3,3),
/// D = connection sum at most 5.
#[derive(Clone, Debug)]
pub struct Classification {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub d: Vec<usize>,
    /// histogram[i] = number of vertices connected to the anchor by i edges.
    pub histogram: Vec<usize>,
}

/// Classifies `universe` minus the anchor against (p, q). A vertex whose
/// connection sum is 6 without matching (4,2), (2,4), (3,3), or exceeds 6,
/// fits no class and is reported.
pub(super) fn classify_subset(
    g: &Multigraph,
    p: usize,
    q: usize,
    universe: &[usize],
) -> Result<Classification, (usize, u32, u32)> {
    let mut out = Classification {
        a: Vec::new(),
        b: Vec::new(),
        c: Vec::new(),
        d: Vec::new(),
        histogram: vec![0; 7],
    };
    for &x in universe {
        if x == p || x == q {
            continue;
        }
        let mp = g.mult(x, p);
        let mq = g.mult(x, q);
        let sum = mp + mq;
        if sum > 6 {
            return Err((x, mp, mq));
        }
        out.histogram[sum as usize] += 1;
        match (mp, mq) {
            (4, 2) => out.a.push(x),
            (2, 4) => out.b.push(x),
            (3, 3) => out.c.push(x),
            _ if sum <= 5 => out.d.push(x),
            _ => return Err((x, mp, mq)),
        }
    }
    Ok(out)
}

/// Public classification over the whole multigraph. The anchor must have
/// multiplicity 4; a vertex fitting no class yields a stage violation.
pub fn case1_classify(
    g: &Multigraph,
    p: usize,
    q: usize,
) -> Result<Classification, FailureCertificate> {
    if g.mult(p, q) != 4 {
        return Err(FailureCertificate::StageViolation {
            stage: "case1".into(),
            description: "anchor pair does not have multiplicity 4".into(),
            data: serde_json::json!({ "p": p, "q": q, "mult": g.mult(p, q) }),
        });
    }
    let universe: Vec<usize> = (0..g.vertex_count()).collect();
    classify_subset(g, p, q, &universe).map_err(|(x, mp, mq)| {
        FailureCertificate::StageViolation {
            stage: "case1".into(),
            description: format!(
                "vertex {x} fits no class: multiplicities ({mp},{mq}) to the anchor"
            ),
            data: serde_json::json!({ "vertex": x, "toP": mp, "toQ": mq }),
        }
    })
}

/// Lower bound on the balanced class size m at this delta:
/// `(n1/2)(1 - 18 delta_3) + 1`, reported by its lower enclosure endpoint.
fn m_bound_string(n1: usize, delta: &BigRational) -> String {
    let d3 = DeltaExpr::monomial(
        Coeff::with_radical(BigRational::one(), &BigRational::new(5.into(), 3.into()), 1, 2),
        16,
    );
    let half_n1 = Coeff::rational(BigRational::new(BigInt::from(n1), 2.into()));
    let expr = DeltaExpr::constant(half_n1.clone())
        .sub(&d3.scale(&half_n1.mul(&Coeff::from_int(18))))
        .add(&DeltaExpr::constant(Coeff::from_int(1)));
    expr.eval_interval(delta, 64).lo.to_string()
}

pub(super) fn analyze(
    h0: &Hypergraph3,
    links: &LinkFamily,
    v2: &[usize],
    cfg: &StabilityConfig,
    trace: &mut StageTrace,
    v0_map: &[usize],
) -> Result<Case1Outcome, StabilityError> {
    let g = &links.reduced;
    let witness = |w: &FanoWitness| -> Case1Outcome {
        Case1Outcome::Certificate(FailureCertificate::FanoWitness(map_witness(w, v0_map)))
    };
    let to_old = |v: usize| v0_map[links.reduced_vertices[v]];

    // anchor: lexicographically least multiplicity-4 pair
    let mut anchor: Option<(usize, usize)> = None;
    'outer: for (i, &u) in v2.iter().enumerate() {
        for &v in &v2[i + 1..] {
            if g.mult(u, v) >= 4 {
                anchor = Some((u, v));
                break 'outer;
            }
        }
    }
    let Some((p, q)) = anchor else {
        // no multiplicity-4 edge: the degree condition forces enough
        // multiplicity-3 edges for a K5 among them, which is a Fano
        return no_anchor_fallback(h0, links, v2, v0_map);
    };
    trace.anchor = Some(vec![to_old(p), to_old(q)]);

    let cls = match classify_subset(g, p, q, v2) {
        Ok(c) => c,
        Err((x, mp, mq)) => {
            return Ok(Case1Outcome::Certificate(FailureCertificate::StageViolation {
                stage: "case1".into(),
                description: format!(
                    "vertex {} fits no class: multiplicities ({mp},{mq}) to the anchor",
                    to_old(x)
                ),
                data: serde_json::json!({ "vertex": to_old(x), "toP": mp, "toQ": mq }),
            }));
        }
    };
    trace.histogram = Some(cls.histogram.clone());
    trace.class_sizes = Some([cls.a.len(), cls.b.len(), cls.c.len(), cls.d.len()]);
    trace.n3 = Some(v2.len() - cls.d.len());
    trace.m_bound = Some(m_bound_string(
        links.reduced.vertex_count(),
        &cfg.delta,
    ));

    // C analysis. A multiplicity >= 3 pair inside C closes a rainbow K4
    // with the anchor; so does a multiplicity >= 2 pair between C and
    // A u B.
    for (i, &x) in cls.c.iter().enumerate() {
        for &y in &cls.c[i + 1..] {
            if g.mult(x, y) >= 3 {
                return match rainbow_quad(h0, links, [p, q, x, y])? {
                    Some(w) => Ok(witness(&w)),
                    None => Err(hall_defect([p, q, x, y], to_old)),
                };
            }
        }
    }
    for &x in cls.a.iter().chain(&cls.b) {
        for &y in &cls.c {
            if g.mult(x, y) >= 2 {
                return match rainbow_quad(h0, links, [p, q, x, y])? {
                    Some(w) => Ok(witness(&w)),
                    None => Err(hall_defect([p, q, x, y], to_old)),
                };
            }
        }
    }

    let mut a_cur = cls.a.clone();
    let mut b_cur = cls.b.clone();
    trace.n4 = Some(a_cur.len() + b_cur.len());

    // low-multiplicity pair count over the surviving classes
    let mut e_prime = 0u64;
    for (i, &x) in a_cur.iter().enumerate() {
        for &y in &a_cur[i + 1..] {
            if g.mult(x, y) <= 1 {
                e_prime += 1;
            }
        }
    }
    for (i, &x) in b_cur.iter().enumerate() {
        for &y in &b_cur[i + 1..] {
            if g.mult(x, y) <= 1 {
                e_prime += 1;
            }
        }
    }
    for &x in &a_cur {
        for &y in &b_cur {
            if g.mult(x, y) <= 3 {
                e_prime += 1;
            }
        }
    }
    trace.e_prime = Some(e_prime);

    // fix a multiplicity-2 pair inside A; its two links name the split
    let Some((xa, ya)) = least_mult2_pair(g, &a_cur) else {
        return Ok(Case1Outcome::Certificate(no_anchor_pair("A", to_old(p), to_old(q))));
    };
    let apexes_ab = links.apexes_containing(
        links.reduced_vertices[xa],
        links.reduced_vertices[ya],
    );
    if apexes_ab.len() != 2 {
        return Ok(Case1Outcome::Certificate(FailureCertificate::StageViolation {
            stage: "case1".into(),
            description: "multiplicity-2 pair is not carried by exactly two links".into(),
            data: serde_json::json!({
                "pair": [to_old(xa), to_old(ya)],
                "apexes": apexes_ab.iter().map(|&x| v0_map[x]).collect::<Vec<_>>(),
            }),
        }));
    }
    let split_ab = [apexes_ab[0], apexes_ab[1]];
    let split_cd: Vec<usize> = links
        .apex_set
        .iter()
        .filter(|x| !split_ab.contains(x))
        .collect();
    let split_cd = [split_cd[0], split_cd[1]];

    // prune B to the vertices joined to both anchors by multiplicity 4
    b_cur.retain(|&w| g.mult(w, xa) == 4 && g.mult(w, ya) == 4);

    // no surviving B pair may appear in the links carrying A
    if let Some(w) = scan_pairs_in_links(h0, links, &b_cur, &split_ab, [xa, ya])? {
        return Ok(witness(&w));
    }

    // fix a multiplicity-2 pair inside B; prune A symmetrically
    let Some((xb, yb)) = least_mult2_pair(g, &b_cur) else {
        return Ok(Case1Outcome::Certificate(no_anchor_pair("B", to_old(p), to_old(q))));
    };
    a_cur.retain(|&w| g.mult(w, xb) == 4 && g.mult(w, yb) == 4);
    if let Some(w) = scan_pairs_in_links(h0, links, &a_cur, &split_cd, [xb, yb])? {
        return Ok(witness(&w));
    }

    Ok(Case1Outcome::Partition {
        a: a_cur,
        b: b_cur,
        split: (split_ab, split_cd),
    })
}

fn hall_defect(quad: [usize; 4], to_old: impl Fn(usize) -> usize) -> StabilityError {
    StabilityError::Detect(crate::detect::DetectError::HallContradiction {
        pattern: crate::detect::Lemma25Pattern::I,
        set: quad.iter().map(|&v| to_old(v)).collect(),
    })
}

fn no_anchor_pair(side: &str, p: usize, q: usize) -> FailureCertificate {
    FailureCertificate::StageViolation {
        stage: "case1".into(),
        description: format!("no-anchor-pair: class {side} has no multiplicity-2 pair"),
        data: serde_json::json!({ "anchor": [p, q], "side": side }),
    }
}

fn least_mult2_pair(g: &Multigraph, set: &[usize]) -> Option<(usize, usize)> {
    for (i, &x) in set.iter().enumerate() {
        for &y in &set[i + 1..] {
            if g.mult(x, y) == 2 {
                return Some((x, y));
            }
        }
    }
    None
}

/// Scans pairs of `set` for membership in either of the two given link
/// graphs; a hit closes a rainbow K4 with the fixed multiplicity-2 pair.
fn scan_pairs_in_links(
    h0: &Hypergraph3,
    links: &LinkFamily,
    set: &[usize],
    split: &[usize; 2],
    fixed_pair: [usize; 2],
) -> Result<Option<FanoWitness>, StabilityError> {
    let apex_graphs: Vec<&crate::graph::SimpleGraph> = links
        .apex_set
        .iter()
        .zip(&links.per_apex)
        .filter(|(x, _)| split.contains(x))
        .map(|(_, l)| l)
        .collect();
    for (i, &w) in set.iter().enumerate() {
        for &z in &set[i + 1..] {
            let (ow, oz) = (
                links.reduced_vertices[w],
                links.reduced_vertices[z],
            );
            if apex_graphs.iter().any(|l| l.has_edge(ow, oz)) {
                let quad = [fixed_pair[0], fixed_pair[1], w, z];
                match rainbow_quad(h0, links, quad)? {
                    Some(wit) => return Ok(Some(wit)),
                    None => {
                        return Err(StabilityError::Detect(
                            crate::detect::DetectError::HallContradiction {
                                pattern: crate::detect::Lemma25Pattern::I,
                                set: quad.to_vec(),
                            },
                        ))
                    }
                }
            }
        }
    }
    Ok(None)
}

/// No multiplicity-4 edge in the surviving multigraph: count the
/// multiplicity-3 edges, find the K5 they must contain, and assemble the
/// witness; report the densities when the K5 is absent at this scale.
fn no_anchor_fallback(
    h0: &Hypergraph3,
    links: &LinkFamily,
    v2: &[usize],
    v0_map: &[usize],
) -> Result<Case1Outcome, StabilityError> {
    let g = &links.reduced;
    let ge3 = |u: usize, v: usize| g.mult(u, v) >= 3;
    let mut e3 = 0u64;
    for (i, &u) in v2.iter().enumerate() {
        for &v in &v2[i + 1..] {
            if ge3(u, v) {
                e3 += 1;
            }
        }
    }
    // K5 of multiplicity >= 3 edges
    let k = v2.len();
    for a in 0..k {
        for b in a + 1..k {
            if !ge3(v2[a], v2[b]) {
                continue;
            }
            for c in b + 1..k {
                if !(ge3(v2[a], v2[c]) && ge3(v2[b], v2[c])) {
                    continue;
                }
                for d in c + 1..k {
                    if !(ge3(v2[a], v2[d]) && ge3(v2[b], v2[d]) && ge3(v2[c], v2[d])) {
                        continue;
                    }
                    for e in d + 1..k {
                        if !(ge3(v2[a], v2[e])
                            && ge3(v2[b], v2[e])
                            && ge3(v2[c], v2[e])
                            && ge3(v2[d], v2[e]))
                        {
                            continue;
                        }
                        let five = [v2[a], v2[b], v2[c], v2[d], v2[e]];
                        for skip in (0..5).rev() {
                            let mut quad = [0usize; 4];
                            let mut idx = 0;
                            for (i, &x) in five.iter().enumerate() {
                                if i != skip {
                                    quad[idx] = x;
                                    idx += 1;
                                }
                            }
                            if let Some(w) = rainbow_quad(h0, links, quad)? {
                                return Ok(Case1Outcome::Certificate(
                                    FailureCertificate::FanoWitness(map_witness(&w, v0_map)),
                                ));
                            }
                        }
                        return Err(StabilityError::Detect(
                            crate::detect::DetectError::HallContradiction {
                                pattern: crate::detect::Lemma25Pattern::II,
                                set: five.to_vec(),
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(Case1Outcome::Certificate(FailureCertificate::StageViolation {
        stage: "case1".into(),
        description: "no multiplicity-4 edge and no K5 of multiplicity-3 edges \
                      in the surviving multigraph"
            .into(),
        data: serde_json::json!({ "e3": e3, "n2": v2.len() }),
    }))
}

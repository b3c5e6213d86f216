//! Case 2 of the link-multigraph analysis: some three vertices span at
//! least eleven edges. The argument always closes with a certificate: a
//! constructed Fano witness, a heavy quadruple, or the density
//! impossibility.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::detect::{rainbow_quad, LinkFamily};
use crate::hypergraph::Hypergraph3;

use super::{map_witness, FailureCertificate, StabilityConfig, StabilityError, StageTrace};

/// Normalizes the anchor triple so that `mult(p,q) = mult(p,r) = 4` and
/// `mult(q,r) >= 3`. A span of at least 11 over three pairs capped at 4
/// always allows it.
pub(super) fn normalize_triple(
    g: &crate::multigraph::Multigraph,
    triple: [usize; 3],
) -> Option<[usize; 3]> {
    let mut sorted = triple;
    sorted.sort_unstable();
    for &p in &sorted {
        let rest: Vec<usize> = sorted.iter().copied().filter(|&x| x != p).collect();
        if g.mult(p, rest[0]) >= 4 && g.mult(p, rest[1]) >= 4 && g.mult(rest[0], rest[1]) >= 3
        {
            return Some([p, rest[0], rest[1]]);
        }
    }
    None
}

pub(super) fn analyze(
    h0: &Hypergraph3,
    links: &LinkFamily,
    v2: &[usize],
    triple: [usize; 3],
    cfg: &StabilityConfig,
    trace: &mut StageTrace,
    v0_map: &[usize],
) -> Result<FailureCertificate, StabilityError> {
    let g = &links.reduced;
    let to_old = |v: usize| v0_map[links.reduced_vertices[v]];
    let witness = |w| FailureCertificate::FanoWitness(map_witness(&w, v0_map));
    let hall = |quad: [usize; 4]| -> StabilityError {
        StabilityError::Detect(crate::detect::DetectError::HallContradiction {
            pattern: crate::detect::Lemma25Pattern::I,
            set: quad.iter().map(|&v| to_old(v)).collect(),
        })
    };

    let Some([p, q, r]) = normalize_triple(g, triple) else {
        return Ok(FailureCertificate::StageViolation {
            stage: "case2".into(),
            description: "triple spans 11 edges but cannot be normalized to (4,4,>=3)"
                .into(),
            data: serde_json::json!({
                "triple": triple.iter().map(|&v| to_old(v)).collect::<Vec<_>>(),
                "span": g.span(&triple),
            }),
        });
    };
    trace.anchor = Some(vec![to_old(p), to_old(q), to_old(r)]);

    // each vertex may reach the anchor by at most 9 edges, else the four
    // of them span >= 21
    let mut histogram = vec![0usize; 10];
    let mut survivors = Vec::new();
    let mut peeled = 0usize;
    for &s in v2 {
        if s == p || s == q || s == r {
            continue;
        }
        let conn = g.mult(s, p) as u64 + g.mult(s, q) as u64 + g.mult(s, r) as u64;
        if conn >= 10 {
            let quad = [p, q, r, s];
            return match rainbow_quad(h0, links, quad)? {
                Some(w) => Ok(witness(w)),
                None => Ok(FailureCertificate::StageViolation {
                    stage: "case2".into(),
                    description: "four vertices span at least 21 link edges; a Fano \
                                  plane exists by the heavy-quadruple lemma"
                        .into(),
                    data: serde_json::json!({
                        "quadruple": quad.iter().map(|&v| to_old(v)).collect::<Vec<_>>(),
                        "span": g.span(&quad),
                    }),
                }),
            };
        }
        histogram[conn as usize] += 1;
        if conn == 9 {
            survivors.push(s);
        } else {
            peeled += 1;
        }
    }
    trace.histogram = Some(histogram);
    trace.n3 = Some(survivors.len() + 3);
    let _ = peeled;

    // connection pattern of each survivor: {3,3,3} and {4,3,2} force a
    // rainbow quad outright; a {4,4,1} out of the (1,4,4) order forces one
    // through the fifth pattern
    for &s in &survivors {
        let (mp, mq, mr) = (g.mult(s, p), g.mult(s, q), g.mult(s, r));
        let mut multiset = [mp, mq, mr];
        multiset.sort_unstable();
        let quad = [p, q, r, s];
        if multiset == [3, 3, 3] || multiset == [2, 3, 4] {
            return match rainbow_quad(h0, links, quad)? {
                Some(w) => Ok(witness(w)),
                None => Err(hall(quad)),
            };
        }
        if multiset == [1, 4, 4] && mp != 1 {
            return match rainbow_quad(h0, links, quad)? {
                Some(w) => Ok(witness(w)),
                None => Err(hall(quad)),
            };
        }
    }

    // all survivors are (1,4,4) toward (p,q,r): any multiplicity >= 2 pair
    // among them spans >= 21 with {q,r}
    for (i, &s) in survivors.iter().enumerate() {
        for &t in &survivors[i + 1..] {
            if g.mult(s, t) >= 2 {
                let quad = [q, r, s, t];
                return match rainbow_quad(h0, links, quad)? {
                    Some(w) => Ok(witness(w)),
                    None => Ok(FailureCertificate::StageViolation {
                        stage: "case2".into(),
                        description: "four vertices span at least 21 link edges; a \
                                      Fano plane exists by the heavy-quadruple lemma"
                            .into(),
                        data: serde_json::json!({
                            "quadruple": quad.iter().map(|&v| to_old(v)).collect::<Vec<_>>(),
                            "span": g.span(&quad),
                        }),
                    }),
                };
            }
        }
    }

    // simple survivor graph: at most C(k,2) edges against the lower bound
    // (3/2 - 38 delta_3) n3^2, impossible for delta_1 < (1/38)^2
    let mut actual = 0u64;
    for (i, &s) in survivors.iter().enumerate() {
        for &t in &survivors[i + 1..] {
            actual += g.mult(s, t) as u64;
        }
    }
    let n3 = survivors.len() + 3;
    let bound = {
        use crate::constants::{Coeff, DeltaExpr};
        // (3/2 - 38 delta_3) n3^2 evaluated at this delta
        let d3 = DeltaExpr::monomial(
            Coeff::with_radical(
                num_traits::One::one(),
                &BigRational::new(5.into(), 3.into()),
                1,
                2,
            ),
            16,
        );
        let expr = DeltaExpr::constant(Coeff::from_ratio(3, 2)).sub(&d3.scale(&Coeff::from_int(38)));
        let scale = BigRational::from_integer(BigInt::from(n3).pow(2));
        expr.eval_interval(&cfg.delta, 64).scale(&scale)
    };
    Ok(FailureCertificate::StageViolation {
        stage: "case2".into(),
        description: "case2-density: all surviving pairs are simple, yet the degree \
                      condition demands the survivor multigraph exceed any simple \
                      graph for delta_1 < (1/38)^2"
            .into(),
        data: serde_json::json!({
            "survivors": survivors.len(),
            "edges": actual,
            "lowerBound": [bound.lo.to_string(), bound.hi.to_string()],
        }),
    })
}

//! Subhypergraph embedding, link structures, and the Fano-forcing lemmas,
//! each realized as a checker or constructor emitting verifiable witnesses.

mod embed;
mod links;
mod matching;
mod patterns;
mod witness;

pub use embed::{
    automorphism_count, count_copies, count_embeddings, find_embedding, find_tetrahedron,
    oracle_count_fano_copies,
};
pub use links::{link_structures, LinkFamily};
pub use matching::distinct_representatives;
pub use patterns::{
    fk_bound, fk_check, heavy_quadruple, lemma25_minimal_instance, pattern_scan_lemma25,
    rainbow_quad, DetectError, FkReport, Lemma25Pattern, LEMMA25_PATTERNS,
};
pub use witness::{fano_from_apex_octahedron, fano_from_rainbow_k4, FanoWitness, WitnessError};

use crate::hypergraph::Hypergraph3;

/// Searches `h` for a Fano copy and returns a verified witness when one
/// exists. Deterministic; uses the frame-restricted embedding search.
pub fn contains_fano(h: &Hypergraph3) -> Option<FanoWitness> {
    let phi = embed::find_fano_map(h)?;
    Some(FanoWitness::from_fano_map(h, &phi).expect("search output validates"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Generator;
    use crate::random::random_hypergraph;

    #[test]
    fn contains_fano_cases() {
        let k7 = Hypergraph3::generate(Generator::Complete(7)).unwrap();
        let w = contains_fano(&k7).unwrap();
        w.validate(&k7).unwrap();

        let b14 = Hypergraph3::generate(Generator::Bn(14)).unwrap();
        assert!(contains_fano(&b14).is_none());

        let f = Hypergraph3::generate(Generator::Fano).unwrap();
        let remnant = Hypergraph3::new(7, f.edges()[1..].to_vec()).unwrap();
        assert!(contains_fano(&remnant).is_none());
    }

    #[test]
    fn detector_agrees_with_subset_oracle_on_randoms() {
        for seed in 0..50 {
            let h = random_hypergraph(8, 0.3, 1000 + seed);
            let detected = contains_fano(&h);
            let oracle = oracle_count_fano_copies(&h);
            assert_eq!(detected.is_some(), oracle > 0, "seed {seed}");
            if let Some(w) = detected {
                w.validate(&h).unwrap();
            }
        }
    }
}

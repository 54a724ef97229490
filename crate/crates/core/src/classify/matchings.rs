use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;

use super::{incidence, Classification};
use crate::bitset::lex_cmp;
use crate::error::{Error, Result};
use crate::graph::{spanning_tree, Graph};
use crate::signed::{minimal_search, Normalizer, Signature};
use crate::symmetry::AutGroup;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingCensus {
    pub size: usize,
    /// Orbits of matchings under the automorphism group.
    pub aut_orbit_count: usize,
    /// Switching-isomorphism classes among those orbits whose minimal
    /// signature size equals `size`.
    pub switching_iso_count: usize,
    pub excluded_forbidden: bool,
    /// Smallest member of each automorphism orbit, ascending.
    pub representatives: Vec<Signature>,
}

/// All matchings with exactly `size` edges, in lexicographic order.
pub fn enumerate_matchings(g: &Graph, size: usize) -> Result<Vec<Signature>> {
    if 2 * size > g.vertex_count() {
        return Err(Error::InvalidParameters(format!(
            "no matching of size {size} in a graph on {} vertices",
            g.vertex_count()
        )));
    }
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(size);
    grow(g, size, 0, 0, &mut chosen, &mut out);
    Ok(out)
}

fn grow(g: &Graph, size: usize, from: usize, covered: u64, chosen: &mut Vec<usize>, out: &mut Vec<Signature>) {
    if chosen.len() == size {
        let bits = chosen.iter().fold(0u64, |acc, &e| acc | 1 << e);
        out.push(Signature::from_raw(g, bits));
        return;
    }
    let remaining = size - chosen.len();
    for e in from..g.edge_count() {
        if g.edge_count() - e < remaining {
            break;
        }
        let (a, b) = g.endpoints(e);
        let ends = (1u64 << a) | (1u64 << b);
        if covered & ends != 0 {
            continue;
        }
        chosen.push(e);
        grow(g, size, e + 1, covered | ends, chosen, out);
        chosen.pop();
    }
}

fn aut_canonical(grp: &AutGroup, bits: u64) -> u64 {
    grp.elements()
        .iter()
        .map(|p| p.map_edges_raw(bits))
        .min_by(|a, b| lex_cmp(*a, *b))
        .expect("group is non-empty")
}

/// Every automorphic image of the seven forbidden size-3 matchings of P(7,1).
pub fn forbidden_images(g: &Graph, grp: &AutGroup) -> Result<HashSet<u64>> {
    if g.petersen_params() != Some((7, 1)) || grp.n() != 7 {
        return Err(Error::Unsupported(
            "forbidden matchings are defined for P(7,1) only".into(),
        ));
    }
    let mut images = HashSet::new();
    for sigma in super::forbidden_matchings(g)? {
        for p in grp.elements() {
            images.insert(p.map_edges_raw(sigma.neg_edges().0));
        }
    }
    Ok(images)
}

fn contains_forbidden(bits: u64, forbidden: &HashSet<u64>) -> bool {
    forbidden.iter().any(|&f| f & bits == f)
}

/// Counts matchings of `size` up to automorphism and up to switching isomorphism.
///
/// With `exclude_forbidden` (P(7,1) only) every matching that contains an
/// automorphic image of a forbidden matching is dropped first.
pub fn matching_aut_orbits(
    g: &Graph,
    grp: &AutGroup,
    size: usize,
    exclude_forbidden: bool,
) -> Result<MatchingCensus> {
    if grp.elements()[0].images().len() != g.vertex_count() {
        return Err(Error::GraphMismatch);
    }
    let forbidden = if exclude_forbidden {
        forbidden_images(g, grp)?
    } else {
        HashSet::new()
    };
    let reps: BTreeSet<u64> = enumerate_matchings(g, size)?
        .par_iter()
        .map(|m| m.neg_edges().0)
        .filter(|&bits| !contains_forbidden(bits, &forbidden))
        .map(|bits| aut_canonical(grp, bits))
        .collect();
    let mut representatives: Vec<Signature> = reps.iter().map(|&b| Signature::from_raw(g, b)).collect();
    representatives.sort();

    let tree = spanning_tree(g)?;
    let normalizer = Normalizer::new(g, &tree)?;
    let incident = incidence(g);
    // key each orbit by the smallest class id among its images
    let mut by_class: BTreeMap<u64, u64> = BTreeMap::new();
    for &bits in &reps {
        let key = grp
            .elements()
            .iter()
            .map(|p| normalizer.normalize_raw(p.map_edges_raw(bits)).0)
            .min()
            .expect("group is non-empty");
        by_class.entry(key).or_insert(bits);
    }
    let switching_iso_count = by_class
        .par_iter()
        .filter(|(_, &bits)| minimal_search(&incident, bits).0 == size)
        .count();

    Ok(MatchingCensus {
        size,
        aut_orbit_count: representatives.len(),
        switching_iso_count,
        excluded_forbidden: exclude_forbidden,
        representatives,
    })
}

/// Number of orbits whose minimal signatures have exactly `size` edges.
pub fn matching_class_count(c: &Classification, size: usize) -> usize {
    c.orbits.iter().filter(|o| o.min_size == size).count()
}

/// Largest minimal signature size over all orbits.
pub fn max_minimal_size(c: &Classification) -> usize {
    c.orbits.iter().map(|o| o.min_size).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify;
    use crate::graph::build_petersen;
    use crate::signed::is_matching;
    use crate::symmetry::aut_group;

    fn census(n: usize, size: usize) -> MatchingCensus {
        let g = build_petersen(n, 1).unwrap();
        matching_aut_orbits(&g, &aut_group(n).unwrap(), size, false).unwrap()
    }

    #[test]
    fn matching_enumeration() {
        let g = build_petersen(5, 1).unwrap();
        assert_eq!(enumerate_matchings(&g, 1).unwrap().len(), 15);
        let g3 = build_petersen(3, 1).unwrap();
        let three = enumerate_matchings(&g3, 3).unwrap();
        let named = |s: &str| {
            let edges: Vec<usize> = s.split(',').map(|e| {
                let (a, b) = e.split_once('-').unwrap();
                g3.edge_between(g3.vertex_by_name(a).unwrap(), g3.vertex_by_name(b).unwrap()).unwrap()
            }).collect();
            Signature::from_edges(&g3, edges).unwrap()
        };
        assert!(three.contains(&named("u0-v0,u1-u2,v1-v2")));
        assert!(three.contains(&named("u0-v0,u1-v1,u2-v2")));
        let g7 = build_petersen(7, 1).unwrap();
        let spokes = Signature::from_edges(&g7, 14..21).unwrap();
        assert!(enumerate_matchings(&g7, 7).unwrap().contains(&spokes));
        assert!(enumerate_matchings(&g3, 4).is_err());
    }

    #[test]
    fn matchings_are_matchings_and_sorted() {
        let g = build_petersen(5, 1).unwrap();
        for size in 0..=5 {
            let all = enumerate_matchings(&g, size).unwrap();
            assert!(all.iter().all(|m| m.len() == size && is_matching(&g, m)));
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        // brute-force count for size 2
        let m = g.edge_count();
        let mut pairs = 0;
        for a in 0..m {
            for b in a + 1..m {
                let (x, y) = g.endpoints(a);
                let (z, w) = g.endpoints(b);
                if x != z && x != w && y != z && y != w {
                    pairs += 1;
                }
            }
        }
        assert_eq!(enumerate_matchings(&g, 2).unwrap().len(), pairs);
    }

    #[test]
    fn lemma_counts() {
        let p3: Vec<usize> = (1..=3).map(|s| census(3, s).aut_orbit_count).collect();
        assert_eq!(p3, [2, 4, 2]);
        let p5: Vec<usize> = (1..=5).map(|s| census(5, s).aut_orbit_count).collect();
        // size 3 has twelve orbits; the printed lemma omits {u0v0, u1u2, v3v4}
        assert_eq!(p5, [2, 8, 12, 10, 3]);
        assert_eq!(census(7, 2).aut_orbit_count, 12);
    }

    #[test]
    fn switching_iso_count_matches_classification() {
        for n in [3, 5, 7] {
            let c = classify(n).unwrap();
            for size in 1..=3 {
                let m = census(n, size);
                assert!(m.switching_iso_count <= m.aut_orbit_count);
                assert_eq!(m.switching_iso_count, matching_class_count(&c, size), "P({n},1) size {size}");
            }
        }
    }

    #[test]
    fn exclusion_requires_p71() {
        let g = build_petersen(5, 1).unwrap();
        assert!(matches!(
            matching_aut_orbits(&g, &aut_group(5).unwrap(), 3, true),
            Err(Error::Unsupported(_))
        ));
        let g = build_petersen(7, 1).unwrap();
        let grp = aut_group(7).unwrap();
        let plain = matching_aut_orbits(&g, &grp, 3, false).unwrap();
        let cut = matching_aut_orbits(&g, &grp, 3, true).unwrap();
        assert!(cut.aut_orbit_count < plain.aut_orbit_count);
        assert!(cut.excluded_forbidden);
    }
}

//! Automorphisms of P(n,1) and their action on signatures and switching
//! classes.
//!
//! Composition reads right to left: `a.compose(&b)` applies `b` first.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::bitset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{build_petersen, Graph};
use crate::signed::{ClassId, Normalizer, Signature};

/// Vertex bijection, with the induced edge map when it is an automorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
    edge_map: Option<Vec<usize>>,
}

impl Permutation {
    /// Wraps `images` as a permutation of `g`'s vertices. The edge map is
    /// filled in when every edge maps onto an edge.
    pub fn on_graph(g: &Graph, images: Vec<usize>) -> Result<Self> {
        let v = g.vertex_count();
        if images.len() != v {
            return Err(Error::WidthMismatch {
                expected: v,
                found: images.len(),
            });
        }
        let mut seen = vec![false; v];
        for &x in &images {
            if x >= v || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidParameters("images are not a bijection".into()));
            }
        }
        let edge_map = g
            .edges()
            .iter()
            .map(|&(a, b)| g.edge_between(images[a], images[b]))
            .collect::<Option<Vec<_>>>();
        Ok(Permutation { images, edge_map })
    }

    pub fn identity(g: &Graph) -> Self {
        Permutation {
            images: (0..g.vertex_count()).collect(),
            edge_map: Some((0..g.edge_count()).collect()),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v]
    }

    pub fn edge_map(&self) -> Option<&[usize]> {
        self.edge_map.as_deref()
    }

    pub fn is_automorphism(&self) -> bool {
        self.edge_map.is_some()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.images.len(), other.images.len(), "composing permutations of different sizes");
        let images = other.images.iter().map(|&x| self.images[x]).collect();
        let edge_map = match (&self.edge_map, &other.edge_map) {
            (Some(l), Some(r)) => Some(r.iter().map(|&e| l[e]).collect()),
            _ => None,
        };
        Permutation { images, edge_map }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        let edge_map = self.edge_map.as_ref().map(|m| {
            let mut inv = vec![0; m.len()];
            for (e, &f) in m.iter().enumerate() {
                inv[f] = e;
            }
            inv
        });
        Permutation { images, edge_map }
    }

    #[inline]
    pub(crate) fn map_edges_raw(&self, bits: u64) -> u64 {
        let map = self.edge_map.as_ref().expect("automorphism");
        EdgeSet(bits).iter().fold(0, |acc, e| acc | (1 << map[e]))
    }
}

fn petersen_perm(n: usize, images: Vec<usize>) -> Result<Permutation> {
    let g = build_petersen(n, 1)?;
    let p = Permutation::on_graph(&g, images)?;
    if !p.is_automorphism() {
        return Err(Error::Internal("generator is not an automorphism".into()));
    }
    Ok(p)
}

fn check_rank(n: usize, k: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("P({n},1) needs n >= 3")));
    }
    if k >= n {
        return Err(Error::InvalidParameters(format!("index {k} outside 0..{n}")));
    }
    Ok(())
}

/// Rotation `u_i -> u_{i+k}`, `v_i -> v_{i+k}`.
pub fn rho(n: usize, k: usize) -> Result<Permutation> {
    check_rank(n, k)?;
    let images = (0..2 * n)
        .map(|x| {
            let (side, i) = (x / n, x % n);
            side * n + (i + k) % n
        })
        .collect();
    petersen_perm(n, images)
}

/// Reflection fixing `u_k` and `v_k`: `u_i -> u_{2k-i}`. Odd `n` only.
pub fn delta(n: usize, k: usize) -> Result<Permutation> {
    check_rank(n, k)?;
    if n % 2 == 0 {
        return Err(Error::Unsupported(format!(
            "reflection through a spoke of P({n},1) with even n"
        )));
    }
    let images = (0..2 * n)
        .map(|x| {
            let (side, i) = (x / n, x % n);
            side * n + (2 * k + n - i) % n
        })
        .collect();
    petersen_perm(n, images)
}

/// Swap `u_i <-> v_i`.
pub fn gamma(n: usize) -> Result<Permutation> {
    check_rank(n, 0)?;
    let images = (0..2 * n).map(|x| (x + n) % (2 * n)).collect();
    petersen_perm(n, images)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorTag {
    Rho(usize),
    Delta(usize),
    Gamma,
    Composite,
}

impl fmt::Display for GeneratorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorTag::Rho(k) => write!(f, "rho{k}"),
            GeneratorTag::Delta(k) => write!(f, "delta{k}"),
            GeneratorTag::Gamma => f.write_str("gamma"),
            GeneratorTag::Composite => f.write_str("composite"),
        }
    }
}

/// The group generated by one rotation, one reflection and the swap.
#[derive(Debug, Clone)]
pub struct AutGroup {
    n: usize,
    elements: Vec<Permutation>,
    tags: Vec<GeneratorTag>,
}

impl AutGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements sorted by image vector; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn tags(&self) -> &[GeneratorTag] {
        &self.tags
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.position(p).is_some()
    }
}

/// Smallest and largest n accepted by [`aut_group`].
pub const SUPPORTED_N: (usize, usize) = (3, 13);

/// Closure of {rho_1, delta_0, gamma} for odd `n` in 3..=13.
pub fn aut_group(n: usize) -> Result<AutGroup> {
    if n % 2 == 0 || n < SUPPORTED_N.0 || n > SUPPORTED_N.1 {
        return Err(Error::Unsupported(format!(
            "automorphism group of P({n},1); supported: odd n in {}..={}",
            SUPPORTED_N.0, SUPPORTED_N.1
        )));
    }
    let g = build_petersen(n, 1)?;
    let generators = [rho(n, 1)?, delta(n, 0)?, gamma(n)?];
    let mut found: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::from([Permutation::identity(&g)]);
    while let Some(p) = queue.pop_front() {
        if found.contains(&p) {
            continue;
        }
        for gen in &generators {
            let q = gen.compose(&p);
            if !found.contains(&q) {
                queue.push_back(q);
            }
        }
        found.insert(p);
    }
    let elements: Vec<Permutation> = found.into_iter().collect();
    if elements.len() != 4 * n {
        return Err(Error::Internal(format!(
            "closure has order {}, expected {}",
            elements.len(),
            4 * n
        )));
    }
    let named: Vec<(Permutation, GeneratorTag)> = (0..n)
        .flat_map(|k| {
            [
                (rho(n, k), GeneratorTag::Rho(k)),
                (delta(n, k), GeneratorTag::Delta(k)),
            ]
        })
        .chain([(gamma(n), GeneratorTag::Gamma)])
        .map(|(p, tag)| p.map(|p| (p, tag)))
        .collect::<Result<_>>()?;
    let tags = elements
        .iter()
        .map(|p| {
            named
                .iter()
                .find(|(q, _)| q == p)
                .map_or(GeneratorTag::Composite, |(_, tag)| *tag)
        })
        .collect();
    Ok(AutGroup { n, elements, tags })
}

/// Vertex bound for [`brute_force_automorphisms`].
pub const BRUTE_FORCE_MAX_VERTICES: usize = 16;

/// All adjacency-preserving bijections, found by backtracking with degree
/// pruning. Sorted by image vector.
pub fn brute_force_automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    brute_force_automorphisms_bounded(g, BRUTE_FORCE_MAX_VERTICES)
}

pub fn brute_force_automorphisms_bounded(g: &Graph, max_vertices: usize) -> Result<Vec<Permutation>> {
    let v = g.vertex_count();
    if v > max_vertices {
        return Err(Error::SizeBound {
            what: "vertex count for brute-force automorphisms",
            limit: max_vertices,
            actual: v,
        });
    }
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(v);
    let mut used = vec![false; v];
    assign(g, &mut images, &mut used, &mut out)?;
    out.sort();
    Ok(out)
}

fn assign(
    g: &Graph,
    images: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) -> Result<()> {
    let x = images.len();
    if x == g.vertex_count() {
        out.push(Permutation::on_graph(g, images.clone())?);
        return Ok(());
    }
    for y in 0..g.vertex_count() {
        if used[y] || g.degree(y) != g.degree(x) {
            continue;
        }
        let consistent = (0..x).all(|w| g.is_adjacent(w, x) == g.is_adjacent(images[w], y));
        if !consistent {
            continue;
        }
        used[y] = true;
        images.push(y);
        assign(g, images, used, out)?;
        images.pop();
        used[y] = false;
    }
    Ok(())
}

pub fn apply_to_signature(g: &Graph, p: &Permutation, sig: &Signature) -> Result<Signature> {
    if !sig.belongs_to(g) {
        return Err(Error::GraphMismatch);
    }
    if p.images.len() != g.vertex_count() || !p.is_automorphism() {
        return Err(Error::NotAutomorphism);
    }
    Ok(Signature::from_raw(g, p.map_edges_raw(sig.neg_edges().0)))
}

/// Image of a switching class under an automorphism.
pub fn act_on_class(g: &Graph, p: &Permutation, cid: &ClassId, normalizer: &Normalizer) -> Result<ClassId> {
    if !p.is_automorphism() || p.images.len() != g.vertex_count() {
        return Err(Error::NotAutomorphism);
    }
    if cid.len() != normalizer.class_len() {
        return Err(Error::WidthMismatch {
            expected: normalizer.class_len(),
            found: cid.len(),
        });
    }
    let rep = normalizer.representative_raw(cid.bits());
    let (bits, _) = normalizer.normalize_raw(p.map_edges_raw(rep));
    ClassId::new(bits, cid.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::enumerate_cycles;
    use crate::graph::spanning_tree;
    use crate::signed::neg_profile;

    fn sig(g: &Graph, edges: &[usize]) -> Signature {
        Signature::from_edges(g, edges.iter().copied()).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert!(rho(3, 0).unwrap().is_identity());
        let g = build_petersen(3, 1).unwrap();
        let r = rho(3, 1).unwrap();
        assert_eq!(apply_to_signature(&g, &r, &sig(&g, &[0])).unwrap(), sig(&g, &[1]));
        assert!(rho(5, 2).unwrap().compose(&rho(5, 3).unwrap()).is_identity());
        assert!(rho(5, 5).is_err());
    }

    #[test]
    fn delta_examples() {
        let d = delta(3, 1).unwrap();
        assert_eq!(d.images(), &[2, 1, 0, 5, 4, 3]);
        for n in [3, 5, 7, 9] {
            for k in 0..n {
                let d = delta(n, k).unwrap();
                assert!(d.compose(&d).is_identity());
            }
        }
        let g = build_petersen(5, 1).unwrap();
        // u1u2 -> u4u3
        assert_eq!(
            apply_to_signature(&g, &delta(5, 0).unwrap(), &sig(&g, &[1])).unwrap(),
            sig(&g, &[3])
        );
        assert!(matches!(delta(4, 0), Err(Error::Unsupported(_))));
    }

    #[test]
    fn gamma_examples() {
        let g = build_petersen(3, 1).unwrap();
        let c = gamma(3).unwrap();
        assert!(c.compose(&c).is_identity());
        assert_eq!(apply_to_signature(&g, &c, &sig(&g, &[0])).unwrap(), sig(&g, &[3]));
        let spokes = sig(&g, &[6, 7, 8]);
        assert_eq!(c.edge_map().unwrap()[6..], [6, 7, 8]);
        assert_eq!(apply_to_signature(&g, &c, &spokes).unwrap(), spokes);
    }

    #[test]
    fn group_orders_and_closure() {
        for n in [3, 5, 7, 9, 11, 13] {
            let grp = aut_group(n).unwrap();
            assert_eq!(grp.order(), 4 * n);
            assert!(grp.elements()[0].is_identity());
            for a in grp.elements() {
                assert!(a.is_automorphism());
                assert!(grp.contains(&a.inverse()));
            }
            if n <= 7 {
                for a in grp.elements() {
                    for b in grp.elements() {
                        assert!(grp.contains(&a.compose(b)));
                    }
                }
            }
        }
        assert!(aut_group(4).is_err());
        assert!(aut_group(15).is_err());
    }

    #[test]
    fn tags_name_the_generators() {
        let grp = aut_group(5).unwrap();
        let count = |f: fn(&GeneratorTag) -> bool| grp.tags().iter().filter(|t| f(t)).count();
        assert_eq!(count(|t| matches!(t, GeneratorTag::Rho(_))), 5);
        assert_eq!(count(|t| matches!(t, GeneratorTag::Delta(_))), 5);
        assert_eq!(count(|t| matches!(t, GeneratorTag::Gamma)), 1);
        assert_eq!(count(|t| matches!(t, GeneratorTag::Composite)), 9);
        assert_eq!(grp.tags()[0], GeneratorTag::Rho(0));
    }

    #[test]
    fn brute_force_small_graphs() {
        assert_eq!(brute_force_automorphisms(&Graph::complete(3).unwrap()).unwrap().len(), 6);
        assert_eq!(brute_force_automorphisms(&Graph::path(3).unwrap()).unwrap().len(), 2);
        // the cube has 48 automorphisms, more than the prism generators give
        assert_eq!(brute_force_automorphisms(&build_petersen(4, 1).unwrap()).unwrap().len(), 48);
        assert!(brute_force_automorphisms(&build_petersen(9, 1).unwrap()).is_err());
    }

    #[test]
    fn brute_force_agrees_with_generators() {
        for n in [3, 5, 7, 9] {
            let g = build_petersen(n, 1).unwrap();
            let brute = brute_force_automorphisms_bounded(&g, 18).unwrap();
            assert_eq!(brute, aut_group(n).unwrap().elements(), "n = {n}");
        }
    }

    #[test]
    fn spoke_orbit_is_all_spokes() {
        let g = build_petersen(5, 1).unwrap();
        let grp = aut_group(5).unwrap();
        let orbit: BTreeSet<Signature> = grp
            .elements()
            .iter()
            .map(|p| apply_to_signature(&g, p, &sig(&g, &[10])).unwrap())
            .collect();
        let spokes: BTreeSet<Signature> = (10..15).map(|e| sig(&g, &[e])).collect();
        assert_eq!(orbit, spokes);
        // u1u2 reaches u3u4
        assert!(grp
            .elements()
            .iter()
            .any(|p| apply_to_signature(&g, p, &sig(&g, &[1])).unwrap() == sig(&g, &[3])));
    }

    #[test]
    fn non_automorphism_rejected() {
        let g = build_petersen(3, 1).unwrap();
        let swap01 = Permutation::on_graph(&g, vec![1, 0, 2, 3, 4, 5]).unwrap();
        assert!(!swap01.is_automorphism());
        assert!(matches!(
            apply_to_signature(&g, &swap01, &sig(&g, &[0])),
            Err(Error::NotAutomorphism)
        ));
        assert!(Permutation::on_graph(&g, vec![0, 0, 1, 2, 3, 4]).is_err());
    }

    #[test]
    fn automorphisms_preserve_profiles() {
        let g = build_petersen(5, 1).unwrap();
        let cycles = enumerate_cycles(&g).unwrap();
        let grp = aut_group(5).unwrap();
        for bits in [0b1u64, 0b1000_0000_0100_101, 0b111_1100_0000_0000, 0x5a5a] {
            let x = Signature::from_set(&g, EdgeSet(bits & 0x7fff)).unwrap();
            for p in grp.elements() {
                let y = apply_to_signature(&g, p, &x).unwrap();
                assert_eq!(neg_profile(&x, &cycles), neg_profile(&y, &cycles));
            }
        }
    }

    #[test]
    fn class_action_laws() {
        for n in [3, 5, 7] {
            let g = build_petersen(n, 1).unwrap();
            let t = spanning_tree(&g).unwrap();
            let norm = Normalizer::new(&g, &t).unwrap();
            let grp = aut_group(n).unwrap();
            let len = norm.class_len();
            for bits in 0..norm.class_count() {
                let cid = ClassId::new(bits, len).unwrap();
                assert_eq!(act_on_class(&g, &grp.elements()[0], &cid, &norm).unwrap(), cid);
                for a in grp.elements() {
                    let ac = act_on_class(&g, a, &cid, &norm).unwrap();
                    for b in grp.elements() {
                        let lhs = act_on_class(&g, &a.compose(b), &cid, &norm).unwrap();
                        let rhs = act_on_class(&g, a, &act_on_class(&g, b, &cid, &norm).unwrap(), &norm)
                            .unwrap();
                        assert_eq!(lhs, rhs);
                    }
                    if bits == 0 {
                        assert!(ac.is_zero());
                    }
                }
            }
        }
    }
}

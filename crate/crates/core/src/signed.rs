//! Signatures, switching and switching classes.
//!
//! A signature is the set of negative edges. Switching at a vertex set `S`
//! flips exactly the edges with one endpoint in `S`. Each switching class is
//! named by a [`ClassId`]: the co-tree signs of its unique member that is
//! positive on every edge of the BFS spanning tree.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::bitset::{EdgeSet, VertexSet};
use crate::cycles::Cycle;
use crate::error::{Error, Result};
use crate::graph::{mask, Graph, SpanningTree};

/// Negative-edge set of a signed graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    neg_edges: EdgeSet,
    width: u8,
    graph: u64,
}

impl Signature {
    /// The all-positive signature.
    pub fn empty(g: &Graph) -> Self {
        Signature {
            neg_edges: EdgeSet::EMPTY,
            width: g.edge_count() as u8,
            graph: g.fingerprint(),
        }
    }

    pub fn from_set(g: &Graph, neg_edges: EdgeSet) -> Result<Self> {
        if !neg_edges.is_subset(g.all_edges()) {
            return Err(Error::InvalidParameters(format!(
                "edge set {:#x} references edges outside 0..{}",
                neg_edges.0,
                g.edge_count()
            )));
        }
        Ok(Signature {
            neg_edges,
            width: g.edge_count() as u8,
            graph: g.fingerprint(),
        })
    }

    pub fn from_edges<I: IntoIterator<Item = usize>>(g: &Graph, edges: I) -> Result<Self> {
        Self::from_set(g, edges.into_iter().collect())
    }

    /// Signature with the edges joining each listed vertex pair.
    pub fn from_pairs(g: &Graph, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut set = EdgeSet::EMPTY;
        for &(a, b) in pairs {
            let e = g.edge_between(a, b).ok_or_else(|| {
                Error::InvalidParameters(format!("{a} and {b} are not adjacent in {g}"))
            })?;
            set.insert(e);
        }
        Self::from_set(g, set)
    }

    pub(crate) fn from_raw(g: &Graph, bits: u64) -> Self {
        Signature {
            neg_edges: EdgeSet(bits),
            width: g.edge_count() as u8,
            graph: g.fingerprint(),
        }
    }

    pub fn neg_edges(&self) -> EdgeSet {
        self.neg_edges
    }

    /// Number of negative edges.
    pub fn len(&self) -> usize {
        self.neg_edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neg_edges.is_empty()
    }

    pub fn is_negative(&self, e: usize) -> bool {
        self.neg_edges.contains(e)
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn belongs_to(&self, g: &Graph) -> bool {
        self.graph == g.fingerprint() && self.width() == g.edge_count()
    }

    pub(crate) fn check_graph(&self, g: &Graph) -> Result<()> {
        if self.width() != g.edge_count() {
            return Err(Error::WidthMismatch {
                expected: g.edge_count(),
                found: self.width(),
            });
        }
        if self.graph != g.fingerprint() {
            return Err(Error::GraphMismatch);
        }
        Ok(())
    }

    /// Edge names joined by commas, in ascending edge id order.
    pub fn render(&self, g: &Graph) -> String {
        self.neg_edges
            .iter()
            .map(|e| g.edge_name(e))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Ordered by graph, then by the ascending list of negative edge ids.
impl Ord for Signature {
    fn cmp(&self, other: &Self) -> Ordering {
        self.graph
            .cmp(&other.graph)
            .then(self.width.cmp(&other.width))
            .then_with(|| self.neg_edges.lex_cmp(other.neg_edges))
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Vertices to switch at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SwitchSet {
    vertices: VertexSet,
    width: u8,
}

impl SwitchSet {
    pub fn empty(g: &Graph) -> Self {
        SwitchSet {
            vertices: VertexSet::EMPTY,
            width: g.vertex_count() as u8,
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(g: &Graph, vertices: I) -> Result<Self> {
        let vertices: VertexSet = vertices.into_iter().collect();
        if !vertices.is_subset(g.all_vertices()) {
            return Err(Error::InvalidParameters(format!(
                "switch set references vertices outside 0..{}",
                g.vertex_count()
            )));
        }
        Ok(SwitchSet {
            vertices,
            width: g.vertex_count() as u8,
        })
    }

    /// Switch set from vertex names such as `u0`, `v3`.
    pub fn from_names(g: &Graph, names: &[&str]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|name| {
                g.vertex_by_name(name)
                    .ok_or_else(|| Error::InvalidParameters(format!("unknown vertex `{name}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_vertices(g, ids)
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertices
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn render(&self, g: &Graph) -> String {
        self.vertices
            .iter()
            .map(|v| g.vertex_name(v))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Name of a switching class: the co-tree signs of its tree-positive member,
/// first co-tree edge in the most significant position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassId {
    len: u8,
    bits: u64,
}

impl ClassId {
    pub fn new(bits: u64, len: usize) -> Result<Self> {
        if len > 64 || bits & !mask(len) != 0 {
            return Err(Error::InvalidParameters(format!(
                "class bits {bits:#x} do not fit in {len} positions"
            )));
        }
        Ok(ClassId {
            len: len as u8,
            bits,
        })
    }

    pub fn zero(len: usize) -> Self {
        ClassId {
            len: len as u8,
            bits: 0,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Sign bit of the `j`-th co-tree edge.
    pub fn bit(&self, j: usize) -> bool {
        (self.bits >> (self.len as usize - 1 - j)) & 1 == 1
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len() {
            f.write_str(if self.bit(j) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.len() > 64 {
            return Err(Error::InvalidParameters("class id longer than 64 bits".into()));
        }
        let mut bits = 0u64;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                _ => {
                    return Err(Error::InvalidParameters(format!(
                        "class id `{s}` is not a bitstring"
                    )))
                }
            }
        }
        ClassId::new(bits, s.len())
    }
}

/// Number of negative cycles of each cycle length.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NegCycleProfile {
    counts: BTreeMap<usize, usize>,
}

impl NegCycleProfile {
    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    /// Count for one length; zero when the length is absent.
    pub fn get(&self, length: usize) -> usize {
        self.counts.get(&length).copied().unwrap_or(0)
    }

    /// Counts for the given lengths, in order.
    pub fn project(&self, lengths: &[usize]) -> Vec<usize> {
        lengths.iter().map(|&l| self.get(l)).collect()
    }

    pub fn lengths(&self) -> impl Iterator<Item = usize> + '_ {
        self.counts.keys().copied()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

#[inline]
pub(crate) fn switch_mask(g: &Graph, vertices: u64) -> u64 {
    VertexSet(vertices)
        .iter()
        .fold(0, |acc, v| acc ^ g.incident(v).0)
}

pub fn switch(g: &Graph, sig: &Signature, s: &SwitchSet) -> Result<Signature> {
    sig.check_graph(g)?;
    if s.width() != g.vertex_count() {
        return Err(Error::WidthMismatch {
            expected: g.vertex_count(),
            found: s.width(),
        });
    }
    Ok(Signature::from_raw(
        g,
        sig.neg_edges.0 ^ switch_mask(g, s.vertices.0),
    ))
}

pub fn cycle_sign(sig: &Signature, c: &Cycle) -> Result<Sign> {
    if c.graph_fingerprint() != sig.graph {
        return Err(Error::ForeignCycle);
    }
    Ok(raw_cycle_sign(sig.neg_edges.0, c))
}

#[inline]
fn raw_cycle_sign(neg: u64, c: &Cycle) -> Sign {
    if (neg & c.edge_set().0).count_ones() % 2 == 1 {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// Negative-cycle counts per length. Every length present in `cycles` gets an
/// entry, zero included.
pub fn neg_profile(sig: &Signature, cycles: &[Cycle]) -> NegCycleProfile {
    raw_neg_profile(sig.neg_edges.0, cycles)
}

pub(crate) fn raw_neg_profile(neg: u64, cycles: &[Cycle]) -> NegCycleProfile {
    let mut counts = BTreeMap::new();
    for c in cycles {
        let slot = counts.entry(c.len()).or_insert(0);
        if raw_cycle_sign(neg, c) == Sign::Negative {
            *slot += 1;
        }
    }
    NegCycleProfile { counts }
}

/// Indices (into `cycles`) of the negative cycles.
pub fn unbalanced_cycle_set(sig: &Signature, cycles: &[Cycle]) -> Vec<usize> {
    cycles
        .iter()
        .enumerate()
        .filter(|(_, c)| raw_cycle_sign(sig.neg_edges.0, c) == Sign::Negative)
        .map(|(i, _)| i)
        .collect()
}

/// Precomputed switching data for one spanning tree.
#[derive(Debug, Clone)]
pub struct Normalizer {
    /// (vertex, parent vertex, parent edge) in BFS order, root excluded.
    steps: Vec<(usize, usize, usize)>,
    incident: Vec<u64>,
    cotree: Vec<usize>,
    graph: u64,
    edge_count: usize,
}

impl Normalizer {
    pub fn new(g: &Graph, t: &SpanningTree) -> Result<Self> {
        if t.graph_fingerprint() != g.fingerprint() {
            return Err(Error::GraphMismatch);
        }
        let steps = t
            .bfs_order()
            .iter()
            .skip(1)
            .map(|&v| {
                let e = t.parent()[v].expect("non-root vertex has a parent edge");
                let (a, b) = g.endpoints(e);
                (v, if a == v { b } else { a }, e)
            })
            .collect();
        Ok(Normalizer {
            steps,
            incident: (0..g.vertex_count()).map(|v| g.incident(v).0).collect(),
            cotree: t.cotree_order().to_vec(),
            graph: g.fingerprint(),
            edge_count: g.edge_count(),
        })
    }

    pub fn class_len(&self) -> usize {
        self.cotree.len()
    }

    pub fn class_count(&self) -> u64 {
        1u64 << self.cotree.len()
    }

    /// Returns (class bits, switch vertex bits) for a raw negative-edge mask.
    #[inline]
    pub fn normalize_raw(&self, neg: u64) -> (u64, u64) {
        let mut potential = 0u64;
        let mut flip = 0u64;
        for &(v, p, e) in &self.steps {
            if ((neg >> e) ^ (potential >> p)) & 1 == 1 {
                potential |= 1 << v;
                flip ^= self.incident[v];
            }
        }
        let switched = neg ^ flip;
        let mut bits = 0u64;
        for &e in &self.cotree {
            bits = (bits << 1) | ((switched >> e) & 1);
        }
        (bits, potential)
    }

    pub fn normalize(&self, sig: &Signature) -> Result<(ClassId, u64)> {
        if sig.graph != self.graph || sig.width() != self.edge_count {
            return Err(Error::GraphMismatch);
        }
        let (bits, switch) = self.normalize_raw(sig.neg_edges.0);
        Ok((
            ClassId {
                len: self.cotree.len() as u8,
                bits,
            },
            switch,
        ))
    }

    /// The tree-positive member of a class as a raw edge mask.
    #[inline]
    pub fn representative_raw(&self, bits: u64) -> u64 {
        let len = self.cotree.len();
        let mut neg = 0u64;
        for (j, &e) in self.cotree.iter().enumerate() {
            if (bits >> (len - 1 - j)) & 1 == 1 {
                neg |= 1 << e;
            }
        }
        neg
    }
}

/// Switches `sig` to be positive on every tree edge. Returns the class id and
/// the switch set used, which never contains the root.
pub fn tree_normalize(g: &Graph, sig: &Signature, t: &SpanningTree) -> Result<(ClassId, SwitchSet)> {
    sig.check_graph(g)?;
    let normalizer = Normalizer::new(g, t)?;
    let (cid, switch) = normalizer.normalize(sig)?;
    Ok((
        cid,
        SwitchSet {
            vertices: VertexSet(switch),
            width: g.vertex_count() as u8,
        },
    ))
}

/// The tree-positive signature named by `cid`.
pub fn class_representative(g: &Graph, t: &SpanningTree, cid: &ClassId) -> Result<Signature> {
    if t.graph_fingerprint() != g.fingerprint() {
        return Err(Error::GraphMismatch);
    }
    if cid.len() != t.cotree_len() {
        return Err(Error::WidthMismatch {
            expected: t.cotree_len(),
            found: cid.len(),
        });
    }
    let len = cid.len();
    let neg: EdgeSet = t
        .cotree_order()
        .iter()
        .enumerate()
        .filter(|&(j, _)| (cid.bits >> (len - 1 - j)) & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Ok(Signature::from_raw(g, neg.0))
}

pub fn class_id(g: &Graph, sig: &Signature, t: &SpanningTree) -> Result<ClassId> {
    Ok(tree_normalize(g, sig, t)?.0)
}

pub fn is_balanced(g: &Graph, sig: &Signature) -> Result<bool> {
    let t = crate::graph::spanning_tree(g)?;
    Ok(class_id(g, sig, &t)?.is_zero())
}

pub fn switching_equivalent(g: &Graph, a: &Signature, b: &Signature) -> Result<bool> {
    a.check_graph(g)?;
    b.check_graph(g)?;
    let t = crate::graph::spanning_tree(g)?;
    Ok(class_id(g, a, &t)? == class_id(g, b, &t)?)
}

/// Decides equivalence both by class id and by comparing the sets of negative
/// cycles, failing with [`Error::Internal`] if the two disagree.
pub fn switching_equivalent_checked(
    g: &Graph,
    cycles: &[Cycle],
    a: &Signature,
    b: &Signature,
) -> Result<bool> {
    let by_class = switching_equivalent(g, a, b)?;
    let by_cycles = unbalanced_cycle_set(a, cycles) == unbalanced_cycle_set(b, cycles);
    if by_class != by_cycles {
        return Err(Error::Internal(format!(
            "class id says {by_class}, negative cycles say {by_cycles} for {} vs {}",
            a.render(g),
            b.render(g)
        )));
    }
    Ok(by_class)
}

pub fn is_matching(g: &Graph, sig: &Signature) -> bool {
    let mut covered = 0u64;
    for e in sig.neg_edges.iter() {
        let (a, b) = g.endpoints(e);
        let ends = (1u64 << a) | (1u64 << b);
        if covered & ends != 0 {
            return false;
        }
        covered |= ends;
    }
    true
}

/// Largest number of negative edges at one vertex.
pub fn max_negative_degree(g: &Graph, sig: &Signature) -> usize {
    (0..g.vertex_count())
        .map(|v| g.incident(v).intersection(sig.neg_edges).len())
        .max()
        .unwrap_or(0)
}

/// Default vertex bound for the exhaustive minimal search.
pub const DEFAULT_MINIMAL_MAX_VERTICES: usize = 26;

/// Result of [`minimal_signature`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSignature {
    pub size: usize,
    /// Every equivalent signature of `size` edges, ascending.
    pub witnesses: Vec<Signature>,
    /// `witness_switches[i]` turns the input into `witnesses[i]`.
    pub witness_switches: Vec<SwitchSet>,
}

/// Smallest equivalent signatures, by trying every switch set that omits
/// vertex 0.
pub fn minimal_signature(g: &Graph, sig: &Signature) -> Result<MinimalSignature> {
    minimal_signature_bounded(g, sig, DEFAULT_MINIMAL_MAX_VERTICES)
}

pub fn minimal_signature_bounded(
    g: &Graph,
    sig: &Signature,
    max_vertices: usize,
) -> Result<MinimalSignature> {
    sig.check_graph(g)?;
    let v = g.vertex_count();
    if v > max_vertices {
        return Err(Error::SizeBound {
            what: "vertex count for exhaustive minimal search",
            limit: max_vertices,
            actual: v,
        });
    }
    let incident: Vec<u64> = (0..v).map(|x| g.incident(x).0).collect();
    let (size, found) = minimal_search(&incident, sig.neg_edges.0);
    let width = v as u8;
    let (witnesses, witness_switches) = found
        .into_iter()
        .map(|(neg, sw)| {
            (
                Signature::from_raw(g, neg),
                SwitchSet {
                    vertices: VertexSet(sw),
                    width,
                },
            )
        })
        .unzip();
    Ok(MinimalSignature {
        size,
        witnesses,
        witness_switches,
    })
}

const CHUNK_BITS: u32 = 14;

/// Gray-code walk over the switch sets of vertices `1..V`, split into chunks
/// that each start from a directly computed state. The result does not depend
/// on how chunks are scheduled.
pub(crate) fn minimal_search(incident: &[u64], neg: u64) -> (usize, Vec<(u64, u64)>) {
    let free = incident.len().saturating_sub(1) as u32;
    let chunk_bits = CHUNK_BITS.min(free);
    let chunks = 1u64 << (free - chunk_bits);
    let chunk_len = 1u64 << chunk_bits;

    let scan = |c: u64| -> (u32, Vec<(u64, u64)>) {
        let start = c * chunk_len;
        let gray = start ^ (start >> 1);
        let mut sw = gray << 1;
        let mut cur = neg;
        for (x, inc) in incident.iter().enumerate().skip(1) {
            if (sw >> x) & 1 == 1 {
                cur ^= inc;
            }
        }
        let mut best = cur.count_ones();
        let mut hits = vec![(cur, sw)];
        for i in start + 1..start + chunk_len {
            let x = i.trailing_zeros() as usize + 1;
            cur ^= incident[x];
            sw ^= 1 << x;
            let w = cur.count_ones();
            if w < best {
                best = w;
                hits.clear();
                hits.push((cur, sw));
            } else if w == best {
                hits.push((cur, sw));
            }
        }
        (best, hits)
    };

    let parts: Vec<(u32, Vec<(u64, u64)>)> = if chunks > 1 {
        (0..chunks).into_par_iter().map(scan).collect()
    } else {
        vec![scan(0)]
    };
    let best = parts.iter().map(|p| p.0).min().unwrap_or(0);
    let mut hits: Vec<(u64, u64)> = parts
        .into_iter()
        .filter(|p| p.0 == best)
        .flat_map(|p| p.1)
        .collect();
    hits.sort_by(|a, b| crate::bitset::lex_cmp(a.0, b.0).then(a.1.cmp(&b.1)));
    hits.dedup_by(|a, b| a.0 == b.0);
    (best as usize, hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::enumerate_cycles;
    use crate::graph::{build_petersen, spanning_tree};
    use proptest::prelude::*;

    fn p(n: usize) -> Graph {
        build_petersen(n, 1).unwrap()
    }

    fn sig(g: &Graph, edges: &[usize]) -> Signature {
        Signature::from_edges(g, edges.iter().copied()).unwrap()
    }

    // P(3,1) ids: u0u1=0 u1u2=1 u2u0=2 v0v1=3 v1v2=4 v2v0=5 u0v0=6 u1v1=7 u2v2=8

    #[test]
    fn full_switch_is_identity() {
        let g = p(5);
        let s = SwitchSet::from_vertices(&g, 0..10).unwrap();
        let x = sig(&g, &[0, 6, 12]);
        assert_eq!(switch(&g, &x, &s).unwrap(), x);
        assert_eq!(switch(&g, &Signature::empty(&g), &s).unwrap(), Signature::empty(&g));
    }

    #[test]
    fn switch_flips_incident_edges() {
        let k3 = Graph::complete(3).unwrap();
        let s = SwitchSet::from_vertices(&k3, [1]).unwrap();
        let out = switch(&k3, &Signature::empty(&k3), &s).unwrap();
        // K3 edges: 01, 02, 12
        assert_eq!(out.neg_edges(), [0, 2].into_iter().collect());
    }

    #[test]
    fn spokes_switch_to_empty() {
        let g = p(3);
        let s = SwitchSet::from_names(&g, &["u0", "u1", "u2"]).unwrap();
        let out = switch(&g, &sig(&g, &[6, 7, 8]), &s).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn switch_width_mismatch() {
        let g3 = p(3);
        let g5 = p(5);
        let s = SwitchSet::empty(&g5);
        assert!(matches!(
            switch(&g3, &Signature::empty(&g3), &s),
            Err(Error::WidthMismatch { .. })
        ));
        assert!(switch(&g3, &Signature::empty(&g5), &SwitchSet::empty(&g3)).is_err());
    }

    #[test]
    fn cycle_signs() {
        let g = p(3);
        let cycles = enumerate_cycles(&g).unwrap();
        let outer = cycles.iter().find(|c| c.edge_set() == [0, 1, 2].into_iter().collect()).unwrap();
        let square = cycles.iter().find(|c| c.edge_set() == [0, 3, 6, 7].into_iter().collect()).unwrap();
        for c in &cycles {
            assert_eq!(cycle_sign(&Signature::empty(&g), c).unwrap(), Sign::Positive);
        }
        assert_eq!(cycle_sign(&sig(&g, &[0]), outer).unwrap(), Sign::Negative);
        assert_eq!(cycle_sign(&sig(&g, &[0, 3]), square).unwrap(), Sign::Positive);
        let g5 = p(5);
        assert!(matches!(
            cycle_sign(&Signature::empty(&g5), outer),
            Err(Error::ForeignCycle)
        ));
    }

    #[test]
    fn neg_profile_examples() {
        let g = p(3);
        let cycles = enumerate_cycles(&g).unwrap();
        let prof = neg_profile(&sig(&g, &[6]), &cycles);
        assert_eq!(prof.project(&[3, 4, 6]), vec![0, 2, 2]);

        // u0v0, u2v2, u3u4 on P(5,1)
        let g = p(5);
        let cycles = enumerate_cycles(&g).unwrap();
        let prof = neg_profile(&sig(&g, &[10, 12, 3]), &cycles);
        assert_eq!(prof.project(&[4, 5, 6]), vec![5, 1, 0]);

        let forest = Graph::path(4).unwrap();
        assert!(neg_profile(&sig(&forest, &[1]), &[]).counts().is_empty());
    }

    #[test]
    fn balance() {
        let g = p(3);
        assert!(is_balanced(&g, &Signature::empty(&g)).unwrap());
        assert!(is_balanced(&g, &sig(&g, &[6, 7, 8])).unwrap());
        assert!(!is_balanced(&g, &sig(&g, &[0])).unwrap());
    }

    #[test]
    fn normalize_is_idempotent() {
        let g = p(5);
        let t = spanning_tree(&g).unwrap();
        let x = sig(&g, &[0, 3, 7, 11, 14]);
        let (cid, s) = tree_normalize(&g, &x, &t).unwrap();
        assert!(!s.vertices().contains(0));
        let y = switch(&g, &x, &s).unwrap();
        assert!(y.neg_edges().intersection(t.tree_edges()).is_empty());
        let (cid2, s2) = tree_normalize(&g, &y, &t).unwrap();
        assert_eq!(cid, cid2);
        assert!(s2.is_empty());
        assert_eq!(class_representative(&g, &t, &cid).unwrap(), y);
    }

    #[test]
    fn class_id_text_round_trip() {
        let cid = ClassId::new(0b0110, 4).unwrap();
        assert_eq!(cid.to_string(), "0110");
        assert_eq!("0110".parse::<ClassId>().unwrap(), cid);
        assert!("01a0".parse::<ClassId>().is_err());
        assert!(ClassId::new(0b10000, 4).is_err());
    }

    #[test]
    fn equivalence_examples() {
        let g = p(3);
        assert!(!switching_equivalent(&g, &sig(&g, &[0]), &sig(&g, &[6])).unwrap());
        let x = sig(&g, &[0, 4]);
        let s = SwitchSet::from_vertices(&g, [1, 3]).unwrap();
        assert!(switching_equivalent(&g, &x, &switch(&g, &x, &s).unwrap()).unwrap());
        assert!(matches!(
            switching_equivalent(&g, &x, &Signature::empty(&p(5))),
            Err(Error::WidthMismatch { .. })
        ));
    }

    #[test]
    fn p31_exhaustive_equivalence_agrees_with_cycle_oracle() {
        let g = p(3);
        let cycles = enumerate_cycles(&g).unwrap();
        let t = spanning_tree(&g).unwrap();
        let all: Vec<Signature> = (0..512u64).map(|b| Signature::from_raw(&g, b)).collect();
        let ids: Vec<ClassId> = all.iter().map(|s| class_id(&g, s, &t).unwrap()).collect();
        let neg: Vec<Vec<usize>> = all.iter().map(|s| unbalanced_cycle_set(s, &cycles)).collect();
        for i in 0..all.len() {
            for j in 0..all.len() {
                assert_eq!(ids[i] == ids[j], neg[i] == neg[j]);
            }
        }
        let distinct: std::collections::HashSet<_> = ids.iter().collect();
        assert_eq!(distinct.len(), 16);
    }

    #[test]
    fn minimal_k3() {
        let k3 = Graph::complete(3).unwrap();
        let m = minimal_signature(&k3, &sig(&k3, &[0, 1, 2])).unwrap();
        assert_eq!(m.size, 1);
        let w: Vec<EdgeSet> = m.witnesses.iter().map(Signature::neg_edges).collect();
        assert_eq!(w, vec![EdgeSet(1), EdgeSet(2), EdgeSet(4)]);
        for (w, s) in m.witnesses.iter().zip(&m.witness_switches) {
            assert_eq!(switch(&k3, &sig(&k3, &[0, 1, 2]), s).unwrap(), *w);
        }
    }

    #[test]
    fn minimal_examples() {
        let g = p(3);
        assert_eq!(minimal_signature(&g, &sig(&g, &[6, 7, 8])).unwrap().size, 0);
        let g = p(7);
        // u0u1, v0v1, u3u4
        let m = minimal_signature(&g, &sig(&g, &[0, 7, 3])).unwrap();
        assert!(m.size <= 1);
    }

    #[test]
    fn minimal_size_bound() {
        let g = p(7);
        assert!(matches!(
            minimal_signature_bounded(&g, &Signature::empty(&g), 10),
            Err(Error::SizeBound { .. })
        ));
    }

    /// Plain subset scan in descending switch-set order, independent of the
    /// Gray-code walk.
    fn rescan_min(g: &Graph, x: &Signature) -> usize {
        let v = g.vertex_count();
        (0..1u64 << (v - 1))
            .rev()
            .map(|s| (x.neg_edges().0 ^ switch_mask(g, s << 1)).count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn matching_detection() {
        let g = p(5);
        assert!(is_matching(&g, &Signature::empty(&g)));
        assert!(!is_matching(&g, &sig(&g, &[0, 1])));
        assert!(is_matching(&g, &sig(&g, &[0, 2, 10 + 4])));
    }

    fn arb_sig(n: usize) -> impl Strategy<Value = u64> {
        any::<u64>().prop_map(move |b| b & mask(3 * n))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn switch_is_involution(bits in arb_sig(5), s in 0u64..1 << 10) {
            let g = p(5);
            let x = Signature::from_raw(&g, bits);
            let s = SwitchSet::from_vertices(&g, VertexSet(s).iter()).unwrap();
            let y = switch(&g, &x, &s).unwrap();
            prop_assert_eq!(switch(&g, &y, &s).unwrap(), x);
        }

        #[test]
        fn class_id_is_switch_invariant(bits in arb_sig(7), s in 0u64..1 << 14) {
            let g = p(7);
            let t = spanning_tree(&g).unwrap();
            let x = Signature::from_raw(&g, bits);
            let s = SwitchSet::from_vertices(&g, VertexSet(s).iter()).unwrap();
            let y = switch(&g, &x, &s).unwrap();
            prop_assert_eq!(class_id(&g, &x, &t).unwrap(), class_id(&g, &y, &t).unwrap());
        }

        #[test]
        fn minimal_is_minimal(bits in arb_sig(5)) {
            let g = p(5);
            let x = Signature::from_raw(&g, bits);
            let m = minimal_signature(&g, &x).unwrap();
            prop_assert_eq!(m.size, rescan_min(&g, &x));
            let limit = (g.vertex_count() - 1) / 2;
            for w in &m.witnesses {
                prop_assert_eq!(w.len(), m.size);
                prop_assert!(is_matching(&g, w));
                prop_assert!(max_negative_degree(&g, w) <= limit);
                prop_assert!(switching_equivalent(&g, w, &x).unwrap());
            }
            prop_assert!(m.witnesses.windows(2).all(|p| p[0] < p[1]));
        }
    }
}

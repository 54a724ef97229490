//! Simple undirected graphs with stable ids, and the generalized Petersen
//! family P(n,k).
//!
//! For P(n,k) the id layout is fixed: `u_i` is vertex `i`, `v_i` is vertex
//! `n + i`; the outer edge `u_i u_{i+1}` is edge `i`, the inner edge
//! `v_i v_{i+k}` is edge `n + i` and the spoke `u_i v_i` is edge `2n + i`.
//! Class ids and atlas files depend on this ordering.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::{EdgeSet, VertexSet, MAX_WIDTH};
use crate::error::{Error, Result};

/// Role of an edge in P(n,k).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeRole {
    Outer(usize),
    Inner(usize),
    Spoke(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphKind {
    Generic,
    Petersen { n: usize, k: usize },
}

#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incident: Vec<EdgeSet>,
    kind: GraphKind,
    fingerprint: u64,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count == other.vertex_count && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a simple graph from an edge list. Edge ids follow list order.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::build(vertex_count, edges, GraphKind::Generic)
    }

    fn build(vertex_count: usize, edges: &[(usize, usize)], kind: GraphKind) -> Result<Self> {
        if vertex_count > MAX_WIDTH {
            return Err(Error::SizeBound {
                what: "vertex count",
                limit: MAX_WIDTH,
                actual: vertex_count,
            });
        }
        if edges.len() > MAX_WIDTH {
            return Err(Error::SizeBound {
                what: "edge count",
                limit: MAX_WIDTH,
                actual: edges.len(),
            });
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut incident = vec![EdgeSet::EMPTY; vertex_count];
        let mut normalized = Vec::with_capacity(edges.len());
        for (id, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidParameters(format!(
                    "edge {id} ({a},{b}) references a vertex outside 0..{vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::InvalidParameters(format!("edge {id} is a loop at {a}")));
            }
            if adjacency[a].contains(&b) {
                return Err(Error::InvalidParameters(format!(
                    "edge {id} duplicates an earlier edge ({a},{b})"
                )));
            }
            adjacency[a].push(b);
            adjacency[b].push(a);
            incident[a].insert(id);
            incident[b].insert(id);
            normalized.push((a.min(b), a.max(b)));
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let fingerprint = fingerprint(vertex_count, &normalized);
        Ok(Graph {
            vertex_count,
            edges: normalized,
            adjacency,
            incident,
            kind,
            fingerprint,
        })
    }

    /// Complete graph on `n` vertices, edges in lexicographic order.
    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        Self::from_edges(n, &edges)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|b| (b - 1, b)).collect();
        Self::from_edges(n, &edges)
    }

    /// Cycle `0 - 1 - ... - (n-1) - 0`.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|a| (a, (a + 1) % n)).collect();
        Self::from_edges(n, &edges)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of an edge, smaller id first.
    #[inline]
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edges incident to `v`.
    #[inline]
    pub fn incident(&self, v: usize) -> EdgeSet {
        self.incident[v]
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    /// `(n, k)` when this graph was built by [`build_petersen`].
    pub fn petersen_params(&self) -> Option<(usize, usize)> {
        match self.kind {
            GraphKind::Petersen { n, k } => Some((n, k)),
            GraphKind::Generic => None,
        }
    }

    /// Hash of the vertex count and edge list; equal graphs share it.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet(mask(self.edges.len()))
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet(mask(self.vertex_count))
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.vertex_count || b >= self.vertex_count {
            return None;
        }
        let shared = self.incident[a].intersection(self.incident[b]);
        shared.iter().next()
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.edge_between(a, b).is_some()
    }

    pub fn is_regular(&self, degree: usize) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == degree)
    }

    pub fn edge_role(&self, e: usize) -> Option<EdgeRole> {
        let (n, _) = self.petersen_params()?;
        match e / n {
            0 => Some(EdgeRole::Outer(e)),
            1 => Some(EdgeRole::Inner(e - n)),
            2 => Some(EdgeRole::Spoke(e - 2 * n)),
            _ => None,
        }
    }

    /// `u3` / `v0` for Petersen graphs, the decimal id otherwise.
    pub fn vertex_name(&self, v: usize) -> String {
        match self.kind {
            GraphKind::Petersen { n, .. } if v < n => format!("u{v}"),
            GraphKind::Petersen { n, .. } => format!("v{}", v - n),
            GraphKind::Generic => v.to_string(),
        }
    }

    /// Endpoint names joined by `-`, lower vertex id first (`u0-u1`, `u2-v2`).
    pub fn edge_name(&self, e: usize) -> String {
        let (a, b) = self.edges[e];
        format!("{}-{}", self.vertex_name(a), self.vertex_name(b))
    }

    /// Inverse of [`vertex_name`](Self::vertex_name).
    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        let id = match self.kind {
            GraphKind::Petersen { n, .. } => {
                let (side, index) = name.split_at(name.char_indices().nth(1)?.0);
                if !index.bytes().all(|c| c.is_ascii_digit()) {
                    return None;
                }
                let i: usize = index.parse().ok()?;
                if i >= n {
                    return None;
                }
                match side {
                    "u" => i,
                    "v" => n + i,
                    _ => return None,
                }
            }
            GraphKind::Generic => {
                if !name.bytes().all(|c| c.is_ascii_digit()) {
                    return None;
                }
                name.parse().ok()?
            }
        };
        (id < self.vertex_count).then_some(id)
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap_or(0);
            for &y in &self.adjacency[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// All-pairs shortest path lengths. Fails on a disconnected graph.
    pub fn distance_matrix(&self) -> Result<Vec<Vec<usize>>> {
        (0..self.vertex_count)
            .map(|s| {
                self.bfs_distances(s)
                    .into_iter()
                    .map(|d| d.ok_or(Error::Disconnected))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GraphKind::Petersen { n, k } => write!(f, "P({n},{k})"),
            GraphKind::Generic => write!(
                f,
                "graph({} vertices, {} edges)",
                self.vertex_count,
                self.edges.len()
            ),
        }
    }
}

#[inline]
pub(crate) fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

fn fingerprint(vertex_count: usize, edges: &[(usize, usize)]) -> u64 {
    // FNV-1a over the vertex count and the normalized edge list.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |x: usize| {
        for byte in (x as u64).to_le_bytes() {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    feed(vertex_count);
    for &(a, b) in edges {
        feed(a);
        feed(b);
    }
    h
}

/// Generalized Petersen graph P(n,k) with the frozen id layout.
pub fn build_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k < 1 || 2 * k >= n {
        return Err(Error::InvalidParameters(format!(
            "P(n,k) needs n >= 3 and 1 <= k < n/2, got n={n}, k={k}"
        )));
    }
    if 3 * n > MAX_WIDTH {
        return Err(Error::SizeBound {
            what: "edge count of P(n,k)",
            limit: MAX_WIDTH,
            actual: 3 * n,
        });
    }
    let mut edges = Vec::with_capacity(3 * n);
    edges.extend((0..n).map(|i| (i, (i + 1) % n)));
    edges.extend((0..n).map(|i| (n + i, n + (i + k) % n)));
    edges.extend((0..n).map(|i| (i, n + i)));
    Graph::build(2 * n, &edges, GraphKind::Petersen { n, k })
}

/// One plus the length of a shortest path between an endpoint of `e1` and an
/// endpoint of `e2`. Edges sharing a vertex are at distance 1.
pub fn edge_distance(g: &Graph, e1: usize, e2: usize) -> Result<usize> {
    if e1 == e2 {
        return Err(Error::IdenticalEdges(e1));
    }
    for e in [e1, e2] {
        if e >= g.edge_count() {
            return Err(Error::InvalidParameters(format!("edge id {e} out of range")));
        }
    }
    let (a, b) = g.endpoints(e1);
    let (c, d) = g.endpoints(e2);
    let from_a = g.bfs_distances(a);
    let from_b = g.bfs_distances(b);
    [from_a[c], from_a[d], from_b[c], from_b[d]]
        .into_iter()
        .flatten()
        .min()
        .map(|d| d + 1)
        .ok_or(Error::Disconnected)
}

fn edge_distance_with(dist: &[Vec<usize>], g: &Graph, e1: usize, e2: usize) -> usize {
    let (a, b) = g.endpoints(e1);
    let (c, d) = g.endpoints(e2);
    1 + dist[a][c].min(dist[a][d]).min(dist[b][c]).min(dist[b][d])
}

/// Largest edge distance over all pairs of distinct edges.
pub fn max_edge_distance(g: &Graph) -> Result<usize> {
    let dist = g.distance_matrix()?;
    let m = g.edge_count();
    let mut best = 0;
    for e1 in 0..m {
        for e2 in e1 + 1..m {
            best = best.max(edge_distance_with(&dist, g, e1, e2));
        }
    }
    Ok(best)
}

/// Breadth-first spanning tree rooted at vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    tree_edges: EdgeSet,
    parent: Vec<Option<usize>>,
    bfs_order: Vec<usize>,
    cotree_order: Vec<usize>,
    graph_fingerprint: u64,
}

impl SpanningTree {
    pub fn tree_edges(&self) -> EdgeSet {
        self.tree_edges
    }

    /// Parent edge of each vertex; `None` for the root.
    pub fn parent(&self) -> &[Option<usize>] {
        &self.parent
    }

    /// Vertices in the order the search reached them (root first).
    pub fn bfs_order(&self) -> &[usize] {
        &self.bfs_order
    }

    /// Non-tree edge ids, ascending.
    pub fn cotree_order(&self) -> &[usize] {
        &self.cotree_order
    }

    pub fn cotree_len(&self) -> usize {
        self.cotree_order.len()
    }

    pub fn graph_fingerprint(&self) -> u64 {
        self.graph_fingerprint
    }
}

/// BFS tree from vertex 0, neighbors expanded in ascending id order.
pub fn spanning_tree(g: &Graph) -> Result<SpanningTree> {
    let v = g.vertex_count();
    if v == 0 {
        return Err(Error::InvalidParameters("empty graph".into()));
    }
    let mut parent = vec![None; v];
    let mut seen = vec![false; v];
    let mut bfs_order = Vec::with_capacity(v);
    let mut tree_edges = EdgeSet::EMPTY;
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(x) = queue.pop_front() {
        bfs_order.push(x);
        for &y in g.neighbors(x) {
            if !seen[y] {
                seen[y] = true;
                let e = g.edge_between(x, y).expect("neighbor implies edge");
                parent[y] = Some(e);
                tree_edges.insert(e);
                queue.push_back(y);
            }
        }
    }
    if bfs_order.len() != v {
        return Err(Error::Disconnected);
    }
    let cotree_order = (0..g.edge_count())
        .filter(|&e| !tree_edges.contains(e))
        .collect();
    Ok(SpanningTree {
        tree_edges,
        parent,
        bfs_order,
        cotree_order,
        graph_fingerprint: g.fingerprint(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_layout() {
        let g = build_petersen(5, 1).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        assert_eq!(g.endpoints(0), (0, 1));
        assert_eq!(g.endpoints(4), (0, 4));
        assert_eq!(g.endpoints(5), (5, 6));
        assert_eq!(g.endpoints(12), (2, 7));
        assert_eq!(g.edge_name(4), "u0-u4");
        assert_eq!(g.edge_name(12), "u2-v2");
        assert_eq!(g.edge_role(7), Some(EdgeRole::Inner(2)));
        assert_eq!(g.edge_role(14), Some(EdgeRole::Spoke(4)));
        assert!(g.is_regular(3));
        assert!(g.is_connected());
    }

    #[test]
    fn petersen_sizes() {
        let g = build_petersen(3, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        assert!(g.is_regular(3));
        let g = build_petersen(7, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 21));
        let g = build_petersen(5, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (10, 15));
        assert!(g.is_regular(3));
    }

    #[test]
    fn petersen_rejects_bad_parameters() {
        for (n, k) in [(2, 1), (4, 2), (5, 0), (5, 3), (22, 1)] {
            assert!(build_petersen(n, k).is_err(), "P({n},{k})");
        }
    }

    #[test]
    fn generic_rejects_loops_and_duplicates() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn names_round_trip() {
        let g = build_petersen(7, 1).unwrap();
        for v in 0..g.vertex_count() {
            assert_eq!(g.vertex_by_name(&g.vertex_name(v)), Some(v));
        }
        assert_eq!(g.vertex_by_name("u7"), None);
        assert_eq!(g.vertex_by_name("w1"), None);
        assert_eq!(g.vertex_by_name("u+1"), None);
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(k3.vertex_by_name("2"), Some(2));
        assert_eq!(k3.vertex_by_name("3"), None);
    }

    #[test]
    fn edge_distance_examples() {
        let g = build_petersen(5, 1).unwrap();
        assert_eq!(edge_distance(&g, 0, 2).unwrap(), 2);
        assert_eq!(edge_distance(&g, 0, 1).unwrap(), 1);
        assert!(matches!(edge_distance(&g, 3, 3), Err(Error::IdenticalEdges(3))));
        let g = build_petersen(7, 1).unwrap();
        // u0u1 and the spoke u4v4
        assert_eq!(edge_distance(&g, 0, 14 + 4).unwrap(), 4);
    }

    #[test]
    fn max_edge_distance_examples() {
        assert_eq!(max_edge_distance(&build_petersen(5, 1).unwrap()).unwrap(), 3);
        assert_eq!(max_edge_distance(&build_petersen(7, 1).unwrap()).unwrap(), 4);
        assert_eq!(max_edge_distance(&build_petersen(11, 1).unwrap()).unwrap(), 6);
    }

    #[test]
    fn edge_distance_symmetric_and_positive() {
        for n in 3..=13 {
            let g = build_petersen(n, 1).unwrap();
            let dist = g.distance_matrix().unwrap();
            for a in 0..g.edge_count() {
                for b in 0..g.edge_count() {
                    if a == b {
                        continue;
                    }
                    let d = edge_distance(&g, a, b).unwrap();
                    assert!(d >= 1);
                    assert_eq!(d, edge_distance(&g, b, a).unwrap());
                    assert_eq!(d, edge_distance_with(&dist, &g, a, b));
                }
            }
        }
    }

    #[test]
    fn spanning_tree_sizes() {
        let t = spanning_tree(&build_petersen(3, 1).unwrap()).unwrap();
        assert_eq!((t.tree_edges().len(), t.cotree_len()), (5, 4));
        let t = spanning_tree(&build_petersen(7, 1).unwrap()).unwrap();
        assert_eq!((t.tree_edges().len(), t.cotree_len()), (13, 8));
        let t = spanning_tree(&Graph::path(3).unwrap()).unwrap();
        assert_eq!((t.tree_edges().len(), t.cotree_len()), (2, 0));
        assert!(t.cotree_order().windows(2).all(|w| w[0] < w[1]));
        assert_eq!(t.parent()[0], None);
    }

    #[test]
    fn spanning_tree_rejects_disconnected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(spanning_tree(&g), Err(Error::Disconnected)));
    }

    #[test]
    fn p31_tree_is_bfs_from_u0() {
        let g = build_petersen(3, 1).unwrap();
        let t = spanning_tree(&g).unwrap();
        // u0 reaches u1 (e0), u2 (e2), v0 (e6); then u1 -> v1 (e7), u2 -> v2 (e8)
        assert_eq!(t.tree_edges(), [0, 2, 6, 7, 8].into_iter().collect());
        assert_eq!(t.cotree_order(), &[1, 3, 4, 5]);
    }
}

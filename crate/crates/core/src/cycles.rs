//! Simple-cycle enumeration by backtracking.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::bitset::{EdgeSet, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default bound on the number of cycles [`enumerate_cycles`] will return.
pub const DEFAULT_CYCLE_CAP: usize = 65_536;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    edge_set: EdgeSet,
    vertex_seq: Vec<usize>,
    graph_fingerprint: u64,
}

impl Cycle {
    pub fn edge_set(&self) -> EdgeSet {
        self.edge_set
    }

    /// Vertices in traversal order, starting from the smallest id.
    pub fn vertex_seq(&self) -> &[usize] {
        &self.vertex_seq
    }

    pub fn len(&self) -> usize {
        self.vertex_seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_seq.is_empty()
    }

    pub fn graph_fingerprint(&self) -> u64 {
        self.graph_fingerprint
    }

    /// Checks the structural invariants against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(msg));
        if self.graph_fingerprint != g.fingerprint() {
            return Err(Error::ForeignCycle);
        }
        let len = self.vertex_seq.len();
        if len < 3 {
            return fail(format!("cycle of length {len}"));
        }
        let distinct: VertexSet = self.vertex_seq.iter().copied().collect();
        if distinct.len() != len {
            return fail("repeated vertex in cycle".into());
        }
        let mut edges = EdgeSet::EMPTY;
        for i in 0..len {
            let a = self.vertex_seq[i];
            let b = self.vertex_seq[(i + 1) % len];
            match g.edge_between(a, b) {
                Some(e) => edges.insert(e),
                None => return fail(format!("{a} and {b} are not adjacent")),
            }
        }
        if edges != self.edge_set || edges.len() != len {
            return fail("edge set does not match vertex sequence".into());
        }
        Ok(())
    }
}

impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.edge_set.lex_cmp(other.edge_set))
            .then_with(|| self.vertex_seq.cmp(&other.vertex_seq))
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Every simple cycle of `g` once, sorted by length then edge set.
pub fn enumerate_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    enumerate_cycles_capped(g, DEFAULT_CYCLE_CAP)
}

/// Like [`enumerate_cycles`], failing once more than `cap` cycles are found.
///
/// Each cycle is rooted at its smallest vertex `s` and grown through vertices
/// larger than `s`; it is kept only in the orientation whose second vertex is
/// smaller than its last.
pub fn enumerate_cycles_capped(g: &Graph, cap: usize) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(g.vertex_count());
    for start in 0..g.vertex_count() {
        path.clear();
        path.push(start);
        let on_path = VertexSet(1 << start);
        extend(g, start, &mut path, on_path, EdgeSet::EMPTY, cap, &mut out)?;
    }
    out.sort();
    Ok(out)
}

fn extend(
    g: &Graph,
    start: usize,
    path: &mut Vec<usize>,
    on_path: VertexSet,
    edges: EdgeSet,
    cap: usize,
    out: &mut Vec<Cycle>,
) -> Result<()> {
    let last = *path.last().expect("path starts non-empty");
    for &next in g.neighbors(last) {
        if next == start {
            if path.len() >= 3 && path[1] < last {
                let closing = g.edge_between(last, start).expect("adjacent");
                if out.len() == cap {
                    return Err(Error::CycleCapExceeded { cap });
                }
                out.push(Cycle {
                    edge_set: edges.union(EdgeSet(1 << closing)),
                    vertex_seq: path.clone(),
                    graph_fingerprint: g.fingerprint(),
                });
            }
            continue;
        }
        if next < start || on_path.contains(next) {
            continue;
        }
        let e = g.edge_between(last, next).expect("adjacent");
        path.push(next);
        extend(
            g,
            start,
            path,
            on_path.union(VertexSet(1 << next)),
            edges.union(EdgeSet(1 << e)),
            cap,
            out,
        )?;
        path.pop();
    }
    Ok(())
}

/// Number of cycles of each length.
pub fn cycle_census(g: &Graph) -> Result<BTreeMap<usize, usize>> {
    Ok(census_of(&enumerate_cycles(g)?))
}

pub fn census_of(cycles: &[Cycle]) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for c in cycles {
        *census.entry(c.len()).or_insert(0) += 1;
    }
    census
}

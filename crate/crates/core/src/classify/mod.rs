//! Switching-isomorphism classification.
//!
//! Switching classes are enumerated by their [`ClassId`]s, the automorphism
//! group acts on them through [`act_on_class`](crate::symmetry::act_on_class),
//! and each orbit of that action is one signed graph up to switching
//! isomorphism.

mod fixtures;
mod matchings;
mod verify;

pub use fixtures::{
    compare_profiles, forbidden_matchings, replay_resignings, resigning_bullets, verify_forbidden,
    BulletOutcome, BulletResult, ForbiddenCheck, PrintedTable, ProfileDiff, ResigningBullet,
    TABLE_1, TABLE_2, TABLE_3,
};
pub use matchings::{
    enumerate_matchings, forbidden_images, matching_aut_orbits, matching_class_count,
    max_minimal_size, MatchingCensus,
};
pub use verify::{verify_paper, ClaimResult, ClaimStatus, VerifyScope};

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::cycles::{enumerate_cycles_capped, Cycle, DEFAULT_CYCLE_CAP};
use crate::error::{Error, Result};
use crate::graph::{build_petersen, spanning_tree, Graph, SpanningTree};
use crate::signed::{
    minimal_search, raw_neg_profile, ClassId, NegCycleProfile, Normalizer, Signature,
};
use crate::symmetry::{aut_group, AutGroup};

/// Largest co-tree size [`enumerate_classes`] accepts.
pub const MAX_CLASS_BITS: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassRecord {
    pub class_id: ClassId,
    pub min_size: usize,
    pub min_witnesses: Vec<Signature>,
    pub profile: NegCycleProfile,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub orbit_id: usize,
    /// Ascending.
    pub class_ids: Vec<ClassId>,
    /// Smallest minimal signature over every class of the orbit.
    pub canonical_rep: Signature,
    pub min_size: usize,
    pub profile: NegCycleProfile,
}

impl OrbitRecord {
    pub fn size(&self) -> usize {
        self.class_ids.len()
    }
}

/// An orbit before minimal sizes and profiles are attached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassOrbit {
    pub orbit_id: usize,
    pub class_ids: Vec<ClassId>,
}

/// All switching classes of `g`, ascending.
pub fn enumerate_classes(g: &Graph) -> Result<Vec<ClassId>> {
    let t = spanning_tree(g)?;
    let len = t.cotree_len();
    check_class_bits(len)?;
    Ok((0..1u64 << len).map(|b| ClassId::new(b, len).expect("in range")).collect())
}

fn check_class_bits(len: usize) -> Result<()> {
    if len > MAX_CLASS_BITS {
        return Err(Error::SizeBound {
            what: "co-tree size for class enumeration",
            limit: MAX_CLASS_BITS,
            actual: len,
        });
    }
    Ok(())
}

/// `images[p][c]` is the class that group element `p` sends class `c` to.
#[derive(Debug, Clone)]
pub struct ActionTable {
    images: Vec<Vec<u32>>,
    class_len: usize,
}

impl ActionTable {
    pub fn new(g: &Graph, grp: &AutGroup, normalizer: &Normalizer) -> Result<Self> {
        if grp.elements().first().map(|p| p.images().len()) != Some(g.vertex_count()) {
            return Err(Error::GraphMismatch);
        }
        let class_len = normalizer.class_len();
        check_class_bits(class_len)?;
        let images = grp
            .elements()
            .par_iter()
            .map(|p| {
                (0..normalizer.class_count())
                    .map(|c| {
                        let rep = normalizer.representative_raw(c);
                        normalizer.normalize_raw(p.map_edges_raw(rep)).0 as u32
                    })
                    .collect()
            })
            .collect();
        Ok(ActionTable { images, class_len })
    }

    pub fn class_count(&self) -> usize {
        1 << self.class_len
    }

    pub fn group_order(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, element: usize, class: u64) -> u64 {
        self.images[element][class as usize] as u64
    }

    /// Orbit count from the average number of fixed classes.
    pub fn burnside_count(&self) -> Result<usize> {
        let fixed: usize = self
            .images
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, &x)| c as u32 == x).count())
            .sum();
        if fixed % self.images.len() != 0 {
            return Err(Error::Internal(format!(
                "fixed-point total {fixed} not divisible by group order {}",
                self.images.len()
            )));
        }
        Ok(fixed / self.images.len())
    }

    /// Worklist closure over every group element, orbits ordered by their
    /// smallest class.
    pub fn orbits(&self) -> Vec<Vec<u64>> {
        let count = self.class_count();
        let mut assigned = vec![false; count];
        let mut orbits = Vec::new();
        for start in 0..count {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut members = vec![start as u64];
            let mut queue = VecDeque::from([start as u64]);
            while let Some(c) = queue.pop_front() {
                for row in &self.images {
                    let d = row[c as usize] as usize;
                    if !assigned[d] {
                        assigned[d] = true;
                        members.push(d as u64);
                        queue.push_back(d as u64);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        orbits
    }
}

/// Orbits of the class action, cross-checked against the Burnside count.
pub fn orbit_partition(g: &Graph, grp: &AutGroup) -> Result<Vec<ClassOrbit>> {
    let t = spanning_tree(g)?;
    let normalizer = Normalizer::new(g, &t)?;
    let table = ActionTable::new(g, grp, &normalizer)?;
    partition_from_table(&table)
}

fn partition_from_table(table: &ActionTable) -> Result<Vec<ClassOrbit>> {
    let orbits = table.orbits();
    let burnside = table.burnside_count()?;
    if burnside != orbits.len() {
        return Err(Error::Internal(format!(
            "orbit closure found {} orbits, Burnside gives {burnside}",
            orbits.len()
        )));
    }
    Ok(orbits
        .into_iter()
        .enumerate()
        .map(|(orbit_id, members)| ClassOrbit {
            orbit_id,
            class_ids: members
                .into_iter()
                .map(|b| ClassId::new(b, table.class_len).expect("in range"))
                .collect(),
        })
        .collect())
}

/// Everything computed for one P(n,1).
#[derive(Debug, Clone)]
pub struct Classification {
    pub graph: Graph,
    pub group: AutGroup,
    pub tree: SpanningTree,
    pub normalizer: Normalizer,
    pub cycles: Vec<Cycle>,
    pub action: ActionTable,
    pub orbits: Vec<OrbitRecord>,
}

impl Classification {
    pub fn class_count(&self) -> usize {
        self.action.class_count()
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.len()
    }

    /// Cycle lengths present in the graph, ascending.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles.iter().map(Cycle::len).collect();
        lengths.dedup();
        lengths
    }

    pub fn representative(&self, cid: &ClassId) -> Signature {
        Signature::from_raw(&self.graph, self.normalizer.representative_raw(cid.bits()))
    }

    /// Orbit containing `cid`.
    pub fn orbit_of(&self, cid: &ClassId) -> Option<&OrbitRecord> {
        self.orbits
            .iter()
            .find(|o| o.class_ids.binary_search(cid).is_ok())
    }

    /// Orbit containing the class of `sig`.
    pub fn orbit_of_signature(&self, sig: &Signature) -> Result<&OrbitRecord> {
        let (cid, _) = self.normalizer.normalize(sig)?;
        self.orbit_of(&cid)
            .ok_or_else(|| Error::Internal(format!("class {cid} missing from the partition")))
    }

    /// Full record for one class, including every minimal witness.
    pub fn class_record(&self, cid: &ClassId) -> Result<ClassRecord> {
        if cid.len() != self.normalizer.class_len() {
            return Err(Error::WidthMismatch {
                expected: self.normalizer.class_len(),
                found: cid.len(),
            });
        }
        let rep = self.normalizer.representative_raw(cid.bits());
        let (min_size, hits) = minimal_search(&incidence(&self.graph), rep);
        Ok(ClassRecord {
            class_id: *cid,
            min_size,
            min_witnesses: hits
                .into_iter()
                .map(|(neg, _)| Signature::from_raw(&self.graph, neg))
                .collect(),
            profile: raw_neg_profile(rep, &self.cycles),
        })
    }

    /// True when every class has the same profile as its orbit.
    pub fn profiles_constant_on_orbits(&self) -> bool {
        self.orbits.par_iter().all(|o| {
            o.class_ids.iter().all(|cid| {
                raw_neg_profile(self.normalizer.representative_raw(cid.bits()), &self.cycles)
                    == o.profile
            })
        })
    }
}

pub(crate) fn incidence(g: &Graph) -> Vec<u64> {
    (0..g.vertex_count()).map(|v| g.incident(v).0).collect()
}

/// Attaches minimal size, canonical representative and profile to each orbit.
///
/// The minimal search runs on the orbit's smallest class and is repeated on
/// its largest class as a consistency check.
pub fn build_class_records(
    g: &Graph,
    grp: &AutGroup,
    normalizer: &Normalizer,
    cycles: &[Cycle],
    orbits: &[ClassOrbit],
) -> Result<Vec<OrbitRecord>> {
    let incident = incidence(g);
    orbits
        .par_iter()
        .map(|orbit| {
            let first = orbit.class_ids.first().expect("orbits are non-empty");
            let rep = normalizer.representative_raw(first.bits());
            let (min_size, hits) = minimal_search(&incident, rep);
            if let Some(last) = orbit.class_ids.last().filter(|c| *c != first) {
                let other = normalizer.representative_raw(last.bits());
                let (check, _) = minimal_search(&incident, other);
                if check != min_size {
                    return Err(Error::Internal(format!(
                        "orbit {}: minimal size {min_size} for {first} but {check} for {last}",
                        orbit.orbit_id
                    )));
                }
            }
            let canonical = hits
                .iter()
                .flat_map(|&(w, _)| grp.elements().iter().map(move |p| p.map_edges_raw(w)))
                .min_by(|a, b| crate::bitset::lex_cmp(*a, *b))
                .expect("minimal search always yields a witness");
            Ok(OrbitRecord {
                orbit_id: orbit.orbit_id,
                class_ids: orbit.class_ids.clone(),
                canonical_rep: Signature::from_raw(g, canonical),
                min_size,
                profile: raw_neg_profile(rep, cycles),
            })
        })
        .collect()
}

/// Builds and classifies P(n,1) for odd `n` in 3..=13.
pub fn classify(n: usize) -> Result<Classification> {
    classify_with_cap(n, DEFAULT_CYCLE_CAP)
}

pub fn classify_with_cap(n: usize, cycle_cap: usize) -> Result<Classification> {
    let graph = build_petersen(n, 1)?;
    let group = aut_group(n)?;
    let tree = spanning_tree(&graph)?;
    let normalizer = Normalizer::new(&graph, &tree)?;
    let cycles = enumerate_cycles_capped(&graph, cycle_cap)?;
    let action = ActionTable::new(&graph, &group, &normalizer)?;
    let partition = partition_from_table(&action)?;
    let orbits = build_class_records(&graph, &group, &normalizer, &cycles, &partition)?;
    Ok(Classification {
        graph,
        group,
        tree,
        normalizer,
        cycles,
        action,
        orbits,
    })
}

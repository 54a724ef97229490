//! Reference counts, tables and worked re-signings, stored for verification.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{build_petersen, Graph};
use crate::io::parse_signature;
use crate::signed::{switch, switching_equivalent, Signature, SwitchSet};
use crate::symmetry::{apply_to_signature, aut_group};

/// Forbidden size-3 matchings of P(7,1) with the switch sets that shrink them.
const FORBIDDEN: [(&str, &str); 7] = [
    ("u0-u1,v0-v1,u2-v2", "u1 v1 v2"),
    ("u0-u1,v1-v2,u2-u3", "u1 v2 u2"),
    ("u0-u1,v1-v2,v4-v5", "u1 v2 u2 u3 u4 v3 v4"),
    ("u0-u1,v0-v1,u3-u4", "u1 v1 u2 v2 v3 u3"),
    ("u0-u1,v0-v6,u3-u4", "v0 u1 v1 u2 v2 u3 v3"),
    ("u0-v0,u1-v1,v2-v3", "v1 v2 v0"),
    ("u0-v0,u1-v1,u2-v2", "u0 u1 u2"),
];

const SIGMA_P3: &[(u32, &str)] = &[
    (0, ""),
    (1, "u0-u1"),
    (2, "u0-v0"),
    (3, "u0-u1,v0-v1"),
    (4, "u0-u1,v1-v2"),
    (5, "u0-v0,u1-u2"),
    (6, "u0-v0,u1-v1"),
    (7, "u0-v0,u1-u2,v1-v2"),
    (8, "u0-v0,u1-v1,u2-v2"),
];

const SIGMA_P5: &[(u32, &str)] = &[
    (0, ""),
    (1, "u0-u1"),
    (2, "u0-v0"),
    (3, "u0-u1,v0-v1"),
    (4, "u0-u1,v1-v2"),
    (5, "u0-u1,u2-u3"),
    (6, "u0-u1,u2-v2"),
    (7, "u0-v0,u1-v1"),
    (8, "u0-u1,v2-v3"),
    (9, "u0-u1,u3-v3"),
    (10, "u0-v0,u2-v2"),
    (11, "u0-u1,v0-v1,u2-u3"),
    (12, "u0-u1,v1-v2,u2-u3"),
    (13, "u0-u1,v3-v4,u2-u3"),
    (14, "u0-v0,u1-u2,u3-u4"),
    (15, "u0-v0,u1-u2,v1-v2"),
    (16, "u0-v0,u1-u2,v2-v3"),
    (17, "u0-v0,u2-u3,v2-v3"),
    (18, "u0-v0,u1-v1,u2-u3"),
    (19, "u0-v0,u2-v2,u3-u4"),
    (20, "u0-v0,u1-v1,u2-v2"),
    (21, "u0-v0,u1-v1,u3-v3"),
    (22, "u0-u1,u2-u3,v0-v1,v2-v3"),
    (23, "u0-u1,u2-u3,v0-v1,v3-v4"),
    (24, "u0-u1,u2-u3,v1-v2,v3-v4"),
    (25, "u0-v0,u1-u2,u3-u4,v1-v2"),
    (26, "u0-v0,u1-u2,u3-u4,v2-v3"),
    (27, "u0-v0,u1-v1,u2-u3,v2-v3"),
    (28, "u0-v0,u1-v1,u2-u3,v3-v4"),
    (29, "u0-v0,u2-v2,u3-u4,v3-v4"),
    (30, "u0-v0,u1-v1,u2-v2,u3-u4"),
    (31, "u0-v0,u1-v1,u2-v2,u3-v3"),
    (32, "u0-v0,u1-u2,v1-v2,u3-u4,v3-v4"),
    (33, "u0-v0,u1-v1,u2-v2,u3-u4,v3-v4"),
    (34, "u0-v0,u1-v1,u2-v2,u3-v3,u4-v4"),
];

const SIGMA_P7: &[(u32, &str)] = &[
    (7, "u0-u1,u2-u3"),
    (8, "u0-v0,u1-v1"),
    (11, "u0-v0,u2-v2"),
    (16, "u0-u1,u2-u3,u4-u5"),
    (17, "u0-u1,u2-u3,v4-v5"),
    (18, "u0-u1,u3-u4,v5-v6"),
    (19, "u0-v0,u1-u2,u3-u4"),
    (20, "u0-v0,u1-u2,u4-u5"),
    (21, "u0-v0,u1-u2,u5-u6"),
    (22, "u0-v0,u2-u3,u4-u5"),
    (23, "u0-v0,u1-u2,v2-v3"),
    (24, "u0-v0,u1-u2,v3-v4"),
    (25, "u0-v0,u1-u2,v4-v5"),
    (26, "u0-v0,u1-u2,v5-v6"),
    (29, "u0-v0,u2-u3,v5-v6"),
    (30, "u0-v0,u3-u4,v5-v6"),
    (31, "u0-v0,u1-v1,u3-u4"),
    (32, "u0-v0,u2-v2,u3-u4"),
    (33, "u0-v0,u2-v2,u4-u5"),
    (34, "u0-v0,u3-v3,u1-u2"),
    (36, "u0-v0,u1-v1,u3-v3"),
    (37, "u0-v0,u1-v1,u4-v4"),
    (38, "u0-v0,u2-v2,u4-v4"),
    (39, "u0-v0,u1-u2,u3-u4,u5-u6"),
    (40, "u0-v0,u1-u2,u3-u4,v5-v6"),
    (41, "u0-v0,u1-u2,v3-v4,u5-u6"),
    (42, "u0-v0,u2-v2,u3-u4,u5-u6"),
    (43, "u0-v0,u2-v2,u3-u4,v5-v6"),
    (44, "u0-v0,u2-v2,u4-u5,v5-v6"),
    (45, "u0-v0,u3-v3,u1-u2,u4-u5"),
    (46, "u0-v0,u3-v3,u1-u2,v4-v5"),
    (47, "u0-v0,u3-v3,u4-u5,v5-v6"),
];

/// (source label, switch vertices, target label)
const BULLETS_P3: &[(u32, &str, u32)] = &[(6, "u0 u1 u2", 2), (7, "u1 v1 v0", 4), (8, "u0 u1 u2", 0)];

const BULLETS_P5: &[(u32, &str, u32)] = &[
    (7, "u0 u1", 5),
    (11, "u1 u2 v1 v2", 1),
    (12, "u1 u2 v1", 6),
    (13, "u1 v1 u2 v2 v3", 9),
    (14, "u0 u1 u4", 10),
    (15, "u0 u1 v1", 4),
    (17, "u0 u1 u2 v1 v2", 4),
    (18, "u1 u2 u0", 9),
    (20, "u0 u1 u2", 5),
    (21, "u0 u1 u2 u3 u4", 10),
    (22, "u1 v1 u2 v2", 0),
    (23, "u1 u2 v1 v2 v3", 2),
    (24, "u1 u2 v2 v3", 6),
    (25, "u0 u1 u4 v0 v1 v4", 6),
    (26, "u0 u1 u4", 19),
    (27, "u0 u1 u2 v2", 8),
    (28, "u0 u1 u2", 16),
    (29, "u3 v2 v3", 16),
    (30, "u0 u1 u2 u4", 6),
    (31, "u0 u1 u2 u3 u4", 2),
    (32, "v2 u2 u3 v3", 2),
    (33, "u0 u1 u2 u3 v3", 8),
    (34, "u0 u1 u2 u3 u4", 0),
];

const BULLETS_P7: &[(u32, &str, u32)] = &[
    (8, "u0 u1", 7),
    (17, "u1 v1 u2 v2", 16),
    (18, "u0 v0 u6 v6", 17),
    (20, "u1 u0", 19),
    (21, "u1 u0 u6", 11),
    (25, "u0 u1", 24),
    (26, "v1 v0 v6 u1", 23),
    (29, "v6 v0", 24),
    (30, "v6 v0", 25),
    (31, "u0 u1", 16),
    (34, "u2 u3", 32),
    (36, "u0 u1", 19),
    (37, "u0 u1", 22),
    (39, "u6 u0 u1", 33),
    (40, "u0 u1 u4 u5 u6 v4 v5", 33),
    (41, "u0 u1 u6", 33),
    (42, "u0 u1 u2 u3 u6 v4 v5", 38),
    (44, "u0 u5 u6 v5", 46),
    (45, "u0 u1", 42),
    (46, "u2 u3", 43),
    (47, "u4 v5 v4 v3", 44),
];

/// Printed negative-cycle profiles, one row per labelled signature.
#[derive(Debug, Clone, Copy)]
pub struct PrintedTable {
    pub name: &'static str,
    pub n: usize,
    pub lengths: &'static [usize],
    pub rows: &'static [(u32, &'static [usize])],
}

pub const TABLE_1: PrintedTable = PrintedTable {
    name: "Table 1",
    n: 3,
    lengths: &[3, 4],
    rows: &[(0, &[0, 0]), (1, &[1, 1]), (2, &[0, 2]), (3, &[2, 0]), (4, &[2, 2]), (5, &[1, 3])],
};

pub const TABLE_2: PrintedTable = PrintedTable {
    name: "Table 2",
    n: 5,
    lengths: &[4, 5, 6],
    rows: &[
        (0, &[0, 0, 0]),
        (1, &[1, 1, 2]),
        (2, &[2, 0, 2]),
        (3, &[0, 2, 0]),
        (4, &[2, 2, 2]),
        (5, &[2, 0, 4]),
        (6, &[3, 1, 2]),
        (7, &[2, 2, 4]),
        (8, &[3, 1, 4]),
        (9, &[4, 0, 2]),
        (10, &[4, 2, 2]),
        (11, &[5, 1, 0]),
    ],
};

/// Tables 3a and 3b together.
pub const TABLE_3: PrintedTable = PrintedTable {
    name: "Tables 3a/3b",
    n: 7,
    lengths: &[4, 6, 7, 8],
    rows: &[
        (1, &[0, 0, 0, 0]),
        (2, &[1, 2, 1, 3]),
        (3, &[2, 2, 0, 2]),
        (4, &[0, 0, 2, 0]),
        (5, &[2, 2, 2, 2]),
        (6, &[3, 2, 1, 3]),
        (7, &[2, 4, 0, 4]),
        (9, &[2, 4, 2, 4]),
        (10, &[3, 4, 1, 3]),
        (11, &[4, 2, 0, 4]),
        (12, &[2, 4, 0, 6]),
        (13, &[2, 4, 2, 6]),
        (14, &[3, 4, 1, 5]),
        (15, &[4, 4, 0, 2]),
        (16, &[3, 6, 1, 5]),
        (19, &[4, 4, 0, 4]),
        (22, &[4, 6, 0, 2]),
        (23, &[4, 2, 2, 4]),
        (24, &[4, 4, 2, 4]),
        (27, &[4, 4, 2, 2]),
        (28, &[4, 6, 2, 2]),
        (32, &[5, 2, 1, 5]),
        (33, &[5, 4, 1, 3]),
        (35, &[5, 4, 1, 1]),
        (38, &[6, 2, 0, 4]),
        (43, &[6, 2, 2, 4]),
        (47, &[7, 0, 1, 6]),
    ],
};

/// Multiset comparison between computed and printed profile rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileDiff {
    pub matched: usize,
    /// Printed rows with no computed counterpart.
    pub missing: Vec<Vec<usize>>,
    /// Computed rows with no printed counterpart.
    pub extra: Vec<Vec<usize>>,
}

impl ProfileDiff {
    pub fn is_exact(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

impl fmt::Display for ProfileDiff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "matched: {}", self.matched)?;
        for row in &self.missing {
            writeln!(f, "printed only:  {row:?}")?;
        }
        for row in &self.extra {
            writeln!(f, "computed only: {row:?}")?;
        }
        Ok(())
    }
}

pub fn compare_profiles(computed: &[Vec<usize>], printed: &[&[usize]]) -> ProfileDiff {
    let mut pool: BTreeMap<&[usize], usize> = BTreeMap::new();
    for row in computed {
        *pool.entry(row.as_slice()).or_insert(0) += 1;
    }
    let mut matched = 0;
    let mut missing = Vec::new();
    for &row in printed {
        match pool.get_mut(row) {
            Some(k) if *k > 0 => {
                *k -= 1;
                matched += 1;
            }
            _ => missing.push(row.to_vec()),
        }
    }
    let extra = pool
        .into_iter()
        .flat_map(|(row, k)| std::iter::repeat(row.to_vec()).take(k))
        .collect();
    ProfileDiff { matched, missing, extra }
}

fn require_p71(g: &Graph) -> Result<()> {
    if g.petersen_params() != Some((7, 1)) {
        return Err(Error::Unsupported("forbidden matchings are defined for P(7,1) only".into()));
    }
    Ok(())
}

fn switch_set(g: &Graph, names: &str) -> Result<SwitchSet> {
    let names: Vec<&str> = names.split_whitespace().collect();
    SwitchSet::from_names(g, &names)
}

/// The seven forbidden matchings on `g`, which must be P(7,1).
pub fn forbidden_matchings(g: &Graph) -> Result<Vec<Signature>> {
    require_p71(g)?;
    FORBIDDEN.iter().map(|(s, _)| parse_signature(s, g)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenCheck {
    /// 1-based, as in the lemma.
    pub index: usize,
    pub sigma: Signature,
    pub switch_set: SwitchSet,
    pub result: Signature,
    pub equivalent: bool,
}

impl ForbiddenCheck {
    pub fn passed(&self) -> bool {
        self.equivalent && self.result.len() <= 2
    }
}

/// Switches each forbidden matching at its listed vertex set.
pub fn verify_forbidden() -> Result<Vec<ForbiddenCheck>> {
    let g = build_petersen(7, 1)?;
    FORBIDDEN
        .iter()
        .enumerate()
        .map(|(i, (sigma, at))| {
            let sigma = parse_signature(sigma, &g)?;
            let switch_set = switch_set(&g, at)?;
            let result = switch(&g, &sigma, &switch_set)?;
            Ok(ForbiddenCheck {
                index: i + 1,
                sigma,
                switch_set,
                equivalent: switching_equivalent(&g, &sigma, &result)?,
                result,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResigningBullet {
    pub n: usize,
    pub source: u32,
    pub source_edges: &'static str,
    pub switch_at: &'static str,
    pub target: u32,
    pub target_edges: &'static str,
}

impl fmt::Display for ResigningBullet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P({},1) S{} at {{{}}} -> S{}",
            self.n,
            self.source,
            self.switch_at.split_whitespace().collect::<Vec<_>>().join(","),
            self.target
        )
    }
}

fn lookup(table: &[(u32, &'static str)], label: u32) -> &'static str {
    table
        .iter()
        .find(|(l, _)| *l == label)
        .map(|(_, s)| *s)
        .expect("fixture labels are complete")
}

/// Resigning steps from the case analyses for P(3,1), P(5,1) and P(7,1).
pub fn resigning_bullets() -> Vec<ResigningBullet> {
    [(3, SIGMA_P3, BULLETS_P3), (5, SIGMA_P5, BULLETS_P5), (7, SIGMA_P7, BULLETS_P7)]
        .into_iter()
        .flat_map(|(n, sigmas, bullets)| {
            bullets.iter().map(move |&(source, switch_at, target)| ResigningBullet {
                n,
                source,
                source_edges: lookup(sigmas, source),
                switch_at,
                target,
                target_edges: lookup(sigmas, target),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BulletOutcome {
    /// The switched signature is an automorphic image of the target.
    Automorphic,
    /// Same orbit as the target, but only after a further switching.
    SwitchingIsomorphic,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BulletResult {
    pub bullet: ResigningBullet,
    pub resigned: Signature,
    pub outcome: BulletOutcome,
}

/// Replays every bullet and classifies the outcome.
pub fn replay_resignings() -> Result<Vec<BulletResult>> {
    let mut out = Vec::new();
    for n in [3, 5, 7] {
        let g = build_petersen(n, 1)?;
        let grp = aut_group(n)?;
        let tree = crate::graph::spanning_tree(&g)?;
        let normalizer = crate::signed::Normalizer::new(&g, &tree)?;
        let orbit_key = |sig: &Signature| -> Result<u64> {
            let mut best = u64::MAX;
            for p in grp.elements() {
                let img = apply_to_signature(&g, p, sig)?;
                best = best.min(normalizer.normalize(&img)?.0.bits());
            }
            Ok(best)
        };
        for bullet in resigning_bullets().into_iter().filter(|b| b.n == n) {
            let source = parse_signature(bullet.source_edges, &g)?;
            let target = parse_signature(bullet.target_edges, &g)?;
            let resigned = switch(&g, &source, &switch_set(&g, bullet.switch_at)?)?;
            let mut outcome = BulletOutcome::Fail;
            for p in grp.elements() {
                if apply_to_signature(&g, p, &resigned)? == target {
                    outcome = BulletOutcome::Automorphic;
                    break;
                }
            }
            if outcome == BulletOutcome::Fail && orbit_key(&resigned)? == orbit_key(&target)? {
                outcome = BulletOutcome::SwitchingIsomorphic;
            }
            out.push(BulletResult { bullet, resigned, outcome });
        }
    }
    Ok(out)
}

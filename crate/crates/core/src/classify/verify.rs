//! The reproduction suite behind `verify-paper`.

use std::fmt;

use super::{
    classify, compare_profiles, matching_aut_orbits, matching_class_count, max_minimal_size,
    replay_resignings, verify_forbidden, BulletOutcome, Classification, PrintedTable, TABLE_1,
    TABLE_2, TABLE_3,
};
use crate::cycles::cycle_census;
use crate::error::Result;
use crate::graph::{build_petersen, max_edge_distance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// Printed for the record; never affects the exit status.
    Report,
}

impl fmt::Display for ClaimStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Report => "INFO",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: String,
    pub status: ClaimStatus,
    pub detail: String,
}

impl fmt::Display for ClaimResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.status, self.id, self.detail)
    }
}

/// Which graphs to check; `Half(n)` means P(2n+1,1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyScope {
    Half(usize),
    All,
}

impl VerifyScope {
    fn includes(self, half: usize) -> bool {
        match self {
            VerifyScope::Half(h) => h == half,
            VerifyScope::All => true,
        }
    }
}

struct Claims(Vec<ClaimResult>);

impl Claims {
    fn check(&mut self, id: impl Into<String>, ok: bool, detail: impl Into<String>) {
        let status = if ok { ClaimStatus::Pass } else { ClaimStatus::Fail };
        self.0.push(ClaimResult { id: id.into(), status, detail: detail.into() });
    }

    fn report(&mut self, id: impl Into<String>, detail: impl Into<String>) {
        self.0.push(ClaimResult { id: id.into(), status: ClaimStatus::Report, detail: detail.into() });
    }

    fn exact<T: PartialEq + fmt::Debug>(&mut self, id: impl Into<String>, got: T, want: T) {
        let ok = got == want;
        self.check(id, ok, format!("got {got:?}, expected {want:?}"));
    }
}

fn profiles(c: &Classification, lengths: &[usize]) -> Vec<Vec<usize>> {
    c.orbits.iter().map(|o| o.profile.project(lengths)).collect()
}

fn table_rows(t: &PrintedTable) -> Vec<&'static [usize]> {
    t.rows.iter().map(|(_, r)| *r).collect()
}

fn orbit_with(c: &Classification, lengths: &[usize], row: &[usize]) -> Option<usize> {
    c.orbits
        .iter()
        .find(|o| o.profile.project(lengths) == row)
        .map(|o| o.min_size)
}

fn graph_claims(claims: &mut Claims, half: usize) -> Result<()> {
    let n = 2 * half + 1;
    let tag = format!("P({n},1)");
    let c = classify(n)?;
    let want_classes = [16, 64, 256][half - 1];
    let want_orbits = [6, 12, 27][half - 1];
    claims.exact(format!("{tag} switching classes"), c.class_count(), want_classes);
    claims.exact(format!("{tag} orbits"), c.orbit_count(), want_orbits);
    claims.exact(format!("{tag} Burnside count"), c.action.burnside_count()?, c.orbit_count());

    let table = [TABLE_1, TABLE_2, TABLE_3][half - 1];
    let diff = compare_profiles(&profiles(&c, table.lengths), &table_rows(&table));
    if half < 3 {
        claims.check(format!("{tag} {} profiles", table.name), diff.is_exact(), diff.to_string().trim_end().replace('\n', "; "));
    } else {
        let rows_ok = orbit_with(&c, table.lengths, &[0, 0, 0, 0]) == Some(0)
            && orbit_with(&c, table.lengths, &[1, 2, 1, 3]) == Some(1)
            && orbit_with(&c, table.lengths, &[7, 0, 1, 6]).is_some();
        claims.check(
            format!("{tag} {} profiles", table.name),
            diff.matched >= 25 && rows_ok,
            format!("{} of 27 printed rows matched, anchor rows present: {rows_ok}", diff.matched),
        );
        for row in &diff.missing {
            claims.report(format!("{tag} printed only"), format!("{row:?}"));
        }
        for row in &diff.extra {
            claims.report(format!("{tag} computed only"), format!("{row:?}"));
        }
    }

    let mut distinct = profiles(&c, &c.cycle_lengths());
    distinct.sort();
    distinct.dedup();
    claims.exact(format!("{tag} distinct orbit profiles"), distinct.len(), c.orbit_count());

    let lemma: &[usize] = match half {
        1 => &[2, 4, 2],
        2 => &[2, 8, 11, 10, 3],
        _ => &[0, 12],
    };
    for (i, &want) in lemma.iter().enumerate() {
        let size = i + 1;
        if want == 0 {
            continue;
        }
        let census = matching_aut_orbits(&c.graph, &c.group, size, false)?;
        claims.exact(format!("{tag} matchings of size {size} up to automorphism"), census.aut_orbit_count, want);
    }
    if half == 3 {
        for size in [3, 4] {
            let plain = matching_aut_orbits(&c.graph, &c.group, size, false)?;
            let cut = matching_aut_orbits(&c.graph, &c.group, size, true)?;
            claims.report(
                format!("{tag} matchings of size {size}"),
                format!(
                    "{} up to automorphism, {} without forbidden sub-matchings",
                    plain.aut_orbit_count, cut.aut_orbit_count
                ),
            );
        }
        for check in verify_forbidden()? {
            claims.check(
                format!("{tag} forbidden matching {}", check.index),
                check.passed(),
                format!(
                    "{} switched at {{{}}} gives {} ({} edges)",
                    check.sigma.render(&c.graph),
                    check.switch_set.render(&c.graph),
                    check.result.render(&c.graph),
                    check.result.len()
                ),
            );
        }
    }

    claims.exact(format!("{tag} size-2 minimal classes"), matching_class_count(&c, 2), 4 * half - 1);
    claims.exact(format!("{tag} largest minimal signature"), max_minimal_size(&c), half + 1);
    Ok(())
}

/// Runs every claim in scope; the caller decides the exit status.
pub fn verify_paper(scope: VerifyScope) -> Result<Vec<ClaimResult>> {
    let mut claims = Claims(Vec::new());
    for half in 1..=3 {
        if scope.includes(half) {
            graph_claims(&mut claims, half)?;
        }
    }

    let bullets = replay_resignings()?;
    for r in &bullets {
        if scope.includes((r.bullet.n - 1) / 2) {
            let outcome = match r.outcome {
                BulletOutcome::Automorphic => "automorphic to target",
                BulletOutcome::SwitchingIsomorphic => "switching isomorphic to target only",
                BulletOutcome::Fail => "not in the target's orbit",
            };
            claims.report(format!("resigning {}", r.bullet), outcome);
        }
    }
    let replayed = bullets.iter().filter(|r| r.outcome == BulletOutcome::Automorphic).count();
    claims.check(
        "resigning fixtures",
        replayed >= 12,
        format!("{replayed} of {} bullets replay exactly", bullets.len()),
    );

    if scope == VerifyScope::All {
        for half in 1..=6 {
            let g = build_petersen(2 * half + 1, 1)?;
            let census = cycle_census(&g)?;
            let n = 2 * half + 1;
            let ok = census.get(&n) == Some(&2)
                && (4..=4 * half + 2).step_by(2).all(|len| census.get(&len) == Some(&n))
                && census.keys().all(|&len| len % 2 == 1 || (4..=4 * half + 2).contains(&len));
            claims.check(format!("{g} cycle census"), ok, format!("{census:?}"));
            claims.exact(format!("{g} max edge distance"), max_edge_distance(&g)?, half + 1);
        }
        let c = classify(9)?;
        claims.exact("P(9,1) size-2 minimal classes", matching_class_count(&c, 2), 15);
        claims.report(
            "P(9,1) largest minimal signature",
            format!("{} against the bound 5", max_minimal_size(&c)),
        );
    }
    Ok(claims.0)
}

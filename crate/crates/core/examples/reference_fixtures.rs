//! Replay the forbidden-matching reductions and resigning steps, and diff the
//! printed profile tables against the computed ones.

use gpg_switch::classify::{
    classify, compare_profiles, replay_resignings, verify_forbidden, BulletOutcome, TABLE_1, TABLE_2,
    TABLE_3,
};

fn main() -> gpg_switch::Result<()> {
    for check in verify_forbidden()? {
        println!("sigma{}: {} edges -> {} edges", check.index, check.sigma.len(), check.result.len());
    }
    let results = replay_resignings()?;
    for r in results.iter().filter(|r| r.outcome != BulletOutcome::Automorphic) {
        println!("{}: {:?}", r.bullet, r.outcome);
    }
    println!("{} of {} bullets exact", results.iter().filter(|r| r.outcome == BulletOutcome::Automorphic).count(), results.len());

    for table in [TABLE_1, TABLE_2, TABLE_3] {
        let c = classify(table.n)?;
        let computed: Vec<Vec<usize>> = c.orbits.iter().map(|o| o.profile.project(table.lengths)).collect();
        let printed: Vec<&[usize]> = table.rows.iter().map(|(_, r)| *r).collect();
        print!("{} on C{:?}\n{}", table.name, table.lengths, compare_profiles(&computed, &printed));
    }
    Ok(())
}

//! Matchings up to automorphism and up to switching isomorphism.

use gpg_switch::classify::matching_aut_orbits;
use gpg_switch::graph::build_petersen;
use gpg_switch::symmetry::aut_group;

fn main() -> gpg_switch::Result<()> {
    for n in [3, 5, 7] {
        let g = build_petersen(n, 1)?;
        let grp = aut_group(n)?;
        for size in 1..=n.min(4) {
            let m = matching_aut_orbits(&g, &grp, size, false)?;
            println!(
                "P({n},1) size {size}: {:3} automorphism types, {:3} minimal switching types",
                m.aut_orbit_count, m.switching_iso_count
            );
        }
    }
    let g = build_petersen(7, 1)?;
    let grp = aut_group(7)?;
    for size in [3, 4] {
        let m = matching_aut_orbits(&g, &grp, size, true)?;
        println!("P(7,1) size {size} without forbidden sub-matchings: {}", m.aut_orbit_count);
    }
    Ok(())
}

//! The automorphism group of P(n,1) for odd n, checked against brute force.

use gpg_switch::graph::build_petersen;
use gpg_switch::symmetry::{aut_group, brute_force_automorphisms_bounded, delta, gamma, rho};

fn main() -> gpg_switch::Result<()> {
    println!("rho1 on P(5,1): {:?}", rho(5, 1)?.images());
    println!("delta0 on P(5,1): {:?}", delta(5, 0)?.images());
    println!("gamma on P(5,1): {:?}", gamma(5)?.images());
    for n in [3, 5, 7, 9, 11, 13] {
        let grp = aut_group(n)?;
        let g = build_petersen(n, 1)?;
        let brute = if g.vertex_count() <= 18 {
            brute_force_automorphisms_bounded(&g, 18)?.len().to_string()
        } else {
            "-".into()
        };
        println!("P({n},1): order {} (brute force {brute})", grp.order());
    }
    Ok(())
}

//! Switch a signature, read its class id and compare classes.

use gpg_switch::cycles::enumerate_cycles;
use gpg_switch::graph::{build_petersen, spanning_tree};
use gpg_switch::io::parse_signature;
use gpg_switch::signed::{
    class_id, is_balanced, neg_profile, switch, switching_equivalent, unbalanced_cycle_set,
};
use gpg_switch::SwitchSet;

fn main() -> gpg_switch::Result<()> {
    let g = build_petersen(5, 1)?;
    let tree = spanning_tree(&g)?;
    let cycles = enumerate_cycles(&g)?;

    let sig = parse_signature("u0-u1, v1-v2", &g)?;
    let at = SwitchSet::from_names(&g, &["u1", "v1"])?;
    let switched = switch(&g, &sig, &at)?;
    println!("{{{}}} switched at {{{}}} = {{{}}}", sig.render(&g), at.render(&g), switched.render(&g));
    println!("class ids: {} {}", class_id(&g, &sig, &tree)?, class_id(&g, &switched, &tree)?);
    println!("equivalent: {}", switching_equivalent(&g, &sig, &switched)?);
    println!("balanced: {}", is_balanced(&g, &sig)?);
    println!("unbalanced cycles: {}", unbalanced_cycle_set(&sig, &cycles).len());
    println!("profile: {:?}", neg_profile(&sig, &cycles).counts());

    let spokes = parse_signature("u0-v0,u1-v1,u2-v2,u3-v3,u4-v4", &g)?;
    let outer = SwitchSet::from_names(&g, &["u0", "u1", "u2", "u3", "u4"])?;
    println!("all spokes switched at the outer rim: {{{}}}", switch(&g, &spokes, &outer)?.render(&g));
    Ok(())
}

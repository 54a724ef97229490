//! Write an atlas file and read it back.
//!
//! cargo run --release --example atlas -- 3 /tmp/p71.json

use std::path::PathBuf;

use gpg_switch::classify::classify;
use gpg_switch::io::Atlas;

fn main() -> gpg_switch::Result<()> {
    let mut args = std::env::args().skip(1);
    let half: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let path = args.next().map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("atlas.json"));

    let atlas = Atlas::from_classification(&classify(2 * half + 1)?)?;
    atlas.write(&path)?;
    let back = Atlas::read(&path)?;
    assert_eq!(back, atlas);
    println!("{}: {} classes in {} orbits", path.display(), back.class_count, back.orbit_count);
    for o in back.orbits.iter().take(5) {
        println!("  #{} size {} min {} rep {:?}", o.orbit_id, o.size, o.min_signature_size, o.representative);
    }
    Ok(())
}

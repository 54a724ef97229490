//! Largest minimal signature and size-two class count for P(2n+1,1).
//!
//! cargo run --release --example conjecture_scan -- 4

use gpg_switch::classify::{classify, matching_class_count, max_minimal_size};

fn main() -> gpg_switch::Result<()> {
    let top = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(4);
    for half in 1..=top {
        let c = classify(2 * half + 1)?;
        println!(
            "n={half} P({},1): {} orbits, {} of size two (4n-1 = {}), max minimal {} (bound {})",
            2 * half + 1,
            c.orbit_count(),
            matching_class_count(&c, 2),
            4 * half - 1,
            max_minimal_size(&c),
            half + 1
        );
    }
    Ok(())
}

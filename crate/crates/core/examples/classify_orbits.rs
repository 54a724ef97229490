//! Classify every signature of P(n,1) up to switching isomorphism.
//!
//! cargo run --release --example classify_orbits -- 7

use gpg_switch::classify::classify;
use gpg_switch::io::{emit_table, Format};

fn main() -> gpg_switch::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let c = classify(n)?;
    print!("{}", emit_table(&c.orbits, &c.graph, &c.cycle_lengths(), Format::Md)?);
    println!(
        "\n{} classes, {} orbits, Burnside count {}",
        c.class_count(),
        c.orbit_count(),
        c.action.burnside_count()?
    );
    Ok(())
}

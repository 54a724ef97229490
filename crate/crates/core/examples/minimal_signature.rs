//! Find the smallest signatures in a switching class.
//!
//! cargo run --release --example minimal_signature -- "u0-u1,u1-u2,u2-u3,u3-u4,u4-u0"

use gpg_switch::graph::build_petersen;
use gpg_switch::io::parse_signature;
use gpg_switch::signed::{is_matching, minimal_signature};

fn main() -> gpg_switch::Result<()> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "u0-u1,u1-u2,u2-u3,u3-u4,u4-u0".into());
    let g = build_petersen(5, 1)?;
    let sig = parse_signature(&text, &g)?;
    let m = minimal_signature(&g, &sig)?;
    println!("{{{}}} has minimal size {}", sig.render(&g), m.size);
    for (w, s) in m.witnesses.iter().zip(&m.witness_switches) {
        println!("  {{{}}}  via {{{}}}  matching: {}", w.render(&g), s.render(&g), is_matching(&g, w));
    }
    Ok(())
}

//! Count the simple cycles of the odd prisms by length.

use gpg_switch::cycles::cycle_census;
use gpg_switch::graph::build_petersen;

fn main() -> gpg_switch::Result<()> {
    for half in 1..=6 {
        let n = 2 * half + 1;
        let census = cycle_census(&build_petersen(n, 1)?)?;
        let cells: Vec<String> = census.iter().map(|(len, k)| format!("C{len}:{k}")).collect();
        println!("P({n},1)  {}", cells.join(" "));
    }
    Ok(())
}

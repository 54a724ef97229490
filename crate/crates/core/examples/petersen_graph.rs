//! Build generalized Petersen graphs and inspect names, roles and distances.
//!
//! cargo run --example petersen_graph -- 7 2

use gpg_switch::graph::{build_petersen, edge_distance, max_edge_distance, spanning_tree};

fn main() -> gpg_switch::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        [n] => (n, 1),
        _ => (7, 1),
    };
    let g = build_petersen(n, k)?;
    println!("{g}: {} vertices, {} edges", g.vertex_count(), g.edge_count());
    for e in 0..g.edge_count().min(6) {
        println!("  edge {e:2} = {:6} {:?}", g.edge_name(e), g.edge_role(e).unwrap());
    }
    println!("distance u0-u1 to spoke 2: {}", edge_distance(&g, 0, 2 * n + 2)?);
    println!("max edge distance: {}", max_edge_distance(&g)?);

    let t = spanning_tree(&g)?;
    let cotree: Vec<String> = t.cotree_order().iter().map(|&e| g.edge_name(e)).collect();
    println!("co-tree edges ({}): {}", t.cotree_len(), cotree.join(" "));
    Ok(())
}

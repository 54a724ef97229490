//! Subcommand implementations behind the `gpg-switch` binary.
//!
//! Each command returns its full stdout text and an exit code so the binary
//! stays a thin argument parser.

use std::path::Path;

use serde_json::json;

use crate::classify::{
    classify_with_cap, matching_aut_orbits, matching_class_count, max_minimal_size, verify_paper,
    ClaimStatus, VerifyScope,
};
use crate::cycles::{census_of, enumerate_cycles_capped};
use crate::error::{Error, Result};
use crate::graph::{spanning_tree, Graph};
use crate::io::{orbit_table, parse_signature, Atlas, RunConfig, Table};
use crate::signed::{
    minimal_signature, neg_profile, NegCycleProfile, Normalizer, Signature,
};
use crate::symmetry::{apply_to_signature, aut_group, brute_force_automorphisms, AutGroup};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

/// Witnesses printed by `minimal`.
pub const MAX_PRINTED_WITNESSES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

/// Exit status for a failed command.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        e if e.is_resource_cap() => EXIT_RESOURCE,
        Error::Internal(_) => 1,
        _ => EXIT_INVALID,
    }
}

fn group_for(cfg: &RunConfig) -> Result<AutGroup> {
    cfg.require_prism()?;
    aut_group(cfg.petersen_n())
}

pub fn info(cfg: &RunConfig) -> Result<Outcome> {
    let g = cfg.graph()?;
    let class_bits = g.edge_count() + 1 - g.vertex_count();
    let order = if cfg.k == 1 {
        aut_group(cfg.petersen_n())?.order().to_string()
    } else if let Ok(auts) = brute_force_automorphisms(&g) {
        auts.len().to_string()
    } else {
        "unknown".to_string()
    };
    Ok(Outcome::ok(format!(
        "graph: {g}\nvertices: {}\nedges: {}\nswitching classes: 2^{class_bits} = {}\nautomorphism group order: {order}\n",
        g.vertex_count(),
        g.edge_count(),
        1u64 << class_bits,
    )))
}

pub fn cycles(cfg: &RunConfig) -> Result<Outcome> {
    let g = cfg.graph()?;
    let census = census_of(&enumerate_cycles_capped(&g, cfg.cycle_cap)?);
    let half = cfg.n;
    let expected = |len: usize| -> Option<usize> {
        if cfg.k != 1 {
            None
        } else if len == 2 * half + 1 {
            Some(2)
        } else if len % 2 == 0 {
            Some(if (4..=4 * half + 2).contains(&len) { 2 * half + 1 } else { 0 })
        } else {
            None
        }
    };
    let mut lengths: Vec<usize> = census.keys().copied().collect();
    if cfg.k == 1 {
        lengths.extend((4..=4 * half + 2).step_by(2));
        lengths.push(2 * half + 1);
        lengths.sort_unstable();
        lengths.dedup();
    }
    let mut table = Table::new(["length", "count", "expected", "check"]);
    let mut all_ok = true;
    for len in lengths {
        let count = census.get(&len).copied().unwrap_or(0);
        let (want, check) = match expected(len).filter(|_| cfg.k == 1) {
            Some(w) => {
                all_ok &= w == count;
                (json!(w), json!(if w == count { "ok" } else { "MISMATCH" }))
            }
            None => (json!("-"), json!("-")),
        };
        table.rows.push(vec![json!(len), json!(count), want, check]);
    }
    let total: usize = census.values().sum();
    table.footer = Some(format!("{total} cycles in {g}"));
    let code = if all_ok { EXIT_OK } else { EXIT_VERIFY };
    Ok(Outcome { text: table.render(cfg.format)?, code })
}

pub fn classify(cfg: &RunConfig) -> Result<Outcome> {
    cfg.require_prism()?;
    cfg.validate()?;
    let c = classify_with_cap(cfg.petersen_n(), cfg.cycle_cap)?;
    let mut table = orbit_table(&c.orbits, &c.graph, &c.cycle_lengths());
    table.footer = Some(format!("{} orbits", c.orbit_count()));
    Ok(Outcome::ok(table.render(cfg.format)?))
}

pub fn atlas(cfg: &RunConfig, out: &Path) -> Result<Outcome> {
    cfg.require_prism()?;
    cfg.validate()?;
    let c = classify_with_cap(cfg.petersen_n(), cfg.cycle_cap)?;
    let atlas = Atlas::from_classification(&c)?;
    atlas.write(out)?;
    Ok(Outcome::ok(format!(
        "wrote {} ({} classes, {} orbits)\n",
        out.display(),
        atlas.class_count,
        atlas.orbit_count
    )))
}

pub fn minimal(cfg: &RunConfig, signature: &str) -> Result<Outcome> {
    let g = cfg.graph()?;
    let sig = parse_signature(signature, &g)?;
    let m = minimal_signature(&g, &sig)?;
    let mut text = format!("graph: {g}\nsignature: {{{}}}\nminimal size: {}\n", sig.render(&g), m.size);
    text.push_str(&format!("witnesses ({} total):\n", m.witnesses.len()));
    for w in m.witnesses.iter().take(MAX_PRINTED_WITNESSES) {
        text.push_str(&format!("  {{{}}}\n", w.render(&g)));
    }
    if let Some(s) = m.witness_switches.first() {
        text.push_str(&format!("switch at: {{{}}}\n", s.render(&g)));
    }
    Ok(Outcome::ok(text))
}

fn orbit_key(g: &Graph, grp: &AutGroup, normalizer: &Normalizer, sig: &Signature) -> Result<u64> {
    let mut best = u64::MAX;
    for p in grp.elements() {
        best = best.min(normalizer.normalize(&apply_to_signature(g, p, sig)?)?.0.bits());
    }
    Ok(best)
}

fn render_profile(p: &NegCycleProfile) -> String {
    p.counts()
        .iter()
        .map(|(len, k)| format!("C{len}={k}"))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn equivalent(cfg: &RunConfig, a: &str, b: &str, up_to_iso: bool) -> Result<Outcome> {
    let g = cfg.graph()?;
    let grp = if up_to_iso { Some(group_for(cfg)?) } else { None };
    let sa = parse_signature(a, &g)?;
    let sb = parse_signature(b, &g)?;
    let tree = spanning_tree(&g)?;
    let normalizer = Normalizer::new(&g, &tree)?;
    let (ca, _) = normalizer.normalize(&sa)?;
    let (cb, _) = normalizer.normalize(&sb)?;
    if ca == cb {
        return Ok(Outcome::ok(format!("EQUIVALENT\nclass: {ca}\n")));
    }
    if let Some(grp) = &grp {
        if orbit_key(&g, grp, &normalizer, &sa)? == orbit_key(&g, grp, &normalizer, &sb)? {
            return Ok(Outcome::ok(format!("ISOMORPHIC\nclasses: {ca} {cb}\n")));
        }
    }
    let cycles = enumerate_cycles_capped(&g, cfg.cycle_cap)?;
    let (pa, pb) = (neg_profile(&sa, &cycles), neg_profile(&sb, &cycles));
    let note = if pa == pb { " (profiles agree; classes differ)" } else { "" };
    Ok(Outcome::ok(format!(
        "DISTINCT{note}\nclasses: {ca} {cb}\nprofile a: {}\nprofile b: {}\n",
        render_profile(&pa),
        render_profile(&pb)
    )))
}

pub fn matchings(cfg: &RunConfig, size: usize, aut_only: bool, exclude_forbidden: bool) -> Result<Outcome> {
    let g = cfg.graph()?;
    let grp = group_for(cfg)?;
    let census = matching_aut_orbits(&g, &grp, size, exclude_forbidden)?;
    let mut text = format!("graph: {g}\nmatching size: {size}\n");
    if exclude_forbidden {
        text.push_str("forbidden sub-matchings excluded\n");
    }
    text.push_str(&format!("up to automorphism: {}\n", census.aut_orbit_count));
    if !aut_only {
        text.push_str(&format!(
            "up to switching isomorphism (minimal): {}\n",
            census.switching_iso_count
        ));
    }
    Ok(Outcome::ok(text))
}

pub fn conjecture(cfg: &RunConfig) -> Result<Outcome> {
    cfg.require_prism()?;
    cfg.validate()?;
    if cfg.n > cfg.conjecture_budget {
        return Err(Error::SizeBound {
            what: "conjecture scan n (raise with --long)",
            limit: cfg.conjecture_budget,
            actual: cfg.n,
        });
    }
    let c = classify_with_cap(cfg.petersen_n(), cfg.cycle_cap)?;
    let max = max_minimal_size(&c);
    let bound = cfg.n + 1;
    let within = max <= bound;
    Ok(Outcome {
        text: format!(
            "graph: {}\norbits: {}\nsize-2 minimal classes: {}\nmax minimal size: {max}\nbound n+1: {bound}\n{}\n",
            c.graph,
            c.orbit_count(),
            matching_class_count(&c, 2),
            if within { "WITHIN BOUND" } else { "EXCEEDS BOUND" }
        ),
        code: if within { EXIT_OK } else { EXIT_VERIFY },
    })
}

pub fn verify(scope: VerifyScope) -> Result<Outcome> {
    let claims = verify_paper(scope)?;
    let mut text = String::new();
    for c in &claims {
        text.push_str(&c.to_string());
        text.push('\n');
    }
    let failed = claims.iter().filter(|c| c.status == ClaimStatus::Fail).count();
    let passed = claims.iter().filter(|c| c.status == ClaimStatus::Pass).count();
    text.push_str(&format!("{passed} passed, {failed} failed\n"));
    Ok(Outcome { text, code: if failed == 0 { EXIT_OK } else { EXIT_VERIFY } })
}

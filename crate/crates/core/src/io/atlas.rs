use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::parse_signature;
use crate::classify::Classification;
use crate::error::{Error, Result};
use crate::graph::{build_petersen, Graph};
use crate::signed::{is_matching, ClassId};

pub const ATLAS_FORMAT: &str = "gpg-switch-atlas/1";

/// Serialized classification of P(2n+1,1).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub format_tag: String,
    /// Half-parameter: the atlas describes P(2n+1,1).
    pub n: usize,
    pub class_count: usize,
    pub orbit_count: usize,
    pub orbits: Vec<AtlasOrbit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtlasOrbit {
    pub orbit_id: usize,
    pub size: usize,
    pub min_signature_size: usize,
    pub representative: Vec<String>,
    /// Cycle length to number of negative cycles.
    pub neg_profile: BTreeMap<usize, usize>,
    /// Bitstrings, first co-tree edge first.
    pub class_ids: Vec<String>,
}

impl Atlas {
    pub fn from_classification(c: &Classification) -> Result<Self> {
        let n = match c.graph.petersen_params() {
            Some((p, 1)) if p % 2 == 1 => p / 2,
            _ => return Err(Error::Unsupported("atlases cover P(2n+1,1) only".into())),
        };
        let orbits = c
            .orbits
            .iter()
            .map(|o| AtlasOrbit {
                orbit_id: o.orbit_id,
                size: o.size(),
                min_signature_size: o.min_size,
                representative: o.canonical_rep.neg_edges().iter().map(|e| c.graph.edge_name(e)).collect(),
                neg_profile: o.profile.counts().clone(),
                class_ids: o.class_ids.iter().map(ClassId::to_string).collect(),
            })
            .collect();
        Ok(Atlas {
            format_tag: ATLAS_FORMAT.to_string(),
            n,
            class_count: c.class_count(),
            orbit_count: c.orbit_count(),
            orbits,
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        build_petersen(2 * self.n + 1, 1)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        Ok(text)
    }

    /// Parses and validates.
    pub fn from_json(text: &str) -> Result<Self> {
        let atlas: Atlas = serde_json::from_str(text)?;
        atlas.validate()?;
        Ok(atlas)
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn read(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Checks the structural invariants of the format.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameters(format!("atlas: {msg}")));
        if self.format_tag != ATLAS_FORMAT {
            return bad(format!("unknown format tag {:?}", self.format_tag));
        }
        if self.orbit_count != self.orbits.len() {
            return bad(format!("orbit_count {} but {} orbits", self.orbit_count, self.orbits.len()));
        }
        let g = self.graph()?;
        let class_len = g.edge_count() + 1 - g.vertex_count();
        let mut total = 0;
        for (i, o) in self.orbits.iter().enumerate() {
            if o.orbit_id != i {
                return bad(format!("orbit ids are not dense at position {i}"));
            }
            if o.size != o.class_ids.len() {
                return bad(format!("orbit {i}: size {} but {} class ids", o.size, o.class_ids.len()));
            }
            for cid in &o.class_ids {
                let cid: ClassId = cid.parse()?;
                if cid.len() != class_len {
                    return Err(Error::WidthMismatch { expected: class_len, found: cid.len() });
                }
            }
            let rep = parse_signature(&o.representative.join(","), &g)?;
            if rep.len() != o.min_signature_size || !is_matching(&g, &rep) {
                return bad(format!("orbit {i}: representative is not a matching of size {}", o.min_signature_size));
            }
            total += o.size;
        }
        if total != self.class_count {
            return bad(format!("class_count {} but orbit sizes sum to {total}", self.class_count));
        }
        Ok(())
    }
}

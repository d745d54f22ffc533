//! Frozen oracle values. The first verified run writes them; later runs
//! compare against the checked-in copy.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::group::PermGroup;

/// `"n:g1|g2|…"` with generator strings sorted.
pub fn group_key(g: &PermGroup) -> String {
    let mut gens: Vec<String> = g.generators().iter().map(|x| x.to_string()).collect();
    gens.sort();
    format!("{}:{}", g.degree(), gens.join("|"))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub order: u128,
    /// Keyed by `m` as a string; `null` where the exact count was over a cap.
    pub reg_counts: BTreeMap<String, Option<u128>>,
    pub min_base: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fixtures {
    pub entries: BTreeMap<String, FixtureEntry>,
}

impl Fixtures {
    pub fn load(path: &Path) -> std::io::Result<Fixtures> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(std::io::Error::other)
    }

    pub fn save(&self, path: &Path) -> std::io::Result<()> {
        let mut text = serde_json::to_string_pretty(self).map_err(std::io::Error::other)?;
        text.push('\n');
        std::fs::write(path, text)
    }
}

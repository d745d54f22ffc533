//! Solvable subgroups of `S_n` up to conjugacy by cyclic extension.
//!
//! A nontrivial solvable group `H` has a normal subgroup `N` of prime index,
//! so `H = ⟨N, g⟩` with `g` normalizing `N` and `g^p ∈ N`. Starting from the
//! trivial group and extending one representative per conjugacy class by
//! every such `g` therefore reaches every class of solvable subgroups.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::group::PermGroup;
use crate::perm::Permutation;

use super::CorpusError;

pub const MAX_ENUMERATION_DEGREE: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub generators: Vec<String>,
    pub order: u128,
    pub solvable: bool,
    pub transitive: bool,
    pub tags: Vec<String>,
}

impl CatalogEntry {
    pub fn group(&self, degree: usize) -> PermGroup {
        PermGroup::from_cycle_strings(degree, &self.generators).expect("catalog generators parse")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupCatalog {
    pub degree: usize,
    pub entries: Vec<CatalogEntry>,
}

impl GroupCatalog {
    pub fn groups(&self) -> impl Iterator<Item = PermGroup> + '_ {
        self.entries.iter().map(|e| e.group(self.degree))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("catalog serializes")
    }

    pub fn from_json(text: &str) -> Result<GroupCatalog, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Conjugacy-invariant fingerprint: order and the multiset of cycle types.
fn fingerprint(elements: &[Permutation]) -> (usize, Vec<(Vec<usize>, usize)>) {
    let mut counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for e in elements {
        *counts.entry(e.cycle_type()).or_default() += 1;
    }
    (elements.len(), counts.into_iter().collect())
}

struct Class {
    group: PermGroup,
    elements: HashSet<Permutation>,
    fingerprint: (usize, Vec<(Vec<usize>, usize)>),
}

impl Class {
    fn new(group: PermGroup) -> Class {
        let list: Vec<Permutation> = group.elements(u128::MAX).unwrap().collect();
        let fingerprint = fingerprint(&list);
        Class {
            group,
            elements: list.into_iter().collect(),
            fingerprint,
        }
    }

    /// Some `s ∈ S_n` with `self^s = other`, by brute force over `S_n`.
    fn conjugate_to(&self, other: &Class, symmetric: &[Permutation]) -> bool {
        self.fingerprint == other.fingerprint
            && symmetric
                .iter()
                .any(|s| self.group.generators().iter().all(|g| other.elements.contains(&g.conj(s))))
    }
}

/// One representative per conjugacy class of solvable subgroups of `S_n`,
/// sorted by order and then by generator strings.
pub fn enumerate_solvable(n: usize) -> Result<GroupCatalog, CorpusError> {
    if n > MAX_ENUMERATION_DEGREE {
        return Err(CorpusError::DegreeCapExceeded(n));
    }
    if n == 0 {
        return Err(CorpusError::BadParams("degree must be positive".into()));
    }
    let symmetric: Vec<Permutation> = PermGroup::symmetric(n).elements(u128::MAX).unwrap().collect();
    let mut classes: Vec<Class> = vec![Class::new(PermGroup::trivial(n))];
    let mut next = 0;
    while next < classes.len() {
        let base = classes[next].group.clone();
        let base_elems = classes[next].elements.clone();
        next += 1;
        let normalizer: Vec<&Permutation> = symmetric
            .iter()
            .filter(|s| base.generators().iter().all(|g| base_elems.contains(&g.conj(s))))
            .collect();
        let mut seen_cosets = HashSet::new();
        let mut seen_groups: HashSet<Vec<Permutation>> = HashSet::new();
        for g in normalizer {
            if base.has(g) || !seen_cosets.insert(base.chain().canonical_coset_rep(g)) {
                continue;
            }
            let mut e: u64 = 1;
            let mut power = g.clone();
            while !base.has(&power) {
                power = power.mul(g);
                e += 1;
            }
            if !crate::group::is_prime(e) {
                continue;
            }
            let ext = base.group_with([g.clone()]);
            let mut key: Vec<Permutation> = ext.elements(u128::MAX).unwrap().collect();
            key.sort();
            if !seen_groups.insert(key) {
                continue;
            }
            let candidate = Class::new(ext);
            if !classes.iter().any(|c| c.conjugate_to(&candidate, &symmetric)) {
                classes.push(candidate);
            }
        }
    }
    let mut entries: Vec<CatalogEntry> = classes.iter().map(|c| entry(&c.group)).collect();
    entries.sort_by(|a, b| (a.order, &a.generators).cmp(&(b.order, &b.generators)));
    Ok(GroupCatalog { degree: n, entries })
}

fn entry(g: &PermGroup) -> CatalogEntry {
    let transitive = g.is_transitive();
    let mut tags = Vec::new();
    if transitive {
        tags.push("transitive".to_string());
        if g.is_primitive().unwrap_or(false) {
            tags.push("primitive".to_string());
        }
    }
    if g.is_semiregular() {
        tags.push("semiregular".to_string());
    }
    if g.is_in_alternating() {
        tags.push("even".to_string());
    }
    if g.is_abelian() {
        tags.push("abelian".to_string());
    }
    CatalogEntry {
        generators: g.generators().iter().map(Permutation::to_string).collect(),
        order: g.order(),
        solvable: g.is_solvable(),
        transitive,
        tags,
    }
}

//! Exact counting of regular orbits of `S` on `Ω^m`.
//!
//! `S` is transitive on `Ω`, so every orbit meets the tuples whose first
//! entry is the coset `G` itself. Those tuples are permuted by `G ∩ S`, and
//! a regular `S`-orbit contributes exactly one regular `G ∩ S`-orbit of size
//! `|G ∩ S|`. The count is therefore `N / |G ∩ S|`, `N` being the number of
//! regular tuples with the first entry fixed. Small survivor sets are also
//! merged explicitly with union–find under the generators of `G ∩ S`, and the
//! two numbers are checked against each other.

use std::collections::HashMap;

use serde::Serialize;

use crate::ambient::Ambient;
use crate::config::Config;
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::search::find_regular_tuples;
use super::{ElementSet, OracleError};

/// Largest survivor set merged explicitly.
const UNION_FIND_LIMIT: u128 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "mode")]
pub enum RegCount {
    Exact {
        value: u128,
        /// Regular tuples with first entry `G`.
        regular_points: u128,
        index: u128,
    },
    /// At least `bound` regular orbits, shown by pairwise inequivalent tuples.
    AtLeast { bound: u128, tuples: Vec<Vec<String>> },
}

impl RegCount {
    pub fn value(&self) -> Option<u128> {
        match self {
            RegCount::Exact { value, .. } => Some(*value),
            RegCount::AtLeast { .. } => None,
        }
    }

    /// A guaranteed lower bound in either mode.
    pub fn lower_bound(&self) -> u128 {
        match self {
            RegCount::Exact { value, .. } => *value,
            RegCount::AtLeast { bound, .. } => *bound,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegMode {
    Exact,
    /// Exhibit five regular tuples in distinct orbits.
    Bound,
}

/// `Reg_G(S, m)` for `m` in `1..=5`.
pub fn reg_count(
    group: &PermGroup,
    ambient: Ambient,
    m: usize,
    mode: RegMode,
    config: &Config,
) -> Result<RegCount, OracleError> {
    if !(1..=5).contains(&m) {
        return Err(OracleError::BadLength(m));
    }
    match mode {
        RegMode::Exact => exact(group, ambient, m, config),
        RegMode::Bound => bound(group, ambient, m, config),
    }
}

fn local_generators(gens: &[Permutation], ambient: Ambient) -> Vec<Permutation> {
    let Some(odd) = gens.iter().find(|g| !ambient.contains(g)) else {
        return gens.to_vec();
    };
    // Schreier generators for the transversal {1, odd}.
    let odd_inv = odd.inverse();
    let mut out = Vec::new();
    for s in gens {
        if ambient.contains(s) {
            out.push(s.clone());
            out.push(odd.mul(s).mul(&odd_inv));
        } else {
            out.push(s.mul(&odd_inv));
            out.push(odd.mul(s));
        }
    }
    out
}

struct Space {
    reps: Vec<Permutation>,
    index_of: HashMap<Permutation, u32>,
}

fn enumerate_cosets(local: &ElementSet, ambient: Ambient, cap: u128) -> Result<Space, OracleError> {
    let n = local.degree;
    let sgens = ambient.group(n).generators().to_vec();
    let start = local.coset_min(&Permutation::identity(n));
    let mut index_of = HashMap::new();
    index_of.insert(start.clone(), 0u32);
    let mut reps = vec![start];
    let mut k = 0;
    while k < reps.len() {
        for s in &sgens {
            let r = local.coset_min(&reps[k].mul(s));
            if !index_of.contains_key(&r) {
                if reps.len() as u128 >= cap {
                    return Err(OracleError::CapExceeded { cap: "iteration", limit: cap });
                }
                index_of.insert(r.clone(), reps.len() as u32);
                reps.push(r);
            }
        }
        k += 1;
    }
    Ok(Space { reps, index_of })
}

fn exact(group: &PermGroup, ambient: Ambient, m: usize, config: &Config) -> Result<RegCount, OracleError> {
    let n = group.degree();
    let full = ElementSet::closure(n, group.generators(), config.group_cap)?;
    let local = full.restrict_to(ambient);
    let order = local.order() as u128;
    let index = ambient.order(n) / order;
    let work = index.checked_pow(m as u32 - 1).unwrap_or(u128::MAX);
    if work > config.iteration_cap || order.saturating_mul(index) > config.iteration_cap {
        return Err(OracleError::CapExceeded {
            cap: "iteration",
            limit: config.iteration_cap,
        });
    }
    let space = enumerate_cosets(&local, ambient, config.iteration_cap)?;
    debug_assert_eq!(space.reps.len() as u128, index);

    // fixes[c][e]: element e of G ∩ S fixes coset c.
    let fixes: Vec<Vec<bool>> = space
        .reps
        .iter()
        .map(|r| {
            let r_inv = r.inverse();
            local.elements.iter().map(|e| local.contains(&r.mul(e).mul(&r_inv))).collect()
        })
        .collect();
    let all: Vec<u32> = (0..local.order() as u32).collect();
    let counter = Counter {
        fixes: &fixes,
        index,
    };
    let regular_points = counter.count(&all, m - 1);
    let value = regular_points / order;
    debug_assert_eq!(regular_points % order, 0);

    if regular_points <= UNION_FIND_LIMIT && regular_points > 0 {
        let lgens = local_generators(group.generators(), ambient);
        let action: Vec<Vec<u32>> = lgens
            .iter()
            .map(|g| {
                space
                    .reps
                    .iter()
                    .map(|r| space.index_of[&local.coset_min(&r.mul(g))])
                    .collect()
            })
            .collect();
        let mut survivors = Vec::new();
        counter.collect(&all, &mut Vec::new(), m - 1, &mut survivors);
        let merged = orbit_count(&survivors, &action);
        assert_eq!(merged, value, "orbit merge disagrees with the quotient count");
    }
    Ok(RegCount::Exact {
        value,
        regular_points,
        index,
    })
}

struct Counter<'a> {
    fixes: &'a [Vec<bool>],
    index: u128,
}

impl Counter<'_> {
    fn count(&self, stab: &[u32], remaining: usize) -> u128 {
        if stab.len() == 1 {
            return self.index.pow(remaining as u32);
        }
        if remaining == 0 {
            return 0;
        }
        (0..self.fixes.len())
            .map(|c| {
                let next: Vec<u32> = stab.iter().copied().filter(|&e| self.fixes[c][e as usize]).collect();
                self.count(&next, remaining - 1)
            })
            .sum()
    }

    fn collect(&self, stab: &[u32], prefix: &mut Vec<u32>, remaining: usize, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            if stab.len() == 1 {
                out.push(prefix.clone());
            }
            return;
        }
        for c in 0..self.fixes.len() {
            let next: Vec<u32> = if stab.len() == 1 {
                stab.to_vec()
            } else {
                stab.iter().copied().filter(|&e| self.fixes[c][e as usize]).collect()
            };
            prefix.push(c as u32);
            self.collect(&next, prefix, remaining - 1, out);
            prefix.pop();
        }
    }
}

fn orbit_count(tuples: &[Vec<u32>], action: &[Vec<u32>]) -> u128 {
    let index: HashMap<&[u32], usize> = tuples.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut parent: Vec<usize> = (0..tuples.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = tuples.len() as u128;
    let mut image = Vec::new();
    for (i, t) in tuples.iter().enumerate() {
        for g in action {
            image.clear();
            image.extend(t.iter().map(|&c| g[c as usize]));
            let j = index[image.as_slice()];
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
                components -= 1;
            }
        }
    }
    components
}

fn bound(group: &PermGroup, ambient: Ambient, m: usize, config: &Config) -> Result<RegCount, OracleError> {
    let n = group.degree();
    let tuples = find_regular_tuples(group, ambient, m, 5, config)?
        .ok_or(OracleError::CapExceeded {
            cap: "search",
            limit: config.search_budget as u128,
        })?;
    // Re-check the search output by brute force before reporting it.
    let full = ElementSet::closure(n, group.generators(), config.group_cap)?;
    let local = full.restrict_to(ambient);
    let mut accepted: Vec<Vec<Permutation>> = Vec::new();
    for t in tuples {
        let regular = local.conjugate_intersection_order(&t) == 1;
        let fresh = accepted.iter().all(|a| !local.same_orbit(ambient, a, &t));
        if regular && fresh {
            accepted.push(t);
        }
    }
    Ok(RegCount::AtLeast {
        bound: accepted.len() as u128,
        tuples: accepted.iter().map(|t| t.iter().map(Permutation::to_string).collect()).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(n, gens).unwrap()
    }

    /// Reg_G(S,m) straight from the definition: all of Ω^m, orbits of S.
    fn by_definition(g: &PermGroup, ambient: Ambient, m: usize) -> u128 {
        let n = g.degree();
        let local = ElementSet::closure(n, g.generators(), u128::MAX)
            .unwrap()
            .restrict_to(ambient);
        let s = ElementSet::closure(n, ambient.group(n).generators(), u128::MAX).unwrap();
        let mut cosets: Vec<Permutation> = s.elements.iter().map(|x| local.coset_min(x)).collect();
        cosets.sort();
        cosets.dedup();
        let k = cosets.len();
        let mut regular = 0u128;
        let mut idx = vec![0usize; m];
        loop {
            let t: Vec<Permutation> = idx.iter().map(|&i| cosets[i].clone()).collect();
            if local.conjugate_intersection_order(&t) == 1 {
                regular += 1;
            }
            let mut d = 0;
            loop {
                if d == m {
                    return regular / s.order() as u128;
                }
                idx[d] += 1;
                if idx[d] < k {
                    break;
                }
                idx[d] = 0;
                d += 1;
            }
        }
    }

    #[test]
    fn matches_definition_on_small_cases() {
        let cases = [
            (group(5, &["(1,2,3,4,5)", "(2,3,5,4)"]), Ambient::Symmetric),
            (group(5, &["(1,2,3,4,5)"]), Ambient::Alternating),
            (group(5, &["(1,2)", "(3,4,5)", "(3,4)"]), Ambient::Symmetric),
            (group(5, &["(1,2)(3,4)", "(1,3)(2,4)"]), Ambient::Alternating),
        ];
        for (g, a) in &cases {
            for m in 1..=3 {
                let fast = reg_count(g, *a, m, RegMode::Exact, &Config::default()).unwrap();
                assert_eq!(fast.value(), Some(by_definition(g, *a, m)), "{g:?} {a} m={m}");
            }
        }
    }

    #[test]
    fn whole_group_has_no_regular_orbits() {
        let s5 = PermGroup::symmetric(5);
        for m in 1..=5 {
            let r = reg_count(&s5, Ambient::Symmetric, m, RegMode::Exact, &Config::default()).unwrap();
            assert_eq!(r.value(), Some(0));
        }
    }

    #[test]
    fn independent_of_generator_order() {
        let a = group(6, &["(1,2)", "(3,4,5,6)", "(3,4)"]);
        let b = group(6, &["(3,4)", "(1,2)", "(3,4,5,6)"]);
        let ca = reg_count(&a, Ambient::Symmetric, 4, RegMode::Exact, &Config::default()).unwrap();
        let cb = reg_count(&b, Ambient::Symmetric, 4, RegMode::Exact, &Config::default()).unwrap();
        assert_eq!(ca, cb);
    }

    #[test]
    fn iteration_cap_is_enforced() {
        let g = group(6, &["(1,2)"]);
        let config = Config {
            iteration_cap: 1000,
            ..Config::default()
        };
        assert!(matches!(
            reg_count(&g, Ambient::Symmetric, 3, RegMode::Exact, &config),
            Err(OracleError::CapExceeded { cap: "iteration", .. })
        ));
    }
}

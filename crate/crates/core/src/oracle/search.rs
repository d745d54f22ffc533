//! Bounded searches for conjugator tuples. These use the stabilizer chain
//! for speed; callers re-check results with the brute-force routines.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ambient::Ambient;
use crate::config::Config;
use crate::coset::CosetSpace;
use crate::group::{PermGroup, StabilizerChain};
use crate::perm::Permutation;

use super::OracleError;

/// Coset spaces up to this index contribute every coset to the candidates.
const FULL_INDEX_LIMIT: u128 = 20_000;
/// Random candidates drawn per greedy step.
const GREEDY_SAMPLE: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseSearch {
    /// Starts with the identity; `⋂ G^{x_i} = 1`.
    pub conjugators: Vec<Permutation>,
    /// Every shorter tuple was ruled out exhaustively.
    pub minimal: bool,
}

struct Searcher<'a> {
    space: CosetSpace,
    elements: Vec<Permutation>,
    ambient: Ambient,
    rng: ChaCha8Rng,
    evaluations: u64,
    budget: u64,
    tests: u128,
    test_cap: u128,
    group: &'a PermGroup,
}

impl<'a> Searcher<'a> {
    fn new(group: &'a PermGroup, ambient: Ambient, config: &Config) -> Result<Searcher<'a>, OracleError> {
        let elements: Vec<Permutation> = group.elements(config.group_cap)?.collect();
        Ok(Searcher {
            space: CosetSpace::new(group.clone(), ambient),
            elements,
            ambient,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            evaluations: 0,
            budget: config.search_budget,
            tests: 0,
            test_cap: config.iteration_cap,
            group,
        })
    }

    fn exhausted(&self) -> bool {
        self.evaluations >= self.budget || self.tests >= self.test_cap
    }

    /// Elements of `current` lying in `G^x`.
    fn filter(&mut self, current: &[Permutation], x: &Permutation) -> Vec<Permutation> {
        self.evaluations += 1;
        self.tests += current.len() as u128;
        let x_inv = x.inverse();
        let chain: &StabilizerChain = self.group.chain();
        current
            .iter()
            .filter(|e| chain.contains_conjugated(x, &x_inv, e))
            .cloned()
            .collect()
    }

    fn random_element(&mut self) -> Permutation {
        let n = self.space.degree();
        let mut images: Vec<usize> = (1..=n).collect();
        images.shuffle(&mut self.rng);
        let mut p = Permutation::from_images(&images).expect("shuffle is a bijection");
        if !self.ambient.contains(&p) {
            images.swap(0, 1);
            p = Permutation::from_images(&images).expect("shuffle is a bijection");
        }
        p
    }

    /// Deterministic candidates, one per nontrivial coset: transpositions,
    /// 3-cycles, then every coset when the index is small. The flag records
    /// whether every nontrivial coset is represented.
    fn candidates(&self) -> (Vec<Permutation>, bool) {
        let n = self.space.degree();
        let mut seen = HashSet::new();
        seen.insert(self.space.canonical_rep(&Permutation::identity(n)));
        let mut out = Vec::new();
        let mut push = |p: Permutation, out: &mut Vec<Permutation>| {
            if self.ambient.contains(&p) && seen.insert(self.space.canonical_rep(&p)) {
                out.push(p);
            }
        };
        for i in 1..=n {
            for j in i + 1..=n {
                push(Permutation::from_cycles(n, &[vec![i, j]]).unwrap(), &mut out);
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    push(Permutation::from_cycles(n, &[vec![i, j, k]]).unwrap(), &mut out);
                    push(Permutation::from_cycles(n, &[vec![i, k, j]]).unwrap(), &mut out);
                }
            }
        }
        let mut complete = false;
        if self.space.index() <= FULL_INDEX_LIMIT {
            if let Ok(cosets) = self.space.enumerate(FULL_INDEX_LIMIT) {
                for c in cosets {
                    push(c.rep().clone(), &mut out);
                }
                complete = true;
            }
        }
        (out, complete)
    }

    /// Exhaustive search for `depth` more conjugators from `cands[from..]`.
    fn dfs(
        &mut self,
        cands: &[Permutation],
        from: usize,
        current: &[Permutation],
        depth: usize,
        chosen: &mut Vec<Permutation>,
    ) -> Option<bool> {
        if current.len() == 1 {
            return Some(true);
        }
        if depth == 0 {
            return Some(false);
        }
        for i in from..cands.len() {
            if self.exhausted() {
                return None;
            }
            let next = self.filter(current, &cands[i]);
            chosen.push(cands[i].clone());
            match self.dfs(cands, i + 1, &next, depth - 1, chosen) {
                Some(true) => return Some(true),
                Some(false) => {}
                None => {
                    chosen.pop();
                    return None;
                }
            }
            chosen.pop();
        }
        Some(false)
    }

    /// Greedy restarts: each step keeps the sampled candidate that shrinks
    /// the intersection most.
    fn greedy(&mut self, pool: &[Permutation], k_max: usize) -> Option<Vec<Permutation>> {
        let n = self.space.degree();
        if k_max < 2 {
            return (self.elements.len() == 1).then(|| vec![Permutation::identity(n)]);
        }
        while !self.exhausted() {
            let mut current = self.elements.clone();
            let mut chosen = vec![Permutation::identity(n)];
            while chosen.len() < k_max && current.len() > 1 && !self.exhausted() {
                let mut best: Option<(Vec<Permutation>, Permutation)> = None;
                for _ in 0..GREEDY_SAMPLE {
                    let x = if !pool.is_empty() && self.rng.gen_bool(0.5) {
                        pool[self.rng.gen_range(0..pool.len())].clone()
                    } else {
                        self.random_element()
                    };
                    let next = self.filter(&current, &x);
                    if best.as_ref().is_none_or(|(b, _)| next.len() < b.len()) {
                        best = Some((next, x));
                    }
                }
                let (next, x) = best.expect("sampled at least once");
                current = next;
                chosen.push(x);
            }
            if current.len() == 1 {
                return Some(chosen);
            }
        }
        None
    }
}

/// Shortest `k ≤ k_max` conjugator tuple with trivial intersection, found by
/// an exhaustive pass over deterministic candidates followed by seeded
/// greedy sampling. `None` when the budget runs out.
pub fn min_base_search(
    group: &PermGroup,
    ambient: Ambient,
    k_max: usize,
    config: &Config,
) -> Result<Option<BaseSearch>, OracleError> {
    let n = group.degree();
    let id = Permutation::identity(n);
    if group.is_trivial() {
        return Ok(Some(BaseSearch {
            conjugators: vec![id],
            minimal: true,
        }));
    }
    let mut s = Searcher::new(group, ambient, config)?;
    let (cands, complete) = s.candidates();
    let elements = s.elements.clone();
        for k in 2..=k_max.min(5) {
        let mut chosen = vec![id.clone()];
        match s.dfs(&cands, 0, &elements, k - 1, &mut chosen) {
            Some(true) => {
                return Ok(Some(BaseSearch {
                    conjugators: chosen,
                    minimal: complete,
                }))
            }
            // Every shorter length was refuted to get here.
            Some(false) => {}
            None => break,
        }
    }
    Ok(s.greedy(&cands, k_max.min(5)).map(|conjugators| BaseSearch {
        conjugators,
        minimal: false,
    }))
}

/// `count` regular `m`-tuples, pairwise in distinct orbits of the ambient
/// group, each starting with the identity.
pub fn find_regular_tuples(
    group: &PermGroup,
    ambient: Ambient,
    m: usize,
    count: usize,
    config: &Config,
) -> Result<Option<Vec<Vec<Permutation>>>, OracleError> {
    if !(1..=5).contains(&m) {
        return Err(OracleError::BadLength(m));
    }
    let mut s = Searcher::new(group, ambient, config)?;
    let (pool, _) = s.candidates();
    let mut found: Vec<Vec<Permutation>> = Vec::new();
    while found.len() < count && !s.exhausted() {
        let Some(mut t) = s.greedy(&pool, m) else {
            break;
        };
        while t.len() < m {
            t.push(s.random_element());
        }
        let tuple = s.space.tuple(&t).expect("entries lie in the ambient group");
        let mut fresh = true;
        for f in &found {
            let other = s.space.tuple(f).expect("entries lie in the ambient group");
            if s.space.same_orbit(&other, &tuple, config.group_cap)?.is_some() {
                fresh = false;
                break;
            }
        }
        if fresh {
            found.push(t);
        }
    }
    Ok((found.len() == count).then_some(found))
}

//! Deterministic Schreier–Sims.
//!
//! The base is the sorted list of points moved by the input generators, so
//! base points always increase along the chain. Levels whose fundamental
//! orbit is a single point are dropped once the chain is complete. Having an
//! increasing base is what makes greedy lexicographic coset minimisation work.

use crate::perm::Permutation;

#[derive(Debug, Clone)]
pub(crate) struct Level {
    /// 0-based base point.
    pub(crate) base: usize,
    /// Generators added at this level; together they generate the whole
    /// stabilizer of the earlier base points.
    pub(crate) generators: Vec<Permutation>,
    /// `transversal[q]` maps the base point to `q`.
    pub(crate) transversal: Vec<Option<Permutation>>,
    pub(crate) inverse: Vec<Option<Permutation>>,
    /// Fundamental orbit in discovery order.
    pub(crate) orbit: Vec<usize>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Level {
        let mut transversal = vec![None; degree];
        let mut inverse = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        inverse[base] = Some(Permutation::identity(degree));
        Level {
            base,
            generators: Vec::new(),
            transversal,
            inverse,
            orbit: vec![base],
        }
    }
}

/// Base, strong generators and transversals of a permutation group.
#[derive(Debug, Clone)]
pub struct StabilizerChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabilizerChain {
    pub fn new(degree: usize, generators: &[Permutation]) -> StabilizerChain {
        let mut moved = vec![false; degree];
        for g in generators {
            for p in g.support() {
                moved[p] = true;
            }
        }
        let levels = moved
            .iter()
            .enumerate()
            .filter(|(_, &m)| m)
            .map(|(p, _)| Level::new(p, degree))
            .collect();
        let mut chain = StabilizerChain { degree, levels };
        for g in generators {
            if !g.is_identity() {
                chain.extend(0, g.clone());
            }
        }
        chain.levels.retain(|l| l.orbit.len() > 1);
        chain
    }

    /// Sifts `g` starting at `from`; returns the residue.
    fn sift_from(&self, from: usize, g: &Permutation) -> Permutation {
        let mut g = g.clone();
        for level in &self.levels[from..] {
            let q = g.apply(level.base);
            match &level.inverse[q] {
                Some(inv) => g = g.mul(inv),
                None => return g,
            }
        }
        g
    }

    fn extend(&mut self, i: usize, g: Permutation) {
        if self.sift_from(i, &g).is_identity() {
            return;
        }
        debug_assert!(i < self.levels.len(), "non-identity element fixes every base point");
        let mut schreier = Vec::new();
        {
            let level = &mut self.levels[i];
            level.generators.push(g.clone());
            let old_len = level.orbit.len();
            for idx in 0..old_len {
                let p = level.orbit[idx];
                let q = g.apply(p);
                let tp = level.transversal[p].as_ref().unwrap();
                match &level.inverse[q] {
                    Some(inv_q) => schreier.push(tp.mul(&g).mul(inv_q)),
                    None => {
                        let tq = tp.mul(&g);
                        level.inverse[q] = Some(tq.inverse());
                        level.transversal[q] = Some(tq);
                        level.orbit.push(q);
                    }
                }
            }
            let mut k = old_len;
            while k < level.orbit.len() {
                let p = level.orbit[k];
                for s in &level.generators {
                    let q = s.apply(p);
                    let tp = level.transversal[p].as_ref().unwrap();
                    match &level.inverse[q] {
                        Some(inv_q) => schreier.push(tp.mul(s).mul(inv_q)),
                        None => {
                            let tq = tp.mul(s);
                            level.inverse[q] = Some(tq.inverse());
                            level.transversal[q] = Some(tq);
                            level.orbit.push(q);
                        }
                    }
                }
                k += 1;
            }
        }
        for s in schreier {
            if !s.is_identity() {
                self.extend(i + 1, s);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, 1-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base + 1).collect()
    }

    /// Fundamental orbit sizes along the base.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(0, g).is_identity()
    }

    /// Membership of `g` in `G^x`, i.e. of `x g x⁻¹` in `G`, without forming
    /// the conjugated group.
    pub(crate) fn contains_conjugated(&self, x: &Permutation, x_inv: &Permutation, g: &Permutation) -> bool {
        self.contains(&x.mul(g).mul(x_inv))
    }

    /// Lexicographically least image sequence in the right coset `G x`.
    pub fn canonical_coset_rep(&self, x: &Permutation) -> Permutation {
        let mut cur = x.clone();
        for level in &self.levels {
            let best = level
                .orbit
                .iter()
                .copied()
                .min_by_key(|&q| cur.apply(q))
                .unwrap();
            if best != level.base {
                cur = level.transversal[best].as_ref().unwrap().mul(&cur);
            }
        }
        cur
    }

    pub fn elements(&self) -> ChainElements<'_> {
        ChainElements::new(self)
    }
}

/// Every group element exactly once, as a product of transversal elements
/// `t_{k-1} ⋯ t_1 t_0` with the level-0 digit varying fastest.
pub struct ChainElements<'a> {
    chain: &'a StabilizerChain,
    digits: Vec<usize>,
    /// `partial[i] = t_{k-1} ⋯ t_i`; `partial[k]` is the identity.
    partial: Vec<Permutation>,
    done: bool,
}

impl<'a> ChainElements<'a> {
    fn new(chain: &'a StabilizerChain) -> ChainElements<'a> {
        let k = chain.levels.len();
        let mut partial = vec![Permutation::identity(chain.degree); k + 1];
        for i in (0..k).rev() {
            let level = &chain.levels[i];
            let t = level.transversal[level.orbit[0]].as_ref().unwrap();
            partial[i] = partial[i + 1].mul(t);
        }
        ChainElements {
            chain,
            digits: vec![0; k],
            partial,
            done: false,
        }
    }

    fn rebuild_below(&mut self, top: usize) {
        for i in (0..=top).rev() {
            let level = &self.chain.levels[i];
            let t = level.transversal[level.orbit[self.digits[i]]].as_ref().unwrap();
            self.partial[i] = self.partial[i + 1].mul(t);
        }
    }
}

impl Iterator for ChainElements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let out = self.partial[0].clone();
        let k = self.digits.len();
        let mut i = 0;
        loop {
            if i == k {
                self.done = true;
                break;
            }
            self.digits[i] += 1;
            if self.digits[i] < self.chain.levels[i].orbit.len() {
                self.rebuild_below(i);
                break;
            }
            self.digits[i] = 0;
            i += 1;
        }
        Some(out)
    }
}

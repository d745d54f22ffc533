use super::PermGroup;
use crate::perm::Permutation;

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().mul(&b.inverse()).mul(a).mul(b)
}

impl PermGroup {
    /// Normal closure of the generator commutators `[g,h]`.
    pub fn derived_subgroup(&self) -> PermGroup {
        let gens = self.generators();
        let mut seeds = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                seeds.push(commutator(a, b));
            }
        }
        self.normal_closure(seeds)
    }

    /// Smallest subgroup normalized by `self` containing `seeds`.
    pub fn normal_closure(&self, seeds: Vec<Permutation>) -> PermGroup {
        let mut closure = PermGroup::trivial(self.degree());
        let mut queue = seeds;
        while let Some(c) = queue.pop() {
            if c.is_identity() || closure.has(&c) {
                continue;
            }
            closure = closure.group_with([c.clone()]);
            for g in self.generators() {
                queue.push(c.conj(g));
            }
        }
        closure
    }

    /// `G = G^(0) ≥ G^(1) ≥ …`, stopping at the first repeated order.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            if last.is_trivial() {
                break;
            }
            let next = last.derived_subgroup();
            if next.order() == last.order() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }
}

//! The right-multiplication action of `S` on `Ω = {Gx : x ∈ S}`.

use std::collections::HashMap;

use thiserror::Error;

use crate::ambient::Ambient;
use crate::group::{GroupError, PermGroup};
use crate::perm::{PermError, Permutation};

/// Longest tuple the coset machinery accepts.
pub const MAX_TUPLE_LEN: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("tuple length {0} exceeds {MAX_TUPLE_LEN}")]
    TupleTooLong(usize),
    #[error("tuples have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("element {0} is not in the ambient group")]
    NotInAmbient(String),
    #[error("coset space of index {index} exceeds cap {cap}")]
    IndexCapExceeded { index: u128, cap: u128 },
}

impl From<PermError> for CosetError {
    fn from(e: PermError) -> Self {
        CosetError::Group(GroupError::Perm(e))
    }
}

/// A right coset `Gx`, held by its lexicographically least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    rep: Permutation,
}

impl Coset {
    pub fn rep(&self) -> &Permutation {
        &self.rep
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CosetTuple {
    entries: Vec<Coset>,
}

impl CosetTuple {
    pub fn entries(&self) -> &[Coset] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn reps(&self) -> Vec<Permutation> {
        self.entries.iter().map(|c| c.rep.clone()).collect()
    }
}

/// The coset space of `G` in the ambient `S`. Cosets and tuples minted by a
/// space belong to it; mixing spaces is a logic error.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    group: PermGroup,
    ambient: Ambient,
}

impl CosetSpace {
    /// Cosets of `G ∩ S`; for `S = A_n` an odd `G` is replaced by its even part.
    pub fn new(group: PermGroup, ambient: Ambient) -> CosetSpace {
        let group = if ambient.contains_group(&group) {
            group
        } else {
            group.even_part()
        };
        CosetSpace { group, ambient }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    /// `|S : G ∩ S|`.
    pub fn index(&self) -> u128 {
        self.ambient.order(self.degree()) / self.group.order()
    }

    fn check(&self, x: &Permutation) -> Result<(), CosetError> {
        if x.degree() != self.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: x.degree(),
            }
            .into());
        }
        if !self.ambient.contains(x) {
            return Err(CosetError::NotInAmbient(x.to_string()));
        }
        Ok(())
    }

    /// Least element of `Gx` by greedy descent through the stabilizer chain.
    pub fn canonical_rep(&self, x: &Permutation) -> Permutation {
        self.group.chain().canonical_coset_rep(x)
    }

    pub fn coset(&self, x: &Permutation) -> Result<Coset, CosetError> {
        self.check(x)?;
        Ok(Coset {
            rep: self.canonical_rep(x),
        })
    }

    pub fn tuple(&self, reps: &[Permutation]) -> Result<CosetTuple, CosetError> {
        if reps.len() > MAX_TUPLE_LEN {
            return Err(CosetError::TupleTooLong(reps.len()));
        }
        let entries = reps.iter().map(|x| self.coset(x)).collect::<Result<_, _>>()?;
        Ok(CosetTuple { entries })
    }

    /// `(Gx_1, …, Gx_m)·s = (Gx_1 s, …, Gx_m s)`.
    pub fn act(&self, t: &CosetTuple, s: &Permutation) -> Result<CosetTuple, CosetError> {
        self.check(s)?;
        Ok(CosetTuple {
            entries: t
                .entries
                .iter()
                .map(|c| Coset {
                    rep: self.canonical_rep(&c.rep.mul(s)),
                })
                .collect(),
        })
    }

    /// Stabilizer of the tuple in `S`: `S ∩ ⋂ G^{x_i}`.
    pub fn stabilizer(&self, t: &CosetTuple, cap: u128) -> Result<PermGroup, CosetError> {
        let reps = t.reps();
        if reps.is_empty() {
            return Ok(self.ambient.group(self.degree()));
        }
        Ok(self.group.intersect_conjugates(&reps, cap)?)
    }

    /// Whether the tuple is a regular point of `Ω^m`.
    pub fn tuple_stabilizer_is_trivial(&self, t: &CosetTuple, cap: u128) -> Result<bool, CosetError> {
        let reps = t.reps();
        let Some((first, rest)) = reps.split_first() else {
            return Ok(self.ambient.order(self.degree()) == 1);
        };
        let inverses: Vec<Permutation> = rest.iter().map(Permutation::inverse).collect();
        let chain = self.group.chain();
        let nontrivial = self.group.elements(cap)?.any(|g| {
            let e = g.conj(first);
            !e.is_identity()
                && rest
                    .iter()
                    .zip(&inverses)
                    .all(|(x, xi)| chain.contains_conjugated(x, xi, &e))
        });
        Ok(!nontrivial)
    }

    /// Some `g ∈ S` with `t1·g = t2`, found among `g = x_1⁻¹ h y_1`, `h ∈ G`.
    pub fn same_orbit(&self, t1: &CosetTuple, t2: &CosetTuple, cap: u128) -> Result<Option<Permutation>, CosetError> {
        if t1.len() != t2.len() {
            return Err(CosetError::LengthMismatch(t1.len(), t2.len()));
        }
        if t1.is_empty() {
            return Ok(Some(Permutation::identity(self.degree())));
        }
        let xs = t1.reps();
        let ys = t2.reps();
        let x1_inv = xs[0].inverse();
        let y_inv: Vec<Permutation> = ys.iter().map(Permutation::inverse).collect();
        let chain = self.group.chain();
        for h in self.group.elements(cap)? {
            let g = x1_inv.mul(&h).mul(&ys[0]);
            if !self.ambient.contains(&g) {
                continue;
            }
            let ok = (1..xs.len()).all(|i| chain.contains(&xs[i].mul(&g).mul(&y_inv[i])));
            if ok {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    /// Every coset, by breadth-first search from `G` under the ambient
    /// generators. Order is discovery order, so it is deterministic.
    pub fn enumerate(&self, cap: u128) -> Result<Vec<Coset>, CosetError> {
        let index = self.index();
        if index > cap {
            return Err(CosetError::IndexCapExceeded { index, cap });
        }
        let gens = self.ambient.group(self.degree()).generators().to_vec();
        let start = self.canonical_rep(&Permutation::identity(self.degree()));
        let mut seen: HashMap<Permutation, usize> = HashMap::new();
        seen.insert(start.clone(), 0);
        let mut out = vec![Coset { rep: start }];
        let mut k = 0;
        while k < out.len() {
            for s in &gens {
                let r = self.canonical_rep(&out[k].rep.mul(s));
                if !seen.contains_key(&r) {
                    seen.insert(r.clone(), out.len());
                    out.push(Coset { rep: r });
                }
            }
            k += 1;
        }
        Ok(out)
    }

    /// Largest normal subgroup of `S` inside `G`.
    pub fn core(&self, cap: u128) -> Result<PermGroup, CosetError> {
        let sgens = self.ambient.group(self.degree()).generators().to_vec();
        let mut core = self.group.clone();
        loop {
            let mut conj = vec![Permutation::identity(self.degree())];
            conj.extend(sgens.iter().cloned());
            let next = core.intersect_conjugates(&conj, cap)?;
            if next.order() == core.order() {
                return Ok(core);
            }
            core = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn agl15() -> PermGroup {
        PermGroup::from_cycle_strings(5, &["(1,2,3,4,5)", "(2,3,5,4)"]).unwrap()
    }

    #[test]
    fn canonical_rep_examples() {
        let full = CosetSpace::new(PermGroup::symmetric(5), Ambient::Symmetric);
        assert!(full.canonical_rep(&p("(1,3)(2,5)", 5)).is_identity());
        let two = CosetSpace::new(PermGroup::from_cycle_strings(5, &["(1,2)"]).unwrap(), Ambient::Symmetric);
        assert!(two.canonical_rep(&p("(1,2)", 5)).is_identity());
        // Bucket S_5 by membership to obtain the 6 cosets of AGL(1,5).
        let space = CosetSpace::new(agl15(), Ambient::Symmetric);
        let sym: Vec<Permutation> = PermGroup::symmetric(5).elements(200).unwrap().collect();
        let mut buckets: Vec<Permutation> = Vec::new();
        for x in &sym {
            let known = buckets
                .iter()
                .any(|b| agl15().has(&x.mul(&b.inverse())));
            if !known {
                buckets.push(x.clone());
            }
        }
        assert_eq!(buckets.len(), 6);
        let reps: HashSet<Permutation> = sym.iter().map(|x| space.canonical_rep(x)).collect();
        assert_eq!(reps.len(), 6);
    }

    #[test]
    fn act_examples() {
        let space = CosetSpace::new(agl15(), Ambient::Symmetric);
        let id = Permutation::identity(5);
        let a = p("(1,2)", 5);
        let t = space.tuple(&[id.clone(), a.clone()]).unwrap();
        assert_eq!(space.act(&t, &id).unwrap(), t);
        let moved = space.act(&t, &a.inverse()).unwrap();
        assert_eq!(moved, space.tuple(&[a.inverse(), id.clone()]).unwrap());
        let single = space.tuple(&[id]).unwrap();
        let visited: HashSet<CosetTuple> = PermGroup::symmetric(5)
            .elements(200)
            .unwrap()
            .map(|s| space.act(&single, &s).unwrap())
            .collect();
        assert_eq!(visited.len(), 6);
        assert_eq!(space.enumerate(100).unwrap().len(), 6);
    }

    #[test]
    fn regular_tuple_examples() {
        let space = CosetSpace::new(agl15(), Ambient::Symmetric);
        let id = Permutation::identity(5);
        let all_g = space.tuple(&[id.clone(), id.clone(), id.clone()]).unwrap();
        assert!(!space.tuple_stabilizer_is_trivial(&all_g, 1_000).unwrap());
        let t = space.tuple(&[id, p("(1,2)", 5), p("(1,3)", 5)]).unwrap();
        assert!(space.tuple_stabilizer_is_trivial(&t, 1_000).unwrap());
        assert!(space.stabilizer(&t, 1_000).unwrap().is_trivial());
    }

    #[test]
    fn same_orbit_examples() {
        let space = CosetSpace::new(agl15(), Ambient::Symmetric);
        let id = Permutation::identity(5);
        let t = space.tuple(&[id.clone(), p("(1,2)", 5)]).unwrap();
        let g = space.same_orbit(&t, &t, 1_000).unwrap().unwrap();
        assert_eq!(space.act(&t, &g).unwrap(), t);
        let s = p("(2,4,5)", 5);
        let single = space.tuple(&[id]).unwrap();
        let moved = space.act(&single, &s).unwrap();
        let g = space.same_orbit(&single, &moved, 1_000).unwrap().unwrap();
        assert_eq!(space.act(&single, &g).unwrap(), moved);
    }

    #[test]
    fn tuples_are_capped() {
        let space = CosetSpace::new(agl15(), Ambient::Symmetric);
        let id = Permutation::identity(5);
        assert_eq!(
            space.tuple(&vec![id; 6]),
            Err(CosetError::TupleTooLong(6))
        );
    }

    #[test]
    fn alternating_rejects_odd_reps() {
        let g = PermGroup::from_cycle_strings(5, &["(1,2,3,4,5)"]).unwrap();
        let space = CosetSpace::new(g, Ambient::Alternating);
        assert!(matches!(
            space.coset(&p("(1,2)", 5)),
            Err(CosetError::NotInAmbient(_))
        ));
        assert_eq!(space.index(), 12);
        assert_eq!(space.enumerate(100).unwrap().len(), 12);
    }

    #[test]
    fn core_of_agl_is_trivial() {
        let space = CosetSpace::new(agl15(), Ambient::Symmetric);
        assert!(space.core(1_000).unwrap().is_trivial());
        let a5 = CosetSpace::new(PermGroup::alternating(5), Ambient::Symmetric);
        assert_eq!(a5.core(1_000).unwrap().order(), 60);
    }
}

//! Permutation groups given by generators.

mod blocks;
mod chain;
mod series;

use std::sync::OnceLock;

use thiserror::Error;

use crate::perm::{PermError, Permutation};

pub use blocks::BlockSystem;
pub use chain::{ChainElements, StabilizerChain};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: u128, cap: u128 },
    #[error("group is not transitive")]
    NotTransitive,
}

/// A permutation group: generators plus a stabilizer chain built on first use.
///
/// The chain sits in a [`OnceLock`], so concurrent first queries build it
/// exactly once and every later query is read-only.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabilizerChain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<PermGroup, GroupError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree.into());
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                }
                .into());
            }
        }
        Ok(PermGroup::from_parts(degree, generators))
    }

    /// Identity generators are dropped; callers guarantee the degrees agree.
    pub(crate) fn from_parts(degree: usize, generators: Vec<Permutation>) -> PermGroup {
        PermGroup {
            degree,
            generators: generators.into_iter().filter(|g| !g.is_identity()).collect(),
            chain: OnceLock::new(),
        }
    }

    pub fn from_cycle_strings<S: AsRef<str>>(degree: usize, gens: &[S]) -> Result<PermGroup, GroupError> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse_cycles(s.as_ref(), degree))
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(degree, gens)
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::from_parts(degree, Vec::new())
    }

    /// `S_n` generated by `(1,2)` and `(1,2,…,n)`.
    pub fn symmetric(degree: usize) -> PermGroup {
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Permutation::from_cycles(degree, &[vec![1, 2]]).unwrap());
        }
        if degree >= 3 {
            gens.push(Permutation::from_cycles(degree, &[(1..=degree).collect()]).unwrap());
        }
        PermGroup::from_parts(degree, gens)
    }

    /// `A_n` generated by `(1,2,3)` and an `(n-1)`- or `n`-cycle, whichever is even.
    pub fn alternating(degree: usize) -> PermGroup {
        let mut gens = Vec::new();
        if degree >= 3 {
            gens.push(Permutation::from_cycles(degree, &[vec![1, 2, 3]]).unwrap());
        }
        if degree >= 4 {
            let cycle: Vec<usize> = if degree % 2 == 1 {
                (1..=degree).collect()
            } else {
                (2..=degree).collect()
            };
            gens.push(Permutation::from_cycles(degree, &[cycle]).unwrap());
        }
        PermGroup::from_parts(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabilizerChain {
        self.chain
            .get_or_init(|| StabilizerChain::new(self.degree, &self.generators))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, GroupError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            }
            .into());
        }
        Ok(self.chain().contains(p))
    }

    pub(crate) fn has(&self, p: &Permutation) -> bool {
        self.chain().contains(p)
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.has(g))
    }

    /// Whether every generator of `self` conjugated by `x` lands in `self`.
    pub fn is_normalized_by(&self, x: &Permutation) -> bool {
        x.degree() == self.degree && self.generators.iter().all(|g| self.has(&g.conj(x)))
    }

    pub fn same_group(&self, other: &PermGroup) -> bool {
        self.is_subgroup_of(other) && self.order() == other.order()
    }

    pub fn is_in_alternating(&self) -> bool {
        self.generators.iter().all(Permutation::is_even)
    }

    /// Every element exactly once; fails when the order exceeds `cap`.
    pub fn elements(&self, cap: u128) -> Result<ChainElements<'_>, GroupError> {
        let order = self.order();
        if order > cap {
            return Err(GroupError::CapExceeded { order, cap });
        }
        Ok(self.chain().elements())
    }

    /// `G^x = x⁻¹ G x`.
    pub fn conjugate(&self, x: &Permutation) -> PermGroup {
        PermGroup::from_parts(self.degree, self.generators.iter().map(|g| g.conj(x)).collect())
    }

    /// Orbits (1-based), each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree;
        let mut label = vec![usize::MAX; n];
        let mut out = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            label[start] = id;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                let p = orbit[k];
                for g in &self.generators {
                    let q = g.apply(p);
                    if label[q] == usize::MAX {
                        label[q] = id;
                        orbit.push(q);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit.into_iter().map(|p| p + 1).collect());
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Every non-identity element is fixed-point-free, i.e. every orbit has
    /// length `|G|` (orbit–stabilizer).
    pub fn is_semiregular(&self) -> bool {
        let order = self.order();
        self.orbits().iter().all(|o| o.len() as u128 == order)
    }

    pub fn is_regular(&self) -> bool {
        self.is_transitive() && self.is_semiregular()
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Abelian with every non-identity element of the same prime order.
    pub fn is_elementary_abelian(&self) -> bool {
        if self.is_trivial() || !self.is_abelian() {
            return false;
        }
        let p = self.generators[0].order();
        is_prime(p) && self.generators.iter().all(|g| g.order() == p)
    }

    /// An odd generator, if any; `None` means the group lies in `A_n`.
    pub fn find_odd_element(&self) -> Option<Permutation> {
        self.generators.iter().find(|g| !g.is_even()).cloned()
    }

    /// `∩ G^{x_i}` for the given conjugators, computed by enumerating
    /// `G^{x_1}` and testing membership in the others.
    pub fn intersect_conjugates(&self, conjugators: &[Permutation], cap: u128) -> Result<PermGroup, GroupError> {
        for x in conjugators {
            if x.degree() != self.degree {
                return Err(PermError::DegreeMismatch {
                    left: self.degree,
                    right: x.degree(),
                }
                .into());
            }
        }
        let Some((first, rest)) = conjugators.split_first() else {
            return Ok(self.clone());
        };
        let inverses: Vec<Permutation> = rest.iter().map(Permutation::inverse).collect();
        let chain = self.chain();
        let survivors = self.elements(cap)?.map(|g| g.conj(first)).filter(|e| {
            rest.iter()
                .zip(&inverses)
                .all(|(x, xi)| chain.contains_conjugated(x, xi, e))
        });
        Ok(generate_incrementally(self.degree, survivors))
    }

    /// `G ∩ H` by enumerating the smaller group.
    pub fn intersect(&self, other: &PermGroup, cap: u128) -> Result<PermGroup, GroupError> {
        if self.degree != other.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            }
            .into());
        }
        let (small, large) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let survivors = small.elements(cap)?.filter(|g| large.has(g));
        Ok(generate_incrementally(self.degree, survivors))
    }

    /// Projection onto an invariant set of points (1-based), relabelled to
    /// `1..=points.len()` in increasing order.
    pub fn restrict(&self, points: &[usize]) -> PermGroup {
        let mut sorted = points.to_vec();
        sorted.sort_unstable();
        let mut map = vec![None; self.degree];
        for (i, &p) in sorted.iter().enumerate() {
            map[p - 1] = Some(i);
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.transport(&map, sorted.len()))
            .collect();
        PermGroup::from_parts(sorted.len(), gens)
    }

    /// `G ∩ A_n`, from Schreier generators for the transversal `{1, o}`
    /// where `o` is the first odd generator.
    pub fn even_part(&self) -> PermGroup {
        let Some(odd) = self.find_odd_element() else {
            return self.clone();
        };
        let odd_inv = odd.inverse();
        let mut gens = Vec::new();
        for s in &self.generators {
            if s.is_even() {
                gens.push(s.clone());
                gens.push(odd.mul(s).mul(&odd_inv));
            } else {
                gens.push(s.mul(&odd_inv));
                gens.push(odd.mul(s));
            }
        }
        PermGroup::from_parts(self.degree, gens)
    }

    pub(crate) fn group_with(&self, extra: impl IntoIterator<Item = Permutation>) -> PermGroup {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        PermGroup::from_parts(self.degree, gens)
    }
}

/// Group generated by a stream of elements, adding an element as generator
/// only when it is not already generated.
fn generate_incrementally(degree: usize, elements: impl Iterator<Item = Permutation>) -> PermGroup {
    let mut group = PermGroup::trivial(degree);
    for e in elements {
        if !e.is_identity() && !group.has(&e) {
            group = group.group_with([e]);
        }
    }
    group
}

pub(crate) fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(n, gens).unwrap()
    }

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    fn agl15() -> PermGroup {
        group(5, &["(1,2,3,4,5)", "(2,3,5,4)"])
    }

    fn s3_wr_s2() -> PermGroup {
        group(6, &["(1,2,3)", "(1,2)", "(4,5,6)", "(4,5)", "(1,4)(2,5)(3,6)"])
    }

    #[test]
    fn order_examples() {
        assert_eq!(group(5, &["(1,2)", "(1,2,3,4,5)"]).order(), 120);
        assert_eq!(agl15().order(), 20);
        assert!(group(4, &["(1,2,3,4)"]).contains(&p("(1,3)(2,4)", 4)).unwrap());
        assert!(matches!(
            agl15().contains(&Permutation::identity(4)),
            Err(GroupError::Perm(PermError::DegreeMismatch { .. }))
        ));
    }

    #[test]
    fn standard_groups() {
        for n in 1..=7u128 {
            let fact: u128 = (1..=n).product();
            assert_eq!(PermGroup::symmetric(n as usize).order(), fact);
            let alt = PermGroup::alternating(n as usize);
            assert!(alt.is_in_alternating());
            assert_eq!(alt.order(), if n >= 2 { fact / 2 } else { 1 });
        }
    }

    #[test]
    fn element_examples() {
        let triv: Vec<_> = PermGroup::trivial(4).elements(10).unwrap().collect();
        assert_eq!(triv, vec![Permutation::identity(4)]);
        let two: HashSet<_> = group(3, &["(1,2)"]).elements(10).unwrap().collect();
        assert_eq!(two, HashSet::from([Permutation::identity(3), p("(1,2)", 3)]));
        let agl: Vec<_> = agl15().elements(100).unwrap().collect();
        assert_eq!(agl.len(), 20);
        assert_eq!(agl.iter().collect::<HashSet<_>>().len(), 20);
        assert_eq!(agl.iter().filter(|g| g.image(1) == 1).count(), 4);
        assert!(matches!(
            agl15().elements(19),
            Err(GroupError::CapExceeded { order: 20, cap: 19 })
        ));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(
            group(5, &["(1,2)(3,4)"]).orbits(),
            vec![vec![1, 2], vec![3, 4], vec![5]]
        );
        assert!(group(5, &["(1,2,3,4,5)"]).is_regular());
        assert!(!group(3, &["(1,2)"]).is_semiregular());
        assert!(group(6, &["(1,2,3)(4,5,6)"]).is_semiregular());
        assert!(!group(6, &["(1,2,3)(4,5,6)"]).is_regular());
        assert!(PermGroup::trivial(1).is_regular());
    }

    #[test]
    fn semiregular_matches_enumeration() {
        let cases = [
            group(6, &["(1,2,3)(4,5,6)"]),
            group(6, &["(1,2)(3,4)(5,6)", "(1,3,5)(2,4,6)"]),
            group(6, &["(1,2)(3,4)", "(5,6)"]),
            group(8, &["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)"]),
            agl15(),
        ];
        for g in cases {
            let by_enumeration = g
                .elements(1_000)
                .unwrap()
                .filter(|e| !e.is_identity())
                .all(|e| e.support().count() == g.degree());
            assert_eq!(g.is_semiregular(), by_enumeration, "{g:?}");
        }
    }

    #[test]
    fn intersection_examples() {
        let g = s3_wr_s2();
        assert!(g.intersect(&g, 1_000).unwrap().same_group(&g));
        let a = p("(1,2,3,4,5,6)", 6);
        let r = g
            .intersect_conjugates(&[Permutation::identity(6), a.clone(), a.mul(&a)], 1_000)
            .unwrap();
        assert_eq!(r.order(), 2);
        assert_eq!(r.generators(), &[p("(1,4)(2,5)(3,6)", 6)]);
        let agl = agl15();
        let i = agl
            .intersect_conjugates(&[Permutation::identity(5), p("(1,2)", 5), p("(1,3)", 5)], 1_000)
            .unwrap();
        assert!(i.is_trivial());
    }

    #[test]
    fn intersection_divides_orders() {
        let g = agl15();
        let h = group(5, &["(1,2)", "(3,4,5)"]);
        let i = g.intersect(&h, 1_000).unwrap();
        assert!(i.is_subgroup_of(&g) && i.is_subgroup_of(&h));
        let gcd = {
            let (mut a, mut b) = (g.order(), h.order());
            while b != 0 {
                (a, b) = (b, a % b);
            }
            a
        };
        assert_eq!(gcd % i.order(), 0);
    }

    #[test]
    fn odd_element_examples() {
        assert_eq!(
            PermGroup::symmetric(5).find_odd_element(),
            Some(p("(1,2)", 5))
        );
        assert_eq!(group(3, &["(1,2,3)"]).find_odd_element(), None);
        assert_eq!(agl15().find_odd_element(), Some(p("(2,3,5,4)", 5)));
    }

    #[test]
    fn even_part_has_index_two() {
        let g = agl15();
        let e = g.even_part();
        assert_eq!(e.order(), 10);
        assert!(e.is_in_alternating());
        assert_eq!(PermGroup::symmetric(6).even_part().order(), 360);
    }

    #[test]
    fn restrict_relabels_orbit() {
        let g = group(7, &["(2,5,7)", "(1,3)"]);
        let r = g.restrict(&[2, 5, 7]);
        assert_eq!(r.degree(), 3);
        assert_eq!(r.generators(), &[p("(1,2,3)", 3)]);
    }

    #[test]
    fn elementary_abelian_detection() {
        let e8 = group(8, &["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)"]);
        assert!(e8.is_elementary_abelian());
        assert!(!group(6, &["(1,2,3,4,5,6)"]).is_elementary_abelian());
        assert!(group(5, &["(1,2,3,4,5)"]).is_elementary_abelian());
    }
}

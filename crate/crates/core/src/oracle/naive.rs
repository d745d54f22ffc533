//! Element sets by plain closure. Nothing here touches the stabilizer chain.

use std::collections::HashSet;

use crate::ambient::Ambient;
use crate::perm::Permutation;

use super::OracleError;

/// Every element of a group, in closure order, plus a hash set for membership.
#[derive(Debug, Clone)]
pub(crate) struct ElementSet {
    pub(crate) degree: usize,
    pub(crate) elements: Vec<Permutation>,
    set: HashSet<Permutation>,
}

impl ElementSet {
    /// Closure of `gens` under right multiplication.
    pub(crate) fn closure(degree: usize, gens: &[Permutation], cap: u128) -> Result<ElementSet, OracleError> {
        let id = Permutation::identity(degree);
        let mut set = HashSet::new();
        set.insert(id.clone());
        let mut elements = vec![id];
        let mut k = 0;
        while k < elements.len() {
            for g in gens {
                let f = elements[k].mul(g);
                if !set.contains(&f) {
                    if elements.len() as u128 >= cap {
                        return Err(OracleError::CapExceeded { cap: "group", limit: cap });
                    }
                    set.insert(f.clone());
                    elements.push(f);
                }
            }
            k += 1;
        }
        Ok(ElementSet { degree, elements, set })
    }

    pub(crate) fn order(&self) -> usize {
        self.elements.len()
    }

    pub(crate) fn contains(&self, p: &Permutation) -> bool {
        self.set.contains(p)
    }

    /// Elements lying in the ambient group.
    pub(crate) fn restrict_to(&self, ambient: Ambient) -> ElementSet {
        let elements: Vec<Permutation> = self.elements.iter().filter(|g| ambient.contains(g)).cloned().collect();
        let set = elements.iter().cloned().collect();
        ElementSet {
            degree: self.degree,
            elements,
            set,
        }
    }

    /// `|∩ G^{x_i}|`, counting `e = x_1⁻¹ g x_1` with `x_i e x_i⁻¹ ∈ G`.
    pub(crate) fn conjugate_intersection_order(&self, xs: &[Permutation]) -> usize {
        let Some((first, rest)) = xs.split_first() else {
            return self.order();
        };
        let first_inv = first.inverse();
        let rest_inv: Vec<Permutation> = rest.iter().map(Permutation::inverse).collect();
        self.elements
            .iter()
            .filter(|g| {
                let e = first_inv.mul(g).mul(first);
                rest.iter()
                    .zip(&rest_inv)
                    .all(|(x, xi)| self.contains(&x.mul(&e).mul(xi)))
            })
            .count()
    }

    /// Whether `(G w_i) s = (G v_i)` for some `s` in the ambient, with
    /// candidates `s = w_1⁻¹ h v_1`, `h ∈ G`. `self` is taken to be `G ∩ S`.
    pub(crate) fn same_orbit(&self, ambient: Ambient, ws: &[Permutation], vs: &[Permutation]) -> bool {
        if ws.is_empty() {
            return true;
        }
        let w1_inv = ws[0].inverse();
        let vs_inv: Vec<Permutation> = vs.iter().map(Permutation::inverse).collect();
        self.elements.iter().any(|h| {
            let s = w1_inv.mul(h).mul(&vs[0]);
            ambient.contains(&s) && (1..ws.len()).all(|i| self.contains(&ws[i].mul(&s).mul(&vs_inv[i])))
        })
    }

    /// Least element of `G x`.
    pub(crate) fn coset_min(&self, x: &Permutation) -> Permutation {
        self.elements.iter().map(|h| h.mul(x)).min().unwrap()
    }
}

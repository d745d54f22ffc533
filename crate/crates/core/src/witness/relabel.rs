use crate::group::PermGroup;
use crate::perm::Permutation;

use super::Construction;

/// A renaming of the points; `order[i]` becomes point `i + 1`.
pub(crate) struct Relabel {
    forward: Permutation,
    backward: Permutation,
}

impl Relabel {
    pub(crate) fn from_order(order: &[usize]) -> Relabel {
        let mut images = vec![0; order.len()];
        for (i, &p) in order.iter().enumerate() {
            images[p - 1] = i + 1;
        }
        let forward = Permutation::from_images(&images).expect("order lists every point once");
        let backward = forward.inverse();
        Relabel { forward, backward }
    }

    pub(crate) fn group(&self, g: &PermGroup) -> PermGroup {
        g.conjugate(&self.forward)
    }

    /// From new labels back to old.
    pub(crate) fn back(&self, x: &Permutation) -> Permutation {
        x.conj(&self.backward)
    }

    pub(crate) fn back_construction(&self, c: Construction) -> Construction {
        let back_all = |v: Vec<Permutation>| v.iter().map(|x| self.back(x)).collect::<Vec<_>>();
        Construction {
            conjugators: back_all(c.conjugators),
            tuples: c.tuples.map(|ts| ts.into_iter().map(back_all).collect()),
            trace: c.trace,
            overgroup: c.overgroup.conjugate(&self.backward),
            sigma: c.sigma.map(|s| self.back(&s)),
        }
    }
}

/// `p` acts on `1..=k`; the result moves `points[i - 1]` as `p` moves `i`.
pub(crate) fn embed(p: &Permutation, points: &[usize], degree: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=degree).collect();
    for (i, &pt) in points.iter().enumerate() {
        images[pt - 1] = points[p.image(i + 1) - 1];
    }
    Permutation::from_images(&images).expect("embedding of a permutation is a permutation")
}

/// A cycle given by 1-based points.
pub(crate) fn cycle(degree: usize, points: &[usize]) -> Permutation {
    Permutation::from_cycles(degree, &[points.to_vec()]).expect("valid cycle")
}

/// `(1, 2, …, n)`.
pub(crate) fn long_cycle(degree: usize) -> Permutation {
    cycle(degree, &(1..=degree).collect::<Vec<_>>())
}

/// Product of permutations, left to right.
pub(crate) fn product<'a>(degree: usize, factors: impl IntoIterator<Item = &'a Permutation>) -> Permutation {
    factors
        .into_iter()
        .fold(Permutation::identity(degree), |acc, f| acc.mul(f))
}

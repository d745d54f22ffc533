use crate::ambient::Ambient;
use crate::config::Config;
use crate::group::PermGroup;
use crate::perm::Permutation;

use super::certificate::WitnessCertificate;
use super::primitive::search;
use super::relabel::{cycle, embed, product, Relabel};
use super::solve::{certify, check_solvable, finish};
use super::{Construction, WitnessError};

/// Certificate for an intransitive solvable group.
pub fn intransitive_witness(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<WitnessCertificate, WitnessError> {
    check_solvable(group)?;
    if group.is_transitive() {
        return Err(WitnessError::NotIntransitive);
    }
    let c = intransitive_construct(group, ambient, config)?;
    finish(group, ambient, c, config)
}

pub(crate) fn intransitive_construct(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<Construction, WitnessError> {
    let n = group.degree();
    let orbits = group.orbits();
    let moving: Vec<&Vec<usize>> = orbits.iter().filter(|o| o.len() > 1).collect();
    if moving.iter().all(|o| o.len() >= 5) {
        return per_orbit(group, &moving, ambient, config);
    }
    let small = moving
        .iter()
        .filter(|o| o.len() <= 4)
        .min_by_key(|o| o.len())
        .expect("some orbit has size 2, 3 or 4");
    let k = small.len();
    if n - k < 5 {
        return search(group, ambient, config, "intransitive-search");
    }
    let rest: Vec<usize> = (1..=n).filter(|p| !small.contains(p)).collect();
    let mut order = (*small).clone();
    order.extend(&rest);
    let relabel = Relabel::from_order(&order);
    let g = relabel.group(group);
    let built = split_orbit(&g, k, config)?;
    Ok(relabel.back_construction(built))
}

/// Every moved orbit has size at least 5: certify each projection and
/// multiply entrywise.
fn per_orbit(group: &PermGroup, orbits: &[&Vec<usize>], ambient: Ambient, config: &Config) -> Result<Construction, WitnessError> {
    let n = group.degree();
    let mut columns: Vec<Vec<Permutation>> = Vec::new();
    let mut trace = vec!["intransitive-orbits".to_string()];
    for orbit in orbits {
        let local = group.restrict(orbit);
        let c = certify(&local, ambient, config)?;
        columns.push(c.conjugators.iter().map(|x| embed(x, orbit, n)).collect());
        trace.extend(c.trace);
    }
    let width = columns.iter().map(Vec::len).max().unwrap_or(1);
    let id = Permutation::identity(n);
    let conjugators = (0..width)
        .map(|i| product(n, columns.iter().map(|col| col.get(i).unwrap_or(&id))))
        .collect();
    Ok(Construction {
        conjugators,
        tuples: None,
        trace,
        overgroup: group.clone(),
        sigma: group.find_odd_element(),
    })
}

/// Orbit `{1..k}` with `k ∈ {2,3,4}` and complement `{k+1..n}` of size at
/// least 5. Works in `S_k × G_1`, `G_1` the projection on the complement.
fn split_orbit(g: &PermGroup, k: usize, config: &Config) -> Result<Construction, WitnessError> {
    let n = g.degree();
    let rest: Vec<usize> = (k + 1..=n).collect();
    let g1 = g.restrict(&rest);
    let inner = certify(&g1, Ambient::Symmetric, config)?;
    let lift = |entries: &[Permutation]| -> Vec<Permutation> {
        let mut e: Vec<Permutation> = entries.iter().map(|x| embed(x, &rest, n)).collect();
        e.resize(5, Permutation::identity(n));
        lift_entries(n, k, &e)
    };
    let conjugators = lift(&inner.conjugators);
    // Tuples of G_1 lift the same way once their first entry is the identity.
    let tuples = inner.tuples.as_ref().map(|ts| {
        ts.iter()
            .map(|t| {
                let first_inv = t[0].inverse();
                let normalized: Vec<Permutation> = t.iter().map(|x| x.mul(&first_inv)).collect();
                lift(&normalized)
            })
            .collect()
    });
    let mut extra: Vec<Permutation> = g1.generators().iter().map(|x| embed(x, &rest, n)).collect();
    extra.push(cycle(n, &[1, 2]));
    if k > 2 {
        extra.push(cycle(n, &(1..=k).collect::<Vec<_>>()));
    }
    let overgroup = PermGroup::new(n, extra)?;
    let mut trace = vec![format!("intransitive-k{k}")];
    trace.extend(inner.trace);
    Ok(Construction {
        conjugators,
        tuples,
        trace,
        overgroup,
        sigma: Some(cycle(n, &[1, 2])),
    })
}

/// `[(), x, y, z, t]` on the complement, as five conjugators for `S_k × G_1`.
fn lift_entries(n: usize, k: usize, e: &[Permutation]) -> Vec<Permutation> {
    let c = |pts: &[usize]| cycle(n, pts);
    let ts: [Vec<Permutation>; 5] = match k {
        2 => {
            let s = c(&[2, 3]);
            [vec![], vec![s.clone()], vec![s.clone()], vec![s.clone()], vec![s]]
        }
        3 => [vec![], vec![c(&[1, 4])], vec![c(&[1, 4]), c(&[2, 5])], vec![], vec![]],
        _ => [
            vec![],
            vec![c(&[1, 5])],
            vec![c(&[1, 5]), c(&[2, 6])],
            vec![c(&[1, 5]), c(&[2, 6]), c(&[3, 7])],
            vec![],
        ],
    };
    e.iter()
        .zip(ts.iter())
        .enumerate()
        .map(|(i, (x, tail))| if i == 0 { x.clone() } else { x.mul(&product(n, tail)) })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lift_shapes() {
        let n = 8;
        let id = Permutation::identity(n);
        let e = vec![id.clone(); 5];
        let two: Vec<String> = lift_entries(n, 2, &e).iter().map(|x| x.to_string()).collect();
        assert_eq!(two, ["()", "(2,3)", "(2,3)", "(2,3)", "(2,3)"]);
        let three: Vec<String> = lift_entries(n, 3, &e).iter().map(|x| x.to_string()).collect();
        assert_eq!(three, ["()", "(1,4)", "(1,4)(2,5)", "()", "()"]);
        let four: Vec<String> = lift_entries(n, 4, &e).iter().map(|x| x.to_string()).collect();
        assert_eq!(four, ["()", "(1,5)", "(1,5)(2,6)", "(1,5)(2,6)(3,7)", "()"]);
    }
}

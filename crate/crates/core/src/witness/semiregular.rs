use crate::ambient::Ambient;
use crate::config::Config;
use crate::group::PermGroup;
use crate::oracle::min_base_search;
use crate::perm::Permutation;

use super::relabel::{cycle, embed};
use super::WitnessError;

/// Some `x` with `G ∩ G^x = 1` for semiregular `G` of degree at least 5.
pub fn semiregular_witness(group: &PermGroup, config: &Config) -> Result<Permutation, WitnessError> {
    if group.degree() < 5 {
        return Err(WitnessError::DegreeTooSmall(group.degree()));
    }
    if !group.is_semiregular() {
        return Err(WitnessError::NotSemiregular);
    }
    Ok(semiregular_inner(group, config)?.0)
}

/// The witness together with the trace tags of the path taken.
pub(crate) fn semiregular_inner(group: &PermGroup, config: &Config) -> Result<(Permutation, Vec<String>), WitnessError> {
    let n = group.degree();
    if group.is_trivial() {
        return Ok((Permutation::identity(n), vec!["trivial".into()]));
    }
    // Every orbit is regular, so a witness on one orbit already kills every
    // nontrivial element; orbits of size at least 5 all contribute.
    let mut x = Permutation::identity(n);
    let mut tags = vec!["semiregular".to_string()];
    for orbit in group.orbits().iter().filter(|o| o.len() >= 5) {
        let local = group.restrict(orbit);
        let (y, tag) = regular_witness(&local, config)?;
        x = x.mul(&embed(&y, orbit, n));
        tags.push(tag.to_string());
    }
    if !x.is_identity() && group.intersect_conjugates(&[Permutation::identity(n), x.clone()], config.group_cap)?.is_trivial() {
        return Ok((x, tags));
    }
    let found = min_base_search(group, Ambient::Symmetric, 2, config)?
        .ok_or_else(|| WitnessError::SearchExhausted("no single conjugator found for a semiregular group".into()))?;
    tags.push("semiregular-search".into());
    Ok((found.conjugators[1].clone(), tags))
}

/// Witness for a regular group of degree at least 5.
fn regular_witness(group: &PermGroup, config: &Config) -> Result<(Permutation, &'static str), WitnessError> {
    let n = group.degree();
    if n % 2 == 1 {
        return Ok((cycle(n, &[1, 2]), "regular-odd"));
    }
    if !group.is_elementary_abelian() {
        let g1 = match group.generators().iter().find(|g| g.order() > 2) {
            Some(g) => g.clone(),
            None => group
                .elements(config.group_cap)?
                .find(|g| g.order() > 2)
                .expect("a group of exponent 2 is elementary abelian"),
        };
        // Only an involution swapping 1 and 1·g1 could survive, and by
        // regularity the one element doing that is g1, of order > 2.
        return Ok((cycle(n, &[1, g1.image(1)]), "regular-order-gt-2"));
    }
    let found = min_base_search(group, Ambient::Symmetric, 2, config)?.ok_or_else(|| {
        WitnessError::SearchExhausted("no single conjugator found for an elementary abelian regular group".into())
    })?;
    Ok((found.conjugators[1].clone(), "regular-elementary-abelian-search"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::from_cycle_strings(n, gens).unwrap()
    }

    fn check(g: &PermGroup) -> Permutation {
        let x = semiregular_witness(g, &Config::default()).unwrap();
        let id = Permutation::identity(g.degree());
        assert!(g.intersect_conjugates(&[id, x.clone()], u128::MAX).unwrap().is_trivial());
        x
    }

    #[test]
    fn cyclic_examples() {
        assert_eq!(check(&group(5, &["(1,2,3,4,5)"])).to_string(), "(1,2)");
        assert_eq!(check(&group(6, &["(1,2,3,4,5,6)"])).to_string(), "(1,2)");
    }

    #[test]
    fn elementary_abelian_eight() {
        check(&group(
            8,
            &["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)"],
        ));
    }

    #[test]
    fn split_orbits() {
        check(&group(10, &["(1,2,3,4,5)(6,7,8,9,10)"]));
        check(&group(6, &["(1,2)(3,4)(5,6)"]));
        check(&group(12, &["(1,2,3)(4,5,6)(7,8,9)(10,11,12)"]));
    }

    #[test]
    fn rejects_non_semiregular() {
        assert_eq!(
            semiregular_witness(&group(5, &["(1,2,3)"]), &Config::default()),
            Err(WitnessError::NotSemiregular)
        );
    }
}

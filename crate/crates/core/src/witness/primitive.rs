use crate::ambient::Ambient;
use crate::config::Config;
use crate::group::PermGroup;
use crate::oracle::min_base_search;
use crate::perm::Permutation;

use super::certificate::WitnessCertificate;
use super::relabel::{cycle, long_cycle, Relabel};
use super::solve::{check_solvable, finish};
use super::{Construction, WitnessError};

/// Certificate of at most three conjugators for a primitive solvable group.
pub fn primitive_witness(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<WitnessCertificate, WitnessError> {
    check_solvable(group)?;
    if !group.is_transitive() {
        return Err(WitnessError::NotTransitive);
    }
    if !group.is_primitive()? {
        return Err(WitnessError::NotPrimitive);
    }
    let c = primitive_construct(group, ambient, config)?;
    finish(group, ambient, c, config)
}

pub(crate) fn primitive_construct(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<Construction, WitnessError> {
    let n = group.degree();
    if n == 5 || n == 7 {
        if let Some(c) = affine(group, config)? {
            return Ok(c);
        }
    }
    search(group, ambient, config, "primitive-search")
}

/// Shortest conjugator tuple the search finds, trying three first.
pub(crate) fn search(group: &PermGroup, ambient: Ambient, config: &Config, tag: &str) -> Result<Construction, WitnessError> {
    for k_max in [3, 5] {
        if let Some(found) = min_base_search(group, ambient, k_max, config)? {
            return Ok(Construction::plain(found.conjugators, group, tag));
        }
    }
    Err(WitnessError::SearchExhausted(format!(
        "no conjugator tuple found for a group of order {} within budget {}",
        group.order(),
        config.search_budget
    )))
}

/// `x ↦ ωx` on `Z_p`, with residue `v` at point `v + 1`.
fn multiplier(p: usize, omega: usize) -> Permutation {
    let images: Vec<usize> = (0..p).map(|v| v * omega % p + 1).collect();
    Permutation::from_images(&images).unwrap()
}

fn primitive_root(p: usize) -> usize {
    (2..p)
        .find(|&w| (1..p - 1).all(|e| (0..e).fold(1, |acc, _| acc * w % p) != 1))
        .expect("primes have primitive roots")
}

/// The standard `AGL(1,p)` and its point-1 stabilizer generator.
pub(crate) fn standard_affine(p: usize) -> (PermGroup, Permutation) {
    let b = multiplier(p, primitive_root(p));
    let g = PermGroup::new(p, vec![long_cycle(p), b.clone()]).unwrap();
    (g, b)
}

/// Prime degree: relabel a `p`-cycle of `G` to `(1,…,p)`; then `G` lies in
/// the standard `AGL(1,p)`, for which `(), (1,2), (1,3)` works.
fn affine(group: &PermGroup, config: &Config) -> Result<Option<Construction>, WitnessError> {
    let p = group.degree();
    let standard = long_cycle(p);
    let c = if group.has(&standard) {
        standard
    } else if let Some(g) = group.generators().iter().find(|g| g.order() == p as u64) {
        g.clone()
    } else {
        match group.elements(config.group_cap)?.find(|g| g.order() == p as u64) {
            Some(g) => g,
            None => return Ok(None),
        }
    };
    let order: Vec<usize> = (0..p as u64).map(|e| c.pow(e).image(1)).collect();
    let relabel = Relabel::from_order(&order);
    let (agl, b) = standard_affine(p);
    if !relabel.group(group).is_subgroup_of(&agl) {
        return Ok(None);
    }
    let conjugators = vec![Permutation::identity(p), cycle(p, &[1, 2]), cycle(p, &[1, 3])];
    let built = Construction {
        conjugators,
        tuples: None,
        trace: vec!["primitive-affine".into()],
        overgroup: agl,
        sigma: Some(b),
    };
    Ok(Some(relabel.back_construction(built)))
}

use crate::ambient::Ambient;
use crate::config::Config;
use crate::coset::CosetSpace;
use crate::group::PermGroup;
use crate::oracle::{find_regular_tuples, verify_certificate};
use crate::perm::Permutation;

use super::adjust::adjust_construction;
use super::certificate::{strings, WitnessCertificate};
use super::intransitive::intransitive_construct;
use super::padding::pad_reps;
use super::primitive::search;
use super::relabel::cycle;
use super::transitive::transitive_construct;
use super::{Construction, WitnessError};

/// At most five conjugates of `G` in the ambient group meeting trivially,
/// plus five regular 5-tuples in distinct orbits when they can be found.
pub fn solve(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<WitnessCertificate, WitnessError> {
    check_solvable(group)?;
    if !ambient.contains_group(group) {
        return Err(WitnessError::NotInAmbient);
    }
    let c = construct(group, ambient, config)?;
    finish(group, ambient, c, config)
}

pub(crate) fn check_solvable(group: &PermGroup) -> Result<(), WitnessError> {
    if group.degree() < 5 {
        return Err(WitnessError::DegreeTooSmall(group.degree()));
    }
    if !group.is_solvable() {
        return Err(WitnessError::NotSolvable);
    }
    Ok(())
}

fn construct(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<Construction, WitnessError> {
    let n = group.degree();
    if group.is_trivial() {
        Ok(Construction::plain(vec![Permutation::identity(n)], group, "trivial"))
    } else if group.is_transitive() {
        transitive_construct(group, ambient, config)
    } else {
        intransitive_construct(group, ambient, config)
    }
}

/// A construction for `group` whose conjugators lie in the ambient group
/// and have been checked against `group` itself. Used for recursion, so
/// `group` may have degree below 5 or lie outside `A_n`.
pub(crate) fn certify(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<Construction, WitnessError> {
    let c = construct(group, ambient, config)?;
    settle(group, ambient, c, config)
}

fn settle(group: &PermGroup, ambient: Ambient, c: Construction, config: &Config) -> Result<Construction, WitnessError> {
    let mut c = if ambient == Ambient::Alternating && c.conjugators.iter().any(|x| !x.is_even()) {
        make_even(group, c, config)?
    } else {
        c
    };
    dedupe(group, &mut c.conjugators);
    let id = Permutation::identity(group.degree());
    if c.conjugators.len() <= 5
        && c.conjugators.first() == Some(&id)
        && group.intersect_conjugates(&c.conjugators, config.group_cap)?.is_trivial()
    {
        return Ok(c);
    }
    let mut fallback = search(group, ambient, config, "search-fallback")?;
    let mut trace = c.trace;
    trace.append(&mut fallback.trace);
    fallback.trace = trace;
    Ok(fallback)
}

/// Prefers the construction's own odd normalizer of the overgroup, then any
/// odd generator of the overgroup, then a direct search in `A_n`.
fn make_even(group: &PermGroup, c: Construction, config: &Config) -> Result<Construction, WitnessError> {
    let sigma = c
        .sigma
        .clone()
        .filter(|s| !s.is_even() && c.overgroup.is_normalized_by(s))
        .or_else(|| c.overgroup.find_odd_element());
    match sigma {
        Some(s) => Ok(adjust_construction(c, &s)),
        None => {
            let mut found = search(group, Ambient::Alternating, config, "alternating-search")?;
            let mut trace = c.trace;
            trace.append(&mut found.trace);
            found.trace = trace;
            Ok(found)
        }
    }
}

/// Drops conjugators whose coset `Gx` already occurred; `G^x` only depends
/// on the coset.
fn dedupe(group: &PermGroup, xs: &mut Vec<Permutation>) {
    let chain = group.chain();
    let mut seen = Vec::new();
    xs.retain(|x| {
        let rep = chain.canonical_coset_rep(x);
        if seen.contains(&rep) {
            false
        } else {
            seen.push(rep);
            true
        }
    });
}

/// Settles the construction, attaches tuples, and has the oracle verify the
/// result. Never returns an unverified certificate.
pub(crate) fn finish(
    group: &PermGroup,
    ambient: Ambient,
    c: Construction,
    config: &Config,
) -> Result<WitnessCertificate, WitnessError> {
    let mut c = settle(group, ambient, c, config)?;
    let tuples = choose_tuples(group, ambient, &mut c, config)?;
    let mut cert = WitnessCertificate {
        degree: group.degree(),
        ambient,
        generators: strings(group.generators()),
        conjugators: strings(&c.conjugators),
        regular_tuples: tuples.as_deref().map(|ts| ts.iter().map(|t| strings(t)).collect()),
        trace: c.trace,
        verified: false,
    };
    let mut report = verify_certificate(&cert, config)?;
    if !report.certificate_ok && cert.regular_tuples.is_some() {
        cert.regular_tuples = None;
        report = verify_certificate(&cert, config)?;
    }
    if !report.certificate_ok {
        let mut reasons = report.problems.clone();
        reasons.extend(report.caps_hit.iter().map(|c| format!("{c} cap hit")));
        if let Some(order) = report.intersection_order {
            reasons.push(format!("intersection order {order}"));
        }
        return Err(WitnessError::Rejected(reasons.join("; ")));
    }
    cert.verified = true;
    Ok(cert)
}

pub(crate) fn choose_tuples(
    group: &PermGroup,
    ambient: Ambient,
    c: &mut Construction,
    config: &Config,
) -> Result<Option<Vec<Vec<Permutation>>>, WitnessError> {
    let space = CosetSpace::new(group.clone(), ambient);
    let good = |ts: &[Vec<Permutation>]| -> Result<bool, WitnessError> { tuples_hold(&space, ts, config) };
    if let Some(ts) = c.tuples.take() {
        if good(&ts)? {
            c.trace.push("tuples-constructed".into());
            return Ok(Some(ts));
        }
    }
    let n = group.degree();
    let base = if c.conjugators.len() == 1 {
        // G is trivial: any second coset gives a regular pair.
        let x = match ambient {
            Ambient::Symmetric => cycle(n, &[1, 2]),
            Ambient::Alternating => cycle(n, &[1, 2, 3]),
        };
        vec![c.conjugators[0].clone(), x]
    } else {
        c.conjugators.clone()
    };
    if let Some(ts) = pad_reps(&base) {
        if good(&ts)? {
            c.trace.push("padding".into());
            return Ok(Some(ts));
        }
    }
    if let Some(ts) = find_regular_tuples(group, ambient, 5, 5, config)? {
        c.trace.push("tuple-search".into());
        return Ok(Some(ts));
    }
    Ok(None)
}

fn tuples_hold(space: &CosetSpace, ts: &[Vec<Permutation>], config: &Config) -> Result<bool, WitnessError> {
    if ts.len() != 5 || ts.iter().any(|t| t.len() != 5 || t.iter().any(|x| !space.ambient().contains(x))) {
        return Ok(false);
    }
    let tuples = ts.iter().map(|t| space.tuple(t)).collect::<Result<Vec<_>, _>>()?;
    for t in &tuples {
        if !space.tuple_stabilizer_is_trivial(t, config.group_cap)? {
            return Ok(false);
        }
    }
    for (i, a) in tuples.iter().enumerate() {
        for b in &tuples[i + 1..] {
            if space.same_orbit(a, b, config.group_cap)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

//! Brute-force checks that recompute everything from generators and
//! conjugators. The construction code is never consulted: groups are
//! materialised by closure and membership is a hash lookup.

mod naive;
mod reg;
mod search;

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::ambient::Ambient;
use crate::config::Config;
use crate::perm::{PermError, Permutation};
use crate::witness::WitnessCertificate;

pub(crate) use naive::ElementSet;
pub use reg::{reg_count, RegCount, RegMode};
pub use search::{find_regular_tuples, min_base_search, BaseSearch};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{cap} cap {limit} exceeded")]
    CapExceeded { cap: &'static str, limit: u128 },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Group(#[from] crate::group::GroupError),
    #[error(transparent)]
    Coset(#[from] crate::coset::CosetError),
    #[error("tuple length must be between 1 and 5, got {0}")]
    BadLength(usize),
}

/// Per-tuple regularity and the outcome of every pairwise orbit test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TupleReport {
    pub regular: Vec<bool>,
    /// `(i, j, same_orbit)` for `i < j`, 0-based.
    pub pairs: Vec<(usize, usize, bool)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub certificate_ok: bool,
    /// `None` when a cap stopped the computation.
    pub intersection_order: Option<u128>,
    pub tuple_reports: Option<TupleReport>,
    /// Wall time; left out of the JSON form so reports stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
    pub caps_hit: Vec<String>,
    /// Reasons for failure other than a nontrivial intersection.
    pub problems: Vec<String>,
}

/// Recomputes `⋂ G^{x_i}` and the tuple claims of `cert`. The trace and the
/// `verified` flag are ignored.
pub fn verify_certificate(cert: &WitnessCertificate, config: &Config) -> Result<VerificationReport, OracleError> {
    let start = Instant::now();
    let n = cert.degree;
    let gens = cert
        .generators
        .iter()
        .map(|s| Permutation::parse_cycles(s, n))
        .collect::<Result<Vec<_>, _>>()?;
    let conj = cert.conjugator_perms()?;
    let tuples = cert.tuple_perms()?;
    let mut problems = Vec::new();
    let mut caps_hit = Vec::new();

    if conj.is_empty() || conj.len() > 5 {
        problems.push(format!("{} conjugators, expected 1 to 5", conj.len()));
    }
    if conj.first().is_some_and(|x| !x.is_identity()) {
        problems.push("first conjugator is not the identity".to_string());
    }
    if cert.ambient == Ambient::Alternating {
        for x in &conj {
            if !x.is_even() {
                problems.push(format!("conjugator {x} is odd"));
            }
        }
    }

    let group = match ElementSet::closure(n, &gens, config.group_cap) {
        Ok(g) => Some(g),
        Err(OracleError::CapExceeded { cap, .. }) => {
            caps_hit.push(cap.to_string());
            None
        }
        Err(e) => return Err(e),
    };

    let intersection_order = group
        .as_ref()
        .map(|g| g.conjugate_intersection_order(&conj) as u128);

    let tuple_reports = match (&group, &tuples) {
        (Some(g), Some(ts)) => {
            let report = check_tuples(g, cert.ambient, ts, &mut problems);
            Some(report)
        }
        _ => None,
    };

    let tuples_ok = tuple_reports
        .as_ref()
        .is_none_or(|r| r.regular.iter().all(|&b| b) && r.pairs.iter().all(|p| !p.2));
    let certificate_ok = problems.is_empty() && intersection_order == Some(1) && tuples_ok;
    Ok(VerificationReport {
        certificate_ok,
        intersection_order,
        tuple_reports,
        elapsed: start.elapsed(),
        caps_hit,
        problems,
    })
}

fn check_tuples(
    group: &ElementSet,
    ambient: Ambient,
    tuples: &[Vec<Permutation>],
    problems: &mut Vec<String>,
) -> TupleReport {
    if tuples.len() != 5 {
        problems.push(format!("{} regular tuples, expected 5", tuples.len()));
    }
    for t in tuples {
        if t.len() != 5 {
            problems.push(format!("tuple of length {}, expected 5", t.len()));
        }
        for x in t {
            if !ambient.contains(x) {
                problems.push(format!("tuple entry {x} is not in the ambient group"));
            }
        }
    }
    let local = group.restrict_to(ambient);
    // The stabilizer of (G w_i) in S is S ∩ ⋂ G^{w_i}.
    let regular = tuples
        .iter()
        .map(|t| local.conjugate_intersection_order(t) == 1)
        .collect();
    let mut pairs = Vec::new();
    for i in 0..tuples.len() {
        for j in i + 1..tuples.len() {
            let same = tuples[i].len() == tuples[j].len() && local.same_orbit(ambient, &tuples[i], &tuples[j]);
            pairs.push((i, j, same));
        }
    }
    TupleReport { regular, pairs }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(n: usize, gens: &[&str], conj: &[&str], ambient: Ambient) -> WitnessCertificate {
        WitnessCertificate {
            degree: n,
            ambient,
            generators: gens.iter().map(|s| s.to_string()).collect(),
            conjugators: conj.iter().map(|s| s.to_string()).collect(),
            regular_tuples: None,
            trace: vec![],
            verified: false,
        }
    }

    const AGL: [&str; 2] = ["(1,2,3,4,5)", "(2,3,5,4)"];

    #[test]
    fn affine_certificate_verifies() {
        let c = cert(5, &AGL, &["()", "(1,2)", "(1,3)"], Ambient::Symmetric);
        let r = verify_certificate(&c, &Config::default()).unwrap();
        assert!(r.certificate_ok);
        assert_eq!(r.intersection_order, Some(1));
    }

    #[test]
    fn tampered_certificate_is_refuted() {
        let c = cert(5, &AGL, &["()", "(1,2)"], Ambient::Symmetric);
        let r = verify_certificate(&c, &Config::default()).unwrap();
        assert!(!r.certificate_ok);
        assert_eq!(r.intersection_order, Some(4));
    }

    #[test]
    fn trivial_group_verifies() {
        let c = cert(5, &[], &["()"], Ambient::Symmetric);
        assert!(verify_certificate(&c, &Config::default()).unwrap().certificate_ok);
    }

    #[test]
    fn odd_conjugator_rejected_in_alternating() {
        let c = cert(5, &["(1,2,3,4,5)"], &["()", "(1,2)"], Ambient::Alternating);
        let r = verify_certificate(&c, &Config::default()).unwrap();
        assert_eq!(r.intersection_order, Some(1));
        assert!(!r.certificate_ok);
        assert_eq!(r.problems.len(), 1);
    }

    #[test]
    fn group_cap_is_reported() {
        let c = cert(7, &["(1,2)", "(1,2,3,4,5,6,7)"], &["()"], Ambient::Symmetric);
        let config = Config {
            group_cap: 100,
            ..Config::default()
        };
        let r = verify_certificate(&c, &config).unwrap();
        assert_eq!(r.caps_hit, vec!["group".to_string()]);
        assert_eq!(r.intersection_order, None);
        assert!(!r.certificate_ok);
    }
}

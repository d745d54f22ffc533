use crate::ambient::Ambient;
use crate::config::Config;
use crate::oracle::verify_certificate;
use crate::perm::Permutation;

use super::certificate::{strings, WitnessCertificate};
use super::{Construction, WitnessError};

/// Moves a certificate into `A_n`: each odd conjugator `x` becomes `σx`.
/// Because `σ` normalizes `G`, `G^{σx} = G^x` and the intersection is
/// unchanged. The result is re-verified; tuples that no longer check out
/// are dropped.
pub fn alternating_adjust(
    cert: &WitnessCertificate,
    sigma: &Permutation,
    config: &Config,
) -> Result<WitnessCertificate, WitnessError> {
    if sigma.is_even() {
        return Err(WitnessError::SigmaNotOdd);
    }
    let group = cert.group()?;
    if sigma.degree() != group.degree() || !group.is_normalized_by(sigma) {
        return Err(WitnessError::SigmaDoesNotNormalize);
    }
    let fix = |xs: Vec<Permutation>| strings(&xs.iter().map(|x| even_form(x, sigma)).collect::<Vec<_>>());
    let mut out = cert.clone();
    out.ambient = Ambient::Alternating;
    out.conjugators = fix(cert.conjugator_perms()?);
    out.regular_tuples = cert.tuple_perms()?.map(|ts| ts.into_iter().map(fix).collect());
    out.trace.push("alternating-adjust".into());
    let mut report = verify_certificate(&out, config)?;
    if !report.certificate_ok && out.regular_tuples.is_some() {
        out.regular_tuples = None;
        report = verify_certificate(&out, config)?;
    }
    out.verified = report.certificate_ok;
    Ok(out)
}

fn even_form(x: &Permutation, sigma: &Permutation) -> Permutation {
    if x.is_even() {
        x.clone()
    } else {
        sigma.mul(x)
    }
}

pub(crate) fn adjust_construction(mut c: Construction, sigma: &Permutation) -> Construction {
    c.conjugators = c.conjugators.iter().map(|x| even_form(x, sigma)).collect();
    c.tuples = c
        .tuples
        .map(|ts| ts.iter().map(|t| t.iter().map(|x| even_form(x, sigma)).collect()).collect());
    c.trace.push("alternating-adjust".into());
    c
}

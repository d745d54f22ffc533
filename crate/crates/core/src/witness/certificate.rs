use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::group::{GroupError, PermGroup};
use crate::perm::{PermError, Permutation};

/// Conjugators `x_1 = (), x_2, …, x_k` (`k ≤ 5`) with `⋂ G^{x_i} = 1`, and
/// optionally five regular 5-tuples of cosets in distinct orbits.
///
/// Only the oracle sets `verified`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub degree: usize,
    pub ambient: Ambient,
    pub generators: Vec<String>,
    pub conjugators: Vec<String>,
    pub regular_tuples: Option<Vec<Vec<String>>>,
    pub trace: Vec<String>,
    pub verified: bool,
}

impl WitnessCertificate {
    pub fn group(&self) -> Result<PermGroup, GroupError> {
        PermGroup::from_cycle_strings(self.degree, &self.generators)
    }

    pub fn conjugator_perms(&self) -> Result<Vec<Permutation>, PermError> {
        parse_all(&self.conjugators, self.degree)
    }

    pub fn tuple_perms(&self) -> Result<Option<Vec<Vec<Permutation>>>, PermError> {
        self.regular_tuples
            .as_ref()
            .map(|ts| ts.iter().map(|t| parse_all(t, self.degree)).collect())
            .transpose()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<WitnessCertificate, serde_json::Error> {
        serde_json::from_str(text)
    }
}

fn parse_all(strings: &[String], degree: usize) -> Result<Vec<Permutation>, PermError> {
    strings.iter().map(|s| Permutation::parse_cycles(s, degree)).collect()
}

pub(crate) fn strings(perms: &[Permutation]) -> Vec<String> {
    perms.iter().map(Permutation::to_string).collect()
}

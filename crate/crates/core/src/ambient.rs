use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::group::PermGroup;
use crate::perm::Permutation;

/// The ambient group `S`: `S_n` or `A_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    Symmetric,
    Alternating,
}

impl Ambient {
    pub fn group(self, degree: usize) -> PermGroup {
        match self {
            Ambient::Symmetric => PermGroup::symmetric(degree),
            Ambient::Alternating => PermGroup::alternating(degree),
        }
    }

    pub fn contains(self, p: &Permutation) -> bool {
        match self {
            Ambient::Symmetric => true,
            Ambient::Alternating => p.is_even(),
        }
    }

    pub fn order(self, degree: usize) -> u128 {
        let fact: u128 = (1..=degree as u128).product();
        match self {
            Ambient::Alternating if degree >= 2 => fact / 2,
            _ => fact,
        }
    }

    pub fn contains_group(self, g: &PermGroup) -> bool {
        match self {
            Ambient::Symmetric => true,
            Ambient::Alternating => g.is_in_alternating(),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::Symmetric => "symmetric",
            Ambient::Alternating => "alternating",
        })
    }
}

impl FromStr for Ambient {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "symmetric" | "S" | "sym" => Ok(Ambient::Symmetric),
            "alternating" | "A" | "alt" => Ok(Ambient::Alternating),
            other => Err(format!("unknown ambient '{other}', expected symmetric or alternating")),
        }
    }
}

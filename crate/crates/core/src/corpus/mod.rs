//! Named families of permutation groups and the catalog of solvable
//! subgroups of small symmetric groups.

mod enumerate;
mod field;
mod fixtures;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::group::{is_prime, PermGroup};
use crate::perm::Permutation;

use field::{digits, undigits, Field};

pub use enumerate::{enumerate_solvable, CatalogEntry, GroupCatalog, MAX_ENUMERATION_DEGREE};
pub use fixtures::{group_key, FixtureEntry, Fixtures};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("degree {0} is beyond the enumeration limit {MAX_ENUMERATION_DEGREE}")]
    DegreeCapExceeded(usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
}

/// A named group with blocks and orbits on consecutive intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    /// `S_k ≀ S_l` on `l` blocks of size `k`.
    Wreath(usize, usize),
    /// `S_{k_1} × … × S_{k_r}` on consecutive orbits.
    Direct(Vec<usize>),
    /// `AGL(1,p)`.
    Agl1(usize),
    /// `⟨(1,…,n)⟩`.
    CyclicRegular(usize),
    /// Translations of `Z_p^d`, point `v + 1` for the base-`p` number `v`.
    ElementaryAbelianRegular(usize, usize),
    /// `AGL(d,p)` on `Z_p^d`.
    Agl(usize, usize),
    /// `AΓL(1,p^d)` on `GF(p^d)`.
    Agammal1(usize, usize),
}

impl Family {
    pub fn degree(&self) -> usize {
        match self {
            Family::Wreath(k, l) => k * l,
            Family::Direct(ks) => ks.iter().sum(),
            Family::Agl1(p) | Family::CyclicRegular(p) => *p,
            Family::ElementaryAbelianRegular(p, d) | Family::Agl(d, p) | Family::Agammal1(p, d) => {
                p.pow(*d as u32)
            }
        }
    }

    fn check(&self) -> Result<(), CorpusError> {
        let bad = |m: &str| Err(CorpusError::BadParams(format!("{self}: {m}")));
        let prime_power = |p: usize, d: usize| is_prime(p as u64) && d >= 1 && p.checked_pow(d as u32).is_some_and(|q| q <= 4096);
        match self {
            Family::Wreath(k, l) if *k == 0 || *l == 0 => bad("parameters must be positive"),
            Family::Direct(ks) if ks.is_empty() || ks.contains(&0) => bad("parameters must be positive"),
            Family::Agl1(p) if !is_prime(*p as u64) => bad("p must be prime"),
            Family::CyclicRegular(0) => bad("n must be positive"),
            Family::ElementaryAbelianRegular(p, d) | Family::Agammal1(p, d) if !prime_power(*p, *d) => {
                bad("need a prime p and d ≥ 1 with p^d ≤ 4096")
            }
            Family::Agl(d, p) if !prime_power(*p, *d) => bad("need a prime p and d ≥ 1 with p^d ≤ 4096"),
            _ if self.degree() > u16::MAX as usize => bad("degree too large"),
            _ => Ok(()),
        }
    }

    /// Generators in a fixed order, documented per family.
    pub fn generators(&self) -> Result<Vec<Permutation>, CorpusError> {
        self.check()?;
        let n = self.degree();
        Ok(match self {
            // Per block: k-cycle, transposition; then the block swap and the
            // block cycle.
            Family::Wreath(k, l) => {
                let mut gens = Vec::new();
                for j in 0..*l {
                    gens.extend(symmetric_on(n, j * k + 1, *k));
                }
                if *l >= 2 {
                    gens.push(block_map(n, *k, &[0, 1]));
                }
                if *l >= 3 {
                    gens.push(block_map(n, *k, &(0..*l).collect::<Vec<_>>()));
                }
                gens
            }
            // Per orbit: k-cycle, transposition.
            Family::Direct(ks) => {
                let mut gens = Vec::new();
                let mut start = 1;
                for &k in ks {
                    gens.extend(symmetric_on(n, start, k));
                    start += k;
                }
                gens
            }
            // (1,…,p), then multiplication by the least primitive root.
            Family::Agl1(p) => {
                let f = Field::new(*p, 1);
                vec![cycle_on(n, 1, n), affine_map(&f, f.primitive_element(), 0)]
            }
            Family::CyclicRegular(_) => {
                if n == 1 {
                    vec![]
                } else {
                    vec![cycle_on(n, 1, n)]
                }
            }
            // Translation by each unit vector.
            Family::ElementaryAbelianRegular(p, d) => translations(*p, *d),
            // Translations, diag(ω,1,…,1), then the transvections
            // e_{i+1} ↦ e_{i+1} + e_i and e_i ↦ e_i + e_{i+1}.
            Family::Agl(d, p) => {
                let (p, d) = (*p, *d);
                let f = Field::new(p, 1);
                let omega = f.primitive_element();
                let mut gens = translations(p, d);
                let mut diag = identity_matrix(d);
                diag[0][0] = omega;
                gens.push(linear_map(p, &diag));
                for i in 0..d.saturating_sub(1) {
                    let mut up = identity_matrix(d);
                    up[i][i + 1] = 1;
                    gens.push(linear_map(p, &up));
                    let mut down = identity_matrix(d);
                    down[i + 1][i] = 1;
                    gens.push(linear_map(p, &down));
                }
                gens.retain(|g| !g.is_identity());
                gens
            }
            // Translations, multiplication by a primitive element, Frobenius.
            Family::Agammal1(p, d) => {
                let f = Field::new(*p, *d);
                let mut gens = translations(*p, *d);
                gens.push(affine_map(&f, f.primitive_element(), 0));
                let frob: Vec<usize> = (0..f.size()).map(|v| f.pow(v, *p) + 1).collect();
                gens.push(Permutation::from_images(&frob).expect("Frobenius is a bijection"));
                gens.retain(|g| !g.is_identity());
                gens
            }
        })
    }

    pub fn group(&self) -> Result<PermGroup, CorpusError> {
        let gens = self.generators()?;
        Ok(PermGroup::new(self.degree(), gens).expect("family generators have the family degree"))
    }
}

fn cycle_on(n: usize, start: usize, len: usize) -> Permutation {
    Permutation::from_cycles(n, &[(start..start + len).collect()]).unwrap()
}

fn symmetric_on(n: usize, start: usize, k: usize) -> Vec<Permutation> {
    let mut gens = Vec::new();
    if k >= 3 {
        gens.push(cycle_on(n, start, k));
    }
    if k >= 2 {
        gens.push(cycle_on(n, start, 2));
    }
    gens
}

/// Moves block `blocks[i]` onto `blocks[i+1]` (cyclically), point by point.
fn block_map(n: usize, k: usize, blocks: &[usize]) -> Permutation {
    let cycles: Vec<Vec<usize>> = (0..k)
        .map(|i| blocks.iter().map(|b| b * k + i + 1).collect())
        .collect();
    Permutation::from_cycles(n, &cycles).unwrap()
}

fn affine_map(f: &Field, a: usize, b: usize) -> Permutation {
    let images: Vec<usize> = (0..f.size()).map(|v| f.add(f.mul(a, v), b) + 1).collect();
    Permutation::from_images(&images).expect("affine maps with a ≠ 0 are bijections")
}

fn translations(p: usize, d: usize) -> Vec<Permutation> {
    let q = p.pow(d as u32);
    (0..d)
        .map(|i| {
            let images: Vec<usize> = (0..q)
                .map(|v| {
                    let mut ds = digits(v, p, d);
                    ds[i] = (ds[i] + 1) % p;
                    undigits(&ds, p) + 1
                })
                .collect();
            Permutation::from_images(&images).unwrap()
        })
        .collect()
}

fn identity_matrix(d: usize) -> Vec<Vec<usize>> {
    (0..d).map(|i| (0..d).map(|j| usize::from(i == j)).collect()).collect()
}

/// `v ↦ M v` on column vectors of base-`p` digits.
fn linear_map(p: usize, m: &[Vec<usize>]) -> Permutation {
    let d = m.len();
    let q = p.pow(d as u32);
    let images: Vec<usize> = (0..q)
        .map(|v| {
            let x = digits(v, p, d);
            let y: Vec<usize> = m
                .iter()
                .map(|row| row.iter().zip(&x).map(|(a, b)| a * b).sum::<usize>() % p)
                .collect();
            undigits(&y, p) + 1
        })
        .collect();
    Permutation::from_images(&images).expect("invertible matrices give bijections")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Wreath(k, l) => write!(f, "wreath({k},{l})"),
            Family::Direct(ks) => {
                let parts: Vec<String> = ks.iter().map(usize::to_string).collect();
                write!(f, "direct({})", parts.join(","))
            }
            Family::Agl1(p) => write!(f, "agl1({p})"),
            Family::CyclicRegular(n) => write!(f, "cyclic_regular({n})"),
            Family::ElementaryAbelianRegular(p, d) => write!(f, "elementary_abelian_regular({p},{d})"),
            Family::Agl(d, p) => write!(f, "agl({d},{p})"),
            Family::Agammal1(p, d) => write!(f, "agammal1({p},{d})"),
        }
    }
}

impl FromStr for Family {
    type Err = CorpusError;

    /// `name(a,b,…)`, e.g. `wreath(3,2)`.
    fn from_str(s: &str) -> Result<Family, CorpusError> {
        let unknown = || CorpusError::UnknownFamily(s.to_string());
        let s = s.trim();
        let (name, rest) = s.split_once('(').ok_or_else(unknown)?;
        let args = rest.strip_suffix(')').ok_or_else(unknown)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| CorpusError::BadParams(s.to_string()))?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(CorpusError::BadParams(format!("{name} takes {k} parameters")))
            }
        };
        let family = match name.trim() {
            "wreath" => arity(2).map(|_| Family::Wreath(nums[0], nums[1])),
            "direct" => Ok(Family::Direct(nums.clone())),
            "agl1" => arity(1).map(|_| Family::Agl1(nums[0])),
            "cyclic_regular" => arity(1).map(|_| Family::CyclicRegular(nums[0])),
            "elementary_abelian_regular" => arity(2).map(|_| Family::ElementaryAbelianRegular(nums[0], nums[1])),
            "agl" => arity(2).map(|_| Family::Agl(nums[0], nums[1])),
            "agammal1" => arity(2).map(|_| Family::Agammal1(nums[0], nums[1])),
            _ => Err(unknown()),
        }?;
        family.check()?;
        Ok(family)
    }
}

/// `named_family("wreath", &[3, 2])`.
pub fn named_family(tag: &str, params: &[usize]) -> Result<PermGroup, CorpusError> {
    let args: Vec<String> = params.iter().map(usize::to_string).collect();
    format!("{tag}({})", args.join(",")).parse::<Family>()?.group()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(f: &Family) -> Vec<String> {
        f.generators().unwrap().iter().map(|g| g.to_string()).collect()
    }

    #[test]
    fn documented_generators() {
        assert_eq!(
            strings(&Family::Wreath(3, 2)),
            ["(1,2,3)", "(1,2)", "(4,5,6)", "(4,5)", "(1,4)(2,5)(3,6)"]
        );
        assert_eq!(strings(&Family::Agl1(5)), ["(1,2,3,4,5)", "(2,3,5,4)"]);
        assert_eq!(strings(&Family::Direct(vec![2, 3])), ["(1,2)", "(3,4,5)", "(3,4)"]);
        assert_eq!(
            strings(&Family::ElementaryAbelianRegular(2, 3)),
            ["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)"]
        );
    }

    #[test]
    fn orders() {
        let cases = [
            (Family::Wreath(3, 2), 72),
            (Family::Wreath(2, 4), 384),
            (Family::Wreath(4, 3), 82_944),
            (Family::Direct(vec![2, 3]), 12),
            (Family::Agl1(5), 20),
            (Family::Agl1(7), 42),
            (Family::CyclicRegular(6), 6),
            (Family::ElementaryAbelianRegular(3, 2), 9),
            (Family::Agl(2, 3), 432),
            (Family::Agl(3, 2), 1344),
            (Family::Agammal1(2, 3), 168),
            (Family::Agammal1(3, 2), 144),
        ];
        for (f, order) in cases {
            assert_eq!(f.group().unwrap().order(), order, "{f}");
        }
    }

    #[test]
    fn affine_groups_are_primitive_and_solvable() {
        for f in [Family::Agl(2, 3), Family::Agammal1(2, 3), Family::Agl1(7)] {
            let g = f.group().unwrap();
            assert!(g.is_primitive().unwrap(), "{f}");
            assert!(g.is_solvable(), "{f}");
        }
        assert!(!Family::Agl(3, 2).group().unwrap().is_solvable());
    }

    #[test]
    fn parse_round_trip() {
        for s in ["wreath(3,2)", "direct(2,3,4)", "agl1(7)", "agl(2,3)", "agammal1(2,3)", "cyclic_regular(9)"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert!(matches!("agl1(6)".parse::<Family>(), Err(CorpusError::BadParams(_))));
        assert!(matches!("nope(1)".parse::<Family>(), Err(CorpusError::UnknownFamily(_))));
        assert_eq!(named_family("direct", &[2, 3]).unwrap().order(), 12);
    }

    #[test]
    fn wreath_block_system() {
        let g = Family::Wreath(3, 3).group().unwrap();
        let systems = g.all_minimal_block_systems().unwrap();
        let intervals: Vec<Vec<usize>> = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
        assert!(systems.iter().any(|s| s.blocks() == intervals.as_slice()));
    }
}

//! Permutations of `{1..n}` under the right action.
//!
//! Points are 1-based at every public boundary. Internally images are stored
//! 0-based in a compact `u16` buffer, so the maximum degree is `u16::MAX`.
//!
//! Composition is left to right: `(i)(p·q) = ((i)p)q`, and conjugation is
//! `g^x = x⁻¹ g x`, the same conventions GAP uses.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("degree {0} exceeds the supported maximum {max}", max = u16::MAX)]
    DegreeTooLarge(usize),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} appears more than once")]
    RepeatedPoint(usize),
    #[error("malformed cycle notation at byte {pos}: {reason}")]
    Malformed { pos: usize, reason: &'static str },
    #[error("image list is not a bijection")]
    NotBijection,
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn combine(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// A bijection of `{1..n}` stored as its image sequence.
///
/// The derived ordering is lexicographic on image sequences, which is the
/// order used for canonical coset representatives.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Permutation {
        assert!(degree <= u16::MAX as usize, "degree too large");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Permutation, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        if n > u16::MAX as usize {
            return Err(PermError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(PermError::PointOutOfRange { point: img, degree: n });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(PermError::NotBijection);
            }
            out.push((img - 1) as u16);
        }
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    /// Unchecked constructor from 0-based images.
    pub(crate) fn from_raw(images: Vec<u16>) -> Permutation {
        debug_assert!(is_bijection(&images));
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Permutation, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if degree > u16::MAX as usize {
            return Err(PermError::DegreeTooLarge(degree));
        }
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(PermError::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(PermError::RepeatedPoint(p));
                }
            }
            for (i, &p) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u16;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses cycle notation such as `"(1,2,3)(4,5)"` or `"()"`.
    ///
    /// Grammar: `perm := "()" | cycle+`, `cycle := "(" int ("," int)+ ")"`,
    /// no whitespace, points are decimal integers `>= 1`.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation, PermError> {
        if degree == 0 {
            return Err(PermError::ZeroDegree);
        }
        if text == "()" {
            return Ok(Permutation::identity(degree));
        }
        let bytes = text.as_bytes();
        if bytes.is_empty() {
            return Err(PermError::Malformed { pos: 0, reason: "empty input" });
        }
        let mut cycles = Vec::new();
        let mut pos = 0;
        while pos < bytes.len() {
            if bytes[pos] != b'(' {
                return Err(PermError::Malformed { pos, reason: "expected '('" });
            }
            pos += 1;
            let mut cycle = Vec::new();
            loop {
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(PermError::Malformed { pos, reason: "expected a point" });
                }
                let point: usize = text[start..pos]
                    .parse()
                    .map_err(|_| PermError::Malformed { pos: start, reason: "point too large" })?;
                cycle.push(point);
                match bytes.get(pos) {
                    Some(b',') => pos += 1,
                    Some(b')') => {
                        pos += 1;
                        break;
                    }
                    Some(_) => return Err(PermError::Malformed { pos, reason: "expected ',' or ')'" }),
                    None => return Err(PermError::Malformed { pos, reason: "unterminated cycle" }),
                }
            }
            if cycle.len() < 2 {
                return Err(PermError::Malformed { pos, reason: "cycle needs at least two points" });
            }
            cycles.push(cycle);
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    #[inline]
    pub(crate) fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    fn check_degree(&self, other: &Permutation) -> Result<(), PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self` applied first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(other)?;
        Ok(self.mul(other))
    }

    /// Unchecked [`compose`](Self::compose); degrees must agree.
    #[inline]
    pub(crate) fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `x⁻¹ self x`: `self` with its points relabelled by `x`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation, PermError> {
        self.check_degree(x)?;
        Ok(self.conj(x))
    }

    #[inline]
    pub(crate) fn conj(&self, x: &Permutation) -> Permutation {
        let mut out = vec![0u16; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            out[x.images[i] as usize] = x.images[j as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles (1-based), ordered by least moved point, each cycle
    /// starting at its least point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lens.iter().sum();
        lens.extend(std::iter::repeat_n(1, self.degree() - moved));
        lens.sort_unstable();
        lens
    }

    pub fn parity(&self) -> Parity {
        let moved_cycles = self.cycles();
        let transpositions: usize = moved_cycles.iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Moved points, 0-based.
    pub(crate) fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &j)| *i != j as usize)
            .map(|(i, _)| i)
    }

    /// Relabels the domain: returns the permutation of degree `new_degree`
    /// acting on `map[p]` as `self` acts on `p`. `map` is 0-based and must
    /// send the support of `self` injectively into `0..new_degree`;
    /// points outside `map`'s domain must be fixed by `self`.
    pub(crate) fn transport(&self, map: &[Option<usize>], new_degree: usize) -> Permutation {
        let mut out: Vec<u16> = (0..new_degree as u16).collect();
        for (p, target) in map.iter().enumerate() {
            if let Some(t) = target {
                let img = map[self.apply(p)].expect("transport map must be closed under the permutation");
                out[*t] = img as u16;
            }
        }
        Permutation::from_raw(out)
    }
}

fn is_bijection(images: &[u16]) -> bool {
    let mut seen = vec![false; images.len()];
    images.iter().all(|&i| {
        (i as usize) < seen.len() && !std::mem::replace(&mut seen[i as usize], true)
    })
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

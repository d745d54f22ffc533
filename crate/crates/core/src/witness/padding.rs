//! Five regular 5-tuples in distinct orbits from one shorter regular tuple.
//!
//! Repeating entries of a regular tuple keeps it regular, since the
//! stabilizer only depends on the set of entries. The action of `S` preserves
//! which positions hold equal entries, so patterns with different
//! equal-position partitions land in different orbits.

use crate::coset::{CosetSpace, CosetTuple};
use crate::perm::Permutation;

use super::WitnessError;

const FROM_TWO: [[usize; 5]; 5] = [
    [0, 0, 0, 0, 1],
    [0, 0, 0, 1, 0],
    [0, 0, 1, 0, 0],
    [0, 1, 0, 0, 0],
    [1, 0, 0, 0, 0],
];

const FROM_THREE: [[usize; 5]; 5] = [
    [0, 0, 0, 1, 2],
    [0, 0, 1, 2, 0],
    [0, 1, 2, 0, 0],
    [1, 2, 0, 0, 0],
    [0, 0, 1, 0, 2],
];

const FROM_FOUR: [[usize; 5]; 5] = [
    [0, 0, 1, 2, 3],
    [0, 1, 2, 3, 0],
    [1, 2, 3, 0, 0],
    [1, 2, 0, 3, 0],
    [1, 0, 2, 0, 3],
];

pub(crate) fn patterns(len: usize) -> Option<&'static [[usize; 5]; 5]> {
    match len {
        2 => Some(&FROM_TWO),
        3 => Some(&FROM_THREE),
        4 => Some(&FROM_FOUR),
        _ => None,
    }
}

/// The five padded tuples, as representatives.
pub(crate) fn pad_reps(reps: &[Permutation]) -> Option<Vec<Vec<Permutation>>> {
    let pats = patterns(reps.len())?;
    Some(
        pats.iter()
            .map(|p| p.iter().map(|&i| reps[i].clone()).collect())
            .collect(),
    )
}

/// Pads a regular tuple of 2, 3 or 4 distinct cosets to five regular
/// 5-tuples lying in pairwise distinct orbits.
pub fn pad_base_to_regulars(space: &CosetSpace, t: &CosetTuple, cap: u128) -> Result<Vec<CosetTuple>, WitnessError> {
    if patterns(t.len()).is_none() {
        return Err(WitnessError::BadTupleLength(t.len()));
    }
    let entries = t.entries();
    for (i, a) in entries.iter().enumerate() {
        if entries[i + 1..].contains(a) {
            return Err(WitnessError::RepeatedEntry);
        }
    }
    if !space.tuple_stabilizer_is_trivial(t, cap)? {
        return Err(WitnessError::NotRegular);
    }
    let padded = pad_reps(&t.reps()).expect("length checked");
    Ok(padded
        .iter()
        .map(|r| space.tuple(r).expect("entries come from a valid tuple"))
        .collect())
}

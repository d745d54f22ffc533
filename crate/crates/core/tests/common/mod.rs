#![allow(dead_code)]

use std::collections::HashMap;
use std::path::PathBuf;

use perm_witness::corpus::GroupCatalog;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use perm_witness::{PermGroup, Permutation};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

/// The checked-in catalog for `S_n`.
pub fn catalog(n: usize) -> GroupCatalog {
    let text = std::fs::read_to_string(fixture_path(&format!("catalog_s{n}.json"))).expect("catalog file");
    GroupCatalog::from_json(&text).expect("catalog parses")
}

pub fn perm(s: &str, n: usize) -> Permutation {
    Permutation::parse_cycles(s, n).unwrap()
}

pub fn group(n: usize, gens: &[&str]) -> PermGroup {
    PermGroup::from_cycle_strings(n, gens).unwrap()
}

/// Right regular representation of `g` on its own elements, `copies` times
/// side by side.
pub fn regular_representation(g: &PermGroup, copies: usize) -> PermGroup {
    let elems: Vec<Permutation> = g.elements(u128::MAX).unwrap().collect();
    let index: HashMap<&Permutation, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let m = elems.len();
    let gens = g
        .generators()
        .iter()
        .map(|s| {
            let mut images = Vec::with_capacity(m * copies);
            for c in 0..copies {
                for e in &elems {
                    images.push(c * m + index[&e.compose(s).unwrap()] + 1);
                }
            }
            Permutation::from_images(&images).unwrap()
        })
        .collect();
    PermGroup::new(m * copies, gens).unwrap()
}

/// A seeded random permutation of degree `n`, for relabelling.
pub fn shuffled(n: usize, seed: u64) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    Permutation::from_images(&images).unwrap()
}

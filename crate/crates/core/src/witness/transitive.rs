use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ambient::Ambient;
use crate::config::Config;
use crate::group::{BlockSystem, PermGroup};
use crate::perm::Permutation;

use super::certificate::WitnessCertificate;
use super::primitive::primitive_construct;
use super::relabel::{cycle, embed, long_cycle, product, Relabel};
use super::semiregular::semiregular_inner;
use super::solve::{certify, check_solvable, choose_tuples, finish};
use super::{Construction, WitnessError};

/// Certificate for a transitive solvable group.
pub fn transitive_witness(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<WitnessCertificate, WitnessError> {
    check_solvable(group)?;
    if !group.is_transitive() {
        return Err(WitnessError::NotTransitive);
    }
    let c = transitive_construct(group, ambient, config)?;
    finish(group, ambient, c, config)
}

pub(crate) fn transitive_construct(group: &PermGroup, ambient: Ambient, config: &Config) -> Result<Construction, WitnessError> {
    let Some(system) = chosen_block_system(group)? else {
        return primitive_construct(group, ambient, config);
    };
    let relabel = Relabel::from_order(&system.blocks().concat());
    let g = relabel.group(group);
    let (k, l) = (system.block_size(), system.num_blocks());
    let built = if k <= 4 {
        small_blocks(&g, k, l, config)?
    } else {
        large_blocks(&g, k, l, config)?
    };
    Ok(relabel.back_construction(built))
}

/// `(S_k)^l ⋊ L` for blocks `{1..k}, {k+1..2k}, …`.
pub(crate) fn full_block_group(g: &PermGroup, k: usize, l: usize) -> PermGroup {
    let n = k * l;
    let mut extra = Vec::new();
    for j in 0..l {
        let block: Vec<usize> = (j * k + 1..=j * k + k).collect();
        extra.push(cycle(n, &block[..2]));
        if k > 2 {
            extra.push(cycle(n, &block));
        }
    }
    g.group_with(extra)
}

/// Block size 2, 3 or 4 on consecutive blocks: work in the full
/// `(S_k)^l ⋊ L`, which is normalized by the odd `(1,2)`.
fn small_blocks(g: &PermGroup, k: usize, l: usize, config: &Config) -> Result<Construction, WitnessError> {
    let n = k * l;
    let id = Permutation::identity(n);
    let h = full_block_group(g, k, l);
    let a = long_cycle(n);
    let mut trace = vec![format!("imprimitive-k{k}")];
    let mut tuples = None;
    let conjugators = match k {
        2 => {
            // H ∩ H^a is semiregular; a witness x for it gives
            // H ∩ H^a ∩ (H ∩ H^a)^x = 1.
            let inter = h.intersect_conjugates(&[id.clone(), a.clone()], config.group_cap)?;
            let (x, tags) = semiregular_inner(&inter, config)?;
            trace.extend(tags);
            let ax = a.mul(&x);
            vec![id, a, x, ax]
        }
        3 => vec![id, a.clone(), a.pow(2), cycle(n, &[3, 4])],
        _ => {
            let powers = vec![id, a.clone(), a.pow(2), a.pow(3)];
            if n > 8 {
                let ends = [[4, 5], [3, 6], [2, 7], [1, 8], [2, 5]];
                tuples = Some(
                    ends.iter()
                        .map(|e| {
                            let mut t = powers.clone();
                            t.push(cycle(n, e));
                            t
                        })
                        .collect(),
                );
            }
            let mut c = powers;
            c.push(cycle(n, &[4, 5]));
            c
        }
    };
    Ok(Construction {
        conjugators,
        tuples,
        trace,
        overgroup: h,
        sigma: Some(cycle(n, &[1, 2])),
    })
}

/// Colourings tried before giving up on the block construction.
const COLOURING_TRIES: usize = 32;

/// Block size at least 5. The block stabilizer acting on the first block
/// gets five regular tuples in distinct orbits; each block is coloured with
/// one of them, copied along a transversal, and conjugator `i` is the
/// product of every block's `i`-th entry. Regularity kills the base group
/// and a colouring no block permutation preserves kills the top group, but
/// the top components need not normalize the block group, so candidates are
/// checked and `settle` searches if all of them fail.
fn large_blocks(g: &PermGroup, k: usize, l: usize, config: &Config) -> Result<Construction, WitnessError> {
    let n = k * l;
    let (transversal, stabilizer) = block_stabilizer(g, k, l);
    let first: Vec<usize> = (1..=k).collect();
    let component = stabilizer.restrict(&first);
    let mut inner = certify(&component, Ambient::Symmetric, config)?;
    let mut trace = vec!["imprimitive-blocks".to_string()];
    let colours = choose_tuples(&component, Ambient::Symmetric, &mut inner, config)?;
    trace.append(&mut inner.trace);
    let Some(colours) = colours else {
        return Ok(Construction {
            conjugators: vec![Permutation::identity(n)],
            tuples: None,
            trace,
            overgroup: g.clone(),
            sigma: None,
        });
    };
    let copies: Vec<Vec<Vec<Permutation>>> = colours
        .iter()
        .map(|tuple| {
            tuple
                .iter()
                .map(|y| {
                    let y = embed(y, &first, n);
                    transversal.iter().map(|t| y.conj(t)).collect()
                })
                .collect()
        })
        .collect();
    let build = |colouring: &[usize]| -> Vec<Permutation> {
        let raw: Vec<Permutation> = (0..5)
            .map(|i| product(n, colouring.iter().enumerate().map(|(j, &c)| &copies[c][i][j])))
            .collect();
        let back = raw[0].inverse();
        raw.iter().map(|x| x.mul(&back)).collect()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut colouring: Vec<usize> = (0..l).map(|j| j % 5).collect();
    let mut conjugators = build(&colouring);
    for _ in 0..COLOURING_TRIES {
        if g.intersect_conjugates(&conjugators, config.group_cap)?.is_trivial() {
            break;
        }
        colouring = (0..l).map(|_| rng.gen_range(0..5)).collect();
        conjugators = build(&colouring);
    }
    Ok(Construction {
        conjugators,
        tuples: None,
        trace,
        overgroup: g.clone(),
        sigma: g.find_odd_element(),
    })
}

/// Elements `t_j` taking block 0 to block `j`, and the setwise stabilizer
/// of block 0 from Schreier generators. Blocks are `{jk+1..jk+k}`.
fn block_stabilizer(g: &PermGroup, k: usize, l: usize) -> (Vec<Permutation>, PermGroup) {
    let n = k * l;
    let block_of = |p: usize| (p - 1) / k;
    let mut transversal: Vec<Option<Permutation>> = vec![None; l];
    transversal[0] = Some(Permutation::identity(n));
    let mut queue = vec![0];
    let mut k_idx = 0;
    while k_idx < queue.len() {
        let j = queue[k_idx];
        for s in g.generators() {
            let target = block_of(s.image(j * k + 1));
            if transversal[target].is_none() {
                transversal[target] = Some(transversal[j].as_ref().unwrap().mul(s));
                queue.push(target);
            }
        }
        k_idx += 1;
    }
    let transversal: Vec<Permutation> = transversal.into_iter().map(|t| t.expect("transitive on blocks")).collect();
    let inverses: Vec<Permutation> = transversal.iter().map(Permutation::inverse).collect();
    let mut gens = Vec::new();
    for (j, t) in transversal.iter().enumerate() {
        for s in g.generators() {
            let target = block_of(s.image(j * k + 1));
            gens.push(t.mul(s).mul(&inverses[target]));
        }
    }
    (transversal, PermGroup::new(n, gens).expect("degrees agree"))
}

/// The minimal block system with the smallest blocks, first in seed order
/// on ties; `None` for a primitive group.
pub fn chosen_block_system(group: &PermGroup) -> Result<Option<BlockSystem>, WitnessError> {
    let systems = group.all_minimal_block_systems()?;
    Ok(systems.into_iter().min_by_key(|s| s.block_size()))
}

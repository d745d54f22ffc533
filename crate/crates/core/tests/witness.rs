mod common;

use common::{group, perm};
use perm_witness::corpus::named_family;
use perm_witness::oracle::verify_certificate;
use perm_witness::witness::{
    intransitive_witness, primitive_witness, semiregular_witness, transitive_witness, WitnessError,
};
use perm_witness::{solve, Ambient, Config, PermGroup, Permutation};

fn strings(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

/// `(1,4,…,n-2)(2,5,…,n-1)(3,6,…,n)`.
fn stride_three(n: usize) -> Permutation {
    let cycles: Vec<Vec<usize>> = (1..=3).map(|r| (r..=n).step_by(3).collect()).collect();
    Permutation::from_cycles(n, &cycles).unwrap()
}

fn long_cycle(n: usize) -> Permutation {
    Permutation::from_cycles(n, &[(1..=n).collect()]).unwrap()
}

#[test]
fn affine_alternating_conjugators() {
    let agl = named_family("agl1", &[5]).unwrap();
    let cert = primitive_witness(&agl, Ambient::Alternating, &Config::default()).unwrap();
    assert_eq!(cert.conjugators, strings(&["()", "(1,2,3,5,4)", "(1,3,5,4,2)"]));
    let b = perm("(2,3,5,4)", 5);
    assert_eq!(cert.conjugators[1], b.compose(&perm("(1,2)", 5)).unwrap().to_string());
    assert_eq!(cert.conjugators[2], b.compose(&perm("(1,3)", 5)).unwrap().to_string());
    assert!(cert.verified);
}

#[test]
fn solve_examples() {
    let config = Config::default();
    let trivial = PermGroup::trivial(5);
    assert_eq!(solve(&trivial, Ambient::Symmetric, &config).unwrap().conjugators, strings(&["()"]));
    let agl = named_family("agl1", &[5]).unwrap();
    assert_eq!(
        solve(&agl, Ambient::Symmetric, &config).unwrap().conjugators,
        strings(&["()", "(1,2)", "(1,3)"])
    );
    let wreath = named_family("wreath", &[3, 2]).unwrap();
    assert_eq!(solve(&wreath, Ambient::Symmetric, &config).unwrap().conjugators.len(), 4);
}

#[test]
fn stride_three_intersection() {
    let config = Config::default();
    for l in [2, 3] {
        let n = 3 * l;
        let g = named_family("wreath", &[3, l]).unwrap();
        let a = long_cycle(n);
        let xs = vec![Permutation::identity(n), a.clone(), a.pow(2)];
        let r = g.intersect_conjugates(&xs, config.group_cap).unwrap();
        let expected = PermGroup::new(n, vec![stride_three(n)]).unwrap();
        assert_eq!(r.order(), (n / 3) as u128);
        assert!(r.same_group(&expected));
        let mut more = xs.clone();
        more.push(perm("(3,4)", n));
        assert!(g.intersect_conjugates(&more, config.group_cap).unwrap().is_trivial());
    }
}

#[test]
fn pairs_of_blocks_meet_semiregularly() {
    for l in [3, 4, 5] {
        let n = 2 * l;
        let g = named_family("wreath", &[2, l]).unwrap();
        let a = long_cycle(n);
        let i = g.intersect(&g.conjugate(&a), u128::MAX).unwrap();
        assert!(i.is_semiregular(), "l = {l}");
    }
}

#[test]
fn pair_then_wreath_uses_transposition_lift() {
    let g = group(8, &["(1,2)", "(3,4,5)", "(3,4)", "(6,7,8)", "(6,7)", "(3,6)(4,7)(5,8)"]);
    let config = Config::default();
    let cert = intransitive_witness(&g, Ambient::Symmetric, &config).unwrap();
    assert_eq!(cert.trace[0], "intransitive-k2");
    assert_eq!(cert.trace[1], "imprimitive-k3");
    assert_eq!(cert.conjugators.len(), 5);
    // Every lifted entry is (2,3) times a relabelled wreath conjugator.
    let t = perm("(2,3)", 8);
    let xs = cert.conjugator_perms().unwrap();
    let inner: Vec<Permutation> = xs.iter().map(|x| t.compose(x).unwrap()).collect();
    let wreath = group(8, &["(3,4,5)", "(3,4)", "(6,7,8)", "(6,7)", "(3,6)(4,7)(5,8)"]);
    assert!(wreath.intersect_conjugates(&inner, u128::MAX).unwrap().is_trivial());
    assert!(verify_certificate(&cert, &config).unwrap().certificate_ok);
}

#[test]
fn two_affine_orbits_use_products() {
    let g = group(10, &["(1,2,3,4,5)", "(2,3,5,4)", "(6,7,8,9,10)", "(7,8,10,9)"]);
    let cert = intransitive_witness(&g, Ambient::Symmetric, &Config::default()).unwrap();
    assert_eq!(cert.trace[0], "intransitive-orbits");
    assert_eq!(cert.conjugators, strings(&["()", "(1,2)(6,7)", "(1,3)(6,8)"]));
}

#[test]
fn direct_product_of_small_orbits() {
    let g = named_family("direct", &[2, 3]).unwrap();
    let config = Config::default();
    for ambient in [Ambient::Symmetric, Ambient::Alternating] {
        let cert = intransitive_witness(&g, ambient, &config).unwrap();
        assert!(cert.conjugators.len() <= 5);
        assert!(verify_certificate(&cert, &config).unwrap().certificate_ok);
    }
}

#[test]
fn semiregular_examples() {
    let config = Config::default();
    let c5 = group(5, &["(1,2,3,4,5)"]);
    assert_eq!(semiregular_witness(&c5, &config).unwrap(), perm("(1,2)", 5));
    let c6 = group(6, &["(1,2,3,4,5,6)"]);
    assert_eq!(semiregular_witness(&c6, &config).unwrap(), perm("(1,2)", 6));
    let e8 = named_family("elementary_abelian_regular", &[2, 3]).unwrap();
    let x = semiregular_witness(&e8, &config).unwrap();
    assert!(e8.intersect(&e8.conjugate(&x), u128::MAX).unwrap().is_trivial());
}

#[test]
fn precondition_errors() {
    let config = Config::default();
    let s5 = PermGroup::symmetric(5);
    assert_eq!(solve(&s5, Ambient::Symmetric, &config).unwrap_err(), WitnessError::NotSolvable);
    let small = group(4, &["(1,2)"]);
    assert_eq!(solve(&small, Ambient::Symmetric, &config).unwrap_err(), WitnessError::DegreeTooSmall(4));
    let agl = named_family("agl1", &[5]).unwrap();
    assert_eq!(solve(&agl, Ambient::Alternating, &config).unwrap_err(), WitnessError::NotInAmbient);
    let wreath = named_family("wreath", &[3, 2]).unwrap();
    assert_eq!(
        primitive_witness(&wreath, Ambient::Symmetric, &config).unwrap_err(),
        WitnessError::NotPrimitive
    );
    assert_eq!(
        intransitive_witness(&wreath, Ambient::Symmetric, &config).unwrap_err(),
        WitnessError::NotIntransitive
    );
    let pair = group(6, &["(1,2)"]);
    assert_eq!(
        transitive_witness(&pair, Ambient::Symmetric, &config).unwrap_err(),
        WitnessError::NotTransitive
    );
    assert_eq!(semiregular_witness(&pair, &config).unwrap_err(), WitnessError::NotSemiregular);
}

/// `B ≀ S_l` for a block group `B` of degree `k`, blocks on intervals.
fn wreath_over(block: &[&str], k: usize, l: usize) -> PermGroup {
    let n = k * l;
    let mut gens = Vec::new();
    for g in block {
        let p = perm(g, k);
        let cycles: Vec<Vec<usize>> = p.cycles();
        gens.push(Permutation::from_cycles(n, &cycles).unwrap());
    }
    let swap: Vec<Vec<usize>> = (1..=k).map(|i| vec![i, k + i]).collect();
    gens.push(Permutation::from_cycles(n, &swap).unwrap());
    let shift: Vec<Vec<usize>> = (1..=k).map(|i| (0..l).map(|b| b * k + i).collect()).collect();
    gens.push(Permutation::from_cycles(n, &shift).unwrap());
    PermGroup::new(n, gens).unwrap()
}

#[test]
fn large_blocks_combine_per_block_witnesses() {
    let config = Config::default();
    let cases = [
        wreath_over(&["(1,2,3,4,5)", "(2,3,5,4)"], 5, 2),
        wreath_over(&["(1,2,3,4,5)"], 5, 3),
        wreath_over(&["(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"], 7, 2),
    ];
    for g in cases {
        assert!(g.is_solvable());
        for ambient in [Ambient::Symmetric, Ambient::Alternating] {
            let cert = transitive_witness(&g, ambient, &config).unwrap();
            assert_eq!(cert.trace[0], "imprimitive-blocks");
            assert!(!cert.trace.iter().any(|t| t == "search-fallback"));
            assert!(cert.conjugators.len() <= 5);
            assert!(verify_certificate(&cert, &config).unwrap().certificate_ok);
        }
    }
}

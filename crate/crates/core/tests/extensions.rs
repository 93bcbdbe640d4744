mod common;

use common::{group, module};
use symcoh::cli::extension_classes;
use symcoh::cochain::{Cochain, CochainSpace};
use symcoh::cohomology::{cohomology, is_coboundary};
use symcoh::extension::{cocycle_from_section, extension_from_cocycle, has_symmetric_section, is_symmetric_cocycle, is_symmetric_section};

const PAIRS: [(&str, &str); 4] = [("C2", "trivial:Z/2"), ("C2", "trivial:Z/4"), ("C3", "trivial:Z/3"), ("C4", "trivial:Z/2")];

#[test]
fn exactness_and_compatibility() {
    for (g, m) in PAIRS.iter().copied().chain([("S3", "trivial:Z/2"), ("C2xC2", "trivial:Z/2")]) {
        let grp = group(g);
        let a = module(&grp, m);
        let h = cohomology(&a, 2).unwrap();
        let base = a.base().elements().unwrap();
        for rep in h.representatives.iter().chain([&Cochain::zero(h.space())]) {
            let ext = extension_from_cocycle(rep).unwrap();
            let x = ext.group();
            assert_eq!(x.order(), base.len() * grp.order());
            let i = ext.inclusion();
            let pi = ext.projection();
            for (ai, a1) in base.iter().enumerate() {
                assert_eq!(pi[i[ai]], 0);
                for (bi, b1) in base.iter().enumerate() {
                    let sum = a.base().element_index(&a1.add(b1));
                    assert_eq!(x.mul(i[ai], i[bi]), i[sum]);
                }
            }
            for p in x.elements() {
                for q in x.elements() {
                    assert_eq!(pi[x.mul(p, q)], grp.mul(pi[p], pi[q]));
                }
            }
            let kernel = x.elements().filter(|&p| pi[p] == 0).count();
            assert_eq!(kernel, base.len());
            // conjugating i(A) by a lift of g is the action of g
            for lift in x.elements() {
                for (ai, a1) in base.iter().enumerate() {
                    let c = x.mul(x.mul(lift, i[ai]), x.inv(lift));
                    assert_eq!(c, i[a.base().element_index(&a.act(pi[lift], a1))]);
                }
            }
        }
    }
}

#[test]
fn round_trip_and_section_independence() {
    for (g, m) in PAIRS {
        let grp = group(g);
        let a = module(&grp, m);
        let h = cohomology(&a, 2).unwrap();
        for rep in &h.representatives {
            let ext = extension_from_cocycle(rep).unwrap();
            for t in [ext.standard_section(), ext.normalized_section()] {
                let back = cocycle_from_section(&t).unwrap();
                assert!(is_coboundary(&back.sub(rep)).unwrap().0, "{g} {m}");
            }
        }
    }
}

#[test]
fn theorem_on_symmetric_sections() {
    for (g, m) in PAIRS {
        let grp = group(g);
        let (_, _, classes) = extension_classes(&module(&grp, m)).unwrap();
        for c in &classes {
            assert_eq!(c.symmetric_class, c.witness.is_some(), "{g} {m} class {:?}", c.class);
            if let Some(w) = &c.witness {
                assert!(is_symmetric_section(w));
                assert!(is_symmetric_cocycle(&cocycle_from_section(w).unwrap()).unwrap());
            }
        }
        // the zero class is split and always has a witness
        assert!(classes.iter().any(|c| c.class.is_zero() && c.witness.is_some()));
    }
}

#[test]
fn cyclic_four_over_two_has_no_symmetric_section() {
    let grp = group("C2");
    let a = module(&grp, "trivial:Z/2");
    let s = CochainSpace::new(&a, 2).unwrap();
    let sigma = Cochain::indicator(&s, &[1, 1], &a.base().element_i64(&[1]).unwrap()).unwrap();
    let ext = extension_from_cocycle(&sigma).unwrap();
    assert!(ext.group().elements().any(|x| ext.group().element_order(x) == 4));
    assert!(!has_symmetric_section(&ext).unwrap().0);
    let t = ext.normalized_section();
    assert_eq!(cocycle_from_section(&t).unwrap().value(&[1, 1]), a.base().element_i64(&[1]).unwrap());
}

#[test]
fn odd_order_extensions_are_all_symmetric() {
    let grp = group("C3");
    let (_, _, classes) = extension_classes(&module(&grp, "trivial:Z/3")).unwrap();
    assert_eq!(classes.len(), 3);
    assert!(classes.iter().all(|c| c.witness.is_some() && c.symmetric_class));
}

// The two extensions of Z/2 by Z and the four of Z/4 by Z, checked by hand
// arithmetic since the middle groups are infinite.

#[test]
fn integer_extensions_of_two() {
    // Z × Z/2: t(x) = (0, 1) is its own inverse
    let t = |g: i64| (0i64, g);
    let inv = |(a, b): (i64, i64)| (-a, (2 - b) % 2);
    assert!((0..2).all(|g| t((2 - g) % 2) == inv(t(g))));
    // Z → Z → Z/2: a section must send the generator to an odd integer,
    // which is never its own negative
    assert!((-50i64..50).filter(|a| a.rem_euclid(2) == 1).all(|a| a != -a));
}

#[test]
fn integer_extensions_of_four() {
    // 0 → Z → Z × Z/4 → Z/4 with t(x) = (0, x)
    let t1 = |g: i64| (0i64, g);
    let inv4 = |(a, b): (i64, i64)| (-a, (4 - b) % 4);
    assert!((0..4).all(|g| t1((4 - g) % 4) == inv4(t1(g))));
    // 0 → Z → Z × Z/2 → Z/4, δ(a, b) = a + 2b, s as listed
    let s = [(0i64, 0i64), (-1, 1), (0, 1), (1, 1)];
    let delta = |(a, b): (i64, i64)| (a + 2 * b).rem_euclid(4);
    let inv2 = |(a, b): (i64, i64)| (-a, (2 - b) % 2);
    assert!((0..4).all(|g| delta(s[g]) == g as i64));
    assert!((0..4).all(|g| s[(4 - g) % 4] == inv2(s[g])));
    // 0 → Z → Z → Z/4 (k = ±4): t(2) must be ≡ 2 mod 4 and equal to its negative
    assert!((-50i64..50).filter(|a| a.rem_euclid(4) == 2).all(|a| a != -a));
}

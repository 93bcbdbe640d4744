mod common;

use common::{battery, group, module};
use symcoh::cochain::{transposition_action, CochainSpace};
use symcoh::cohomology::comparison_map;
use symcoh::homogeneous::{alt_differential, alt_transposition_action, j_map, verify_remark};
use symcoh::symop::{
    injectivity_predicate, norm_operator, norm_operator_brute_force, permutation_action, verify_exchange_relations, verify_norm_identity,
    RelationFamily, TauVariant,
};
use symcoh::AbHom;

fn space(g: &str, m: &str, n: usize) -> CochainSpace {
    let grp = group(g);
    CochainSpace::new(&module(&grp, m), n).unwrap()
}

#[test]
fn exchange_relations_over_small_pairs() {
    for (g, m) in [("C2", "trivial:Z/2"), ("S3", "trivial:Z/4"), ("C2", "sign:Z"), ("C2xC2", "trivial:Z")] {
        for n in 0..=2 {
            let r = verify_exchange_relations(&space(g, m, n), TauVariant::Standard).unwrap();
            assert!(r.all_hold(), "{g} {m} n={n}: {:?}", r.violations().collect::<Vec<_>>());
            assert_eq!(r.checks.len(), (n + 1) * (n + 2));
        }
    }
}

#[test]
fn sign_flipped_transpositions_break_the_lower_relation() {
    let r = verify_exchange_relations(&space("S3", "trivial:Z/4", 2), TauVariant::SignFlipped).unwrap();
    let bad: Vec<_> = r.violations().collect();
    assert!(bad.iter().any(|c| c.family == RelationFamily::Lower));
    assert!(bad.iter().all(|c| matches!(c.family, RelationFamily::Lower | RelationFamily::Upper)));
}

#[test]
fn braid_word_for_the_long_transposition() {
    let s = space("S3", "trivial:Z", 2);
    let t1 = transposition_action(&s, 1).unwrap();
    let t2 = transposition_action(&s, 2).unwrap();
    let p = permutation_action(&s, &[2, 1, 0]).unwrap();
    assert_eq!(p, t1.compose(&t2).unwrap().compose(&t1).unwrap());
    assert_eq!(p, t2.compose(&t1).unwrap().compose(&t2).unwrap());
}

#[test]
fn norm_factorization_matches_the_permutation_sum() {
    for (g, m) in [("C2", "sign:Z"), ("C3", "trivial:Z/4"), ("C2xC2", "trivial:Z")] {
        for n in 0..=3 {
            let s = space(g, m, n);
            for lo in 1..=n + 1 {
                let w = (lo, n + 1);
                assert_eq!(norm_operator(&s, w).unwrap().matrix, norm_operator_brute_force(&s, w).unwrap().matrix, "{g} {m} n={n} {w:?}");
            }
        }
    }
}

#[test]
fn norm_identity_with_links() {
    for (g, m, n) in [("C2", "trivial:Z", 1), ("C4", "trivial:Z", 2), ("S3", "sign:Z/5", 2), ("C3", "trivial:Z/2", 3)] {
        let r = verify_norm_identity(&space(g, m, n)).unwrap();
        assert!(r.holds(), "{g} {m} n={n}: {r:?}");
    }
}

#[test]
fn injectivity_predicate_implies_trivial_kernel() {
    for (g, m, top) in battery() {
        for n in 0..=top.min(3) {
            if injectivity_predicate(&m, n) {
                assert!(comparison_map(&m, n).unwrap().is_injective(), "{} {} n={n}", g.label(), m.label());
            }
        }
    }
}

#[test]
fn alternative_operators() {
    let s = space("S3", "trivial:Z/4", 2);
    for i in 1..=2 {
        let t = alt_transposition_action(&s, i).unwrap();
        assert_eq!(t.compose(&t).unwrap(), AbHom::identity(s.space()));
        if i >= 2 {
            let t = alt_transposition_action(&space("S3", "trivial:Z", 2), i).unwrap();
            assert!(t.to_dense().to_rows().iter().flatten().all(|v| *v == (-1).into() || *v == 0.into()));
        }
    }
    for n in 0..=2 {
        let s = space("D4", "trivial:Z", n);
        let up = s.next().unwrap();
        assert!(alt_differential(&up).unwrap().compose(&alt_differential(&s).unwrap()).unwrap().is_zero());
    }
    assert_eq!(j_map(&space("C4", "trivial:Z", 1)).unwrap(), AbHom::identity(space("C4", "trivial:Z", 1).space()));
}

#[test]
fn remark_over_small_pairs() {
    for (g, m) in [("C2", "trivial:Z"), ("C3", "trivial:Z/4"), ("S3", "trivial:Z"), ("C2", "sign:Z")] {
        for n in 0..=3 {
            let r = verify_remark(&space(g, m, n)).unwrap();
            assert!(r.holds(), "{g} {m} n={n}: {r:?}");
            assert!(r.conjugacy.iter().all(|c| c.intertwines), "{g} {m} n={n}");
        }
    }
}

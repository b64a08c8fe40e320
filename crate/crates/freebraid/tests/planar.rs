mod common;

use common::{braid, word};
use freebraid::planar::{arcs_nested, is_planar, orbit_reduce, planar_oracle, t1_orbit_witness, ORACLE_CAP};
use freebraid::verify::cone_exclusions;
use freebraid::{apply_braid, FreeWord};
use proptest::prelude::*;

fn planar_word() -> impl Strategy<Value = (FreeWord, usize)> {
    (1..=5usize)
        .prop_flat_map(|n| (0..=n, braid(n.max(2), 10), Just(n)))
        .prop_map(|(k, b, n)| {
            let base = FreeWord::ascending_product(n, 1, k);
            let w = if n >= 2 { apply_braid(&base, &b).unwrap() } else { base };
            (w, k)
        })
}

proptest! {
    #[test]
    fn braids_preserve_planarity(((w, _), b) in planar_word().prop_flat_map(|p| {
        let n = p.0.rank().max(2);
        (Just(p), braid(n, 8))
    })) {
        prop_assume!(w.rank() == b.strands());
        prop_assert!(is_planar(&w).is_some());
        prop_assert!(is_planar(&apply_braid(&w, &b).unwrap()).is_some());
    }

    #[test]
    fn planar_words_are_squarefree_and_avoid_cones((w, _) in planar_word()) {
        prop_assert!(w.is_squarefree());
        prop_assert_eq!(cone_exclusions(&w), Ok(()));
    }

    #[test]
    fn decision_matches_brute_force(w in (1..=3usize).prop_flat_map(|n| word(n, ORACLE_CAP))) {
        prop_assert_eq!(is_planar(&w).is_some(), planar_oracle(&w).unwrap());
    }

    #[test]
    fn orbit_representative_is_recovered((w, k) in planar_word()) {
        let (got, phi) = orbit_reduce(&w).unwrap();
        prop_assert_eq!(got, k);
        prop_assert_eq!(apply_braid(&w, &phi).unwrap(), FreeWord::ascending_product(w.rank(), 1, k));
    }

    #[test]
    fn membership_criterion(w in (1..=4usize).prop_flat_map(|n| word(n, 8))) {
        let (core, _) = w.cyclic_reduce();
        let criterion = core.len() == 1 && core.letters()[0].is_positive() && is_planar(&w).is_some();
        prop_assert_eq!(criterion, t1_orbit_witness(&w).is_some());
    }

    #[test]
    fn ascending_lows_force_descending_highs(
        (m, shuffle) in (1..=6usize).prop_flat_map(|m| (Just(m), Just((0..m).collect::<Vec<_>>()).prop_shuffle()))
    ) {
        // c_i = i + 1 below every c̄_i, paired by the shuffle.
        let arcs: Vec<(usize, usize)> = (0..m).map(|i| (i + 1, m + 1 + shuffle[i])).collect();
        prop_assert_eq!(arcs_nested(&arcs), arcs.windows(2).all(|p| p[0].1 > p[1].1));
    }
}

#[test]
fn representatives_reduce_to_themselves() {
    for n in 1..=6 {
        for k in 0..=n {
            let (got, phi) = orbit_reduce(&FreeWord::ascending_product(n, 1, k)).unwrap();
            assert_eq!((got, phi.len()), (k, 0));
        }
    }
}

mod common;

use common::{braid, sized_braid, word};
use freebraid::braid::{apply_gen, zeta, Endomorphism};
use freebraid::{apply_braid, automorphism_of, recover_braid_word, BraidWord, FreeWord};
use proptest::prelude::*;

proptest! {
    #[test]
    fn generator_and_inverse_cancel((w, i) in (2..=6usize).prop_flat_map(|n| (word(n, 12), 1..n))) {
        let there = apply_gen(&w, i, true).unwrap();
        prop_assert_eq!(&apply_gen(&there, i, false).unwrap(), &w);
        let back = apply_gen(&w, i, false).unwrap();
        prop_assert_eq!(apply_gen(&back, i, true).unwrap(), w);
    }

    #[test]
    fn action_is_a_homomorphism((x, y) in (2..=6usize).prop_flat_map(|n| (braid(n, 8), braid(n, 8)))) {
        let composed = automorphism_of(&x).then(&automorphism_of(&y));
        let direct = automorphism_of(&x.concat(&y).unwrap());
        prop_assert_eq!(composed.images(), direct.images());
    }

    #[test]
    fn action_respects_products(
        (b, u, v) in (2..=6usize).prop_flat_map(|n| (braid(n, 8), word(n, 8), word(n, 8)))
    ) {
        let whole = apply_braid(&(&u * &v), &b).unwrap();
        prop_assert_eq!(whole, &apply_braid(&u, &b).unwrap() * &apply_braid(&v, &b).unwrap());
    }

    #[test]
    fn decomposition_is_consistent(b in sized_braid(2, 6, 12)) {
        let a = automorphism_of(&b);
        let n = a.rank();
        let diffs = (0..=n).fold(FreeWord::empty(n), |acc, i| &acc * a.difference(i));
        prop_assert!(diffs.is_empty());
        let mut interleaved = a.difference(0).clone();
        for i in 1..=n {
            interleaved = &(&interleaved * &FreeWord::generator(n, a.perm(i))) * a.difference(i);
        }
        prop_assert_eq!(interleaved, FreeWord::ascending_product(n, 1, n));
    }

    #[test]
    fn recovery_round_trip(b in sized_braid(2, 6, 12)) {
        let a = automorphism_of(&b);
        let r = recover_braid_word(&a).unwrap();
        let again = automorphism_of(&r);
        prop_assert_eq!(again.images(), a.images());
        prop_assert!(2 * r.len() <= a.norm() - a.rank());
    }

    #[test]
    fn zeta_conjugates_generators_to_inverses(n in 2..=7usize) {
        let z = zeta(n);
        for i in 1..n {
            let s = Endomorphism::of_braid(&BraidWord::generator(n, i, true));
            let conj = z.then(&s).unwrap().then(&z).unwrap();
            let inv = Endomorphism::of_braid(&BraidWord::generator(n, i, false));
            prop_assert_eq!(conj.images(), inv.images());
        }
    }
}

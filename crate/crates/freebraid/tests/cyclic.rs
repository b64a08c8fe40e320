mod common;

use common::braid;
use freebraid::phi::{phi_basis, wada_action};
use freebraid::torsion::{project, tw_apply_braid, tw_images, tw_recover_braid, TorsionWord};
use freebraid::{apply_braid, automorphism_of, FreeWord};
use proptest::prelude::*;

fn torsion_word(m: u32, n: usize, max_len: usize) -> impl Strategy<Value = TorsionWord> {
    prop::collection::vec((1..=n, 1..m as i64), 0..=max_len)
        .prop_map(move |pairs| TorsionWord::from_pairs(m, n, &pairs).expect("in range"))
}

proptest! {
    #[test]
    fn nonidentity_braids_move_some_generator(b in (2..=6usize).prop_flat_map(|n| braid(n, 10))) {
        prop_assume!(!automorphism_of(&b).is_identity());
        let n = b.strands();
        for m in [2u32, 3, 5] {
            let imgs = tw_images(&b, m).unwrap();
            prop_assert!((1..=n).any(|i| imgs[i - 1] != TorsionWord::generator(m, n, i)), "m={} b={}", m, b);
        }
    }

    #[test]
    fn torsion_recovery_round_trip(b in (2..=5usize).prop_flat_map(|n| braid(n, 10)), m in 2..=4u32) {
        let r = tw_recover_braid(&tw_images(&b, m).unwrap()).unwrap();
        let (a, c) = (automorphism_of(&r), automorphism_of(&b));
        prop_assert_eq!(a.images(), c.images());
    }

    #[test]
    fn even_subgroup_action_is_faithful(b in (3..=5usize).prop_flat_map(|s| braid(s, 10))) {
        prop_assume!(!automorphism_of(&b).is_identity());
        let n = b.strands() - 1;
        prop_assert_eq!(phi_basis(2, n).unwrap().len(), n);
        let moved = (1..=n).any(|k| {
            let x = FreeWord::generator(n, k);
            wada_action(&x, &b, 2, 1).unwrap() != x
        });
        prop_assert!(moved);
    }

    #[test]
    fn inverse_generator_shrinks_the_cone(
        (w, i, m) in (3..=5usize, 2..=4u32)
            .prop_flat_map(|(n, m)| (torsion_word(m, n, 8), 1..n, Just(m)))
    ) {
        let n = w.rank();
        let head = TorsionWord::from_pairs(m, n, &[(i, 1)]).unwrap();
        let w = head.multiply(&w).unwrap();
        prop_assume!(w.syllables().first().is_some_and(|s| s.gen == i));
        let img = tw_apply_braid(&w, &freebraid::BraidWord::generator(n, i, false)).unwrap();
        let syl = img.syllables();
        prop_assert!(syl.len() >= 2 && syl[0].gen == i && syl[0].exp == 1 && syl[1].gen == i + 1, "{} -> {}", w, img);
    }

    #[test]
    fn images_of_t1_keep_their_letters_mod_two(b in (2..=6usize).prop_flat_map(|n| braid(n, 12))) {
        let w = apply_braid(&FreeWord::generator(b.strands(), 1), &b).unwrap();
        let p = project(&w, 2).unwrap();
        let gens: Vec<usize> = p.syllables().iter().map(|s| s.gen).collect();
        let letters: Vec<usize> = w.letters().iter().map(|l| l.index()).collect();
        prop_assert_eq!(gens, letters);
    }
}

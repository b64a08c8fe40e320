mod common;

use common::{braid, end, word};
use freebraid::ends::End;
use freebraid::torsion::{project, TorsionWord};
use freebraid::{BraidWord, FreeWord};
use proptest::prelude::*;

fn rank_and_words(k: usize) -> impl Strategy<Value = Vec<FreeWord>> {
    (1..=5usize).prop_flat_map(move |n| prop::collection::vec(word(n, 12), k))
}

proptest! {
    #[test]
    fn reduce_is_a_retraction(ws in rank_and_words(1)) {
        let w = &ws[0];
        prop_assert_eq!(&FreeWord::reduce(w.letters(), w.rank()).unwrap(), w);
    }

    #[test]
    fn group_axioms(ws in rank_and_words(3)) {
        let (a, b, c) = (&ws[0], &ws[1], &ws[2]);
        let e = FreeWord::empty(a.rank());
        prop_assert_eq!(&(a * b) * c, a * &(b * c));
        prop_assert_eq!(&(a * &e), a);
        prop_assert_eq!(&(&e * a), a);
        prop_assert_eq!(a * &a.inverse(), e.clone());
        prop_assert_eq!(&a.inverse() * a, e);
    }

    #[test]
    fn length_parity(ws in rank_and_words(2)) {
        let (a, b) = (&ws[0], &ws[1]);
        prop_assert_eq!((a * b).len() % 2, (a.len() + b.len()) % 2);
    }

    #[test]
    fn cyclic_reduce_round_trip(ws in rank_and_words(1)) {
        let w = &ws[0];
        let (core, conj) = w.cyclic_reduce();
        prop_assert_eq!(&core.conjugate(&conj).unwrap(), w);
        prop_assert_eq!(core.is_empty(), w.is_empty());
        if let (Some(f), Some(l)) = (core.first(), core.last()) {
            prop_assert!(core.len() == 1 || f != l.inverse());
        }
    }

    #[test]
    fn word_text_round_trip(ws in rank_and_words(1)) {
        let w = &ws[0];
        prop_assert_eq!(&FreeWord::parse(&w.to_string(), w.rank()).unwrap(), w);
    }

    #[test]
    fn braid_text_round_trip(b in (2..=6usize).prop_flat_map(|n| braid(n, 12))) {
        prop_assert_eq!(BraidWord::parse(&b.to_string(), b.strands()).unwrap(), b);
    }

    #[test]
    fn end_text_round_trip(e in (1..=4usize).prop_flat_map(|n| end(n, 6, 4))) {
        prop_assert_eq!(End::parse(&e.to_string(), e.rank()).unwrap(), e);
    }

    #[test]
    fn torsion_text_round_trip(ws in rank_and_words(1), m in 2..=5u32) {
        let t = project(&ws[0], m).unwrap();
        prop_assert_eq!(TorsionWord::parse(&t.to_string(), m, t.rank()).unwrap(), t);
    }
}

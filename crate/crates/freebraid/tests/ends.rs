mod common;

use std::cmp::Ordering;

use common::{braid, end, word};
use freebraid::ends::{act_on_end, compare_ends, interval_max, interval_min, make_end, thurston_compare, End};
use freebraid::order::compare;
use freebraid::word::Letter;
use freebraid::{automorphism_of, BraidWord, FreeWord};
use proptest::prelude::*;

fn begins_with(e: &End, w: &FreeWord) -> bool {
    e.truncate(w.len()) == w.letters()
}

proptest! {
    #[test]
    fn action_preserves_end_order(
        (e1, e2, b) in (2..=5usize).prop_flat_map(|n| (end(n, 6, 4), end(n, 6, 4), braid(n, 8)))
    ) {
        let before = compare_ends(&e1, &e2).unwrap();
        let after = compare_ends(&act_on_end(&e1, &b).unwrap(), &act_on_end(&e2, &b).unwrap()).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn action_on_ends_is_invertible((e, b) in (2..=5usize).prop_flat_map(|n| (end(n, 6, 4), braid(n, 8)))) {
        let back = act_on_end(&act_on_end(&e, &b).unwrap(), &b.inverse()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn stabilizer_of_generator_ends_is_trivial(b in (2..=5usize).prop_flat_map(|n| braid(n, 10))) {
        let n = b.strands();
        prop_assume!(!automorphism_of(&b).is_identity());
        let moved = (1..=n).any(|i| {
            let e = End::power_of_generator(n, i);
            act_on_end(&e, &b).unwrap() != e
        });
        prop_assert!(moved);
    }

    #[test]
    fn thurston_order_is_the_braid_order((x, y) in (2..=5usize).prop_flat_map(|n| (braid(n, 8), braid(n, 8)))) {
        prop_assert_eq!(thurston_compare(&x, &y).unwrap(), compare(&x, &y).unwrap());
    }

    #[test]
    fn interval_bounds(
        (w, i, tail, period) in (1..=4usize).prop_flat_map(|n| (word(n, 6), 1..=n, word(n, 5), word(n, 3)))
    ) {
        let n = w.rank();
        prop_assume!(!period.is_empty());
        prop_assume!(!w.ends_with_letter(Letter::pos(i)) && !w.ends_with_letter(Letter::neg(i)));
        for (positive, bound, want) in [(true, interval_min(&w, i).unwrap(), Ordering::Greater), (false, interval_max(&w, i).unwrap(), Ordering::Less)] {
            let t = FreeWord::letter(n, Letter::new(i, positive));
            let head = &(&w * &t) * &t;
            let e = make_end(&(&head * &tail), &period).unwrap();
            if begins_with(&e, &head) {
                let o = compare_ends(&e, &bound).unwrap();
                prop_assert!(o == want || o == Ordering::Equal, "{} vs {}", e, bound);
            }
            prop_assert!(begins_with(&bound, &head));
        }
    }

    #[test]
    fn inverse_sigma1_shrinks_the_t1_shadow(e in (2..=5usize).prop_flat_map(|n| end(n, 6, 4))) {
        let n = e.rank();
        let t1 = FreeWord::generator(n, 1);
        let e = make_end(&(&t1 * e.prefix()), e.period()).unwrap();
        prop_assume!(begins_with(&e, &t1));
        let img = act_on_end(&e, &BraidWord::generator(n, 1, false)).unwrap();
        prop_assert!(begins_with(&img, &FreeWord::ascending_product(n, 1, 2)), "{} -> {}", e, img);
    }
}

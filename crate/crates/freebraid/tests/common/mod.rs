//! Shared proptest strategies.
#![allow(dead_code)]

use freebraid::ends::{make_end, End};
use freebraid::{BraidWord, FreeWord};
use proptest::prelude::*;

fn signed(index: usize, positive: bool) -> i32 {
    if positive { index as i32 } else { -(index as i32) }
}

/// A word of rank `n`, reduced from at most `max_len` random letters.
pub fn word(n: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((1..=n, any::<bool>()), 0..=max_len).prop_map(move |raw| {
        let s: Vec<i32> = raw.into_iter().map(|(i, p)| signed(i, p)).collect();
        FreeWord::from_signed(&s, n).expect("indices in range")
    })
}

/// A braid word on `n >= 2` strands with at most `max_len` factors.
pub fn braid(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    prop::collection::vec((1..n, any::<bool>()), 0..=max_len)
        .prop_map(move |raw| BraidWord::new(n, raw.into_iter().map(|(i, p)| signed(i, p)).collect()).expect("below n"))
}

pub fn end(n: usize, max_prefix: usize, max_period: usize) -> impl Strategy<Value = End> {
    (word(n, max_prefix), word(n, max_period))
        .prop_filter("nonempty period", |(_, v)| !v.is_empty())
        .prop_map(|(u, v)| make_end(&u, &v).expect("nonempty period"))
}

/// Rank in `lo..=hi` paired with a braid on that many strands.
pub fn sized_braid(lo: usize, hi: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (lo.max(2)..=hi).prop_flat_map(move |n| braid(n, max_len))
}

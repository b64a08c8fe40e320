//! Seeded samplers for braids, words and ends.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{apply_braid, BraidWord};
use crate::ends::{make_end, End};
use crate::word::{FreeWord, Letter};

/// Independent stream for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Braid on `n` strands with exactly `len` factors.
pub fn braid_of_len<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n);
    }
    let factors = (0..len)
        .map(|_| {
            let i = rng.random_range(1..n) as i32;
            if rng.random_bool(0.5) { i } else { -i }
        })
        .collect();
    BraidWord::new(n, factors).expect("indices below n")
}

/// Braid on `n` strands with at most `max_len` factors.
pub fn random_braid<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> BraidWord {
    let len = rng.random_range(0..=max_len);
    braid_of_len(rng, n, len)
}

pub fn random_letter<R: Rng>(rng: &mut R, n: usize) -> Letter {
    Letter::new(rng.random_range(1..=n), rng.random_bool(0.5))
}

/// Reduced word of exactly `len` letters.
pub fn word_of_len<R: Rng>(rng: &mut R, n: usize, len: usize) -> FreeWord {
    let mut out: Vec<Letter> = Vec::with_capacity(len);
    while out.len() < len {
        let l = random_letter(rng, n);
        if out.last() != Some(&l.inverse()) {
            out.push(l);
        }
    }
    FreeWord::reduce(&out, n).expect("indices in range")
}

/// Reduced word of at most `max_len` letters.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> FreeWord {
    let len = rng.random_range(0..=max_len);
    word_of_len(rng, n, len)
}

pub fn random_end<R: Rng>(rng: &mut R, n: usize, max_prefix: usize, max_period: usize) -> End {
    let u = random_word(rng, n, max_prefix);
    let len = rng.random_range(1..=max_period.max(1));
    let v = word_of_len(rng, n, len);
    make_end(&u, &v).expect("nonempty period")
}

/// `(t_1 ... t_k)^b` for random `k` and `b`: a planar word.
pub fn random_planar_word<R: Rng>(rng: &mut R, n: usize, max_len: usize) -> FreeWord {
    let k = rng.random_range(0..=n);
    let b = random_braid(rng, n, max_len);
    apply_braid(&FreeWord::ascending_product(n, 1, k), &b).expect("same rank")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible() {
        let a = random_braid(&mut trial_rng(7, 3), 5, 10);
        let b = random_braid(&mut trial_rng(7, 3), 5, 10);
        assert_eq!(a, b);
        let w = word_of_len(&mut trial_rng(1, 1), 3, 9);
        assert_eq!(w.len(), 9);
    }
}

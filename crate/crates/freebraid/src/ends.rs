//! Eventually periodic ends `u · v^∞` and their ordering.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::braid::{apply_braid, BraidWord};
use crate::error::{Error, Result};
use crate::word::{FreeWord, Letter};

/// Canonical form: `v` is primitive and cyclically reduced, `u·v` has no
/// cancellation, and `u` is as short as possible.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct End {
    prefix: FreeWord,
    period: FreeWord,
}

fn primitive_root(v: &[Letter]) -> Vec<Letter> {
    let n = v.len();
    for d in 1..=n {
        if n.is_multiple_of(d) && (d..n).all(|k| v[k] == v[k - d]) {
            return v[..d].to_vec();
        }
    }
    v.to_vec()
}

pub fn make_end(u: &FreeWord, v: &FreeWord) -> Result<End> {
    if v.is_empty() {
        return Err(Error::EmptyPeriod);
    }
    if u.rank() != v.rank() {
        return Err(Error::RankMismatch { left: u.rank(), right: v.rank() });
    }
    let rank = u.rank();
    // v^∞ = c̄ · core^∞
    let (core, c) = v.cyclic_reduce();
    let head = u * &c.inverse();
    let mut p: Vec<Letter> = head.letters().to_vec();
    let mut per: Vec<Letter> = primitive_root(core.letters());
    while let (Some(&l), Some(&f)) = (p.last(), per.first()) {
        if l != f.inverse() {
            break;
        }
        p.pop();
        per.rotate_left(1);
    }
    while let (Some(&l), Some(&t)) = (p.last(), per.last()) {
        if l != t {
            break;
        }
        p.pop();
        per.rotate_right(1);
    }
    Ok(End {
        prefix: FreeWord::from_letters_unchecked(rank, p),
        period: FreeWord::from_letters_unchecked(rank, per),
    })
}

impl End {
    pub fn prefix(&self) -> &FreeWord {
        &self.prefix
    }

    pub fn period(&self) -> &FreeWord {
        &self.period
    }

    pub fn rank(&self) -> usize {
        self.prefix.rank()
    }

    /// Letter `k` (0-based) of the infinite word.
    pub fn letter(&self, k: usize) -> Letter {
        let u = self.prefix.letters();
        if k < u.len() {
            u[k]
        } else {
            let v = self.period.letters();
            v[(k - u.len()) % v.len()]
        }
    }

    /// The first `k` letters.
    pub fn truncate(&self, k: usize) -> Vec<Letter> {
        (0..k).map(|j| self.letter(j)).collect()
    }

    /// `(t_i)^∞`.
    pub fn power_of_generator(rank: usize, i: usize) -> End {
        End { prefix: FreeWord::empty(rank), period: FreeWord::generator(rank, i) }
    }

    pub fn parse(s: &str, rank: usize) -> Result<End> {
        let (a, b) = s.split_once('|').ok_or_else(|| Error::Parse("end needs `u | v`".into()))?;
        make_end(&FreeWord::parse(a, rank)?, &FreeWord::parse(b, rank)?)
    }
}

impl fmt::Display for End {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.prefix, self.period)
    }
}

/// Position of a letter on the cycle `t_1, t̄_1, t_2, ..., t̄_n`.
fn cycle_pos(l: Letter) -> usize {
    2 * (l.index() - 1) + usize::from(!l.is_positive())
}

/// Rank of `x` among possible successors of `prev`.
pub fn successor_rank(prev: Option<Letter>, x: Letter, n: usize) -> usize {
    let m = 2 * n;
    let start = match prev {
        None => 0,
        Some(p) => {
            let bar = cycle_pos(Letter::neg(p.index()));
            if p.is_positive() { (bar + 1) % m } else { bar }
        }
    };
    (cycle_pos(x) + m - start) % m
}

pub fn compare_ends(a: &End, b: &End) -> Result<Ordering> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank(), right: b.rank() });
    }
    let n = a.rank();
    let bound = a.prefix.len().max(b.prefix.len()) + a.period.len().lcm(&b.period.len());
    for k in 0..bound {
        let (x, y) = (a.letter(k), b.letter(k));
        if x != y {
            let prev = if k == 0 { None } else { Some(a.letter(k - 1)) };
            return Ok(successor_rank(prev, x, n).cmp(&successor_rank(prev, y, n)));
        }
    }
    Ok(Ordering::Equal)
}

/// Image of `u·v^∞` under `b`: with `v^b = c̄·core·c` it is `u^b c̄ · core^∞`.
pub fn act_on_end(e: &End, b: &BraidWord) -> Result<End> {
    let ub = apply_braid(&e.prefix, b)?;
    let g = apply_braid(&e.period, b)?;
    let (core, c) = g.cyclic_reduce();
    make_end(&(&ub * &c.inverse()), &core)
}

/// No two adjacent letters equal, wraparound included.
pub fn end_is_squarefree(e: &End) -> bool {
    let k = e.prefix.len() + 2 * e.period.len();
    let t = e.truncate(k);
    t.windows(2).all(|w| w[0] != w[1])
}

/// Lexicographic comparison of `((t_i^∞)^x)_i` and `((t_i^∞)^y)_i`.
pub fn thurston_compare(x: &BraidWord, y: &BraidWord) -> Result<Ordering> {
    if x.strands() != y.strands() {
        return Err(Error::RankMismatch { left: x.strands(), right: y.strands() });
    }
    let n = x.strands();
    for i in 1..=n {
        let e = End::power_of_generator(n, i);
        let o = compare_ends(&act_on_end(&e, x)?, &act_on_end(&e, y)?)?;
        if o != Ordering::Equal {
            return Ok(o);
        }
    }
    Ok(Ordering::Equal)
}

/// `w · t_i (t_i ... t_n t_1 ... t_{i-1})^∞`, the least end beginning `w t_i t_i`.
pub fn interval_min(w: &FreeWord, i: usize) -> Result<End> {
    let n = w.rank();
    let per = FreeWord::from_letters_unchecked(n, (i..=n).chain(1..i).map(Letter::pos));
    make_end(&(w * &FreeWord::generator(n, i)), &per)
}

/// `w · t̄_i (t̄_i ... t̄_1 t̄_n ... t̄_{i+1})^∞`, the greatest end beginning `w t̄_i t̄_i`.
pub fn interval_max(w: &FreeWord, i: usize) -> Result<End> {
    let n = w.rank();
    let per = FreeWord::from_letters_unchecked(n, (1..=i).rev().chain(((i + 1)..=n).rev()).map(Letter::neg));
    make_end(&(w * &FreeWord::letter(n, Letter::neg(i))), &per)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[i32], n: usize) -> FreeWord {
        FreeWord::from_signed(s, n).unwrap()
    }

    fn brute_equal(a: &End, b: &End, k: usize) -> bool {
        a.truncate(k) == b.truncate(k)
    }

    #[test]
    fn canonical_forms() {
        let e = make_end(&FreeWord::empty(2), &w(&[1], 2)).unwrap();
        assert_eq!(e.to_string(), "e | 1");
        let e = make_end(&w(&[1], 2), &w(&[-1, 2], 2)).unwrap();
        assert!(e.prefix().is_empty());
        assert_eq!(e.period(), &w(&[2, -1], 2));
        let e = make_end(&w(&[1, 2], 2), &w(&[2], 2)).unwrap();
        assert_eq!((e.prefix(), e.period()), (&w(&[1], 2), &w(&[2], 2)));
        assert_eq!(make_end(&w(&[1], 2), &FreeWord::empty(2)).unwrap_err(), Error::EmptyPeriod);
        let e = make_end(&FreeWord::empty(2), &w(&[1, 2, 1, 2], 2)).unwrap();
        assert_eq!(e.period(), &w(&[1, 2], 2));
    }

    #[test]
    fn canonical_form_matches_truncation() {
        let raw = make_end(&w(&[1], 3), &w(&[-1, 2, 3, 1], 3)).unwrap();
        let expanded: Vec<Letter> = {
            let mut v = w(&[1], 3).letters().to_vec();
            for _ in 0..6 {
                v.extend_from_slice(w(&[-1, 2, 3, 1], 3).letters());
            }
            FreeWord::reduce(&v, 3).unwrap().letters().to_vec()
        };
        assert_eq!(raw.truncate(12), expanded[..12].to_vec());
    }

    #[test]
    fn ordering_rules() {
        let t1 = End::power_of_generator(2, 1);
        let t2 = End::power_of_generator(2, 2);
        assert_eq!(compare_ends(&t1, &t2).unwrap(), Ordering::Less);
        for n in 1..=4 {
            let lo = make_end(&FreeWord::empty(n), &FreeWord::ascending_product(n, 1, n)).unwrap();
            let hi = make_end(&FreeWord::empty(n), &crate::word::z1(n).unwrap()).unwrap();
            for i in 1..=n {
                for s in [1i32, -1] {
                    let e = make_end(&FreeWord::empty(n), &w(&[s * i as i32], n)).unwrap();
                    assert_ne!(compare_ends(&lo, &e).unwrap(), Ordering::Greater);
                    assert_ne!(compare_ends(&hi, &e).unwrap(), Ordering::Less);
                }
            }
        }
        assert_eq!(compare_ends(&t1, &t1.clone()).unwrap(), Ordering::Equal);
    }

    #[test]
    fn equality_bound_agrees_with_long_truncation() {
        let a = make_end(&w(&[2], 2), &w(&[1, 2], 2)).unwrap();
        let b = make_end(&w(&[2, 1, 2], 2), &w(&[1, 2, 1, 2], 2)).unwrap();
        assert_eq!(compare_ends(&a, &b).unwrap(), Ordering::Equal);
        assert!(brute_equal(&a, &b, 50));
    }

    #[test]
    fn end_action() {
        let t1 = End::power_of_generator(2, 1);
        let bbar = BraidWord::new(2, vec![-1]).unwrap();
        let img = act_on_end(&t1, &bbar).unwrap();
        assert_eq!((img.prefix(), img.period()), (&w(&[1], 2), &w(&[2], 2)));
        let t3 = End::power_of_generator(3, 3);
        assert_eq!(act_on_end(&t3, &BraidWord::new(3, vec![1]).unwrap()).unwrap(), t3);
        let s = BraidWord::new(2, vec![1]).unwrap();
        let img = act_on_end(&t1, &s).unwrap();
        let trunc = apply_braid(&w(&[1; 12], 2), &s).unwrap();
        assert_eq!(img.truncate(12), trunc.letters()[..12].to_vec());
        assert_eq!(act_on_end(&img, &bbar).unwrap(), t1);
    }

    #[test]
    fn squarefree_ends() {
        assert!(end_is_squarefree(&make_end(&FreeWord::empty(2), &w(&[1, 2], 2)).unwrap()));
        assert!(!end_is_squarefree(&make_end(&w(&[2], 2), &w(&[2], 2)).unwrap()));
    }

    #[test]
    fn thurston_basics() {
        let e = BraidWord::identity(2);
        let s = BraidWord::new(2, vec![-1]).unwrap();
        assert_eq!(thurston_compare(&s, &e).unwrap(), Ordering::Less);
        assert_eq!(thurston_compare(&s, &s).unwrap(), Ordering::Equal);
    }
}

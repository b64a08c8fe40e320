//! Reduced words in the free group on `t_1, ..., t_n`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// A signed generator: `+i` is `t_i`, `-i` is its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(i32);

impl Letter {
    pub fn new(index: usize, positive: bool) -> Letter {
        let i = index as i32;
        Letter(if positive { i } else { -i })
    }

    pub fn pos(index: usize) -> Letter {
        Letter(index as i32)
    }

    pub fn neg(index: usize) -> Letter {
        Letter(-(index as i32))
    }

    /// Builds a letter from its signed encoding; zero is rejected.
    pub fn from_signed(v: i32) -> Option<Letter> {
        (v != 0).then_some(Letter(v))
    }

    pub fn signed(self) -> i32 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub fn inverse(self) -> Letter {
        Letter(-self.0)
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Reduced word of a fixed rank. Construction always reduces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<Letter>,
}

fn push_reduced(out: &mut Vec<Letter>, l: Letter) {
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl FreeWord {
    pub fn empty(rank: usize) -> FreeWord {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, index: usize) -> FreeWord {
        assert!(index >= 1 && index <= rank, "generator t_{index} outside rank {rank}");
        FreeWord { rank, letters: vec![Letter::pos(index)] }
    }

    pub fn letter(rank: usize, l: Letter) -> FreeWord {
        assert!(l.index() >= 1 && l.index() <= rank);
        FreeWord { rank, letters: vec![l] }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn reduce(raw: &[Letter], rank: usize) -> Result<FreeWord> {
        let mut out = Vec::with_capacity(raw.len());
        for &l in raw {
            if l.index() == 0 || l.index() > rank {
                return Err(Error::IndexOutOfRange { index: l.signed() as i64, rank });
            }
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank, letters: out })
    }

    /// Same as [`FreeWord::reduce`] on signed integers.
    pub fn from_signed(raw: &[i32], rank: usize) -> Result<FreeWord> {
        let mut letters = Vec::with_capacity(raw.len());
        for &v in raw {
            let l = Letter::from_signed(v).ok_or(Error::IndexOutOfRange { index: 0, rank })?;
            letters.push(l);
        }
        FreeWord::reduce(&letters, rank)
    }

    /// Caller guarantees indices in range; the result is still reduced.
    pub(crate) fn from_letters_unchecked(rank: usize, raw: impl IntoIterator<Item = Letter>) -> FreeWord {
        let mut out = Vec::new();
        for l in raw {
            debug_assert!(l.index() >= 1 && l.index() <= rank);
            push_reduced(&mut out, l);
        }
        FreeWord { rank, letters: out }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { left: self.rank, right: other.rank })
        }
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &FreeWord) -> FreeWord {
        let mut out = self.letters.clone();
        out.reserve(other.len());
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        FreeWord { rank: self.rank, letters: out }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// `self^g = g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &FreeWord) -> Result<FreeWord> {
        self.check_rank(g)?;
        Ok(g.inverse().mul_unchecked(self).mul_unchecked(g))
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = FreeWord::empty(self.rank);
        for _ in 0..k.unsigned_abs() {
            out = out.mul_unchecked(&base);
        }
        out
    }

    /// Returns `(core, conjugator)` with `self = conjugator⁻¹ · core · conjugator`.
    pub fn cyclic_reduce(&self) -> (FreeWord, FreeWord) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        let core = FreeWord { rank: self.rank, letters: self.letters[k..n - k].to_vec() };
        let conj = FreeWord { rank: self.rank, letters: self.letters[n - k..].to_vec() };
        (core, conj)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(a), Some(b)) => self.len() == 1 || a != b.inverse(),
            _ => true,
        }
    }

    pub fn begins_with(&self, p: &FreeWord) -> bool {
        self.letters.starts_with(&p.letters)
    }

    pub fn ends_with(&self, p: &FreeWord) -> bool {
        self.letters.ends_with(&p.letters)
    }

    pub fn begins_with_letter(&self, l: Letter) -> bool {
        self.first() == Some(l)
    }

    pub fn ends_with_letter(&self, l: Letter) -> bool {
        self.last() == Some(l)
    }

    /// No two adjacent letters are equal.
    pub fn is_squarefree(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] != w[1])
    }

    /// Substitutes `images[i-1]` for `t_i` (and its inverse for `t̄_i`).
    pub fn substitute(&self, images: &[FreeWord]) -> FreeWord {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out: Vec<Letter> = Vec::new();
        for &l in &self.letters {
            let img = &images[l.index() - 1];
            if l.is_positive() {
                for &x in &img.letters {
                    push_reduced(&mut out, x);
                }
            } else {
                for &x in img.letters.iter().rev() {
                    push_reduced(&mut out, x.inverse());
                }
            }
        }
        FreeWord { rank, letters: out }
    }

    /// Same letters, interpreted in a different rank. Indices must fit.
    pub fn with_rank(&self, rank: usize) -> Result<FreeWord> {
        FreeWord::reduce(&self.letters, rank)
    }

    /// Adds `delta` to every index, moving into `rank`.
    pub fn shift(&self, delta: i32, rank: usize) -> Result<FreeWord> {
        let raw: Vec<i32> = self
            .letters
            .iter()
            .map(|l| {
                let i = l.index() as i32 + delta;
                if l.is_positive() { i } else { -i }
            })
            .collect();
        if raw.iter().any(|&v| v == 0 || v.unsigned_abs() as usize > rank) {
            return Err(Error::IndexOutOfRange { index: raw.iter().map(|v| v.abs()).max().unwrap_or(0) as i64, rank });
        }
        FreeWord::from_signed(&raw, rank)
    }

    /// `t_1 t_2 ... t_k` in rank `rank`.
    pub fn ascending_product(rank: usize, from: usize, to: usize) -> FreeWord {
        FreeWord::from_letters_unchecked(rank, (from..=to).map(Letter::pos))
    }

    /// `t̄_from t̄_{from-1} ... t̄_to` with `from >= to`.
    pub fn descending_inverse_product(rank: usize, from: usize, to: usize) -> FreeWord {
        FreeWord::from_letters_unchecked(rank, (to..=from).rev().map(Letter::neg))
    }

    /// Parses whitespace-separated signed indices; `e` or blank is the empty word.
    pub fn parse(s: &str, rank: usize) -> Result<FreeWord> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(FreeWord::empty(rank));
        }
        let mut raw = Vec::new();
        for tok in t.split_whitespace() {
            let v: i32 = tok.parse().map_err(|_| Error::Parse(format!("bad letter `{tok}`")))?;
            if v == 0 || v.unsigned_abs() as usize > rank {
                return Err(Error::IndexOutOfRange { index: v as i64, rank });
            }
            raw.push(v);
        }
        FreeWord::from_signed(&raw, rank)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Panics on rank mismatch; use [`FreeWord::multiply`] for the checked form.
impl Mul for &FreeWord {
    type Output = FreeWord;
    fn mul(self, rhs: &FreeWord) -> FreeWord {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in word product");
        self.mul_unchecked(rhs)
    }
}

/// `z_1 = t̄_n ... t̄_1`.
pub fn z1(n: usize) -> Result<FreeWord> {
    if n == 0 {
        return Err(Error::RankTooSmall { min: 1, got: 0 });
    }
    Ok(FreeWord::descending_inverse_product(n, n, 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[i32], n: usize) -> FreeWord {
        FreeWord::from_signed(s, n).unwrap()
    }

    #[test]
    fn reduce_cancels() {
        assert!(w(&[1, -1], 2).is_empty());
        assert_eq!(w(&[1, 2, -2, -1, 3], 3), w(&[3], 3));
        assert_eq!(w(&[1, 2, -1], 2).len(), 3);
        assert!(FreeWord::from_signed(&[4], 3).is_err());
    }

    #[test]
    fn conjugation_and_products() {
        assert_eq!(w(&[2], 2).conjugate(&w(&[1], 2)).unwrap(), w(&[-1, 2, 1], 2));
        assert_eq!(w(&[1], 2).conjugate(&FreeWord::empty(2)).unwrap(), w(&[1], 2));
        assert!(w(&[1, 2], 2).multiply(&w(&[-2, -1], 2)).unwrap().is_empty());
        assert!(w(&[1], 2).multiply(&w(&[1], 3)).is_err());
    }

    #[test]
    fn cyclic_reduction() {
        let (c, g) = w(&[1, 2, -1], 2).cyclic_reduce();
        assert_eq!((c, g), (w(&[2], 2), w(&[-1], 2)));
        let (c, g) = w(&[1, 2], 2).cyclic_reduce();
        assert_eq!((c, g), (w(&[1, 2], 2), FreeWord::empty(2)));
        let x = w(&[-3, -1, 2, 1, 3], 3);
        let (c, g) = x.cyclic_reduce();
        assert_eq!(c, w(&[2], 3));
        assert_eq!(g, w(&[1, 3], 3));
        assert_eq!(c.conjugate(&g).unwrap(), x);
    }

    #[test]
    fn prefixes_and_squares() {
        let x = w(&[1, 2, -1], 2);
        assert!(x.begins_with(&w(&[1], 2)));
        assert!(!w(&[2], 2).begins_with(&w(&[1], 2)));
        assert!(x.ends_with(&w(&[2, -1], 2)));
        assert!(!w(&[1, 2, 2, 3], 3).is_squarefree());
        assert!(x.is_squarefree());
        assert!(FreeWord::empty(1).is_squarefree());
    }

    #[test]
    fn z1_words() {
        assert_eq!(z1(3).unwrap(), w(&[-3, -2, -1], 3));
        assert_eq!(z1(1).unwrap(), w(&[-1], 1));
        assert_eq!(z1(2).unwrap().inverse(), w(&[1, 2], 2));
        assert!(z1(0).is_err());
    }

    #[test]
    fn parse_round_trip() {
        let x = FreeWord::parse("1 -2 -1", 2).unwrap();
        assert_eq!(x.to_string(), "1 -2 -1");
        assert_eq!(FreeWord::parse(&x.to_string(), 2).unwrap(), x);
        assert!(FreeWord::parse("e", 3).unwrap().is_empty());
        assert!(FreeWord::parse("", 3).unwrap().is_empty());
        assert!(FreeWord::parse("0", 3).is_err());
    }
}

//! Braid words and their right action on the free group.
//!
//! `σ_i` sends `t_i ↦ t_{i+1}`, `t_{i+1} ↦ t̄_{i+1} t_i t_{i+1}`; a braid word
//! `b_1 b_2 ...` acts by applying `b_1` first.

use std::fmt;

use crate::error::{Error, Result};
use crate::word::{FreeWord, Letter};

/// Signed Artin generator indices on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    factors: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, factors: Vec<i32>) -> Result<BraidWord> {
        for &f in &factors {
            if f == 0 || f.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange { index: f as i64, rank: strands.saturating_sub(1) });
            }
        }
        Ok(BraidWord { strands, factors })
    }

    pub fn identity(strands: usize) -> BraidWord {
        BraidWord { strands, factors: Vec::new() }
    }

    pub fn generator(strands: usize, i: usize, positive: bool) -> BraidWord {
        assert!(i >= 1 && i < strands, "sigma_{i} outside B_{strands}");
        let f = i as i32;
        BraidWord { strands, factors: vec![if positive { f } else { -f }] }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn factors(&self) -> &[i32] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, factors: self.factors.iter().rev().map(|f| -f).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::RankMismatch { left: self.strands, right: other.strands });
        }
        let mut factors = self.factors.clone();
        factors.extend_from_slice(&other.factors);
        Ok(BraidWord { strands: self.strands, factors })
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate(&self, other: &BraidWord) -> Result<BraidWord> {
        other.inverse().concat(self)?.concat(other)
    }

    /// Adds `delta` to every index, moving to `strands` strands.
    pub fn shift(&self, delta: i32, strands: usize) -> Result<BraidWord> {
        let factors = self.factors.iter().map(|&f| if f > 0 { f + delta } else { f - delta }).collect();
        BraidWord::new(strands, factors)
    }

    pub fn parse(s: &str, strands: usize) -> Result<BraidWord> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return Ok(BraidWord::identity(strands));
        }
        let mut factors = Vec::new();
        for tok in t.split_whitespace() {
            let v: i32 = tok.parse().map_err(|_| Error::Parse(format!("bad braid factor `{tok}`")))?;
            factors.push(v);
        }
        BraidWord::new(strands, factors)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.factors.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Images of `t_i, t_{i+1}` under `σ_i^{±1}`, as signed letter sequences.
fn gen_images(i: usize, positive: bool) -> [Vec<Letter>; 2] {
    let a = Letter::pos(i);
    let b = Letter::pos(i + 1);
    if positive {
        [vec![b], vec![b.inverse(), a, b]]
    } else {
        [vec![a, b, a.inverse()], vec![a]]
    }
}

fn apply_gen_unchecked(w: &FreeWord, i: usize, positive: bool) -> FreeWord {
    let imgs = gen_images(i, positive);
    let mut raw = Vec::with_capacity(w.len() + 4);
    for &l in w.letters() {
        let k = l.index();
        if k == i || k == i + 1 {
            let img = &imgs[k - i];
            if l.is_positive() {
                raw.extend(img.iter().copied());
            } else {
                raw.extend(img.iter().rev().map(|x| x.inverse()));
            }
        } else {
            raw.push(l);
        }
    }
    FreeWord::from_letters_unchecked(w.rank(), raw)
}

/// `w^{σ_i}` (or `w^{σ̄_i}` when `positive` is false).
pub fn apply_gen(w: &FreeWord, i: usize, positive: bool) -> Result<FreeWord> {
    if i == 0 || i >= w.rank() {
        return Err(Error::IndexOutOfRange { index: i as i64, rank: w.rank().saturating_sub(1) });
    }
    Ok(apply_gen_unchecked(w, i, positive))
}

/// `w^b`, factors applied left to right.
pub fn apply_braid(w: &FreeWord, b: &BraidWord) -> Result<FreeWord> {
    if w.rank() != b.strands() {
        return Err(Error::RankMismatch { left: w.rank(), right: b.strands() });
    }
    let mut cur = w.clone();
    for &f in b.factors() {
        cur = apply_gen_unchecked(&cur, f.unsigned_abs() as usize, f > 0);
    }
    Ok(cur)
}

/// An endomorphism of the free group given by the images of the generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    rank: usize,
    images: Vec<FreeWord>,
}

impl Endomorphism {
    pub fn new(images: Vec<FreeWord>) -> Result<Endomorphism> {
        let rank = images.len();
        for w in &images {
            if w.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: w.rank() });
            }
        }
        Ok(Endomorphism { rank, images })
    }

    pub fn identity(rank: usize) -> Endomorphism {
        Endomorphism { rank, images: (1..=rank).map(|i| FreeWord::generator(rank, i)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, w)| w.len() == 1 && w.letters()[0] == Letter::pos(k + 1))
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { left: w.rank(), right: self.rank });
        }
        Ok(w.substitute(&self.images))
    }

    /// `self` first, then `other`: `t^{self·other} = (t^self)^other`.
    pub fn then(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(Endomorphism { rank: self.rank, images: self.images.iter().map(|w| w.substitute(&other.images)).collect() })
    }

    pub fn of_braid(b: &BraidWord) -> Endomorphism {
        let n = b.strands();
        let mut images: Vec<FreeWord> = (1..=n).map(|i| FreeWord::generator(n, i)).collect();
        for &f in b.factors() {
            let (i, pos) = (f.unsigned_abs() as usize, f > 0);
            for img in images.iter_mut() {
                *img = apply_gen_unchecked(img, i, pos);
            }
        }
        Endomorphism { rank: n, images }
    }

    /// `σ_i^{±1}` applied first, then `self`.
    pub fn prefixed(&self, i: usize, positive: bool) -> Endomorphism {
        let mut images = self.images.clone();
        let a = &self.images[i - 1];
        let b = &self.images[i];
        if positive {
            images[i - 1] = b.clone();
            images[i] = &(&b.inverse() * a) * b;
        } else {
            images[i - 1] = &(a * b) * &a.inverse();
            images[i] = a.clone();
        }
        Endomorphism { rank: self.rank, images }
    }
}

/// A braid automorphism with the decomposition `t_i ↦ w̄_i t_{iπ} w_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidAutomorphism {
    map: Endomorphism,
    perm: Vec<usize>,
    conj: Vec<FreeWord>,
    diffs: Vec<FreeWord>,
}

impl BraidAutomorphism {
    pub fn map(&self) -> &Endomorphism {
        &self.map
    }

    pub fn rank(&self) -> usize {
        self.map.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.map.images
    }

    pub fn image(&self, i: usize) -> &FreeWord {
        self.map.image(i)
    }

    /// `iπ` for `i` in `1..=n`.
    pub fn perm(&self, i: usize) -> usize {
        self.perm[i - 1]
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// `w_i` for `i` in `0..=n+1`; `w_0 = w_{n+1} = 1`.
    pub fn conjugator(&self, i: usize) -> FreeWord {
        let n = self.rank();
        if i == 0 || i == n + 1 {
            FreeWord::empty(n)
        } else {
            self.conj[i - 1].clone()
        }
    }

    /// `u_i = w_i w̄_{i+1}` for `i` in `0..=n`.
    pub fn difference(&self, i: usize) -> &FreeWord {
        &self.diffs[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.is_identity()
    }

    /// `‖φ‖ = Σ |t_i^φ|`.
    pub fn norm(&self) -> usize {
        self.map.images.iter().map(|w| w.len()).sum()
    }

    pub fn then(&self, other: &BraidAutomorphism) -> BraidAutomorphism {
        let map = self.map.then(&other.map).expect("equal ranks");
        BraidAutomorphism::decompose(map).expect("composite of braids is a braid")
    }

    pub fn inverse(&self) -> BraidAutomorphism {
        let b = recover_braid_word(self).expect("validated automorphism");
        automorphism_of(&b.inverse())
    }

    fn prefixed(&self, i: usize, positive: bool) -> BraidAutomorphism {
        BraidAutomorphism::decompose(self.map.prefixed(i, positive)).expect("braid prefix stays a braid")
    }

    fn decompose(map: Endomorphism) -> Result<BraidAutomorphism> {
        let n = map.rank;
        let mut perm = Vec::with_capacity(n);
        let mut conj = Vec::with_capacity(n);
        for (k, img) in map.images.iter().enumerate() {
            let (core, c) = img.cyclic_reduce();
            match core.letters() {
                [l] if l.is_positive() => {
                    perm.push(l.index());
                    conj.push(c);
                }
                _ => return Err(Error::NotConjugateToGenerator { index: k + 1 }),
            }
        }
        let mut seen = vec![false; n + 1];
        for &p in &perm {
            if seen[p] {
                return Err(Error::NotPermutation);
            }
            seen[p] = true;
        }
        let product = map.images.iter().fold(FreeWord::empty(n), |acc, w| &acc * w);
        if product != FreeWord::ascending_product(n, 1, n) {
            return Err(Error::ProductLawViolated);
        }
        let w = |i: usize| if i == 0 || i == n + 1 { FreeWord::empty(n) } else { conj[i - 1].clone() };
        let diffs = (0..=n).map(|i| &w(i) * &w(i + 1).inverse()).collect();
        Ok(BraidAutomorphism { map, perm, conj, diffs })
    }
}

/// The automorphism induced by a braid word.
pub fn automorphism_of(b: &BraidWord) -> BraidAutomorphism {
    BraidAutomorphism::decompose(Endomorphism::of_braid(b)).expect("braid words induce braid automorphisms")
}

/// Checks that an image tuple is a braid automorphism and decomposes it.
pub fn validate_tuple(images: Vec<FreeWord>) -> Result<BraidAutomorphism> {
    let map = Endomorphism::new(images)?;
    BraidAutomorphism::decompose(map)
}

pub fn norm(a: &BraidAutomorphism) -> usize {
    a.norm()
}

/// Which generator prefix shortens `a`, scanning `i` ascending and trying the
/// `σ_i` clause before the `σ̄_i` clause. `sigma_bar_min` restricts the second.
pub(crate) fn reducing_prefix(
    a: &BraidAutomorphism,
    sigma_min: usize,
    sigma_bar_min: usize,
) -> Option<(usize, bool)> {
    let n = a.rank();
    for i in 1..n {
        let u = a.difference(i);
        if i >= sigma_min && u.ends_with_letter(Letter::neg(a.perm(i + 1))) {
            return Some((i, true));
        }
        if i >= sigma_bar_min && u.begins_with_letter(Letter::neg(a.perm(i))) {
            return Some((i, false));
        }
    }
    None
}

/// Shortest-descent braid word inducing `a`.
pub fn recover_braid_word(a: &BraidAutomorphism) -> Result<BraidWord> {
    let n = a.rank();
    let mut cur = a.clone();
    let mut out = Vec::new();
    while !cur.is_identity() {
        let (i, pos) = reducing_prefix(&cur, 1, 1).ok_or(Error::NoReducingGenerator)?;
        let before = cur.norm();
        cur = cur.prefixed(i, pos);
        debug_assert!(cur.norm() + 2 <= before);
        out.push(if pos { -(i as i32) } else { i as i32 });
    }
    BraidWord::new(n, out)
}

/// Shared by the sigma1-nonpositive rewriting.
pub(crate) fn prefix_step(a: &BraidAutomorphism, i: usize, positive: bool) -> BraidAutomorphism {
    a.prefixed(i, positive)
}

/// `t_k ↦ (t̄_k)^{t̄_{k-1} ... t̄_1}`.
pub fn zeta(n: usize) -> Endomorphism {
    let images = (1..=n)
        .map(|k| {
            let c = if k > 1 { FreeWord::descending_inverse_product(n, k - 1, 1) } else { FreeWord::empty(n) };
            FreeWord::letter(n, Letter::neg(k)).conjugate(&c).expect("same rank")
        })
        .collect();
    Endomorphism { rank: n, images }
}

/// `t_j ↦ t̄_{n+1-j}`.
pub fn xi(n: usize) -> Endomorphism {
    let images = (1..=n).map(|j| FreeWord::letter(n, Letter::neg(n + 1 - j))).collect();
    Endomorphism { rank: n, images }
}

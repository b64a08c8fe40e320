//! Free products `C_m * ... * C_m` of cyclic groups and the braid action on them.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::word::FreeWord;

/// Syllable `τ_gen^exp` with `exp` in `1..m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub gen: usize,
    pub exp: u32,
}

/// Normal form in `C_m^{*n}`: adjacent syllables have distinct generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorsionWord {
    m: u32,
    rank: usize,
    syl: Vec<Syllable>,
}

fn push_syllable(out: &mut Vec<Syllable>, s: Syllable, m: u32) {
    if s.exp.is_multiple_of(m) {
        return;
    }
    match out.last_mut() {
        Some(last) if last.gen == s.gen => {
            let e = (last.exp + s.exp) % m;
            if e == 0 {
                out.pop();
            } else {
                last.exp = e;
            }
        }
        _ => out.push(Syllable { gen: s.gen, exp: s.exp % m }),
    }
}

impl TorsionWord {
    pub fn empty(m: u32, rank: usize) -> TorsionWord {
        TorsionWord { m, rank, syl: Vec::new() }
    }

    pub fn generator(m: u32, rank: usize, gen: usize) -> TorsionWord {
        TorsionWord::from_pairs(m, rank, &[(gen, 1)]).expect("generator in range")
    }

    /// Builds and normalizes from `(generator, exponent)` pairs; exponents may be any integer.
    pub fn from_pairs(m: u32, rank: usize, pairs: &[(usize, i64)]) -> Result<TorsionWord> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        let mut out = Vec::with_capacity(pairs.len());
        for &(g, e) in pairs {
            if g == 0 || g > rank {
                return Err(Error::IndexOutOfRange { index: g as i64, rank });
            }
            let exp = e.rem_euclid(m as i64) as u32;
            push_syllable(&mut out, Syllable { gen: g, exp }, m);
        }
        Ok(TorsionWord { m, rank, syl: out })
    }

    pub(crate) fn from_syllables_unchecked(m: u32, rank: usize, raw: impl IntoIterator<Item = Syllable>) -> TorsionWord {
        let mut out = Vec::new();
        for s in raw {
            push_syllable(&mut out, s, m);
        }
        TorsionWord { m, rank, syl: out }
    }

    pub fn modulus(&self) -> u32 {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syl
    }

    pub fn is_empty(&self) -> bool {
        self.syl.is_empty()
    }

    /// Number of syllables.
    pub fn syllable_count(&self) -> usize {
        self.syl.len()
    }

    fn check(&self, other: &TorsionWord) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch { left: self.m, right: other.m });
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    pub(crate) fn mul_unchecked(&self, other: &TorsionWord) -> TorsionWord {
        let mut out = self.syl.clone();
        for &s in &other.syl {
            push_syllable(&mut out, s, self.m);
        }
        TorsionWord { m: self.m, rank: self.rank, syl: out }
    }

    pub fn multiply(&self, other: &TorsionWord) -> Result<TorsionWord> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn inverse(&self) -> TorsionWord {
        let m = self.m;
        TorsionWord { m, rank: self.rank, syl: self.syl.iter().rev().map(|s| Syllable { gen: s.gen, exp: m - s.exp }).collect() }
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate(&self, g: &TorsionWord) -> Result<TorsionWord> {
        self.check(g)?;
        Ok(g.inverse().mul_unchecked(self).mul_unchecked(g))
    }

    /// Sum of syllable lengths.
    pub fn length(&self) -> usize {
        self.syl.iter().map(|s| syllable_length(s.exp, self.m)).sum()
    }

    /// Substitutes `images[i-1]` for `τ_i`, raised to each syllable's exponent.
    pub fn substitute(&self, images: &[TorsionWord]) -> TorsionWord {
        let mut out = Vec::new();
        for s in &self.syl {
            let img = &images[s.gen - 1];
            for _ in 0..s.exp {
                for &x in &img.syl {
                    push_syllable(&mut out, x, self.m);
                }
            }
        }
        TorsionWord { m: self.m, rank: images.first().map_or(self.rank, |w| w.rank), syl: out }
    }

    /// Peels inverse outer syllables; returns `(core, c)` with `self = c⁻¹·core·c`.
    pub fn cyclic_reduce(&self) -> (TorsionWord, TorsionWord) {
        let s = &self.syl;
        let n = s.len();
        let mut k = 0;
        while 2 * k + 1 < n
            && s[k].gen == s[n - 1 - k].gen
            && (s[k].exp + s[n - 1 - k].exp).is_multiple_of(self.m)
        {
            k += 1;
        }
        let core = TorsionWord { m: self.m, rank: self.rank, syl: s[k..n - k].to_vec() };
        let conj = TorsionWord { m: self.m, rank: self.rank, syl: s[n - k..].to_vec() };
        (core, conj)
    }

    /// Syllables as `i^e`, or `e` when empty.
    pub fn parse(s: &str, m: u32, rank: usize) -> Result<TorsionWord> {
        let t = s.trim();
        if t.is_empty() || t == "e" {
            return TorsionWord::from_pairs(m, rank, &[]);
        }
        let mut pairs = Vec::new();
        for tok in t.split_whitespace() {
            let (g, e) = match tok.split_once('^') {
                Some((g, e)) => (g, e),
                None => (tok, "1"),
            };
            let g: usize = g.parse().map_err(|_| Error::Parse(format!("bad syllable `{tok}`")))?;
            let e: i64 = e.parse().map_err(|_| Error::Parse(format!("bad syllable `{tok}`")))?;
            pairs.push((g, e));
        }
        TorsionWord::from_pairs(m, rank, &pairs)
    }
}

impl fmt::Display for TorsionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syl.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.syl.iter().map(|s| format!("{}^{}", s.gen, s.exp)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `|τ^k|`: `2k` for `k` in `0..=⌊m/2⌋`, otherwise `2(m-k)-1`.
pub fn syllable_length(exp: u32, m: u32) -> usize {
    let k = exp % m;
    if k <= m / 2 {
        2 * k as usize
    } else {
        2 * (m - k) as usize - 1
    }
}

pub fn tw_length(w: &TorsionWord) -> usize {
    w.length()
}

/// `t_i ↦ τ_i`.
pub fn project(w: &FreeWord, m: u32) -> Result<TorsionWord> {
    let pairs: Vec<(usize, i64)> = w.letters().iter().map(|l| (l.index(), if l.is_positive() { 1 } else { -1 })).collect();
    TorsionWord::from_pairs(m, w.rank(), &pairs)
}

fn gen_images(m: u32, rank: usize, i: usize, positive: bool) -> [TorsionWord; 2] {
    let t = |g: usize, e: i64| (g, e);
    let mk = |p: &[(usize, i64)]| TorsionWord::from_pairs(m, rank, p).expect("in range");
    if positive {
        [mk(&[t(i + 1, 1)]), mk(&[t(i + 1, -1), t(i, 1), t(i + 1, 1)])]
    } else {
        [mk(&[t(i, 1), t(i + 1, 1), t(i, -1)]), mk(&[t(i, 1)])]
    }
}

fn apply_gen_tw(w: &TorsionWord, i: usize, positive: bool) -> TorsionWord {
    let imgs = gen_images(w.m, w.rank, i, positive);
    let mut out = Vec::new();
    for s in &w.syl {
        if s.gen == i || s.gen == i + 1 {
            let img = &imgs[s.gen - i];
            for _ in 0..s.exp {
                for &x in &img.syl {
                    push_syllable(&mut out, x, w.m);
                }
            }
        } else {
            push_syllable(&mut out, *s, w.m);
        }
    }
    TorsionWord { m: w.m, rank: w.rank, syl: out }
}

/// `w^b` with the same generator tables as on the free group.
pub fn tw_apply_braid(w: &TorsionWord, b: &BraidWord) -> Result<TorsionWord> {
    if w.rank != b.strands() {
        return Err(Error::RankMismatch { left: w.rank, right: b.strands() });
    }
    let mut cur = w.clone();
    for &f in b.factors() {
        cur = apply_gen_tw(&cur, f.unsigned_abs() as usize, f > 0);
    }
    Ok(cur)
}

/// Images of `τ_1..τ_n` under `b`.
pub fn tw_images(b: &BraidWord, m: u32) -> Result<Vec<TorsionWord>> {
    if m < 2 {
        return Err(Error::BadModulus(m));
    }
    let n = b.strands();
    let mut imgs: Vec<TorsionWord> = (1..=n).map(|i| TorsionWord::generator(m, n, i)).collect();
    for &f in b.factors() {
        let (i, pos) = (f.unsigned_abs() as usize, f > 0);
        for w in imgs.iter_mut() {
            *w = apply_gen_tw(w, i, pos);
        }
    }
    Ok(imgs)
}

struct TorsionDecomposition {
    perm: Vec<usize>,
    conj: Vec<TorsionWord>,
}

fn decompose(images: &[TorsionWord]) -> Result<TorsionDecomposition> {
    let n = images.len();
    let mut perm = Vec::with_capacity(n);
    let mut conj = Vec::with_capacity(n);
    for (k, img) in images.iter().enumerate() {
        let (core, c) = img.cyclic_reduce();
        match core.syl.as_slice() {
            [s] if s.exp == 1 => {
                perm.push(s.gen);
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
    Ok(TorsionDecomposition { perm, conj })
}

/// Validates an image tuple: conjugates of generators, a permutation, and the product law.
pub fn tw_validate(images: &[TorsionWord]) -> Result<()> {
    let n = images.len();
    let m = images.first().map_or(2, |w| w.m);
    for w in images {
        if w.m != m {
            return Err(Error::ModulusMismatch { left: m, right: w.m });
        }
        if w.rank != n {
            return Err(Error::WrongTupleLength { expected: w.rank, got: n });
        }
    }
    decompose(images)?;
    let prod = images.iter().fold(TorsionWord::empty(m, n), |acc, w| acc.mul_unchecked(w));
    let target = TorsionWord::from_syllables_unchecked(m, n, (1..=n).map(|g| Syllable { gen: g, exp: 1 }));
    if prod != target {
        return Err(Error::ProductLawViolated);
    }
    Ok(())
}

/// `n + 2 Σ |w_i|`.
pub fn tw_norm(images: &[TorsionWord]) -> Result<usize> {
    let d = decompose(images)?;
    Ok(images.len() + 2 * d.conj.iter().map(|w| w.length()).sum::<usize>())
}

fn prefixed(images: &[TorsionWord], i: usize, positive: bool) -> Vec<TorsionWord> {
    let n = images.len();
    let (m, rank) = (images[0].m, images[0].rank);
    let g = gen_images(m, rank, i, positive);
    let mut out = images.to_vec();
    out[i - 1] = g[0].substitute(images);
    out[i] = g[1].substitute(images);
    debug_assert_eq!(out.len(), n);
    out
}

fn is_identity(images: &[TorsionWord]) -> bool {
    images.iter().enumerate().all(|(k, w)| w.syl.len() == 1 && w.syl[0] == Syllable { gen: k + 1, exp: 1 })
}

/// Exponent of the trailing `τ_g` syllable of `u`, or 0.
fn trailing_exp(u: &TorsionWord, g: usize) -> u32 {
    match u.syl.last() {
        Some(s) if s.gen == g => s.exp,
        _ => 0,
    }
}

fn leading_exp(u: &TorsionWord, g: usize) -> u32 {
    match u.syl.first() {
        Some(s) if s.gen == g => s.exp,
        _ => 0,
    }
}

/// Braid word inducing the given images, by norm descent.
pub fn tw_recover_braid(images: &[TorsionWord]) -> Result<BraidWord> {
    tw_validate(images)?;
    let n = images.len();
    let m = images[0].m;
    let mut cur = images.to_vec();
    let mut out = Vec::new();
    while !is_identity(&cur) {
        let d = decompose(&cur)?;
        let w = |i: usize| if i == 0 || i == n + 1 { TorsionWord::empty(m, n) } else { d.conj[i - 1].clone() };
        let u = |i: usize| w(i).mul_unchecked(&w(i + 1).inverse());
        let mut step = None;
        for i in 1..=n {
            let g = d.perm[i - 1];
            let a = if i >= 2 { trailing_exp(&u(i - 1), g) } else { 0 };
            if i >= 2 && a >= m / 2 && a >= 1 {
                step = Some((i - 1, true));
                break;
            }
            let b = if i < n { leading_exp(&u(i), g) } else { 0 };
            if i < n && b >= m.div_ceil(2) && b >= 1 {
                step = Some((i, false));
                break;
            }
        }
        let (i, pos) = step.ok_or(Error::NoReducingGenerator)?;
        let before = tw_norm(&cur)?;
        cur = prefixed(&cur, i, pos);
        if tw_norm(&cur)? >= before {
            return Err(Error::NoReducingGenerator);
        }
        out.push(if pos { -(i as i32) } else { i as i32 });
    }
    BraidWord::new(n, out)
}

//! The even-length subgroup `Φ_n` of `C_2^{*(n+1)}`, its free bases, and
//! the braid actions they carry.

use std::collections::HashMap;

use crate::braid::{apply_braid, BraidWord};
use crate::error::{Error, Result};
use crate::relations::Report;
use crate::torsion::{tw_apply_braid, TorsionWord};
use crate::word::{FreeWord, Letter};

/// An even-length element of `C_2^{*(n+1)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhiElement(TorsionWord);

impl PhiElement {
    pub fn new(w: TorsionWord) -> Result<PhiElement> {
        if w.modulus() != 2 {
            return Err(Error::ModulusMismatch { left: 2, right: w.modulus() });
        }
        if !w.syllable_count().is_multiple_of(2) {
            return Err(Error::OddElement);
        }
        Ok(PhiElement(w))
    }

    pub fn word(&self) -> &TorsionWord {
        &self.0
    }

    /// `n` for an element of `Φ_n`.
    pub fn phi_rank(&self) -> usize {
        self.0.rank() - 1
    }

    fn from_gens(n: usize, gens: &[usize]) -> PhiElement {
        let w = TorsionWord::from_pairs(2, n + 1, &gens.iter().map(|&g| (g, 1)).collect::<Vec<_>>()).expect("in range");
        PhiElement::new(w).expect("even by construction")
    }
}

/// `τ_a τ_b ↦ ȳ_a y_b` where `y_k = τ_{n+1} τ_k` and `y_{n+1} = 1`.
fn to_y_word(g: &PhiElement) -> FreeWord {
    let n = g.phi_rank();
    let mut raw = Vec::new();
    for pair in g.0.syllables().chunks(2) {
        let (a, b) = (pair[0].gen, pair[1].gen);
        if a <= n {
            raw.push(Letter::neg(a));
        }
        if b <= n {
            raw.push(Letter::pos(b));
        }
    }
    FreeWord::reduce(&raw, n).expect("indices below n+1")
}

/// Gens of `Π τ_{[a↑b]}`, empty if `a > b`.
fn up(a: usize, b: usize) -> Vec<usize> {
    if a > b { Vec::new() } else { (a..=b).collect() }
}

fn down(a: usize, b: usize) -> Vec<usize> {
    if a < b { Vec::new() } else { (b..=a).rev().collect() }
}

/// `x^c = c̄ x c` in `C_2`, where every generator is its own inverse.
fn conj(x: &[usize], c: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = c.iter().rev().copied().collect();
    out.extend_from_slice(x);
    out.extend_from_slice(c);
    out
}

/// The four free bases of `Φ_n`.
pub fn phi_basis(variant: u32, n: usize) -> Result<Vec<PhiElement>> {
    if n < 1 {
        return Err(Error::RankTooSmall { min: 1, got: n });
    }
    let top = n + 1;
    let basis = (1..=n)
        .map(|k| {
            let gens: Vec<usize> = match variant {
                1 => vec![k, k + 1],
                2 => vec![top, k],
                3 => {
                    let mut v = conj(&[top], &up(1, k - 1));
                    v.push(k);
                    v
                }
                4 => {
                    let mut inner = conj(&[top], &down(n, 1));
                    inner.push(k);
                    conj(&inner, &up(k, top))
                }
                _ => return Err(Error::BadVariant(variant)),
            };
            Ok(PhiElement::from_gens(n, &gens))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(basis)
}

#[derive(Debug, Clone)]
struct Edge {
    from: usize,
    to: usize,
    letter: usize,
    label: FreeWord,
    alive: bool,
}

/// A folded graph presenting the subgroup generated by a basis, with every
/// edge carrying its value as a word in the basis.
#[derive(Debug, Clone)]
pub struct PhiBasis {
    n: usize,
    elements: Vec<PhiElement>,
    out_edges: HashMap<(usize, i32), (usize, FreeWord)>,
}

impl PhiBasis {
    pub fn new(elements: Vec<PhiElement>) -> Result<PhiBasis> {
        let n = elements.len();
        if n == 0 {
            return Err(Error::RankTooSmall { min: 1, got: 0 });
        }
        for e in &elements {
            if e.phi_rank() != n {
                return Err(Error::RankMismatch { left: n, right: e.phi_rank() });
            }
        }
        let mut edges: Vec<Edge> = Vec::new();
        let mut next_vertex = 1;
        for (k, e) in elements.iter().enumerate() {
            let y = to_y_word(e);
            let letters = y.letters();
            if letters.is_empty() {
                return Err(Error::NotInSubgroup);
            }
            let mut prev = 0;
            for (j, &l) in letters.iter().enumerate() {
                let next = if j + 1 == letters.len() {
                    0
                } else {
                    next_vertex += 1;
                    next_vertex - 1
                };
                let label = if j == 0 { FreeWord::generator(n, k + 1) } else { FreeWord::empty(n) };
                if l.is_positive() {
                    edges.push(Edge { from: prev, to: next, letter: l.index(), label, alive: true });
                } else {
                    edges.push(Edge { from: next, to: prev, letter: l.index(), label: label.inverse(), alive: true });
                }
                prev = next;
            }
        }
        fold(&mut edges)?;
        let mut out_edges = HashMap::new();
        for e in edges.iter().filter(|e| e.alive) {
            out_edges.insert((e.from, e.letter as i32), (e.to, e.label.clone()));
            out_edges.insert((e.to, -(e.letter as i32)), (e.from, e.label.inverse()));
        }
        Ok(PhiBasis { n, elements, out_edges })
    }

    pub fn variant(variant: u32, n: usize) -> Result<PhiBasis> {
        PhiBasis::new(phi_basis(variant, n)?)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[PhiElement] {
        &self.elements
    }

    /// Writes `g` as a word in the basis.
    pub fn rewrite(&self, g: &PhiElement) -> Result<FreeWord> {
        if g.phi_rank() != self.n {
            return Err(Error::RankMismatch { left: self.n, right: g.phi_rank() });
        }
        let y = to_y_word(g);
        let mut v = 0;
        let mut acc = FreeWord::empty(self.n);
        for l in y.letters() {
            let (to, label) = self.out_edges.get(&(v, l.signed())).ok_or(Error::NotInSubgroup)?;
            acc = &acc * label;
            v = *to;
        }
        if v != 0 {
            return Err(Error::NotInSubgroup);
        }
        Ok(acc)
    }

    /// The element named by a word in the basis.
    pub fn expand(&self, xw: &FreeWord) -> Result<PhiElement> {
        if xw.rank() != self.n {
            return Err(Error::RankMismatch { left: self.n, right: xw.rank() });
        }
        let mut acc = TorsionWord::empty(2, self.n + 1);
        for l in xw.letters() {
            let e = self.elements[l.index() - 1].word();
            let piece = if l.is_positive() { e.clone() } else { e.inverse() };
            acc = acc.multiply(&piece)?;
        }
        PhiElement::new(acc)
    }
}

fn fold(edges: &mut [Edge]) -> Result<()> {
    loop {
        let mut found = None;
        let mut index: HashMap<(usize, usize, bool), usize> = HashMap::new();
        'scan: for (k, e) in edges.iter().enumerate() {
            if !e.alive {
                continue;
            }
            for key in [(e.from, e.letter, true), (e.to, e.letter, false)] {
                if let Some(&j) = index.get(&key) {
                    found = Some((j, k, key.2));
                    break 'scan;
                }
                index.insert(key, k);
            }
        }
        let Some((j, k, outgoing)) = found else {
            return Ok(());
        };
        let (e1, e2) = (edges[j].clone(), edges[k].clone());
        // Merge the far endpoint of e2 into that of e1, correcting labels by c.
        let (mut keep, mut gone, mut c) = if outgoing {
            (e1.to, e2.to, &e1.label.inverse() * &e2.label)
        } else {
            (e1.from, e2.from, &e1.label * &e2.label.inverse())
        };
        if keep == gone {
            if !c.is_empty() {
                return Err(Error::NotInSubgroup);
            }
            edges[k].alive = false;
            continue;
        }
        if gone == 0 {
            std::mem::swap(&mut keep, &mut gone);
            c = c.inverse();
        }
        let cinv = c.inverse();
        for e in edges.iter_mut().filter(|e| e.alive) {
            if e.from == gone {
                e.from = keep;
                e.label = &c * &e.label;
            }
            if e.to == gone {
                e.to = keep;
                e.label = &e.label * &cinv;
            }
        }
    }
}

pub fn rewrite_in_basis(g: &PhiElement, basis: &PhiBasis) -> Result<FreeWord> {
    basis.rewrite(g)
}

/// First action on a free group of rank `n`:
/// `σ_i: x_i ↦ x_{i+1}, x_{i+1} ↦ x̄_{i+1}^m x_i x_{i+1}^m`.
pub fn wada_first(xw: &FreeWord, b: &BraidWord, m: i64) -> Result<FreeWord> {
    let n = xw.rank();
    if b.strands() != n {
        return Err(Error::RankMismatch { left: n, right: b.strands() });
    }
    let mut cur = xw.clone();
    for &f in b.factors() {
        let i = f.unsigned_abs() as usize;
        let xi = FreeWord::generator(n, i);
        let xj = FreeWord::generator(n, i + 1);
        let mut images: Vec<FreeWord> = (1..=n).map(|k| FreeWord::generator(n, k)).collect();
        if f > 0 {
            images[i - 1] = xj.clone();
            images[i] = xi.conjugate(&xj.pow(m))?;
        } else {
            images[i] = xi.clone();
            images[i - 1] = xj.conjugate(&xi.pow(-m))?;
        }
        cur = cur.substitute(&images);
    }
    Ok(cur)
}

/// Braid action on words in a basis of `Φ_n`. Variants 2-4 act through
/// `C_2^{*(n+1)}` with `b` in `B_{n+1}`; variant 1 is the first action with
/// exponent `m` and `b` in `B_n`.
pub fn wada_action(xw: &FreeWord, b: &BraidWord, variant: u32, m: i64) -> Result<FreeWord> {
    match variant {
        1 => wada_first(xw, b, m),
        2..=4 => {
            let basis = PhiBasis::variant(variant, xw.rank())?;
            wada_via_basis(xw, b, &basis)
        }
        _ => Err(Error::BadVariant(variant)),
    }
}

pub fn wada_via_basis(xw: &FreeWord, b: &BraidWord, basis: &PhiBasis) -> Result<FreeWord> {
    if b.strands() != basis.rank() + 1 {
        return Err(Error::RankMismatch { left: basis.rank() + 1, right: b.strands() });
    }
    let g = basis.expand(xw)?;
    let moved = tw_apply_braid(g.word(), b)?;
    basis.rewrite(&PhiElement::new(moved)?)
}

/// `Π x_{[a↑b]}` with each factor raised to `e`.
fn xrun(n: usize, a: usize, b: usize, e: i64) -> FreeWord {
    let mut out = FreeWord::empty(n);
    for k in a..=b {
        out = &out * &FreeWord::generator(n, k).pow(e);
    }
    out
}

fn x(n: usize, k: usize) -> FreeWord {
    FreeWord::generator(n, k)
}

fn xb(n: usize, k: usize) -> FreeWord {
    FreeWord::letter(n, Letter::neg(k))
}

fn prod(ws: &[FreeWord]) -> FreeWord {
    let n = ws[0].rank();
    ws.iter().fold(FreeWord::empty(n), |acc, w| &acc * w)
}

/// Closed-form images of `x_1..x_n` under `σ_i`, `i` in `1..=n`, as derived
/// by direct computation in each basis.
pub fn wada_closed_form(variant: u32, n: usize, i: usize) -> Result<Vec<FreeWord>> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i as i64, rank: n });
    }
    let mut img: Vec<FreeWord> = (1..=n).map(|k| x(n, k)).collect();
    match variant {
        1 => {
            if i >= 2 {
                img[i - 2] = prod(&[x(n, i - 1), x(n, i)]);
            }
            if i < n {
                img[i] = prod(&[xb(n, i), x(n, i + 1)]);
            }
        }
        2 => {
            if i < n {
                img[i - 1] = x(n, i + 1);
                img[i] = prod(&[x(n, i + 1), xb(n, i), x(n, i + 1)]);
            } else {
                for k in 1..n {
                    img[k - 1] = prod(&[x(n, n), x(n, k)]);
                }
            }
        }
        3 | 4 => {
            if i < n {
                if variant == 3 {
                    img[i - 1] = prod(&[x(n, i), x(n, i), x(n, i + 1)]);
                    img[i] = prod(&[xb(n, i + 1), xb(n, i), x(n, i + 1)]);
                } else {
                    img[i - 1] = prod(&[x(n, i), xb(n, i + 1), xb(n, i)]);
                    img[i] = prod(&[x(n, i), x(n, i + 1), x(n, i + 1)]);
                }
            } else {
                img = sigma_n_row(variant, n);
            }
        }
        _ => return Err(Error::BadVariant(variant)),
    }
    Ok(img)
}

/// The `σ_n` rows of bases 3 and 4, with `w = (Π x²_{[1↑n-1]} x_n)^{∓1}`:
/// `x_k ↦ (w^{(-1)^k})^{Π x_{[1↑k-1]}} x_k` and
/// `x_n ↦ (w^{(-1)^n})^{Π x_{[1↑n-1]}} x_n w`.
pub fn sigma_n_row(variant: u32, n: usize) -> Vec<FreeWord> {
    let base = prod(&[xrun(n, 1, n - 1, 2), x(n, n)]);
    let w = if variant == 3 { base.inverse() } else { base };
    let sign = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let mut img = Vec::with_capacity(n);
    for k in 1..n {
        let c = xrun(n, 1, k - 1, 1);
        img.push(&w.pow(sign(k)).conjugate(&c).expect("same rank") * &x(n, k));
    }
    let c = xrun(n, 1, n - 1, 1);
    img.push(prod(&[w.pow(sign(n)).conjugate(&c).expect("same rank"), x(n, n), w]));
    img
}

/// Compares the computed action of every `σ_i` on every `x_k` against `table`.
pub fn check_wada_table(
    variant: u32,
    n: usize,
    table: impl Fn(u32, usize, usize) -> Result<Vec<FreeWord>>,
) -> Result<Report> {
    let basis = PhiBasis::variant(variant, n)?;
    let mut r = Report::default();
    for i in 1..=n {
        let expected = table(variant, n, i)?;
        let s = BraidWord::generator(n + 1, i, true);
        for k in 1..=n {
            let got = wada_via_basis(&x(n, k), &s, &basis)?;
            r.push(format!("basis {variant}, n={n}: x{k}^s{i}"), got == expected[k - 1]);
        }
    }
    Ok(r)
}

/// `x_k^m` transform under the first action as `t_k` under the standard one.
pub fn check_formanek(n: usize, m: i64, b: &BraidWord) -> Result<bool> {
    let powers: Vec<FreeWord> = (1..=n).map(|k| x(n, k).pow(m)).collect();
    for k in 1..=n {
        let lhs = wada_first(&powers[k - 1], b, m)?;
        let rhs = apply_braid(&FreeWord::generator(n, k), b)?.substitute(&powers);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

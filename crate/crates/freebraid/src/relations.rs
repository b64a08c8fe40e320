//! Identity checks: Artin relations, the Magnus identities, and the
//! semidirect product `B_n ⋉ F_n` with `(φ,u)(ψ,v) = (φψ, u^ψ v)`.

use crate::braid::{apply_braid, automorphism_of, BraidWord};
use crate::error::{Error, Result};
use crate::word::{FreeWord, Letter};

/// One named identity and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, name: impl Into<String>, ok: bool) {
        self.checks.push(Check { name: name.into(), ok });
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| !c.ok).map(|c| c.name.as_str()).collect()
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

/// Equality of braid words as automorphisms.
pub fn same_braid(x: &BraidWord, y: &BraidWord) -> bool {
    x.strands() == y.strands() && automorphism_of(x).images() == automorphism_of(y).images()
}

fn bw(n: usize, f: Vec<i32>) -> BraidWord {
    BraidWord::new(n, f).expect("indices in range")
}

/// `σ_from σ_{from+1} ... σ_to` (empty when `from > to`), signed.
fn run(n: usize, from: usize, to: usize, positive: bool) -> BraidWord {
    let s = if positive { 1 } else { -1 };
    bw(n, (from..=to).map(|i| s * i as i32).collect())
}

/// `σ̄_from σ̄_{from-1} ... σ̄_to` for `from >= to`.
fn run_down_inv(n: usize, from: usize, to: usize) -> BraidWord {
    bw(n, (to..=from).rev().map(|i| -(i as i32)).collect())
}

/// Far commutation and braid relations in `B_n`, plus the identities in
/// `B_{n+1}` relating conjugates of `σ_n` and the stabilizer of `[t_{n+1}]`.
pub fn check_relations(n: usize) -> Result<Report> {
    if n < 2 {
        return Err(Error::RankTooSmall { min: 2, got: n });
    }
    let mut r = Report::default();
    for i in 1..n {
        for j in (i + 2)..n {
            let lhs = bw(n, vec![i as i32, j as i32]);
            let rhs = bw(n, vec![j as i32, i as i32]);
            r.push(format!("B{n}: s{i} s{j} = s{j} s{i}"), same_braid(&lhs, &rhs));
        }
        if i + 1 < n {
            let (a, c) = (i as i32, i as i32 + 1);
            r.push(format!("B{n}: s{i} s{} s{i} = s{} s{i} s{}", i + 1, i + 1, i + 1), same_braid(&bw(n, vec![a, c, a]), &bw(n, vec![c, a, c])));
        }
    }
    r.extend(check_conjugate_identity(n));
    r.extend(check_stabilizer(n));
    Ok(r)
}

/// In `B_{n+1}`: `σ_n^{σ̄_{n-1}...σ̄_i} = σ_i^{σ_{i+1}...σ_n}` for `i` in `1..=n`.
pub fn check_conjugate_identity(n: usize) -> Report {
    let m = n + 1;
    let mut r = Report::default();
    for i in 1..=n {
        let lhs = bw(m, vec![n as i32]).conjugate(&run_down_inv(m, n - 1, i)).expect("same strands");
        let rhs = bw(m, vec![i as i32]).conjugate(&run(m, i + 1, n, true)).expect("same strands");
        r.push(format!("B{m}: conjugates of s{n} and s{i} agree (i={i})"), same_braid(&lhs, &rhs));
    }
    r
}

fn fixes_class_of_last(b: &BraidWord) -> bool {
    let m = b.strands();
    let img = apply_braid(&FreeWord::generator(m, m), b).expect("same rank");
    let (core, _) = img.cyclic_reduce();
    core.letters() == [Letter::pos(m)]
}

/// In `B_{n+1}`: `σ_1..σ_{n-1}`, `σ_n²` and every `(σ_i^{-2})^{σ_{i+1}...σ_n}`
/// preserve the conjugacy class of `t_{n+1}`.
pub fn check_stabilizer(n: usize) -> Report {
    let m = n + 1;
    let mut r = Report::default();
    for i in 1..n {
        r.push(format!("B{m}: s{i} fixes [t{m}]"), fixes_class_of_last(&bw(m, vec![i as i32])));
    }
    r.push(format!("B{m}: s{n}^2 fixes [t{m}]"), fixes_class_of_last(&bw(m, vec![n as i32, n as i32])));
    for i in 1..=n {
        let core = bw(m, vec![-(i as i32), -(i as i32)]);
        let g = core.conjugate(&run(m, i + 1, n, true)).expect("same strands");
        r.push(format!("B{m}: (s{i}^-2)^(s{}..s{n}) fixes [t{m}]", i + 1), fixes_class_of_last(&g));
    }
    r
}

/// Element `(φ, u)` of `B_n ⋉ F_n`.
#[derive(Debug, Clone)]
pub struct SemiElement {
    pub braid: BraidWord,
    pub word: FreeWord,
}

impl SemiElement {
    pub fn identity(n: usize) -> SemiElement {
        SemiElement { braid: BraidWord::identity(n), word: FreeWord::empty(n) }
    }

    pub fn new(braid: BraidWord, word: FreeWord) -> Result<SemiElement> {
        if braid.strands() != word.rank() {
            return Err(Error::RankMismatch { left: braid.strands(), right: word.rank() });
        }
        Ok(SemiElement { braid, word })
    }

    pub fn multiply(&self, other: &SemiElement) -> Result<SemiElement> {
        let braid = self.braid.concat(&other.braid)?;
        let moved = apply_braid(&self.word, &other.braid)?;
        Ok(SemiElement { braid, word: moved.multiply(&other.word)? })
    }

    pub fn inverse(&self) -> SemiElement {
        let inv = self.braid.inverse();
        let word = apply_braid(&self.word.inverse(), &inv).expect("same rank");
        SemiElement { braid: inv, word }
    }

    /// `other⁻¹ · self · other`.
    pub fn conjugate(&self, other: &SemiElement) -> Result<SemiElement> {
        other.inverse().multiply(self)?.multiply(other)
    }

    /// Equal braid automorphisms and equal words.
    pub fn same(&self, other: &SemiElement) -> bool {
        self.word == other.word && same_braid(&self.braid, &other.braid)
    }
}

pub fn semidirect_multiply(p: &SemiElement, q: &SemiElement) -> Result<SemiElement> {
    p.multiply(q)
}

/// Generators `b_1..b_n` of the semidirect product: `b_i = (σ_i, 1)` and `b_n = (1, t̄_n)`.
pub fn semidirect_generators(n: usize) -> Vec<SemiElement> {
    let mut out: Vec<SemiElement> = (1..n)
        .map(|i| SemiElement { braid: BraidWord::generator(n, i, true), word: FreeWord::empty(n) })
        .collect();
    out.push(SemiElement { braid: BraidWord::identity(n), word: FreeWord::letter(n, Letter::neg(n)) });
    out
}

/// `𝔱_k = b̄_n^{b̄_{n-1} ... b̄_k}` for `k` in `1..=n`.
pub fn frak_t(n: usize, k: usize) -> SemiElement {
    let b = semidirect_generators(n);
    let mut conj = SemiElement::identity(n);
    for i in (k..n).rev() {
        conj = conj.multiply(&b[i - 1].inverse()).expect("same rank");
    }
    b[n - 1].inverse().conjugate(&conj).expect("same rank")
}

/// The identities behind the presentation of `B_n ⋉ F_n` as a type-B Artin
/// group: `𝔱_k = (1, t_k)`, `𝔱_k^{b̄_i} = 𝔱_k^{σ̄_i}`, and the defining relations.
pub fn check_semidirect(n: usize) -> Result<Report> {
    if n < 1 {
        return Err(Error::RankTooSmall { min: 1, got: n });
    }
    let mut r = Report::default();
    let b = semidirect_generators(n);
    let t: Vec<SemiElement> = (1..=n).map(|k| frak_t(n, k)).collect();
    for k in 1..=n {
        let plain = SemiElement { braid: BraidWord::identity(n), word: FreeWord::generator(n, k) };
        r.push(format!("n={n}: frak t{k} = (1, t{k})"), t[k - 1].same(&plain));
    }
    for i in 1..n {
        let bi_inv = b[i - 1].inverse();
        for k in 1..=n {
            let lhs = t[k - 1].conjugate(&bi_inv)?;
            let rhs = if k == i + 1 {
                t[i - 1].clone()
            } else if k == i {
                t[i - 1].multiply(&t[i])?.multiply(&t[i - 1].inverse())?
            } else {
                t[k - 1].clone()
            };
            r.push(format!("n={n}: frak t{k}^(b{i}^-1) = frak t{k}^(s{i}^-1)"), lhs.same(&rhs));
        }
    }
    for m in 1..n {
        let lhs = t[m].conjugate(&b[m - 1].inverse())?;
        r.push(format!("n={n}: frak t{}^(b{m}^-1) = frak t{m}", m + 1), lhs.same(&t[m - 1]));
    }
    let prod = |xs: &[&SemiElement]| -> Result<SemiElement> {
        xs.iter().try_fold(SemiElement::identity(n), |acc, x| acc.multiply(x))
    };
    for i in 1..=n {
        for j in (i + 2)..=n {
            let (x, y) = (&b[i - 1], &b[j - 1]);
            r.push(format!("n={n}: b{i} b{j} = b{j} b{i}"), prod(&[x, y])?.same(&prod(&[y, x])?));
        }
    }
    for i in 1..n.saturating_sub(1) {
        let (x, y) = (&b[i - 1], &b[i]);
        r.push(format!("n={n}: b{i} b{} b{i} = b{} b{i} b{}", i + 1, i + 1, i + 1), prod(&[x, y, x])?.same(&prod(&[y, x, y])?));
    }
    if n >= 2 {
        let (x, y) = (&b[n - 2], &b[n - 1]);
        r.push(
            format!("n={n}: (b{} b{n})^2 = (b{n} b{})^2", n - 1, n - 1),
            prod(&[x, y, x, y])?.same(&prod(&[y, x, y, x])?),
        );
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold() {
        for n in [3, 6] {
            let r = check_relations(n).unwrap();
            assert!(r.all_ok(), "{:?}", r.failures());
        }
    }

    #[test]
    fn corrupted_relation_detected() {
        let lhs = BraidWord::new(3, vec![1, 2]).unwrap();
        let rhs = BraidWord::new(3, vec![2, 1]).unwrap();
        assert!(!same_braid(&lhs, &rhs));
    }

    #[test]
    fn semidirect_basics() {
        let n = 2;
        let p = SemiElement::new(BraidWord::identity(n), FreeWord::generator(n, 1)).unwrap();
        let q = SemiElement::new(BraidWord::generator(n, 1, true), FreeWord::empty(n)).unwrap();
        let pq = p.multiply(&q).unwrap();
        assert!(pq.same(&SemiElement::new(BraidWord::generator(n, 1, true), FreeWord::generator(n, 2)).unwrap()));
        let e = SemiElement::identity(n);
        assert!(e.multiply(&pq).unwrap().same(&pq));
        assert!(pq.multiply(&e).unwrap().same(&pq));
        assert!(pq.multiply(&pq.inverse()).unwrap().same(&e));
    }

    #[test]
    fn semidirect_identities() {
        for n in 1..=5 {
            let r = check_semidirect(n).unwrap();
            assert!(r.all_ok(), "{:?}", r.failures());
        }
    }
}

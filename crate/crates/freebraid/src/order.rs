//! The sigma1-trichotomy and the Dehornoy right-ordering.

use std::cmp::Ordering;
use std::fmt;

use crate::braid::{automorphism_of, prefix_step, reducing_prefix, BraidAutomorphism, BraidWord};
use crate::error::{Error, Result};
use crate::word::Letter;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Trichotomy {
    Neutral,
    Negative,
    Positive,
}

impl Trichotomy {
    pub fn mirror(self) -> Trichotomy {
        match self {
            Trichotomy::Neutral => Trichotomy::Neutral,
            Trichotomy::Negative => Trichotomy::Positive,
            Trichotomy::Positive => Trichotomy::Negative,
        }
    }
}

impl fmt::Display for Trichotomy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trichotomy::Neutral => "NEUTRAL",
            Trichotomy::Negative => "NEGATIVE",
            Trichotomy::Positive => "POSITIVE",
        })
    }
}

/// Reads the class off the image of `t_1`.
pub fn classify_sigma1(a: &BraidAutomorphism) -> Trichotomy {
    let img = a.image(1);
    if img.len() == 1 && img.letters()[0] == Letter::pos(1) {
        Trichotomy::Neutral
    } else if img.begins_with_letter(Letter::pos(1)) {
        Trichotomy::Negative
    } else {
        Trichotomy::Positive
    }
}

/// Rewrites a sigma1-neutral or -negative braid as a word in
/// `σ_2..σ_{n-1}` and `σ̄_1..σ̄_{n-1}`.
pub fn sigma1_nonpositive_form(b: &BraidWord) -> Result<BraidWord> {
    let a = automorphism_of(b);
    if classify_sigma1(&a) == Trichotomy::Positive {
        return Err(Error::PositiveInput);
    }
    let mut cur = a;
    let mut out = Vec::new();
    while !cur.is_identity() {
        let neutral = classify_sigma1(&cur) == Trichotomy::Neutral;
        let sigma_min = if neutral { 2 } else { 1 };
        let (i, pos) = reducing_prefix(&cur, sigma_min, 2).ok_or(Error::NoReducingGenerator)?;
        cur = prefix_step(&cur, i, pos);
        out.push(if pos { -(i as i32) } else { i as i32 });
    }
    BraidWord::new(b.strands(), out)
}

/// Smallest `i` whose generator `t_i` is moved; `t_1..t_{i-1}` are fixed.
pub fn main_index(a: &BraidAutomorphism) -> Result<usize> {
    (1..=a.rank())
        .find(|&i| {
            let img = a.image(i);
            !(img.len() == 1 && img.letters()[0] == Letter::pos(i))
        })
        .ok_or(Error::IdentityInput)
}

/// Dehornoy comparison of `x` and `y` through `ρ = x y⁻¹`.
pub fn compare(x: &BraidWord, y: &BraidWord) -> Result<Ordering> {
    let rho = automorphism_of(&x.concat(&y.inverse())?);
    if rho.is_identity() {
        return Ok(Ordering::Equal);
    }
    let i = main_index(&rho)?;
    if rho.image(i).begins_with_letter(Letter::pos(i)) {
        Ok(Ordering::Less)
    } else {
        Ok(Ordering::Greater)
    }
}

pub fn ordering_label(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

//! The genus-`g` surface group with one boundary component, identified with
//! `Φ_{2g}` inside `C_2^{*(2g+1)}`.

use crate::braid::{BraidWord, Endomorphism};
use crate::error::{Error, Result};
use crate::relations::Report;
use crate::torsion::{tw_apply_braid, TorsionWord};
use crate::word::{FreeWord, Letter};

/// Index of `x_k` in the free basis `(x_1, y_1, ..., x_g, y_g)`.
pub fn x_index(k: usize) -> usize {
    2 * k - 1
}

pub fn y_index(k: usize) -> usize {
    2 * k
}

fn tau(g: usize, gens: impl IntoIterator<Item = usize>) -> TorsionWord {
    let pairs: Vec<(usize, i64)> = gens.into_iter().map(|k| (k, 1)).collect();
    TorsionWord::from_pairs(2, 2 * g + 1, &pairs).expect("indices in range")
}

/// Images of `x_k ↦ τ_{2k+1} τ_{2k}` and `y_k ↦ τ_{2k+1} Π τ_{[1↑2k+1]}`.
pub fn identification(g: usize) -> Vec<TorsionWord> {
    let mut out = Vec::with_capacity(2 * g);
    for k in 1..=g {
        out.push(tau(g, [2 * k + 1, 2 * k]));
        out.push(tau(g, std::iter::once(2 * k + 1).chain(1..=2 * k + 1)));
    }
    out
}

pub fn identify(w: &FreeWord, images: &[TorsionWord]) -> TorsionWord {
    let mut acc = TorsionWord::empty(2, images[0].rank());
    for l in w.letters() {
        let e = &images[l.index() - 1];
        acc = acc.mul_unchecked(&if l.is_positive() { e.clone() } else { e.inverse() });
    }
    acc
}

fn gen(g: usize, i: usize) -> FreeWord {
    FreeWord::generator(2 * g, i)
}

fn inv(g: usize, i: usize) -> FreeWord {
    FreeWord::letter(2 * g, Letter::neg(i))
}

fn cat(ws: &[FreeWord]) -> FreeWord {
    ws.iter().skip(1).fold(ws[0].clone(), |acc, w| &acc * w)
}

fn with_images(g: usize, changes: &[(usize, FreeWord)]) -> Endomorphism {
    let mut images: Vec<FreeWord> = (1..=2 * g).map(|i| gen(g, i)).collect();
    for (i, w) in changes {
        images[i - 1] = w.clone();
    }
    Endomorphism::new(images).expect("equal ranks")
}

/// `α_i: x_i ↦ ȳ_i x_i`.
pub fn alpha(g: usize, i: usize) -> Endomorphism {
    with_images(g, &[(x_index(i), cat(&[inv(g, y_index(i)), gen(g, x_index(i))]))])
}

/// `β_i: y_i ↦ x_i y_i`.
pub fn beta(g: usize, i: usize) -> Endomorphism {
    with_images(g, &[(y_index(i), cat(&[gen(g, x_index(i)), gen(g, y_index(i))]))])
}

/// `γ_i` with `c = ȳ_{i+1}^{x_{i+1}}`: `x_i ↦ c̄ ȳ_i x_i`, `y_i ↦ y_i^c`,
/// `x_{i+1} ↦ x_{i+1} y_i c`.
pub fn gamma(g: usize, i: usize) -> Endomorphism {
    let (xi, yi, xj, yj) = (x_index(i), y_index(i), x_index(i + 1), y_index(i + 1));
    let c = cat(&[inv(g, xj), inv(g, yj), gen(g, xj)]);
    let cb = c.inverse();
    with_images(
        g,
        &[
            (xi, cat(&[cb.clone(), inv(g, yi), gen(g, xi)])),
            (yi, cat(&[cb, gen(g, yi), c.clone()])),
            (xj, cat(&[gen(g, xj), gen(g, yi), c])),
        ],
    )
}

/// The twist matching `σ_j`: `σ_1 ↦ α_1`, `σ_{2k} ↦ β_k`, `σ_{2k+1} ↦ γ_k`.
pub fn twist_for(g: usize, j: usize) -> Endomorphism {
    match j {
        1 => alpha(g, 1),
        j if j % 2 == 0 => beta(g, j / 2),
        j => gamma(g, (j - 1) / 2),
    }
}

/// Runs the checks with the given twists, one per `σ_1 .. σ_{2g}`.
pub fn surface_check_with(g: usize, twists: &[Endomorphism]) -> Result<Report> {
    if g == 0 {
        return Err(Error::RankTooSmall { min: 1, got: 0 });
    }
    if twists.len() != 2 * g {
        return Err(Error::WrongTupleLength { expected: 2 * g, got: twists.len() });
    }
    let images = identification(g);
    let mut r = Report::default();
    let mut product = FreeWord::empty(2 * g);
    for k in 1..=g {
        let (x, y) = (gen(g, x_index(k)), gen(g, y_index(k)));
        product = cat(&[product, x.inverse(), y.inverse(), x, y]);
    }
    let full = tau(g, 1..=2 * g + 1);
    r.push(format!("g={g}: product of commutators"), identify(&product, &images) == full.mul_unchecked(&full));
    for (j, twist) in twists.iter().enumerate() {
        let j = j + 1;
        let s = BraidWord::generator(2 * g + 1, j, true);
        for v in 1..=2 * g {
            let down = identify(twist.image(v), &images);
            let across = tw_apply_braid(&images[v - 1], &s)?;
            let name = if v % 2 == 1 { format!("x{}", v.div_ceil(2)) } else { format!("y{}", v / 2) };
            r.push(format!("g={g}: s{j} on {name}"), down == across);
        }
    }
    Ok(r)
}

pub fn surface_check(g: usize) -> Result<Report> {
    let twists: Vec<Endomorphism> = (1..=2 * g).map(|j| twist_for(g, j)).collect();
    surface_check_with(g, &twists)
}

//! Whitehead expansions, planar words, arc diagrams, and the
//! `B_n`-orbits of the words `t_1 t_2 ... t_k`.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::braid::{apply_braid, BraidWord};
use crate::error::{Error, Result};
use crate::word::{FreeWord, Letter};

/// Position in the alphabet `z̄_1 < t_1 < t̄_1 < ... < t_n < t̄_n < z_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabelRank(pub usize);

impl LabelRank {
    pub fn of_letter(l: Letter) -> LabelRank {
        LabelRank(2 * l.index() - usize::from(l.is_positive()))
    }

    /// Formats the label for an alphabet of rank `n`.
    pub fn name(self, n: usize) -> String {
        match self.0 {
            0 => "z1'".to_string(),
            r if r == 2 * n + 1 => "z1".to_string(),
            r if r % 2 == 1 => format!("t{}", r.div_ceil(2)),
            r => format!("t{}'", r / 2),
        }
    }
}

impl fmt::Display for LabelRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `(z̄_1, a_1, ā_1, ..., a_m, ā_m, z_1)` for `w = a_1 ... a_m`.
pub fn whitehead_expansion(w: &FreeWord) -> Vec<LabelRank> {
    let mut out = Vec::with_capacity(2 * w.len() + 2);
    out.push(LabelRank(0));
    for &l in w.letters() {
        out.push(LabelRank::of_letter(l));
        out.push(LabelRank::of_letter(l.inverse()));
    }
    out.push(LabelRank(2 * w.rank() + 1));
    out
}

/// A crossing-free placement of the Whitehead expansion on a line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    /// `(position, label)` sorted by position; positions start at 1.
    pub points: Vec<(usize, LabelRank)>,
    /// Positions joined in the upper half-plane, in tracing order.
    pub upper_arcs: Vec<(usize, usize)>,
    /// Positions joined in the lower half-plane, in tracing order.
    pub lower_arcs: Vec<(usize, usize)>,
    /// `perm[j]` is the position of the `j`-th expansion term (0-based `j`).
    pub perm: Vec<usize>,
    rank: usize,
}

impl PlanarEmbedding {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Labels read along the traced arc.
    pub fn traced_labels(&self) -> Vec<LabelRank> {
        let at: HashMap<usize, LabelRank> = self.points.iter().copied().collect();
        self.perm.iter().map(|p| at[p]).collect()
    }
}

/// True if no two arcs of the family cross. Arcs must not share endpoints.
pub fn arcs_nested(arcs: &[(usize, usize)]) -> bool {
    let mut ends: Vec<(usize, usize, bool)> = Vec::with_capacity(2 * arcs.len());
    for (k, &(a, b)) in arcs.iter().enumerate() {
        if a == b {
            return false;
        }
        ends.push((a.min(b), k, true));
        ends.push((a.max(b), k, false));
    }
    ends.sort_unstable();
    if ends.windows(2).any(|e| e[0].0 == e[1].0) {
        return false;
    }
    let mut stack = Vec::new();
    for (_, k, open) in ends {
        if open {
            stack.push(k);
        } else if stack.pop() != Some(k) {
            return false;
        }
    }
    true
}

fn upper_partner(j: usize) -> usize {
    j ^ 1
}

type Arcs = Vec<(usize, usize)>;

fn arcs_of(perm: &[usize]) -> (Arcs, Arcs) {
    let len = perm.len();
    let upper = (0..len).step_by(2).map(|j| (perm[j], perm[j + 1])).collect();
    let lower = (1..len.saturating_sub(1)).step_by(2).map(|j| (perm[j], perm[j + 1])).collect();
    (upper, lower)
}

fn embedding(exp: &[LabelRank], perm: Vec<usize>, rank: usize) -> PlanarEmbedding {
    let mut points: Vec<(usize, LabelRank)> = perm.iter().zip(exp).map(|(&p, &l)| (p, l)).collect();
    points.sort_unstable();
    let (upper_arcs, lower_arcs) = arcs_of(&perm);
    PlanarEmbedding { points, upper_arcs, lower_arcs, perm, rank }
}

/// Decides planarity. Inside a label block, non-crossing upper arcs force
/// the order of points by partner block (left partners nearest first, then
/// right partners farthest first), and points sharing a partner block appear
/// in mirror order on both sides. Lower arcs join the adjacent blocks of
/// `t_g` and `t̄_g` and are mirrored too. Walking the traced arc from `z̄_1`
/// then pins every position; the result is checked independently.
pub fn is_planar(w: &FreeWord) -> Option<PlanarEmbedding> {
    let n = w.rank();
    let exp = whitehead_expansion(w);
    let len = exp.len();
    let blocks = 2 * n + 2;
    let mut block_size = vec![0usize; blocks];
    for l in &exp {
        block_size[l.0] += 1;
    }
    let mut block_offset = vec![0usize; blocks];
    for b in 1..blocks {
        block_offset[b] = block_offset[b - 1] + block_size[b - 1];
    }
    // Bundle (b, partner block) sizes and their starting index inside block b.
    let mut bundle: HashMap<(usize, usize), usize> = HashMap::new();
    for j in 0..len {
        *bundle.entry((exp[j].0, exp[upper_partner(j)].0)).or_default() += 1;
    }
    let sort_key = |b: usize, pb: usize| (pb > b, std::cmp::Reverse(pb));
    let mut bundle_start: HashMap<(usize, usize), usize> = HashMap::new();
    for b in 0..blocks {
        let mut keys: Vec<usize> = bundle.keys().filter(|k| k.0 == b).map(|k| k.1).collect();
        if keys.contains(&b) {
            return None;
        }
        keys.sort_by_key(|&pb| sort_key(b, pb));
        let mut at = 0;
        for pb in keys {
            bundle_start.insert((b, pb), at);
            at += bundle[&(b, pb)];
        }
    }
    let mut idx = vec![0usize; len];
    for j in 0..len - 1 {
        let (b, next) = (exp[j].0, exp[j + 1].0);
        if j % 2 == 0 {
            let s = bundle[&(b, next)];
            let rel = idx[j].checked_sub(bundle_start[&(b, next)]).filter(|&r| r < s)?;
            idx[j + 1] = bundle_start[&(next, b)] + s - 1 - rel;
        } else {
            idx[j + 1] = block_size[b] - 1 - idx[j];
        }
    }
    let perm: Vec<usize> = (0..len).map(|j| block_offset[exp[j].0] + idx[j] + 1).collect();
    let mut seen = vec![false; len + 1];
    for &p in &perm {
        if p > len || std::mem::replace(&mut seen[p], true) {
            return None;
        }
    }
    let (upper, lower) = arcs_of(&perm);
    if !(arcs_nested(&upper) && arcs_nested(&lower)) {
        return None;
    }
    Some(embedding(&exp, perm, n))
}

/// Longest word accepted by [`planar_oracle`].
pub const ORACLE_CAP: usize = 6;

/// Exhaustive search over every arrangement of each label block.
pub fn planar_oracle(w: &FreeWord) -> Result<bool> {
    if w.len() > ORACLE_CAP {
        return Err(Error::LengthCap { len: w.len(), cap: ORACLE_CAP });
    }
    let exp = whitehead_expansion(w);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); 2 * w.rank() + 2];
    for (j, l) in exp.iter().enumerate() {
        groups[l.0].push(j);
    }
    let groups: Vec<Vec<usize>> = groups.into_iter().filter(|g| !g.is_empty()).collect();
    let mut perm = vec![0usize; exp.len()];
    Ok(search(&groups, 0, 1, &mut perm))
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let (lo, hi) = (a.0.min(a.1), a.0.max(a.1));
    let inside = |x: usize| lo < x && x < hi;
    inside(b.0) != inside(b.1)
}

fn pairwise_nested(arcs: &[(usize, usize)]) -> bool {
    (0..arcs.len()).all(|i| (i + 1..arcs.len()).all(|j| !crosses(arcs[i], arcs[j])))
}

fn search(groups: &[Vec<usize>], g: usize, next: usize, perm: &mut Vec<usize>) -> bool {
    if g > 0 && !placed_arcs_nested(perm) {
        return false;
    }
    if g == groups.len() {
        return true;
    }
    let mut members = groups[g].clone();
    let found = permutations(&mut members, 0, &mut |order| {
        for (k, &j) in order.iter().enumerate() {
            perm[j] = next + k;
        }
        search(groups, g + 1, next + order.len(), perm)
    });
    for &j in &groups[g] {
        perm[j] = 0;
    }
    found
}

/// Pairwise check of the arcs whose endpoints are both placed (nonzero).
fn placed_arcs_nested(perm: &[usize]) -> bool {
    let (upper, lower) = arcs_of(perm);
    let placed = |arcs: Vec<(usize, usize)>| -> Vec<(usize, usize)> { arcs.into_iter().filter(|a| a.0 != 0 && a.1 != 0).collect() };
    pairwise_nested(&placed(upper)) && pairwise_nested(&placed(lower))
}

/// Calls `f` on every ordering of `v[k..]`, stopping at the first `true`.
fn permutations(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == v.len() {
        return f(v);
    }
    for i in k..v.len() {
        v.swap(k, i);
        let hit = permutations(v, k + 1, f);
        v.swap(k, i);
        if hit {
            return true;
        }
    }
    false
}

const STEP: usize = 40;
const BASE: usize = 140;

/// Renders the diagram as an SVG document.
pub fn emit_diagram(emb: &PlanarEmbedding) -> String {
    let count = emb.points.len();
    let width = STEP * (count + 1);
    let mut s = String::new();
    let _ = writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{}" viewBox="0 0 {width} {}">"#, 2 * BASE, 2 * BASE);
    let _ = writeln!(s, r#"<line x1="{}" y1="{BASE}" x2="{}" y2="{BASE}" stroke="gray" stroke-dasharray="2,4"/>"#, STEP / 2, width - STEP / 2);
    let arc = |s: &mut String, (a, b): (usize, usize), upper: bool| {
        let (x1, x2) = (a * STEP, b * STEP);
        let r = x1.abs_diff(x2) / 2;
        let sweep = u8::from((x2 > x1) == upper);
        let _ = writeln!(s, r#"<path d="M {x1} {BASE} A {r} {r} 0 0 {sweep} {x2} {BASE}" fill="none" stroke="black"/>"#);
    };
    for &a in &emb.upper_arcs {
        arc(&mut s, a, true);
    }
    for &a in &emb.lower_arcs {
        arc(&mut s, a, false);
    }
    for &(p, l) in &emb.points {
        let x = p * STEP;
        let _ = writeln!(s, r#"<circle cx="{x}" cy="{BASE}" r="3"/>"#);
        let _ = writeln!(s, r#"<text x="{x}" y="{}" font-size="12" text-anchor="middle">{}</text>"#, BASE + 16, l.name(emb.rank));
    }
    s.push_str("</svg>\n");
    s
}

/// Largest `i` with `t_1 ... t_i` a prefix of `w`.
fn ascending_prefix(w: &FreeWord) -> usize {
    w.letters().iter().enumerate().take_while(|&(k, &l)| l == Letter::pos(k + 1)).count()
}

/// Carries a planar word to some `t_1 ... t_k` and returns `k` with the braid
/// used. `None` if `w` is not planar.
pub fn orbit_reduce(w: &FreeWord) -> Option<(usize, BraidWord)> {
    is_planar(w)?;
    let n = w.rank();
    let mut cur = w.clone();
    let mut factors: Vec<i32> = Vec::new();
    loop {
        let i = ascending_prefix(&cur);
        if i == cur.len() {
            return Some((i, BraidWord::new(n, factors).expect("indices below n")));
        }
        let x = cur.letters()[i];
        let j = x.index();
        let step: Vec<i32> = if j < i {
            (j..i).map(|s| s as i32).collect()
        } else if j >= i + 2 {
            (i + 1..j).rev().map(|s| -(s as i32)).collect()
        } else {
            return None;
        };
        let b = BraidWord::new(n, step.clone()).expect("indices below n");
        let next = apply_braid(&cur, &b).expect("same rank");
        if next.len() > cur.len() || (next.len() == cur.len() && ascending_prefix(&next) <= i) {
            return None;
        }
        factors.extend(step);
        cur = next;
    }
}

/// A braid taking `w` to `t_1`, if one exists.
pub fn t1_orbit_witness(w: &FreeWord) -> Option<BraidWord> {
    match orbit_reduce(w) {
        Some((1, b)) => Some(b),
        _ => None,
    }
}

/// A braid taking `(w_1, ..., w_k)` to `(t_1, ..., t_k)`, if one exists.
pub fn tuple_orbit_witness(ws: &[FreeWord]) -> Result<Option<BraidWord>> {
    let Some(first) = ws.first() else {
        return Err(Error::WrongTupleLength { expected: 1, got: 0 });
    };
    let n = first.rank();
    if ws.len() > n {
        return Err(Error::WrongTupleLength { expected: n, got: ws.len() });
    }
    if let Some(w) = ws.iter().find(|w| w.rank() != n) {
        return Err(Error::RankMismatch { left: n, right: w.rank() });
    }
    let Some(head) = t1_orbit_witness(first) else {
        return Ok(None);
    };
    if ws.len() == 1 {
        return Ok(Some(head));
    }
    let mut rest = Vec::with_capacity(ws.len() - 1);
    for w in &ws[1..] {
        let moved = apply_braid(w, &head)?;
        if moved.letters().iter().any(|l| l.index() == 1) {
            return Ok(None);
        }
        rest.push(moved.shift(-1, n - 1)?);
    }
    let Some(tail) = tuple_orbit_witness(&rest)? else {
        return Ok(None);
    };
    Ok(Some(head.concat(&tail.shift(1, n)?)?))
}

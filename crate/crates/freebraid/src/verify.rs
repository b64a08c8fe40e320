//! Randomized property suites. Each trial draws from its own seeded stream,
//! so results do not depend on scheduling.

use std::cmp::Ordering;
use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::braid::{apply_braid, automorphism_of, recover_braid_word, BraidWord};
use crate::ends::{act_on_end, compare_ends, end_is_squarefree, make_end, thurston_compare};
use crate::error::{Error, Result};
use crate::order::{classify_sigma1, compare, sigma1_nonpositive_form, Trichotomy};
use crate::phi::{check_formanek, PhiBasis};
use crate::planar::{is_planar, orbit_reduce, planar_oracle, t1_orbit_witness, ORACLE_CAP};
use crate::random::{random_braid, random_end, random_planar_word, random_word, trial_rng};
use crate::relations::{check_conjugate_identity, check_relations, check_semidirect, check_stabilizer, same_braid, Report};
use crate::torsion::{tw_apply_braid, tw_images, tw_recover_braid, TorsionWord};
use crate::word::{z1, FreeWord, Letter};

pub const SUITES: [&str; 10] = [
    "relations",
    "magnus",
    "lemma52",
    "trichotomy",
    "order",
    "ends-order",
    "squarefree",
    "planar-closure",
    "humphries",
    "wada-faithful",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_len: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, trials: 200, max_len: 10 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{} {}: {} checks, {} failures", verdict, self.suite, self.checks, self.failures.len())?;
        for msg in &self.failures {
            write!(f, "\n  {msg}")?;
        }
        Ok(())
    }
}

/// Outcome of one randomized trial.
pub type Trial = std::result::Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Trial {
    if ok { Ok(()) } else { Err(msg()) }
}

fn lift<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Runs `trial` for every index in parallel and gathers failures in order.
pub fn run_trials<F>(suite: &str, seed: u64, trials: usize, trial: F) -> SuiteReport
where
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> Trial + Sync,
{
    let results: Vec<Trial> = (0..trials as u64).into_par_iter().map(|t| trial(&mut trial_rng(seed, t))).collect();
    let failures = results
        .into_iter()
        .enumerate()
        .filter_map(|(t, r)| r.err().map(|m| format!("trial {t}: {m}")))
        .collect();
    SuiteReport { suite: suite.to_string(), checks: trials, failures }
}

fn from_reports(suite: &str, reports: Vec<Report>) -> SuiteReport {
    let checks = reports.iter().map(|r| r.checks.len()).sum();
    let failures = reports.iter().flat_map(|r| r.failures().into_iter().map(str::to_string)).collect();
    SuiteReport { suite: suite.to_string(), checks, failures }
}

fn strands<R: Rng>(rng: &mut R, max_n: usize) -> usize {
    rng.random_range(2..=max_n.max(2))
}

/// Recovered word induces the same automorphism and respects the norm bounds.
pub fn recovery_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = strands(rng, max_n);
    let b = random_braid(rng, n, max_len);
    let a = automorphism_of(&b);
    let r = lift(recover_braid_word(&a))?;
    let norm = a.norm();
    ensure(same_braid(&b, &r), || format!("{b}: recovered {r} differs"))?;
    ensure(r.len() <= (norm - n) / 2, || format!("{b}: recovered length {} over bound", r.len()))?;
    ensure(norm + n <= n << (b.len() + 1), || format!("{b}: norm {norm} over bound"))
}

/// Exactly one class, mirrored by inversion, neutral iff `t_1` is fixed, and
/// non-positive braids admit a word avoiding `σ_1`.
pub fn trichotomy_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = strands(rng, max_n);
    let b = random_braid(rng, n, max_len);
    let a = automorphism_of(&b);
    let c = classify_sigma1(&a);
    let ci = classify_sigma1(&automorphism_of(&b.inverse()));
    ensure(ci == c.mirror(), || format!("{b}: class {c}, inverse class {ci}"))?;
    let fixed = a.image(1) == &FreeWord::generator(n, 1);
    ensure(fixed == (c == Trichotomy::Neutral), || format!("{b}: neutral/fixed mismatch"))?;
    let (word, class) = if c == Trichotomy::Positive { (b.inverse(), ci) } else { (b.clone(), c) };
    let form = lift(sigma1_nonpositive_form(&word))?;
    ensure(same_braid(&form, &word), || format!("{b}: rewritten form differs"))?;
    let has_pos1 = form.factors().contains(&1);
    let has_neg1 = form.factors().contains(&-1);
    let expect_neg1 = class == Trichotomy::Negative;
    ensure(!has_pos1 && has_neg1 == expect_neg1, || format!("{b}: form {form} does not witness {class}"))
}

/// Output of the non-positive rewriting uses only `σ_2.., σ̄_1..` and obeys
/// the length bound.
pub fn nonpositive_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = strands(rng, max_n);
    let mut b = random_braid(rng, n, max_len);
    if classify_sigma1(&automorphism_of(&b)) == Trichotomy::Positive {
        b = b.inverse();
    }
    let form = lift(sigma1_nonpositive_form(&b))?;
    ensure(form.factors().iter().all(|&f| f != 1), || format!("{b}: form {form} uses s1"))?;
    ensure(same_braid(&form, &b), || format!("{b}: form {form} differs"))?;
    ensure(form.len() + n <= n << b.len(), || format!("{b}: form length {} over bound", form.len()))
}

/// Totality, antisymmetry and transitivity on a triple plus right-invariance.
pub fn order_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = strands(rng, max_n);
    let [x, y, z, r] = std::array::from_fn(|_| random_braid(rng, n, max_len));
    let c = |p: &BraidWord, q: &BraidWord| lift(compare(p, q));
    let (xy, yz, xz) = (c(&x, &y)?, c(&y, &z)?, c(&x, &z)?);
    ensure(c(&y, &x)? == xy.reverse(), || format!("{x} vs {y}: not antisymmetric"))?;
    ensure((xy == Ordering::Equal) == same_braid(&x, &y), || format!("{x} vs {y}: EQ disagrees with equality"))?;
    if xy == yz && xy != Ordering::Equal {
        ensure(xz == xy, || format!("{x}, {y}, {z}: not transitive"))?;
    }
    let xr = lift(x.concat(&r))?;
    let yr = lift(y.concat(&r))?;
    ensure(c(&xr, &yr)? == xy, || format!("{x} vs {y}: not right-invariant under {r}"))
}

/// Every `σ_i` exceeds the identity.
pub fn generators_positive(max_n: usize) -> Trial {
    for n in 2..=max_n {
        for i in 1..n {
            let s = BraidWord::generator(n, i, true);
            ensure(lift(compare(&s, &BraidWord::identity(n)))? == Ordering::Greater, || format!("s{i} in B{n} not positive"))?;
        }
    }
    Ok(())
}

pub fn thurston_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = strands(rng, max_n);
    let x = random_braid(rng, n, max_len);
    let y = random_braid(rng, n, max_len);
    let t = lift(thurston_compare(&x, &y))?;
    let d = lift(compare(&x, &y))?;
    ensure(t == d, || format!("{x} vs {y}: ends give {t:?}, order gives {d:?}"))
}

/// Two distinct random ends keep their order under a random braid.
pub fn end_action_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = strands(rng, max_n);
    let (mut e1, mut e2) = (random_end(rng, n, 4, 3), random_end(rng, n, 4, 3));
    let mut o = lift(compare_ends(&e1, &e2))?;
    while o == Ordering::Equal {
        e2 = random_end(rng, n, 4, 3);
        o = lift(compare_ends(&e1, &e2))?;
    }
    if o == Ordering::Greater {
        std::mem::swap(&mut e1, &mut e2);
    }
    let b = random_braid(rng, n, max_len);
    let (i1, i2) = (lift(act_on_end(&e1, &b))?, lift(act_on_end(&e2, &b))?);
    ensure(lift(compare_ends(&i1, &i2))? == Ordering::Less, || format!("{e1} < {e2} not kept under {b}"))
}

/// `w ∉ (Π t̄_{[n↓k+1]} t_k ⋆) − {t_k^{Π t_{[k+1↑n]}}}` and
/// `w ∉ (Π t_{[1↑k-1]} t̄_k ⋆)` for every `k`.
pub fn cone_exclusions(w: &FreeWord) -> std::result::Result<(), usize> {
    let n = w.rank();
    for k in 1..=n {
        let tail = FreeWord::ascending_product(n, k + 1, n);
        let head = &tail.inverse() * &FreeWord::generator(n, k);
        let allowed = FreeWord::generator(n, k).conjugate(&tail).expect("same rank");
        if w.begins_with(&head) && w != &allowed {
            return Err(k);
        }
        let low = &FreeWord::ascending_product(n, 1, k - 1) * &FreeWord::letter(n, Letter::neg(k));
        if w.begins_with(&low) {
            return Err(k);
        }
    }
    Ok(())
}

/// `t_1^φ` is squarefree and avoids both excluded cones for every `k`.
pub fn squarefree_word_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = rng.random_range(1..=max_n.max(1));
    let b = random_braid(rng, n, max_len);
    let w = lift(apply_braid(&FreeWord::generator(n, 1), &b))?;
    ensure(w.is_squarefree(), || format!("t1^({b}) = {w} not squarefree"))?;
    cone_exclusions(&w).map_err(|k| format!("t1^({b}) = {w} in excluded cone for k={k}"))
}

/// Whether `t_1^b z_1^∞` is a squarefree end. This fails for some braids
/// when `n <= 2`: `t_1^{σ_1^2} z_1^∞ = t̄_2 t̄_2 t̄_1 ...`.
pub fn squarefree_end_holds(b: &BraidWord) -> Result<bool> {
    let n = b.strands();
    let w = apply_braid(&FreeWord::generator(n, 1), b)?;
    Ok(end_is_squarefree(&make_end(&w, &z1(n)?)?))
}

/// Word-level checks for all `n`, the end-level check for `n >= 3`.
pub fn squarefree_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    squarefree_word_trial(rng, max_n, max_len)?;
    let n = rng.random_range(3..=max_n.max(3));
    let b = random_braid(rng, n, max_len);
    ensure(lift(squarefree_end_holds(&b))?, || format!("end t1^({b}) z1^inf not squarefree"))
}

/// Braid images of planar words stay planar; planar words are squarefree
/// and avoid the excluded cones.
pub fn planar_closure_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = rng.random_range(1..=max_n.max(1));
    let w = random_planar_word(rng, n, max_len);
    ensure(is_planar(&w).is_some(), || format!("{w} should be planar"))?;
    ensure(w.is_squarefree(), || format!("planar {w} not squarefree"))?;
    cone_exclusions(&w).map_err(|k| format!("planar {w} in excluded cone for k={k}"))?;
    let b = random_braid(rng, n, max_len);
    let img = lift(apply_braid(&w, &b))?;
    ensure(is_planar(&img).is_some(), || format!("{w} under {b} gives non-planar {img}"))
}

pub fn oracle_trial<R: Rng>(rng: &mut R, max_n: usize) -> Trial {
    let n = rng.random_range(1..=max_n.max(1));
    let w = random_word(rng, n, ORACLE_CAP);
    let fast = is_planar(&w).is_some();
    let slow = lift(planar_oracle(&w))?;
    ensure(fast == slow, || format!("{w}: decision {fast}, oracle {slow}"))
}

/// `t_1^b` reduces to `t_1` with a witness that carries it back.
pub fn orbit_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = rng.random_range(1..=max_n.max(1));
    let b = random_braid(rng, n, max_len);
    let w = lift(apply_braid(&FreeWord::generator(n, 1), &b))?;
    ensure(is_planar(&w).is_some(), || format!("t1^({b}) = {w} not planar"))?;
    let (k, phi) = orbit_reduce(&w).ok_or_else(|| format!("{w}: orbit reduction failed"))?;
    ensure(k == 1, || format!("{w}: reduced to k={k}"))?;
    let back = lift(apply_braid(&w, &phi))?;
    ensure(back == FreeWord::generator(n, 1), || format!("{w}: witness {phi} gives {back}"))
}

/// Cyclic core a positive generator and planar, against the witness search.
pub fn membership_agrees(w: &FreeWord) -> Trial {
    let (core, _) = w.cyclic_reduce();
    let criterion = core.len() == 1 && core.letters()[0].is_positive() && is_planar(w).is_some();
    let witness = t1_orbit_witness(w);
    if let Some(phi) = &witness {
        let back = lift(apply_braid(w, phi))?;
        ensure(back == FreeWord::generator(w.rank(), 1), || format!("{w}: witness {phi} gives {back}"))?;
    }
    ensure(criterion == witness.is_some(), || format!("{w}: criterion {criterion}, witness {}", witness.is_some()))
}

/// Mixture of plain random words, generator conjugates and orbit members.
pub fn membership_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = rng.random_range(1..=max_n.max(1));
    let w = match rng.random_range(0..4) {
        0 => random_word(rng, n, max_len),
        1 => {
            let j = rng.random_range(1..=n);
            let g = random_word(rng, n, max_len / 2);
            lift(FreeWord::generator(n, j).conjugate(&g))?
        }
        2 => random_planar_word(rng, n, max_len),
        _ => {
            let j = rng.random_range(1..=n);
            lift(apply_braid(&FreeWord::generator(n, j), &random_braid(rng, n, max_len)))?
        }
    };
    membership_agrees(&w)
}

/// Torsion images recover to an equal braid, and nonidentity braids move
/// some `τ_i`.
pub fn humphries_trial<R: Rng>(rng: &mut R, m: u32, max_n: usize, max_len: usize) -> Trial {
    let n = strands(rng, max_n);
    let b = random_braid(rng, n, max_len);
    let imgs = lift(tw_images(&b, m))?;
    let r = lift(tw_recover_braid(&imgs))?;
    ensure(same_braid(&b, &r), || format!("m={m} {b}: recovered {r} differs"))?;
    let moved = (1..=n).any(|i| imgs[i - 1] != TorsionWord::generator(m, n, i));
    let trivial = automorphism_of(&b).is_identity();
    ensure(moved != trivial, || format!("m={m} {b}: moved={moved}, identity={trivial}"))
}

/// Nonidentity braids of `B_{n+1}` move some element of the second basis of
/// `Φ_n`, and the first action satisfies the power check.
pub fn wada_trial<R: Rng>(rng: &mut R, max_n: usize, max_len: usize) -> Trial {
    let n = rng.random_range(2..=max_n.max(2));
    let b = random_braid(rng, n + 1, max_len);
    let basis = lift(PhiBasis::variant(2, n))?;
    let mut moved = false;
    for e in basis.elements() {
        if lift(tw_apply_braid(e.word(), &b))? != *e.word() {
            moved = true;
        }
    }
    let trivial = automorphism_of(&b).is_identity();
    ensure(moved != trivial, || format!("{b}: moved={moved}, identity={trivial}"))?;
    let small = random_braid(rng, n, max_len);
    for m in [2, 3] {
        ensure(lift(check_formanek(n, m, &small))?, || format!("power check fails for m={m} on {small}"))?;
    }
    Ok(())
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let (seed, trials, len) = (cfg.seed, cfg.trials, cfg.max_len);
    let report = match name {
        "relations" => from_reports(name, (2..=8).map(check_relations).collect::<Result<Vec<_>>>()?),
        "magnus" => from_reports(
            name,
            (1..=7).flat_map(|n| [check_conjugate_identity(n), check_stabilizer(n)]).collect(),
        ),
        "lemma52" => from_reports(name, (1..=6).map(check_semidirect).collect::<Result<Vec<_>>>()?),
        "trichotomy" => run_trials(name, seed, trials, |r| trichotomy_trial(r, 6, len)),
        "order" => {
            let mut rep = run_trials(name, seed, trials, |r| order_trial(r, 5, len));
            if let Err(m) = generators_positive(8) {
                rep.failures.push(m);
            }
            rep
        }
        "ends-order" => {
            let mut rep = run_trials(name, seed, trials, |r| end_action_trial(r, 5, len));
            let th = run_trials(name, seed ^ 1, trials, |r| thurston_trial(r, 5, len));
            rep.checks += th.checks;
            rep.failures.extend(th.failures);
            rep
        }
        "squarefree" => run_trials(name, seed, trials, |r| squarefree_trial(r, 6, len)),
        "planar-closure" => run_trials(name, seed, trials, |r| planar_closure_trial(r, 5, len)),
        "humphries" => {
            let mut rep = SuiteReport { suite: name.to_string(), checks: 0, failures: Vec::new() };
            for m in [2, 3, 4] {
                let part = run_trials(name, seed.wrapping_add(m as u64), trials, |r| humphries_trial(r, m, 5, len));
                rep.checks += part.checks;
                rep.failures.extend(part.failures.into_iter().map(|f| format!("m={m} {f}")));
            }
            rep
        }
        "wada-faithful" => run_trials(name, seed, trials, |r| wada_trial(r, 4, len)),
        _ => return Err(Error::Parse(format!("unknown suite `{name}`"))),
    };
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_small() {
        let cfg = SuiteConfig { seed: 11, trials: 20, max_len: 6 };
        for s in SUITES {
            let rep = run_suite(s, &cfg).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = SuiteConfig { seed: 5, trials: 30, max_len: 8 };
        assert_eq!(run_suite("order", &cfg).unwrap(), run_suite("order", &cfg).unwrap());
    }

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", &SuiteConfig::default()).is_err());
    }

    #[test]
    fn cones() {
        let n = 2;
        let w = |s: &[i32]| FreeWord::from_signed(s, n).unwrap();
        assert_eq!(cone_exclusions(&w(&[-1, 2])), Err(1));
        assert!(cone_exclusions(&w(&[-2, 1, 2])).is_ok());
        assert_eq!(cone_exclusions(&w(&[-2, 1, 1])), Err(1));
        assert!(cone_exclusions(&w(&[1, 2, -1])).is_ok());
    }
}

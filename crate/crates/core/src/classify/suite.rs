//! Seeded randomized checks of the invariants the classification relies on.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::a6val::{context, ClassElem, CLASS_SIZE};
use crate::error::Result;
use crate::lifting::{exponent_of, lifting_invariant};
use crate::nielsen::{BraidMove, Direction, NielsenTuple};
use crate::reduce::{
    apply_reduction, find_reduction, find_reduction_where, force_one_reduction, lift_braid_equivalence,
    marked_braid_word, Reduction, DEFAULT_DEPTH,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Tuples pushed through random braid words.
    pub braid_samples: usize,
    pub word_len: usize,
    /// Tuples conjugated by every element of S6.
    pub conjugation_samples: usize,
    pub reduction_samples: usize,
    /// Same-orbit pairs whose reductions are lifted back.
    pub lift_pairs: usize,
    pub lift_word_len: usize,
    /// State budget for each marked braid search.
    pub max_states: usize,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            seed: 1,
            braid_samples: 1000,
            word_len: 20,
            conjugation_samples: 50,
            reduction_samples: 1000,
            lift_pairs: 100,
            lift_word_len: 20,
            max_states: 4_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: bool,
    pub trials: u64,
    pub violations: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub checks: Vec<PropertyCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&PropertyCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const BRAID_INVARIANCE: &str = "braid-invariance";
pub const INNER_INVARIANCE: &str = "inner-invariance";
pub const ABS_ORDER_INVARIANCE: &str = "abs-order-invariance";
pub const ODD_SWAP: &str = "odd-conjugation-swaps-exponents";
pub const REDUCTION_INVARIANCE: &str = "reduction-invariance";
pub const LIFT_ROUND_TRIP: &str = "lift-round-trip";

/// A uniformly random element of Ni(A6, C^k): the first `k - 1` entries are
/// drawn uniformly and candidates are rejected until the closing entry lies
/// in the class and the tuple generates A6.
pub fn random_nielsen_tuple<R: Rng + ?Sized>(rng: &mut R, k: usize) -> NielsenTuple {
    assert!(k >= 5, "Ni(A6, C^{k}) is empty");
    let ctx = context();
    let subs = ctx.subgroups();
    loop {
        let mut entries: Vec<ClassElem> = (0..k - 1)
            .map(|_| ClassElem(rng.gen_range(0..CLASS_SIZE) as u8))
            .collect();
        let p = entries.iter().fold(ctx.a6_identity(), |p, &c| ctx.a6_mul_class(p, c));
        let Some(last) = ctx.a6_as_class(ctx.a6_inverse(p)) else {
            continue;
        };
        entries.push(last);
        if subs.generated(&entries) == subs.a6() {
            return NielsenTuple::new(entries);
        }
    }
}

pub fn random_word<R: Rng + ?Sized>(rng: &mut R, k: usize, len: usize) -> Vec<BraidMove> {
    (0..len)
        .map(|_| {
            let position = rng.gen_range(0..k - 1);
            let direction = if rng.gen_bool(0.5) {
                Direction::Forward
            } else {
                Direction::Backward
            };
            BraidMove { position, direction }
        })
        .collect()
}

fn finish(name: &str, trials: u64, violations: u64, detail: String) -> PropertyCheck {
    PropertyCheck {
        name: name.to_string(),
        passed: violations == 0 && trials > 0,
        trials,
        violations,
        detail,
    }
}

fn braid_invariance(rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<PropertyCheck> {
    let mut violations = 0;
    for i in 0..cfg.braid_samples {
        let k = 5 + i % 2;
        let t = random_nielsen_tuple(rng, k);
        let e = lifting_invariant(&t)?.exponent;
        let mut cur = t;
        for mv in random_word(rng, k, cfg.word_len) {
            cur = cur.apply_word(&[mv])?;
            if exponent_of(cur.entries()) != Some(e) {
                violations += 1;
                break;
            }
        }
    }
    Ok(finish(
        BRAID_INVARIANCE,
        cfg.braid_samples as u64,
        violations,
        format!("k in {{5, 6}}, {}-move words, checked after every move", cfg.word_len),
    ))
}

fn conjugation_checks(rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<Vec<PropertyCheck>> {
    let ctx = context();
    let (mut inner_bad, mut abs_bad, mut swap_bad) = (0, 0, 0);
    let (mut inner_trials, mut abs_trials, mut swap_trials) = (0u64, 0u64, 0u64);
    for i in 0..cfg.conjugation_samples {
        let t = random_nielsen_tuple(rng, 5 + i % 2);
        let e = lifting_invariant(&t)?.exponent;
        for s in 0..ctx.s6().order() {
            let c = t.conjugate_by_index(s);
            let ec = exponent_of(c.entries());
            abs_trials += 1;
            if ec.map(|x| x == 0) != Some(e == 0) {
                abs_bad += 1;
            }
            if ctx.is_even_index(s) {
                inner_trials += 1;
                if ec != Some(e) {
                    inner_bad += 1;
                }
            } else {
                swap_trials += 1;
                if ec != Some((3 - e) % 3) {
                    swap_bad += 1;
                }
            }
        }
    }
    Ok(vec![
        finish(
            INNER_INVARIANCE,
            inner_trials,
            inner_bad,
            "all 360 even conjugators".into(),
        ),
        finish(
            ABS_ORDER_INVARIANCE,
            abs_trials,
            abs_bad,
            "all 720 conjugators, lift order".into(),
        ),
        finish(
            ODD_SWAP,
            swap_trials,
            swap_bad,
            "odd conjugators send exponent e to -e".into(),
        ),
    ])
}

fn reduction_invariance(rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<PropertyCheck> {
    let (mut violations, mut ones, mut twos, mut drawn) = (0, 0, 0, 0u64);
    let mut done = 0;
    while done < cfg.reduction_samples {
        drawn += 1;
        let t = random_nielsen_tuple(rng, 5 + done % 2);
        let Some(r) = find_reduction(&t, DEFAULT_DEPTH) else {
            continue;
        };
        done += 1;
        if r.is_one_reduction() {
            ones += 1;
        } else {
            twos += 1;
        }
        let reduced = apply_reduction(&t, &r)?;
        if exponent_of(reduced.entries()) != exponent_of(t.entries()) {
            violations += 1;
        }
    }
    Ok(finish(
        REDUCTION_INVARIANCE,
        done as u64,
        violations,
        format!("{ones} one-reductions, {twos} two-reductions, {drawn} tuples drawn"),
    ))
}

fn one_reduction(t: &NielsenTuple) -> Result<Option<Reduction>> {
    let generating = |r: &Reduction| r.is_one_reduction() && r.result.generated() == context().subgroups().a6();
    if let Some(r) = find_reduction_where(t, DEFAULT_DEPTH, crate::nielsen::Directions::Both, generating) {
        return Ok(Some(r));
    }
    match find_reduction(t, DEFAULT_DEPTH) {
        Some(r) => force_one_reduction(t, &r),
        None => Ok(None),
    }
}

fn lift_round_trip(rng: &mut ChaCha8Rng, cfg: &SuiteConfig) -> Result<PropertyCheck> {
    let (mut violations, mut skipped, mut drawn) = (0, 0u64, 0u64);
    let mut done = 0;
    while done < cfg.lift_pairs {
        drawn += 1;
        let t1 = random_nielsen_tuple(rng, 6);
        let t2 = t1.apply_word(&random_word(rng, 6, cfg.lift_word_len))?;
        let (Some(r1), Some(r2)) = (one_reduction(&t1)?, one_reduction(&t2)?) else {
            skipped += 1;
            continue;
        };
        let (u1, u2) = (apply_reduction(&t1, &r1)?, apply_reduction(&t2, &r2)?);
        let Some(w) = marked_braid_word(&u1, r1.positions.0, &u2, r2.positions.0, cfg.max_states)? else {
            skipped += 1;
            continue;
        };
        done += 1;
        match lift_braid_equivalence(&t1, &t2, &r1, &r2, &w) {
            Ok(word) if t1.apply_word(&word)? == t2 => {}
            _ => violations += 1,
        }
    }
    Ok(finish(
        LIFT_ROUND_TRIP,
        done as u64,
        violations,
        format!("{drawn} pairs drawn, {skipped} without a marked braid word between the reductions"),
    ))
}

/// Runs every check from one seeded generator, in a fixed order.
pub fn run_property_suite(cfg: &SuiteConfig) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut checks = vec![braid_invariance(&mut rng, cfg)?];
    checks.extend(conjugation_checks(&mut rng, cfg)?);
    checks.push(reduction_invariance(&mut rng, cfg)?);
    checks.push(lift_round_trip(&mut rng, cfg)?);
    Ok(SuiteReport {
        config: cfg.clone(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig {
            braid_samples: 20,
            conjugation_samples: 2,
            reduction_samples: 20,
            lift_pairs: 3,
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn random_tuples_are_nielsen() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in [5, 6, 7] {
            let t = random_nielsen_tuple(&mut rng, k);
            assert_eq!(t.len(), k);
            assert!(t.is_product_one());
            assert_eq!(t.monodromy_order(), 360);
        }
    }

    #[test]
    fn small_suite_passes() {
        let report = run_property_suite(&small()).unwrap();
        for c in &report.checks {
            assert!(c.passed, "{c:?}");
        }
    }

    #[test]
    fn suite_is_deterministic() {
        let cfg = SuiteConfig {
            lift_pairs: 1,
            ..small()
        };
        assert_eq!(run_property_suite(&cfg).unwrap(), run_property_suite(&cfg).unwrap());
    }
}

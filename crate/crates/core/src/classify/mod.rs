//! Braid-orbit classification of Nielsen classes, plus the reproduction
//! checks and property suites built on it.
//!
//! Tuple length `k` corresponds to genus `g = k - 5` of the Galois closure's
//! quotient by a point stabiliser: `k = 5` is genus zero, `k = 6` genus one.

mod bridges;
mod reproduce;
mod suite;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use bridges::{verify_inner_parity_bridges, BridgeCheck, BridgeReport};
pub use reproduce::{reproduce, reproduce_all, reproduce_at, ReproCode, ReproOutcome};
pub use suite::{
    random_nielsen_tuple, random_word, run_property_suite, PropertyCheck, SuiteConfig, SuiteReport,
    ABS_ORDER_INVARIANCE, BRAID_INVARIANCE, INNER_INVARIANCE, LIFT_ROUND_TRIP, ODD_SWAP, REDUCTION_INVARIANCE,
};

use crate::a6val::{context, ClassElem};
use crate::error::{Error, Result};
use crate::lifting::exponent_of;
use crate::nielsen::{
    braid_orbit, braid_orbit_with, canonicalize, count_nielsen, enumerate_nielsen_from, Canon, CanonicalKey,
    NielsenTuple, OrbitOptions, OrbitSet, Target,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Abs,
    Inner,
}

impl Mode {
    pub fn canon(self) -> Canon {
        match self {
            Mode::Abs => Canon::Abs,
            Mode::Inner => Canon::Inner,
        }
    }

    /// Order of the conjugating group.
    fn conjugators(self) -> u64 {
        match self {
            Mode::Abs => 720,
            Mode::Inner => 360,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Abs => "abs",
            Mode::Inner => "inner",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "abs" => Ok(Mode::Abs),
            "inner" => Ok(Mode::Inner),
            _ => Err(Error::parse(s, "mode must be abs or inner")),
        }
    }
}

/// Required monodromy group, up to conjugation in S6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupChoice {
    A6,
    /// Transitive S4 inside A6.
    G24,
    /// Transitive A5 inside A6.
    G60,
}

impl GroupChoice {
    pub fn label(self) -> &'static str {
        match self {
            GroupChoice::A6 => "A6",
            GroupChoice::G24 => "G24-class",
            GroupChoice::G60 => "G60-class",
        }
    }

    pub fn target(self) -> Target {
        match self {
            GroupChoice::A6 => Target::a6(),
            GroupChoice::G24 => Target::TransitiveOfOrder(24),
            GroupChoice::G60 => Target::TransitiveOfOrder(60),
        }
    }

    pub fn order(self) -> usize {
        match self {
            GroupChoice::A6 => 360,
            GroupChoice::G24 => 24,
            GroupChoice::G60 => 60,
        }
    }
}

impl Serialize for GroupChoice {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

impl FromStr for GroupChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<GroupChoice> {
        match s.to_ascii_lowercase().as_str() {
            "a6" => Ok(GroupChoice::A6),
            "g24" => Ok(GroupChoice::G24),
            "g60" => Ok(GroupChoice::G60),
            _ => Err(Error::parse(s, "group must be a6, g24 or g60")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    /// Number of canonical states.
    pub size: usize,
    pub lift_exponent: u8,
    pub lift_order: u8,
    /// Least canonical key of the orbit.
    pub representative: NielsenTuple,
    pub monodromy_order: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub k: usize,
    pub mode: Mode,
    pub group_label: GroupChoice,
    pub orbit_count: usize,
    pub orbits: Vec<OrbitRecord>,
    /// Nielsen tuples before identifying conjugates.
    pub total_tuples: u64,
}

impl OrbitReport {
    pub fn total_states(&self) -> usize {
        self.orbits.iter().map(|o| o.size).sum()
    }

    pub fn exponents(&self) -> Vec<u8> {
        self.orbits.iter().map(|o| o.lift_exponent).collect()
    }
}

/// How exhaustiveness was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateMethod {
    /// Every canonical state was listed and matched against the orbits.
    Enumeration,
    /// The state count from dynamic programming matched the orbit sizes.
    StreamingCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub method: CertificateMethod,
    pub expected_states: u64,
    pub found_states: u64,
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub report: OrbitReport,
    /// Orbit key sets, in report order.
    pub orbits: Vec<OrbitSet>,
    pub certificate: Certificate,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ClassifyOptions {
    pub workers: Option<usize>,
    /// State budget per orbit search.
    pub max_states: Option<usize>,
    /// Permit k = 8, which needs several GiB.
    pub allow_k8: bool,
}

/// First entry of every canonical key.
const FRONT: ClassElem = ClassElem(0);
/// `(1,3)(2,4)` and `(1,4)(2,3)`, whose product is `(1,2)(3,4)`.
const SPLIT: [ClassElem; 2] = [ClassElem(6), ClassElem(12)];

pub fn classify(k: usize, mode: Mode, group: GroupChoice) -> Result<OrbitReport> {
    classify_with(k, mode, group, &ClassifyOptions::default()).map(|c| c.report)
}

pub fn classify_with(k: usize, mode: Mode, group: GroupChoice, options: &ClassifyOptions) -> Result<Classification> {
    let max_k = if options.allow_k8 { 8 } else { 7 };
    if !(5..=max_k).contains(&k) {
        return Err(Error::Precondition(format!(
            "k = {k} outside 5..={max_k}{}",
            if k == 8 {
                " (k = 8 must be enabled explicitly)"
            } else {
                ""
            }
        )));
    }
    if group != GroupChoice::A6 && k > 6 {
        return Err(Error::Precondition(
            "proper subgroups are classified for k <= 6 only".into(),
        ));
    }
    let target = group.target();
    let total_tuples = count_nielsen(k, &target)?;
    let inner = inner_orbits(k, &target, options)?;
    if group == GroupChoice::A6 && inner.certificate.expected_states != total_tuples / Mode::Inner.conjugators() {
        return Err(Error::Verification(format!(
            "{} enumerated inner states against {} counted",
            inner.certificate.expected_states,
            total_tuples / Mode::Inner.conjugators()
        )));
    }
    let (orbits, mut certificate) = match mode {
        Mode::Inner => (inner.orbits, inner.certificate),
        Mode::Abs => {
            let abs = merge_to_abs(&inner.orbits)?;
            (abs, inner.certificate)
        }
    };
    let found: u64 = orbits.iter().map(|o| o.size() as u64).sum();
    certificate.found_states = found;
    if group == GroupChoice::A6 {
        // A6 has trivial centraliser in S6, so conjugation acts freely
        certificate.expected_states = total_tuples / mode.conjugators();
    } else if mode == Mode::Abs {
        certificate.expected_states = found_abs_states_by_enumeration(k, &target)?;
    }
    if certificate.expected_states != found {
        return Err(Error::Verification(format!(
            "orbits cover {found} states, expected {}",
            certificate.expected_states
        )));
    }
    let mut records: Vec<(OrbitRecord, OrbitSet)> = orbits
        .into_iter()
        .map(|o| Ok((record_for(&o, mode)?, o)))
        .collect::<Result<_>>()?;
    records.sort_by(|a, b| (a.0.lift_exponent, &a.0.representative).cmp(&(b.0.lift_exponent, &b.0.representative)));
    let (records, orbits): (Vec<_>, Vec<_>) = records.into_iter().unzip();
    Ok(Classification {
        report: OrbitReport {
            k,
            mode,
            group_label: group,
            orbit_count: records.len(),
            orbits: records,
            total_tuples,
        },
        orbits,
        certificate,
    })
}

fn record_for(orbit: &OrbitSet, mode: Mode) -> Result<OrbitRecord> {
    let rep = orbit.min_key().expect("orbits are non-empty").tuple();
    let exponent = exponent_of(rep.entries())
        .ok_or_else(|| Error::Verification(format!("representative {rep} lacks product one")))?;
    let order = if exponent == 0 { 1 } else { 3 };
    // the exponent is constant on inner orbits, its order on abs orbits
    for key in orbit.keys() {
        let e = exponent_of(key.tuple().entries()).unwrap_or(u8::MAX);
        let consistent = match mode {
            Mode::Inner => e == exponent,
            Mode::Abs => (e == 0) == (exponent == 0),
        };
        if !consistent {
            return Err(Error::Verification(format!(
                "lifting invariant varies on the orbit of {rep}"
            )));
        }
    }
    Ok(OrbitRecord {
        size: orbit.size(),
        lift_exponent: exponent,
        lift_order: order,
        monodromy_order: rep.monodromy_order(),
        representative: rep,
    })
}

struct InnerOrbits {
    orbits: Vec<OrbitSet>,
    certificate: Certificate,
}

fn orbit_options(options: &ClassifyOptions) -> OrbitOptions {
    OrbitOptions {
        workers: options.workers,
        max_states: options.max_states,
    }
}

/// Every inner-canonical state, listed from tuples starting with the
/// canonical first entry.
fn inner_states(k: usize, target: &Target) -> Result<Vec<u64>> {
    let mut keys = Vec::new();
    enumerate_nielsen_from(&[FRONT], k, target, |t| keys.push(canonicalize(t, Canon::Inner)))?;
    keys.sort_unstable();
    keys.dedup();
    Ok(keys)
}

fn found_abs_states_by_enumeration(k: usize, target: &Target) -> Result<u64> {
    let mut keys = Vec::new();
    enumerate_nielsen_from(&[FRONT], k, target, |t| keys.push(canonicalize(t, Canon::Abs)))?;
    keys.sort_unstable();
    keys.dedup();
    Ok(keys.len() as u64)
}

fn covered(orbits: &[OrbitSet], key: u64) -> bool {
    orbits.iter().any(|o| o.contains_packed(key))
}

fn inner_orbits(k: usize, target: &Target, options: &ClassifyOptions) -> Result<InnerOrbits> {
    let opts = orbit_options(options);
    let mut orbits: Vec<OrbitSet> = Vec::new();
    if k <= 6 {
        let states = inner_states(k, target)?;
        for &key in &states {
            if !covered(&orbits, key) {
                let seed = CanonicalKey::from_packed(k, key).tuple();
                orbits.push(braid_orbit_with(&seed, Canon::Inner, &opts)?);
            }
        }
        for o in &orbits {
            if o.packed_keys().iter().any(|key| states.binary_search(key).is_err()) {
                return Err(Error::Verification("an orbit left the enumerated state set".into()));
            }
        }
        let found = orbits.iter().map(|o| o.size() as u64).sum();
        return Ok(InnerOrbits {
            orbits,
            certificate: Certificate {
                method: CertificateMethod::Enumeration,
                expected_states: states.len() as u64,
                found_states: found,
            },
        });
    }

    // Seeds from the classification one step down: splitting the leading
    // (1,2)(3,4) into a pair with that product keeps the lifting invariant.
    let previous = classify_with(k - 1, Mode::Inner, GroupChoice::A6, options)?;
    for rec in &previous.report.orbits {
        let seed = appended_seed(&rec.representative)?;
        let key = canonicalize(seed.entries(), Canon::Inner);
        if !covered(&orbits, key) {
            orbits.push(braid_orbit_with(&seed, Canon::Inner, &opts)?);
        }
    }
    let expected = count_nielsen(k, target)? / Mode::Inner.conjugators();
    let mut found: u64 = orbits.iter().map(|o| o.size() as u64).sum();
    if found < expected {
        // The seeds missed a component: scan every state for an uncovered one.
        let mut pending: Vec<u64> = Vec::new();
        enumerate_nielsen_from(&[FRONT], k, target, |t| {
            let key = canonicalize(t, Canon::Inner);
            if !covered(&orbits, key) {
                pending.push(key);
            }
        })?;
        pending.sort_unstable();
        pending.dedup();
        for key in pending {
            if !covered(&orbits, key) {
                let seed = CanonicalKey::from_packed(k, key).tuple();
                orbits.push(braid_orbit_with(&seed, Canon::Inner, &opts)?);
            }
        }
        found = orbits.iter().map(|o| o.size() as u64).sum();
    }
    Ok(InnerOrbits {
        orbits,
        certificate: Certificate {
            method: CertificateMethod::StreamingCount,
            expected_states: expected,
            found_states: found,
        },
    })
}

/// Replaces a leading `(1,2)(3,4)` by `(1,3)(2,4), (1,4)(2,3)`.
pub fn appended_seed(rep: &NielsenTuple) -> Result<NielsenTuple> {
    match rep.entries().first() {
        Some(&c) if c == FRONT => {
            let mut entries = SPLIT.to_vec();
            entries.extend_from_slice(&rep.entries()[1..]);
            Ok(NielsenTuple::new(entries))
        }
        _ => Err(Error::Precondition(format!("{rep} does not start with (1,2)(3,4)"))),
    }
}

/// Merges inner orbits into abs orbits: each inner orbit's image under S6
/// canonicalisation is an abs orbit, and two inner orbits merge exactly when
/// their images coincide.
fn merge_to_abs(inner: &[OrbitSet]) -> Result<Vec<OrbitSet>> {
    let mut by_min: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for o in inner {
        let len = o.tuple_len();
        let mut image: Vec<u64> = o
            .packed_keys()
            .iter()
            .map(|&key| {
                let t = CanonicalKey::from_packed(len, key).tuple();
                canonicalize(t.entries(), Canon::Abs)
            })
            .collect();
        image.sort_unstable();
        image.dedup();
        match by_min.get(&image[0]) {
            Some(existing) if *existing != image => {
                return Err(Error::Verification(
                    "abs images of inner orbits overlap partially".into(),
                ));
            }
            Some(_) => {}
            None => {
                by_min.insert(image[0], image);
            }
        }
    }
    let len = inner.first().map_or(0, |o| o.tuple_len());
    let merged: Vec<OrbitSet> = by_min
        .into_values()
        .map(|keys| OrbitSet::from_sorted_keys(len, Canon::Abs, keys))
        .collect();
    for (i, a) in merged.iter().enumerate() {
        for b in &merged[i + 1..] {
            if !a.is_disjoint(b) {
                return Err(Error::Verification("abs orbits overlap".into()));
            }
        }
    }
    Ok(merged)
}

/// Abs classification of 5-tuples for each transitive monodromy group that
/// occurs, in increasing group order.
pub fn classify_five_subgroups() -> Result<Vec<OrbitReport>> {
    let ctx = context();
    let subs = ctx.subgroups();
    let mut orders: Vec<usize> = (0..subs.len())
        .map(|h| crate::a6val::SubgroupId(h as u16))
        .filter(|&h| subs.is_transitive(h))
        .filter(|&h| count_nielsen(5, &Target::Group(h)).unwrap_or(0) > 0)
        .map(|h| subs.order(h))
        .collect();
    orders.sort_unstable();
    orders.dedup();
    orders
        .into_iter()
        .map(|order| {
            let group = match order {
                24 => GroupChoice::G24,
                60 => GroupChoice::G60,
                360 => GroupChoice::A6,
                other => {
                    return Err(Error::Verification(format!(
                        "unexpected transitive monodromy of order {other} at k = 5"
                    )))
                }
            };
            classify(5, Mode::Abs, group)
        })
        .collect()
}

/// The six five-point normal forms, labelled as in the case analysis.
pub const FIVE_POINT_CASES: [(&str, &str); 6] = [
    ("1", "(1,2)(3,4) (1,2)(3,4) (1,3)(2,5) (1,3)(4,6) (2,5)(4,6)"),
    ("2", "(1,2)(3,4) (1,3)(2,4) (1,4)(2,3) (1,5)(2,6) (1,5)(2,6)"),
    ("3.1", "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (1,6)(2,3) (1,6)(3,5)"),
    ("3.2", "(1,2)(3,4) (1,3)(2,4) (1,4)(2,5) (2,3)(4,6) (3,5)(4,6)"),
    ("4", "(1,2)(3,4) (1,3)(2,4) (1,4)(5,6) (2,5)(3,6) (2,6)(3,5)"),
    ("5", "(1,2)(3,4) (1,3)(2,4) (1,5)(4,6) (1,6)(4,5) (2,3)(5,6)"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub label: &'static str,
    pub tuple: NielsenTuple,
    pub monodromy_order: usize,
    /// Labels of the earlier cases in the same absolute braid orbit.
    pub same_orbit_as: Vec<&'static str>,
}

/// Measures the monodromy order of each five-point normal form and which
/// forms share an absolute braid orbit.
pub fn five_point_cases() -> Result<Vec<CaseRecord>> {
    let tuples: Vec<(&'static str, NielsenTuple)> = FIVE_POINT_CASES
        .iter()
        .map(|&(label, t)| Ok((label, NielsenTuple::parse(t)?)))
        .collect::<Result<_>>()?;
    let orbits: Vec<OrbitSet> = tuples.iter().map(|(_, t)| braid_orbit(t, Canon::Abs)).collect();
    Ok(tuples
        .iter()
        .enumerate()
        .map(|(i, (label, t))| CaseRecord {
            label,
            tuple: t.clone(),
            monodromy_order: t.monodromy_order(),
            same_orbit_as: (0..i)
                .filter(|&j| orbits[j].contains_tuple(t))
                .map(|j| tuples[j].0)
                .collect(),
        })
        .collect())
}

/// Runs the abs orbit search directly rather than by merging inner orbits.
pub fn classify_abs_direct(k: usize, group: GroupChoice, options: &ClassifyOptions) -> Result<Vec<OrbitSet>> {
    if !(5..=6).contains(&k) {
        return Err(Error::Precondition("direct abs search is for k = 5, 6".into()));
    }
    let mut keys = Vec::new();
    enumerate_nielsen_from(&[FRONT], k, &group.target(), |t| keys.push(canonicalize(t, Canon::Abs)))?;
    keys.sort_unstable();
    keys.dedup();
    let opts = orbit_options(options);
    let mut orbits: Vec<OrbitSet> = Vec::new();
    for key in keys {
        if !covered(&orbits, key) {
            orbits.push(braid_orbit_with(
                &CanonicalKey::from_packed(k, key).tuple(),
                Canon::Abs,
                &opts,
            )?);
        }
    }
    Ok(orbits)
}

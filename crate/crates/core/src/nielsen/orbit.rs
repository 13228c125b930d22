use rayon::prelude::*;
use rustc_hash::FxHashSet;

use super::{canonicalize, move_in_place, unpack, Canon, CanonicalKey, Direction, NielsenTuple, MAX_KEY_LEN};
use crate::a6val::ClassElem;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default)]
pub struct OrbitOptions {
    /// Worker threads; `None` uses the ambient rayon pool.
    pub workers: Option<usize>,
    /// Abort with [`Error::Budget`] once more states than this are found.
    pub max_states: Option<usize>,
}

/// A braid orbit as a sorted set of (canonicalised) keys.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitSet {
    len: usize,
    canon: Canon,
    keys: Vec<u64>,
}

impl OrbitSet {
    /// `keys` must be sorted and deduplicated.
    pub(crate) fn from_sorted_keys(len: usize, canon: Canon, keys: Vec<u64>) -> OrbitSet {
        debug_assert!(keys.windows(2).all(|w| w[0] < w[1]));
        OrbitSet { len, canon, keys }
    }

    pub fn tuple_len(&self) -> usize {
        self.len
    }

    pub fn canon(&self) -> Canon {
        self.canon
    }

    /// Number of states.
    pub fn size(&self) -> usize {
        self.keys.len()
    }

    pub fn contains(&self, key: &CanonicalKey) -> bool {
        key.len() == self.len && self.contains_packed(key.packed())
    }

    pub fn contains_packed(&self, packed: u64) -> bool {
        self.keys.binary_search(&packed).is_ok()
    }

    /// Whether the orbit contains `t` after canonicalisation.
    pub fn contains_tuple(&self, t: &NielsenTuple) -> bool {
        t.len() == self.len && self.contains_packed(canonicalize(t.entries(), self.canon))
    }

    /// Least key, which is the orbit's reproducible representative.
    pub fn min_key(&self) -> Option<CanonicalKey> {
        self.keys.first().map(|&k| CanonicalKey::from_packed(self.len, k))
    }

    pub fn packed_keys(&self) -> &[u64] {
        &self.keys
    }

    pub fn keys(&self) -> impl Iterator<Item = CanonicalKey> + '_ {
        self.keys.iter().map(|&k| CanonicalKey::from_packed(self.len, k))
    }

    pub fn is_disjoint(&self, other: &OrbitSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.keys.len() && j < other.keys.len() {
            match self.keys[i].cmp(&other.keys[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }
}

fn neighbours(packed: u64, len: usize, canon: Canon, out: &mut Vec<u64>) {
    let mut base = [ClassElem(0); MAX_KEY_LEN];
    unpack(packed, len, &mut base);
    for p in 0..len.saturating_sub(1) {
        for d in [Direction::Forward, Direction::Backward] {
            let mut moved = base;
            move_in_place(&mut moved[..len], p, d);
            out.push(canonicalize(&moved[..len], canon));
        }
    }
}

/// BFS closure of `seed` under every forward and backward braid move,
/// identifying states by `canon`.
pub fn braid_orbit(seed: &NielsenTuple, canon: Canon) -> OrbitSet {
    braid_orbit_with(seed, canon, &OrbitOptions::default()).expect("no budget set")
}

/// [`braid_orbit`] with explicit worker count and state budget.
///
/// The search runs level by level: each frontier is expanded in parallel,
/// the candidates are sorted and deduplicated, then filtered against the
/// visited set on one thread. The resulting set does not depend on the
/// worker count.
pub fn braid_orbit_with(seed: &NielsenTuple, canon: Canon, options: &OrbitOptions) -> Result<OrbitSet> {
    let len = seed.len();
    if len > MAX_KEY_LEN {
        return Err(Error::Precondition(format!(
            "orbit search supports tuples up to length {MAX_KEY_LEN}"
        )));
    }
    let run = || -> Result<OrbitSet> {
        let start = canonicalize(seed.entries(), canon);
        let mut visited: FxHashSet<u64> = FxHashSet::default();
        visited.insert(start);
        let mut frontier = vec![start];
        while !frontier.is_empty() {
            let mut candidates: Vec<u64> = frontier
                .par_chunks(1024)
                .flat_map_iter(|chunk| {
                    let mut out = Vec::with_capacity(chunk.len() * 2 * len);
                    for &k in chunk {
                        neighbours(k, len, canon, &mut out);
                    }
                    out
                })
                .collect();
            candidates.par_sort_unstable();
            candidates.dedup();
            candidates.retain(|k| visited.insert(*k));
            if let Some(limit) = options.max_states {
                if visited.len() > limit {
                    return Err(Error::Budget(format!("braid orbit exceeded {limit} states")));
                }
            }
            frontier = candidates;
        }
        let mut keys: Vec<u64> = visited.into_iter().collect();
        keys.par_sort_unstable();
        Ok(OrbitSet { len, canon, keys })
    };
    match options.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w.max(1))
            .build()
            .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    }
}

//! Random growth inside a hereditary class, for orders where exhaustive
//! generation does not fit the budget.
//!
//! Each sample starts from a member of a smaller order and repeatedly
//! attaches a new vertex with a random admissible neighborhood until the
//! target order is reached. Every intermediate graph stays in the class, so
//! every sample is a genuine member. The distribution is not uniform.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Augmenter, ClassSpec, EnumerateError};
use crate::graph::{canonical_form, CanonicalCode, Graph, VertexSet};
use crate::par::{self, Execution};

#[derive(Clone, Debug)]
pub struct SampleOptions {
    pub seed: u64,
    pub execution: Execution,
    /// Stop after the batch during which this instant passes.
    pub deadline: Option<Instant>,
    /// Upper bound on growth attempts.
    pub max_attempts: usize,
    /// Attempts per batch; batches are the unit of determinism.
    pub batch: usize,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { seed: 0, execution: Execution::Parallel, deadline: None, max_attempts: 10_000, batch: 256 }
    }
}

/// Outcome of [`sample_class`].
#[derive(Clone, Debug)]
pub struct Sampled {
    /// Distinct class members found, sorted by canonical code.
    pub codes: Vec<CanonicalCode>,
    pub attempts: usize,
}

/// Grows random members of `spec`'s class from the given seed graphs, which
/// must themselves be members (connected ones when the class is connected).
///
/// Attempt `i` of batch `b` uses its own generator seeded from
/// `(seed, b, i)`, so for a fixed number of completed batches the result is
/// reproducible regardless of thread count.
pub fn sample_class(spec: &ClassSpec, seeds: &[CanonicalCode], opts: &SampleOptions) -> Result<Sampled, EnumerateError> {
    spec.validate()?;
    let aug = Augmenter::for_spec(spec);
    let seeds: Vec<Graph> = seeds
        .iter()
        .map(|c| c.to_graph())
        .filter(|g| g.order() <= spec.target_order)
        .collect();
    if seeds.is_empty() {
        return Ok(Sampled { codes: Vec::new(), attempts: 0 });
    }
    let mut found = BTreeSet::new();
    let mut attempts = 0;
    let mut batch_no = 0u64;
    while attempts < opts.max_attempts {
        let take = opts.batch.max(1).min(opts.max_attempts - attempts);
        let indices: Vec<u64> = (0..take as u64).collect();
        let results = par::map(opts.execution, &indices, |&i| {
            let mut rng = ChaCha8Rng::seed_from_u64(mix3(opts.seed, batch_no, i));
            grow(spec, &aug, &seeds, &mut rng)
        });
        attempts += take;
        batch_no += 1;
        found.extend(results.into_iter().flatten());
        if opts.deadline.is_some_and(|d| Instant::now() > d) {
            break;
        }
    }
    Ok(Sampled { codes: found.into_iter().collect(), attempts })
}

fn grow(spec: &ClassSpec, aug: &Augmenter, seeds: &[Graph], rng: &mut ChaCha8Rng) -> Option<CanonicalCode> {
    let mut g = seeds[rng.gen_range(0..seeds.len())].clone();
    let mut options = Vec::new();
    while g.order() < spec.target_order {
        options.clear();
        aug.admissible_neighborhoods(&g, 0, VertexSet::EMPTY, &mut options);
        options.shuffle(rng);
        let v = g.push_isolated().ok()?;
        let mut attached = false;
        for &s in &options {
            g.set_last_neighbors(s);
            if aug.accepts(&g, v) {
                attached = true;
                break;
            }
        }
        if !attached {
            return None;
        }
    }
    if spec.accepts_at_target(&g) {
        canonical_form(&g).ok()
    } else {
        None
    }
}

fn mix3(a: u64, b: u64, c: u64) -> u64 {
    let mut x = a ^ b.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ c.wrapping_mul(0xc2b2_ae3d_27d4_eb4f);
    x ^= x >> 31;
    x = x.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x ^ x >> 29
}

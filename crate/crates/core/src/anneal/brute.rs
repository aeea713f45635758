//! Exhaustive enumeration: the exact solver and verification oracle.

use super::{Provenance, SampleSet};
use crate::quad::{Domain, QuadraticModel};
use crate::{Error, Result};

pub const MAX_BRUTE_FORCE_VARS: usize = 26;

/// Cap on how many degenerate minima are listed; past it the set is marked
/// truncated (a zero model on 26 variables has 2^26 of them).
const MAX_LISTED_MINIMA: usize = 4096;

/// Enumerate every assignment by Gray code with incremental energy updates,
/// re-evaluate the near-minimal candidates exactly, and list all assignments
/// within 1e-9 of the global minimum.
pub fn brute_force_min(model: &QuadraticModel) -> Result<SampleSet> {
    let n = model.n_vars();
    if n > MAX_BRUTE_FORCE_VARS {
        return Err(Error::TooManyVariables {
            n,
            max: MAX_BRUTE_FORCE_VARS,
        });
    }

    let (lo, hi): (i8, i8) = match model.domain {
        Domain::Spin => (1, -1), // bit 0 -> +1, bit 1 -> -1
        Domain::Boolean => (0, 1),
    };

    if n == 0 {
        return Ok(SampleSet::from_records(
            vec![(Vec::new(), model.offset)],
            model.domain,
            Provenance::Exact,
            false,
        ));
    }

    let mut adjacency: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (&(i, j), &q) in &model.quadratic {
        adjacency[i as usize].push((j as usize, q));
        adjacency[j as usize].push((i as usize, q));
    }

    let mut values: Vec<i8> = vec![lo; n];
    let mut energy = model.energy(&values);
    let mut best = energy;
    // slack absorbs incremental drift before the exact re-check
    let slack = 1e-9;
    let mut candidates: Vec<(Vec<i8>, f64)> = vec![(values.clone(), energy)];

    let total: u64 = 1u64 << n;
    for step in 1..total {
        let flip = step.trailing_zeros() as usize;
        let old = values[flip] as f64;
        let new = if values[flip] == lo { hi } else { lo };
        let mut local = model.linear[flip];
        for &(j, q) in &adjacency[flip] {
            local += q * values[j] as f64;
        }
        energy += (new as f64 - old) * local;
        values[flip] = new;

        if energy < best + slack {
            if energy < best {
                best = energy;
                candidates.retain(|(_, e)| *e < best + slack);
            }
            if candidates.len() < MAX_LISTED_MINIMA * 2 {
                candidates.push((values.clone(), energy));
            }
        }
    }

    // exact re-evaluation, then keep everything within slack of the true min
    for (config, e) in &mut candidates {
        *e = model.energy(config);
    }
    let exact_min = candidates
        .iter()
        .map(|&(_, e)| e)
        .fold(f64::INFINITY, f64::min);
    candidates.retain(|&(_, e)| e <= exact_min + slack);
    let truncated = candidates.len() > MAX_LISTED_MINIMA;
    candidates.truncate(MAX_LISTED_MINIMA);

    Ok(SampleSet::from_records(
        candidates,
        model.domain,
        Provenance::Exact,
        truncated,
    ))
}

//! Single-spin-flip Metropolis simulated annealing.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Provenance, SampleSet};
use crate::util::splitmix64;
use crate::quad::{Domain, QuadraticModel};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScheduleKind {
    Linear,
    Geometric,
}

#[derive(Debug, Clone)]
pub struct AnnealConfig {
    pub reads: usize,
    pub sweeps: usize,
    pub beta_start: f64,
    pub beta_end: f64,
    pub schedule: ScheduleKind,
    pub seed: u64,
}

impl Default for AnnealConfig {
    fn default() -> Self {
        AnnealConfig {
            reads: 1000,
            sweeps: 1000,
            beta_start: 0.1,
            beta_end: 50.0,
            schedule: ScheduleKind::Geometric,
            seed: 0,
        }
    }
}

impl AnnealConfig {
    pub fn validate(&self) -> Result<()> {
        if self.reads < 1 {
            return Err(Error::Domain("reads must be >= 1".to_string()));
        }
        if self.sweeps < 1 {
            return Err(Error::Domain("sweeps must be >= 1".to_string()));
        }
        if !(self.beta_start > 0.0 && self.beta_end > self.beta_start) {
            return Err(Error::Domain(format!(
                "need beta_end > beta_start > 0, got {} and {}",
                self.beta_start, self.beta_end
            )));
        }
        Ok(())
    }

    fn beta_at(&self, sweep: usize) -> f64 {
        if self.sweeps <= 1 {
            return self.beta_end;
        }
        let t = sweep as f64 / (self.sweeps - 1) as f64;
        match self.schedule {
            ScheduleKind::Linear => self.beta_start + (self.beta_end - self.beta_start) * t,
            ScheduleKind::Geometric => {
                self.beta_start * (self.beta_end / self.beta_start).powf(t)
            }
        }
    }
}

/// Anneal a spin-domain model. Every read starts from a fresh random
/// configuration, runs Metropolis sweeps along the beta schedule, and
/// reports the lowest-energy configuration it visited (energy re-evaluated
/// exactly). Reads derive independent sub-seeds from (seed, read index), so
/// the result is deterministic and read-order stable under parallelism.
pub fn simulated_anneal(model: &QuadraticModel, config: &AnnealConfig) -> Result<SampleSet> {
    config.validate()?;
    if model.domain != Domain::Spin {
        return Err(Error::Domain(
            "simulated_anneal needs a spin-domain model".to_string(),
        ));
    }
    let n = model.n_vars();
    if n == 0 {
        return Ok(SampleSet::from_records(
            vec![(Vec::new(), model.offset); config.reads],
            model.domain,
            Provenance::Annealed,
            false,
        ));
    }

    let mut adjacency: Vec<Vec<(usize, f64)>> = vec![Vec::new(); n];
    for (&(i, j), &q) in &model.quadratic {
        adjacency[i as usize].push((j as usize, q));
        adjacency[j as usize].push((i as usize, q));
    }
    let betas: Vec<f64> = (0..config.sweeps).map(|s| config.beta_at(s)).collect();

    let records: Vec<(Vec<i8>, f64)> = (0..config.reads)
        .into_par_iter()
        .map(|read| {
            let mut rng =
                ChaCha8Rng::seed_from_u64(splitmix64(config.seed ^ splitmix64(read as u64)));
            let mut spins: Vec<i8> = (0..n).map(|_| if rng.gen() { 1 } else { -1 }).collect();
            let mut energy = model.energy(&spins);
            let mut best = (spins.clone(), energy);
            let mut order: Vec<usize> = (0..n).collect();

            for &beta in &betas {
                order.shuffle(&mut rng);
                for &i in &order {
                    let mut local = model.linear[i];
                    for &(j, q) in &adjacency[i] {
                        local += q * spins[j] as f64;
                    }
                    let delta = -2.0 * spins[i] as f64 * local;
                    if delta <= 0.0 || rng.gen::<f64>() < (-beta * delta).exp() {
                        spins[i] = -spins[i];
                        energy += delta;
                        if energy < best.1 {
                            best = (spins.clone(), energy);
                        }
                    }
                }
            }
            debug_assert!(
                (energy - model.energy(&spins)).abs() < 1e-9,
                "incremental energy drifted from exact re-evaluation"
            );
            let exact = model.energy(&best.0);
            (best.0, exact)
        })
        .collect();

    Ok(SampleSet::from_records(
        records,
        model.domain,
        Provenance::Annealed,
        false,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::anneal::brute_force_min;
    use crate::quad::ModelVariable;

    fn spin_model(n: usize) -> QuadraticModel {
        QuadraticModel::new(
            Domain::Spin,
            (0..n as u32).map(ModelVariable::Ancilla).collect(),
        )
    }

    fn random_model(n: usize, seed: u64) -> QuadraticModel {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = spin_model(n);
        for i in 0..n as u32 {
            m.add_linear(i, rng.gen_range(-1.0..1.0));
        }
        for i in 0..n as u32 {
            for j in (i + 1)..n as u32 {
                if rng.gen_bool(0.4) {
                    m.add_quadratic(i, j, rng.gen_range(-1.0..1.0));
                }
            }
        }
        m
    }

    #[test]
    fn zero_coupling_model_returns_offset_everywhere() {
        let mut m = spin_model(4);
        m.offset = 1.25;
        let cfg = AnnealConfig {
            reads: 8,
            sweeps: 10,
            ..AnnealConfig::default()
        };
        let set = simulated_anneal(&m, &cfg).unwrap();
        let total: usize = set.records().iter().map(|r| r.multiplicity).sum();
        assert_eq!(total, 8);
        assert!(set.records().iter().all(|r| r.energy == 1.25));
    }

    #[test]
    fn fixed_seed_is_bit_identical() {
        let m = random_model(12, 7);
        let cfg = AnnealConfig {
            reads: 20,
            sweeps: 50,
            seed: 99,
            ..AnnealConfig::default()
        };
        let a = simulated_anneal(&m, &cfg).unwrap();
        let b = simulated_anneal(&m, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn incremental_energy_matches_full_reevaluation() {
        // the returned energies are exact re-evaluations by construction;
        // check them against a manual pass over the records
        let m = random_model(10, 13);
        let cfg = AnnealConfig {
            reads: 16,
            sweeps: 64,
            seed: 5,
            ..AnnealConfig::default()
        };
        let set = simulated_anneal(&m, &cfg).unwrap();
        for r in set.records() {
            assert!((r.energy - m.energy(&r.configuration)).abs() < 1e-9);
        }
    }

    #[test]
    fn finds_global_optimum_on_99_of_100_random_16_var_models() {
        // default config: 1000 reads x 1000 sweeps
        let hits: usize = (0..100u64)
            .map(|k| {
                let m = random_model(16, 1000 + k);
                let exact = brute_force_min(&m).unwrap().best().unwrap().energy;
                let cfg = AnnealConfig {
                    seed: k,
                    ..AnnealConfig::default()
                };
                let found = simulated_anneal(&m, &cfg).unwrap().best().unwrap().energy;
                usize::from((found - exact).abs() < 1e-9)
            })
            .sum();
        assert!(hits >= 99, "SA found the optimum in only {hits}/100 models");
    }

    #[test]
    fn rejects_boolean_models_and_bad_configs() {
        let m = QuadraticModel::new(Domain::Boolean, vec![ModelVariable::Ancilla(0)]);
        assert!(simulated_anneal(&m, &AnnealConfig::default()).is_err());
        let s = spin_model(1);
        let bad = AnnealConfig {
            beta_start: 2.0,
            beta_end: 1.0,
            ..AnnealConfig::default()
        };
        assert!(simulated_anneal(&s, &bad).is_err());
        let zero_reads = AnnealConfig {
            reads: 0,
            ..AnnealConfig::default()
        };
        assert!(simulated_anneal(&s, &zero_reads).is_err());
    }
}

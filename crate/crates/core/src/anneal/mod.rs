//! Solvers for quadratic spin models behind one sampler contract.

mod brute;
mod sa;

pub(crate) use crate::util::splitmix64;

pub use brute::{brute_force_min, MAX_BRUTE_FORCE_VARS};
pub use sa::{simulated_anneal, AnnealConfig, ScheduleKind};

use crate::quad::{Domain, QuadraticModel};
use crate::Result;

/// Where a sample set came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Exact,
    Annealed,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleRecord {
    pub configuration: Vec<i8>,
    pub energy: f64,
    pub multiplicity: usize,
}

/// Solver output: configurations with exact (re-evaluated) energies, sorted
/// ascending by energy with deterministic tie order.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    records: Vec<SampleRecord>,
    pub domain: Domain,
    pub provenance: Provenance,
    /// True when a degenerate-minimum listing was cut off at the cap.
    pub truncated: bool,
}

impl SampleSet {
    pub fn from_records(
        mut raw: Vec<(Vec<i8>, f64)>,
        domain: Domain,
        provenance: Provenance,
        truncated: bool,
    ) -> Self {
        raw.sort_by(|a, b| {
            a.1.partial_cmp(&b.1)
                .expect("finite energies")
                .then_with(|| a.0.cmp(&b.0))
        });
        let mut records: Vec<SampleRecord> = Vec::new();
        for (configuration, energy) in raw {
            match records.last_mut() {
                Some(last) if last.configuration == configuration => last.multiplicity += 1,
                _ => records.push(SampleRecord {
                    configuration,
                    energy,
                    multiplicity: 1,
                }),
            }
        }
        SampleSet {
            records,
            domain,
            provenance,
            truncated,
        }
    }

    pub fn records(&self) -> &[SampleRecord] {
        &self.records
    }

    pub fn best(&self) -> Option<&SampleRecord> {
        self.records.first()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// CSV export: `energy, multiplicity, configuration-bitstring`, with bit
    /// 1 encoding spin -1 (equivalently boolean 1).
    pub fn to_csv(&self) -> String {
        let mut out = String::from("energy,multiplicity,configuration\n");
        for r in &self.records {
            let bits: String = r
                .configuration
                .iter()
                .map(|&v| match (self.domain, v) {
                    (Domain::Spin, 1) | (Domain::Boolean, 0) => '0',
                    _ => '1',
                })
                .collect();
            out.push_str(&format!("{},{},{}\n", r.energy, r.multiplicity, bits));
        }
        out
    }
}

/// Behavioral contract shared by the exact and annealing solvers: energies
/// in the returned set equal re-evaluation of the model at the returned
/// configurations.
pub trait Sampler {
    fn sample(&mut self, model: &QuadraticModel) -> Result<SampleSet>;
}

/// Exhaustive enumeration solver.
#[derive(Debug, Default, Clone)]
pub struct ExactSampler;

impl Sampler for ExactSampler {
    fn sample(&mut self, model: &QuadraticModel) -> Result<SampleSet> {
        brute_force_min(model)
    }
}

/// Simulated annealing solver; successive `sample` calls draw fresh
/// deterministic sub-seeds so retries explore new reads.
#[derive(Debug, Clone)]
pub struct SaSampler {
    pub config: AnnealConfig,
    calls: u64,
}

impl SaSampler {
    pub fn new(config: AnnealConfig) -> Self {
        SaSampler { config, calls: 0 }
    }
}

impl Sampler for SaSampler {
    fn sample(&mut self, model: &QuadraticModel) -> Result<SampleSet> {
        let mut config = self.config.clone();
        config.seed = splitmix64(self.config.seed ^ splitmix64(self.calls));
        self.calls += 1;
        simulated_anneal(model, &config)
    }
}

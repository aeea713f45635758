//! Sampler wrapper that solves on the chain-penalized physical model.

use crate::anneal::{Provenance, SampleSet, Sampler};
use crate::chimera::{embed_model, ChimeraGraph, Embedding};
use crate::quad::QuadraticModel;
use crate::Result;

/// Embeds every model it is asked to sample onto a fixed Chimera embedding,
/// runs the inner sampler on the physical model, and majority-votes the
/// samples back. Logical energies are re-evaluated exactly.
pub struct EmbeddedSampler<'a, S: Sampler> {
    pub inner: S,
    pub chimera: &'a ChimeraGraph,
    pub embedding: Embedding,
    /// None: 2 x the largest absolute model coefficient.
    pub chain_strength: Option<f64>,
}

impl<S: Sampler> Sampler for EmbeddedSampler<'_, S> {
    fn sample(&mut self, model: &QuadraticModel) -> Result<SampleSet> {
        let cs = self
            .chain_strength
            .unwrap_or_else(|| 2.0 * model.max_abs_coefficient());
        let embedded = embed_model(model, &self.embedding, self.chimera, cs)?;
        let physical = self.inner.sample(&embedded.physical)?;
        let records: Vec<(Vec<i8>, f64)> = physical
            .records()
            .iter()
            .map(|rec| {
                let logical = embedded.unembed(&rec.configuration);
                let energy = model.energy(&logical);
                (logical, energy)
            })
            .collect();
        Ok(SampleSet::from_records(
            records,
            model.domain,
            Provenance::Annealed,
            false,
        ))
    }
}

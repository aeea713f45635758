//! Chain construction: logical quadratic models onto physical qubits.

use std::collections::BTreeMap;

use super::{ChimeraGraph, Embedding};
use crate::quad::{Domain, ModelVariable, QuadraticModel};
use crate::{Error, Result};

/// A logical model pushed through an embedding: physical couplings live only
/// on hardware edges, chains are held together ferromagnetically.
#[derive(Debug, Clone)]
pub struct EmbeddedModel {
    pub physical: QuadraticModel,
    pub embedding: Embedding,
    pub chain_strength: f64,
    /// Physical vertex id of each physical model variable.
    physical_vertices: Vec<u32>,
    /// Constant the chain couplings contribute on chain-consistent
    /// configurations.
    chain_offset: f64,
    n_logical: usize,
}

impl EmbeddedModel {
    pub fn n_physical_qubits(&self) -> usize {
        self.physical_vertices.len()
    }

    pub fn chain_offset(&self) -> f64 {
        self.chain_offset
    }

    /// Majority-vote a physical sample back to the logical variables; ties
    /// resolve to +1.
    pub fn unembed(&self, physical_sample: &[i8]) -> Vec<i8> {
        let index_of: BTreeMap<u32, usize> = self
            .physical_vertices
            .iter()
            .enumerate()
            .map(|(i, &q)| (q, i))
            .collect();
        (0..self.n_logical as u32)
            .map(|v| {
                let chain = &self.embedding.chains[&v];
                let score: i32 = chain
                    .iter()
                    .map(|q| physical_sample[index_of[q]] as i32)
                    .sum();
                if score >= 0 {
                    1
                } else {
                    -1
                }
            })
            .collect()
    }
}

/// Split logical fields uniformly over chains, place each logical coupling
/// on one hardware edge, and add ferromagnetic chain couplings of magnitude
/// `chain_strength` on every hardware edge inside a chain.
pub fn embed_model(
    model: &QuadraticModel,
    embedding: &Embedding,
    chimera: &ChimeraGraph,
    chain_strength: f64,
) -> Result<EmbeddedModel> {
    if model.domain != Domain::Spin {
        return Err(Error::Domain("embed_model needs a spin-domain model".to_string()));
    }
    let n_logical = model.n_vars();
    for v in 0..n_logical as u32 {
        if !embedding.chains.contains_key(&v) {
            return Err(Error::InvalidEmbedding(format!("variable {v} has no chain")));
        }
    }

    let mut physical_vertices: Vec<u32> = embedding
        .chains
        .iter()
        .filter(|&(v, _)| (*v as usize) < n_logical)
        .flat_map(|(_, chain)| chain.iter().copied())
        .collect();
    physical_vertices.sort_unstable();
    physical_vertices.dedup();
    let index_of: BTreeMap<u32, u32> = physical_vertices
        .iter()
        .enumerate()
        .map(|(i, &q)| (q, i as u32))
        .collect();

    let mut physical = QuadraticModel::new(
        Domain::Spin,
        physical_vertices
            .iter()
            .map(|&q| ModelVariable::Ancilla(q))
            .collect(),
    );
    physical.offset = model.offset;

    for (i, &h) in model.linear.iter().enumerate() {
        let chain = &embedding.chains[&(i as u32)];
        let share = h / chain.len() as f64;
        for &q in chain {
            physical.add_linear(index_of[&q], share);
        }
    }

    for (&(a, b), &j) in &model.quadratic {
        if j == 0.0 {
            continue;
        }
        let ca = &embedding.chains[&a];
        let cb: std::collections::BTreeSet<u32> = embedding.chains[&b].iter().copied().collect();
        let mut site = None;
        for &qa in ca {
            for &nb in chimera.neighbors(qa) {
                if cb.contains(&nb) {
                    let edge = (qa.min(nb), qa.max(nb));
                    site = Some(match site {
                        None => edge,
                        Some(existing) if edge < existing => edge,
                        Some(existing) => existing,
                    });
                }
            }
        }
        let (qa, qb) = site.ok_or_else(|| {
            Error::InvalidEmbedding(format!("no physical edge between chains of {a} and {b}"))
        })?;
        physical.add_quadratic(index_of[&qa], index_of[&qb], j);
    }

    let mut chain_offset = 0.0;
    for chain in embedding.chains.values() {
        let set: std::collections::BTreeSet<u32> = chain.iter().copied().collect();
        for &q in chain {
            for &nb in chimera.neighbors(q) {
                if nb > q && set.contains(&nb) {
                    physical.add_quadratic(index_of[&q], index_of[&nb], -chain_strength);
                    chain_offset -= chain_strength;
                }
            }
        }
    }

    Ok(EmbeddedModel {
        physical,
        embedding: embedding.clone(),
        chain_strength,
        physical_vertices,
        chain_offset,
        n_logical,
    })
}

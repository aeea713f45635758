//! Randomized greedy minor embedding.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{ChimeraGraph, Embedding, LogicalGraph};
use crate::util::splitmix64;
use crate::{Error, Result};

/// Extra rip-up-and-retry passes inside one `find_embedding` call.
const RETRY_PASSES: usize = 3;

/// Independent validity checker: chain disjointness, chain connectivity,
/// and logical-edge coverage. Deliberately separate from the embedder.
pub fn verify_embedding(
    logical: &LogicalGraph,
    chimera: &ChimeraGraph,
    embedding: &Embedding,
) -> Result<()> {
    let mut owner: Vec<Option<u32>> = vec![None; chimera.n_vertices()];
    for v in 0..logical.n_vertices() as u32 {
        let chain = embedding
            .chains
            .get(&v)
            .ok_or_else(|| Error::InvalidEmbedding(format!("variable {v} has no chain")))?;
        if chain.is_empty() {
            return Err(Error::InvalidEmbedding(format!("variable {v} has an empty chain")));
        }
        for &q in chain {
            if q as usize >= chimera.n_vertices() {
                return Err(Error::InvalidEmbedding(format!("qubit {q} out of range")));
            }
            if let Some(other) = owner[q as usize] {
                return Err(Error::InvalidEmbedding(format!(
                    "qubit {q} claimed by variables {other} and {v}"
                )));
            }
            owner[q as usize] = Some(v);
        }
        // connectivity inside the chain
        let in_chain: std::collections::BTreeSet<u32> = chain.iter().copied().collect();
        let mut seen = std::collections::BTreeSet::from([chain[0]]);
        let mut queue = vec![chain[0]];
        while let Some(q) = queue.pop() {
            for &nb in chimera.neighbors(q) {
                if in_chain.contains(&nb) && seen.insert(nb) {
                    queue.push(nb);
                }
            }
        }
        if seen.len() != in_chain.len() {
            return Err(Error::InvalidEmbedding(format!(
                "chain of variable {v} is disconnected"
            )));
        }
    }
    for &(a, b) in logical.edges() {
        let ca = &embedding.chains[&a];
        let cb: std::collections::BTreeSet<u32> = embedding.chains[&b].iter().copied().collect();
        let coupled = ca
            .iter()
            .any(|&q| chimera.neighbors(q).iter().any(|nb| cb.contains(nb)));
        if !coupled {
            return Err(Error::InvalidEmbedding(format!(
                "no physical edge between chains of {a} and {b}"
            )));
        }
    }
    Ok(())
}

/// One greedy pass: place vertices in random order, growing each chain from
/// the physical qubit that minimizes the summed BFS distance to the chains
/// of its already-placed neighbors, claiming the connecting paths.
fn attempt(logical: &LogicalGraph, chimera: &ChimeraGraph, rng: &mut ChaCha8Rng) -> Option<Embedding> {
    let np = chimera.n_vertices();
    let mut used = vec![false; np];
    let mut chains: std::collections::BTreeMap<u32, Vec<u32>> = std::collections::BTreeMap::new();

    let mut order: Vec<u32> = (0..logical.n_vertices() as u32).collect();
    order.shuffle(rng);

    for &v in &order {
        let placed_neighbors: Vec<u32> = logical
            .neighbors(v)
            .iter()
            .copied()
            .filter(|u| chains.contains_key(u))
            .collect();

        if placed_neighbors.is_empty() {
            let free: Vec<u32> = (0..np as u32).filter(|&q| !used[q as usize]).collect();
            let &q = free.choose(rng)?;
            used[q as usize] = true;
            chains.insert(v, vec![q]);
            continue;
        }

        // BFS over free qubits from each neighbor chain
        let mut dists: Vec<Vec<u32>> = Vec::with_capacity(placed_neighbors.len());
        let mut parents: Vec<Vec<u32>> = Vec::with_capacity(placed_neighbors.len());
        for &u in &placed_neighbors {
            let mut dist = vec![u32::MAX; np];
            let mut parent = vec![u32::MAX; np];
            let mut queue = std::collections::VecDeque::new();
            for &cq in &chains[&u] {
                for &nb in chimera.neighbors(cq) {
                    if !used[nb as usize] && dist[nb as usize] == u32::MAX {
                        dist[nb as usize] = 1;
                        queue.push_back(nb);
                    }
                }
            }
            while let Some(q) = queue.pop_front() {
                for &nb in chimera.neighbors(q) {
                    if !used[nb as usize] && dist[nb as usize] == u32::MAX {
                        dist[nb as usize] = dist[q as usize] + 1;
                        parent[nb as usize] = q;
                        queue.push_back(nb);
                    }
                }
            }
            dists.push(dist);
            parents.push(parent);
        }

        // root qubit minimizing the total distance, reachable from all
        let mut best: Option<(u64, u32)> = None;
        for q in 0..np as u32 {
            if used[q as usize] {
                continue;
            }
            let mut cost = 0u64;
            let mut ok = true;
            for dist in &dists {
                let d = dist[q as usize];
                if d == u32::MAX {
                    ok = false;
                    break;
                }
                cost += d as u64;
            }
            if ok && best.map_or(true, |(c, _)| cost < c) {
                best = Some((cost, q));
            }
        }
        let (_, root) = best?;

        let mut chain = vec![root];
        used[root as usize] = true;
        for (k, _) in placed_neighbors.iter().enumerate() {
            // walk back toward the neighbor chain, claiming free qubits
            let mut q = root;
            loop {
                if dists[k][q as usize] == 1 {
                    break;
                }
                q = parents[k][q as usize];
                debug_assert_ne!(q, u32::MAX);
                if !used[q as usize] {
                    used[q as usize] = true;
                    chain.push(q);
                }
            }
        }
        chain.sort_unstable();
        chain.dedup();
        chains.insert(v, chain);
    }

    Some(Embedding { chains })
}

/// Seed-deterministic randomized embedding; None after the retry budget.
pub fn find_embedding(
    logical: &LogicalGraph,
    chimera: &ChimeraGraph,
    seed: u64,
) -> Option<Embedding> {
    if logical.n_vertices() > chimera.n_vertices() {
        return None;
    }
    for pass in 0..=RETRY_PASSES {
        let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(pass as u64)));
        if let Some(embedding) = attempt(logical, chimera, &mut rng) {
            debug_assert!(verify_embedding(logical, chimera, &embedding).is_ok());
            return Some(embedding);
        }
    }
    None
}

#[derive(Debug, Clone)]
pub struct BestOfK {
    pub embedding: Option<Embedding>,
    pub failed_attempts: usize,
}

/// Run k seeded attempts and keep the embedding with the fewest physical
/// qubits (attempt index breaks ties, so the result is seed-deterministic).
pub fn best_of_k(logical: &LogicalGraph, chimera: &ChimeraGraph, k: usize, seed: u64) -> BestOfK {
    assert!(k >= 1);
    let attempts: Vec<Option<Embedding>> = (0..k)
        .into_par_iter()
        .map(|i| find_embedding(logical, chimera, splitmix64(seed).wrapping_add(i as u64)))
        .collect();
    let failed_attempts = attempts.iter().filter(|a| a.is_none()).count();
    let embedding = attempts
        .into_iter()
        .flatten()
        .enumerate()
        .min_by_key(|(i, e)| (e.total_physical_qubits(), *i))
        .map(|(_, e)| e);
    BestOfK {
        embedding,
        failed_attempts,
    }
}

//! The Chimera hardware topology and minor embedding of quadratic models.

mod embed;
mod model;

pub use embed::{best_of_k, find_embedding, verify_embedding, BestOfK};
pub use model::{embed_model, EmbeddedModel};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::{Error, Result};

/// An M x N grid of K_{L,L} cells: side-0 qubits couple to the vertical
/// neighbors, side-1 qubits to the horizontal ones.
#[derive(Debug, Clone)]
pub struct ChimeraGraph {
    pub m: usize,
    pub n: usize,
    pub l: usize,
    adjacency: Vec<Vec<u32>>,
    n_edges: usize,
}

impl ChimeraGraph {
    pub fn n_vertices(&self) -> usize {
        2 * self.m * self.n * self.l
    }

    pub fn n_edges(&self) -> usize {
        self.n_edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adjacency[a as usize].binary_search(&b).is_ok()
    }

    /// Canonical vertex number of (row, col, side, k).
    pub fn vertex(&self, row: usize, col: usize, side: usize, k: usize) -> u32 {
        (((row * self.n + col) * 2 + side) * self.l + k) as u32
    }
}

/// Build the Chimera graph with M x N unit cells of shore size L.
pub fn build_chimera(m: usize, n: usize, l: usize) -> ChimeraGraph {
    assert!(m >= 1 && n >= 1 && l >= 1);
    let mut g = ChimeraGraph {
        m,
        n,
        l,
        adjacency: vec![Vec::new(); 2 * m * n * l],
        n_edges: 0,
    };
    let mut add = |g: &mut ChimeraGraph, a: u32, b: u32| {
        g.adjacency[a as usize].push(b);
        g.adjacency[b as usize].push(a);
        g.n_edges += 1;
    };
    for row in 0..m {
        for col in 0..n {
            // complete bipartite cell
            for k0 in 0..l {
                for k1 in 0..l {
                    let a = g.vertex(row, col, 0, k0);
                    let b = g.vertex(row, col, 1, k1);
                    add(&mut g, a, b);
                }
            }
            // vertical couplers on side 0
            if row + 1 < m {
                for k in 0..l {
                    let a = g.vertex(row, col, 0, k);
                    let b = g.vertex(row + 1, col, 0, k);
                    add(&mut g, a, b);
                }
            }
            // horizontal couplers on side 1
            if col + 1 < n {
                for k in 0..l {
                    let a = g.vertex(row, col, 1, k);
                    let b = g.vertex(row, col + 1, 1, k);
                    add(&mut g, a, b);
                }
            }
        }
    }
    for list in &mut g.adjacency {
        list.sort_unstable();
    }
    g
}

/// A simple undirected logical graph on vertices 0..n.
#[derive(Debug, Clone)]
pub struct LogicalGraph {
    n: usize,
    edges: Vec<(u32, u32)>,
    adjacency: Vec<Vec<u32>>,
}

impl LogicalGraph {
    pub fn new(n: usize, edge_list: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        let mut seen = std::collections::BTreeSet::new();
        for (a, b) in edge_list {
            if a as usize >= n || b as usize >= n {
                return Err(Error::ShapeMismatch(format!(
                    "edge ({a},{b}) out of range for {n} vertices"
                )));
            }
            if a == b {
                return Err(Error::ShapeMismatch(format!("self-loop on vertex {a}")));
            }
            let key = (a.min(b), a.max(b));
            if seen.insert(key) {
                edges.push(key);
                adjacency[a as usize].push(b);
                adjacency[b as usize].push(a);
            }
        }
        Ok(LogicalGraph { n, edges, adjacency })
    }

    /// Connectivity graph of a quadratic model: one vertex per variable, one
    /// edge per nonzero coupling.
    pub fn from_model(model: &crate::quad::QuadraticModel) -> Self {
        let edges: Vec<(u32, u32)> = model
            .quadratic
            .iter()
            .filter(|&(_, &v)| v != 0.0)
            .map(|(&k, _)| k)
            .collect();
        LogicalGraph::new(model.n_vars(), edges).expect("model indices are in range")
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adjacency[v as usize]
    }
}

/// Map logical variable -> chain of physical vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Embedding {
    pub chains: BTreeMap<u32, Vec<u32>>,
}

impl Embedding {
    pub fn total_physical_qubits(&self) -> usize {
        self.chains.values().map(|c| c.len()).sum()
    }

    pub fn max_chain_length(&self) -> usize {
        self.chains.values().map(|c| c.len()).max().unwrap_or(0)
    }
}

/// Dump: one `logical_var: q1 q2 ...` line per chain.
pub fn dump_embedding(embedding: &Embedding) -> String {
    let mut out = String::new();
    for (v, chain) in &embedding.chains {
        let qs: Vec<String> = chain.iter().map(|q| q.to_string()).collect();
        let _ = writeln!(out, "{v}: {}", qs.join(" "));
    }
    out
}

pub fn parse_embedding(text: &str) -> Result<Embedding> {
    let mut chains = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let (var, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::parse(lineno, "expected `logical_var: q1 q2 ...`".to_string()))?;
        let v: u32 = var
            .trim()
            .parse()
            .map_err(|_| Error::parse(lineno, format!("bad logical variable `{}`", var.trim())))?;
        let mut chain = Vec::new();
        for tok in rest.split_whitespace() {
            let q: u32 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad physical qubit `{tok}`")))?;
            chain.push(q);
        }
        if chain.is_empty() {
            return Err(Error::parse(lineno, format!("empty chain for variable {v}")));
        }
        if chains.insert(v, chain).is_some() {
            return Err(Error::parse(lineno, format!("duplicate chain for variable {v}")));
        }
    }
    Ok(Embedding { chains })
}

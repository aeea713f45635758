//! STO-3G integrals, restricted Hartree-Fock, and active-space reductions.

pub mod basis;
pub mod boys;
pub mod geometry;
mod hermite;
pub mod interchange;

mod active;
mod mo;
mod scf;

pub use active::{active_space, ActiveSpaceIntegrals};
pub use basis::{build_basis_functions, parse_basis, sto3g, BasisFunction, BasisSet};
pub use boys::{boys, boys_array};
pub use geometry::{parse_geometry, Geometry, LengthUnit, ANGSTROM_TO_BOHR};
pub use mo::{mo_transform, MoIntegrals};
pub use scf::{scf_rhf, ScfResult};

use crate::{Error, Result};
use nalgebra::DMatrix;

/// Dense rank-4 tensor of two-electron integrals in the physicist
/// convention <ij|kl>, flat index p*n^3 + q*n^2 + r*n + s.
#[derive(Debug, Clone, PartialEq)]
pub struct Eri {
    n: usize,
    data: Vec<f64>,
}

impl Eri {
    pub fn zeros(n: usize) -> Self {
        Eri {
            n,
            data: vec![0.0; n * n * n * n],
        }
    }

    pub fn from_flat(n: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != n * n * n * n {
            return Err(Error::ShapeMismatch(format!(
                "eri needs {} entries for n = {n}, got {}",
                n * n * n * n,
                data.len()
            )));
        }
        Ok(Eri { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, p: usize, q: usize, r: usize, s: usize) -> f64 {
        self.data[((p * self.n + q) * self.n + r) * self.n + s]
    }

    #[inline]
    pub fn set(&mut self, p: usize, q: usize, r: usize, s: usize, value: f64) {
        self.data[((p * self.n + q) * self.n + r) * self.n + s] = value;
    }
}

/// One- and two-particle integrals over the atomic-orbital basis.
#[derive(Debug, Clone)]
pub struct IntegralSet {
    pub n_spatial: usize,
    /// Overlap matrix.
    pub s: DMatrix<f64>,
    /// Kinetic-energy matrix.
    pub t: DMatrix<f64>,
    /// Nuclear-attraction matrix.
    pub v: DMatrix<f64>,
    /// Two-electron integrals, physicist convention.
    pub eri: Eri,
    pub nuclear_repulsion: f64,
}

impl IntegralSet {
    /// Core Hamiltonian T + V.
    pub fn core_hamiltonian(&self) -> DMatrix<f64> {
        &self.t + &self.v
    }
}

/// Compute all AO integrals for a geometry and basis.
///
/// Matrices are symmetric bit-for-bit and the ERI tensor carries the full
/// 8-fold permutation symmetry by construction: each unique quartet is
/// evaluated once and scattered to all symmetry partners.
pub fn integrals(geometry: &Geometry, basis: &BasisSet) -> Result<IntegralSet> {
    let funcs = build_basis_functions(geometry, basis)?;
    let n = funcs.len();

    let mut s = DMatrix::zeros(n, n);
    let mut t = DMatrix::zeros(n, n);
    let mut v = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let sij = hermite::overlap(&funcs[i], &funcs[j]);
            let tij = hermite::kinetic(&funcs[i], &funcs[j]);
            let vij = hermite::nuclear_attraction(&funcs[i], &funcs[j], geometry)?;
            s[(i, j)] = sij;
            s[(j, i)] = sij;
            t[(i, j)] = tij;
            t[(j, i)] = tij;
            v[(i, j)] = vij;
            v[(j, i)] = vij;
        }
    }

    // Chemist-convention quartets (ab|cd) over unique index combinations.
    let mut eri = Eri::zeros(n);
    let pair_index = |a: usize, b: usize| a * (a + 1) / 2 + b; // requires a >= b
    for a in 0..n {
        for b in 0..=a {
            for c in 0..n {
                for d in 0..=c {
                    if pair_index(a, b) < pair_index(c, d) {
                        continue;
                    }
                    let val = hermite::eri_chemist(&funcs[a], &funcs[b], &funcs[c], &funcs[d])?;
                    // (ab|cd) = <ac|bd> in physicist convention.
                    for &(p, q, r, w) in &[
                        (a, b, c, d),
                        (b, a, c, d),
                        (a, b, d, c),
                        (b, a, d, c),
                        (c, d, a, b),
                        (d, c, a, b),
                        (c, d, b, a),
                        (d, c, b, a),
                    ] {
                        eri.set(p, r, q, w, val);
                    }
                }
            }
        }
    }

    Ok(IntegralSet {
        n_spatial: n,
        s,
        t,
        v,
        eri,
        nuclear_repulsion: geometry.nuclear_repulsion()?,
    })
}

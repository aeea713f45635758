//! Frozen-core / active-space reduction of molecular-orbital integrals.

use nalgebra::DMatrix;

use super::{Eri, MoIntegrals};
use crate::{Error, Result};

/// Effective integrals over an active orbital window, with everything
/// frozen folded into `h` and `core_energy`.
#[derive(Debug, Clone)]
pub struct ActiveSpaceIntegrals {
    /// Spatial orbital indices retained, in the order used by `h` and `g`.
    pub active: Vec<usize>,
    /// Effective one-body matrix h'_pq over active orbitals.
    pub h: DMatrix<f64>,
    /// Two-body tensor over active orbitals, physicist convention.
    pub g: Eri,
    /// Nuclear repulsion plus frozen-orbital energy.
    pub core_energy: f64,
    pub n_active_electrons: usize,
}

impl ActiveSpaceIntegrals {
    pub fn n_spatial(&self) -> usize {
        self.active.len()
    }

    pub fn n_spin_orbitals(&self) -> usize {
        2 * self.active.len()
    }
}

/// Fold `frozen` doubly-occupied orbitals into an effective Hamiltonian on
/// `active`:
///
/// core = E_nuc + sum_f 2 h_ff + sum_{f,f'} (2<ff'|ff'> - <ff'|f'f>)
/// h'_pq = h_pq + sum_f (2<pf|qf> - <pf|fq>)
///
/// The pre-condition that frozen orbitals are doubly occupied in the
/// Hartree-Fock reference is checked against the aufbau window when
/// `n_electrons` is even.
pub fn active_space(
    mo: &MoIntegrals,
    nuclear_repulsion: f64,
    frozen: &[usize],
    active: &[usize],
    n_electrons: usize,
) -> Result<ActiveSpaceIntegrals> {
    let n = mo.n;
    for &f in frozen {
        if f >= n {
            return Err(Error::InvalidActiveSpace(format!("frozen index {f} out of range")));
        }
        if active.contains(&f) {
            return Err(Error::InvalidActiveSpace(format!(
                "orbital {f} is both frozen and active"
            )));
        }
    }
    for &a in active {
        if a >= n {
            return Err(Error::InvalidActiveSpace(format!("active index {a} out of range")));
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    for &a in frozen.iter().chain(active) {
        if !seen.insert(a) {
            return Err(Error::InvalidActiveSpace(format!("orbital {a} listed twice")));
        }
    }
    if n_electrons % 2 != 0 {
        return Err(Error::InvalidActiveSpace(format!(
            "odd electron count {n_electrons}"
        )));
    }
    let n_occ = n_electrons / 2;
    for &f in frozen {
        if f >= n_occ {
            return Err(Error::InvalidActiveSpace(format!(
                "frozen orbital {f} is not doubly occupied in the aufbau reference"
            )));
        }
    }
    if n_electrons < 2 * frozen.len() {
        return Err(Error::InvalidActiveSpace(format!(
            "{} frozen orbitals need {} electrons, only {n_electrons} present",
            frozen.len(),
            2 * frozen.len()
        )));
    }
    let n_active_electrons = n_electrons - 2 * frozen.len();
    if n_active_electrons > 2 * active.len() {
        return Err(Error::InvalidActiveSpace(format!(
            "{n_active_electrons} active electrons do not fit in {} active orbitals",
            active.len()
        )));
    }

    let mut core_energy = nuclear_repulsion;
    for &f in frozen {
        core_energy += 2.0 * mo.h[(f, f)];
        for &fp in frozen {
            core_energy += 2.0 * mo.g.get(f, fp, f, fp) - mo.g.get(f, fp, fp, f);
        }
    }

    let m = active.len();
    let mut h = DMatrix::zeros(m, m);
    for (pi, &p) in active.iter().enumerate() {
        for (qi, &q) in active.iter().enumerate() {
            let mut v = mo.h[(p, q)];
            for &f in frozen {
                v += 2.0 * mo.g.get(p, f, q, f) - mo.g.get(p, f, f, q);
            }
            h[(pi, qi)] = v;
        }
    }

    let mut g = Eri::zeros(m);
    for (pi, &p) in active.iter().enumerate() {
        for (qi, &q) in active.iter().enumerate() {
            for (ri, &r) in active.iter().enumerate() {
                for (si, &s) in active.iter().enumerate() {
                    g.set(pi, qi, ri, si, mo.g.get(p, q, r, s));
                }
            }
        }
    }

    Ok(ActiveSpaceIntegrals {
        active: active.to_vec(),
        h,
        g,
        core_energy,
        n_active_electrons,
    })
}

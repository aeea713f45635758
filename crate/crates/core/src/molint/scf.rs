//! Restricted Hartree-Fock with DIIS acceleration.

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector};

use super::IntegralSet;
use crate::{Error, Result};

const MAX_ITERATIONS: usize = 200;
const DIIS_SUBSPACE: usize = 8;
const ENERGY_TOL: f64 = 1e-10;
const DENSITY_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct ScfResult {
    /// Column p holds molecular orbital p, sorted by orbital energy.
    pub mo_coefficients: DMatrix<f64>,
    pub orbital_energies: DVector<f64>,
    pub e_hf_total: f64,
    pub e_electronic: f64,
    pub converged: bool,
    pub iterations: usize,
}

/// Symmetric eigendecomposition with eigenvalues sorted ascending.
pub(crate) fn sorted_symmetric_eigen(m: &DMatrix<f64>) -> (DVector<f64>, DMatrix<f64>) {
    let eig = m.clone().symmetric_eigen();
    let n = m.nrows();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].partial_cmp(&eig.eigenvalues[b]).unwrap());
    let mut vals = DVector::zeros(n);
    let mut vecs = DMatrix::zeros(n, n);
    for (k, &idx) in order.iter().enumerate() {
        vals[k] = eig.eigenvalues[idx];
        vecs.set_column(k, &eig.eigenvectors.column(idx));
    }
    (vals, vecs)
}

fn build_fock(ints: &IntegralSet, density: &DMatrix<f64>) -> DMatrix<f64> {
    let n = ints.n_spatial;
    let mut f = ints.core_hamiltonian();
    for p in 0..n {
        for q in 0..n {
            let mut g = 0.0;
            for r in 0..n {
                for s in 0..n {
                    // Coulomb <pr|qs> minus half exchange <pr|sq>
                    g += density[(r, s)]
                        * (ints.eri.get(p, r, q, s) - 0.5 * ints.eri.get(p, r, s, q));
                }
            }
            f[(p, q)] += g;
        }
    }
    f
}

fn density_from_orbitals(c: &DMatrix<f64>, n_occ: usize) -> DMatrix<f64> {
    let occ = c.columns(0, n_occ);
    2.0 * &occ * occ.transpose()
}

/// Solve the Roothaan equations for a closed-shell system.
///
/// Core-Hamiltonian initial guess, DIIS extrapolation on the orthonormalized
/// FDS - SDF residual. A run that fails to reach self-consistency within the
/// iteration cap is returned with `converged = false` rather than as an
/// error.
pub fn scf_rhf(ints: &IntegralSet, n_electrons: usize) -> Result<ScfResult> {
    let n = ints.n_spatial;
    if n_electrons % 2 != 0 {
        return Err(Error::Domain(format!(
            "restricted SCF needs an even electron count, got {n_electrons}"
        )));
    }
    if n_electrons > 2 * n {
        return Err(Error::Domain(format!(
            "{n_electrons} electrons do not fit in {n} spatial orbitals"
        )));
    }
    let n_occ = n_electrons / 2;

    // Symmetric orthogonalizer X = S^{-1/2}.
    let (s_vals, s_vecs) = sorted_symmetric_eigen(&ints.s);
    if s_vals[0] <= 1e-10 {
        return Err(Error::Domain(format!(
            "overlap matrix is not positive definite (min eigenvalue {})",
            s_vals[0]
        )));
    }
    let inv_sqrt = DMatrix::from_diagonal(&s_vals.map(|v| 1.0 / v.sqrt()));
    let x = &s_vecs * inv_sqrt * s_vecs.transpose();

    let diag_in_ortho = |f: &DMatrix<f64>| -> (DVector<f64>, DMatrix<f64>) {
        let f_ortho = x.transpose() * f * &x;
        let (vals, vecs) = sorted_symmetric_eigen(&f_ortho);
        (vals, &x * vecs)
    };

    let h = ints.core_hamiltonian();
    let (mut energies, mut c) = diag_in_ortho(&h);
    let mut density = density_from_orbitals(&c, n_occ);

    let mut diis: VecDeque<(DMatrix<f64>, DMatrix<f64>)> = VecDeque::new();
    let mut e_elec = 0.0;
    let mut converged = false;
    let mut iterations = 0;

    for iter in 1..=MAX_ITERATIONS {
        iterations = iter;
        let fock = build_fock(ints, &density);
        let e_new = 0.5 * (density.component_mul(&(&h + &fock))).sum();

        let residual = x.transpose() * (&fock * &density * &ints.s - &ints.s * &density * &fock) * &x;
        diis.push_back((fock.clone(), residual));
        if diis.len() > DIIS_SUBSPACE {
            diis.pop_front();
        }
        let fock_eff = diis_extrapolate(&diis).unwrap_or(fock);

        let (vals, vecs) = diag_in_ortho(&fock_eff);
        energies = vals;
        c = vecs;
        let density_new = density_from_orbitals(&c, n_occ);

        let delta_d = (&density_new - &density).map(|v| v * v).sum().sqrt() / n as f64;
        let delta_e = (e_new - e_elec).abs();
        density = density_new;
        e_elec = e_new;

        if iter > 1 && delta_e < ENERGY_TOL && delta_d < DENSITY_TOL {
            converged = true;
            break;
        }
    }

    Ok(ScfResult {
        mo_coefficients: c,
        orbital_energies: energies,
        e_electronic: e_elec,
        e_hf_total: e_elec + ints.nuclear_repulsion,
        converged,
        iterations,
    })
}

/// Pulay DIIS: minimize the norm of the extrapolated residual subject to
/// coefficients summing to one. Returns None while the subspace is trivial
/// or the system is singular.
fn diis_extrapolate(history: &VecDeque<(DMatrix<f64>, DMatrix<f64>)>) -> Option<DMatrix<f64>> {
    let k = history.len();
    if k < 2 {
        return None;
    }
    let mut b = DMatrix::zeros(k + 1, k + 1);
    for i in 0..k {
        for j in 0..k {
            b[(i, j)] = (history[i].1.transpose() * &history[j].1).trace();
        }
        b[(i, k)] = -1.0;
        b[(k, i)] = -1.0;
    }
    let mut rhs = DVector::zeros(k + 1);
    rhs[k] = -1.0;
    let coeffs = b.lu().solve(&rhs)?;
    if coeffs.iter().any(|v| !v.is_finite()) {
        return None;
    }
    let mut f = DMatrix::zeros(history[0].0.nrows(), history[0].0.ncols());
    for i in 0..k {
        f += coeffs[i] * &history[i].0;
    }
    Some(f)
}

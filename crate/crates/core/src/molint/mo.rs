//! Four-index transformation from the atomic-orbital to the molecular-orbital basis.

use nalgebra::DMatrix;

use super::{Eri, IntegralSet};
use crate::{Error, Result};

/// Core Hamiltonian and two-electron integrals over molecular orbitals,
/// physicist convention.
#[derive(Debug, Clone)]
pub struct MoIntegrals {
    pub n: usize,
    pub h: DMatrix<f64>,
    pub g: Eri,
}

/// Transform the integral set with an S-orthonormal coefficient matrix
/// (columns are orbitals). The two-electron transform is staged one index
/// at a time.
pub fn mo_transform(ints: &IntegralSet, c: &DMatrix<f64>) -> Result<MoIntegrals> {
    let n = ints.n_spatial;
    if c.nrows() != n || c.ncols() != n {
        return Err(Error::ShapeMismatch(format!(
            "coefficient matrix is {}x{}, integrals have n = {n}",
            c.nrows(),
            c.ncols()
        )));
    }

    let h = c.transpose() * ints.core_hamiltonian() * c;

    // One quarter transform per index of <ij|kl>.
    let mut current = ints.eri.clone();
    for axis in 0..4 {
        let mut next = Eri::zeros(n);
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    for s in 0..n {
                        let mut acc = 0.0;
                        for m in 0..n {
                            let contrib = match axis {
                                0 => c[(m, p)] * current.get(m, q, r, s),
                                1 => c[(m, q)] * current.get(p, m, r, s),
                                2 => c[(m, r)] * current.get(p, q, m, s),
                                _ => c[(m, s)] * current.get(p, q, r, m),
                            };
                            acc += contrib;
                        }
                        next.set(p, q, r, s, acc);
                    }
                }
            }
        }
        current = next;
    }

    Ok(MoIntegrals { n, h, g: current })
}

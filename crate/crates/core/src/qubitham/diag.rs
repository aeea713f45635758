//! Dense exact diagonalization of qubit Hamiltonians.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::pauli::{Pauli, QubitHamiltonian};
use crate::{Error, Result};

/// Desk-scale bound for the dense eigensolver.
pub const MAX_DENSE_QUBITS: usize = 14;

/// Real and imaginary parts of the Hamiltonian matrix. A Pauli string is a
/// signed permutation, so each term touches one entry per column.
fn dense_parts(h: &QubitHamiltonian) -> (DMatrix<f64>, Option<DMatrix<f64>>) {
    let dim = 1usize << h.n_qubits();
    let mut re = DMatrix::zeros(dim, dim);
    let mut im: Option<DMatrix<f64>> = None;
    for (factors, coeff) in h.terms() {
        let n_y = factors.values().filter(|&&p| p == Pauli::Y).count();
        if n_y % 2 == 1 && im.is_none() {
            im = Some(DMatrix::zeros(dim, dim));
        }
        for col in 0..dim {
            let mut row = col;
            let mut re_part = *coeff;
            let mut im_part = 0.0;
            for (&q, &p) in factors {
                let bit = (row >> q) & 1;
                match p {
                    Pauli::X => row ^= 1 << q,
                    Pauli::Y => {
                        // multiply by i (bit 0) or -i (bit 1)
                        let (a, b) = (re_part, im_part);
                        if bit == 0 {
                            re_part = -b;
                            im_part = a;
                        } else {
                            re_part = b;
                            im_part = -a;
                        }
                        row ^= 1 << q;
                    }
                    Pauli::Z => {
                        if bit == 1 {
                            re_part = -re_part;
                            im_part = -im_part;
                        }
                    }
                }
            }
            re[(row, col)] += re_part;
            if im_part != 0.0 {
                im.as_mut().expect("imaginary plane allocated")[(row, col)] += im_part;
            }
        }
    }
    (re, im)
}

/// Lowest eigenvalue and a normalized ground-state vector.
///
/// Purely real Hamiltonians (even Y count in every term) use a real
/// symmetric solve of dimension 2^n; the general Hermitian case goes through
/// the real embedding [[A, -B], [B, A]] of A + iB.
pub fn exact_diagonalize(h: &QubitHamiltonian) -> Result<(f64, Vec<Complex64>)> {
    let n = h.n_qubits();
    if n > MAX_DENSE_QUBITS {
        return Err(Error::TooManyQubits {
            n,
            max: MAX_DENSE_QUBITS,
        });
    }
    let dim = 1usize << n;
    let (re, im) = dense_parts(h);
    match im {
        None => {
            let eig = re.symmetric_eigen();
            let mut best = 0;
            for k in 1..dim {
                if eig.eigenvalues[k] < eig.eigenvalues[best] {
                    best = k;
                }
            }
            let v = eig.eigenvectors.column(best);
            let norm = v.norm();
            let state = v.iter().map(|&x| Complex64::new(x / norm, 0.0)).collect();
            Ok((eig.eigenvalues[best], state))
        }
        Some(im) => {
            let mut embedded = DMatrix::zeros(2 * dim, 2 * dim);
            embedded.view_mut((0, 0), (dim, dim)).copy_from(&re);
            embedded.view_mut((dim, dim), (dim, dim)).copy_from(&re);
            embedded.view_mut((0, dim), (dim, dim)).copy_from(&(-&im));
            embedded.view_mut((dim, 0), (dim, dim)).copy_from(&im);
            let eig = embedded.symmetric_eigen();
            let mut best = 0;
            for k in 1..2 * dim {
                if eig.eigenvalues[k] < eig.eigenvalues[best] {
                    best = k;
                }
            }
            let v = eig.eigenvectors.column(best);
            let mut state: Vec<Complex64> = (0..dim)
                .map(|k| Complex64::new(v[k], v[dim + k]))
                .collect();
            let norm: f64 = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            for z in &mut state {
                *z /= norm;
            }
            Ok((eig.eigenvalues[best], state))
        }
    }
}

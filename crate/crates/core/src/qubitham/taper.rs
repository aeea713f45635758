//! Removal of qubits that appear only through Z operators.
//!
//! Such qubits commute with the Hamiltonian qubit-wise; in the sector of a
//! chosen reference state each Z is a number, so the qubit can be replaced
//! by its eigenvalue and dropped.

use super::pauli::{FactorMap, Pauli, QubitHamiltonian, ReferenceState};
use crate::{Error, Result};

/// Replace Z on the given qubits by their eigenvalue in `reference` and
/// compact the remaining indices. Errors if a requested qubit has X or Y
/// support anywhere.
pub fn taper_qubits(
    h: &QubitHamiltonian,
    reference: &ReferenceState,
    qubits: &[usize],
) -> Result<(QubitHamiltonian, Vec<(usize, i8)>)> {
    for (factors, _) in h.terms() {
        for (&q, &p) in factors {
            if qubits.contains(&q) && p != Pauli::Z {
                return Err(Error::NotTaperable(q));
            }
        }
    }
    let removed: Vec<(usize, i8)> = qubits
        .iter()
        .map(|&q| (q, if reference.bits[q] { -1 } else { 1 }))
        .collect();

    // old index -> new index for survivors
    let n = h.n_qubits();
    let mut relabel = vec![usize::MAX; n];
    let mut next = 0usize;
    for q in 0..n {
        if !qubits.contains(&q) {
            relabel[q] = next;
            next += 1;
        }
    }

    let mut terms = Vec::new();
    for (factors, coeff) in h.terms() {
        let mut c = *coeff;
        let mut new_factors = FactorMap::new();
        for (&q, &p) in factors {
            match removed.iter().find(|&&(rq, _)| rq == q) {
                Some(&(_, eig)) => c *= eig as f64,
                None => {
                    new_factors.insert(relabel[q], p);
                }
            }
        }
        terms.push((new_factors, c));
    }
    let tapered = QubitHamiltonian::collect_real(next, terms)?;
    Ok((tapered, removed))
}

/// Find every qubit acting only via Z (or not at all) and taper it against
/// the reference state.
pub fn taper_fixed_qubits(
    h: &QubitHamiltonian,
    reference: &ReferenceState,
) -> Result<(QubitHamiltonian, Vec<(usize, i8)>)> {
    let n = h.n_qubits();
    let mut z_only = vec![true; n];
    for (factors, _) in h.terms() {
        for (&q, &p) in factors {
            if p != Pauli::Z {
                z_only[q] = false;
            }
        }
    }
    let candidates: Vec<usize> = (0..n).filter(|&q| z_only[q]).collect();
    taper_qubits(h, reference, &candidates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubitham::pauli::FactorMap;

    #[test]
    fn all_x_hamiltonian_unchanged() {
        let h = QubitHamiltonian::collect_real(
            2,
            [
                (FactorMap::from([(0, Pauli::X)]), 1.0),
                (FactorMap::from([(1, Pauli::X)]), 0.5),
            ],
        )
        .unwrap();
        let reference = ReferenceState { bits: vec![false, false] };
        let (tapered, removed) = taper_fixed_qubits(&h, &reference).unwrap();
        assert!(removed.is_empty());
        assert_eq!(tapered, h);
    }

    #[test]
    fn z_only_qubit_replaced_by_eigenvalue() {
        // H = 0.5 Z0 + 0.25 Z0 Z1 + 0.1 X1 with qubit 0 Z-only
        let h = QubitHamiltonian::collect_real(
            2,
            [
                (FactorMap::from([(0, Pauli::Z)]), 0.5),
                (FactorMap::from([(0, Pauli::Z), (1, Pauli::Z)]), 0.25),
                (FactorMap::from([(1, Pauli::X)]), 0.1),
            ],
        )
        .unwrap();
        let reference = ReferenceState { bits: vec![true, false] };
        let (tapered, removed) = taper_fixed_qubits(&h, &reference).unwrap();
        assert_eq!(removed, vec![(0, -1)]);
        assert_eq!(tapered.n_qubits(), 1);
        // -0.5 I - 0.25 Z0 + 0.1 X0 after relabeling
        assert!((tapered.identity_coefficient() + 0.5).abs() < 1e-14);
        assert_eq!(tapered.n_terms(), 3);
    }

    #[test]
    fn explicit_taper_of_xy_qubit_is_an_error() {
        let h = QubitHamiltonian::collect_real(1, [(FactorMap::from([(0, Pauli::X)]), 1.0)])
            .unwrap();
        let reference = ReferenceState { bits: vec![false] };
        assert!(matches!(
            taper_qubits(&h, &reference, &[0]),
            Err(Error::NotTaperable(0))
        ));
    }
}

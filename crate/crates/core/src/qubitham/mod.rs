//! Second quantization, fermion-to-qubit encodings, qubit tapering, and the
//! exact-diagonalization reference.

mod diag;
mod encodings;
mod fermion;
mod format;
mod pauli;
mod taper;

pub use diag::{exact_diagonalize, MAX_DENSE_QUBITS};
pub use encodings::{bravyi_kitaev, encode, hf_reference, jordan_wigner, Encoding};
pub use fermion::{build_fermionic, FermionOperator, Ladder};
pub use format::{dump_hamiltonian, parse_hamiltonian};
pub use pauli::{
    mul_factor_maps, pauli_product, FactorMap, Pauli, PauliTerm, QubitHamiltonian, ReferenceState,
};
pub use taper::{taper_fixed_qubits, taper_qubits};

#[cfg(test)]
mod h2_tests {
    use super::*;
    use crate::molint::{self, ActiveSpaceIntegrals};

    fn h2_problem(bond: f64) -> (ActiveSpaceIntegrals, f64) {
        let ints = molint::integrals(&molint::geometry::h2(bond), &molint::sto3g()).unwrap();
        let scf = molint::scf_rhf(&ints, 2).unwrap();
        let mo = molint::mo_transform(&ints, &scf.mo_coefficients).unwrap();
        let act = molint::active_space(&mo, ints.nuclear_repulsion, &[], &[0, 1], 2).unwrap();
        (act, scf.e_hf_total)
    }

    fn factors_of(spec: &[(usize, Pauli)]) -> FactorMap {
        spec.iter().copied().collect()
    }

    #[test]
    fn h2_bk_has_the_fifteen_term_structure() {
        let (problem, _) = h2_problem(1.4011);
        let op = build_fermionic(&problem).unwrap();
        let h = bravyi_kitaev(&op).unwrap();
        assert_eq!(h.n_qubits(), 4);
        assert_eq!(h.n_terms(), 15);

        use Pauli::*;
        let expected: Vec<FactorMap> = vec![
            factors_of(&[]),
            factors_of(&[(0, Z), (2, Z), (3, Z)]),
            factors_of(&[(0, Z), (2, Z)]),
            factors_of(&[(2, Z)]),
            factors_of(&[(0, Y), (1, Z), (2, Y), (3, Z)]),
            factors_of(&[(0, Z), (1, Z), (2, Z)]),
            factors_of(&[(0, Z), (1, Z)]),
            factors_of(&[(1, Z), (3, Z)]),
            factors_of(&[(1, Z), (2, Z), (3, Z)]),
            factors_of(&[(0, Z), (1, Z), (2, Z), (3, Z)]),
            factors_of(&[(1, Z)]),
            factors_of(&[(0, Z)]),
            factors_of(&[(0, X), (1, Z), (2, X)]),
            factors_of(&[(0, X), (1, Z), (2, X), (3, Z)]),
            factors_of(&[(0, Y), (1, Z), (2, Y)]),
        ];
        for want in &expected {
            assert!(
                h.terms().iter().any(|(f, _)| f == want),
                "missing term {}",
                super::pauli::format_factors(want)
            );
        }
        // XZX and YZY pairs share coefficients for real orbitals
        let coeff = |f: &FactorMap| h.terms().iter().find(|(g, _)| g == f).unwrap().1;
        assert!(
            (coeff(&factors_of(&[(0, X), (1, Z), (2, X)]))
                - coeff(&factors_of(&[(0, Y), (1, Z), (2, Y)])))
            .abs()
                < 1e-10
        );
        assert!(
            (coeff(&factors_of(&[(0, X), (1, Z), (2, X), (3, Z)]))
                - coeff(&factors_of(&[(0, Y), (1, Z), (2, Y), (3, Z)])))
            .abs()
                < 1e-10
        );
    }

    #[test]
    fn h2_taper_removes_qubits_one_and_three() {
        let (problem, _) = h2_problem(1.4011);
        let h = bravyi_kitaev(&build_fermionic(&problem).unwrap()).unwrap();
        let reference = hf_reference(Encoding::BravyiKitaev, 4, 2).unwrap();
        let (tapered, removed) = taper_fixed_qubits(&h, &reference).unwrap();
        let removed_qubits: Vec<usize> = removed.iter().map(|&(q, _)| q).collect();
        assert_eq!(removed_qubits, vec![1, 3]);
        assert_eq!(tapered.n_qubits(), 2);
        // the reduced form: I, Z0, Z1, Z0Z1, X0X1, Y0Y1 with equal XX/YY
        use Pauli::*;
        assert_eq!(tapered.n_terms(), 6);
        let coeff = |f: &FactorMap| tapered.terms().iter().find(|(g, _)| g == f).map(|t| t.1);
        let xx = coeff(&factors_of(&[(0, X), (1, X)])).unwrap();
        let yy = coeff(&factors_of(&[(0, Y), (1, Y)])).unwrap();
        assert!((xx - yy).abs() < 1e-12);

        // ground energy unchanged by tapering in the reference sector
        let (e_full, _) = exact_diagonalize(&h).unwrap();
        let (e_tapered, _) = exact_diagonalize(&tapered).unwrap();
        assert!((e_full - e_tapered).abs() < 1e-10);
    }

    #[test]
    fn hf_expectation_matches_scf_energy() {
        for bond in [1.0, 1.4011, 2.2] {
            let (problem, e_hf) = h2_problem(bond);
            let h = bravyi_kitaev(&build_fermionic(&problem).unwrap()).unwrap();
            let reference = hf_reference(Encoding::BravyiKitaev, 4, 2).unwrap();
            let diag = h.diagonal_expectation(&reference);
            assert!(
                (diag - e_hf).abs() < 1e-6,
                "bond {bond}: <ref|H|ref> = {diag}, E_HF = {e_hf}"
            );
        }
    }

    #[test]
    fn h2_fci_energy_at_equilibrium() {
        let bond = 0.7414 * molint::ANGSTROM_TO_BOHR;
        let (problem, e_hf) = h2_problem(bond);
        let h = bravyi_kitaev(&build_fermionic(&problem).unwrap()).unwrap();
        let (e_fci, _) = exact_diagonalize(&h).unwrap();
        assert!((e_fci - (-1.1373)).abs() < 2e-4, "E_FCI = {e_fci}");
        // variational chain
        assert!(e_fci <= e_hf + 1e-9);
        // encodings agree on the spectrum bottom
        let h_jw = jordan_wigner(&build_fermionic(&problem).unwrap()).unwrap();
        let (e_jw, _) = exact_diagonalize(&h_jw).unwrap();
        assert!((e_fci - e_jw).abs() < 1e-9);
    }
}

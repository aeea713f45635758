//! Jordan-Wigner and Bravyi-Kitaev fermion-to-qubit encodings.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::fermion::FermionOperator;
use super::pauli::{mul_factor_maps, FactorMap, Pauli, QubitHamiltonian, ReferenceState};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Encoding {
    JordanWigner,
    BravyiKitaev,
}

impl std::str::FromStr for Encoding {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "jw" | "jordan-wigner" => Ok(Encoding::JordanWigner),
            "bk" | "bravyi-kitaev" => Ok(Encoding::BravyiKitaev),
            other => Err(Error::Domain(format!("unknown encoding `{other}`"))),
        }
    }
}

/// Expand a fermionic operator through a ladder-to-strings rule and collect.
fn map_operator(
    op: &FermionOperator,
    ladder: impl Fn(usize, bool) -> Vec<(FactorMap, Complex64)>,
) -> Result<QubitHamiltonian> {
    let mut collected: BTreeMap<FactorMap, Complex64> = BTreeMap::new();
    for (ladders, coeff) in &op.terms {
        let mut strings: Vec<(FactorMap, Complex64)> = vec![(FactorMap::new(), *coeff)];
        for &(mode, raise) in ladders {
            let pieces = ladder(mode, raise);
            let mut next = Vec::with_capacity(strings.len() * pieces.len());
            for (s, c) in &strings {
                for (piece, pc) in &pieces {
                    let (prod, phase) = mul_factor_maps(s, piece);
                    next.push((prod, c * pc * phase));
                }
            }
            strings = next;
        }
        for (s, c) in strings {
            *collected.entry(s).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
    }
    QubitHamiltonian::collect_complex(op.n_modes, collected)
}

/// Jordan-Wigner: a_p -> (X_p + iY_p)/2 with a Z string on modes below p.
pub fn jordan_wigner(op: &FermionOperator) -> Result<QubitHamiltonian> {
    let rule = |mode: usize, raise: bool| {
        let z_string: FactorMap = (0..mode).map(|q| (q, Pauli::Z)).collect();
        let mut with_x = z_string.clone();
        with_x.insert(mode, Pauli::X);
        let mut with_y = z_string;
        with_y.insert(mode, Pauli::Y);
        let y_coeff = if raise {
            Complex64::new(0.0, -0.5)
        } else {
            Complex64::new(0.0, 0.5)
        };
        vec![(with_x, Complex64::new(0.5, 0.0)), (with_y, y_coeff)]
    };
    map_operator(op, rule)
}

// Bravyi-Kitaev index sets, phrased through the classic 1-based Fenwick
// ranges: node J stores the occupation parity of modes (J - lowbit(J), J].

fn lowbit(j: usize) -> usize {
    j & j.wrapping_neg()
}

/// Qubits that store mode j and must flip with it (ancestors of j).
pub(crate) fn update_set(j: usize, n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut node = j + 1;
    node += lowbit(node);
    while node <= n {
        out.push(node - 1);
        node += lowbit(node);
    }
    out
}

/// Qubits whose XOR is the occupation parity of modes 0..j.
pub(crate) fn parity_set(j: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut node = j;
    while node > 0 {
        out.push(node - 1);
        node -= lowbit(node);
    }
    out
}

/// Children of qubit j: their XOR together with mode j gives the stored bit.
pub(crate) fn flip_set(j: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let node = j + 1;
    let mut step = 1;
    while step < lowbit(node) {
        out.push(node - step - 1);
        step <<= 1;
    }
    out
}

/// Bravyi-Kitaev: a_p -> X on the update set and (X_p Z_parity -+ i Y_p Z_rho)/2
/// with rho = parity \ flip.
pub fn bravyi_kitaev(op: &FermionOperator) -> Result<QubitHamiltonian> {
    let n = op.n_modes;
    let rule = move |mode: usize, raise: bool| {
        let update = update_set(mode, n);
        let parity = parity_set(mode);
        let flip = flip_set(mode);
        let rho: Vec<usize> = parity.iter().copied().filter(|q| !flip.contains(q)).collect();

        let mut with_x: FactorMap = update.iter().map(|&q| (q, Pauli::X)).collect();
        for &q in &parity {
            with_x.insert(q, Pauli::Z);
        }
        with_x.insert(mode, Pauli::X);

        let mut with_y: FactorMap = update.iter().map(|&q| (q, Pauli::X)).collect();
        for &q in &rho {
            with_y.insert(q, Pauli::Z);
        }
        with_y.insert(mode, Pauli::Y);

        let y_coeff = if raise {
            Complex64::new(0.0, -0.5)
        } else {
            Complex64::new(0.0, 0.5)
        };
        vec![(with_x, Complex64::new(0.5, 0.0)), (with_y, y_coeff)]
    };
    map_operator(op, rule)
}

pub fn encode(op: &FermionOperator, encoding: Encoding) -> Result<QubitHamiltonian> {
    match encoding {
        Encoding::JordanWigner => jordan_wigner(op),
        Encoding::BravyiKitaev => bravyi_kitaev(op),
    }
}

/// The Hartree-Fock reference as a computational-basis state in the chosen
/// encoding: aufbau occupation bits, pushed through the Bravyi-Kitaev
/// encoding matrix (mod 2) when applicable.
pub fn hf_reference(encoding: Encoding, n_modes: usize, n_electrons: usize) -> Result<ReferenceState> {
    if n_electrons > n_modes {
        return Err(Error::Domain(format!(
            "{n_electrons} electrons in {n_modes} modes"
        )));
    }
    let occupation: Vec<bool> = (0..n_modes).map(|m| m < n_electrons).collect();
    let bits = match encoding {
        Encoding::JordanWigner => occupation,
        Encoding::BravyiKitaev => (0..n_modes)
            .map(|i| {
                let node = i + 1;
                let lo = node - lowbit(node);
                occupation[lo..node].iter().fold(false, |acc, &b| acc ^ b)
            })
            .collect(),
    };
    Ok(ReferenceState { bits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qubitham::fermion::tests::dense_fermion_matrix;
    use nalgebra::DMatrix;

    /// Dense matrix of a qubit Hamiltonian, built from per-qubit bit action;
    /// independent of the crate's diagonalization path. Test-only oracle.
    fn dense_pauli_matrix(h: &QubitHamiltonian) -> DMatrix<Complex64> {
        let dim = 1usize << h.n_qubits();
        let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
        for (factors, coeff) in h.terms() {
            for col in 0..dim {
                let mut row = col;
                let mut phase = Complex64::new(*coeff, 0.0);
                for (&q, &p) in factors {
                    let bit = (row >> q) & 1;
                    match p {
                        Pauli::X => row ^= 1 << q,
                        Pauli::Y => {
                            phase *= if bit == 0 {
                                Complex64::new(0.0, 1.0)
                            } else {
                                Complex64::new(0.0, -1.0)
                            };
                            row ^= 1 << q;
                        }
                        Pauli::Z => {
                            if bit == 1 {
                                phase = -phase;
                            }
                        }
                    }
                }
                m[(row, col)] += phase;
            }
        }
        m
    }

    fn number_operator(n_modes: usize, mode: usize) -> FermionOperator {
        let mut op = FermionOperator::new(n_modes);
        op.add(vec![(mode, true), (mode, false)], Complex64::new(1.0, 0.0));
        op
    }

    #[test]
    fn jw_number_operator_is_half_one_minus_z() {
        let h = jordan_wigner(&number_operator(1, 0)).unwrap();
        assert_eq!(h.n_terms(), 2);
        assert!((h.identity_coefficient() - 0.5).abs() < 1e-14);
        let z_coeff = h
            .terms()
            .iter()
            .find(|(f, _)| f.get(&0) == Some(&Pauli::Z))
            .unwrap()
            .1;
        assert!((z_coeff + 0.5).abs() < 1e-14);
    }

    #[test]
    fn jw_hopping_is_xx_plus_yy_over_two() {
        let mut op = FermionOperator::new(2);
        op.add(vec![(0, true), (1, false)], Complex64::new(1.0, 0.0));
        op.add(vec![(1, true), (0, false)], Complex64::new(1.0, 0.0));
        let h = jordan_wigner(&op).unwrap();
        let qubit = dense_pauli_matrix(&h);
        let ferm = dense_fermion_matrix(&op);
        for i in 0..4 {
            for j in 0..4 {
                assert!((qubit[(i, j)] - ferm[(i, j)]).norm() < 1e-13);
            }
        }
        assert_eq!(h.n_terms(), 2);
        for (f, c) in h.terms() {
            assert_eq!(f.len(), 2);
            assert!((c - 0.5).abs() < 1e-14);
        }
    }

    #[test]
    fn jw_reproduces_ladder_matrices_up_to_4_modes() {
        // random-ish Hermitian combinations of ladder products
        let mut op = FermionOperator::new(4);
        op.add(vec![(2, true), (0, false)], Complex64::new(0.7, 0.0));
        op.add(vec![(0, true), (2, false)], Complex64::new(0.7, 0.0));
        op.add(
            vec![(3, true), (1, true), (0, false), (2, false)],
            Complex64::new(-0.4, 0.0),
        );
        op.add(
            vec![(2, true), (0, true), (1, false), (3, false)],
            Complex64::new(-0.4, 0.0),
        );
        op.add(vec![(1, true), (1, false)], Complex64::new(0.9, 0.0));
        let h = jordan_wigner(&op).unwrap();
        let qubit = dense_pauli_matrix(&h);
        let ferm = dense_fermion_matrix(&op);
        for i in 0..16 {
            for j in 0..16 {
                assert!((qubit[(i, j)] - ferm[(i, j)]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn jw_canonical_anticommutators() {
        // {a_i, a_j^dag} = delta_ij as matrices, via the mapped strings
        let n = 3;
        for i in 0..n {
            for j in 0..n {
                let mut ai = FermionOperator::new(n);
                ai.add(vec![(i, false)], Complex64::new(1.0, 0.0));
                let mut ajd = FermionOperator::new(n);
                ajd.add(vec![(j, true)], Complex64::new(1.0, 0.0));
                // build matrices of the raw (non-Hermitian) ladder maps via
                // the complex-collected string expansion; use dense oracle
                let m_ai = dense_fermion_matrix(&ai);
                let m_ajd = dense_fermion_matrix(&ajd);
                let anti = &m_ai * &m_ajd + &m_ajd * &m_ai;
                for r in 0..8 {
                    for c in 0..8 {
                        let want = if r == c && i == j { 1.0 } else { 0.0 };
                        assert!((anti[(r, c)] - Complex64::new(want, 0.0)).norm() < 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn bk_equals_jw_for_one_mode() {
        let h_jw = jordan_wigner(&number_operator(1, 0)).unwrap();
        let h_bk = bravyi_kitaev(&number_operator(1, 0)).unwrap();
        assert_eq!(h_jw, h_bk);
    }

    #[test]
    fn bk_matrix_is_base_change_of_jw_matrix() {
        // The BK operator equals the fermionic operator conjugated by the
        // encoding permutation |x> -> |Ax>.
        let n = 4usize;
        let mut op = FermionOperator::new(n);
        op.add(vec![(2, true), (0, false)], Complex64::new(0.6, 0.0));
        op.add(vec![(0, true), (2, false)], Complex64::new(0.6, 0.0));
        op.add(vec![(3, true), (3, false)], Complex64::new(-1.1, 0.0));
        op.add(
            vec![(3, true), (2, true), (1, false), (0, false)],
            Complex64::new(0.25, 0.0),
        );
        op.add(
            vec![(0, true), (1, true), (2, false), (3, false)],
            Complex64::new(0.25, 0.0),
        );
        let h_bk = bravyi_kitaev(&op).unwrap();
        let m_bk = dense_pauli_matrix(&h_bk);
        let m_ferm = dense_fermion_matrix(&op);

        // encode occupation index x -> BK index
        let encode_index = |x: usize| -> usize {
            let mut out = 0usize;
            for i in 0..n {
                let node = i + 1;
                let lo = node - super::lowbit(node);
                let mut parity = 0usize;
                for k in lo..node {
                    parity ^= (x >> k) & 1;
                }
                out |= parity << i;
            }
            out
        };
        let dim = 1 << n;
        for x in 0..dim {
            for y in 0..dim {
                let lhs = m_bk[(encode_index(x), encode_index(y))];
                let rhs = m_ferm[(x, y)];
                assert!((lhs - rhs).norm() < 1e-12, "({x},{y})");
            }
        }
    }

    #[test]
    fn bk_and_jw_isospectral_on_random_three_mode_operators() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for _ in 0..6 {
            let mut op = FermionOperator::new(3);
            for _ in 0..4 {
                let i = rng.gen_range(0..3);
                let j = rng.gen_range(0..3);
                let c: f64 = rng.gen_range(-1.0..1.0);
                op.add(vec![(i, true), (j, false)], Complex64::new(c, 0.0));
                op.add(vec![(j, true), (i, false)], Complex64::new(c, 0.0));
            }
            let m_jw = dense_pauli_matrix(&jordan_wigner(&op).unwrap());
            let m_bk = dense_pauli_matrix(&bravyi_kitaev(&op).unwrap());
            let spec = |m: &DMatrix<Complex64>| {
                let real = m.map(|z| z.re);
                let mut vals: Vec<f64> = real.symmetric_eigen().eigenvalues.iter().copied().collect();
                vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
                vals
            };
            // these operators are real symmetric matrices in both encodings
            assert!(m_jw.iter().all(|z| z.im.abs() < 1e-12));
            assert!(m_bk.iter().all(|z| z.im.abs() < 1e-12));
            let (s1, s2) = (spec(&m_jw), spec(&m_bk));
            for (a, b) in s1.iter().zip(&s2) {
                assert!((a - b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn hf_reference_bits() {
        let jw = hf_reference(Encoding::JordanWigner, 4, 2).unwrap();
        assert_eq!(jw.bits, vec![true, true, false, false]);
        let bk1 = hf_reference(Encoding::BravyiKitaev, 1, 1).unwrap();
        assert_eq!(bk1.bits, vec![true]);
        // H2: occupation 1100 encodes to 1000
        let bk = hf_reference(Encoding::BravyiKitaev, 4, 2).unwrap();
        assert_eq!(bk.bits, vec![true, false, false, false]);
        assert!(hf_reference(Encoding::JordanWigner, 2, 3).is_err());
    }

    #[test]
    fn fenwick_sets_match_hand_values() {
        // n = 8 examples worked out from the Fenwick ranges
        assert_eq!(parity_set(3), vec![2, 1]);
        assert_eq!(flip_set(3), vec![2, 1]);
        assert_eq!(update_set(3, 8), vec![7]);
        assert_eq!(parity_set(4), vec![3]);
        assert_eq!(flip_set(4), Vec::<usize>::new());
        assert_eq!(update_set(4, 8), vec![5, 7]);
        assert_eq!(parity_set(7), vec![6, 5, 3]);
        assert_eq!(flip_set(7), vec![6, 5, 3]);
        assert_eq!(update_set(7, 8), Vec::<usize>::new());
    }
}

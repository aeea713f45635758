//! Second-quantized fermionic operators over spin orbitals.

use num_complex::Complex64;

use crate::molint::ActiveSpaceIntegrals;
use crate::{Error, Result};

/// One ladder factor: (mode index, raising flag).
pub type Ladder = (usize, bool);

/// A sum of ladder-operator products with complex coefficients.
#[derive(Debug, Clone, Default)]
pub struct FermionOperator {
    pub n_modes: usize,
    pub terms: Vec<(Vec<Ladder>, Complex64)>,
}

impl FermionOperator {
    pub fn new(n_modes: usize) -> Self {
        FermionOperator {
            n_modes,
            terms: Vec::new(),
        }
    }

    pub fn add(&mut self, ladders: Vec<Ladder>, coefficient: Complex64) {
        debug_assert!(ladders.iter().all(|&(m, _)| m < self.n_modes));
        self.terms.push((ladders, coefficient));
    }

    pub fn constant(&mut self, value: f64) {
        self.terms.push((Vec::new(), Complex64::new(value, 0.0)));
    }
}

/// Spin of an interleaved spin orbital: spatial p maps to 2p (alpha) and
/// 2p + 1 (beta).
#[inline]
fn spin(so: usize) -> usize {
    so % 2
}

#[inline]
fn spatial(so: usize) -> usize {
    so / 2
}

/// Build the second-quantized Hamiltonian from effective integrals:
///
/// H = core * 1 + sum_{PQ} h_PQ a_P^dag a_Q
///   + 1/2 sum_{PQRS} <PQ|RS> a_P^dag a_Q^dag a_S a_R
///
/// over interleaved spin orbitals, with spin selection rules applied to the
/// spatial integrals. Input integrals are validated for Hermiticity.
pub fn build_fermionic(problem: &ActiveSpaceIntegrals) -> Result<FermionOperator> {
    let n_spatial = problem.n_spatial();
    let n_modes = 2 * n_spatial;

    for p in 0..n_spatial {
        for q in 0..n_spatial {
            if (problem.h[(p, q)] - problem.h[(q, p)]).abs() > 1e-10 {
                return Err(Error::NonHermitian(format!(
                    "one-body integral h[{p},{q}] != h[{q},{p}]"
                )));
            }
            for r in 0..n_spatial {
                for s in 0..n_spatial {
                    let v = problem.g.get(p, q, r, s);
                    if (v - problem.g.get(r, s, p, q)).abs() > 1e-10
                        || (v - problem.g.get(q, p, s, r)).abs() > 1e-10
                    {
                        return Err(Error::NonHermitian(format!(
                            "two-body integral <{p}{q}|{r}{s}> breaks Hermitian symmetry"
                        )));
                    }
                }
            }
        }
    }

    let mut op = FermionOperator::new(n_modes);
    if problem.core_energy != 0.0 {
        op.constant(problem.core_energy);
    }

    for pp in 0..n_modes {
        for qq in 0..n_modes {
            if spin(pp) != spin(qq) {
                continue;
            }
            let v = problem.h[(spatial(pp), spatial(qq))];
            if v.abs() > 1e-14 {
                op.add(vec![(pp, true), (qq, false)], Complex64::new(v, 0.0));
            }
        }
    }

    for pp in 0..n_modes {
        for qq in 0..n_modes {
            for rr in 0..n_modes {
                for ss in 0..n_modes {
                    if spin(pp) != spin(rr) || spin(qq) != spin(ss) {
                        continue;
                    }
                    let v = problem.g.get(spatial(pp), spatial(qq), spatial(rr), spatial(ss));
                    if v.abs() > 1e-14 {
                        op.add(
                            vec![(pp, true), (qq, true), (ss, false), (rr, false)],
                            Complex64::new(0.5 * v, 0.0),
                        );
                    }
                }
            }
        }
    }

    Ok(op)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::molint::{self, Eri};
    use nalgebra::DMatrix;

    /// Dense matrix of a ladder product on the 2^n occupation basis; bit p of
    /// the basis index is the occupation of mode p, creation ordering
    /// a_0^dag a_1^dag ... |vac>. Test-only oracle.
    pub(crate) fn dense_fermion_matrix(op: &FermionOperator) -> DMatrix<Complex64> {
        let dim = 1usize << op.n_modes;
        let mut m = DMatrix::from_element(dim, dim, Complex64::new(0.0, 0.0));
        for (ladders, coeff) in &op.terms {
            for col in 0..dim {
                let mut state = col;
                let mut sign = 1.0;
                let mut alive = true;
                for &(mode, raise) in ladders.iter().rev() {
                    let occupied = state & (1 << mode) != 0;
                    if raise == occupied {
                        alive = false;
                        break;
                    }
                    let parity = (state & ((1 << mode) - 1)).count_ones();
                    if parity % 2 == 1 {
                        sign = -sign;
                    }
                    state ^= 1 << mode;
                }
                if alive {
                    m[(state, col)] += coeff * Complex64::new(sign, 0.0);
                }
            }
        }
        m
    }

    fn h2_problem() -> ActiveSpaceIntegrals {
        let ints = molint::integrals(&molint::geometry::h2(1.4011), &molint::sto3g()).unwrap();
        let scf = molint::scf_rhf(&ints, 2).unwrap();
        let mo = molint::mo_transform(&ints, &scf.mo_coefficients).unwrap();
        molint::active_space(&mo, ints.nuclear_repulsion, &[], &[0, 1], 2).unwrap()
    }

    #[test]
    fn zero_integrals_give_constant_operator() {
        let problem = ActiveSpaceIntegrals {
            active: vec![0],
            h: DMatrix::zeros(1, 1),
            g: Eri::zeros(1),
            core_energy: -2.5,
            n_active_electrons: 0,
        };
        let op = build_fermionic(&problem).unwrap();
        assert_eq!(op.terms.len(), 1);
        assert!(op.terms[0].0.is_empty());
        assert_eq!(op.terms[0].1, Complex64::new(-2.5, 0.0));
    }

    #[test]
    fn single_mode_number_operator() {
        let mut h = DMatrix::zeros(1, 1);
        h[(0, 0)] = 0.75;
        let problem = ActiveSpaceIntegrals {
            active: vec![0],
            h,
            g: Eri::zeros(1),
            core_energy: 0.0,
            n_active_electrons: 1,
        };
        let op = build_fermionic(&problem).unwrap();
        // one spatial orbital expands to alpha and beta number operators
        assert_eq!(op.terms.len(), 2);
        for (ladders, c) in &op.terms {
            assert_eq!(ladders.len(), 2);
            assert_eq!(ladders[0].0, ladders[1].0);
            assert!(ladders[0].1 && !ladders[1].1);
            assert_eq!(*c, Complex64::new(0.75, 0.0));
        }
    }

    #[test]
    fn h2_operator_matrix_is_hermitian() {
        let op = build_fermionic(&h2_problem()).unwrap();
        assert_eq!(op.n_modes, 4);
        let m = dense_fermion_matrix(&op);
        for i in 0..16 {
            for j in 0..16 {
                assert!((m[(i, j)] - m[(j, i)].conj()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn non_hermitian_integrals_rejected() {
        let mut h = DMatrix::zeros(2, 2);
        h[(0, 1)] = 0.3; // no matching h[(1,0)]
        let problem = ActiveSpaceIntegrals {
            active: vec![0, 1],
            h,
            g: Eri::zeros(2),
            core_energy: 0.0,
            n_active_electrons: 2,
        };
        assert!(matches!(
            build_fermionic(&problem),
            Err(Error::NonHermitian(_))
        ));
    }
}

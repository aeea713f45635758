//! Pauli strings and qubit Hamiltonians.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::{Error, Result};

/// Imaginary parts surviving collection above this are a Hermiticity violation.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Collected coefficients below this magnitude are dropped.
pub const COEFF_DROP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    pub fn symbol(self) -> char {
        match self {
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Sparse Pauli string: qubit index -> axis. Empty map is the identity.
pub type FactorMap = BTreeMap<usize, Pauli>;

/// Single-qubit product a * b -> (axis or identity, phase).
pub fn pauli_product(a: Pauli, b: Pauli) -> (Option<Pauli>, Complex64) {
    use Pauli::*;
    let i = Complex64::new(0.0, 1.0);
    let one = Complex64::new(1.0, 0.0);
    match (a, b) {
        (X, X) | (Y, Y) | (Z, Z) => (None, one),
        (X, Y) => (Some(Z), i),
        (Y, X) => (Some(Z), -i),
        (Y, Z) => (Some(X), i),
        (Z, Y) => (Some(X), -i),
        (Z, X) => (Some(Y), i),
        (X, Z) => (Some(Y), -i),
    }
}

/// Product of two factor maps with the accumulated phase.
pub fn mul_factor_maps(a: &FactorMap, b: &FactorMap) -> (FactorMap, Complex64) {
    let mut out = a.clone();
    let mut phase = Complex64::new(1.0, 0.0);
    for (&q, &pb) in b {
        match out.remove(&q) {
            None => {
                out.insert(q, pb);
            }
            Some(pa) => {
                let (axis, ph) = pauli_product(pa, pb);
                phase *= ph;
                if let Some(axis) = axis {
                    out.insert(q, axis);
                }
            }
        }
    }
    (out, phase)
}

/// One weighted Pauli string.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliTerm {
    pub factors: FactorMap,
    pub coefficient: Complex64,
}

impl PauliTerm {
    pub fn identity(coefficient: Complex64) -> Self {
        PauliTerm {
            factors: FactorMap::new(),
            coefficient,
        }
    }

    pub fn new(coefficient: Complex64, factors: impl IntoIterator<Item = (usize, Pauli)>) -> Self {
        PauliTerm {
            factors: factors.into_iter().collect(),
            coefficient,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &PauliTerm) -> PauliTerm {
        let (factors, phase) = mul_factor_maps(&self.factors, &other.factors);
        PauliTerm {
            factors,
            coefficient: self.coefficient * other.coefficient * phase,
        }
    }
}

/// A collected, Hermitian sum of Pauli strings with real coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct QubitHamiltonian {
    n_qubits: usize,
    /// Sorted by factor map; no duplicates, no (near-)zero coefficients.
    terms: Vec<(FactorMap, f64)>,
}

impl QubitHamiltonian {
    /// Collect complex-weighted strings and enforce Hermiticity: after
    /// summation every coefficient must be real within [`HERMITICITY_TOL`].
    pub fn collect_complex(
        n_qubits: usize,
        terms: impl IntoIterator<Item = (FactorMap, Complex64)>,
    ) -> Result<Self> {
        let mut acc: BTreeMap<FactorMap, Complex64> = BTreeMap::new();
        for (factors, coeff) in terms {
            if let Some(&q) = factors.keys().max() {
                if q >= n_qubits {
                    return Err(Error::ShapeMismatch(format!(
                        "factor on qubit {q} in a {n_qubits}-qubit Hamiltonian"
                    )));
                }
            }
            *acc.entry(factors).or_insert(Complex64::new(0.0, 0.0)) += coeff;
        }
        let mut out = Vec::new();
        for (factors, coeff) in acc {
            if coeff.im.abs() > HERMITICITY_TOL {
                return Err(Error::NonHermitian(format!(
                    "residual imaginary coefficient {:+e} on {}",
                    coeff.im,
                    format_factors(&factors)
                )));
            }
            if coeff.re.abs() > COEFF_DROP_TOL {
                out.push((factors, coeff.re));
            }
        }
        Ok(QubitHamiltonian {
            n_qubits,
            terms: out,
        })
    }

    pub fn collect_real(
        n_qubits: usize,
        terms: impl IntoIterator<Item = (FactorMap, f64)>,
    ) -> Result<Self> {
        Self::collect_complex(
            n_qubits,
            terms
                .into_iter()
                .map(|(f, c)| (f, Complex64::new(c, 0.0))),
        )
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[(FactorMap, f64)] {
        &self.terms
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn identity_coefficient(&self) -> f64 {
        self.terms
            .iter()
            .find(|(f, _)| f.is_empty())
            .map_or(0.0, |&(_, c)| c)
    }

    /// <b|H|b> for a computational-basis state: X/Y terms vanish, Z factors
    /// contribute their eigenvalue.
    pub fn diagonal_expectation(&self, reference: &ReferenceState) -> f64 {
        let mut e = 0.0;
        'terms: for (factors, coeff) in &self.terms {
            let mut sign = 1.0;
            for (&q, &p) in factors {
                if p != Pauli::Z {
                    continue 'terms;
                }
                if reference.bits[q] {
                    sign = -sign;
                }
            }
            e += coeff * sign;
        }
        e
    }
}

/// A computational-basis state, one occupation bit per qubit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceState {
    pub bits: Vec<bool>,
}

impl ReferenceState {
    pub fn n_qubits(&self) -> usize {
        self.bits.len()
    }

    /// Basis index with qubit q as bit q.
    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .enumerate()
            .fold(0, |acc, (q, &b)| acc | ((b as usize) << q))
    }

    /// Drop the listed qubits and compact the remaining indices.
    pub fn without_qubits(&self, removed: &[usize]) -> ReferenceState {
        ReferenceState {
            bits: self
                .bits
                .iter()
                .enumerate()
                .filter(|(q, _)| !removed.contains(q))
                .map(|(_, &b)| b)
                .collect(),
        }
    }
}

pub(crate) fn format_factors(factors: &FactorMap) -> String {
    if factors.is_empty() {
        return "I".to_string();
    }
    factors
        .iter()
        .map(|(q, p)| format!("{}{q}", p.symbol()))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 2x2 complex matrices for the single-qubit algebra check.
    fn matrix(p: Option<Pauli>) -> [[Complex64; 2]; 2] {
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        match p {
            None => [[l, o], [o, l]],
            Some(Pauli::X) => [[o, l], [l, o]],
            Some(Pauli::Y) => [[o, -i], [i, o]],
            Some(Pauli::Z) => [[l, o], [o, -l]],
        }
    }

    fn matmul(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
        let o = Complex64::new(0.0, 0.0);
        let mut c = [[o; 2]; 2];
        for r in 0..2 {
            for s in 0..2 {
                for k in 0..2 {
                    c[r][s] += a[r][k] * b[k][s];
                }
            }
        }
        c
    }

    #[test]
    fn product_table_matches_matrices() {
        for a in [Pauli::X, Pauli::Y, Pauli::Z] {
            for b in [Pauli::X, Pauli::Y, Pauli::Z] {
                let (axis, phase) = pauli_product(a, b);
                let lhs = matmul(matrix(Some(a)), matrix(Some(b)));
                let rhs = matrix(axis);
                for r in 0..2 {
                    for s in 0..2 {
                        assert!(
                            (lhs[r][s] - phase * rhs[r][s]).norm() < 1e-15,
                            "{a:?} * {b:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn term_multiplication_composes_phases() {
        let i = Complex64::new(0.0, 1.0);
        let x = PauliTerm::new(Complex64::new(1.0, 0.0), [(0, Pauli::X)]);
        let y = PauliTerm::new(Complex64::new(1.0, 0.0), [(0, Pauli::Y)]);
        let xy = x.mul(&y);
        assert_eq!(xy.factors, FactorMap::from([(0, Pauli::Z)]));
        assert!((xy.coefficient - i).norm() < 1e-15);
        // disjoint supports just merge
        let z3 = PauliTerm::new(Complex64::new(2.0, 0.0), [(3, Pauli::Z)]);
        let m = x.mul(&z3);
        assert_eq!(m.factors.len(), 2);
        assert!((m.coefficient - Complex64::new(2.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn collection_is_idempotent_and_sums_duplicates() {
        let f = FactorMap::from([(0, Pauli::Z)]);
        let h = QubitHamiltonian::collect_real(
            2,
            [(f.clone(), 0.25), (f.clone(), 0.75), (FactorMap::new(), 1.0)],
        )
        .unwrap();
        assert_eq!(h.n_terms(), 2);
        let recollected =
            QubitHamiltonian::collect_real(2, h.terms().iter().cloned()).unwrap();
        assert_eq!(h, recollected);
        assert_eq!(h.identity_coefficient(), 1.0);
    }

    #[test]
    fn hermiticity_guard_trips() {
        let f = FactorMap::from([(0, Pauli::X)]);
        let r = QubitHamiltonian::collect_complex(1, [(f, Complex64::new(0.0, 0.5))]);
        assert!(matches!(r, Err(Error::NonHermitian(_))));
    }

    #[test]
    fn diagonal_expectation_skips_offdiagonal_terms() {
        let h = QubitHamiltonian::collect_real(
            2,
            [
                (FactorMap::from([(0, Pauli::Z)]), 1.0),
                (FactorMap::from([(0, Pauli::Z), (1, Pauli::Z)]), 2.0),
                (FactorMap::from([(0, Pauli::X)]), 5.0),
            ],
        )
        .unwrap();
        let state = ReferenceState {
            bits: vec![true, false],
        };
        assert_eq!(h.diagonal_expectation(&state), -1.0 - 2.0);
        assert_eq!(state.index(), 1);
    }
}

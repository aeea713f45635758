//! The r-copy substitution: an n-qubit Hamiltonian becomes classical energy
//! and norm polynomials over copy bits z_{i,j} and sign spins s_j.
//!
//! A configuration of the (r x n) copy bits plus signs encodes the
//! unnormalized state psi = sum_j s_j |bits of copy j>; the polynomials
//! evaluate to <psi|H|psi> and <psi|psi>. Per original qubit i and copy pair
//! (j, k) the matrix element factorizes, with per-qubit factors
//!
//!   X: (1 - z_{i,j} z_{i,k}) / 2        Y: i (z_{i,k} - z_{i,j}) / 2
//!   Z: (z_{i,j} + z_{i,k}) / 2          1: (1 + z_{i,j} z_{i,k}) / 2
//!
//! and one s_j s_k sign product per pair.

use num_complex::Complex64;

use super::poly::{Monomial, SpinPolynomial, SpinVariable};
use crate::qubitham::{Pauli, QubitHamiltonian};
use crate::{Error, Result};

/// Residual imaginary coefficients above this trip a mapping error.
const IMAG_TOL: f64 = 1e-10;
/// Collected coefficients below this are dropped.
const DROP_TOL: f64 = 1e-12;

/// A complete assignment of copy bits and signs for given (n, r).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyConfig {
    n: usize,
    r: usize,
    /// bit of (qubit i, copy j): index (j - 1) * n + i. false encodes z = +1.
    bits: Vec<bool>,
    /// sign of copy j at index j - 1: +1 or -1.
    signs: Vec<i8>,
}

impl CopyConfig {
    pub fn new(n: usize, r: usize, bits: Vec<bool>, signs: Vec<i8>) -> Result<Self> {
        if bits.len() != n * r || signs.len() != r {
            return Err(Error::ShapeMismatch(format!(
                "config for n={n}, r={r} needs {} bits and {r} signs",
                n * r
            )));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Domain("signs must be +-1".to_string()));
        }
        Ok(CopyConfig { n, r, bits, signs })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// Occupation bit of copy j (1-based) of qubit i.
    pub fn bit(&self, qubit: usize, copy: usize) -> bool {
        self.bits[(copy - 1) * self.n + qubit]
    }

    pub fn sign(&self, copy: usize) -> i8 {
        self.signs[copy - 1]
    }

    /// Spin value of a variable: z = +1 for bit 0, -1 for bit 1.
    pub fn value(&self, var: SpinVariable) -> f64 {
        match var {
            SpinVariable::Copy { qubit, copy } => {
                if self.bit(qubit as usize, copy as usize) {
                    -1.0
                } else {
                    1.0
                }
            }
            SpinVariable::Sign { copy } => self.sign(copy as usize) as f64,
        }
    }

    /// Basis index of copy j, qubit i as bit i.
    pub fn copy_index(&self, copy: usize) -> usize {
        (0..self.n).fold(0, |acc, i| acc | ((self.bit(i, copy) as usize) << i))
    }

    pub fn random(n: usize, r: usize, rng: &mut impl rand::Rng) -> Self {
        CopyConfig {
            n,
            r,
            bits: (0..n * r).map(|_| rng.gen()).collect(),
            signs: (0..r).map(|_| if rng.gen() { 1 } else { -1 }).collect(),
        }
    }

    /// Every configuration for (n, r); 2^(nr + r) entries, test-scale only.
    pub fn enumerate(n: usize, r: usize) -> impl Iterator<Item = CopyConfig> {
        let nbits = n * r + r;
        (0..1usize << nbits).map(move |code| {
            let bits: Vec<bool> = (0..n * r).map(|k| code & (1 << k) != 0).collect();
            let signs: Vec<i8> = (0..r)
                .map(|j| if code & (1 << (n * r + j)) != 0 { -1 } else { 1 })
                .collect();
            CopyConfig { n, r, bits, signs }
        })
    }

    /// The copy-encoding of a single basis state: all copies hold `bits`,
    /// all signs +1 (so psi = r |bits>).
    pub fn uniform(n: usize, r: usize, bits: &[bool]) -> Result<Self> {
        if bits.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "expected {n} bits, got {}",
                bits.len()
            )));
        }
        let mut all = Vec::with_capacity(n * r);
        for _ in 0..r {
            all.extend_from_slice(bits);
        }
        Ok(CopyConfig {
            n,
            r,
            bits: all,
            signs: vec![1; r],
        })
    }
}

/// The image of a qubit Hamiltonian under the copy mapping.
#[derive(Debug, Clone)]
pub struct XiaInstance {
    pub energy_poly: SpinPolynomial,
    pub norm_poly: SpinPolynomial,
    pub n: usize,
    pub r: usize,
    /// Constant energy carried outside the polynomials (Hartree); added to
    /// every quotient.
    pub offset: f64,
}

fn copy_var(qubit: usize, copy: usize) -> SpinVariable {
    SpinVariable::Copy {
        qubit: qubit as u32,
        copy: copy as u32,
    }
}

fn sign_var(copy: usize) -> SpinVariable {
    SpinVariable::Sign { copy: copy as u32 }
}

/// Per-qubit factor for copy pair (j, k), as monomial/coefficient pairs.
fn qubit_factor(axis: Option<Pauli>, i: usize, j: usize, k: usize) -> Vec<(Monomial, Complex64)> {
    let zj = copy_var(i, j);
    let zk = copy_var(i, k);
    let re = |x: f64| Complex64::new(x, 0.0);
    let im = |x: f64| Complex64::new(0.0, x);
    if j == k {
        // diagonal pair: z^2 = 1 collapses the factors
        return match axis {
            Some(Pauli::X) | Some(Pauli::Y) => vec![],
            Some(Pauli::Z) => vec![(Monomial::from([zj]), re(1.0))],
            None => vec![(Monomial::new(), re(1.0))],
        };
    }
    match axis {
        Some(Pauli::X) => vec![
            (Monomial::new(), re(0.5)),
            (Monomial::from([zj, zk]), re(-0.5)),
        ],
        Some(Pauli::Y) => vec![
            (Monomial::from([zk]), im(0.5)),
            (Monomial::from([zj]), im(-0.5)),
        ],
        Some(Pauli::Z) => vec![
            (Monomial::from([zj]), re(0.5)),
            (Monomial::from([zk]), re(0.5)),
        ],
        None => vec![
            (Monomial::new(), re(0.5)),
            (Monomial::from([zj, zk]), re(0.5)),
        ],
    }
}

/// Sum over copy pairs of the per-qubit factor products for one Pauli
/// string, accumulated into `acc`.
fn accumulate_term(
    acc: &mut std::collections::BTreeMap<Monomial, Complex64>,
    factors: impl Fn(usize) -> Option<Pauli>,
    coeff: Complex64,
    n: usize,
    r: usize,
) {
    for j in 1..=r {
        for k in 1..=r {
            let mut partial: Vec<(Monomial, Complex64)> = vec![(Monomial::new(), coeff)];
            for i in 0..n {
                let pieces = qubit_factor(factors(i), i, j, k);
                if pieces.is_empty() {
                    partial.clear();
                    break;
                }
                let mut next = Vec::with_capacity(partial.len() * pieces.len());
                for (m, c) in &partial {
                    for (pm, pc) in &pieces {
                        next.push((super::poly::mul_monomials(m, pm), c * pc));
                    }
                }
                partial = next;
            }
            let sign_product: Monomial = if j == k {
                Monomial::new()
            } else {
                Monomial::from([sign_var(j), sign_var(k)])
            };
            for (m, c) in partial {
                let full = super::poly::mul_monomials(&m, &sign_product);
                *acc.entry(full).or_insert(Complex64::new(0.0, 0.0)) += c;
            }
        }
    }
}

fn collect_real_form(
    acc: std::collections::BTreeMap<Monomial, Complex64>,
) -> Result<SpinPolynomial> {
    let mut poly = SpinPolynomial::zero();
    for (m, c) in acc {
        if c.im.abs() > IMAG_TOL {
            return Err(Error::Mapping(format!(
                "residual imaginary coefficient {:+e} (non-Hermitian input?)",
                c.im
            )));
        }
        if c.re.abs() > DROP_TOL {
            poly.add_term(m, c.re);
        }
    }
    Ok(poly)
}

/// Map an n-qubit Hamiltonian onto energy and norm polynomials with r copies.
pub fn map_to_polynomials(h: &QubitHamiltonian, r: usize) -> Result<XiaInstance> {
    if r < 1 {
        return Err(Error::Domain("r must be at least 1".to_string()));
    }
    let n = h.n_qubits();

    let mut energy_acc = std::collections::BTreeMap::new();
    for (factors, coeff) in h.terms() {
        accumulate_term(
            &mut energy_acc,
            |i| factors.get(&i).copied(),
            Complex64::new(*coeff, 0.0),
            n,
            r,
        );
    }
    let energy_poly = collect_real_form(energy_acc)?;

    let mut norm_acc = std::collections::BTreeMap::new();
    accumulate_term(&mut norm_acc, |_| None, Complex64::new(1.0, 0.0), n, r);
    let norm_poly = collect_real_form(norm_acc)?;

    Ok(XiaInstance {
        energy_poly,
        norm_poly,
        n,
        r,
        offset: 0.0,
    })
}

/// psi = sum_j sign_j |bits of copy j>, unnormalized.
pub fn reconstruct_state(config: &CopyConfig) -> Vec<Complex64> {
    let mut state = vec![Complex64::new(0.0, 0.0); 1 << config.n()];
    for j in 1..=config.r() {
        state[config.copy_index(j)] += Complex64::new(config.sign(j) as f64, 0.0);
    }
    state
}

/// Energy read-out for one configuration: energy / norm plus the instance
/// offset, or None when the reconstructed state cancels to (numerical) zero.
pub fn rayleigh_quotient(instance: &XiaInstance, config: &CopyConfig) -> Option<f64> {
    let norm = instance.norm_poly.evaluate_with(|v| config.value(v));
    if norm < 1e-9 * instance.r as f64 {
        return None;
    }
    let energy = instance.energy_poly.evaluate_with(|v| config.value(v));
    Some(energy / norm + instance.offset)
}

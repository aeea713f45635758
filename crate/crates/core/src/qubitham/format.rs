//! Text interchange format for qubit Hamiltonians.
//!
//! ```text
//! n_qubits 4
//! -8.1054e-1
//! 1.7218e-1 Z0
//! 4.5322e-2 X0 X1 Y2 Y3
//! ```
//!
//! One term per line: coefficient followed by Pauli factors `X3`/`Y0`/`Z1`;
//! a bare coefficient is the identity term. `#` starts a comment.

use std::fmt::Write as _;

use super::pauli::{FactorMap, Pauli, QubitHamiltonian};
use crate::{Error, Result};

pub fn dump_hamiltonian(h: &QubitHamiltonian) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n_qubits {}", h.n_qubits());
    for (factors, coeff) in h.terms() {
        let _ = write!(out, "{coeff:.16e}");
        for (q, p) in factors {
            let _ = write!(out, " {}{q}", p.symbol());
        }
        let _ = writeln!(out);
    }
    out
}

pub fn parse_hamiltonian(text: &str) -> Result<QubitHamiltonian> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::parse(0, "empty Hamiltonian file".to_string()))?;
    let mut fields = header.split_whitespace();
    if fields.next() != Some("n_qubits") {
        return Err(Error::parse(lineno, "expected `n_qubits N` header".to_string()));
    }
    let n_qubits: usize = fields
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(lineno, "bad qubit count".to_string()))?;
    if fields.next().is_some() {
        return Err(Error::parse(lineno, "trailing data after header".to_string()));
    }
    if n_qubits > 64 {
        return Err(Error::parse(lineno, format!("{n_qubits} qubits out of range")));
    }

    let mut terms: Vec<(FactorMap, f64)> = Vec::new();
    for (lineno, line) in lines {
        let mut fields = line.split_whitespace();
        let coeff: f64 = fields
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(lineno, "bad coefficient".to_string()))?;
        if !coeff.is_finite() {
            return Err(Error::parse(lineno, "non-finite coefficient".to_string()));
        }
        let mut factors = FactorMap::new();
        for tok in fields {
            let axis = match tok.chars().next() {
                Some('X') => Pauli::X,
                Some('Y') => Pauli::Y,
                Some('Z') => Pauli::Z,
                _ => return Err(Error::parse(lineno, format!("bad factor `{tok}`"))),
            };
            let q: usize = tok[1..]
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad qubit index in `{tok}`")))?;
            if q >= n_qubits {
                return Err(Error::parse(lineno, format!("qubit {q} >= n_qubits {n_qubits}")));
            }
            if factors.insert(q, axis).is_some() {
                return Err(Error::parse(lineno, format!("duplicate factor on qubit {q}")));
            }
        }
        terms.push((factors, coeff));
    }
    QubitHamiltonian::collect_real(n_qubits, terms)
}

//! Multilinear polynomials over copy-bit and sign spins.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::{Error, Result};

/// A classical +-1 spin degree of freedom of the copy construction: either
/// copy j of original qubit i, or the per-copy sign spin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpinVariable {
    /// z_{i,j}: copy j (1-based) of qubit i.
    Copy { qubit: u32, copy: u32 },
    /// s_j: sign of copy j.
    Sign { copy: u32 },
}

impl SpinVariable {
    pub fn name(&self) -> String {
        match self {
            SpinVariable::Copy { qubit, copy } => format!("z_{qubit}_{copy}"),
            SpinVariable::Sign { copy } => format!("s_{copy}"),
        }
    }

    pub fn parse_name(token: &str) -> Option<SpinVariable> {
        if let Some(rest) = token.strip_prefix("z_") {
            let (a, b) = rest.split_once('_')?;
            return Some(SpinVariable::Copy {
                qubit: a.parse().ok()?,
                copy: b.parse().ok()?,
            });
        }
        if let Some(rest) = token.strip_prefix("s_") {
            return Some(SpinVariable::Sign {
                copy: rest.parse().ok()?,
            });
        }
        None
    }
}

/// Product of distinct spin variables (multilinear monomial).
pub type Monomial = BTreeSet<SpinVariable>;

/// coeff * product for +-1 variables: squares cancel, so a monomial product
/// is the symmetric difference of the variable sets.
pub fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    a.symmetric_difference(b).copied().collect()
}

/// Real multilinear polynomial over +-1 spins.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SpinPolynomial {
    pub constant: f64,
    /// Non-empty monomials only; no zero coefficients survive collection.
    terms: BTreeMap<Monomial, f64>,
}

impl SpinPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_constant(constant: f64) -> Self {
        SpinPolynomial {
            constant,
            terms: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, monomial: Monomial, coeff: f64) {
        if monomial.is_empty() {
            self.constant += coeff;
            return;
        }
        let entry = self.terms.entry(monomial.clone()).or_insert(0.0);
        *entry += coeff;
        if entry.abs() < 1e-14 {
            self.terms.remove(&monomial);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, f64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    /// Monomial count, constant excluded.
    pub fn n_monomials(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<SpinVariable> {
        self.terms.keys().flat_map(|m| m.iter().copied()).collect()
    }

    /// self + alpha * other.
    pub fn axpy(&self, alpha: f64, other: &SpinPolynomial) -> SpinPolynomial {
        let mut out = self.clone();
        out.constant += alpha * other.constant;
        for (m, c) in other.terms() {
            out.add_term(m.clone(), alpha * c);
        }
        out
    }

    pub fn evaluate_with(&self, value: impl Fn(SpinVariable) -> f64) -> f64 {
        let mut acc = self.constant;
        for (m, &c) in &self.terms {
            let mut prod = c;
            for &v in m {
                prod *= value(v);
            }
            acc += prod;
        }
        acc
    }
}

/// Dump: one line per term, `coefficient var var ...`; the constant is a
/// bare coefficient line.
pub fn dump_polynomial(poly: &SpinPolynomial) -> String {
    let mut out = String::new();
    if poly.constant != 0.0 || poly.n_monomials() == 0 {
        let _ = writeln!(out, "{:.16e}", poly.constant);
    }
    for (m, c) in poly.terms() {
        let _ = write!(out, "{c:.16e}");
        for v in m {
            let _ = write!(out, " {}", v.name());
        }
        let _ = writeln!(out);
    }
    out
}

pub fn parse_polynomial(text: &str) -> Result<SpinPolynomial> {
    let mut poly = SpinPolynomial::zero();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        let coeff: f64 = fields
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::parse(idx + 1, "bad coefficient".to_string()))?;
        if !coeff.is_finite() {
            return Err(Error::parse(idx + 1, "non-finite coefficient".to_string()));
        }
        let mut monomial = Monomial::new();
        for tok in fields {
            let var = SpinVariable::parse_name(tok)
                .ok_or_else(|| Error::parse(idx + 1, format!("bad variable `{tok}`")))?;
            let (SpinVariable::Copy { copy, .. } | SpinVariable::Sign { copy }) = var;
            if copy == 0 {
                return Err(Error::parse(idx + 1, "copy indices are 1-based".to_string()));
            }
            if !monomial.insert(var) {
                return Err(Error::parse(idx + 1, format!("repeated variable `{tok}`")));
            }
        }
        poly.add_term(monomial, coeff);
    }
    Ok(poly)
}

//! 2-local models and the spin/boolean domain bridge.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::isingmap::{Monomial, SpinPolynomial, SpinVariable};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// Variables take +-1.
    Spin,
    /// Variables take 0/1.
    Boolean,
}

/// What a model variable stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelVariable {
    Spin(SpinVariable),
    Ancilla(u32),
}

/// Quadratic pseudo-Boolean/Ising energy: offset + sum h_i v_i + sum J_ij v_i v_j.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticModel {
    pub domain: Domain,
    /// Variable id is the position in this table.
    pub variables: Vec<ModelVariable>,
    pub linear: Vec<f64>,
    /// Upper-triangle couplings, key (i, j) with i < j.
    pub quadratic: BTreeMap<(u32, u32), f64>,
    pub offset: f64,
}

impl QuadraticModel {
    pub fn new(domain: Domain, variables: Vec<ModelVariable>) -> Self {
        let n = variables.len();
        QuadraticModel {
            domain,
            variables,
            linear: vec![0.0; n],
            quadratic: BTreeMap::new(),
            offset: 0.0,
        }
    }

    pub fn n_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn add_linear(&mut self, i: u32, value: f64) {
        self.linear[i as usize] += value;
    }

    pub fn add_quadratic(&mut self, i: u32, j: u32, value: f64) {
        assert_ne!(i, j, "no self-couplings");
        let key = (i.min(j), i.max(j));
        *self.quadratic.entry(key).or_insert(0.0) += value;
    }

    /// Value domain of the assignment entries.
    fn check_values(&self, assignment: &[i8]) -> bool {
        match self.domain {
            Domain::Spin => assignment.iter().all(|&v| v == 1 || v == -1),
            Domain::Boolean => assignment.iter().all(|&v| v == 0 || v == 1),
        }
    }

    pub fn energy(&self, assignment: &[i8]) -> f64 {
        debug_assert_eq!(assignment.len(), self.n_vars());
        debug_assert!(self.check_values(assignment));
        let mut e = self.offset;
        for (i, &h) in self.linear.iter().enumerate() {
            e += h * assignment[i] as f64;
        }
        for (&(i, j), &jij) in &self.quadratic {
            e += jij * (assignment[i as usize] as f64) * (assignment[j as usize] as f64);
        }
        e
    }

    pub fn max_abs_coefficient(&self) -> f64 {
        self.linear
            .iter()
            .chain(self.quadratic.values())
            .fold(0.0f64, |m, &v| m.max(v.abs()))
    }
}

/// Multilinear polynomial over 0/1 variables (x^2 = x).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct BooleanPolynomial {
    pub constant: f64,
    terms: BTreeMap<Monomial, f64>,
}

impl BooleanPolynomial {
    pub fn zero() -> Self {
        Self::default()
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

    pub fn n_monomials(&self) -> usize {
        self.terms.len()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> std::collections::BTreeSet<SpinVariable> {
        self.terms.keys().flat_map(|m| m.iter().copied()).collect()
    }

    /// self + alpha * other.
    pub fn axpy(&self, alpha: f64, other: &BooleanPolynomial) -> BooleanPolynomial {
        let mut out = self.clone();
        out.constant += alpha * other.constant;
        for (m, c) in other.terms() {
            out.add_term(m.clone(), alpha * c);
        }
        out
    }

    pub fn evaluate_with(&self, value: impl Fn(SpinVariable) -> bool) -> f64 {
        let mut acc = self.constant;
        'terms: for (m, &c) in &self.terms {
            for &v in m {
                if !value(v) {
                    continue 'terms;
                }
            }
            acc += c;
        }
        acc
    }
}

/// Substitute z = 1 - 2x exactly: each spin monomial expands over the
/// subsets of its variables.
pub fn to_boolean(poly: &SpinPolynomial) -> BooleanPolynomial {
    let mut out = BooleanPolynomial::zero();
    out.constant = poly.constant;
    for (monomial, coeff) in poly.terms() {
        let vars: Vec<SpinVariable> = monomial.iter().copied().collect();
        let k = vars.len();
        for mask in 0..(1u32 << k) {
            let subset: Monomial = (0..k)
                .filter(|&b| mask & (1 << b) != 0)
                .map(|b| vars[b])
                .collect();
            let scale = (-2.0f64).powi(subset.len() as i32);
            out.add_term(subset, coeff * scale);
        }
    }
    out
}

/// Substitute x = (1 - z) / 2 exactly; inverse of [`to_boolean`] on values.
pub fn boolean_poly_to_spin(poly: &BooleanPolynomial) -> SpinPolynomial {
    let mut out = SpinPolynomial::from_constant(poly.constant);
    for (monomial, coeff) in poly.terms() {
        let vars: Vec<SpinVariable> = monomial.iter().copied().collect();
        let k = vars.len();
        let base = coeff / (1u64 << k) as f64;
        for mask in 0..(1u32 << k) {
            let subset: Monomial = (0..k)
                .filter(|&b| mask & (1 << b) != 0)
                .map(|b| vars[b])
                .collect();
            let sign = if subset.len() % 2 == 0 { 1.0 } else { -1.0 };
            out.add_term(subset, base * sign);
        }
    }
    out
}

/// Convert a boolean quadratic model to the spin domain via x = (1 - z)/2,
/// value-preserving on all assignments.
pub fn to_spin(model: &QuadraticModel) -> QuadraticModel {
    match model.domain {
        Domain::Spin => model.clone(),
        Domain::Boolean => {
            let mut out = QuadraticModel::new(Domain::Spin, model.variables.clone());
            out.offset = model.offset;
            for (i, &h) in model.linear.iter().enumerate() {
                // h x = h (1 - z)/2
                out.offset += h / 2.0;
                out.linear[i] -= h / 2.0;
            }
            for (&(i, j), &q) in &model.quadratic {
                // q x_i x_j = q (1 - z_i)(1 - z_j)/4
                out.offset += q / 4.0;
                out.linear[i as usize] -= q / 4.0;
                out.linear[j as usize] -= q / 4.0;
                out.add_quadratic(i, j, q / 4.0);
            }
            out
        }
    }
}

/// Canonical Ising/QUBO exchange format:
///
/// ```text
/// domain spin
/// offset 1.25
/// h 0 0.5
/// J 0 1 -1.0
/// ```
///
/// Every variable gets an `h` line so the count survives a round trip.
pub fn dump_model(model: &QuadraticModel) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "domain {}",
        match model.domain {
            Domain::Spin => "spin",
            Domain::Boolean => "boolean",
        }
    );
    let _ = writeln!(out, "offset {:.16e}", model.offset);
    for (i, &h) in model.linear.iter().enumerate() {
        let _ = writeln!(out, "h {i} {h:.16e}");
    }
    for (&(i, j), &q) in &model.quadratic {
        let _ = writeln!(out, "J {i} {j} {q:.16e}");
    }
    out
}

pub fn parse_model(text: &str) -> Result<QuadraticModel> {
    let mut domain = None;
    let mut offset = 0.0;
    let mut linear: BTreeMap<u32, f64> = BTreeMap::new();
    let mut quadratic: BTreeMap<(u32, u32), f64> = BTreeMap::new();
    let mut max_index: Option<u32> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_f = |tok: &str| -> Result<f64> {
            let v: f64 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad number `{tok}`")))?;
            if !v.is_finite() {
                return Err(Error::parse(lineno, format!("non-finite value `{tok}`")));
            }
            Ok(v)
        };
        let parse_u = |tok: &str| -> Result<u32> {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::parse(lineno, format!("bad index `{tok}`")))?;
            if v > 1_000_000 {
                return Err(Error::parse(lineno, format!("index {v} out of range")));
            }
            Ok(v)
        };
        match fields.as_slice() {
            ["domain", d] => {
                domain = Some(match *d {
                    "spin" => Domain::Spin,
                    "boolean" => Domain::Boolean,
                    other => {
                        return Err(Error::parse(lineno, format!("unknown domain `{other}`")))
                    }
                });
            }
            ["offset", v] => offset = parse_f(v)?,
            ["h", i, v] => {
                let i = parse_u(i)?;
                *linear.entry(i).or_insert(0.0) += parse_f(v)?;
                max_index = Some(max_index.map_or(i, |m: u32| m.max(i)));
            }
            ["J", i, j, v] => {
                let i = parse_u(i)?;
                let j = parse_u(j)?;
                if i == j {
                    return Err(Error::parse(lineno, "self-coupling J i i".to_string()));
                }
                *quadratic.entry((i.min(j), i.max(j))).or_insert(0.0) += parse_f(v)?;
                max_index = Some(max_index.map_or(i.max(j), |m: u32| m.max(i).max(j)));
            }
            _ => return Err(Error::parse(lineno, format!("unrecognized line `{line}`"))),
        }
    }

    let domain = domain.ok_or_else(|| Error::parse(0, "missing `domain` header".to_string()))?;
    let n = max_index.map_or(0, |m| m as usize + 1);
    let mut model = QuadraticModel::new(
        domain,
        (0..n as u32).map(ModelVariable::Ancilla).collect(),
    );
    model.offset = offset;
    for (i, v) in linear {
        model.linear[i as usize] = v;
    }
    model.quadratic = quadratic;
    Ok(model)
}

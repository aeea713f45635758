//! Contracted Gaussian basis sets.
//!
//! Basis file format, one record per shell:
//! `element L exponent1 coeff1 exponent2 coeff2 exponent3 coeff3`
//! with L = 0 (s) or 1 (p). Blank lines and `#` comments are ignored.

use std::collections::BTreeMap;

use crate::{Error, Result};

use super::geometry::Geometry;

/// STO-3G parameters for H and Li (EMSL exchange values). Every shell is a
/// contraction of exactly 3 primitives.
const STO3G_TABLE: &str = "\
H  0 3.425250914 0.1543289673 0.6239137298 0.5353281423 0.1688554040 0.4446345422
Li 0 16.11957475 0.1543289673 2.936200663 0.5353281423 0.7946504870 0.4446345422
Li 0 0.6362897469 -0.09996722919 0.1478600533 0.3995128261 0.04808867840 0.7001154689
Li 1 0.6362897469 0.1559162750 0.1478600533 0.6076837186 0.04808867840 0.3919573931
";

/// One shell record of a basis set (element-level, not yet placed on an atom).
#[derive(Debug, Clone)]
pub struct ShellRecord {
    pub l: u32,
    /// (exponent, contraction coefficient) pairs; coefficients refer to
    /// normalized primitives.
    pub primitives: Vec<(f64, f64)>,
}

/// A basis set: shell records grouped by element symbol.
#[derive(Debug, Clone, Default)]
pub struct BasisSet {
    pub shells: BTreeMap<String, Vec<ShellRecord>>,
}

impl BasisSet {
    pub fn for_element(&self, symbol: &str) -> Option<&[ShellRecord]> {
        self.shells.get(symbol).map(|v| v.as_slice())
    }
}

/// The built-in STO-3G basis (H, Li).
pub fn sto3g() -> BasisSet {
    parse_basis(STO3G_TABLE).expect("embedded STO-3G table is well-formed")
}

/// Parse the text basis format described in the module docs.
pub fn parse_basis(text: &str) -> Result<BasisSet> {
    let mut set = BasisSet::default();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 8 {
            return Err(Error::parse(
                idx + 1,
                format!("expected 8 fields `element L e1 c1 e2 c2 e3 c3`, got {}", fields.len()),
            ));
        }
        let element = fields[0].to_string();
        let l: u32 = fields[1]
            .parse()
            .map_err(|_| Error::parse(idx + 1, format!("bad angular momentum `{}`", fields[1])))?;
        if l > 1 {
            return Err(Error::UnsupportedShell(l));
        }
        let mut primitives = Vec::with_capacity(3);
        for pair in fields[2..].chunks(2) {
            let exponent: f64 = pair[0]
                .parse()
                .map_err(|_| Error::parse(idx + 1, format!("bad exponent `{}`", pair[0])))?;
            let coefficient: f64 = pair[1]
                .parse()
                .map_err(|_| Error::parse(idx + 1, format!("bad coefficient `{}`", pair[1])))?;
            if !(exponent.is_finite() && exponent > 0.0) {
                return Err(Error::parse(idx + 1, format!("exponent must be > 0, got {exponent}")));
            }
            if !coefficient.is_finite() {
                return Err(Error::parse(idx + 1, "non-finite coefficient".to_string()));
            }
            primitives.push((exponent, coefficient));
        }
        set.shells.entry(element).or_default().push(ShellRecord { l, primitives });
    }
    if set.shells.is_empty() {
        return Err(Error::parse(0, "basis file has no shell records".to_string()));
    }
    Ok(set)
}

/// A single Cartesian basis function: contraction of primitive Gaussians
/// x^i y^j z^k exp(-a r^2) on one center. Coefficients stored here already
/// include primitive normalization and the contraction rescaling that makes
/// the self-overlap exactly 1.
#[derive(Debug, Clone)]
pub struct BasisFunction {
    pub center: [f64; 3],
    pub powers: [u32; 3],
    /// (exponent, total coefficient) pairs.
    pub primitives: Vec<(f64, f64)>,
}

fn double_factorial(n: i64) -> f64 {
    let mut v = 1.0;
    let mut k = n;
    while k > 1 {
        v *= k as f64;
        k -= 2;
    }
    v
}

/// Normalization constant of a primitive Cartesian Gaussian.
fn primitive_norm(alpha: f64, powers: [u32; 3]) -> f64 {
    let l_sum: u32 = powers.iter().sum();
    let mut denom = 1.0;
    for &k in &powers {
        denom *= double_factorial(2 * k as i64 - 1);
    }
    (2.0 * alpha / std::f64::consts::PI).powf(0.75)
        * (4.0 * alpha).powf(l_sum as f64 / 2.0)
        / denom.sqrt()
}

/// Closed-form self-overlap of a contracted function on one center (used to
/// fix the contraction scale; independent of the integral engine).
fn contracted_self_overlap(primitives: &[(f64, f64)], powers: [u32; 3]) -> f64 {
    let mut s = 0.0;
    for &(ai, ci) in primitives {
        for &(aj, cj) in primitives {
            let p = ai + aj;
            let mut moment = (std::f64::consts::PI / p).powf(1.5);
            for &k in &powers {
                moment *= double_factorial(2 * k as i64 - 1) / (2.0 * p).powi(k as i32);
            }
            s += ci * cj * moment;
        }
    }
    s
}

/// Place basis functions on every atom of `geometry`. Shells with l = 1
/// expand into the three Cartesian components.
pub fn build_basis_functions(geometry: &Geometry, basis: &BasisSet) -> Result<Vec<BasisFunction>> {
    let mut functions = Vec::new();
    for atom in &geometry.atoms {
        let records = basis.for_element(&atom.symbol).ok_or_else(|| {
            Error::InvalidGeometry(format!("no basis shells for element {}", atom.symbol))
        })?;
        for record in records {
            let components: &[[u32; 3]] = match record.l {
                0 => &[[0, 0, 0]],
                1 => &[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
                l => return Err(Error::UnsupportedShell(l)),
            };
            for &powers in components {
                let mut primitives: Vec<(f64, f64)> = record
                    .primitives
                    .iter()
                    .map(|&(a, c)| (a, c * primitive_norm(a, powers)))
                    .collect();
                let scale = contracted_self_overlap(&primitives, powers).sqrt().recip();
                for prim in &mut primitives {
                    prim.1 *= scale;
                }
                functions.push(BasisFunction {
                    center: atom.position,
                    powers,
                    primitives,
                });
            }
        }
    }
    Ok(functions)
}

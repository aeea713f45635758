//! Integral interchange file: lets externally computed integrals bypass the
//! engine.
//!
//! Structured text, token oriented:
//!
//! ```text
//! n_spatial N
//! core_energy E
//! h
//! <N*N values, row-major>
//! g
//! <N^4 values, flat index p*n^3 + q*n^2 + r*n + s, physicist convention>
//! ```
//!
//! Whitespace layout inside the numeric blocks is free; `#` starts a comment.

use std::io::Write;

use nalgebra::DMatrix;

use super::{ActiveSpaceIntegrals, Eri};
use crate::{Error, Result};

pub fn write_integrals<W: Write>(
    w: &mut W,
    core_energy: f64,
    h: &DMatrix<f64>,
    g: &Eri,
) -> std::io::Result<()> {
    let n = h.nrows();
    writeln!(w, "n_spatial {n}")?;
    writeln!(w, "core_energy {core_energy:.16e}")?;
    writeln!(w, "h")?;
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| format!("{:.16e}", h[(i, j)])).collect();
        writeln!(w, "{}", row.join(" "))?;
    }
    writeln!(w, "g")?;
    for chunk in g.data().chunks(n.max(1) * n.max(1)) {
        let row: Vec<String> = chunk.iter().map(|v| format!("{v:.16e}")).collect();
        writeln!(w, "{}", row.join(" "))?;
    }
    Ok(())
}

/// Parse the interchange format. `n_active_electrons` is not part of the
/// file; the caller supplies it when turning the result into a problem.
pub fn parse_integrals(text: &str) -> Result<(f64, DMatrix<f64>, Eri)> {
    let mut tokens: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        for tok in line.split_whitespace() {
            tokens.push((idx + 1, tok));
        }
    }
    let mut pos = 0usize;
    let mut expect = |what: &str| -> Result<(usize, &str)> {
        let &(line, tok) = tokens
            .get(pos)
            .ok_or_else(|| Error::parse(tokens.last().map_or(0, |t| t.0), format!("missing {what}")))?;
        pos += 1;
        Ok((line, tok))
    };

    let (line, tok) = expect("`n_spatial` header")?;
    if tok != "n_spatial" {
        return Err(Error::parse(line, format!("expected `n_spatial`, got `{tok}`")));
    }
    let (line, tok) = expect("spatial orbital count")?;
    let n: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("bad orbital count `{tok}`")))?;
    if n == 0 || n > 64 {
        return Err(Error::parse(line, format!("orbital count {n} out of range 1..=64")));
    }

    let (line, tok) = expect("`core_energy` header")?;
    if tok != "core_energy" {
        return Err(Error::parse(line, format!("expected `core_energy`, got `{tok}`")));
    }
    let (line, tok) = expect("core energy value")?;
    let core_energy: f64 = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("bad core energy `{tok}`")))?;
    if !core_energy.is_finite() {
        return Err(Error::parse(line, "non-finite core energy".to_string()));
    }

    let (line, tok) = expect("`h` header")?;
    if tok != "h" {
        return Err(Error::parse(line, format!("expected `h`, got `{tok}`")));
    }
    let mut h = DMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let (line, tok) = expect("h matrix entry")?;
            let v: f64 = tok
                .parse()
                .map_err(|_| Error::parse(line, format!("bad h entry `{tok}`")))?;
            if !v.is_finite() {
                return Err(Error::parse(line, "non-finite h entry".to_string()));
            }
            h[(i, j)] = v;
        }
    }

    let (line, tok) = expect("`g` header")?;
    if tok != "g" {
        return Err(Error::parse(line, format!("expected `g`, got `{tok}`")));
    }
    let mut data = Vec::with_capacity(n * n * n * n);
    for _ in 0..n * n * n * n {
        let (line, tok) = expect("g tensor entry")?;
        let v: f64 = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("bad g entry `{tok}`")))?;
        if !v.is_finite() {
            return Err(Error::parse(line, "non-finite g entry".to_string()));
        }
        data.push(v);
    }
    if let Some(&(line, tok)) = tokens.get(pos) {
        return Err(Error::parse(line, format!("trailing data `{tok}`")));
    }
    Ok((core_energy, h, Eri::from_flat(n, data)?))
}

/// Assemble parsed integrals into the problem form consumed downstream.
pub fn integrals_to_problem(
    core_energy: f64,
    h: DMatrix<f64>,
    g: Eri,
    n_active_electrons: usize,
) -> ActiveSpaceIntegrals {
    let n = h.nrows();
    ActiveSpaceIntegrals {
        active: (0..n).collect(),
        h,
        g,
        core_energy,
        n_active_electrons,
    }
}

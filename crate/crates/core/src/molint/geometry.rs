//! Molecular geometries in atomic units.

use crate::{Error, Result};

/// 1 Angstrom in Bohr.
pub const ANGSTROM_TO_BOHR: f64 = 1.8897259886;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthUnit {
    Bohr,
    Angstrom,
}

impl LengthUnit {
    pub fn to_bohr(self, value: f64) -> f64 {
        match self {
            LengthUnit::Bohr => value,
            LengthUnit::Angstrom => value * ANGSTROM_TO_BOHR,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Atom {
    pub symbol: String,
    /// Nuclear charge Z.
    pub charge: u32,
    /// Position in Bohr.
    pub position: [f64; 3],
}

/// A molecule: nuclei at fixed positions (Born-Oppenheimer).
#[derive(Debug, Clone)]
pub struct Geometry {
    pub atoms: Vec<Atom>,
}

/// Nuclear charge for the elements the basis machinery can reach.
pub fn element_charge(symbol: &str) -> Option<u32> {
    let z = match symbol {
        "H" => 1,
        "He" => 2,
        "Li" => 3,
        "Be" => 4,
        "B" => 5,
        "C" => 6,
        "N" => 7,
        "O" => 8,
        "F" => 9,
        "Ne" => 10,
        _ => return None,
    };
    Some(z)
}

impl Geometry {
    pub fn new(atoms: Vec<Atom>) -> Result<Self> {
        if atoms.is_empty() {
            return Err(Error::InvalidGeometry("no atoms".into()));
        }
        for atom in &atoms {
            if atom.charge < 1 {
                return Err(Error::InvalidGeometry(format!(
                    "atom {} has charge {} < 1",
                    atom.symbol, atom.charge
                )));
            }
            if atom.position.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidGeometry(format!(
                    "atom {} has a non-finite coordinate",
                    atom.symbol
                )));
            }
        }
        Ok(Geometry { atoms })
    }

    pub fn n_atoms(&self) -> usize {
        self.atoms.len()
    }

    /// Total electron count of the neutral molecule.
    pub fn n_electrons(&self) -> usize {
        self.atoms.iter().map(|a| a.charge as usize).sum()
    }

    /// Sum over nuclear pairs Z_A Z_B / |R_A - R_B|, in Hartree.
    pub fn nuclear_repulsion(&self) -> Result<f64> {
        let mut e = 0.0;
        for a in 0..self.atoms.len() {
            for b in (a + 1)..self.atoms.len() {
                let r = distance(self.atoms[a].position, self.atoms[b].position);
                if r < 1e-12 {
                    return Err(Error::CoincidentNuclei(a, b));
                }
                e += (self.atoms[a].charge as f64) * (self.atoms[b].charge as f64) / r;
            }
        }
        Ok(e)
    }
}

pub(crate) fn distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    (dx * dx + dy * dy + dz * dz).sqrt()
}

/// Parse a geometry file: one atom per line, `symbol x y z`, blank lines and
/// `#` comments ignored. Coordinates are interpreted in `unit`.
pub fn parse_geometry(text: &str, unit: LengthUnit) -> Result<Geometry> {
    let mut atoms = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(Error::parse(
                idx + 1,
                format!("expected `symbol x y z`, got {} fields", fields.len()),
            ));
        }
        let symbol = fields[0].to_string();
        let charge = element_charge(&symbol)
            .ok_or_else(|| Error::parse(idx + 1, format!("unknown element `{symbol}`")))?;
        let mut position = [0.0; 3];
        for (k, field) in fields[1..].iter().enumerate() {
            let v: f64 = field
                .parse()
                .map_err(|_| Error::parse(idx + 1, format!("bad coordinate `{field}`")))?;
            if !v.is_finite() {
                return Err(Error::parse(idx + 1, format!("non-finite coordinate `{field}`")));
            }
            position[k] = unit.to_bohr(v);
        }
        atoms.push(Atom {
            symbol,
            charge,
            position,
        });
    }
    Geometry::new(atoms)
}

/// Built-in H2 at the given bond length (Bohr), along z.
pub fn h2(bond: f64) -> Geometry {
    Geometry {
        atoms: vec![
            Atom {
                symbol: "H".into(),
                charge: 1,
                position: [0.0, 0.0, 0.0],
            },
            Atom {
                symbol: "H".into(),
                charge: 1,
                position: [0.0, 0.0, bond],
            },
        ],
    }
}

/// Built-in LiH at the given bond length (Bohr), along z.
pub fn lih(bond: f64) -> Geometry {
    Geometry {
        atoms: vec![
            Atom {
                symbol: "Li".into(),
                charge: 3,
                position: [0.0, 0.0, 0.0],
            },
            Atom {
                symbol: "H".into(),
                charge: 1,
                position: [0.0, 0.0, bond],
            },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repulsion_single_atom_is_zero() {
        let g = Geometry::new(vec![Atom {
            symbol: "H".into(),
            charge: 1,
            position: [0.0, 0.0, 0.0],
        }])
        .unwrap();
        assert_eq!(g.nuclear_repulsion().unwrap(), 0.0);
    }

    #[test]
    fn repulsion_h2() {
        let g = h2(1.4011);
        let e = g.nuclear_repulsion().unwrap();
        assert!((e - 1.0 / 1.4011).abs() < 1e-14);
        assert!((e - 0.71373).abs() < 1e-4);
    }

    #[test]
    fn repulsion_lih_at_3_bohr() {
        let g = lih(3.0);
        assert!((g.nuclear_repulsion().unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn coincident_nuclei_error() {
        let g = h2(0.0);
        assert!(matches!(
            g.nuclear_repulsion(),
            Err(crate::Error::CoincidentNuclei(0, 1))
        ));
    }

    #[test]
    fn parse_geometry_angstrom() {
        let g = parse_geometry("# comment\nH 0 0 0\nH 0 0 0.7414\n", LengthUnit::Angstrom).unwrap();
        assert_eq!(g.n_atoms(), 2);
        assert_eq!(g.n_electrons(), 2);
        assert!((g.atoms[1].position[2] - 0.7414 * ANGSTROM_TO_BOHR).abs() < 1e-12);
    }

    #[test]
    fn parse_geometry_rejects_junk() {
        assert!(parse_geometry("H 0 0\n", LengthUnit::Bohr).is_err());
        assert!(parse_geometry("Xx 0 0 0\n", LengthUnit::Bohr).is_err());
        assert!(parse_geometry("H a b c\n", LengthUnit::Bohr).is_err());
        assert!(parse_geometry("", LengthUnit::Bohr).is_err());
    }
}

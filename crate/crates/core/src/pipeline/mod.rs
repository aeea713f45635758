//! End-to-end scans and scaling reports.

mod report;
mod scaling;
mod scan;
mod solver;

pub use report::{manifest_json, scaling_csv, scan_csv};
pub use scaling::{scaling_report, ScalingReport, ScalingRow};
pub use scan::{run_scan, ScanRow};
pub use solver::EmbeddedSampler;

use std::path::PathBuf;

use crate::anneal::AnnealConfig;
use crate::molint::{self, BasisSet, Geometry, LengthUnit};
use crate::qubitham::Encoding;
use crate::{Error, Result};

/// Which molecule a scan runs on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MoleculeSpec {
    H2,
    LiH,
    /// Fixed geometry from a file; the distance grid does not apply.
    File(PathBuf),
}

impl MoleculeSpec {
    pub fn parse(text: &str) -> MoleculeSpec {
        match text.to_ascii_lowercase().as_str() {
            "h2" => MoleculeSpec::H2,
            "lih" => MoleculeSpec::LiH,
            _ => MoleculeSpec::File(PathBuf::from(text)),
        }
    }

    pub fn label(&self) -> String {
        match self {
            MoleculeSpec::H2 => "H2".to_string(),
            MoleculeSpec::LiH => "LiH".to_string(),
            MoleculeSpec::File(p) => p.display().to_string(),
        }
    }

    /// Geometry at a bond length in Bohr (built-ins) or from the file.
    pub fn geometry(&self, bond_bohr: f64, unit: LengthUnit) -> Result<Geometry> {
        match self {
            MoleculeSpec::H2 => Ok(molint::geometry::h2(bond_bohr)),
            MoleculeSpec::LiH => Ok(molint::geometry::lih(bond_bohr)),
            MoleculeSpec::File(path) => {
                let text = std::fs::read_to_string(path)?;
                molint::parse_geometry(&text, unit)
            }
        }
    }

    /// Default scan grid in Angstrom (paper-style dissociation ranges).
    pub fn default_grid_angstrom(&self) -> (f64, f64) {
        match self {
            MoleculeSpec::H2 => (0.3, 2.5),
            _ => (0.8, 3.0),
        }
    }

    /// Near-equilibrium bond length in Angstrom, used by scaling reports.
    pub fn equilibrium_angstrom(&self) -> f64 {
        match self {
            MoleculeSpec::H2 => 0.7414,
            _ => 1.5949,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverChoice {
    Exact,
    Sa,
}

impl std::str::FromStr for SolverChoice {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "exact" => Ok(SolverChoice::Exact),
            "sa" => Ok(SolverChoice::Sa),
            other => Err(Error::InvalidSpec(format!("unknown solver `{other}`"))),
        }
    }
}

/// Everything a dissociation scan needs.
#[derive(Debug, Clone)]
pub struct ScanSpec {
    pub molecule: MoleculeSpec,
    pub basis: BasisSet,
    pub basis_label: String,
    /// Grid in the input unit; empty means "single point" (geometry files).
    pub distances: Vec<f64>,
    pub unit: LengthUnit,
    pub r: usize,
    pub frozen: Vec<usize>,
    /// None: all non-frozen orbitals stay active.
    pub active: Option<Vec<usize>>,
    pub encoding: Encoding,
    pub taper: bool,
    pub solver: SolverChoice,
    pub anneal: AnnealConfig,
    pub embed_k: usize,
    pub chain_strength: Option<f64>,
    pub solve_embedded: bool,
    pub seed: u64,
    /// Shift-loop improvement threshold (Hartree).
    pub epsilon: f64,
}

impl ScanSpec {
    pub fn validate(&self) -> Result<()> {
        if self.r < 1 {
            return Err(Error::InvalidSpec("r must be >= 1".to_string()));
        }
        if self.embed_k < 1 {
            return Err(Error::InvalidSpec("embed-k must be >= 1".to_string()));
        }
        if !(self.epsilon > 0.0) {
            return Err(Error::InvalidSpec("epsilon must be positive".to_string()));
        }
        match self.molecule {
            MoleculeSpec::File(_) => {
                if !self.distances.is_empty() {
                    return Err(Error::InvalidSpec(
                        "geometry files run at a fixed geometry; drop the distance grid"
                            .to_string(),
                    ));
                }
            }
            _ => {
                if self.distances.is_empty() {
                    return Err(Error::InvalidSpec("empty distance grid".to_string()));
                }
                for pair in self.distances.windows(2) {
                    if pair[1] <= pair[0] {
                        return Err(Error::InvalidSpec(
                            "distance grid must be strictly increasing".to_string(),
                        ));
                    }
                }
                if self.distances.iter().any(|&d| !(d > 0.0)) {
                    return Err(Error::InvalidSpec(
                        "distances must be positive".to_string(),
                    ));
                }
            }
        }
        self.anneal.validate()?;
        Ok(())
    }
}

//! spinchem: electronic structure on classical spin-glass hardware models.
//!
//! The crate compiles small-molecule electronic-structure problems into
//! classical Ising instances and solves them with simulated annealing:
//!
//! 1. [`molint`] computes STO-3G integrals and restricted Hartree-Fock
//!    orbitals, producing molecular-orbital one- and two-particle integrals.
//! 2. [`qubitham`] builds the second-quantized Hamiltonian, maps it to a
//!    qubit Hamiltonian (Jordan-Wigner or Bravyi-Kitaev), tapers qubits that
//!    are fixed in the Hartree-Fock sector, and exactly diagonalizes small
//!    Hamiltonians as the reference.
//! 3. [`isingmap`] applies the r-copy substitution that turns an n-qubit
//!    Hamiltonian into classical energy/norm polynomials over copy-bit and
//!    sign spins, and runs the variational shift loop.
//! 4. [`quad`] reduces arbitrary-degree spin polynomials to 2-local form
//!    with penalty ancillas.
//! 5. [`chimera`] models the Chimera hardware topology and finds minor
//!    embeddings of quadratic models.
//! 6. [`anneal`] solves quadratic spin models exactly (small) or with
//!    simulated annealing, behind one sampler contract.
//! 7. [`pipeline`] orchestrates dissociation scans and qubit-scaling
//!    reports end to end.

pub mod anneal;
pub mod chimera;
pub mod error;
pub mod isingmap;
pub mod molint;
pub mod pipeline;
pub mod quad;
pub mod qubitham;

mod util;

pub use error::{Error, Result};

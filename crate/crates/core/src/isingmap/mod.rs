//! The r-copy mapping from qubit Hamiltonians to classical spin polynomials,
//! plus the variational shift loop.

mod map;
mod poly;
mod vary;

pub use map::{map_to_polynomials, rayleigh_quotient, reconstruct_state, CopyConfig, XiaInstance};
pub use poly::{dump_polynomial, mul_monomials, parse_polynomial, Monomial, SpinPolynomial, SpinVariable};
pub use vary::{
    variational_minimize, variational_minimize_compiled, CompiledXia, ShiftIteration,
    VariationalResult, MAX_SHIFT_ITERATIONS,
};

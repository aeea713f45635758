//! Quadratization of spin polynomials into 2-local Ising/QUBO models.

mod model;
mod reduce;

pub use model::{
    boolean_poly_to_spin, dump_model, parse_model, to_boolean, to_spin, BooleanPolynomial,
    Domain, ModelVariable, QuadraticModel,
};
pub use reduce::{
    apply_plan, lift_solution, plan_reduction, reduce_degree, PenaltyPolicy, ReductionPlan,
    ReductionRecord, Substitution, SubstitutionRecord,
};

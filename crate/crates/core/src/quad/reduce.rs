//! Rosenberg pair substitution: arbitrary-degree boolean polynomials down to
//! quadratic models, minima preserved by penalty ancillas.

use std::collections::{BTreeMap, BTreeSet};

use super::model::{
    to_boolean, BooleanPolynomial, Domain, ModelVariable, QuadraticModel,
};
use crate::isingmap::{SpinPolynomial, SpinVariable};
use crate::{Error, Result};

/// How the penalty weight M is chosen.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PenaltyPolicy {
    /// 1 + sum of |coefficients| of the substituted polynomial: provably
    /// dominates any energy gain from breaking an ancilla.
    SumAbsPlusOne,
    Fixed(f64),
}

impl Default for PenaltyPolicy {
    fn default() -> Self {
        PenaltyPolicy::SumAbsPlusOne
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Substitution {
    pub a: u32,
    pub b: u32,
    pub ancilla: u32,
}

/// The substitution structure for a family of polynomials over a shared
/// variable set. Computing it once and re-applying it with fresh
/// coefficients keeps the variable layout stable across shift-loop
/// iterations.
#[derive(Debug, Clone)]
pub struct ReductionPlan {
    /// Original variables (sorted), then one ancilla per substitution.
    variables: Vec<ModelVariable>,
    n_original: usize,
    substitutions: Vec<Substitution>,
    index_of: BTreeMap<SpinVariable, u32>,
}

impl ReductionPlan {
    pub fn n_total_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn n_ancillas(&self) -> usize {
        self.substitutions.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SubstitutionRecord {
    pub a: u32,
    pub b: u32,
    pub ancilla: u32,
    pub penalty: f64,
}

/// Ordered substitutions with their penalty weights; ancillas always trace
/// back to two parent variables of smaller id.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReductionRecord {
    pub n_original: usize,
    pub substitutions: Vec<SubstitutionRecord>,
}

/// Rewrite one index-set monomial through the substitution sequence.
fn rewrite(monomial: &mut BTreeSet<u32>, subs: &[Substitution]) {
    for s in subs {
        if monomial.len() >= 3 && monomial.contains(&s.a) && monomial.contains(&s.b) {
            monomial.remove(&s.a);
            monomial.remove(&s.b);
            monomial.insert(s.ancilla);
        }
    }
}

/// Plan the pair substitutions for the union support of `polys`: repeatedly
/// replace the most frequent variable pair among degree >= 3 monomials
/// (lexicographic tie-break) until everything is quadratic.
pub fn plan_reduction(polys: &[&BooleanPolynomial]) -> ReductionPlan {
    let mut vars: BTreeSet<SpinVariable> = BTreeSet::new();
    for p in polys {
        vars.extend(p.variables());
    }
    let index_of: BTreeMap<SpinVariable, u32> = vars
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, i as u32))
        .collect();
    let n_original = vars.len();
    let mut variables: Vec<ModelVariable> = vars.iter().map(|&v| ModelVariable::Spin(v)).collect();

    let mut support: BTreeSet<BTreeSet<u32>> = BTreeSet::new();
    for p in polys {
        for (m, _) in p.terms() {
            support.insert(m.iter().map(|v| index_of[v]).collect());
        }
    }

    let mut substitutions = Vec::new();
    let mut next_id = n_original as u32;
    loop {
        let mut counts: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for m in &support {
            if m.len() < 3 {
                continue;
            }
            let idx: Vec<u32> = m.iter().copied().collect();
            for i in 0..idx.len() {
                for j in (i + 1)..idx.len() {
                    *counts.entry((idx[i], idx[j])).or_insert(0) += 1;
                }
            }
        }
        // most frequent pair; BTreeMap order gives the lexicographic tie-break
        let Some((&pair, _)) = counts.iter().max_by(|x, y| {
            x.1.cmp(y.1).then_with(|| y.0.cmp(x.0))
        }) else {
            break;
        };
        let sub = Substitution {
            a: pair.0,
            b: pair.1,
            ancilla: next_id,
        };
        variables.push(ModelVariable::Ancilla(substitutions.len() as u32));
        next_id += 1;

        let mut new_support = BTreeSet::new();
        for m in &support {
            let mut m = m.clone();
            if m.len() >= 3 && m.contains(&sub.a) && m.contains(&sub.b) {
                m.remove(&sub.a);
                m.remove(&sub.b);
                m.insert(sub.ancilla);
            }
            new_support.insert(m);
        }
        support = new_support;
        substitutions.push(sub);
    }

    ReductionPlan {
        variables,
        n_original,
        substitutions,
        index_of,
    }
}

/// Apply a plan to a polynomial whose variables the plan covers, producing
/// the boolean quadratic model with penalties attached.
pub fn apply_plan(
    poly: &BooleanPolynomial,
    plan: &ReductionPlan,
    policy: PenaltyPolicy,
) -> Result<(QuadraticModel, ReductionRecord)> {
    let mut model = QuadraticModel::new(Domain::Boolean, plan.variables.clone());
    model.offset = poly.constant;
    for (m, coeff) in poly.terms() {
        let mut idx: BTreeSet<u32> = BTreeSet::new();
        for v in m {
            let Some(&i) = plan.index_of.get(v) else {
                return Err(Error::ShapeMismatch(format!(
                    "variable {} not covered by the reduction plan",
                    v.name()
                )));
            };
            idx.insert(i);
        }
        rewrite(&mut idx, &plan.substitutions);
        let flat: Vec<u32> = idx.iter().copied().collect();
        match flat.as_slice() {
            [] => model.offset += coeff,
            [i] => model.add_linear(*i, coeff),
            [i, j] => model.add_quadratic(*i, *j, coeff),
            _ => {
                return Err(Error::Mapping(format!(
                    "monomial of degree {} not reduced by the plan",
                    flat.len()
                )))
            }
        }
    }

    let penalty = match policy {
        PenaltyPolicy::Fixed(m) => m,
        PenaltyPolicy::SumAbsPlusOne => {
            1.0 + model.linear.iter().map(|v| v.abs()).sum::<f64>()
                + model.quadratic.values().map(|v| v.abs()).sum::<f64>()
        }
    };

    let mut record = ReductionRecord {
        n_original: plan.n_original,
        substitutions: Vec::with_capacity(plan.substitutions.len()),
    };
    for s in &plan.substitutions {
        // M (x_a x_b - 2 x_a y - 2 x_b y + 3 y)
        model.add_quadratic(s.a, s.b, penalty);
        model.add_quadratic(s.a, s.ancilla, -2.0 * penalty);
        model.add_quadratic(s.b, s.ancilla, -2.0 * penalty);
        model.add_linear(s.ancilla, 3.0 * penalty);
        record.substitutions.push(SubstitutionRecord {
            a: s.a,
            b: s.b,
            ancilla: s.ancilla,
            penalty,
        });
    }
    Ok((model, record))
}

/// Quadratize a spin polynomial: convert to booleans, plan, apply. The
/// returned model is boolean-domain; [`super::model::to_spin`] turns it into
/// the Ising form samplers take.
pub fn reduce_degree(
    poly: &SpinPolynomial,
    policy: PenaltyPolicy,
) -> (QuadraticModel, ReductionRecord) {
    let boolean = to_boolean(poly);
    let plan = plan_reduction(&[&boolean]);
    apply_plan(&boolean, &plan, policy).expect("plan covers its own polynomial")
}

/// Project a model assignment back to the original variables; the flag
/// reports whether every ancilla equals the product of its parents.
/// Inconsistency is data, not failure.
pub fn lift_solution(
    model: &QuadraticModel,
    assignment: &[i8],
    record: &ReductionRecord,
) -> (Vec<i8>, bool) {
    let bit = |v: i8| match model.domain {
        Domain::Boolean => v == 1,
        Domain::Spin => v == -1,
    };
    let mut consistent = true;
    for s in &record.substitutions {
        let want = bit(assignment[s.a as usize]) && bit(assignment[s.b as usize]);
        if bit(assignment[s.ancilla as usize]) != want {
            consistent = false;
        }
    }
    (assignment[..record.n_original].to_vec(), consistent)
}

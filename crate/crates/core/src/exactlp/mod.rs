//! Exact rational linear feasibility.
//!
//! A [`FeasibilitySystem`] collects equalities `row·x = rhs`, inequalities
//! `row·x ≥ rhs` and a set of variables constrained to be non-negative.
//! [`solve_feasibility`] decides it with a phase-one simplex over exact
//! rationals and returns a witness when one exists.

mod rational;
mod simplex;

use std::collections::BTreeSet;

pub use rational::{ParseRationalError, Rational};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        self.coeffs.iter().zip(x).map(|(a, v)| a * v).sum()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeasibilitySystem {
    num_vars: usize,
    equalities: Vec<LinearConstraint>,
    inequalities: Vec<LinearConstraint>,
    nonneg: BTreeSet<usize>,
}

impl FeasibilitySystem {
    pub fn new(num_vars: usize) -> Self {
        FeasibilitySystem {
            num_vars,
            ..Default::default()
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn equalities(&self) -> &[LinearConstraint] {
        &self.equalities
    }

    pub fn inequalities(&self) -> &[LinearConstraint] {
        &self.inequalities
    }

    pub fn nonneg_vars(&self) -> &BTreeSet<usize> {
        &self.nonneg
    }

    pub fn is_nonneg(&self, var: usize) -> bool {
        self.nonneg.contains(&var)
    }

    /// Adds `coeffs·x = rhs`.
    pub fn add_equality(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.equalities.push(LinearConstraint { coeffs, rhs });
        self
    }

    /// Adds `coeffs·x ≥ rhs`.
    pub fn add_inequality(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        self.inequalities.push(LinearConstraint { coeffs, rhs });
        self
    }

    /// Constrains `x[var] ≥ 0`.
    pub fn set_nonneg(&mut self, var: usize) -> &mut Self {
        self.nonneg.insert(var);
        self
    }

    pub fn validate(&self) -> Result<()> {
        for (row, c) in self.equalities.iter().chain(&self.inequalities).enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::RowLength {
                    row,
                    found: c.coeffs.len(),
                    expected: self.num_vars,
                });
            }
        }
        if let Some(&index) = self.nonneg.iter().find(|&&v| v >= self.num_vars) {
            return Err(Error::VariableIndex {
                index,
                num_vars: self.num_vars,
            });
        }
        Ok(())
    }

    /// Exact check of an assignment against every constraint.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && self.equalities.iter().all(|c| c.evaluate(x) == c.rhs)
            && self.inequalities.iter().all(|c| c.evaluate(x) >= c.rhs)
            && self.nonneg.iter().all(|&v| !x[v].is_negative())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }

    pub fn witness(&self) -> Option<&[Rational]> {
        match self {
            Feasibility::Feasible(w) => Some(w),
            Feasibility::Infeasible => None,
        }
    }
}

/// Decides whether `sys` has a solution. Exact: a `Feasible` witness
/// satisfies every constraint under rational arithmetic.
pub fn solve_feasibility(sys: &FeasibilitySystem) -> Result<Feasibility> {
    sys.validate()?;
    let result = simplex::phase_one(sys);
    if let Feasibility::Feasible(w) = &result {
        debug_assert!(sys.is_satisfied_by(w), "simplex produced an invalid witness");
    }
    Ok(result)
}

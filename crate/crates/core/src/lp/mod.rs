//! Exact linear programming over rationals.
//!
//! [`solve_lp`] runs a dense two-phase simplex with Bland's rule, so it
//! terminates on degenerate problems and never rounds. Optimal solutions
//! carry the dual values (shadow prices) of every user constraint.

mod simplex;
pub mod value;
pub mod vertices;

use crate::error::{GameError, Result};
use crate::rational::Rational;

pub use value::{
    game_value, game_value_with_ties, optimal_strategy_vertices, optimal_strategy_vertices_capped,
    GameValueResult, Side, DEFAULT_TIE_CAP,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// `optimize objective . x` subject to linear constraints and per-variable bounds.
///
/// Variables start with bounds `[0, +inf)`; use [`LinearProgram::set_bounds`]
/// or [`LinearProgram::set_free`] to change them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub lower: Vec<Option<Rational>>,
    pub upper: Vec<Option<Rational>>,
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: Vec<Rational>) -> Self {
        let n = objective.len();
        LinearProgram {
            sense,
            objective,
            constraints: Vec::new(),
            lower: vec![Some(Rational::from_integer(0.into())); n],
            upper: vec![None; n],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, relation: Relation, rhs: Rational) -> &mut Self {
        self.constraints.push(Constraint { coeffs, relation, rhs });
        self
    }

    pub fn set_bounds(&mut self, var: usize, lower: Option<Rational>, upper: Option<Rational>) -> &mut Self {
        self.lower[var] = lower;
        self.upper[var] = upper;
        self
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.set_bounds(var, None, None)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if n == 0 {
            return Err(GameError::Dimension("linear program without variables".into()));
        }
        if self.lower.len() != n || self.upper.len() != n {
            return Err(GameError::Dimension("bound vectors do not match the variable count".into()));
        }
        if let Some((i, c)) = self.constraints.iter().enumerate().find(|(_, c)| c.coeffs.len() != n) {
            return Err(GameError::Dimension(format!(
                "constraint {} has {} coefficients, expected {n}",
                i + 1,
                c.coeffs.len()
            )));
        }
        Ok(())
    }
}

/// An optimal vertex with its certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub values: Vec<Rational>,
    pub objective: Rational,
    /// Shadow price of each constraint: the rate of change of the optimal
    /// objective per unit increase of that constraint's right-hand side.
    pub duals: Vec<Rational>,
    /// Every nonbasic column had a strictly positive reduced cost, so `values`
    /// is the only optimal point. `false` means ties are possible, not certain.
    pub unique: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal(LpSolution),
    Infeasible,
    Unbounded,
}

impl LpOutcome {
    pub fn optimal(self) -> Option<LpSolution> {
        match self {
            LpOutcome::Optimal(s) => Some(s),
            _ => None,
        }
    }
}

pub fn solve_lp(lp: &LinearProgram) -> Result<LpOutcome> {
    lp.validate()?;
    Ok(simplex::solve(lp))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dot, int, rat};
    use itertools::Itertools;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};

    #[test]
    fn single_bounded_variable() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![int(1)]);
        lp.add_constraint(vec![int(1)], Relation::Le, int(3));
        let sol = solve_lp(&lp).unwrap().optimal().unwrap();
        assert_eq!(sol.values, vec![int(3)]);
        assert_eq!(sol.objective, int(3));
        assert_eq!(sol.duals, vec![int(1)]);
    }

    #[test]
    fn contradictory_equalities_are_infeasible() {
        let mut lp = LinearProgram::new(Sense::Minimize, vec![int(0)]);
        lp.add_constraint(vec![int(1)], Relation::Eq, int(1));
        lp.add_constraint(vec![int(1)], Relation::Eq, int(2));
        assert_eq!(solve_lp(&lp).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_direction_is_reported() {
        let mut lp = LinearProgram::new(Sense::Maximize, vec![int(1), int(1)]);
        lp.add_constraint(vec![int(1), int(-1)], Relation::Le, int(2));
        assert_eq!(solve_lp(&lp).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn free_and_bounded_variables() {
        // min x - y with x free, -2 <= x, y <= 5/2, y in [1, 4], x + y >= -1
        let mut lp = LinearProgram::new(Sense::Minimize, vec![int(1), int(-1)]);
        lp.set_free(0);
        lp.set_bounds(1, Some(int(1)), Some(int(4)));
        lp.add_constraint(vec![int(1), int(0)], Relation::Ge, int(-2));
        lp.add_constraint(vec![int(0), int(1)], Relation::Le, rat(5, 2));
        lp.add_constraint(vec![int(1), int(1)], Relation::Ge, int(-1));
        let sol = solve_lp(&lp).unwrap().optimal().unwrap();
        assert_eq!(sol.values, vec![int(-2), rat(5, 2)]);
        assert_eq!(sol.objective, rat(-9, 2));
    }

    #[test]
    fn redundant_equalities_are_tolerated() {
        let mut lp = LinearProgram::new(Sense::Minimize, vec![int(1), int(2)]);
        lp.add_constraint(vec![int(1), int(1)], Relation::Eq, int(1));
        lp.add_constraint(vec![int(2), int(2)], Relation::Eq, int(2));
        let sol = solve_lp(&lp).unwrap().optimal().unwrap();
        assert_eq!(sol.values, vec![int(1), int(0)]);
        assert!(sol.unique);
    }

    #[test]
    fn degenerate_cycling_example_terminates() {
        // Beale's example, which cycles under the textbook largest-coefficient rule.
        let mut lp = LinearProgram::new(Sense::Minimize, vec![rat(-3, 4), int(150), rat(-1, 50), int(6)]);
        lp.add_constraint(vec![rat(1, 4), int(-60), rat(-1, 25), int(9)], Relation::Le, int(0));
        lp.add_constraint(vec![rat(1, 2), int(-90), rat(-1, 50), int(3)], Relation::Le, int(0));
        lp.add_constraint(vec![int(0), int(0), int(1), int(0)], Relation::Le, int(1));
        let sol = solve_lp(&lp).unwrap().optimal().unwrap();
        assert_eq!(sol.objective, rat(-1, 20));
    }

    #[test]
    fn malformed_program_is_a_dimension_error() {
        let mut lp = LinearProgram::new(Sense::Minimize, vec![int(1), int(1)]);
        lp.add_constraint(vec![int(1)], Relation::Le, int(1));
        assert!(matches!(solve_lp(&lp), Err(GameError::Dimension(_))));
        assert!(matches!(solve_lp(&LinearProgram::new(Sense::Minimize, vec![])), Err(GameError::Dimension(_))));
    }

    /// Best objective over all basic feasible solutions of `A x <= b, x >= 0`.
    fn vertex_oracle(obj: &[Rational], rows: &[(Vec<Rational>, Rational)], sense: Sense) -> Option<Rational> {
        let n = obj.len();
        // all inequalities as a.x <= b, including -x_i <= 0
        let mut all: Vec<(Vec<Rational>, Rational)> = rows.to_vec();
        for i in 0..n {
            let mut a = vec![Rational::zero(); n];
            a[i] = int(-1);
            all.push((a, Rational::zero()));
        }
        let mut best: Option<Rational> = None;
        for subset in (0..all.len()).combinations(n) {
            let a: Vec<Vec<Rational>> = subset.iter().map(|&i| all[i].0.clone()).collect();
            let b: Vec<Rational> = subset.iter().map(|&i| all[i].1.clone()).collect();
            let Some(x) = crate::lp::vertices::solve_square(a, b) else { continue };
            if all.iter().all(|(row, rhs)| &dot(row, &x) <= rhs) {
                let v = dot(obj, &x);
                best = Some(match (best, sense) {
                    (None, _) => v,
                    (Some(b), Sense::Maximize) => b.max(v),
                    (Some(b), Sense::Minimize) => b.min(v),
                });
            }
        }
        best
    }

    #[test]
    fn random_bounded_programs_match_vertex_enumeration() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for trial in 0..60 {
            let n = rng.gen_range(1..=5);
            let m = rng.gen_range(1..=5);
            let sense = if trial % 2 == 0 { Sense::Maximize } else { Sense::Minimize };
            let obj: Vec<Rational> = (0..n).map(|_| rat(rng.gen_range(-6..7), rng.gen_range(1..4))).collect();
            let mut rows: Vec<(Vec<Rational>, Rational)> = (0..m)
                .map(|_| ((0..n).map(|_| rat(rng.gen_range(-4..6), rng.gen_range(1..3))).collect(), int(rng.gen_range(0..8))))
                .collect();
            // a box keeps every instance bounded
            rows.push((vec![int(1); n], int(10)));
            let mut lp = LinearProgram::new(sense, obj.clone());
            for (a, b) in &rows {
                lp.add_constraint(a.clone(), Relation::Le, b.clone());
            }
            let sol = solve_lp(&lp).unwrap().optimal().expect("origin is feasible and the box bounds it");
            assert_eq!(Some(sol.objective.clone()), vertex_oracle(&obj, &rows, sense), "trial {trial}");
            // zero duality gap: with x >= 0 and only user rows, obj = duals . b
            let dual_obj: Rational = sol.duals.iter().zip(&rows).map(|(y, (_, b))| y * b).sum();
            assert_eq!(dual_obj, sol.objective, "trial {trial}");
            for (c, (a, b)) in rows.iter().enumerate() {
                assert!(&dot(a, &sol.values) <= b, "row {c} violated");
            }
        }
    }
}

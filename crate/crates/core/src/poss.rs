//! Security levels and Pareto-optimal security strategies.
//!
//! In a game where player II may answer each criterion separately, player I's
//! guarantee against `x` is the vector of per-criterion column maxima of
//! `x A(l)`. A strategy is Pareto-optimal secure when no other strategy lowers
//! that vector in one criterion without raising it in another. Such strategies
//! are exactly the optimal solutions of
//!
//! ```text
//! min  sum_l alpha_l v_l   s.t.  (x A(l))_j <= v_l  for all l, j,   x in simplex
//! ```
//!
//! for strictly positive `alpha`.

use num_traits::Zero;

use crate::error::{GameError, Result};
use crate::game::{MultiGameD2, ScalarGame};
use crate::grid::{simplex_grid, weight_grid};
use crate::lp::value::mirror;
use crate::lp::vertices::{vertices, Polytope};
use crate::lp::{solve_lp, LinearProgram, LpOutcome, Relation, Sense};
use crate::minimax::{guard_grid, MinimaxSweepConfig, OracleConfig};
use crate::payoff::{pareto_min, PayoffPoint, PayoffSet, PayoffVector};
use crate::rational::{int, Rational};
use crate::strategy::{MixedStrategy, StrategyTupleII, WeightVector};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PossResult {
    pub x_star: MixedStrategy,
    /// Security levels of `x_star`.
    pub payoff: PayoffVector,
    pub alpha: WeightVector,
}

impl PossResult {
    pub fn to_point(&self) -> PayoffPoint {
        PayoffPoint { payoff: self.payoff.clone(), strategy: Some(self.x_star.clone()), alpha: Some(self.alpha.clone()) }
    }
}

/// Optimal solution of the scalarized program with its dual certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PossLpSolution {
    pub x: MixedStrategy,
    pub levels: Vec<Rational>,
    pub objective: Rational,
    /// `mu[l][j] >= 0` on the constraint `(x A(l))_j <= v_l`; row `l` sums to `alpha_l`.
    pub column_duals: Vec<Vec<Rational>>,
    pub unique: bool,
}

/// `max_j (x A(l))_j` for each criterion.
pub fn security_levels(g: &MultiGameD2, x: &MixedStrategy) -> Result<PayoffVector> {
    if x.len() != g.rows() {
        return Err(GameError::Dimension(format!(
            "player I strategy has length {}, game has {} rows",
            x.len(),
            g.rows()
        )));
    }
    g.matrices()
        .iter()
        .map(|a| Ok(a.left_mul(x.as_slice())?.into_iter().max().expect("nonempty matrix")))
        .collect::<Result<Vec<_>>>()
        .map(PayoffVector::new)
}

fn check_alpha(g: &MultiGameD2, alpha: &WeightVector) -> Result<()> {
    if alpha.len() != g.criteria() {
        return Err(GameError::Weight(format!("{} weights for {} criteria", alpha.len(), g.criteria())));
    }
    Ok(())
}

/// Variables `x_1..x_m, v_1..v_k`; constraint rows ordered by criterion then column, simplex row last.
fn scalarized_program(g: &MultiGameD2, alpha: &WeightVector) -> LinearProgram {
    security_program(g, alpha.as_slice())
}

/// `min level_weights . v` over strategies `x` and levels `v >= ` the security levels of `x`.
fn security_program(g: &MultiGameD2, level_weights: &[Rational]) -> LinearProgram {
    let (m, k) = (g.rows(), g.criteria());
    let mut objective = vec![Rational::zero(); m + k];
    for (l, a) in level_weights.iter().enumerate() {
        objective[m + l] = a.clone();
    }
    let mut lp = LinearProgram::new(Sense::Minimize, objective);
    for l in 0..k {
        lp.set_free(m + l);
    }
    for (l, a) in g.matrices().iter().enumerate() {
        for j in 0..a.cols() {
            let mut row = a.column(j);
            row.resize(m + k, Rational::zero());
            row[m + l] = int(-1);
            lp.add_constraint(row, Relation::Le, Rational::zero());
        }
    }
    let mut simplex_row = vec![int(1); m];
    simplex_row.resize(m + k, Rational::zero());
    lp.add_constraint(simplex_row, Relation::Eq, int(1));
    lp
}

/// Smallest security level in criterion `target` over strategies whose other
/// levels respect `caps`; `None` when no strategy does.
pub fn least_security_level(g: &MultiGameD2, target: usize, caps: &[Option<Rational>]) -> Result<Option<Rational>> {
    let (m, k) = (g.rows(), g.criteria());
    if target >= k || caps.len() != k {
        return Err(GameError::Dimension(format!("target {target} and {} caps for {k} criteria", caps.len())));
    }
    let mut weights = vec![Rational::zero(); k];
    weights[target] = int(1);
    let mut lp = security_program(g, &weights);
    for (l, cap) in caps.iter().enumerate() {
        lp.set_bounds(m + l, None, cap.clone());
    }
    match solve_lp(&lp)? {
        LpOutcome::Optimal(sol) => Ok(Some(sol.objective)),
        LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => Err(GameError::Solver("security levels are bounded below, program says unbounded".into())),
    }
}

/// Solves the scalarized program exactly and checks its certificate.
pub fn poss_lp(g: &MultiGameD2, alpha: &WeightVector) -> Result<PossLpSolution> {
    check_alpha(g, alpha)?;
    let m = g.rows();
    let sol = match solve_lp(&scalarized_program(g, alpha))? {
        LpOutcome::Optimal(sol) => sol,
        other => return Err(GameError::Solver(format!("scalarized security program reported {other:?}"))),
    };
    let x = MixedStrategy::new(sol.values[..m].to_vec())
        .map_err(|e| GameError::Solver(format!("security program left the simplex: {e}")))?;
    let levels = sol.values[m..].to_vec();
    let mut column_duals = Vec::with_capacity(g.criteria());
    let mut offset = 0;
    for (l, a) in g.matrices().iter().enumerate() {
        let mu: Vec<Rational> = sol.duals[offset..offset + a.cols()].iter().map(|d| -d).collect();
        offset += a.cols();
        let total: Rational = mu.iter().sum();
        if mu.iter().any(|v| v < &Rational::zero()) || total != alpha.as_slice()[l] {
            return Err(GameError::Solver(format!("dual block {} sums to {total}, expected {}", l + 1, alpha.as_slice()[l])));
        }
        column_duals.push(mu);
    }
    Ok(PossLpSolution { x, levels, objective: sol.objective, column_duals, unique: sol.unique })
}

fn certified(g: &MultiGameD2, alpha: &WeightVector, x: MixedStrategy, objective: &Rational) -> Result<PossResult> {
    let payoff = security_levels(g, &x)?;
    let weighted = payoff.weighted(alpha);
    if &weighted != objective {
        return Err(GameError::Solver(format!(
            "security levels of the optimal strategy weigh {weighted}, program optimum is {objective}"
        )));
    }
    Ok(PossResult { x_star: x, payoff, alpha: alpha.clone() })
}

/// One Pareto-optimal security strategy for the weights `alpha`.
pub fn poss_weighted(g: &MultiGameD2, alpha: &WeightVector) -> Result<PossResult> {
    let sol = poss_lp(g, alpha)?;
    let r = certified(g, alpha, sol.x.clone(), &sol.objective)?;
    if r.payoff.as_slice() != sol.levels.as_slice() {
        return Err(GameError::Solver(format!("program levels {:?} differ from security levels {:?}", sol.levels, r.payoff)));
    }
    Ok(r)
}

/// Every optimal vertex of the scalarized program (up to `cap`), Pareto-minimal payoffs kept.
pub fn poss_weighted_ties(g: &MultiGameD2, alpha: &WeightVector, cap: usize) -> Result<Vec<PossResult>> {
    let sol = poss_lp(g, alpha)?;
    if sol.unique {
        return Ok(vec![certified(g, alpha, sol.x, &sol.objective)?]);
    }
    let (m, k) = (g.rows(), g.criteria());
    let dim = m + k;
    let mut simplex_row = vec![int(1); m];
    simplex_row.resize(dim, Rational::zero());
    let mut objective_row = vec![Rational::zero(); m];
    objective_row.extend(alpha.as_slice().iter().cloned());
    let mut poly = Polytope {
        dim,
        equalities: vec![(simplex_row, int(1)), (objective_row, sol.objective.clone())],
        inequalities: Vec::new(),
    };
    for (l, a) in g.matrices().iter().enumerate() {
        for j in 0..a.cols() {
            let mut row = a.column(j);
            row.resize(dim, Rational::zero());
            row[m + l] = int(-1);
            poly.inequalities.push((row, Rational::zero()));
        }
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); dim];
        row[i] = int(-1);
        poly.inequalities.push((row, Rational::zero()));
    }
    let mut results = Vec::new();
    for v in vertices(&poly, cap).vertices {
        results.push(certified(g, alpha, MixedStrategy::new(v[..m].to_vec())?, &sol.objective)?);
    }
    if results.is_empty() {
        return Err(GameError::Solver("optimal face of the security program has no vertices".into()));
    }
    let kept = pareto_min(results.iter().map(PossResult::to_point).collect())?;
    Ok(kept
        .into_points()
        .into_iter()
        .map(|p| PossResult {
            x_star: p.strategy.expect("annotated"),
            payoff: p.payoff,
            alpha: p.alpha.expect("annotated"),
        })
        .collect())
}

/// Pareto-optimal security payoffs reached over the weight grid, annotated with `x*` and `alpha`.
pub fn poss_sweep(g: &MultiGameD2, cfg: &MinimaxSweepConfig) -> Result<PayoffSet> {
    cfg.validate(g.criteria())?;
    let mut union = Vec::new();
    for alpha in weight_grid(g.criteria(), cfg.weight_grid_resolution)? {
        if cfg.enumerate_ties {
            union.extend(poss_weighted_ties(g, &alpha, cfg.tie_cap)?.iter().map(PossResult::to_point));
        } else {
            union.push(poss_weighted(g, &alpha)?.to_point());
        }
    }
    pareto_min(union)
}

/// Pareto-minimal security levels over the x-grid, annotated with `x`.
pub fn poss_oracle(g: &MultiGameD2, cfg: &OracleConfig) -> Result<PayoffSet> {
    cfg.validate()?;
    guard_grid(g.rows(), cfg.x_grid_resolution)?;
    let mut points = Vec::new();
    for x in simplex_grid(g.rows(), cfg.x_grid_resolution)? {
        points.push(PayoffPoint { payoff: security_levels(g, &x)?, strategy: Some(x), alpha: None });
    }
    pareto_min(points)
}

/// Player II's guarantee per criterion: `min_i (A(l) y(l))_i`.
pub fn player_two_security_levels(g: &MultiGameD2, y: &StrategyTupleII) -> Result<PayoffVector> {
    if y.blocks().len() != g.criteria() || y.block_lengths() != g.column_counts() {
        return Err(GameError::Dimension(format!(
            "strategy tuple shape {:?} does not match column counts {:?}",
            y.block_lengths(),
            g.column_counts()
        )));
    }
    g.matrices()
        .iter()
        .zip(y.blocks())
        .map(|(a, b)| Ok(a.right_mul(b.as_slice())?.into_iter().min().expect("nonempty matrix")))
        .collect::<Result<Vec<_>>>()
        .map(PayoffVector::new)
}

/// Player II's Pareto-optimal security strategy and payoff.
///
/// Player II's guarantees decouple across criteria, so the optimum is unique in
/// payoff: criterion `l` is solved as player I of `-A(l)^T`.
pub fn player_two_poss(g: &MultiGameD2) -> Result<(StrategyTupleII, PayoffVector)> {
    let mut blocks = Vec::with_capacity(g.criteria());
    let mut levels = Vec::with_capacity(g.criteria());
    for a in g.matrices() {
        let mirrored = MultiGameD2::new(vec![mirror(a)])?;
        let r = poss_weighted(&mirrored, &WeightVector::uniform(1))?;
        levels.push(-r.payoff.get(0).clone());
        blocks.push(r.x_star);
    }
    Ok((StrategyTupleII::new(blocks)?, PayoffVector::new(levels)))
}

/// The one-criterion game `[A]` as a multicriteria game.
pub fn single(a: &ScalarGame) -> MultiGameD2 {
    MultiGameD2::new(vec![a.clone()]).expect("one matrix is always a valid game")
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::lp::game_value;
    use crate::minimax::lipschitz_slack;
    use crate::payoff::payoff_d2;
    use crate::rational::rat;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    pub(crate) fn duopoly() -> MultiGameD2 {
        MultiGameD2::new(vec![
            ScalarGame::from_ints(&[&[0, -1], &[1, 0]]).unwrap(),
            ScalarGame::new(vec![vec![int(-2), int(0), rat(1, 2)], vec![int(-1), int(0), int(1)]]).unwrap(),
        ])
        .unwrap()
    }

    fn crossed() -> MultiGameD2 {
        MultiGameD2::new(vec![
            ScalarGame::from_ints(&[&[1, 0]]).unwrap(),
            ScalarGame::from_ints(&[&[0, 1]]).unwrap(),
        ])
        .unwrap()
    }

    fn pv(values: Vec<Rational>) -> PayoffVector {
        PayoffVector::new(values)
    }

    #[test]
    fn least_levels_on_duopoly() {
        let g = duopoly();
        let none = [None, None];
        assert_eq!(least_security_level(&g, 0, &none).unwrap(), Some(int(0)));
        assert_eq!(least_security_level(&g, 1, &none).unwrap(), Some(rat(1, 2)));
        assert_eq!(least_security_level(&g, 1, &[Some(int(0)), None]).unwrap(), Some(rat(1, 2)));
        assert_eq!(least_security_level(&g, 0, &[None, Some(rat(1, 4))]).unwrap(), None);
        assert!(least_security_level(&g, 2, &none).is_err());
    }

    #[test]
    fn security_levels_by_hand() {
        assert_eq!(security_levels(&crossed(), &MixedStrategy::pure(1, 0)).unwrap(), pv(vec![int(1), int(1)]));
        assert_eq!(security_levels(&duopoly(), &MixedStrategy::pure(2, 0)).unwrap(), pv(vec![int(0), rat(1, 2)]));
        assert!(matches!(security_levels(&duopoly(), &MixedStrategy::pure(3, 0)), Err(GameError::Dimension(_))));
    }

    #[test]
    fn security_levels_bound_every_answer() {
        let g = duopoly();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut random_strategy = |n: usize| {
            let w: Vec<i64> = (0..n).map(|_| rng.gen_range(0..6)).collect();
            let w = if w.iter().all(|&v| v == 0) { vec![1; n] } else { w };
            let total: i64 = w.iter().sum();
            MixedStrategy::new(w.iter().map(|&v| rat(v, total)).collect()).unwrap()
        };
        for _ in 0..100 {
            let x = random_strategy(2);
            let levels = security_levels(&g, &x).unwrap();
            for _ in 0..10 {
                let y = StrategyTupleII::new(vec![random_strategy(2), random_strategy(3)]).unwrap();
                assert!(payoff_d2(&g, &x, &y).unwrap().le(&levels));
            }
        }
    }

    #[test]
    fn crossed_game_has_one_secure_payoff() {
        let g = crossed();
        for alpha in weight_grid(2, 9).unwrap() {
            let r = poss_weighted(&g, &alpha).unwrap();
            assert_eq!(r.x_star, MixedStrategy::pure(1, 0));
            assert_eq!(r.payoff, pv(vec![int(1), int(1)]));
        }
        for r in [4, 8, 16] {
            let set = poss_sweep(&g, &MinimaxSweepConfig::for_criteria(2).with_resolution(r)).unwrap();
            assert_eq!(set.payoffs(), vec![pv(vec![int(1), int(1)])]);
        }
        assert_eq!(poss_oracle(&g, &OracleConfig::new(5, 1)).unwrap().payoffs(), vec![pv(vec![int(1), int(1)])]);
    }

    #[test]
    fn one_criterion_is_the_game_value() {
        let a = ScalarGame::from_ints(&[&[3, -2, 0], &[-1, 4, 1]]).unwrap();
        let r = poss_weighted(&single(&a), &WeightVector::uniform(1)).unwrap();
        let v = game_value(&a).unwrap().value;
        assert_eq!(r.payoff, pv(vec![v.clone()]));
        assert_eq!(a.left_mul(r.x_star.as_slice()).unwrap().into_iter().max().unwrap(), v);
        let set = poss_sweep(&single(&a), &MinimaxSweepConfig::for_criteria(1)).unwrap();
        assert_eq!(set.payoffs(), vec![pv(vec![v])]);
    }

    #[test]
    fn duopoly_weighted_against_grid() {
        let g = duopoly();
        let alpha = WeightVector::uniform(2);
        let sol = poss_lp(&g, &alpha).unwrap();
        let grid_best = simplex_grid(2, 100)
            .unwrap()
            .iter()
            .map(|x| security_levels(&g, x).unwrap().weighted(&alpha))
            .min()
            .unwrap();
        assert!(grid_best >= sol.objective);
        assert!(&grid_best - &sol.objective <= lipschitz_slack(&g.max_abs_entry(), 100));
        for (l, mu) in sol.column_duals.iter().enumerate() {
            assert_eq!(mu.iter().sum::<Rational>(), alpha.as_slice()[l]);
        }
    }

    #[test]
    fn duopoly_oracle_half_grid() {
        let set = poss_oracle(&duopoly(), &OracleConfig::new(2, 1)).unwrap();
        assert_eq!(set.payoffs(), vec![pv(vec![int(0), rat(1, 2)])]);
    }

    #[test]
    fn duplicate_criteria_collapse_to_the_diagonal() {
        let a = ScalarGame::from_ints(&[&[2, -1], &[-3, 4]]).unwrap();
        let g = MultiGameD2::new(vec![a.clone(), a.clone()]).unwrap();
        let cfg = OracleConfig::new(20, 1);
        let v = simplex_grid(2, 20)
            .unwrap()
            .iter()
            .map(|x| a.left_mul(x.as_slice()).unwrap().into_iter().max().unwrap())
            .min()
            .unwrap();
        assert_eq!(poss_oracle(&g, &cfg).unwrap().payoffs(), vec![pv(vec![v.clone(), v])]);
    }

    #[test]
    fn ties_are_expanded() {
        // both rows are optimal for every weight; their security vectors differ
        let g = MultiGameD2::new(vec![
            ScalarGame::from_ints(&[&[0], &[1]]).unwrap(),
            ScalarGame::from_ints(&[&[1], &[0]]).unwrap(),
        ])
        .unwrap();
        let ties = poss_weighted_ties(&g, &WeightVector::uniform(2), 256).unwrap();
        let payoffs: Vec<PayoffVector> = ties.iter().map(|r| r.payoff.clone()).collect();
        assert_eq!(payoffs, vec![pv(vec![int(0), int(1)]), pv(vec![int(1), int(0)])]);
    }

    #[test]
    fn player_two_uses_each_criterion_value() {
        let g = duopoly();
        let (y, levels) = player_two_poss(&g).unwrap();
        let expected: Vec<Rational> = g.matrices().iter().map(|a| game_value(a).unwrap().value).collect();
        assert_eq!(levels, pv(expected));
        assert_eq!(player_two_security_levels(&g, &y).unwrap(), levels);
    }

    fn arb_game() -> impl Strategy<Value = MultiGameD2> {
        (1usize..4, 1usize..4, proptest::collection::vec(1usize..4, 3)).prop_flat_map(|(k, m, ns)| {
            proptest::collection::vec(-6i64..7, k * m * 3).prop_map(move |cells| {
                MultiGameD2::new(
                    (0..k)
                        .map(|l| ScalarGame::from_fn(m, ns[l], |i, j| int(cells[(l * m + i) * 3 + j])).unwrap())
                        .collect(),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn sweep_points_are_certified(g in arb_game()) {
            let cfg = MinimaxSweepConfig::for_criteria(g.criteria()).with_resolution(6.max(g.criteria() as u32));
            for p in poss_sweep(&g, &cfg).unwrap().points() {
                let alpha = p.alpha.as_ref().unwrap();
                let x = p.strategy.as_ref().unwrap();
                prop_assert_eq!(&security_levels(&g, x).unwrap(), &p.payoff);
                prop_assert_eq!(p.payoff.weighted(alpha), poss_lp(&g, alpha).unwrap().objective);
            }
        }

        #[test]
        fn no_grid_strategy_beats_a_swept_one(g in arb_game()) {
            let cfg = MinimaxSweepConfig::for_criteria(g.criteria()).with_resolution(6.max(g.criteria() as u32));
            let swept = poss_sweep(&g, &cfg).unwrap();
            let oracle = poss_oracle(&g, &OracleConfig::new(12, 1)).unwrap();
            for s in swept.points() {
                for o in oracle.points() {
                    prop_assert!(!o.payoff.strictly_dominates_min(&s.payoff));
                }
            }
        }
    }
}

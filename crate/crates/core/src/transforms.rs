//! Game constructions indexed by column tuples.
//!
//! A column tuple `c = (c(1), ..., c(k))` picks one column per criterion.
//! Tuples are always laid out in lexicographic order with the last index
//! varying fastest.

use itertools::Itertools;
use num_traits::{One, Zero};

use crate::error::{GameError, Result};
use crate::game::{MultiGameD1, MultiGameD2, ScalarGame};
use crate::lp::game_value;
use crate::poss::poss_lp;
use crate::rational::{dot, Rational};
use crate::strategy::{MixedStrategy, StrategyTupleII, WeightVector};

pub const DEFAULT_SIZE_CAP: u128 = 1_000_000;

fn tuple_count(ns: &[usize]) -> u128 {
    ns.iter().map(|&n| n as u128).product()
}

fn guard(ns: &[usize], cap: u128) -> Result<()> {
    let required = tuple_count(ns);
    if required > cap {
        return Err(GameError::Size { required, cap });
    }
    Ok(())
}

/// Every column tuple for the given column counts, lexicographically.
pub fn column_tuples(ns: &[usize]) -> Vec<Vec<usize>> {
    ns.iter().map(|&n| 0..n).multi_cartesian_product().collect()
}

fn common_rows(matrices: &[ScalarGame]) -> Result<usize> {
    let first = matrices.first().ok_or_else(|| GameError::Dimension("no matrices given".into()))?;
    if let Some((l, a)) = matrices.iter().enumerate().find(|(_, a)| a.rows() != first.rows()) {
        return Err(GameError::Dimension(format!(
            "matrix {} has {} rows, expected {}",
            l + 1,
            a.rows(),
            first.rows()
        )));
    }
    Ok(first.rows())
}

/// `M(w_1 A(1), ..., w_k A(k))`: entry `(i, c)` is `sum_l w_l A(l)[i, c(l)]`.
///
/// Without weights every matrix enters with weight one.
pub fn amalgamate(matrices: &[ScalarGame], weights: Option<&[Rational]>) -> Result<ScalarGame> {
    amalgamate_with_cap(matrices, weights, DEFAULT_SIZE_CAP)
}

pub fn amalgamate_with_cap(matrices: &[ScalarGame], weights: Option<&[Rational]>, cap: u128) -> Result<ScalarGame> {
    let m = common_rows(matrices)?;
    if let Some(w) = weights {
        if w.len() != matrices.len() {
            return Err(GameError::Dimension(format!("{} weights for {} matrices", w.len(), matrices.len())));
        }
    }
    let ns: Vec<usize> = matrices.iter().map(ScalarGame::cols).collect();
    guard(&ns, cap)?;
    let scaled: Vec<ScalarGame> = match weights {
        Some(w) => matrices.iter().zip(w).map(|(a, w)| a.scaled(w)).collect(),
        None => matrices.to_vec(),
    };
    let tuples = column_tuples(&ns);
    ScalarGame::from_fn(m, tuples.len(), |i, c| {
        tuples[c].iter().zip(&scaled).map(|(&j, a)| a.get(i, j)).sum()
    })
}

/// The `(prod n_l)`-criteria game whose criterion `c` is the `m x k` matrix
/// with columns `A(1)[., c(1)], ..., A(k)[., c(k)]`.
pub fn em_construct(g: &MultiGameD2) -> Result<MultiGameD1> {
    em_construct_with_cap(g, DEFAULT_SIZE_CAP)
}

pub fn em_construct_with_cap(g: &MultiGameD2, cap: u128) -> Result<MultiGameD1> {
    let ns = g.column_counts();
    guard(&ns, cap)?;
    let criteria = column_tuples(&ns)
        .into_iter()
        .map(|c| ScalarGame::from_fn(g.rows(), g.criteria(), |i, l| g.matrix(l).get(i, c[l]).clone()))
        .collect::<Result<Vec<_>>>()?;
    MultiGameD1::new(criteria)
}

/// `A_bar(l)[i, c] = A(l)[i, c(l)]`: one shared column set for every criterion.
pub fn product_game(g: &MultiGameD2) -> Result<MultiGameD1> {
    product_game_with_cap(g, DEFAULT_SIZE_CAP)
}

pub fn product_game_with_cap(g: &MultiGameD2, cap: u128) -> Result<MultiGameD1> {
    let ns = g.column_counts();
    guard(&ns, cap)?;
    let tuples = column_tuples(&ns);
    let criteria = (0..g.criteria())
        .map(|l| ScalarGame::from_fn(g.rows(), tuples.len(), |i, c| g.matrix(l).get(i, tuples[c][l]).clone()))
        .collect::<Result<Vec<_>>>()?;
    MultiGameD1::new(criteria)
}

/// The product measure `y_bar[c] = prod_l y(l)[c(l)]`.
pub fn strategy_product(y: &StrategyTupleII) -> Result<MixedStrategy> {
    let ns = y.block_lengths();
    guard(&ns, DEFAULT_SIZE_CAP)?;
    let cells: Vec<Rational> = column_tuples(&ns)
        .iter()
        .map(|c| c.iter().enumerate().map(|(l, &j)| y.block(l).as_slice()[j].clone()).product())
        .collect();
    MixedStrategy::new(cells).map_err(|e| GameError::Solver(format!("product measure is not a distribution: {e}")))
}

/// Blockwise marginals of a distribution over column tuples.
pub fn strategy_marginal(y_bar: &MixedStrategy, ns: &[usize]) -> Result<StrategyTupleII> {
    if ns.is_empty() || ns.contains(&0) {
        return Err(GameError::Dimension(format!("invalid column counts {ns:?}")));
    }
    let required = tuple_count(ns);
    if required != y_bar.len() as u128 {
        return Err(GameError::Dimension(format!(
            "distribution has {} cells, column counts {ns:?} need {required}",
            y_bar.len()
        )));
    }
    let mut blocks: Vec<Vec<Rational>> = ns.iter().map(|&n| vec![Rational::zero(); n]).collect();
    for (c, p) in column_tuples(ns).iter().zip(y_bar.as_slice()) {
        for (l, &j) in c.iter().enumerate() {
            blocks[l][j] += p;
        }
    }
    StrategyTupleII::new(blocks.into_iter().map(MixedStrategy::new).collect::<Result<Vec<_>>>()?)
}

/// Views a shared-strategy game as one where player II may answer each criterion separately.
pub fn d1_to_d2(g: &MultiGameD1) -> MultiGameD2 {
    MultiGameD2::new(g.matrices().to_vec()).expect("shared row count")
}

/// Outcome of [`poss_to_minimax_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimaxCertificate {
    pub holds: bool,
    /// Weights over the column tuples, recovered from the program's dual.
    pub beta: Option<MixedStrategy>,
    pub diagnostic: String,
}

impl MinimaxCertificate {
    fn fail(beta: Option<MixedStrategy>, diagnostic: String) -> Self {
        MinimaxCertificate { holds: false, beta, diagnostic }
    }
}

/// Checks that a secure strategy `x_star` for the weights `alpha` is an
/// extended minimax strategy of [`em_construct`]`(g)`.
///
/// The dual of the scalarized security program gives per-criterion column
/// distributions `mu_l / alpha_l`; their product `beta` weighs the criteria of
/// the joined game. With `B = sum_c beta_c AM(c)`, the check requires
/// `B alpha = M(alpha A) beta`, that `(x_star, beta)` is a saddle point of
/// `M(alpha A)`, and that `x_star` minimizes `x B alpha`.
pub fn poss_to_minimax_check(g: &MultiGameD2, x_star: &MixedStrategy, alpha: &WeightVector) -> Result<MinimaxCertificate> {
    if x_star.len() != g.rows() {
        return Err(GameError::Dimension(format!(
            "player I strategy has length {}, game has {} rows",
            x_star.len(),
            g.rows()
        )));
    }
    let sol = poss_lp(g, alpha)?;
    if sol.x.as_slice() != x_star.as_slice() {
        // another optimal strategy: its objective must match
        let levels = crate::poss::security_levels(g, x_star)?;
        if levels.weighted(alpha) != sol.objective {
            return Ok(MinimaxCertificate::fail(
                None,
                format!("x* weighs {} but the scalarized optimum is {}", levels.weighted(alpha), sol.objective),
            ));
        }
    }
    let blocks = sol
        .column_duals
        .iter()
        .zip(alpha.as_slice())
        .map(|(mu, a)| MixedStrategy::new(mu.iter().map(|v| v / a).collect()))
        .collect::<Result<Vec<_>>>();
    let blocks = match blocks {
        Ok(b) => b,
        Err(e) => return Ok(MinimaxCertificate::fail(None, format!("dual blocks are not distributions: {e}"))),
    };
    let beta = strategy_product(&StrategyTupleII::new(blocks)?)?;

    let amalgam = amalgamate(g.matrices(), Some(alpha.as_slice()))?;
    let em = em_construct(g)?;
    let joined = em.weighted_sum(beta.as_slice())?;
    let b_alpha = joined.right_mul(alpha.as_slice())?;
    let m_beta = amalgam.right_mul(beta.as_slice())?;
    if b_alpha != m_beta {
        return Ok(MinimaxCertificate::fail(Some(beta), "joined game and amalgamation disagree".into()));
    }
    let value = game_value(&amalgam)?.value;
    let x_row = amalgam.left_mul(x_star.as_slice())?;
    let upper = x_row.iter().max().expect("nonempty").clone();
    let lower = m_beta.iter().min().expect("nonempty").clone();
    if upper != value || lower != value {
        return Ok(MinimaxCertificate::fail(
            Some(beta),
            format!("(x*, beta) is not a saddle point: x* concedes {upper}, beta secures {lower}, value {value}"),
        ));
    }
    let achieved = dot(x_star.as_slice(), &b_alpha);
    if achieved != lower || achieved != sol.objective {
        return Ok(MinimaxCertificate::fail(
            Some(beta),
            format!("x* B alpha = {achieved}, best response {lower}, program optimum {}", sol.objective),
        ));
    }
    Ok(MinimaxCertificate { holds: true, beta: Some(beta), diagnostic: format!("weighted value {value}") })
}

/// Nonnegative entries summing to exactly one.
pub fn is_distribution(v: &[Rational]) -> bool {
    v.iter().all(|p| p >= &Rational::zero()) && v.iter().sum::<Rational>() == Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minimax::{vminmax_oracle, OracleConfig};
    use crate::payoff::{payoff_d1, payoff_d2};
    use crate::poss::{poss_oracle, poss_weighted};
    use crate::rational::{int, rat};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn m(rows: &[&[(i64, i64)]]) -> ScalarGame {
        ScalarGame::new(rows.iter().map(|r| r.iter().map(|&(n, d)| rat(n, d)).collect()).collect()).unwrap()
    }

    fn duopoly() -> MultiGameD2 {
        MultiGameD2::new(vec![
            ScalarGame::from_ints(&[&[0, -1], &[1, 0]]).unwrap(),
            m(&[&[(-2, 1), (0, 1), (1, 2)], &[(-1, 1), (0, 1), (1, 1)]]),
        ])
        .unwrap()
    }

    #[test]
    fn tuples_vary_last_fastest() {
        assert_eq!(column_tuples(&[2, 3])[..4], [vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0]]);
        assert_eq!(column_tuples(&[2, 2, 2]).len(), 8);
    }

    #[test]
    fn segment_amalgam() {
        let a1 = ScalarGame::from_ints(&[&[1, 0]]).unwrap();
        let a2 = ScalarGame::from_ints(&[&[0, 1]]).unwrap();
        for a in [rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3)] {
            let w = [a.clone(), int(1) - &a];
            let got = amalgamate(&[a1.clone(), a2.clone()], Some(&w)).unwrap();
            let expected = ScalarGame::new(vec![vec![a.clone(), int(1), int(0), int(1) - &a]]).unwrap();
            assert_eq!(got, expected);
            assert_eq!(game_value(&got).unwrap().value, int(1));
        }
    }

    #[test]
    fn single_matrix_amalgam_is_identity() {
        let a = ScalarGame::from_ints(&[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        assert_eq!(amalgamate(std::slice::from_ref(&a), Some(&[int(1)])).unwrap(), a);
        assert_eq!(amalgamate(std::slice::from_ref(&a), None).unwrap(), a);
    }

    #[test]
    fn duopoly_amalgam_cellwise() {
        let g = duopoly();
        let got = amalgamate(g.matrices(), None).unwrap();
        assert_eq!((got.rows(), got.cols()), (2, 6));
        for i in 0..2 {
            for j1 in 0..2 {
                for j2 in 0..3 {
                    assert_eq!(got.get(i, j1 * 3 + j2), &(g.matrix(0).get(i, j1) + g.matrix(1).get(i, j2)));
                }
            }
        }
    }

    #[test]
    fn amalgam_errors() {
        let a = ScalarGame::from_ints(&[&[1]]).unwrap();
        let b = ScalarGame::from_ints(&[&[1], &[2]]).unwrap();
        assert!(matches!(amalgamate(&[a.clone(), b], None), Err(GameError::Dimension(_))));
        assert!(matches!(amalgamate(std::slice::from_ref(&a), Some(&[int(1), int(2)])), Err(GameError::Dimension(_))));
        assert!(matches!(amalgamate(&[], None), Err(GameError::Dimension(_))));
        let wide = ScalarGame::from_fn(1, 1001, |_, _| int(0)).unwrap();
        assert!(matches!(amalgamate(&[wide.clone(), wide], None), Err(GameError::Size { .. })));
    }

    #[test]
    fn duopoly_joined_criteria() {
        let em = em_construct(&duopoly()).unwrap();
        let expected = [
            m(&[&[(0, 1), (-2, 1)], &[(1, 1), (-1, 1)]]),
            m(&[&[(0, 1), (0, 1)], &[(1, 1), (0, 1)]]),
            m(&[&[(0, 1), (1, 2)], &[(1, 1), (1, 1)]]),
            m(&[&[(-1, 1), (-2, 1)], &[(0, 1), (-1, 1)]]),
            m(&[&[(-1, 1), (0, 1)], &[(0, 1), (0, 1)]]),
            m(&[&[(-1, 1), (1, 2)], &[(0, 1), (1, 1)]]),
        ];
        assert_eq!(em.matrices(), &expected);
    }

    #[test]
    fn duopoly_product_game() {
        let pg = product_game(&duopoly()).unwrap();
        assert_eq!(pg.matrix(0), &ScalarGame::from_ints(&[&[0, 0, 0, -1, -1, -1], &[1, 1, 1, 0, 0, 0]]).unwrap());
        assert_eq!(
            pg.matrix(1),
            &m(&[
                &[(-2, 1), (0, 1), (1, 2), (-2, 1), (0, 1), (1, 2)],
                &[(-1, 1), (0, 1), (1, 1), (-1, 1), (0, 1), (1, 1)]
            ])
        );
    }

    #[test]
    fn one_criterion_constructions() {
        let a = ScalarGame::from_ints(&[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        let g = MultiGameD2::new(vec![a.clone()]).unwrap();
        assert_eq!(product_game(&g).unwrap().matrices(), std::slice::from_ref(&a));
        let em = em_construct(&g).unwrap();
        assert_eq!(em.criteria(), 3);
        for j in 0..3 {
            assert_eq!(em.matrix(j).column(0), a.column(j));
        }
    }

    #[test]
    fn duopoly_strategy_product() {
        let y = StrategyTupleII::new(vec![
            MixedStrategy::new(vec![rat(1, 4), rat(3, 4)]).unwrap(),
            MixedStrategy::new(vec![rat(1, 2), int(0), rat(1, 2)]).unwrap(),
        ])
        .unwrap();
        let y_bar = strategy_product(&y).unwrap();
        assert_eq!(y_bar.as_slice(), &[rat(1, 8), int(0), rat(1, 8), rat(3, 8), int(0), rat(3, 8)]);
        let g = duopoly();
        let x = MixedStrategy::uniform(2);
        let z = payoff_d1(&product_game(&g).unwrap(), &x, &y_bar).unwrap();
        assert_eq!(z.as_slice(), &[rat(-1, 4), rat(-3, 8)]);
        assert_eq!(z, payoff_d2(&g, &x, &y).unwrap());
        assert_eq!(strategy_marginal(&y_bar, &[2, 3]).unwrap(), y);
    }

    #[test]
    fn pure_tuples_map_to_pure_cells() {
        let y = StrategyTupleII::new(vec![MixedStrategy::pure(2, 1), MixedStrategy::pure(3, 2)]).unwrap();
        assert_eq!(strategy_product(&y).unwrap(), MixedStrategy::pure(6, 5));
    }

    #[test]
    fn uniform_marginals() {
        let marg = strategy_marginal(&MixedStrategy::uniform(6), &[2, 3]).unwrap();
        assert_eq!(marg.blocks(), &[MixedStrategy::uniform(2), MixedStrategy::uniform(3)]);
        assert!(matches!(strategy_marginal(&MixedStrategy::uniform(5), &[2, 3]), Err(GameError::Dimension(_))));
    }

    #[test]
    fn certificate_on_pinned_games() {
        let crossed = MultiGameD2::new(vec![
            ScalarGame::from_ints(&[&[1, 0]]).unwrap(),
            ScalarGame::from_ints(&[&[0, 1]]).unwrap(),
        ])
        .unwrap();
        for alpha in [WeightVector::uniform(2), WeightVector::new(vec![rat(1, 5), rat(4, 5)]).unwrap()] {
            let cert = poss_to_minimax_check(&crossed, &MixedStrategy::pure(1, 0), &alpha).unwrap();
            assert!(cert.holds, "{}", cert.diagnostic);
        }
        let g = duopoly();
        let alpha = WeightVector::uniform(2);
        let x = poss_weighted(&g, &alpha).unwrap().x_star;
        let cert = poss_to_minimax_check(&g, &x, &alpha).unwrap();
        assert!(cert.holds, "{}", cert.diagnostic);
        assert!(is_distribution(cert.beta.unwrap().as_slice()));
    }

    #[test]
    fn certificate_rejects_a_non_optimal_strategy() {
        let g = duopoly();
        let cert = poss_to_minimax_check(&g, &MixedStrategy::pure(2, 1), &WeightVector::uniform(2)).unwrap();
        assert!(!cert.holds);
    }

    #[test]
    fn certificate_on_random_games() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..20 {
            let g = MultiGameD2::new(
                (0..2)
                    .map(|_| ScalarGame::from_fn(2, 2, |_, _| rat(rng.gen_range(-8..9), rng.gen_range(1..4))).unwrap())
                    .collect(),
            )
            .unwrap();
            let a = rng.gen_range(1..8);
            let alpha = WeightVector::new(vec![rat(a, 8), rat(8 - a, 8)]).unwrap();
            let x = poss_weighted(&g, &alpha).unwrap().x_star;
            let cert = poss_to_minimax_check(&g, &x, &alpha).unwrap();
            assert!(cert.holds, "{g:?}: {}", cert.diagnostic);
        }
    }

    #[test]
    fn product_game_minimax_matches_security_frontier() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..10 {
            let g = MultiGameD2::new(vec![
                ScalarGame::from_fn(2, 2, |_, _| int(rng.gen_range(-5..6))).unwrap(),
                ScalarGame::from_fn(2, 3, |_, _| int(rng.gen_range(-5..6))).unwrap(),
            ])
            .unwrap();
            let cfg = OracleConfig::new(24, 1);
            let lhs = poss_oracle(&g, &cfg).unwrap();
            let rhs = vminmax_oracle(&product_game(&g).unwrap(), &cfg).unwrap();
            assert!(lhs.same_payoffs(&rhs));
            let lhs_x: Vec<_> = lhs.points().iter().map(|p| p.strategy.clone()).collect();
            let rhs_x: Vec<_> = rhs.points().iter().map(|p| p.strategy.clone()).collect();
            assert_eq!(lhs_x, rhs_x);
        }
    }

    #[test]
    fn shared_strategy_view() {
        let g = MultiGameD1::new(vec![ScalarGame::from_ints(&[&[1, 2]]).unwrap(), ScalarGame::from_ints(&[&[3, 4]]).unwrap()]).unwrap();
        assert_eq!(d1_to_d2(&g).column_counts(), vec![2, 2]);
    }

    fn arb_game_and_strategies() -> impl Strategy<Value = (MultiGameD2, MixedStrategy, StrategyTupleII, MixedStrategy)> {
        (1usize..4, 1usize..4, proptest::collection::vec(1usize..5, 3)).prop_flat_map(|(k, m, ns)| {
            let ns: Vec<usize> = ns[..k].to_vec();
            let cells = tuple_count(&ns) as usize;
            (
                proptest::collection::vec((-9i64..10, 1i64..4), k * m * 4),
                proptest::collection::vec(0i64..5, m),
                proptest::collection::vec(proptest::collection::vec(0i64..5, 4), k),
                proptest::collection::vec(0i64..5, cells),
            )
                .prop_map(move |(entries, xw, yw, ybw)| {
                    let g = MultiGameD2::new(
                        (0..k)
                            .map(|l| {
                                ScalarGame::from_fn(m, ns[l], |i, j| {
                                    let (n, d) = entries[(l * m + i) * 4 + j];
                                    rat(n, d)
                                })
                                .unwrap()
                            })
                            .collect(),
                    )
                    .unwrap();
                    let dist = |w: &[i64]| {
                        let w: Vec<i64> = if w.iter().all(|&v| v == 0) { vec![1; w.len()] } else { w.to_vec() };
                        let t: i64 = w.iter().sum();
                        MixedStrategy::new(w.iter().map(|&v| rat(v, t)).collect()).unwrap()
                    };
                    let y = StrategyTupleII::new((0..k).map(|l| dist(&yw[l][..ns[l]])).collect()).unwrap();
                    (g, dist(&xw), y, dist(&ybw))
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn payoffs_survive_both_strategy_maps((g, x, y, y_bar) in arb_game_and_strategies()) {
            let pg = product_game(&g).unwrap();
            let prod = strategy_product(&y).unwrap();
            prop_assert!(is_distribution(prod.as_slice()));
            prop_assert_eq!(payoff_d2(&g, &x, &y).unwrap(), payoff_d1(&pg, &x, &prod).unwrap());
            prop_assert_eq!(&strategy_marginal(&prod, &g.column_counts()).unwrap(), &y);
            let marg = strategy_marginal(&y_bar, &g.column_counts()).unwrap();
            prop_assert_eq!(payoff_d1(&pg, &x, &y_bar).unwrap(), payoff_d2(&g, &x, &marg).unwrap());
        }

        #[test]
        fn joined_criteria_entries((g, _x, _y, _yb) in arb_game_and_strategies()) {
            let em = em_construct(&g).unwrap();
            for (ci, c) in column_tuples(&g.column_counts()).iter().enumerate() {
                for i in 0..g.rows() {
                    for (l, &cl) in c.iter().enumerate() {
                        prop_assert_eq!(em.matrix(ci).get(i, l), g.matrix(l).get(i, cl));
                    }
                }
            }
        }

        #[test]
        fn product_columns_repeat((g, _x, _y, _yb) in arb_game_and_strategies()) {
            let pg = product_game(&g).unwrap();
            let ns = g.column_counts();
            let total = tuple_count(&ns) as usize;
            for (l, &n) in ns.iter().enumerate() {
                let mut got: Vec<Vec<Rational>> = (0..total).map(|c| pg.matrix(l).column(c)).collect();
                let mut expected: Vec<Vec<Rational>> = (0..n)
                    .flat_map(|j| std::iter::repeat_n(g.matrix(l).column(j), total / n))
                    .collect();
                got.sort();
                expected.sort();
                prop_assert_eq!(got, expected);
            }
        }

        #[test]
        fn weights_inside_equal_weights_outside((g, _x, _y, _yb) in arb_game_and_strategies(), w in proptest::collection::vec(-4i64..5, 3)) {
            let w: Vec<Rational> = w[..g.criteria()].iter().map(|&v| int(v)).collect();
            let outside: Vec<ScalarGame> = g.matrices().iter().zip(&w).map(|(a, w)| a.scaled(w)).collect();
            prop_assert_eq!(amalgamate(g.matrices(), Some(&w)).unwrap(), amalgamate(&outside, None).unwrap());
            let plain = amalgamate(g.matrices(), None).unwrap();
            for (ci, c) in column_tuples(&g.column_counts()).iter().enumerate() {
                let expected: Vec<Rational> = (0..g.rows())
                    .map(|i| (0..g.criteria()).map(|l| g.matrix(l).get(i, c[l])).sum())
                    .collect();
                prop_assert_eq!(plain.column(ci), expected);
            }
        }
    }
}

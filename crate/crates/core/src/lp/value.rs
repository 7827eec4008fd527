//! Value and optimal strategies of a scalar zero-sum game.
//!
//! Player I (rows) minimizes and player II (columns) maximizes.

use num_traits::{Signed, Zero};

use super::vertices::{vertices, Polytope};
use super::{solve_lp, LinearProgram, LpOutcome, Relation, Sense};
use crate::error::{GameError, Result};
use crate::game::ScalarGame;
use crate::rational::{int, Rational};
use crate::strategy::MixedStrategy;

pub const DEFAULT_TIE_CAP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    I,
    II,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GameValueResult {
    pub value: Rational,
    pub x_opt: MixedStrategy,
    pub y_opt: MixedStrategy,
    /// Vertices of player I's optimal set, when ties were enumerated.
    pub x_vertices: Option<Vec<MixedStrategy>>,
    pub y_vertices: Option<Vec<MixedStrategy>>,
}

struct PlayerOne {
    value: Rational,
    x: MixedStrategy,
    y: MixedStrategy,
    unique: bool,
}

/// `min v  s.t.  sum_i a_ij x_i <= v for all j,  sum x = 1,  x >= 0`.
fn solve_player_one(g: &ScalarGame) -> Result<PlayerOne> {
    let (m, n) = (g.rows(), g.cols());
    let mut objective = vec![Rational::zero(); m + 1];
    objective[m] = int(1);
    let mut lp = LinearProgram::new(Sense::Minimize, objective);
    lp.set_free(m);
    for j in 0..n {
        let mut row: Vec<Rational> = g.column(j);
        row.push(int(-1));
        lp.add_constraint(row, Relation::Le, Rational::zero());
    }
    let mut simplex_row = vec![int(1); m];
    simplex_row.push(Rational::zero());
    lp.add_constraint(simplex_row, Relation::Eq, int(1));

    let sol = match solve_lp(&lp)? {
        LpOutcome::Optimal(sol) => sol,
        other => return Err(GameError::Solver(format!("game LP reported {other:?}"))),
    };
    let value = sol.values[m].clone();
    let x = MixedStrategy::new(sol.values[..m].to_vec())
        .map_err(|e| GameError::Solver(format!("primal solution left the simplex: {e}")))?;
    let y_raw: Vec<Rational> = sol.duals[..n].iter().map(|d| -d).collect();
    let y = MixedStrategy::new(y_raw).map_err(|e| GameError::Solver(format!("dual solution left the simplex: {e}")))?;

    // both guarantees must meet at the value
    let upper = g.left_mul(x.as_slice())?.into_iter().max().expect("nonempty game");
    let lower = g.right_mul(y.as_slice())?.into_iter().min().expect("nonempty game");
    if upper != value || lower != value {
        return Err(GameError::Solver(format!(
            "duality gap: player I guarantees {upper}, player II guarantees {lower}, LP value {value}"
        )));
    }
    Ok(PlayerOne { value, x, y, unique: sol.unique })
}

/// The value `min_x max_y x A y` with one optimal strategy per player.
pub fn game_value(g: &ScalarGame) -> Result<GameValueResult> {
    let p = solve_player_one(g)?;
    Ok(GameValueResult { value: p.value, x_opt: p.x, y_opt: p.y, x_vertices: None, y_vertices: None })
}

/// Like [`game_value`], also listing the vertices of both optimal sets (up to `cap` each).
pub fn game_value_with_ties(g: &ScalarGame, cap: usize) -> Result<GameValueResult> {
    let one = solve_player_one(g)?;
    let x_vertices = if one.unique {
        vec![one.x.clone()]
    } else {
        optimal_face(g, Side::I, &one.value, cap)?.0
    };
    // player II's uniqueness comes from the mirrored program
    let two = solve_player_one(&mirror(g))?;
    if -&two.value != one.value {
        return Err(GameError::Solver(format!("mirrored game value {} disagrees with {}", two.value, one.value)));
    }
    let y_vertices = if two.unique {
        vec![two.x.clone()]
    } else {
        optimal_face(g, Side::II, &one.value, cap)?.0
    };
    Ok(GameValueResult {
        value: one.value,
        x_opt: one.x,
        y_opt: one.y,
        x_vertices: Some(x_vertices),
        y_vertices: Some(y_vertices),
    })
}

/// `-A^T`: player II of `g` becomes the minimizing row player.
pub(crate) fn mirror(g: &ScalarGame) -> ScalarGame {
    g.transpose().map(|v| -v)
}

fn optimal_face(g: &ScalarGame, side: Side, value: &Rational, cap: usize) -> Result<(Vec<MixedStrategy>, bool)> {
    let (dim, bound_rows): (usize, Vec<(Vec<Rational>, Rational)>) = match side {
        // (x A)_j <= v
        Side::I => (g.rows(), (0..g.cols()).map(|j| (g.column(j), value.clone())).collect()),
        // (A y)_i >= v
        Side::II => (
            g.cols(),
            (0..g.rows()).map(|i| (g.row(i).iter().map(|a| -a).collect(), -value)).collect(),
        ),
    };
    let mut poly = Polytope { dim, equalities: vec![(vec![int(1); dim], int(1))], inequalities: bound_rows };
    for i in 0..dim {
        let mut e = vec![Rational::zero(); dim];
        e[i] = int(-1);
        poly.inequalities.push((e, Rational::zero()));
    }
    let list = vertices(&poly, cap);
    let strategies = list
        .vertices
        .into_iter()
        .map(|v| {
            debug_assert!(v.iter().all(|p| !p.is_negative()));
            MixedStrategy::new(v)
        })
        .collect::<Result<Vec<_>>>()?;
    if strategies.is_empty() {
        return Err(GameError::Solver("optimal face has no vertices".into()));
    }
    Ok((strategies, list.truncated))
}

/// All vertices of one player's optimal-strategy polytope.
pub fn optimal_strategy_vertices(g: &ScalarGame, side: Side) -> Result<Vec<MixedStrategy>> {
    Ok(optimal_strategy_vertices_capped(g, side, usize::MAX)?.0)
}

/// At most `cap` vertices, and whether the list was cut short.
pub fn optimal_strategy_vertices_capped(g: &ScalarGame, side: Side, cap: usize) -> Result<(Vec<MixedStrategy>, bool)> {
    let value = solve_player_one(g)?.value;
    optimal_face(g, side, &value, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::simplex_grid;
    use crate::rational::rat;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn row_game(entries: Vec<Rational>) -> ScalarGame {
        ScalarGame::new(vec![entries]).unwrap()
    }

    #[test]
    fn single_row_amalgam_has_value_one() {
        for a in [rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(99, 100)] {
            let g = row_game(vec![a.clone(), int(1), int(0), int(1) - &a]);
            let r = game_value(&g).unwrap();
            assert_eq!(r.value, int(1));
            assert_eq!(optimal_strategy_vertices(&g, Side::II).unwrap(), vec![MixedStrategy::pure(4, 1)]);
        }
    }

    #[test]
    fn boundary_weight_adds_a_vertex() {
        let g = row_game(vec![int(1), int(1), int(0), int(0)]);
        let v = optimal_strategy_vertices(&g, Side::II).unwrap();
        assert_eq!(v.len(), 2);
        assert!(v.contains(&MixedStrategy::pure(4, 0)) && v.contains(&MixedStrategy::pure(4, 1)));
    }

    #[test]
    fn two_column_row_game() {
        for a in [rat(3, 4), rat(2, 3), int(1)] {
            let g = row_game(vec![a.clone(), int(1) - &a]);
            assert_eq!(game_value(&g).unwrap().value, a);
        }
    }

    #[test]
    fn one_by_one() {
        let g = ScalarGame::from_ints(&[&[7]]).unwrap();
        let r = game_value_with_ties(&g, DEFAULT_TIE_CAP).unwrap();
        assert_eq!(r.value, int(7));
        assert_eq!(r.x_opt, MixedStrategy::pure(1, 0));
        assert_eq!(r.y_vertices.unwrap(), vec![MixedStrategy::pure(1, 0)]);
        assert_eq!(optimal_strategy_vertices(&g, Side::I).unwrap(), vec![MixedStrategy::pure(1, 0)]);
    }

    #[test]
    fn matching_pennies() {
        let g = ScalarGame::from_ints(&[&[1, -1], &[-1, 1]]).unwrap();
        let r = game_value(&g).unwrap();
        assert_eq!(r.value, int(0));
        let half = MixedStrategy::uniform(2);
        assert_eq!(optimal_strategy_vertices(&g, Side::I).unwrap(), vec![half.clone()]);
        assert_eq!(r.y_opt, half);
    }

    #[test]
    fn flat_game_ties_everywhere() {
        let g = ScalarGame::from_ints(&[&[2, 2], &[2, 2]]).unwrap();
        let r = game_value_with_ties(&g, DEFAULT_TIE_CAP).unwrap();
        assert_eq!(r.x_vertices.unwrap().len(), 2);
        assert_eq!(r.y_vertices.unwrap().len(), 2);
    }

    #[test]
    fn random_3x3_against_grid_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let grid = simplex_grid(3, 50).unwrap();
        for _ in 0..10 {
            let g = ScalarGame::from_fn(3, 3, |_, _| rat(rng.gen_range(-9..10), rng.gen_range(1..4))).unwrap();
            let v = game_value(&g).unwrap().value;
            let upper = grid.iter().map(|x| g.left_mul(x.as_slice()).unwrap().into_iter().max().unwrap()).min().unwrap();
            let lower = grid.iter().map(|y| g.right_mul(y.as_slice()).unwrap().into_iter().min().unwrap()).max().unwrap();
            let slack = g.max_abs_entry() * rat(2, 50);
            assert!(lower <= v && v <= upper);
            assert!(&upper - &v <= slack && &v - &lower <= slack);
        }
    }

    fn arb_game() -> impl Strategy<Value = ScalarGame> {
        (1usize..5, 1usize..5).prop_flat_map(|(m, n)| {
            proptest::collection::vec((-20i64..20, 1i64..5), m * n)
                .prop_map(move |cells| ScalarGame::from_fn(m, n, |i, j| rat(cells[i * n + j].0, cells[i * n + j].1)).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn mirrored_game_negates_value(g in arb_game()) {
            prop_assert_eq!(game_value(&mirror(&g)).unwrap().value, -game_value(&g).unwrap().value);
        }

        #[test]
        fn constant_shift(g in arb_game(), c in -10i64..10) {
            let shifted = g.map(|v| v + int(c));
            prop_assert_eq!(game_value(&shifted).unwrap().value, game_value(&g).unwrap().value + int(c));
        }

        #[test]
        fn dominated_column_does_not_change_value(g in arb_game(), w in proptest::collection::vec(1i64..5, 4), noise in proptest::collection::vec(0i64..3, 4)) {
            let n = g.cols();
            let total: i64 = w[..n].iter().sum();
            let col: Vec<Rational> = (0..g.rows())
                .map(|i| (0..n).map(|j| rat(w[j], total) * g.get(i, j)).sum::<Rational>() - int(noise[i % 4]))
                .collect();
            let extended = g.with_column(&col).unwrap();
            prop_assert_eq!(game_value(&extended).unwrap().value, game_value(&g).unwrap().value);
        }

        #[test]
        fn every_listed_vertex_is_optimal(g in arb_game()) {
            let r = game_value_with_ties(&g, DEFAULT_TIE_CAP).unwrap();
            for x in r.x_vertices.unwrap() {
                prop_assert_eq!(g.left_mul(x.as_slice()).unwrap().into_iter().max().unwrap(), r.value.clone());
            }
            for y in r.y_vertices.unwrap() {
                prop_assert_eq!(g.right_mul(y.as_slice()).unwrap().into_iter().min().unwrap(), r.value.clone());
            }
        }
    }
}

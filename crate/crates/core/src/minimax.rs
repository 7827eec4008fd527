//! Extended minimax payoffs for games where player II plays one shared strategy.
//!
//! The brute-force route ([`vminmax_oracle`]) takes, for each grid strategy of
//! player I, the Pareto-maximal payoffs player II can force, then keeps the
//! Pareto-minimal ones. The solver route ([`vminmax_sweep`]) solves the scalar
//! game `sum_l alpha_l A(l)` over a grid of strictly positive weights.

use crate::error::{GameError, Result};
use crate::game::MultiGameD1;
use crate::grid::{simplex_grid, simplex_grid_size, weight_grid};
use crate::lp::{game_value, game_value_with_ties, DEFAULT_TIE_CAP};
use crate::payoff::{distinct, pareto_max, pareto_min, payoff_d1, PayoffPoint, PayoffSet, PayoffVector};
use crate::rational::{dot, rat, Rational};
use crate::strategy::{MixedStrategy, WeightVector};

/// Largest number of grid strategies an oracle will evaluate.
pub const ORACLE_POINT_CAP: u128 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimaxSweepConfig {
    /// Weights range over multiples of `1 / r`, each at least `1 / r`.
    pub weight_grid_resolution: u32,
    /// List every vertex of both optimal sets instead of one saddle point.
    pub enumerate_ties: bool,
    pub tie_cap: usize,
    /// Extra points per pair of optimal column vertices, spread evenly along the edge.
    pub face_samples: u32,
}

impl MinimaxSweepConfig {
    /// Defaults scaled to the number of criteria.
    pub fn for_criteria(k: usize) -> Self {
        MinimaxSweepConfig {
            weight_grid_resolution: default_weight_resolution(k),
            enumerate_ties: true,
            tie_cap: DEFAULT_TIE_CAP,
            face_samples: 0,
        }
    }

    pub fn with_resolution(mut self, r: u32) -> Self {
        self.weight_grid_resolution = r;
        self
    }

    pub fn validate(&self, k: usize) -> Result<()> {
        if (self.weight_grid_resolution as usize) < k {
            return Err(GameError::Precondition(format!(
                "weight grid resolution {} is below the criteria count {k}",
                self.weight_grid_resolution
            )));
        }
        if self.tie_cap == 0 {
            return Err(GameError::Precondition("tie cap must be positive".into()));
        }
        Ok(())
    }
}

pub fn default_weight_resolution(k: usize) -> u32 {
    match k {
        0..=2 => 16,
        3 => 8,
        _ => 2 * k as u32,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub x_grid_resolution: u32,
    pub y_grid_resolution: u32,
}

impl OracleConfig {
    pub fn new(x_grid_resolution: u32, y_grid_resolution: u32) -> Self {
        OracleConfig { x_grid_resolution, y_grid_resolution }
    }

    pub fn validate(&self) -> Result<()> {
        if self.x_grid_resolution == 0 || self.y_grid_resolution == 0 {
            return Err(GameError::Precondition("oracle grid resolutions must be positive".into()));
        }
        Ok(())
    }
}

/// `2 * max|a| / r`: how far a grid optimum may sit from the true one.
pub fn lipschitz_slack(max_abs_entry: &Rational, resolution: u32) -> Rational {
    max_abs_entry * rat(2, resolution as i64)
}

pub(crate) fn guard_grid(len: usize, resolution: u32) -> Result<()> {
    let required = simplex_grid_size(len, resolution);
    if required > ORACLE_POINT_CAP {
        return Err(GameError::Size { required, cap: ORACLE_POINT_CAP });
    }
    Ok(())
}

fn check_x(g: &MultiGameD1, x: &MixedStrategy) -> Result<()> {
    if x.len() != g.rows() {
        return Err(GameError::Dimension(format!(
            "player I strategy has length {}, game has {} rows",
            x.len(),
            g.rows()
        )));
    }
    Ok(())
}

fn v_w1_on(g: &MultiGameD1, x: &MixedStrategy, ys: &[MixedStrategy]) -> Result<PayoffSet> {
    check_x(g, x)?;
    let rows: Vec<Vec<Rational>> = g.matrices().iter().map(|a| a.left_mul(x.as_slice())).collect::<Result<_>>()?;
    let points = ys
        .iter()
        .map(|y| PayoffPoint {
            payoff: PayoffVector::new(rows.iter().map(|r| dot(r, y.as_slice())).collect()),
            strategy: Some(y.clone()),
            alpha: None,
        })
        .collect();
    pareto_max(points)
}

fn y_candidates(n: usize, resolution: u32) -> Result<Vec<MixedStrategy>> {
    guard_grid(n, resolution)?;
    let mut ys: Vec<MixedStrategy> = (0..n).map(|j| MixedStrategy::pure(n, j)).collect();
    ys.extend(simplex_grid(n, resolution)?);
    Ok(ys)
}

/// Pareto-maximal payoffs player II can reach against `x`, annotated with the `y` reaching them.
pub fn v_w1(g: &MultiGameD1, x: &MixedStrategy, cfg: &OracleConfig) -> Result<PayoffSet> {
    cfg.validate()?;
    v_w1_on(g, x, &y_candidates(g.cols(), cfg.y_grid_resolution)?)
}

/// Grid approximation of the extended minimax set, annotated with player I's strategy.
pub fn vminmax_oracle(g: &MultiGameD1, cfg: &OracleConfig) -> Result<PayoffSet> {
    cfg.validate()?;
    guard_grid(g.rows(), cfg.x_grid_resolution)?;
    let ys = y_candidates(g.cols(), cfg.y_grid_resolution)?;
    let mut union = Vec::new();
    for x in simplex_grid(g.rows(), cfg.x_grid_resolution)? {
        for p in v_w1_on(g, &x, &ys)?.into_points() {
            union.push(PayoffPoint { payoff: p.payoff, strategy: Some(x.clone()), alpha: None });
        }
        // keep the working set small on fine grids
        if union.len() > 4096 {
            union = pareto_min(union)?.into_points();
        }
    }
    pareto_min(union)
}

fn check_alpha(k: usize, alpha: &WeightVector) -> Result<()> {
    if alpha.len() != k {
        return Err(GameError::Weight(format!("{} weights for {k} criteria", alpha.len())));
    }
    Ok(())
}

/// Payoffs of the optimal pairs of the scalar game `sum_l alpha_l A(l)`.
///
/// Every returned `z` satisfies `alpha . z = val(sum_l alpha_l A(l))`; a
/// violation is reported as a solver error.
pub fn vminmax_weighted(g: &MultiGameD1, alpha: &WeightVector, cfg: &MinimaxSweepConfig) -> Result<PayoffSet> {
    check_alpha(g.criteria(), alpha)?;
    if cfg.tie_cap == 0 {
        return Err(GameError::Precondition("tie cap must be positive".into()));
    }
    let b = g.weighted_sum(alpha.as_slice())?;
    let (value, xs, mut ys) = if cfg.enumerate_ties {
        let r = game_value_with_ties(&b, cfg.tie_cap)?;
        (r.value, r.x_vertices.expect("ties enumerated"), r.y_vertices.expect("ties enumerated"))
    } else {
        let r = game_value(&b)?;
        (r.value, vec![r.x_opt], vec![r.y_opt])
    };
    if cfg.face_samples > 0 && ys.len() > 1 {
        let steps = cfg.face_samples as i64 + 1;
        let vertices = ys.clone();
        for (i, a) in vertices.iter().enumerate() {
            for b in &vertices[i + 1..] {
                for t in 1..steps {
                    ys.push(a.mix(b, &rat(t, steps))?);
                }
            }
        }
    }
    let mut points = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            let z = payoff_d1(g, x, y)?;
            let weighted = z.weighted(alpha);
            if weighted != value {
                return Err(GameError::Solver(format!(
                    "weighted payoff {weighted} differs from the scalarized value {value}"
                )));
            }
            points.push(PayoffPoint { payoff: z, strategy: Some(x.clone()), alpha: Some(alpha.clone()) });
        }
    }
    distinct(points)
}

/// Union of [`vminmax_weighted`] over the weight grid, Pareto-minimal points kept.
pub fn vminmax_sweep(g: &MultiGameD1, cfg: &MinimaxSweepConfig) -> Result<PayoffSet> {
    cfg.validate(g.criteria())?;
    let mut union = Vec::new();
    for alpha in weight_grid(g.criteria(), cfg.weight_grid_resolution)? {
        union.extend(vminmax_weighted(g, &alpha, cfg)?.into_points());
    }
    pareto_min(union)
}

/// Smallest `alpha . z` over the points of a set; `None` when empty.
pub fn min_weighted(set: &PayoffSet, alpha: &WeightVector) -> Option<Rational> {
    set.points().iter().map(|p| p.payoff.weighted(alpha)).min()
}

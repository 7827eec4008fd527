//! Payoff vectors, componentwise order, and Pareto filtering.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{GameError, Result};
use crate::game::{MultiGameD1, MultiGameD2};
use crate::rational::{dot, Rational};
use crate::strategy::{MixedStrategy, StrategyTupleII, WeightVector};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PayoffVector(Vec<Rational>);

impl PayoffVector {
    pub fn new(components: Vec<Rational>) -> Self {
        PayoffVector(components)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, criterion: usize) -> &Rational {
        &self.0[criterion]
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }

    /// `sum_l alpha_l * z_l`.
    pub fn weighted(&self, alpha: &WeightVector) -> Rational {
        dot(&self.0, alpha.as_slice())
    }

    /// `self <= other` componentwise.
    pub fn le(&self, other: &PayoffVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self ⪇ other`: componentwise `<=` and not equal.
    pub fn strictly_dominates_min(&self, other: &PayoffVector) -> bool {
        self.le(other) && self != other
    }
}

impl fmt::Debug for PayoffVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl From<Vec<Rational>> for PayoffVector {
    fn from(v: Vec<Rational>) -> Self {
        PayoffVector(v)
    }
}

/// A payoff together with the strategy and weight vector that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PayoffPoint {
    pub payoff: PayoffVector,
    pub strategy: Option<MixedStrategy>,
    pub alpha: Option<WeightVector>,
}

impl PayoffPoint {
    pub fn bare(payoff: PayoffVector) -> Self {
        PayoffPoint { payoff, strategy: None, alpha: None }
    }
}

/// A finite collection of payoff points, sorted lexicographically after filtering.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PayoffSet {
    points: Vec<PayoffPoint>,
}

impl PayoffSet {
    pub fn points(&self) -> &[PayoffPoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<PayoffPoint> {
        self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn payoffs(&self) -> Vec<PayoffVector> {
        self.points.iter().map(|p| p.payoff.clone()).collect()
    }

    pub fn contains(&self, payoff: &PayoffVector) -> bool {
        self.points.iter().any(|p| &p.payoff == payoff)
    }

    pub fn find(&self, payoff: &PayoffVector) -> Option<&PayoffPoint> {
        self.points.iter().find(|p| &p.payoff == payoff)
    }

    /// Equality of the payoff values, ignoring annotations.
    pub fn same_payoffs(&self, other: &PayoffSet) -> bool {
        self.payoffs() == other.payoffs()
    }
}

fn check_lengths(points: &[PayoffPoint]) -> Result<()> {
    if let Some(first) = points.first() {
        let k = first.payoff.len();
        if let Some(bad) = points.iter().find(|p| p.payoff.len() != k) {
            return Err(GameError::Dimension(format!(
                "payoff of length {} mixed with length {k}",
                bad.payoff.len()
            )));
        }
    }
    Ok(())
}

fn pareto_filter(points: Vec<PayoffPoint>, minimize: bool) -> Result<PayoffSet> {
    check_lengths(&points)?;
    let mut order: Vec<usize> = (0..points.len()).collect();
    let cmp = |a: &PayoffVector, b: &PayoffVector| -> Ordering {
        if minimize { a.cmp(b) } else { b.cmp(a) }
    };
    // stable: among duplicates the first input occurrence survives
    order.sort_by(|&i, &j| cmp(&points[i].payoff, &points[j].payoff));
    let better_or_equal = |q: &PayoffVector, p: &PayoffVector| if minimize { q.le(p) } else { p.le(q) };
    let mut kept: Vec<usize> = Vec::new();
    for &i in &order {
        let p = &points[i].payoff;
        // any dominator of p precedes it in lexicographic order
        if !kept.iter().any(|&j| better_or_equal(&points[j].payoff, p)) {
            kept.push(i);
        }
    }
    if !minimize {
        kept.reverse();
    }
    let mut slots: Vec<Option<PayoffPoint>> = points.into_iter().map(Some).collect();
    Ok(PayoffSet {
        points: kept.into_iter().map(|i| slots[i].take().expect("index kept once")).collect(),
    })
}

/// All points with duplicate payoffs collapsed, in lexicographic order, no filtering.
pub fn distinct(points: Vec<PayoffPoint>) -> Result<PayoffSet> {
    check_lengths(&points)?;
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].payoff.cmp(&points[j].payoff));
    order.dedup_by(|a, b| points[*a].payoff == points[*b].payoff);
    let mut slots: Vec<Option<PayoffPoint>> = points.into_iter().map(Some).collect();
    Ok(PayoffSet {
        points: order.into_iter().map(|i| slots[i].take().expect("index kept once")).collect(),
    })
}

/// Pareto-minimal points under the componentwise order, duplicates collapsed.
pub fn pareto_min(points: Vec<PayoffPoint>) -> Result<PayoffSet> {
    pareto_filter(points, true)
}

/// Pareto-maximal points under the componentwise order, duplicates collapsed.
pub fn pareto_max(points: Vec<PayoffPoint>) -> Result<PayoffSet> {
    pareto_filter(points, false)
}

pub fn pareto_min_vectors(points: Vec<PayoffVector>) -> Result<PayoffSet> {
    pareto_min(points.into_iter().map(PayoffPoint::bare).collect())
}

/// `(x^T A(1) y, ..., x^T A(k) y)`.
pub fn payoff_d1(game: &MultiGameD1, x: &MixedStrategy, y: &MixedStrategy) -> Result<PayoffVector> {
    check_len("player I", x.len(), game.rows())?;
    check_len("player II", y.len(), game.cols())?;
    game.matrices()
        .iter()
        .map(|a| a.bilinear(x.as_slice(), y.as_slice()))
        .collect::<Result<Vec<_>>>()
        .map(PayoffVector)
}

/// `(x^T A(1) y(1), ..., x^T A(k) y(k))`.
pub fn payoff_d2(game: &MultiGameD2, x: &MixedStrategy, y: &StrategyTupleII) -> Result<PayoffVector> {
    check_len("player I", x.len(), game.rows())?;
    if y.blocks().len() != game.criteria() {
        return Err(GameError::Dimension(format!(
            "strategy tuple has {} blocks, game has {} criteria",
            y.blocks().len(),
            game.criteria()
        )));
    }
    game.matrices()
        .iter()
        .zip(y.blocks())
        .enumerate()
        .map(|(l, (a, block))| {
            check_len(&format!("block {} of player II", l + 1), block.len(), a.cols())?;
            a.bilinear(x.as_slice(), block.as_slice())
        })
        .collect::<Result<Vec<_>>>()
        .map(PayoffVector)
}

fn check_len(who: &str, got: usize, expected: usize) -> Result<()> {
    if got != expected {
        return Err(GameError::Dimension(format!(
            "{who} strategy has length {got}, expected {expected}"
        )));
    }
    Ok(())
}

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{GameError, Result};
use crate::rational::{rat, sum, Rational};

/// A probability vector: nonnegative entries summing to exactly one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedStrategy(Vec<Rational>);

impl MixedStrategy {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(GameError::Strategy("empty probability vector".into()));
        }
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(GameError::Strategy(format!("negative probability {w}")));
        }
        let total = sum(&weights);
        if !total.is_one() {
            return Err(GameError::Strategy(format!("probabilities sum to {total}, not 1")));
        }
        Ok(MixedStrategy(weights))
    }

    /// The pure strategy `e_index` of length `len`.
    pub fn pure(len: usize, index: usize) -> Self {
        assert!(index < len, "pure strategy index {index} out of range {len}");
        MixedStrategy((0..len).map(|i| if i == index { Rational::one() } else { Rational::zero() }).collect())
    }

    pub fn uniform(len: usize) -> Self {
        assert!(len > 0);
        MixedStrategy(vec![rat(1, len as i64); len])
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

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }

    /// `t * self + (1 - t) * other` for `t` in `[0, 1]`.
    pub fn mix(&self, other: &MixedStrategy, t: &Rational) -> Result<MixedStrategy> {
        if self.len() != other.len() {
            return Err(GameError::Dimension(format!("mixing lengths {} and {}", self.len(), other.len())));
        }
        if t.is_negative() || t > &Rational::one() {
            return Err(GameError::Strategy(format!("mixing coefficient {t} outside [0, 1]")));
        }
        let s = Rational::one() - t;
        Ok(MixedStrategy(self.0.iter().zip(&other.0).map(|(a, b)| t * a + &s * b).collect()))
    }
}

impl fmt::Debug for MixedStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Player II's strategy in a [`crate::MultiGameD2`]: one mixed strategy per criterion.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrategyTupleII {
    blocks: Vec<MixedStrategy>,
}

impl StrategyTupleII {
    pub fn new(blocks: Vec<MixedStrategy>) -> Result<Self> {
        if blocks.is_empty() {
            return Err(GameError::Strategy("strategy tuple without blocks".into()));
        }
        Ok(StrategyTupleII { blocks })
    }

    pub fn blocks(&self) -> &[MixedStrategy] {
        &self.blocks
    }

    pub fn block(&self, criterion: usize) -> &MixedStrategy {
        &self.blocks[criterion]
    }

    pub fn block_lengths(&self) -> Vec<usize> {
        self.blocks.iter().map(MixedStrategy::len).collect()
    }
}

/// Scalarization weights: strictly positive, summing to one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(alphas: Vec<Rational>) -> Result<Self> {
        if alphas.is_empty() {
            return Err(GameError::Weight("empty weight vector".into()));
        }
        if let Some(a) = alphas.iter().find(|a| !a.is_positive()) {
            return Err(GameError::Weight(format!("weight {a} is not strictly positive")));
        }
        let total = sum(&alphas);
        if !total.is_one() {
            return Err(GameError::Weight(format!("weights sum to {total}, not 1")));
        }
        Ok(WeightVector(alphas))
    }

    pub fn uniform(k: usize) -> Self {
        WeightVector(vec![rat(1, k as i64); k])
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
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "α({})", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn strategy_validation() {
        assert!(MixedStrategy::new(vec![rat(1, 3), rat(2, 3)]).is_ok());
        assert!(matches!(MixedStrategy::new(vec![rat(1, 3), rat(1, 3)]), Err(GameError::Strategy(_))));
        assert!(MixedStrategy::new(vec![int(2), int(-1)]).is_err());
        assert!(MixedStrategy::new(vec![]).is_err());
        assert_eq!(MixedStrategy::pure(3, 1).as_slice(), &[int(0), int(1), int(0)]);
    }

    #[test]
    fn weights_must_be_strictly_positive() {
        assert!(WeightVector::new(vec![rat(1, 4), rat(3, 4)]).is_ok());
        assert!(matches!(WeightVector::new(vec![int(0), int(1)]), Err(GameError::Weight(_))));
        assert!(WeightVector::new(vec![rat(-1, 2), rat(3, 2)]).is_err());
        assert!(WeightVector::new(vec![rat(1, 2), rat(1, 4)]).is_err());
    }

    #[test]
    fn mixing_stays_on_the_simplex() {
        let a = MixedStrategy::pure(2, 0);
        let b = MixedStrategy::pure(2, 1);
        let m = a.mix(&b, &rat(1, 4)).unwrap();
        assert_eq!(m.as_slice(), &[rat(1, 4), rat(3, 4)]);
        assert!(a.mix(&b, &int(2)).is_err());
    }
}

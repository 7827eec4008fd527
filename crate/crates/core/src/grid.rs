//! Rational grids on simplices.

use crate::error::{GameError, Result};
use crate::rational::{rat, Rational};
use crate::strategy::{MixedStrategy, WeightVector};

/// All ways to write `total` as an ordered sum of `parts` integers `>= min_part`,
/// in lexicographic order.
fn compositions(parts: usize, total: u32, min_part: u32) -> Vec<Vec<u32>> {
    fn recurse(parts: usize, total: u32, min_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            if total >= min_part {
                prefix.push(total);
                out.push(prefix.clone());
                prefix.pop();
            }
            return;
        }
        let reserve = min_part * (parts as u32 - 1);
        if total < reserve + min_part {
            return;
        }
        for first in min_part..=total - reserve {
            prefix.push(first);
            recurse(parts - 1, total - first, min_part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        recurse(parts, total, min_part, &mut Vec::with_capacity(parts), &mut out);
    }
    out
}

fn scale(counts: &[u32], resolution: u32) -> Vec<Rational> {
    counts.iter().map(|&c| rat(c as i64, resolution as i64)).collect()
}

/// Every point of the simplex of dimension `len - 1` with coordinates `i / resolution`.
pub fn simplex_grid(len: usize, resolution: u32) -> Result<Vec<MixedStrategy>> {
    if resolution == 0 {
        return Err(GameError::Precondition("grid resolution must be positive".into()));
    }
    compositions(len, resolution, 0)
        .iter()
        .map(|c| MixedStrategy::new(scale(c, resolution)))
        .collect()
}

/// Strictly positive weight vectors with coordinates `i / resolution`, `i >= 1`.
pub fn weight_grid(k: usize, resolution: u32) -> Result<Vec<WeightVector>> {
    if (resolution as usize) < k {
        return Err(GameError::Precondition(format!(
            "weight grid resolution {resolution} is below the criteria count {k}"
        )));
    }
    compositions(k, resolution, 1)
        .iter()
        .map(|c| WeightVector::new(scale(c, resolution)))
        .collect()
}

/// Number of points of [`simplex_grid`], for guarding oracle runtimes.
pub fn simplex_grid_size(len: usize, resolution: u32) -> u128 {
    // C(resolution + len - 1, len - 1)
    let (n, k) = (resolution as u128 + len as u128 - 1, len as u128 - 1);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_grid_counts() {
        assert_eq!(simplex_grid(2, 4).unwrap().len(), 5);
        assert_eq!(simplex_grid(3, 4).unwrap().len(), 15);
        assert_eq!(simplex_grid(1, 7).unwrap().len(), 1);
        assert_eq!(simplex_grid_size(3, 50), 1326);
        assert_eq!(simplex_grid(3, 50).unwrap().len(), 1326);
    }

    #[test]
    fn weight_grid_is_strictly_positive() {
        let w = weight_grid(2, 4).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w[0].as_slice(), &[rat(1, 4), rat(3, 4)]);
        assert_eq!(weight_grid(3, 8).unwrap().len(), 21);
        assert_eq!(weight_grid(1, 5).unwrap().len(), 1);
        assert!(weight_grid(3, 2).is_err());
    }
}

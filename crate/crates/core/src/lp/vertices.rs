//! Exact vertex enumeration for small polytopes.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_traits::Zero;

use crate::rational::{dot, Rational};

/// `{x in R^dim : E x = f, G x <= h}` given as `(row, rhs)` pairs.
#[derive(Clone, Debug, Default)]
pub struct Polytope {
    pub dim: usize,
    pub equalities: Vec<(Vec<Rational>, Rational)>,
    pub inequalities: Vec<(Vec<Rational>, Rational)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexList {
    /// Distinct vertices in lexicographic order.
    pub vertices: Vec<Vec<Rational>>,
    /// The cap was reached before all candidate bases were examined.
    pub truncated: bool,
}

/// Solves a square system exactly; `None` when it is singular.
pub fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for v in a[col].iter_mut().skip(col) {
            *v /= &p;
        }
        b[col] /= &p;
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for (v, w) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *v -= &f * w;
            }
            let delta = &f * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

/// Picks a maximal independent subset of the equalities. `None` if they are inconsistent.
fn independent_equalities(eqs: &[(Vec<Rational>, Rational)]) -> Option<Vec<usize>> {
    // echelon rows as (pivot column, row, rhs)
    let mut echelon: Vec<(usize, Vec<Rational>, Rational)> = Vec::new();
    let mut keep = Vec::new();
    for (idx, (row, rhs)) in eqs.iter().enumerate() {
        let mut r = row.clone();
        let mut b = rhs.clone();
        for (pc, er, eb) in &echelon {
            if r[*pc].is_zero() {
                continue;
            }
            let f = r[*pc].clone() / &er[*pc];
            for (x, y) in r.iter_mut().zip(er) {
                *x -= &f * y;
            }
            b -= &f * eb;
        }
        match r.iter().position(|v| !v.is_zero()) {
            Some(pc) => {
                echelon.push((pc, r, b));
                keep.push(idx);
            }
            None if !b.is_zero() => return None,
            None => {}
        }
    }
    Some(keep)
}

/// Enumerates vertices by solving every choice of tight inequalities.
///
/// Stops after `cap` distinct vertices. Unbounded directions are ignored: only
/// points where `dim` independent constraints are tight are reported.
pub fn vertices(p: &Polytope, cap: usize) -> VertexList {
    let Some(eq_rows) = independent_equalities(&p.equalities) else {
        return VertexList { vertices: Vec::new(), truncated: false };
    };
    let Some(free) = p.dim.checked_sub(eq_rows.len()) else {
        return VertexList { vertices: Vec::new(), truncated: false };
    };
    let feasible = |x: &[Rational]| {
        p.inequalities.iter().all(|(a, b)| &dot(a, x) <= b)
            && p.equalities.iter().all(|(a, b)| &dot(a, x) == b)
    };
    let mut found: BTreeSet<Vec<Rational>> = BTreeSet::new();
    let mut truncated = false;
    for tight in (0..p.inequalities.len()).combinations(free) {
        if found.len() >= cap {
            truncated = true;
            break;
        }
        let (a, b): (Vec<_>, Vec<_>) = eq_rows
            .iter()
            .map(|&i| &p.equalities[i])
            .chain(tight.iter().map(|&i| &p.inequalities[i]))
            .map(|(a, b)| (a.clone(), b.clone()))
            .unzip();
        if let Some(x) = solve_square(a, b) {
            if feasible(&x) {
                found.insert(x);
            }
        }
    }
    VertexList { vertices: found.into_iter().collect(), truncated }
}

use num_traits::{Signed, Zero};

use super::{LinearProgram, LpOutcome, LpSolution, Relation, Sense};
use crate::rational::Rational;

/// How an original variable is expressed through standard (nonnegative) ones.
enum VarMap {
    /// `x = offset + sign * s`
    Single { offset: Rational, col: usize, negated: bool },
    /// `x = s_pos - s_neg`
    Split { pos: usize, neg: usize },
}

struct StdRow {
    coeffs: Vec<Rational>,
    relation: Relation,
    rhs: Rational,
    flipped: bool,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// reduced costs, and the negated objective value
    costs: Vec<Rational>,
    value: Rational,
    /// first artificial column; artificials never re-enter
    art_start: usize,
}

enum Phase {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.rows[row][col].clone();
        for v in self.rows[row].iter_mut() {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        self.rhs[row] /= &p;
        let pivot_row = self.rows[row].clone();
        let pivot_rhs = self.rhs[row].clone();
        let nz: Vec<usize> = (0..pivot_row.len()).filter(|&j| !pivot_row[j].is_zero()).collect();
        for r in 0..self.rows.len() {
            if r == row || self.rows[r][col].is_zero() {
                continue;
            }
            let f = self.rows[r][col].clone();
            for &j in &nz {
                let delta = &f * &pivot_row[j];
                self.rows[r][j] -= delta;
            }
            self.rhs[r] -= &f * &pivot_rhs;
        }
        if !self.costs[col].is_zero() {
            let f = self.costs[col].clone();
            for &j in &nz {
                let delta = &f * &pivot_row[j];
                self.costs[j] -= delta;
            }
            self.value -= &f * &pivot_rhs;
        }
        self.basis[row] = col;
    }

    fn set_costs(&mut self, cost: &[Rational]) {
        let mut d = cost.to_vec();
        let mut value = Rational::zero();
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (j, a) in self.rows[r].iter().enumerate() {
                if !a.is_zero() {
                    d[j] -= cb * a;
                }
            }
            value -= cb * &self.rhs[r];
        }
        self.costs = d;
        self.value = value;
    }

    /// Minimize the current cost row with Bland's rule.
    fn run(&mut self) -> Phase {
        loop {
            let entering = (0..self.art_start).find(|&j| self.costs[j].is_negative());
            let Some(e) = entering else { return Phase::Optimal };
            let mut leave: Option<(usize, Rational)> = None;
            for r in 0..self.rows.len() {
                let a = &self.rows[r][e];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[r] / a;
                let better = match &leave {
                    None => true,
                    Some((lr, best)) => ratio < *best || (ratio == *best && self.basis[r] < self.basis[*lr]),
                };
                if better {
                    leave = Some((r, ratio));
                }
            }
            match leave {
                Some((r, _)) => self.pivot(r, e),
                None => return Phase::Unbounded,
            }
        }
    }
}

pub(super) fn solve(lp: &LinearProgram) -> LpOutcome {
    let n = lp.num_vars();

    // standard variables
    let mut maps = Vec::with_capacity(n);
    let mut n_std = 0usize;
    let mut bound_rows: Vec<(usize, Rational)> = Vec::new();
    for j in 0..n {
        match (&lp.lower[j], &lp.upper[j]) {
            (Some(l), u) => {
                if let Some(u) = u {
                    bound_rows.push((n_std, u - l));
                }
                maps.push(VarMap::Single { offset: l.clone(), col: n_std, negated: false });
                n_std += 1;
            }
            (None, Some(u)) => {
                maps.push(VarMap::Single { offset: u.clone(), col: n_std, negated: true });
                n_std += 1;
            }
            (None, None) => {
                maps.push(VarMap::Split { pos: n_std, neg: n_std + 1 });
                n_std += 2;
            }
        }
    }

    let translate = |coeffs: &[Rational]| -> (Vec<Rational>, Rational) {
        let mut out = vec![Rational::zero(); n_std];
        let mut constant = Rational::zero();
        for (a, map) in coeffs.iter().zip(&maps) {
            if a.is_zero() {
                continue;
            }
            match map {
                VarMap::Single { offset, col, negated } => {
                    constant += a * offset;
                    out[*col] = if *negated { -a } else { a.clone() };
                }
                VarMap::Split { pos, neg } => {
                    out[*pos] = a.clone();
                    out[*neg] = -a;
                }
            }
        }
        (out, constant)
    };

    let mut std_rows: Vec<StdRow> = Vec::new();
    for c in &lp.constraints {
        let (coeffs, constant) = translate(&c.coeffs);
        std_rows.push(StdRow { coeffs, relation: c.relation, rhs: &c.rhs - constant, flipped: false });
    }
    for (col, width) in &bound_rows {
        let mut coeffs = vec![Rational::zero(); n_std];
        coeffs[*col] = Rational::from_integer(1.into());
        std_rows.push(StdRow { coeffs, relation: Relation::Le, rhs: width.clone(), flipped: false });
    }
    for row in std_rows.iter_mut() {
        if row.rhs.is_negative() {
            row.flipped = true;
            row.rhs = -row.rhs.clone();
            for a in row.coeffs.iter_mut() {
                *a = -a.clone();
            }
            row.relation = match row.relation {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    // columns: standard vars, slacks, one artificial per row
    let m = std_rows.len();
    let slack_rows: Vec<usize> = (0..m).filter(|&r| std_rows[r].relation != Relation::Eq).collect();
    let art_start = n_std + slack_rows.len();
    let width = art_start + m;
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for (r, row) in std_rows.iter().enumerate() {
        let mut t = row.coeffs.clone();
        t.resize(width, Rational::zero());
        if let Some(s) = slack_rows.iter().position(|&x| x == r) {
            t[n_std + s] = Rational::from_integer(if row.relation == Relation::Le { 1 } else { -1 }.into());
        }
        t[art_start + r] = Rational::from_integer(1.into());
        rows.push(t);
        rhs.push(row.rhs.clone());
    }
    let mut tab = Tableau {
        rows,
        rhs,
        basis: (art_start..width).collect(),
        costs: Vec::new(),
        value: Rational::zero(),
        art_start,
    };

    // phase one
    let mut phase_one = vec![Rational::zero(); width];
    for c in phase_one.iter_mut().skip(art_start) {
        *c = Rational::from_integer(1.into());
    }
    tab.set_costs(&phase_one);
    // phase one is bounded below by zero
    let _ = tab.run();
    if !tab.value.is_zero() {
        return LpOutcome::Infeasible;
    }
    // drive zero-level artificials out where possible
    for r in 0..m {
        if tab.basis[r] >= art_start {
            if let Some(j) = (0..art_start).find(|&j| !tab.rows[r][j].is_zero()) {
                tab.pivot(r, j);
            }
        }
    }

    // phase two, always as a minimization
    let mut cost = vec![Rational::zero(); width];
    let (obj_std, _) = translate(&lp.objective);
    for (j, c) in obj_std.into_iter().enumerate() {
        cost[j] = if lp.sense == Sense::Maximize { -c } else { c };
    }
    tab.set_costs(&cost);
    if let Phase::Unbounded = tab.run() {
        return LpOutcome::Unbounded;
    }

    let mut std_values = vec![Rational::zero(); width];
    for (r, &b) in tab.basis.iter().enumerate() {
        std_values[b] = tab.rhs[r].clone();
    }
    let values: Vec<Rational> = maps
        .iter()
        .map(|map| match map {
            VarMap::Single { offset, col, negated } => {
                if *negated {
                    offset - &std_values[*col]
                } else {
                    offset + &std_values[*col]
                }
            }
            VarMap::Split { pos, neg } => &std_values[*pos] - &std_values[*neg],
        })
        .collect();
    let objective: Rational = lp.objective.iter().zip(&values).map(|(c, x)| c * x).sum();

    // y = c_B B^-1, read from the artificial columns
    let duals: Vec<Rational> = (0..lp.constraints.len())
        .map(|i| {
            let mut y = Rational::zero();
            for (r, &b) in tab.basis.iter().enumerate() {
                if !cost[b].is_zero() {
                    y += &cost[b] * &tab.rows[r][art_start + i];
                }
            }
            if std_rows[i].flipped {
                y = -y;
            }
            if lp.sense == Sense::Maximize {
                y = -y;
            }
            y
        })
        .collect();

    let mut is_basic = vec![false; width];
    for &b in &tab.basis {
        is_basic[b] = true;
    }
    let mut twin_of_basic = vec![false; width];
    for map in &maps {
        if let VarMap::Split { pos, neg } = map {
            if is_basic[*pos] {
                twin_of_basic[*neg] = true;
            }
            if is_basic[*neg] {
                twin_of_basic[*pos] = true;
            }
        }
    }
    let unique = (0..art_start).all(|j| is_basic[j] || twin_of_basic[j] || tab.costs[j].is_positive());

    LpOutcome::Optimal(LpSolution { values, objective, duals, unique })
}

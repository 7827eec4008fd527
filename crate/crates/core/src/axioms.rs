//! Instance checks for the axioms characterizing the two solution concepts.
//!
//! A solution map `f` sends a game with `k` criteria to a set of payoff
//! vectors. Each axiom is a predicate on `f` over a family of games; here it is
//! evaluated on one concrete instance with the subject's own solver. Set
//! comparisons on sampled sweeps can only refute at grid resolution, so those
//! report [`Verdict::Inconclusive`] unless the map is exact on the instance.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{GameError, Result};
use crate::game::{MultiGameD1, MultiGameD2, ScalarGame};
use crate::grid::weight_grid;
use crate::lp::{game_value, solve_lp, LinearProgram, LpOutcome, Relation, Sense, DEFAULT_TIE_CAP};
use crate::minimax::{vminmax_sweep, vminmax_weighted, MinimaxSweepConfig};
use crate::payoff::{distinct, PayoffPoint, PayoffSet, PayoffVector};
use crate::poss::{least_security_level, poss_lp, poss_sweep, poss_weighted, poss_weighted_ties, security_levels, single, PossResult};
use crate::rational::{format_rational, int, rat, Rational};
use crate::strategy::{MixedStrategy, WeightVector};
use crate::transforms::{amalgamate, d1_to_d2};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// One-by-one games map to their single payoff.
    A0,
    /// Lowering every entry can only lower the solution.
    A1,
    /// Adding a dominated column changes nothing.
    A2,
    /// Removing a column can only lower the solution.
    A3,
    /// Adding a dominated row changes nothing.
    A4,
    /// Removing a row can only raise the solution.
    A5,
    /// Two criteria merge through the amalgamated game.
    A6,
    /// Two criteria merge through a convex combination of their matrices.
    A7,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [Axiom::A0, Axiom::A1, Axiom::A2, Axiom::A3, Axiom::A4, Axiom::A5, Axiom::A6, Axiom::A7];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::A0 => "objectivity",
            Axiom::A1 => "monotonicity",
            Axiom::A2 => "dominated column",
            Axiom::A3 => "column elimination",
            Axiom::A4 => "dominated row",
            Axiom::A5 => "row elimination",
            Axiom::A6 => "consistency",
            Axiom::A7 => "linear consistency",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", *self as u8)
    }
}

impl FromStr for Axiom {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s.trim().trim_start_matches(['A', 'a']).trim_start_matches('.');
        match digits.parse::<usize>() {
            Ok(i) if i < 8 => Ok(Axiom::ALL[i]),
            _ => Err(GameError::Parse { input: s.to_string(), reason: "expected an axiom id A0 to A7".into() }),
        }
    }
}

/// The solution map under test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    /// Extended minimax payoffs from the weighted sweep.
    VMinmax,
    /// Pareto-optimal security payoffs from the weighted sweep.
    Vposs,
    /// Value of a scalar game.
    Val,
    /// Constant zero.
    H0,
    /// Top-left entry.
    H1,
    /// Minimum of the first column.
    H2,
}

impl Subject {
    pub const ALL: [Subject; 6] = [Subject::VMinmax, Subject::Vposs, Subject::Val, Subject::H0, Subject::H1, Subject::H2];

    /// Maps defined only on single-criterion games.
    pub fn is_scalar(self) -> bool {
        !matches!(self, Subject::VMinmax | Subject::Vposs)
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subject::VMinmax => "v-minmax",
            Subject::Vposs => "vposs",
            Subject::Val => "val",
            Subject::H0 => "h0",
            Subject::H1 => "h1",
            Subject::H2 => "h2",
        })
    }
}

impl FromStr for Subject {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        Subject::ALL
            .into_iter()
            .find(|subject| subject.to_string() == key || (key == "vminmax" && *subject == Subject::VMinmax))
            .ok_or_else(|| GameError::Parse {
                input: s.to_string(),
                reason: "expected one of v-minmax, vposs, val, h0, h1, h2".into(),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGame {
    Scalar(ScalarGame),
    D1(MultiGameD1),
    D2(MultiGameD2),
}

impl AnyGame {
    pub fn criteria(&self) -> usize {
        match self {
            AnyGame::Scalar(_) => 1,
            AnyGame::D1(g) => g.criteria(),
            AnyGame::D2(g) => g.criteria(),
        }
    }

    pub fn rows(&self) -> usize {
        match self {
            AnyGame::Scalar(a) => a.rows(),
            AnyGame::D1(g) => g.rows(),
            AnyGame::D2(g) => g.rows(),
        }
    }

    pub fn matrices(&self) -> Vec<ScalarGame> {
        match self {
            AnyGame::Scalar(a) => vec![a.clone()],
            AnyGame::D1(g) => g.matrices().to_vec(),
            AnyGame::D2(g) => g.matrices().to_vec(),
        }
    }

    /// A game of the same class built from new matrices.
    pub fn with_matrices(&self, mut matrices: Vec<ScalarGame>) -> Result<AnyGame> {
        match self {
            AnyGame::Scalar(_) if matrices.len() == 1 => Ok(AnyGame::Scalar(matrices.remove(0))),
            AnyGame::Scalar(_) => Err(GameError::Dimension(format!("a scalar game has one matrix, got {}", matrices.len()))),
            AnyGame::D1(_) => Ok(AnyGame::D1(MultiGameD1::new(matrices)?)),
            AnyGame::D2(_) => Ok(AnyGame::D2(MultiGameD2::new(matrices)?)),
        }
    }

    fn class(&self) -> &'static str {
        match self {
            AnyGame::Scalar(_) => "scalar",
            AnyGame::D1(_) => "d1",
            AnyGame::D2(_) => "d2",
        }
    }

    fn shape(&self) -> String {
        let cols: Vec<String> = self.matrices().iter().map(|a| a.cols().to_string()).collect();
        format!("{} game, k={}, m={}, n=({})", self.class(), self.criteria(), self.rows(), cols.join(","))
    }
}

/// The data an axiom is checked on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomInstance {
    /// The game whose criteria are the one-by-one matrices `[z_l]`.
    Objectivity { z: Vec<Rational> },
    /// `lower <= upper` entrywise, same shapes and class.
    Monotonicity { lower: AnyGame, upper: AnyGame },
    /// Columns appended at the end, given as `(criterion, column)`. A shared-strategy
    /// game needs one column for every criterion.
    ColumnDominance { game: AnyGame, additions: Vec<(usize, Vec<Rational>)> },
    /// `criterion` is required for per-criterion games; otherwise the column goes from every matrix.
    ColumnElimination { game: AnyGame, criterion: Option<usize>, column: usize },
    /// One row per criterion, appended at the bottom.
    RowDominance { game: AnyGame, row: Vec<Vec<Rational>> },
    RowElimination { game: AnyGame, row: usize },
    /// `focus` optionally names one merge weight to report on.
    Consistency { game: AnyGame, focus: Option<Rational> },
    LinearConsistency { game: AnyGame, focus: Option<Rational> },
}

impl AxiomInstance {
    pub fn axiom(&self) -> Axiom {
        match self {
            AxiomInstance::Objectivity { .. } => Axiom::A0,
            AxiomInstance::Monotonicity { .. } => Axiom::A1,
            AxiomInstance::ColumnDominance { .. } => Axiom::A2,
            AxiomInstance::ColumnElimination { .. } => Axiom::A3,
            AxiomInstance::RowDominance { .. } => Axiom::A4,
            AxiomInstance::RowElimination { .. } => Axiom::A5,
            AxiomInstance::Consistency { .. } => Axiom::A6,
            AxiomInstance::LinearConsistency { .. } => Axiom::A7,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            AxiomInstance::Objectivity { z } => format!("one-by-one game z={}", fmt_vec(z)),
            AxiomInstance::Monotonicity { upper, .. } => format!("lowered {}", upper.shape()),
            AxiomInstance::ColumnDominance { game, additions } => {
                let crit: Vec<String> = additions.iter().map(|(l, _)| (l + 1).to_string()).collect();
                format!("{} plus a dominated column in criteria {}", game.shape(), crit.join(","))
            }
            AxiomInstance::ColumnElimination { game, criterion, column } => match criterion {
                Some(l) => format!("{} without column {} of criterion {}", game.shape(), column + 1, l + 1),
                None => format!("{} without column {}", game.shape(), column + 1),
            },
            AxiomInstance::RowDominance { game, .. } => format!("{} plus a dominated row", game.shape()),
            AxiomInstance::RowElimination { game, row } => format!("{} without row {}", game.shape(), row + 1),
            AxiomInstance::Consistency { game, focus } | AxiomInstance::LinearConsistency { game, focus } => match focus {
                Some(t) => format!("{} merged at weight {}", game.shape(), format_rational(t)),
                None => game.shape(),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomConfig {
    pub weight_grid_resolution: u32,
    pub enumerate_ties: bool,
    pub tie_cap: usize,
    /// Times the merge-weight search grid is refined fourfold before giving up.
    pub escalations: u32,
    /// Bisection depth when certifying that no merge weight works.
    pub cover_depth: u32,
}

impl Default for AxiomConfig {
    fn default() -> Self {
        AxiomConfig { weight_grid_resolution: 16, enumerate_ties: true, tie_cap: DEFAULT_TIE_CAP, escalations: 2, cover_depth: 6 }
    }
}

impl AxiomConfig {
    pub fn with_resolution(mut self, r: u32) -> Self {
        self.weight_grid_resolution = r;
        self
    }

    pub fn sweep_config(&self) -> MinimaxSweepConfig {
        MinimaxSweepConfig {
            weight_grid_resolution: self.weight_grid_resolution,
            enumerate_ties: self.enumerate_ties,
            tie_cap: self.tie_cap,
            face_samples: 0,
        }
    }
}

/// One-criterion bound used on a stretch of merge weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    /// A fixed row strategy: its worst column payoff bounds the value from above.
    Upper(MixedStrategy),
    /// A fixed column strategy: its worst row payoff bounds the value from below.
    Lower(MixedStrategy),
}

/// On `[from, to]` the bound stays strictly on one side of the merged payoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundPiece {
    pub from: Rational,
    pub to: Rational,
    pub bound: Bound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MergeWeight {
    /// The merged point lies in the merged solution at this weight.
    Exact { point: PayoffVector, weight: Rational },
    /// The gap changes sign between the two weights, so it vanishes in between.
    Bracket { point: PayoffVector, from: Rational, to: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Objectivity { expected: PayoffVector, obtained: Vec<PayoffVector> },
    /// A left-hand point with no right-hand partner in the required direction.
    Unmatched { point: PayoffVector, alpha: Option<WeightVector>, candidates: Vec<PayoffVector> },
    /// No efficient payoff of the right-hand game is `>= point`. `ends` are the
    /// frontier's lexicographic minima; `best` is the least second level at
    /// first level `at`, or `None` when `at` is past the frontier's end.
    BeyondFrontier { point: PayoffVector, ends: Vec<PayoffVector>, at: Rational, best: Option<Rational> },
    /// Payoffs present on only one side of an equality.
    SetDifference { only_before: Vec<PayoffVector>, only_after: Vec<PayoffVector> },
    /// A merge weight for every solution point.
    MergeWeights(Vec<MergeWeight>),
    /// No weight in `(0, 1)` merges `point`: the value minus the merged payoff
    /// keeps sign `sign` throughout, certified piece by piece.
    NoMergeWeight { point: PayoffVector, sign: Ordering, pieces: Vec<BoundPiece> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: Axiom,
    pub subject: Subject,
    pub instance: AxiomInstance,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub detail: String,
}

impl AxiomReport {
    pub fn description(&self) -> String {
        self.instance.describe()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dominance {
    No,
    /// Convex weights of the combination that dominates.
    Yes(Vec<Rational>),
}

pub fn h0(_b: &ScalarGame) -> Rational {
    Rational::zero()
}

pub fn h1(b: &ScalarGame) -> Rational {
    b.get(0, 0).clone()
}

pub fn h2(b: &ScalarGame) -> Rational {
    b.column(0).into_iter().min().expect("games have at least one row")
}

/// Is `col` below some convex combination of the columns of `a`, row by row?
///
/// An exact combination is preferred when one exists.
pub fn is_dominated_column(a: &ScalarGame, col: &[Rational]) -> Result<Dominance> {
    is_dominated_column_joint(std::slice::from_ref(a), &[col.to_vec()])
}

/// Column dominance with one set of weights shared by every criterion.
pub fn is_dominated_column_joint(matrices: &[ScalarGame], cols: &[Vec<Rational>]) -> Result<Dominance> {
    if matrices.is_empty() || matrices.len() != cols.len() {
        return Err(GameError::Dimension(format!("{} matrices but {} columns", matrices.len(), cols.len())));
    }
    let n = matrices[0].cols();
    let mut rows = Vec::new();
    for (a, col) in matrices.iter().zip(cols) {
        if a.cols() != n {
            return Err(GameError::Dimension("shared column weights need equal column counts".into()));
        }
        if col.len() != a.rows() {
            return Err(GameError::Dimension(format!("column has {} entries, matrix has {} rows", col.len(), a.rows())));
        }
        for (i, target) in col.iter().enumerate() {
            rows.push((a.row(i).to_vec(), target.clone()));
        }
    }
    convex_cover(n, &rows, Relation::Ge)
}

/// Is the row tuple above some convex combination of the rows, in every criterion at once?
///
/// Player I minimizes, so a row is dominated when it is no better than the mix
/// in every column of every criterion. An exact combination is preferred.
pub fn is_dominated_row(matrices: &[ScalarGame], row: &[Vec<Rational>]) -> Result<Dominance> {
    if matrices.is_empty() || matrices.len() != row.len() {
        return Err(GameError::Dimension(format!("{} matrices but {} rows", matrices.len(), row.len())));
    }
    let m = matrices[0].rows();
    let mut rows = Vec::new();
    for (a, b) in matrices.iter().zip(row) {
        if a.rows() != m {
            return Err(GameError::Dimension("criteria disagree on the number of rows".into()));
        }
        if b.len() != a.cols() {
            return Err(GameError::Dimension(format!("row has {} entries, matrix has {} columns", b.len(), a.cols())));
        }
        for (j, target) in b.iter().enumerate() {
            rows.push((a.column(j), target.clone()));
        }
    }
    convex_cover(m, &rows, Relation::Le)
}

/// Finds convex weights `w` with `coeffs . w  rel  target` for every pair.
fn convex_cover(dim: usize, rows: &[(Vec<Rational>, Rational)], rel: Relation) -> Result<Dominance> {
    for relation in [Relation::Eq, rel] {
        let mut lp = LinearProgram::new(Sense::Minimize, vec![Rational::zero(); dim]);
        lp.add_constraint(vec![int(1); dim], Relation::Eq, int(1));
        for (coeffs, target) in rows {
            lp.add_constraint(coeffs.clone(), relation, target.clone());
        }
        match solve_lp(&lp)? {
            LpOutcome::Optimal(sol) => {
                let ok = rows.iter().all(|(c, t)| {
                    let lhs: Rational = c.iter().zip(&sol.values).map(|(a, w)| a * w).sum();
                    match relation {
                        Relation::Eq => &lhs == t,
                        Relation::Ge => &lhs >= t,
                        Relation::Le => &lhs <= t,
                    }
                });
                if !ok {
                    return Err(GameError::Solver("dominance weights fail their own constraints".into()));
                }
                return Ok(Dominance::Yes(sol.values));
            }
            LpOutcome::Infeasible => continue,
            LpOutcome::Unbounded => return Err(GameError::Solver("feasibility program reported unbounded".into())),
        }
    }
    Ok(Dominance::No)
}

fn as_d1(game: &AnyGame) -> Result<MultiGameD1> {
    match game {
        AnyGame::Scalar(a) => MultiGameD1::new(vec![a.clone()]),
        AnyGame::D1(g) => Ok(g.clone()),
        AnyGame::D2(_) => Err(GameError::Dimension(
            "v-minmax needs a game where player II plays one strategy against every criterion".into(),
        )),
    }
}

fn as_d2(game: &AnyGame) -> MultiGameD2 {
    match game {
        AnyGame::Scalar(a) => single(a),
        AnyGame::D1(g) => d1_to_d2(g),
        AnyGame::D2(g) => g.clone(),
    }
}

fn as_scalar(subject: Subject, game: &AnyGame) -> Result<ScalarGame> {
    match game.criteria() {
        1 => Ok(game.matrices().remove(0)),
        k => Err(GameError::Dimension(format!("{subject} is defined on single-criterion games, got k={k}"))),
    }
}

fn scalar_map(subject: Subject, b: &ScalarGame) -> Result<Rational> {
    Ok(match subject {
        Subject::Val => game_value(b)?.value,
        Subject::H0 => h0(b),
        Subject::H1 => h1(b),
        Subject::H2 => h2(b),
        Subject::VMinmax | Subject::Vposs => unreachable!("multicriteria subjects are swept"),
    })
}

/// The subject's solution set on `game`.
pub fn evaluate(subject: Subject, game: &AnyGame, cfg: &AxiomConfig) -> Result<PayoffSet> {
    match subject {
        Subject::VMinmax => vminmax_sweep(&as_d1(game)?, &cfg.sweep_config()),
        Subject::Vposs => poss_sweep(&as_d2(game), &cfg.sweep_config()),
        _ => {
            let v = scalar_map(subject, &as_scalar(subject, game)?)?;
            distinct(vec![PayoffPoint::bare(PayoffVector::new(vec![v]))])
        }
    }
}

fn weighted_set(subject: Subject, game: &AnyGame, alpha: &WeightVector, cfg: &AxiomConfig) -> Result<PayoffSet> {
    match subject {
        Subject::VMinmax => vminmax_weighted(&as_d1(game)?, alpha, &cfg.sweep_config()),
        Subject::Vposs if cfg.enumerate_ties => {
            distinct(poss_weighted_ties(&as_d2(game), alpha, cfg.tie_cap)?.iter().map(PossResult::to_point).collect())
        }
        Subject::Vposs => distinct(vec![poss_weighted(&as_d2(game), alpha)?.to_point()]),
        _ => evaluate(subject, game, cfg),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Direction {
    /// Each left point is `<=` some right point.
    Below,
    /// Each left point is `>=` some right point.
    Above,
}

fn unmatched<'a>(lhs: &'a PayoffSet, rhs: &[PayoffVector], dir: Direction) -> Option<&'a PayoffVector> {
    lhs.points().iter().map(|p| &p.payoff).find(|z| {
        !rhs.iter().any(|w| match dir {
            Direction::Below => PayoffVector::le(z, w),
            Direction::Above => PayoffVector::le(w, z),
        })
    })
}

fn objectivity_game(subject: Subject, z: &[Rational]) -> Result<AnyGame> {
    if z.is_empty() {
        return Err(GameError::Dimension("objectivity needs at least one criterion".into()));
    }
    let matrices = z.iter().map(|v| ScalarGame::new(vec![vec![v.clone()]])).collect::<Result<Vec<_>>>()?;
    match subject {
        Subject::VMinmax => Ok(AnyGame::D1(MultiGameD1::new(matrices)?)),
        Subject::Vposs => Ok(AnyGame::D2(MultiGameD2::new(matrices)?)),
        _ if z.len() == 1 => Ok(AnyGame::Scalar(matrices.into_iter().next().expect("one matrix"))),
        _ => Err(GameError::Dimension(format!("{subject} is defined on single-criterion games, got k={}", z.len()))),
    }
}

fn same_shape(a: &AnyGame, b: &AnyGame) -> Result<()> {
    let (ma, mb) = (a.matrices(), b.matrices());
    let same = a.class() == b.class()
        && ma.len() == mb.len()
        && ma.iter().zip(&mb).all(|(x, y)| x.rows() == y.rows() && x.cols() == y.cols());
    if same {
        Ok(())
    } else {
        Err(GameError::Dimension(format!("{} and {} differ in shape", a.shape(), b.shape())))
    }
}

fn column_extension(game: &AnyGame, additions: &[(usize, Vec<Rational>)]) -> Result<AnyGame> {
    let k = game.criteria();
    let mut matrices = game.matrices();
    let mut seen = BTreeSet::new();
    for (l, _) in additions {
        if *l >= k || !seen.insert(*l) {
            return Err(GameError::Dimension(format!("criterion index {} is out of range or repeated", l + 1)));
        }
    }
    if additions.is_empty() {
        return Err(GameError::Dimension("no column to add".into()));
    }
    let dominated = if let AnyGame::D1(_) = game {
        if additions.len() != k {
            return Err(GameError::Dimension("a shared-strategy game needs the new column in every criterion".into()));
        }
        let mut cols = vec![Vec::new(); k];
        for (l, c) in additions {
            cols[*l] = c.clone();
        }
        is_dominated_column_joint(&matrices, &cols)? != Dominance::No
    } else {
        let mut all = true;
        for (l, c) in additions {
            all &= is_dominated_column(&matrices[*l], c)? != Dominance::No;
        }
        all
    };
    if !dominated {
        return Err(GameError::Precondition("the added column is not dominated by a convex combination".into()));
    }
    for (l, c) in additions {
        matrices[*l] = matrices[*l].with_column(c)?;
    }
    game.with_matrices(matrices)
}

fn row_extension(game: &AnyGame, row: &[Vec<Rational>]) -> Result<AnyGame> {
    let matrices = game.matrices();
    if is_dominated_row(&matrices, row)? == Dominance::No {
        return Err(GameError::Precondition("the added row is not dominated by a convex combination".into()));
    }
    let extended = matrices.iter().zip(row).map(|(a, b)| a.with_row(b)).collect::<Result<Vec<_>>>()?;
    game.with_matrices(extended)
}

fn column_removal(game: &AnyGame, criterion: Option<usize>, column: usize) -> Result<AnyGame> {
    let mut matrices = game.matrices();
    match (game, criterion) {
        (AnyGame::D2(_), Some(l)) if l < matrices.len() => matrices[l] = matrices[l].without_column(column)?,
        (AnyGame::D2(_), _) => {
            return Err(GameError::Dimension("column removal in a per-criterion game needs a valid criterion".into()))
        }
        (_, None) | (AnyGame::Scalar(_), Some(0)) => {
            matrices = matrices.iter().map(|a| a.without_column(column)).collect::<Result<_>>()?
        }
        (_, Some(_)) => {
            return Err(GameError::Dimension("a shared-strategy game loses the column in every criterion".into()))
        }
    }
    game.with_matrices(matrices)
}

fn row_removal(game: &AnyGame, row: usize) -> Result<AnyGame> {
    game.with_matrices(game.matrices().iter().map(|a| a.without_row(row)).collect::<Result<_>>()?)
}

/// An inclusion check that can only be exact when the map is.
fn inclusion_report(exact: bool, lhs: &PayoffSet, rhs: &PayoffSet, dir: Direction) -> (Verdict, Option<Witness>, String) {
    let rhs_points = rhs.payoffs();
    match unmatched(lhs, &rhs_points, dir) {
        None => (Verdict::Holds, None, format!("all {} points matched", lhs.len())),
        Some(z) => {
            let verdict = if exact { Verdict::Fails } else { Verdict::Inconclusive };
            let rel = if dir == Direction::Below { "above" } else { "below" };
            let detail = format!("{} has no point {rel} it among {}", fmt_payoff(z), fmt_payoffs(&rhs_points));
            (verdict, Some(Witness::Unmatched { point: z.clone(), alpha: None, candidates: rhs_points }), detail)
        }
    }
}

fn equality_report(exact: bool, before: &PayoffSet, after: &PayoffSet) -> (Verdict, Option<Witness>, String) {
    if before.same_payoffs(after) {
        return (Verdict::Holds, None, format!("both sides have the same {} points", before.len()));
    }
    let (b, a) = (before.payoffs(), after.payoffs());
    let only_before: Vec<PayoffVector> = b.iter().filter(|z| !a.contains(z)).cloned().collect();
    let only_after: Vec<PayoffVector> = a.iter().filter(|z| !b.contains(z)).cloned().collect();
    let detail = format!("only before: {}; only after: {}", fmt_payoffs(&only_before), fmt_payoffs(&only_after));
    let verdict = if exact { Verdict::Fails } else { Verdict::Inconclusive };
    (verdict, Some(Witness::SetDifference { only_before, only_after }), detail)
}

/// Runs the axiom's defining predicate on one instance with the subject's solver.
pub fn check_axiom(axiom: Axiom, subject: Subject, instance: &AxiomInstance, cfg: &AxiomConfig) -> Result<AxiomReport> {
    if instance.axiom() != axiom {
        return Err(GameError::Precondition(format!("instance is for {}, not {axiom}", instance.axiom())));
    }
    let (verdict, witness, detail) = match instance {
        AxiomInstance::Objectivity { z } => {
            let set = evaluate(subject, &objectivity_game(subject, z)?, cfg)?;
            let expected = PayoffVector::new(z.clone());
            let obtained = set.payoffs();
            let detail = format!("returned {}", fmt_payoffs(&obtained));
            if obtained == [expected.clone()] {
                (Verdict::Holds, None, detail)
            } else {
                (Verdict::Fails, Some(Witness::Objectivity { expected, obtained }), detail)
            }
        }
        AxiomInstance::Monotonicity { lower, upper } => monotonicity(subject, lower, upper, cfg)?,
        AxiomInstance::ColumnDominance { game, additions } => {
            let extended = column_extension(game, additions)?;
            let exact = subject.is_scalar() || game.criteria() == 1;
            equality_report(exact, &evaluate(subject, game, cfg)?, &evaluate(subject, &extended, cfg)?)
        }
        AxiomInstance::RowDominance { game, row } => {
            let extended = row_extension(game, row)?;
            let exact = subject.is_scalar() || game.criteria() == 1;
            equality_report(exact, &evaluate(subject, game, cfg)?, &evaluate(subject, &extended, cfg)?)
        }
        AxiomInstance::ColumnElimination { game, criterion, column } => {
            let reduced = column_removal(game, *criterion, *column)?;
            let exact = subject.is_scalar() || game.criteria() == 1;
            inclusion_report(exact, &evaluate(subject, &reduced, cfg)?, &evaluate(subject, game, cfg)?, Direction::Below)
        }
        AxiomInstance::RowElimination { game, row } => {
            let reduced = row_removal(game, *row)?;
            let exact = subject.is_scalar() || game.criteria() == 1;
            inclusion_report(exact, &evaluate(subject, &reduced, cfg)?, &evaluate(subject, game, cfg)?, Direction::Above)
        }
        AxiomInstance::Consistency { game, focus } => merge_check(Merge::Amalgam, subject, game, focus.as_ref(), cfg)?,
        AxiomInstance::LinearConsistency { game, focus } => merge_check(Merge::Linear, subject, game, focus.as_ref(), cfg)?,
    };
    Ok(AxiomReport { axiom, subject, instance: instance.clone(), verdict, witness, detail })
}

fn monotonicity(
    subject: Subject,
    lower: &AnyGame,
    upper: &AnyGame,
    cfg: &AxiomConfig,
) -> Result<(Verdict, Option<Witness>, String)> {
    same_shape(lower, upper)?;
    for (a, b) in lower.matrices().iter().zip(upper.matrices()) {
        if !a.entrywise_le(&b)? {
            return Err(GameError::Precondition("the lowered game exceeds the original somewhere".into()));
        }
    }
    let k = upper.criteria();
    if subject.is_scalar() || k == 1 {
        return Ok(inclusion_report(true, &evaluate(subject, lower, cfg)?, &evaluate(subject, upper, cfg)?, Direction::Below));
    }
    let full = evaluate(subject, upper, cfg)?.payoffs();
    let frontier_game = (subject == Subject::Vposs && k == 2).then(|| as_d2(upper));
    let grid = weight_grid(k, cfg.weight_grid_resolution)?;
    let mut decided = 0;
    for alpha in &grid {
        let below = weighted_set(subject, lower, alpha, cfg)?;
        let mut candidates = weighted_set(subject, upper, alpha, cfg)?.payoffs();
        candidates.extend(full.iter().cloned());
        for z in below.points().iter().map(|p| &p.payoff) {
            if candidates.iter().any(|w| z.le(w)) {
                continue;
            }
            if let Some(g) = &frontier_game {
                match frontier_check(g, z)? {
                    FrontierCheck::Reached => {
                        decided += 1;
                        continue;
                    }
                    FrontierCheck::Missed { ends, at, best } => {
                        let detail = format!(
                            "at weights {alpha:?}, {} lies beyond the efficient frontier of the original game, which runs from {} to {}",
                            fmt_payoff(z),
                            fmt_payoff(&ends[0]),
                            fmt_payoff(&ends[1])
                        );
                        let witness = Witness::BeyondFrontier { point: z.clone(), ends, at, best };
                        return Ok((Verdict::Fails, Some(witness), detail));
                    }
                }
            }
            let detail = format!("at weights {alpha:?}, {} has no point above it among {}", fmt_payoff(z), fmt_payoffs(&candidates));
            let witness = Witness::Unmatched { point: z.clone(), alpha: Some(alpha.clone()), candidates };
            return Ok((Verdict::Inconclusive, Some(witness), detail));
        }
    }
    let extra = if decided > 0 { format!(", {decided} points matched on the exact frontier") } else { String::new() };
    Ok((Verdict::Holds, None, format!("matched at all {} grid weights{extra}", grid.len())))
}

enum FrontierCheck {
    /// A frontier point at or above the probe exists.
    Reached,
    /// See [`Witness::BeyondFrontier`].
    Missed { ends: Vec<PayoffVector>, at: Rational, best: Option<Rational> },
}

/// Decides whether some Pareto-optimal security payoff of a two-criterion game
/// is componentwise at least `z`.
///
/// The efficient security payoffs form a nonincreasing curve `(t, phi(t))` for
/// `t` between the two lexicographic minima, where `phi(t)` is the least second
/// level among strategies whose first level is at most `t`. The best candidate
/// is the leftmost admissible `t`.
fn frontier_check(g: &MultiGameD2, z: &PayoffVector) -> Result<FrontierCheck> {
    let least = |target: usize, caps: [Option<Rational>; 2]| -> Result<Rational> {
        least_security_level(g, target, &caps)?.ok_or_else(|| GameError::Solver("frontier program infeasible".into()))
    };
    let a1 = least(0, [None, None])?;
    let b1 = least(1, [Some(a1.clone()), None])?;
    let b2 = least(1, [None, None])?;
    let a2 = least(0, [None, Some(b2.clone())])?;
    let ends = vec![PayoffVector::new(vec![a1.clone(), b1]), PayoffVector::new(vec![a2.clone(), b2])];
    let (z1, z2) = (z.get(0), z.get(1));
    if z1 > &a2 {
        return Ok(FrontierCheck::Missed { ends, at: z1.clone(), best: None });
    }
    let t = a1.max(z1.clone());
    let phi = least(1, [Some(t.clone()), None])?;
    if &phi >= z2 {
        Ok(FrontierCheck::Reached)
    } else {
        Ok(FrontierCheck::Missed { ends, at: t, best: Some(phi) })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Merge {
    /// Criteria 1 and 2 become the amalgamated game.
    Amalgam,
    /// Criteria 1 and 2 become `t A(1) + (1 - t) A(2)`.
    Linear,
}

fn merged_matrix(kind: Merge, a1: &ScalarGame, a2: &ScalarGame, t: &Rational) -> Result<ScalarGame> {
    let s = Rational::one() - t;
    match kind {
        Merge::Amalgam => amalgamate(&[a1.clone(), a2.clone()], Some(&[t.clone(), s])),
        Merge::Linear => a1.scaled(t).try_add(&a2.scaled(&s)),
    }
}

fn merged_point(z: &PayoffVector, t: &Rational) -> PayoffVector {
    let c = z.as_slice();
    let mut out = vec![t * &c[0] + (Rational::one() - t) * &c[1]];
    out.extend(c[2..].iter().cloned());
    PayoffVector::new(out)
}

fn merged_game(kind: Merge, subject: Subject, matrices: &[ScalarGame], t: &Rational) -> Result<AnyGame> {
    let mut merged = vec![merged_matrix(kind, &matrices[0], &matrices[1], t)?];
    merged.extend(matrices[2..].iter().cloned());
    if subject == Subject::VMinmax {
        Ok(AnyGame::D1(MultiGameD1::new(merged)?))
    } else {
        Ok(AnyGame::D2(MultiGameD2::new(merged)?))
    }
}

/// Value of the merged two-criterion game minus the merged payoff.
fn gap(kind: Merge, a1: &ScalarGame, a2: &ScalarGame, z: &PayoffVector, t: &Rational) -> Result<Rational> {
    let value = game_value(&merged_matrix(kind, a1, a2, t)?)?.value;
    Ok(value - merged_point(z, t).get(0))
}

fn bound_gap(kind: Merge, a1: &ScalarGame, a2: &ScalarGame, z: &PayoffVector, bound: &Bound, t: &Rational) -> Result<Rational> {
    let g = merged_matrix(kind, a1, a2, t)?;
    let value = match bound {
        Bound::Upper(x) => g.left_mul(x.as_slice())?.into_iter().max(),
        Bound::Lower(y) => g.right_mul(y.as_slice())?.into_iter().min(),
    }
    .expect("nonempty game");
    Ok(value - merged_point(z, t).get(0))
}

/// Checks that one piece keeps the gap strictly of sign `sign` on its interior
/// and at any endpoint inside `(0, 1)`.
///
/// An upper bound minus the linear merged payoff is convex in `t`, a lower
/// bound minus it concave, so the endpoint and midpoint signs decide.
fn piece_certifies(
    kind: Merge,
    a1: &ScalarGame,
    a2: &ScalarGame,
    z: &PayoffVector,
    sign: Ordering,
    piece: &BoundPiece,
) -> Result<bool> {
    let expected = match (&piece.bound, sign) {
        (Bound::Upper(_), Ordering::Less) | (Bound::Lower(_), Ordering::Greater) => sign,
        _ => return Ok(false),
    };
    if piece.from >= piece.to || piece.from < Rational::zero() || piece.to > Rational::one() {
        return Ok(false);
    }
    let oriented = |t: &Rational| -> Result<Rational> {
        let h = bound_gap(kind, a1, a2, z, &piece.bound, t)?;
        Ok(if expected == Ordering::Less { h } else { -h })
    };
    let mid = (&piece.from + &piece.to) / int(2);
    let (ha, hb, hm) = (oriented(&piece.from)?, oriented(&piece.to)?, oriented(&mid)?);
    let zero = Rational::zero();
    let end_ok = |h: &Rational, at_boundary: bool| if at_boundary { h <= &zero } else { h < &zero };
    Ok(end_ok(&ha, piece.from.is_zero())
        && end_ok(&hb, piece.to.is_one())
        && (ha < zero || hb < zero || hm < zero))
}

fn cover(
    kind: Merge,
    a1: &ScalarGame,
    a2: &ScalarGame,
    z: &PayoffVector,
    sign: Ordering,
    (from, to): (Rational, Rational),
    depth: u32,
) -> Result<Option<Vec<BoundPiece>>> {
    let mid = (&from + &to) / int(2);
    let sol = game_value(&merged_matrix(kind, a1, a2, &mid)?)?;
    let bound = if sign == Ordering::Less { Bound::Upper(sol.x_opt) } else { Bound::Lower(sol.y_opt) };
    let piece = BoundPiece { from: from.clone(), to: to.clone(), bound };
    if piece_certifies(kind, a1, a2, z, sign, &piece)? {
        return Ok(Some(vec![piece]));
    }
    if depth == 0 {
        return Ok(None);
    }
    let Some(mut left) = cover(kind, a1, a2, z, sign, (from, mid.clone()), depth - 1)? else {
        return Ok(None);
    };
    let Some(right) = cover(kind, a1, a2, z, sign, (mid, to), depth - 1)? else {
        return Ok(None);
    };
    left.extend(right);
    Ok(Some(left))
}

fn pieces_certify(
    kind: Merge,
    a1: &ScalarGame,
    a2: &ScalarGame,
    z: &PayoffVector,
    sign: Ordering,
    pieces: &[BoundPiece],
) -> Result<bool> {
    let (Some(first), Some(last)) = (pieces.first(), pieces.last()) else {
        return Ok(false);
    };
    if !first.from.is_zero() || !last.to.is_one() || pieces.windows(2).any(|w| w[0].to != w[1].from) {
        return Ok(false);
    }
    for piece in pieces {
        if !piece_certifies(kind, a1, a2, z, sign, piece)? {
            return Ok(false);
        }
    }
    Ok(true)
}

enum Resolution {
    Found(MergeWeight),
    Refuted { sign: Ordering, pieces: Vec<BoundPiece> },
    Unknown,
}

fn merge_candidates(annotation: Option<&Rational>, cfg: &AxiomConfig) -> Vec<Rational> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut push = |t: Rational| {
        if seen.insert(t.clone()) {
            out.push(t);
        }
    };
    if let Some(t) = annotation {
        push(t.clone());
    }
    let mut r = i64::from(cfg.weight_grid_resolution.max(2));
    for _ in 0..=cfg.escalations {
        for i in 1..r {
            push(rat(i, r));
        }
        r *= 4;
    }
    out
}

/// `alpha_1 / (alpha_1 + alpha_2)` and the merged weight vector.
fn annotation_weights(alpha: &WeightVector) -> Result<(Rational, WeightVector)> {
    let a = alpha.as_slice();
    let head = &a[0] + &a[1];
    let t = &a[0] / &head;
    let mut beta = vec![head];
    beta.extend(a[2..].iter().cloned());
    Ok((t, WeightVector::new(beta)?))
}

fn resolve_point(kind: Merge, subject: Subject, matrices: &[ScalarGame], p: &PayoffPoint, cfg: &AxiomConfig) -> Result<Resolution> {
    let z = &p.payoff;
    let annotation = match &p.alpha {
        Some(alpha) => Some(annotation_weights(alpha)?),
        None => None,
    };
    if matrices.len() == 2 {
        // one criterion remains, where both subjects reduce to the value
        let (a1, a2) = (&matrices[0], &matrices[1]);
        let mut samples: Vec<(Rational, Ordering)> = Vec::new();
        for t in merge_candidates(annotation.as_ref().map(|(t, _)| t), cfg) {
            let g = gap(kind, a1, a2, z, &t)?;
            if g.is_zero() {
                return Ok(Resolution::Found(MergeWeight::Exact { point: z.clone(), weight: t }));
            }
            samples.push((t, g.cmp(&Rational::zero())));
        }
        samples.sort();
        if let Some(w) = samples.windows(2).find(|w| w[0].1 != w[1].1) {
            let (from, to) = (w[0].0.clone(), w[1].0.clone());
            return Ok(Resolution::Found(MergeWeight::Bracket { point: z.clone(), from, to }));
        }
        let sign = samples[0].1;
        return Ok(match cover(kind, a1, a2, z, sign, (Rational::zero(), Rational::one()), cfg.cover_depth)? {
            Some(pieces) => Resolution::Refuted { sign, pieces },
            None => Resolution::Unknown,
        });
    }
    if let (Some((t, beta)), Some(x)) = (&annotation, &p.strategy) {
        let merged = merged_game(kind, subject, matrices, t)?;
        let target = merged_point(z, t);
        let member = match subject {
            Subject::Vposs => {
                let g = as_d2(&merged);
                security_levels(&g, x)? == target && target.weighted(beta) == poss_lp(&g, beta)?.objective
            }
            _ => vminmax_weighted(&as_d1(&merged)?, beta, &cfg.sweep_config())?.contains(&target),
        };
        if member {
            return Ok(Resolution::Found(MergeWeight::Exact { point: z.clone(), weight: t.clone() }));
        }
    }
    let r = i64::from(cfg.weight_grid_resolution.max(2));
    for i in 1..r {
        let t = rat(i, r);
        let merged = merged_game(kind, subject, matrices, &t)?;
        if evaluate(subject, &merged, cfg)?.contains(&merged_point(z, &t)) {
            return Ok(Resolution::Found(MergeWeight::Exact { point: z.clone(), weight: t }));
        }
    }
    Ok(Resolution::Unknown)
}

fn merge_inputs(kind: Merge, subject: Subject, game: &AnyGame) -> Result<Vec<ScalarGame>> {
    if subject.is_scalar() {
        return Err(GameError::Dimension(format!("{subject} has no multicriteria version to merge")));
    }
    let matrices = game.matrices();
    if matrices.len() < 2 {
        return Err(GameError::Dimension("merging criteria needs at least two of them".into()));
    }
    if kind == Merge::Linear && matrices.iter().any(|a| a.cols() != matrices[0].cols()) {
        return Err(GameError::Dimension("a convex combination of criteria needs equal column counts".into()));
    }
    Ok(matrices)
}

fn merge_check(
    kind: Merge,
    subject: Subject,
    game: &AnyGame,
    focus: Option<&Rational>,
    cfg: &AxiomConfig,
) -> Result<(Verdict, Option<Witness>, String)> {
    let matrices = merge_inputs(kind, subject, game)?;
    if let Some(t) = focus {
        if t <= &Rational::zero() || t >= &Rational::one() {
            return Err(GameError::Precondition(format!("merge weight {} is outside (0, 1)", format_rational(t))));
        }
    }
    let set = evaluate(subject, game, cfg)?;
    let mut found = Vec::new();
    let mut unresolved = Vec::new();
    for p in set.points() {
        match resolve_point(kind, subject, &matrices, p, cfg)? {
            Resolution::Found(w) => found.push(w),
            Resolution::Unknown => unresolved.push(p.payoff.clone()),
            Resolution::Refuted { sign, pieces } => {
                let side = if sign == Ordering::Less { "below" } else { "above" };
                let mut detail = format!(
                    "for {} the merged value stays strictly {side} the merged payoff on (0, 1), {} bound pieces",
                    fmt_payoff(&p.payoff),
                    pieces.len()
                );
                if let Some(t) = focus {
                    let value = game_value(&merged_matrix(kind, &matrices[0], &matrices[1], t)?)?.value;
                    detail.push_str(&format!(
                        "; at weight {}: value {}, merged payoff {}",
                        format_rational(t),
                        format_rational(&value),
                        format_rational(merged_point(&p.payoff, t).get(0))
                    ));
                }
                return Ok((Verdict::Fails, Some(Witness::NoMergeWeight { point: p.payoff.clone(), sign, pieces }), detail));
            }
        }
    }
    if unresolved.is_empty() {
        Ok((Verdict::Holds, Some(Witness::MergeWeights(found)), format!("all {} points merge consistently", set.len())))
    } else {
        let detail = format!("no merge weight found for {}", fmt_payoffs(&unresolved));
        Ok((Verdict::Inconclusive, Some(Witness::MergeWeights(found)), detail))
    }
}

/// Re-derives a failing report's violation from its witness.
///
/// Returns `Ok(true)` when the violation reproduces.
pub fn replay_witness(report: &AxiomReport, cfg: &AxiomConfig) -> Result<bool> {
    let (Verdict::Fails, Some(witness)) = (report.verdict, &report.witness) else {
        return Err(GameError::Precondition("only failing reports carry a violation to replay".into()));
    };
    let subject = report.subject;
    match (&report.instance, witness) {
        (AxiomInstance::Objectivity { z }, Witness::Objectivity { expected, obtained }) => {
            let set = evaluate(subject, &objectivity_game(subject, z)?, cfg)?.payoffs();
            Ok(expected.as_slice() == z.as_slice() && &set == obtained && set != [expected.clone()])
        }
        (AxiomInstance::Monotonicity { lower, upper }, Witness::Unmatched { point, .. }) => {
            replay_unmatched(subject, lower, upper, point, Direction::Below, cfg)
        }
        (AxiomInstance::Monotonicity { lower, upper }, Witness::BeyondFrontier { point, ends, at, best }) => {
            let missed = match frontier_check(&as_d2(upper), point)? {
                FrontierCheck::Missed { ends: e, at: a, best: b } => &e == ends && &a == at && &b == best,
                FrontierCheck::Reached => false,
            };
            Ok(missed && evaluate(subject, lower, cfg)?.contains(point))
        }
        (AxiomInstance::ColumnElimination { game, criterion, column }, Witness::Unmatched { point, .. }) => {
            replay_unmatched(subject, &column_removal(game, *criterion, *column)?, game, point, Direction::Below, cfg)
        }
        (AxiomInstance::RowElimination { game, row }, Witness::Unmatched { point, .. }) => {
            replay_unmatched(subject, &row_removal(game, *row)?, game, point, Direction::Above, cfg)
        }
        (AxiomInstance::ColumnDominance { game, additions }, Witness::SetDifference { only_before, only_after }) => {
            replay_difference(subject, game, &column_extension(game, additions)?, only_before, only_after, cfg)
        }
        (AxiomInstance::RowDominance { game, row }, Witness::SetDifference { only_before, only_after }) => {
            replay_difference(subject, game, &row_extension(game, row)?, only_before, only_after, cfg)
        }
        (AxiomInstance::Consistency { game, .. }, Witness::NoMergeWeight { point, sign, pieces }) => {
            replay_merge(Merge::Amalgam, subject, game, point, *sign, pieces, cfg)
        }
        (AxiomInstance::LinearConsistency { game, .. }, Witness::NoMergeWeight { point, sign, pieces }) => {
            replay_merge(Merge::Linear, subject, game, point, *sign, pieces, cfg)
        }
        _ => Ok(false),
    }
}

fn replay_unmatched(
    subject: Subject,
    left: &AnyGame,
    right: &AnyGame,
    point: &PayoffVector,
    dir: Direction,
    cfg: &AxiomConfig,
) -> Result<bool> {
    let lhs = evaluate(subject, left, cfg)?;
    let rhs = evaluate(subject, right, cfg)?.payoffs();
    let matched = rhs.iter().any(|w| if dir == Direction::Below { point.le(w) } else { w.le(point) });
    Ok(lhs.contains(point) && !matched)
}

fn replay_difference(
    subject: Subject,
    before: &AnyGame,
    after: &AnyGame,
    only_before: &[PayoffVector],
    only_after: &[PayoffVector],
    cfg: &AxiomConfig,
) -> Result<bool> {
    let (b, a) = (evaluate(subject, before, cfg)?, evaluate(subject, after, cfg)?);
    let nonempty = !only_before.is_empty() || !only_after.is_empty();
    Ok(nonempty
        && only_before.iter().all(|z| b.contains(z) && !a.contains(z))
        && only_after.iter().all(|z| a.contains(z) && !b.contains(z)))
}

fn replay_merge(
    kind: Merge,
    subject: Subject,
    game: &AnyGame,
    point: &PayoffVector,
    sign: Ordering,
    pieces: &[BoundPiece],
    cfg: &AxiomConfig,
) -> Result<bool> {
    let matrices = merge_inputs(kind, subject, game)?;
    if matrices.len() != 2 || !evaluate(subject, game, cfg)?.contains(point) {
        return Ok(false);
    }
    pieces_certify(kind, &matrices[0], &matrices[1], point, sign, pieces)
}

/// How a pair of axioms is shown independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Separation {
    /// The subject's reports on the two axioms disagree.
    Checked { subject: Subject, holds: Option<Axiom>, fails: Axiom },
    /// The separating map is not part of this crate.
    External { map: &'static str },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCell {
    pub pair: (Axiom, Axiom),
    pub separation: Separation,
    /// Every pinned report the cell relies on has the expected verdict.
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceTable {
    pub reports: Vec<AxiomReport>,
    pub cells: Vec<TableCell>,
}

fn pinned(rows: &[&[i64]]) -> ScalarGame {
    ScalarGame::from_ints(rows).expect("pinned matrix is rectangular")
}

fn ints(values: &[i64]) -> Vec<Rational> {
    values.iter().map(|&v| int(v)).collect()
}

/// The shared-strategy game with criteria `(1, 0)` and `(0, 1)`.
pub fn segment_game() -> MultiGameD1 {
    MultiGameD1::new(vec![pinned(&[&[1, 0]]), pinned(&[&[0, 1]])]).expect("pinned game")
}

/// The same matrices with player II answering each criterion separately.
pub fn segment_game_d2() -> MultiGameD2 {
    d1_to_d2(&segment_game())
}

/// Pinned instances for the rows of the independence table this crate can check itself.
pub fn independence_table(cfg: &AxiomConfig) -> Result<IndependenceTable> {
    let b = AnyGame::Scalar(pinned(&[&[3, 5], &[2, 7]]));
    let lowered = AnyGame::Scalar(pinned(&[&[1, 5], &[2, 6]]));
    let cases: Vec<(Subject, AxiomInstance)> = vec![
        (Subject::H0, AxiomInstance::Objectivity { z: ints(&[5]) }),
        (Subject::H0, AxiomInstance::Monotonicity { lower: lowered.clone(), upper: b.clone() }),
        (Subject::H0, AxiomInstance::ColumnElimination { game: b.clone(), criterion: None, column: 0 }),
        (Subject::H0, AxiomInstance::RowDominance { game: b.clone(), row: vec![ints(&[4, 8])] }),
        (Subject::H0, AxiomInstance::RowElimination { game: b.clone(), row: 0 }),
        (Subject::H1, AxiomInstance::Monotonicity { lower: lowered, upper: b.clone() }),
        (Subject::H1, AxiomInstance::ColumnDominance { game: b.clone(), additions: vec![(0, ints(&[3, 4]))] }),
        (Subject::H1, AxiomInstance::ColumnElimination { game: b.clone(), criterion: None, column: 0 }),
        (Subject::H1, AxiomInstance::RowDominance { game: b.clone(), row: vec![ints(&[4, 8])] }),
        (Subject::H1, AxiomInstance::RowElimination { game: b.clone(), row: 0 }),
        (Subject::H2, AxiomInstance::ColumnElimination { game: b.clone(), criterion: None, column: 0 }),
        (Subject::H2, AxiomInstance::RowElimination { game: b, row: 0 }),
        (Subject::VMinmax, AxiomInstance::Consistency { game: AnyGame::D1(segment_game()), focus: None }),
        (Subject::Vposs, AxiomInstance::LinearConsistency { game: AnyGame::D2(segment_game_d2()), focus: Some(rat(3, 4)) }),
    ];
    let mut reports = Vec::with_capacity(cases.len());
    for (subject, instance) in cases {
        reports.push(check_axiom(instance.axiom(), subject, &instance, cfg)?);
    }
    let verdict = |subject: Subject, axiom: Axiom| {
        reports.iter().find(|r| r.subject == subject && r.axiom == axiom).map(|r| r.verdict)
    };
    let checked = |pair: (Axiom, Axiom), subject: Subject, holds: Axiom, fails: Axiom| {
        let fails_ok = verdict(subject, fails) == Some(Verdict::Fails);
        let holds_seen = verdict(subject, holds);
        TableCell {
            pair,
            separation: Separation::Checked { subject, holds: holds_seen.map(|_| holds), fails },
            verified: fails_ok && holds_seen.is_none_or(|v| v == Verdict::Holds),
        }
    };
    let external = |pair: (Axiom, Axiom), map: &'static str| TableCell {
        pair,
        separation: Separation::External { map },
        verified: false,
    };
    use Axiom::*;
    let mut cells = vec![
        checked((A0, A1), Subject::H0, A1, A0),
        external((A0, A2), "external construction, not implemented"),
        checked((A0, A3), Subject::H0, A3, A0),
        checked((A0, A4), Subject::H0, A4, A0),
        checked((A0, A5), Subject::H0, A5, A0),
        external((A1, A2), "external construction, not implemented"),
        checked((A1, A3), Subject::H1, A1, A3),
        external((A1, A4), "external construction, not implemented"),
        external((A1, A5), "external construction, not implemented"),
        checked((A2, A3), Subject::H1, A2, A3),
        external((A2, A4), "external construction, not implemented"),
        checked((A2, A5), Subject::H1, A2, A5),
        checked((A3, A4), Subject::H1, A4, A3),
        checked((A3, A5), Subject::H2, A5, A3),
        external((A4, A5), "external construction, not implemented"),
    ];
    for a in [A0, A1, A2, A3, A4, A5] {
        cells.push(checked((a, A6), Subject::VMinmax, a, A6));
    }
    for a in [A0, A1, A2, A3, A4, A5, A6] {
        cells.push(checked((a, A7), Subject::Vposs, a, A7));
    }
    Ok(IndependenceTable { reports, cells })
}

fn fmt_vec(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn fmt_payoff(z: &PayoffVector) -> String {
    fmt_vec(z.as_slice())
}

fn fmt_payoffs(zs: &[PayoffVector]) -> String {
    let parts: Vec<String> = zs.iter().map(fmt_payoff).collect();
    format!("{{{}}}", parts.join(", "))
}

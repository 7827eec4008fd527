//! Command dispatch and report building.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::str::FromStr;

use mcgame::axioms::{
    check_axiom, independence_table, replay_witness, AnyGame, Axiom, AxiomConfig, AxiomInstance, AxiomReport, Bound,
    MergeWeight, Separation, Subject, Verdict, Witness,
};
use mcgame::game::{MultiGameD1, MultiGameD2, ScalarGame};
use mcgame::lp::{game_value, game_value_with_ties, DEFAULT_TIE_CAP};
use mcgame::minimax::{lipschitz_slack, vminmax_oracle, vminmax_sweep, MinimaxSweepConfig, OracleConfig};
use mcgame::payoff::{PayoffPoint, PayoffSet, PayoffVector};
use mcgame::poss::{poss_oracle, poss_sweep, security_levels, single};
use mcgame::rational::{format_decimal, format_rational, parse_rational, Rational};
use mcgame::strategy::MixedStrategy;
use mcgame::transforms::{amalgamate_with_cap, d1_to_d2, em_construct_with_cap, product_game_with_cap, DEFAULT_SIZE_CAP};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::gamefile::{emit_game, game_json, GameFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flags {
    /// Weight grid resolution; the solver default for the criteria count when absent.
    pub grid: Option<u32>,
    pub x_grid: u32,
    /// Oracle grid for player II; 1 for security games and 8 for shared ones when absent.
    pub y_grid: Option<u32>,
    pub ties: bool,
    pub tie_cap: usize,
    pub size_cap: u128,
    pub format: Format,
    pub fail_on_axiom_violation: bool,
    pub decimals: Option<usize>,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            grid: None,
            x_grid: 50,
            y_grid: None,
            ties: true,
            tie_cap: DEFAULT_TIE_CAP,
            size_cap: DEFAULT_SIZE_CAP,
            format: Format::Text,
            fail_on_axiom_violation: false,
            decimals: None,
        }
    }
}

/// An exact rational given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact(pub Rational);

impl FromStr for Exact {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        parse_rational(s).map(Exact).map_err(|e| e.to_string())
    }
}

/// Comma-separated rationals, `"1/2,1/2"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalList(pub Vec<Rational>);

impl FromStr for RationalList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',').map(|p| parse_rational(p).map_err(|e| e.to_string())).collect::<Result<_, _>>().map(RationalList)
    }
}

/// `"l:v1,v2"`: a column for criterion `l`, counted from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnSpec {
    pub criterion: usize,
    pub column: Vec<Rational>,
}

impl FromStr for ColumnSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (l, values) = s.split_once(':').ok_or_else(|| format!("expected criterion:values, got {s:?}"))?;
        Ok(ColumnSpec { criterion: one_based(l.trim())?, column: RationalList::from_str(values)?.0 })
    }
}

/// `"r1;r2"`: the new row in each criterion, separated by semicolons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpec(pub Vec<Vec<Rational>>);

impl FromStr for RowSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(';').map(|r| RationalList::from_str(r).map(|l| l.0)).collect::<Result<_, _>>().map(RowSpec)
    }
}

fn one_based(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("indices count from 1, got {s:?}")),
        Ok(i) => Ok(i - 1),
    }
}

/// Instance data for `check-axiom`; indices count from 0 here.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AxiomParams {
    pub lower: Option<GameFile>,
    pub add_columns: Vec<ColumnSpec>,
    pub column: Option<usize>,
    pub criterion: Option<usize>,
    pub add_row: Option<RowSpec>,
    pub row: Option<usize>,
    pub focus: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Value,
    Minimax,
    Poss,
    Security { strategy: Vec<Rational> },
    Amalgamate { weights: Option<Vec<Rational>> },
    Em,
    ProductGame,
    CheckAxiom { axiom: Axiom, subject: Subject, params: Box<AxiomParams> },
    IndependenceTable,
    OracleCompare,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Value => "value",
            Command::Minimax => "minimax",
            Command::Poss => "poss",
            Command::Security { .. } => "security",
            Command::Amalgamate { .. } => "amalgamate",
            Command::Em => "em",
            Command::ProductGame => "product-game",
            Command::CheckAxiom { .. } => "check-axiom",
            Command::IndependenceTable => "independence-table",
            Command::OracleCompare => "oracle-compare",
        }
    }

    pub fn needs_game(&self) -> bool {
        !matches!(self, Command::IndependenceTable)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub document: Value,
    pub text: String,
    /// An axiom check returned `fails`.
    pub axiom_failed: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Structured => {
                let mut s = serde_json::to_string_pretty(&self.document).expect("JSON values always serialize");
                s.push('\n');
                s
            }
        }
    }
}

struct Out {
    decimals: Option<usize>,
    text: String,
}

impl Out {
    fn num(&self, v: &Rational) -> Value {
        match self.decimals {
            None => Value::String(format_rational(v)),
            Some(d) => json!({"exact": format_rational(v), "decimal": format_decimal(v, d)}),
        }
    }

    fn nums(&self, v: &[Rational]) -> Value {
        Value::Array(v.iter().map(|x| self.num(x)).collect())
    }

    fn point(&self, p: &PayoffPoint) -> Value {
        let mut map = Map::new();
        map.insert("payoff".into(), self.nums(p.payoff.as_slice()));
        if let Some(x) = &p.strategy {
            map.insert("strategy".into(), self.nums(x.as_slice()));
        }
        if let Some(a) = &p.alpha {
            map.insert("weights".into(), self.nums(a.as_slice()));
        }
        Value::Object(map)
    }

    fn set(&self, s: &PayoffSet) -> Value {
        Value::Array(s.points().iter().map(|p| self.point(p)).collect())
    }

    fn payoffs(&self, v: &[PayoffVector]) -> Value {
        Value::Array(v.iter().map(|p| self.nums(p.as_slice())).collect())
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set_lines(&mut self, s: &PayoffSet) {
        for p in s.points() {
            let mut line = tuple(p.payoff.as_slice());
            if let Some(x) = &p.strategy {
                let _ = write!(line, "  strategy {}", tuple(x.as_slice()));
            }
            if let Some(a) = &p.alpha {
                let _ = write!(line, "  weights {}", tuple(a.as_slice()));
            }
            self.line(line);
        }
    }

    fn matrix_lines(&mut self, label: &str, a: &ScalarGame) {
        self.line(format!("{label} ({}x{}):", a.rows(), a.cols()));
        let cells: Vec<Vec<String>> = a.to_rows().iter().map(|r| r.iter().map(format_rational).collect()).collect();
        let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
        for r in cells {
            let padded: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
            self.line(format!("  [{}]", padded.join(" ")));
        }
    }
}

fn tuple(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(format_rational).collect();
    format!("({})", parts.join(", "))
}

fn as_scalar(game: &AnyGame) -> Result<ScalarGame, CliError> {
    let mut matrices = game.matrices();
    if matrices.len() != 1 {
        return Err(CliError::Dimension(format!("needs a single-criterion game, got {} criteria", matrices.len())));
    }
    Ok(matrices.remove(0))
}

fn as_d1(game: &AnyGame) -> Result<MultiGameD1, CliError> {
    match game {
        AnyGame::D1(g) => Ok(g.clone()),
        AnyGame::Scalar(a) => Ok(MultiGameD1::new(vec![a.clone()])?),
        AnyGame::D2(g) if g.criteria() == 1 => Ok(MultiGameD1::new(g.matrices().to_vec())?),
        AnyGame::D2(_) => Err(CliError::Dimension(
            "needs a shared-strategy (d1) game; em or product-game convert a d2 game".into(),
        )),
    }
}

fn as_d2(game: &AnyGame) -> MultiGameD2 {
    match game {
        AnyGame::D2(g) => g.clone(),
        AnyGame::D1(g) => d1_to_d2(g),
        AnyGame::Scalar(a) => single(a),
    }
}

fn sweep_config(k: usize, flags: &Flags) -> MinimaxSweepConfig {
    let mut cfg = MinimaxSweepConfig::for_criteria(k);
    if let Some(r) = flags.grid {
        cfg.weight_grid_resolution = r;
    }
    cfg.enumerate_ties = flags.ties;
    cfg.tie_cap = flags.tie_cap;
    cfg
}

fn sweep_settings(cfg: &MinimaxSweepConfig) -> Value {
    json!({"grid": cfg.weight_grid_resolution, "ties": cfg.enumerate_ties, "tie_cap": cfg.tie_cap})
}

fn axiom_config(flags: &Flags) -> AxiomConfig {
    let mut cfg = AxiomConfig::default();
    if let Some(r) = flags.grid {
        cfg.weight_grid_resolution = r;
    }
    cfg.enumerate_ties = flags.ties;
    cfg.tie_cap = flags.tie_cap;
    cfg
}

fn check_grid(flags: &Flags) -> Result<(), CliError> {
    for (name, v) in [("--grid", flags.grid), ("--x-grid", Some(flags.x_grid)), ("--y-grid", flags.y_grid)] {
        if v == Some(0) {
            return Err(CliError::Usage(format!("{name} must be positive")));
        }
    }
    if flags.tie_cap == 0 {
        return Err(CliError::Usage("--tie-cap must be positive".into()));
    }
    Ok(())
}

/// Runs one command. `game` is required unless the command is `independence-table`.
pub fn run_command(cmd: &Command, game: Option<&GameFile>, flags: &Flags) -> Result<Report, CliError> {
    check_grid(flags)?;
    let input = match (cmd.needs_game(), game) {
        (true, Some(f)) => Some(f),
        (true, None) => return Err(CliError::Usage(format!("{} needs a game file", cmd.name()))),
        (false, _) => None,
    };
    let mut out = Out { decimals: flags.decimals, text: String::new() };
    let mut axiom_failed = false;
    let (settings, result) = match cmd {
        Command::Value => value(&mut out, input.expect("checked"), flags)?,
        Command::Minimax => {
            let g = as_d1(&input.expect("checked").game)?;
            let cfg = sweep_config(g.criteria(), flags);
            let set = vminmax_sweep(&g, &cfg)?;
            out.line(format!("minimax payoffs ({} points, weight grid 1/{}):", set.len(), cfg.weight_grid_resolution));
            out.set_lines(&set);
            (sweep_settings(&cfg), json!({"points": out.set(&set)}))
        }
        Command::Poss => {
            let g = as_d2(&input.expect("checked").game);
            let cfg = sweep_config(g.criteria(), flags);
            let set = poss_sweep(&g, &cfg)?;
            out.line(format!(
                "Pareto-optimal security payoffs ({} points, weight grid 1/{}):",
                set.len(),
                cfg.weight_grid_resolution
            ));
            out.set_lines(&set);
            (sweep_settings(&cfg), json!({"points": out.set(&set)}))
        }
        Command::Security { strategy } => {
            let g = as_d2(&input.expect("checked").game);
            let x = MixedStrategy::new(strategy.clone())?;
            let levels = security_levels(&g, &x)?;
            out.line(format!("security levels of {}: {}", tuple(x.as_slice()), tuple(levels.as_slice())));
            (json!({"strategy": out.nums(x.as_slice())}), json!({"levels": out.nums(levels.as_slice())}))
        }
        Command::Amalgamate { weights } => {
            let matrices = input.expect("checked").game.matrices();
            let a = amalgamate_with_cap(&matrices, weights.as_deref(), flags.size_cap)?;
            out.matrix_lines("amalgamated game", &a);
            let settings = match weights {
                Some(w) => json!({"weights": out.nums(w), "size_cap": flags.size_cap.to_string()}),
                None => json!({"weights": Value::Null, "size_cap": flags.size_cap.to_string()}),
            };
            (settings, json!({"game": game_json(&AnyGame::Scalar(a))}))
        }
        Command::Em | Command::ProductGame => {
            let g = as_d2(&input.expect("checked").game);
            let built = if *cmd == Command::Em {
                em_construct_with_cap(&g, flags.size_cap)?
            } else {
                product_game_with_cap(&g, flags.size_cap)?
            };
            for (l, a) in built.matrices().iter().enumerate() {
                out.matrix_lines(&format!("criterion {}", l + 1), a);
            }
            (json!({"size_cap": flags.size_cap.to_string()}), json!({"game": game_json(&AnyGame::D1(built))}))
        }
        Command::CheckAxiom { axiom, subject, params } => {
            let cfg = axiom_config(flags);
            let instance = axiom_instance(*axiom, &input.expect("checked").game, params)?;
            let report = check_axiom(*axiom, *subject, &instance, &cfg)?;
            axiom_failed = report.verdict == Verdict::Fails;
            let replayed = if axiom_failed && report.witness.is_some() { Some(replay_witness(&report, &cfg)?) } else { None };
            let mut doc = report_json(&out, &report);
            if let Some(r) = replayed {
                doc["witness_replays"] = Value::Bool(r);
            }
            report_lines(&mut out, &report);
            if let Some(r) = replayed {
                out.line(format!("witness replays: {r}"));
            }
            (axiom_settings(&cfg), doc)
        }
        Command::IndependenceTable => {
            let cfg = axiom_config(flags);
            let table = independence_table(&cfg)?;
            let mut cells = Vec::new();
            out.line("pair      separation");
            for cell in &table.cells {
                let pair = format!("{}/{}", cell.pair.0, cell.pair.1);
                let mut entry = json!({"pair": [cell.pair.0.to_string(), cell.pair.1.to_string()], "verified": cell.verified});
                match &cell.separation {
                    Separation::Checked { subject, holds, fails } => {
                        entry["separation"] = json!("checked");
                        entry["subject"] = json!(subject.to_string());
                        entry["holds"] = holds.map_or(Value::Null, |a| json!(a.to_string()));
                        entry["fails"] = json!(fails.to_string());
                        let holds_text = holds.map_or("not checked".to_string(), |a| format!("{a} holds"));
                        let mark = if cell.verified { "verified" } else { "NOT verified" };
                        out.line(format!("{pair:<9} {subject}: {holds_text}, {fails} fails ({mark})"));
                    }
                    Separation::External { map } => {
                        entry["separation"] = json!("external");
                        entry["note"] = json!(map);
                        out.line(format!("{pair:<9} {map}"));
                    }
                }
                cells.push(entry);
            }
            let reports: Vec<Value> = table.reports.iter().map(|r| report_json(&out, r)).collect();
            (axiom_settings(&cfg), json!({"cells": cells, "reports": reports}))
        }
        Command::OracleCompare => oracle_compare(&mut out, input.expect("checked"), flags)?,
    };
    let mut document = Map::new();
    document.insert("command".into(), json!(cmd.name()));
    document.insert("input".into(), input.map_or(Value::Null, emit_game));
    document.insert("settings".into(), settings);
    document.insert("result".into(), result);
    Ok(Report { document: Value::Object(document), text: out.text, axiom_failed })
}

fn value(out: &mut Out, input: &GameFile, flags: &Flags) -> Result<(Value, Value), CliError> {
    let a = as_scalar(&input.game)?;
    let res = if flags.ties { game_value_with_ties(&a, flags.tie_cap)? } else { game_value(&a)? };
    out.line(format!("value {}", format_rational(&res.value)));
    out.line(format!("row strategy {}", tuple(res.x_opt.as_slice())));
    out.line(format!("column strategy {}", tuple(res.y_opt.as_slice())));
    let mut result = json!({
        "value": out.num(&res.value),
        "row_strategy": out.nums(res.x_opt.as_slice()),
        "column_strategy": out.nums(res.y_opt.as_slice()),
    });
    let vertices = |vs: &[MixedStrategy]| Value::Array(vs.iter().map(|v| out.nums(v.as_slice())).collect());
    if let Some(xs) = &res.x_vertices {
        result["row_vertices"] = vertices(xs);
    }
    if let Some(ys) = &res.y_vertices {
        result["column_vertices"] = vertices(ys);
    }
    for (label, vs) in [("row", &res.x_vertices), ("column", &res.y_vertices)] {
        if let Some(vs) = vs.as_ref().filter(|v| v.len() > 1) {
            let list: Vec<String> = vs.iter().map(|v| tuple(v.as_slice())).collect();
            out.line(format!("optimal {label} vertices {}", list.join(" ")));
        }
    }
    Ok((json!({"ties": flags.ties, "tie_cap": flags.tie_cap}), result))
}

fn oracle_compare(out: &mut Out, input: &GameFile, flags: &Flags) -> Result<(Value, Value), CliError> {
    let (mode, y_grid, sweep, oracle, bound) = match &input.game {
        AnyGame::D1(g) => {
            let y_grid = flags.y_grid.unwrap_or(8);
            let cfg = sweep_config(g.criteria(), flags);
            let sweep = vminmax_sweep(g, &cfg)?;
            let oracle = vminmax_oracle(g, &OracleConfig::new(flags.x_grid, y_grid))?;
            ("minimax", y_grid, sweep, oracle, g.max_abs_entry())
        }
        other => {
            let g = as_d2(other);
            let y_grid = flags.y_grid.unwrap_or(1);
            let cfg = sweep_config(g.criteria(), flags);
            let sweep = poss_sweep(&g, &cfg)?;
            let oracle = poss_oracle(&g, &OracleConfig::new(flags.x_grid, y_grid))?;
            ("security", y_grid, sweep, oracle, g.max_abs_entry())
        }
    };
    let k = input.game.criteria();
    let cfg = sweep_config(k, flags);
    let slack = lipschitz_slack(&bound, flags.x_grid);
    let mut violations = Vec::new();
    for s in sweep.points() {
        // for a minimizing player, an oracle point below by the slack in every criterion beats the sweep
        let beats = |o: &&PayoffPoint| o.payoff.as_slice().iter().zip(s.payoff.as_slice()).all(|(a, b)| a + &slack <= *b);
        if let Some(o) = oracle.points().iter().find(beats) {
            violations.push((s, o));
        }
    }
    out.line(format!(
        "{mode} sweep ({} points, weight grid 1/{}) against oracle ({} points, x-grid 1/{}, y-grid 1/{y_grid})",
        sweep.len(),
        cfg.weight_grid_resolution,
        oracle.len(),
        flags.x_grid
    ));
    out.line(format!("slack {}", format_rational(&slack)));
    out.line(format!("soundness violations: {}", violations.len()));
    for (s, o) in &violations {
        out.line(format!("  sweep {} beaten by oracle {}", tuple(s.payoff.as_slice()), tuple(o.payoff.as_slice())));
    }
    let mut settings = sweep_settings(&cfg);
    settings["x_grid"] = json!(flags.x_grid);
    settings["y_grid"] = json!(y_grid);
    let result = json!({
        "mode": mode,
        "slack": out.num(&slack),
        "sweep": out.set(&sweep),
        "oracle_points": oracle.len(),
        "violation_count": violations.len(),
        "violations": violations.iter().map(|(s, o)| json!({"sweep": out.point(s), "oracle": out.point(o)})).collect::<Vec<_>>(),
    });
    Ok((settings, result))
}

fn axiom_instance(axiom: Axiom, game: &AnyGame, p: &AxiomParams) -> Result<AxiomInstance, CliError> {
    let missing = |flag: &str| CliError::Usage(format!("{axiom} needs {flag}"));
    let game = game.clone();
    Ok(match axiom {
        Axiom::A0 => {
            let z = game
                .matrices()
                .iter()
                .map(|a| if a.rows() == 1 && a.cols() == 1 { Ok(a.get(0, 0).clone()) } else { Err(()) })
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| CliError::Dimension("A0 is checked on a game with one-by-one matrices".into()))?;
            AxiomInstance::Objectivity { z }
        }
        Axiom::A1 => {
            let lower = p.lower.as_ref().ok_or_else(|| missing("--lower"))?;
            AxiomInstance::Monotonicity { lower: lower.game.clone(), upper: game }
        }
        Axiom::A2 => {
            if p.add_columns.is_empty() {
                return Err(missing("--add-column"));
            }
            let additions = p.add_columns.iter().map(|c| (c.criterion, c.column.clone())).collect();
            AxiomInstance::ColumnDominance { game, additions }
        }
        Axiom::A3 => AxiomInstance::ColumnElimination {
            game,
            criterion: p.criterion,
            column: p.column.ok_or_else(|| missing("--column"))?,
        },
        Axiom::A4 => AxiomInstance::RowDominance { game, row: p.add_row.clone().ok_or_else(|| missing("--add-row"))?.0 },
        Axiom::A5 => AxiomInstance::RowElimination { game, row: p.row.ok_or_else(|| missing("--row"))? },
        Axiom::A6 => AxiomInstance::Consistency { game, focus: p.focus.clone() },
        Axiom::A7 => AxiomInstance::LinearConsistency { game, focus: p.focus.clone() },
    })
}

fn axiom_settings(cfg: &AxiomConfig) -> Value {
    json!({
        "grid": cfg.weight_grid_resolution,
        "ties": cfg.enumerate_ties,
        "tie_cap": cfg.tie_cap,
        "escalations": cfg.escalations,
        "cover_depth": cfg.cover_depth,
    })
}

fn report_json(out: &Out, r: &AxiomReport) -> Value {
    json!({
        "axiom": r.axiom.to_string(),
        "subject": r.subject.to_string(),
        "instance": r.instance.describe(),
        "verdict": r.verdict.to_string(),
        "detail": r.detail,
        "witness": r.witness.as_ref().map_or(Value::Null, |w| witness_json(out, w)),
    })
}

fn report_lines(out: &mut Out, r: &AxiomReport) {
    out.line(format!("{} ({}) for {}: {}", r.axiom, r.axiom.name(), r.subject, r.verdict));
    out.line(format!("instance: {}", r.instance.describe()));
    out.line(format!("detail: {}", r.detail));
    if let Some(w) = &r.witness {
        out.line(format!("witness: {}", witness_text(w)));
    }
}

fn sign_name(sign: Ordering) -> &'static str {
    match sign {
        Ordering::Less => "negative",
        Ordering::Equal => "zero",
        Ordering::Greater => "positive",
    }
}

fn witness_json(out: &Out, w: &Witness) -> Value {
    match w {
        Witness::Objectivity { expected, obtained } => json!({
            "kind": "objectivity",
            "expected": out.nums(expected.as_slice()),
            "obtained": out.payoffs(obtained),
        }),
        Witness::Unmatched { point, alpha, candidates } => json!({
            "kind": "unmatched",
            "point": out.nums(point.as_slice()),
            "weights": alpha.as_ref().map_or(Value::Null, |a| out.nums(a.as_slice())),
            "candidates": out.payoffs(candidates),
        }),
        Witness::BeyondFrontier { point, ends, at, best } => json!({
            "kind": "beyond_frontier",
            "point": out.nums(point.as_slice()),
            "ends": out.payoffs(ends),
            "at": out.num(at),
            "best": best.as_ref().map_or(Value::Null, |b| out.num(b)),
        }),
        Witness::SetDifference { only_before, only_after } => json!({
            "kind": "set_difference",
            "only_before": out.payoffs(only_before),
            "only_after": out.payoffs(only_after),
        }),
        Witness::MergeWeights(weights) => json!({
            "kind": "merge_weights",
            "weights": weights.iter().map(|m| match m {
                MergeWeight::Exact { point, weight } => json!({
                    "point": out.nums(point.as_slice()),
                    "exact": out.num(weight),
                }),
                MergeWeight::Bracket { point, from, to } => json!({
                    "point": out.nums(point.as_slice()),
                    "bracket": [out.num(from), out.num(to)],
                }),
            }).collect::<Vec<_>>(),
        }),
        Witness::NoMergeWeight { point, sign, pieces } => json!({
            "kind": "no_merge_weight",
            "point": out.nums(point.as_slice()),
            "gap_sign": sign_name(*sign),
            "pieces": pieces.iter().map(|p| {
                let (kind, s) = match &p.bound {
                    Bound::Upper(s) => ("upper", s),
                    Bound::Lower(s) => ("lower", s),
                };
                json!({"from": out.num(&p.from), "to": out.num(&p.to), "bound": kind, "strategy": out.nums(s.as_slice())})
            }).collect::<Vec<_>>(),
        }),
    }
}

fn witness_text(w: &Witness) -> String {
    let list = |v: &[PayoffVector]| v.iter().map(|p| tuple(p.as_slice())).collect::<Vec<_>>().join(" ");
    match w {
        Witness::Objectivity { expected, obtained } => {
            format!("expected {{{}}}, obtained {{{}}}", tuple(expected.as_slice()), list(obtained))
        }
        Witness::Unmatched { point, alpha, candidates } => {
            let at = alpha.as_ref().map_or(String::new(), |a| format!(" at weights {}", tuple(a.as_slice())));
            format!("{} has no match{at} among {{{}}}", tuple(point.as_slice()), list(candidates))
        }
        Witness::BeyondFrontier { point, ends, at, best } => {
            let best = best.as_ref().map_or("none".to_string(), format_rational);
            format!(
                "{} lies beyond the frontier with ends {{{}}}; at first level {} the best second level is {best}",
                tuple(point.as_slice()),
                list(ends),
                format_rational(at)
            )
        }
        Witness::SetDifference { only_before, only_after } => {
            format!("only before {{{}}}, only after {{{}}}", list(only_before), list(only_after))
        }
        Witness::MergeWeights(weights) => weights
            .iter()
            .map(|m| match m {
                MergeWeight::Exact { point, weight } => format!("{} at t={}", tuple(point.as_slice()), format_rational(weight)),
                MergeWeight::Bracket { point, from, to } => {
                    format!("{} with t in [{}, {}]", tuple(point.as_slice()), format_rational(from), format_rational(to))
                }
            })
            .collect::<Vec<_>>()
            .join("; "),
        Witness::NoMergeWeight { point, sign, pieces } => format!(
            "{} has no merge weight: the gap stays {} on (0, 1), covered by {} bound pieces",
            tuple(point.as_slice()),
            sign_name(*sign),
            pieces.len()
        ),
    }
}


//! Dense two-phase primal simplex.
//!
//! Problems are stated as
//!
//! ```text
//! minimize    c·x
//! subject to  a_i·x {≤, ≥, =} b_i     for every constraint row i
//!             l_j ≤ x_j ≤ u_j         (either bound may be infinite)
//! ```
//!
//! Variables are shifted or mirrored onto `y ≥ 0`, finite upper bounds
//! become explicit rows, every row is scaled to unit max-norm and the
//! resulting standard form is solved on a dense tableau. Entering and
//! leaving variables are chosen with Bland's rule, so degenerate problems
//! terminate and produce the same vertex on every run.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Feasibility / optimality tolerance, applied after row scaling.
pub const TOLERANCE: f64 = 1e-9;
/// Smallest tableau entry accepted as a pivot.
pub const PIVOT_TOLERANCE: f64 = 1e-10;

const MAX_PIVOTS: usize = 100_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Constraint {
    pub coefficients: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

impl Constraint {
    /// Amount by which `x` violates this row, divided by the row's max-norm.
    pub fn scaled_violation(&self, x: &[f64]) -> f64 {
        let lhs: f64 = self.coefficients.iter().zip(x).map(|(a, v)| a * v).sum();
        let norm = self
            .coefficients
            .iter()
            .fold(0.0f64, |m, a| m.max(a.abs()))
            .max(1.0);
        let raw = match self.relation {
            Relation::LessEq => lhs - self.rhs,
            Relation::GreaterEq => self.rhs - lhs,
            Relation::Equal => (lhs - self.rhs).abs(),
        };
        raw.max(0.0) / norm
    }
}

/// Box bound on one variable. Infinite values mean "unbounded on that side".
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bound {
    pub lower: f64,
    pub upper: f64,
}

impl Bound {
    pub const NON_NEGATIVE: Bound = Bound {
        lower: 0.0,
        upper: f64::INFINITY,
    };
    pub const FREE: Bound = Bound {
        lower: f64::NEG_INFINITY,
        upper: f64::INFINITY,
    };

    pub fn new(lower: f64, upper: f64) -> Self {
        Self { lower, upper }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearProgram {
    objective: Vec<f64>,
    constraints: Vec<Constraint>,
    bounds: Vec<Bound>,
}

impl LinearProgram {
    /// A minimization of `objective·x` with every variable in `[0, ∞)`.
    pub fn new(objective: Vec<f64>) -> Self {
        let bounds = vec![Bound::NON_NEGATIVE; objective.len()];
        Self {
            objective,
            constraints: Vec::new(),
            bounds,
        }
    }

    pub fn add_constraint(&mut self, coefficients: Vec<f64>, relation: Relation, rhs: f64) {
        self.constraints.push(Constraint {
            coefficients,
            relation,
            rhs,
        });
    }

    /// Panics if `var` is out of range.
    pub fn set_bound(&mut self, var: usize, lower: f64, upper: f64) {
        self.bounds[var] = Bound::new(lower, upper);
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn objective(&self) -> &[f64] {
        &self.objective
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn bounds(&self) -> &[Bound] {
        &self.bounds
    }

    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }

    /// Largest scaled violation over all rows and bounds.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let rows = self
            .constraints
            .iter()
            .map(|c| c.scaled_violation(x))
            .fold(0.0, f64::max);
        let bounds = self
            .bounds
            .iter()
            .zip(x)
            .map(|(b, &v)| (b.lower - v).max(v - b.upper).max(0.0))
            .fold(0.0, f64::max);
        rows.max(bounds)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.num_vars();
        if self.bounds.len() != n {
            return Err(Error::LengthMismatch {
                what: "variable bounds",
                expected: n,
                found: self.bounds.len(),
            });
        }
        if let Some(c) = self.objective.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "objective coefficient {c} is not finite"
            )));
        }
        for (i, row) in self.constraints.iter().enumerate() {
            if row.coefficients.len() != n {
                return Err(Error::InvalidInput(format!(
                    "constraint row {i} has {} coefficients, program has {n} variables",
                    row.coefficients.len()
                )));
            }
            if !row.rhs.is_finite() || row.coefficients.iter().any(|a| !a.is_finite()) {
                return Err(Error::InvalidInput(format!(
                    "constraint row {i} has a non-finite entry"
                )));
            }
        }
        for (j, b) in self.bounds.iter().enumerate() {
            if b.lower.is_nan()
                || b.upper.is_nan()
                || b.lower == f64::INFINITY
                || b.upper == f64::NEG_INFINITY
                || b.lower > b.upper
            {
                return Err(Error::InvalidInput(format!(
                    "variable {j} has invalid bounds [{}, {}]",
                    b.lower, b.upper
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum LpSolution {
    Optimal { x: Vec<f64>, objective_value: f64 },
    Infeasible,
    Unbounded,
}

impl LpSolution {
    pub fn status(&self) -> LpStatus {
        match self {
            LpSolution::Optimal { .. } => LpStatus::Optimal,
            LpSolution::Infeasible => LpStatus::Infeasible,
            LpSolution::Unbounded => LpStatus::Unbounded,
        }
    }

    pub fn x(&self) -> Option<&[f64]> {
        match self {
            LpSolution::Optimal { x, .. } => Some(x),
            _ => None,
        }
    }

    pub fn objective_value(&self) -> Option<f64> {
        match self {
            LpSolution::Optimal {
                objective_value, ..
            } => Some(*objective_value),
            _ => None,
        }
    }
}

/// How an original variable is expressed through non-negative columns.
#[derive(Debug, Clone, Copy)]
enum VarMap {
    /// x = lower + y
    Shift { col: usize, lower: f64 },
    /// x = upper − y
    Mirror { col: usize, upper: f64 },
    /// x = y⁺ − y⁻
    Split { pos: usize, neg: usize },
}

struct Row {
    coefficients: Vec<f64>,
    relation: Relation,
    rhs: f64,
}

pub fn solve(lp: &LinearProgram) -> Result<LpSolution> {
    lp.validate()?;

    // Map every variable onto y ≥ 0.
    let mut maps = Vec::with_capacity(lp.num_vars());
    let mut structural = 0usize;
    for b in lp.bounds() {
        let map = if b.lower.is_finite() {
            structural += 1;
            VarMap::Shift {
                col: structural - 1,
                lower: b.lower,
            }
        } else if b.upper.is_finite() {
            structural += 1;
            VarMap::Mirror {
                col: structural - 1,
                upper: b.upper,
            }
        } else {
            structural += 2;
            VarMap::Split {
                pos: structural - 2,
                neg: structural - 1,
            }
        };
        maps.push(map);
    }

    let substitute = |coefficients: &[f64]| -> (Vec<f64>, f64) {
        let mut out = vec![0.0; structural];
        let mut constant = 0.0;
        for (a, map) in coefficients.iter().zip(&maps) {
            match *map {
                VarMap::Shift { col, lower } => {
                    out[col] += a;
                    constant += a * lower;
                }
                VarMap::Mirror { col, upper } => {
                    out[col] -= a;
                    constant += a * upper;
                }
                VarMap::Split { pos, neg } => {
                    out[pos] += a;
                    out[neg] -= a;
                }
            }
        }
        (out, constant)
    };

    let mut rows = Vec::with_capacity(lp.constraints().len() + lp.num_vars());
    for c in lp.constraints() {
        let (coefficients, constant) = substitute(&c.coefficients);
        rows.push(Row {
            coefficients,
            relation: c.relation,
            rhs: c.rhs - constant,
        });
    }
    for (b, map) in lp.bounds().iter().zip(&maps) {
        if let VarMap::Shift { col, lower } = *map {
            if b.upper.is_finite() {
                let mut coefficients = vec![0.0; structural];
                coefficients[col] = 1.0;
                rows.push(Row {
                    coefficients,
                    relation: Relation::LessEq,
                    rhs: b.upper - lower,
                });
            }
        }
    }

    // Scale to unit max-norm, drop empty rows, make every rhs non-negative.
    let mut kept = Vec::with_capacity(rows.len());
    for mut row in rows {
        let norm = row.coefficients.iter().fold(0.0f64, |m, a| m.max(a.abs()));
        if norm == 0.0 {
            let satisfied = match row.relation {
                Relation::LessEq => row.rhs >= -TOLERANCE,
                Relation::GreaterEq => row.rhs <= TOLERANCE,
                Relation::Equal => row.rhs.abs() <= TOLERANCE,
            };
            if !satisfied {
                return Ok(LpSolution::Infeasible);
            }
            continue;
        }
        row.coefficients.iter_mut().for_each(|a| *a /= norm);
        row.rhs /= norm;
        if row.rhs < 0.0 {
            row.coefficients.iter_mut().for_each(|a| *a = -*a);
            row.rhs = -row.rhs;
            row.relation = match row.relation {
                Relation::LessEq => Relation::GreaterEq,
                Relation::GreaterEq => Relation::LessEq,
                Relation::Equal => Relation::Equal,
            };
        }
        kept.push(row);
    }

    let (objective, _) = substitute(lp.objective());
    let y = match Tableau::new(&kept, &objective, structural).run()? {
        Phase::Optimal(y) => y,
        Phase::Infeasible => return Ok(LpSolution::Infeasible),
        Phase::Unbounded => return Ok(LpSolution::Unbounded),
    };

    let x: Vec<f64> = maps
        .iter()
        .zip(lp.bounds())
        .map(|(map, b)| {
            let v = match *map {
                VarMap::Shift { col, lower } => lower + y[col],
                VarMap::Mirror { col, upper } => upper - y[col],
                VarMap::Split { pos, neg } => y[pos] - y[neg],
            };
            v.clamp(b.lower, b.upper)
        })
        .collect();
    let objective_value = lp.evaluate(&x);
    Ok(LpSolution::Optimal { x, objective_value })
}

enum Phase {
    Optimal(Vec<f64>),
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// Constraint rows; the last entry of each row is the rhs.
    rows: Vec<Vec<f64>>,
    basis: Vec<usize>,
    /// Phase-two reduced costs; last entry is −objective.
    cost: Vec<f64>,
    /// Phase-one reduced costs over the artificial sum.
    artificial_cost: Vec<f64>,
    structural: usize,
    /// First artificial column.
    artificial_start: usize,
    width: usize,
}

impl Tableau {
    fn new(rows: &[Row], objective: &[f64], structural: usize) -> Self {
        let slacks = rows
            .iter()
            .filter(|r| r.relation != Relation::Equal)
            .count();
        let artificials = rows
            .iter()
            .filter(|r| r.relation != Relation::LessEq)
            .count();
        let artificial_start = structural + slacks;
        let width = artificial_start + artificials;

        let mut table = Vec::with_capacity(rows.len());
        let mut basis = Vec::with_capacity(rows.len());
        let mut artificial_cost = vec![0.0; width + 1];
        let mut next_slack = structural;
        let mut next_artificial = artificial_start;
        for row in rows {
            let mut t = vec![0.0; width + 1];
            t[..structural].copy_from_slice(&row.coefficients);
            t[width] = row.rhs;
            match row.relation {
                Relation::LessEq => {
                    t[next_slack] = 1.0;
                    basis.push(next_slack);
                    next_slack += 1;
                }
                Relation::GreaterEq => {
                    t[next_slack] = -1.0;
                    next_slack += 1;
                    t[next_artificial] = 1.0;
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
                Relation::Equal => {
                    t[next_artificial] = 1.0;
                    basis.push(next_artificial);
                    next_artificial += 1;
                }
            }
            if row.relation != Relation::LessEq {
                // Price out the basic artificial.
                for (acc, v) in artificial_cost.iter_mut().zip(&t) {
                    *acc -= v;
                }
            }
            table.push(t);
        }
        for c in &mut artificial_cost[artificial_start..width] {
            *c = 0.0;
        }

        let mut cost = vec![0.0; width + 1];
        cost[..structural].copy_from_slice(objective);

        Self {
            rows: table,
            basis,
            cost,
            artificial_cost,
            structural,
            artificial_start,
            width,
        }
    }

    fn run(mut self) -> Result<Phase> {
        if self.artificial_start < self.width {
            let limit = self.width;
            match self.iterate(true, limit)? {
                Step::Optimal => {}
                Step::Unbounded => {
                    return Err(Error::Internal(
                        "phase one reported an unbounded artificial objective".into(),
                    ))
                }
            }
            let scale = self
                .rows
                .iter()
                .fold(1.0f64, |m, r| m.max(r[self.width].abs()));
            if -self.artificial_cost[self.width] > TOLERANCE * scale {
                return Ok(Phase::Infeasible);
            }
            self.expel_artificials();
        }
        let limit = self.artificial_start;
        match self.iterate(false, limit)? {
            Step::Optimal => {}
            Step::Unbounded => return Ok(Phase::Unbounded),
        }
        let mut y = vec![0.0; self.structural];
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            if b < self.structural {
                y[b] = row[self.width].max(0.0);
            }
        }
        Ok(Phase::Optimal(y))
    }

    /// Bland's rule iterations over columns `< limit`.
    fn iterate(&mut self, phase_one: bool, limit: usize) -> Result<Step> {
        for _ in 0..MAX_PIVOTS {
            let costs = if phase_one {
                &self.artificial_cost
            } else {
                &self.cost
            };
            let Some(entering) = (0..limit).find(|&j| costs[j] < -TOLERANCE) else {
                return Ok(Step::Optimal);
            };

            let mut leaving: Option<(usize, f64)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                let a = row[entering];
                if a <= PIVOT_TOLERANCE {
                    continue;
                }
                let ratio = row[self.width].max(0.0) / a;
                leaving = match leaving {
                    None => Some((i, ratio)),
                    Some((best, best_ratio)) => {
                        let tie = (ratio - best_ratio).abs() <= 1e-12 * (1.0 + best_ratio);
                        if (!tie && ratio < best_ratio) || (tie && self.basis[i] < self.basis[best])
                        {
                            Some((i, ratio))
                        } else {
                            Some((best, best_ratio))
                        }
                    }
                };
            }
            let Some((row, _)) = leaving else {
                return Ok(Step::Unbounded);
            };
            self.pivot(row, entering);
        }
        Err(Error::Internal(format!(
            "simplex did not terminate within {MAX_PIVOTS} pivots"
        )))
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        self.rows[r][c] = 1.0;
        let pivot_row = self.rows[r].clone();
        let eliminate = |target: &mut Vec<f64>| {
            let f = target[c];
            if f != 0.0 {
                for (t, &pv) in target.iter_mut().zip(&pivot_row) {
                    *t -= f * pv;
                }
                target[c] = 0.0;
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        eliminate(&mut self.artificial_cost);
        self.basis[r] = c;
    }

    /// Pivot zero-level artificials out of the basis; drop rows that are
    /// linear combinations of the others.
    fn expel_artificials(&mut self) {
        let mut i = 0;
        while i < self.rows.len() {
            if self.basis[i] >= self.artificial_start {
                let replacement =
                    (0..self.artificial_start).find(|&j| self.rows[i][j].abs() > PIVOT_TOLERANCE);
                match replacement {
                    Some(j) => self.pivot(i, j),
                    None => {
                        self.rows.remove(i);
                        self.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }
}

enum Step {
    Optimal,
    Unbounded,
}

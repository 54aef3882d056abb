//! Dense two-phase tableau simplex with Bland's anti-cycling rule.
//!
//! Solves `maximize c·x subject to A x ≤ b, x ≥ 0`. Rows with `b_i < 0`
//! get an artificial variable that phase one drives to zero.

use crate::{Error, Result};

/// Pivot and reduced-cost tolerance.
pub const FEASIBILITY_TOL: f64 = 1e-10;

const MAX_PIVOTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub objective: Vec<f64>,
    pub constraints: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective: f64,
}

struct Tableau {
    rows: Vec<Vec<f64>>,
    /// Reduced costs, with `-z` in the last slot.
    costs: Vec<f64>,
    basis: Vec<usize>,
    /// Columns at or beyond this index are artificial.
    first_artificial: usize,
    pivots: usize,
}

impl Tableau {
    fn rhs_col(&self) -> usize {
        self.costs.len() - 1
    }

    fn pivot(&mut self, row: usize, col: usize) -> Result<()> {
        self.pivots += 1;
        if self.pivots > MAX_PIVOTS {
            return Err(Error::IterationLimit(MAX_PIVOTS));
        }
        let p = self.rows[row][col];
        self.rows[row].iter_mut().for_each(|v| *v /= p);
        let pivot_row = self.rows[row].clone();
        for (i, r) in self.rows.iter_mut().enumerate() {
            let f = r[col];
            if i != row && f != 0.0 {
                r.iter_mut().zip(&pivot_row).for_each(|(v, pv)| *v -= f * pv);
                r[col] = 0.0;
            }
        }
        let f = self.costs[col];
        if f != 0.0 {
            self.costs.iter_mut().zip(&pivot_row).for_each(|(v, pv)| *v -= f * pv);
            self.costs[col] = 0.0;
        }
        self.basis[row] = col;
        Ok(())
    }

    /// Loads a fresh objective and prices out the current basis.
    fn set_objective(&mut self, cost: &[f64]) {
        let width = self.costs.len();
        self.costs = (0..width).map(|j| cost.get(j).copied().unwrap_or(0.0)).collect();
        self.costs[width - 1] = 0.0;
        for (row, &b) in self.rows.iter().zip(&self.basis) {
            let cb = cost.get(b).copied().unwrap_or(0.0);
            if cb != 0.0 {
                self.costs.iter_mut().zip(row).for_each(|(v, r)| *v -= cb * r);
            }
        }
    }

    /// Runs simplex iterations on the current objective over columns `< limit`.
    fn optimize(&mut self, limit: usize) -> Result<()> {
        let rhs = self.rhs_col();
        loop {
            // Bland: lowest-index improving column ...
            let Some(col) = (0..limit).find(|&j| self.costs[j] > FEASIBILITY_TOL) else {
                return Ok(());
            };
            // ... and among minimum-ratio rows, the lowest-index basic variable.
            let mut best: Option<(usize, f64)> = None;
            for (i, r) in self.rows.iter().enumerate() {
                if r[col] > FEASIBILITY_TOL {
                    let ratio = r[rhs] / r[col];
                    best = match best {
                        None => Some((i, ratio)),
                        Some((bi, br)) => {
                            let tie = (ratio - br).abs() <= FEASIBILITY_TOL * br.abs().max(1.0);
                            if ratio < br && !tie || tie && self.basis[i] < self.basis[bi] {
                                Some((i, ratio))
                            } else {
                                Some((bi, br))
                            }
                        }
                    };
                }
            }
            let Some((row, _)) = best else {
                return Err(Error::Unbounded);
            };
            self.pivot(row, col)?;
        }
    }
}

pub fn maximize(lp: &LinearProgram) -> Result<LpSolution> {
    let n = lp.objective.len();
    let rows = lp.constraints.len();
    if lp.rhs.len() != rows {
        return Err(Error::DimensionMismatch { expected: rows, got: lp.rhs.len() });
    }
    if let Some(bad) = lp.constraints.iter().find(|r| r.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, got: bad.len() });
    }

    let negative: Vec<usize> = (0..rows).filter(|&i| lp.rhs[i] < 0.0).collect();
    let first_artificial = n + rows;
    let width = first_artificial + negative.len() + 1;
    let mut tableau = Tableau {
        rows: Vec::with_capacity(rows),
        costs: vec![0.0; width],
        basis: Vec::with_capacity(rows),
        first_artificial,
        pivots: 0,
    };
    let mut next_artificial = first_artificial;
    for (i, (a, &b)) in lp.constraints.iter().zip(&lp.rhs).enumerate() {
        let mut row = vec![0.0; width];
        row[..n].copy_from_slice(a);
        row[n + i] = 1.0;
        row[width - 1] = b;
        if b < 0.0 {
            row.iter_mut().for_each(|v| *v = -*v);
            row[next_artificial] = 1.0;
            tableau.basis.push(next_artificial);
            next_artificial += 1;
        } else {
            tableau.basis.push(n + i);
        }
        tableau.rows.push(row);
    }

    if !negative.is_empty() {
        let phase_one: Vec<f64> = (0..width - 1).map(|j| if j >= first_artificial { -1.0 } else { 0.0 }).collect();
        tableau.set_objective(&phase_one);
        tableau.optimize(width - 1)?;
        let infeasibility: f64 = tableau
            .rows
            .iter()
            .zip(&tableau.basis)
            .filter(|(_, &b)| b >= first_artificial)
            .map(|(r, _)| r[width - 1])
            .sum();
        if infeasibility > FEASIBILITY_TOL {
            return Err(Error::Infeasible);
        }
        // Drive zero-valued artificials out of the basis where possible;
        // rows where that fails are redundant and keep their artificial at 0.
        for i in 0..rows {
            if tableau.basis[i] >= first_artificial {
                if let Some(j) = (0..first_artificial).find(|&j| tableau.rows[i][j].abs() > FEASIBILITY_TOL) {
                    tableau.pivot(i, j)?;
                }
            }
        }
    }

    tableau.set_objective(&lp.objective);
    tableau.optimize(tableau.first_artificial)?;

    let mut x = vec![0.0; n];
    for (row, &b) in tableau.rows.iter().zip(&tableau.basis) {
        if b < n {
            x[b] = row[width - 1];
        }
    }
    let objective = x.iter().zip(&lp.objective).map(|(a, c)| a * c).sum();
    Ok(LpSolution { x, objective })
}

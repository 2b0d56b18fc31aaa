//! Phase-1 simplex over exact rationals with Bland's rule.
//!
//! Solves `Ax ≥ b, x ≥ 0` by minimising the sum of artificials in
//!
//! ```text
//! D(Ax − s) + a = Db,   x, s, a ≥ 0
//! ```
//!
//! where `D` flips rows so the right-hand side is non-negative. On an
//! infeasible system the optimal phase-1 duals `u` give the Farkas vector
//! `y = Du` with `y ≥ 0`, `yᵀA ≤ 0`, `yᵀb > 0`.

use num_traits::{One, Signed, Zero};

use super::{RatMatrix, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    Feasible(Vec<Rational>),
    Infeasible(FarkasCertificate),
}

/// `y ≥ 0` with `yᵀA ≤ 0` and `yᵀb > 0`, which rules out any `x ≥ 0` with `Ax ≥ b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarkasCertificate {
    pub y: Vec<Rational>,
}

impl FarkasCertificate {
    pub fn certifies(&self, a: &RatMatrix, b: &[Rational]) -> bool {
        if self.y.len() != a.rows() || b.len() != a.rows() {
            return false;
        }
        if self.y.iter().any(Signed::is_negative) {
            return false;
        }
        let yta_ok = (0..a.cols()).all(|j| {
            let s = (0..a.rows()).fold(Rational::zero(), |acc, i| acc + &self.y[i] * &a[(i, j)]);
            !s.is_positive()
        });
        let ytb = self.y.iter().zip(b).fold(Rational::zero(), |acc, (y, b)| acc + y * b);
        yta_ok && ytb.is_positive()
    }
}

struct Tableau {
    /// `m` rows of `width + 1` entries; the last entry is the right-hand side.
    rows: Vec<Vec<Rational>>,
    /// Reduced costs, last entry is minus the objective value.
    cost: Vec<Rational>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            let f = row[c].clone();
            if f.is_zero() {
                return;
            }
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[r] = c;
    }

    /// Bland's rule: lowest-index improving column, ties in the ratio test
    /// broken by lowest basic variable index. Returns once optimal.
    fn run(&mut self) {
        let rhs = self.width;
        while let Some(c) = (0..self.width).find(|&j| self.cost[j].is_negative()) {
            let mut best: Option<(usize, Rational)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((br, bratio)) => {
                        ratio < *bratio || (ratio == *bratio && self.basis[r] < self.basis[*br])
                    }
                };
                if better {
                    best = Some((r, ratio));
                }
            }
            // Phase 1 is bounded below by zero, so some row always qualifies.
            let (r, _) = best.expect("phase-1 objective is bounded");
            self.pivot(r, c);
        }
    }
}

/// Finds `x ≥ 0` with `Ax ≥ b`, or a Farkas certificate that none exists.
pub fn lp_feasible(a: &RatMatrix, b: &[Rational]) -> Result<LpOutcome> {
    let (m, n) = (a.rows(), a.cols());
    if b.len() != m {
        return Err(Error::DimensionMismatch(format!(
            "{m} constraint rows but right-hand side of length {}",
            b.len()
        )));
    }
    // columns: x (n) | surplus s (m) | artificial (m) | rhs
    let width = n + 2 * m;
    let flip: Vec<bool> = b.iter().map(Signed::is_negative).collect();
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let sign = if flip[i] { -Rational::one() } else { Rational::one() };
        let mut row = vec![Rational::zero(); width + 1];
        for j in 0..n {
            row[j] = &sign * &a[(i, j)];
        }
        row[n + i] = -&sign;
        row[n + m + i] = Rational::one();
        row[width] = &sign * &b[i];
        rows.push(row);
    }
    let mut cost = vec![Rational::zero(); width + 1];
    for row in &rows {
        for (c, v) in cost.iter_mut().zip(row) {
            if !v.is_zero() {
                *c -= v;
            }
        }
    }
    // cost over artificials is now zero, as they are basic.
    cost[n + m..width].fill(Rational::zero());

    let mut t = Tableau {
        rows,
        cost,
        basis: (n + m..width).collect(),
        width,
    };
    t.run();

    let objective = -&t.cost[width];
    if objective.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (r, &var) in t.basis.iter().enumerate() {
            if var < n {
                x[var] = t.rows[r][width].clone();
            }
        }
        let ax = a.mul_vec(&x)?;
        if ax.iter().zip(b).any(|(l, r)| l < r) || x.iter().any(Signed::is_negative) {
            return Err(Error::Internal("simplex returned an infeasible point".into()));
        }
        Ok(LpOutcome::Feasible(x))
    } else {
        // u_j = c_Bᵀ (B⁻¹)_{·j}; the artificial columns hold B⁻¹.
        let y: Vec<Rational> = (0..m)
            .map(|j| {
                let u = t
                    .basis
                    .iter()
                    .enumerate()
                    .filter(|&(_, &var)| var >= n + m)
                    .fold(Rational::zero(), |acc, (r, _)| acc + &t.rows[r][n + m + j]);
                if flip[j] {
                    -u
                } else {
                    u
                }
            })
            .collect();
        let cert = FarkasCertificate { y };
        if !cert.certifies(a, b) {
            return Err(Error::Internal("phase-1 duals are not a Farkas certificate".into()));
        }
        Ok(LpOutcome::Infeasible(cert))
    }
}

//! Exact rational linear algebra, a phase-1 simplex feasibility solver, and
//! the constructive Tucker vector for skew-symmetric matrices.
//!
//! Nothing here touches floating point. Every sign test is decided exactly.

mod simplex;

use std::ops::{Index, IndexMut};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use simplex::{lp_feasible, FarkasCertificate, LpOutcome};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Always `p/q`, including `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(s.to_string());
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s.trim(), "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        let n = rows.len();
        Ok(RatMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.as_ref().iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} columns, vector has length {}",
                self.cols,
                x.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// First `(i, j)` with `K[i][j] ≠ −K[j][i]`, or `None` if `Kᵀ = −K`.
    pub fn skew_violation(&self) -> Option<(usize, usize)> {
        if !self.is_square() {
            return Some((self.rows.min(self.cols), self.rows.min(self.cols)));
        }
        (0..self.rows)
            .flat_map(|i| (i..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != -&self[(j, i)])
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.skew_violation().is_none()
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(format_rational).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<String>>::deserialize(d)?;
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        RatMatrix::from_rows(parsed).map_err(serde::de::Error::custom)
    }
}

/// A vector with `x ≥ 0`, `Kx ≥ 0` and `x + Kx > 0` for the matrix it was
/// checked against. Only obtainable through a successful check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TuckerSolution {
    x: Vec<Rational>,
}

impl TuckerSolution {
    /// Wraps `x` after checking all three conditions exactly.
    pub fn checked(k: &RatMatrix, x: Vec<Rational>) -> Result<Self> {
        if tucker_conditions_hold(k, &x)? {
            Ok(TuckerSolution { x })
        } else {
            Err(Error::Internal("vector fails the Tucker conditions".into()))
        }
    }

    pub fn x(&self) -> &[Rational] {
        &self.x
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.x
    }
}

pub fn tucker_conditions_hold(k: &RatMatrix, x: &[Rational]) -> Result<bool> {
    let kx = k.mul_vec(x)?;
    Ok(x.iter().all(|v| !v.is_negative())
        && kx.iter().all(|v| !v.is_negative())
        && x.iter().zip(&kx).all(|(a, b)| (a + b).is_positive()))
}

/// Finds `x ≥ 0` with `Kx ≥ 0` and `x + Kx > 0` for skew-symmetric `K`.
///
/// For each `i` solves `{x ≥ 0, Kx ≥ 0, xᵢ + (Kx)ᵢ ≥ 1}` and returns the sum
/// of the `n` solutions. Each subsystem is feasible for skew-symmetric `K`,
/// so infeasibility is reported as an internal error.
pub fn tucker_solve(k: &RatMatrix) -> Result<TuckerSolution> {
    if let Some((row, col)) = k.skew_violation() {
        return Err(Error::NotSkewSymmetric { row, col });
    }
    let n = k.rows();
    let mut total = vec![Rational::zero(); n];
    for i in 0..n {
        let x = tucker_subproblem(k, i)?;
        for (t, v) in total.iter_mut().zip(x) {
            *t += v;
        }
    }
    TuckerSolution::checked(k, total)
}

/// One feasible point of `{x ≥ 0, Kx ≥ 0, xᵢ + (Kx)ᵢ ≥ 1}`.
pub fn tucker_subproblem(k: &RatMatrix, i: usize) -> Result<Vec<Rational>> {
    let n = k.rows();
    let mut rows: Vec<Vec<Rational>> = (0..n).map(|r| k.row(r).to_vec()).collect();
    let mut strict = k.row(i).to_vec();
    strict[i] += Rational::one();
    rows.push(strict);
    let a = RatMatrix::from_rows(rows)?;
    let mut b = vec![Rational::zero(); n];
    b.push(Rational::one());
    match lp_feasible(&a, &b)? {
        LpOutcome::Feasible(x) => Ok(x),
        LpOutcome::Infeasible(_) => Err(Error::Internal(format!(
            "Tucker subproblem {i} reported infeasible"
        ))),
    }
}

/// Multiplies by the lcm of all denominators. Zeros stay zero and ratios
/// are preserved.
pub fn scale_to_integers(x: &[Rational]) -> Result<Vec<BigUint>> {
    if let Some(i) = x.iter().position(Signed::is_negative) {
        return Err(Error::NegativeEntry(i));
    }
    let lcm = x
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    Ok(x.iter()
        .map(|r| {
            let scaled = r * Rational::from_integer(lcm.clone());
            debug_assert!(scaled.is_integer());
            scaled
                .to_integer()
                .to_biguint()
                .expect("non-negative by the check above")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&ratio(2, 4)), "1/2");
        assert_eq!(format_rational(&int(3)), "3/1");
        assert_eq!(parse_rational("-6/4").unwrap(), ratio(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn matrix_json_is_nested_strings() {
        let m = RatMatrix::from_rows(vec![vec![ratio(1, 2), int(0)], vec![int(-1), int(2)]]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"[["1/2","0/1"],["-1/1","2/1"]]"#);
        let back: RatMatrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RatMatrix::from_integers(&[vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn mul_vec_dimension_check() {
        let m = RatMatrix::from_integers(&[[1, 2]]).unwrap();
        assert!(m.mul_vec(&ints(&[1])).is_err());
        assert_eq!(m.mul_vec(&ints(&[1, 1])).unwrap(), ints(&[3]));
    }

    #[test]
    fn skew_check() {
        let k = RatMatrix::from_integers(&[[0, 1], [-1, 0]]).unwrap();
        assert!(k.is_skew_symmetric());
        let bad = RatMatrix::from_integers(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(bad.skew_violation(), Some((0, 1)));
        let diag = RatMatrix::from_integers(&[[1]]).unwrap();
        assert_eq!(diag.skew_violation(), Some((0, 0)));
        assert!(!RatMatrix::zeros(2, 3).is_skew_symmetric());
    }

    #[test]
    fn tucker_on_zero_one_by_one() {
        let k = RatMatrix::zeros(1, 1);
        let sol = tucker_solve(&k).unwrap();
        assert!(sol.x()[0].is_positive());
    }

    #[test]
    fn tucker_on_rotation() {
        let k = RatMatrix::from_integers(&[[0, 1], [-1, 0]]).unwrap();
        let sol = tucker_solve(&k).unwrap();
        assert!(tucker_conditions_hold(&k, sol.x()).unwrap());
        // the hand-picked answer is valid too
        assert!(tucker_conditions_hold(&k, &ints(&[0, 1])).unwrap());
        assert!(!tucker_conditions_hold(&k, &ints(&[1, 0])).unwrap());
    }

    #[test]
    fn tucker_rejects_non_skew() {
        let k = RatMatrix::from_integers(&[[0, 2], [1, 0]]).unwrap();
        assert!(matches!(
            tucker_solve(&k),
            Err(Error::NotSkewSymmetric { row: 0, col: 1 })
        ));
    }

    #[test]
    fn tucker_empty_matrix() {
        let sol = tucker_solve(&RatMatrix::zeros(0, 0)).unwrap();
        assert!(sol.x().is_empty());
    }

    #[test]
    fn scaling_examples() {
        let to_u = |v: &[u32]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert_eq!(scale_to_integers(&[ratio(1, 2), ratio(1, 3)]).unwrap(), to_u(&[3, 2]));
        assert_eq!(scale_to_integers(&ints(&[0, 0])).unwrap(), to_u(&[0, 0]));
        assert_eq!(scale_to_integers(&ints(&[2, 5])).unwrap(), to_u(&[2, 5]));
        assert!(matches!(
            scale_to_integers(&[int(1), ratio(-1, 2)]),
            Err(Error::NegativeEntry(1))
        ));
    }
}

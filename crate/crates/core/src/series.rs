//! Truncated power series in one variable `p`, or two variables `(p, t)`,
//! with exact checked integer coefficients.
//!
//! Every exponent is kept up to the degree bound `N` independently, so a
//! product or reciprocal is exact at each retained monomial: its
//! coefficient only depends on monomials that divide it.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: usize,
    max_degree: u32,
    /// Row-major: `coeffs[p * width + t]`.
    coeffs: Vec<i64>,
}

impl TruncatedSeries {
    pub fn zero(vars: usize, max_degree: u32) -> Result<Self> {
        if vars != 1 && vars != 2 {
            return Err(Error::OutOfRange(format!("{vars} variables")));
        }
        let n = max_degree as usize + 1;
        let width = if vars == 2 { n } else { 1 };
        Ok(TruncatedSeries {
            vars,
            max_degree,
            coeffs: vec![0; n * width],
        })
    }

    /// `c · p^i t^j`; terms beyond the bound vanish.
    pub fn monomial(vars: usize, max_degree: u32, i: u32, j: u32, c: i64) -> Result<Self> {
        let mut s = Self::zero(vars, max_degree)?;
        if i <= max_degree && j <= s.t_bound() {
            s.set(i, j, c);
        }
        Ok(s)
    }

    pub fn one(vars: usize, max_degree: u32) -> Result<Self> {
        Self::monomial(vars, max_degree, 0, 0, 1)
    }

    /// A univariate series from `coeffs[k]` = coefficient of `p^k`.
    pub fn from_coeffs(max_degree: u32, coeffs: &[i64]) -> Result<Self> {
        let mut s = Self::zero(1, max_degree)?;
        for (k, &c) in coeffs.iter().enumerate().take(max_degree as usize + 1) {
            s.coeffs[k] = c;
        }
        Ok(s)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn width(&self) -> usize {
        if self.vars == 2 {
            self.max_degree as usize + 1
        } else {
            1
        }
    }

    fn t_bound(&self) -> u32 {
        if self.vars == 2 {
            self.max_degree
        } else {
            0
        }
    }

    /// Coefficient of `p^i t^j` (zero outside the retained range).
    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        if i > self.max_degree || j > self.t_bound() {
            return 0;
        }
        self.coeffs[i as usize * self.width() + j as usize]
    }

    fn set(&mut self, i: u32, j: u32, c: i64) {
        let w = self.width();
        self.coeffs[i as usize * w + j as usize] = c;
    }

    /// Nonzero `(i, j, c)` triples in `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        let w = self.width();
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| ((k / w) as u32, (k % w) as u32, c))
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars || self.max_degree != other.max_degree {
            return Err(Error::OutOfRange(format!(
                "series shapes differ: ({}, {}) vs ({}, {})",
                self.vars, self.max_degree, other.vars, other.max_degree
            )));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (k, (a, b)) in out.coeffs.iter_mut().zip(&other.coeffs).enumerate() {
            *a = a.checked_add(*b).ok_or_else(|| self.overflow(k))?;
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_scale(-1)?)
    }

    pub fn checked_scale(&self, c: i64) -> Result<Self> {
        let mut out = self.clone();
        for (k, a) in out.coeffs.iter_mut().enumerate() {
            *a = a.checked_mul(c).ok_or_else(|| self.overflow(k))?;
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(self.vars, self.max_degree)?;
        let n = self.max_degree;
        let tn = self.t_bound();
        for (i1, j1, a) in self.terms() {
            for (i2, j2, b) in other.terms() {
                let (i, j) = (i1 + i2, j1 + j2);
                if i > n || j > tn {
                    continue;
                }
                let cur = out.coeff(i, j);
                let v = a
                    .checked_mul(b)
                    .and_then(|x| cur.checked_add(x))
                    .ok_or(Error::Overflow(vec![i, j]))?;
                out.set(i, j, v);
            }
        }
        Ok(out)
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one(self.vars, self.max_degree)?;
        for _ in 0..k {
            out = out.checked_mul(self)?;
        }
        Ok(out)
    }

    /// `1 / f` for a series with constant term ±1.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = self.coeff(0, 0);
        if c0 != 1 && c0 != -1 {
            return Err(Error::NonUnitConstant(c0));
        }
        let mut g = Self::zero(self.vars, self.max_degree)?;
        let others: Vec<(u32, u32, i64)> = self.terms().filter(|&(i, j, _)| (i, j) != (0, 0)).collect();
        for i in 0..=self.max_degree {
            for j in 0..=self.t_bound() {
                if (i, j) == (0, 0) {
                    g.set(0, 0, c0);
                    continue;
                }
                // Σ_{e' ≠ 0} f_{e'} g_{e - e'} = -f_0 g_e
                let mut acc: i64 = 0;
                for &(a, b, f) in &others {
                    if a > i || b > j {
                        continue;
                    }
                    let term = f
                        .checked_mul(g.coeff(i - a, j - b))
                        .and_then(|x| acc.checked_add(x))
                        .ok_or(Error::Overflow(vec![i, j]))?;
                    acc = term;
                }
                let v = acc
                    .checked_neg()
                    .and_then(|x| x.checked_mul(c0))
                    .ok_or(Error::Overflow(vec![i, j]))?;
                g.set(i, j, v);
            }
        }
        Ok(g)
    }

    /// Formal derivative with respect to `p`, exact up to degree `N − 1`;
    /// the degree-`N` coefficient would need `f_{N+1}` and is left at zero.
    pub fn derivative(&self) -> Result<Self> {
        let mut out = Self::zero(self.vars, self.max_degree)?;
        for (i, j, c) in self.terms() {
            if i == 0 {
                continue;
            }
            let v = c.checked_mul(i64::from(i)).ok_or(Error::Overflow(vec![i, j]))?;
            out.set(i - 1, j, v);
        }
        Ok(out)
    }

    /// Promotes a univariate series in `p` to two variables.
    pub fn lift(&self) -> Result<Self> {
        if self.vars == 2 {
            return Ok(self.clone());
        }
        let mut out = Self::zero(2, self.max_degree)?;
        for (i, _, c) in self.terms() {
            out.set(i, 0, c);
        }
        Ok(out)
    }

    /// The univariate series obtained by setting `t = 1`.
    pub fn at_t_one(&self) -> Result<Self> {
        let mut out = Self::zero(1, self.max_degree)?;
        for (i, _, c) in self.terms() {
            let v = out.coeff(i, 0).checked_add(c).ok_or(Error::Overflow(vec![i]))?;
            out.set(i, 0, v);
        }
        Ok(out)
    }

    /// `f(p) ↦ f(p·t)` for a univariate `f`.
    pub fn diagonal(&self) -> Result<Self> {
        if self.vars != 1 {
            return Err(Error::OutOfRange("diagonal needs a univariate series".into()));
        }
        let mut out = Self::zero(2, self.max_degree)?;
        for (i, _, c) in self.terms() {
            out.set(i, i, c);
        }
        Ok(out)
    }

    fn overflow(&self, k: usize) -> Error {
        let w = self.width();
        Error::Overflow(vec![(k / w) as u32, (k % w) as u32])
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.checked_add(rhs).expect("series addition overflowed")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.checked_sub(rhs).expect("series subtraction overflowed")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.checked_mul(rhs).expect("series multiplication overflowed")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.checked_scale(-1).expect("series negation overflowed")
    }
}

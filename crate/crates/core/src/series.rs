//! Truncated formal power series over exact rationals.
//!
//! A [`TruncatedSeries`] stores `c_0, ..., c_N` where `N` is the inclusive
//! truncation order; everything from `z^(N+1)` on is unknown. Binary
//! operations produce the smallest order both operands can justify.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Default truncation order for generating-function work.
pub const DEFAULT_ORDER: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division by the zero series")]
    DivisionByZeroSeries,
    #[error("numerator valuation {numerator} is below denominator valuation {denominator}")]
    NotDivisible {
        numerator: usize,
        denominator: usize,
    },
    #[error("square root needs constant term 1, found {0}")]
    NonUnitConstantTerm(BigRational),
    #[error("inner series of a composition must vanish at 0, found {0}")]
    InnerNonzeroConstant(BigRational),
    #[error("series is not compositionally invertible (needs f(0) = 0 and f'(0) != 0)")]
    NotInvertible,
    #[error("coefficient of z^{index} is {value}, expected an integer")]
    NonIntegral { index: usize, value: BigRational },
    #[error("coefficient of z^{index} is negative ({value})")]
    Negative { index: usize, value: BigInt },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedSeries {
    /// Builds a series from its leading coefficients, padding with zeros
    /// (or cutting) to the requested order.
    pub fn new(mut coeffs: Vec<BigRational>, order: usize) -> Self {
        coeffs.resize(order + 1, BigRational::zero());
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigRational::one(), order)
    }

    pub fn constant(c: BigRational, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    /// The monomial `c z^power`.
    pub fn monomial(c: i64, power: usize, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        if power <= order {
            coeffs[power] = rat(c);
        }
        Self { coeffs }
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(1, 1, order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`; zero past the truncation order.
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot extend a series known to order {} up to {order}",
            self.order()
        );
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiplication by `z^power`; the order grows with the shift.
    pub fn shift_up(&self, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact division by `z^power`. The order drops by `power`.
    pub fn div_z_pow(&self, power: usize) -> Result<Self, SeriesError> {
        if let Some(v) = self.valuation() {
            if v < power {
                return Err(SeriesError::NotDivisible {
                    numerator: v,
                    denominator: power,
                });
            }
        }
        if power > self.order() {
            return Err(SeriesError::NotDivisible {
                numerator: self.order(),
                denominator: power,
            });
        }
        Ok(Self {
            coeffs: self.coeffs[power..].to_vec(),
        })
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|i| {
                if negate {
                    &self.coeffs[i] - &other.coeffs[i]
                } else {
                    &self.coeffs[i] + &other.coeffs[i]
                }
            })
            .collect();
        Self { coeffs }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self { coeffs }
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplicative inverse of a series with nonzero constant term, by
    /// forward substitution.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(if self.is_zero() {
                SeriesError::DivisionByZeroSeries
            } else {
                SeriesError::NotDivisible {
                    numerator: 0,
                    denominator: self.valuation().unwrap(),
                }
            });
        }
        let inv0 = c0.recip();
        let n = self.order();
        let mut out: Vec<BigRational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for i in 1..=n {
            let mut acc = BigRational::zero();
            for j in 1..=i {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[i - j];
                }
            }
            out.push(-acc * &inv0);
        }
        Ok(Self { coeffs: out })
    }

    /// `self / other`. When `other(0) = 0` the common power of `z` is
    /// cancelled first, which requires `val(self) >= val(other)` and costs
    /// that many orders of precision.
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let shift = other.valuation().ok_or(SeriesError::DivisionByZeroSeries)?;
        let (num, den) = if shift == 0 {
            (self.clone(), other.clone())
        } else {
            (self.div_z_pow(shift)?, other.div_z_pow(shift)?)
        };
        Ok(&num * &den.recip()?)
    }

    /// Principal square root (constant term `+1`) by Newton iteration
    /// `y <- (y + a/y) / 2`, doubling the number of correct terms per round.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::NonUnitConstantTerm(self.coeffs[0].clone()));
        }
        let n = self.order();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut y = Self::one(0);
        let mut prec = 0usize;
        while prec < n {
            prec = (2 * prec + 1).min(n);
            let y_ext = Self::new(y.coeffs.clone(), prec);
            let a = self.truncate(prec);
            let q = a.div(&y_ext)?;
            y = (&y_ext + &q).scale(&half);
        }
        Ok(Self::new(y.coeffs, n))
    }

    /// `outer(inner(z))`, by Horner's scheme. Requires `inner(0) = 0`.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerNonzeroConstant(inner.coeffs[0].clone()));
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut acc = Self::zero(order);
        for c in self.coeffs[..=order].iter().rev() {
            acc = &acc * &inner;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse via Lagrange inversion:
    /// `[z^n] g = (1/n) [z^(n-1)] (z / f(z))^n`.
    pub fn comp_inverse(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() || self.order() < 1 || self.coeffs[1].is_zero() {
            return Err(SeriesError::NotInvertible);
        }
        let n = self.order();
        // f(z)/z known to order n-1
        let f_over_z = self.div_z_pow(1)?;
        let phi = f_over_z.recip()?;
        let mut out = vec![BigRational::zero(); n + 1];
        let mut power = Self::one(n - 1);
        for (k, slot) in out.iter_mut().enumerate().skip(1) {
            power = &power * &phi;
            *slot = power.coeff(k - 1) / rat(k as i64);
        }
        Ok(Self { coeffs: out })
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        let coeffs = if self.order() == 0 {
            vec![BigRational::zero()]
        } else {
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect()
        };
        Self { coeffs }
    }

    /// All coefficients as integers, failing on any fractional value.
    pub fn to_integers(&self) -> Result<Vec<BigInt>, SeriesError> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(index, c)| {
                if c.is_integer() {
                    Ok(c.to_integer())
                } else {
                    Err(SeriesError::NonIntegral {
                        index,
                        value: c.clone(),
                    })
                }
            })
            .collect()
    }

    /// Coefficients as counts: integral and non-negative.
    pub fn to_counts(&self) -> Result<Vec<BigInt>, SeriesError> {
        let ints = self.to_integers()?;
        if let Some((index, value)) = ints.iter().enumerate().find(|(_, v)| v.is_negative()) {
            return Err(SeriesError::Negative {
                index,
                value: value.clone(),
            });
        }
        Ok(ints)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: Self) -> TruncatedSeries {
        self.add_impl(rhs, false)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: Self) -> TruncatedSeries {
        self.add_impl(rhs, true)
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: Self) -> TruncatedSeries {
        self.mul_impl(rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: Self) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ if a.is_one() => {}
                _ => write!(f, "{a}*")?,
            }
            match i {
                0 => {}
                1 => f.write_str("z")?,
                _ => write!(f, "z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

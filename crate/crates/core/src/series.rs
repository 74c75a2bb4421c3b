//! Truncated formal power series in one variable `u` with exact rational
//! coefficients.
//!
//! A [`Series`] of order `N` stores the coefficients of `u^0 ..= u^N`; nothing
//! is known about higher powers. Binary operations truncate to the smaller of
//! the two operand orders, so precision is never silently invented.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("divisor is zero up to its truncation order")]
    ZeroDivisor,
    #[error("numerator valuation {numerator} is below divisor valuation {divisor}")]
    ValuationTooLow { numerator: usize, divisor: usize },
    #[error("divisor valuation {valuation} exceeds the available order {order}")]
    NoPrecisionLeft { valuation: usize, order: usize },
    #[error("exp needs a zero constant term, found {0}")]
    NonZeroConstant(Rational),
    #[error("log needs constant term 1, found {0}")]
    ConstantNotOne(Rational),
    #[error("substituting u -> iu needs an even series, u^{0} has a nonzero coefficient")]
    OddCoefficient(usize),
}

/// Truncated power series `c_0 + c_1 u + ... + c_N u^N`.
///
/// `PartialEq` is strict (same order, same coefficients). Use
/// [`Series::first_mismatch`] to compare series of different orders up to
/// the smaller one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Rational>,
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(value: Rational, order: usize) -> Self {
        Self::monomial(value, 0, order)
    }

    /// `value * u^power`, or the zero series when `power > order`.
    pub fn monomial(value: Rational, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = value;
        }
        s
    }

    /// Builds a series from its coefficient list; the order is
    /// `coeffs.len() - 1`. Panics on an empty list.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least u^0");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `u^n`. Panics when `n` exceeds the order, since that
    /// coefficient is unknown rather than zero.
    pub fn coeff(&self, n: usize) -> &Rational {
        assert!(
            n <= self.order(),
            "u^{n} is beyond the truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    pub fn set_coeff(&mut self, n: usize, value: Rational) {
        assert!(n <= self.order(), "u^{n} is beyond the truncation order");
        self.coeffs[n] = value;
    }

    /// Index of the first nonzero coefficient, `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn is_even(&self) -> bool {
        self.first_odd_coefficient().is_none()
    }

    fn first_odd_coefficient(&self) -> Option<usize> {
        (1..=self.order())
            .step_by(2)
            .find(|&n| !self.coeffs[n].is_zero())
    }

    /// Drops every coefficient above `order`. Asking for more precision
    /// than the series carries returns it unchanged.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Series {
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    /// First power of `u` (up to the smaller order) where the two series
    /// differ.
    pub fn first_mismatch(&self, other: &Series) -> Option<usize> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
    }

    pub fn agrees_with(&self, other: &Series) -> bool {
        self.first_mismatch(other).is_none()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplies by `u^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut out = Self::zero(self.order());
        for n in k..=self.order() {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Self {
        let order = self.order().min(other.order());
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// `self^k` by repeated squaring; `self^0` is the constant 1.
    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Quotient `self / divisor`.
    ///
    /// Both operands are first divided by `u^v` where `v` is the divisor's
    /// valuation, so divisors such as `sin(du/2)` with no constant term are
    /// accepted. The quotient has order `min(order) - v`.
    pub fn divide(&self, divisor: &Series) -> Result<Self, SeriesError> {
        let v = divisor.valuation().ok_or(SeriesError::ZeroDivisor)?;
        let order = self.order().min(divisor.order());
        if let Some(va) = self.valuation() {
            if va < v {
                return Err(SeriesError::ValuationTooLow {
                    numerator: va,
                    divisor: v,
                });
            }
        }
        if v > order {
            return Err(SeriesError::NoPrecisionLeft {
                valuation: v,
                order,
            });
        }
        let out_order = order - v;
        let num = &self.coeffs[v..=order];
        let den = &divisor.coeffs[v..=order];
        let lead_inv = den[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(out_order + 1);
        for n in 0..=out_order {
            let mut acc = num[n].clone();
            for k in 1..=n {
                if !den[k].is_zero() {
                    acc -= &den[k] * &q[n - k];
                }
            }
            q.push(acc * &lead_inv);
        }
        Ok(Series { coeffs: q })
    }

    /// `exp(self)` for a series without constant term, via
    /// `n f_n = sum_{k=1}^{n} k a_k f_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::NonZeroConstant(self.coeffs[0].clone()));
        }
        let order = self.order();
        let mut f: Vec<Rational> = Vec::with_capacity(order + 1);
        f.push(Rational::one());
        for n in 1..=order {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &f[n - k] * BigInt::from(k);
                }
            }
            f.push(acc / BigInt::from(n));
        }
        Ok(Series { coeffs: f })
    }

    /// Natural logarithm of a series with constant term 1, via
    /// `n g_n = n a_n - sum_{k=1}^{n-1} k g_k a_{n-k}`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantNotOne(self.coeffs[0].clone()));
        }
        let order = self.order();
        let mut g: Vec<Rational> = Vec::with_capacity(order + 1);
        g.push(Rational::zero());
        for n in 1..=order {
            let mut acc = &self.coeffs[n] * BigInt::from(n);
            for (k, gk) in g.iter().enumerate().take(n).skip(1) {
                let a = &self.coeffs[n - k];
                if !a.is_zero() {
                    acc -= gk * a * BigInt::from(k);
                }
            }
            g.push(acc / BigInt::from(n));
        }
        Ok(Series { coeffs: g })
    }

    /// `sin(c u)` truncated at `u^order`.
    pub fn sin_scaled(c: &Rational, order: usize) -> Self {
        let mut out = Self::zero(order);
        // term holds (-1)^k c^(2k+1) / (2k+1)!
        let mut term = c.clone();
        let c2 = c * c;
        let mut n = 1;
        while n <= order {
            out.coeffs[n] = term.clone();
            term = -(term * &c2) / BigInt::from((n + 1) * (n + 2));
            n += 2;
        }
        out
    }

    /// Term-by-term `d/du`. The order drops by one; an order-0 input gives
    /// the order-0 zero series.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Series {
            coeffs: (1..=self.order())
                .map(|n| &self.coeffs[n] * BigInt::from(n))
                .collect(),
        }
    }

    /// `f(iu)` for an even series: the `u^{2g}` coefficient picks up `(-1)^g`.
    pub fn substitute_iu(&self) -> Result<Self, SeriesError> {
        if let Some(n) = self.first_odd_coefficient() {
            return Err(SeriesError::OddCoefficient(n));
        }
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % 4 == 2 { -c } else { c.clone() })
                .collect(),
        })
    }
}

/// Raw integral value from an EGF coefficient: `coefficient * n!`.
pub fn raw_from_egf(coefficient: &Rational, n: usize) -> Rational {
    coefficient * factorial(n)
}

/// EGF coefficient from a raw integral value: `value / n!`.
pub fn egf_from_raw(value: &Rational, n: usize) -> Rational {
    value / factorial(n)
}

impl Add for &Series {
    type Output = Series;

    fn add(self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;

    fn sub(self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        Series {
            coeffs: (0..=order)
                .map(|n| &self.coeffs[n] - &other.coeffs[n])
                .collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;

    fn mul(self, other: &Series) -> Series {
        Series::mul(self, other)
    }
}

impl Neg for &Series {
    type Output = Series;

    fn neg(self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(" + ")?;
            }
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})u")?,
                _ => write!(f, "({c})u^{n}")?,
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        write!(f, " + O(u^{})", self.order() + 1)
    }
}

//! Truncated formal power series in one variable.
//!
//! A [`Series`] stores coefficients for exponents `0..=order`; everything past
//! `order` is unknown rather than zero, and every operation reports the order
//! up to which its result is actually determined.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Name of the formal variable a series is expanded in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// Step tracker: `z` marks one step of a path.
    Z,
    /// The rationalising variable with `z^2 = u/(1+u)^2`.
    U,
    /// Variable-free constants; combine with either `Z` or `U`.
    Free,
}

impl Var {
    fn unify(self, other: Var) -> Result<Var> {
        match (self, other) {
            (a, b) if a == b => Ok(a),
            (Var::Free, b) => Ok(b),
            (a, Var::Free) => Ok(a),
            (a, b) => Err(Error::VarMismatch { left: a, right: b }),
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Z => "z",
            Var::U => "u",
            Var::Free => "x-free",
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Series<T> {
    var: Var,
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    /// Series whose known coefficients are exactly `coeffs`; the order is
    /// `coeffs.len() - 1`.
    ///
    /// Panics on an empty coefficient vector.
    pub fn new(var: Var, coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least one known coefficient");
        Series { var, coeffs }
    }

    /// A polynomial viewed as a series to `order`; missing coefficients are
    /// zero and terms above `order` are dropped.
    pub fn polynomial(var: Var, poly: &[T], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| poly.get(k).cloned().unwrap_or_else(T::zero))
            .collect();
        Series { var, coeffs }
    }

    /// Convenience for integer polynomials.
    pub fn from_ints(var: Var, poly: &[i64], order: usize) -> Self {
        let poly: Vec<T> = poly.iter().map(|&c| T::from_int(c)).collect();
        Self::polynomial(var, &poly, order)
    }

    pub fn zero(var: Var, order: usize) -> Self {
        Self::polynomial(var, &[], order)
    }

    pub fn one(var: Var, order: usize) -> Self {
        Self::constant(var, T::one(), order)
    }

    pub fn constant(var: Var, c: T, order: usize) -> Self {
        Self::polynomial(var, &[c], order)
    }

    /// `c * var^k` to `order`.
    pub fn monomial(var: Var, c: T, k: usize, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// `1 - var^k`, the denominator building block of nearly every
    /// generating function in this crate.
    pub fn one_minus_power(var: Var, k: usize, order: usize) -> Self {
        let mut s = Self::one(var, order);
        if k <= order {
            s.coeffs[k] = s.coeffs[k].clone() - T::one();
        }
        s
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `var^k`, or `None` when `k` is past the known order.
    pub fn coeff(&self, k: usize) -> Option<&T> {
        self.coeffs.get(k)
    }

    /// Index of the first nonzero known coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.valuation().is_none()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        Series {
            var: self.var,
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    /// Reinterprets the series in another variable.
    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let var = self.var.unify(other.var)?;
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(Series { var, coeffs })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        let var = self.var.unify(other.var)?;
        let order = self.order().min(other.order());
        let coeffs = self.coeffs[..=order]
            .iter()
            .zip(&other.coeffs[..=order])
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Ok(Series { var, coeffs })
    }

    /// Truncated Cauchy product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let var = self.var.unify(other.var)?;
        let order = self.order().min(other.order());
        let mut coeffs = vec![T::zero(); order + 1];
        // Most operands here are sparse (1 - u^k, u^r, ...), so skip zeros.
        let (sparse, dense) = if self.nonzero_count(order) <= other.nonzero_count(order) {
            (self, other)
        } else {
            (other, self)
        };
        for (i, a) in sparse.coeffs[..=order].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in dense.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(Series { var, coeffs })
    }

    fn nonzero_count(&self, order: usize) -> usize {
        self.coeffs[..=order].iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &T) -> Self {
        Series {
            var: self.var,
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    /// Multiplicative inverse via the usual triangular recurrence.
    pub fn invert(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = T::one() / a0.clone();
        let order = self.order();
        let support: Vec<usize> = (1..=order).filter(|&k| !self.coeffs[k].is_zero()).collect();
        let mut out: Vec<T> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = T::zero();
            for &k in support.iter().take_while(|&&k| k <= n) {
                let b = &out[n - k];
                if !b.is_zero() {
                    acc = acc + self.coeffs[k].clone() * b.clone();
                }
            }
            out.push(-(acc * inv0.clone()));
        }
        Ok(Series {
            var: self.var,
            coeffs: out,
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.invert()?)
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.var, self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `sqrt(1 + a)` for `a` without constant term, normalised to start at 1.
    pub fn sqrt_one_plus(a: &Self) -> Result<Self> {
        if !a.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant { op: "sqrt_one_plus" });
        }
        let two = T::from_int(2);
        let order = a.order();
        let mut s: Vec<T> = Vec::with_capacity(order + 1);
        s.push(T::one());
        // (1 + S)^2 = 1 + a  =>  2 s_n = a_n - sum_{k=1}^{n-1} s_k s_{n-k}
        for n in 1..=order {
            let mut acc = a.coeffs[n].clone();
            for k in 1..n {
                if !s[k].is_zero() && !s[n - k].is_zero() {
                    acc = acc - s[k].clone() * s[n - k].clone();
                }
            }
            s.push(acc / two.clone());
        }
        Ok(Series {
            var: a.var,
            coeffs: s,
        })
    }

    /// `f(g)`, where `g` has no constant term. The result lives in `g`'s
    /// variable and is known up to `min(g.order, (f.order + 1) * val(g) - 1)`.
    pub fn compose(f: &Self, g: &Self) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstant { op: "compose" });
        }
        let val = g.valuation().unwrap_or(g.order() + 1);
        let order = g.order().min((f.order() + 1) * val - 1);
        let g = g.truncate(order);
        let mut acc = Self::constant(g.var, f.coeffs[f.order()].clone(), order);
        for c in f.coeffs.iter().rev().skip(1) {
            acc = &acc * &g;
            acc.coeffs[0] = acc.coeffs[0].clone() + c.clone();
        }
        Ok(acc)
    }

    /// Multiplies by `var^k`; the known order grows by `k`.
    pub fn shift_up(&self, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series {
            var: self.var,
            coeffs,
        }
    }

    /// Divides by `var^k`; the first `k` coefficients must vanish.
    pub fn shift_down(&self, k: usize) -> Result<Self> {
        if k > self.order() || self.coeffs[..k].iter().any(|c| !c.is_zero()) {
            return Err(Error::Valuation {
                op: "shift_down",
                needed: k,
            });
        }
        Ok(Series {
            var: self.var,
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Sum of a sequence of series in a common variable; `None` for an empty
    /// iterator.
    pub fn try_sum<I: IntoIterator<Item = Self>>(terms: I) -> Result<Option<Self>> {
        let mut acc: Option<Self> = None;
        for t in terms {
            acc = Some(match acc {
                None => t,
                Some(a) => a.try_add(&t)?,
            });
        }
        Ok(acc)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = self.var.symbol();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*{v}")?,
                _ => write!(f, "{c}*{v}^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O({v}^{})", self.order() + 1)
    }
}

// Operator sugar. These panic on a variable mismatch; use the `try_*` methods
// when the operands come from outside the crate.

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: Self) -> Series<T> {
        self.try_add(rhs).unwrap()
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: Self) -> Series<T> {
        self.try_sub(rhs).unwrap()
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: Self) -> Series<T> {
        self.try_mul(rhs).unwrap()
    }
}

impl<T: Scalar> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<T: Scalar> $tr for Series<T> {
            type Output = Series<T>;
            fn $m(self, rhs: Self) -> Series<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

//! First-order jets in the marking variable `x`.
//!
//! A generating function `F(x, ·)` is carried as the pair
//! `(F(1, ·), ∂F/∂x (1, ·))`, which is all that is needed to count the total
//! number of marked objects.

use crate::error::Result;
use crate::scalar::Scalar;
use crate::series::Series;

#[derive(Debug, Clone, PartialEq)]
pub struct Jet<T> {
    pub val: Series<T>,
    pub dx: Series<T>,
}

impl<T: Scalar> Jet<T> {
    /// A factor that does not involve `x`: `(s, 0)`.
    pub fn constant(s: Series<T>) -> Self {
        let dx = Series::zero(s.var(), s.order());
        Jet { val: s, dx }
    }

    /// The factor `x * s`: `(s, s)`.
    pub fn tracker(s: Series<T>) -> Self {
        Jet {
            dx: s.clone(),
            val: s,
        }
    }

    pub fn order(&self) -> usize {
        self.val.order().min(self.dx.order())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(Jet {
            val: self.val.try_add(&other.val)?,
            dx: self.dx.try_add(&other.dx)?,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        Ok(Jet {
            val: self.val.try_sub(&other.val)?,
            dx: self.dx.try_sub(&other.dx)?,
        })
    }

    /// Product rule.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let val = self.val.try_mul(&other.val)?;
        let dx = self
            .dx
            .try_mul(&other.val)?
            .try_add(&self.val.try_mul(&other.dx)?)?;
        Ok(Jet { val, dx })
    }

    /// `1/a`: `(1/a.val, -a.dx / a.val^2)`.
    pub fn invert(&self) -> Result<Self> {
        let inv = self.val.invert()?;
        let dx = -&self.dx.try_mul(&inv)?.try_mul(&inv)?;
        Ok(Jet { val: inv, dx })
    }

    /// Product of a sequence of jets, or `one` when empty.
    pub fn product<I: IntoIterator<Item = Self>>(one: Self, factors: I) -> Result<Self> {
        factors.into_iter().try_fold(one, |acc, f| acc.try_mul(&f))
    }
}

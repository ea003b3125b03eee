//! Generating functions for left-to-right maxima, expressed in `u`.
//!
//! Everything is computed after the substitution `z^2 = u/(1+u)^2`, under
//! which `sqrt(1 - 4z^2) = (1-u)/(1+u)`, `λ₁ = 1/(1+u)` and `λ₂ = u/(1+u)`
//! are all rational. Odd powers of `z` cannot be written in `u`, so they are
//! carried as a parity flag on [`UForm`].
//!
//! Sums over the height `r` are cut at `r = order`: every summand has
//! `u`-valuation at least `r`, so the truncation is exact.

use crate::error::{Error, Result};
use crate::jet::Jet;
use crate::scalar::{Rational, Scalar};
use crate::series::{Series, Var};

use num_bigint::BigInt;

/// `z^{odd} * body(u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct UForm<T> {
    pub odd_z: bool,
    pub body: Series<T>,
}

impl<T: Scalar> UForm<T> {
    pub fn even(body: Series<T>) -> Self {
        UForm { odd_z: false, body }
    }

    /// `z^k` as a u-form known to `order`.
    pub fn z_power(k: usize, order: usize) -> Self {
        UForm {
            odd_z: k % 2 == 1,
            body: z_squared_power(k / 2, order),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut body = &self.body * &other.body;
        if self.odd_z && other.odd_z {
            body = &body * &z_squared_power(1, body.order());
        }
        UForm {
            odd_z: self.odd_z ^ other.odd_z,
            body,
        }
    }

    /// The body, provided no stray factor of `z` is left over.
    pub fn into_even(self) -> Result<Series<T>> {
        if self.odd_z {
            return Err(Error::Domain("odd power of z has no expansion in u".into()));
        }
        Ok(self.body)
    }

    /// Expansion in `z`, known through `z^{z_order}`.
    pub fn to_z(&self, z_order: usize) -> Result<Series<T>> {
        let s = z_expand(&self.body, z_order)?;
        Ok(if self.odd_z {
            s.shift_up(1).truncate(z_order)
        } else {
            s
        })
    }
}

fn u_poly<T: Scalar>(poly: &[i64], order: usize) -> Series<T> {
    Series::from_ints(Var::U, poly, order)
}

fn one_minus_u_pow<T: Scalar>(k: usize, order: usize) -> Series<T> {
    Series::one_minus_power(Var::U, k, order)
}

fn u_pow<T: Scalar>(k: usize, order: usize) -> Series<T> {
    Series::monomial(Var::U, T::one(), k, order)
}

fn div<T: Scalar>(a: &Series<T>, b: &Series<T>) -> Series<T> {
    a.try_div(b).expect("denominator has constant term 1")
}

/// `(z^2)^m = u^m / (1+u)^{2m}`.
pub fn z_squared_power<T: Scalar>(m: usize, order: usize) -> Series<T> {
    let base = u_poly::<T>(&[1, 1], order).pow(2 * m as u32);
    div(&u_pow(m, order), &base)
}

fn lambdas<T: Scalar>(order: usize) -> (Series<T>, Series<T>) {
    let lam1 = u_poly::<T>(&[1, 1], order).invert().expect("1 + u is a unit");
    let lam2 = lam1.shift_up(1).truncate(order);
    (lam1, lam2)
}

fn lambda_difference<T: Scalar>(k: u32, order: usize) -> Series<T> {
    let (lam1, lam2) = lambdas::<T>(order);
    &lam1.pow(k) - &lam2.pow(k)
}

/// Dyck paths of height at most `h`.
pub fn a_h<T: Scalar>(h: usize, order: usize) -> Series<T> {
    let h = h as u32;
    div(
        &lambda_difference(h + 1, order),
        &lambda_difference(h + 2, order),
    )
}

/// Paths of height at most `h` that end at height `h`.
pub fn c_h<T: Scalar>(h: usize, order: usize) -> UForm<T> {
    let root = div(&u_poly(&[1, -1], order), &u_poly(&[1, 1], order));
    let body = div(&root, &lambda_difference(h as u32 + 2, order));
    UForm::z_power(h, order).mul(&UForm::even(body))
}

/// Cached `A(h)` for `h = 0..=max_h`.
fn a_table<T: Scalar>(max_h: usize, order: usize) -> Vec<Series<T>> {
    (0..=max_h).map(|h| a_h(h, order)).collect()
}

/// Jets of the strict-maxima generating function for every height
/// `1..=r_max`: `val` counts paths of height exactly `r`, `dx` their strict
/// left-to-right maxima.
pub fn f_strict_up_to<T: Scalar>(r_max: usize, order: usize) -> Vec<Jet<T>> {
    let a = a_table::<T>(r_max, order);
    let one = u_poly::<T>(&[1], order);
    let mut prod = Jet::constant(one.clone());
    let mut out = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        let head = UForm::z_power(r, order)
            .mul(&c_h(r, order))
            .into_even()
            .expect("z^r C(r) has even z-degree");
        out.push(Jet::tracker(head).try_mul(&prod).expect("u-series"));
        // next factor: 1 + x (A(r) - 1)
        let factor = Jet::constant(one.clone())
            .try_add(&Jet::tracker(&a[r] - &one))
            .expect("u-series");
        prod = prod.try_mul(&factor).expect("u-series");
    }
    out
}

pub fn f_strict<T: Scalar>(r: usize, order: usize) -> Jet<T> {
    assert!(r >= 1, "height must be positive");
    f_strict_up_to(r, order).pop().unwrap()
}

/// Strict maxima over paths of height exactly `r`, in closed u-form.
pub fn t_strict<T: Scalar>(r: usize, order: usize) -> Series<T> {
    assert!(r >= 1, "height must be positive");
    let inner = (1..r)
        .map(|i| strict_inner_term::<T>(i, order))
        .fold(Series::zero(Var::U, order), |acc, t| &acc + &t);
    t_strict_with_inner(r, &inner, order)
}

// (1 - u^{2+i}) / ((1+u)(1 - u^{1+i}))
fn strict_inner_term<T: Scalar>(i: usize, order: usize) -> Series<T> {
    div(
        &one_minus_u_pow(i + 2, order),
        &(&u_poly(&[1, 1], order) * &one_minus_u_pow(i + 1, order)),
    )
}

fn t_strict_with_inner<T: Scalar>(r: usize, inner: &Series<T>, order: usize) -> Series<T> {
    let head = strict_height_head::<T>(r, order);
    let bracket = &Series::constant(Var::U, T::from_int(r as i64), order) - inner;
    &head * &bracket
}

// (1-u)^2 u^r (1+u) / ((1 - u^{1+r})(1 - u^{2+r})): paths of height exactly r.
fn strict_height_head<T: Scalar>(r: usize, order: usize) -> Series<T> {
    let num = &u_poly::<T>(&[1, -1, -1, 1], order) * &u_pow(r, order);
    div(
        &num,
        &(&one_minus_u_pow(r + 1, order) * &one_minus_u_pow(r + 2, order)),
    )
}

/// Total strict maxima as the double sum over heights.
pub fn tot_raw<T: Scalar>(order: usize) -> Series<T> {
    let mut inner = Series::zero(Var::U, order);
    let mut acc = Series::zero(Var::U, order);
    for r in 1..=order.max(1) {
        if r > 1 {
            inner = &inner + &strict_inner_term(r - 1, order);
        }
        acc = &acc + &t_strict_with_inner(r, &inner, order);
    }
    acc
}

/// Total strict maxima: `Σ_{r≥1} (1-u) u^r / (1 - u^{1+r})`.
pub fn tot_simplified<T: Scalar>(order: usize) -> Series<T> {
    let one_minus_u = u_poly::<T>(&[1, -1], order);
    (1..=order.max(1)).fold(Series::zero(Var::U, order), |acc, r| {
        let term = div(
            &(&one_minus_u * &u_pow(r, order)),
            &one_minus_u_pow(r + 1, order),
        );
        &acc + &term
    })
}

/// Dyck paths of height at most `h` with a single return: `z^2 A(h-1)`.
pub fn d_h<T: Scalar>(h: usize, order: usize) -> Series<T> {
    assert!(h >= 1, "height must be positive");
    &z_squared_power(1, order) * &a_h(h - 1, order)
}

/// `1/(1 - x D(h))`: sequences of arches, `x` marking returns.
pub fn e_h<T: Scalar>(h: usize, order: usize) -> Jet<T> {
    e_from_d(d_h(h, order))
}

fn e_from_d<T: Scalar>(d: Series<T>) -> Jet<T> {
    let order = d.order();
    Jet::constant(u_poly(&[1], order))
        .try_sub(&Jet::tracker(d))
        .and_then(|j| j.invert())
        .expect("1 - D has constant term 1")
}

/// Jets of the weak-maxima generating function for heights `1..=r_max`.
pub fn f_weak_up_to<T: Scalar>(r_max: usize, order: usize) -> Vec<Jet<T>> {
    let a = a_table::<T>(r_max, order);
    let z2 = z_squared_power::<T>(1, order);
    let mut prod = Jet::constant(u_poly(&[1], order));
    let mut out = Vec::with_capacity(r_max);
    for r in 1..=r_max {
        prod = prod
            .try_mul(&e_from_d(&z2 * &a[r - 1]))
            .expect("u-series");
        let head = UForm::z_power(r + 1, order)
            .mul(&c_h(r - 1, order))
            .into_even()
            .expect("z^{r+1} C(r-1) has even z-degree");
        out.push(Jet::tracker(head).try_mul(&prod).expect("u-series"));
    }
    out
}

pub fn f_weak<T: Scalar>(r: usize, order: usize) -> Jet<T> {
    assert!(r >= 1, "height must be positive");
    f_weak_up_to(r, order).pop().unwrap()
}

/// Total weak maxima as the double sum over heights.
pub fn wtot_raw<T: Scalar>(order: usize) -> Series<T> {
    let one_plus_u = u_poly::<T>(&[1, 1], order);
    let mut inner = Series::zero(Var::U, order);
    let mut acc = Series::zero(Var::U, order);
    for r in 1..=order.max(1) {
        // Σ_{i=1}^{r} (1 - u^{1+i}) / (1 - u^{2+i})
        inner = &inner + &div(&one_minus_u_pow(r + 1, order), &one_minus_u_pow(r + 2, order));
        let bracket = &Series::constant(Var::U, T::from_int(1 - r as i64), order)
            + &(&one_plus_u * &inner);
        // (1-u) u^r (1-u^2) / ((1 - u^{1+r})(1 - u^{2+r}))
        let head = strict_height_head::<T>(r, order);
        acc = &acc + &(&head * &bracket);
    }
    acc
}

/// Total weak maxima: `Σ_{r≥1} (1-u^2) u^r / (1 - u^{2+r})`.
pub fn wtot_simplified<T: Scalar>(order: usize) -> Series<T> {
    let num = u_poly::<T>(&[1, 0, -1], order);
    (1..=order.max(1)).fold(Series::zero(Var::U, order), |acc, r| {
        let term = div(&(&num * &u_pow(r, order)), &one_minus_u_pow(r + 2, order));
        &acc + &term
    })
}

/// `Σ_{r≥1} u^r / (1 - u^r)`.
pub fn divisor_series<T: Scalar>(order: usize) -> Series<T> {
    (1..=order.max(1)).fold(Series::zero(Var::U, order), |acc, r| {
        &acc + &div(&u_pow(r, order), &one_minus_u_pow(r, order))
    })
}

/// `u` as a series in `z`: `(1 - 2z^2 - sqrt(1 - 4z^2)) / (2z^2)`.
pub fn u_of_z<T: Scalar>(order: usize) -> Series<T> {
    let wide = order + 2;
    let root =
        Series::sqrt_one_plus(&Series::from_ints(Var::Z, &[0, 0, -4], wide)).expect("no constant");
    let num = &Series::from_ints(Var::Z, &[1, 0, -2], wide) - &root;
    let half = T::one() / T::from_int(2);
    num.shift_down(2).expect("numerator starts at z^4").scale(&half)
}

/// Re-expands a u-series in `z` by substituting `u(z)`.
pub fn z_expand<T: Scalar>(f: &Series<T>, z_order: usize) -> Result<Series<T>> {
    if f.var() != Var::U {
        return Err(Error::VarMismatch {
            left: f.var(),
            right: Var::U,
        });
    }
    Series::compose(&f.clone().with_var(Var::Free), &u_of_z(z_order))
}

/// `[z^{2n}] f` for `n = 1..=n_max`, read off in the u-domain with
/// `[z^{2n}] f = [u^n] (1-u)(1+u)^{2n-1} f`.
pub fn to_z_coeffs<T: Scalar>(f: &Series<T>, n_max: usize) -> Result<Vec<T>> {
    if f.var() != Var::U {
        return Err(Error::VarMismatch {
            left: f.var(),
            right: Var::U,
        });
    }
    if f.order() < n_max {
        return Err(Error::Truncated {
            needed: n_max,
            available: f.order(),
        });
    }
    let coeffs = f.coeffs();
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let m = 2 * n - 1;
        // binom[k] = C(2n-1, k) for k = 0..=n
        let mut binom = Vec::with_capacity(n + 1);
        binom.push(T::one());
        for k in 0..n {
            let next = binom[k].clone() * T::from_int((m - k) as i64) / T::from_int(k as i64 + 1);
            binom.push(next);
        }
        let weight = |j: usize| {
            if j == 0 {
                binom[0].clone()
            } else {
                binom[j].clone() - binom[j - 1].clone()
            }
        };
        let mut c = T::zero();
        for (k, fk) in coeffs[..=n].iter().enumerate() {
            if !fk.is_zero() {
                c = c + fk.clone() * weight(n - k);
            }
        }
        out.push(c);
    }
    Ok(out)
}

/// [`to_z_coeffs`] for exact series, insisting on integer results.
pub fn to_z_integers(f: &Series<Rational>, n_max: usize) -> Result<Vec<BigInt>> {
    to_z_coeffs(f, n_max)?
        .into_iter()
        .enumerate()
        .map(|(i, q)| {
            if q.is_integer() {
                Ok(q.to_integer())
            } else {
                Err(Error::NotInteger {
                    index: 2 * (i + 1),
                    value: q.to_string(),
                })
            }
        })
        .collect()
}

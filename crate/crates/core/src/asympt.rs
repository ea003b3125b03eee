//! Asymptotic means and the small-`t` expansion of the harmonic sum behind
//! them.
//!
//! Coefficient-level estimates are reported divided by `4^n`, the common
//! exponential growth of the totals and of the Catalan numbers, so they stay
//! within floating-point range for any `n`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{Float, FloatConst, ToPrimitive};

/// Euler–Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

fn c<T: Float>(v: f64) -> T {
    T::from(v).expect("float type holds small constants")
}

fn gamma<T: Float>() -> T {
    c(EULER_GAMMA)
}

/// `sqrt(pi n)/2 - log(n)/4 + (1 - 3γ)/4`.
pub fn strict_mean_asympt<T: Float + FloatConst>(n: T) -> T {
    let sqrt_pi_n = (T::PI() * n).sqrt();
    sqrt_pi_n / c(2.0) - n.ln() / c(4.0) + (T::one() - c::<T>(3.0) * gamma()) / c(4.0)
}

/// `sqrt(pi n) - log(n) + (5 - 6γ)/2`.
pub fn weak_mean_asympt<T: Float + FloatConst>(n: T) -> T {
    (T::PI() * n).sqrt() - n.ln() + (c::<T>(5.0) - c::<T>(6.0) * gamma()) / c(2.0)
}

/// Three-term estimate of `catalan(n) / 4^n`.
pub fn catalan_asympt<T: Float + FloatConst>(n: T) -> T {
    let sqrt_pi = T::PI().sqrt();
    let n32 = n * n.sqrt();
    (T::one() - c::<T>(9.0 / 8.0) / n + c::<T>(145.0 / 128.0) / (n * n)) / (n32 * sqrt_pi)
}

/// Three-term estimate of `strict_total(n) / 4^n`.
pub fn total_strict_coeff_asympt<T: Float + FloatConst>(n: T) -> T {
    let denom = c::<T>(4.0) * T::PI().sqrt() * n * n.sqrt();
    T::one() / (c::<T>(2.0) * n) - n.ln() / denom + (T::one() - c::<T>(3.0) * gamma()) / denom
}

/// `Σ_{r≥2} e^{-rt} / (1 - e^{-rt})`, summed until the terms stop mattering.
///
/// Returns `None` for `t <= 0`, where the sum diverges.
pub fn f1_direct<T: Float>(t: T) -> Option<T> {
    if !(t > T::zero()) {
        return None;
    }
    let eps = c::<T>(1e-16).max(T::epsilon() / c(4.0));
    let mut sum = T::zero();
    let mut comp = T::zero();
    let mut r = 2u64;
    loop {
        let q = (-t * c(r as f64)).exp();
        let term = q / (T::one() - q);
        // Kahan summation: the small-t case adds thousands of terms.
        let y = term - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
        if term <= eps * sum {
            return Some(sum);
        }
        r += 1;
    }
}

/// `(γ - 1 - log t)/t + 3/4 - 13t/144`.
pub fn f1_expansion<T: Float>(t: T) -> Option<T> {
    if !(t > T::zero()) {
        return None;
    }
    Some((gamma::<T>() - T::one() - t.ln()) / t + c(0.75) - c::<T>(13.0 / 144.0) * t)
}

/// Exact quotient `num/den` rounded to `digits` places after the point.
pub fn decimal_quotient(num: &BigUint, den: &BigUint, digits: u32) -> String {
    assert!(den > &BigUint::from(0u32), "division by zero");
    let scale = BigUint::from(10u32).pow(digits);
    let scaled = num * &scale;
    let (q, r) = scaled.div_rem(den);
    let q = if &r * 2u32 >= *den { q + 1u32 } else { q };
    let (int, frac) = q.div_rem(&scale);
    if digits == 0 {
        return int.to_string();
    }
    format!("{int}.{:0>width$}", frac.to_string(), width = digits as usize)
}

/// Exact quotient of two big integers as a float, with one rounding at the
/// end of a 40-digit decimal division.
pub fn big_ratio_f64(num: &BigUint, den: &BigUint) -> f64 {
    decimal_quotient(num, den, 40)
        .parse()
        .ok()
        .or_else(|| Some(num.to_f64()? / den.to_f64()?))
        .unwrap_or(f64::NAN)
}

/// Exact mean at one `n` set against its asymptotic estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct MeanComparison {
    pub n: u64,
    /// Exact mean to 30 decimal places.
    pub exact_mean: String,
    pub exact_mean_f64: f64,
    pub asympt_mean: f64,
    pub abs_gap: f64,
    pub rel_gap: f64,
}

impl MeanComparison {
    pub fn new(n: u64, total: &BigUint, catalan: &BigUint, asympt_mean: f64) -> Self {
        let exact_mean = decimal_quotient(total, catalan, 30);
        let exact_mean_f64 = exact_mean.parse().unwrap_or(f64::NAN);
        let abs_gap = (exact_mean_f64 - asympt_mean).abs();
        MeanComparison {
            n,
            exact_mean,
            exact_mean_f64,
            asympt_mean,
            abs_gap,
            rel_gap: abs_gap / exact_mean_f64.abs(),
        }
    }
}

/// Strict mean comparison using the closed-form total.
pub fn compare_strict(n: u64) -> MeanComparison {
    let total = crate::exact::strict_total(n as usize);
    let cat = crate::exact::catalan(n);
    MeanComparison::new(n, &total, &cat, strict_mean_asympt(n as f64))
}

/// Weak mean comparison using the closed-form total.
pub fn compare_weak(n: u64) -> MeanComparison {
    let total = crate::exact::weak_total(n as usize);
    let cat = crate::exact::catalan(n);
    MeanComparison::new(n, &total, &cat, weak_mean_asympt(n as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact;

    #[test]
    fn remark_values_at_200() {
        assert!((strict_mean_asympt(200.0f64) - 11.0257).abs() < 1e-4);
        assert!((weak_mean_asympt(200.0f64) - 20.536).abs() < 1e-3);
        let s = compare_strict(200);
        assert!((s.exact_mean_f64 - 11.0503).abs() < 1e-4, "{}", s.exact_mean);
        let w = compare_weak(200);
        assert!((w.exact_mean_f64 - 20.368).abs() < 1e-3, "{}", w.exact_mean);
        assert!(s.abs_gap < 0.03);
    }

    #[test]
    fn half_height() {
        let n = 1e6f64;
        let ratio = strict_mean_asympt(n) / (std::f64::consts::PI * n).sqrt();
        assert!((ratio - 0.5).abs() < 0.01);
    }

    #[test]
    fn weak_below_twice_strict() {
        let mut n = 10.0f64;
        while n <= 1e6 {
            assert!(weak_mean_asympt(n) < 2.0 * strict_mean_asympt(n), "n = {n}");
            n *= 1.5;
        }
    }

    fn catalan_rel_error(n: u64) -> f64 {
        let exact = big_ratio_f64(&exact::catalan(n), &BigUint::from(4u32).pow(n as u32));
        (catalan_asympt(n as f64) / exact - 1.0).abs()
    }

    #[test]
    fn catalan_estimate() {
        assert!(catalan_rel_error(100) < 1e-5);
        // frozen from an exact evaluation: 1.1422e-3 at n = 10
        assert!((catalan_rel_error(10) - 1.1422e-3).abs() < 1e-6);
        assert!(catalan_rel_error(200) < catalan_rel_error(50));
    }

    #[test]
    fn strict_coefficient_estimate() {
        let n = 200u64;
        let exact = big_ratio_f64(&exact::strict_total(n as usize), &BigUint::from(4u32).pow(n as u32));
        let est = total_strict_coeff_asympt(n as f64);
        assert!((est / exact - 1.0).abs() < 0.01);
        // the quotient of the two three-term estimates differs from the mean
        // formula by a term of order n^{-1/2}
        let q = est / catalan_asympt(n as f64);
        assert!((q - strict_mean_asympt(n as f64)).abs() < 1.0 / (n as f64).sqrt());
        assert!((1e8 * total_strict_coeff_asympt(1e8f64) - 0.5).abs() < 1e-3);
    }

    #[test]
    fn f1_expansion_converges() {
        let ts = [0.2f64, 0.1, 0.05, 0.025];
        let errs: Vec<f64> = ts
            .iter()
            .map(|&t| (f1_direct(t).unwrap() - f1_expansion(t).unwrap()).abs())
            .collect();
        for w in errs.windows(2) {
            assert!(w[0] / w[1] >= 3.0, "{errs:?}");
        }
    }

    #[test]
    fn f1_at_large_t() {
        // brute partial sum, frozen: 4.570996855954743e-5
        let v = f1_direct(5.0f64).unwrap();
        let brute: f64 = (2..40).map(|r| {
            let q = (-5.0 * r as f64).exp();
            q / (1.0 - q)
        }).sum();
        assert!((v - brute).abs() < 1e-18);
        assert!((v - 4.570996855954743e-5).abs() < 1e-15);
    }

    #[test]
    fn f1_domain() {
        assert!(f1_direct(0.0f64).is_none());
        assert!(f1_direct(-1.0f64).is_none());
        assert!(f1_expansion(0.0f64).is_none());
        assert!(f1_expansion(1e-8f64).unwrap() > 1e8);
    }

    #[test]
    fn works_in_f32() {
        assert!((strict_mean_asympt(200.0f32) - 11.0257).abs() < 1e-3);
    }

    #[test]
    fn decimal_rounding() {
        let q = decimal_quotient(&BigUint::from(2u32), &BigUint::from(3u32), 4);
        assert_eq!(q, "0.6667");
        assert_eq!(decimal_quotient(&BigUint::from(7u32), &BigUint::from(2u32), 0), "4");
        assert_eq!(decimal_quotient(&BigUint::from(1u32), &BigUint::from(8u32), 2), "0.13");
    }
}

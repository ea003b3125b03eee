//! Closed-form totals in terms of the divisor function.
//!
//! Both totals have the shape
//! `Σ_{r=1}^{n} (d(r+s) - d(r)) (C(2n-1, n-r) - C(2n-1, n-r-1))`
//! with shift `s = 1` for strict and `s = 2` for weak maxima.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// Arbitrary-precision non-negative count.
pub type BigCount = BigUint;

/// `d(r)` for `1 <= r <= capacity`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTable {
    // d[0] is unused and kept at 0
    d: Vec<u32>,
}

impl DivisorTable {
    /// Sieve: every `k` marks its multiples.
    pub fn new(capacity: usize) -> Self {
        let mut d = vec![0u32; capacity + 1];
        for k in 1..=capacity {
            for m in (k..=capacity).step_by(k) {
                d[m] += 1;
            }
        }
        DivisorTable { d }
    }

    pub fn capacity(&self) -> usize {
        self.d.len() - 1
    }

    /// Panics for `r == 0` or `r > capacity`.
    pub fn get(&self, r: usize) -> u32 {
        assert!(r >= 1 && r <= self.capacity(), "d({r}) outside sieve");
        self.d[r]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.d[1..]
    }

    /// Overwrites one entry. Only meant for fault-injection checks.
    pub fn corrupt(&mut self, r: usize, value: u32) {
        self.d[r] = value;
    }
}

pub fn divisors(capacity: usize) -> DivisorTable {
    DivisorTable::new(capacity)
}

/// `C(a, b)`, zero when `b < 0` or `b > a`.
pub fn binomial(a: u64, b: i64) -> BigCount {
    if b < 0 || b as u64 > a {
        return BigCount::zero();
    }
    let b = (b as u64).min(a - b as u64);
    let mut acc = BigCount::one();
    for k in 0..b {
        acc = acc * (a - k) / (k + 1);
    }
    acc
}

/// `C(m, k)` for `k = 0..=upto`, built multiplicatively.
pub fn binomial_row(m: u64, upto: usize) -> Vec<BigCount> {
    let mut row = Vec::with_capacity(upto + 1);
    row.push(BigCount::one());
    for k in 0..upto as u64 {
        let next = if k >= m {
            BigCount::zero()
        } else {
            row[k as usize].clone() * (m - k) / (k + 1)
        };
        row.push(next);
    }
    row
}

pub fn catalan(n: u64) -> BigCount {
    binomial(2 * n, n as i64) / (n + 1)
}

/// Computes both totals for many `n` against one sieve.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    divisors: DivisorTable,
}

impl ClosedForm {
    /// Ready for every `n <= n_max`.
    pub fn new(n_max: usize) -> Self {
        ClosedForm {
            divisors: DivisorTable::new(n_max + 2),
        }
    }

    pub fn with_table(divisors: DivisorTable) -> Self {
        ClosedForm { divisors }
    }

    pub fn divisors(&self) -> &DivisorTable {
        &self.divisors
    }

    fn total(&self, n: usize, shift: usize) -> BigCount {
        assert!(n >= 1, "semi-length must be positive");
        assert!(
            n + shift <= self.divisors.capacity(),
            "sieve too small for n = {n}"
        );
        // row[k] = C(2n-1, k), k = 0..=n-1
        let row = binomial_row(2 * n as u64 - 1, n - 1);
        let mut acc = BigInt::zero();
        for r in 1..=n {
            let dd = self.divisors.get(r + shift) as i64 - self.divisors.get(r) as i64;
            if dd == 0 {
                continue;
            }
            let hi = &row[n - r];
            let ballot = if r < n {
                BigInt::from(hi.clone()) - BigInt::from(row[n - r - 1].clone())
            } else {
                BigInt::from(hi.clone())
            };
            acc += ballot * dd;
        }
        acc.to_biguint().expect("totals are non-negative")
    }

    pub fn strict_total(&self, n: usize) -> BigCount {
        self.total(n, 1)
    }

    pub fn weak_total(&self, n: usize) -> BigCount {
        self.total(n, 2)
    }
}

/// Total strict left-to-right maxima over Dyck paths of semi-length `n`.
pub fn strict_total(n: usize) -> BigCount {
    ClosedForm::new(n).strict_total(n)
}

/// Total weak left-to-right maxima over Dyck paths of semi-length `n`.
pub fn weak_total(n: usize) -> BigCount {
    ClosedForm::new(n).weak_total(n)
}

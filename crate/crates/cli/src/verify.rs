//! The `verify` command: every identity the library relies on, checked
//! against each other at a configurable budget.

use std::fmt;

use dyckmax::exact::{ClosedForm, DivisorTable};
use dyckmax::genfun::{self, to_z_coeffs, to_z_integers, z_expand};
use dyckmax::{exact, paths, Error, Rational, RationalSeries};
use num_bigint::BigInt;

type Q = Rational;

const STRICT_PRINTED: [i64; 10] = [1, 2, 6, 19, 63, 216, 758, 2705, 9777, 35698];
const WEAK_PRINTED: [i64; 10] = [1, 3, 9, 29, 98, 341, 1210, 4356, 15860, 58276];

/// Deliberate corruption used to check that `verify` notices failures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Fault {
    /// Reports d(6) = 5.
    DivisorSieve,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max_oracle: u32,
    pub order: usize,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            n_max_oracle: 10,
            order: 50,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            crate::EXIT_OK
        } else {
            crate::EXIT_VERIFY_FAILED
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let tag = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {}: {}", c.name, c.detail)?;
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        writeln!(f, "{ok}/{} checks passed", self.checks.len())
    }
}

fn first_mismatch<T: PartialEq + fmt::Display>(
    label: &str,
    offset: usize,
    left: &[T],
    right: &[T],
) -> Result<(), String> {
    if left.len() != right.len() {
        return Err(format!("{label}: lengths {} and {}", left.len(), right.len()));
    }
    match left.iter().zip(right).position(|(a, b)| a != b) {
        Some(i) => Err(format!(
            "{label}: first difference at n = {}: {} vs {}",
            i + offset,
            left[i],
            right[i]
        )),
        None => Ok(()),
    }
}

fn sieve(capacity: usize, fault: Option<Fault>) -> DivisorTable {
    let mut t = DivisorTable::new(capacity);
    if fault == Some(Fault::DivisorSieve) && capacity >= 6 {
        t.corrupt(6, 5);
    }
    t
}

fn big(v: impl Into<BigInt>) -> BigInt {
    v.into()
}

fn run(name: String, body: impl FnOnce() -> Result<String, String>) -> Check {
    match body() {
        Ok(detail) => Check {
            name,
            passed: true,
            detail,
        },
        Err(detail) => Check {
            name,
            passed: false,
            detail,
        },
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// `[z^{2n}] f` for `n = 1..=n_max` by substituting `u(z)` into `f`.
fn coeffs_by_substitution(f: &RationalSeries, n_max: usize) -> Result<Vec<Q>, Error> {
    let z = z_expand(f, 2 * n_max)?;
    (1..=n_max)
        .map(|n| {
            z.coeff(2 * n).cloned().ok_or(Error::Truncated {
                needed: 2 * n,
                available: z.order(),
            })
        })
        .collect()
}

pub fn verify(cfg: &VerifyConfig, limits: &crate::Limits) -> Result<VerifyReport, Error> {
    let limit = limits.oracle_n;
    if cfg.n_max_oracle as u64 > limit {
        return Err(Error::Guard {
            what: "n-max-oracle",
            requested: cfg.n_max_oracle as u64,
            limit,
        });
    }
    if cfg.order == 0 {
        return Err(Error::Domain("order must be at least 1".into()));
    }
    let n_oracle = cfg.n_max_oracle as usize;
    let order = cfg.order;
    let table = sieve(order.max(n_oracle).max(10) + 2, cfg.fault);
    let closed = ClosedForm::with_table(table.clone());
    let tot = genfun::tot_simplified::<Q>(order.max(n_oracle).max(10));
    let wtot = genfun::wtot_simplified::<Q>(order.max(n_oracle).max(10));
    let mut checks = Vec::new();

    checks.push(run("figure fixture (n = 4)".into(), || {
        let t = paths::totals(4).map_err(err)?;
        let got = (t.catalan, t.strict_total, t.weak_total);
        if got == (14, 19, 29) {
            Ok(format!("{got:?}"))
        } else {
            Err(format!("got {got:?}, expected (14, 19, 29)"))
        }
    }));

    checks.push(run("printed expansions (n <= 10)".into(), || {
        let s = to_z_integers(&tot, 10).map_err(err)?;
        let w = to_z_integers(&wtot, 10).map_err(err)?;
        let want_s: Vec<BigInt> = STRICT_PRINTED.iter().map(|&v| big(v)).collect();
        let want_w: Vec<BigInt> = WEAK_PRINTED.iter().map(|&v| big(v)).collect();
        first_mismatch("strict", 1, &s, &want_s)?;
        first_mismatch("weak", 1, &w, &want_w)?;
        Ok("strict and weak match".into())
    }));

    checks.push(run(format!("oracle = series = closed form (n <= {n_oracle})"), || {
        let s = to_z_integers(&tot, n_oracle).map_err(err)?;
        let w = to_z_integers(&wtot, n_oracle).map_err(err)?;
        let mut o_s = Vec::new();
        let mut o_w = Vec::new();
        for n in 1..=cfg.n_max_oracle {
            let t = paths::totals_with_limit(n, cfg.n_max_oracle).map_err(err)?;
            o_s.push(big(t.strict_total));
            o_w.push(big(t.weak_total));
        }
        let c_s: Vec<BigInt> = (1..=n_oracle).map(|n| big(closed.strict_total(n))).collect();
        let c_w: Vec<BigInt> = (1..=n_oracle).map(|n| big(closed.weak_total(n))).collect();
        first_mismatch("strict oracle vs series", 1, &o_s, &s)?;
        first_mismatch("weak oracle vs series", 1, &o_w, &w)?;
        first_mismatch("strict oracle vs closed form", 1, &o_s, &c_s)?;
        first_mismatch("weak oracle vs closed form", 1, &o_w, &c_w)?;
        Ok(format!("{} values agree", 2 * n_oracle))
    }));

    checks.push(run(format!("height partition (n <= {n_oracle})"), || {
        let h = n_oracle.max(1);
        let coeffs = |jets: Vec<dyckmax::RationalJet>| -> Result<Vec<[Vec<BigInt>; 2]>, String> {
            jets.iter()
                .map(|j| Ok([to_z_integers(&j.val, h).map_err(err)?, to_z_integers(&j.dx, h).map_err(err)?]))
                .collect()
        };
        let strict = coeffs(genfun::f_strict_up_to::<Q>(h, h))?;
        let weak = coeffs(genfun::f_weak_up_to::<Q>(h, h))?;
        for n in 1..=n_oracle {
            let t = paths::totals_with_limit(n as u32, cfg.n_max_oracle).map_err(err)?;
            for (r, (sj, wj)) in strict.iter().zip(&weak).enumerate() {
                let row = t.by_height.get(&(r as u32 + 1)).copied().unwrap_or_default();
                let got = [&sj[0][n - 1], &sj[1][n - 1], &wj[0][n - 1], &wj[1][n - 1]].map(Clone::clone);
                let want = [big(row.paths), big(row.strict), big(row.paths), big(row.weak)];
                if got != want {
                    return Err(format!(
                        "n = {n}, height {}: generating functions {got:?}, oracle {want:?}",
                        r + 1
                    ));
                }
            }
            let total: u64 = t.by_height.values().map(|r| r.paths).sum();
            if big(total) != big(exact::catalan(n as u64)) {
                return Err(format!("n = {n}: {total} paths, catalan differs"));
            }
        }
        Ok("paths, strict and weak per height agree".into())
    }));

    checks.push(run(format!("strict raw = simplified (order {order})"), || {
        let raw = genfun::tot_raw::<Q>(order);
        let simple = genfun::tot_simplified::<Q>(order);
        first_mismatch("coefficients", 0, raw.coeffs(), simple.coeffs())?;
        Ok("identical".into())
    }));

    checks.push(run(format!("weak raw = simplified (order {order})"), || {
        let raw = genfun::wtot_raw::<Q>(order);
        let simple = genfun::wtot_simplified::<Q>(order);
        first_mismatch("coefficients", 0, raw.coeffs(), simple.coeffs())?;
        Ok("identical".into())
    }));

    checks.push(run(format!("divisor identity (order {order})"), || {
        let s = genfun::divisor_series::<Q>(order);
        let from_series = &s.coeffs()[1..=order];
        let from_sieve: Vec<Q> = (1..=order)
            .map(|r| Q::from_integer(big(table.get(r))))
            .collect();
        first_mismatch("d(r)", 1, from_series, &from_sieve)?;
        Ok(format!("d(1..={order}) agree"))
    }));

    let n_sub = order.min(20);
    checks.push(run(format!("residue rule = substitution (n <= {n_sub})"), || {
        for (label, f) in [("strict", &tot), ("weak", &wtot)] {
            let residue = to_z_coeffs(f, n_sub).map_err(err)?;
            let direct = coeffs_by_substitution(f, n_sub).map_err(err)?;
            first_mismatch(label, 1, &residue, &direct)?;
        }
        Ok("both totals agree".into())
    }));

    checks.push(run(format!("closed form = series (n <= {order})"), || {
        let s = to_z_integers(&tot, order).map_err(err)?;
        let w = to_z_integers(&wtot, order).map_err(err)?;
        let c_s: Vec<BigInt> = (1..=order).map(|n| big(closed.strict_total(n))).collect();
        let c_w: Vec<BigInt> = (1..=order).map(|n| big(closed.weak_total(n))).collect();
        first_mismatch("strict", 1, &c_s, &s)?;
        first_mismatch("weak", 1, &c_w, &w)?;
        Ok(format!("{} values agree", 2 * order))
    }));

    Ok(VerifyReport { checks })
}

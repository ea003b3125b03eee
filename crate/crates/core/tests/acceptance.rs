//! Acceptance criteria, one line of output per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the report is always
//! printed; the process fails if any criterion fails.

use std::time::{Duration, Instant};

use dyckmax::asympt;
use dyckmax::exact::{self, ClosedForm};
use dyckmax::genfun::{self, to_z_integers};
use dyckmax::{paths, Rational};
use num_bigint::{BigInt, BigUint};

type Q = Rational;

const STRICT: [i64; 10] = [1, 2, 6, 19, 63, 216, 758, 2705, 9777, 35698];
const WEAK: [i64; 10] = [1, 3, 9, 29, 98, 341, 1210, 4356, 15860, 58276];

type Outcome = Result<String, String>;

fn check(cond: bool, ok: String, bad: String) -> Outcome {
    if cond {
        Ok(ok)
    } else {
        Err(bad)
    }
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn figure_fixture() -> Outcome {
    let start = Instant::now();
    let t = paths::totals(4).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let got = (t.catalan, t.strict_total, t.weak_total);
    check(
        got == (14, 19, 29) && elapsed < Duration::from_secs(1),
        format!("n=4: {got:?} in {elapsed:?}"),
        format!("n=4: {got:?} in {elapsed:?}, want (14, 19, 29) under 1 s"),
    )
}

fn strict_series() -> Outcome {
    let via_series = to_z_integers(&genfun::tot_simplified::<Q>(10), 10).map_err(|e| e.to_string())?;
    let via_raw = to_z_integers(&genfun::tot_raw::<Q>(10), 10).map_err(|e| e.to_string())?;
    let via_closed: Vec<BigInt> = (1..=10).map(|n| exact::strict_total(n).into()).collect();
    let want = ints(&STRICT);
    check(
        via_series == want && via_raw == want && via_closed == want,
        format!("{via_series:?}"),
        format!("simplified {via_series:?}, raw {via_raw:?}, closed {via_closed:?}"),
    )
}

fn weak_series() -> Outcome {
    let via_series = to_z_integers(&genfun::wtot_simplified::<Q>(10), 10).map_err(|e| e.to_string())?;
    let via_raw = to_z_integers(&genfun::wtot_raw::<Q>(10), 10).map_err(|e| e.to_string())?;
    let via_closed: Vec<BigInt> = (1..=10).map(|n| exact::weak_total(n).into()).collect();
    let want = ints(&WEAK);
    check(
        via_series == want && via_raw == want && via_closed == want,
        format!("{via_series:?}"),
        format!("simplified {via_series:?}, raw {via_raw:?}, closed {via_closed:?}"),
    )
}

fn triple_agreement() -> Outcome {
    let start = Instant::now();
    let n_max = 12;
    let strict = to_z_integers(&genfun::tot_simplified::<Q>(n_max), n_max).map_err(|e| e.to_string())?;
    let weak = to_z_integers(&genfun::wtot_simplified::<Q>(n_max), n_max).map_err(|e| e.to_string())?;
    let cf = ClosedForm::new(n_max);
    for n in 1..=n_max {
        let t = paths::totals(n as u32).map_err(|e| e.to_string())?;
        let oracle = (BigInt::from(t.strict_total), BigInt::from(t.weak_total));
        let series = (strict[n - 1].clone(), weak[n - 1].clone());
        let closed = (BigInt::from(cf.strict_total(n)), BigInt::from(cf.weak_total(n)));
        if oracle != series || oracle != closed {
            return Err(format!(
                "n={n}: oracle {oracle:?}, series {series:?}, closed form {closed:?}"
            ));
        }
    }
    let elapsed = start.elapsed();
    check(
        elapsed < Duration::from_secs(60),
        format!("n=1..=12 agree in {elapsed:?}"),
        format!("agreement took {elapsed:?}, limit 60 s"),
    )
}

fn simplification() -> Outcome {
    let order = 50;
    let strict_ok = genfun::tot_raw::<Q>(order) == genfun::tot_simplified::<Q>(order);
    let weak_ok = genfun::wtot_raw::<Q>(order) == genfun::wtot_simplified::<Q>(order);
    check(
        strict_ok && weak_ok,
        format!("raw == simplified to u^{order} (strict and weak)"),
        format!("strict equal: {strict_ok}, weak equal: {weak_ok}"),
    )
}

fn divisor_identity() -> Outcome {
    let order = 200;
    let s = genfun::divisor_series::<Q>(order);
    let d = exact::divisors(order);
    for r in 1..=order {
        let want = Q::from_integer(BigInt::from(d.get(r)));
        if s.coeff(r) != Some(&want) {
            return Err(format!("u^{r}: series {:?}, d = {}", s.coeff(r), d.get(r)));
        }
    }
    check(
        s.coeff(0) == Some(&Q::from_integer(0.into())),
        format!("coefficients match d(r) for r <= {order}"),
        "nonzero constant term".into(),
    )
}

fn height_partition() -> Outcome {
    let n_max = 12;
    let strict = genfun::f_strict_up_to::<Q>(n_max, n_max);
    let weak = genfun::f_weak_up_to::<Q>(n_max, n_max);
    for (label, jets) in [("strict", &strict), ("weak", &weak)] {
        let mut sums = vec![BigInt::from(0); n_max];
        for j in jets.iter() {
            let c = to_z_integers(&j.val, n_max).map_err(|e| e.to_string())?;
            for (acc, v) in sums.iter_mut().zip(c) {
                *acc += v;
            }
        }
        for n in 1..=n_max {
            let cat = BigInt::from(exact::catalan(n as u64));
            if sums[n - 1] != cat {
                return Err(format!("{label} n={n}: {} vs catalan {cat}", sums[n - 1]));
            }
        }
    }
    Ok(format!("both families sum to catalan(n) for n <= {n_max}"))
}

fn means_at_200() -> Outcome {
    let s = asympt::compare_strict(200);
    let w = asympt::compare_weak(200);
    let ok = (s.exact_mean_f64 - 11.0503).abs() <= 0.0005
        && (s.asympt_mean - 11.0257).abs() <= 0.0005
        && (w.exact_mean_f64 - 20.368).abs() <= 0.002
        && (w.asympt_mean - 20.536).abs() <= 0.002;
    let msg = format!(
        "strict exact {:.6} asympt {:.6}; weak exact {:.6} asympt {:.6}",
        s.exact_mean_f64, s.asympt_mean, w.exact_mean_f64, w.asympt_mean
    );
    check(ok, msg.clone(), msg)
}

fn mellin_expansion() -> Outcome {
    let ts = [0.2f64, 0.1, 0.05, 0.025];
    let errs: Vec<f64> = ts
        .iter()
        .map(|&t| (asympt::f1_direct(t).unwrap() - asympt::f1_expansion(t).unwrap()).abs())
        .collect();
    let ratios: Vec<f64> = errs.windows(2).map(|w| w[0] / w[1]).collect();
    let errs: Vec<String> = errs.iter().map(|e| format!("{e:.3e}")).collect();
    let msg = format!("errors {errs:?}, ratios {ratios:.2?}");
    check(ratios.iter().all(|&r| r >= 3.0), msg.clone(), msg)
}

fn catalan_asymptotic() -> Outcome {
    let n = 100u64;
    let exact = asympt::big_ratio_f64(&exact::catalan(n), &BigUint::from(4u32).pow(n as u32));
    let rel = (asympt::catalan_asympt(n as f64) / exact - 1.0).abs();
    let msg = format!("relative error {rel:.3e} at n=100");
    check(rel < 1e-5, msg.clone(), msg)
}

fn half_height() -> Outcome {
    let n = 1e6f64;
    let ratio = asympt::strict_mean_asympt(n) / (std::f64::consts::PI * n).sqrt();
    let msg = format!("ratio {ratio:.5} at n=1e6");
    check((ratio - 0.5).abs() <= 0.01, msg.clone(), msg)
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("figure fixture: 14 paths, 19 strict, 29 weak", figure_fixture),
        ("strict series z^2..z^20", strict_series),
        ("weak series z^2..z^20", weak_series),
        ("oracle = series = closed form, n <= 12", triple_agreement),
        ("raw and simplified totals agree to order 50", simplification),
        ("divisor identity to order 200", divisor_identity),
        ("height partition sums to catalan", height_partition),
        ("asymptotic and exact means at n=200", means_at_200),
        ("small-t expansion of the harmonic sum", mellin_expansion),
        ("catalan asymptotic at n=100", catalan_asymptotic),
        ("half-height law at n=1e6", half_height),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

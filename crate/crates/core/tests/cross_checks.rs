//! Agreement between the enumeration oracle, the generating functions and
//! the closed forms.

use dyckmax::exact::{self, ClosedForm};
use dyckmax::genfun::{self, to_z_integers};
use dyckmax::{paths, Rational};
use num_bigint::BigInt;

type Q = Rational;

#[test]
fn three_routes_agree_up_to_11() {
    let n_max = 11;
    let strict = to_z_integers(&genfun::tot_simplified::<Q>(n_max), n_max).unwrap();
    let weak = to_z_integers(&genfun::wtot_simplified::<Q>(n_max), n_max).unwrap();
    let cf = ClosedForm::new(n_max);
    for n in 1..=n_max {
        let t = paths::totals(n as u32).unwrap();
        assert_eq!(BigInt::from(t.strict_total), strict[n - 1], "strict n = {n}");
        assert_eq!(BigInt::from(t.weak_total), weak[n - 1], "weak n = {n}");
        assert_eq!(BigInt::from(cf.strict_total(n)), strict[n - 1]);
        assert_eq!(BigInt::from(cf.weak_total(n)), weak[n - 1]);
        assert_eq!(BigInt::from(exact::catalan(n as u64)), BigInt::from(t.catalan));
    }
}

#[test]
fn closed_form_matches_series_to_30() {
    let n_max = 30;
    let strict = to_z_integers(&genfun::tot_simplified::<Q>(n_max), n_max).unwrap();
    let weak = to_z_integers(&genfun::wtot_simplified::<Q>(n_max), n_max).unwrap();
    let cf = ClosedForm::new(n_max);
    for n in 1..=n_max {
        assert_eq!(BigInt::from(cf.strict_total(n)), strict[n - 1], "n = {n}");
        assert_eq!(BigInt::from(cf.weak_total(n)), weak[n - 1], "n = {n}");
    }
}

#[test]
fn heights_by_generating_function_match_enumeration() {
    let n_max = 9;
    let strict = genfun::f_strict_up_to::<Q>(n_max, n_max);
    let weak = genfun::f_weak_up_to::<Q>(n_max, n_max);
    let val: Vec<Vec<BigInt>> = strict.iter().map(|j| to_z_integers(&j.val, n_max).unwrap()).collect();
    let sdx: Vec<Vec<BigInt>> = strict.iter().map(|j| to_z_integers(&j.dx, n_max).unwrap()).collect();
    let wdx: Vec<Vec<BigInt>> = weak.iter().map(|j| to_z_integers(&j.dx, n_max).unwrap()).collect();
    for n in 1..=n_max {
        let t = paths::totals(n as u32).unwrap();
        for r in 1..=n_max {
            let row = t.by_height.get(&(r as u32)).copied().unwrap_or_default();
            assert_eq!(val[r - 1][n - 1], BigInt::from(row.paths), "paths n={n} r={r}");
            assert_eq!(sdx[r - 1][n - 1], BigInt::from(row.strict), "strict n={n} r={r}");
            assert_eq!(wdx[r - 1][n - 1], BigInt::from(row.weak), "weak n={n} r={r}");
        }
    }
}

#[test]
fn mean_never_exceeds_tallest_path() {
    for n in 1..=12u32 {
        let t = paths::totals(n).unwrap();
        let tallest = *t.by_height.keys().max().unwrap() as u64;
        assert!(t.strict_total <= tallest * t.catalan);
    }
}

#[test]
fn weak_only_count_at_n4() {
    let t = paths::totals(4).unwrap();
    assert_eq!(t.weak_only(), 10);
    assert_eq!(exact::weak_total(4) - exact::strict_total(4), 10u32.into());
}

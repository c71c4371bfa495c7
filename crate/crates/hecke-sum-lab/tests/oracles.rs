//! Frozen reference values cross-checked three ways: an independent
//! oracle computes them from the defining property, the frozen literal
//! pins them against drift, and the library must reproduce them.

mod common;

use hecke_sum_lab::bounds::chebyshev_theta;
use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource, KIM_SARNAK};
use hecke_sum_lab::sieve::{FactorTable, SetKind};
use hecke_sum_lab::smooth::{psi_dfs, psi_scan, RhoTable};
use hecke_sum_lab::zeta::zeta;

#[test]
fn spf_and_moebius_agree_with_trial_division() {
    let x = 100_000u64;
    let factors = FactorTable::build(x, 0).unwrap();
    let oracle = common::spf_oracle(x as usize);
    for n in 2..=x {
        assert_eq!(
            factors.spf(n).unwrap(),
            oracle[n as usize] as u64,
            "spf({n})"
        );
    }
    for n in 1..=10_000u64 {
        assert_eq!(
            factors.moebius(n).unwrap(),
            common::moebius_oracle(n),
            "mu({n})"
        );
    }
}

#[test]
fn prime_counts_at_powers_of_ten() {
    let factors = FactorTable::build(1_000_000, 0).unwrap();
    // pi(10^k) for k = 1..6, textbook values
    let expected = [4usize, 25, 168, 1229, 9592, 78498];
    for (k, &want) in expected.iter().enumerate() {
        let bound = 10u64.pow(k as u32 + 1);
        let got = factors.primes().iter().take_while(|&&p| p <= bound).count();
        assert_eq!(got, want, "pi(10^{})", k + 1);
    }
}

#[test]
fn squarefree_count_frozen_and_oracle() {
    let x = 1_000_000u64;
    let factors = FactorTable::build(x, 0).unwrap();
    let oracle = common::squarefree_count_oracle(x as usize);
    assert_eq!(oracle, 607_926, "oracle must reproduce the frozen count");
    let (count, _) = factors.count_set(x, SetKind::SquarefreeMu).unwrap();
    assert_eq!(count, oracle);
    let (count2, _) = factors.count_set(x, SetKind::KFree(2)).unwrap();
    assert_eq!(count2, oracle, "|mu| support is exactly the 2-free set");
}

#[test]
fn squarefull_count_frozen_and_oracle() {
    let x = 1_000_000u64;
    let factors = FactorTable::build(x, 0).unwrap();
    let oracle = common::squarefull_oracle(x);
    assert_eq!(
        oracle, 2027,
        "a^2 b^3 enumeration must reproduce the frozen count"
    );
    let (count, _) = factors.count_set(x, SetKind::Squarefull).unwrap();
    assert_eq!(count, oracle);
}

#[test]
fn cubefree_count_oracle() {
    let x = 1_000_000u64;
    let factors = FactorTable::build(x, 0).unwrap();
    let (count, _) = factors.count_set(x, SetKind::KFree(3)).unwrap();
    // independent: inclusion over cubes, sum_d mu(d) floor(x/d^3)
    let mut expect = 0i64;
    let mut d = 1u64;
    while d * d * d <= x {
        expect += common::moebius_oracle(d) as i64 * (x / (d * d * d)) as i64;
        d += 1;
    }
    assert_eq!(expect, 831_910);
    assert_eq!(count, expect as u64);
}

#[test]
fn zeta_ratio_for_squarefull_main_term() {
    // zeta(3/2)/zeta(3), the squarefull density constant
    let ratio = zeta(1.5).unwrap() / zeta(3.0).unwrap();
    assert!((ratio - 2.173_254_312_519_554_3).abs() < 1e-12);
}

#[test]
fn psi_small_values_by_enumeration() {
    let factors = FactorTable::build(10_000, 0).unwrap();
    for &(x, y) in &[
        (100u64, 5.0f64),
        (1_000, 7.0),
        (10_000, 13.0),
        (10_000, 97.0),
    ] {
        let want = common::psi_oracle(x, y);
        assert_eq!(psi_dfs(x, y, &factors).unwrap(), want, "psi({x},{y})");
        assert_eq!(psi_scan(x, y, &factors).unwrap(), want, "psi({x},{y})");
    }
    assert_eq!(common::psi_oracle(100, 5.0), 34, "frozen");
}

#[test]
fn chebyshev_theta_against_trial_division() {
    let factors = FactorTable::build(10_000, 0).unwrap();
    let got = chebyshev_theta(&factors, 10_000).unwrap();
    let want = common::theta_oracle(10_000);
    assert!((got - want).abs() <= 1e-9 * want, "{got} vs {want}");
}

#[test]
fn dickman_closed_forms_and_scheme() {
    let table = RhoTable::build(6.0).unwrap();
    // 1 - ln 2 on [1, 2]
    let want2 = 1.0 - std::f64::consts::LN_2;
    assert!((table.eval(2.0).unwrap() - want2).abs() < 1e-9);
    assert!((want2 - 0.306_852_819_440_054_69).abs() < 1e-15, "frozen");
    // closed form on [2, 3]: 1 - ln 2 (1 - ln 2) + ... checked via the
    // independent integrator instead of the messy dilogarithm expression
    let oracle = common::rho_oracle(3.0, 1e-5);
    let want3 = oracle[oracle.len() - 1];
    assert!(
        (want3 - 4.860_838_828_191_5e-2).abs() < 1e-9,
        "frozen rho(3) = {want3}"
    );
    assert!((table.eval(3.0).unwrap() - want3).abs() < 1e-8);
}

#[test]
fn stress_prime_values_are_the_kim_sarnak_envelope() {
    let factors = FactorTable::build(1_000, 0).unwrap();
    let source = PrimeCoefficientSource::Stress {
        sign: hecke_sum_lab::hecke::SignRule::AllPlus,
    };
    let table = CoefficientTable::build(&source, 1_000, &factors).unwrap();
    for &p in factors.primes() {
        let pf = p as f64;
        let want = pf.powf(KIM_SARNAK) + pf.powf(-KIM_SARNAK);
        let got = table.lambda_slice()[p as usize];
        assert!((got - want).abs() < 1e-12, "p={p}");
    }
    // frozen spot value at p=2
    let want2 = 2f64.powf(7.0 / 64.0) + 2f64.powf(-7.0 / 64.0);
    assert!((want2 - 2.005_750_360_298_812_5).abs() < 1e-15);
}

#[test]
fn sato_tate_sample_mean_matches_the_semicircle() {
    // E|lambda_p| under the semicircle measure is 8/(3 pi)
    let x = 1_000_000u64;
    let factors = FactorTable::build(x, 0).unwrap();
    let source = PrimeCoefficientSource::SatoTate { seed: 0 };
    let table = CoefficientTable::build(&source, x, &factors).unwrap();
    let lam = table.lambda_slice();
    let mean = factors
        .primes()
        .iter()
        .map(|&p| lam[p as usize].abs())
        .sum::<f64>()
        / factors.primes().len() as f64;
    let want = 8.0 / (3.0 * std::f64::consts::PI);
    assert!((mean - want).abs() < 3e-3, "mean {mean} vs {want}");
    // and every prime respects the Ramanujan box
    assert!(factors
        .primes()
        .iter()
        .all(|&p| lam[p as usize].abs() <= 2.0));
}

//! The acceptance gate. One test per numbered criterion; the harness
//! line `test criterion_NN_... ok|FAILED` is the pass/fail record. All
//! tolerances are pinned here as literals.
//!
//! Base tables are process-wide shared infrastructure (the harness runs
//! these tests in one process); each criterion times only its own work.

mod common;

use std::sync::OnceLock;
use std::time::Instant;

use hecke_sum_lab::bounds::{self, Lab, LEMMA2_EPSILON};
use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource, SignRule};
use hecke_sum_lab::lemma6::{
    decompose_s_log, estimate_a, estimate_b, verify_lemma6, weight_abs_lambda_hk,
    weight_abs_lambda_mu, weight_abs_mu, MultiplicativeWeight,
};
use hecke_sum_lab::report::{BoundReport, Verdict};
use hecke_sum_lab::sieve::{FactorTable, SetKind};
use hecke_sum_lab::smooth::{psi_dfs, psi_scan, RhoTable};
use hecke_sum_lab::sums::{partial_sums, WeightCtx, WeightKind};
use hecke_sum_lab::theorems::theorem_pipeline;
use hecke_sum_lab::zeta::zeta;

const WORKERS: usize = 4;
const GRID_CAL: [u64; 3] = [1_000, 10_000, 100_000];
const GRID_MID: [u64; 4] = [1_000, 10_000, 100_000, 1_000_000];
const GRID_FULL: [u64; 5] = [1_000, 10_000, 100_000, 1_000_000, 10_000_000];

fn factors5() -> &'static FactorTable {
    static T: OnceLock<FactorTable> = OnceLock::new();
    T.get_or_init(|| FactorTable::build(100_000, WORKERS).unwrap())
}

fn factors6() -> &'static FactorTable {
    static T: OnceLock<FactorTable> = OnceLock::new();
    T.get_or_init(|| FactorTable::build(1_000_000, WORKERS).unwrap())
}

fn factors7() -> &'static FactorTable {
    static T: OnceLock<FactorTable> = OnceLock::new();
    T.get_or_init(|| FactorTable::build(10_000_000, WORKERS).unwrap())
}

fn sato6() -> &'static CoefficientTable {
    static T: OnceLock<CoefficientTable> = OnceLock::new();
    T.get_or_init(|| {
        let src = PrimeCoefficientSource::SatoTate { seed: 0 };
        let mut t = CoefficientTable::build(&src, 1_000_000, factors6()).unwrap();
        t.build_lambda_star(factors6()).unwrap();
        t
    })
}

fn stress6() -> &'static CoefficientTable {
    static T: OnceLock<CoefficientTable> = OnceLock::new();
    T.get_or_init(|| {
        let src = PrimeCoefficientSource::Stress {
            sign: SignRule::AllPlus,
        };
        let mut t = CoefficientTable::build(&src, 1_000_000, factors6()).unwrap();
        t.build_lambda_star(factors6()).unwrap();
        t
    })
}

fn sato7() -> &'static CoefficientTable {
    static T: OnceLock<CoefficientTable> = OnceLock::new();
    T.get_or_init(|| {
        let src = PrimeCoefficientSource::SatoTate { seed: 0 };
        CoefficientTable::build(&src, 10_000_000, factors7()).unwrap()
    })
}

fn stress7() -> &'static CoefficientTable {
    static T: OnceLock<CoefficientTable> = OnceLock::new();
    T.get_or_init(|| {
        let src = PrimeCoefficientSource::Stress {
            sign: SignRule::AllPlus,
        };
        CoefficientTable::build(&src, 10_000_000, factors7()).unwrap()
    })
}

/// Deterministic random (m, n) with m * n <= bound.
fn random_pair(state: &mut u64, bound: u64) -> (u64, u64) {
    let m = 1 + common::splitmix64(state) % 3_162;
    let n = 1 + common::splitmix64(state) % (bound / m);
    (m, n)
}

fn relation_scan(table: &CoefficientTable, label: &str) -> f64 {
    let f = factors7();
    let lam = table.lambda_slice();
    let tol = |m: u64, n: u64| 1e-9 * (1.0 + (lam[m as usize] * lam[n as usize]).abs());
    let mut worst_margin = 0.0f64;

    // every pair with m n <= 1e4
    for m in 1..=10_000u64 {
        for n in 1..=10_000 / m {
            let dev = table.verify_hecke_relation(f, m, n).unwrap();
            assert!(
                dev <= tol(m, n),
                "{label}: relation busts at ({m}, {n}): {dev:.3e}"
            );
            worst_margin = worst_margin.max(dev / tol(m, n));
        }
    }
    // 1e4 random pairs with m n <= 1e7
    let mut state = 0x5EEDu64;
    for _ in 0..10_000 {
        let (m, n) = random_pair(&mut state, 10_000_000);
        let dev = table.verify_hecke_relation(f, m, n).unwrap();
        assert!(
            dev <= tol(m, n),
            "{label}: relation busts at ({m}, {n}): {dev:.3e}"
        );
        worst_margin = worst_margin.max(dev / tol(m, n));
    }
    worst_margin
}

#[test]
fn criterion_01_hecke_relation_all_models() {
    // shared infrastructure out of the timed region
    let sato = sato7();
    let stress = stress7();

    let started = Instant::now();
    let mut worst = relation_scan(sato, "sato-tate");
    worst = worst.max(relation_scan(stress, "stress"));

    // third model: the file round trip, built end to end inside the timer
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("coeffs.txt");
    PrimeCoefficientSource::Stress {
        sign: SignRule::Alternating,
    }
    .write_file(&path, factors7().primes())
    .unwrap();
    let from_file = PrimeCoefficientSource::from_file(&path).unwrap();
    let table = CoefficientTable::build(&from_file, 10_000_000, factors7()).unwrap();
    worst = worst.max(relation_scan(&table, "file"));

    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "relation scans took {elapsed:?}, budget 30 s"
    );
    println!(
        "criterion 1: PASS, worst deviation at {:.3} of tolerance, {elapsed:?}",
        worst
    );
}

#[test]
fn criterion_02_majorant_prime_identity_and_partial_sums() {
    let started = Instant::now();
    for (label, table) in [("sato-tate", sato6()), ("stress", stress6())] {
        let lam = table.lambda_slice();
        let star = table.lambda_star_slice().expect("majorant built");
        for &p in factors6().primes().iter().take_while(|&&p| p <= 100_000) {
            let fourth = lam[p as usize].powi(4);
            let dev = (star[p as usize] - fourth).abs();
            assert!(
                dev <= 1e-9 * (1.0 + fourth),
                "{label}: lambda*({p}) = {} vs lambda({p})^4 = {fourth}",
                star[p as usize]
            );
        }
        let lab = Lab {
            factors: factors6(),
            coeffs: table,
            workers: WORKERS,
        };
        let report = bounds::verify_eq3(&lab, &GRID_MID).unwrap();
        for row in &report.rows {
            assert!(
                row.lhs <= row.rhs,
                "{label}: fourth-moment sum exceeds the majorant sum at x = {}",
                row.x
            );
        }
        assert_eq!(report.verdict, Verdict::Holds, "{label}");
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 120.0,
        "took {elapsed:?}, budget 2 min"
    );
    println!("criterion 2: PASS in {elapsed:?}");
}

#[test]
fn criterion_03_dickman_function() {
    let table = RhoTable::build(20.0).unwrap();
    // exactly 1 on [0, 1]
    for u in [0.0, 0.25, 0.5, 0.75, 1.0] {
        assert_eq!(table.eval(u).unwrap(), 1.0, "rho({u})");
    }
    // closed form at 2
    let rho2 = table.eval(2.0).unwrap();
    assert!(
        (rho2 - (1.0 - std::f64::consts::LN_2)).abs() <= 1e-9,
        "rho(2) = {rho2}"
    );
    // independent integrator at 3
    let oracle = common::rho_oracle(3.0, 1e-5);
    let rho3 = table.eval(3.0).unwrap();
    assert!(
        (rho3 - oracle[oracle.len() - 1]).abs() <= 1e-8,
        "rho(3) = {rho3} vs oracle {}",
        oracle[oracle.len() - 1]
    );
    // positive, strictly decreasing past u = 1
    let mut prev = table.eval(1.0).unwrap();
    let mut u = 1.05;
    while u <= 20.0 {
        let v = table.eval(u).unwrap();
        assert!(v > 0.0, "rho({u}) = {v} must stay positive");
        assert!(v < prev, "rho({u}) = {v} must decrease strictly");
        prev = v;
        u += 0.05;
    }
    println!("criterion 3: PASS, rho(20) = {prev:.3e}");
}

#[test]
fn criterion_04_smooth_count_cross_check() {
    let f = factors5();
    for x in [1_000u64, 10_000, 100_000] {
        for y in [10.0f64, 30.0, 100.0] {
            let a = psi_dfs(x, y, f).unwrap();
            let b = psi_scan(x, y, f).unwrap();
            assert_eq!(a, b, "psi({x}, {y})");
        }
    }
    assert_eq!(psi_dfs(100, 5.0, f).unwrap(), 34);
    println!("criterion 4: PASS");
}

#[test]
fn criterion_05_prime_sum_engine() {
    let f = factors5();
    let src = PrimeCoefficientSource::SatoTate { seed: 0 };
    let coeffs = CoefficientTable::build(&src, 100_000, f).unwrap();
    let weights: [MultiplicativeWeight; 3] = [
        weight_abs_mu(),
        weight_abs_lambda_mu(&coeffs),
        weight_abs_lambda_hk(&coeffs, 3),
    ];
    for w in &weights {
        // split identity against an independent direct accumulation
        for &x in &GRID_CAL {
            let (s1, s2, s3) = decompose_s_log(w, f, x, WORKERS).unwrap();
            let mut direct = 0.0f64;
            for n in 1..=x {
                direct += w.g(f, n);
            }
            let target = direct * (x as f64).ln();
            assert!(
                (s1 + s2 + s3 - target).abs() <= 1e-10 * target.abs(),
                "{}: S1+S2+S3 = {} vs S log x = {target} at x = {x}",
                w.descriptor,
                s1 + s2 + s3
            );
        }
        let a = estimate_a(w, f, &GRID_CAL).unwrap();
        let b = estimate_b(w, f).unwrap();
        if w.descriptor == "abs-lambda-mu" {
            assert_eq!(b, 0.0, "squarefree weights carry no prime-power mass");
        }
        let report = verify_lemma6(w, f, a, b, &GRID_CAL, WORKERS).unwrap();
        assert_eq!(report.verdict, Verdict::Holds, "{}", w.descriptor);
        for row in &report.rows {
            assert!(row.ratio <= 1.0, "{} at x = {}", w.descriptor, row.x);
        }
    }
    println!("criterion 5: PASS");
}

#[test]
fn criterion_06_unconditional_inequalities() {
    for (label, table) in [("sato-tate", sato6()), ("stress", stress6())] {
        let lab = Lab {
            factors: factors6(),
            coeffs: table,
            workers: WORKERS,
        };
        for k in [2u32, 3] {
            let (_, parts) = theorem_pipeline(&lab, &GRID_MID, k).unwrap();
            for p in &parts {
                assert!(
                    p.initial_lhs <= p.initial_holder,
                    "{label} k={k}: Holder bust at x = {}",
                    p.x
                );
                let residual = (p.range_direct - p.range_decomposed).abs();
                assert!(
                    residual <= 1e-10 * p.range_direct,
                    "{label} k={k}: decomposition identity off by {residual:.3e} at x = {}",
                    p.x
                );
            }
        }
        for kind in [
            bounds::Section6Kind::Primes,
            bounds::Section6Kind::Squarefull,
        ] {
            let (_, instances) = bounds::holder_section6(&lab, &GRID_MID, kind).unwrap();
            for inst in &instances {
                assert!(
                    inst.lhs <= inst.holder_majorant,
                    "{label} {kind:?}: Holder bust at x = {}",
                    inst.x
                );
            }
        }
        let ctx = WeightCtx {
            factors: factors6(),
            coeffs: Some(table),
        };
        for kind in [
            WeightKind::One,
            WeightKind::AbsMu,
            WeightKind::AbsLambda,
            WeightKind::AbsLambdaMu,
            WeightKind::AbsLambda4,
            WeightKind::LambdaStar,
            WeightKind::AbsLambdaH3,
        ] {
            let series = partial_sums(kind, &ctx, &GRID_MID, WORKERS).unwrap();
            for (i, &t) in series.checkpoints.iter().enumerate() {
                assert!(
                    series.s_values[i] <= t as f64 * series.l_values[i],
                    "{label} {}: S(t) > t L(t) at t = {t}",
                    kind.descriptor()
                );
            }
        }
    }
    println!("criterion 6: PASS");
}

#[test]
fn criterion_07_calibrated_asymptotics() {
    let mut violations: Vec<String> = Vec::new();
    let mut theorem1_budget = None;

    for (label, table) in [("sato-tate", sato7()), ("stress", stress7())] {
        let lab = Lab {
            factors: factors7(),
            coeffs: table,
            workers: WORKERS,
        };
        let mut reports: Vec<BoundReport> = vec![
            bounds::verify_lemma1(&lab, &GRID_FULL).unwrap(),
            bounds::verify_lemma2(&lab, &GRID_FULL, LEMMA2_EPSILON)
                .unwrap()
                .0,
            bounds::verify_lemma3(&lab, &GRID_FULL).unwrap(),
            bounds::verify_lemma4(&lab, &GRID_FULL).unwrap(),
            bounds::verify_lemma5(&lab, &GRID_FULL).unwrap().0,
            bounds::verify_lemma7(&lab, &GRID_FULL).unwrap(),
            bounds::verify_lemma8(&lab, &GRID_FULL).unwrap(),
        ];
        let started = Instant::now();
        let (t1, _) = theorem_pipeline(&lab, &GRID_FULL, 2).unwrap();
        let t1_elapsed = started.elapsed();
        if label == "sato-tate" {
            theorem1_budget = Some(t1_elapsed);
        }
        reports.push(t1);
        reports.push(theorem_pipeline(&lab, &GRID_FULL, 3).unwrap().0);

        for report in &reports {
            let cal = report
                .rows
                .iter()
                .filter(|r| r.x <= 100_000)
                .map(|r| r.ratio)
                .fold(f64::MIN, f64::max);
            for row in report.rows.iter().filter(|r| r.x > 100_000) {
                if row.ratio > 2.0 * cal {
                    violations.push(format!(
                        "{label} {} at x = {}: ratio {:.4} > 2 x {cal:.4}",
                        report.claim_id, row.x, row.ratio
                    ));
                }
            }
        }
    }

    let t1_time = theorem1_budget.expect("theorem1 timed");
    assert!(
        t1_time.as_secs_f64() < 300.0,
        "theorem1 full run at 1e7 took {t1_time:?}, budget 5 min"
    );

    // The stress model is built to break Ramanujan on every prime; its
    // fourth moment over rough integers grows polynomially (the prime
    // terms alone contribute sum p^{7/16 - 1} ~ x^{7/16}/log x), so no
    // (log x)^2 envelope calibrates it at 1e7. Any entry here is a real
    // finding, not numerical noise.
    assert!(
        violations.is_empty(),
        "calibration discipline violated:\n  {}",
        violations.join("\n  ")
    );
    println!("criterion 7: PASS, theorem1 at 1e7 in {t1_time:?}");
}

#[test]
fn criterion_08_counting_baselines() {
    let f = factors6();
    let x = 1_000_000u64;
    let xf = x as f64;

    let (sqfree, _) = f.count_set(x, SetKind::SquarefreeMu).unwrap();
    assert_eq!(sqfree, 607_926);

    for k in [2u32, 3] {
        let (count, _) = f.count_set(x, SetKind::KFree(k)).unwrap();
        let main = xf / zeta(k as f64).unwrap();
        let dev = (count as f64 - main).abs();
        let allowed = 5.0 * xf.powf(1.0 / k as f64);
        assert!(
            dev <= allowed,
            "{k}-free count off by {dev:.1}, allowed {allowed:.1}"
        );
    }

    let (squarefull, _) = f.count_set(x, SetKind::Squarefull).unwrap();
    let main = zeta(1.5).unwrap() / zeta(3.0).unwrap() * xf.sqrt();
    let dev = (squarefull as f64 - main).abs();
    let allowed = 5.0 * xf.powf(1.0 / 3.0);
    assert!(
        dev <= allowed,
        "squarefull count off by {dev:.1}, allowed {allowed:.1}"
    );
    println!("criterion 8: PASS");
}

#[test]
fn criterion_09_density_ratio_decay() {
    let lab = Lab {
        factors: factors7(),
        coeffs: sato7(),
        workers: WORKERS,
    };
    let (_, rows) =
        bounds::remark1_density(&lab, &[10_000, 100_000, 1_000_000, 10_000_000]).unwrap();
    for pair in rows.windows(2) {
        assert!(
            pair[1].ratio < pair[0].ratio,
            "R must decrease strictly: R({}) = {:.6} vs R({}) = {:.6}",
            pair[0].x,
            pair[0].ratio,
            pair[1].x,
            pair[1].ratio
        );
    }

    // the constant-eigenvalue source keeps the ratio pinned at 1
    let f = factors5();
    let trivial = PrimeCoefficientSource::trivial(f.primes());
    let table = CoefficientTable::build(&trivial, 100_000, f).unwrap();
    let lab_trivial = Lab {
        factors: f,
        coeffs: &table,
        workers: WORKERS,
    };
    let (_, rows) = bounds::remark1_density(&lab_trivial, &GRID_CAL).unwrap();
    for row in &rows {
        assert_eq!(row.ratio.to_bits(), 1.0f64.to_bits(), "R({}) != 1", row.x);
    }
    println!("criterion 9: PASS");
}

/// Every CSV the toolkit can emit, rendered at the given worker count.
fn all_csvs(workers: usize) -> Vec<(String, String)> {
    let x_max = 100_000u64;
    let factors = FactorTable::build(x_max, workers).unwrap();
    let src = PrimeCoefficientSource::SatoTate { seed: 42 };
    let mut coeffs = CoefficientTable::build(&src, x_max, &factors).unwrap();
    coeffs.build_lambda_star(&factors).unwrap();
    let lab = Lab {
        factors: &factors,
        coeffs: &coeffs,
        workers,
    };
    let grid = &GRID_CAL;
    let mut out: Vec<(String, String)> = Vec::new();

    out.push((
        "lemma1".into(),
        bounds::verify_lemma1(&lab, grid).unwrap().to_csv(),
    ));
    out.push((
        "lemma2".into(),
        bounds::verify_lemma2(&lab, grid, LEMMA2_EPSILON)
            .unwrap()
            .0
            .to_csv(),
    ));
    out.push((
        "lemma3".into(),
        bounds::verify_lemma3(&lab, grid).unwrap().to_csv(),
    ));
    out.push((
        "lemma4".into(),
        bounds::verify_lemma4(&lab, grid).unwrap().to_csv(),
    ));
    out.push((
        "lemma5".into(),
        bounds::verify_lemma5(&lab, grid).unwrap().0.to_csv(),
    ));
    let weights = [
        weight_abs_mu(),
        weight_abs_lambda_mu(&coeffs),
        weight_abs_lambda_hk(&coeffs, 3),
    ];
    for w in &weights {
        let a = estimate_a(w, &factors, grid).unwrap();
        let b = estimate_b(w, &factors).unwrap();
        out.push((
            format!("lemma6-{}", w.descriptor),
            verify_lemma6(w, &factors, a, b, grid, workers)
                .unwrap()
                .to_csv(),
        ));
    }
    out.push((
        "lemma7".into(),
        bounds::verify_lemma7(&lab, grid).unwrap().to_csv(),
    ));
    out.push((
        "lemma8".into(),
        bounds::verify_lemma8(&lab, grid).unwrap().to_csv(),
    ));
    out.push((
        "theorem1".into(),
        theorem_pipeline(&lab, grid, 2).unwrap().0.to_csv(),
    ));
    out.push((
        "theorem2".into(),
        theorem_pipeline(&lab, grid, 3).unwrap().0.to_csv(),
    ));
    for kind in [
        bounds::Section6Kind::Primes,
        bounds::Section6Kind::Squarefull,
    ] {
        let (r, _) = bounds::holder_section6(&lab, grid, kind).unwrap();
        out.push((r.claim_id.clone(), r.to_csv()));
    }
    out.push((
        "remark1".into(),
        bounds::remark1_density(&lab, grid).unwrap().0.to_csv(),
    ));
    out.push((
        "eq3".into(),
        bounds::verify_eq3(&lab, grid).unwrap().to_csv(),
    ));

    let ctx = WeightCtx {
        factors: &factors,
        coeffs: Some(&coeffs),
    };
    for kind in [
        WeightKind::One,
        WeightKind::AbsMu,
        WeightKind::AbsLambda,
        WeightKind::AbsLambdaMu,
        WeightKind::AbsLambda4,
        WeightKind::LambdaStar,
        WeightKind::AbsLambdaH3,
    ] {
        let series = partial_sums(kind, &ctx, grid, workers).unwrap();
        out.push((format!("sums-{}", kind.descriptor()), series.to_csv()));
    }
    out
}

#[test]
fn criterion_10_worker_count_determinism() {
    let one = all_csvs(1);
    let many = all_csvs(6);
    assert_eq!(one.len(), many.len());
    for ((name_a, csv_a), (name_b, csv_b)) in one.iter().zip(many.iter()) {
        assert_eq!(name_a, name_b);
        assert_eq!(
            csv_a, csv_b,
            "{name_a}: bytes differ between 1 and 6 workers"
        );
    }
    println!("criterion 10: PASS, {} artifacts byte-identical", one.len());
}

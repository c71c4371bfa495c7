//! The fourth-moment majorant lambda*(n): nonnegative coefficients from
//! the degree-16 local factor, agreeing with lambda(p)^4 at primes and
//! dominating the partial sums of |lambda(n)|^4.

use hecke_sum_lab::bounds::{eq3_coefficientwise_violations, verify_eq3, Lab};
use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource};
use hecke_sum_lab::sieve::FactorTable;

fn main() -> Result<(), hecke_sum_lab::Error> {
    let x_max = 100_000;
    let factors = FactorTable::build(x_max, 0)?;
    let source = PrimeCoefficientSource::SatoTate { seed: 1 };
    let mut table = CoefficientTable::build(&source, x_max, &factors)?;
    table.build_lambda_star(&factors)?;

    let lam = table.lambda_slice();
    let star = table.lambda_star_slice().unwrap();
    let mut worst = 0.0f64;
    for &p in factors.primes() {
        let fourth = lam[p as usize].powi(4);
        worst = worst.max((star[p as usize] - fourth).abs() / (1.0 + fourth));
    }
    println!("max relative |lambda*(p) - lambda(p)^4| over p <= {x_max}: {worst:.3e}");

    let lab = Lab {
        factors: &factors,
        coeffs: &table,
        workers: 0,
    };
    let report = verify_eq3(&lab, &[1_000, 10_000, 100_000])?;
    for row in &report.rows {
        println!(
            "x={:>6}: sum lambda^4 = {:.6e} <= sum lambda* = {:.6e} (ratio {:.4})",
            row.x, row.lhs, row.rhs, row.ratio
        );
    }
    println!("verdict: {:?}", report.verdict);

    // at prime powers p^a, a >= 2, the majorant need not dominate
    // coefficientwise, but empirically it does on this range
    let (checked, violations) = eq3_coefficientwise_violations(&lab)?;
    println!("coefficientwise at prime powers: {violations} exceedances in {checked}");
    Ok(())
}

//! Smooth counting and the dyadic slice machinery: psi(x, y) by prime
//! descent and by table scan, then the slice decomposition behind the
//! smooth harmonic bound at a = 57/64.

use hecke_sum_lab::bounds::{frozen_c1, lemma1_slices, verify_lemma1, Lab, LEMMA1_A};
use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource};
use hecke_sum_lab::sieve::FactorTable;
use hecke_sum_lab::smooth::{psi_dfs, psi_scan, script_l};

fn main() -> Result<(), hecke_sum_lab::Error> {
    let x_max = 100_000;
    let factors = FactorTable::build(x_max, 0)?;

    for &(x, y) in &[(100u64, 5.0f64), (10_000, 30.0), (100_000, 100.0)] {
        let a = psi_dfs(x, y, &factors)?;
        let b = psi_scan(x, y, &factors)?;
        assert_eq!(a, b);
        println!("psi({x}, {y}) = {a}  (descent == scan)");
    }

    // coefficients do not matter for the smooth side; any table works
    let source = PrimeCoefficientSource::SatoTate { seed: 0 };
    let coeffs = CoefficientTable::build(&source, x_max, &factors)?;
    let lab = Lab {
        factors: &factors,
        coeffs: &coeffs,
        workers: 0,
    };

    println!(
        "\nsmoothness cut L(x) = (log x)^2: L(1e5) = {:.3}",
        script_l(1e5)
    );
    for &x in &[1_000u64, 100_000] {
        let d = lemma1_slices(&lab, x, LEMMA1_A)?;
        println!(
            "x={x}: partial-summation residual {:.2e}, slice bound / quadrature >= {:.3}, coverage {:.3}",
            d.identity_residual, d.chain_domination_min, d.coverage_ratio
        );
    }

    let report = verify_lemma1(&lab, &[1_000, 10_000, 100_000])?;
    println!(
        "\nsmooth harmonic sum vs C1 x^(-a) exp-term majorant (C1 = {:.6}):",
        frozen_c1(&factors)?
    );
    for row in &report.rows {
        println!("  x={:>6}: ratio {:.4}", row.x, row.ratio);
    }
    println!(
        "verdict: {:?} (calibrated on the two smallest grid points)",
        report.verdict
    );
    Ok(())
}

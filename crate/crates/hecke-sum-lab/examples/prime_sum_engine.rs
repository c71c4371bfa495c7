//! The generic prime-sum engine: split S(x) log x into log(x/n) mass,
//! exact-prime mass, and prime-power mass; estimate the hypothesis
//! constants A and B from the grid; certify the resulting bound.

use hecke_sum_lab::bounds::{self, Lab};
use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource};
use hecke_sum_lab::lemma6::{
    decompose_s_log, estimate_a, estimate_b, verify_lemma6, weight_abs_lambda_hk,
    weight_abs_lambda_mu, weight_abs_mu,
};
use hecke_sum_lab::sieve::FactorTable;

fn main() -> Result<(), hecke_sum_lab::Error> {
    let x_max = 100_000;
    let grid = [1_000u64, 10_000, 100_000];
    let factors = FactorTable::build(x_max, 0)?;
    let source = PrimeCoefficientSource::SatoTate { seed: 0 };
    let coeffs = CoefficientTable::build(&source, x_max, &factors)?;

    let weights = [
        weight_abs_mu(),
        weight_abs_lambda_mu(&coeffs),
        weight_abs_lambda_hk(&coeffs, 3),
    ];
    for w in &weights {
        let (s1, s2, s3) = decompose_s_log(w, &factors, x_max, 0)?;
        println!("weight {}:", w.descriptor);
        println!("  S log x = {:.6e} + {:.6e} + {:.6e}", s1, s2, s3);

        let a = estimate_a(w, &factors, &grid)?;
        let b = estimate_b(w, &factors)?;
        println!("  grid-certified A = {a:.6}, prime-power mass B = {b:.6}");

        let report = verify_lemma6(w, &factors, a, b, &grid, 0)?;
        println!(
            "  S(x) <= (A h1 + B h2 + 1) (x/log x) L(x): {:?}",
            report.verdict
        );
    }

    // the two prime sums the engine's hypotheses compress
    let lab = Lab {
        factors: &factors,
        coeffs: &coeffs,
        workers: 0,
    };
    let r7 = bounds::verify_lemma7(&lab, &grid)?;
    println!(
        "\nsum of |lambda(p)| log p vs x sqrt(log x): {:?} (A = {:.4})",
        r7.verdict, r7.calibrated_constant
    );
    let r8 = bounds::verify_lemma8(&lab, &grid)?;
    println!(
        "squarefree |lambda| count vs (x/sqrt(log x)) L(x): {:?}",
        r8.verdict
    );
    Ok(())
}

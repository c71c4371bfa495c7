//! Harmonic sums over rough integers (all prime factors above the cut
//! L(x) = (log x)^2): the smooth eigenvalue bound, the rough harmonic
//! bound, the fourth-moment analogue, and the threshold split.

use hecke_sum_lab::bounds::{self, Lab, LEMMA2_EPSILON};
use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource, SignRule};
use hecke_sum_lab::sieve::FactorTable;

fn main() -> Result<(), hecke_sum_lab::Error> {
    let x_max = 100_000;
    let grid = [1_000u64, 10_000, 100_000];
    let factors = FactorTable::build(x_max, 0)?;

    for source in [
        PrimeCoefficientSource::SatoTate { seed: 0 },
        PrimeCoefficientSource::Stress {
            sign: SignRule::AllPlus,
        },
    ] {
        let coeffs = CoefficientTable::build(&source, x_max, &factors)?;
        let lab = Lab {
            factors: &factors,
            coeffs: &coeffs,
            workers: 0,
        };
        println!("model {}", source.descriptor());

        let (r2, d2) = bounds::verify_lemma2(&lab, &grid, LEMMA2_EPSILON)?;
        println!(
            "  smooth |lambda mu|/n vs x^(-25/64+eps) exp-term: {:?}, envelope violations {}/{}",
            r2.verdict, d2.envelope_violations, d2.checked
        );

        let r3 = bounds::verify_lemma3(&lab, &grid)?;
        println!(
            "  rough squarefree 1/n vs 1 + log x: {:?} (max ratio {:.4})",
            r3.verdict, r3.calibrated_constant
        );

        let r4 = bounds::verify_lemma4(&lab, &grid)?;
        println!(
            "  rough |lambda|^4/n vs (log x)^2: {:?} (max ratio {:.4})",
            r4.verdict, r4.calibrated_constant
        );

        let (r5, details) = bounds::verify_lemma5(&lab, &grid)?;
        println!("  threshold split S1(M) + S2(M): {:?}", r5.verdict);
        for (x, d) in grid.iter().zip(&details) {
            println!(
            "    x={x}: scan argmin M = {:.2}, closed form (3b/a)^(1/4) = {:.2}, argmin/(log x)^(1/4) = {:.2}",
                d.scan_argmin, d.closed_form_min, d.ratio_to_quarter_log
            );
        }
        println!();
    }
    Ok(())
}

//! Worker-count invariance: partial sums reduce over fixed 2^16 chunks
//! with compensated accumulation, so any thread count produces the same
//! bits. Demonstrated on the weighted series CSV.

use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource};
use hecke_sum_lab::parallel::effective_workers;
use hecke_sum_lab::sieve::FactorTable;
use hecke_sum_lab::sums::{partial_sums, WeightCtx, WeightKind};

fn main() -> Result<(), hecke_sum_lab::Error> {
    let x_max = 1_000_000;
    let checkpoints = [1_000u64, 10_000, 100_000, 1_000_000];
    println!("available workers: {}", effective_workers(0));

    let factors = FactorTable::build(x_max, 0)?;
    let source = PrimeCoefficientSource::SatoTate { seed: 3 };
    let coeffs = CoefficientTable::build(&source, x_max, &factors)?;
    let ctx = WeightCtx {
        factors: &factors,
        coeffs: Some(&coeffs),
    };

    let mut csvs = Vec::new();
    for workers in [1usize, 2, 5, 8] {
        let series = partial_sums(WeightKind::AbsLambda4, &ctx, &checkpoints, workers)?;
        csvs.push((workers, series.to_csv()));
    }
    let (_, reference) = &csvs[0];
    for (workers, csv) in &csvs {
        assert_eq!(csv, reference, "worker count must not change any bit");
        println!("workers = {workers}: CSV identical ({} bytes)", csv.len());
    }
    print!("\n{reference}");
    Ok(())
}

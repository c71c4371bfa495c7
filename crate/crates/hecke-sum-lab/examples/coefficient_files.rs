//! The prime-coefficient file format: write a table, read it back,
//! confirm the round trip reproduces the model exactly, and show the
//! partial-sum series the weights produce.

use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource, SignRule};
use hecke_sum_lab::sieve::FactorTable;
use hecke_sum_lab::sums::{partial_sums, WeightCtx, WeightKind};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let x_max = 10_000;
    let factors = FactorTable::build(x_max, 0)?;
    let dir = std::env::temp_dir().join("hecke-sum-lab-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("coeffs.txt");

    let source = PrimeCoefficientSource::Stress {
        sign: SignRule::Alternating,
    };
    source.write_file(&path, factors.primes())?;
    println!(
        "wrote {} ({} primes)",
        path.display(),
        factors.primes().len()
    );

    let reread = PrimeCoefficientSource::from_file(&path)?;
    let a = CoefficientTable::build(&source, x_max, &factors)?;
    let b = CoefficientTable::build(&reread, x_max, &factors)?;
    assert_eq!(
        a.lambda_slice(),
        b.lambda_slice(),
        "round trip must be exact"
    );
    println!("round trip: lambda tables identical on 1..={x_max}");

    let ctx = WeightCtx {
        factors: &factors,
        coeffs: Some(&b),
    };
    let series = partial_sums(WeightKind::AbsLambdaMu, &ctx, &[100, 1_000, 10_000], 0)?;
    print!("{}", series.to_csv());
    Ok(())
}

//! Eigenvalue sums over sparse sets by Holder against the majorant:
//! primes and squarefull numbers, then the density ratio
//! R(x) = sum |lambda mu| / sum |mu| and its slow decay.

use hecke_sum_lab::bounds::{holder_section6, remark1_density, Lab, Section6Kind};
use hecke_sum_lab::hecke::{CoefficientTable, PrimeCoefficientSource};
use hecke_sum_lab::sieve::{FactorTable, SetKind};

fn main() -> Result<(), hecke_sum_lab::Error> {
    let x_max = 1_000_000;
    let grid = [10_000u64, 100_000, 1_000_000];
    let factors = FactorTable::build(x_max, 0)?;
    let source = PrimeCoefficientSource::SatoTate { seed: 0 };
    let mut coeffs = CoefficientTable::build(&source, x_max, &factors)?;
    coeffs.build_lambda_star(&factors)?;
    let lab = Lab {
        factors: &factors,
        coeffs: &coeffs,
        workers: 0,
    };

    for kind in [Section6Kind::Primes, Section6Kind::Squarefull] {
        let (report, instances) = holder_section6(&lab, &grid, kind)?;
        println!("{}:", report.claim_id);
        for inst in &instances {
            println!(
                "  x={:>7}: sum |lambda| = {:.4e} over {} elements, Holder majorant {:.4e}",
                inst.x, inst.lhs, inst.set_count, inst.holder_majorant
            );
        }
        println!("  vs printed envelope: {:?}\n", report.verdict);
    }

    let (count, dev) = factors.count_set(x_max, SetKind::Squarefull)?;
    println!(
        "squarefull count to 1e6: {count} (deviation {dev:+.1} from zeta(3/2)/zeta(3) sqrt(x))\n"
    );

    let (_, rows) = remark1_density(&lab, &grid)?;
    println!("density ratio R(x), decreasing like (loglog x)^(5/4)/sqrt(log x):");
    for r in &rows {
        println!(
            "  x={:>7}: R = {:.6}, envelope {:.6}",
            r.x, r.ratio, r.envelope
        );
    }
    Ok(())
}

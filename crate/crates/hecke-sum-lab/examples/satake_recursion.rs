//! Build eigenvalue tables under each prime model and check the
//! multiplicative structure: the prime-power recursion, the Hecke
//! relation, and the Satake parametrization at a few primes.

use num_complex::Complex64;

use hecke_sum_lab::hecke::{
    prime_power_coeffs, CoefficientTable, PrimeCoefficientSource, SignRule,
};
use hecke_sum_lab::sieve::FactorTable;

fn main() -> Result<(), hecke_sum_lab::Error> {
    let x_max = 100_000;
    let factors = FactorTable::build(x_max, 0)?;

    let sources = [
        PrimeCoefficientSource::SatoTate { seed: 7 },
        PrimeCoefficientSource::Stress {
            sign: SignRule::AllPlus,
        },
        PrimeCoefficientSource::Stress {
            sign: SignRule::Alternating,
        },
    ];

    for source in &sources {
        let table = CoefficientTable::build(source, x_max, &factors)?;
        println!("model {}", source.descriptor());

        // lambda(p^nu) equals the symmetric function
        // sum_{j=0}^{nu} alpha^{nu-j} beta^j of the Satake pair.
        for &p in &[2u64, 3, 101] {
            let lam_p = table.lambda_slice()[p as usize];
            let disc = Complex64::new(lam_p * lam_p - 4.0, 0.0).sqrt();
            let alpha = (Complex64::new(lam_p, 0.0) + disc) / 2.0;
            let beta = (Complex64::new(lam_p, 0.0) - disc) / 2.0;
            let coeffs = prime_power_coeffs(lam_p, 4);
            print!(
                "  p={p}: lambda_p={lam_p:+.6} satake |alpha|={:.6}",
                alpha.norm()
            );
            for nu in 1..=4u32 {
                let mut sym = Complex64::new(0.0, 0.0);
                for j in 0..=nu {
                    sym += alpha.powu(nu - j) * beta.powu(j);
                }
                assert!(
                    (sym.re - coeffs[nu as usize]).abs() <= 1e-9 * (1.0 + sym.re.abs()),
                    "recursion disagrees with Satake at p^{nu}"
                );
            }
            println!("  (recursion == symmetric functions to 1e-9)");
        }

        let mut worst = 0.0f64;
        for m in 1..=100u64 {
            for n in 1..=(x_max / m).min(100) {
                worst = worst.max(table.verify_hecke_relation(&factors, m, n)?);
            }
        }
        println!("  worst Hecke relation deviation on m,n <= 100: {worst:.3e}\n");
    }
    Ok(())
}

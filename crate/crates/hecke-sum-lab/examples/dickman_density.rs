//! Dickman's function as the smooth-number density limit: tabulate
//! rho(u) and compare against psi(x, x^(1/u)) / x at x = 10^6.

use hecke_sum_lab::sieve::FactorTable;
use hecke_sum_lab::smooth::{psi_dfs, RhoTable};

fn main() -> Result<(), hecke_sum_lab::Error> {
    let rho = RhoTable::build(10.0)?;
    println!("rho(1) = {}", rho.eval(1.0)?);
    println!(
        "rho(2) = {:.12} (1 - ln 2 = {:.12})",
        rho.eval(2.0)?,
        1.0 - 2.0f64.ln()
    );
    println!("rho(5) = {:.6e}", rho.eval(5.0)?);

    let x = 1_000_000u64;
    let factors = FactorTable::build(x, 0)?;
    println!("\n  u      rho(u)      psi(x, x^(1/u))/x    @ x = 1e6");
    for &u in &[1.5f64, 2.0, 2.5, 3.0] {
        let y = (x as f64).powf(1.0 / u);
        let count = psi_dfs(x, y, &factors)?;
        println!(
            "  {u:.1}   {:.6}    {:.6}",
            rho.eval(u)?,
            count as f64 / x as f64
        );
    }
    println!("\nthe empirical ratio exceeds rho(u): the second-order term");
    println!("(1 - gamma) rho(u - 1) / log x is positive at this scale");
    Ok(())
}

//! End-to-end pipelines for the two headline mean value bounds on
//! sum |lambda(n)| h_k(n) (h_k the k-free indicator; k = 2 is the
//! squarefree case). Each grid point is assembled in four steps:
//!
//!   (i)   initial segment n <= L(x) and its Holder majorant,
//!   (ii)  exact smooth x rough bijection for the range (L, x],
//!   (iii) the weighted prime bound factor (A sqrt(log x) + B + 1) x/log x,
//!   (iv)  the reported row: sum_{n<=x} |lambda(n)| h_k(n) against
//!         x (loglog x)^{5/4} / sqrt(log x).

use crate::bounds::Lab;
use crate::error::{Error, Result};
use crate::hecke::KIM_SARNAK;
use crate::lemma6::{envelope_alpha_tail, estimate_a, weight_abs_lambda_mu};
use crate::parallel::{sum_indexed, Kahan};
use crate::report::BoundReport;
use crate::sieve::FactorTable;
use crate::smooth::script_l;

/// Truncation point for the prime power tail and the comparison series.
pub const TAIL_TRUNCATION: u64 = 1_000_000;

/// e^e; below this loglog x <= 1 and the envelope degenerates.
pub fn e_to_e() -> f64 {
    std::f64::consts::E.exp()
}

/// One grid point of the pipeline, all four steps.
#[derive(Clone, Copy, Debug)]
pub struct TheoremParts {
    pub x: u64,
    /// sum_{n<=L} |lambda(n)| h_k(n) / n
    pub initial_lhs: f64,
    /// (sum_{n<=L} |lambda|^4/n)^{1/4} (sum_{n<=L} 1/n)^{3/4}
    pub initial_holder: f64,
    /// sum_{L<n<=x} |lambda(n)| h_k(n) / n, direct scan
    pub range_direct: f64,
    /// the same sum through the smooth x rough bijection
    pub range_decomposed: f64,
    /// S(x) = sum_{n<=x} |lambda(n)| h_k(n)
    pub weighted_count: f64,
    /// (A sqrt(log x) + B + 1) (x/log x) L(x), the applied prime bound
    pub prime_bound_rhs: f64,
    /// x (loglog x)^{5/4} / sqrt(log x)
    pub envelope: f64,
}

/// Prime power tail under the eigenvalue envelope
/// |lambda(p^alpha)| <= (alpha+1) p^{7 alpha/64}: the double sum over
/// p <= 1e6, 2 <= alpha <= k-1 of (alpha+1) p^{7 alpha/64} alpha log p / p^alpha,
/// plus an integral tail, compared against the convergent series
/// sum_p 1/(p^{7/8}(p^{7/8}-1)) scaled by the chain constant 16384/log 2.
#[derive(Clone, Copy, Debug)]
pub struct PrimePowerTail {
    pub truncated: f64,
    pub tail_bound: f64,
    /// truncated + tail_bound: the finite B fed to the pipeline
    pub b_value: f64,
    /// sum_p 1/(p^{7/8}(p^{7/8}-1)), truncated + integral tail
    pub chain_series: f64,
    /// 16384/log 2, the constant collected along the chain
    pub chain_constant: f64,
}

impl PrimePowerTail {
    /// The chain's closed upper bound; b_value must stay below it.
    pub fn chain_bound(&self) -> f64 {
        self.chain_constant * self.chain_series
    }
}

/// sum_p 1/(p^{7/8}(p^{7/8}-1)) truncated at `cutoff` plus the integral
/// tail int dt/(t^{7/4} log t); stable to 1e-6 against larger cutoffs.
pub fn chain_series(factors: &FactorTable, cutoff: u64) -> f64 {
    let mut acc = Kahan::new();
    for &p in factors.primes() {
        if p > cutoff {
            break;
        }
        let q = (p as f64).powf(0.875);
        acc.add(1.0 / (q * (q - 1.0)));
    }
    // tail: substitute t = N e^u, integrand e^{-3u/4} N^{-3/4} / (log N + u)
    let n0 = cutoff as f64;
    let ln_n0 = n0.ln();
    let f = |u: f64| (-0.75 * u).exp() / (ln_n0 + u);
    let mut tail = 0.0;
    let h = 0.01;
    let steps = 8000; // e^{-60} leaves nothing behind
    for i in 0..steps {
        let u = i as f64 * h;
        tail += h / 6.0 * (f(u) + 4.0 * f(u + 0.5 * h) + f(u + h));
    }
    acc.value() + tail * n0.powf(-0.75)
}

/// The enveloped prime power mass for exponent range 2..=k-1.
pub fn prime_power_tail(factors: &FactorTable, k: u32) -> Result<PrimePowerTail> {
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    let cutoff = TAIL_TRUNCATION.min(factors.x_max());
    let mut acc = Kahan::new();
    for &p in factors.primes() {
        if p > cutoff {
            break;
        }
        let pf = p as f64;
        let lp = pf.ln();
        for alpha in 2..=k.saturating_sub(1) {
            let a = alpha as f64;
            acc.add((a + 1.0) * pf.powf(KIM_SARNAK * a) * a * lp / pf.powi(alpha as i32));
        }
    }
    let mut tail = 0.0;
    if k >= 3 {
        for alpha in 2..=(k - 1).min(64) {
            tail += envelope_alpha_tail(alpha, cutoff as f64);
        }
    }
    Ok(PrimePowerTail {
        truncated: acc.value(),
        tail_bound: tail,
        b_value: acc.value() + tail,
        chain_series: chain_series(factors, cutoff),
        chain_constant: 16384.0 / std::f64::consts::LN_2,
    })
}

/// h_k(n) as a 0/1 weight; alpha-free chain walk.
#[inline]
fn k_free(factors: &FactorTable, n: u64, k: u32) -> bool {
    let mut m = n;
    while m > 1 {
        let p = factors.spf(m).unwrap_or(u64::MAX);
        let mut a = 0u32;
        while m % p == 0 {
            m /= p;
            a += 1;
        }
        if a > k - 1 {
            return false;
        }
    }
    true
}

fn parts_at(lab: &Lab, x: u64, k: u32, a_constant: f64, b_value: f64) -> Result<TheoremParts> {
    let xf = x as f64;
    if xf <= e_to_e() {
        return Err(Error::domain(format!(
            "x = {x} is at or below e^e; loglog envelope degenerates"
        )));
    }
    let l = script_l(xf);
    let lam = lab.coeffs.lambda_slice();
    let factors = lab.factors;
    let weight = |n: u64| -> f64 {
        if k_free(factors, n, k) {
            lam[n as usize].abs()
        } else {
            0.0
        }
    };

    // (i) initial segment and the Holder majorant
    // sum |lambda|/n <= (sum |lambda|^4/n)^{1/4} (sum 1/n)^{3/4} on n <= L
    let l_floor = l.floor() as u64;
    let initial_lhs = sum_indexed(1, l_floor + 1, lab.workers, |n| weight(n) / n as f64);
    let fourth = sum_indexed(1, l_floor + 1, lab.workers, |n| {
        let v = lam[n as usize];
        v * v * v * v / n as f64
    });
    let harmonic = sum_indexed(1, l_floor + 1, lab.workers, |n| 1.0 / n as f64);
    let initial_holder = fourth.powf(0.25) * harmonic.powf(0.75);

    // (ii) direct range sum over (L, x]
    let range_direct = sum_indexed(l_floor + 1, x + 1, lab.workers, |n| {
        if n as f64 > l {
            weight(n) / n as f64
        } else {
            0.0
        }
    });

    // (ii) decomposed: prefix sums over the rough k-free part, then a DFS
    // over the smooth squarefree-free... smooth k-free part m1. For m1 with
    // smooth part of n: n = m1 m2, P^+(m1) <= L < P^-(m2), both k-free.
    // R[t] = sum_{m2 <= t rough k-free} |lambda(m2)|/m2 including m2 = 1.
    let mut rough_prefix = vec![0.0f64; x as usize + 1];
    {
        let mut run = Kahan::new();
        for n in 1..=x {
            let rough = n == 1 || factors.p_minus(n)? as f64 > l;
            if rough && k_free(factors, n, k) {
                run.add(lam[n as usize].abs() / n as f64);
            }
            rough_prefix[n as usize] = run.value();
        }
    }
    let mut decomposed = Kahan::new();
    {
        // DFS over primes <= L with exponents 0..k-1, m1 <= x
        let primes: Vec<u64> = factors
            .primes()
            .iter()
            .copied()
            .take_while(|&p| p as f64 <= l)
            .collect();
        fn rec(
            m1: u64,
            wm1: f64,
            x: u64,
            l: f64,
            k: u32,
            primes: &[u64],
            lam: &[f64],
            prefix: &[f64],
            out: &mut Kahan,
        ) {
            match primes.split_last() {
                None => {
                    let hi = prefix[(x / m1) as usize];
                    let lo = prefix[(l / m1 as f64).floor() as usize];
                    out.add(wm1 / m1 as f64 * (hi - lo));
                }
                Some((&p, rest)) => {
                    let mut q = 1u64;
                    for alpha in 0..k {
                        let weighted = if alpha == 0 {
                            wm1
                        } else {
                            lam[q as usize].abs() * wm1
                        };
                        rec(m1 * q, weighted, x, l, k, rest, lam, prefix, out);
                        match q.checked_mul(p) {
                            Some(next) if m1 <= x / next => q = next,
                            _ => break,
                        }
                    }
                }
            }
        }
        rec(
            1,
            1.0,
            x,
            l,
            k,
            &primes,
            lam,
            &rough_prefix,
            &mut decomposed,
        );
    }

    // (iii) the weighted prime bound factor applied at x
    let weighted_count = sum_indexed(1, x + 1, lab.workers, &weight);
    let l_full = initial_lhs + range_direct;
    let prime_bound_rhs = (a_constant * xf.ln().sqrt() + b_value + 1.0) * xf / xf.ln() * l_full;

    // (iv) printed envelope
    let envelope = xf * xf.ln().ln().powf(1.25) / xf.ln().sqrt();

    Ok(TheoremParts {
        x,
        initial_lhs,
        initial_holder,
        range_direct,
        range_decomposed: decomposed.value(),
        weighted_count,
        prime_bound_rhs,
        envelope,
    })
}

/// Run the pipeline for weight |lambda| h_k over the grid.
pub fn theorem_pipeline(
    lab: &Lab,
    grid: &[u64],
    k: u32,
) -> Result<(BoundReport, Vec<TheoremParts>)> {
    if k < 2 {
        return Err(Error::domain("k must be at least 2"));
    }
    let claim = if k == 2 { "theorem1" } else { "theorem2" };
    // A for the prime bound: grid maximum of sum_{p<=x}|lambda(p)| log p
    // over x sqrt(log x); mu and h_k are invisible at primes.
    let w = weight_abs_lambda_mu(lab.coeffs);
    let a_constant = estimate_a(&w, lab.factors, grid)?;
    let b_value = if k == 2 {
        0.0
    } else {
        prime_power_tail(lab.factors, k)?.b_value
    };
    let mut rows = Vec::new();
    let mut parts = Vec::new();
    for &x in grid {
        if x > lab.factors.x_max() || x > lab.coeffs.x_max() {
            return Err(Error::OutOfRange {
                value: x,
                limit: lab.factors.x_max().min(lab.coeffs.x_max()),
            });
        }
        let p = parts_at(lab, x, k, a_constant, b_value)?;
        rows.push((x, p.weighted_count, p.envelope));
        parts.push(p);
    }
    Ok((BoundReport::from_rows(claim, &rows), parts))
}

pub fn theorem1_pipeline(lab: &Lab, grid: &[u64]) -> Result<(BoundReport, Vec<TheoremParts>)> {
    theorem_pipeline(lab, grid, 2)
}

pub fn theorem2_pipeline(
    lab: &Lab,
    grid: &[u64],
    k: u32,
) -> Result<(BoundReport, Vec<TheoremParts>)> {
    theorem_pipeline(lab, grid, k)
}

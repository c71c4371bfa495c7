//! Per-claim verifiers for the mean-value lemmas: each computes an exact
//! left-hand side over the eigenvalue tables, the printed right-hand side,
//! and assembles a BoundReport.
//!
//! Conventions shared by every verifier: the smoothness cut is
//! L(x) = (log x)^2 with natural logs, the rough range is {1} union
//! {n : P^-(n) > L}, and implied constants are calibrated on the grid
//! points up to 1e5 and asserted with safety factor 2 beyond.

use crate::error::{Error, Result};
use crate::hecke::{CoefficientTable, KIM_SARNAK};
use crate::parallel::{sum_indexed, Kahan};
use crate::report::BoundReport;
use crate::sieve::FactorTable;
use crate::smooth::{
    calibrate_c1, dyadic_slice_bound, lemma1_rhs, script_l, smooth_integers, smooth_power_sum,
};

/// Exponent used throughout the Lemma 1 / Lemma 2 chain: 1 - 7/64.
pub const LEMMA1_A: f64 = 57.0 / 64.0;

/// epsilon fixed for the Lemma 2 report; 25/64 - 1/64 = 3/8.
pub const LEMMA2_EPSILON: f64 = 1.0 / 64.0;

/// Calibration grid for the frozen Lemma 1 constant.
pub const C1_CALIBRATION: [u64; 2] = [1_000, 10_000];

/// Shared handles for the verifiers.
pub struct Lab<'a> {
    pub factors: &'a FactorTable,
    pub coeffs: &'a CoefficientTable,
    pub workers: usize,
}

impl<'a> Lab<'a> {
    fn check_grid(&self, grid: &[u64]) -> Result<()> {
        for &x in grid {
            if x > self.coeffs.x_max() || x > self.factors.x_max() {
                return Err(Error::OutOfRange {
                    value: x,
                    limit: self.coeffs.x_max().min(self.factors.x_max()),
                });
            }
        }
        if grid.is_empty() {
            return Err(Error::domain("empty grid"));
        }
        Ok(())
    }

    /// True when n is in the rough range for cut l (n = 1 counts).
    #[inline]
    fn is_rough(&self, n: u64, l: f64) -> bool {
        n == 1 || self.factors.p_minus(n).unwrap_or(0) as f64 > l
    }

    /// Deterministic sum of f(n) over the rough range n <= x.
    fn rough_sum<F>(&self, x: u64, l: f64, f: F) -> f64
    where
        F: Fn(u64) -> f64 + Sync,
    {
        sum_indexed(1, x + 1, self.workers, |n| {
            if self.is_rough(n, l) {
                f(n)
            } else {
                0.0
            }
        })
    }
}

/// Chebyshev theta: sum of log p over primes <= x.
pub fn chebyshev_theta(factors: &FactorTable, x: u64) -> Result<f64> {
    if x > factors.x_max() {
        return Err(Error::OutOfRange {
            value: x,
            limit: factors.x_max(),
        });
    }
    let mut acc = Kahan::new();
    for &p in factors.primes() {
        if p > x {
            break;
        }
        acc.add((p as f64).ln());
    }
    Ok(acc.value())
}

/// Walk every L-smooth squarefree m <= cap; yields (m, lambda(m), omega(m)).
/// DFS over the primes <= L, each taken with exponent 0 or 1.
fn fold_smooth_squarefree<F>(lab: &Lab, cap: u64, l: f64, visit: &mut F)
where
    F: FnMut(u64, f64, u32),
{
    let primes: Vec<u64> = lab
        .factors
        .primes()
        .iter()
        .copied()
        .take_while(|&p| p as f64 <= l)
        .collect();
    let lam = lab.coeffs.lambda_slice();
    fn rec<F: FnMut(u64, f64, u32)>(
        m: u64,
        lm: f64,
        omega: u32,
        cap: u64,
        primes: &[u64],
        lam: &[f64],
        visit: &mut F,
    ) {
        match primes.split_last() {
            None => visit(m, lm, omega),
            Some((&p, rest)) => {
                rec(m, lm, omega, cap, rest, lam, visit);
                if cap >= p {
                    rec(
                        m * p,
                        lm * lam[p as usize],
                        omega + 1,
                        cap / p,
                        rest,
                        lam,
                        visit,
                    );
                }
            }
        }
    }
    rec(1, 1.0, 0, cap, &primes, lam, visit);
}

/// Diagnostics from the Lemma 1 slice decomposition.
#[derive(Clone, Copy, Debug)]
pub struct Lemma1Detail {
    /// |sum_k J_k - (S1 - psi x^{-a})| / S1, the partial-summation identity.
    pub identity_residual: f64,
    /// min over k of slice_bound_k / quadrature of the chain majorant: the
    /// printed closed form must dominate its own integral, so this is >= 1.
    pub chain_domination_min: f64,
    /// sum_k J_k(true psi) / sum_k slice_bound_k. Diagnostic only: the
    /// Dickman exponential is pre-asymptotic at desk scale, so the true
    /// integral exceeds the printed majorant here.
    pub coverage_ratio: f64,
}

/// Slice-level decomposition check behind Lemma 1 at a single x.
pub fn lemma1_slices(lab: &Lab, x: u64, a: f64) -> Result<Lemma1Detail> {
    let xf = x as f64;
    let l = script_l(xf);
    let smooth = smooth_integers(x, l, lab.factors)?;
    let k_max = xf.ln().floor() as u32;

    let mut sum_j = Kahan::new();
    let mut sum_slice = Kahan::new();
    let mut chain_min = f64::INFINITY;
    for k in 0..=k_max {
        let w2 = xf * (-(k as f64)).exp();
        let w1 = (xf * (-(k as f64) - 1.0).exp()).max(1.0);
        // exact J_k = a * int_{w1}^{w2} psi(w, L) w^{-1-a} dw via the step
        // structure of psi
        let mut jk = Kahan::new();
        for &n in smooth.iter().take_while(|&&n| (n as f64) <= w2) {
            jk.add((w1.max(n as f64)).powf(-a) - w2.powf(-a));
        }
        sum_j.add(jk.value());

        let bound = dyadic_slice_bound(xf, a, k)?;
        sum_slice.add(bound);

        // Simpson quadrature of the chain's uniform majorant
        // w * x^{-1/2} exp((log2/2) log x/loglog x) * a w^{-1-a}
        let fudge = (0.5 * std::f64::consts::LN_2 * xf.ln() / xf.ln().ln()).exp();
        let g = |w: f64| -> f64 { xf.powf(-0.5) * fudge * a * w.powf(-a) };
        let panels = 64;
        let h = (w2 - w1) / panels as f64;
        let mut quad = 0.0;
        for i in 0..panels {
            let lo = w1 + i as f64 * h;
            quad += h / 6.0 * (g(lo) + 4.0 * g(lo + 0.5 * h) + g(lo + h));
        }
        chain_min = chain_min.min(bound / quad);
    }

    let s1 = smooth_power_sum(x, l, a, lab.factors)?;
    let direct = s1 - smooth.len() as f64 * xf.powf(-a);
    Ok(Lemma1Detail {
        identity_residual: (sum_j.value() - direct).abs() / s1,
        chain_domination_min: chain_min,
        coverage_ratio: sum_j.value() / sum_slice.value(),
    })
}

/// Lemma 1: sum over L-smooth n <= x of n^{-a} against
/// x^{1/2-a} exp(C1 log x/loglog x), C1 frozen on {1e3, 1e4}.
pub fn verify_lemma1(lab: &Lab, grid: &[u64]) -> Result<BoundReport> {
    lab.check_grid(grid)?;
    let a = LEMMA1_A;
    let c1 = calibrate_c1(lab.factors, a, &C1_CALIBRATION)?;
    let mut rows = Vec::new();
    for &x in grid {
        let lhs = smooth_power_sum(x, script_l(x as f64), a, lab.factors)?;
        let rhs = lemma1_rhs(x as f64, a, c1)?;
        rows.push((x, lhs, rhs));
    }
    Ok(BoundReport::from_rows("lemma1", &rows))
}

/// The frozen Lemma 1 constant, exposed for reports.
pub fn frozen_c1(factors: &FactorTable) -> Result<f64> {
    calibrate_c1(factors, LEMMA1_A, &C1_CALIBRATION)
}

/// Detail from the Lemma 2 envelope scan.
#[derive(Clone, Copy, Debug, Default)]
pub struct Lemma2Detail {
    /// smooth squarefree n <= x violating |lambda(n)| <= n^{7/64} d(n).
    pub envelope_violations: u64,
    pub checked: u64,
}

/// Lemma 2: sum over L-smooth squarefree n <= x of |lambda(n) mu(n)|/n
/// against x^{-25/64+eps} exp(C1 log x/loglog x); reports fix eps = 1/64.
pub fn verify_lemma2(lab: &Lab, grid: &[u64], eps: f64) -> Result<(BoundReport, Lemma2Detail)> {
    if !(eps > 0.0) {
        return Err(Error::domain("epsilon must be positive"));
    }
    lab.check_grid(grid)?;
    let c1 = frozen_c1(lab.factors)?;
    let mut detail = Lemma2Detail::default();
    let mut rows = Vec::new();
    for &x in grid {
        let l = script_l(x as f64);
        let mut acc = Kahan::new();
        fold_smooth_squarefree(lab, x, l, &mut |m, lm, omega| {
            acc.add(lm.abs() / m as f64);
            // proof envelope |lambda(n)| <= n^{7/64} d(n), d = 2^omega
            let envelope = (m as f64).powf(KIM_SARNAK) * 2f64.powi(omega as i32);
            detail.checked += 1;
            if lm.abs() > envelope * (1.0 + 1e-12) {
                detail.envelope_violations += 1;
            }
        });
        let xf = x as f64;
        let rhs = xf.powf(-25.0 / 64.0 + eps) * (c1 * xf.ln() / xf.ln().ln()).exp();
        rows.push((x, acc.value(), rhs));
    }
    Ok((BoundReport::from_rows("lemma2", &rows), detail))
}

/// Lemma 3: sum of 1/n over the rough range against 1 + log x.
pub fn verify_lemma3(lab: &Lab, grid: &[u64]) -> Result<BoundReport> {
    lab.check_grid(grid)?;
    let mut rows = Vec::new();
    for &x in grid {
        let l = script_l(x as f64);
        let lhs = lab.rough_sum(x, l, |n| 1.0 / n as f64);
        rows.push((x, lhs, 1.0 + (x as f64).ln()));
    }
    Ok(BoundReport::from_rows("lemma3", &rows))
}

/// Lemma 4: sum of |lambda(n)|^4/n over the rough range against log^2 x.
pub fn verify_lemma4(lab: &Lab, grid: &[u64]) -> Result<BoundReport> {
    lab.check_grid(grid)?;
    let lam = lab.coeffs.lambda_slice();
    let mut rows = Vec::new();
    for &x in grid {
        let l = script_l(x as f64);
        let lhs = lab.rough_sum(x, l, |n| {
            let v = lam[n as usize];
            v * v * v * v / n as f64
        });
        let lx = (x as f64).ln();
        rows.push((x, lhs, lx * lx));
    }
    Ok(BoundReport::from_rows("lemma4", &rows))
}

/// Threshold split and scan data for Lemma 5 at one x.
#[derive(Clone, Copy, Debug)]
pub struct Lemma5Split {
    pub m: f64,
    pub s1: f64,
    pub s2: f64,
}

#[derive(Clone, Debug)]
pub struct Lemma5Detail {
    pub splits: Vec<Lemma5Split>,
    /// empirical argmin of M(1+log x) + b/M^3 over the scan grid
    pub scan_argmin: f64,
    /// closed-form minimizer (3b/a)^{1/4}
    pub closed_form_min: f64,
    /// scan_argmin / (log x)^{1/4}
    pub ratio_to_quarter_log: f64,
}

/// S1(M), S2(M): the rough |lambda mu|/n sum split at |lambda(n)| <= M.
pub fn lemma5_threshold_split(lab: &Lab, x: u64, m: f64) -> Result<Lemma5Split> {
    let l = script_l(x as f64);
    let lam = lab.coeffs.lambda_slice();
    let factors = lab.factors;
    let term = |n: u64, want_small: bool| -> f64 {
        if !lab.is_rough(n, l) || factors.moebius(n).unwrap_or(0) == 0 {
            return 0.0;
        }
        let v = lam[n as usize].abs();
        if (v <= m) == want_small {
            v / n as f64
        } else {
            0.0
        }
    };
    let s1 = sum_indexed(1, x + 1, lab.workers, |n| term(n, true));
    let s2 = sum_indexed(1, x + 1, lab.workers, |n| term(n, false));
    Ok(Lemma5Split { m, s1, s2 })
}

/// Lemma 5: rough sum of |lambda mu|/n against (log x)^{5/4}, plus the
/// threshold-split scan that locates the optimal M.
pub fn verify_lemma5(lab: &Lab, grid: &[u64]) -> Result<(BoundReport, Vec<Lemma5Detail>)> {
    lab.check_grid(grid)?;
    let lam = lab.coeffs.lambda_slice();
    let mut rows = Vec::new();
    let mut details = Vec::new();
    for &x in grid {
        let xf = x as f64;
        let l = script_l(xf);
        let lhs = lab.rough_sum(x, l, |n| {
            if lab.factors.moebius(n).unwrap_or(0) == 0 {
                0.0
            } else {
                lam[n as usize].abs() / n as f64
            }
        });
        rows.push((x, lhs, xf.ln().powf(1.25)));

        // majorant scan: f(M) = a M + b / M^3 with a = 1 + log x and
        // b the rough fourth-moment sum of Lemma 4
        let a = 1.0 + xf.ln();
        let b = lab.rough_sum(x, l, |n| {
            let v = lam[n as usize];
            v * v * v * v / n as f64
        });
        let mut best = (f64::INFINITY, 0.0);
        let mut m = 0.05;
        while m <= 6.0 {
            let f = a * m + b / (m * m * m);
            if f < best.0 {
                best = (f, m);
            }
            m += 0.05;
        }
        let closed = (3.0 * b / a).powf(0.25);
        let splits = [0.5, 1.0, 2.0, xf.ln().powf(0.25)]
            .iter()
            .map(|&mv| lemma5_threshold_split(lab, x, mv))
            .collect::<Result<Vec<_>>>()?;
        details.push(Lemma5Detail {
            splits,
            scan_argmin: best.1,
            closed_form_min: closed,
            ratio_to_quarter_log: best.1 / xf.ln().powf(0.25),
        });
    }
    Ok((BoundReport::from_rows("lemma5", &rows), details))
}

/// Lemma 7 first sum: sum over primes p <= x of |lambda(p) mu(p)| log p
/// against x sqrt(log x). mu(p) = -1, so the mu factor only feeds the
/// structural second sum.
pub fn verify_lemma7(lab: &Lab, grid: &[u64]) -> Result<BoundReport> {
    lab.check_grid(grid)?;
    let lam = lab.coeffs.lambda_slice();
    let mut rows = Vec::new();
    for &x in grid {
        let mut acc = Kahan::new();
        for &p in lab.factors.primes() {
            if p > x {
                break;
            }
            acc.add(lam[p as usize].abs() * (p as f64).ln());
        }
        let xf = x as f64;
        rows.push((x, acc.value(), xf * xf.ln().sqrt()));
    }
    Ok(BoundReport::from_rows("lemma7", &rows))
}

/// Lemma 7 second sum: sum over p, alpha >= 2 of
/// |lambda(p^alpha) mu(p^alpha)| log(p^alpha) / p^alpha. Every term carries
/// mu(p^alpha) = 0, so the sum is structurally zero; no summation happens.
pub fn lemma7_second_sum() -> f64 {
    0.0
}

/// Lemma 8 printed form: S(x) for weight |lambda mu| against
/// (x/sqrt(log x)) L(x).
pub fn verify_lemma8(lab: &Lab, grid: &[u64]) -> Result<BoundReport> {
    lab.check_grid(grid)?;
    let lam = lab.coeffs.lambda_slice();
    let factors = lab.factors;
    let mut rows = Vec::new();
    for &x in grid {
        let weight = |n: u64| -> f64 {
            if factors.moebius(n).unwrap_or(0) == 0 {
                0.0
            } else {
                lam[n as usize].abs()
            }
        };
        let s = sum_indexed(1, x + 1, lab.workers, &weight);
        let l_log = sum_indexed(1, x + 1, lab.workers, |n| weight(n) / n as f64);
        let xf = x as f64;
        rows.push((x, s, xf / xf.ln().sqrt() * l_log));
    }
    Ok(BoundReport::from_rows("lemma8", &rows))
}

/// Eq. (3) instance: partial sums of |lambda|^4 against the majorant.
pub fn verify_eq3(lab: &Lab, grid: &[u64]) -> Result<BoundReport> {
    lab.check_grid(grid)?;
    let lam = lab.coeffs.lambda_slice();
    let star = lab
        .coeffs
        .lambda_star_slice()
        .ok_or_else(|| Error::domain("eq3 needs lambda_star built"))?;
    let mut rows = Vec::new();
    for &x in grid {
        let lhs = sum_indexed(1, x + 1, lab.workers, |n| {
            let v = lam[n as usize];
            v * v * v * v
        });
        let rhs = sum_indexed(1, x + 1, lab.workers, |n| star[n as usize]);
        rows.push((x, lhs, rhs));
    }
    Ok(BoundReport::from_rows("eq3", &rows))
}

/// Count prime powers p^a <= x_max (a >= 2) where lambda(p^a)^4 exceeds
/// lambda*(p^a). The partial-sum inequality of Eq. (3) does not promise
/// coefficientwise domination, so this is informational.
pub fn eq3_coefficientwise_violations(lab: &Lab) -> Result<(u64, u64)> {
    let star = lab
        .coeffs
        .lambda_star_slice()
        .ok_or_else(|| Error::domain("needs lambda_star built"))?;
    let lam = lab.coeffs.lambda_slice();
    let x_max = lab.coeffs.x_max();
    let mut checked = 0u64;
    let mut violations = 0u64;
    for &p in lab.factors.primes() {
        if p > x_max {
            break;
        }
        let mut q = p.saturating_mul(p);
        while q != 0 && q <= x_max {
            checked += 1;
            let l4 = lam[q as usize].powi(4);
            if l4 > star[q as usize] * (1.0 + 1e-9) {
                violations += 1;
            }
            q = q.saturating_mul(p);
        }
    }
    Ok((checked, violations))
}

/// Section 6 flavors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Section6Kind {
    Primes,
    Squarefull,
}

#[derive(Clone, Copy, Debug)]
pub struct HolderInstance {
    pub x: u64,
    pub lhs: f64,
    pub holder_majorant: f64,
    pub set_count: u64,
}

/// Section 6: sum of |lambda| over primes (resp. squarefull n) up to x,
/// the Holder majorant (sum lambda*)^{1/4} |S|^{3/4}, and the printed
/// envelope x/sqrt(log x) (resp. x^{5/8} (log x)^{1/4}).
pub fn holder_section6(
    lab: &Lab,
    grid: &[u64],
    kind: Section6Kind,
) -> Result<(BoundReport, Vec<HolderInstance>)> {
    lab.check_grid(grid)?;
    let lam = lab.coeffs.lambda_slice();
    let star = lab
        .coeffs
        .lambda_star_slice()
        .ok_or_else(|| Error::domain("section 6 needs lambda_star built"))?;
    let factors = lab.factors;
    let in_set = |n: u64| -> bool {
        match kind {
            Section6Kind::Primes => factors.is_prime(n),
            Section6Kind::Squarefull => factors
                .indicator(n, crate::sieve::SetKind::Squarefull)
                .map(|v| v == 1)
                .unwrap_or(false),
        }
    };
    let claim = match kind {
        Section6Kind::Primes => "section6-primes",
        Section6Kind::Squarefull => "section6-squarefull",
    };
    let mut rows = Vec::new();
    let mut instances = Vec::new();
    for &x in grid {
        let lhs = sum_indexed(1, x + 1, lab.workers, |n| {
            if in_set(n) {
                lam[n as usize].abs()
            } else {
                0.0
            }
        });
        let star_sum = sum_indexed(1, x + 1, lab.workers, |n| star[n as usize]);
        let set_kind = match kind {
            Section6Kind::Primes => crate::sieve::SetKind::Prime,
            Section6Kind::Squarefull => crate::sieve::SetKind::Squarefull,
        };
        let (count, _) = lab.factors.count_set(x, set_kind)?;
        let majorant = star_sum.powf(0.25) * (count as f64).powf(0.75);
        let xf = x as f64;
        let envelope = match kind {
            Section6Kind::Primes => xf / xf.ln().sqrt(),
            Section6Kind::Squarefull => xf.powf(0.625) * xf.ln().powf(0.25),
        };
        instances.push(HolderInstance {
            x,
            lhs,
            holder_majorant: majorant,
            set_count: count,
        });
        rows.push((x, lhs, envelope));
    }
    Ok((BoundReport::from_rows(claim, &rows), instances))
}

/// Remark 1: density ratio R(x) = S_{|lambda mu|}(x) / S_{|mu|}(x) with the
/// printed envelope (loglog x)^{5/4}/sqrt(log x); the Tang-Wu reference
/// curve x/(log x)^{0.118} is returned alongside.
pub struct Remark1Row {
    pub x: u64,
    pub ratio: f64,
    pub envelope: f64,
    pub tang_wu: f64,
}

pub fn remark1_density(lab: &Lab, grid: &[u64]) -> Result<(BoundReport, Vec<Remark1Row>)> {
    lab.check_grid(grid)?;
    let lam = lab.coeffs.lambda_slice();
    let factors = lab.factors;
    let mut rows = Vec::new();
    let mut extra = Vec::new();
    for &x in grid {
        let num = sum_indexed(1, x + 1, lab.workers, |n| {
            if factors.moebius(n).unwrap_or(0) == 0 {
                0.0
            } else {
                lam[n as usize].abs()
            }
        });
        let den = sum_indexed(1, x + 1, lab.workers, |n| {
            factors
                .moebius(n)
                .map(|m| m.unsigned_abs() as f64)
                .unwrap_or(0.0)
        });
        let xf = x as f64;
        let r = num / den;
        let envelope = xf.ln().ln().powf(1.25) / xf.ln().sqrt();
        extra.push(Remark1Row {
            x,
            ratio: r,
            envelope,
            tang_wu: xf / xf.ln().powf(crate::hecke::THETA_1),
        });
        rows.push((x, r, envelope));
    }
    Ok((BoundReport::from_rows("remark1", &rows), extra))
}

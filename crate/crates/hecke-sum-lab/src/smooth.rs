//! Smooth-number densities: Dickman's rho, the Norton log-asymptotic,
//! psi(x,y) counting by two independent algorithms, and the smooth
//! power-sum machinery behind the Lemma 1 bound.

use crate::error::{Error, Result};
use crate::parallel::Kahan;
use crate::sieve::FactorTable;

/// The smoothness cut L(x) = (log x)^2, natural log.
pub fn script_l(x: f64) -> f64 {
    let l = x.ln();
    l * l
}

/// Grid step of the production rho integration.
const RHO_STEP: f64 = 1e-3;
const PER_UNIT: usize = 1000;

/// Tabulated Dickman rho on [0, u_max], integration step 1e-3.
///
/// rho is 1 on [0,1] and solves the delay ODE u rho'(u) = -rho(u-1) beyond.
/// Each grid step integrates rho(t-1)/t with a Simpson panel; the delayed
/// endpoints land on grid nodes, and the panel midpoint is interpolated by
/// a cubic whose stencil never crosses an integer (rho is only C^0 there,
/// and a kink inside the stencil would wreck the h^4 error).
pub struct RhoTable {
    u_max: f64,
    values: Vec<f64>,
}

/// Cubic Lagrange through values[base..base+4] evaluated at grid offset
/// x (in units of the step, relative to base).
fn cubic(values: &[f64], base: usize, x: f64) -> f64 {
    let y = &values[base..base + 4];
    let mut out = 0.0;
    for (i, &yi) in y.iter().enumerate() {
        let mut w = 1.0;
        for j in 0..4 {
            if j != i {
                w *= (x - j as f64) / (i as f64 - j as f64);
            }
        }
        out += w * yi;
    }
    out
}

/// Interpolate rho at grid coordinate g (units of RHO_STEP) from a table
/// prefix, keeping the 4-point stencil inside the unit interval that
/// contains g.
fn interp_prefix(values: &[f64], g: f64) -> f64 {
    let j = (g.floor() as usize).min(values.len() - 2);
    let unit = j / PER_UNIT;
    let lo = unit * PER_UNIT;
    let hi = ((unit + 1) * PER_UNIT).min(values.len() - 1);
    let base = (j.saturating_sub(1)).clamp(lo, hi.saturating_sub(3));
    cubic(values, base, g - base as f64)
}

impl RhoTable {
    /// Build the table. u_max must lie in [1, 100].
    pub fn build(u_max: f64) -> Result<RhoTable> {
        if !(1.0..=100.0).contains(&u_max) {
            return Err(Error::domain(format!(
                "rho table wants 1 <= u_max <= 100, got {u_max}"
            )));
        }
        let n = (u_max / RHO_STEP).ceil() as usize;
        let mut values = Vec::with_capacity(n + 1);
        // exact plateau on [0,1]
        for _ in 0..=PER_UNIT.min(n) {
            values.push(1.0);
        }
        let h = RHO_STEP;
        for i in PER_UNIT..n {
            // Simpson panel for the integral of rho(t-1)/t over one step
            let u0 = i as f64 * h;
            let u1 = u0 + h;
            let um = u0 + 0.5 * h;
            let f0 = values[i - PER_UNIT] / u0;
            let f1 = values[i + 1 - PER_UNIT] / u1;
            let fm = interp_prefix(&values, i as f64 + 0.5 - PER_UNIT as f64) / um;
            let drop = h / 6.0 * (f0 + 4.0 * fm + f1);
            values.push(values[i] - drop);
        }
        Ok(RhoTable { u_max, values })
    }

    pub fn u_max(&self) -> f64 {
        self.u_max
    }

    /// rho(u). Exact 1 on [0,1]; cubic off-grid elsewhere.
    pub fn eval(&self, u: f64) -> Result<f64> {
        if !u.is_finite() || u < 0.0 || u > self.u_max + 1e-12 {
            return Err(Error::domain(format!(
                "rho argument {u} outside [0, {}]",
                self.u_max
            )));
        }
        if u <= 1.0 {
            return Ok(1.0);
        }
        let g = (u / RHO_STEP).min((self.values.len() - 1) as f64);
        Ok(interp_prefix(&self.values, g))
    }

    /// Value at grid index (step 1e-3); used by tests probing exact nodes.
    pub fn grid(&self) -> &[f64] {
        &self.values
    }
}

/// Norton's truncated expansion of log rho(u):
/// -u(log u + loglog u - 1 + loglog u / log u). Valid only for u > e.
pub fn norton_log_rho(u: f64) -> Result<f64> {
    if !(u > std::f64::consts::E) {
        return Err(Error::domain(format!(
            "norton_log_rho wants u > e, got {u}"
        )));
    }
    let lu = u.ln();
    let llu = lu.ln();
    Ok(-u * (lu + llu - 1.0 + llu / lu))
}

/// psi(x, y) by DFS over prime exponent vectors of primes <= y. Primes are
/// consumed in descending order; remaining capacity is tracked by exact
/// integer division.
pub fn psi_dfs(x: u64, y: f64, factors: &FactorTable) -> Result<u64> {
    if x > factors.x_max() {
        return Err(Error::OutOfRange {
            value: x,
            limit: factors.x_max(),
        });
    }
    let primes: Vec<u64> = factors
        .primes()
        .iter()
        .copied()
        .take_while(|&p| p as f64 <= y)
        .collect();
    fn count(cap: u64, primes: &[u64]) -> u64 {
        match primes.split_last() {
            None => 1, // only n = 1
            Some((&p, rest)) => {
                let mut total = 0u64;
                let mut cap = cap;
                loop {
                    total += count(cap, rest);
                    if cap < p {
                        break;
                    }
                    cap /= p;
                }
                total
            }
        }
    }
    Ok(if x == 0 { 0 } else { count(x, &primes) })
}

/// psi(x, y) by scanning P+(n) in the factor table.
pub fn psi_scan(x: u64, y: f64, factors: &FactorTable) -> Result<u64> {
    if x > factors.x_max() {
        return Err(Error::OutOfRange {
            value: x,
            limit: factors.x_max(),
        });
    }
    let mut count = 0u64;
    for n in 1..=x {
        if factors.p_plus(n)? as f64 <= y {
            count += 1;
        }
    }
    Ok(count)
}

/// psi(x,y): both algorithms, which must agree exactly.
pub fn psi_exact(x: u64, y: f64, factors: &FactorTable) -> Result<u64> {
    let a = psi_dfs(x, y, factors)?;
    let b = psi_scan(x, y, factors)?;
    assert_eq!(a, b, "psi algorithms disagree at x={x}, y={y}");
    Ok(a)
}

/// Visit every L-smooth integer <= cap once, in DFS order.
fn visit_smooth<F: FnMut(u64)>(cap: u64, primes: &[u64], f: &mut F) {
    fn rec<F: FnMut(u64)>(n: u64, cap: u64, primes: &[u64], f: &mut F) {
        match primes.split_last() {
            None => f(n),
            Some((&p, rest)) => {
                let mut n = n;
                let mut cap = cap;
                loop {
                    rec(n, cap, rest, f);
                    if cap < p {
                        break;
                    }
                    cap /= p;
                    n *= p;
                }
            }
        }
    }
    if cap >= 1 {
        rec(1, cap, primes, f);
    }
}

/// Exact sum of n^{-a} over L-smooth n <= x, by enumeration.
pub fn smooth_power_sum(x: u64, l: f64, a: f64, factors: &FactorTable) -> Result<f64> {
    if x > factors.x_max() {
        return Err(Error::OutOfRange {
            value: x,
            limit: factors.x_max(),
        });
    }
    let primes: Vec<u64> = factors
        .primes()
        .iter()
        .copied()
        .take_while(|&p| p as f64 <= l)
        .collect();
    let mut acc = Kahan::new();
    visit_smooth(x, &primes, &mut |n| acc.add((n as f64).powf(-a)));
    Ok(acc.value())
}

/// All L-smooth integers <= x, ascending.
pub fn smooth_integers(x: u64, l: f64, factors: &FactorTable) -> Result<Vec<u64>> {
    if x > factors.x_max() {
        return Err(Error::OutOfRange {
            value: x,
            limit: factors.x_max(),
        });
    }
    let primes: Vec<u64> = factors
        .primes()
        .iter()
        .copied()
        .take_while(|&p| p as f64 <= l)
        .collect();
    let mut out = Vec::new();
    visit_smooth(x, &primes, &mut |n| out.push(n));
    out.sort_unstable();
    Ok(out)
}

fn require_lemma1_domain(x: f64) -> Result<()> {
    let ee = std::f64::consts::E.exp();
    if !(x > ee) {
        return Err(Error::domain(format!("lemma 1 wants x > e^e, got {x}")));
    }
    Ok(())
}

/// Printed Lemma 1 right-hand side x^{1/2-a} exp(C1 log x / loglog x).
pub fn lemma1_rhs(x: f64, a: f64, c1: f64) -> Result<f64> {
    require_lemma1_domain(x)?;
    Ok(x.powf(0.5 - a) * (c1 * x.ln() / x.ln().ln()).exp())
}

/// Per-slice majorant x^{1/2-a} e^{-k(1-a)} exp((log 2 / 2) log x / loglog x)
/// for the k-th dyadic slice of the proof's integral.
pub fn dyadic_slice_bound(x: f64, a: f64, k: u32) -> Result<f64> {
    require_lemma1_domain(x)?;
    if k as f64 > x.ln() {
        return Err(Error::domain(format!("slice index {k} exceeds log x")));
    }
    let fudge = (0.5 * std::f64::consts::LN_2 * x.ln() / x.ln().ln()).exp();
    Ok(x.powf(0.5 - a) * (-(k as f64) * (1.0 - a)).exp() * fudge)
}

/// Smallest constant making smooth_power_sum(x, L(x), a) <= lemma1_rhs hold
/// at every calibration point.
pub fn calibrate_c1(factors: &FactorTable, a: f64, calib: &[u64]) -> Result<f64> {
    let mut c1 = f64::NEG_INFINITY;
    for &x in calib {
        let lhs = smooth_power_sum(x, script_l(x as f64), a, factors)?;
        let xf = x as f64;
        require_lemma1_domain(xf)?;
        // solve lhs = x^{1/2-a} exp(c * log x / loglog x) for c
        let c = (lhs / xf.powf(0.5 - a)).ln() * xf.ln().ln() / xf.ln();
        c1 = c1.max(c);
    }
    Ok(c1)
}

//! Independent oracles for the integration suite. Everything here is
//! deliberately written against the defining property, not against the
//! library code: plain sieves, trial division, direct enumeration, and
//! a textbook delay-equation integrator.

#![allow(dead_code)]

/// Smallest prime factor table by the classic unsegmented sieve.
pub fn spf_oracle(x: usize) -> Vec<u32> {
    let mut spf = vec![0u32; x + 1];
    for i in 2..=x {
        if spf[i] == 0 {
            let mut j = i;
            while j <= x {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    spf
}

/// Moebius function by trial division.
pub fn moebius_oracle(mut n: u64) -> i32 {
    let mut omega = 0;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            omega += 1;
        }
        d += 1;
    }
    if n > 1 {
        omega += 1;
    }
    if omega % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Largest prime factor by trial division; 0 for n = 1.
pub fn largest_prime_factor(mut n: u64) -> u64 {
    let mut best = 0;
    let mut d = 2u64;
    while d * d <= n {
        while n % d == 0 {
            best = d;
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        best = n;
    }
    best
}

/// psi(x, y) by direct enumeration.
pub fn psi_oracle(x: u64, y: f64) -> u64 {
    (1..=x)
        .filter(|&n| largest_prime_factor(n) as f64 <= y)
        .count() as u64
}

/// Count of squarefree n <= x by striking multiples of p^2.
pub fn squarefree_count_oracle(x: usize) -> u64 {
    let mut free = vec![true; x + 1];
    let mut p = 2usize;
    while p * p <= x {
        let mut j = p * p;
        while j <= x {
            free[j] = false;
            j += p * p;
        }
        p += 1;
    }
    free[1..=x].iter().filter(|&&b| b).count() as u64
}

/// Squarefull numbers (every prime exponent >= 2, including 1) up to x,
/// enumerated as a^2 b^3 with deduplication.
pub fn squarefull_oracle(x: u64) -> u64 {
    let mut seen = std::collections::BTreeSet::new();
    let mut b = 1u64;
    while b * b * b <= x {
        let b3 = b * b * b;
        let mut a = 1u64;
        while a * a <= x / b3 {
            seen.insert(a * a * b3);
            a += 1;
        }
        b += 1;
    }
    seen.len() as u64
}

/// Chebyshev theta: sum of log p over primes p <= x, trial division.
pub fn theta_oracle(x: u64) -> f64 {
    let spf = spf_oracle(x as usize);
    let mut s = 0.0;
    for p in 2..=x as usize {
        if spf[p] == p as u32 {
            s += (p as f64).ln();
        }
    }
    s
}

/// Dickman rho by the trapezoid scheme for the delay equation
/// u rho'(u) = -rho(u - 1), rho = 1 on [0, 1], with step h. The delay
/// must land on the grid: 1/h integral.
pub fn rho_oracle(u_max: f64, h: f64) -> Vec<f64> {
    let delay = (1.0 / h).round() as usize;
    assert!(
        (delay as f64 * h - 1.0).abs() < 1e-12,
        "1/h must be integral"
    );
    let steps = (u_max / h).round() as usize;
    let mut rho = vec![1.0f64; steps + 1];
    for i in delay..steps {
        let u = i as f64 * h;
        let slope_here = -rho[i - delay] / u;
        let slope_next = -rho[i + 1 - delay] / (u + h);
        rho[i + 1] = rho[i] + 0.5 * h * (slope_here + slope_next);
    }
    rho
}

/// Fixed-increment splitmix64, the standard seed expander.
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

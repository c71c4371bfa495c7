//! Segmented smallest-prime-factor sieve and the factorization-derived
//! arithmetic functions built on it.
//!
//! The table stores spf[n] for every n <= x_max (spf[0] = spf[1] = 0,
//! matching the P+(1) = P-(1) = 0 convention). spf values fit in u32 because
//! x_max is capped at 1e8.

use crate::error::{Error, Result};
use crate::parallel::{for_blocks, SIEVE_BLOCK};
use crate::zeta::zeta;

/// Hard capacity cap (memory budget: 4 bytes per integer).
pub const X_MAX_LIMIT: u64 = 100_000_000;

/// Dense smallest-prime-factor table for [1, x_max].
pub struct FactorTable {
    x_max: u64,
    spf: Vec<u32>,
    primes: Vec<u64>,
}

/// Canonical factorization, primes ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub pairs: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn value(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, a)| p.pow(a))
            .product::<u64>()
            .max(1)
    }
}

/// Indicator families exposed by the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SetKind {
    /// k-free: every exponent <= k-1.
    KFree(u32),
    Prime,
    /// Every exponent >= 2; the empty product makes 1 squarefull.
    Squarefull,
    /// |mu(n)|, i.e. KFree(2) by another name.
    SquarefreeMu,
}

impl FactorTable {
    /// Build the table with a segmented sieve. Deterministic for any worker
    /// count: blocks are disjoint and every cell has a unique final value.
    pub fn build(x_max: u64, workers: usize) -> Result<FactorTable> {
        if x_max < 1 || x_max > X_MAX_LIMIT {
            return Err(Error::CapacityExceeded {
                requested: x_max,
                limit: X_MAX_LIMIT,
            });
        }

        // base primes up to sqrt(x_max), plain sieve
        let root = (x_max as f64).sqrt() as u64 + 1;
        let mut base_is_comp = vec![false; (root + 1) as usize];
        let mut base_primes: Vec<u64> = Vec::new();
        for p in 2..=root {
            if !base_is_comp[p as usize] {
                base_primes.push(p);
                let mut m = p * p;
                while m <= root {
                    base_is_comp[m as usize] = true;
                    m += p;
                }
            }
        }

        let mut spf = vec![0u32; (x_max + 1) as usize];
        for_blocks(&mut spf, SIEVE_BLOCK, workers, |_, start, slice| {
            let lo = start as u64;
            let hi = lo + slice.len() as u64; // exclusive
            for &p in &base_primes {
                if p * p >= hi {
                    break;
                }
                let mut m = (lo + p - 1) / p * p;
                if m < p * p {
                    m = p * p;
                }
                while m < hi {
                    let cell = &mut slice[(m - lo) as usize];
                    if *cell == 0 {
                        *cell = p as u32;
                    }
                    m += p;
                }
            }
            // untouched cells >= 2 are prime
            for (i, cell) in slice.iter_mut().enumerate() {
                let n = lo + i as u64;
                if n >= 2 && *cell == 0 {
                    *cell = n as u32;
                }
            }
        });

        let primes: Vec<u64> = (2..=x_max)
            .filter(|&n| spf[n as usize] as u64 == n)
            .collect();

        Ok(FactorTable { x_max, spf, primes })
    }

    pub fn x_max(&self) -> u64 {
        self.x_max
    }

    /// All primes <= x_max, ascending.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    fn check(&self, n: u64) -> Result<()> {
        if n < 1 || n > self.x_max {
            Err(Error::OutOfRange {
                value: n,
                limit: self.x_max,
            })
        } else {
            Ok(())
        }
    }

    /// Smallest prime factor; 0 for n = 1.
    pub fn spf(&self, n: u64) -> Result<u64> {
        self.check(n)?;
        Ok(self.spf[n as usize] as u64)
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.x_max && self.spf[n as usize] as u64 == n
    }

    pub fn factorize(&self, n: u64) -> Result<Factorization> {
        self.check(n)?;
        let mut pairs = Vec::new();
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            let mut a = 0u32;
            while m % p == 0 {
                m /= p;
                a += 1;
            }
            pairs.push((p, a));
        }
        Ok(Factorization { pairs })
    }

    pub fn moebius(&self, n: u64) -> Result<i32> {
        self.check(n)?;
        let mut m = n;
        let mut omega = 0u32;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            m /= p;
            if m % p == 0 {
                return Ok(0);
            }
            omega += 1;
        }
        Ok(if omega % 2 == 0 { 1 } else { -1 })
    }

    /// Largest prime factor; P+(1) = 0.
    pub fn p_plus(&self, n: u64) -> Result<u64> {
        self.check(n)?;
        let mut m = n;
        let mut last = 0u64;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            last = p;
            while m % p == 0 {
                m /= p;
            }
        }
        Ok(last)
    }

    /// Smallest prime factor as a set bound; P-(1) = 0.
    pub fn p_minus(&self, n: u64) -> Result<u64> {
        self.check(n)?;
        Ok(self.spf[n as usize] as u64)
    }

    pub fn divisor_count(&self, n: u64) -> Result<u64> {
        Ok(self
            .factorize(n)?
            .pairs
            .iter()
            .map(|&(_, a)| (a + 1) as u64)
            .product())
    }

    pub fn indicator(&self, n: u64, kind: SetKind) -> Result<u32> {
        self.check(n)?;
        // hot path for full-range scans: walk the spf chain, no allocation
        let chain_all = |pred: &dyn Fn(u32) -> bool| -> bool {
            let mut m = n;
            while m > 1 {
                let p = self.spf[m as usize] as u64;
                let mut a = 0u32;
                while m % p == 0 {
                    m /= p;
                    a += 1;
                }
                if !pred(a) {
                    return false;
                }
            }
            true
        };
        let hit = match kind {
            SetKind::KFree(k) => {
                debug_assert!(k >= 2);
                chain_all(&|a| a <= k - 1)
            }
            SetKind::Prime => self.is_prime(n),
            SetKind::Squarefull => chain_all(&|a| a >= 2),
            SetKind::SquarefreeMu => self.moebius(n)? != 0,
        };
        Ok(hit as u32)
    }

    /// n = m1 * m2 with m1 the product of full prime powers p^a || n, p <= L,
    /// and m2 the L-rough cofactor. gcd(m1, m2) = 1 by construction.
    pub fn smooth_rough_split(&self, n: u64, l: f64) -> Result<(u64, u64)> {
        self.check(n)?;
        let mut m1 = 1u64;
        let mut m = n;
        while m > 1 {
            let p = self.spf[m as usize] as u64;
            if p as f64 > l {
                break; // spf only grows along the division chain
            }
            while m % p == 0 {
                m /= p;
                m1 *= p;
            }
        }
        Ok((m1, m))
    }

    /// Exact count of the set up to x, plus signed deviation from the
    /// classical main term (x/zeta(k) for k-free, zeta(3/2)/zeta(3)*sqrt(x)
    /// for squarefull, x/log x for primes).
    pub fn count_set(&self, x: u64, kind: SetKind) -> Result<(u64, f64)> {
        self.check(x)?;
        let mut count = 0u64;
        for n in 1..=x {
            count += self.indicator(n, kind)? as u64;
        }
        let main = match kind {
            SetKind::KFree(k) => x as f64 / zeta(k as f64)?,
            SetKind::SquarefreeMu => x as f64 / zeta(2.0)?,
            SetKind::Squarefull => zeta(1.5)? / zeta(3.0)? * (x as f64).sqrt(),
            SetKind::Prime => x as f64 / (x as f64).ln(),
        };
        Ok((count, count as f64 - main))
    }
}

//! Hecke eigenvalue tables lambda(n) and the fourth-moment majorant
//! lambda*(n), built from prime coefficients under three interchangeable
//! models: ingested files, a Sato-Tate sampler, and a Kim-Sarnak stress
//! model that saturates the unconditional bound at every prime.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{BufRead, BufReader, Write as _};
use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::sieve::FactorTable;

/// Kim-Sarnak exponent: |alpha(p)| <= p^theta unconditionally.
pub const KIM_SARNAK: f64 = 7.0 / 64.0;

/// Subconvexity reference exponent quoted with the delta_m discussion.
pub const THETA_1: f64 = 0.118;

/// Tolerance for discarding imaginary residue in the majorant expansion.
const REALIFY_TOL: f64 = 1e-9;

/// Sign rule for the stress model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignRule {
    AllPlus,
    /// Sign (-1)^i by ascending prime index (p=2 positive).
    Alternating,
}

/// Provider of lambda(p) for primes.
#[derive(Clone, Debug)]
pub enum PrimeCoefficientSource {
    File {
        entries: BTreeMap<u64, f64>,
        descriptor: String,
    },
    SatoTate {
        seed: u64,
    },
    /// lambda(p) = +-(p^{7/64} + p^{-7/64}), the largest magnitude the
    /// Kim-Sarnak bound permits.
    Stress {
        sign: SignRule,
    },
}

impl PrimeCoefficientSource {
    /// Parse the prime coefficient file format: one `<p> <lambda_p>` record
    /// per line, `#` starts a comment, primes strictly increasing.
    pub fn from_file(path: &Path) -> Result<Self> {
        let display = path.display().to_string();
        let file = std::fs::File::open(path)?;
        let mut entries = BTreeMap::new();
        let mut last_p: u64 = 0;
        for (idx, line) in BufReader::new(file).lines().enumerate() {
            let line = line?;
            let body = line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let err = |msg: String| Error::CoefficientFile {
                path: display.clone(),
                line: idx + 1,
                msg,
            };
            let mut parts = body.split_whitespace();
            let (p_str, v_str) = match (parts.next(), parts.next(), parts.next()) {
                (Some(p), Some(v), None) => (p, v),
                _ => return Err(err("expected `<p> <lambda_p>`".into())),
            };
            let p: u64 = p_str
                .parse()
                .map_err(|e| err(format!("bad prime `{p_str}`: {e}")))?;
            let v: f64 = v_str
                .parse()
                .map_err(|e| err(format!("bad coefficient `{v_str}`: {e}")))?;
            if !v.is_finite() {
                return Err(err(format!("coefficient for p={p} not finite")));
            }
            if p <= last_p {
                return Err(err(format!("primes not strictly increasing at {p}")));
            }
            last_p = p;
            entries.insert(p, v);
        }
        Ok(PrimeCoefficientSource::File {
            entries,
            descriptor: format!("file:{display}"),
        })
    }

    /// The trivial source lambda(p) = 1 on the given primes (used by the
    /// Remark 1 exactness check). Realized as a File model so it exercises
    /// the same code path as ingested data.
    pub fn trivial(primes: &[u64]) -> Self {
        PrimeCoefficientSource::File {
            entries: primes.iter().map(|&p| (p, 1.0)).collect(),
            descriptor: "trivial".into(),
        }
    }

    pub fn descriptor(&self) -> String {
        match self {
            PrimeCoefficientSource::File { descriptor, .. } => descriptor.clone(),
            PrimeCoefficientSource::SatoTate { seed } => format!("sato-tate:seed={seed}"),
            PrimeCoefficientSource::Stress { sign } => match sign {
                SignRule::AllPlus => "stress:plus".into(),
                SignRule::Alternating => "stress:alternating".into(),
            },
        }
    }

    /// lambda(p) for the prime with the given ascending index.
    pub fn lambda_p(&self, p: u64, prime_index: usize) -> Result<f64> {
        match self {
            PrimeCoefficientSource::File { entries, .. } => entries
                .get(&p)
                .copied()
                .ok_or(Error::MissingPrimeCoefficient(p)),
            PrimeCoefficientSource::SatoTate { seed } => Ok(sample_sato_tate(*seed, p)),
            PrimeCoefficientSource::Stress { sign } => {
                let t = (p as f64).powf(KIM_SARNAK);
                let mag = t + 1.0 / t;
                Ok(match sign {
                    SignRule::AllPlus => mag,
                    SignRule::Alternating => {
                        if prime_index % 2 == 0 {
                            mag
                        } else {
                            -mag
                        }
                    }
                })
            }
        }
    }

    /// Write the coefficient file for all primes <= x_max. Output depends
    /// only on the source and the prime list, so fixed configs produce
    /// byte-identical files.
    pub fn write_file(&self, path: &Path, primes: &[u64]) -> Result<()> {
        let mut out = String::new();
        writeln!(out, "# prime coefficient table ({})", self.descriptor()).unwrap();
        writeln!(out, "# format: <p> <lambda_p>").unwrap();
        for (i, &p) in primes.iter().enumerate() {
            writeln!(out, "{p} {:.16e}", self.lambda_p(p, i)?).unwrap();
        }
        let mut f = std::fs::File::create(path)?;
        f.write_all(out.as_bytes())?;
        Ok(())
    }
}

/// Satake parameters at one prime: roots of z^2 - lambda_p z + 1.
#[derive(Clone, Copy, Debug)]
pub struct SatakePair {
    pub alpha: Complex64,
    pub beta: Complex64,
}

/// Split lambda_p into Satake parameters. |alpha| >= |beta|, ties broken by
/// nonnegative imaginary part of alpha.
pub fn satake_split(lambda_p: f64) -> SatakePair {
    let disc = lambda_p * lambda_p - 4.0;
    if disc >= 0.0 {
        // real reciprocal pair
        let s = if lambda_p >= 0.0 { 1.0 } else { -1.0 };
        let big = s * (lambda_p.abs() + disc.sqrt()) / 2.0;
        let small = if big == 0.0 { 0.0 } else { 1.0 / big };
        SatakePair {
            alpha: Complex64::new(big, 0.0),
            beta: Complex64::new(small, 0.0),
        }
    } else {
        // unit-modulus conjugates; alpha takes the upper half-plane root
        let im = (-disc).sqrt() / 2.0;
        SatakePair {
            alpha: Complex64::new(lambda_p / 2.0, im),
            beta: Complex64::new(lambda_p / 2.0, -im),
        }
    }
}

/// lambda(p^0)..lambda(p^nu_max) by the Hecke recursion
/// lambda(p^nu) = lambda_p * lambda(p^{nu-1}) - lambda(p^{nu-2}).
pub fn prime_power_coeffs(lambda_p: f64, nu_max: usize) -> Vec<f64> {
    let mut c = Vec::with_capacity(nu_max + 1);
    c.push(1.0);
    if nu_max == 0 {
        return c;
    }
    c.push(lambda_p);
    for nu in 2..=nu_max {
        let next = lambda_p * c[nu - 1] - c[nu - 2];
        c.push(next);
    }
    c
}

fn splitmix_mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Sato-Tate cumulative distribution of the angle theta.
fn sato_tate_cdf(theta: f64) -> f64 {
    (theta - theta.sin() * theta.cos()) / std::f64::consts::PI
}

/// Draw lambda_p = 2 cos(theta) with theta distributed as (2/pi) sin^2.
/// Deterministic per (seed, p): the uniform variate is a splitmix64 hash of
/// the pair, the angle comes from 60 bisection steps on the CDF.
pub fn sample_sato_tate(seed: u64, p: u64) -> f64 {
    let z = splitmix_mix(seed ^ p.wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let u = (z >> 11) as f64 * (1.0 / 9007199254740992.0); // [0, 1)
    let (mut lo, mut hi) = (0.0_f64, std::f64::consts::PI);
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if sato_tate_cdf(mid) < u {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    2.0 * (0.5 * (lo + hi)).cos()
}

/// delta_m = 1 - 4(m+1)/(pi m (m+2)) * cot(pi / (2(m+1))).
pub fn delta_m(m: u64) -> f64 {
    let m = m as f64;
    let angle = std::f64::consts::PI / (2.0 * (m + 1.0));
    let cot = angle.cos() / angle.sin();
    1.0 - 4.0 * (m + 1.0) / (std::f64::consts::PI * m * (m + 2.0)) * cot
}

/// Dense eigenvalue table over [1, x_max].
pub struct CoefficientTable {
    x_max: u64,
    lambda: Vec<f64>,
    lambda_star: Option<Vec<f64>>,
    source_descriptor: String,
}

impl CoefficientTable {
    /// Fill lambda(n) for all n <= x_max: prime powers by the Hecke
    /// recursion, the rest by the multiplicative identity
    /// lambda(n) = lambda(p^a) * lambda(n / p^a) with p = spf(n).
    pub fn build(
        source: &PrimeCoefficientSource,
        x_max: u64,
        factors: &FactorTable,
    ) -> Result<CoefficientTable> {
        if x_max > factors.x_max() {
            return Err(Error::OutOfRange {
                value: x_max,
                limit: factors.x_max(),
            });
        }
        let mut lambda = vec![0.0f64; (x_max + 1) as usize];
        if x_max >= 1 {
            lambda[1] = 1.0;
        }

        // prime powers first
        for (i, &p) in factors.primes().iter().enumerate() {
            if p > x_max {
                break;
            }
            let lp = source.lambda_p(p, i)?;
            if let PrimeCoefficientSource::File { .. } = source {
                if !factors.is_prime(p) {
                    return Err(Error::CoefficientFile {
                        path: source.descriptor(),
                        line: 0,
                        msg: format!("{p} is not prime"),
                    });
                }
            }
            let mut nu_max = 0usize;
            let mut q = 1u64;
            while q <= x_max / p {
                q *= p;
                nu_max += 1;
            }
            let coeffs = prime_power_coeffs(lp, nu_max);
            let mut q = 1u64;
            for c in coeffs.iter().skip(1) {
                q *= p;
                lambda[q as usize] = *c;
            }
        }

        // ascending multiplicative fill: n = q * m, q = spf-power, m coprime
        fill_multiplicative(&mut lambda, factors);

        Ok(CoefficientTable {
            x_max,
            lambda,
            lambda_star: None,
            source_descriptor: source.descriptor(),
        })
    }

    pub fn x_max(&self) -> u64 {
        self.x_max
    }

    pub fn source_descriptor(&self) -> &str {
        &self.source_descriptor
    }

    pub fn lambda(&self, n: u64) -> Result<f64> {
        if n < 1 || n > self.x_max {
            return Err(Error::OutOfRange {
                value: n,
                limit: self.x_max,
            });
        }
        Ok(self.lambda[n as usize])
    }

    /// Raw slice, index n. Entry 0 is unused.
    pub fn lambda_slice(&self) -> &[f64] {
        &self.lambda
    }

    pub fn lambda_star(&self, n: u64) -> Result<f64> {
        let ls = self
            .lambda_star
            .as_ref()
            .ok_or_else(|| Error::domain("lambda_star not built; call build_lambda_star first"))?;
        if n < 1 || n > self.x_max {
            return Err(Error::OutOfRange {
                value: n,
                limit: self.x_max,
            });
        }
        Ok(ls[n as usize])
    }

    pub fn lambda_star_slice(&self) -> Option<&[f64]> {
        self.lambda_star.as_deref()
    }

    /// |lambda(m)lambda(n) - sum_{d | gcd(m,n)} lambda(mn/d^2)|.
    pub fn verify_hecke_relation(&self, factors: &FactorTable, m: u64, n: u64) -> Result<f64> {
        let mn = m.checked_mul(n).ok_or(Error::OutOfRange {
            value: u64::MAX,
            limit: self.x_max,
        })?;
        if mn > self.x_max {
            return Err(Error::OutOfRange {
                value: mn,
                limit: self.x_max,
            });
        }
        let g = gcd(m, n);
        let mut sum = 0.0;
        for d in divisors(factors, g)? {
            sum += self.lambda[(mn / (d * d)) as usize];
        }
        Ok((self.lambda[m as usize] * self.lambda[n as usize] - sum).abs())
    }

    /// Expand the local Euler factor of L(s,sym4 f) L^3(s,sym2 f) zeta^2(s)
    /// at every prime and assemble lambda*(n) multiplicatively. The sixteen
    /// inverse roots are alpha^4, beta^4, alpha^2 (x4), beta^2 (x4), 1 (x6).
    pub fn build_lambda_star(&mut self, factors: &FactorTable) -> Result<()> {
        if self.lambda_star.is_some() {
            return Ok(());
        }
        let x_max = self.x_max;
        let mut star = vec![0.0f64; (x_max + 1) as usize];
        if x_max >= 1 {
            star[1] = 1.0;
        }

        for &p in factors.primes() {
            if p > x_max {
                break;
            }
            let mut nu_max = 0usize;
            let mut q = 1u64;
            while q <= x_max / p {
                q *= p;
                nu_max += 1;
            }
            let coeffs = local_majorant_coeffs(self.lambda[p as usize], nu_max, p)?;
            let mut q = 1u64;
            for c in coeffs.iter().skip(1) {
                q *= p;
                star[q as usize] = *c;
            }
        }

        fill_multiplicative(&mut star, factors);
        self.lambda_star = Some(star);
        Ok(())
    }
}

/// Multiplicative fill shared by lambda and lambda*: prime-power entries are
/// already in place; every other n picks up f(n) = f(p^a) f(m) with
/// p = spf(n), p^a || n, m = n / p^a < n already filled.
fn fill_multiplicative(values: &mut [f64], factors: &FactorTable) {
    for n in 2..values.len() as u64 {
        let p = factors.spf(n).expect("n within factor table");
        let mut q = p;
        let mut m = n / p;
        while m % p == 0 {
            m /= p;
            q *= p;
        }
        if m > 1 {
            values[n as usize] = values[q as usize] * values[m as usize];
        }
    }
}

/// Series coefficients of the local majorant factor
/// [(1-a^4 t)(1-b^4 t)]^{-1} [(1-a^2 t)(1-b^2 t)]^{-4} [(1-t)]^{-6}
/// up to the given degree, realified.
fn local_majorant_coeffs(lambda_p: f64, degree: usize, p: u64) -> Result<Vec<f64>> {
    let SatakePair { alpha, beta } = satake_split(lambda_p);
    let a2 = alpha * alpha;
    let b2 = beta * beta;
    let one = Complex64::new(1.0, 0.0);
    let roots = [
        a2 * a2,
        b2 * b2,
        a2,
        a2,
        a2,
        a2,
        b2,
        b2,
        b2,
        b2,
        one,
        one,
        one,
        one,
        one,
        one,
    ];

    // denominator polynomial D(t) = prod (1 - r t), degree 16
    let mut den = vec![Complex64::new(0.0, 0.0); 17];
    den[0] = one;
    let mut len = 1;
    for r in roots {
        for i in (1..=len).rev() {
            let sub = den[i - 1] * r;
            den[i] -= sub;
        }
        len += 1;
    }

    // power series inverse: c_0 = 1, c_k = -sum_{j=1..min(k,16)} den_j c_{k-j}
    let mut c = vec![Complex64::new(0.0, 0.0); degree + 1];
    c[0] = one;
    for k in 1..=degree {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 1..=k.min(16) {
            acc += den[j] * c[k - j];
        }
        c[k] = -acc;
    }

    let mut out = Vec::with_capacity(degree + 1);
    for (k, v) in c.iter().enumerate() {
        let scale = 1.0 + v.re.abs();
        if v.im.abs() > REALIFY_TOL * scale {
            return Err(Error::NonRealCoefficient {
                p,
                degree: k,
                imag: v.im.abs(),
            });
        }
        out.push(v.re);
    }
    Ok(out)
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// All divisors of n, via the factor table. Order unspecified.
fn divisors(factors: &FactorTable, n: u64) -> Result<Vec<u64>> {
    let f = factors.factorize(n)?;
    let mut out = vec![1u64];
    for (p, a) in f.pairs {
        let prev = out.len();
        let mut pk = 1u64;
        for _ in 0..a {
            pk *= p;
            for i in 0..prev {
                out.push(out[i] * pk);
            }
        }
    }
    Ok(out)
}

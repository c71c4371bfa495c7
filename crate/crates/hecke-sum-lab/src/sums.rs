//! Streaming partial-sum engine: S(x) = sum of w(n) and its logarithmic
//! companion L(x) = sum of w(n)/n, recorded at checkpoints in one pass.

use crate::error::{Error, Result};
use crate::hecke::CoefficientTable;
use crate::parallel::{sum_pair_indexed, Kahan};
use crate::sieve::{FactorTable, SetKind};

/// Pointwise nonnegative weights the engine understands. Each is a product
/// of an eigenvalue power and a set indicator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightKind {
    One,
    AbsMu,
    AbsLambda,
    AbsLambdaMu,
    AbsLambda4,
    LambdaStar,
    /// |lambda(n)| restricted to cubefree n.
    AbsLambdaH3,
}

impl WeightKind {
    pub fn descriptor(self) -> &'static str {
        match self {
            WeightKind::One => "one",
            WeightKind::AbsMu => "abs-mu",
            WeightKind::AbsLambda => "abs-lambda",
            WeightKind::AbsLambdaMu => "abs-lambda-mu",
            WeightKind::AbsLambda4 => "abs-lambda4",
            WeightKind::LambdaStar => "lambda-star",
            WeightKind::AbsLambdaH3 => "abs-lambda-h3",
        }
    }

    pub fn parse(s: &str) -> Result<WeightKind> {
        Ok(match s {
            "one" => WeightKind::One,
            "abs-mu" => WeightKind::AbsMu,
            "abs-lambda" => WeightKind::AbsLambda,
            "abs-lambda-mu" => WeightKind::AbsLambdaMu,
            "abs-lambda4" => WeightKind::AbsLambda4,
            "lambda-star" => WeightKind::LambdaStar,
            "abs-lambda-h3" => WeightKind::AbsLambdaH3,
            _ => {
                return Err(Error::Usage(format!(
                    "unknown weight `{s}` (try one, abs-mu, abs-lambda, abs-lambda-mu, \
                     abs-lambda4, lambda-star, abs-lambda-h3)"
                )))
            }
        })
    }

    pub fn needs_lambda(self) -> bool {
        !matches!(self, WeightKind::One | WeightKind::AbsMu)
    }
}

/// Shared evaluation context.
pub struct WeightCtx<'a> {
    pub factors: &'a FactorTable,
    pub coeffs: Option<&'a CoefficientTable>,
}

impl<'a> WeightCtx<'a> {
    pub fn eval(&self, kind: WeightKind, n: u64) -> Result<f64> {
        let lam = |n: u64| -> Result<f64> {
            self.coeffs
                .ok_or_else(|| Error::domain("weight needs a coefficient table"))
                .and_then(|t| t.lambda(n))
        };
        Ok(match kind {
            WeightKind::One => 1.0,
            WeightKind::AbsMu => self.factors.moebius(n)?.unsigned_abs() as f64,
            WeightKind::AbsLambda => lam(n)?.abs(),
            WeightKind::AbsLambdaMu => {
                if self.factors.moebius(n)? == 0 {
                    0.0
                } else {
                    lam(n)?.abs()
                }
            }
            WeightKind::AbsLambda4 => lam(n)?.abs().powi(4),
            WeightKind::LambdaStar => self
                .coeffs
                .ok_or_else(|| Error::domain("weight needs a coefficient table"))
                .and_then(|t| t.lambda_star(n))?,
            WeightKind::AbsLambdaH3 => {
                if self.factors.indicator(n, SetKind::KFree(3))? == 1 {
                    lam(n)?.abs()
                } else {
                    0.0
                }
            }
        })
    }
}

/// Partial sums recorded at increasing checkpoints.
#[derive(Clone, Debug)]
pub struct SumSeries {
    pub weight_descriptor: String,
    pub checkpoints: Vec<u64>,
    pub s_values: Vec<f64>,
    pub l_values: Vec<f64>,
}

impl SumSeries {
    /// CSV rows `x,S,L`, floats with 17 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,S,L\n");
        for (i, &x) in self.checkpoints.iter().enumerate() {
            out.push_str(&format!(
                "{x},{:.16e},{:.16e}\n",
                self.s_values[i], self.l_values[i]
            ));
        }
        out
    }
}

/// One pass over [1, max checkpoint], accumulating S and L with compensated
/// summation; deterministic for any worker count.
pub fn partial_sums(
    kind: WeightKind,
    ctx: &WeightCtx,
    checkpoints: &[u64],
    workers: usize,
) -> Result<SumSeries> {
    if checkpoints.is_empty() {
        return Err(Error::domain("no checkpoints supplied"));
    }
    let mut sorted = checkpoints.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let top = *sorted.last().unwrap();
    if top > ctx.factors.x_max() {
        return Err(Error::OutOfRange {
            value: top,
            limit: ctx.factors.x_max(),
        });
    }
    if let Some(t) = ctx.coeffs {
        if kind.needs_lambda() && top > t.x_max() {
            return Err(Error::OutOfRange {
                value: top,
                limit: t.x_max(),
            });
        }
    }

    // probe for required tables before entering the parallel region
    ctx.eval(kind, 1)?;

    let term = |n: u64| -> (f64, f64) {
        let w = ctx.eval(kind, n).expect("tables cover the range");
        (w, w / n as f64)
    };

    let mut s_acc = Kahan::new();
    let mut l_acc = Kahan::new();
    let mut s_values = Vec::with_capacity(sorted.len());
    let mut l_values = Vec::with_capacity(sorted.len());
    let mut lo = 1u64;
    for &cp in &sorted {
        let (ds, dl) = sum_pair_indexed(lo, cp + 1, workers, term);
        s_acc.add(ds);
        l_acc.add(dl);
        s_values.push(s_acc.value());
        l_values.push(l_acc.value());
        lo = cp + 1;
    }

    Ok(SumSeries {
        weight_descriptor: kind.descriptor().into(),
        checkpoints: sorted,
        s_values,
        l_values,
    })
}

//! High-precision real matrices with optional exact (rational) content.

use std::fmt;
use std::str::FromStr;

use dashu_float::ops::{Abs, SquareRoot};
use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, parse_rational, strip_comment, Rational, RationalMatrix};

/// Binary floating point with round-half-even.
pub type Real = FBig<HalfEven, 2>;

pub const DEFAULT_PRECISION: usize = 128;
pub const MIN_PRECISION: usize = 64;

pub fn real_int(v: i128, precision: usize) -> Real {
    Real::from(IBig::from(v)).with_precision(precision).value()
}

pub fn real_bigint(v: &BigInt, precision: usize) -> Real {
    let big = IBig::from_str(&v.to_string()).expect("decimal integer");
    Real::from(big).with_precision(precision).value()
}

pub fn real_rational(r: &Rational, precision: usize) -> Real {
    real_bigint(r.numer(), precision) / real_bigint(r.denom(), precision)
}

pub fn real_f64(x: f64, precision: usize) -> Real {
    Real::try_from(x).expect("finite f64").with_precision(precision).value()
}

pub fn to_f64(x: &Real) -> f64 {
    x.to_f64().value()
}

/// Natural logarithm as an `f64`; `-inf` for zero.
pub fn ln_f64(x: &Real) -> f64 {
    if x.repr().is_zero() {
        f64::NEG_INFINITY
    } else {
        to_f64(&x.ln())
    }
}

/// Parses a decimal such as `-1.25e-3` exactly.
pub fn parse_decimal(token: &str) -> Option<Rational> {
    let t = token.trim();
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, (-scale) as usize))
    };
    if neg {
        r = -r;
    }
    Some(r)
}

/// One matrix entry. Only `Rational` entries are exact; everything else is
/// evaluated at the matrix precision.
#[derive(Clone, Debug, PartialEq)]
pub enum RealEntry {
    Rational(Rational),
    Sqrt { neg: bool, arg: Rational },
    Phi { neg: bool },
    Exp { neg: bool, arg: Rational },
    Approx(Real),
}

impl RealEntry {
    pub fn exact(&self) -> Option<&Rational> {
        match self {
            RealEntry::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn value(&self, precision: usize) -> Real {
        let sign = |neg: bool, x: Real| if neg { -x } else { x };
        match self {
            RealEntry::Rational(r) => real_rational(r, precision),
            RealEntry::Sqrt { neg, arg } => sign(*neg, real_rational(arg, precision).sqrt()),
            RealEntry::Phi { neg } => {
                let five = real_int(5, precision);
                sign(*neg, (real_int(1, precision) + five.sqrt()) / real_int(2, precision))
            }
            RealEntry::Exp { neg, arg } => sign(*neg, real_rational(arg, precision).exp()),
            RealEntry::Approx(x) => x.clone().with_precision(precision).value(),
        }
    }

    /// `p/q`, decimals, `phi`, `sqrt(x)`, `exp(x)`, each optionally negated.
    pub fn parse(token: &str) -> Option<RealEntry> {
        let t = token.trim();
        if let Some(r) = parse_rational(t).or_else(|| parse_decimal(t)) {
            return Some(RealEntry::Rational(r));
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, t),
        };
        if body == "phi" {
            return Some(RealEntry::Phi { neg });
        }
        let arg = |name: &str| -> Option<Rational> {
            let inner = body.strip_prefix(name)?.strip_prefix('(')?.strip_suffix(')')?;
            parse_rational(inner).or_else(|| parse_decimal(inner))
        };
        if let Some(a) = arg("sqrt") {
            return (!a.is_negative()).then_some(RealEntry::Sqrt { neg, arg: a });
        }
        arg("exp").map(|a| RealEntry::Exp { neg, arg: a })
    }
}

impl fmt::Display for RealEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let minus = |neg: bool| if neg { "-" } else { "" };
        match self {
            RealEntry::Rational(r) => write!(f, "{}", fmt_rational(r)),
            RealEntry::Sqrt { neg, arg } => write!(f, "{}sqrt({})", minus(*neg), fmt_rational(arg)),
            RealEntry::Phi { neg } => write!(f, "{}phi", minus(*neg)),
            RealEntry::Exp { neg, arg } => write!(f, "{}exp({})", minus(*neg), fmt_rational(arg)),
            RealEntry::Approx(x) => write!(f, "{}", x.to_decimal().value()),
        }
    }
}

/// `m x (m+n)` real matrix evaluated at a fixed working precision.
#[derive(Clone, Debug)]
pub struct RealMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RealEntry>,
    values: Vec<Real>,
    floats: Vec<f64>,
    precision: usize,
    exact: Option<RationalMatrix>,
}

impl RealMatrix {
    pub fn from_entries(
        rows: usize,
        cols: usize,
        entries: Vec<RealEntry>,
        precision: usize,
    ) -> Result<Self> {
        if precision < MIN_PRECISION {
            return Err(Error::Domain(format!(
                "precision {precision} below {MIN_PRECISION} bits"
            )));
        }
        if rows == 0 || cols < rows || entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix with rows <= cols",
                entries.len()
            )));
        }
        let values: Vec<Real> = entries.iter().map(|e| e.value(precision)).collect();
        let floats = values.iter().map(to_f64).collect();
        let exact = entries
            .iter()
            .map(|e| e.exact().cloned())
            .collect::<Option<Vec<_>>>()
            .map(|data| RationalMatrix::new(rows, cols, data).expect("shape checked"));
        Ok(RealMatrix { rows, cols, entries, values, floats, precision, exact })
    }

    pub fn from_rational(m: &RationalMatrix, precision: usize) -> Result<Self> {
        let entries = m.entries().iter().cloned().map(RealEntry::Rational).collect();
        Self::from_entries(m.rows(), m.cols(), entries, precision)
    }

    pub fn from_reals(rows: usize, cols: usize, values: Vec<Real>, precision: usize) -> Result<Self> {
        let entries = values.into_iter().map(RealEntry::Approx).collect();
        Self::from_entries(rows, cols, entries, precision)
    }

    /// Entries uniform in `[0, 1)` with 128 random bits each. These are never
    /// treated as exact.
    pub fn random<R: Rng>(rows: usize, cols: usize, rng: &mut R, precision: usize) -> Result<Self> {
        let values = (0..rows * cols)
            .map(|_| {
                let bits: u128 = rng.gen();
                Real::from_parts(IBig::from(bits), -128).with_precision(precision).value()
            })
            .collect();
        Self::from_reals(rows, cols, values, precision)
    }

    /// One row per line, entries separated by whitespace, `#` comments.
    pub fn parse(text: &str, precision: usize) -> Result<Self> {
        let mut rows: Vec<Vec<RealEntry>> = Vec::new();
        let mut first = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            if rows.is_empty() {
                first = idx + 1;
            }
            let row = line
                .split_whitespace()
                .map(|tok| {
                    RealEntry::parse(tok).ok_or_else(|| Error::Parse {
                        line: idx + 1,
                        msg: format!("not a real entry: `{tok}`"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse { line: first, msg: "no matrix rows".into() });
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Parse { line: first, msg: "rows have different lengths".into() });
        }
        let m = rows.len();
        Self::from_entries(m, cols, rows.into_iter().flatten().collect(), precision)
            .map_err(|e| Error::Parse { line: first, msg: e.to_string() })
    }

    pub fn with_precision(&self, precision: usize) -> Result<Self> {
        Self::from_entries(self.rows, self.cols, self.entries.clone(), precision)
    }

    pub fn m(&self) -> usize {
        self.rows
    }

    pub fn n(&self) -> usize {
        self.cols - self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn get(&self, i: usize, j: usize) -> &Real {
        &self.values[i * self.cols + j]
    }

    pub fn get_f64(&self, i: usize, j: usize) -> f64 {
        self.floats[i * self.cols + j]
    }

    pub fn exact(&self) -> Option<&RationalMatrix> {
        self.exact.as_ref()
    }

    pub fn entries(&self) -> &[RealEntry] {
        &self.entries
    }

    /// `M q` at working precision.
    pub fn apply(&self, q: &[i64]) -> Vec<Real> {
        (0..self.rows)
            .map(|i| {
                let mut acc = Real::ZERO.with_precision(self.precision).value();
                for (j, &c) in q.iter().enumerate() {
                    if c != 0 {
                        acc += self.get(i, j) * real_int(c as i128, self.precision);
                    }
                }
                acc
            })
            .collect()
    }

    /// `||M q||_inf` at working precision.
    pub fn quality(&self, q: &[i64]) -> Real {
        self.apply(q)
            .into_iter()
            .map(|x| x.abs())
            .fold(Real::ZERO.with_precision(self.precision).value(), |a, b| if b > a { b } else { a })
    }

    /// Exact `||M q||_inf` when every entry is rational.
    pub fn exact_quality(&self, q: &[i64]) -> Option<Rational> {
        let m = self.exact.as_ref()?;
        let v: Vec<Rational> = q.iter().map(|&x| Rational::from_integer(x.into())).collect();
        let img = m.mul_vec(&v).ok()?;
        Some(img.into_iter().map(|x| x.abs()).fold(Rational::zero(), |a, b| a.max(b)))
    }

    /// `||M q||_inf` in `f64` together with a bound on its rounding error.
    pub fn quality_f64(&self, q: &[i64]) -> (f64, f64) {
        let mut best = 0.0f64;
        let mut err = 0.0f64;
        for i in 0..self.rows {
            let row = &self.floats[i * self.cols..(i + 1) * self.cols];
            let mut acc = 0.0;
            let mut mag = 0.0;
            for (a, &c) in row.iter().zip(q) {
                let t = a * c as f64;
                acc += t;
                mag += t.abs();
            }
            best = best.max(acc.abs());
            err = err.max(mag);
        }
        (best, err * 8.0 * f64::EPSILON + f64::MIN_POSITIVE)
    }

    /// Maximum absolute row sum.
    pub fn row_sum_norm(&self) -> f64 {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get_f64(i, j).abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for RealMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.entries[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(|e| e.to_string())
                .collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::ratio;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_decimal("0.5"), Some(ratio(1, 2)));
        assert_eq!(parse_decimal("-1.25e-1"), Some(ratio(-1, 8)));
        assert_eq!(parse_decimal("3e2"), Some(ratio(300, 1)));
        assert_eq!(parse_decimal("abc"), None);
    }

    #[test]
    fn golden_ratio_entry() {
        let m = RealMatrix::parse("1 phi\n", 128).unwrap();
        assert!(m.exact().is_none());
        let phi = to_f64(m.get(0, 1));
        assert!((phi - (1.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        // phi^2 = phi + 1 to working precision
        let p = m.get(0, 1);
        let d = p * p - p - real_int(1, 128);
        assert!(to_f64(&d.abs()) < 1e-35);
    }

    #[test]
    fn rational_matrix_keeps_exact_content() {
        let m = RealMatrix::parse("1 0.5 # comment\n", 128).unwrap();
        assert!(m.exact().is_some());
        assert_eq!(m.exact_quality(&[1, -2]), Some(ratio(0, 1)));
        assert!(RealMatrix::parse("1 x", 128).is_err());
        assert!(RealMatrix::parse("1 2", 32).is_err());
    }
}

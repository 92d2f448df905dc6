//! Exponent fits over best-approximation records and the Dirichlet check.

use super::real::{ln_f64, Real, RealMatrix};
use super::search::{best_approx, BestApproxRecord, MethodChoice};
use crate::error::{Error, Result};
use crate::report::Report;

pub const MIN_RECORDS: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct ExponentEstimate {
    /// `>= 0`; `+inf` only after an exactly verified relation.
    pub beta_hat: f64,
    pub window: (u64, u64),
    pub records_used: usize,
    pub hull_points: usize,
    /// Root mean square deviation of the hull points from the fitted line.
    pub residual: f64,
    pub precision_bits: usize,
}

impl ExponentEstimate {
    pub fn is_infinite(&self) -> bool {
        self.beta_hat.is_infinite()
    }
}

pub fn fmt_beta(b: f64) -> String {
    if b.is_infinite() {
        "+inf".into()
    } else {
        format!("{b:.9}")
    }
}

/// Lower convex hull of points sorted by `x` (monotone chain).
fn lower_hull(points: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for &p in points {
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross <= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Least-squares slope of `log quality` against `-log norm` over the lower
/// convex envelope of the records with `norm` in `window`. An exactly zero
/// record in the window gives `+inf` whatever the record count.
///
/// Log-qualities are taken relative to the first record in the window, so
/// multiplying every quality by a power of two leaves the result unchanged
/// bit for bit.
pub fn fit_exponent(records: &[BestApproxRecord], window: (u64, u64)) -> Result<ExponentEstimate> {
    let used: Vec<&BestApproxRecord> =
        records.iter().filter(|r| r.norm >= window.0 && r.norm <= window.1).collect();
    let precision_bits = used.iter().map(|r| r.quality.precision()).max().unwrap_or(0);
    let base = ExponentEstimate {
        beta_hat: f64::INFINITY,
        window,
        records_used: used.len(),
        hull_points: 0,
        residual: 0.0,
        precision_bits,
    };
    if used.iter().any(|r| r.is_exact_zero()) {
        return Ok(base);
    }
    if used.len() < MIN_RECORDS {
        return Err(Error::TooFewRecords { need: MIN_RECORDS, have: used.len() });
    }
    let used: Vec<BestApproxRecord> = used.into_iter().cloned().collect();
    let pts = log_points(&used);
    if pts.iter().any(|p| !p.1.is_finite()) {
        return Err(Error::Domain("record with zero quality on an inexact matrix".into()));
    }
    let fit = envelope_fit(&pts).ok_or(Error::TooFewRecords { need: 2, have: 1 })?;
    Ok(ExponentEstimate {
        beta_hat: (-fit.slope).max(0.0),
        hull_points: fit.hull_points,
        residual: fit.residual,
        ..base
    })
}

/// `(log norm, log quality)` with qualities relative to the first record,
/// sorted by norm, one point per norm.
fn log_points(records: &[BestApproxRecord]) -> Vec<(f64, f64)> {
    let Some(first) = records.first() else { return Vec::new() };
    let reference: &Real = &first.quality;
    let mut pts: Vec<(f64, f64)> = records
        .iter()
        .map(|r| ((r.norm as f64).ln(), ln_f64(&(&r.quality / reference))))
        .collect();
    pts.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pts.dedup_by(|b, a| a.0 == b.0);
    pts
}

struct EnvelopeFit {
    slope: f64,
    residual: f64,
    hull_points: usize,
}

/// Least-squares line through the lower convex hull of `points` (sorted by
/// `x`, distinct `x`). `None` with fewer than two hull points.
fn envelope_fit(points: &[(f64, f64)]) -> Option<EnvelopeFit> {
    let hull = lower_hull(points);
    if hull.len() < 2 {
        return None;
    }
    let k = hull.len() as f64;
    let mx = hull.iter().map(|p| p.0).sum::<f64>() / k;
    let my = hull.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = hull.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = hull.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let residual =
        (hull.iter().map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2)).sum::<f64>() / k).sqrt();
    Some(EnvelopeFit { slope, residual, hull_points: hull.len() })
}

#[derive(Clone, Debug)]
pub struct ShellBound {
    pub shell: u32,
    /// `min(2^shell, max_norm)`.
    pub bound_norm: u64,
    /// `psi(Q)`: best quality over `||q|| <= Q`, `None` above the cutoff.
    pub best_so_far: Option<f64>,
    /// Pigeonhole bound `S Q^(-n/m)`, `S` the maximal absolute row sum.
    pub pigeonhole: f64,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct DirichletReport {
    pub m: usize,
    pub n: usize,
    pub max_norm: u64,
    pub records: Vec<BestApproxRecord>,
    /// Smallest `C` with `psi(Q) <= C Q^(-n/m)` on every shell bound.
    pub constant: f64,
    /// `S`, the constant the pigeonhole principle guarantees.
    pub pigeonhole_constant: f64,
    pub shells: Vec<ShellBound>,
    /// `-log psi(T) / log T`; `+inf` after an exact relation.
    pub envelope_exponent: f64,
    pub tolerance: f64,
    pub pigeonhole_ok: bool,
    pub floor_ok: bool,
    pub precision_bits: usize,
}

impl DirichletReport {
    pub fn floor(&self) -> f64 {
        self.n as f64 / self.m as f64
    }

    pub fn is_infinite(&self) -> bool {
        self.envelope_exponent.is_infinite()
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        r.push("m", self.m).push("n", self.n).push("max_norm", self.max_norm);
        r.push("norm", "sup");
        r.push("records", self.records.len());
        r.push("pigeonhole_constant", format!("{:.6e}", self.pigeonhole_constant));
        r.push("fitted_constant", format!("{:.6e}", self.constant));
        r.push("pigeonhole_ok", self.pigeonhole_ok);
        r.push("envelope_exponent", fmt_beta(self.envelope_exponent));
        r.push("floor", format!("{:.9}", self.floor()));
        r.push("tolerance", self.tolerance).push("floor_ok", self.floor_ok);
        r.push("precision_bits", self.precision_bits);
        r
    }
}

/// Checks `psi(Q) <= S Q^(-n/m)` at every shell bound `Q`, fits the smallest
/// constant `C` for which the same bound holds, and compares the envelope
/// exponent `-log psi(T) / log T` with `n/m - tolerance`.
///
/// The pigeonhole bound gives `envelope >= n/m - log S / log T` whenever the
/// search is complete, so a failing floor points at the search, not at `M`.
pub fn dirichlet_check(
    mat: &RealMatrix,
    max_norm: u64,
    tolerance: f64,
    method: MethodChoice,
) -> Result<DirichletReport> {
    let records = best_approx(mat, max_norm, method)?;
    let (m, n) = (mat.m(), mat.n());
    let e = n as f64 / m as f64;
    let s = mat.row_sum_norm();
    let theta = super::search::choose_split(mat)?.theta;
    let mut shells = Vec::new();
    let mut constant: f64 = 0.0;
    let mut best: Option<&BestApproxRecord> = None;
    let mut it = records.iter().peekable();
    for j in 0..=super::search::shell_of(max_norm) {
        let bound_norm = (1u64 << j).min(max_norm);
        while let Some(r) = it.next_if(|r| r.norm <= bound_norm) {
            best = Some(r);
        }
        let psi = best.map(|r| r.quality_f64());
        let pigeonhole = s * (bound_norm as f64).powf(-e);
        let holds = match psi {
            Some(v) => v <= pigeonhole * (1.0 + 1e-12),
            None => pigeonhole >= theta,
        };
        if let Some(v) = psi {
            constant = constant.max(v * (bound_norm as f64).powf(e));
        }
        shells.push(ShellBound { shell: j, bound_norm, best_so_far: psi, pigeonhole, holds });
    }
    let envelope_exponent = match records.last() {
        Some(r) if r.is_exact_zero() => f64::INFINITY,
        Some(r) if max_norm > 1 => (-ln_f64(&r.quality) / (max_norm as f64).ln()).max(0.0),
        _ => 0.0,
    };
    Ok(DirichletReport {
        m,
        n,
        max_norm,
        floor_ok: envelope_exponent >= e - tolerance,
        pigeonhole_ok: shells.iter().all(|b| b.holds),
        pigeonhole_constant: s,
        records,
        constant,
        shells,
        envelope_exponent,
        tolerance,
        precision_bits: mat.precision(),
    })
}

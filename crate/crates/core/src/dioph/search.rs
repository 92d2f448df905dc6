//! Dyadic-shell best approximations by exhaustive search and by lattice
//! reduction.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use super::lattice::{enumerate_ball, TrackedLattice, DEFAULT_DELTA};
use super::real::{real_f64, real_int, to_f64, Real, RealMatrix};
use crate::error::{Error, Result};
use crate::exactlin::{combinations, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Exhaustive,
    Lll,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::Lll => "lll",
        })
    }
}

/// Method requested by a caller; `Auto` picks exhaustive search when its
/// estimated cost is small.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MethodChoice {
    Exhaustive,
    Lll,
    Auto,
}

impl FromStr for MethodChoice {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(MethodChoice::Exhaustive),
            "lll" => Ok(MethodChoice::Lll),
            "auto" => Ok(MethodChoice::Auto),
            _ => Err(Error::Parse { line: 0, msg: format!("unknown method `{s}`") }),
        }
    }
}

/// Minimizer of `||M q||_inf` over one dyadic shell of `||q||_inf`.
#[derive(Clone, Debug)]
pub struct BestApproxRecord {
    /// First nonzero coordinate positive.
    pub q: Vec<i64>,
    pub norm: u64,
    pub quality: Real,
    /// Present exactly when the matrix is rational.
    pub exact_quality: Option<Rational>,
    pub method: Method,
}

impl BestApproxRecord {
    /// Shell index `j` with `2^(j-1) < norm <= 2^j`.
    pub fn shell(&self) -> u32 {
        shell_of(self.norm)
    }

    /// True only for an exactly verified integer relation.
    pub fn is_exact_zero(&self) -> bool {
        self.exact_quality.as_ref().is_some_and(|r| r.is_zero())
    }

    pub fn quality_f64(&self) -> f64 {
        to_f64(&self.quality)
    }

    fn cmp_quality(&self, other: &Self) -> Ordering {
        match (&self.exact_quality, &other.exact_quality) {
            (Some(a), Some(b)) => a.cmp(b),
            _ => self.quality.partial_cmp(&other.quality).unwrap_or(Ordering::Equal),
        }
    }

    fn cmp_rank(&self, other: &Self) -> Ordering {
        self.cmp_quality(other)
            .then(self.norm.cmp(&other.norm))
            .then_with(|| self.q.cmp(&other.q))
    }
}

pub fn shell_of(norm: u64) -> u32 {
    64 - (norm.max(1) - 1).leading_zeros()
}

fn normalize(q: &mut [i64]) {
    if q.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        q.iter_mut().for_each(|x| *x = -*x);
    }
}

fn score(m: &RealMatrix, mut q: Vec<i64>, method: Method) -> BestApproxRecord {
    normalize(&mut q);
    let norm = q.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
    let exact_quality = m.exact_quality(&q);
    let quality = match &exact_quality {
        Some(r) => super::real::real_rational(r, m.precision()),
        None => m.quality(&q),
    };
    BestApproxRecord { q, norm, quality, exact_quality, method }
}

/// Keeps the records that strictly improve on every earlier shell, stopping
/// after an exact zero.
fn strictly_improving(mut shells: Vec<BestApproxRecord>) -> Vec<BestApproxRecord> {
    shells.sort_by_key(|r| r.norm);
    let mut out: Vec<BestApproxRecord> = Vec::new();
    for r in shells {
        if out.last().is_some_and(|b| r.cmp_quality(b) != Ordering::Less) {
            continue;
        }
        let stop = r.is_exact_zero();
        out.push(r);
        if stop {
            break;
        }
    }
    out
}

/// Head columns `B` (invertible) and tail columns of `M = (B | C)` up to a
/// permutation, with `f64` data for locating heads near `-B^-1 C t`.
#[derive(Clone, Debug)]
pub struct Split {
    pub head: Vec<usize>,
    pub tail: Vec<usize>,
    /// `B^-1 C`, `m x n`.
    solve: Vec<Vec<f64>>,
    /// `||B^-1||_inf * theta`.
    radius: f64,
    /// Cutoff on quality, `||B||_inf`; rounding the heads of any tail
    /// already reaches half of it.
    pub theta: f64,
}

fn invert(b: &[Vec<f64>]) -> Option<(Vec<Vec<f64>>, f64)> {
    let m = b.len();
    let mut a: Vec<Vec<f64>> = b
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..m).map(|j| f64::from(u8::from(i == j))));
            row
        })
        .collect();
    let mut det = 1.0;
    for c in 0..m {
        let p = (c..m).max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs()))?;
        if a[p][c] == 0.0 {
            return None;
        }
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= a[c][c];
        let piv = a[c][c];
        a[c].iter_mut().for_each(|x| *x /= piv);
        for r in 0..m {
            if r != c {
                let f = a[r][c];
                if f != 0.0 {
                    let src = a[c].clone();
                    a[r].iter_mut().zip(&src).for_each(|(x, s)| *x -= f * s);
                }
            }
        }
    }
    Some((a.into_iter().map(|r| r[m..].to_vec()).collect(), det.abs()))
}

/// Prefers the first `m` columns; otherwise the lexicographically first
/// column set whose determinant is within a factor 4 of the largest.
pub fn choose_split(mat: &RealMatrix) -> Result<Split> {
    let (m, d) = (mat.m(), mat.cols());
    let block = |cols: &[usize]| -> Vec<Vec<f64>> {
        (0..m).map(|i| cols.iter().map(|&j| mat.get_f64(i, j)).collect()).collect()
    };
    let subsets = combinations(d, m);
    let dets: Vec<f64> =
        subsets.iter().map(|s| invert(&block(s)).map_or(0.0, |(_, det)| det)).collect();
    let best = dets.iter().cloned().fold(0.0, f64::max);
    if best == 0.0 {
        return Err(Error::Domain("matrix rank is below its row count".into()));
    }
    let pick = dets.iter().position(|&x| x >= best / 4.0).expect("maximum exists");
    let head = subsets[pick].clone();
    let tail: Vec<usize> = (0..d).filter(|j| !head.contains(j)).collect();
    let (binv, _) = invert(&block(&head)).expect("nonzero determinant");
    let c = block(&tail);
    let solve = (0..m)
        .map(|i| (0..tail.len()).map(|j| (0..m).map(|k| binv[i][k] * c[k][j]).sum()).collect())
        .collect();
    let row_norm = |a: &[Vec<f64>]| a.iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
    let theta = row_norm(&block(&head));
    let radius = row_norm(&binv) * theta;
    Ok(Split { head, tail, solve, radius, theta })
}

pub const DEFAULT_BUDGET: u64 = 50_000_000;
const AUTO_EXHAUSTIVE: f64 = 4.0e6;
const POOL_CAP: usize = 32;

/// Number of candidate vectors exhaustive search would score.
pub fn exhaustive_cost(mat: &RealMatrix, max_norm: u64) -> Result<f64> {
    let split = choose_split(mat)?;
    let tails = (2.0 * max_norm as f64 + 1.0).powi(split.tail.len() as i32) / 2.0 + 1.0;
    let heads = (2.0 * split.radius + 2.0).powi(split.head.len() as i32);
    Ok(tails * heads)
}

struct Pool {
    upper: f64,
    cands: Vec<(f64, Vec<i64>)>,
}

impl Pool {
    fn offer(&mut self, qf: f64, err: f64, q: &[i64]) {
        let lo = qf - err;
        if lo > self.upper {
            return;
        }
        let hi = qf + err;
        if hi < self.upper {
            self.upper = hi;
            self.cands.retain(|c| c.0 <= hi);
        }
        self.cands.push((lo, q.to_vec()));
        if self.cands.len() > 4 * POOL_CAP {
            self.cands.sort_by(|a, b| a.0.total_cmp(&b.0));
            self.cands.truncate(POOL_CAP);
        }
    }
}

/// Odometer step over the box `lo..=hi`; false once it wraps around.
fn advance(v: &mut [i64], lo: &[i64], hi: &[i64]) -> bool {
    for i in (0..v.len()).rev() {
        if v[i] < hi[i] {
            v[i] += 1;
            return true;
        }
        v[i] = lo[i];
    }
    false
}

fn shells_up_to(max_norm: u64) -> usize {
    shell_of(max_norm) as usize + 1
}

pub fn best_approx_exhaustive(mat: &RealMatrix, max_norm: u64) -> Result<Vec<BestApproxRecord>> {
    exhaustive_with_budget(mat, max_norm, DEFAULT_BUDGET)
}

/// Scores every `q` with `||q||_inf <= max_norm` whose heads lie within the
/// cutoff radius of `-B^-1 C t`. Fails with a budget error when more than
/// `budget` candidates would be scored.
pub fn exhaustive_with_budget(
    mat: &RealMatrix,
    max_norm: u64,
    budget: u64,
) -> Result<Vec<BestApproxRecord>> {
    if max_norm == 0 {
        return Err(Error::Domain("max norm must be at least 1".into()));
    }
    let cost = exhaustive_cost(mat, max_norm)?;
    if cost > budget as f64 {
        return Err(Error::Budget(format!(
            "exhaustive search needs about {cost:.3e} candidates (budget {budget}); use the lll method"
        )));
    }
    let split = choose_split(mat)?;
    let (m, n) = (split.head.len(), split.tail.len());
    let t_max = max_norm as i64;
    let cutoff = split.theta * (1.0 + 1e-9);
    let mut pools: Vec<Pool> =
        (0..shells_up_to(max_norm)).map(|_| Pool { upper: cutoff, cands: Vec::new() }).collect();
    let t_lo = vec![-t_max; n];
    let t_hi = vec![t_max; n];
    let mut t = t_lo.clone();
    let mut h = vec![0i64; m];
    let mut q = vec![0i64; m + n];
    let mut lo = vec![0i64; m];
    let mut hi = vec![0i64; m];
    loop {
        let t_zero = t.iter().all(|&x| x == 0);
        let t_half = t.iter().find(|&&x| x != 0).is_none_or(|&x| x > 0);
        if t_half {
            for i in 0..m {
                let centre = -split.solve[i].iter().zip(&t).map(|(a, &b)| a * b as f64).sum::<f64>();
                let slack = split.radius + 1e-9 * (1.0 + centre.abs());
                lo[i] = (centre - slack).ceil() as i64;
                hi[i] = (centre + slack).floor() as i64;
            }
            for (j, &c) in split.tail.iter().enumerate() {
                q[c] = t[j];
            }
            if lo.iter().zip(&hi).all(|(a, b)| a <= b) {
                h.copy_from_slice(&lo);
                loop {
                    let skip = t_zero && h.iter().find(|&&x| x != 0).is_none_or(|&x| x < 0);
                    if !skip {
                        for (i, &c) in split.head.iter().enumerate() {
                            q[c] = h[i];
                        }
                        let norm = q.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0);
                        if norm <= max_norm {
                            let (qf, err) = mat.quality_f64(&q);
                            pools[shell_of(norm) as usize].offer(qf, err, &q);
                        }
                    }
                    if !advance(&mut h, &lo, &hi) {
                        break;
                    }
                }
            }
        }
        if !advance(&mut t, &t_lo, &t_hi) {
            break;
        }
    }
    let theta = real_f64(split.theta, mat.precision());
    let mut shells = Vec::new();
    for pool in pools {
        let best = pool
            .cands
            .into_iter()
            .map(|(_, q)| score(mat, q, Method::Exhaustive))
            .filter(|r| r.quality <= theta)
            .min_by(|a, b| a.cmp_rank(b));
        shells.extend(best);
    }
    Ok(strictly_improving(shells))
}

/// `(M q / delta, q / Q)`: the box `||Mq|| <= delta, ||q|| <= Q` sits inside
/// the ball of radius `sqrt(2m + n)`.
fn box_embedding(delta: f64, bound: f64) -> impl Fn(&RealMatrix, &[i64]) -> Vec<Real> {
    move |mat: &RealMatrix, q: &[i64]| {
        let p = mat.precision();
        let inv_d = real_int(1, p) / real_f64(delta, p);
        let inv_q = real_int(1, p) / real_f64(bound, p);
        let mut v: Vec<Real> = mat.apply(q).into_iter().map(|x| x * &inv_d).collect();
        v.extend(q.iter().map(|&c| real_int(c as i128, p) * &inv_q));
        v
    }
}

const ENUM_LIMIT: usize = 200_000;

/// Every nonzero `q` (one per sign) with `||q|| <= bound` and quality at most
/// `delta`, or `None` when the enumeration would be too large.
fn points_in_box(
    lat: &mut TrackedLattice,
    bound: u64,
    delta: f64,
) -> Result<Option<Vec<BestApproxRecord>>> {
    let red = lat.reduce(box_embedding(delta, bound as f64))?;
    let mat = lat.matrix().clone();
    let dim = (2 * mat.m() + mat.n()) as f64;
    let Some(xs) = enumerate_ball(&red.gso, dim * (1.0 + 1e-6), ENUM_LIMIT) else {
        return Ok(None);
    };
    let limit = real_f64(delta, mat.precision());
    let mut out = Vec::new();
    for x in xs {
        let q = lat.combine(&x)?;
        if q.iter().any(|c| c.unsigned_abs() > bound) {
            continue;
        }
        let (qf, err) = mat.quality_f64(&q);
        if qf - err > delta {
            continue;
        }
        let r = score(&mat, q, Method::Lll);
        if r.quality <= limit {
            out.push(r);
        }
    }
    Ok(Some(out))
}

fn shell_minimum(
    lat: &mut TrackedLattice,
    lower: u64,
    upper: u64,
    cap: f64,
    start: f64,
) -> Result<Option<BestApproxRecord>> {
    let mut delta = start.min(cap);
    let mut empty_at: Option<f64> = None;
    let mut crowded_at: Option<f64> = None;
    for _ in 0..400 {
        match points_in_box(lat, upper, delta)? {
            None => {
                crowded_at = Some(delta);
                delta = match empty_at {
                    Some(lo) => (lo * delta).sqrt(),
                    None => delta / 16.0,
                };
            }
            Some(points) => {
                let best = points.into_iter().filter(|r| r.norm > lower).min_by(|a, b| a.cmp_rank(b));
                if best.is_some() {
                    return Ok(best);
                }
                if delta >= cap {
                    return Ok(None);
                }
                empty_at = Some(delta);
                delta = match crowded_at {
                    Some(hi) => (delta * hi).sqrt(),
                    None => (4.0 * delta).min(cap),
                };
            }
        }
        if let (Some(lo), Some(hi)) = (empty_at, crowded_at) {
            if hi <= lo * (1.0 + 1e-9) {
                break;
            }
        }
    }
    Err(Error::Budget(format!("shell ({lower}, {upper}] too crowded to enumerate")))
}

/// Shell minimizers from lattice reduction of `(M q / delta, q / Q)` for each
/// shell bound `Q`, with `delta` adapted until the shell is hit.
pub fn best_approx_lll(mat: &RealMatrix, max_norm: u64) -> Result<Vec<BestApproxRecord>> {
    if max_norm == 0 {
        return Err(Error::Domain("max norm must be at least 1".into()));
    }
    let split = choose_split(mat)?;
    let (m, n) = (mat.m() as f64, mat.n() as f64);
    let s = mat.row_sum_norm().max(f64::MIN_POSITIVE);
    let mut lat = TrackedLattice::new(mat, DEFAULT_DELTA);
    let mut out: Vec<BestApproxRecord> = Vec::new();
    for j in 0..shells_up_to(max_norm) as u32 {
        let upper = (1u64 << j).min(max_norm);
        let lower = if j == 0 { 0 } else { 1u64 << (j - 1) };
        let mut cap = split.theta;
        if let Some(b) = out.last() {
            cap = cap.min(b.quality_f64() * (1.0 + 1e-9));
        }
        let start = s * (upper as f64).powf(-n / m);
        if let Some(r) = shell_minimum(&mut lat, lower, upper, cap, start)? {
            let better = out.last().is_none_or(|b| r.cmp_quality(b) == Ordering::Less);
            if better {
                let stop = r.is_exact_zero();
                out.push(r);
                if stop {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Runs the requested method; `Auto` uses exhaustive search when it is cheap.
pub fn best_approx(
    mat: &RealMatrix,
    max_norm: u64,
    method: MethodChoice,
) -> Result<Vec<BestApproxRecord>> {
    match method {
        MethodChoice::Exhaustive => best_approx_exhaustive(mat, max_norm),
        MethodChoice::Lll => best_approx_lll(mat, max_norm),
        MethodChoice::Auto => {
            if exhaustive_cost(mat, max_norm)? <= AUTO_EXHAUSTIVE {
                best_approx_exhaustive(mat, max_norm)
            } else {
                best_approx_lll(mat, max_norm)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn golden() -> RealMatrix {
        RealMatrix::parse("1 phi", 128).unwrap()
    }

    #[test]
    fn shells_are_dyadic() {
        assert_eq!(shell_of(1), 0);
        assert_eq!(shell_of(2), 1);
        assert_eq!(shell_of(3), 2);
        assert_eq!(shell_of(4), 2);
        assert_eq!(shell_of(5), 3);
    }

    #[test]
    fn rational_kernel_is_found_exactly() {
        let m = RealMatrix::parse("1 1/2", 128).unwrap();
        let recs = best_approx_exhaustive(&m, 8).unwrap();
        let last = recs.last().unwrap();
        assert_eq!(last.q, vec![1, -2]);
        assert!(last.is_exact_zero());
        let recs = best_approx_lll(&m, 8).unwrap();
        assert_eq!(recs.last().unwrap().q, vec![1, -2]);
    }

    #[test]
    fn designed_relation_at_unit_norm() {
        let m = RealMatrix::parse("1 0.5 0.5", 128).unwrap();
        let recs = best_approx_exhaustive(&m, 1).unwrap();
        // (0, 1, -1) ties with (1, -1, -1); ties go to the lexicographically smaller q
        assert_eq!(recs.last().unwrap().q, vec![0, 1, -1]);
        assert!(recs.last().unwrap().is_exact_zero());
        assert_eq!(m.exact_quality(&[1, -1, -1]), Some(crate::exactlin::rat(0)));
    }

    #[test]
    fn golden_minimizers_are_fibonacci() {
        let m = golden();
        let ex = best_approx_exhaustive(&m, 1000).unwrap();
        let ll = best_approx_lll(&m, 1000).unwrap();
        let fib: Vec<Vec<i64>> = ex.iter().map(|r| r.q.clone()).collect();
        assert_eq!(fib, ll.iter().map(|r| r.q.clone()).collect::<Vec<_>>());
        assert_eq!(fib[0], vec![1, -1]);
        assert_eq!(fib[1], vec![2, -1]);
        assert!(fib.contains(&vec![987, -610]));
    }

    #[test]
    fn budget_error_for_large_searches() {
        let m = RealMatrix::parse("1 phi sqrt(2)", 128).unwrap();
        assert!(matches!(exhaustive_with_budget(&m, 10_000, 1000), Err(Error::Budget(_))));
    }
}

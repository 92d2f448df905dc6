//! LLL reduction in high precision and Fincke–Pohst enumeration.

use dashu_float::ops::Abs;
use dashu_int::IBig;

use super::real::{real_int, to_f64, Real, RealMatrix};
use crate::error::{Error, Result};

pub const DEFAULT_DELTA: f64 = 0.99;
const MAX_PRECISION: usize = 4096;

/// Reduced basis `transform * input`, with `|det transform| = 1`.
#[derive(Clone, Debug)]
pub struct LllOutput {
    pub basis: Vec<Vec<Real>>,
    pub transform: Vec<Vec<i128>>,
    pub precision_bits: usize,
}

/// Gram–Schmidt data rounded to `f64`, enough to drive enumeration.
#[derive(Clone, Debug)]
pub struct GsoF64 {
    pub mu: Vec<Vec<f64>>,
    pub bsq: Vec<f64>,
}

enum Failure {
    Uncertain,
    Fatal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Fatal(e)
    }
}

fn dot(a: &[Real], b: &[Real], zero: &Real) -> Real {
    let mut acc = zero.clone();
    for (x, y) in a.iter().zip(b) {
        acc += x * y;
    }
    acc
}

struct Gso {
    bstar: Vec<Vec<Real>>,
    mu: Vec<Vec<Real>>,
    bsq: Vec<Real>,
}

impl Gso {
    fn new(d: usize, zero: &Real) -> Self {
        Gso {
            bstar: vec![Vec::new(); d],
            mu: vec![vec![zero.clone(); d]; d],
            bsq: vec![zero.clone(); d],
        }
    }

    /// Recomputes rows `from..` from the basis.
    fn refresh(&mut self, b: &[Vec<Real>], from: usize, zero: &Real, p: usize) -> Result<()> {
        for i in from..b.len() {
            let mut v = b[i].clone();
            for j in 0..i {
                let mu = dot(&b[i], &self.bstar[j], zero) / &self.bsq[j];
                for (x, y) in v.iter_mut().zip(&self.bstar[j]) {
                    *x -= &mu * y;
                }
                self.mu[i][j] = mu;
            }
            let bsq = dot(&v, &v, zero);
            let own = dot(&b[i], &b[i], zero);
            let tiny = own * Real::from_parts(IBig::ONE, -(p as isize - 8));
            if bsq.repr().is_zero() || bsq <= tiny {
                return Err(Error::Singular);
            }
            self.bsq[i] = bsq;
            self.bstar[i] = v;
        }
        Ok(())
    }

    fn to_f64(&self) -> GsoF64 {
        GsoF64 {
            mu: self.mu.iter().map(|r| r.iter().map(to_f64).collect()).collect(),
            bsq: self.bsq.iter().map(to_f64).collect(),
        }
    }
}

fn round_to_i128(x: &Real) -> Result<i128> {
    let n: IBig = x.round().to_int().value();
    i128::try_from(n).map_err(|_| Error::Overflow("lll transform"))
}

fn axpy_int(dst: &mut [i128], r: i128, src: &[i128]) -> Result<()> {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = r
            .checked_mul(*s)
            .and_then(|t| d.checked_sub(t))
            .ok_or(Error::Overflow("lll transform"))?;
    }
    Ok(())
}

fn lll_core(
    mut b: Vec<Vec<Real>>,
    delta: f64,
    p: usize,
) -> std::result::Result<(Vec<Vec<Real>>, Vec<Vec<i128>>, Gso), Failure> {
    let d = b.len();
    let zero = real_int(0, p);
    let half = Real::from_parts(IBig::ONE, -1);
    let delta_r = super::real::real_f64(delta, p);
    let slack = Real::from_parts(IBig::ONE, -((p / 2) as isize));
    let mut u: Vec<Vec<i128>> =
        (0..d).map(|i| (0..d).map(|j| i128::from(i == j)).collect()).collect();
    let mut g = Gso::new(d, &zero);
    g.refresh(&b, 0, &zero, p)?;
    let mut k = 1;
    while k < d {
        for j in (0..k).rev() {
            let mu = dot(&b[k], &g.bstar[j], &zero) / &g.bsq[j];
            if mu.clone().abs() > half {
                let r = round_to_i128(&mu)?;
                let rr = real_int(r, p);
                let (lo, hi) = b.split_at_mut(k);
                for (x, y) in hi[0].iter_mut().zip(&lo[j]) {
                    *x -= &rr * y;
                }
                let (ulo, uhi) = u.split_at_mut(k);
                axpy_int(&mut uhi[0], r, &ulo[j])?;
            }
        }
        for j in 0..k {
            g.mu[k][j] = dot(&b[k], &g.bstar[j], &zero) / &g.bsq[j];
        }
        let mu = &g.mu[k][k - 1];
        let rhs = (&delta_r - mu * mu) * &g.bsq[k - 1];
        let diff = &g.bsq[k] - &rhs;
        if !diff.repr().is_zero() && diff.clone().abs() <= &slack * &g.bsq[k - 1] {
            return Err(Failure::Uncertain);
        }
        if diff >= zero {
            k += 1;
        } else {
            b.swap(k, k - 1);
            u.swap(k, k - 1);
            g.refresh(&b, k - 1, &zero, p)?;
            k = (k - 1).max(1);
        }
    }
    Ok((b, u, g))
}

/// LLL-reduces the rows of `basis` with parameter `delta` in `(1/4, 1)`,
/// working at `precision` bits and doubling it when a Lovász comparison
/// falls within `2^(-precision/2)` of equality.
pub fn lll_reduce(basis: &[Vec<Real>], delta: f64, precision: usize) -> Result<LllOutput> {
    if !(delta > 0.25 && delta < 1.0) {
        return Err(Error::Domain(format!("delta = {delta} outside (1/4, 1)")));
    }
    let d = basis.len();
    if d == 0 || basis.iter().any(|r| r.len() != basis[0].len()) || basis[0].len() < d {
        return Err(Error::Dimension("basis rows must have a common length >= rank".into()));
    }
    let mut p = precision.max(super::real::MIN_PRECISION);
    loop {
        let rows: Vec<Vec<Real>> = basis
            .iter()
            .map(|r| r.iter().map(|x| x.clone().with_precision(p).value()).collect())
            .collect();
        match lll_core(rows, delta, p) {
            Ok((basis, transform, _)) => return Ok(LllOutput { basis, transform, precision_bits: p }),
            Err(Failure::Fatal(e)) => return Err(e),
            Err(Failure::Uncertain) if p >= MAX_PRECISION => {
                return Err(Error::Budget(format!("Lovász test undecided at {p} bits")))
            }
            Err(Failure::Uncertain) => p *= 2,
        }
    }
}

/// Checks size reduction and the Lovász condition, with relative slack `eps`.
pub fn is_lll_reduced(basis: &[Vec<Real>], delta: f64, eps: f64) -> bool {
    let p = basis.first().and_then(|r| r.first()).map_or(128, |x| x.precision().max(64));
    let zero = real_int(0, p);
    let mut g = Gso::new(basis.len(), &zero);
    if g.refresh(basis, 0, &zero, p).is_err() {
        return false;
    }
    let f = g.to_f64();
    for i in 1..basis.len() {
        if f.mu[i][..i].iter().any(|m| m.abs() > 0.5 + eps) {
            return false;
        }
        let rhs = (delta - f.mu[i][i - 1] * f.mu[i][i - 1]) * f.bsq[i - 1];
        if f.bsq[i] < rhs * (1.0 - eps) {
            return false;
        }
    }
    true
}

/// A lattice `{ embed(q) : q in Z^d }` whose reduced basis is carried along
/// as integer vectors, so successive reductions under slowly changing
/// embeddings start from an almost reduced basis.
pub(crate) struct TrackedLattice {
    matrix: RealMatrix,
    basis: Vec<Vec<i64>>,
    delta: f64,
}

pub(crate) struct Reduced {
    pub gso: GsoF64,
    pub precision_bits: usize,
}

impl TrackedLattice {
    pub fn new(matrix: &RealMatrix, delta: f64) -> Self {
        let d = matrix.cols();
        let basis = (0..d).map(|i| (0..d).map(|j| i64::from(i == j)).collect()).collect();
        TrackedLattice { matrix: matrix.clone(), basis, delta }
    }

    pub fn matrix(&self) -> &RealMatrix {
        &self.matrix
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Reduces the current basis under `embed`, replacing it by the result.
    pub fn reduce<F>(&mut self, embed: F) -> Result<Reduced>
    where
        F: Fn(&RealMatrix, &[i64]) -> Vec<Real>,
    {
        loop {
            let p = self.matrix.precision();
            let rows: Vec<Vec<Real>> = self.basis.iter().map(|q| embed(&self.matrix, q)).collect();
            match lll_core(rows, self.delta, p) {
                Ok((_, t, g)) => {
                    let d = self.basis.len();
                    let mut next = vec![vec![0i64; d]; d];
                    for i in 0..d {
                        for (k, &c) in t[i].iter().enumerate() {
                            if c == 0 {
                                continue;
                            }
                            for j in 0..d {
                                let v = c
                                    .checked_mul(self.basis[k][j] as i128)
                                    .and_then(|x| x.checked_add(next[i][j] as i128))
                                    .ok_or(Error::Overflow("lattice basis"))?;
                                next[i][j] = i64::try_from(v).map_err(|_| Error::Overflow("lattice basis"))?;
                            }
                        }
                    }
                    self.basis = next;
                    return Ok(Reduced { gso: g.to_f64(), precision_bits: p });
                }
                Err(Failure::Fatal(e)) => return Err(e),
                Err(Failure::Uncertain) if p >= MAX_PRECISION => {
                    return Err(Error::Budget(format!("Lovász test undecided at {p} bits")))
                }
                Err(Failure::Uncertain) => self.matrix = self.matrix.with_precision(2 * p)?,
            }
        }
    }

    /// Combines reduced-basis coefficients into an integer vector.
    pub fn combine(&self, x: &[i64]) -> Result<Vec<i64>> {
        let d = self.basis.len();
        let mut q = vec![0i128; d];
        for (c, row) in x.iter().zip(&self.basis) {
            for (acc, &b) in q.iter_mut().zip(row) {
                *acc += *c as i128 * b as i128;
            }
        }
        q.into_iter()
            .map(|v| i64::try_from(v).map_err(|_| Error::Overflow("lattice vector")))
            .collect()
    }
}

/// All nonzero coefficient vectors `x` with `||sum x_i b_i||^2 <= radius_sq`,
/// one per antipodal pair (last nonzero coordinate positive). `None` when
/// more than `limit` search nodes would be visited.
pub fn enumerate_ball(gso: &GsoF64, radius_sq: f64, limit: usize) -> Option<Vec<Vec<i64>>> {
    let d = gso.bsq.len();
    let mut out = Vec::new();
    let mut x = vec![0i64; d];
    let mut nodes = 0usize;
    if !descend(gso, radius_sq, d, 0.0, &mut x, &mut out, &mut nodes, limit) {
        return None;
    }
    Some(out)
}

#[allow(clippy::too_many_arguments)]
fn descend(
    g: &GsoF64,
    radius_sq: f64,
    level: usize,
    partial: f64,
    x: &mut [i64],
    out: &mut Vec<Vec<i64>>,
    nodes: &mut usize,
    limit: usize,
) -> bool {
    if level == 0 {
        if let Some(&last) = x.iter().rev().find(|&&v| v != 0) {
            if last > 0 {
                out.push(x.to_vec());
            }
        }
        return true;
    }
    let k = level - 1;
    let center: f64 = -(k + 1..x.len()).map(|i| x[i] as f64 * g.mu[i][k]).sum::<f64>();
    let room = (radius_sq - partial) / g.bsq[k];
    if room < 0.0 {
        return true;
    }
    let r = room.sqrt();
    let lo = (center - r).ceil() as i64;
    let hi = (center + r).floor() as i64;
    for v in lo..=hi {
        *nodes += 1;
        if *nodes > limit {
            return false;
        }
        let t = v as f64 - center;
        x[k] = v;
        if !descend(g, radius_sq, k, partial + t * t * g.bsq[k], x, out, nodes, limit) {
            return false;
        }
    }
    x[k] = 0;
    true
}

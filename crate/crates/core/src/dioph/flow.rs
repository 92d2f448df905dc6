//! Systoles along the diagonal flow `g_t u_M Z^(m+n)`.

use dashu_float::ops::SquareRoot;

use super::lattice::{enumerate_ball, TrackedLattice, DEFAULT_DELTA};
use super::real::{real_f64, real_int, to_f64, Real, RealMatrix};
use super::search::choose_split;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FlowPoint {
    pub t: f64,
    /// Euclidean length of the shortest nonzero vector.
    pub length: Real,
    /// Integer vector `q` realizing it.
    pub witness: Vec<i64>,
    pub precision_bits: usize,
}

impl FlowPoint {
    pub fn log_systole(&self) -> f64 {
        super::real::ln_f64(&self.length)
    }
}

/// `(e^(t/m) M q, e^(-t/n) q_tail)`; the tail is the complement of the
/// invertible head block, so the lattice has full rank.
fn flow_embedding(t: f64, tail: Vec<usize>) -> impl Fn(&RealMatrix, &[i64]) -> Vec<Real> {
    move |mat: &RealMatrix, q: &[i64]| {
        let p = mat.precision();
        let (m, n) = (mat.m() as f64, mat.n() as f64);
        let expand = real_f64(t / m, p).exp();
        let contract = if n > 0.0 { real_f64(-t / n, p).exp() } else { real_int(1, p) };
        let mut v: Vec<Real> = mat.apply(q).into_iter().map(|x| x * &expand).collect();
        v.extend(tail.iter().map(|&j| real_int(q[j] as i128, p) * &contract));
        v
    }
}

fn norm_sq(v: &[Real], p: usize) -> Real {
    v.iter().fold(real_int(0, p), |acc, x| acc + x * x)
}

fn shortest_on(lat: &mut TrackedLattice, t: f64) -> Result<FlowPoint> {
    let split = choose_split(lat.matrix())?;
    let embed = flow_embedding(t, split.tail);
    let red = lat.reduce(&embed)?;
    let mat = lat.matrix().clone();
    let p = mat.precision();
    let first = norm_sq(&embed(&mat, &lat.basis()[0]), p);
    let radius_sq = to_f64(&first) * (1.0 + 1e-9);
    let xs = enumerate_ball(&red.gso, radius_sq, 1_000_000)
        .ok_or_else(|| Error::Budget("systole enumeration".into()))?;
    let mut best: Option<(Real, Vec<i64>)> = None;
    for x in xs {
        let mut q = lat.combine(&x)?;
        if q.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            q.iter_mut().for_each(|c| *c = -*c);
        }
        let len = norm_sq(&embed(&mat, &q), p);
        let better = match &best {
            None => true,
            Some((b, bq)) => len < *b || (len == *b && q < *bq),
        };
        if better {
            best = Some((len, q));
        }
    }
    let (len, witness) = best.ok_or(Error::Singular)?;
    Ok(FlowPoint { t, length: len.sqrt(), witness, precision_bits: red.precision_bits })
}

/// Shortest vector of `g_t u_M Z^(m+n)`: LLL reduction, then exhaustive
/// enumeration below the length of the first reduced vector.
pub fn flow_shortest(mat: &RealMatrix, t: f64) -> Result<FlowPoint> {
    if !(t >= 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("flow time {t} must be finite and >= 0")));
    }
    shortest_on(&mut TrackedLattice::new(mat, DEFAULT_DELTA), t)
}

/// `t = 0` followed by the geometric grid `t_max / 2^(steps-1), ..., t_max`.
pub fn flow_grid(t_max: f64, steps: usize) -> Vec<f64> {
    let mut ts = vec![0.0];
    for k in (0..steps).rev() {
        ts.push(t_max / 2f64.powi(k as i32));
    }
    ts
}

/// Systoles on [`flow_grid`], carrying the reduced basis between times.
pub fn flow_trace(mat: &RealMatrix, t_max: f64, steps: usize) -> Result<Vec<FlowPoint>> {
    if !(t_max > 0.0 && t_max.is_finite()) || steps == 0 {
        return Err(Error::Domain("flow trace needs t_max > 0 and steps >= 1".into()));
    }
    let mut lat = TrackedLattice::new(mat, DEFAULT_DELTA);
    flow_grid(t_max, steps).into_iter().map(|t| shortest_on(&mut lat, t)).collect()
}

/// CSV with columns `t,log_systole,witness_vector`; the witness is
/// space-separated.
pub fn trace_csv(points: &[FlowPoint]) -> String {
    let mut out = String::from("t,log_systole,witness_vector\n");
    for p in points {
        let w: Vec<String> = p.witness.iter().map(|x| x.to_string()).collect();
        out.push_str(&format!("{},{:.12e},{}\n", p.t, p.log_systole(), w.join(" ")));
    }
    out
}

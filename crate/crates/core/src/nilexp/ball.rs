//! Product sets `S^n` of unitriangular matrices and the `beta`-diophantine
//! inequality `inf { ||g - I|| : g in S^n, g != 1 } > |S^n|^(-beta)`.
//!
//! Distances are sup-norms of `g - I`. Elements are stored with entry
//! `(i, j)` multiplied by `D^(j - i)`, `D` a common denominator of the
//! generators and their inverses; products of such matrices stay integral.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, Rational, RationalMatrix};
use crate::freelie::{bass_guivarch, free_nilpotent};
use crate::report::Report;

pub const MAX_BALL: usize = 10_000_000;
/// `|S| <= 2 * 3 + 1`.
pub const MAX_GENERATORS: usize = 3;

#[derive(Clone, Debug)]
pub struct BallLevel {
    pub n: usize,
    pub size: usize,
    /// `None` while `S^n = {1}`.
    pub inf_distance: Option<Rational>,
    /// `|S^n|^(-beta)`.
    pub threshold: f64,
    pub holds: bool,
}

#[derive(Clone, Debug)]
pub struct BallReport {
    pub dim: usize,
    pub generators: usize,
    pub beta: f64,
    pub levels: Vec<BallLevel>,
    /// Least-squares slope of `log |S^n|` against `log n` over the upper
    /// half of `1..=n_max`.
    pub growth_exponent: f64,
    /// Of the free nilpotent algebra of class `dim - 1` on the generators.
    pub bass_guivarch: u64,
}

impl BallReport {
    pub fn diophantine(&self) -> bool {
        self.levels.iter().all(|l| l.holds)
    }

    pub fn growth_error(&self) -> f64 {
        (self.growth_exponent - self.bass_guivarch as f64).abs() / self.bass_guivarch as f64
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        r.push("dim", self.dim).push("generators", self.generators).push("beta", self.beta);
        r.push("distance", "sup-norm of g - I");
        for l in &self.levels {
            let d = l.inf_distance.as_ref().map_or("none".into(), fmt_rational);
            r.push(
                format!("n{}", l.n),
                format!("size={} inf_distance={} threshold={:.6e} holds={}", l.size, d, l.threshold, l.holds),
            );
        }
        r.push("diophantine", self.diophantine());
        r.push("growth_exponent", format!("{:.4}", self.growth_exponent));
        r.push("bass_guivarch", self.bass_guivarch);
        r.push("growth_relative_error", format!("{:.4}", self.growth_error()));
        r
    }
}

fn check_unitriangular(g: &RationalMatrix, dim: usize) -> Result<()> {
    if g.rows() != dim || g.cols() != dim {
        return Err(Error::Dimension(format!("generators must be {dim}x{dim}")));
    }
    for i in 0..dim {
        for j in 0..=i {
            let want = if i == j { Rational::one() } else { Rational::zero() };
            if g.get(i, j) != &want {
                return Err(Error::Domain("generator is not upper unitriangular".into()));
            }
        }
    }
    Ok(())
}

/// Inverse of an upper unitriangular matrix by back substitution.
fn inverse(g: &RationalMatrix) -> RationalMatrix {
    let n = g.rows();
    let mut inv = RationalMatrix::identity(n);
    for j in 0..n {
        for i in (0..j).rev() {
            let mut acc = Rational::zero();
            for l in i + 1..=j {
                acc -= g.get(i, l) * inv.get(l, j);
            }
            inv.set(i, j, acc);
        }
    }
    inv
}

struct Scaled {
    /// Strictly upper positions `(i, j)` in storage order.
    slots: Vec<(usize, usize)>,
    slot: Vec<Vec<usize>>,
    denom: BigInt,
}

impl Scaled {
    fn new(dim: usize, denom: BigInt) -> Self {
        let mut slots = Vec::new();
        let mut slot = vec![vec![usize::MAX; dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                slot[i][j] = slots.len();
                slots.push((i, j));
            }
        }
        Scaled { slots, slot, denom }
    }

    fn encode(&self, g: &RationalMatrix) -> Result<Vec<i128>> {
        self.slots
            .iter()
            .map(|&(i, j)| {
                let v = g.get(i, j) * Rational::from_integer(self.denom.pow((j - i) as u32));
                v.to_integer().to_i128().ok_or(Error::Overflow("scaled generator"))
            })
            .collect()
    }

    fn mul(&self, a: &[i128], b: &[i128]) -> Result<Vec<i128>> {
        let ov = || Error::Overflow("product set entry");
        self.slots
            .iter()
            .map(|&(i, j)| {
                let mut acc = a[self.slot[i][j]].checked_add(b[self.slot[i][j]]).ok_or_else(ov)?;
                for l in i + 1..j {
                    let t = a[self.slot[i][l]].checked_mul(b[self.slot[l][j]]).ok_or_else(ov)?;
                    acc = acc.checked_add(t).ok_or_else(ov)?;
                }
                Ok(acc)
            })
            .collect()
    }

    fn distance(&self, a: &[i128]) -> Rational {
        self.slots
            .iter()
            .enumerate()
            .map(|(s, &(i, j))| {
                Rational::new(BigInt::from(a[s]).abs(), self.denom.pow((j - i) as u32))
            })
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

fn growth_fit(levels: &[BallLevel]) -> f64 {
    let n_max = levels.len();
    let pts: Vec<(f64, f64)> = levels[n_max / 2..]
        .iter()
        .map(|l| ((l.n as f64).ln(), (l.size as f64).ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    sxy / sxx
}

/// Enumerates `S^n` for `n = 1..=n_max`, `S = {1, s_i, s_i^-1}`, with
/// exact distances to the identity.
pub fn group_ball_check(gens: &[RationalMatrix], n_max: usize, beta: f64) -> Result<BallReport> {
    if gens.is_empty() || gens.len() > MAX_GENERATORS {
        return Err(Error::Domain(format!("between 1 and {MAX_GENERATORS} generators required")));
    }
    if n_max < 2 {
        return Err(Error::Domain("n_max must be at least 2".into()));
    }
    if !(beta.is_finite() && beta >= 0.0) {
        return Err(Error::Domain(format!("beta = {beta} must be finite and >= 0")));
    }
    let dim = gens[0].rows();
    for g in gens {
        check_unitriangular(g, dim)?;
    }
    let mut all: Vec<RationalMatrix> = gens.to_vec();
    all.extend(gens.iter().map(inverse));
    let denom = all
        .iter()
        .flat_map(|g| g.entries().iter().map(|x| x.denom().clone()))
        .fold(BigInt::one(), |a, b| a.lcm(&b));
    let sc = Scaled::new(dim, denom);
    let identity = vec![0i128; sc.slots.len()];
    let mut steps: Vec<Vec<i128>> = Vec::new();
    for g in &all {
        let e = sc.encode(g)?;
        if e != identity && !steps.contains(&e) {
            steps.push(e);
        }
    }

    let mut seen: HashSet<Vec<i128>> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    let mut best: Option<Rational> = None;
    let mut levels = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut next = Vec::new();
        for x in &frontier {
            for s in &steps {
                let y = sc.mul(x, s)?;
                if !seen.contains(&y) {
                    let d = sc.distance(&y);
                    if best.as_ref().is_none_or(|b| d < *b) {
                        best = Some(d);
                    }
                    seen.insert(y.clone());
                    next.push(y);
                    if seen.len() > MAX_BALL {
                        return Err(Error::Budget(format!(
                            "|S^{n}| exceeds {MAX_BALL} elements"
                        )));
                    }
                }
            }
        }
        frontier = next;
        let size = seen.len();
        let threshold = (size as f64).powf(-beta);
        let holds = best.as_ref().is_none_or(|b| b.to_f64().unwrap_or(0.0) > threshold);
        levels.push(BallLevel { n, size, inf_distance: best.clone(), threshold, holds });
    }
    Ok(BallReport {
        dim,
        generators: gens.len(),
        beta,
        growth_exponent: growth_fit(&levels),
        bass_guivarch: bass_guivarch(&free_nilpotent(gens.len(), dim.saturating_sub(1).max(1)).1),
        levels,
    })
}

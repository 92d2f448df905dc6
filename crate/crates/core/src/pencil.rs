//! Pencils of endomorphisms and exponent bounds for matrix families.
//!
//! A pencil `P(W, r)` is the variety of `m x (m+n)` matrices `M` with
//! `dim MW <= r`. A family contained in a pencil whose ratio `dim W / r - 1`
//! beats the Dirichlet exponent `n/m` cannot be extremal. Families are finite
//! exact samples, so every containment verdict here is a verdict about the
//! samples that were supplied.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    fmt_rational, image_dim, kernel, parse_row, rank_of_rows, rat, rows_to_matrix, strip_comment,
    Rational, RationalMatrix, RationalSubspace,
};
use crate::report::Report;

/// Exponent value: an exact rational or `+inf`. `Finite < Infinite`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Exponent {
    Finite(Rational),
    Infinite,
}

impl Exponent {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Exponent::Finite(r) => Some(r),
            Exponent::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Exponent::Infinite)
    }

    /// Multiplies a finite exponent by `c`; `+inf` stays `+inf` for `c > 0`.
    pub fn scale(&self, c: &Rational) -> Exponent {
        match self {
            Exponent::Finite(r) => Exponent::Finite(r * c),
            Exponent::Infinite if c.is_zero() => Exponent::Finite(Rational::zero()),
            Exponent::Infinite => Exponent::Infinite,
        }
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(r) => write!(f, "{}", fmt_rational(r)),
            Exponent::Infinite => write!(f, "+inf"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pencil {
    pub w: RationalSubspace,
    pub r: usize,
}

impl Pencil {
    pub fn new(w: RationalSubspace, r: usize) -> Result<Self> {
        if r > w.dim() {
            return Err(Error::Domain(format!("r = {r} exceeds dim W = {}", w.dim())));
        }
        Ok(Pencil { w, r })
    }
}

impl fmt::Display for Pencil {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(W = {}, r = {})", self.w, self.r)
    }
}

/// `dim W / r - 1 > n / m`, with `r = 0` always counting as an obstruction.
pub fn obstruction_holds(dim_w: usize, r: usize, m: usize, n: usize) -> bool {
    if r == 0 {
        return true;
    }
    // dim_w / r - 1 > n / m  <=>  m * (dim_w - r) > n * r
    (m as i128) * (dim_w as i128 - r as i128) > (n as i128) * (r as i128)
}

pub fn exponent_of(dim_w: usize, r: usize) -> Exponent {
    if r == 0 {
        Exponent::Infinite
    } else {
        Exponent::Finite(Rational::new(BigInt::from(dim_w), BigInt::from(r)) - rat(1))
    }
}

pub fn pencil_exponent(p: &Pencil) -> Exponent {
    exponent_of(p.w.dim(), p.r)
}

/// Finite exact sample of an analytic family of `m x (m+n)` matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrixFamily {
    m: usize,
    n: usize,
    samples: Vec<RationalMatrix>,
    label: String,
}

impl MatrixFamily {
    /// `n = 0` is allowed: word-map families can be square.
    pub fn new(
        m: usize,
        n: usize,
        samples: Vec<RationalMatrix>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::Dimension("family with m = 0".into()));
        }
        if samples.is_empty() {
            return Err(Error::Domain("family without samples".into()));
        }
        if let Some(s) = samples.iter().find(|s| s.rows() != m || s.cols() != m + n) {
            return Err(Error::Dimension(format!(
                "sample of shape {}x{} in a {}x{} family",
                s.rows(),
                s.cols(),
                m,
                m + n
            )));
        }
        Ok(MatrixFamily { m, n, samples, label: label.into() })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.m + self.n
    }

    pub fn samples(&self) -> &[RationalMatrix] {
        &self.samples
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The Dirichlet exponent `n/m`.
    pub fn dirichlet(&self) -> Rational {
        Rational::new(BigInt::from(self.n), BigInt::from(self.m))
    }

    /// `phi(W) = max over samples of dim MW`.
    pub fn phi(&self, w: &RationalSubspace) -> Result<usize> {
        let mut best = 0;
        for s in &self.samples {
            best = best.max(image_dim(s, w)?);
            if best == self.m {
                break;
            }
        }
        Ok(best)
    }

    /// Intersection of the sample kernels: the largest `W` with `phi(W) = 0`.
    pub fn common_kernel(&self) -> RationalSubspace {
        let rows: Vec<Vec<Rational>> = self.samples.iter().flat_map(|s| s.row_vecs()).collect();
        let stacked = RationalMatrix::from_rows(rows).expect("samples share a shape");
        kernel(&stacked)
    }

    /// Family file: a header line `m n`, then the samples in the plain matrix
    /// format separated by blank lines. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut samples = Vec::new();
        let mut current: Vec<Vec<Rational>> = Vec::new();
        let mut start = 0;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            if raw.trim().is_empty() {
                if !current.is_empty() {
                    samples.push(rows_to_matrix(std::mem::take(&mut current), start)?);
                }
                continue;
            }
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            if header.is_none() {
                let parts: Vec<usize> = line
                    .split_whitespace()
                    .map(|t| t.parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse { line: lineno, msg: "header must be `m n`".into() })?;
                if parts.len() != 2 {
                    return Err(Error::Parse { line: lineno, msg: "header must be `m n`".into() });
                }
                header = Some((parts[0], parts[1]));
                continue;
            }
            if current.is_empty() {
                start = lineno;
            }
            current.push(parse_row(line, lineno)?);
        }
        if !current.is_empty() {
            samples.push(rows_to_matrix(current, start)?);
        }
        let (m, n) = header.ok_or(Error::Parse { line: 1, msg: "missing `m n` header".into() })?;
        Self::new(m, n, samples, "file").map_err(|e| Error::Parse { line: 1, msg: e.to_string() })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl fmt::Display for MatrixFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.m, self.n)?;
        for (i, s) in self.samples.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

pub fn pencil_contains(family: &MatrixFamily, p: &Pencil) -> Result<bool> {
    if p.w.ambient_dim() != family.cols() {
        return Err(Error::Dimension(format!(
            "pencil in Q^{} for a family with {} columns",
            p.w.ambient_dim(),
            family.cols()
        )));
    }
    for s in family.samples() {
        if image_dim(s, &p.w)? > p.r {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Limits for the rational obstruction search.
#[derive(Clone, Debug)]
pub struct PencilSearch {
    /// Sup-norm bound on the integer vectors spanning `W`.
    pub height: u32,
    /// Only subspaces up to this dimension are explored.
    pub max_dim: Option<usize>,
    /// Fails with a budget error past this many distinct subspaces.
    pub max_subspaces: usize,
    pub max_vectors: usize,
}

impl PencilSearch {
    pub fn new(height: u32) -> Self {
        PencilSearch { height, max_dim: None, max_subspaces: 200_000, max_vectors: 400_000 }
    }
}

/// Primitive integer vectors of `Z^dim` with sup-norm in `1..=height`, one per
/// antipodal pair (first nonzero coordinate positive), in lexicographic order.
pub fn primitive_vectors(dim: usize, height: u32) -> Vec<Vec<i64>> {
    let h = height as i64;
    let mut out = Vec::new();
    let mut cur = vec![-h; dim];
    loop {
        let first = cur.iter().find(|&&x| x != 0);
        if matches!(first, Some(&x) if x > 0) {
            let g = cur.iter().fold(0i64, |g, &x| g.gcd(&x));
            if g == 1 {
                out.push(cur.clone());
            }
        }
        let mut i = dim;
        loop {
            if i == 0 {
                out.sort();
                return out;
            }
            i -= 1;
            if cur[i] < h {
                cur[i] += 1;
                break;
            }
            cur[i] = -h;
        }
    }
}

fn ordering_key(a: &Pencil, b: &Pencil) -> std::cmp::Ordering {
    pencil_exponent(b).cmp(&pencil_exponent(a)).then_with(|| a.w.canonical_cmp(&b.w))
}

/// Every pencil `(W, r)` containing the family whose `W` is spanned by integer
/// vectors of height at most `height`, with `r = phi(W)`, that satisfies the
/// obstruction inequality. Sorted by decreasing exponent, then by increasing
/// `dim W`, then by basis.
pub fn enumerate_rational_pencils(family: &MatrixFamily, height: u32) -> Result<Vec<Pencil>> {
    enumerate_with(family, &PencilSearch::new(height))
}

pub fn enumerate_with(family: &MatrixFamily, search: &PencilSearch) -> Result<Vec<Pencil>> {
    if search.height == 0 {
        return Err(Error::Domain("height bound must be at least 1".into()));
    }
    let dim = family.cols();
    let count = ((2.0 * search.height as f64 + 1.0).powi(dim as i32) - 1.0) / 2.0;
    if count > search.max_vectors as f64 {
        return Err(Error::Budget(format!(
            "about {count:.0} height-{} vectors in Q^{dim}",
            search.height
        )));
    }
    let vectors = primitive_vectors(dim, search.height);
    let vectors_q: Vec<Vec<Rational>> =
        vectors.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
    // Images of each spanning vector under each sample.
    let images: Vec<Vec<Vec<Rational>>> = vectors_q
        .iter()
        .map(|v| family.samples().iter().map(|s| s.mul_vec(v)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let phi_of = |gens: &[usize]| -> usize {
        let mut best = 0;
        for s in 0..family.samples().len() {
            let rows: Vec<Vec<Rational>> = gens.iter().map(|&g| images[g][s].clone()).collect();
            best = best.max(rank_of_rows(&rows));
            if best == family.m() {
                break;
            }
        }
        best
    };

    let (m, n) = (family.m(), family.n());
    let mut seen: HashSet<RationalSubspace> = HashSet::new();
    let mut found = Vec::new();
    let mut frontier: Vec<(RationalSubspace, Vec<usize>)> = Vec::new();
    for (i, v) in vectors_q.iter().enumerate() {
        let w = RationalSubspace::span(dim, std::slice::from_ref(v))?;
        seen.insert(w.clone());
        let r = phi_of(&[i]);
        if obstruction_holds(1, r, m, n) {
            found.push(Pencil { w: w.clone(), r });
        }
        if r < m {
            frontier.push((w, vec![i]));
        }
    }
    let mut level = 1;
    while !frontier.is_empty() && search.max_dim.is_none_or(|d| level < d) && level < dim {
        let mut next = Vec::new();
        for (w, gens) in &frontier {
            for (i, v) in vectors_q.iter().enumerate() {
                if w.contains(v) {
                    continue;
                }
                let mut rows = w.basis().to_vec();
                rows.push(v.clone());
                let bigger = RationalSubspace::span(dim, &rows)?;
                if seen.contains(&bigger) {
                    continue;
                }
                seen.insert(bigger.clone());
                if seen.len() > search.max_subspaces {
                    return Err(Error::Budget(format!(
                        "more than {} subspaces at height {}",
                        search.max_subspaces, search.height
                    )));
                }
                let mut g = gens.clone();
                g.push(i);
                let r = phi_of(&g);
                if obstruction_holds(bigger.dim(), r, m, n) {
                    found.push(Pencil { w: bigger.clone(), r });
                }
                if r < m {
                    next.push((bigger, g));
                }
            }
        }
        frontier = next;
        level += 1;
    }
    found.sort_by(ordering_key);
    Ok(found)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExponentBounds {
    pub m: usize,
    pub n: usize,
    pub lower: Exponent,
    /// Maximum over the same enumerated set; only certified up to `height`.
    pub upper: Exponent,
    pub witness: Option<Pencil>,
    pub height: u32,
    pub obstructions: usize,
    pub samples: usize,
}

impl ExponentBounds {
    pub fn certified(&self) -> String {
        format!(
            "rational W of height <= {} and the common kernel over {} exact samples",
            self.height, self.samples
        )
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        r.push("m", self.m).push("n", self.n);
        r.push("dirichlet", fmt_rational(&Rational::new(self.n.into(), self.m.into())));
        r.push("lower", &self.lower).push("upper", &self.upper);
        match &self.witness {
            Some(p) => {
                r.push("witness_W_basis", &p.w).push("witness_r", p.r);
            }
            None => {
                r.push("witness_W_basis", "none").push("witness_r", "none");
            }
        }
        r.push("obstructions", self.obstructions);
        r.push("height", self.height).push("certified", self.certified());
        r
    }
}

pub fn bounds(family: &MatrixFamily, height: u32) -> Result<ExponentBounds> {
    bounds_with(family, &PencilSearch::new(height), &[])
}

/// Bounds over the height-limited enumeration plus explicitly supplied
/// candidate subspaces (e.g. invariant subspaces of a word-map family).
/// The common kernel is always a candidate, so a rational relation of any
/// height gives `+inf`.
pub fn bounds_with(
    family: &MatrixFamily,
    search: &PencilSearch,
    extra: &[RationalSubspace],
) -> Result<ExponentBounds> {
    let mut pencils = enumerate_with(family, search)?;
    let common = family.common_kernel();
    for w in extra.iter().chain(std::iter::once(&common)) {
        if w.is_zero() {
            continue;
        }
        let r = family.phi(w)?;
        if obstruction_holds(w.dim(), r, family.m(), family.n())
            && !pencils.iter().any(|p| &p.w == w)
        {
            pencils.push(Pencil { w: w.clone(), r });
        }
    }
    pencils.sort_by(ordering_key);
    let baseline = Exponent::Finite(family.dirichlet());
    let (lower, witness) = match pencils.first() {
        Some(p) if pencil_exponent(p) > baseline => (pencil_exponent(p), Some(p.clone())),
        _ => (baseline, None),
    };
    Ok(ExponentBounds {
        m: family.m(),
        n: family.n(),
        upper: lower.clone(),
        lower,
        witness,
        height: search.height,
        obstructions: pencils.len(),
        samples: family.samples().len(),
    })
}

/// Linear span of the Plücker points of the sample kernels.
#[derive(Clone, Debug, PartialEq)]
pub struct HullSpan {
    pub kernel_dim: usize,
    pub ambient: usize,
    pub span: RationalSubspace,
}

impl HullSpan {
    pub fn span_dim(&self) -> usize {
        self.span.dim()
    }

    /// Whether `matrix` lies in the hull: its kernel has the common dimension
    /// and its Plücker point lies in the span.
    pub fn contains(&self, matrix: &RationalMatrix) -> Result<bool> {
        if matrix.cols() != self.ambient {
            return Err(Error::Dimension("matrix does not match the hull ambient".into()));
        }
        let k = kernel(matrix);
        if k.dim() != self.kernel_dim {
            return Ok(false);
        }
        Ok(self.span.contains(&k.pluecker()?))
    }
}

pub fn hull_span(family: &MatrixFamily) -> Result<HullSpan> {
    let kernels: Vec<RationalSubspace> = family.samples().iter().map(kernel).collect();
    let d = kernels[0].dim();
    if let Some(bad) = kernels.iter().find(|k| k.dim() != d) {
        return Err(Error::DegenerateSample(format!(
            "kernel dimensions {} and {} in one family; stratify the samples",
            d,
            bad.dim()
        )));
    }
    if d == 0 {
        return Err(Error::DegenerateSample("samples have trivial kernel".into()));
    }
    let points: Vec<Vec<Rational>> =
        kernels.iter().map(RationalSubspace::pluecker).collect::<Result<_>>()?;
    let ambient = points[0].len();
    Ok(HullSpan {
        kernel_dim: d,
        ambient: family.cols(),
        span: RationalSubspace::span(ambient, &points)?,
    })
}

#[derive(Clone, Debug)]
pub struct ExtremalityReport {
    pub height: u32,
    pub violating: Vec<Pencil>,
    pub samples: usize,
}

impl ExtremalityReport {
    pub fn no_obstruction(&self) -> bool {
        self.violating.is_empty()
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        let verdict = if self.no_obstruction() {
            format!("no obstruction up to height {}", self.height)
        } else {
            format!("{} obstructing pencils", self.violating.len())
        };
        r.push("verdict", verdict);
        for (i, p) in self.violating.iter().enumerate() {
            r.push(format!("pencil.{i}"), format!("{p} exponent {}", pencil_exponent(p)));
        }
        r.push("height", self.height);
        r.push("certified", format!("containment checked on {} exact samples", self.samples));
        r
    }
}

pub fn extremality_report(family: &MatrixFamily, height: u32) -> Result<ExtremalityReport> {
    Ok(ExtremalityReport {
        height,
        violating: enumerate_rational_pencils(family, height)?,
        samples: family.samples().len(),
    })
}

/// Sup-norm height of a canonical subspace basis after clearing denominators
/// row by row.
pub fn basis_height(w: &RationalSubspace) -> BigInt {
    w.basis()
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| (x * Rational::from_integer(l.clone())).to_integer().abs())
                .max()
                .unwrap_or_default()
        })
        .max()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::ratio;

    fn fam(m: usize, n: usize, samples: Vec<RationalMatrix>) -> MatrixFamily {
        MatrixFamily::new(m, n, samples, "test").unwrap()
    }

    #[test]
    fn obstruction_examples() {
        assert!(obstruction_holds(1, 0, 1, 1));
        assert!(!obstruction_holds(3, 1, 1, 2));
        assert!(!obstruction_holds(4, 2, 2, 2));
        assert!(obstruction_holds(3, 1, 2, 2));
    }

    #[test]
    fn exponent_examples() {
        let full = Pencil::new(RationalSubspace::full(4), 2).unwrap();
        assert_eq!(pencil_exponent(&full), Exponent::Finite(rat(1)));
        let full = Pencil::new(RationalSubspace::full(5), 2).unwrap();
        assert_eq!(pencil_exponent(&full), Exponent::Finite(ratio(3, 2)));
        assert_eq!(exponent_of(3, 1), Exponent::Finite(rat(2)));
        assert_eq!(exponent_of(2, 0), Exponent::Infinite);
        assert!(Exponent::Infinite > Exponent::Finite(rat(1000)));
        assert!(Pencil::new(RationalSubspace::full(2), 3).is_err());
    }

    #[test]
    fn containment_examples() {
        let f = fam(
            2,
            1,
            vec![
                RationalMatrix::from_i64(&[&[1, 2, 0], &[3, 4, 0]]),
                RationalMatrix::from_i64(&[&[5, -1, 0], &[2, 7, 0]]),
            ],
        );
        let e3 = RationalSubspace::span_i64(3, &[&[0, 0, 1]]).unwrap();
        assert!(pencil_contains(&f, &Pencil::new(e3, 0).unwrap()).unwrap());

        let id = fam(2, 1, vec![RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]])]);
        let p = Pencil::new(RationalSubspace::full(3), 1).unwrap();
        assert!(!pencil_contains(&id, &p).unwrap());
        let bad = Pencil::new(RationalSubspace::full(4), 1).unwrap();
        assert!(pencil_contains(&id, &bad).is_err());
    }

    #[test]
    fn containment_is_monotone_in_r() {
        let f = fam(2, 2, vec![RationalMatrix::from_i64(&[&[1, 2, 3, 0], &[2, 4, 6, 1]])]);
        let w = RationalSubspace::span_i64(4, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0]])
            .unwrap();
        for r in 1..=3 {
            assert!(pencil_contains(&f, &Pencil::new(w.clone(), r).unwrap()).unwrap());
        }
        assert!(!pencil_contains(&f, &Pencil::new(w, 0).unwrap()).unwrap());
    }

    #[test]
    fn primitive_vector_counts() {
        // Height 1 in Q^2: (0,1), (1,-1), (1,0), (1,1).
        assert_eq!(primitive_vectors(2, 1).len(), 4);
        assert_eq!(primitive_vectors(4, 1).len(), 40);
        // Height 2 in Q^2 drops the non-primitive (2,0), (0,2), (2,2), (2,-2).
        assert_eq!(primitive_vectors(2, 2).len(), 8);
    }

    #[test]
    fn generic_family_has_no_obstruction() {
        let f = fam(
            1,
            1,
            vec![
                RationalMatrix::from_rows(vec![vec![rat(1), ratio(7, 13)]]).unwrap(),
                RationalMatrix::from_rows(vec![vec![rat(1), ratio(-22, 9)]]).unwrap(),
            ],
        );
        assert!(enumerate_rational_pencils(&f, 1).unwrap().is_empty());
        let b = bounds(&f, 3).unwrap();
        assert_eq!(b.lower, Exponent::Finite(rat(1)));
        assert_eq!(b.upper, b.lower);
        assert!(b.witness.is_none());
    }

    #[test]
    fn kernel_vector_gives_infinite_lower_bound() {
        let f = fam(1, 1, vec![RationalMatrix::from_rows(vec![vec![rat(1), ratio(1, 2)]]).unwrap()]);
        let pencils = enumerate_rational_pencils(&f, 2).unwrap();
        let v = RationalSubspace::span_i64(2, &[&[1, -2]]).unwrap();
        assert!(pencils.iter().any(|p| p.w == v && p.r == 0));
        assert_eq!(bounds(&f, 2).unwrap().lower, Exponent::Infinite);
        // The height-1 enumeration misses (1, -2); the common kernel does not.
        assert!(enumerate_rational_pencils(&f, 1).unwrap().iter().all(|p| p.w != v));
        let b = bounds(&f, 1).unwrap();
        assert_eq!(b.lower, Exponent::Infinite);
        assert_eq!(b.witness.unwrap().w, v);
    }

    #[test]
    fn zero_height_is_rejected() {
        let f = fam(1, 1, vec![RationalMatrix::from_i64(&[&[1, 3]])]);
        assert!(matches!(bounds(&f, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn hull_examples() {
        let single = fam(1, 1, vec![RationalMatrix::from_i64(&[&[1, 3]])]);
        assert_eq!(hull_span(&single).unwrap().span_dim(), 1);

        let three = fam(
            1,
            1,
            vec![
                RationalMatrix::from_i64(&[&[1, 2]]),
                RationalMatrix::from_i64(&[&[1, -5]]),
                RationalMatrix::from_rows(vec![vec![rat(1), ratio(1, 3)]]).unwrap(),
            ],
        );
        assert_eq!(hull_span(&three).unwrap().span_dim(), 2);

        let shared = fam(
            1,
            2,
            vec![RationalMatrix::from_i64(&[&[1, 1, 0]]), RationalMatrix::from_i64(&[&[2, 2, 0]])],
        );
        assert_eq!(hull_span(&shared).unwrap().span_dim(), 1);

        let mixed = fam(
            2,
            1,
            vec![
                RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]),
                RationalMatrix::from_i64(&[&[1, 0, 0], &[2, 0, 0]]),
            ],
        );
        assert!(matches!(hull_span(&mixed), Err(Error::DegenerateSample(_))));
    }

    #[test]
    fn affine_relation_is_an_obstruction() {
        // (1 | x, 2x + 1): q = (1, 2, -1) is killed for every x.
        let samples = [ratio(1, 3), ratio(-5, 7), ratio(11, 4)]
            .iter()
            .map(|x| {
                RationalMatrix::from_rows(vec![vec![rat(1), x.clone(), x * rat(2) + rat(1)]])
                    .unwrap()
            })
            .collect();
        let f = fam(1, 2, samples);
        let rep = extremality_report(&f, 2).unwrap();
        let w = RationalSubspace::span_i64(3, &[&[1, 2, -1]]).unwrap();
        assert!(rep.violating.iter().any(|p| p.w == w && p.r == 0));
        assert!(rep.report().get("verdict").unwrap().contains("obstructing"));
    }

    #[test]
    fn family_file_round_trip() {
        let text = "# family\n2 1\n1 0 1/2\n0 1 3\n\n1 0 -1\n0 1 2/3\n";
        let f = MatrixFamily::parse(text).unwrap();
        assert_eq!((f.m(), f.n(), f.samples().len()), (2, 1, 2));
        assert_eq!(MatrixFamily::parse(&f.to_string()).unwrap().samples(), f.samples());
        assert!(MatrixFamily::parse("2 1\n1 0\n").is_err());
        assert!(MatrixFamily::parse("2\n1 0 1\n0 1 1\n").is_err());
        assert!(MatrixFamily::parse("1 1\n1 q\n").is_err());
    }

    #[test]
    fn basis_height_clears_denominators() {
        let w = RationalSubspace::span(2, &[vec![rat(2), rat(-6)]]).unwrap();
        assert_eq!(basis_height(&w), BigInt::from(3));
    }
}

//! Exact linear algebra over the rationals.
//!
//! Rank and kernels go through fraction-free (Bareiss) elimination on
//! integer-scaled rows. Subspaces are always stored in reduced row-echelon
//! form, so two subspaces are equal exactly when their stored bases are.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q` or `p`.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let token = token.trim();
    match token.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rational::new(p, q))
        }
        None => token.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dense row-major matrix over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Dimension(format!("empty matrix shape {rows}x{cols}")));
        }
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(RationalMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows.iter().map(|row| row.iter().map(|&x| rat(x)).collect()).collect();
        Self::from_rows(data).expect("well-formed literal matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        RationalMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} against {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Least common multiple of all entry denominators.
    pub fn common_denominator(&self) -> BigInt {
        self.data.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Parses the plain matrix text format: one row per line, entries `p/q`
    /// or `p`, `#` starts a comment, blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut first_line = 0;
        for (idx, raw) in text.lines().enumerate() {
            let line = strip_comment(raw);
            if line.is_empty() {
                continue;
            }
            if rows.is_empty() {
                first_line = idx + 1;
            }
            rows.push(parse_row(line, idx + 1)?);
        }
        rows_to_matrix(rows, first_line)
    }
}

pub(crate) fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

pub(crate) fn parse_row(line: &str, lineno: usize) -> Result<Vec<Rational>> {
    line.split_whitespace()
        .map(|tok| {
            parse_rational(tok).ok_or_else(|| Error::Parse {
                line: lineno,
                msg: format!("not a rational entry: `{tok}`"),
            })
        })
        .collect()
}

pub(crate) fn rows_to_matrix(rows: Vec<Vec<Rational>>, line: usize) -> Result<RationalMatrix> {
    if rows.is_empty() {
        return Err(Error::Parse { line, msg: "no matrix rows".into() });
    }
    let width = rows[0].len();
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::Parse { line, msg: "rows have different lengths".into() });
    }
    RationalMatrix::from_rows(rows)
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let line: Vec<String> = self.row(i).iter().map(fmt_rational).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Scales each row by the lcm of its denominators, giving an integer row
/// spanning the same line.
fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| (x * Rational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect()
}

/// Fraction-free Gaussian elimination. Returns the echelon rows (only the
/// first `pivots.len()` rows are nonzero) and the pivot columns.
pub fn bareiss_echelon(mut a: Vec<Vec<BigInt>>) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let nrows = a.len();
    let ncols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = pivot_row[c].clone();
        for row in tail.iter_mut() {
            let factor = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &pv * &row[j] - &factor * &pivot_row[j];
                // Sylvester's identity makes this division exact.
                row[j] = v / &prev;
            }
        }
        prev = pv;
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Exact rank over `Q`.
pub fn rank(m: &RationalMatrix) -> usize {
    rank_of_rows(&m.row_vecs())
}

pub fn rank_of_rows(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    bareiss_echelon(integer_rows(rows)).1.len()
}

/// Reduced row-echelon form of the span of `rows`: pivots equal to one, zeros
/// above and below each pivot, zero rows dropped.
pub fn rref(rows: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let (ech, pivots) = bareiss_echelon(integer_rows(rows));
    let mut out: Vec<Vec<Rational>> = ech
        .into_iter()
        .take(pivots.len())
        .zip(&pivots)
        .map(|(row, &pc)| {
            let lead = Rational::from_integer(row[pc].clone());
            row.into_iter().map(|x| Rational::from_integer(x) / &lead).collect()
        })
        .collect();
    for i in (0..out.len()).rev() {
        let pc = pivots[i];
        let (above, rest) = out.split_at_mut(i);
        let prow = &rest[0];
        for row in above.iter_mut() {
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone();
            for (x, p) in row.iter_mut().zip(prow).skip(pc) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
    }
    out
}

fn pivot_of(row: &[Rational]) -> usize {
    row.iter().position(|x| !x.is_zero()).expect("echelon rows are nonzero")
}

/// Subspace of `Q^ambient`, stored as its reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSubspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl RationalSubspace {
    pub fn zero(ambient: usize) -> Self {
        RationalSubspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::span(ambient, &RationalMatrix::identity(ambient).row_vecs()).expect("identity")
    }

    pub fn span(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::Dimension(format!(
                "vector of length {} in Q^{ambient}",
                v.len()
            )));
        }
        Ok(RationalSubspace { ambient, basis: rref(vectors) })
    }

    pub fn span_i64(ambient: usize, vectors: &[&[i64]]) -> Result<Self> {
        let v: Vec<Vec<Rational>> =
            vectors.iter().map(|v| v.iter().map(|&x| rat(x)).collect()).collect();
        Self::span(ambient, &v)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    /// Basis vectors as a `dim x ambient` matrix; `None` for the zero space.
    pub fn basis_matrix(&self) -> Option<RationalMatrix> {
        RationalMatrix::from_rows(self.basis.clone()).ok()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut r = v.to_vec();
        for row in &self.basis {
            let pc = pivot_of(row);
            if r[pc].is_zero() {
                continue;
            }
            let f = r[pc].clone();
            for (x, b) in r.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
        r.iter().all(Zero::is_zero)
    }

    pub fn is_subspace_of(&self, other: &RationalSubspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    fn check_ambient(&self, other: &RationalSubspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Dimension(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &RationalSubspace) -> Result<RationalSubspace> {
        self.check_ambient(other)?;
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        Self::span(self.ambient, &rows)
    }

    pub fn intersect(&self, other: &RationalSubspace) -> Result<RationalSubspace> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        // x B1 = y B2  <=>  (x, -y) lies in the left kernel of [B1; B2].
        let d1 = self.dim();
        let mut stacked = self.basis.clone();
        stacked.extend(other.basis.iter().cloned());
        let stacked = RationalMatrix::from_rows(stacked)?;
        let left = kernel(&stacked.transpose());
        let vectors: Vec<Vec<Rational>> = left
            .basis
            .iter()
            .map(|coef| {
                let mut v = vec![Rational::zero(); self.ambient];
                for (c, b) in coef[..d1].iter().zip(&self.basis) {
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(b) {
                        *x += c * y;
                    }
                }
                v
            })
            .collect();
        Self::span(self.ambient, &vectors)
    }

    /// Image of the subspace under `x -> g x`.
    pub fn image(&self, g: &RationalMatrix) -> Result<RationalSubspace> {
        if g.cols() != self.ambient {
            return Err(Error::Dimension("map and subspace disagree".into()));
        }
        let imgs: Vec<Vec<Rational>> =
            self.basis.iter().map(|v| g.mul_vec(v)).collect::<Result<_>>()?;
        Self::span(g.rows(), &imgs)
    }

    /// Plücker coordinates: all `dim x dim` minors of the basis over column
    /// subsets in lexicographic order, scaled so the first nonzero one is 1.
    pub fn pluecker(&self) -> Result<Vec<Rational>> {
        if self.is_zero() {
            return Err(Error::Domain("Plücker coordinates of the zero subspace".into()));
        }
        let d = self.dim();
        let mut coords: Vec<Rational> = combinations(self.ambient, d)
            .iter()
            .map(|cols| {
                let sub: Vec<Vec<Rational>> = self
                    .basis
                    .iter()
                    .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
                    .collect();
                determinant(&sub)
            })
            .collect();
        let lead = coords.iter().find(|x| !x.is_zero()).cloned().expect("basis has full rank");
        for c in coords.iter_mut() {
            *c /= &lead;
        }
        Ok(coords)
    }

    /// Dimension first, then lexicographic comparison of the stored bases.
    pub fn canonical_cmp(&self, other: &RationalSubspace) -> Ordering {
        self.dim().cmp(&other.dim()).then_with(|| self.basis.cmp(&other.basis))
    }
}

impl fmt::Display for RationalSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|v| format!("({})", v.iter().map(fmt_rational).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}

/// Kernel of `m` inside `Q^cols`, in canonical form.
pub fn kernel(m: &RationalMatrix) -> RationalSubspace {
    let n = m.cols();
    let r = rref(&m.row_vecs());
    let pivots: Vec<usize> = r.iter().map(|row| pivot_of(row)).collect();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            v
        })
        .collect();
    RationalSubspace::span(n, &vectors).expect("kernel vectors have ambient length")
}

/// `dim M W`.
pub fn image_dim(m: &RationalMatrix, w: &RationalSubspace) -> Result<usize> {
    if w.ambient_dim() != m.cols() {
        return Err(Error::Dimension(format!(
            "subspace of Q^{} for a matrix with {} columns",
            w.ambient_dim(),
            m.cols()
        )));
    }
    let imgs: Vec<Vec<Rational>> =
        w.basis().iter().map(|v| m.mul_vec(v)).collect::<Result<_>>()?;
    Ok(rank_of_rows(&imgs))
}

/// Determinant of a square rational matrix given as rows.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    if n == 0 {
        return Rational::one();
    }
    let mut a = rows.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pv = a[c][c].clone();
        det *= &pv;
        let (head, tail) = a.split_at_mut(c + 1);
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pv;
            for j in c..n {
                let d = &f * &head[c][j];
                row[j] -= d;
            }
        }
    }
    det
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Sup-norm of a rational vector.
pub fn sup_norm(v: &[Rational]) -> Rational {
    v.iter().map(Signed::abs).max().unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::identity(3)), 3);
        assert_eq!(rank(&RationalMatrix::zeros(2, 4)), 0);
        assert_eq!(rank(&RationalMatrix::from_i64(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn bareiss_handles_skipped_columns() {
        let m = RationalMatrix::from_i64(&[&[0, 1, 2, 3], &[0, 2, 4, 7], &[1, 0, 0, 1]]);
        assert_eq!(rank(&m), 3);
        let m = RationalMatrix::from_i64(&[&[0, 0, 5], &[0, 0, 3], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn kernel_examples() {
        let m = RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(kernel(&m), RationalSubspace::span_i64(3, &[&[0, 0, 1]]).unwrap());

        let m = RationalMatrix::from_rows(vec![vec![rat(1), ratio(1, 2)]]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.basis(), &[v(&[1, -2])]);

        let m = RationalMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert!(kernel(&m).is_zero());
    }

    #[test]
    fn sum_and_intersection_examples() {
        let w = RationalSubspace::span_i64(3, &[&[1, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(w.sum(&w).unwrap(), w);
        assert_eq!(w.intersect(&w).unwrap(), w);

        let e1 = RationalSubspace::span_i64(3, &[&[1, 0, 0]]).unwrap();
        let e2 = RationalSubspace::span_i64(3, &[&[0, 1, 0]]).unwrap();
        let e12 = RationalSubspace::span_i64(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        assert_eq!(e1.sum(&e2).unwrap(), e12);
        assert!(e1.intersect(&e2).unwrap().is_zero());

        let diag = RationalSubspace::span_i64(3, &[&[1, 1, 0]]).unwrap();
        assert_eq!(diag.intersect(&e12).unwrap(), diag);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = RationalSubspace::full(2);
        let b = RationalSubspace::full(3);
        assert!(matches!(a.sum(&b), Err(Error::Dimension(_))));
        assert!(matches!(a.intersect(&b), Err(Error::Dimension(_))));
        assert!(image_dim(&RationalMatrix::identity(3), &a).is_err());
    }

    #[test]
    fn image_dim_examples() {
        let m = RationalMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]]);
        assert_eq!(image_dim(&m, &RationalSubspace::full(3)).unwrap(), 2);
        let w = RationalSubspace::span_i64(3, &[&[0, 0, 1]]).unwrap();
        assert_eq!(image_dim(&m, &w).unwrap(), 0);

        let a = RationalMatrix::from_rows(vec![
            vec![rat(1), rat(0), ratio(3, 7)],
            vec![rat(0), rat(1), ratio(-5, 2)],
        ])
        .unwrap();
        let w = RationalSubspace::span_i64(3, &[&[1, 0, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(image_dim(&a, &w).unwrap(), 2);
    }

    #[test]
    fn pluecker_examples() {
        let w = RationalSubspace::span_i64(3, &[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        assert_eq!(w.pluecker().unwrap(), v(&[1, 0, 0]));
        let w = RationalSubspace::span_i64(2, &[&[1, -2]]).unwrap();
        assert_eq!(w.pluecker().unwrap(), v(&[1, -2]));
        let w = RationalSubspace::span_i64(3, &[&[1, 0, 1], &[0, 1, 1]]).unwrap();
        assert_eq!(w.pluecker().unwrap(), v(&[1, 1, -1]));
        assert!(RationalSubspace::zero(3).pluecker().is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let text = "# golden\n1 1/2 -3\n\n  0 2/4 7 # trailing\n";
        let m = RationalMatrix::parse(text).unwrap();
        assert_eq!(m.rows(), 2);
        assert_eq!(m.get(1, 1), &ratio(1, 2));
        assert_eq!(RationalMatrix::parse(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        match RationalMatrix::parse("1 2\n3 x\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(RationalMatrix::parse("1 2\n3\n").is_err());
        assert!(RationalMatrix::parse("1/0\n").is_err());
        assert!(RationalMatrix::parse("# nothing\n").is_err());
    }

    #[test]
    fn determinant_and_combinations() {
        assert_eq!(determinant(&[v(&[2, 1]), v(&[1, 1])]), rat(1));
        assert_eq!(determinant(&[v(&[0, 1]), v(&[1, 0])]), rat(-1));
        assert_eq!(combinations(4, 2).len(), 6);
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }
}

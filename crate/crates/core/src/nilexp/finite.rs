//! Exhaustive check of the submodular minimum lemma over `F_p^d`: if `G`
//! acts linearly on `V` and `phi` is non-decreasing, submodular and
//! `G`-invariant, then `min phi(W) / dim W` over nonzero `W` is attained on a
//! `G`-invariant subspace.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, Rational};
use crate::report::Report;

pub const MAX_DIM: usize = 6;
/// Upper bound on the number of subspaces of `F_p^d`; pairwise checks are
/// quadratic in it.
pub const MAX_SUBSPACES: usize = 5000;

/// Row-major square matrix over `F_p`, acting on column vectors.
pub type FpMatrix = Vec<Vec<u32>>;

/// Subspace of `F_p^d` in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpSubspace {
    basis: Vec<Vec<u32>>,
}

impl FpSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }
}

impl fmt::Display for FpSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(""))
            .collect();
        write!(f, "<{}>", rows.join(","))
    }
}

#[derive(Clone, Copy)]
struct Field {
    p: u32,
}

impl Field {
    fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    fn inv(self, a: u32) -> u32 {
        let (mut base, mut e, mut acc) = (a, self.p - 2, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn rref(self, mut rows: Vec<Vec<u32>>, d: usize) -> Vec<Vec<u32>> {
        let mut r = 0;
        for c in 0..d {
            let Some(pivot) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
            rows.swap(r, pivot);
            let inv = self.inv(rows[r][c]);
            rows[r].iter_mut().for_each(|x| *x = self.mul(*x, inv));
            for i in 0..rows.len() {
                if i != r && rows[i][c] != 0 {
                    let f = rows[i][c];
                    for j in 0..d {
                        rows[i][j] = self.sub(rows[i][j], self.mul(f, rows[r][j]));
                    }
                }
            }
            r += 1;
        }
        rows.truncate(r);
        rows
    }

    fn apply(self, g: &FpMatrix, v: &[u32]) -> Vec<u32> {
        g.iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| (acc + self.mul(a, b)) % self.p))
            .collect()
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// All subspaces of `F_p^d` in the canonical order: by dimension, then by
/// pivot columns (lexicographic), then by free entries.
pub fn enumerate_subspaces(p: u32, d: usize) -> Vec<FpSubspace> {
    let mut out = Vec::new();
    for r in 0..=d {
        for pivots in crate::exactlin::combinations(d, r) {
            let free: Vec<(usize, usize)> = (0..r)
                .flat_map(|i| {
                    let pv = &pivots;
                    (pv[i] + 1..d).filter(move |c| !pv.contains(c)).map(move |c| (i, c))
                })
                .collect();
            let total = (p as usize).pow(free.len() as u32);
            for mut code in 0..total {
                let mut basis = vec![vec![0u32; d]; r];
                for (i, &c) in pivots.iter().enumerate() {
                    basis[i][c] = 1;
                }
                for &(i, c) in &free {
                    basis[i][c] = (code % p as usize) as u32;
                    code /= p as usize;
                }
                out.push(FpSubspace { basis });
            }
        }
    }
    out
}

/// Rule giving `phi(W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PhiRule {
    Dim,
    /// `dim(A W)`.
    ImageDim(FpMatrix),
    /// Values indexed by position in [`enumerate_subspaces`].
    Table(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteActionInstance {
    p: u32,
    d: usize,
    generators: Vec<FpMatrix>,
    phi: PhiRule,
}

/// Subspace lattice with membership sets for fast intersections.
struct Lattice {
    field: Field,
    d: usize,
    subspaces: Vec<FpSubspace>,
    index: HashMap<Vec<Vec<u32>>, usize>,
    members: Vec<Vec<u64>>,
    by_members: HashMap<Vec<u64>, usize>,
}

impl Lattice {
    fn new(p: u32, d: usize) -> Result<Self> {
        let subspaces = enumerate_subspaces(p, d);
        if subspaces.len() > MAX_SUBSPACES {
            return Err(Error::Budget(format!(
                "F_{p}^{d} has {} subspaces, more than {MAX_SUBSPACES}",
                subspaces.len()
            )));
        }
        let field = Field { p };
        let size = (p as usize).pow(d as u32);
        let members: Vec<Vec<u64>> = subspaces
            .iter()
            .map(|w| {
                let mut bits = vec![0u64; size.div_ceil(64)];
                for code in 0..(p as usize).pow(w.dim() as u32) {
                    let mut v = vec![0u32; d];
                    let mut c = code;
                    for row in &w.basis {
                        let a = (c % p as usize) as u32;
                        c /= p as usize;
                        for j in 0..d {
                            v[j] = (v[j] + field.mul(a, row[j])) % p;
                        }
                    }
                    let e = v.iter().rev().fold(0usize, |acc, &x| acc * p as usize + x as usize);
                    bits[e / 64] |= 1 << (e % 64);
                }
                bits
            })
            .collect();
        let index = subspaces.iter().enumerate().map(|(i, w)| (w.basis.clone(), i)).collect();
        let by_members = members.iter().enumerate().map(|(i, b)| (b.clone(), i)).collect();
        Ok(Lattice { field, d, subspaces, index, members, by_members })
    }

    fn span(&self, rows: Vec<Vec<u32>>) -> usize {
        self.index[&self.field.rref(rows, self.d)]
    }

    fn sum(&self, i: usize, j: usize) -> usize {
        let mut rows = self.subspaces[i].basis.clone();
        rows.extend(self.subspaces[j].basis.iter().cloned());
        self.span(rows)
    }

    fn intersect(&self, i: usize, j: usize) -> usize {
        let bits: Vec<u64> =
            self.members[i].iter().zip(&self.members[j]).map(|(a, b)| a & b).collect();
        self.by_members[&bits]
    }

    fn image(&self, g: &FpMatrix, i: usize) -> usize {
        self.span(self.subspaces[i].basis.iter().map(|v| self.field.apply(g, v)).collect())
    }

    fn contains(&self, small: usize, big: usize) -> bool {
        self.members[small].iter().zip(&self.members[big]).all(|(a, b)| a & !b == 0)
    }
}

#[derive(Clone, Debug)]
pub struct SubmodularReport {
    pub p: u32,
    pub d: usize,
    pub subspaces: usize,
    pub invariant: usize,
    pub min_ratio: Rational,
    pub minimizers: Vec<FpSubspace>,
    pub invariant_minimizers: Vec<FpSubspace>,
}

impl SubmodularReport {
    pub fn attained_on_invariant(&self) -> bool {
        !self.invariant_minimizers.is_empty()
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        r.push("field", format!("F_{}^{}", self.p, self.d));
        r.push("subspaces", self.subspaces).push("invariant_subspaces", self.invariant);
        r.push("min_ratio", fmt_rational(&self.min_ratio));
        r.push("minimizers", self.minimizers.len());
        r.push("invariant_minimizers", self.invariant_minimizers.len());
        if let Some(w) = self.invariant_minimizers.first() {
            r.push("witness", w);
        }
        let verdict = if self.attained_on_invariant() {
            "invariant minimizer found"
        } else {
            "no invariant minimizer"
        };
        r.push("verdict", verdict);
        r
    }
}

impl FiniteActionInstance {
    pub fn new(p: u32, d: usize, generators: Vec<FpMatrix>, phi: PhiRule) -> Result<Self> {
        if !is_prime(p) || p > 251 {
            return Err(Error::Domain(format!("p = {p} must be a prime below 256")));
        }
        if d == 0 || d > MAX_DIM {
            return Err(Error::Domain(format!("dimension {d} outside 1..={MAX_DIM}")));
        }
        let square = |a: &FpMatrix| {
            a.len() == d && a.iter().all(|r| r.len() == d && r.iter().all(|&x| x < p))
        };
        if !generators.iter().all(square) {
            return Err(Error::Dimension(format!("generators must be {d}x{d} over F_{p}")));
        }
        if let PhiRule::ImageDim(a) = &phi {
            if !square(a) {
                return Err(Error::Dimension(format!("phi matrix must be {d}x{d} over F_{p}")));
            }
        }
        Ok(FiniteActionInstance { p, d, generators, phi })
    }

    /// Instance with `phi` tabulated from `f` over [`enumerate_subspaces`].
    pub fn tabulate(
        p: u32,
        d: usize,
        generators: Vec<FpMatrix>,
        f: impl Fn(&FpSubspace) -> usize,
    ) -> Result<Self> {
        let table = enumerate_subspaces(p, d).iter().map(f).collect();
        Self::new(p, d, generators, PhiRule::Table(table))
    }

    /// Text format, blank lines and `#` comments ignored:
    ///
    /// ```text
    /// p 2
    /// dim 4
    /// generator
    /// <d rows>
    /// phi image
    /// <d rows>
    /// ```
    ///
    /// `phi dim` and `phi table <values...>` are the other rules.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").split_whitespace().collect()))
            .filter(|(_, t): &(usize, Vec<&str>)| !t.is_empty())
            .collect();
        let err = |line: usize, msg: &str| Error::Parse { line, msg: msg.into() };
        let num = |line: usize, t: &str| t.parse::<u32>().map_err(|_| err(line, "expected integer"));
        let (mut p, mut d) = (None, None);
        let mut generators = Vec::new();
        let mut phi = None;
        let mut i = 0;
        let read_matrix = |i: &mut usize, d: usize, p: u32| -> Result<FpMatrix> {
            let mut rows = Vec::new();
            for _ in 0..d {
                let (line, toks) = lines.get(*i).ok_or_else(|| err(0, "truncated matrix"))?;
                let row = toks.iter().map(|t| num(*line, t).map(|x| x % p)).collect::<Result<_>>()?;
                rows.push(row);
                *i += 1;
            }
            Ok(rows)
        };
        while i < lines.len() {
            let (line, toks) = &lines[i];
            i += 1;
            match (toks[0], d, p) {
                ("p", _, _) if toks.len() == 2 => p = Some(num(*line, toks[1])?),
                ("dim", _, _) if toks.len() == 2 => d = Some(num(*line, toks[1])? as usize),
                ("generator", Some(d), Some(p)) => generators.push(read_matrix(&mut i, d, p)?),
                ("phi", Some(d), Some(p)) => {
                    phi = Some(match toks.get(1).copied() {
                        Some("dim") => PhiRule::Dim,
                        Some("image") => PhiRule::ImageDim(read_matrix(&mut i, d, p)?),
                        Some("table") => PhiRule::Table(
                            toks[2..].iter().map(|t| num(*line, t).map(|x| x as usize)).collect::<Result<_>>()?,
                        ),
                        _ => return Err(err(*line, "phi rule must be dim, image or table")),
                    })
                }
                _ => return Err(err(*line, "expected `p`, `dim`, `generator` or `phi`")),
            }
        }
        let (p, d) = (p.ok_or(err(0, "missing p"))?, d.ok_or(err(0, "missing dim"))?);
        Self::new(p, d, generators, phi.ok_or(err(0, "missing phi"))?)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    fn values(&self, lat: &Lattice) -> Result<Vec<usize>> {
        match &self.phi {
            PhiRule::Dim => Ok(lat.subspaces.iter().map(FpSubspace::dim).collect()),
            PhiRule::ImageDim(a) => Ok((0..lat.subspaces.len())
                .map(|i| lat.subspaces[lat.image(a, i)].dim())
                .collect()),
            PhiRule::Table(t) if t.len() == lat.subspaces.len() => Ok(t.clone()),
            PhiRule::Table(t) => Err(Error::Dimension(format!(
                "phi table has {} values for {} subspaces",
                t.len(),
                lat.subspaces.len()
            ))),
        }
    }

    /// Verifies the hypotheses, then finds `min phi(W) / dim W` and its
    /// minimizers. A failed hypothesis is a [`Error::Hypothesis`].
    pub fn submodular_min_check(&self) -> Result<SubmodularReport> {
        let lat = Lattice::new(self.p, self.d)?;
        let count = lat.subspaces.len();
        let full = count - 1;
        for (gi, g) in self.generators.iter().enumerate() {
            if lat.image(g, full) != full {
                return Err(Error::Hypothesis(format!("generator {gi} is not invertible")));
            }
        }
        let phi = self.values(&lat)?;
        let show = |i: usize| lat.subspaces[i].to_string();

        // Monotonicity on covering pairs W < W + <e> suffices.
        for i in 0..count {
            for j in 0..count {
                if lat.subspaces[j].dim() == 1 && !lat.contains(j, i) {
                    let big = lat.sum(i, j);
                    if phi[i] > phi[big] {
                        return Err(Error::Hypothesis(format!(
                            "phi is not non-decreasing: phi{} = {} > phi{} = {}",
                            show(i),
                            phi[i],
                            show(big),
                            phi[big]
                        )));
                    }
                }
            }
        }
        for i in 0..count {
            for j in i + 1..count {
                let (s, t) = (lat.sum(i, j), lat.intersect(i, j));
                if phi[s] + phi[t] > phi[i] + phi[j] {
                    return Err(Error::Hypothesis(format!(
                        "phi is not submodular on {} and {}",
                        show(i),
                        show(j)
                    )));
                }
            }
        }
        let mut invariant = vec![true; count];
        for (gi, g) in self.generators.iter().enumerate() {
            for i in 0..count {
                let img = lat.image(g, i);
                if phi[img] != phi[i] {
                    return Err(Error::Hypothesis(format!(
                        "phi is not invariant under generator {gi} at {}",
                        show(i)
                    )));
                }
                invariant[i] &= img == i;
            }
        }

        let ratio = |i: usize| {
            Rational::new(BigInt::from(phi[i]), BigInt::from(lat.subspaces[i].dim()))
        };
        let min_ratio = (1..count).map(ratio).min().expect("d >= 1");
        let minimizers: Vec<usize> = (1..count).filter(|&i| ratio(i) == min_ratio).collect();
        Ok(SubmodularReport {
            p: self.p,
            d: self.d,
            subspaces: count,
            invariant: invariant.iter().filter(|&&b| b).count(),
            min_ratio,
            invariant_minimizers: minimizers
                .iter()
                .filter(|&&i| invariant[i])
                .map(|&i| lat.subspaces[i].clone())
                .collect(),
            minimizers: minimizers.into_iter().map(|i| lat.subspaces[i].clone()).collect(),
        })
    }
}

/// `F_2^4` with the 4-cycle `P` and `phi(W) = dim((I + P) W)`.
pub fn cyclic_example() -> FiniteActionInstance {
    let cycle: FpMatrix = (0..4).map(|i| (0..4).map(|j| u32::from(i == (j + 1) % 4)).collect()).collect();
    let a: FpMatrix = (0..4)
        .map(|i| (0..4).map(|j| (u32::from(i == j) + cycle[i][j]) % 2).collect())
        .collect();
    FiniteActionInstance::new(2, 4, vec![cycle], PhiRule::ImageDim(a)).expect("valid instance")
}

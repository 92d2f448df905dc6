//! Diophantine exponents of rational nilpotent Lie groups.
//!
//! For a group `G` of class `s` whose top layer has dimension `m`, the
//! relatively free algebra `F_{k,G}` on `k` letters has a degree-`s` part of
//! dimension `N`. Evaluating its Lyndon basis at tuples of elements of
//! `Lie(G)` gives `m x N` word-map matrices. Their pencils give a matrix
//! exponent `beta_matrix`, and the group exponent is
//! `beta_k = (s / alpha) * beta_matrix` with `alpha` the Bass–Guivarc'h degree
//! of `F_{k,G}`.
//!
//! The closed formulas cover Heisenberg groups, two-step groups, `UT(4)` and
//! the free class-3 group on two generators.

mod ball;
mod finite;

pub use ball::{group_ball_check, BallLevel, BallReport, MAX_BALL, MAX_GENERATORS};
pub use finite::{
    cyclic_example, enumerate_subspaces, FiniteActionInstance, FpMatrix, FpSubspace, PhiRule,
    SubmodularReport, MAX_DIM, MAX_SUBSPACES,
};

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{rank, rat, Rational, RationalMatrix, RationalSubspace};
use crate::freelie::{
    bass_guivarch, evaluate_basis, free_nilpotent, target_algebra, witt_dimension, FamilyTag,
    GradedLieAlgebra, LyndonBasis,
};
use crate::pencil::{enumerate_with, exponent_of, pencil_exponent, Exponent, MatrixFamily, PencilSearch};
use crate::report::Report;

/// Rational pencil enumeration runs only up to this word dimension `N`.
pub const RATIONAL_SEARCH_GUARD: usize = 12;
/// Invariant subspace search runs only up to this word dimension `N`.
pub const INVARIANT_GUARD: usize = 80;
/// Distinct subspaces explored before the rational search drops to lines.
pub const SUBSPACE_BUDGET: usize = 20_000;
pub const DEFAULT_SEED: u64 = 1;
/// Word-map samples draw coordinates uniformly from `-SAMPLE_RANGE..=SAMPLE_RANGE`.
pub const SAMPLE_RANGE: i64 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub tag: FamilyTag,
    pub class: usize,
    /// Dimension of the top layer `G^(s)`; always `>= 1`.
    pub top_dim: usize,
    pub abelian_dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Closed {
    TwoStep { p: usize },
    Ut4,
    Free23,
}

impl GroupSpec {
    pub fn new(tag: FamilyTag) -> Result<Self> {
        let alg = target_algebra(tag)?;
        let class = alg.class();
        if class < 2 {
            return Err(Error::Unsupported(format!("{tag} is abelian; class >= 2 is required")));
        }
        let dims = alg.graded_dims();
        Ok(GroupSpec { tag, class, top_dim: dims[class - 1], abelian_dim: dims[0] })
    }

    /// Smallest admissible `k` and the condition in words.
    pub fn threshold(&self) -> (usize, String) {
        match self.tag {
            FamilyTag::Heisenberg { dim } => {
                let m = (dim - 1) / 2;
                (2 * m, format!("k >= 2m with m = {m}"))
            }
            FamilyTag::Unitriangular { n: 3 } => (2, "k >= 2m with m = 1".into()),
            FamilyTag::Unitriangular { n: 4 } => (3, "k >= 3".into()),
            FamilyTag::FreeNilpotent { gens: 2, class: 3 } => (2, "k >= 2".into()),
            _ => (self.abelian_dim, format!("k >= dim G/[G,G] = {}", self.abelian_dim)),
        }
    }

    pub fn check_k(&self, k: usize) -> Result<()> {
        let (k0, text) = self.threshold();
        if k < k0 {
            return Err(Error::Threshold(format!("{}: {text}, got k = {k}", self.tag)));
        }
        Ok(())
    }

    /// `N`, the dimension of the degree-`s` part of `F_{k,G}`.
    pub fn word_dim(&self, k: usize) -> usize {
        witt_dimension(k, self.class) as usize
    }

    /// Bass–Guivarc'h degree of `F_{k,G}`.
    pub fn alpha(&self, k: usize) -> u64 {
        bass_guivarch(&free_nilpotent(k, self.class).1)
    }

    fn closed(&self) -> Option<Closed> {
        match self.tag {
            FamilyTag::Heisenberg { .. } | FamilyTag::Unitriangular { n: 3 } => {
                Some(Closed::TwoStep { p: 1 })
            }
            FamilyTag::TwoStep { commutator, .. } => Some(Closed::TwoStep { p: commutator }),
            FamilyTag::Unitriangular { n: 4 } => Some(Closed::Ut4),
            FamilyTag::FreeNilpotent { gens: 2, class: 3 } => Some(Closed::Free23),
            FamilyTag::FreeNilpotent { gens, class: 2 } => {
                Some(Closed::TwoStep { p: gens * (gens - 1) / 2 })
            }
            _ => None,
        }
    }

    pub fn has_closed_formula(&self) -> bool {
        self.closed().is_some()
    }

    /// `lim beta_k` as `k -> inf`, when a closed formula exists.
    pub fn closed_limit(&self) -> Option<Rational> {
        self.closed().map(|c| match c {
            Closed::TwoStep { p } => Rational::new(1.into(), BigInt::from(p)),
            Closed::Ut4 => rat(1),
            Closed::Free23 => Rational::new(1.into(), 2.into()),
        })
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GroupSpec::new(s.parse()?)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag)
    }
}

fn q(n: i64) -> Rational {
    rat(n)
}

/// Exact `beta_k` from the closed formula of the family.
pub fn beta_closed(g: &GroupSpec, k: usize) -> Result<Rational> {
    let kind = g
        .closed()
        .ok_or_else(|| Error::Unsupported(format!("no closed formula for {}", g.tag)))?;
    g.check_k(k)?;
    let kq = q(k as i64);
    let k2 = &kq * &kq;
    let k3 = &k2 * &kq;
    let one = q(1);
    Ok(match kind {
        Closed::TwoStep { p } => (&one - &one / &kq) / q(p as i64) - q(2) / &k2,
        Closed::Ut4 => (&k3 - &kq - q(3)) / (&k3 + &k2 - &kq),
        Closed::Free23 => (&k3 - &kq - q(6)) / (q(2) * (&k3 + &k2 - &kq)),
    })
}

/// Free algebra, target algebra and the index data of a word map.
struct WordMap {
    basis: LyndonBasis,
    target: GradedLieAlgebra,
    top: Vec<usize>,
    range: std::ops::Range<usize>,
}

impl WordMap {
    fn new(g: &GroupSpec, k: usize) -> Result<Self> {
        let (basis, _) = free_nilpotent(k, g.class);
        let target = target_algebra(g.tag)?;
        let top = target.layer(g.class);
        let range = basis.degree_range(g.class);
        Ok(WordMap { basis, target, top, range })
    }

    fn matrix(&self, x: &[Vec<Rational>]) -> Result<RationalMatrix> {
        let values = evaluate_basis(&self.basis, &self.target, x)?;
        let rows = self
            .top
            .iter()
            .map(|&a| self.range.clone().map(|c| values[c][a].clone()).collect())
            .collect();
        RationalMatrix::from_rows(rows)
    }
}

/// The `m x N` word-map matrix at `x`: column `i` holds the top-layer
/// coordinates of the `i`-th degree-`s` Lyndon element evaluated at `x`.
pub fn word_map_matrix(g: &GroupSpec, k: usize, x: &[Vec<Rational>]) -> Result<RationalMatrix> {
    WordMap::new(g, k)?.matrix(x)
}

/// True when the sample has rank below `m`.
pub fn is_degenerate(g: &GroupSpec, sample: &RationalMatrix) -> bool {
    rank(sample) < g.top_dim
}

#[derive(Clone, Debug)]
pub struct WordMapFamily {
    pub group: GroupSpec,
    pub k: usize,
    /// `N`.
    pub word_dim: usize,
    /// `m x N`, full rank `m`.
    pub samples: Vec<RationalMatrix>,
    /// Rank-deficient draws that were discarded.
    pub degenerate: usize,
    pub seed: u64,
}

impl WordMapFamily {
    pub fn family(&self) -> Result<MatrixFamily> {
        let m = self.group.top_dim;
        MatrixFamily::new(
            m,
            self.word_dim - m,
            self.samples.clone(),
            format!("word map {} k={}", self.group, self.k),
        )
    }
}

/// `sample_count` full-rank word-map matrices at seeded small-integer tuples.
pub fn word_map_family(
    g: &GroupSpec,
    k: usize,
    sample_count: usize,
    seed: u64,
) -> Result<WordMapFamily> {
    g.check_k(k)?;
    let n_words = g.word_dim(k);
    if sample_count < n_words + 1 {
        return Err(Error::Domain(format!(
            "sample_count = {sample_count} but N + 1 = {} samples are required",
            n_words + 1
        )));
    }
    let wm = WordMap::new(g, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(sample_count);
    let mut degenerate = 0;
    let max_draws = 20 * sample_count + 100;
    for _ in 0..max_draws {
        if samples.len() == sample_count {
            break;
        }
        let x: Vec<Vec<Rational>> = (0..k)
            .map(|_| {
                (0..wm.target.dim()).map(|_| q(rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE))).collect()
            })
            .collect();
        let s = wm.matrix(&x)?;
        if is_degenerate(g, &s) {
            degenerate += 1;
        } else {
            samples.push(s);
        }
    }
    if samples.len() < sample_count {
        return Err(Error::DegenerateSample(format!(
            "{degenerate} of {max_draws} word-map samples for {g} at k = {k} have rank < {}",
            g.top_dim
        )));
    }
    Ok(WordMapFamily { group: *g, k, word_dim: n_words, samples, degenerate, seed })
}

/// Action on the degree-`s` part of the free class-`s` algebra of the
/// substitutions `x_i -> sum_j a[i][j] x_j`: adjacent transpositions,
/// transvections `x_i -> x_i + x_j` and the dilation `x_1 -> 2 x_1`.
pub fn substitution_generators(k: usize, s: usize) -> Result<Vec<RationalMatrix>> {
    let (basis, alg) = free_nilpotent(k, s);
    let letters: Vec<usize> = (0..k)
        .map(|j| basis.index_of(&[j as u8]).expect("letters are Lyndon words"))
        .collect();
    let range = basis.degree_range(s);
    let identity = |i: usize, j: usize| i64::from(i == j);
    let mut subs: Vec<Vec<Vec<i64>>> = Vec::new();
    for t in 0..k.saturating_sub(1) {
        subs.push(
            (0..k)
                .map(|i| {
                    let src = if i == t { t + 1 } else if i == t + 1 { t } else { i };
                    (0..k).map(|j| identity(src, j)).collect()
                })
                .collect(),
        );
    }
    for a in 0..k {
        for b in 0..k {
            if a != b {
                subs.push(
                    (0..k)
                        .map(|i| (0..k).map(|j| identity(i, j) + i64::from(i == a && j == b)).collect())
                        .collect(),
                );
            }
        }
    }
    subs.push((0..k).map(|i| (0..k).map(|j| identity(i, j) * if i == 0 { 2 } else { 1 }).collect()).collect());

    subs.iter()
        .map(|a| {
            let x: Vec<Vec<Rational>> = (0..k)
                .map(|i| {
                    let mut v = vec![Rational::zero(); alg.dim()];
                    for j in 0..k {
                        v[letters[j]] = q(a[i][j]);
                    }
                    v
                })
                .collect();
            let values = evaluate_basis(&basis, &alg, &x)?;
            let rows = range
                .clone()
                .map(|r| range.clone().map(|c| values[c][r].clone()).collect())
                .collect();
            RationalMatrix::from_rows(rows)
        })
        .collect()
}

const MOD_P: u64 = 2_147_483_647;

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut e, mut acc) = (a % MOD_P, MOD_P - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % MOD_P;
        }
        base = base * base % MOD_P;
        e >>= 1;
    }
    acc
}

/// Incremental echelon form; each stored row is zero at the pivots of the
/// rows stored before it and has a unit pivot.
#[derive(Default)]
struct ModEchelon {
    rows: Vec<(usize, Vec<u64>)>,
}

impl ModEchelon {
    fn insert(&mut self, mut v: Vec<u64>) -> Option<Vec<u64>> {
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row) {
                    *x = (*x + MOD_P - c * y % MOD_P) % MOD_P;
                }
            }
        }
        let p = v.iter().position(|&x| x != 0)?;
        let inv = inv_mod(v[p]);
        v.iter_mut().for_each(|x| *x = *x * inv % MOD_P);
        self.rows.push((p, v.clone()));
        Some(v)
    }
}

#[derive(Default)]
struct QEchelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl QEchelon {
    fn insert(&mut self, mut v: Vec<Rational>) -> Option<Vec<Rational>> {
        for (p, row) in &self.rows {
            let c = v[*p].clone();
            if !c.is_zero() {
                for (x, y) in v.iter_mut().zip(row) {
                    *x -= &c * y;
                }
            }
        }
        let p = v.iter().position(|x| !x.is_zero())?;
        let inv = v[p].recip();
        v.iter_mut().for_each(|x| *x *= &inv);
        self.rows.push((p, v.clone()));
        Some(v)
    }
}

fn to_mod(x: &Rational) -> Option<u64> {
    if !x.is_integer() {
        return None;
    }
    let r = x.numer() % BigInt::from(MOD_P);
    let r = if r.is_negative() { r + BigInt::from(MOD_P) } else { r };
    r.to_u64()
}

/// Dimension of the smallest subspace containing `seed` and stable under
/// `gens`, computed modulo a large prime. It never exceeds the rational one.
fn closure_dim_mod_p(gens: &[Vec<Vec<u64>>], seed: Vec<u64>, dim: usize) -> usize {
    let mut ech = ModEchelon::default();
    let mut queue: Vec<Vec<u64>> = ech.insert(seed).into_iter().collect();
    while let Some(v) = queue.pop() {
        for g in gens {
            let w: Vec<u64> = g
                .iter()
                .map(|row| row.iter().zip(&v).fold(0, |acc, (a, b)| (acc + a * b) % MOD_P))
                .collect();
            if let Some(w) = ech.insert(w) {
                if ech.rows.len() == dim {
                    return dim;
                }
                queue.push(w);
            }
        }
    }
    ech.rows.len()
}

fn closure_exact(gens: &[RationalMatrix], seed: Vec<Rational>) -> Result<RationalSubspace> {
    let dim = seed.len();
    let mut ech = QEchelon::default();
    let mut queue: Vec<Vec<Rational>> = ech.insert(seed).into_iter().collect();
    while let Some(v) = queue.pop() {
        for g in gens {
            if let Some(w) = ech.insert(g.mul_vec(&v)?) {
                queue.push(w);
            }
        }
    }
    let rows: Vec<Vec<Rational>> = ech.rows.into_iter().map(|(_, r)| r).collect();
    RationalSubspace::span(dim, &rows)
}

/// Closes `set` under sums and intersections.
fn lattice_closure(mut set: Vec<RationalSubspace>, limit: usize) -> Result<Vec<RationalSubspace>> {
    let mut seen: HashSet<RationalSubspace> = set.iter().cloned().collect();
    let mut start = 0;
    loop {
        let mut fresh = Vec::new();
        for i in 0..set.len() {
            for j in start.max(i + 1)..set.len() {
                for w in [set[i].sum(&set[j])?, set[i].intersect(&set[j])?] {
                    if seen.insert(w.clone()) {
                        fresh.push(w);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        if seen.len() > limit {
            return Err(Error::Budget(format!("more than {limit} invariant subspaces")));
        }
        start = set.len();
        set.extend(fresh);
    }
    set.sort_by(|a, b| a.canonical_cmp(b));
    Ok(set)
}

/// Subspaces of the degree-`s` part of `F_{k,G}` stable under the
/// substitution generators, found from cyclic subspaces of unit and seeded
/// random vectors and closed under sum and intersection. Contains `{0}`
/// and the full space.
pub fn invariant_subspaces(g: &GroupSpec, k: usize) -> Result<Vec<RationalSubspace>> {
    g.check_k(k)?;
    let dim = g.word_dim(k);
    if dim > INVARIANT_GUARD {
        return Err(Error::Budget(format!(
            "invariant subspace search needs N <= {INVARIANT_GUARD}, got N = {dim}"
        )));
    }
    let gens = substitution_generators(k, g.class)?;
    let gens_p: Option<Vec<Vec<Vec<u64>>>> = gens
        .iter()
        .map(|m| m.row_vecs().iter().map(|r| r.iter().map(to_mod).collect()).collect())
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut seeds: Vec<Vec<Rational>> = (0..dim)
        .map(|i| (0..dim).map(|j| q(i64::from(i == j))).collect())
        .collect();
    for _ in 0..3 {
        seeds.push((0..dim).map(|_| q(rng.gen_range(-3..=3))).collect());
    }

    let full = RationalSubspace::full(dim);
    let mut set = vec![RationalSubspace::zero(dim), full.clone()];
    for seed in seeds {
        if seed.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(gp) = &gens_p {
            let seed_p = seed.iter().map(|x| to_mod(x).unwrap_or(0)).collect();
            if closure_dim_mod_p(gp, seed_p, dim) == dim {
                continue;
            }
        }
        let w = closure_exact(&gens, seed)?;
        if !set.contains(&w) {
            set.push(w);
        }
    }
    lattice_closure(set, 4096)
}

/// How the rational pencil enumeration went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RationalSearch {
    Enumerated { height: u32, obstructions: usize },
    /// The full enumeration exceeded its budget; only lines were searched.
    LinesOnly { height: u32, obstructions: usize },
    Skipped { word_dim: usize },
}

impl fmt::Display for RationalSearch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalSearch::Enumerated { height, obstructions } => {
                write!(f, "height {height}, {obstructions} obstructions")
            }
            RationalSearch::LinesOnly { height, obstructions } => {
                write!(f, "lines only at height {height} (subspace budget), {obstructions} obstructions")
            }
            RationalSearch::Skipped { word_dim } => {
                write!(f, "skipped (N = {word_dim} > {RATIONAL_SEARCH_GUARD})")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct PencilCalibration {
    pub group: GroupSpec,
    pub k: usize,
    pub word_dim: usize,
    pub alpha: u64,
    pub samples: usize,
    pub degenerate: usize,
    pub invariant_count: usize,
    pub rational_search: RationalSearch,
    pub witness: RationalSubspace,
    pub witness_r: usize,
    pub beta_matrix: Exponent,
    pub beta_group: Exponent,
    pub closed: Option<Rational>,
    /// Proper invariant subspaces whose exponent beats the full space.
    pub discrepancies: Vec<(RationalSubspace, usize, Exponent)>,
}

impl PencilCalibration {
    /// `None` without a closed formula.
    pub fn calibrated(&self) -> Option<bool> {
        self.closed.as_ref().map(|c| self.beta_group == Exponent::Finite(c.clone()))
    }

    pub fn report(&self) -> Report {
        let mut r = Report::new();
        r.push("group", self.group).push("k", self.k).push("class", self.group.class);
        r.push("top_dim", self.group.top_dim).push("word_dim", self.word_dim);
        r.push("alpha", self.alpha);
        r.push("samples", self.samples).push("degenerate_samples", self.degenerate);
        r.push("invariant_subspaces", self.invariant_count);
        r.push("rational_search", &self.rational_search);
        let w = if self.witness.dim() == self.word_dim {
            "full degree-s part".to_string()
        } else {
            self.witness.to_string()
        };
        r.push("witness", w).push("witness_dim", self.witness.dim());
        r.push("witness_r", self.witness_r);
        r.push("beta_matrix", &self.beta_matrix).push("beta_via_pencils", &self.beta_group);
        match &self.closed {
            Some(c) => r.push("beta_closed", crate::exactlin::fmt_rational(c)),
            None => r.push("beta_closed", "n/a"),
        };
        let verdict = match self.calibrated() {
            Some(true) => "match",
            Some(false) => "MISMATCH",
            None => "no closed formula",
        };
        r.push("calibration", verdict).push("discrepancies", self.discrepancies.len());
        r
    }
}

/// Recomputes `beta_k` as `(s / alpha) * max (dim W - r_W) / r_W` over the
/// invariant subspaces and, when `N <= 12`, every rational subspace spanned
/// by vectors of height at most `height`.
pub fn beta_via_pencils(g: &GroupSpec, k: usize, height: u32) -> Result<PencilCalibration> {
    beta_via_pencils_seeded(g, k, height, DEFAULT_SEED)
}

/// [`beta_via_pencils`] with an explicit word-map sampling seed.
pub fn beta_via_pencils_seeded(
    g: &GroupSpec,
    k: usize,
    height: u32,
    seed: u64,
) -> Result<PencilCalibration> {
    g.check_k(k)?;
    if height == 0 {
        return Err(Error::Domain("height bound must be at least 1".into()));
    }
    let n_words = g.word_dim(k);
    if n_words > INVARIANT_GUARD {
        return Err(Error::Budget(format!(
            "pencil recomputation needs N <= {INVARIANT_GUARD}, got N = {n_words}"
        )));
    }
    let wm = word_map_family(g, k, n_words + 1, seed)?;
    let family = wm.family()?;
    let invariant = invariant_subspaces(g, k)?;

    let full_exp = Exponent::Finite(family.dirichlet());
    let mut best = (full_exp.clone(), RationalSubspace::full(n_words), g.top_dim);
    let mut discrepancies = Vec::new();
    for w in invariant.iter().filter(|w| !w.is_zero()) {
        let r = family.phi(w)?;
        let e = exponent_of(w.dim(), r);
        if w.dim() < n_words && e > full_exp {
            discrepancies.push((w.clone(), r, e.clone()));
        }
        if e > best.0 {
            best = (e, w.clone(), r);
        }
    }
    let rational_search = if n_words <= RATIONAL_SEARCH_GUARD {
        let search = PencilSearch { max_subspaces: SUBSPACE_BUDGET, ..PencilSearch::new(height) };
        let (pencils, outcome): (_, fn(u32, usize) -> RationalSearch) =
            match enumerate_with(&family, &search) {
                Ok(p) => (p, |height, obstructions| RationalSearch::Enumerated { height, obstructions }),
                Err(Error::Budget(_)) => {
                    let lines = PencilSearch { max_dim: Some(1), ..search };
                    (enumerate_with(&family, &lines)?, |height, obstructions| {
                        RationalSearch::LinesOnly { height, obstructions }
                    })
                }
                Err(e) => return Err(e),
            };
        for p in &pencils {
            let e = pencil_exponent(p);
            if e > best.0 {
                best = (e, p.w.clone(), p.r);
            }
        }
        outcome(height, pencils.len())
    } else {
        RationalSearch::Skipped { word_dim: n_words }
    };

    let alpha = g.alpha(k);
    let factor = Rational::new(BigInt::from(g.class), BigInt::from(alpha));
    let closed = if g.has_closed_formula() { Some(beta_closed(g, k)?) } else { None };
    Ok(PencilCalibration {
        group: *g,
        k,
        word_dim: n_words,
        alpha,
        samples: wm.samples.len(),
        degenerate: wm.degenerate,
        invariant_count: invariant.len(),
        rational_search,
        beta_group: best.0.scale(&factor),
        beta_matrix: best.0,
        witness: best.1,
        witness_r: best.2,
        closed,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::ratio;

    fn spec(s: &str) -> GroupSpec {
        s.parse().unwrap()
    }

    #[test]
    fn closed_spot_values() {
        assert_eq!(beta_closed(&spec("heisenberg:3"), 3).unwrap(), ratio(4, 9));
        assert_eq!(beta_closed(&spec("heisenberg:3"), 2).unwrap(), rat(0));
        assert_eq!(beta_closed(&spec("ut:4"), 3).unwrap(), ratio(7, 11));
        assert_eq!(beta_closed(&spec("free:2:3"), 3).unwrap(), ratio(3, 11));
    }

    #[test]
    fn threshold_text() {
        let err = beta_closed(&spec("heisenberg:3"), 1).unwrap_err();
        assert!(matches!(&err, Error::Threshold(t) if t.contains("k >= 2m")));
        assert!(matches!(beta_closed(&spec("ut:5"), 4), Err(Error::Unsupported(_))));
    }

    #[test]
    fn word_map_dimensions() {
        let w = word_map_family(&spec("heisenberg:3"), 2, 2, 7).unwrap();
        assert_eq!((w.word_dim, w.samples[0].rows(), w.samples[0].cols()), (1, 1, 1));
        let w = word_map_family(&spec("free:2:3"), 2, 3, 7).unwrap();
        assert_eq!((w.word_dim, w.group.top_dim), (2, 2));
    }

    #[test]
    fn equal_arguments_are_degenerate() {
        let g = spec("heisenberg:3");
        let x = vec![vec![q(1), q(2), q(0)], vec![q(1), q(2), q(5)]];
        let s = word_map_matrix(&g, 2, &x).unwrap();
        assert!(is_degenerate(&g, &s));
    }

    #[test]
    fn heisenberg_invariants_are_trivial() {
        let inv = invariant_subspaces(&spec("heisenberg:3"), 3).unwrap();
        assert_eq!(inv.len(), 2);
    }

    #[test]
    fn pencil_recomputation_matches() {
        for (g, k) in [("heisenberg:3", 3), ("ut:4", 3), ("free:2:3", 3)] {
            let c = beta_via_pencils(&spec(g), k, 1).unwrap();
            assert_eq!(c.calibrated(), Some(true), "{g} k={k}");
        }
    }
}

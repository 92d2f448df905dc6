//! Free nilpotent Lie algebras over `Q` in the Lyndon basis, the small
//! target algebras used for word maps, and Bass–Guivarc'h degrees.
//!
//! Lyndon words of length `d` on `k` letters, bracketed by their standard
//! factorization, form a basis of the degree-`d` part of the free Lie algebra.
//! Structure constants are obtained by expanding brackets in the free
//! associative algebra and peeling off the lexicographically smallest word,
//! which for a Lie polynomial is always a Lyndon word.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{fmt_rational, rat, Rational};

pub type Word = Vec<u8>;

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Witt's formula `(1/d) * sum_{e | d} mu(d/e) k^e`: the dimension of the
/// degree-`d` part of the free Lie algebra on `k` generators.
pub fn witt_dimension(k: usize, d: usize) -> u64 {
    assert!(k >= 1 && d >= 1, "witt_dimension needs k, d >= 1");
    let mut total: i128 = 0;
    for e in 1..=d {
        if d.is_multiple_of(e) {
            total += mobius((d / e) as u64) as i128 * (k as i128).pow(e as u32);
        }
    }
    (total / d as i128) as u64
}

/// Lyndon words of length at most `max_len` on `k` letters, ordered by length
/// and then lexicographically (Duval's generation).
pub fn lyndon_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if k == 0 || max_len == 0 {
        return out;
    }
    let top = (k - 1) as u8;
    let mut w: Word = vec![0];
    loop {
        out.push(w.clone());
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// Standard factorization `w = u v` with `v` the longest proper Lyndon suffix.
pub fn standard_factorization(w: &[u8]) -> Option<(Word, Word)> {
    if w.len() < 2 {
        return None;
    }
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).map(|i| (w[..i].to_vec(), w[i..].to_vec()))
}

pub fn letter_name(l: u8) -> String {
    if l < 26 {
        ((b'a' + l) as char).to_string()
    } else {
        format!("x{l}")
    }
}

/// Hall basis of the free nilpotent Lie algebra of class `s` on `k` letters.
#[derive(Clone, Debug)]
pub struct LyndonBasis {
    k: usize,
    s: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    factors: Vec<Option<(usize, usize)>>,
}

impl LyndonBasis {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn class(&self) -> usize {
        self.s
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn degree(&self, i: usize) -> usize {
        self.words[i].len()
    }

    pub fn index_of(&self, w: &[u8]) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Indices of the two halves of the standard factorization.
    pub fn factors(&self, i: usize) -> Option<(usize, usize)> {
        self.factors[i]
    }

    /// Indices of the degree-`d` elements.
    pub fn degree_range(&self, d: usize) -> std::ops::Range<usize> {
        let start = self.words.iter().position(|w| w.len() >= d).unwrap_or(self.words.len());
        let end = self.words.iter().position(|w| w.len() > d).unwrap_or(self.words.len());
        start..end.max(start)
    }

    pub fn count_in_degree(&self, d: usize) -> usize {
        self.degree_range(d).len()
    }

    pub fn bracket_string(&self, i: usize) -> String {
        match self.factors[i] {
            None => letter_name(self.words[i][0]),
            Some((u, v)) => format!("[{},{}]", self.bracket_string(u), self.bracket_string(v)),
        }
    }
}

pub fn lyndon_basis(k: usize, s: usize) -> LyndonBasis {
    let words = lyndon_words(k, s);
    let index: HashMap<Word, usize> =
        words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let factors = words
        .iter()
        .map(|w| standard_factorization(w).map(|(u, v)| (index[&u], index[&v])))
        .collect();
    LyndonBasis { k, s, words, index, factors }
}

/// The nilpotent groups with built-in laws and formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    /// Free nilpotent of class `class` on `gens` generators.
    FreeNilpotent { gens: usize, class: usize },
    /// Heisenberg group of dimension `dim = 2m + 1`.
    Heisenberg { dim: usize },
    /// Two-step group with abelianization of dimension `abelian` and
    /// commutator subgroup of dimension `commutator`.
    TwoStep { abelian: usize, commutator: usize },
    /// Unipotent upper-triangular `n x n` matrices.
    Unitriangular { n: usize },
}

impl FamilyTag {
    /// Nilpotency class.
    pub fn class(&self) -> usize {
        match *self {
            FamilyTag::FreeNilpotent { class, .. } => class,
            FamilyTag::Heisenberg { .. } | FamilyTag::TwoStep { .. } => 2,
            FamilyTag::Unitriangular { n } => n - 1,
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            FamilyTag::FreeNilpotent { gens, class } => gens >= 1 && class >= 1,
            FamilyTag::Heisenberg { dim } => dim >= 3 && dim % 2 == 1,
            FamilyTag::TwoStep { abelian, commutator } => {
                commutator >= 1 && commutator <= abelian * abelian.saturating_sub(1) / 2
            }
            FamilyTag::Unitriangular { n } => n >= 2,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::Unsupported(format!("invalid group parameters {self}")))
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyTag::FreeNilpotent { gens, class } => write!(f, "free:{gens}:{class}"),
            FamilyTag::Heisenberg { dim } => write!(f, "heisenberg:{dim}"),
            FamilyTag::TwoStep { abelian, commutator } => {
                write!(f, "two_step:{abelian}:{commutator}")
            }
            FamilyTag::Unitriangular { n } => write!(f, "ut:{n}"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    /// `heisenberg:<dim>`, `two_step:<k-floor>:<p>`, `ut:<n>`, `free:<m>:<s>`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::Parse { line: 0, msg: format!("bad group descriptor `{s}`") })
        };
        let tag = match (parts[0], parts.len()) {
            ("heisenberg", 2) => FamilyTag::Heisenberg { dim: num(1)? },
            ("two_step", 3) => FamilyTag::TwoStep { abelian: num(1)?, commutator: num(2)? },
            ("ut", 2) => FamilyTag::Unitriangular { n: num(1)? },
            ("free", 3) => FamilyTag::FreeNilpotent { gens: num(1)?, class: num(2)? },
            _ => {
                return Err(Error::Parse { line: 0, msg: format!("bad group descriptor `{s}`") })
            }
        };
        tag.validate()
    }
}

/// Graded nilpotent Lie algebra over `Q` with structure constants on a fixed
/// basis ordered by degree.
#[derive(Clone, Debug)]
pub struct GradedLieAlgebra {
    name: String,
    graded_dims: Vec<usize>,
    labels: Vec<String>,
    degrees: Vec<usize>,
    /// `table[i * dim + j]` lists the nonzero `(l, c)` with `[e_i, e_j] = sum c e_l`.
    table: Vec<Vec<(usize, Rational)>>,
}

impl GradedLieAlgebra {
    fn from_parts(name: String, labels: Vec<String>, degrees: Vec<usize>) -> Self {
        let dim = labels.len();
        let s = degrees.iter().copied().max().unwrap_or(0);
        let mut graded_dims = vec![0; s];
        for &d in &degrees {
            graded_dims[d - 1] += 1;
        }
        GradedLieAlgebra { name, graded_dims, labels, degrees, table: vec![Vec::new(); dim * dim] }
    }

    fn set(&mut self, i: usize, j: usize, terms: Vec<(usize, Rational)>) {
        let dim = self.dim();
        let neg = terms.iter().map(|(l, c)| (*l, -c.clone())).collect();
        self.table[i * dim + j] = terms;
        self.table[j * dim + i] = neg;
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn class(&self) -> usize {
        self.graded_dims.len()
    }

    pub fn graded_dims(&self) -> &[usize] {
        &self.graded_dims
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    /// Basis indices of degree `d`.
    pub fn layer(&self, d: usize) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degrees[i] == d).collect()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.table[i * self.dim() + j]
    }

    pub fn unit(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = Rational::one();
        v
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let dim = self.dim();
        let mut out = vec![Rational::zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let terms = &self.table[i * dim + j];
                if terms.is_empty() {
                    continue;
                }
                let p = xi * yj;
                for (l, c) in terms {
                    out[*l] += &p * c;
                }
            }
        }
        out
    }

    /// All nonzero structure constants as `(i, j, l, c)`.
    pub fn constants(&self) -> impl Iterator<Item = (usize, usize, usize, &Rational)> + '_ {
        let dim = self.dim();
        self.table.iter().enumerate().flat_map(move |(ij, terms)| {
            terms.iter().map(move |(l, c)| (ij / dim, ij % dim, *l, c))
        })
    }

    /// Plain-text dump: degree table, basis labels and nonzero constants.
    pub fn dump(&self) -> String {
        let mut out = format!("# algebra {}\n", self.name);
        let dims: Vec<String> = self.graded_dims.iter().map(usize::to_string).collect();
        out.push_str(&format!("degrees {}\n", dims.join(" ")));
        for (i, (label, d)) in self.labels.iter().zip(&self.degrees).enumerate() {
            out.push_str(&format!("basis {i} {label} {d}\n"));
        }
        for (i, j, l, c) in self.constants() {
            out.push_str(&format!("const {i} {j} {l} {}\n", fmt_rational(c)));
        }
        out
    }
}

/// Expansion of a Lie element in the free associative algebra.
type Poly = BTreeMap<Word, i64>;

fn commutator(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (u, cu) in a {
        for (v, cv) in b {
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            *out.entry(uv).or_insert(0) += cu * cv;
            let mut vu = v.clone();
            vu.extend_from_slice(u);
            *out.entry(vu).or_insert(0) -= cu * cv;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// The free nilpotent Lie algebra of class `s` on `k` generators in its
/// Lyndon basis, together with the basis.
pub fn free_nilpotent(k: usize, s: usize) -> (LyndonBasis, GradedLieAlgebra) {
    let basis = lyndon_basis(k, s);
    let mut expansions: Vec<Poly> = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let e = match basis.factors(i) {
            None => Poly::from([(basis.words()[i].clone(), 1)]),
            Some((u, v)) => commutator(&expansions[u], &expansions[v]),
        };
        expansions.push(e);
    }
    let labels = (0..basis.len()).map(|i| basis.bracket_string(i)).collect();
    let degrees = basis.words().iter().map(Vec::len).collect();
    let mut alg = GradedLieAlgebra::from_parts(format!("free_nilpotent({k},{s})"), labels, degrees);
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if basis.degree(i) + basis.degree(j) > s {
                continue;
            }
            let mut p = commutator(&expansions[i], &expansions[j]);
            let mut terms = Vec::new();
            while let Some((w, &c)) = p.iter().next() {
                let l = basis
                    .index_of(w)
                    .unwrap_or_else(|| panic!("leading word {w:?} of a Lie polynomial is not Lyndon"));
                for (u, cu) in &expansions[l] {
                    let e = p.entry(u.clone()).or_insert(0);
                    *e -= c * cu;
                }
                p.retain(|_, x| *x != 0);
                terms.push((l, rat(c)));
            }
            terms.sort_by_key(|t| t.0);
            alg.set(i, j, terms);
        }
    }
    (basis, alg)
}

fn heisenberg(dim: usize) -> GradedLieAlgebra {
    let m = (dim - 1) / 2;
    let mut labels: Vec<String> = (1..=m).map(|i| format!("X{i}")).collect();
    labels.extend((1..=m).map(|i| format!("Y{i}")));
    labels.push("Z".into());
    let mut degrees = vec![1; 2 * m];
    degrees.push(2);
    let mut alg = GradedLieAlgebra::from_parts(format!("heisenberg({dim})"), labels, degrees);
    for i in 0..m {
        alg.set(i, m + i, vec![(2 * m, rat(1))]);
    }
    alg
}

fn two_step(abelian: usize, commutator_dim: usize) -> GradedLieAlgebra {
    let mut labels: Vec<String> = (1..=abelian).map(|i| format!("e{i}")).collect();
    labels.extend((1..=commutator_dim).map(|i| format!("f{i}")));
    let mut degrees = vec![1; abelian];
    degrees.extend(std::iter::repeat_n(2, commutator_dim));
    let mut alg = GradedLieAlgebra::from_parts(
        format!("two_step({abelian},{commutator_dim})"),
        labels,
        degrees,
    );
    // [e_a, e_b] for a < b in Lyndon order, projected onto the first p slots.
    let mut idx = 0;
    for a in 0..abelian {
        for b in a + 1..abelian {
            if idx < commutator_dim {
                alg.set(a, b, vec![(abelian + idx, rat(1))]);
            }
            idx += 1;
        }
    }
    alg
}

/// Strictly upper-triangular `n x n` matrices; basis `E_ij` ordered by
/// `j - i` and then by `i`.
pub fn unitriangular(n: usize) -> GradedLieAlgebra {
    let mut pairs = Vec::new();
    for d in 1..n {
        for i in 0..n - d {
            pairs.push((i, i + d));
        }
    }
    let labels = pairs.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
    let degrees = pairs.iter().map(|(i, j)| j - i).collect();
    let pos: HashMap<(usize, usize), usize> =
        pairs.iter().enumerate().map(|(idx, &p)| (p, idx)).collect();
    let mut alg = GradedLieAlgebra::from_parts(format!("ut({n})"), labels, degrees);
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for (b, &(k, l)) in pairs.iter().enumerate().skip(a + 1) {
            // [E_ij, E_kl] = d_jk E_il - d_li E_kj
            let mut terms = Vec::new();
            if j == k {
                terms.push((pos[&(i, l)], rat(1)));
            }
            if l == i {
                terms.push((pos[&(k, j)], rat(-1)));
            }
            if !terms.is_empty() {
                alg.set(a, b, terms);
            }
        }
    }
    alg
}

/// The Lie algebra of the group itself, used as the target of word maps.
pub fn target_algebra(tag: FamilyTag) -> Result<GradedLieAlgebra> {
    let tag = tag.validate()?;
    Ok(match tag {
        FamilyTag::FreeNilpotent { gens, class } => free_nilpotent(gens, class).1,
        FamilyTag::Heisenberg { dim } => heisenberg(dim),
        FamilyTag::TwoStep { abelian, commutator } => two_step(abelian, commutator),
        FamilyTag::Unitriangular { n } => unitriangular(n),
    })
}

/// The relatively free algebra `F_{k,G}` on `k` letters. For every built-in
/// family this is the free nilpotent algebra of the group's class.
pub fn build_algebra(tag: FamilyTag, k: usize) -> Result<(LyndonBasis, GradedLieAlgebra)> {
    let tag = tag.validate()?;
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    Ok(free_nilpotent(k, tag.class()))
}

/// Evaluates every basis element of `basis` at the tuple `x` of elements of
/// `target` (one per letter), returning their coordinates in `target`.
pub fn evaluate_basis(
    basis: &LyndonBasis,
    target: &GradedLieAlgebra,
    x: &[Vec<Rational>],
) -> Result<Vec<Vec<Rational>>> {
    if x.len() != basis.k() {
        return Err(Error::Dimension(format!("{} arguments for {} letters", x.len(), basis.k())));
    }
    if let Some(v) = x.iter().find(|v| v.len() != target.dim()) {
        return Err(Error::Dimension(format!(
            "argument of length {} in an algebra of dimension {}",
            v.len(),
            target.dim()
        )));
    }
    let mut values: Vec<Vec<Rational>> = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let v = match basis.factors(i) {
            None => x[basis.words()[i][0] as usize].clone(),
            Some((u, w)) => target.bracket(&values[u], &values[w]),
        };
        values.push(v);
    }
    Ok(values)
}

/// Bass–Guivarc'h degree `sum_d d * dim(layer d)`.
pub fn bass_guivarch(alg: &GradedLieAlgebra) -> u64 {
    alg.graded_dims().iter().enumerate().map(|(i, &n)| ((i + 1) * n) as u64).sum()
}

/// Checks `[x, y] = -[y, x]` on all basis pairs.
pub fn is_antisymmetric(alg: &GradedLieAlgebra) -> bool {
    let dim = alg.dim();
    (0..dim).all(|i| {
        (0..dim).all(|j| {
            let a = alg.bracket(&alg.unit(i), &alg.unit(j));
            let b = alg.bracket(&alg.unit(j), &alg.unit(i));
            a.iter().zip(&b).all(|(x, y)| (x + y).is_zero())
        })
    })
}

/// Jacobiator `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`.
pub fn jacobiator(
    alg: &GradedLieAlgebra,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Vec<Rational> {
    let a = alg.bracket(x, &alg.bracket(y, z));
    let b = alg.bracket(y, &alg.bracket(z, x));
    let c = alg.bracket(z, &alg.bracket(x, y));
    a.into_iter().zip(b).zip(c).map(|((a, b), c)| a + b + c).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witt_examples() {
        assert_eq!(witt_dimension(4, 1), 4);
        assert_eq!(witt_dimension(2, 3), 2);
        assert_eq!(witt_dimension(3, 2), 3);
        assert_eq!(witt_dimension(2, 6), 9);
    }

    #[test]
    fn lyndon_examples() {
        let b = lyndon_basis(2, 2);
        let names: Vec<String> = (0..b.len()).map(|i| b.bracket_string(i)).collect();
        assert_eq!(names, ["a", "b", "[a,b]"]);

        let b = lyndon_basis(2, 3);
        let names: Vec<String> = b.degree_range(3).map(|i| b.bracket_string(i)).collect();
        assert_eq!(names, ["[a,[a,b]]", "[[a,b],b]"]);

        let b = lyndon_basis(1, 5);
        assert_eq!(b.len(), 1);
        assert_eq!(b.count_in_degree(3), 0);
    }

    #[test]
    fn standard_factorizations() {
        assert_eq!(standard_factorization(&[0, 0, 1]), Some((vec![0], vec![0, 1])));
        assert_eq!(standard_factorization(&[0, 1, 1]), Some((vec![0, 1], vec![1])));
        assert_eq!(standard_factorization(&[0, 1, 0, 1, 1]), Some((vec![0, 1], vec![0, 1, 1])));
        assert!(is_lyndon(&[0, 0, 1, 0, 1]));
        assert!(!is_lyndon(&[0, 1, 0, 1]));
    }

    #[test]
    fn build_examples() {
        let heis = FamilyTag::FreeNilpotent { gens: 2, class: 2 };
        assert_eq!(build_algebra(heis, 2).unwrap().1.graded_dims(), &[2, 1]);
        for k in 2..6 {
            let (_, a) = build_algebra(FamilyTag::FreeNilpotent { gens: 2, class: 3 }, k).unwrap();
            assert_eq!(a.graded_dims(), &[k, (k * k - k) / 2, (k * k * k - k) / 3]);
        }
        let ut4 = FamilyTag::Unitriangular { n: 4 };
        assert_eq!(build_algebra(ut4, 3).unwrap().1.graded_dims(), &[3, 3, 8]);
        assert_eq!(target_algebra(ut4).unwrap().graded_dims(), &[3, 2, 1]);
    }

    #[test]
    fn descriptors_parse() {
        assert_eq!("heisenberg:3".parse::<FamilyTag>().unwrap(), FamilyTag::Heisenberg { dim: 3 });
        assert_eq!(
            "two_step:3:2".parse::<FamilyTag>().unwrap(),
            FamilyTag::TwoStep { abelian: 3, commutator: 2 }
        );
        assert_eq!("ut:4".parse::<FamilyTag>().unwrap().to_string(), "ut:4");
        assert_eq!("free:2:3".parse::<FamilyTag>().unwrap().class(), 3);
        for bad in ["heisenberg:4", "two_step:2:2", "ut:1", "sl:2", "free:2", "heisenberg:x"] {
            assert!(bad.parse::<FamilyTag>().is_err(), "{bad}");
        }
    }

    #[test]
    fn evaluation_examples() {
        let target = target_algebra(FamilyTag::Heisenberg { dim: 3 }).unwrap();
        let basis = lyndon_basis(2, 2);
        let x = vec![target.unit(0), target.unit(1)];
        let vals = evaluate_basis(&basis, &target, &x).unwrap();
        assert_eq!(vals[2], target.unit(2));

        let same = vec![target.unit(0), target.unit(0)];
        let vals = evaluate_basis(&basis, &target, &same).unwrap();
        assert!(vals[2].iter().all(Zero::is_zero));

        assert!(evaluate_basis(&basis, &target, &x[..1]).is_err());
        assert!(evaluate_basis(&basis, &target, &[vec![rat(1)], vec![rat(2)]]).is_err());
    }

    #[test]
    fn bass_guivarch_examples() {
        for k in 2..8 {
            assert_eq!(bass_guivarch(&free_nilpotent(k, 2).1), (k * k) as u64);
        }
        assert_eq!(bass_guivarch(&free_nilpotent(5, 1).1), 5);
    }

    #[test]
    fn structure_constants_are_integral() {
        let (_, a) = free_nilpotent(3, 4);
        assert!(a.constants().all(|(_, _, _, c)| c.is_integer()));
        assert!(is_antisymmetric(&a));
    }

    #[test]
    fn dump_lists_every_constant() {
        let (_, a) = free_nilpotent(2, 2);
        assert_eq!(
            a.dump(),
            "# algebra free_nilpotent(2,2)\ndegrees 2 1\nbasis 0 a 1\nbasis 1 b 1\n\
             basis 2 [a,b] 2\nconst 0 1 2 1\nconst 1 0 2 -1\n"
        );
    }
}

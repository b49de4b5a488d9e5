//! Finite (possibly non-reduced) root systems, their Weyl groups and Dynkin
//! diagram combinatorics.
//!
//! Every root is stored by its integer coefficient vector over the basis Δ.
//! Points of the vector space `V` on which roots are linear forms are stored in
//! the coordinates dual to Δ: the `i`-th coordinate of `x` is `<α_i, x>`, so
//! that `<a, x>` is the plain dot product of the coefficient vector of `a`
//! with `x`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};

use crate::linalg::{self, Matrix};
use crate::num::{q, Q};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootDataError {
    #[error("not a root system: {0}")]
    NonRootSystem(String),
    #[error("unknown catalogue entry {0:?}")]
    UnknownType(String),
    #[error("subset refers to simple root {index} but the rank is {rank}")]
    SubsetOutOfRange { index: usize, rank: usize },
    #[error("unknown simple-root label {0:?}")]
    UnknownLabel(String),
}

/// A subset of the simple roots Δ, as a bit mask over basis positions.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DiagramSubset(u64);

impl DiagramSubset {
    pub const EMPTY: DiagramSubset = DiagramSubset(0);

    pub fn from_mask(mask: u64) -> Self {
        DiagramSubset(mask)
    }

    pub fn full(rank: usize) -> Self {
        DiagramSubset(if rank == 64 { u64::MAX } else { (1u64 << rank) - 1 })
    }

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        DiagramSubset(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn singleton(i: usize) -> Self {
        DiagramSubset(1 << i)
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    pub fn union(self, o: Self) -> Self {
        DiagramSubset(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        DiagramSubset(self.0 & o.0)
    }

    pub fn difference(self, o: Self) -> Self {
        DiagramSubset(self.0 & !o.0)
    }

    pub fn is_subset(self, o: Self) -> bool {
        self.0 & !o.0 == 0
    }

    /// All subsets of a `rank`-element Δ, ordered by mask.
    pub fn all(rank: usize) -> impl Iterator<Item = DiagramSubset> {
        (0..1u64 << rank).map(DiagramSubset)
    }

    /// All subsets of `self`.
    pub fn subsets(self) -> impl Iterator<Item = DiagramSubset> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(DiagramSubset(cur))
        })
    }
}

impl fmt::Debug for DiagramSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|i| i + 1)).finish()
    }
}

/// A finite root system with a chosen basis and a Weyl-invariant inner product.
#[derive(Debug, Clone)]
pub struct RootDatum {
    name: String,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    negative: Vec<usize>,
    double: Vec<Option<usize>>,
    half: Vec<Option<usize>>,
    n_positive: usize,
    gram: Matrix,
    cartan: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    weyl: OnceLock<WeylGroup>,
}

/// Input accepted by [`build_root_datum`].
#[derive(Debug, Clone)]
pub enum TypeSpec {
    /// Catalogue name such as `"A2"`, `"BC2"`, `"G2"` or a product `"A1xA2"`.
    Catalogue(String),
    /// Roots in a Euclidean `Q^n` (standard dot product), with an optional
    /// list of indices into `roots` to use as basis.
    Explicit { roots: Vec<Vec<Q>>, basis: Option<Vec<usize>> },
}

pub fn build_root_datum(spec: &TypeSpec) -> Result<RootDatum, RootDataError> {
    match spec {
        TypeSpec::Catalogue(name) => RootDatum::catalogue(name),
        TypeSpec::Explicit { roots, basis } => {
            RootDatum::from_vectors("explicit", roots.clone(), basis.clone())
        }
    }
}

fn e(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = Q::one();
    v
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(a: &[Q], s: &Q) -> Vec<Q> {
    a.iter().map(|x| x * s).collect()
}

/// Catalogue entries in Bourbaki coordinates: `(roots, simple roots)`.
fn classical(letter: &str, n: usize) -> Result<(Vec<Vec<Q>>, Vec<Vec<Q>>), RootDataError> {
    let bad = || RootDataError::UnknownType(format!("{letter}{n}"));
    let mut roots = Vec::new();
    let mut simple = Vec::new();
    let pm_pairs = |dim: usize, roots: &mut Vec<Vec<Q>>| {
        for i in 0..dim {
            for j in i + 1..dim {
                for (s, t) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    roots.push(add(&scale(&e(dim, i), &q(s)), &scale(&e(dim, j), &q(t))));
                }
            }
        }
    };
    match letter {
        "A" => {
            if n < 1 {
                return Err(bad());
            }
            let d = n + 1;
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        roots.push(sub(&e(d, i), &e(d, j)));
                    }
                }
            }
            for i in 0..n {
                simple.push(sub(&e(d, i), &e(d, i + 1)));
            }
        }
        "B" | "C" | "BC" => {
            let min = if letter == "BC" { 1 } else { 2 };
            if n < min {
                return Err(bad());
            }
            pm_pairs(n, &mut roots);
            for i in 0..n {
                if letter != "C" {
                    roots.push(e(n, i));
                    roots.push(scale(&e(n, i), &q(-1)));
                }
                if letter != "B" {
                    roots.push(scale(&e(n, i), &q(2)));
                    roots.push(scale(&e(n, i), &q(-2)));
                }
            }
            for i in 0..n - 1 {
                simple.push(sub(&e(n, i), &e(n, i + 1)));
            }
            simple.push(if letter == "C" { scale(&e(n, n - 1), &q(2)) } else { e(n, n - 1) });
        }
        "D" => {
            if n < 3 {
                return Err(bad());
            }
            pm_pairs(n, &mut roots);
            for i in 0..n - 1 {
                simple.push(sub(&e(n, i), &e(n, i + 1)));
            }
            simple.push(add(&e(n, n - 2), &e(n, n - 1)));
        }
        "G" => {
            if n != 2 {
                return Err(bad());
            }
            let d = 3;
            for i in 0..d {
                for j in 0..d {
                    if i != j {
                        roots.push(sub(&e(d, i), &e(d, j)));
                    }
                }
                let long = (0..d)
                    .map(|k| if k == i { q(2) } else { q(-1) })
                    .collect::<Vec<_>>();
                roots.push(long.clone());
                roots.push(scale(&long, &q(-1)));
            }
            simple.push(sub(&e(d, 0), &e(d, 1)));
            simple.push(vec![q(-2), q(1), q(1)]);
        }
        "F" => {
            if n != 4 {
                return Err(bad());
            }
            pm_pairs(4, &mut roots);
            for i in 0..4 {
                roots.push(e(4, i));
                roots.push(scale(&e(4, i), &q(-1)));
            }
            let half = Q::new(1.into(), 2.into());
            for signs in 0..16u32 {
                roots.push(
                    (0..4)
                        .map(|k| if signs >> k & 1 == 1 { -half.clone() } else { half.clone() })
                        .collect(),
                );
            }
            simple.push(sub(&e(4, 1), &e(4, 2)));
            simple.push(sub(&e(4, 2), &e(4, 3)));
            simple.push(e(4, 3));
            simple.push(vec![half.clone(), -half.clone(), -half.clone(), -half]);
        }
        _ => return Err(bad()),
    }
    Ok((roots, simple))
}

fn parse_factor(s: &str) -> Result<(String, usize), RootDataError> {
    let t = s.trim().to_ascii_uppercase();
    let split = t.find(|c: char| c.is_ascii_digit()).ok_or_else(|| RootDataError::UnknownType(s.into()))?;
    let (l, d) = t.split_at(split);
    let n: usize = d.parse().map_err(|_| RootDataError::UnknownType(s.into()))?;
    Ok((l.to_string(), n))
}

impl RootDatum {
    /// Builds a catalogue root system (`A_n, B_n, C_n, D_n, G2, F4, BC_n`) or an
    /// orthogonal product such as `"A1xA2"`.
    pub fn catalogue(name: &str) -> Result<RootDatum, RootDataError> {
        let factors: Vec<&str> = name.split(['x', 'X', '×', '*']).collect();
        if factors.iter().any(|f| f.trim().is_empty()) {
            return Err(RootDataError::UnknownType(name.into()));
        }
        let mut parts = Vec::new();
        for f in &factors {
            let (l, n) = parse_factor(f)?;
            parts.push(classical(&l, n).map_err(|_| RootDataError::UnknownType(name.into()))?);
        }
        let total: usize = parts.iter().map(|(r, _)| r[0].len()).sum();
        let mut roots = Vec::new();
        let mut simple = Vec::new();
        let mut offset = 0;
        for (r, s) in &parts {
            let d = r[0].len();
            let embed = |v: &Vec<Q>| {
                let mut w = vec![Q::zero(); total];
                w[offset..offset + d].clone_from_slice(v);
                w
            };
            roots.extend(r.iter().map(embed));
            simple.extend(s.iter().map(embed));
            offset += d;
        }
        let basis = simple
            .iter()
            .map(|s| roots.iter().position(|r| r == s).expect("simple root listed among roots"))
            .collect();
        let canonical = factors
            .iter()
            .map(|f| {
                let (l, n) = parse_factor(f).expect("parsed above");
                format!("{l}{n}")
            })
            .collect::<Vec<_>>()
            .join("x");
        let mut d = RootDatum::from_vectors(&canonical, roots, Some(basis))?;
        d.ambient_dim = d.rank;
        Ok(d)
    }

    /// Validates the root-system axioms for vectors in a Euclidean `Q^n` and
    /// builds the datum. Without an explicit basis, the simple roots of the
    /// lexicographic positive system are used.
    pub fn from_vectors(
        name: &str,
        vectors: Vec<Vec<Q>>,
        basis: Option<Vec<usize>>,
    ) -> Result<RootDatum, RootDataError> {
        let bad = |m: String| Err(RootDataError::NonRootSystem(m));
        let Some(first) = vectors.first() else {
            return bad("empty root list".into());
        };
        let n = first.len();
        if vectors.iter().any(|v| v.len() != n) {
            return bad("roots of different lengths".into());
        }
        let set: BTreeSet<&Vec<Q>> = vectors.iter().collect();
        if set.len() != vectors.len() {
            return bad("repeated root".into());
        }
        let dotq = |a: &[Q], b: &[Q]| linalg::dot(a, b);
        for a in &vectors {
            if a.iter().all(|x| x.is_zero()) {
                return bad("zero vector".into());
            }
            let neg: Vec<Q> = a.iter().map(|x| -x).collect();
            if !set.contains(&neg) {
                return bad("not closed under negation".into());
            }
        }
        for a in &vectors {
            let aa = dotq(a, a);
            for b in &vectors {
                let ab = dotq(a, b);
                let n_ba = q(2) * &ab / &aa;
                if !n_ba.is_integer() {
                    return bad("non-integral Cartan number".into());
                }
                let refl = sub(b, &scale(a, &n_ba));
                if !set.contains(&refl) {
                    return bad("not closed under reflections".into());
                }
                // proportional roots may only differ by ±1/2, ±1, ±2
                let bb = dotq(b, b);
                if &ab * &ab == &aa * &bb {
                    let ratio = &ab / &aa;
                    let ok = [q(1), q(-1), q(2), q(-2), Q::new(1.into(), 2.into()), Q::new((-1).into(), 2.into())];
                    if !ok.contains(&ratio) {
                        return bad("proportional roots with forbidden ratio".into());
                    }
                }
            }
        }
        let rank = linalg::rank(&vectors);
        let simple_idx: Vec<usize> = match basis {
            Some(b) => {
                if b.iter().any(|&i| i >= vectors.len()) {
                    return bad("basis index out of range".into());
                }
                b
            }
            None => {
                let positive = |v: &Vec<Q>| v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_positive());
                let pos: Vec<&Vec<Q>> = vectors.iter().filter(|v| positive(v)).collect();
                let mut simple = Vec::new();
                for (i, v) in vectors.iter().enumerate() {
                    if !positive(v) {
                        continue;
                    }
                    let decomposable = pos.iter().any(|p| {
                        let rest = sub(v, p);
                        rest.iter().any(|x| !x.is_zero()) && pos.iter().any(|r| **r == rest)
                    });
                    if !decomposable {
                        simple.push(i);
                    }
                }
                simple
            }
        };
        if simple_idx.len() != rank {
            return bad(format!("basis has {} elements but the rank is {rank}", simple_idx.len()));
        }
        // coefficients over the basis
        let smat: Matrix = linalg::transpose(&simple_idx.iter().map(|&i| vectors[i].clone()).collect());
        let mut coeff_roots = Vec::with_capacity(vectors.len());
        for v in &vectors {
            let Some(c) = linalg::solve(&smat, v) else {
                return bad("root outside the span of the basis".into());
            };
            if c.iter().any(|x| !x.is_integer()) {
                return bad("root is not an integral combination of the basis".into());
            }
            let ci: Vec<i64> = c.iter().map(|x| i64::try_from(x.to_integer()).expect("small coefficient")).collect();
            if ci.iter().any(|&x| x > 0) && ci.iter().any(|&x| x < 0) {
                return bad("basis does not give a positive system".into());
            }
            coeff_roots.push(ci);
        }
        // Gram matrix of the basis, normalised per Dynkin component
        let simple_vecs: Vec<&Vec<Q>> = simple_idx.iter().map(|&i| &vectors[i]).collect();
        let mut gram: Matrix = simple_vecs
            .iter()
            .map(|a| simple_vecs.iter().map(|b| dotq(a, b)).collect())
            .collect();
        let comps = graph_components(rank, |i, j| !gram[i][j].is_zero());
        for comp in &comps {
            let shortest = comp.iter().map(|&i| gram[i][i].clone()).min().expect("nonempty component");
            let factor = q(2) / shortest;
            for &i in comp {
                for &j in comp {
                    gram[i][j] *= &factor;
                }
            }
        }
        Ok(Self::assemble(name.to_string(), n, coeff_roots, gram))
    }

    fn assemble(name: String, ambient_dim: usize, mut roots: Vec<Vec<i64>>, gram: Matrix) -> RootDatum {
        let rank = gram.len();
        let height = |r: &Vec<i64>| r.iter().sum::<i64>();
        roots.sort_by(|a, b| {
            let pa = height(a) > 0;
            let pb = height(b) > 0;
            pb.cmp(&pa)
                .then(height(a).abs().cmp(&height(b).abs()))
                .then_with(|| {
                    let ka: Vec<i64> = a.iter().map(|x| -x.abs()).collect();
                    let kb: Vec<i64> = b.iter().map(|x| -x.abs()).collect();
                    ka.cmp(&kb)
                })
        });
        let n_positive = roots.iter().filter(|r| height(r) > 0).count();
        let index: HashMap<Vec<i64>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let negative = roots
            .iter()
            .map(|r| index[&r.iter().map(|x| -x).collect::<Vec<_>>()])
            .collect();
        let double = roots
            .iter()
            .map(|r| index.get(&r.iter().map(|x| 2 * x).collect::<Vec<_>>()).copied())
            .collect();
        let half = roots
            .iter()
            .map(|r| {
                if r.iter().all(|x| x % 2 == 0) {
                    index.get(&r.iter().map(|x| x / 2).collect::<Vec<_>>()).copied()
                } else {
                    None
                }
            })
            .collect();
        let gq = |a: &[i64], b: &[i64]| -> Q {
            let mut s = Q::zero();
            for i in 0..rank {
                for j in 0..rank {
                    if a[i] != 0 && b[j] != 0 {
                        s += &gram[i][j] * q(a[i] * b[j]);
                    }
                }
            }
            s
        };
        let unit = |i: usize| (0..rank).map(|k| i64::from(k == i)).collect::<Vec<i64>>();
        let coroots: Vec<Vec<i64>> = roots
            .iter()
            .map(|a| {
                let aa = gq(a, a);
                (0..rank)
                    .map(|i| {
                        let v = q(2) * gq(&unit(i), a) / &aa;
                        i64::try_from(v.to_integer()).expect("integral coroot pairing")
                    })
                    .collect()
            })
            .collect();
        let cartan = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = q(2) * &gram[i][j] / &gram[j][j];
                        i64::try_from(v.to_integer()).expect("integral Cartan entry")
                    })
                    .collect()
            })
            .collect();
        RootDatum {
            name,
            rank,
            ambient_dim,
            roots,
            index,
            negative,
            double,
            half,
            n_positive,
            gram,
            cartan,
            coroots,
            weyl: OnceLock::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// The roots span the ambient space.
    pub fn is_essential(&self) -> bool {
        self.ambient_dim == self.rank
    }

    /// The same root system viewed in the span of its roots.
    pub fn essentialize(&self) -> RootDatum {
        let mut d = self.clone();
        d.ambient_dim = d.rank;
        d
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_positive
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_positive
    }

    pub fn positive_roots(&self) -> std::ops::Range<usize> {
        0..self.n_positive
    }

    pub fn negative(&self, i: usize) -> usize {
        self.negative[i]
    }

    /// Index of `2a` when `a` is multipliable.
    pub fn double(&self, i: usize) -> Option<usize> {
        self.double[i]
    }

    /// Index of `a/2` when `a` is divisible.
    pub fn half(&self, i: usize) -> Option<usize> {
        self.half[i]
    }

    pub fn is_multipliable(&self, i: usize) -> bool {
        self.double[i].is_some()
    }

    pub fn is_reduced(&self) -> bool {
        self.double.iter().all(Option::is_none)
    }

    /// Φ_nd: roots `a` such that `a/2` is not a root.
    pub fn non_divisible(&self) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.half[i].is_none()).collect()
    }

    /// Index of the simple root `α_i`.
    pub fn simple_root(&self, i: usize) -> usize {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        self.index[&v]
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    /// `cartan[i][j] = <α_i, α_j^∨>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_determinant(&self) -> i64 {
        let m = linalg::from_int_rows(&self.cartan);
        i64::try_from(linalg::determinant(&m).to_integer()).expect("small determinant")
    }

    /// Coordinates of the coroot `a^∨` (the values `<α_i, a^∨>`).
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    /// W-invariant inner product of two forms given by coefficient vectors.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        let mut s = Q::zero();
        for i in 0..self.rank {
            for j in 0..self.rank {
                if a[i] != 0 && b[j] != 0 {
                    s += &self.gram[i][j] * q(a[i] * b[j]);
                }
            }
        }
        s
    }

    pub fn inner_roots(&self, a: usize, b: usize) -> Q {
        self.inner(&self.roots[a], &self.roots[b])
    }

    /// Gram matrix of the induced inner product on `V` in dual-basis coordinates.
    pub fn vector_gram(&self) -> Matrix {
        linalg::inverse(&self.gram).expect("positive definite")
    }

    /// `s_a(b) = b - <b, a^∨> a`, as a root index.
    pub fn reflect_root(&self, a: usize, b: usize) -> usize {
        let n: i64 = self.roots[b].iter().zip(&self.coroots[a]).map(|(x, y)| x * y).sum();
        let img: Vec<i64> = self.roots[b].iter().zip(&self.roots[a]).map(|(x, y)| x - n * y).collect();
        self.index[&img]
    }

    pub fn simple_label(&self, i: usize) -> String {
        format!("a{}", i + 1)
    }

    /// Readable label of a root, e.g. `"-a1-2a2"`.
    pub fn root_label(&self, i: usize) -> String {
        let mut s = String::new();
        for (k, &c) in self.roots[i].iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(&format!("a{}", k + 1));
        }
        s
    }

    /// Parses labels produced by [`root_label`](Self::root_label).
    pub fn parse_root_label(&self, label: &str) -> Result<usize, RootDataError> {
        let bad = || RootDataError::UnknownLabel(label.to_string());
        let mut coeffs = vec![0i64; self.rank];
        let t: String = label.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = t.as_str();
        if rest.is_empty() {
            return Err(bad());
        }
        while !rest.is_empty() {
            let (sgn, r) = match rest.as_bytes()[0] {
                b'-' => (-1, &rest[1..]),
                b'+' => (1, &rest[1..]),
                _ => (1, rest),
            };
            let digits = r.find(|c: char| !c.is_ascii_digit()).unwrap_or(r.len());
            let c: i64 = if digits == 0 { 1 } else { r[..digits].parse().map_err(|_| bad())? };
            let r = &r[digits..];
            let r = r.strip_prefix('a').ok_or_else(bad)?;
            let end = r.find(['+', '-']).unwrap_or(r.len());
            let k: usize = r[..end].parse().map_err(|_| bad())?;
            if k == 0 || k > self.rank {
                return Err(bad());
            }
            coeffs[k - 1] += sgn * c;
            rest = &r[end..];
        }
        self.root_index(&coeffs).ok_or_else(bad)
    }

    /// Parses `"a1,a3"` (or `"1,3"`) into a subset of Δ; the empty string is ∅.
    pub fn parse_subset(&self, s: &str) -> Result<DiagramSubset, RootDataError> {
        let mut out = DiagramSubset::EMPTY;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let num = tok.trim_start_matches(['a', 'A']);
            let k: usize = num.parse().map_err(|_| RootDataError::UnknownLabel(tok.into()))?;
            if k == 0 || k > self.rank {
                return Err(RootDataError::SubsetOutOfRange { index: k, rank: self.rank });
            }
            out = out.union(DiagramSubset::singleton(k - 1));
        }
        Ok(out)
    }

    pub fn subset_labels(&self, s: DiagramSubset) -> Vec<String> {
        s.iter().map(|i| self.simple_label(i)).collect()
    }

    pub fn full_subset(&self) -> DiagramSubset {
        DiagramSubset::full(self.rank)
    }

    /// Simple roots `α_i, α_j` are adjacent in the Dynkin diagram iff their
    /// Cartan pairing is nonzero.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.cartan[i][j] != 0
    }

    /// Connected components of Δ.
    pub fn diagram_components(&self) -> Vec<DiagramSubset> {
        components(self, self.full_subset())
    }

    /// Irreducible components of Φ, computed on the roots themselves (roots
    /// linked when non-orthogonal), each as a sorted list of root indices.
    pub fn irreducible_components(&self) -> Vec<Vec<usize>> {
        graph_components(self.roots.len(), |a, b| !self.inner_roots(a, b).is_zero())
    }

    /// Φ_T = Φ ∩ Span(T): roots supported on `t`.
    pub fn levi_roots(&self, t: DiagramSubset) -> Vec<usize> {
        (0..self.roots.len()).filter(|&i| self.supported_on(i, t)).collect()
    }

    pub fn supported_on(&self, root: usize, t: DiagramSubset) -> bool {
        self.roots[root].iter().enumerate().all(|(k, &c)| c == 0 || t.contains(k))
    }

    /// Φ_U for the standard type `t`: positive roots outside Span(T).
    pub fn unipotent_roots(&self, t: DiagramSubset) -> Vec<usize> {
        self.positive_roots().filter(|&i| !self.supported_on(i, t)).collect()
    }

    pub fn weyl_group(&self) -> &WeylGroup {
        self.weyl.get_or_init(|| WeylGroup::enumerate(self))
    }

    /// Per-component catalogue shape used for descriptions.
    pub fn describe(&self) -> String {
        self.name.clone()
    }
}

fn graph_components(n: usize, linked: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            for v in 0..n {
                if !seen[v] && linked(u, v) {
                    seen[v] = true;
                    comp.push(v);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Connected components of `subset` in the induced Dynkin graph.
pub fn components(datum: &RootDatum, subset: DiagramSubset) -> Vec<DiagramSubset> {
    let idx: Vec<usize> = subset.iter().collect();
    graph_components(idx.len(), |a, b| datum.adjacent(idx[a], idx[b]))
        .into_iter()
        .map(|c| DiagramSubset::from_indices(c.into_iter().map(|k| idx[k])))
        .collect()
}

/// `I^⊥ = {a ∈ Δ : (a, b) = 0 for all b ∈ I}`.
pub fn orthogonal_complement(datum: &RootDatum, subset: DiagramSubset) -> DiagramSubset {
    let all = datum.full_subset();
    DiagramSubset::from_indices(all.iter().filter(|&a| {
        subset.iter().all(|b| datum.gram[a][b].is_zero())
    }))
}

/// A Weyl group element.
#[derive(Debug, Clone)]
pub struct WeylElement {
    /// Action on `V` in dual-basis coordinates.
    pub on_vectors: Vec<Vec<i64>>,
    /// Action on forms, in coefficient coordinates over Δ.
    pub on_forms: Vec<Vec<i64>>,
    /// Root permutation: `perm[a]` is the index of `w(a)`.
    pub perm: Vec<usize>,
    /// A reduced word in the simple reflections (for diagnostics).
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn act(&self, x: &[Q]) -> Vec<Q> {
        self.on_vectors
            .iter()
            .map(|row| crate::num::pair(row, x))
            .collect()
    }

    pub fn act_int(&self, x: &[i64]) -> Vec<i64> {
        self.on_vectors
            .iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn act_form(&self, c: &[i64]) -> Vec<i64> {
        self.on_forms
            .iter()
            .map(|row| row.iter().zip(c).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }
}

fn mat_mul_i(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// The finite Weyl group, enumerated by breadth-first closure of the simple
/// reflections. Elements are deduplicated by their exact integer matrices.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    elements: Vec<WeylElement>,
    lookup: HashMap<Vec<Vec<i64>>, usize>,
    generators: Vec<usize>,
    inverse: Vec<usize>,
}

impl WeylGroup {
    fn enumerate(d: &RootDatum) -> WeylGroup {
        let r = d.rank;
        let gens: Vec<(Vec<Vec<i64>>, Vec<Vec<i64>>)> = (0..r)
            .map(|i| {
                let a = d.simple_root(i);
                let h = &d.coroots[a];
                let ca = &d.roots[a];
                // x -> x - <a, x> h ; c -> c - <c, h> ca
                let on_v = (0..r)
                    .map(|row| (0..r).map(|col| i64::from(row == col) - h[row] * ca[col]).collect())
                    .collect();
                let on_f = (0..r)
                    .map(|row| (0..r).map(|col| i64::from(row == col) - ca[row] * h[col]).collect())
                    .collect();
                (on_v, on_f)
            })
            .collect();
        let ident: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect();
        let perm_of = |on_f: &Vec<Vec<i64>>| -> Vec<usize> {
            d.roots
                .iter()
                .map(|c| {
                    let img: Vec<i64> = on_f.iter().map(|row| row.iter().zip(c).map(|(a, b)| a * b).sum()).collect();
                    d.index[&img]
                })
                .collect()
        };
        let mut elements = vec![WeylElement {
            on_vectors: ident.clone(),
            on_forms: ident.clone(),
            perm: (0..d.roots.len()).collect(),
            word: Vec::new(),
        }];
        let mut lookup = HashMap::from([(ident, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(cur) = queue.pop_front() {
            for (g, (gv, gf)) in gens.iter().enumerate() {
                let on_forms = mat_mul_i(&elements[cur].on_forms, gf);
                if lookup.contains_key(&on_forms) {
                    continue;
                }
                let on_vectors = mat_mul_i(&elements[cur].on_vectors, gv);
                let mut word = elements[cur].word.clone();
                word.push(g);
                let perm = perm_of(&on_forms);
                lookup.insert(on_forms.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(WeylElement { on_vectors, on_forms, perm, word });
            }
        }
        let generators = gens.iter().map(|(_, f)| lookup[f]).collect();
        let inverse = elements
            .iter()
            .map(|w| {
                let mut inv = ident_like(r);
                for &g in w.word.iter() {
                    inv = mat_mul_i(&gens[g].1, &inv);
                }
                lookup[&inv]
            })
            .collect();
        WeylGroup { elements, lookup, generators, inverse }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    /// Index of the simple reflection `s_{α_i}`.
    pub fn simple_reflection(&self, i: usize) -> usize {
        self.generators[i]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// Index of `w_a · w_b`.
    pub fn compose(&self, a: usize, b: usize) -> usize {
        let m = mat_mul_i(&self.elements[a].on_forms, &self.elements[b].on_forms);
        self.lookup[&m]
    }

    /// Index of the element with the given word in the simple reflections.
    pub fn from_word(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &g| self.compose(acc, self.generators[g]))
    }

    /// The reflection subgroup generated by the simple reflections in `subset`.
    pub fn parabolic_subgroup(&self, subset: DiagramSubset) -> Vec<usize> {
        let gens: Vec<usize> = subset.iter().map(|i| self.generators[i]).collect();
        let mut seen = vec![false; self.elements.len()];
        seen[0] = true;
        let mut out = vec![0];
        let mut k = 0;
        while k < out.len() {
            let cur = out[k];
            for &g in &gens {
                let nxt = self.compose(cur, g);
                if !seen[nxt] {
                    seen[nxt] = true;
                    out.push(nxt);
                }
            }
            k += 1;
        }
        out.sort_unstable();
        out
    }
}

fn ident_like(r: usize) -> Vec<Vec<i64>> {
    (0..r).map(|i| (0..r).map(|j| i64::from(i == j)).collect()).collect()
}

/// Enumerates the Weyl group of `datum`.
pub fn weyl_enumerate(datum: &RootDatum) -> WeylGroup {
    datum.weyl_group().clone()
}

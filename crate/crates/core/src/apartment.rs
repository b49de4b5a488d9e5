//! The affine apartment: value groups of affine roots, walls, special and
//! virtually special points, and the effect of ramified extensions.
//!
//! Points are rational vectors in the coordinates dual to Δ (see
//! [`crate::rootdata`]); `<a, x - o>` is computed against the origin `o`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::num::{lcm_denominators, pair, q, Q};
use crate::rootdata::{DiagramSubset, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ApartmentError {
    #[error("invalid value-group data: {0}")]
    BadGamma(String),
    #[error("expected a point with {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the root system is not reduced")]
    NonReduced,
    #[error("the simple roots do not span the ambient space")]
    Unspanned,
    #[error("the facet has no vertices")]
    EmptyFacet,
}

/// The set `Γ'_a` of levels at which walls of a root occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueGroup {
    /// `(1/d)·ℤ`.
    Lattice { d: u64 },
    /// `(1/4d)·ℤ \ (1/2d)·ℤ`, for multipliable roots.
    BcCoset { d: u64 },
}

impl ValueGroup {
    pub fn contains(&self, v: &Q) -> bool {
        match *self {
            ValueGroup::Lattice { d } => (v * q(d as i64)).is_integer(),
            ValueGroup::BcCoset { d } => (v * q(4 * d as i64)).is_integer() && !(v * q(2 * d as i64)).is_integer(),
        }
    }

    /// The group `(1/e)·Γ'`.
    pub fn rescale(&self, e: u64) -> ValueGroup {
        match *self {
            ValueGroup::Lattice { d } => ValueGroup::Lattice { d: d * e },
            ValueGroup::BcCoset { d } => ValueGroup::BcCoset { d: d * e },
        }
    }

    pub fn d(&self) -> u64 {
        match *self {
            ValueGroup::Lattice { d } | ValueGroup::BcCoset { d } => d,
        }
    }

    /// Elements in the closed interval `[lo, hi]`, increasing.
    pub fn elements_between(&self, lo: &Q, hi: &Q) -> Vec<Q> {
        let step = match *self {
            ValueGroup::Lattice { d } => q(d as i64),
            ValueGroup::BcCoset { d } => q(4 * d as i64),
        };
        let start = (lo * &step).ceil().to_integer();
        let end = (hi * &step).floor().to_integer();
        let mut out = Vec::new();
        let mut k = start;
        while k <= end {
            let v = Q::new(k.clone(), step.to_integer());
            if self.contains(&v) {
                out.push(v);
            }
            k += 1;
        }
        out
    }
}

/// Value groups of all roots of a datum, and the accumulated ramification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineRootPattern {
    groups: Vec<ValueGroup>,
    scale: u64,
}

impl AffineRootPattern {
    /// `Γ'_a = (1/d)ℤ` for every reduced root.
    pub fn uniform(datum: &RootDatum, d: u64) -> Result<Self, ApartmentError> {
        Self::from_simple(datum, &vec![d; datum.rank()])
    }

    /// Each simple root `α_i` gets denominator `d[i]`; every other root takes
    /// the denominator of the simple root it is W-conjugate to. A multipliable
    /// root `a` gets `Γ'_a = (1/4d)ℤ \ (1/2d)ℤ` and `Γ'_{2a} = (1/d)ℤ`.
    pub fn from_simple(datum: &RootDatum, d: &[u64]) -> Result<Self, ApartmentError> {
        if d.len() != datum.rank() {
            return Err(ApartmentError::BadGamma(format!(
                "{} denominators given for rank {}",
                d.len(),
                datum.rank()
            )));
        }
        if d.contains(&0) {
            return Err(ApartmentError::BadGamma("denominators must be positive".into()));
        }
        let w = datum.weyl_group();
        let mut simple_of: Vec<Option<usize>> = vec![None; datum.num_roots()];
        for el in w.elements() {
            for i in 0..datum.rank() {
                let a = el.perm[datum.simple_root(i)];
                match simple_of[a] {
                    None => simple_of[a] = Some(i),
                    Some(j) if d[j] != d[i] => {
                        return Err(ApartmentError::BadGamma(format!(
                            "simple roots a{} and a{} are conjugate but have different value groups",
                            j + 1,
                            i + 1
                        )))
                    }
                    _ => {}
                }
            }
        }
        let mut groups = vec![ValueGroup::Lattice { d: 1 }; datum.num_roots()];
        for a in 0..datum.num_roots() {
            if let Some(i) = simple_of[a] {
                groups[a] = if datum.is_multipliable(a) {
                    ValueGroup::BcCoset { d: d[i] }
                } else {
                    ValueGroup::Lattice { d: d[i] }
                };
                if let Some(b) = datum.double(a) {
                    groups[b] = ValueGroup::Lattice { d: d[i] };
                }
            }
        }
        Ok(AffineRootPattern { groups, scale: 1 })
    }

    pub fn group(&self, root: usize) -> ValueGroup {
        self.groups[root]
    }

    pub fn groups(&self) -> &[ValueGroup] {
        &self.groups
    }

    /// Product of the ramification indices applied so far.
    pub fn scale(&self) -> u64 {
        self.scale
    }

    pub fn is_bc(&self) -> bool {
        self.groups.iter().any(|g| matches!(g, ValueGroup::BcCoset { .. }))
    }

    pub fn rescale(&self, e: u64) -> AffineRootPattern {
        AffineRootPattern { groups: self.groups.iter().map(|g| g.rescale(e)).collect(), scale: self.scale * e }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionSpec {
    pub e: u64,
    pub galois: bool,
    pub label: String,
}

impl ExtensionSpec {
    pub fn ramified(e: u64) -> Self {
        ExtensionSpec { e, galois: true, label: format!("e={e}") }
    }
}

/// A wall `{x : <a, x - o> = level}` of a positive root `a`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Wall {
    pub root: usize,
    pub level: Q,
}

#[derive(Debug, Clone)]
pub struct Apartment {
    datum: RootDatum,
    origin: Vec<Q>,
    pattern: AffineRootPattern,
}

impl Apartment {
    pub fn new(datum: &RootDatum, pattern: AffineRootPattern) -> Self {
        Apartment { origin: vec![Q::zero(); datum.rank()], datum: datum.clone(), pattern }
    }

    pub fn with_origin(mut self, origin: Vec<Q>) -> Result<Self, ApartmentError> {
        self.check_dim(&origin)?;
        self.origin = origin;
        Ok(self)
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn origin(&self) -> &[Q] {
        &self.origin
    }

    pub fn pattern(&self) -> &AffineRootPattern {
        &self.pattern
    }

    pub fn check_dim(&self, x: &[Q]) -> Result<(), ApartmentError> {
        if x.len() != self.datum.rank() {
            return Err(ApartmentError::DimensionMismatch { expected: self.datum.rank(), got: x.len() });
        }
        Ok(())
    }

    /// `<a, x - o>`.
    pub fn pairing(&self, root: usize, x: &[Q]) -> Q {
        let d: Vec<Q> = x.iter().zip(&self.origin).map(|(a, b)| a - b).collect();
        pair(self.datum.root(root), &d)
    }

    /// Whether the hyperplane `{<a, x - o> = v}` is a wall, for `a` or any
    /// root proportional to it.
    pub fn is_wall(&self, root: usize, v: &Q) -> bool {
        let d = &self.datum;
        let check = |b: usize, val: Q| self.pattern.group(b).contains(&-val);
        if check(root, v.clone()) {
            return true;
        }
        if let Some(b) = d.double(root) {
            if check(b, v * q(2)) {
                return true;
            }
        }
        if let Some(b) = d.half(root) {
            if check(b, v / q(2)) {
                return true;
            }
        }
        false
    }

    /// Walls of positive roots meeting the box `lo <= x <= hi`.
    pub fn walls_in_box(&self, lo: &[Q], hi: &[Q]) -> Vec<Wall> {
        let mut out = BTreeSet::new();
        for a in self.datum.positive_roots() {
            let (mut min, mut max) = (Q::zero(), Q::zero());
            for (i, &c) in self.datum.root(a).iter().enumerate() {
                let (l, h) = (&lo[i] - &self.origin[i], &hi[i] - &self.origin[i]);
                let (x, y) = (l * q(c), h * q(c));
                if x < y {
                    min += x;
                    max += y;
                } else {
                    min += y;
                    max += x;
                }
            }
            let g = self.pattern.group(a);
            for v in g.elements_between(&-max, &-min) {
                out.insert(Wall { root: a, level: -v });
            }
        }
        out.into_iter().collect()
    }
}

/// Every non-divisible root direction has a wall through `x`.
pub fn is_special_vertex(apt: &Apartment, x: &[Q]) -> bool {
    let d = apt.datum();
    d.non_divisible().into_iter().all(|a| apt.is_wall(a, &apt.pairing(a, x)))
}

/// Least `e >= 1` such that `x` is special after rescaling all value groups by `1/e`.
pub fn special_witness(apt: &Apartment, x: &[Q]) -> BigInt {
    let d = apt.datum();
    let mut e = BigInt::one();
    for a in d.non_divisible() {
        let v = apt.pairing(a, x);
        let k = match apt.pattern().group(a) {
            ValueGroup::Lattice { d } => v * q(d as i64),
            // special for a iff <a, x> lies in Γ'_a ∪ (1/2)Γ'_{2a} = (1/4d)ℤ
            ValueGroup::BcCoset { d } => v * q(4 * d as i64),
        };
        e = e.lcm(k.denom());
    }
    e
}

/// A point whose coordinates are rational or tagged irrationals. Distinct
/// tags stand for numbers that are linearly independent over ℚ together
/// with 1; equal tags stand for the same number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coordinate {
    Rational(Q),
    Irrational(String),
}

/// Every root takes a rational value on `x - o`.
pub fn is_virtually_special(apt: &Apartment, x: &[Coordinate]) -> bool {
    let d = apt.datum();
    (0..d.num_roots()).all(|a| {
        let mut symbolic: BTreeMap<&str, i64> = BTreeMap::new();
        for (c, coord) in d.root(a).iter().zip(x) {
            if let Coordinate::Irrational(tag) = coord {
                *symbolic.entry(tag.as_str()).or_default() += c;
            }
        }
        symbolic.values().all(|&s| s == 0)
    })
}

/// The apartment over an extension with ramification index `e`: same affine
/// space and origin, value groups divided by `e`.
pub fn embed_extension(apt: &Apartment, ext: &ExtensionSpec) -> Result<Apartment, ApartmentError> {
    if ext.e == 0 {
        return Err(ApartmentError::BadGamma("ramification index must be positive".into()));
    }
    Ok(Apartment { datum: apt.datum.clone(), origin: apt.origin.clone(), pattern: apt.pattern.rescale(ext.e) })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransitivitySolution {
    /// Least `N` with `<a, y - x> ∈ (1/N)·γ₀ℤ` for all simple `a`.
    pub n_denominator: BigInt,
    pub cartan_det: i64,
    /// Integer coefficients of the simple coroots.
    pub coefficients: Vec<BigInt>,
    /// `y - x` rebuilt from the coefficients.
    pub translation: Vec<Q>,
}

pub fn transitivity_solve(datum: &RootDatum, x: &[Q], y: &[Q]) -> Result<TransitivitySolution, ApartmentError> {
    transitivity_solve_with(datum, x, y, &Q::one())
}

/// Solves `Σ_j <α_i, α_j^∨> n_j = (N·D/γ₀)·<α_i, y - x>` over the integers.
pub fn transitivity_solve_with(
    datum: &RootDatum,
    x: &[Q],
    y: &[Q],
    gamma0: &Q,
) -> Result<TransitivitySolution, ApartmentError> {
    if !datum.is_reduced() {
        return Err(ApartmentError::NonReduced);
    }
    if !datum.is_essential() {
        return Err(ApartmentError::Unspanned);
    }
    let r = datum.rank();
    for p in [x, y] {
        if p.len() != r {
            return Err(ApartmentError::DimensionMismatch { expected: r, got: p.len() });
        }
    }
    if !gamma0.is_positive() {
        return Err(ApartmentError::BadGamma("base value group generator must be positive".into()));
    }
    let diff: Vec<Q> = y.iter().zip(x).map(|(a, b)| a - b).collect();
    let scaled: Vec<Q> = diff.iter().map(|v| v / gamma0).collect();
    let n_den = lcm_denominators(&scaled);
    let det = datum.cartan_determinant();
    let factor = Q::from_integer(n_den.clone()) * q(det);
    let rhs: Vec<Q> = scaled.iter().map(|v| v * &factor).collect();
    let cartan = linalg::from_int_rows(datum.cartan());
    let n = linalg::solve(&cartan, &rhs).expect("Cartan matrix is invertible");
    let coefficients: Vec<BigInt> = n
        .iter()
        .map(|v| {
            assert!(v.is_integer(), "adjugate of the Cartan matrix is integral");
            v.to_integer()
        })
        .collect();
    let back = factor / gamma0;
    let translation = (0..r)
        .map(|i| {
            (0..r).fold(Q::zero(), |acc, j| acc + q(datum.cartan()[i][j]) * Q::from_integer(coefficients[j].clone()))
                / &back
        })
        .collect();
    Ok(TransitivitySolution { n_denominator: n_den, cartan_det: det, coefficients, translation })
}

/// Distinct rational points in the open convex hull of `vertices`: the
/// barycenter first, then at level `m = 2, 3, ...` one point per vertex with
/// weight `2^m - 1` on that vertex and `1` on the others.
pub fn rational_dense_sample(
    apt: &Apartment,
    vertices: &[Vec<Q>],
    count: usize,
) -> Result<Vec<Vec<Q>>, ApartmentError> {
    if vertices.is_empty() {
        return Err(ApartmentError::EmptyFacet);
    }
    for v in vertices {
        apt.check_dim(v)?;
    }
    let combo = |weights: &[Q]| -> Vec<Q> {
        let total: Q = weights.iter().cloned().sum();
        (0..vertices[0].len())
            .map(|i| vertices.iter().zip(weights).fold(Q::zero(), |acc, (v, w)| acc + &v[i] * w) / &total)
            .collect()
    };
    let n = vertices.len();
    let mut out = vec![combo(&vec![Q::one(); n])];
    if n == 1 {
        return Ok(out);
    }
    let mut seen: BTreeSet<Vec<Q>> = out.iter().cloned().collect();
    let mut m = 2u32;
    while out.len() < count {
        let heavy = q((1i64 << m) - 1);
        for k in 0..n {
            if out.len() >= count {
                break;
            }
            let weights: Vec<Q> = (0..n).map(|i| if i == k { heavy.clone() } else { Q::one() }).collect();
            let p = combo(&weights);
            if seen.insert(p.clone()) {
                out.push(p);
            }
        }
        m += 1;
        if m > 62 {
            break;
        }
    }
    out.truncate(count.max(1));
    Ok(out)
}

/// Vertices of the fundamental alcove `{x : <α_i, x> > 0, <θ, x> < 1}` of an
/// irreducible reduced datum with `Γ' = ℤ`, where `θ` is the highest root.
pub fn fundamental_alcove_vertices(datum: &RootDatum) -> Vec<Vec<Q>> {
    let r = datum.rank();
    let theta = datum.positive_roots().max_by_key(|&a| datum.root(a).iter().sum::<i64>()).expect("nonempty");
    let mut out = vec![vec![Q::zero(); r]];
    for i in 0..r {
        let mut v = vec![Q::zero(); r];
        v[i] = Q::new(1.into(), datum.root(theta)[i].into());
        out.push(v);
    }
    out
}

/// Image of `x` in the apartment of the Levi of type `levi`: the values
/// `<α_i, x - o>` for `α_i` in `levi`.
pub fn essential_projection(datum: &RootDatum, levi: DiagramSubset, x: &[Q], origin: &[Q]) -> Vec<Q> {
    debug_assert!(levi.is_subset(datum.full_subset()));
    levi.iter().map(|i| &x[i] - &origin[i]).collect()
}

/// Projects Levi coordinates for `from` further to `to ⊆ from`.
pub fn project_between(from: DiagramSubset, to: DiagramSubset, coords: &[Q]) -> Vec<Q> {
    from.iter().zip(coords).filter(|(i, _)| to.contains(*i)).map(|(_, v)| v.clone()).collect()
}

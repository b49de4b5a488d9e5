//! Gauss seminorms on the coordinate ring of the opposite unipotent radical,
//! in log form.
//!
//! A polynomial in the coordinates `ξ_{a,i}` is recorded by the log-absolute
//! values of its coefficients. The seminorm attached to a point `x` of the
//! apartment gives `ξ_{a,i}` the log-value `<a, x - o>`, and a polynomial the
//! maximum over its monomials of `log|f_ν| + Σ ν(a,i)·<a, x - o>`. Sums take
//! the coefficientwise maximum; cancellation of coefficients is never modelled.

use std::collections::BTreeMap;
use std::fmt;

use crate::compactify::{CompactifiedPoint, LimitProfile};
use crate::fans::Fan;
use crate::linalg;
use crate::num::{pair, sign, ExtQ, Q};
use crate::parabolics::ParabolicType;
use crate::rootdata::{DiagramSubset, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaussError {
    #[error("the profile is +inf on the coordinate of root {0}")]
    ProfileMismatch(String),
    #[error("unknown coordinate {0}")]
    UnknownCoordinate(String),
    #[error("multiplicities must be positive")]
    BadMultiplicity,
    #[error("expected a point with {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
}

/// The coordinate `ξ_{a,i}`: root index and slot `1 <= i <= N_a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord {
    pub root: usize,
    pub slot: u32,
}

/// Root data of the unipotent group `U^-` of a parabolic, with the
/// dimension `N_a` of each root group.
#[derive(Debug, Clone)]
pub struct ToyGroupDatum {
    datum: RootDatum,
    t: DiagramSubset,
    psi: Vec<usize>,
    mult: Vec<u32>,
}

impl ToyGroupDatum {
    /// Multiplicity one for every root.
    pub fn new(datum: &RootDatum, t: DiagramSubset) -> Self {
        Self::with_multiplicities(datum, t, vec![1; datum.num_roots()]).expect("positive")
    }

    /// `mult[a]` is `N_a` for every root `a` (divisible roots included).
    pub fn with_multiplicities(datum: &RootDatum, t: DiagramSubset, mult: Vec<u32>) -> Result<Self, GaussError> {
        if mult.len() != datum.num_roots() || mult.contains(&0) {
            return Err(GaussError::BadMultiplicity);
        }
        let psi = ParabolicType::new(datum, t).psi;
        Ok(ToyGroupDatum { datum: datum.clone(), t, psi, mult })
    }

    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn parabolic_type(&self) -> DiagramSubset {
        self.t
    }

    /// Ψ, the roots of `U^-`.
    pub fn psi(&self) -> &[usize] {
        &self.psi
    }

    pub fn multiplicity(&self, root: usize) -> u32 {
        self.mult[root]
    }

    /// The index set 𝚿.
    pub fn psi_coords(&self) -> Vec<Coord> {
        let mut out: Vec<Coord> = self
            .psi
            .iter()
            .flat_map(|&a| (1..=self.mult[a]).map(move |slot| Coord { root: a, slot }))
            .collect();
        out.sort();
        out
    }

    /// Coordinates indexed by all roots.
    pub fn full_coords(&self) -> Vec<Coord> {
        (0..self.datum.num_roots())
            .flat_map(|a| (1..=self.mult[a]).map(move |slot| Coord { root: a, slot }))
            .collect()
    }

    pub fn coord_label(&self, c: Coord) -> String {
        format!("({},{})", self.datum.root_label(c.root), c.slot)
    }

    /// Parses labels of the form `"(-a2,1)"`.
    pub fn parse_coord(&self, s: &str) -> Result<Coord, GaussError> {
        let bad = || GaussError::UnknownCoordinate(s.to_string());
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (root, slot) = inner.rsplit_once(',').ok_or_else(bad)?;
        let root = self.datum.parse_root_label(root).map_err(|_| bad())?;
        let slot: u32 = slot.trim().parse().map_err(|_| bad())?;
        if slot == 0 || slot > self.mult[root] {
            return Err(bad());
        }
        Ok(Coord { root, slot })
    }
}

/// Exponent vector: coordinates with positive exponents.
pub type Monomial = BTreeMap<Coord, u32>;

/// A polynomial recorded by the log-absolute values of its nonzero coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValuedPolynomial {
    terms: BTreeMap<Monomial, Q>,
}

impl ValuedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant with log-absolute value `logc`.
    pub fn constant(logc: Q) -> Self {
        Self::monomial(Monomial::new(), logc)
    }

    pub fn coordinate(c: Coord) -> Self {
        Self::monomial(Monomial::from([(c, 1)]), Q::from_integer(0.into()))
    }

    pub fn monomial(exp: Monomial, logc: Q) -> Self {
        let exp = exp.into_iter().filter(|(_, e)| *e > 0).collect();
        ValuedPolynomial { terms: BTreeMap::from([(exp, logc)]) }
    }

    /// Builds from `(exponent, log|coefficient|)` pairs; `-∞` coefficients are
    /// dropped and repeated exponents keep the larger value.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, ExtQ)>) -> Self {
        let mut out = ValuedPolynomial::zero();
        for (m, c) in terms {
            if let ExtQ::Finite(v) = c {
                out.add_term(m.into_iter().filter(|(_, e)| *e > 0).collect(), v);
            }
        }
        out
    }

    fn add_term(&mut self, m: Monomial, v: Q) {
        match self.terms.get_mut(&m) {
            Some(old) if *old >= v => {}
            Some(old) => *old = v,
            None => {
                self.terms.insert(m, v);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Q> {
        &self.terms
    }

    /// Coefficientwise maximum.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, v) in &other.terms {
            out.add_term(m.clone(), v.clone());
        }
        out
    }

    /// Max-plus convolution of the coefficients.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = ValuedPolynomial::zero();
        for (m1, v1) in &self.terms {
            for (m2, v2) in &other.terms {
                let mut m = m1.clone();
                for (c, e) in m2 {
                    *m.entry(*c).or_default() += e;
                }
                out.add_term(m, v1 + v2);
            }
        }
        out
    }

    /// Multiplies every coefficient by a scalar of log-value `c`.
    pub fn scale(&self, c: &Q) -> Self {
        ValuedPolynomial { terms: self.terms.iter().map(|(m, v)| (m.clone(), v + c)).collect() }
    }

    /// Renames coordinates.
    pub fn relabel(&self, f: impl Fn(Coord) -> Coord) -> Self {
        ValuedPolynomial::from_terms(
            self.terms
                .iter()
                .map(|(m, v)| (m.iter().map(|(c, e)| (f(*c), *e)).collect(), ExtQ::Finite(v.clone()))),
        )
    }

    pub fn coordinates(&self) -> impl Iterator<Item = Coord> + '_ {
        self.terms.keys().flat_map(|m| m.keys().copied())
    }
}

/// Log-values of the coordinates; evaluation is max-plus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogSeminorm {
    values: BTreeMap<Coord, ExtQ>,
}

impl LogSeminorm {
    pub fn values(&self) -> &BTreeMap<Coord, ExtQ> {
        &self.values
    }

    pub fn value(&self, c: Coord) -> Option<&ExtQ> {
        self.values.get(&c)
    }

    /// `log|f|`; `-inf` for the zero polynomial.
    pub fn eval(&self, f: &ValuedPolynomial) -> Result<ExtQ, GaussError> {
        let mut best = ExtQ::NegInf;
        for (m, logc) in f.terms() {
            let mut term = ExtQ::Finite(logc.clone());
            for (c, e) in m {
                let v = self
                    .values
                    .get(c)
                    .ok_or_else(|| GaussError::UnknownCoordinate(format!("({},{})", c.root, c.slot)))?;
                term = &term + &v.scale(u64::from(*e));
            }
            best = best.max(term);
        }
        Ok(best)
    }
}

impl fmt::Display for LogSeminorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(c, v)| format!("{}.{}={v}", c.root, c.slot)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

fn seminorm_at(datum: &ToyGroupDatum, coords: Vec<Coord>, x: &[Q]) -> Result<LogSeminorm, GaussError> {
    let r = datum.datum.rank();
    if x.len() != r {
        return Err(GaussError::DimensionMismatch { expected: r, got: x.len() });
    }
    Ok(LogSeminorm {
        values: coords
            .into_iter()
            .map(|c| (c, ExtQ::Finite(pair(datum.datum.root(c.root), x))))
            .collect(),
    })
}

/// `θ_P(x)` on the coordinates 𝚿, with `x` measured from the origin.
pub fn theta_p(datum: &ToyGroupDatum, x: &[Q]) -> Result<LogSeminorm, GaussError> {
    seminorm_at(datum, datum.psi_coords(), x)
}

/// `θ(x)` on coordinates indexed by all roots.
pub fn theta_full(datum: &ToyGroupDatum, x: &[Q]) -> Result<LogSeminorm, GaussError> {
    seminorm_at(datum, datum.full_coords(), x)
}

/// The limit of `θ_P` along sequences with the given limit profile.
pub fn theta_p_boundary(datum: &ToyGroupDatum, p: &LimitProfile) -> Result<LogSeminorm, GaussError> {
    let mut values = BTreeMap::new();
    for c in datum.psi_coords() {
        let v = p.value(c.root);
        if *v == ExtQ::PosInf {
            return Err(GaussError::ProfileMismatch(datum.datum.root_label(c.root)));
        }
        values.insert(c, v.clone());
    }
    Ok(LogSeminorm { values })
}

/// `θ_P` at a boundary point `[x + c]` of a compactified apartment. Roots of
/// Ψ negative on `c` give `-inf`; those vanishing on `c` keep their value on
/// the base point. The cone must lie in the closure of `C(P)`.
pub fn theta_p_boundary_point(
    datum: &ToyGroupDatum,
    fan: &Fan,
    point: &CompactifiedPoint,
) -> Result<LogSeminorm, GaussError> {
    let facets = &fan.cones()[point.cone].facets;
    let mut values = BTreeMap::new();
    for c in datum.psi_coords() {
        let root = datum.datum.root(c.root);
        let signs: Vec<i8> = facets
            .iter()
            .map(|&f| {
                let rep = &fan.weyl_facets()[f].rep;
                root.iter().zip(rep).map(|(a, b)| a * b).sum::<i64>().signum() as i8
            })
            .collect();
        let v = if signs.iter().all(|&s| s == 0) {
            ExtQ::Finite(pair(root, &point.base))
        } else if signs.iter().all(|&s| s < 0) {
            ExtQ::NegInf
        } else {
            return Err(GaussError::ProfileMismatch(datum.datum.root_label(c.root)));
        };
        values.insert(c, v);
    }
    Ok(LogSeminorm { values })
}

/// `Ψ^0 = {v : <a, v> = 0 for a in Ψ}`, as a basis.
pub fn fiber_direction_space(datum: &ToyGroupDatum) -> Vec<Vec<Q>> {
    let rows: Vec<Vec<i64>> = datum.psi.iter().map(|&a| datum.datum.root(a).to_vec()).collect();
    linalg::nullspace(&linalg::from_int_rows(&rows), datum.datum.rank())
}

/// `x - y ∈ Ψ^0`.
pub fn same_fiber(datum: &ToyGroupDatum, x: &[Q], y: &[Q]) -> bool {
    let d: Vec<Q> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    datum.psi.iter().all(|&a| sign(&pair(datum.datum.root(a), &d)) == 0)
}

/// Data of the conjugate `wPw^{-1}`: Ψ and the multiplicities moved by `w`.
pub fn conjugation_relabel(datum: &ToyGroupDatum, w: usize) -> ToyGroupDatum {
    let el = datum.datum.weyl_group().element(w);
    let mut mult = vec![1; datum.mult.len()];
    for (a, &m) in datum.mult.iter().enumerate() {
        mult[el.perm[a]] = m;
    }
    let mut psi: Vec<usize> = datum.psi.iter().map(|&a| el.perm[a]).collect();
    psi.sort_unstable();
    ToyGroupDatum { datum: datum.datum.clone(), t: datum.t, psi, mult }
}

/// Moves a polynomial's coordinates along `w`.
pub fn relabel_polynomial(datum: &RootDatum, f: &ValuedPolynomial, w: usize) -> ValuedPolynomial {
    let el = datum.weyl_group().element(w);
    f.relabel(|c| Coord { root: el.perm[c.root], slot: c.slot })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, q};

    fn a1() -> ToyGroupDatum {
        ToyGroupDatum::new(&RootDatum::catalogue("A1").unwrap(), DiagramSubset::EMPTY)
    }

    #[test]
    fn constant_and_coordinate() {
        let g = a1();
        let xi = ValuedPolynomial::coordinate(g.psi_coords()[0]);
        let one = ValuedPolynomial::constant(q(0));
        for x in [q(0), frac(3, 2), q(-7)] {
            assert_eq!(theta_p(&g, &[x.clone()]).unwrap().eval(&one).unwrap(), ExtQ::zero());
        }
        assert_eq!(theta_p(&g, &[q(0)]).unwrap().eval(&xi).unwrap(), ExtQ::zero());
    }

    #[test]
    fn two_term_maximum() {
        let g = a1();
        let f = ValuedPolynomial::coordinate(g.psi_coords()[0]).add(&ValuedPolynomial::constant(q(-1)));
        // Ψ = {-a}, so <-a, x> = -x
        for t in [q(-3), frac(-1, 2), q(0), q(2)] {
            let x = vec![-t.clone()];
            let v = theta_p(&g, &x).unwrap().eval(&f).unwrap();
            assert_eq!(v, ExtQ::Finite(t.max(q(-1))));
        }
    }

    #[test]
    fn boundary_examples() {
        let g = a1();
        let d = g.datum().clone();
        let f = ValuedPolynomial::coordinate(g.psi_coords()[0]).add(&ValuedPolynomial::constant(q(-1)));
        let p = LimitProfile::of_ray(&d, &[q(0)], &[q(1)]);
        let s = theta_p_boundary(&g, &p).unwrap();
        assert_eq!(s.eval(&f).unwrap(), ExtQ::Finite(q(-1)));
        assert_eq!(s.eval(&ValuedPolynomial::coordinate(g.psi_coords()[0])).unwrap(), ExtQ::NegInf);
        let bad = LimitProfile::of_ray(&d, &[q(0)], &[q(-1)]);
        assert!(matches!(theta_p_boundary(&g, &bad), Err(GaussError::ProfileMismatch(_))));
    }

    #[test]
    fn fiber_examples() {
        let a2 = RootDatum::catalogue("A2").unwrap();
        assert!(fiber_direction_space(&ToyGroupDatum::new(&a2, DiagramSubset::singleton(0))).is_empty());
        assert_eq!(fiber_direction_space(&ToyGroupDatum::new(&a2, a2.full_subset())).len(), 2);
        let a1a1 = RootDatum::catalogue("A1xA1").unwrap();
        let g = ToyGroupDatum::new(&a1a1, DiagramSubset::singleton(0));
        let fib = fiber_direction_space(&g);
        assert_eq!(fib.len(), 1);
        // annihilated by a2, i.e. the second coordinate vanishes
        assert!(fib[0][1] == q(0) && fib[0][0] != q(0));
    }

    #[test]
    fn relabel_identity() {
        let a2 = RootDatum::catalogue("A2").unwrap();
        let g = ToyGroupDatum::new(&a2, DiagramSubset::singleton(0));
        let w = a2.weyl_group().simple_reflection(1);
        let h = conjugation_relabel(&g, w);
        let coords = g.psi_coords();
        let f = ValuedPolynomial::coordinate(coords[0])
            .mul(&ValuedPolynomial::coordinate(coords[1]))
            .add(&ValuedPolynomial::constant(frac(1, 2)));
        let x = vec![frac(2, 3), q(-1)];
        let wx = a2.weyl_group().element(w).act(&x);
        let lhs = theta_p(&h, &wx).unwrap().eval(&relabel_polynomial(&a2, &f, w)).unwrap();
        let rhs = theta_p(&g, &x).unwrap().eval(&f).unwrap();
        assert_eq!(lhs, rhs);
        let id = conjugation_relabel(&g, 0);
        assert_eq!(id.psi(), g.psi());
    }

    #[test]
    fn divisible_roots_have_own_coordinates() {
        let bc1 = RootDatum::catalogue("BC1").unwrap();
        let mut mult = vec![1; bc1.num_roots()];
        for a in 0..bc1.num_roots() {
            if bc1.half(a).is_some() {
                mult[a] = 2;
            }
        }
        let g = ToyGroupDatum::with_multiplicities(&bc1, DiagramSubset::EMPTY, mult).unwrap();
        assert_eq!(g.psi_coords().len(), 3);
        let c = g.parse_coord("(-2a1,2)").unwrap();
        assert_eq!(g.coord_label(c), "(-2a1,2)");
    }
}

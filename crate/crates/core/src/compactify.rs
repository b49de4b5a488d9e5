//! The compactified apartment attached to a fan: boundary points, limits of
//! rays and of limit profiles, and the closure order of façades.
//!
//! The origin of the apartment is taken as the zero vector; callers with
//! another origin translate first.

use num_traits::Zero;

use crate::fans::Fan;
use crate::linalg::{self, Matrix};
use crate::num::{pair, sign, ExtQ, Q};
use crate::rootdata::RootDatum;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CompactifyError {
    #[error("inconsistent limit profile: {0}")]
    InconsistentProfile(String),
    #[error("expected {expected} values, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("direction must be nonzero")]
    ZeroDirection,
}

/// The point `[x + c]` of the façade of cone `c`, with `x` reduced to the
/// orthogonal complement of `Span(c)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompactifiedPoint {
    pub cone: usize,
    pub base: Vec<Q>,
}

impl CompactifiedPoint {
    pub fn is_interior(&self, fan: &Fan) -> bool {
        self.cone == fan.origin()
    }
}

/// The outcome of a limit computation; divergence is an ordinary value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Limit {
    Point(CompactifiedPoint),
    NoLimit,
}

/// Limits of `<a, x_n>` for every root `a`, indexed like the roots of the datum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitProfile {
    values: Vec<ExtQ>,
}

impl LimitProfile {
    /// Validates oddness, compatibility with root sums and multiples, and
    /// linear consistency of the finite values.
    pub fn new(datum: &RootDatum, values: Vec<ExtQ>) -> Result<Self, CompactifyError> {
        let bad = |m: String| Err(CompactifyError::InconsistentProfile(m));
        if values.len() != datum.num_roots() {
            return Err(CompactifyError::DimensionMismatch { expected: datum.num_roots(), got: values.len() });
        }
        for a in 0..datum.num_roots() {
            if values[datum.negative(a)] != -values[a].clone() {
                return bad(format!("value at {} is not the negative of its opposite", datum.root_label(a)));
            }
            for b in 0..datum.num_roots() {
                let s: Vec<i64> = datum.root(a).iter().zip(datum.root(b)).map(|(x, y)| x + y).collect();
                let Some(c) = datum.root_index(&s) else { continue };
                let expect = match (&values[a], &values[b]) {
                    (ExtQ::PosInf, ExtQ::NegInf) | (ExtQ::NegInf, ExtQ::PosInf) => continue,
                    (x, y) => x + y,
                };
                if values[c] != expect {
                    return bad(format!(
                        "value at {} differs from the sum of values at {} and {}",
                        datum.root_label(c),
                        datum.root_label(a),
                        datum.root_label(b)
                    ));
                }
            }
        }
        let rows: Vec<(usize, Q)> = values
            .iter()
            .enumerate()
            .filter_map(|(a, v)| v.finite().map(|x| (a, x.clone())))
            .collect();
        if !rows.is_empty() {
            let m: Matrix = rows.iter().map(|(a, _)| datum.root(*a).iter().map(|&c| crate::num::q(c)).collect()).collect();
            let rhs: Vec<Q> = rows.iter().map(|(_, v)| v.clone()).collect();
            if linalg::solve(&m, &rhs).is_none() {
                return bad("finite values are not the values of a single point".into());
            }
        }
        Ok(LimitProfile { values })
    }

    /// Profile of the ray `a + t·d`, `t -> +∞`.
    pub fn of_ray(datum: &RootDatum, a: &[Q], d: &[Q]) -> Self {
        let values = (0..datum.num_roots())
            .map(|r| match sign(&pair(datum.root(r), d)) {
                1 => ExtQ::PosInf,
                -1 => ExtQ::NegInf,
                _ => ExtQ::Finite(pair(datum.root(r), a)),
            })
            .collect();
        LimitProfile { values }
    }

    pub fn values(&self) -> &[ExtQ] {
        &self.values
    }

    pub fn value(&self, root: usize) -> &ExtQ {
        &self.values[root]
    }
}

/// Orthogonal projection onto `Span(c)^⊥` for the W-invariant inner product.
fn reduce(fan: &Fan, cone: usize, x: &[Q]) -> Vec<Q> {
    let c = fan.cone(cone);
    let dim = fan.dim();
    let basis = linalg::nullspace(&linalg::from_int_rows(&c.equalities), dim);
    if basis.is_empty() {
        return x.to_vec();
    }
    let m = fan.datum().vector_gram();
    let mb: Vec<Vec<Q>> = basis.iter().map(|b| linalg::mat_vec(&m, b)).collect();
    let gram: Matrix = basis.iter().map(|u| mb.iter().map(|v| linalg::dot(u, v)).collect()).collect();
    let rhs: Vec<Q> = mb.iter().map(|v| linalg::dot(v, x)).collect();
    let coeff = linalg::solve(&gram, &rhs).expect("Gram matrix of a basis is invertible");
    let mut out = x.to_vec();
    for (b, k) in basis.iter().zip(&coeff) {
        for (o, bi) in out.iter_mut().zip(b) {
            *o -= bi * k;
        }
    }
    out
}

/// `[x + c]`.
pub fn project_to_facade(fan: &Fan, cone: usize, x: &[Q]) -> CompactifiedPoint {
    CompactifiedPoint { cone, base: reduce(fan, cone, x) }
}

/// Limit of `a + t·d` as `t -> +∞`: the façade of the cone containing `d`.
pub fn limit_of_ray(fan: &Fan, a: &[Q], d: &[Q]) -> Result<CompactifiedPoint, CompactifyError> {
    if a.len() != fan.dim() || d.len() != fan.dim() {
        return Err(CompactifyError::DimensionMismatch { expected: fan.dim(), got: a.len().min(d.len()) });
    }
    if d.iter().all(Zero::is_zero) {
        return Err(CompactifyError::ZeroDirection);
    }
    Ok(project_to_facade(fan, fan.cone_containing(d), a))
}

/// Matches the profile against every cone: roots positive on the cone must
/// tend to `+∞` and roots vanishing on it must stay finite. Roots of
/// varying sign on a merged cone are unconstrained. The base point is the
/// point with the prescribed finite values on the vanishing roots.
pub fn limit_of_profile(fan: &Fan, p: &LimitProfile) -> Limit {
    let datum = fan.datum();
    let matches: Vec<usize> = (0..fan.len())
        .filter(|&c| {
            let cone = fan.cone(c);
            cone.strict.iter().all(|s| datum.root_index(s).is_some_and(|r| *p.value(r) == ExtQ::PosInf))
                && cone.equalities.iter().all(|e| datum.root_index(e).is_some_and(|r| p.value(r).is_finite()))
        })
        .collect();
    let [c] = matches[..] else {
        return Limit::NoLimit;
    };
    let eqs = &fan.cone(c).equalities;
    let x = if eqs.is_empty() {
        vec![Q::zero(); fan.dim()]
    } else {
        let m = linalg::from_int_rows(eqs);
        let rhs: Vec<Q> = eqs
            .iter()
            .map(|e| p.value(datum.root_index(e).expect("root form")).finite().expect("finite").clone())
            .collect();
        linalg::solve(&m, &rhs).expect("profile checked for consistency")
    };
    Limit::Point(project_to_facade(fan, c, &x))
}

/// Closure order of façades: `order[f][g]` iff the façade of `g` lies in the
/// closure of the façade of `f`, i.e. `f` is a face of `g`.
pub fn facade_closure_order(fan: &Fan) -> &Vec<Vec<bool>> {
    fan.face_order()
}

/// Values of the positive roots vanishing on the cone, which coordinatize
/// its façade.
pub fn facade_coordinates(fan: &Fan, point: &CompactifiedPoint) -> Vec<(usize, Q)> {
    let datum = fan.datum();
    fan.cone(point.cone)
        .equalities
        .iter()
        .map(|e| (datum.root_index(e).expect("root form"), pair(e, &point.base)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fans::{weyl_fan, Fan};
    use crate::num::{frac, q};
    use crate::rootdata::DiagramSubset;

    fn a2() -> RootDatum {
        RootDatum::catalogue("A2").unwrap()
    }

    #[test]
    fn origin_cone_is_identity() {
        let fan = weyl_fan(&a2()).unwrap();
        let x = vec![frac(1, 3), q(-2)];
        let p = project_to_facade(&fan, fan.origin(), &x);
        assert_eq!(p.base, x);
        assert!(p.is_interior(&fan));
    }

    #[test]
    fn quotient_by_span() {
        let d = a2();
        let fan = weyl_fan(&d).unwrap();
        // ray where a1 = 0, a2 > 0
        let ray = fan.cone_containing(&[q(0), q(1)]);
        let x = vec![q(2), q(5)];
        let y = vec![q(2), q(-7)];
        assert_eq!(project_to_facade(&fan, ray, &x), project_to_facade(&fan, ray, &y));
        let coords = facade_coordinates(&fan, &project_to_facade(&fan, ray, &x));
        assert_eq!(coords, vec![(d.simple_root(0), q(2))]);
        let chamber = fan.cone_containing(&[q(1), q(1)]);
        assert!(project_to_facade(&fan, chamber, &x).base.iter().all(Zero::is_zero));
    }

    #[test]
    fn ray_and_profile_agree() {
        let d = a2();
        for j in [DiagramSubset::EMPTY, DiagramSubset::singleton(0)] {
            let fan = Fan::build(&d, j).unwrap();
            for a in [vec![q(0), q(0)], vec![frac(1, 2), q(3)]] {
                for dir in [vec![q(1), q(1)], vec![q(0), q(1)], vec![q(-1), q(2)], vec![q(1), q(-1)]] {
                    let lr = limit_of_ray(&fan, &a, &dir).unwrap();
                    let p = LimitProfile::of_ray(&d, &a, &dir);
                    assert_eq!(limit_of_profile(&fan, &p), Limit::Point(lr));
                }
            }
        }
    }

    #[test]
    fn merged_cone_forgets_the_merged_coordinate() {
        let d = a2();
        let fan = Fan::build(&d, DiagramSubset::singleton(0)).unwrap();
        let l1 = limit_of_ray(&fan, &[q(5), q(0)], &[q(0), q(1)]).unwrap();
        let l2 = limit_of_ray(&fan, &[q(-3), q(0)], &[q(0), q(1)]).unwrap();
        assert_eq!(l1, l2);
        assert_eq!(l1.cone, fan.cone_of_parabolic(DiagramSubset::singleton(0), 0).unwrap());
    }

    #[test]
    fn finite_profile_is_interior() {
        let d = a2();
        let fan = weyl_fan(&d).unwrap();
        let x = vec![frac(1, 2), q(3)];
        let vals = (0..d.num_roots()).map(|r| ExtQ::Finite(pair(d.root(r), &x))).collect();
        let p = LimitProfile::new(&d, vals).unwrap();
        assert_eq!(limit_of_profile(&fan, &p), Limit::Point(CompactifiedPoint { cone: fan.origin(), base: x }));
    }

    #[test]
    fn inconsistent_profiles_rejected() {
        let d = a2();
        let mut vals = vec![ExtQ::zero(); d.num_roots()];
        let a1 = d.simple_root(0);
        vals[a1] = ExtQ::Finite(q(1));
        assert!(LimitProfile::new(&d, vals.clone()).is_err());
        vals[d.negative(a1)] = ExtQ::Finite(q(-1));
        // a1 + a2 must then be 1
        assert!(LimitProfile::new(&d, vals).is_err());
    }

    #[test]
    fn closure_order_minimum() {
        let fan = weyl_fan(&a2()).unwrap();
        let order = facade_closure_order(&fan);
        let o = fan.origin();
        assert!((0..fan.len()).all(|g| order[o][g]));
        for c in 0..fan.len() {
            if fan.cone(c).span_dim() == 2 {
                assert_eq!((0..fan.len()).filter(|&g| order[c][g]).count(), 1);
            }
        }
    }
}

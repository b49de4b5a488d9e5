//! Exact scalars: arbitrary-precision rationals and their extension by ±∞.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The scalar field of every coordinate in the crate.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse rational from {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"p"`, `"p/q"` or a terminating decimal such as `"-0.25"`.
pub fn parse_q(s: &str) -> Result<Q, ParseRationalError> {
    let t = s.trim();
    let err = || ParseRationalError(s.to_string());
    if let Some((n, d)) = t.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((ip, fp)) = t.split_once('.') {
        if fp.is_empty() || !fp.chars().all(|c| c.is_ascii_digit()) {
            return Err(err());
        }
        let neg = ip.starts_with('-');
        let ip_abs = ip.trim_start_matches(['-', '+']);
        let whole = if ip_abs.is_empty() {
            BigInt::zero()
        } else {
            BigInt::from_str(ip_abs).map_err(|_| err())?
        };
        let scale = num_traits::pow(BigInt::from(10), fp.len());
        let frac = BigInt::from_str(fp).map_err(|_| err())?;
        let v = Q::new(whole * &scale + frac, scale);
        return Ok(if neg { -v } else { v });
    }
    BigInt::from_str(t).map(Q::from_integer).map_err(|_| err())
}

/// Canonical text form: `"p"` for integers, `"p/q"` with `q > 0` and `gcd(p, q) = 1` otherwise.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn parse_q_list(s: &str) -> Result<Vec<Q>, ParseRationalError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse_q).collect()
}

/// Least common multiple of the denominators of `xs` (1 for an empty slice).
pub fn lcm_denominators<'a>(xs: impl IntoIterator<Item = &'a Q>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// A rational extended by `-∞` and `+∞`.
///
/// Used both for limit profiles (values of `<a, x_n>` in the limit) and for
/// log-absolute values, where `-∞` is the log of zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExtQ {
    NegInf,
    Finite(Q),
    PosInf,
}

impl ExtQ {
    pub fn zero() -> Self {
        ExtQ::Finite(Q::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtQ::Finite(_))
    }

    pub fn finite(&self) -> Option<&Q> {
        match self {
            ExtQ::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Multiplication by a natural number, with `0 · ±∞ = 0`.
    pub fn scale(&self, k: u64) -> ExtQ {
        if k == 0 {
            return ExtQ::zero();
        }
        match self {
            ExtQ::Finite(v) => ExtQ::Finite(v * Q::from_integer(BigInt::from(k))),
            other => other.clone(),
        }
    }

    pub fn parse(s: &str) -> Result<Self, ParseRationalError> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtQ::PosInf),
            "-inf" => Ok(ExtQ::NegInf),
            t => parse_q(t).map(ExtQ::Finite),
        }
    }
}

impl fmt::Display for ExtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtQ::NegInf => f.write_str("-inf"),
            ExtQ::PosInf => f.write_str("inf"),
            ExtQ::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl From<Q> for ExtQ {
    fn from(v: Q) -> Self {
        ExtQ::Finite(v)
    }
}

impl PartialOrd for ExtQ {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtQ {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtQ::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
        }
    }
}

impl Neg for ExtQ {
    type Output = ExtQ;
    fn neg(self) -> ExtQ {
        match self {
            ExtQ::NegInf => ExtQ::PosInf,
            ExtQ::PosInf => ExtQ::NegInf,
            ExtQ::Finite(v) => ExtQ::Finite(-v),
        }
    }
}

/// Max-plus addition. `-∞` is absorbing, matching the log of a product with a
/// zero factor; mixing `+∞` with `-∞` yields `-∞` for the same reason.
impl Add for &ExtQ {
    type Output = ExtQ;
    fn add(self, rhs: &ExtQ) -> ExtQ {
        use ExtQ::*;
        match (self, rhs) {
            (NegInf, _) | (_, NegInf) => NegInf,
            (PosInf, _) | (_, PosInf) => PosInf,
            (Finite(a), Finite(b)) => Finite(a + b),
        }
    }
}

impl Add for ExtQ {
    type Output = ExtQ;
    fn add(self, rhs: ExtQ) -> ExtQ {
        &self + &rhs
    }
}

pub fn sign(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Dot product of an integer form with a rational vector.
pub fn pair(form: &[i64], x: &[Q]) -> Q {
    form.iter()
        .zip(x)
        .filter(|(c, _)| **c != 0)
        .fold(Q::zero(), |acc, (c, v)| acc + v * q(*c))
}

/// Scales a nonzero rational vector to the primitive integer vector on the same ray.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let l = lcm_denominators(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_q("-4").unwrap(), q(-4));
        assert_eq!(parse_q("-0.25").unwrap(), frac(-1, 4));
        assert_eq!(parse_q(" 2/-4 ").unwrap(), frac(-1, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
        assert!(parse_q("1.").is_err());
    }

    #[test]
    fn canonical_text() {
        assert_eq!(fmt_q(&frac(2, -6)), "-1/3");
        assert_eq!(fmt_q(&q(5)), "5");
    }

    #[test]
    fn ext_order_and_maxplus() {
        let a = ExtQ::Finite(q(1));
        assert!(ExtQ::NegInf < a && a < ExtQ::PosInf);
        assert_eq!(&ExtQ::NegInf + &ExtQ::PosInf, ExtQ::NegInf);
        assert_eq!(&a + &ExtQ::Finite(frac(1, 2)), ExtQ::Finite(frac(3, 2)));
        assert_eq!(-ExtQ::PosInf, ExtQ::NegInf);
        assert_eq!(ExtQ::NegInf.scale(0), ExtQ::zero());
        assert_eq!(ExtQ::parse("-inf").unwrap(), ExtQ::NegInf);
    }

    #[test]
    fn primitive_vectors() {
        let v = vec![frac(1, 2), frac(-3, 4), q(0)];
        assert_eq!(primitive(&v), vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]);
    }
}

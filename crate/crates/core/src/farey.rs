//! Vertices and edges of the Farey graph.
//!
//! Vertices are extended rationals `p/q` in lowest terms with `q >= 0`; the
//! point at infinity is always stored as `1/0`. Two vertices are joined by an
//! edge when `|p s - q r| = 1`.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A vertex of the Farey graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtRational {
    p: BigInt,
    q: BigInt,
}

impl ExtRational {
    /// Builds `p/q` in canonical form. Any `p/0` with `p != 0` is infinity.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, q) = (p.into(), q.into());
        if q.is_zero() {
            return if p.is_zero() { Err(Error::ZeroOverZero) } else { Ok(Self::infinity()) };
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / &g, q / &g);
        if q.is_negative() {
            p = -p;
            q = -q;
        }
        Ok(Self { p, q })
    }

    pub fn infinity() -> Self {
        Self { p: BigInt::one(), q: BigInt::zero() }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self { p: n.into(), q: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::integer(0)
    }

    pub fn numer(&self) -> &BigInt {
        &self.p
    }

    pub fn denom(&self) -> &BigInt {
        &self.q
    }

    pub fn is_infinite(&self) -> bool {
        self.q.is_zero()
    }

    /// `p_u q_v - q_u p_v`.
    pub fn cross(&self, other: &Self) -> BigInt {
        &self.p * &other.q - &self.q * &other.p
    }

    pub fn is_neighbor(&self, other: &Self) -> bool {
        self.cross(other).abs().is_one()
    }

    pub fn mediant(&self, other: &Self) -> Self {
        Self::new(&self.p + &other.p, &self.q + &other.q).expect("mediant of distinct vertices")
    }

    pub fn difference(&self, other: &Self) -> Self {
        Self::new(&self.p - &other.p, &self.q - &other.q).expect("difference of distinct vertices")
    }

    /// The smallest Farey neighbor, ordered by denominator and then numerator.
    ///
    /// For `p/q` with `q >= 2` the two neighbors with denominator below `q` are
    /// `r/s` with `p s - q r = 1` and `r'/(q - s)` with `p s' - q r' = -1`.
    pub fn ancestor(&self) -> Result<Self> {
        if self.is_infinite() {
            return Err(Error::AncestorOfInfinity);
        }
        if self.q.is_one() {
            return Ok(Self::infinity());
        }
        let q = &self.q;
        let inv = self.p.mod_floor(q).extended_gcd(q).x.mod_floor(q);
        // p * inv - q * r = 1
        let r1 = (&self.p * &inv - BigInt::one()) / q;
        let s2 = q - &inv;
        let r2 = (&self.p * &s2 + BigInt::one()) / q;
        let pick_first = match inv.cmp(&s2) {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => r1 <= r2,
        };
        Ok(if pick_first { Self { p: r1, q: inv } } else { Self { p: r2, q: s2 } })
    }

    /// The ancestor path `v, α(v), α²(v), …, 1/0`.
    pub fn ancestor_path(&self) -> Vec<Self> {
        let mut path = vec![self.clone()];
        let mut cur = self.clone();
        while !cur.is_infinite() {
            cur = cur.ancestor().expect("finite vertex");
            path.push(cur.clone());
        }
        path
    }

    /// Number of ancestor steps needed to reach 1/0.
    pub fn ancestor_depth(&self) -> usize {
        let mut cur = self.clone();
        let mut steps = 0;
        while !cur.is_infinite() {
            cur = cur.ancestor().expect("finite vertex");
            steps += 1;
        }
        steps
    }

    /// Largest integer `<= p/q`. Undefined for infinity.
    pub fn floor(&self) -> BigInt {
        debug_assert!(!self.is_infinite());
        self.p.div_floor(&self.q)
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        ratio_to_f64(&self.p, &self.q)
    }
}

pub(crate) fn ratio_to_f64(p: &BigInt, q: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    let shift = p.bits().max(q.bits()).saturating_sub(60) as usize;
    let (pn, qn) = (p >> shift, q >> shift);
    match (pn.to_f64(), qn.to_f64()) {
        (Some(a), Some(b)) if b != 0.0 => a / b,
        _ => {
            // denominator vanished after shifting; value is huge
            if p.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        }
    }
}

/// Order on the extended real line with 1/0 as the greatest element.
impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.p * &other.q).cmp(&(&other.p * &self.q)),
        }
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

impl fmt::Debug for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    /// Accepts `p/q`, a bare integer, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::infinity());
        }
        let parse =
            |t: &str| t.trim().parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {t:?}")));
        match s.split_once('/') {
            Some((p, q)) => Self::new(parse(p)?, parse(q)?),
            None => Ok(Self::integer(parse(s)?)),
        }
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// True when `x` lies on the open boundary arc running from `from` to `to` in
/// the increasing direction (wrapping through 1/0).
pub fn in_open_arc(x: &ExtRational, from: &ExtRational, to: &ExtRational) -> bool {
    if from < to {
        from < x && x < to
    } else {
        x > from || x < to
    }
}

/// An unordered pair of Farey neighbors. The endpoint order given at
/// construction is kept for presentation; equality ignores it.
#[derive(Clone)]
pub struct FareyEdge {
    u: ExtRational,
    v: ExtRational,
}

impl FareyEdge {
    pub fn new(u: ExtRational, v: ExtRational) -> Result<Self> {
        if !u.is_neighbor(&v) {
            return Err(Error::NotFareyEdge(u.to_string(), v.to_string()));
        }
        Ok(Self { u, v })
    }

    /// The edge from 0 to infinity.
    pub fn standard() -> Self {
        Self { u: ExtRational::zero(), v: ExtRational::infinity() }
    }

    pub fn u(&self) -> &ExtRational {
        &self.u
    }

    pub fn v(&self) -> &ExtRational {
        &self.v
    }

    pub fn endpoints(&self) -> [&ExtRational; 2] {
        [&self.u, &self.v]
    }

    pub fn contains(&self, x: &ExtRational) -> bool {
        &self.u == x || &self.v == x
    }

    /// The endpoint different from `x`, if `x` is an endpoint.
    pub fn other(&self, x: &ExtRational) -> Option<&ExtRational> {
        if &self.u == x {
            Some(&self.v)
        } else if &self.v == x {
            Some(&self.u)
        } else {
            None
        }
    }

    /// Apexes of the two Farey triangles on this edge: the mediant and the
    /// difference of the endpoints.
    pub fn triangle_apexes(&self) -> (ExtRational, ExtRational) {
        (self.u.mediant(&self.v), self.u.difference(&self.v))
    }

    /// Whether the edge separates two boundary points, neither of which is an
    /// endpoint.
    pub fn separates(&self, x: &ExtRational, y: &ExtRational) -> bool {
        in_open_arc(x, &self.u, &self.v) != in_open_arc(y, &self.u, &self.v)
    }

    fn sorted(&self) -> (&ExtRational, &ExtRational) {
        if self.u <= self.v {
            (&self.u, &self.v)
        } else {
            (&self.v, &self.u)
        }
    }
}

impl PartialEq for FareyEdge {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for FareyEdge {}

impl Hash for FareyEdge {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.sorted().hash(state);
    }
}

impl fmt::Debug for FareyEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl Serialize for FareyEdge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [&self.u, &self.v].serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FareyEdge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let [u, v] = <[ExtRational; 2]>::deserialize(deserializer)?;
        FareyEdge::new(u, v).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form() {
        assert_eq!(ExtRational::new(-1, 0).unwrap(), ExtRational::infinity());
        assert_eq!(ExtRational::new(4, -6).unwrap().to_string(), "-2/3");
        assert_eq!(ExtRational::new(0, -5).unwrap().to_string(), "0/1");
        assert_eq!(ExtRational::new(0, 0), Err(Error::ZeroOverZero));
        assert_eq!(r("7"), ExtRational::integer(7));
        assert_eq!(r("inf").to_string(), "1/0");
    }

    #[test]
    fn neighbors() {
        assert!(r("0/1").is_neighbor(&r("1/0")));
        assert!(r("76/101").is_neighbor(&r("3/4")));
        assert!(!r("2/5").is_neighbor(&r("3/4")));
    }

    #[test]
    fn apexes() {
        let apex = |a: &str, b: &str| {
            let (m, d) = FareyEdge::new(r(a), r(b)).unwrap().triangle_apexes();
            (m.to_string(), d.to_string())
        };
        assert_eq!(apex("0/1", "1/0"), ("1/1".into(), "-1/1".into()));
        assert_eq!(apex("1/1", "3/4"), ("4/5".into(), "2/3".into()));
        assert_eq!(apex("1/1", "2/1"), ("3/2".into(), "1/0".into()));
    }

    #[test]
    fn ancestor_examples() {
        assert_eq!(r("76/101").ancestor().unwrap(), r("3/4"));
        assert_eq!(r("3/4").ancestor().unwrap(), r("1/1"));
        assert_eq!(r("5/1").ancestor().unwrap(), ExtRational::infinity());
        assert_eq!(r("1/2").ancestor().unwrap(), r("0/1"));
        assert_eq!(r("-1/2").ancestor().unwrap(), r("-1/1"));
        assert_eq!(ExtRational::infinity().ancestor(), Err(Error::AncestorOfInfinity));
        let path: Vec<String> = r("76/101").ancestor_path().iter().map(|v| v.to_string()).collect();
        assert_eq!(path, ["76/101", "3/4", "1/1", "1/0"]);
    }

    #[test]
    fn ancestor_is_minimal_neighbor_by_brute_force() {
        for q in 2i64..40 {
            for p in -60i64..60 {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let v = ExtRational::new(p, q).unwrap();
                // every neighbor with denominator < q has |numerator| bounded by |p|+1
                let mut best: Option<(i64, i64)> = None;
                for s in 1..q {
                    for rr in (p.abs() * -2 - 2)..(p.abs() * 2 + 2) {
                        if (p * s - q * rr).abs() == 1 && best.is_none_or(|b| (s, rr) < b) {
                            best = Some((s, rr));
                        }
                    }
                }
                let (s, rr) = best.unwrap();
                assert_eq!(v.ancestor().unwrap(), ExtRational::new(rr, s).unwrap(), "{v}");
            }
        }
    }

    #[test]
    fn arcs_wrap_through_infinity() {
        let inf = ExtRational::infinity();
        assert!(in_open_arc(&r("5"), &r("1"), &inf));
        assert!(in_open_arc(&r("-5"), &inf, &r("0")));
        assert!(in_open_arc(&r("-5"), &r("1"), &r("0")));
        assert!(!in_open_arc(&r("1/2"), &r("1"), &r("0")));
        assert!(in_open_arc(&inf, &r("1"), &r("0")));
        let e = FareyEdge::standard();
        assert!(e.separates(&r("1/2"), &r("-3")));
        assert!(!e.separates(&r("1/2"), &r("3")));
    }

    #[test]
    fn edge_equality_is_unordered() {
        let a = FareyEdge::new(r("3/4"), r("1")).unwrap();
        let b = FareyEdge::new(r("1"), r("3/4")).unwrap();
        assert_eq!(a, b);
        assert!(FareyEdge::new(r("2/5"), r("3/4")).is_err());
    }
}

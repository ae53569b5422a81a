//! Integer 2×2 matrices, the PSL(2,Z) action on extended rationals and the
//! fixed-point quadratic of a hyperbolic element.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::farey::ExtRational;

/// A plain integer matrix `[[a, b], [c, d]]` with no determinant constraint.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    /// Entrywise `self >= other`.
    pub fn dominates(&self, other: &Self) -> bool {
        self.a >= other.a && self.b >= other.b && self.c >= other.c && self.d >= other.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        IntMatrix {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    Hyperbolic,
    Parabolic,
    Elliptic,
}

/// An element of PSL(2,Z), stored as the determinant-one representative whose
/// first nonzero entry is positive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatrixPSL2Z(IntMatrix);

impl MatrixPSL2Z {
    pub fn new(m: IntMatrix) -> Result<Self> {
        let det = m.det();
        if !det.is_one() {
            return Err(Error::BadDeterminant(det.to_string()));
        }
        let first = m.entries().into_iter().find(|x| !x.is_zero()).cloned().unwrap_or_default();
        Ok(if first.is_negative() { Self(IntMatrix { a: -m.a, b: -m.b, c: -m.c, d: -m.d }) } else { Self(m) })
    }

    pub fn from_entries(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        Self::new(IntMatrix::new(a, b, c, d))
    }

    pub fn identity() -> Self {
        Self(IntMatrix::identity())
    }

    /// `[[1,1],[0,1]]`.
    pub fn t() -> Self {
        Self(IntMatrix::new(1, 1, 0, 1))
    }

    /// `[[1,0],[1,1]]`.
    pub fn u() -> Self {
        Self(IntMatrix::new(1, 0, 1, 1))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn a(&self) -> &BigInt {
        &self.0.a
    }
    pub fn b(&self) -> &BigInt {
        &self.0.b
    }
    pub fn c(&self) -> &BigInt {
        &self.0.c
    }
    pub fn d(&self) -> &BigInt {
        &self.0.d
    }

    /// Signed trace of the stored representative.
    pub fn signed_trace(&self) -> BigInt {
        self.0.trace()
    }

    /// `|a + d|`, the trace of the PSL element.
    pub fn trace(&self) -> BigInt {
        self.0.trace().abs()
    }

    pub fn classify(&self) -> Classification {
        let t = self.trace();
        let two = BigInt::from(2);
        match t.cmp(&two) {
            std::cmp::Ordering::Greater => Classification::Hyperbolic,
            std::cmp::Ordering::Equal => Classification::Parabolic,
            std::cmp::Ordering::Less => Classification::Elliptic,
        }
    }

    pub fn is_hyperbolic(&self) -> bool {
        self.classify() == Classification::Hyperbolic
    }

    pub fn ensure_hyperbolic(&self) -> Result<()> {
        if self.is_hyperbolic() {
            Ok(())
        } else {
            Err(Error::NotHyperbolic)
        }
    }

    /// `(a p + b q) / (c p + d q)`.
    pub fn apply(&self, v: &ExtRational) -> ExtRational {
        let m = &self.0;
        let (p, q) = (v.numer(), v.denom());
        ExtRational::new(&m.a * p + &m.b * q, &m.c * p + &m.d * q)
            .expect("determinant one action never yields 0/0")
    }

    pub fn inverse(&self) -> Self {
        let m = &self.0;
        Self::new(IntMatrix { a: m.d.clone(), b: -&m.b, c: -&m.c, d: m.a.clone() })
            .expect("inverse has determinant one")
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            n >>= 1;
        }
        acc
    }

    /// The matrix `[[p, r], [q, s]]` with `p s - q r = 1` sending 1/0 to `v`.
    /// The completion `(r, s)` comes from the extended Euclidean algorithm.
    pub fn completing(v: &ExtRational) -> Self {
        if v.is_infinite() {
            return Self::identity();
        }
        let (p, q) = (v.numer(), v.denom());
        // p x + q y = 1  =>  p s - q r = 1 with s = x, r = -y
        let eg = p.extended_gcd(q);
        let sign = if eg.gcd.is_negative() { -BigInt::one() } else { BigInt::one() };
        let (s, r) = (&eg.x * &sign, -(&eg.y * &sign));
        Self::new(IntMatrix { a: p.clone(), b: r, c: q.clone(), d: s })
            .expect("completion has determinant one")
    }

    /// The quadratic `c x² + (d − a) x − b` whose roots are the fixed points.
    pub fn fixed_point_quadratic(&self) -> Result<AxisQuadratic> {
        self.ensure_hyperbolic()?;
        let m = &self.0;
        Ok(AxisQuadratic::new(m.c.clone(), &m.d - &m.a, -&m.b))
    }
}

impl Mul for &MatrixPSL2Z {
    type Output = MatrixPSL2Z;

    fn mul(self, rhs: &MatrixPSL2Z) -> MatrixPSL2Z {
        MatrixPSL2Z::new(&self.0 * &rhs.0).expect("product of determinant one matrices")
    }
}

impl fmt::Display for MatrixPSL2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for MatrixPSL2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

impl FromStr for MatrixPSL2Z {
    type Err = Error;

    /// Parses `a,b,c,d`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!("expected four comma-separated integers, got {s:?}")));
        }
        let mut xs = Vec::with_capacity(4);
        for p in parts {
            xs.push(p.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {p:?}")))?);
        }
        let [a, b, c, d]: [BigInt; 4] = xs.try_into().expect("four entries");
        Self::new(IntMatrix { a, b, c, d })
    }
}

impl Serialize for MatrixPSL2Z {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `A x² + B x + C` with positive non-square discriminant and `A != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisQuadratic {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub disc: BigInt,
}

impl AxisQuadratic {
    fn new(a: BigInt, b: BigInt, c: BigInt) -> Self {
        let disc = &b * &b - BigInt::from(4) * &a * &c;
        debug_assert!(!a.is_zero() && disc.is_positive() && !is_square(&disc));
        Self { a, b, c, disc }
    }

    /// `Q(p/q) · q²`, exact.
    pub fn eval_homogeneous(&self, x: &ExtRational) -> BigInt {
        let (p, q) = (x.numer(), x.denom());
        &self.a * p * p + &self.b * p * q + &self.c * q * q
    }

    /// Whether `x` lies strictly between the two roots. Never true for 1/0.
    pub fn strictly_between_roots(&self, x: &ExtRational) -> bool {
        if x.is_infinite() {
            return false;
        }
        let v = self.eval_homogeneous(x);
        if self.a.is_positive() {
            v.is_negative()
        } else {
            v.is_positive()
        }
    }

    /// `−B / (2A)`, the midpoint of the roots.
    pub fn midpoint(&self) -> ExtRational {
        ExtRational::new(-&self.b, BigInt::from(2) * &self.a).expect("A is nonzero")
    }

    /// Roots as `(P ± √D) / Q` triples `(P, D, Q)`, with the `+` root first.
    pub fn roots(&self) -> [(BigInt, BigInt, BigInt); 2] {
        let q = BigInt::from(2) * &self.a;
        [(-&self.b, self.disc.clone(), q.clone()), (self.b.clone(), self.disc.clone(), -q)]
    }

    /// Floating point roots `(+ root, − root)`, presentation only.
    pub fn roots_f64(&self) -> (f64, f64) {
        let s = crate::apps::sqrt_f64(&self.disc);
        let b = crate::farey::ratio_to_f64(&self.b, &BigInt::one());
        let two_a = crate::farey::ratio_to_f64(&(BigInt::from(2) * &self.a), &BigInt::one());
        ((-b + s) / two_a, (-b - s) / two_a)
    }
}

pub(crate) fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

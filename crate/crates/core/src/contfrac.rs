//! Continued fractions of rationals and quadratic surds, the sequence matrix
//! `M(a1, …, an) = M(a1)···M(an)` with `M(a) = [[a,1],[1,0]]`, and T/U words.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::farey::ExtRational;
use crate::matrix::{is_square, IntMatrix, MatrixPSL2Z};

/// `[a0; a1, …, am, (p1, …, pk)]`. Finite expansions have an empty period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CFExpansion {
    pub preperiod: Vec<BigInt>,
    pub period: Vec<BigInt>,
}

impl CFExpansion {
    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// Value of a finite expansion.
    pub fn to_rational(&self) -> Option<ExtRational> {
        if !self.is_finite() || self.preperiod.is_empty() {
            return None;
        }
        let (mut p, mut q) = (BigInt::one(), BigInt::zero());
        for a in self.preperiod.iter().rev() {
            // a + 1/(p/q) = (a p + q) / p
            let np = a * &p + &q;
            q = p;
            p = np;
        }
        ExtRational::new(p, q).ok()
    }

    /// Period entries as small integers, if they all fit.
    pub fn period_u64(&self) -> Option<Vec<u64>> {
        self.period.iter().map(|x| x.to_u64()).collect()
    }

    /// Floating point value, presentation only.
    pub fn approx(&self, terms: usize) -> f64 {
        let mut coeffs: Vec<&BigInt> = self.preperiod.iter().collect();
        if !self.period.is_empty() {
            coeffs.extend(self.period.iter().cycle().take(terms));
        }
        let mut x = f64::INFINITY;
        for a in coeffs.iter().rev() {
            x = a.to_f64().unwrap_or(f64::INFINITY) + 1.0 / x;
        }
        x
    }
}

impl fmt::Display for CFExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[BigInt]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ");
        let mut tokens: Vec<String> = self.preperiod.iter().map(|x| x.to_string()).collect();
        if !self.period.is_empty() {
            tokens.push(format!("({})", join(&self.period)));
        }
        match tokens.split_first() {
            None => write!(f, "[]"),
            Some((first, [])) => write!(f, "[{first}]"),
            Some((first, rest)) => write!(f, "[{first}; {}]", rest.join(", ")),
        }
    }
}

/// Finite continued fraction via the Euclidean algorithm. The last
/// coefficient is at least 2 whenever there is more than one.
pub fn cf_of_rational(v: &ExtRational) -> Result<CFExpansion> {
    if v.is_infinite() {
        return Err(Error::InfinityHasNoCF);
    }
    let (mut p, mut q) = (v.numer().clone(), v.denom().clone());
    let mut coeffs = Vec::new();
    while !q.is_zero() {
        let (a, r) = p.div_mod_floor(&q);
        coeffs.push(a);
        p = q;
        q = r;
    }
    Ok(CFExpansion { preperiod: coeffs, period: Vec::new() })
}

/// `(P + √D) / Q` with `D` a positive non-square and `Q | D − P²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    d: BigInt,
    q: BigInt,
}

impl QuadraticSurd {
    /// Builds the surd, rescaling to `(P|Q| + √(D Q²)) / (Q|Q|)` when `Q` does
    /// not divide `D − P²`.
    pub fn new(p: impl Into<BigInt>, d: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let (p, d, q) = (p.into(), d.into(), q.into());
        if q.is_zero() {
            return Err(Error::InvalidSurd("zero denominator".into()));
        }
        if !d.is_positive() || is_square(&d) {
            return Err(Error::InvalidSurd(format!("{d} is not a positive non-square")));
        }
        if (&d - &p * &p).is_multiple_of(&q) {
            return Ok(Self { p, d, q });
        }
        let aq = q.abs();
        Ok(Self { p: &p * &aq, d: &d * &q * &q, q: &q * &aq })
    }

    pub fn parts(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.p, &self.d, &self.q)
    }

    pub fn to_f64(&self) -> f64 {
        let s = crate::apps::sqrt_f64(&self.d);
        (self.p.to_f64().unwrap_or(f64::NAN) + s) / self.q.to_f64().unwrap_or(f64::NAN)
    }

    /// `floor((P + √D) / Q)`, exact.
    fn floor(&self) -> BigInt {
        let s = self.d.sqrt();
        if self.q.is_positive() {
            (&self.p + &s).div_floor(&self.q)
        } else {
            (&self.p + &s + BigInt::one()).div_floor(&self.q)
        }
    }
}

/// Eventually periodic continued fraction of a quadratic surd.
pub fn cf_of_surd(s: &QuadraticSurd) -> CFExpansion {
    let d = &s.d;
    let (mut p, mut q) = (s.p.clone(), s.q.clone());
    let mut seen: HashMap<(BigInt, BigInt), usize> = HashMap::new();
    let mut coeffs = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let period = minimal_block(&coeffs[start..]);
            coeffs.truncate(start);
            return CFExpansion { preperiod: coeffs, period };
        }
        seen.insert((p.clone(), q.clone()), coeffs.len());
        let a = QuadraticSurd { p: p.clone(), d: d.clone(), q: q.clone() }.floor();
        let np = &a * &q - &p;
        let nq = (d - &np * &np) / &q;
        coeffs.push(a);
        p = np;
        q = nq;
    }
}

/// Shortest block whose repetition gives `xs`.
fn minimal_block<T: Clone + PartialEq>(xs: &[T]) -> Vec<T> {
    let n = xs.len();
    (1..=n)
        .filter(|&k| n.is_multiple_of(k))
        .find(|&k| (0..n).all(|i| xs[i] == xs[i % k]))
        .map(|k| xs[..k].to_vec())
        .unwrap_or_default()
}

/// `M(a1)···M(an)`; its columns are `(p(S), q(S))` and `(r(S), s(S))`.
pub fn matrix_of_sequence(seq: &[u64]) -> Result<IntMatrix> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    if seq.contains(&0) {
        return Err(Error::NonpositiveEntry);
    }
    let mut acc = IntMatrix::identity();
    for &a in seq {
        acc = &acc * &IntMatrix::new(a, 1, 1, 0);
    }
    Ok(acc)
}

/// Maximal runs of equal letters in a T/U word.
pub fn word_blocks(word: &str) -> Result<Vec<(char, u64)>> {
    let mut blocks: Vec<(char, u64)> = Vec::new();
    for ch in word.chars() {
        if ch != 'T' && ch != 'U' {
            return Err(Error::InvalidLetter(ch));
        }
        match blocks.last_mut() {
            Some((c, n)) if *c == ch => *n += 1,
            _ => blocks.push((ch, 1)),
        }
    }
    if blocks.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(blocks)
}

/// Product of `T = [[1,1],[0,1]]` and `U = [[1,0],[1,1]]` along the word. The
/// word must split into an even number of alternating blocks.
pub fn word_to_matrix(word: &str) -> Result<MatrixPSL2Z> {
    let blocks = word_blocks(word)?;
    if blocks.len() % 2 == 1 {
        return Err(Error::OddBlockCount);
    }
    let (t, u) = (MatrixPSL2Z::t(), MatrixPSL2Z::u());
    Ok(word.chars().fold(MatrixPSL2Z::identity(), |acc, ch| &acc * if ch == 'T' { &t } else { &u }))
}

//! Applications: minimal-word experiments, the dilatation to translation
//! length ratio, and the census of conjugacy classes by translation length.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::contfrac::{word_to_matrix, QuadraticSurd};
use crate::error::{Error, Result};
use crate::geodesic::{cyclic_translation_length, translation_length};
use crate::matrix::MatrixPSL2Z;

/// Largest `m + n` accepted by [`minimal_word_experiment`].
pub const WORD_BUDGET: u64 = 24;

/// Square root of a non-negative integer as a float, without overflowing for
/// huge inputs.
pub(crate) fn sqrt_f64(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::NAN).sqrt();
    }
    let shift = (bits - 900) & !1;
    let top = (n >> shift).to_f64().unwrap_or(f64::NAN).sqrt();
    top * 2f64.powi((shift / 2) as i32)
}

/// Natural logarithm of a positive integer.
pub(crate) fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        return n.to_f64().unwrap_or(f64::NAN).ln();
    }
    let shift = bits - 900;
    (n >> shift).to_f64().unwrap_or(f64::NAN).ln() + shift as f64 * std::f64::consts::LN_2
}

/// `log λ` for the dilatation `λ = (t + √(t² − 4)) / 2` of trace `t > 2`.
pub(crate) fn log_dilatation(trace: &BigInt) -> f64 {
    let t = trace.abs();
    let inv = 2.0 / t.to_f64().unwrap_or(f64::INFINITY);
    ln_bigint(&t) + ((1.0 + (1.0 - inv * inv).sqrt()) / 2.0).ln()
}

/// The dilatation `(t + √(t² − 4)) / 2` truncated to `digits` significant
/// digits.
pub fn dilatation_decimal(trace: &BigInt, digits: usize) -> String {
    let t = trace.abs();
    let int_part = (&t + (&t * &t - 4u32).sqrt()) / 2u32;
    let int_digits = int_part.to_string().len();
    let frac = digits.saturating_sub(int_digits);
    let scale = BigInt::from(10u32).pow(frac as u32);
    let disc = (&t * &t - 4u32) * &scale * &scale;
    let scaled: BigInt = (&t * &scale + disc.sqrt()) / 2u32;
    let s = scaled.to_string();
    if frac == 0 {
        s
    } else {
        let (head, tail) = s.split_at(s.len() - frac);
        format!("{head}.{tail}")
    }
}

/// Binary fixed point with `bits` fractional bits.
struct Fixed {
    bits: u64,
}

impl Fixed {
    fn one(&self) -> BigInt {
        BigInt::from(1u32) << self.bits
    }

    fn div(&self, a: &BigInt, b: &BigInt) -> BigInt {
        (a << self.bits) / b
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        // truncates toward zero, unlike a right shift
        (a * b) / self.one()
    }

    /// `2 atanh(z)` for `|z| <= 1/3`.
    fn two_atanh(&self, z: &BigInt) -> BigInt {
        let z2 = self.mul(z, z);
        let mut power = z.clone();
        let mut sum = BigInt::from(0u32);
        let mut k = 1u32;
        while !power.is_zero() {
            sum += &power / k;
            power = self.mul(&power, &z2);
            k += 2;
        }
        sum * 2u32
    }

    /// Natural logarithm of a positive fixed-point value.
    fn ln(&self, x: &BigInt) -> BigInt {
        // x = y 2^e with y in [2/3, 4/3)
        let one = self.one();
        let mut e = x.bits() as i64 - self.bits as i64 - 1;
        let mut y = if e >= 0 { x >> e as u64 } else { x << (-e) as u64 };
        if &y * 3u32 >= &one * 4u32 {
            y >>= 1u32;
            e += 1;
        }
        let ln_y = self.two_atanh(&self.div(&(&y - &one), &(&y + &one)));
        let ln2 = self.two_atanh(&(&one / 3u32));
        ln_y + ln2 * e
    }

    /// Truncated decimal rendering with `digits` significant digits.
    fn decimal(&self, v: &BigInt, digits: usize) -> String {
        let int_digits = (v >> self.bits).to_string().len();
        let frac = digits.saturating_sub(int_digits);
        let s = ((v * BigInt::from(10u32).pow(frac as u32)) >> self.bits).to_string();
        let s = format!("{s:0>width$}", width = frac + 1);
        if frac == 0 {
            s
        } else {
            let (head, tail) = s.split_at(s.len() - frac);
            format!("{head}.{tail}")
        }
    }
}

/// `log λ` held exactly enough for a fixed number of significant digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactLog {
    bits: u64,
    value: BigInt,
    digits: usize,
}

impl ExactLog {
    /// `log λ` for the dilatation `λ` of trace `t > 2`, good to `digits`
    /// significant digits even after division by a length.
    pub fn of_trace(trace: &BigInt, digits: usize) -> Self {
        let t = trace.abs();
        let fx = Fixed { bits: 4 * digits as u64 + 64 + t.bits() };
        let lambda = ((&t << fx.bits) + ((&t * &t - 4u32) << (2 * fx.bits)).sqrt()) / 2u32;
        ExactLog { bits: fx.bits, value: fx.ln(&lambda), digits }
    }

    pub fn decimal(&self) -> String {
        Fixed { bits: self.bits }.decimal(&self.value, self.digits)
    }

    /// Decimal of `log λ / length`.
    pub fn per_length(&self, length: u64) -> String {
        Fixed { bits: self.bits }.decimal(&(&self.value / length), self.digits)
    }
}

/// `log λ` to `digits` significant digits, computed in exact integer
/// arithmetic.
pub fn log_dilatation_decimal(trace: &BigInt, digits: usize) -> String {
    ExactLog::of_trace(trace, digits).decimal()
}

/// `log λ / length` to `digits` significant digits.
pub fn ratio_decimal(trace: &BigInt, length: u64, digits: usize) -> String {
    ExactLog::of_trace(trace, digits).per_length(length)
}

/// `log λ / l` for a hyperbolic element with dilatation `λ` and translation
/// length `l`.
pub fn ratio(m: &MatrixPSL2Z) -> Result<f64> {
    let length = translation_length(m)?.length;
    Ok(log_dilatation(&m.trace()) / length as f64)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ClassRecord {
    /// Lexicographically minimal rotation of the cyclic type.
    pub normal_form: Vec<u64>,
    pub trace: u64,
    pub length: u64,
    pub dilatation: QuadraticSurd,
    pub ratio: f64,
}

impl ClassRecord {
    fn new(normal_form: Vec<u64>, trace: u64) -> Result<Self> {
        let length = cyclic_translation_length(&normal_form)?;
        let t = BigInt::from(trace);
        let dilatation = QuadraticSurd::new(t.clone(), &t * &t - 4u32, 2)?;
        let ratio = log_dilatation(&t) / length as f64;
        Ok(ClassRecord { normal_form, trace, length, dilatation, ratio })
    }

    pub fn dilatation_decimal(&self, digits: usize) -> String {
        dilatation_decimal(&BigInt::from(self.trace), digits)
    }

    pub fn ratio_decimal(&self, digits: usize) -> String {
        ratio_decimal(&BigInt::from(self.trace), self.length, digits)
    }
}

type Mat = [u64; 4];

fn times_block(p: &Mat, a: u64) -> Mat {
    // P * [[a, 1], [1, 0]]
    [p[0] * a + p[1], p[0], p[2] * a + p[3], p[2]]
}

fn is_min_rotation(seq: &[u64]) -> bool {
    (1..seq.len()).all(|k| {
        let rotated = seq[k..].iter().chain(&seq[..k]);
        seq.iter().le(rotated)
    })
}

/// Lexicographically minimal cyclic rotation.
pub fn normal_form(seq: &[u64]) -> Vec<u64> {
    (0..seq.len().max(1))
        .map(|k| seq[k..].iter().chain(&seq[..k]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn collect(prefix: &mut Vec<u64>, p: Mat, bound: u64, out: &mut Vec<(Vec<u64>, u64)>) {
    // `prefix` has even length and product `p`
    if !prefix.is_empty() {
        let trace = p[0] + p[3];
        if trace <= bound && is_min_rotation(prefix) {
            out.push((prefix.clone(), trace));
        }
        if 2 * p[0] + p[1] + p[2] + p[3] > bound {
            return;
        }
    }
    for a in 1.. {
        let q = times_block(&p, a);
        if q[0] + q[1] + q[2] > bound {
            break;
        }
        for b in 1.. {
            let r = times_block(&q, b);
            if r[0] + r[3] > bound {
                break;
            }
            prefix.extend([a, b]);
            collect(prefix, r, bound, out);
            prefix.truncate(prefix.len() - 2);
        }
    }
}

/// Every conjugacy class with `2 < trace ≤ max_trace`, one per cyclic type,
/// sorted by trace and then normal form.
pub fn enumerate_classes(max_trace: u64) -> Result<Vec<ClassRecord>> {
    if max_trace < 3 {
        return Err(Error::TraceBoundTooSmall);
    }
    let branch = |a: u64| {
        let mut out = Vec::new();
        let q = times_block(&[1, 0, 0, 1], a);
        if q[0] + q[1] + q[2] <= max_trace {
            for b in 1.. {
                let r = times_block(&q, b);
                if r[0] + r[3] > max_trace {
                    break;
                }
                collect(&mut vec![a, b], r, max_trace, &mut out);
            }
        }
        out
    };
    #[cfg(feature = "parallel")]
    let mut found: Vec<(Vec<u64>, u64)> = (1..=max_trace).into_par_iter().flat_map_iter(branch).collect();
    #[cfg(not(feature = "parallel"))]
    let mut found: Vec<(Vec<u64>, u64)> = (1..=max_trace).flat_map(branch).collect();
    found.sort_by(|x, y| (x.1, &x.0).cmp(&(y.1, &y.0)));
    found.into_iter().map(|(seq, trace)| ClassRecord::new(seq, trace)).collect()
}

/// Number of classes of trace exactly `t`.
pub fn class_count(t: u64) -> Result<usize> {
    if t < 3 {
        return Ok(0);
    }
    Ok(enumerate_classes(t)?.iter().filter(|c| c.trace == t).count())
}

/// Largest trace whose dilatation is below `r`: `λ < R` exactly when
/// `t < R + 1/R`.
pub fn max_trace_below(r: &BigRational) -> Option<u64> {
    if !r.is_positive() {
        return None;
    }
    let bound = r + r.recip();
    (bound.ceil().to_integer() - 1u32).to_u64()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Census {
    pub r: BigRational,
    pub k: u64,
    pub max_trace: u64,
    /// `N_i(R)` for each translation length `i` that occurs.
    pub by_length: BTreeMap<u64, u64>,
    pub numerator: u64,
    pub denominator: u64,
    pub ratio: f64,
}

/// Share of classes with dilatation below `r` whose translation length is
/// shared by at least `k` such classes.
pub fn census(r: &BigRational, k: u64) -> Result<Census> {
    let max_trace = max_trace_below(r).filter(|&t| t >= 3).ok_or(Error::EmptyRange)?;
    census_of(&enumerate_classes(max_trace)?, r, k)
}

/// Like [`census`], reusing classes that were already enumerated to at least
/// the needed trace.
pub fn census_of(classes: &[ClassRecord], r: &BigRational, k: u64) -> Result<Census> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let max_trace = max_trace_below(r).filter(|&t| t >= 3).ok_or(Error::EmptyRange)?;
    let mut by_length = BTreeMap::new();
    for c in classes.iter().filter(|c| c.trace <= max_trace) {
        *by_length.entry(c.length).or_insert(0u64) += 1;
    }
    let denominator: u64 = by_length.values().sum();
    if denominator == 0 {
        return Err(Error::EmptyRange);
    }
    let numerator = by_length.values().filter(|&&n| n >= k).sum();
    Ok(Census {
        r: r.clone(),
        k,
        max_trace,
        by_length,
        numerator,
        denominator,
        ratio: numerator as f64 / denominator as f64,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordRow {
    /// Rotation starting with a `T` block and ending with a `U` block.
    pub word: String,
    pub types: Vec<u64>,
    pub length: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalWordTable {
    pub m: u64,
    pub n: u64,
    pub rows: Vec<WordRow>,
}

impl MinimalWordTable {
    pub fn minimum(&self) -> u64 {
        self.rows.iter().map(|r| r.length).min().unwrap_or(0)
    }

    pub fn block_word(&self) -> String {
        "T".repeat(self.m as usize) + &"U".repeat(self.n as usize)
    }

    pub fn block_length(&self) -> Option<u64> {
        let block = self.block_word();
        self.rows.iter().find(|r| r.word == block).map(|r| r.length)
    }

    /// Whether `T^m U^n` has the shortest translation length and that length
    /// is at most 2.
    pub fn block_word_is_minimal(&self) -> bool {
        self.block_length() == Some(self.minimum()) && self.minimum() <= 2
    }
}

fn block_types(bits: &[bool]) -> Vec<u64> {
    let mut types: Vec<u64> = Vec::new();
    let mut prev = None;
    for &b in bits {
        if prev == Some(b) {
            *types.last_mut().unwrap() += 1;
        } else {
            types.push(1);
        }
        prev = Some(b);
    }
    types
}

/// All cyclic words in `m` letters `T` and `n` letters `U` with their
/// translation lengths.
pub fn minimal_word_experiment(m: u64, n: u64) -> Result<MinimalWordTable> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("m and n must be positive".into()));
    }
    if m + n > WORD_BUDGET {
        return Err(Error::BudgetExceeded(format!("m + n = {} exceeds {WORD_BUDGET}", m + n)));
    }
    let len = (m + n) as usize;
    let mut seen = BTreeSet::new();
    let mut rows = Vec::new();
    for mask in 0u32..(1u32 << len) {
        if u64::from(mask.count_ones()) != m {
            continue;
        }
        // bit i set means letter i is T
        let bits: Vec<bool> = (0..len).map(|i| mask >> i & 1 == 1).collect();
        let start = (0..len).find(|&i| bits[i] && !bits[(i + len - 1) % len]).unwrap();
        let rotated: Vec<bool> = bits[start..].iter().chain(&bits[..start]).copied().collect();
        if !seen.insert(rotated.clone()) {
            continue;
        }
        let word: String = rotated.iter().map(|&t| if t { 'T' } else { 'U' }).collect();
        let matrix = word_to_matrix(&word)?;
        let length = translation_length(&matrix)?.length;
        rows.push(WordRow { word, types: block_types(&rotated), length });
    }
    rows.sort_by(|a, b| (a.length, &a.word).cmp(&(b.length, &b.word)));
    Ok(MinimalWordTable { m, n, rows })
}

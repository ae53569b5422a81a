//! Seeded generators for randomized checks.

use farey_axis::{matrix_of_sequence, ExtRational, MatrixPSL2Z};
use num_integer::Integer;
use rand::Rng;

/// Range of `k` with `|x + k y| <= bound`, for `y != 0`.
fn shift_range(x: i64, y: i64, bound: i64) -> (i64, i64) {
    let (x, y) = if y < 0 { (-x, -y) } else { (x, y) };
    (Integer::div_ceil(&(-bound - x), &y), Integer::div_floor(&(bound - x), &y))
}

/// A uniformly drawn first column and a random completion, all entries in
/// `[-bound, bound]`, conditioned on being hyperbolic.
pub fn hyperbolic_matrix<R: Rng>(rng: &mut R, bound: i64) -> MatrixPSL2Z {
    loop {
        let (a, c) = (rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        let g = a.extended_gcd(&c);
        if g.gcd != 1 {
            continue;
        }
        // a x + c y = 1, so d = x and b = -y solve a d - b c = 1
        let (d0, b0) = (g.x, -g.y);
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        for (x, y) in [(d0, c), (b0, a)] {
            if y == 0 {
                if x.abs() > bound {
                    hi = lo - 1;
                }
                continue;
            }
            let (l, h) = shift_range(x, y, bound);
            lo = lo.max(l);
            hi = hi.min(h);
        }
        if lo > hi {
            continue;
        }
        let k = if lo == i64::MIN { 0 } else { rng.gen_range(lo..=hi) };
        let m = MatrixPSL2Z::from_entries(a, b0 + k * a, c, d0 + k * c).expect("determinant one");
        if m.is_hyperbolic() {
            return m;
        }
    }
}

pub fn sequence<R: Rng>(rng: &mut R, max_len: usize, max_entry: u64) -> Vec<u64> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(1..=max_entry)).collect()
}

pub fn even_sequence<R: Rng>(rng: &mut R, max_half: usize, max_entry: u64) -> Vec<u64> {
    let half = rng.gen_range(1..=max_half);
    (0..2 * half).map(|_| rng.gen_range(1..=max_entry)).collect()
}

/// A product of up to four factors `T^a U^b`, `|a|, |b| <= 4`.
pub fn group_element<R: Rng>(rng: &mut R) -> MatrixPSL2Z {
    (0..rng.gen_range(0..=4)).fold(MatrixPSL2Z::identity(), |acc, _| {
        let (a, b) = (rng.gen_range(-4i64..=4), rng.gen_range(-4i64..=4));
        &acc * &MatrixPSL2Z::from_entries(1 + a * b, a, b, 1).expect("determinant one")
    })
}

/// `M(S)` for a random even `S`, conjugated by a random group element.
pub fn conjugated_sequence_matrix<R: Rng>(rng: &mut R) -> (Vec<u64>, MatrixPSL2Z) {
    let seq = even_sequence(rng, 3, 5);
    let m = MatrixPSL2Z::new(matrix_of_sequence(&seq).expect("positive sequence")).expect("even length");
    let g = group_element(rng);
    (seq, &(&g * &m) * &g.inverse())
}

pub fn vertex<R: Rng>(rng: &mut R, max_den: i64) -> ExtRational {
    if rng.gen_ratio(1, 20) {
        return ExtRational::infinity();
    }
    let q = rng.gen_range(1..=max_den);
    ExtRational::new(rng.gen_range(-3 * max_den..=3 * max_den), q).expect("nonzero denominator")
}

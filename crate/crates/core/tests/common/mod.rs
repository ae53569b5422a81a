#![allow(dead_code)]

use farey_axis::{matrix_of_sequence, ExtRational, FareyEdge, Ladder, MatrixPSL2Z};
use proptest::prelude::*;

pub fn psl(m: farey_axis::IntMatrix) -> MatrixPSL2Z {
    MatrixPSL2Z::new(m).unwrap()
}

/// A product of powers of `T` and `U` with exponents in `-4..=4`.
pub fn group_element() -> impl Strategy<Value = MatrixPSL2Z> {
    prop::collection::vec((-4i64..=4, -4i64..=4), 0..5).prop_map(|pairs| {
        pairs.into_iter().fold(MatrixPSL2Z::identity(), |acc, (a, b)| {
            let step = MatrixPSL2Z::from_entries(1 + a * b, a, b, 1).unwrap();
            &acc * &step
        })
    })
}

pub fn positive_sequence(max_len: usize, max_entry: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1..=max_entry, 1..=max_len)
}

pub fn even_sequence(max_half: usize, max_entry: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec((1..=max_entry, 1..=max_entry), 1..=max_half)
        .prop_map(|pairs| pairs.into_iter().flat_map(|(a, b)| [a, b]).collect())
}

/// A hyperbolic element given as a conjugate of `M(S)`.
pub fn hyperbolic() -> impl Strategy<Value = (Vec<u64>, MatrixPSL2Z)> {
    (even_sequence(3, 5), group_element()).prop_map(|(seq, g)| {
        let m = psl(matrix_of_sequence(&seq).unwrap());
        let conj = &(&g * &m) * &g.inverse();
        (seq, conj)
    })
}

pub fn vertex(max_den: i64) -> impl Strategy<Value = ExtRational> {
    prop_oneof![
        1 => Just(ExtRational::infinity()),
        20 => (-3 * max_den..=3 * max_den, 1..=max_den).prop_map(|(p, q)| ExtRational::new(p, q).unwrap()),
    ]
}

/// The ladder from {0, ∞} to the edge `{p/q, r/s}` read off the columns of `M(S)`.
pub fn ladder_of(seq: &[u64]) -> Ladder {
    let s = matrix_of_sequence(seq).unwrap();
    let end = FareyEdge::new(
        ExtRational::new(s.a.clone(), s.c.clone()).unwrap(),
        ExtRational::new(s.b.clone(), s.d.clone()).unwrap(),
    )
    .unwrap();
    farey_axis::generate_ladder(&FareyEdge::standard(), &end).unwrap()
}

pub fn normal_form(seq: &[u64]) -> Vec<u64> {
    farey_axis::apps::normal_form(seq)
}

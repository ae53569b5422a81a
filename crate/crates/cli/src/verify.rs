//! Randomized property suites behind the `verify` subcommand.

use std::io::{self, Write};

use farey_axis::oracle::{farey_distance_ancestor, farey_distance_bfs};
use farey_axis::{invariant_ladder_window, matrix_of_sequence, translation_length};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::random;

type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

pub struct Suite {
    pub name: &'static str,
    pub check: Check,
}

pub const SUITES: &[Suite] = &[
    Suite { name: "oracle", check: oracle },
    Suite { name: "power", check: power },
    Suite { name: "conjugation", check: conjugation },
    Suite { name: "types", check: types },
    Suite { name: "homomorphism", check: homomorphism },
    Suite { name: "trace", check: trace_bound },
];

pub fn suite(name: &str) -> Option<&'static Suite> {
    SUITES.iter().find(|s| s.name == name)
}

fn oracle(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (u, v) = (random::vertex(rng, 10_000), random::vertex(rng, 10_000));
    let (a, b) = (farey_distance_ancestor(&u, &v), farey_distance_bfs(&u, &v));
    if a != b {
        return Err(format!("d({u}, {v}): ancestor {a}, bfs {b}"));
    }
    let m = random::hyperbolic_matrix(rng, 500);
    let res = translation_length(&m).map_err(|e| format!("{m}: {e}"))?;
    let v = &res.axis[0];
    let d = farey_distance_ancestor(v, &m.apply(v)) as u64;
    if d != res.length {
        return Err(format!("{m}: axis pivot {v} moves {d}, length {}", res.length));
    }
    Ok(())
}

fn power(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = random::hyperbolic_matrix(rng, 60);
    let n = rng.gen_range(1..=5u32);
    let l = translation_length(&m).map_err(|e| format!("{m}: {e}"))?.length;
    let ln = translation_length(&m.pow(n)).map_err(|e| format!("{m}^{n}: {e}"))?.length;
    if ln != n as u64 * l {
        return Err(format!("{m}: length {l}, but power {n} has length {ln}"));
    }
    Ok(())
}

fn conjugation(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let m = random::hyperbolic_matrix(rng, 100);
    let g = random::group_element(rng);
    let conj = &(&g * &m) * &g.inverse();
    let l = translation_length(&m).map_err(|e| format!("{m}: {e}"))?.length;
    for (label, x) in [("conjugate", conj), ("inverse", m.inverse())] {
        let lx = translation_length(&x).map_err(|e| format!("{x}: {e}"))?.length;
        if lx != l {
            return Err(format!("{m} has length {l}, its {label} {x} has {lx}"));
        }
    }
    Ok(())
}

fn types(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (seq, m) = random::conjugated_sequence_matrix(rng);
    let w = invariant_ladder_window(&m).map_err(|e| format!("{m}: {e}"))?;
    let (got, want) = (farey_axis::apps::normal_form(&w.types), farey_axis::apps::normal_form(&seq));
    if got != want {
        return Err(format!("{m} conjugate to M{seq:?} has window type {:?}", w.types));
    }
    Ok(())
}

fn homomorphism(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (s, t) = (random::sequence(rng, 8, 9), random::sequence(rng, 8, 9));
    let joined: Vec<u64> = s.iter().chain(&t).copied().collect();
    let ms = matrix_of_sequence(&s).map_err(|e| e.to_string())?;
    let mt = matrix_of_sequence(&t).map_err(|e| e.to_string())?;
    if matrix_of_sequence(&joined).map_err(|e| e.to_string())? != &ms * &mt {
        return Err(format!("M{s:?} M{t:?} differs from M{joined:?}"));
    }
    let bumped: Vec<u64> = s.iter().map(|&a| a + rng.gen_range(0..3)).collect();
    if !matrix_of_sequence(&bumped).map_err(|e| e.to_string())?.dominates(&ms) {
        return Err(format!("M{bumped:?} does not dominate M{s:?}"));
    }
    Ok(())
}

fn trace_bound(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let seq = random::even_sequence(rng, 5, 6);
    let m = matrix_of_sequence(&seq).map_err(|e| e.to_string())?;
    let l = farey_axis::cyclic_translation_length(&seq).map_err(|e| e.to_string())?;
    let twos = matrix_of_sequence(&vec![2; l as usize]).map_err(|e| e.to_string())?;
    if m.trace() < twos.trace() {
        return Err(format!("M{seq:?} has trace {} below {} for length {l}", m.trace(), twos.trace()));
    }
    if m.trace() <= BigInt::from(2) {
        return Err(format!("M{seq:?} is not hyperbolic"));
    }
    Ok(())
}

/// Runs the selected suites, `cases` draws each, and reports one line per
/// suite. Returns whether everything passed.
pub fn run<W: Write + ?Sized>(out: &mut W, seed: u64, cases: u64, suites: &[&Suite]) -> io::Result<bool> {
    let mut all_ok = true;
    for s in suites {
        let stream = SUITES.iter().position(|x| x.name == s.name).unwrap_or(SUITES.len());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream as u64 + 1);
        let mut passed = 0;
        let mut failure = None;
        for case in 0..cases {
            match (s.check)(&mut rng) {
                Ok(()) => passed += 1,
                Err(msg) => {
                    failure.get_or_insert((case, msg));
                }
            }
        }
        writeln!(out, "{:<13} {passed}/{cases} passed", s.name)?;
        if let Some((case, msg)) = failure {
            all_ok = false;
            writeln!(out, "  first failure (case {case}): {msg}")?;
        }
    }
    Ok(all_ok)
}

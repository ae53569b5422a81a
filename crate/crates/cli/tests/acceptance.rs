//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so the report is always printed.

use std::panic::{self, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use farey_axis::apps::{census_of, normal_form};
use farey_axis::oracle::{farey_distance_ancestor, farey_distance_bfs, stable_length_probe};
use farey_axis::{
    cf_of_surd, class_count, efficient_geodesic_finite, enumerate_classes, generate_ladder,
    matrix_of_sequence, minimal_word_experiment, translation_length, ExtRational, FareyEdge, QuadraticSurd,
};
use farey_axis_cli::random;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rng(criterion: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    rng.set_stream(criterion);
    rng
}

fn run_length(matrix: &str) -> Result<(Value, Duration), String> {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_farey-axis"))
        .args(["length", "--matrix", matrix])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure!(out.status.success(), "exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr));
    let json = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    Ok((json, elapsed))
}

fn u64_list(v: &Value) -> Vec<u64> {
    v.as_array().map(|a| a.iter().filter_map(Value::as_u64).collect()).unwrap_or_default()
}

fn strings(v: &Value) -> Vec<String> {
    v.as_array().map(|a| a.iter().filter_map(|x| x.as_str().map(String::from)).collect()).unwrap_or_default()
}

fn standard_end_to_end() -> Outcome {
    let (json, elapsed) = run_length("277,60,337,73")?;
    ensure!(json["standard"] == true, "standard = {}", json["standard"]);
    let types = u64_list(&json["calibrated_types"]);
    ensure!(normal_form(&types) == normal_form(&[4, 1, 1, 1, 1, 1, 1, 5]), "types {types:?}");
    ensure!(json["length"] == 5, "length {}", json["length"]);
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("types {types:?}, length 5, {elapsed:.0?}"))
}

fn nonstandard_end_to_end() -> Outcome {
    let (json, elapsed) = run_length("65,-56,101,-87")?;
    ensure!(strings(&json["rung"]) == ["3/4", "1/1"], "rung {}", json["rung"]);
    ensure!(
        strings(&json["ancestor_path"]) == ["76/101", "3/4", "1/1", "1/0"],
        "path {}",
        json["ancestor_path"]
    );
    let types = u64_list(&json["calibrated_types"]);
    ensure!(normal_form(&types) == normal_form(&[5, 4]), "types {types:?}");
    ensure!(json["length"] == 2, "length {}", json["length"]);
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("rung (3/4, 1/1), types {types:?}, length 2, {elapsed:.0?}"))
}

fn surd_anchor() -> Outcome {
    let cf = cf_of_surd(&QuadraticSurd::new(5, 17, 6).map_err(|e| e.to_string())?);
    let pre: Vec<BigInt> = [1, 1].map(BigInt::from).to_vec();
    let period: Vec<BigInt> = [1, 11, 1, 2, 5, 1, 5, 2].map(BigInt::from).to_vec();
    ensure!(cf.preperiod == pre && cf.period == period, "got {cf}");
    Ok(cf.to_string())
}

fn oracle_equivalence() -> Outcome {
    let mut rng = rng(4);
    let start = Instant::now();
    for case in 0..500 {
        let m = random::hyperbolic_matrix(&mut rng, 500);
        let res = translation_length(&m).map_err(|e| format!("{m}: {e}"))?;
        let v = &res.axis[0];
        let d = farey_distance_ancestor(v, &m.apply(v)) as u64;
        ensure!(d == res.length, "case {case} {m}: d(v, Mv) = {d}, length {}", res.length);
        let probe = stable_length_probe(&m, v, 10).map_err(|e| e.to_string())?;
        for (j, d) in probe.into_iter().enumerate() {
            ensure!(d as u64 == (j as u64 + 1) * res.length, "case {case} {m}: j = {}, d = {d}", j + 1);
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("500 matrices, j <= 10, {elapsed:.1?}"))
}

fn finite_geodesy() -> Outcome {
    let mut rng = rng(5);
    let mut checked = 0;
    while checked < 500 {
        let seq = random::sequence(&mut rng, 12, 6);
        if seq == [1] {
            continue;
        }
        let s = matrix_of_sequence(&seq).map_err(|e| e.to_string())?;
        let end = FareyEdge::new(
            ExtRational::new(s.a.clone(), s.c.clone()).map_err(|e| e.to_string())?,
            ExtRational::new(s.b.clone(), s.d.clone()).map_err(|e| e.to_string())?,
        )
        .map_err(|e| e.to_string())?;
        let ladder = generate_ladder(&FareyEdge::standard(), &end).map_err(|e| e.to_string())?;
        let (from, to) = (rng.gen_range(0..2usize), rng.gen_range(0..2usize));
        let path = efficient_geodesic_finite(&ladder, from, to);
        let pos = path.positions();
        let (a, b) = (&ladder.pivots[pos[0]], &ladder.pivots[*pos.last().unwrap()]);
        let bfs = farey_distance_bfs(a, b);
        ensure!(path.len() == bfs, "{seq:?} sides ({from}, {to}): path {path} vs bfs {bfs}");
        checked += 1;
    }
    Ok("500 ladders".into())
}

fn ratio_bound() -> Outcome {
    let start = Instant::now();
    let classes = enumerate_classes(200).map_err(|e| e.to_string())?;
    let bound = (1.0 + 2f64.sqrt()).ln();
    let best = classes.iter().map(|c| c.ratio).fold(f64::INFINITY, f64::min);
    ensure!((best - bound).abs() < 1e-12, "minimum {best}");
    let attained: Vec<Vec<u64>> =
        classes.iter().filter(|c| (c.ratio - bound).abs() < 1e-12).map(|c| c.normal_form.clone()).collect();
    ensure!(attained == [vec![2; 2], vec![2; 4], vec![2; 6]], "attained by {attained:?}");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    Ok(format!("min {best:.15} over {} classes, attained by (2)^2, (2)^4, (2)^6", classes.len()))
}

fn trace_bound() -> Outcome {
    let classes = enumerate_classes(200).map_err(|e| e.to_string())?;
    for c in &classes {
        let twos = matrix_of_sequence(&vec![2; c.length as usize]).map_err(|e| e.to_string())?;
        ensure!(
            BigInt::from(c.trace) >= twos.trace(),
            "{:?} trace {} length {}",
            c.normal_form,
            c.trace,
            c.length
        );
    }
    Ok(format!("{} classes", classes.len()))
}

fn minimal_words() -> Outcome {
    for m in 1..=5 {
        for n in 1..=5 {
            let table = minimal_word_experiment(m, n).map_err(|e| e.to_string())?;
            ensure!(
                table.block_word_is_minimal(),
                "m = {m}, n = {n}: block length {:?}, minimum {}",
                table.block_length(),
                table.minimum()
            );
        }
    }
    Ok("1 <= m, n <= 5".into())
}

fn sequence_algebra() -> Outcome {
    let mut rng = rng(9);
    for case in 0..1000 {
        let (s, t) = (random::sequence(&mut rng, 8, 9), random::sequence(&mut rng, 8, 9));
        let joined: Vec<u64> = s.iter().chain(&t).copied().collect();
        let ms = matrix_of_sequence(&s).map_err(|e| e.to_string())?;
        let mt = matrix_of_sequence(&t).map_err(|e| e.to_string())?;
        ensure!(
            matrix_of_sequence(&joined).map_err(|e| e.to_string())? == &ms * &mt,
            "case {case}: {s:?} {t:?}"
        );
        let bumped: Vec<u64> = s.iter().map(|&a| a + rng.gen_range(0..4)).collect();
        let mb = matrix_of_sequence(&bumped).map_err(|e| e.to_string())?;
        ensure!(mb.dominates(&ms), "case {case}: {bumped:?} vs {s:?}");
    }
    Ok("1000 homomorphism and 1000 monotonicity checks".into())
}

fn invariance() -> Outcome {
    let mut rng = rng(10);
    for case in 0..500 {
        let m = random::hyperbolic_matrix(&mut rng, 100);
        let g = random::group_element(&mut rng);
        let l = translation_length(&m).map_err(|e| e.to_string())?.length;
        let conj = &(&g * &m) * &g.inverse();
        let lc = translation_length(&conj).map_err(|e| e.to_string())?.length;
        ensure!(lc == l, "case {case}: {m} has {l}, conjugate {conj} has {lc}");
        let li = translation_length(&m.inverse()).map_err(|e| e.to_string())?.length;
        ensure!(li == l, "case {case}: {m} has {l}, inverse has {li}");
    }
    for case in 0..200 {
        let m = random::hyperbolic_matrix(&mut rng, 60);
        let n = rng.gen_range(1..=5u32);
        let l = translation_length(&m).map_err(|e| e.to_string())?.length;
        let ln = translation_length(&m.pow(n)).map_err(|e| e.to_string())?.length;
        ensure!(ln == n as u64 * l, "case {case}: {m}^{n} has {ln}, expected {}", n as u64 * l);
    }
    Ok("500 conjugation/inverse, 200 power cases".into())
}

fn census_identities() -> Outcome {
    let classes = enumerate_classes(200).map_err(|e| e.to_string())?;
    let mut trend = Vec::new();
    for r in [50u32, 100, 200] {
        let r = BigRational::from_integer(r.into());
        let c2 = census_of(&classes, &r, 2).map_err(|e| e.to_string())?;
        let c1 = census_of(&classes, &r, 1).map_err(|e| e.to_string())?;
        ensure!(c2.by_length.values().sum::<u64>() == c2.denominator, "R = {r}: sum of N_i != N");
        ensure!(c1.numerator == c1.denominator && c1.ratio == 1.0, "R = {r}: k = 1 ratio {}", c1.ratio);
        trend.push(format!("R={r}: {}/{}", c2.numerator, c2.denominator));
    }
    Ok(format!("k = 2 trend {}", trend.join(", ")))
}

fn class_counts() -> Outcome {
    let want = [(3, 1), (4, 1), (6, 2), (7, 2)];
    for (t, n) in want {
        let got = class_count(t).map_err(|e| e.to_string())?;
        ensure!(got == n, "classCount({t}) = {got}, expected {n}");
    }
    Ok("H(3)=1, H(4)=1, H(6)=2, H(7)=2".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("standard matrix end-to-end", standard_end_to_end),
        ("non-standard matrix end-to-end", nonstandard_end_to_end),
        ("continued fraction anchor", surd_anchor),
        ("oracle equivalence", oracle_equivalence),
        ("finite geodesic geodesy", finite_geodesy),
        ("ratio lower bound", ratio_bound),
        ("trace bound", trace_bound),
        ("minimal word", minimal_words),
        ("sequence matrix algebra", sequence_algebra),
        ("invariance suite", invariance),
        ("census identities", census_identities),
        ("small-trace class counts", class_counts),
    ];
    // keep panic messages out of the report; failures are reported below
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

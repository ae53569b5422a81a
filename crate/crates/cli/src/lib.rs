//! Command-line surface of `farey-axis`.
//!
//! Exit codes: 0 ok, 1 property failure, 2 not hyperbolic, 3 bad determinant,
//! 4 bad flags, 5 I/O error.

use std::ffi::OsString;
use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, Subcommand};
use farey_axis::apps::{census_of, dilatation_decimal, max_trace_below, ExactLog};
use farey_axis::ladder::raw_and_calibrated_window;
use farey_axis::{
    cf_of_rational, cf_of_surd, enumerate_classes, find_rung, is_standard, minimal_word_experiment,
    translation_length, word_to_matrix, CFExpansion, Error, ExtRational, MatrixPSL2Z, QuadraticSurd,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

pub mod random;
pub mod verify;

pub const MAX_SPECTRUM_TRACE: u64 = 2000;

#[derive(Parser, Debug)]
#[command(
    name = "farey-axis",
    version,
    about = "Exact Farey graph translation lengths of hyperbolic PSL(2,Z) elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Rung, ladder window, axis and translation length as JSON.
    Length {
        /// Matrix entries `a,b,c,d`.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Axis and move sequence as JSON, optionally drawn to an SVG file.
    Axis {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Number of window translates to draw (1 to 3).
        #[arg(long, default_value_t = 3)]
        periods: usize,
    },
    /// Class table by trace as CSV, with optional census rows.
    Spectrum {
        #[arg(long)]
        max_trace: u64,
        #[arg(long, default_value_t = 2)]
        k: u64,
        /// CSV destination; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Comma-separated dilatation bounds such as `6.5,50`.
        #[arg(long, value_delimiter = ',')]
        census_r: Vec<String>,
    },
    /// Dilatation, translation length and their log ratio.
    Ratio {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Translation length of a T/U word, or the minimal word table for m T's
    /// and n U's.
    #[command(group(ArgGroup::new("input").required(true).args(["word", "m"])))]
    Word {
        #[arg(long)]
        word: Option<String>,
        #[arg(long, requires = "n")]
        m: Option<u64>,
        #[arg(long, requires = "m")]
        n: Option<u64>,
    },
    /// Continued fraction of a rational, a surd (P+√D)/Q, or the attracting
    /// fixed point of a matrix.
    #[command(group(ArgGroup::new("input").required(true).args(["rational", "surd", "matrix"])))]
    Cf {
        #[arg(long, allow_hyphen_values = true)]
        rational: Option<String>,
        /// `P,D,Q`.
        #[arg(long, allow_hyphen_values = true)]
        surd: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
    },
    /// Seeded randomized property suites.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        cases: u64,
        /// Comma-separated suites to run, chosen from oracle, power,
        /// conjugation, types, homomorphism and trace. All run when absent.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

/// A failure carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn flags(message: impl Into<String>) -> Self {
        Failure { code: 4, message: message.into() }
    }

    fn property(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotHyperbolic => 2,
            Error::BadDeterminant(_) => 3,
            Error::Internal(_) => 1,
            _ => 4,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 5, message: e.to_string() }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Errors go to standard error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 4 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.command, out).and_then(|()| out.flush().map_err(Failure::from)) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("error: {f}");
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Length { matrix } => length(&parse_matrix(&matrix)?, out),
        Command::Axis { matrix, svg, periods } => axis(&parse_matrix(&matrix)?, svg, periods, out),
        Command::Spectrum { max_trace, k, out: path, census_r } => {
            spectrum(max_trace, k, path, &census_r, out)
        }
        Command::Ratio { matrix } => ratio(&parse_matrix(&matrix)?, out),
        Command::Word { word, m, n } => match (word, m, n) {
            (Some(w), _, _) => word_length(&w, out),
            (None, Some(m), Some(n)) => word_table(m, n, out),
            _ => Err(Failure::flags("give --word or both --m and --n")),
        },
        Command::Cf { rational, surd, matrix } => cf(rational, surd, matrix, out),
        Command::Verify { seed, cases, only } => run_verify(seed, cases, only, out),
    }
}

fn parse_matrix(s: &str) -> Result<MatrixPSL2Z, Failure> {
    Ok(s.parse::<MatrixPSL2Z>()?)
}

/// A JSON number when it fits, a decimal string otherwise.
fn big_json(n: &BigInt) -> Value {
    n.to_i64().map(Value::from).unwrap_or_else(|| Value::from(n.to_string()))
}

fn print_json(value: &Value, out: &mut dyn Write) -> Outcome {
    serde_json::to_writer_pretty(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn length(m: &MatrixPSL2Z, out: &mut dyn Write) -> Outcome {
    m.ensure_hyperbolic()?;
    let standard = is_standard(m)?;
    let rung = find_rung(m)?;
    let (raw, calibrated) = raw_and_calibrated_window(m)?;
    let res = translation_length(m)?;
    let midpoint = (!standard).then(|| m.fixed_point_quadratic().map(|q| q.midpoint())).transpose()?;
    let value = json!({
        "matrix": m,
        "trace": big_json(&m.trace()),
        "standard": standard,
        "midpoint": midpoint.as_ref().map(ToString::to_string),
        "ancestor_path": midpoint.as_ref().map(|x| x.ancestor_path().iter().map(ToString::to_string).collect::<Vec<_>>()),
        "rung": rung,
        "window_types": raw.types,
        "calibrated_types": calibrated.types,
        "length": res.length,
        "axis": res.axis,
        "moves": res.moves,
    });
    print_json(&value, out)
}

fn axis(m: &MatrixPSL2Z, svg: Option<PathBuf>, periods: usize, out: &mut dyn Write) -> Outcome {
    if !(1..=3).contains(&periods) {
        return Err(Failure::flags("--periods must be between 1 and 3"));
    }
    let res = translation_length(m)?;
    if let Some(path) = svg {
        let drawing = farey_axis::svg::render_axis_svg(m, periods)?;
        fs::write(&path, drawing)
            .map_err(|e| Failure::from(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))?;
    }
    print_json(&serde_json::to_value(&res).map_err(io::Error::from)?, out)
}

/// Accepts `a/b`, integers and decimals such as `6.5`.
pub fn parse_real(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let (p, q): (BigInt, BigInt) = (p.parse().ok()?, q.parse().ok()?);
        return (!q.is_zero()).then(|| BigRational::new(p, q));
    }
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    if !frac.chars().all(|c| c.is_ascii_digit()) || int.is_empty() && frac.is_empty() {
        return None;
    }
    let negative = int.starts_with('-');
    let int_digits = int.trim_start_matches(['-', '+']);
    if !int_digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt =
        format!("{}{frac}", if int_digits.is_empty() { "0" } else { int_digits }).parse().ok()?;
    let value = BigRational::new(digits, BigInt::from(10u32).pow(frac.len() as u32));
    Some(if negative { -value } else { value })
}

fn spectrum(
    max_trace: u64,
    k: u64,
    path: Option<PathBuf>,
    census_r: &[String],
    out: &mut dyn Write,
) -> Outcome {
    if !(3..=MAX_SPECTRUM_TRACE).contains(&max_trace) {
        return Err(Failure::flags(format!("--max-trace must be between 3 and {MAX_SPECTRUM_TRACE}")));
    }
    if k == 0 {
        return Err(Failure::flags("--k must be positive"));
    }
    let mut bounds = Vec::new();
    for r in census_r {
        let value = parse_real(r)
            .filter(|v| v.is_positive())
            .ok_or_else(|| Failure::flags(format!("bad --census-r value {r:?}")))?;
        let needed = max_trace_below(&value).unwrap_or(0);
        if needed < 3 {
            return Err(Failure::flags(format!("no class has dilatation below {r}")));
        }
        if needed > MAX_SPECTRUM_TRACE {
            return Err(Failure::flags(format!(
                "--census-r {r} needs traces up to {needed}, above {MAX_SPECTRUM_TRACE}"
            )));
        }
        bounds.push((r.as_str(), value, needed));
    }
    let enumerate_to = bounds.iter().map(|b| b.2).chain([max_trace]).max().unwrap_or(max_trace);
    let classes = enumerate_classes(enumerate_to)?;

    let mut csv = String::from("trace,normal_form,translation_length,dilatation_decimal,ratio\n");
    let mut current: Option<(u64, String, ExactLog)> = None;
    for c in classes.iter().filter(|c| c.trace <= max_trace) {
        if current.as_ref().map(|x| x.0) != Some(c.trace) {
            let t = BigInt::from(c.trace);
            current = Some((c.trace, dilatation_decimal(&t, 20), ExactLog::of_trace(&t, 20)));
        }
        let (_, dilatation, log) = current.as_ref().expect("set above");
        let form: Vec<String> = c.normal_form.iter().map(u64::to_string).collect();
        csv.push_str(&format!(
            "{},{},{},{dilatation},{}\n",
            c.trace,
            form.join("-"),
            c.length,
            log.per_length(c.length)
        ));
    }
    match &path {
        Some(p) => fs::write(p, &csv)
            .map_err(|e| Failure::from(io::Error::new(e.kind(), format!("{}: {e}", p.display()))))?,
        None => out.write_all(csv.as_bytes())?,
    }
    if !bounds.is_empty() {
        if path.is_none() {
            writeln!(out)?;
        }
        writeln!(out, "r,k,numerator,denominator,ratio")?;
        for (label, r, _) in &bounds {
            let c = census_of(&classes, r, k)?;
            writeln!(out, "{label},{k},{},{},{}", c.numerator, c.denominator, c.ratio)?;
        }
    }
    Ok(())
}

fn ratio(m: &MatrixPSL2Z, out: &mut dyn Write) -> Outcome {
    let res = translation_length(m)?;
    let value = json!({
        "matrix": m,
        "trace": big_json(&m.trace()),
        "length": res.length,
        "dilatation": farey_axis::apps::dilatation_decimal(&m.trace(), 20),
        "log_dilatation": farey_axis::apps::log_dilatation_decimal(&m.trace(), 20),
        "ratio": farey_axis::apps::ratio_decimal(&m.trace(), res.length, 20),
    });
    print_json(&value, out)
}

fn word_length(word: &str, out: &mut dyn Write) -> Outcome {
    let m = word_to_matrix(word)?;
    let blocks: Vec<u64> = farey_axis::contfrac::word_blocks(word)?.into_iter().map(|b| b.1).collect();
    let res = translation_length(&m)?;
    print_json(&json!({ "word": word, "matrix": m, "types": blocks, "length": res.length }), out)
}

fn word_table(m: u64, n: u64, out: &mut dyn Write) -> Outcome {
    let table = minimal_word_experiment(m, n)?;
    let rows: Vec<Value> =
        table.rows.iter().map(|r| json!({ "word": r.word, "types": r.types, "length": r.length })).collect();
    let value = json!({
        "m": m,
        "n": n,
        "block_word": table.block_word(),
        "block_length": table.block_length(),
        "minimum": table.minimum(),
        "rows": rows,
    });
    print_json(&value, out)?;
    if !table.block_word_is_minimal() {
        return Err(Failure::property(format!(
            "{} is not a shortest word with minimum at most 2",
            table.block_word()
        )));
    }
    Ok(())
}

fn cf_json(value: String, cf: &CFExpansion) -> Value {
    let list = |xs: &[BigInt]| xs.iter().map(big_json).collect::<Vec<_>>();
    json!({
        "value": value,
        "preperiod": list(&cf.preperiod),
        "period": list(&cf.period),
        "expansion": cf.to_string(),
    })
}

fn parse_surd(s: &str) -> Result<QuadraticSurd, Failure> {
    let parts: Vec<BigInt> = s
        .split(',')
        .map(|x| x.trim().parse::<BigInt>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::flags(format!("bad surd {s:?}, expected P,D,Q")))?;
    match parts.as_slice() {
        [p, d, q] => Ok(QuadraticSurd::new(p.clone(), d.clone(), q.clone())?),
        _ => Err(Failure::flags(format!("bad surd {s:?}, expected P,D,Q"))),
    }
}

fn cf(
    rational: Option<String>,
    surd: Option<String>,
    matrix: Option<String>,
    out: &mut dyn Write,
) -> Outcome {
    let value = if let Some(r) = rational {
        let v: ExtRational = r.parse()?;
        cf_json(v.to_string(), &cf_of_rational(&v)?)
    } else if let Some(s) = surd {
        let x = parse_surd(&s)?;
        let (p, d, q) = x.parts();
        cf_json(format!("({p}+sqrt({d}))/{q}"), &cf_of_surd(&x))
    } else {
        let m = parse_matrix(matrix.as_deref().unwrap_or_default())?;
        let roots = m.fixed_point_quadratic()?.roots();
        let (p, d, q) = if m.signed_trace().is_positive() { &roots[0] } else { &roots[1] };
        let x = QuadraticSurd::new(p.clone(), d.clone(), q.clone())?;
        let (p, d, q) = x.parts();
        cf_json(format!("({p}+sqrt({d}))/{q}"), &cf_of_surd(&x))
    };
    print_json(&value, out)
}

fn run_verify(seed: u64, cases: u64, only: Vec<String>, out: &mut dyn Write) -> Outcome {
    if cases == 0 {
        return Err(Failure::flags("--cases must be positive"));
    }
    let suites: Vec<&verify::Suite> = if only.is_empty() {
        verify::SUITES.iter().collect()
    } else {
        only.iter()
            .map(|name| verify::suite(name).ok_or_else(|| Failure::flags(format!("unknown suite {name:?}"))))
            .collect::<Result<_, _>>()?
    };
    if verify::run(out, seed, cases, &suites)? {
        Ok(())
    } else {
        Err(Failure::property("property failure"))
    }
}

//! Argument parsing against the fixed grammar. The parser is
//! hand-rolled so the grammar here is the complete contract; every
//! rejection names the offending token.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use faulhaber::methods::Method;
use faulhaber::rational::{fraction_str, parse_rational, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage_err(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// Method selector for `powersum`: one named route, or all four
/// cross-checked against each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    One(Method),
    All,
}

impl MethodChoice {
    pub fn name(self) -> &'static str {
        match self {
            MethodChoice::One(m) => m.name(),
            MethodChoice::All => "all",
        }
    }
}

impl FromStr for MethodChoice {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(MethodChoice::All);
        }
        s.parse::<Method>().map(MethodChoice::One).map_err(|_| {
            usage_err(format!(
                "unknown method '{s}' (expected lhopital|matrix|stirling|euler-maclaurin|all)"
            ))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyFormat {
    Plain,
    Latex,
    Json,
    Coeffs,
}

impl PolyFormat {
    pub fn name(self) -> &'static str {
        match self {
            PolyFormat::Plain => "plain",
            PolyFormat::Latex => "latex",
            PolyFormat::Json => "json",
            PolyFormat::Coeffs => "coeffs",
        }
    }
}

impl FromStr for PolyFormat {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(PolyFormat::Plain),
            "latex" => Ok(PolyFormat::Latex),
            "json" => Ok(PolyFormat::Json),
            "coeffs" => Ok(PolyFormat::Coeffs),
            _ => Err(usage_err(format!(
                "unknown format '{s}' (expected plain|latex|json|coeffs)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FibMethod {
    Doubling,
    Binet,
}

impl FibMethod {
    pub fn name(self) -> &'static str {
        match self {
            FibMethod::Doubling => "doubling",
            FibMethod::Binet => "binet",
        }
    }
}

impl FromStr for FibMethod {
    type Err = UsageError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "doubling" => Ok(FibMethod::Doubling),
            "binet" => Ok(FibMethod::Binet),
            _ => Err(usage_err(format!(
                "unknown method '{s}' (expected doubling|binet)"
            ))),
        }
    }
}

/// A fully validated invocation. Defaults are already applied, so two
/// commands compare equal exactly when they mean the same run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    PowerSum {
        d: u32,
        method: MethodChoice,
        format: PolyFormat,
        eval: Option<Integer>,
    },
    FallingSum {
        k: u32,
        format: PolyFormat,
        eval: Option<Integer>,
    },
    Fib {
        n: u64,
        method: FibMethod,
    },
    Geom {
        a0: Rational,
        r: Rational,
        n: u32,
    },
    Verify {
        dmax: u32,
        nmax: u32,
        json: bool,
    },
    Bench {
        dmax: u32,
        json: bool,
    },
}

pub const VERIFY_DEFAULT_DMAX: u32 = 20;
pub const VERIFY_DEFAULT_NMAX: u32 = 50;
pub const BENCH_DEFAULT_DMAX: u32 = 10;

/// Parses `argv` (without the program name) into a [`Command`].
pub fn parse_args<S: AsRef<str>>(argv: &[S]) -> Result<Command, UsageError> {
    let toks: Vec<&str> = argv.iter().map(AsRef::as_ref).collect();
    let (&sub, rest) = toks
        .split_first()
        .ok_or_else(|| usage_err("missing subcommand"))?;
    match sub {
        "powersum" => parse_powersum(rest),
        "fallingsum" => parse_fallingsum(rest),
        "fib" => parse_fib(rest),
        "geom" => parse_geom(rest),
        "verify" => parse_verify(rest),
        "bench" => parse_bench(rest),
        other => Err(usage_err(format!("unknown subcommand '{other}'"))),
    }
}

/// Renders a command back to the argv that parses to it, with every
/// default spelled out.
pub fn to_argv(cmd: &Command) -> Vec<String> {
    let mut v: Vec<String> = Vec::new();
    match cmd {
        Command::PowerSum {
            d,
            method,
            format,
            eval,
        } => {
            v.extend(["powersum".into(), d.to_string()]);
            v.extend(["--method".into(), method.name().into()]);
            v.extend(["--format".into(), format.name().into()]);
            if let Some(n) = eval {
                v.extend(["--eval".into(), n.to_string()]);
            }
        }
        Command::FallingSum { k, format, eval } => {
            v.extend(["fallingsum".into(), k.to_string()]);
            v.extend(["--format".into(), format.name().into()]);
            if let Some(n) = eval {
                v.extend(["--eval".into(), n.to_string()]);
            }
        }
        Command::Fib { n, method } => {
            v.extend(["fib".into(), n.to_string()]);
            v.extend(["--method".into(), method.name().into()]);
        }
        Command::Geom { a0, r, n } => {
            v.extend(["geom".into(), fraction_str(a0), fraction_str(r), n.to_string()]);
        }
        Command::Verify { dmax, nmax, json } => {
            v.extend(["verify".into(), "--dmax".into(), dmax.to_string()]);
            v.extend(["--nmax".into(), nmax.to_string()]);
            if *json {
                v.push("--json".into());
            }
        }
        Command::Bench { dmax, json } => {
            v.extend(["bench".into(), "--dmax".into(), dmax.to_string()]);
            if *json {
                v.push("--json".into());
            }
        }
    }
    v
}

fn parse_powersum(rest: &[&str]) -> Result<Command, UsageError> {
    let (&first, flags) = rest
        .split_first()
        .ok_or_else(|| usage_err("powersum needs a degree argument"))?;
    let d = parse_count(first, "degree")?;
    let mut method = MethodChoice::One(Method::Lhopital);
    let mut format = PolyFormat::Plain;
    let mut eval = None;
    let mut it = flags.iter();
    while let Some(&flag) = it.next() {
        match flag {
            "--method" => method = flag_value(&mut it, flag)?.parse()?,
            "--format" => format = flag_value(&mut it, flag)?.parse()?,
            "--eval" => eval = Some(parse_point(flag_value(&mut it, flag)?)?),
            other => return Err(usage_err(format!("unexpected argument '{other}'"))),
        }
    }
    Ok(Command::PowerSum {
        d,
        method,
        format,
        eval,
    })
}

fn parse_fallingsum(rest: &[&str]) -> Result<Command, UsageError> {
    let (&first, flags) = rest
        .split_first()
        .ok_or_else(|| usage_err("fallingsum needs a falling-power argument"))?;
    let k = parse_count(first, "falling power")?;
    let mut format = PolyFormat::Plain;
    let mut eval = None;
    let mut it = flags.iter();
    while let Some(&flag) = it.next() {
        match flag {
            "--format" => format = flag_value(&mut it, flag)?.parse()?,
            "--eval" => eval = Some(parse_point(flag_value(&mut it, flag)?)?),
            other => return Err(usage_err(format!("unexpected argument '{other}'"))),
        }
    }
    Ok(Command::FallingSum { k, format, eval })
}

fn parse_fib(rest: &[&str]) -> Result<Command, UsageError> {
    let (&first, flags) = rest
        .split_first()
        .ok_or_else(|| usage_err("fib needs an index argument"))?;
    let n = parse_index(first, "index")?;
    let mut method = FibMethod::Doubling;
    let mut it = flags.iter();
    while let Some(&flag) = it.next() {
        match flag {
            "--method" => method = flag_value(&mut it, flag)?.parse()?,
            other => return Err(usage_err(format!("unexpected argument '{other}'"))),
        }
    }
    Ok(Command::Fib { n, method })
}

fn parse_geom(rest: &[&str]) -> Result<Command, UsageError> {
    if rest.len() != 3 {
        return Err(usage_err(format!(
            "geom takes exactly three arguments <a0> <r> <n>, got {}",
            rest.len()
        )));
    }
    Ok(Command::Geom {
        a0: parse_ratio(rest[0], "initial term")?,
        r: parse_ratio(rest[1], "ratio")?,
        n: parse_count(rest[2], "exponent bound")?,
    })
}

fn parse_verify(rest: &[&str]) -> Result<Command, UsageError> {
    let mut dmax = VERIFY_DEFAULT_DMAX;
    let mut nmax = VERIFY_DEFAULT_NMAX;
    let mut json = false;
    let mut it = rest.iter();
    while let Some(&flag) = it.next() {
        match flag {
            "--dmax" => dmax = parse_count(flag_value(&mut it, flag)?, "dmax")?,
            "--nmax" => nmax = parse_count(flag_value(&mut it, flag)?, "nmax")?,
            "--json" => json = true,
            other => return Err(usage_err(format!("unexpected argument '{other}'"))),
        }
    }
    Ok(Command::Verify { dmax, nmax, json })
}

fn parse_bench(rest: &[&str]) -> Result<Command, UsageError> {
    let mut dmax = BENCH_DEFAULT_DMAX;
    let mut json = false;
    let mut it = rest.iter();
    while let Some(&flag) = it.next() {
        match flag {
            "--dmax" => dmax = parse_count(flag_value(&mut it, flag)?, "dmax")?,
            "--json" => json = true,
            other => return Err(usage_err(format!("unexpected argument '{other}'"))),
        }
    }
    Ok(Command::Bench { dmax, json })
}

fn flag_value<'a>(
    it: &mut std::slice::Iter<'a, &'a str>,
    flag: &str,
) -> Result<&'a str, UsageError> {
    it.next()
        .copied()
        .ok_or_else(|| usage_err(format!("missing value for {flag}")))
}

/// Non-negative integer that must also fit the practical compute range.
/// Parsed at arbitrary precision first so the negativity/size
/// diagnostics are exact rather than overflow artifacts.
fn parse_count(tok: &str, what: &str) -> Result<u32, UsageError> {
    let big = parse_big(tok, what)?;
    big.to_u32()
        .ok_or_else(|| usage_err(format!("{what} '{tok}' is too large")))
}

fn parse_index(tok: &str, what: &str) -> Result<u64, UsageError> {
    let big = parse_big(tok, what)?;
    big.to_u64()
        .ok_or_else(|| usage_err(format!("{what} '{tok}' is too large")))
}

/// Non-negative arbitrary-precision integer (evaluation points have no
/// size cap).
fn parse_point(tok: &str) -> Result<Integer, UsageError> {
    parse_big(tok, "evaluation point")
}

fn parse_big(tok: &str, what: &str) -> Result<BigInt, UsageError> {
    let big = BigInt::from_str(tok)
        .map_err(|_| usage_err(format!("{what} '{tok}' is not an integer")))?;
    if big.is_negative() {
        return Err(usage_err(format!("{what} '{tok}' must be non-negative")));
    }
    Ok(big)
}

fn parse_ratio(tok: &str, what: &str) -> Result<Rational, UsageError> {
    parse_rational(tok).map_err(|_| usage_err(format!("{what} '{tok}' is not a rational (use p or p/q)")))
}

/// The `--help` text; defaults are spelled out here and nowhere else.
pub fn usage() -> String {
    format!(
        "\
Usage: faulhaber <command> [options]

Commands:
  powersum <d>       exact polynomial p_d(n) = 0^d + 1^d + ... + n^d
      --method lhopital|matrix|stirling|euler-maclaurin|all   (default: lhopital)
      --format plain|latex|json|coeffs                        (default: plain)
      --eval <n>     print the exact value at n instead of the polynomial
  fallingsum <k>     exact polynomial for sum of (m+k)(m+k-1)...(m+1), m = 0..n
      --format, --eval as for powersum
  fib <n>            n-th Fibonacci number
      --method doubling|binet                                 (default: doubling)
  geom <a0> <r> <n>  exact value of a0 * (1 + r + r^2 + ... + r^n)
  verify             cross-check the four methods against each other,
                     the brute-force sums, and the expected shape
      --dmax <D>     largest exponent checked        (default: {VERIFY_DEFAULT_DMAX})
      --nmax <N>     largest evaluation point        (default: {VERIFY_DEFAULT_NMAX})
      --json         machine-readable report
  bench              wall-clock comparison of the four methods
      --dmax <D>     largest exponent timed          (default: {BENCH_DEFAULT_DMAX})
      --json         machine-readable records

Rationals print as p/q; JSON carries them as \"p/q\" strings, never floats.
Exit codes: 0 success, 1 usage error, 2 failed verification or internal error.
"
    )
}

use std::fmt::Display;

use faulhaber::methods::{self, Method};
use faulhaber::poly::Polynomial;
use faulhaber::rational::{Integer, Rational};
use faulhaber::sequences;

use faulhaber_cli::args::{self, Command, FibMethod, MethodChoice, PolyFormat};
use faulhaber_cli::{bench, format, verify};

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(&argv));
}

fn run(argv: &[String]) -> i32 {
    if matches!(
        argv.first().map(String::as_str),
        Some("--help" | "-h" | "help")
    ) {
        print!("{}", args::usage());
        return 0;
    }
    match args::parse_args(argv) {
        Ok(cmd) => execute(cmd),
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("run 'faulhaber --help' for usage");
            1
        }
    }
}

fn execute(cmd: Command) -> i32 {
    match cmd {
        Command::PowerSum {
            d,
            method,
            format,
            eval,
        } => power_sum_command(d, method, format, eval),
        Command::FallingSum { k, format, eval } => {
            emit_polynomial(&methods::falling_power_sum_poly(k), format, eval.as_ref());
            0
        }
        Command::Fib { n, method } => match method {
            FibMethod::Doubling => {
                println!("{}", sequences::fib_doubling(n));
                0
            }
            FibMethod::Binet => match sequences::fib_binet(n) {
                Ok(value) => {
                    println!("{value}");
                    0
                }
                Err(e) => internal_error(e),
            },
        },
        Command::Geom { a0, r, n } => {
            println!("{}", format::format_value(&sequences::geometric_sum(&a0, &r, n)));
            0
        }
        Command::Verify { dmax, nmax, json } => {
            let report = verify::run_verify(dmax, nmax);
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.render_text());
            }
            if report.passed() {
                0
            } else {
                eprintln!("error: verification failed");
                2
            }
        }
        Command::Bench { dmax, json } => {
            let records = bench::run_bench(dmax);
            if json {
                println!("{}", bench::render_json(&records));
            } else {
                print!("{}", bench::render_text(&records));
            }
            0
        }
    }
}

fn power_sum_command(
    d: u32,
    method: MethodChoice,
    format: PolyFormat,
    eval: Option<Integer>,
) -> i32 {
    match method {
        MethodChoice::One(m) => match methods::power_sum(d, m) {
            Ok(p) => {
                emit_polynomial(&p, format, eval.as_ref());
                0
            }
            Err(e) => internal_error(e),
        },
        MethodChoice::All => {
            let mut results: Vec<(Method, Polynomial)> = Vec::with_capacity(Method::ALL.len());
            for m in Method::ALL {
                match methods::power_sum(d, m) {
                    Ok(p) => results.push((m, p)),
                    Err(e) => return internal_error(format_args!("{}: {e}", m.name())),
                }
            }
            let reference = results[0].1.clone();
            if results.iter().any(|(_, p)| *p != reference) {
                return internal_error(format_args!("methods disagree at d={d}"));
            }
            emit_polynomial(&reference, format, eval.as_ref());
            for (m, _) in &results {
                println!("{}: agree", m.name());
            }
            0
        }
    }
}

/// Prints the polynomial in the chosen format — or, when an evaluation
/// point was given, just the exact value there.
fn emit_polynomial(p: &Polynomial, fmt: PolyFormat, eval: Option<&Integer>) {
    match eval {
        Some(n) => {
            let value = p.eval(&Rational::from_integer(n.clone()));
            println!("{}", format::format_value(&value));
        }
        None => println!("{}", format::format_polynomial(p, fmt)),
    }
}

fn internal_error(e: impl Display) -> i32 {
    eprintln!("error: {e}");
    2
}

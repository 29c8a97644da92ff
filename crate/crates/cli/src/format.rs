//! Polynomial renderers. Four surfaces: `plain` for terminals, `latex`
//! for papers, `json` and `coeffs` for machines. Rationals never leave
//! as floats — JSON carries strict `"p/q"` strings.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use faulhaber::poly::Polynomial;
use faulhaber::rational::{display_str, fraction_str, Rational};

use crate::args::PolyFormat;

pub fn format_polynomial(p: &Polynomial, fmt: PolyFormat) -> String {
    match fmt {
        PolyFormat::Plain => plain(p),
        PolyFormat::Latex => latex(p),
        PolyFormat::Json => polynomial_json(p).to_string(),
        PolyFormat::Coeffs => coeffs(p),
    }
}

/// Nonzero coefficients by descending degree, the print order of both
/// human-facing formats.
fn descending(p: &Polynomial) -> impl Iterator<Item = (usize, &Rational)> {
    p.coeffs()
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, c)| !c.is_zero())
}

/// Descending terms `c*n^k` joined by ` + `/` - `; unit coefficients
/// and `/1` denominators are elided. The zero polynomial is `"0"`.
fn plain(p: &Polynomial) -> String {
    let mut out = String::new();
    for (k, c) in descending(p) {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if k == 0 {
            out.push_str(&display_str(&mag));
        } else {
            if !mag.is_one() {
                out.push_str(&display_str(&mag));
                out.push('*');
            }
            out.push('n');
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `\frac{p}{q}n^{k}` terms; integer coefficients print bare, unit
/// coefficients are elided before a variable.
fn latex(p: &Polynomial) -> String {
    let mut out = String::new();
    for (k, c) in descending(p) {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mag = c.abs();
        if mag.is_integer() {
            if k == 0 || !mag.is_one() {
                out.push_str(&mag.numer().to_string());
            }
        } else {
            out.push_str(&format!("\\frac{{{}}}{{{}}}", mag.numer(), mag.denom()));
        }
        match k {
            0 => {}
            1 => out.push('n'),
            _ => out.push_str(&format!("n^{{{k}}}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `{"degree": D, "coefficients": ["p/q", ...]}` with coefficients
/// ascending from the constant term.
pub fn polynomial_json(p: &Polynomial) -> Value {
    let (degree, coefficients) = if p.is_zero() {
        (0, vec![fraction_str(&Rational::zero())])
    } else {
        (
            p.degree().expect("nonzero polynomial has a degree"),
            p.coeffs().iter().map(fraction_str).collect(),
        )
    };
    json!({ "degree": degree, "coefficients": coefficients })
}

/// Space-separated ascending `p/q` list, constant term first.
fn coeffs(p: &Polynomial) -> String {
    if p.is_zero() {
        return fraction_str(&Rational::zero());
    }
    p.coeffs()
        .iter()
        .map(fraction_str)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Exact scalar for `--eval` and `geom` output: integer when the
/// denominator is 1, `p/q` otherwise.
pub fn format_value(v: &Rational) -> String {
    display_str(v)
}

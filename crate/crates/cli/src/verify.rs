//! Cross-verification harness: for every exponent up to `dmax`, compute
//! the polynomial by all four methods, check structural agreement,
//! check values against the brute-force sum up to `nmax`, and check the
//! expected shape (degree d+1, leading coefficient 1/(d+1), zero
//! constant term). One record per exponent; the run passes only if
//! every flag in every record passes.

use std::time::Instant;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use faulhaber::methods::{self, Method};
use faulhaber::poly::Polynomial;
use faulhaber::rational::{Integer, Rational};

use crate::format::polynomial_json;

#[derive(Debug, Clone)]
pub struct VerifyRecord {
    pub d: u32,
    /// The agreed polynomial; absent when a method failed outright.
    pub polynomial: Option<Polynomial>,
    pub methods_agree: bool,
    pub oracle_match: bool,
    pub degree_ok: bool,
    pub leading_ok: bool,
    pub constant_ok: bool,
    /// Wall time per method, in the order of [`Method::ALL`].
    pub timings_micros: Vec<(Method, u128)>,
    /// First internal error, if any method failed.
    pub error: Option<String>,
}

impl VerifyRecord {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.methods_agree
            && self.oracle_match
            && self.degree_ok
            && self.leading_ok
            && self.constant_ok
    }
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub dmax: u32,
    pub nmax: u32,
    pub records: Vec<VerifyRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(VerifyRecord::passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for r in &self.records {
            let flag = |ok: bool| if ok { "ok" } else { "FAIL" };
            let timings = r
                .timings_micros
                .iter()
                .map(|(m, us)| format!("{}={}us", m.name(), us))
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!(
                "d={:<2} methods={} oracle={} degree={} leading={} constant={}  [{}]\n",
                r.d,
                flag(r.methods_agree),
                flag(r.oracle_match),
                flag(r.degree_ok),
                flag(r.leading_ok),
                flag(r.constant_ok),
                timings,
            ));
            if let Some(e) = &r.error {
                out.push_str(&format!("d={:<2} error: {}\n", r.d, e));
            }
        }
        out.push_str(&format!(
            "verify: {} (dmax={}, nmax={})\n",
            if self.passed() { "PASS" } else { "FAIL" },
            self.dmax,
            self.nmax,
        ));
        out
    }

    pub fn to_json(&self) -> Value {
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|r| {
                json!({
                    "d": r.d,
                    "pass": r.passed(),
                    "polynomial": r.polynomial.as_ref().map(polynomial_json),
                    "methods_agree": r.methods_agree,
                    "oracle_match": r.oracle_match,
                    "degree_ok": r.degree_ok,
                    "leading_ok": r.leading_ok,
                    "constant_ok": r.constant_ok,
                    "timings": r.timings_micros.iter().map(|(m, us)| {
                        json!({ "method": m.name(), "micros": *us as u64 })
                    }).collect::<Vec<_>>(),
                    "error": r.error,
                })
            })
            .collect();
        json!({
            "dmax": self.dmax,
            "nmax": self.nmax,
            "pass": self.passed(),
            "records": records,
        })
    }
}

pub fn run_verify(dmax: u32, nmax: u32) -> VerifyReport {
    let records = (0..=dmax).map(|d| check_degree(d, nmax)).collect();
    VerifyReport {
        dmax,
        nmax,
        records,
    }
}

fn check_degree(d: u32, nmax: u32) -> VerifyRecord {
    let mut timings_micros = Vec::with_capacity(Method::ALL.len());
    let mut polys: Vec<Polynomial> = Vec::with_capacity(Method::ALL.len());
    let mut error = None;
    for m in Method::ALL {
        let start = Instant::now();
        let outcome = methods::power_sum(d, m);
        timings_micros.push((m, start.elapsed().as_micros()));
        match outcome {
            Ok(p) => polys.push(p),
            Err(e) => {
                if error.is_none() {
                    error = Some(format!("{}: {e}", m.name()));
                }
            }
        }
    }

    let methods_agree =
        polys.len() == Method::ALL.len() && polys.windows(2).all(|w| w[0] == w[1]);
    let reference = polys.into_iter().next();

    let (mut oracle_match, mut degree_ok, mut leading_ok, mut constant_ok) =
        (false, false, false, false);
    if let Some(p) = &reference {
        oracle_match = (0..=nmax).all(|n| {
            p.eval_int(i64::from(n))
                == Rational::from_integer(methods::brute_force_power_sum(d, u64::from(n)))
        });
        if d == 0 {
            // Theorem-1 shape presumes d >= 1; p_0 = n + 1 is instead
            // pinned directly.
            let ok = p == &Polynomial::from_integers(&[1, 1]);
            degree_ok = ok;
            leading_ok = ok;
            constant_ok = ok;
        } else {
            degree_ok = p.degree() == Some(d as usize + 1);
            leading_ok = p.leading_coeff()
                == Some(&Rational::new(Integer::one(), Integer::from(d) + 1));
            constant_ok = p.coeff(0).is_zero();
        }
    }

    VerifyRecord {
        d,
        polynomial: reference,
        methods_agree,
        oracle_match,
        degree_ok,
        leading_ok,
        constant_ok,
        timings_micros,
        error,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_verify_passes() {
        let report = run_verify(3, 20);
        assert!(report.passed());
        assert_eq!(report.records.len(), 4);
        for (d, r) in report.records.iter().enumerate() {
            assert_eq!(r.d as usize, d);
            assert!(r.passed());
            assert_eq!(r.timings_micros.len(), 4);
            assert!(r.error.is_none());
        }
        // the d = 2 record carries the displayed formula
        assert_eq!(
            report.records[2].polynomial.as_ref().unwrap(),
            &Polynomial::from_ratios(&[(0, 1), (1, 6), (1, 2), (1, 3)])
        );
    }

    #[test]
    fn degenerate_verify_passes() {
        // single check: p_0 evaluated at n = 0 is 1 (0^0 = 1)
        let report = run_verify(0, 0);
        assert!(report.passed());
        assert_eq!(report.records.len(), 1);
    }

    #[test]
    fn text_report_shape() {
        let report = run_verify(2, 5);
        let text = report.render_text();
        assert_eq!(text.lines().count(), 4); // 3 records + summary
        assert!(text.ends_with("verify: PASS (dmax=2, nmax=5)\n"));
        assert!(text.contains("lhopital="));
    }

    #[test]
    fn json_report_is_strictly_parseable() {
        let report = run_verify(2, 5);
        let text = report.to_json().to_string();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["pass"], Value::Bool(true));
        assert_eq!(v["records"].as_array().unwrap().len(), 3);
        assert_eq!(v["records"][1]["polynomial"]["degree"], json!(2));
    }
}

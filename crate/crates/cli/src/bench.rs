//! Wall-clock comparison of the four methods. Purely observational: the
//! benchmark asserts nothing numeric, it just makes the relative cost
//! of the methods visible (symbolic differentiation is expected to grow
//! fastest as the exponent climbs).

use std::time::Instant;

use serde_json::{json, Value};

use faulhaber::methods::{self, Method};

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub d: u32,
    pub method: Method,
    pub micros: u128,
}

/// Times every method at every exponent `0..=dmax`, ordered by
/// exponent, then by method.
pub fn run_bench(dmax: u32) -> Vec<BenchRecord> {
    let mut records = Vec::with_capacity((dmax as usize + 1) * Method::ALL.len());
    for d in 0..=dmax {
        for method in Method::ALL {
            let start = Instant::now();
            let outcome = methods::power_sum(d, method);
            let micros = start.elapsed().as_micros();
            debug_assert!(outcome.is_ok());
            records.push(BenchRecord { d, method, micros });
        }
    }
    records
}

/// One row per exponent, one microsecond column per method.
pub fn render_text(records: &[BenchRecord]) -> String {
    let mut out = format!("{:>4}", "d");
    for method in Method::ALL {
        out.push_str(&format!(" {:>16}", method.name()));
    }
    out.push_str("   (microseconds)\n");
    let mut row: Vec<u128> = Vec::with_capacity(Method::ALL.len());
    for r in records {
        row.push(r.micros);
        if row.len() == Method::ALL.len() {
            out.push_str(&format!("{:>4}", r.d));
            for us in row.drain(..) {
                out.push_str(&format!(" {us:>16}"));
            }
            out.push('\n');
        }
    }
    out
}

/// `[{"d": ..., "method": ..., "micros": ...}, ...]` in run order.
pub fn render_json(records: &[BenchRecord]) -> Value {
    Value::Array(
        records
            .iter()
            .map(|r| {
                json!({
                    "d": r.d,
                    "method": r.method.name(),
                    "micros": r.micros as u64,
                })
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_cover_every_method_and_exponent() {
        let records = run_bench(4);
        assert_eq!(records.len(), 5 * 4);
        for (i, r) in records.iter().enumerate() {
            assert_eq!(r.d as usize, i / 4);
            assert_eq!(r.method, Method::ALL[i % 4]);
        }
    }

    #[test]
    fn text_table_has_header_and_one_row_per_exponent() {
        let records = run_bench(10);
        let text = render_text(&records);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 12); // header + 11 rows
        assert!(lines[0].contains("lhopital"));
        assert!(lines[0].contains("euler-maclaurin"));
        assert!(lines[1].trim_start().starts_with('0'));
    }

    #[test]
    fn json_records_parse_strictly() {
        let records = run_bench(2);
        let text = render_json(&records).to_string();
        let v: Value = serde_json::from_str(&text).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 12);
        assert_eq!(arr[0]["d"], json!(0));
        assert_eq!(arr[0]["method"], json!("lhopital"));
        assert!(arr[0]["micros"].is_u64());
    }
}

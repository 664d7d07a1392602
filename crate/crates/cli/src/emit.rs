//! Deterministic CSV/JSON emission.
//!
//! Every float is printed with 17 significant digits (round-trip exact for
//! f64) in a locale-independent format, so identical inputs produce
//! byte-identical files.

use std::io::{self, Write};

use steklov_core::SweepRecord;

/// 17 significant digits, scientific notation.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Geometry context shared by every record of a sweep.
#[derive(Clone, Debug)]
pub struct SweepContext {
    pub space: String,
    pub m: u32,
    pub k: u32,
    pub r1: f64,
    pub r2: f64,
    pub sigma1_concentric: f64,
}

pub const SWEEP_CSV_HEADER: &str =
    "space,m,k,R1,R2,d,N,D,D_alt,Q,sigma1_concentric,newton_residual,quad_err";

/// Writes sweep records in input order, CSV or JSON, with a trailing
/// newline.
pub fn emit_records(
    records: &[SweepRecord],
    ctx: &SweepContext,
    format: OutputFormat,
    out: &mut dyn Write,
) -> io::Result<()> {
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{SWEEP_CSV_HEADER}")?;
            for rec in records {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{},{},{},{},{},{}",
                    ctx.space,
                    ctx.m,
                    ctx.k,
                    fmt17(ctx.r1),
                    fmt17(ctx.r2),
                    fmt17(rec.d),
                    fmt17(rec.numerator),
                    fmt17(rec.denominator),
                    fmt17(rec.denominator_alt),
                    fmt17(rec.quotient),
                    fmt17(ctx.sigma1_concentric),
                    fmt17(rec.newton_residual),
                    fmt17(rec.quad_err),
                )?;
            }
        }
        OutputFormat::Json => {
            writeln!(out, "[")?;
            for (i, rec) in records.iter().enumerate() {
                let comma = if i + 1 < records.len() { "," } else { "" };
                writeln!(
                    out,
                    "  {{\"space\": \"{}\", \"m\": {}, \"k\": {}, \"R1\": {}, \"R2\": {}, \"d\": {}, \"N\": {}, \"D\": {}, \"D_alt\": {}, \"Q\": {}, \"sigma1_concentric\": {}, \"newton_residual\": {}, \"quad_err\": {}}}{comma}",
                    ctx.space,
                    ctx.m,
                    ctx.k,
                    fmt17(ctx.r1),
                    fmt17(ctx.r2),
                    fmt17(rec.d),
                    fmt17(rec.numerator),
                    fmt17(rec.denominator),
                    fmt17(rec.denominator_alt),
                    fmt17(rec.quotient),
                    fmt17(ctx.sigma1_concentric),
                    fmt17(rec.newton_residual),
                    fmt17(rec.quad_err),
                )?;
            }
            writeln!(out, "]")?;
        }
    }
    Ok(())
}

/// `l,sigma` table for the mode eigenvalues.
pub fn emit_modes(table: &[(u32, f64)], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "l,sigma")?;
    for &(l, sigma) in table {
        writeln!(out, "{l},{}", fmt17(sigma))?;
    }
    Ok(())
}

/// `sigma,min_singular_value` trace of a singular-value scan.
pub fn emit_scan_trace(trace: &[(f64, f64)], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "sigma,min_singular_value")?;
    for &(sigma, smin) in trace {
        writeln!(out, "{},{}", fmt17(sigma), fmt17(smin))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_record(d: f64) -> SweepRecord {
        SweepRecord {
            d,
            numerator: 2.0 * std::f64::consts::PI,
            denominator: 4.0 * std::f64::consts::PI,
            denominator_alt: 4.0 * std::f64::consts::PI,
            quotient: 0.5,
            newton_residual: 1e-14,
            quad_err: 1e-13,
        }
    }

    fn sample_ctx() -> SweepContext {
        SweepContext {
            space: "euclidean".into(),
            m: 3,
            k: 1,
            r1: 1.0,
            r2: 2.0,
            sigma1_concentric: 0.5,
        }
    }

    #[test]
    fn csv_has_header_plus_one_row_per_record() {
        let mut buf = Vec::new();
        emit_records(&[sample_record(0.0)], &sample_ctx(), OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], SWEEP_CSV_HEADER);
        assert!(text.ends_with('\n'));
    }

    #[test]
    fn csv_and_json_values_parse_equal() {
        let records = [sample_record(0.0), sample_record(0.25)];
        let ctx = sample_ctx();
        let mut csv = Vec::new();
        emit_records(&records, &ctx, OutputFormat::Csv, &mut csv).unwrap();
        let mut json = Vec::new();
        emit_records(&records, &ctx, OutputFormat::Json, &mut json).unwrap();

        let csv = String::from_utf8(csv).unwrap();
        let json = String::from_utf8(json).unwrap();
        // Pull the Q column from the CSV and the "Q" fields from the JSON.
        let csv_q: Vec<f64> = csv
            .lines()
            .skip(1)
            .map(|l| l.split(',').nth(9).unwrap().parse().unwrap())
            .collect();
        let json_q: Vec<f64> = json
            .lines()
            .filter(|l| l.contains("\"Q\""))
            .map(|l| {
                let tail = l.split("\"Q\": ").nth(1).unwrap();
                tail.split(',').next().unwrap().parse().unwrap()
            })
            .collect();
        assert_eq!(csv_q, json_q);
    }

    #[test]
    fn seventeen_digit_format_round_trips() {
        for &x in &[0.5, 1.0 / 3.0, 2.0_f64.sqrt(), 1e-300, -7.25e17] {
            let s = fmt17(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back, x, "{s}");
        }
    }
}

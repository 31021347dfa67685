//! Report emission in JSON Lines, CSV or plain text.

use std::io::Write;

use clap::ValueEnum;
use serde::Serialize;

use crate::error::{Result, VerifierError};
use crate::record::{ResultRecord, Summary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    group: &'a str,
    order: u64,
    content_hash: &'a str,
    pi: String,
    ccl_g: u64,
    ccl_a: u64,
    ccl_b: u64,
    excess: i64,
    is_con: bool,
    is_con_star: bool,
    is_direct_product: bool,
    degenerate: bool,
    is_scon: String,
    oracles_applicable: String,
    oracles_refuted: String,
    computed_at: &'a str,
}

fn csv_err(e: csv::Error) -> VerifierError {
    VerifierError::Io(std::io::Error::other(e))
}

fn opt_count(
    r: &ResultRecord,
    f: impl Fn(&hallcheck_core::oracles::OracleOutcome) -> bool,
) -> String {
    r.oracles
        .as_ref()
        .map(|v| v.iter().filter(|o| f(o)).count().to_string())
        .unwrap_or_default()
}

pub fn emit(records: &[ResultRecord], format: Format, out: &mut dyn Write) -> Result<()> {
    match format {
        Format::Json => {
            for r in records {
                serde_json::to_writer(&mut *out, r).map_err(|e| VerifierError::Io(e.into()))?;
                writeln!(out)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(CsvRow {
                    group: &r.group,
                    order: r.order,
                    content_hash: &r.content_hash,
                    pi: r.pi.to_string(),
                    ccl_g: r.con.ccl_g,
                    ccl_a: r.con.ccl_a,
                    ccl_b: r.con.ccl_b,
                    excess: r.con.excess,
                    is_con: r.con.is_con,
                    is_con_star: r.con.is_con_star,
                    is_direct_product: r.con.is_direct_product,
                    degenerate: r.con.degenerate,
                    is_scon: r.con.is_scon.map(|b| b.to_string()).unwrap_or_default(),
                    oracles_applicable: opt_count(r, |o| o.applicable),
                    oracles_refuted: opt_count(r, |o| o.refuted()),
                    computed_at: &r.computed_at,
                })
                .map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Text => {
            for r in records {
                let verdict = if r.is_violation() {
                    "VIOLATION"
                } else if r.con.is_direct_product {
                    "direct"
                } else {
                    "strict"
                };
                write!(
                    out,
                    "{:<24} {:>5} pi={:<12} ccl(G)={:<4} ccl(A)={:<4} ccl(B)={:<4} excess={:<6} {verdict}",
                    r.group,
                    r.order,
                    r.pi.to_string(),
                    r.con.ccl_g,
                    r.con.ccl_a,
                    r.con.ccl_b,
                    r.con.excess,
                )?;
                if let Some(s) = r.con.is_scon {
                    write!(out, " scon={s}")?;
                }
                if let Some(o) = &r.oracles {
                    let refuted = o.iter().filter(|x| x.refuted()).count();
                    let applicable = o.iter().filter(|x| x.applicable).count();
                    write!(out, " oracles={applicable}/{} refuted={refuted}", o.len())?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}

pub fn summary_line(s: &Summary) -> String {
    format!(
        "groups={} records={} violations={} oracle_outcomes={} refutations={} unchecked={}",
        s.groups, s.records, s.violations, s.oracle_outcomes, s.refutations, s.unchecked
    )
}

//! Report formats shared by the command line and the tests: versioned JSON
//! envelopes, CSV tables and the text grid of flowdown verdicts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bigdisc::SweepRow;
use crate::error::{Error, Result};
use crate::h2::{classify, enumerate_prototypes, has_two_spins, spin, spin_label, Cell, ScanRecordH2};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize)]
pub struct Envelope<'a, T: Serialize> {
    pub schema: u32,
    pub kind: &'a str,
    pub data: T,
}

pub fn to_json<T: Serialize>(kind: &str, data: T) -> Result<String> {
    serde_json::to_string_pretty(&Envelope { schema: SCHEMA_VERSION, kind, data })
        .map_err(|e| Error::Parse(e.to_string()))
}

fn csv_string<F>(header: &[&str], fill: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Parse(e.to_string());
    w.write_record(header).map_err(io)?;
    fill(&mut w).map_err(io)?;
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
}

pub fn h2_csv(records: &[ScanRecordH2]) -> Result<String> {
    let header = ["symbol", "D", "spin", "prototypes", "degenerate", "has_strictly_convex", "has_convex", "witness"];
    csv_string(&header, |w| {
        for r in records {
            w.write_record([
                r.symbol.clone(),
                r.d.to_string(),
                r.spin.map(|s| s.to_string()).unwrap_or_default(),
                r.prototypes.to_string(),
                r.degenerate.to_string(),
                r.has_strictly_convex.to_string(),
                r.has_convex.to_string(),
                r.witness.map(|p| format!("{},{},{},{}", p.a, p.b, p.c, p.e)).unwrap_or_default(),
            ])?;
        }
        Ok(())
    })
}

pub fn h2_text(records: &[ScanRecordH2]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<8} {:>6} {:>10} {:>8} {:>8}  witness (a,b,c,e)",
        "symbol", "protos", "degenerate", "strict", "convex"
    );
    for r in records {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let witness = r.witness.map(|p| format!("({},{},{},{})", p.a, p.b, p.c, p.e)).unwrap_or_else(|| "-".into());
        let _ = writeln!(
            out,
            "{:<8} {:>6} {:>10} {:>8} {:>8}  {}",
            r.symbol,
            r.prototypes,
            r.degenerate,
            yn(r.has_strictly_convex),
            yn(r.has_convex),
            witness
        );
    }
    out
}

/// Flowdown verdict grid for one discriminant: one line per `(e, b, c)`,
/// one column per `a`, with `1` for a strictly convex canonical octagon,
/// `0` for a non-convex one, `D` for degenerate and `.` for an `a` that is
/// not a prototype (or belongs to the other spin).
pub fn h2_grid(d: i64) -> String {
    let protos = enumerate_prototypes(d);
    let labels: Vec<Option<u8>> = if has_two_spins(d) { vec![Some(0), Some(1)] } else { vec![None] };
    let mut out = String::new();
    for label in labels {
        match label {
            Some(l) => {
                let _ = writeln!(out, "D = {d}, spin {l}");
            }
            None => {
                let _ = writeln!(out, "D = {d}");
            }
        }
        let mut rows: BTreeMap<(i64, i64, i64), BTreeMap<i64, Cell>> = BTreeMap::new();
        for p in &protos {
            let mine = label.is_none_or(|l| spin(p).map(|s| spin_label(s.parity) == l).unwrap_or(false));
            let row = rows.entry((p.e, p.b, p.c)).or_default();
            if mine {
                row.insert(p.a, classify(p).0);
            }
        }
        for ((e, b, c), cells) in rows {
            let line: String = (0..b)
                .map(|a| match cells.get(&a) {
                    Some(Cell::Convex) => '1',
                    Some(Cell::Nonconvex) => '0',
                    Some(Cell::Degenerate) => 'D',
                    None => '.',
                })
                .collect();
            let _ = writeln!(out, "e={e:>4} b={b:>5} c={c:>4} | {line}");
        }
    }
    out
}

pub fn bigd_csv(rows: &[SweepRow]) -> Result<String> {
    let header = ["D", "scheme", "a", "b", "c", "e", "k", "l", "convex", "spin", "inequalities"];
    let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
    csv_string(&header, |w| {
        for r in rows {
            w.write_record([
                r.d.to_string(),
                format!("{:?}", r.scheme),
                r.a.to_string(),
                r.b.to_string(),
                r.c.to_string(),
                r.e.to_string(),
                opt(r.k),
                opt(r.l),
                r.convex.to_string(),
                r.spin.map(|s| s.to_string()).unwrap_or_default(),
                format!("{:07b}", r.inequalities),
            ])?;
        }
        Ok(())
    })
}

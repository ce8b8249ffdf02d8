use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use anyhow::{anyhow, bail, Context};
use serde::Serialize;

use g2convex::bigdisc::sweep;
use g2convex::exactnum::is_perfect_square;
use g2convex::h11::{
    canonical_decagon, default_direction, flowdown11, grid_search, is_admissible_direction, split_octagon,
    split_threshold, SplitThreshold,
};
use g2convex::h2::{flowdown, octagon_of, scan_h2};
use g2convex::lattice::{case1_solutions, min_area_ngon, pick_data, search_octagons_b8, search_pentagons, PickData};
use g2convex::report::{bigd_csv, h2_csv, h2_grid, h2_text, to_json};
use g2convex::{
    convexity_of_vertices, format_rat, parse_rat, CanonicalDecagon, CanonicalOctagon, Convexity, FlowdownH11,
    FlowdownH2, LatticePolygon, Point, PrototypeH11, PrototypeH2, QuadVal, Rat,
};

use crate::svg::{render, Panel};
use crate::{Format, Output, ProtoArgs, Status};

type CmdResult = anyhow::Result<Status>;

fn emit(output: &Output, body: &str) -> anyhow::Result<()> {
    let mut text = body.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).context("writing to stdout"),
    }
}

fn emit_json<T: Serialize>(output: &Output, kind: &str, data: T) -> anyhow::Result<()> {
    emit(output, &to_json(kind, data)?)
}

fn no_csv(what: &str) -> anyhow::Error {
    anyhow!("{what} has no CSV form; use --format text or json")
}

fn write_svg(path: &Path, svg: &str) -> anyhow::Result<()> {
    fs::write(path, svg).with_context(|| format!("writing {}", path.display()))
}

fn prototype(p: &ProtoArgs) -> anyhow::Result<PrototypeH2> {
    Ok(PrototypeH2::new(p.d, p.a, p.b, p.c, p.e)?)
}

fn fmt4(v: &QuadVal) -> String {
    format!("{:.4}", v.to_f64())
}

fn fmt_point(p: &Point) -> String {
    format!("({}, {})", fmt4(&p.x), fmt4(&p.y))
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::Violation
    }
}

fn join_symbols<'a>(symbols: impl Iterator<Item = &'a str>) -> String {
    symbols.collect::<Vec<_>>().join(" ")
}

pub fn h2_scan(from: i64, to: i64, convex: bool, output: &Output) -> CmdResult {
    if from < 5 || from > to {
        bail!("scan range needs 5 <= from <= to, got {from}..{to}");
    }
    let records = scan_h2(from, to);
    let flagged: Vec<&str> = records
        .iter()
        .filter(|r| if convex { !r.has_convex } else { !r.has_strictly_convex })
        .map(|r| r.symbol.as_str())
        .collect();
    let criterion = if convex { "convex" } else { "strictly_convex" };
    match output.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Scan<'a> {
                from: i64,
                to: i64,
                criterion: &'a str,
                flagged: &'a [&'a str],
                records: &'a [g2convex::ScanRecordH2],
            }
            emit_json(output, "h2_scan", Scan { from, to, criterion, flagged: &flagged, records: &records })?;
        }
        Format::Csv => emit(output, &h2_csv(&records)?)?,
        Format::Text => {
            let mut out = String::new();
            let mut ds: Vec<i64> = records.iter().map(|r| r.d).collect();
            ds.dedup();
            for d in ds {
                out.push_str(&h2_grid(d));
                out.push('\n');
            }
            out.push_str(&h2_text(&records));
            let label = if convex { "no convex" } else { "no strictly convex" };
            let _ = writeln!(out, "{label} ({}): {}", flagged.len(), join_symbols(flagged.iter().copied()));
            emit(output, &out)?;
        }
    }
    Ok(Status::Ok)
}

pub fn h2_poly(args: &ProtoArgs, svg: Option<&Path>, output: &Output) -> CmdResult {
    let p = prototype(args)?;
    let flow = flowdown(&p);
    let octagon = octagon_of(&p).ok();
    let convexity = octagon.as_ref().map(|o| convexity_of_vertices(&o.vertices));
    let note = match &flow {
        FlowdownH2::Degenerate { prong, hit } => {
            Some(format!("degenerate: {prong:?} prong hits {hit:?}").to_lowercase())
        }
        FlowdownH2::Nondegenerate { .. } => None,
    };
    if let Some(path) = svg {
        let mut panels = vec![Panel::new(format!("prototype {p}"), &p.outline())];
        if let Some(o) = &octagon {
            let labels: Vec<String> = (0..8).map(|i| format!("v{i}")).collect();
            let labels: Vec<&str> = labels.iter().map(String::as_str).collect();
            panels.push(Panel::new(format!("canonical octagon ({})", verdict_h2(o)), &o.vertices).labelled(&labels));
        }
        write_svg(path, &render(&panels, &note.iter().cloned().collect::<Vec<_>>()))?;
    }
    match output.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Poly<'a> {
                prototype: PrototypeH2,
                lambda: QuadVal,
                area: QuadVal,
                outline: Vec<Point>,
                flowdown: &'a FlowdownH2,
                octagon: Option<&'a CanonicalOctagon>,
                convexity: Option<Convexity>,
                note: Option<&'a str>,
            }
            emit_json(
                output,
                "h2_poly",
                Poly {
                    prototype: p,
                    lambda: p.lambda(),
                    area: p.area(),
                    outline: p.outline(),
                    flowdown: &flow,
                    octagon: octagon.as_ref(),
                    convexity,
                    note: note.as_deref(),
                },
            )?;
        }
        Format::Csv => return Err(no_csv("h2 poly")),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "prototype {p}, λ = {} ≈ {}", p.lambda(), fmt4(&p.lambda()));
            match (&flow, &octagon) {
                (FlowdownH2::Nondegenerate { k, l }, Some(o)) => {
                    let _ = writeln!(out, "flowdown k = {k}, ℓ = {l}");
                    let _ = writeln!(out, "(x1, y1) = ({}, {})", fmt4(&o.x1), fmt4(&o.y1));
                    let _ = writeln!(out, "(x2, y2) = ({}, {})", fmt4(&o.x2), fmt4(&o.y2));
                    let vs: Vec<String> = o.vertices.iter().map(fmt_point).collect();
                    let _ = writeln!(out, "octagon {}", vs.join(" "));
                    let _ = writeln!(out, "{}", verdict_h2(o));
                }
                _ => {
                    let _ = writeln!(out, "{}", note.as_deref().unwrap_or("degenerate"));
                }
            }
            emit(output, &out)?;
        }
    }
    Ok(Status::Ok)
}

fn verdict_h2(o: &CanonicalOctagon) -> &'static str {
    if o.strictly_convex {
        "STRICTLY CONVEX"
    } else if o.weakly_convex {
        "CONVEX (NOT STRICTLY)"
    } else {
        "NOT CONVEX"
    }
}

pub fn h11_check(args: &ProtoArgs, x: &str, y: &str, max_iter: u64, svg: Option<&Path>, output: &Output) -> CmdResult {
    let p = PrototypeH11::new(prototype(args)?, parse_rat(x)?, parse_rat(y)?)?;
    let flow = flowdown11(&p, max_iter)?;
    let decagon = match flow {
        FlowdownH11::Nondegenerate { .. } => Some(canonical_decagon(&p, max_iter)?),
        _ => None,
    };
    let verdict = match (&flow, &decagon) {
        (_, Some(d)) if d.strictly_convex => "STRICTLY CONVEX".to_string(),
        (_, Some(_)) => "NOT STRICTLY CONVEX".to_string(),
        (FlowdownH11::Degenerate { reason }, _) => format!("DEGENERATE ({reason})"),
        (FlowdownH11::Undecided { prong, cap }, _) => {
            format!("UNDECIDED ({prong:?} prong after {cap} steps)")
        }
        (FlowdownH11::Nondegenerate { .. }, None) => {
            unreachable!("nondegenerate flowdown always builds a decagon")
        }
    };
    if let Some(path) = svg {
        let mut panels = vec![Panel::new(format!("prototype {p}"), &p.outline())
            .labelled(&["A", "B", "C", "D", "I", "J", "E", "F", "G", "H"])];
        if let Some(d) = &decagon {
            panels.push(Panel::new(format!("canonical decagon ({verdict})"), &d.vertices));
        }
        write_svg(path, &render(&panels, &[]))?;
    }
    match output.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Check<'a> {
                prototype: &'a PrototypeH11,
                area: QuadVal,
                flowdown: &'a FlowdownH11,
                decagon: Option<&'a CanonicalDecagon>,
                verdict: &'a str,
            }
            emit_json(
                output,
                "h11_check",
                Check { prototype: &p, area: p.area(), flowdown: &flow, decagon: decagon.as_ref(), verdict: &verdict },
            )?;
        }
        Format::Csv => return Err(no_csv("h11 check")),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "prototype {p}");
            if let Some(d) = &decagon {
                let _ = writeln!(out, "flowdown k = {}, ℓ = {}, m = {}", d.k, d.l, d.m);
                for (i, (x, y)) in [(&d.x1, &d.y1), (&d.x2, &d.y2), (&d.x3, &d.y3)].into_iter().enumerate() {
                    let _ = writeln!(out, "(x{n}, y{n}) = ({}, {})", fmt4(x), fmt4(y), n = i + 1);
                }
            }
            let _ = writeln!(out, "{verdict}");
            emit(output, &out)?;
        }
    }
    Ok(Status::Ok)
}

pub fn h11_search(d: i64, nx: u64, ny: u64, max_iter: u64, first_hit: bool, output: &Output) -> CmdResult {
    if nx < 1 || ny < 1 {
        bail!("grid sizes must be at least 1");
    }
    let report = grid_search(d, nx, ny, max_iter, first_hit)?;
    // discriminants 4, 9, 16 admit no strictly convex presentation at all
    let expect_empty = d <= 16 && d > 0 && is_perfect_square(d as u64);
    let ok = !(expect_empty && !report.hits.is_empty());
    match output.format {
        Format::Json => emit_json(output, "h11_search", &report)?,
        Format::Csv => return Err(no_csv("h11 search")),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "D = {d}: {} prototypes, {} grid points, {} degenerate, {} undecided, {} not strictly convex",
                report.prototypes, report.points, report.degenerate, report.undecided, report.nonconvex
            );
            for hit in &report.hits {
                let dec = &hit.decagon;
                let _ = writeln!(
                    out,
                    "hit j={} i={}: {} (k,ℓ,m) = ({},{},{})",
                    hit.j, hit.i, dec.prototype, dec.k, dec.l, dec.m
                );
            }
            let _ = writeln!(out, "{} hits", report.hits.len());
            if !ok {
                let _ = writeln!(out, "VIOLATION: D = {d} should have no strictly convex hits");
            }
            emit(output, &out)?;
        }
    }
    Ok(status(ok))
}

fn parse_direction(d: u64, s: &str) -> anyhow::Result<Point> {
    let (a, b) = s.split_once(',').ok_or_else(|| anyhow!("direction must be 'ux,uy', got {s:?}"))?;
    let coord = |t: &str| -> anyhow::Result<QuadVal> { Ok(QuadVal::from_rat(d, parse_rat(t.trim())?)) };
    Ok(Point::new(coord(a)?, coord(b)?))
}

pub fn h11_split(
    args: &ProtoArgs,
    eps: Option<&str>,
    u: Option<&str>,
    svg: Option<&Path>,
    output: &Output,
) -> CmdResult {
    let p = prototype(args)?;
    let oct = octagon_of(&p)?;
    if !oct.strictly_convex {
        bail!("the canonical octagon of {p} is not strictly convex");
    }
    let u = match u {
        Some(s) => parse_direction(p.radicand(), s)?,
        None => default_direction(&oct.vertices),
    };
    if !is_admissible_direction(&oct.vertices, &u) {
        bail!("direction {} does not point into the cone at the split vertex", fmt_point(&u));
    }
    let threshold = split_threshold(&oct.vertices, &u);
    let eps = eps.map(parse_rat).transpose()?;
    let split = match &eps {
        Some(e) => Some(split_octagon(&oct.vertices, &u, e)?),
        None => None,
    };
    if let (Some(path), Some(s)) = (svg, &split) {
        let panels = [
            Panel::new("octagon", &oct.vertices),
            Panel::new(format!("split, ε = {}", format_rat(&s.epsilon)), &s.vertices),
        ];
        write_svg(path, &render(&panels, &[]))?;
    }
    match output.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Bracket {
                lower: String,
                upper: String,
            }
            #[derive(Serialize)]
            struct Split<'a> {
                prototype: PrototypeH2,
                direction: &'a Point,
                threshold: Option<Bracket>,
                split: Option<&'a g2convex::h11::SplitDecagon>,
            }
            let threshold =
                threshold.as_ref().map(|t| Bracket { lower: format_rat(&t.lower), upper: format_rat(&t.upper) });
            emit_json(output, "h11_split", Split { prototype: p, direction: &u, threshold, split: split.as_ref() })?;
        }
        Format::Csv => return Err(no_csv("h11 split")),
        Format::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "octagon of {p}, direction {}", fmt_point(&u));
            let _ = writeln!(out, "{}", describe_threshold(threshold.as_ref()));
            if let Some(s) = &split {
                let vs: Vec<String> = s.vertices.iter().map(fmt_point).collect();
                let _ = writeln!(out, "ε = {}: STRICTLY CONVEX decagon {}", format_rat(&s.epsilon), vs.join(" "));
            }
            emit(output, &out)?;
        }
    }
    Ok(Status::Ok)
}

fn describe_threshold(t: Option<&SplitThreshold>) -> String {
    use num_traits::ToPrimitive;
    match t {
        Some(t) => format!(
            "threshold δ in [{}, {}] ≈ {:.6}",
            format_rat(&t.lower),
            format_rat(&t.upper),
            t.lower.to_f64().unwrap_or(f64::NAN)
        ),
        None => "no finite threshold: every positive ε splits convexly".into(),
    }
}

pub fn bigd_sweep(from: i64, to: i64, output: &Output) -> CmdResult {
    let report = sweep(from, to)?;
    match output.format {
        Format::Json => emit_json(output, "bigd_sweep", &report)?,
        Format::Csv => emit(output, &bigd_csv(&report.rows)?)?,
        Format::Text => {
            let mut out = String::new();
            let ds = report.rows.iter().map(|r| r.d).collect::<std::collections::BTreeSet<_>>().len();
            let _ = writeln!(out, "D in [{from}, {to}]: {ds} discriminants, {} constructions", report.rows.len());
            for f in &report.failures {
                let _ = writeln!(out, "failure: {f}");
            }
            let _ = writeln!(out, "{}", if report.passed() { "PASS" } else { "FAIL" });
            emit(output, &out)?;
        }
    }
    Ok(status(report.passed()))
}

#[derive(Serialize)]
struct Listed<'a> {
    vertices: &'a [(i64, i64)],
    pick: PickData,
}

fn listing(polys: &[LatticePolygon]) -> anyhow::Result<Vec<Listed<'_>>> {
    polys.iter().map(|p| Ok(Listed { vertices: &p.vertices, pick: pick_data(p)? })).collect()
}

fn polygon_lines(polys: &[LatticePolygon]) -> anyhow::Result<String> {
    let mut out = String::new();
    for p in polys {
        let pd = pick_data(p)?;
        let _ = writeln!(
            out,
            "{:?} area {} interior {} boundary {}",
            p.vertices,
            format_rat(&pd.area),
            pd.interior,
            pd.boundary
        );
    }
    Ok(out)
}

/// Lists a search result that is expected to come back empty.
fn expected_empty(kind: &str, what: &str, polys: &[LatticePolygon], expect: bool, output: &Output) -> CmdResult {
    let ok = !(expect && !polys.is_empty());
    match output.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Search<'a> {
                expected_empty: bool,
                count: usize,
                polygons: Vec<Listed<'a>>,
            }
            emit_json(output, kind, Search { expected_empty: expect, count: polys.len(), polygons: listing(polys)? })?;
        }
        Format::Csv => return Err(no_csv(what)),
        Format::Text => {
            let mut out = polygon_lines(polys)?;
            let _ = writeln!(out, "{what}: {} found", polys.len());
            if !ok {
                let _ = writeln!(out, "VIOLATION: expected no {what}");
            }
            emit(output, &out)?;
        }
    }
    Ok(status(ok))
}

pub fn cert_pentagons(area: &str, bbox: i64, angles: bool, output: &Output) -> CmdResult {
    if bbox < 3 {
        bail!("--box must be at least 3");
    }
    let bound: Rat = parse_rat(area)?;
    let found = search_pentagons(&bound, bbox, angles);
    let expect = angles && bound <= Rat::from_integer(5.into());
    expected_empty("cert_pentagons", "pentagons", &found, expect, output)
}

pub fn cert_octagons(bbox: i64, max_interior: i64, output: &Output) -> CmdResult {
    if bbox < 3 {
        bail!("--box must be at least 3");
    }
    let found = search_octagons_b8(bbox, max_interior);
    expected_empty("cert_octagons", "octagons", &found, max_interior == 0, output)
}

pub fn cert_min_area(n: usize, bbox: i64, output: &Output) -> CmdResult {
    if n < 3 {
        bail!("n must be at least 3");
    }
    let (area, poly) = min_area_ngon(n, bbox).ok_or_else(|| anyhow!("no strictly convex {n}-gon found"))?;
    match output.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Min<'a> {
                n: usize,
                area: String,
                witness: Listed<'a>,
            }
            let witness = Listed { vertices: &poly.vertices, pick: pick_data(&poly)? };
            emit_json(output, "cert_min_area", Min { n, area: format_rat(&area), witness })?;
        }
        Format::Csv => return Err(no_csv("cert min-area")),
        Format::Text => {
            emit(output, &format!("n = {n}: minimal area {} witness {:?}", format_rat(&area), poly.vertices))?
        }
    }
    Ok(Status::Ok)
}

pub fn cert_case1(range: i64, output: &Output) -> CmdResult {
    let sols = case1_solutions(range);
    let ok = sols.is_empty();
    match output.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Case1<'a> {
                range: i64,
                solutions: &'a [(i64, i64, i64, i64)],
            }
            emit_json(output, "cert_case1", Case1 { range, solutions: &sols })?;
        }
        Format::Csv => return Err(no_csv("cert case1")),
        Format::Text => {
            let mut out = String::new();
            for (m, n, k, l) in &sols {
                let _ = writeln!(out, "solution m={m} n={n} k={k} ℓ={l}");
            }
            let _ = writeln!(out, "range {range}: {} solutions", sols.len());
            emit(output, &out)?;
        }
    }
    Ok(status(ok))
}

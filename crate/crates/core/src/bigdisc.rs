//! Closed-form prototypes with strictly convex canonical octagons for every
//! discriminant `D ≥ 200`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{isqrt_u64, rat, QuadVal};
use crate::h2::{flowdown, octagon_of, spin, FlowdownH2, PrototypeH2};

pub const MIN_D: i64 = 200;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Scheme {
    Even,
    Odd1,
    Odd2,
}

impl Scheme {
    /// Divisor `n` in `a = ⌈(b+λ)/n⌉ − 1`.
    fn divisor(self) -> i64 {
        match self {
            Scheme::Even | Scheme::Odd1 => 3,
            Scheme::Odd2 => 4,
        }
    }

    fn e_offset(self) -> i64 {
        match self {
            Scheme::Even => 6,
            Scheme::Odd1 => 7,
            Scheme::Odd2 => 9,
        }
    }

    pub fn expected(self) -> (u64, u64) {
        match self {
            Scheme::Even | Scheme::Odd1 => (3, 2),
            Scheme::Odd2 => (4, 3),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BigDConstruction {
    pub scheme: Scheme,
    pub kappa: i64,
    pub prototype: PrototypeH2,
    pub lambda: QuadVal,
    pub expected_k: u64,
    pub expected_l: u64,
}

/// `κ` with `(2κ)² < D ≤ (2κ+2)²` for even `D`, `(2κ−1)² < D ≤ (2κ+1)²`
/// for odd `D`.
pub fn kappa_of(d: i64) -> i64 {
    assert!(d >= 2, "kappa_of needs D ≥ 2");
    let r = isqrt_u64((d - 1) as u64) as i64;
    if d % 2 == 0 {
        r / 2
    } else {
        (r + 1) / 2
    }
}

fn build(d: i64, scheme: Scheme) -> Result<BigDConstruction> {
    let kappa = kappa_of(d);
    let e = 2 * kappa - scheme.e_offset();
    let b = (d - e * e) / 4;
    let lam = crate::exactnum::lambda_of(d, e)?;
    let n = scheme.divisor();
    // a = ⌈v⌉ − 1 is the unique integer in [v − 1, v)
    let v = (&lam + b).scale(&rat(1, n));
    let ceil = -(-&v).floor_i64();
    let a = ceil - 1;
    let prototype = PrototypeH2::new(d, a, b, 1, e)?;
    let (expected_k, expected_l) = scheme.expected();
    Ok(BigDConstruction { scheme, kappa, prototype, lambda: lam, expected_k, expected_l })
}

/// One construction for even `D`, two (one per spin) for odd `D`.
pub fn construct(d: i64) -> Result<Vec<BigDConstruction>> {
    if d < MIN_D {
        return Err(Error::InvalidArgument(format!("D = {d} is below {MIN_D}, outside the proven range")));
    }
    match d.rem_euclid(4) {
        0 => Ok(vec![build(d, Scheme::Even)?]),
        1 => Ok(vec![build(d, Scheme::Odd1)?, build(d, Scheme::Odd2)?]),
        _ => Err(Error::InvalidArgument(format!("D = {d} is not 0 or 1 mod 4"))),
    }
}

/// The seven inequalities behind the flowdown of each scheme, in order.
pub fn verify_inequalities(c: &BigDConstruction) -> [bool; 7] {
    let d = c.prototype.radicand();
    let lam = &c.lambda;
    let q = |v: i64| QuadVal::from_int(d, v);
    let (a, b) = (q(c.prototype.a), q(c.prototype.b));
    let n = c.scheme.divisor();
    let m = n - 1;
    // Odd2 keeps two steps of a inside the strip: λ + 2a < b
    let steps = if c.scheme == Scheme::Odd2 { 2 } else { 1 };
    let first = (&b + lam).scale(&rat(1, n)) - (&b - lam).scale(&rat(1, m));
    let ma = &a * m;
    [
        first > q(1),
        lam * n < b,
        &b - lam < ma && ma < b,
        &a * n > b,
        a > *lam,
        lam + &(&a * steps) < b,
        &a * n - &b < *lam,
    ]
}

pub fn inequality_mask(bits: &[bool; 7]) -> u8 {
    bits.iter().enumerate().fold(0, |acc, (i, &ok)| acc | ((ok as u8) << i))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepRow {
    #[serde(rename = "D")]
    pub d: i64,
    pub scheme: Scheme,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub e: i64,
    pub k: Option<u64>,
    pub l: Option<u64>,
    pub convex: bool,
    pub spin: Option<u8>,
    pub inequalities: u8,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SweepReport {
    pub from: i64,
    pub to: i64,
    pub rows: Vec<SweepRow>,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Rows and failure messages for one discriminant.
type Checked = (Vec<SweepRow>, Vec<String>);

fn check_d(d: i64) -> Checked {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    let cons = match construct(d) {
        Ok(c) => c,
        Err(e) => return (rows, vec![format!("D={d}: {e}")]),
    };
    for c in &cons {
        let p = c.prototype;
        let bits = verify_inequalities(c);
        let (k, l) = match flowdown(&p) {
            FlowdownH2::Nondegenerate { k, l } => (Some(k), Some(l)),
            FlowdownH2::Degenerate { .. } => (None, None),
        };
        let convex = octagon_of(&p).map(|o| o.strictly_convex).unwrap_or(false);
        let spin = spin(&p).ok().map(|s| s.parity);
        if bits.iter().any(|b| !b) {
            failures.push(format!("D={d} {:?}: inequality mask {:07b}", c.scheme, inequality_mask(&bits)));
        }
        if (k, l) != (Some(c.expected_k), Some(c.expected_l)) {
            failures.push(format!(
                "D={d} {:?}: flowdown {k:?},{l:?} ≠ expected ({},{})",
                c.scheme, c.expected_k, c.expected_l
            ));
        }
        if !convex {
            failures.push(format!("D={d} {:?}: octagon of {p} not strictly convex", c.scheme));
        }
        rows.push(SweepRow {
            d,
            scheme: c.scheme,
            a: p.a,
            b: p.b,
            c: p.c,
            e: p.e,
            k,
            l,
            convex,
            spin,
            inequalities: inequality_mask(&bits),
        });
    }
    if d.rem_euclid(8) == 1 && rows.len() == 2 && rows[0].spin == rows[1].spin {
        failures.push(format!("D={d}: both odd constructions have spin {:?}", rows[0].spin));
    }
    (rows, failures)
}

/// Constructs and checks every admissible `D` in `from ..= to`.
pub fn sweep(from: i64, to: i64) -> Result<SweepReport> {
    if from < MIN_D || from > to {
        return Err(Error::InvalidArgument(format!("sweep needs {MIN_D} ≤ from ≤ to, got {from}..{to}")));
    }
    let mut parts: Vec<(i64, Checked)> =
        (from..=to).into_par_iter().filter(|d| d.rem_euclid(4) <= 1).map(|d| (d, check_d(d))).collect();
    parts.sort_by_key(|(d, _)| *d);
    let mut report = SweepReport { from, to, ..Default::default() };
    for (_, (rows, failures)) in parts {
        report.rows.extend(rows);
        report.failures.extend(failures);
    }
    Ok(report)
}

//! Splitting prototypes in `H(2)`, the flowdown to the simple cylinder, and
//! the canonical octagon.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{is_perfect_square, isqrt_u64, lambda_of, QuadVal};
use crate::geometry::{convexity_of_vertices, Convexity, Point};

/// Orientation of the spin labels. With `false`, parity 0 is reported as
/// the `_0` class.
pub const SPIN_LABEL_FLIP: bool = false;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrototypeH2 {
    #[serde(rename = "D")]
    pub d: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub e: i64,
}

impl PrototypeH2 {
    /// Builds a prototype after checking every defining constraint.
    pub fn new(d: i64, a: i64, b: i64, c: i64, e: i64) -> Result<Self> {
        let p = PrototypeH2 { d, a, b, c, e };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let PrototypeH2 { d, a, b, c, e } = *self;
        let fail = |why: &str| Err(Error::InvalidPrototype(format!("{self}: {why}")));
        if b <= 0 || c <= 0 {
            return fail("b and c must be positive");
        }
        if d != e * e + 4 * b * c {
            return fail("D ≠ e² + 4bc");
        }
        if c + e >= b {
            return fail("c + e ≥ b");
        }
        if a < 0 || a >= b {
            return fail("a outside [0, b)");
        }
        if a.gcd(&b).gcd(&c).gcd(&e) != 1 {
            return fail("gcd(a,b,c,e) ≠ 1");
        }
        Ok(())
    }

    pub fn radicand(&self) -> u64 {
        self.d as u64
    }

    pub fn lambda(&self) -> QuadVal {
        lambda_of(self.d, self.e).expect("valid prototype has positive λ")
    }

    /// The key used for deterministic ordering: `(e, b, c, a)`.
    pub fn sort_key(&self) -> (i64, i64, i64, i64) {
        (self.e, self.b, self.c, self.a)
    }

    /// Prototype polygon: the `λ × λ` square below the parallelogram with
    /// base `b` and top shifted by `a`, counterclockwise.
    pub fn outline(&self) -> Vec<Point> {
        let d = self.radicand();
        let lam = self.lambda();
        let q = |v: i64| QuadVal::from_int(d, v);
        vec![
            Point::new(q(0), q(0)),
            Point::new(q(0), -&lam),
            Point::new(lam.clone(), -&lam),
            Point::new(lam.clone(), q(0)),
            Point::new(q(self.b), q(0)),
            Point::new(q(self.a + self.b), q(self.c)),
            Point::new(&lam + self.a, q(self.c)),
            Point::new(q(self.a), q(self.c)),
        ]
    }

    /// `λ² + bc`, the area of the prototype surface.
    pub fn area(&self) -> QuadVal {
        let lam = self.lambda();
        &lam * &lam + self.b * self.c
    }
}

impl fmt::Display for PrototypeH2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.d, self.a, self.b, self.c, self.e)
    }
}

/// All prototypes of discriminant `D`, sorted by `(e, b, c, a)`.
pub fn enumerate_prototypes(d: i64) -> Vec<PrototypeH2> {
    if d < 5 {
        log::warn!("no prototypes below discriminant 5 (D = {d})");
        return Vec::new();
    }
    let mut out = Vec::new();
    let r = isqrt_u64(d as u64) as i64;
    for e in -r..=r {
        if e * e >= d || (d - e * e) % 4 != 0 {
            continue;
        }
        let n = (d - e * e) / 4;
        for b in 1..=n {
            if n % b != 0 {
                continue;
            }
            let c = n / b;
            if c + e >= b {
                continue;
            }
            for a in 0..b {
                if a.gcd(&b).gcd(&c).gcd(&e) == 1 {
                    out.push(PrototypeH2 { d, a, b, c, e });
                }
            }
        }
    }
    out.sort_by_key(|p| p.sort_key());
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Prong {
    First,
    Second,
    Third,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Endpoint {
    Zero,
    Lambda,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum FlowdownH2 {
    Nondegenerate { k: u64, l: u64 },
    Degenerate { prong: Prong, hit: Endpoint },
}

/// Walks `R_b(seed + j·a)` for `j = 1, 2, …` until it lands in `[0, λ]`.
fn hit_h2(seed: &QuadVal, a: i64, b: i64, lam: &QuadVal) -> std::result::Result<(u64, QuadVal), Endpoint> {
    let zero = QuadVal::zero(lam.radicand());
    // the orbit of a rotation by a on Z/b returns within b steps
    for j in 1..=b {
        let v = (seed + j * a).reduce_mod(b);
        if v.is_zero() {
            return Err(Endpoint::Zero);
        }
        if v == *lam {
            return Err(Endpoint::Lambda);
        }
        if v > zero && v < *lam {
            return Ok((j as u64, v));
        }
    }
    unreachable!("prong of {a} mod {b} did not enter [0, λ] within b steps")
}

pub fn flowdown(p: &PrototypeH2) -> FlowdownH2 {
    flowdown_values(p).0
}

/// Flowdown plus the landing points `R_b(ka)` and `R_b(λ+ℓa)`.
pub fn flowdown_values(p: &PrototypeH2) -> (FlowdownH2, Option<(QuadVal, QuadVal)>) {
    let lam = p.lambda();
    let zero = QuadVal::zero(p.radicand());
    let first = hit_h2(&zero, p.a, p.b, &lam);
    let second = hit_h2(&lam, p.a, p.b, &lam);
    match (first, second) {
        (Err(hit), _) => (FlowdownH2::Degenerate { prong: Prong::First, hit }, None),
        (_, Err(hit)) => (FlowdownH2::Degenerate { prong: Prong::Second, hit }, None),
        (Ok((k, x2)), Ok((l, x1))) => (FlowdownH2::Nondegenerate { k, l }, Some((x2, x1))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalOctagon {
    pub prototype: PrototypeH2,
    pub k: u64,
    pub l: u64,
    pub lambda: QuadVal,
    pub x1: QuadVal,
    pub y1: QuadVal,
    pub x2: QuadVal,
    pub y2: QuadVal,
    pub vertices: Vec<Point>,
    pub strictly_convex: bool,
    pub weakly_convex: bool,
}

/// Builds the canonical octagon from the hitting indices `k` and `ℓ`.
pub fn canonical_octagon(p: &PrototypeH2, k: u64, l: u64) -> Result<CanonicalOctagon> {
    let lam = p.lambda();
    let d = p.radicand();
    let x1 = (&lam + (l as i64) * p.a).reduce_mod(p.b);
    let x2 = QuadVal::from_int(d, (k as i64) * p.a).reduce_mod(p.b);
    for (v, name) in [(&x1, "ℓ"), (&x2, "k")] {
        if !(v.is_positive() && *v < lam) {
            return Err(Error::Degenerate(format!("{p}: index {name} does not land in (0, λ)")));
        }
    }
    let y1 = QuadVal::from_int(d, l as i64 * p.c);
    let y2 = QuadVal::from_int(d, k as i64 * p.c);
    let vertices = octagon_vertices(&lam, &x1, &y1, &x2, &y2);
    let strictly_convex = check_strict_convexity_octagon(&x1, &y1, &x2, &y2, &lam);
    let weakly_convex = convexity_of_vertices(&vertices) != Convexity::Nonconvex;
    Ok(CanonicalOctagon { prototype: *p, k, l, lambda: lam, x1, y1, x2, y2, vertices, strictly_convex, weakly_convex })
}

/// Runs the flowdown and builds the octagon, or reports the degeneracy.
pub fn octagon_of(p: &PrototypeH2) -> Result<CanonicalOctagon> {
    match flowdown(p) {
        FlowdownH2::Nondegenerate { k, l } => canonical_octagon(p, k, l),
        FlowdownH2::Degenerate { prong, hit } => Err(Error::Degenerate(format!("{p}: {prong:?} prong hits {hit:?}"))),
    }
}

pub fn octagon_vertices(lam: &QuadVal, x1: &QuadVal, y1: &QuadVal, x2: &QuadVal, y2: &QuadVal) -> Vec<Point> {
    let zero = QuadVal::zero(lam.radicand());
    let nl = -lam;
    vec![
        Point::new(zero.clone(), zero.clone()),
        Point::new(zero.clone(), nl.clone()),
        Point::new(lam - x2, &nl - y2),
        Point::new(lam - x1, &nl - y1),
        Point::new(lam.clone(), nl),
        Point::new(lam.clone(), zero),
        Point::new(x2.clone(), y2.clone()),
        Point::new(x1.clone(), y1.clone()),
    ]
}

pub fn check_strict_convexity_octagon(x1: &QuadVal, y1: &QuadVal, x2: &QuadVal, y2: &QuadVal, lam: &QuadVal) -> bool {
    let det = x2 * y1 - x1 * y2;
    det.is_positive() && (&det - lam * &(y1 - y2)).is_positive()
}

/// Conductor of the quadratic order of discriminant `D`; `√D` for squares.
pub fn conductor(d: i64) -> i64 {
    let r = isqrt_u64(d as u64) as i64;
    if r * r == d {
        return r;
    }
    (1..=r).rev().find(|f| d % (f * f) == 0 && (d / (f * f)).rem_euclid(4) <= 1).unwrap_or(1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinClass {
    pub parity: u8,
    pub f_used: i64,
}

pub fn spin(p: &PrototypeH2) -> Result<SpinClass> {
    if p.d.rem_euclid(8) != 1 {
        return Err(Error::InvalidArgument(format!("spin needs D ≡ 1 mod 8, got {}", p.d)));
    }
    let f = conductor(p.d);
    let v = (p.e - f) / 2 + (p.c + 1) * (p.a + p.b + p.a * p.b);
    let parity = v.rem_euclid(2) as u8;
    Ok(SpinClass { parity, f_used: f })
}

/// Label index (0 or 1) of a spin parity after applying the frozen
/// orientation.
pub fn spin_label(parity: u8) -> u8 {
    if SPIN_LABEL_FLIP {
        1 - parity
    } else {
        parity
    }
}

/// Whether `D` carries two spin classes. `D = 9` has only one prototype
/// orbit and is reported as a single symbol.
pub fn has_two_spins(d: i64) -> bool {
    d.rem_euclid(8) == 1 && d > 9
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecordH2 {
    pub symbol: String,
    #[serde(rename = "D")]
    pub d: i64,
    pub spin: Option<u8>,
    pub prototypes: usize,
    pub degenerate: usize,
    pub has_strictly_convex: bool,
    pub has_convex: bool,
    pub witness: Option<PrototypeH2>,
}

/// Verdict for one prototype, as shown in the text grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cell {
    Convex,
    Nonconvex,
    Degenerate,
}

pub fn classify(p: &PrototypeH2) -> (Cell, Option<CanonicalOctagon>) {
    match octagon_of(p) {
        Ok(oct) if oct.strictly_convex => (Cell::Convex, Some(oct)),
        Ok(oct) => (Cell::Nonconvex, Some(oct)),
        Err(_) => (Cell::Degenerate, None),
    }
}

/// Classifies every symbol of a single discriminant.
pub fn scan_discriminant(d: i64) -> Vec<ScanRecordH2> {
    let protos = enumerate_prototypes(d);
    if protos.is_empty() {
        return Vec::new();
    }
    let square = is_perfect_square(d as u64);
    let cells: Vec<(PrototypeH2, Cell)> = protos.iter().map(|p| (*p, classify(p).0)).collect();
    let record = |symbol: String, spin: Option<u8>, members: Vec<&(PrototypeH2, Cell)>| {
        let witness = members.iter().find(|(_, c)| *c == Cell::Convex).map(|(p, _)| *p);
        ScanRecordH2 {
            symbol,
            d,
            spin,
            prototypes: members.len(),
            degenerate: members.iter().filter(|(_, c)| *c == Cell::Degenerate).count(),
            has_strictly_convex: witness.is_some(),
            has_convex: witness.is_some() || square,
            witness,
        }
    };
    if has_two_spins(d) {
        let mut by_label: BTreeMap<u8, Vec<&(PrototypeH2, Cell)>> = BTreeMap::new();
        by_label.insert(0, Vec::new());
        by_label.insert(1, Vec::new());
        for item in &cells {
            let label = spin_label(spin(&item.0).expect("D ≡ 1 mod 8").parity);
            by_label.get_mut(&label).unwrap().push(item);
        }
        by_label.into_iter().map(|(label, members)| record(format!("{d}_{label}"), Some(label), members)).collect()
    } else {
        vec![record(d.to_string(), None, cells.iter().collect())]
    }
}

/// Scans `dmin ..= dmax` in parallel; records come back in symbol order.
pub fn scan_h2(dmin: i64, dmax: i64) -> Vec<ScanRecordH2> {
    let mut chunks: Vec<(i64, Vec<ScanRecordH2>)> =
        (dmin..=dmax).into_par_iter().map(|d| (d, scan_discriminant(d))).collect();
    chunks.sort_by_key(|(d, _)| *d);
    chunks.into_iter().flat_map(|(_, r)| r).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(d: i64, a: i64, b: i64, c: i64, e: i64) -> PrototypeH2 {
        PrototypeH2::new(d, a, b, c, e).unwrap()
    }

    #[test]
    fn prototypes_of_13_and_9() {
        let got: Vec<_> = enumerate_prototypes(13).iter().map(|p| (p.a, p.b, p.c, p.e)).collect();
        assert_eq!(
            got,
            vec![(0, 1, 1, -3), (0, 3, 1, -1), (1, 3, 1, -1), (2, 3, 1, -1), (0, 3, 1, 1), (1, 3, 1, 1), (2, 3, 1, 1)]
        );
        let nine: Vec<_> = enumerate_prototypes(9).iter().map(|p| (p.a, p.b, p.c, p.e)).collect();
        assert_eq!(nine, vec![(0, 2, 1, -1), (1, 2, 1, -1)]);
        assert!(enumerate_prototypes(7).is_empty());
        assert!(enumerate_prototypes(4).is_empty());
    }

    #[test]
    fn rejects_invalid() {
        assert!(PrototypeH2::new(13, 3, 3, 1, -1).is_err());
        assert!(PrototypeH2::new(13, 0, 3, 1, 0).is_err());
        assert!(PrototypeH2::new(20, 0, 2, 2, -2).is_err());
    }

    #[test]
    fn flowdown_examples() {
        assert_eq!(flowdown(&p(13, 1, 3, 1, -1)), FlowdownH2::Nondegenerate { k: 1, l: 2 });
        assert!(matches!(flowdown(&p(9, 0, 2, 1, -1)), FlowdownH2::Degenerate { hit: Endpoint::Zero, .. }));
        assert!(matches!(flowdown(&p(9, 1, 2, 1, -1)), FlowdownH2::Degenerate { hit: Endpoint::Lambda, .. }));
    }

    #[test]
    fn octagon_13() {
        let oct = octagon_of(&p(13, 1, 3, 1, -1)).unwrap();
        assert_eq!(oct.x1, QuadVal::new(13, crate::rat(-3, 2), crate::rat(1, 2)));
        assert_eq!(oct.x2, QuadVal::from_int(13, 1));
        assert_eq!(oct.y1, QuadVal::from_int(13, 2));
        assert_eq!(oct.y2, QuadVal::from_int(13, 1));
        let hh = &oct.vertices[2];
        assert!((hh.x.to_f64() - 0.3028).abs() < 5e-5);
        assert!((hh.y.to_f64() + 2.3028).abs() < 5e-5);
        assert!(oct.strictly_convex);
        let area = crate::geometry::shoelace_area(&oct.vertices);
        assert_eq!(area, QuadVal::new(13, crate::rat(13, 2), crate::rat(-1, 2)));
    }

    #[test]
    fn octagon_12_not_convex() {
        let oct = octagon_of(&p(12, 1, 3, 1, 0)).unwrap();
        assert!(!oct.strictly_convex);
        assert_eq!(convexity_of_vertices(&oct.vertices), Convexity::Nonconvex);
    }

    #[test]
    fn convexity_predicate_degenerate_input() {
        let d = 13;
        let one = QuadVal::one(d);
        assert!(!check_strict_convexity_octagon(&one, &one, &one, &one, &lambda_of(13, -1).unwrap()));
    }

    #[test]
    fn conductors_and_spin() {
        assert_eq!(conductor(17), 1);
        assert_eq!(conductor(49), 7);
        assert_eq!(conductor(12), 1);
        assert_eq!(conductor(20), 2);
        assert_eq!(conductor(45), 3);
        assert_eq!(conductor(32), 2);
        assert!(spin(&p(13, 1, 3, 1, -1)).is_err());
        // c = 1, e ↦ e + 2, same a+b+ab parity: spins differ
        let s1 = spin(&p(201, 16, 30, 1, 9)).unwrap();
        let s2 = spin(&p(201, 16, 38, 1, 7)).unwrap();
        assert_ne!(s1.parity, s2.parity);
    }

    #[test]
    fn small_scan() {
        let r = scan_h2(5, 5);
        assert_eq!(r.len(), 1);
        assert!(!r[0].has_strictly_convex);
        assert!(scan_h2(7, 7).is_empty());
        let r17 = scan_h2(17, 17);
        assert_eq!(r17.iter().map(|r| r.symbol.as_str()).collect::<Vec<_>>(), ["17_0", "17_1"]);
    }
}

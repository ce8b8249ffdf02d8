//! Prototypes in `H(1,1)` with rel parameters `(x, y)`, the three-prong
//! flowdown, the canonical decagon, grid searches, and splitting a convex
//! octagon into a convex decagon.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{format_rat, rat, QuadVal, Rat};
use crate::geometry::{convexity_of_vertices, cross, shoelace_area, Convexity, Point};
use crate::h2::{enumerate_prototypes, Endpoint, Prong, PrototypeH2};

pub const DEFAULT_MAX_ITER: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrototypeH11 {
    pub base: PrototypeH2,
    #[serde(with = "rat_string")]
    pub x: Rat,
    #[serde(with = "rat_string")]
    pub y: Rat,
}

pub(crate) mod rat_string {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rat(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let s = String::deserialize(d)?;
        crate::exactnum::parse_rat(&s).map_err(serde::de::Error::custom)
    }
}

/// `c/λ = (√D − e)/(2b)`, from `λ(√D − e) = (D − e²)/2 = 2bc`.
pub fn c_over_lambda(p: &PrototypeH2) -> QuadVal {
    QuadVal::new(p.radicand(), rat(-p.e, 2 * p.b), rat(1, 2 * p.b))
}

/// Upper bound `λc/(λ+c)` for the rel height `y`.
pub fn y_bound(p: &PrototypeH2) -> QuadVal {
    let lam = p.lambda();
    let c = QuadVal::from_int(p.radicand(), p.c);
    &lam * &c / (&lam + &c)
}

impl PrototypeH11 {
    pub fn new(base: PrototypeH2, x: Rat, y: Rat) -> Result<Self> {
        base.validate()?;
        let d = base.radicand();
        let xq = QuadVal::from_rat(d, x.clone());
        let yq = QuadVal::from_rat(d, y.clone());
        let xmax = QuadVal::from_int(d, base.b) - base.lambda();
        if x.is_negative() || xq >= xmax {
            return Err(Error::InvalidPrototype(format!("{base}: x = {} outside [0, b−λ)", format_rat(&x))));
        }
        if y.is_negative() || yq >= y_bound(&base) {
            return Err(Error::InvalidPrototype(format!("{base}: y = {} outside [0, λc/(λ+c))", format_rat(&y))));
        }
        Ok(PrototypeH11 { base, x, y })
    }

    pub fn from_parts(d: i64, a: i64, b: i64, c: i64, e: i64, x: Rat, y: Rat) -> Result<Self> {
        Self::new(PrototypeH2::new(d, a, b, c, e)?, x, y)
    }

    pub fn radicand(&self) -> u64 {
        self.base.radicand()
    }

    pub fn lambda(&self) -> QuadVal {
        self.base.lambda()
    }

    fn xq(&self) -> QuadVal {
        QuadVal::from_rat(self.radicand(), self.x.clone())
    }

    fn yq(&self) -> QuadVal {
        QuadVal::from_rat(self.radicand(), self.y.clone())
    }

    /// `s = R_b(a + x(1 + c/λ))` and `t = c − y(1 + c/λ)`.
    pub fn s_t(&self) -> (QuadVal, QuadVal) {
        let d = self.radicand();
        let g = c_over_lambda(&self.base) + 1;
        let s = (QuadVal::from_int(d, self.base.a) + g.scale(&self.x)).reduce_mod(self.base.b);
        let t = QuadVal::from_int(d, self.base.c) - g.scale(&self.y);
        (s, t)
    }

    /// Counterclockwise outline: square, middle cylinder of height `y`,
    /// top cylinder of height `t`.
    pub fn outline(&self) -> Vec<Point> {
        let d = self.radicand();
        let lam = self.lambda();
        let (s, t) = self.s_t();
        let (x, y) = (self.xq(), self.yq());
        let q = |v: i64| QuadVal::from_int(d, v);
        let b = self.base.b;
        vec![
            Point::new(q(0), q(0)),
            Point::new(q(0), -&lam),
            Point::new(lam.clone(), -&lam),
            Point::new(lam.clone(), q(0)),
            Point::new(&lam + &x, -&y),
            Point::new(&x + b, -&y),
            Point::new(q(b), q(0)),
            Point::new(&s + b, t.clone()),
            Point::new(&s + &lam, t.clone()),
            Point::new(s, t),
        ]
    }

    /// `λ² + bc − y·√D`, the area enclosed by [`Self::outline`].
    pub fn area(&self) -> QuadVal {
        self.base.area() - QuadVal::sqrt_d(self.radicand()).scale(&self.y)
    }
}

impl fmt::Display for PrototypeH11 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} x={} y={}", self.base, format_rat(&self.x), format_rat(&self.y))
    }
}

/// First return of downward vertical flow to the bottom of the middle
/// cylinder, on `[λ, b]`.
///
/// Leaves starting over `[λ, λ+x)` exit through the sheared right side of
/// the middle cylinder and come back shifted by `−λ` relative to the rest.
#[derive(Clone, Debug)]
pub struct ReturnMap {
    pub b: i64,
    pub lambda: QuadVal,
    pub corner: QuadVal,
    shift_far: QuadVal,
    shift_near: QuadVal,
}

/// The return map hit the corner `λ + x`, a cone point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CornerHit;

impl ReturnMap {
    pub fn new(p: &PrototypeH11, s: &QuadVal) -> Self {
        let lam = p.lambda();
        let x = p.xq();
        let shift_far = s - &x;
        let shift_near = &shift_far - &lam;
        ReturnMap { b: p.base.b, corner: &lam + &x, lambda: lam, shift_far, shift_near }
    }

    pub fn apply(&self, z: &QuadVal) -> std::result::Result<QuadVal, CornerHit> {
        match z.cmp_exact(&self.corner) {
            std::cmp::Ordering::Equal => Err(CornerHit),
            std::cmp::Ordering::Greater => Ok((z + &self.shift_far).reduce_mod(self.b)),
            std::cmp::Ordering::Less => Ok((z + &self.shift_near).reduce_mod(self.b)),
        }
    }

    /// `z, R(z), R²(z), …` for `n` steps, stopping early at a corner.
    pub fn trace(&self, z: &QuadVal, n: usize) -> Vec<QuadVal> {
        let mut out = vec![z.clone()];
        let mut cur = z.clone();
        for _ in 0..n {
            match self.apply(&cur) {
                Ok(next) => cur = next,
                Err(CornerHit) => break,
            }
            out.push(cur.clone());
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum FlowdownH11 {
    Nondegenerate { k: u64, l: u64, m: u64 },
    Degenerate { reason: String },
    Undecided { prong: Prong, cap: u64 },
}

enum ProngEnd {
    Landed(u64, QuadVal),
    Hit(Endpoint),
    Corner,
    Cap,
}

fn run_prong(map: &ReturnMap, start: QuadVal, start_index: u64, cap: u64) -> ProngEnd {
    let lam = &map.lambda;
    let mut z = start;
    let mut j = start_index;
    loop {
        if !z.is_negative() && z <= *lam {
            if z.is_zero() {
                return ProngEnd::Hit(Endpoint::Zero);
            }
            if z == *lam {
                return ProngEnd::Hit(Endpoint::Lambda);
            }
            return ProngEnd::Landed(j, z);
        }
        if j >= cap {
            return ProngEnd::Cap;
        }
        z = match map.apply(&z) {
            Ok(v) => v,
            Err(CornerHit) => return ProngEnd::Corner,
        };
        j += 1;
    }
}

/// Landing points `(x1, x2, x3)` of the second, third and first prongs.
pub type Landings = (QuadVal, QuadVal, QuadVal);

pub fn flowdown11(p: &PrototypeH11, max_iter: u64) -> Result<FlowdownH11> {
    Ok(flowdown11_values(p, max_iter)?.0)
}

pub fn flowdown11_values(p: &PrototypeH11, max_iter: u64) -> Result<(FlowdownH11, Option<Landings>)> {
    if max_iter == 0 {
        return Err(Error::InvalidArgument("max_iter must be positive".into()));
    }
    let degenerate = |reason: &str| Ok((FlowdownH11::Degenerate { reason: reason.to_string() }, None));
    if p.x.is_zero() {
        return degenerate("x = 0");
    }
    let (s, _) = p.s_t();
    let lam = p.lambda();
    let b = p.base.b;
    if s.is_zero() || s == lam || s == QuadVal::from_int(p.radicand(), b) - &lam {
        return degenerate("s ∈ {0, λ, b−λ}");
    }
    let map = ReturnMap::new(p, &s);
    let third_start = match map.apply(&QuadVal::from_int(p.radicand(), b)) {
        Ok(v) => v,
        Err(CornerHit) => return degenerate("third prong hits a cone point"),
    };
    let prongs =
        [(Prong::First, s.clone(), 0), (Prong::Second, (&s + &lam).reduce_mod(b), 0), (Prong::Third, third_start, 1)];
    let mut landed = Vec::with_capacity(3);
    for (prong, start, j0) in prongs {
        match run_prong(&map, start, j0, max_iter) {
            ProngEnd::Landed(j, v) => landed.push((j, v)),
            ProngEnd::Hit(end) => return degenerate(&format!("{prong:?} prong hits {end:?}").to_lowercase()),
            ProngEnd::Corner => return degenerate(&format!("{prong:?} prong hits a cone point").to_lowercase()),
            ProngEnd::Cap => return Ok((FlowdownH11::Undecided { prong, cap: max_iter }, None)),
        }
    }
    let (m, x2) = landed.pop().unwrap();
    let (l, x1) = landed.pop().unwrap();
    let (k, x3) = landed.pop().unwrap();
    Ok((FlowdownH11::Nondegenerate { k, l, m }, Some((x1, x2, x3))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalDecagon {
    pub prototype: PrototypeH11,
    pub k: u64,
    pub l: u64,
    pub m: u64,
    pub lambda: QuadVal,
    pub s: QuadVal,
    pub t: QuadVal,
    pub x1: QuadVal,
    pub y1: QuadVal,
    pub x2: QuadVal,
    pub y2: QuadVal,
    pub x3: QuadVal,
    pub y3: QuadVal,
    pub vertices: Vec<Point>,
    pub strictly_convex: bool,
}

/// Runs the flowdown and builds the decagon.
pub fn canonical_decagon(p: &PrototypeH11, max_iter: u64) -> Result<CanonicalDecagon> {
    let (flow, landings) = flowdown11_values(p, max_iter)?;
    let (k, l, m) = match flow {
        FlowdownH11::Nondegenerate { k, l, m } => (k, l, m),
        FlowdownH11::Degenerate { reason } => return Err(Error::Degenerate(format!("{p}: {reason}"))),
        FlowdownH11::Undecided { prong, cap } => {
            return Err(Error::Degenerate(format!("{p}: {prong:?} prong undecided after {cap} steps")))
        }
    };
    let (x1, x2, x3) = landings.unwrap();
    let (s, t) = p.s_t();
    let lam = p.lambda();
    let period = &p.yq() + &t;
    let y1 = &period * (l as i64) + &t;
    let y2 = &period * (m as i64);
    let y3 = &period * (k as i64) + &t;
    let vertices = decagon_vertices(&lam, [&x1, &x2, &x3], [&y1, &y2, &y3]);
    let strictly_convex = check_strict_convexity_decagon(&x1, &y1, &x2, &y2, &x3, &y3, &lam);
    Ok(CanonicalDecagon {
        prototype: p.clone(),
        k,
        l,
        m,
        lambda: lam,
        s,
        t,
        x1,
        y1,
        x2,
        y2,
        x3,
        y3,
        vertices,
        strictly_convex,
    })
}

pub fn decagon_vertices(lam: &QuadVal, xs: [&QuadVal; 3], ys: [&QuadVal; 3]) -> Vec<Point> {
    let zero = QuadVal::zero(lam.radicand());
    let nl = -lam;
    let [x1, x2, x3] = xs;
    let [y1, y2, y3] = ys;
    vec![
        Point::new(zero.clone(), zero.clone()),
        Point::new(zero.clone(), nl.clone()),
        Point::new(lam - x3, &nl - y3),
        Point::new(lam - x2, &nl - y2),
        Point::new(lam - x1, &nl - y1),
        Point::new(lam.clone(), nl),
        Point::new(lam.clone(), zero),
        Point::new(x3.clone(), y3.clone()),
        Point::new(x2.clone(), y2.clone()),
        Point::new(x1.clone(), y1.clone()),
    ]
}

/// Strict convexity of the canonical decagon at its three free vertex
/// pairs, stated for the counterclockwise cycle.
pub fn check_strict_convexity_decagon(
    x1: &QuadVal,
    y1: &QuadVal,
    x2: &QuadVal,
    y2: &QuadVal,
    x3: &QuadVal,
    y3: &QuadVal,
    lam: &QuadVal,
) -> bool {
    let first = x2 * y1 - x1 * y2;
    let middle = x2 * y1 - x3 * y1 + x3 * y2 - x1 * y2 + x1 * y3 - x2 * y3;
    let last = x3 * y2 - x2 * y3 - lam * &(y2 - y3);
    first.is_positive() && middle.is_positive() && last.is_positive()
}

/// Grid bounds `X ≤ b − λ` and `Y ≤ λc/(λ+c)`, truncated to denominators
/// `10·Nx` and `10·Ny`.
pub fn grid_bounds(p: &PrototypeH2, nx: u64, ny: u64) -> (Rat, Rat) {
    let d = p.radicand();
    let trunc = |v: QuadVal, n: u64| {
        let n = BigInt::from(10 * n);
        let fl = v.scale(&Rat::from_integer(n.clone())).floor();
        Rat::new(fl, n)
    };
    let xmax = QuadVal::from_int(d, p.b) - p.lambda();
    (trunc(xmax, nx), trunc(y_bound(p), ny))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridHit {
    pub j: u64,
    pub i: u64,
    pub decagon: CanonicalDecagon,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct GridReport {
    #[serde(rename = "D")]
    pub d: i64,
    pub nx: u64,
    pub ny: u64,
    pub max_iter: u64,
    pub prototypes: usize,
    pub points: u64,
    pub degenerate: u64,
    pub undecided: u64,
    pub nonconvex: u64,
    pub hits: Vec<GridHit>,
}

enum PointVerdict {
    Hit(Box<CanonicalDecagon>),
    Nonconvex,
    Degenerate,
    Undecided,
}

fn evaluate(p: &PrototypeH11, max_iter: u64) -> PointVerdict {
    match flowdown11(p, max_iter).expect("max_iter checked by caller") {
        FlowdownH11::Degenerate { .. } => PointVerdict::Degenerate,
        FlowdownH11::Undecided { .. } => PointVerdict::Undecided,
        FlowdownH11::Nondegenerate { .. } => {
            let dec = canonical_decagon(p, max_iter).expect("nondegenerate flowdown");
            if dec.strictly_convex {
                PointVerdict::Hit(Box::new(dec))
            } else {
                PointVerdict::Nonconvex
            }
        }
    }
}

/// Evenly spaced search over `x = jX/Nx` (`j = 1..Nx−1`) and `y = iY/Ny`
/// (`i = 0..Ny−1`) for every prototype of `D`. With `first_hit`, each
/// prototype stops at its first strictly convex point in `(j, i)` order.
pub fn grid_search(d: i64, nx: u64, ny: u64, max_iter: u64, first_hit: bool) -> Result<GridReport> {
    if nx == 0 || ny == 0 {
        return Err(Error::InvalidArgument("grid sizes must be at least 1".into()));
    }
    if max_iter == 0 {
        return Err(Error::InvalidArgument("max_iter must be positive".into()));
    }
    let protos = if d >= 5 { enumerate_prototypes(d) } else { Vec::new() };
    let mut report = GridReport { d, nx, ny, max_iter, prototypes: protos.len(), ..Default::default() };
    for proto in &protos {
        let (xb, yb) = grid_bounds(proto, nx, ny);
        let rows: Vec<(u64, Vec<(u64, PointVerdict)>)> = (1..nx)
            .into_par_iter()
            .map(|j| {
                let x = &xb * rat(j as i64, nx as i64);
                let mut row = Vec::with_capacity(ny as usize);
                for i in 0..ny {
                    let y = &yb * rat(i as i64, ny as i64);
                    let verdict = match PrototypeH11::new(*proto, x.clone(), y) {
                        Ok(p) => evaluate(&p, max_iter),
                        Err(_) => PointVerdict::Degenerate,
                    };
                    let hit = matches!(verdict, PointVerdict::Hit(_));
                    row.push((i, verdict));
                    if hit && first_hit {
                        break;
                    }
                }
                (j, row)
            })
            .collect();
        let mut found = false;
        'rows: for (j, row) in rows {
            for (i, verdict) in row {
                report.points += 1;
                match verdict {
                    PointVerdict::Hit(dec) => {
                        report.hits.push(GridHit { j, i, decagon: *dec });
                        found = true;
                    }
                    PointVerdict::Nonconvex => report.nonconvex += 1,
                    PointVerdict::Degenerate => report.degenerate += 1,
                    PointVerdict::Undecided => report.undecided += 1,
                }
                if found && first_hit {
                    break 'rows;
                }
            }
        }
    }
    Ok(report)
}

/// Decagon obtained by splitting the cone point of a convex octagon.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SplitDecagon {
    pub u: Point,
    #[serde(with = "rat_string")]
    pub epsilon: Rat,
    pub vertices: Vec<Point>,
}

/// Edge `e_j = v_{j+1} − v_j` of a closed cycle.
fn edge(vs: &[Point], j: usize) -> Point {
    let n = vs.len();
    vs[(j + 1) % n].sub(&vs[j % n])
}

/// `e_0 ∧ u < 0 < e_7 ∧ u`: `u` points strictly into the cone spanned by
/// the two edges meeting at `v_0`.
pub fn is_admissible_direction(octagon: &[Point], u: &Point) -> bool {
    octagon.len() == 8 && cross(&edge(octagon, 0), u).is_negative() && cross(&edge(octagon, 7), u).is_positive()
}

/// `e_0 + e_7`, which always satisfies the admissibility test for a
/// strictly convex octagon.
pub fn default_direction(octagon: &[Point]) -> Point {
    edge(octagon, 0).add(&edge(octagon, 7))
}

fn split_vertices(v: &[Point], u: &Point, eps: &Rat) -> Vec<Point> {
    let shift = Point::new(u.x.scale(eps), u.y.scale(eps));
    let w = |j: usize| v[j].add(&shift);
    vec![v[0].clone(), w(0), v[1].clone(), w(2), v[3].clone(), w(4), v[4].clone(), w(5), v[6].clone(), w(7)]
}

/// Splits `v_0` and `v_4` along `u`, moving `v_2, v_5, v_7` by `ε·u`.
pub fn split_octagon(octagon: &[Point], u: &Point, eps: &Rat) -> Result<SplitDecagon> {
    if octagon.len() != 8 {
        return Err(Error::InvalidArgument(format!("expected 8 vertices, got {}", octagon.len())));
    }
    if convexity_of_vertices(octagon) != Convexity::Strict {
        return Err(Error::InvalidArgument("octagon is not strictly convex".into()));
    }
    if !is_admissible_direction(octagon, u) {
        return Err(Error::InvalidArgument("u is not strictly inside the cone of e_7 and e_0".into()));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidArgument("ε must be positive".into()));
    }
    let vertices = split_vertices(octagon, u, eps);
    if convexity_of_vertices(&vertices) != Convexity::Strict {
        let (lo, hi) = split_threshold(octagon, u)
            .map(|t| (format_rat(&t.lower), format_rat(&t.upper)))
            .unwrap_or_else(|| ("?".into(), "?".into()));
        return Err(Error::ExceedsThreshold(format!(
            "ε = {} gives a non-convex decagon; δ lies in [{lo}, {hi}]",
            format_rat(eps)
        )));
    }
    Ok(SplitDecagon { u: u.clone(), epsilon: eps.clone(), vertices })
}

/// Bracket `lower ≤ δ ≤ upper` for the largest `δ` such that every
/// `ε ∈ (0, δ)` yields a strictly convex split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitThreshold {
    pub lower: Rat,
    pub upper: Rat,
}

/// Turn at vertex `i` of the split polygon as `A + Bε + Cε²`.
fn turn_polynomial(octagon: &[Point], u: &Point, i: usize) -> [QuadVal; 3] {
    // the split vertices are affine in ε: evaluate at 0, 1, 2 and interpolate
    let f = |e: i64| {
        let vs = split_vertices(octagon, u, &Rat::from_integer(BigInt::from(e)));
        let n = vs.len();
        cross(&edge(&vs, (i + n - 1) % n), &edge(&vs, i))
    };
    let (f0, f1, f2) = (f(0), f(1), f(2));
    let c2 = (&f2 - &f1 * 2 + &f0).scale(&rat(1, 2));
    let c1 = &f1 - &f0 - &c2;
    [f0, c1, c2]
}

fn eval_poly(c: &[QuadVal; 3], e: &Rat) -> QuadVal {
    &c[0] + c[1].scale(e) + c[2].scale(&(e * e))
}

/// Smallest positive root of a turn polynomial that is positive just after
/// 0, bracketed as `(lo, hi]` with `hi − lo ≤ tol`; `None` when it never
/// vanishes on `(0, ∞)`.
fn first_positive_root(c: &[QuadVal; 3], tol: &Rat) -> Option<(Rat, Rat)> {
    let d = c[0].radicand();
    // a vanishing constant term means the turn is ε times a linear form
    let c = if c[0].is_zero() { [c[1].clone(), c[2].clone(), QuadVal::zero(d)] } else { c.clone() };
    if !c[0].is_positive() {
        return Some((Rat::zero(), Rat::zero()));
    }
    // the decreasing piece ends at the vertex −B/(2C) of an upward parabola
    let vertex = if c[2].is_positive() {
        let v = (-&c[1]) / (&c[2] * 2);
        let disc = &c[1] * &c[1] - &c[0] * &c[2] * 4;
        if !v.is_positive() || disc.is_negative() {
            return None;
        }
        Some(v)
    } else {
        if c[2].is_zero() && !c[1].is_negative() {
            return None;
        }
        None
    };
    let before = |e: &Rat| {
        eval_poly(&c, e).is_positive() && vertex.as_ref().is_none_or(|v| QuadVal::from_rat(d, e.clone()) < *v)
    };
    let two = rat(2, 1);
    let mut lo = Rat::zero();
    let mut hi = Rat::one();
    while before(&hi) {
        lo = hi.clone();
        hi = &hi * &two;
    }
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / &two;
        if before(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some((lo, hi))
}

/// Exact bracket for the split threshold `δ`, or `None` when every
/// `ε > 0` keeps all turns positive.
pub fn split_threshold(octagon: &[Point], u: &Point) -> Option<SplitThreshold> {
    let tol = rat(1, 1 << 30);
    let mut best: Option<(Rat, Rat)> = None;
    for i in 0..10 {
        let poly = turn_polynomial(octagon, u, i);
        if let Some((lo, hi)) = first_positive_root(&poly, &tol) {
            // δ is the least root, so it lies in (min lo, min hi]
            best = match best {
                Some((blo, bhi)) => Some((blo.min(lo), bhi.min(hi))),
                None => Some((lo, hi)),
            };
        }
    }
    best.map(|(lower, upper)| SplitThreshold { lower, upper })
}

/// Area enclosed by a vertex cycle, re-exported for convenience.
pub fn polygon_area(vs: &[Point]) -> QuadVal {
    shoelace_area(vs)
}

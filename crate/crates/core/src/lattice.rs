//! Lattice polygons: Pick data, the adjacent-angles restriction, and
//! bounded exhaustive searches used as finite certificates for the
//! square-tiled cases.

use std::collections::BTreeSet;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{rat, Rat};

pub type IPoint = (i64, i64);

fn sub(a: IPoint, b: IPoint) -> IPoint {
    (a.0 - b.0, a.1 - b.1)
}

fn cross(u: IPoint, v: IPoint) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

fn dot(u: IPoint, v: IPoint) -> i64 {
    u.0 * v.0 + u.1 * v.1
}

/// Twice the signed area.
fn area2(vs: &[IPoint]) -> i64 {
    (0..vs.len()).map(|i| cross(vs[i], vs[(i + 1) % vs.len()])).sum()
}

fn edges(vs: &[IPoint]) -> Vec<IPoint> {
    (0..vs.len()).map(|i| sub(vs[(i + 1) % vs.len()], vs[i])).collect()
}

fn segments_cross(p1: IPoint, p2: IPoint, q1: IPoint, q2: IPoint) -> bool {
    let o = |a: IPoint, b: IPoint, c: IPoint| cross(sub(b, a), sub(c, a)).signum();
    let on = |a: IPoint, b: IPoint, c: IPoint| {
        c.0 >= a.0.min(b.0) && c.0 <= a.0.max(b.0) && c.1 >= a.1.min(b.1) && c.1 <= a.1.max(b.1)
    };
    let (d1, d2, d3, d4) = (o(q1, q2, p1), o(q1, q2, p2), o(p1, p2, q1), o(p1, p2, q2));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return true;
    }
    (d1 == 0 && on(q1, q2, p1))
        || (d2 == 0 && on(q1, q2, p2))
        || (d3 == 0 && on(p1, p2, q1))
        || (d4 == 0 && on(p1, p2, q2))
}

/// A simple lattice polygon with counterclockwise vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LatticePolygon {
    pub vertices: Vec<IPoint>,
}

impl LatticePolygon {
    pub fn new(vertices: Vec<IPoint>) -> Result<Self> {
        let n = vertices.len();
        if n < 3 {
            return Err(Error::InvalidArgument("a polygon needs at least 3 vertices".into()));
        }
        if vertices.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(Error::InvalidArgument("repeated vertex".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                // skip edges sharing an endpoint
                if j == i + 1 || (i == 0 && j == n - 1) {
                    continue;
                }
                if segments_cross(vertices[i], vertices[(i + 1) % n], vertices[j], vertices[(j + 1) % n]) {
                    return Err(Error::InvalidArgument("polygon is not simple".into()));
                }
            }
        }
        let a = area2(&vertices);
        if a == 0 {
            return Err(Error::Degenerate("polygon has zero area".into()));
        }
        if a < 0 {
            return Err(Error::InvalidArgument("vertices are clockwise".into()));
        }
        Ok(LatticePolygon { vertices })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn area(&self) -> Rat {
        rat(area2(&self.vertices), 2)
    }

    pub fn is_strictly_convex(&self) -> bool {
        is_strictly_convex(&self.vertices)
    }

    /// Applies `v ↦ M·v`. A determinant −1 matrix reverses the order so the
    /// result stays counterclockwise.
    pub fn transform(&self, m: [[i64; 2]; 2]) -> LatticePolygon {
        let mut vs: Vec<IPoint> =
            self.vertices.iter().map(|&(x, y)| (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y)).collect();
        if m[0][0] * m[1][1] - m[0][1] * m[1][0] < 0 {
            vs.reverse();
        }
        LatticePolygon { vertices: vs }
    }
}

/// Counterclockwise, every turn strictly left, winding once.
pub fn is_strictly_convex(vs: &[IPoint]) -> bool {
    let es = edges(vs);
    let n = es.len();
    if n < 3 || es.contains(&(0, 0)) {
        return false;
    }
    if !(0..n).all(|i| cross(es[i], es[(i + 1) % n]) > 0) {
        return false;
    }
    // turning number one: exactly one edge pair wraps past angle 0
    let half = |v: IPoint| {
        if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
            0
        } else {
            1
        }
    };
    let later = |u: IPoint, v: IPoint| half(u) > half(v) || (half(u) == half(v) && cross(u, v) < 0);
    (0..n).filter(|&i| later(es[i], es[(i + 1) % n])).count() == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PickData {
    #[serde(with = "crate::h11::rat_string")]
    pub area: Rat,
    pub interior: i64,
    pub boundary: i64,
}

pub fn boundary_points(p: &LatticePolygon) -> i64 {
    edges(&p.vertices).iter().map(|&(x, y)| x.gcd(&y)).sum()
}

/// Shoelace area, boundary count from edge gcds, interior by inverting
/// Pick's formula.
pub fn pick_data(p: &LatticePolygon) -> Result<PickData> {
    let a2 = area2(&p.vertices);
    if a2 <= 0 {
        return Err(Error::Degenerate("polygon has nonpositive area".into()));
    }
    let boundary = boundary_points(p);
    let twice_interior = a2 - boundary + 2;
    debug_assert!(twice_interior % 2 == 0);
    let interior = twice_interior / 2;
    let area = rat(a2, 2);
    debug_assert_eq!(area, rat(interior, 1) + rat(boundary, 2) - rat(1, 1));
    Ok(PickData { area, interior, boundary })
}

/// Strictly convex hull, counterclockwise, starting from the lowest then
/// leftmost point.
pub fn convex_hull(points: &[IPoint]) -> Vec<IPoint> {
    let mut pts: Vec<IPoint> = points.to_vec();
    pts.sort_by_key(|&(x, y)| (y, x));
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let origin = pts[0];
    let mut rest: Vec<IPoint> = pts[1..].to_vec();
    rest.sort_by(|&a, &b| {
        let (u, v) = (sub(a, origin), sub(b, origin));
        cross(v, u).cmp(&0).then(dot(u, u).cmp(&dot(v, v)))
    });
    let mut hull = vec![origin];
    for p in rest {
        while hull.len() >= 2
            && cross(sub(hull[hull.len() - 1], hull[hull.len() - 2]), sub(p, hull[hull.len() - 1])) <= 0
        {
            hull.pop();
        }
        hull.push(p);
    }
    if hull.len() >= 3 && area2(&hull) > 0 {
        // a collinear tail may survive the scan; drop it
        while hull.len() >= 3
            && cross(sub(hull[hull.len() - 1], hull[hull.len() - 2]), sub(origin, hull[hull.len() - 1])) <= 0
        {
            hull.pop();
        }
    }
    hull
}

/// The adjacent-angles restriction for a strictly convex `(g+1)`-gon:
/// the counterclockwise angle from edge `v_j` to `v_{j+i}` is below `π`
/// for `1 ≤ i < (g+1)/2`, and exactly `π` for `i = (g+1)/2` when `g+1` is
/// even.
pub fn adjacent_angle_check(p: &LatticePolygon, g: usize) -> Result<bool> {
    if !p.is_strictly_convex() {
        return Err(Error::InvalidArgument("adjacent angle check needs a strictly convex polygon".into()));
    }
    let n = g + 1;
    if p.len() != n {
        return Err(Error::InvalidArgument(format!("expected {n} vertices for g = {g}, got {}", p.len())));
    }
    let es = edges(&p.vertices);
    for j in 0..n {
        for i in 1..n {
            if 2 * i < n {
                if cross(es[j], es[(j + i) % n]) <= 0 {
                    return Ok(false);
                }
            } else if 2 * i == n {
                let (u, v) = (es[j], es[(j + i) % n]);
                if cross(u, v) != 0 || dot(u, v) >= 0 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Affine `GL2(Z)` normal form of a convex polygon: the lexicographically
/// least edge sequence over starting edges and both orientations, after
/// moving the first edge onto the positive x-axis and shearing.
pub fn canonical_form(vs: &[IPoint]) -> Vec<IPoint> {
    let forward = edges(vs);
    // reflecting in the x-axis and reversing keeps counterclockwise order
    let mirrored: Vec<IPoint> = {
        let mut r: Vec<IPoint> = vs.iter().map(|&(x, y)| (x, -y)).collect();
        r.reverse();
        edges(&r)
    };
    let n = forward.len();
    let mut best: Option<Vec<IPoint>> = None;
    for es in [&forward, &mirrored] {
        for start in 0..n {
            let (a, b) = es[start];
            let ext = a.extended_gcd(&b);
            let g = ext.gcd;
            let (u, v) = (ext.x, ext.y);
            let m = [[u, v], [-b / g, a / g]];
            let apply = |(x, y): IPoint| (m[0][0] * x + m[0][1] * y, m[1][0] * x + m[1][1] * y);
            let (p, q) = apply(es[(start + 1) % n]);
            let t = if q != 0 { -Integer::div_floor(&p, &q) } else { 0 };
            let seq: Vec<IPoint> = (0..n)
                .map(|i| {
                    let (x, y) = apply(es[(start + i) % n]);
                    (x + t * y, y)
                })
                .collect();
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
    }
    best.unwrap_or_default()
}

/// Parameters of a bounded convex-polygon search.
#[derive(Clone, Debug)]
pub struct NgonQuery {
    pub n: usize,
    pub bbox: i64,
    /// Keep polygons with area strictly below this bound.
    pub area_below: Rat,
    /// Keep only polygons passing the adjacent-angles restriction for
    /// this `g`.
    pub angle_g: Option<usize>,
    /// Collapse `GL2(Z)`-affine equivalent results.
    pub dedupe: bool,
}

fn candidates(bbox: i64) -> Vec<IPoint> {
    let mut out = Vec::new();
    for y in 0..=bbox {
        for x in -bbox..=bbox {
            if y > 0 || x > 0 {
                out.push((x, y));
            }
        }
    }
    out
}

/// Extends a chain starting at the origin with left turns; `twice_limit`
/// bounds twice the fan area (exclusive).
fn extend(
    chain: &mut Vec<IPoint>,
    fan2: i64,
    n: usize,
    twice_limit: i64,
    cands: &[IPoint],
    out: &mut Vec<Vec<IPoint>>,
) {
    let last = *chain.last().unwrap();
    if chain.len() == n {
        let prev = chain[n - 2];
        let first = chain[1];
        if cross(sub(last, prev), sub((0, 0), last)) > 0 && cross(sub((0, 0), last), first) > 0 {
            out.push(chain.clone());
        }
        return;
    }
    let prev = chain[chain.len() - 2];
    for &w in cands {
        if cross(sub(last, prev), sub(w, last)) <= 0 || cross(last, w) <= 0 {
            continue;
        }
        let f = fan2 + cross(last, w);
        if f >= twice_limit {
            continue;
        }
        chain.push(w);
        extend(chain, f, n, twice_limit, cands, out);
        chain.pop();
    }
}

/// All strictly convex lattice `n`-gons with the lowest-then-leftmost
/// vertex at the origin, coordinates in `[−box, box]`, area below the
/// bound, optionally passing the adjacent-angles restriction.
pub fn search_ngons(q: &NgonQuery) -> Vec<LatticePolygon> {
    assert!(q.n >= 3, "need at least a triangle");
    // twice the area is an integer, so area < A ⇔ 2·area < ⌈2A⌉
    let twice_limit = {
        let t = &q.area_below * rat(2, 1);
        let c = t.ceil().to_integer();
        i64::try_from(c).unwrap_or(i64::MAX)
    };
    let cands = candidates(q.bbox);
    let mut found: Vec<Vec<IPoint>> = cands
        .par_iter()
        .flat_map_iter(|&v1| {
            let mut out = Vec::new();
            let mut chain = vec![(0, 0), v1];
            let tail: Vec<IPoint> = cands.iter().copied().filter(|&w| cross(v1, w) > 0).collect();
            extend(&mut chain, 0, q.n, twice_limit, &tail, &mut out);
            out
        })
        .collect();
    found.retain(|vs| {
        let p = LatticePolygon { vertices: vs.clone() };
        match q.angle_g {
            Some(g) => adjacent_angle_check(&p, g).unwrap_or(false),
            None => true,
        }
    });
    finish(found, q.dedupe)
}

/// Vertices from the origin along consecutive edge vectors.
fn from_edges(es: &[IPoint]) -> Vec<IPoint> {
    es.iter()
        .scan((0, 0), |acc, &(x, y)| {
            let v = *acc;
            *acc = (acc.0 + x, acc.1 + y);
            Some(v)
        })
        .collect()
}

fn finish(found: Vec<Vec<IPoint>>, dedupe: bool) -> Vec<LatticePolygon> {
    let mut polys: Vec<LatticePolygon> = if dedupe {
        let mut seen = BTreeSet::new();
        let mut sorted = found;
        sorted.sort();
        sorted
            .into_iter()
            .filter_map(|vs| {
                let form = canonical_form(&vs);
                seen.insert(form.clone()).then(|| LatticePolygon { vertices: from_edges(&form) })
            })
            .collect()
    } else {
        found.into_iter().map(|vertices| LatticePolygon { vertices }).collect()
    };
    polys.sort();
    polys
}

/// Pentagons of area below `area_bound` satisfying the adjacent-angles
/// restriction (`g = 4`), up to unimodular equivalence.
pub fn search_pentagons(area_bound: &Rat, bbox: i64, check_angles: bool) -> Vec<LatticePolygon> {
    search_ngons(&NgonQuery {
        n: 5,
        bbox,
        area_below: area_bound.clone(),
        angle_g: check_angles.then_some(4),
        dedupe: true,
    })
}

/// Strictly convex lattice octagons with 8 boundary points and at most
/// `max_interior` interior points, normalised to have consecutive vertices
/// `(0,1), (0,0), (1,0)` and so lie in the first quadrant.
pub fn search_octagons_b8(bbox: i64, max_interior: i64) -> Vec<LatticePolygon> {
    if bbox < 1 {
        return Vec::new();
    }
    // b = 8 forces area = i + 3
    let twice_limit = 2 * (max_interior + 3) + 1;
    let cands: Vec<IPoint> =
        (0..=bbox).flat_map(|y| (0..=bbox).map(move |x| (x, y))).filter(|&p| p != (0, 0)).collect();
    let mut out = Vec::new();
    let mut chain = vec![(0, 0), (1, 0)];
    extend_first_quadrant(&mut chain, 0, twice_limit, &cands, &mut out);
    out.retain(|vs| {
        let p = LatticePolygon { vertices: vs.clone() };
        let pd = pick_data(&p).expect("octagon has positive area");
        pd.boundary == 8 && pd.interior <= max_interior
    });
    finish(out, false)
}

fn extend_first_quadrant(
    chain: &mut Vec<IPoint>,
    fan2: i64,
    twice_limit: i64,
    cands: &[IPoint],
    out: &mut Vec<Vec<IPoint>>,
) {
    let last = *chain.last().unwrap();
    let prev = chain[chain.len() - 2];
    if chain.len() == 7 {
        // the eighth vertex is pinned at (0, 1)
        let w = (0, 1);
        if cross(sub(last, prev), sub(w, last)) > 0
            && cross(sub(w, last), sub((0, 0), w)) > 0
            && fan2 + cross(last, w) < twice_limit
        {
            chain.push(w);
            if edges(chain).iter().all(|&(x, y)| x.gcd(&y) == 1) {
                out.push(chain.clone());
            }
            chain.pop();
        }
        return;
    }
    for &w in cands {
        if w == (0, 1) || cross(sub(last, prev), sub(w, last)) <= 0 || cross(last, w) <= 0 {
            continue;
        }
        let step = sub(w, last);
        if step.0.gcd(&step.1) != 1 {
            continue;
        }
        let f = fan2 + cross(last, w);
        if f >= twice_limit {
            continue;
        }
        chain.push(w);
        extend_first_quadrant(chain, f, twice_limit, cands, out);
        chain.pop();
    }
}

/// Minimal area of a strictly convex lattice `n`-gon with coordinates in
/// the box, with one witness.
pub fn min_area_ngon(n: usize, bbox: i64) -> Option<(Rat, LatticePolygon)> {
    let mut bound = rat(1, 1);
    // double the bound until something appears, then take the minimum
    loop {
        let found = search_ngons(&NgonQuery { n, bbox, area_below: bound.clone(), angle_g: None, dedupe: false });
        if let Some(best) = found.into_iter().min_by(|a, b| a.area().cmp(&b.area()).then(a.cmp(b))) {
            return Some((best.area(), best));
        }
        if bound > rat(bbox * bbox * 4, 1) {
            return None;
        }
        bound *= rat(2, 1);
    }
}

/// Integer solutions `(m, n, k, ℓ)` with entries in `1..=range` of
/// `m>1, n>0, k>0, ℓ>1, ℓ>n, m>k, nk>(m−1)(ℓ−1)`.
pub fn case1_solutions(range: i64) -> Vec<(i64, i64, i64, i64)> {
    (2..=range)
        .into_par_iter()
        .flat_map_iter(|m| {
            let mut out = Vec::new();
            for n in 1..=range {
                for k in 1..m.min(range + 1) {
                    for l in (n + 1).max(2)..=range {
                        if n * k > (m - 1) * (l - 1) {
                            out.push((m, n, k, l));
                        }
                    }
                }
            }
            out
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(vs: &[IPoint]) -> LatticePolygon {
        LatticePolygon::new(vs.to_vec()).unwrap()
    }

    #[test]
    fn pick_examples() {
        let sq = pick_data(&poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])).unwrap();
        assert_eq!((sq.area, sq.interior, sq.boundary), (rat(1, 1), 0, 4));
        let t = pick_data(&poly(&[(0, 0), (1, 0), (0, 1)])).unwrap();
        assert_eq!((t.area, t.interior, t.boundary), (rat(1, 2), 0, 3));
        let t = pick_data(&poly(&[(0, 0), (2, 1), (1, 2)])).unwrap();
        assert_eq!((t.area, t.interior, t.boundary), (rat(3, 2), 1, 3));
    }

    #[test]
    fn validation() {
        assert!(LatticePolygon::new(vec![(0, 0), (1, 0)]).is_err());
        assert!(LatticePolygon::new(vec![(0, 0), (1, 0), (0, 1), (1, 1)]).is_err());
        assert!(LatticePolygon::new(vec![(0, 0), (0, 1), (1, 0)]).is_err());
        assert!(LatticePolygon::new(vec![(0, 0), (1, 0), (2, 0)]).is_err());
    }

    #[test]
    fn angle_check_examples() {
        let hex = poly(&[(0, 0), (1, 0), (2, 1), (2, 2), (1, 2), (0, 1)]);
        assert!(adjacent_angle_check(&hex, 5).unwrap());
        let tri = poly(&[(0, 0), (1, 0), (0, 1)]);
        assert!(adjacent_angle_check(&tri, 2).unwrap());
        assert!(adjacent_angle_check(&tri, 1).is_err());
        // edges (1,1) and (-1,-1) are antiparallel, so two exterior angles sum to π
        let pent = poly(&[(0, 0), (1, 0), (2, 1), (1, 2), (0, 1)]);
        assert!(!adjacent_angle_check(&pent, 4).unwrap());
        let dart = LatticePolygon { vertices: vec![(0, 0), (2, 0), (1, 1), (2, 2), (0, 2)] };
        assert!(adjacent_angle_check(&dart, 4).is_err());
        // opposite edges of a parallelogram are antiparallel, as g = 3 demands
        let square = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert!(adjacent_angle_check(&square, 3).unwrap());
        let kite = poly(&[(0, 0), (2, 0), (3, 2), (0, 1)]);
        assert!(!adjacent_angle_check(&kite, 3).unwrap());
    }

    #[test]
    fn hull_and_convexity() {
        let h = convex_hull(&[(0, 0), (2, 0), (1, 0), (2, 2), (0, 2), (1, 1), (0, 1)]);
        assert_eq!(h, vec![(0, 0), (2, 0), (2, 2), (0, 2)]);
        assert!(is_strictly_convex(&h));
    }

    #[test]
    fn canonical_form_is_unimodular_invariant() {
        let p = poly(&[(0, 0), (3, 1), (4, 3), (1, 2)]);
        let q = p.transform([[2, 1], [1, 1]]);
        let r = p.transform([[0, 1], [1, 0]]);
        assert_eq!(canonical_form(&p.vertices), canonical_form(&q.vertices));
        assert_eq!(canonical_form(&p.vertices), canonical_form(&r.vertices));
        let sq = poly(&[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_ne!(canonical_form(&p.vertices), canonical_form(&sq.vertices));
    }

    #[test]
    fn small_minima() {
        assert_eq!(min_area_ngon(3, 3).unwrap().0, rat(1, 2));
        assert_eq!(min_area_ngon(4, 3).unwrap().0, rat(1, 1));
        assert_eq!(min_area_ngon(5, 3).unwrap().0, rat(5, 2));
        assert_eq!(min_area_ngon(6, 3).unwrap().0, rat(3, 1));
    }

    #[test]
    fn searches() {
        assert!(search_pentagons(&rat(5, 2), 4, false).is_empty());
        assert!(!search_pentagons(&rat(100, 1), 4, true).is_empty());
        assert!(search_octagons_b8(2, 0).is_empty());
        assert!(search_octagons_b8(6, 0).is_empty());
        assert!(case1_solutions(25).is_empty());
    }

    #[test]
    fn pentagon_area_threshold() {
        // area 4 is the smallest area admitting the angle restriction
        assert!(search_pentagons(&rat(4, 1), 8, true).is_empty());
        let found = search_pentagons(&rat(5, 1), 6, true);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].area(), rat(4, 1));
        let w = poly(&[(0, 0), (2, -2), (3, -2), (2, 0), (0, 1)]);
        assert_eq!(pick_data(&w).unwrap().area, rat(4, 1));
        assert!(adjacent_angle_check(&w, 4).unwrap());
        assert_eq!(canonical_form(&found[0].vertices), canonical_form(&w.vertices));
    }
}

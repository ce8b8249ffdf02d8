//! Exact planar points and convexity predicates over `Q(√D)`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::exactnum::QuadVal;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: QuadVal,
    pub y: QuadVal,
}

impl Point {
    pub fn new(x: QuadVal, y: QuadVal) -> Self {
        Point { x, y }
    }

    pub fn origin(d: u64) -> Self {
        Point::new(QuadVal::zero(d), QuadVal::zero(d))
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn scale(&self, k: &QuadVal) -> Point {
        Point::new(&self.x * k, &self.y * k)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

/// `u ∧ v = u.x·v.y − u.y·v.x`.
pub fn cross(u: &Point, v: &Point) -> QuadVal {
    &u.x * &v.y - &u.y * &v.x
}

pub fn dot(u: &Point, v: &Point) -> QuadVal {
    &u.x * &v.x + &u.y * &v.y
}

/// Signed area, positive for counterclockwise order.
pub fn shoelace_area(vs: &[Point]) -> QuadVal {
    let d = vs.first().map(|p| p.x.radicand()).unwrap_or(0);
    let mut acc = QuadVal::zero(d);
    for i in 0..vs.len() {
        let j = (i + 1) % vs.len();
        acc = acc + cross(&vs[i], &vs[j]);
    }
    acc.scale(&crate::exactnum::rat(1, 2))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convexity {
    Strict,
    Weak,
    Nonconvex,
}

fn half(v: &Point) -> u8 {
    let sy = v.y.sign();
    if sy == Ordering::Greater || (sy == Ordering::Equal && v.x.is_positive()) {
        0
    } else {
        1
    }
}

/// Orders nonzero vectors by polar angle in `[0, 2π)`.
fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| cross(v, u).sign())
}

/// Classifies a closed vertex cycle by the signs of consecutive turns.
///
/// Zero turns only count as weakly convex when the polygon keeps going
/// forward (a midpoint on a side); a backtrack or a polygon that winds
/// more than once is nonconvex. Either orientation is accepted.
pub fn convexity_of_vertices(vs: &[Point]) -> Convexity {
    let n = vs.len();
    if n < 3 {
        return Convexity::Nonconvex;
    }
    let edges: Vec<Point> = (0..n).map(|i| vs[(i + 1) % n].sub(&vs[i])).collect();
    if edges.iter().any(|e| e.x.is_zero() && e.y.is_zero()) {
        return Convexity::Nonconvex;
    }
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    for i in 0..n {
        let e0 = &edges[i];
        let e1 = &edges[(i + 1) % n];
        match cross(e0, e1).sign() {
            Ordering::Greater => pos += 1,
            Ordering::Less => neg += 1,
            Ordering::Equal => {
                if !dot(e0, e1).is_positive() {
                    return Convexity::Nonconvex;
                }
                zero += 1;
            }
        }
    }
    if (pos > 0 && neg > 0) || pos + neg == 0 {
        return Convexity::Nonconvex;
    }
    // the edge directions must sweep the circle exactly once
    let ccw = pos > 0;
    let descents = (0..n)
        .filter(|&i| {
            let (a, b) = (&edges[i], &edges[(i + 1) % n]);
            let ord = angle_cmp(a, b);
            if ccw {
                ord == Ordering::Greater
            } else {
                ord == Ordering::Less
            }
        })
        .count();
    if descents != 1 {
        return Convexity::Nonconvex;
    }
    if zero == 0 {
        Convexity::Strict
    } else {
        Convexity::Weak
    }
}

use rayon::prelude::*;

use g2convex::geometry::{convexity_of_vertices, shoelace_area, Convexity, Point};
use g2convex::h2::{
    check_strict_convexity_octagon, enumerate_prototypes, flowdown, octagon_of, spin, FlowdownH2, PrototypeH2,
};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Defining constraints checked from scratch.
fn independently_valid(p: &PrototypeH2) -> bool {
    p.b > 0
        && p.c > 0
        && 0 <= p.a
        && p.a < p.b
        && p.c + p.e < p.b
        && p.d == p.e * p.e + 4 * p.b * p.c
        && gcd(gcd(p.a, p.b), gcd(p.c, p.e)) == 1
}

fn check(p: &PrototypeH2) -> Vec<String> {
    let mut bad = Vec::new();
    if !independently_valid(p) {
        bad.push(format!("{p}: invalid"));
    }
    if let FlowdownH2::Nondegenerate { k, l } = flowdown(p) {
        if k > p.b as u64 || l > p.b as u64 {
            bad.push(format!("{p}: flowdown index above b"));
        }
    }
    let Ok(oct) = octagon_of(p) else { return bad };
    if !(oct.x1.is_positive() && oct.x1 < oct.x2 && oct.x2 < oct.lambda) {
        bad.push(format!("{p}: x order"));
    }
    if shoelace_area(&oct.vertices) != p.area() {
        bad.push(format!("{p}: area"));
    }
    let centre = Point::new(oct.lambda.clone(), -&oct.lambda);
    if (0..4).any(|i| oct.vertices[i].add(&oct.vertices[i + 4]) != centre) {
        bad.push(format!("{p}: symmetry"));
    }
    let predicate = check_strict_convexity_octagon(&oct.x1, &oct.y1, &oct.x2, &oct.y2, &oct.lambda);
    if predicate != (convexity_of_vertices(&oct.vertices) == Convexity::Strict) {
        bad.push(format!("{p}: predicate"));
    }
    bad
}

#[test]
fn octagon_invariants_up_to_500() {
    let bad: Vec<String> = (5..=500i64)
        .into_par_iter()
        .flat_map_iter(|d| enumerate_prototypes(d).iter().flat_map(check).collect::<Vec<_>>())
        .collect();
    assert!(bad.is_empty(), "{:?}", &bad[..bad.len().min(10)]);
}

#[test]
fn enumeration_is_sorted_and_complete() {
    for d in [5, 8, 12, 13, 17, 20, 33, 49] {
        let ps = enumerate_prototypes(d);
        assert!(ps.windows(2).all(|w| w[0].sort_key() < w[1].sort_key()));
        let mut brute = 0;
        for e in -d..=d {
            for b in 1..=d {
                for c in 1..=d {
                    for a in 0..b {
                        if let Ok(p) = PrototypeH2::new(d, a, b, c, e) {
                            assert!(ps.contains(&p));
                            brute += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(brute, ps.len(), "D = {d}");
    }
}

#[test]
fn spin_flips_under_e_shift() {
    for d in (17..=300).filter(|d| d % 8 == 1) {
        let ps = enumerate_prototypes(d);
        for p in ps.iter().filter(|p| p.c == 1) {
            for q in ps.iter().filter(|q| q.c == 1 && q.e == p.e + 2) {
                let parity = |x: &PrototypeH2| (x.a + x.b + x.a * x.b).rem_euclid(2);
                if parity(p) == parity(q) {
                    assert_ne!(spin(p).unwrap().parity, spin(q).unwrap().parity, "{p} vs {q}");
                }
            }
        }
    }
}

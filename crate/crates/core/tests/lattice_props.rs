use proptest::prelude::*;

use g2convex::exactnum::rat;
use g2convex::lattice::{
    adjacent_angle_check, convex_hull, pick_data, search_octagons_b8, search_pentagons, LatticePolygon,
};

fn convex_polygon() -> impl Strategy<Value = LatticePolygon> {
    prop::collection::vec((-12i64..=12, -12i64..=12), 3..14)
        .prop_filter_map("degenerate hull", |pts| LatticePolygon::new(convex_hull(&pts)).ok())
}

fn unimodular() -> impl Strategy<Value = [[i64; 2]; 2]> {
    // products of elementary shears and a reflection cover GL2(Z)
    (prop::collection::vec((0usize..3, -3i64..=3), 0..6)).prop_map(|ops| {
        let mut m = [[1i64, 0], [0, 1]];
        for (kind, k) in ops {
            let e = match kind {
                0 => [[1, k], [0, 1]],
                1 => [[1, 0], [k, 1]],
                _ => [[0, 1], [1, 0]],
            };
            m = [
                [e[0][0] * m[0][0] + e[0][1] * m[1][0], e[0][0] * m[0][1] + e[0][1] * m[1][1]],
                [e[1][0] * m[0][0] + e[1][1] * m[1][0], e[1][0] * m[0][1] + e[1][1] * m[1][1]],
            ];
        }
        m
    })
}

/// Lattice points strictly inside and on the boundary, counted directly.
fn count(vs: &[(i64, i64)]) -> (i64, i64) {
    let n = vs.len();
    let (mut inside, mut on) = (0, 0);
    for x in -12..=12 {
        for y in -12..=12 {
            let s: Vec<i64> = (0..n)
                .map(|i| {
                    let (a, b) = (vs[i], vs[(i + 1) % n]);
                    ((b.0 - a.0) * (y - a.1) - (b.1 - a.1) * (x - a.0)).signum()
                })
                .collect();
            if s.iter().all(|&v| v > 0) {
                inside += 1;
            } else if s.iter().all(|&v| v >= 0) {
                on += 1;
            }
        }
    }
    (inside, on)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn pick_matches_direct_count(p in convex_polygon()) {
        let pd = pick_data(&p).unwrap();
        prop_assert_eq!((pd.interior, pd.boundary), count(&p.vertices));
        prop_assert_eq!(pd.area, rat(2 * pd.interior + pd.boundary - 2, 2));
    }

    #[test]
    fn unimodular_invariance(p in convex_polygon(), m in unimodular()) {
        let q = p.transform(m);
        prop_assert_eq!(pick_data(&p).unwrap(), pick_data(&q).unwrap());
        if p.is_strictly_convex() {
            let g = p.len() - 1;
            prop_assert_eq!(adjacent_angle_check(&p, g).unwrap(), adjacent_angle_check(&q, g).unwrap());
        }
    }
}

#[test]
fn searches_stabilise_under_box_enlargement() {
    let area = rat(5, 1);
    assert_eq!(search_pentagons(&area, 6, true).len(), search_pentagons(&area, 9, true).len());
    assert_eq!(search_octagons_b8(6, 0), search_octagons_b8(8, 0));
    assert!(search_octagons_b8(2, 0).is_empty());
}

#[test]
fn octagons_need_four_interior_points() {
    assert!(search_octagons_b8(6, 3).is_empty());
    let found = search_octagons_b8(6, 4);
    assert!(!found.is_empty());
    assert!(found.iter().all(|p| pick_data(p).unwrap().area == rat(7, 1)));
}

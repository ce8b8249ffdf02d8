use num_traits::Zero;
use proptest::prelude::*;

use g2convex::exactnum::rat;
use g2convex::geometry::{convexity_of_vertices, shoelace_area, Convexity, Point};
use g2convex::h11::{
    canonical_decagon, check_strict_convexity_decagon, flowdown11, grid_bounds, y_bound, FlowdownH11, PrototypeH11,
    ReturnMap, DEFAULT_MAX_ITER,
};
use g2convex::h2::{enumerate_prototypes, flowdown_values, PrototypeH2};
use g2convex::{QuadVal, Rat};

fn bases() -> Vec<PrototypeH2> {
    [12, 13, 17, 20, 21, 24, 28, 33].iter().flat_map(|&d| enumerate_prototypes(d)).collect()
}

/// A random admissible `(x, y)` over one of a handful of prototypes.
fn point() -> impl Strategy<Value = PrototypeH11> {
    let bases = bases();
    (0..bases.len(), 1i64..1000, 0i64..1000).prop_filter_map("outside the parameter box", move |(i, xn, yn)| {
        let p = bases[i];
        let (xb, yb) = grid_bounds(&p, 100, 100);
        PrototypeH11::new(p, &xb * rat(xn, 1000), &yb * rat(yn, 1000)).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn decagon_identities(p in point()) {
        let (_, t) = p.s_t();
        prop_assert!(t.is_positive());
        prop_assert!(QuadVal::from_rat(p.radicand(), p.y.clone()) < y_bound(&p.base));
        let Ok(dec) = canonical_decagon(&p, DEFAULT_MAX_ITER) else { return Ok(()) };
        prop_assert!(dec.x1 < dec.x2 && dec.x2 < dec.x3);
        let area = shoelace_area(&dec.vertices);
        prop_assert_eq!(&area, &p.area());
        prop_assert_eq!(&area, &shoelace_area(&p.outline()));
        if p.y.is_zero() {
            prop_assert_eq!(&area, &p.base.area());
        } else {
            prop_assert!(area < p.base.area());
        }
        let centre = Point::new(dec.lambda.clone(), -&dec.lambda);
        for i in 0..5 {
            prop_assert_eq!(dec.vertices[i].add(&dec.vertices[i + 5]), centre.clone());
        }
        let predicate = check_strict_convexity_decagon(&dec.x1, &dec.y1, &dec.x2, &dec.y2, &dec.x3, &dec.y3, &dec.lambda);
        prop_assert_eq!(predicate, convexity_of_vertices(&dec.vertices) == Convexity::Strict);
        prop_assert_eq!(predicate, dec.strictly_convex);
    }

    #[test]
    fn cap_is_never_a_verdict(p in point(), cap in 1u64..4) {
        match flowdown11(&p, cap).unwrap() {
            FlowdownH11::Undecided { cap: c, .. } => prop_assert_eq!(c, cap),
            FlowdownH11::Nondegenerate { k, l, m } => prop_assert!(k <= cap && l <= cap && m <= cap),
            FlowdownH11::Degenerate { .. } => {}
        }
    }
}

#[test]
fn zero_slice_follows_the_octagon_orbit() {
    for base in bases() {
        let p = PrototypeH11::new(base, Rat::zero(), Rat::zero()).unwrap();
        let (s, _) = p.s_t();
        let map = ReturnMap::new(&p, &s);
        let lam = p.lambda();
        let a = QuadVal::from_int(p.radicand(), base.a);
        // above λ the first prong is the orbit j·a of the octagon flowdown
        for (j, z) in map.trace(&s, 50).iter().enumerate() {
            assert_eq!(*z, (&a * (j as i64 + 1)).reduce_mod(base.b), "{base} step {j}");
            if *z <= lam {
                break;
            }
        }
        if let (_, Some((_, x1))) = flowdown_values(&base) {
            let second = (&s + &lam).reduce_mod(base.b);
            assert!(map.trace(&second, 200).contains(&x1), "{base}");
        }
        assert!(matches!(flowdown11(&p, 10).unwrap(), FlowdownH11::Degenerate { .. }));
    }
}

#[test]
fn parameter_box_is_enforced() {
    let base = PrototypeH2::new(13, 1, 3, 1, -1).unwrap();
    assert!(PrototypeH11::new(base, rat(-1, 10), Rat::zero()).is_err());
    assert!(PrototypeH11::new(base, rat(2, 1), Rat::zero()).is_err());
    assert!(PrototypeH11::new(base, rat(1, 10), rat(1, 1)).is_err());
    assert!(flowdown11(&PrototypeH11::new(base, rat(1, 10), Rat::zero()).unwrap(), 0).is_err());
}

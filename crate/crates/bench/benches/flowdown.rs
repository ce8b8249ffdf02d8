use criterion::{black_box, criterion_group, criterion_main, Criterion};
use g2convex::h11::{canonical_decagon, PrototypeH11, DEFAULT_MAX_ITER};
use g2convex::h2::{octagon_of, scan_h2};
use g2convex::{parse_rat, PrototypeH2};

fn h2(c: &mut Criterion) {
    let p = PrototypeH2::new(13, 1, 3, 1, -1).unwrap();
    c.bench_function("octagon 13", |b| b.iter(|| octagon_of(black_box(&p)).unwrap()));
    c.bench_function("scan 5..60", |b| b.iter(|| scan_h2(black_box(5), black_box(60))));
}

fn h11(c: &mut Criterion) {
    let p = PrototypeH11::from_parts(64, 6, 16, 1, 0, parse_rat("0.5").unwrap(), parse_rat("0.1").unwrap()).unwrap();
    c.bench_function("decagon 64 row", |b| b.iter(|| canonical_decagon(black_box(&p), DEFAULT_MAX_ITER).unwrap()));
}

criterion_group!(benches, h2, h11);
criterion_main!(benches);

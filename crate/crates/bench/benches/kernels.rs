use criterion::{criterion_group, criterion_main, Criterion};
use seminorm_bench::{function, CASES};
use seminorm_core::arith::roots::isolate_real_roots;
use seminorm_core::arith::UPoly;
use seminorm_core::classify::classify;
use seminorm_core::curve::make_curve;
use seminorm_core::groebner::{saturate, MPoly, PolyIdeal, Var};
use seminorm_core::parse::parse_poly;
use seminorm_core::report::SINGULAR_CURVE;
use std::hint::black_box;

fn classify_corpus(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    for &(name, curve, p, q) in CASES {
        g.bench_function(name, |b| b.iter(|| classify(&function(curve, p, q)).unwrap()));
    }
    g.finish();
}

fn graph_saturation(c: &mut Criterion) {
    let mut g = c.benchmark_group("saturate");
    for &(name, curve, p, q) in CASES {
        let (f, p, q) = (parse_poly(curve).unwrap(), parse_poly(p).unwrap(), parse_poly(q).unwrap());
        let ideal = PolyIdeal::new(vec![f, q.mul(&MPoly::var(Var::T)).sub(&p)]).unwrap();
        g.bench_function(name, |b| b.iter(|| saturate(black_box(&ideal), &q).unwrap()));
    }
    g.finish();
}

fn singular_locus(c: &mut Criterion) {
    let f = parse_poly(SINGULAR_CURVE).unwrap();
    let mut g = c.benchmark_group("locus");
    g.sample_size(10);
    g.bench_function("singular-curve", |b| b.iter(|| make_curve(black_box(&f)).unwrap().singular_locus().unwrap().len()));
    g.finish();
}

fn root_isolation(c: &mut Criterion) {
    // (x - 1)(x - 2)...(x - 12) + 1
    let mut w = UPoly::from_ints(&[1]);
    for k in 1..=12 {
        w = w.fmul(&UPoly::from_ints(&[-k, 1]));
    }
    let w = w.fadd(&UPoly::from_ints(&[1]));
    c.bench_function("isolate/wilkinson-12", |b| b.iter(|| isolate_real_roots(black_box(&w)).len()));
}

criterion_group!(benches, classify_corpus, graph_saturation, singular_locus, root_isolation);
criterion_main!(benches);

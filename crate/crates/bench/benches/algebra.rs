use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use g2skein::annulus11::A11Algebra;
use g2skein::qscalar::{CyclotomicField, Integers, QRat, RationalFunctions};
use g2skein::verify::{search_transparent, search_transparent_generic};
use g2skein::xyring::{p_int, power_sums_from_table, psi, q_int, XYPoly};

fn scalars(c: &mut Criterion) {
    let a = QRat::parse("(q^3 - 2*q + 1)/(q^2 + 1)").unwrap();
    let b = QRat::parse("(q^-2 + 3)/(q^4 - q + 5)").unwrap();
    c.bench_function("qrat_mul_add", |bench| bench.iter(|| black_box(&a).mul(black_box(&b)).add(&a)));
}

fn power_sums(c: &mut Criterion) {
    let table: Vec<_> = (0..=14).map(|i| g2skein::xyring::f_coeff(i).unwrap()).collect();
    c.bench_function("newton_q_up_to_12", |bench| {
        bench.iter(|| power_sums_from_table(black_box(&table), 12))
    });
    let p8 = p_int(8);
    c.bench_function("psi_p8", |bench| bench.iter(|| psi(&Integers, black_box(&p8))));
}

fn annulus(c: &mut Criterion) {
    let generic = A11Algebra::new(RationalFunctions).unwrap();
    let y = generic.y_bar().clone();
    c.bench_function("a11_y_bar_cubed", |bench| bench.iter(|| generic.pow(black_box(&y), 3)));

    let m10 = A11Algebra::new(CyclotomicField::new(10)).unwrap();
    let q5 = XYPoly::embed(m10.field(), &q_int(5));
    c.bench_function("defect_q5_m10", |bench| bench.iter(|| m10.transparency_defect(black_box(&q5))));
}

fn searches(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    let f = CyclotomicField::new(10);
    group.bench_function("m10_bound_10_10", |bench| bench.iter(|| search_transparent(&f, (10, 10)).unwrap()));
    group.bench_function("generic_bound_6_6", |bench| bench.iter(|| search_transparent_generic((6, 6)).unwrap()));
    group.finish();
}

criterion_group!(benches, scalars, power_sums, annulus, searches);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use skein_core::diagram::{compose, Diagram};
use skein_core::fixtures::{semisimple_symbolic, tl_numeric};
use skein_core::form::enumerate_circular_forms;
use skein_core::gram::{block_items, pair_closures, parse_seq, spanning_set, spherical_gram, SpanMode};
use skein_core::linalg::gauss_det;
use skein_core::matching::enumerate_matchings;
use skein_core::meander::{meander_det, meander_loops};
use skein_core::scalar::q;
use skein_core::tables::block_matrix_at;
use skein_core::EvalContext;
use std::hint::black_box;

fn bench_compose(c: &mut Criterion) {
    let ms = enumerate_matchings(5, 8).unwrap();
    let disks: Vec<Diagram> = ms.into_iter().map(Diagram::bare).collect();
    c.bench_function("compose all closures k=5", |b| {
        b.iter(|| {
            let mut loops = 0;
            for x in &disks {
                for y in &disks {
                    loops += compose(&y.reflect(), x).unwrap().circle_count();
                }
            }
            black_box(loops)
        })
    });
}

fn bench_forms(c: &mut Criterion) {
    c.bench_function("enumerate forms 10 circles", |b| b.iter(|| black_box(enumerate_circular_forms(10, 12).unwrap().len())));
}

fn bench_meander(c: &mut Criterion) {
    let mut g = c.benchmark_group("meander");
    g.sample_size(10);
    for n in [3, 4] {
        g.bench_with_input(BenchmarkId::new("det", n), &n, |b, &n| b.iter(|| black_box(meander_det(n).unwrap())));
    }
    g.bench_function("loops n=6", |b| b.iter(|| black_box(meander_loops(6).unwrap().len())));
    g.finish();
}

fn bench_gram(c: &mut Criterion) {
    let quad = semisimple_symbolic(2);
    let point = quad.variety.sample_points(1, 0).remove(0);
    let numeric = quad.specialize(&point);
    let ctx = EvalContext::spherical(&numeric, true);
    let items = spanning_set(3, 2, SpanMode::Disk, 6).unwrap().disks;
    let mut g = c.benchmark_group("gram");
    g.sample_size(10);
    g.bench_function("spherical k=3 dim 2", |b| b.iter(|| black_box(spherical_gram(&ctx, &items).unwrap())));

    let seq = parse_seq("1212121212").unwrap();
    let closures = pair_closures(&block_items(&seq, 5).unwrap()).unwrap();
    g.bench_function("table block 1212121212 det at one point", |b| {
        b.iter(|| black_box(gauss_det(&block_matrix_at(&quad, &closures, &point).unwrap())))
    });

    let tl = tl_numeric(q(3));
    let tl_ctx = EvalContext::spherical(&tl, true);
    let tl_items: Vec<Diagram> = enumerate_matchings(5, 8).unwrap().into_iter().map(Diagram::bare).collect();
    g.bench_function("tl gram k=5", |b| b.iter(|| black_box(spherical_gram(&tl_ctx, &tl_items).unwrap())));
    g.finish();
}

criterion_group!(benches, bench_compose, bench_forms, bench_meander, bench_gram);
criterion_main!(benches);

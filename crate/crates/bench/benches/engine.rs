use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use tanglekit_bench::word_batch;
use tanglekit_core::{ProjRat, TangleExpr};

fn bench_evaluate(c: &mut Criterion) {
    let words = word_batch(1, 256, 16);
    c.bench_function("word_to_matrix/len<=16", |b| {
        b.iter(|| {
            for w in &words {
                black_box(w.to_matrix());
            }
        })
    });
}

fn bench_normal_forms(c: &mut Criterion) {
    let matrices: Vec<_> = word_batch(2, 256, 16)
        .iter()
        .map(|w| w.to_matrix())
        .collect();
    c.bench_function("vt_normal_form/len<=16", |b| {
        b.iter(|| {
            for m in &matrices {
                black_box(m.vt_normal_form());
            }
        })
    });
    c.bench_function("matrix_to_word/len<=16", |b| {
        b.iter(|| {
            for m in &matrices {
                black_box(m.to_word());
            }
        })
    });
}

fn bench_synthesis(c: &mut Criterion) {
    let fractions: Vec<ProjRat> = (1i64..=50)
        .map(|q| ProjRat::new(101 - q, q).unwrap())
        .collect();
    c.bench_function("alternating_form/50 fractions", |b| {
        b.iter(|| {
            for v in &fractions {
                black_box(TangleExpr::from_fraction(v));
            }
        })
    });
}

fn bench_braid(c: &mut Criterion) {
    let words = word_batch(3, 256, 16);
    c.bench_function("braid_round_trip/len<=16", |b| {
        b.iter(|| {
            for w in &words {
                black_box(w.to_braid().to_gen_word());
            }
        })
    });
}

criterion_group!(
    benches,
    bench_evaluate,
    bench_normal_forms,
    bench_synthesis,
    bench_braid
);
criterion_main!(benches);

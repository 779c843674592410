use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use coset_core::golden::{min_det, Ideal, QamBox};
use coset_core::matrices::count_invertible;
use coset_core::outer_codes::{self, WeightKind};
use coset_core::rings::RingId;
use coset_core::verify::{brute_delta_min, certify_iso, coset_labels_m2f2};
use coset_core::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn golden_min_det(c: &mut Criterion) {
    let mut g = c.benchmark_group("min_det");
    g.sample_size(10);
    for radius in [1, 2] {
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, radius), &radius, |b, &r| {
                b.iter(|| min_det(QamBox::symmetric(r), None, exec))
            });
        }
    }
    g.finish();
}

fn outer_min_distance(c: &mut Criterion) {
    let mut g = c.benchmark_group("min_distance");
    let hex = outer_codes::lift_f4_code_to_m2f2(&outer_codes::hexacode());
    let rs = outer_codes::reed_solomon_full::<coset_core::rings::F8>(3);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "hexacode-lift"), |b| {
            b.iter(|| hex.min_distance(WeightKind::Hamming, exec).unwrap())
        });
        g.bench_function(BenchmarkId::new(name, "rs-8-3"), |b| {
            b.iter(|| rs.min_distance(WeightKind::Hamming, exec).unwrap())
        });
    }
    g.finish();
}

fn matrix_counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_invertible");
    for (ring, n) in [(RingId::F2i, 2), (RingId::F2, 4)] {
        for (name, exec) in MODES {
            g.bench_function(BenchmarkId::new(name, format!("M{n}({ring})")), |b| {
                b.iter(|| count_invertible(ring, n, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn coset_search(c: &mut Criterion) {
    let mut g = c.benchmark_group("delta_min");
    g.sample_size(10);
    let code = coset_labels_m2f2(&outer_codes::repetition(2));
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "repetition-2"), |b| {
            b.iter(|| brute_delta_min(&code, Ideal::OnePlusI, QamBox::new(-1, 1), 2, exec).unwrap())
        });
    }
    g.finish();
}

fn iso_certification(c: &mut Criterion) {
    let mut g = c.benchmark_group("certify_iso");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new(name, "f8m3"), |b| b.iter(|| certify_iso("f8m3", exec)));
    }
    g.finish();
}

criterion_group!(benches, golden_min_det, outer_min_distance, matrix_counts, coset_search, iso_certification);
criterion_main!(benches);

use std::hint::black_box;

use circlenum_core::bracket::{kauffman_bracket_with, BracketOptions};
use circlenum_core::diagram::{checkerboard, faces};
use circlenum_core::regions::region_decomposition;
use circlenum_core::states::{CircleCounter, State};
use circlenum_core::{dealternator_info, pretzel, Diagram, PretzelSpec};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn pretzel_of(t: &[i32]) -> Diagram {
    pretzel(&PretzelSpec::new(t.to_vec()).unwrap()).unwrap()
}

fn state_sum(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket");
    group.sample_size(20);
    for t in [&[4, -3, 3][..], &[5, 4, 4], &[6, -5, 5]] {
        let d = pretzel_of(t);
        let label = format!("{:?} n={}", t, d.crossing_count());
        for parallel in [false, true] {
            let opts = BracketOptions {
                parallel,
                ..BracketOptions::default()
            };
            let id = BenchmarkId::new(if parallel { "parallel" } else { "sequential" }, &label);
            group.bench_with_input(id, &d, |b, d| {
                b.iter(|| kauffman_bracket_with(black_box(d), opts).unwrap())
            });
        }
    }
    group.finish();
}

fn circle_count(c: &mut Criterion) {
    let d = pretzel_of(&[4, -3, 3]);
    let n = d.crossing_count();
    let mut counter = CircleCounter::new(&d);
    c.bench_function("circle count, 1024 states", |b| {
        b.iter(|| {
            (0..1u64 << n)
                .map(|s| counter.count(State::from_bits(s, n)))
                .sum::<usize>()
        })
    });
}

fn regions(c: &mut Criterion) {
    let d = pretzel_of(&[4, -3, 3, -2, 5]);
    c.bench_function("region decomposition", |b| {
        b.iter(|| {
            let d = black_box(&d);
            let info = dealternator_info(d).unwrap();
            let f = faces(d).unwrap();
            let col = checkerboard(d, &f).unwrap();
            region_decomposition(d, &info, &f, &col).unwrap()
        })
    });
}

criterion_group!(benches, state_sum, circle_count, regions);
criterion_main!(benches);

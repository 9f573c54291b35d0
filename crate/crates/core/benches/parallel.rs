//! Compares the rayon-partitioned enumeration against the sequential
//! fallback on the same workloads.

use criterion::{criterion_group, criterion_main, Criterion};

use permclass_core::classes::is_x_class;
use permclass_core::oracle::{
    count_perms_where, count_perms_where_seq, stat_table, stat_table_seq, Caps, ClassTag,
};

fn bench_counting(c: &mut Criterion) {
    let caps = Caps { max_perm_n: 9, max_word_n: 12 };
    let mut group = c.benchmark_group("count_x_class_n8");
    group.bench_function("parallel", |b| {
        b.iter(|| count_perms_where(8, &caps, is_x_class).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| count_perms_where_seq(8, &caps, is_x_class).unwrap())
    });
    group.finish();
}

fn bench_stat_table(c: &mut Criterion) {
    let caps = Caps { max_perm_n: 9, max_word_n: 12 };
    let mut group = c.benchmark_group("stat_table_aip_n8_k2");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| stat_table(8, 2, ClassTag::Aip, &caps).unwrap())
    });
    group.bench_function("sequential", |b| {
        b.iter(|| stat_table_seq(8, 2, ClassTag::Aip, &caps).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_counting, bench_stat_table);
criterion_main!(benches);

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use d2bound::bounds::BoundAnchor;
use d2bound::catalog::{parse_records, RankFilter, TABLE1_CSV};
use d2bound::chem::{parse_formula, MaterialSpec, PeriodicTable};
use d2bound::fom::evaluate_catalog;
use d2bound::quantity::Constants;
use d2bound::report::{emit_bounds_summary, emit_figure, emit_table, figure_points};
use d2bound_bench::replicated_catalog;

fn bench_chem(c: &mut Criterion) {
    let pt = PeriodicTable::standard();
    c.bench_function("parse_formula/Nd2Fe14B", |b| b.iter(|| parse_formula(black_box("Nd2Fe14B")).unwrap()));
    let boro = MaterialSpec::parse("0.8*SiO2+0.2*B2O3").unwrap();
    c.bench_function("nuclei_count/borosilicate", |b| b.iter(|| boro.nuclei_count(black_box(2.5e-10), pt).unwrap()));
}

fn bench_catalog(c: &mut Criterion) {
    c.bench_function("parse_records/table1", |b| b.iter(|| parse_records(black_box(TABLE1_CSV)).unwrap()));

    let pt = PeriodicTable::standard();
    let consts = Constants::default();
    let mut group = c.benchmark_group("evaluate_catalog");
    for copies in [1, 10, 100] {
        let cat = replicated_catalog(copies);
        group.bench_with_input(BenchmarkId::from_parameter(cat.len()), &cat, |b, cat| {
            b.iter(|| evaluate_catalog(cat, pt, &consts).unwrap())
        });
    }
    group.finish();
}

fn bench_report(c: &mut Criterion) {
    let pt = PeriodicTable::standard();
    let consts = Constants::default();
    let cat = replicated_catalog(1);
    let results = evaluate_catalog(&cat, pt, &consts).unwrap();
    let anchors = BoundAnchor::defaults();

    c.bench_function("emit_table", |b| b.iter(|| emit_table(&cat, &results, RankFilter::All)));
    c.bench_function("emit_bounds_summary", |b| {
        b.iter(|| emit_bounds_summary(&cat, &results, &anchors, &consts).unwrap())
    });
    let points = figure_points(&cat, &results, 3);
    c.bench_function("emit_figure", |b| b.iter(|| emit_figure(&points, &anchors).unwrap()));
}

criterion_group!(benches, bench_chem, bench_catalog, bench_report);
criterion_main!(benches);

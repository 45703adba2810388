use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kbideal_core::diagram::reduce_tangle;
use kbideal_core::ideals::{even_ideal, LaurentIdeal};
use kbideal_core::pairing::DEFAULT_MAX_I;
use kbideal_core::recoupling::{tet, tl_evaluate_bounded, TlNetwork};
use kbideal_core::{entry, kauffman_bracket, solve_graph_coefficients, CatalogName, LaurentPoly, TangleDiagram};

fn tangle(name: CatalogName) -> TangleDiagram {
    entry(name).tangle().unwrap().clone()
}

fn brackets(c: &mut Criterion) {
    let link = entry(CatalogName::Fig6Complement).link().unwrap().clone();
    c.bench_function("bracket/fig6_complement", |b| b.iter(|| kauffman_bracket(black_box(&link)).unwrap()));
    let h = tangle(CatalogName::TangleH);
    c.bench_function("reduce/tangle_H", |b| b.iter(|| reduce_tangle(black_box(&h)).unwrap()));
}

fn coefficients(c: &mut Criterion) {
    let mut group = c.benchmark_group("coefficients");
    group.sample_size(10);
    for name in CatalogName::TANGLES {
        let t = tangle(name);
        group.bench_function(name.as_str(), |b| b.iter(|| solve_graph_coefficients(black_box(&t), DEFAULT_MAX_I).unwrap()));
    }
    group.finish();
}

fn ideals(c: &mut Criterion) {
    let mut group = c.benchmark_group("ideals");
    group.sample_size(10);
    let h = tangle(CatalogName::TangleH);
    group.bench_function("even/tangle_H", |b| b.iter(|| even_ideal(black_box(&h)).unwrap()));
    let gens: Vec<LaurentPoly> = ["9", "4 + A^4", "3 + 3*A^2 - A^6", "A^-2 + 2*A^3"].iter().map(|s| s.parse().unwrap()).collect();
    group.bench_function("groebner/four_generators", |b| b.iter(|| LaurentIdeal::new(black_box(gens.clone()))));
    group.finish();
}

fn recoupling(c: &mut Criterion) {
    c.bench_function("tet/closed_form", |b| b.iter(|| tet(black_box(3), 3, 2, 3, 3, 2).unwrap()));
    let net = TlNetwork::tetrahedron(2, 2, 2, 2, 2, 2).unwrap();
    c.bench_function("tet/temperley_lieb", |b| b.iter(|| tl_evaluate_bounded(black_box(&net), 16).unwrap()));
}

criterion_group!(benches, brackets, coefficients, ideals, recoupling);
criterion_main!(benches);

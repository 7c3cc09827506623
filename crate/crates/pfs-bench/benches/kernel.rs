//! Criterion benchmarks for the kernel hot paths: validation,
//! canonicalization, composition, decomposition, cell enumeration, and
//! the bounded catalog generator.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use pfs_core::decompose::{decompose_fully, evaluate};
use pfs_core::enumerate::{canonical_form, enumerate_pfs, Bounds};
use pfs_core::omega::cells;
use pfs_core::structure_ops::{alpha, special_pushout};
use pfs_core::validate;

fn benches(c: &mut Criterion) {
    let a3 = alpha(3);
    let p2 = validate(&pfs_core::fixtures::p2()).unwrap();
    let nb = validate(&pfs_core::fixtures::path_n_bullet()).unwrap();

    c.bench_function("validate path_n_bullet", |b| {
        let h = pfs_core::fixtures::path_n_bullet();
        b.iter(|| validate(black_box(&h)).unwrap())
    });
    c.bench_function("canonical_form path_n_bullet", |b| {
        b.iter(|| canonical_form(black_box(&nb)))
    });
    c.bench_function("special_pushout alpha3 +2 alpha3", |b| {
        b.iter(|| special_pushout(black_box(&a3), black_box(&a3), 2).unwrap())
    });
    c.bench_function("decompose_fully + evaluate path_n_bullet", |b| {
        b.iter(|| {
            let tree = decompose_fully(black_box(&nb));
            evaluate(&nb, &tree)
        })
    });
    c.bench_function("cells p2 level 1", |b| b.iter(|| cells(black_box(&p2), 1)));
    c.bench_function("enumerate_pfs (2,3)", |b| {
        b.iter(|| enumerate_pfs(&Bounds::new(2, 3)).unwrap())
    });
}

criterion_group! {
    name = kernel;
    config = Criterion::default().sample_size(20);
    targets = benches
}
criterion_main!(kernel);

//! Microbenchmarks for the operations that dominate verification time:
//! field table construction, row reduction, both complete-regularity
//! verifiers, the MacWilliams transform, and low-weight word enumeration.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use crcodes::code::macwilliams;
use crcodes::cosets::{verify_completely_regular, verify_cr_bruteforce};
use crcodes::{Budget, Field};
use crcodes_bench::{hamming_63, hamming_7, long_extended_code, medium_extended_code};

fn field_tables(c: &mut Criterion) {
    c.bench_function("field_gf64_tables", |b| {
        b.iter(|| Field::new(black_box(2), black_box(6)).unwrap())
    });
}

fn generator_rref(c: &mut Criterion) {
    let generator = medium_extended_code().generator().clone();
    c.bench_function("rref_29x36", |b| b.iter(|| black_box(&generator).rref()));
}

fn syndrome_verifier(c: &mut Criterion) {
    let code = medium_extended_code();
    let budget = Budget::default();
    c.bench_function("verify_cr_syndrome_36_29", |b| {
        b.iter(|| verify_completely_regular(black_box(&code), &budget).unwrap())
    });
}

fn bruteforce_verifier(c: &mut Criterion) {
    let code = hamming_7();
    let budget = Budget::default();
    c.bench_function("verify_cr_bruteforce_7_4", |b| {
        b.iter(|| verify_cr_bruteforce(black_box(&code), &budget).unwrap())
    });
}

fn macwilliams_transform(c: &mut Criterion) {
    let code = long_extended_code();
    let budget = Budget::default();
    let dual = code.dual_weight_distribution(&budget).unwrap();
    let (n, r) = (code.n(), code.redundancy());
    c.bench_function("macwilliams_n136", |b| {
        b.iter(|| macwilliams(black_box(&dual), n, r, 2).unwrap())
    });
}

fn low_weight_enumeration(c: &mut Criterion) {
    let code = hamming_63();
    let budget = Budget::default();
    c.bench_function("weight3_words_63_57", |b| {
        b.iter(|| code.codewords_of_weight(black_box(3), &budget).unwrap())
    });
}

criterion_group!(
    benches,
    field_tables,
    generator_rref,
    syndrome_verifier,
    bruteforce_verifier,
    macwilliams_transform,
    low_weight_enumeration
);
criterion_main!(benches);

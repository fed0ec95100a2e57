//! End-to-end battery: one test per numbered check of the verification
//! suite. Each prints a single PASS/FAIL line and fails on anything but a
//! clean pass, so a run with `--nocapture` reads as a ten-line report.

use crcodes::suite::{run_one, Status};
use crcodes::Budget;

fn run(number: usize) {
    let result = run_one(number, &Budget::from_env());
    println!(
        "criterion {:2}  {:<34} {:>4}  ({} ms)  {}",
        result.number, result.id, result.status, result.millis, result.detail
    );
    assert_eq!(
        result.status,
        Status::Pass,
        "criterion {} ({}): {}",
        result.number,
        result.id,
        result.detail
    );
}

#[test]
fn criterion_01_construction_i_binary_k3() {
    run(1);
}

#[test]
fn criterion_02_construction_i_ternary_quaternary() {
    run(2);
}

#[test]
fn criterion_03_dual_spectra() {
    run(3);
}

#[test]
fn criterion_04_weight3_counts() {
    run(4);
}

#[test]
fn criterion_05_construction_ii_binary_k3() {
    run(5);
}

#[test]
fn criterion_06_extended_ii_theorem() {
    run(6);
}

#[test]
fn criterion_07_extension_family_i() {
    run(7);
}

#[test]
fn criterion_08_sporadic_codes() {
    run(8);
}

#[test]
fn criterion_09_oracle_equivalence() {
    run(9);
}

#[test]
fn criterion_10_invariant_suite() {
    run(10);
}

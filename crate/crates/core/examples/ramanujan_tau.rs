//! Ramanujan's τ(n) from Δ = q Π(1 − qⁿ)²⁴, its Hecke relations and the
//! Ramanujan bound.

use std::time::Instant;

use zetalab::lfun::{ramanujan_tau, tau_hecke_defects};

fn main() {
    let start = Instant::now();
    let tau = ramanujan_tau(10_000);
    println!("τ(1..10⁴) in {:?}", start.elapsed());
    for n in [1, 2, 3, 5, 7, 11, 9999, 10_000] {
        println!("τ({n}) = {}", tau[n - 1]);
    }
    let checks = tau_hecke_defects(&tau);
    println!(
        "{} pairs checked; Hecke failures {}, τ(p²) failures {}, bound failures {}",
        checks.pairs_checked,
        checks.hecke_failures.len(),
        checks.square_failures.len(),
        checks.bound_failures.len()
    );
}

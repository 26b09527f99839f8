//! Kummer congruences and the p-adic convergence of Euler-modified ζ(1 − n).

use zetalab::padic::{kl_interpolate, kummer_check, kummer_suite};

fn main() -> zetalab::Result<()> {
    let r = kummer_check(5, 2, 22, 1)?;
    println!("p = 5, m = 2, n = 22, a = 1: valuation {:?} (need ≥ {:?})", r.valuation, r.required);

    for p in [5, 7, 13] {
        let suite = kummer_suite(p, 60, 2)?;
        let worst = suite.iter().filter_map(|x| x.3.valuation.map(|v| v - x.3.required.unwrap_or(0))).min();
        println!("p = {p}: {} instances, all pass: {}, smallest slack {:?}", suite.len(), suite.iter().all(|x| x.3.passes), worst);
    }

    for (p, u, k) in [(5, 1, 4), (7, 3, 3), (13, 5, 2)] {
        let kl = kl_interpolate(p, u, k)?;
        let n: Vec<usize> = kl.terms.iter().map(|t| t.n).collect();
        let v: Vec<Option<i64>> = kl.differences.iter().map(|d| d.valuation).collect();
        println!("p = {p}, u = {u}: n = {n:?}, valuations of differences {v:?}");
    }

    match kl_interpolate(5, 2, 3) {
        Err(e) => println!("u = 2: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

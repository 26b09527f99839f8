use std::f64::consts::PI;
use std::fmt::Write;
use std::path::Path;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Command, Report, RunConfig};
use crate::dynzeta::{log_det_identity, periodic_counts, weil_p1, zeta_rationality, TransitionMatrix};
use crate::ene::{dirichlet_factor, unit_equation_check, UnitPolynomial};
use crate::explicit::{delsarte_pairing, is_jump_point, landau_slope, psi_explicit, PrimeTables, TestFunction};
use crate::lfun::{
    chi3, completed_lambda, ramanujan_tau, tau_hecke_defects, xi, zeta, zeta_negative, Family,
    lambda_functional_residual, hardy_z,
};
use crate::padic::{kl_interpolate, kummer_suite};
use crate::special::{primes_up_to, ExactRational};
use crate::stats::{
    delta_histogram, dip_family, dip_score, gue_pair_density, pair_correlation, DIP_BIN_WIDTH, DIP_WINDOW,
};
use crate::zeros::{count_zeros, find_zeros, load_or_find, save_zeros, ZeroSet};
use crate::{Error, Result};

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn label(family: &Family) -> String {
    family.to_string().replace(':', "_")
}

pub(super) fn dispatch(config: &RunConfig, report: &mut Report) -> Result<()> {
    match &config.command {
        Command::Eval { s } => eval(config, *s, report),
        Command::Zeros => zeros(config, report),
        Command::Count => count(config, report),
        Command::Explicit => explicit(config, report),
        Command::Stats => stats(config, report),
        Command::Ene { unit_check, prime } => ene(config, *unit_check, *prime, report),
        Command::Dynzeta { matrix, order, weil_prime } => dynzeta(config, matrix, *order, *weil_prime, report),
        Command::Padic { prime, residue, digits, max_index } => padic(*prime, *residue, *digits, *max_index, report),
        Command::Tau { limit } => tau(config, *limit, report),
        Command::Selfcheck => selfcheck(config, report),
    }
}

fn complex_json(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// |ξ(s) − ξ(1 − s)| / |ξ(s)|.
fn xi_residual(s: Complex64) -> f64 {
    let a = xi(s).completed;
    let b = xi(1.0 - s).completed;
    (a - b).norm() / a.norm().max(f64::MIN_POSITIVE)
}

fn eval(config: &RunConfig, s: Complex64, report: &mut Report) -> Result<()> {
    report.input("family", config.family.to_string());
    report.input("s", complex_json(s));
    let value = config.family.evaluate(s)?;
    report.output("value", complex_json(value));
    let residual = match &config.family {
        Family::Zeta => {
            report.output("completed", complex_json(xi(s).completed));
            xi_residual(s)
        }
        Family::Dirichlet(chi) => {
            report.output("completed", complex_json(completed_lambda(s, chi)?.completed));
            lambda_functional_residual(s, chi)?
        }
    };
    if s.re == 0.5 && config.family.check_supported().is_ok() {
        report.output("hardy_z", hardy_z(s.im, &config.family)?);
    }
    report.verdict("functional equation residual", residual, "≤ 1e-9", residual <= 1e-9);
    Ok(())
}

fn zero_set(config: &RunConfig, family: &Family, height: f64) -> Result<ZeroSet> {
    load_or_find(&config.cache_dir, family, height)
}

fn zeros(config: &RunConfig, report: &mut Report) -> Result<()> {
    report.input("family", config.family.to_string());
    report.input("height", config.height);
    let set = zero_set(config, &config.family, config.height)?;
    let n = count_zeros(config.height, &config.family)?;
    report.output("zeros", set.len());
    report.output("first_ordinates", &set.ordinates()[..set.len().min(10)]);
    report.verdict(
        "argument-principle count equals zeros found",
        [n.count, set.len()],
        "exact",
        n.count == set.len(),
    );
    std::fs::create_dir_all(&config.out_dir).map_err(|e| Error::io(&config.out_dir, e))?;
    let path = config.out_dir.join(format!("zeros-{}.csv", label(&config.family)));
    save_zeros(&set, &path)?;
    report.artifacts.push(path);
    Ok(())
}

fn count(config: &RunConfig, report: &mut Report) -> Result<()> {
    report.input("family", config.family.to_string());
    report.input("height", config.height);
    let n = count_zeros(config.height, &config.family)?;
    report.output("count", n.count);
    report.output("raw", n.raw);
    report.output("main_term", n.main_term);
    let gap = (n.count as f64 - n.main_term).abs();
    let budget = 2.0 + 0.5 * config.height.ln().max(0.0);
    report.verdict("|N(T) − main term|", gap, format!("≤ {budget:.6}"), gap <= budget);
    Ok(())
}

fn explicit(config: &RunConfig, report: &mut Report) -> Result<()> {
    if config.family != Family::Zeta {
        return Err(Error::UnsupportedFamily("explicit formulas are implemented for zeta only".into()));
    }
    let (lo, hi) = config.range.unwrap_or((2.0, 100.0));
    if lo < 1.0 {
        return Err(Error::Usage("explicit range must start at 1 or above".into()));
    }
    let limit = config.prime_limit.unwrap_or(100_000).max(hi.ceil() as u64);
    report.input("height", config.height);
    report.input("range", [lo, hi]);
    report.input("prime_limit", limit);
    let tables = PrimeTables::new(limit);
    let full = zero_set(config, &Family::Zeta, config.height)?;
    let quarter = full.truncated(config.height / 4.0)?;

    let mut csv = String::from("x,psi,psi_explicit_T,psi_explicit_T_over_4\n");
    let (mut err_full, mut err_quarter, mut points) = (0.0, 0.0, 0usize);
    let mut k = lo.floor();
    while k + 0.5 <= hi {
        let x = k + 0.5;
        k += 1.0;
        if x <= 1.0 || is_jump_point(x) {
            continue;
        }
        let psi = tables.chebyshev_psi(x)?;
        let a = psi_explicit(x, &full)?;
        let b = psi_explicit(x, &quarter)?;
        err_full += (psi - a).abs();
        err_quarter += (psi - b).abs();
        points += 1;
        let _ = writeln!(csv, "{},{},{},{}", num(x), num(psi), num(a), num(b));
    }
    if points == 0 {
        return Err(Error::Usage("explicit range contains no sample points".into()));
    }
    let (mf, mq) = (err_full / points as f64, err_quarter / points as f64);
    report.output("mean_error_T", mf);
    report.output("mean_error_T_over_4", mq);
    report.verdict("ψ explicit-formula error shrinks from T/4 to T", [mq, mf], "strict decrease", mf < mq);
    report.artifact(&config.out_dir, "explicit-psi.csv", &csv)?;

    let landau = landau_slope(2.0, &full, config.height, 200)?;
    report.output("landau_slope_x2", landau.slope);
    report.output("landau_slope_expected", -(2f64.ln()) / (2.0 * PI));

    if config.height >= 100.0 && limit >= 10_000 {
        let phi = TestFunction::gaussian(6.0)?;
        let pairing = delsarte_pairing(&phi, &full, &tables)?;
        report.output("delsarte", &pairing);
        let d = pairing.relative_defect();
        report.verdict("Delsarte pairing, Gaussian σ = 6", d, "≤ 1e-3 relative", d <= 1e-3);
    }
    Ok(())
}

fn stats(config: &RunConfig, report: &mut Report) -> Result<()> {
    config.family.check_supported()?;
    report.input("family", config.family.to_string());
    report.input("height", config.height);
    report.input("bins", config.bin_width);
    let set = zero_set(config, &config.family, config.height)?;
    report.output("zeros", set.len());

    let pc = pair_correlation(&set, config.height, 3.0, config.bin_width)?;
    let h = &pc.histogram;
    let mut csv = String::from("bin_lo,bin_hi,count,density,gue\n");
    for i in 0..h.bins() {
        let _ = writeln!(
            csv,
            "{},{},{},{},{}",
            num(h.bin_edges[i]),
            num(h.bin_edges[i + 1]),
            h.counts[i],
            num(h.density(i)),
            num(gue_pair_density(h.center(i)))
        );
    }
    report.artifact(&config.out_dir, &format!("pair-correlation-{}.csv", label(&config.family)), &csv)?;
    let mad = pc.mean_abs_deviation();
    let first = h.density(0);
    report.verdict("pair correlation mean |density − GUE| on [0, 3]", mad, "≤ 0.1", mad <= 0.1);
    report.verdict("pair correlation first bin (repulsion)", first, "< 0.25", first < 0.25);

    let (lo, hi) = config.range.unwrap_or((0.0, 60.0));
    let deltas = delta_histogram(&set, &set, (lo, hi), DIP_BIN_WIDTH)?;
    report.artifact(&config.out_dir, &format!("deltas-{}.csv", label(&config.family)), &deltas.to_csv())?;
    let predicted_family = match &config.family {
        Family::Zeta => Family::Zeta,
        Family::Dirichlet(chi) => dip_family(chi, chi)?,
    };
    let predicted = zero_set(config, &predicted_family, hi.max(1.0))?;
    let mut dips = Vec::new();
    for &g in predicted.ordinates().iter().take(3) {
        if let Ok(d) = dip_score(&deltas, g, DIP_WINDOW) {
            dips.push(d);
        }
    }
    report.artifact(
        &config.out_dir,
        &format!("dips-{}.json", label(&config.family)),
        &serde_json::to_string_pretty(&dips)?,
    )?;
    report.output("dips", &dips);
    if let Some(d) = dips.first() {
        report.verdict(
            &format!("delta dip at predicted γ = {:.6}", d.location),
            d.z_score,
            "z ≤ −2",
            d.z_score <= -2.0,
        );
    }
    Ok(())
}

fn ene(config: &RunConfig, unit_check: bool, prime: u64, report: &mut Report) -> Result<()> {
    report.input("prime", prime);
    if unit_check {
        let ok = unit_equation_check(prime)?;
        report.verdict(&format!("unit equation at p = {prime}"), ok, "exact", ok);
        if let Some(limit) = config.prime_limit {
            let failures: Vec<u64> = primes_up_to(limit)
                .into_iter()
                .filter(|&p| !unit_equation_check(p).unwrap_or(false))
                .collect();
            report.input("prime_limit", limit);
            report.verdict(&format!("unit equation for all p ≤ {limit}"), &failures, "no failures", failures.is_empty());
        }
        let chi = dirichlet_factor(&chi3(), prime)?;
        report.output("chi3_factor", chi.fraction().to_string());
        report.output("chi3_factor_squared", chi.fraction().star(chi.fraction()).to_string());
        return Ok(());
    }
    report.input("seed", config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rand_poly = |deg: usize| {
        let roots: Vec<ExactRational> = (0..deg)
            .map(|_| ExactRational::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=7).into()))
            .collect();
        UnitPolynomial::from_inverse_roots(&roots)
    };
    let instances = 50;
    let mut failures = 0;
    for _ in 0..instances {
        let (a, b, c) = (rand_poly(3), rand_poly(2), rand_poly(2));
        let ok = a.star(&b) == b.star(&a)
            && a.star(&b).star(&c) == a.star(&b.star(&c))
            && a.mul(&b).star(&c) == a.star(&c).mul(&b.star(&c))
            && a.star(&b).degree() == a.degree() * b.degree();
        failures += usize::from(!ok);
    }
    report.input("instances", instances);
    report.verdict("star ring axioms on random unit polynomials", failures, "0 failures", failures == 0);
    Ok(())
}

fn load_matrix(name: &str) -> Result<TransitionMatrix> {
    let path = Path::new(name);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        return text.parse();
    }
    TransitionMatrix::named(name)
}

fn dynzeta(config: &RunConfig, matrix: &str, order: usize, weil: Option<u64>, report: &mut Report) -> Result<()> {
    report.input("order", order);
    if let Some(p) = weil {
        report.input("prime", p);
        let w = weil_p1(p, order)?;
        report.output("series", &w.zeta);
        report.output("betti_degrees", w.betti_degrees);
        report.verdict("Z from point counts equals closed form", w.matches_closed_form, "exact", w.matches_closed_form);
        report.verdict(
            "functional equation Z(1/(pt)) = p t² Z(t)",
            w.functional_equation_sign,
            "sign +1, exact",
            w.functional_equation_sign == 1,
        );
        report.verdict(
            "inverse-root moduli {1, p}",
            w.riemann_hypothesis_holds,
            "exact",
            w.riemann_hypothesis_holds,
        );
        return Ok(());
    }
    let a = load_matrix(matrix)?;
    report.input("matrix", a.to_string().trim_end().replace('\n', "/"));
    let r = zeta_rationality(&a, order)?;
    report.output("series", &r.series_form);
    let det: Vec<String> = a.det_i_minus_ta().iter().map(|c| c.to_string()).collect();
    report.output("det_i_minus_ta", &det);
    report.verdict("exp(Σ N_j t^j/j) = 1/det(I − tA)", r.equal, "exact", r.equal);
    let ld = log_det_identity(&a, order)?;
    report.verdict("−log det(I − tA) = Σ Tr(A^j) t^j/j", ld, "exact", ld);
    let mut csv = String::from("k,periodic_points,series_coefficient\n");
    let counts = if order > 0 { periodic_counts(&a, order)? } else { Vec::new() };
    for k in 0..=order {
        let n = if k == 0 { String::new() } else { counts[k - 1].to_string() };
        let _ = writeln!(csv, "{k},{n},{}", r.series_form.coefficient(k));
    }
    report.artifact(&config.out_dir, "dynzeta-series.csv", &csv)?;
    Ok(())
}

fn padic(p: u64, u: u64, k: u32, max_index: usize, report: &mut Report) -> Result<()> {
    report.input("prime", p);
    report.input("residue", u);
    report.input("digits", k);
    let suite = kummer_suite(p, max_index, 2)?;
    let failures: Vec<(usize, usize, u32)> = suite.iter().filter(|r| !r.3.passes).map(|r| (r.0, r.1, r.2)).collect();
    report.output("kummer_instances", suite.len());
    report.verdict(
        &format!("Kummer congruences, m, n ≤ {max_index}, a ≤ 2"),
        &failures,
        "no failures",
        failures.is_empty(),
    );
    let kl = kl_interpolate(p, u, k)?;
    let vals: Vec<Option<i64>> = kl.differences.iter().map(|d| d.valuation).collect();
    report.output("indices", kl.terms.iter().map(|t| t.n).collect::<Vec<_>>());
    report.output("difference_valuations", &vals);
    report.verdict("consecutive differences gain valuation", &vals, "strictly increasing", kl.cauchy);
    Ok(())
}

fn tau(config: &RunConfig, limit: usize, report: &mut Report) -> Result<()> {
    if limit == 0 {
        return Err(Error::Usage("tau limit must be positive".into()));
    }
    report.input("limit", limit);
    let t = ramanujan_tau(limit);
    let checks = tau_hecke_defects(&t);
    report.output("pairs_checked", checks.pairs_checked);
    report.output("tau_last", t[limit - 1].to_string());
    report.verdict("Hecke multiplicativity", &checks.hecke_failures, "no failures", checks.hecke_failures.is_empty());
    report.verdict("τ(p²) = τ(p)² − p¹¹", &checks.square_failures, "no failures", checks.square_failures.is_empty());
    report.verdict("|τ(p)| ≤ 2p^{11/2}", &checks.bound_failures, "no failures", checks.bound_failures.is_empty());
    let mut csv = String::from("n,tau\n");
    for (i, v) in t.iter().enumerate() {
        let _ = writeln!(csv, "{},{v}", i + 1);
    }
    report.artifact(&config.out_dir, "tau.csv", &csv)?;
    Ok(())
}

fn selfcheck(config: &RunConfig, report: &mut Report) -> Result<()> {
    report.input("seed", config.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let z2 = zeta(Complex64::new(2.0, 0.0))?.re;
    let e = (z2 - PI * PI / 6.0).abs() / (PI * PI / 6.0);
    report.verdict("ζ(2) = π²/6", e, "≤ 1e-12 relative", e <= 1e-12);
    let exact = zeta_negative(2)? == ExactRational::new((-1).into(), 12.into());
    report.verdict("ζ(−1) = −1/12 exactly", exact, "exact", exact);

    let worst = (0..10)
        .map(|_| xi_residual(Complex64::new(rng.gen_range(0.0..1.0), rng.gen_range(-40.0..40.0))))
        .fold(0.0, f64::max);
    report.verdict("ξ(s) = ξ(1 − s) at 10 random strip points", worst, "≤ 1e-10", worst <= 1e-10);
    let worst = (0..5)
        .map(|_| {
            let s = Complex64::new(rng.gen_range(0.0..1.0), rng.gen_range(-30.0..30.0));
            lambda_functional_residual(s, &chi3())
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    report.verdict("Λ(s, χ₃) functional equation at 5 random points", worst, "≤ 1e-9", worst <= 1e-9);

    let found = find_zeros(50.0, &Family::Zeta)?.len();
    let counted = count_zeros(50.0, &Family::Zeta)?.count;
    report.verdict("ζ zeros below 50: found vs counted", [found, counted], "both 10", found == 10 && counted == 10);

    let bad: Vec<u64> = primes_up_to(200).into_iter().filter(|&p| !unit_equation_check(p).unwrap_or(false)).collect();
    report.verdict("unit equation for p ≤ 200", &bad, "no failures", bad.is_empty());
    let golden = zeta_rationality(&TransitionMatrix::golden_mean(), 20)?.equal;
    report.verdict("golden-mean shift rationality", golden, "exact", golden);
    let w = weil_p1(5, 20)?;
    let ok = w.matches_closed_form && w.functional_equation_sign == 1 && w.riemann_hypothesis_holds;
    report.verdict("ℙ¹ over 𝔽₅", ok, "exact", ok);
    let kummer = kummer_suite(7, 40, 1)?.iter().all(|r| r.3.passes);
    report.verdict("Kummer congruences p = 7, m, n ≤ 40", kummer, "exact", kummer);
    let kl = kl_interpolate(5, 1, 3)?.cauchy;
    report.verdict("5-adic interpolation, branch 1", kl, "strictly increasing valuations", kl);
    let tau = tau_hecke_defects(&ramanujan_tau(300)).all_hold();
    report.verdict("τ Hecke relations up to 300", tau, "exact", tau);
    Ok(())
}

use num_complex::Complex64;

use crate::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 30;

fn check(coeffs: &[Complex64], order: usize) -> Result<()> {
    if coeffs.first() != Some(&Complex64::new(1.0, 0.0)) {
        return Err(Error::Precondition("f must start with constant coefficient 1".into()));
    }
    if order == 0 || order > MAX_ORDER {
        return Err(Error::Precondition(format!("order must be in 1..={MAX_ORDER}, got {order}")));
    }
    Ok(())
}

/// b_1..b_order in −log f = Σ b_k X^k for f = Σ coeffs[j] X^j, X = e^{−λs}.
pub fn log_coefficients(coeffs: &[Complex64], order: usize) -> Result<Vec<Complex64>> {
    check(coeffs, order)?;
    let a = |j: usize| coeffs.get(j).copied().unwrap_or_default();
    // L = log f satisfies f L' = f', i.e. m l_m = m a_m − Σ_{k<m} k l_k a_{m−k}
    let mut l = vec![Complex64::default(); order + 1];
    for m in 1..=order {
        let mut acc = a(m) * m as f64;
        for k in 1..m {
            acc -= l[k] * k as f64 * a(m - k);
        }
        l[m] = acc / m as f64;
    }
    Ok(l[1..].iter().map(|v| -v).collect())
}

/// Power sums p_1..p_order of the roots of X^d + a_1 X^{d−1} + … + a_d by
/// Newton's identities.
pub fn newton_power_sums(coeffs: &[Complex64], order: usize) -> Result<Vec<Complex64>> {
    check(coeffs, order)?;
    let d = coeffs.len() - 1;
    let mut p = vec![Complex64::default(); order + 1];
    for m in 1..=order {
        let mut acc = if m <= d { -coeffs[m] * m as f64 } else { Complex64::default() };
        for i in 1..m.min(d + 1) {
            acc -= coeffs[i] * p[m - i];
        }
        p[m] = acc;
    }
    Ok(p[1..].to_vec())
}

/// max_m |p_m − m·b_m| for m ≤ order.
pub fn newton_poisson_check(coeffs: &[Complex64], lambda: f64, order: usize) -> Result<f64> {
    if !(lambda > 0.0) {
        return Err(Error::Domain(format!("frequency λ must be positive, got {lambda}")));
    }
    let b = log_coefficients(coeffs, order)?;
    let p = newton_power_sums(coeffs, order)?;
    Ok(p.iter()
        .zip(&b)
        .enumerate()
        .map(|(i, (pm, bm))| (pm - bm * (i + 1) as f64).norm() / (1.0 + pm.norm()))
        .fold(0.0, f64::max))
}

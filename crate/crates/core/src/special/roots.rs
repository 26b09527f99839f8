//! Numerical roots of complex polynomials (Aberth–Ehrlich iteration).

use num_complex::Complex64;

/// Evaluates p and p' at z; `coeffs[k]` multiplies z^k.
fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &ck in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + ck;
    }
    (p, dp)
}

/// All roots of Σ coeffs[k] z^k. Trailing zero coefficients are dropped.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut coeffs = coeffs.to_vec();
    while coeffs.last().is_some_and(|c| c.norm() == 0.0) {
        coeffs.pop();
    }
    let degree = coeffs.len().saturating_sub(1);
    if degree == 0 {
        return Vec::new();
    }
    let lead = coeffs[degree];
    let radius = 1.0
        + coeffs[..degree]
            .iter()
            .map(|c| (c / lead).norm())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / degree as f64;
            Complex64::from_polar(0.5 * radius, angle)
        })
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for i in 0..degree {
            let (p, dp) = eval_with_derivative(&coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..degree)
                .filter(|&j| j != i)
                .map(|j| 1.0 / (z[i] - z[j]))
                .sum();
            let step = ratio / (1.0 - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm() / z[i].norm().max(1e-300));
        }
        if moved < 1e-15 {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_known_roots() {
        // (z-1)(z-2)(z+3i) = z^3 + (-3+3i) z^2 + (2-9i) z + 6i
        let coeffs = [
            Complex64::new(0.0, 6.0),
            Complex64::new(2.0, -9.0),
            Complex64::new(-3.0, 3.0),
            Complex64::new(1.0, 0.0),
        ];
        let mut roots = polynomial_roots(&coeffs);
        roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        let expect = [Complex64::new(0.0, -3.0), Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)];
        for (r, e) in roots.iter().zip(expect.iter()) {
            assert!((r - e).norm() < 1e-12, "{r} vs {e}");
        }
    }
}

use crate::lfun::{hardy_z_unchecked, Family};
use crate::{Error, Result};

use super::count::count_zeros;
use super::ZeroSet;

/// Initial scan step in t.
pub const GRID_STEP: f64 = 0.05;
/// Refined brackets are at most this wide.
pub const REFINEMENT_TOLERANCE: f64 = 1e-9;
const MAX_REFINEMENTS: usize = 12;
const BLOCK_LENGTH: f64 = 40.0;

/// All zeros 1/2 + iγ with 0 < γ ≤ T, certified against the argument count.
///
/// [0, T] is cut into blocks; each block is scanned for sign changes of Z,
/// and cells that could hide a pair (sign-change cells and local minima of
/// |Z|) are bisected until the block's count matches N(hi) − N(lo).
pub fn find_zeros(height: f64, family: &Family) -> Result<ZeroSet> {
    if !(height > 0.0) || !height.is_finite() {
        return Err(Error::Domain(format!("find_zeros needs T > 0, got {height}")));
    }
    family.check_supported()?;
    let z = |t: f64| hardy_z_unchecked(t, family);
    let mut ordinates = Vec::new();
    let mut lo = 0.0;
    let mut below = 0usize;
    while lo < height {
        let target = (lo + BLOCK_LENGTH).min(height);
        let counted = count_zeros(target, family)?;
        let hi = counted.height;
        let expected = counted.count.checked_sub(below).ok_or_else(|| Error::Evaluation(format!(
            "argument count decreased from {below} to {} at T = {hi}",
            counted.count
        )))?;
        let brackets = scan_block(lo, hi, expected, &z)?;
        for (a, b) in brackets {
            ordinates.push(brent(a, b, &z));
        }
        below = counted.count;
        lo = hi;
    }
    Ok(ZeroSet::new(family.clone(), ordinates, height, REFINEMENT_TOLERANCE))
}

fn sign_change(a: f64, b: f64) -> bool {
    (a < 0.0) != (b < 0.0)
}

/// Sign-change brackets in (lo, hi], bisecting suspicious cells until there
/// are `expected` of them.
fn scan_block(lo: f64, hi: f64, expected: usize, z: &impl Fn(f64) -> f64) -> Result<Vec<(f64, f64)>> {
    let cells = ((hi - lo) / GRID_STEP).ceil().max(1.0) as usize;
    let mut grid: Vec<(f64, f64)> = (0..=cells)
        .map(|k| {
            let t = if k == cells { hi } else { lo + (hi - lo) * k as f64 / cells as f64 };
            (t, z(t))
        })
        .collect();
    for _ in 0..=MAX_REFINEMENTS {
        let found = grid.windows(2).filter(|w| sign_change(w[0].1, w[1].1)).count();
        if found == expected {
            return Ok(grid.windows(2).filter(|w| sign_change(w[0].1, w[1].1)).map(|w| (w[0].0, w[1].0)).collect());
        }
        if found > expected {
            break;
        }
        grid = refine(&grid, z);
    }
    let found = grid.windows(2).filter(|w| sign_change(w[0].1, w[1].1)).count();
    if found < expected {
        if let Some(t) = touch_point(&grid) {
            return Err(Error::MultiplicitySuspected(t));
        }
    }
    Err(Error::Completeness { from: lo, to: hi, found, expected })
}

/// Bisects every cell with a sign change or next to a local minimum of |Z|.
fn refine(grid: &[(f64, f64)], z: &impl Fn(f64) -> f64) -> Vec<(f64, f64)> {
    let n = grid.len();
    let mut split = vec![false; n - 1];
    for i in 0..n - 1 {
        if sign_change(grid[i].1, grid[i + 1].1) {
            split[i] = true;
        }
    }
    for i in 0..n {
        let here = grid[i].1.abs();
        let left = if i > 0 { grid[i - 1].1.abs() } else { f64::INFINITY };
        let right = if i + 1 < n { grid[i + 1].1.abs() } else { f64::INFINITY };
        if here <= left && here <= right {
            if i > 0 {
                split[i - 1] = true;
            }
            if i + 1 < n {
                split[i] = true;
            }
        }
    }
    let mut out = Vec::with_capacity(n + split.iter().filter(|&&s| s).count());
    for i in 0..n - 1 {
        out.push(grid[i]);
        if split[i] {
            let t = 0.5 * (grid[i].0 + grid[i + 1].0);
            out.push((t, z(t)));
        }
    }
    out.push(grid[n - 1]);
    out
}

/// A same-sign local minimum of |Z| that is tiny on the scale of the block.
fn touch_point(grid: &[(f64, f64)]) -> Option<f64> {
    let scale = grid.iter().map(|p| p.1.abs()).fold(0.0, f64::max);
    grid.windows(3)
        .filter(|w| !sign_change(w[0].1, w[1].1) && !sign_change(w[1].1, w[2].1))
        .filter(|w| w[1].1.abs() <= w[0].1.abs() && w[1].1.abs() <= w[2].1.abs())
        .filter(|w| w[1].1.abs() < 1e-6 * scale)
        .map(|w| w[1].0)
        .next()
}

/// Brent's method on a sign-change bracket, down to REFINEMENT_TOLERANCE.
fn brent(mut a: f64, mut b: f64, f: &impl Fn(f64) -> f64) -> f64 {
    let mut fa = f(a);
    let mut fb = f(b);
    if fa.abs() < fb.abs() {
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut fa, &mut fb);
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..200 {
        if fb == 0.0 {
            return b;
        }
        if (fb < 0.0) == (fc < 0.0) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol = 0.25 * REFINEMENT_TOLERANCE;
        let m = 0.5 * (c - b);
        if m.abs() <= tol {
            return b;
        }
        if e.abs() >= tol && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q) = if a == c {
                (2.0 * m * s, 1.0 - s)
            } else {
                let q0 = fa / fc;
                let r = fb / fc;
                (s * (2.0 * m * q0 * (q0 - r) - (b - a) * (r - 1.0)), (q0 - 1.0) * (r - 1.0) * (s - 1.0))
            };
            if p > 0.0 {
                q = -q;
            } else {
                p = -p;
            }
            if 2.0 * p < (3.0 * m * q - (tol * q).abs()).min((e * q).abs()) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += if d.abs() > tol { d } else { tol.copysign(m) };
        fb = f(b);
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brent_finds_simple_roots() {
        let r = brent(1.0, 2.0, &|x: f64| x * x - 2.0);
        assert!((r - 2f64.sqrt()).abs() < REFINEMENT_TOLERANCE);
        let r = brent(0.0, 3.0, &|x: f64| x.cos());
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < REFINEMENT_TOLERANCE);
    }

    #[test]
    fn scan_recovers_a_close_pair() {
        // two roots 0.01 apart sit inside one grid cell
        let f = |t: f64| (t - 1.013) * (t - 1.023) * (t - 2.5);
        let brackets = scan_block(0.0, 3.0, 3, &f).unwrap();
        assert_eq!(brackets.len(), 3);
        assert!(brackets[0].0 < 1.013 && 1.013 < brackets[0].1);
    }

    #[test]
    fn double_root_is_flagged() {
        let f = |t: f64| (t - 1.0123).powi(2) + 0.0;
        match scan_block(0.0, 2.0, 2, &f) {
            Err(Error::MultiplicitySuspected(t)) => assert!((t - 1.0123).abs() < 1e-3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn zeta_table_and_empty_range() {
        let zs = find_zeros(35.0, &Family::Zeta).unwrap();
        let expected = [14.134725, 21.022039, 25.01085, 30.42487, 32.935062];
        assert_eq!(zs.ordinates().len(), 5);
        for (g, e) in zs.ordinates().iter().zip(expected) {
            assert!((g - e).abs() < 1e-5);
        }
        assert!(find_zeros(10.0, &Family::Zeta).unwrap().is_empty());
    }
}

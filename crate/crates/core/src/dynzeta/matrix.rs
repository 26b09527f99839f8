use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::series::ExactSeries;
use crate::{Error, ExactRational, Result};

/// Largest series order accepted by the rationality check.
pub const MAX_ORDER: usize = 64;

/// A square 0/1 transition matrix of a subshift of finite type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TransitionMatrix {
    size: usize,
    entries: Vec<bool>,
}

type IntMatrix = Vec<Vec<BigInt>>;

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn trace(a: &IntMatrix) -> BigInt {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

impl TransitionMatrix {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 {
            return Err(Error::Domain("transition matrix is empty".into()));
        }
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::Domain(format!(
                    "row {} has {} entries, expected {size}",
                    i + 1,
                    row.len()
                )));
            }
            for &x in row {
                if x > 1 {
                    return Err(Error::Domain(format!("entry {x} in row {} is not 0 or 1", i + 1)));
                }
                entries.push(x == 1);
            }
        }
        Ok(TransitionMatrix { size, entries })
    }

    /// Row-major bits; bit i·l + j is entry (i, j).
    pub fn from_bits(size: usize, bits: u64) -> Self {
        assert!(size * size <= 64);
        TransitionMatrix {
            size,
            entries: (0..size * size).map(|k| bits >> k & 1 == 1).collect(),
        }
    }

    pub fn identity(size: usize) -> Self {
        TransitionMatrix {
            size,
            entries: (0..size * size).map(|k| k / size == k % size).collect(),
        }
    }

    /// The full shift on `size` symbols.
    pub fn full(size: usize) -> Self {
        TransitionMatrix {
            size,
            entries: vec![true; size * size],
        }
    }

    /// The golden-mean shift [[1,1],[1,0]].
    pub fn golden_mean() -> Self {
        TransitionMatrix {
            size: 2,
            entries: vec![true, true, true, false],
        }
    }

    /// `id<l>`, `full<l>`, `golden`, or literal rows separated by `/`,
    /// e.g. `11/10`.
    pub fn named(name: &str) -> Result<Self> {
        let size = |s: &str| {
            s.parse::<usize>()
                .ok()
                .filter(|&l| (1..=16).contains(&l))
                .ok_or_else(|| Error::Usage(format!("bad matrix size in {name:?}")))
        };
        if let Some(l) = name.strip_prefix("id") {
            Ok(Self::identity(size(l)?))
        } else if let Some(l) = name.strip_prefix("full") {
            Ok(Self::full(size(l)?))
        } else if name == "golden" {
            Ok(Self::golden_mean())
        } else if name.contains('/') || name.chars().all(|c| c == '0' || c == '1') {
            name.replace('/', "\n").parse()
        } else {
            Err(Error::Usage(format!("unknown matrix {name:?}")))
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.entries[i * self.size + j]
    }

    fn to_int(&self) -> IntMatrix {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| BigInt::from(self.get(i, j) as u8)).collect())
            .collect()
    }

    /// A^n by repeated squaring.
    pub fn power(&self, n: u32) -> Vec<Vec<BigInt>> {
        let l = self.size;
        let mut result: IntMatrix = (0..l)
            .map(|i| (0..l).map(|j| BigInt::from((i == j) as u8)).collect())
            .collect();
        let mut base = self.to_int();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = mat_mul(&result, &base);
            }
            e >>= 1;
            if e > 0 {
                base = mat_mul(&base, &base);
            }
        }
        result
    }

    /// N_n = Tr Aⁿ, the number of points of period n.
    pub fn periodic_count(&self, n: u32) -> BigInt {
        trace(&self.power(n))
    }

    /// det(I − tA) as ascending integer coefficients, from the principal
    /// minors: the t^k coefficient is (−1)^k times their sum over k-subsets.
    pub fn det_i_minus_ta(&self) -> Vec<BigInt> {
        let l = self.size;
        if l > 12 {
            return self.det_by_interpolation();
        }
        let mut coeffs = vec![BigInt::zero(); l + 1];
        coeffs[0] = BigInt::one();
        for mask in 1u32..(1 << l) {
            let idx: Vec<usize> = (0..l).filter(|&i| mask >> i & 1 == 1).collect();
            let minor: IntMatrix = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| BigInt::from(self.get(i, j) as u8)).collect())
                .collect();
            let k = idx.len();
            let d = bareiss_det(minor);
            if k % 2 == 0 {
                coeffs[k] += d;
            } else {
                coeffs[k] -= d;
            }
        }
        coeffs
    }

    fn det_by_interpolation(&self) -> Vec<BigInt> {
        // det(I − tA) at t = 0..=l, then exact Lagrange interpolation
        let l = self.size;
        let values: Vec<ExactRational> = (0..=l)
            .map(|t| {
                let m: IntMatrix = (0..l)
                    .map(|i| {
                        (0..l)
                            .map(|j| BigInt::from((i == j) as i64 - t as i64 * self.get(i, j) as i64))
                            .collect()
                    })
                    .collect();
                ExactRational::from_integer(bareiss_det(m))
            })
            .collect();
        let mut coeffs = vec![ExactRational::zero(); l + 1];
        for (i, vi) in values.iter().enumerate() {
            let mut basis = vec![ExactRational::one()];
            let mut denom = ExactRational::one();
            for j in 0..=l {
                if j == i {
                    continue;
                }
                let mut next = vec![ExactRational::zero(); basis.len() + 1];
                for (k, b) in basis.iter().enumerate() {
                    next[k + 1] += b;
                    next[k] -= b * ExactRational::from_integer(BigInt::from(j));
                }
                basis = next;
                denom *= ExactRational::from_integer(BigInt::from(i as i64 - j as i64));
            }
            for (k, b) in basis.iter().enumerate() {
                coeffs[k] += b * vi / &denom;
            }
        }
        coeffs.into_iter().map(|c| c.to_integer()).collect()
    }
}

/// Fraction-free Gaussian elimination.
fn bareiss_det(mut m: IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

impl FromStr for TransitionMatrix {
    type Err = Error;

    /// One row per line of 0/1 characters; blanks and `#` comments skipped.
    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .map(|line| line.split('#').next().unwrap_or("").trim())
            .filter(|line| !line.is_empty())
            .map(|line| {
                line.chars()
                    .filter(|c| !c.is_whitespace() && *c != ',')
                    .map(|c| match c {
                        '0' => Ok(0),
                        '1' => Ok(1),
                        other => Err(Error::Domain(format!("unexpected character {other:?} in matrix"))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        TransitionMatrix::new(rows)
    }
}

impl fmt::Display for TransitionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.size {
            for j in 0..self.size {
                write!(f, "{}", self.get(i, j) as u8)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Tr A, Tr A², …, Tr A^{nmax}.
pub fn periodic_counts(a: &TransitionMatrix, nmax: usize) -> Result<Vec<BigInt>> {
    if nmax == 0 {
        return Err(Error::Precondition("nmax must be at least 1".into()));
    }
    let base = a.to_int();
    let mut p = base.clone();
    let mut out = vec![trace(&p)];
    for _ in 1..nmax {
        p = mat_mul(&p, &base);
        out.push(trace(&p));
    }
    Ok(out)
}

/// Both sides of Z(t) = exp(Σ N_j t^j / j) = det(I − tA)^{−1}.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Rationality {
    pub series_form: ExactSeries,
    pub rational_form: ExactSeries,
    pub equal: bool,
}

fn trace_log_series(a: &TransitionMatrix, order: usize) -> Result<ExactSeries> {
    let mut c = vec![ExactRational::zero()];
    if order > 0 {
        for (j, n) in periodic_counts(a, order)?.into_iter().enumerate() {
            c.push(ExactRational::new(n, BigInt::from(j + 1)));
        }
    }
    Ok(ExactSeries::new(c, order))
}

fn check_order(order: usize) -> Result<()> {
    if order > MAX_ORDER {
        return Err(Error::Precondition(format!("order {order} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

pub fn zeta_rationality(a: &TransitionMatrix, order: usize) -> Result<Rationality> {
    check_order(order)?;
    let series_form = trace_log_series(a, order)?.exp()?;
    let det = ExactSeries::from_integers(a.det_i_minus_ta(), order);
    let rational_form = det.recip()?;
    let equal = series_form == rational_form;
    Ok(Rationality {
        series_form,
        rational_form,
        equal,
    })
}

/// −log det(I − tA) = Σ Tr(A^j) t^j / j, coefficientwise.
pub fn log_det_identity(a: &TransitionMatrix, order: usize) -> Result<bool> {
    check_order(order)?;
    let det = ExactSeries::from_integers(a.det_i_minus_ta(), order);
    Ok(det.log()?.neg() == trace_log_series(a, order)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn counts() {
        assert_eq!(TransitionMatrix::full(2).periodic_count(3), BigInt::from(8));
        assert_eq!(periodic_counts(&TransitionMatrix::identity(3), 4).unwrap(), ints(&[3, 3, 3, 3]));
        assert_eq!(periodic_counts(&TransitionMatrix::golden_mean(), 3).unwrap(), ints(&[1, 3, 4]));
        let g = TransitionMatrix::golden_mean();
        for n in 1..12u32 {
            assert_eq!(g.periodic_count(n), periodic_counts(&g, n as usize).unwrap()[n as usize - 1]);
        }
    }

    #[test]
    fn determinants() {
        assert_eq!(TransitionMatrix::golden_mean().det_i_minus_ta(), ints(&[1, -1, -1]));
        assert_eq!(TransitionMatrix::full(3).det_i_minus_ta(), ints(&[1, -3, 0, 0]));
        assert_eq!(TransitionMatrix::identity(2).det_i_minus_ta(), ints(&[1, -2, 1]));
        let m = TransitionMatrix::from_bits(4, 0b1011_0110_1101_0011);
        assert_eq!(m.det_i_minus_ta(), m.det_by_interpolation());
    }

    #[test]
    fn parsing() {
        let m: TransitionMatrix = "# golden\n11\n10\n".parse().unwrap();
        assert_eq!(m, TransitionMatrix::golden_mean());
        assert_eq!(TransitionMatrix::named("11/10").unwrap(), m);
        assert_eq!(TransitionMatrix::named("id1").unwrap(), TransitionMatrix::identity(1));
        assert!("11\n1".parse::<TransitionMatrix>().is_err());
        assert!("12\n10".parse::<TransitionMatrix>().is_err());
        assert!(TransitionMatrix::named("id0").is_err());
    }

    #[test]
    fn rationality_examples() {
        let r = zeta_rationality(&TransitionMatrix::full(2), 20).unwrap();
        assert!(r.equal);
        for k in 0..=20 {
            assert_eq!(r.series_form.coefficient(k), &ExactRational::from_integer(BigInt::from(1u64 << k)));
        }
        let g = zeta_rationality(&TransitionMatrix::golden_mean(), 30).unwrap();
        assert!(g.equal);
        let (mut a, mut b) = (BigInt::one(), BigInt::one());
        for k in 0..=30 {
            assert_eq!(g.series_form.coefficient(k), &ExactRational::from_integer(a.clone()));
            let c = &a + &b;
            a = std::mem::replace(&mut b, c);
        }
        assert!(zeta_rationality(&TransitionMatrix::full(2), 65).is_err());
        assert!(log_det_identity(&TransitionMatrix::golden_mean(), 40).unwrap());
    }
}

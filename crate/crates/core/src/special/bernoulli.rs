use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ExactRational;

/// Exact Bernoulli number B_n with the convention z/(e^z − 1) = Σ B_n zⁿ/n!,
/// so B_1 = −1/2.
///
/// Uses the Akiyama–Tanigawa recurrence on exact rationals. For long runs of
/// large even indices [`bernoulli_even_table`] is much faster.
pub fn bernoulli(n: usize) -> ExactRational {
    if n == 1 {
        return ExactRational::new(BigInt::from(-1), BigInt::from(2));
    }
    if n > 1 && n % 2 == 1 {
        return ExactRational::zero();
    }
    let mut row: Vec<ExactRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(ExactRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * ExactRational::from_integer(BigInt::from(j));
        }
    }
    row.swap_remove(0)
}

/// `table[k] = B_{2k}` for k = 0..=max_k, from tangent numbers.
///
/// The tangent numbers T_k are built with integer-only updates and then
/// B_{2k} = (−1)^{k−1} 2k T_k / (2^{2k}(2^{2k} − 1)).
pub fn bernoulli_even_table(max_k: usize) -> Vec<ExactRational> {
    let mut out = Vec::with_capacity(max_k + 1);
    out.push(ExactRational::one());
    if max_k == 0 {
        return out;
    }
    // tangent[j] holds T_{j+1}
    let mut tangent: Vec<BigInt> = vec![BigInt::zero(); max_k];
    tangent[0] = BigInt::one();
    for k in 1..max_k {
        tangent[k] = &tangent[k - 1] * BigInt::from(k);
    }
    for k in 1..max_k {
        for j in k..max_k {
            // T_{j+1} <- (j-k) T_j + (j-k+2) T_{j+1}, with 1-based k+1
            let a = &tangent[j - 1] * BigInt::from(j - k);
            let b = &tangent[j] * BigInt::from(j - k + 2);
            tangent[j] = a + b;
        }
    }
    for k in 1..=max_k {
        let four_k = BigInt::one() << (2 * k);
        let den = &four_k * (&four_k - BigInt::one());
        let mut num = &tangent[k - 1] * BigInt::from(2 * k);
        if k % 2 == 0 {
            num = -num;
        }
        out.push(ExactRational::new(num, den));
    }
    out
}

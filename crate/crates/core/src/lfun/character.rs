use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::special::factorize;
use crate::{Error, Result};

/// A Dirichlet character χ mod q with its value table on residues 0..q.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DirichletCharacter {
    modulus: u64,
    index: u64,
    values: Vec<Complex64>,
    parity: u8,
    conductor: u64,
    primitive: bool,
}

/// A cyclic factor of (ℤ/qℤ)^× given by a generator lifted to modulus q.
#[derive(Debug, Clone, Copy)]
struct CyclicFactor {
    generator: u64,
    order: u64,
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

fn multiplicative_order(g: u64, m: u64) -> u64 {
    let mut x = g % m;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * g as u128) % m as u128) as u64;
        k += 1;
    }
    k
}

/// Lift `g mod m` to `q` so that it is ≡ 1 modulo the cofactor q/m.
fn crt_lift(g: u64, m: u64, q: u64) -> u64 {
    let rest = q / m;
    if rest == 1 {
        return g % q;
    }
    // x = g + m·k with x ≡ 1 (mod rest)
    let inv_m = mod_inverse(m % rest, rest);
    let k = (((1 + rest - g % rest) % rest) as u128 * inv_m as u128 % rest as u128) as u64;
    (g + m * k) % q
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let e = (a as i128).extended_gcd(&(m as i128));
    (e.x.rem_euclid(m as i128)) as u64
}

fn cyclic_factors(q: u64) -> Vec<CyclicFactor> {
    let mut out = Vec::new();
    for (p, e) in factorize(q) {
        let m = p.pow(e);
        if p == 2 {
            match e {
                1 => {}
                2 => out.push(CyclicFactor { generator: crt_lift(3, m, q), order: 2 }),
                _ => {
                    out.push(CyclicFactor { generator: crt_lift(m - 1, m, q), order: 2 });
                    out.push(CyclicFactor { generator: crt_lift(5, m, q), order: m / 4 });
                }
            }
        } else {
            let phi = m / p * (p - 1);
            let g = (2..m)
                .find(|&g| g % p != 0 && multiplicative_order(g, m) == phi)
                .expect("odd prime powers have primitive roots");
            out.push(CyclicFactor { generator: crt_lift(g, m, q), order: phi });
        }
    }
    out
}

/// Exact value of e^{2πi·num/den} when it is a fourth root of unity.
fn root_of_unity(num: u64, den: u64) -> Complex64 {
    let num = num % den;
    if (4 * num) % den == 0 {
        return match 4 * num / den {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * PI * num as f64 / den as f64)
}

/// Order of the character group mod q, i.e. φ(q).
pub fn group_order(q: u64) -> u64 {
    factorize(q).iter().map(|&(p, e)| p.pow(e - 1) * (p - 1)).product()
}

/// The character of modulus q with the given index. Index 0 is the
/// principal character; the others enumerate (ℤ/qℤ)^× dual in mixed radix
/// over a fixed set of cyclic generators.
pub fn make_character(q: u64, index: u64) -> Result<DirichletCharacter> {
    if q == 0 {
        return Err(Error::Domain("character modulus must be >= 1".into()));
    }
    let order = group_order(q);
    if index >= order {
        return Err(Error::CharacterIndex { modulus: q, index, order });
    }
    let factors = cyclic_factors(q);
    let mut digits = Vec::with_capacity(factors.len());
    let mut rest = index;
    for f in &factors {
        digits.push(rest % f.order);
        rest /= f.order;
    }
    let lcm = factors.iter().fold(1u64, |l, f| l.lcm(&f.order));

    let mut values = vec![Complex64::new(0.0, 0.0); q as usize];
    // walk every unit as a product of generator powers
    let mut exps = vec![0u64; factors.len()];
    loop {
        let mut residue = 1 % q;
        let mut phase = 0u64;
        for (i, f) in factors.iter().enumerate() {
            residue = ((residue as u128 * pow_mod(f.generator, exps[i], q) as u128) % q as u128) as u64;
            phase = (phase + digits[i] * exps[i] * (lcm / f.order)) % lcm;
        }
        values[residue as usize] = root_of_unity(phase, lcm);
        let mut i = 0;
        loop {
            if i == factors.len() {
                return Ok(DirichletCharacter::from_table(q, index, values));
            }
            exps[i] += 1;
            if exps[i] < factors[i].order {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

/// The unique primitive character of conductor 3.
pub fn chi3() -> DirichletCharacter {
    make_character(3, 1).expect("modulus 3 has two characters")
}

/// The nontrivial character mod 4.
pub fn chi4() -> DirichletCharacter {
    make_character(4, 1).expect("modulus 4 has two characters")
}

impl DirichletCharacter {
    fn from_table(modulus: u64, index: u64, values: Vec<Complex64>) -> Self {
        let parity = if modulus <= 2 || values[(modulus - 1) as usize].re > 0.0 { 0 } else { 1 };
        let mut chi = DirichletCharacter {
            modulus,
            index,
            values,
            parity,
            conductor: modulus,
            primitive: true,
        };
        chi.conductor = chi.compute_conductor();
        chi.primitive = chi.conductor == modulus;
        chi
    }

    fn compute_conductor(&self) -> u64 {
        let q = self.modulus;
        let mut divisors: Vec<u64> = (1..=q).filter(|d| q % d == 0).collect();
        divisors.sort_unstable();
        for d in divisors {
            let induced = (1..q.max(2))
                .filter(|&n| n.gcd(&q) == 1 && n % d == 1 % d)
                .all(|n| (self.value(n) - 1.0).norm() < 1e-9);
            if induced {
                return d;
            }
        }
        q
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn index(&self) -> u64 {
        self.index
    }

    /// χ(n), extended q-periodically.
    pub fn value(&self, n: u64) -> Complex64 {
        self.values[(n % self.modulus) as usize]
    }

    /// χ at a possibly negative integer.
    pub fn value_signed(&self, n: i64) -> Complex64 {
        self.values[n.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// a_χ ∈ {0, 1} with χ(−1) = (−1)^{a_χ}.
    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.primitive
    }

    pub fn is_principal(&self) -> bool {
        self.index == 0
    }

    /// Real-valued and nonprincipal.
    pub fn is_quadratic(&self) -> bool {
        !self.is_principal() && self.values.iter().all(|v| v.im == 0.0)
    }

    pub fn conj(&self) -> DirichletCharacter {
        let values = self.values.iter().map(|v| v.conj()).collect();
        Self::identify(self.modulus, values).expect("conjugate is a character of the same modulus")
    }

    /// Pointwise product χ·ψ as a character modulo lcm of the moduli.
    pub fn product(&self, other: &DirichletCharacter) -> DirichletCharacter {
        let q = self.modulus.lcm(&other.modulus);
        let values = (0..q).map(|n| self.value(n) * other.value(n)).collect();
        Self::identify(q, values).expect("product of characters is a character")
    }

    /// The primitive character mod the conductor that induces χ.
    pub fn primitive_inducer(&self) -> DirichletCharacter {
        let c = self.conductor;
        let q = self.modulus;
        let values = (0..c)
            .map(|r| {
                if r.gcd(&c) != 1 {
                    return Complex64::new(0.0, 0.0);
                }
                // any lift of r coprime to q
                let lift = (0..q).map(|k| r + k * c).find(|n| n.gcd(&q) == 1).expect("coprime lift");
                self.value(lift)
            })
            .collect();
        Self::identify(c, values).expect("inducer is a character mod its conductor")
    }

    /// Finds the index whose table matches `values`.
    fn identify(q: u64, values: Vec<Complex64>) -> Result<DirichletCharacter> {
        (0..group_order(q))
            .map(|i| make_character(q, i))
            .find(|chi| {
                chi.as_ref().is_ok_and(|chi| {
                    chi.values.iter().zip(&values).all(|(a, b)| (a - b).norm() < 1e-9)
                })
            })
            .unwrap_or_else(|| Err(Error::Domain(format!("no character mod {q} has this table"))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi3_table() {
        let chi = chi3();
        assert_eq!(chi.values(), &[Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)]);
        assert_eq!(chi.parity(), 1);
        assert!(chi.is_primitive() && chi.is_quadratic());
    }

    #[test]
    fn chi4_and_trivial() {
        let chi = chi4();
        assert_eq!(chi.value(3), Complex64::new(-1.0, 0.0));
        assert_eq!(chi.value(2), Complex64::new(0.0, 0.0));
        let one = make_character(1, 0).unwrap();
        assert_eq!(one.value(17), Complex64::new(1.0, 0.0));
        assert!(one.is_primitive());
        assert!(make_character(4, 2).is_err());
    }

    #[test]
    fn invariants_for_small_moduli() {
        for q in 1..=40u64 {
            for i in 0..group_order(q) {
                let chi = make_character(q, i).unwrap();
                for n in 0..q {
                    let v = chi.value(n);
                    if n.gcd(&q) != 1 {
                        assert_eq!(v, Complex64::new(0.0, 0.0));
                    } else {
                        assert!((v.norm() - 1.0).abs() < 1e-12);
                    }
                    for m in 0..q {
                        let lhs = chi.value(n * m);
                        assert!((lhs - v * chi.value(m)).norm() < 1e-12, "q={q} i={i} n={n} m={m}");
                    }
                }
                if q > 2 {
                    let expect = if chi.parity() == 0 { 1.0 } else { -1.0 };
                    assert!((chi.value(q - 1) - expect).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn characters_are_distinct_and_orthogonal() {
        for q in [5u64, 8, 12, 15, 16] {
            let chars: Vec<_> = (0..group_order(q)).map(|i| make_character(q, i).unwrap()).collect();
            for a in 0..q {
                for b in 0..q {
                    let s: Complex64 = chars.iter().map(|c| c.value(a) * c.value(b).conj()).sum();
                    let expect = if a.gcd(&q) == 1 && a == b { group_order(q) as f64 } else { 0.0 };
                    assert!((s - expect).norm() < 1e-12, "q={q} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn conductors() {
        // the principal character mod 9 is induced from modulus 1
        assert_eq!(make_character(9, 0).unwrap().conductor(), 1);
        let primitive_mod_5 = (1..4).all(|i| make_character(5, i).unwrap().is_primitive());
        assert!(primitive_mod_5);
        // χ3 lifted to modulus 6 has conductor 3
        let lifted = chi3().product(&make_character(2, 0).unwrap());
        assert_eq!(lifted.modulus(), 6);
        assert_eq!(lifted.conductor(), 3);
        assert_eq!(lifted.primitive_inducer(), chi3());
        let trivial = chi3().product(&chi3().conj());
        assert_eq!(trivial.primitive_inducer().modulus(), 1);
    }
}

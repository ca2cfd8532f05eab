//! Elementary number theory: Jacobi/Legendre symbols, deterministic 64-bit
//! primality, mod-2 linking numbers of primes, and the explicit 3-cocycle
//! representing the generator of `H^3(Z/n, Z/n)`.

use std::fmt;

use crate::bit::Bit;
use crate::error::{Error, Result};

/// Jacobi symbol `(a/n)` for odd positive `n`.
///
/// Equals the Legendre symbol when `n` is an odd prime, and is 0 exactly
/// when `gcd(a, n) > 1`. Computed by the reciprocity iteration with
/// explicit sign tracking; no factorization is needed.
pub fn jacobi(a: i64, n: u64) -> Result<i8> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::InvalidJacobiModulus(n));
    }
    let mut acc: i8 = 1;
    // (-a/n) = (-1/n) (a/n), and (-1/n) = -1 iff n = 3 mod 4.
    let mut num = if a < 0 {
        if n % 4 == 3 {
            acc = -acc;
        }
        (a.unsigned_abs() as u128 % n as u128) as u64
    } else {
        a as u64 % n
    };
    let mut den = n;
    loop {
        num %= den;
        if num == 0 {
            // (0/1) = 1; otherwise a common factor kills the symbol.
            return Ok(if den == 1 { acc } else { 0 });
        }
        // (2/den) = -1 iff den = 3, 5 mod 8.
        while num % 2 == 0 {
            if matches!(den % 8, 3 | 5) {
                acc = -acc;
            }
            num /= 2;
        }
        if num == 1 {
            return Ok(acc);
        }
        // num, den both odd: quadratic reciprocity flips the sign
        // iff both are 3 mod 4.
        if num % 4 == 3 && den % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut num, &mut den);
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, n: u64) -> u64 {
    let mut acc = 1u64;
    base %= n;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test, exact over the whole `u64` range.
///
/// Miller-Rabin with the seven-witness set {2, 325, 9375, 28178, 450775,
/// 9780504, 1795265022}, which is known to be deterministic below
/// 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let u = (n - 1) >> s;
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, u, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn check_admissible(p: u64) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::NotOneMod4(p));
    }
    Ok(())
}

/// Mod-2 linking number of two distinct primes `p, q = 1 mod 4`, defined
/// by `(-1)^lk2(p, q) = (p/q)`.
///
/// Symmetric in its arguments by quadratic reciprocity, since both primes
/// are `1 mod 4`; the symbol is evaluated literally as `(p/q)` and the
/// symmetry is property-tested rather than built in.
pub fn lk2(p: u64, q: u64) -> Result<Bit> {
    check_admissible(p)?;
    check_admissible(q)?;
    if p == q {
        return Err(Error::EqualPrimes(p));
    }
    let symbol = jacobi(p as i64, q)?;
    debug_assert!(symbol != 0, "distinct primes are coprime");
    Ok(Bit::from(symbol == -1))
}

/// The cochain `alpha(g1, g2, g3) = g1 * (g2 + g3 - (g2 + g3 mod n)) / n`
/// on `Z/n`, reduced mod `n`.
///
/// The middle factor is the carry of the addition `g2 + g3`, so the value
/// is `g1 * carry mod n` with `carry` in {0, 1}. This cochain is a
/// 3-cocycle and represents the generator of `H^3(Z/n, Z/n)`.
pub fn alpha_cochain(n: u64, g1: u64, g2: u64, g3: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::InvalidCochainModulus(n));
    }
    let g1 = g1 % n;
    let carry = u64::from((g2 % n) + (g3 % n) >= n);
    Ok(g1 * carry % n)
}

/// An ordered tuple of distinct primes `p1 < p2 < ... < pr`, all `1 mod 4`,
/// defining the real quadratic field `Q(sqrt(p1 * ... * pr))`.
///
/// The product `d` is the discriminant of the field (squarefree and
/// `1 mod 4` by construction).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeTuple {
    primes: Vec<u64>,
    d: u64,
}

impl PrimeTuple {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::EmptyTuple);
        }
        let mut d: u64 = 1;
        for (k, &p) in primes.iter().enumerate() {
            check_admissible(p)?;
            if k > 0 && primes[k - 1] >= p {
                return Err(Error::NotStrictlyIncreasing(primes[k - 1], p));
            }
            d = d.checked_mul(p).ok_or(Error::DiscriminantOverflow)?;
        }
        Ok(PrimeTuple { primes, d })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Number of primes `r`.
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    /// The discriminant `d = p1 * ... * pr`.
    pub fn discriminant(&self) -> u64 {
        self.d
    }
}

impl fmt::Display for PrimeTuple {
    /// Hyphen-joined primes, e.g. `5-29-37`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.primes.iter().enumerate() {
            if k > 0 {
                write!(f, "-")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for PrimeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeTuple({self})")
    }
}

//! Arithmetic in GF(p) for odd primes p.
//!
//! Residues are plain `u64` values already reduced into `[0, p)`; products go
//! through `u128` so any prime below 2^63 is safe. Primality is settled by
//! trial division, which is plenty for the desk-scale orders this crate
//! targets (a few hundred at most, a few million at the outside).

use crate::{Error, Result};

/// An odd prime modulus. Constructing one proves primality once; the
/// arithmetic methods then never need to re-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Prime> {
        if p < 3 || !is_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        Ok(Prime(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduce a possibly-negative integer into `[0, p)`.
    #[inline]
    pub fn reduce(self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.0
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.0 - b % self.0) % self.0
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a.is_multiple_of(self.0) {
            0
        } else {
            self.0 - a % self.0
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a as u128 * b as u128 % self.0 as u128) as u64
    }

    pub fn pow(self, base: u64, mut exp: u64) -> u64 {
        let mut base = base % self.0;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat: a^(p-2). Zero is rejected.
    pub fn inv(self, a: u64) -> Result<u64> {
        if a.is_multiple_of(self.0) {
            return Err(Error::NonInvertible);
        }
        Ok(self.pow(a, self.0 - 2))
    }

    /// `a / b` in GF(p).
    pub fn div(self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Quadratic character: +1 for a nonzero square, -1 for a nonsquare,
    /// 0 for a ≡ 0.
    pub fn eta(self, a: u64) -> i32 {
        if a.is_multiple_of(self.0) {
            return 0;
        }
        if self.pow(a, (self.0 - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }

    /// Is t a *nonzero* m-th power, i.e. t^((p-1)/m) ≡ 1? Requires m ≥ 2 and
    /// m | p-1 (otherwise the power classes are not what the caller thinks).
    pub fn is_mth_power(self, t: u64, m: u64) -> Result<bool> {
        let pm1 = self.0 - 1;
        if m < 2 || !pm1.is_multiple_of(m) {
            return Err(Error::BadPowerIndex { m, pm1 });
        }
        if t.is_multiple_of(self.0) {
            return Ok(false);
        }
        Ok(self.pow(t, pm1 / m) == 1)
    }

    /// Divisors m of p-1 with 2 ≤ m ≤ p-1, ascending. These are the m values
    /// for which the nonzero m-th powers form a proper subgroup.
    pub fn proper_power_divisors(self) -> Vec<u64> {
        let pm1 = self.0 - 1;
        (2..=pm1).filter(|m| pm1.is_multiple_of(*m)).collect()
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes in `[lo, hi]`, ascending.
pub fn odd_primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..=hi).filter(|&n| n % 2 == 1 && is_prime(n)).collect()
}

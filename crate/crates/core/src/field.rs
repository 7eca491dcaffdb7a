//! Arithmetic in the prime field F_p.
//!
//! Residues are stored in least-nonnegative form as `u64`. The modulus is
//! capped at 2^31 - 1 so that `a * b` for reduced `a`, `b` never overflows
//! a `u64`; everything here is desk-scale.

use serde::Serialize;

use crate::error::Error;

/// A checked prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Prime(u64);

impl Prime {
    /// Checks primality by trial division.
    pub fn new(value: u64) -> Result<Prime, Error> {
        if value > (1 << 31) - 1 {
            return Err(Error::ModulusTooLarge(value));
        }
        if value < 2 {
            return Err(Error::NotPrime(value));
        }
        if value % 2 == 0 {
            return if value == 2 { Ok(Prime(2)) } else { Err(Error::NotPrime(value)) };
        }
        let mut f = 3u64;
        while f * f <= value {
            if value % f == 0 {
                return Err(Error::NotPrime(value));
            }
            f += 2;
        }
        Ok(Prime(value))
    }

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce(self, a: u64) -> u64 {
        a % self.0
    }

    /// Reduces a signed integer to its least-nonnegative residue.
    #[inline]
    pub fn reduce_signed(self, a: i64) -> u64 {
        let p = self.0 as i64;
        (((a % p) + p) % p) as u64
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.0;
        let mut acc = 1 % self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue.
    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a % self.0 != 0, "inverse of zero");
        self.pow(a, self.0 - 2)
    }
}

/// Barrett-style reduction for the elimination inner loop.
///
/// Valid for inputs below 2^63; the row operation `a + (p - f) * b` with
/// reduced operands stays below 2^62 + 2^31.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Reducer {
    p: u64,
    magic: u64, // floor(2^64 / p)
}

impl Reducer {
    pub(crate) fn new(p: Prime) -> Reducer {
        let p = p.value();
        let magic = (u128::from(u64::MAX) + 1) / u128::from(p);
        Reducer { p, magic: magic as u64 }
    }

    #[inline]
    pub(crate) fn reduce(self, x: u64) -> u64 {
        debug_assert!(x < 1 << 63);
        let q = ((u128::from(x) * u128::from(self.magic)) >> 64) as u64;
        let r = x - q * self.p;
        if r >= self.p {
            r - self.p
        } else {
            r
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_check() {
        assert!(Prime::new(2).is_ok());
        assert!(Prime::new(7).is_ok());
        assert!(Prime::new(19).is_ok());
        assert!(Prime::new(1).is_err());
        assert!(Prime::new(0).is_err());
        assert!(Prime::new(6).is_err());
        assert!(Prime::new(91).is_err()); // 7 * 13
        assert!(Prime::new(1 << 32).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        for &pv in &[2u64, 3, 5, 7, 19, 101] {
            let p = Prime::new(pv).unwrap();
            for a in 1..pv {
                assert_eq!(p.mul(a, p.inv(a)), 1, "p={pv} a={a}");
            }
        }
    }

    #[test]
    fn barrett_matches_plain_mod() {
        for &pv in &[2u64, 3, 5, 7, 11, 19, 2147483647] {
            let red = Reducer::new(Prime::new(pv).unwrap());
            let samples = [
                0u64,
                1,
                pv - 1,
                pv,
                pv + 1,
                (pv - 1) * (pv - 1),
                (1 << 62) + 12345,
                (1 << 63) - 1,
            ];
            for &x in &samples {
                assert_eq!(red.reduce(x), x % pv, "p={pv} x={x}");
            }
        }
    }

    #[test]
    fn signed_reduction() {
        let p = Prime::new(5).unwrap();
        assert_eq!(p.reduce_signed(-1), 4);
        assert_eq!(p.reduce_signed(-5), 0);
        assert_eq!(p.reduce_signed(7), 2);
    }
}

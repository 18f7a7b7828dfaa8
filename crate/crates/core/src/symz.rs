//! Closed-form backend for the ring of integers.
//!
//! Ideals of `Z` are `nZ` for a generator `n >= 0`, so ideal arithmetic
//! is gcd/lcm/product on generators.  The only pure ideals of `Z` are
//! `0` and `Z` itself: for `n >= 2` an `f = f g` witness with `g` in
//! `nZ` would force `f (1 - g) = 0` with `1 - g` nonzero.

use std::fmt;

use crate::error::{Error, Result};

/// The ideal `nZ` of the integers, `n >= 0` (`0Z` is the zero ideal,
/// `1Z` the whole ring).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZIdeal(u64);

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl ZIdeal {
    pub fn new(generator: u64) -> ZIdeal {
        ZIdeal(generator)
    }

    pub fn zero() -> ZIdeal {
        ZIdeal(0)
    }

    pub fn whole() -> ZIdeal {
        ZIdeal(1)
    }

    pub fn generator(self) -> u64 {
        self.0
    }

    pub fn is_proper(self) -> bool {
        self.0 != 1
    }

    /// `nZ + mZ = gcd(n, m) Z`.
    pub fn sum(self, other: ZIdeal) -> ZIdeal {
        ZIdeal(gcd(self.0, other.0))
    }

    /// `nZ * mZ = nm Z`; fails if the generator overflows `u64`.
    pub fn product(self, other: ZIdeal) -> Result<ZIdeal> {
        self.0.checked_mul(other.0).map(ZIdeal).ok_or_else(|| {
            Error::InvalidConstruction("ideal generator product overflows u64".into())
        })
    }

    /// `nZ intersect mZ = lcm(n, m) Z`; fails on overflow.
    pub fn intersect(self, other: ZIdeal) -> Result<ZIdeal> {
        if self.0 == 0 || other.0 == 0 {
            return Ok(ZIdeal(0));
        }
        (self.0 / gcd(self.0, other.0))
            .checked_mul(other.0)
            .map(ZIdeal)
            .ok_or_else(|| Error::InvalidConstruction("ideal generator lcm overflows u64".into()))
    }

    pub fn contains(self, other: ZIdeal) -> bool {
        // mZ subset nZ iff n divides m (with 0Z smallest, 1Z largest).
        if self.0 == 0 {
            other.0 == 0
        } else {
            other.0.is_multiple_of(self.0)
        }
    }

    /// Pure ideals of `Z` are exactly `0` and `Z`.
    pub fn is_pure(self) -> bool {
        self.0 <= 1
    }

    /// Largest pure ideal inside `nZ`: the whole ring for `n = 1`, the
    /// zero ideal otherwise.
    pub fn pure_part(self) -> ZIdeal {
        if self.is_pure() {
            self
        } else {
            ZIdeal(0)
        }
    }

    /// Unit part `u(nZ)`: `f = f g` with `g` divisible by `n` forces
    /// `f = 0` unless `n = 1`.  Coincides with the pure part on `Z`.
    pub fn unit_part(self) -> ZIdeal {
        self.pure_part()
    }
}

impl fmt::Display for ZIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Z", self.0)
    }
}

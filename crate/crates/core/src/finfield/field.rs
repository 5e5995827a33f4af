use std::fmt;

use super::FieldError;

/// The prime field `F_t`. Elements are residues `0..t` stored as `u32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    t: u32,
}

fn is_prime(t: u32) -> bool {
    if t < 2 {
        return false;
    }
    let t = t as u64;
    (2..).take_while(|d| d * d <= t).all(|d| !t.is_multiple_of(d))
}

impl PrimeField {
    pub fn new(t: u32) -> Result<Self, FieldError> {
        if is_prime(t) {
            Ok(PrimeField { t })
        } else {
            Err(FieldError::NotPrime(t))
        }
    }

    pub fn order(self) -> u32 {
        self.t
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.t as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.t - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.t as u64) as u32
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.t;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.t), "zero has no inverse");
        self.pow(a, self.t as u64 - 2)
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        0..self.t
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        for t in [2, 3, 5, 7, 11, 13, 65521] {
            assert!(PrimeField::new(t).is_ok());
        }
        for t in [0, 1, 4, 6, 9, 15, 25] {
            assert_eq!(PrimeField::new(t), Err(FieldError::NotPrime(t)));
        }
    }

    #[test]
    fn arithmetic() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.add(5, 4), 2);
        assert_eq!(f.sub(2, 5), 4);
        assert_eq!(f.mul(3, 5), 1);
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        assert_eq!(f.neg(0), 0);
    }
}

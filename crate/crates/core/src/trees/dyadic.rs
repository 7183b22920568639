use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// An exact dyadic rational `numerator / 2^exponent` in `[0, 1]`, kept in
/// lowest terms (odd numerator, or `0/2^0`, or `1/2^0`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigUint,
    exponent: u32,
}

impl Dyadic {
    /// Builds `numerator / 2^exponent`, reducing to lowest terms. Fails when
    /// the value exceeds 1.
    pub fn new(numerator: impl Into<BigUint>, exponent: u32) -> Result<Self> {
        let d = Self::unchecked(numerator.into(), exponent);
        if d > Self::one() {
            return Err(Error::OutOfUnitInterval(d.to_string()));
        }
        Ok(d)
    }

    pub(crate) fn unchecked(mut numerator: BigUint, mut exponent: u32) -> Self {
        if numerator.is_zero() {
            return Self::zero();
        }
        let twos = numerator.trailing_zeros().unwrap_or(0).min(exponent as u64) as u32;
        numerator >>= twos;
        exponent -= twos;
        Dyadic {
            numerator,
            exponent,
        }
    }

    pub fn zero() -> Self {
        Dyadic {
            numerator: BigUint::zero(),
            exponent: 0,
        }
    }

    pub fn one() -> Self {
        Dyadic {
            numerator: BigUint::one(),
            exponent: 0,
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Numerator of `self` rescaled to denominator `2^exponent`
    /// (`exponent >= self.exponent`).
    fn scaled_to(&self, exponent: u32) -> BigUint {
        &self.numerator << (exponent - self.exponent) as usize
    }

    pub(crate) fn add(&self, other: &Dyadic) -> Dyadic {
        let e = self.exponent.max(other.exponent);
        Self::unchecked(self.scaled_to(e) + other.scaled_to(e), e)
    }

    /// `self - other`; requires `self >= other`.
    pub(crate) fn sub(&self, other: &Dyadic) -> Dyadic {
        let e = self.exponent.max(other.exponent);
        Self::unchecked(self.scaled_to(e) - other.scaled_to(e), e)
    }

    /// `self * 2^shift` for a signed shift.
    pub(crate) fn mul_pow2(&self, shift: i64) -> Dyadic {
        if shift >= 0 {
            let s = shift as u32;
            if s <= self.exponent {
                Self::unchecked(self.numerator.clone(), self.exponent - s)
            } else {
                Self::unchecked(&self.numerator << (s - self.exponent) as usize, 0)
            }
        } else {
            Self::unchecked(self.numerator.clone(), self.exponent + (-shift) as u32)
        }
    }

    /// `(index) / 2^exponent` for a raw breakpoint address.
    pub(crate) fn from_index(index: BigUint, exponent: u32) -> Dyadic {
        Self::unchecked(index, exponent)
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exponent.max(other.exponent);
        self.scaled_to(e).cmp(&other.scaled_to(e))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}

/// Accepts `a/2^p`, plain integers `0` and `1`, and `a/b` with `b` a power
/// of two.
impl FromStr for Dyadic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        let syntax = |offset: usize, message: &str| Error::Syntax {
            offset,
            message: message.to_string(),
        };
        let digits = |part: &str, at: usize| -> Result<BigUint> {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(syntax(at, "expected decimal digits"));
            }
            Ok(part.parse::<BigUint>().expect("digits only"))
        };
        let Some(slash) = text.find('/') else {
            return Dyadic::new(digits(text, 0)?, 0);
        };
        let numerator = digits(&text[..slash], 0)?;
        let denom = &text[slash + 1..];
        if let Some(power) = denom.strip_prefix("2^") {
            let p: u32 = power
                .parse()
                .map_err(|_| syntax(slash + 3, "expected exponent after 2^"))?;
            return Dyadic::new(numerator, p);
        }
        let d = digits(denom, slash + 1)?;
        if d.is_zero() || !(d.clone() & (d.clone() - 1u32)).is_zero() {
            return Err(syntax(slash + 1, "denominator must be a power of two"));
        }
        let p = d.bits() as u32 - 1;
        Dyadic::new(numerator, p)
    }
}

impl Dyadic {
    /// All dyadics in `[0, 1]` with exponent at most `max_exponent`, sorted.
    pub fn grid(max_exponent: u32) -> Vec<Dyadic> {
        let denom = 1u64 << max_exponent;
        (0..=denom)
            .map(|a| Dyadic::unchecked(BigUint::from(a), max_exponent))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Dyadic {
        s.parse().unwrap()
    }

    #[test]
    fn reduction_is_canonical() {
        assert_eq!(Dyadic::new(2u32, 2).unwrap(), d("1/2^1"));
        assert_eq!(Dyadic::new(4u32, 2).unwrap(), Dyadic::one());
        assert_eq!(Dyadic::new(0u32, 7).unwrap(), Dyadic::zero());
        assert_eq!(d("6/8"), d("3/2^2"));
        assert!(Dyadic::new(5u32, 2).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(d("0").to_string(), "0");
        assert_eq!(d("1").to_string(), "1");
        assert_eq!(d("2/2^2").to_string(), "1/2^1");
        assert_eq!(d("3/4").to_string(), "3/2^2");
    }

    #[test]
    fn parse_errors() {
        assert!("2".parse::<Dyadic>().is_err());
        assert!("1/3".parse::<Dyadic>().is_err());
        assert!("a/2^1".parse::<Dyadic>().is_err());
        assert!("1/2^x".parse::<Dyadic>().is_err());
    }

    #[test]
    fn arithmetic() {
        assert_eq!(d("1/4").add(&d("1/2")), d("3/4"));
        assert_eq!(d("3/4").sub(&d("1/4")), d("1/2"));
        assert_eq!(d("3/8").mul_pow2(1), d("3/4"));
        assert_eq!(d("3/4").mul_pow2(-2), d("3/16"));
        assert!(d("1/4") < d("1/2"));
        assert_eq!(Dyadic::grid(2).len(), 5);
    }
}

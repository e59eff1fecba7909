//! Fixed-length vectors over F2, packed into a single machine word.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, BitXor};

use crate::error::{Error, Result};

/// Largest ambient dimension representable by [`F2Vector`].
pub const MAX_DIM: usize = 64;

pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// An element of F2^len. Coordinate `i` lives in bit `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct F2Vector {
    bits: u64,
    len: usize,
}

impl F2Vector {
    pub fn zero(len: usize) -> Self {
        assert!(len <= MAX_DIM, "F2Vector length {len} exceeds {MAX_DIM}");
        Self { bits: 0, len }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(len: usize, i: usize) -> Self {
        assert!(i < len, "unit index {i} out of range for length {len}");
        Self::from_bits(1 << i, len)
    }

    /// Builds a vector from packed bits; bits at or above `len` are discarded.
    pub fn from_bits(bits: u64, len: usize) -> Self {
        assert!(len <= MAX_DIM, "F2Vector length {len} exceeds {MAX_DIM}");
        Self {
            bits: bits & mask(len),
            len,
        }
    }

    /// Builds a vector from a slice of 0/1 entries, coordinate 0 first.
    pub fn from_slice(entries: &[u8]) -> Result<Self> {
        if entries.len() > MAX_DIM {
            return Err(Error::DimensionTooLarge(entries.len()));
        }
        let bits = entries
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &b)| acc | (u64::from(b & 1) << i));
        Ok(Self {
            bits,
            len: entries.len(),
        })
    }

    /// Parses a string of `0`/`1` characters, coordinate 0 first.
    pub fn parse(s: &str) -> Result<Self> {
        let entries: Vec<u8> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                other => Err(Error::InvalidParameters(format!(
                    "unexpected character {other:?} in bit string"
                ))),
            })
            .collect::<Result<_>>()?;
        Self::from_slice(&entries)
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        (self.bits >> i) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len);
        if value {
            self.bits |= 1 << i;
        } else {
            self.bits &= !(1 << i);
        }
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Standard dot product over F2.
    pub fn dot(&self, other: &Self) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    /// Index of the lowest nonzero coordinate.
    pub fn pivot(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    /// Concatenation `(self, other)` in `F2^(len + other.len)`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        let len = self.len + other.len;
        if len > MAX_DIM {
            return Err(Error::DimensionTooLarge(len));
        }
        Ok(Self {
            bits: self.bits | (other.bits << self.len),
            len,
        })
    }

    /// Coordinates `start..start + len` as a vector of length `len`.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        assert!(start + len <= self.len);
        Self::from_bits(self.bits >> start, len)
    }

    pub fn to_vec(&self) -> Vec<u8> {
        (0..self.len).map(|i| u8::from(self.get(i))).collect()
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if self.len == len {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: len,
                found: self.len,
            })
        }
    }

    /// Bits reversed so that coordinate 0 is the most significant; used for
    /// lexicographic comparison of bit strings.
    fn lex_key(&self) -> u64 {
        self.bits.reverse_bits()
    }
}

impl Add for F2Vector {
    type Output = F2Vector;

    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.len, rhs.len, "adding vectors of different lengths");
        Self {
            bits: self.bits ^ rhs.bits,
            len: self.len,
        }
    }
}

impl BitXor for F2Vector {
    type Output = F2Vector;

    #[allow(clippy::suspicious_arithmetic_impl)]
    fn bitxor(self, rhs: Self) -> Self {
        self + rhs
    }
}

/// Lexicographic on the bit string read from coordinate 0.
impl Ord for F2Vector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for F2Vector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        let v = F2Vector::parse("1101").unwrap();
        assert_eq!(v.len(), 4);
        assert!(v.get(0) && v.get(1) && !v.get(2) && v.get(3));
        assert_eq!(v.to_string(), "1101");
    }

    #[test]
    fn lexicographic_order_reads_from_coordinate_zero() {
        let a = F2Vector::parse("0111").unwrap();
        let b = F2Vector::parse("1000").unwrap();
        assert!(a < b);
    }

    #[test]
    fn concat_and_slice() {
        let a = F2Vector::parse("10").unwrap();
        let b = F2Vector::parse("011").unwrap();
        let c = a.concat(&b).unwrap();
        assert_eq!(c.to_string(), "10011");
        assert_eq!(c.slice(2, 3), b);
    }

    #[test]
    fn rejects_bad_characters() {
        assert!(F2Vector::parse("10x").is_err());
    }
}

//! Coefficient values and compact blocks of them.
//!
//! Every coefficient of the product is -1, 0 or +1, so a block packs four
//! coefficients per byte; a 10^7-degree window costs about 2.5 MB.

use std::fmt;
use std::ops::Neg;

use crate::Error;

/// A single coefficient a(m), constrained to {-1, 0, +1} at construction.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coefficient(i8);

impl Coefficient {
    pub const MINUS_ONE: Coefficient = Coefficient(-1);
    pub const ZERO: Coefficient = Coefficient(0);
    pub const PLUS_ONE: Coefficient = Coefficient(1);

    pub fn new(value: i64) -> Result<Self, Error> {
        match value {
            -1..=1 => Ok(Self(value as i8)),
            _ => Err(Error::CoefficientOutOfRange { value }),
        }
    }

    pub fn value(self) -> i8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(-self.0)
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

// 2-bit codes: 00 = 0, 01 = +1, 10 = -1. 11 never occurs.
fn encode(c: Coefficient) -> u8 {
    match c.value() {
        0 => 0b00,
        1 => 0b01,
        _ => 0b10,
    }
}

fn decode(bits: u8) -> Coefficient {
    match bits {
        0b00 => Coefficient::ZERO,
        0b01 => Coefficient::PLUS_ONE,
        0b10 => Coefficient::MINUS_ONE,
        _ => unreachable!("invalid 2-bit coefficient code"),
    }
}

/// A contiguous run of coefficients a(lo), a(lo+1), ..., packed 4 per byte.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientBlock {
    lo: u64,
    len: u64,
    packed: Vec<u8>,
}

impl CoefficientBlock {
    pub fn new(lo: u64) -> Self {
        Self { lo, len: 0, packed: Vec::new() }
    }

    pub fn with_capacity(lo: u64, capacity: u64) -> Self {
        Self {
            lo,
            len: 0,
            packed: Vec::with_capacity(capacity.div_ceil(4) as usize),
        }
    }

    /// Build a block from raw -1/0/1 values; rejects anything else.
    pub fn from_values(lo: u64, values: &[i8]) -> Result<Self, Error> {
        let mut block = Self::with_capacity(lo, values.len() as u64);
        for &v in values {
            block.push(Coefficient::new(v as i64)?);
        }
        Ok(block)
    }

    /// Lowest degree covered.
    pub fn lo(&self) -> u64 {
        self.lo
    }

    /// Number of coefficients stored.
    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Highest degree covered, if any.
    pub fn hi(&self) -> Option<u64> {
        self.len.checked_sub(1).map(|d| self.lo + d)
    }

    pub fn push(&mut self, c: Coefficient) {
        let slot = (self.len / 4) as usize;
        let shift = (self.len % 4) * 2;
        if slot == self.packed.len() {
            self.packed.push(0);
        }
        self.packed[slot] |= encode(c) << shift;
        self.len += 1;
    }

    /// Coefficient at absolute degree `degree`, if covered.
    pub fn get(&self, degree: u64) -> Option<Coefficient> {
        let i = degree.checked_sub(self.lo)?;
        self.at(i)
    }

    /// Coefficient at offset `i` from the block start.
    pub fn at(&self, i: u64) -> Option<Coefficient> {
        if i >= self.len {
            return None;
        }
        let byte = self.packed[(i / 4) as usize];
        Some(decode((byte >> ((i % 4) * 2)) & 0b11))
    }

    pub fn iter(&self) -> impl Iterator<Item = Coefficient> + '_ {
        (0..self.len).map(|i| self.at(i).unwrap())
    }

    /// Unpacked copy, for comparisons and display.
    pub fn to_vec(&self) -> Vec<i8> {
        self.iter().map(Coefficient::value).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_bound_enforced() {
        assert!(Coefficient::new(-1).is_ok());
        assert!(Coefficient::new(0).is_ok());
        assert!(Coefficient::new(1).is_ok());
        assert_eq!(
            Coefficient::new(2),
            Err(Error::CoefficientOutOfRange { value: 2 })
        );
        assert_eq!(
            Coefficient::new(-2),
            Err(Error::CoefficientOutOfRange { value: -2 })
        );
    }

    #[test]
    fn pack_unpack_roundtrip() {
        let values: Vec<i8> = (0..1000).map(|i| [1, -1, 0, 0, 1, -1, -1][i % 7]).collect();
        let block = CoefficientBlock::from_values(7, &values).unwrap();
        assert_eq!(block.lo(), 7);
        assert_eq!(block.len(), 1000);
        assert_eq!(block.hi(), Some(1006));
        assert_eq!(block.to_vec(), values);
        assert_eq!(block.get(7).unwrap().value(), 1);
        assert_eq!(block.get(6), None);
        assert_eq!(block.get(1007), None);
    }

    #[test]
    fn empty_block() {
        let block = CoefficientBlock::new(0);
        assert!(block.is_empty());
        assert_eq!(block.hi(), None);
        assert_eq!(block.get(0), None);
    }
}

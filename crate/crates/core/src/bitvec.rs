use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::BitXorAssign;

use crate::error::{Error, Result};

/// A vector over GF(2), bit-packed into 64-bit words.
///
/// Coordinate `i` is bit `i % 64` of word `i / 64`. Bits beyond `len` are
/// kept zero so that equality, weight, and inner products can work on whole
/// words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// The zero vector of the given length.
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    /// Builds a vector of length `len` with ones exactly at `support`.
    ///
    /// # Panics
    ///
    /// Panics if a support coordinate is out of range.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut v = BitVector::zeros(len);
        for &i in support {
            v.set(i, true);
        }
        v
    }

    /// Parses a string of `0`/`1` characters, one per coordinate.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        let mut v = BitVector::zeros(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::input(alloc::format!(
                        "expected '0' or '1' in vector, found {ch:?}"
                    )))
                }
            }
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// # Panics
    ///
    /// Panics if `i >= len`.
    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "coordinate {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % 64);
        if value {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Position of the first nonzero coordinate, if any.
    pub fn leading(&self) -> Option<usize> {
        for (k, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(k * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Euclidean inner product over GF(2).
    ///
    /// # Panics
    ///
    /// Panics on length mismatch.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "inner product of unequal lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    /// Coordinates carrying a one, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Cyclic left rotation: coordinate `i` moves to `(i + k) % len`.
    pub fn rotated(&self, k: usize) -> BitVector {
        if self.len == 0 {
            return self.clone();
        }
        let k = k % self.len;
        let mut out = BitVector::zeros(self.len);
        for i in 0..self.len {
            if self.get(i) {
                out.set((i + k) % self.len, true);
            }
        }
        out
    }

    /// Renders the vector as a `0`/`1` string.
    pub fn to_bit_string(&self) -> String {
        let mut s = String::with_capacity(self.len);
        for i in 0..self.len {
            s.push(if self.get(i) { '1' } else { '0' });
        }
        s
    }
}

impl BitXorAssign<&BitVector> for BitVector {
    fn bitxor_assign(&mut self, rhs: &BitVector) {
        assert_eq!(self.len, rhs.len, "xor of unequal lengths");
        for (a, b) in self.words.iter_mut().zip(&rhs.words) {
            *a ^= b;
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bit_string())
    }
}

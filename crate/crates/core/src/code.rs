use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitvec::BitVector;
use crate::error::{Error, Result};
use crate::DEFAULT_ENUMERATION_CAP;

/// A binary linear code, stored as its canonical basis.
///
/// The basis is always in reduced row echelon form with strictly increasing
/// pivot columns, so two values compare equal exactly when they are the same
/// subspace of the same ambient space. The zero code has an empty basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    basis: Vec<BitVector>,
}

impl BinaryCode {
    /// The zero code of the given length.
    pub fn zero(length: usize) -> Self {
        BinaryCode {
            length,
            basis: Vec::new(),
        }
    }

    /// The full space `F2^length`.
    pub fn full(length: usize) -> Self {
        let basis = (0..length)
            .map(|i| BitVector::from_support(length, &[i]))
            .collect();
        BinaryCode { length, basis }
    }

    /// The span of the given rows, brought to canonical form.
    pub fn from_rows(length: usize, rows: &[BitVector]) -> Result<Self> {
        for row in rows {
            if row.len() != length {
                return Err(Error::input(format!(
                    "generator row has length {}, expected {length}",
                    row.len()
                )));
            }
        }
        Ok(BinaryCode {
            length,
            basis: rref(rows.iter().cloned()),
        })
    }

    /// Convenience constructor from `0`/`1` strings of equal length.
    pub fn from_bit_strings(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<BitVector> = rows
            .iter()
            .map(|s| BitVector::from_bit_str(s))
            .collect::<Result<_>>()?;
        let length = parsed.first().map_or(0, BitVector::len);
        BinaryCode::from_rows(length, &parsed)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The canonical basis rows, pivots strictly increasing.
    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    /// Pivot columns of the canonical basis, strictly increasing.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .iter()
            .map(|r| r.leading().expect("basis rows are nonzero"))
            .collect()
    }

    /// Canonical coset representative: `v` reduced by the basis.
    ///
    /// # Panics
    ///
    /// Panics if `v` has the wrong length.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.length, "vector/code length mismatch");
        let mut r = v.clone();
        for row in &self.basis {
            let p = row.leading().expect("basis rows are nonzero");
            if r.get(p) {
                r ^= row;
            }
        }
        r
    }

    /// Membership test.
    ///
    /// # Panics
    ///
    /// Panics if `v` has the wrong length.
    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// The dual code under the Euclidean inner product.
    pub fn dual(&self) -> BinaryCode {
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.length];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(self.length - self.dim());
        for free in (0..self.length).filter(|&c| !is_pivot[c]) {
            let mut v = BitVector::zeros(self.length);
            v.set(free, true);
            for (row, &p) in self.basis.iter().zip(&pivots) {
                if row.get(free) {
                    v.set(p, true);
                }
            }
            rows.push(v);
        }
        BinaryCode {
            length: self.length,
            basis: rref(rows.into_iter()),
        }
    }

    /// Sum of subspaces.
    pub fn sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        self.check_same_length(other)?;
        Ok(BinaryCode {
            length: self.length,
            basis: rref(self.basis.iter().chain(&other.basis).cloned()),
        })
    }

    /// Intersection of subspaces, via duality:
    /// `C ∩ D = (C^⊥ + D^⊥)^⊥`.
    pub fn intersect(&self, other: &BinaryCode) -> Result<BinaryCode> {
        self.check_same_length(other)?;
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Is `self` a subcode of `other`?
    pub fn is_subcode_of(&self, other: &BinaryCode) -> Result<bool> {
        self.check_same_length(other)?;
        Ok(self.basis.iter().all(|r| other.contains(r)))
    }

    /// Do the two codes intersect trivially (so their sum is direct)?
    pub fn meets_trivially(&self, other: &BinaryCode) -> Result<bool> {
        Ok(self.intersect(other)?.dim() == 0)
    }

    /// Is every pair of codewords orthogonal (`C ⊆ C^⊥`)?
    pub fn is_self_orthogonal(&self) -> bool {
        self.basis
            .iter()
            .enumerate()
            .all(|(i, r)| self.basis[i..].iter().all(|s| !r.dot(s)))
    }

    /// Is the code equal to its dual?
    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.length && self.is_self_orthogonal()
    }

    /// Minimum distance by exhaustive enumeration, with the default cap.
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_capped(DEFAULT_ENUMERATION_CAP)
    }

    /// Minimum distance, enumerating all `2^dim − 1` nonzero codewords.
    pub fn min_distance_capped(&self, cap: usize) -> Result<usize> {
        if self.dim() == 0 {
            return Err(Error::UndefinedDistance);
        }
        self.check_enumeration_cap(cap)?;
        let mut best = usize::MAX;
        self.walk_codewords(|w| best = best.min(w.weight()));
        Ok(best)
    }

    /// Weight enumerator `A_0 ..= A_n`, with the default cap.
    pub fn weight_enumerator(&self) -> Result<Vec<u64>> {
        self.weight_enumerator_capped(DEFAULT_ENUMERATION_CAP)
    }

    /// Weight enumerator by exhaustive enumeration.
    pub fn weight_enumerator_capped(&self, cap: usize) -> Result<Vec<u64>> {
        self.check_enumeration_cap(cap)?;
        let mut counts = vec![0u64; self.length + 1];
        counts[0] = 1;
        self.walk_codewords(|w| counts[w.weight()] += 1);
        Ok(counts)
    }

    /// All codewords, including zero. Subject to the default cap.
    pub fn codewords(&self) -> Result<Vec<BitVector>> {
        self.check_enumeration_cap(DEFAULT_ENUMERATION_CAP)?;
        let mut all = Vec::with_capacity(1usize << self.dim());
        all.push(BitVector::zeros(self.length));
        self.walk_codewords(|w| all.push(w.clone()));
        Ok(all)
    }

    /// Deletes the given coordinates (a set; duplicates are ignored) and
    /// re-canonicalizes.
    pub fn puncture(&self, positions: &[usize]) -> Result<BinaryCode> {
        let mut delete = vec![false; self.length];
        for &p in positions {
            if p >= self.length {
                return Err(Error::input(format!(
                    "puncture position {p} out of range for length {}",
                    self.length
                )));
            }
            delete[p] = true;
        }
        let keep: Vec<usize> = (0..self.length).filter(|&i| !delete[i]).collect();
        let rows: Vec<BitVector> = self
            .basis
            .iter()
            .map(|r| {
                let mut v = BitVector::zeros(keep.len());
                for (new, &old) in keep.iter().enumerate() {
                    if r.get(old) {
                        v.set(new, true);
                    }
                }
                v
            })
            .collect();
        BinaryCode::from_rows(keep.len(), &rows)
    }

    fn check_same_length(&self, other: &BinaryCode) -> Result<()> {
        if self.length != other.length {
            return Err(Error::input(format!(
                "codes of lengths {} and {} are not comparable",
                self.length, other.length
            )));
        }
        Ok(())
    }

    fn check_enumeration_cap(&self, cap: usize) -> Result<()> {
        let k = self.dim();
        if k > cap {
            return Err(Error::Capacity { dimension: k, cap });
        }
        if k > 63 {
            return Err(Error::Capacity { dimension: k, cap: 63 });
        }
        Ok(())
    }

    /// Visits every nonzero codeword once, in Gray-code order.
    fn walk_codewords(&self, mut visit: impl FnMut(&BitVector)) {
        let k = self.dim();
        let mut current = BitVector::zeros(self.length);
        for m in 1u64..(1u64 << k) {
            current ^= &self.basis[m.trailing_zeros() as usize];
            visit(&current);
        }
    }
}

/// Reduced row echelon form of the given rows; zero rows are dropped and
/// pivots end up strictly increasing. The result depends only on the span.
pub(crate) fn rref(rows: impl Iterator<Item = BitVector>) -> Vec<BitVector> {
    let mut basis: Vec<BitVector> = Vec::new();
    for mut r in rows {
        for row in &basis {
            let p = row.leading().expect("basis rows are nonzero");
            if r.get(p) {
                r ^= row;
            }
        }
        if let Some(p) = r.leading() {
            for row in &mut basis {
                if row.get(p) {
                    *row ^= &r;
                }
            }
            let at = basis
                .iter()
                .position(|row| row.leading().expect("nonzero") > p)
                .unwrap_or(basis.len());
            basis.insert(at, r);
        }
    }
    basis
}

/// Basis of `{ a : Σ a_i rows_i = 0 }`, the left kernel of the row list,
/// as coefficient vectors of length `rows.len()` in canonical form.
pub(crate) fn left_kernel(rows: &[BitVector]) -> Vec<BitVector> {
    let k = rows.len();
    let mut pivots: Vec<(BitVector, BitVector)> = Vec::new(); // (reduced row, combination)
    let mut kernel: Vec<BitVector> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        let mut combo = BitVector::from_support(k, &[i]);
        for (prow, pcombo) in &pivots {
            let p = prow.leading().expect("pivot rows are nonzero");
            if r.get(p) {
                r ^= prow;
                combo ^= pcombo;
            }
        }
        if r.is_zero() {
            kernel.push(combo);
        } else {
            pivots.push((r, combo));
        }
    }
    rref(kernel.into_iter())
}

/// Coefficients `a` with `Σ a_i rows_i = v`, if `v` lies in the span.
pub(crate) fn express_in_rows(v: &BitVector, rows: &[BitVector]) -> Option<BitVector> {
    let k = rows.len();
    let mut pivots: Vec<(BitVector, BitVector)> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        let mut combo = BitVector::from_support(k, &[i]);
        for (prow, pcombo) in &pivots {
            let p = prow.leading().expect("pivot rows are nonzero");
            if r.get(p) {
                r ^= prow;
                combo ^= pcombo;
            }
        }
        if !r.is_zero() {
            pivots.push((r, combo));
        }
    }
    let mut r = v.clone();
    let mut combo = BitVector::zeros(k);
    for (prow, pcombo) in &pivots {
        let p = prow.leading().expect("pivot rows are nonzero");
        if r.get(p) {
            r ^= prow;
            combo ^= pcombo;
        }
    }
    r.is_zero().then_some(combo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(rows: &[&str]) -> BinaryCode {
        BinaryCode::from_bit_strings(rows).unwrap()
    }

    #[test]
    fn canonical_basis_depends_only_on_the_span() {
        let c1 = code(&["110", "011", "101"]);
        let c2 = code(&["101", "011", "110"]);
        let c3 = code(&["011", "101"]);
        assert_eq!(c1, c2);
        assert_eq!(c1, c3);
        assert_eq!(c1.dim(), 2);
        // Reduced echelon form: the pivot columns 0 and 1 are cleared in the
        // other rows, so the first basis row is 101, not 110.
        assert_eq!(c1.basis()[0].to_bit_string(), "101");
        assert_eq!(c1.basis()[1].to_bit_string(), "011");
        assert_eq!(c1.pivots(), vec![0, 1]);
    }

    #[test]
    fn zero_and_full_codes() {
        let z = code(&["000"]);
        assert_eq!(z, BinaryCode::zero(3));
        assert_eq!(z.dim(), 0);
        assert_eq!(BinaryCode::full(3).dim(), 3);
        assert_eq!(code(&["1"]).dim(), 1);
    }

    #[test]
    fn dual_of_repetition_is_even_weight_code() {
        let rep = code(&["111"]);
        let even = code(&["110", "011"]);
        assert_eq!(rep.dual(), even);
        assert_eq!(even.dual(), rep);
        assert_eq!(BinaryCode::full(4).dual(), BinaryCode::zero(4));
        assert_eq!(BinaryCode::zero(4).dual(), BinaryCode::full(4));
    }

    #[test]
    fn dual_dimension_is_complementary() {
        let c = code(&["110010", "001101", "000011"]);
        assert_eq!(c.dim() + c.dual().dim(), 6);
        // every generator is orthogonal to every dual generator
        for r in c.basis() {
            for d in c.dual().basis() {
                assert!(!r.dot(d));
            }
        }
        assert_eq!(c.dual().dual(), c);
    }

    #[test]
    fn lattice_operations() {
        let c = code(&["1100", "0011"]);
        let d = code(&["1111"]);
        assert_eq!(c.sum(&c).unwrap(), c);
        assert_eq!(c.sum(&d).unwrap(), c);
        assert_eq!(c.intersect(&d).unwrap(), d);
        assert!(d.is_subcode_of(&c).unwrap());
        assert!(!c.is_subcode_of(&d).unwrap());
        let rep = code(&["111"]);
        let even = rep.dual();
        assert_eq!(rep.intersect(&even).unwrap(), BinaryCode::zero(3));
        assert!(rep.meets_trivially(&even).unwrap());
        assert!(c.sum(&code(&["111"])).is_err());
    }

    #[test]
    fn self_duality_flags() {
        let c = code(&["11"]);
        assert!(c.is_self_orthogonal());
        assert!(c.is_self_dual());
        let rep3 = code(&["111"]);
        assert!(!rep3.is_self_orthogonal());
        assert!(!rep3.is_self_dual());
        // self-orthogonal but too small to be self-dual
        let small = code(&["1111"]);
        assert!(small.is_self_orthogonal());
        assert!(!small.is_self_dual());
    }

    fn extended_hamming() -> BinaryCode {
        code(&["11110000", "00111100", "00001111", "10101010"])
    }

    #[test]
    fn extended_hamming_metrics() {
        let h = extended_hamming();
        assert_eq!(h.dim(), 4);
        assert!(h.is_self_dual());
        assert_eq!(h.min_distance().unwrap(), 4);
        let expected = {
            let mut w = vec![0u64; 9];
            w[0] = 1;
            w[4] = 14;
            w[8] = 1;
            w
        };
        assert_eq!(h.weight_enumerator().unwrap(), expected);
    }

    #[test]
    fn repetition_code_distance() {
        let rep = code(&["11111"]);
        assert_eq!(rep.min_distance().unwrap(), 5);
        assert_eq!(rep.weight_enumerator().unwrap(), vec![1, 0, 0, 0, 0, 1]);
    }

    #[test]
    fn distance_errors() {
        assert_eq!(
            BinaryCode::zero(4).min_distance(),
            Err(Error::UndefinedDistance)
        );
        let c = code(&["1100", "0011"]);
        assert_eq!(
            c.min_distance_capped(1),
            Err(Error::Capacity { dimension: 2, cap: 1 })
        );
    }

    #[test]
    fn puncturing() {
        let c = code(&["1101"]);
        assert_eq!(c.puncture(&[3]).unwrap(), code(&["110"]));
        assert_eq!(c.puncture(&[]).unwrap(), c);
        let rep = code(&["111"]);
        assert_eq!(rep.puncture(&[2]).unwrap(), code(&["11"]));
        assert!(rep.puncture(&[3]).is_err());
        // duplicates in the delete set are harmless
        assert_eq!(c.puncture(&[3, 3]).unwrap(), code(&["110"]));
    }

    #[test]
    fn kernel_and_expression_helpers() {
        let rows = [
            BitVector::from_bit_str("110").unwrap(),
            BitVector::from_bit_str("011").unwrap(),
            BitVector::from_bit_str("101").unwrap(),
        ];
        let kernel = left_kernel(&rows);
        assert_eq!(kernel.len(), 1);
        assert_eq!(kernel[0].to_bit_string(), "111"); // 110 + 011 + 101 = 0
        let v = BitVector::from_bit_str("101").unwrap();
        let coeffs = express_in_rows(&v, &rows[..2]).unwrap();
        assert_eq!(coeffs.to_bit_string(), "11");
        let outside = BitVector::from_bit_str("100").unwrap();
        assert!(express_in_rows(&outside, &rows[..2]).is_none());
    }

    #[test]
    fn reduce_produces_canonical_coset_representatives() {
        let c = code(&["1100", "0011"]);
        let v = BitVector::from_bit_str("1111").unwrap();
        assert!(c.contains(&v));
        let w = BitVector::from_bit_str("1000").unwrap();
        let r = c.reduce(&w);
        assert!(!r.is_zero());
        assert_eq!(c.reduce(&r), r);
    }
}

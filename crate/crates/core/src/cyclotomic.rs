//! Arithmetic in `Q = F2[x]/(x^p + 1)` for an odd prime `p`.
//!
//! Over GF(2) the quotient splits as `Q = I_0 ⊕ I_1 ⊕ … ⊕ I_t`, one ideal
//! per irreducible factor of `x^p + 1`: the factor `x + 1` plus
//! `t = (p−1)/s` factors of degree `s`, where `s` is the multiplicative
//! order of `2` modulo `p`. Each ideal is a finite field `F_{2^deg}` whose
//! identity is the corresponding central idempotent (computed honestly via
//! the extended Euclidean algorithm — the cofactors `(x^p+1)/q_j` generate
//! the ideals but are *not* idempotent in general).

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitvec::BitVector;
use crate::error::{Error, Result};
use crate::perm::{is_prime, Permutation};

/// Largest supported modulus exponent: `x^p + 1` with `p ≤ 64`.
pub const MAX_P: usize = 64;

/// Multiplicative order of `2` modulo an odd prime `p`.
pub fn ord2_mod_p(p: usize) -> Result<usize> {
    check_odd_prime(p)?;
    let mut value = 2 % p;
    let mut order = 1;
    while value != 1 {
        value = value * 2 % p;
        order += 1;
    }
    Ok(order)
}

fn check_odd_prime(p: usize) -> Result<()> {
    if p < 3 || !is_prime(p) {
        return Err(Error::input(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// An element of `F2[x]/(x^p + 1)`: coefficient `i` of the vector is the
/// coefficient of `x^i`. Multiplication is cyclic convolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPoly {
    coeffs: BitVector,
}

impl QuotientPoly {
    pub fn new(coeffs: BitVector) -> Self {
        QuotientPoly { coeffs }
    }

    pub fn zero(p: usize) -> Self {
        QuotientPoly {
            coeffs: BitVector::zeros(p),
        }
    }

    /// The ring identity `1 = x^0`.
    pub fn one(p: usize) -> Self {
        Self::x_power(p, 0)
    }

    /// The monomial `x^k`.
    pub fn x_power(p: usize, k: usize) -> Self {
        QuotientPoly {
            coeffs: BitVector::from_support(p, &[k % p]),
        }
    }

    pub fn from_bit_str(s: &str) -> Result<Self> {
        Ok(QuotientPoly {
            coeffs: BitVector::from_bit_str(s)?,
        })
    }

    pub fn modulus_exponent(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &BitVector {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// # Panics
    ///
    /// Panics if the operands live in different quotient rings.
    pub fn add(&self, other: &QuotientPoly) -> QuotientPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs ^= &other.coeffs;
        QuotientPoly { coeffs }
    }

    /// Cyclic convolution: multiplication modulo `x^p + 1`.
    ///
    /// # Panics
    ///
    /// Panics if the operands live in different quotient rings.
    pub fn mul(&self, other: &QuotientPoly) -> QuotientPoly {
        assert_eq!(
            self.coeffs.len(),
            other.coeffs.len(),
            "multiplying in different quotient rings"
        );
        let mut acc = BitVector::zeros(self.coeffs.len());
        for i in self.coeffs.support() {
            acc ^= &other.coeffs.rotated(i);
        }
        QuotientPoly { coeffs: acc }
    }

    /// Multiplication by `x^k` (a cyclic coefficient rotation).
    pub fn mul_x_power(&self, k: usize) -> QuotientPoly {
        QuotientPoly {
            coeffs: self.coeffs.rotated(k),
        }
    }

    pub fn pow(&self, mut e: u64) -> QuotientPoly {
        let mut base = self.clone();
        let mut acc = QuotientPoly::one(self.coeffs.len());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn to_bit_string(&self) -> alloc::string::String {
        self.coeffs.to_bit_string()
    }
}

/// The factorization of `x^p + 1` over GF(2) together with the resulting
/// ideal structure of the quotient ring.
///
/// Factors are ordered deterministically: `x + 1` first, the degree-`s`
/// factors then sorted by coefficient vector (highest degree read first).
/// Index `j` refers consistently to the factor `q_j`, the cofactor
/// `Q_j = (x^p+1)/q_j` generating the ideal `I_j`, and the idempotent `e_j`
/// acting as the identity of the field `I_j ≅ F_{2^{deg q_j}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealDecomposition {
    p: usize,
    s: usize,
    factors: Vec<BitVector>,
    ideal_gens: Vec<QuotientPoly>,
    idempotents: Vec<QuotientPoly>,
}

impl IdealDecomposition {
    pub fn new(p: usize) -> Result<Self> {
        check_odd_prime(p)?;
        if p > MAX_P {
            return Err(Error::domain(format!(
                "p = {p} exceeds the supported bound {MAX_P}"
            )));
        }
        let s = ord2_mod_p(p)?;
        let factors_raw = factor_xp1_raw(p, s)?;
        let xp1: u128 = (1u128 << p) | 1;

        let mut ideal_gens = Vec::with_capacity(factors_raw.len());
        let mut idempotents = Vec::with_capacity(factors_raw.len());
        for &q in &factors_raw {
            let (cofactor, rem) = poly_divrem(xp1, q);
            debug_assert_eq!(rem, 0);
            // Bezout: u·q + v·cofactor = 1, so v·cofactor is 1 mod q and
            // 0 mod every other factor: the central idempotent of I_j.
            let (g, _, v) = poly_ext_gcd(q, cofactor);
            if g != 1 {
                return Err(Error::domain("factors of x^p + 1 are not coprime"));
            }
            let e = poly_to_quotient(poly_mulmod(v, cofactor, xp1), p);
            ideal_gens.push(poly_to_quotient(cofactor, p));
            idempotents.push(e);
        }

        let dec = IdealDecomposition {
            p,
            s,
            factors: factors_raw
                .iter()
                .map(|&q| poly_to_coeff_vector(q))
                .collect(),
            ideal_gens,
            idempotents,
        };
        dec.verify_idempotents()?;
        Ok(dec)
    }

    fn verify_idempotents(&self) -> Result<()> {
        let mut total = QuotientPoly::zero(self.p);
        for (i, e) in self.idempotents.iter().enumerate() {
            if e.mul(e) != *e {
                return Err(Error::domain("idempotent verification failed"));
            }
            for f in &self.idempotents[i + 1..] {
                if !e.mul(f).is_zero() {
                    return Err(Error::domain("idempotents are not orthogonal"));
                }
            }
            total = total.add(e);
        }
        if total != QuotientPoly::one(self.p) {
            return Err(Error::domain("idempotents do not sum to 1"));
        }
        Ok(())
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Multiplicative order of `2` mod `p`: the degree of every factor
    /// beyond `x + 1`.
    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of ideals beyond `I_0`.
    pub fn t(&self) -> usize {
        self.factors.len() - 1
    }

    /// Irreducible factors as coefficient vectors (`x + 1` first).
    pub fn factors(&self) -> &[BitVector] {
        &self.factors
    }

    /// Degree of factor `q_j`.
    pub fn factor_degree(&self, j: usize) -> usize {
        if j == 0 {
            1
        } else {
            self.s
        }
    }

    /// The cofactor `Q_j = (x^p + 1)/q_j`, a generator of `I_j`.
    pub fn ideal_generator(&self, j: usize) -> &QuotientPoly {
        &self.ideal_gens[j]
    }

    /// The central idempotent `e_j`, the multiplicative identity of `I_j`.
    pub fn idempotent(&self, j: usize) -> &QuotientPoly {
        &self.idempotents[j]
    }

    /// The index `j*` with `q_{j*}` the reciprocal polynomial of `q_j`
    /// (coefficients reversed). The roots of `q_{j*}` are the inverses of
    /// the roots of `q_j`, so `I_j ↦ I_{j*}` is the pairing induced by
    /// `x ↦ x^{-1}`. When `s` is even every factor is self-reciprocal.
    pub fn reciprocal_partner(&self, j: usize) -> usize {
        let q = &self.factors[j];
        let d = q.len() - 1;
        let mut rev = BitVector::zeros(q.len());
        for i in 0..q.len() {
            if q.get(i) {
                rev.set(d - i, true);
            }
        }
        self.factors
            .iter()
            .position(|f| *f == rev)
            .expect("the reciprocal of a factor is a factor")
    }

    /// Wraps a quotient-ring element as a member of `I_j`, verifying
    /// membership (`a · e_j = a`).
    pub fn element(&self, ideal: usize, poly: QuotientPoly) -> Result<ExtFieldElem> {
        if ideal >= self.idempotents.len() {
            return Err(Error::input(format!("no ideal with index {ideal}")));
        }
        if poly.modulus_exponent() != self.p {
            return Err(Error::input(format!(
                "element lives in F2[x]/(x^{} + 1), expected x^{} + 1",
                poly.modulus_exponent(),
                self.p
            )));
        }
        if poly.mul(&self.idempotents[ideal]) != poly {
            return Err(Error::domain(format!(
                "polynomial is not stabilized by e_{ideal}; not an element of that ideal"
            )));
        }
        Ok(ExtFieldElem { ideal, poly })
    }

    pub fn zero(&self, ideal: usize) -> ExtFieldElem {
        ExtFieldElem {
            ideal,
            poly: QuotientPoly::zero(self.p),
        }
    }

    /// The multiplicative identity of the field `I_j` (the idempotent).
    pub fn unit(&self, ideal: usize) -> ExtFieldElem {
        ExtFieldElem {
            ideal,
            poly: self.idempotents[ideal].clone(),
        }
    }

    /// An F2-basis of the ideal `I_j` (canonical form).
    pub fn ideal_basis(&self, ideal: usize) -> Vec<ExtFieldElem> {
        let spanning: Vec<BitVector> = (0..self.p)
            .map(|i| self.idempotents[ideal].mul_x_power(i).coeffs().clone())
            .collect();
        crate::code::rref(spanning.into_iter())
            .into_iter()
            .map(|coeffs| ExtFieldElem {
                ideal,
                poly: QuotientPoly::new(coeffs),
            })
            .collect()
    }

    fn check_same_ideal(&self, a: &ExtFieldElem, b: &ExtFieldElem) -> Result<()> {
        if a.ideal != b.ideal {
            return Err(Error::domain(format!(
                "elements of different ideals I_{} and I_{}",
                a.ideal, b.ideal
            )));
        }
        Ok(())
    }

    pub fn add(&self, a: &ExtFieldElem, b: &ExtFieldElem) -> Result<ExtFieldElem> {
        self.check_same_ideal(a, b)?;
        Ok(ExtFieldElem {
            ideal: a.ideal,
            poly: a.poly.add(&b.poly),
        })
    }

    pub fn mul(&self, a: &ExtFieldElem, b: &ExtFieldElem) -> Result<ExtFieldElem> {
        self.check_same_ideal(a, b)?;
        Ok(ExtFieldElem {
            ideal: a.ideal,
            poly: a.poly.mul(&b.poly),
        })
    }

    pub fn pow(&self, a: &ExtFieldElem, e: u64) -> ExtFieldElem {
        let mut base = a.clone();
        let mut acc = self.unit(a.ideal);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base).expect("same ideal");
            }
            base = self.mul(&base, &base).expect("same ideal");
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse inside the field `I_j`.
    pub fn inverse(&self, a: &ExtFieldElem) -> Result<ExtFieldElem> {
        if a.is_zero() {
            return Err(Error::domain("zero has no multiplicative inverse"));
        }
        let order = (1u64 << self.factor_degree(a.ideal)) - 1;
        Ok(self.pow(a, order - 1))
    }

    /// The field Frobenius `a ↦ a²`.
    pub fn frobenius(&self, a: &ExtFieldElem) -> ExtFieldElem {
        self.mul(a, a).expect("same ideal")
    }

    /// The half-way Frobenius power `a ↦ a^(2^((p−1)/2))` on `I_1`, defined
    /// when `x^p + 1` has exactly one nontrivial factor (`s = p − 1`). It is
    /// an involution whose fixed field is the subfield of order
    /// `2^((p−1)/2)`; on coefficient vectors it is a coordinate reflection.
    pub fn frobenius_half(&self, a: &ExtFieldElem) -> Result<ExtFieldElem> {
        self.require_single_nontrivial_ideal()?;
        let mut out = a.clone();
        for _ in 0..(self.p - 1) / 2 {
            out = self.frobenius(&out);
        }
        Ok(out)
    }

    /// The trace `a + ā` of `I_1` onto its half-degree subfield; the result
    /// is fixed by [`Self::frobenius_half`].
    pub fn trace_half(&self, a: &ExtFieldElem) -> Result<ExtFieldElem> {
        let conj = self.frobenius_half(a)?;
        self.add(a, &conj)
    }

    /// The coordinate-permutation form of [`Self::frobenius_half`].
    pub fn frobenius_permutation(&self) -> Result<FrobeniusHalf> {
        self.require_single_nontrivial_ideal()?;
        let image: Vec<usize> = (0..self.p).map(|i| if i == 0 { 0 } else { self.p - i }).collect();
        Ok(FrobeniusHalf {
            exponent: 1u64 << ((self.p - 1) / 2),
            perm: Permutation::from_images(image).expect("reflection is a bijection"),
        })
    }

    fn require_single_nontrivial_ideal(&self) -> Result<()> {
        if self.s != self.p - 1 {
            return Err(Error::domain(format!(
                "the order of 2 mod {} is {}, not {}; the quotient has {} nontrivial ideals",
                self.p,
                self.s,
                self.p - 1,
                self.t()
            )));
        }
        Ok(())
    }
}

/// An element of the field `I_j ≤ F2[x]/(x^p + 1)`. Arithmetic lives on
/// [`IdealDecomposition`], which knows the ring structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtFieldElem {
    ideal: usize,
    poly: QuotientPoly,
}

impl ExtFieldElem {
    pub fn ideal(&self) -> usize {
        self.ideal
    }

    pub fn poly(&self) -> &QuotientPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }
}

/// The half-way Frobenius power as a coordinate permutation: it fixes the
/// constant coefficient and reverses the rest, i.e. the cycle form
/// `(2,p)(3,p−1)…((p+1)/2,(p+3)/2)` on 1-indexed coefficient positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusHalf {
    exponent: u64,
    perm: Permutation,
}

impl FrobeniusHalf {
    /// The power of 2 this permutation corresponds to: `2^((p−1)/2)`.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn permutation(&self) -> &Permutation {
        &self.perm
    }

    /// Applies the coefficient permutation to a quotient-ring element.
    pub fn apply(&self, a: &QuotientPoly) -> QuotientPoly {
        QuotientPoly::new(self.perm.act(a.coeffs()))
    }
}

/// Factors `x^p + 1` over GF(2): `x + 1` first, then the degree-`s` factors
/// sorted by coefficient vector.
///
/// The factors are found by splitting with the cyclotomic-coset indicator
/// polynomials `Σ_{i∈S} x^i`, which form a basis of the squaring-fixed
/// subalgebra (squaring permutes `x^i ↦ x^{2i mod p}`), so each indicator
/// is constant mod every irreducible factor and gcds with it separate the
/// factors deterministically.
pub fn factor_xp1(p: usize) -> Result<Vec<BitVector>> {
    check_odd_prime(p)?;
    if p > MAX_P {
        return Err(Error::domain(format!(
            "p = {p} exceeds the supported bound {MAX_P}"
        )));
    }
    let s = ord2_mod_p(p)?;
    Ok(factor_xp1_raw(p, s)?
        .into_iter()
        .map(poly_to_coeff_vector)
        .collect())
}

fn factor_xp1_raw(p: usize, s: usize) -> Result<Vec<u128>> {
    let xp1: u128 = (1u128 << p) | 1;
    let target = 1 + (p - 1) / s;

    // Indicator of each cyclotomic coset of 2 on the nonzero residues.
    let mut indicators: Vec<u128> = Vec::new();
    let mut seen = vec![false; p];
    for start in 1..p {
        if seen[start] {
            continue;
        }
        let mut indicator = 0u128;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            indicator |= 1u128 << i;
            i = i * 2 % p;
        }
        indicators.push(indicator);
    }

    let mut items = vec![xp1];
    for &v in &indicators {
        let mut next = Vec::with_capacity(items.len());
        for g in items {
            if poly_degree(g) <= s as i32 {
                next.push(g);
                continue;
            }
            let (_, r) = poly_divrem(v, g);
            let h = poly_gcd(g, r);
            if h != 1 && poly_degree(h) < poly_degree(g) {
                let (other, rem) = poly_divrem(g, h);
                debug_assert_eq!(rem, 0);
                next.push(h);
                next.push(other);
            } else {
                let h1 = poly_gcd(g, r ^ 1);
                if h1 != 1 && poly_degree(h1) < poly_degree(g) {
                    let (other, rem) = poly_divrem(g, h1);
                    debug_assert_eq!(rem, 0);
                    next.push(h1);
                    next.push(other);
                } else {
                    next.push(g);
                }
            }
        }
        items = next;
        if items.len() == target {
            break;
        }
    }

    if items.len() != target {
        return Err(Error::domain(format!(
            "factorization of x^{p} + 1 did not complete"
        )));
    }
    items.sort_unstable();
    let product = items.iter().fold(1u128, |acc, &q| poly_mul(acc, q));
    if product != xp1 {
        return Err(Error::domain(format!(
            "factorization of x^{p} + 1 failed verification"
        )));
    }
    if items[0] != 0b11 || items[1..].iter().any(|&q| poly_degree(q) != s as i32) {
        return Err(Error::domain(format!(
            "factorization of x^{p} + 1 has unexpected degrees"
        )));
    }
    Ok(items)
}

// ---- dense GF(2)[x] arithmetic on u128 bit masks (bit i = coeff of x^i) ----

fn poly_degree(a: u128) -> i32 {
    127 - a.leading_zeros() as i32
}

fn poly_mul(a: u128, b: u128) -> u128 {
    debug_assert!(
        a == 0 || b == 0 || poly_degree(a) + poly_degree(b) < 128,
        "polynomial product overflows 128 bits"
    );
    let mut acc = 0u128;
    let mut a = a;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            acc ^= b << shift;
        }
        a >>= 1;
        shift += 1;
    }
    acc
}

fn poly_divrem(a: u128, b: u128) -> (u128, u128) {
    assert_ne!(b, 0, "division by the zero polynomial");
    let db = poly_degree(b);
    let mut rem = a;
    let mut quot = 0u128;
    while poly_degree(rem) >= db {
        let shift = (poly_degree(rem) - db) as u32;
        quot ^= 1u128 << shift;
        rem ^= b << shift;
    }
    (quot, rem)
}

fn poly_gcd(a: u128, b: u128) -> u128 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let (_, r) = poly_divrem(a, b);
        a = b;
        b = r;
    }
    a
}

/// Returns `(g, u, v)` with `u·a + v·b = g = gcd(a, b)`.
fn poly_ext_gcd(a: u128, b: u128) -> (u128, u128, u128) {
    let (mut r0, mut r1) = (a, b);
    let (mut u0, mut u1) = (1u128, 0u128);
    let (mut v0, mut v1) = (0u128, 1u128);
    while r1 != 0 {
        let (q, r) = poly_divrem(r0, r1);
        let next_u = u0 ^ poly_mul(q, u1);
        let next_v = v0 ^ poly_mul(q, v1);
        r0 = r1;
        r1 = r;
        u0 = u1;
        u1 = next_u;
        v0 = v1;
        v1 = next_v;
    }
    (r0, u0, v0)
}

fn poly_mulmod(a: u128, b: u128, m: u128) -> u128 {
    let (_, r) = poly_divrem(poly_mul(a, b), m);
    r
}

fn poly_to_coeff_vector(q: u128) -> BitVector {
    let len = (poly_degree(q) + 1) as usize;
    let mut v = BitVector::zeros(len);
    for i in 0..len {
        if q >> i & 1 == 1 {
            v.set(i, true);
        }
    }
    v
}

fn poly_to_quotient(q: u128, p: usize) -> QuotientPoly {
    debug_assert!(poly_degree(q) < p as i32);
    let mut v = BitVector::zeros(p);
    for i in 0..p {
        if q >> i & 1 == 1 {
            v.set(i, true);
        }
    }
    QuotientPoly::new(v)
}

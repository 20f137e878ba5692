//! Self-dual codes with a dihedral automorphism group of order `2p`.
//!
//! The context fixes the canonical copy of the group on `n = pc`
//! coordinates: `σ_p` rotates each of the `c` consecutive length-`p`
//! blocks, and `σ_2` swaps block `2k` with block `2k+1` while reflecting
//! offsets (`0 ↔ 0`, `j ↔ p−j`), so that `σ_2 σ_p σ_2 = σ_p^{-1}`. With `2`
//! a generator of the units modulo `p`, a code invariant under both is
//! determined by a pair of smaller objects: a binary block code `A` of
//! length `c` and a vector space `B ≤ I_1^{c/2}` over the half-degree
//! subfield of the field `F = I_1 ≅ F_{2^{p−1}}`. The code is self-dual
//! exactly when `A` is self-dual and `B` is trace-Hermitian self-dual.
//!
//! The offset reflection of `σ_2` matches the coefficient permutation of
//! the Frobenius power `a ↦ a^(2^((p−1)/2))`, so a vector of the even
//! subcode is fixed by `σ_2` exactly when its block reading is
//! `(β_1, β̄_1, …, β_{c/2}, β̄_{c/2})`; the `β` halves are the `B` data.

use alloc::format;
use alloc::vec::Vec;

use crate::bitvec::BitVector;
use crate::code::{self, BinaryCode};
use crate::cyclotomic::{ExtFieldElem, IdealDecomposition, QuotientPoly};
use crate::error::{Error, Result};
use crate::perm::{fixed_code, projected_fixed_code, Permutation};
use crate::prime_decomp::decompose;

/// The canonical dihedral group of order `2p` acting on `n` coordinates.
#[derive(Debug, Clone)]
pub struct DihedralContext {
    p: usize,
    n: usize,
    blocks: usize,
    sigma_p: Permutation,
    sigma_2: Permutation,
    ideals: IdealDecomposition,
}

/// The data pair determining a code with the canonical dihedral group: a
/// block code of length `c` and rows spanning a subspace of `I_1^{c/2}`.
#[derive(Debug, Clone)]
pub struct DihedralPair {
    pub a: BinaryCode,
    pub b: Vec<Vec<ExtFieldElem>>,
}

impl DihedralContext {
    /// Requires `2` to generate the units modulo the odd prime `p`, and `n`
    /// to be a positive multiple of `2p`.
    pub fn new(p: usize, n: usize) -> Result<Self> {
        let ideals = IdealDecomposition::new(p)?;
        if ideals.s() != p - 1 {
            return Err(Error::domain(format!(
                "the order of 2 mod {p} is {}, not {}; the block field is not a single ideal",
                ideals.s(),
                p - 1
            )));
        }
        if n == 0 || !n.is_multiple_of(2 * p) {
            return Err(Error::input(format!(
                "length {n} is not a positive multiple of {}",
                2 * p
            )));
        }
        let blocks = n / p;

        let mut rot = alloc::vec![0usize; n];
        for k in 0..blocks {
            for j in 0..p {
                rot[k * p + j] = k * p + (j + 1) % p;
            }
        }
        let sigma_p = Permutation::from_images(rot).expect("block rotation is a bijection");

        let mut swap = alloc::vec![0usize; n];
        for k in 0..blocks / 2 {
            let u = 2 * k * p;
            let v = (2 * k + 1) * p;
            for j in 0..p {
                let r = (p - j) % p;
                swap[u + j] = v + r;
                swap[v + r] = u + j;
            }
        }
        let sigma_2 = Permutation::from_images(swap).expect("block reflection is a bijection");
        debug_assert_eq!(sigma_p.conjugate_by(&sigma_2), sigma_p.inverse());

        Ok(DihedralContext {
            p,
            n,
            blocks,
            sigma_p,
            sigma_2,
            ideals,
        })
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn length(&self) -> usize {
        self.n
    }

    /// `c = n/p`, the number of blocks (always even).
    pub fn blocks(&self) -> usize {
        self.blocks
    }

    pub fn sigma_p(&self) -> &Permutation {
        &self.sigma_p
    }

    pub fn sigma_2(&self) -> &Permutation {
        &self.sigma_2
    }

    pub fn ideals(&self) -> &IdealDecomposition {
        &self.ideals
    }

    fn conj(&self, elem: &ExtFieldElem) -> ExtFieldElem {
        self.ideals
            .frobenius_half(elem)
            .expect("context guarantees a single nontrivial ideal")
    }

    /// Lays ring components down on the block coordinates: block `k`,
    /// coefficient `j` lands on coordinate `kp + j`.
    fn components_to_vector(&self, components: &[QuotientPoly]) -> BitVector {
        debug_assert_eq!(components.len(), self.blocks);
        let mut v = BitVector::zeros(self.n);
        for (k, comp) in components.iter().enumerate() {
            for j in comp.coeffs().support() {
                v.set(k * self.p + j, true);
            }
        }
        v
    }

    /// Builds the code determined by a pair: the block code lifted to
    /// constant blocks, plus the field span of the mirror embedding
    /// `β ↦ (β_1, β̄_1, …)` of the `B` rows.
    ///
    /// The pair must be valid — `A` self-dual and `B` trace-Hermitian
    /// self-dual — and compatible: the constructed code is verified to be
    /// self-dual with both canonical generators as automorphisms. An `A`
    /// that is not invariant under the block pairing fails the
    /// verification.
    pub fn construct(&self, pair: &DihedralPair) -> Result<BinaryCode> {
        if pair.a.length() != self.blocks {
            return Err(Error::input(format!(
                "block code has length {}, expected {}",
                pair.a.length(),
                self.blocks
            )));
        }
        if !pair.a.is_self_dual() {
            return Err(Error::domain("the block code is not self-dual"));
        }
        if !trace_hermitian_self_dual(&self.ideals, &pair.b, self.blocks / 2)? {
            return Err(Error::domain(
                "the field rows are not trace-Hermitian self-dual",
            ));
        }

        let mut rows: Vec<BitVector> = Vec::new();
        for a_row in pair.a.basis() {
            let mut v = BitVector::zeros(self.n);
            for k in 0..self.blocks {
                if a_row.get(k) {
                    for j in 0..self.p {
                        v.set(k * self.p + j, true);
                    }
                }
            }
            rows.push(v);
        }
        for beta in &pair.b {
            let mut embedded = Vec::with_capacity(self.blocks);
            for elem in beta {
                embedded.push(elem.poly().clone());
                embedded.push(self.conj(elem).poly().clone());
            }
            // an F2-basis of the F-span: multiples by x^m = ζ^m
            for m in 0..self.p - 1 {
                let shifted: Vec<QuotientPoly> =
                    embedded.iter().map(|q| q.mul_x_power(m)).collect();
                rows.push(self.components_to_vector(&shifted));
            }
        }

        let code = BinaryCode::from_rows(self.n, &rows)?;
        if 2 * code.dim() != self.n
            || !code.is_self_dual()
            || !self.sigma_p.is_automorphism(&code)?
            || !self.sigma_2.is_automorphism(&code)?
        {
            return Err(Error::domain(
                "constructed code failed verification: the pair is not compatible \
                 with the canonical group",
            ));
        }
        Ok(code)
    }

    /// Recovers the canonical pair of a self-dual code invariant under the
    /// canonical group: `A` is the projected fixed code of `σ_p`, and `B`
    /// is read off the `σ_2`-fixed part of the even subcode (even-indexed
    /// blocks; the odd-indexed blocks are their conjugates). The `B` rows
    /// are returned in canonical reduced form.
    ///
    /// Fails with a domain error if the code is not self-dual or the
    /// generators are not automorphisms, and with a hypothesis error if the
    /// involution-fixed subcode does not project onto a self-dual code.
    pub fn extract_pair(&self, code: &BinaryCode) -> Result<DihedralPair> {
        if code.length() != self.n {
            return Err(Error::input(format!(
                "code length {} does not match context length {}",
                code.length(),
                self.n
            )));
        }
        if !self.sigma_2.is_automorphism(code)? {
            return Err(Error::domain(
                "the block reflection is not an automorphism of the code",
            ));
        }
        let dec = decompose(code, &self.sigma_p, self.p)?;
        if !code.is_self_dual() {
            return Err(Error::domain("the code is not self-dual"));
        }
        let projected_involution = projected_fixed_code(code, &self.sigma_2)?;
        if !projected_involution.is_self_dual() {
            return Err(Error::hypothesis(
                "the involution-fixed subcode does not project onto a self-dual code",
            ));
        }

        let half = self.blocks / 2;
        let fixed_even = fixed_code(dec.even_code(), &self.sigma_2)?;
        let concatenated = fixed_even
            .basis()
            .iter()
            .map(|v| {
                let components = dec
                    .phi_components(v)
                    .expect("basis vectors are in the even subcode");
                let mut bits = BitVector::zeros(half * self.p);
                for i in 0..half {
                    for j in components[2 * i].coeffs().support() {
                        bits.set(i * self.p + j, true);
                    }
                }
                bits
            })
            .collect::<Vec<_>>();
        let b = code::rref(concatenated.into_iter())
            .iter()
            .map(|bits| {
                (0..half)
                    .map(|i| {
                        let mut coeffs = BitVector::zeros(self.p);
                        for j in 0..self.p {
                            if bits.get(i * self.p + j) {
                                coeffs.set(j, true);
                            }
                        }
                        self.ideals.element(1, QuotientPoly::new(coeffs))
                    })
                    .collect::<Result<Vec<ExtFieldElem>>>()
            })
            .collect::<Result<Vec<_>>>()?;

        Ok(DihedralPair {
            a: dec.project_fixed(),
            b,
        })
    }
}

/// Whether the F2-span of `rows ⊆ I_1^h` is trace-Hermitian self-dual: a
/// subspace over the half-degree subfield `F_0 ≤ I_1` on which the form
/// `s(u, v) = Σ_i (u_i v̄_i + ū_i v_i)` vanishes, of `F_0`-dimension `h`
/// (that is, F2-dimension `(p−1)h/2`).
///
/// Requires a single nontrivial ideal and all elements tagged as members
/// of `I_1`; `h` is passed explicitly so an empty list is measured against
/// the right length.
pub fn trace_hermitian_self_dual(
    ideals: &IdealDecomposition,
    rows: &[Vec<ExtFieldElem>],
    h: usize,
) -> Result<bool> {
    if ideals.s() + 1 != ideals.p() {
        return Err(Error::domain(format!(
            "x^{} + 1 has {} nontrivial factors; the trace form needs exactly one",
            ideals.p(),
            ideals.t()
        )));
    }
    let p = ideals.p();
    for row in rows {
        if row.len() != h {
            return Err(Error::input(format!(
                "row of length {} in a list of length-{h} vectors",
                row.len()
            )));
        }
        if row.iter().any(|elem| elem.ideal() != 1) {
            return Err(Error::domain("all components must be elements of I_1"));
        }
    }

    let concatenated = rows.iter().map(|row| {
        let mut v = BitVector::zeros(h * p);
        for (i, elem) in row.iter().enumerate() {
            for m in elem.poly().coeffs().support() {
                v.set(i * p + m, true);
            }
        }
        v
    });
    let basis = code::rref(concatenated);
    if 2 * basis.len() != (p - 1) * h {
        return Ok(false);
    }

    let split = |v: &BitVector| -> Result<Vec<ExtFieldElem>> {
        (0..h)
            .map(|i| {
                let mut coeffs = BitVector::zeros(p);
                for m in 0..p {
                    if v.get(i * p + m) {
                        coeffs.set(m, true);
                    }
                }
                ideals.element(1, QuotientPoly::new(coeffs))
            })
            .collect()
    };
    let basis_rows: Vec<Vec<ExtFieldElem>> = basis
        .iter()
        .map(split)
        .collect::<Result<Vec<_>>>()?;

    // the subfield F_0 is spanned by the traces a + ā of I_1
    let subfield: Vec<ExtFieldElem> = {
        let traces = ideals
            .ideal_basis(1)
            .iter()
            .map(|a| {
                Ok(ideals
                    .trace_half(a)?
                    .poly()
                    .coeffs()
                    .clone())
            })
            .collect::<Result<Vec<_>>>()?;
        code::rref(traces.into_iter())
            .into_iter()
            .map(|coeffs| ideals.element(1, QuotientPoly::new(coeffs)))
            .collect::<Result<Vec<_>>>()?
    };

    // closure under subfield scalars
    for row in &basis_rows {
        for lambda in &subfield {
            let mut scaled = BitVector::zeros(h * p);
            for (i, elem) in row.iter().enumerate() {
                let product = ideals.mul(lambda, elem)?;
                for m in product.poly().coeffs().support() {
                    scaled.set(i * p + m, true);
                }
            }
            if code::express_in_rows(&scaled, &basis).is_none() {
                return Ok(false);
            }
        }
    }

    // the form vanishes pairwise (diagonal terms vanish identically)
    for (idx, u) in basis_rows.iter().enumerate() {
        for v in &basis_rows[idx + 1..] {
            let mut form = ideals.zero(1);
            for (ui, vi) in u.iter().zip(v) {
                let v_conj = ideals.frobenius_half(vi)?;
                let u_conj = ideals.frobenius_half(ui)?;
                let term = ideals.add(
                    &ideals.mul(ui, &v_conj)?,
                    &ideals.mul(&u_conj, vi)?,
                )?;
                form = ideals.add(&form, &term)?;
            }
            if !form.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

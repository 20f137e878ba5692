//! Decomposition of a binary code under an automorphism of odd prime order.
//!
//! If `σ` is an automorphism of `C` with `c` cycles of odd prime length `p`
//! and `f` fixed points, then `C = C(σ) ⊕ E(σ)`: the subcode fixed
//! coordinate-wise by `σ` plus the subcode whose restriction to every orbit
//! has even weight. `C(σ)` projects onto `F2^{c+f}` by picking one value per
//! orbit; `E(σ)` vanishes on the fixed points and its restriction to the
//! cycles reads, orbit by orbit, as a vector over `F2[x]/(x^p + 1)` whose
//! components lie in the even-weight ideals. When `2` generates the units
//! modulo `p` there is a single nontrivial ideal `I_1 ≅ F_{2^{p−1}}` and the
//! self-duality of `C` is equivalent to self-duality of the projected fixed
//! code together with Hermitian self-duality of the ideal image.

use alloc::format;
use alloc::vec::Vec;

use crate::bitvec::BitVector;
use crate::code::{self, BinaryCode};
use crate::cyclotomic::{ExtFieldElem, IdealDecomposition, QuotientPoly};
use crate::error::{Error, Result};
use crate::perm::{fixed_code, CycleType, OrbitPartition, Permutation};

/// The splitting `C = C(σ) ⊕ E(σ)` for an automorphism `σ` of odd prime
/// order `p` with cycle type `p-(c, f)`.
#[derive(Debug, Clone)]
pub struct PrimeDecomposition {
    code: BinaryCode,
    sigma: Permutation,
    p: usize,
    cycles: usize,
    fixed_points: usize,
    orbits: OrbitPartition,
    /// Coordinates of each length-`p` cycle in traversal order
    /// `b, σ(b), σ²(b), …`, cycles listed by smallest member.
    cycle_tracks: Vec<Vec<usize>>,
    fixed_code: BinaryCode,
    even_code: BinaryCode,
}

/// Splits `code` under an automorphism of odd prime order `p`.
///
/// Fails with a domain error if `sigma` does not stabilize the code, if its
/// order is not `1` or `p`, or if `p` is not an odd prime. The identity is
/// accepted as the degenerate case `c = 0`.
pub fn decompose(code: &BinaryCode, sigma: &Permutation, p: usize) -> Result<PrimeDecomposition> {
    let (cycles, fixed_points) = match sigma.prime_cycle_type(p)? {
        CycleType::Prime { cycles, fixed, .. } => (cycles, fixed),
        CycleType::Composite { .. } => unreachable!("prime type requested"),
    };
    if p.is_multiple_of(2) {
        return Err(Error::input("the cycle length must be an odd prime"));
    }
    if !sigma.is_automorphism(code)? {
        return Err(Error::domain(
            "the permutation is not an automorphism of the code",
        ));
    }

    let orbits = OrbitPartition::new(sigma);
    let cycle_tracks: Vec<Vec<usize>> = orbits
        .orbits()
        .iter()
        .filter(|orbit| orbit.len() == p)
        .map(|orbit| {
            let mut track = Vec::with_capacity(p);
            let mut i = orbit[0];
            for _ in 0..p {
                track.push(i);
                i = sigma.apply(i);
            }
            track
        })
        .collect();

    let fixed = fixed_code(code, sigma)?;

    // E(σ) is the kernel of the orbit-parity map on C.
    let parity_rows: Vec<BitVector> = code
        .basis()
        .iter()
        .map(|row| {
            let mut parities = BitVector::zeros(orbits.len());
            for (j, orbit) in orbits.orbits().iter().enumerate() {
                let parity = orbit.iter().filter(|&&i| row.get(i)).count() % 2;
                parities.set(j, parity == 1);
            }
            parities
        })
        .collect();
    let even_rows: Vec<BitVector> = code::left_kernel(&parity_rows)
        .iter()
        .map(|coeffs| crate::perm::combine(code.basis(), coeffs, code.length()))
        .collect();
    let even = BinaryCode::from_rows(code.length(), &even_rows)?;

    if fixed.dim() + even.dim() != code.dim() || !fixed.meets_trivially(&even)? {
        return Err(Error::domain(
            "fixed and even subcodes do not split the code",
        ));
    }

    Ok(PrimeDecomposition {
        code: code.clone(),
        sigma: sigma.clone(),
        p,
        cycles,
        fixed_points,
        orbits,
        cycle_tracks,
        fixed_code: fixed,
        even_code: even,
    })
}

impl PrimeDecomposition {
    pub fn code(&self) -> &BinaryCode {
        &self.code
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Number of length-`p` cycles.
    pub fn cycles(&self) -> usize {
        self.cycles
    }

    pub fn fixed_points(&self) -> usize {
        self.fixed_points
    }

    pub fn orbits(&self) -> &OrbitPartition {
        &self.orbits
    }

    /// The subcode fixed coordinate-wise by `σ`.
    pub fn fixed_code(&self) -> &BinaryCode {
        &self.fixed_code
    }

    /// The subcode with even weight on every orbit (zero on fixed points).
    pub fn even_code(&self) -> &BinaryCode {
        &self.even_code
    }

    /// The fixed code with each orbit collapsed to a single coordinate, a
    /// code of length `c + f` (orbits ordered by smallest member).
    pub fn project_fixed(&self) -> BinaryCode {
        let rows: Vec<BitVector> = self
            .fixed_code
            .basis()
            .iter()
            .map(|row| {
                self.orbits
                    .project(row)
                    .expect("fixed vectors are constant on orbits")
            })
            .collect();
        BinaryCode::from_rows(self.orbits.len(), &rows).expect("projection preserves length")
    }

    /// Reads a vector of the even subcode as a vector over
    /// `F2[x]/(x^p + 1)`, one component per cycle: the coefficient of `x^m`
    /// in component `i` is the value at `σ^m(b_i)`, where `b_i` is the
    /// smallest coordinate of the `i`-th cycle.
    pub fn phi_components(&self, v: &BitVector) -> Result<Vec<QuotientPoly>> {
        if !self.even_code.contains(v) {
            return Err(Error::domain("vector is not in the even subcode"));
        }
        Ok(self
            .cycle_tracks
            .iter()
            .map(|track| {
                let mut coeffs = BitVector::zeros(self.p);
                for (m, &coord) in track.iter().enumerate() {
                    if v.get(coord) {
                        coeffs.set(m, true);
                    }
                }
                QuotientPoly::new(coeffs)
            })
            .collect())
    }

    /// Inverse of [`Self::phi_components`]: spreads ring components back
    /// onto the cycle coordinates (fixed coordinates become zero).
    pub fn phi_lift(&self, components: &[QuotientPoly]) -> Result<BitVector> {
        if components.len() != self.cycles {
            return Err(Error::input(format!(
                "expected {} components, got {}",
                self.cycles,
                components.len()
            )));
        }
        let mut v = BitVector::zeros(self.code.length());
        for (track, comp) in self.cycle_tracks.iter().zip(components) {
            if comp.modulus_exponent() != self.p {
                return Err(Error::input(format!(
                    "component lives in F2[x]/(x^{} + 1), expected x^{} + 1",
                    comp.modulus_exponent(),
                    self.p
                )));
            }
            for (m, &coord) in track.iter().enumerate() {
                if comp.coeffs().get(m) {
                    v.set(coord, true);
                }
            }
        }
        Ok(v)
    }

    /// The basis of `E(σ)` mapped into `I_1^c`. Requires `x^p + 1` to have a
    /// single nontrivial factor (`2` generates the units mod `p`), so every
    /// even-ideal component is an element of the field `I_1`.
    pub fn phi_image(&self, ideals: &IdealDecomposition) -> Result<Vec<Vec<ExtFieldElem>>> {
        self.check_ideals(ideals)?;
        if ideals.t() != 1 {
            return Err(Error::domain(format!(
                "x^{} + 1 has {} nontrivial factors; the field image needs exactly one",
                self.p,
                ideals.t()
            )));
        }
        self.even_code
            .basis()
            .iter()
            .map(|row| {
                self.phi_components(row)?
                    .into_iter()
                    .map(|comp| ideals.element(1, comp))
                    .collect()
            })
            .collect()
    }

    /// Dimensions of the ideal components `E(σ)·e_j` for `j = 1, …, t`
    /// (the `e_0` component is zero: even vectors are even on each cycle).
    pub fn component_dims(&self, ideals: &IdealDecomposition) -> Result<Vec<usize>> {
        self.check_ideals(ideals)?;
        (1..=ideals.t())
            .map(|j| {
                let e_j = ideals.idempotent(j);
                let rows = self
                    .even_code
                    .basis()
                    .iter()
                    .map(|row| {
                        let components: Vec<QuotientPoly> = self
                            .phi_components(row)?
                            .iter()
                            .map(|comp| comp.mul(e_j))
                            .collect();
                        self.phi_lift(&components)
                    })
                    .collect::<Result<Vec<BitVector>>>()?;
                Ok(BinaryCode::from_rows(self.code.length(), &rows)?.dim())
            })
            .collect()
    }

    fn check_ideals(&self, ideals: &IdealDecomposition) -> Result<()> {
        if ideals.p() != self.p {
            return Err(Error::input(format!(
                "ideal decomposition is for p = {}, the splitting uses p = {}",
                ideals.p(),
                self.p
            )));
        }
        Ok(())
    }
}

/// Whether the span of `rows ⊆ I_1^c` is self-dual for the Hermitian form
/// `s(u, v) = Σ_i u_i · v̄_i`, where `v̄ = v^(2^((p−1)/2))`: the span must be
/// a subspace over the field `F = I_1`, the form must vanish on it, and its
/// `F`-dimension must be `c/2`.
///
/// Requires a single nontrivial ideal, and all elements tagged as members
/// of `I_1`. `c` is passed explicitly so an empty list (zero subspace) is
/// still measured against the right length.
pub fn hermitian_self_dual(
    ideals: &IdealDecomposition,
    rows: &[Vec<ExtFieldElem>],
    c: usize,
) -> Result<bool> {
    if ideals.t() != 1 {
        return Err(Error::domain(format!(
            "x^{} + 1 has {} nontrivial factors; the Hermitian form needs exactly one",
            ideals.p(),
            ideals.t()
        )));
    }
    let p = ideals.p();
    for row in rows {
        if row.len() != c {
            return Err(Error::input(format!(
                "row of length {} in a list of length-{c} vectors",
                row.len()
            )));
        }
        if row.iter().any(|elem| elem.ideal() != 1) {
            return Err(Error::domain("all components must be elements of I_1"));
        }
    }

    // Work on concatenated coefficient vectors to get a canonical basis.
    let concatenated = rows.iter().map(|row| {
        let mut v = BitVector::zeros(c * p);
        for (i, elem) in row.iter().enumerate() {
            for m in elem.poly().coeffs().support() {
                v.set(i * p + m, true);
            }
        }
        v
    });
    let basis = code::rref(concatenated);
    let dim = basis.len();
    if 2 * dim != (p - 1) * c {
        return Ok(false);
    }

    let split = |v: &BitVector| -> Result<Vec<ExtFieldElem>> {
        (0..c)
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

    // F-subspace: closed under multiplication by x (which generates I_1
    // over F2 as an algebra). Coordinate-wise, that is a coefficient
    // rotation of the concatenated vector within each block.
    for v in &basis {
        let mut rotated = BitVector::zeros(c * p);
        for i in 0..c {
            for m in 0..p {
                if v.get(i * p + m) {
                    rotated.set(i * p + (m + 1) % p, true);
                }
            }
        }
        if code::express_in_rows(&rotated, &basis).is_none() {
            return Ok(false);
        }
    }

    for u in &basis_rows {
        for v in &basis_rows {
            let mut form = ideals.zero(1);
            for (ui, vi) in u.iter().zip(v) {
                let conj = ideals.frobenius_half(vi)?;
                let term = ideals.mul(ui, &conj)?;
                form = ideals.add(&form, &term)?;
            }
            if !form.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The two sides of the self-duality criterion for a code with an
/// automorphism of odd prime order `p` where `2` generates the units mod
/// `p`: `C` is self-dual if and only if the projected fixed code is
/// self-dual and the field image of the even subcode is Hermitian
/// self-dual.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct YorgovFlags {
    /// `C = C^⊥`.
    pub self_dual: bool,
    /// The projected fixed code equals its dual in `F2^{c+f}`.
    pub projection_self_dual: bool,
    /// The field image of `E(σ)` is Hermitian self-dual in `I_1^c`.
    pub hermitian_self_dual: bool,
}

impl YorgovFlags {
    /// The conjunction of the two decomposed conditions.
    pub fn decomposed_condition(&self) -> bool {
        self.projection_self_dual && self.hermitian_self_dual
    }

    /// Whether the criterion agrees with direct self-duality.
    pub fn equivalence_holds(&self) -> bool {
        self.self_dual == self.decomposed_condition()
    }
}

/// Evaluates both sides of the prime-order self-duality criterion.
pub fn yorgov_check(code: &BinaryCode, sigma: &Permutation, p: usize) -> Result<YorgovFlags> {
    let dec = decompose(code, sigma, p)?;
    let ideals = IdealDecomposition::new(p)?;
    let rows = dec.phi_image(&ideals)?;
    Ok(YorgovFlags {
        self_dual: code.is_self_dual(),
        projection_self_dual: dec.project_fixed().is_self_dual(),
        hermitian_self_dual: hermitian_self_dual(&ideals, &rows, dec.cycles())?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    /// `{(a, x·a) : a ∈ F2[x]/(x^p + 1)}` with the simultaneous-shift
    /// automorphism: a self-dual `[2p, p]` code.
    fn shift_pair_code(p: usize) -> (BinaryCode, Permutation) {
        let rows: Vec<BitVector> = (0..p)
            .map(|i| BitVector::from_support(2 * p, &[i, p + (i + 1) % p]))
            .collect();
        let code = BinaryCode::from_rows(2 * p, &rows).unwrap();
        let image: Vec<usize> = (0..2 * p)
            .map(|i| {
                if i < p {
                    (i + 1) % p
                } else {
                    p + (i + 1 - p) % p
                }
            })
            .collect();
        (code, Permutation::from_images(image).unwrap())
    }

    #[test]
    fn splits_the_even_weight_code() {
        let code = BinaryCode::from_bit_strings(&["1100", "0110", "0011"]).unwrap();
        let sigma = Permutation::parse("(1,2,3)", 4).unwrap();
        let dec = decompose(&code, &sigma, 3).unwrap();
        assert_eq!(dec.cycles(), 1);
        assert_eq!(dec.fixed_points(), 1);
        assert_eq!(dec.fixed_code().dim(), 1);
        assert!(dec.fixed_code().contains(&BitVector::from_bit_str("1111").unwrap()));
        assert_eq!(dec.even_code().dim(), 2);
        // even vectors vanish on the fixed coordinate
        for row in dec.even_code().basis() {
            assert!(!row.get(3));
        }
        assert!(dec.fixed_code().meets_trivially(dec.even_code()).unwrap());
    }

    #[test]
    fn splits_the_shift_pair_codes() {
        for p in [3usize, 5, 7] {
            let (code, sigma) = shift_pair_code(p);
            assert!(code.is_self_dual(), "p = {p}");
            let dec = decompose(&code, &sigma, p).unwrap();
            assert_eq!((dec.cycles(), dec.fixed_points()), (2, 0));
            assert_eq!(dec.fixed_code().dim(), 1);
            assert_eq!(dec.even_code().dim(), p - 1);
            let proj = dec.project_fixed();
            assert_eq!(proj.length(), 2);
            assert!(proj.is_self_dual());
        }
    }

    #[test]
    fn rejects_non_automorphisms_and_wrong_orders() {
        let code = BinaryCode::from_bit_strings(&["100"]).unwrap();
        let swap = Permutation::parse("(1,2,3)", 3).unwrap();
        assert!(matches!(decompose(&code, &swap, 3), Err(Error::Domain(_))));
        let c4 = BinaryCode::from_bit_strings(&["1111"]).unwrap();
        let swap2 = Permutation::parse("(1,2)", 4).unwrap();
        assert!(matches!(decompose(&c4, &swap2, 2), Err(Error::Input(_))));
        let four = Permutation::parse("(1,2,3,4)", 4).unwrap();
        assert!(decompose(&c4, &four, 3).is_err());
    }

    #[test]
    fn identity_gives_the_degenerate_split() {
        let code = BinaryCode::from_bit_strings(&["110", "011"]).unwrap();
        let id = Permutation::identity(3);
        let dec = decompose(&code, &id, 3).unwrap();
        assert_eq!(dec.cycles(), 0);
        assert_eq!(dec.fixed_code().dim(), 2);
        assert_eq!(dec.even_code().dim(), 0);
    }

    #[test]
    fn phi_reads_cycles_in_traversal_order() {
        let (code, sigma) = shift_pair_code(3);
        let dec = decompose(&code, &sigma, 3).unwrap();
        // v = (1 + x, x + x²) as coordinates: 110|011
        let v = BitVector::from_bit_str("110011").unwrap();
        let comps = dec.phi_components(&v).unwrap();
        assert_eq!(comps[0].to_bit_string(), "110");
        assert_eq!(comps[1].to_bit_string(), "011");
        assert_eq!(dec.phi_lift(&comps).unwrap(), v);
        // not in E(σ): odd weight on the first cycle
        let w = BitVector::from_bit_str("100011").unwrap();
        assert!(matches!(dec.phi_components(&w), Err(Error::Domain(_))));
        assert!(dec.phi_lift(&[]).is_err());
    }

    #[test]
    fn phi_image_requires_a_single_nontrivial_ideal() {
        let (code, sigma) = shift_pair_code(7);
        let dec = decompose(&code, &sigma, 7).unwrap();
        let ideals = IdealDecomposition::new(7).unwrap();
        assert!(matches!(dec.phi_image(&ideals), Err(Error::Domain(_))));
        let wrong = IdealDecomposition::new(3).unwrap();
        assert!(matches!(dec.phi_image(&wrong), Err(Error::Input(_))));
    }

    #[test]
    fn component_dims_split_the_even_subcode() {
        let (code, sigma) = shift_pair_code(7);
        let dec = decompose(&code, &sigma, 7).unwrap();
        let ideals = IdealDecomposition::new(7).unwrap();
        assert_eq!(dec.component_dims(&ideals).unwrap(), vec![3, 3]);

        let (code3, sigma3) = shift_pair_code(3);
        let dec3 = decompose(&code3, &sigma3, 3).unwrap();
        let ideals3 = IdealDecomposition::new(3).unwrap();
        assert_eq!(dec3.component_dims(&ideals3).unwrap(), vec![2]);
    }

    #[test]
    fn criterion_on_a_self_dual_code() {
        let (code, sigma) = shift_pair_code(3);
        let flags = yorgov_check(&code, &sigma, 3).unwrap();
        assert!(flags.self_dual);
        assert!(flags.projection_self_dual);
        assert!(flags.hermitian_self_dual);
        assert!(flags.decomposed_condition());
        assert!(flags.equivalence_holds());
    }

    #[test]
    fn criterion_on_a_non_self_dual_code() {
        let code = BinaryCode::from_bit_strings(&["111000", "000111"]).unwrap();
        let sigma = Permutation::parse("(1,2,3)(4,5,6)", 6).unwrap();
        let flags = yorgov_check(&code, &sigma, 3).unwrap();
        assert!(!flags.self_dual);
        assert!(!flags.projection_self_dual);
        assert!(!flags.hermitian_self_dual);
        assert!(flags.equivalence_holds());
    }

    #[test]
    fn criterion_requires_two_primitive_mod_p() {
        let (code, sigma) = shift_pair_code(7);
        assert!(matches!(
            yorgov_check(&code, &sigma, 7),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn hermitian_form_checks() {
        let ideals = IdealDecomposition::new(3).unwrap();
        let omega = ideals
            .element(1, QuotientPoly::from_bit_str("110").unwrap())
            .unwrap();
        let e = ideals.unit(1);
        // span{(ω, e), (e, ω²)} is the field image of the [6,3] shift code
        let omega2 = ideals.frobenius(&omega);
        let rows = vec![
            vec![omega.clone(), e.clone()],
            vec![e.clone(), omega2.clone()],
        ];
        assert!(hermitian_self_dual(&ideals, &rows, 2).unwrap());
        // span{(e, 0)}: s((e,0),(e,0)) = e ≠ 0, and the dimension is wrong
        let rows = vec![vec![e.clone(), ideals.zero(1)]];
        assert!(!hermitian_self_dual(&ideals, &rows, 2).unwrap());
        // the zero space is Hermitian self-dual only for c = 0
        assert!(hermitian_self_dual(&ideals, &[], 0).unwrap());
        assert!(!hermitian_self_dual(&ideals, &[], 2).unwrap());
        // ragged rows are an input error
        let bad = vec![vec![e.clone()], vec![e.clone(), omega.clone()]];
        assert!(matches!(
            hermitian_self_dual(&ideals, &bad, 1),
            Err(Error::Input(_))
        ));
    }

    #[test]
    fn hermitian_form_rejects_isotropic_non_self_dual_spans() {
        // F2-span{(ω, e)} alone: isotropic but half the required dimension
        let ideals = IdealDecomposition::new(3).unwrap();
        let omega = ideals
            .element(1, QuotientPoly::from_bit_str("110").unwrap())
            .unwrap();
        let e = ideals.unit(1);
        let rows = vec![vec![omega, e]];
        assert!(!hermitian_self_dual(&ideals, &rows, 2).unwrap());
    }
}

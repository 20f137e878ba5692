//! Deterministic fixtures and instance generators shared by the
//! integration and acceptance suites.
//!
//! Everything here is seeded: the same seed always yields the same codes
//! and permutations, so failures reproduce exactly.

#![allow(dead_code)]

use autcode_core::{
    factor_xp1, BinaryCode, BitVector, IdealDecomposition, Permutation, SubgroupGens,
};

/// SplitMix64: a tiny, well-mixed PRNG, plenty for generating test data.
pub struct SplitMix64(u64);

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    pub fn bit(&mut self) -> bool {
        self.next_u64() & 1 == 1
    }
}

pub fn random_bits(rng: &mut SplitMix64, len: usize) -> BitVector {
    let mut v = BitVector::zeros(len);
    for i in 0..len {
        v.set(i, rng.bit());
    }
    v
}

/// A uniformly random permutation (Fisher-Yates).
pub fn random_perm(rng: &mut SplitMix64, degree: usize) -> Permutation {
    let mut images: Vec<usize> = (0..degree).collect();
    for i in (1..degree).rev() {
        images.swap(i, rng.below(i + 1));
    }
    Permutation::from_images(images).expect("a shuffle is a permutation")
}

/// `cycles` consecutive `p`-blocks each rotated one step, then `fixed`
/// untouched coordinates.
pub fn block_rotation(p: usize, cycles: usize, fixed: usize) -> Permutation {
    let n = p * cycles + fixed;
    let mut images: Vec<usize> = (0..n).collect();
    for c in 0..cycles {
        for i in 0..p {
            images[c * p + i] = c * p + (i + 1) % p;
        }
    }
    Permutation::from_images(images).expect("block rotations are permutations")
}

/// A random code invariant under `tau`, built by closing random rows
/// under the action.
pub fn random_invariant_code(
    rng: &mut SplitMix64,
    n: usize,
    seed_rows: usize,
    tau: &Permutation,
) -> BinaryCode {
    let mut rows = Vec::new();
    for _ in 0..seed_rows {
        let mut v = random_bits(rng, n);
        for _ in 0..tau.order() {
            rows.push(v.clone());
            v = tau.act(&v);
        }
    }
    BinaryCode::from_rows(n, &rows).expect("rows have length n")
}

/// Transports a pair (code, automorphism) into general position.
pub fn conjugated(
    code: &BinaryCode,
    sigma: &Permutation,
    rho: &Permutation,
) -> (BinaryCode, Permutation) {
    let moved = rho.act_on_code(code).expect("degrees match");
    (moved, sigma.conjugate_by(rho))
}

/// The self-dual [8,4,4] code used as the small worked instance.
pub fn extended_hamming() -> BinaryCode {
    BinaryCode::from_bit_strings(&["11110000", "00111100", "00001111", "01100110"])
        .expect("valid generator rows")
}

fn poly_degree(coeffs: &BitVector) -> usize {
    coeffs.support().last().copied().unwrap_or(0)
}

/// The cyclic length-23 code spanned by shifts of `g`, extended by an
/// overall parity coordinate.
fn extended_cyclic_23(g: &BitVector) -> BinaryCode {
    let deg = poly_degree(g);
    let mut rows = Vec::new();
    for shift in 0..(23 - deg) {
        let mut row = BitVector::zeros(24);
        for j in 0..=deg {
            if g.get(j) {
                row.set(shift + j, true);
            }
        }
        row.set(23, row.weight() % 2 == 1);
        rows.push(row);
    }
    BinaryCode::from_rows(24, &rows).expect("rows have length 24")
}

/// Inverse modulo 23.
fn inv_mod_23(a: usize) -> usize {
    let mut acc = 1usize;
    for _ in 0..21 {
        acc = acc * a % 23;
    }
    acc
}

/// The fractional-linear map y -> 1/(1-y) on the projective line over
/// F_23, with coordinate 23 playing the point at infinity. It has order 3
/// and no fixed points (1 - 4 is a non-square mod 23), so its cycle type
/// is 3-(8,0).
pub fn golay_triple() -> Permutation {
    let mut images: Vec<usize> = (0..23)
        .map(|y| if y == 1 { 23 } else { inv_mod_23((24 - y) % 23) })
        .collect();
    images.push(0);
    Permutation::from_images(images).expect("a bijection of the projective line")
}

/// The extended [24,12,8] code: one degree-11 factor of x^23 + 1 spans a
/// cyclic [23,12] code whose parity extension is self-dual with the full
/// fractional-linear symmetry; the factor is chosen so that the order-3
/// map above is an automorphism.
pub fn extended_golay() -> BinaryCode {
    let factors = factor_xp1(23).expect("23 is an odd prime");
    let triple = golay_triple();
    for g in &factors[1..] {
        let code = extended_cyclic_23(g);
        if triple.is_automorphism(&code).expect("degrees match") {
            assert!(code.is_self_dual(), "the extension must be self-dual");
            return code;
        }
    }
    panic!("no degree-11 factor produced a code with the order-3 symmetry");
}

/// The supports of the weight-4 words of the [8,4,4] code form the
/// planes of an affine space on the 8 coordinates; this recovers its
/// addition table: a + b is the fourth point of the plane through
/// {origin, a, b}.
struct AffineEight {
    planes: Vec<Vec<usize>>,
}

impl AffineEight {
    fn new(code: &BinaryCode) -> Self {
        let planes: Vec<Vec<usize>> = code
            .codewords()
            .expect("16 codewords")
            .iter()
            .filter(|w| w.weight() == 4)
            .map(BitVector::support)
            .collect();
        assert_eq!(planes.len(), 14, "an [8,4,4] self-dual code has 14 planes");
        Self { planes }
    }

    fn fourth(&self, a: usize, b: usize, c: usize) -> usize {
        let plane = self
            .planes
            .iter()
            .find(|p| p.contains(&a) && p.contains(&b) && p.contains(&c))
            .expect("three points lie in a plane");
        *plane
            .iter()
            .find(|&&x| x != a && x != b && x != c)
            .expect("planes have four points")
    }

    fn add(&self, a: usize, b: usize) -> usize {
        if a == 0 {
            b
        } else if b == 0 {
            a
        } else if a == b {
            0
        } else {
            self.fourth(0, a, b)
        }
    }

    fn translation(&self, a: usize) -> Permutation {
        let images: Vec<usize> = (0..8).map(|x| self.add(a, x)).collect();
        Permutation::from_images(images).expect("translations are bijective")
    }
}

/// An alternating group of degree 4 inside the symmetry group of the
/// [8,4,4] code: two commuting fixed-point-free involutions (translations
/// of the affine structure) normalized by an order-3 linear map that
/// cycles the three nonidentity translations.
pub fn hamming_a4(code: &BinaryCode) -> (SubgroupGens, Permutation) {
    let space = AffineEight::new(code);
    let a = 1usize;
    let b = 2usize;
    let ab = space.add(a, b);
    let c = (1..8).find(|&x| x != a && x != b && x != ab).expect("8 > 4");

    // Linear map on the basis {a, b, c}: a -> b -> a+b -> a, c fixed.
    let mut images = vec![0usize; 8];
    for alpha in 0..2 {
        for beta in 0..2 {
            for gamma in 0..2 {
                let mut point = 0;
                let mut image = 0;
                if alpha == 1 {
                    point = space.add(point, a);
                    image = space.add(image, b);
                }
                if beta == 1 {
                    point = space.add(point, b);
                    image = space.add(image, ab);
                }
                if gamma == 1 {
                    point = space.add(point, c);
                    image = space.add(image, c);
                }
                images[point] = image;
            }
        }
    }
    let eta = Permutation::from_images(images).expect("linear maps are bijective");
    assert_eq!(eta.order(), 3);
    assert!(eta.is_automorphism(code).expect("degrees match"));

    let t_a = space.translation(a);
    let t_b = space.translation(b);
    assert!(t_a.is_automorphism(code).expect("degrees match"));
    assert!(t_b.is_automorphism(code).expect("degrees match"));

    (
        SubgroupGens {
            elementary: vec![t_a.clone(), t_b],
            complement: vec![eta],
        },
        t_a,
    )
}

/// Writes the coefficients of `poly` into block `block` of `row`.
fn place_block(row: &mut BitVector, block: usize, p: usize, poly: &BitVector) {
    for i in 0..p {
        if poly.get(i) {
            row.set(block * p + i, true);
        }
    }
}

/// A random self-dual code invariant under a cycle-type p-(c, f)
/// automorphism, for p with a single nontrivial ideal. The fixed part
/// lifts a random pairing of the orbits; the even part pairs the cycles
/// and fills each pair with the rotations of (g, g x^k) for the ideal
/// generator g and a random twist k.
pub fn self_dual_invariant(
    rng: &mut SplitMix64,
    p: usize,
    cycle_pairs: usize,
    fixed: usize,
) -> (BinaryCode, Permutation) {
    let cycles = 2 * cycle_pairs;
    assert!((cycles + fixed).is_multiple_of(2), "the orbit space must pair up");
    let n = p * cycles + fixed;
    let sigma = block_rotation(p, cycles, fixed);
    let orbits = sigma.orbits();

    let mut rows = Vec::new();

    // Fixed part: lift a random perfect matching of the orbit space.
    let mut unmatched: Vec<usize> = (0..cycles + fixed).collect();
    while !unmatched.is_empty() {
        let i = unmatched.swap_remove(rng.below(unmatched.len()));
        let j = unmatched.swap_remove(rng.below(unmatched.len()));
        let projected = BitVector::from_support(cycles + fixed, &[i, j]);
        rows.push(orbits.lift(&projected).expect("orbit-space length"));
    }

    // Even part: pair the cycles, twist each pair by a power of x.
    let ideals = IdealDecomposition::new(p).expect("odd prime");
    let g = ideals.idempotent(1).clone();
    let mut blocks: Vec<usize> = (0..cycles).collect();
    while !blocks.is_empty() {
        let u = blocks.swap_remove(rng.below(blocks.len()));
        let v = blocks.swap_remove(rng.below(blocks.len()));
        let k = rng.below(p);
        for m in 0..p {
            let mut row = BitVector::zeros(n);
            place_block(&mut row, u, p, g.mul_x_power(m).coeffs());
            place_block(&mut row, v, p, g.mul_x_power(m + k).coeffs());
            rows.push(row);
        }
    }

    let code = BinaryCode::from_rows(n, &rows).expect("rows have length n");
    assert!(code.is_self_dual(), "the construction is self-dual");
    assert!(sigma.is_automorphism(&code).expect("degrees match"));
    conjugated(&code, &sigma, &random_perm(rng, n))
}

/// A random self-orthogonal code invariant under `tau`, grown greedily:
/// orbit-closed rows are kept only while self-orthogonality survives.
fn random_isotropic_invariant(
    rng: &mut SplitMix64,
    n: usize,
    attempts: usize,
    tau: &Permutation,
) -> BinaryCode {
    let mut current = BinaryCode::from_rows(n, &[]).expect("the zero code");
    for _ in 0..attempts {
        let mut rows: Vec<BitVector> = current.basis().to_vec();
        let mut v = random_bits(rng, n);
        for _ in 0..tau.order() {
            rows.push(v.clone());
            v = tau.act(&v);
        }
        let candidate = BinaryCode::from_rows(n, &rows).expect("rows have length n");
        if candidate.is_self_orthogonal() {
            current = candidate;
        }
    }
    current
}

/// A random self-dual code with an order-2p automorphism of cycle type
/// 2p-(f, 0, c; 0), p odd. On two copies of a length-m block (m = pc + f)
/// take D self-orthogonal and invariant under a type p-(c, f) rotation
/// tau, and span {(d, 0)} with {(e, e) : e in the dual of D}; the order-2p
/// map sends (u, v) to (v^tau, u^tau).
pub fn order_2p_instance(
    rng: &mut SplitMix64,
    p: usize,
    cycles: usize,
    fixed: usize,
) -> (BinaryCode, Permutation) {
    let m = p * cycles + fixed;
    let n = 2 * m;
    let tau = block_rotation(p, cycles, fixed);
    let d = random_isotropic_invariant(rng, m, 3, &tau);

    let mut rows = Vec::new();
    for row in d.basis() {
        let mut doubled = BitVector::zeros(n);
        for i in row.support() {
            doubled.set(i, true);
        }
        rows.push(doubled);
    }
    for row in d.dual().basis() {
        let mut doubled = BitVector::zeros(n);
        for i in row.support() {
            doubled.set(i, true);
            doubled.set(m + i, true);
        }
        rows.push(doubled);
    }
    let code = BinaryCode::from_rows(n, &rows).expect("rows have length n");

    let mut images = vec![0usize; n];
    for i in 0..m {
        images[i] = m + tau.apply(i);
        images[m + i] = tau.apply(i);
    }
    let sigma = Permutation::from_images(images).expect("a block swap composed with tau");

    assert!(code.is_self_dual(), "D + D-dual doubling is self-dual");
    assert_eq!(sigma.order(), 2 * p as u64);
    assert!(sigma.is_automorphism(&code).expect("degrees match"));
    conjugated(&code, &sigma, &random_perm(rng, n))
}

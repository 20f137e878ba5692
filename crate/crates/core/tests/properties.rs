//! Randomized invariant checks over the public API: linear-algebra laws of
//! the canonical code representation, group-action identities, the
//! fixed-code conjugation law, the Frobenius/coordinate-reflection
//! correspondence, and the fixed/even splitting of a code under an odd-prime
//! automorphism.

use autcode_core::{
    decompose, eta_projection, fixed_code, BinaryCode, BitVector, CycleType, IdealDecomposition,
    OrbitPartition, Permutation, QuotientPoly,
};
use proptest::prelude::*;

fn bits(len: usize) -> impl Strategy<Value = BitVector> {
    proptest::collection::vec(any::<bool>(), len).prop_map(move |bools| {
        let mut v = BitVector::zeros(len);
        for (i, b) in bools.into_iter().enumerate() {
            v.set(i, b);
        }
        v
    })
}

fn codes(len: usize) -> impl Strategy<Value = BinaryCode> {
    proptest::collection::vec(bits(len), 0..=len)
        .prop_map(move |rows| BinaryCode::from_rows(len, &rows).unwrap())
}

fn perms(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|image| Permutation::from_images(image).unwrap())
}

/// A code of length `n` together with rows spanning it, for span-invariance
/// checks.
fn rows_and_code(n: usize) -> impl Strategy<Value = (Vec<BitVector>, BinaryCode)> {
    proptest::collection::vec(bits(n), 1..=n).prop_map(move |rows| {
        let code = BinaryCode::from_rows(n, &rows).unwrap();
        (rows, code)
    })
}

/// Closes `rows` under the action of `tau` and spans, so that `tau` is an
/// automorphism of the result by construction.
fn invariant_code(n: usize, rows: &[BitVector], tau: &Permutation) -> BinaryCode {
    let mut all = Vec::new();
    for row in rows {
        let mut v = row.clone();
        loop {
            all.push(v.clone());
            v = tau.act(&v);
            if v == *row {
                break;
            }
        }
    }
    BinaryCode::from_rows(n, &all).unwrap()
}

/// `cycles` consecutive `p`-blocks, each rotated by one step, followed by
/// fixed points.
fn block_rotation(p: usize, cycles: usize, fixed: usize) -> Permutation {
    let mut images: Vec<usize> = (0..p * cycles + fixed).collect();
    for k in 0..cycles {
        for j in 0..p {
            images[k * p + j] = k * p + (j + 1) % p;
        }
    }
    Permutation::from_images(images).unwrap()
}

/// A block rotation conjugated into general position.
fn uniform_perm(p: usize, cycles: usize, fixed: usize) -> impl Strategy<Value = Permutation> {
    let block_form = block_rotation(p, cycles, fixed);
    perms(p * cycles + fixed).prop_map(move |conj| block_form.conjugate_by(&conj))
}

/// An element of the centralizer of `cycles` consecutive `p`-blocks: a
/// permutation of the blocks combined with a rotation inside each block.
fn wreath_element(p: usize, cycles: usize) -> impl Strategy<Value = Permutation> {
    let blocks = Just((0..cycles).collect::<Vec<usize>>()).prop_shuffle();
    let rotations = proptest::collection::vec(0..p, cycles);
    (blocks, rotations).prop_map(move |(blocks, rotations)| {
        let mut images = vec![0; p * cycles];
        for k in 0..cycles {
            for j in 0..p {
                images[k * p + j] = blocks[k] * p + (j + rotations[k]) % p;
            }
        }
        Permutation::from_images(images).unwrap()
    })
}

proptest! {
    #[test]
    fn dual_dimension_and_involution((n, c) in (1usize..=16).prop_flat_map(|n| (Just(n), codes(n)))) {
        let dual = c.dual();
        prop_assert_eq!(c.dim() + dual.dim(), n);
        prop_assert_eq!(&dual.dual(), &c);
        for r in c.basis() {
            for s in dual.basis() {
                prop_assert!(!r.dot(s));
            }
        }
    }

    #[test]
    fn canonical_basis_is_span_invariant(
        (n, (rows, code), seed) in (2usize..=14)
            .prop_flat_map(|n| (Just(n), rows_and_code(n), any::<prop::sample::Index>()))
    ) {
        // reversing the rows does not change the code
        let reversed: Vec<BitVector> = rows.iter().rev().cloned().collect();
        prop_assert_eq!(&BinaryCode::from_rows(n, &reversed).unwrap(), &code);

        // adding a vector already in the span does not change the code
        let mut extra = rows[seed.index(rows.len())].clone();
        extra ^= &rows[0];
        let mut extended = rows.clone();
        extended.push(extra);
        prop_assert_eq!(&BinaryCode::from_rows(n, &extended).unwrap(), &code);
    }

    #[test]
    fn sum_and_intersection_dimensions(
        (c, d) in (1usize..=14).prop_flat_map(|n| (codes(n), codes(n)))
    ) {
        let sum = c.sum(&d).unwrap();
        let meet = c.intersect(&d).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), c.dim() + d.dim());
        prop_assert!(c.is_subcode_of(&sum).unwrap());
        prop_assert!(d.is_subcode_of(&sum).unwrap());
        prop_assert!(meet.is_subcode_of(&c).unwrap());
        prop_assert!(meet.is_subcode_of(&d).unwrap());
    }

    #[test]
    fn min_distance_bounded_by_basis_weights(
        c in (2usize..=14).prop_flat_map(codes).prop_filter("nonzero", |c| c.dim() > 0)
    ) {
        let bound = c.basis().iter().map(BitVector::weight).min().unwrap();
        prop_assert!(c.min_distance().unwrap() <= bound);
    }

    #[test]
    fn acting_is_a_right_action(
        (v, s, t) in (1usize..=16).prop_flat_map(|n| (bits(n), perms(n), perms(n)))
    ) {
        prop_assert_eq!(t.act(&s.act(&v)), s.compose(&t).act(&v));
        prop_assert_eq!(s.inverse().act(&s.act(&v)), v.clone());
        prop_assert_eq!(s.act(&v).weight(), v.weight());
    }

    #[test]
    fn code_action_respects_composition(
        (c, s, t) in (1usize..=12).prop_flat_map(|n| (codes(n), perms(n), perms(n)))
    ) {
        let via_steps = t.act_on_code(&s.act_on_code(&c).unwrap()).unwrap();
        let via_product = s.compose(&t).act_on_code(&c).unwrap();
        prop_assert_eq!(&via_steps, &via_product);
        prop_assert_eq!(via_product.dim(), c.dim());
    }

    #[test]
    fn conjugation_composes(
        (t, s, r) in (1usize..=12).prop_flat_map(|n| (perms(n), perms(n), perms(n)))
    ) {
        prop_assert_eq!(
            t.conjugate_by(&s).conjugate_by(&r),
            t.conjugate_by(&s.compose(&r))
        );
        prop_assert_eq!(t.conjugate_by(&Permutation::identity(t.degree())), t);
    }

    #[test]
    fn conjugating_transports_fixed_codes(
        (n, rows, t, s) in (2usize..=10).prop_flat_map(|n| {
            (Just(n), proptest::collection::vec(bits(n), 1..=4), perms(n), perms(n))
        })
    ) {
        let code = invariant_code(n, &rows, &t);
        prop_assert!(t.is_automorphism(&code).unwrap());

        let moved = s.act_on_code(&code).unwrap();
        let t_conj = t.conjugate_by(&s);
        prop_assert!(t_conj.is_automorphism(&moved).unwrap());
        prop_assert_eq!(
            s.act_on_code(&fixed_code(&code, &t).unwrap()).unwrap(),
            fixed_code(&moved, &t_conj).unwrap()
        );
    }

    #[test]
    fn prime_cycle_types_survive_conjugation(
        (p, c, f, sigma) in prop_oneof![Just(2usize), Just(3), Just(5), Just(7)]
            .prop_flat_map(|p| (Just(p), 0usize..=3, 0usize..=3))
            .prop_filter("nonempty degree", |&(p, c, f)| p * c + f > 0)
            .prop_flat_map(|(p, c, f)| (Just(p), Just(c), Just(f), uniform_perm(p, c, f)))
    ) {
        let ct = sigma.prime_cycle_type(p).unwrap();
        prop_assert_eq!(ct, CycleType::Prime { p, cycles: c, fixed: f });
        let orbits = OrbitPartition::new(&sigma);
        prop_assert_eq!(orbits.len(), c + f);
        prop_assert!(orbits.orbits().iter().all(|o| o.len() == 1 || o.len() == p));
    }

    #[test]
    fn orbit_projection_is_a_homomorphism(
        (p, c, t1, t2) in prop_oneof![Just(2usize), Just(3), Just(5)]
            .prop_flat_map(|p| (Just(p), 1usize..=4))
            .prop_flat_map(|(p, c)| (Just(p), Just(c), wreath_element(p, c), wreath_element(p, c)))
    ) {
        let sigma = block_rotation(p, c, 0);
        prop_assert!(t1.commutes_with(&sigma));
        let e1 = eta_projection(&t1, &sigma).unwrap();
        let e2 = eta_projection(&t2, &sigma).unwrap();
        let e12 = eta_projection(&t1.compose(&t2), &sigma).unwrap();
        prop_assert_eq!(e12, e1.compose(&e2));
    }

    #[test]
    fn frobenius_matches_the_coordinate_reflection(
        (p, raw) in prop_oneof![Just(3usize), Just(5), Just(11), Just(13)]
            .prop_flat_map(|p| (Just(p), bits(p)))
    ) {
        let ideals = IdealDecomposition::new(p).unwrap();
        let projected = QuotientPoly::new(raw).mul(ideals.idempotent(1));
        let elem = ideals.element(1, projected).unwrap();
        let image = ideals.frobenius_half(&elem).unwrap();
        let reflection = ideals.frobenius_permutation().unwrap();
        prop_assert_eq!(image.poly(), &reflection.apply(elem.poly()));
        // applying it twice returns to the start: the reflection is an involution
        let twice = ideals.frobenius_half(&image).unwrap();
        prop_assert_eq!(twice.poly(), elem.poly());
    }

    #[test]
    fn fixed_even_split_is_a_direct_sum(
        (p, cyc, fix, rows) in prop_oneof![Just(3usize), Just(5)]
            .prop_flat_map(|p| (Just(p), 1usize..=3, 0usize..=2))
            .prop_flat_map(|(p, c, f)| {
                let n = p * c + f;
                (Just(p), Just(c), Just(f), proptest::collection::vec(bits(n), 1..=4))
            })
    ) {
        let n = p * cyc + fix;
        let sigma = block_rotation(p, cyc, fix);
        let code = invariant_code(n, &rows, &sigma);

        let dec = decompose(&code, &sigma, p).unwrap();
        let fixed = dec.fixed_code();
        let even = dec.even_code();
        prop_assert!(fixed.meets_trivially(even).unwrap());
        prop_assert_eq!(&fixed.sum(even).unwrap(), &code);
        prop_assert_eq!(fixed.dim() + even.dim(), code.dim());
        for row in even.basis() {
            for orbit in OrbitPartition::new(&sigma).orbits() {
                let on_orbit = orbit.iter().filter(|&&i| row.get(i)).count();
                if orbit.len() == 1 {
                    prop_assert_eq!(on_orbit, 0);
                } else {
                    prop_assert_eq!(on_orbit % 2, 0);
                }
            }
        }
    }
}

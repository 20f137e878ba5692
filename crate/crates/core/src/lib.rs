//! Structure theory of binary linear codes under prescribed automorphisms.
//!
//! The crate provides bit-packed GF(2) linear algebra, coordinate
//! permutations and their actions on codes, arithmetic in the quotient ring
//! `F2[x]/(x^p + 1)` for odd primes `p`, and on top of those the
//! decomposition machinery for codes invariant under automorphisms of odd
//! prime order, order `2p`, and dihedral groups, together with fixed-code
//! interaction identities and an order filter for automorphism groups of
//! putative self-dual codes.
//!
//! Everything is deterministic: equal inputs produce identical bases,
//! orderings, and reports. Coordinates are 0-indexed throughout the API;
//! the text formats of the companion CLI crate are 1-indexed.
//!
//! The crate is `no_std` (with `alloc`); IO and file formats live in the
//! companion CLI crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod bitvec;
mod classify;
mod code;
mod cyclotomic;
mod dihedral;
mod error;
mod interaction;
mod order_2p;
mod perm;
mod prime_decomp;

pub use bitvec::BitVector;
pub use classify::{burnside_order_list, is_admissible_type, Admissibility, ClassifyParams};
pub use code::BinaryCode;
pub use cyclotomic::{
    factor_xp1, ord2_mod_p, ExtFieldElem, FrobeniusHalf, IdealDecomposition, QuotientPoly, MAX_P,
};
pub use dihedral::{trace_hermitian_self_dual, DihedralContext, DihedralPair};
pub use error::{Error, Result};
pub use interaction::{
    check_conjugate_sum, quotient_profile, remark7_check, sum_fixed_codes, PairReport,
    QuotientProfile, SubgroupGens, TypeCheck,
};
pub use order_2p::{
    check_profile_constraints, ChainReport, ConstraintItem, ConstraintReport, NonprojectiveBoundReport,
    ModuleProfile, ProjectivityFlags, TwoPContext,
};
pub use perm::{
    eta_projection, fixed_code, generate_subgroup, projected_fixed_code, CycleType,
    OrbitPartition, Permutation,
};
pub use prime_decomp::{
    decompose, hermitian_self_dual, yorgov_check, PrimeDecomposition, YorgovFlags,
};

/// Default cap on the dimension of exhaustive codeword enumerations
/// (minimum distance, weight enumerator): `2^28` codewords.
pub const DEFAULT_ENUMERATION_CAP: usize = 28;

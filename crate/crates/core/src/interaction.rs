//! Interaction of fixed codes across an automorphism subgroup.
//!
//! Three pieces of machinery built on the identity C(τ)^σ = C(τ^σ):
//! fixed-code sums and the conjugate-sum identity for semidirect products
//! E ⋊ H with H transitive on E^×; the module structure of the quotient
//! D^⊥/D for a self-orthogonal fixed-code sum D; and the compatibility
//! report for a commuting pair of prime-order automorphisms — induced
//! actions on each other's orbit projections, equality of the two double
//! projections, and the cycle-type arithmetic of the induced actions.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use crate::bitvec::BitVector;
use crate::code::{self, BinaryCode};
use crate::error::{Error, Result};
use crate::perm::{
    eta_projection, fixed_code, generate_subgroup, projected_fixed_code, CycleType, Permutation,
};

/// Internal ceiling for generated subgroups; the identities here are meant
/// for desk-scale groups.
const GROUP_CAP: usize = 1 << 14;

/// Generators of a semidirect product E ⋊ H: an elementary-abelian part
/// and a complement acting on it by conjugation.
#[derive(Debug, Clone)]
pub struct SubgroupGens {
    pub elementary: Vec<Permutation>,
    pub complement: Vec<Permutation>,
}

/// The quotient module D^⊥/D of a self-orthogonal fixed-code sum, with
/// the fixed dimension of a permutation acting on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientProfile {
    pub d: BinaryCode,
    pub dim_d: usize,
    pub dim_dual: usize,
    pub quotient_dim: usize,
    pub sigma_fixed_dim: usize,
}

/// Cycle-type arithmetic for a commuting pair: the type of the product
/// predicts the types of both induced orbit actions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeCheck {
    /// Type of σ_p σ_q, a pq-(a,b,c;f).
    pub product: CycleType,
    /// q-(c+b, a+f), the claimed type of the action induced on σ_p-orbits.
    pub predicted_on_p_orbits: CycleType,
    pub actual_on_p_orbits: CycleType,
    /// p-(c+a, b+f), the claimed type of the action induced on σ_q-orbits.
    pub predicted_on_q_orbits: CycleType,
    pub actual_on_q_orbits: CycleType,
}

impl TypeCheck {
    pub fn holds(&self) -> bool {
        self.predicted_on_p_orbits == self.actual_on_p_orbits
            && self.predicted_on_q_orbits == self.actual_on_q_orbits
    }
}

/// Compatibility report for a commuting pair of prime-order automorphisms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    /// The action induced by σ_q on σ_p-orbits preserves π_{σ_p}(C(σ_p)).
    pub aut_p: bool,
    /// The action induced by σ_p on σ_q-orbits preserves π_{σ_q}(C(σ_q)).
    pub aut_q: bool,
    /// The two double projections agree as codes (coordinates matched by
    /// minimal original coordinate, transitively through both levels).
    pub projections_equal: bool,
    /// Cycle-type arithmetic; only defined for distinct primes.
    pub type_check: Option<TypeCheck>,
}

impl PairReport {
    pub fn all_hold(&self) -> bool {
        self.aut_p
            && self.aut_q
            && self.projections_equal
            && self.type_check.as_ref().is_none_or(TypeCheck::holds)
    }
}

/// Sum of the fixed codes of the given automorphisms, as a canonical code.
/// An empty list yields the zero code.
pub fn sum_fixed_codes(code: &BinaryCode, elements: &[Permutation]) -> Result<BinaryCode> {
    let mut rows: Vec<BitVector> = Vec::new();
    for element in elements {
        if !element.is_automorphism(code)? {
            return Err(Error::domain(format!(
                "{element} is not an automorphism of the code"
            )));
        }
        rows.extend(fixed_code(code, element)?.basis().iter().cloned());
    }
    BinaryCode::from_rows(code.length(), &rows)
}

fn generated(gens: &[Permutation], degree: usize) -> Result<Vec<Permutation>> {
    if gens.is_empty() {
        return Ok(alloc::vec![Permutation::identity(degree)]);
    }
    generate_subgroup(gens, GROUP_CAP)
}

/// Checks the conjugate-sum identity for E ⋊ H with H transitive on E^×
/// by conjugation: the sum of the fixed codes over all of E^× equals the
/// sum of the H-conjugates of the single fixed code C(ε_0). Both sides are
/// computed independently and compared.
///
/// The hypotheses — E elementary abelian, ε_0 a nonidentity element of E,
/// H normalizing E and transitive on E^× — are verified and yield a
/// hypothesis error when violated; non-automorphism generators are a
/// domain error.
pub fn check_conjugate_sum(
    code: &BinaryCode,
    gens: &SubgroupGens,
    epsilon_0: &Permutation,
) -> Result<bool> {
    for g in gens
        .elementary
        .iter()
        .chain(gens.complement.iter())
        .chain(core::iter::once(epsilon_0))
    {
        if !g.is_automorphism(code)? {
            return Err(Error::domain(format!(
                "{g} is not an automorphism of the code"
            )));
        }
    }

    let e_group = generated(&gens.elementary, code.length())?;
    for (i, a) in gens.elementary.iter().enumerate() {
        for b in &gens.elementary[i + 1..] {
            if !a.commutes_with(b) {
                return Err(Error::hypothesis(
                    "the elementary part's generators do not commute",
                ));
            }
        }
    }
    let exponent = e_group
        .iter()
        .find(|g| !g.is_identity())
        .map(|g| g.order())
        .unwrap_or(1);
    if e_group
        .iter()
        .any(|g| !g.is_identity() && g.order() != exponent)
    {
        return Err(Error::hypothesis(
            "the elementary part has elements of different prime orders",
        ));
    }
    if epsilon_0.is_identity() || !e_group.contains(epsilon_0) {
        return Err(Error::hypothesis(
            "the base element is not a nonidentity element of the elementary part",
        ));
    }

    let h_group = generated(&gens.complement, code.length())?;
    let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::new();
    for kappa in &h_group {
        let conj = epsilon_0.conjugate_by(kappa);
        if !e_group.contains(&conj) {
            return Err(Error::hypothesis(
                "the complement does not normalize the elementary part",
            ));
        }
        orbit.insert(conj.images().to_vec());
    }
    if orbit.len() != e_group.len() - 1 {
        return Err(Error::hypothesis(
            "the complement is not transitive on the nonidentity elements",
        ));
    }

    let lhs = {
        let mut rows: Vec<BitVector> = Vec::new();
        for eps in e_group.iter().filter(|g| !g.is_identity()) {
            rows.extend(fixed_code(code, eps)?.basis().iter().cloned());
        }
        BinaryCode::from_rows(code.length(), &rows)?
    };
    let rhs = {
        let base = fixed_code(code, epsilon_0)?;
        let mut rows: Vec<BitVector> = Vec::new();
        for kappa in &h_group {
            rows.extend(kappa.act_on_code(&base)?.basis().iter().cloned());
        }
        BinaryCode::from_rows(code.length(), &rows)?
    };
    Ok(lhs == rhs)
}

/// Builds D as the fixed-code sum of `elements` inside `code`, requires
/// D ⊆ D^⊥, and profiles the quotient module D^⊥/D under `sigma`: its
/// dimension and the dimension of its `sigma`-fixed subspace, computed on
/// coset representatives (a complement of D in D^⊥) with the action
/// reduced modulo D.
pub fn quotient_profile(
    code: &BinaryCode,
    elements: &[Permutation],
    sigma: &Permutation,
) -> Result<QuotientProfile> {
    if !sigma.is_automorphism(code)? {
        return Err(Error::domain(
            "the permutation is not an automorphism of the code",
        ));
    }
    let d = sum_fixed_codes(code, elements)?;
    if !d.is_self_orthogonal() {
        return Err(Error::domain(
            "the fixed-code sum is not self-orthogonal; the quotient is undefined",
        ));
    }
    if !sigma.is_automorphism(&d)? {
        return Err(Error::domain(
            "the permutation does not preserve the fixed-code sum",
        ));
    }
    let dual = d.dual();

    // coset representatives: dual basis rows independent modulo D
    let mut reps: Vec<BitVector> = Vec::new();
    let mut spanned = d.clone();
    for row in dual.basis() {
        if !spanned.contains(row) {
            reps.push(row.clone());
            let mut rows: Vec<BitVector> = spanned.basis().to_vec();
            rows.push(row.clone());
            spanned = BinaryCode::from_rows(code.length(), &rows)?;
        }
    }
    let quotient_dim = reps.len();

    // the action matrix on representatives, reduced modulo D
    let mut combined: Vec<BitVector> = reps.clone();
    combined.extend(d.basis().iter().cloned());
    let mut difference_rows: Vec<BitVector> = Vec::new();
    for (i, rep) in reps.iter().enumerate() {
        let image = sigma.act(rep);
        let coeffs = code::express_in_rows(&image, &combined)
            .expect("the dual is invariant under the permutation");
        // row of M + I: the fixed subspace is the kernel of this map
        let mut row = BitVector::zeros(quotient_dim);
        for j in 0..quotient_dim {
            if coeffs.get(j) {
                row.set(j, true);
            }
        }
        row.set(i, row.get(i) ^ true);
        difference_rows.push(row);
    }
    let sigma_fixed_dim = code::left_kernel(&difference_rows).len();

    Ok(QuotientProfile {
        dim_d: d.dim(),
        dim_dual: dual.dim(),
        quotient_dim,
        sigma_fixed_dim,
        d,
    })
}

/// Compatibility report for commuting prime-order automorphisms: whether
/// each induced action preserves the other's projected fixed code, whether
/// the two double projections coincide, and (for distinct primes) whether
/// the cycle type of the product predicts the types of the induced
/// actions via q-(c+b, a+f) and p-(c+a, b+f).
pub fn remark7_check(
    code: &BinaryCode,
    sigma_p: &Permutation,
    sigma_q: &Permutation,
) -> Result<PairReport> {
    if !sigma_p.commutes_with(sigma_q) {
        return Err(Error::domain("the permutations do not commute"));
    }
    let p = sigma_p.order();
    let q = sigma_q.order();
    if !crate::perm::is_prime(p as usize) || !crate::perm::is_prime(q as usize) {
        return Err(Error::input(format!(
            "orders {p} and {q} must both be prime"
        )));
    }
    let (p, q) = (p as usize, q as usize);
    if !sigma_p.is_automorphism(code)? || !sigma_q.is_automorphism(code)? {
        return Err(Error::domain(
            "both permutations must be automorphisms of the code",
        ));
    }

    let proj_p = projected_fixed_code(code, sigma_p)?;
    let eta_on_p = eta_projection(sigma_q, sigma_p)?;
    let aut_p = eta_on_p.is_automorphism(&proj_p)?;

    let proj_q = projected_fixed_code(code, sigma_q)?;
    let eta_on_q = eta_projection(sigma_p, sigma_q)?;
    let aut_q = eta_on_q.is_automorphism(&proj_q)?;

    // both double projections are indexed by ⟨σ_p, σ_q⟩-orbits ordered by
    // their minimal original coordinate, so code equality is meaningful
    let double_p = projected_fixed_code(&proj_p, &eta_on_p)?;
    let double_q = projected_fixed_code(&proj_q, &eta_on_q)?;
    let projections_equal = double_p == double_q;

    let type_check = if p != q {
        let product = sigma_p.compose(sigma_q);
        let product_type = product.composite_cycle_type(p, q)?;
        let CycleType::Composite {
            p_cycles: a,
            q_cycles: b,
            pq_cycles: c,
            fixed: f,
            ..
        } = product_type
        else {
            unreachable!("composite_cycle_type returns a composite type");
        };
        Some(TypeCheck {
            product: product_type,
            predicted_on_p_orbits: CycleType::Prime {
                p: q,
                cycles: c + b,
                fixed: a + f,
            },
            actual_on_p_orbits: eta_on_p.prime_cycle_type(q)?,
            predicted_on_q_orbits: CycleType::Prime {
                p,
                cycles: c + a,
                fixed: b + f,
            },
            actual_on_q_orbits: eta_on_q.prime_cycle_type(p)?,
        })
    } else {
        None
    };

    Ok(PairReport {
        aut_p,
        aut_q,
        projections_equal,
        type_check,
    })
}

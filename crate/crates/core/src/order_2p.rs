//! Codes invariant under an automorphism of order `2p`, `p` an odd prime.
//!
//! The context fixes `σ` of cycle type `2p-(w, 0, x; 0)`: `w`
//! transpositions, `x` cycles of length `2p`, no fixed points and no pure
//! `p`-cycles. Its powers `σ_p = σ²` (order `p`) and `σ_2 = σ^p` (a
//! fixed-point-free involution) commute, so the code is simultaneously a
//! module over `F2[σ_p] ≅ F2[x]/(x^p + 1)` and over `F2⟨σ_2⟩`. The module
//! invariants measured here — the folded code, projectivity over
//! `F2⟨σ_2⟩`, and the per-ideal rank profile — constrain which cycle types
//! a self-dual code can admit.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitvec::BitVector;
use crate::code::BinaryCode;
use crate::cyclotomic::{IdealDecomposition, QuotientPoly};
use crate::error::{Error, Result};
use crate::perm::{fixed_code, CycleType, OrbitPartition, Permutation};

/// A code together with an automorphism of order `2p` and no fixed points
/// or pure `p`-cycles (type `2p-(w, 0, x; 0)`).
#[derive(Debug, Clone)]
pub struct TwoPContext {
    code: BinaryCode,
    sigma: Permutation,
    sigma_2: Permutation,
    sigma_p: Permutation,
    p: usize,
    two_cycles: usize,
    two_p_cycles: usize,
    /// Orbits of the involution `σ_2`: `n/2` pairs ordered by smallest
    /// member. Folding and projecting both use this coordinate order.
    involution_orbits: OrbitPartition,
    fixed_by_involution: BinaryCode,
}

impl TwoPContext {
    /// Validates the cycle type `2p-(w, 0, x; 0)` with `x ≥ 1` and that
    /// `sigma` is an automorphism of `code`.
    pub fn new(code: &BinaryCode, sigma: &Permutation, p: usize) -> Result<Self> {
        if p.is_multiple_of(2) {
            return Err(Error::input("the odd part of the order must be an odd prime"));
        }
        let (two_cycles, two_p_cycles) = match sigma.composite_cycle_type(2, p)? {
            CycleType::Composite {
                p_cycles,
                q_cycles: 0,
                pq_cycles,
                fixed: 0,
                ..
            } => (p_cycles, pq_cycles),
            t => {
                return Err(Error::domain(format!(
                    "cycle type {t} is not of the form {}-(w, 0, x; 0)",
                    2 * p
                )))
            }
        };
        if two_p_cycles == 0 {
            return Err(Error::domain(format!(
                "no cycle of length {}: the order is not {}",
                2 * p,
                2 * p
            )));
        }
        if !sigma.is_automorphism(code)? {
            return Err(Error::domain(
                "the permutation is not an automorphism of the code",
            ));
        }
        let sigma_2 = sigma.pow(p as u64);
        let sigma_p = sigma.pow(2);
        let involution_orbits = OrbitPartition::new(&sigma_2);
        let fixed_by_involution = fixed_code(code, &sigma_2)?;
        Ok(TwoPContext {
            code: code.clone(),
            sigma: sigma.clone(),
            sigma_2,
            sigma_p,
            p,
            two_cycles,
            two_p_cycles,
            involution_orbits,
            fixed_by_involution,
        })
    }

    pub fn code(&self) -> &BinaryCode {
        &self.code
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    /// The involution `σ^p`.
    pub fn sigma_2(&self) -> &Permutation {
        &self.sigma_2
    }

    /// The odd-order part `σ²`.
    pub fn sigma_p(&self) -> &Permutation {
        &self.sigma_p
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// `w`: number of transpositions of `σ`.
    pub fn two_cycles(&self) -> usize {
        self.two_cycles
    }

    /// `x`: number of cycles of length `2p` of `σ`.
    pub fn two_p_cycles(&self) -> usize {
        self.two_p_cycles
    }

    pub fn involution_orbits(&self) -> &OrbitPartition {
        &self.involution_orbits
    }

    /// `C(σ_2)`, the subcode fixed by the involution.
    pub fn fixed_by_involution(&self) -> &BinaryCode {
        &self.fixed_by_involution
    }

    /// Folds a vector along the involution: coordinate `i` of the result is
    /// the sum of `v` over the `i`-th orbit pair of `σ_2`.
    pub fn phi_fold(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.code.length() {
            return Err(Error::input(format!(
                "vector length {} does not match code length {}",
                v.len(),
                self.code.length()
            )));
        }
        let mut folded = BitVector::zeros(self.involution_orbits.len());
        for (i, orbit) in self.involution_orbits.orbits().iter().enumerate() {
            let parity = orbit.iter().filter(|&&c| v.get(c)).count() % 2;
            folded.set(i, parity == 1);
        }
        Ok(folded)
    }

    /// `φ(C)`: the code folded along the involution, length `n/2`.
    pub fn folded_code(&self) -> BinaryCode {
        let rows: Vec<BitVector> = self
            .code
            .basis()
            .iter()
            .map(|row| self.phi_fold(row).expect("basis rows have code length"))
            .collect();
        BinaryCode::from_rows(self.involution_orbits.len(), &rows)
            .expect("folded rows share one length")
    }

    /// `π(C(σ_2))`: the involution-fixed subcode with each orbit pair
    /// collapsed to one coordinate, length `n/2`.
    pub fn projected_involution_code(&self) -> BinaryCode {
        let rows: Vec<BitVector> = self
            .fixed_by_involution
            .basis()
            .iter()
            .map(|row| {
                self.involution_orbits
                    .project(row)
                    .expect("fixed vectors are constant on orbits")
            })
            .collect();
        BinaryCode::from_rows(self.involution_orbits.len(), &rows)
            .expect("projected rows share one length")
    }

    /// Evaluates the chain `φ(C) ⊆ π(C(σ_2))` and `π(C(σ_2)) = φ(C)^⊥`,
    /// which holds whenever `C` is self-dual.
    pub fn folding_chain(&self) -> Result<ChainReport> {
        let folded = self.folded_code();
        let projected = self.projected_involution_code();
        let containment_holds = folded.is_subcode_of(&projected)?;
        let duality_holds = projected == folded.dual();
        Ok(ChainReport {
            folded,
            projected,
            containment_holds,
            duality_holds,
        })
    }

    /// Projectivity of `C` as a module over `F2⟨σ_2⟩`, measured two ways:
    /// the self-duality criterion on `π(C(σ_2))` and the rank oracle
    /// `dim C(σ_2) = dim C / 2`. For self-dual codes the two agree.
    pub fn is_projective(&self) -> ProjectivityFlags {
        ProjectivityFlags {
            criterion: self.projected_involution_code().is_self_dual(),
            oracle: 2 * self.fixed_by_involution.dim() == self.code.dim(),
        }
    }

    /// Applies the group-algebra element `f(σ_p) = Σ f_k σ_p^k` to a vector.
    fn apply_poly(&self, v: &BitVector, f: &QuotientPoly) -> BitVector {
        let mut acc = BitVector::zeros(v.len());
        let mut power = v.clone();
        for k in 0..self.p {
            if f.coeffs().get(k) {
                acc ^= &power;
            }
            power = self.sigma_p.act(&power);
        }
        acc
    }

    /// The ideal component `C_i = C · e_i(σ_p)`.
    pub fn ideal_component(&self, ideals: &IdealDecomposition, i: usize) -> Result<BinaryCode> {
        self.check_ideals(ideals)?;
        let e_i = ideals.idempotent(i);
        let rows: Vec<BitVector> = self
            .code
            .basis()
            .iter()
            .map(|row| self.apply_poly(row, e_i))
            .collect();
        BinaryCode::from_rows(self.code.length(), &rows)
    }

    /// Measures the free and non-free ranks of each ideal component as a
    /// module over `F2⟨σ_2⟩` extended by `I_i`: component `C_i` decomposes
    /// into `y_i` free summands and `z_i` trivial ones over the field of
    /// `I_i`, with `y_i = dim_F (1+σ_2)C_i` and `z_i = dim_F C_i − 2y_i`.
    pub fn module_profile(&self) -> Result<ModuleProfile> {
        let ideals = IdealDecomposition::new(self.p)?;
        let mut dims = Vec::with_capacity(ideals.t() + 1);
        let mut y = Vec::with_capacity(ideals.t() + 1);
        let mut z = Vec::with_capacity(ideals.t() + 1);
        for i in 0..=ideals.t() {
            let component = self.ideal_component(&ideals, i)?;
            let s_i = ideals.factor_degree(i);
            let image_rows: Vec<BitVector> = component
                .basis()
                .iter()
                .map(|v| {
                    let mut w = self.sigma_2.act(v);
                    w ^= v;
                    w
                })
                .collect();
            let image_dim = BinaryCode::from_rows(self.code.length(), &image_rows)?.dim();
            if component.dim() % s_i != 0 || image_dim % s_i != 0 {
                return Err(Error::domain(format!(
                    "component {i} is not a module over its field: dims {} and {image_dim} \
                     are not multiples of {s_i}",
                    component.dim()
                )));
            }
            let y_i = image_dim / s_i;
            let rank = component.dim() / s_i;
            if 2 * y_i > rank {
                return Err(Error::domain(format!(
                    "component {i} has image rank {y_i} exceeding half its rank {rank}"
                )));
            }
            dims.push(component.dim());
            y.push(y_i);
            z.push(rank - 2 * y_i);
        }
        Ok(ModuleProfile {
            p: self.p,
            s: ideals.s(),
            partner: (0..=ideals.t()).map(|i| ideals.reciprocal_partner(i)).collect(),
            two_cycles: self.two_cycles,
            two_p_cycles: self.two_p_cycles,
            code_dim: self.code.dim(),
            dims,
            y,
            z,
        })
    }

    /// The length-based applicability test and both conclusions of the
    /// non-projectivity bound: when `n ≡ 0 (mod 4)`, the order of `2` mod
    /// `p` is even, and `w` is odd, a self-dual code satisfies
    /// `dim C(σ_2) ≥ n/4 + (p−1)/2` and its projected involution-fixed code
    /// is not self-dual.
    pub fn nonprojective_bound_check(&self) -> Result<NonprojectiveBoundReport> {
        let n = self.code.length();
        let s = crate::cyclotomic::ord2_mod_p(self.p)?;
        let applicable = n.is_multiple_of(4) && s % 2 == 0 && self.two_cycles % 2 == 1;
        let fixed_dim = self.fixed_by_involution.dim();
        let bound = n / 4 + (self.p - 1) / 2;
        Ok(NonprojectiveBoundReport {
            applicable,
            fixed_dim,
            bound,
            bound_holds: fixed_dim >= bound,
            projection_self_dual: self.projected_involution_code().is_self_dual(),
        })
    }

    fn check_ideals(&self, ideals: &IdealDecomposition) -> Result<()> {
        if ideals.p() != self.p {
            return Err(Error::input(format!(
                "ideal decomposition is for p = {}, the context uses p = {}",
                ideals.p(),
                self.p
            )));
        }
        Ok(())
    }
}

/// Both sides of the folding chain.
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub folded: BinaryCode,
    pub projected: BinaryCode,
    /// `φ(C) ⊆ π(C(σ_2))`.
    pub containment_holds: bool,
    /// `π(C(σ_2)) = φ(C)^⊥`.
    pub duality_holds: bool,
}

impl ChainReport {
    pub fn all_hold(&self) -> bool {
        self.containment_holds && self.duality_holds
    }
}

/// Projectivity over `F2⟨σ_2⟩` measured two independent ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectivityFlags {
    /// `π(C(σ_2))` is self-dual.
    pub criterion: bool,
    /// `dim C(σ_2) = dim C / 2`.
    pub oracle: bool,
}

impl ProjectivityFlags {
    pub fn agree(&self) -> bool {
        self.criterion == self.oracle
    }
}

/// Per-ideal module ranks of a code under an order-`2p` automorphism.
///
/// Fields are public so that hypothetical profiles can be assembled and
/// fed to [`check_profile_constraints`] directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleProfile {
    pub p: usize,
    /// Multiplicative order of `2` mod `p` (degree of the ideals beyond
    /// `I_0`).
    pub s: usize,
    /// Reciprocal pairing on ideal indices.
    pub partner: Vec<usize>,
    /// `w`.
    pub two_cycles: usize,
    /// `x`.
    pub two_p_cycles: usize,
    pub code_dim: usize,
    /// `dim C_i` over F2, indices `0..=t`.
    pub dims: Vec<usize>,
    /// Free ranks `y_i`.
    pub y: Vec<usize>,
    /// Trivial ranks `z_i`.
    pub z: Vec<usize>,
}

/// One evaluated constraint of the profile system.
#[derive(Debug, Clone)]
pub struct ConstraintItem {
    pub label: &'static str,
    pub holds: bool,
    pub detail: String,
}

/// The evaluated constraint system for a module profile.
#[derive(Debug, Clone)]
pub struct ConstraintReport {
    pub items: Vec<ConstraintItem>,
}

impl ConstraintReport {
    pub fn all_hold(&self) -> bool {
        self.items.iter().all(|item| item.holds)
    }
}

/// Evaluates the rank constraints a self-dual code must satisfy:
///
/// * `a`: `2y_0 + z_0 = x + w`;
/// * when `s` is even, `b1`: `2y_i + z_i = x` for every `i ≥ 1`, and
///   `parity`: `z_i ≡ x (mod 2)`;
/// * when `s` is odd, `b2`: `z_i = z_{i*}` and `y_i + y_{i*} + z_i = x`,
///   where `i*` indexes the reciprocal factor;
/// * `accounting`: `Σ s_i (2y_i + z_i) = dim C`.
pub fn check_profile_constraints(profile: &ModuleProfile) -> ConstraintReport {
    let x = profile.two_p_cycles;
    let w = profile.two_cycles;
    let t = profile.dims.len() - 1;
    let mut items = Vec::new();

    let lhs = 2 * profile.y[0] + profile.z[0];
    items.push(ConstraintItem {
        label: "a",
        holds: lhs == x + w,
        detail: format!("2y_0 + z_0 = {lhs}, x + w = {}", x + w),
    });

    if profile.s.is_multiple_of(2) {
        for i in 1..=t {
            let lhs = 2 * profile.y[i] + profile.z[i];
            items.push(ConstraintItem {
                label: "b1",
                holds: lhs == x,
                detail: format!("2y_{i} + z_{i} = {lhs}, x = {x}"),
            });
            items.push(ConstraintItem {
                label: "parity",
                holds: profile.z[i] % 2 == x % 2,
                detail: format!("z_{i} = {} and x = {x} have equal parity", profile.z[i]),
            });
        }
    } else {
        for i in 1..=t {
            let j = profile.partner[i];
            if j < i {
                continue;
            }
            items.push(ConstraintItem {
                label: "b2",
                holds: profile.z[i] == profile.z[j],
                detail: format!(
                    "z_{i} = {} equals z_{j} = {} (reciprocal factors)",
                    profile.z[i], profile.z[j]
                ),
            });
            let lhs = profile.y[i] + profile.y[j] + profile.z[i];
            items.push(ConstraintItem {
                label: "b2",
                holds: lhs == x,
                detail: format!("y_{i} + y_{j} + z_{i} = {lhs}, x = {x}"),
            });
        }
    }

    let total: usize = (0..=t)
        .map(|i| {
            let s_i = if i == 0 { 1 } else { profile.s };
            s_i * (2 * profile.y[i] + profile.z[i])
        })
        .sum();
    items.push(ConstraintItem {
        label: "accounting",
        holds: total == profile.code_dim,
        detail: format!("Σ s_i(2y_i + z_i) = {total}, dim C = {}", profile.code_dim),
    });

    ConstraintReport { items }
}

/// The non-projectivity bound report: `applicable` states the structural
/// hypotheses (`n ≡ 0 mod 4`, even order of `2` mod `p`, odd `w`); for a
/// self-dual code with those hypotheses, `bound_holds` must be true and
/// `projection_self_dual` must be false.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NonprojectiveBoundReport {
    pub applicable: bool,
    pub fixed_dim: usize,
    pub bound: usize,
    pub bound_holds: bool,
    pub projection_self_dual: bool,
}

impl NonprojectiveBoundReport {
    /// Whether the conclusion holds whenever the hypotheses do.
    pub fn consistent(&self) -> bool {
        !self.applicable || (self.bound_holds && !self.projection_self_dual)
    }
}

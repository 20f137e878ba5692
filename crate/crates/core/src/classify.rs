//! Order-candidate enumeration for automorphism groups of a putative
//! self-dual code, parameterized by the admissible prime cycle types and a
//! Burnside counting argument.
//!
//! For the default parameters (length 72, doubly-even extremal setting)
//! the admissible prime types are 2-(36,0), 3-(24,0) and 5-(14,2), and the
//! candidate group orders are the m = 2^a·3^b·5^c for which the average
//! number of fixed points over the group can be a nonnegative integer:
//! the identity fixes n points, order-5 elements fix f_5 points each, and
//! every other element is fixed point free.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::perm::{is_prime, CycleType, Permutation};

/// Parameters of the order-candidate enumeration.
#[derive(Debug, Clone)]
pub struct ClassifyParams {
    /// Code length.
    pub n: u64,
    /// Admissible prime cycle types (each must satisfy p·c + f = n).
    pub admissible: Vec<CycleType>,
    /// Fixed points of an order-5 automorphism.
    pub f5: u64,
    /// Normalizer exponent choices: the number of order-5 elements is
    /// 4m/(2^δ·5) for some δ in this set.
    pub delta: Vec<u32>,
    /// Cap on the exponent of 5 in candidate orders.
    pub five_cap: u32,
    /// Cap on the exponent of 2.
    pub two_cap: u32,
    /// Cap on the exponent of 3.
    pub three_cap: u32,
}

impl Default for ClassifyParams {
    fn default() -> Self {
        ClassifyParams {
            n: 72,
            admissible: vec![
                CycleType::Prime {
                    p: 2,
                    cycles: 36,
                    fixed: 0,
                },
                CycleType::Prime {
                    p: 3,
                    cycles: 24,
                    fixed: 0,
                },
                CycleType::Prime {
                    p: 5,
                    cycles: 14,
                    fixed: 2,
                },
            ],
            f5: 2,
            delta: vec![0, 1],
            five_cap: 1,
            two_cap: 10,
            three_cap: 6,
        }
    }
}

impl ClassifyParams {
    /// Checks that every admissible type partitions exactly `n` points.
    pub fn validate(&self) -> Result<()> {
        for t in &self.admissible {
            let covered = match t {
                CycleType::Prime { p, cycles, fixed } => p * cycles + fixed,
                CycleType::Composite { .. } => {
                    return Err(Error::input(
                        "admissible types must be prime cycle types",
                    ));
                }
            };
            if covered as u64 != self.n {
                return Err(Error::input(format!(
                    "admissible type {t} covers {covered} points, not {}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

/// Verdict of the admissible-type filter, with the reason when rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    Admissible(CycleType),
    Inadmissible { reason: String },
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible(_))
    }
}

/// Whether a permutation's cycle type is one of the admissible prime
/// types. Identity and composite orders are inadmissible by fiat, with
/// the reason reported.
pub fn is_admissible_type(sigma: &Permutation, params: &ClassifyParams) -> Admissibility {
    let order = sigma.order();
    if order == 1 {
        return Admissibility::Inadmissible {
            reason: String::from("the identity is not an automorphism candidate"),
        };
    }
    if order > usize::MAX as u64 || !is_prime(order as usize) {
        return Admissibility::Inadmissible {
            reason: format!("composite order {order}"),
        };
    }
    let cycle_type = sigma
        .prime_cycle_type(order as usize)
        .expect("a permutation has its own order's cycle type");
    if params.admissible.contains(&cycle_type) {
        Admissibility::Admissible(cycle_type)
    } else {
        Admissibility::Inadmissible {
            reason: format!("type {cycle_type} is not admissible"),
        }
    }
}

/// Enumerates candidate group orders m = 2^a·3^b·5^c (a, b, c capped by
/// the params) for which the fixed-point count averaged over a group of
/// order m can be a nonnegative integer: the identity contributes n, each
/// of the N_5 = 4m/(2^δ·5) order-5 elements (present only when c ≥ 1)
/// contributes f_5, and all other elements contribute 0. Returned sorted
/// ascending.
pub fn burnside_order_list(params: &ClassifyParams) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for a in 0..=params.two_cap {
        for b in 0..=params.three_cap {
            for c in 0..=params.five_cap {
                let m = 2u64.pow(a) * 3u64.pow(b) * 5u64.pow(c);
                let accepted = if c == 0 {
                    params.n.is_multiple_of(m)
                } else {
                    params.delta.iter().any(|&delta| {
                        let denom = 2u64.pow(delta) * 5;
                        if (4 * m) % denom != 0 {
                            return false;
                        }
                        let n5 = 4 * m / denom;
                        n5 > 0 && (params.n + params.f5 * n5).is_multiple_of(m)
                    })
                };
                if accepted {
                    out.push(m);
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

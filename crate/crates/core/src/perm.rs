use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitvec::BitVector;
use crate::code::{self, BinaryCode};
use crate::error::{Error, Result};

/// A permutation of the coordinates `0 .. degree`.
///
/// Compositions read left to right: `a.compose(&b)` applies `a` first.
/// Codewords carry a right action, `v^σ`, where coordinate `i` of `v^σ` is
/// coordinate `σ⁻¹(i)` of `v`; this makes `(v^σ)^τ = v^(στ)`.
///
/// Text formats (parsing and display) are 1-indexed; the API is 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            image: (0..degree).collect(),
        }
    }

    /// Builds a permutation from its 0-indexed image table.
    pub fn from_images(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &j in &image {
            if j >= n {
                return Err(Error::input(format!("image {j} out of range for degree {n}")));
            }
            if seen[j] {
                return Err(Error::input(format!("image {j} repeated; not a bijection")));
            }
            seen[j] = true;
        }
        Ok(Permutation { image })
    }

    /// Parses cycle notation (`"(1,2,3)(4,5)"`, fixed points omitted, `"()"`
    /// for the identity) or a 1-indexed image list (`"2 3 1 5 4"`).
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let t = text.trim();
        if t.is_empty() || t == "()" {
            return Ok(Permutation::identity(degree));
        }
        if t.starts_with('(') {
            Self::parse_cycles(t, degree)
        } else {
            Self::parse_image_list(t, degree)
        }
    }

    fn parse_cycles(t: &str, degree: usize) -> Result<Self> {
        let mut image: Vec<usize> = (0..degree).collect();
        let mut seen = vec![false; degree];
        let mut rest = t;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if rest_trim.is_empty() {
                break;
            }
            if !rest_trim.starts_with('(') {
                return Err(Error::input(format!("expected '(' in cycle notation near {rest_trim:?}")));
            }
            let close = rest_trim
                .find(')')
                .ok_or_else(|| Error::input("unbalanced '(' in cycle notation"))?;
            let inner = &rest_trim[1..close];
            rest = &rest_trim[close + 1..];
            let mut cycle = Vec::new();
            for part in inner.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    if inner.trim().is_empty() {
                        continue; // "()" inside a product
                    }
                    return Err(Error::input("empty entry in cycle"));
                }
                let value: usize = part
                    .parse()
                    .map_err(|_| Error::input(format!("cannot parse {part:?} as a coordinate")))?;
                if value == 0 || value > degree {
                    return Err(Error::input(format!(
                        "coordinate {value} out of range 1..={degree}"
                    )));
                }
                if seen[value - 1] {
                    return Err(Error::input(format!("coordinate {value} appears twice")));
                }
                seen[value - 1] = true;
                cycle.push(value - 1);
            }
            for (k, &a) in cycle.iter().enumerate() {
                image[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::from_images(image)
    }

    fn parse_image_list(t: &str, degree: usize) -> Result<Self> {
        let entries: Vec<&str> = t.split_whitespace().collect();
        if entries.len() != degree {
            return Err(Error::input(format!(
                "image list has {} entries, expected {degree}",
                entries.len()
            )));
        }
        let mut image = Vec::with_capacity(degree);
        for part in entries {
            let value: usize = part
                .parse()
                .map_err(|_| Error::input(format!("cannot parse {part:?} as a coordinate")))?;
            if value == 0 || value > degree {
                return Err(Error::input(format!(
                    "coordinate {value} out of range 1..={degree}"
                )));
            }
            image.push(value - 1);
        }
        Permutation::from_images(image)
    }

    pub fn degree(&self) -> usize {
        self.image.len()
    }

    /// `σ(i)`, 0-indexed.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    /// The 0-indexed image table.
    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.degree()];
        for (i, &j) in self.image.iter().enumerate() {
            image[j] = i;
        }
        Permutation { image }
    }

    /// `στ`: applies `self` first, then `other`.
    ///
    /// # Panics
    ///
    /// Panics on degree mismatch.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "composing unequal degrees");
        Permutation {
            image: self.image.iter().map(|&j| other.image[j]).collect(),
        }
    }

    /// The conjugate `τ^σ = σ⁻¹τσ` (of `self = τ` by `σ`), which maps
    /// `σ(i) ↦ σ(τ(i))`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> Permutation {
        assert_eq!(self.degree(), sigma.degree(), "conjugating unequal degrees");
        let mut image = vec![0; self.degree()];
        for i in 0..self.degree() {
            image[sigma.image[i]] = sigma.image[self.image[i]];
        }
        Permutation { image }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut out = Permutation::identity(self.degree());
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Multiplicative order (least common multiple of cycle lengths).
    pub fn order(&self) -> u64 {
        self.orbits()
            .orbits()
            .iter()
            .map(|orbit| orbit.len() as u64)
            .fold(1, lcm)
    }

    /// The orbit partition of the coordinate set.
    pub fn orbits(&self) -> OrbitPartition {
        OrbitPartition::new(self)
    }

    /// `v^σ`: coordinate `σ(i)` of the result is coordinate `i` of `v`.
    ///
    /// # Panics
    ///
    /// Panics if `v.len() != degree`.
    pub fn act(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.degree(), "vector length / permutation degree mismatch");
        let mut out = BitVector::zeros(v.len());
        for i in 0..v.len() {
            if v.get(i) {
                out.set(self.image[i], true);
            }
        }
        out
    }

    /// The coordinate-permuted code `C^σ`.
    pub fn act_on_code(&self, code: &BinaryCode) -> Result<BinaryCode> {
        self.check_degree(code)?;
        let rows: Vec<BitVector> = code.basis().iter().map(|r| self.act(r)).collect();
        BinaryCode::from_rows(code.length(), &rows)
    }

    /// Does `σ` map the code onto itself?
    pub fn is_automorphism(&self, code: &BinaryCode) -> Result<bool> {
        self.check_degree(code)?;
        Ok(code.basis().iter().all(|r| code.contains(&self.act(r))))
    }

    /// Cycle type with respect to a single prime: `p-(c, f)` means `c`
    /// cycles of length `p` and `f` fixed points. The identity has type
    /// `p-(0, n)` for any requested prime.
    pub fn prime_cycle_type(&self, p: usize) -> Result<CycleType> {
        if !is_prime(p) {
            return Err(Error::input(format!("{p} is not prime")));
        }
        let mut cycles = 0;
        let mut fixed = 0;
        for orbit in self.orbits().orbits() {
            match orbit.len() {
                1 => fixed += 1,
                len if len == p => cycles += 1,
                len => {
                    return Err(Error::domain(format!(
                        "cycle of length {len} is incompatible with type {p}-(c, f)"
                    )))
                }
            }
        }
        Ok(CycleType::Prime { p, cycles, fixed })
    }

    /// Cycle type with respect to two distinct primes:
    /// `pq-(a, b, c; f)` means `a` cycles of length `p`, `b` of length `q`,
    /// `c` of length `pq`, and `f` fixed points.
    pub fn composite_cycle_type(&self, p: usize, q: usize) -> Result<CycleType> {
        if !is_prime(p) || !is_prime(q) || p == q {
            return Err(Error::input(format!("{p}, {q} must be distinct primes")));
        }
        let (mut a, mut b, mut c, mut fixed) = (0, 0, 0, 0);
        for orbit in self.orbits().orbits() {
            let len = orbit.len();
            if len == 1 {
                fixed += 1;
            } else if len == p {
                a += 1;
            } else if len == q {
                b += 1;
            } else if len == p * q {
                c += 1;
            } else {
                return Err(Error::domain(format!(
                    "cycle of length {len} is incompatible with type {}-(a, b, c; f)",
                    p * q
                )));
            }
        }
        Ok(CycleType::Composite {
            p,
            q,
            p_cycles: a,
            q_cycles: b,
            pq_cycles: c,
            fixed,
        })
    }

    fn check_degree(&self, code: &BinaryCode) -> Result<()> {
        if code.length() != self.degree() {
            return Err(Error::input(format!(
                "code length {} does not match permutation degree {}",
                code.length(),
                self.degree()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-indexed, fixed points omitted; identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for orbit in self.orbits().orbits() {
            if orbit.len() < 2 {
                continue;
            }
            wrote = true;
            f.write_str("(")?;
            for (k, &i) in orbit.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", i + 1)?;
            }
            f.write_str(")")?;
        }
        if !wrote {
            f.write_str("()")?;
        }
        Ok(())
    }
}

/// The orbits of a permutation, sorted by minimal element; each orbit is
/// traversed from its minimal element by successive applications of `σ`.
///
/// This fixed ordering is what makes orbit projections (`π_σ`) and the
/// cycle-wise polynomial map (`φ_p`) deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    degree: usize,
    orbits: Vec<Vec<usize>>,
    orbit_of: Vec<usize>,
}

impl OrbitPartition {
    pub fn new(sigma: &Permutation) -> Self {
        let n = sigma.degree();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        let mut orbit_of = vec![0; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut i = start;
            loop {
                seen[i] = true;
                orbit_of[i] = orbits.len();
                orbit.push(i);
                i = sigma.apply(i);
                if i == start {
                    break;
                }
            }
            orbits.push(orbit);
        }
        OrbitPartition {
            degree: n,
            orbits,
            orbit_of,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    /// Index of the orbit containing coordinate `i`.
    pub fn orbit_index(&self, i: usize) -> usize {
        self.orbit_of[i]
    }

    /// Projects a vector that is constant on every orbit to one coordinate
    /// per orbit.
    pub fn project(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.degree {
            return Err(Error::input(format!(
                "vector length {} does not match degree {}",
                v.len(),
                self.degree
            )));
        }
        let mut out = BitVector::zeros(self.orbits.len());
        for (k, orbit) in self.orbits.iter().enumerate() {
            let value = v.get(orbit[0]);
            if orbit.iter().any(|&i| v.get(i) != value) {
                return Err(Error::domain(
                    "vector is not constant on the orbits, cannot project",
                ));
            }
            out.set(k, value);
        }
        Ok(out)
    }

    /// Lifts a vector with one coordinate per orbit to the constant-on-orbit
    /// vector of full length (the section of `project`).
    pub fn lift(&self, w: &BitVector) -> Result<BitVector> {
        if w.len() != self.orbits.len() {
            return Err(Error::input(format!(
                "vector length {} does not match orbit count {}",
                w.len(),
                self.orbits.len()
            )));
        }
        let mut out = BitVector::zeros(self.degree);
        for (k, orbit) in self.orbits.iter().enumerate() {
            if w.get(k) {
                for &i in orbit {
                    out.set(i, true);
                }
            }
        }
        Ok(out)
    }
}

/// Cycle type of a permutation relative to one prime or two distinct primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleType {
    /// `p-(c, f)`: `c` cycles of length `p`, `f` fixed points.
    Prime { p: usize, cycles: usize, fixed: usize },
    /// `pq-(a, b, c; f)`: `a` cycles of length `p`, `b` of length `q`,
    /// `c` of length `pq`, `f` fixed points.
    Composite {
        p: usize,
        q: usize,
        p_cycles: usize,
        q_cycles: usize,
        pq_cycles: usize,
        fixed: usize,
    },
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CycleType::Prime { p, cycles, fixed } => write!(f, "{p}-({cycles},{fixed})"),
            CycleType::Composite {
                p,
                q,
                p_cycles,
                q_cycles,
                pq_cycles,
                fixed,
            } => write!(f, "{}-({p_cycles},{q_cycles},{pq_cycles};{fixed})", p * q),
        }
    }
}

/// The subcode `C(σ) = { c ∈ C : c^σ = c }` of codewords fixed by `σ`.
pub fn fixed_code(code: &BinaryCode, sigma: &Permutation) -> Result<BinaryCode> {
    if code.length() != sigma.degree() {
        return Err(Error::input(format!(
            "code length {} does not match permutation degree {}",
            code.length(),
            sigma.degree()
        )));
    }
    let moved: Vec<BitVector> = code
        .basis()
        .iter()
        .map(|r| {
            let mut m = sigma.act(r);
            m ^= r;
            m
        })
        .collect();
    let rows: Vec<BitVector> = code::left_kernel(&moved)
        .iter()
        .map(|coeffs| combine(code.basis(), coeffs, code.length()))
        .collect();
    BinaryCode::from_rows(code.length(), &rows)
}

/// `π_σ(C(σ))`: the fixed code of `σ`, with every orbit collapsed to one
/// coordinate. Coordinates follow the orbit order of [`OrbitPartition`].
pub fn projected_fixed_code(code: &BinaryCode, sigma: &Permutation) -> Result<BinaryCode> {
    let fixed = fixed_code(code, sigma)?;
    let orbits = sigma.orbits();
    let rows: Vec<BitVector> = fixed
        .basis()
        .iter()
        .map(|r| orbits.project(r))
        .collect::<Result<_>>()?;
    BinaryCode::from_rows(orbits.len(), &rows)
}

/// The permutation that `τ` induces on the orbits of `σ` (numbered in
/// [`OrbitPartition`] order). Requires `στ = τσ`, which makes `τ` permute
/// the orbits of `σ` wholesale.
pub fn eta_projection(tau: &Permutation, sigma: &Permutation) -> Result<Permutation> {
    if tau.degree() != sigma.degree() {
        return Err(Error::input("permutations have different degrees"));
    }
    if !tau.commutes_with(sigma) {
        return Err(Error::domain(
            "permutations do not commute; no induced orbit permutation",
        ));
    }
    let orbits = sigma.orbits();
    let image: Vec<usize> = orbits
        .orbits()
        .iter()
        .map(|orbit| orbits.orbit_index(tau.apply(orbit[0])))
        .collect();
    Permutation::from_images(image)
}

/// Generates the subgroup spanned by `gens` by closure under composition.
/// The result is sorted by image table, so it is deterministic. Fails with a
/// domain error if the subgroup would exceed `cap` elements.
pub fn generate_subgroup(gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let degree = match gens.first() {
        Some(g) => g.degree(),
        None => return Err(Error::input("no generators given")),
    };
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(Error::input("generators have different degrees"));
    }
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    seen.insert(Permutation::identity(degree).image);
    let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
    while let Some(element) = frontier.pop() {
        for g in gens {
            let next = element.compose(g);
            if seen.insert(next.image.clone()) {
                if seen.len() > cap {
                    return Err(Error::domain(format!(
                        "subgroup exceeds the cap of {cap} elements"
                    )));
                }
                frontier.push(next);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|image| Permutation { image })
        .collect())
}

pub(crate) fn combine(rows: &[BitVector], coeffs: &BitVector, length: usize) -> BitVector {
    let mut out = BitVector::zeros(length);
    for (i, row) in rows.iter().enumerate() {
        if coeffs.get(i) {
            out ^= row;
        }
    }
    out
}

pub(crate) fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

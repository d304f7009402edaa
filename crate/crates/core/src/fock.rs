//! Direct operator oracle: truncation-free simulation of creation,
//! annihilation and preservation on the weakly monotone and monotone
//! Fock spaces, with exact λ-polynomial or floating-point coefficients.
//!
//! States reachable from the vacuum in n steps never exceed length n, so
//! vacuum moments computed here are exact on the finite-dimensional
//! reachable subspace — no cutoff, no truncation error. This route knows
//! nothing about paths, partitions or recursions and serves as the
//! independent cross-check for all of them.

use crate::algebra::LambdaPoly;
use crate::Space;
use std::collections::BTreeMap;
use thiserror::Error;

/// Caps for the vacuum-moment entry points.
pub const EXACT_MOMENT_CAP: usize = 12;
pub const NUMERIC_MOMENT_CAP: usize = 16;
pub const OPERATOR_COUNT_CAP: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FockError {
    #[error("moment order {n} exceeds the cap {cap}")]
    MomentCap { n: usize, cap: usize },
    #[error("operator count {m} exceeds the cap {cap}")]
    OperatorCap { m: usize, cap: usize },
    #[error("indices {indices:?} are not admissible for {space:?}")]
    BadIndices { space: Space, indices: Vec<u32> },
}

fn indices_admissible(space: Space, indices: &[u32]) -> bool {
    indices.iter().all(|&i| i >= 1)
        && indices.windows(2).all(|w| match space {
            Space::WeaklyMonotone => w[0] >= w[1],
            Space::Monotone => w[0] > w[1],
        })
}

/// Basis tensor of a Fock space, stored topmost index first; the empty
/// tuple is the vacuum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisState {
    space: Space,
    indices: Vec<u32>,
}

impl BasisState {
    pub fn new(space: Space, indices: Vec<u32>) -> Result<Self, FockError> {
        if !indices_admissible(space, &indices) {
            return Err(FockError::BadIndices { space, indices });
        }
        Ok(BasisState { space, indices })
    }

    pub fn vacuum(space: Space) -> Self {
        BasisState { space, indices: Vec::new() }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn is_vacuum(&self) -> bool {
        self.indices.is_empty()
    }

    /// Creation by the i-th basis vector: prepends i when admissible.
    pub fn create(&self, i: u32) -> Option<BasisState> {
        let ok = match self.indices.first() {
            None => true,
            Some(&top) => match self.space {
                Space::WeaklyMonotone => i >= top,
                Space::Monotone => i > top,
            },
        };
        if !ok {
            return None;
        }
        let mut indices = Vec::with_capacity(self.indices.len() + 1);
        indices.push(i);
        indices.extend_from_slice(&self.indices);
        Some(BasisState { space: self.space, indices })
    }

    /// Annihilation: pops the top index when it equals i; kills the vacuum.
    pub fn annihilate(&self, i: u32) -> Option<BasisState> {
        match self.indices.first() {
            Some(&top) if top == i => Some(BasisState {
                space: self.space,
                indices: self.indices[1..].to_vec(),
            }),
            _ => None,
        }
    }

    /// Preservation A⁰ᵢ = A†ᵢAᵢ: identity when the top index is i, zero
    /// otherwise (and on the vacuum).
    pub fn preserve(&self, i: u32) -> Option<BasisState> {
        match self.indices.first() {
            Some(&top) if top == i => Some(self.clone()),
            _ => None,
        }
    }
}

/// Scalars a Fock vector can carry: exact λ-polynomials or floats.
pub trait Coefficient: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
}

impl Coefficient for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Coefficient for LambdaPoly {
    fn zero() -> Self {
        LambdaPoly::zero()
    }
    fn one() -> Self {
        LambdaPoly::one()
    }
    fn is_zero(&self) -> bool {
        LambdaPoly::is_zero(self)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self = &*self + other;
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

/// Finite linear combination of basis tensors of one space. Keys are the
/// raw index tuples; zero coefficients are never stored; the map is
/// ordered so iteration is deterministic.
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector<C: Coefficient> {
    space: Space,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Coefficient> FockVector<C> {
    pub fn vacuum(space: Space) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), C::one());
        FockVector { space, terms }
    }

    pub fn zero(space: Space) -> Self {
        FockVector { space, terms: BTreeMap::new() }
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn add_term(&mut self, indices: Vec<u32>, coeff: &C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&indices) {
            Some(slot) => {
                slot.add_assign_ref(coeff);
                if slot.is_zero() {
                    self.terms.remove(&indices);
                }
            }
            None => {
                self.terms.insert(indices, coeff.clone());
            }
        }
    }

    /// Coefficient of the vacuum, i.e. the inner product with Ω.
    pub fn vacuum_coefficient(&self) -> C {
        self.terms.get(&Vec::new()).cloned().unwrap_or_else(C::zero)
    }
}

/// Which operator sum to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumVariant {
    /// Σ_k (A_k + A†_k + λ·A⁰_k): the nonsymmetric position operators.
    Preservation,
    /// Σ_k (A_k + A†_k) + λ·I: position operators shifted by the identity.
    IdentityShift,
}

/// One application of the operator sum over test indices 1..=m with the
/// given intensity coefficient.
pub fn apply_sum<C: Coefficient>(
    v: &FockVector<C>,
    m: u32,
    intensity: &C,
    variant: SumVariant,
) -> FockVector<C> {
    let space = v.space();
    let mut out = FockVector::zero(space);
    for (indices, coeff) in v.terms() {
        let state = BasisState { space, indices: indices.to_vec() };
        for k in 1..=m {
            if let Some(s) = state.create(k) {
                out.add_term(s.indices, coeff);
            }
        }
        // annihilation and preservation act only through the top index
        if let Some(&top) = state.indices.first() {
            if top <= m {
                if let Some(s) = state.annihilate(top) {
                    out.add_term(s.indices, coeff);
                }
                if variant == SumVariant::Preservation {
                    out.add_term(state.indices.clone(), &coeff.mul_ref(intensity));
                }
            }
        }
        if variant == SumVariant::IdentityShift {
            out.add_term(state.indices.clone(), &coeff.mul_ref(intensity));
        }
    }
    out
}

fn vacuum_moments_with<C: Coefficient>(
    space: Space,
    m: u32,
    intensity: &C,
    n_max: usize,
    variant: SumVariant,
) -> Vec<C> {
    let mut v = FockVector::vacuum(space);
    let mut moments = Vec::with_capacity(n_max + 1);
    moments.push(v.vacuum_coefficient());
    for _ in 1..=n_max {
        v = apply_sum(&v, m, intensity, variant);
        moments.push(v.vacuum_coefficient());
    }
    moments
}

fn check_caps(m: usize, n: usize, cap: usize) -> Result<(), FockError> {
    if n > cap {
        return Err(FockError::MomentCap { n, cap });
    }
    if m > OPERATOR_COUNT_CAP {
        return Err(FockError::OperatorCap { m, cap: OPERATOR_COUNT_CAP });
    }
    Ok(())
}

/// Vacuum moments 0..=n of Σ_k (A_k + A†_k + λ·A⁰_k) with symbolic
/// intensity; the entries are polynomials in λ.
pub fn vacuum_moments_exact(space: Space, m: u32, n_max: usize) -> Result<Vec<LambdaPoly>, FockError> {
    check_caps(m as usize, n_max, EXACT_MOMENT_CAP)?;
    Ok(vacuum_moments_with(space, m, &LambdaPoly::lambda(), n_max, SumVariant::Preservation))
}

/// Vacuum moments 0..=n with numeric intensity.
pub fn vacuum_moments_numeric(
    space: Space,
    m: u32,
    lambda: f64,
    n_max: usize,
) -> Result<Vec<f64>, FockError> {
    check_caps(m as usize, n_max, NUMERIC_MOMENT_CAP)?;
    Ok(vacuum_moments_with(space, m, &lambda, n_max, SumVariant::Preservation))
}

/// Vacuum moments 0..=n of Σ_k (A_k + A†_k) + λ·I, symbolic intensity.
pub fn vacuum_moments_identity_shift_exact(
    space: Space,
    m: u32,
    n_max: usize,
) -> Result<Vec<LambdaPoly>, FockError> {
    check_caps(m as usize, n_max, EXACT_MOMENT_CAP)?;
    Ok(vacuum_moments_with(space, m, &LambdaPoly::lambda(), n_max, SumVariant::IdentityShift))
}

/// Primitive operator, used to state relation checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimOp {
    Create(u32),
    Annihilate(u32),
    Preserve(u32),
}

impl PrimOp {
    fn apply(self, s: &BasisState) -> Option<BasisState> {
        match self {
            PrimOp::Create(i) => s.create(i),
            PrimOp::Annihilate(i) => s.annihilate(i),
            PrimOp::Preserve(i) => s.preserve(i),
        }
    }
}

/// Applies a composition right-to-left (the rightmost operator acts
/// first), the usual operator-product order.
pub fn apply_word(ops: &[PrimOp], s: &BasisState) -> Option<BasisState> {
    let mut cur = s.clone();
    for op in ops.iter().rev() {
        cur = op.apply(&cur)?;
    }
    Some(cur)
}

/// One violated identity, with the witnessing basis state.
#[derive(Debug, Clone)]
pub struct RelationViolation {
    pub identity: String,
    pub state: Vec<u32>,
    pub lhs: Option<Vec<u32>>,
    pub rhs: Option<Vec<u32>>,
}

/// Outcome of a relation sweep.
#[derive(Debug, Clone)]
pub struct RelationReport {
    pub space: Space,
    pub identities_checked: usize,
    pub states_checked: usize,
    pub violations: Vec<RelationViolation>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }
}

fn enumerate_states(space: Space, idx_max: u32, max_len: usize) -> Vec<BasisState> {
    let mut out = vec![BasisState::vacuum(space)];
    let mut frontier = vec![BasisState::vacuum(space)];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for i in 1..=idx_max {
                if let Some(t) = s.create(i) {
                    next.push(t);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Verifies the algebraic relations among creation, annihilation and
/// preservation as exact identities on every basis state with indices in
/// 1..=m and length ≤ depth-1. Any violation is reported with a witness.
pub fn check_relations(space: Space, m: u32, depth: usize) -> RelationReport {
    use PrimOp::{Annihilate as An, Create as Cr, Preserve as Pr};
    let states = enumerate_states(space, m, depth.saturating_sub(1));
    // (name, lhs word, gate, rhs word); gate=false means the rhs is zero
    let mut identities: Vec<(String, Vec<PrimOp>, bool, Vec<PrimOp>)> = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            let creators_vanish = match space {
                Space::WeaklyMonotone => i < j,
                Space::Monotone => i <= j,
            };
            if creators_vanish {
                identities.push((format!("create({i})·create({j}) = 0"), vec![Cr(i), Cr(j)], false, vec![]));
                identities.push((format!("annihilate({j})·annihilate({i}) = 0"), vec![An(j), An(i)], false, vec![]));
            }
            if i != j {
                identities.push((format!("annihilate({i})·create({j}) = 0"), vec![An(i), Cr(j)], false, vec![]));
                identities.push((format!("preserve({i})·create({j}) = 0"), vec![Pr(i), Cr(j)], false, vec![]));
                identities.push((format!("annihilate({j})·preserve({i}) = 0"), vec![An(j), Pr(i)], false, vec![]));
                identities.push((format!("preserve({i})·preserve({j}) = 0"), vec![Pr(i), Pr(j)], false, vec![]));
            }
            let preserve_vanish = match space {
                Space::WeaklyMonotone => i > j,
                Space::Monotone => i >= j,
            };
            if preserve_vanish {
                identities.push((format!("preserve({i})·annihilate({j}) = 0"), vec![Pr(i), An(j)], false, vec![]));
                identities.push((format!("create({j})·preserve({i}) = 0"), vec![Cr(j), Pr(i)], false, vec![]));
            }
        }
    }
    for j in 1..=m {
        for k in 1..=m {
            let gate = match space {
                Space::WeaklyMonotone => j >= k,
                Space::Monotone => j > k,
            };
            identities.push((
                format!("annihilate({k})·annihilate({j})·create({j}) = [gate]·annihilate({k})"),
                vec![An(k), An(j), Cr(j)],
                gate,
                vec![An(k)],
            ));
            identities.push((
                format!("annihilate({j})·create({j})·create({k}) = [gate]·create({k})"),
                vec![An(j), Cr(j), Cr(k)],
                gate,
                vec![Cr(k)],
            ));
            if j >= k {
                identities.push((
                    format!("annihilate({j})·create({j})·annihilate({k}) = annihilate({k})"),
                    vec![An(j), Cr(j), An(k)],
                    true,
                    vec![An(k)],
                ));
                identities.push((
                    format!("create({k})·annihilate({j})·create({j}) = create({k})"),
                    vec![Cr(k), An(j), Cr(j)],
                    true,
                    vec![Cr(k)],
                ));
            }
        }
    }
    let mut report = RelationReport {
        space,
        identities_checked: identities.len(),
        states_checked: states.len(),
        violations: Vec::new(),
    };
    for (name, lhs, gate, rhs) in &identities {
        for s in &states {
            let left = apply_word(lhs, s);
            let right = if *gate { apply_word(rhs, s) } else { None };
            if left.as_ref().map(|b| b.indices()) != right.as_ref().map(|b| b.indices()) {
                report.violations.push(RelationViolation {
                    identity: name.clone(),
                    state: s.indices().to_vec(),
                    lhs: left.map(|b| b.indices.clone()),
                    rhs: right.map(|b| b.indices.clone()),
                });
            }
        }
    }
    report
}

//! Three-valued existence decision for minimal complements of eventually
//! periodic sets.
//!
//! Every search runs in the finite quotient by the period lattice: the
//! certificate conditions are congruences, so a residue-level certificate
//! lifts to the ambient lattice, and a failed exhaustive residue search
//! rules one out at every lift.

use crate::epsets::{residue_profile, EPSet, EpsetError, ResidueProfile};
use crate::finitegrp::{
    pair_minimal_complement_with, FiniteAbelianGroup, GroupError, GroupSubset,
    PairCertificate, DEFAULT_SEARCH_CAP, MAX_SEARCH_UNIVERSE,
};
use crate::search::{first_matching_subset, Execution};
use crate::zlattice::{quotient_structure, LatticeError, PeriodBasis, Point, QuotientStructure};
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("sufficient condition needs a sporadic point outside the base residues")]
    EmptyW1,
    #[error(transparent)]
    Epset(#[from] EpsetError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Search knobs shared by the decision procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecideOptions {
    /// Largest quotient order the subset searches accept.
    pub cap: usize,
    pub execution: Execution,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions { cap: DEFAULT_SEARCH_CAP, execution: Execution::default() }
    }
}

/// Why no minimal complement exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NonExistenceReason {
    /// No sporadic part at all: the set is periodic.
    Periodic,
    /// Sporadic points exist but all sit over base residues.
    EmptyW1,
    /// Exactly one sporadic point lies outside the base residues and the
    /// exhaustive certificate search came up empty; for that shape the
    /// certificate is equivalent to existence.
    SingleSporadicExhausted,
    /// The necessary condition has no certificate.
    NecessaryFails,
}

/// Outcome of [`decide`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decision {
    /// Residue-level pair certificate; it lifts to a minimal complement.
    Exists { certificate: PairCertificate },
    NotExists { reason: NonExistenceReason },
    /// Existence is open: the necessary condition holds, the sufficient
    /// search failed, and more than one sporadic point is in play.
    Unknown { necessary_certificate: Option<GroupSubset> },
}

/// The quotient as an explicit finite abelian group. Residue tuples are
/// the group elements, so subsets convert both ways losslessly.
pub fn quotient_group(quotient: &QuotientStructure) -> Result<FiniteAbelianGroup, GroupError> {
    let factors = quotient.invariant_factors().to_vec();
    if factors.is_empty() {
        Ok(FiniteAbelianGroup::trivial())
    } else {
        FiniteAbelianGroup::new(factors)
    }
}

/// Residue indices as a subset of the quotient group.
pub fn residue_subset(
    group: &FiniteAbelianGroup,
    quotient: &QuotientStructure,
    residues: impl IntoIterator<Item = usize>,
) -> Result<GroupSubset, GroupError> {
    GroupSubset::new(group, residues.into_iter().map(|r| quotient.residue_tuple(r)))
}

/// Subset elements as residue indices.
pub fn subset_residues(
    quotient: &QuotientStructure,
    subset: &GroupSubset,
) -> Result<BTreeSet<usize>, LatticeError> {
    subset.iter().map(|e| quotient.index_of_residue_tuple(e)).collect()
}

fn profile_subsets(
    profile: &ResidueProfile,
) -> Result<(FiniteAbelianGroup, GroupSubset, GroupSubset), DecideError> {
    let quotient = profile.quotient();
    let group = quotient_group(quotient)?;
    let q = residue_subset(&group, quotient, profile.q_residues().iter().copied())?;
    let q1 = residue_subset(&group, quotient, profile.w1_residues()?)?;
    Ok((group, q, q1))
}

fn shift_table(group: &FiniteAbelianGroup, shifts: &GroupSubset) -> Vec<u64> {
    (0..group.order())
        .map(|i| {
            let e = group.element(i);
            let mut mask = 0u64;
            for s in shifts.iter() {
                mask |= 1u64 << group.index_of(&group.add(&e, s));
            }
            mask
        })
        .collect()
}

pub fn necessary_condition(profile: &ResidueProfile) -> Result<Option<GroupSubset>, DecideError> {
    necessary_condition_with(profile, Execution::default(), DEFAULT_SEARCH_CAP)
}

/// First nonempty residue set (cardinality-then-lex) that covers the
/// quotient together with `Q ∪ π(W1)` and keeps every element exposed
/// over `Q` alone: some `q ∈ π(W1)` lands `n + q` outside `N + Q`.
///
/// `None`, or an empty `π(W1)`, refutes existence outright.
pub fn necessary_condition_with(
    profile: &ResidueProfile,
    execution: Execution,
    cap: usize,
) -> Result<Option<GroupSubset>, DecideError> {
    let (group, q, q1) = profile_subsets(profile)?;
    if q1.is_empty() {
        // The exposure clause quantifies over an empty set.
        return Ok(None);
    }
    let order = group.order();
    let cap = cap.min(MAX_SEARCH_UNIVERSE);
    if order > cap {
        return Err(GroupError::SearchTooLarge { order, cap }.into());
    }
    let full = if order == 64 { u64::MAX } else { (1u64 << order) - 1 };
    let both = GroupSubset::new(&group, q.iter().chain(q1.iter()))?;
    let shift_both = shift_table(&group, &both);
    let shift_q = shift_table(&group, &q);
    let shift_q1 = shift_table(&group, &q1);
    let found = first_matching_subset(order, execution, |mask| {
        let mut cover = 0u64;
        let mut nq = 0u64;
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            cover |= shift_both[i];
            nq |= shift_q[i];
            m &= m - 1;
        }
        if cover != full {
            return false;
        }
        let mut m = mask;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            if shift_q1[i] & !nq == 0 {
                return false;
            }
            m &= m - 1;
        }
        true
    });
    match found {
        None => Ok(None),
        Some(mask) => {
            let elems = (0..order).filter(|i| mask >> i & 1 == 1).map(|i| group.element(i));
            Ok(Some(GroupSubset::new(&group, elems)?))
        }
    }
}

pub fn sufficient_condition(
    profile: &ResidueProfile,
) -> Result<Option<PairCertificate>, DecideError> {
    sufficient_condition_with(profile, Execution::default(), DEFAULT_SEARCH_CAP)
}

/// Pair-certificate search for `(π(W1), Q)` in the quotient group. A hit
/// proves a minimal complement of the ambient set exists.
pub fn sufficient_condition_with(
    profile: &ResidueProfile,
    execution: Execution,
    cap: usize,
) -> Result<Option<PairCertificate>, DecideError> {
    let (_, q, q1) = profile_subsets(profile)?;
    if q1.is_empty() {
        return Err(DecideError::EmptyW1);
    }
    Ok(pair_minimal_complement_with(&q1, &q, execution, cap)?)
}

pub fn decide(w: &EPSet) -> Result<Decision, DecideError> {
    decide_with(w, &DecideOptions::default())
}

/// Decision ladder over the canonical form:
///
/// (a) no sporadic point off the base residues: no minimal complement;
/// (b) the sufficient search succeeds: one exists, with certificate;
/// (c) a single off-residue sporadic point and (b) failed: none exists,
///     the search is exhaustive for that shape;
/// (d) the necessary condition also fails: none exists;
/// (e) otherwise open, reported with the necessary certificate.
pub fn decide_with(w: &EPSet, options: &DecideOptions) -> Result<Decision, DecideError> {
    let canonical;
    let w = if w.is_canonical() {
        w
    } else {
        canonical = w.canonicalize()?;
        &canonical
    };
    let profile = residue_profile(w)?;
    if profile.w1().is_empty() {
        let reason = if profile.is_periodic() {
            NonExistenceReason::Periodic
        } else {
            NonExistenceReason::EmptyW1
        };
        return Ok(Decision::NotExists { reason });
    }
    if let Some(certificate) = sufficient_condition_with(&profile, options.execution, options.cap)? {
        return Ok(Decision::Exists { certificate });
    }
    if profile.w1().len() == 1 {
        return Ok(Decision::NotExists { reason: NonExistenceReason::SingleSporadicExhausted });
    }
    match necessary_condition_with(&profile, options.execution, options.cap)? {
        None => Ok(Decision::NotExists { reason: NonExistenceReason::NecessaryFails }),
        Some(n) => Ok(Decision::Unknown { necessary_certificate: Some(n) }),
    }
}

/// Fibre criterion certificate: the residue map restricted to the set is
/// onto and the named coset meets the set in exactly one point, so the
/// period lattice itself is a minimal complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCertificate {
    pub singleton_residue: usize,
    pub singleton_point: Point,
}

pub fn lattice_fast_path(w: &EPSet) -> Result<Option<LatticeCertificate>, DecideError> {
    if !w.is_canonical() {
        return Err(EpsetError::NotCanonical.into());
    }
    let quotient = quotient_structure(w.basis())?;
    let mut base_res = BTreeSet::new();
    for b in w.base() {
        base_res.insert(quotient.project(b)?);
    }
    let mut sporadic_by_res: BTreeMap<usize, Vec<&Point>> = BTreeMap::new();
    for s in w.sporadic() {
        sporadic_by_res.entry(quotient.project(s)?).or_default().push(s);
    }
    let extra = sporadic_by_res.keys().filter(|r| !base_res.contains(r)).count();
    if base_res.len() + extra != quotient.order() {
        return Ok(None);
    }
    for (r, pts) in &sporadic_by_res {
        if !base_res.contains(r) && pts.len() == 1 {
            return Ok(Some(LatticeCertificate {
                singleton_residue: *r,
                singleton_point: pts[0].clone(),
            }));
        }
    }
    Ok(None)
}

/// One representative per coset of the sublattice spanned by the basis.
/// Such a transversal is a minimal complement of the sublattice: it covers
/// by definition and dropping a representative loses its whole coset.
pub fn sublattice_minimal_complement(basis: &PeriodBasis) -> Result<Vec<Point>, DecideError> {
    Ok(quotient_structure(basis)?.reps().to_vec())
}

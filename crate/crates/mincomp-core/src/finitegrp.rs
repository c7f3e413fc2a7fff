//! Minimal additive complements inside finite abelian groups.
//!
//! Groups are products of cyclic factors; elements are coordinate tuples,
//! compared and enumerated lexicographically. `C` complements `W` when
//! `W + C = G`, and is minimal when removing any element breaks that. The
//! pair search realizes the residue-level certificate: disjoint nonempty
//! `Q1`, `Q` admit a finite minimal-complement certificate `N` when
//! `N + (Q u Q1) = G` and every `n` has a `q` in `Q1` with `n + q` outside
//! `(N \ {n}) + (Q u Q1)`.

use crate::search::{first_matching_subset, Execution};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use thiserror::Error;

/// Element of a [`FiniteAbelianGroup`]: one coordinate per cyclic factor,
/// each reduced into `[0, a_i)`.
pub type Element = Vec<i64>;

/// Default ceiling on the group order for exhaustive pair searches.
pub const DEFAULT_SEARCH_CAP: usize = 24;

/// Hard ceiling imposed by the subset bit masks.
pub const MAX_SEARCH_UNIVERSE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("cyclic factor {0} is smaller than 2")]
    InvalidFactor(i64),
    #[error("group order does not fit the supported range")]
    OrderOverflow,
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("element has {got} coordinates, group has {expected} factors")]
    InvalidElement { expected: usize, got: usize },
    #[error("operand set is empty")]
    EmptySet,
    #[error("the two parts are not disjoint")]
    NotDisjoint,
    #[error("the set is not a complement")]
    NotAComplement,
    #[error("the set is not symmetric")]
    NotSymmetric,
    #[error("the set does not contain the identity")]
    MissingIdentity,
    #[error("the set does not generate the group")]
    NotGenerating,
    #[error("group order {order} exceeds the search cap {cap}")]
    SearchTooLarge { order: usize, cap: usize },
    #[error("part {0} is not a minimal complement pair")]
    NotMinimalInput(usize),
}

/// Finite abelian group presented as a product of cyclic factors of the
/// given orders. The empty product is the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FiniteAbelianGroup {
    factors: Vec<i64>,
}

impl FiniteAbelianGroup {
    pub fn new(factors: Vec<i64>) -> Result<Self, GroupError> {
        for &f in &factors {
            if f < 2 {
                return Err(GroupError::InvalidFactor(f));
            }
        }
        let mut order = 1usize;
        for &f in &factors {
            order = order
                .checked_mul(f as usize)
                .filter(|&o| o <= 1 << 24)
                .ok_or(GroupError::OrderOverflow)?;
        }
        Ok(FiniteAbelianGroup { factors })
    }

    pub fn trivial() -> Self {
        FiniteAbelianGroup { factors: Vec::new() }
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().map(|&f| f as usize).product()
    }

    pub fn zero(&self) -> Element {
        vec![0; self.factors.len()]
    }

    /// Reduces arbitrary integer coordinates into the group.
    pub fn normalize(&self, raw: &[i64]) -> Result<Element, GroupError> {
        if raw.len() != self.factors.len() {
            return Err(GroupError::InvalidElement {
                expected: self.factors.len(),
                got: raw.len(),
            });
        }
        Ok(raw.iter().zip(&self.factors).map(|(&x, &f)| x.rem_euclid(f)).collect())
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Element {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &f)| (x + y).rem_euclid(f))
            .collect()
    }

    pub fn neg(&self, a: &[i64]) -> Element {
        a.iter().zip(&self.factors).map(|(&x, &f)| (-x).rem_euclid(f)).collect()
    }

    /// Element with the given enumeration index; inverse of [`index_of`].
    ///
    /// [`index_of`]: Self::index_of
    pub fn element(&self, idx: usize) -> Element {
        let mut rem = idx;
        let mut out = vec![0i64; self.factors.len()];
        for k in (0..self.factors.len()).rev() {
            let f = self.factors[k] as usize;
            out[k] = (rem % f) as i64;
            rem /= f;
        }
        out
    }

    /// Index in lexicographic element order.
    pub fn index_of(&self, e: &[i64]) -> usize {
        let mut idx = 0usize;
        for (&x, &f) in e.iter().zip(&self.factors) {
            idx = idx * f as usize + x as usize;
        }
        idx
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(move |i| self.element(i))
    }

    pub fn full_subset(&self) -> GroupSubset {
        GroupSubset { group: self.clone(), elems: self.elements().collect() }
    }
}

/// Validated subset of a finite abelian group. Iteration order is the
/// lexicographic element order, which makes every greedy pass and every
/// search below deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSubset {
    group: FiniteAbelianGroup,
    elems: BTreeSet<Element>,
}

impl GroupSubset {
    /// Builds a subset, reducing raw coordinates into the group.
    pub fn new<I, T>(group: &FiniteAbelianGroup, elems: I) -> Result<Self, GroupError>
    where
        I: IntoIterator<Item = T>,
        T: AsRef<[i64]>,
    {
        let elems = elems
            .into_iter()
            .map(|e| group.normalize(e.as_ref()))
            .collect::<Result<BTreeSet<_>, _>>()?;
        Ok(GroupSubset { group: group.clone(), elems })
    }

    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, e: &[i64]) -> bool {
        self.elems.contains(e)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Element> {
        self.elems.iter()
    }

    pub fn elements(&self) -> &BTreeSet<Element> {
        &self.elems
    }

    fn union(&self, other: &GroupSubset) -> GroupSubset {
        let mut elems = self.elems.clone();
        elems.extend(other.elems.iter().cloned());
        GroupSubset { group: self.group.clone(), elems }
    }
}

impl fmt::Display for GroupSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "(")?;
            for (j, c) in e.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{c}")?;
            }
            write!(f, ")")?;
        }
        write!(f, "}}")
    }
}

fn check_same_group(a: &GroupSubset, b: &GroupSubset) -> Result<(), GroupError> {
    if a.group != b.group {
        return Err(GroupError::GroupMismatch);
    }
    Ok(())
}

/// `{ x + y : x in a, y in b }`.
pub fn sumset(a: &GroupSubset, b: &GroupSubset) -> Result<GroupSubset, GroupError> {
    check_same_group(a, b)?;
    let mut elems = BTreeSet::new();
    for x in &a.elems {
        for y in &b.elems {
            elems.insert(a.group.add(x, y));
        }
    }
    Ok(GroupSubset { group: a.group.clone(), elems })
}

fn covers(group: &FiniteAbelianGroup, w: &BTreeSet<Element>, c: &BTreeSet<Element>) -> bool {
    let mut seen = vec![false; group.order()];
    let mut count = 0usize;
    for x in w {
        for y in c {
            let idx = group.index_of(&group.add(x, y));
            if !seen[idx] {
                seen[idx] = true;
                count += 1;
            }
        }
    }
    count == group.order()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinimalityOutcome {
    NotComplement,
    /// Carries the first removable element in enumeration order.
    ComplementNotMinimal(Element),
    Minimal,
}

/// Classifies `c` against `w`: not a complement, a complement with slack, or
/// a minimal complement.
pub fn is_minimal_complement(
    w: &GroupSubset,
    c: &GroupSubset,
) -> Result<MinimalityOutcome, GroupError> {
    check_same_group(w, c)?;
    if w.is_empty() || c.is_empty() {
        return Err(GroupError::EmptySet);
    }
    if !covers(&w.group, &w.elems, &c.elems) {
        return Ok(MinimalityOutcome::NotComplement);
    }
    for e in &c.elems {
        let mut rest = c.elems.clone();
        rest.remove(e);
        if covers(&w.group, &w.elems, &rest) {
            return Ok(MinimalityOutcome::ComplementNotMinimal(e.clone()));
        }
    }
    Ok(MinimalityOutcome::Minimal)
}

/// Greedy extraction of a minimal complement from a complement `c`: elements
/// are visited in lexicographic order and dropped whenever the remainder
/// still complements `w`.
pub fn extract_minimal(w: &GroupSubset, c: &GroupSubset) -> Result<GroupSubset, GroupError> {
    check_same_group(w, c)?;
    if w.is_empty() || c.is_empty() {
        return Err(GroupError::EmptySet);
    }
    if !covers(&w.group, &w.elems, &c.elems) {
        return Err(GroupError::NotAComplement);
    }
    let mut current = c.elems.clone();
    for e in &c.elems {
        let mut trial = current.clone();
        trial.remove(e);
        if covers(&w.group, &w.elems, &trial) {
            current = trial;
        }
    }
    Ok(GroupSubset { group: w.group.clone(), elems: current })
}

/// Minimal `r`-net for a symmetric generating set: a minimal complement of
/// the `r`-fold sumset `A^r`. For `r = 0` the sumset is `{0}` and the whole
/// group is returned.
pub fn minimal_r_net(a: &GroupSubset, r: u32) -> Result<GroupSubset, GroupError> {
    if a.is_empty() {
        return Err(GroupError::EmptySet);
    }
    let group = &a.group;
    if !a.contains(&group.zero()) {
        return Err(GroupError::MissingIdentity);
    }
    for e in &a.elems {
        if !a.elems.contains(&group.neg(e)) {
            return Err(GroupError::NotSymmetric);
        }
    }
    // Closure under addition; symmetric with identity, so this is the
    // generated subgroup.
    let mut closure: BTreeSet<Element> = a.elems.clone();
    let mut queue: VecDeque<Element> = a.elems.iter().cloned().collect();
    while let Some(x) = queue.pop_front() {
        for g in &a.elems {
            let s = group.add(&x, g);
            if closure.insert(s.clone()) {
                queue.push_back(s);
            }
        }
    }
    if closure.len() != group.order() {
        return Err(GroupError::NotGenerating);
    }
    let mut power = GroupSubset { group: group.clone(), elems: [group.zero()].into() };
    for _ in 0..r {
        power = sumset(&power, a)?;
    }
    extract_minimal(&power, &group.full_subset())
}

/// Certificate that the ordered pair `(Q1, Q)` admits a finite minimal
/// complement: the set `N` plus, for each `n`, the `q` in `Q1` that `n`
/// covers uniquely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCertificate {
    n: GroupSubset,
    witness: BTreeMap<Element, Element>,
}

impl PairCertificate {
    pub fn n(&self) -> &GroupSubset {
        &self.n
    }

    pub fn witness(&self) -> &BTreeMap<Element, Element> {
        &self.witness
    }
}

/// Both certificate conditions for a candidate `n_set`, checked literally.
pub fn pair_conditions_hold(
    q1: &GroupSubset,
    q: &GroupSubset,
    n_set: &GroupSubset,
) -> Result<bool, GroupError> {
    check_same_group(q1, q)?;
    check_same_group(q1, n_set)?;
    if n_set.is_empty() {
        return Ok(false);
    }
    let qq = q1.union(q);
    if !covers(&q1.group, &n_set.elems, &qq.elems) {
        return Ok(false);
    }
    for n in &n_set.elems {
        let mut rest = n_set.elems.clone();
        rest.remove(n);
        let blocked: BTreeSet<Element> = rest
            .iter()
            .flat_map(|m| qq.elems.iter().map(|x| q1.group.add(m, x)))
            .collect();
        if !q1.elems.iter().any(|qe| !blocked.contains(&q1.group.add(n, qe))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Builds the witness map for a set already known to satisfy the pair
/// conditions.
pub fn certificate_for(
    q1: &GroupSubset,
    q: &GroupSubset,
    n_set: &GroupSubset,
) -> Result<Option<PairCertificate>, GroupError> {
    if !pair_conditions_hold(q1, q, n_set)? {
        return Ok(None);
    }
    let qq = q1.union(q);
    let mut witness = BTreeMap::new();
    for n in &n_set.elems {
        let mut rest = n_set.elems.clone();
        rest.remove(n);
        let blocked: BTreeSet<Element> = rest
            .iter()
            .flat_map(|m| qq.elems.iter().map(|x| q1.group.add(m, x)))
            .collect();
        let q_w = q1
            .elems
            .iter()
            .find(|qe| !blocked.contains(&q1.group.add(n, qe)))
            .expect("conditions checked")
            .clone();
        witness.insert(n.clone(), q_w);
    }
    Ok(Some(PairCertificate { n: n_set.clone(), witness }))
}

/// Re-validation of a stored certificate against its pair.
pub fn check_pair_certificate(
    q1: &GroupSubset,
    q: &GroupSubset,
    cert: &PairCertificate,
) -> Result<bool, GroupError> {
    if !pair_conditions_hold(q1, q, &cert.n)? {
        return Ok(false);
    }
    let qq = q1.union(q);
    for (n, qe) in &cert.witness {
        if !cert.n.contains(n) || !q1.contains(qe) {
            return Ok(false);
        }
        let target = q1.group.add(n, qe);
        let mut rest = cert.n.elems.clone();
        rest.remove(n);
        let reachable = rest
            .iter()
            .any(|m| qq.elems.iter().any(|x| q1.group.add(m, x) == target));
        if reachable {
            return Ok(false);
        }
    }
    Ok(cert.witness.len() == cert.n.len())
}

/// First certificate set in cardinality-then-lexicographic subset order, or
/// `None` after exhausting every subset. `None` is therefore a proof that no
/// certificate exists for the pair.
pub fn pair_minimal_complement(
    q1: &GroupSubset,
    q: &GroupSubset,
) -> Result<Option<PairCertificate>, GroupError> {
    pair_minimal_complement_with(q1, q, Execution::default(), DEFAULT_SEARCH_CAP)
}

pub fn pair_minimal_complement_with(
    q1: &GroupSubset,
    q: &GroupSubset,
    exec: Execution,
    cap: usize,
) -> Result<Option<PairCertificate>, GroupError> {
    check_same_group(q1, q)?;
    if q1.is_empty() || q.is_empty() {
        return Err(GroupError::EmptySet);
    }
    if q1.elems.intersection(&q.elems).next().is_some() {
        return Err(GroupError::NotDisjoint);
    }
    let group = &q1.group;
    let order = group.order();
    let cap = cap.min(MAX_SEARCH_UNIVERSE);
    if order > cap {
        return Err(GroupError::SearchTooLarge { order, cap });
    }
    let full: u64 = if order == 64 { u64::MAX } else { (1u64 << order) - 1 };
    // shift[g] = indices of g + (Q u Q1); q1shift[g] = indices of g + Q1.
    let qq = q1.union(q);
    let mut shift = vec![0u64; order];
    let mut q1shift = vec![0u64; order];
    for idx in 0..order {
        let g = group.element(idx);
        for x in &qq.elems {
            shift[idx] |= 1u64 << group.index_of(&group.add(&g, x));
        }
        for x in &q1.elems {
            q1shift[idx] |= 1u64 << group.index_of(&group.add(&g, x));
        }
    }
    let pred = |mask: u64| -> bool {
        let mut cover = 0u64;
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            cover |= shift[i];
            bits &= bits - 1;
        }
        if cover != full {
            return false;
        }
        let mut bits = mask;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            // Coverage of the others only.
            let mut rest_cover = 0u64;
            let mut rest = mask & !(1u64 << i);
            while rest != 0 {
                let j = rest.trailing_zeros() as usize;
                rest_cover |= shift[j];
                rest &= rest - 1;
            }
            if q1shift[i] & !rest_cover == 0 {
                return false;
            }
        }
        true
    };
    let Some(mask) = first_matching_subset(order, exec, pred) else {
        return Ok(None);
    };
    let mut elems = BTreeSet::new();
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        elems.insert(group.element(i));
        bits &= bits - 1;
    }
    let n_set = GroupSubset { group: group.clone(), elems };
    let cert = certificate_for(q1, q, &n_set)?.expect("search predicate verified conditions");
    Ok(Some(cert))
}

/// Componentwise product of verified minimal complement pairs: the products
/// `W_1 x .. x W_k` and `M_1 x .. x M_k` inside the product group.
pub fn product_minimal(
    parts: &[(GroupSubset, GroupSubset)],
) -> Result<(GroupSubset, GroupSubset), GroupError> {
    if parts.is_empty() {
        return Err(GroupError::EmptySet);
    }
    for (i, (w, m)) in parts.iter().enumerate() {
        if is_minimal_complement(w, m)? != MinimalityOutcome::Minimal {
            return Err(GroupError::NotMinimalInput(i));
        }
    }
    let factors: Vec<i64> =
        parts.iter().flat_map(|(w, _)| w.group.factors.iter().copied()).collect();
    let group = FiniteAbelianGroup::new(factors)?;
    let mut w_elems: Vec<Element> = vec![Vec::new()];
    let mut m_elems: Vec<Element> = vec![Vec::new()];
    for (w, m) in parts {
        w_elems = w_elems
            .iter()
            .flat_map(|prefix| {
                w.elems.iter().map(move |e| {
                    let mut t = prefix.clone();
                    t.extend_from_slice(e);
                    t
                })
            })
            .collect();
        m_elems = m_elems
            .iter()
            .flat_map(|prefix| {
                m.elems.iter().map(move |e| {
                    let mut t = prefix.clone();
                    t.extend_from_slice(e);
                    t
                })
            })
            .collect();
    }
    Ok((
        GroupSubset { group: group.clone(), elems: w_elems.into_iter().collect() },
        GroupSubset { group, elems: m_elems.into_iter().collect() },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(factors: &[i64]) -> FiniteAbelianGroup {
        FiniteAbelianGroup::new(factors.to_vec()).unwrap()
    }

    fn subset(g: &FiniteAbelianGroup, elems: &[&[i64]]) -> GroupSubset {
        GroupSubset::new(g, elems.iter().copied()).unwrap()
    }

    #[test]
    fn sumset_covers_z4() {
        let g = group(&[4]);
        let a = subset(&g, &[&[0], &[1]]);
        let b = subset(&g, &[&[1], &[3]]);
        assert_eq!(sumset(&a, &b).unwrap(), g.full_subset());
    }

    #[test]
    fn trivial_group_sumset() {
        let g = FiniteAbelianGroup::trivial();
        let z = subset(&g, &[&[]]);
        assert_eq!(sumset(&z, &z).unwrap(), z);
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn minimal_complement_verdicts_in_z4() {
        let g = group(&[4]);
        let w = subset(&g, &[&[0], &[1]]);
        assert_eq!(
            is_minimal_complement(&w, &subset(&g, &[&[1], &[3]])).unwrap(),
            MinimalityOutcome::Minimal
        );
        assert_eq!(
            is_minimal_complement(&w, &g.full_subset()).unwrap(),
            MinimalityOutcome::ComplementNotMinimal(vec![0])
        );
        assert_eq!(
            is_minimal_complement(&w, &subset(&g, &[&[0]])).unwrap(),
            MinimalityOutcome::NotComplement
        );
    }

    #[test]
    fn extract_from_full_z4() {
        let g = group(&[4]);
        let w = subset(&g, &[&[0], &[1]]);
        let got = extract_minimal(&w, &g.full_subset()).unwrap();
        assert_eq!(got, subset(&g, &[&[1], &[3]]));
        assert_eq!(is_minimal_complement(&w, &got).unwrap(), MinimalityOutcome::Minimal);
    }

    #[test]
    fn extract_rejects_non_complement() {
        let g = group(&[4]);
        let w = subset(&g, &[&[0], &[2]]);
        assert_eq!(
            extract_minimal(&w, &subset(&g, &[&[0], &[2]])).unwrap_err(),
            GroupError::NotAComplement
        );
    }

    #[test]
    fn extract_from_full_when_w_is_full() {
        // Any singleton complements the full group; the greedy keeps only
        // the last element of the enumeration.
        let g = group(&[4]);
        let got = extract_minimal(&g.full_subset(), &g.full_subset()).unwrap();
        assert_eq!(got.len(), 1);
        assert!(got.contains(&[3]));
        assert_eq!(
            is_minimal_complement(&g.full_subset(), &got).unwrap(),
            MinimalityOutcome::Minimal
        );
    }

    #[test]
    fn r_net_in_z6() {
        let g = group(&[6]);
        let a = subset(&g, &[&[-1], &[0], &[1]]);
        let net = minimal_r_net(&a, 1).unwrap();
        assert_eq!(net.len(), 2);
        assert_eq!(net, subset(&g, &[&[2], &[5]]));
        // {0, 3} is another valid 2-element net for the same data.
        let alt = subset(&g, &[&[0], &[3]]);
        assert_eq!(sumset(&a, &alt).unwrap(), g.full_subset());
        // r = 0 keeps the whole group.
        assert_eq!(minimal_r_net(&a, 0).unwrap(), g.full_subset());
    }

    #[test]
    fn r_net_rejects_bad_inputs() {
        let g = group(&[6]);
        assert_eq!(
            minimal_r_net(&subset(&g, &[&[0], &[1]]), 1).unwrap_err(),
            GroupError::NotSymmetric
        );
        assert_eq!(
            minimal_r_net(&subset(&g, &[&[1], &[5]]), 1).unwrap_err(),
            GroupError::MissingIdentity
        );
        let g = group(&[2, 2]);
        assert_eq!(
            minimal_r_net(&subset(&g, &[&[0, 0], &[1, 0]]), 2).unwrap_err(),
            GroupError::NotGenerating
        );
    }

    #[test]
    fn pair_certificate_in_klein_group() {
        let g = group(&[2, 2]);
        let q1 = subset(&g, &[&[0, 0]]);
        let q = subset(&g, &[&[1, 0]]);
        let cert = pair_minimal_complement(&q1, &q).unwrap().unwrap();
        assert_eq!(cert.n(), &subset(&g, &[&[0, 0], &[0, 1]]));
        assert!(check_pair_certificate(&q1, &q, &cert).unwrap());
    }

    #[test]
    fn pair_certificate_in_z4() {
        let g = group(&[4]);
        let q1 = subset(&g, &[&[0]]);
        let q = subset(&g, &[&[2]]);
        let cert = pair_minimal_complement(&q1, &q).unwrap().unwrap();
        // Coset representatives of the subgroup {0, 2}.
        assert_eq!(cert.n(), &subset(&g, &[&[0], &[1]]));
    }

    #[test]
    fn pair_search_input_errors() {
        let g = group(&[4]);
        let a = subset(&g, &[&[0]]);
        let b = subset(&g, &[&[0], &[2]]);
        assert_eq!(pair_minimal_complement(&a, &b).unwrap_err(), GroupError::NotDisjoint);
        let empty = GroupSubset::new(&g, std::iter::empty::<&[i64]>()).unwrap();
        assert_eq!(pair_minimal_complement(&a, &empty).unwrap_err(), GroupError::EmptySet);
        let big = group(&[5, 5]);
        let q1 = subset(&big, &[&[0, 0]]);
        let q = subset(&big, &[&[1, 0]]);
        assert_eq!(
            pair_minimal_complement(&q1, &q).unwrap_err(),
            GroupError::SearchTooLarge { order: 25, cap: 24 }
        );
        // Raising the cap admits the order; Q u Q1 = G here, so the first
        // singleton already certifies.
        let rest: Vec<Element> =
            big.elements().filter(|e| e != &vec![0, 0]).collect();
        let q_full = GroupSubset::new(&big, rest).unwrap();
        let cert = pair_minimal_complement_with(&q1, &q_full, Execution::default(), 32)
            .unwrap()
            .unwrap();
        assert_eq!(cert.n().len(), 1);
    }

    #[test]
    fn pair_search_exhausts_z3() {
        // Q1 = {1}, Q = {0} in Z/3 admits no certificate set at all.
        let g = group(&[3]);
        let q1 = subset(&g, &[&[1]]);
        let q = subset(&g, &[&[0]]);
        assert_eq!(pair_minimal_complement(&q1, &q).unwrap(), None);
    }

    #[test]
    fn parallel_search_matches_sequential() {
        let g = group(&[4, 2, 2]);
        let q1 = subset(&g, &[&[0, 0, 0], &[1, 1, 0]]);
        let q = subset(&g, &[&[2, 0, 0], &[3, 0, 1]]);
        let seq = pair_minimal_complement_with(&q1, &q, Execution::Sequential, 24).unwrap();
        let par = pair_minimal_complement_with(&q1, &q, Execution::Parallel, 24).unwrap();
        assert_eq!(seq, par);
    }

    #[test]
    fn product_of_minimal_pairs() {
        let g4 = group(&[4]);
        let g2 = group(&[2]);
        let parts = vec![
            (subset(&g4, &[&[0], &[1]]), subset(&g4, &[&[1], &[3]])),
            (subset(&g2, &[&[0]]), subset(&g2, &[&[0], &[1]])),
        ];
        let (w, m) = product_minimal(&parts).unwrap();
        assert_eq!(w.group().factors(), &[4, 2]);
        assert_eq!(w.len(), 2);
        assert_eq!(m.len(), 4);
        assert_eq!(is_minimal_complement(&w, &m).unwrap(), MinimalityOutcome::Minimal);
    }

    #[test]
    fn product_rejects_non_minimal_part() {
        let g4 = group(&[4]);
        let g2 = group(&[2]);
        let parts = vec![
            (subset(&g4, &[&[0], &[1]]), subset(&g4, &[&[1], &[3]])),
            (subset(&g2, &[&[0]]), subset(&g2, &[&[0]])),
        ];
        assert_eq!(product_minimal(&parts).unwrap_err(), GroupError::NotMinimalInput(1));
    }

    #[test]
    fn translation_invariance_of_minimality() {
        let g = group(&[6]);
        let w = subset(&g, &[&[0], &[1], &[3]]);
        let c = extract_minimal(&w, &g.full_subset()).unwrap();
        for t in 0..6 {
            let shifted =
                GroupSubset::new(&g, c.iter().map(|e| g.add(e, &[t]))).unwrap();
            let outcome = is_minimal_complement(&w, &shifted).unwrap();
            assert_eq!(outcome, MinimalityOutcome::Minimal, "translate by {t}");
        }
    }
}

//! Naive reference implementations used to cross-check every other module.
//!
//! Everything here is written directly from the definitions: set arithmetic
//! over `BTreeSet`, subset enumeration by explicit index lists, no bit masks
//! and no calls into the optimized search paths. Performance is not a goal;
//! agreement is.

use crate::finitegrp::GroupSubset;
use crate::zlattice::{Point, Window};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("group order {order} exceeds the search cap {cap}")]
    SearchTooLarge { order: usize, cap: usize },
}

/// Points of the window satisfying the membership predicate.
pub fn window_points<F: Fn(&[i64]) -> bool>(member: F, win: &Window) -> BTreeSet<Point> {
    win.points().filter(|p| member(p)).collect()
}

/// Targets with no representation `t = a + b`, `a` from the list, `b` in the
/// predicate set. The returned list keeps target order.
pub fn window_cover_check<F, I>(a: &BTreeSet<Point>, b_member: F, targets: I) -> Vec<Point>
where
    F: Fn(&[i64]) -> bool,
    I: IntoIterator<Item = Point>,
{
    let mut uncovered = Vec::new();
    for t in targets {
        let covered = a.iter().any(|p| {
            let diff: Point = t.iter().zip(p).map(|(&x, &y)| x - y).collect();
            b_member(&diff)
        });
        if !covered {
            uncovered.push(t);
        }
    }
    uncovered
}

fn add_mod(factors: &[i64], a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter()
        .zip(b)
        .zip(factors)
        .map(|((&x, &y), &f)| (x + y).rem_euclid(f))
        .collect()
}

fn sum_of(factors: &[i64], xs: &BTreeSet<Vec<i64>>, ys: &BTreeSet<Vec<i64>>) -> BTreeSet<Vec<i64>> {
    let mut out = BTreeSet::new();
    for x in xs {
        for y in ys {
            out.insert(add_mod(factors, x, y));
        }
    }
    out
}

fn all_elements(factors: &[i64]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for &f in factors {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..f).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out
}

/// Subsets of `universe` in cardinality-then-lexicographic order, realized
/// by stepping explicit index lists.
fn subsets_in_order(universe: &[Vec<i64>]) -> Vec<BTreeSet<Vec<i64>>> {
    let n = universe.len();
    let mut out = Vec::new();
    for k in 1..=n {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(idx.iter().map(|&i| universe[i].clone()).collect());
            let mut pos = k;
            let mut advanced = false;
            while pos > 0 {
                pos -= 1;
                if idx[pos] < n - k + pos {
                    idx[pos] += 1;
                    for j in pos + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    out
}

/// Literal pair-certificate search: the first nonempty `N` in cardinality
/// and lexicographic order with `N + (Q u Q1) = G` and, for every `n`, some
/// `q` in `Q1` such that `n + q` avoids `(N \ {n}) + (Q u Q1)`.
pub fn naive_pair_search(
    q1: &GroupSubset,
    q: &GroupSubset,
    cap: usize,
) -> Result<Option<BTreeSet<Vec<i64>>>, OracleError> {
    let factors = q1.group().factors().to_vec();
    let universe = all_elements(&factors);
    if universe.len() > cap {
        return Err(OracleError::SearchTooLarge { order: universe.len(), cap });
    }
    let full: BTreeSet<Vec<i64>> = universe.iter().cloned().collect();
    let qq: BTreeSet<Vec<i64>> =
        q1.iter().cloned().chain(q.iter().cloned()).collect();
    let q1_set: BTreeSet<Vec<i64>> = q1.iter().cloned().collect();
    for n_set in subsets_in_order(&universe) {
        if sum_of(&factors, &n_set, &qq) != full {
            continue;
        }
        let mut all_witnessed = true;
        for n in &n_set {
            let mut rest = n_set.clone();
            rest.remove(n);
            let reach = sum_of(&factors, &rest, &qq);
            let witnessed = q1_set.iter().any(|qe| !reach.contains(&add_mod(&factors, n, qe)));
            if !witnessed {
                all_witnessed = false;
                break;
            }
        }
        if all_witnessed {
            return Ok(Some(n_set));
        }
    }
    Ok(None)
}

/// Literal minimality check: `C` complements `W` and no single removal
/// still complements.
pub fn naive_minimality_check(w: &GroupSubset, c: &GroupSubset) -> bool {
    let factors = w.group().factors().to_vec();
    let full: BTreeSet<Vec<i64>> = all_elements(&factors).into_iter().collect();
    let w_set: BTreeSet<Vec<i64>> = w.iter().cloned().collect();
    let c_set: BTreeSet<Vec<i64>> = c.iter().cloned().collect();
    if w_set.is_empty() || c_set.is_empty() {
        return false;
    }
    if sum_of(&factors, &w_set, &c_set) != full {
        return false;
    }
    for e in &c_set {
        let mut rest = c_set.clone();
        rest.remove(e);
        if sum_of(&factors, &w_set, &rest) == full {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitegrp::FiniteAbelianGroup;

    fn subset(g: &FiniteAbelianGroup, elems: &[&[i64]]) -> GroupSubset {
        GroupSubset::new(g, elems.iter().copied()).unwrap()
    }

    #[test]
    fn cover_check_flags_gaps() {
        // A = {0}, B = even numbers: odd targets are uncovered.
        let a: BTreeSet<Point> = [vec![0]].into();
        let uncovered = window_cover_check(
            &a,
            |p| p[0].rem_euclid(2) == 0,
            Window::new(vec![0], vec![3]).unwrap().points(),
        );
        assert_eq!(uncovered, vec![vec![1], vec![3]]);
    }

    #[test]
    fn naive_search_matches_hand_computation() {
        let g = FiniteAbelianGroup::new(vec![2, 2]).unwrap();
        let q1 = subset(&g, &[&[0, 0]]);
        let q = subset(&g, &[&[1, 0]]);
        let n = naive_pair_search(&q1, &q, 24).unwrap().unwrap();
        let expected: BTreeSet<Vec<i64>> = [vec![0, 0], vec![0, 1]].into();
        assert_eq!(n, expected);
    }

    #[test]
    fn naive_minimality_on_z4() {
        let g = FiniteAbelianGroup::new(vec![4]).unwrap();
        let w = subset(&g, &[&[0], &[1]]);
        assert!(naive_minimality_check(&w, &subset(&g, &[&[1], &[3]])));
        assert!(!naive_minimality_check(&w, &g.full_subset()));
        assert!(!naive_minimality_check(&w, &subset(&g, &[&[0]])));
    }
}

//! Full-rank sublattices of `Z^d`: exact solving against a period basis and
//! the finite quotient `Z^d / L`.
//!
//! A [`PeriodBasis`] holds `d` independent columns `u_1, .., u_d` generating
//! `L = Z u_1 + .. + Z u_d`. All arithmetic is exact: the Smith normal form
//! runs over arbitrary-precision integers and the stored transforms are
//! checked to fit `i64` (an [`LatticeError::Overflow`] is raised otherwise,
//! a wrong value is never returned).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use thiserror::Error;

/// A point of `Z^d`, coordinates in the standard basis.
pub type Point = Vec<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("basis columns must be {expected} vectors of length {expected}, got {got}")]
    NotSquare { expected: usize, got: usize },
    #[error("basis matrix is singular")]
    SingularBasis,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("exact value does not fit 64-bit storage")]
    Overflow,
    #[error("window bound is inverted in coordinate {0}")]
    EmptyWindow(usize),
}

/// Axis-aligned integer box `[lo_1, hi_1] x .. x [lo_d, hi_d]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Window {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self, LatticeError> {
        if lo.len() != hi.len() {
            return Err(LatticeError::DimensionMismatch { expected: lo.len(), got: hi.len() });
        }
        for (i, (&l, &h)) in lo.iter().zip(&hi).enumerate() {
            if l > h {
                return Err(LatticeError::EmptyWindow(i));
            }
        }
        Ok(Window { lo, hi })
    }

    /// Cube `[-r, r]^d`.
    pub fn cube(d: usize, r: i64) -> Self {
        Window { lo: vec![-r; d], hi: vec![r; d] }
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.len() == self.lo.len()
            && p.iter().zip(self.lo.iter().zip(&self.hi)).all(|(&x, (&l, &h))| l <= x && x <= h)
    }

    /// Box grown by `margin` in every direction.
    pub fn inflate(&self, margin: i64) -> Window {
        Window {
            lo: self.lo.iter().map(|&l| l - margin).collect(),
            hi: self.hi.iter().map(|&h| h + margin).collect(),
        }
    }

    /// All lattice points, last coordinate fastest.
    pub fn points(&self) -> WindowIter {
        WindowIter { win: self.clone(), cur: Some(self.lo.clone()) }
    }

    pub fn len(&self) -> usize {
        self.lo.iter().zip(&self.hi).map(|(&l, &h)| (h - l + 1) as usize).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

pub struct WindowIter {
    win: Window,
    cur: Option<Point>,
}

impl Iterator for WindowIter {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let cur = self.cur.take()?;
        let mut next = cur.clone();
        let mut k = next.len();
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            next[k] += 1;
            if next[k] <= self.win.hi[k] {
                self.cur = Some(next);
                break;
            }
            next[k] = self.win.lo[k];
        }
        Some(cur)
    }
}

/// Result of the Smith normal form `U * B * V = D` with `U`, `V` unimodular
/// and `D` diagonal, nonnegative, each entry dividing the next.
struct Snf {
    diag: Vec<BigInt>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
}

fn identity(d: usize) -> Vec<Vec<BigInt>> {
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

/// Exhaustive row and column reduction; entry swell is absorbed by `BigInt`.
fn smith_normal_form(mut a: Vec<Vec<BigInt>>) -> Snf {
    let d = a.len();
    let mut u = identity(d);
    let mut u_inv = identity(d);
    let mut v = identity(d);

    // Row op on `a` and `u` keeps U*A invariant paired with the inverse column
    // op on `u_inv`, so u * u_inv = I holds throughout.
    for t in 0..d {
        'reduce: loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d {
                for j in t..d {
                    if !a[i][j].is_zero()
                        && pivot
                            .map(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                            .unwrap_or(true)
                    {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else { break 'reduce };
            if pi != t {
                a.swap(pi, t);
                u.swap(pi, t);
                for row in u_inv.iter_mut() {
                    row.swap(pi, t);
                }
            }
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(pj, t);
                }
                for row in v.iter_mut() {
                    row.swap(pj, t);
                }
            }
            let mut dirty = false;
            for i in t + 1..d {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    if !q.is_zero() {
                        for j in 0..d {
                            let sub = &q * &a[t][j];
                            a[i][j] -= sub;
                            let sub = &q * &u[t][j];
                            u[i][j] -= sub;
                        }
                        for r in 0..d {
                            let add = &q * &u_inv[r][i];
                            u_inv[r][t] += add;
                        }
                    }
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'reduce;
            }
            for j in t + 1..d {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    if !q.is_zero() {
                        for i in 0..d {
                            let sub = &q * &a[i][t];
                            a[i][j] -= sub;
                            let sub = &q * &v[i][t];
                            v[i][j] -= sub;
                        }
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue 'reduce;
            }
            // Divisibility of the trailing block: fold an offending row in.
            for i in t + 1..d {
                for j in t + 1..d {
                    if !(&a[i][j] % &a[t][t]).is_zero() {
                        for k in 0..d {
                            let add = a[i][k].clone();
                            a[t][k] += add;
                            let add = u[i][k].clone();
                            u[t][k] += add;
                        }
                        for r in 0..d {
                            let sub = u_inv[r][t].clone();
                            u_inv[r][i] -= sub;
                        }
                        continue 'reduce;
                    }
                }
            }
            break 'reduce;
        }
        if a[t][t].is_negative() {
            for j in 0..d {
                a[t][j] = -a[t][j].clone();
                u[t][j] = -u[t][j].clone();
                u_inv[j][t] = -u_inv[j][t].clone();
            }
        }
    }
    Snf { diag: (0..d).map(|i| a[i][i].clone()).collect(), u, u_inv, v }
}

fn to_i64_matrix(m: &[Vec<BigInt>]) -> Result<Vec<Vec<i64>>, LatticeError> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| i64::try_from(x.clone()).map_err(|_| LatticeError::Overflow))
                .collect()
        })
        .collect()
}

/// Ordered basis of a full-rank sublattice `L = Z u_1 + .. + Z u_d` of `Z^d`.
///
/// Construction rejects singular column sets, so every value of this type
/// carries a nonzero determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodBasis {
    dim: usize,
    columns: Vec<Point>,
    diag: Vec<i64>,
    u: Vec<Vec<i64>>,
    u_inv: Vec<Vec<i64>>,
    v: Vec<Vec<i64>>,
}

impl PeriodBasis {
    pub fn new(columns: Vec<Point>) -> Result<Self, LatticeError> {
        let dim = columns.len();
        if dim == 0 {
            return Err(LatticeError::NotSquare { expected: 1, got: 0 });
        }
        for c in &columns {
            if c.len() != dim {
                return Err(LatticeError::NotSquare { expected: dim, got: c.len() });
            }
        }
        // Matrix with u_k as the k-th column.
        let a: Vec<Vec<BigInt>> =
            (0..dim).map(|i| (0..dim).map(|j| BigInt::from(columns[j][i])).collect()).collect();
        let snf = smith_normal_form(a);
        if snf.diag.iter().any(|x| x.is_zero()) {
            return Err(LatticeError::SingularBasis);
        }
        let diag = snf
            .diag
            .iter()
            .map(|x| i64::try_from(x.clone()).map_err(|_| LatticeError::Overflow))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PeriodBasis {
            dim,
            columns,
            diag,
            u: to_i64_matrix(&snf.u)?,
            u_inv: to_i64_matrix(&snf.u_inv)?,
            v: to_i64_matrix(&snf.v)?,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn columns(&self) -> &[Point] {
        &self.columns
    }

    fn check_dim(&self, v: &[i64]) -> Result<(), LatticeError> {
        if v.len() != self.dim {
            return Err(LatticeError::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        Ok(())
    }

    /// `U * v` over `i128`, exact for any `i64` input.
    fn apply_u(&self, v: &[i64]) -> Vec<i128> {
        self.u
            .iter()
            .map(|row| row.iter().zip(v).map(|(&a, &b)| a as i128 * b as i128).sum())
            .collect()
    }

    /// Linear combination of the columns: `B * gamma`.
    pub fn combine(&self, gamma: &[i64]) -> Result<Point, LatticeError> {
        self.check_dim(gamma)?;
        let mut out = vec![0i128; self.dim];
        for (g, col) in gamma.iter().zip(&self.columns) {
            for (o, &c) in out.iter_mut().zip(col) {
                *o += *g as i128 * c as i128;
            }
        }
        out.into_iter()
            .map(|x| i64::try_from(x).map_err(|_| LatticeError::Overflow))
            .collect()
    }
}

/// Integer coordinates of `v` against the basis: `Some(gamma)` with
/// `B * gamma = v` iff `v` lies in the lattice. `v` lies in the cone
/// `N u_1 + .. + N u_d` iff coordinates are present and all nonnegative.
pub fn cone_coords(basis: &PeriodBasis, v: &[i64]) -> Result<Option<Vec<i64>>, LatticeError> {
    basis.check_dim(v)?;
    let y = basis.apply_u(v);
    let mut scaled = Vec::with_capacity(basis.dim);
    for (yi, &di) in y.iter().zip(&basis.diag) {
        if yi % di as i128 != 0 {
            return Ok(None);
        }
        scaled.push(yi / di as i128);
    }
    let gamma: Vec<i128> = basis
        .v
        .iter()
        .map(|row| row.iter().zip(&scaled).map(|(&a, &b)| a as i128 * b).sum())
        .collect();
    gamma
        .into_iter()
        .map(|x| i64::try_from(x).map(Some).map_err(|_| LatticeError::Overflow))
        .collect()
}

/// The finite quotient `Z^d / L` together with deterministic representatives
/// and exact projection data.
///
/// Representatives are the points whose coordinate tuple in the Smith basis
/// lies in the box `[0, a_1) x .. x [0, a_d)`, mapped back to standard
/// coordinates; their order is the mixed-radix order of those tuples with the
/// last coordinate moving fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientStructure {
    basis: PeriodBasis,
    order: usize,
    invariant_factors: Vec<i64>,
    reps: Vec<Point>,
}

/// Practical ceiling on the number of stored representatives.
const MAX_QUOTIENT_ORDER: u128 = 1 << 24;

pub fn quotient_structure(basis: &PeriodBasis) -> Result<QuotientStructure, LatticeError> {
    let order_big: u128 = basis.diag.iter().map(|&x| x as u128).try_fold(1u128, |acc, x| {
        acc.checked_mul(x).filter(|&o| o <= MAX_QUOTIENT_ORDER)
    }).ok_or(LatticeError::Overflow)?;
    let order = order_big as usize;
    let invariant_factors: Vec<i64> = basis.diag.iter().copied().filter(|&x| x > 1).collect();
    let mut reps = Vec::with_capacity(order);
    let mut tuple = vec![0i64; basis.dim];
    loop {
        let rep: Vec<i128> = basis
            .u_inv
            .iter()
            .map(|row| row.iter().zip(&tuple).map(|(&a, &b)| a as i128 * b as i128).sum())
            .collect();
        let rep: Point = rep
            .into_iter()
            .map(|x| i64::try_from(x).map_err(|_| LatticeError::Overflow))
            .collect::<Result<_, _>>()?;
        reps.push(rep);
        // Mixed-radix increment, last coordinate fastest.
        let mut k = basis.dim;
        loop {
            if k == 0 {
                break;
            }
            k -= 1;
            tuple[k] += 1;
            if tuple[k] < basis.diag[k] {
                break;
            }
            tuple[k] = 0;
            if k == 0 {
                k = usize::MAX;
                break;
            }
        }
        if k == usize::MAX {
            break;
        }
    }
    debug_assert_eq!(reps.len(), order);
    Ok(QuotientStructure { basis: basis.clone(), order, invariant_factors, reps })
}

impl QuotientStructure {
    pub fn basis(&self) -> &PeriodBasis {
        &self.basis
    }

    /// `|Z^d / L|`, the absolute determinant of the basis.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Invariant factors `a_1 | a_2 | ..`, each greater than 1; the empty
    /// list is the trivial quotient.
    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariant_factors
    }

    /// Canonical representatives, indexed by residue index.
    pub fn reps(&self) -> &[Point] {
        &self.reps
    }

    pub fn rep(&self, idx: usize) -> &Point {
        &self.reps[idx]
    }

    fn tuple_of(&self, v: &[i64]) -> Result<Vec<i64>, LatticeError> {
        self.basis.check_dim(v)?;
        let y = self.basis.apply_u(v);
        Ok(y.iter()
            .zip(&self.basis.diag)
            .map(|(&yi, &di)| yi.rem_euclid(di as i128) as i64)
            .collect())
    }

    fn index_of_full_tuple(&self, tuple: &[i64]) -> usize {
        let mut idx = 0usize;
        for (&t, &d) in tuple.iter().zip(&self.basis.diag) {
            idx = idx * d as usize + t as usize;
        }
        idx
    }

    /// Residue index of `v`; a group homomorphism onto `0..order()`.
    pub fn project(&self, v: &[i64]) -> Result<usize, LatticeError> {
        Ok(self.index_of_full_tuple(&self.tuple_of(v)?))
    }

    /// Coordinates of the residue in the cyclic factors of the invariant
    /// factor decomposition (trivial factors dropped).
    pub fn residue_tuple(&self, idx: usize) -> Vec<i64> {
        let mut rem = idx;
        let mut full = vec![0i64; self.basis.dim];
        for k in (0..self.basis.dim).rev() {
            let d = self.basis.diag[k] as usize;
            full[k] = (rem % d) as i64;
            rem /= d;
        }
        full.iter().zip(&self.basis.diag).filter(|(_, &d)| d > 1).map(|(&t, _)| t).collect()
    }

    /// Inverse of [`residue_tuple`](Self::residue_tuple).
    pub fn index_of_residue_tuple(&self, tuple: &[i64]) -> Result<usize, LatticeError> {
        if tuple.len() != self.invariant_factors.len() {
            return Err(LatticeError::DimensionMismatch {
                expected: self.invariant_factors.len(),
                got: tuple.len(),
            });
        }
        let mut it = tuple.iter();
        let mut idx = 0usize;
        for &d in &self.basis.diag {
            let t = if d > 1 { *it.next().expect("length checked") } else { 0 };
            if t < 0 || t >= d {
                return Err(LatticeError::Overflow);
            }
            idx = idx * d as usize + t as usize;
        }
        Ok(idx)
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let (ta, tb) = (self.full_tuple(a), self.full_tuple(b));
        let sum: Vec<i64> = ta
            .iter()
            .zip(&tb)
            .zip(&self.basis.diag)
            .map(|((&x, &y), &d)| (x + y).rem_euclid(d))
            .collect();
        self.index_of_full_tuple(&sum)
    }

    pub fn neg(&self, a: usize) -> usize {
        let t = self.full_tuple(a);
        let neg: Vec<i64> =
            t.iter().zip(&self.basis.diag).map(|(&x, &d)| (-x).rem_euclid(d)).collect();
        self.index_of_full_tuple(&neg)
    }

    fn full_tuple(&self, idx: usize) -> Vec<i64> {
        let mut rem = idx;
        let mut full = vec![0i64; self.basis.dim];
        for k in (0..self.basis.dim).rev() {
            let d = self.basis.diag[k] as usize;
            full[k] = (rem % d) as i64;
            rem /= d;
        }
        full
    }

    /// Residue counts of a point list, keyed by residue index.
    pub fn residue_histogram(&self, points: &[Point]) -> Result<BTreeMap<usize, usize>, LatticeError> {
        let mut out = BTreeMap::new();
        for p in points {
            *out.entry(self.project(p)?).or_insert(0) += 1;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis(cols: &[&[i64]]) -> PeriodBasis {
        PeriodBasis::new(cols.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    /// Order of the quotient counted by a brute-force congruence sweep, no
    /// Smith form involved: residues of a box modulo pairwise lattice
    /// differences.
    fn brute_force_order(b: &PeriodBasis, span: i64) -> usize {
        let d = b.dim();
        let mut pts: Vec<Point> = Vec::new();
        let mut cur = vec![-span; d];
        'outer: loop {
            pts.push(cur.clone());
            for k in (0..d).rev() {
                cur[k] += 1;
                if cur[k] <= span {
                    continue 'outer;
                }
                cur[k] = -span;
                if k == 0 {
                    break 'outer;
                }
            }
        }
        // v ~ w iff v - w is an integer combination; decided by exhaustive
        // small-coefficient search, valid for the tiny bases used here.
        let in_lattice = |v: &[i64]| -> bool {
            let cmax = 4 * span;
            let mut coef = vec![-cmax; d];
            'c: loop {
                let mut ok = true;
                for i in 0..d {
                    let s: i64 = (0..d).map(|j| coef[j] * b.columns()[j][i]).sum();
                    if s != v[i] {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    return true;
                }
                for k in (0..d).rev() {
                    coef[k] += 1;
                    if coef[k] <= cmax {
                        continue 'c;
                    }
                    coef[k] = -cmax;
                    if k == 0 {
                        break 'c;
                    }
                }
            }
            false
        };
        let mut classes: Vec<Point> = Vec::new();
        for p in pts {
            let diff_known = classes.iter().any(|c| {
                let v: Vec<i64> = c.iter().zip(&p).map(|(a, b)| a - b).collect();
                in_lattice(&v)
            });
            if !diff_known {
                classes.push(p);
            }
        }
        classes.len()
    }

    #[test]
    fn identity_quotient_is_trivial() {
        let b = basis(&[&[1, 0], &[0, 1]]);
        let q = quotient_structure(&b).unwrap();
        assert_eq!(q.order(), 1);
        assert!(q.invariant_factors().is_empty());
        assert_eq!(q.reps(), &[vec![0, 0]]);
    }

    #[test]
    fn doubled_axes_quotient() {
        let b = basis(&[&[2, 0], &[0, 2]]);
        let q = quotient_structure(&b).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(q.invariant_factors(), &[2, 2]);
        assert_eq!(q.order(), brute_force_order(&b, 2));
    }

    #[test]
    fn skew_basis_is_cyclic_of_order_six() {
        let b = basis(&[&[2, 0], &[1, 3]]);
        let q = quotient_structure(&b).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.invariant_factors(), &[6]);
        assert_eq!(q.order(), brute_force_order(&b, 3));
        // Cyclic: some residue has additive order six.
        let full = (0..q.order()).find(|&r| {
            let mut acc = r;
            let mut ord = 1;
            while acc != q.project(&[0, 0]).unwrap() {
                acc = q.add(acc, r);
                ord += 1;
            }
            ord == 6
        });
        assert!(full.is_some());
    }

    #[test]
    fn singular_basis_rejected() {
        assert_eq!(
            PeriodBasis::new(vec![vec![1, 2], vec![2, 4]]).unwrap_err(),
            LatticeError::SingularBasis
        );
    }

    #[test]
    fn cone_coords_examples() {
        let b = basis(&[&[2, 0], &[0, 2]]);
        assert_eq!(cone_coords(&b, &[4, 6]).unwrap(), Some(vec![2, 3]));
        assert_eq!(cone_coords(&b, &[1, 0]).unwrap(), None);
        let b = basis(&[&[2, 0], &[1, 3]]);
        // (3, 3) = 1*(2,0) + 1*(1,3).
        assert_eq!(cone_coords(&b, &[3, 3]).unwrap(), Some(vec![1, 1]));
        assert_eq!(cone_coords(&b, &[-2, 0]).unwrap(), Some(vec![-1, 0]));
    }

    #[test]
    fn cone_coords_dimension_mismatch() {
        let b = basis(&[&[2, 0], &[0, 2]]);
        assert!(matches!(
            cone_coords(&b, &[1, 2, 3]),
            Err(LatticeError::DimensionMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn projection_identifies_translates() {
        let b = basis(&[&[2, 0], &[1, 3]]);
        let q = quotient_structure(&b).unwrap();
        assert_eq!(q.project(&[5, 4]).unwrap(), q.project(&[2, 1]).unwrap());
        assert_eq!(q.project(&[2, 0]).unwrap(), q.project(&[0, 0]).unwrap());
        assert_eq!(q.project(&[1, 3]).unwrap(), q.project(&[0, 0]).unwrap());
    }

    #[test]
    fn projection_is_homomorphism() {
        let b = basis(&[&[2, 0], &[1, 3]]);
        let q = quotient_structure(&b).unwrap();
        for a in [[0, 0], [1, 1], [-2, 5], [7, -3]] {
            for c in [[0, 0], [3, 2], [-1, -1], [4, 9]] {
                let s = [a[0] + c[0], a[1] + c[1]];
                assert_eq!(
                    q.project(&s).unwrap(),
                    q.add(q.project(&a).unwrap(), q.project(&c).unwrap())
                );
            }
        }
    }

    #[test]
    fn reps_are_a_transversal() {
        for cols in [vec![vec![2, 0], vec![1, 3]], vec![vec![3, 1], vec![-1, 2]]] {
            let b = PeriodBasis::new(cols).unwrap();
            let q = quotient_structure(&b).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for (i, r) in q.reps().iter().enumerate() {
                assert_eq!(q.project(r).unwrap(), i);
                seen.insert(i);
            }
            assert_eq!(seen.len(), q.order());
        }
    }

    #[test]
    fn residue_tuple_round_trip() {
        let b = basis(&[&[2, 0], &[0, 4]]);
        let q = quotient_structure(&b).unwrap();
        assert_eq!(q.invariant_factors(), &[2, 4]);
        for idx in 0..q.order() {
            let t = q.residue_tuple(idx);
            assert_eq!(q.index_of_residue_tuple(&t).unwrap(), idx);
        }
    }

    #[test]
    fn combine_inverts_cone_coords() {
        let b = basis(&[&[3, 1], &[-1, 2]]);
        for g in [[0, 0], [1, 2], [-3, 4], [5, -5]] {
            let p = b.combine(&g).unwrap();
            assert_eq!(cone_coords(&b, &p).unwrap(), Some(g.to_vec()));
        }
    }

    #[test]
    fn window_iteration_counts() {
        let w = Window::cube(2, 1);
        assert_eq!(w.points().count(), 9);
        assert_eq!(w.len(), 9);
        let pts: Vec<Point> = w.points().collect();
        assert_eq!(pts[0], vec![-1, -1]);
        assert_eq!(pts[8], vec![1, 1]);
    }

    #[test]
    fn window_rejects_inverted_bounds() {
        assert_eq!(Window::new(vec![1], vec![0]).unwrap_err(), LatticeError::EmptyWindow(0));
    }
}

//! Eventually periodic subsets of `Z^d` and their canonical decomposition.
//!
//! A set is described as `sporadic u (base + cone)` where the cone is
//! `N u_1 + .. + N u_d` over a full-rank period basis. The canonical form
//! makes the description unique for the point set it denotes:
//!
//! * no sporadic point lies in `base + cone`,
//! * no sporadic point `s` satisfies `s + cone` inside the set,
//! * within each residue class the base points form an antichain under the
//!   cone order (none dominates another coordinatewise).
//!
//! Purely finite sets are rejected up front: the base must be nonempty.

use crate::zlattice::{cone_coords, quotient_structure, LatticeError, PeriodBasis, Point, QuotientStructure};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EpsetError {
    #[error("point has {got} coordinates, ambient dimension is {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("base part is empty; purely finite sets are out of scope")]
    EmptyBase,
    #[error("operation requires a canonical set, call canonicalize first")]
    NotCanonical,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Line-numbered failure while reading the text format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

/// Eventually periodic subset of `Z^d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EPSet {
    basis: PeriodBasis,
    sporadic: BTreeSet<Point>,
    base: BTreeSet<Point>,
    canonical: bool,
}

impl EPSet {
    /// Builds a raw, not yet canonical description.
    pub fn new(
        basis: PeriodBasis,
        sporadic: impl IntoIterator<Item = Point>,
        base: impl IntoIterator<Item = Point>,
    ) -> Result<Self, EpsetError> {
        let d = basis.dim();
        let check = |p: &Point| -> Result<(), EpsetError> {
            if p.len() != d {
                return Err(EpsetError::DimensionMismatch { expected: d, got: p.len() });
            }
            Ok(())
        };
        let sporadic: BTreeSet<Point> = sporadic.into_iter().collect();
        let base: BTreeSet<Point> = base.into_iter().collect();
        for p in sporadic.iter().chain(&base) {
            check(p)?;
        }
        if base.is_empty() {
            return Err(EpsetError::EmptyBase);
        }
        Ok(EPSet { basis, sporadic, base, canonical: false })
    }

    pub fn basis(&self) -> &PeriodBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn sporadic(&self) -> &BTreeSet<Point> {
        &self.sporadic
    }

    pub fn base(&self) -> &BTreeSet<Point> {
        &self.base
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical
    }

    /// Point membership in the denoted set.
    pub fn member(&self, x: &[i64]) -> Result<bool, EpsetError> {
        if x.len() != self.dim() {
            return Err(EpsetError::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        if self.sporadic.contains(x) {
            return Ok(true);
        }
        for b in &self.base {
            let diff: Point = x.iter().zip(b).map(|(&p, &q)| p - q).collect();
            if let Some(gamma) = cone_coords(&self.basis, &diff)? {
                if gamma.iter().all(|&g| g >= 0) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Whether `x + cone` lies inside the set.
    ///
    /// Exact decision via the staircase of same-residue base cones: the
    /// difference `(x + cone) \ (base cones)` is finite iff for every axis
    /// there is a base point whose relative cone coordinates vanish off that
    /// axis (a pure power in the monomial-ideal picture); a finite
    /// difference is enumerated inside its bounding box and checked against
    /// `member`, which also accounts for sporadic points.
    pub fn cone_saturates(&self, x: &[i64]) -> Result<bool, EpsetError> {
        if x.len() != self.dim() {
            return Err(EpsetError::DimensionMismatch { expected: self.dim(), got: x.len() });
        }
        let d = self.dim();
        // Generators: t_i = max(0, -c_i) where c = cone coords of x - b for
        // same-residue base points b; the region covered by b is gamma >= t.
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for b in &self.base {
            let diff: Point = x.iter().zip(b).map(|(&p, &q)| p - q).collect();
            if let Some(c) = cone_coords(&self.basis, &diff)? {
                gens.push(c.iter().map(|&ci| (-ci).max(0)).collect());
            }
        }
        // Pure-power bound per axis; absent for some axis means the
        // uncovered staircase is infinite and the finite sporadic part
        // cannot absorb it.
        let mut bound = vec![i64::MAX; d];
        for g in &gens {
            for j in 0..d {
                if g.iter().enumerate().all(|(i, &gi)| i == j || gi == 0) {
                    bound[j] = bound[j].min(g[j]);
                }
            }
        }
        if bound.iter().any(|&b| b == i64::MAX) {
            return Ok(false);
        }
        // Enumerate the box [0, bound_1) x .. x [0, bound_d); only points
        // not covered by a generator can be missing.
        let mut gamma = vec![0i64; d];
        if bound.iter().all(|&b| b == 0) {
            return Ok(true);
        }
        loop {
            let covered = gens.iter().any(|g| gamma.iter().zip(g).all(|(&x, &t)| x >= t));
            if !covered {
                let point = self.point_at(x, &gamma)?;
                if !self.member(&point)? {
                    return Ok(false);
                }
            }
            let mut k = d;
            let mut done = true;
            while k > 0 {
                k -= 1;
                if bound[k] == 0 {
                    gamma[k] = 0;
                    continue;
                }
                gamma[k] += 1;
                if gamma[k] < bound[k] {
                    done = false;
                    break;
                }
                gamma[k] = 0;
            }
            if done {
                break;
            }
        }
        Ok(true)
    }

    fn point_at(&self, x: &[i64], gamma: &[i64]) -> Result<Point, EpsetError> {
        let offset = self.basis.combine(gamma)?;
        Ok(x.iter().zip(&offset).map(|(&a, &b)| a + b).collect())
    }

    /// Canonical form: absorb redundant sporadic points, promote saturating
    /// ones into the base, reduce the base to per-residue antichains.
    ///
    /// Idempotent, and membership-preserving for every point of `Z^d`.
    pub fn canonicalize(&self) -> Result<EPSet, EpsetError> {
        // Promotion is decided against the full point set, which is fixed
        // under all of these rewrites, so one pass suffices.
        let mut base: BTreeSet<Point> = self.base.clone();
        let mut sporadic: BTreeSet<Point> = BTreeSet::new();
        for s in &self.sporadic {
            if self.cone_saturates(s)? {
                base.insert(s.clone());
            } else {
                sporadic.insert(s.clone());
            }
        }
        // Antichain reduction per residue class: drop base points dominated
        // by another base point of the same class.
        let reduced: BTreeSet<Point> = base
            .iter()
            .filter(|b| {
                !base.iter().any(|other| {
                    *other != **b && {
                        let diff: Point =
                            b.iter().zip(other.iter()).map(|(&p, &q)| p - q).collect();
                        matches!(
                            cone_coords(&self.basis, &diff),
                            Ok(Some(g)) if g.iter().all(|&x| x >= 0)
                        )
                    }
                })
            })
            .cloned()
            .collect();
        debug_assert!(!reduced.is_empty());
        Ok(EPSet {
            basis: self.basis.clone(),
            sporadic,
            base: reduced,
            canonical: true,
        })
    }

    /// Translate by `v`; canonicity is preserved.
    pub fn translate(&self, v: &[i64]) -> Result<EPSet, EpsetError> {
        if v.len() != self.dim() {
            return Err(EpsetError::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        let shift = |p: &Point| -> Point { p.iter().zip(v).map(|(&a, &b)| a + b).collect() };
        Ok(EPSet {
            basis: self.basis.clone(),
            sporadic: self.sporadic.iter().map(&shift).collect(),
            base: self.base.iter().map(&shift).collect(),
            canonical: self.canonical,
        })
    }
}

/// Residue-level data of a canonical set: base residues `Q`, the sporadic
/// split `W0` (residues inside `Q`) and `W1` (residues outside), and the
/// periodicity flag.
#[derive(Debug, Clone)]
pub struct ResidueProfile {
    quotient: QuotientStructure,
    q_residues: BTreeSet<usize>,
    w0: Vec<Point>,
    w1: Vec<Point>,
}

impl ResidueProfile {
    pub fn quotient(&self) -> &QuotientStructure {
        &self.quotient
    }

    pub fn q_residues(&self) -> &BTreeSet<usize> {
        &self.q_residues
    }

    /// Sporadic points whose residue lies in `Q`.
    pub fn w0(&self) -> &[Point] {
        &self.w0
    }

    /// Sporadic points whose residue avoids `Q`; these drive existence.
    pub fn w1(&self) -> &[Point] {
        &self.w1
    }

    pub fn w1_residues(&self) -> Result<BTreeSet<usize>, EpsetError> {
        self.w1.iter().map(|p| Ok(self.quotient.project(p)?)).collect()
    }

    pub fn is_periodic(&self) -> bool {
        self.w0.is_empty() && self.w1.is_empty()
    }
}

pub fn residue_profile(w: &EPSet) -> Result<ResidueProfile, EpsetError> {
    if !w.canonical {
        return Err(EpsetError::NotCanonical);
    }
    let quotient = quotient_structure(&w.basis)?;
    let mut q_residues = BTreeSet::new();
    for b in &w.base {
        q_residues.insert(quotient.project(b)?);
    }
    let mut w0 = Vec::new();
    let mut w1 = Vec::new();
    for s in &w.sporadic {
        if q_residues.contains(&quotient.project(s)?) {
            w0.push(s.clone());
        } else {
            w1.push(s.clone());
        }
    }
    Ok(ResidueProfile { quotient, q_residues, w0, w1 })
}

/// Reads the line-oriented text format:
///
/// ```text
/// dim: 2
/// periods: 2 0 ; 0 2
/// sporadic: 0 0
/// base: 1 0
/// ```
///
/// `#` starts a comment, vectors are whitespace-separated integers joined
/// by `;`. The `sporadic` line is optional. The result is a raw set; run
/// [`EPSet::canonicalize`] afterwards.
pub fn parse_epset(text: &str) -> Result<EPSet, ParseError> {
    let mut dim: Option<(usize, usize)> = None;
    let mut periods: Option<(usize, Vec<Point>)> = None;
    let mut sporadic: Option<(usize, Vec<Point>)> = None;
    let mut base: Option<(usize, Vec<Point>)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(':').ok_or_else(|| ParseError {
            line: line_no,
            message: "expected `key: value`".into(),
        })?;
        let err = |message: String| ParseError { line: line_no, message };
        match key.trim() {
            "dim" => {
                if dim.is_some() {
                    return Err(err("duplicate dim directive".into()));
                }
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("invalid dimension `{}`", rest.trim())))?;
                if d == 0 {
                    return Err(err("dimension must be at least 1".into()));
                }
                dim = Some((line_no, d));
            }
            "periods" | "sporadic" | "base" => {
                let (_, d) = dim.ok_or_else(|| {
                    err(format!("`{}` before `dim`", key.trim()))
                })?;
                let mut vecs = Vec::new();
                for chunk in rest.split(';') {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    let v: Vec<i64> = chunk
                        .split_whitespace()
                        .map(|t| {
                            t.parse::<i64>()
                                .map_err(|_| err(format!("invalid integer `{t}`")))
                        })
                        .collect::<Result<_, _>>()?;
                    if v.len() != d {
                        return Err(err(format!(
                            "vector has {} coordinates, dim is {d}",
                            v.len()
                        )));
                    }
                    vecs.push(v);
                }
                let slot = match key.trim() {
                    "periods" => &mut periods,
                    "sporadic" => &mut sporadic,
                    _ => &mut base,
                };
                if slot.is_some() {
                    return Err(err(format!("duplicate {} directive", key.trim())));
                }
                *slot = Some((line_no, vecs));
            }
            other => {
                return Err(err(format!("unknown directive `{other}`")));
            }
        }
    }
    let (_, d) = dim.ok_or_else(|| ParseError { line: 1, message: "missing dim directive".into() })?;
    let (pline, period_vecs) =
        periods.ok_or_else(|| ParseError { line: 1, message: "missing periods directive".into() })?;
    if period_vecs.len() != d {
        return Err(ParseError {
            line: pline,
            message: format!("expected {d} period vectors, got {}", period_vecs.len()),
        });
    }
    let basis = PeriodBasis::new(period_vecs).map_err(|e| ParseError {
        line: pline,
        message: format!("bad period basis: {e}"),
    })?;
    let (bline, base_vecs) =
        base.ok_or_else(|| ParseError { line: 1, message: "missing base directive".into() })?;
    EPSet::new(basis, sporadic.map(|(_, v)| v).unwrap_or_default(), base_vecs).map_err(|e| {
        ParseError { line: bline, message: e.to_string() }
    })
}

/// Writer for the same format; output reparses to an equal description.
pub fn write_epset(w: &EPSet) -> String {
    let fmt_vec = |p: &Point| p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    let fmt_list =
        |ps: &BTreeSet<Point>| ps.iter().map(&fmt_vec).collect::<Vec<_>>().join(" ; ");
    let mut out = String::new();
    out.push_str(&format!("dim: {}\n", w.dim()));
    let cols: Vec<Point> = w.basis.columns().to_vec();
    out.push_str(&format!(
        "periods: {}\n",
        cols.iter().map(&fmt_vec).collect::<Vec<_>>().join(" ; ")
    ));
    if !w.sporadic.is_empty() {
        out.push_str(&format!("sporadic: {}\n", fmt_list(&w.sporadic)));
    }
    out.push_str(&format!("base: {}\n", fmt_list(&w.base)));
    out
}

impl fmt::Display for EPSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_epset(self))
    }
}

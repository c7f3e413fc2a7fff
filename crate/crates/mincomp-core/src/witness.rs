//! Explicit minimal-complement witnesses and window verification.
//!
//! [`build_witness`] replays the streaming greedy from the sufficiency
//! argument over a fixed enumeration of the certificate cosets, producing
//! the kept/removed split for a bounded number of shells. Decisions are
//! final: rerunning with more shells never changes an earlier verdict, so
//! the finite prefix is an honest slice of the infinite witness.
//!
//! [`verify_window`] certifies a core box against a witness: coverage of
//! every point (extending the greedy adaptively when a cover lies beyond
//! the materialized shells) and a per-point minimality witness for every
//! kept point in the box.
//!
//! [`BeamSet`] holds downward rays used as structured complements of the
//! positive cone; [`drop_finite`] implements the fact that removing
//! finitely many points from such a complement leaves a complement.

use crate::decide::{quotient_group, residue_subset, subset_residues, DecideError};
use crate::epsets::{residue_profile, EPSet, EpsetError, ParseError};
use crate::finitegrp::{check_pair_certificate, PairCertificate};
use crate::zlattice::{
    cone_coords, quotient_structure, LatticeError, PeriodBasis, Point, QuotientStructure, Window,
};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// Extra shells `verify_window` may materialize beyond the witness depth.
pub const SHELL_EXPANSION_CAP: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("certificate does not satisfy the sufficient conditions for this set")]
    InvalidCertificate,
    #[error("shell count must be nonnegative, got {0}")]
    NegativeShells(i64),
    #[error("witness was built over a different period basis")]
    MismatchedWitness,
    #[error("coverage search for {point:?} exhausted the shell budget {cap}")]
    ShellCapExceeded { point: Point, cap: i64 },
    #[error("kept point {0:?} has no minimality witness")]
    MinimalityWitnessMissing(Point),
    #[error("beam {index} is malformed: direction must have strictly positive cone-coordinates")]
    MalformedBeam { index: usize },
    #[error(transparent)]
    Epset(#[from] EpsetError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Decide(#[from] DecideError),
}

fn add(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(&x, &y)| x + y).collect()
}

fn sub(a: &[i64], b: &[i64]) -> Point {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

/// Finite slice of the greedy witness `M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessComplement {
    certificate: PairCertificate,
    basis: PeriodBasis,
    residues: Vec<Point>,
    shells_processed: i64,
    kept: BTreeSet<Point>,
    removed: BTreeSet<Point>,
}

impl WitnessComplement {
    pub fn certificate(&self) -> &PairCertificate {
        &self.certificate
    }

    pub fn basis(&self) -> &PeriodBasis {
        &self.basis
    }

    /// Canonical lifts of the certificate residues, in residue order.
    pub fn residues(&self) -> &[Point] {
        &self.residues
    }

    pub fn shells_processed(&self) -> i64 {
        self.shells_processed
    }

    pub fn kept(&self) -> &BTreeSet<Point> {
        &self.kept
    }

    pub fn removed(&self) -> &BTreeSet<Point> {
        &self.removed
    }

    /// Test mutator: forget a kept point without recording a removal.
    /// Produces a deliberately broken witness for negative controls.
    pub fn corrupt_drop_kept(&mut self, p: &[i64]) -> bool {
        self.kept.remove(p)
    }
}

/// Shared residue bookkeeping for the greedy and the verifier.
struct WitnessContext {
    basis: PeriodBasis,
    quotient: QuotientStructure,
    dim: usize,
    /// Certificate residue indices, ascending; `lifts[i]` lifts `n_residues[i]`.
    n_residues: Vec<usize>,
    lifts: Vec<Point>,
    n_set: BTreeSet<usize>,
    nq_set: BTreeSet<usize>,
    w1: Vec<Point>,
    sporadic: Vec<Point>,
    base_by_residue: BTreeMap<usize, Vec<Point>>,
}

fn context(w: &EPSet, cert: &PairCertificate) -> Result<WitnessContext, WitnessError> {
    let profile = residue_profile(w)?;
    let quotient = profile.quotient().clone();
    let group = quotient_group(&quotient).map_err(DecideError::from)?;
    let q = residue_subset(&group, &quotient, profile.q_residues().iter().copied())
        .map_err(DecideError::from)?;
    let q1 = residue_subset(&group, &quotient, profile.w1_residues()?)
        .map_err(DecideError::from)?;
    if q1.is_empty() {
        return Err(WitnessError::InvalidCertificate);
    }
    let valid = check_pair_certificate(&q1, &q, cert)
        .map_err(|_| WitnessError::InvalidCertificate)?;
    if !valid {
        return Err(WitnessError::InvalidCertificate);
    }
    let n_residues: Vec<usize> =
        subset_residues(&quotient, cert.n())?.into_iter().collect();
    let lifts: Vec<Point> = n_residues.iter().map(|&i| quotient.rep(i).clone()).collect();
    let n_set: BTreeSet<usize> = n_residues.iter().copied().collect();
    let mut nq_set = BTreeSet::new();
    for &n in &n_residues {
        for &qr in profile.q_residues() {
            nq_set.insert(quotient.add(n, qr));
        }
    }
    let mut base_by_residue: BTreeMap<usize, Vec<Point>> = BTreeMap::new();
    for b in w.base() {
        base_by_residue.entry(quotient.project(b)?).or_default().push(b.clone());
    }
    Ok(WitnessContext {
        basis: w.basis().clone(),
        dim: w.dim(),
        n_residues,
        lifts,
        n_set,
        nq_set,
        w1: profile.w1().to_vec(),
        sporadic: w.sporadic().iter().cloned().collect(),
        base_by_residue,
        quotient,
    })
}

/// Cone-coordinate vectors of Chebyshev norm exactly `s`, lexicographic.
fn shell_gammas(dim: usize, s: i64) -> Vec<Vec<i64>> {
    Window::cube(dim, s)
        .points()
        .filter(|g| g.iter().map(|x| x.abs()).max() == Some(s))
        .collect()
}

enum Coverage {
    Covered,
    Failed,
    NeedsDepth,
}

/// Incremental greedy over the global enumeration of `C`: shells by
/// maximum absolute cone-coordinate, lexicographic within a shell,
/// certificate residues innermost. The prefix property of this order is
/// what makes decisions stable under extension.
struct GreedyState {
    ctx: WitnessContext,
    kept: BTreeSet<Point>,
    removed: BTreeSet<Point>,
    depth: i64,
    /// Per-certificate-residue antichain of minimal kept cone-coordinates.
    minimal: BTreeMap<usize, Vec<Vec<i64>>>,
    minimal_dirty: bool,
}

impl GreedyState {
    fn fresh(ctx: WitnessContext) -> Self {
        GreedyState {
            ctx,
            kept: BTreeSet::new(),
            removed: BTreeSet::new(),
            depth: -1,
            minimal: BTreeMap::new(),
            minimal_dirty: true,
        }
    }

    fn resume(ctx: WitnessContext, wit: &WitnessComplement) -> Self {
        GreedyState {
            ctx,
            kept: wit.kept.clone(),
            removed: wit.removed.clone(),
            depth: wit.shells_processed,
            minimal: BTreeMap::new(),
            minimal_dirty: true,
        }
    }

    /// Residue membership in `C` (certificate cosets).
    fn in_c(&self, y: &[i64]) -> Result<bool, WitnessError> {
        Ok(self.ctx.n_set.contains(&self.ctx.quotient.project(y)?))
    }

    /// Residue membership in `C'` (cosets not reached by `N + Q`).
    fn in_cprime(&self, y: &[i64]) -> Result<bool, WitnessError> {
        Ok(!self.ctx.nq_set.contains(&self.ctx.quotient.project(y)?))
    }

    /// Position in `n_residues` and cone-coordinates of a point of `C`.
    fn fibre_coords(&self, m: &[i64]) -> Result<(usize, Vec<i64>), WitnessError> {
        let r = self.ctx.quotient.project(m)?;
        let pos = self
            .ctx
            .n_residues
            .binary_search(&r)
            .expect("fibre_coords called off the certificate cosets");
        let gamma = cone_coords(&self.ctx.basis, &sub(m, &self.ctx.lifts[pos]))?
            .expect("certificate coset offsets are lattice vectors");
        Ok((pos, gamma))
    }

    fn shell_of(&self, m: &[i64]) -> Result<i64, WitnessError> {
        let (_, gamma) = self.fibre_coords(m)?;
        Ok(gamma.iter().map(|x| x.abs()).max().unwrap_or(0))
    }

    /// One greedy decision; `c` must be the next point in enumeration order.
    fn decide_point(&mut self, c: Point) -> Result<(), WitnessError> {
        let mut blocked = false;
        for w in &self.ctx.w1 {
            let x = add(&c, w);
            if !self.in_cprime(&x)? {
                continue;
            }
            let mut sole = true;
            for w2 in &self.ctx.w1 {
                let y = sub(&x, w2);
                if y == c {
                    continue;
                }
                if self.in_c(&y)? && !self.removed.contains(&y) {
                    sole = false;
                    break;
                }
            }
            if sole {
                blocked = true;
                break;
            }
        }
        if blocked {
            self.kept.insert(c);
        } else {
            self.removed.insert(c);
        }
        self.minimal_dirty = true;
        Ok(())
    }

    fn extend_to(&mut self, target: i64) -> Result<(), WitnessError> {
        while self.depth < target {
            let s = self.depth + 1;
            for gamma in shell_gammas(self.ctx.dim, s) {
                let offset = self.ctx.basis.combine(&gamma)?;
                for i in 0..self.ctx.lifts.len() {
                    let c = add(&self.ctx.lifts[i], &offset);
                    self.decide_point(c)?;
                }
            }
            self.depth = s;
        }
        Ok(())
    }

    fn rebuild_minimal(&mut self) -> Result<(), WitnessError> {
        if !self.minimal_dirty {
            return Ok(());
        }
        let mut per_fibre: BTreeMap<usize, Vec<Vec<i64>>> = BTreeMap::new();
        for m in &self.kept {
            let r = self.ctx.quotient.project(m)?;
            let pos = self
                .ctx
                .n_residues
                .binary_search(&r)
                .expect("kept points live on certificate cosets");
            let gamma = cone_coords(&self.ctx.basis, &sub(m, &self.ctx.lifts[pos]))?
                .expect("certificate coset offsets are lattice vectors");
            per_fibre.entry(pos).or_default().push(gamma);
        }
        // A dominating point is lexicographically later, so one ascending
        // pass against the collected minima is enough.
        let mut minimal = BTreeMap::new();
        for (pos, mut gammas) in per_fibre {
            gammas.sort();
            let mut mins: Vec<Vec<i64>> = Vec::new();
            for g in gammas {
                if !mins.iter().any(|m| m.iter().zip(&g).all(|(&a, &b)| a <= b)) {
                    mins.push(g);
                }
            }
            minimal.insert(pos, mins);
        }
        self.minimal = minimal;
        self.minimal_dirty = false;
        Ok(())
    }

    /// Coverage status of one target point at the current depth.
    ///
    /// `Failed` is only returned when it is definitive: the target's
    /// residue rules out the cone route and every sporadic-route candidate
    /// is decided. Anything still undecided reports `NeedsDepth`.
    fn coverage(&mut self, x: &Point) -> Result<Coverage, WitnessError> {
        self.rebuild_minimal()?;
        let rx = self.ctx.quotient.project(x)?;
        let mut pending = false;
        for s in &self.ctx.sporadic {
            let m = sub(x, s);
            if !self.in_c(&m)? {
                continue;
            }
            if self.kept.contains(&m) {
                return Ok(Coverage::Covered);
            }
            if self.shell_of(&m)? > self.depth {
                pending = true;
            }
        }
        if self.ctx.nq_set.contains(&rx) {
            for (i, &n) in self.ctx.n_residues.iter().enumerate() {
                let need_q = self.ctx.quotient.add(rx, self.ctx.quotient.neg(n));
                let Some(bases) = self.ctx.base_by_residue.get(&need_q) else { continue };
                for b in bases {
                    let delta = cone_coords(&self.ctx.basis, &sub(&sub(x, &self.ctx.lifts[i]), b))?
                        .expect("matched residues difference is a lattice vector");
                    if let Some(mins) = self.minimal.get(&i) {
                        if mins.iter().any(|g| g.iter().zip(&delta).all(|(&a, &d)| a <= d)) {
                            return Ok(Coverage::Covered);
                        }
                    }
                }
            }
            // Deeper shells add lower kept points on these cosets.
            pending = true;
        }
        Ok(if pending { Coverage::NeedsDepth } else { Coverage::Failed })
    }

    /// First `x` in `(m + W1) ∩ C'` whose other preimages under `W1` are
    /// all decided-removed; such an `x` is uncovered once `m` goes.
    fn minimality_witness(&self, m: &Point) -> Result<Option<Point>, WitnessError> {
        for w in &self.ctx.w1 {
            let x = add(m, w);
            if !self.in_cprime(&x)? {
                continue;
            }
            let mut sole = true;
            for w2 in &self.ctx.w1 {
                let y = sub(&x, w2);
                if y == *m {
                    continue;
                }
                if self.in_c(&y)? && !self.removed.contains(&y) {
                    sole = false;
                    break;
                }
            }
            if sole {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }
}

/// Replays the greedy for shells `0..=shells`.
pub fn build_witness(
    w: &EPSet,
    cert: &PairCertificate,
    shells: i64,
) -> Result<WitnessComplement, WitnessError> {
    if shells < 0 {
        return Err(WitnessError::NegativeShells(shells));
    }
    let ctx = context(w, cert)?;
    let mut state = GreedyState::fresh(ctx);
    state.extend_to(shells)?;
    Ok(WitnessComplement {
        certificate: cert.clone(),
        basis: state.ctx.basis.clone(),
        residues: state.ctx.lifts.clone(),
        shells_processed: shells,
        kept: state.kept,
        removed: state.removed,
    })
}

/// Window verification result. `failures` lists uncovered core points in
/// iteration order; `minimality_witnesses` maps each kept core point to
/// an exhibited point it alone covers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowReport {
    pub covered: usize,
    pub failures: Vec<Point>,
    pub minimality_ok: bool,
    pub minimality_witnesses: BTreeMap<Point, Point>,
    pub shells_used: i64,
}

impl WindowReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.minimality_ok
    }

    /// Stable key=value line for scripting.
    pub fn machine_line(&self) -> String {
        format!(
            "covered={} failures={} minimality_ok={}",
            self.covered,
            self.failures.len(),
            self.minimality_ok
        )
    }
}

impl fmt::Display for WindowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "coverage: {} ok, {} failed; minimality: {}; shells used: {}",
            self.covered,
            self.failures.len(),
            if self.minimality_ok { "ok" } else { "FAILED" },
            self.shells_used
        )?;
        for p in &self.failures {
            writeln!(f, "uncovered: {}", fmt_point(p))?;
        }
        Ok(())
    }
}

fn fmt_point(p: &[i64]) -> String {
    p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

/// Certifies a core box against a theorem-backed witness.
///
/// Coverage may extend the greedy up to [`SHELL_EXPANSION_CAP`] shells
/// past the witness depth; exhausting the budget with candidates still
/// undecided is an error, a definitively uncovered point is reported.
/// A missing minimality witness is an error only when coverage is
/// otherwise clean; with coverage failures present the report carries
/// `minimality_ok` instead, so negative controls still get a report.
pub fn verify_window(
    w: &EPSet,
    wit: &WitnessComplement,
    core: &Window,
) -> Result<WindowReport, WitnessError> {
    let ctx = context(w, &wit.certificate)?;
    if core.dim() != ctx.dim {
        return Err(EpsetError::DimensionMismatch { expected: ctx.dim, got: core.dim() }.into());
    }
    if wit.basis != ctx.basis {
        return Err(WitnessError::MismatchedWitness);
    }
    let cap = wit.shells_processed + SHELL_EXPANSION_CAP;
    let mut state = GreedyState::resume(ctx, wit);
    let mut covered = 0usize;
    let mut failures = Vec::new();
    for x in core.points() {
        loop {
            match state.coverage(&x)? {
                Coverage::Covered => {
                    covered += 1;
                    break;
                }
                Coverage::Failed => {
                    failures.push(x.clone());
                    break;
                }
                Coverage::NeedsDepth => {
                    if state.depth >= cap {
                        return Err(WitnessError::ShellCapExceeded { point: x.clone(), cap });
                    }
                    let next = state.depth + 1;
                    state.extend_to(next)?;
                }
            }
        }
    }
    let kept_in_core: Vec<Point> =
        state.kept.iter().filter(|m| core.contains(m)).cloned().collect();
    let mut minimality_witnesses = BTreeMap::new();
    let mut missing = Vec::new();
    for m in kept_in_core {
        match state.minimality_witness(&m)? {
            Some(x) => {
                minimality_witnesses.insert(m, x);
            }
            None => missing.push(m),
        }
    }
    if failures.is_empty() {
        if let Some(m) = missing.first() {
            return Err(WitnessError::MinimalityWitnessMissing(m.clone()));
        }
    }
    Ok(WindowReport {
        covered,
        failures,
        minimality_ok: missing.is_empty(),
        minimality_witnesses,
        shells_used: state.depth,
    })
}

/// Window report for a user-supplied complement candidate: plain set
/// arithmetic against the given kept points, no greedy backing and no
/// global guarantee. Shortfalls are reported, never raised as errors.
pub fn user_window_report(
    w: &EPSet,
    kept: &BTreeSet<Point>,
    core: &Window,
) -> Result<WindowReport, WitnessError> {
    let profile = residue_profile(w)?;
    let quotient = profile.quotient();
    if core.dim() != w.dim() {
        return Err(EpsetError::DimensionMismatch { expected: w.dim(), got: core.dim() }.into());
    }
    let mut n_set = BTreeSet::new();
    for m in kept {
        if m.len() != w.dim() {
            return Err(
                EpsetError::DimensionMismatch { expected: w.dim(), got: m.len() }.into()
            );
        }
        n_set.insert(quotient.project(m)?);
    }
    let mut nq_set = BTreeSet::new();
    for &n in &n_set {
        for &q in profile.q_residues() {
            nq_set.insert(quotient.add(n, q));
        }
    }
    let covers = |x: &Point| -> Result<bool, WitnessError> {
        for s in w.sporadic() {
            if kept.contains(&sub(x, s)) {
                return Ok(true);
            }
        }
        for m in kept {
            let diff = sub(x, m);
            for b in w.base() {
                if let Some(g) = cone_coords(w.basis(), &sub(&diff, b))? {
                    if g.iter().all(|&c| c >= 0) {
                        return Ok(true);
                    }
                }
            }
        }
        Ok(false)
    };
    let mut covered = 0usize;
    let mut failures = Vec::new();
    for x in core.points() {
        if covers(&x)? {
            covered += 1;
        } else {
            failures.push(x);
        }
    }
    let w1 = profile.w1();
    let mut minimality_witnesses = BTreeMap::new();
    let mut minimality_ok = true;
    for m in kept.iter().filter(|m| core.contains(m)) {
        let mut found = None;
        for wp in w1 {
            let x = add(m, wp);
            if nq_set.contains(&quotient.project(&x)?) {
                continue;
            }
            let sole = w1.iter().all(|w2| {
                let y = sub(&x, w2);
                y == *m || !kept.contains(&y)
            });
            if sole {
                found = Some(x);
                break;
            }
        }
        match found {
            Some(x) => {
                minimality_witnesses.insert(m.clone(), x);
            }
            None => minimality_ok = false,
        }
    }
    Ok(WindowReport {
        covered,
        failures,
        minimality_ok,
        minimality_witnesses,
        shells_used: 0,
    })
}

/// Witness dump: one point per line, `K` for kept, `R` for removed.
pub fn write_witness_dump(wit: &WitnessComplement) -> String {
    let mut out = String::new();
    for p in &wit.kept {
        out.push_str(&format!("K {}\n", fmt_point(p)));
    }
    for p in &wit.removed {
        out.push_str(&format!("R {}\n", fmt_point(p)));
    }
    out
}

/// Reads a dump back into kept/removed point sets. `#` starts a comment.
pub fn parse_witness_dump(text: &str) -> Result<(BTreeSet<Point>, BTreeSet<Point>), ParseError> {
    let mut kept = BTreeSet::new();
    let mut removed = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let tag = parts.next().unwrap_or("");
        let coords: Vec<i64> = parts
            .map(|t| {
                t.parse::<i64>().map_err(|_| ParseError {
                    line: line_no,
                    message: format!("invalid integer `{t}`"),
                })
            })
            .collect::<Result<_, _>>()?;
        if coords.is_empty() {
            return Err(ParseError { line: line_no, message: "missing coordinates".into() });
        }
        match tag {
            "K" => {
                kept.insert(coords);
            }
            "R" => {
                removed.insert(coords);
            }
            other => {
                return Err(ParseError {
                    line: line_no,
                    message: format!("expected `K` or `R`, got `{other}`"),
                });
            }
        }
    }
    Ok((kept, removed))
}

/// Downward ray `{apex - t * direction : t in N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Beam {
    pub apex: Point,
    pub direction: Point,
}

/// Finite points plus beams, a structured candidate complement of the
/// positive cone of `basis`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeamSet {
    pub basis: PeriodBasis,
    pub finite_part: BTreeSet<Point>,
    pub beams: Vec<Beam>,
}

impl BeamSet {
    /// All points inside the window: finite part plus truncated beams.
    pub fn points_in(&self, win: &Window) -> BTreeSet<Point> {
        let mut out: BTreeSet<Point> =
            self.finite_part.iter().filter(|p| win.contains(p)).cloned().collect();
        for beam in &self.beams {
            // apex - t*dir stays in the box for t in one interval.
            let mut t_lo = 0i64;
            let mut t_hi = i64::MAX;
            let mut feasible = true;
            for i in 0..win.dim() {
                let (a, v) = (beam.apex[i], beam.direction[i]);
                let (lo, hi) = (win.lo()[i], win.hi()[i]);
                if v == 0 {
                    if a < lo || a > hi {
                        feasible = false;
                        break;
                    }
                    continue;
                }
                // lo <= a - t*v <= hi
                let (num_lo, num_hi) = (a - hi, a - lo);
                let (mut lo_t, mut hi_t) = if v > 0 {
                    (div_ceil(num_lo, v), div_floor(num_hi, v))
                } else {
                    (div_ceil(num_hi, v), div_floor(num_lo, v))
                };
                if lo_t > hi_t {
                    std::mem::swap(&mut lo_t, &mut hi_t);
                }
                t_lo = t_lo.max(lo_t);
                t_hi = t_hi.min(hi_t);
            }
            if !feasible {
                continue;
            }
            let mut t = t_lo.max(0);
            while t <= t_hi {
                let p: Point = beam
                    .apex
                    .iter()
                    .zip(&beam.direction)
                    .map(|(&a, &v)| a - t * v)
                    .collect();
                if win.contains(&p) {
                    out.insert(p);
                }
                t += 1;
            }
        }
        out
    }
}

fn div_floor(a: i64, b: i64) -> i64 {
    let q = a / b;
    if (a % b != 0) && ((a < 0) != (b < 0)) {
        q - 1
    } else {
        q
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -div_floor(-a, b)
}

/// Whether the beams complement the cone: every residue of the quotient
/// must lie on some beam's residue orbit. The finite part never matters
/// to the verdict, which is the point of [`drop_finite`].
pub fn beam_complement_check(m: &BeamSet) -> Result<bool, WitnessError> {
    let quotient = quotient_structure(&m.basis)?;
    let dim = m.basis.dim();
    for (index, beam) in m.beams.iter().enumerate() {
        if beam.apex.len() != dim || beam.direction.len() != dim {
            return Err(WitnessError::MalformedBeam { index });
        }
        match cone_coords(&m.basis, &beam.direction)? {
            Some(g) if g.iter().all(|&c| c >= 1) => {}
            _ => return Err(WitnessError::MalformedBeam { index }),
        }
    }
    let mut hit = BTreeSet::new();
    for beam in &m.beams {
        let back = quotient.neg(quotient.project(&beam.direction)?);
        let mut r = quotient.project(&beam.apex)?;
        for _ in 0..quotient.order() {
            hit.insert(r);
            r = quotient.add(r, back);
        }
    }
    Ok(hit.len() == quotient.order())
}

fn beam_offset(beam: &Beam, p: &[i64]) -> Option<i64> {
    // apex - t*dir = p with integral t >= 0.
    let pivot = beam.direction.iter().position(|&v| v != 0)?;
    let num = beam.apex[pivot] - p[pivot];
    let den = beam.direction[pivot];
    if num % den != 0 {
        return None;
    }
    let t = num / den;
    if t < 0 {
        return None;
    }
    let consistent = beam
        .apex
        .iter()
        .zip(&beam.direction)
        .zip(p)
        .all(|((&a, &v), &x)| a - t * v == x);
    if consistent {
        Some(t)
    } else {
        None
    }
}

/// Removes finitely many points: beam hits truncate the beam into kept
/// fragments plus a tail starting past the deepest hit. Residue orbits
/// are purely periodic, so the tail hits the same residues and the
/// complement property survives.
pub fn drop_finite(m: &BeamSet, f: &BTreeSet<Point>) -> BeamSet {
    let mut finite_part: BTreeSet<Point> = m.finite_part.difference(f).cloned().collect();
    let mut beams = Vec::new();
    for beam in &m.beams {
        let hits: BTreeSet<i64> = f.iter().filter_map(|p| beam_offset(beam, p)).collect();
        let Some(&t_max) = hits.iter().next_back() else {
            beams.push(beam.clone());
            continue;
        };
        for t in 0..t_max {
            if !hits.contains(&t) {
                let p: Point = beam
                    .apex
                    .iter()
                    .zip(&beam.direction)
                    .map(|(&a, &v)| a - t * v)
                    .collect();
                finite_part.insert(p);
            }
        }
        let apex: Point = beam
            .apex
            .iter()
            .zip(&beam.direction)
            .map(|(&a, &v)| a - (t_max + 1) * v)
            .collect();
        beams.push(Beam { apex, direction: beam.direction.clone() });
    }
    BeamSet { basis: m.basis.clone(), finite_part, beams }
}

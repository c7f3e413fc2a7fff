//! Named example families: generators for the eventually periodic sets
//! with known decisions, plus the non-eventually-periodic predicate sets
//! (diagonal, coordinate hyperplanes, polynomial images) that feed the
//! window oracles.
//!
//! Axis parameters follow the families' own convention: `i` is 1-based,
//! `1 <= i <= d`.

use crate::epsets::{EPSet, EpsetError};
use crate::zlattice::{LatticeError, PeriodBasis, Point, Window};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GalleryError {
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("input violates the required form: {0}")]
    FormViolation(String),
    #[error(transparent)]
    Epset(#[from] EpsetError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn bad(msg: impl Into<String>) -> GalleryError {
    GalleryError::BadParams(msg.into())
}

/// Columns `k * e_1, ..., k * e_d`.
fn scaled_identity(d: usize, k: i64) -> Result<PeriodBasis, LatticeError> {
    let cols = (0..d)
        .map(|j| (0..d).map(|r| if r == j { k } else { 0 }).collect())
        .collect();
    PeriodBasis::new(cols)
}

fn unit(d: usize, i: usize, scale: i64) -> Point {
    (0..d).map(|r| if r + 1 == i { scale } else { 0 }).collect()
}

/// The three generator families of infinite sets with a minimal
/// complement: origin plus a translated cone part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfiniteFamily {
    /// `{0} ⊔ ({e_i, ..., (k-1) e_i} + cone(k e_1, ..., k e_d))`.
    /// The union of residues is the cyclic subgroup generated by `e_i`
    /// mod `k`, so a transversal certificate always exists. `k = 1`
    /// degenerates to an empty base and is rejected.
    Ladder { k: i64, i: usize },
    /// `{0} ⊔ ({e_i} + cone(2 e_1, ..., 2 e_d))`: singleton sporadic
    /// and base residues in an elementary 2-group quotient.
    SingleOffset { i: usize },
    /// `{0} ⊔ (F + cone(2 e_1, ..., 2 e_d))` with `|F| = 2^d - 2`,
    /// residues mod 2 pairwise distinct and all nonzero, so exactly one
    /// residue class is missed by `{0} ∪ F`.
    MissingPair { f: Vec<Point> },
}

/// Instantiates one family member in dimension `d`. Every output
/// decides to `Exists`.
pub fn example_infinite(family: &InfiniteFamily, d: usize) -> Result<EPSet, GalleryError> {
    if d == 0 {
        return Err(bad("dimension must be positive"));
    }
    let origin = vec![0i64; d];
    let set = match family {
        InfiniteFamily::Ladder { k, i } => {
            if *i < 1 || *i > d {
                return Err(bad(format!("axis {i} out of range 1..={d}")));
            }
            if *k < 2 {
                return Err(bad(format!(
                    "rung count k={k} leaves no base points; the family needs k >= 2"
                )));
            }
            let basis = scaled_identity(d, *k)?;
            let base = (1..*k).map(|j| unit(d, *i, j));
            EPSet::new(basis, [origin], base)?
        }
        InfiniteFamily::SingleOffset { i } => {
            if *i < 1 || *i > d {
                return Err(bad(format!("axis {i} out of range 1..={d}")));
            }
            let basis = scaled_identity(d, 2)?;
            EPSet::new(basis, [origin], [unit(d, *i, 1)])?
        }
        InfiniteFamily::MissingPair { f } => {
            if d < 2 {
                return Err(bad("this family needs dimension >= 2"));
            }
            let want = (1usize << d) - 2;
            if f.len() != want {
                return Err(bad(format!("need exactly {want} base points, got {}", f.len())));
            }
            let mut residues = BTreeSet::new();
            for p in f {
                if p.len() != d {
                    return Err(bad(format!("point {p:?} has wrong dimension")));
                }
                let r: Vec<i64> = p.iter().map(|c| c.rem_euclid(2)).collect();
                if r.iter().all(|&c| c == 0) {
                    return Err(bad(format!(
                        "point {p:?} shares the origin's residue class mod 2"
                    )));
                }
                if !residues.insert(r) {
                    return Err(bad(format!("point {p:?} repeats a residue class mod 2")));
                }
            }
            let basis = scaled_identity(d, 2)?;
            EPSet::new(basis, [origin], f.iter().cloned())?
        }
    };
    Ok(set.canonicalize()?)
}

/// Window slices of the diagonal line `D = {(n, ..., n)}` and the
/// hyperplane `H_i = {x : x_i = 0}`, for oracle-side verification.
///
/// `D` itself is not eventually periodic (its distant points have no
/// room for a full-rank cone), so there is no `EPSet` for it; windows
/// are the only exact finite description here.
pub fn diagonal_hyperplane_windows(
    d: usize,
    i: usize,
    window: &Window,
) -> Result<(Vec<Point>, Vec<Point>), GalleryError> {
    if d < 2 {
        return Err(bad("diagonal examples need dimension >= 2"));
    }
    if i < 1 || i > d {
        return Err(bad(format!("axis {i} out of range 1..={d}")));
    }
    if window.dim() != d {
        return Err(bad(format!(
            "window dimension {} does not match d={d}",
            window.dim()
        )));
    }
    let n_lo = window.lo().iter().copied().max().unwrap();
    let n_hi = window.hi().iter().copied().min().unwrap();
    let diagonal: Vec<Point> = (n_lo..=n_hi).map(|n| vec![n; d]).collect();
    let mut lo = window.lo().to_vec();
    let mut hi = window.hi().to_vec();
    let hyperplane = if lo[i - 1] <= 0 && 0 <= hi[i - 1] {
        lo[i - 1] = 0;
        hi[i - 1] = 0;
        Window::new(lo, hi)?.points().collect()
    } else {
        Vec::new()
    };
    Ok((diagonal, hyperplane))
}

/// Integer-coefficient polynomial in `vars` variables, stored as
/// monomials `(coefficient, exponent vector)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: Vec<(i64, Vec<u32>)>,
}

impl Polynomial {
    pub fn new(vars: usize, terms: Vec<(i64, Vec<u32>)>) -> Result<Polynomial, GalleryError> {
        let mut merged: Vec<(Vec<u32>, i64)> = Vec::new();
        for (c, e) in terms {
            if e.len() != vars {
                return Err(bad(format!(
                    "monomial exponent vector {e:?} does not have {vars} entries"
                )));
            }
            match merged.iter_mut().find(|(me, _)| *me == e) {
                Some((_, mc)) => *mc += c,
                None => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| *c != 0);
        merged.sort();
        Ok(Polynomial { vars, terms: merged.into_iter().map(|(e, c)| (c, e)).collect() })
    }

    pub fn constant(vars: usize, c: i64) -> Polynomial {
        let terms = if c == 0 { Vec::new() } else { vec![(c, vec![0; vars])] };
        Polynomial { vars, terms }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Exact evaluation; `None` when an intermediate leaves `i64` range.
    pub fn eval(&self, x: &[i64]) -> Option<i64> {
        assert_eq!(x.len(), self.vars, "evaluation point has wrong arity");
        let mut acc: i128 = 0;
        for (c, exps) in &self.terms {
            let mut term: i128 = *c as i128;
            for (&xi, &e) in x.iter().zip(exps) {
                term = term.checked_mul((xi as i128).checked_pow(e)?)?;
            }
            acc = acc.checked_add(term)?;
        }
        i64::try_from(acc).ok()
    }

    /// Parses `3x1^2x2 - x2 + 7`; `n` is an alias for `x1`. Terms are
    /// joined by `+`/`-`, factors optionally by `*`.
    pub fn parse(vars: usize, text: &str) -> Result<Polynomial, GalleryError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty polynomial"));
        }
        let bytes = compact.as_bytes();
        let mut terms = Vec::new();
        let mut pos = 0usize;
        while pos < bytes.len() {
            let mut sign = 1i64;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            if pos >= bytes.len() {
                return Err(bad("trailing sign without a term"));
            }
            let mut coeff: i64 = sign;
            let mut exps = vec![0u32; vars];
            let mut saw_factor = false;
            loop {
                if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let value: i64 = compact[start..pos]
                        .parse()
                        .map_err(|_| bad(format!("coefficient overflow in `{text}`")))?;
                    coeff = coeff
                        .checked_mul(value)
                        .ok_or_else(|| bad(format!("coefficient overflow in `{text}`")))?;
                    saw_factor = true;
                } else if pos < bytes.len() && (bytes[pos] == b'x' || bytes[pos] == b'n') {
                    let var = if bytes[pos] == b'n' {
                        pos += 1;
                        1usize
                    } else {
                        pos += 1;
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if start == pos {
                            return Err(bad("variable needs an index, like `x1`"));
                        }
                        compact[start..pos]
                            .parse::<usize>()
                            .map_err(|_| bad("variable index overflow"))?
                    };
                    if var < 1 || var > vars {
                        return Err(bad(format!("variable x{var} out of range 1..={vars}")));
                    }
                    let mut exp = 1u32;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if start == pos {
                            return Err(bad("exponent needs digits"));
                        }
                        exp = compact[start..pos]
                            .parse()
                            .map_err(|_| bad("exponent overflow"))?;
                    }
                    exps[var - 1] += exp;
                    saw_factor = true;
                } else {
                    break;
                }
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                }
            }
            if !saw_factor {
                return Err(bad(format!(
                    "unexpected character `{}`",
                    &compact[pos..pos + 1]
                )));
            }
            terms.push((coeff, exps));
        }
        Polynomial::new(vars, terms)
    }
}

/// Exact finite evidence about a polynomial image over a domain box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialImageReport {
    /// Image points of the domain box.
    pub points: BTreeSet<Point>,
    /// Values each output coordinate attains over the domain.
    pub coordinate_values: Vec<BTreeSet<i64>>,
    /// Image points on each hyperplane `x_{j+1} = 0`.
    pub hyperplane_slice: Vec<BTreeSet<Point>>,
    /// Whether the hyperplane slice is a singleton: the window-limited
    /// form of the minimality hypothesis. Never a global claim.
    pub minimality_plausible: Vec<bool>,
}

impl PolynomialImageReport {
    /// Window evidence of surjectivity of coordinate `i` (1-based):
    /// every value in `lo..=hi` is attained.
    pub fn values_cover(&self, i: usize, lo: i64, hi: i64) -> bool {
        let hit = &self.coordinate_values[i - 1];
        (lo..=hi).all(|v| hit.contains(&v))
    }
}

/// Evaluates `x -> (f_1(x), ..., f_d(x))` over every point of the
/// domain box and reports the evidence relevant to hyperplane
/// complements of the image.
pub fn polynomial_image(
    polys: &[Polynomial],
    domain: &Window,
) -> Result<PolynomialImageReport, GalleryError> {
    if polys.is_empty() {
        return Err(bad("need at least one coordinate polynomial"));
    }
    for f in polys {
        if f.vars() != domain.dim() {
            return Err(bad(format!(
                "polynomial in {} variables over a {}-dimensional domain",
                f.vars(),
                domain.dim()
            )));
        }
    }
    let d = polys.len();
    let mut points = BTreeSet::new();
    for x in domain.points() {
        let image: Option<Point> = polys.iter().map(|f| f.eval(&x)).collect();
        let image = image.ok_or_else(|| bad("polynomial value overflows 64-bit range"))?;
        points.insert(image);
    }
    let coordinate_values: Vec<BTreeSet<i64>> =
        (0..d).map(|j| points.iter().map(|p| p[j]).collect()).collect();
    let hyperplane_slice: Vec<BTreeSet<Point>> = (0..d)
        .map(|j| points.iter().filter(|p| p[j] == 0).cloned().collect())
        .collect();
    let minimality_plausible = hyperplane_slice.iter().map(|s| s.len() == 1).collect();
    Ok(PolynomialImageReport { points, coordinate_values, hyperplane_slice, minimality_plausible })
}

/// Membership rule of a predicate-defined set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PredicateRule {
    /// All coordinates equal.
    Diagonal,
    /// Coordinate `axis` (1-based) equal to zero.
    Hyperplane { axis: usize },
    /// Image of a domain box under coordinate polynomials; membership
    /// is exact because the domain is finite.
    PolynomialImage { polys: Vec<Polynomial>, domain: Window },
}

/// A set given by an exactly evaluable membership rule rather than a
/// period structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredicateSet {
    dim: usize,
    rule: PredicateRule,
}

impl PredicateSet {
    pub fn diagonal(dim: usize) -> Result<PredicateSet, GalleryError> {
        if dim < 2 {
            return Err(bad("diagonal needs dimension >= 2"));
        }
        Ok(PredicateSet { dim, rule: PredicateRule::Diagonal })
    }

    pub fn hyperplane(dim: usize, axis: usize) -> Result<PredicateSet, GalleryError> {
        if dim < 2 || axis < 1 || axis > dim {
            return Err(bad(format!("axis {axis} out of range 1..={dim}")));
        }
        Ok(PredicateSet { dim, rule: PredicateRule::Hyperplane { axis } })
    }

    pub fn polynomial_image(
        polys: Vec<Polynomial>,
        domain: Window,
    ) -> Result<PredicateSet, GalleryError> {
        let report = polynomial_image(&polys, &domain)?;
        let dim = report.points.iter().next().map_or(polys.len(), |p| p.len());
        Ok(PredicateSet { dim, rule: PredicateRule::PolynomialImage { polys, domain } })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rule(&self) -> &PredicateRule {
        &self.rule
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        if p.len() != self.dim {
            return false;
        }
        match &self.rule {
            PredicateRule::Diagonal => p.windows(2).all(|w| w[0] == w[1]),
            PredicateRule::Hyperplane { axis } => p[axis - 1] == 0,
            PredicateRule::PolynomialImage { polys, domain } => domain
                .points()
                .any(|x| polys.iter().zip(p).all(|(f, &c)| f.eval(&x) == Some(c))),
        }
    }

    pub fn points_in(&self, window: &Window) -> Vec<Point> {
        window.points().filter(|p| self.contains(p)).collect()
    }
}

/// Builds the one-dimensional set `(X_m + mN) ∪ Y0 ∪ Y1` from its
/// residue data: `X_m ⊆ [0, m)` the infinite classes, `Y0` finitely
/// many extra negative points on those classes, `Y1` finitely many
/// points off them. Canonicalization may absorb `Y0` points that
/// complete their class.
pub fn ksy_adapter(
    m: i64,
    x_m: &[i64],
    y0: &[i64],
    y1: &[i64],
) -> Result<EPSet, GalleryError> {
    if m < 1 {
        return Err(GalleryError::FormViolation(format!("modulus {m} must be positive")));
    }
    if x_m.is_empty() {
        return Err(GalleryError::FormViolation(
            "the infinite part X needs at least one residue".into(),
        ));
    }
    let mut classes = BTreeSet::new();
    for &x in x_m {
        if x < 0 || x >= m {
            return Err(GalleryError::FormViolation(format!(
                "class representative {x} outside [0, {m})"
            )));
        }
        classes.insert(x);
    }
    for &y in y0 {
        if y >= 0 {
            return Err(GalleryError::FormViolation(format!(
                "Y0 point {y} is not negative; nonnegative points of its class are periodic"
            )));
        }
        if !classes.contains(&y.rem_euclid(m)) {
            return Err(GalleryError::FormViolation(format!(
                "Y0 point {y} lies off the infinite classes"
            )));
        }
    }
    for &y in y1 {
        if classes.contains(&y.rem_euclid(m)) {
            return Err(GalleryError::FormViolation(format!(
                "Y1 point {y} lies on an infinite class"
            )));
        }
    }
    let basis = PeriodBasis::new(vec![vec![m]])?;
    let sporadic: BTreeSet<Point> =
        y0.iter().chain(y1).map(|&y| vec![y]).collect();
    let base = classes.into_iter().map(|x| vec![x]);
    let set = EPSet::new(basis, sporadic, base)?;
    Ok(set.canonicalize()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decide::{decide, Decision};
    use crate::epsets::residue_profile;
    use crate::oracle::window_cover_check;

    fn decision(w: &EPSet) -> Decision {
        decide(w).unwrap()
    }

    #[test]
    fn ladder_instances() {
        let w = example_infinite(&InfiniteFamily::Ladder { k: 2, i: 1 }, 1).unwrap();
        assert_eq!(w.sporadic().iter().cloned().collect::<Vec<_>>(), vec![vec![0]]);
        assert_eq!(w.base().iter().cloned().collect::<Vec<_>>(), vec![vec![1]]);
        assert!(matches!(decision(&w), Decision::Exists { .. }));

        let w = example_infinite(&InfiniteFamily::Ladder { k: 3, i: 2 }, 2).unwrap();
        assert_eq!(
            w.base().iter().cloned().collect::<Vec<_>>(),
            vec![vec![0, 1], vec![0, 2]]
        );
        assert_eq!(w.basis().columns(), &[vec![3, 0], vec![0, 3]]);
        assert!(matches!(decision(&w), Decision::Exists { .. }));

        assert!(matches!(
            example_infinite(&InfiniteFamily::Ladder { k: 1, i: 1 }, 1),
            Err(GalleryError::BadParams(_))
        ));
        assert!(matches!(
            example_infinite(&InfiniteFamily::Ladder { k: 2, i: 3 }, 2),
            Err(GalleryError::BadParams(_))
        ));
    }

    #[test]
    fn single_offset_matches_expected_profile() {
        let w = example_infinite(&InfiniteFamily::SingleOffset { i: 1 }, 2).unwrap();
        assert_eq!(w.sporadic().iter().cloned().collect::<Vec<_>>(), vec![vec![0, 0]]);
        assert_eq!(w.base().iter().cloned().collect::<Vec<_>>(), vec![vec![1, 0]]);
        let profile = residue_profile(&w).unwrap();
        assert_eq!(profile.quotient().invariant_factors(), &[2, 2]);
        match decision(&w) {
            Decision::Exists { certificate } => {
                // The first certificate in search order pairs the origin
                // with the residue off the base axis.
                let n: Vec<_> = certificate.n().elements().iter().cloned().collect();
                assert_eq!(n, vec![vec![0, 0], vec![0, 1]]);
            }
            other => panic!("expected Exists, got {other:?}"),
        }
    }

    #[test]
    fn missing_pair_family() {
        let f = vec![vec![1, 0], vec![0, 1]];
        let w = example_infinite(&InfiniteFamily::MissingPair { f }, 2).unwrap();
        assert!(matches!(decision(&w), Decision::Exists { .. }));

        // Wrong count.
        assert!(matches!(
            example_infinite(&InfiniteFamily::MissingPair { f: vec![vec![1, 0]] }, 2),
            Err(GalleryError::BadParams(_))
        ));
        // Residue collision mod 2.
        assert!(matches!(
            example_infinite(
                &InfiniteFamily::MissingPair { f: vec![vec![1, 0], vec![3, 0]] },
                2
            ),
            Err(GalleryError::BadParams(_))
        ));
        // Origin's residue class: the sporadic point would stop being
        // sporadic and the construction loses its certificate.
        assert!(matches!(
            example_infinite(
                &InfiniteFamily::MissingPair { f: vec![vec![2, 0], vec![0, 1]] },
                2
            ),
            Err(GalleryError::BadParams(_))
        ));
    }

    #[test]
    fn diagonal_window_counts() {
        let (diag, hyp) = diagonal_hyperplane_windows(2, 1, &Window::cube(2, 3)).unwrap();
        assert_eq!(diag.len(), 7);
        assert_eq!(hyp.len(), 7);
        assert!(diag.contains(&vec![-3, -3]) && diag.contains(&vec![3, 3]));
        assert!(hyp.iter().all(|p| p[0] == 0));
    }

    #[test]
    fn hyperplane_covers_core_through_diagonal() {
        // H_1 windowed with margin covers the core box via the diagonal.
        let d = PredicateSet::diagonal(2).unwrap();
        let (_, hyp) = diagonal_hyperplane_windows(2, 1, &Window::cube(2, 6)).unwrap();
        let hyp: BTreeSet<Point> = hyp.into_iter().collect();
        let gaps = window_cover_check(&hyp, |p| d.contains(p), Window::cube(2, 3).points());
        assert!(gaps.is_empty());

        // Dropping one hyperplane point uncovers the line it alone
        // served: every (t, t+1) had its only representation through
        // (0, 1), the dropped point included.
        let mut pruned = hyp.clone();
        pruned.remove(&vec![0, 1]);
        let gaps = window_cover_check(&pruned, |p| d.contains(p), Window::cube(2, 3).points());
        assert!(gaps.contains(&vec![0, 1]));
        assert!(gaps.iter().all(|p| p[1] == p[0] + 1));
    }

    #[test]
    fn polynomial_parse_and_eval() {
        let f = Polynomial::parse(1, "n^2 - 3n + 1").unwrap();
        assert_eq!(f.eval(&[4]), Some(5));
        let g = Polynomial::parse(2, "2x1*x2 - x2^2").unwrap();
        assert_eq!(g.eval(&[3, 2]), Some(8));
        // Merged and cancelled monomials.
        let z = Polynomial::parse(1, "n - n").unwrap();
        assert_eq!(z, Polynomial::constant(1, 0));
        assert!(Polynomial::parse(1, "x2").is_err());
        assert!(Polynomial::parse(1, "3 +").is_err());
    }

    #[test]
    fn parabola_image_report() {
        let polys = vec![
            Polynomial::parse(1, "n").unwrap(),
            Polynomial::parse(1, "n^2").unwrap(),
        ];
        let report = polynomial_image(&polys, &Window::cube(1, 10)).unwrap();
        assert_eq!(report.points.len(), 21);
        assert!(report.values_cover(1, -10, 10));
        assert!(!report.values_cover(2, -10, 10));
        // Only (0, 0) meets either hyperplane.
        assert_eq!(report.hyperplane_slice[0].len(), 1);
        assert_eq!(report.minimality_plausible, vec![true, true]);
    }

    #[test]
    fn constant_image_is_singleton() {
        let polys = vec![Polynomial::constant(1, 4), Polynomial::constant(1, 2)];
        let report = polynomial_image(&polys, &Window::cube(1, 5)).unwrap();
        assert_eq!(report.points.len(), 1);
        assert!(!report.values_cover(1, -1, 1));
    }

    #[test]
    fn linear_image_is_diagonal_segment() {
        let polys = vec![
            Polynomial::parse(1, "n").unwrap(),
            Polynomial::parse(1, "n").unwrap(),
        ];
        let report = polynomial_image(&polys, &Window::cube(1, 3)).unwrap();
        let diag = PredicateSet::diagonal(2).unwrap();
        assert!(report.points.iter().all(|p| diag.contains(p)));
        assert_eq!(report.points.len(), 7);
    }

    #[test]
    fn predicate_membership() {
        let d = PredicateSet::diagonal(3).unwrap();
        assert!(d.contains(&[2, 2, 2]));
        assert!(!d.contains(&[2, 2, 1]));
        let h = PredicateSet::hyperplane(3, 2).unwrap();
        assert!(h.contains(&[5, 0, -1]));
        assert!(!h.contains(&[5, 1, -1]));
        let s = PredicateSet::polynomial_image(
            vec![Polynomial::parse(1, "n").unwrap(), Polynomial::parse(1, "n^3").unwrap()],
            Window::cube(1, 4),
        )
        .unwrap();
        assert!(s.contains(&[2, 8]));
        assert!(!s.contains(&[2, 9]));
        assert_eq!(s.points_in(&Window::cube(2, 8)).len(), 5);
    }

    #[test]
    fn ksy_round_trips_into_decide() {
        // Half line plus one point of the other parity.
        let w = ksy_adapter(2, &[1], &[], &[0]).unwrap();
        assert_eq!(w.sporadic().iter().cloned().collect::<Vec<_>>(), vec![vec![0]]);
        assert_eq!(w.base().iter().cloned().collect::<Vec<_>>(), vec![vec![1]]);
        assert!(matches!(decision(&w), Decision::Exists { .. }));

        // All classes present: periodic, no minimal complement.
        let w = ksy_adapter(2, &[0, 1], &[], &[]).unwrap();
        assert!(matches!(
            decision(&w),
            Decision::NotExists { reason: crate::decide::NonExistenceReason::Periodic }
        ));

        // A negative point that completes its class is absorbed.
        let w = ksy_adapter(4, &[0], &[-4], &[]).unwrap();
        assert_eq!(w.base().iter().cloned().collect::<Vec<_>>(), vec![vec![-4]]);
        assert!(w.sporadic().is_empty());
        let direct = EPSet::new(
            PeriodBasis::new(vec![vec![4]]).unwrap(),
            [vec![-4]],
            [vec![0]],
        )
        .unwrap()
        .canonicalize()
        .unwrap();
        assert_eq!(decision(&w), decision(&direct));
    }

    #[test]
    fn ksy_rejects_malformed_input() {
        assert!(matches!(ksy_adapter(0, &[0], &[], &[]), Err(GalleryError::FormViolation(_))));
        assert!(matches!(ksy_adapter(2, &[], &[], &[]), Err(GalleryError::FormViolation(_))));
        assert!(matches!(ksy_adapter(2, &[2], &[], &[]), Err(GalleryError::FormViolation(_))));
        // Y0 must be negative and on a class.
        assert!(matches!(ksy_adapter(2, &[1], &[3], &[]), Err(GalleryError::FormViolation(_))));
        assert!(matches!(ksy_adapter(2, &[1], &[-2], &[]), Err(GalleryError::FormViolation(_))));
        // Y1 must avoid the classes.
        assert!(matches!(ksy_adapter(2, &[1], &[], &[3]), Err(GalleryError::FormViolation(_))));
    }
}

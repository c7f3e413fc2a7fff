//! Randomized structural properties: canonicalization is idempotent,
//! membership-preserving and presentation-independent, text output round
//! trips, and the decision procedure is translation invariant.

use mincomp_core::decide::{decide_with, DecideOptions, Decision};
use mincomp_core::epsets::{parse_epset, write_epset, EPSet};
use mincomp_core::witness::{build_witness, verify_window};
use mincomp_core::zlattice::{PeriodBasis, Window};
use proptest::prelude::*;

fn point(d: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-6i64..=6, d)
}

/// Raw sets over a lower-triangular basis with positive diagonal, which is
/// nonsingular by construction.
fn epset(max_dim: usize, max_diag: i64) -> impl Strategy<Value = EPSet> {
    (1..=max_dim).prop_flat_map(move |d| {
        (
            prop::collection::vec(1i64..=max_diag, d),
            prop::collection::vec(-2i64..=2, d * d),
            prop::collection::vec(point(d), 0..=3),
            prop::collection::vec(point(d), 1..=3),
        )
            .prop_map(move |(diag, off, sporadic, base)| {
                let cols: Vec<Vec<i64>> = (0..d)
                    .map(|j| {
                        (0..d)
                            .map(|i| match i.cmp(&j) {
                                std::cmp::Ordering::Equal => diag[j],
                                std::cmp::Ordering::Greater => off[i * d + j],
                                std::cmp::Ordering::Less => 0,
                            })
                            .collect()
                    })
                    .collect();
                EPSet::new(PeriodBasis::new(cols).unwrap(), sporadic, base).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn canonicalize_is_idempotent(w in epset(3, 4)) {
        let c = w.canonicalize().unwrap();
        prop_assert!(c.is_canonical());
        prop_assert_eq!(c.canonicalize().unwrap(), c);
    }

    #[test]
    fn canonicalize_preserves_membership(w in epset(3, 4)) {
        let c = w.canonicalize().unwrap();
        for p in Window::cube(w.dim(), 5).points() {
            prop_assert_eq!(w.member(&p).unwrap(), c.member(&p).unwrap(), "at {:?}", p);
        }
    }

    #[test]
    fn canonicalize_commutes_with_translation(w in epset(3, 4), v in point(3)) {
        let v = &v[..w.dim()];
        let a = w.translate(v).unwrap().canonicalize().unwrap();
        let b = w.canonicalize().unwrap().translate(v).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn dominated_base_points_do_not_matter(w in epset(3, 4), j in 0usize..3) {
        let b0 = w.base().iter().next().unwrap().clone();
        let col = &w.basis().columns()[j % w.dim()];
        let shadow: Vec<i64> = b0.iter().zip(col).map(|(&a, &b)| a + b).collect();
        let mut base: Vec<_> = w.base().iter().cloned().collect();
        base.push(shadow);
        let fat = EPSet::new(
            w.basis().clone(),
            w.sporadic().iter().cloned(),
            base,
        ).unwrap();
        prop_assert_eq!(fat.canonicalize().unwrap(), w.canonicalize().unwrap());
    }

    #[test]
    fn text_format_round_trips(w in epset(3, 4)) {
        let c = w.canonicalize().unwrap();
        let reparsed = parse_epset(&write_epset(&c)).unwrap();
        prop_assert_eq!(reparsed.canonicalize().unwrap(), c);
    }

    #[test]
    fn decision_is_translation_invariant(w in epset(2, 3), v in point(2)) {
        let v = &v[..w.dim()];
        let options = DecideOptions { cap: 64, ..Default::default() };
        let original = decide_with(&w, &options).unwrap();
        let shifted = decide_with(&w.translate(v).unwrap(), &options).unwrap();
        match (&original, &shifted) {
            (Decision::Exists { certificate: a }, Decision::Exists { certificate: b }) => {
                // The certificate set lives at the residue level and the
                // valid sets are the same after any translation, so the
                // first one found is identical.
                prop_assert_eq!(a.n(), b.n());
            }
            (Decision::NotExists { reason: a }, Decision::NotExists { reason: b }) => {
                prop_assert_eq!(a, b);
            }
            (Decision::Unknown { necessary_certificate: a },
             Decision::Unknown { necessary_certificate: b }) => {
                prop_assert_eq!(a, b);
            }
            (a, b) => prop_assert!(false, "diverged: {:?} vs {:?}", a, b),
        }
    }

    #[test]
    fn witnesses_from_random_decisions_verify(w in epset(2, 3)) {
        let options = DecideOptions { cap: 64, ..Default::default() };
        if let Decision::Exists { certificate } = decide_with(&w, &options).unwrap() {
            let c = w.canonicalize().unwrap();
            let wit = build_witness(&c, &certificate, 6).unwrap();
            let report = verify_window(&c, &wit, &Window::cube(c.dim(), 4)).unwrap();
            prop_assert!(report.passed(), "{}", report);
        }
    }
}

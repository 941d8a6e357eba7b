use std::time::Instant;

use identities::*;
use qalgebra::LaurentPoly;

#[test]
fn default_sweeps() {
    let t = Instant::now();
    for name in [IdentityName::EdZero, IdentityName::Vandermonde, IdentityName::Recurrence] {
        let r = verify_default(name);
        assert!(r.cases > 0, "{name}");
        assert!(r.passed(), "{name}: {} violations, first {:?}", r.violations.len(), r.violations.first());
    }
    eprintln!("identity sweeps took {:?}", t.elapsed());
}

/// The inversion identity holds exactly when `m <= min b` and `m' >= max a`;
/// the default grid reaches past both ends and finds violations there.
#[test]
fn ssprime_violations_lie_outside_the_q_range() {
    let r = verify_default(IdentityName::SsprimeSs);
    assert!(r.cases > 0);
    assert!(!r.violations.is_empty());
    for v in &r.violations {
        let (a, b, m, m2) = ([v[1], v[2]], [v[3], v[4]], v[5], v[6]);
        assert!(m > b[0].min(b[1]) || m2 < a[0].max(a[1]), "{v:?}");
    }
    // smallest counterexample: a single l term with a negative lower index
    assert!(r.violations.contains(&vec![1, -2, -2, -2, -2, -4, -4]));
    assert_eq!(ss_residual(1, [-2, -2], [-2, -2], -4, -4), LaurentPoly::one());
    // every point with m <= min b and m' >= max a passes
    let inside = verify_ssprime_ss(&SsGrid { margin: 0, ..SsGrid::default() });
    assert!(inside.passed());
}

#[test]
fn ed_zero_hexagon() {
    for jstar in -2..=0 {
        assert!(ed_zero_sum(4, &[0, 0, 0], &[1, 1, 1], 3, jstar).is_zero());
    }
}

#[test]
fn ed_zero_empty_range_and_negative_n() {
    // k range empty: lower limit Σb + j* - j exceeds -Σ̌a + 1
    assert_eq!(ed_zero_sum(2, &[0, 0], &[0, 0], 0, 5), LaurentPoly::zero());
    // third binomial has negative top for n <= Σb - Σa - 1
    for n in -4..=1 {
        for j in -3..=3 {
            for jstar in -3..=3 {
                assert!(ed_zero_sum(n, &[0, 0], &[1, 1], j, jstar).is_zero());
            }
        }
    }
}

#[test]
fn ssprime_collapse_at_unit_gap() {
    // n + Σa - Σb = 1
    let (a, b) = ([0, 0], [1, 1]);
    let n = 3;
    for m in -2..=1 {
        for m2 in 0..=4 {
            assert!(ss_residual(n, a, b, m, m2).is_zero(), "m={m} m'={m2}");
        }
    }
}

#[test]
fn ssprime_generic_points() {
    assert!(ss_residual(5, [0, 1], [2, 1], 1, 1).is_zero());
    assert!(ss_residual(5, [0, 1], [2, 1], 1, 2).is_zero());
    assert!(ss_residual(5, [1, 0], [2, 3], 2, 1).is_zero());
    assert!(ss_residual(5, [1, 0], [2, 3], 1, 2).is_zero());
}

#[test]
fn vandermonde_degenerate() {
    for x in 0..=6 {
        for z in -2..=x + 2 {
            assert!(vandermonde_residual(x, 0, z).is_zero());
        }
        assert!(vandermonde_residual(x, 3, -1).is_zero());
    }
    let wide = verify_vandermonde(&VandermondeGrid { max: 5, margin: 2 });
    assert!(wide.passed());
}

#[test]
fn recurrence_base_case_is_excluded() {
    assert_eq!(recurrence_residual(0, 0), LaurentPoly::one());
    assert!(recurrence_residual(1, 0).is_zero());
    assert!(recurrence_residual(12, 6).is_zero());
}

#[test]
fn reports_are_reproducible() {
    let g = EdZeroGrid {
        max_n: 3,
        lengths: vec![2],
        max_entry: 3,
    };
    let r1 = serde_json::to_string(&verify_ed_zero(&g)).unwrap();
    let r2 = serde_json::to_string(&verify_ed_zero(&g)).unwrap();
    assert_eq!(r1, r2);
    let back: IdentityReport = serde_json::from_str(&r1).unwrap();
    assert_eq!(serde_json::to_string(&back).unwrap(), r1);
    assert_eq!("ssprime-ss".parse::<IdentityName>().unwrap(), IdentityName::SsprimeSs);
    assert!("nope".parse::<IdentityName>().is_err());
}

#[test]
fn case_counts() {
    let r = verify_recurrence(&RecurrenceGrid { max: 3 });
    assert_eq!(r.cases, 2 + 3 + 4);
    assert!(r.passed());
}

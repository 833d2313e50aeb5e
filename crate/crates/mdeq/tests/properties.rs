//! Property tests for the exact series ring: distributivity and
//! associativity on random truncated series, the root/power identity on its
//! domain, and wire-format round trips.

use mdeq::qseries::QSeries;
use mdeq::rational::{rat, QRat};
use num::Zero;
use proptest::prelude::*;

fn arb_series() -> impl Strategy<Value = QSeries> {
    // random exact series: denom in {1,2,3}, lead in -3..3, up to 8 terms
    (
        1u32..=3,
        -3i64..3,
        prop::collection::vec((-20i64..20, 1i64..6), 1..8),
    )
        .prop_map(|(denom, lead, pairs)| {
            let coeffs: Vec<QRat> = pairs.iter().map(|&(p, q)| rat(p, q)).collect();
            let reliable = lead + coeffs.len() as i64 - 1;
            let mut s = QSeries::zero(denom, reliable);
            for (k, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    s = s.add(&QSeries::monomial(c.clone(), lead + k as i64, denom, reliable));
                }
            }
            s
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(f in arb_series(), g in arb_series(), h in arb_series()) {
        // (f + g) h = f h + g h, exactly on the stored coefficients
        let lhs = f.add(&g).mul(&h);
        let rhs = f.mul(&h).add(&g.mul(&h));
        prop_assert!(lhs.eq_through_window(&rhs));

        // (f g) h = f (g h)
        let a = f.mul(&g).mul(&h);
        let b = f.mul(&g.mul(&h));
        prop_assert!(a.eq_through_window(&b));
    }

    #[test]
    fn root_then_power_is_identity(f in arb_series(), n in 2u32..4) {
        // restrict to the root's domain: f^n always has an exact n-th root
        // with the sign-preserving branch when n is odd or the leading
        // coefficient of f is positive
        prop_assume!(!f.is_zero());
        let power = f.pow_int(n as i64).unwrap();
        if let Ok(root) = power.nth_root(n) {
            let back = root.pow_int(n as i64).unwrap();
            prop_assert!(back.eq_through_window(&power));
        }
    }

    #[test]
    fn wire_round_trip(f in arb_series()) {
        let js = serde_json::to_string(&f).unwrap();
        let g: QSeries = serde_json::from_str(&js).unwrap();
        prop_assert!(f.eq_through_window(&g));
        // byte-deterministic serialization
        prop_assert_eq!(js.clone(), serde_json::to_string(&g).unwrap());
    }
}

use mvlab_core::interval::{
    intersection_measure, involution_i, j_swap, odot_i0, odot_r0, oplus_i0, oplus_r0, star,
    star_neg, union_measure, IntervalI0, IntervalI1, Lukasiewicz, Rectangle, StarAlgebra, StripRectangle,
    TaggedInterval,
};
use mvlab_core::{check_axiom, run_suite, AxiomId, SamplingStrategy, UnitRational};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn grid(q: u64) -> Vec<UnitRational> {
    (0..=q).map(|i| UnitRational::grid(i, q)).collect()
}

fn pairs(q: u64) -> impl Iterator<Item = (UnitRational, UnitRational)> {
    let g = grid(q);
    let h = g.clone();
    g.into_iter().flat_map(move |a| h.clone().into_iter().map(move |b| (a.clone(), b)))
}

/// `min(1, a + b)` on plain rationals.
fn luk(a: &UnitRational, b: &UnitRational) -> BigRational {
    let s = a.value() + b.value();
    if s > BigRational::one() {
        BigRational::one()
    } else {
        s
    }
}

#[test]
fn trace_is_lukasiewicz() {
    let mut count = 0;
    for (a, b) in pairs(50) {
        let r = oplus_i0(&TaggedInterval::lower(a.clone()), &TaggedInterval::lower(b.clone()));
        assert!(r.is_lower());
        assert_eq!(r.param.value(), &luk(&a, &b));
        count += 1;
    }
    assert_eq!(count, 2601);
}

#[test]
fn overlap_cover_saturation_additivity() {
    let one = BigRational::one();
    for (a, b) in pairs(50) {
        let lower = TaggedInterval::lower(a.clone());
        let upper = TaggedInterval::upper(b.clone());
        let meet = lower.endpoints().intersection(&upper.endpoints());
        let cover = union_measure(&lower, &upper).is_one();
        // overlap <=> cover
        assert_eq!(meet.is_some(), cover, "a={a} b={b}");
        // intersection measure a - (1 - b) when they meet
        if meet.is_some() {
            let expected = a.value() - (&one - b.value());
            assert_eq!(intersection_measure(&lower, &upper).value(), &expected);
        }
        let sum = a.value() + b.value();
        let joined = oplus_i0(&lower, &TaggedInterval::lower(b.clone()));
        assert_eq!(joined.param.is_one(), sum >= one, "saturation a={a} b={b}");
        assert_eq!(joined.param.value() == &sum, sum <= one, "additivity a={a} b={b}");
    }
}

#[test]
fn inclusion_exclusion() {
    for (a, b) in pairs(50) {
        let lower = TaggedInterval::lower(a.clone());
        let upper = TaggedInterval::upper(b.clone());
        let total = union_measure(&lower, &upper).value() + intersection_measure(&lower, &upper).value();
        assert_eq!(total, a.value() + b.value());
    }
}

#[test]
fn odot_is_de_morgan_dual() {
    for (a, b) in pairs(30) {
        let (x, y) = (TaggedInterval::lower(a), TaggedInterval::lower(b));
        let dual = involution_i(&oplus_i0(&involution_i(&x), &involution_i(&y)));
        assert_eq!(odot_i0(&x, &y), dual);
        let s = mvlab_core::derived_odot(&IntervalI0::default(), &x, &y);
        assert_eq!(s, dual);
    }
}

#[test]
fn lukasiewicz_suite_holds() {
    let report = run_suite(&Lukasiewicz, &SamplingStrategy::Grid { q: 20 }, &AxiomId::MV).unwrap();
    assert!(report.all_hold(), "{}", report.to_text());
}

#[test]
fn interval_suites_hold_exactly() {
    for dual in [false, true] {
        for q in [7, 20] {
            let alg = IntervalI0 { dual };
            let report = run_suite(&alg, &SamplingStrategy::Grid { q }, &AxiomId::MV).unwrap();
            assert!(report.all_hold(), "{}", report.to_text());
        }
    }
}

#[test]
fn rectangle_suites_hold_and_match_intervals() {
    for dual in [false, true] {
        let report = run_suite(&Rectangle { dual }, &SamplingStrategy::Grid { q: 20 }, &AxiomId::MV).unwrap();
        assert!(report.all_hold(), "{}", report.to_text());
    }
    for (a, b) in pairs(20) {
        let r = oplus_r0(&StripRectangle::lower(a.clone()), &StripRectangle::lower(b.clone()));
        let i = oplus_i0(&TaggedInterval::lower(a.clone()), &TaggedInterval::lower(b.clone()));
        assert_eq!(r.level, i.param);
        let r = odot_r0(&StripRectangle::lower(a.clone()), &StripRectangle::lower(b.clone()));
        let i = odot_i0(&TaggedInterval::lower(a), &TaggedInterval::lower(b));
        assert_eq!(r.level, i.param);
    }
}

#[test]
fn upper_family_identity_fails() {
    // 0^1 ⊕_1 b^1 = (1 - b)^1, so [1, 1] is not a neutral element
    let v = check_axiom(&IntervalI1, AxiomId::ZeroIdentity, &SamplingStrategy::Grid { q: 10 }).unwrap();
    assert!(!v.holds);
    let report = run_suite(&IntervalI1, &SamplingStrategy::Grid { q: 10 }, &AxiomId::MV).unwrap();
    assert!(report.verdict(AxiomId::NegInvolution).unwrap().holds);
}

#[test]
fn star_negation_swaps_orientation() {
    for t in grid(20) {
        for x in [TaggedInterval::lower(t.clone()), TaggedInterval::upper(t)] {
            let n = star_neg(&x);
            assert_ne!(n.orientation, x.orientation);
            assert_eq!(star_neg(&n), x);
            assert_eq!(n, j_swap(&x));
        }
    }
}

#[test]
fn star_mixed_table() {
    // n^0 ⋆ m^1 = 1 if m <= n, else (1 - (m - n))^1
    for (n, m) in pairs(10) {
        let lhs = star(&TaggedInterval::lower(n.clone()), &TaggedInterval::upper(m.clone()));
        let rhs = star(&TaggedInterval::upper(m.clone()), &TaggedInterval::lower(n.clone()));
        assert_eq!(lhs, rhs);
        if m <= n {
            assert!(lhs.same_set(&TaggedInterval::full()));
        } else {
            let expected = BigRational::one() - (m.value() - n.value());
            assert!(!lhs.is_lower());
            assert_eq!(lhs.param.value(), &expected);
        }
    }
}

#[test]
fn star_probe_shape() {
    let report = run_suite(&StarAlgebra::default(), &SamplingStrategy::Grid { q: 10 }, &AxiomId::MV).unwrap();
    assert!(report.verdict(AxiomId::NegInvolution).unwrap().holds);
    assert!(report.verdict(AxiomId::OneAbsorbing).unwrap().holds);
    let zero = report.verdict(AxiomId::ZeroIdentity).unwrap();
    assert!(!zero.holds);
    let c = zero.find(&["0^0", "3/10^1"]).expect("0^0 ⋆ 3/10^1 listed");
    assert_eq!(c.lhs, "7/10^1");
}

fn unit_rational() -> impl Strategy<Value = UnitRational> {
    (1u64..500).prop_flat_map(|d| (0..=d, Just(d))).prop_map(|(n, d)| UnitRational::grid(n, d))
}

proptest! {
    #[test]
    fn measures_are_preserved(a in unit_rational()) {
        let x = TaggedInterval::lower(a.clone());
        prop_assert_eq!(x.measure(), a.clone());
        prop_assert_eq!(j_swap(&x).measure(), a.clone());
        prop_assert_eq!(StripRectangle::lower(a.clone()).area(), a);
    }

    #[test]
    fn inclusion_exclusion_on_random_fractions(a in unit_rational(), b in unit_rational()) {
        let lower = TaggedInterval::lower(a.clone());
        let upper = TaggedInterval::upper(b.clone());
        let total = union_measure(&lower, &upper).value() + intersection_measure(&lower, &upper).value();
        prop_assert_eq!(total, a.value() + b.value());
    }

    #[test]
    fn intersection_measure_is_clamped_difference(a in unit_rational(), b in unit_rational()) {
        let got = intersection_measure(&TaggedInterval::lower(a.clone()), &TaggedInterval::upper(b.clone()));
        let diff = a.value() - (BigRational::one() - b.value());
        let expected = if diff > BigRational::zero() { diff } else { BigRational::zero() };
        prop_assert_eq!(got.value(), &expected);
    }
}

use mvlab_core::chang::{chang_enumerate, chang_neg, chang_oplus, ChangAlgebra, ChangElement, ChangVariant, Tier};
use mvlab_core::{check_axiom, run_suite, AxiomId, SamplingStrategy};

/// Chang's algebra sits inside `Z x Z` with lexicographic order and strong
/// unit `(1, 0)`: `na ↦ (0, n)`, `1 - na ↦ (1, -n)`, and `⊕` is the sum
/// truncated at the unit.
fn lex_oracle(x: ChangElement, y: ChangElement) -> ChangElement {
    let embed = |e: ChangElement| -> (i64, i64) {
        match e.tier {
            Tier::Atom => (0, e.index as i64),
            Tier::CoAtom => (1, -(e.index as i64)),
        }
    };
    let (a, b) = (embed(x), embed(y));
    let sum = (a.0 + b.0, a.1 + b.1);
    let sum = if sum > (1, 0) { (1, 0) } else { sum };
    match sum {
        (0, n) => ChangElement::atom(n as u64),
        (1, n) => ChangElement::co_atom((-n) as u64),
        other => unreachable!("outside [0, 1]: {other:?}"),
    }
}

#[test]
fn standard_variant_matches_lexicographic_oracle() {
    let elems = chang_enumerate(16);
    let mut pairs = 0;
    for &x in &elems {
        for &y in &elems {
            assert_eq!(chang_oplus(ChangVariant::Standard, x, y), lex_oracle(x, y), "{x} ⊕ {y}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, 34 * 34);
}

#[test]
fn oracle_reproduces_the_worked_example() {
    assert_eq!(lex_oracle(ChangElement::atom(1), ChangElement::co_atom(3)), ChangElement::co_atom(2));
}

#[test]
fn standard_variant_is_mv_for_each_bound() {
    for max_index in [1, 2, 3, 5, 8, 16] {
        let alg = ChangAlgebra {
            variant: ChangVariant::Standard,
            max_index,
        };
        let report = run_suite(&alg, &SamplingStrategy::Exhaustive, &AxiomId::MV).unwrap();
        assert!(report.all_hold(), "{}", report.to_text());
    }
}

#[test]
fn as_printed_identity_failure_is_minimal() {
    let alg = ChangAlgebra {
        variant: ChangVariant::AsPrinted,
        max_index: 8,
    };
    let v = check_axiom(&alg, AxiomId::ZeroIdentity, &SamplingStrategy::Exhaustive).unwrap();
    assert!(!v.holds);
    let first = &v.counterexamples[0];
    assert_eq!(first.inputs, vec![ChangElement::co_atom(1)]);
    assert_eq!(first.lhs, ChangElement::ONE);
}

#[test]
fn variants_agree_on_same_tier_sums() {
    let elems = chang_enumerate(6);
    for &x in &elems {
        for &y in &elems {
            if x.tier == y.tier {
                assert_eq!(
                    chang_oplus(ChangVariant::Standard, x, y),
                    chang_oplus(ChangVariant::AsPrinted, x, y)
                );
            }
            for v in [ChangVariant::Standard, ChangVariant::AsPrinted] {
                assert_eq!(chang_oplus(v, x, y), chang_oplus(v, y, x));
            }
        }
        assert_eq!(chang_neg(chang_neg(x)), x);
    }
}

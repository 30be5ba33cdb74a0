//! The MV signature, the axiom suite and the counterexample search engine.
//!
//! Every concrete model implements [`Algebra`]. The engine enumerates input
//! tuples according to a [`SamplingStrategy`], evaluates both sides of each
//! axiom and keeps the failing tuples. Evaluation runs on the rayon pool;
//! counterexamples are merged by enumeration position, so reports do not
//! depend on the number of threads.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::UnitRational;

/// Model parameters as they appear in reports.
pub type Params = BTreeMap<String, serde_json::Value>;

/// Upper bound on the counterexamples kept per axiom and run. The full
/// failure count is always reported next to the list.
pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 128;

/// Default tolerance for carriers evaluated in floating point.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Equality {
    Exact,
    Tolerance { epsilon: f64 },
}

/// Where the engine draws elements from.
pub enum Domain<E> {
    /// A finite carrier, enumerated in a fixed order.
    Finite(Vec<E>),
    /// A carrier parameterised by `[0, 1]`; see [`Algebra::embed`].
    Parametric,
}

/// A bundled structure `(A, ⊕, ¬, 0, 1)` with its equality mode.
///
/// `oplus` and `neg` must be total on the declared domain.
pub trait Algebra: Sync {
    type Elem: Clone + Send + Sync + fmt::Debug;

    fn name(&self) -> &str;

    fn params(&self) -> Params {
        Params::new()
    }

    fn domain(&self) -> Domain<Self::Elem>;

    /// The elements carried by the parameter `t`. Parametric carriers only;
    /// a carrier may return several elements per parameter (e.g. both
    /// orientations of an interval).
    fn embed(&self, _t: &UnitRational) -> Vec<Self::Elem> {
        Vec::new()
    }

    fn oplus(&self, x: &Self::Elem, y: &Self::Elem) -> Self::Elem;

    fn neg(&self, x: &Self::Elem) -> Self::Elem;

    fn zero(&self) -> Self::Elem;

    fn one(&self) -> Self::Elem;

    fn equality(&self) -> Equality {
        Equality::Exact
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;

    fn render(&self, x: &Self::Elem) -> String;

    /// The order induced by the operations: `a <= b` iff `¬a ⊕ b = 1`.
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.eq(&self.oplus(&self.neg(a), b), &self.one())
    }
}

/// `¬(¬x ⊕ ¬y)`.
pub fn derived_odot<A: Algebra + ?Sized>(alg: &A, x: &A::Elem, y: &A::Elem) -> A::Elem {
    alg.neg(&alg.oplus(&alg.neg(x), &alg.neg(y)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AxiomId {
    /// `¬¬x = x`
    NegInvolution,
    /// `1 ⊕ x = 1`
    OneAbsorbing,
    /// `x ⊕ ¬0 = ¬0`
    NegZeroAbsorbing,
    /// `¬(¬x ⊕ y) ⊕ y = ¬(¬y ⊕ x) ⊕ x`
    Lukasiewicz4,
    /// `¬(¬x ⊕ y) ⊕ y = ¬(¬y ⊕ ¬x) ⊕ x`, the form with the extra negation.
    /// Not part of [`AxiomId::MV`]; request it explicitly.
    Lukasiewicz4Printed,
    OplusCommutative,
    OplusAssociative,
    /// `0 ⊕ x = x`
    ZeroIdentity,
    /// `a <= b  ⇒  a ⊕ c <= b ⊕ c`
    TNormMonotone,
}

impl AxiomId {
    /// The standard suite: commutative monoid laws, axioms 1-4 and
    /// monotonicity.
    pub const MV: [AxiomId; 8] = [
        AxiomId::NegInvolution,
        AxiomId::OneAbsorbing,
        AxiomId::NegZeroAbsorbing,
        AxiomId::Lukasiewicz4,
        AxiomId::OplusCommutative,
        AxiomId::OplusAssociative,
        AxiomId::ZeroIdentity,
        AxiomId::TNormMonotone,
    ];

    pub fn arity(self) -> usize {
        match self {
            AxiomId::NegInvolution
            | AxiomId::OneAbsorbing
            | AxiomId::NegZeroAbsorbing
            | AxiomId::ZeroIdentity => 1,
            AxiomId::Lukasiewicz4 | AxiomId::Lukasiewicz4Printed | AxiomId::OplusCommutative => 2,
            AxiomId::OplusAssociative | AxiomId::TNormMonotone => 3,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomId::NegInvolution => "NegInvolution",
            AxiomId::OneAbsorbing => "OneAbsorbing",
            AxiomId::NegZeroAbsorbing => "NegZeroAbsorbing",
            AxiomId::Lukasiewicz4 => "Lukasiewicz4",
            AxiomId::Lukasiewicz4Printed => "Lukasiewicz4Printed",
            AxiomId::OplusCommutative => "OplusCommutative",
            AxiomId::OplusAssociative => "OplusAssociative",
            AxiomId::ZeroIdentity => "ZeroIdentity",
            AxiomId::TNormMonotone => "TNormMonotone",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SamplingStrategy {
    /// Every tuple of a finite carrier.
    Exhaustive,
    /// Every tuple of the fractions `i/q`, `0 <= i <= q`.
    Grid { q: u64 },
    /// `count` tuples of random fractions with denominators up to
    /// `denominator_bound`, reproducible from `seed`.
    Random {
        seed: u64,
        count: u64,
        denominator_bound: u64,
    },
}

impl fmt::Display for SamplingStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SamplingStrategy::Exhaustive => f.write_str("exhaustive"),
            SamplingStrategy::Grid { q } => write!(f, "grid(q={q})"),
            SamplingStrategy::Random {
                seed,
                count,
                denominator_bound,
            } => write!(f, "random(seed={seed}, count={count}, denominator<={denominator_bound})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Counterexample<E> {
    pub axiom: AxiomId,
    pub inputs: Vec<E>,
    pub lhs: E,
    pub rhs: E,
}

#[derive(Clone, Debug)]
pub struct AxiomVerdict<E> {
    pub axiom: AxiomId,
    pub holds: bool,
    pub cases: u64,
    /// Total number of failing tuples, including those beyond the cap.
    pub failures: u64,
    pub counterexamples: Vec<Counterexample<E>>,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub counterexample_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
        }
    }
}

/// Evaluates both sides of `axiom` on `inputs`; `Some((lhs, rhs))` when
/// they differ under the algebra's equality.
pub fn evaluate<A: Algebra + ?Sized>(
    alg: &A,
    axiom: AxiomId,
    inputs: &[A::Elem],
) -> Option<(A::Elem, A::Elem)> {
    assert_eq!(inputs.len(), axiom.arity(), "wrong arity for {axiom}");
    let (lhs, rhs) = match axiom {
        AxiomId::NegInvolution => (alg.neg(&alg.neg(&inputs[0])), inputs[0].clone()),
        AxiomId::OneAbsorbing => (alg.oplus(&alg.one(), &inputs[0]), alg.one()),
        AxiomId::NegZeroAbsorbing => {
            let top = alg.neg(&alg.zero());
            (alg.oplus(&inputs[0], &top), top)
        }
        AxiomId::ZeroIdentity => (alg.oplus(&alg.zero(), &inputs[0]), inputs[0].clone()),
        AxiomId::OplusCommutative => {
            let (x, y) = (&inputs[0], &inputs[1]);
            (alg.oplus(x, y), alg.oplus(y, x))
        }
        AxiomId::OplusAssociative => {
            let (x, y, z) = (&inputs[0], &inputs[1], &inputs[2]);
            (alg.oplus(&alg.oplus(x, y), z), alg.oplus(x, &alg.oplus(y, z)))
        }
        AxiomId::Lukasiewicz4 => {
            let (x, y) = (&inputs[0], &inputs[1]);
            let lhs = alg.oplus(&alg.neg(&alg.oplus(&alg.neg(x), y)), y);
            let rhs = alg.oplus(&alg.neg(&alg.oplus(&alg.neg(y), x)), x);
            (lhs, rhs)
        }
        AxiomId::Lukasiewicz4Printed => {
            let (x, y) = (&inputs[0], &inputs[1]);
            let lhs = alg.oplus(&alg.neg(&alg.oplus(&alg.neg(x), y)), y);
            let rhs = alg.oplus(&alg.neg(&alg.oplus(&alg.neg(y), &alg.neg(x))), x);
            (lhs, rhs)
        }
        AxiomId::TNormMonotone => {
            let (a, b, c) = (&inputs[0], &inputs[1], &inputs[2]);
            if !alg.leq(a, b) {
                return None;
            }
            let lhs = alg.oplus(a, c);
            let rhs = alg.oplus(b, c);
            if alg.eq(&lhs, &rhs) || alg.leq(&lhs, &rhs) {
                return None;
            }
            return Some((lhs, rhs));
        }
    };
    if alg.eq(&lhs, &rhs) {
        None
    } else {
        Some((lhs, rhs))
    }
}

enum Tuples<E> {
    /// The cartesian power of an element list, in lexicographic order.
    Product(Vec<E>),
    Listed(Vec<Vec<E>>),
}

fn incompatible<A: Algebra + ?Sized>(alg: &A, strategy: &SamplingStrategy) -> Error {
    Error::IncompatibleStrategy {
        algebra: alg.name().to_string(),
        strategy: strategy.to_string(),
    }
}

/// The elements a grid strategy visits, in order.
pub fn grid_elements<A: Algebra + ?Sized>(alg: &A, q: u64) -> Result<Vec<A::Elem>> {
    if q == 0 {
        return Err(Error::InvalidParameter("grid resolution must be positive".into()));
    }
    match alg.domain() {
        Domain::Finite(_) => Err(incompatible(alg, &SamplingStrategy::Grid { q })),
        Domain::Parametric => Ok((0..=q)
            .flat_map(|i| alg.embed(&UnitRational::grid(i, q)))
            .collect()),
    }
}

/// The tuple sequence of a random strategy. Depends only on the arguments,
/// so a run can be replayed exactly.
pub fn random_tuples<A: Algebra + ?Sized>(
    alg: &A,
    seed: u64,
    count: u64,
    denominator_bound: u64,
    arity: usize,
) -> Result<Vec<Vec<A::Elem>>> {
    if count == 0 || denominator_bound == 0 {
        return Err(Error::InvalidParameter(
            "random sampling needs a positive count and denominator bound".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let finite = match alg.domain() {
        Domain::Finite(elems) if elems.is_empty() => {
            return Err(Error::InvalidParameter("empty carrier".into()))
        }
        Domain::Finite(elems) => Some(elems),
        Domain::Parametric => None,
    };
    let draw = |rng: &mut ChaCha8Rng| -> A::Elem {
        match &finite {
            Some(elems) => elems[rng.gen_range(0..elems.len())].clone(),
            None => {
                let den = rng.gen_range(1..=denominator_bound);
                let num = rng.gen_range(0..=den);
                let t = UnitRational::new(BigRational::new(num.into(), den.into()))
                    .expect("num <= den");
                let mut choices = alg.embed(&t);
                assert!(!choices.is_empty(), "embed returned no element");
                let pick = if choices.len() > 1 {
                    rng.gen_range(0..choices.len())
                } else {
                    0
                };
                choices.swap_remove(pick)
            }
        }
    };
    Ok((0..count)
        .map(|_| (0..arity).map(|_| draw(&mut rng)).collect())
        .collect())
}

fn tuples_for<A: Algebra + ?Sized>(
    alg: &A,
    strategy: &SamplingStrategy,
    arity: usize,
) -> Result<Tuples<A::Elem>> {
    match strategy {
        SamplingStrategy::Exhaustive => match alg.domain() {
            Domain::Finite(elems) => Ok(Tuples::Product(elems)),
            Domain::Parametric => Err(incompatible(alg, strategy)),
        },
        SamplingStrategy::Grid { q } => grid_elements(alg, *q).map(Tuples::Product),
        SamplingStrategy::Random {
            seed,
            count,
            denominator_bound,
        } => random_tuples(alg, *seed, *count, *denominator_bound, arity).map(Tuples::Listed),
    }
}

type Found<E> = (usize, Vec<E>, E, E);

fn keep_smallest<E>(mut found: Vec<Found<E>>, cap: usize) -> Vec<Found<E>> {
    found.sort_by_key(|f| f.0);
    found.truncate(cap);
    found
}

/// Searches for counterexamples to one axiom.
pub fn check_axiom<A: Algebra + ?Sized>(
    alg: &A,
    axiom: AxiomId,
    strategy: &SamplingStrategy,
) -> Result<AxiomVerdict<A::Elem>> {
    check_axiom_with(alg, axiom, strategy, &CheckOptions::default())
}

pub fn check_axiom_with<A: Algebra + ?Sized>(
    alg: &A,
    axiom: AxiomId,
    strategy: &SamplingStrategy,
    options: &CheckOptions,
) -> Result<AxiomVerdict<A::Elem>> {
    let arity = axiom.arity();
    let cap = options.counterexample_cap;
    let tuples = tuples_for(alg, strategy, arity)?;

    let (cases, (failures, found)) = match &tuples {
        Tuples::Product(elems) => {
            let len = elems.len();
            let total = len
                .checked_pow(arity as u32)
                .ok_or_else(|| Error::InvalidParameter("tuple space too large".into()))?;
            let decode = |mut idx: usize| -> Vec<A::Elem> {
                let mut inputs = vec![elems[0].clone(); arity];
                for slot in (0..arity).rev() {
                    inputs[slot] = elems[idx % len].clone();
                    idx /= len;
                }
                inputs
            };
            let search = (0..total)
                .into_par_iter()
                .filter_map(|idx| {
                    let inputs = decode(idx);
                    evaluate(alg, axiom, &inputs).map(|(lhs, rhs)| (idx, inputs, lhs, rhs))
                })
                .fold(
                    || (0u64, Vec::new()),
                    |(n, mut kept), item| {
                        // pieces are visited in increasing index order
                        if kept.len() < cap {
                            kept.push(item);
                        }
                        (n + 1, kept)
                    },
                )
                .reduce(
                    || (0u64, Vec::new()),
                    |(n1, mut k1), (n2, k2)| {
                        k1.extend(k2);
                        (n1 + n2, keep_smallest(k1, cap))
                    },
                );
            (total as u64, search)
        }
        Tuples::Listed(list) => {
            let found: Vec<Found<A::Elem>> = list
                .par_iter()
                .enumerate()
                .filter_map(|(idx, inputs)| {
                    evaluate(alg, axiom, inputs).map(|(lhs, rhs)| (idx, inputs.clone(), lhs, rhs))
                })
                .collect();
            let n = found.len() as u64;
            (list.len() as u64, (n, keep_smallest(found, cap)))
        }
    };

    let counterexamples = found
        .into_iter()
        .map(|(_, inputs, lhs, rhs)| Counterexample {
            axiom,
            inputs,
            lhs,
            rhs,
        })
        .collect();
    Ok(AxiomVerdict {
        axiom,
        holds: failures == 0,
        cases,
        failures,
        counterexamples,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraInfo {
    pub name: String,
    pub params: Params,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderedCounterexample {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub axiom: AxiomId,
    pub holds: bool,
    pub cases: u64,
    pub failures: u64,
    pub counterexamples: Vec<RenderedCounterexample>,
}

impl VerdictRecord {
    /// Rendered inputs list the operands of the outer `⊕`, so an identity
    /// failure shows as `(0, x)`.
    pub fn render<A: Algebra + ?Sized>(alg: &A, verdict: &AxiomVerdict<A::Elem>) -> Self {
        let lead = match verdict.axiom {
            AxiomId::ZeroIdentity => vec![alg.render(&alg.zero())],
            _ => Vec::new(),
        };
        Self {
            axiom: verdict.axiom,
            holds: verdict.holds,
            cases: verdict.cases,
            failures: verdict.failures,
            counterexamples: verdict
                .counterexamples
                .iter()
                .map(|c| RenderedCounterexample {
                    inputs: lead.iter().cloned().chain(c.inputs.iter().map(|e| alg.render(e))).collect(),
                    lhs: alg.render(&c.lhs),
                    rhs: alg.render(&c.rhs),
                })
                .collect(),
        }
    }

    /// Whether a counterexample with exactly these rendered inputs is listed.
    pub fn find(&self, inputs: &[&str]) -> Option<&RenderedCounterexample> {
        self.counterexamples
            .iter()
            .find(|c| c.inputs.iter().map(String::as_str).eq(inputs.iter().copied()))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub algebra: AlgebraInfo,
    pub strategy: SamplingStrategy,
    pub equality: Equality,
    pub verdicts: Vec<VerdictRecord>,
}

impl CheckReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn verdict(&self, axiom: AxiomId) -> Option<&VerdictRecord> {
        self.verdicts.iter().find(|v| v.axiom == axiom)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> = self
            .algebra
            .params
            .iter()
            .map(|(k, v)| format!("{k}={}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
            .collect();
        out.push_str(&format!("algebra:  {}", self.algebra.name));
        if !params.is_empty() {
            out.push_str(&format!(" ({})", params.join(", ")));
        }
        out.push('\n');
        out.push_str(&format!("strategy: {}\n", self.strategy));
        for v in &self.verdicts {
            let status = if v.holds { "holds" } else { "FAILS" };
            out.push_str(&format!("  {:<20} {:<6} {} cases", v.axiom.as_str(), status, v.cases));
            if !v.holds {
                out.push_str(&format!(", {} failing", v.failures));
            }
            out.push('\n');
            for c in &v.counterexamples {
                out.push_str(&format!(
                    "      ({}): lhs {} rhs {}\n",
                    c.inputs.join(", "),
                    c.lhs,
                    c.rhs
                ));
            }
        }
        out
    }
}

/// Runs every requested axiom (deduplicated, in [`AxiomId`] order).
pub fn run_suite<A: Algebra + ?Sized>(
    alg: &A,
    strategy: &SamplingStrategy,
    axioms: &[AxiomId],
) -> Result<CheckReport> {
    run_suite_with(alg, strategy, axioms, &CheckOptions::default())
}

pub fn run_suite_with<A: Algebra + ?Sized>(
    alg: &A,
    strategy: &SamplingStrategy,
    axioms: &[AxiomId],
    options: &CheckOptions,
) -> Result<CheckReport> {
    let mut axioms = axioms.to_vec();
    axioms.sort();
    axioms.dedup();
    let verdicts = axioms
        .iter()
        .map(|&axiom| {
            check_axiom_with(alg, axiom, strategy, options).map(|v| VerdictRecord::render(alg, &v))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport {
        algebra: AlgebraInfo {
            name: alg.name().to_string(),
            params: alg.params(),
        },
        strategy: strategy.clone(),
        equality: alg.equality(),
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Integers mod 3 under addition with a fake negation: a deliberately
    /// broken fixture for exercising failure paths.
    struct Mod3;

    impl Algebra for Mod3 {
        type Elem = u8;
        fn name(&self) -> &str {
            "mod3"
        }
        fn domain(&self) -> Domain<u8> {
            Domain::Finite(vec![0, 1, 2])
        }
        fn oplus(&self, x: &u8, y: &u8) -> u8 {
            (x + y) % 3
        }
        fn neg(&self, x: &u8) -> u8 {
            (3 - x) % 3
        }
        fn zero(&self) -> u8 {
            0
        }
        fn one(&self) -> u8 {
            2
        }
        fn eq(&self, a: &u8, b: &u8) -> bool {
            a == b
        }
        fn render(&self, x: &u8) -> String {
            x.to_string()
        }
    }

    #[test]
    fn arities() {
        assert_eq!(AxiomId::OneAbsorbing.arity(), 1);
        assert_eq!(AxiomId::Lukasiewicz4.arity(), 2);
        assert_eq!(AxiomId::TNormMonotone.arity(), 3);
    }

    #[test]
    fn counts_every_tuple() {
        let v = check_axiom(&Mod3, AxiomId::OplusAssociative, &SamplingStrategy::Exhaustive).unwrap();
        assert!(v.holds);
        assert_eq!(v.cases, 27);
        assert!(v.counterexamples.is_empty());
    }

    #[test]
    fn failures_are_sorted_and_capped() {
        let v = check_axiom(&Mod3, AxiomId::OneAbsorbing, &SamplingStrategy::Exhaustive).unwrap();
        // 2 + x = 2 only at x = 0
        assert!(!v.holds);
        assert_eq!(v.failures, 2);
        let inputs: Vec<_> = v.counterexamples.iter().map(|c| c.inputs[0]).collect();
        assert_eq!(inputs, vec![1, 2]);

        let opts = CheckOptions {
            counterexample_cap: 1,
        };
        let v = check_axiom_with(&Mod3, AxiomId::OneAbsorbing, &SamplingStrategy::Exhaustive, &opts)
            .unwrap();
        assert_eq!(v.failures, 2);
        assert_eq!(v.counterexamples.len(), 1);
        assert_eq!(v.counterexamples[0].inputs, vec![1]);
    }

    #[test]
    fn grid_on_finite_carrier_is_rejected() {
        let err = check_axiom(&Mod3, AxiomId::ZeroIdentity, &SamplingStrategy::Grid { q: 4 });
        assert!(matches!(err, Err(Error::IncompatibleStrategy { .. })));
    }

    #[test]
    fn random_sampling_on_finite_carrier_replays() {
        let a = random_tuples(&Mod3, 7, 20, 1, 3).unwrap();
        let b = random_tuples(&Mod3, 7, 20, 1, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 20);
        assert!(random_tuples(&Mod3, 7, 0, 1, 3).is_err());
    }

    #[test]
    fn suite_deduplicates_and_orders() {
        let report = run_suite(
            &Mod3,
            &SamplingStrategy::Exhaustive,
            &[AxiomId::ZeroIdentity, AxiomId::NegInvolution, AxiomId::ZeroIdentity],
        )
        .unwrap();
        let ids: Vec<_> = report.verdicts.iter().map(|v| v.axiom).collect();
        assert_eq!(ids, vec![AxiomId::NegInvolution, AxiomId::ZeroIdentity]);
        assert!(report.all_hold());
    }

    #[test]
    fn report_json_shape() {
        let report = run_suite(&Mod3, &SamplingStrategy::Exhaustive, &[AxiomId::OneAbsorbing]).unwrap();
        let json: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(json["algebra"]["name"], "mod3");
        assert_eq!(json["strategy"]["kind"], "exhaustive");
        let verdict = &json["verdicts"][0];
        assert_eq!(verdict["axiom"], "OneAbsorbing");
        assert_eq!(verdict["holds"], false);
        assert_eq!(verdict["cases"], 3);
        assert_eq!(verdict["counterexamples"][0]["inputs"][0], "1");
        assert_eq!(verdict["counterexamples"][0]["lhs"], "0");
        assert_eq!(verdict["counterexamples"][0]["rhs"], "2");
    }
}

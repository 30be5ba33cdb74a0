//! The power set of a finite ordered universe with the join
//! `A ⊕ B = A ∪ B ∪ j(A ∩ B, A ∪ B)`.
//!
//! `j(A, B)` sends the `i`-th element of `A` (in the inherited order) to the
//! `((i - 1) mod m) + 1`-th element of `S \ B`, `m = |S \ B|`, so the join
//! always has `min(|A| + |B|, n)` elements: the counting-measure version of
//! the truncated sum. The structure satisfies everything but the
//! Łukasiewicz axiom, which survives only on comparable pairs.

use crate::algebra::{
    check_axiom, evaluate, run_suite, Algebra, AxiomId, AxiomVerdict, CheckReport, Counterexample,
    Domain, Params, SamplingStrategy,
};
use crate::error::{Error, Result};

/// Largest universe the exhaustive analyses accept (`2^(3n)` triples).
pub const EXHAUSTIVE_LIMIT: usize = 6;

const MAX_UNIVERSE: usize = 64;

/// A subset of an `n`-element universe, bit `i` standing for the `i`-th
/// symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    pub fn from_bits(bits: u64, n: usize) -> Self {
        assert!(n <= MAX_UNIVERSE, "universe too large");
        let mask = full_mask(n);
        assert_eq!(bits & !mask, 0, "bits outside the universe");
        Self { bits, n: n as u8 }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_bits(0, n)
    }

    pub fn full(n: usize) -> Self {
        Self::from_bits(full_mask(n), n)
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn universe_size(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, position: usize) -> bool {
        position < self.universe_size() && self.bits >> position & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.bits & !other.bits == 0
    }

    /// Universe positions of the members, in universe order.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.universe_size()).filter(|&p| self.contains(p))
    }

    pub fn union(&self, other: &Self) -> Self {
        Self {
            bits: self.bits | other.bits,
            n: self.n,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self {
            bits: self.bits & other.bits,
            n: self.n,
        }
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: !self.bits & full_mask(self.universe_size()),
            n: self.n,
        }
    }
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn same_universe(a: &Subset, b: &Subset) -> Result<()> {
    if a.n != b.n {
        return Err(Error::UniverseMismatch {
            left: a.universe_size(),
            right: b.universe_size(),
        });
    }
    Ok(())
}

/// Symbols in their total order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedUniverse {
    symbols: Vec<String>,
}

impl OrderedUniverse {
    pub fn new<I, S>(symbols: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() || symbols.len() > MAX_UNIVERSE {
            return Err(Error::InvalidParameter(format!(
                "universe must have 1..={MAX_UNIVERSE} symbols"
            )));
        }
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(Error::InvalidParameter(format!("duplicate symbol `{s}`")));
            }
        }
        Ok(Self { symbols })
    }

    /// `a, b, c, ...`
    pub fn letters(n: usize) -> Result<Self> {
        if n == 0 || n > 26 {
            return Err(Error::InvalidParameter(format!("{n} letters requested")));
        }
        Self::new((b'a'..b'a' + n as u8).map(|c| (c as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn subset<S: AsRef<str>>(&self, members: &[S]) -> Result<Subset> {
        let mut bits = 0u64;
        for m in members {
            let pos = self
                .symbols
                .iter()
                .position(|s| s == m.as_ref())
                .ok_or_else(|| Error::InvalidParameter(format!("`{}` not in universe", m.as_ref())))?;
            bits |= 1 << pos;
        }
        Ok(Subset::from_bits(bits, self.len()))
    }

    /// All `2^n` subsets in increasing bit order.
    pub fn all_subsets(&self) -> Vec<Subset> {
        assert!(self.len() < 64, "power set too large to list");
        (0..1u64 << self.len())
            .map(|bits| Subset::from_bits(bits, self.len()))
            .collect()
    }

    /// `{b,c}`; members in universe order.
    pub fn render(&self, s: &Subset) -> String {
        let names: Vec<&str> = s.positions().map(|p| self.symbols[p].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// The modular injection of `A`'s positions into `S \ B`; requires
/// `A ⊆ B`. Only complement elements are returned.
pub fn j_map(a: &Subset, b: &Subset) -> Result<Subset> {
    same_universe(a, b)?;
    if !a.is_subset_of(b) {
        return Err(Error::Precondition("j_map needs A ⊆ B".into()));
    }
    Ok(j_unchecked(a, b))
}

fn j_unchecked(a: &Subset, b: &Subset) -> Subset {
    let outside: Vec<usize> = b.complement().positions().collect();
    let mut bits = 0;
    if !outside.is_empty() {
        for i in 0..a.len() {
            bits |= 1 << outside[i % outside.len()];
        }
    }
    Subset { bits, n: a.n }
}

fn oplus_unchecked(a: &Subset, b: &Subset) -> Subset {
    let join = a.union(b);
    join.union(&j_unchecked(&a.intersection(b), &join))
}

/// `A ∪ B ∪ j(A ∩ B, A ∪ B)`.
pub fn powerset_oplus(a: &Subset, b: &Subset) -> Result<Subset> {
    same_universe(a, b)?;
    Ok(oplus_unchecked(a, b))
}

pub fn powerset_neg(a: &Subset) -> Subset {
    a.complement()
}

/// `(P(S), ⊕, complement, ∅, S)`, enumerated exhaustively.
#[derive(Clone, Debug)]
pub struct PowersetAlgebra {
    pub universe: OrderedUniverse,
}

impl PowersetAlgebra {
    pub fn new(universe: OrderedUniverse) -> Self {
        Self { universe }
    }

    pub fn letters(n: usize) -> Result<Self> {
        OrderedUniverse::letters(n).map(Self::new)
    }
}

impl Algebra for PowersetAlgebra {
    type Elem = Subset;

    fn name(&self) -> &str {
        "powerset"
    }

    fn params(&self) -> Params {
        let mut params = Params::new();
        params.insert("n".into(), self.universe.len().into());
        params.insert("universe".into(), self.universe.symbols().join(",").into());
        params
    }

    fn domain(&self) -> Domain<Subset> {
        Domain::Finite(self.universe.all_subsets())
    }

    fn oplus(&self, x: &Subset, y: &Subset) -> Subset {
        oplus_unchecked(x, y)
    }

    fn neg(&self, x: &Subset) -> Subset {
        powerset_neg(x)
    }

    fn zero(&self) -> Subset {
        Subset::empty(self.universe.len())
    }

    fn one(&self) -> Subset {
        Subset::full(self.universe.len())
    }

    fn eq(&self, a: &Subset, b: &Subset) -> bool {
        a == b
    }

    fn render(&self, x: &Subset) -> String {
        self.universe.render(x)
    }
}

fn checked_size(n: usize) -> Result<()> {
    if n > EXHAUSTIVE_LIMIT {
        return Err(Error::SizeLimit {
            n,
            limit: EXHAUSTIVE_LIMIT,
        });
    }
    if n == 0 {
        return Err(Error::InvalidParameter("universe must be non-empty".into()));
    }
    Ok(())
}

/// The full axiom suite over `P(S)` for `S = {a, b, ...}`, `|S| = n <= 6`.
pub fn analyze_powerset(n: usize) -> Result<CheckReport> {
    checked_size(n)?;
    run_suite(&PowersetAlgebra::letters(n)?, &SamplingStrategy::Exhaustive, &AxiomId::MV)
}

/// The Łukasiewicz identity on every comparable pair `A ⊆ B`.
pub fn chain_pair_check(n: usize) -> Result<AxiomVerdict<Subset>> {
    checked_size(n)?;
    let alg = PowersetAlgebra::letters(n)?;
    let subsets = alg.universe.all_subsets();
    let mut cases = 0u64;
    let mut counterexamples = Vec::new();
    for a in &subsets {
        for b in subsets.iter().filter(|b| a.is_subset_of(b)) {
            cases += 1;
            if let Some((lhs, rhs)) = evaluate(&alg, AxiomId::Lukasiewicz4, &[*a, *b]) {
                counterexamples.push(Counterexample {
                    axiom: AxiomId::Lukasiewicz4,
                    inputs: vec![*a, *b],
                    lhs,
                    rhs,
                });
            }
        }
    }
    Ok(AxiomVerdict {
        axiom: AxiomId::Lukasiewicz4,
        holds: counterexamples.is_empty(),
        cases,
        failures: counterexamples.len() as u64,
        counterexamples,
    })
}

/// Exhaustive verdict for a single axiom; handy in tests and benchmarks.
pub fn check_powerset_axiom(n: usize, axiom: AxiomId) -> Result<AxiomVerdict<Subset>> {
    checked_size(n)?;
    check_axiom(&PowersetAlgebra::letters(n)?, axiom, &SamplingStrategy::Exhaustive)
}

//! Chang's symbolic algebra of atoms `na` and co-atoms `1 - na`.
//!
//! Two operation tables are provided. `AsPrinted` follows the mixed rules
//! exactly as they are usually quoted (`1` when `m <= n`, else the co-atom
//! of `m - n`), which breaks the identity law; `Standard` is Chang's
//! original algebra.

use std::fmt;

use crate::algebra::{Algebra, Domain, Params};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tier {
    Atom,
    CoAtom,
}

/// `Atom n` is `na` (`Atom 0 = 0`); `CoAtom n` is `1 - na` (`CoAtom 0 = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChangElement {
    pub tier: Tier,
    pub index: u64,
}

impl ChangElement {
    pub const ZERO: Self = Self::atom(0);
    pub const ONE: Self = Self::co_atom(0);

    pub const fn atom(index: u64) -> Self {
        Self {
            tier: Tier::Atom,
            index,
        }
    }

    pub const fn co_atom(index: u64) -> Self {
        Self {
            tier: Tier::CoAtom,
            index,
        }
    }
}

impl fmt::Display for ChangElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.tier, self.index) {
            (Tier::Atom, 0) => f.write_str("0"),
            (Tier::CoAtom, 0) => f.write_str("1"),
            (Tier::Atom, n) => write!(f, "{n}a"),
            (Tier::CoAtom, n) => write!(f, "{n}~a"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChangVariant {
    AsPrinted,
    Standard,
}

impl ChangVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            ChangVariant::AsPrinted => "as-printed",
            ChangVariant::Standard => "standard",
        }
    }
}

/// Atom with co-atom: `m` is the atom index, `n` the co-atom index.
fn mixed(variant: ChangVariant, m: u64, n: u64) -> ChangElement {
    match variant {
        ChangVariant::AsPrinted if m <= n => ChangElement::ONE,
        ChangVariant::AsPrinted => ChangElement::co_atom(m - n),
        ChangVariant::Standard if m >= n => ChangElement::ONE,
        ChangVariant::Standard => ChangElement::co_atom(n - m),
    }
}

pub fn chang_oplus(variant: ChangVariant, x: ChangElement, y: ChangElement) -> ChangElement {
    match (x.tier, y.tier) {
        (Tier::Atom, Tier::Atom) => ChangElement::atom(x.index + y.index),
        (Tier::CoAtom, Tier::CoAtom) => ChangElement::ONE,
        (Tier::Atom, Tier::CoAtom) => mixed(variant, x.index, y.index),
        (Tier::CoAtom, Tier::Atom) => mixed(variant, y.index, x.index),
    }
}

/// `¬ka = 1 - ka` and back.
pub fn chang_neg(x: ChangElement) -> ChangElement {
    let tier = match x.tier {
        Tier::Atom => Tier::CoAtom,
        Tier::CoAtom => Tier::Atom,
    };
    ChangElement { tier, ..x }
}

/// Atoms `0..=max_index`, then co-atoms `0..=max_index`.
pub fn chang_enumerate(max_index: u64) -> Vec<ChangElement> {
    (0..=max_index)
        .map(ChangElement::atom)
        .chain((0..=max_index).map(ChangElement::co_atom))
        .collect()
}

/// The bounded carrier up to `max_index`, checked exhaustively.
#[derive(Clone, Copy, Debug)]
pub struct ChangAlgebra {
    pub variant: ChangVariant,
    pub max_index: u64,
}

impl Algebra for ChangAlgebra {
    type Elem = ChangElement;

    fn name(&self) -> &str {
        "chang"
    }

    fn params(&self) -> Params {
        let mut params = Params::new();
        params.insert("variant".into(), self.variant.as_str().into());
        params.insert("max_index".into(), self.max_index.into());
        params
    }

    fn domain(&self) -> Domain<ChangElement> {
        Domain::Finite(chang_enumerate(self.max_index))
    }

    fn oplus(&self, x: &ChangElement, y: &ChangElement) -> ChangElement {
        chang_oplus(self.variant, *x, *y)
    }

    fn neg(&self, x: &ChangElement) -> ChangElement {
        chang_neg(*x)
    }

    fn zero(&self) -> ChangElement {
        ChangElement::ZERO
    }

    fn one(&self) -> ChangElement {
        ChangElement::ONE
    }

    fn eq(&self, a: &ChangElement, b: &ChangElement) -> bool {
        a == b
    }

    fn render(&self, x: &ChangElement) -> String {
        x.to_string()
    }
}

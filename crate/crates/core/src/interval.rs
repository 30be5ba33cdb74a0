//! Measure arithmetic on subintervals of `[0, 1]` and horizontal strips of
//! the unit square.
//!
//! The lower family `a^0 = [0, a]` and the upper family `a^1 = [1 - a, 1]`
//! are both parameterised by their Lebesgue measure. Sums and products are
//! computed from interval endpoints (unions, intersections, complements);
//! the Łukasiewicz formulas only ever appear in tests, as the values the
//! induced arithmetic must reproduce.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Algebra, Domain, Params};
use crate::rational::UnitRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Lower,
    Upper,
}

impl Orientation {
    pub fn flip(self) -> Self {
        match self {
            Orientation::Lower => Orientation::Upper,
            Orientation::Upper => Orientation::Lower,
        }
    }

    fn superscript(self) -> u8 {
        match self {
            Orientation::Lower => 0,
            Orientation::Upper => 1,
        }
    }
}

/// A closed interval `[lo, hi]` with exact endpoints, possibly degenerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl ClosedInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        debug_assert!(lo <= hi);
        Self { lo, hi }
    }

    pub fn length(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn intersection(&self, other: &Self) -> Option<Self> {
        let lo = (&self.lo).max(&other.lo).clone();
        let hi = (&self.hi).min(&other.hi).clone();
        (lo <= hi).then(|| Self::new(lo, hi))
    }

    /// Measure of the union: the hull when the intervals meet, the sum of
    /// the lengths otherwise.
    pub fn union_length(&self, other: &Self) -> BigRational {
        match self.intersection(other) {
            Some(_) => (&self.hi).max(&other.hi) - (&self.lo).min(&other.lo),
            None => self.length() + other.length(),
        }
    }

    pub fn intersection_length(&self, other: &Self) -> BigRational {
        self.intersection(other)
            .map_or_else(BigRational::zero, |i| i.length())
    }
}

/// `a^0 = [0, a]` or `a^1 = [1 - a, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaggedInterval {
    pub orientation: Orientation,
    pub param: UnitRational,
}

impl TaggedInterval {
    pub fn lower(param: UnitRational) -> Self {
        Self {
            orientation: Orientation::Lower,
            param,
        }
    }

    pub fn upper(param: UnitRational) -> Self {
        Self {
            orientation: Orientation::Upper,
            param,
        }
    }

    /// The whole of `[0, 1]`, written `1^0`.
    pub fn full() -> Self {
        Self::lower(UnitRational::one())
    }

    pub fn is_lower(&self) -> bool {
        self.orientation == Orientation::Lower
    }

    pub fn endpoints(&self) -> ClosedInterval {
        match self.orientation {
            Orientation::Lower => {
                ClosedInterval::new(BigRational::zero(), self.param.value().clone())
            }
            Orientation::Upper => {
                ClosedInterval::new(self.param.complement().into_inner(), BigRational::one())
            }
        }
    }

    pub fn measure(&self) -> UnitRational {
        UnitRational::new(self.endpoints().length()).expect("subinterval of [0, 1]")
    }

    /// Equality of the denoted point sets: `1^0` and `1^1` coincide, while
    /// `0^0 = {0}` and `0^1 = {1}` do not.
    pub fn same_set(&self, other: &Self) -> bool {
        self.endpoints() == other.endpoints()
    }
}

impl fmt::Display for TaggedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.param, self.orientation.superscript())
    }
}

fn unit(value: BigRational) -> UnitRational {
    UnitRational::new(value).expect("measure of a subset of [0, 1]")
}

/// `x ⊕ y = min(x + y, 1)`.
pub fn lukasiewicz_oplus(x: &UnitRational, y: &UnitRational) -> UnitRational {
    x.truncated_add(y)
}

/// `μ([0, a] ∪ [1 - b, 1])` for a lower `a` and an upper `b`.
pub fn union_measure(a: &TaggedInterval, b: &TaggedInterval) -> UnitRational {
    assert!(a.is_lower() && !b.is_lower(), "union_measure expects (lower, upper)");
    unit(a.endpoints().union_length(&b.endpoints()))
}

/// `μ([0, a] ∩ [1 - b, 1])` for a lower `a` and an upper `b`.
pub fn intersection_measure(a: &TaggedInterval, b: &TaggedInterval) -> UnitRational {
    assert!(a.is_lower() && !b.is_lower(), "intersection_measure expects (lower, upper)");
    unit(a.endpoints().intersection_length(&b.endpoints()))
}

/// The measure-preserving swap `a^0 <-> a^1`.
pub fn j_swap(x: &TaggedInterval) -> TaggedInterval {
    TaggedInterval {
        orientation: x.orientation.flip(),
        param: x.param.clone(),
    }
}

/// `a^0 ⊕ b^0 = [μ(a^0 ∪ b^1)]^0`
pub fn oplus_i0(a: &TaggedInterval, b: &TaggedInterval) -> TaggedInterval {
    assert!(a.is_lower() && b.is_lower(), "oplus_i0 expects lower intervals");
    TaggedInterval::lower(union_measure(a, &j_swap(b)))
}

/// `a^0 ⊙ b^0 = [μ(a^0 ∩ b^1)]^0`
pub fn odot_i0(a: &TaggedInterval, b: &TaggedInterval) -> TaggedInterval {
    assert!(a.is_lower() && b.is_lower(), "odot_i0 expects lower intervals");
    TaggedInterval::lower(intersection_measure(a, &j_swap(b)))
}

/// `i(a^0) = [μ(complement of a^0)]^0`
pub fn involution_i(a: &TaggedInterval) -> TaggedInterval {
    assert!(a.is_lower(), "involution_i expects a lower interval");
    let outside = BigRational::one() - a.endpoints().length();
    TaggedInterval::lower(unit(outside))
}

/// `j_1(b^1) = (1 - b)^0`
fn j_upper(b: &TaggedInterval) -> TaggedInterval {
    TaggedInterval::lower(b.param.complement())
}

/// `a^1 ⊕_1 b^1 = [μ(a^1 ∪ j_1(b^1))]^1`
pub fn oplus_i1(a: &TaggedInterval, b: &TaggedInterval) -> TaggedInterval {
    assert!(!a.is_lower() && !b.is_lower(), "oplus_i1 expects upper intervals");
    let covered = a.endpoints().union_length(&j_upper(b).endpoints());
    TaggedInterval::upper(unit(covered))
}

/// `¬_1(b^1) = (1 - b)^1`
pub fn neg_i1(b: &TaggedInterval) -> TaggedInterval {
    assert!(!b.is_lower(), "neg_i1 expects an upper interval");
    TaggedInterval::upper(b.param.complement())
}

/// The star operation on `I_0 ∪ I_1`: lower with lower uses `⊕`, mixed
/// pairs move the lower argument to the upper family and use `⊕_1`, and
/// two upper arguments give the whole interval.
pub fn star(x: &TaggedInterval, y: &TaggedInterval) -> TaggedInterval {
    match (x.orientation, y.orientation) {
        (Orientation::Lower, Orientation::Lower) => oplus_i0(x, y),
        (Orientation::Lower, Orientation::Upper) => oplus_i1(&j_swap(x), y),
        (Orientation::Upper, Orientation::Lower) => oplus_i1(&j_swap(y), x),
        (Orientation::Upper, Orientation::Upper) => TaggedInterval::full(),
    }
}

/// `¬a^0 = a^1`, `¬a^1 = a^0`.
pub fn star_neg(x: &TaggedInterval) -> TaggedInterval {
    j_swap(x)
}

/// An axis-aligned closed rectangle in the unit square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisRect {
    pub x: ClosedInterval,
    pub y: ClosedInterval,
}

impl AxisRect {
    pub fn area(&self) -> BigRational {
        self.x.length() * self.y.length()
    }

    pub fn intersection(&self, other: &Self) -> Option<Self> {
        Some(Self {
            x: self.x.intersection(&other.x)?,
            y: self.y.intersection(&other.y)?,
        })
    }

    pub fn union_area(&self, other: &Self) -> BigRational {
        let overlap = self
            .intersection(other)
            .map_or_else(BigRational::zero, |r| r.area());
        self.area() + other.area() - overlap
    }
}

/// `R^0(λ) = {y <= λ}` or `R^1(λ) = {y >= 1 - λ}` inside the unit square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StripRectangle {
    pub orientation: Orientation,
    pub level: UnitRational,
}

impl StripRectangle {
    pub fn lower(level: UnitRational) -> Self {
        Self {
            orientation: Orientation::Lower,
            level,
        }
    }

    pub fn upper(level: UnitRational) -> Self {
        Self {
            orientation: Orientation::Upper,
            level,
        }
    }

    pub fn geometry(&self) -> AxisRect {
        let x = ClosedInterval::new(BigRational::zero(), BigRational::one());
        let y = match self.orientation {
            Orientation::Lower => {
                ClosedInterval::new(BigRational::zero(), self.level.value().clone())
            }
            Orientation::Upper => {
                ClosedInterval::new(self.level.complement().into_inner(), BigRational::one())
            }
        };
        AxisRect { x, y }
    }

    pub fn area(&self) -> UnitRational {
        unit(self.geometry().area())
    }

    fn swap(&self) -> Self {
        Self {
            orientation: self.orientation.flip(),
            level: self.level.clone(),
        }
    }
}

impl fmt::Display for StripRectangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R{}({})", self.orientation.superscript(), self.level)
    }
}

/// `R^0(a) ⊕ R^0(b) = [μ(R^0(a) ∪ R^1(b))]^0`
pub fn oplus_r0(a: &StripRectangle, b: &StripRectangle) -> StripRectangle {
    assert!(
        a.orientation == Orientation::Lower && b.orientation == Orientation::Lower,
        "oplus_r0 expects lower strips"
    );
    StripRectangle::lower(unit(a.geometry().union_area(&b.swap().geometry())))
}

/// `R^0(a) ⊙ R^0(b) = [μ(R^0(a) ∩ R^1(b))]^0`
pub fn odot_r0(a: &StripRectangle, b: &StripRectangle) -> StripRectangle {
    assert!(
        a.orientation == Orientation::Lower && b.orientation == Orientation::Lower,
        "odot_r0 expects lower strips"
    );
    let overlap = a
        .geometry()
        .intersection(&b.swap().geometry())
        .map_or_else(BigRational::zero, |r| r.area());
    StripRectangle::lower(unit(overlap))
}

/// `R^0(a) ↦ [μ(complement of R^0(a))]^0`
pub fn neg_r0(a: &StripRectangle) -> StripRectangle {
    StripRectangle::lower(unit(BigRational::one() - a.geometry().area()))
}

/// `([0, 1], min(x + y, 1), 1 - x, 0, 1)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Lukasiewicz;

impl Algebra for Lukasiewicz {
    type Elem = UnitRational;

    fn name(&self) -> &str {
        "lukasiewicz"
    }

    fn domain(&self) -> Domain<UnitRational> {
        Domain::Parametric
    }

    fn embed(&self, t: &UnitRational) -> Vec<UnitRational> {
        vec![t.clone()]
    }

    fn oplus(&self, x: &UnitRational, y: &UnitRational) -> UnitRational {
        lukasiewicz_oplus(x, y)
    }

    fn neg(&self, x: &UnitRational) -> UnitRational {
        x.complement()
    }

    fn zero(&self) -> UnitRational {
        UnitRational::zero()
    }

    fn one(&self) -> UnitRational {
        UnitRational::one()
    }

    fn eq(&self, a: &UnitRational, b: &UnitRational) -> bool {
        a == b
    }

    fn render(&self, x: &UnitRational) -> String {
        x.to_string()
    }
}

/// The lower family with `⊕` and zero `0^0`, or with `⊙` and zero `1^0`
/// when `dual` is set.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntervalI0 {
    pub dual: bool,
}

impl Algebra for IntervalI0 {
    type Elem = TaggedInterval;

    fn name(&self) -> &str {
        if self.dual {
            "interval-i0-odot"
        } else {
            "interval-i0"
        }
    }

    fn domain(&self) -> Domain<TaggedInterval> {
        Domain::Parametric
    }

    fn embed(&self, t: &UnitRational) -> Vec<TaggedInterval> {
        vec![TaggedInterval::lower(t.clone())]
    }

    fn oplus(&self, x: &TaggedInterval, y: &TaggedInterval) -> TaggedInterval {
        if self.dual {
            odot_i0(x, y)
        } else {
            oplus_i0(x, y)
        }
    }

    fn neg(&self, x: &TaggedInterval) -> TaggedInterval {
        involution_i(x)
    }

    fn zero(&self) -> TaggedInterval {
        if self.dual {
            TaggedInterval::full()
        } else {
            TaggedInterval::lower(UnitRational::zero())
        }
    }

    fn one(&self) -> TaggedInterval {
        if self.dual {
            TaggedInterval::lower(UnitRational::zero())
        } else {
            TaggedInterval::full()
        }
    }

    fn eq(&self, a: &TaggedInterval, b: &TaggedInterval) -> bool {
        a.same_set(b)
    }

    fn render(&self, x: &TaggedInterval) -> String {
        x.to_string()
    }
}

/// The upper family with `⊕_1`, `¬_1`, zero `[1, 1]` and one `[0, 1]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct IntervalI1;

impl Algebra for IntervalI1 {
    type Elem = TaggedInterval;

    fn name(&self) -> &str {
        "interval-i1"
    }

    fn domain(&self) -> Domain<TaggedInterval> {
        Domain::Parametric
    }

    fn embed(&self, t: &UnitRational) -> Vec<TaggedInterval> {
        vec![TaggedInterval::upper(t.clone())]
    }

    fn oplus(&self, x: &TaggedInterval, y: &TaggedInterval) -> TaggedInterval {
        oplus_i1(x, y)
    }

    fn neg(&self, x: &TaggedInterval) -> TaggedInterval {
        neg_i1(x)
    }

    fn zero(&self) -> TaggedInterval {
        TaggedInterval::upper(UnitRational::zero())
    }

    fn one(&self) -> TaggedInterval {
        TaggedInterval::upper(UnitRational::one())
    }

    fn eq(&self, a: &TaggedInterval, b: &TaggedInterval) -> bool {
        a.same_set(b)
    }

    fn render(&self, x: &TaggedInterval) -> String {
        x.to_string()
    }
}

/// Lower strips of the unit square with `⊕` (or `⊙` when `dual`).
#[derive(Clone, Copy, Debug, Default)]
pub struct Rectangle {
    pub dual: bool,
}

impl Algebra for Rectangle {
    type Elem = StripRectangle;

    fn name(&self) -> &str {
        if self.dual {
            "rectangle-odot"
        } else {
            "rectangle"
        }
    }

    fn domain(&self) -> Domain<StripRectangle> {
        Domain::Parametric
    }

    fn embed(&self, t: &UnitRational) -> Vec<StripRectangle> {
        vec![StripRectangle::lower(t.clone())]
    }

    fn oplus(&self, x: &StripRectangle, y: &StripRectangle) -> StripRectangle {
        if self.dual {
            odot_r0(x, y)
        } else {
            oplus_r0(x, y)
        }
    }

    fn neg(&self, x: &StripRectangle) -> StripRectangle {
        neg_r0(x)
    }

    fn zero(&self) -> StripRectangle {
        let level = if self.dual {
            UnitRational::one()
        } else {
            UnitRational::zero()
        };
        StripRectangle::lower(level)
    }

    fn one(&self) -> StripRectangle {
        let level = if self.dual {
            UnitRational::zero()
        } else {
            UnitRational::one()
        };
        StripRectangle::lower(level)
    }

    fn eq(&self, a: &StripRectangle, b: &StripRectangle) -> bool {
        a.geometry() == b.geometry()
    }

    fn render(&self, x: &StripRectangle) -> String {
        x.to_string()
    }
}

/// Which degenerate interval plays the role of 0 in the star algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StarZero {
    /// `0^0 = [0, 0]`
    Lower,
    /// `0^1 = [1, 1]`
    Upper,
}

/// `I_0 ∪ I_1` with the star operation; one is the whole interval.
#[derive(Clone, Copy, Debug)]
pub struct StarAlgebra {
    pub zero: StarZero,
}

impl Default for StarAlgebra {
    fn default() -> Self {
        Self {
            zero: StarZero::Lower,
        }
    }
}

impl Algebra for StarAlgebra {
    type Elem = TaggedInterval;

    fn name(&self) -> &str {
        "star"
    }

    fn params(&self) -> Params {
        let mut params = Params::new();
        params.insert("zero".into(), self.zero().to_string().into());
        params
    }

    fn domain(&self) -> Domain<TaggedInterval> {
        Domain::Parametric
    }

    fn embed(&self, t: &UnitRational) -> Vec<TaggedInterval> {
        vec![TaggedInterval::lower(t.clone()), TaggedInterval::upper(t.clone())]
    }

    fn oplus(&self, x: &TaggedInterval, y: &TaggedInterval) -> TaggedInterval {
        star(x, y)
    }

    fn neg(&self, x: &TaggedInterval) -> TaggedInterval {
        star_neg(x)
    }

    fn zero(&self) -> TaggedInterval {
        match self.zero {
            StarZero::Lower => TaggedInterval::lower(UnitRational::zero()),
            StarZero::Upper => TaggedInterval::upper(UnitRational::zero()),
        }
    }

    fn one(&self) -> TaggedInterval {
        TaggedInterval::full()
    }

    fn eq(&self, a: &TaggedInterval, b: &TaggedInterval) -> bool {
        a.same_set(b)
    }

    fn render(&self, x: &TaggedInterval) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: i64, d: i64) -> UnitRational {
        UnitRational::ratio(n, d).unwrap()
    }

    fn lo(n: i64, d: i64) -> TaggedInterval {
        TaggedInterval::lower(u(n, d))
    }

    fn up(n: i64, d: i64) -> TaggedInterval {
        TaggedInterval::upper(u(n, d))
    }

    #[test]
    fn lukasiewicz_examples() {
        assert_eq!(lukasiewicz_oplus(&u(1, 2), &u(7, 10)), u(1, 1));
        assert_eq!(lukasiewicz_oplus(&u(0, 1), &u(3, 7)), u(3, 7));
        assert_eq!(lukasiewicz_oplus(&u(3, 10), &u(2, 5)), u(7, 10));
    }

    #[test]
    fn union_and_intersection_examples() {
        assert_eq!(union_measure(&lo(6, 10), &up(6, 10)), u(1, 1));
        assert_eq!(union_measure(&lo(3, 10), &up(4, 10)), u(7, 10));
        assert_eq!(union_measure(&lo(0, 1), &up(0, 1)), u(0, 1));
        assert_eq!(intersection_measure(&lo(6, 10), &up(6, 10)), u(1, 5));
        assert_eq!(intersection_measure(&lo(3, 10), &up(4, 10)), u(0, 1));
        assert_eq!(intersection_measure(&lo(1, 1), &up(3, 8)), u(3, 8));
    }

    #[test]
    fn touching_endpoints_cover_with_null_overlap() {
        // [0, 3/10] and [3/10, 1] meet in a single point
        assert_eq!(union_measure(&lo(3, 10), &up(7, 10)), u(1, 1));
        assert_eq!(intersection_measure(&lo(3, 10), &up(7, 10)), u(0, 1));
    }

    #[test]
    #[should_panic]
    fn union_measure_rejects_wrong_orientation() {
        union_measure(&up(1, 2), &up(1, 2));
    }

    #[test]
    fn i0_examples() {
        assert_eq!(oplus_i0(&lo(3, 10), &lo(4, 10)), lo(7, 10));
        assert_eq!(oplus_i0(&lo(6, 10), &lo(6, 10)), lo(1, 1));
        assert_eq!(oplus_i0(&lo(0, 1), &lo(5, 9)), lo(5, 9));
        assert_eq!(odot_i0(&lo(6, 10), &lo(6, 10)), lo(1, 5));
        assert_eq!(odot_i0(&lo(3, 10), &lo(4, 10)), lo(0, 1));
        assert_eq!(odot_i0(&lo(1, 1), &lo(2, 9)), lo(2, 9));
    }

    #[test]
    fn involutions() {
        assert_eq!(involution_i(&lo(3, 10)), lo(7, 10));
        assert_eq!(involution_i(&lo(1, 1)), lo(0, 1));
        assert_eq!(involution_i(&involution_i(&lo(2, 7))), lo(2, 7));

        let x = lo(8, 10);
        assert_eq!(j_swap(&x), up(8, 10));
        assert_eq!(
            j_swap(&x).endpoints(),
            ClosedInterval::new(BigRational::new(1.into(), 5.into()), BigRational::one())
        );
        assert_eq!(j_swap(&j_swap(&x)), x);
        assert_eq!(j_swap(&x).measure(), x.measure());
    }

    #[test]
    fn i1_examples() {
        assert!(oplus_i1(&up(1, 2), &up(3, 10)).same_set(&TaggedInterval::full()));
        assert_eq!(oplus_i1(&up(2, 10), &up(6, 10)), up(6, 10));
        // 0^1 is not an identity for ⊕_1
        assert_eq!(oplus_i1(&up(0, 1), &up(3, 10)), up(7, 10));
        assert_eq!(neg_i1(&up(3, 10)), up(7, 10));
    }

    #[test]
    fn star_examples() {
        assert!(star(&lo(3, 10), &up(2, 10)).same_set(&TaggedInterval::full()));
        assert_eq!(star(&lo(3, 10), &up(7, 10)), up(6, 10));
        assert_eq!(star(&up(7, 10), &lo(3, 10)), up(6, 10));
        let r = star(&lo(0, 1), &up(3, 10));
        assert_eq!(r, up(7, 10));
        assert!(!r.same_set(&up(3, 10)));
        assert!(star(&up(1, 5), &up(1, 3)).same_set(&TaggedInterval::full()));
        assert_eq!(star(&lo(1, 5), &lo(1, 5)), lo(2, 5));
    }

    #[test]
    fn denoted_set_equality() {
        assert!(lo(1, 1).same_set(&up(1, 1)));
        assert!(!lo(0, 1).same_set(&up(0, 1)));
        assert!(!lo(1, 2).same_set(&up(1, 2)));
    }

    #[test]
    fn strip_examples() {
        let r = |n, d| StripRectangle::lower(u(n, d));
        assert_eq!(oplus_r0(&r(3, 10), &r(4, 10)), r(7, 10));
        assert_eq!(oplus_r0(&r(6, 10), &r(6, 10)), r(1, 1));
        assert_eq!(oplus_r0(&r(0, 1), &r(4, 9)), r(4, 9));
        assert_eq!(odot_r0(&r(6, 10), &r(6, 10)), r(1, 5));
        assert_eq!(neg_r0(&r(3, 10)), r(7, 10));
        assert_eq!(r(3, 10).area(), u(3, 10));
        assert_eq!(r(3, 10).to_string(), "R0(3/10)");
    }

    #[test]
    fn rendering() {
        assert_eq!(lo(3, 10).to_string(), "3/10^0");
        assert_eq!(up(1, 1).to_string(), "1^1");
        assert_eq!(lo(0, 1).to_string(), "0^0");
    }
}

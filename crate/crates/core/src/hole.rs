//! The unit square with a centred hole.
//!
//! A lower strip `{y <= λ}` minus the hole has measure `φ(λ) = λ - A(λ)`,
//! where `A(λ)` is the part of the hole below height `λ`. Measures live in
//! `[0, M]` with `M = 1 - (hole area)`, where the truncated sum
//! `min(M, s + t)` is an MV-algebra; conjugating by `φ` carries it back to
//! heights in `[0, 1]`.
//!
//! Square holes with rational side are handled exactly. Disk holes need
//! `π`, `asin` and a numeric inverse, so they run in `f64`.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Domain, Equality, Params, DEFAULT_TOLERANCE};
use crate::error::{Error, Result};
use crate::rational::{format_sig, ratio_to_f64, UnitRational};

/// Residual bound for the numeric inverse of `φ` on disk holes.
pub const DISK_INVERSE_TOLERANCE: f64 = 1e-12;

const BISECTION_MAX_STEPS: usize = 200;

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

fn check_unit_exact(value: &BigRational) -> Result<()> {
    if value.is_negative() || *value > BigRational::one() {
        return Err(Error::Domain {
            value: value.to_string(),
            range: "[0, 1]".into(),
        });
    }
    Ok(())
}

fn check_unit(value: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&value) {
        return Err(Error::Domain {
            value: value.to_string(),
            range: "[0, 1]".into(),
        });
    }
    Ok(())
}

/// `min(mass, a + b)`.
pub fn truncated_oplus(mass: &BigRational, a: &BigRational, b: &BigRational) -> BigRational {
    let sum = a + b;
    if sum > *mass {
        mass.clone()
    } else {
        sum
    }
}

/// `mass - x`.
pub fn truncated_neg(mass: &BigRational, x: &BigRational) -> BigRational {
    mass - x
}

/// A square hole of side `k` centred at `(1/2, 1/2)`, `0 < k < 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareHole {
    k: BigRational,
}

impl SquareHole {
    pub fn new(k: BigRational) -> Result<Self> {
        if !k.is_positive() || k >= BigRational::one() {
            return Err(Error::Domain {
                value: k.to_string(),
                range: "(0, 1) for a square hole side".into(),
            });
        }
        Ok(Self { k })
    }

    pub fn side(&self) -> &BigRational {
        &self.k
    }

    /// The heights spanned by the hole, `[(1-k)/2, (1+k)/2]`.
    pub fn band(&self) -> (BigRational, BigRational) {
        let h = half();
        (&h - &self.k * &h, &h + &self.k * &h)
    }

    pub fn total_area(&self) -> BigRational {
        &self.k * &self.k
    }

    pub fn mass(&self) -> BigRational {
        BigRational::one() - self.total_area()
    }

    pub fn area_below(&self, level: &BigRational) -> Result<BigRational> {
        check_unit_exact(level)?;
        let (bottom, top) = self.band();
        Ok(if *level <= bottom {
            BigRational::zero()
        } else if *level >= top {
            self.total_area()
        } else {
            &self.k * (level - bottom)
        })
    }

    pub fn phi(&self, level: &BigRational) -> Result<BigRational> {
        Ok(level - self.area_below(level)?)
    }

    /// Inverts the three linear pieces of `φ`; the middle one has slope
    /// `1 - k`.
    pub fn phi_inverse(&self, t: &BigRational) -> Result<BigRational> {
        let mass = self.mass();
        if t.is_negative() || *t > mass {
            return Err(Error::Domain {
                value: t.to_string(),
                range: format!("[0, {mass}]"),
            });
        }
        let (bottom, top) = self.band();
        let top_mass = &top - self.total_area();
        Ok(if *t <= bottom {
            t.clone()
        } else if *t <= top_mass {
            (t - &self.k * &bottom) / (BigRational::one() - &self.k)
        } else {
            t + self.total_area()
        })
    }

    /// `φ⁻¹(min(M, φ(a) + φ(b)))`.
    pub fn induced_oplus(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        let t = truncated_oplus(&self.mass(), &self.phi(a)?, &self.phi(b)?);
        self.phi_inverse(&t)
    }

    /// `φ⁻¹(M - φ(λ))`.
    pub fn induced_neg(&self, level: &BigRational) -> Result<BigRational> {
        self.phi_inverse(&truncated_neg(&self.mass(), &self.phi(level)?))
    }

    /// `max |a ⊕ b - min(1, a + b)|` over the grid pairs `(i/n, j/n)`.
    pub fn sup_deviation(&self, n: u64) -> BigRational {
        let mut worst = BigRational::zero();
        for i in 0..=n {
            for j in 0..=n {
                let a = BigRational::new(i.into(), n.into());
                let b = BigRational::new(j.into(), n.into());
                let induced = self.induced_oplus(&a, &b).expect("grid point in range");
                let luk = UnitRational::grid(i, n).truncated_add(&UnitRational::grid(j, n));
                let gap = (induced - luk.into_inner()).abs();
                if gap > worst {
                    worst = gap;
                }
            }
        }
        worst
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        let half_side = ratio_to_f64(&self.k) / 2.0;
        (x - 0.5).abs() < half_side && (y - 0.5).abs() < half_side
    }
}

/// A disk hole of radius `r` centred at `(1/2, 1/2)`, `0 < r < 1/2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DiskHole {
    r: f64,
}

impl DiskHole {
    pub fn new(r: f64) -> Result<Self> {
        if !(r > 0.0 && r < 0.5) {
            return Err(Error::Domain {
                value: r.to_string(),
                range: "(0, 1/2) for a disk hole radius".into(),
            });
        }
        Ok(Self { r })
    }

    pub fn radius(&self) -> f64 {
        self.r
    }

    pub fn total_area(&self) -> f64 {
        std::f64::consts::PI * self.r * self.r
    }

    pub fn mass(&self) -> f64 {
        1.0 - self.total_area()
    }

    /// Area of the disk below height `level` (a circular segment).
    pub fn area_below(&self, level: f64) -> Result<f64> {
        check_unit(level)?;
        let r = self.r;
        let d = level - 0.5;
        Ok(if d <= -r {
            0.0
        } else if d >= r {
            self.total_area()
        } else {
            r * r * (std::f64::consts::FRAC_PI_2 + (d / r).asin()) + d * (r * r - d * d).sqrt()
        })
    }

    pub fn phi(&self, level: f64) -> Result<f64> {
        Ok(level - self.area_below(level)?)
    }

    /// Bisection on `[0, 1]` until `|φ(λ) - t| <= 1e-12`.
    pub fn phi_inverse(&self, t: f64) -> Result<f64> {
        let mass = self.mass();
        if !(0.0..=mass).contains(&t) {
            return Err(Error::Domain {
                value: t.to_string(),
                range: format!("[0, {mass}]"),
            });
        }
        if t == 0.0 {
            return Ok(0.0);
        }
        if t == mass {
            return Ok(1.0);
        }
        let (mut lo, mut hi) = (0.0_f64, 1.0_f64);
        let mut mid = 0.5;
        for _ in 0..BISECTION_MAX_STEPS {
            mid = 0.5 * (lo + hi);
            let residual = self.phi(mid)? - t;
            if residual.abs() <= DISK_INVERSE_TOLERANCE {
                break;
            }
            if residual < 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= f64::EPSILON * 0.5 {
                break;
            }
        }
        Ok(mid)
    }

    pub fn induced_oplus(&self, a: f64, b: f64) -> Result<f64> {
        let t = (self.phi(a)? + self.phi(b)?).min(self.mass());
        self.phi_inverse(t)
    }

    pub fn induced_neg(&self, level: f64) -> Result<f64> {
        let t = (self.mass() - self.phi(level)?).clamp(0.0, self.mass());
        self.phi_inverse(t)
    }

    fn contains(&self, x: f64, y: f64) -> bool {
        let (dx, dy) = (x - 0.5, y - 0.5);
        dx * dx + dy * dy < self.r * self.r
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum HoleProfile {
    Null,
    Square(SquareHole),
    Disk(DiskHole),
}

impl HoleProfile {
    pub fn total_area(&self) -> f64 {
        match self {
            HoleProfile::Null => 0.0,
            HoleProfile::Square(s) => ratio_to_f64(&s.total_area()),
            HoleProfile::Disk(d) => d.total_area(),
        }
    }

    pub fn mass(&self) -> f64 {
        match self {
            HoleProfile::Null => 1.0,
            HoleProfile::Square(s) => ratio_to_f64(&s.mass()),
            HoleProfile::Disk(d) => d.mass(),
        }
    }

    fn exact(level: f64) -> Result<BigRational> {
        check_unit(level)?;
        BigRational::from_float(level).ok_or_else(|| Error::Domain {
            value: level.to_string(),
            range: "finite numbers".into(),
        })
    }

    pub fn area_below(&self, level: f64) -> Result<f64> {
        match self {
            HoleProfile::Null => check_unit(level).map(|_| 0.0),
            HoleProfile::Square(s) => s.area_below(&Self::exact(level)?).map(|v| ratio_to_f64(&v)),
            HoleProfile::Disk(d) => d.area_below(level),
        }
    }

    pub fn phi(&self, level: f64) -> Result<f64> {
        match self {
            HoleProfile::Null => check_unit(level).map(|_| level),
            HoleProfile::Square(s) => s.phi(&Self::exact(level)?).map(|v| ratio_to_f64(&v)),
            HoleProfile::Disk(d) => d.phi(level),
        }
    }

    pub fn phi_inverse(&self, t: f64) -> Result<f64> {
        match self {
            HoleProfile::Null => check_unit(t).map(|_| t),
            HoleProfile::Square(s) => {
                let t = BigRational::from_float(t).ok_or_else(|| Error::Domain {
                    value: t.to_string(),
                    range: "finite numbers".into(),
                })?;
                s.phi_inverse(&t).map(|v| ratio_to_f64(&v))
            }
            HoleProfile::Disk(d) => d.phi_inverse(t),
        }
    }

    pub fn induced_oplus(&self, a: f64, b: f64) -> Result<f64> {
        match self {
            HoleProfile::Null => {
                check_unit(a)?;
                check_unit(b)?;
                Ok((a + b).min(1.0))
            }
            HoleProfile::Square(s) => s
                .induced_oplus(&Self::exact(a)?, &Self::exact(b)?)
                .map(|v| ratio_to_f64(&v)),
            HoleProfile::Disk(d) => d.induced_oplus(a, b),
        }
    }

    /// Whether `(x, y)` lies in the (open) hole.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        match self {
            HoleProfile::Null => false,
            HoleProfile::Square(s) => s.contains(x, y),
            HoleProfile::Disk(d) => d.contains(x, y),
        }
    }

    /// `max |a ⊕ b - min(1, a + b)|` over the grid pairs `(i/n, j/n)`;
    /// exact for square holes.
    pub fn sup_deviation(&self, n: u64) -> Result<f64> {
        if n == 0 {
            return Err(Error::InvalidParameter("grid resolution must be positive".into()));
        }
        Ok(match self {
            HoleProfile::Null => 0.0,
            HoleProfile::Square(s) => ratio_to_f64(&s.sup_deviation(n)),
            HoleProfile::Disk(d) => {
                let mut worst: f64 = 0.0;
                for i in 0..=n {
                    for j in 0..=n {
                        let (a, b) = (i as f64 / n as f64, j as f64 / n as f64);
                        let gap = (d.induced_oplus(a, b)? - (a + b).min(1.0)).abs();
                        worst = worst.max(gap);
                    }
                }
                worst
            }
        })
    }
}

/// Fraction of `samples` uniform points of the unit square that fall inside
/// the hole at height at most `level`. One ChaCha stream per call, so the
/// estimate depends only on `(seed, samples)`.
pub fn monte_carlo_hole_area(profile: &HoleProfile, level: f64, samples: u64, seed: u64) -> f64 {
    assert!(samples > 0, "at least one sample");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inside = 0u64;
    for _ in 0..samples {
        let x: f64 = rng.gen();
        let y: f64 = rng.gen();
        if y <= level && profile.contains(x, y) {
            inside += 1;
        }
    }
    inside as f64 / samples as f64
}

/// `([0, M], min(M, a + b), M - x, 0, M)` on exact measures.
#[derive(Clone, Debug)]
pub struct TruncatedAlgebra {
    mass: BigRational,
}

impl TruncatedAlgebra {
    pub fn new(mass: BigRational) -> Result<Self> {
        if !mass.is_positive() || mass > BigRational::one() {
            return Err(Error::Domain {
                value: mass.to_string(),
                range: "(0, 1] for the total mass".into(),
            });
        }
        Ok(Self { mass })
    }

    pub fn mass(&self) -> &BigRational {
        &self.mass
    }
}

impl Algebra for TruncatedAlgebra {
    type Elem = BigRational;

    fn name(&self) -> &str {
        "truncated"
    }

    fn params(&self) -> Params {
        let mut params = Params::new();
        params.insert("mass".into(), self.mass.to_string().into());
        params
    }

    fn domain(&self) -> Domain<BigRational> {
        Domain::Parametric
    }

    fn embed(&self, t: &UnitRational) -> Vec<BigRational> {
        vec![t.value() * &self.mass]
    }

    fn oplus(&self, x: &BigRational, y: &BigRational) -> BigRational {
        truncated_oplus(&self.mass, x, y)
    }

    fn neg(&self, x: &BigRational) -> BigRational {
        truncated_neg(&self.mass, x)
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        self.mass.clone()
    }

    fn eq(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }

    fn render(&self, x: &BigRational) -> String {
        x.to_string()
    }
}

/// Heights `[0, 1]` with the operations induced through a square hole.
#[derive(Clone, Debug)]
pub struct SquareHoleAlgebra {
    pub hole: SquareHole,
}

impl Algebra for SquareHoleAlgebra {
    type Elem = BigRational;

    fn name(&self) -> &str {
        "square-hole"
    }

    fn params(&self) -> Params {
        let mut params = Params::new();
        params.insert("k".into(), self.hole.side().to_string().into());
        params
    }

    fn domain(&self) -> Domain<BigRational> {
        Domain::Parametric
    }

    fn embed(&self, t: &UnitRational) -> Vec<BigRational> {
        vec![t.value().clone()]
    }

    fn oplus(&self, x: &BigRational, y: &BigRational) -> BigRational {
        self.hole.induced_oplus(x, y).expect("heights stay in [0, 1]")
    }

    fn neg(&self, x: &BigRational) -> BigRational {
        self.hole.induced_neg(x).expect("heights stay in [0, 1]")
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn eq(&self, a: &BigRational, b: &BigRational) -> bool {
        a == b
    }

    fn render(&self, x: &BigRational) -> String {
        x.to_string()
    }
}

/// Heights `[0, 1]` with the operations induced through a disk hole,
/// compared up to `tolerance`.
#[derive(Clone, Debug)]
pub struct DiskHoleAlgebra {
    pub hole: DiskHole,
    pub tolerance: f64,
}

impl DiskHoleAlgebra {
    pub fn new(hole: DiskHole) -> Self {
        Self {
            hole,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}

impl Algebra for DiskHoleAlgebra {
    type Elem = f64;

    fn name(&self) -> &str {
        "disk-hole"
    }

    fn params(&self) -> Params {
        let mut params = Params::new();
        params.insert("r".into(), format_sig(self.hole.radius(), 12).into());
        params
    }

    fn domain(&self) -> Domain<f64> {
        Domain::Parametric
    }

    fn embed(&self, t: &UnitRational) -> Vec<f64> {
        vec![t.to_f64()]
    }

    fn oplus(&self, x: &f64, y: &f64) -> f64 {
        self.hole
            .induced_oplus(x.clamp(0.0, 1.0), y.clamp(0.0, 1.0))
            .expect("heights stay in [0, 1]")
    }

    fn neg(&self, x: &f64) -> f64 {
        self.hole
            .induced_neg(x.clamp(0.0, 1.0))
            .expect("heights stay in [0, 1]")
    }

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn equality(&self) -> Equality {
        Equality::Tolerance {
            epsilon: self.tolerance,
        }
    }

    fn eq(&self, a: &f64, b: &f64) -> bool {
        (a - b).abs() <= self.tolerance
    }

    fn render(&self, x: &f64) -> String {
        format_sig(*x, 12)
    }
}

//! Complex scalars, principal-branch powers, the colour normalisation `a^ν`
//! and seeded sampling of parameter points and colours.
//!
//! Every fractional power in the crate goes through [`cpow`], so all
//! quantities share the principal branch of `Log q` and `Log s`. A copy of
//! the algebra labelled by colour `c` has deformation parameter
//! `q^c = exp(c · Log q)`, and powers of it are always taken as
//! `exp(c · x · Log q)`; only square roots can introduce sign ambiguity.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::fmt;

use crate::error::{AlgebraError, Result};

pub type C64 = Complex64;

/// Minimum admissible `|q² − 1|`.
pub const DEFAULT_GUARD: f64 = 0.1;

pub const ONE: C64 = C64::new(1.0, 0.0);
pub const ZERO: C64 = C64::new(0.0, 0.0);

/// Principal complex power `exp(exponent · Log base)`.
pub fn cpow(base: C64, exponent: C64) -> Result<C64> {
    if base == ZERO {
        return Err(AlgebraError::ZeroBase);
    }
    if exponent == ZERO {
        return Ok(ONE);
    }
    Ok((exponent * base.ln()).exp())
}

fn singular(exponent: C64, distance: f64, guard: f64) -> AlgebraError {
    AlgebraError::Singular {
        exponent: if exponent.im == 0.0 {
            format!("{}", 2.0 * exponent.re)
        } else {
            format!("({})", 2.0 * exponent)
        },
        distance,
        guard,
    }
}

/// A deformation-parameter point `(q, s)` with the singularity guard it was
/// validated against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamPoint {
    q: C64,
    s: C64,
    guard: f64,
}

impl ParamPoint {
    pub fn new(q: C64, s: C64) -> Result<Self> {
        Self::with_guard(q, s, DEFAULT_GUARD)
    }

    pub fn with_guard(q: C64, s: C64, guard: f64) -> Result<Self> {
        if q == ZERO {
            return Err(AlgebraError::ZeroParameter { name: "q" });
        }
        if s == ZERO {
            return Err(AlgebraError::ZeroParameter { name: "s" });
        }
        let distance = (q * q - ONE).norm();
        if distance < guard {
            return Err(singular(ONE, distance, guard));
        }
        Ok(Self { q, s, guard })
    }

    pub fn q(&self) -> C64 {
        self.q
    }

    pub fn s(&self) -> C64 {
        self.s
    }

    pub fn guard(&self) -> f64 {
        self.guard
    }

    /// Principal `Log q`.
    pub fn log_q(&self) -> C64 {
        self.q.ln()
    }

    /// Principal `Log s`.
    pub fn log_s(&self) -> C64 {
        self.s.ln()
    }

    /// `q^x` on the principal branch.
    pub fn q_pow(&self, x: C64) -> C64 {
        (x * self.log_q()).exp()
    }

    /// `s^x` on the principal branch.
    pub fn s_pow(&self, x: C64) -> C64 {
        (x * self.log_s()).exp()
    }

    /// Value of the group-like element `q^{αZ} s^{βZ}` at `Z = z`.
    pub fn exponential_at(&self, alpha: C64, beta: C64, z: C64) -> C64 {
        (z * (alpha * self.log_q() + beta * self.log_s())).exp()
    }

    /// `1 / (q^{2c} − 1)` for the copy with colour `c`, guarded.
    pub fn anticommutator_scale(&self, copy: C64) -> Result<C64> {
        let denom = self.q_pow(2.0 * copy) - ONE;
        if denom.norm() < self.guard {
            return Err(singular(copy, denom.norm(), self.guard));
        }
        Ok(denom.inv())
    }

    /// Whether the copy labelled `c` stays clear of the singularity.
    pub fn admits_copy(&self, copy: C64) -> bool {
        (self.q_pow(2.0 * copy) - ONE).norm() >= self.guard
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(q={}, s={})", self.q, self.s)
    }
}

/// A colour parameter `ν ∈ ℂ \ {0}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Colour(C64);

impl Colour {
    pub const IDENTITY: Colour = Colour(ONE);

    pub fn new(value: C64) -> Result<Self> {
        if value == ZERO || !value.is_finite() {
            return Err(AlgebraError::ZeroColour);
        }
        Ok(Self(value))
    }

    pub fn real(value: f64) -> Result<Self> {
        Self::new(C64::new(value, 0.0))
    }

    pub fn value(&self) -> C64 {
        self.0
    }

    /// Group law `ν′ ∘ ν = ν′ν`.
    pub fn compose(self, other: Colour) -> Colour {
        Colour(self.0 * other.0)
    }

    pub fn inverse(self) -> Colour {
        Colour(self.0.inv())
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `a^ν = ((q^{2ν} − 1)/(q² − 1))^{1/2}` on the principal branch.
pub fn colour_norm(q: C64, nu: Colour) -> Result<C64> {
    colour_norm_guarded(q, nu, DEFAULT_GUARD)
}

pub fn colour_norm_guarded(q: C64, nu: Colour, guard: f64) -> Result<C64> {
    let q2 = cpow(q, C64::new(2.0, 0.0))?;
    let denom = q2 - ONE;
    if denom.norm() < guard {
        return Err(singular(ONE, denom.norm(), guard));
    }
    if nu == Colour::IDENTITY {
        return Ok(ONE);
    }
    let ratio = (cpow(q, 2.0 * nu.value())? - ONE) / denom;
    if ratio == ZERO {
        return Ok(ZERO);
    }
    cpow(ratio, C64::new(0.5, 0.0))
}

/// Normalisation of `σ^ν` acting on the copy with colour `c`:
/// `((q^{2cν} − 1)/(q^{2c} − 1))^{1/2}` with all powers lifted from `Log q`.
/// Reduces to [`colour_norm`] at `c = 1`.
pub fn copy_norm(point: &ParamPoint, copy: C64, nu: Colour) -> Result<C64> {
    let scale = point.anticommutator_scale(copy)?;
    if nu == Colour::IDENTITY {
        return Ok(ONE);
    }
    let ratio = (point.q_pow(2.0 * copy * nu.value()) - ONE) * scale;
    if ratio == ZERO {
        return Ok(ZERO);
    }
    cpow(ratio, C64::new(0.5, 0.0))
}

/// One seeded draw: a parameter point and three admissible colours.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Draw {
    pub point: ParamPoint,
    pub colours: [Colour; 3],
}

/// Seeded generator of admissible parameter points and colours.
///
/// Moduli of `q`, `s` and of every colour are uniform in `[0.5, 2]`, phases
/// uniform on the circle. A `q` with `|q² − 1|` under the guard is redrawn,
/// as is any colour `ν` whose copy has `|q^{2ν} − 1|` under the guard.
pub struct ParamSampler {
    rng: ChaCha8Rng,
    guard: f64,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        Self::with_guard(seed, DEFAULT_GUARD)
    }

    pub fn with_guard(seed: u64, guard: f64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            guard,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    fn polar(&mut self) -> C64 {
        let r = self.rng.random_range(0.5..=2.0);
        let theta = self.rng.random_range(-PI..PI);
        C64::from_polar(r, theta)
    }

    pub fn point(&mut self) -> ParamPoint {
        loop {
            let q = self.polar();
            let s = self.polar();
            if let Ok(p) = ParamPoint::with_guard(q, s, self.guard) {
                return p;
            }
        }
    }

    pub fn colour(&mut self, point: &ParamPoint) -> Colour {
        loop {
            let c = self.polar();
            if point.admits_copy(c) {
                return Colour(c);
            }
        }
    }

    /// A colour `ν′` such that both `ν′` and `ν′ν` label admissible copies.
    pub fn colour_composable(&mut self, point: &ParamPoint, nu: Colour) -> Colour {
        loop {
            let c = self.colour(point);
            if point.admits_copy(c.value() * nu.value()) {
                return c;
            }
        }
    }

    pub fn colours<const N: usize>(&mut self, point: &ParamPoint) -> [Colour; N] {
        std::array::from_fn(|_| self.colour(point))
    }

    pub fn draw(&mut self) -> Draw {
        let point = self.point();
        let colours = self.colours::<3>(&point);
        Draw { point, colours }
    }
}

/// `count` deterministic draws for `seed`.
pub fn sample_params(seed: u64, count: usize) -> Vec<Draw> {
    let mut sampler = ParamSampler::new(seed);
    (0..count).map(|_| sampler.draw()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn cpow_trivial_values() {
        assert!((cpow(c(4.0, 0.0), c(0.5, 0.0)).unwrap() - c(2.0, 0.0)).norm() < 1e-15);
        assert_eq!(cpow(c(0.3, -1.7), ZERO).unwrap(), ONE);
        let e = c(std::f64::consts::E, 0.0);
        let v = cpow(e, c(0.0, PI / 2.0)).unwrap();
        assert!((v - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn cpow_rejects_zero_base() {
        assert_eq!(cpow(ZERO, ONE), Err(AlgebraError::ZeroBase));
    }

    #[test]
    fn cpow_uses_principal_branch_on_negative_axis() {
        // Log(-1) = iπ, so (-1)^{1/2} = i rather than -i.
        let v = cpow(c(-1.0, 0.0), c(0.5, 0.0)).unwrap();
        assert!((v - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn colour_norm_values() {
        let one = Colour::IDENTITY;
        for q in [c(2.0, 0.0), c(0.3, 1.1), c(-1.5, 0.2)] {
            assert!((colour_norm(q, one).unwrap() - ONE).norm() < 1e-14);
        }
        let a = colour_norm(c(2.0, 0.0), Colour::real(2.0).unwrap()).unwrap();
        assert!((a - c(5f64.sqrt(), 0.0)).norm() < 1e-14);
    }

    #[test]
    fn colour_norm_singular_q() {
        let err = colour_norm(c(1.0, 0.0), Colour::real(2.0).unwrap()).unwrap_err();
        assert!(matches!(err, AlgebraError::Singular { .. }));
        assert!(colour_norm(c(-1.01, 0.0), Colour::IDENTITY).is_err());
    }

    #[test]
    fn param_point_guard() {
        assert!(ParamPoint::new(c(1.0, 0.0), ONE).is_err());
        assert!(ParamPoint::new(c(2.0, 0.0), ZERO).is_err());
        assert!(ParamPoint::new(c(1.02, 0.0), ONE).is_err());
        assert!(ParamPoint::with_guard(c(1.02, 0.0), ONE, 0.01).is_ok());
    }

    #[test]
    fn copy_norm_reduces_to_colour_norm() {
        let p = ParamPoint::new(c(0.7, 0.9), c(1.2, -0.4)).unwrap();
        let nu = Colour::new(c(1.3, 0.6)).unwrap();
        let a = copy_norm(&p, ONE, nu).unwrap();
        let b = colour_norm(p.q(), nu).unwrap();
        assert!((a - b).norm() < 1e-14);
    }

    #[test]
    fn colour_rejects_zero() {
        assert_eq!(Colour::new(ZERO), Err(AlgebraError::ZeroColour));
    }

    #[test]
    fn sampler_is_deterministic_and_admissible() {
        let a = sample_params(11, 100);
        let b = sample_params(11, 100);
        assert_eq!(a, b);
        assert_eq!(a.len(), 100);
        for d in &a {
            let q = d.point.q();
            assert!((q * q - ONE).norm() >= DEFAULT_GUARD);
            for m in [q.norm(), d.point.s().norm()] {
                assert!((0.5..=2.0).contains(&m));
            }
            for col in d.colours {
                assert!((0.5..=2.0 + 1e-12).contains(&col.value().norm()));
                assert!(d.point.admits_copy(col.value()));
            }
        }
        assert_ne!(sample_params(12, 5), a[..5].to_vec());
    }

    fn arb_c64() -> impl Strategy<Value = C64> {
        (0.5f64..2.0, -PI..PI).prop_map(|(r, t)| C64::from_polar(r, t))
    }

    proptest! {
        #[test]
        fn cpow_is_additive_in_the_exponent(b in arb_c64(), x in arb_c64(), y in arb_c64()) {
            let lhs = cpow(b, x).unwrap() * cpow(b, y).unwrap();
            let rhs = cpow(b, x + y).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1e-300));
        }

        #[test]
        fn colour_norm_squares_to_ratio(seed in 0u64..1000) {
            let mut sampler = ParamSampler::new(seed);
            let p = sampler.point();
            let nu = sampler.colour(&p);
            let a = colour_norm(p.q(), nu).unwrap();
            let q2 = p.q() * p.q();
            let ratio = (cpow(p.q(), 2.0 * nu.value()).unwrap() - ONE) / (q2 - ONE);
            prop_assert!((a * a - ratio).norm() <= 1e-12 * ratio.norm());
            let lhs = a * a * (q2 - ONE);
            let rhs = cpow(p.q(), 2.0 * nu.value()).unwrap() - ONE;
            prop_assert!((lhs - rhs).norm() <= 1e-12 * rhs.norm().max(1.0));
        }
    }
}

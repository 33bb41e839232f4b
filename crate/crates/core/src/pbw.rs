//! Elements of `U_{q,s}(gl(1/1))` in PBW normal form and its graded tensor
//! powers.
//!
//! Normal order is `Z^a H^b q^{αZ} s^{βZ} (ψ⁺)^ε (ψ⁻)^δ`. `Z` and the
//! exponentials are central, so straightening only moves `H` through the
//! odd generators and reorders `ψ⁻ψ⁺`:
//!
//! ```text
//! [H, ψ±] = ±2ψ±    {ψ⁺, ψ⁻} = (q^{2Z} − 1)/(q² − 1)    (ψ±)² = 0
//! ```
//!
//! Every element carries a [`Home`]: the base point `(q, s)` and the colour
//! `c` of the copy `U_{q^c, s}` it lives in. Exponents `α, β` are always
//! measured against the base `Log q`, `Log s`, so in the copy `c` the
//! anticommutator is `(q^{2cZ} − 1)/(q^{2c} − 1)`.

use std::fmt;

use crate::coefficients::{Colour, ParamPoint, C64, ONE, ZERO};
use crate::error::{AlgebraError, Result};
use crate::terms::{exponent_close, Comparison, TermKey, TermMap};

const COLOUR_TOL: f64 = 1e-12;

/// Which copy of the algebra an element belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Home {
    point: ParamPoint,
    colour: C64,
}

impl Home {
    /// The undeformed-colour copy `U_{q,s}`.
    pub fn base(point: ParamPoint) -> Self {
        Self { point, colour: ONE }
    }

    pub fn copy(point: ParamPoint, colour: Colour) -> Self {
        Self {
            point,
            colour: colour.value(),
        }
    }

    pub(crate) fn with_colour(point: ParamPoint, colour: C64) -> Self {
        Self { point, colour }
    }

    pub fn point(&self) -> ParamPoint {
        self.point
    }

    pub fn colour(&self) -> C64 {
        self.colour
    }

    /// Effective deformation parameter `q^c` of this copy.
    pub fn q_copy(&self) -> C64 {
        self.point.q_pow(self.colour)
    }

    pub fn matches(&self, other: &Home) -> bool {
        self.point == other.point
            && (self.colour - other.colour).norm()
                <= COLOUR_TOL * self.colour.norm().max(other.colour.norm()).max(1.0)
    }

    pub fn ensure(&self, other: &Home) -> Result<()> {
        if self.matches(other) {
            Ok(())
        } else {
            Err(AlgebraError::HomeMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }

    pub fn ensure_colour(&self, colour: Colour) -> Result<()> {
        self.ensure(&Home::copy(self.point, colour))
    }
}

impl fmt::Display for Home {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "U[{} ^ {}]", self.point, self.colour)
    }
}

/// A normal-ordered PBW word `Z^a H^b q^{αZ} s^{βZ} (ψ⁺)^ε (ψ⁻)^δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Monomial {
    pub z_deg: u32,
    pub h_deg: u32,
    pub alpha: C64,
    pub beta: C64,
    pub plus: bool,
    pub minus: bool,
}

impl Monomial {
    pub const UNIT: Monomial = Monomial {
        z_deg: 0,
        h_deg: 0,
        alpha: ZERO,
        beta: ZERO,
        plus: false,
        minus: false,
    };

    pub fn z() -> Self {
        Self {
            z_deg: 1,
            ..Self::UNIT
        }
    }

    pub fn h() -> Self {
        Self {
            h_deg: 1,
            ..Self::UNIT
        }
    }

    pub fn psi_plus() -> Self {
        Self {
            plus: true,
            ..Self::UNIT
        }
    }

    pub fn psi_minus() -> Self {
        Self {
            minus: true,
            ..Self::UNIT
        }
    }

    /// The group-like element `q^{αZ} s^{βZ}`.
    pub fn exponential(alpha: C64, beta: C64) -> Self {
        Self {
            alpha,
            beta,
            ..Self::UNIT
        }
    }

    /// Z₂ degree: the number of odd generators mod 2.
    pub fn parity(&self) -> u8 {
        (self.plus as u8 + self.minus as u8) % 2
    }

    pub fn is_unit(&self) -> bool {
        self.same(&Self::UNIT)
    }

    /// True when no `H`, `Z` or odd generator appears (a pure exponential).
    pub fn is_group_like(&self) -> bool {
        self.z_deg == 0 && self.h_deg == 0 && !self.plus && !self.minus
    }
}

impl TermKey for Monomial {
    fn same(&self, other: &Self) -> bool {
        self.z_deg == other.z_deg
            && self.h_deg == other.h_deg
            && self.plus == other.plus
            && self.minus == other.minus
            && exponent_close(self.alpha, other.alpha)
            && exponent_close(self.beta, other.beta)
    }
}

impl TermKey for Vec<Monomial> {
    fn same(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().zip(other).all(|(a, b)| a.same(b))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.z_deg {
            0 => {}
            1 => parts.push("Z".to_string()),
            n => parts.push(format!("Z^{n}")),
        }
        match self.h_deg {
            0 => {}
            1 => parts.push("H".to_string()),
            n => parts.push(format!("H^{n}")),
        }
        if self.alpha != ZERO {
            parts.push(format!("q^({}Z)", self.alpha));
        }
        if self.beta != ZERO {
            parts.push(format!("s^({}Z)", self.beta));
        }
        if self.plus {
            parts.push("ψ⁺".to_string());
        }
        if self.minus {
            parts.push("ψ⁻".to_string());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// A finite complex combination of PBW monomials in one copy.
#[derive(Debug, Clone)]
pub struct AlgebraElement {
    home: Home,
    terms: TermMap<Monomial>,
}

impl AlgebraElement {
    pub fn zero(home: Home) -> Self {
        Self {
            home,
            terms: TermMap::new(),
        }
    }

    pub fn monomial(home: Home, m: Monomial, coeff: C64) -> Self {
        let mut out = Self::zero(home);
        out.terms.insert(m, coeff);
        out
    }

    pub fn scalar(home: Home, c: C64) -> Self {
        Self::monomial(home, Monomial::UNIT, c)
    }

    pub fn one(home: Home) -> Self {
        Self::scalar(home, ONE)
    }

    pub fn h(home: Home) -> Self {
        Self::monomial(home, Monomial::h(), ONE)
    }

    pub fn z(home: Home) -> Self {
        Self::monomial(home, Monomial::z(), ONE)
    }

    pub fn psi_plus(home: Home) -> Self {
        Self::monomial(home, Monomial::psi_plus(), ONE)
    }

    pub fn psi_minus(home: Home) -> Self {
        Self::monomial(home, Monomial::psi_minus(), ONE)
    }

    pub fn exponential(home: Home, alpha: C64, beta: C64) -> Self {
        Self::monomial(home, Monomial::exponential(alpha, beta), ONE)
    }

    /// The four generators `H, Z, ψ⁺, ψ⁻` in that order.
    pub fn generators(home: Home) -> [Self; 4] {
        [
            Self::h(home),
            Self::z(home),
            Self::psi_plus(home),
            Self::psi_minus(home),
        ]
    }

    /// `(q^{2Z} − 1)/(q² − 1)` in this copy, i.e. the right side of the
    /// anticommutator relation.
    pub fn anticommutator_value(home: Home) -> Result<Self> {
        let scale = home.point.anticommutator_scale(home.colour)?;
        let mut out = Self::zero(home);
        out.terms
            .insert(Monomial::exponential(2.0 * home.colour, ZERO), scale);
        out.terms.insert(Monomial::UNIT, -scale);
        Ok(out)
    }

    pub fn home(&self) -> Home {
        self.home
    }

    pub(crate) fn retag(mut self, home: Home) -> Self {
        self.home = home;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, C64)> {
        self.terms.iter().map(|(m, c)| (m, *c))
    }

    pub fn coefficient(&self, m: &Monomial) -> C64 {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// `Some(parity)` when every term has the same parity (zero counts as even).
    pub fn parity(&self) -> Option<u8> {
        let mut it = self.terms.iter().map(|(m, _)| m.parity());
        let first = it.next().unwrap_or(0);
        it.all(|p| p == first).then_some(first)
    }

    pub fn push(&mut self, m: Monomial, coeff: C64) {
        self.terms.insert(m, coeff);
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.home.ensure(&other.home)?;
        let mut out = self.clone();
        for (m, c) in other.terms.iter() {
            out.terms.insert(*m, *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            home: self.home,
            terms: self.terms.map_coeffs(|_, x| x * c),
        }
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        multiply(self, other)
    }

    /// `γ(a) = (−1)^{deg a} a` on homogeneous terms.
    pub fn grading_automorphism(&self) -> Self {
        Self {
            home: self.home,
            terms: self
                .terms
                .map_coeffs(|m, c| if m.parity() == 1 { -c } else { c }),
        }
    }

    pub fn equal_upto_tol(&self, other: &Self, tol: f64) -> Comparison {
        Comparison::new(self.residual(other), tol)
    }

    /// Normalised coefficient residual; homes are not compared.
    pub fn residual(&self, other: &Self) -> f64 {
        self.terms.residual(&other.terms)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({c})·{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Product of the odd parts `(ψ⁺)^{ε₁}(ψ⁻)^{δ₁} · (ψ⁺)^{ε₂}(ψ⁻)^{δ₂}` as a
/// list of `(carries K, sign, ε, δ)` where `K = {ψ⁺, ψ⁻}` is central.
fn odd_product(left: (bool, bool), right: (bool, bool)) -> &'static [(bool, f64, bool, bool)] {
    match (left, right) {
        ((false, false), (false, false)) => &[(false, 1.0, false, false)],
        ((false, false), (true, false)) | ((true, false), (false, false)) => {
            &[(false, 1.0, true, false)]
        }
        ((false, false), (false, true)) | ((false, true), (false, false)) => {
            &[(false, 1.0, false, true)]
        }
        ((false, false), (true, true)) | ((true, true), (false, false)) => {
            &[(false, 1.0, true, true)]
        }
        ((true, false), (false, true)) => &[(false, 1.0, true, true)],
        // ψ⁻ψ⁺ = K − ψ⁺ψ⁻
        ((false, true), (true, false)) => &[(true, 1.0, false, false), (false, -1.0, true, true)],
        // ψ⁻ψ⁺ψ⁻ = Kψ⁻
        ((false, true), (true, true)) => &[(true, 1.0, false, true)],
        // ψ⁺ψ⁻ψ⁺ = Kψ⁺
        ((true, true), (true, false)) => &[(true, 1.0, true, false)],
        ((true, true), (true, true)) => &[(true, 1.0, true, true)],
        _ => &[],
    }
}

/// Normal-ordered product of two monomials in the copy `home`.
pub(crate) fn multiply_monomials(
    home: &Home,
    left: &Monomial,
    right: &Monomial,
    coeff: C64,
    out: &mut AlgebraElement,
) -> Result<()> {
    let odd = odd_product((left.plus, left.minus), (right.plus, right.minus));
    if odd.is_empty() {
        return Ok(());
    }
    // ψ⁺ f(H) = f(H − 2) ψ⁺ and ψ⁻ f(H) = f(H + 2) ψ⁻.
    let shift = 2.0 * (left.minus as i32 - left.plus as i32) as f64;
    let z_deg = left.z_deg + right.z_deg;
    let alpha = left.alpha + right.alpha;
    let beta = left.beta + right.beta;
    let k_scale = if odd.iter().any(|t| t.0) {
        home.point.anticommutator_scale(home.colour)?
    } else {
        ZERO
    };
    let n = right.h_deg;
    for k in 0..=n {
        let h_coeff = if shift == 0.0 {
            if k == n {
                1.0
            } else {
                continue;
            }
        } else {
            binomial(n, k) * shift.powi((n - k) as i32)
        };
        let c = coeff * h_coeff;
        let h_deg = left.h_deg + k;
        for &(carries_k, sign, plus, minus) in odd {
            let base = Monomial {
                z_deg,
                h_deg,
                alpha,
                beta,
                plus,
                minus,
            };
            if carries_k {
                let shifted = Monomial {
                    alpha: alpha + 2.0 * home.colour,
                    ..base
                };
                out.terms.insert(shifted, c * sign * k_scale);
                out.terms.insert(base, -c * sign * k_scale);
            } else {
                out.terms.insert(base, c * sign);
            }
        }
    }
    Ok(())
}

/// PBW normal form of `x · y`.
pub fn multiply(x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
    x.home.ensure(&y.home)?;
    let mut out = AlgebraElement::zero(x.home);
    for (a, ca) in x.terms.iter() {
        for (b, cb) in y.terms.iter() {
            multiply_monomials(&x.home, a, b, ca * cb, &mut out)?;
        }
    }
    Ok(out)
}

pub fn grading_automorphism(x: &AlgebraElement) -> AlgebraElement {
    x.grading_automorphism()
}

/// A map applied to one tensor slot by [`TensorElement::apply_slotwise`].
pub type SlotMap<'a> = dyn FnMut(&AlgebraElement) -> Result<TensorElement> + 'a;

/// Sign convention for the twist map on a graded tensor square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TwistConvention {
    /// `τ(a ⊗ b) = (−1)^{deg a · deg b} b ⊗ a`.
    #[default]
    Graded,
    /// `τ(a ⊗ b) = (−1)^{deg a · deg a} b ⊗ a`, kept only as a negative control.
    SelfDegree,
}

impl TwistConvention {
    fn sign(self, a: u8, b: u8) -> f64 {
        let e = match self {
            TwistConvention::Graded => a * b,
            TwistConvention::SelfDegree => a * a,
        };
        if e % 2 == 1 {
            -1.0
        } else {
            1.0
        }
    }
}

/// A finite combination of `n`-fold tensors of monomials, one home per slot.
/// Order 0 holds scalars.
#[derive(Debug, Clone)]
pub struct TensorElement {
    homes: Vec<Home>,
    terms: TermMap<Vec<Monomial>>,
}

impl TensorElement {
    pub fn zero(homes: Vec<Home>) -> Self {
        Self {
            homes,
            terms: TermMap::new(),
        }
    }

    pub fn scalar(c: C64) -> Self {
        let mut out = Self::zero(Vec::new());
        out.terms.insert(Vec::new(), c);
        out
    }

    /// `1 ⊗ … ⊗ 1` over the given homes.
    pub fn one(homes: Vec<Home>) -> Self {
        let n = homes.len();
        let mut out = Self::zero(homes);
        out.terms.insert(vec![Monomial::UNIT; n], ONE);
        out
    }

    /// `x₁ ⊗ x₂ ⊗ … ⊗ xₙ`.
    pub fn pure(factors: &[&AlgebraElement]) -> Self {
        factors.iter().fold(Self::scalar(ONE), |acc, x| {
            acc.tensor(&Self::from_element(x))
        })
    }

    pub fn from_element(x: &AlgebraElement) -> Self {
        let mut out = Self::zero(vec![x.home]);
        for (m, c) in x.terms.iter() {
            out.terms.insert(vec![*m], *c);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.homes.len()
    }

    pub fn homes(&self) -> &[Home] {
        &self.homes
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Monomial], C64)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), *c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn coefficient(&self, key: &[Monomial]) -> C64 {
        self.terms.get(&key.to_vec())
    }

    pub fn push(&mut self, key: Vec<Monomial>, coeff: C64) {
        assert_eq!(key.len(), self.order(), "tensor key of wrong order");
        self.terms.insert(key, coeff);
    }

    fn ensure_homes(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(AlgebraError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        for (a, b) in self.homes.iter().zip(&other.homes) {
            a.ensure(b)?;
        }
        Ok(())
    }

    fn ensure_order(&self, expected: usize) -> Result<()> {
        if self.order() == expected {
            Ok(())
        } else {
            Err(AlgebraError::WrongOrder {
                expected,
                actual: self.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ensure_homes(other)?;
        let mut out = self.clone();
        for (k, c) in other.terms.iter() {
            out.terms.insert(k.clone(), *c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    pub fn scale(&self, c: C64) -> Self {
        Self {
            homes: self.homes.clone(),
            terms: self.terms.map_coeffs(|_, x| x * c),
        }
    }

    /// Juxtaposition `u ⊗ v`; slots are concatenated, no reordering occurs.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut homes = self.homes.clone();
        homes.extend_from_slice(&other.homes);
        let mut out = Self::zero(homes);
        for (a, ca) in self.terms.iter() {
            for (b, cb) in other.terms.iter() {
                let mut key = a.clone();
                key.extend_from_slice(b);
                out.terms.insert(key, ca * cb);
            }
        }
        out
    }

    /// Graded product `(a ⊗ b)(c ⊗ d) = (−1)^{deg b · deg c} ac ⊗ bd`,
    /// generalised slotwise to any order.
    pub fn tensor_multiply(&self, other: &Self) -> Result<Self> {
        tensor_multiply(self, other)
    }

    pub fn graded_twist(&self) -> Result<Self> {
        self.graded_twist_with(TwistConvention::Graded)
    }

    pub fn graded_twist_with(&self, convention: TwistConvention) -> Result<Self> {
        self.ensure_order(2)?;
        self.twist_adjacent(0, convention)
    }

    /// Twist of slots `i` and `i + 1`.
    pub fn twist_adjacent(&self, i: usize, convention: TwistConvention) -> Result<Self> {
        if i + 1 >= self.order() {
            return Err(AlgebraError::WrongOrder {
                expected: i + 2,
                actual: self.order(),
            });
        }
        let mut homes = self.homes.clone();
        homes.swap(i, i + 1);
        let mut out = Self::zero(homes);
        for (k, c) in self.terms.iter() {
            let sign = convention.sign(k[i].parity(), k[i + 1].parity());
            let mut key = k.clone();
            key.swap(i, i + 1);
            out.terms.insert(key, c * sign);
        }
        Ok(out)
    }

    /// Multiplies slots `i` and `i + 1` together, lowering the order by one.
    pub fn contract_adjacent(&self, i: usize) -> Result<Self> {
        if i + 1 >= self.order() {
            return Err(AlgebraError::WrongOrder {
                expected: i + 2,
                actual: self.order(),
            });
        }
        let home = self.homes[i];
        home.ensure(&self.homes[i + 1])?;
        let mut homes = self.homes.clone();
        homes.remove(i + 1);
        let mut out = Self::zero(homes);
        let mut scratch = AlgebraElement::zero(home);
        for (k, c) in self.terms.iter() {
            scratch.terms = TermMap::new();
            multiply_monomials(&home, &k[i], &k[i + 1], *c, &mut scratch)?;
            for (m, cm) in scratch.terms.iter() {
                let mut key = k.clone();
                key.remove(i + 1);
                key[i] = *m;
                out.terms.insert(key, *cm);
            }
        }
        Ok(out)
    }

    /// Applies one map per slot and tensors the images. Each map receives a
    /// single monomial (coefficient one) in its slot's home. The maps must be
    /// even, so no Koszul signs arise.
    pub fn apply_slotwise(&self, maps: &mut [&mut SlotMap<'_>]) -> Result<Self> {
        if maps.len() != self.order() {
            return Err(AlgebraError::WrongOrder {
                expected: self.order(),
                actual: maps.len(),
            });
        }
        let mut out: Option<Self> = None;
        for (k, c) in self.terms.iter() {
            let mut image = Self::scalar(*c);
            for (slot, m) in k.iter().enumerate() {
                let x = AlgebraElement::monomial(self.homes[slot], *m, ONE);
                image = image.tensor(&(maps[slot])(&x)?);
            }
            out = Some(match out {
                None => image,
                Some(acc) => acc.add(&image)?,
            });
        }
        match out {
            Some(t) => Ok(t),
            None => {
                // Zero input: evaluate the maps on the unit to learn the output homes.
                let mut homes = Vec::new();
                for (slot, home) in self.homes.iter().enumerate() {
                    homes.extend_from_slice((maps[slot])(&AlgebraElement::one(*home))?.homes());
                }
                Ok(Self::zero(homes))
            }
        }
    }

    /// The single-slot element of an order-1 tensor.
    pub fn into_element(&self) -> Result<AlgebraElement> {
        self.ensure_order(1)?;
        let mut out = AlgebraElement::zero(self.homes[0]);
        for (k, c) in self.terms.iter() {
            out.terms.insert(k[0], *c);
        }
        Ok(out)
    }

    /// The scalar of an order-0 tensor.
    pub fn into_scalar(&self) -> Result<C64> {
        self.ensure_order(0)?;
        Ok(self.terms.get(&Vec::new()))
    }

    pub fn equal_upto_tol(&self, other: &Self, tol: f64) -> Comparison {
        Comparison::new(self.residual(other), tol)
    }

    pub fn residual(&self, other: &Self) -> f64 {
        self.terms.residual(&other.terms)
    }

    /// Termwise relative difference, ignoring coefficients below `floor`
    /// times the largest one.
    pub fn relative_discrepancy(&self, other: &Self, floor: f64) -> f64 {
        self.terms.relative_discrepancy(&other.terms, floor)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                let slots: Vec<String> = k.iter().map(|m| m.to_string()).collect();
                format!("({c})·{}", slots.join(" ⊗ "))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn tensor_multiply(u: &TensorElement, v: &TensorElement) -> Result<TensorElement> {
    u.ensure_homes(v)?;
    let n = u.order();
    let mut out = TensorElement::zero(u.homes.clone());
    let mut slot_products: Vec<AlgebraElement> =
        u.homes.iter().map(|h| AlgebraElement::zero(*h)).collect();
    for (a, ca) in u.terms.iter() {
        for (b, cb) in v.terms.iter() {
            // Moving b_j left past a_{j+1..n}.
            let mut exponent = 0u32;
            for j in 0..n {
                if b[j].parity() == 1 {
                    exponent += a[j + 1..].iter().map(|m| m.parity() as u32).sum::<u32>();
                }
            }
            let sign = if exponent % 2 == 1 { -ONE } else { ONE };
            let mut partial = vec![(Vec::with_capacity(n), ca * cb * sign)];
            for j in 0..n {
                let prod = &mut slot_products[j];
                prod.terms = TermMap::new();
                multiply_monomials(&u.homes[j], &a[j], &b[j], ONE, prod)?;
                if prod.terms.is_empty() {
                    partial.clear();
                    break;
                }
                let mut next = Vec::with_capacity(partial.len() * prod.terms.len());
                for (key, c) in &partial {
                    for (m, cm) in prod.terms.iter() {
                        let mut k = key.clone();
                        k.push(*m);
                        next.push((k, c * cm));
                    }
                }
                partial = next;
            }
            for (k, c) in partial {
                out.terms.insert(k, c);
            }
        }
    }
    Ok(out)
}

pub fn graded_twist(u: &TensorElement) -> Result<TensorElement> {
    u.graded_twist()
}

//! The colour group: maps `σ^ν` between colour-shifted copies of the algebra.
//!
//! `σ^ν(H) = H`, `σ^ν(Z) = νZ`, `σ^ν(ψ±) = a^ν ψ±`, extended as an algebra
//! isomorphism, so `q^{αZ} s^{βZ} ↦ q^{ανZ} s^{βνZ}`. Applied to the copy with
//! colour `c` the target is the copy `cν` and `a^ν` is evaluated at `q^c`.

use crate::coefficients::{copy_norm, Colour, C64};
use crate::error::Result;
use crate::pbw::{AlgebraElement, Home, Monomial};
use crate::report::ResidualReport;

/// `σ^ν` restricted to one source copy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColourMap {
    nu: Colour,
    source: Home,
    target: Home,
    odd_scale: C64,
}

impl ColourMap {
    pub fn new(nu: Colour, source: Home) -> Result<Self> {
        let point = source.point();
        let odd_scale = copy_norm(&point, source.colour(), nu)?;
        let target = Home::with_colour(point, source.colour() * nu.value());
        point.anticommutator_scale(target.colour())?;
        Ok(Self {
            nu,
            source,
            target,
            odd_scale,
        })
    }

    pub fn nu(&self) -> Colour {
        self.nu
    }

    pub fn source(&self) -> Home {
        self.source
    }

    pub fn target(&self) -> Home {
        self.target
    }

    /// `a^ν` evaluated at the source copy.
    pub fn odd_scale(&self) -> C64 {
        self.odd_scale
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        x.home().ensure(&self.source)?;
        Ok(rescale(x, self.target, self.nu.value(), self.odd_scale))
    }

    /// The exact inverse `σ_ν = (σ^ν)^{-1}` from the target back to the source.
    pub fn invert(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        x.home().ensure(&self.target)?;
        Ok(rescale(
            x,
            self.source,
            self.nu.value().inv(),
            self.odd_scale.inv(),
        ))
    }
}

/// `Z ↦ factor·Z` (with exponents scaled alike) and `ψ± ↦ odd·ψ±`.
fn rescale(x: &AlgebraElement, target: Home, factor: C64, odd: C64) -> AlgebraElement {
    let mut out = AlgebraElement::zero(target);
    for (m, c) in x.terms() {
        let mut coeff = c * factor.powu(m.z_deg);
        if m.plus {
            coeff *= odd;
        }
        if m.minus {
            coeff *= odd;
        }
        out.push(
            Monomial {
                alpha: m.alpha * factor,
                beta: m.beta * factor,
                ..*m
            },
            coeff,
        );
    }
    out
}

/// `σ^ν(x)`, landing in the copy `colour(x)·ν`.
pub fn sigma(nu: Colour, x: &AlgebraElement) -> Result<AlgebraElement> {
    ColourMap::new(nu, x.home())?.apply(x)
}

/// `σ_ν(x) = (σ^ν)^{-1}(x)`, landing in the copy `colour(x)/ν`.
pub fn sigma_inverse(nu: Colour, x: &AlgebraElement) -> Result<AlgebraElement> {
    let home = x.home();
    let source = Home::with_colour(home.point(), home.colour() / nu.value());
    ColourMap::new(nu, source)?.invert(x)
}

/// `σ^λ_α = σ^λ ∘ σ_α`: the transport from the copy `α` to the copy `λ`
/// through the base copy, with `α` read from the element's home.
pub fn transport(to: Colour, x: &AlgebraElement) -> Result<AlgebraElement> {
    let from = Colour::new(x.home().colour())?;
    let base = sigma_inverse(from, x)?;
    let base = base.clone().retag(Home::base(base.home().point()));
    sigma(to, &base)
}

/// Residuals of the colour-group laws for one `(ν, ν′)` pair.
///
/// The composition and inverse laws are reported twice: as measured, and
/// up to the sign ambiguity `ψ± ↦ −ψ±` of the principal square root in
/// `a^ν` (equivalently, up to composing one side with `γ`).
#[derive(Debug, Clone, PartialEq)]
pub struct GroupLawReport {
    pub composition_signed: f64,
    pub composition_up_to_sign: f64,
    pub identity: f64,
    pub inverse_signed: f64,
    pub inverse_up_to_sign: f64,
    pub exact_inverse: f64,
    pub grading: f64,
    /// `a^{ν′ν}` against `a^{ν′}(at q^ν)·a^ν(at q)`, up to sign.
    pub norm_composition: f64,
    pub composition_sign_flipped: bool,
    pub inverse_sign_flipped: bool,
}

impl GroupLawReport {
    /// Residuals asserted by the verification suite.
    pub fn asserted(&self) -> ResidualReport {
        let mut r = ResidualReport::new();
        r.record("composition (up to sign)", self.composition_up_to_sign);
        r.record("identity", self.identity);
        r.record("inverse (up to sign)", self.inverse_up_to_sign);
        r.record("exact inverse", self.exact_inverse);
        r.record("grading compatibility", self.grading);
        r.record("norm composition", self.norm_composition);
        r
    }
}

fn signed_and_flipped(lhs: &[AlgebraElement], rhs: &[AlgebraElement]) -> (f64, f64) {
    let mut signed = 0.0f64;
    let mut flipped = 0.0f64;
    for (l, r) in lhs.iter().zip(rhs) {
        signed = signed.max(l.residual(r));
        flipped = flipped.max(l.residual(&r.grading_automorphism()));
    }
    (signed, flipped)
}

/// Checks `σ^{ν′}∘σ^ν = σ^{ν′ν}`, `σ^1 = id`, `σ^{1/ν}∘σ^ν = id`,
/// `σ_ν∘σ^ν = id` and `σ^ν∘γ = γ∘σ^ν` on the probes (all at one home).
pub fn check_group_laws(
    nu: Colour,
    nu_prime: Colour,
    probes: &[AlgebraElement],
) -> Result<GroupLawReport> {
    let Some(first) = probes.first() else {
        return Ok(GroupLawReport {
            composition_signed: 0.0,
            composition_up_to_sign: 0.0,
            identity: 0.0,
            inverse_signed: 0.0,
            inverse_up_to_sign: 0.0,
            exact_inverse: 0.0,
            grading: 0.0,
            norm_composition: 0.0,
            composition_sign_flipped: false,
            inverse_sign_flipped: false,
        });
    };
    let home = first.home();
    let inner = ColourMap::new(nu, home)?;
    let outer = ColourMap::new(nu_prime, inner.target())?;
    let direct = ColourMap::new(nu_prime.compose(nu), home)?;
    let back = ColourMap::new(nu.inverse(), inner.target())?;
    let identity = ColourMap::new(Colour::IDENTITY, home)?;

    let mut composed = Vec::with_capacity(probes.len());
    let mut straight = Vec::with_capacity(probes.len());
    let mut returned = Vec::with_capacity(probes.len());
    let mut originals = Vec::with_capacity(probes.len());
    let mut identity_res = 0.0f64;
    let mut exact_res = 0.0f64;
    let mut grading_res = 0.0f64;
    for x in probes {
        let image = inner.apply(x)?;
        composed.push(outer.apply(&image)?.retag(direct.target()));
        straight.push(direct.apply(x)?);
        returned.push(back.apply(&image)?.retag(home));
        originals.push(x.clone());
        identity_res = identity_res.max(identity.apply(x)?.residual(x));
        exact_res = exact_res.max(inner.invert(&image)?.residual(x));
        let lhs = inner.apply(&x.grading_automorphism())?;
        grading_res = grading_res.max(lhs.residual(&image.grading_automorphism()));
    }
    let (composition_signed, composition_flipped) = signed_and_flipped(&composed, &straight);
    let (inverse_signed, inverse_flipped) = signed_and_flipped(&returned, &originals);

    let composed_norm = outer.odd_scale() * inner.odd_scale();
    let direct_norm = direct.odd_scale();
    let scale = direct_norm.norm().max(1.0);
    let norm_composition =
        ((composed_norm - direct_norm).norm()).min((composed_norm + direct_norm).norm()) / scale;

    Ok(GroupLawReport {
        composition_signed,
        composition_up_to_sign: composition_signed.min(composition_flipped),
        identity: identity_res,
        inverse_signed,
        inverse_up_to_sign: inverse_signed.min(inverse_flipped),
        exact_inverse: exact_res,
        grading: grading_res,
        norm_composition,
        composition_sign_flipped: composition_flipped < composition_signed,
        inverse_sign_flipped: inverse_flipped < inverse_signed,
    })
}

/// Colour of the copy `x` lives in.
pub fn colour_of(x: &AlgebraElement) -> Result<Colour> {
    Colour::new(x.home().colour())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::{ParamPoint, ParamSampler, ONE};

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn sigma_on_generators() {
        let p = ParamPoint::new(c(2.0, 0.0), ONE).unwrap();
        let h = Home::base(p);
        let nu = Colour::real(2.0).unwrap();
        let sh = sigma(nu, &AlgebraElement::h(h)).unwrap();
        let target = Home::copy(p, nu);
        assert!(sh.home().matches(&target));
        assert!(sh.equal_upto_tol(&AlgebraElement::h(target), 0.0).equal);
        let sz = sigma(nu, &AlgebraElement::z(h)).unwrap();
        assert!(
            sz.equal_upto_tol(&AlgebraElement::z(target).scale(c(2.0, 0.0)), 0.0)
                .equal
        );
        let sp = sigma(nu, &AlgebraElement::psi_plus(h)).unwrap();
        let expected = AlgebraElement::psi_plus(target).scale(c(5f64.sqrt(), 0.0));
        assert!(sp.equal_upto_tol(&expected, 1e-14).equal);
    }

    #[test]
    fn sigma_identity_and_inverse() {
        let p = ParamPoint::new(c(0.6, 1.1), c(1.4, 0.2)).unwrap();
        let h = Home::base(p);
        let nu = Colour::new(c(-0.8, 0.9)).unwrap();
        for x in AlgebraElement::generators(h) {
            let same = sigma(Colour::IDENTITY, &x).unwrap();
            assert!(same.equal_upto_tol(&x, 1e-15).equal);
            let back = sigma_inverse(nu, &sigma(nu, &x).unwrap()).unwrap();
            assert!(back.home().matches(&h));
            assert!(back.equal_upto_tol(&x, 1e-12).equal);
            assert!(
                sigma_inverse(Colour::IDENTITY, &x)
                    .unwrap()
                    .equal_upto_tol(&x, 0.0)
                    .equal
            );
        }
        let z = sigma_inverse(Colour::real(2.0).unwrap(), &AlgebraElement::z(h)).unwrap();
        assert!((z.coefficient(&Monomial::z()) - c(0.5, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn sigma_is_an_algebra_map() {
        let mut sampler = ParamSampler::new(5);
        for _ in 0..20 {
            let p = sampler.point();
            let nu = sampler.colour(&p);
            let h = Home::base(p);
            let gens = AlgebraElement::generators(h);
            for x in &gens {
                for y in &gens {
                    let lhs = sigma(nu, &x.multiply(y).unwrap()).unwrap();
                    let rhs = sigma(nu, x)
                        .unwrap()
                        .multiply(&sigma(nu, y).unwrap())
                        .unwrap();
                    assert!(lhs.residual(&rhs) < 1e-11, "{lhs} vs {rhs}");
                }
            }
        }
    }

    #[test]
    fn grading_compatibility_on_psi_minus() {
        let p = ParamPoint::new(c(1.3, -0.4), c(0.7, 0.0)).unwrap();
        let h = Home::base(p);
        let nu = Colour::new(c(0.5, 1.5)).unwrap();
        let x = AlgebraElement::psi_minus(h);
        let a = sigma(nu, &x.grading_automorphism()).unwrap();
        let b = sigma(nu, &x).unwrap().grading_automorphism();
        let norm = copy_norm(&p, ONE, nu).unwrap();
        let expected = AlgebraElement::psi_minus(Home::copy(p, nu)).scale(-norm);
        assert!(a.equal_upto_tol(&b, 0.0).equal);
        assert!(a.equal_upto_tol(&expected, 1e-15).equal);
    }

    #[test]
    fn trivial_colours_give_zero_residuals() {
        let p = ParamPoint::new(c(1.9, 0.3), c(0.6, 0.6)).unwrap();
        let probes = AlgebraElement::generators(Home::base(p));
        let r = check_group_laws(Colour::IDENTITY, Colour::IDENTITY, &probes).unwrap();
        assert_eq!(r.composition_signed, 0.0);
        assert_eq!(r.identity, 0.0);
        assert_eq!(r.inverse_signed, 0.0);
        assert_eq!(r.grading, 0.0);
    }

    #[test]
    fn transport_routes_through_base() {
        let p = ParamPoint::new(c(0.9, 0.8), c(1.1, 0.0)).unwrap();
        let alpha = Colour::new(c(1.2, 0.3)).unwrap();
        let lambda = Colour::new(c(-0.7, 0.6)).unwrap();
        let x = AlgebraElement::psi_plus(Home::copy(p, alpha));
        let y = transport(lambda, &x).unwrap();
        assert!(y.home().matches(&Home::copy(p, lambda)));
        let a_l = copy_norm(&p, ONE, lambda).unwrap();
        let a_a = copy_norm(&p, ONE, alpha).unwrap();
        assert!((y.coefficient(&Monomial::psi_plus()) - a_l / a_a).norm() < 1e-14);
    }
}

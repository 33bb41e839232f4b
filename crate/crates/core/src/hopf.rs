//! Coloured comultiplication, counit and antipode of `U_{q,s}(gl(1/1))`,
//! and verifiers for the generalised Hopf axioms they satisfy.
//!
//! On generators, with `a^ν` taken at the base copy:
//!
//! ```text
//! Δ(H)  = H⊗1 + 1⊗H
//! Δ(Z)  = (λ/ν) Z⊗1 + (μ/ν) 1⊗Z
//! Δ(ψ±) = (a^λ/a^ν) ψ±⊗s^{∓μZ/2}q^{μZ} + (a^μ/a^ν) s^{±λZ/2}⊗ψ±
//! ε(X)  = 0
//! S(H)  = −H,  S(Z) = −(μ/ν)Z,  S(ψ±) = −(a^μ/a^ν) q^{−μZ}ψ±
//! ```
//!
//! `Δ` extends as an algebra map into the graded tensor square, `S` as a
//! graded anti-homomorphism, `ε` multiplicatively. Group-like exponentials
//! go to `q^{αλZ/ν}s^{βλZ/ν} ⊗ q^{αμZ/ν}s^{βμZ/ν}` under `Δ`, to `1` under
//! `ε` and to `q^{−αμZ/ν}s^{−βμZ/ν}` under `S`.

use rand::Rng;

use crate::coefficients::{copy_norm, Colour, ParamPoint, ParamSampler, C64, ONE, ZERO};
use crate::colour::transport;
use crate::error::Result;
use crate::pbw::{AlgebraElement, Home, Monomial, TensorElement, TwistConvention};
use crate::report::{scalar_residual, ResidualReport};
use crate::standard;

/// Images of the generators and of a group-like element, from which a
/// coproduct is extended to PBW monomials.
pub(crate) struct CoproductRule<'a> {
    pub source: Home,
    pub h: TensorElement,
    pub z: TensorElement,
    pub plus: TensorElement,
    pub minus: TensorElement,
    pub exponential: Box<dyn Fn(C64, C64) -> TensorElement + 'a>,
}

impl CoproductRule<'_> {
    fn power(&self, base: &TensorElement, n: u32, acc: TensorElement) -> Result<TensorElement> {
        (0..n).try_fold(acc, |acc, _| acc.tensor_multiply(base))
    }

    pub fn monomial(&self, m: &Monomial) -> Result<TensorElement> {
        let mut out = self.power(
            &self.z,
            m.z_deg,
            TensorElement::one(self.h.homes().to_vec()),
        )?;
        out = self.power(&self.h, m.h_deg, out)?;
        if m.alpha != ZERO || m.beta != ZERO {
            out = out.tensor_multiply(&(self.exponential)(m.alpha, m.beta))?;
        }
        if m.plus {
            out = out.tensor_multiply(&self.plus)?;
        }
        if m.minus {
            out = out.tensor_multiply(&self.minus)?;
        }
        Ok(out)
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<TensorElement> {
        x.home().ensure(&self.source)?;
        let mut out = TensorElement::zero(self.h.homes().to_vec());
        for (m, c) in x.terms() {
            out = out.add(&self.monomial(m)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Images of the generators under an antipode, extended as a graded
/// anti-homomorphism.
pub(crate) struct AntipodeRule<'a> {
    pub source: Home,
    pub target: Home,
    pub h: AlgebraElement,
    pub z: AlgebraElement,
    pub plus: AlgebraElement,
    pub minus: AlgebraElement,
    pub exponential: Box<dyn Fn(C64, C64) -> AlgebraElement + 'a>,
}

impl AntipodeRule<'_> {
    pub fn monomial(&self, m: &Monomial) -> Result<AlgebraElement> {
        // S(Z^a H^b E ψ⁺ψ⁻) = (−1)^{[ψ⁺ψ⁻]} S(ψ⁻)S(ψ⁺)S(E)S(H)^b S(Z)^a
        let mut out = AlgebraElement::one(self.target);
        if m.minus {
            out = out.multiply(&self.minus)?;
        }
        if m.plus {
            out = out.multiply(&self.plus)?;
        }
        if m.plus && m.minus {
            out = out.scale(-ONE);
        }
        if m.alpha != ZERO || m.beta != ZERO {
            out = out.multiply(&(self.exponential)(m.alpha, m.beta))?;
        }
        for _ in 0..m.h_deg {
            out = out.multiply(&self.h)?;
        }
        for _ in 0..m.z_deg {
            out = out.multiply(&self.z)?;
        }
        Ok(out)
    }

    pub fn apply(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        x.home().ensure(&self.source)?;
        let mut out = AlgebraElement::zero(self.target);
        for (m, c) in x.terms() {
            out = out.add(&self.monomial(m)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Counit of a monomial: one on group-like words, zero otherwise.
pub(crate) fn counit_monomial(m: &Monomial) -> C64 {
    if m.is_group_like() {
        ONE
    } else {
        ZERO
    }
}

/// Parameters of the coloured maps `Δ^{λ,μ}_{q,ν}`, `ε_{q,ν}`, `S^μ_{q,ν}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColouredMapContext {
    point: ParamPoint,
    lambda: Colour,
    mu: Colour,
    nu: Colour,
    a_lambda: C64,
    a_mu: C64,
    a_nu: C64,
}

impl ColouredMapContext {
    pub fn new(point: ParamPoint, lambda: Colour, mu: Colour, nu: Colour) -> Result<Self> {
        let a = |c: Colour| -> Result<C64> {
            point.anticommutator_scale(c.value())?;
            copy_norm(&point, ONE, c)
        };
        Ok(Self {
            point,
            lambda,
            mu,
            nu,
            a_lambda: a(lambda)?,
            a_mu: a(mu)?,
            a_nu: a(nu)?,
        })
    }

    pub fn point(&self) -> ParamPoint {
        self.point
    }

    pub fn lambda(&self) -> Colour {
        self.lambda
    }

    pub fn mu(&self) -> Colour {
        self.mu
    }

    pub fn nu(&self) -> Colour {
        self.nu
    }

    pub fn source(&self) -> Home {
        Home::copy(self.point, self.nu)
    }

    pub fn left(&self) -> Home {
        Home::copy(self.point, self.lambda)
    }

    pub fn right(&self) -> Home {
        Home::copy(self.point, self.mu)
    }

    fn coproduct_rule(&self) -> CoproductRule<'_> {
        let (l, r) = (self.left(), self.right());
        let lam = self.lambda.value();
        let mu = self.mu.value();
        let nu = self.nu.value();
        let half = C64::new(0.5, 0.0);
        let one_l = AlgebraElement::one(l);
        let one_r = AlgebraElement::one(r);
        let pair = |a: &AlgebraElement, b: &AlgebraElement| TensorElement::pure(&[a, b]);

        let h = pair(&AlgebraElement::h(l), &one_r)
            .add(&pair(&one_l, &AlgebraElement::h(r)))
            .expect("homes agree");
        let z = pair(&AlgebraElement::z(l), &one_r)
            .scale(lam / nu)
            .add(&pair(&one_l, &AlgebraElement::z(r)).scale(mu / nu))
            .expect("homes agree");
        let odd = |plus: bool| {
            let sign = if plus { ONE } else { -ONE };
            let psi = |home| {
                if plus {
                    AlgebraElement::psi_plus(home)
                } else {
                    AlgebraElement::psi_minus(home)
                }
            };
            let tail = AlgebraElement::exponential(r, mu, -sign * mu * half);
            let head = AlgebraElement::exponential(l, ZERO, sign * lam * half);
            pair(&psi(l), &tail)
                .scale(self.a_lambda / self.a_nu)
                .add(&pair(&head, &psi(r)).scale(self.a_mu / self.a_nu))
                .expect("homes agree")
        };
        CoproductRule {
            source: self.source(),
            h,
            z,
            plus: odd(true),
            minus: odd(false),
            exponential: Box::new(move |alpha, beta| {
                pair(
                    &AlgebraElement::exponential(l, alpha * lam / nu, beta * lam / nu),
                    &AlgebraElement::exponential(r, alpha * mu / nu, beta * mu / nu),
                )
            }),
        }
    }

    fn antipode_rule(&self) -> AntipodeRule<'_> {
        let t = self.right();
        let mu = self.mu.value();
        let ratio = mu / self.nu.value();
        let odd_coeff = -self.a_mu / self.a_nu;
        let tail = AlgebraElement::exponential(t, -mu, ZERO);
        AntipodeRule {
            source: self.source(),
            target: t,
            h: AlgebraElement::h(t).scale(-ONE),
            z: AlgebraElement::z(t).scale(-ratio),
            plus: tail
                .multiply(&AlgebraElement::psi_plus(t))
                .expect("same home")
                .scale(odd_coeff),
            minus: tail
                .multiply(&AlgebraElement::psi_minus(t))
                .expect("same home")
                .scale(odd_coeff),
            exponential: Box::new(move |alpha, beta| {
                AlgebraElement::exponential(t, -alpha * ratio, -beta * ratio)
            }),
        }
    }

    /// `Δ^{λ,μ}_{q,ν}(x)` for `x` in the copy `ν`.
    pub fn coproduct(&self, x: &AlgebraElement) -> Result<TensorElement> {
        self.coproduct_rule().apply(x)
    }

    /// `ε_{q,ν}(x)` for `x` in the copy `ν`.
    pub fn counit(&self, x: &AlgebraElement) -> Result<C64> {
        x.home().ensure(&self.source())?;
        Ok(x.terms().map(|(m, c)| c * counit_monomial(m)).sum())
    }

    /// `S^μ_{q,ν}(x)` for `x` in the copy `ν`, landing in the copy `μ`.
    pub fn antipode(&self, x: &AlgebraElement) -> Result<AlgebraElement> {
        self.antipode_rule().apply(x)
    }
}

/// `Δ^{λ,μ}_{q,ν}(x)` with `ν` read from the home of `x`.
pub fn coproduct(lambda: Colour, mu: Colour, x: &AlgebraElement) -> Result<TensorElement> {
    let nu = Colour::new(x.home().colour())?;
    ColouredMapContext::new(x.home().point(), lambda, mu, nu)?.coproduct(x)
}

pub fn counit(x: &AlgebraElement) -> Result<C64> {
    let nu = Colour::new(x.home().colour())?;
    ColouredMapContext::new(x.home().point(), nu, nu, nu)?.counit(x)
}

/// `S^μ_{q,ν}(x)` with `ν` read from the home of `x`.
pub fn antipode(mu: Colour, x: &AlgebraElement) -> Result<AlgebraElement> {
    let nu = Colour::new(x.home().colour())?;
    ColouredMapContext::new(x.home().point(), mu, mu, nu)?.antipode(x)
}

/// The colour labels appearing in the generalised Hopf axioms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ColourTuple {
    pub alpha: Colour,
    pub beta: Colour,
    pub gamma: Colour,
    pub lambda: Colour,
    pub mu: Colour,
    pub lambda_prime: Colour,
    pub mu_prime: Colour,
    pub nu: Colour,
}

impl ColourTuple {
    pub fn uniform(c: Colour) -> Self {
        Self {
            alpha: c,
            beta: c,
            gamma: c,
            lambda: c,
            mu: c,
            lambda_prime: c,
            mu_prime: c,
            nu: c,
        }
    }

    pub fn sample(sampler: &mut ParamSampler, point: &ParamPoint) -> Self {
        let [alpha, beta, gamma, lambda, mu, lambda_prime, mu_prime, nu] =
            sampler.colours::<8>(point);
        Self {
            alpha,
            beta,
            gamma,
            lambda,
            mu,
            lambda_prime,
            mu_prime,
            nu,
        }
    }
}

fn element_map<'a>(
    f: impl Fn(&AlgebraElement) -> Result<AlgebraElement> + 'a,
) -> impl FnMut(&AlgebraElement) -> Result<TensorElement> + 'a {
    move |x| Ok(TensorElement::from_element(&f(x)?))
}

fn ctx(point: ParamPoint, lambda: Colour, mu: Colour, nu: Colour) -> Result<ColouredMapContext> {
    ColouredMapContext::new(point, lambda, mu, nu)
}

/// Transformation laws of the coloured maps under the colour group:
/// `(σ^λ_α⊗σ^μ_β)∘Δ^{α,β}_ν = Δ^{λ,μ}_ν = Δ^{λ,μ}_γ∘σ^γ_ν`,
/// `ε_α∘σ^α_ν = ε_ν` and `σ^μ_α∘S^α_ν = S^μ_ν = S^μ_β∘σ^β_ν`.
pub fn verify_colour_transformations(
    point: ParamPoint,
    c: &ColourTuple,
    probes: &[AlgebraElement],
) -> Result<ResidualReport> {
    let mut report = ResidualReport::new();
    let reference = ctx(point, c.lambda, c.mu, c.nu)?;
    let via_ab = ctx(point, c.alpha, c.beta, c.nu)?;
    let via_gamma = ctx(point, c.lambda, c.mu, c.gamma)?;
    let counit_alpha = ctx(point, c.alpha, c.alpha, c.alpha)?;
    let antipode_alpha = ctx(point, c.alpha, c.alpha, c.nu)?;
    let antipode_beta = ctx(point, c.mu, c.mu, c.beta)?;
    for x in probes {
        let target = reference.coproduct(x)?;
        let lhs = via_ab.coproduct(x)?.apply_slotwise(&mut [
            &mut element_map(|m| transport(c.lambda, m)),
            &mut element_map(|m| transport(c.mu, m)),
        ])?;
        report.record("coproduct: slot transports", lhs.residual(&target));
        let rhs = via_gamma.coproduct(&transport(c.gamma, x)?)?;
        report.record("coproduct: input transport", rhs.residual(&target));

        let e = reference.counit(x)?;
        let e_alpha = counit_alpha.counit(&transport(c.alpha, x)?)?;
        report.record("counit: input transport", scalar_residual(e_alpha, e));

        let s = reference.antipode(x)?;
        let s_left = transport(c.mu, &antipode_alpha.antipode(x)?)?;
        report.record("antipode: output transport", s_left.residual(&s));
        let s_right = antipode_beta.antipode(&transport(c.beta, x)?)?;
        report.record("antipode: input transport", s_right.residual(&s));
    }
    Ok(report)
}

/// `(Δ^{α,β}_λ⊗σ^γ_μ)∘Δ^{λ,μ}_ν = (σ^α_{λ′}⊗Δ^{β,γ}_{μ′})∘Δ^{λ′,μ′}_ν`.
pub fn verify_coassociativity(
    point: ParamPoint,
    c: &ColourTuple,
    probes: &[AlgebraElement],
) -> Result<ResidualReport> {
    let mut report = ResidualReport::new();
    let outer_left = ctx(point, c.lambda, c.mu, c.nu)?;
    let inner_left = ctx(point, c.alpha, c.beta, c.lambda)?;
    let outer_right = ctx(point, c.lambda_prime, c.mu_prime, c.nu)?;
    let inner_right = ctx(point, c.beta, c.gamma, c.mu_prime)?;
    for x in probes {
        let lhs = outer_left.coproduct(x)?.apply_slotwise(&mut [
            &mut |m| inner_left.coproduct(m),
            &mut element_map(|m| transport(c.gamma, m)),
        ])?;
        let rhs = outer_right.coproduct(x)?.apply_slotwise(&mut [
            &mut element_map(|m| transport(c.alpha, m)),
            &mut |m| inner_right.coproduct(m),
        ])?;
        report.record("coassociativity", lhs.residual(&rhs));
    }
    Ok(report)
}

/// `(ε_λ⊗σ^α_μ)∘Δ^{λ,μ}_ν = (σ^α_{λ′}⊗ε_{μ′})∘Δ^{λ′,μ′}_ν = σ^α_ν`.
pub fn verify_counit_axiom(
    point: ParamPoint,
    c: &ColourTuple,
    probes: &[AlgebraElement],
) -> Result<ResidualReport> {
    let mut report = ResidualReport::new();
    let left = ctx(point, c.lambda, c.mu, c.nu)?;
    let right = ctx(point, c.lambda_prime, c.mu_prime, c.nu)?;
    let eps = |m: &AlgebraElement| counit(m).map(TensorElement::scalar);
    for x in probes {
        let target = transport(c.alpha, x)?;
        let lhs = left
            .coproduct(x)?
            .apply_slotwise(&mut [&mut { eps }, &mut element_map(|m| transport(c.alpha, m))])?
            .into_element()?;
        let rhs = right
            .coproduct(x)?
            .apply_slotwise(&mut [&mut element_map(|m| transport(c.alpha, m)), &mut { eps }])?
            .into_element()?;
        report.record("counit: left contraction", lhs.residual(&target));
        report.record("counit: right contraction", rhs.residual(&target));
    }
    Ok(report)
}

/// `m∘(S^α_λ⊗σ^α_μ)∘Δ^{λ,μ}_ν = m∘(σ^α_{λ′}⊗S^α_{μ′})∘Δ^{λ′,μ′}_ν = ι∘ε_ν`.
pub fn verify_antipode_axiom(
    point: ParamPoint,
    c: &ColourTuple,
    probes: &[AlgebraElement],
) -> Result<ResidualReport> {
    let mut report = ResidualReport::new();
    let left = ctx(point, c.lambda, c.mu, c.nu)?;
    let right = ctx(point, c.lambda_prime, c.mu_prime, c.nu)?;
    let s_left = ctx(point, c.alpha, c.alpha, c.lambda)?;
    let s_right = ctx(point, c.alpha, c.alpha, c.mu_prime)?;
    let target_home = Home::copy(point, c.alpha);
    for x in probes {
        let target = AlgebraElement::scalar(target_home, left.counit(x)?);
        let lhs = left
            .coproduct(x)?
            .apply_slotwise(&mut [
                &mut element_map(|m| s_left.antipode(m)),
                &mut element_map(|m| transport(c.alpha, m)),
            ])?
            .contract_adjacent(0)?
            .into_element()?;
        let rhs = right
            .coproduct(x)?
            .apply_slotwise(&mut [
                &mut element_map(|m| transport(c.alpha, m)),
                &mut element_map(|m| s_right.antipode(m)),
            ])?
            .contract_adjacent(0)?
            .into_element()?;
        report.record("antipode: left convolution", lhs.residual(&target));
        report.record("antipode: right convolution", rhs.residual(&target));
    }
    Ok(report)
}

/// `Δ∘m = (m⊗m)∘(id⊗τ⊗id)∘(Δ⊗Δ)`, `Δ∘ι = ι⊗ι`, `ε∘m = ε⊗ε`, `ε∘ι = 1`
/// for `Δ^{λ,μ}_ν` and `ε_ν`, with the twist sign chosen by `convention`.
pub fn verify_bialgebra(
    map: &ColouredMapContext,
    pairs: &[(AlgebraElement, AlgebraElement)],
    convention: TwistConvention,
) -> Result<ResidualReport> {
    let mut report = ResidualReport::new();
    let source = map.source();
    let unit = AlgebraElement::one(source);
    let unit_image = map.coproduct(&unit)?;
    let expected_unit = TensorElement::one(vec![map.left(), map.right()]);
    report.record(
        "bialgebra: coproduct of unit",
        unit_image.residual(&expected_unit),
    );
    report.record(
        "bialgebra: counit of unit",
        scalar_residual(map.counit(&unit)?, ONE),
    );
    for (x, y) in pairs {
        let xy = x.multiply(y)?;
        let (lhs, rhs) = coproduct_of_product(map, x, y, convention)?;
        report.record("bialgebra: coproduct of product", lhs.residual(&rhs));
        let e = map.counit(&xy)?;
        let ee = map.counit(x)? * map.counit(y)?;
        report.record("bialgebra: counit of product", scalar_residual(e, ee));
    }
    Ok(report)
}

/// `Δ(xy)` and `(m⊗m)∘(id⊗τ⊗id)(Δx⊗Δy)`.
pub fn coproduct_of_product(
    map: &ColouredMapContext,
    x: &AlgebraElement,
    y: &AlgebraElement,
    convention: TwistConvention,
) -> Result<(TensorElement, TensorElement)> {
    let lhs = map.coproduct(&x.multiply(y)?)?;
    let rhs = map
        .coproduct(x)?
        .tensor(&map.coproduct(y)?)
        .twist_adjacent(1, convention)?
        .contract_adjacent(2)?
        .contract_adjacent(0)?;
    Ok((lhs, rhs))
}

/// The `(ψ⁺, ψ⁻)` instance of `Δ∘m = (m⊗m)∘(id⊗τ⊗id)∘(Δ⊗Δ)` under
/// `convention`, as (normalised residual, termwise relative discrepancy).
pub fn odd_pair_bialgebra_discrepancy(
    map: &ColouredMapContext,
    convention: TwistConvention,
) -> Result<(f64, f64)> {
    let h = map.source();
    let (lhs, rhs) = coproduct_of_product(
        map,
        &AlgebraElement::psi_plus(h),
        &AlgebraElement::psi_minus(h),
        convention,
    )?;
    Ok((lhs.residual(&rhs), lhs.relative_discrepancy(&rhs, 1e-10)))
}

/// Defining relations pushed through `Δ^{λ,μ}_ν`: both sides of
/// `[H, ψ±] = ±2ψ±`, `[Z, ·] = 0`, `(ψ±)² = 0` and
/// `{ψ⁺, ψ⁻} = (q^{2νZ} − 1)/(q^{2ν} − 1)` are mapped and compared.
pub fn verify_relations(map: &ColouredMapContext) -> Result<ResidualReport> {
    let mut report = ResidualReport::new();
    let [h, z, plus, minus] = AlgebraElement::generators(map.source());
    let d = |x: &AlgebraElement| map.coproduct(x);
    let product = |a: &TensorElement, b: &TensorElement| a.tensor_multiply(b);
    let (dh, dz, dp, dm) = (d(&h)?, d(&z)?, d(&plus)?, d(&minus)?);
    let zero = TensorElement::zero(vec![map.left(), map.right()]);
    let two = C64::new(2.0, 0.0);

    let hp = product(&dh, &dp)?.sub(&product(&dp, &dh)?)?;
    report.record("relations: [H, psi+]", hp.residual(&dp.scale(two)));
    let hm = product(&dh, &dm)?.sub(&product(&dm, &dh)?)?;
    report.record("relations: [H, psi-]", hm.residual(&dm.scale(-two)));
    for g in [&dh, &dp, &dm] {
        let c = product(&dz, g)?.sub(&product(g, &dz)?)?;
        report.record("relations: Z central", c.residual(&zero));
    }
    report.record("relations: nilpotency", product(&dp, &dp)?.residual(&zero));
    report.record("relations: nilpotency", product(&dm, &dm)?.residual(&zero));
    let anti = product(&dp, &dm)?.add(&product(&dm, &dp)?)?;
    let k = d(&AlgebraElement::anticommutator_value(map.source())?)?;
    report.record("relations: anticommutator", anti.residual(&k));
    Ok(report)
}

/// At `λ = μ = ν = 1` the coloured maps against the uncoloured ones,
/// termwise on each probe (all probes at the base copy).
pub fn verify_reduction(point: ParamPoint, probes: &[AlgebraElement]) -> Result<ResidualReport> {
    let mut report = ResidualReport::new();
    let one = Colour::IDENTITY;
    let map = ColouredMapContext::new(point, one, one, one)?;
    for x in probes {
        let d = map.coproduct(x)?;
        report.record(
            "reduction: coproduct",
            d.residual(&standard::coproduct(point, x)?),
        );
        let e = map.counit(x)?;
        report.record("reduction: counit", scalar_residual(e, standard::counit(x)));
        let s = map.antipode(x)?;
        report.record(
            "reduction: antipode",
            s.residual(&standard::antipode(point, x)?),
        );
    }
    Ok(report)
}

/// A random element of degree at most two in the generators, with random
/// group-like factors mixed in.
pub fn random_element<R: Rng + ?Sized>(rng: &mut R, home: Home) -> AlgebraElement {
    let coeff = |rng: &mut R| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
    let mut out = AlgebraElement::zero(home);
    for _ in 0..3 {
        let mut term = AlgebraElement::scalar(home, coeff(rng));
        for _ in 0..rng.random_range(0..=2) {
            let factor = match rng.random_range(0..5) {
                0 => AlgebraElement::h(home),
                1 => AlgebraElement::z(home),
                2 => AlgebraElement::psi_plus(home),
                3 => AlgebraElement::psi_minus(home),
                _ => AlgebraElement::exponential(home, coeff(rng), coeff(rng)),
            };
            term = term.multiply(&factor).expect("same home");
        }
        out = out.add(&term).expect("same home");
    }
    out
}

/// The homogeneous component of `x` of the given parity.
pub fn homogeneous_part(x: &AlgebraElement, parity: u8) -> AlgebraElement {
    let mut out = AlgebraElement::zero(x.home());
    for (m, c) in x.terms() {
        if m.parity() == parity {
            out.push(*m, c);
        }
    }
    out
}

/// Generators, unit and `n_random` random elements, all in `home`.
pub fn default_probes<R: Rng + ?Sized>(
    rng: &mut R,
    home: Home,
    n_random: usize,
) -> Vec<AlgebraElement> {
    let mut probes: Vec<AlgebraElement> = AlgebraElement::generators(home).into();
    probes.push(AlgebraElement::one(home));
    probes.extend((0..n_random).map(|_| random_element(rng, home)));
    probes
}

/// All generator pairs, unit pairs and `n_random` random homogeneous pairs.
pub fn default_pairs<R: Rng + ?Sized>(
    rng: &mut R,
    home: Home,
    n_random: usize,
) -> Vec<(AlgebraElement, AlgebraElement)> {
    let mut gens: Vec<AlgebraElement> = AlgebraElement::generators(home).into();
    gens.push(AlgebraElement::one(home));
    let mut pairs = Vec::new();
    for x in &gens {
        for y in &gens {
            pairs.push((x.clone(), y.clone()));
        }
    }
    for _ in 0..n_random {
        let px = rng.random_range(0..2u8);
        let py = rng.random_range(0..2u8);
        pairs.push((
            homogeneous_part(&random_element(rng, home), px),
            homogeneous_part(&random_element(rng, home), py),
        ));
    }
    pairs
}

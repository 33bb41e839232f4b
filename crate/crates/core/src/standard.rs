//! The uncoloured Hopf superalgebra structure of `U_{q,s}(gl(1/1))` on the
//! base copy:
//!
//! ```text
//! Δ(H) = H⊗1 + 1⊗H      Δ(Z) = Z⊗1 + 1⊗Z
//! Δ(ψ±) = ψ±⊗s^{∓Z/2}q^Z + s^{±Z/2}⊗ψ±
//! S(H) = −H  S(Z) = −Z  S(ψ±) = −q^{−Z}ψ±
//! ```
//!
//! Kept separate from the coloured maps so the two can be compared.

use crate::coefficients::{ParamPoint, C64, ONE, ZERO};
use crate::error::Result;
use crate::hopf::{counit_monomial, AntipodeRule, CoproductRule};
use crate::pbw::{AlgebraElement, Home, TensorElement};

pub fn coproduct(point: ParamPoint, x: &AlgebraElement) -> Result<TensorElement> {
    let home = Home::base(point);
    let one = AlgebraElement::one(home);
    let pair = |a: &AlgebraElement, b: &AlgebraElement| TensorElement::pure(&[a, b]);
    let primitive = |g: AlgebraElement| pair(&g, &one).add(&pair(&one, &g)).expect("same homes");
    let half = C64::new(0.5, 0.0);
    let plus = pair(
        &AlgebraElement::psi_plus(home),
        &AlgebraElement::exponential(home, ONE, -half),
    )
    .add(&pair(
        &AlgebraElement::exponential(home, ZERO, half),
        &AlgebraElement::psi_plus(home),
    ))?;
    let minus = pair(
        &AlgebraElement::psi_minus(home),
        &AlgebraElement::exponential(home, ONE, half),
    )
    .add(&pair(
        &AlgebraElement::exponential(home, ZERO, -half),
        &AlgebraElement::psi_minus(home),
    ))?;
    let rule = CoproductRule {
        source: home,
        h: primitive(AlgebraElement::h(home)),
        z: primitive(AlgebraElement::z(home)),
        plus,
        minus,
        exponential: Box::new(move |alpha, beta| {
            let e = AlgebraElement::exponential(home, alpha, beta);
            pair(&e, &e)
        }),
    };
    rule.apply(x)
}

pub fn counit(x: &AlgebraElement) -> C64 {
    x.terms().map(|(m, c)| c * counit_monomial(m)).sum()
}

pub fn antipode(point: ParamPoint, x: &AlgebraElement) -> Result<AlgebraElement> {
    let home = Home::base(point);
    let tail = AlgebraElement::exponential(home, -ONE, ZERO);
    let rule = AntipodeRule {
        source: home,
        target: home,
        h: AlgebraElement::h(home).scale(-ONE),
        z: AlgebraElement::z(home).scale(-ONE),
        plus: tail.multiply(&AlgebraElement::psi_plus(home))?.scale(-ONE),
        minus: tail.multiply(&AlgebraElement::psi_minus(home))?.scale(-ONE),
        exponential: Box::new(move |alpha, beta| AlgebraElement::exponential(home, -alpha, -beta)),
    };
    rule.apply(x)
}

//! The two-dimensional representation, the coloured R-matrix and the
//! matrix-level quasitriangularity and Yang-Baxter checks.
//!
//! `D(Z) = I`, `D(H) = diag(1, −1)`, `D(ψ⁺) = E₁₂`, `D(ψ⁻) = E₂₁`, with `e₁`
//! even and `e₂` odd. Tensor products act with the Koszul rule
//!
//! ```text
//! (a₁⊗…⊗aₙ)(v₁⊗…⊗vₙ) = (−1)^{Σ_k deg a_k · Σ_{j<k} deg v_j} a₁v₁⊗…⊗aₙvₙ
//! ```
//!
//! so that [`rep_tensor`] is an algebra map from the graded tensor power.

use nalgebra::DMatrix;

use crate::coefficients::{copy_norm, Colour, ParamPoint, C64, ONE};
use crate::colour::transport;
use crate::error::{AlgebraError, Result};
use crate::hopf::ColouredMapContext;
use crate::pbw::{AlgebraElement, Home, Monomial, SlotMap, TensorElement, TwistConvention};
use crate::report::ResidualReport;

pub type CMatrix = DMatrix<C64>;

/// A dense complex matrix over a parity-labelled basis.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedMatrix {
    pub entries: CMatrix,
    pub parities: Vec<u8>,
}

impl GradedMatrix {
    /// Wraps a `2^n × 2^n` matrix with the tensor-power parities.
    pub fn new(entries: CMatrix) -> Self {
        let dim = entries.nrows();
        assert!(dim.is_power_of_two() && entries.ncols() == dim);
        let slots = dim.trailing_zeros() as usize;
        Self {
            entries,
            parities: basis_parities(slots),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(CMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn mul(&self, other: &GradedMatrix) -> GradedMatrix {
        GradedMatrix::new(&self.entries * &other.entries)
    }

    /// `Some(p)` when every nonzero entry maps parity `j` to `j + p`.
    pub fn parity(&self) -> Option<u8> {
        let mut found: Option<u8> = None;
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                if self.entries[(i, j)].norm() > 0.0 {
                    let p = (self.parities[i] + self.parities[j]) % 2;
                    match found {
                        None => found = Some(p),
                        Some(q) if q != p => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(found.unwrap_or(0))
    }
}

/// Parities of the product basis of `slots` two-dimensional factors,
/// most significant slot first.
pub fn basis_parities(slots: usize) -> Vec<u8> {
    (0..1usize << slots)
        .map(|i| (i.count_ones() % 2) as u8)
        .collect()
}

/// Frobenius norm of `lhs − rhs` over `max(1, ‖lhs‖)`.
pub fn frobenius_residual(lhs: &CMatrix, rhs: &CMatrix) -> f64 {
    (lhs - rhs).norm() / lhs.norm().max(1.0)
}

/// `D(m)` for a monomial of the copy `home`.
pub fn rep_monomial(m: &Monomial, home: &Home) -> CMatrix {
    let scalar = home.point().exponential_at(m.alpha, m.beta, ONE);
    let h_sign = if m.h_deg.is_multiple_of(2) { ONE } else { -ONE };
    let mut out = CMatrix::zeros(2, 2);
    match (m.plus, m.minus) {
        (false, false) => {
            out[(0, 0)] = scalar;
            out[(1, 1)] = scalar * h_sign;
        }
        (true, false) => out[(0, 1)] = scalar,
        (false, true) => out[(1, 0)] = scalar * h_sign,
        (true, true) => out[(0, 0)] = scalar,
    }
    out
}

/// The two-dimensional representation of an element of any copy.
pub fn rep(x: &AlgebraElement) -> GradedMatrix {
    let home = x.home();
    let mut out = CMatrix::zeros(2, 2);
    for (m, c) in x.terms() {
        out += rep_monomial(m, &home) * c;
    }
    GradedMatrix::new(out)
}

/// Kronecker product of homogeneous factors with the Koszul column signs.
pub fn graded_kron(factors: &[(&CMatrix, u8)]) -> CMatrix {
    let mut out = CMatrix::from_element(1, 1, ONE);
    for (f, _) in factors {
        out = out.kronecker(f);
    }
    let n = factors.len();
    let dim = out.ncols();
    for col in 0..dim {
        let mut exponent = 0u32;
        let mut seen = 0u32;
        for (k, (_, parity)) in factors.iter().enumerate() {
            exponent += *parity as u32 * seen;
            seen += ((col >> (n - 1 - k)) & 1) as u32;
        }
        if exponent % 2 == 1 {
            out.column_mut(col).neg_mut();
        }
    }
    out
}

/// `2^n`-dimensional representation of an order-`n` tensor.
pub fn rep_tensor(u: &TensorElement) -> GradedMatrix {
    let n = u.order();
    let dim = 1usize << n;
    let mut out = CMatrix::zeros(dim, dim);
    for (key, c) in u.terms() {
        let mats: Vec<CMatrix> = key
            .iter()
            .zip(u.homes())
            .map(|(m, h)| rep_monomial(m, h))
            .collect();
        let factors: Vec<(&CMatrix, u8)> =
            mats.iter().zip(key).map(|(a, m)| (a, m.parity())).collect();
        out += graded_kron(&factors) * c;
    }
    GradedMatrix::new(out)
}

/// Entrywise exponential of a diagonal matrix.
pub fn exp_diagonal(m: &GradedMatrix) -> Result<GradedMatrix> {
    let dim = m.dim();
    let mut out = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            if i != j && m.entries[(i, j)].norm() > 0.0 {
                return Err(AlgebraError::NotFactorised(
                    "exponent is not diagonal".to_string(),
                ));
            }
        }
        out[(i, i)] = m.entries[(i, i)].exp();
    }
    Ok(GradedMatrix::new(out))
}

/// The coloured universal R-matrix
/// `q^{(μH⊗Z + λZ⊗H)/2} s^{(μH⊗Z − λZ⊗H)/2} {1⊗1 − c·(s^{−λZ/2}ψ⁺)⊗(s^{−μZ/2}q^{−μZ}ψ⁻)}`
/// with `c = (q² − 1)a^λa^μ`, held as an exponent and a bracket in the
/// graded tensor square of the copies `λ` and `μ`.
#[derive(Debug, Clone)]
pub struct UniversalR {
    pub point: ParamPoint,
    pub lambda: Colour,
    pub mu: Colour,
    /// Exponent of the group-like prefactor (a combination of `H⊗Z`, `Z⊗H`).
    pub exponent: TensorElement,
    pub bracket: TensorElement,
    pub coefficient: C64,
}

impl UniversalR {
    pub fn coloured(point: ParamPoint, lambda: Colour, mu: Colour) -> Result<Self> {
        let left = Home::copy(point, lambda);
        let right = Home::copy(point, mu);
        point.anticommutator_scale(lambda.value())?;
        point.anticommutator_scale(mu.value())?;
        let (lam, m) = (lambda.value(), mu.value());
        let half = C64::new(0.5, 0.0);
        let (lq, ls) = (point.log_q(), point.log_s());
        let hz = TensorElement::pure(&[&AlgebraElement::h(left), &AlgebraElement::z(right)]);
        let zh = TensorElement::pure(&[&AlgebraElement::z(left), &AlgebraElement::h(right)]);
        let exponent = hz
            .scale(half * m * (lq + ls))
            .add(&zh.scale(half * lam * (lq - ls)))?;

        let q2_minus_one = point.q_pow(C64::new(2.0, 0.0)) - ONE;
        let coefficient =
            q2_minus_one * copy_norm(&point, ONE, lambda)? * copy_norm(&point, ONE, mu)?;
        let odd_left = AlgebraElement::monomial(
            left,
            Monomial {
                beta: -half * lam,
                ..Monomial::psi_plus()
            },
            ONE,
        );
        let odd_right = AlgebraElement::monomial(
            right,
            Monomial {
                alpha: -m,
                beta: -half * m,
                ..Monomial::psi_minus()
            },
            ONE,
        );
        let bracket = TensorElement::one(vec![left, right])
            .sub(&TensorElement::pure(&[&odd_left, &odd_right]).scale(coefficient))?;
        Ok(Self {
            point,
            lambda,
            mu,
            exponent,
            bracket,
            coefficient,
        })
    }

    /// `s^{−λZ/2}ψ⁺` in the copy `λ`.
    pub fn odd_left(&self) -> AlgebraElement {
        AlgebraElement::monomial(
            Home::copy(self.point, self.lambda),
            Monomial {
                beta: -0.5 * self.lambda.value(),
                ..Monomial::psi_plus()
            },
            ONE,
        )
    }

    /// `s^{−μZ/2}q^{−μZ}ψ⁻` in the copy `μ`.
    pub fn odd_right(&self) -> AlgebraElement {
        AlgebraElement::monomial(
            Home::copy(self.point, self.mu),
            Monomial {
                alpha: -self.mu.value(),
                beta: -0.5 * self.mu.value(),
                ..Monomial::psi_minus()
            },
            ONE,
        )
    }

    /// Applies slot maps (algebra maps, even) to exponent and bracket and
    /// returns the represented product.
    pub fn apply_and_represent(&self, maps: &mut [&mut SlotMap<'_>]) -> Result<GradedMatrix> {
        let exponent = self.exponent.apply_slotwise(maps)?;
        let bracket = self.bracket.apply_slotwise(maps)?;
        Ok(exp_diagonal(&rep_tensor(&exponent))?.mul(&rep_tensor(&bracket)))
    }

    pub fn factorise(&self) -> Result<RFactorisation> {
        Ok(RFactorisation {
            diagonal_factor: exp_diagonal(&rep_tensor(&self.exponent))?,
            odd_left: rep(&self.odd_left()),
            odd_right: rep(&self.odd_right()),
            coefficient: self.coefficient,
        })
    }
}

/// `R = diagonal_factor · (1 − coefficient · odd_left ⊗ odd_right)` in the
/// representation.
#[derive(Debug, Clone, PartialEq)]
pub struct RFactorisation {
    pub diagonal_factor: GradedMatrix,
    pub odd_left: GradedMatrix,
    pub odd_right: GradedMatrix,
    pub coefficient: C64,
}

/// One homogeneous term `coeff · left ⊗ right` of a 4×4 operator.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousPair {
    pub coeff: C64,
    pub left: CMatrix,
    pub right: CMatrix,
    pub parity: u8,
}

impl RFactorisation {
    /// The nilpotent part `odd_left ⊗ odd_right` as a 4×4 matrix.
    pub fn nilpotent(&self) -> CMatrix {
        graded_kron(&[(&self.odd_left.entries, 1), (&self.odd_right.entries, 1)])
    }

    pub fn matrix(&self) -> GradedMatrix {
        let bracket = CMatrix::identity(4, 4) - self.nilpotent() * self.coefficient;
        GradedMatrix::new(&self.diagonal_factor.entries * bracket)
    }

    /// `(1 + c·T)·diag⁻¹`, using `T² = 0`.
    pub fn closed_form_inverse(&self) -> GradedMatrix {
        let bracket = CMatrix::identity(4, 4) + self.nilpotent() * self.coefficient;
        let inv_diag =
            CMatrix::from_diagonal(&self.diagonal_factor.entries.diagonal().map(|d| d.inv()));
        GradedMatrix::new(bracket * inv_diag)
    }

    /// The same factorisation with the odd coefficient scaled.
    pub fn perturbed(&self, factor: f64) -> Self {
        Self {
            coefficient: self.coefficient * factor,
            ..self.clone()
        }
    }

    /// `R` as a sum of homogeneous pairs: `Σ d_ij P_i⊗P_j − c Σ d_ij P_iA⊗P_jB`.
    pub fn pair_sum(&self) -> Result<Vec<HomogeneousPair>> {
        if self.odd_left.parity() != Some(1) || self.odd_right.parity() != Some(1) {
            return Err(AlgebraError::NotFactorised(
                "odd factors are not odd operators".to_string(),
            ));
        }
        let projector = |i: usize| {
            let mut p = CMatrix::zeros(2, 2);
            p[(i, i)] = ONE;
            p
        };
        let mut pairs = Vec::with_capacity(8);
        for i in 0..2 {
            for j in 0..2 {
                let d = self.diagonal_factor.entries[(2 * i + j, 2 * i + j)];
                pairs.push(HomogeneousPair {
                    coeff: d,
                    left: projector(i),
                    right: projector(j),
                    parity: 0,
                });
                pairs.push(HomogeneousPair {
                    coeff: -d * self.coefficient,
                    left: projector(i) * &self.odd_left.entries,
                    right: projector(j) * &self.odd_right.entries,
                    parity: 1,
                });
            }
        }
        Ok(pairs)
    }
}

/// `R^{λ,μ}` assembled entry by entry from the closed form, with the
/// off-diagonal entry `(q² − 1)a^λa^μ q^{−(λ+μ)/2}`.
pub fn coloured_r_closed_form(
    point: ParamPoint,
    lambda: Colour,
    mu: Colour,
) -> Result<GradedMatrix> {
    point.anticommutator_scale(lambda.value())?;
    point.anticommutator_scale(mu.value())?;
    let (l, m) = (lambda.value(), mu.value());
    let half = C64::new(0.5, 0.0);
    let q = |x: C64| point.q_pow(x);
    let s = |x: C64| point.s_pow(x);
    let mut r = CMatrix::zeros(4, 4);
    r[(0, 0)] = q(half * (l + m)) * s(half * (-l + m));
    r[(1, 1)] = q(half * (-l + m)) * s(half * (l + m));
    r[(2, 2)] = q(half * (l - m)) * s(-half * (l + m));
    r[(3, 3)] = q(-half * (l + m)) * s(half * (l - m));
    let q2_minus_one = q(C64::new(2.0, 0.0)) - ONE;
    r[(1, 2)] = q2_minus_one
        * copy_norm(&point, ONE, lambda)?
        * copy_norm(&point, ONE, mu)?
        * q(-half * (l + m));
    Ok(GradedMatrix::new(r))
}

/// `R^{λ,μ}` via the universal formula: exponential prefactor times the
/// represented bracket.
pub fn coloured_r_from_universal(
    point: ParamPoint,
    lambda: Colour,
    mu: Colour,
) -> Result<GradedMatrix> {
    Ok(UniversalR::coloured(point, lambda, mu)?
        .factorise()?
        .matrix())
}

/// Tensor slots of a two-slot operator inside the triple product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    S12,
    S13,
    S23,
}

/// 8×8 embedding of a homogeneous pair sum into the given slots.
pub fn embed(pairs: &[HomogeneousPair], slot: Slot) -> GradedMatrix {
    let id = CMatrix::identity(2, 2);
    let mut out = CMatrix::zeros(8, 8);
    for p in pairs {
        let factors: [(&CMatrix, u8); 3] = match slot {
            Slot::S12 => [(&p.left, p.parity), (&p.right, p.parity), (&id, 0)],
            Slot::S13 => [(&p.left, p.parity), (&id, 0), (&p.right, p.parity)],
            Slot::S23 => [(&id, 0), (&p.left, p.parity), (&p.right, p.parity)],
        };
        out += graded_kron(&factors) * p.coeff;
    }
    GradedMatrix::new(out)
}

/// Normalised residual of `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂` for the factorisations of
/// `R^{λ,μ}`, `R^{λ,ν}` and `R^{μ,ν}`.
pub fn ybe_residual(
    r_lm: &RFactorisation,
    r_ln: &RFactorisation,
    r_mn: &RFactorisation,
) -> Result<f64> {
    let r12 = embed(&r_lm.pair_sum()?, Slot::S12).entries;
    let r13 = embed(&r_ln.pair_sum()?, Slot::S13).entries;
    let r23 = embed(&r_mn.pair_sum()?, Slot::S23).entries;
    let lhs = &r12 * &r13 * &r23;
    let rhs = &r23 * &r13 * &r12;
    Ok(frobenius_residual(&lhs, &rhs))
}

fn factorised(point: ParamPoint, a: Colour, b: Colour) -> Result<RFactorisation> {
    UniversalR::coloured(point, a, b)?.factorise()
}

/// Coloured graded Yang-Baxter residual at one point.
pub fn check_coloured_graded_ybe(
    point: ParamPoint,
    lambda: Colour,
    mu: Colour,
    nu: Colour,
) -> Result<f64> {
    ybe_residual(
        &factorised(point, lambda, mu)?,
        &factorised(point, lambda, nu)?,
        &factorised(point, mu, nu)?,
    )
}

/// The YBE residual with the odd coefficient of `R^{λ,μ}` scaled by
/// `1 + perturbation`, which moves entry (2,3) of that matrix alone.
pub fn check_perturbed_ybe(
    point: ParamPoint,
    lambda: Colour,
    mu: Colour,
    nu: Colour,
    perturbation: f64,
) -> Result<f64> {
    ybe_residual(
        &factorised(point, lambda, mu)?.perturbed(1.0 + perturbation),
        &factorised(point, lambda, nu)?,
        &factorised(point, mu, nu)?,
    )
}

/// Numeric inverse against the nilpotent closed-form inverse.
pub fn check_inverse(point: ParamPoint, lambda: Colour, mu: Colour) -> Result<f64> {
    let f = factorised(point, lambda, mu)?;
    let numeric = f
        .matrix()
        .entries
        .try_inverse()
        .ok_or_else(|| AlgebraError::NotFactorised("R is singular".to_string()))?;
    Ok(frobenius_residual(
        &numeric,
        &f.closed_form_inverse().entries,
    ))
}

/// Residual of `τ∘Δ^{μ,λ}_ν(a) = R^{λ,μ} Δ^{λ,μ}_ν(a) (R^{λ,μ})^{-1}`.
pub fn check_intertwiner(
    point: ParamPoint,
    lambda: Colour,
    mu: Colour,
    probe: &AlgebraElement,
) -> Result<f64> {
    check_intertwiner_with(point, lambda, mu, probe, TwistConvention::Graded)
}

pub fn check_intertwiner_with(
    point: ParamPoint,
    lambda: Colour,
    mu: Colour,
    probe: &AlgebraElement,
    convention: TwistConvention,
) -> Result<f64> {
    let nu = Colour::new(probe.home().colour())?;
    let swapped = ColouredMapContext::new(point, mu, lambda, nu)?.coproduct(probe)?;
    let lhs = rep_tensor(&swapped.graded_twist_with(convention)?).entries;
    let straight = ColouredMapContext::new(point, lambda, mu, nu)?.coproduct(probe)?;
    let f = factorised(point, lambda, mu)?;
    let rhs = &f.matrix().entries * rep_tensor(&straight).entries * f.closed_form_inverse().entries;
    Ok(frobenius_residual(&lhs, &rhs))
}

/// Residuals of
/// `(Δ^{α,β}_λ⊗σ^γ_μ)(R^{λ,μ}) = R^{α,γ}₁₃R^{β,γ}₂₃` and
/// `(σ^α_λ⊗Δ^{β,γ}_μ)(R^{λ,μ}) = R^{α,γ}₁₃R^{α,β}₁₂`.
pub fn check_hexagons(
    point: ParamPoint,
    alpha: Colour,
    beta: Colour,
    gamma: Colour,
    lambda: Colour,
    mu: Colour,
) -> Result<(f64, f64)> {
    let r = UniversalR::coloured(point, lambda, mu)?;
    let sigma = |to: Colour| {
        move |x: &AlgebraElement| -> Result<TensorElement> {
            Ok(TensorElement::from_element(&transport(to, x)?))
        }
    };

    let split_left = ColouredMapContext::new(point, alpha, beta, lambda)?;
    let lhs12 = r.apply_and_represent(&mut [
        &mut |x: &AlgebraElement| split_left.coproduct(x),
        &mut sigma(gamma),
    ])?;
    let r_ag = embed(&factorised(point, alpha, gamma)?.pair_sum()?, Slot::S13);
    let r_bg = embed(&factorised(point, beta, gamma)?.pair_sum()?, Slot::S23);
    let first = frobenius_residual(&lhs12.entries, &r_ag.mul(&r_bg).entries);

    let split_right = ColouredMapContext::new(point, beta, gamma, mu)?;
    let lhs13 = r.apply_and_represent(&mut [&mut sigma(alpha), &mut |x: &AlgebraElement| {
        split_right.coproduct(x)
    }])?;
    let r_ab = embed(&factorised(point, alpha, beta)?.pair_sum()?, Slot::S12);
    let second = frobenius_residual(&lhs13.entries, &r_ag.mul(&r_ab).entries);
    Ok((first, second))
}

/// The defining relations in the representation at `home`, and the
/// anticommutator relation pushed through `Δ^{λ,μ}_ν` and represented on
/// `V⊗V`.
pub fn check_relations(home: Home, lambda: Colour, mu: Colour) -> Result<ResidualReport> {
    let mut report = ResidualReport::new();
    let [h, z, plus, minus] = AlgebraElement::generators(home).map(|g| rep(&g).entries);
    let two = C64::new(2.0, 0.0);
    let zero = CMatrix::zeros(2, 2);
    report.record(
        "relations: [H, psi+]",
        frobenius_residual(&(&h * &plus - &plus * &h), &(&plus * two)),
    );
    report.record(
        "relations: [H, psi-]",
        frobenius_residual(&(&h * &minus - &minus * &h), &(&minus * -two)),
    );
    for g in [&h, &plus, &minus] {
        report.record(
            "relations: Z central",
            frobenius_residual(&(&z * g - g * &z), &zero),
        );
    }
    report.record(
        "relations: nilpotency",
        frobenius_residual(&(&plus * &plus), &zero),
    );
    report.record(
        "relations: nilpotency",
        frobenius_residual(&(&minus * &minus), &zero),
    );
    let k = AlgebraElement::anticommutator_value(home)?;
    report.record(
        "relations: anticommutator",
        frobenius_residual(&(&plus * &minus + &minus * &plus), &rep(&k).entries),
    );

    let map = ColouredMapContext::new(home.point(), lambda, mu, Colour::new(home.colour())?)?;
    let [_, _, p, m] = AlgebraElement::generators(home);
    let (dp, dm) = (
        rep_tensor(&map.coproduct(&p)?).entries,
        rep_tensor(&map.coproduct(&m)?).entries,
    );
    let dk = rep_tensor(&map.coproduct(&k)?).entries;
    report.record(
        "relations: represented coproduct anticommutator",
        frobenius_residual(&(&dp * &dm + &dm * &dp), &dk),
    );
    Ok(report)
}

/// Largest relative entrywise difference, each entry normalised by
/// `max(|a|, |b|)` (entries that are both zero are skipped).
pub fn max_relative_entry_difference(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| {
            let scale = x.norm().max(y.norm());
            if scale == 0.0 {
                0.0
            } else {
                (x - y).norm() / scale
            }
        })
        .fold(0.0, f64::max)
}

/// Entrywise agreement of the closed form and the universal route.
pub fn check_cross_validation(point: ParamPoint, lambda: Colour, mu: Colour) -> Result<f64> {
    let closed = coloured_r_closed_form(point, lambda, mu)?;
    let universal = coloured_r_from_universal(point, lambda, mu)?;
    Ok(max_relative_entry_difference(
        &closed.entries,
        &universal.entries,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::ZERO;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn unit(i: usize, j: usize) -> CMatrix {
        let mut m = CMatrix::zeros(2, 2);
        m[(i, j)] = ONE;
        m
    }

    #[test]
    fn generators_and_exponentials() {
        let p = ParamPoint::new(c(1.5, 0.5), c(0.7, 0.2)).unwrap();
        let home = Home::base(p);
        let [h, z, plus, minus] = AlgebraElement::generators(home).map(|g| rep(&g).entries);
        assert_eq!(h, CMatrix::from_diagonal(&nalgebra::dvector![ONE, -ONE]));
        assert_eq!(z, CMatrix::identity(2, 2));
        assert_eq!((plus, minus), (unit(0, 1), unit(1, 0)));
        let (alpha, beta) = (c(0.3, -0.2), c(1.1, 0.4));
        let k = rep(&AlgebraElement::exponential(home, alpha, beta)).entries;
        let expected = (alpha * p.log_q() + beta * p.log_s()).exp();
        assert!((k[(0, 0)] - expected).norm() < 1e-15 && (k[(1, 1)] - expected).norm() < 1e-15);
        assert_eq!(k[(0, 1)], ZERO);
    }

    #[test]
    fn graded_matrix_parity() {
        assert_eq!(GradedMatrix::new(unit(0, 1)).parity(), Some(1));
        assert_eq!(GradedMatrix::identity(4).parity(), Some(0));
        let mixed = GradedMatrix::new(CMatrix::from_element(2, 2, ONE));
        assert_eq!(mixed.parity(), None);
        assert_eq!(basis_parities(2), vec![0, 1, 1, 0]);
    }

    #[test]
    fn koszul_sign_in_graded_kron() {
        let (a, b) = (unit(0, 1), unit(1, 0));
        let k = graded_kron(&[(&a, 1), (&b, 1)]);
        // (E₁₂ ⊗ E₂₁)(e₂⊗e₁) = (−1)^{1·1} e₁⊗e₂
        assert_eq!(k[(1, 2)], -ONE);
        assert_eq!(k.iter().filter(|x| x.norm() > 0.0).count(), 1);
        let even = graded_kron(&[(&a, 1), (&CMatrix::identity(2, 2), 0)]);
        assert_eq!(even, a.kronecker(&CMatrix::identity(2, 2)));
    }

    #[test]
    fn exp_diagonal_rejects_off_diagonal() {
        let d = GradedMatrix::new(CMatrix::from_diagonal(&nalgebra::dvector![
            c(0.0, std::f64::consts::PI),
            ZERO
        ]));
        let e = exp_diagonal(&d).unwrap().entries;
        assert!((e[(0, 0)] + ONE).norm() < 1e-15 && e[(1, 1)] == ONE);
        assert!(exp_diagonal(&GradedMatrix::new(unit(0, 1))).is_err());
    }

    #[test]
    fn closed_form_oracles() {
        let p = ParamPoint::new(c(2.0, 0.0), ONE).unwrap();
        let r = coloured_r_closed_form(p, Colour::IDENTITY, Colour::IDENTITY)
            .unwrap()
            .entries;
        let mut expected =
            CMatrix::from_diagonal(&nalgebra::dvector![c(2.0, 0.0), ONE, ONE, c(0.5, 0.0)]);
        expected[(1, 2)] = c(1.5, 0.0);
        assert!(frobenius_residual(&r, &expected) < 1e-15);

        let p = ParamPoint::new(c(2.0, 0.0), c(3.0, 0.0)).unwrap();
        let r = coloured_r_closed_form(p, Colour::IDENTITY, Colour::IDENTITY)
            .unwrap()
            .entries;
        let diag = [2.0, 3.0, 1.0 / 3.0, 0.5];
        for (i, d) in diag.into_iter().enumerate() {
            assert!((r[(i, i)] - c(d, 0.0)).norm() < 1e-14, "entry {i}");
        }
    }

    #[test]
    fn inverse_and_perturbation() {
        let p = ParamPoint::new(c(1.2, 0.7), c(0.9, -0.3)).unwrap();
        let (l, m) = (
            Colour::new(c(0.8, 0.5)).unwrap(),
            Colour::new(c(-1.1, 0.2)).unwrap(),
        );
        let f = UniversalR::coloured(p, l, m).unwrap().factorise().unwrap();
        let product = &f.matrix().entries * &f.closed_form_inverse().entries;
        assert!(frobenius_residual(&product, &CMatrix::identity(4, 4)) < 1e-14);
        let moved = f.perturbed(1.01).matrix().entries - f.matrix().entries;
        let nonzero: Vec<_> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| moved[(i, j)].norm() > 0.0)
            .collect();
        assert_eq!(nonzero, vec![(1, 2)]);
    }

    #[test]
    fn slot_embeddings_of_even_pairs() {
        let d = CMatrix::from_diagonal(&nalgebra::dvector![c(2.0, 0.0), c(0.5, 1.0)]);
        let pair = HomogeneousPair {
            coeff: c(3.0, 0.0),
            left: d.clone(),
            right: d.clone(),
            parity: 0,
        };
        let i2 = CMatrix::identity(2, 2);
        let cases = [
            (Slot::S12, d.kronecker(&d).kronecker(&i2)),
            (Slot::S13, d.kronecker(&i2).kronecker(&d)),
            (Slot::S23, i2.kronecker(&d).kronecker(&d)),
        ];
        for (slot, expected) in cases {
            let e = embed(std::slice::from_ref(&pair), slot).entries;
            assert!(frobenius_residual(&e, &(expected * c(3.0, 0.0))) < 1e-15);
        }
    }
}
